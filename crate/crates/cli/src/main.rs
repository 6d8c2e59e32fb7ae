//! Command-line front end: compute super Schur polynomials, super Jacobi
//! polynomials at k = -1, and Euler supercharacters, or run named
//! verification suites over desk-scale grids.
//!
//! Exit codes: 0 success, 1 identity failure in `verify`, 2 usage error,
//! 3 internal invariant violation (exact division failed).
//! `SJLAB_FORMAT` in {text, json} selects the output form (default text).

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use sjlab_core::error::Error;
use sjlab_core::euler::{alternate_borel_euler, euler_closed, euler_glmn, EulerChar};
use sjlab_core::laurent::LaurentPoly;
use sjlab_core::partition::{HookContext, Partition};
use sjlab_core::rational::parse_rat;
use sjlab_core::suites::{run_named, suite_names, SuiteConfig};
use sjlab_core::superjacobi::{specialized_sj, super_jacobi};
use sjlab_core::superschur::{super_schur_jt, super_schur_weyl};
use sjlab_core::Family;

#[derive(Parser)]
#[command(
    name = "sjlab",
    version,
    about = "Exact super Schur / super Jacobi polynomials and orthosymplectic Euler supercharacters"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Odd,
    Even,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Odd => Family::Odd,
            FamilyArg::Even => Family::Even,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    /// Serganova's formula with the distinguished gl(m,n) parabolic.
    Serganova,
    /// The closed S_m x S_n symmetrization formula.
    Closed,
    /// The maximally-isotropic Borel with the osp block parabolic.
    Alternate,
}

#[derive(Subcommand)]
enum Cmd {
    /// Super Schur polynomial SP_lambda(x, y).
    Sschur {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Partition as comma-separated parts; empty string for the empty one.
        #[arg(long, default_value = "")]
        lambda: String,
        /// Optional deformation region nu: use the symmetrization formula
        /// instead of the Jacobi-Trudy determinant.
        #[arg(long)]
        nu: Option<String>,
    },
    /// Super Jacobi polynomial SJ_lambda(u, v; -1, p, q).
    Sjacobi {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        /// Specialized limit: odd = (p,q) -> (-1,0), even = (p,q) -> (0,0).
        #[arg(long, value_enum)]
        special: Option<FamilyArg>,
        /// Rational parameter p (requires --q; mutually exclusive with --special).
        #[arg(long)]
        p: Option<String>,
        /// Rational parameter q.
        #[arg(long)]
        q: Option<String>,
    },
    /// Euler supercharacter E_lambda of osp(2m+1,2n) or osp(2m,2n).
    Euler {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Serganova)]
        route: RouteArg,
    },
    /// Run a named verification suite over a parameter grid.
    Verify {
        /// Suite name; `all` runs every suite.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Number of seeded random (p,q) points for generic-parameter suites.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Lift the desk-scale guard (m,n <= 3, max-size <= 8).
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Clone, Copy, PartialEq)]
enum OutFormat {
    Text,
    Json,
}

fn out_format() -> Result<OutFormat, Error> {
    match std::env::var("SJLAB_FORMAT").as_deref() {
        Err(_) | Ok("text") | Ok("") => Ok(OutFormat::Text),
        Ok("json") => Ok(OutFormat::Json),
        Ok(other) => Err(Error::InvalidInput(format!(
            "SJLAB_FORMAT must be text or json, got '{other}'"
        ))),
    }
}

fn print_poly(f: &LaurentPoly, fmt: OutFormat) {
    match fmt {
        OutFormat::Text => println!("{f}"),
        OutFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&f.to_json()).expect("valid json"))
        }
    }
}

/// Prefer the u,v form when the value is inversion-symmetric.
fn print_euler(e: &EulerChar, fmt: OutFormat) {
    match &e.uv {
        Some(uv) => print_poly(uv, fmt),
        None => print_poly(&e.value, fmt),
    }
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    let fmt = out_format()?;
    match cli.cmd {
        Cmd::Sschur { m, n, lambda, nu } => {
            let ctx = HookContext::new(m, n);
            let lambda = Partition::parse(&lambda)?;
            let poly = match nu {
                Some(nu) => super_schur_weyl(&lambda, &Partition::parse(&nu)?, &ctx)?,
                None => super_schur_jt(&lambda, &ctx)?,
            };
            print_poly(&poly, fmt);
            Ok(0)
        }
        Cmd::Sjacobi { m, n, lambda, special, p, q } => {
            let ctx = HookContext::new(m, n);
            let lambda = Partition::parse(&lambda)?;
            let poly = match (special, p, q) {
                (Some(family), None, None) => specialized_sj(&lambda, &ctx, family.into())?,
                (None, Some(p), Some(q)) => {
                    super_jacobi(&lambda, &ctx, &parse_rat(&p)?, &parse_rat(&q)?)?
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "pass either --special or both --p and --q".into(),
                    ))
                }
            };
            print_poly(&poly, fmt);
            Ok(0)
        }
        Cmd::Euler { family, m, n, lambda, route } => {
            let ctx = HookContext::new(m, n);
            let lambda = Partition::parse(&lambda)?;
            let family: Family = family.into();
            let e = match route {
                RouteArg::Serganova => euler_glmn(&lambda, &ctx, family)?,
                RouteArg::Closed => euler_closed(&lambda, &ctx, family)?,
                RouteArg::Alternate => alternate_borel_euler(&lambda, &ctx, family)?,
            };
            print_euler(&e, fmt);
            Ok(0)
        }
        Cmd::Verify { suite, m, n, max_size, samples, seed, allow_large } => {
            if !allow_large && (m > 3 || n > 3 || max_size > 8) {
                return Err(Error::InvalidInput(
                    "desk-scale guard: m,n <= 3 and max-size <= 8; pass --allow-large to override"
                        .into(),
                ));
            }
            if m == 0 || n == 0 {
                return Err(Error::InvalidInput("m and n must be at least 1".into()));
            }
            if !suite_names().contains(&suite.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "unknown suite '{suite}'; known: {}",
                    suite_names().join(", ")
                )));
            }
            let cfg = SuiteConfig { m, n, max_size, samples, seed };
            let reports = run_named(&suite, &cfg)?;
            match fmt {
                OutFormat::Text => {
                    for report in &reports {
                        print!("{}", report.to_text());
                    }
                }
                OutFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&reports).expect("valid json")
                    );
                }
            }
            if reports.iter().all(|r| r.all_passed()) {
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NotDivisible { .. } | Error::SpaceMismatch => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
