//! Named verification suites behind a trait-object registry.  Each suite runs
//! one family of identities over a desk-scale parameter grid and returns a
//! deterministic report; the `verify` command dispatches on the suite name.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::{alternate_borel_euler, euler_closed, euler_glmn, theta, weyl_denominator_identities};
use crate::laurent::{uv_to_xy, LaurentPoly};
use crate::onevar::{
    f_poly, g_poly, phi_poly, psi_poly, even_phi_poly, even_psi_poly, recurrence_coeffs, UniPoly,
};
use crate::partition::{
    admissible_nus, exponent_data_canonical, hook_indices, partitions_in_hook, region_counts,
    special_counts, HookContext, Partition,
};
use crate::rational::{format_rat, pow2, rat, rat_int, sign_pow, Rat};
use crate::report::{CaseRecord, SuiteReport};
use crate::superjacobi::{
    classical_jacobi, factorization_rhs, jt_determinant, pieri_delta_sides, pieri_sides,
    specialized_sj, stability_reduction, super_jacobi, JtMode,
};
use crate::superschur::{super_schur_jt, super_schur_weyl};
use crate::Family;

/// Grid parameters for one suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub m: usize,
    pub n: usize,
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn ctx(&self) -> HookContext {
        HookContext::new(self.m, self.n)
    }
}

/// Seeded rational (p,q) points with small numerators and denominators;
/// points where the one-variable layer degenerates are resampled.
pub fn sample_points(seed: u64, samples: usize) -> Vec<(Rat, Rat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < samples {
        let p = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        let q = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        let regular = (0..=8).all(|l| {
            f_poly(l, &p, &q).is_ok()
                && g_poly(l, &p, &q).is_ok()
                && recurrence_coeffs(l, &p, &q).is_ok()
        });
        if regular {
            out.push((p, q));
        }
    }
    out
}

fn point_label(p: &Rat, q: &Rat) -> String {
    format!("p={}, q={}", format_rat(p), format_rat(q))
}

fn poly_detail(lhs: &LaurentPoly, rhs: &LaurentPoly) -> String {
    format!("lhs = {lhs}\nrhs = {rhs}")
}

fn eq_case(case: String, lhs: &LaurentPoly, rhs: &LaurentPoly) -> CaseRecord {
    CaseRecord::check(case, lhs == rhs, || poly_detail(lhs, rhs))
}

/// A named verification strategy.
pub trait Suite: Sync + Send {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport>;
}

fn base_report(suite: &dyn Suite, cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new(suite.name(), cfg.m, cfg.n, cfg.max_size, cfg.seed)
}

fn par_cases<T, F>(items: &[T], f: F) -> Result<Vec<CaseRecord>>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<CaseRecord>> + Sync + Send,
{
    let nested: Result<Vec<Vec<CaseRecord>>> = items.par_iter().map(&f).collect();
    Ok(nested?.into_iter().flatten().collect())
}

// ---------------------------------------------------------------------------
// Suites

/// Weyl-type formula vs Jacobi-Trudy determinant for super Schur polynomials,
/// over every admissible deformation region nu.
struct SchurSuite;

impl Suite for SchurSuite {
    fn name(&self) -> &'static str {
        "schur"
    }

    fn description(&self) -> &'static str {
        "super Schur: symmetrization formula vs Jacobi-Trudy, all admissible nu"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let lambdas = partitions_in_hook(&ctx, cfg.max_size);
        report.extend(par_cases(&lambdas, |lambda| {
            let jt = super_schur_jt(lambda, &ctx)?;
            let mut cases = Vec::new();
            for nu in admissible_nus(lambda, &ctx)? {
                let weyl = super_schur_weyl(lambda, &nu, &ctx)?;
                cases.push(eq_case(format!("lambda={lambda} nu={nu}"), &weyl, &jt));
            }
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Rectangle factorization of super Jacobi polynomials at seeded generic
/// parameter points.
struct FactorSuite;

impl Suite for FactorSuite {
    fn name(&self) -> &'static str {
        "factor"
    }

    fn description(&self) -> &'static str {
        "super Jacobi rectangle factorization at seeded (p,q)"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let points = sample_points(cfg.seed, cfg.samples);
        report.points = points.iter().map(|(p, q)| point_label(p, q)).collect();
        let lambdas: Vec<Partition> = partitions_in_hook(&ctx, cfg.max_size)
            .into_iter()
            .filter(|l| l.contains_rectangle(&ctx))
            .collect();
        report.extend(par_cases(&lambdas, |lambda| {
            let mut cases = Vec::new();
            for (p, q) in &points {
                let lhs = super_jacobi(lambda, &ctx, p, q)?;
                let rhs = factorization_rhs(lambda, &ctx, p, q)?;
                cases.push(eq_case(
                    format!("lambda={lambda} {}", point_label(p, q)),
                    &lhs,
                    &rhs,
                ));
            }
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Odd family: Euler route agreement and the specialization identity
/// `SJ(-1,-1,0) = 2^{i(lambda)-m} E_lambda`.
struct SjEulerOddSuite;

impl Suite for SjEulerOddSuite {
    fn name(&self) -> &'static str {
        "sj-euler-odd"
    }

    fn description(&self) -> &'static str {
        "osp(2m+1,2n): closed vs Serganova Euler routes and SJ specialization"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let lambdas = partitions_in_hook(&ctx, cfg.max_size);
        report.extend(par_cases(&lambdas, |lambda| {
            let glmn = euler_glmn(lambda, &ctx, Family::Odd)?;
            let closed = euler_closed(lambda, &ctx, Family::Odd)?;
            let mut cases = vec![eq_case(
                format!("routes lambda={lambda}"),
                &glmn.value,
                &closed.value,
            )];
            let sj = uv_to_xy(&specialized_sj(lambda, &ctx, Family::Odd)?);
            let (i_lam, _, _) = hook_indices(lambda, &ctx)?;
            let scaled = glmn.value.scalar_mul(&pow2(i_lam as i64 - ctx.m as i64));
            cases.push(eq_case(format!("sj lambda={lambda}"), &sj, &scaled));
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Even family: Euler route agreement and the specialization identities,
/// split on `l_m = 0` (theta-invariant case) vs `l_m > 0`.
struct SjEulerEvenSuite;

impl Suite for SjEulerEvenSuite {
    fn name(&self) -> &'static str {
        "sj-euler-even"
    }

    fn description(&self) -> &'static str {
        "osp(2m,2n): closed vs Serganova Euler routes and SJ specialization"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let lambdas = partitions_in_hook(&ctx, cfg.max_size);
        report.extend(par_cases(&lambdas, |lambda| {
            let glmn = euler_glmn(lambda, &ctx, Family::Even)?;
            let closed = euler_closed(lambda, &ctx, Family::Even)?;
            let data = exponent_data_canonical(lambda, &ctx)?;
            let l_m = *data.l.last().expect("even family needs m >= 1");
            let mut cases = Vec::new();
            if l_m == 0 {
                cases.push(eq_case(
                    format!("routes lambda={lambda}"),
                    &glmn.value,
                    &closed.value,
                ));
            } else {
                let sum = glmn.value.add(&theta(&glmn.value)?);
                cases.push(eq_case(format!("routes lambda={lambda}"), &sum, &closed.value));
            }
            let sj = uv_to_xy(&specialized_sj(lambda, &ctx, Family::Even)?);
            let expected = if l_m == 0 {
                let i_star = if data.i_lam > 0 && data.l[data.i_lam - 1] == 0 {
                    data.i_lam - 1
                } else {
                    data.i_lam
                };
                glmn.value
                    .scalar_mul(&pow2(i_star as i64 - ctx.m as i64 + 1))
            } else {
                glmn.value.add(&theta(&glmn.value)?)
            };
            cases.push(eq_case(format!("sj lambda={lambda}"), &sj, &expected));
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Pieri recurrences for the specialized polynomials, both families, with the
/// odd delta-coefficient form cross-checked against the hook-content form.
struct PieriSuite;

impl Suite for PieriSuite {
    fn name(&self) -> &'static str {
        "pieri"
    }

    fn description(&self) -> &'static str {
        "Pieri formulas for specialized super Jacobi polynomials"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let lambdas = partitions_in_hook(&ctx, cfg.max_size);
        report.extend(par_cases(&lambdas, |lambda| {
            let mut cases = Vec::new();
            for family in [Family::Odd, Family::Even] {
                let (lhs, rhs) = pieri_sides(lambda, &ctx, family)?;
                cases.push(eq_case(
                    format!("{} lambda={lambda}", family.name()),
                    &lhs,
                    &rhs,
                ));
            }
            let (lhs, rhs) = pieri_delta_sides(lambda, &ctx)?;
            cases.push(eq_case(format!("odd-delta lambda={lambda}"), &lhs, &rhs));
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Jacobi-Trudy determinants: the specialized limits for both families and
/// the generic recursion at seeded parameter points.
struct JacobiTrudySuite;

impl Suite for JacobiTrudySuite {
    fn name(&self) -> &'static str {
        "jacobi-trudy"
    }

    fn description(&self) -> &'static str {
        "Jacobi-Trudy determinant vs direct super Jacobi computation"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let points = sample_points(cfg.seed, cfg.samples);
        report.points = points.iter().map(|(p, q)| point_label(p, q)).collect();
        let lambdas: Vec<Partition> = partitions_in_hook(&ctx, cfg.max_size)
            .into_iter()
            .filter(|l| l.len() <= 3)
            .collect();
        report.extend(par_cases(&lambdas, |lambda| {
            let mut cases = Vec::new();
            for family in [Family::Odd, Family::Even] {
                let det = jt_determinant(lambda, &ctx, &JtMode::Special(family))?;
                let direct = specialized_sj(lambda, &ctx, family)?;
                cases.push(eq_case(
                    format!("{} lambda={lambda}", family.name()),
                    &det,
                    &direct,
                ));
            }
            for (p, q) in &points {
                let det = jt_determinant(lambda, &ctx, &JtMode::Generic(p.clone(), q.clone()))?;
                let direct = super_jacobi(lambda, &ctx, p, q)?;
                cases.push(eq_case(
                    format!("generic lambda={lambda} {}", point_label(p, q)),
                    &det,
                    &direct,
                ));
            }
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Alternate-Borel Euler supercharacters against the specialized super Jacobi
/// polynomials; the even scale carries the i(lambda) = m correction.
struct AlternateBorelSuite;

impl Suite for AlternateBorelSuite {
    fn name(&self) -> &'static str {
        "alternate-borel"
    }

    fn description(&self) -> &'static str {
        "maximally-isotropic Borel Euler supercharacters vs specialized SJ"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let lambdas = partitions_in_hook(&ctx, cfg.max_size);
        if cfg.m < cfg.n {
            report.push(CaseRecord::pass("skipped: alternate Borel needs m >= n"));
            return Ok(report);
        }
        report.extend(par_cases(&lambdas, |lambda| {
            let mut cases = Vec::new();
            let sj_odd = uv_to_xy(&specialized_sj(lambda, &ctx, Family::Odd)?);
            let e_odd = alternate_borel_euler(lambda, &ctx, Family::Odd)?;
            let (s, _) = region_counts(lambda, &ctx, Family::Odd)?;
            cases.push(eq_case(
                format!("odd lambda={lambda}"),
                &sj_odd,
                &e_odd.value.scalar_mul(&sign_pow(s as u64)),
            ));
            if cfg.m > cfg.n {
                let sj = uv_to_xy(&specialized_sj(lambda, &ctx, Family::Even)?);
                let e = alternate_borel_euler(lambda, &ctx, Family::Even)?;
                let (s, _) = region_counts(lambda, &ctx, Family::Even)?;
                let data = exponent_data_canonical(lambda, &ctx)?;
                let expected = if lambda.part(ctx.m) <= ctx.n {
                    let i_star = if data.i_lam > 0 && data.l[data.i_lam - 1] == 0 {
                        data.i_lam - 1
                    } else {
                        data.i_lam
                    };
                    let bump = if data.i_lam == ctx.m { 1 } else { 0 };
                    e.value.scalar_mul(
                        &(sign_pow(s as u64) * pow2(i_star as i64 - data.i_lam as i64 + bump)),
                    )
                } else {
                    e.value.add(&theta(&e.value)?).scalar_mul(&sign_pow(s as u64))
                };
                cases.push(eq_case(format!("even lambda={lambda}"), &sj, &expected));
            }
            Ok(cases)
        })?);
        Ok(report)
    }
}

/// Structural identities: Weyl denominator identities, trivial-representation
/// powers of 2, the one-variable three-term recurrence, the Chebyshev-type
/// specializations, and the n=0 / stability reductions.
struct IdentitiesSuite;

impl Suite for IdentitiesSuite {
    fn name(&self) -> &'static str {
        "identities"
    }

    fn description(&self) -> &'static str {
        "denominator identities, trivial values, recurrences, reductions"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ctx = cfg.ctx();
        let mut report = base_report(self, cfg);
        let points = sample_points(cfg.seed, cfg.samples);
        report.points = points.iter().map(|(p, q)| point_label(p, q)).collect();

        for l in 1..=2 {
            let (full, half) = weyl_denominator_identities(l)?;
            report.push(CaseRecord::check(
                format!("weyl-denominator l={l}"),
                full && half,
                || format!("full={full} half={half}"),
            ));
        }

        let (sym, frob) = special_counts(cfg.m, cfg.n);
        let odd_trivial = euler_glmn(&Partition::empty(), &ctx, Family::Odd)?;
        report.push(CaseRecord::check(
            "trivial odd = 2^min(m,n)".to_string(),
            odd_trivial.value.as_constant() == Some(pow2(cfg.m.min(cfg.n) as i64))
                && rat_int(sym as i64) == pow2(cfg.m.min(cfg.n) as i64),
            || format!("value = {}", odd_trivial.value),
        ));
        let even_trivial = euler_glmn(&Partition::empty(), &ctx, Family::Even)?;
        report.push(CaseRecord::check(
            "trivial even = 2^min(m-1,n)".to_string(),
            even_trivial.value.as_constant() == Some(pow2((cfg.m - 1).min(cfg.n) as i64))
                && rat_int(frob as i64) == pow2((cfg.m - 1).min(cfg.n) as i64),
            || format!("value = {}", even_trivial.value),
        ));

        for (p, q) in &points {
            let mut ok = true;
            for l in 1..=8usize {
                let (a, b) = recurrence_coeffs(l, p, q)?;
                let lhs = UniPoly::z().mul(&f_poly(l, p, q)?);
                let rhs = f_poly(l + 1, p, q)?
                    .add(&f_poly(l, p, q)?.scale(&a))
                    .add(&f_poly(l - 1, p, q)?.scale(&b));
                ok &= lhs == rhs;
            }
            report.push(CaseRecord::check(
                format!("three-term f_l {}", point_label(p, q)),
                ok,
                || "recurrence mismatch".to_string(),
            ));
        }

        let mut cheb = true;
        for a in 0..=6usize {
            cheb &= phi_poly(a) == f_poly(a, &rat_int(-1), &rat_int(0))?;
            cheb &= psi_poly(a) == f_poly(a, &rat_int(1), &rat_int(-1))?;
            cheb &= even_phi_poly(a) == f_poly(a, &rat_int(0), &rat_int(0))?;
            cheb &= even_psi_poly(a) == g_poly(a, &rat_int(0), &rat_int(0))?;
        }
        report.push(CaseRecord::check(
            "phi/psi are f/g specializations".to_string(),
            cheb,
            || "specialization mismatch".to_string(),
        ));

        let (p, q) = &points[0];
        let n0 = HookContext::new(cfg.m, 0);
        let mut reduction = true;
        for lambda in partitions_in_hook(&n0, cfg.max_size.min(4)) {
            reduction &= super_jacobi(&lambda, &n0, p, q)? == classical_jacobi(&lambda, cfg.m, p, q)?;
        }
        report.push(CaseRecord::check(
            "n=0 reduction to classical Jacobi".to_string(),
            reduction,
            || "reduction mismatch".to_string(),
        ));

        if cfg.m >= 2 && cfg.n >= 1 {
            let small = HookContext::new(cfg.m - 1, cfg.n - 1);
            let mut stable = true;
            for lambda in partitions_in_hook(&small, cfg.max_size.min(3)) {
                let sj = super_jacobi(&lambda, &ctx, p, q)?;
                let (head, t_free) = stability_reduction(&sj);
                stable &= t_free && head == super_jacobi(&lambda, &small, p, q)?;
            }
            report.push(CaseRecord::check(
                "u_m = v_n = t stability".to_string(),
                stable,
                || "stability mismatch".to_string(),
            ));
        }
        Ok(report)
    }
}

// ---------------------------------------------------------------------------
// Registry

/// All concrete suites, in the order `all` runs them.
pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(SchurSuite),
        Box::new(FactorSuite),
        Box::new(SjEulerOddSuite),
        Box::new(SjEulerEvenSuite),
        Box::new(PieriSuite),
        Box::new(JacobiTrudySuite),
        Box::new(AlternateBorelSuite),
        Box::new(IdentitiesSuite),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = registry().iter().map(|s| s.name()).collect();
    names.push("all");
    names
}

/// Run the named suite (or every suite for `all`); reports come back in
/// registry order.
pub fn run_named(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return registry().iter().map(|s| s.run(cfg)).collect();
    }
    match registry().into_iter().find(|s| s.name() == name) {
        Some(suite) => Ok(vec![suite.run(cfg)?]),
        None => Err(Error::InvalidInput(format!(
            "unknown suite '{name}'; known: {}",
            suite_names().join(", ")
        ))),
    }
}
