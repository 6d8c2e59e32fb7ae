//! Exact computation of super Schur polynomials, super Jacobi polynomials at
//! `k = -1` and Euler supercharacters of orthosymplectic Lie superalgebras,
//! together with machine verification of the identities relating them.
//!
//! Everything is computed over arbitrary-precision rationals; identity checks
//! are exact polynomial equalities, never numerical comparisons.

pub mod error;
pub mod euler;
pub mod laurent;
pub mod onevar;
pub mod partition;
pub mod rational;
pub mod report;
pub mod suites;
pub mod superjacobi;
pub mod superschur;

pub use error::Error;
pub use laurent::{GroupElement, LaurentPoly, VarKind, VarSpace};
pub use partition::{HookContext, Partition};
pub use rational::Rat;

/// The two orthosymplectic families handled throughout the crate:
/// `Odd` is osp(2m+1,2n), `Even` is osp(2m,2n).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Odd,
    Even,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Odd => "odd",
            Family::Even => "even",
        }
    }

    /// The special parameter point (p,q) of the family.
    pub fn special_pq(self) -> (Rat, Rat) {
        match self {
            Family::Odd => (rational::rat_int(-1), rational::rat_int(0)),
            Family::Even => (rational::rat_int(0), rational::rat_int(0)),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "odd" => Ok(Family::Odd),
            "even" => Ok(Family::Even),
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}
