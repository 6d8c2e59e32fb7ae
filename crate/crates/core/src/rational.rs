//! Scalar field: arbitrary-precision exact rationals.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::BigRational;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

/// Canonical `num/den` form, integer values printed without denominator.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

pub fn pow2(exp: i64) -> Rat {
    let two = rat_int(2);
    if exp >= 0 {
        num::traits::Pow::pow(two, exp as u64 as u32)
    } else {
        num::traits::Pow::pow(rat(1, 2), (-exp) as u32)
    }
}

pub fn sign_pow(exp: u64) -> Rat {
    if exp % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for s in ["0", "7", "-3", "5/2", "-11/4"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pow2_negative() {
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(pow2(3), rat_int(8));
    }
}
