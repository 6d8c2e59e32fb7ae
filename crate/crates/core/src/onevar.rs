//! One-variable layer: normalised Jacobi polynomials f_l(z,p,q), their
//! companions g_k, the special polynomials phi_a, psi_a, the three-term
//! recurrence coefficients a(l), b(l) and their special-parameter limits.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, VarSpace};
use crate::rational::{rat, rat_int, Rat};
use crate::Family;

/// Dense univariate polynomial with rational coefficients, ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    pub coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn z() -> Self {
        UniPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                a + b
            })
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute a Laurent polynomial for the variable.
    pub fn eval_poly(&self, x: &LaurentPoly) -> LaurentPoly {
        let space = x.space();
        let mut acc = LaurentPoly::zero(space);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&LaurentPoly::constant(space, c.clone()));
        }
        acc
    }
}

fn singular(what: &str) -> Error {
    Error::SingularParameters(what.to_string())
}

/// Coefficient C_{l,i} of f_l(z,p,q) in the basis (z-2)^i; C_{l,l} = 1.
pub fn jacobi_coeff(l: usize, i: usize, p: &Rat, q: &Rat) -> Result<Rat> {
    assert!(i <= l);
    if i == l {
        return Ok(Rat::one());
    }
    let (l, i) = (l as i64, i as i64);
    let pq = p + q; // p + q appears only in the combination t - p - q - 1/2
    let mut num = crate::rational::pow2(2 * (l - i)); // 4^{l-i}
    for t in i + 1..=l {
        num *= rat_int(t);
        num *= rat_int(t) - &pq - rat(1, 2);
    }
    let mut den = Rat::one();
    for t in 1..=l - i {
        den *= rat_int(t);
    }
    for s in l + i..=2 * l - 1 {
        let factor = rat_int(s) - p - rat_int(2) * q;
        if factor.is_zero() {
            return Err(singular(&format!("C_{{{l},{i}}} pole at s={s}")));
        }
        den *= factor;
    }
    Ok(num / den)
}

/// f_l(z,p,q) = sum_i C_{l,i} (z-2)^i as a polynomial in z.
pub fn f_poly(l: usize, p: &Rat, q: &Rat) -> Result<UniPoly> {
    let shift = UniPoly::new(vec![rat_int(-2), Rat::one()]); // z - 2
    let mut acc = UniPoly::zero();
    let mut power = UniPoly::one();
    for i in 0..=l {
        let c = jacobi_coeff(l, i, p, q)?;
        acc = acc.add(&power.scale(&c));
        if i < l {
            power = power.mul(&shift);
        }
    }
    Ok(acc)
}

/// g_k(w,p,q) = f_k(w,-p,-1-q).
pub fn g_poly(k: usize, p: &Rat, q: &Rat) -> Result<UniPoly> {
    f_poly(k, &-p.clone(), &(rat_int(-1) - q))
}

/// phi_a(z) = (w^{a+1/2} - w^{-a-1/2})/(w^{1/2} - w^{-1/2}), z = w + 1/w.
pub fn phi_poly(a: usize) -> UniPoly {
    ratio_poly(a, false)
}

/// psi_a(z) = (w^{a+1/2} + w^{-a-1/2})/(w^{1/2} + w^{-1/2}), z = w + 1/w.
pub fn psi_poly(a: usize) -> UniPoly {
    ratio_poly(a, true)
}

fn ratio_poly(a: usize, plus: bool) -> UniPoly {
    // Compute in a one-variable half-exponent space and convert to z.
    let space = VarSpace::xy(1, 0);
    let half = 2 * a as i64 + 1; // stored exponent of w^{a+1/2}
    let sign = if plus { Rat::one() } else { -Rat::one() };
    let num = LaurentPoly::monomial(space, vec![half], Rat::one())
        .add(&LaurentPoly::monomial(space, vec![-half], sign.clone()));
    let den = LaurentPoly::monomial(space, vec![1], Rat::one())
        .add(&LaurentPoly::monomial(space, vec![-1], sign));
    let quot = crate::laurent::exact_divide(&num, &den).expect("ratio is always polynomial");
    let uv = crate::laurent::xy_to_uv(&quot).expect("symmetric in w <-> 1/w");
    let mut coeffs = vec![Rat::zero(); a + 1];
    for (mono, c) in uv.sorted_terms() {
        coeffs[mono.0[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// phi_a(z) = w^a + w^{-a} for a > 0, phi_0 = 1 (doubled Chebyshev T).
pub fn even_phi_poly(a: usize) -> UniPoly {
    if a == 0 {
        return UniPoly::one();
    }
    let xy = VarSpace::xy(1, 0);
    let f = LaurentPoly::monomial(xy, vec![2 * a as i64], Rat::one())
        .add(&LaurentPoly::monomial(xy, vec![-2 * a as i64], Rat::one()));
    from_w_symmetric(&f, a)
}

/// psi_a(z) = (w^{a+1} - w^{-a-1})/(w - w^{-1}) (Chebyshev U).
pub fn even_psi_poly(a: usize) -> UniPoly {
    let xy = VarSpace::xy(1, 0);
    let e = 2 * (a as i64 + 1);
    let num = LaurentPoly::monomial(xy, vec![e], Rat::one())
        .sub(&LaurentPoly::monomial(xy, vec![-e], Rat::one()));
    let den = LaurentPoly::monomial(xy, vec![2], Rat::one())
        .sub(&LaurentPoly::monomial(xy, vec![-2], Rat::one()));
    let quot = crate::laurent::exact_divide(&num, &den).expect("ratio is always polynomial");
    from_w_symmetric(&quot, a)
}

fn from_w_symmetric(f: &LaurentPoly, degree: usize) -> UniPoly {
    let uv = crate::laurent::xy_to_uv(f).expect("symmetric in w <-> 1/w");
    let mut coeffs = vec![Rat::zero(); degree + 1];
    for (mono, c) in uv.sorted_terms() {
        coeffs[mono.0[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// a(x) of the three-term recurrence at an arbitrary integer argument.
pub fn a_coeff(x: i64, p: &Rat, q: &Rat) -> Result<Rat> {
    let x = rat_int(x);
    let two = rat_int(2);
    let d1 = &two * &x - p - &two * q - Rat::one();
    let d2 = &two * &x - p - &two * q + Rat::one();
    if d1.is_zero() || d2.is_zero() {
        return Err(singular("a(x) pole"));
    }
    Ok(-(&two * p * (p + &two * q + Rat::one())) / (&d1 * &d2))
}

/// b(x) of the three-term recurrence at an arbitrary integer argument.
pub fn b_coeff(x: i64, p: &Rat, q: &Rat) -> Result<Rat> {
    let x = rat_int(x);
    let two = rat_int(2);
    let d1 = &two * &x - p - &two * q - Rat::one();
    let d3 = &two * &x - p - &two * q;
    let d4 = &two * &x - p - &two * q - &two;
    if d1.is_zero() || d3.is_zero() || d4.is_zero() {
        return Err(singular("b(x) pole"));
    }
    let num = &two * &x
        * (&two * &x - &two * q - Rat::one())
        * (&two * &x - &two * p - &two * q - Rat::one())
        * (&two * &x - &two * p - rat_int(4) * q - &two);
    Ok(num / (&d3 * &d1 * &d1 * &d4))
}

fn delta(x: i64) -> Rat {
    if x == 0 {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Limits of a(x), b(x) at the special parameter point of the family,
/// valid for any integer argument.
pub fn limit_ab(x: i64, family: Family) -> (Rat, Rat) {
    match family {
        Family::Odd => (delta(x + 1) - delta(x), Rat::one() - delta(x)),
        Family::Even => (Rat::zero(), Rat::one() + delta(x - 1) - delta(x)),
    }
}

/// Three-term recurrence coefficients: z f_l = f_{l+1} + a(l) f_l + b(l) f_{l-1}.
pub fn recurrence_coeffs(l: usize, p: &Rat, q: &Rat) -> Result<(Rat, Rat)> {
    let l = rat_int(l as i64);
    let two = rat_int(2);
    let d1 = &two * &l - p - &two * q - Rat::one();
    let d2 = &two * &l - p - &two * q + Rat::one();
    if d1.is_zero() || d2.is_zero() {
        return Err(singular("a(l) pole"));
    }
    let a = -(&two * p * (p + &two * q + Rat::one())) / (&d1 * &d2);
    let d3 = &two * &l - p - &two * q;
    let d4 = &two * &l - p - &two * q - &two;
    if d3.is_zero() || d4.is_zero() {
        return Err(singular("b(l) pole"));
    }
    let b_num = &two * &l
        * (&two * &l - &two * q - Rat::one())
        * (&two * &l - &two * p - &two * q - Rat::one())
        * (&two * &l - &two * p - rat_int(4) * q - &two);
    let b = b_num / (&d3 * &d1 * &d1 * &d4);
    Ok((a, b))
}

/// Limits of the recurrence coefficients at the special parameter values:
/// (p,q) -> (-1,0) for the odd family, (0,0) for the even family.
pub fn limit_coeffs(l: usize, family: Family) -> (Rat, Rat) {
    limit_ab(l as i64, family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(l: usize, p: i64, q: i64) -> UniPoly {
        f_poly(l, &rat_int(p), &rat_int(q)).unwrap()
    }

    #[test]
    fn f_small_closed_forms() {
        assert_eq!(f(0, 0, 0), UniPoly::one());
        // f_1(z,0,0) = z, f_2(z,0,0) = z^2 - 2
        assert_eq!(f(1, 0, 0), UniPoly::z());
        assert_eq!(
            f(2, 0, 0),
            UniPoly::new(vec![rat_int(-2), Rat::zero(), Rat::one()])
        );
        // f_2(z,0,-1) = z^2 - 1
        assert_eq!(
            f(2, 0, -1),
            UniPoly::new(vec![rat_int(-1), Rat::zero(), Rat::one()])
        );
    }

    #[test]
    fn f_is_monic_of_degree_l() {
        let (p, q) = (rat(1, 3), rat(2, 5));
        for l in 0..=6 {
            let fl = f_poly(l, &p, &q).unwrap();
            assert_eq!(fl.degree(), Some(l));
            assert_eq!(*fl.coeffs.last().unwrap(), Rat::one());
        }
    }

    #[test]
    fn phi_psi_are_special_f() {
        // phi_l = f_l(z,-1,0), psi_k = f_k(z,1,-1)
        for l in 0..=6 {
            assert_eq!(phi_poly(l), f(l, -1, 0), "phi_{l}");
            assert_eq!(psi_poly(l), f(l, 1, -1), "psi_{l}");
            assert_eq!(
                psi_poly(l),
                g_poly(l, &rat_int(-1), &rat_int(0)).unwrap(),
                "psi as g at odd special point"
            );
        }
    }

    #[test]
    fn even_special_values() {
        // at (0,0): f_l = 2 T_l(z/2) for l >= 1 (Chebyshev), psi = g at (0,0)
        assert_eq!(f(3, 0, 0), UniPoly::new(vec![rat_int(0), rat_int(-3), rat_int(0), rat_int(1)]));
        for l in 0..=5 {
            assert_eq!(
                g_poly(l, &rat_int(0), &rat_int(0)).unwrap(),
                f(l, 0, -1),
                "g at even special point"
            );
        }
    }

    #[test]
    fn three_term_recurrence_generic() {
        let (p, q) = (rat(2, 7), rat(-3, 5));
        for l in 1..=8 {
            let (a, b) = recurrence_coeffs(l, &p, &q).unwrap();
            let zf = UniPoly::z().mul(&f_poly(l, &p, &q).unwrap());
            let rhs = f_poly(l + 1, &p, &q)
                .unwrap()
                .add(&f_poly(l, &p, &q).unwrap().scale(&a))
                .add(&f_poly(l - 1, &p, &q).unwrap().scale(&b));
            assert_eq!(zf, rhs, "l={l}");
        }
        // l = 0 case: no f_{-1} term
        let (a, _) = recurrence_coeffs(0, &p, &q).unwrap();
        let zf = UniPoly::z();
        let rhs = f_poly(1, &p, &q).unwrap().add(&UniPoly::one().scale(&a));
        assert_eq!(zf, rhs);
    }

    #[test]
    fn special_recurrence_with_limit_coeffs() {
        // the recurrence still holds at the special points with the limits
        for family in [Family::Odd, Family::Even] {
            let (p, q) = family.special_pq();
            for l in 0..=6 {
                let (a, b) = limit_coeffs(l, family);
                let zf = UniPoly::z().mul(&f_poly(l, &p, &q).unwrap());
                let mut rhs = f_poly(l + 1, &p, &q)
                    .unwrap()
                    .add(&f_poly(l, &p, &q).unwrap().scale(&a));
                if l > 0 {
                    rhs = rhs.add(&f_poly(l - 1, &p, &q).unwrap().scale(&b));
                }
                assert_eq!(zf, rhs, "family={} l={l}", family.name());
            }
        }
    }

    #[test]
    fn limit_path_approaches_limit_coeffs() {
        // path (p,q) = (-1 + 1/t, 1/t^2) into the odd special point
        for l in 0..=4 {
            let (la, lb) = limit_coeffs(l, Family::Odd);
            let mut prev: Option<(Rat, Rat)> = None;
            for t in [10i64, 100, 1000] {
                let p = rat_int(-1) + rat(1, t);
                let q = rat(1, t * t);
                let (a, b) = recurrence_coeffs(l, &p, &q).unwrap();
                let da = crate::rational::abs(&(a - &la));
                let db = crate::rational::abs(&(b - &lb));
                if let Some((pa, pb)) = prev {
                    assert!(da < pa || (da.is_zero() && pa.is_zero()), "a l={l} t={t}");
                    assert!(db < pb || (db.is_zero() && pb.is_zero()), "b l={l} t={t}");
                }
                assert!(da <= rat(2, t), "a gap too large l={l} t={t}");
                prev = Some((da, db));
            }
        }
    }

    #[test]
    fn even_chebyshev_polynomials() {
        // phi_a = f_a(z,0,0), psi_a = f_a(z,0,-1) (Chebyshev T doubled / U)
        for a in 0..=6 {
            assert_eq!(even_phi_poly(a), f(a, 0, 0), "phi_{a}");
            assert_eq!(even_psi_poly(a), f(a, 0, -1), "psi_{a}");
        }
        assert_eq!(even_phi_poly(1), UniPoly::z());
        assert_eq!(even_psi_poly(1), UniPoly::z());
    }

    #[test]
    fn general_argument_coeffs_match_recurrence_coeffs() {
        let (p, q) = (rat(2, 7), rat(-3, 5));
        for l in 0..=6usize {
            let (a, b) = recurrence_coeffs(l, &p, &q).unwrap();
            assert_eq!(a_coeff(l as i64, &p, &q).unwrap(), a);
            assert_eq!(b_coeff(l as i64, &p, &q).unwrap(), b);
        }
        // negative arguments are accepted
        assert!(a_coeff(-2, &p, &q).is_ok());
        assert!(b_coeff(-2, &p, &q).is_ok());
    }

    #[test]
    fn singular_coefficient_detected() {
        // at p = 2l - 1 - 2q + 0 choices the denominator s - p - 2q hits zero
        let p = rat_int(1);
        let q = rat_int(0);
        // l=1, i=0: s runs over {1}: 1 - 1 - 0 = 0
        assert!(matches!(
            jacobi_coeff(1, 0, &p, &q),
            Err(Error::SingularParameters(_))
        ));
    }

    #[test]
    fn eval_poly_substitution() {
        let space = VarSpace::uv(1, 0);
        let u = LaurentPoly::var_pow(space, 0, 1);
        let p = UniPoly::new(vec![rat_int(-2), Rat::zero(), Rat::one()]); // z^2 - 2
        let val = p.eval_poly(&u);
        let expect = u.mul(&u).sub(&LaurentPoly::constant(space, rat_int(2)));
        assert_eq!(val, expect);
        assert_eq!(p.eval(&rat_int(3)), rat_int(7));
    }
}
