//! Sparse multivariate Laurent polynomials over exact rationals, with the
//! hyperoctahedral group actions, character-twisted symmetrization and exact
//! division used by every character formula in the crate.
//!
//! Two kinds of variable spaces appear:
//! * `Xy` spaces carry the variables `x_1..x_m, y_1..y_n`.  Exponents are
//!   stored doubled (unit 1/2) so that half-integer powers like `x^{1/2}`
//!   stay in integer arithmetic.
//! * `Uv` spaces carry `u_1..u_m, v_1..v_n` with unit-1 exponents, where
//!   `u_i = x_i + x_i^{-1}` and `v_j = y_j + y_j^{-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarKind {
    Xy,
    Uv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct VarSpace {
    pub kind: VarKind,
    pub m: usize,
    pub n: usize,
}

impl VarSpace {
    pub fn xy(m: usize, n: usize) -> Self {
        VarSpace { kind: VarKind::Xy, m, n }
    }

    pub fn uv(m: usize, n: usize) -> Self {
        VarSpace { kind: VarKind::Uv, m, n }
    }

    pub fn len(&self) -> usize {
        self.m + self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exponent unit denominator: stored exponents are multiples of 1/unit.
    pub fn exp_den(&self) -> i64 {
        match self.kind {
            VarKind::Xy => 2,
            VarKind::Uv => 1,
        }
    }

    pub fn var_name(&self, idx: usize) -> String {
        let (a, b) = match self.kind {
            VarKind::Xy => ("x", "y"),
            VarKind::Uv => ("u", "v"),
        };
        if idx < self.m {
            format!("{a}{}", idx + 1)
        } else {
            format!("{b}{}", idx - self.m + 1)
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.var_name(i)).collect()
    }
}

/// Exponent vector under graded lexicographic order with the first variable
/// largest.  The order is translation invariant, so leading terms multiply.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<i64>);

impl Mono {
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    space: VarSpace,
    terms: BTreeMap<Mono, Rat>,
}

impl LaurentPoly {
    pub fn zero(space: VarSpace) -> Self {
        LaurentPoly { space, terms: BTreeMap::new() }
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, Rat::one())
    }

    pub fn constant(space: VarSpace, c: Rat) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; space.len()]), c);
        }
        p
    }

    /// A single term `c * vars^exps`, exponents in stored units.
    pub fn monomial(space: VarSpace, exps: Vec<i64>, c: Rat) -> Self {
        assert_eq!(exps.len(), space.len(), "exponent vector length mismatch");
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    /// The variable with index `idx`, to the power `num/exp_den` of the space.
    pub fn var_pow(space: VarSpace, idx: usize, stored_exp: i64) -> Self {
        let mut exps = vec![0; space.len()];
        exps[idx] = stored_exp;
        Self::monomial(space, exps, Rat::one())
    }

    /// First-family variable (x or u) with 1-based index, power 1.
    pub fn first_var(space: VarSpace, i: usize) -> Self {
        Self::var_pow(space, i - 1, space.exp_den())
    }

    /// Second-family variable (y or v) with 1-based index, power 1.
    pub fn second_var(space: VarSpace, j: usize) -> Self {
        Self::var_pow(space, space.m + j - 1, space.exp_den())
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Terms in the canonical (descending graded-lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(&Mono, &Rat)> {
        self.terms.iter().rev().collect()
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exps: &[i64]) -> Rat {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The constant (rational) value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.0.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_add(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("space mismatch in add")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        LaurentPoly { space: self.space, terms }
    }

    pub fn scalar_mul(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        LaurentPoly { space: self.space, terms }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = Self::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<i64> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert_add(Mono(exps), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("space mismatch in mul")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.space);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Monomial shift: multiply by `vars^exps` (stored units).
    pub fn shift(&self, exps: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e: Vec<i64> = m.0.iter().zip(exps).map(|(a, b)| a + b).collect();
                (Mono(e), c.clone())
            })
            .collect();
        LaurentPoly { space: self.space, terms }
    }

    /// All stored exponents nonnegative, i.e. an honest polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    /// All stored exponents divisible by the space unit (integer powers).
    pub fn has_integer_exponents(&self) -> bool {
        let d = self.space.exp_den();
        self.terms.keys().all(|m| m.0.iter().all(|&e| e % d == 0))
    }
}

// ---------------------------------------------------------------------------
// Group elements and actions

/// An element of (S_m x Z_2^m) x (S_n x Z_2^n) acting on an Xy space by
/// `x_i -> x_{perm_x[i]}^{+-1}` and likewise on y.  On a Uv space only the
/// permutation part acts (u_i is inversion invariant by construction).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    pub perm_x: Vec<usize>,
    pub perm_y: Vec<usize>,
    pub flip_x: Vec<bool>,
    pub flip_y: Vec<bool>,
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1i64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl GroupElement {
    pub fn identity(m: usize, n: usize) -> Self {
        GroupElement {
            perm_x: (0..m).collect(),
            perm_y: (0..n).collect(),
            flip_x: vec![false; m],
            flip_y: vec![false; n],
        }
    }

    /// Sign character of the underlying permutation pair.
    pub fn perm_sign(&self) -> i64 {
        perm_sign(&self.perm_x) * perm_sign(&self.perm_y)
    }

    /// Composition `self * other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.perm_x.len();
        let n = self.perm_y.len();
        let mut out = GroupElement::identity(m, n);
        for i in 0..m {
            let mid = other.perm_x[i];
            out.perm_x[i] = self.perm_x[mid];
            out.flip_x[i] = other.flip_x[i] ^ self.flip_x[mid];
        }
        for j in 0..n {
            let mid = other.perm_y[j];
            out.perm_y[j] = self.perm_y[mid];
            out.flip_y[j] = other.flip_y[j] ^ self.flip_y[mid];
        }
        out
    }
}

/// Apply a group element to a polynomial: variables permuted within each
/// family, flipped variables inverted.
pub fn act(g: &GroupElement, f: &LaurentPoly) -> LaurentPoly {
    let space = f.space();
    assert_eq!(g.perm_x.len(), space.m, "group element size mismatch");
    assert_eq!(g.perm_y.len(), space.n, "group element size mismatch");
    let mut out = LaurentPoly::zero(space);
    for (mono, c) in f.terms() {
        let mut exps = vec![0i64; space.len()];
        for i in 0..space.m {
            let e = mono.0[i];
            let target = g.perm_x[i];
            exps[target] = if g.flip_x[i] { -e } else { e };
        }
        for j in 0..space.n {
            let e = mono.0[space.m + j];
            let target = space.m + g.perm_y[j];
            exps[target] = if g.flip_y[j] { -e } else { e };
        }
        out.insert_add(Mono(exps), c.clone());
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..k).permutations(k).collect()
}

/// Lazy enumeration of S_m x S_n (no sign flips).
pub fn sym_group(m: usize, n: usize) -> impl Iterator<Item = GroupElement> {
    let px = permutations(m);
    let py = permutations(n);
    px.into_iter().flat_map(move |p| {
        let py = py.clone();
        py.into_iter().map(move |q| GroupElement {
            perm_x: p.clone(),
            perm_y: q,
            flip_x: vec![false; m],
            flip_y: vec![false; n],
        })
    })
}

fn flip_masks(k: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..(1usize << k)).map(move |mask| (0..k).map(|i| mask >> i & 1 == 1).collect())
}

/// Lazy enumeration of the full even Weyl group (S_m x Z_2^m) x (S_n x Z_2^n).
/// With `even_x_flips` the x-flip vectors are restricted to even weight, the
/// Weyl group of osp(2m,2n).
pub fn weyl_group(m: usize, n: usize, even_x_flips: bool) -> impl Iterator<Item = GroupElement> {
    sym_group(m, n).flat_map(move |g| {
        flip_masks(m)
            .filter(move |fx| !even_x_flips || fx.iter().filter(|&&b| b).count() % 2 == 0)
            .flat_map(move |fx| {
                let g = g.clone();
                flip_masks(n).map(move |fy| GroupElement {
                    flip_x: fx.clone(),
                    flip_y: fy,
                    ..g.clone()
                })
            })
    })
}

/// `sum_w character(w) * act(w, f)` over an explicit group enumeration.
pub fn twisted_symmetrize<I, C>(f: &LaurentPoly, group: I, character: C) -> LaurentPoly
where
    I: Iterator<Item = GroupElement>,
    C: Fn(&GroupElement) -> i64,
{
    let mut out = LaurentPoly::zero(f.space());
    for g in group {
        let chi = character(&g);
        let image = act(&g, f);
        out = match chi {
            1 => out.add(&image),
            -1 => out.sub(&image),
            0 => out,
            k => out.add(&image.scalar_mul(&crate::rational::rat_int(k))),
        };
    }
    out
}

/// The sign of `g` on a reference polynomial: `act(g, f) = +-f`.  Used for the
/// characters of Weyl groups on denominators instead of hand-derived formulas.
pub fn empirical_sign(g: &GroupElement, f: &LaurentPoly) -> Result<i64> {
    let image = act(g, f);
    if &image == f {
        Ok(1)
    } else if image == f.neg() {
        Ok(-1)
    } else {
        Err(Error::InvalidInput(
            "reference polynomial is not a semi-invariant of the group element".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Exact division

fn min_exponents(p: &LaurentPoly) -> Vec<i64> {
    let len = p.space().len();
    let mut mins = vec![0i64; len];
    for (i, slot) in mins.iter_mut().enumerate() {
        *slot = p.terms.keys().map(|m| m.0[i]).min().unwrap_or(0);
    }
    mins
}

/// Exact quotient `num / den`; fails with the running remainder as witness if
/// the division is not exact.  Both sides are shifted by monomials to honest
/// polynomials first, where graded-lexicographic leading-term elimination is
/// guaranteed to terminate; the quotient of the shifted pair is shifted back.
pub fn exact_divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if num.space() != den.space() {
        return Err(Error::SpaceMismatch);
    }
    assert!(!den.is_zero(), "division by zero polynomial");
    let space = num.space();
    if num.is_zero() {
        return Ok(LaurentPoly::zero(space));
    }
    let num_shift = min_exponents(num);
    let den_shift = min_exponents(den);
    let neg = |v: &[i64]| v.iter().map(|e| -e).collect::<Vec<_>>();
    let num_p = num.shift(&neg(&num_shift));
    let den_p = den.shift(&neg(&den_shift));

    let mut rem = num_p;
    let mut quot = LaurentPoly::zero(space);
    let (lead_m, lead_c) = {
        let (m, c) = den_p.leading().unwrap();
        (m.clone(), c.clone())
    };
    while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let exps: Vec<i64> = m.0.iter().zip(&lead_m.0).map(|(a, b)| a - b).collect();
        if exps.iter().any(|&e| e < 0) {
            let witness = rem.shift(&num_shift);
            return Err(Error::NotDivisible { remainder: witness.to_string() });
        }
        let t = LaurentPoly::monomial(space, exps, c / &lead_c);
        rem = rem.sub(&t.mul(&den_p));
        quot = quot.add(&t);
    }
    // undo the shifts: quot * num_shift / den_shift
    let back: Vec<i64> = num_shift
        .iter()
        .zip(&den_shift)
        .map(|(a, b)| a - b)
        .collect();
    Ok(quot.shift(&back))
}

// ---------------------------------------------------------------------------
// Change of variables between the Xy and Uv pictures

/// Substitute `u_i -> x_i + x_i^{-1}`, `v_j -> y_j + y_j^{-1}`.
pub fn uv_to_xy(f: &LaurentPoly) -> LaurentPoly {
    assert_eq!(f.space().kind, VarKind::Uv, "uv_to_xy expects a Uv polynomial");
    assert!(f.is_polynomial(), "uv_to_xy expects nonnegative exponents");
    let (m, n) = (f.space().m, f.space().n);
    let xy = VarSpace::xy(m, n);
    // x + x^{-1} has stored exponents +-2 in the doubled Xy unit.
    let mut basis = Vec::with_capacity(m + n);
    for idx in 0..m + n {
        basis.push(LaurentPoly::var_pow(xy, idx, 2).add(&LaurentPoly::var_pow(xy, idx, -2)));
    }
    let mut out = LaurentPoly::zero(xy);
    for (mono, c) in f.terms() {
        let mut term = LaurentPoly::constant(xy, c.clone());
        for (idx, &e) in mono.0.iter().enumerate() {
            if e > 0 {
                term = term.mul(&basis[idx].pow(e as u32));
            }
        }
        out = out.add(&term);
    }
    out
}

/// Inverse of `uv_to_xy` by leading-term peeling.  The input must be
/// invariant under every single-variable inversion and under S_m x S_n
/// permutations; otherwise the peeling hits a bad leading term and fails.
pub fn xy_to_uv(f: &LaurentPoly) -> Result<LaurentPoly> {
    assert_eq!(f.space().kind, VarKind::Xy, "xy_to_uv expects an Xy polynomial");
    let (m, n) = (f.space().m, f.space().n);
    let uv = VarSpace::uv(m, n);
    let mut rem = f.clone();
    let mut out = LaurentPoly::zero(uv);
    while let Some((mono, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut uv_exps = Vec::with_capacity(m + n);
        for &e in &mono.0 {
            if e < 0 || e % 2 != 0 {
                return Err(Error::NotInSubring(format!(
                    "leading term {} is not reachable from u,v",
                    rem
                )));
            }
            uv_exps.push(e / 2);
        }
        let t = LaurentPoly::monomial(uv, uv_exps, c);
        rem = rem.sub(&uv_to_xy(&t));
        out = out.add(&t);
    }
    Ok(out)
}

/// Substitute `x_i -> x_i^{-1}` for a single 0-based variable index.
pub fn invert_variable(f: &LaurentPoly, idx: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.space());
    for (mono, c) in f.terms() {
        let mut exps = mono.0.clone();
        exps[idx] = -exps[idx];
        out.insert_add(Mono(exps), c.clone());
    }
    out
}

/// Set the last u-variable and the last v-variable equal to a common fresh
/// variable t; the result is reported as coefficients of powers of t, each a
/// polynomial in the remaining (m-1, n-1) variables.
pub fn merge_last_pair(f: &LaurentPoly) -> Vec<LaurentPoly> {
    let space = f.space();
    assert_eq!(space.kind, VarKind::Uv);
    assert!(space.m >= 1 && space.n >= 1);
    let small = VarSpace::uv(space.m - 1, space.n - 1);
    let mut out: Vec<LaurentPoly> = Vec::new();
    for (mono, c) in f.terms() {
        let t_deg = (mono.0[space.m - 1] + mono.0[space.m + space.n - 1]) as usize;
        let mut exps = Vec::with_capacity(small.len());
        exps.extend_from_slice(&mono.0[..space.m - 1]);
        exps.extend_from_slice(&mono.0[space.m..space.m + space.n - 1]);
        while out.len() <= t_deg {
            out.push(LaurentPoly::zero(small));
        }
        let t = LaurentPoly::monomial(small, exps, c.clone());
        out[t_deg] = out[t_deg].add(&t);
    }
    while out.len() > 1 && out.last().map(|p| p.is_zero()) == Some(true) {
        out.pop();
    }
    if out.is_empty() {
        out.push(LaurentPoly::zero(small));
    }
    out
}

// ---------------------------------------------------------------------------
// Display and serialization

fn format_exponent(stored: i64, den: i64) -> String {
    if stored % den == 0 {
        format!("{}", stored / den)
    } else {
        format!("({stored}/{den})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let den = self.space.exp_den();
        let mut first = true;
        for (mono, coeff) in self.sorted_terms() {
            let mut vars = String::new();
            for (idx, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&self.space.var_name(idx));
                if e != den {
                    vars.push('^');
                    vars.push_str(&format_exponent(e, den));
                }
            }
            let abs = coeff.abs();
            let coeff_str = if abs.is_one() && !vars.is_empty() {
                String::new()
            } else {
                format_rat(&abs)
            };
            if first {
                if coeff.is_negative() {
                    write!(out, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            match (coeff_str.is_empty(), vars.is_empty()) {
                (true, _) => write!(out, "{vars}")?,
                (false, true) => write!(out, "{coeff_str}")?,
                (false, false) => write!(out, "{coeff_str}*{vars}")?,
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Deterministic JSON form: terms sorted by the canonical monomial order.
    /// `exp_den` gives the denominator of the stored exponent unit (2 for Xy
    /// spaces, 1 for Uv spaces).
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "exp": m.0,
                    "coeff": format_rat(c),
                })
            })
            .collect();
        serde_json::json!({
            "vars": self.space.var_names(),
            "exp_den": self.space.exp_den(),
            "terms": terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn xy11() -> VarSpace {
        VarSpace::xy(1, 1)
    }

    fn x1(space: VarSpace) -> LaurentPoly {
        LaurentPoly::first_var(space, 1)
    }

    fn y1(space: VarSpace) -> LaurentPoly {
        LaurentPoly::second_var(space, 1)
    }

    #[test]
    fn ring_ops_basic_identities() {
        let s = xy11();
        let (x, y) = (x1(s), y1(s));
        // (x1 - y1)(x1 + y1) = x1^2 - y1^2
        let lhs = x.sub(&y).mul(&x.add(&y));
        let rhs = x.pow(2).sub(&y.pow(2));
        assert_eq!(lhs, rhs);
        // P + (-P) = 0 with empty term map
        let p = x.mul(&y).add(&LaurentPoly::constant(s, rat(3, 2)));
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(p.add(&p.neg()).num_terms(), 0);
    }

    #[test]
    fn half_exponent_square() {
        // (x^{1/2} - x^{-1/2})^2 = x - 2 + x^{-1}
        let s = VarSpace::xy(1, 0);
        let h = LaurentPoly::var_pow(s, 0, 1).sub(&LaurentPoly::var_pow(s, 0, -1));
        let sq = h.pow(2);
        let expected = LaurentPoly::var_pow(s, 0, 2)
            .add(&LaurentPoly::var_pow(s, 0, -2))
            .add(&LaurentPoly::constant(s, rat_int(-2)));
        assert_eq!(sq, expected);
    }

    #[test]
    fn space_mismatch_is_an_error() {
        let a = LaurentPoly::one(VarSpace::xy(1, 1));
        let b = LaurentPoly::one(VarSpace::uv(1, 1));
        assert_eq!(a.try_add(&b), Err(Error::SpaceMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::SpaceMismatch));
    }

    #[test]
    fn act_swap_and_flip() {
        let s = VarSpace::xy(2, 1);
        let g = GroupElement {
            perm_x: vec![1, 0],
            perm_y: vec![0],
            flip_x: vec![false, false],
            flip_y: vec![false],
        };
        assert_eq!(act(&g, &x1(s)), LaurentPoly::first_var(s, 2));

        // flip x1 fixes x1 + x1^{-1}
        let s1 = VarSpace::xy(1, 1);
        let flip = GroupElement {
            perm_x: vec![0],
            perm_y: vec![0],
            flip_x: vec![true],
            flip_y: vec![false],
        };
        let u_like = x1(s1).add(&LaurentPoly::var_pow(s1, 0, -2));
        assert_eq!(act(&flip, &u_like), u_like);

        // flip y1 negates y1 - y1^{-1}
        let flip_y = GroupElement {
            perm_x: vec![0],
            perm_y: vec![0],
            flip_x: vec![false],
            flip_y: vec![true],
        };
        let odd = y1(s1).sub(&LaurentPoly::var_pow(s1, 1, -2));
        assert_eq!(act(&flip_y, &odd), odd.neg());
    }

    #[test]
    fn twisted_symmetrize_sign_character() {
        let s = VarSpace::xy(2, 0);
        let x1 = LaurentPoly::first_var(s, 1);
        let x2 = LaurentPoly::first_var(s, 2);
        let alt = twisted_symmetrize(&x1, sym_group(2, 0), |g| g.perm_sign());
        assert_eq!(alt, x1.sub(&x2));
        // symmetric input alternates to zero
        let sym = x1.mul(&x2);
        assert!(twisted_symmetrize(&sym, sym_group(2, 0), |g| g.perm_sign()).is_zero());
    }

    #[test]
    fn alternation_then_division_gives_schur() {
        // {x1^2 x2^0} / (x1 - x2) = x1 + x2, the classical s_(1) in 2 vars.
        let s = VarSpace::xy(2, 0);
        let x1 = LaurentPoly::first_var(s, 1);
        let x2 = LaurentPoly::first_var(s, 2);
        let num = twisted_symmetrize(&x1.pow(2), sym_group(2, 0), |g| g.perm_sign());
        let q = exact_divide(&num, &x1.sub(&x2)).unwrap();
        assert_eq!(q, x1.add(&x2));
    }

    #[test]
    fn exact_divide_failure_carries_witness() {
        let s = VarSpace::xy(2, 1);
        let x1 = LaurentPoly::first_var(s, 1);
        let x2 = LaurentPoly::first_var(s, 2);
        let y1 = LaurentPoly::second_var(s, 1);
        let r = exact_divide(&x1.sub(&y1), &x1.sub(&x2));
        assert!(matches!(r, Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn uv_to_xy_examples() {
        let uv = VarSpace::uv(1, 1);
        let u = LaurentPoly::first_var(uv, 1);
        let v = LaurentPoly::second_var(uv, 1);
        let xy = VarSpace::xy(1, 1);
        let expect_u = LaurentPoly::var_pow(xy, 0, 2).add(&LaurentPoly::var_pow(xy, 0, -2));
        assert_eq!(uv_to_xy(&u), expect_u);

        // u1 v1 expands to four terms
        assert_eq!(uv_to_xy(&u.mul(&v)).num_terms(), 4);

        // u^2 - 2 = x^2 + x^{-2}
        let p = u.pow(2).sub(&LaurentPoly::constant(uv, rat_int(2)));
        let expected = LaurentPoly::var_pow(xy, 0, 4).add(&LaurentPoly::var_pow(xy, 0, -4));
        assert_eq!(uv_to_xy(&p), expected);
    }

    #[test]
    fn xy_to_uv_examples() {
        let xy = VarSpace::xy(1, 1);
        let p = LaurentPoly::var_pow(xy, 0, 2).add(&LaurentPoly::var_pow(xy, 0, -2));
        let uv = VarSpace::uv(1, 1);
        assert_eq!(xy_to_uv(&p).unwrap(), LaurentPoly::first_var(uv, 1));

        let p2 = LaurentPoly::var_pow(xy, 0, 4).add(&LaurentPoly::var_pow(xy, 0, -4));
        let u = LaurentPoly::first_var(uv, 1);
        assert_eq!(
            xy_to_uv(&p2).unwrap(),
            u.pow(2).sub(&LaurentPoly::constant(uv, rat_int(2)))
        );

        // x1 y1 + x1^{-1} y1^{-1} is not invariant under flipping x1 alone
        let bad = x1(xy).mul(&y1(xy)).add(&LaurentPoly::monomial(
            xy,
            vec![-2, -2],
            rat_int(1),
        ));
        assert!(matches!(xy_to_uv(&bad), Err(Error::NotInSubring(_))));
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(weyl_group(2, 1, false).count(), 2 * 4 * 1 * 2);
        assert_eq!(weyl_group(2, 1, true).count(), 2 * 2 * 1 * 2);
        assert_eq!(sym_group(3, 2).count(), 12);
    }

    #[test]
    fn display_canonical() {
        let s = xy11();
        let p = x1(s).sub(&y1(s));
        assert_eq!(p.to_string(), "x1 - y1");
        let q = y1(s).neg().mul(&x1(s).sub(&y1(s)));
        assert_eq!(q.to_string(), "-x1*y1 + y1^2");
    }
}
