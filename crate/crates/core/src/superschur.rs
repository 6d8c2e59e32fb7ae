//! Super Schur polynomials by two independent routes: the Jacobi--Trudy
//! determinant in the h-series and the Weyl-type alternating-sum formula.
//! Also classical Schur polynomials and the Berele--Regev factorisation.


use crate::error::{Error, Result};
use crate::laurent::{
    act, exact_divide, sym_group, twisted_symmetrize, GroupElement, LaurentPoly, VarSpace,
};
use crate::partition::{excess_count, exponent_data, HookContext, Partition};
use crate::rational::sign_pow;

/// Which alphabet of an XY space a symmetric-function operation targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    X,
    Y,
}

/// The XY space attached to a hook context.
pub fn xy_space(ctx: &HookContext) -> VarSpace {
    VarSpace::xy(ctx.m, ctx.n)
}

fn var(space: VarSpace, alphabet: Alphabet, idx: usize, power: i64) -> LaurentPoly {
    let slot = match alphabet {
        Alphabet::X => idx,
        Alphabet::Y => space.m + idx,
    };
    // XY spaces store doubled exponents
    LaurentPoly::var_pow(space, slot, 2 * power)
}

fn alphabet_size(space: VarSpace, alphabet: Alphabet) -> usize {
    match alphabet {
        Alphabet::X => space.m,
        Alphabet::Y => space.n,
    }
}

/// Vandermonde determinant of one alphabet inside an XY space.
pub fn vandermonde(space: VarSpace, alphabet: Alphabet) -> LaurentPoly {
    let k = alphabet_size(space, alphabet);
    let mut out = LaurentPoly::one(space);
    for i in 0..k {
        for j in i + 1..k {
            let diff = var(space, alphabet, i, 1).sub(&var(space, alphabet, j, 1));
            out = out.mul(&diff);
        }
    }
    out
}

/// Complete homogeneous polynomials of one alphabet, degrees 0..=max.
fn complete_homogeneous(space: VarSpace, alphabet: Alphabet, max: usize) -> Vec<LaurentPoly> {
    let k = alphabet_size(space, alphabet);
    let mut h: Vec<LaurentPoly> = (0..=max)
        .map(|a| {
            if a == 0 {
                LaurentPoly::one(space)
            } else {
                LaurentPoly::zero(space)
            }
        })
        .collect();
    for v in 0..k {
        let xv = var(space, alphabet, v, 1);
        for a in 1..=max {
            let add = h[a - 1].mul(&xv);
            h[a] = h[a].add(&add);
        }
    }
    h
}

/// Elementary symmetric polynomials of one alphabet, degrees 0..=max.
fn elementary(space: VarSpace, alphabet: Alphabet, max: usize) -> Vec<LaurentPoly> {
    let k = alphabet_size(space, alphabet);
    let mut e: Vec<LaurentPoly> = (0..=max)
        .map(|a| {
            if a == 0 {
                LaurentPoly::one(space)
            } else {
                LaurentPoly::zero(space)
            }
        })
        .collect();
    for v in 0..k {
        let xv = var(space, alphabet, v, 1);
        for a in (1..=max.min(v + 1)).rev() {
            let add = e[a - 1].mul(&xv);
            e[a] = e[a].add(&add);
        }
    }
    e
}

/// Memoised table of the super h-series: the Taylor coefficients of
/// `prod (1 - t y_j) / prod (1 - t x_i)`.
pub struct HTable {
    space: VarSpace,
    values: Vec<LaurentPoly>,
}

impl HTable {
    pub fn new(ctx: &HookContext) -> Self {
        HTable {
            space: xy_space(ctx),
            values: Vec::new(),
        }
    }

    /// h_a(x,y); negative indices give 0.
    pub fn get(&mut self, a: i64) -> LaurentPoly {
        if a < 0 {
            return LaurentPoly::zero(self.space);
        }
        let a = a as usize;
        if a >= self.values.len() {
            let hx = complete_homogeneous(self.space, Alphabet::X, a);
            let ey = elementary(self.space, Alphabet::Y, a.min(self.space.n));
            for b in self.values.len()..=a {
                let mut acc = LaurentPoly::zero(self.space);
                for (j, e) in ey.iter().enumerate() {
                    if j > b {
                        break;
                    }
                    let term = e.mul(&hx[b - j]);
                    acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                self.values.push(acc);
            }
        }
        self.values[a].clone()
    }
}

fn determinant(entries: &[Vec<LaurentPoly>], space: VarSpace) -> LaurentPoly {
    let size = entries.len();
    if size == 0 {
        return LaurentPoly::one(space);
    }
    if size == 1 {
        return entries[0][0].clone();
    }
    // cofactor expansion along the first row; fine at desk scale
    let mut acc = LaurentPoly::zero(space);
    for col in 0..size {
        if entries[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entries[0][col].mul(&determinant(&minor, space));
        acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Super Schur polynomial by the Jacobi--Trudy determinant
/// `det(h_{lambda_i - i + j})`.
pub fn super_schur_jt(lambda: &Partition, ctx: &HookContext) -> Result<LaurentPoly> {
    lambda.check_fat_hook(ctx)?;
    let space = xy_space(ctx);
    let mut table = HTable::new(ctx);
    let size = lambda.len();
    let entries: Vec<Vec<LaurentPoly>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| table.get(lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(determinant(&entries, space))
}

/// Group elements permuting a single alphabet of an (m,n) space.
pub fn one_alphabet_perms(m: usize, n: usize, alphabet: Alphabet) -> Vec<GroupElement> {
    use itertools::Itertools;
    let k = match alphabet {
        Alphabet::X => m,
        Alphabet::Y => n,
    };
    (0..k)
        .permutations(k)
        .map(|p| {
            let mut g = GroupElement::identity(m, n);
            match alphabet {
                Alphabet::X => g.perm_x = p,
                Alphabet::Y => g.perm_y = p,
            }
            g
        })
        .collect()
}

/// Classical Schur polynomial of one alphabet by the Weyl bialternant.
pub fn classical_schur(
    lambda: &Partition,
    space: VarSpace,
    alphabet: Alphabet,
) -> Result<LaurentPoly> {
    let k = alphabet_size(space, alphabet);
    if lambda.len() > k {
        return Err(Error::SizeConstraint(format!(
            "partition {lambda} longer than the {k}-variable alphabet"
        )));
    }
    let mut num = LaurentPoly::one(space);
    for i in 0..k {
        let e = lambda.part(i + 1) as i64 + (k - 1 - i) as i64;
        num = num.mul(&var(space, alphabet, i, e));
    }
    let alt = twisted_symmetrize(
        &num,
        one_alphabet_perms(space.m, space.n, alphabet).into_iter(),
        |g| g.perm_sign(),
    );
    exact_divide(&alt, &vandermonde(space, alphabet))
}

/// Super Schur polynomial by the Weyl-type formula for an admissible nu.
///
/// The sign is `(-1)^{b + c}` where c counts the boxes of nu outside lambda
/// strictly below the diagonal `i - j = d`; each such box contributes its
/// difference factor with the opposite orientation.
pub fn super_schur_weyl(
    lambda: &Partition,
    nu: &Partition,
    ctx: &HookContext,
) -> Result<LaurentPoly> {
    let data = exponent_data(lambda, nu, ctx)?;
    let space = xy_space(ctx);
    let mut num = LaurentPoly::one(space);
    for &(i, j) in &nu.boxes() {
        let diff = var(space, Alphabet::X, i - 1, 1).sub(&var(space, Alphabet::Y, j - 1, 1));
        num = num.mul(&diff);
    }
    for (i, &l) in data.l.iter().enumerate() {
        num = num.mul(&var(space, Alphabet::X, i, l));
    }
    for (j, &k) in data.k.iter().enumerate() {
        num = num.mul(&var(space, Alphabet::Y, j, k));
    }
    let alt = twisted_symmetrize(&num, sym_group(ctx.m, ctx.n), |g| g.perm_sign());
    let den = vandermonde(space, Alphabet::X).mul(&vandermonde(space, Alphabet::Y));
    let quot = exact_divide(&alt, &den)?;
    let sign = sign_pow((data.b + excess_count(lambda, nu, ctx)) as u64);
    Ok(quot.scalar_mul(&sign))
}

/// Berele--Regev factorisation for lambda containing the m x n rectangle:
/// `SP_lambda = (-1)^{|nu|} prod_{i,j} (x_i - y_j) s_mu(x) s_nu(y)` with
/// mu_i = lambda_i - n and nu_j = lambda'_j - m.
pub fn berele_regev(lambda: &Partition, ctx: &HookContext) -> Result<LaurentPoly> {
    lambda.check_fat_hook(ctx)?;
    if !lambda.contains_rectangle(ctx) {
        return Err(Error::RectangleNotContained);
    }
    let space = xy_space(ctx);
    let mu = Partition::new((1..=ctx.m).map(|i| lambda.part(i) - ctx.n).collect())?;
    let conj = lambda.conjugate();
    let nu = Partition::new((1..=ctx.n).map(|j| conj.part(j) - ctx.m).collect())?;
    let mut out = classical_schur(&mu, space, Alphabet::X)?
        .mul(&classical_schur(&nu, space, Alphabet::Y)?)
        .scalar_mul(&sign_pow(nu.size() as u64));
    for i in 0..ctx.m {
        for j in 0..ctx.n {
            let diff = var(space, Alphabet::X, i, 1).sub(&var(space, Alphabet::Y, j, 1));
            out = out.mul(&diff);
        }
    }
    Ok(out)
}

/// Apply a group element to the polynomial (re-export convenience for
/// invariance checks).
pub fn is_sym_invariant(f: &LaurentPoly) -> bool {
    sym_group(f.space().m, f.space().n).all(|g| act(&g, f) == *f)
}
