//! Super Jacobi polynomials at k = -1: the Weyl-type alternating-sum
//! formula, the classical (one-alphabet) Jacobi polynomials, parameter
//! specializations, the factorization over a full rectangle, Pieri rules,
//! Jacobi--Trudy determinants and the stability degeneration.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{
    exact_divide, merge_last_pair, sym_group, twisted_symmetrize, LaurentPoly, VarSpace,
};
use crate::onevar::{a_coeff, b_coeff, f_poly, g_poly, limit_ab};
use crate::partition::{
    excess_count, exponent_data_canonical, pi_partition, pieri_a, pieri_b, HookContext, Partition,
};
use crate::rational::{rat_int, sign_pow, Rat};
use crate::superschur::{one_alphabet_perms, Alphabet};
use crate::Family;

/// The UV space attached to a hook context.
pub fn uv_space(ctx: &HookContext) -> VarSpace {
    VarSpace::uv(ctx.m, ctx.n)
}

fn var(space: VarSpace, alphabet: Alphabet, idx: usize, power: i64) -> LaurentPoly {
    let slot = match alphabet {
        Alphabet::X => idx,
        Alphabet::Y => space.m + idx,
    };
    LaurentPoly::var_pow(space, slot, power)
}

/// Vandermonde of one alphabet of a UV space.
fn vandermonde(space: VarSpace, alphabet: Alphabet) -> LaurentPoly {
    let k = match alphabet {
        Alphabet::X => space.m,
        Alphabet::Y => space.n,
    };
    let mut out = LaurentPoly::one(space);
    for i in 0..k {
        for j in i + 1..k {
            out = out.mul(&var(space, alphabet, i, 1).sub(&var(space, alphabet, j, 1)));
        }
    }
    out
}

/// Classical Jacobi polynomial at k = -1 on one alphabet of a UV space:
/// `(1/Delta) sum_w eps(w) w[f_{lambda_1+m-1}(u_1) ... f_{lambda_m}(u_m)]`.
pub fn classical_jacobi_in(
    lambda: &Partition,
    space: VarSpace,
    alphabet: Alphabet,
    p: &Rat,
    q: &Rat,
) -> Result<LaurentPoly> {
    let k = match alphabet {
        Alphabet::X => space.m,
        Alphabet::Y => space.n,
    };
    if lambda.len() > k {
        return Err(Error::SizeConstraint(format!(
            "partition {lambda} longer than the {k}-variable alphabet"
        )));
    }
    let mut num = LaurentPoly::one(space);
    for i in 0..k {
        let deg = lambda.part(i + 1) + (k - 1 - i);
        let f = f_poly(deg, p, q)?;
        num = num.mul(&f.eval_poly(&var(space, alphabet, i, 1)));
    }
    let alt = twisted_symmetrize(
        &num,
        one_alphabet_perms(space.m, space.n, alphabet).into_iter(),
        |g| g.perm_sign(),
    );
    exact_divide(&alt, &vandermonde(space, alphabet))
}

/// Classical Jacobi polynomial at k = -1 in m variables.
pub fn classical_jacobi(lambda: &Partition, m: usize, p: &Rat, q: &Rat) -> Result<LaurentPoly> {
    classical_jacobi_in(lambda, VarSpace::uv(m, 0), Alphabet::X, p, q)
}

/// Super Jacobi polynomial at k = -1 by the Weyl-type formula.
///
/// The sign is `(-1)^{b + c}` with c counting the boxes of pi_lambda outside
/// lambda strictly below the diagonal `i - j = d`, matching the orientation
/// of the difference product (same convention as the super Schur Weyl
/// formula).
pub fn super_jacobi(
    lambda: &Partition,
    ctx: &HookContext,
    p: &Rat,
    q: &Rat,
) -> Result<LaurentPoly> {
    let data = exponent_data_canonical(lambda, ctx)?;
    let pi = pi_partition(lambda, ctx)?;
    let space = uv_space(ctx);
    let mut num = LaurentPoly::one(space);
    for &(i, j) in &pi.boxes() {
        num = num.mul(&var(space, Alphabet::X, i - 1, 1).sub(&var(space, Alphabet::Y, j - 1, 1)));
    }
    for (i, &l) in data.l.iter().enumerate() {
        let f = f_poly(l as usize, p, q)?;
        num = num.mul(&f.eval_poly(&var(space, Alphabet::X, i, 1)));
    }
    for (j, &k) in data.k.iter().enumerate() {
        let g = g_poly(k as usize, p, q)?;
        num = num.mul(&g.eval_poly(&var(space, Alphabet::Y, j, 1)));
    }
    let alt = twisted_symmetrize(&num, sym_group(ctx.m, ctx.n), |g| g.perm_sign());
    let den = vandermonde(space, Alphabet::X).mul(&vandermonde(space, Alphabet::Y));
    let quot = exact_divide(&alt, &den)?;
    let sign = sign_pow((data.b + excess_count(lambda, &pi, ctx)) as u64);
    Ok(quot.scalar_mul(&sign))
}

/// Specialized super Jacobi polynomial at the family's parameter point.
pub fn specialized_sj(
    lambda: &Partition,
    ctx: &HookContext,
    family: Family,
) -> Result<LaurentPoly> {
    let (p, q) = family.special_pq();
    super_jacobi(lambda, ctx, &p, &q)
}

/// Right-hand side of the rectangle factorization:
/// `(-1)^{|nu|} prod (u_i - v_j) J_mu(u,-1,p,q) J_nu(v,-1,-p,-1-q)`.
pub fn factorization_rhs(
    lambda: &Partition,
    ctx: &HookContext,
    p: &Rat,
    q: &Rat,
) -> Result<LaurentPoly> {
    lambda.check_fat_hook(ctx)?;
    if !lambda.contains_rectangle(ctx) {
        return Err(Error::RectangleNotContained);
    }
    let space = uv_space(ctx);
    let mu = Partition::new((1..=ctx.m).map(|i| lambda.part(i) - ctx.n).collect())?;
    let conj = lambda.conjugate();
    let nu = Partition::new((1..=ctx.n).map(|j| conj.part(j) - ctx.m).collect())?;
    let ju = classical_jacobi_in(&mu, space, Alphabet::X, p, q)?;
    let jv = classical_jacobi_in(&nu, space, Alphabet::Y, &-p.clone(), &(rat_int(-1) - q))?;
    let mut out = ju.mul(&jv).scalar_mul(&sign_pow(nu.size() as u64));
    for i in 0..ctx.m {
        for j in 0..ctx.n {
            out = out.mul(&var(space, Alphabet::X, i, 1).sub(&var(space, Alphabet::Y, j, 1)));
        }
    }
    Ok(out)
}

/// `sum u_i - sum v_j + shift` in the UV space.
pub fn linear_factor(space: VarSpace, shift: i64) -> LaurentPoly {
    let mut out = LaurentPoly::constant(space, rat_int(shift));
    for i in 0..space.m {
        out = out.add(&var(space, Alphabet::X, i, 1));
    }
    for j in 0..space.n {
        out = out.sub(&var(space, Alphabet::Y, j, 1));
    }
    out
}

/// Both sides of the Pieri formula for the specialized polynomials:
/// odd family uses the factor `sum u - sum v + 1` and the diagonal term
/// `b_d(lambda)`, the even family the factor `sum u - sum v` alone.
pub fn pieri_sides(
    lambda: &Partition,
    ctx: &HookContext,
    family: Family,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let space = uv_space(ctx);
    let sj = specialized_sj(lambda, ctx, family)?;
    let shift = match family {
        Family::Odd => 1,
        Family::Even => 0,
    };
    let lhs = linear_factor(space, shift).mul(&sj);
    let mut rhs = LaurentPoly::zero(space);
    for mu in lambda.neighbors() {
        if !mu.in_fat_hook(ctx) {
            continue;
        }
        let a = pieri_a(&mu, lambda, ctx, family)?;
        if a.is_zero() {
            continue;
        }
        rhs = rhs.add(&specialized_sj(&mu, ctx, family)?.scalar_mul(&a));
    }
    if family == Family::Odd {
        let b = pieri_b(lambda, ctx);
        if !b.is_zero() {
            rhs = rhs.add(&sj.scalar_mul(&b));
        }
    }
    Ok((lhs, rhs))
}

/// Both sides of the delta-form Pieri identity (odd family), with the
/// factor `sum u - sum v` and Kronecker-delta coefficients.
pub fn pieri_delta_sides(
    lambda: &Partition,
    ctx: &HookContext,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let space = uv_space(ctx);
    let d = ctx.d();
    let delta = |x: i64| -> i64 { (x == 0) as i64 };
    let sj = specialized_sj(lambda, ctx, Family::Odd)?;
    let lhs = linear_factor(space, 0).mul(&sj);
    let mut rhs = LaurentPoly::zero(space);
    for (row, _) in lambda.addable_boxes() {
        let mu = lambda.add_box(row)?;
        if mu.in_fat_hook(ctx) {
            rhs = rhs.add(&specialized_sj(&mu, ctx, Family::Odd)?);
        }
    }
    for (row, _) in lambda.removable_boxes() {
        let mu = lambda.remove_box(row)?;
        let coeff = 1 - delta(lambda.part(row) as i64 - row as i64 + d);
        if coeff != 0 {
            rhs = rhs.add(&specialized_sj(&mu, ctx, Family::Odd)?.scalar_mul(&rat_int(coeff)));
        }
    }
    let mut diag = delta(d - lambda.len() as i64) - 1;
    for i in 1..=lambda.len() {
        let t = lambda.part(i) as i64 - i as i64 + d;
        diag += delta(t + 1) - delta(t);
    }
    if diag != 0 {
        rhs = rhs.add(&sj.scalar_mul(&rat_int(diag)));
    }
    Ok((lhs, rhs))
}

/// Coefficient source for the Jacobi--Trudy recursion.
#[derive(Clone, Debug)]
pub enum JtMode {
    Special(Family),
    Generic(Rat, Rat),
}

impl JtMode {
    fn ab(&self, x: i64) -> Result<(Rat, Rat)> {
        match self {
            JtMode::Special(family) => Ok(limit_ab(x, *family)),
            JtMode::Generic(p, q) => Ok((a_coeff(x, p, q)?, b_coeff(x, p, q)?)),
        }
    }

    fn one_row(&self, i: usize, ctx: &HookContext) -> Result<LaurentPoly> {
        let lambda = if i == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![i])?
        };
        match self {
            JtMode::Special(family) => specialized_sj(&lambda, ctx, *family),
            JtMode::Generic(p, q) => super_jacobi(&lambda, ctx, p, q),
        }
    }
}

/// Super Jacobi polynomial by the Jacobi--Trudy determinant over the
/// recursively-defined sequences `h_i^{(r)}`.
pub fn jt_determinant(lambda: &Partition, ctx: &HookContext, mode: &JtMode) -> Result<LaurentPoly> {
    lambda.check_fat_hook(ctx)?;
    let space = uv_space(ctx);
    let size = lambda.len();
    if size == 0 {
        return Ok(LaurentPoly::one(space));
    }
    let d = ctx.d();
    // Only h^{(0)} vanishes below subscript 0; the recursion repopulates
    // negative subscripts at higher levels, so the level-0 table must reach
    // `size - 1` below the lowest determinant subscript (the stencil eats
    // one slot per level on each side).
    let min_sub = lambda.part(size) as i64 - size as i64 + 1;
    let lo = min_sub - (size as i64 - 1);
    let hi = lambda.part(1) as i64 + (size as i64 - 1);
    let width = (hi - lo + 1) as usize;
    // table[r][idx] = h^{(r)}_{lo + idx}, valid for r <= idx <= width-1-r
    let mut table: Vec<Vec<LaurentPoly>> = Vec::with_capacity(size);
    let mut level: Vec<LaurentPoly> = Vec::with_capacity(width);
    for idx in 0..width {
        let i = lo + idx as i64;
        level.push(if i < 0 {
            LaurentPoly::zero(space)
        } else {
            mode.one_row(i as usize, ctx)?
        });
    }
    table.push(level);
    for r in 1..size {
        let prev = &table[r - 1];
        let mut level = vec![LaurentPoly::zero(space); width];
        for idx in r..width - r {
            let i = lo + idx as i64;
            let (a, b) = mode.ab(i + d - 1)?;
            let mut v = prev[idx + 1].clone();
            if !a.is_zero() {
                v = v.add(&prev[idx].scalar_mul(&a));
            }
            if !b.is_zero() {
                v = v.add(&prev[idx - 1].scalar_mul(&b));
            }
            level[idx] = v;
        }
        table.push(level);
    }
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(size);
    for i in 1..=size {
        let sub = lambda.part(i) as i64 - i as i64 + 1;
        let row: Vec<LaurentPoly> = (0..size)
            .map(|r| table[r][(sub - lo) as usize].clone())
            .collect();
        rows.push(row);
    }
    // reuse a simple cofactor determinant
    fn det(entries: &[Vec<LaurentPoly>], space: VarSpace) -> LaurentPoly {
        let size = entries.len();
        if size == 1 {
            return entries[0][0].clone();
        }
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
            let term = entries[0][col].mul(&det(&minor, space));
            acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    Ok(det(&rows, space))
}

/// Substitute `u_m = v_n = t` into a (m,n) polynomial; returns the
/// coefficients by t-degree together with the t-free requirement outcome.
pub fn stability_reduction(f: &LaurentPoly) -> (LaurentPoly, bool) {
    let layers = merge_last_pair(f);
    let t_free = layers.iter().skip(1).all(|c| c.is_zero());
    let space = VarSpace::uv(f.space().m - 1, f.space().n - 1);
    let head = layers
        .into_iter()
        .next()
        .unwrap_or_else(|| LaurentPoly::zero(space));
    (head, t_free)
}
