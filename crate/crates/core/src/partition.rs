//! Partition and fat-hook combinatorics: the indices i(lambda), j(lambda),
//! i*(lambda), the region pi_lambda, exponent sequences, hook products,
//! special boxes and Pieri coefficients.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rat};
use crate::Family;

/// Weakly decreasing list of positive integers; parts beyond the stored
/// length read as 0.  The empty partition is the empty list.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// The fat (m,n)-hook context; `d = m - n` is the superdimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HookContext {
    pub m: usize,
    pub n: usize,
}

impl HookContext {
    pub fn new(m: usize, n: usize) -> Self {
        HookContext { m, n }
    }

    pub fn d(&self) -> i64 {
        self.m as i64 - self.n as i64
    }
}

/// Exponent sequences of the Weyl-type formulas, for a chosen admissible nu.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentData {
    pub l: Vec<i64>,
    pub k: Vec<i64>,
    pub i_lam: usize,
    pub j_lam: usize,
    /// b = sum of the parts below row m.
    pub b: usize,
}

impl ExponentData {
    pub fn b_sign(&self) -> i64 {
        if self.b % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parse a comma-separated part list; the empty string is the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition `{s}`")))
            })
            .collect::<Result<_>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// 1-based part access; indices beyond the length give 0.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Boxes (i,j), 1-based, row-major.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn in_fat_hook(&self, ctx: &HookContext) -> bool {
        self.part(ctx.m + 1) <= ctx.n
    }

    pub fn check_fat_hook(&self, ctx: &HookContext) -> Result<()> {
        if self.in_fat_hook(ctx) {
            Ok(())
        } else {
            Err(Error::NotInFatHook {
                lambda: format!("{self}"),
                m: ctx.m,
                n: ctx.n,
            })
        }
    }

    pub fn contains_rectangle(&self, ctx: &HookContext) -> bool {
        ctx.m == 0 || self.part(ctx.m) >= ctx.n
    }

    /// b = sum of parts with row index > m.
    pub fn b_tail(&self, ctx: &HookContext) -> usize {
        self.parts.iter().skip(ctx.m).sum()
    }

    /// Rows where a box can be removed, as (row, col) of the removable box.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) {
                out.push((i, self.part(i)));
            }
        }
        out
    }

    /// Positions where a box can be added, as (row, col) of the new box.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.part(i - 1) > self.part(i) {
                out.push((i, self.part(i) + 1));
            }
        }
        out
    }

    pub fn remove_box(&self, row: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        if row == 0 || row > parts.len() {
            return Err(Error::InvalidInput("no box to remove".into()));
        }
        parts[row - 1] -= 1;
        Self::new(parts)
    }

    pub fn add_box(&self, row: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() {
            parts[row - 1] += 1;
        } else {
            return Err(Error::InvalidInput("bad row".into()));
        }
        Self::new(parts)
    }

    /// All partitions one box away from `self` (both directions).
    pub fn neighbors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for (i, _) in self.addable_boxes() {
            out.push(self.add_box(i).unwrap());
        }
        for (i, _) in self.removable_boxes() {
            out.push(self.remove_box(i).unwrap());
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Fat-hook indices and regions

/// `(i(lambda), j(lambda), i*(lambda))`: the largest row index with
/// `lambda_i + d - i >= 0`, the column analogue, and the strict variant.
pub fn hook_indices(lambda: &Partition, ctx: &HookContext) -> Result<(usize, usize, usize)> {
    lambda.check_fat_hook(ctx)?;
    let d = ctx.d();
    let conj = lambda.conjugate();
    let i_lam = (1..=ctx.m)
        .filter(|&i| lambda.part(i) as i64 + d - i as i64 >= 0)
        .max()
        .unwrap_or(0);
    let j_lam = (1..=ctx.n)
        .filter(|&j| conj.part(j) as i64 - d - j as i64 >= 0)
        .max()
        .unwrap_or(0);
    let i_star = (1..=ctx.m)
        .filter(|&i| lambda.part(i) as i64 + d - i as i64 > 0)
        .max()
        .unwrap_or(0);
    Ok((i_lam, j_lam, i_star))
}

/// Boxes of the m x n rectangle in the first i(lambda) rows or the first
/// j(lambda) columns.
pub fn pi_region(lambda: &Partition, ctx: &HookContext) -> Result<Vec<(usize, usize)>> {
    let (i_lam, j_lam, _) = hook_indices(lambda, ctx)?;
    let mut out = Vec::new();
    for i in 1..=ctx.m {
        for j in 1..=ctx.n {
            if i <= i_lam || j <= j_lam {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// pi_lambda as a partition shape: rows 1..i(lambda) of length n, remaining
/// rows of length j(lambda).
pub fn pi_partition(lambda: &Partition, ctx: &HookContext) -> Result<Partition> {
    let (i_lam, j_lam, _) = hook_indices(lambda, ctx)?;
    let mut parts = vec![ctx.n; i_lam];
    parts.extend(std::iter::repeat(j_lam).take(ctx.m - i_lam));
    Partition::new(parts)
}

/// All partitions nu with `lambda intersect Pi_{m,n} <= nu <= pi_lambda`,
/// in lexicographic order of part vectors.
pub fn admissible_nus(lambda: &Partition, ctx: &HookContext) -> Result<Vec<Partition>> {
    let upper = pi_partition(lambda, ctx)?;
    let lower: Vec<usize> = (1..=ctx.m)
        .map(|i| lambda.part(i).min(ctx.n))
        .collect();
    let upper: Vec<usize> = (1..=ctx.m).map(|i| upper.part(i)).collect();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        row: usize,
        m: usize,
        lower: &[usize],
        upper: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == m {
            out.push(Partition::new(current.clone()).unwrap());
            return;
        }
        let hi = if row == 0 {
            upper[row]
        } else {
            upper[row].min(current[row - 1])
        };
        for v in lower[row]..=hi {
            current.push(v);
            rec(row + 1, m, lower, upper, current, out);
            current.pop();
        }
    }
    rec(0, ctx.m, &lower, &upper, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// Exponent sequences l, k for an admissible nu; with nu = pi_lambda these
/// reduce to `l_i = lambda_i + d - i`, `k_j = lambda'_j - d - j` on the head
/// segments.
pub fn exponent_data(
    lambda: &Partition,
    nu: &Partition,
    ctx: &HookContext,
) -> Result<ExponentData> {
    let (i_lam, j_lam, _) = hook_indices(lambda, ctx)?;
    let nus = admissible_nus(lambda, ctx)?;
    if !nus.contains(nu) {
        return Err(Error::InadmissibleNu);
    }
    let conj = lambda.conjugate();
    let nu_conj = nu.conjugate();
    let (m, n) = (ctx.m as i64, ctx.n as i64);
    let mut l = Vec::with_capacity(ctx.m);
    for i in 1..=ctx.m {
        let v = if i <= i_lam {
            lambda.part(i) as i64 + m - nu.part(i) as i64 - i as i64
        } else {
            m - i as i64
        };
        l.push(v);
    }
    let mut k = Vec::with_capacity(ctx.n);
    for j in 1..=ctx.n {
        let v = if j <= j_lam {
            conj.part(j) as i64 + n - nu_conj.part(j) as i64 - j as i64
        } else {
            n - j as i64
        };
        k.push(v);
    }
    Ok(ExponentData {
        l,
        k,
        i_lam,
        j_lam,
        b: lambda.b_tail(ctx),
    })
}

/// Exponent data at the canonical choice nu = pi_lambda.
pub fn exponent_data_canonical(lambda: &Partition, ctx: &HookContext) -> Result<ExponentData> {
    let (i_lam, j_lam, _) = hook_indices(lambda, ctx)?;
    let conj = lambda.conjugate();
    let d = ctx.d();
    let l = (1..=ctx.m)
        .map(|i| {
            if i <= i_lam {
                lambda.part(i) as i64 + d - i as i64
            } else {
                (ctx.m - i) as i64
            }
        })
        .collect();
    let k = (1..=ctx.n)
        .map(|j| {
            if j <= j_lam {
                conj.part(j) as i64 - d - j as i64
            } else {
                (ctx.n - j) as i64
            }
        })
        .collect();
    Ok(ExponentData {
        l,
        k,
        i_lam,
        j_lam,
        b: lambda.b_tail(ctx),
    })
}

// ---------------------------------------------------------------------------
// Hook products

/// The three box-indexed products C^+, C^-, C^0 evaluated at x.
pub fn hook_products(lambda: &Partition, x: &Rat) -> (Rat, Rat, Rat) {
    let conj = lambda.conjugate();
    let mut plus = Rat::one();
    let mut minus = Rat::one();
    let mut zero = Rat::one();
    for (i, j) in lambda.boxes() {
        let li = lambda.part(i) as i64;
        let cj = conj.part(j) as i64;
        let (i, j) = (i as i64, j as i64);
        plus *= rat_int(li + j - (cj + i)) + x;
        minus *= rat_int(li - j + cj - i) + x;
        zero *= rat_int(j - i) + x;
    }
    (plus, minus, zero)
}

// ---------------------------------------------------------------------------
// Pieri coefficients and region counts

/// Pieri coefficient a_d(mu, lambda) for `mu ~ lambda` (one box apart).
/// A box (i,j) is special when `i - j = d`.
pub fn pieri_a(mu: &Partition, lambda: &Partition, ctx: &HookContext, family: Family) -> Result<Rat> {
    let d = ctx.d();
    let diff = mu.size() as i64 - lambda.size() as i64;
    let boxed = |big: &Partition, small: &Partition| -> Option<(usize, usize)> {
        if !big.contains(small) {
            return None;
        }
        let mut found = None;
        for i in 1..=big.len() {
            let delta = big.part(i) - small.part(i);
            if delta == 1 && found.is_none() {
                found = Some((i, big.part(i)));
            } else if delta != 0 {
                return None;
            }
        }
        found
    };
    let removed = match diff {
        1 => {
            // mu = lambda + box
            if boxed(mu, lambda).is_none() {
                return Err(Error::InvalidInput("mu is not lambda plus one box".into()));
            }
            None
        }
        -1 => match boxed(lambda, mu) {
            Some(b) => Some(b),
            None => return Err(Error::InvalidInput("mu is not lambda minus one box".into())),
        },
        _ => return Err(Error::InvalidInput("mu is not adjacent to lambda".into())),
    };
    Ok(match (family, removed) {
        (_, None) => rat_int(1),
        (Family::Odd, Some((i, j))) => {
            if i as i64 - j as i64 == d {
                rat_int(0)
            } else {
                rat_int(1)
            }
        }
        (Family::Even, Some((i, j))) => {
            if j as i64 - i as i64 == -d {
                rat_int(0)
            } else if j as i64 - i as i64 == 1 - d {
                rat_int(2)
            } else {
                rat_int(1)
            }
        }
    })
}

/// Diagonal Pieri coefficient b_d(lambda), odd family only: -1 with a
/// removable special box, +1 with an addable special box, 0 otherwise.
pub fn pieri_b(lambda: &Partition, ctx: &HookContext) -> Rat {
    let d = ctx.d();
    let special = |boxes: &[(usize, usize)]| {
        boxes
            .iter()
            .any(|&(i, j)| i as i64 - j as i64 == d)
    };
    let removable = special(&lambda.removable_boxes());
    let addable = special(&lambda.addable_boxes());
    // For fixed d both would lie on the single diagonal i - j = d, which a
    // staircase boundary crosses once; guard the case analysis.
    assert!(
        !(removable && addable),
        "partition {lambda} has both removable and addable special boxes"
    );
    if removable {
        rat_int(-1)
    } else if addable {
        rat_int(1)
    } else {
        Rat::zero()
    }
}

/// Number of boxes of nu outside lambda lying strictly below the diagonal
/// `i - j = d`.  Each such box flips the sign of the alternated product
/// `prod_{(i,j) in nu} (x_i - y_j)`, so the Weyl-type formulas carry the
/// factor `(-1)^{excess_count}`.
pub fn excess_count(lambda: &Partition, nu: &Partition, ctx: &HookContext) -> usize {
    let d = ctx.d();
    nu.boxes()
        .iter()
        .filter(|&&(i, j)| j > lambda.part(i) && i as i64 - j as i64 > d)
        .count()
}

/// `(s(lambda), t(lambda))`: counts of boxes of lambda resp. pi_lambda with
/// `i - j > d` (odd family) or `i - j >= d` (even family).
pub fn region_counts(
    lambda: &Partition,
    ctx: &HookContext,
    family: Family,
) -> Result<(usize, usize)> {
    let d = ctx.d();
    let test = |i: usize, j: usize| {
        let v = i as i64 - j as i64;
        match family {
            Family::Odd => v > d,
            Family::Even => v >= d,
        }
    };
    let s = lambda.boxes().iter().filter(|&&(i, j)| test(i, j)).count();
    let t = pi_region(lambda, ctx)?
        .iter()
        .filter(|&&(i, j)| test(i, j))
        .count();
    Ok((s, t))
}

// ---------------------------------------------------------------------------
// Enumeration

/// All partitions contained in the m x n rectangle.
pub fn partitions_in_rect(m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(row: usize, m: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == m {
            out.push(Partition::new(current.clone()).unwrap());
            return;
        }
        let hi = if row == 0 { n } else { current[row - 1] };
        for v in 0..=hi {
            current.push(v);
            rec(row + 1, m, n, current, out);
            current.pop();
        }
    }
    rec(0, m, n, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All partitions in the fat (m,n)-hook with at most `max_size` boxes.
pub fn partitions_in_hook(ctx: &HookContext, max_size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        row: usize,
        remaining: usize,
        ctx: &HookContext,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::new(current.clone()).unwrap());
        let hi = if row == 0 {
            remaining
        } else {
            current[row - 1].min(remaining)
        };
        // Rows beyond m are capped at n by the fat hook condition.
        let hi = if row >= ctx.m { hi.min(ctx.n) } else { hi };
        for v in (1..=hi).rev() {
            current.push(v);
            rec(row + 1, remaining - v, ctx, current, out);
            current.pop();
        }
    }
    rec(0, max_size, ctx, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Frobenius coordinates (alphas, betas): arm and leg lengths along the
/// diagonal.
pub fn frobenius(lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    let conj = lambda.conjugate();
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    let mut i = 1;
    while lambda.part(i) >= i {
        alphas.push(lambda.part(i) - i);
        betas.push(conj.part(i) - i);
        i += 1;
    }
    (alphas, betas)
}

/// Brute-force counts over the m x n rectangle: symmetric diagrams, and
/// diagrams of Frobenius shape (a_1..a_r | a_1+1..a_r+1).
pub fn special_counts(m: usize, n: usize) -> (usize, usize) {
    let all = partitions_in_rect(m, n);
    let sym = all.iter().filter(|p| **p == p.conjugate()).count();
    let frob_shift = all
        .iter()
        .filter(|p| {
            let (a, b) = frobenius(p);
            a.iter().zip(&b).all(|(ai, bi)| *bi == ai + 1)
        })
        .count();
    (sym, frob_shift)
}
