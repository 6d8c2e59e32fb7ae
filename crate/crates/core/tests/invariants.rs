//! Property tests for structural invariants: randomized partitions and
//! polynomials rather than fixed examples.

use proptest::prelude::*;

use sjlab_core::laurent::{
    act, exact_divide, invert_variable, sym_group, uv_to_xy, xy_to_uv, LaurentPoly, VarSpace,
};
use sjlab_core::partition::{
    admissible_nus, excess_count, exponent_data, pi_partition, region_counts, HookContext,
    Partition,
};
use sjlab_core::rational::rat_int;
use sjlab_core::superschur::{is_sym_invariant, super_schur_jt};
use sjlab_core::Family;

fn arb_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition::new(parts).unwrap()
    })
}

fn arb_hook_partition() -> impl Strategy<Value = (Partition, HookContext)> {
    (1..=2usize, 1..=2usize, arb_partition(4, 5)).prop_filter_map(
        "partition must fit the fat hook",
        |(m, n, lambda)| {
            let ctx = HookContext::new(m, n);
            lambda.in_fat_hook(&ctx).then_some((lambda, ctx))
        },
    )
}

fn arb_poly(space: VarSpace) -> impl Strategy<Value = LaurentPoly> {
    arb_poly_with_exponents(space, -3..=3)
}

fn arb_ordinary_poly(space: VarSpace) -> impl Strategy<Value = LaurentPoly> {
    arb_poly_with_exponents(space, 0..=3)
}

fn arb_poly_with_exponents(
    space: VarSpace,
    range: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = LaurentPoly> {
    let len = space.len();
    proptest::collection::vec(
        (proptest::collection::vec(range, len), -5i64..=5),
        0..=4,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(LaurentPoly::zero(space), |acc, (exps, c)| {
            acc.add(&LaurentPoly::monomial(space, exps, rat_int(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution((lambda, _) in arb_hook_partition()) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.size(), lambda.size());
    }

    #[test]
    fn exponent_data_is_nonnegative_with_strict_segments((lambda, ctx) in arb_hook_partition()) {
        for nu in admissible_nus(&lambda, &ctx).unwrap() {
            let data = exponent_data(&lambda, &nu, &ctx).unwrap();
            for &l in &data.l {
                prop_assert!(l >= 0);
            }
            for &k in &data.k {
                prop_assert!(k >= 0);
            }
            // Head and tail segments are separately strictly decreasing.
            for w in data.l[..data.i_lam].windows(2) {
                prop_assert!(w[0] > w[1]);
            }
            for w in data.l[data.i_lam..].windows(2) {
                prop_assert!(w[0] > w[1]);
            }
        }
    }

    #[test]
    fn admissible_nus_lie_between_the_truncation_and_pi((lambda, ctx) in arb_hook_partition()) {
        let pi = pi_partition(&lambda, &ctx).unwrap();
        let truncated = Partition::new(
            (1..=ctx.m).map(|i| lambda.part(i).min(ctx.n)).collect(),
        )
        .unwrap();
        for nu in admissible_nus(&lambda, &ctx).unwrap() {
            prop_assert!(pi.contains(&nu), "nu={} pi={}", nu, pi);
            prop_assert!(nu.contains(&truncated), "nu={} lambda cap Pi={}", nu, truncated);
        }
    }

    #[test]
    fn sign_count_balance((lambda, ctx) in arb_hook_partition()) {
        // The corrected balance s + c(pi_lambda) = t + b behind the sign of
        // the Weyl-type formulas.
        let (s, t) = region_counts(&lambda, &ctx, Family::Odd).unwrap();
        let pi = pi_partition(&lambda, &ctx).unwrap();
        let c = excess_count(&lambda, &pi, &ctx);
        let b = lambda.b_tail(&ctx);
        prop_assert_eq!(s + c, t + b);
    }

    #[test]
    fn super_schur_is_a_symmetric_polynomial((lambda, ctx) in arb_hook_partition()) {
        let sp = super_schur_jt(&lambda, &ctx).unwrap();
        prop_assert!(sp.is_polynomial());
        prop_assert!(is_sym_invariant(&sp));
        if let Some((_, coeff)) = sp.leading() {
            let b = lambda.b_tail(&ctx);
            let expected = if b % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            prop_assert_eq!(coeff.clone(), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_action_is_multiplicative_on_products(
        f in arb_poly(VarSpace::uv(2, 1)),
        g in arb_poly(VarSpace::uv(2, 1)),
    ) {
        for w in sym_group(2, 1) {
            prop_assert_eq!(act(&w, &f.mul(&g)), act(&w, &f).mul(&act(&w, &g)));
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(
        f in arb_poly(VarSpace::uv(1, 1)),
        g in arb_poly(VarSpace::uv(1, 1)),
    ) {
        prop_assume!(!g.is_zero());
        let quotient = exact_divide(&f.mul(&g), &g).unwrap();
        prop_assert_eq!(quotient, f);
    }

    #[test]
    fn uv_to_xy_roundtrips(f in arb_ordinary_poly(VarSpace::uv(2, 1))) {
        let xy = uv_to_xy(&f);
        prop_assert_eq!(xy_to_uv(&xy).unwrap(), f);
    }

    #[test]
    fn variable_inversion_is_an_involution(f in arb_poly(VarSpace::xy(2, 1))) {
        prop_assert_eq!(invert_variable(&invert_variable(&f, 0), 0), f);
    }
}
