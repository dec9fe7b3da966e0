use bases::{apply_e_gamma, big_omega_of_matrix, omega, omega_lambda};
use combinatorics::{partitions_up_to, ExponentMatrix, Partition};
use fockspace::{FockContext, FockVector, Sign};
use mzops::{d_minus, d_plus, expand_b_on_egamma, omega_bracket_terms, pb_minus, pb_plus};
use proptest::prelude::*;

fn shape_strategy(n: usize, max_size: usize) -> impl Strategy<Value = Partition> {
    let shapes = partitions_up_to(max_size, n);
    (0..shapes.len()).prop_map(move |k| shapes[k].clone())
}

fn lower_strategy(n: usize, max_entry: i64) -> impl Strategy<Value = ExponentMatrix> {
    let slots = n * (n - 1) / 2;
    proptest::collection::vec(0..=max_entry, slots).prop_map(move |entries| {
        let mut g = ExponentMatrix::zero(n);
        let mut it = entries.into_iter();
        for k in 2..=n {
            for j in 1..k {
                g.set(k, j, it.next().expect("one entry per slot"));
            }
        }
        g
    })
}

fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn egamma_expansion_matches_direct_action(
        p in 1u32..=3,
        lam in shape_strategy(3, 3),
        gamma in lower_strategy(3, 1),
        ell in 1usize..=3,
        sign in sign_strategy(),
    ) {
        prop_assume!(lam.length() <= p as usize);
        let ctx = FockContext::new(3, p).unwrap();
        let start = apply_e_gamma(&ctx, &gamma, &omega_lambda(&ctx, &lam).unwrap());
        let e = expand_b_on_egamma(&ctx, sign, ell, &gamma, &lam).unwrap();
        let direct = ctx.apply_b(sign, ell, &start);
        prop_assert!(ctx.equals(&e.to_vector(&ctx).unwrap(), &direct).unwrap());
    }

    #[test]
    fn bracket_terms_rebuild_big_omega(gamma in lower_strategy(3, 2), diag in proptest::collection::vec(0i64..=2, 3)) {
        let mut g = gamma;
        for (k, d) in diag.iter().enumerate() {
            g.set(k + 1, k + 1, *d);
        }
        prop_assume!(g.shape().is_ok());
        let ctx = FockContext::new(3, 3).unwrap();
        let mut sum = FockVector::zero();
        for (c, t) in omega_bracket_terms(&g).unwrap() {
            sum.add_scaled(&c, &omega(&ctx, &t).unwrap());
        }
        prop_assert_eq!(sum, big_omega_of_matrix(&ctx, &g).unwrap());
    }

    #[test]
    fn projected_generators_scale_the_shifted_vector(
        p in 1u32..=3,
        lam in shape_strategy(3, 4),
        j in 1usize..=3,
    ) {
        prop_assume!(lam.length() <= p as usize);
        let ctx = FockContext::new(3, p).unwrap();
        let hw = omega_lambda(&ctx, &lam).unwrap();
        for (delta, got, d) in [
            (1, pb_plus(&ctx, j, &hw).unwrap(), d_plus(&ctx, &lam, j)),
            (-1, pb_minus(&ctx, j, &hw).unwrap(), d_minus(&ctx, &lam, j)),
        ] {
            let expected = match lam.shifted(j, delta) {
                Some(s) => omega_lambda(&ctx, &s).unwrap().scaled(&d),
                None => FockVector::zero(),
            };
            prop_assert!(ctx.equals(&got, &expected).unwrap());
        }
    }
}
