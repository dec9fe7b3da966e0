use bases::{pbw_identity_sides, verify_gl_action_on_big_omega};
use combinatorics::ExponentMatrix;
use fockspace::FockContext;
use proptest::prelude::*;

/// Lower triangular 3×3 matrices with entries in 0..=max_entry whose column
/// sums are weakly decreasing.
fn lower_with_shape(max_entry: i64) -> impl Strategy<Value = ExponentMatrix> {
    proptest::collection::vec(0..=max_entry, 6)
        .prop_map(|e| {
            ExponentMatrix::from_rows(vec![
                vec![e[0], 0, 0],
                vec![e[1], e[2], 0],
                vec![e[3], e[4], e[5]],
            ])
            .expect("square")
        })
        .prop_filter("column sums form a partition", |g| g.shape().is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gl_action_on_big_omega(p in 1u32..=3, gamma in lower_with_shape(2)) {
        let ctx = FockContext::new(3, p).unwrap();
        let report = verify_gl_action_on_big_omega(&ctx, &gamma).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn lowering_monomial_is_scaled_big_omega(p in 1u32..=3, gamma in lower_with_shape(2)) {
        let ctx = FockContext::new(3, p).unwrap();
        let (lhs, rhs) = pbw_identity_sides(&ctx, &gamma).unwrap();
        prop_assert!(ctx.equals(&lhs, &rhs).unwrap());
    }
}
