use bases::{
    big_omega, big_omega_by_row_group, big_omega_of_matrix, creation_dependency, omega,
    omega_by_column_group, omega_lambda, pbw_basis, pbw_identity_sides, pbw_weight_ranks,
    shape_factorial, verify_gl_action_on_big_omega, weight_ranks, GROUP_BOUND,
};
use combinatorics::{enumerate_ssyt, exponent_matrix, ExponentMatrix, Partition, YoungTableau};
use exactlinalg::{rat, rat_int, Rational};
use fockspace::{FockContext, FockVector};

fn tab(rows: &[&[usize]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn bracket(ctx: &FockContext, i: usize, j: usize, v: &FockVector) -> FockVector {
    ctx.create(i, &ctx.create(j, v))
        .minus(&ctx.create(j, &ctx.create(i, v)))
}

fn anticommutator_plus_minus(ctx: &FockContext, i: usize, j: usize, v: &FockVector) -> FockVector {
    ctx.create(i, &ctx.annihilate(j, v))
        .plus(&ctx.annihilate(j, &ctx.create(i, v)))
}

fn creations(ctx: &FockContext, letters: &[usize], v: &FockVector) -> FockVector {
    letters
        .iter()
        .rev()
        .fold(v.clone(), |acc, &j| ctx.create(j, &acc))
}

#[test]
fn big_omega_of_worked_tableau_has_six_terms_of_weight_eight() {
    for p in 1..=3 {
        let ctx = FockContext::new(3, p).unwrap();
        let a = tab(&[&[1, 1, 3, 3], &[2, 2]]);
        let arrangements: [&[usize]; 6] = [
            &[1, 1, 3, 3],
            &[1, 3, 1, 3],
            &[3, 1, 1, 3],
            &[1, 3, 3, 1],
            &[3, 1, 3, 1],
            &[3, 3, 1, 1],
        ];
        let mut via_omega = FockVector::zero();
        for row in arrangements {
            via_omega.add_scaled(&rat_int(8), &omega(&ctx, &tab(&[row, &[2, 2]])).unwrap());
        }

        let v0 = FockVector::vacuum();
        let b11 = creations(&ctx, &[1, 1], &v0);
        let b13 = creations(&ctx, &[1, 3], &v0);
        let b31 = creations(&ctx, &[3, 1], &v0);
        let b33 = creations(&ctx, &[3, 3], &v0);
        let mixed = |first: (usize, usize), second: (usize, usize), tail: &FockVector| {
            bracket(
                &ctx,
                first.0,
                first.1,
                &bracket(&ctx, second.0, second.1, tail),
            )
        };
        let mut via_brackets = FockVector::zero();
        for term in [
            mixed((1, 2), (1, 2), &b33),
            mixed((1, 2), (3, 2), &b13),
            mixed((3, 2), (1, 2), &b13),
            mixed((1, 2), (3, 2), &b31),
            mixed((3, 2), (1, 2), &b31),
            mixed((3, 2), (3, 2), &b11),
        ] {
            via_brackets.add_scaled(&rat_int(8), &term);
        }

        let big = big_omega(&ctx, &a).unwrap();
        assert_eq!(big, via_omega, "p = {p}");
        assert_eq!(big, via_brackets, "p = {p}");
        assert_eq!(big, big_omega_by_row_group(&ctx, &a, GROUP_BOUND).unwrap());
    }
}

#[test]
fn lowering_the_worked_highest_weight_vector() {
    let ctx = FockContext::new(3, 2).unwrap();
    let lam = shape(&[4, 2]);
    let g = ExponentMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 2, 0], vec![2, 0, 0]]).unwrap();
    let lhs = ctx.gl_power(3, 1, 2, &omega_lambda(&ctx, &lam).unwrap());

    let v0 = FockVector::vacuum();
    let mut rhs = creations(&ctx, &[1, 1], &v0);
    rhs = bracket(&ctx, 1, 2, &bracket(&ctx, 1, 2, &rhs));
    rhs = anticommutator_plus_minus(&ctx, 3, 1, &anticommutator_plus_minus(&ctx, 3, 1, &rhs));
    assert_eq!(lhs, rhs.scaled(&rat_int(12)));

    let (pbw, scaled_big) = pbw_identity_sides(&ctx, &g).unwrap();
    assert_eq!(pbw, lhs);
    assert!(ctx.equals(&pbw, &scaled_big).unwrap());
    assert!(ctx
        .equals(
            &lhs,
            &big_omega(&ctx, &tab(&[&[1, 1, 3, 3], &[2, 2]]))
                .unwrap()
                .scaled(&rat_int(12))
        )
        .unwrap());
}

#[test]
fn highest_big_omega_is_factorial_multiple_of_omega() {
    let ctx = FockContext::new(3, 3).unwrap();
    for parts in [&[2, 1][..], &[3, 1], &[2, 2], &[2, 1, 1], &[3]] {
        let lam = shape(parts);
        let highest = YoungTableau::highest(&lam);
        let scale = Rational::from_integer(shape_factorial(&lam));
        assert_eq!(
            omega_lambda(&ctx, &lam).unwrap(),
            omega(&ctx, &highest).unwrap().scaled(&scale)
        );
        assert_eq!(
            big_omega(&ctx, &highest).unwrap(),
            omega_lambda(&ctx, &lam).unwrap()
        );
    }
}

#[test]
fn two_row_column_vanishes_for_p_one() {
    let ctx = FockContext::new(2, 1).unwrap();
    let v = omega_lambda(&ctx, &shape(&[1, 1])).unwrap();
    assert!(!v.is_empty());
    assert!(ctx.is_zero(&v).unwrap());
    let ctx2 = FockContext::new(2, 2).unwrap();
    assert!(!ctx2
        .is_zero(&omega_lambda(&ctx2, &shape(&[1, 1])).unwrap())
        .unwrap());
}

#[test]
fn omega_routes_agree() {
    let ctx = FockContext::new(3, 2).unwrap();
    for parts in [&[2, 1][..], &[2, 2], &[3, 1], &[2, 1, 1], &[3, 2]] {
        for a in enumerate_ssyt(&shape(parts), 3) {
            assert_eq!(
                omega(&ctx, &a).unwrap(),
                omega_by_column_group(&ctx, &a, GROUP_BOUND).unwrap()
            );
            assert_eq!(
                big_omega(&ctx, &a).unwrap(),
                big_omega_by_row_group(&ctx, &a, GROUP_BOUND).unwrap()
            );
        }
    }
}

#[test]
fn big_omega_depends_only_on_exponent_matrix() {
    let ctx = FockContext::new(3, 2).unwrap();
    let a = tab(&[&[1, 3, 1, 3], &[2, 2]]);
    let b = tab(&[&[3, 3, 1, 1], &[2, 2]]);
    assert_eq!(
        exponent_matrix(&a, 3).unwrap(),
        exponent_matrix(&b, 3).unwrap()
    );
    assert_eq!(big_omega(&ctx, &a).unwrap(), big_omega(&ctx, &b).unwrap());
    assert_ne!(omega(&ctx, &a).unwrap(), omega(&ctx, &b).unwrap());
}

#[test]
fn single_box_lowering() {
    let ctx = FockContext::new(3, 1).unwrap();
    let v = ctx.gl(2, 1, &omega_lambda(&ctx, &shape(&[1])).unwrap());
    assert_eq!(v, FockVector::word(vec![2]));
}

#[test]
fn highest_weight_conditions() {
    for n in 1..=3 {
        for p in 1..=3u32 {
            let ctx = FockContext::new(n, p).unwrap();
            for d in 0..=5 {
                for lam in combinatorics::partitions_of(d, n) {
                    let v = omega_lambda(&ctx, &lam).unwrap();
                    assert_eq!(
                        ctx.is_zero(&v).unwrap(),
                        lam.length() > p as usize,
                        "n={n} p={p} λ={lam:?}"
                    );
                    for i in 1..=n {
                        for j in i + 1..=n {
                            assert!(ctx.is_zero(&ctx.gl(i, j, &v)).unwrap());
                        }
                        let eigen = ctx.half_p() + rat_int(lam.part(i) as i64);
                        assert_eq!(ctx.gl(i, i, &v), v.scaled(&eigen));
                    }
                }
            }
        }
    }
}

#[test]
fn basis_in_low_degree() {
    let ctx = FockContext::new(3, 2).unwrap();
    let zero = pbw_basis(&ctx, 0).unwrap();
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0].vector, FockVector::vacuum());
    let one = pbw_basis(&ctx, 1).unwrap();
    let words: Vec<FockVector> = one.iter().map(|e| e.vector.clone()).collect();
    assert_eq!(
        words,
        vec![
            FockVector::word(vec![1]),
            FockVector::word(vec![2]),
            FockVector::word(vec![3])
        ]
    );
}

#[test]
fn basis_of_shape_four_two_is_independent() {
    let ctx = FockContext::new(3, 2).unwrap();
    let elements: Vec<_> = pbw_basis(&ctx, 6)
        .unwrap()
        .into_iter()
        .filter(|e| e.tableau.shape() == shape(&[4, 2]))
        .collect();
    assert_eq!(elements.len(), 27);
    for e in &elements {
        assert!(
            e.coeff_norm2 > Rational::from_integer(0.into()),
            "{}",
            e.tableau.to_text()
        );
    }
    let tagged: Vec<_> = elements
        .iter()
        .map(|e| (e.vector.contents()[0].clone(), e.vector.clone()))
        .collect();
    let total: usize = weight_ranks(&ctx, &tagged)
        .unwrap()
        .iter()
        .map(|w| w.rank)
        .sum();
    assert_eq!(total, 27);
}

#[test]
fn basis_spans_each_weight_space() {
    for (n, p, d) in [(2, 1, 5), (2, 2, 5), (3, 1, 4), (3, 2, 5), (3, 3, 4)] {
        let ctx = FockContext::new(n, p).unwrap();
        for wr in pbw_weight_ranks(&ctx, d).unwrap() {
            assert_eq!(wr.vectors, wr.dimension, "n={n} p={p} d={d} {wr:?}");
            assert_eq!(wr.rank, wr.dimension, "n={n} p={p} d={d} {wr:?}");
        }
    }
}

fn lower_triangular_with_column_sums(sums: &[i64]) -> Vec<ExponentMatrix> {
    let n = sums.len();
    let mut out = vec![ExponentMatrix::zero(n)];
    for j in 1..=n {
        let mut next = Vec::new();
        for g in &out {
            let mut fill = |g: ExponentMatrix| next.push(g);
            fill_column(g.clone(), j, j, sums[j - 1], n, &mut fill);
        }
        out = next;
    }
    out
}

fn fill_column(
    g: ExponentMatrix,
    j: usize,
    row: usize,
    left: i64,
    n: usize,
    emit: &mut dyn FnMut(ExponentMatrix),
) {
    if row == n {
        emit(g.with_added(row, j, left));
        return;
    }
    for x in 0..=left {
        fill_column(g.with_added(row, j, x), j, row + 1, left - x, n, emit);
    }
}

#[test]
fn lowering_identity_for_all_lower_triangular_exponents() {
    let ctx = FockContext::new(3, 3).unwrap();
    let mut non_semistandard = 0;
    for sums in [[2, 1, 0], [2, 2, 0], [3, 1, 0], [2, 1, 1], [3, 2, 0]] {
        for g in lower_triangular_with_column_sums(&sums) {
            if !combinatorics::is_ssyt_matrix(&g) {
                non_semistandard += 1;
            }
            let (lhs, rhs) = pbw_identity_sides(&ctx, &g).unwrap();
            assert!(ctx.equals(&lhs, &rhs).unwrap(), "{g}");
        }
    }
    assert!(non_semistandard > 0);
}

#[test]
fn diagonal_eigenvalue_example() {
    for p in 1..=3 {
        let ctx = FockContext::new(3, p).unwrap();
        let v = big_omega(&ctx, &tab(&[&[2, 2, 3], &[3, 3]])).unwrap();
        assert_eq!(ctx.gl(3, 3, &v), v.scaled(&(ctx.half_p() + rat_int(3))));
    }
}

#[test]
fn raising_entry_example_in_rank_four() {
    let ctx = FockContext::new(4, 2).unwrap();
    let v = big_omega(&ctx, &tab(&[&[2, 2, 3], &[3, 3]])).unwrap();
    let rhs = big_omega(&ctx, &tab(&[&[2, 2, 3], &[3, 4]]))
        .unwrap()
        .scaled(&rat_int(2))
        .plus(&big_omega(&ctx, &tab(&[&[2, 2, 4], &[3, 3]])).unwrap());
    assert!(ctx.equals(&ctx.gl(4, 3, &v), &rhs).unwrap());
}

#[test]
fn gl_action_on_big_omega_for_many_exponents() {
    let ctx = FockContext::new(3, 2).unwrap();
    let mut checked = 0;
    for sums in [[2, 1, 0], [3, 1, 0], [2, 2, 0], [2, 1, 1]] {
        for g in lower_triangular_with_column_sums(&sums) {
            let report = verify_gl_action_on_big_omega(&ctx, &g).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            checked += report.checked;
        }
    }
    assert!(checked > 100);
}

#[test]
fn power_beyond_entry_vanishes() {
    let ctx = FockContext::new(3, 2).unwrap();
    let g = ExponentMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]).unwrap();
    let base = big_omega_of_matrix(&ctx, &g).unwrap();
    assert!(ctx.is_zero(&ctx.gl_power(3, 1, 3, &base)).unwrap());
    assert!(!ctx.is_zero(&ctx.gl_power(3, 1, 2, &base)).unwrap());
    let expected = big_omega_of_matrix(&ctx, &g.with_added(3, 1, 2).with_added(1, 1, -2))
        .unwrap()
        .scaled(&rat_int(2));
    assert!(ctx
        .equals(&ctx.gl_power(3, 1, 2, &base), &expected)
        .unwrap());
}

#[test]
fn creation_monomials_are_not_a_basis() {
    let ctx = FockContext::new(2, 2).unwrap();
    let found = (2..=4).find_map(|d| creation_dependency(&ctx, d).unwrap());
    let dep = found.expect("a dependent weight space");
    assert!(dep.rank < dep.tableaux.len());
}

#[test]
fn norm_of_single_box() {
    let ctx = FockContext::new(2, 3).unwrap();
    let basis = pbw_basis(&ctx, 1).unwrap();
    for e in basis {
        assert_eq!(e.coeff_norm2, rat(3, 1));
    }
}
