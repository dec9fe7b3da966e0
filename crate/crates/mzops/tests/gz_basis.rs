use bases::{big_omega, pbw_scalar};
use combinatorics::{enumerate_ssyt, exponent_matrix, partitions_of, Partition, YoungTableau};
use exactlinalg::{rat, rat_int, RatMatrix, Rational};
use fockspace::{FockContext, FockVector};
use mzops::{
    bracket_expansion, closed_form_expansion, closed_form_terms, gz_from_creation_polynomials,
    gz_omega_expansion, gz_vector, hw_chain, hw_chain_coefficient, transition_matrix, y_lower,
};

fn tab(rows: &[&[usize]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn rows_of(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.to_rows()
}

fn worked_tableaux() -> [YoungTableau; 3] {
    [
        tab(&[&[1, 1, 3, 3], &[2, 2]]),
        tab(&[&[1, 1, 2, 3], &[2, 3]]),
        tab(&[&[1, 1, 2, 2], &[3, 3]]),
    ]
}

#[test]
fn worked_weight_block() {
    for p in [2, 3] {
        let ctx = FockContext::new(3, p).unwrap();
        let blocks = transition_matrix(&ctx, &shape(&[4, 2])).unwrap();
        let block = blocks
            .iter()
            .find(|b| b.content == vec![1, 1, 2, 2, 3, 3])
            .unwrap();
        assert_eq!(block.tableaux, worked_tableaux().to_vec());
        assert_eq!(
            rows_of(&block.matrix),
            vec![
                vec![rat(-1, 2), rat(-1, 2), rat(-1, 12)],
                vec![rat_int(0), rat(-1, 3), rat(-1, 12)],
                vec![rat_int(0), rat_int(0), rat(-1, 12)],
            ]
        );
        assert_eq!(
            rows_of(&block.inverse),
            vec![
                vec![rat_int(-2), rat_int(3), rat_int(-1)],
                vec![rat_int(0), rat_int(-3), rat_int(3)],
                vec![rat_int(0), rat_int(0), rat_int(-12)],
            ]
        );
    }
}

#[test]
fn worked_omega_expansions() {
    let ctx = FockContext::new(3, 2).unwrap();
    let [a1, a2, a3] = worked_tableaux();
    let omegas: Vec<FockVector> = [&a1, &a2, &a3]
        .iter()
        .map(|a| big_omega(&ctx, a).unwrap())
        .collect();
    let combo = |c: [i64; 3]| {
        let mut v = FockVector::zero();
        for (k, x) in c.iter().enumerate() {
            v.add_scaled(&rat_int(*x), &omegas[k]);
        }
        v
    };
    let v1 = gz_vector(&ctx, &a1).unwrap().vector;
    let v2 = gz_vector(&ctx, &a2).unwrap().vector;
    let v3 = gz_vector(&ctx, &a3).unwrap().vector;
    assert!(ctx.equals(&v1, &combo([-6, -12, -2])).unwrap());
    assert!(!ctx.equals(&v1, &combo([-6, -1, -2])).unwrap());
    assert!(ctx.equals(&v2, &combo([0, -8, -2])).unwrap());
    assert!(ctx.equals(&v3, &combo([0, 0, -2])).unwrap());

    let expansion = gz_omega_expansion(&ctx, &a1).unwrap();
    assert_eq!(
        expansion,
        vec![
            (rat_int(-6), a1.clone()),
            (rat_int(-12), a2.clone()),
            (rat_int(-2), a3.clone())
        ]
    );
    assert!(ctx
        .equals(&gz_from_creation_polynomials(&ctx, &a3).unwrap(), &v3)
        .unwrap());
}

fn bracket_terms(ctx: &FockContext, a: &YoungTableau) -> Vec<(i64, Vec<Vec<usize>>)> {
    bracket_expansion(ctx, a)
        .unwrap()
        .into_iter()
        .map(|(c, t)| {
            assert!(c.is_integer());
            (c.to_integer().try_into().unwrap(), t.rows().to_vec())
        })
        .collect()
}

#[test]
fn worked_bracket_expansions() {
    let ctx = FockContext::new(3, 2).unwrap();
    let [a1, a2, a3] = worked_tableaux();
    let mut third = bracket_terms(&ctx, &a3);
    third.sort();
    let mut expected3 = vec![
        (-16, vec![vec![1, 1, 2, 2], vec![3, 3]]),
        (-16, vec![vec![2, 2, 1, 1], vec![3, 3]]),
        (-16, vec![vec![1, 2, 1, 2], vec![3, 3]]),
        (-16, vec![vec![1, 2, 2, 1], vec![3, 3]]),
        (-16, vec![vec![2, 1, 1, 2], vec![3, 3]]),
        (-16, vec![vec![2, 1, 2, 1], vec![3, 3]]),
    ];
    expected3.sort();
    assert_eq!(third, expected3);

    let mut second = bracket_terms(&ctx, &a2);
    second.sort();
    let mut expected2 = vec![
        (-16, vec![vec![1, 1, 2, 2], vec![3, 3]]),
        (16, vec![vec![2, 2, 1, 1], vec![3, 3]]),
        (-16, vec![vec![1, 1, 2, 3], vec![2, 3]]),
        (-16, vec![vec![1, 1, 3, 2], vec![2, 3]]),
        (-16, vec![vec![1, 2, 1, 3], vec![2, 3]]),
        (-16, vec![vec![1, 2, 3, 1], vec![2, 3]]),
        (-16, vec![vec![1, 1, 2, 3], vec![3, 2]]),
        (-16, vec![vec![1, 1, 3, 2], vec![3, 2]]),
        (-16, vec![vec![2, 1, 1, 3], vec![3, 2]]),
        (-16, vec![vec![2, 1, 3, 1], vec![3, 2]]),
    ];
    expected2.sort();
    assert_eq!(second, expected2);

    let first = bracket_terms(&ctx, &a1);
    assert_eq!(first.len(), 15);
    assert!(first.contains(&(-48, vec![vec![1, 1, 3, 3], vec![2, 2]])));
}

#[test]
fn y_operators_for_rank_three() {
    let ctx = FockContext::new(3, 3).unwrap();
    for lam in [shape(&[2, 1]), shape(&[3, 1, 1]), shape(&[2, 2])] {
        let hw = hw_chain(&ctx, &lam).unwrap();
        let mut gl2_highest = vec![hw.clone(), ctx.gl(3, 2, &hw), ctx.gl(3, 1, &hw)];
        gl2_highest.retain(|v| !v.is_empty() && mzops::is_gl_highest(&ctx, 2, v).unwrap());
        for v in &gl2_highest {
            let w = ctx.weight_of(v).unwrap();
            let y31 = y_lower(&ctx, 3, 1, v).unwrap();
            let expected =
                ctx.gl(3, 1, v)
                    .scaled(&(w.h(1) - w.h(2)))
                    .plus(&ctx.gl(2, 1, &ctx.gl(3, 2, v)));
            assert_eq!(y31, expected);
            assert_eq!(y_lower(&ctx, 3, 2, v).unwrap(), ctx.gl(3, 2, v));
        }
    }
}

#[test]
fn y_rejects_vectors_that_are_not_highest() {
    let ctx = FockContext::new(3, 2).unwrap();
    let v = FockVector::word(vec![2]);
    assert!(y_lower(&ctx, 3, 1, &v).is_err());
}

#[test]
fn chain_is_scaled_highest_weight_vector() {
    for n in 1..=3 {
        for p in 1..=3 {
            let ctx = FockContext::new(n, p).unwrap();
            for d in 0..=4 {
                for lam in partitions_of(d, n) {
                    if lam.length() > p as usize {
                        continue;
                    }
                    let chain = hw_chain(&ctx, &lam).unwrap();
                    let omega = bases::omega_lambda(&ctx, &lam).unwrap();
                    let d_lam = hw_chain_coefficient(&ctx, &lam);
                    assert!(
                        ctx.equals(&chain, &omega.scaled(&d_lam)).unwrap(),
                        "n={n} p={p} λ={lam}"
                    );
                }
            }
        }
    }
}

#[test]
fn highest_tableau_gives_scaled_chain() {
    let ctx = FockContext::new(3, 2).unwrap();
    let lam = shape(&[3, 1]);
    let v = gz_vector(&ctx, &YoungTableau::highest(&lam)).unwrap();
    let omega = bases::omega_lambda(&ctx, &lam).unwrap();
    assert!(ctx
        .equals(&v.vector, &omega.scaled(&hw_chain_coefficient(&ctx, &lam)))
        .unwrap());
}

#[test]
fn gz_vectors_are_orthogonal() {
    for p in [2, 3] {
        let ctx = FockContext::new(3, p).unwrap();
        for d in 0..=4 {
            for lam in partitions_of(d, 3) {
                if lam.length() > p as usize {
                    continue;
                }
                let vs: Vec<_> = enumerate_ssyt(&lam, 3)
                    .iter()
                    .map(|a| gz_vector(&ctx, a).unwrap())
                    .collect();
                for (i, a) in vs.iter().enumerate() {
                    assert!(a.norm2 > rat_int(0));
                    for b in &vs[i + 1..] {
                        assert_eq!(ctx.inner_product(&a.vector, &b.vector).unwrap(), rat_int(0));
                    }
                }
            }
        }
    }
}

#[test]
fn closed_form_matches_solved_rows() {
    for p in [2, 3] {
        let ctx = FockContext::new(3, p).unwrap();
        for d in 1..=4 {
            for lam in partitions_of(d, 3) {
                if lam.length() > p as usize {
                    continue;
                }
                for block in transition_matrix(&ctx, &lam).unwrap() {
                    for (r, a) in block.tableaux.iter().enumerate() {
                        let closed = closed_form_expansion(&ctx, a).unwrap();
                        for (k, b) in block.tableaux.iter().enumerate() {
                            let gb = exponent_matrix(b, 3).unwrap();
                            let c = closed
                                .terms()
                                .iter()
                                .find(|t| t.gamma == gb)
                                .map(|t| t.coeff.clone())
                                .unwrap_or_else(|| rat_int(0));
                            assert_eq!(&c, block.matrix.get(r, k), "λ={lam}\n{}", a.to_text());
                        }
                        for t in closed_form_terms(&ctx, a).unwrap() {
                            let e = bases::apply_e_gamma(
                                &ctx,
                                &t.gamma,
                                &bases::omega_lambda(&ctx, &lam).unwrap(),
                            );
                            assert_eq!(ctx.is_zero(&e).unwrap(), t.vanishes);
                            if !t.vanishes {
                                let scaled = big_omega(
                                    &ctx,
                                    &combinatorics::tableau_from_matrix(&t.gamma).unwrap(),
                                )
                                .unwrap()
                                .scaled(&pbw_scalar(&lam, &t.gamma));
                                assert!(ctx.equals(&e, &scaled).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn single_box_block() {
    let ctx = FockContext::new(3, 1).unwrap();
    let blocks = transition_matrix(&ctx, &shape(&[1])).unwrap();
    let entries: Vec<_> = blocks.iter().map(|b| rows_of(&b.matrix)).collect();
    assert_eq!(
        entries,
        vec![
            vec![vec![rat_int(1)]],
            vec![vec![rat_int(1)]],
            vec![vec![rat_int(2)]]
        ]
    );
}

#[test]
fn too_many_rows_gives_no_blocks() {
    let ctx = FockContext::new(3, 2).unwrap();
    assert!(transition_matrix(&ctx, &shape(&[1, 1, 1]))
        .unwrap()
        .is_empty());
}
