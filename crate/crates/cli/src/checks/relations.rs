use exactlinalg::{psd_check, rat, rat_int};
use fockspace::{FockContext, FockVector, Sign, Word};

use super::Check;
use crate::words::contents;
use crate::Result;

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn b(ctx: &FockContext, s: Sign, j: usize, v: &FockVector) -> FockVector {
    ctx.apply_b(s, j, v)
}

/// [{B_i^ξ, B_j^η}, B_l^ε] − (ε−η)δ_jl B_i^ξ − (ε−ξ)δ_il B_j^η applied to v.
fn triple_defect(
    ctx: &FockContext,
    (xi, i): (Sign, usize),
    (eta, j): (Sign, usize),
    (eps, l): (Sign, usize),
    v: &FockVector,
) -> FockVector {
    let anti =
        |u: &FockVector| b(ctx, xi, i, &b(ctx, eta, j, u)).plus(&b(ctx, eta, j, &b(ctx, xi, i, u)));
    let mut out = anti(&b(ctx, eps, l, v)).minus(&b(ctx, eps, l, &anti(v)));
    if j == l {
        out.add_scaled(&rat_int(-(eps.value() - eta.value())), &b(ctx, xi, i, v));
    }
    if i == l {
        out.add_scaled(&rat_int(-(eps.value() - xi.value())), &b(ctx, eta, j, v));
    }
    out
}

pub fn triple_relations(ctx: &FockContext, words: &[Word]) -> Result<Check> {
    let mut check = Check::new(
        "triple relations",
        "[{B_i^ξ, B_j^η}, B_l^ε] = (ε−η)δ_jl B_i^ξ + (ε−ξ)δ_il B_j^η",
    );
    let n = ctx.n();
    for w in words {
        let v = FockVector::word(w.clone());
        for xi in SIGNS {
            for eta in SIGNS {
                for eps in SIGNS {
                    for i in 1..=n {
                        for j in 1..=n {
                            for l in 1..=n {
                                let d = triple_defect(ctx, (xi, i), (eta, j), (eps, l), &v);
                                check.record(ctx.is_zero(&d)?, || {
                                    format!(
                                        "word {w:?}, (B_{i}^{}, B_{j}^{}, B_{l}^{})",
                                        xi.symbol(),
                                        eta.symbol(),
                                        eps.symbol()
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(check)
}

pub fn gl_commutators(ctx: &FockContext, words: &[Word]) -> Result<Check> {
    let mut check = Check::new("gl commutators", "[E_ij, E_kl] = δ_jk E_il − δ_il E_kj");
    let n = ctx.n();
    for w in words {
        let v = FockVector::word(w.clone());
        for i in 1..=n {
            for j in 1..=n {
                let eij = ctx.gl(i, j, &v);
                for k in 1..=n {
                    for l in 1..=n {
                        let lhs = ctx.gl(i, j, &ctx.gl(k, l, &v)).minus(&ctx.gl(k, l, &eij));
                        let mut rhs = FockVector::zero();
                        if j == k {
                            rhs = rhs.plus(&ctx.gl(i, l, &v));
                        }
                        if i == l {
                            rhs = rhs.minus(&ctx.gl(k, j, &v));
                        }
                        check.record(ctx.equals(&lhs, &rhs)?, || {
                            format!("word {w:?}, [E_{i}{j}, E_{k}{l}]")
                        });
                    }
                }
            }
        }
    }
    Ok(check)
}

pub fn gl_generators(ctx: &FockContext, words: &[Word]) -> Result<Check> {
    let mut check = Check::new("gl generators", "E_ij = ½{B_i^+, B_j^−}");
    let n = ctx.n();
    for w in words {
        let v = FockVector::word(w.clone());
        for i in 1..=n {
            for j in 1..=n {
                let anti = ctx
                    .create(i, &ctx.annihilate(j, &v))
                    .plus(&ctx.annihilate(j, &ctx.create(i, &v)))
                    .scaled(&rat(1, 2));
                check.record(ctx.equals(&ctx.gl(i, j, &v), &anti)?, || {
                    format!("word {w:?}, E_{i}{j}")
                });
            }
        }
    }
    Ok(check)
}

/// ⟨B_j^+ u, w⟩ = ⟨u, B_j^− w⟩ for words u, w with |w| = |u| + 1 ≤ deg.
pub fn adjointness(ctx: &FockContext, words: &[Word]) -> Result<Check> {
    let mut check = Check::new("adjointness", "⟨B_j^+ u, w⟩ = ⟨u, B_j^− w⟩");
    for u in words {
        for w in words.iter().filter(|w| w.len() == u.len() + 1) {
            let (uv, wv) = (FockVector::word(u.clone()), FockVector::word(w.clone()));
            for j in 1..=ctx.n() {
                let lhs = ctx.inner_product(&ctx.create(j, &uv), &wv)?;
                let rhs = ctx.inner_product(&uv, &ctx.annihilate(j, &wv))?;
                check.record(lhs == rhs, || format!("u {u:?}, w {w:?}, j {j}"));
            }
        }
    }
    Ok(check)
}

/// Every weight-space Gram matrix of degree ≤ deg is positive semidefinite.
pub fn gram_positive(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new("gram positivity", "⟨v, v⟩ ≥ 0 on every weight space");
    for d in 0..=deg {
        for content in contents(ctx.n(), d) {
            let report = psd_check(&ctx.gram(&content)?)?;
            check.record(report.psd, || {
                format!("content {content:?}, witness {:?}", report.witness)
            });
        }
    }
    Ok(check)
}
