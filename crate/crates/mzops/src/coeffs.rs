use combinatorics::Partition;
use exactlinalg::{rat, rat_int, BigInt, Rational};
use fockspace::FockContext;

/// [x]_2 = x mod 2 in {0, 1}.
pub fn parity(x: i64) -> i64 {
    x.rem_euclid(2)
}

/// (x)_k = x(x+1)⋯(x+k−1).
pub fn pochhammer(x: &Rational, k: usize) -> Rational {
    (0..k).fold(rat_int(1), |acc, t| acc * (x + rat_int(t as i64)))
}

fn sign(exponent: i64) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// λ padded with zeros to length n + 1, so that λ_{n+1} = 0.
fn padded(lambda: &Partition, n: usize) -> Vec<i64> {
    (1..=n + 1).map(|k| lambda.part(k) as i64).collect()
}

/// d_j^+(λ): the coefficient of Ω_{λ+ε_j} in B_j^+ Ω_λ.
pub fn d_plus(ctx: &FockContext, lambda: &Partition, j: usize) -> Rational {
    let n = ctx.n();
    let l = padded(lambda, n);
    let e: i64 = (j..=n)
        .map(|a| (a as i64 + 1) * (l[a - 1] - l[a] + i64::from(a == j)))
        .sum();
    let mut r = rat(sign(e), (l[j - 1] + 1) * j as i64);
    for m in 1..j {
        let x = l[j - 1] - l[m - 1];
        let shift = m as i64 - j as i64;
        r *= rat(x + shift + 1, x + shift + parity(x));
    }
    r
}

/// d_j^−(λ): the coefficient of Ω_{λ−ε_j} in B_j^− Ω_λ.
pub fn d_minus(ctx: &FockContext, lambda: &Partition, j: usize) -> Rational {
    let n = ctx.n();
    let p = ctx.p() as i64;
    let l = padded(lambda, n);
    let lj = l[j - 1];
    let e: i64 = (j..=n).map(|a| (a as i64 + 1) * (l[a - 1] - l[a])).sum();
    let lead = lj * j as i64 * (lj + n as i64 - j as i64 + parity(lj) * (p - n as i64));
    let mut r = rat_int(sign(e) * lead);
    for m in j + 1..=n {
        let x = lj - l[m - 1];
        let shift = m as i64 - j as i64;
        r *= rat(x + shift - 1, x + shift - parity(x));
    }
    r
}

/// c_j^+(λ)², the squared matrix element of B_j^+ between normalized
/// highest weight vectors; equals d_j^+(λ) d_j^−(λ+ε_j).
pub fn c_plus_squared(ctx: &FockContext, lambda: &Partition, j: usize) -> Rational {
    let n = ctx.n();
    let p = ctx.p() as i64;
    let l = padded(lambda, n);
    let lj = l[j - 1];
    let mut r = rat_int(1);
    for m in 1..j {
        let shift = m as i64 - j as i64;
        r *= rat(lj - l[m - 1] + shift + 1, lj - l[m - 1] + shift);
    }
    r *= rat_int(lj + n as i64 + 1 - j as i64 + parity(lj + 1) * (p - n as i64));
    for m in (1..=n).filter(|&m| m != j) {
        let x = lj - l[m - 1];
        let shift = m as i64 - j as i64;
        r *= rat(x + shift, x + shift + parity(x));
    }
    r
}

/// c_j^−(λ)² = c_j^+(λ−ε_j)², or zero when λ−ε_j is not a partition.
pub fn c_minus_squared(ctx: &FockContext, lambda: &Partition, j: usize) -> Rational {
    match lambda.shifted(j, -1) {
        Some(mu) => c_plus_squared(ctx, &mu, j),
        None => rat_int(0),
    }
}

/// d(λ) with (z_n^+)^{λ_n} ⋯ (z_1^+)^{λ_1} v_0 = d(λ) Ω_λ.
pub fn hw_chain_coefficient(ctx: &FockContext, lambda: &Partition) -> Rational {
    let n = ctx.n();
    let l = padded(lambda, n);
    let mut r = rat_int(1);
    for j in 1..=n {
        let lj = l[j - 1];
        let ji = j as i64;
        let e = (ji + 1) * lj * (lj + 1) / 2 + lj * (ji - 1);
        let fact: i64 = (1..=lj).product();
        r *= Rational::new(
            sign(e).into(),
            BigInt::from(fact) * BigInt::from(ji).pow(lj as u32),
        );
        for k in 0..lj {
            for m in 1..j {
                let x = k - l[m - 1];
                r *= rat_int(x - ji + m as i64 + 1 - parity(x));
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parity_of_negative_numbers() {
        assert_eq!(parity(-3), 1);
        assert_eq!(parity(-4), 0);
        assert_eq!(parity(5), 1);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat_int(3), 0), rat_int(1));
        assert_eq!(pochhammer(&rat_int(3), 3), rat_int(60));
        assert_eq!(pochhammer(&rat_int(-1), 2), rat_int(0));
    }

    #[test]
    fn first_creation_on_vacuum() {
        let ctx = FockContext::new(3, 2).unwrap();
        assert_eq!(d_plus(&ctx, &Partition::empty(), 1), rat_int(1));
    }

    #[test]
    fn special_value_of_d_minus() {
        for n in 1..=4 {
            for p in 1..=4u32 {
                let ctx = FockContext::new(n, p).unwrap();
                for j in 1..=n.min(p as usize) {
                    let mut parts = vec![2; j - 1];
                    parts.push(1);
                    let expected = rat_int(
                        if j % 2 == 1 { 1 } else { -1 } * j as i64 * (p as i64 - j as i64 + 1),
                    );
                    assert_eq!(
                        d_minus(&ctx, &part(&parts), j),
                        expected,
                        "n={n} p={p} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_coefficient_of_single_box() {
        let ctx = FockContext::new(2, 2).unwrap();
        assert_eq!(hw_chain_coefficient(&ctx, &part(&[1])), rat_int(1));
        assert_eq!(hw_chain_coefficient(&ctx, &Partition::empty()), rat_int(1));
    }
}
