use num_traits::{Signed, Zero};

use crate::{rat_int, LinalgError, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsdReport {
    pub psd: bool,
    pub rank: usize,
    /// A vector x with xᵀ G x < 0 when `psd` is false.
    pub witness: Option<Vec<Rational>>,
}

fn quad_form(g: &RatMatrix, x: &[Rational]) -> Rational {
    let gx = g.mul_vec(x).expect("square matrix");
    x.iter()
        .zip(&gx)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |s, t| s + t)
}

/// Exact LDLᵀ with symmetric pivoting. Each remaining index carries a vector
/// v_i in the original coordinates with S_ij = v_iᵀ G v_j, so a negative
/// pivot or an indefinite 2×2 block yields its witness directly.
pub fn psd_check(g: &RatMatrix) -> Result<PsdReport, LinalgError> {
    if !g.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = g.nrows();
    let mut s: Vec<Vec<Rational>> = g.to_rows();
    let mut vecs: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rat_int((i == j) as i64)).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    loop {
        if let Some(&k) = alive.iter().find(|&&k| s[k][k].is_negative()) {
            return Ok(PsdReport {
                psd: false,
                rank,
                witness: Some(vecs[k].clone()),
            });
        }
        let Some(pos) = alive.iter().position(|&k| s[k][k].is_positive()) else {
            // All remaining diagonal entries vanish; any off-diagonal entry
            // makes the form indefinite on span(v_i, v_j).
            for (a, &i) in alive.iter().enumerate() {
                for &j in &alive[a + 1..] {
                    if !s[i][j].is_zero() {
                        let sign = if s[i][j].is_positive() {
                            rat_int(-1)
                        } else {
                            rat_int(1)
                        };
                        let w: Vec<Rational> = vecs[i]
                            .iter()
                            .zip(&vecs[j])
                            .map(|(x, y)| x + &sign * y)
                            .collect();
                        return Ok(PsdReport {
                            psd: false,
                            rank,
                            witness: Some(w),
                        });
                    }
                }
            }
            return Ok(PsdReport {
                psd: true,
                rank,
                witness: None,
            });
        };
        let k = alive.remove(pos);
        rank += 1;
        let d = s[k][k].clone();
        let vk = vecs[k].clone();
        let sk = s[k].clone();
        for &i in &alive {
            if sk[i].is_zero() {
                continue;
            }
            let f = &sk[i] / &d;
            for &j in &alive {
                if !sk[j].is_zero() {
                    let t = &f * &sk[j];
                    s[i][j] -= t;
                }
            }
            for (x, y) in vecs[i].iter_mut().zip(&vk) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        for &i in &alive {
            s[i][k] = Rational::zero();
            s[k][i] = Rational::zero();
        }
    }
}

/// Re-evaluates a witness against the original matrix.
pub fn witness_norm(g: &RatMatrix, w: &[Rational]) -> Rational {
    quad_form(g, w)
}
