use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{CombError, Result};

/// A non-increasing sequence of positive integers. Trailing zeros are dropped
/// on construction, so `(4,2,0)` and `(4,2)` are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::NotPartition(
                parts.iter().map(|&x| x as i64).collect(),
            ));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Accepts signed parts, rejecting negatives; used by the ±ε shifts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) {
            return Err(CombError::NotPartition(parts.to_vec()));
        }
        Partition::new(parts.iter().map(|&x| x as usize).collect())
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// 1-based part, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.length())).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count())
            .collect();
        Partition { parts }
    }

    /// λ ± ε_i, or `None` when the result is not a partition.
    pub fn shifted(&self, i: usize, delta: i64) -> Option<Partition> {
        let len = self.length().max(i);
        let mut v: Vec<i64> = (1..=len).map(|k| self.part(k) as i64).collect();
        v[i - 1] += delta;
        if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::from_signed(&v).ok()
    }

    /// Dominance: `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Total order on shapes used for basis ordering: larger size last, and
    /// within one size reverse lexicographic, which extends dominance
    /// (dominant shapes come first).
    pub fn shape_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| CombError::Parse(e.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `d` with at most `max_len` parts, in reverse
/// lexicographic order.
pub fn partitions_of(d: usize, max_len: usize) -> Vec<Partition> {
    fn rec(
        rem: usize,
        maxpart: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=rem.min(maxpart)).rev() {
            cur.push(x);
            rec(rem - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|d| partitions_of(d, max_len))
        .collect()
}

/// Number of semistandard tableaux of shape λ with entries in 1..=n, by the
/// hook-content formula ∏ (n + c(x)) / h(x).
pub fn hook_content_count(shape: &Partition, n: usize) -> u128 {
    if shape.length() > n {
        return 0;
    }
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            let content = n as i64 + c as i64 - r as i64;
            let hook = (len - c - 1) + (conj.part(c + 1) - r - 1) + 1;
            num *= content as u128;
            den *= hook as u128;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(p(&[4, 2, 0]), p(&[4, 2]));
        assert_eq!(p(&[4, 2, 0]).padded(3), vec![4, 2, 0]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(p(&[2, 1]).shifted(3, 1), Some(p(&[2, 1, 1])));
        assert_eq!(p(&[2, 2]).shifted(2, 1), None);
        assert_eq!(p(&[2]).shifted(2, -1), None);
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(6, 3).len(), 7);
        assert_eq!(hook_content_count(&p(&[4, 2]), 3), 27);
        assert_eq!(hook_content_count(&p(&[1, 1, 1, 1]), 3), 0);
        assert_eq!(hook_content_count(&p(&[]), 3), 1);
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "4,2,0".parse().unwrap();
        assert_eq!(q, p(&[4, 2]));
        assert_eq!(q.to_string(), "(4,2)");
    }
}
