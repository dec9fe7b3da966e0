use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A strictly increasing tuple (i_1, …, i_s) with fixed endpoints i_1 = i and
/// i_s = j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTuple(pub Vec<usize>);

impl IndexTuple {
    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// Consecutive pairs (i_{u+1}, i_u): the factors E_{i_{u+1} i_u} of
    /// E^{e_I}, written left to right.
    pub fn lowering_pairs(&self) -> Vec<(usize, usize)> {
        self.0.windows(2).map(|w| (w[1], w[0])).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }
}

/// All tuples from i to j, sorted by length and then lexicographically.
pub fn enumerate_index_tuples(i: usize, j: usize) -> Vec<IndexTuple> {
    if i > j {
        return Vec::new();
    }
    if i == j {
        return vec![IndexTuple(vec![i])];
    }
    let mids: Vec<usize> = (i + 1..j).collect();
    let mut out: Vec<IndexTuple> = (0..=mids.len())
        .flat_map(|r| {
            mids.iter()
                .copied()
                .combinations(r)
                .map(|c| {
                    let mut v = Vec::with_capacity(r + 2);
                    v.push(i);
                    v.extend(c);
                    v.push(j);
                    IndexTuple(v)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The ordered complement of I within {i_1, …, i_s}.
pub fn complement(tuple: &IndexTuple) -> Vec<usize> {
    (tuple.first()..=tuple.last())
        .filter(|x| !tuple.contains(*x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(enumerate_index_tuples(2, 2), vec![IndexTuple(vec![2])]);
        assert_eq!(
            enumerate_index_tuples(1, 3),
            vec![IndexTuple(vec![1, 3]), IndexTuple(vec![1, 2, 3])]
        );
        assert_eq!(complement(&IndexTuple(vec![1, 3])), vec![2]);
        assert!(enumerate_index_tuples(3, 1).is_empty());
    }

    #[test]
    fn counts_are_powers_of_two() {
        for i in 1..=6 {
            for j in i + 1..=6 {
                assert_eq!(enumerate_index_tuples(i, j).len(), 1 << (j - i - 1));
            }
        }
    }

    #[test]
    fn lowering_pairs_order() {
        assert_eq!(
            IndexTuple(vec![1, 2, 3]).lowering_pairs(),
            vec![(2, 1), (3, 2)]
        );
    }
}
