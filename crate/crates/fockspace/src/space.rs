use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use exactlinalg::{RatMatrix, Rational};
use num_traits::{One, Signed, Zero};

use crate::{FockContext, FockError, FockVector, Word};

/// One weight space of the word module: all words with a fixed content, the
/// rows of the Gram matrix belonging to a pivot set of words, and the inverse
/// of the pivot block. The pivot words form a basis of the corresponding
/// weight space of L(p); the radical is the kernel of the pivot rows.
#[derive(Debug)]
pub struct WeightSpace {
    content: Word,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    pivots: Vec<usize>,
    pivot_rows: Vec<Vec<Rational>>,
    pivot_inverse: Vec<Vec<Rational>>,
}

/// All distinct rearrangements of a sorted multiset, in lex order.
pub fn distinct_permutations(content: &[u8]) -> Vec<Word> {
    let mut cur = content.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(_, x)| !x.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

impl WeightSpace {
    pub(crate) fn vacuum() -> Self {
        Self {
            content: Vec::new(),
            words: vec![Vec::new()],
            index: HashMap::from([(Vec::new(), 0)]),
            pivots: vec![0],
            pivot_rows: vec![vec![Rational::one()]],
            pivot_inverse: vec![vec![Rational::one()]],
        }
    }

    /// Greedy pivot selection in word order. A word joins the pivot set when
    /// its Schur complement against the current pivots is nonzero; the form
    /// is positive semidefinite, so a zero complement means dependence.
    pub(crate) fn build(ctx: &FockContext, content: &[u8]) -> Result<Self, FockError> {
        if content.is_empty() {
            return Ok(Self::vacuum());
        }
        let words = distinct_permutations(content);
        let index: HashMap<Word, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, w)| (w, k))
            .collect();
        let mut subs: BTreeMap<u8, Arc<WeightSpace>> = BTreeMap::new();
        let mut pivots = Vec::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut inv: Vec<Vec<Rational>> = Vec::new();

        for (ai, a) in words.iter().enumerate() {
            let first = a[0];
            let sub = match subs.get(&first) {
                Some(s) => s.clone(),
                None => {
                    let mut rest = content.to_vec();
                    let pos = rest.iter().position(|&x| x == first).unwrap();
                    rest.remove(pos);
                    let s = ctx.space(&rest)?;
                    subs.insert(first, s.clone());
                    s
                }
            };
            let tail = sub.functional(&a[1..]);
            if tail.iter().all(|x| x.is_zero()) {
                continue;
            }
            // ⟨a, b⟩ = ⟨tail(a), B_{a_1}^- b⟩
            let pair = |b: &[u8]| -> Rational {
                ctx.ann_word(first, b)
                    .iter()
                    .fold(Rational::zero(), |acc, (w, c)| {
                        acc + &tail[sub.index[w]] * Rational::from_integer((*c).into())
                    })
            };
            let diag = pair(a);
            let g: Vec<Rational> = rows.iter().map(|r| r[ai].clone()).collect();
            let u = mat_vec(&inv, &g);
            let s = diag
                - g.iter()
                    .zip(&u)
                    .fold(Rational::zero(), |acc, (x, y)| acc + x * y);
            if s.is_zero() {
                continue;
            }
            if s.is_negative() {
                return Err(FockError::Indefinite {
                    content: content.to_vec(),
                });
            }
            let r = inv.len();
            let mut next = vec![vec![Rational::zero(); r + 1]; r + 1];
            for i in 0..r {
                for j in 0..r {
                    next[i][j] = &inv[i][j] + &u[i] * &u[j] / &s;
                }
                next[i][r] = -&u[i] / &s;
                next[r][i] = next[i][r].clone();
            }
            next[r][r] = s.recip();
            inv = next;
            rows.push(words.iter().map(|b| pair(b)).collect());
            pivots.push(ai);
        }
        Ok(Self {
            content: content.to_vec(),
            words,
            index,
            pivots,
            pivot_rows: rows,
            pivot_inverse: inv,
        })
    }

    pub fn content(&self) -> &[u8] {
        &self.content
    }

    pub fn degree(&self) -> usize {
        self.content.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Indices (into `words`) of the canonical basis words.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_words(&self) -> Vec<Word> {
        self.pivots.iter().map(|&k| self.words[k].clone()).collect()
    }

    /// Dimension of this weight space of L(p), i.e. the Gram rank.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// ⟨P_k, b⟩ for pivot word P_k and every word b.
    pub fn pivot_row(&self, k: usize) -> &[Rational] {
        &self.pivot_rows[k]
    }

    /// Values ⟨P_k, v⟩ for every pivot word.
    pub fn pair_with_pivots(&self, v: &FockVector) -> Vec<Rational> {
        let entries: Vec<(usize, &Rational)> = v
            .terms()
            .filter_map(|(w, c)| self.index.get(w).map(|&i| (i, c)))
            .collect();
        self.pivot_rows
            .iter()
            .map(|row| {
                entries
                    .iter()
                    .fold(Rational::zero(), |acc, (i, c)| acc + &row[*i] * *c)
            })
            .collect()
    }

    /// Coordinates of v (restricted to this content) in the pivot basis,
    /// modulo the radical.
    pub fn coords(&self, v: &FockVector) -> Vec<Rational> {
        mat_vec(&self.pivot_inverse, &self.pair_with_pivots(v))
    }

    /// The functional b ↦ ⟨word, b⟩ as a vector indexed like `words`.
    pub fn functional(&self, word: &[u8]) -> Vec<Rational> {
        let i = self.index[word];
        let col: Vec<Rational> = self.pivot_rows.iter().map(|r| r[i].clone()).collect();
        let y = mat_vec(&self.pivot_inverse, &col);
        let mut out = vec![Rational::zero(); self.words.len()];
        for (yk, row) in y.iter().zip(&self.pivot_rows) {
            if yk.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += yk * r;
                }
            }
        }
        out
    }

    /// True when v (restricted to this content) lies in the radical.
    pub fn annihilates(&self, v: &FockVector) -> bool {
        self.pair_with_pivots(v).iter().all(|x| x.is_zero())
    }

    /// Full Gram matrix over `words`, reassembled from the pivot rows.
    pub fn gram_matrix(&self) -> RatMatrix {
        let rows: Vec<Vec<Rational>> = self.words.iter().map(|w| self.functional(w)).collect();
        RatMatrix::from_rows(rows).expect("square by construction")
    }

    /// The pivot block G_PP.
    pub fn pivot_block(&self) -> RatMatrix {
        let rows = self
            .pivot_rows
            .iter()
            .map(|r| self.pivots.iter().map(|&j| r[j].clone()).collect())
            .collect();
        RatMatrix::from_rows(rows).expect("square by construction")
    }
}
