use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use exactlinalg::{rat, rat_int, RatMatrix, Rational};
use itertools::Itertools;
use num_traits::Zero;
use parking_lot::RwLock;
use serde::Serialize;

use crate::space::WeightSpace;
use crate::{content_of, FockError, FockVector, GlWeight, Sign, Word};

pub const DEFAULT_DEGREE_BOUND: usize = 8;

type AnnTable = HashMap<Word, Arc<[(Word, i64)]>>;

#[derive(Default)]
struct Cache {
    spaces: RwLock<HashMap<Word, Arc<WeightSpace>>>,
    ann: Vec<RwLock<AnnTable>>,
}

/// The paraboson Fock space L(p) of rank n, with a shared memo of
/// annihilation images and weight spaces. Clones share the memo.
#[derive(Clone)]
pub struct FockContext {
    n: usize,
    p: u32,
    degree_bound: usize,
    cache: Arc<Cache>,
}

impl fmt::Debug for FockContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FockContext")
            .field("n", &self.n)
            .field("p", &self.p)
            .field("degree_bound", &self.degree_bound)
            .finish()
    }
}

/// Coordinates of a homogeneous vector in the pivot basis of its weight space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    pub content: Word,
    pub basis: Vec<Word>,
    #[serde(serialize_with = "ser_coords")]
    pub coords: Vec<Rational>,
}

fn ser_coords<S: serde::Serializer>(c: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(exactlinalg::fmt_rational))
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

impl FockContext {
    pub fn new(n: usize, p: u32) -> Result<Self, FockError> {
        if n == 0 || p == 0 || n > u8::MAX as usize {
            return Err(FockError::InvalidContext { n, p });
        }
        Ok(Self {
            n,
            p,
            degree_bound: DEFAULT_DEGREE_BOUND,
            cache: Arc::new(Cache {
                spaces: RwLock::new(HashMap::new()),
                ann: (0..n).map(|_| RwLock::new(HashMap::new())).collect(),
            }),
        })
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Self {
        self.degree_bound = bound;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn half_p(&self) -> Rational {
        rat(self.p as i64, 2)
    }

    pub fn weight_of_word(&self, word: &[u8]) -> GlWeight {
        GlWeight::of_word(self.n, self.p, word)
    }

    /// Weight of a nonzero homogeneous vector.
    pub fn weight_of(&self, v: &FockVector) -> Option<GlWeight> {
        let cs = v.contents();
        (cs.len() == 1).then(|| self.weight_of_word(&cs[0]))
    }

    fn check_mode(&self, j: usize) {
        assert!(
            (1..=self.n).contains(&j),
            "mode index {j} outside 1..={}",
            self.n
        );
    }

    /// B_j^+ v: prepends j to every word.
    ///
    /// Panics if j is not in 1..=n (as do the other operator methods).
    pub fn create(&self, j: usize, v: &FockVector) -> FockVector {
        self.check_mode(j);
        v.map_words(|w| {
            let mut out = Vec::with_capacity(w.len() + 1);
            out.push(j as u8);
            out.extend_from_slice(w);
            out
        })
    }

    /// E_ij on a single word, with E_ij v_0 = δ_ij (p/2) v_0.
    pub fn gl_word(&self, i: usize, j: usize, w: &[u8]) -> FockVector {
        let mut out = FockVector::zero();
        for (t, &l) in w.iter().enumerate() {
            if l as usize == j {
                let mut w2 = w.to_vec();
                w2[t] = i as u8;
                out.add_term(w2, rat_int(1));
            }
        }
        if i == j {
            out.add_term(w.to_vec(), self.half_p());
        }
        out
    }

    /// E_ij v.
    pub fn gl(&self, i: usize, j: usize, v: &FockVector) -> FockVector {
        self.check_mode(i);
        self.check_mode(j);
        let mut out = FockVector::zero();
        for (w, c) in v.terms() {
            out.add_scaled(c, &self.gl_word(i, j, w));
        }
        out
    }

    /// E_ij^k v.
    pub fn gl_power(&self, i: usize, j: usize, k: usize, v: &FockVector) -> FockVector {
        (0..k).fold(v.clone(), |acc, _| self.gl(i, j, &acc))
    }

    /// B_j^- on a word, with integer coefficients, memoized:
    /// B_j^-(B_i^+ u) = −B_i^+(B_j^- u) + 2 E_ij u and B_j^- v_0 = 0.
    pub fn ann_word(&self, j: u8, w: &[u8]) -> Arc<[(Word, i64)]> {
        let table = &self.cache.ann[j as usize - 1];
        if let Some(r) = table.read().get(w) {
            return r.clone();
        }
        let result: Arc<[(Word, i64)]> = if w.is_empty() {
            Arc::from(Vec::new())
        } else {
            let i = w[0];
            let u = &w[1..];
            let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
            let mut add = |word: Word, c: i64| {
                let e = acc.entry(word).or_insert(0);
                *e = e.checked_add(c).expect("annihilation coefficient overflow");
            };
            for (w2, c2) in self.ann_word(j, u).iter() {
                let mut word = Vec::with_capacity(w2.len() + 1);
                word.push(i);
                word.extend_from_slice(w2);
                add(word, -c2);
            }
            for (t, &l) in u.iter().enumerate() {
                if l == j {
                    let mut w2 = u.to_vec();
                    w2[t] = i;
                    add(w2, 2);
                }
            }
            if i == j {
                add(u.to_vec(), self.p as i64);
            }
            acc.into_iter()
                .filter(|(_, c)| *c != 0)
                .collect::<Vec<_>>()
                .into()
        };
        table.write().entry(w.to_vec()).or_insert(result).clone()
    }

    /// B_j^- v.
    pub fn annihilate(&self, j: usize, v: &FockVector) -> FockVector {
        self.check_mode(j);
        let mut out = FockVector::zero();
        for (w, c) in v.terms() {
            for (w2, c2) in self.ann_word(j as u8, w).iter() {
                out.add_term(w2.clone(), c * rat_int(*c2));
            }
        }
        out
    }

    /// B_j^± v.
    pub fn apply_b(&self, sign: Sign, j: usize, v: &FockVector) -> FockVector {
        match sign {
            Sign::Plus => self.create(j, v),
            Sign::Minus => self.annihilate(j, v),
        }
    }

    /// [B_{i_1}^+, …, B_{i_k}^+] v = Σ_σ sgn(σ) B_{i_σ(1)}^+ ⋯ B_{i_σ(k)}^+ v.
    pub fn multibracket(&self, indices: &[usize], v: &FockVector) -> FockVector {
        for &i in indices {
            self.check_mode(i);
        }
        let k = indices.len();
        let mut prefixes: BTreeMap<Word, i64> = BTreeMap::new();
        for perm in (0..k).permutations(k) {
            let prefix: Word = perm.iter().map(|&t| indices[t] as u8).collect();
            *prefixes.entry(prefix).or_insert(0) += permutation_sign(&perm);
        }
        let mut out = FockVector::zero();
        for (prefix, s) in prefixes {
            if s == 0 {
                continue;
            }
            let c = rat_int(s);
            for (w, x) in v.terms() {
                let mut word = prefix.clone();
                word.extend_from_slice(w);
                out.add_term(word, &c * x);
            }
        }
        out
    }

    /// The weight space of all words with this content (sorted letters).
    pub fn space(&self, content: &[u8]) -> Result<Arc<WeightSpace>, FockError> {
        if content.len() > self.degree_bound {
            return Err(FockError::DegreeBound {
                degree: content.len(),
                bound: self.degree_bound,
            });
        }
        if let Some(&l) = content.iter().find(|&&l| l == 0 || l as usize > self.n) {
            return Err(FockError::LetterOutOfRange {
                letter: l,
                n: self.n,
            });
        }
        let key = content_of(content);
        if let Some(s) = self.cache.spaces.read().get(&key) {
            return Ok(s.clone());
        }
        let built = Arc::new(WeightSpace::build(self, &key)?);
        Ok(self
            .cache
            .spaces
            .write()
            .entry(key)
            .or_insert(built)
            .clone())
    }

    /// Gram matrix over all words of a content, in word order.
    pub fn gram(&self, content: &[u8]) -> Result<RatMatrix, FockError> {
        Ok(self.space(content)?.gram_matrix())
    }

    /// ⟨u, w⟩ with ⟨v_0, v_0⟩ = 1 and B_j^± adjoint to B_j^∓.
    pub fn inner_product(&self, u: &FockVector, w: &FockVector) -> Result<Rational, FockError> {
        let mut total = Rational::zero();
        for c in u.contents() {
            let wc = w.component(&c);
            if wc.is_empty() {
                continue;
            }
            let space = self.space(&c)?;
            let x = space.coords(&u.component(&c));
            let y = space.pair_with_pivots(&wc);
            for (a, b) in x.iter().zip(&y) {
                total += a * b;
            }
        }
        Ok(total)
    }

    /// ⟨v, v⟩.
    pub fn norm_squared(&self, v: &FockVector) -> Result<Rational, FockError> {
        self.inner_product(v, v)
    }

    /// Whether v vanishes in L(p), i.e. lies in the radical of the form.
    pub fn is_zero(&self, v: &FockVector) -> Result<bool, FockError> {
        for c in v.contents() {
            if !self.space(&c)?.annihilates(&v.component(&c)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality in L(p).
    pub fn equals(&self, u: &FockVector, w: &FockVector) -> Result<bool, FockError> {
        self.is_zero(&u.minus(w))
    }

    /// Coordinates of a homogeneous vector in the pivot basis of its weight
    /// space. The zero vector needs an explicit content; see
    /// `canonical_form_in`.
    pub fn canonical_form(&self, v: &FockVector) -> Result<CanonicalForm, FockError> {
        let cs = v.contents();
        match cs.len() {
            1 => self.canonical_form_in(&cs[0], v),
            _ => Err(FockError::NotHomogeneous),
        }
    }

    pub fn canonical_form_in(
        &self,
        content: &[u8],
        v: &FockVector,
    ) -> Result<CanonicalForm, FockError> {
        let content = content_of(content);
        if v.contents().iter().any(|c| *c != content) {
            return Err(FockError::NotHomogeneous);
        }
        let space = self.space(&content)?;
        Ok(CanonicalForm {
            coords: space.coords(v),
            basis: space.pivot_words(),
            content,
        })
    }

    /// The representative Σ x_k P_k of v built from its canonical form.
    pub fn reduce(&self, v: &FockVector) -> Result<FockVector, FockError> {
        let mut out = FockVector::zero();
        for c in v.contents() {
            let f = self.canonical_form_in(&c, &v.component(&c))?;
            for (w, x) in f.basis.into_iter().zip(f.coords) {
                out.add_term(w, x);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, p: u32) -> FockContext {
        FockContext::new(n, p).unwrap()
    }

    #[test]
    fn creation_prepends() {
        let c = ctx(2, 1);
        let v = c.create(1, &c.create(2, &FockVector::vacuum()));
        assert_eq!(v, FockVector::word(vec![1, 2]));
    }

    #[test]
    fn gl_on_vacuum() {
        let c = ctx(2, 3);
        let v0 = FockVector::vacuum();
        assert_eq!(c.gl(2, 2, &v0), FockVector::term(vec![], rat(3, 2)));
        assert!(c.gl(1, 2, &v0).is_empty());
    }

    #[test]
    fn annihilation_examples() {
        let c = ctx(2, 3);
        assert!(c.annihilate(1, &FockVector::vacuum()).is_empty());
        assert_eq!(
            c.annihilate(1, &FockVector::word(vec![1])),
            FockVector::term(vec![], rat_int(3))
        );
        assert!(c.annihilate(2, &FockVector::word(vec![1])).is_empty());
    }

    #[test]
    fn inner_product_examples() {
        let c = ctx(2, 3);
        let v0 = FockVector::vacuum();
        assert_eq!(c.inner_product(&v0, &v0).unwrap(), rat_int(1));
        let a = FockVector::word(vec![1]);
        assert_eq!(c.inner_product(&a, &a).unwrap(), rat_int(3));
        assert_eq!(
            c.inner_product(&a, &FockVector::word(vec![2])).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn bracket_of_two() {
        let c = ctx(2, 1);
        let v = c.multibracket(&[1, 2], &FockVector::vacuum());
        assert_eq!(
            v,
            FockVector::from_terms([(vec![1, 2], rat_int(1)), (vec![2, 1], rat_int(-1))])
        );
        assert_eq!(
            c.multibracket(&[2], &FockVector::vacuum()),
            FockVector::word(vec![2])
        );
        assert!(c.multibracket(&[1, 1], &FockVector::vacuum()).is_empty());
    }

    #[test]
    fn degree_bound_is_enforced() {
        let c = ctx(1, 1).with_degree_bound(2);
        let err = c.space(&[1, 1, 1]).unwrap_err();
        assert_eq!(
            err,
            FockError::DegreeBound {
                degree: 3,
                bound: 2
            }
        );
        assert!(err.to_string().contains("bound 2"));
    }

    #[test]
    fn vacuum_canonical_form() {
        let c = ctx(3, 2);
        let f = c.canonical_form(&FockVector::vacuum()).unwrap();
        assert_eq!(f.coords, vec![rat_int(1)]);
        assert!(c
            .canonical_form(&FockVector::word(vec![1]).plus(&FockVector::word(vec![2])))
            .is_err());
    }
}
