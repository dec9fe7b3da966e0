use std::collections::BTreeMap;
use std::fmt;

use exactlinalg::{fmt_rational, parse_rational, rat_int, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Letters `i_1 … i_k` standing for `B_{i_1}^+ ⋯ B_{i_k}^+ v_0`; the leftmost
/// letter is applied last.
pub type Word = Vec<u8>;

/// Multiset of letters of a word, stored sorted. Words with equal content
/// have equal gl(n)-weight.
pub fn content_of(word: &[u8]) -> Word {
    let mut c = word.to_vec();
    c.sort_unstable();
    c
}

/// Finite linear combination of creation words with exact coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Word, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The vacuum v_0 (the empty word).
    pub fn vacuum() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(word: Word) -> Self {
        Self::term(word, Rational::one())
    }

    pub fn term(word: Word, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(word, coeff);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, c);
        }
        v
    }

    /// Σ c_k v_k.
    pub fn linear_combination<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, &'a FockVector)>,
    {
        let mut out = Self::zero();
        for (c, v) in terms {
            out.add_scaled(&c, v);
        }
        out
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// self += c · other.
    pub fn add_scaled(&mut self, c: &Rational, other: &FockVector) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c * x);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn plus(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        out
    }

    pub fn minus(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        out
    }

    /// True when no word carries a nonzero coefficient. Vectors in the
    /// radical of the form are zero in L(p) without being structurally empty;
    /// use `FockContext::is_zero` for that.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &[u8]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Distinct contents of the words present, in sorted order.
    pub fn contents(&self) -> Vec<Word> {
        let mut cs: Vec<Word> = self.terms.keys().map(|w| content_of(w)).collect();
        cs.sort();
        cs.dedup();
        cs
    }

    /// Restriction to the words of one content.
    pub fn component(&self, content: &[u8]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| content_of(w) == content)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// All words share one content (one gl(n)-weight and degree).
    pub fn is_homogeneous(&self) -> bool {
        self.contents().len() <= 1
    }

    /// Common degree, if all words have the same length.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn map_words<F: FnMut(&[u8]) -> Word>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Text form such as `2 B1+ B2+ |0⟩ - 1/2 B2+ B1+ |0⟩`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&mag.to_string());
                s.push(' ');
            }
            for l in w {
                s.push_str(&format!("B{l}+ "));
            }
            s.push_str("|0⟩");
        }
        s
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    word: Vec<u8>,
    coeff: String,
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let recs: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(w, c)| TermRecord {
                word: w.clone(),
                coeff: fmt_rational(c),
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        let mut v = FockVector::zero();
        for r in recs {
            let c = parse_rational(&r.coeff).map_err(serde::de::Error::custom)?;
            v.add_term(r.word, c);
        }
        Ok(v)
    }
}

/// Integer shorthand used throughout the tests and operator code.
pub fn int(x: i64) -> Rational {
    rat_int(x)
}
