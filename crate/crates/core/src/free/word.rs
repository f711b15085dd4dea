use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::{format_rational, Rational, SparseVec};

/// A monomial in the free algebra: a sequence of generator indices.
/// Ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            "1".to_string()
        } else {
            self.0
                .iter()
                .map(|&x| names[x].as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Inverse of [`Word::render`].
    pub fn parse(s: &str, names: &[String]) -> Option<Word> {
        let s = s.trim();
        if s == "1" {
            return Some(Word::empty());
        }
        s.split('*')
            .map(|t| names.iter().position(|n| n == t.trim()))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial: finitely many words with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::monomial(Word::empty(), Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(x: usize) -> Self {
        NCPoly::monomial(Word::letter(x), Rational::one())
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length (0 for constants and for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn scaled(&self, c: &Rational) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, x) in &self.terms {
            p.add_term(w.clone(), x * c);
        }
        p
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.scaled(&-Rational::one()))
    }

    /// Bilinear extension of word concatenation.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("{}·{}", format_rational(c), w.render(names)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The free unital associative algebra on `names`, truncated at word length `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncTensorAlgebra {
    names: Vec<String>,
    degree: usize,
    unital: bool,
}

impl TruncTensorAlgebra {
    pub fn new(names: Vec<String>, degree: usize) -> Self {
        TruncTensorAlgebra {
            names,
            degree,
            unital: true,
        }
    }

    pub fn non_unital(names: Vec<String>, degree: usize) -> Self {
        TruncTensorAlgebra {
            names,
            degree,
            unital: false,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn unital(&self) -> bool {
        self.unital
    }

    fn min_len(&self) -> usize {
        usize::from(!self.unital)
    }

    pub fn dim(&self) -> usize {
        let g = self.ngens();
        (self.min_len()..=self.degree)
            .map(|k| g.pow(k as u32))
            .sum()
    }

    /// All words in canonical order (length, then lexicographic).
    pub fn words(&self) -> Vec<Word> {
        words_up_to(self.ngens(), self.degree)
            .into_iter()
            .filter(|w| w.len() >= self.min_len())
            .collect()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        let g = self.ngens();
        if w.len() > self.degree || w.len() < self.min_len() || w.0.iter().any(|&x| x >= g) {
            return None;
        }
        let offset: usize = (self.min_len()..w.len()).map(|k| g.pow(k as u32)).sum();
        Some(offset + w.0.iter().fold(0usize, |acc, &x| acc * g + x))
    }

    /// Coordinates of `p`, which must have degree at most the truncation degree.
    pub fn coordinates(&self, p: &NCPoly) -> Option<SparseVec> {
        let mut pairs = Vec::new();
        for (w, c) in p.terms() {
            pairs.push((self.index_of(w)?, c.clone()));
        }
        Some(SparseVec::from_pairs(pairs))
    }

    /// Product of two words, defined when the lengths add up to at most the degree.
    pub fn mul_words(&self, a: &Word, b: &Word) -> Option<Word> {
        (a.len() + b.len() <= self.degree).then(|| a.concat(b))
    }
}

/// Every word of length at most `degree` over `g` letters, in canonical order.
pub fn words_up_to(g: usize, degree: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..degree {
        let mut next = Vec::with_capacity(layer.len() * g);
        for w in &layer {
            for x in 0..g {
                let mut v = w.0.clone();
                v.push(x);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
