//! The ambient space J_q(n,w) of weight-`w` words of length `n` over
//! `{0..q}`, with the Hamming metric.
//!
//! Symbol `0` is the distinguished zero; a word's support is the set of its
//! nonzero coordinates. Coordinates are 0-based in the API and 1-based only
//! in human-facing text.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinatorics::{colex_subsets, space_size};
use crate::error::{Error, Result};

pub type Symbol = u16;

/// Largest alphabet a word can carry.
pub const MAX_ALPHABET: u64 = Symbol::MAX as u64 + 1;

/// A fixed-length word. The alphabet lives on the enclosing [`Code`] or
/// [`Anticode`]; on its own a word only knows its symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Box<[Symbol]>);

impl Word {
    pub fn new(symbols: impl Into<Box<[Symbol]>>) -> Word {
        Word(symbols.into())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s != 0).count()
    }

    /// Nonzero coordinates in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &s)| s != 0).map(|(i, _)| i).collect()
    }

    /// Support as a bitmask; words longer than 64 are not supported here.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.0.len() <= 64);
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn max_symbol(&self) -> Symbol {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Word {
        Word(v.into_boxed_slice())
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Word {
        Word(v.into())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Hamming distance without length checks.
#[inline]
pub fn distance(u: &Word, v: &Word) -> usize {
    u.0.iter().zip(v.0.iter()).filter(|(a, b)| a != b).count()
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(distance(u, v))
}

/// Minimum pairwise distance. Pairs are split across rayon workers by the
/// first index; the minimum is order independent.
pub fn min_distance_of(words: &[Word]) -> Result<usize> {
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    Ok((0..words.len())
        .into_par_iter()
        .map(|i| words[i + 1..].iter().map(|v| distance(&words[i], v)).min().unwrap_or(usize::MAX))
        .min()
        .expect("at least one pair"))
}

/// Maximum pairwise distance; `0` for a singleton.
pub fn diameter_of(words: &[Word]) -> Result<usize> {
    if words.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok((0..words.len())
        .into_par_iter()
        .map(|i| words[i + 1..].iter().map(|v| distance(&words[i], v)).max().unwrap_or(0))
        .max()
        .unwrap_or(0))
}

fn check_words(n: usize, q: u64, words: &[Word]) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&q) {
        return Err(Error::ParamsOutOfRange(format!("alphabet size {q}")));
    }
    if n > 64 {
        return Err(Error::ParamsOutOfRange(format!("length {n} > 64")));
    }
    for w in words {
        if w.len() != n {
            return Err(Error::LengthMismatch(n, w.len()));
        }
        if w.max_symbol() as u64 >= q {
            return Err(Error::InvariantViolation(format!("word {w} has a symbol >= q = {q}")));
        }
    }
    Ok(())
}

fn sorted_unique(mut words: Vec<Word>) -> Result<Vec<Word>> {
    words.par_sort_unstable();
    if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
        return Err(Error::InvariantViolation(format!("duplicate word {}", pair[0])));
    }
    Ok(words)
}

fn common_weight(words: &[Word]) -> Option<usize> {
    let w = words.first()?.weight();
    words.iter().all(|x| x.weight() == w).then_some(w)
}

/// A set of equal-length words in canonical (lexicographic) order.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    q: u64,
    weight: Option<usize>,
    words: Vec<Word>,
    min_distance: OnceLock<Option<usize>>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.q == other.q && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    /// Validates lengths and symbols, sorts, and rejects duplicates.
    pub fn new(n: usize, q: u64, words: Vec<Word>) -> Result<Code> {
        check_words(n, q, &words)?;
        let words = sorted_unique(words)?;
        let weight = common_weight(&words);
        Ok(Code { n, q, weight, words, min_distance: OnceLock::new() })
    }

    /// Like [`Code::new`] but also requires every word to have weight `w`.
    pub fn with_weight(n: usize, q: u64, w: usize, words: Vec<Word>) -> Result<Code> {
        if let Some(bad) = words.iter().find(|x| x.weight() != w) {
            return Err(Error::InvariantViolation(format!("word {bad} does not have weight {w}")));
        }
        let mut code = Code::new(n, q, words)?;
        code.weight = Some(w);
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The common weight, if every word has the same one.
    pub fn weight(&self) -> Option<usize> {
        self.weight
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Minimum distance, computed once and cached.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance
            .get_or_init(|| min_distance_of(&self.words).ok())
            .ok_or(Error::TooFewWords(self.words.len()))
    }

    /// Same words over a larger alphabet.
    pub fn widen_alphabet(&self, q: u64) -> Result<Code> {
        if q < self.q {
            return Err(Error::ParamsOutOfRange(format!("cannot shrink alphabet {} to {q}", self.q)));
        }
        Code::new(self.n, q, self.words.clone())
    }

    /// Returns a copy with the given words removed.
    pub fn without(&self, drop: &[Word]) -> Code {
        let words = self.words.iter().filter(|w| !drop.contains(w)).cloned().collect();
        Code::new(self.n, self.q, words).expect("subset of a valid code")
    }
}

/// A constant-weight word set judged by its diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anticode {
    set: Code,
}

impl Anticode {
    pub fn new(n: usize, q: u64, words: Vec<Word>) -> Result<Anticode> {
        if words.is_empty() {
            return Err(Error::EmptySet);
        }
        let set = Code::new(n, q, words)?;
        if set.weight().is_none() {
            return Err(Error::InvariantViolation("anticode words must share one weight".into()));
        }
        Ok(Anticode { set })
    }

    pub fn n(&self) -> usize {
        self.set.n
    }

    pub fn q(&self) -> u64 {
        self.set.q
    }

    pub fn weight(&self) -> usize {
        self.set.weight.expect("checked on construction")
    }

    pub fn words(&self) -> &[Word] {
        &self.set.words
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn diameter(&self) -> usize {
        diameter_of(&self.set.words).expect("anticodes are nonempty")
    }

    /// Johnson distance diameter (half the Hamming one); meaningful for binary anticodes.
    pub fn johnson_diameter(&self) -> usize {
        self.diameter() / 2
    }

    pub fn as_code(&self) -> &Code {
        &self.set
    }

    pub fn with_word(&self, w: Word) -> Result<Anticode> {
        let mut words = self.set.words.clone();
        words.push(w);
        Anticode::new(self.n(), self.q(), words)
    }
}

/// Every word of J_q(n,w): supports in colex order, and within a support the
/// nonzero symbol patterns in lexicographic order.
pub fn enumerate_space(n: usize, w: usize, q: u64) -> impl Iterator<Item = Word> {
    assert!(w <= n && q >= 2, "enumerate_space needs w <= n and q >= 2");
    let top = (q - 1) as Symbol;
    colex_subsets(n, w).flat_map(move |support| {
        let mut pattern: Option<Vec<Symbol>> = Some(vec![1; support.len()]);
        std::iter::from_fn(move || {
            let current = pattern.take()?;
            let mut symbols = vec![0 as Symbol; n];
            for (&c, &s) in support.iter().zip(&current) {
                symbols[c] = s;
            }
            let mut next = current;
            let mut i = next.len();
            while i > 0 {
                i -= 1;
                if next[i] < top {
                    next[i] += 1;
                    for s in next.iter_mut().skip(i + 1) {
                        *s = 1;
                    }
                    pattern = Some(next);
                    break;
                }
            }
            Some(Word::from(symbols))
        })
    })
}

pub fn space_cardinality(n: usize, w: usize, q: u64) -> BigUint {
    space_size(n, w, q)
}

/// Words within distance `e` of `center`. With `restrict_weight` the ball is
/// taken inside J_q(n, wt(center)); otherwise inside all of `{0..q}^n`.
pub fn ball(center: &Word, e: usize, q: u64, restrict_weight: bool) -> Vec<Word> {
    let n = center.len();
    let w = center.weight();
    let mut out = Vec::new();
    let mut buf: Vec<Symbol> = center.symbols().to_vec();
    ball_rec(&mut buf, 0, e, q, &mut out, n);
    if restrict_weight {
        out.retain(|x| x.weight() == w);
    }
    out.sort_unstable();
    out
}

fn ball_rec(buf: &mut Vec<Symbol>, from: usize, budget: usize, q: u64, out: &mut Vec<Word>, n: usize) {
    out.push(Word::from(buf.clone()));
    if budget == 0 {
        return;
    }
    for i in from..n {
        let orig = buf[i];
        for s in 0..q as Symbol {
            if s == orig {
                continue;
            }
            buf[i] = s;
            ball_rec(buf, i + 1, budget - 1, q, out, n);
        }
        buf[i] = orig;
    }
}

/// Closed-form size of a weight-restricted ball of radius `e` in J_q(n,w):
/// `Σ C(w,i)·C(n−w,i)·(q−1)^i·C(w−i,j)·(q−2)^j` over `2i + j ≤ e`.
pub fn ball_size(n: usize, w: usize, q: u64, e: usize) -> BigUint {
    use crate::combinatorics::binomial_big as c;
    let mut total = BigUint::from(0u32);
    for i in 0..=w.min(n - w) {
        if 2 * i > e {
            break;
        }
        for j in 0..=(w - i).min(e - 2 * i) {
            total += c(w as u64, i as u64)
                * c((n - w) as u64, i as u64)
                * BigUint::from(q - 1).pow(i as u32)
                * c((w - i) as u64, j as u64)
                * BigUint::from(q.saturating_sub(2)).pow(j as u32);
        }
    }
    total
}

/// The canonical word of J_q(n,w): ones on the first `w` coordinates.
pub fn canonical_word(n: usize, w: usize) -> Word {
    let mut s = vec![0 as Symbol; n];
    for x in s.iter_mut().take(w) {
        *x = 1;
    }
    Word::from(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use proptest::prelude::*;

    fn w(s: &[Symbol]) -> Word {
        Word::from(s)
    }

    #[test]
    fn distances() {
        assert_eq!(hamming_distance(&w(&[1, 1, 0]), &w(&[1, 2, 0])).unwrap(), 1);
        assert_eq!(hamming_distance(&w(&[1, 1, 0, 2]), &w(&[1, 1, 0, 2])).unwrap(), 0);
        assert_eq!(hamming_distance(&w(&[1, 1, 0, 2]), &w(&[0, 1, 2, 2])).unwrap(), 2);
        assert_eq!(hamming_distance(&w(&[1]), &w(&[1, 0])), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_space(4, 3, 3).count(), 32);
        assert_eq!(enumerate_space(3, 0, 5).collect::<Vec<_>>(), vec![w(&[0, 0, 0])]);
        assert_eq!(enumerate_space(2, 2, 2).collect::<Vec<_>>(), vec![w(&[1, 1])]);
        let first: Vec<_> = enumerate_space(3, 2, 3).take(5).collect();
        assert_eq!(
            first,
            vec![w(&[1, 1, 0]), w(&[1, 2, 0]), w(&[2, 1, 0]), w(&[2, 2, 0]), w(&[1, 0, 1])]
        );
    }

    #[test]
    fn enumeration_counts_exhaustive() {
        for n in 0..=8usize {
            for wt in 0..=n {
                for q in 2..=5u64 {
                    let words: Vec<_> = enumerate_space(n, wt, q).collect();
                    let expected = binomial(n as u64, wt as u64).unwrap() * (q - 1).pow(wt as u32);
                    assert_eq!(words.len() as u64, expected, "n={n} w={wt} q={q}");
                    assert!(words.iter().all(|x| x.weight() == wt));
                    let mut sorted = words.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.len(), words.len());
                }
            }
        }
    }

    fn ball_by_scan(center: &Word, e: usize, q: u64) -> Vec<Word> {
        let mut v: Vec<_> = enumerate_space(center.len(), center.weight(), q)
            .filter(|x| distance(x, center) <= e)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn balls_in_j3_4_3() {
        let c = w(&[1, 2, 1, 0]);
        assert_eq!(ball(&c, 0, 3, true), vec![c.clone()]);
        assert_eq!(ball(&c, 1, 3, true).len(), 4);
        assert_eq!(ball(&c, 1, 3, true), ball_by_scan(&c, 1, 3));
        // frozen from the full-space scan
        let b2 = ball_by_scan(&c, 2, 3);
        assert_eq!(b2.len(), 13);
        assert_eq!(ball(&c, 2, 3, true), b2);
        assert_eq!(ball_size(4, 3, 3, 2), BigUint::from(13u32));
        // the unrestricted ball in {0,1,2}^4 of radius 1
        assert_eq!(ball(&c, 1, 3, false).len(), 1 + 4 * 2);
    }

    #[test]
    fn balls_match_scan_and_formula() {
        for n in 1..=5usize {
            for wt in 1..=n {
                for q in 2..=4u64 {
                    for c in enumerate_space(n, wt, q) {
                        for e in 0..=3 {
                            let b = ball(&c, e, q, true);
                            assert_eq!(b, ball_by_scan(&c, e, q));
                            assert_eq!(BigUint::from(b.len()), ball_size(n, wt, q, e));
                            assert!(b.len() == 1 || diameter_of(&b).unwrap() <= 2 * e);
                        }
                        let b1 = ball(&c, 1, q, true);
                        assert_eq!(b1.len() as u64, 1 + wt as u64 * (q - 2));
                        assert!(b1.iter().all(|x| x.support() == c.support()));
                    }
                }
            }
        }
    }

    #[test]
    fn min_distance_and_diameter() {
        let c = Code::new(3, 2, vec![w(&[1, 1, 0]), w(&[0, 1, 1])]).unwrap();
        assert_eq!(c.min_distance().unwrap(), 2);
        let single = Code::new(3, 2, vec![w(&[1, 1, 0])]).unwrap();
        assert_eq!(single.min_distance(), Err(Error::TooFewWords(1)));
        assert_eq!(diameter_of(&[w(&[1, 0])]).unwrap(), 0);
        assert_eq!(diameter_of(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn code_invariants() {
        let dup = Code::new(2, 3, vec![w(&[1, 2]), w(&[1, 2])]);
        assert!(matches!(dup, Err(Error::InvariantViolation(_))));
        let bad = Code::new(2, 3, vec![w(&[1, 3])]);
        assert!(matches!(bad, Err(Error::InvariantViolation(_))));
        let c = Code::new(2, 3, vec![w(&[2, 1]), w(&[1, 2])]).unwrap();
        assert_eq!(c.words()[0], w(&[1, 2]));
        assert_eq!(c.weight(), Some(2));
        let mixed = Code::new(2, 3, vec![w(&[2, 0]), w(&[1, 2])]).unwrap();
        assert_eq!(mixed.weight(), None);
        assert!(Anticode::new(2, 3, vec![w(&[2, 0]), w(&[1, 2])]).is_err());
        assert_eq!(Anticode::new(2, 3, vec![]), Err(Error::EmptySet));
    }

    proptest! {
        #[test]
        fn triangle_inequality(
            a in proptest::collection::vec(0u16..4, 6),
            b in proptest::collection::vec(0u16..4, 6),
            c in proptest::collection::vec(0u16..4, 6),
        ) {
            let (a, b, c) = (Word::from(a), Word::from(b), Word::from(c));
            prop_assert!(distance(&a, &b) <= distance(&a, &c) + distance(&c, &b));
            prop_assert_eq!(distance(&a, &b), distance(&b, &a));
        }
    }
}
