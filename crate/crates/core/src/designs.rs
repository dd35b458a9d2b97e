//! Steiner systems and generalized Steiner systems.
//!
//! Points and coordinates are 0-based throughout: a Steiner system on `n`
//! points uses `{0..n}`, and a derivation at coordinate `i` removes the
//! `i`-th symbol of every word.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{binomial, colex_subsets, mask_of};
use crate::error::{Error, Result};
use crate::ortharray::{mds_min_weight_codewords, mds_parity_check};
use crate::report::VerificationReport;
use crate::space::{Code, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    n: usize,
    t: usize,
    w: usize,
    blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    /// Wraps a block list; blocks are sorted internally. Use
    /// [`SteinerSystem::verify`] to certify it.
    pub fn new(n: usize, t: usize, w: usize, blocks: Vec<Vec<usize>>) -> Result<SteinerSystem> {
        if t == 0 || t > w || w > n || n > 64 {
            return Err(Error::ParamsOutOfRange(format!("need 1 <= t <= w <= n <= 64, got t={t} w={w} n={n}")));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if let Some(b) = blocks.iter().find(|b| b.len() != w || b.windows(2).any(|p| p[0] == p[1]) || b.iter().any(|&x| x >= n)) {
            return Err(Error::InvariantViolation(format!("block {b:?} is not a {w}-subset of 0..{n}")));
        }
        blocks.sort();
        Ok(SteinerSystem { n, t, w, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn verify(&self) -> VerificationReport {
        steiner_verify(&self.blocks, self.t, self.w, self.n)
    }

    /// Characteristic vectors as a binary constant-weight code.
    pub fn to_code(&self) -> Result<Code> {
        let words = self
            .blocks
            .iter()
            .map(|b| {
                let mut s = vec![0 as Symbol; self.n];
                for &x in b {
                    s[x] = 1;
                }
                Word::from(s)
            })
            .collect();
        Code::with_weight(self.n, 2, self.w, words)
    }

    /// The Fano plane: translates of the difference set `{0,1,3}` mod 7.
    pub fn fano() -> SteinerSystem {
        let blocks = (0..7).map(|i| [0, 1, 3].iter().map(|d| (d + i) % 7).collect()).collect();
        SteinerSystem::new(7, 2, 3, blocks).expect("valid shape")
    }

    /// The affine plane AG(2,3) as S(2,3,9); point `(x,y)` is `3x+y`.
    pub fn affine_plane_3() -> SteinerSystem {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            for x in 0..3 {
                for y in 0..3 {
                    let mut line: Vec<usize> =
                        (0..3).map(|k| 3 * ((x + k * dx) % 3) + (y + k * dy) % 3).collect();
                    line.sort_unstable();
                    if !blocks.contains(&line) {
                        blocks.push(line);
                    }
                }
            }
        }
        SteinerSystem::new(9, 2, 3, blocks).expect("valid shape")
    }

    /// All `w`-subsets, a system with `t = w`.
    pub fn trivial(n: usize, w: usize) -> SteinerSystem {
        SteinerSystem::new(n, w, w, colex_subsets(n, w).collect()).expect("valid shape")
    }
}

impl fmt::Display for SteinerSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{},{}) with {} blocks", self.t, self.w, self.n, self.blocks.len())
    }
}

/// `C(n,t)/C(w,t)` when it is an integer.
fn block_count(t: usize, w: usize, n: usize) -> Option<u64> {
    let num = binomial(n as u64, t as u64)?;
    let den = binomial(w as u64, t as u64)?;
    (den != 0 && num % den == 0).then(|| num / den)
}

/// Checks that every `t`-subset lies in exactly one block, plus the block
/// count and the minimum Johnson distance `w−t+1` of the blocks.
pub fn steiner_verify(blocks: &[Vec<usize>], t: usize, w: usize, n: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    let shape_ok = n <= 64
        && t <= w
        && blocks.iter().all(|b| {
            let mut s = b.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == w && b.len() == w && s.iter().all(|&x| x < n)
        });
    r.push("block-shape", "steiner-blocks", format!("{w}-subsets_of_{n}_points"), if shape_ok { "ok" } else { "malformed" }, shape_ok);
    if !shape_ok {
        return r;
    }

    let mut counts: HashMap<u64, usize> = HashMap::new();
    for b in blocks {
        for sub in colex_subsets(w, t) {
            let pts: Vec<usize> = sub.iter().map(|&i| b[i]).collect();
            *counts.entry(mask_of(&pts)).or_insert(0) += 1;
        }
    }
    let total = binomial(n as u64, t as u64).unwrap_or(u64::MAX);
    let uncovered = total - counts.len() as u64;
    let repeated = counts.values().filter(|&&c| c > 1).count() as u64;
    r.push(
        "coverage",
        "steiner-coverage",
        "uncovered=0,repeated=0",
        format!("uncovered={uncovered},repeated={repeated}"),
        uncovered == 0 && repeated == 0,
    );

    match block_count(t, w, n) {
        Some(b) => r.expect_eq("block-count", "steiner-block-count", b, blocks.len() as u64),
        None => r.push("block-count", "steiner-block-count", "non-integer", blocks.len(), false),
    }

    if blocks.len() >= 2 {
        let masks: Vec<u64> = blocks.iter().map(|b| mask_of(b)).collect();
        let mut min = usize::MAX;
        for (i, a) in masks.iter().enumerate() {
            for b in &masks[i + 1..] {
                min = min.min(w - (a & b).count_ones() as usize);
            }
        }
        r.expect_eq("johnson-distance", "steiner-distance", w - t + 1, min);
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divisibility {
    Pass,
    /// `C(n−i,t−i)/C(w−i,t−i)` is not an integer.
    Fail { index: usize },
}

/// Necessary divisibility conditions for S(t,w,n).
pub fn steiner_divisibility(t: usize, w: usize, n: usize) -> Divisibility {
    for i in 0..t {
        if block_count(t - i, w - i, n - i).is_none() {
            return Divisibility::Fail { index: i };
        }
    }
    Divisibility::Pass
}

/// Blocks through `point` with the point removed: an S(t−1,w−1,n−1).
pub fn steiner_derive(s: &SteinerSystem, point: usize) -> Result<SteinerSystem> {
    if s.t == 1 {
        return Err(Error::DerivationUndefined);
    }
    if point >= s.n {
        return Err(Error::ParamsOutOfRange(format!("point {point} outside 0..{}", s.n)));
    }
    let blocks = s
        .blocks
        .iter()
        .filter(|b| b.contains(&point))
        .map(|b| b.iter().filter(|&&x| x != point).map(|&x| if x > point { x - 1 } else { x }).collect())
        .collect();
    SteinerSystem::new(s.n - 1, s.t - 1, s.w - 1, blocks)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSteinerSystem {
    code: Code,
    t: usize,
}

impl GeneralizedSteinerSystem {
    /// Wraps a constant-weight code; use [`GeneralizedSteinerSystem::verify`]
    /// to certify it.
    pub fn new(code: Code, t: usize) -> Result<GeneralizedSteinerSystem> {
        let w = code.weight().ok_or_else(|| Error::InvariantViolation("code is not constant weight".into()))?;
        if t == 0 || t > w {
            return Err(Error::ParamsOutOfRange(format!("need 1 <= t <= w, got t={t} w={w}")));
        }
        Ok(GeneralizedSteinerSystem { code, t })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn into_code(self) -> Code {
        self.code
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn w(&self) -> usize {
        self.code.weight().expect("constant weight")
    }

    pub fn verify(&self) -> VerificationReport {
        gs_verify(&self.code, self.t)
    }
}

/// `C(n,t)·(q−1)^t / C(w,t)` when it is an integer.
pub fn gs_size(t: usize, w: usize, n: usize, q: u64) -> Option<u128> {
    let num = (binomial(n as u64, t as u64)? as u128).checked_mul((q as u128 - 1).checked_pow(t as u32)?)?;
    let den = binomial(w as u64, t as u64)? as u128;
    (den != 0 && num % den == 0).then(|| num / den)
}

/// Restriction of `x` to the coordinates `cols` as a weight-`|cols|` word.
fn sub_word(x: &Word, cols: &[usize]) -> Word {
    let mut s = vec![0 as Symbol; x.len()];
    for &c in cols {
        s[c] = x.symbols()[c];
    }
    Word::from(s)
}

/// Certifies GS(t, w, n, q): minimum distance `2(w−t)+1` (`2(w−t+1)` for
/// binary codes), exact coverage of
/// every weight-`t` word, and the size formula.
///
/// A weight-`t` word `x` is covered by `c` when `supp(x) ⊆ supp(c)` and the
/// symbols agree on `supp(x)`, which for weight-`w` codewords is the same as
/// `d(x,c) = w−t`.
pub fn gs_verify(c: &Code, t: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    let Some(w) = c.weight() else {
        r.push("constant-weight", "gs-shape", "constant", "mixed", false);
        return r;
    };
    if t == 0 || t > w {
        r.push("strength", "gs-shape", format!("1..={w}"), t, false);
        return r;
    }
    let (n, q) = (c.n(), c.q());

    if c.len() >= 2 {
        // binary constant-weight distances are even, so there the target
        // rounds up to 2(w−t+1), the Hamming form of Johnson distance w−t+1
        let target = if q == 2 { 2 * (w - t) + 2 } else { 2 * (w - t) + 1 };
        let d = c.min_distance().expect("at least two words");
        r.expect_eq("min-distance", "gs-distance", target, d);
    }

    let subsets: Vec<Vec<usize>> = colex_subsets(w, t).collect();
    let mut counts: HashMap<Word, usize> = c
        .words()
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Word, usize>, x| {
            let supp = x.support();
            for sub in &subsets {
                let cols: Vec<usize> = sub.iter().map(|&i| supp[i]).collect();
                *acc.entry(sub_word(x, &cols)).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    counts.shrink_to_fit();
    let total = binomial(n as u64, t as u64).unwrap_or(u64::MAX) as u128 * (q as u128 - 1).pow(t as u32);
    let uncovered = total - counts.len() as u128;
    let repeated = counts.values().filter(|&&v| v > 1).count();
    r.push(
        "coverage",
        "gs-coverage",
        "uncovered=0,repeated=0",
        format!("uncovered={uncovered},repeated={repeated}"),
        uncovered == 0 && repeated == 0,
    );

    match gs_size(t, w, n, q) {
        Some(size) => r.expect_eq("size", "gs-size", size, c.len() as u128),
        None => r.push("size", "gs-size", "non-integer", c.len(), false),
    }
    r
}

/// GS(2,3,q+1,q) from the weight-3 codewords of the `[q+1, q−1, 3]` MDS code.
pub fn gs_construct_2_3(q: u64) -> Result<GeneralizedSteinerSystem> {
    let h = mds_parity_check(q as usize + 1, 3, q)?;
    if q < 3 {
        return Err(Error::ParamsOutOfRange(format!("GS(2,3,q+1,q) needs q >= 3, got {q}")));
    }
    GeneralizedSteinerSystem::new(mds_min_weight_codewords(&h)?, 2)
}

/// Codewords carrying `symbol` at `coordinate`, with that coordinate
/// deleted: a GS(t−1, w−1, n−1, q).
pub fn gs_derive(g: &GeneralizedSteinerSystem, coordinate: usize, symbol: Symbol) -> Result<GeneralizedSteinerSystem> {
    if g.t == 1 {
        return Err(Error::DerivationUndefined);
    }
    let (n, q) = (g.code.n(), g.code.q());
    if coordinate >= n || symbol == 0 || symbol as u64 >= q {
        return Err(Error::ParamsOutOfRange(format!(
            "need coordinate < {n} and 0 < symbol < {q}, got {coordinate}, {symbol}"
        )));
    }
    let words = g
        .code
        .words()
        .iter()
        .filter(|x| x.symbols()[coordinate] == symbol)
        .map(|x| {
            let mut s = x.symbols().to_vec();
            s.remove(coordinate);
            Word::from(s)
        })
        .collect();
    GeneralizedSteinerSystem::new(Code::with_weight(n - 1, q, g.w() - 1, words)?, g.t - 1)
}
