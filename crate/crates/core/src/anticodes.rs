//! The explicit anticode families.
//!
//! * `A(n,w,t)`: binary weight-`w` words with ones on the first `t`
//!   coordinates; `Ā(n,w,t)` is its complement (weight `n−w`).
//! * `Aˢ(n,w,t)`: ones on the first `t` coordinates, any weight-`(w−t)` word
//!   over `{0..q}` on the rest.
//! * `Aᵐ(n,w,δ)`: any nonzero symbols on the first `δ` coordinates, ones on
//!   the next `w−δ`, zeros after that.
//! * Balls `B_e(x)` restricted to `J_q(n,w)`, centred on the canonical word.
//!
//! Every family is materialized as an explicit word list so that size
//! claims are counted rather than computed.

use std::fmt;

use crate::combinatorics::colex_subsets;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::space::{ball, canonical_word, enumerate_space, Anticode, Symbol, Word, MAX_ALPHABET};

/// Words beyond this count are refused rather than materialized.
pub const MAX_ANTICODE_SIZE: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnticodeFamily {
    BinaryA,
    BinaryComplement,
    S,
    M,
    Ball,
}

/// Parameters naming one member of a family. `t` is the fixed-ones prefix
/// length (A, Ā, Aˢ), `delta` the free prefix length (Aᵐ) and `e` the
/// radius (balls); unused fields are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnticodeParams {
    pub family: AnticodeFamily,
    pub n: usize,
    pub w: usize,
    pub q: u64,
    pub t: usize,
    pub delta: usize,
    pub e: usize,
}

impl AnticodeParams {
    pub fn s(n: usize, w: usize, t: usize, q: u64) -> Self {
        AnticodeParams { family: AnticodeFamily::S, n, w, q, t, delta: 0, e: 0 }
    }

    pub fn m(n: usize, w: usize, delta: usize, q: u64) -> Self {
        AnticodeParams { family: AnticodeFamily::M, n, w, q, t: 0, delta, e: 0 }
    }

    pub fn ball(n: usize, w: usize, e: usize, q: u64) -> Self {
        AnticodeParams { family: AnticodeFamily::Ball, n, w, q, t: 0, delta: 0, e }
    }

    pub fn binary(n: usize, w: usize, t: usize, complement: bool) -> Self {
        let family = if complement { AnticodeFamily::BinaryComplement } else { AnticodeFamily::BinaryA };
        AnticodeParams { family, n, w, q: 2, t, delta: 0, e: 0 }
    }

    pub fn build(&self) -> Result<Anticode> {
        match self.family {
            AnticodeFamily::BinaryA => anticode_binary(self.n, self.w, self.t, false),
            AnticodeFamily::BinaryComplement => anticode_binary(self.n, self.w, self.t, true),
            AnticodeFamily::S => anticode_s(self.n, self.w, self.t, self.q),
            AnticodeFamily::M => anticode_m(self.n, self.w, self.delta, self.q),
            AnticodeFamily::Ball => anticode_ball(self.n, self.w, self.e, self.q),
        }
    }
}

impl fmt::Display for AnticodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            AnticodeFamily::BinaryA => write!(f, "A({},{},{})", self.n, self.w, self.t),
            AnticodeFamily::BinaryComplement => write!(f, "Abar({},{},{})", self.n, self.w, self.t),
            AnticodeFamily::S => write!(f, "As({},{},{})_q{}", self.n, self.w, self.t, self.q),
            AnticodeFamily::M => write!(f, "Am({},{},{})_q{}", self.n, self.w, self.delta, self.q),
            AnticodeFamily::Ball => write!(f, "Ball({},{},e={})_q{}", self.n, self.w, self.e, self.q),
        }
    }
}

fn check_alphabet(q: u64) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&q) {
        return Err(Error::ParamsOutOfRange(format!("alphabet size {q}")));
    }
    Ok(())
}

fn check_size(count: u128) -> Result<()> {
    if count > MAX_ANTICODE_SIZE as u128 {
        return Err(Error::ParamsOutOfRange(format!("{count} words is too many to materialize")));
    }
    Ok(())
}

/// `A(n,w,t)`, or `Ā(n,w,t)` with `complement` set.
pub fn anticode_binary(n: usize, w: usize, t: usize, complement: bool) -> Result<Anticode> {
    if t > w || 2 * w > n {
        return Err(Error::ParamsOutOfRange(format!("need t <= w <= n/2, got n={n} w={w} t={t}")));
    }
    let words = colex_subsets(n - t, w - t)
        .map(|rest| {
            let mut s = vec![0 as Symbol; n];
            for x in s.iter_mut().take(t) {
                *x = 1;
            }
            for &i in &rest {
                s[t + i] = 1;
            }
            if complement {
                for x in s.iter_mut() {
                    *x ^= 1;
                }
            }
            Word::from(s)
        })
        .collect();
    Anticode::new(n, 2, words)
}

/// `Aˢ(n,w,t)` over `q` symbols.
pub fn anticode_s(n: usize, w: usize, t: usize, q: u64) -> Result<Anticode> {
    if t > w || w > n {
        return Err(Error::ParamsOutOfRange(format!("need t <= w <= n, got n={n} w={w} t={t}")));
    }
    check_alphabet(q)?;
    let count = crate::combinatorics::space_size(n - t, w - t, q);
    check_size(u128::try_from(&count).unwrap_or(u128::MAX))?;
    let words = enumerate_space(n - t, w - t, q)
        .map(|tail| {
            let mut s = vec![1 as Symbol; t];
            s.extend_from_slice(tail.symbols());
            Word::from(s)
        })
        .collect();
    Anticode::new(n, q, words)
}

/// `Aᵐ(n,w,δ)` over `q` symbols.
pub fn anticode_m(n: usize, w: usize, delta: usize, q: u64) -> Result<Anticode> {
    if delta < 1 || delta > w || w > n {
        return Err(Error::ParamsOutOfRange(format!("need 1 <= delta <= w <= n, got n={n} w={w} delta={delta}")));
    }
    check_alphabet(q)?;
    check_size((q as u128 - 1).checked_pow(delta as u32).unwrap_or(u128::MAX))?;
    let words = enumerate_space(delta, delta, q)
        .map(|head| {
            let mut s = head.symbols().to_vec();
            s.resize(w, 1);
            s.resize(n, 0);
            Word::from(s)
        })
        .collect();
    Anticode::new(n, q, words)
}

/// The radius-`e` ball around the canonical word, restricted to `J_q(n,w)`.
pub fn anticode_ball(n: usize, w: usize, e: usize, q: u64) -> Result<Anticode> {
    if w > n {
        return Err(Error::ParamsOutOfRange(format!("need w <= n, got n={n} w={w}")));
    }
    check_alphabet(q)?;
    let size = crate::space::ball_size(n, w, q, e);
    check_size(u128::try_from(&size).unwrap_or(u128::MAX))?;
    Anticode::new(n, q, ball(&canonical_word(n, w), e, q, true))
}

/// Recomputes the diameter by a full pairwise scan and compares diameter
/// and size against the expected values.
pub fn anticode_verify(a: &Anticode, expected_diameter: usize, expected_size: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.expect_eq("diameter", "anticode-diameter", expected_diameter, a.diameter());
    r.expect_eq("size", "anticode-size", expected_size, a.len());
    r
}
