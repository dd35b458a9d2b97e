//! Finite fields GF(p^m) with elements encoded as base-`p` integers.
//!
//! An element `v` in `0..q` stands for the residue polynomial whose
//! coefficient of `x^i` is the `i`-th base-`p` digit of `v`. The reduction
//! polynomial is the lexicographically smallest monic irreducible of degree
//! `m` (compared by the same integer encoding of its lower coefficients), so
//! a given `q` always yields the same field.

use std::fmt;

use crate::combinatorics::{factorize, prime_power};
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Neg,
}

#[derive(Clone)]
pub struct Field {
    q: u32,
    p: u32,
    m: u32,
    /// Coefficients of the monic reduction polynomial, constant term first.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        if q < 2 {
            return Err(Error::ParamsOutOfRange(format!("field order {q} < 2")));
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::ParamsOutOfRange(format!("field order {q} exceeds {MAX_ORDER}")));
        }
        let p = p as u32;
        let modulus = smallest_irreducible(p, m);
        let poly = PolyRing { p, modulus: &modulus };
        let q32 = q as u32;

        let order = q32 - 1;
        let prime_divisors: Vec<u32> = factorize(order as u64).iter().map(|&(r, _)| r as u32).collect();
        let generator = (1..q32)
            .find(|&g| prime_divisors.iter().all(|&r| poly.pow(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = poly.mul(acc, generator);
        }
        Ok(Field { q: q32, p, m, modulus, exp, log })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Reduction polynomial coefficients, constant term first (length `m+1`, monic).
    pub fn reduction_polynomial(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::ParamsOutOfRange(format!("{value} is not an element of GF({})", self.q)))
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let order = self.q as usize - 1;
        let i = (self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize) % order;
        FieldElement(self.exp[i])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q as usize - 1;
        let i = (order - self.log[a.0 as usize] as usize) % order;
        Ok(FieldElement(self.exp[i]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement(1);
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let order = self.q as u64 - 1;
        let i = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        FieldElement(self.exp[i as usize])
    }

    /// Single entry point for the four primitive operations; `b` is ignored
    /// by the unary ones.
    pub fn arith(&self, a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }
}

/// Arithmetic on base-`p` encoded residues modulo a fixed monic polynomial.
/// Only used while building the log tables.
struct PolyRing<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl PolyRing<'_> {
    fn digits(&self, mut v: u32) -> Vec<u32> {
        let m = self.modulus.len() - 1;
        let mut out = vec![0; m];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.modulus.len() - 1;
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce from the top: x^m = -(lower modulus terms).
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (k, &mk) in self.modulus.iter().enumerate().take(m) {
                let idx = deg - m + k;
                prod[idx] = (prod[idx] + (p - c) * mk as u64) % p;
            }
        }
        let reduced: Vec<u32> = prod[..m].iter().map(|&x| x as u32).collect();
        self.encode(&reduced)
    }

    fn pow(&self, a: u32, mut e: u32) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let m = m as usize;
    let count = (p as u64).pow(m as u32);
    for tail in 0..count {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut v = tail;
        for _ in 0..m {
            coeffs.push((v % p as u64) as u32);
            v /= p as u64;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for tail in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = tail;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if remainder_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn remainder_is_zero(poly: &[u32], monic_divisor: &[u32], p: u32) -> bool {
    let mut rem: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
    let d = monic_divisor.len() - 1;
    let p = p as u64;
    for top in (d..rem.len()).rev() {
        let c = rem[top] % p;
        if c == 0 {
            continue;
        }
        for (k, &dk) in monic_divisor.iter().enumerate() {
            let idx = top - d + k;
            rem[idx] = (rem[idx] + (p - c) * dk as u64) % p;
        }
    }
    rem[..d].iter().all(|&c| c % p == 0)
}
