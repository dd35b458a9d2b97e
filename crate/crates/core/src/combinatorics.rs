//! Small counting helpers shared by the constructions and verifiers.

use num_bigint::BigUint;

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n,w)·(q−1)^w`, the number of weight-`w` words of length `n` over `q` symbols.
pub fn space_size(n: usize, w: usize, q: u64) -> BigUint {
    binomial_big(n as u64, w as u64) * BigUint::from(q - 1).pow(w as u32)
}

/// Iterator over the `k`-subsets of `{0..n}` in colexicographic order.
///
/// Colex order compares subsets by their largest element first, so the
/// subsets of `{0..m}` form a prefix for every `m ≤ n`.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        ColexSubsets { n, current }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                return Some(out);
            }
            i += 1;
        }
        Some(out)
    }
}

pub fn colex_subsets(n: usize, k: usize) -> ColexSubsets {
    ColexSubsets::new(n, k)
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, m))` when `q = p^m` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn is_prime_power(q: u64) -> bool {
    q >= 2 && prime_power(q).is_some()
}

/// Bitmask of a coordinate set.
pub fn mask_of(coords: &[usize]) -> u64 {
    coords.iter().fold(0u64, |m, &c| m | (1u64 << c))
}
