//! Constructions of diameter-perfect constant-weight codes.
//!
//! Six families are distinguished by their parameters:
//!
//! | label             | shape                                          |
//! |-------------------|------------------------------------------------|
//! | `full-weight`     | `w = n`                                        |
//! | `near-full`       | `w = n−1`, alphabet `2^k+1`                    |
//! | `gen-steiner`     | generalized Steiner systems                    |
//! | `mds-cw`          | `d = w`, `q−1` codewords per support           |
//! | `one-per-support` | `d = w+1`, one codeword per support            |
//! | `moa-cw`          | `d < w`, an OA on the nonzero symbols per support |
//!
//! Every constructor returns a [`FamilyCode`]: the code, its claimed
//! parameters, the anticode it is diameter perfect against, and a
//! key=value manifest recording the deterministic construction choices.

use std::collections::HashMap;
use std::fmt;

use crate::anticodes::AnticodeParams;
use crate::combinatorics::{binomial, colex_subsets};
use crate::error::{Error, Result};
use crate::ortharray::{mds_min_weight_codewords, mds_parity_check, rs_oa, OrthogonalArray};
use crate::space::{Code, Symbol, Word, MAX_ALPHABET};

/// Upper limit on the number of codewords a constructor will emit.
pub const MAX_CONSTRUCTION_SIZE: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    FullWeight,
    NearFull,
    GenSteiner,
    MdsCw,
    OnePerSupport,
    MoaCw,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::FullWeight,
        Family::NearFull,
        Family::GenSteiner,
        Family::MdsCw,
        Family::OnePerSupport,
        Family::MoaCw,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::FullWeight => "full-weight",
            Family::NearFull => "near-full",
            Family::GenSteiner => "gen-steiner",
            Family::MdsCw => "mds-cw",
            Family::OnePerSupport => "one-per-support",
            Family::MoaCw => "moa-cw",
        }
    }

    pub fn from_label(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.label() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parameters a construction promises; `diameter = d−1` is the diameter of
/// the matching anticode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claimed {
    pub n: usize,
    pub d: usize,
    pub w: usize,
    pub q: u64,
    pub size: u128,
    pub diameter: usize,
}

impl fmt::Display for Claimed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})_{} size={} D={}", self.n, self.d, self.w, self.q, self.size, self.diameter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCode {
    code: Code,
    family: Family,
    claimed: Claimed,
    anticode: Option<AnticodeParams>,
    manifest: Vec<(String, String)>,
}

impl FamilyCode {
    fn new(code: Code, family: Family, claimed: Claimed, anticode: Option<AnticodeParams>) -> FamilyCode {
        let mut fc = FamilyCode { code, family, claimed, anticode, manifest: Vec::new() };
        fc.note("family", family);
        fc.note("n", claimed.n);
        fc.note("d", claimed.d);
        fc.note("w", claimed.w);
        fc.note("q", claimed.q);
        fc.note("size", claimed.size);
        fc.note("diameter", claimed.diameter);
        if let Some(a) = anticode {
            fc.note("anticode", a);
        }
        fc.note("space_size", crate::combinatorics::space_size(claimed.n, claimed.w, claimed.q));
        fc
    }

    fn note(&mut self, key: &str, value: impl fmt::Display) {
        self.manifest.push((key.to_string(), value.to_string()));
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn into_code(self) -> Code {
        self.code
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn claimed(&self) -> Claimed {
        self.claimed
    }

    /// The anticode this code is claimed to be diameter perfect against.
    pub fn anticode(&self) -> Option<AnticodeParams> {
        self.anticode
    }

    pub fn manifest(&self) -> &[(String, String)] {
        &self.manifest
    }

    pub fn manifest_value(&self, key: &str) -> Option<&str> {
        self.manifest.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// The manifest as `key=value` lines.
    pub fn manifest_text(&self) -> String {
        self.manifest.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

/// Family of an `(n,d,w)` code with `d ≤ w`.
fn orthogonal_family(d: usize, w: usize) -> Family {
    if d == w {
        Family::MdsCw
    } else {
        Family::MoaCw
    }
}

/// Size of an `(n,d,w)_q` code with an OA of strength `w−d+1` per support.
fn oa_family_size(n: usize, d: usize, w: usize, q: u64) -> u128 {
    binomial(n as u64, w as u64).unwrap_or(u64::MAX) as u128 * (q as u128 - 1).pow((w + 1 - d) as u32)
}

fn claimed_oa_family(n: usize, d: usize, w: usize, q: u64) -> (Claimed, AnticodeParams) {
    let claimed = Claimed { n, d, w, q, size: oa_family_size(n, d, w, q), diameter: d - 1 };
    (claimed, AnticodeParams::m(n, w, d - 1, q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Hamming-scheme code over `q−1` symbols to a full-weight code over `q`.
    Lift,
    /// Full-weight code over `q` back to the Hamming scheme over `q−1`.
    Project,
}

/// Relabels `s → s+1` (lift) or `s → s−1` (project); distances are unchanged.
pub fn f1_convert(c: &Code, direction: Direction) -> Result<Code> {
    let n = c.n();
    match direction {
        Direction::Lift => {
            let words = c
                .words()
                .iter()
                .map(|x| Word::from(x.symbols().iter().map(|&s| s + 1).collect::<Vec<_>>()))
                .collect();
            Code::with_weight(n, c.q() + 1, n, words)
        }
        Direction::Project => {
            if let Some(x) = c.words().iter().find(|x| x.weight() != n) {
                return Err(Error::NotFullWeight(x.to_string()));
            }
            if c.q() < 3 {
                return Err(Error::ParamsOutOfRange("projection needs q >= 3".into()));
            }
            let words = c
                .words()
                .iter()
                .map(|x| Word::from(x.symbols().iter().map(|&s| s - 1).collect::<Vec<_>>()))
                .collect();
            Code::new(n, c.q() - 1, words)
        }
    }
}

/// Minimum-weight codewords of an `[n, n−w+1, w]` MDS code over GF(q).
pub fn mds_cw_construct(n: usize, w: usize, q: u64) -> Result<FamilyCode> {
    let h = mds_parity_check(n, w, q)?;
    let code = mds_min_weight_codewords(&h)?;
    let (claimed, anticode) = claimed_oa_family(n, w, w, q);
    let mut fc = FamilyCode::new(code, Family::MdsCw, claimed, Some(anticode));
    fc.note("construction", "minimum-weight codewords of a generalized Reed-Solomon code");
    fc.note("claim", "mds-min-weight-codewords");
    fc.note("evaluation_points", "field elements in encoding order, infinity column last when n=q+1");
    fc.note("reduction_polynomial", format!("{:?}", h.field().reduction_polynomial()));
    Ok(fc)
}

/// Union of an `(n,w,q1)` and an `(n,w,q2)` MDS-CW code: the second code's
/// nonzero symbols are shifted to `q1..q1+q2−1`.
pub fn mds_cw_union(c1: &FamilyCode, c2: &FamilyCode) -> Result<FamilyCode> {
    let (a, b) = (&c1.code, &c2.code);
    let (w1, w2) = (a.weight(), b.weight());
    if a.n() != b.n() || w1 != w2 || w1.is_none() {
        return Err(Error::ShapeMismatch(format!(
            "(n,w) = ({},{:?}) vs ({},{:?})",
            a.n(),
            w1,
            b.n(),
            w2
        )));
    }
    let (n, w) = (a.n(), w1.expect("checked"));
    let (q1, q2) = (a.q(), b.q());
    let q = q1 + q2 - 1;
    if q > MAX_ALPHABET {
        return Err(Error::ParamsOutOfRange(format!("alphabet {q} too large")));
    }
    let shift = (q1 - 1) as Symbol;
    let mut words = a.words().to_vec();
    words.extend(b.words().iter().map(|x| {
        Word::from(x.symbols().iter().map(|&s| if s == 0 { 0 } else { s + shift }).collect::<Vec<_>>())
    }));
    let code = Code::with_weight(n, q, w, words)?;
    let (claimed, anticode) = claimed_oa_family(n, w, w, q);
    let mut fc = FamilyCode::new(code, Family::MdsCw, claimed, Some(anticode));
    fc.note("construction", format!("union of MDS-CW codes over {q1} and {q2} symbols"));
    fc.note("claim", "mds-cw-union");
    fc.note("relabeling", format!("second code s -> s+{shift} for s != 0"));
    Ok(fc)
}

/// One codeword per `w`-support over `1 + C(n−1,w−1)` symbols; at each
/// coordinate the incident codewords get `1, 2, 3, …` in colex support order.
pub fn f5_construct(n: usize, w: usize) -> Result<FamilyCode> {
    if w < 1 || w >= n || n > 64 {
        return Err(Error::ParamsOutOfRange(format!("need 1 <= w <= n-1, got n={n} w={w}")));
    }
    let q = binomial(n as u64 - 1, w as u64 - 1)
        .map(|b| b + 1)
        .filter(|&q| q <= MAX_ALPHABET)
        .ok_or_else(|| Error::ParamsOutOfRange(format!("alphabet 1+C({},{}) too large", n - 1, w - 1)))?;
    let count = binomial(n as u64, w as u64).unwrap_or(u64::MAX);
    if count > MAX_CONSTRUCTION_SIZE {
        return Err(Error::ParamsOutOfRange(format!("{count} codewords is too many")));
    }
    let mut next = vec![0 as Symbol; n];
    let words = colex_subsets(n, w)
        .map(|supp| {
            let mut s = vec![0 as Symbol; n];
            for &i in &supp {
                next[i] += 1;
                s[i] = next[i];
            }
            Word::from(s)
        })
        .collect();
    let code = Code::with_weight(n, q, w, words)?;
    let claimed = Claimed { n, d: w + 1, w, q, size: count as u128, diameter: w };
    let mut fc = FamilyCode::new(code, Family::OnePerSupport, claimed, Some(AnticodeParams::m(n, w, w, q)));
    fc.note("construction", "one codeword per support, distinct symbols per coordinate");
    fc.note("claim", "one-per-support-alphabet");
    fc.note("symbol_assignment", "1,2,3,... per coordinate in colex support order");
    Ok(fc)
}

/// A one-factorization of `K_m` (even `m`) or a near-one-factorization
/// (odd `m`); vertices are `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    m: usize,
    factors: Vec<Vec<(usize, usize)>>,
}

impl OneFactorization {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn factors(&self) -> &[Vec<(usize, usize)>] {
        &self.factors
    }

    /// Checks the partition and matching properties.
    pub fn is_valid(&self) -> bool {
        let m = self.m;
        let (count, per) = if m.is_multiple_of(2) { (m - 1, m / 2) } else { (m, (m - 1) / 2) };
        if self.factors.len() != count {
            return false;
        }
        let mut seen = vec![false; m * m];
        for f in &self.factors {
            if f.len() != per {
                return false;
            }
            let mut touched = vec![false; m];
            for &(a, b) in f {
                if a >= m || b >= m || a == b || touched[a] || touched[b] {
                    return false;
                }
                touched[a] = true;
                touched[b] = true;
                let key = a.min(b) * m + a.max(b);
                if seen[key] {
                    return false;
                }
                seen[key] = true;
            }
        }
        // every edge appears once: the counts already match C(m,2)
        count * per == m * (m - 1) / 2
    }
}

/// Round-robin construction with vertex `m−1` at the hub; for odd `m` the
/// construction runs on `m+1` vertices and the hub is deleted, leaving
/// vertex `r` isolated in factor `r`.
pub fn one_factorization(m: usize) -> Result<OneFactorization> {
    if m < 2 {
        return Err(Error::ParamsOutOfRange(format!("need m >= 2, got {m}")));
    }
    let even = if m.is_multiple_of(2) { m } else { m + 1 };
    let ring = even - 1;
    let hub = even - 1;
    let factors = (0..ring)
        .map(|r| {
            let mut edges = Vec::with_capacity(even / 2);
            if hub < m {
                edges.push((r.min(hub), r.max(hub)));
            }
            for k in 1..even / 2 {
                let (a, b) = ((r + k) % ring, (r + ring - k) % ring);
                edges.push((a.min(b), a.max(b)));
            }
            edges.sort_unstable();
            edges
        })
        .collect();
    let f = OneFactorization { m, factors };
    if !f.is_valid() {
        return Err(Error::InvariantViolation(format!("round-robin factorization of K_{m} is malformed")));
    }
    Ok(f)
}

/// One codeword per 3-support with distance 4 over `n−1` (odd `n`) or `n`
/// (even `n`) symbols. The symbol at coordinate `i` of the codeword on
/// `{i,j,k}` is `r+1`, where `{j,k}` lies in factor `r` of the
/// (near-)one-factorization of the other `n−1` coordinates.
pub fn f5_construct_w3(n: usize) -> Result<FamilyCode> {
    if !(4..=64).contains(&n) {
        return Err(Error::ParamsOutOfRange(format!("need 4 <= n <= 64, got {n}")));
    }
    let f = one_factorization(n - 1)?;
    let q = f.factors().len() as u64 + 1;
    // factor index of each edge of K_{n−1}, in local labels
    let mut factor_of: HashMap<(usize, usize), Symbol> = HashMap::new();
    for (r, edges) in f.factors().iter().enumerate() {
        for &e in edges {
            factor_of.insert(e, r as Symbol + 1);
        }
    }
    let local = |i: usize, x: usize| if x > i { x - 1 } else { x };
    let words = colex_subsets(n, 3)
        .map(|supp| {
            let mut s = vec![0 as Symbol; n];
            for (pos, &i) in supp.iter().enumerate() {
                let others: Vec<usize> = supp.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &x)| local(i, x)).collect();
                s[i] = factor_of[&(others[0], others[1])];
            }
            Word::from(s)
        })
        .collect();
    let code = Code::with_weight(n, q, 3, words)?;
    let size = binomial(n as u64, 3).expect("small") as u128;
    let claimed = Claimed { n, d: 4, w: 3, q, size, diameter: 3 };
    let mut fc = FamilyCode::new(code, Family::OnePerSupport, claimed, Some(AnticodeParams::m(n, 3, 3, q)));
    let kind = if (n - 1).is_multiple_of(2) { "one-factorization" } else { "near-one-factorization" };
    fc.note("construction", format!("{kind} of K_{} per coordinate", n - 1));
    fc.note("claim", "one-per-support-weight3-alphabet");
    fc.note("factorization", "round-robin, hub = last vertex");
    Ok(fc)
}

/// Rows of the modified Reed-Solomon array `OA(t,n,q)`.
pub fn moa_cw_construct(n: usize, t: usize, l: usize, q: u64) -> Result<FamilyCode> {
    if t < 2 || l < 1 || t + l >= n {
        return Err(Error::ParamsOutOfRange(format!("need t >= 2, l >= 1, t+l < n (positive output diameter), got n={n} t={t} l={l}")));
    }
    check_block_supply(n, l, q)?;
    let oa = rs_oa(t, n, q)?;
    moa_cw_from_oa(&oa, l)
}

fn check_block_supply(n: usize, l: usize, q: u64) -> Result<u64> {
    let blocks = binomial(n as u64 - 1, l as u64).unwrap_or(u64::MAX);
    if q < blocks {
        return Err(Error::ParamsInfeasible(format!("q={q} < C({},{l})={blocks}", n - 1)));
    }
    Ok(blocks)
}

/// The modified-array construction from any OA of index one:
///
/// 1. group rows by the symbol `r` of the last column (`q^(t−1)` rows each);
/// 2. shift every symbol `s → s+1`;
/// 3. in block `r`, zero the columns of `S_r`, the `r`-th `l`-subset of the
///    first `n−1` columns in colex order;
/// 4. drop the last column;
/// 5. keep only the first `C(n−1,l)` blocks.
///
/// The rows form an `(n−1, n−t−l+1, n−1−l)` code over `q+1` symbols.
pub fn moa_cw_from_oa(oa: &OrthogonalArray, l: usize) -> Result<FamilyCode> {
    let (n, t, q) = (oa.n(), oa.strength(), oa.q());
    if oa.index() != 1 {
        return Err(Error::PreconditionViolated(format!("OA index {} is not one", oa.index())));
    }
    if t < 2 || l < 1 || t + l >= n {
        return Err(Error::ParamsOutOfRange(format!("need t >= 2, l >= 1, t+l < n (positive output diameter), got n={n} t={t} l={l}")));
    }
    if q + 1 > MAX_ALPHABET {
        return Err(Error::ParamsOutOfRange(format!("alphabet {} too large", q + 1)));
    }
    let blocks = check_block_supply(n, l, q)? as usize;
    let subsets: Vec<Vec<usize>> = colex_subsets(n - 1, l).collect();
    let words: Vec<Word> = oa
        .rows()
        .iter()
        .filter(|row| (row[n - 1] as usize) < blocks)
        .map(|row| {
            let zeroed = &subsets[row[n - 1] as usize];
            let mut s: Vec<Symbol> = row[..n - 1].iter().map(|&x| x + 1).collect();
            for &c in zeroed {
                s[c] = 0;
            }
            Word::from(s)
        })
        .collect();
    let (len, w, d) = (n - 1, n - 1 - l, n + 1 - t - l);
    let code = Code::with_weight(len, q + 1, w, words)?;
    let family = orthogonal_family(d, w);
    let (claimed, anticode) = claimed_oa_family(len, d, w, q + 1);
    debug_assert_eq!(claimed.size, blocks as u128 * (q as u128).pow(t as u32 - 1));
    let mut fc = FamilyCode::new(code, family, claimed, Some(anticode));
    fc.note("construction", format!("modified OA({t},{n},{q}) with l={l}"));
    fc.note("claim", "modified-oa-code");
    fc.note("subset_order", "colex l-subsets of the first n-1 columns");
    fc.note("blocks", "rows grouped by last-column symbol 0..C(n-1,l)-1");
    fc.note("symbol_shift", "s -> s+1");
    Ok(fc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceMode {
    /// Codewords with a zero in the first coordinate, which is deleted.
    Puncture,
    /// Codewords with a nonzero first coordinate, which is deleted.
    Shorten,
}

/// Puncturing keeps `(d, w)`; shortening lowers both by one.
pub fn moa_reduce(c: &FamilyCode, mode: ReduceMode) -> Result<FamilyCode> {
    let Claimed { n, d, w, q, .. } = c.claimed;
    if !matches!(c.family, Family::MoaCw | Family::MdsCw) {
        return Err(Error::PreconditionViolated(format!("{} is not an OA-type family", c.family)));
    }
    let (keep_zero, d2, w2) = match mode {
        ReduceMode::Puncture => {
            if w >= n {
                return Err(Error::ParamsOutOfRange("puncturing a full-weight code leaves nothing".into()));
            }
            (true, d, w)
        }
        ReduceMode::Shorten => {
            // at d = 2 the shortened code would be the whole space, with no anticode of positive diameter
            if d < 3 || w < 2 {
                return Err(Error::ParamsOutOfRange(format!("shortening needs d >= 3 and w >= 2, got d={d} w={w}")));
            }
            (false, d - 1, w - 1)
        }
    };
    let words = c
        .code
        .words()
        .iter()
        .filter(|x| (x.symbols()[0] == 0) == keep_zero)
        .map(|x| Word::from(&x.symbols()[1..]))
        .collect();
    let code = Code::with_weight(n - 1, q, w2, words)?;
    let (claimed, anticode) = claimed_oa_family(n - 1, d2, w2, q);
    let mut fc = FamilyCode::new(code, orthogonal_family(d2, w2), claimed, Some(anticode));
    let how = match mode {
        ReduceMode::Puncture => "puncture: zero in the first coordinate, coordinate deleted",
        ReduceMode::Shorten => "shorten: nonzero first coordinate, coordinate deleted",
    };
    fc.note("construction", how);
    fc.note("claim", "moa-puncture-shorten");
    fc.note("parent", c.claimed);
    Ok(fc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::distance;

    #[test]
    fn lift_and_project() {
        let oa = rs_oa(2, 4, 3).unwrap().to_code().unwrap();
        let lifted = f1_convert(&oa, Direction::Lift).unwrap();
        assert_eq!((lifted.len(), lifted.q(), lifted.weight()), (9, 4, Some(4)));
        assert_eq!(lifted.min_distance().unwrap(), 3);
        assert_eq!(f1_convert(&lifted, Direction::Project).unwrap(), oa);
        let rep = Code::new(3, 2, vec![Word::from(vec![0, 0, 0]), Word::from(vec![1, 1, 1])]).unwrap();
        let l = f1_convert(&rep, Direction::Lift).unwrap();
        assert_eq!(l.words(), &[Word::from(vec![1, 1, 1]), Word::from(vec![2, 2, 2])]);
        let partial = Code::new(2, 3, vec![Word::from(vec![1, 0])]).unwrap();
        assert!(matches!(f1_convert(&partial, Direction::Project), Err(Error::NotFullWeight(_))));
        for (i, x) in oa.words().iter().enumerate() {
            for (j, y) in oa.words().iter().enumerate() {
                assert_eq!(distance(x, y), distance(&lifted.words()[i], &lifted.words()[j]));
            }
        }
    }

    #[test]
    fn mds_cw() {
        let c = mds_cw_construct(5, 3, 4).unwrap();
        assert_eq!((c.code().len(), c.code().min_distance().unwrap()), (30, 3));
        assert_eq!(c.claimed().size, 30);
        assert!(matches!(mds_cw_construct(6, 3, 4), Err(Error::ParamsInfeasible(_))));
        let a = mds_cw_construct(6, 3, 5).unwrap();
        let g = crate::designs::gs_construct_2_3(5).unwrap();
        assert_eq!(a.code(), g.code());
    }

    #[test]
    fn union() {
        let c = mds_cw_construct(4, 3, 3).unwrap();
        let u = mds_cw_union(&c, &c).unwrap();
        assert_eq!((u.code().len(), u.code().q(), u.code().min_distance().unwrap()), (16, 5, 3));
        assert_eq!(u.claimed().size, 16);
        let other = mds_cw_construct(4, 2, 3).unwrap();
        assert!(matches!(mds_cw_union(&c, &other), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn one_per_support() {
        let c = f5_construct(4, 2).unwrap();
        assert_eq!((c.code().q(), c.code().len(), c.code().min_distance().unwrap()), (4, 6, 3));
        let c = f5_construct(5, 4).unwrap();
        assert_eq!((c.code().q(), c.code().len(), c.code().min_distance().unwrap()), (5, 5, 5));
        assert!(f5_construct(4, 4).is_err());
        for n in 2..=8usize {
            for w in 1..n {
                let c = f5_construct(n, w).unwrap();
                assert_eq!(c.code().len() as u64, binomial(n as u64, w as u64).unwrap());
                if c.code().len() >= 2 {
                    assert_eq!(c.code().min_distance().unwrap(), w + 1);
                }
                let mut masks: Vec<u64> = c.code().words().iter().map(|x| x.support_mask()).collect();
                masks.sort_unstable();
                masks.dedup();
                assert_eq!(masks.len(), c.code().len());
            }
        }
    }

    #[test]
    fn factorizations() {
        for m in 2..=15usize {
            let f = one_factorization(m).unwrap();
            assert!(f.is_valid());
            let expected = if m % 2 == 0 { m - 1 } else { m };
            assert_eq!(f.factors().len(), expected);
        }
        let f = one_factorization(5).unwrap();
        assert!(f.factors().iter().all(|e| e.len() == 2));
        assert!(one_factorization(1).is_err());
    }

    #[test]
    fn weight_three() {
        for (n, q) in [(4usize, 4u64), (5, 4), (6, 6), (7, 6), (8, 8), (9, 8), (10, 10)] {
            let c = f5_construct_w3(n).unwrap();
            assert_eq!(c.code().q(), q, "n={n}");
            assert_eq!(c.code().len() as u64, binomial(n as u64, 3).unwrap());
            assert_eq!(c.code().min_distance().unwrap(), 4);
        }
    }

    #[test]
    fn modified_oa() {
        let c = moa_cw_construct(6, 2, 1, 5).unwrap();
        assert_eq!(c.family(), Family::MdsCw);
        assert_eq!((c.code().n(), c.code().weight(), c.code().q(), c.code().len()), (5, Some(4), 6, 25));
        assert_eq!(c.code().min_distance().unwrap(), 4);
        let c = moa_cw_construct(7, 3, 1, 7).unwrap();
        assert_eq!(c.family(), Family::MoaCw);
        assert_eq!((c.code().n(), c.code().weight(), c.code().q(), c.code().len()), (6, Some(5), 8, 294));
        assert_eq!(c.code().min_distance().unwrap(), 4);
        assert!(matches!(moa_cw_construct(6, 2, 2, 5), Err(Error::ParamsInfeasible(_))));
    }

    #[test]
    fn reductions() {
        let c = moa_cw_construct(7, 3, 1, 7).unwrap();
        let p = moa_reduce(&c, ReduceMode::Puncture).unwrap();
        assert_eq!((p.claimed().n, p.claimed().d, p.claimed().w, p.claimed().q), (5, 4, 5, 8));
        assert_eq!(p.code().len() as u128, p.claimed().size);
        assert_eq!(p.code().min_distance().unwrap(), 4);
        let s = moa_reduce(&c, ReduceMode::Shorten).unwrap();
        assert_eq!((s.claimed().n, s.claimed().d, s.claimed().w), (5, 3, 4));
        assert_eq!(s.code().len() as u128, s.claimed().size);
        assert_eq!(s.code().min_distance().unwrap(), 3);
        let f5 = f5_construct(4, 2).unwrap();
        assert!(moa_reduce(&f5, ReduceMode::Shorten).is_err());
        let w2 = mds_cw_construct(3, 2, 3).unwrap();
        assert!(matches!(moa_reduce(&w2, ReduceMode::Shorten), Err(Error::ParamsOutOfRange(_))));
    }
}
