//! Independent certification of constructed codes.
//!
//! Nothing here trusts a constructor: distances, supports and coverage are
//! recomputed from the word lists, and all size products use
//! arbitrary-precision integers.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::anticodes::AnticodeParams;
use crate::combinatorics::{binomial, colex_subsets, mask_of, space_size};
use crate::designs::gs_size;
use crate::error::{Error, Result};
use crate::families::{Family, FamilyCode};
use crate::ortharray::oa_verify;
use crate::report::VerificationReport;
use crate::space::{ball, ball_size, enumerate_space, Anticode, Code, Symbol, Word};

/// Full-space scans refuse spaces larger than this.
pub const MAX_SCAN_SPACE: u64 = 1 << 22;

/// Counts the codewords on every `w`-subset of coordinates and, when
/// `oa_strength` is given, checks that their nonzero projections (symbols
/// shifted down by one, alphabet `q−1`) form an OA of that strength.
pub fn support_regularity(c: &Code, expected_per_support: usize, oa_strength: Option<usize>) -> VerificationReport {
    let mut r = VerificationReport::new();
    let Some(w) = c.weight() else {
        r.push("constant-weight", "support-regularity", "constant", "mixed", false);
        return r;
    };
    let n = c.n();
    let mut groups: HashMap<u64, Vec<&Word>> = HashMap::new();
    for x in c.words() {
        groups.entry(x.support_mask()).or_default().push(x);
    }
    let supports: Vec<Vec<usize>> = colex_subsets(n, w).collect();
    let counts: Vec<usize> = supports.iter().map(|s| groups.get(&mask_of(s)).map_or(0, Vec::len)).collect();
    let mismatched = counts.iter().filter(|&&k| k != expected_per_support).count();
    let (lo, hi) = (counts.iter().min().copied().unwrap_or(0), counts.iter().max().copied().unwrap_or(0));
    let measured = if mismatched == 0 {
        expected_per_support.to_string()
    } else {
        format!("range={lo}..{hi},mismatched_supports={mismatched}")
    };
    r.push("per-support", "support-regularity", expected_per_support, measured, mismatched == 0);

    if let Some(strength) = oa_strength {
        let q = c.q();
        let failing = supports
            .par_iter()
            .filter(|s| {
                let Some(words) = groups.get(&mask_of(s)) else { return true };
                let rows: Vec<Vec<Symbol>> =
                    words.iter().map(|x| s.iter().map(|&i| x.symbols()[i] - 1).collect()).collect();
                q < 3 || oa_verify(&rows, q - 1, strength).is_err()
            })
            .count();
        r.push(
            "support-oa",
            "support-orthogonal-array",
            format!("OA({strength},{w},{})_on_every_support", q.saturating_sub(1)),
            if failing == 0 { "all_supports".to_string() } else { format!("failing_supports={failing}") },
            failing == 0,
        );
    }
    r
}

/// Code-anticode equality: `|C|·|A| = C(n,w)(q−1)^w` and `d = D+1`.
pub fn diameter_perfect_check(c: &Code, a: &Anticode) -> Result<VerificationReport> {
    let w = c.weight().ok_or_else(|| Error::ShapeMismatch("code is not constant weight".into()))?;
    if c.n() != a.n() || c.q() != a.q() || w != a.weight() {
        return Err(Error::ShapeMismatch(format!(
            "code in J_{}({},{}) vs anticode in J_{}({},{})",
            c.q(),
            c.n(),
            w,
            a.q(),
            a.n(),
            a.weight()
        )));
    }
    let d = c.min_distance()?;
    let diameter = a.diameter();
    if d <= diameter {
        return Err(Error::PreconditionViolated(format!(
            "minimum distance {d} does not exceed anticode diameter {diameter}"
        )));
    }
    let mut r = VerificationReport::new();
    let product = BigUint::from(c.len()) * BigUint::from(a.len());
    r.expect_eq("product", "code-anticode-product", space_size(c.n(), w, c.q()), product);
    r.expect_eq("distance", "diameter-perfect-distance", diameter + 1, d);
    Ok(r)
}

/// Exact covering of `J_q(n,w)` by radius-`e` balls around the codewords,
/// plus minimum distance at least `2e+1`.
///
/// Distance-one moves never leave a support, so two codewords at distance
/// two on different supports have disjoint radius-one balls; the distance
/// check is what rules such pairs out.
pub fn perfect_check(c: &Code, e: usize) -> Result<VerificationReport> {
    let w = c.weight().ok_or_else(|| Error::ShapeMismatch("code is not constant weight".into()))?;
    let (n, q) = (c.n(), c.q());
    let space = space_size(n, w, q);
    if space > BigUint::from(MAX_SCAN_SPACE) {
        return Err(Error::ParamsOutOfRange(format!("space of {space} words is too large to scan")));
    }
    let counts: HashMap<Word, u32> = c
        .words()
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Word, u32>, x| {
            for y in ball(x, e, q, true) {
                *acc.entry(y).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let total: u64 = u64::try_from(&space).expect("bounded above");
    let uncovered = total - counts.len() as u64;
    let repeated = counts.values().filter(|&&v| v > 1).count();
    let mut r = VerificationReport::new();
    r.push(
        "coverage",
        "perfect-coverage",
        "uncovered=0,repeated=0",
        format!("uncovered={uncovered},repeated={repeated}"),
        uncovered == 0 && repeated == 0,
    );
    if c.len() >= 2 {
        let d = c.min_distance()?;
        r.push("min-distance", "perfect-distance", format!(">={}", 2 * e + 1), d, d > 2 * e);
    }
    Ok(r)
}

/// A family a parameter set may belong to, with the anticode a diameter
/// perfect code of these parameters must meet with equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    pub anticode: Option<AnticodeParams>,
}

/// All families whose parameter shape and size formula match.
pub fn classify_family(n: usize, d: usize, w: usize, q: u64, size: u128) -> Result<Vec<Classification>> {
    let label = format!("(n,d,w,q,size)=({n},{d},{w},{q},{size})");
    if q < 3 || w > n || d == 0 || w == 0 {
        return Err(Error::Unclassifiable(label));
    }
    let space = space_size(n, w, q);
    let size_big = BigUint::from(size);
    let pow = |k: usize| BigUint::from(q - 1).pow(k as u32);
    let choose = BigUint::from(binomial(n as u64, w as u64).unwrap_or(u64::MAX));
    let mut out = Vec::new();

    if w == n {
        let anticode = if (2..=n + 1).contains(&d) && &size_big * pow(d - 1) == space {
            Some(AnticodeParams::m(n, n, d - 1, q))
        } else if d % 2 == 1 && &size_big * ball_size(n, n, q, (d - 1) / 2) == space {
            Some(AnticodeParams::ball(n, n, (d - 1) / 2, q))
        } else {
            None
        };
        out.push(Classification { family: Family::FullWeight, anticode });
    }
    if w + 1 == n && d % 2 == 1 && (q - 1).is_power_of_two() {
        let e = (d - 1) / 2;
        if &size_big * ball_size(n, w, q, e) == space {
            out.push(Classification { family: Family::NearFull, anticode: Some(AnticodeParams::ball(n, w, e, q)) });
        }
    }
    if d % 2 == 1 && (d - 1) / 2 < w {
        let t = w - (d - 1) / 2;
        if gs_size(t, w, n, q) == Some(size) {
            out.push(Classification { family: Family::GenSteiner, anticode: Some(AnticodeParams::s(n, w, t, q)) });
        }
    }
    if d == w && size_big == &choose * pow(1) {
        out.push(Classification { family: Family::MdsCw, anticode: Some(AnticodeParams::m(n, w, w - 1, q)) });
    }
    if d == w + 1 && size_big == choose {
        out.push(Classification { family: Family::OnePerSupport, anticode: Some(AnticodeParams::m(n, w, w, q)) });
    }
    if d < w && size_big == &choose * pow(w - d + 1) {
        out.push(Classification { family: Family::MoaCw, anticode: Some(AnticodeParams::m(n, w, d - 1, q)) });
    }
    if out.is_empty() {
        return Err(Error::Unclassifiable(label));
    }
    Ok(out)
}

/// Full certificate of a constructed code: claimed parameters, support
/// structure, family classification and the code-anticode equality.
pub fn certify(fc: &FamilyCode) -> Result<VerificationReport> {
    let c = fc.code();
    let claimed = fc.claimed();
    let mut r = VerificationReport::new();
    r.expect_eq("length", "claimed-parameters", claimed.n, c.n());
    r.expect_eq("alphabet", "claimed-parameters", claimed.q, c.q());
    r.push(
        "weight",
        "claimed-parameters",
        claimed.w,
        c.weight().map_or("mixed".to_string(), |w| w.to_string()),
        c.weight() == Some(claimed.w),
    );
    r.expect_eq("size", "claimed-parameters", claimed.size, c.len() as u128);
    if c.len() >= 2 {
        r.expect_eq("min-distance", "claimed-parameters", claimed.d, c.min_distance()?);
    }

    let (d, w, q) = (claimed.d, claimed.w, claimed.q);
    match fc.family() {
        Family::MdsCw | Family::MoaCw => {
            let per = (q as usize - 1).pow((w + 1 - d) as u32);
            r.extend(support_regularity(c, per, Some(w + 1 - d)));
        }
        Family::OnePerSupport => r.extend(support_regularity(c, 1, None)),
        _ => {}
    }

    let matches = classify_family(claimed.n, d, w, q, claimed.size).unwrap_or_default();
    let labels: Vec<&str> = matches.iter().map(|m| m.family.label()).collect();
    r.push(
        "classification",
        "family-shape",
        fc.family(),
        if labels.is_empty() { "none".to_string() } else { labels.join(",") },
        matches.iter().any(|m| m.family == fc.family()),
    );

    if let Some(params) = fc.anticode() {
        let a = params.build()?;
        r.extend(diameter_perfect_check(c, &a)?);
    }
    Ok(r)
}

/// Weight-`w` words of `J_q(n,w)` within distance `e` of exactly one
/// codeword, computed by brute force over the whole space (test oracle for
/// [`perfect_check`]).
pub fn coverage_by_scan(c: &Code, e: usize) -> Result<(u64, u64)> {
    let w = c.weight().ok_or_else(|| Error::ShapeMismatch("code is not constant weight".into()))?;
    let mut exactly_once = 0;
    let mut other = 0;
    for y in enumerate_space(c.n(), w, c.q()) {
        let hits = c.words().iter().filter(|x| crate::space::distance(x, &y) <= e).count();
        if hits == 1 {
            exactly_once += 1;
        } else {
            other += 1;
        }
    }
    Ok((exactly_once, other))
}
