//! Necessary conditions for diameter-perfect codes, and the `q0` table.
//!
//! Every verdict names the claim it evaluates and shows the inequality with
//! the numbers substituted. Facts that can only be cited (large searches
//! published elsewhere) live in a separate curated table and never
//! influence the derived verdicts.

use std::fmt;

use num_bigint::BigUint;

use crate::combinatorics::binomial_big;
use crate::designs::{gs_size, steiner_divisibility, Divisibility};
use crate::families::Family;
use crate::ortharray::{oa_feasible, OaFeasibility};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// Short claim identifier, e.g. `moa-length`.
    pub claim: &'static str,
    /// The family the claim constrains, if it is family-specific.
    pub family: Option<Family>,
    pub satisfied: bool,
    pub inequality: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.family.map_or("-".to_string(), |f| f.to_string());
        let state = if self.satisfied { "satisfied" } else { "violated" };
        write!(f, "VERDICT {} {} {} {}", self.claim, family, state, self.inequality.replace(' ', ""))
    }
}

/// A result cited from the literature rather than derived here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownFact {
    pub citation: &'static str,
    pub statement: &'static str,
    /// `Some(false)` for proved nonexistence, `Some(true)` for a known code.
    pub exists: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub d: usize,
    pub w: usize,
    pub q: u64,
    pub verdicts: Vec<Verdict>,
    /// Families whose parameter shape fits `(n,d,w,q)`.
    pub applicable: Vec<Family>,
    pub notes: Vec<String>,
    pub facts: Vec<KnownFact>,
}

impl BoundsReport {
    fn new(n: usize, d: usize, w: usize, q: u64) -> Self {
        BoundsReport { n, d, w, q, verdicts: Vec::new(), applicable: Vec::new(), notes: Vec::new(), facts: Vec::new() }
    }

    fn add(&mut self, claim: &'static str, family: Option<Family>, satisfied: bool, inequality: String) {
        self.verdicts.push(Verdict { claim, family, satisfied, inequality });
    }

    pub fn violations(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.satisfied)
    }

    pub fn violations_for(&self, family: Family) -> Vec<&Verdict> {
        self.violations().filter(|v| v.family.is_none_or(|f| f == family)).collect()
    }

    /// Applicable families with no violated claim.
    pub fn feasible_families(&self) -> Vec<Family> {
        self.applicable.iter().copied().filter(|&f| self.violations_for(f).is_empty()).collect()
    }

    /// Machine-readable `key=value` block.
    pub fn key_values(&self) -> String {
        let mut out = format!("n={}\nd={}\nw={}\nq={}\n", self.n, self.d, self.w, self.q);
        for v in &self.verdicts {
            let family = v.family.map_or("any".to_string(), |f| f.to_string());
            let state = if v.satisfied { "satisfied" } else { "violated" };
            out.push_str(&format!("verdict.{}.{}={} {}\n", v.claim, family, state, v.inequality));
        }
        let labels: Vec<String> = self.applicable.iter().map(|f| f.to_string()).collect();
        out.push_str(&format!("applicable={}\n", labels.join(",")));
        let feasible: Vec<String> = self.feasible_families().iter().map(|f| f.to_string()).collect();
        out.push_str(&format!("feasible={}\n", feasible.join(",")));
        for f in &self.facts {
            out.push_str(&format!("fact.{}={}\n", f.citation, f.statement));
        }
        out
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BOUNDS n={} d={} w={} q={}", self.n, self.d, self.w, self.q)?;
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        let labels: Vec<String> = self.feasible_families().iter().map(|x| x.to_string()).collect();
        writeln!(f, "FEASIBLE {}", if labels.is_empty() { "-".to_string() } else { labels.join(",") })?;
        for note in &self.notes {
            writeln!(f, "NOTE {note}")?;
        }
        for fact in &self.facts {
            writeln!(f, "FACT [{}] {}", fact.citation, fact.statement)?;
        }
        Ok(())
    }
}

/// Bounds on `(n,d,w)_q` codes whose supports carry an OA of strength
/// `w−d+1` over the `q−1` nonzero symbols (`d < w`), with `δ = w−d`.
pub fn moa_bounds(n: usize, d: usize, w: usize, q: u64) -> BoundsReport {
    let mut r = BoundsReport::new(n, d, w, q);
    if d == 0 || d >= w {
        r.notes.push("no OA-type bounds: they need 1 <= d < w".into());
        return r;
    }
    let fam = Some(Family::MoaCw);
    let delta = w - d;
    let (w64, delta64, d64) = (w as u64, delta as u64, d as u64);
    if delta == 1 {
        r.add("moa-delta1", fam, w64 <= q, format!("w={w} <= q={q}"));
    }
    if (2..w).contains(&delta) {
        if q.is_multiple_of(2) {
            r.add("moa-even-alphabet", fam, w64 <= q + delta64, format!("w={w} <= q+delta={}", q + delta64));
        } else {
            r.add("moa-odd-alphabet", fam, w64 < q + delta64, format!("w={w} <= q+delta-1={}", q + delta64 - 1));
        }
    }
    if q <= delta64 + 2 {
        r.add("moa-small-alphabet", fam, w <= delta + 2, format!("w={w} <= delta+2={}", delta + 2));
    }
    if d + 2 <= w {
        if q.is_multiple_of(2) {
            r.add("moa-distance-even", fam, d64 <= q, format!("d={d} <= q={q}"));
        } else {
            r.add("moa-distance-odd", fam, d64 < q, format!("d+1={} <= q={q}", d + 1));
        }
    }
    // the counting argument compares codewords on d−2 >= 1 common coordinates;
    // at d = 2 the even-parity words on every support beat it, e.g. (5,2,3)_3
    if d >= 3 {
        let rhs = q as i128 + w as i128 - 2;
        r.add("moa-length", fam, n as i128 <= rhs, format!("n={n} <= q+w-2={rhs}"));
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q0Bounds {
    pub w: usize,
    pub n: usize,
    pub lower: u64,
    pub upper: BigUint,
    pub exact: Option<u64>,
}

impl fmt::Display for Q0Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exact = self.exact.map_or("unknown".to_string(), |e| e.to_string());
        write!(f, "q0({},{}) lower={} upper={} exact={}", self.w, self.n, self.lower, self.upper, exact)
    }
}

/// Bounds on `q0(w,n)`, the smallest alphabet admitting an `(n,w+1,w)_q`
/// code with one codeword per support. `None` unless `1 ≤ w ≤ n−1`.
pub fn q0_bounds(w: usize, n: usize) -> Option<Q0Bounds> {
    if w < 1 || w >= n {
        return None;
    }
    let upper = binomial_big(n as u64 - 1, w as u64 - 1) + 1u32;
    let (n64, w64) = (n as u64, w as u64);
    let lower = if w == 1 {
        // any two weight-1 words on different coordinates are at distance 2
        2
    } else if n == w + 1 {
        w64 + 1
    } else {
        (n64 - w64 + 2).max(w64 + 1)
    };
    let exact = if w == 1 {
        Some(2)
    } else if n == w + 1 {
        Some(w64 + 1)
    } else if w == 2 {
        Some(n64)
    } else if w == 3 {
        Some(if n % 2 == 1 { n64 - 1 } else { n64 })
    } else {
        None
    };
    Some(Q0Bounds { w, n, lower, upper, exact })
}

/// Citations for parameters settled outside this crate.
pub fn known_facts(n: usize, d: usize, w: usize, q: u64) -> Vec<KnownFact> {
    let mut out = Vec::new();
    if q != 3 || w + 1 != n {
        return out;
    }
    let pow2 = n.is_power_of_two() && n >= 4;
    let m = n.trailing_zeros();
    match d {
        3 if pow2 => out.push(KnownFact {
            citation: "Sva99,LiTo99",
            statement: "ternary 1-perfect codes in J_3(2^m,2^m-1) exist",
            exists: Some(true),
        }),
        3 => out.push(KnownFact {
            citation: "LiTo99",
            statement: "no ternary 1-perfect constant-weight code outside J_3(2^m,2^m-1)",
            exists: None,
        }),
        4 if n == 6 => out.push(KnownFact {
            citation: "Kro08,OsSv02",
            statement: "the unique ternary 3-diameter perfect parameters with w=n-1: length 6, 12 codewords",
            exists: Some(true),
        }),
        4 => out.push(KnownFact {
            citation: "Kro08",
            statement: "ternary 3-diameter perfect codes with w=n-1 exist only for n=6",
            exists: Some(false),
        }),
        5 if n == 16 => out.push(KnownFact {
            citation: "KOP16",
            statement: "no ternary 4-diameter perfect code of length 16 with w=n-1",
            exists: Some(false),
        }),
        5 if n == 64 => out.push(KnownFact {
            citation: "BDMW,KOP16",
            statement: "a ternary 4-diameter perfect code of length 64 with w=n-1 is known",
            exists: Some(true),
        }),
        5 if pow2 && m % 2 == 1 => out.push(KnownFact {
            citation: "Kro08",
            statement: "ternary 4-diameter perfect codes exist for n=2^m, m odd, w=n-1",
            exists: Some(true),
        }),
        _ => {}
    }
    out
}

/// All bounds that apply to `(n,d,w)_q`, grouped by family.
pub fn feasibility_report(n: usize, d: usize, w: usize, q: u64) -> BoundsReport {
    let mut r = BoundsReport::new(n, d, w, q);
    r.facts = known_facts(n, d, w, q);
    if d == 0 || w == 0 || w > n || q < 2 {
        r.add("parameter-shape", None, false, format!("need d >= 1, 1 <= w <= n, q >= 2 (d={d}, w={w}, n={n}, q={q})"));
        return r;
    }
    if d > 2 * w {
        r.add("distance-range", None, false, format!("d={d} <= 2w={}", 2 * w));
    }

    if q == 2 {
        r.notes.push("binary: diameter perfect codes are Steiner systems; only divisibility applies".into());
        let half = d.div_ceil(2);
        if half <= w {
            let t = w + 1 - half;
            let ok = steiner_divisibility(t, w, n) == Divisibility::Pass;
            let detail = match steiner_divisibility(t, w, n) {
                Divisibility::Pass => format!("C(n-i,t-i)/C(w-i,t-i) integral for all i<{t} (t={t},w={w},n={n})"),
                Divisibility::Fail { index } => format!("C({},{})/C({},{}) is not an integer", n - index, t - index, w - index, t - index),
            };
            r.add("steiner-divisibility", None, ok, detail);
        }
        return r;
    }

    if w == n {
        r.applicable.push(Family::FullWeight);
    }
    if w + 1 == n && d % 2 == 1 && (q - 1).is_power_of_two() {
        r.applicable.push(Family::NearFull);
    }
    if d % 2 == 1 && (d - 1) / 2 < w {
        r.applicable.push(Family::GenSteiner);
        let t = w - (d - 1) / 2;
        let bad = (0..t).find(|&i| gs_size(t - i, w - i, n - i, q).is_none());
        let detail = match bad {
            None => format!("C(n-i,t-i)(q-1)^(t-i)/C(w-i,t-i) integral for all i<{t} (t={t})"),
            Some(i) => format!("C({},{})*{}^{}/C({},{}) is not an integer", n - i, t - i, q - 1, t - i, w - i, t - i),
        };
        r.add("gs-integrality", Some(Family::GenSteiner), bad.is_none(), detail);
    }
    if d == w {
        r.applicable.push(Family::MdsCw);
        r.notes.push("mds-cw: sufficient alphabet QMDS(n,w) exists but has no closed form".into());
    }
    if d == w + 1 {
        r.applicable.push(Family::OnePerSupport);
        if let Some(b) = q0_bounds(w, n) {
            r.add("q0-lower", Some(Family::OnePerSupport), q >= b.lower, format!("q={q} >= q0_lower={}", b.lower));
            if let Some(e) = b.exact {
                r.add("q0-exact", Some(Family::OnePerSupport), q >= e, format!("q={q} >= q0={e}"));
            }
        }
    }
    if d < w {
        r.applicable.push(Family::MoaCw);
        r.verdicts.extend(moa_bounds(n, d, w, q).verdicts);
        let strength = w - d + 1;
        let verdict = oa_feasible(strength, w, q - 1);
        let detail = format!("OA({strength},{w},{}) per support: {verdict}", q - 1);
        r.add("support-oa-feasible", Some(Family::MoaCw), !verdict.is_infeasible(), detail);
    }
    if r.applicable.is_empty() {
        r.notes.push("no family shape matches these parameters".into());
    }
    r
}

/// `true` when the OA behind `(·,d,w)_q` supports is excluded.
pub fn support_oa_infeasible(d: usize, w: usize, q: u64) -> bool {
    d < w && matches!(oa_feasible(w - d + 1, w, q - 1), OaFeasibility::Infeasible { .. })
}
