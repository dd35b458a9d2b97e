//! Orthogonal arrays and MDS codes.
//!
//! Reed-Solomon arrays come from evaluating every polynomial of degree `< t`
//! over GF(q) at the field elements `0, 1, 2, ...` (encoding order), with the
//! leading coefficient as an extra column when `n = q+1`. The parity check of
//! an `[n, n−w+1, w]` generalized Reed-Solomon code uses the same column
//! values with all column multipliers equal to one.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{colex_subsets, is_prime_power};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::space::{Code, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    rows: Vec<Vec<Symbol>>,
    n: usize,
    q: u64,
    t: usize,
    lambda: usize,
}

impl OrthogonalArray {
    /// Wraps a matrix after checking it really is an OA of strength `t`.
    pub fn from_rows(rows: Vec<Vec<Symbol>>, q: u64, t: usize) -> Result<OrthogonalArray> {
        let lambda = oa_verify(&rows, q, t)?;
        let n = rows[0].len();
        Ok(OrthogonalArray { rows, n, q, t, lambda })
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn strength(&self) -> usize {
        self.t
    }

    pub fn index(&self) -> usize {
        self.lambda
    }

    /// The rows as a code over the same alphabet (no weight restriction).
    pub fn to_code(&self) -> Result<Code> {
        Code::new(self.n, self.q, self.rows.iter().map(|r| Word::from(r.clone())).collect())
    }
}

/// Checks that every `t`-column projection of `rows` hits each `t`-tuple
/// over `{0..q}` equally often and returns that multiplicity.
///
/// The scan is exhaustive: column sets in colex order, tuples in
/// lexicographic order; the first imbalance is reported.
pub fn oa_verify(rows: &[Vec<Symbol>], q: u64, t: usize) -> Result<usize> {
    let first = rows.first().ok_or(Error::EmptySet)?;
    let n = first.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch(n, bad.len()));
    }
    if t > n {
        return Err(Error::ParamsOutOfRange(format!("strength {t} exceeds {n} columns")));
    }
    if let Some(r) = rows.iter().find(|r| r.iter().any(|&s| s as u64 >= q)) {
        return Err(Error::InvariantViolation(format!("row {r:?} has a symbol >= {q}")));
    }
    let tuples = (q as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    let expected = (rows.len() as u128 / tuples) as usize;

    for cols in colex_subsets(n, t) {
        let mut counts: HashMap<Vec<Symbol>, usize> = HashMap::new();
        for r in rows {
            *counts.entry(cols.iter().map(|&c| r[c]).collect()).or_insert(0) += 1;
        }
        let imbalance = if (counts.len() as u128) < tuples {
            // some tuple is missing altogether; find the smallest one
            Some((first_missing(&counts, q, t), 0))
        } else {
            let mut bad: Vec<_> = counts.iter().filter(|(_, &c)| c != expected).collect();
            bad.sort();
            bad.first().map(|(k, &c)| ((*k).clone(), c))
        };
        if let Some((tuple, count)) = imbalance {
            if count != expected || expected == 0 {
                return Err(Error::NotOA { strength: t, columns: cols, tuple, count, expected: expected.max(1) });
            }
        }
    }
    Ok(expected)
}

fn first_missing(counts: &HashMap<Vec<Symbol>, usize>, q: u64, t: usize) -> Vec<Symbol> {
    let mut tuple = vec![0 as Symbol; t];
    loop {
        if !counts.contains_key(&tuple) {
            return tuple;
        }
        let mut i = t;
        loop {
            assert!(i > 0, "a tuple is missing");
            i -= 1;
            if (tuple[i] as u64) + 1 < q {
                tuple[i] += 1;
                for x in tuple.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Reed-Solomon OA(t, n, q) of index one.
///
/// Rows are listed by polynomial coefficient vector (constant term
/// slowest), then stably sorted on the last column, so that the last column
/// reads `0…0 1…1 …` in blocks of `q^(t−1)`.
pub fn rs_oa(t: usize, n: usize, q: u64) -> Result<OrthogonalArray> {
    if t == 0 || t > n {
        return Err(Error::ParamsOutOfRange(format!("need 1 <= t <= n, got t={t} n={n}")));
    }
    if t == 1 {
        if !(2..=crate::space::MAX_ALPHABET).contains(&q) {
            return Err(Error::ParamsOutOfRange(format!("alphabet size {q}")));
        }
        let rows = (0..q).map(|c| vec![c as Symbol; n]).collect();
        return Ok(OrthogonalArray { rows, n, q, t, lambda: 1 });
    }
    let field = Field::new(q)?;
    if n as u64 > q + 1 {
        return Err(Error::ParamsInfeasible(format!("OA({t},{n},{q}) needs n <= q+1")));
    }
    let total = (q as usize)
        .checked_pow(t as u32)
        .filter(|&r| r <= 1 << 24)
        .ok_or_else(|| Error::ParamsOutOfRange(format!("q^t = {q}^{t} rows is too many")))?;

    let points: Vec<FieldElement> = field.elements().take(n.min(q as usize)).collect();
    let extended = n as u64 == q + 1;
    let mut rows: Vec<Vec<Symbol>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            // digits of idx, most significant = constant term
            let mut coeffs = vec![FieldElement::ZERO; t];
            let mut r = idx;
            for c in coeffs.iter_mut().rev() {
                *c = FieldElement::ZERO;
                *c = field.element((r % q as usize) as u32).expect("digit < q");
                r /= q as usize;
            }
            let mut row: Vec<Symbol> = points
                .iter()
                .map(|&x| {
                    coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c)).value()
                        as Symbol
                })
                .collect();
            if extended {
                row.push(coeffs[t - 1].value() as Symbol);
            }
            row
        })
        .collect();
    rows.sort_by_key(|r| r[n - 1]);
    Ok(OrthogonalArray { rows, n, q, t, lambda: 1 })
}

/// Parity check of an MDS code with minimum distance `w`.
#[derive(Debug, Clone)]
pub struct ParityCheck {
    matrix: Vec<Vec<FieldElement>>,
    field: Field,
    n: usize,
    w: usize,
}

impl ParityCheck {
    /// `(w−1) × n` entries.
    pub fn matrix(&self) -> &[Vec<FieldElement>] {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Rank of the submatrix on `cols`.
    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        let sub: Vec<Vec<FieldElement>> =
            self.matrix.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        row_reduce(&self.field, sub).1.len()
    }

    /// Builds a parity check from arbitrary entries (used to exercise the
    /// kernel checks with damaged matrices).
    pub fn from_matrix(field: Field, matrix: Vec<Vec<FieldElement>>) -> Result<ParityCheck> {
        let rows = matrix.len();
        let n = matrix.first().map_or(0, Vec::len);
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged parity-check matrix".into()));
        }
        Ok(ParityCheck { matrix, field, n, w: rows + 1 })
    }
}

impl fmt::Display for ParityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn mds_parity_check(n: usize, w: usize, q: u64) -> Result<ParityCheck> {
    if w < 2 || w > n {
        return Err(Error::ParamsOutOfRange(format!("need 2 <= w <= n, got w={w} n={n}")));
    }
    let field = Field::new(q)?;
    if n as u64 > q + 1 {
        return Err(Error::ParamsInfeasible(format!("an MDS code of length {n} over GF({q}) needs n <= q+1")));
    }
    let finite = n.min(q as usize);
    let mut matrix = vec![vec![FieldElement::ZERO; n]; w - 1];
    for (j, alpha) in field.elements().take(finite).enumerate() {
        for (r, row) in matrix.iter_mut().enumerate() {
            row[j] = field.pow(alpha, r as u64);
        }
    }
    if n > finite {
        matrix[w - 2][n - 1] = field.one();
    }
    Ok(ParityCheck { matrix, field, n, w })
}

/// Reduced row echelon form; returns the matrix and its pivot columns.
fn row_reduce(field: &Field, mut m: Vec<Vec<FieldElement>>) -> (Vec<Vec<FieldElement>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Basis of the right kernel of `m`.
pub fn kernel(field: &Field, m: Vec<Vec<FieldElement>>, cols: usize) -> Vec<Vec<FieldElement>> {
    let (reduced, pivots) = row_reduce(field, m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![FieldElement::ZERO; cols];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(reduced[row][f]);
            }
            v
        })
        .collect()
}

/// The weight-`w` codewords of the MDS code with parity check `h`.
///
/// Each `w`-subset of columns carries a one-dimensional kernel; its `q−1`
/// nonzero multiples are the codewords on that support.
pub fn mds_min_weight_codewords(h: &ParityCheck) -> Result<Code> {
    let field = &h.field;
    let (n, w) = (h.n, h.w);
    let supports: Vec<Vec<usize>> = colex_subsets(n, w).collect();
    let per_support: Vec<Vec<Word>> = supports
        .par_iter()
        .map(|cols| {
            let sub: Vec<Vec<FieldElement>> =
                h.matrix.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
            let basis = kernel(field, sub, w);
            if basis.len() != 1 || basis[0].iter().any(|x| x.is_zero()) {
                return Err(Error::KernelDimension { columns: cols.clone(), dimension: basis.len() });
            }
            Ok(field
                .elements()
                .skip(1)
                .map(|scalar| {
                    let mut symbols = vec![0 as Symbol; n];
                    for (&c, &x) in cols.iter().zip(&basis[0]) {
                        symbols[c] = field.mul(scalar, x).value() as Symbol;
                    }
                    Word::from(symbols)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Code::with_weight(n, field.order() as u64, w, per_support.into_iter().flatten().collect())
}

/// Three-valued existence verdict for OA(t, n, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OaFeasibility {
    /// Existence is guaranteed; the string names the construction.
    Feasible(String),
    /// A necessary condition fails.
    Infeasible { claim: &'static str, inequality: String },
    Unknown,
}

impl OaFeasibility {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, OaFeasibility::Infeasible { .. })
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, OaFeasibility::Feasible(_))
    }
}

impl fmt::Display for OaFeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OaFeasibility::Feasible(why) => write!(f, "feasible ({why})"),
            OaFeasibility::Infeasible { claim, inequality } => write!(f, "infeasible [{claim}] {inequality}"),
            OaFeasibility::Unknown => f.write_str("unknown"),
        }
    }
}

/// Necessary conditions on OA(t,n,q) and the Reed-Solomon existence range.
pub fn oa_feasible(t: usize, n: usize, q: u64) -> OaFeasibility {
    let (t64, n64) = (t as u64, n as u64);
    if t == 0 || n < t || q < 2 {
        return OaFeasibility::Infeasible {
            claim: "oa-shape",
            inequality: format!("need 1 <= t <= n and q >= 2 (t={t}, n={n}, q={q})"),
        };
    }
    if t + 1 >= n {
        let why = if t == n { "all q^n words" } else { "sum-zero parity array" };
        return OaFeasibility::Feasible(why.into());
    }
    if t == 1 {
        return OaFeasibility::Feasible("repetition array".into());
    }
    if t == 2 && n64 > q + 1 {
        return OaFeasibility::Infeasible {
            claim: "oa-strength2-length",
            inequality: format!("n={n} <= q+1={}", q + 1),
        };
    }
    if t >= 3 && q >= t64 {
        let (claim, bound) = if q.is_multiple_of(2) {
            ("oa-even-alphabet-length", q + t64 - 1)
        } else {
            ("oa-odd-alphabet-length", q + t64 - 2)
        };
        if n64 > bound {
            let rhs = if q.is_multiple_of(2) { "q+t-1" } else { "q+t-2" };
            return OaFeasibility::Infeasible { claim, inequality: format!("n={n} <= {rhs}={bound}") };
        }
    }
    if q <= t64 && n64 > t64 + 1 {
        return OaFeasibility::Infeasible {
            claim: "oa-small-alphabet-length",
            inequality: format!("n={n} <= t+1={}", t + 1),
        };
    }
    if is_prime_power(q) {
        if t64 < q && n64 <= q + 1 {
            return OaFeasibility::Feasible("Reed-Solomon".into());
        }
        if q.is_multiple_of(2) && (t == 3 || t64 + 1 == q) && n64 <= q + 2 {
            return OaFeasibility::Feasible("even-q hyperoval extension".into());
        }
    }
    OaFeasibility::Unknown
}
