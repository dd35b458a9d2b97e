//! Brute-force ground truth at desk scale.
//!
//! * [`max_code_search`]: maximum clique in the graph on `J_q(n,w)` joining
//!   words at distance `≥ d`.
//! * [`max_anticode_search`]: the same with distance `≤ D`.
//! * [`perfect_code_search`]: exact cover of `J_q(n,w)` by radius-`e` balls.
//!
//! Coordinate permutations and per-coordinate permutations of the nonzero
//! symbols preserve distance and act transitively on `J_q(n,w)`, so every
//! search fixes the canonical word (ones on the first `w` coordinates) as
//! its first element. Clique search is bitset branch and bound with greedy
//! colouring bounds; the top level can be split across worker threads, and
//! the reported witness always comes from a single-threaded pass so it does
//! not depend on scheduling.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinatorics::space_size;
use crate::error::{Error, Result};
use crate::space::{ball_size, canonical_word, distance, enumerate_space, Anticode, Code, Word};

/// Spaces larger than this are not enumerated.
pub const MAX_SPACE: u64 = 1_000_000;
/// Candidate graphs larger than this are not built (the adjacency matrix is
/// quadratic in the vertex count).
pub const MAX_CANDIDATES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    /// Worker threads for the top level of the search; 1 is sequential.
    pub workers: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 200_000_000, time_limit: None, workers: 1 }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, ..Self::default() }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Exact,
    Inconclusive,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Exact => "exact",
            SearchStatus::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// Best size found (for perfect-code search: the witness size, or 0
    /// when nonexistence was proved).
    pub value: u64,
    pub witness: Option<Code>,
    /// True only when the search tree was exhausted.
    pub proof_of_optimality: bool,
    pub nodes: u64,
    pub note: String,
}

impl SearchResult {
    fn exact(value: u64, witness: Option<Code>, nodes: u64, note: impl Into<String>) -> Self {
        SearchResult {
            status: SearchStatus::Exact,
            value,
            witness,
            proof_of_optimality: true,
            nodes,
            note: note.into(),
        }
    }

    /// `key=value` lines describing the run.
    pub fn manifest_text(&self) -> String {
        format!(
            "status={}\nvalue={}\nproof_of_optimality={}\nnodes={}\nnote={}\n",
            self.status, self.value, self.proof_of_optimality, self.nodes, self.note
        )
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn empty(len: usize) -> Self {
        Bitset(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Self::empty(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &x)| x != 0).map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bitset) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

/// Shared state of one branch-and-bound run.
struct CliqueSearch<'a> {
    adj: &'a [Bitset],
    best_len: AtomicUsize,
    best: Mutex<Vec<usize>>,
    nodes: AtomicU64,
    aborted: AtomicBool,
    max_nodes: u64,
    deadline: Option<Instant>,
    /// Stop as soon as a clique of this size is found.
    target: Option<usize>,
}

impl<'a> CliqueSearch<'a> {
    fn new(adj: &'a [Bitset], budget: &SearchBudget, floor: usize, target: Option<usize>) -> Self {
        CliqueSearch {
            adj,
            best_len: AtomicUsize::new(floor),
            best: Mutex::new(Vec::new()),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            target,
        }
    }

    /// Vertices of `p` in colour-class order with the running colour count.
    fn colour_sort(&self, p: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.clone();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                q.and_not_assign(&self.adj[v]);
                order.push(v);
                colours.push(k);
            }
        }
        (order, colours)
    }

    fn record(&self, cur: &[usize]) {
        let mut best = self.best.lock().expect("poisoned");
        if cur.len() > best.len() {
            *best = cur.to_vec();
            self.best_len.fetch_max(cur.len(), Ordering::SeqCst);
        }
        if self.target.is_some_and(|t| cur.len() >= t) {
            self.aborted.store(true, Ordering::SeqCst);
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return true;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = n > self.max_nodes || (n.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d));
        if over {
            self.aborted.store(true, Ordering::SeqCst);
        }
        over
    }

    fn expand(&self, p: Bitset, cur: &mut Vec<usize>) {
        if self.out_of_budget() {
            return;
        }
        let (order, colours) = self.colour_sort(&p);
        let mut p = p;
        for i in (0..order.len()).rev() {
            if cur.len() + colours[i] <= self.best_len.load(Ordering::Relaxed) || self.aborted.load(Ordering::Relaxed) {
                return;
            }
            let v = order[i];
            cur.push(v);
            let np = p.and(&self.adj[v]);
            if np.is_empty() {
                if cur.len() > self.best_len.load(Ordering::Relaxed) {
                    self.record(cur);
                }
            } else {
                self.expand(np, cur);
            }
            cur.pop();
            p.remove(v);
        }
    }

    /// Splits the root across rayon workers.
    fn expand_parallel(&self, p: Bitset) {
        let (order, colours) = self.colour_sort(&p);
        let mut branches = Vec::with_capacity(order.len());
        let mut rest = p;
        for i in (0..order.len()).rev() {
            let v = order[i];
            branches.push((v, colours[i], rest.and(&self.adj[v])));
            rest.remove(v);
        }
        branches.into_par_iter().for_each(|(v, bound, np)| {
            if bound <= self.best_len.load(Ordering::Relaxed) || self.aborted.load(Ordering::Relaxed) {
                return;
            }
            let mut cur = vec![v];
            if np.is_empty() {
                if 1 > self.best_len.load(Ordering::Relaxed) {
                    self.record(&cur);
                }
            } else {
                self.expand(np, &mut cur);
            }
        });
    }
}

struct CliqueOutcome {
    size: usize,
    clique: Vec<usize>,
    exhausted: bool,
    nodes: u64,
}

/// Maximum clique of the graph `adj` on `0..adj.len()`.
fn max_clique(adj: &[Bitset], budget: &SearchBudget) -> CliqueOutcome {
    let len = adj.len();
    if len == 0 {
        return CliqueOutcome { size: 0, clique: Vec::new(), exhausted: true, nodes: 0 };
    }
    let search = CliqueSearch::new(adj, budget, 0, None);
    let all = Bitset::full(len);
    if budget.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(budget.workers).build();
        match pool {
            Ok(pool) => pool.install(|| search.expand_parallel(all.clone())),
            Err(_) => search.expand(all.clone(), &mut Vec::new()),
        }
    } else {
        search.expand(all.clone(), &mut Vec::new());
    }
    let exhausted = !search.aborted.load(Ordering::SeqCst);
    let size = search.best_len.load(Ordering::SeqCst);
    let mut nodes = search.nodes.load(Ordering::SeqCst);
    let mut clique = search.best.into_inner().expect("poisoned");
    if budget.workers > 1 && exhausted && size > 0 {
        // rediscover the witness sequentially so it does not depend on scheduling
        let replay = CliqueSearch::new(adj, &SearchBudget { max_nodes: u64::MAX, ..*budget }, size - 1, Some(size));
        replay.expand(all, &mut Vec::new());
        nodes += replay.nodes.load(Ordering::SeqCst);
        clique = replay.best.into_inner().expect("poisoned");
    }
    clique.sort_unstable();
    CliqueOutcome { size, clique, exhausted, nodes }
}

fn check_space(n: usize, w: usize, q: u64) -> Result<u64> {
    if w > n || q < 2 || n > 64 {
        return Err(Error::ParamsOutOfRange(format!("need w <= n <= 64 and q >= 2, got n={n} w={w} q={q}")));
    }
    let size = space_size(n, w, q);
    if size > BigUint::from(MAX_SPACE) {
        return Err(Error::ParamsOutOfRange(format!("space of {size} words exceeds the enumeration limit")));
    }
    Ok(u64::try_from(&size).expect("bounded"))
}

/// Largest set containing the canonical word whose pairs satisfy `related`.
fn clique_with_canonical(
    n: usize,
    w: usize,
    q: u64,
    related: impl Fn(usize) -> bool + Sync,
    budget: &SearchBudget,
) -> Result<(SearchResult, Vec<Word>)> {
    let anchor = canonical_word(n, w);
    let candidates: Vec<Word> = enumerate_space(n, w, q).filter(|x| *x != anchor && related(distance(x, &anchor))).collect();
    if candidates.len() > MAX_CANDIDATES {
        return Err(Error::ParamsOutOfRange(format!(
            "{} candidate words exceed the search limit of {MAX_CANDIDATES}",
            candidates.len()
        )));
    }
    let len = candidates.len();
    let adj: Vec<Bitset> = candidates
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let mut b = Bitset::empty(len);
            for (j, y) in candidates.iter().enumerate() {
                if i != j && related(distance(x, y)) {
                    b.insert(j);
                }
            }
            b
        })
        .collect();
    let outcome = max_clique(&adj, budget);
    let mut words: Vec<Word> = outcome.clique.iter().map(|&i| candidates[i].clone()).collect();
    words.push(anchor);
    let status = if outcome.exhausted { SearchStatus::Exact } else { SearchStatus::Inconclusive };
    let result = SearchResult {
        status,
        value: outcome.size as u64 + 1,
        witness: None,
        proof_of_optimality: outcome.exhausted,
        nodes: outcome.nodes,
        note: format!("{len} candidates adjacent to the canonical word"),
    };
    Ok((result, words))
}

/// `A_q(n,d,w)`: the largest `(n,d,w)_q` code.
pub fn max_code_search(n: usize, d: usize, w: usize, q: u64, budget: &SearchBudget) -> Result<SearchResult> {
    let size = check_space(n, w, q)?;
    if d <= 1 || size == 1 {
        let code = Code::with_weight(n, q, w, enumerate_space(n, w, q).collect())?;
        return Ok(SearchResult::exact(size, Some(code), 0, "every pair of distinct words is at distance >= 1"));
    }
    let (mut result, words) = clique_with_canonical(n, w, q, |dist| dist >= d, budget)?;
    let code = Code::with_weight(n, q, w, words)?;
    if code.len() >= 2 && code.min_distance()? < d {
        return Err(Error::InvariantViolation("search witness violates the distance constraint".into()));
    }
    result.witness = Some(code);
    Ok(result)
}

/// The largest anticode of diameter at most `D` in `J_q(n,w)`.
pub fn max_anticode_search(n: usize, diameter: usize, w: usize, q: u64, budget: &SearchBudget) -> Result<SearchResult> {
    check_space(n, w, q)?;
    if diameter == 0 {
        let code = Code::with_weight(n, q, w, vec![canonical_word(n, w)])?;
        return Ok(SearchResult::exact(1, Some(code), 0, "diameter 0 admits a single word"));
    }
    let (mut result, words) = clique_with_canonical(n, w, q, |dist| dist <= diameter, budget)?;
    let anticode = Anticode::new(n, q, words)?;
    if anticode.diameter() > diameter {
        return Err(Error::InvariantViolation("search witness exceeds the diameter".into()));
    }
    result.witness = Some(anticode.as_code().clone());
    Ok(result)
}

/// Exact cover of `J_q(n,w)` by radius-`e` balls whose centres are pairwise
/// at distance at least `2e+1`.
///
/// For `e ≤ 1` balls never leave a support, so each fixed-support component
/// of `(q−1)^w` words must be a union of balls; when the ball size does not
/// divide it the search ends immediately with a nonexistence proof. For
/// larger radii the same test is applied to the whole space.
pub fn perfect_code_search(n: usize, w: usize, q: u64, e: usize, budget: &SearchBudget) -> Result<SearchResult> {
    let size = check_space(n, w, q)?;
    if e == 0 {
        let code = Code::with_weight(n, q, w, enumerate_space(n, w, q).collect())?;
        return Ok(SearchResult::exact(size, Some(code), 0, "radius 0: the whole space"));
    }
    let ball = u64::try_from(&ball_size(n, w, q, e)).expect("bounded by the space");
    let (part, label) = if e <= 1 {
        ((q - 1).pow(w as u32), "fixed-support component")
    } else {
        (size, "space")
    };
    if part % ball != 0 {
        return Ok(SearchResult::exact(
            0,
            None,
            0,
            format!("nonexistence: ball size {ball} does not divide the {label} size {part}"),
        ));
    }

    let mut words: Vec<Word> = enumerate_space(n, w, q).collect();
    words.sort();
    let balls: Vec<Vec<usize>> = words
        .par_iter()
        .map(|x| {
            let mut b: Vec<usize> = crate::space::ball(x, e, q, true).iter().filter_map(|y| words.binary_search(y).ok()).collect();
            b.sort_unstable();
            b
        })
        .collect();
    let mut search = CoverSearch {
        words: &words,
        balls: &balls,
        covered: vec![false; words.len()],
        chosen: Vec::new(),
        min_distance: 2 * e + 1,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
        aborted: false,
    };
    let anchor = words.binary_search(&canonical_word(n, w)).expect("canonical word is in the space");
    search.choose(anchor);
    let found = search.solve();
    let nodes = search.nodes;
    if found {
        let code = Code::with_weight(n, q, w, search.chosen.iter().map(|&i| words[i].clone()).collect())?;
        let value = code.len() as u64;
        return Ok(SearchResult::exact(value, Some(code), nodes, "exact cover found"));
    }
    if search.aborted {
        return Ok(SearchResult {
            status: SearchStatus::Inconclusive,
            value: 0,
            witness: None,
            proof_of_optimality: false,
            nodes,
            note: "budget exhausted before the cover search finished".into(),
        });
    }
    Ok(SearchResult::exact(0, None, nodes, "nonexistence: exhaustive exact-cover search"))
}

struct CoverSearch<'a> {
    words: &'a [Word],
    balls: &'a [Vec<usize>],
    covered: Vec<bool>,
    chosen: Vec<usize>,
    min_distance: usize,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl CoverSearch<'_> {
    fn choose(&mut self, c: usize) {
        for &y in &self.balls[c] {
            self.covered[y] = true;
        }
        self.chosen.push(c);
    }

    fn unchoose(&mut self) {
        let c = self.chosen.pop().expect("nonempty");
        for &y in &self.balls[c] {
            self.covered[y] = false;
        }
    }

    /// `c` can join: its ball is uncovered and it is far from every centre.
    fn fits(&self, c: usize) -> bool {
        self.balls[c].iter().all(|&y| !self.covered[y])
            && self.chosen.iter().all(|&x| distance(&self.words[x], &self.words[c]) >= self.min_distance)
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes || (self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d)) {
            self.aborted = true;
        }
        if self.aborted {
            return false;
        }
        // the uncovered word with the fewest admissible centres
        let mut best: Option<(usize, Vec<usize>)> = None;
        for y in (0..self.words.len()).filter(|&y| !self.covered[y]) {
            // balls are symmetric: the centres covering y are the words in y's ball
            let options: Vec<usize> = self.balls[y].iter().copied().filter(|&c| self.fits(c)).collect();
            if options.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|(_, b)| options.len() < b.len()) {
                let done = options.len() == 1;
                best = Some((y, options));
                if done {
                    break;
                }
            }
        }
        let Some((_, options)) = best else { return true };
        for c in options {
            self.choose(c);
            if self.solve() {
                return true;
            }
            self.unchoose();
            if self.aborted {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain Bron–Kerbosch with pivoting, independent of the bitset search.
    fn bron_kerbosch(words: &[Word], related: &dyn Fn(usize) -> bool) -> usize {
        fn rec(r: usize, mut p: Vec<usize>, mut x: Vec<usize>, adj: &[Vec<bool>], best: &mut usize) {
            if p.is_empty() && x.is_empty() {
                *best = (*best).max(r);
                return;
            }
            if r + p.len() <= *best {
                return;
            }
            let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
            let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
            for v in branch {
                let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
                let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
                rec(r + 1, np, nx, adj, best);
                p.retain(|&u| u != v);
                x.push(v);
            }
        }
        let adj: Vec<Vec<bool>> = words
            .iter()
            .enumerate()
            .map(|(i, a)| words.iter().enumerate().map(|(j, b)| i != j && related(distance(a, b))).collect())
            .collect();
        let mut best = 0;
        rec(0, (0..words.len()).collect(), Vec::new(), &adj, &mut best);
        best
    }

    #[test]
    fn small_code_searches_match_bron_kerbosch() {
        for (n, w, q) in [(4usize, 3usize, 3u64), (4, 2, 3), (5, 2, 3), (4, 2, 4), (5, 3, 2), (6, 3, 2)] {
            let words: Vec<Word> = enumerate_space(n, w, q).collect();
            for d in 2..=(2 * w).min(n) + 1 {
                let r = max_code_search(n, d, w, q, &SearchBudget::default()).unwrap();
                assert_eq!(r.status, SearchStatus::Exact);
                let bk = bron_kerbosch(&words, &|x| x >= d);
                assert_eq!(r.value as usize, bk.max(1), "code n={n} d={d} w={w} q={q}");
                let a = max_anticode_search(n, d - 1, w, q, &SearchBudget::default()).unwrap();
                let bk = bron_kerbosch(&words, &|x| x < d);
                assert_eq!(a.value as usize, bk.max(1), "anticode n={n} D={} w={w} q={q}", d - 1);
            }
        }
    }

    #[test]
    fn known_values() {
        let r = max_code_search(4, 3, 3, 3, &SearchBudget::default()).unwrap();
        assert_eq!((r.value, r.status), (8, SearchStatus::Exact));
        assert_eq!(r.witness.unwrap().min_distance().unwrap(), 3);
        let r = max_anticode_search(4, 2, 3, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 4);
        let r = max_code_search(4, 1, 3, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 32);
        let r = max_anticode_search(5, 0, 3, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn anticode_5_2_3_3_against_families() {
        let r = max_anticode_search(5, 2, 3, 3, &SearchBudget::default()).unwrap();
        let words: Vec<Word> = enumerate_space(5, 3, 3).collect();
        assert_eq!(r.value as usize, bron_kerbosch(&words, &|x| x <= 2));
        assert!(r.value >= 6, "at least |As(5,3,2)| = 6");
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = max_code_search(5, 3, 3, 3, &SearchBudget::default()).unwrap();
        let par = max_code_search(5, 3, 3, 3, &SearchBudget::default().with_workers(4)).unwrap();
        assert_eq!((seq.value, seq.status), (par.value, par.status));
        assert_eq!(seq.witness, par.witness);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let r = max_code_search(6, 4, 5, 3, &SearchBudget::nodes(3)).unwrap();
        assert_eq!(r.status, SearchStatus::Inconclusive);
        assert!(!r.proof_of_optimality);
        assert!(r.value >= 1);
    }

    #[test]
    fn perfect_searches() {
        let r = perfect_code_search(4, 3, 3, 1, &SearchBudget::default()).unwrap();
        assert_eq!((r.value, r.status), (8, SearchStatus::Exact));
        let r = perfect_code_search(5, 4, 3, 1, &SearchBudget::default()).unwrap();
        assert_eq!((r.value, r.status, r.witness.is_none()), (0, SearchStatus::Exact, true));
        let r = perfect_code_search(3, 3, 3, 0, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 8);
    }
}
