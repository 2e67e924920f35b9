// SPDX-License-Identifier: Apache-2.0

//! Covering arrays over `{0,1}`.
//!
//! A [`VectorSet`] of `n`-bit rows has strength `k` when every choice of `k`
//! coordinates shows all `2^k` patterns. Index sets are always enumerated as
//! lexicographic combinations and patterns are read with the first index as
//! the most significant bit, so failure witnesses are reproducible.

use itertools::Itertools;
use serde::Serialize;

use crate::can::{can_lookup, CanEntry};
use crate::graph::InteractionGraph;
use crate::{Error, Result, State};

/// Duplicate-free ascending set of `n`-bit rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorSet {
    n: usize,
    rows: Vec<State>,
}

/// A `k`-subset of coordinates together with a pattern no row shows there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Uncovered {
    /// Ascending, 0-based.
    pub indices: Vec<usize>,
    /// Values in the order of `indices`.
    pub pattern: Vec<bool>,
}

#[inline]
fn project(x: State, indices: &[usize]) -> usize {
    indices
        .iter()
        .fold(0usize, |p, &i| (p << 1) | ((x >> i) & 1) as usize)
}

fn row_limit(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VectorSet {
    /// Sorts and deduplicates `rows`; every row must fit in `n` bits.
    pub fn new(n: usize, mut rows: Vec<State>) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeLimit(format!("vectors longer than 64 bits ({n})")));
        }
        if let Some(&r) = rows.iter().find(|&&r| r > row_limit(n)) {
            return Err(Error::StateOutOfRange { state: r, n });
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(VectorSet { n, rows })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, rows: Vec<State>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        VectorSet { n, rows }
    }

    /// All of `{0,1}^n`.
    pub fn full(n: usize) -> Result<Self> {
        if n >= 32 {
            return Err(Error::SizeLimit(format!("full cube on {n} coordinates")));
        }
        Ok(VectorSet { n, rows: (0..1u64 << n).collect() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[State] {
        &self.rows
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, x: State) -> bool {
        self.rows.binary_search(&x).is_ok()
    }

    /// Smallest uncovered pattern for one index set, if any.
    fn uncovered_on(&self, indices: &[usize]) -> Option<usize> {
        let patterns = 1usize << indices.len();
        let mut seen = vec![0u64; patterns.div_ceil(64)];
        let mut hit = 0usize;
        for &r in &self.rows {
            let p = project(r, indices);
            let (w, b) = (p >> 6, p & 63);
            if (seen[w] >> b) & 1 == 0 {
                seen[w] |= 1 << b;
                hit += 1;
                if hit == patterns {
                    return None;
                }
            }
        }
        (0..patterns).find(|&p| (seen[p >> 6] >> (p & 63)) & 1 == 0)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.n {
            return Err(Error::param(format!("strength {k} exceeds vector length {}", self.n)));
        }
        Ok(())
    }

    /// Lexicographically smallest `(I, a)` with `|I| = k` that no row covers.
    pub fn first_uncovered(&self, k: usize) -> Result<Option<Uncovered>> {
        self.check_k(k)?;
        if k == 0 {
            return Ok(self.is_empty().then(|| Uncovered { indices: vec![], pattern: vec![] }));
        }
        for indices in (0..self.n).combinations(k) {
            if let Some(p) = self.uncovered_on(&indices) {
                let pattern = (0..k).map(|j| (p >> (k - 1 - j)) & 1 == 1).collect();
                return Ok(Some(Uncovered { indices, pattern }));
            }
        }
        Ok(None)
    }

    /// True iff every `k` coordinates show all `2^k` patterns. `k = 0` asks
    /// only for a nonempty set.
    pub fn has_strength(&self, k: usize) -> Result<bool> {
        self.check_k(k)?;
        if k == 0 {
            return Ok(!self.is_empty());
        }
        if k >= 64 || (self.rows.len() as u64) < (1u64 << k) {
            return Ok(false);
        }
        Ok((0..self.n)
            .combinations(k)
            .all(|indices| self.uncovered_on(&indices).is_none()))
    }

    /// Largest `k` with [`has_strength`](Self::has_strength); `None` for the
    /// empty set.
    pub fn strength(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let mut k = 0;
        while k < self.n && self.has_strength(k + 1).expect("k within range") {
            k += 1;
        }
        Some(k)
    }

    /// Strength together with the first failure one level up, when there is one.
    pub fn strength_with_witness(&self) -> (Option<usize>, Option<Uncovered>) {
        let s = self.strength();
        let next = s.map_or(0, |s| s + 1);
        let witness = if next <= self.n {
            self.first_uncovered(next).expect("k within range")
        } else {
            None
        };
        (s, witness)
    }

    /// All concatenations `ab` with `a` from `self` in the low coordinates
    /// and `b` from `other` in the high ones.
    pub fn product(&self, other: &VectorSet) -> Result<VectorSet> {
        let n = self.n + other.n;
        if n > 64 {
            return Err(Error::SizeLimit(format!("product of length {n}")));
        }
        let mut rows = Vec::with_capacity(self.len() * other.len());
        for &b in &other.rows {
            for &a in &self.rows {
                rows.push(a | (b << self.n));
            }
        }
        VectorSet::new(n, rows)
    }

    /// Rows extended by one coordinate set to `bit`.
    pub fn append_bit(&self, bit: bool) -> Result<VectorSet> {
        let single = VectorSet::new(1, vec![bit as u64])?;
        self.product(&single)
    }

    pub fn union(&self, other: &VectorSet) -> Result<VectorSet> {
        if self.n != other.n {
            return Err(Error::ArityMismatch { expected: self.n, found: other.n });
        }
        VectorSet::new(self.n, self.rows.iter().chain(&other.rows).copied().collect())
    }

    pub fn is_subset_of(&self, other: &VectorSet) -> bool {
        self.n == other.n && self.rows.iter().all(|&r| other.contains(r))
    }

    pub fn intersects(&self, other: &VectorSet) -> bool {
        self.rows.iter().any(|&r| other.contains(r))
    }

    /// Text form: one row per line, variable 1 leftmost.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.len() * (self.n + 1));
        for &r in &self.rows {
            s.push_str(&row_to_string(r, self.n));
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are skipped; an
    /// input with no rows yields an empty set of length `0`.
    pub fn from_text(text: &str) -> Result<VectorSet> {
        let rows = parse_rows(text)?;
        let n = rows.first().map_or(0, |(_, n)| *n);
        VectorSet::new(n, rows.into_iter().map(|(r, _)| r).collect())
    }
}

pub(crate) fn row_to_string(r: State, n: usize) -> String {
    (0..n).map(|i| if (r >> i) & 1 == 1 { '1' } else { '0' }).collect()
}

pub(crate) fn parse_row(line: &str) -> Result<State> {
    if line.len() > 64 {
        return Err(Error::SizeLimit(format!("row of length {}", line.len())));
    }
    line.chars().enumerate().try_fold(0u64, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | (1 << i)),
        _ => Err(Error::parse(format!("invalid character {c:?} in row {line:?}"))),
    })
}

/// Rows with their lengths; all lengths must agree.
pub(crate) fn parse_rows(text: &str) -> Result<Vec<(State, usize)>> {
    let mut out = Vec::new();
    let mut width = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match width {
            None => width = Some(line.len()),
            Some(w) if w != line.len() => {
                return Err(Error::parse(format!(
                    "ragged rows: line {} has length {}, expected {w}",
                    lineno + 1,
                    line.len()
                )))
            }
            _ => {}
        }
        out.push((parse_row(line)?, line.len()));
    }
    Ok(out)
}

/// Largest possible size of a set with strength exactly `k` on `n`
/// coordinates: `2^n - 2^(n-k-1)`. For `k = n` the only such set is the full
/// cube, so `2^n` is returned.
pub fn max_rows_bound(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n || n >= 64 {
        return Err(Error::param(format!("max_rows_bound needs 1 <= k <= n < 64, got n={n} k={k}")));
    }
    if k == n {
        return Ok(1 << n);
    }
    Ok((1u64 << n) - (1u64 << (n - k - 1)))
}

pub const EXACT_SEARCH_MAX_N: usize = 5;
pub const EXACT_SEARCH_MAX_K: usize = 3;

/// Smallest `m <= max_rows` such that some `m`-row set on `n` coordinates
/// has strength `k`, or `None` if there is none.
///
/// The search fixes the all-zeros row (XOR-ing every row by a constant
/// preserves strength) and picks the remaining rows in ascending order,
/// pruning when some index set still misses more patterns than rows left.
pub fn can_exact_search(n: usize, k: usize, max_rows: usize) -> Result<Option<usize>> {
    if n > EXACT_SEARCH_MAX_N || k > EXACT_SEARCH_MAX_K || k > n || n == 0 {
        return Err(Error::SizeLimit(format!(
            "exact CAN search supports 1 <= n <= {EXACT_SEARCH_MAX_N}, k <= min(n, {EXACT_SEARCH_MAX_K}); got n={n} k={k}"
        )));
    }
    if k == 0 {
        return Ok((max_rows >= 1).then_some(1));
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let full = (1u64 << (1 << k)) - 1;
    let total = 1u64 << n;
    let lower = 1usize << k;
    for m in lower..=max_rows.min(total as usize) {
        let mut search = Search {
            subsets: &subsets,
            full,
            total,
            covered: vec![0u64; subsets.len()],
        };
        search.add(0);
        if search.extend(1, m - 1) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

struct Search<'a> {
    subsets: &'a [Vec<usize>],
    full: u64,
    total: u64,
    covered: Vec<u64>,
}

impl Search<'_> {
    fn add(&mut self, x: State) {
        for (c, s) in self.covered.iter_mut().zip(self.subsets) {
            *c |= 1 << project(x, s);
        }
    }

    fn feasible(&self, left: usize) -> bool {
        self.covered
            .iter()
            .all(|&c| ((self.full & !c).count_ones() as usize) <= left)
    }

    /// Tries to complete using `left` more rows chosen from `next..total`.
    fn extend(&mut self, next: State, left: usize) -> bool {
        if !self.feasible(left) {
            return false;
        }
        if left == 0 {
            return true;
        }
        let mut x = next;
        while x + left as u64 <= self.total {
            let saved = self.covered.clone();
            self.add(x);
            if self.extend(x + 1, left - 1) {
                return true;
            }
            self.covered = saved;
            x += 1;
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Rejected,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
    pub tau: usize,
    pub min_indegree: usize,
    pub can: Option<CanEntry>,
    /// Best lower bound on CAN(n; k) used in the feedback test.
    pub can_lower_bound: u64,
}

/// Screens `g` against necessary conditions for hosting a `k`-independent
/// network. Never concludes admissibility.
///
/// 1. A loopless graph needs minimum in-degree at least `k`.
/// 2. The feedback bound needs `2^τ(G) >= CAN(n; k)`.
/// 3. `CAN(n; k) >= 2^(k-2) CAN(n-k+2; 2)` sharpens the bound in 2 when the
///    strength-2 value is known exactly.
pub fn admissibility_check(g: &InteractionGraph, k: usize) -> Result<AdmissibilityReport> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::param(format!("k must satisfy 1 <= k <= n = {n}, got {k}")));
    }
    let metrics = g.metrics();
    let tau = g.feedback_number()?;
    let mut reasons = Vec::new();

    if !metrics.has_loops && metrics.min_indegree < k {
        reasons.push(format!(
            "loopless graph with minimum in-degree {} < k = {k}",
            metrics.min_indegree
        ));
    }

    let can = can_lookup(n, k);
    let trivial = if k < 64 { 1u64 << k } else { u64::MAX };
    let table_lo = can.map_or(trivial, |e| e.lo.max(trivial));
    let capacity = if tau >= 64 { u64::MAX } else { 1u64 << tau };
    if capacity < table_lo {
        let source = match can {
            Some(e) if e.identity => format!("CAN({n};{k}) = 2^{k}"),
            Some(e) => format!("CAN({n};{k}) >= {}", e.lo),
            None => format!("CAN({n};{k}) >= 2^{k}"),
        };
        reasons.push(format!("feedback bound: 2^tau = {capacity} < {source} (tau = {tau})"));
    }

    let mut lower = table_lo;
    if k >= 2 && k - 2 < 64 {
        if let Some(base) = can_lookup(n - k + 2, 2).filter(CanEntry::is_exact) {
            let recursive = base.lo.saturating_mul(1u64 << (k - 2));
            if capacity < recursive {
                reasons.push(format!(
                    "recursive bound: 2^tau = {capacity} < 2^{} * CAN({};2) = {recursive}",
                    k - 2,
                    n - k + 2
                ));
            }
            lower = lower.max(recursive);
        }
    }

    Ok(AdmissibilityReport {
        verdict: if reasons.is_empty() { Verdict::Inconclusive } else { Verdict::Rejected },
        reasons,
        tau,
        min_indegree: metrics.min_indegree,
        can,
        can_lower_bound: lower,
    })
}
