// SPDX-License-Identifier: Apache-2.0

//! Steiner systems `S(t, k, n)`: weight-`k` blocks on `n` points such that
//! every `t`-subset of points lies in exactly one block.

use itertools::Itertools;
use serde::Serialize;

use crate::cover::{parse_row, row_to_string, VectorSet};
use crate::{Error, Result, State};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// Blocks as point masks, ascending. Duplicates are kept so that
    /// verification can report them.
    blocks: Vec<State>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A block whose weight differs from `k`.
    BlockWeight { block: usize, weight: usize },
    /// The first `t`-subset not covered exactly once.
    Cover { subset: Vec<usize>, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaCheck {
    pub strength: Option<usize>,
    pub expected: usize,
    pub holds: bool,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

impl SteinerSystem {
    pub fn new(n: usize, k: usize, t: usize, mut blocks: Vec<State>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::param(format!("point count {n} outside 1..=64")));
        }
        if t > k || k > n {
            return Err(Error::param(format!("need t <= k <= n, got n={n} k={k} t={t}")));
        }
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if let Some(&b) = blocks.iter().find(|&&b| b > limit) {
            return Err(Error::StateOutOfRange { state: b, n });
        }
        blocks.sort_unstable();
        Ok(SteinerSystem { n, k, t, blocks })
    }

    /// Builds from 0-based point lists.
    pub fn from_point_sets(n: usize, k: usize, t: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let blocks = sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &p| m | (1 << p)))
            .collect();
        Self::new(n, k, t, blocks)
    }

    pub fn blocks(&self) -> &[State] {
        &self.blocks
    }

    /// 0-based points of each block, ascending.
    pub fn point_sets(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&b| (0..self.n).filter(|&p| (b >> p) & 1 == 1).collect())
            .collect()
    }

    pub fn expected_block_count(&self) -> u64 {
        binomial(self.n, self.t) / binomial(self.k, self.t)
    }

    pub fn first_violation(&self) -> Option<Violation> {
        if let Some((i, b)) = self
            .blocks
            .iter()
            .enumerate()
            .find(|(_, b)| b.count_ones() as usize != self.k)
        {
            return Some(Violation::BlockWeight {
                block: i,
                weight: b.count_ones() as usize,
            });
        }
        for subset in (0..self.n).combinations(self.t) {
            let mask = subset.iter().fold(0u64, |m, &p| m | (1 << p));
            let count = self.blocks.iter().filter(|&&b| b & mask == mask).count();
            if count != 1 {
                return Some(Violation::Cover { subset, count });
            }
        }
        None
    }

    pub fn verify(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn to_vector_set(&self) -> VectorSet {
        VectorSet::new(self.n, self.blocks.clone()).expect("blocks fit in n bits")
    }

    /// Checks that a valid `(n, t+1, t)` system with `2t < n` has strength
    /// exactly `t`.
    pub fn ca_check(&self) -> Result<CaCheck> {
        if self.k != self.t + 1 || 2 * self.t >= self.n {
            return Err(Error::param(format!(
                "needs parameters (n, t+1, t) with 2t < n, got ({}, {}, {})",
                self.n, self.k, self.t
            )));
        }
        if let Some(v) = self.first_violation() {
            return Err(Error::Verification(format!("not a Steiner system: {v:?}")));
        }
        let strength = self.to_vector_set().strength();
        Ok(CaCheck {
            strength,
            expected: self.t,
            holds: strength == Some(self.t),
        })
    }

    /// Header `n k t`, then one row per block, point 1 leftmost.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.n, self.k, self.t);
        for &b in &self.blocks {
            s.push_str(&row_to_string(b, self.n));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::parse("empty Steiner file"))?;
        let params: Vec<usize> = header
            .split_whitespace()
            .map(|v| v.parse().map_err(|_| Error::parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [n, k, t] = params[..] else {
            return Err(Error::parse(format!("header must be 'n k t', got {header:?}")));
        };
        let mut blocks = Vec::new();
        for line in lines {
            if line.len() != n {
                return Err(Error::parse(format!("row {line:?} does not have length {n}")));
            }
            blocks.push(parse_row(line)?);
        }
        Self::new(n, k, t, blocks)
    }
}

fn from_rows(n: usize, k: usize, t: usize, rows: &[&str]) -> SteinerSystem {
    let blocks = rows.iter().map(|r| parse_row(r).expect("literal row")).collect();
    SteinerSystem::new(n, k, t, blocks).expect("literal system")
}

/// The Fano plane, parameters `(7, 3, 2)`.
pub fn fano() -> SteinerSystem {
    from_rows(
        7,
        3,
        2,
        &["1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001"],
    )
}

/// A Steiner quadruple system on 8 points, parameters `(8, 4, 3)`.
pub fn sqs8() -> SteinerSystem {
    from_rows(
        8,
        4,
        3,
        &[
            "11010001", "01101001", "00110101", "00011011", "10001101", "01000111", "10100011",
            "00101110", "10010110", "11001010", "11100100", "01110010", "10111000", "01011100",
        ],
    )
}

/// A Steiner triple system on `n` points: Bose's construction for
/// `n ≡ 3 (mod 6)`, Skolem's for `n ≡ 1 (mod 6)`.
pub fn sts(n: usize) -> Result<SteinerSystem> {
    if n < 7 || !(n % 6 == 1 || n % 6 == 3) {
        return Err(Error::param(format!(
            "Steiner triple systems here need n >= 7 with n ≡ 1 or 3 (mod 6), got {n}"
        )));
    }
    if n > 64 {
        return Err(Error::SizeLimit(format!("{n} points")));
    }
    let triples = if n % 6 == 3 { bose(n) } else { skolem(n) };
    SteinerSystem::from_point_sets(n, 3, 2, &triples)
}

/// Points `(x, i)` with `x ∈ Z_q`, `i ∈ Z_3` are numbered `x + q i`.
fn bose(n: usize) -> Vec<Vec<usize>> {
    let q = n / 3; // odd
    let half = q.div_ceil(2); // inverse of 2 mod q
    let op = |x: usize, y: usize| (x + y) * half % q;
    let pt = |x: usize, i: usize| x + q * (i % 3);
    let mut out = Vec::new();
    for x in 0..q {
        out.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for (x, y) in (0..q).tuple_combinations() {
            out.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
        }
    }
    out
}

/// Points `(x, i)` with `x ∈ Z_{2m}` numbered `x + 2m i`, plus `∞ = n - 1`.
fn skolem(n: usize) -> Vec<Vec<usize>> {
    let q = (n - 1) / 3; // 2m
    let m = q / 2;
    // half-idempotent commutative quasigroup of order 2m: relabel Z_2m
    // so that 2x -> x and 2x + 1 -> m + x
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s % 2 == 0 {
            s / 2
        } else {
            m + s / 2
        }
    };
    let pt = |x: usize, i: usize| x + q * (i % 3);
    let inf = n - 1;
    let mut out = Vec::new();
    for x in 0..m {
        out.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            out.push(vec![inf, pt(x + m, i), pt(x, i + 1)]);
        }
        for (x, y) in (0..q).tuple_combinations() {
            out.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
        }
    }
    out
}
