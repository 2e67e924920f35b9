// SPDX-License-Identifier: Apache-2.0

//! Synchronous Boolean networks and their fixed points.

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::VectorSet;
use crate::function::BooleanFunction;
use crate::graph::InteractionGraph;
use crate::table::{valid_mask, var_word, word_count};
use crate::{check_arity, Error, Result, State};

/// Number of table words handed to one worker during the fixed-point sweep.
const SWEEP_CHUNK: usize = 1 << 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanNetwork {
    functions: Vec<BooleanFunction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeedbackBoundReport {
    pub fp_count: u64,
    pub tau: usize,
    /// `fp_count <= 2^tau`; false would mean a bug somewhere.
    pub holds: bool,
}

impl BooleanNetwork {
    pub fn new(functions: Vec<BooleanFunction>) -> Result<Self> {
        let n = functions.len();
        check_arity(n)?;
        if let Some(f) = functions.iter().find(|f| f.arity() != n) {
            return Err(Error::ArityMismatch {
                expected: n,
                found: f.arity(),
            });
        }
        Ok(BooleanNetwork { functions })
    }

    /// `f(x) = x`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|i| BooleanFunction::variable(n, i))
                .collect::<Result<_>>()?,
        )
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|_| BooleanFunction::constant(n, value))
                .collect::<Result<_>>()?,
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.functions.len()
    }

    pub fn functions(&self) -> &[BooleanFunction] {
        &self.functions
    }

    pub fn function(&self, i: usize) -> &BooleanFunction {
        &self.functions[i]
    }

    pub fn into_functions(self) -> Vec<BooleanFunction> {
        self.functions
    }

    pub fn step(&self, x: State) -> Result<State> {
        if x >> self.n() != 0 {
            return Err(Error::StateOutOfRange { state: x, n: self.n() });
        }
        Ok(self.step_unchecked(x))
    }

    #[inline]
    pub(crate) fn step_unchecked(&self, x: State) -> State {
        self.functions
            .iter()
            .enumerate()
            .fold(0, |y, (i, f)| y | ((f.table().get(x) as u64) << i))
    }

    /// Fixed-point mask for the 64 states of table word `w`.
    #[inline]
    fn fixed_word(&self, w: usize, valid: u64) -> u64 {
        let mut acc = valid;
        for (i, f) in self.functions.iter().enumerate() {
            acc &= !(f.table().words()[w] ^ var_word(i, w));
            if acc == 0 {
                break;
            }
        }
        acc
    }

    /// All fixed points, ascending.
    ///
    /// Evaluates 64 states per word operation; large sweeps are chunked
    /// across threads and concatenated in order.
    pub fn fixed_points(&self) -> VectorSet {
        let n = self.n();
        let words = word_count(n);
        let valid = valid_mask(n);
        let collect_range = |lo: usize, hi: usize| {
            let mut out = Vec::new();
            for w in lo..hi {
                let mut m = self.fixed_word(w, valid);
                while m != 0 {
                    out.push(((w as u64) << 6) | m.trailing_zeros() as u64);
                    m &= m - 1;
                }
            }
            out
        };
        let rows: Vec<State> = if words <= SWEEP_CHUNK {
            collect_range(0, words)
        } else {
            (0..words.div_ceil(SWEEP_CHUNK))
                .into_par_iter()
                .map(|c| collect_range(c * SWEEP_CHUNK, ((c + 1) * SWEEP_CHUNK).min(words)))
                .flatten_iter()
                .collect()
        };
        VectorSet::from_sorted_unchecked(n, rows)
    }

    /// Arc `(i, j)` iff `f_j` depends on `x_i`.
    pub fn interaction_graph(&self) -> InteractionGraph {
        let n = self.n();
        let mut g = InteractionGraph::new(n).expect("network size is below the graph limit");
        for (j, f) in self.functions.iter().enumerate() {
            for i in 0..n {
                if f.table().depends_on_var(i) {
                    g.add_arc(i, j).expect("indices in range");
                }
            }
        }
        g
    }

    pub fn check_feedback_bound(&self) -> Result<FeedbackBoundReport> {
        let fp_count = self.fixed_points().len() as u64;
        let tau = self.interaction_graph().feedback_number()?;
        Ok(FeedbackBoundReport {
            fp_count,
            tau,
            holds: tau >= 64 || fp_count <= 1u64 << tau,
        })
    }

    /// Independence number: strength of the fixed-point set, 0 when the set
    /// is empty or misses a value at some coordinate.
    pub fn independence_number(&self) -> usize {
        self.fixed_points().strength().unwrap_or(0)
    }
}
