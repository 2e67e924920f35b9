// SPDX-License-Identifier: Apache-2.0

//! Boolean networks and the covering-array structure of their fixed points.
//!
//! A network `f: {0,1}^n -> {0,1}^n` is *k-independent* when its fixed points
//! form a covering array of strength `k`; its independence number `i(f)` is
//! the largest such `k`. This crate provides the pieces needed to build such
//! networks, compute `i(f)` by exhaustive enumeration, and screen interaction
//! graphs against the known necessary conditions.
//!
//! States are encoded as integers: variable `i` (0-based) lives in bit `i`.
//! All text formats use 1-based variable names; the library API is 0-based.

pub mod can;
pub mod constructions;
pub mod cover;
pub mod designs;
pub mod error;
pub mod function;
pub mod graph;
pub mod json;
pub mod network;
pub mod table;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use cover::{AdmissibilityReport, Uncovered, Verdict, VectorSet};
pub use designs::SteinerSystem;
pub use error::{Error, Result};
pub use function::{BooleanFunction, Canalization, Descriptor, Literal, Monotonicity, UnateProfile};
pub use graph::{FeedbackSet, GraphMetrics, InteractionGraph};
pub use network::{BooleanNetwork, FeedbackBoundReport};
pub use table::TruthTable;

/// A network state; bit `i` holds variable `i`.
pub type State = u64;

/// Default upper bound on the number of variables of a function or network.
pub const DEFAULT_CAP: usize = 26;

/// Hard ceiling for [`set_arity_cap`]; a 2^32-bit table is already 512 MiB.
pub const MAX_CAP: usize = 32;

static ARITY_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_CAP);

/// Current arity cap shared by every constructor in the crate.
pub fn arity_cap() -> usize {
    ARITY_CAP.load(Ordering::Relaxed)
}

/// Sets the arity cap, clamped to `1..=MAX_CAP`. Returns the value in effect.
pub fn set_arity_cap(cap: usize) -> usize {
    let cap = cap.clamp(1, MAX_CAP);
    ARITY_CAP.store(cap, Ordering::Relaxed);
    cap
}

pub(crate) fn check_arity(arity: usize) -> Result<()> {
    let cap = arity_cap();
    if arity == 0 || arity > cap {
        return Err(Error::ArityCap { arity, cap });
    }
    Ok(())
}
