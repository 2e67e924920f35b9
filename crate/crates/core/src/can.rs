// SPDX-License-Identifier: Apache-2.0

//! Known values of CAN(n; k), the minimum number of rows of a binary covering
//! array of strength `k` on `n` columns.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CanEntry {
    pub n: usize,
    pub k: usize,
    pub lo: u64,
    pub hi: u64,
    /// True when the value comes from `CAN(k; k) = 2^k` rather than the table.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub identity: bool,
}

impl CanEntry {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Rows are `s = n - k` from 0 to 10, columns `k` from 1 to 6; `(lo, hi)`.
const TABLE: [[(u64, u64); 6]; 11] = [
    [(2, 2), (4, 4), (8, 8), (16, 16), (32, 32), (64, 64)],
    [(2, 2), (4, 4), (8, 8), (16, 16), (32, 32), (64, 64)],
    [(2, 2), (5, 5), (10, 10), (21, 21), (42, 42), (85, 85)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 52), (96, 108)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 54), (96, 116)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 56), (96, 118)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 64), (96, 128)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 64), (96, 128)],
    [(2, 2), (6, 6), (12, 12), (24, 24), (48, 64), (96, 128)],
    [(2, 2), (7, 7), (15, 15), (30, 32), (60, 64), (120, 128)],
    [(2, 2), (7, 7), (15, 16), (30, 35), (60, 79), (120, 179)],
];

/// Looks up CAN(n; k). Returns `None` outside the table, except for the
/// identity `CAN(k; k) = 2^k`, which is answered for any `1 <= k < 64`.
pub fn can_lookup(n: usize, k: usize) -> Option<CanEntry> {
    if k == 0 || k > n {
        return None;
    }
    let s = n - k;
    if let Some(&(lo, hi)) = TABLE.get(s).and_then(|row| row.get(k - 1)) {
        return Some(CanEntry { n, k, lo, hi, identity: false });
    }
    if s == 0 && k < 64 {
        let v = 1u64 << k;
        return Some(CanEntry { n, k, lo: v, hi: v, identity: true });
    }
    None
}
