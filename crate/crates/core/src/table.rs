// SPDX-License-Identifier: Apache-2.0

//! Packed truth tables.
//!
//! A table over `n` variables holds `2^n` bits in 64-bit words; bit `x` of the
//! table is the function value at the state whose integer encoding is `x`.
//! For `n < 6` a single word is used and the bits above `2^n` stay zero.

use crate::{check_arity, Result, State};

/// Selector patterns for the variables that live inside one word.
const LOW_VARS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruthTable({}, {})", self.arity, self.to_hex())
    }
}

#[inline]
pub(crate) fn word_count(arity: usize) -> usize {
    if arity >= 6 {
        1 << (arity - 6)
    } else {
        1
    }
}

/// Mask of the valid bits of each word for a table of the given arity.
#[inline]
pub(crate) fn valid_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

/// The 64 values variable `var` takes over the states `64 * word .. 64 * word + 63`.
#[inline]
pub(crate) fn var_word(var: usize, word: usize) -> u64 {
    if var < 6 {
        LOW_VARS[var]
    } else if (word >> (var - 6)) & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

impl TruthTable {
    pub fn zeros(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(TruthTable {
            arity,
            words: vec![0; word_count(arity)],
        })
    }

    pub fn ones(arity: usize) -> Result<Self> {
        Ok(Self::zeros(arity)?.not())
    }

    /// Projection onto variable `var`.
    pub fn var(arity: usize, var: usize) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        if var >= arity {
            return Err(crate::Error::VariableOutOfRange { index: var, n: arity });
        }
        let mask = valid_mask(arity);
        for (w, word) in t.words.iter_mut().enumerate() {
            *word = var_word(var, w) & mask;
        }
        Ok(t)
    }

    pub fn from_fn<F: FnMut(State) -> bool>(arity: usize, mut f: F) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        let states = 1u64 << arity;
        for (w, word) in t.words.iter_mut().enumerate() {
            let base = (w as u64) << 6;
            let mut acc = 0u64;
            for b in 0..64u64.min(states) {
                if f(base + b) {
                    acc |= 1 << b;
                }
            }
            *word = acc;
        }
        Ok(t)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn num_states(&self) -> u64 {
        1u64 << self.arity
    }

    /// Value at `x`; the caller guarantees `x < 2^arity`.
    #[inline]
    pub fn get(&self, x: State) -> bool {
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    pub fn set(&mut self, x: State, value: bool) {
        let w = &mut self.words[(x >> 6) as usize];
        if value {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Returns `Some(b)` if the table is constantly `b`.
    pub fn constant_value(&self) -> Option<bool> {
        let ones = self.count_ones();
        if ones == 0 {
            Some(false)
        } else if ones == self.num_states() {
            Some(true)
        } else {
            None
        }
    }

    pub fn not(&self) -> Self {
        let mask = valid_mask(self.arity);
        TruthTable {
            arity: self.arity,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.arity, other.arity, "truth table arity mismatch");
        TruthTable {
            arity: self.arity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn xor(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Iterates over aligned cofactor pairs for variable `var`.
    ///
    /// Each item `(lo, hi, valid)` packs `f(x : x_var = 0)` and
    /// `f(x : x_var = 1)` at the same bit positions; only bits in `valid` are
    /// meaningful.
    pub(crate) fn cofactor_pairs(&self, var: usize) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        debug_assert!(var < self.arity);
        let mask = valid_mask(self.arity);
        let words = &self.words;
        let (low, stride) = if var < 6 { (true, 0) } else { (false, 1usize << (var - 6)) };
        (0..words.len()).filter_map(move |w| {
            if low {
                let m = LOW_VARS[var];
                let shift = 1u32 << var;
                let v = words[w];
                Some((v & !m & mask, (v & m) >> shift, !m & mask))
            } else if w & stride == 0 {
                Some((words[w], words[w + stride], u64::MAX))
            } else {
                None
            }
        })
    }

    /// True iff flipping `var` changes the value somewhere.
    pub fn depends_on_var(&self, var: usize) -> bool {
        self.cofactor_pairs(var)
            .any(|(lo, hi, valid)| (lo ^ hi) & valid != 0)
    }

    /// Rebuilds the table over `new_arity` variables where old variable `i`
    /// becomes new variable `positions[i]`.
    pub fn remap(&self, new_arity: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.arity {
            return Err(crate::Error::ArityMismatch {
                expected: self.arity,
                found: positions.len(),
            });
        }
        if let Some(&p) = positions.iter().find(|&&p| p >= new_arity) {
            return Err(crate::Error::VariableOutOfRange { index: p, n: new_arity });
        }
        Self::from_fn(new_arity, |x| {
            let mut old = 0u64;
            for (i, &p) in positions.iter().enumerate() {
                old |= ((x >> p) & 1) << i;
            }
            self.get(old)
        })
    }

    /// Hex serialization: digit `d` covers states `4d .. 4d + 3`, least
    /// significant bit first.
    pub fn to_hex(&self) -> String {
        let digits = ((1usize << self.arity) + 3) / 4;
        let mut s = String::with_capacity(digits);
        for d in 0..digits {
            let bit = d * 4;
            let nibble = (self.words[bit >> 6] >> (bit & 63)) & 0xF;
            s.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(arity: usize, hex: &str) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        let digits = ((1usize << arity) + 3) / 4;
        let hex = hex.trim();
        if hex.len() != digits {
            return Err(crate::Error::parse(format!(
                "truth table of arity {arity} needs {digits} hex digits, found {}",
                hex.len()
            )));
        }
        for (d, c) in hex.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| crate::Error::parse(format!("invalid hex digit {c:?}")))?
                as u64;
            let bit = d * 4;
            t.words[bit >> 6] |= nibble << (bit & 63);
        }
        if t.words[0] & !valid_mask(arity) != 0 {
            return Err(crate::Error::parse("truth table has bits beyond 2^arity"));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_tables_match_bit_extraction() {
        for arity in 1..=8 {
            for v in 0..arity {
                let t = TruthTable::var(arity, v).unwrap();
                for x in 0..(1u64 << arity) {
                    assert_eq!(t.get(x), (x >> v) & 1 == 1, "arity {arity} var {v} x {x}");
                }
            }
        }
    }

    #[test]
    fn not_stays_inside_valid_bits() {
        let t = TruthTable::zeros(2).unwrap().not();
        assert_eq!(t.count_ones(), 4);
        assert_eq!(t.words()[0], 0xF);
    }

    #[test]
    fn hex_layout_is_little_endian_by_state() {
        // x1 on two variables is 1 at states 1 and 3 -> nibble 0b1010.
        let t = TruthTable::var(2, 0).unwrap();
        assert_eq!(t.to_hex(), "a");
        let t = TruthTable::var(3, 2).unwrap();
        assert_eq!(t.to_hex(), "0f");
        assert_eq!(TruthTable::from_hex(3, "0f").unwrap(), t);
        assert!(TruthTable::from_hex(1, "f").is_err());
        assert!(TruthTable::from_hex(3, "0").is_err());
    }

    #[test]
    fn cofactor_dependency_high_variables() {
        let t = TruthTable::var(9, 8).unwrap();
        assert!(t.depends_on_var(8));
        assert!((0..8).all(|v| !t.depends_on_var(v)));
    }

    #[test]
    fn remap_moves_variables() {
        let x0 = TruthTable::var(2, 0).unwrap();
        let moved = x0.remap(4, &[3, 1]).unwrap();
        assert_eq!(moved, TruthTable::var(4, 3).unwrap());
    }

    #[test]
    fn zero_arity_rejected() {
        assert!(TruthTable::zeros(0).is_err());
        assert!(TruthTable::zeros(crate::MAX_CAP + 1).is_err());
    }
}
