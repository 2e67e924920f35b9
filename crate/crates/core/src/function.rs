// SPDX-License-Identifier: Apache-2.0

//! Single Boolean functions `{0,1}^n -> {0,1}`.
//!
//! A [`BooleanFunction`] always carries its full truth table. When it was
//! built from a symbolic form (XOR mask, DNF, majority, AND/OR) the form is
//! kept as a [`Descriptor`] so it can be written back out unchanged.

use itertools::Itertools;

use crate::table::TruthTable;
use crate::{Error, Result, State};

/// A possibly negated variable, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// Parses the signed 1-based form used in files (`3` is x3, `-3` is ¬x3).
    pub fn from_signed(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(Error::parse("literal 0 is not a variable"));
        }
        Ok(Literal {
            var: v.unsigned_abs() as usize - 1,
            positive: v > 0,
        })
    }

    pub fn to_signed(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    #[inline]
    pub fn eval(self, x: State) -> bool {
        ((x >> self.var) & 1 == 1) == self.positive
    }
}

/// Symbolic form a function was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    /// XOR of the listed variables (sorted, distinct).
    Linear(Vec<usize>),
    /// Disjunction of conjunctions.
    Dnf(Vec<Vec<Literal>>),
    /// 1 iff at least `ceil(m/2)` of the `m` listed variables are 1.
    Majority(Vec<usize>),
    And(Vec<Literal>),
    Or(Vec<Literal>),
    /// No symbolic form; the table is authoritative.
    TruthTable,
}

impl Descriptor {
    /// Evaluates the symbolic form directly, without the table.
    pub fn eval(&self, x: State) -> Option<bool> {
        Some(match self {
            Descriptor::Linear(vars) => vars.iter().fold(false, |acc, &v| acc ^ ((x >> v) & 1 == 1)),
            Descriptor::Dnf(clauses) => clauses.iter().any(|c| c.iter().all(|l| l.eval(x))),
            Descriptor::Majority(vars) => {
                let ones = vars.iter().filter(|&&v| (x >> v) & 1 == 1).count();
                ones >= vars.len().div_ceil(2)
            }
            Descriptor::And(lits) => lits.iter().all(|l| l.eval(x)),
            Descriptor::Or(lits) => lits.iter().any(|l| l.eval(x)),
            Descriptor::TruthTable => return None,
        })
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Descriptor::Linear(v) | Descriptor::Majority(v) => v.iter().copied().max(),
            Descriptor::Dnf(c) => c.iter().flatten().map(|l| l.var).max(),
            Descriptor::And(l) | Descriptor::Or(l) => l.iter().map(|l| l.var).max(),
            Descriptor::TruthTable => None,
        }
    }

    fn remap(&self, positions: &[usize]) -> Descriptor {
        let lit = |l: &Literal| Literal {
            var: positions[l.var],
            positive: l.positive,
        };
        match self {
            Descriptor::Linear(v) => Descriptor::Linear(v.iter().map(|&i| positions[i]).sorted().collect()),
            Descriptor::Majority(v) => Descriptor::Majority(v.iter().map(|&i| positions[i]).collect()),
            Descriptor::Dnf(c) => Descriptor::Dnf(c.iter().map(|cl| cl.iter().map(lit).collect()).collect()),
            Descriptor::And(l) => Descriptor::And(l.iter().map(lit).collect()),
            Descriptor::Or(l) => Descriptor::Or(l.iter().map(lit).collect()),
            Descriptor::TruthTable => Descriptor::TruthTable,
        }
    }
}

/// How a function reacts to raising one variable from 0 to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    /// The function does not depend on the variable.
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnateProfile(pub Vec<Monotonicity>);

impl UnateProfile {
    pub fn is_unate(&self) -> bool {
        self.0.iter().all(|&m| m != Monotonicity::Neither)
    }

    pub fn is_monotone(&self) -> bool {
        self.0
            .iter()
            .all(|&m| matches!(m, Monotonicity::Increasing | Monotonicity::Both))
    }

    /// Bit mask of decreasing variables (the γ⁻ set).
    pub fn decreasing_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == Monotonicity::Decreasing)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }
}

/// Witness of set-canalization: fixing `vars` to `values` forces `output`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canalization {
    /// Ascending 0-based variable indices.
    pub vars: Vec<usize>,
    /// Values in the same order as `vars`.
    pub values: Vec<bool>,
    pub output: bool,
}

impl Canalization {
    pub fn size(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    table: TruthTable,
    descriptor: Descriptor,
}

fn check_vars(arity: usize, vars: impl IntoIterator<Item = usize>) -> Result<()> {
    for v in vars {
        if v >= arity {
            return Err(Error::VariableOutOfRange { index: v, n: arity });
        }
    }
    Ok(())
}

fn literal_table(arity: usize, l: Literal) -> Result<TruthTable> {
    let t = TruthTable::var(arity, l.var)?;
    Ok(if l.positive { t } else { t.not() })
}

impl BooleanFunction {
    pub fn from_table(table: TruthTable) -> Self {
        BooleanFunction {
            table,
            descriptor: Descriptor::TruthTable,
        }
    }

    pub fn from_fn<F: FnMut(State) -> bool>(arity: usize, f: F) -> Result<Self> {
        Ok(Self::from_table(TruthTable::from_fn(arity, f)?))
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        let t = TruthTable::zeros(arity)?;
        Ok(Self::from_table(if value { t.not() } else { t }))
    }

    /// XOR of `inputs`; an empty list is the constant 0.
    pub fn linear(arity: usize, inputs: &[usize]) -> Result<Self> {
        check_vars(arity, inputs.iter().copied())?;
        let inputs: Vec<usize> = inputs.iter().copied().sorted().dedup().collect();
        let mut t = TruthTable::zeros(arity)?;
        for &v in &inputs {
            t = t.xor(&TruthTable::var(arity, v)?);
        }
        Ok(BooleanFunction {
            table: t,
            descriptor: Descriptor::Linear(inputs),
        })
    }

    /// The projection `x -> x_var`.
    pub fn variable(arity: usize, var: usize) -> Result<Self> {
        Self::linear(arity, &[var])
    }

    pub fn dnf(arity: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        check_vars(arity, clauses.iter().flatten().map(|l| l.var))?;
        let mut t = TruthTable::zeros(arity)?;
        for clause in &clauses {
            let mut c = TruthTable::ones(arity)?;
            for &l in clause {
                c = c.and(&literal_table(arity, l)?);
            }
            t = t.or(&c);
        }
        Ok(BooleanFunction {
            table: t,
            descriptor: Descriptor::Dnf(clauses),
        })
    }

    pub fn and(arity: usize, lits: Vec<Literal>) -> Result<Self> {
        check_vars(arity, lits.iter().map(|l| l.var))?;
        let mut t = TruthTable::ones(arity)?;
        for &l in &lits {
            t = t.and(&literal_table(arity, l)?);
        }
        Ok(BooleanFunction {
            table: t,
            descriptor: Descriptor::And(lits),
        })
    }

    pub fn or(arity: usize, lits: Vec<Literal>) -> Result<Self> {
        check_vars(arity, lits.iter().map(|l| l.var))?;
        let mut t = TruthTable::zeros(arity)?;
        for &l in &lits {
            t = t.or(&literal_table(arity, l)?);
        }
        Ok(BooleanFunction {
            table: t,
            descriptor: Descriptor::Or(lits),
        })
    }

    pub fn majority(arity: usize, inputs: &[usize]) -> Result<Self> {
        check_vars(arity, inputs.iter().copied())?;
        let mask = inputs.iter().fold(0u64, |m, &v| m | (1 << v));
        if mask.count_ones() as usize != inputs.len() {
            return Err(Error::param("majority inputs must be distinct"));
        }
        let need = inputs.len().div_ceil(2) as u32;
        let t = TruthTable::from_fn(arity, |x| (x & mask).count_ones() >= need)?;
        Ok(BooleanFunction {
            table: t,
            descriptor: Descriptor::Majority(inputs.to_vec()),
        })
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.table.arity()
    }

    #[inline]
    pub fn table(&self) -> &TruthTable {
        &self.table
    }

    #[inline]
    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn evaluate(&self, x: State) -> Result<bool> {
        if x >= self.table.num_states() {
            return Err(Error::StateOutOfRange {
                state: x,
                n: self.arity(),
            });
        }
        Ok(self.table.get(x))
    }

    /// Checks the descriptor against the table at every state.
    pub fn descriptor_agrees(&self) -> bool {
        if matches!(self.descriptor, Descriptor::TruthTable) {
            return true;
        }
        if self.descriptor.max_var().is_some_and(|v| v >= self.arity()) {
            return false;
        }
        (0..self.table.num_states()).all(|x| self.descriptor.eval(x) == Some(self.table.get(x)))
    }

    pub fn depends_on(&self, var: usize) -> Result<bool> {
        if var >= self.arity() {
            return Err(Error::VariableOutOfRange {
                index: var,
                n: self.arity(),
            });
        }
        Ok(self.table.depends_on_var(var))
    }

    /// Bit mask of the variables this function depends on.
    pub fn support(&self) -> u64 {
        (0..self.arity())
            .filter(|&v| self.table.depends_on_var(v))
            .fold(0, |m, v| m | (1 << v))
    }

    pub fn unate_profile(&self) -> UnateProfile {
        UnateProfile(
            (0..self.arity())
                .map(|v| {
                    let (mut inc_violated, mut dec_violated) = (false, false);
                    for (lo, hi, valid) in self.table.cofactor_pairs(v) {
                        inc_violated |= lo & !hi & valid != 0;
                        dec_violated |= !lo & hi & valid != 0;
                        if inc_violated && dec_violated {
                            break;
                        }
                    }
                    match (inc_violated, dec_violated) {
                        (false, false) => Monotonicity::Both,
                        (false, true) => Monotonicity::Increasing,
                        (true, false) => Monotonicity::Decreasing,
                        (true, true) => Monotonicity::Neither,
                    }
                })
                .collect(),
        )
    }

    pub fn is_unate(&self) -> bool {
        self.unate_profile().is_unate()
    }

    pub fn is_monotone(&self) -> bool {
        self.unate_profile().is_monotone()
    }

    /// First canalizing input of smallest size.
    ///
    /// Sizes are scanned upwards from 0, index sets in lexicographic order,
    /// and assignments in lexicographic order with the first listed variable
    /// most significant. A constant function is canalized by the empty set.
    pub fn canalization(&self) -> Canalization {
        let n = self.arity();
        if let Some(b) = self.table.constant_value() {
            return Canalization {
                vars: vec![],
                values: vec![],
                output: b,
            };
        }
        let full = (1u64 << n) - 1;
        for k in 1..=n {
            for vars in (0..n).combinations(k) {
                let fixed = vars.iter().fold(0u64, |m, &v| m | (1 << v));
                let free = full & !fixed;
                for a in 0..(1u64 << k) {
                    // a's highest bit belongs to vars[0]
                    let base = vars
                        .iter()
                        .enumerate()
                        .fold(0u64, |x, (j, &v)| x | (((a >> (k - 1 - j)) & 1) << v));
                    if let Some(b) = self.constant_on(base, free) {
                        return Canalization {
                            values: (0..k).map(|j| (a >> (k - 1 - j)) & 1 == 1).collect(),
                            vars,
                            output: b,
                        };
                    }
                }
            }
        }
        unreachable!("a full assignment always canalizes")
    }

    /// Value of the function if it is constant on `{base | s : s ⊆ free}`.
    fn constant_on(&self, base: State, free: u64) -> Option<bool> {
        let first = self.table.get(base);
        let mut s = free;
        while s != 0 {
            if self.table.get(base | s) != first {
                return None;
            }
            s = (s - 1) & free;
        }
        Some(first)
    }

    /// Minimum size of a canalizing input set.
    pub fn ic_index(&self) -> usize {
        self.canalization().size()
    }

    /// ξ(h): the larger of `max (n − w̃(x))` over the 1-set and `max w̃(y)`
    /// over the 0-set, where `w̃` counts increasing variables set to 1 plus
    /// decreasing variables set to 0. Variables the function ignores count as
    /// increasing.
    pub fn xi_value(&self) -> Result<usize> {
        let profile = self.unate_profile();
        if let Some(v) = profile.0.iter().position(|&m| m == Monotonicity::Neither) {
            return Err(Error::NotUnate { variable: v });
        }
        let n = self.arity();
        let minus = profile.decreasing_mask();
        let plus = ((1u64 << n) - 1) & !minus;
        let mut best = 0usize;
        for x in 0..self.table.num_states() {
            let w = ((x & plus).count_ones() + (!x & minus).count_ones()) as usize;
            let v = if self.table.get(x) { n - w } else { w };
            best = best.max(v);
        }
        Ok(best)
    }

    /// The same function over `new_arity` variables with old variable `i`
    /// renamed to `positions[i]`.
    pub fn remap(&self, new_arity: usize, positions: &[usize]) -> Result<Self> {
        let table = self.table.remap(new_arity, positions)?;
        Ok(BooleanFunction {
            table,
            descriptor: self.descriptor.remap(positions),
        })
    }

    /// Same function with extra variables appended that it ignores.
    pub fn extend(&self, new_arity: usize) -> Result<Self> {
        let positions: Vec<usize> = (0..self.arity()).collect();
        self.remap(new_arity, &positions)
    }
}
