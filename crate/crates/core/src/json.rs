// SPDX-License-Identifier: Apache-2.0

//! Network files.
//!
//! ```json
//! {"n": 3, "functions": [
//!   {"type": "linear", "inputs": [2, 3]},
//!   {"type": "dnf", "clauses": [[1, -3]]},
//!   {"type": "truth_table", "arity": 3, "bits": "e8"}
//! ]}
//! ```
//!
//! Variables are 1-based; negative literals are negations.

use serde::{Deserialize, Serialize};

use crate::function::{BooleanFunction, Descriptor, Literal};
use crate::network::BooleanNetwork;
use crate::table::TruthTable;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionJson {
    Linear { inputs: Vec<usize> },
    Dnf { clauses: Vec<Vec<i64>> },
    Majority { inputs: Vec<usize> },
    And { inputs: Vec<i64> },
    Or { inputs: Vec<i64> },
    TruthTable { arity: usize, bits: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkJson {
    pub n: usize,
    pub functions: Vec<FunctionJson>,
}

fn vars(inputs: &[usize]) -> Result<Vec<usize>> {
    inputs
        .iter()
        .map(|&v| {
            v.checked_sub(1)
                .ok_or_else(|| Error::parse("variable indices are 1-based"))
        })
        .collect()
}

fn lits(inputs: &[i64]) -> Result<Vec<Literal>> {
    inputs.iter().map(|&v| Literal::from_signed(v)).collect()
}

fn signed(lits: &[Literal]) -> Vec<i64> {
    lits.iter().map(|l| l.to_signed()).collect()
}

impl FunctionJson {
    pub fn from_function(f: &BooleanFunction) -> Self {
        let one_based = |v: &[usize]| v.iter().map(|&i| i + 1).collect();
        match f.descriptor() {
            Descriptor::Linear(v) => FunctionJson::Linear { inputs: one_based(v) },
            Descriptor::Majority(v) => FunctionJson::Majority { inputs: one_based(v) },
            Descriptor::Dnf(c) => FunctionJson::Dnf {
                clauses: c.iter().map(|cl| signed(cl)).collect(),
            },
            Descriptor::And(l) => FunctionJson::And { inputs: signed(l) },
            Descriptor::Or(l) => FunctionJson::Or { inputs: signed(l) },
            Descriptor::TruthTable => FunctionJson::TruthTable {
                arity: f.arity(),
                bits: f.table().to_hex(),
            },
        }
    }

    /// Builds the function over `arity` variables.
    pub fn to_function(&self, arity: usize) -> Result<BooleanFunction> {
        match self {
            FunctionJson::Linear { inputs } => BooleanFunction::linear(arity, &vars(inputs)?),
            FunctionJson::Majority { inputs } => BooleanFunction::majority(arity, &vars(inputs)?),
            FunctionJson::Dnf { clauses } => BooleanFunction::dnf(
                arity,
                clauses.iter().map(|c| lits(c)).collect::<Result<_>>()?,
            ),
            FunctionJson::And { inputs } => BooleanFunction::and(arity, lits(inputs)?),
            FunctionJson::Or { inputs } => BooleanFunction::or(arity, lits(inputs)?),
            FunctionJson::TruthTable { arity: a, bits } => {
                if *a != arity {
                    return Err(Error::ArityMismatch { expected: arity, found: *a });
                }
                Ok(BooleanFunction::from_table(TruthTable::from_hex(arity, bits)?))
            }
        }
    }
}

impl NetworkJson {
    pub fn from_network(f: &BooleanNetwork) -> Self {
        NetworkJson {
            n: f.n(),
            functions: f.functions().iter().map(FunctionJson::from_function).collect(),
        }
    }

    pub fn to_network(&self) -> Result<BooleanNetwork> {
        if self.functions.len() != self.n {
            return Err(Error::parse(format!(
                "network declares n = {} but lists {} functions",
                self.n,
                self.functions.len()
            )));
        }
        crate::check_arity(self.n)?;
        BooleanNetwork::new(
            self.functions
                .iter()
                .map(|f| f.to_function(self.n))
                .collect::<Result<_>>()?,
        )
    }
}

impl BooleanNetwork {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&NetworkJson::from_network(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: NetworkJson =
            serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        parsed.to_network()
    }
}
