// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use boolnet::constructions::{linear_network, sk_network};
use boolnet::{BooleanFunction, BooleanNetwork, InteractionGraph, Literal};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Arbitrary function of the variables in `inputs`.
pub fn random_table(rng: &mut impl Rng, n: usize, inputs: u64) -> BooleanFunction {
    let vars = bits(inputs);
    let table: Vec<bool> = (0..1usize << vars.len()).map(|_| rng.gen()).collect();
    BooleanFunction::from_fn(n, |x| {
        let idx = vars.iter().enumerate().fold(0, |a, (b, &v)| a | ((x >> v & 1) as usize) << b);
        table[idx]
    })
    .unwrap()
}

/// Random subset of `allowed` with between 1 and `max` elements (if possible).
pub fn random_inputs(rng: &mut impl Rng, allowed: u64, max: usize) -> u64 {
    let mut vars = bits(allowed);
    vars.shuffle(rng);
    let d = rng.gen_range(1..=max.min(vars.len()).max(1));
    vars.iter().take(d).fold(0, |m, &v| m | 1 << v)
}

/// Positive DNF over `allowed` with clauses of length up to `max_len`.
pub fn random_monotone(rng: &mut impl Rng, n: usize, allowed: u64, max_len: usize) -> BooleanFunction {
    let vars = bits(allowed);
    if vars.is_empty() {
        return BooleanFunction::constant(n, rng.gen()).unwrap();
    }
    let clauses = (0..rng.gen_range(1..=4))
        .map(|_| {
            let mut c = vars.clone();
            c.shuffle(rng);
            c.truncate(rng.gen_range(1..=max_len.min(vars.len())));
            c.sort_unstable();
            c.into_iter().map(Literal::pos).collect()
        })
        .collect();
    BooleanFunction::dnf(n, clauses).unwrap()
}

/// A monotone function with a random set of inputs negated.
pub fn random_unate(rng: &mut impl Rng, n: usize) -> BooleanFunction {
    let mono = if rng.gen_bool(0.5) {
        random_monotone(rng, n, (1 << n) - 1, n)
    } else {
        random_upset(rng, n)
    };
    let flip: u64 = rng.gen_range(0..1u64 << n);
    let t = mono.table().clone();
    BooleanFunction::from_fn(n, |x| t.get(x ^ flip)).unwrap()
}

/// Up-closure of a few random points.
pub fn random_upset(rng: &mut impl Rng, n: usize) -> BooleanFunction {
    let gens: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..1u64 << n)).collect();
    BooleanFunction::from_fn(n, |x| gens.iter().any(|&g| x & g == g)).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, loops: bool) -> InteractionGraph {
    let mut g = InteractionGraph::new(n).unwrap();
    for i in 0..n {
        for j in 0..n {
            if (i != j || loops) && rng.gen_bool(p) {
                g.add_arc(i, j).unwrap();
            }
        }
    }
    g
}

fn others(n: usize, j: usize) -> u64 {
    ((1u64 << n) - 1) & !(1 << j)
}

/// Loopless network drawn from a mix of families so that nonzero
/// independence numbers actually occur.
pub fn random_loopless(rng: &mut impl Rng, n: usize) -> BooleanNetwork {
    match rng.gen_range(0..4) {
        0 => BooleanNetwork::new(
            (0..n)
                .map(|j| {
                    let inputs = random_inputs(rng, others(n, j), 3);
                    random_table(rng, n, inputs)
                })
                .collect(),
        )
        .unwrap(),
        1 => {
            let p = rng.gen_range(0.3..0.95);
            linear_network(&random_graph(rng, n, p, false)).unwrap()
        }
        2 if n >= 3 => sk_network(n, rng.gen_range(1..=n - 2)).unwrap(),
        _ => random_loopless_monotone(rng, n),
    }
}

/// Loopless monotone network: random positive DNFs, the block
/// construction on random blocks, or thresholds over the other variables.
pub fn random_loopless_monotone(rng: &mut impl Rng, n: usize) -> BooleanNetwork {
    match rng.gen_range(0..3) {
        0 => {
            let max_len = rng.gen_range(1..=n.max(2) - 1);
            BooleanNetwork::new(
                (0..n).map(|j| random_monotone(rng, n, others(n, j), max_len)).collect(),
            )
            .unwrap()
        }
        1 if n >= 3 => {
            let size = rng.gen_range(2..=n - 1);
            let blocks: Vec<Vec<usize>> = (0..rng.gen_range(n..=3 * n))
                .map(|_| {
                    let mut b: Vec<usize> = (0..n).collect();
                    b.shuffle(rng);
                    b.truncate(size);
                    b
                })
                .collect();
            BooleanNetwork::new(
                (0..n)
                    .map(|i| {
                        let clauses: Vec<Vec<Literal>> = blocks
                            .iter()
                            .filter(|b| b.contains(&i))
                            .map(|b| b.iter().filter(|&&j| j != i).map(|&j| Literal::pos(j)).collect())
                            .collect();
                        if clauses.is_empty() {
                            BooleanFunction::constant(n, false).unwrap()
                        } else {
                            BooleanFunction::dnf(n, clauses).unwrap()
                        }
                    })
                    .collect(),
            )
            .unwrap()
        }
        _ => BooleanNetwork::new(
            (0..n)
                .map(|j| {
                    let inputs = others(n, j) & rng.gen_range(1..1u64 << n) | random_inputs(rng, others(n, j), 1);
                    let need = rng.gen_range(1..=inputs.count_ones());
                    BooleanFunction::from_fn(n, |x| (x & inputs).count_ones() >= need).unwrap()
                })
                .collect(),
        )
        .unwrap(),
    }
}

/// Every local function a conjunction or disjunction of literals on other
/// variables.
pub fn random_and_or(rng: &mut impl Rng, n: usize) -> BooleanNetwork {
    BooleanNetwork::new(
        (0..n)
            .map(|j| {
                let lits: Vec<Literal> = bits(random_inputs(rng, others(n, j), n))
                    .into_iter()
                    .map(|v| Literal { var: v, positive: rng.gen() })
                    .collect();
                if rng.gen() {
                    BooleanFunction::and(n, lits).unwrap()
                } else {
                    BooleanFunction::or(n, lits).unwrap()
                }
            })
            .collect(),
    )
    .unwrap()
}

/// Network with a few random inputs per node, loops allowed.
pub fn random_sparse(rng: &mut impl Rng, n: usize) -> BooleanNetwork {
    let all = (1u64 << n) - 1;
    BooleanNetwork::new(
        (0..n)
            .map(|_| {
                let inputs = random_inputs(rng, all, 3);
                random_table(rng, n, inputs)
            })
            .collect(),
    )
    .unwrap()
}
