// SPDX-License-Identifier: Apache-2.0

//! Interaction digraphs on at most 64 vertices, stored as out-neighbour masks.

use itertools::Itertools;
use serde::Serialize;

use crate::{Error, Result};

/// Upper bound on the number of vertices on cycles handed to the exact
/// feedback vertex set search.
pub const FEEDBACK_LIMIT: usize = 20;

/// Digraph on `0..n` allowing loops; arc `(i, j)` means `f_j` reads `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InteractionGraph {
    out: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeedbackSet {
    /// Minimum size of a vertex set whose removal leaves the graph acyclic.
    pub size: usize,
    /// Lexicographically smallest minimum set, ascending, 0-based.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    /// Loops count towards in-degree.
    pub min_indegree: usize,
    pub has_loops: bool,
    pub strongly_connected: bool,
}

impl InteractionGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeLimit(format!("graphs are limited to 64 vertices, got {n}")));
        }
        Ok(InteractionGraph { out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (i, j) in arcs {
            g.add_arc(i, j)?;
        }
        Ok(g)
    }

    /// Complete digraph without loops.
    pub fn complete(n: usize) -> Result<Self> {
        Self::from_arcs(n, (0..n).cartesian_product(0..n).filter(|(i, j)| i != j))
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete bipartite digraph with arcs in both directions between the
    /// parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let left = 0..a;
        let right = a..a + b;
        let arcs = left
            .clone()
            .cartesian_product(right.clone())
            .flat_map(|(i, j)| [(i, j), (j, i)]);
        Self::from_arcs(a + b, arcs)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn add_arc(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        for v in [i, j] {
            if v >= n {
                return Err(Error::VariableOutOfRange { index: v, n });
            }
        }
        self.out[i] |= 1 << j;
        Ok(())
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i < self.n() && j < self.n() && (self.out[i] >> j) & 1 == 1
    }

    pub fn out_mask(&self, i: usize) -> u64 {
        self.out[i]
    }

    pub fn in_mask(&self, j: usize) -> u64 {
        self.out
            .iter()
            .enumerate()
            .filter(|(_, &m)| (m >> j) & 1 == 1)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| bits(m).map(move |j| (i, j)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.in_mask(j).count_ones() as usize
    }

    pub fn loops(&self) -> u64 {
        self.out
            .iter()
            .enumerate()
            .filter(|(i, &m)| (m >> i) & 1 == 1)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn has_loops(&self) -> bool {
        self.loops() != 0
    }

    fn all(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Vertices reachable from `start` inside `alive` by a path of length ≥ 1.
    fn reach_from(&self, start: usize, alive: u64) -> u64 {
        let mut seen = 0u64;
        let mut frontier = self.out[start] & alive;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.out[v] & alive;
            }
            frontier = next & !seen;
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let all = self.all();
        let forward = self.reach_from(0, all) | 1;
        if forward != all {
            return false;
        }
        (1..n).all(|v| self.reach_from(v, all) & 1 == 1)
    }

    /// True iff the subgraph induced by `alive` has no cycle (loops included).
    pub fn is_acyclic_on(&self, alive: u64) -> bool {
        let mut alive = alive & self.all();
        loop {
            // peel vertices with no in-neighbour left
            let mut has_pred = 0u64;
            for v in bits(alive) {
                has_pred |= self.out[v] & alive;
            }
            let sources = alive & !has_pred;
            if sources == 0 {
                return alive == 0;
            }
            alive &= !sources;
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(self.all())
    }

    /// Vertices lying on at least one cycle; a loop is a cycle.
    pub fn cyclic_vertices(&self, alive: u64) -> u64 {
        bits(alive)
            .filter(|&v| (self.reach_from(v, alive) >> v) & 1 == 1)
            .fold(0, |acc, v| acc | (1 << v))
    }

    /// Exact minimum feedback vertex set.
    ///
    /// Looped vertices are forced into the set; only the remaining vertices
    /// on cycles are branched on, by increasing size and in lexicographic
    /// order, so the first hit is the lexicographically smallest minimum set.
    pub fn feedback_vertex_set(&self) -> Result<FeedbackSet> {
        let forced = self.loops();
        let rest = self.all() & !forced;
        let candidates: Vec<usize> = bits(self.cyclic_vertices(rest)).collect();
        if candidates.len() > FEEDBACK_LIMIT {
            return Err(Error::SizeLimit(format!(
                "{} vertices on cycles exceed the exact feedback search limit of {FEEDBACK_LIMIT}",
                candidates.len()
            )));
        }
        for size in 0..=candidates.len() {
            for pick in candidates.iter().copied().combinations(size) {
                let removed = pick.iter().fold(forced, |m, &v| m | (1 << v));
                if self.is_acyclic_on(self.all() & !removed) {
                    let witness: Vec<usize> = bits(removed).collect();
                    return Ok(FeedbackSet {
                        size: witness.len(),
                        witness,
                    });
                }
            }
        }
        unreachable!("removing every cyclic vertex leaves an acyclic graph")
    }

    /// Transversal number τ(G).
    pub fn feedback_number(&self) -> Result<usize> {
        Ok(self.feedback_vertex_set()?.size)
    }

    pub fn metrics(&self) -> GraphMetrics {
        GraphMetrics {
            min_indegree: (0..self.n()).map(|j| self.in_degree(j)).min().unwrap_or(0),
            has_loops: self.has_loops(),
            strongly_connected: self.is_strongly_connected(),
        }
    }

    /// Graph on `0..n` with the vertices in `removed` deleted and the rest
    /// renumbered in order.
    pub fn without(&self, removed: u64) -> Self {
        let keep: Vec<usize> = bits(self.all() & !removed).collect();
        let mut g = InteractionGraph { out: vec![0; keep.len()] };
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.has_arc(i, j) {
                    g.out[a] |= 1 << b;
                }
            }
        }
        g
    }

    /// DOT rendering with vertices named `1..=n`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for v in 0..self.n() {
            s.push_str(&format!("  {};\n", v + 1));
        }
        for (i, j) in self.arcs() {
            s.push_str(&format!("  {} -> {};\n", i + 1, j + 1));
        }
        s.push_str("}\n");
        s
    }

    /// Parses the DOT subset written by [`to_dot`](Self::to_dot): a single
    /// `digraph`, bare positive integer node statements, `a -> b;` edges.
    /// The vertex count is the largest name mentioned.
    pub fn from_dot(text: &str) -> Result<Self> {
        let body = text.trim();
        let open = body
            .find('{')
            .ok_or_else(|| Error::parse("DOT input has no '{'"))?;
        let header = body[..open].trim();
        if !header.starts_with("digraph") {
            return Err(Error::parse("only 'digraph' graphs are supported"));
        }
        let close = body
            .rfind('}')
            .ok_or_else(|| Error::parse("DOT input has no closing '}'"))?;
        if !body[close + 1..].trim().is_empty() {
            return Err(Error::parse("trailing content after closing '}'"));
        }
        let node = |tok: &str| -> Result<usize> {
            let tok = tok.trim().trim_matches('"');
            match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::parse(format!("invalid node name {tok:?}"))),
            }
        };
        let mut max_node: Option<usize> = None;
        let mut arcs = Vec::new();
        for stmt in body[open + 1..close].split([';', '\n']) {
            let stmt = stmt.trim();
            if stmt.is_empty() || stmt.starts_with("//") {
                continue;
            }
            if let Some((a, b)) = stmt.split_once("->") {
                let (a, b) = (node(a)?, node(b)?);
                max_node = max_node.max(Some(a.max(b)));
                arcs.push((a, b));
            } else {
                let v = node(stmt)?;
                max_node = max_node.max(Some(v));
            }
        }
        let n = max_node.map_or(0, |m| m + 1);
        Self::from_arcs(n, arcs)
    }
}

/// Iterates over the set bits of `m`, ascending.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
