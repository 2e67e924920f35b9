// SPDX-License-Identifier: Apache-2.0

//! Network constructions with a prescribed independence number.
//!
//! Every builder returns a plain [`BooleanNetwork`]; the matching `*_claims`
//! helpers describe what the construction promises so that callers can
//! check the result with [`Claims::check`].

use crate::cover::VectorSet;
use crate::designs::SteinerSystem;
use crate::function::{BooleanFunction, Literal};
use crate::graph::{bits, InteractionGraph};
use crate::network::BooleanNetwork;
use crate::{check_arity, Error, Result};

/// `f_j` is the XOR of the in-neighbours of `j`. A vertex without
/// in-neighbours gets the constant 0.
pub fn linear_network(g: &InteractionGraph) -> Result<BooleanNetwork> {
    let n = g.n();
    BooleanNetwork::new(
        (0..n)
            .map(|j| BooleanFunction::linear(n, &bits(g.in_mask(j)).collect::<Vec<_>>()))
            .collect::<Result<_>>()?,
    )
}

/// Network on loopless `K_n` whose fixed points are the vectors of weight
/// at most `k + 1` with weight parity equal to the parity of `k`.
///
/// `f_i(x) = 1` iff the weight `w` of `x` without `x_i` satisfies `w <= k`
/// and `w` has the opposite parity of `k`.
pub fn sk_network(n: usize, k: usize) -> Result<BooleanNetwork> {
    if k == 0 || k + 2 > n {
        return Err(Error::param(format!("sk network needs 1 <= k <= n - 2, got n={n} k={k}")));
    }
    check_arity(n)?;
    let parity = (k as u32 + 1) % 2;
    BooleanNetwork::new(
        (0..n)
            .map(|i| {
                BooleanFunction::from_fn(n, |x| {
                    let w = (x & !(1 << i)).count_ones();
                    w as usize <= k && w % 2 == parity
                })
            })
            .collect::<Result<_>>()?,
    )
}

/// The set `S_k` (k even) or `T_k` (k odd) computed straight from its
/// definition.
pub fn sk_fixed_points(n: usize, k: usize) -> Result<VectorSet> {
    let parity = (k % 2) as u32;
    VectorSet::new(
        n,
        (0..1u64 << n)
            .filter(|x| x.count_ones() as usize <= k + 1 && x.count_ones() % 2 == parity)
            .collect(),
    )
}

/// Loopless `K_r` on `0..r`, loopless `K_s` on `r..r+s`, and arcs from
/// vertex 0 to every vertex of `K_s`.
pub fn clique_gluing_graph(r: usize, s: usize) -> Result<InteractionGraph> {
    if r < 2 || s < 2 {
        return Err(Error::param(format!("clique gluing needs r, s >= 2, got r={r} s={s}")));
    }
    let n = r + s;
    let within = |lo: usize, hi: usize| {
        (lo..hi).flat_map(move |i| (lo..hi).filter(move |&j| j != i).map(move |j| (i, j)))
    };
    InteractionGraph::from_arcs(n, within(0, r).chain(within(r, n)).chain((r..n).map(|j| (0, j))))
}

pub fn clique_gluing(r: usize, s: usize) -> Result<(InteractionGraph, BooleanNetwork)> {
    let g = clique_gluing_graph(r, s)?;
    let f = linear_network(&g)?;
    Ok((g, f))
}

/// Windmill `W_{m,k}`: centre 0 and `k` copies of `K_m` sharing it; copy
/// `l` (1-based) occupies `1 + (l-1)(m-1) ..= l(m-1)`.
pub fn windmill_graph(m: usize, k: usize) -> Result<InteractionGraph> {
    if m < 2 || k == 0 {
        return Err(Error::param(format!("windmill needs m >= 2, k >= 1, got m={m} k={k}")));
    }
    let n = (m - 1) * k + 1;
    let mut g = InteractionGraph::new(n)?;
    for l in 0..k {
        let mut verts = vec![0];
        verts.extend(1 + l * (m - 1)..=(l + 1) * (m - 1));
        for &a in &verts {
            for &b in &verts {
                if a != b {
                    g.add_arc(a, b)?;
                }
            }
        }
    }
    Ok(g)
}

/// Linear network on the windmill. An even number of blades forces the
/// centre to 0 at every fixed point, so `k` must be odd.
pub fn windmill(m: usize, k: usize) -> Result<(InteractionGraph, BooleanNetwork)> {
    if k % 2 == 0 {
        return Err(Error::param(format!("windmill needs an odd number of blades, got k={k}")));
    }
    let g = windmill_graph(m, k)?;
    let f = linear_network(&g)?;
    Ok((g, f))
}

/// Appends a variable with `f_{n+1}(x) = x_{n+1}`.
pub fn add_loop(f: &BooleanNetwork) -> Result<BooleanNetwork> {
    let n = f.n() + 1;
    check_arity(n)?;
    let mut fs: Vec<BooleanFunction> = f
        .functions()
        .iter()
        .map(|g| g.extend(n))
        .collect::<Result<_>>()?;
    fs.push(BooleanFunction::variable(n, n - 1)?);
    BooleanNetwork::new(fs)
}

/// Linear loopless `K_{k+1}` followed by `n - k - 1` isolated loops.
pub fn clique_plus_loops(n: usize, k: usize) -> Result<BooleanNetwork> {
    if k == 0 || k + 1 > n {
        return Err(Error::param(format!("clique plus loops needs 1 <= k < n, got n={n} k={k}")));
    }
    check_arity(n)?;
    let mut g = InteractionGraph::complete(k + 1)?;
    let mut f = linear_network(&g)?;
    for _ in k + 1..n {
        f = add_loop(&f)?;
    }
    g = f.interaction_graph();
    debug_assert_eq!(g.n(), n);
    Ok(f)
}

/// Multiplexes two networks on `n - 1` variables through a new last variable:
/// `g_i = (x_n ∧ f_i) ∨ (¬x_n ∧ f̃_i)`.
///
/// The pivot is `g_n = x_n`, or, when `loopless` is set, the indicator of
/// `FP(f)`; the latter needs `FP(f)` and `FP(f̃)` disjoint.
pub fn extend_with_pivot(
    f: &BooleanNetwork,
    f_tilde: &BooleanNetwork,
    loopless: bool,
) -> Result<BooleanNetwork> {
    if f.n() != f_tilde.n() {
        return Err(Error::ArityMismatch { expected: f.n(), found: f_tilde.n() });
    }
    let m = f.n();
    let n = m + 1;
    check_arity(n)?;
    let fp = f.fixed_points();
    if loopless && fp.intersects(&f_tilde.fixed_points()) {
        return Err(Error::param("loopless pivot needs disjoint fixed-point sets"));
    }
    let low = (1u64 << m) - 1;
    let mut fs = Vec::with_capacity(n);
    for i in 0..m {
        let (a, b) = (f.function(i).table(), f_tilde.function(i).table());
        fs.push(BooleanFunction::from_fn(n, |x| {
            let y = x & low;
            if x >> m & 1 == 1 {
                a.get(y)
            } else {
                b.get(y)
            }
        })?);
    }
    fs.push(if loopless {
        BooleanFunction::from_fn(n, |x| fp.contains(x & low))?
    } else {
        BooleanFunction::variable(n, m)?
    });
    BooleanNetwork::new(fs)
}

/// Block-diagonal union: network `l` acts on its own consecutive block of
/// variables.
pub fn disjoint_product(fs: &[BooleanNetwork]) -> Result<BooleanNetwork> {
    let n: usize = fs.iter().map(BooleanNetwork::n).sum();
    if fs.is_empty() {
        return Err(Error::param("product of no networks"));
    }
    check_arity(n)?;
    let mut out = Vec::with_capacity(n);
    let mut offset = 0;
    for f in fs {
        let positions: Vec<usize> = (offset..offset + f.n()).collect();
        for g in f.functions() {
            out.push(g.remap(n, &positions)?);
        }
        offset += f.n();
    }
    BooleanNetwork::new(out)
}

/// Strongly connected union of several networks on consecutive blocks.
///
/// Functions of the first block are ANDed with the fixed-point indicators of
/// every other block; functions of the other blocks are ANDed with the
/// indicator of the first. The fixed points are then the products of the
/// parts, except that the zero state also becomes fixed when it is fixed in
/// neither the first part nor some later part; that case is rejected.
pub fn strong_union(fs: &[BooleanNetwork]) -> Result<BooleanNetwork> {
    match fs {
        [] => return Err(Error::param("union of no networks")),
        [single] => return Ok(single.clone()),
        _ => {}
    }
    let n: usize = fs.iter().map(BooleanNetwork::n).sum();
    check_arity(n)?;
    let fps: Vec<VectorSet> = fs.iter().map(BooleanNetwork::fixed_points).collect();
    if let Some(l) = fps.iter().position(VectorSet::is_empty) {
        return Err(Error::param(format!("component {} has no fixed points", l + 1)));
    }
    if !fps[0].contains(0) && fps[1..].iter().any(|p| !p.contains(0)) {
        return Err(Error::param(
            "the zero state would be a spurious fixed point: it is fixed neither in the first component nor in some later one",
        ));
    }
    let mut offsets = Vec::with_capacity(fs.len());
    let mut acc = 0;
    for f in fs {
        offsets.push(acc);
        acc += f.n();
    }
    let part = |x: u64, l: usize| (x >> offsets[l]) & ((1u64 << fs[l].n()) - 1);
    let gate = |x: u64, l: usize| fps[l].contains(part(x, l));

    let mut out = Vec::with_capacity(n);
    for (l, f) in fs.iter().enumerate() {
        for g in f.functions() {
            let t = g.table();
            out.push(BooleanFunction::from_fn(n, |x| {
                t.get(part(x, l))
                    && if l == 0 {
                        (1..fs.len()).all(|o| gate(x, o))
                    } else {
                        gate(x, 0)
                    }
            })?);
        }
    }
    BooleanNetwork::new(out)
}

/// Monotone network from an `(n, t+1, t)` Steiner system:
/// `f_i = ⋁_{blocks B ∋ i} ⋀_{j ∈ B, j ≠ i} x_j`, clauses in block order.
pub fn steiner_monotone(s: &SteinerSystem) -> Result<BooleanNetwork> {
    if s.k != s.t + 1 || s.t < 2 || 2 * s.t >= s.n {
        return Err(Error::param(format!(
            "needs an (n, t+1, t) system with 2 <= t < n/2, got ({}, {}, {})",
            s.n, s.k, s.t
        )));
    }
    if let Some(v) = s.first_violation() {
        return Err(Error::param(format!("not a Steiner system: {v:?}")));
    }
    let n = s.n;
    check_arity(n)?;
    let blocks = s.point_sets();
    BooleanNetwork::new(
        (0..n)
            .map(|i| {
                let clauses = blocks
                    .iter()
                    .filter(|b| b.contains(&i))
                    .map(|b| b.iter().filter(|&&j| j != i).map(|&j| Literal::pos(j)).collect())
                    .collect();
                BooleanFunction::dnf(n, clauses)
            })
            .collect::<Result<_>>()?,
    )
}

/// Properties a construction promises.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Claims {
    pub graph: Option<InteractionGraph>,
    pub fp_count: Option<u64>,
    pub independence: Option<usize>,
    pub strongly_connected: Option<bool>,
    /// States that must be fixed points.
    pub contains: Vec<u64>,
    pub monotone: Option<bool>,
}

impl Claims {
    pub fn check(&self, f: &BooleanNetwork) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(m));
        let g = f.interaction_graph();
        if let Some(expected) = &self.graph {
            if &g != expected {
                return fail("interaction graph differs from the advertised one".into());
            }
        }
        if let Some(sc) = self.strongly_connected {
            if g.is_strongly_connected() != sc {
                return fail(format!("strong connectivity is {}, expected {sc}", !sc));
            }
        }
        if let Some(mono) = self.monotone {
            if f.functions().iter().all(BooleanFunction::is_monotone) != mono {
                return fail(format!("monotonicity differs from {mono}"));
            }
        }
        let fp = f.fixed_points();
        if let Some(c) = self.fp_count {
            if fp.len() as u64 != c {
                return fail(format!("{} fixed points, expected {c}", fp.len()));
            }
        }
        if let Some(&x) = self.contains.iter().find(|&&x| !fp.contains(x)) {
            return fail(format!("state {x:#b} is not a fixed point"));
        }
        if let Some(k) = self.independence {
            let i = fp.strength().unwrap_or(0);
            if i != k {
                return fail(format!("independence number {i}, expected {k}"));
            }
        }
        Ok(())
    }
}

pub fn linear_claims(g: &InteractionGraph) -> Claims {
    Claims { graph: Some(g.clone()), ..Claims::default() }
}

pub fn sk_claims(n: usize, k: usize) -> Result<Claims> {
    Ok(Claims {
        graph: Some(InteractionGraph::complete(n)?),
        fp_count: Some(sk_fixed_points(n, k)?.len() as u64),
        independence: Some(k),
        monotone: Some(false),
        ..Claims::default()
    })
}

/// The bridged clique only loses the parity of its own block, so the
/// independence number is `min(r - 1, s)`; this is `min(r, s) - 1` exactly
/// when `r <= s`.
pub fn clique_gluing_claims(r: usize, s: usize) -> Result<Claims> {
    Ok(Claims {
        graph: Some(clique_gluing_graph(r, s)?),
        fp_count: Some(1 << (r + s - 2)),
        independence: Some((r - 1).min(s)),
        ..Claims::default()
    })
}

pub fn windmill_claims(m: usize, k: usize) -> Result<Claims> {
    Ok(Claims {
        graph: Some(windmill_graph(m, k)?),
        fp_count: Some(1 << ((m - 2) * k + 1)),
        independence: Some(m - 1),
        strongly_connected: Some(true),
        ..Claims::default()
    })
}

pub fn clique_plus_loops_claims(n: usize, k: usize) -> Claims {
    Claims {
        fp_count: Some(1 << (n - 1)),
        independence: Some(k),
        ..Claims::default()
    }
}

pub fn add_loop_claims(base: &BooleanNetwork) -> Claims {
    Claims {
        fp_count: Some(2 * base.fixed_points().len() as u64),
        independence: Some(base.independence_number()),
        ..Claims::default()
    }
}

/// `i(g) = min(i(f̃), i(f) + 1)` whenever `FP(f)` is nonempty.
pub fn pivot_claims(f: &BooleanNetwork, f_tilde: &BooleanNetwork) -> Claims {
    let fp = f.fixed_points();
    let fpt = f_tilde.fixed_points();
    let independence = fp
        .strength()
        .map(|s| (s + 1).min(fpt.strength().unwrap_or(0)));
    Claims {
        fp_count: Some(fp.len() as u64 + fpt.len() as u64),
        independence,
        ..Claims::default()
    }
}

pub fn product_claims(fs: &[BooleanNetwork]) -> Claims {
    let fps: Vec<VectorSet> = fs.iter().map(BooleanNetwork::fixed_points).collect();
    Claims {
        fp_count: Some(fps.iter().map(|p| p.len() as u64).product()),
        independence: fps.iter().map(|p| p.strength().unwrap_or(0)).min(),
        ..Claims::default()
    }
}

pub fn strong_union_claims(fs: &[BooleanNetwork]) -> Claims {
    let mut c = product_claims(fs);
    if fs.len() > 1 && fs.iter().all(|f| f.interaction_graph().is_strongly_connected()) {
        c.strongly_connected = Some(true);
    }
    c
}

pub fn steiner_monotone_claims(s: &SteinerSystem) -> Result<Claims> {
    let all = if s.n == 64 { u64::MAX } else { (1u64 << s.n) - 1 };
    let mut contains = s.blocks().to_vec();
    contains.extend([0, all]);
    Ok(Claims {
        graph: Some(InteractionGraph::complete(s.n)?),
        independence: Some(s.t),
        contains,
        monotone: Some(true),
        ..Claims::default()
    })
}
