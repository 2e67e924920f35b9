// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every assertion is an exact integer comparison; the only tolerances are
//! the wall-clock limits attached to each criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use boolnet::constructions::*;
use boolnet::cover::{can_exact_search, max_rows_bound};
use boolnet::designs::{fano, sqs8, sts};
use boolnet::{
    BooleanFunction, BooleanNetwork, Descriptor, InteractionGraph, Literal, SteinerSystem, Verdict,
    VectorSet,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: boolnet::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn even_weight(n: usize) -> VectorSet {
    VectorSet::new(n, (0..1u64 << n).filter(|x| x.count_ones() % 2 == 0).collect()).unwrap()
}

fn complete(n: usize) -> InteractionGraph {
    InteractionGraph::complete(n).unwrap()
}

fn min_ic(f: &BooleanNetwork) -> usize {
    f.functions().iter().map(BooleanFunction::ic_index).min().unwrap_or(0)
}

/// Node `i`, state `x` and input `j` with `x_j = 0`, `f_i(x) = 1` and
/// `f_i(x + e_j) = 0`.
fn non_monotone_witness(f: &BooleanNetwork) -> Option<(usize, u64, usize)> {
    for (i, g) in f.functions().iter().enumerate() {
        for x in 0..1u64 << f.n() {
            for j in (0..f.n()).filter(|j| x >> j & 1 == 0) {
                if g.table().get(x) && !g.table().get(x | 1 << j) {
                    return Some((i, x, j));
                }
            }
        }
    }
    None
}

/// `g_{π(i)}(x) = f_i(x ∘ π)`: the same network with variable `i` renamed
/// to `perm[i]`.
fn permute(f: &BooleanNetwork, perm: &[usize]) -> BooleanNetwork {
    let n = f.n();
    let mut out: Vec<Option<BooleanFunction>> = vec![None; n];
    for (i, g) in f.functions().iter().enumerate() {
        out[perm[i]] = Some(g.remap(n, perm).unwrap());
    }
    BooleanNetwork::new(out.into_iter().map(Option::unwrap).collect()).unwrap()
}

fn shuffled(rng: &mut impl Rng, f: &BooleanNetwork) -> BooleanNetwork {
    let mut perm: Vec<usize> = (0..f.n()).collect();
    perm.shuffle(rng);
    permute(f, &perm)
}

fn steiner_check(s: &SteinerSystem, expected: usize) -> Result<(BooleanNetwork, usize), String> {
    let f = lib(steiner_monotone(s))?;
    ensure!(f.functions().iter().all(BooleanFunction::is_monotone), "non-monotone node");
    ensure!(f.interaction_graph() == complete(s.n), "graph is not loopless K_{}", s.n);
    let i = f.independence_number();
    ensure!(i == expected, "independence number {i}, expected {expected}");
    let fp = f.fixed_points();
    let all = (1u64 << s.n) - 1;
    let missing = s.blocks().iter().chain([&0, &all]).find(|&&b| !fp.contains(b));
    ensure!(missing.is_none(), "state {:#b} not fixed", missing.unwrap());
    let surplus = fp.len() - s.blocks().len() - 2;
    Ok((f, surplus))
}

fn c01() -> Outcome {
    let s = fano();
    let (f, surplus) = steiner_check(&s, 2)?;
    let expected = Descriptor::Dnf(vec![
        vec![Literal::pos(1), Literal::pos(3)],
        vec![Literal::pos(4), Literal::pos(5)],
        vec![Literal::pos(2), Literal::pos(6)],
    ]);
    ensure!(f.function(0).descriptor() == &expected, "f_1 = {:?}", f.function(0).descriptor());
    let ics: Vec<usize> = f.functions().iter().map(BooleanFunction::ic_index).collect();
    ensure!(ics.iter().all(|&c| c == 2), "ic indices {ics:?}");
    Ok(format!("f_1 = (x2 x4) | (x5 x6) | (x3 x7), i = 2, IC = 2 everywhere, surplus fixed points {surplus}"))
}

fn c02() -> Outcome {
    let (f, surplus) = steiner_check(&sqs8(), 3)?;
    Ok(format!("i = 3 on K_8, {} fixed points, surplus {surplus}", f.fixed_points().len()))
}

fn c03() -> Outcome {
    for n in 3..=12 {
        let f = lib(linear_network(&complete(n)))?;
        let fp = f.fixed_points();
        ensure!(fp == even_weight(n), "n={n}: fixed points differ from even-weight vectors");
        let i = f.independence_number();
        ensure!(i == n - 1, "n={n}: independence number {i}");
    }
    Ok("n = 3..12: FP = even-weight vectors, i = n - 1".into())
}

fn c04() -> Outcome {
    let mut count = 0;
    for n in 4..=9 {
        for k in 1..=n - 2 {
            let f = lib(sk_network(n, k))?;
            let i = f.independence_number();
            ensure!(i == k, "(n,k)=({n},{k}): independence number {i}");
            ensure!(f.interaction_graph() == complete(n), "(n,k)=({n},{k}): graph is not K_n");
            ensure!(f.fixed_points() == lib(sk_fixed_points(n, k))?, "(n,k)=({n},{k}): FP set");
            ensure!(non_monotone_witness(&f).is_some(), "(n,k)=({n},{k}): monotone");
            count += 1;
        }
    }
    Ok(format!("{count} parameter pairs, each with a non-monotone witness"))
}

fn c05() -> Outcome {
    for (m, k) in [(3, 3), (4, 3), (5, 3), (3, 5)] {
        let (g, f) = lib(windmill(m, k))?;
        let fp = f.fixed_points().len() as u64;
        ensure!(fp == 1 << ((m - 2) * k + 1), "(m,k)=({m},{k}): {fp} fixed points");
        let i = f.independence_number();
        ensure!(i == m - 1, "(m,k)=({m},{k}): independence number {i}");
        ensure!(g.is_strongly_connected(), "(m,k)=({m},{k}): not strongly connected");
        ensure!(f.interaction_graph() == g, "(m,k)=({m},{k}): graph mismatch");
    }
    Ok("(3,3) (4,3) (5,3) (3,5)".into())
}

fn c06() -> Outcome {
    for (r, s) in [(2, 2), (3, 3), (3, 4), (4, 4), (4, 5)] {
        let (g, f) = lib(clique_gluing(r, s))?;
        ensure!(f.interaction_graph() == g, "(r,s)=({r},{s}): graph mismatch");
        let fp = f.fixed_points().len() as u64;
        ensure!(fp == 1 << (r + s - 2), "(r,s)=({r},{s}): {fp} fixed points");
        let i = f.independence_number();
        ensure!(i == r.min(s) - 1, "(r,s)=({r},{s}): independence number {i}");
    }
    Ok("(2,2) (3,3) (3,4) (4,4) (4,5)".into())
}

fn c07() -> Outcome {
    for (n, k, want) in [(3, 2, 4), (4, 2, 5)] {
        let got = lib(can_exact_search(n, k, 8))?;
        ensure!(got == Some(want), "CAN({n};{k}) search gave {got:?}");
        let table = boolnet::can::can_lookup(n, k).unwrap();
        ensure!(table.lo == want as u64 && table.is_exact(), "table entry {table:?}");
    }
    Ok("CAN(3;2) = 4, CAN(4;2) = 5, both matching the table".into())
}

fn c08() -> Outcome {
    let b = lib(VectorSet::from_text("0000\n1011\n0111\n1101\n1110\n"))?;
    let s = b.strength();
    ensure!(s == Some(2), "strength {s:?}");
    Ok("strength 2".into())
}

fn c09() -> Outcome {
    let mut rng = common::rng(0x5eed_0009);
    let mut hist = [0usize; 9];
    for t in 0..500 {
        let n = rng.gen_range(2..=8);
        let f = common::random_loopless(&mut rng, n);
        let i = f.independence_number();
        let c = min_ic(&f);
        ensure!(c >= i, "sample {t}: i = {i} but min IC = {c}\n{}", f.to_json());
        hist[i] += 1;
    }
    Ok(format!("500 networks, 0 violations, independence histogram {:?}", &hist[..8]))
}

fn c10() -> Outcome {
    let mut rng = common::rng(0x5eed_0010);
    let mut tight = 0;
    for t in 0..500 {
        let n = rng.gen_range(1..=10);
        let f = if rng.gen_bool(0.5) {
            common::random_sparse(&mut rng, n)
        } else {
            common::random_loopless(&mut rng, n.max(2))
        };
        let r = lib(f.check_feedback_bound())?;
        ensure!(r.holds, "sample {t}: {} fixed points, tau = {}", r.fp_count, r.tau);
        tight += (r.fp_count == 1 << r.tau) as usize;
    }
    Ok(format!("500 networks, 0 violations, {tight} attain 2^tau"))
}

fn unate_ok(f: &BooleanFunction) -> Result<(), String> {
    let n = f.arity();
    let (ic, xi) = (f.ic_index(), lib(f.xi_value())?);
    ensure!(ic <= n.div_ceil(2), "arity {n} table {}: IC = {ic}", f.table().to_hex());
    ensure!(xi >= n / 2, "arity {n} table {}: xi = {xi}", f.table().to_hex());
    Ok(())
}

fn c11() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=4usize {
        for bits in 0..1u64 << (1 << n) {
            let f = lib(BooleanFunction::from_fn(n, |x| bits >> x & 1 == 1))?;
            if f.is_unate() {
                unate_ok(&f)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = common::rng(0x5eed_0011);
    for _ in 0..1000 {
        let n = rng.gen_range(5..=6);
        let f = common::random_unate(&mut rng, n);
        ensure!(f.is_unate(), "sampler produced a non-unate function");
        unate_ok(&f)?;
    }
    let maj3 = lib(BooleanFunction::majority(3, &[0, 1, 2]))?;
    let xi = lib(maj3.xi_value())?;
    ensure!(xi == 1, "xi(Maj_3) = {xi}");
    Ok(format!(
        "{exhaustive} unate functions of arity <= 4 and 1000 samples at arity 5-6, 0 violations; xi(Maj_3) = 1 = floor(3/2) < 3/2"
    ))
}

fn c12() -> Outcome {
    let mut above_half = 0usize;
    for s in [fano(), sqs8(), lib(sts(9))?, lib(sts(13))?] {
        let f = lib(steiner_monotone(&s))?;
        let i = f.independence_number();
        ensure!(i <= s.n.div_ceil(2), "Steiner n={}: i = {i}", s.n);
    }
    let mut rng = common::rng(0x5eed_0012);
    let mut hist = [0usize; 9];
    let steiner = [fano(), sqs8(), lib(sts(9))?];
    for t in 0..230 {
        let f = if t < 200 {
            let n = rng.gen_range(2..=8);
            common::random_loopless_monotone(&mut rng, n)
        } else {
            let s = &steiner[t % steiner.len()];
            shuffled(&mut rng, &lib(steiner_monotone(s))?)
        };
        let n = f.n();
        ensure!(f.functions().iter().all(BooleanFunction::is_monotone), "sampler not monotone");
        let i = f.independence_number();
        ensure!(i <= n.div_ceil(2), "sample {t}: n = {n}, i = {i}\n{}", f.to_json());
        if n % 2 == 1 && i == n.div_ceil(2) {
            above_half += 1;
        }
        hist[i] += 1;
    }
    Ok(format!(
        "200 random and 30 relabeled Steiner networks, 0 violations, independence histogram {:?}, samples with odd n reaching ceil(n/2) > n/2: {above_half}",
        &hist[..5]
    ))
}

fn c13() -> Outcome {
    let mut rng = common::rng(0x5eed_0013);
    for t in 0..50 {
        let n = rng.gen_range(2..=7);
        let f = common::random_loopless(&mut rng, n);
        let g = lib(add_loop(&f))?;
        let (fi, gi) = (f.independence_number(), g.independence_number());
        ensure!(fi == gi, "add_loop sample {t}: {fi} -> {gi}");
        let (a, b) = (f.fixed_points().len(), g.fixed_points().len());
        ensure!(b == 2 * a, "add_loop sample {t}: {a} -> {b} fixed points");
    }

    let (mut pairs, mut skipped) = (0, 0);
    while pairs < 20 {
        let na = rng.gen_range(2..=6);
        let nb = rng.gen_range(2..=12 - na);
        let parts = [common::random_loopless(&mut rng, na), common::random_loopless(&mut rng, nb)];
        let union = match strong_union(&parts) {
            Ok(u) => u,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let ind: Vec<usize> = parts.iter().map(BooleanNetwork::independence_number).collect();
        let cnt: Vec<usize> = parts.iter().map(|f| f.fixed_points().len()).collect();
        let want = (ind[0].min(ind[1]), cnt[0] * cnt[1]);
        let prod = lib(disjoint_product(&parts))?;
        for (name, h) in [("product", &prod), ("strong union", &union)] {
            let got = (h.independence_number(), h.fixed_points().len());
            ensure!(got == want, "{name} of i={ind:?} |FP|={cnt:?}: got {got:?}, want {want:?}");
        }
        if parts.iter().all(|f| f.interaction_graph().is_strongly_connected()) {
            ensure!(union.interaction_graph().is_strongly_connected(), "union lost strong connectivity");
        }
        pairs += 1;
    }

    let mut pivots = 0;
    while pivots < 20 {
        let m = rng.gen_range(4..=8);
        let k = rng.gen_range(2..=m - 2);
        let f = match rng.gen_range(0..2) {
            0 => lib(sk_network(m, k - 1))?,
            _ => lib(clique_plus_loops(m, k - 1))?,
        };
        let ft = match rng.gen_range(0..3) {
            0 => lib(sk_network(m, k))?,
            1 => lib(clique_plus_loops(m, k))?,
            _ => lib(linear_network(&complete(m)))?,
        };
        let (f, ft) = (shuffled(&mut rng, &f), shuffled(&mut rng, &ft));
        let (fi, fti) = (f.independence_number(), ft.independence_number());
        if fi + 1 != k || fti < k {
            continue;
        }
        let g = lib(extend_with_pivot(&f, &ft, false))?;
        let gi = g.independence_number();
        ensure!(gi == k, "pivot m={m}: i(f)={fi}, i(f~)={fti}, i(g)={gi}, want {k}");
        pivots += 1;
    }
    Ok(format!(
        "add_loop 50/50, product and strong union 20/20 ({skipped} pairs skipped for the zero-state condition), pivot 20/20"
    ))
}

fn c14() -> Outcome {
    let mut nets = vec![];
    for n in 3..=12 {
        nets.push(lib(linear_network(&complete(n)))?);
    }
    for n in 4..=9 {
        for k in 1..=n - 2 {
            nets.push(lib(sk_network(n, k))?);
        }
    }
    for (m, k) in [(3, 3), (4, 3), (5, 3), (3, 5)] {
        nets.push(lib(windmill(m, k))?.1);
    }
    for (r, s) in [(2, 2), (3, 3), (3, 4), (4, 4), (4, 5)] {
        nets.push(lib(clique_gluing(r, s))?.1);
    }
    let mut checked = 0;
    for f in &nets {
        let (n, k) = (f.n(), f.independence_number());
        if k >= 1 && k < n {
            let fp = f.fixed_points().len() as u64;
            let bound = lib(max_rows_bound(n, k))?;
            ensure!(fp <= bound, "n={n} k={k}: {fp} > {bound}");
            checked += 1;
        }
    }
    for (n, k) in [(5, 2), (8, 3)] {
        let f = lib(clique_plus_loops(n, k))?;
        let fp = f.fixed_points().len();
        ensure!(fp == 1 << (n - 1), "clique_plus_loops({n},{k}): {fp} fixed points");
        ensure!(f.independence_number() == k, "clique_plus_loops({n},{k}): wrong strength");
    }
    Ok(format!("{checked} networks within 2^(n-1)(2-2^-k); clique_plus_loops attains 2^(n-1)"))
}

fn c15() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let screen = |name: &str, g: InteractionGraph, k: usize| {
        let path = dir.path().join(name);
        std::fs::write(&path, g.to_dot()).map_err(|e| e.to_string())?;
        let g = boolnet_cli::load_graph(&path).map_err(|e| e.to_string())?;
        boolnet_cli::admissible(&g, k).map_err(|e| e.to_string())
    };
    let r = screen("k42.dot", lib(InteractionGraph::complete_bipartite(4, 2))?, 2)?;
    ensure!(r.verdict == Verdict::Rejected, "K_(4,2) at k=2: {:?}", r.reasons);
    for k in [2, 3] {
        let r = screen("kk.dot", lib(InteractionGraph::complete_bipartite(k * k, k))?, k)?;
        ensure!(r.verdict == Verdict::Rejected, "K_({},{k}) at k={k}: inconclusive", k * k);
        ensure!(
            r.reasons.iter().any(|s| s.starts_with("recursive bound")),
            "K_({},{k}): no recursive-bound reason in {:?}",
            k * k,
            r.reasons
        );
        ensure!(r.tau == k && r.min_indegree == k, "K_({},{k}): tau {} indegree {}", k * k, r.tau, r.min_indegree);
    }
    for n in 3..=10 {
        let r = screen("kn.dot", complete(n), n - 1)?;
        ensure!(r.verdict == Verdict::Inconclusive, "K_{n} at k={}: {:?}", n - 1, r.reasons);
    }
    Ok("K_(4,2) and K_(9,3) rejected by the recursive bound; K_n at k = n-1 inconclusive for n = 3..10".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "Fano pipeline", limit: secs(1), run: c01 },
    Criterion { id: 2, name: "SQS(8)", limit: secs(2), run: c02 },
    Criterion { id: 3, name: "linear complete graphs", limit: secs(30), run: c03 },
    Criterion { id: 4, name: "S_k / T_k networks", limit: secs(60), run: c04 },
    Criterion { id: 5, name: "windmills", limit: secs(120), run: c05 },
    Criterion { id: 6, name: "clique gluing", limit: secs(30), run: c06 },
    Criterion { id: 7, name: "CAN oracle", limit: secs(60), run: c07 },
    Criterion { id: 8, name: "matrix B", limit: secs(1), run: c08 },
    Criterion { id: 9, name: "necessary condition on IC", limit: secs(300), run: c09 },
    Criterion { id: 10, name: "feedback bound", limit: secs(300), run: c10 },
    Criterion { id: 11, name: "unate bounds", limit: secs(300), run: c11 },
    Criterion { id: 12, name: "monotone cap", limit: secs(300), run: c12 },
    Criterion { id: 13, name: "composition laws", limit: secs(300), run: c13 },
    Criterion { id: 14, name: "fixed-point upper bound", limit: secs(300), run: c14 },
    Criterion { id: 15, name: "admissibility screening", limit: secs(60), run: c15 },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.limit => Err(format!("took {elapsed:.2?}, limit {:?}", c.limit)),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += outcome.is_err() as usize;
        println!(
            "{tag} criterion {:2} {:<26} {:>9.3}s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
