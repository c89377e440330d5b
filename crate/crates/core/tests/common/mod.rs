//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rdcore::io::parse_graph6_lines;
use rdcore::Graph;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

pub fn corpus(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"));
    parse_graph6_lines(&text).unwrap_or_else(|(line, e)| panic!("{name}:{line}: {e}"))
}

/// Every connected graph on `lo..=hi` vertices, one per isomorphism class.
pub fn connected_up_to(lo: usize, hi: usize) -> Vec<Graph> {
    (lo.max(2)..=hi).flat_map(|n| corpus(&format!("connected_n{n}.g6"))).collect()
}

/// Connected labelled graphs on `n` vertices from a seeded edge-probability sampler.
pub fn random_connected(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p: f64 = rng.gen_range(0.25..0.9);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Random connected loopless multigraph on at most `max_n` vertices with Δ ≤ `max_delta`.
pub fn random_multigraph(rng: &mut StdRng, max_n: usize, max_delta: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        // a random spanning tree first, then extra (possibly parallel) edges
        for v in 1..n {
            let u = rng.gen_range(0..v);
            if deg[u] < max_delta {
                edges.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        for _ in 0..rng.gen_range(0..3 * n) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && deg[a] < max_delta && deg[b] < max_delta {
                edges.push((a.min(b), a.max(b)));
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// For every pair u < v, the edge masks of all cuts δ(S) with u ∈ S, v ∉ S.
fn pair_cuts(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut cuts: Vec<u64> = (0u32..1 << n)
                .filter(|s| s >> u & 1 == 1 && s >> v & 1 == 0)
                .map(|s| {
                    g.edges()
                        .iter()
                        .enumerate()
                        .filter(|(_, &(a, b))| (s >> a & 1) != (s >> b & 1))
                        .fold(0u64, |acc, (e, _)| acc | 1 << e)
                })
                .collect();
            cuts.sort_unstable();
            cuts.dedup();
            out.push(cuts);
        }
    }
    out
}

fn rainbow_disconnects(cuts: &[Vec<u64>], classes: &[u64]) -> bool {
    cuts.iter().all(|pair| pair.iter().any(|&cut| classes.iter().all(|&cls| (cut & cls).count_ones() <= 1)))
}

/// rd(G) by trying every coloring up to color renaming for k = 1, 2, … and checking
/// every vertex bipartition directly.
pub fn brute_force_rd(g: &Graph) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    assert!(m <= 63);
    let cuts = pair_cuts(g);
    for k in 1..=m {
        // restricted growth strings: edge e takes a color ≤ 1 + the largest so far
        let mut color = vec![0usize; m];
        let mut classes = vec![0u64; k];
        if search(0, 0, k, &mut color, &mut classes, &cuts) {
            return k;
        }
    }
    unreachable!("m colors always suffice")
}

fn search(e: usize, used: usize, k: usize, color: &mut [usize], classes: &mut [u64], cuts: &[Vec<u64>]) -> bool {
    if e == color.len() {
        return rainbow_disconnects(cuts, classes);
    }
    for c in 0..k.min(used + 1) {
        color[e] = c;
        classes[c] |= 1 << e;
        let found = search(e + 1, used.max(c + 1), k, color, classes, cuts);
        classes[c] &= !(1 << e);
        if found {
            return true;
        }
    }
    false
}

/// min |δ(S)| over S ∋ u, S ∌ v.
pub fn brute_force_lambda(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|s| s >> u & 1 == 1 && s >> v & 1 == 0)
        .map(|s| g.edges().iter().filter(|&&(a, b)| (s >> a & 1) != (s >> b & 1)).count())
        .min()
        .unwrap()
}
