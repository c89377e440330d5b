//! Local and global edge connectivity, minimum cuts and the shrinking operation.

mod shrink;

pub use shrink::{shrink, shrink_tree, shrinking_decomposition, Shrunk, ShrinkPiece, ShrinkStep, ShrinkTree, VertexOrigin};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex set `side` with its coboundary, witnessing that `pair.0 ∈ side` is
/// separated from `pair.1 ∉ side`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub pair: (usize, usize),
    pub side: Vec<usize>,
    #[serde(rename = "edges")]
    pub crossing_edges: Vec<usize>,
}

impl CutCertificate {
    /// Builds the certificate for `δ(side)`; `in_side` is indexed by vertex.
    pub fn from_side(g: &Graph, in_side: &[bool], pair: (usize, usize)) -> Self {
        let side = (0..g.vertex_count()).filter(|&v| in_side[v]).collect();
        let crossing_edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| in_side[a] != in_side[b])
            .map(|(e, _)| e)
            .collect();
        CutCertificate { pair, side, crossing_edges }
    }

    pub fn size(&self) -> usize {
        self.crossing_edges.len()
    }

    /// Checks that the edge list is exactly `δ(side)` and that deleting it separates the pair.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let (u, v) = self.pair;
        if u >= n || v >= n || u == v || self.side.iter().any(|&x| x >= n) {
            return false;
        }
        let mut in_side = vec![false; n];
        for &x in &self.side {
            in_side[x] = true;
        }
        if !in_side[u] || in_side[v] {
            return false;
        }
        let mut expected: Vec<usize> =
            (0..g.edge_count()).filter(|&e| in_side[g.endpoints(e).0] != in_side[g.endpoints(e).1]).collect();
        expected.sort_unstable();
        let mut got = self.crossing_edges.clone();
        got.sort_unstable();
        if expected != got {
            return false;
        }
        let mut removed = vec![false; g.edge_count()];
        for &e in &got {
            removed[e] = true;
        }
        !g.connected_avoiding(u, v, &removed)
    }
}

/// Unit-capacity max flow between `s` and `t`; returns the flow value and the
/// source side of the final residual network.
fn max_flow(g: &Graph, s: usize, t: usize) -> (usize, Vec<bool>) {
    let n = g.vertex_count();
    // flow[e] > 0 means one unit from endpoints(e).0 to endpoints(e).1
    let mut flow = vec![0i8; g.edge_count()];
    let residual = |flow: &[i8], e: usize, from: usize| -> bool {
        if g.endpoints(e).0 == from {
            flow[e] < 1
        } else {
            flow[e] > -1
        }
    };
    let mut value = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in g.incident(x) {
                if !seen[y] && residual(&flow, e, x) {
                    seen[y] = true;
                    parent[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return (value, seen);
        }
        let mut x = t;
        while x != s {
            let e = parent[x];
            let y = g.opposite(e, x);
            flow[e] += if g.endpoints(e).0 == y { 1 } else { -1 };
            x = y;
        }
        value += 1;
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// λ(u, v): the maximum number of pairwise edge-disjoint u–v paths.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize> {
    check_pair(g, u, v)?;
    Ok(max_flow(g, u, v).0)
}

/// A minimum u–v cut; the side is the set reachable from `u` in the final residual network.
pub fn min_edge_cut(g: &Graph, u: usize, v: usize) -> Result<CutCertificate> {
    check_pair(g, u, v)?;
    let (_, side) = max_flow(g, u, v);
    Ok(CutCertificate::from_side(g, &side, (u, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperConnectivity {
    pub value: usize,
    /// Lexicographically first pair attaining the maximum.
    pub pair: (usize, usize),
}

/// λ⁺(G) = max over pairs of λ(u, v).
pub fn upper_edge_connectivity(g: &Graph) -> Result<UpperConnectivity> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter("upper edge connectivity needs at least two vertices".into()));
    }
    g.require_connected("upper_edge_connectivity")?;
    let n = g.vertex_count();
    let mut best = UpperConnectivity { value: 0, pair: (0, 1) };
    for u in 0..n {
        // λ(u, v) ≤ min degree of the two, so skip pairs that cannot improve
        if g.degree(u) <= best.value {
            continue;
        }
        for v in u + 1..n {
            if g.degree(v) <= best.value {
                continue;
            }
            let value = max_flow(g, u, v).0;
            if value > best.value {
                best = UpperConnectivity { value, pair: (u, v) };
            }
        }
    }
    Ok(best)
}

/// λ(G), the global edge connectivity; 0 for disconnected graphs.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    (1..n).map(|v| max_flow(g, 0, v).0).min().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SigmaBound {
    pub sigma: usize,
    /// True when `|E| > (k+1)(n−1)/2 − σ_k/2`, which forces λ⁺ ≥ k+1.
    pub asserts_lambda_plus_above_k: bool,
}

/// σ_k(G) = Σ_{d(x) ≤ k} (k − d(x)) and the edge-density test built on it.
pub fn sigma_k_bound(g: &Graph, k: usize) -> Result<SigmaBound> {
    let n = g.vertex_count();
    if k < 1 || n < k + 2 {
        return Err(Error::InvalidParameter(format!("need n >= k + 2 >= 3, got n = {n}, k = {k}")));
    }
    let sigma: usize = (0..n).map(|x| g.degree(x)).filter(|&d| d <= k).map(|d| k - d).sum();
    Ok(SigmaBound { sigma, asserts_lambda_plus_above_k: 2 * g.edge_count() + sigma > (k + 1) * (n - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    /// Minimum |δ(S)| over every S with u ∈ S, v ∉ S.
    fn brute_lambda(g: &Graph, u: usize, v: usize) -> usize {
        let n = g.vertex_count();
        let mut best = usize::MAX;
        for mask in 0u32..1 << n {
            if mask >> u & 1 == 0 || mask >> v & 1 == 1 {
                continue;
            }
            let cut = g.edges().iter().filter(|&&(a, b)| (mask >> a & 1) != (mask >> b & 1)).count();
            best = best.min(cut);
        }
        best
    }

    #[test]
    fn local_connectivity_examples() {
        let p = Family::Petersen.build().unwrap();
        for u in 0..10 {
            for v in u + 1..10 {
                assert_eq!(local_edge_connectivity(&p, u, v).unwrap(), 3);
            }
        }
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(local_edge_connectivity(&p4, 0, 3).unwrap(), 1);
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(brute_lambda(&k5, 0, 4), 4);
        assert_eq!(local_edge_connectivity(&k5, 0, 4).unwrap(), 4);
        assert_eq!(local_edge_connectivity(&k5, 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn upper_connectivity_examples() {
        assert_eq!(upper_edge_connectivity(&Family::Star(6).build().unwrap()).unwrap().value, 1);
        assert_eq!(upper_edge_connectivity(&Family::Petersen.build().unwrap()).unwrap().value, 3);
        let w5 = Family::Wheel(5).build().unwrap();
        let up = upper_edge_connectivity(&w5).unwrap();
        assert_eq!(up.value, 3);
        assert_eq!(brute_lambda(&w5, 0, 1), 3);
        assert_eq!(up.pair, (0, 1));
    }

    #[test]
    fn min_cut_examples() {
        let p3 = Graph::new(3, vec![(0, 2), (2, 1)]).unwrap();
        let cut = min_edge_cut(&p3, 0, 1).unwrap();
        assert_eq!(cut.side, vec![0]);
        assert_eq!(cut.crossing_edges, vec![0]);

        let c4 = Family::Cycle(4).build().unwrap();
        let cut = min_edge_cut(&c4, 0, 1).unwrap();
        assert_eq!(cut.size(), 2);
        assert!(cut.is_valid(&c4));

        let k4 = Family::Complete(4).build().unwrap();
        let cut = min_edge_cut(&k4, 0, 1).unwrap();
        assert_eq!(cut.size(), 3);
        assert!(cut.is_valid(&k4));
        assert_eq!(brute_lambda(&k4, 0, 1), 3);
    }

    #[test]
    fn multigraph_flow_counts_parallels() {
        let g = Graph::new(3, vec![(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(local_edge_connectivity(&g, 0, 1).unwrap(), 3);
        assert_eq!(local_edge_connectivity(&g, 0, 2).unwrap(), 1);
    }

    #[test]
    fn sigma_examples() {
        let k5 = Family::Complete(5).build().unwrap();
        let s = sigma_k_bound(&k5, 3).unwrap();
        assert_eq!(s, SigmaBound { sigma: 0, asserts_lambda_plus_above_k: true });
        assert_eq!(upper_edge_connectivity(&k5).unwrap().value, 4);

        // endpoints have degree exactly k = 1 and contribute 0; 6 > 6 fails
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(sigma_k_bound(&p4, 1).unwrap(), SigmaBound { sigma: 0, asserts_lambda_plus_above_k: false });

        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(sigma_k_bound(&c5, 1).unwrap(), SigmaBound { sigma: 0, asserts_lambda_plus_above_k: true });
        assert_eq!(upper_edge_connectivity(&c5).unwrap().value, 2);

        let s4 = Family::Star(4).build().unwrap();
        assert_eq!(sigma_k_bound(&s4, 2).unwrap().sigma, 3);
        assert!(sigma_k_bound(&s4, 3).is_err());
    }
}
