//! Rainbow cuts and certificates for rainbow disconnection colorings.
//!
//! If some rainbow u–v cut `R` exists, the coboundary of the component of `u`
//! in `G − R` is contained in `R`, so it is rainbow too. Searching over vertex
//! bipartitions is therefore complete.

use serde::{Deserialize, Serialize};

use crate::coloring::{EdgeColoring, EdgeColoringJson};
use crate::connectivity::CutCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn is_rainbow(coloring: &EdgeColoring, edges: &[usize]) -> bool {
    let mut seen = vec![false; coloring.num_colors() + 1];
    edges.iter().all(|&e| !std::mem::replace(&mut seen[coloring.color(e)], true))
}

/// A rainbow cut separating `u` from `v`, if one exists.
///
/// Candidates are tried in a fixed order: `{u}`, then `V − {v}`, then every
/// other bipartition by ascending bitmask over the remaining vertices.
pub fn exists_rainbow_cut(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<Option<CutCertificate>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    c.check_against(g)?;
    let n = g.vertex_count();
    let mut in_side = vec![false; n];
    in_side[u] = true;
    if c.is_proper_at(g, u) {
        return Ok(Some(CutCertificate::from_side(g, &in_side, (u, v))));
    }
    if c.is_proper_at(g, v) {
        let all_but_v: Vec<bool> = (0..n).map(|x| x != v).collect();
        return Ok(Some(CutCertificate::from_side(g, &all_but_v, (u, v))));
    }
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    if others.len() >= 63 {
        return Err(Error::InvalidParameter(format!("rainbow cut search on {n} vertices is out of reach")));
    }
    let mut seen = vec![0u64; c.num_colors() + 1];
    let mut stamp = 0u64;
    for mask in 0u64..1 << others.len() {
        for (i, &x) in others.iter().enumerate() {
            in_side[x] = mask >> i & 1 == 1;
        }
        stamp += 1;
        let rainbow = g.edges().iter().enumerate().all(|(e, &(a, b))| {
            if in_side[a] == in_side[b] {
                return true;
            }
            let col = c.color(e);
            if seen[col] == stamp {
                return false;
            }
            seen[col] = stamp;
            true
        });
        if rainbow {
            return Ok(Some(CutCertificate::from_side(g, &in_side, (u, v))));
        }
    }
    Ok(None)
}

/// Rainbow cuts for every unordered pair, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdCertificate {
    pub coloring: EdgeColoring,
    pub cuts: Vec<CutCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Certified(RdCertificate),
    /// First pair (lexicographically) with no rainbow cut.
    Failed { pair: (usize, usize) },
}

impl Verification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verification::Certified(_))
    }
}

pub fn verify_rd_coloring(g: &Graph, c: &EdgeColoring) -> Result<Verification> {
    g.require_connected("verify_rd_coloring")?;
    c.check_against(g)?;
    let n = g.vertex_count();
    let mut cuts = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            match exists_rainbow_cut(g, c, u, v)? {
                Some(cut) => cuts.push(cut),
                None => return Ok(Verification::Failed { pair: (u, v) }),
            }
        }
    }
    Ok(Verification::Certified(RdCertificate { coloring: c.clone(), cuts }))
}

/// `{"k", "edges", "cuts": [{"pair", "side", "edges"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdCertificateJson {
    pub k: usize,
    pub edges: Vec<[usize; 3]>,
    pub cuts: Vec<CutCertificate>,
}

impl RdCertificate {
    /// Re-checks every claim from scratch: each cut is the coboundary of its
    /// side, separates its pair, and is rainbow; and every pair is covered.
    pub fn recheck(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.coloring.check_against(g).is_err() {
            return false;
        }
        let mut covered = vec![false; n * n];
        for cut in &self.cuts {
            if !cut.is_valid(g) || !is_rainbow(&self.coloring, &cut.crossing_edges) {
                return false;
            }
            let (u, v) = cut.pair;
            covered[u.min(v) * n + u.max(v)] = true;
        }
        (0..n).all(|u| (u + 1..n).all(|v| covered[u * n + v]))
    }

    pub fn to_json(&self, g: &Graph) -> RdCertificateJson {
        let EdgeColoringJson { k, edges } = self.coloring.to_json(g);
        RdCertificateJson { k, edges, cuts: self.cuts.clone() }
    }

    pub fn from_json(g: &Graph, json: &RdCertificateJson) -> Result<Self> {
        let coloring = EdgeColoring::from_json(g, &EdgeColoringJson { k: json.k, edges: json.edges.clone() })?;
        Ok(RdCertificate { coloring, cuts: json.cuts.clone() })
    }
}
