//! Structural characterizations of small rd values, the complement-sum test,
//! the conjecture scanner and the odd-regular equivalence harness.

mod scan;

pub use scan::{conjecture_scan, Claim, ClaimOutcome, ScanMode, ScanOptions, ScanRecord, ScanReport, ScanStatus, ScanSummary, Violation};

use serde::Serialize;

use crate::blocks::blocks;
use crate::coloring::{chromatic_index_exact, SearchBudget};
use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{rd_exact, Bracket, RdBudget};

fn require_nontrivial(g: &Graph, op: &'static str) -> Result<()> {
    g.require_connected(op)?;
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(format!("{op} needs at least two vertices")));
    }
    Ok(())
}

/// rd(G) = 1 exactly for trees.
pub fn characterize_rd_1(g: &Graph) -> Result<bool> {
    require_nontrivial(g, "characterize_rd_1")?;
    Ok(g.edge_count() + 1 == g.vertex_count())
}

/// rd(G) = 2 exactly when every block is an edge or a cycle and some block is a cycle.
pub fn characterize_rd_2(g: &Graph) -> Result<bool> {
    require_nontrivial(g, "characterize_rd_2")?;
    g.require_simple("characterize_rd_2")?;
    let mut has_cycle = false;
    for block in blocks(g)? {
        let b = &block.graph;
        match (b.vertex_count(), b.edge_count()) {
            (2, 1) => {}
            (n, m) if n >= 3 && n == m => has_cycle = true,
            _ => return Ok(false),
        }
    }
    Ok(has_cycle)
}

/// rd(G) = n − 1 exactly when at least two vertices have degree n − 1.
pub fn characterize_rd_n_minus_1(g: &Graph) -> Result<bool> {
    require_nontrivial(g, "characterize_rd_n_minus_1")?;
    g.require_simple("characterize_rd_n_minus_1")?;
    let n = g.vertex_count();
    Ok((0..n).filter(|&v| g.degree(v) == n - 1).count() >= 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NMinus2Condition {
    I,
    Ii,
    Iii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NMinus2 {
    pub holds: bool,
    /// The first condition that holds.
    pub condition: Option<NMinus2Condition>,
}

fn condition_ii(g: &Graph, top: &[usize]) -> bool {
    top.iter().enumerate().any(|(i, &u)| top[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
}

/// Condition (iii): Δ = n − 2, the degree-(n−2) vertices are pairwise adjacent, and
/// for some such pair u, v there is a vertex outside N(u) ∪ N(v), or there are
/// x ∈ N(u) − N[v] and y ∈ N(v) − N[u] in one component of G − {u, v}.
fn condition_iii(g: &Graph, top: &[usize]) -> bool {
    let n = g.vertex_count();
    if condition_ii(g, top) {
        return false;
    }
    for (i, &u) in top.iter().enumerate() {
        for &v in &top[i + 1..] {
            let outside = |z: usize| z != u && z != v && !g.has_edge(z, u) && !g.has_edge(z, v);
            if (0..n).any(outside) {
                return true;
            }
            let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
            let label = g.induced(&others).graph.components().0;
            let comp = |w: usize| label[others.iter().position(|&o| o == w).expect("w is outside {u, v}")];
            let xs: Vec<usize> = others.iter().copied().filter(|&x| g.has_edge(x, u) && !g.has_edge(x, v)).collect();
            let ys: Vec<usize> = others.iter().copied().filter(|&y| g.has_edge(y, v) && !g.has_edge(y, u)).collect();
            if xs.iter().any(|&x| ys.iter().any(|&y| x != y && comp(x) == comp(y))) {
                return true;
            }
        }
    }
    false
}

/// The three alternative conditions for rd(G) = n − 2, evaluated in order.
pub fn characterize_rd_n_minus_2(g: &Graph) -> Result<NMinus2> {
    g.require_connected("characterize_rd_n_minus_2")?;
    g.require_simple("characterize_rd_n_minus_2")?;
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::InvalidParameter(format!("characterize_rd_n_minus_2 needs n >= 4, got {n}")));
    }
    let count = |d: usize| (0..n).filter(|&v| g.degree(v) == d).count();
    let top: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    let delta = g.max_degree();
    let condition = if count(n - 1) == 1 && !top.is_empty() {
        Some(NMinus2Condition::I)
    } else if delta == n - 2 && condition_ii(g, &top) {
        Some(NMinus2Condition::Ii)
    } else if delta == n - 2 && condition_iii(g, &top) {
        Some(NMinus2Condition::Iii)
    } else {
        None
    };
    Ok(NMinus2 { holds: condition.is_some(), condition })
}

/// The extremal complement-sum characterization for one of G, Ḡ: condition (ii)
/// or (iii) above, exactly two vertices u, v of degree n − 2, and at least two
/// degree-2 vertices adjacent to both u and v.
fn extremal_side(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    let nm2 = characterize_rd_n_minus_2(g)?;
    if !matches!(nm2.condition, Some(NMinus2Condition::Ii | NMinus2Condition::Iii)) {
        return Ok(false);
    }
    let top: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    let [u, v] = top[..] else { return Ok(false) };
    let common_degree_two = (0..n)
        .filter(|&w| w != u && w != v && g.degree(w) == 2 && g.has_edge(w, u) && g.has_edge(w, v))
        .count();
    Ok(common_degree_two >= 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgRecord {
    pub n: usize,
    pub rd: Bracket,
    pub rd_complement: Bracket,
    /// `None` when a budget left either value open.
    pub sum: Option<usize>,
    pub lower_holds: Option<bool>,
    pub upper_holds: Option<bool>,
    /// Whether the sum equals 2n − 5.
    pub extremal: Option<bool>,
    /// Whether G or Ḡ satisfies the extremal characterization.
    pub characterized: bool,
}

impl NgRecord {
    pub fn violated(&self) -> bool {
        self.lower_holds == Some(false)
            || self.upper_holds == Some(false)
            || self.extremal.is_some_and(|e| e != self.characterized)
    }
}

pub fn nordhaus_gaddum_check(g: &Graph, budget: &RdBudget) -> Result<NgRecord> {
    g.require_connected("nordhaus_gaddum_check")?;
    let h = g.complement()?;
    h.require_connected("nordhaus_gaddum_check (complement)")?;
    let n = g.vertex_count();
    let rd = rd_exact(g, budget)?;
    let rd_bar = rd_exact(&h, budget)?;
    let sum = rd.exact().zip(rd_bar.exact()).map(|(a, b)| a + b);
    let characterized = n >= 4 && (extremal_side(g)? || extremal_side(&h)?);
    Ok(NgRecord {
        n,
        rd: rd.bracket().into(),
        rd_complement: rd_bar.bracket().into(),
        sum,
        lower_holds: sum.map(|s| s + 2 >= n),
        upper_holds: sum.map(|s| s + 5 <= 2 * n),
        extremal: sum.map(|s| s + 5 == 2 * n),
        characterized,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddRegularRecord {
    pub k: usize,
    pub chromatic_index: Bracket,
    pub rd: Bracket,
    /// χ′ = k ⟺ rd = k; `None` when undecided.
    pub equivalence_holds: Option<bool>,
    /// k ≤ rd ≤ k + 1.
    pub bracket_holds: Option<bool>,
}

/// For a k-regular, k-edge-connected graph with k odd.
pub fn odd_regular_equivalence(g: &Graph, chi_budget: SearchBudget, rd_budget: &RdBudget) -> Result<OddRegularRecord> {
    require_nontrivial(g, "odd_regular_equivalence")?;
    let k = g.max_degree();
    if g.min_degree() != k || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!("expected an odd-regular graph, degrees span {}..={k}", g.min_degree())));
    }
    let lambda = edge_connectivity(g);
    if lambda != k {
        return Err(Error::InvalidParameter(format!("{k}-regular graph is only {lambda}-edge-connected")));
    }
    let chi = chromatic_index_exact(g, chi_budget);
    let rd = rd_exact(g, rd_budget)?;
    let rd_value = rd.exact();
    let (rd_lo, rd_hi) = rd.bracket();
    let bracket_holds = if k <= rd_lo && rd_hi <= k + 1 {
        Some(true)
    } else if rd_hi < k || rd_lo > k + 1 {
        Some(false)
    } else {
        None
    };
    Ok(OddRegularRecord {
        k,
        chromatic_index: chi.bracket().into(),
        rd: rd.bracket().into(),
        equivalence_holds: chi.exact().zip(rd_value).map(|(c, r)| (c == k) == (r == k)),
        bracket_holds,
    })
}
