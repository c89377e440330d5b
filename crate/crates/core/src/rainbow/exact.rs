//! Exact rainbow disconnection number by backtracking over edge colorings.
//!
//! Every rainbow u–v cut contains a bond (a cut `δ(S)` with both `S` and its
//! complement connected) separating u and v, so a coloring is rainbow
//! disconnecting iff every pair is separated by some rainbow bond. The search
//! keeps, per bond, whether two assigned edges already share a color, and per
//! pair, how many separating bonds are still clean; a pair with none left
//! prunes the branch.

use serde::Serialize;

use super::construct::best_known_upper;
use super::cuts::{verify_rd_coloring, Verification};
use crate::blocks::blocks;
use crate::coloring::EdgeColoring;
use crate::connectivity::upper_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RdBudget {
    /// Blocks with more edges than this are not searched.
    pub max_edges: usize,
    /// Backtracking nodes per search before giving up.
    pub max_nodes: u64,
}

impl Default for RdBudget {
    fn default() -> Self {
        RdBudget { max_edges: 20, max_nodes: 500_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RdValue {
    Exact { value: usize, witness: EdgeColoring },
    /// `lower ≤ rd ≤ upper`, with a verified coloring attaining `upper`.
    Unknown { lower: usize, upper: usize, witness: EdgeColoring },
}

impl RdValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            RdValue::Exact { value, .. } => Some(*value),
            RdValue::Unknown { .. } => None,
        }
    }

    pub fn bracket(&self) -> (usize, usize) {
        match *self {
            RdValue::Exact { value, .. } => (value, value),
            RdValue::Unknown { lower, upper, .. } => (lower, upper),
        }
    }

    pub fn witness(&self) -> &EdgeColoring {
        match self {
            RdValue::Exact { witness, .. } | RdValue::Unknown { witness, .. } => witness,
        }
    }
}

/// `{"exact": n}` or `{"lower": a, "upper": b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Bracket {
    Exact { exact: usize },
    Range { lower: usize, upper: usize },
}

impl From<(usize, usize)> for Bracket {
    fn from((lower, upper): (usize, usize)) -> Self {
        if lower == upper {
            Bracket::Exact { exact: lower }
        } else {
            Bracket::Range { lower, upper }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    Found(EdgeColoring),
    Infeasible,
    OutOfBudget,
}

struct Bonds {
    cut: Vec<u64>,
    pairs: Vec<Vec<usize>>,
    of_edge: Vec<Vec<usize>>,
    bonds_per_pair: Vec<u32>,
}

fn induced_connected(g: &Graph, mask: u64) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(y, _) in g.incident(x) {
            let bit = 1u64 << y;
            if mask & bit != 0 && seen & bit == 0 {
                seen |= bit;
                stack.push(y);
            }
        }
    }
    seen == mask
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * n + b
}

fn enumerate_bonds(g: &Graph) -> Bonds {
    let n = g.vertex_count();
    let m = g.edge_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut bonds = Bonds {
        cut: Vec::new(),
        pairs: Vec::new(),
        of_edge: vec![Vec::new(); m],
        bonds_per_pair: vec![0; n * n],
    };
    // sides containing vertex 0, so each bond appears once
    for rest in 0u64..1 << (n - 1) {
        let side = rest << 1 | 1;
        if side == full || !induced_connected(g, side) || !induced_connected(g, full & !side) {
            continue;
        }
        let mut cut = 0u64;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if (side >> a & 1) != (side >> b & 1) {
                cut |= 1 << e;
            }
        }
        let id = bonds.cut.len();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if side >> a & 1 == 1 && side >> b & 1 == 0 {
                    let p = pair_index(n, a, b);
                    pairs.push(p);
                    bonds.bonds_per_pair[p] += 1;
                }
            }
        }
        for e in 0..m {
            if cut >> e & 1 == 1 {
                bonds.of_edge[e].push(id);
            }
        }
        bonds.cut.push(cut);
        bonds.pairs.push(pairs);
    }
    bonds
}

/// Vertices in BFS order from a maximum-degree vertex; edges sorted by the
/// later of their endpoints' positions, so each prefix closes off small bonds early.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut pos = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([start]);
    pos[start] = 0;
    let mut next = 1;
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.incident(x) {
            if pos[y] == usize::MAX {
                pos[y] = next;
                next += 1;
                queue.push_back(y);
            }
        }
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (a, b) = g.endpoints(e);
        (pos[a].max(pos[b]), pos[a].min(pos[b]), e)
    });
    order
}

struct Search<'a> {
    bonds: &'a Bonds,
    order: Vec<usize>,
    k: usize,
    color_edges: Vec<u64>,
    clashes: Vec<u32>,
    clean: Vec<u32>,
    color: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    /// Colors `e` with `c`; returns false if some pair lost its last clean bond.
    /// The update is always applied in full so that `unassign` mirrors it.
    fn assign(&mut self, e: usize, c: usize) -> bool {
        let mut ok = true;
        let same = self.color_edges[c];
        for &b in &self.bonds.of_edge[e] {
            if self.bonds.cut[b] & same != 0 {
                self.clashes[b] += 1;
                if self.clashes[b] == 1 {
                    for &p in &self.bonds.pairs[b] {
                        self.clean[p] -= 1;
                        if self.clean[p] == 0 {
                            ok = false;
                        }
                    }
                }
            }
        }
        self.color_edges[c] |= 1 << e;
        self.color[e] = c;
        ok
    }

    fn unassign(&mut self, e: usize, c: usize) {
        self.color_edges[c] &= !(1 << e);
        let same = self.color_edges[c];
        for &b in &self.bonds.of_edge[e] {
            if self.bonds.cut[b] & same != 0 {
                if self.clashes[b] == 1 {
                    for &p in &self.bonds.pairs[b] {
                        self.clean[p] += 1;
                    }
                }
                self.clashes[b] -= 1;
            }
        }
    }

    fn run(&mut self, i: usize, introduced: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        if i == self.order.len() {
            return Some(true);
        }
        let e = self.order[i];
        let limit = self.k.min(introduced + 1);
        for c in 0..limit {
            let ok = self.assign(e, c);
            if ok && self.run(i + 1, introduced.max(c + 1))? {
                return Some(true);
            }
            self.unassign(e, c);
        }
        Some(false)
    }
}

/// Looks for a rainbow disconnection coloring of `g` with at most `k` colors.
///
/// `g` must be connected with at most 64 vertices and 64 edges.
pub fn find_rd_coloring(g: &Graph, k: usize, max_nodes: u64) -> Result<WitnessSearch> {
    g.require_connected("find_rd_coloring")?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n > 24 || m > 64 {
        return Err(Error::InvalidParameter(format!("exact search supports n <= 24 and m <= 64, got n = {n}, m = {m}")));
    }
    if m == 0 {
        return Ok(WitnessSearch::Found(EdgeColoring::uniform(0)));
    }
    if k == 0 {
        return Ok(WitnessSearch::Infeasible);
    }
    let bonds = enumerate_bonds(g);
    let mut search = Search {
        bonds: &bonds,
        order: search_order(g),
        k,
        color_edges: vec![0; k],
        clashes: vec![0; bonds.cut.len()],
        clean: bonds.bonds_per_pair.clone(),
        color: vec![0; m],
        nodes: 0,
        max_nodes,
    };
    Ok(match search.run(0, 0) {
        Some(true) => WitnessSearch::Found(EdgeColoring::from_zero_based(&search.color)),
        Some(false) => WitnessSearch::Infeasible,
        None => WitnessSearch::OutOfBudget,
    })
}

fn rd_block(block: &Graph, budget: &RdBudget) -> Result<RdValue> {
    if block.edge_count() == 1 {
        return Ok(RdValue::Exact { value: 1, witness: EdgeColoring::uniform(1) });
    }
    let lower = upper_edge_connectivity(block)?.value;
    let (upper, witness) = best_known_upper(block)?;
    if lower == upper {
        return Ok(RdValue::Exact { value: upper, witness });
    }
    if block.edge_count() > budget.max_edges {
        return Ok(RdValue::Unknown { lower, upper, witness });
    }
    for k in lower..upper {
        match find_rd_coloring(block, k, budget.max_nodes)? {
            WitnessSearch::Found(witness) => return Ok(RdValue::Exact { value: k, witness }),
            WitnessSearch::Infeasible => {}
            WitnessSearch::OutOfBudget => return Ok(RdValue::Unknown { lower: k, upper, witness }),
        }
    }
    Ok(RdValue::Exact { value: upper, witness })
}

/// Exact rd(G): the maximum over blocks, each searched from λ⁺(block) upward.
pub fn rd_exact(g: &Graph, budget: &RdBudget) -> Result<RdValue> {
    g.require_connected("rd_exact")?;
    if g.edge_count() == 0 {
        return Ok(RdValue::Exact { value: 0, witness: EdgeColoring::uniform(0) });
    }
    let mut colors = vec![0usize; g.edge_count()];
    let (mut lower, mut upper, mut exact) = (0, 0, true);
    for block in blocks(g)? {
        let value = rd_block(&block.graph, budget)?;
        let (lo, hi) = value.bracket();
        exact &= value.exact().is_some();
        lower = lower.max(lo);
        upper = upper.max(hi);
        for (e, &c) in value.witness().colors().iter().enumerate() {
            colors[block.edges[e]] = c;
        }
    }
    let witness = EdgeColoring::new(upper, colors)?;
    if !verify_rd_coloring(g, &witness)?.is_certified() {
        return Err(Error::Construction("union of block colorings is not rainbow disconnecting".into()));
    }
    Ok(if exact {
        RdValue::Exact { value: upper, witness }
    } else {
        RdValue::Unknown { lower, upper, witness }
    })
}

/// Whether rd(G) ≤ k, found blockwise; unresolved blocks make the answer `OutOfBudget`.
pub fn rd_at_most(g: &Graph, k: usize, max_nodes: u64) -> Result<WitnessSearch> {
    g.require_connected("rd_at_most")?;
    let mut colors = vec![1usize; g.edge_count()];
    let mut out_of_budget = false;
    for block in blocks(g)? {
        let b = &block.graph;
        let (upper, witness) = best_known_upper(b)?;
        let found = if upper <= k {
            Some(witness)
        } else {
            match find_rd_coloring(b, k, max_nodes)? {
                WitnessSearch::Found(w) => Some(w),
                WitnessSearch::Infeasible => return Ok(WitnessSearch::Infeasible),
                WitnessSearch::OutOfBudget => {
                    out_of_budget = true;
                    None
                }
            }
        };
        if let Some(w) = found {
            for (e, &c) in w.colors().iter().enumerate() {
                colors[block.edges[e]] = c;
            }
        }
    }
    if out_of_budget {
        return Ok(WitnessSearch::OutOfBudget);
    }
    let witness = EdgeColoring::new(k.max(colors.iter().copied().max().unwrap_or(0)), colors)?;
    match verify_rd_coloring(g, &witness)? {
        Verification::Certified(_) => Ok(WitnessSearch::Found(witness)),
        Verification::Failed { pair } => {
            Err(Error::Construction(format!("blockwise witness fails at pair {pair:?}")))
        }
    }
}
