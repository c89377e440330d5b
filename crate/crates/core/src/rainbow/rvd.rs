//! Rainbow vertex-disconnection colorings and the comparison rd(G) ≤ rvd(L(G)).
//!
//! For a nonadjacent pair x, y a vertex cut is a set `S ⊆ V − {x, y}` separating
//! them in `G − S` and must itself be rainbow. For an adjacent pair the cut is
//! taken in `(G − xy) − S` and `S + x` or `S + y` must be rainbow.

use serde::Serialize;

use super::exact::{rd_exact, Bracket, RdBudget};
use crate::coloring::{chromatic_index_exact, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from vertices to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring {
    k: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > k) {
            return Err(Error::ColoringMismatch(format!("vertex {v} has color {c} outside 1..={k}")));
        }
        Ok(VertexColoring { k, colors })
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    fn is_rainbow(&self, mask: u64) -> bool {
        let mut seen = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bit = 1u64 << self.colors[v];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }
}

fn separated(g: &Graph, x: usize, y: usize, removed: u64, skip_edge_xy: bool) -> bool {
    let n = g.vertex_count();
    let mut seen = removed | 1 << x;
    let mut stack = vec![x];
    while let Some(a) = stack.pop() {
        for &(b, _) in g.incident(a) {
            if skip_edge_xy && ((a == x && b == y) || (a == y && b == x)) {
                continue;
            }
            if seen >> b & 1 == 0 {
                if b == y {
                    return false;
                }
                seen |= 1 << b;
                stack.push(b);
            }
        }
    }
    debug_assert!(n <= 64);
    true
}

/// Inclusion-minimal vertex sets whose rainbowness certifies the pair: `S` for
/// nonadjacent pairs, `S + x` and `S + y` for adjacent ones, `S` ranging over cuts.
fn candidate_sets(g: &Graph, x: usize, y: usize) -> Vec<u64> {
    let n = g.vertex_count();
    let adjacent = g.has_edge(x, y);
    let others: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    let mut cuts: Vec<u64> = Vec::new();
    for bits in 0u64..1 << others.len() {
        let mut s = 0u64;
        for (i, &v) in others.iter().enumerate() {
            if bits >> i & 1 == 1 {
                s |= 1 << v;
            }
        }
        if separated(g, x, y, s, adjacent) {
            cuts.push(s);
        }
    }
    let mut sets: Vec<u64> = if adjacent {
        cuts.iter().flat_map(|&s| [s | 1 << x, s | 1 << y]).collect()
    } else {
        cuts
    };
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&t| t & s == t) {
            minimal.push(s);
        }
    }
    minimal
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn check_small(g: &Graph) -> Result<()> {
    g.require_connected("rainbow vertex cuts")?;
    if g.vertex_count() > 30 {
        return Err(Error::InvalidParameter(format!("vertex cut search on {} vertices is out of reach", g.vertex_count())));
    }
    Ok(())
}

/// A rainbow x–y vertex cut `S`, if one exists.
pub fn exists_rainbow_vertex_cut(g: &Graph, c: &VertexColoring, x: usize, y: usize) -> Result<Option<Vec<usize>>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    check_small(g)?;
    if c.colors.len() != g.vertex_count() {
        return Err(Error::ColoringMismatch(format!("{} colors for {} vertices", c.colors.len(), g.vertex_count())));
    }
    let ends = 1u64 << x | 1u64 << y;
    Ok(candidate_sets(g, x, y).into_iter().find(|&s| c.is_rainbow(s)).map(|s| mask_to_vertices(s & !ends)))
}

/// Whether every pair has a rainbow vertex cut; on failure, the first bad pair.
pub fn verify_rvd_coloring(g: &Graph, c: &VertexColoring) -> Result<std::result::Result<(), (usize, usize)>> {
    let n = g.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            if exists_rainbow_vertex_cut(g, c, x, y)?.is_none() {
                return Ok(Err((x, y)));
            }
        }
    }
    Ok(Ok(()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RvdBudget {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl Default for RvdBudget {
    fn default() -> Self {
        RvdBudget { max_vertices: 10, max_nodes: 200_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RvdValue {
    Exact { value: usize, witness: VertexColoring },
    Unknown { lower: usize, upper: usize },
}

impl RvdValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            RvdValue::Exact { value, .. } => Some(*value),
            RvdValue::Unknown { .. } => None,
        }
    }

    pub fn bracket(&self) -> (usize, usize) {
        match *self {
            RvdValue::Exact { value, .. } => (value, value),
            RvdValue::Unknown { lower, upper } => (lower, upper),
        }
    }
}

struct VertexSearch<'a> {
    sets: &'a [Vec<u64>],
    k: usize,
    color: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl VertexSearch<'_> {
    /// A set is dead once two of its colored vertices share a color.
    fn alive(&self, set: u64, assigned: usize) -> bool {
        let mut seen = 0u64;
        let mut rest = set & ((1u64 << assigned) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bit = 1u64 << self.color[v];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }

    fn run(&mut self, v: usize, used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        if !self.sets.iter().all(|pair| pair.iter().any(|&s| self.alive(s, v))) {
            return Some(false);
        }
        if v == self.color.len() {
            return Some(true);
        }
        for c in 0..self.k.min(used + 1) {
            self.color[v] = c;
            match self.run(v + 1, used.max(c + 1)) {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

/// Exact rvd(G) for graphs within the vertex budget, searching k = 1, 2, … .
pub fn rvd_exact(g: &Graph, budget: &RvdBudget) -> Result<RvdValue> {
    g.require_connected("rvd_exact")?;
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Ok(RvdValue::Unknown { lower: 1, upper: n.max(1) });
    }
    check_small(g)?;
    if n <= 1 {
        return Ok(RvdValue::Exact { value: 1, witness: VertexColoring::new(1, vec![1; n])? });
    }
    let sets: Vec<Vec<u64>> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).map(|(x, y)| candidate_sets(g, x, y)).collect();
    for k in 1..=n {
        let mut search = VertexSearch { sets: &sets, k, color: vec![0; n], nodes: 0, max_nodes: budget.max_nodes };
        match search.run(0, 0) {
            Some(true) => {
                let witness = VertexColoring::new(k, search.color.iter().map(|&c| c + 1).collect())?;
                return Ok(RvdValue::Exact { value: k, witness });
            }
            Some(false) => {}
            None => return Ok(RvdValue::Unknown { lower: k, upper: n }),
        }
    }
    Err(Error::Construction("giving every vertex its own color must succeed".into()))
}

/// rd(G) against rvd(L(G)), with the minimum-degree-four equality test alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    pub rd: Bracket,
    pub rvd_line: Bracket,
    /// `None` when a bracket leaves the comparison open.
    pub inequality_holds: Option<bool>,
    pub min_degree_at_least_four: bool,
    pub chromatic_index: Bracket,
    /// Whether δ ≥ 4 and rd = rvd(L) force rd = χ′; `None` if undecided.
    pub equality_implies_chromatic: Option<bool>,
}

impl LineCheck {
    pub fn violated(&self) -> bool {
        self.inequality_holds == Some(false) || self.equality_implies_chromatic == Some(false)
    }
}

pub fn rd_vs_rvd_line_check(g: &Graph, rd_budget: &RdBudget, rvd_budget: &RvdBudget) -> Result<LineCheck> {
    g.require_simple("rd_vs_rvd_line_check")?;
    g.require_connected("rd_vs_rvd_line_check")?;
    let line = g.line_graph()?;
    let rd = rd_exact(g, rd_budget)?.bracket();
    let rvd = if line.graph.vertex_count() == 0 { (0, 0) } else { rvd_exact(&line.graph, rvd_budget)?.bracket() };
    let inequality_holds = if rd.1 <= rvd.0 {
        Some(true)
    } else if rd.0 > rvd.1 {
        Some(false)
    } else {
        None
    };
    let chi = chromatic_index_exact(g, SearchBudget::default()).bracket();
    let min_degree_at_least_four = g.vertex_count() > 0 && g.min_degree() >= 4;
    let equality_implies_chromatic = if !min_degree_at_least_four {
        Some(true)
    } else if rd.0 == rd.1 && rvd.0 == rvd.1 && chi.0 == chi.1 {
        Some(rd.0 != rvd.0 || rd.0 == chi.0)
    } else {
        None
    };
    Ok(LineCheck {
        rd: rd.into(),
        rvd_line: rvd.into(),
        inequality_holds,
        min_degree_at_least_four,
        chromatic_index: chi.into(),
        equality_implies_chromatic,
    })
}
