//! Backtracking proper edge coloring for small loopless multigraphs.

use super::{vizing_proper_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Inputs with more edges are not searched at all.
    pub max_edges: usize,
    /// Backtracking nodes per search before giving up.
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const fn with_max_edges(max_edges: usize) -> Self {
        SearchBudget { max_edges, max_nodes: 200_000_000 }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::with_max_edges(25)
    }
}

/// Exact chromatic index, or the bracket `[Δ, upper]` when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticIndex {
    Exact { value: usize, witness: EdgeColoring },
    Unknown { lower: usize, upper: usize },
}

impl ChromaticIndex {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticIndex::Exact { value, .. } => Some(*value),
            ChromaticIndex::Unknown { .. } => None,
        }
    }

    pub fn bracket(&self) -> (usize, usize) {
        match *self {
            ChromaticIndex::Exact { value, .. } => (value, value),
            ChromaticIndex::Unknown { lower, upper } => (lower, upper),
        }
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match self {
            ChromaticIndex::Exact { witness, .. } => Some(witness),
            ChromaticIndex::Unknown { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Search {
    Found(Vec<usize>),
    Infeasible,
    OutOfBudget,
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    used_at: Vec<u64>,
    color: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl Backtrack<'_> {
    fn run(&mut self, i: usize, introduced: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        if i == self.order.len() {
            return Some(true);
        }
        let e = self.order[i];
        let (a, b) = self.g.endpoints(e);
        let blocked = self.used_at[a] | self.used_at[b];
        // a fresh color is only ever the next unused index
        let limit = self.k.min(introduced + 1);
        for c in 0..limit {
            let bit = 1u64 << c;
            if blocked & bit != 0 {
                continue;
            }
            self.used_at[a] |= bit;
            self.used_at[b] |= bit;
            self.color[e] = c;
            let found = self.run(i + 1, introduced.max(c + 1))?;
            if found {
                return Some(true);
            }
            self.used_at[a] &= !bit;
            self.used_at[b] &= !bit;
        }
        Some(false)
    }
}

/// Searches for a proper coloring with colors `0..k`.
pub(crate) fn search_proper(g: &Graph, k: usize, max_nodes: u64) -> Search {
    let m = g.edge_count();
    if m == 0 {
        return Search::Found(Vec::new());
    }
    // each color class is a matching
    if k < g.max_degree() || m > k * (g.vertex_count() / 2) {
        return Search::Infeasible;
    }
    assert!(k <= 64, "palette larger than 64 colors");
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| {
        let (a, b) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(a).max(g.degree(b))), e)
    });
    let mut bt = Backtrack {
        g,
        k,
        order,
        used_at: vec![0; g.vertex_count()],
        color: vec![0; m],
        nodes: 0,
        max_nodes,
    };
    match bt.run(0, 0) {
        Some(true) => Search::Found(bt.color),
        Some(false) => Search::Infeasible,
        None => Search::OutOfBudget,
    }
}

/// A proper coloring using at most `k` colors, if the search finds one within `max_nodes`.
pub fn color_with_palette(g: &Graph, k: usize, max_nodes: u64) -> Option<EdgeColoring> {
    match search_proper(g, k, max_nodes) {
        Search::Found(colors) => Some(EdgeColoring::from_zero_based(&colors)),
        _ => None,
    }
}

fn shannon_bound(delta: usize) -> usize {
    3 * delta / 2
}

pub fn chromatic_index_exact(g: &Graph, budget: SearchBudget) -> ChromaticIndex {
    let delta = g.max_degree();
    let simple = g.is_simple();
    let upper = if simple { delta + 1 } else { shannon_bound(delta).max(delta) };
    if g.edge_count() == 0 {
        return ChromaticIndex::Exact { value: 0, witness: EdgeColoring::uniform(0) };
    }
    if g.edge_count() > budget.max_edges {
        return ChromaticIndex::Unknown { lower: delta, upper };
    }
    let mut lower = delta;
    for k in delta..=upper {
        if simple && k == delta + 1 {
            let witness = vizing_proper_coloring(g).expect("simple graph");
            return ChromaticIndex::Exact { value: k, witness };
        }
        match search_proper(g, k, budget.max_nodes) {
            Search::Found(colors) => {
                return ChromaticIndex::Exact { value: k, witness: EdgeColoring::from_zero_based(&colors) }
            }
            Search::Infeasible => lower = k + 1,
            Search::OutOfBudget => return ChromaticIndex::Unknown { lower, upper },
        }
    }
    unreachable!("Shannon's bound guarantees a coloring within ⌊3Δ/2⌋ colors")
}

/// Proper coloring of a loopless multigraph with at most ⌊3Δ/2⌋ colors.
pub fn shannon_proper_coloring(g: &Graph) -> Result<EdgeColoring> {
    let k = shannon_bound(g.max_degree()).max(g.max_degree());
    match search_proper(g, k, u64::MAX) {
        Search::Found(colors) => Ok(EdgeColoring::from_zero_based(&colors)),
        _ => Err(Error::Construction(format!("no proper coloring with {k} colors found"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_index_exact(g, SearchBudget::default());
        let w = r.witness().unwrap();
        assert!(w.is_proper(g));
        assert_eq!(w.num_colors(), r.exact().unwrap());
        r.exact().unwrap()
    }

    fn fat_triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)]).unwrap()
    }

    #[test]
    fn known_chromatic_indices() {
        assert_eq!(chi(&Family::Complete(4).build().unwrap()), 3);
        assert_eq!(chi(&Family::Petersen.build().unwrap()), 4);
        assert_eq!(chi(&Family::Star(5).build().unwrap()), 4);
        assert_eq!(chi(&Family::Complete(5).build().unwrap()), 5);
        assert_eq!(chi(&Family::Complete(6).build().unwrap()), 5);
        assert_eq!(chi(&Family::Cycle(7).build().unwrap()), 3);
        assert_eq!(chi(&fat_triangle()), 6);
    }

    #[test]
    fn petersen_has_no_three_coloring() {
        let p = Family::Petersen.build().unwrap();
        assert_eq!(search_proper(&p, 3, u64::MAX), Search::Infeasible);
    }

    #[test]
    fn budget_overflow_is_explicit() {
        let k8 = Family::Complete(8).build().unwrap();
        let r = chromatic_index_exact(&k8, SearchBudget::default());
        assert_eq!(r, ChromaticIndex::Unknown { lower: 7, upper: 8 });
        let p = Family::Petersen.build().unwrap();
        let r = chromatic_index_exact(&p, SearchBudget { max_edges: 25, max_nodes: 10 });
        assert_eq!(r, ChromaticIndex::Unknown { lower: 3, upper: 4 });
    }

    #[test]
    fn shannon_examples() {
        let fat = fat_triangle();
        let c = shannon_proper_coloring(&fat).unwrap();
        assert!(c.is_proper(&fat));
        assert_eq!(c.num_colors(), 6);

        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(shannon_proper_coloring(&c4).unwrap().num_colors(), 2);

        let triple = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let c = shannon_proper_coloring(&triple).unwrap();
        assert!(c.is_proper(&triple));
        assert_eq!(c.num_colors(), 3);
    }
}
