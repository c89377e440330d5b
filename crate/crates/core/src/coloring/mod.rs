//! Edge colorings and chromatic-index machinery.

mod exact;
mod vizing;

pub use exact::{chromatic_index_exact, color_with_palette, shannon_proper_coloring, ChromaticIndex, SearchBudget};
pub use vizing::vizing_proper_coloring;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from edge ids to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

/// `{"k": int, "edges": [[u, v, color], ...]}` in edge-id order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoringJson {
    pub k: usize,
    pub edges: Vec<[usize; 3]>,
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((e, &c)) = colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > k) {
            return Err(Error::ColoringMismatch(format!("edge {e} has color {c} outside 1..={k}")));
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Builds from 0-based colors, taking `k` as the number of palette slots used.
    pub(crate) fn from_zero_based(colors: &[usize]) -> Self {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        EdgeColoring { k, colors: colors.iter().map(|&c| c + 1).collect() }
    }

    pub fn uniform(m: usize) -> Self {
        EdgeColoring { k: usize::from(m > 0), colors: vec![1; m] }
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually assigned.
    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::ColoringMismatch(format!(
                "{} colors for a graph with {} edges",
                self.colors.len(),
                g.edge_count()
            )))
        }
    }

    /// Applies a color bijection given as `perm[c - 1] = new color`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        EdgeColoring::new(self.k, self.colors.iter().map(|&c| perm[c - 1]).collect())
    }

    /// Whether the edges at `v` all have distinct colors.
    pub fn is_proper_at(&self, g: &Graph, v: usize) -> bool {
        let mut seen = vec![false; self.k + 1];
        g.incident(v).iter().all(|&(_, e)| !std::mem::replace(&mut seen[self.colors[e]], true))
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.edge_count() && (0..g.vertex_count()).all(|v| self.is_proper_at(g, v))
    }

    pub fn to_json(&self, g: &Graph) -> EdgeColoringJson {
        EdgeColoringJson {
            k: self.k,
            edges: g.edges().iter().zip(&self.colors).map(|(&(a, b), &c)| [a, b, c]).collect(),
        }
    }

    /// Reads a coloring for `g`; entries must list the edges of `g` in edge-id order.
    pub fn from_json(g: &Graph, json: &EdgeColoringJson) -> Result<Self> {
        if json.edges.len() != g.edge_count() {
            return Err(Error::ColoringMismatch(format!(
                "{} colored edges for a graph with {} edges",
                json.edges.len(),
                g.edge_count()
            )));
        }
        for (e, entry) in json.edges.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            if !((entry[0] == a && entry[1] == b) || (entry[0] == b && entry[1] == a)) {
                return Err(Error::ColoringMismatch(format!(
                    "entry {e} is [{}, {}] but edge {e} is {a}-{b}",
                    entry[0], entry[1]
                )));
            }
        }
        EdgeColoring::new(json.k, json.edges.iter().map(|entry| entry[2]).collect())
    }
}

/// Sufficient test for Class 1: every component of the max-degree subgraph is a
/// tree or unicyclic, and that subgraph is not a disjoint union of cycles.
pub fn class_one_sufficient(g: &Graph) -> Result<bool> {
    let core = g.max_degree_subgraph()?.graph;
    let (label, count) = core.components();
    let mut vertices = vec![0usize; count];
    let mut edges = vec![0usize; count];
    let mut all_degree_two = vec![true; count];
    for v in 0..core.vertex_count() {
        vertices[label[v]] += 1;
        if core.degree(v) != 2 {
            all_degree_two[label[v]] = false;
        }
    }
    for &(a, _) in core.edges() {
        edges[label[a]] += 1;
    }
    let sparse = (0..count).all(|c| edges[c] <= vertices[c]);
    let cycle_union = (0..count).all(|c| all_degree_two[c]);
    Ok(sparse && !cycle_union)
}

/// `|E| > ⌊n/2⌋·Δ`.
pub fn is_overfull(g: &Graph) -> Result<bool> {
    g.require_simple("is_overfull")?;
    Ok(g.edge_count() > g.vertex_count() / 2 * g.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn json_round_trip_and_validation() {
        let p3 = Family::Path(3).build().unwrap();
        let c = EdgeColoring::new(2, vec![1, 2]).unwrap();
        let json = serde_json::to_string(&c.to_json(&p3)).unwrap();
        assert_eq!(json, r#"{"k":2,"edges":[[0,1,1],[1,2,2]]}"#);
        let back: EdgeColoringJson = serde_json::from_str(&json).unwrap();
        assert_eq!(EdgeColoring::from_json(&p3, &back).unwrap(), c);

        let wrong = EdgeColoringJson { k: 2, edges: vec![[0, 2, 1], [1, 2, 2]] };
        assert!(EdgeColoring::from_json(&p3, &wrong).is_err());
        assert!(EdgeColoring::new(2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(2, vec![0, 1]).is_err());
    }

    #[test]
    fn properness() {
        let c4 = Family::Cycle(4).build().unwrap();
        assert!(EdgeColoring::new(2, vec![1, 2, 1, 2]).unwrap().is_proper(&c4));
        assert!(!EdgeColoring::new(2, vec![1, 1, 2, 2]).unwrap().is_proper(&c4));
    }

    #[test]
    fn class_one_examples() {
        assert!(class_one_sufficient(&Family::Wheel(5).build().unwrap()).unwrap());
        assert!(!class_one_sufficient(&Family::Cycle(5).build().unwrap()).unwrap());
        assert!(class_one_sufficient(&Family::Path(4).build().unwrap()).unwrap());
        // K4's max-degree subgraph is K4 itself, neither tree nor unicyclic
        assert!(!class_one_sufficient(&Family::Complete(4).build().unwrap()).unwrap());
    }

    #[test]
    fn overfull_examples() {
        assert!(is_overfull(&Family::Complete(5).build().unwrap()).unwrap());
        assert!(!is_overfull(&Family::Complete(4).build().unwrap()).unwrap());
        assert!(is_overfull(&Family::Cycle(5).build().unwrap()).unwrap());
    }
}
