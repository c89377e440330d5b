//! Biconnected components (blocks) via the Hopcroft–Tarjan low-link DFS.
//!
//! Works on multigraphs: a pair of parallel edges forms a 2-connected block on
//! two vertices, and only the tree edge itself (by id) is skipped when looking
//! at the parent.

use crate::error::Result;
use crate::graph::{Graph, Subgraph};

struct LowLink<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    edge_stack: Vec<usize>,
    on_stack: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl LowLink<'_> {
    fn visit(&mut self, v: usize, parent_edge: Option<usize>) {
        self.order[v] = self.clock;
        self.low[v] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for &(w, e) in self.g.incident(v) {
            if Some(e) == parent_edge {
                continue;
            }
            if self.order[w] == usize::MAX {
                children += 1;
                self.edge_stack.push(e);
                self.on_stack[e] = true;
                self.visit(w, Some(e));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.order[v] {
                    if parent_edge.is_some() {
                        self.is_cut[v] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(f) = self.edge_stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    block.sort_unstable();
                    self.blocks.push(block);
                }
            } else if self.order[w] < self.order[v] {
                // back edge (or a parallel copy of the tree edge)
                self.low[v] = self.low[v].min(self.order[w]);
                if !self.on_stack[e] {
                    self.edge_stack.push(e);
                    self.on_stack[e] = true;
                }
            }
        }
        if parent_edge.is_none() && children > 1 {
            self.is_cut[v] = true;
        }
    }
}

fn low_link(g: &Graph) -> (Vec<Vec<usize>>, Vec<bool>) {
    let n = g.vertex_count();
    let mut state = LowLink {
        g,
        order: vec![usize::MAX; n],
        low: vec![0; n],
        clock: 0,
        edge_stack: Vec::new(),
        on_stack: vec![false; g.edge_count()],
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for s in 0..n {
        if state.order[s] == usize::MAX {
            state.visit(s, None);
        }
    }
    (state.blocks, state.is_cut)
}

/// Blocks of a connected graph, each as an edge-induced subgraph of `g`.
///
/// Bridges come back as `K₂` blocks. Blocks are ordered by their smallest edge id.
pub fn blocks(g: &Graph) -> Result<Vec<Subgraph>> {
    g.require_connected("blocks")?;
    if g.edge_count() == 0 {
        return Ok(if g.vertex_count() == 1 { vec![g.induced(&[0])] } else { Vec::new() });
    }
    let (mut edge_sets, _) = low_link(g);
    edge_sets.sort_by_key(|b| b[0]);
    Ok(edge_sets.iter().map(|b| g.edge_induced(b)).collect())
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let (_, is_cut) = low_link(g);
    (0..g.vertex_count()).filter(|&v| is_cut[v]).collect()
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn shapes(g: &Graph) -> Vec<(usize, usize)> {
        let mut s: Vec<_> = blocks(g)
            .unwrap()
            .iter()
            .map(|b| (b.graph.vertex_count(), b.graph.edge_count()))
            .collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn path_has_bridge_blocks() {
        assert_eq!(shapes(&Family::Path(4).build().unwrap()), vec![(2, 1); 3]);
        assert_eq!(cut_vertices(&Family::Path(4).build().unwrap()), vec![1, 2]);
    }

    #[test]
    fn bowtie_has_two_triangles() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(shapes(&g), vec![(3, 3), (3, 3)]);
        assert_eq!(cut_vertices(&g), vec![2]);
    }

    #[test]
    fn petersen_is_one_block() {
        let p = Family::Petersen.build().unwrap();
        assert_eq!(shapes(&p), vec![(10, 15)]);
        assert!(is_two_connected(&p));
    }

    #[test]
    fn parallel_edges_form_a_block() {
        let g = Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(shapes(&g), vec![(2, 1), (2, 2)]);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(blocks(&Graph::empty(2)).is_err());
    }
}
