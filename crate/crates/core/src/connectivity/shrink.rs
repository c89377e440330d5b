//! Shrinking a vertex set to a single vertex, and the recursive splitting of a
//! graph along small minimum cuts until each piece has at most one vertex of
//! degree above λ⁺(G).

use serde::Serialize;

use super::{min_edge_cut, upper_edge_connectivity};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of `G/X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrunk {
    pub graph: Graph,
    /// `vertex_map[v]` is the image of parent vertex `v`.
    pub vertex_map: Vec<usize>,
    /// The vertex that `X` became (always the last index).
    pub merged: usize,
    /// `edge_map[e]` is the parent edge id of edge `e`.
    pub edge_map: Vec<usize>,
}

/// Deletes the edges inside `X` and identifies `X` to one vertex, keeping every
/// edge from `X` to the rest (as parallel edges where they pile up).
///
/// Vertices outside `X` keep their relative order; the merged vertex comes last.
pub fn shrink(g: &Graph, x: &[usize]) -> Result<Shrunk> {
    let n = g.vertex_count();
    let mut in_x = vec![false; n];
    for &v in x {
        g.check_vertex(v)?;
        in_x[v] = true;
    }
    let size = in_x.iter().filter(|&&b| b).count();
    if size == 0 || size == n {
        return Err(Error::InvalidParameter(format!(
            "shrink set must be a nonempty proper subset, got {size} of {n} vertices"
        )));
    }
    let merged = n - size;
    let mut vertex_map = vec![merged; n];
    let mut next = 0;
    for v in 0..n {
        if !in_x[v] {
            vertex_map[v] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if in_x[a] && in_x[b] {
            continue;
        }
        edges.push((vertex_map[a], vertex_map[b]));
        edge_map.push(e);
    }
    Ok(Shrunk { graph: Graph::new(merged + 1, edges)?, vertex_map, merged, edge_map })
}

/// What a piece vertex stands for in the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexOrigin {
    Original(usize),
    /// A shrunken vertex standing for these original vertices.
    Contracted(Vec<usize>),
}

impl VertexOrigin {
    fn members(&self) -> Vec<usize> {
        match self {
            VertexOrigin::Original(v) => vec![*v],
            VertexOrigin::Contracted(vs) => vs.clone(),
        }
    }
}

/// One split: the cut `C(u, v)` (original edge ids) and the original vertices of the kept side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShrinkStep {
    pub pair: (usize, usize),
    pub cut: Vec<usize>,
    pub side: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShrinkPiece {
    #[serde(serialize_with = "serialize_graph")]
    pub graph: Graph,
    pub origin: Vec<VertexOrigin>,
    /// `edge_ids[e]` is the original edge id of piece edge `e`.
    pub edge_ids: Vec<usize>,
    /// The unique vertex of degree ≥ λ⁺(G)+1, if any.
    pub special_vertex: Option<usize>,
    pub provenance: Vec<ShrinkStep>,
}

fn serialize_graph<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Repr<'a> {
        vertex_count: usize,
        edges: &'a [(usize, usize)],
    }
    Repr { vertex_count: g.vertex_count(), edges: g.edges() }.serialize(s)
}

impl ShrinkPiece {
    /// Original vertices that appear in this piece unshrunk.
    pub fn original_vertices(&self) -> Vec<usize> {
        self.origin
            .iter()
            .filter_map(|o| match o {
                VertexOrigin::Original(v) => Some(*v),
                VertexOrigin::Contracted(_) => None,
            })
            .collect()
    }

    fn high_degree(&self, threshold: usize) -> Vec<usize> {
        (0..self.graph.vertex_count()).filter(|&v| self.graph.degree(v) >= threshold).collect()
    }
}

/// The binary tree of splits; leaves are the final pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShrinkTree {
    Leaf(ShrinkPiece),
    Split {
        piece: ShrinkPiece,
        /// Cut edges as original edge ids.
        cut: Vec<usize>,
        /// Child containing the side of the smaller endpoint of the split pair.
        first: Box<ShrinkTree>,
        second: Box<ShrinkTree>,
    },
}

impl ShrinkTree {
    pub fn leaves(&self) -> Vec<&ShrinkPiece> {
        match self {
            ShrinkTree::Leaf(p) => vec![p],
            ShrinkTree::Split { first, second, .. } => {
                let mut out = first.leaves();
                out.extend(second.leaves());
                out
            }
        }
    }
}

/// `piece / (side complement)`: keeps `side`, shrinks everything else into one vertex.
fn child(piece: &ShrinkPiece, in_side: &[bool], step: ShrinkStep) -> Result<ShrinkPiece> {
    let n = piece.graph.vertex_count();
    let other: Vec<usize> = (0..n).filter(|&v| !in_side[v]).collect();
    let shrunk = shrink(&piece.graph, &other)?;
    let mut origin = vec![VertexOrigin::Original(usize::MAX); shrunk.graph.vertex_count()];
    let mut contracted = Vec::new();
    for v in 0..n {
        if in_side[v] {
            origin[shrunk.vertex_map[v]] = piece.origin[v].clone();
        } else {
            contracted.extend(piece.origin[v].members());
        }
    }
    contracted.sort_unstable();
    origin[shrunk.merged] = VertexOrigin::Contracted(contracted);
    let mut provenance = piece.provenance.clone();
    provenance.push(step);
    Ok(ShrinkPiece {
        graph: shrunk.graph,
        origin,
        edge_ids: shrunk.edge_map.iter().map(|&e| piece.edge_ids[e]).collect(),
        special_vertex: None,
        provenance,
    })
}

fn split(mut piece: ShrinkPiece, lambda_plus: usize) -> Result<ShrinkTree> {
    let high = piece.high_degree(lambda_plus + 1);
    if high.len() < 2 {
        piece.special_vertex = high.first().copied();
        return Ok(ShrinkTree::Leaf(piece));
    }
    let (u, v) = (high[0], high[1]);
    let cut = min_edge_cut(&piece.graph, u, v)?;
    let original = |x: usize| match piece.origin[x] {
        VertexOrigin::Original(o) => o,
        VertexOrigin::Contracted(_) => unreachable!("contracted vertices have degree at most λ⁺"),
    };
    let pair = (original(u), original(v));
    if cut.size() > lambda_plus {
        return Err(Error::CutTooLarge { u: pair.0, v: pair.1, size: cut.size(), bound: lambda_plus });
    }
    let n = piece.graph.vertex_count();
    let mut in_first = vec![false; n];
    for &x in &cut.side {
        in_first[x] = true;
    }
    let in_second: Vec<bool> = in_first.iter().map(|b| !b).collect();
    let cut_ids: Vec<usize> = cut.crossing_edges.iter().map(|&e| piece.edge_ids[e]).collect();
    let members = |mask: &[bool]| -> Vec<usize> {
        let mut out: Vec<usize> = (0..n).filter(|&x| mask[x]).flat_map(|x| piece.origin[x].members()).collect();
        out.sort_unstable();
        out
    };
    let first = child(&piece, &in_first, ShrinkStep { pair, cut: cut_ids.clone(), side: members(&in_first) })?;
    let second = child(&piece, &in_second, ShrinkStep { pair, cut: cut_ids.clone(), side: members(&in_second) })?;
    Ok(ShrinkTree::Split {
        piece,
        cut: cut_ids,
        first: Box::new(split(first, lambda_plus)?),
        second: Box::new(split(second, lambda_plus)?),
    })
}

/// Splits `g` along minimum cuts between high-degree vertices, with λ⁺ held at its value on `g`.
pub fn shrink_tree(g: &Graph) -> Result<(usize, ShrinkTree)> {
    let lambda_plus = upper_edge_connectivity(g)?.value;
    let root = ShrinkPiece {
        graph: g.clone(),
        origin: (0..g.vertex_count()).map(VertexOrigin::Original).collect(),
        edge_ids: (0..g.edge_count()).collect(),
        special_vertex: None,
        provenance: Vec::new(),
    };
    Ok((lambda_plus, split(root, lambda_plus)?))
}

pub fn shrinking_decomposition(g: &Graph) -> Result<Vec<ShrinkPiece>> {
    let (_, tree) = shrink_tree(g)?;
    Ok(tree.leaves().into_iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::local_edge_connectivity;
    use crate::families::Family;

    #[test]
    fn shrink_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        let s = shrink(&c4, &[0, 1]).unwrap();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (3, 3));
        assert!(s.graph.is_simple());

        let s = shrink(&c4, &[0, 2]).unwrap();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (3, 4));
        assert_eq!(s.graph.multiplicity(0, s.merged), 2);
        assert_eq!(s.graph.multiplicity(1, s.merged), 2);

        let k4 = Family::Complete(4).build().unwrap();
        let s = shrink(&k4, &[1, 2, 3]).unwrap();
        assert_eq!(s.graph.vertex_count(), 2);
        assert_eq!(s.graph.multiplicity(0, 1), 3);

        assert!(shrink(&c4, &[]).is_err());
        assert!(shrink(&c4, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn trivial_decompositions() {
        let p = Family::Petersen.build().unwrap();
        let pieces = shrinking_decomposition(&p).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].special_vertex, None);
        assert_eq!(pieces[0].graph, p);

        let star = Family::Star(5).build().unwrap();
        let pieces = shrinking_decomposition(&star).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].special_vertex, Some(0));
    }

    #[test]
    fn double_star_splits_on_the_bridge() {
        // centres 0 and 1, pendants 2,3 on 0 and 4,5 on 1
        let g = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let pieces = shrinking_decomposition(&g).unwrap();
        assert_eq!(pieces.len(), 2);
        for (piece, centre) in pieces.iter().zip([0, 1]) {
            assert_eq!(piece.graph.vertex_count(), 4);
            assert_eq!(piece.graph.edge_count(), 3);
            let special = piece.special_vertex.unwrap();
            assert_eq!(piece.origin[special], VertexOrigin::Original(centre));
            assert_eq!(piece.graph.degree(special), 3);
            assert_eq!(piece.provenance.len(), 1);
            assert_eq!(piece.provenance[0].cut, vec![0]);
        }
        assert_eq!(pieces[0].original_vertices(), vec![0, 2, 3]);
        assert!(matches!(pieces[0].origin[3], VertexOrigin::Contracted(ref vs) if *vs == vec![1, 4, 5]));
    }

    #[test]
    fn shrunk_cuts_lift_to_the_parent() {
        let w = Family::Wheel(7).build().unwrap();
        let s = shrink(&w, &[0, 1, 2]).unwrap();
        let back: Vec<usize> = (0..w.vertex_count()).collect();
        for a in 0..s.graph.vertex_count() {
            for b in a + 1..s.graph.vertex_count() {
                if a == s.merged || b == s.merged {
                    continue;
                }
                let cut = crate::connectivity::min_edge_cut(&s.graph, a, b).unwrap();
                let mut removed = vec![false; w.edge_count()];
                for &e in &cut.crossing_edges {
                    removed[s.edge_map[e]] = true;
                }
                let pa = back.iter().position(|&v| s.vertex_map[v] == a).unwrap();
                let pb = back.iter().position(|&v| s.vertex_map[v] == b).unwrap();
                assert!(!w.connected_avoiding(pa, pb, &removed));
                assert!(local_edge_connectivity(&s.graph, a, b).unwrap() >= local_edge_connectivity(&w, pa, pb).unwrap());
            }
        }
    }
}
