//! Constructive upper bounds on rd(G), each returned as a verified coloring.

use std::collections::BTreeMap;

use super::cuts::{verify_rd_coloring, Verification};
use crate::coloring::{class_one_sufficient, color_with_palette, shannon_proper_coloring, vizing_proper_coloring, EdgeColoring};
use crate::connectivity::{shrink_tree, upper_edge_connectivity, ShrinkPiece, ShrinkTree};
use crate::error::{Error, Result};
use crate::graph::Graph;

// Search cap for the Δ(H)-coloring of a Class 1 remainder; past it we fall back to Δ(H)+1.
const CLASS_ONE_SEARCH_NODES: u64 = 20_000_000;

fn certify(g: &Graph, coloring: EdgeColoring, what: &str) -> Result<EdgeColoring> {
    match verify_rd_coloring(g, &coloring)? {
        Verification::Certified(_) => Ok(coloring),
        Verification::Failed { pair } => {
            Err(Error::Construction(format!("{what}: pair {pair:?} has no rainbow cut")))
        }
    }
}

/// Renumbers colors to `1..=d` by first appearance.
pub(crate) fn compact(c: &EdgeColoring) -> EdgeColoring {
    let mut map = vec![0usize; c.num_colors() + 1];
    let mut next = 0;
    let colors = c
        .colors()
        .iter()
        .map(|&x| {
            if map[x] == 0 {
                next += 1;
                map[x] = next;
            }
            map[x]
        })
        .collect();
    EdgeColoring::new(next, colors).expect("compacted colors are in range")
}

/// Whether `h` is Class 1 by the max-degree-subgraph test applied per component.
fn remainder_is_class_one(h: &Graph) -> Result<bool> {
    let delta = h.max_degree();
    let (label, count) = h.components();
    for comp in 0..count {
        let members: Vec<usize> = (0..h.vertex_count()).filter(|&v| label[v] == comp).collect();
        let sub = h.induced(&members).graph;
        if sub.max_degree() == delta && !class_one_sufficient(&sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Colors `G − u` properly, then gives each edge `uw` a color missing at `w`.
///
/// Every vertex other than `u` ends up proper. Uses at most Δ(G−u)+1 colors,
/// and only Δ(G−u) when `G − u` passes the Class 1 test and every neighbour
/// of `u` has degree below Δ(G−u) there.
pub fn rd_upper_vertex_removal(g: &Graph, u: usize) -> Result<EdgeColoring> {
    g.require_simple("rd_upper_vertex_removal")?;
    g.require_connected("rd_upper_vertex_removal")?;
    g.check_vertex(u)?;
    let rest = g.remove_vertex(u);
    let h = &rest.graph;
    let delta_h = h.max_degree();
    let index_in_h = |w: usize| if w < u { w } else { w - 1 };

    let slack = delta_h > 0 && g.incident(u).iter().all(|&(w, _)| h.degree(index_in_h(w)) < delta_h);
    let tight = if slack && remainder_is_class_one(h)? {
        color_with_palette(h, delta_h, CLASS_ONE_SEARCH_NODES).map(|c| (delta_h, c))
    } else {
        None
    };
    let (palette, h_coloring) = match tight {
        Some(found) => found,
        None => (delta_h + 1, vizing_proper_coloring(h)?),
    };

    let mut colors = vec![0usize; g.edge_count()];
    for (e, &pe) in rest.edges.iter().enumerate() {
        colors[pe] = h_coloring.color(e);
    }
    for &(w, e) in g.incident(u) {
        let mut used = vec![false; palette + 1];
        for &(_, f) in g.incident(w) {
            if colors[f] != 0 {
                used[colors[f]] = true;
            }
        }
        let free = (1..=palette)
            .find(|&c| !used[c])
            .ok_or_else(|| Error::Construction(format!("no free color at neighbour {w} of {u}")))?;
        colors[e] = free;
    }
    certify(g, EdgeColoring::new(palette, colors)?, "vertex-removal coloring")
}

/// `min{n + λ⁺ − Δ − 1, Δ + 1}`.
pub fn min_bound_value(g: &Graph) -> Result<usize> {
    let lambda_plus = upper_edge_connectivity(g)?.value;
    let (n, delta) = (g.vertex_count(), g.max_degree());
    Ok((n + lambda_plus - delta - 1).min(delta + 1))
}

/// Vertex-removal coloring at the first vertex of maximum degree.
pub fn rd_upper_min_bound(g: &Graph) -> Result<EdgeColoring> {
    g.require_connected("rd_upper_min_bound")?;
    let delta = g.max_degree();
    let v = (0..g.vertex_count()).find(|&v| g.degree(v) == delta).unwrap_or(0);
    let coloring = rd_upper_vertex_removal(g, v)?;
    let bound = min_bound_value(g)?;
    if coloring.num_colors() > bound {
        return Err(Error::Construction(format!(
            "min-bound coloring used {} colors, above {bound}",
            coloring.num_colors()
        )));
    }
    Ok(coloring)
}

/// Proper coloring of a piece except possibly at its special vertex, keyed by original edge id.
fn color_piece(piece: &ShrinkPiece, palette: usize) -> Result<BTreeMap<usize, usize>> {
    let h = &piece.graph;
    let mut local = vec![0usize; h.edge_count()];
    match piece.special_vertex {
        None => {
            let c = shannon_proper_coloring(h)?;
            local.copy_from_slice(c.colors());
        }
        Some(s) => {
            let rest = h.remove_vertex(s);
            let c = shannon_proper_coloring(&rest.graph)?;
            for (e, &pe) in rest.edges.iter().enumerate() {
                local[pe] = c.color(e);
            }
            for &(w, e) in h.incident(s) {
                let mut used = vec![false; palette + 1];
                for &(_, f) in h.incident(w) {
                    if local[f] != 0 && local[f] <= palette {
                        used[local[f]] = true;
                    }
                }
                local[e] = (1..=palette).find(|&c| !used[c]).ok_or_else(|| {
                    Error::Construction(format!("no color left for edge {} at a neighbour of the special vertex", piece.edge_ids[e]))
                })?;
            }
        }
    }
    if let Some(&c) = local.iter().find(|&&c| c > palette) {
        return Err(Error::Construction(format!("piece coloring used color {c} beyond palette {palette}")));
    }
    Ok(local.iter().enumerate().map(|(e, &c)| (piece.edge_ids[e], c)).collect())
}

fn color_tree(tree: &ShrinkTree, palette: usize) -> Result<BTreeMap<usize, usize>> {
    match tree {
        ShrinkTree::Leaf(piece) => color_piece(piece, palette),
        ShrinkTree::Split { cut, first, second, .. } => {
            let mut left = color_tree(first, palette)?;
            let right = color_tree(second, palette)?;
            // the shrunken vertex on each side is proper, so the cut is rainbow on both sides
            let mut perm = vec![0usize; palette + 1];
            let mut taken = vec![false; palette + 1];
            for &e in cut {
                let (from, to) = (right[&e], left[&e]);
                if perm[from] != 0 || taken[to] {
                    return Err(Error::Construction(format!(
                        "glue along cut {cut:?}: cut edges repeat a color on one side"
                    )));
                }
                perm[from] = to;
                taken[to] = true;
            }
            let mut free_targets = (1..=palette).filter(|&c| !taken[c]);
            for slot in perm.iter_mut().skip(1) {
                if *slot == 0 {
                    *slot = free_targets.next().expect("a permutation has as many sources as targets");
                }
            }
            for (e, c) in right {
                let mapped = perm[c];
                if let Some(&existing) = left.get(&e) {
                    debug_assert_eq!(existing, mapped);
                } else {
                    left.insert(e, mapped);
                }
            }
            Ok(left)
        }
    }
}

/// Colors each shrinking piece with ⌊3λ⁺/2⌋ colors and glues the pieces back
/// along their cuts, relabelling one side by a global color bijection.
pub fn rd_upper_three_halves(g: &Graph) -> Result<EdgeColoring> {
    g.require_connected("rd_upper_three_halves")?;
    if g.edge_count() == 0 {
        return Ok(EdgeColoring::uniform(0));
    }
    let (lambda_plus, tree) = shrink_tree(g)?;
    let palette = 3 * lambda_plus / 2;
    let assigned = color_tree(&tree, palette)?;
    let colors: Vec<usize> = (0..g.edge_count()).map(|e| assigned[&e]).collect();
    certify(g, EdgeColoring::new(palette, colors)?, "three-halves coloring")
}

/// The smallest verified coloring among the constructions (and a proper coloring).
/// Returns the number of colors it uses and the coloring itself, compacted.
pub(crate) fn best_known_upper(g: &Graph) -> Result<(usize, EdgeColoring)> {
    let mut candidates = Vec::new();
    if g.is_simple() {
        candidates.push(vizing_proper_coloring(g)?);
        for u in 0..g.vertex_count() {
            candidates.push(rd_upper_vertex_removal(g, u)?);
        }
    } else {
        candidates.push(shannon_proper_coloring(g)?);
    }
    candidates.push(rd_upper_three_halves(g)?);
    let best = candidates.iter().map(compact).min_by_key(|c| c.num_colors()).expect("at least one candidate");
    Ok((best.num_colors(), best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn wheel_hub_removal_uses_three_colors() {
        let w5 = Family::Wheel(5).build().unwrap();
        let c = rd_upper_vertex_removal(&w5, 4).unwrap();
        assert!(c.num_colors() <= 3);
        for v in 0..4 {
            assert!(c.is_proper_at(&w5, v));
        }
    }

    #[test]
    fn star_center_removal_uses_one_color() {
        let star = Family::Star(6).build().unwrap();
        let c = rd_upper_vertex_removal(&star, 0).unwrap();
        assert_eq!(c.num_colors(), 1);
        assert_eq!(rd_upper_min_bound(&star).unwrap().num_colors(), 1);
    }

    #[test]
    fn petersen_constructions() {
        let p = Family::Petersen.build().unwrap();
        for u in 0..10 {
            assert!(rd_upper_vertex_removal(&p, u).unwrap().num_colors() <= 4);
        }
        assert!(rd_upper_three_halves(&p).unwrap().num_colors() <= 4);
        assert_eq!(min_bound_value(&p).unwrap(), 4);
        assert!(rd_upper_min_bound(&p).unwrap().num_colors() <= 4);
    }

    #[test]
    fn min_bound_on_wheels() {
        for n in 4..=9 {
            let w = Family::Wheel(n).build().unwrap();
            assert_eq!(min_bound_value(&w).unwrap(), 3);
            assert!(rd_upper_min_bound(&w).unwrap().num_colors() <= 3);
        }
    }

    #[test]
    fn three_halves_on_trees_and_cycles() {
        let tree = Graph::new(6, vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let c = rd_upper_three_halves(&tree).unwrap();
        assert_eq!(c.num_colors(), 1);
        let c5 = Family::Cycle(5).build().unwrap();
        assert!(rd_upper_three_halves(&c5).unwrap().num_colors() <= 3);
    }

    #[test]
    fn three_halves_glues_a_multigraph() {
        // two fat triangles joined by a single edge: λ⁺ = 4, both joints exceed it
        let mut edges = Vec::new();
        for &(a, b) in &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            edges.push((a, b));
            edges.push((a, b));
        }
        edges.push((0, 3));
        edges.push((0, 6));
        edges.push((3, 7));
        let g = Graph::new(8, edges).unwrap();
        assert_eq!(upper_edge_connectivity(&g).unwrap().value, 4);
        let c = rd_upper_three_halves(&g).unwrap();
        assert!(c.num_colors() <= 6);
    }

    #[test]
    fn compact_renumbers_by_first_use() {
        let c = EdgeColoring::new(5, vec![5, 2, 5, 4]).unwrap();
        assert_eq!(compact(&c).colors(), &[1, 2, 1, 3]);
    }
}
