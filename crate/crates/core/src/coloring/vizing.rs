//! Misra–Gries fan rotation: a proper edge coloring of a simple graph with at most Δ+1 colors.

use super::EdgeColoring;
use crate::error::Result;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct State<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    // at[v][c]: the edge at v colored c
    at: Vec<Vec<usize>>,
}

impl State<'_> {
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn first_free(&self, v: usize) -> usize {
        self.at[v].iter().position(|&e| e == NONE).expect("Δ+1 colors leave one free at every vertex")
    }

    fn set(&mut self, e: usize, c: usize) {
        let (a, b) = self.g.endpoints(e);
        self.color[e] = c;
        self.at[a][c] = e;
        self.at[b][c] = e;
    }

    fn unset(&mut self, e: usize) {
        let c = self.color[e];
        if c == NONE {
            return;
        }
        let (a, b) = self.g.endpoints(e);
        self.at[a][c] = NONE;
        self.at[b][c] = NONE;
        self.color[e] = NONE;
    }

    fn edge_between(&self, u: usize, x: usize) -> usize {
        self.g.incident(u).iter().find(|&&(w, _)| w == x).map(|&(_, e)| e).expect("fan vertices are neighbours")
    }

    fn maximal_fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.g.vertex_count()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.incident(u).iter().find(|&&(x, e)| {
                !in_fan[x] && self.color[e] != NONE && self.is_free(last, self.color[e])
            });
            match next {
                Some(&(x, _)) => {
                    in_fan[x] = true;
                    fan.push(x);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the alternating path leaving `u`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut x = u;
        let mut want = d;
        let mut prev = NONE;
        loop {
            let e = self.at[x][want];
            if e == NONE || e == prev {
                break;
            }
            path.push(e);
            prev = e;
            x = self.g.opposite(e, x);
            want = if want == d { c } else { d };
        }
        let old: Vec<usize> = path.iter().map(|&e| self.color[e]).collect();
        for &e in &path {
            self.unset(e);
        }
        for (&e, &oc) in path.iter().zip(&old) {
            self.set(e, if oc == c { d } else { c });
        }
    }

    /// Last vertex of the alternating path leaving `x` with colors `first`, `second`, ….
    fn path_end(&self, x: usize, first: usize, second: usize) -> usize {
        let (mut x, mut want, mut prev) = (x, first, NONE);
        loop {
            let e = self.at[x][want];
            if e == NONE || e == prev {
                return x;
            }
            prev = e;
            x = self.g.opposite(e, x);
            want = if want == first { second } else { first };
        }
    }

    /// Moves `e` off color `top` by one alternating-path swap, when that works.
    fn lower(&mut self, e: usize, top: usize) {
        let (u, v) = self.g.endpoints(e);
        self.unset(e);
        let free_below = |s: &Self, x: usize| (0..top).find(|&c| s.is_free(x, c));
        let (Some(a), Some(b)) = (free_below(self, u), free_below(self, v)) else {
            self.set(e, top);
            return;
        };
        if self.is_free(v, a) {
            self.set(e, a);
        } else if self.is_free(u, b) {
            self.set(e, b);
        } else if self.path_end(v, a, b) != u {
            self.invert_path(v, b, a);
            self.set(e, a);
        } else {
            self.set(e, top);
        }
    }

    fn color_edge(&mut self, e: usize) {
        let (u, v) = self.g.endpoints(e);
        let fan = self.maximal_fan(u, v);
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        // first prefix of the (possibly broken) fan that ends at a vertex where d is free
        let mut w = NONE;
        for i in 0..fan.len() {
            if i > 0 {
                let f = self.edge_between(u, fan[i]);
                if self.color[f] == NONE || !self.is_free(fan[i - 1], self.color[f]) {
                    break;
                }
            }
            if self.is_free(fan[i], d) {
                w = i;
                break;
            }
        }
        assert!(w != NONE, "fan rotation always finds a vertex with d free");
        let shifted: Vec<usize> = (0..w).map(|j| self.color[self.edge_between(u, fan[j + 1])]).collect();
        for &x in &fan[1..=w] {
            let f = self.edge_between(u, x);
            self.unset(f);
        }
        for (j, &c) in shifted.iter().enumerate() {
            let f = self.edge_between(u, fan[j]);
            self.set(f, c);
        }
        let f = self.edge_between(u, fan[w]);
        self.set(f, d);
    }
}

/// Proper coloring of a simple graph with at most Δ(G)+1 colors.
pub fn vizing_proper_coloring(g: &Graph) -> Result<EdgeColoring> {
    g.require_simple("vizing_proper_coloring")?;
    let palette = g.max_degree() + 1;
    let mut state = State {
        g,
        color: vec![NONE; g.edge_count()],
        at: vec![vec![NONE; palette]; g.vertex_count()],
    };
    for e in 0..g.edge_count() {
        state.color_edge(e);
    }
    if palette > 1 {
        for e in 0..g.edge_count() {
            if state.color[e] == palette - 1 {
                state.lower(e, palette - 1);
            }
        }
    }
    let coloring = EdgeColoring::from_zero_based(&state.color);
    debug_assert!(coloring.is_proper(g));
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use proptest::prelude::*;

    fn used(f: Family) -> usize {
        let g = f.build().unwrap();
        let c = vizing_proper_coloring(&g).unwrap();
        assert!(c.is_proper(&g));
        assert!(c.num_colors() <= g.max_degree() + 1);
        c.distinct_colors()
    }

    #[test]
    fn small_families() {
        assert_eq!(used(Family::Cycle(6)), 2);
        assert_eq!(used(Family::Cycle(5)), 3);
        assert_eq!(used(Family::Petersen), 4);
        assert!(used(Family::Complete(7)) <= 7);
        assert_eq!(used(Family::Grid(4, 5)), 4);
        assert_eq!(used(Family::CompleteMultipartite(vec![3, 4])), 4);
    }

    #[test]
    fn rejects_multigraph() {
        let fat = Graph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert!(vizing_proper_coloring(&fat).is_err());
    }

    proptest! {
        #[test]
        fn never_exceeds_delta_plus_one(n in 1usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let c = vizing_proper_coloring(&g).unwrap();
            prop_assert!(c.is_proper(&g));
            prop_assert!(c.num_colors() <= g.max_degree() + 1);
        }
    }
}
