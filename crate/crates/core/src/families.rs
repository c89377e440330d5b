//! Deterministic labeled constructions of the graph families used throughout.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Outer cycle `0..5`, spokes `i, i+5`, inner pentagram on `5..10`.
    Petersen,
    /// `W_n = C_{n−1} ∨ K₁`; rim `0..n−1`, hub `n−1`.
    Wheel(usize),
    /// `m × n` grid, vertex `(i, j)` at index `i·n + j`.
    Grid(usize, usize),
    Complete(usize),
    /// Parts are laid out consecutively in the given order.
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,n−1}` on `n` vertices, center `0`.
    Star(usize),
    Path(usize),
    Cycle(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let bad = |what: String| Err(Error::InvalidParameter(what));
        match *self {
            Family::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                }
                for i in 0..5 {
                    edges.push((i, i + 5));
                }
                for i in 0..5 {
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::new(10, edges)
            }
            Family::Wheel(n) => {
                if n < 4 {
                    return bad(format!("wheel needs n >= 4, got {n}"));
                }
                let rim = n - 1;
                let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
                edges.extend((0..rim).map(|i| (i, rim)));
                Graph::new(n, edges)
            }
            Family::Grid(m, n) => {
                if m < 1 || n < 1 {
                    return bad(format!("grid needs m, n >= 1, got {m}x{n}"));
                }
                let mut edges = Vec::new();
                for i in 0..m {
                    for j in 0..n {
                        let v = i * n + j;
                        if j + 1 < n {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < m {
                            edges.push((v, v + n));
                        }
                    }
                }
                Graph::new(m * n, edges)
            }
            Family::Complete(n) => {
                if n < 1 {
                    return bad("complete graph needs n >= 1".into());
                }
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::new(n, edges)
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.len() < 2 || parts.contains(&0) {
                    return bad(format!("complete multipartite needs >= 2 nonempty parts, got {parts:?}"));
                }
                let mut part_of = Vec::new();
                for (p, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat(p).take(size));
                }
                let n = part_of.len();
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if part_of[u] != part_of[v] {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, edges)
            }
            Family::Star(n) => {
                if n < 2 {
                    return bad(format!("star needs n >= 2, got {n}"));
                }
                Graph::new(n, (1..n).map(|v| (0, v)).collect())
            }
            Family::Path(n) => {
                if n < 1 {
                    return bad("path needs n >= 1".into());
                }
                Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
                Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Petersen => write!(f, "petersen"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Grid(m, n) => write!(f, "grid:{m},{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite:{}", parts.join(","))
            }
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
        }
    }
}

/// Parses `name` or `name:p1,p2,...`, e.g. `petersen`, `wheel:6`, `grid:2,3`,
/// `complete_multipartite:1,2,2`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name.trim(), args.trim()),
            None => (s.trim(), ""),
        };
        let params: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidParameter(format!("bad family parameter {p:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let family = match name {
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "wheel" => {
                arity(1)?;
                Family::Wheel(params[0])
            }
            "grid" => {
                arity(2)?;
                Family::Grid(params[0], params[1])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_multipartite" | "multipartite" => Family::CompleteMultipartite(params),
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        };
        family.build()?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(f: Family) -> (usize, usize) {
        let g = f.build().unwrap();
        (g.vertex_count(), g.edge_count())
    }

    #[test]
    fn sizes() {
        assert_eq!(size(Family::Petersen), (10, 15));
        assert_eq!(size(Family::Grid(2, 3)), (6, 7));
        for (m, n) in [(1, 1), (1, 5), (3, 4), (4, 4)] {
            assert_eq!(size(Family::Grid(m, n)), (m * n, m * (n - 1) + n * (m - 1)));
        }
        assert_eq!(size(Family::Wheel(6)), (6, 10));
        assert_eq!(size(Family::Complete(5)), (5, 10));
        assert_eq!(size(Family::CompleteMultipartite(vec![2, 3])), (5, 6));
    }

    #[test]
    fn multipartite_1_2_is_p3() {
        let g = Family::CompleteMultipartite(vec![1, 2]).build().unwrap();
        assert_eq!(g.edge_set(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn degree_sequences_match_closed_forms() {
        let wheel = Family::Wheel(7).build().unwrap();
        assert_eq!(wheel.degree(6), 6);
        assert!((0..6).all(|v| wheel.degree(v) == 3));

        let parts = vec![1, 2, 3];
        let g = Family::CompleteMultipartite(parts.clone()).build().unwrap();
        let expected: Vec<usize> = parts.iter().flat_map(|&p| std::iter::repeat(6 - p).take(p)).collect();
        assert_eq!(g.degree_profile().degrees, expected);

        let grid = Family::Grid(3, 4).build().unwrap();
        let corners = (0..12).filter(|&v| grid.degree(v) == 2).count();
        let interior = (0..12).filter(|&v| grid.degree(v) == 4).count();
        assert_eq!((corners, interior), (4, 2));
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(Family::Wheel(3).build().is_err());
        assert!(Family::Grid(0, 3).build().is_err());
        assert!(Family::CompleteMultipartite(vec![3]).build().is_err());
        assert!(Family::Cycle(2).build().is_err());
    }

    #[test]
    fn parses_specs() {
        assert_eq!("petersen".parse::<Family>().unwrap(), Family::Petersen);
        assert_eq!("wheel:6".parse::<Family>().unwrap(), Family::Wheel(6));
        assert_eq!("grid:2,3".parse::<Family>().unwrap(), Family::Grid(2, 3));
        assert_eq!(
            "complete_multipartite:1,2".parse::<Family>().unwrap(),
            Family::CompleteMultipartite(vec![1, 2])
        );
        assert!("wheel:3".parse::<Family>().is_err());
        assert!("grid:2".parse::<Family>().is_err());
        assert!("dodecahedron".parse::<Family>().is_err());
        for f in [Family::Petersen, Family::Grid(2, 5), Family::CompleteMultipartite(vec![1, 1, 2])] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
