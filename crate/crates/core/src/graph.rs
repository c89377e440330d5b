//! Loopless multigraphs with dense vertex and edge indices.
//!
//! Vertices are `0..n` and edge ids are `0..m` in insertion order. Parallel
//! edges are allowed and distinguished by id; operations that only make sense
//! for simple graphs check for parallels and fail instead of deduplicating.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge id), ascending by edge id
    adj: Vec<Vec<(usize, usize)>>,
}

/// A graph derived from a parent together with its index correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent vertex of vertex `i`.
    pub vertices: Vec<usize>,
    /// `edges[e]` is the parent edge id of edge `e`.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
}

/// The set of edges incident with one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeStar {
    pub center: usize,
    pub edges: Vec<usize>,
}

/// A line graph with the map from its vertices back to edges of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edge_of[x]` is the source edge id represented by line-graph vertex `x`.
    pub edge_of: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { edge: id, vertex: a });
            }
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incidences of `v` as `(neighbor, edge id)`, ascending by edge id.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn star(&self, v: usize) -> EdgeStar {
        EdgeStar { center: v, edges: self.adj[v].iter().map(|&(_, e)| e).collect() }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        DegreeProfile { degrees, max, min }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|&&(w, _)| w == v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = vec![usize::MAX; self.n];
        for v in 0..self.n {
            for &(w, _) in &self.adj[v] {
                if seen[w] == v {
                    return false;
                }
                seen[w] = v;
            }
        }
        true
    }

    pub(crate) fn require_simple(&self, op: &'static str) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::NotSimple { op })
        }
    }

    pub(crate) fn require_connected(&self, op: &'static str) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected { op })
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Component label per vertex plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// The empty graph and K₁ count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Whether `u` and `v` stay connected once the edges flagged in `removed` are deleted.
    pub fn connected_avoiding(&self, u: usize, v: usize, removed: &[bool]) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &(y, e) in &self.adj[x] {
                if !removed[e] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Vertices are renumbered in the order given; edges keep their relative order.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        let mut parent_edges = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                edges.push((index[a], index[b]));
                parent_edges.push(id);
            }
        }
        Subgraph {
            graph: Graph::new(vertices.len(), edges).expect("induced subgraph is loopless"),
            vertices: vertices.to_vec(),
            edges: parent_edges,
        }
    }

    pub fn remove_vertex(&self, v: usize) -> Subgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Spanning subgraph on the given edge ids, with vertices restricted to their endpoints
    /// (in ascending order).
    pub fn edge_induced(&self, edge_ids: &[usize]) -> Subgraph {
        let mut used = vec![false; self.n];
        for &e in edge_ids {
            let (a, b) = self.edges[e];
            used[a] = true;
            used[b] = true;
        }
        let vertices: Vec<usize> = (0..self.n).filter(|&v| used[v]).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        let edges = ids.iter().map(|&e| (index[self.edges[e].0], index[self.edges[e].1])).collect();
        Subgraph {
            graph: Graph::new(vertices.len(), edges).expect("edge subgraph is loopless"),
            vertices,
            edges: ids,
        }
    }

    /// Same vertex set, keeping only the listed edges (ids renumbered in ascending order).
    pub fn spanning(&self, edge_ids: &[usize]) -> Subgraph {
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let edges = ids.iter().map(|&e| self.edges[e]).collect();
        Subgraph {
            graph: Graph::new(self.n, edges).expect("spanning subgraph is loopless"),
            vertices: (0..self.n).collect(),
            edges: ids,
        }
    }

    /// Induced subgraph on the vertices of maximum degree.
    pub fn max_degree_subgraph(&self) -> Result<Subgraph> {
        self.require_simple("max_degree_subgraph")?;
        let max = self.max_degree();
        let top: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == max).collect();
        Ok(self.induced(&top))
    }

    pub fn complement(&self) -> Result<Graph> {
        self.require_simple("complement")?;
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges)
    }

    pub fn line_graph(&self) -> Result<LineGraph> {
        self.require_simple("line_graph")?;
        let mut edges = Vec::new();
        for v in 0..self.n {
            let star = &self.adj[v];
            for i in 0..star.len() {
                for j in i + 1..star.len() {
                    let (a, b) = (star[i].1, star[j].1);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        let graph = Graph::new(self.edges.len(), edges)?;
        Ok(LineGraph { graph, edge_of: (0..self.edges.len()).collect() })
    }

    /// Edges with normalized endpoints `(min, max)`, sorted; handy for comparing graphs.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        out.sort_unstable();
        out
    }
}
