//! Finite simple graphs and the two edge operations the psi recursion is
//! built from.
//!
//! Vertices are the contiguous indices `0..n`. Graph values are plain data:
//! every operation returns a fresh graph and never mutates its input.

mod canon;
mod enumerate;
mod graph6;
mod io;

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalKey, MAX_CANON_ORDER};
pub use enumerate::{enumerate_graphs, MAX_ENUM_ORDER};
pub use graph6::{parse_graph6, write_graph6, MAX_GRAPH6_ORDER};
pub use io::{detect_graph_format, parse_edge_list, parse_graph6_lines, parse_graphs, write_edge_list, GraphFormat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("loop at vertex {0}: simple graphs have no loops")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("graph order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
}

/// Error for textual graph encodings; `line` is 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

/// An undirected edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Fails on a loop.
    pub fn new(a: usize, b: usize) -> Result<Edge, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A finite simple graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

/// An induced subgraph together with the vertex correspondence to its parent.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `kept[new] = old`; increasing.
    pub kept: Vec<usize>,
}

impl Induced {
    /// Position of parent vertex `old` in the subgraph, if it survived.
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.kept.binary_search(&old).ok()
    }
}

impl Graph {
    /// The discrete graph on `n` vertices. `Graph::discrete(0)` is the empty graph.
    pub fn discrete(n: usize) -> Graph {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn empty() -> Graph {
        Graph::discrete(0)
    }

    /// Builds a graph from endpoint pairs. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::discrete(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::discrete(n);
        for v in 0..n {
            for u in 0..v {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let e = Edge::new(a, b)?;
        self.check_vertex(e.v)?;
        self.insert(e.u, e.v);
        Ok(())
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex, n: self.n() })
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && b < self.n() && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| Edge { u, v }))
    }

    /// True iff there are no edges. The empty graph is vacuously discrete.
    pub fn is_discrete(&self) -> bool {
        self.adj.iter().all(|row| row.is_clear())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|row| row.is_clear())
    }

    /// `G - e`: same vertices, edge `e` removed.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.u].set(e.v, false);
        g.adj[e.v].set(e.u, false);
        Ok(g)
    }

    /// `G \ e`: the subgraph induced by the vertices adjacent to neither
    /// endpoint of `e`. Both endpoints are always dropped.
    pub fn exclude_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.exclude_edge_mapped(e).map(|ind| ind.graph)
    }

    pub fn exclude_edge_mapped(&self, e: Edge) -> Result<Induced, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut closed = self.adj[e.u].clone();
        closed.union_with(&self.adj[e.v]);
        let keep: Vec<usize> = (0..self.n()).filter(|&w| !closed.contains(w)).collect();
        Ok(self.induced_unchecked(keep))
    }

    /// Subgraph induced on `vertices`, relabeled `0..|S|` in increasing order.
    /// Duplicates in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Induced, GraphError> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&last) = keep.last() {
            self.check_vertex(last)?;
        }
        Ok(self.induced_unchecked(keep))
    }

    fn induced_unchecked(&self, kept: Vec<usize>) -> Induced {
        let mut graph = Graph::discrete(kept.len());
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                if self.adj[a].contains(b) {
                    graph.insert(i, j);
                }
            }
        }
        Induced { graph, kept }
    }

    /// Applies `perm`, where `perm[old] = new`. Panics unless `perm` is a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::discrete(self.n());
        for e in self.edges() {
            g.insert(perm[e.u].min(perm[e.v]), perm[e.u].max(perm[e.v]));
        }
        g
    }

    /// Disjoint union, with `other` shifted past this graph's vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = Graph::discrete(shift + other.n());
        for e in self.edges() {
            g.insert(e.u, e.v);
        }
        for e in other.edges() {
            g.insert(e.u + shift, e.v + shift);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        f.write_str("])")
    }
}
