//! Simple graphs, multigraphs, and the edge index used to name line-graph
//! vertices.
//!
//! Vertices are dense integers `0..n` with `n ≤ 64`, so a neighbourhood is a
//! single `u64` bitmask and most whole-graph scans are word operations. A
//! [`Multigraph`] stores a nonnegative multiplicity `q(u,v)` per unordered
//! pair; a [`Graph`] embeds as the multigraph with `q ∈ {0,1}`. Multiplicity
//! only matters to clique partitions and representations, so the two types
//! stay separate and the simple-graph path stays lean.

use crate::error::{Error, Result};

pub mod format;
pub mod iso;

/// Hard cap on vertex count: one machine word of adjacency per vertex.
pub const MAX_N: usize = 64;

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// A finite, undirected, simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v]` is the neighbourhood of `v` as a bitmask. Symmetric, zero
    /// diagonal.
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from an explicit edge list. Duplicate edges are rejected so that
    /// accidental double entries in hand-written corpora surface early.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if g.has_edge(u, v) {
                return Err(Error::Invalid(format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as sorted pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut rest = self.adj[u] & !((1u64 << (u + 1)).wrapping_sub(1));
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertices of degree zero, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// The subgraph induced by `s`, relabelled onto `0..|s|` in increasing
    /// vertex order.
    pub fn induced(&self, s: &[usize]) -> Result<Graph> {
        let mut verts = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != s.len() {
            return Err(Error::Invalid("duplicate vertex in induced set".into()));
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// `self + other`: vertex-disjoint union, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Apply a vertex permutation: the image has edge `(p[u], p[v])` for every
    /// edge `(u, v)`.
    pub fn permuted(&self, p: &[usize]) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::Invalid(format!(
                "permutation length {} does not match n = {}",
                p.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &x in p {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { v: x, n: self.n });
            }
            seen |= 1 << x;
        }
        if seen.count_ones() as usize != self.n {
            return Err(Error::Invalid("not a permutation".into()));
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(p[u], p[v])?;
        }
        Ok(g)
    }

    /// Connected components as vertex bitmasks, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    grown |= self.adj[u];
                    rest &= rest - 1;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// True when the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Multigraph
// ---------------------------------------------------------------------------

/// A multigraph: a nonnegative multiplicity `q(u,v)` on each unordered pair.
///
/// `q(u,v)` is the number of times the pair must be covered by a clique
/// partition of this host. No self-loops: `q(u,u) = 0` by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multigraph {
    n: usize,
    /// Upper triangle, row-packed: entry for `u < v` at `pair_index(n, u, v)`.
    q: Vec<u32>,
}

/// Index of unordered pair `u < v` in a row-packed upper triangle.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl Multigraph {
    /// The multigraph on `n` vertices with all multiplicities zero.
    pub fn new(n: usize) -> Result<Multigraph> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        Ok(Multigraph { n, q: vec![0; n * n.saturating_sub(1) / 2] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u < self.n && v < self.n);
        if u == v {
            return 0;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.q[pair_index(self.n, a, b)]
    }

    pub fn set_q(&mut self, u: usize, v: usize, mult: u32) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.q[pair_index(self.n, a, b)] = mult;
        Ok(())
    }

    /// Sum of all multiplicities (the edge count, with multiplicity).
    pub fn total_multiplicity(&self) -> u64 {
        self.q.iter().map(|&m| m as u64).sum()
    }

    /// True when every multiplicity is 0 or 1.
    pub fn is_simple(&self) -> bool {
        self.q.iter().all(|&m| m <= 1)
    }

    /// Vertices incident to no pair of positive multiplicity, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| (0..self.n).all(|u| self.q(u, v) == 0))
            .collect()
    }

    /// The simple graph whose edges are the pairs with `q ≥ 1`. Adjacency in
    /// a multigraph host means exactly this.
    pub fn support(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n already validated");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.q(u, v) >= 1 {
                    g.add_edge(u, v).expect("validated range, no loop");
                }
            }
        }
        g
    }

    /// Pairs with positive multiplicity, lexicographic, with their `q`.
    pub fn weighted_pairs(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.q(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Multigraph {
        let mut m = Multigraph::new(g.n()).expect("graph n already validated");
        for (u, v) in g.edges() {
            m.set_q(u, v, 1).expect("edge endpoints in range");
        }
        m
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}, q={:?})", self.n, self.weighted_pairs())
    }
}

// ---------------------------------------------------------------------------
// EdgeIndex and the line graph
// ---------------------------------------------------------------------------

/// Names the edges of a graph `0..|E|` in lexicographic order, so they can
/// serve as the vertices of its line graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    edges: Vec<(usize, usize)>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> EdgeIndex {
        EdgeIndex { edges: g.edges() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The edge named `i`, as a sorted pair.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// The index of edge `{u, v}`, if present.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// The line graph `L(g)`: one vertex per edge of `g`, adjacent when the edges
/// share an endpoint. The [`EdgeIndex`] records which edge each vertex names.
pub fn line_graph(g: &Graph) -> Result<(Graph, EdgeIndex)> {
    let idx = EdgeIndex::new(g);
    if idx.is_empty() {
        return Err(Error::Invalid("line graph of an edgeless graph".into()));
    }
    let mut lg = Graph::new(idx.len())?;
    for i in 0..idx.len() {
        let (a, b) = idx.edge(i);
        for j in i + 1..idx.len() {
            let (c, d) = idx.edge(j);
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j)?;
            }
        }
    }
    Ok((lg, idx))
}
