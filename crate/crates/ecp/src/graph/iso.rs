//! Graph isomorphism and automorphism search by backtracking.
//!
//! Everything this crate needs isomorphism for lives on at most a dozen
//! vertices (special-graph detection, uniqueness-up-to-permutation tests,
//! census deduplication), so a permutation search with degree and
//! partial-adjacency pruning is entirely adequate and avoids a canonical-
//! labelling dependency. Sizes beyond the configured bound are refused
//! rather than attempted.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for isomorphism search.
#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    /// Largest vertex count the search will accept.
    pub max_n: usize,
    /// Node budget for the backtracking search.
    pub budget: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { max_n: 12, budget: 10_000_000 }
    }
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    /// Vertices of `a` in assignment order (decreasing degree).
    order: Vec<usize>,
    /// Partial map: `image[u]` is the image of `u` in `b`, or `usize::MAX`.
    image: Vec<usize>,
    used: u64,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(a: &'a Graph, b: &'a Graph, budget: u64) -> Search<'a> {
        let mut order: Vec<usize> = (0..a.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
        Search { a, b, order, image: vec![usize::MAX; a.n()], used: 0, nodes: 0, budget }
    }

    /// Extend the partial map from position `depth`; on a complete map call
    /// `found`, which returns `true` to stop the search (first-witness mode).
    fn run(&mut self, depth: usize, found: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(found(&self.image));
        }
        let u = self.order[depth];
        let du = self.a.degree(u);
        for w in 0..self.b.n() {
            if self.used >> w & 1 == 1 || self.b.degree(w) != du {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted {
                    nodes: self.nodes,
                    context: "isomorphism search".into(),
                });
            }
            let consistent = self.order[..depth].iter().all(|&u2| {
                self.a.has_edge(u, u2) == self.b.has_edge(w, self.image[u2])
            });
            if !consistent {
                continue;
            }
            self.image[u] = w;
            self.used |= 1 << w;
            let stop = self.run(depth + 1, found)?;
            self.image[u] = usize::MAX;
            self.used &= !(1 << w);
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn check_size(a: &Graph, opts: &IsoOptions) -> Result<()> {
    if a.n() > opts.max_n {
        return Err(Error::IsoTooLarge { n: a.n(), bound: opts.max_n });
    }
    Ok(())
}

/// A vertex bijection `p` with `a.has_edge(u,v) ⇔ b.has_edge(p[u],p[v])`,
/// or `None` when the graphs are not isomorphic.
pub fn find_isomorphism(a: &Graph, b: &Graph, opts: &IsoOptions) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() {
        return Ok(None);
    }
    check_size(a, opts)?;
    if a.edge_count() != b.edge_count() || degree_multiset(a) != degree_multiset(b) {
        return Ok(None);
    }
    let mut witness = None;
    let mut search = Search::new(a, b, opts.budget);
    search.run(0, &mut |image| {
        witness = Some(image.to_vec());
        true
    })?;
    Ok(witness)
}

pub fn is_isomorphic(a: &Graph, b: &Graph, opts: &IsoOptions) -> Result<bool> {
    Ok(find_isomorphism(a, b, opts)?.is_some())
}

/// Every automorphism of `g`, as permutations in the [`find_isomorphism`]
/// convention. The identity is always present.
pub fn automorphisms(g: &Graph, opts: &IsoOptions) -> Result<Vec<Vec<usize>>> {
    check_size(g, opts)?;
    let mut out = Vec::new();
    let mut search = Search::new(g, g, opts.budget);
    search.run(0, &mut |image| {
        out.push(image.to_vec());
        false
    })?;
    out.sort();
    Ok(out)
}

fn degree_multiset(g: &Graph) -> Vec<usize> {
    let mut ds: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    ds.sort_unstable();
    ds
}
