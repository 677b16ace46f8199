//! Named graph constructors and small census generators used across tests,
//! examples, and the theorem-verification suites.
//!
//! Everything here is deterministic: constructors lay vertices out in a fixed
//! order, and the census generator emits isomorphism-class representatives in
//! a reproducible order.

use crate::error::Result;
use crate::graph::{iso, Graph};

// ---------------------------------------------------------------------------
// Classical families
// ---------------------------------------------------------------------------

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The path `P_n` on `n` vertices (`n − 1` edges): `0 − 1 − … − n−1`.
pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// The cycle `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(crate::error::Error::Invalid(format!(
            "cycle needs ≥ 3 vertices, got {n}"
        )));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// The star `K_{1,m}`: center `0`, leaves `1..=m`.
pub fn star(m: usize) -> Result<Graph> {
    let mut g = Graph::new(m + 1)?;
    for v in 1..=m {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// The complete bipartite graph `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::new(n)?;
    let mut starts = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    for (i, &a) in parts.iter().enumerate() {
        for (j, &b) in parts.iter().enumerate().skip(i + 1) {
            for u in starts[i]..starts[i] + a {
                for v in starts[j]..starts[j] + b {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// The matching `kK_2`: `k` disjoint edges.
pub fn matching(k: usize) -> Result<Graph> {
    let mut g = Graph::new(2 * k)?;
    for i in 0..k {
        g.add_edge(2 * i, 2 * i + 1)?;
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Named small graphs
// ---------------------------------------------------------------------------

/// The paw: triangle `{0,1,2}` with a pendant vertex `3` on `2`.
pub fn paw() -> Result<Graph> {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])
}

/// The diamond `K_4 − e`: `K_4` on `{0,1,2,3}` minus the edge `{2,3}`.
pub fn diamond() -> Result<Graph> {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// `3K_2 ∨ K_1`: three disjoint edges all joined to a seventh vertex.
pub fn three_k2_join_k1() -> Result<Graph> {
    matching(3)?.join(&Graph::new(1)?)
}

/// The double star `S_{a,b}`: adjacent centers `0, 1`; `a` leaves on `0`,
/// `b` leaves on `1`.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(2 + a + b)?;
    g.add_edge(0, 1)?;
    for i in 0..a {
        g.add_edge(0, 2 + i)?;
    }
    for i in 0..b {
        g.add_edge(1, 2 + a + i)?;
    }
    Ok(g)
}

/// The broom: path `0 − 1 − 2` with two extra leaves `3, 4` on `2`.
pub fn broom() -> Result<Graph> {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)])
}

/// The two-broom: path `0 − 1 − 2` with two leaves on each end (`3, 4` on
/// `0`; `5, 6` on `2`).
pub fn two_broom() -> Result<Graph> {
    Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])
}

/// The dumbbell: triangles `{0,1,2}` and `{3,4,5}` joined by the edge
/// `{2,3}`.
pub fn dumbbell() -> Result<Graph> {
    Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)],
    )
}

/// Triangle `{0,1,2}` with a two-edge tail `2 − 3 − 4`.
pub fn triangle_with_tail() -> Result<Graph> {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
}

/// The tadpole on `C_4`: cycle `{0,1,2,3}` with a pendant vertex `4` on `0`.
pub fn tadpole4() -> Result<Graph> {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
}

// ---------------------------------------------------------------------------
// Census generation
// ---------------------------------------------------------------------------

/// All isomorphism classes of graphs with no isolated vertices and at most
/// `max_edges` edges, one representative each, grouped by edge count
/// (`result[m]` holds the classes with exactly `m` edges).
///
/// Built by breadth-first edge extension: a graph with `m + 1` edges and no
/// isolated vertices always arises from one with `m` edges by adding an edge
/// between existing vertices, an edge to one fresh vertex, or a fresh
/// disjoint edge. Deduplication is by explicit isomorphism testing, which is
/// cheap at this scale (the class counts for `m = 0..6` are 1, 1, 2, 5, 11,
/// 26, 68).
pub fn graphs_without_isolates_up_to(max_edges: usize) -> Result<Vec<Vec<Graph>>> {
    let opts = iso::IsoOptions { max_n: 2 * max_edges.max(1), budget: 10_000_000 };
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(0)?]];
    for _ in 0..max_edges {
        let mut next: Vec<Graph> = Vec::new();
        for g in levels.last().unwrap() {
            let n = g.n();
            let mut candidates = Vec::new();
            // Edge between existing vertices.
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v)?;
                        candidates.push(h);
                    }
                }
            }
            // Edge from an existing vertex to one fresh vertex.
            for u in 0..n {
                let mut h = Graph::new(n + 1)?;
                for (a, b) in g.edges() {
                    h.add_edge(a, b)?;
                }
                h.add_edge(u, n)?;
                candidates.push(h);
            }
            // A fresh disjoint edge.
            {
                let mut h = Graph::new(n + 2)?;
                for (a, b) in g.edges() {
                    h.add_edge(a, b)?;
                }
                h.add_edge(n, n + 1)?;
                candidates.push(h);
            }
            for c in candidates {
                let mut fresh = true;
                for seen in &next {
                    if iso::is_isomorphic(seen, &c, &opts)? {
                        fresh = false;
                        break;
                    }
                }
                if fresh {
                    next.push(c);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}
