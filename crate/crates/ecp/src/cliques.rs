//! Cliques, edge clique partitions, the clique partition number, and
//! exhaustive partition enumeration.
//!
//! A clique partition of a multigraph host covers every unordered pair
//! `{u,v}` by exactly `q(u,v)` cliques. Isolated vertices must be picked up
//! by trivial (one-vertex) cliques; since extra trivial cliques never help,
//! every partition this module produces is *trivially reduced* — exactly one
//! trivial clique per isolated vertex and none elsewhere.
//!
//! The search engine branches on the lexicographically smallest under-covered
//! pair. A clique usable at that branch necessarily has that pair as its two
//! smallest vertices (any smaller member would need residual coverage on an
//! earlier pair, which is already exhausted), so candidates are generated
//! directly in that shape and each partition multiset is reached exactly
//! once, with no seen-set. Repeated branches on the same pair (multiplicity
//! `q ≥ 2`) are forced to pick cliques in non-decreasing lexicographic
//! order, which is what keeps duplicate multisets out in the multigraph
//! case.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::linear;

// ---------------------------------------------------------------------------
// Clique
// ---------------------------------------------------------------------------

/// A sorted list of distinct vertices intended as a clique of some host.
///
/// Adjacency is a property of a host graph, so it is checked by the
/// operations that pair a clique with a host, not by the constructor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Result<Clique> {
        if vertices.is_empty() {
            return Err(Error::Invalid("empty clique".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("duplicate vertex in clique {vertices:?}")));
        }
        Ok(Clique(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty cliques
    }

    /// A trivial clique is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Unordered vertex pairs inside the clique, lexicographic.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let vs = &self.0;
        (0..vs.len()).flat_map(move |i| (i + 1..vs.len()).map(move |j| (vs[i], vs[j])))
    }

    /// True when every internal pair is adjacent in `g`.
    pub fn is_clique_in(&self, g: &Graph) -> bool {
        self.0.iter().all(|&v| v < g.n()) && self.pairs().all(|(u, v)| g.has_edge(u, v))
    }
}

impl Serialize for Clique {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All cliques of `g` with at least `min_size` vertices, in lexicographic
/// order of their sorted vertex lists.
pub fn enumerate_cliques(g: &Graph, min_size: usize) -> Result<Vec<Clique>> {
    if min_size < 1 {
        return Err(Error::Invalid("min_size must be ≥ 1".into()));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    for v in 0..g.n() {
        extend_cliques(g, v, &mut current, min_size, &mut out);
    }
    Ok(out)
}

fn extend_cliques(g: &Graph, v: usize, current: &mut Vec<usize>, min_size: usize, out: &mut Vec<Clique>) {
    current.push(v);
    if current.len() >= min_size {
        out.push(Clique(current.clone()));
    }
    // Extensions must exceed v and be adjacent to everything chosen so far;
    // pre-order emission keeps the overall order lexicographic.
    let mut common = mask_above(v);
    for &u in current.iter() {
        common &= g.neighbors(u);
    }
    let mut rest = common;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        extend_cliques(g, w, current, min_size, out);
    }
    current.pop();
}

/// Bits strictly above `v`.
fn mask_above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Bits `0..n`.
fn low_mask(n: usize) -> u64 {
    u64::MAX.checked_shr(64 - n as u32).unwrap_or(0)
}

/// The size of a largest clique of `g` (0 for the empty graph).
pub fn max_clique_size(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, allowed: u64, best: &mut usize) {
        if size + allowed.count_ones() as usize <= *best {
            return;
        }
        if allowed == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = allowed.trailing_zeros() as usize;
        grow(g, size + 1, allowed & g.neighbors(v) & !(1 << v), best);
        grow(g, size, allowed & !(1 << v), best);
    }
    let mut best = if g.n() == 0 { 0 } else { 1 };
    grow(g, 0, low_mask(g.n()), &mut best);
    best
}

// ---------------------------------------------------------------------------
// Partition validation
// ---------------------------------------------------------------------------

/// The first reason a clique list fails to be a partition of its host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PartitionViolation {
    /// A listed clique contains a non-adjacent pair.
    NotAClique { clique: Vec<usize>, u: usize, v: usize },
    /// A pair is covered the wrong number of times.
    Coverage { u: usize, v: usize, covered: u32, required: u32 },
    /// An isolated vertex appears in no trivial clique.
    UncoveredIsolated { v: usize },
}

/// Check the clique-partition invariants; `Ok(None)` means valid, and a
/// violation is reported rather than raised (only out-of-range vertices are
/// errors).
pub fn verify_partition(
    host: &Multigraph,
    cliques: &[Clique],
) -> Result<Option<PartitionViolation>> {
    let n = host.n();
    let support = host.support();
    for c in cliques {
        if let Some(&v) = c.vertices().iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { v, n });
        }
        for (u, v) in c.pairs() {
            if !support.has_edge(u, v) {
                return Ok(Some(PartitionViolation::NotAClique {
                    clique: c.vertices().to_vec(),
                    u,
                    v,
                }));
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let covered = cliques
                .iter()
                .filter(|c| {
                    let m = c.mask();
                    m >> u & 1 == 1 && m >> v & 1 == 1
                })
                .count() as u32;
            let required = host.q(u, v);
            if covered != required {
                return Ok(Some(PartitionViolation::Coverage { u, v, covered, required }));
            }
        }
    }
    for v in host.isolated_vertices() {
        let covered = cliques.iter().any(|c| c.is_trivial() && c.vertices() == [v]);
        if !covered {
            return Ok(Some(PartitionViolation::UncoveredIsolated { v }));
        }
    }
    Ok(None)
}

/// `verify_partition` reduced to its boolean.
pub fn is_clique_partition(host: &Multigraph, cliques: &[Clique]) -> Result<bool> {
    Ok(verify_partition(host, cliques)?.is_none())
}

// ---------------------------------------------------------------------------
// CliquePartition
// ---------------------------------------------------------------------------

/// A validated edge clique partition, held in canonical order (each clique
/// sorted, cliques sorted lexicographically — a multiset normal form).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliquePartition {
    cliques: Vec<Clique>,
    host: Multigraph,
}

impl CliquePartition {
    pub fn new(host: Multigraph, mut cliques: Vec<Clique>) -> Result<CliquePartition> {
        if let Some(violation) = verify_partition(&host, &cliques)? {
            return Err(Error::NotAPartition(format!("{violation:?}")));
        }
        cliques.sort();
        Ok(CliquePartition { cliques, host })
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Clique sizes, descending — a quick shape fingerprint.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.cliques.iter().map(Clique::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Serialize as `{"cliques": [[v,…],…]}` (cliques already canonical).
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            cliques: &'a [Clique],
        }
        serde_json::to_string(&Doc { cliques: &self.cliques })
            .expect("serialization of plain data cannot fail")
    }

    /// Parse `{"cliques": …}` against a known host, validating fully.
    pub fn from_json(host: Multigraph, text: &[u8]) -> Result<CliquePartition> {
        #[derive(Deserialize)]
        struct Doc {
            cliques: Vec<Vec<usize>>,
        }
        let doc: Doc = serde_json::from_slice(text)?;
        let cliques = doc
            .cliques
            .into_iter()
            .map(Clique::new)
            .collect::<Result<Vec<_>>>()?;
        CliquePartition::new(host, cliques)
    }
}

// ---------------------------------------------------------------------------
// Partition search
// ---------------------------------------------------------------------------

/// Options shared by [`cp_exact`] and [`enumerate_partitions`].
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Forbid trivial cliques; requires a host with no isolated vertices.
    pub nontrivial_only: bool,
    /// Forbid the clique on all `n` vertices (the "proper" regime: on a
    /// complete host, every clique has at most `n − 1` vertices).
    pub proper_only: bool,
    /// Node budget for the branch-and-bound / enumeration search.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { nontrivial_only: false, proper_only: false, budget: 10_000_000 }
    }
}

struct Engine<'a> {
    host: &'a Multigraph,
    support: Graph,
    n: usize,
    /// Residual multiplicity per pair, row-packed upper triangle.
    residual: Vec<u32>,
    residual_sum: u64,
    /// Hard cap on clique size (from `proper_only`).
    max_clique: usize,
    /// `C(k, 2)` for the largest clique the support graph admits (under the
    /// cap) — the densest coverage a single clique can provide.
    best_pairs_per_clique: u64,
    nodes: u64,
    budget: u64,
    isolated: Vec<usize>,
}

fn pair_slot(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl<'a> Engine<'a> {
    fn new(host: &'a Multigraph, opts: &SearchOptions) -> Result<Engine<'a>> {
        let n = host.n();
        let isolated = host.isolated_vertices();
        if opts.nontrivial_only && !isolated.is_empty() {
            return Err(Error::Invalid(format!(
                "nontrivial_only requires no isolated vertices, found {isolated:?}"
            )));
        }
        let support = host.support();
        let max_clique = if opts.proper_only {
            // A proper clique must omit at least one vertex of the host.
            n.saturating_sub(1).max(1)
        } else {
            n.max(1)
        };
        let omega = max_clique_size(&support).min(max_clique).max(2);
        let mut residual = vec![0u32; n * n.saturating_sub(1) / 2];
        let mut residual_sum = 0u64;
        for (u, v, q) in host.weighted_pairs() {
            residual[pair_slot(n, u, v)] = q;
            residual_sum += u64::from(q);
        }
        Ok(Engine {
            host,
            support,
            n,
            residual,
            residual_sum,
            max_clique,
            best_pairs_per_clique: (omega * (omega - 1) / 2) as u64,
            nodes: 0,
            budget: opts.budget,
            isolated,
        })
    }

    fn tick(&mut self, context: &str) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { nodes: self.nodes, context: context.into() });
        }
        Ok(())
    }

    fn res(&self, u: usize, v: usize) -> u32 {
        self.residual[pair_slot(self.n, u, v)]
    }

    /// Lexicographically smallest pair with positive residual.
    fn first_uncovered(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.res(u, v) > 0 {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Cliques usable at branch pair `(u, v)`: contain `u, v` as their two
    /// smallest vertices, with every internal pair under-covered. Generated
    /// in lexicographic order.
    fn candidates(&mut self, u: usize, v: usize) -> Result<Vec<Clique>> {
        let mut out = Vec::new();
        if self.max_clique < 2 {
            // Size cap below an edge (n = 2 under proper_only): nothing can
            // cover any pair.
            return Ok(out);
        }
        let mut current = vec![u, v];
        // Vertices beyond v adjacent to both ends, pairwise residual ≥ 1.
        let mut allowed = 0u64;
        for w in v + 1..self.n {
            if self.support.has_edge(u, w)
                && self.support.has_edge(v, w)
                && self.res(u, w) >= 1
                && self.res(v, w) >= 1
            {
                allowed |= 1 << w;
            }
        }
        self.extend_candidates(&mut current, allowed, &mut out)?;
        Ok(out)
    }

    fn extend_candidates(
        &mut self,
        current: &mut Vec<usize>,
        allowed: u64,
        out: &mut Vec<Clique>,
    ) -> Result<()> {
        self.tick("candidate generation")?;
        out.push(Clique(current.clone()));
        if current.len() == self.max_clique {
            return Ok(());
        }
        let mut rest = allowed;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next_allowed = rest & self.support.neighbors(w);
            let mut scan = next_allowed;
            while scan != 0 {
                let x = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if self.res(w, x) == 0 {
                    next_allowed &= !(1 << x);
                }
            }
            current.push(w);
            self.extend_candidates(current, next_allowed, out)?;
            current.pop();
        }
        Ok(())
    }

    fn apply(&mut self, c: &Clique, delta: i64) {
        for (u, v) in c.pairs() {
            let slot = pair_slot(self.n, u, v);
            if delta < 0 {
                self.residual[slot] -= 1;
                self.residual_sum -= 1;
            } else {
                self.residual[slot] += 1;
                self.residual_sum += 1;
            }
        }
    }
}

/// The exact clique partition number of `host` under the given options
/// (trivial cliques for isolated vertices included in the count).
pub fn cp_exact(host: &Multigraph, opts: &SearchOptions) -> Result<usize> {
    let mut engine = Engine::new(host, opts)?;
    let trivial = engine.isolated.len();
    // Covering every pair-unit with an edge is always a valid partition, so
    // it seeds the incumbent (for n = 2 under proper_only even that is
    // forbidden and no partition exists at all).
    let edge_partition = usize::try_from(engine.residual_sum).expect("desk-scale hosts");
    if edge_partition == 0 {
        return Ok(trivial);
    }
    if opts.proper_only && host.n() == 2 {
        return Err(Error::Invalid("no proper partition exists on a 2-vertex host".into()));
    }
    fn dfs(
        engine: &mut Engine,
        count: usize,
        prev: Option<&(usize, usize, Clique)>,
        best: &mut usize,
    ) -> Result<()> {
        let Some((u, v)) = engine.first_uncovered() else {
            *best = (*best).min(count);
            return Ok(());
        };
        engine.tick("cp search")?;
        // Admissible bound: each further clique covers at most C(ω, 2)
        // pair-units.
        let lower = count as u64 + engine.residual_sum.div_ceil(engine.best_pairs_per_clique);
        if lower >= *best as u64 {
            return Ok(());
        }
        for c in engine.candidates(u, v)? {
            if let Some((pu, pv, pc)) = prev {
                if (*pu, *pv) == (u, v) && c < *pc {
                    continue; // same-pair runs pick cliques in non-decreasing order
                }
            }
            engine.apply(&c, -1);
            let here = (u, v, c.clone());
            dfs(engine, count + 1, Some(&here), best)?;
            engine.apply(&c, 1);
        }
        Ok(())
    }
    let mut best_found = edge_partition;
    dfs(&mut engine, 0, None, &mut best_found)?;
    Ok(best_found + trivial)
}

/// Every trivially-reduced partition of `host` with at most `max_size`
/// cliques (trivial padding for isolated vertices included in the size),
/// each multiset exactly once, in the engine's deterministic order.
pub fn enumerate_partitions(
    host: &Multigraph,
    max_size: usize,
    opts: &SearchOptions,
) -> Result<Vec<CliquePartition>> {
    let mut engine = Engine::new(host, opts)?;
    let trivial: Vec<Clique> = engine.isolated.iter().map(|&v| Clique(vec![v])).collect();
    if opts.nontrivial_only && !trivial.is_empty() {
        unreachable!("Engine::new rejects this combination");
    }
    let mut out = Vec::new();
    if trivial.len() > max_size {
        return Ok(out);
    }
    fn dfs(
        engine: &mut Engine,
        chosen: &mut Vec<Clique>,
        slack: usize,
        prev: Option<&(usize, usize, Clique)>,
        trivial: &[Clique],
        out: &mut Vec<CliquePartition>,
    ) -> Result<()> {
        let Some((u, v)) = engine.first_uncovered() else {
            let mut cliques: Vec<Clique> = chosen.iter().chain(trivial).cloned().collect();
            cliques.sort();
            out.push(CliquePartition { cliques, host: engine.host.clone() });
            return Ok(());
        };
        if slack == 0 {
            return Ok(());
        }
        engine.tick("partition enumeration")?;
        if engine.residual_sum.div_ceil(engine.best_pairs_per_clique) > slack as u64 {
            return Ok(());
        }
        for c in engine.candidates(u, v)? {
            if let Some((pu, pv, pc)) = prev {
                if (*pu, *pv) == (u, v) && c < *pc {
                    continue;
                }
            }
            engine.apply(&c, -1);
            chosen.push(c.clone());
            let here = (u, v, c);
            dfs(engine, chosen, slack - 1, Some(&here), trivial, out)?;
            let c = chosen.pop().expect("just pushed");
            engine.apply(&c, 1);
        }
        Ok(())
    }
    let slack = max_size - trivial.len();
    let mut chosen = Vec::new();
    dfs(&mut engine, &mut chosen, slack, None, &trivial, &mut out)?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Classification of partitions of complete graphs
// ---------------------------------------------------------------------------

/// Structure of a clique partition of a complete graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum PartitionClass {
    /// The one-clique partition.
    SingleClique,
    /// One clique on `n − 1` vertices plus `n − 1` edges through the
    /// remaining vertex.
    NearPencil,
    /// The lines of a projective plane of the given order.
    ProjectivePlane { order: u64 },
    Other,
}

/// Classify a valid partition of a complete simple host `K_n` (`n ≥ 3`).
pub fn classify_complete_partition(p: &CliquePartition) -> Result<PartitionClass> {
    let host = p.host();
    let n = host.n();
    let complete = (0..n).all(|u| (u + 1..n).all(|v| host.q(u, v) == 1));
    if !complete || n < 3 {
        return Err(Error::Invalid(format!(
            "classification requires a complete simple host on ≥ 3 vertices, got n = {n}"
        )));
    }
    if p.len() == 1 {
        return Ok(PartitionClass::SingleClique);
    }
    let mut sizes = p.size_profile();
    let near_pencil =
        p.len() == n && sizes[0] == n - 1 && sizes[1..].iter().all(|&s| s == 2);
    if near_pencil {
        return Ok(PartitionClass::NearPencil);
    }
    // A nontrivial proper partition is exactly a linear space on n points;
    // planehood is P1 + P2.
    sizes.reverse();
    if sizes[0] >= 2 && *sizes.last().expect("nonempty") <= n - 1 {
        let lines: Vec<Vec<usize>> =
            p.cliques().iter().map(|c| c.vertices().to_vec()).collect();
        let space = linear::LinearSpace::new(n, lines)?;
        if let Some(order) = space.plane_order() {
            return Ok(PartitionClass::ProjectivePlane { order });
        }
    }
    Ok(PartitionClass::Other)
}
