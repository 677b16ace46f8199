//! Set families, the partition ↔ representation bijection, kind
//! classification, and monopolized-element bookkeeping.
//!
//! A multifamily assigns every vertex a nonempty subset of a ground set
//! `X = {0..p}` whose union is all of `X`; it represents the multigraph in
//! which `q(u,v) = |S_u ∩ S_v|`. The correspondence with clique partitions
//! is the one that drives everything here: ground element `k` ↔ clique
//! `Q_k = {v : k ∈ S_v}`, and `S(v) = {k : v ∈ Q_k}`. An element lying in
//! exactly one set — *monopolized* — corresponds to a trivial clique and
//! contributes nothing to any intersection, which is why minimum
//! representations decompose as a nontrivial partition plus monopolized
//! additions, and why the cost of upgrading a base family to a stricter
//! kind has the closed forms implemented in [`augmentation_cost`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cliques::{Clique, CliquePartition};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Hard cap on ground-set size: one `u64` mask per vertex set.
pub const MAX_GROUND: usize = 64;

// ---------------------------------------------------------------------------
// SetFamily
// ---------------------------------------------------------------------------

/// A vertex-indexed multifamily of nonempty subsets of `{0..ground}` whose
/// union covers the whole ground set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFamily {
    ground: usize,
    /// `sets[v]` is vertex v's set as a bitmask over the ground set.
    sets: Vec<u64>,
}

impl SetFamily {
    pub fn new(ground: usize, sets: Vec<Vec<usize>>) -> Result<SetFamily> {
        let masks = sets
            .iter()
            .map(|s| {
                let mut m = 0u64;
                for &e in s {
                    if e >= ground {
                        return Err(Error::Invalid(format!(
                            "element {e} outside ground set of size {ground}"
                        )));
                    }
                    if m >> e & 1 == 1 {
                        return Err(Error::Invalid(format!("repeated element {e} in a set")));
                    }
                    m |= 1 << e;
                }
                Ok(m)
            })
            .collect::<Result<Vec<u64>>>()?;
        SetFamily::from_masks(ground, masks)
    }

    pub fn from_masks(ground: usize, sets: Vec<u64>) -> Result<SetFamily> {
        if ground > MAX_GROUND {
            return Err(Error::TooManyVertices { n: ground, max: MAX_GROUND });
        }
        if let Some(v) = sets.iter().position(|&m| m == 0) {
            return Err(Error::Invalid(format!("vertex {v} has an empty set")));
        }
        let full = if ground == 64 { u64::MAX } else { (1u64 << ground) - 1 };
        let union = sets.iter().fold(0, |acc, &m| acc | m);
        if union & !full != 0 {
            return Err(Error::Invalid("set element outside the ground set".into()));
        }
        if union != full {
            let missing = (0..ground).find(|&e| union >> e & 1 == 0).expect("non-full union");
            return Err(Error::Invalid(format!(
                "ground element {missing} occurs in no set"
            )));
        }
        Ok(SetFamily { ground, sets })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// Ground-set size, the paper's `p = |S(F)|`.
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn set_mask(&self, v: usize) -> u64 {
        self.sets[v]
    }

    pub fn set_size(&self, v: usize) -> usize {
        self.sets[v].count_ones() as usize
    }

    /// Vertex sets as sorted element lists, vertex order.
    pub fn sets_as_lists(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|&m| (0..self.ground).filter(|&e| m >> e & 1 == 1).collect())
            .collect()
    }

    /// The multigraph this family represents: `q(u,v) = |S_u ∩ S_v|`.
    pub fn intersection_multigraph(&self) -> Multigraph {
        let n = self.n();
        let mut host = Multigraph::new(n).expect("vertex count bounded by callers");
        for u in 0..n {
            for v in u + 1..n {
                let q = (self.sets[u] & self.sets[v]).count_ones();
                host.set_q(u, v, q).expect("in range");
            }
        }
        host
    }

    /// Elements lying in exactly one set.
    pub fn monopolized_elements(&self) -> Vec<usize> {
        (0..self.ground)
            .filter(|&e| self.sets.iter().filter(|&&m| m >> e & 1 == 1).count() == 1)
            .collect()
    }

    /// Drop every monopolized element and compact the ground set.
    /// Intersections are untouched; vertices left with empty sets make the
    /// removal fail.
    pub fn remove_monopolized(&self) -> Result<SetFamily> {
        let monopolized = self.monopolized_elements();
        let keep: Vec<usize> =
            (0..self.ground).filter(|e| !monopolized.contains(e)).collect();
        let degenerate: Vec<usize> = (0..self.n())
            .filter(|&v| keep.iter().all(|&e| self.sets[v] >> e & 1 == 0))
            .collect();
        if !degenerate.is_empty() {
            return Err(Error::DegenerateVertices(degenerate));
        }
        let sets = self
            .sets
            .iter()
            .map(|&m| {
                keep.iter()
                    .enumerate()
                    .fold(0u64, |acc, (new, &old)| acc | u64::from(m >> old & 1) << new)
            })
            .collect();
        SetFamily::from_masks(keep.len(), sets)
    }

    pub fn classify(&self) -> KindFlags {
        let distinct = {
            let mut sorted = self.sets.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        let antichain = (0..self.n()).all(|v| {
            (0..self.n()).all(|u| u == v || self.sets[v] & !self.sets[u] != 0)
        });
        let uniform = distinct
            && self
                .sets
                .windows(2)
                .all(|w| w[0].count_ones() == w[1].count_ones());
        KindFlags { multifamily: true, family: distinct, antichain, uniform }
    }

    pub fn satisfies(&self, kind: RepKind) -> bool {
        let flags = self.classify();
        match kind {
            RepKind::Multifamily => flags.multifamily,
            RepKind::Family => flags.family,
            RepKind::Antichain => flags.antichain,
            RepKind::Uniform => flags.uniform,
        }
    }

    /// Serialize as `{"ground": p, "sets": [[e,…],…]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            ground: usize,
            sets: Vec<Vec<usize>>,
        }
        serde_json::to_string(&Doc { ground: self.ground, sets: self.sets_as_lists() })
            .expect("serialization of plain data cannot fail")
    }

    pub fn from_json(text: &[u8]) -> Result<SetFamily> {
        #[derive(Deserialize)]
        struct Doc {
            ground: usize,
            sets: Vec<Vec<usize>>,
        }
        let doc: Doc = serde_json::from_slice(text)?;
        SetFamily::new(doc.ground, doc.sets)
    }
}

/// Representation kinds, ordered from least to most constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    Multifamily,
    Family,
    Antichain,
    Uniform,
}

impl RepKind {
    pub const ALL: [RepKind; 4] =
        [RepKind::Multifamily, RepKind::Family, RepKind::Antichain, RepKind::Uniform];

    /// The CLI's one-letter names m|f|a|u.
    pub fn short(&self) -> &'static str {
        match self {
            RepKind::Multifamily => "m",
            RepKind::Family => "f",
            RepKind::Antichain => "a",
            RepKind::Uniform => "u",
        }
    }
}

impl std::str::FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<RepKind> {
        match s {
            "m" | "multifamily" => Ok(RepKind::Multifamily),
            "f" | "family" => Ok(RepKind::Family),
            "a" | "antichain" => Ok(RepKind::Antichain),
            "u" | "uniform" => Ok(RepKind::Uniform),
            other => Err(Error::Invalid(format!("unknown representation kind '{other}'"))),
        }
    }
}

impl std::fmt::Display for RepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            RepKind::Multifamily => "multifamily",
            RepKind::Family => "family",
            RepKind::Antichain => "antichain",
            RepKind::Uniform => "uniform",
        };
        f.write_str(name)
    }
}

/// Which kinds a family attains. `uniform ⇒ antichain ⇒ family ⇒
/// multifamily` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KindFlags {
    pub multifamily: bool,
    pub family: bool,
    pub antichain: bool,
    pub uniform: bool,
}

// ---------------------------------------------------------------------------
// The bijection with clique partitions
// ---------------------------------------------------------------------------

/// `F(Q)`: ground element `k` per clique, `S(v) = {k : v ∈ Q_k}`. The
/// ground size equals `|Q|`.
pub fn rep_from_partition(q: &CliquePartition) -> Result<SetFamily> {
    let n = q.host().n();
    let mut sets = vec![0u64; n];
    if q.len() > MAX_GROUND {
        return Err(Error::TooManyVertices { n: q.len(), max: MAX_GROUND });
    }
    for (k, clique) in q.cliques().iter().enumerate() {
        for &v in clique.vertices() {
            sets[v] |= 1 << k;
        }
    }
    if let Some(v) = sets.iter().position(|&m| m == 0) {
        return Err(Error::Invalid(format!("vertex {v} lies in no clique")));
    }
    SetFamily::from_masks(q.len(), sets)
}

/// `Q(F)`: one clique per ground element, `Q_k = {v : k ∈ S_v}`, hosted on
/// the intersection multigraph. Inverse to [`rep_from_partition`].
pub fn partition_from_rep(f: &SetFamily) -> Result<CliquePartition> {
    let host = f.intersection_multigraph();
    let cliques = (0..f.ground())
        .map(|k| {
            let members: Vec<usize> =
                (0..f.n()).filter(|&v| f.set_mask(v) >> k & 1 == 1).collect();
            Clique::new(members)
        })
        .collect::<Result<Vec<_>>>()?;
    CliquePartition::new(host, cliques)
}

// ---------------------------------------------------------------------------
// Augmentation
// ---------------------------------------------------------------------------

/// A base partition plus per-vertex counts of fresh monopolized elements.
/// The represented family has ground size `|base| + Σ additions`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AugmentationPlan {
    pub base: CliquePartition,
    pub additions: Vec<u32>,
}

impl AugmentationPlan {
    pub fn ground_size(&self) -> usize {
        self.base.len() + self.additions.iter().map(|&a| a as usize).sum::<usize>()
    }

    /// The (base, addition-multiset) shape under which plans are compared
    /// for the structure-level counting.
    pub fn shape(&self) -> (Vec<Clique>, Vec<u32>) {
        let mut counts = self.additions.clone();
        counts.sort_unstable();
        (self.base.cliques().to_vec(), counts)
    }

    /// Realize the plan as a concrete family: fresh elements are appended
    /// after the base ground, in vertex order.
    pub fn realize(&self) -> Result<SetFamily> {
        let base = rep_from_partition(&self.base)?;
        augment(&base, &self.additions)
    }
}

/// Append `additions[v]` fresh monopolized elements to each vertex's set.
pub fn augment(f: &SetFamily, additions: &[u32]) -> Result<SetFamily> {
    if additions.len() != f.n() {
        return Err(Error::Invalid(format!(
            "additions length {} does not match n = {}",
            additions.len(),
            f.n()
        )));
    }
    let total: usize = additions.iter().map(|&a| a as usize).sum();
    let ground = f.ground() + total;
    if ground > MAX_GROUND {
        return Err(Error::TooManyVertices { n: ground, max: MAX_GROUND });
    }
    let mut sets = Vec::with_capacity(f.n());
    let mut next = f.ground();
    for v in 0..f.n() {
        let mut m = f.set_mask(v);
        for _ in 0..additions[v] {
            m |= 1 << next;
            next += 1;
        }
        sets.push(m);
    }
    SetFamily::from_masks(ground, sets)
}

/// The minimum number of fresh monopolized elements needed to lift `f` to
/// `kind`, with a plan realizing it.
///
/// The costs are exact:
/// * family — a fresh element distinguishes its holder from everything, so
///   each class of `c` identical sets needs and admits exactly `c − 1`
///   augmented members;
/// * antichain — `S'_v ⊆ S'_u` survives augmentation iff `v` received
///   nothing and `S_v ⊆ S_u` held already, so the dominated vertices
///   (those with `S_v ⊆ S_u` for some `u ≠ v`) each need exactly one fresh
///   element, and that suffices;
/// * uniform — sets only grow, so the common cardinality `c` is at least
///   the current maximum; at `c = c_max` the maximum-cardinality sets
///   receive nothing and must already be distinct, else `c_max + 1` is
///   forced; everything below pads with fresh (hence distinct) elements,
///   and larger `c` only costs more.
pub fn augmentation_cost(f: &SetFamily, kind: RepKind) -> Result<(usize, AugmentationPlan)> {
    let n = f.n();
    let mut additions = vec![0u32; n];
    match kind {
        RepKind::Multifamily => {}
        RepKind::Family => {
            let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for v in 0..n {
                classes.entry(f.set_mask(v)).or_default().push(v);
            }
            for members in classes.values() {
                for &v in &members[1..] {
                    additions[v] = 1;
                }
            }
        }
        RepKind::Antichain => {
            for v in 0..n {
                let dominated =
                    (0..n).any(|u| u != v && f.set_mask(v) & !f.set_mask(u) == 0);
                if dominated {
                    additions[v] = 1;
                }
            }
        }
        RepKind::Uniform => {
            let c_max = (0..n).map(|v| f.set_size(v)).max().unwrap_or(0);
            let at_max: Vec<u64> = (0..n)
                .map(|v| f.set_mask(v))
                .filter(|m| m.count_ones() as usize == c_max)
                .collect();
            let mut sorted = at_max.clone();
            sorted.sort_unstable();
            let duplicates_at_max = sorted.windows(2).any(|w| w[0] == w[1]);
            let c = if duplicates_at_max { c_max + 1 } else { c_max };
            for v in 0..n {
                additions[v] = (c - f.set_size(v)) as u32;
            }
        }
    }
    let cost = additions.iter().map(|&a| a as usize).sum();
    let plan = AugmentationPlan { base: partition_from_rep(f)?, additions };
    debug_assert!(augment(f, &plan.additions)?.satisfies(kind));
    Ok((cost, plan))
}
