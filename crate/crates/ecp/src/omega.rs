//! Exact intersection numbers and the census of minimum representations.
//!
//! Every representation of a host decomposes uniquely as a base — the
//! partition formed by its non-monopolized elements, padded with one
//! trivial clique per isolated vertex — plus a count of extra monopolized
//! elements per vertex. Ground size is `|base| + Σ additions`, so the
//! intersection number for a kind is the minimum of `|Q| + cost(F(Q))`
//! over base partitions `Q`, with the closed-form costs from
//! [`crate::family::augmentation_cost`]. The search enumerates bases in
//! two passes: minimum partitions first to obtain an incumbent, then
//! everything below the incumbent, which no larger base can beat.
//!
//! The census at the optimum keeps each achieving `(base, additions)`
//! pair — a *labeled plan*, one per class of representations that differ
//! only by renaming ground elements — and reports two coarser counts:
//! structure classes, which also forget *which* member of a duplicate
//! class received a distinguishing element, and automorphism classes,
//! the orbits of labeled plans under the host's symmetries.

use std::collections::{BTreeSet, HashMap};

use crate::cliques::{self, Clique, SearchOptions};
use crate::error::Result;
use crate::family::{
    augment, augmentation_cost, rep_from_partition, AugmentationPlan, RepKind, SetFamily,
};
use crate::graph::iso::{self, IsoOptions};
use crate::graph::{Graph, Multigraph};

#[derive(Clone, Debug)]
pub struct OmegaOptions {
    /// Node budget shared by the partition searches.
    pub budget: u64,
    /// Vertex-count bound on the automorphism search behind the
    /// symmetry-class counting.
    pub iso_max_n: usize,
}

impl Default for OmegaOptions {
    fn default() -> Self {
        OmegaOptions { budget: 10_000_000, iso_max_n: 12 }
    }
}

impl OmegaOptions {
    fn search(&self) -> SearchOptions {
        SearchOptions { nontrivial_only: false, proper_only: false, budget: self.budget }
    }
}

/// ω for a simple graph: the least ground-set size of a representation of
/// the given kind.
pub fn omega_exact(g: &Graph, kind: RepKind, opts: &OmegaOptions) -> Result<usize> {
    omega_exact_multi(&Multigraph::from(g), kind, opts)
}

/// ω for a multigraph host, `q(u,v) = |S_u ∩ S_v|` exactly.
pub fn omega_exact_multi(host: &Multigraph, kind: RepKind, opts: &OmegaOptions) -> Result<usize> {
    let sopts = opts.search();
    // ω_m is the clique partition number itself: a partition is already a
    // multifamily representation and vice versa.
    let cp = cliques::cp_exact(host, &sopts)?;
    if kind == RepKind::Multifamily {
        return Ok(cp);
    }
    let mut best = usize::MAX;
    for q in cliques::enumerate_partitions(host, cp, &sopts)? {
        let f = rep_from_partition(&q)?;
        let (cost, _) = augmentation_cost(&f, kind)?;
        best = best.min(q.len() + cost);
    }
    if best == cp {
        // A zero-cost minimum partition; nothing can be smaller.
        return Ok(cp);
    }
    // A base of size ≥ best cannot improve on the incumbent.
    for q in cliques::enumerate_partitions(host, best - 1, &sopts)? {
        let f = rep_from_partition(&q)?;
        let (cost, _) = augmentation_cost(&f, kind)?;
        best = best.min(q.len() + cost);
    }
    Ok(best)
}

/// Everything achieving the minimum for one host and kind.
#[derive(Clone, Debug)]
pub struct MinRepCensus {
    pub kind: RepKind,
    pub omega: usize,
    /// All labeled plans achieving `omega`, sorted; one per class of
    /// minimum representations modulo ground-element renaming.
    pub plans: Vec<AugmentationPlan>,
    /// A concrete representation realizing each plan, index-aligned.
    pub families: Vec<SetFamily>,
    /// Distinct (base, addition-multiset) pairs: plans that differ only in
    /// which vertex of a class received a fresh element count once.
    pub counting_a: usize,
    /// Orbits of labeled plans under the host's automorphisms.
    pub counting_b: usize,
}

impl MinRepCensus {
    pub fn labeled_count(&self) -> usize {
        self.plans.len()
    }
}

/// Enumerate every minimum representation of the given kind.
pub fn enumerate_min_reps(g: &Graph, kind: RepKind, opts: &OmegaOptions) -> Result<MinRepCensus> {
    enumerate_min_reps_multi(&Multigraph::from(g), kind, opts)
}

pub fn enumerate_min_reps_multi(
    host: &Multigraph,
    kind: RepKind,
    opts: &OmegaOptions,
) -> Result<MinRepCensus> {
    let omega = omega_exact_multi(host, kind, opts)?;
    let mut plans = Vec::new();
    for q in cliques::enumerate_partitions(host, omega, &opts.search())? {
        let f = rep_from_partition(&q)?;
        let slack = omega - q.len();
        for additions in addition_vectors(&f, kind, slack) {
            plans.push(AugmentationPlan { base: q.clone(), additions });
        }
    }
    plans.sort();
    let families = plans.iter().map(AugmentationPlan::realize).collect::<Result<Vec<_>>>()?;
    debug_assert!(families.iter().all(|f| f.ground() == omega && f.satisfies(kind)));
    let counting_a = plans.iter().map(AugmentationPlan::shape).collect::<BTreeSet<_>>().len();
    let counting_b = orbit_count(host, &plans, opts)?;
    Ok(MinRepCensus { kind, omega, plans, families, counting_a, counting_b })
}

/// Whether the host has exactly one minimum representation of the kind up
/// to its own symmetries: one orbit of labeled plans under graph
/// automorphisms. Representations carried to each other by an
/// automorphism — such as the near-pencil representations of a complete
/// graph with different apexes — count as one here; the labeled and
/// structure counts in [`MinRepCensus`] stay finer.
pub fn is_uniquely_intersectable(g: &Graph, kind: RepKind, opts: &OmegaOptions) -> Result<bool> {
    Ok(enumerate_min_reps(g, kind, opts)?.counting_b == 1)
}

// ---------------------------------------------------------------------------
// Valid addition vectors
// ---------------------------------------------------------------------------

/// All per-vertex counts of fresh monopolized elements summing to `slack`
/// that lift `f` to `kind`. Generated by a pruned composition search and
/// confirmed against the realized family, so the pruning only needs to be
/// sound.
fn addition_vectors(f: &SetFamily, kind: RepKind, slack: usize) -> Vec<Vec<u32>> {
    let n = f.n();
    if n == 0 {
        return if slack == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if kind == RepKind::Uniform {
        // The target cardinality is forced by the slack: n·c = slack + Σ|S_v|.
        let total: usize = (0..n).map(|v| f.set_size(v)).sum();
        let c_max = (0..n).map(|v| f.set_size(v)).max().unwrap_or(0);
        if (slack + total) % n != 0 {
            return Vec::new();
        }
        let c = (slack + total) / n;
        if c < c_max {
            return Vec::new();
        }
        let additions: Vec<u32> = (0..n).map(|v| (c - f.set_size(v)) as u32).collect();
        return confirm(f, kind, vec![additions]);
    }

    // Mandatory minimums that any valid vector must meet: a dominated
    // vertex needs air under antichain; under family at most one member of
    // a duplicate class may stay bare, handled during the walk.
    let min_at: Vec<u32> = match kind {
        RepKind::Antichain => (0..n)
            .map(|v| {
                let dominated = (0..n).any(|u| u != v && f.set_mask(v) & !f.set_mask(u) == 0);
                u32::from(dominated)
            })
            .collect(),
        _ => vec![0; n],
    };

    let class_of: Vec<usize> = {
        let mut ids: HashMap<u64, usize> = HashMap::new();
        (0..n)
            .map(|v| {
                let next = ids.len();
                *ids.entry(f.set_mask(v)).or_insert(next)
            })
            .collect()
    };
    let class_count = class_of.iter().max().map_or(0, |&c| c + 1);

    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    let mut bare_taken = vec![false; class_count];
    walk(f, kind, slack, 0, &min_at, &class_of, &mut bare_taken, &mut current, &mut out);
    confirm(f, kind, out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    f: &SetFamily,
    kind: RepKind,
    remaining: usize,
    v: usize,
    min_at: &[u32],
    class_of: &[usize],
    bare_taken: &mut Vec<bool>,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let n = f.n();
    if v == n {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let lo = min_at[v] as usize;
    for a in lo..=remaining {
        let bare = a == 0;
        if bare && kind == RepKind::Family {
            // Second bare member of a duplicate class can never recover.
            let class = class_of[v];
            let duplicated = class_of.iter().filter(|&&c| c == class).count() > 1;
            if duplicated {
                if bare_taken[class] {
                    continue;
                }
                bare_taken[class] = true;
                current[v] = 0;
                walk(f, kind, remaining, v + 1, min_at, class_of, bare_taken, current, out);
                bare_taken[class] = false;
                continue;
            }
        }
        current[v] = a as u32;
        walk(f, kind, remaining - a, v + 1, min_at, class_of, bare_taken, current, out);
    }
    current[v] = 0;
}

fn confirm(f: &SetFamily, kind: RepKind, candidates: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    candidates
        .into_iter()
        .filter(|a| augment(f, a).map(|g| g.satisfies(kind)).unwrap_or(false))
        .collect()
}

// ---------------------------------------------------------------------------
// Symmetry classes
// ---------------------------------------------------------------------------

/// Count orbits of labeled plans under host automorphisms acting by
/// σ·(Q, a) = (σQ, a∘σ⁻¹).
fn orbit_count(host: &Multigraph, plans: &[AugmentationPlan], opts: &OmegaOptions) -> Result<usize> {
    if plans.len() <= 1 {
        return Ok(plans.len());
    }
    let support = host.support();
    let iso_opts = IsoOptions { max_n: opts.iso_max_n, budget: opts.budget };
    let auts: Vec<Vec<usize>> = iso::automorphisms(&support, &iso_opts)?
        .into_iter()
        .filter(|sigma| preserves_multiplicities(host, sigma))
        .collect();

    let key_of = |cliques: &[Clique], additions: &[u32]| -> (Vec<Clique>, Vec<u32>) {
        (cliques.to_vec(), additions.to_vec())
    };
    let index: HashMap<(Vec<Clique>, Vec<u32>), usize> = plans
        .iter()
        .enumerate()
        .map(|(i, p)| (key_of(p.base.cliques(), &p.additions), i))
        .collect();

    let mut parent: Vec<usize> = (0..plans.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for sigma in &auts {
        for (i, plan) in plans.iter().enumerate() {
            let mut cliques: Vec<Clique> = plan
                .base
                .cliques()
                .iter()
                .map(|c| {
                    let vs: Vec<usize> = c.vertices().iter().map(|&v| sigma[v]).collect();
                    Clique::new(vs).expect("permuted clique stays a clique")
                })
                .collect();
            cliques.sort();
            let mut additions = vec![0u32; plan.additions.len()];
            for (v, &a) in plan.additions.iter().enumerate() {
                additions[sigma[v]] = a;
            }
            let j = *index
                .get(&(cliques, additions))
                .expect("plan set is closed under host automorphisms");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..plans.len()).map(|i| find(&mut parent, i)).collect();
    Ok(roots.len())
}

fn preserves_multiplicities(host: &Multigraph, sigma: &[usize]) -> bool {
    let n = host.n();
    (0..n).all(|u| (u + 1..n).all(|v| host.q(u, v) == host.q(sigma[u], sigma[v])))
}
