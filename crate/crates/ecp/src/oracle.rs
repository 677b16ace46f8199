//! An independent brute force for minimum representations.
//!
//! No partition decomposition, no augmentation arithmetic: vertices are
//! assigned sets directly, in index order. Each vertex chooses a subset
//! of the elements already in use — built element by element under exact
//! intersection quotas against every assigned vertex — plus a count of
//! fresh elements. Ground elements are interchangeable until first used,
//! so fresh picks always take the next unused indices; that canonical
//! form visits one representative per ground-relabeling class of
//! families without a seen-set. The search minimizes the total number of
//! elements used, pruning on the incumbent plus a count of unassigned
//! vertices that cannot reuse anything.
//!
//! This is the ground truth the partition-based engine is checked
//! against; keep it dumb.

use crate::error::{Error, Result};
use crate::family::{RepKind, SetFamily, MAX_GROUND};
use crate::graph::Multigraph;

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Largest ground size worth reporting; the search never explores
    /// beyond it.
    pub max_ground: usize,
    pub budget: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { max_ground: MAX_GROUND, budget: 10_000_000 }
    }
}

/// The smallest representation of `host` of the given kind with ground
/// size at most `opts.max_ground`, or `None` if there is none in range.
pub fn min_representation(
    host: &Multigraph,
    kind: RepKind,
    opts: &OracleOptions,
) -> Result<Option<(usize, SetFamily)>> {
    let max_ground = opts.max_ground.min(MAX_GROUND);
    let n = host.n();
    // A vertex sharing nothing with any predecessor can never reuse an
    // element, whoever introduced it; each such vertex costs one fresh.
    let stranded: Vec<bool> =
        (0..n).map(|w| (0..w).all(|u| host.q(u, w) == 0)).collect();
    let mut search = Search {
        host,
        kind,
        max_ground,
        budget: opts.budget,
        nodes: 0,
        sets: Vec::with_capacity(n),
        used: 0,
        stranded,
        best: bootstrap(host, kind).filter(|&(p, _)| p <= max_ground),
    };
    search.assign(0)?;
    match search.best {
        None => Ok(None),
        Some((p, masks)) => Ok(Some((p, SetFamily::from_masks(p, masks)?))),
    }
}

/// A representation that always exists: `q(u,v)` dedicated elements per
/// adjacent pair plus one private element per vertex (isolated vertices
/// only, for a plain multifamily), padded to a common cardinality for the
/// uniform kind. Seeds the incumbent so the search has a finite ceiling
/// from the start.
fn bootstrap(host: &Multigraph, kind: RepKind) -> Option<(usize, Vec<u64>)> {
    let n = host.n();
    let mut sets = vec![0u64; n];
    let mut next = 0usize;
    let mut place = |sets: &mut Vec<u64>, members: &[usize]| -> bool {
        if next >= MAX_GROUND {
            return false;
        }
        for &v in members {
            sets[v] |= 1 << next;
        }
        next += 1;
        true
    };
    for (u, v, q) in host.weighted_pairs() {
        for _ in 0..q {
            if !place(&mut sets, &[u, v]) {
                return None;
            }
        }
    }
    match kind {
        RepKind::Multifamily => {
            for v in 0..n {
                if sets[v] == 0 && !place(&mut sets, &[v]) {
                    return None;
                }
            }
        }
        RepKind::Family | RepKind::Antichain => {
            // A private element makes every set distinct and incomparable.
            for v in 0..n {
                if !place(&mut sets, &[v]) {
                    return None;
                }
            }
        }
        RepKind::Uniform => {
            let target = (0..n)
                .map(|v| sets[v].count_ones() as usize + 1)
                .max()
                .unwrap_or(0);
            for v in 0..n {
                for _ in sets[v].count_ones() as usize..target {
                    if !place(&mut sets, &[v]) {
                        return None;
                    }
                }
            }
        }
    }
    Some((next, sets))
}

struct Search<'a> {
    host: &'a Multigraph,
    kind: RepKind,
    max_ground: usize,
    budget: u64,
    nodes: u64,
    /// Sets of the assigned prefix of vertices.
    sets: Vec<u64>,
    /// Elements 0..used are in play; fresh picks start at `used`.
    used: usize,
    /// Static per-vertex flag: no shared pair with any predecessor.
    stranded: Vec<bool>,
    best: Option<(usize, Vec<u64>)>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                nodes: self.nodes,
                context: "direct representation search".into(),
            });
        }
        Ok(())
    }

    /// Ceiling the search cannot reach or beat: the incumbent, or one past
    /// the ground cap.
    fn limit(&self) -> usize {
        match self.best {
            Some((b, _)) => b,
            None => self.max_ground + 1,
        }
    }

    /// How many vertices from `v` on must each introduce a fresh element.
    fn stranded_from(&self, v: usize) -> usize {
        self.stranded[v.min(self.stranded.len())..].iter().filter(|&&s| s).count()
    }

    fn assign(&mut self, v: usize) -> Result<()> {
        self.tick()?;
        if v == self.host.n() {
            self.best = Some((self.used, self.sets.clone()));
            return Ok(());
        }
        let quotas: Vec<u32> = (0..v).map(|u| self.host.q(u, v)).collect();
        let mut counts = vec![0u32; v];
        self.build_set(v, 0, 0, &quotas, &mut counts)
    }

    /// Extend vertex v's reused part from element `e` on, then branch on
    /// the fresh count.
    fn build_set(
        &mut self,
        v: usize,
        e: usize,
        mask: u64,
        quotas: &[u32],
        counts: &mut Vec<u32>,
    ) -> Result<()> {
        self.tick()?;
        if e == self.used {
            if counts != quotas {
                return Ok(());
            }
            return self.branch_fresh(v, mask);
        }
        // Element e stays out.
        self.build_set(v, e + 1, mask, quotas, counts)?;
        // Element e goes in, if every owner still has quota for it.
        let owners: Vec<usize> =
            (0..v).filter(|&u| self.sets[u] >> e & 1 == 1).collect();
        if owners.iter().all(|&u| counts[u] < quotas[u]) {
            for &u in &owners {
                counts[u] += 1;
            }
            self.build_set(v, e + 1, mask | 1 << e, quotas, counts)?;
            for &u in &owners {
                counts[u] -= 1;
            }
        }
        Ok(())
    }

    fn branch_fresh(&mut self, v: usize, mask: u64) -> Result<()> {
        let stranded_later = self.stranded_from(v + 1);
        let reused = mask.count_ones() as usize;
        let mut fresh = usize::from(mask == 0);
        loop {
            let ground = self.used + fresh;
            // Fresh count only rises, so the first ground past the limit
            // ends the branch.
            if ground + stranded_later >= self.limit() {
                return Ok(());
            }
            if self.admissible(v, mask, reused + fresh, fresh) {
                let mut set = mask;
                for k in 0..fresh {
                    set |= 1 << (self.used + k);
                }
                self.sets.push(set);
                let saved = self.used;
                self.used = ground;
                self.assign(v + 1)?;
                self.used = saved;
                self.sets.pop();
            }
            fresh += 1;
        }
    }

    /// Kind constraints against the assigned prefix. Intersections are
    /// already exact by quota; fresh elements meet nothing.
    fn admissible(&self, v: usize, mask: u64, size: usize, fresh: usize) -> bool {
        match self.kind {
            RepKind::Multifamily => true,
            RepKind::Family => {
                fresh > 0 || (0..v).all(|u| self.sets[u] != mask)
            }
            RepKind::Antichain => (0..v).all(|u| {
                let v_in_u = fresh == 0 && mask & !self.sets[u] == 0;
                let u_in_v = self.sets[u] & !mask == 0;
                !v_in_u && !u_in_v
            }),
            RepKind::Uniform => {
                (v == 0 || size == self.sets[0].count_ones() as usize)
                    && (fresh > 0 || (0..v).all(|u| self.sets[u] != mask))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Graph;
    use crate::omega::{omega_exact, OmegaOptions};

    fn oracle(g: &Graph, kind: RepKind) -> usize {
        let host = Multigraph::from(g);
        let (p, f) = min_representation(&host, kind, &OracleOptions::default())
            .unwrap()
            .expect("within ground cap");
        assert_eq!(f.ground(), p);
        assert!(f.satisfies(kind));
        assert_eq!(f.intersection_multigraph(), host);
        p
    }

    #[test]
    fn paw_and_complete_values() {
        let paw = corpus::paw().unwrap();
        assert_eq!(oracle(&paw, RepKind::Multifamily), 2);
        assert_eq!(oracle(&paw, RepKind::Family), 3);
        assert_eq!(oracle(&paw, RepKind::Antichain), 5);
        assert_eq!(oracle(&paw, RepKind::Uniform), 5);

        let k4 = corpus::complete(4).unwrap();
        assert_eq!(oracle(&k4, RepKind::Multifamily), 1);
        assert_eq!(oracle(&k4, RepKind::Family), 4);
        assert_eq!(oracle(&k4, RepKind::Antichain), 4);
        assert_eq!(oracle(&k4, RepKind::Uniform), 5);
    }

    #[test]
    fn matchings_and_stars() {
        let m2 = corpus::matching(2).unwrap();
        assert_eq!(oracle(&m2, RepKind::Family), 4);
        assert_eq!(oracle(&m2, RepKind::Antichain), 6);
        assert_eq!(oracle(&m2, RepKind::Uniform), 6);

        let s4 = corpus::star(4).unwrap();
        assert_eq!(oracle(&s4, RepKind::Multifamily), 4);
        assert_eq!(oracle(&s4, RepKind::Antichain), 8);
    }

    #[test]
    fn ground_cap_gives_none() {
        let k3 = corpus::complete(3).unwrap();
        let host = Multigraph::from(&k3);
        let opts = OracleOptions { max_ground: 2, ..OracleOptions::default() };
        assert!(min_representation(&host, RepKind::Uniform, &opts).unwrap().is_none());
    }

    #[test]
    fn isolated_and_empty() {
        let host = Multigraph::new(3).unwrap();
        let (p, _) =
            min_representation(&host, RepKind::Uniform, &OracleOptions::default())
                .unwrap()
                .unwrap();
        assert_eq!(p, 3);
        let empty = Multigraph::new(0).unwrap();
        let (p, f) =
            min_representation(&empty, RepKind::Antichain, &OracleOptions::default())
                .unwrap()
                .unwrap();
        assert_eq!((p, f.n()), (0, 0));
    }

    #[test]
    fn multigraph_quotas() {
        // A doubled edge needs two shared elements.
        let mut host = Multigraph::new(2).unwrap();
        host.set_q(0, 1, 2).unwrap();
        let (p, f) =
            min_representation(&host, RepKind::Multifamily, &OracleOptions::default())
                .unwrap()
                .unwrap();
        assert_eq!(p, 2);
        assert_eq!(f.intersection_multigraph(), host);
        // As a family the two sets must differ: one extra element.
        let (p, _) = min_representation(&host, RepKind::Family, &OracleOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(p, 3);
    }

    #[test]
    fn agrees_with_engine_up_to_four_edges() {
        let opts = OmegaOptions::default();
        for level in corpus::graphs_without_isolates_up_to(4).unwrap() {
            for g in level {
                let host = Multigraph::from(&g);
                for kind in RepKind::ALL {
                    let engine = omega_exact(&g, kind, &opts).unwrap();
                    let cap = OracleOptions { max_ground: engine + 1, ..Default::default() };
                    let direct = min_representation(&host, kind, &cap)
                        .unwrap()
                        .map(|(p, _)| p);
                    assert_eq!(direct, Some(engine), "{g:?} {kind}");
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_propagates() {
        let host = Multigraph::from(&corpus::complete(5).unwrap());
        let opts = OracleOptions { max_ground: 10, budget: 20 };
        assert!(matches!(
            min_representation(&host, RepKind::Uniform, &opts),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
