//! Property tests: format round trips, the partition ↔ representation
//! bijection, the kind chain, augmentation exactness, and an independent
//! recount of partition enumeration.

use proptest::prelude::*;

use ecp::cliques::{self, Clique, CliquePartition, SearchOptions};
use ecp::family::{augmentation_cost, partition_from_rep, rep_from_partition, RepKind};
use ecp::graph::format::{from_edgelist, from_graph6, from_json, to_edgelist, to_graph6, to_json};
use ecp::graph::{Graph, Multigraph};
use ecp::omega::{omega_exact, OmegaOptions};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        let top = if bits == 0 { 1 } else { 1u128 << bits };
        (Just(n), 0..top).prop_map(|(n, code)| {
            let mut g = Graph::new(n).expect("n bounded");
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if code >> bit & 1 == 1 {
                        g.add_edge(u, v).expect("in range");
                    }
                    bit += 1;
                }
            }
            g
        })
    })
}

/// Every edge as a 2-clique, plus the forced trivial cliques on isolated
/// vertices: always a valid partition of the graph's host.
fn edge_partition(g: &Graph) -> CliquePartition {
    let mut cliques: Vec<Clique> = g
        .edges()
        .into_iter()
        .map(|(u, v)| Clique::new(vec![u, v]).expect("an edge is a clique"))
        .collect();
    for v in g.isolated_vertices() {
        cliques.push(Clique::new(vec![v]).expect("a vertex is a clique"));
    }
    CliquePartition::new(Multigraph::from(g), cliques).expect("edges partition the pairs")
}

/// Partition counting by plain recursion, sharing no code with the search
/// engine: cover the first still-uncovered pair by every eligible clique.
/// Equal cliques covering the same pair are taken in nondecreasing mask
/// order so each multiset of cliques is counted once.
fn count_partitions_naive(host: &Multigraph, max_size: usize) -> usize {
    let n = host.n();
    let isolated: Vec<usize> =
        (0..n).filter(|&v| (0..n).all(|u| host.q(u, v) == 0)).collect();
    if isolated.len() > max_size {
        return 0;
    }
    let mut residual = vec![vec![0u32; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            residual[u][v] = host.q(u, v);
        }
    }
    fn first_pair(residual: &[Vec<u32>], n: usize) -> Option<(usize, usize)> {
        for u in 0..n {
            for v in u + 1..n {
                if residual[u][v] > 0 {
                    return Some((u, v));
                }
            }
        }
        None
    }
    fn rec(
        residual: &mut Vec<Vec<u32>>,
        n: usize,
        left: usize,
        min_mask: u64,
    ) -> usize {
        let Some((u, v)) = first_pair(residual, n) else { return 1 };
        if left == 0 {
            return 0;
        }
        // Grow every vertex set containing u and v whose pairs all still
        // need coverage, in increasing mask order.
        let mut total = 0;
        let base = (1u64 << u) | (1 << v);
        let mut stack = vec![(base, v)];
        while let Some((mask, last)) = stack.pop() {
            if mask >= min_mask {
                let members: Vec<usize> =
                    (0..n).filter(|&w| mask >> w & 1 == 1).collect();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        residual[members[i]][members[j]] -= 1;
                    }
                }
                let same_pair_next = residual[u][v] > 0;
                total += rec(
                    residual,
                    n,
                    left - 1,
                    if same_pair_next { mask } else { 0 },
                );
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        residual[members[i]][members[j]] += 1;
                    }
                }
            }
            for w in last + 1..n {
                if mask >> w & 1 == 1 {
                    continue;
                }
                let ok = (0..n)
                    .filter(|&x| mask >> x & 1 == 1)
                    .all(|x| residual[x.min(w)][x.max(w)] > 0);
                if ok {
                    stack.push((mask | 1 << w, w));
                }
            }
        }
        total
    }
    rec(&mut residual, n, max_size - isolated.len(), 0)
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = to_graph6(&g);
        let back = from_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), text);
    }

    #[test]
    fn edgelist_round_trip(g in graph_strategy(12)) {
        let text = to_edgelist(&g);
        prop_assert_eq!(from_edgelist(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph_strategy(12)) {
        let text = to_json(&g);
        prop_assert_eq!(from_json(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn bijection_round_trip_on_edge_partitions(g in graph_strategy(6)) {
        let q = edge_partition(&g);
        let f = rep_from_partition(&q).unwrap();
        prop_assert_eq!(f.ground(), q.len());
        prop_assert_eq!(&f.intersection_multigraph(), q.host());
        let back = partition_from_rep(&f).unwrap();
        prop_assert_eq!(&back, &q);
        // Monopolized elements are exactly the trivial cliques.
        let trivial: Vec<usize> = (0..q.len())
            .filter(|&k| q.cliques()[k].len() == 1)
            .collect();
        prop_assert_eq!(f.monopolized_elements(), trivial);
    }

    #[test]
    fn augmentation_cost_is_realized_exactly(g in graph_strategy(5)) {
        let f = rep_from_partition(&edge_partition(&g)).unwrap();
        for kind in [RepKind::Multifamily, RepKind::Family, RepKind::Antichain, RepKind::Uniform] {
            let (cost, plan) = augmentation_cost(&f, kind).unwrap();
            if kind == RepKind::Multifamily {
                prop_assert_eq!(cost, 0);
            }
            let realized = plan.realize().unwrap();
            prop_assert!(realized.satisfies(kind), "{kind}: {realized:?}");
            prop_assert_eq!(realized.ground(), f.ground() + cost);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_chain_is_monotone(g in graph_strategy(5)) {
        let opts = OmegaOptions::default();
        let m = omega_exact(&g, RepKind::Multifamily, &opts).unwrap();
        let f = omega_exact(&g, RepKind::Family, &opts).unwrap();
        let a = omega_exact(&g, RepKind::Antichain, &opts).unwrap();
        let u = omega_exact(&g, RepKind::Uniform, &opts).unwrap();
        prop_assert!(m <= f && f <= a && a <= u, "chain {m} {f} {a} {u} on {g:?}");
    }

    #[test]
    fn partition_enumeration_matches_naive_recount(g in graph_strategy(4)) {
        let host = Multigraph::from(&g);
        let opts = SearchOptions::default();
        let cp = cliques::cp_exact(&host, &opts).unwrap();
        for bound in [cp, cp + 1] {
            let engine = cliques::enumerate_partitions(&host, bound, &opts).unwrap().len();
            prop_assert_eq!(engine, count_partitions_naive(&host, bound), "bound {}", bound);
        }
    }
}
