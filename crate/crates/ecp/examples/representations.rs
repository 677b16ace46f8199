//! Set representations: the partition ↔ family bijection, the four kinds,
//! intersection numbers, and minimum-representation censuses.
//!
//! Run with `cargo run --example representations`.

use ecp::cliques::{Clique, CliquePartition};
use ecp::corpus;
use ecp::family::{partition_from_rep, rep_from_partition, RepKind};
use ecp::graph::Multigraph;
use ecp::omega::{enumerate_min_reps, omega_exact, OmegaOptions};

fn main() -> ecp::Result<()> {
    // A partition becomes a family by reading membership backwards:
    // vertex v's set is the set of cliques containing v.
    let paw = corpus::paw()?;
    let q = CliquePartition::new(
        Multigraph::from(&paw),
        vec![Clique::new(vec![0, 1, 2])?, Clique::new(vec![2, 3])?],
    )?;
    let f = rep_from_partition(&q)?;
    println!("paw partition {:?}", q.size_profile());
    println!("  vertex sets: {:?}", f.sets_as_lists());
    println!("  kinds attained: {:?}", f.classify());
    println!("  monopolized elements: {:?}", f.monopolized_elements());
    assert_eq!(partition_from_rep(&f)?, q);

    // The four intersection numbers form a chain; each step may cost.
    let opts = OmegaOptions::default();
    let chain: Vec<usize> = [RepKind::Multifamily, RepKind::Family, RepKind::Antichain, RepKind::Uniform]
        .into_iter()
        .map(|kind| omega_exact(&paw, kind, &opts))
        .collect::<ecp::Result<_>>()?;
    println!("paw: (ω_m, ω_f, ω_a, ω_u) = {chain:?}");

    // A census counts minimum representations three ways: labeled plans,
    // plan shapes (counting A), and orbits under graph symmetry (counting
    // B). K_4's antichain minimum looks four-fold until symmetry folds the
    // four near-pencil manners into one class.
    let k4 = corpus::complete(4)?;
    let census = enumerate_min_reps(&k4, RepKind::Antichain, &opts)?;
    println!(
        "K_4 antichain: ω = {}, labeled plans = {}, counting A = {}, counting B = {}",
        census.omega,
        census.labeled_count(),
        census.counting_a,
        census.counting_b
    );
    for fam in census.families.iter().take(2) {
        println!("  e.g. {:?}", fam.sets_as_lists());
    }

    // The uniform kind tells K_6 and K_7 apart: K_6 has two genuinely
    // different minimum manners, K_7 exactly one (through the Fano plane).
    for n in [6usize, 7] {
        let census = enumerate_min_reps(&corpus::complete(n)?, RepKind::Uniform, &opts)?;
        println!(
            "K_{n} uniform: ω = {}, counting B = {} ({})",
            census.omega,
            census.counting_b,
            if census.counting_b == 1 { "uniquely intersectable" } else { "not unique" }
        );
    }
    Ok(())
}
