//! Clique partitions: the exact minimum, full enumeration at a size bound,
//! and the structure of minimum partitions of complete graphs.
//!
//! Run with `cargo run --example partitions`.

use ecp::cliques::{
    classify_complete_partition, cp_exact, enumerate_partitions, PartitionClass, SearchOptions,
};
use ecp::corpus;
use ecp::graph::Multigraph;

fn main() -> ecp::Result<()> {
    let opts = SearchOptions::default();

    // The paw needs two cliques: its triangle and the pendant edge.
    let paw = Multigraph::from(&corpus::paw()?);
    let cp = cp_exact(&paw, &opts)?;
    println!("cp(paw) = {cp}; minimum partitions:");
    for q in enumerate_partitions(&paw, cp, &opts)? {
        let cliques: Vec<&[usize]> = q.cliques().iter().map(|c| c.vertices()).collect();
        println!("  {cliques:?}");
    }

    // On a complete host, once the one-clique partition and the trivial
    // singleton covers are forbidden, the minimum jumps to exactly n — and
    // every minimum partition is a near-pencil or a projective plane.
    let strict = SearchOptions { nontrivial_only: true, proper_only: true, ..opts };
    for n in [6usize, 7] {
        let host = Multigraph::from(&corpus::complete(n)?);
        assert_eq!(cp_exact(&host, &strict)?, n);
        let minima = enumerate_partitions(&host, n, &strict)?;
        let mut pencils = 0;
        let mut planes = 0;
        for q in &minima {
            match classify_complete_partition(q)? {
                PartitionClass::NearPencil => pencils += 1,
                PartitionClass::ProjectivePlane { .. } => planes += 1,
                other => println!("  unexpected class {other:?}"),
            }
        }
        println!(
            "K_{n}: {} minimum nontrivial proper partitions of size {n} \
             ({pencils} near-pencils, {planes} projective planes)",
            minima.len()
        );
    }
    // K_7's thirty planes are the labeled Fano planes on seven points:
    // 7!/168, the symmetric group modulo the Fano collineation group.
    Ok(())
}
