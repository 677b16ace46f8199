//! Edge clique partitions, set representations, and intersection numbers.
//!
//! A clique partition of a (multi)graph covers every vertex pair `{u,v}`
//! exactly `q(u,v)` times by cliques; a set representation assigns each
//! vertex a set so that adjacency is mirrored by intersection sizes. The two
//! views are equivalent, and this crate implements both sides of that
//! correspondence along with everything needed to compute and verify the
//! associated minima:
//!
//! * [`graph`] — simple graphs, multigraphs, line graphs, graph6 / edge list
//!   / JSON formats, isomorphism search.
//! * [`cliques`] — clique enumeration, partition validation, the exact
//!   clique partition number, full partition enumeration, and structure
//!   classification for partitions of complete graphs.
//! * [`family`] — set families, the partition ↔ family bijection, and the
//!   multifamily / family / antichain / uniform kind lattice.
//! * [`omega`] — exact intersection numbers for all four kinds, minimum
//!   representation censuses, and uniqueness up to permutation.
//! * [`oracle`] — an independent brute-force minimum-representation search
//!   used to cross-check everything above.
//! * [`linear`] — finite linear spaces, near-pencils, projective planes over
//!   prime-power orders, and classification of short linear spaces.
//! * [`linegraph`] — leaf statistics, wings, exclusion detection, and the
//!   closed-form clique partition and intersection numbers of line graphs.
//! * [`corpus`] — named graphs and small census generators.
//! * [`verify`] — the theorem-verification suites run by the CLI and the
//!   acceptance tests.
//!
//! The `ecp` binary exposes all of it as subcommands; see [`cli`].

#![forbid(unsafe_code)]

pub mod cli;
pub mod cliques;
pub mod corpus;
pub mod error;
pub mod family;
pub mod graph;
pub mod linear;
pub mod linegraph;
pub mod omega;
pub mod oracle;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Multigraph};
