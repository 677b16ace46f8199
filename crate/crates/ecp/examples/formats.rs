//! Reading and writing graphs in the three wire formats.
//!
//! Run with `cargo run --example formats`.

use ecp::corpus;
use ecp::graph::format::{from_edgelist, from_graph6, parse_graph, serialize_graph, Format};

fn main() -> ecp::Result<()> {
    // The paw — a triangle with a pendant edge — from edge list text. The
    // `n=` line pins the vertex count so isolated vertices survive.
    let text = "n=4\n0 1\n0 2\n1 2\n2 3\n";
    let paw = from_edgelist(text.as_bytes())?;
    assert_eq!(paw, corpus::paw()?);
    println!("edge list input:\n{text}");

    for format in [Format::Graph6, Format::Edgelist, Format::Json] {
        let encoded = serialize_graph(&paw, format);
        let back = parse_graph(encoded.as_bytes(), format)?;
        assert_eq!(back, paw);
        println!("{format:?} encoding round-trips: {}", encoded.trim_end().escape_default());
    }

    // graph6 is strict: a payload byte outside the printable range is
    // rejected with its offset rather than silently skipped.
    let err = from_graph6(b"C\x19").unwrap_err();
    println!("\nmalformed graph6 is refused: {err}");

    // The optional `>>graph6<<` prefix is accepted on input.
    let k4 = from_graph6(b">>graph6<<C~")?;
    assert_eq!(k4, corpus::complete(4)?);
    println!("K_4 parses from \">>graph6<<C~\" and re-encodes as {:?}", serialize_graph(&k4, Format::Graph6));
    Ok(())
}
