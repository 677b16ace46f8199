//! Finite linear spaces and projective planes: construction over prime
//! powers, point deletion, and the census of short spaces.
//!
//! Run with `cargo run --example planes`.

use ecp::linear::{
    bridges_classify, enumerate_linear_spaces, plane_order_exists, projective_plane,
    BridgesClass, Existence,
};

fn main() -> ecp::Result<()> {
    // PG(2,3): 13 points, 13 lines, four points on every line.
    let plane = projective_plane(3)?;
    let s = plane.space();
    println!("PG(2,3): {} points, {} lines; first three:", s.n(), s.line_count());
    for line in s.lines().iter().take(3) {
        println!("  {line:?}");
    }

    // Deleting one point leaves n = 12 points but still n + 1 = 13 lines —
    // and that count characterizes truncated planes almost everywhere.
    let truncated = plane.delete_point(0)?;
    println!(
        "minus a point: {} points, {} lines, classified as {:?}",
        truncated.n(),
        truncated.line_count(),
        bridges_classify(&truncated)?
    );

    // Almost: on five points there is exactly one linear space with l = n + 1
    // that is not a truncated plane.
    let spaces = enumerate_linear_spaces(5, 6)?;
    println!("\nlinear spaces with (n, l) = (5, 6): {}", spaces.len());
    for s in &spaces {
        println!("  lines {:?} → {:?}", s.lines(), bridges_classify(s)?);
        assert_eq!(bridges_classify(s)?, BridgesClass::N5Exception);
    }

    // Existence of a plane by order: constructions cover prime powers up
    // to 9, orders 6 and 10 are settled impossibilities, and 12 is open.
    for k in [2u64, 6, 9, 10, 12] {
        let verdict = match plane_order_exists(k) {
            Existence::Yes => "exists",
            Existence::No => "does not exist",
            Existence::Unknown => "open problem",
        };
        println!("projective plane of order {k}: {verdict}");
    }
    Ok(())
}
