//! The acceptance gate: twelve criteria, one test each, each printing a
//! single `criterion NN: PASS/FAIL` line (visible under `--nocapture`, and
//! always visible for a failing criterion).
//!
//! Criterion 2 fails by design of this crate's findings, not by accident:
//! its antichain half asserts a count the census refutes. The test states
//! the claim exactly as given and lets the enumeration answer; see the
//! failure message for the full analysis.

use ecp::cliques::{cp_exact, enumerate_partitions, SearchOptions};
use ecp::corpus;
use ecp::family::RepKind;
use ecp::graph::format::{from_graph6, to_graph6};
use ecp::graph::{line_graph, Graph, Multigraph};
use ecp::linear::{fano_lines, projective_plane, space_isomorphic, LinearSpace};
use ecp::omega::{enumerate_min_reps, omega_exact, OmegaOptions};
use ecp::oracle::{min_representation, OracleOptions};
use ecp::verify::{linegraph_corpus, run_suite, Suite, SuiteOptions, SuiteReport};

fn verdict(criterion: u32, pass: bool, note: &str) {
    println!("criterion {criterion:02}: {} — {note}", if pass { "PASS" } else { "FAIL" });
}

fn failing_cases(report: &SuiteReport) -> String {
    report
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

fn suite(s: Suite, opts: &SuiteOptions) -> SuiteReport {
    run_suite(s, opts).expect("suite runs to completion")
}

#[test]
fn criterion_01_de_bruijn_erdos() {
    let report = suite(Suite::Dbe, &SuiteOptions { max_n: Some(7), ..SuiteOptions::default() });
    let pass = report.passed() && !report.budget_exhausted;
    verdict(
        1,
        pass,
        &format!(
            "minimum nontrivial proper partitions of K_3..K_7 have size n and classify as \
             near-pencils or planes; K_7 census and the two Fano counts agree \
             ({} cases)",
            report.cases.len()
        ),
    );
    assert!(pass, "failing cases: {}", failing_cases(&report));
}

#[test]
fn criterion_02_kn_family_antichain_not_unique() {
    let opts = OmegaOptions::default();
    let mut problems = Vec::new();
    for n in 3..=6usize {
        let g = corpus::complete(n).unwrap();
        for kind in [RepKind::Family, RepKind::Antichain] {
            let census = enumerate_min_reps(&g, kind, &opts).unwrap();
            if census.omega != n {
                problems.push(format!("ω_{kind}(K_{n}) = {} ≠ {n}", census.omega));
            }
            if census.counting_b < 2 {
                problems.push(format!(
                    "K_{n} {kind}: counting B = {} (labeled plans = {}, counting A = {}), \
                     so the ≥2-classes claim fails",
                    census.counting_b,
                    census.labeled_count(),
                    census.counting_a
                ));
            }
        }
    }
    let pass = problems.is_empty();
    verdict(
        2,
        pass,
        if pass {
            "ω_f(K_n) = ω_a(K_n) = n for n = 3..6 with ≥2 counting-B classes for both kinds"
        } else {
            "ω_f(K_n) = ω_a(K_n) = n holds, and the family kind has ≥2 classes, but the \
             antichain uniqueness claim is refuted by the census — see the panic message"
        },
    );
    assert!(
        pass,
        "the antichain half of this criterion is false as stated, and the census proves it: \
         for n = 3..6 every minimum antichain representation of K_n is a near-pencil manner, \
         K_3 has exactly one labeled minimum plan, and for n = 4..6 the n labeled near-pencil \
         plans (one per apex vertex) form a single orbit under Aut(K_n). Counting B is \
         therefore 1 and K_n IS uniquely intersectable in the antichain sense at these sizes; \
         the first n with two antichain classes is 7, where the near-pencil and the Fano-plane \
         manners separate. The family half genuinely has ≥2 classes (all-distinct-pairs vs \
         near-pencil manners already at K_3). Recorded verbatim rather than weakening the \
         assertion. Census details: {}",
        problems.join(" | ")
    );
}

#[test]
fn criterion_03_kn_uniform_numbers() {
    let opts = OmegaOptions::default();
    let expected = [(3usize, 3usize), (4, 5), (5, 6), (6, 7), (7, 7)];
    let mut problems = Vec::new();
    let mut classes = Vec::new();
    for (n, want) in expected {
        let g = corpus::complete(n).unwrap();
        let census = enumerate_min_reps(&g, RepKind::Uniform, &opts).unwrap();
        if census.omega != want {
            problems.push(format!("ω_u(K_{n}) = {} ≠ {want}", census.omega));
        }
        classes.push((n, census.counting_b));
        match n {
            6 if census.counting_b != 2 => problems.push(format!(
                "K_6 uniform counting B = {} ≠ 2",
                census.counting_b
            )),
            7 if census.counting_b != 1 => problems.push(format!(
                "K_7 uniform counting B = {} ≠ 1 (u.i.u. fails)",
                census.counting_b
            )),
            _ => {}
        }
    }
    let pass = problems.is_empty();
    verdict(
        3,
        pass,
        &format!(
            "ω_u(K_n) = 3, 5, 6, 7, 7 for n = 3..7; counting-B classes {classes:?} \
             (two for K_6, one for K_7)"
        ),
    );
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_04_bridges() {
    let report = suite(Suite::Bridges, &SuiteOptions::default());
    let pass = report.passed() && !report.budget_exhausted;
    verdict(
        4,
        pass,
        &format!(
            "truncated planes have l = n + 1 for k ∈ {{2, 3}}; spaces with (n, l) = (4, 5) \
             are absent, (5, 6) is the recorded one-space census, (6, 7) is all truncated \
             planes ({} cases)",
            report.cases.len()
        ),
    );
    assert!(pass, "failing cases: {}", failing_cases(&report));
}

#[test]
fn criterion_05_linegraph_cp() {
    let corpus_list = linegraph_corpus(&SuiteOptions::default());
    let mut problems = Vec::new();
    if corpus_list.len() < 12 {
        problems.push(format!("corpus has only {} graphs", corpus_list.len()));
    }
    for (name, g) in &corpus_list {
        if g.edge_count() > 7 {
            problems.push(format!("{name} has {} edges > 7", g.edge_count()));
        }
        if !g.is_connected() {
            problems.push(format!("{name} is disconnected"));
        }
    }
    // The mandated members: the named small graphs, a tree with two
    // branch vertices and no 3-wings (S_{2,3} — anything without a
    // triangle is 3-wing-free), and a graph with two 3-wings (dumbbell).
    for required in ["paw", "P_4", "P_5", "S_{2,2}", "S_{2,3}", "dumbbell"] {
        if !corpus_list.iter().any(|(n, _)| n == required) {
            problems.push(format!("required corpus member {required} missing"));
        }
    }
    let report = suite(Suite::LinegraphCp, &SuiteOptions::default());
    if !report.passed() {
        problems.push(format!("failing cases: {}", failing_cases(&report)));
    }
    let pass = problems.is_empty();
    verdict(
        5,
        pass,
        &format!(
            "cp(L(g)) = |V_2| with exactly 2^w_3 minimum partitions on all {} corpus graphs",
            corpus_list.len()
        ),
    );
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_06_linegraph_family() {
    let report = suite(Suite::LinegraphFamily, &SuiteOptions::default());
    let skipped = report
        .cases
        .iter()
        .filter(|c| c.detail.contains("excluded from the family theorem"))
        .count();
    let pass = report.passed() && skipped == 2;
    verdict(
        6,
        pass,
        &format!(
            "ω_f(L(g)) = |V_2| + Σ(m_i − 1) with 2^w_3 plan-level representations on the \
             corpus; the {skipped} star members sit outside the theorem and are skipped"
        ),
    );
    assert!(
        pass,
        "failing cases: {}; excluded-star skips = {skipped} (want 2)",
        failing_cases(&report)
    );
}

#[test]
fn criterion_07_linegraph_antichain() {
    let report = suite(Suite::LinegraphAntichain, &SuiteOptions::default());
    let mut problems = Vec::new();
    if !report.passed() {
        problems.push(format!("ω mismatch: {}", failing_cases(&report)));
    }
    // S_{2,2} must be present as a fully qualifying case (every m_i ≥ 2),
    // not merely informative.
    let s22_qualifying = report
        .cases
        .iter()
        .any(|c| c.name == "ω_a(L(S_{2,2}))" && c.pass);
    if !s22_qualifying {
        problems.push("S_{2,2} is not a passing qualifying case".into());
    }
    if report.discrepancies.is_empty() {
        problems.push("no discrepancy records: the count disagreements were suppressed".into());
    }
    for d in &report.discrepancies {
        if d.case.is_empty() || d.stated.is_empty() || d.census.is_empty() || d.note.is_empty() {
            problems.push(format!("unstructured discrepancy record: {d:?}"));
        }
    }
    let pass = problems.is_empty();
    verdict(
        7,
        pass,
        &format!(
            "ω_a(L(g)) = |V_2| + Σ m_i on every qualifying corpus graph; {} count \
             discrepancies recorded in the structured report, none suppressed",
            report.discrepancies.len()
        ),
    );
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_08_exceptional_partition_counts() {
    let opts = SearchOptions::default();
    let mut problems = Vec::new();
    let mut counted = Vec::new();
    for (name, g, want) in [
        ("L(K_4)", corpus::complete(4).unwrap(), 2usize),
        ("L(3K_2 ∨ K_1)", corpus::three_k2_join_k1().unwrap(), 3usize),
    ] {
        let (l, _) = line_graph(&g).unwrap();
        let host = Multigraph::from(&l);
        let cp = cp_exact(&host, &opts).unwrap();
        let minima = enumerate_partitions(&host, cp, &opts).unwrap();
        counted.push(format!("{name}: {} minima at cp = {cp}", minima.len()));
        if minima.len() != want {
            problems.push(format!("{name}: {} minimum partitions ≠ {want}", minima.len()));
        }
    }
    let pass = problems.is_empty();
    verdict(8, pass, &format!("exhaustive enumeration: {}", counted.join("; ")));
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_09_bijection_round_trips() {
    let report = suite(Suite::Bijection, &SuiteOptions::default());
    let pass = report.passed() && !report.budget_exhausted;
    verdict(
        9,
        pass,
        "Q(F(Q)) = Q with |S(F(Q))| = |Q| and the right host on every partition of every \
         graph on ≤ 5 vertices; F(Q(F)) = F up to relabeling for every monopolized-free \
         family on ground ≤ 5",
    );
    assert!(pass, "failing cases: {}", failing_cases(&report));
}

#[test]
fn criterion_10_oracle_independence() {
    let engine_opts = OmegaOptions::default();
    let oracle_opts = OracleOptions::default();
    let kinds =
        [RepKind::Multifamily, RepKind::Family, RepKind::Antichain, RepKind::Uniform];
    let mut checked = 0usize;
    let mut problems = Vec::new();
    let mut audit = |name: String, g: &Graph| {
        let host = Multigraph::from(g);
        for kind in kinds {
            let engine = omega_exact(g, kind, &engine_opts).unwrap();
            let oracle = min_representation(&host, kind, &oracle_opts)
                .unwrap()
                .map(|(p, _)| p);
            if oracle != Some(engine) {
                problems.push(format!(
                    "{name} {kind}: engine {engine} vs oracle {oracle:?}"
                ));
            }
            checked += 1;
        }
    };
    for (m, level) in corpus::graphs_without_isolates_up_to(6).unwrap().iter().enumerate() {
        for (i, g) in level.iter().enumerate() {
            audit(format!("{m}-edge class {i}"), g);
        }
    }
    // Isolated vertices change nothing structural — each costs one fresh
    // element for every kind — but the code paths differ, so sample them.
    let mut paw_isolated = Graph::new(6).unwrap();
    for (u, v) in corpus::paw().unwrap().edges() {
        paw_isolated.add_edge(u, v).unwrap();
    }
    audit("paw + 2 isolated".into(), &paw_isolated);
    audit("K_1".into(), &Graph::new(1).unwrap());
    let mut matching_isolated = Graph::new(5).unwrap();
    matching_isolated.add_edge(0, 1).unwrap();
    matching_isolated.add_edge(2, 3).unwrap();
    audit("2K_2 + isolated".into(), &matching_isolated);
    let pass = problems.is_empty();
    verdict(
        10,
        pass,
        &format!(
            "partition+augmentation engine equals the direct-assignment brute force on \
             {checked} (graph, kind) pairs: every isolate-free graph with ≤ 6 edges plus \
             isolated-vertex samples, all four kinds"
        ),
    );
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_11_plane_constructions() {
    let mut problems = Vec::new();
    for k in [2u64, 3, 4, 5, 7, 8, 9] {
        let plane = projective_plane(k).unwrap();
        let s = plane.space();
        let n = (k * k + k + 1) as usize;
        if s.n() != n || s.line_count() != n {
            problems.push(format!("PG(2,{k}): {} points, {} lines ≠ {n}", s.n(), s.line_count()));
        }
        if !s.lines().iter().all(|l| l.len() == k as usize + 1) {
            problems.push(format!("PG(2,{k}): some line is not {}-point", k + 1));
        }
        let degree_ok = (0..s.n())
            .all(|p| s.lines().iter().filter(|l| l.contains(&p)).count() == k as usize + 1);
        if !degree_ok {
            problems.push(format!("PG(2,{k}): some point is not on {} lines", k + 1));
        }
        if !s.satisfies_p1() {
            problems.push(format!("PG(2,{k}): two lines fail to meet"));
        }
        if !s.satisfies_p2() {
            problems.push(format!("PG(2,{k}): P2 fails"));
        }
    }
    let fano = projective_plane(2).unwrap();
    let reference = LinearSpace::new(7, fano_lines()).unwrap();
    if !space_isomorphic(fano.space(), &reference).unwrap() {
        problems.push("PG(2,2) is not incidence-isomorphic to the reference Fano lines".into());
    }
    let pass = problems.is_empty();
    verdict(
        11,
        pass,
        "PG(2,k) for k ∈ {2, 3, 4, 5, 7, 8, 9} passes all plane invariants; PG(2,2) is \
         incidence-isomorphic to the reference Fano line set",
    );
    assert!(pass, "{}", problems.join(" | "));
}

#[test]
fn criterion_12_graph6_round_trip() {
    let mut checked = 0u64;
    for n in 0..=6usize {
        let pair_count = n * n.saturating_sub(1) / 2;
        for code in 0u64..1 << pair_count {
            let mut g = Graph::new(n).unwrap();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if code >> bit & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    bit += 1;
                }
            }
            let text = to_graph6(&g);
            let back = from_graph6(text.as_bytes()).unwrap();
            assert_eq!(back, g, "decode ∘ encode ≠ identity for {g:?}");
            assert_eq!(to_graph6(&back), text, "re-encode changed bytes for {g:?}");
            checked += 1;
        }
    }
    // Known byte vectors pin the encoding itself, not just the round trip.
    assert_eq!(to_graph6(&corpus::complete(4).unwrap()), "C~");
    assert_eq!(to_graph6(&Graph::new(5).unwrap()), "D??");
    assert_eq!(to_graph6(&corpus::complete(3).unwrap()), "Bw");
    verdict(
        12,
        true,
        &format!("encode ∘ decode is the identity on all {checked} labeled graphs with ≤ 6 \
                  vertices, byte-exact; known byte vectors match"),
    );
}
