//! Finite linear spaces, near-pencils, projective planes, and the
//! classifications that go with them.
//!
//! A linear space on points `0..n` satisfies L1 (every line has at least two
//! points), L2 (every point pair lies on exactly one line), and L3 (every
//! line misses at least one point). Nontrivial proper clique partitions of
//! `K_n` are exactly linear spaces — the correspondence is the identity on
//! line sets — which is how the de Bruijn–Erdős and Bridges theorems are
//! machine-checked here.
//!
//! Planes `PG(2,k)` are built from the three-dimensional vector space over
//! the `k`-element field: points are the one-dimensional subspaces, lines
//! the two-dimensional ones, both represented by triples normalized to lead
//! with 1. Supported orders are 2, 3, 4, 5, 7, 8, 9; orders 6 and 10 are
//! known not to exist and are refused with a dedicated error.

use serde::{Deserialize, Serialize};

use crate::cliques::{Clique, CliquePartition};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub mod gf;

/// Hard cap on point count: one `u128` mask per line (`PG(2,9)` has 91
/// points, comfortably inside).
pub const MAX_POINTS: usize = 128;

/// Point count above which isomorphism-complete operations (canonical
/// forms, census enumeration) refuse to run.
pub const ISO_BOUND: usize = 8;

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

/// One witness per violated axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// A line with an out-of-range or repeated point.
    Malformed { line: usize, detail: String },
    /// L1: a line with fewer than two points.
    L1 { line: usize },
    /// L2: a pair on the wrong number of lines.
    L2 { u: usize, v: usize, on_lines: usize },
    /// L3: a line containing every point.
    L3 { line: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceCheck {
    pub valid: bool,
    pub violations: Vec<AxiomViolation>,
}

/// Check L1–L3 against the given line sets, reporting the first witness for
/// each violated axiom. `allow_trivial` waives L3, admitting the trivial
/// space whose single line carries every point.
pub fn verify_linear_space_with(n: usize, lines: &[Vec<usize>], allow_trivial: bool) -> SpaceCheck {
    let mut violations = Vec::new();

    let mut malformed = None;
    for (i, line) in lines.iter().enumerate() {
        if let Some(&p) = line.iter().find(|&&p| p >= n) {
            malformed = Some(AxiomViolation::Malformed {
                line: i,
                detail: format!("point {p} out of range (n = {n})"),
            });
            break;
        }
        let mut sorted = line.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            malformed = Some(AxiomViolation::Malformed {
                line: i,
                detail: format!("repeated point in line {line:?}"),
            });
            break;
        }
    }
    let well_formed = malformed.is_none();
    violations.extend(malformed);

    if well_formed {
        if let Some(i) = (0..lines.len()).find(|&i| lines[i].len() < 2) {
            violations.push(AxiomViolation::L1 { line: i });
        }
        'l2: for u in 0..n {
            for v in u + 1..n {
                let on = lines.iter().filter(|l| l.contains(&u) && l.contains(&v)).count();
                if on != 1 {
                    violations.push(AxiomViolation::L2 { u, v, on_lines: on });
                    break 'l2;
                }
            }
        }
        if !allow_trivial {
            if let Some(i) = (0..lines.len()).find(|&i| lines[i].len() >= n && n >= 2) {
                violations.push(AxiomViolation::L3 { line: i });
            }
        }
    }

    SpaceCheck { valid: violations.is_empty(), violations }
}

/// [`verify_linear_space_with`] in the strict (L3-enforcing) regime.
pub fn verify_linear_space(n: usize, lines: &[Vec<usize>]) -> SpaceCheck {
    verify_linear_space_with(n, lines, false)
}

// ---------------------------------------------------------------------------
// LinearSpace
// ---------------------------------------------------------------------------

/// A validated linear space in canonical order (each line sorted, lines
/// sorted lexicographically).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearSpace {
    n: usize,
    lines: Vec<Vec<usize>>,
    masks: Vec<u128>,
}

impl LinearSpace {
    /// Validate strictly and canonicalize.
    pub fn new(n: usize, lines: Vec<Vec<usize>>) -> Result<LinearSpace> {
        Self::build(n, lines, false)
    }

    /// Like [`LinearSpace::new`] but admitting the trivial single-line space
    /// (L3 waived).
    pub fn new_allowing_trivial(n: usize, lines: Vec<Vec<usize>>) -> Result<LinearSpace> {
        Self::build(n, lines, true)
    }

    fn build(n: usize, mut lines: Vec<Vec<usize>>, allow_trivial: bool) -> Result<LinearSpace> {
        if n > MAX_POINTS {
            return Err(Error::TooManyVertices { n, max: MAX_POINTS });
        }
        let check = verify_linear_space_with(n, &lines, allow_trivial);
        if !check.valid {
            return Err(Error::NotALinearSpace(format!("{:?}", check.violations)));
        }
        for line in &mut lines {
            line.sort_unstable();
        }
        lines.sort();
        let masks = lines
            .iter()
            .map(|l| l.iter().fold(0u128, |m, &p| m | 1 << p))
            .collect();
        Ok(LinearSpace { n, lines, masks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of lines, the paper's `l`.
    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line_mask(&self, i: usize) -> u128 {
        self.masks[i]
    }

    /// Index of the unique line through `u` and `v`.
    pub fn line_through(&self, u: usize, v: usize) -> Option<usize> {
        let want = (1u128 << u) | (1u128 << v);
        (0..self.masks.len()).find(|&i| self.masks[i] & want == want)
    }

    pub fn point_degree(&self, p: usize) -> usize {
        self.masks.iter().filter(|&&m| m >> p & 1 == 1).count()
    }

    /// Line sizes, ascending.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.lines.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// P1: every two lines share a point.
    pub fn satisfies_p1(&self) -> bool {
        self.p1_witness().is_none()
    }

    /// A disjoint pair of lines, if any (the P1 counterexample).
    pub fn p1_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.masks.len() {
            for j in i + 1..self.masks.len() {
                if self.masks[i] & self.masks[j] == 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// P2: some four points have no three on a common line. Early-exits on
    /// the first quadrilateral.
    pub fn satisfies_p2(&self) -> bool {
        let n = self.n;
        let collinear = |a: usize, b: usize, c: usize| -> bool {
            match self.line_through(a, b) {
                Some(i) => self.masks[i] >> c & 1 == 1,
                None => false,
            }
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if collinear(a, b, c) {
                        continue;
                    }
                    for d in c + 1..n {
                        if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// `Some(k)` when this space is a projective plane of order `k ≥ 2`:
    /// P1, P2, uniform line size and point degree `k + 1`, and the counts
    /// `n = l = k² + k + 1`.
    pub fn plane_order(&self) -> Option<u64> {
        let s = self.lines.first()?.len();
        if s < 3
            || !self.lines.iter().all(|l| l.len() == s)
            || !(0..self.n).all(|p| self.point_degree(p) == s)
            || self.line_count() != self.n
            || self.n != s * s - s + 1
            || !self.satisfies_p1()
            || !self.satisfies_p2()
        {
            return None;
        }
        Some((s - 1) as u64)
    }

    /// Serialize as `{"points": n, "lines": [[p,…],…]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            points: usize,
            lines: &'a [Vec<usize>],
        }
        serde_json::to_string(&Doc { points: self.n, lines: &self.lines })
            .expect("serialization of plain data cannot fail")
    }

    pub fn from_json(text: &[u8]) -> Result<LinearSpace> {
        #[derive(Deserialize)]
        struct Doc {
            points: usize,
            lines: Vec<Vec<usize>>,
        }
        let doc: Doc = serde_json::from_slice(text)?;
        LinearSpace::new(doc.points, doc.lines)
    }

    /// The identity correspondence with clique partitions of `K_n`: lines
    /// become cliques of the complete host.
    pub fn to_partition(&self) -> Result<CliquePartition> {
        let mut host = Multigraph::new(self.n)?;
        for u in 0..self.n {
            for v in u + 1..self.n {
                host.set_q(u, v, 1)?;
            }
        }
        let cliques = self
            .lines
            .iter()
            .map(|l| Clique::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        CliquePartition::new(host, cliques)
    }

    /// Inverse of [`LinearSpace::to_partition`]; the host must be a complete
    /// simple graph and the cliques must satisfy L1/L3 (no trivial clique,
    /// no full clique).
    pub fn from_partition(p: &CliquePartition) -> Result<LinearSpace> {
        let host = p.host();
        let n = host.n();
        let complete = (0..n).all(|u| (u + 1..n).all(|v| host.q(u, v) == 1));
        if !complete {
            return Err(Error::Invalid("host of a linear space must be complete".into()));
        }
        LinearSpace::new(n, p.cliques().iter().map(|c| c.vertices().to_vec()).collect())
    }

    /// Lexicographically minimal line set over all point relabelings — the
    /// canonical form used for isomorph rejection. Bounded to tiny point
    /// counts.
    pub fn canonical_form(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > ISO_BOUND {
            return Err(Error::IsoTooLarge { n: self.n, bound: ISO_BOUND });
        }
        let mut best: Option<Vec<Vec<usize>>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut image: Vec<Vec<usize>> = self
                .lines
                .iter()
                .map(|l| {
                    let mut m: Vec<usize> = l.iter().map(|&x| p[x]).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            image.sort();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        });
        Ok(best.unwrap_or_default())
    }
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Point-relabeling isomorphism of linear spaces.
pub fn space_isomorphic(a: &LinearSpace, b: &LinearSpace) -> Result<bool> {
    if a.n() != b.n() || a.line_count() != b.line_count() || a.size_profile() != b.size_profile() {
        return Ok(false);
    }
    Ok(a.canonical_form()? == b.canonical_form()?)
}

// ---------------------------------------------------------------------------
// Named spaces
// ---------------------------------------------------------------------------

/// The near-pencil on `n ≥ 3` points: one long line `{1..n−1}` plus the
/// two-point lines `{0, i}`.
pub fn near_pencil(n: usize) -> Result<LinearSpace> {
    if n < 3 {
        return Err(Error::Invalid(format!("near-pencil needs ≥ 3 points, got {n}")));
    }
    let mut lines = vec![(1..n).collect::<Vec<usize>>()];
    lines.extend((1..n).map(|i| vec![0, i]));
    LinearSpace::new(n, lines)
}

/// The Fano plane's lines as written out in the source construction, on
/// points `0..7`.
pub fn fano_lines() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2],
        vec![2, 3, 4],
        vec![0, 4, 5],
        vec![0, 3, 6],
        vec![1, 4, 6],
        vec![2, 5, 6],
        vec![1, 3, 5],
    ]
}

/// [`fano_lines`] as cliques, ready to partition `K_7`.
pub fn fano_lines_as_cliques() -> Vec<Clique> {
    fano_lines()
        .into_iter()
        .map(|l| Clique::new(l).expect("fixed valid lines"))
        .collect()
}

// ---------------------------------------------------------------------------
// Projective planes
// ---------------------------------------------------------------------------

/// Whether a projective plane of order `k` exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Existence {
    Yes,
    No,
    Unknown,
}

fn is_prime_power(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let p = (2..=k).find(|d| k % d == 0).expect("k ≥ 2 has a least divisor");
    let mut rest = k;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

/// Table-driven existence: plane orders are ≥ 2; all prime powers exist;
/// 6 and 10 are known not to; everything else is open.
pub fn plane_order_exists(k: u64) -> Existence {
    if k < 2 || k == 6 || k == 10 {
        return Existence::No;
    }
    if is_prime_power(k) {
        return Existence::Yes;
    }
    Existence::Unknown
}

/// A verified projective plane of order `k` with its underlying space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePlane {
    space: LinearSpace,
    order: u64,
}

impl ProjectivePlane {
    pub fn space(&self) -> &LinearSpace {
        &self.space
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Remove point `x` from the point set and from every line, relabeling
    /// the remaining points downward. The result is a linear space with
    /// `k² + k` points and `k² + k + 1` lines: `k + 1` lines shrink to size
    /// `k` (those through `x`) and `k²` keep size `k + 1`.
    pub fn delete_point(&self, x: usize) -> Result<LinearSpace> {
        let n = self.space.n();
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
        let relabel = |p: usize| if p > x { p - 1 } else { p };
        let lines: Vec<Vec<usize>> = self
            .space
            .lines()
            .iter()
            .map(|l| l.iter().filter(|&&p| p != x).map(|&p| relabel(p)).collect())
            .collect();
        LinearSpace::new(n - 1, lines)
    }
}

/// Construct `PG(2,k)` for a supported order and verify every plane
/// invariant on the result.
pub fn projective_plane(k: u64) -> Result<ProjectivePlane> {
    match k {
        2 | 3 | 4 | 5 | 7 | 8 | 9 => {}
        6 | 10 => return Err(Error::PlaneNonexistent(k)),
        _ if k < 2 => {
            return Err(Error::Invalid(format!("plane order must be ≥ 2, got {k}")))
        }
        _ => {
            return Err(match plane_order_exists(k) {
                Existence::Yes => Error::PlaneUnavailable(k),
                Existence::No => Error::PlaneNonexistent(k),
                Existence::Unknown => Error::PlaneOrderUnknown(k),
            })
        }
    }

    let f = gf::Gf::new(k as u8)?;
    let reps = normalized_triples(k as u8);
    let n = reps.len();
    debug_assert_eq!(n as u64, k * k + k + 1);

    // Point i lies on line j iff the dot product of their triples vanishes.
    let dot = |a: &[u8; 3], b: &[u8; 3]| -> u8 {
        let mut acc = 0;
        for i in 0..3 {
            acc = f.add(acc, f.mul(a[i], b[i]));
        }
        acc
    };
    let lines: Vec<Vec<usize>> = reps
        .iter()
        .map(|line_rep| {
            (0..n).filter(|&p| dot(line_rep, &reps[p]) == 0).collect::<Vec<usize>>()
        })
        .collect();

    let space = LinearSpace::new(n, lines)?;
    let verified = space.plane_order() == Some(k)
        && space
            .lines()
            .iter()
            .enumerate()
            .all(|(i, _)| {
                (i + 1..space.line_count())
                    .all(|j| (space.line_mask(i) & space.line_mask(j)).count_ones() == 1)
            });
    if !verified {
        return Err(Error::VerificationFailed(format!(
            "constructed PG(2,{k}) failed its own invariants"
        )));
    }
    Ok(ProjectivePlane { space, order: k })
}

/// All nonzero triples over the `k`-element field whose first nonzero
/// coordinate is 1, in lexicographic order — canonical representatives of
/// the projective points/lines.
fn normalized_triples(k: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let lead = [a, b, c].into_iter().find(|&x| x != 0);
                if lead == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Census enumeration and the Bridges classification
// ---------------------------------------------------------------------------

/// All isomorphism classes of linear spaces with `n` points and exactly `l`
/// lines, as canonical representatives in deterministic order. Works by
/// enumerating nontrivial proper clique partitions of `K_n` (the identity
/// correspondence) and rejecting isomorphs via canonical forms, so it is
/// bounded to `n ≤ 7`.
pub fn enumerate_linear_spaces(n: usize, l: usize) -> Result<Vec<LinearSpace>> {
    if n > 7 {
        return Err(Error::IsoTooLarge { n, bound: 7 });
    }
    if n < 3 {
        // No lines fit on ≤ 2 points under L3; the empty space is the only
        // inhabitant, at l = 0 and n ≤ 1 (two points leave the pair
        // uncoverable).
        return Ok(if l == 0 && n <= 1 {
            vec![LinearSpace::new(n, Vec::new())?]
        } else {
            Vec::new()
        });
    }
    let mut host = Multigraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            host.set_q(u, v, 1)?;
        }
    }
    let opts = crate::cliques::SearchOptions {
        nontrivial_only: true,
        proper_only: true,
        ..Default::default()
    };
    let mut classes: Vec<(Vec<Vec<usize>>, LinearSpace)> = Vec::new();
    for p in crate::cliques::enumerate_partitions(&host, l, &opts)? {
        if p.len() != l {
            continue;
        }
        let space = LinearSpace::from_partition(&p)?;
        let canon = space.canonical_form()?;
        if !classes.iter().any(|(c, _)| *c == canon) {
            let representative = LinearSpace::new(n, canon.clone())?;
            classes.push((canon, representative));
        }
    }
    classes.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(classes.into_iter().map(|(_, s)| s).collect())
}

/// Outcome of the Bridges test on a space with `l = n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum BridgesClass {
    /// A projective plane of the given order with one point deleted.
    TruncatedPlane { order: u64 },
    /// One of the exceptional 5-point spaces.
    N5Exception,
    Other,
}

/// Classify a space with `l = n + 1` lines: a truncated projective plane,
/// the `n = 5` exception, or neither.
///
/// Truncation is tested constructively: a space is a punctured plane of
/// order `k` exactly when its `k + 1` short lines can absorb one fresh
/// point and the extension verifies as a plane. This avoids isomorphism
/// search entirely and is order-agnostic (for orders with several
/// non-isomorphic planes, any of their truncations qualifies).
pub fn bridges_classify(s: &LinearSpace) -> Result<BridgesClass> {
    let n = s.n();
    if s.line_count() != n + 1 {
        return Err(Error::Invalid(format!(
            "Bridges classification requires l = n + 1, got n = {n}, l = {}",
            s.line_count()
        )));
    }
    if n == 5 {
        // The census of (5, 6)-spaces is the definition of the exception;
        // membership is checked honestly rather than assumed.
        for member in enumerate_linear_spaces(5, 6)? {
            if space_isomorphic(s, &member)? {
                return Ok(BridgesClass::N5Exception);
            }
        }
        return Ok(BridgesClass::Other);
    }
    let Some(k) = (2..).take_while(|k| k * k + k <= n).find(|k| k * k + k == n) else {
        return Ok(BridgesClass::Other);
    };
    let short: Vec<&Vec<usize>> = s.lines().iter().filter(|l| l.len() == k).collect();
    let long = s.lines().iter().filter(|l| l.len() == k + 1).count();
    if short.len() != k + 1 || long != k * k {
        return Ok(BridgesClass::Other);
    }
    // Re-attach a fresh point to every short line and test planehood.
    let extended: Vec<Vec<usize>> = s
        .lines()
        .iter()
        .map(|l| {
            let mut line = l.clone();
            if line.len() == k {
                line.push(n);
            }
            line
        })
        .collect();
    let Ok(candidate) = LinearSpace::new(n + 1, extended) else {
        return Ok(BridgesClass::Other);
    };
    if candidate.plane_order() == Some(k as u64) {
        Ok(BridgesClass::TruncatedPlane { order: k as u64 })
    } else {
        Ok(BridgesClass::Other)
    }
}
