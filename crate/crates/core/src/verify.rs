//! Exhaustive verification suites.
//!
//! Each suite checks one statement about quasi-f objects over an
//! explicit parameter range and reports every counterexample it finds
//! instead of stopping at the first: a falsified statement should come
//! back as a census of failures, not a single panic. Counterexamples
//! are serialized in the module file formats so they can be replayed
//! through the analysis commands.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::cm::{
    build_cm_graph, cm_check, match_remark_exceptions, plan_construction, star_join_graph,
    BoundMode, CmVerdict, ExceptionPattern,
};
use crate::complex::full_mask;
use crate::error::{Error, Result};
use crate::exec::{self, Outcome};
use crate::face::Face;
use crate::graph::{
    construct_n_nr_graph, enumerate_quasi_f_graphs, subsets_of_size, EdgeSpace, Graph,
    GraphEnumOptions,
};
use crate::ideal::{
    facet_ideal, perfect_number_bruteforce, perfect_number_d2, stanley_reisner_ideal,
    type_bounds_d2, SquarefreeIdeal,
};

/// Identifiers of the verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteId {
    Thm34,
    Lemma31,
    Prop32,
    Thm41,
    Thm42,
    Cor44,
    Thm53,
    Remark54,
    NFormula,
    DualityRoundtrip,
    CensusN4,
}

impl SuiteId {
    pub const ALL: [SuiteId; 11] = [
        SuiteId::Thm34,
        SuiteId::Lemma31,
        SuiteId::Prop32,
        SuiteId::Thm41,
        SuiteId::Thm42,
        SuiteId::Cor44,
        SuiteId::Thm53,
        SuiteId::Remark54,
        SuiteId::NFormula,
        SuiteId::DualityRoundtrip,
        SuiteId::CensusN4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Thm34 => "thm_3_4",
            SuiteId::Lemma31 => "lemma_3_1",
            SuiteId::Prop32 => "prop_3_2",
            SuiteId::Thm41 => "thm_4_1",
            SuiteId::Thm42 => "thm_4_2",
            SuiteId::Cor44 => "cor_4_4",
            SuiteId::Thm53 => "thm_5_3",
            SuiteId::Remark54 => "remark_5_4",
            SuiteId::NFormula => "n_formula",
            SuiteId::DualityRoundtrip => "duality_roundtrip",
            SuiteId::CensusN4 => "census_n4",
        }
    }

    /// What the suite certifies, in one line.
    pub fn describes(self) -> &'static str {
        match self {
            SuiteId::Thm34 => {
                "direct f-vector verdict equals the triangle-free-complement characterization"
            }
            SuiteId::Lemma31 => "every quasi-f graph has a triangle-free complement",
            SuiteId::Prop32 => "the type entry b of a quasi-f graph respects the degree-2 bounds",
            SuiteId::Thm41 => "pure quasi-f complexes of dimension >= 2 are connected",
            SuiteId::Thm42 => {
                "disconnected quasi-f graphs are exactly the two-clique graphs with (m-n)^2 = m+n-2b"
            }
            SuiteId::Cor44 => "the [n:n-r] two-clique family is quasi-f of the predicted type",
            SuiteId::Thm53 => "the strict two-clique construction is Cohen-Macaulay of type (0,b)",
            SuiteId::Remark54 => "boundary constructions are Cohen-Macaulay except the known exceptions",
            SuiteId::NFormula => "the closed-form degree-2 perfect number matches brute force",
            SuiteId::DualityRoundtrip => "facet and non-face complex constructions invert each other",
            SuiteId::CensusN4 => "the 4-vertex census has 5 classes splitting 2/3 on the CM check",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteId> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSuite { name: s.into() })
    }
}

impl Serialize for SuiteId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Explicit search caps; nothing auto-scales.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest vertex count for the labeled-graph sweeps (max 7).
    pub graph_max_n: usize,
    /// Largest vertex count for the pure-complex sweeps (max 6).
    pub complex_max_n: usize,
    /// Largest facet dimension for the pure-complex sweeps (max 3).
    pub complex_max_dim: usize,
    /// Largest vertex count for the two-clique constructions (max 16).
    pub construct_max_n: usize,
    /// Largest ambient variable count for the duality roundtrip (max 5;
    /// exhaustive through 4, deterministically sampled at 5).
    pub ideal_max_n: usize,
    /// Largest n for the perfect-number brute force (max 7).
    pub perfect_max_n: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            graph_max_n: 6,
            complex_max_n: 5,
            complex_max_dim: 2,
            construct_max_n: 12,
            ideal_max_n: 4,
            perfect_max_n: 6,
        }
    }
}

impl Caps {
    fn validate(&self) -> Result<()> {
        let checks: [(&str, usize, usize, usize); 6] = [
            ("graph_max_n", self.graph_max_n, 2, 7),
            ("complex_max_n", self.complex_max_n, 3, 6),
            ("complex_max_dim", self.complex_max_dim, 2, 3),
            ("construct_max_n", self.construct_max_n, 4, 16),
            ("ideal_max_n", self.ideal_max_n, 1, 5),
            ("perfect_max_n", self.perfect_max_n, 4, 7),
        ];
        for (name, value, lo, hi) in checks {
            if value < lo || value > hi {
                return Err(Error::CapExceeded {
                    what: format!("{name} = {value} outside the supported range {lo}..={hi}"),
                });
            }
        }
        Ok(())
    }
}

/// A replayable counterexample: `case` is the offending input in its
/// module file format, `detail` says what went wrong.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: SuiteId,
    pub parameter_range: String,
    pub cases_run: u64,
    pub violations: Vec<Violation>,
    pub elapsed_secs: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for SuiteResult {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SuiteResult", 6)?;
        s.serialize_field("id", &self.suite)?;
        s.serialize_field("pass", &self.passed())?;
        s.serialize_field("parameter_range", &self.parameter_range)?;
        s.serialize_field("cases_run", &self.cases_run)?;
        s.serialize_field("violations", &self.violations)?;
        s.serialize_field("elapsed_secs", &self.elapsed_secs)?;
        s.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConformanceReport {
    pub suites: Vec<SuiteResult>,
    pub overall: bool,
}

/// Runs one suite under the given caps.
pub fn run_suite(id: SuiteId, caps: &Caps) -> Result<SuiteResult> {
    caps.validate()?;
    let start = Instant::now();
    let (parameter_range, cases_run, violations) = match id {
        SuiteId::Thm34 => suite_route_agreement(caps),
        SuiteId::Lemma31 => suite_triangle_free_complement(caps),
        SuiteId::Prop32 => suite_type_bounds(caps)?,
        SuiteId::Thm41 => suite_pure_connected(caps),
        SuiteId::Thm42 => suite_disconnected_classification(caps),
        SuiteId::Cor44 => suite_two_clique_family(caps),
        SuiteId::Thm53 => suite_strict_construction(caps),
        SuiteId::Remark54 => suite_boundary_exceptions(caps),
        SuiteId::NFormula => suite_perfect_number(caps)?,
        SuiteId::DualityRoundtrip => suite_duality(caps),
        SuiteId::CensusN4 => suite_census_n4(),
    };
    Ok(SuiteResult {
        suite: id,
        parameter_range,
        cases_run,
        violations,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Runs every suite; the report is `overall = true` only if all pass.
pub fn run_all(caps: &Caps) -> Result<ConformanceReport> {
    caps.validate()?;
    #[cfg(feature = "parallel")]
    let suites: Vec<SuiteResult> = {
        use rayon::prelude::*;
        SuiteId::ALL
            .par_iter()
            .map(|id| run_suite(*id, caps))
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let suites: Vec<SuiteResult> = SuiteId::ALL
        .iter()
        .map(|id| run_suite(*id, caps))
        .collect::<Result<_>>()?;
    let overall = suites.iter().all(|s| s.passed());
    Ok(ConformanceReport { suites, overall })
}

fn graph_violation(g: &Graph, detail: String) -> Violation {
    Violation {
        case: g.to_text(),
        detail,
    }
}

// ---------------------------------------------------------------------
// Graph sweeps
// ---------------------------------------------------------------------

/// Both quasi-f routes agree, including the reported type, on every
/// isolated-vertex-free labeled graph.
fn suite_route_agreement(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 2..=caps.graph_max_n {
        let space = EdgeSpace::new(n);
        let full = full_mask(n);
        let result = exec::sweep(space.total_masks(), |mask| {
            let mask = mask as u32;
            if space.coverage(mask) != full {
                return Outcome::Skipped;
            }
            let g = space.graph(mask);
            let direct = g.is_quasi_f_direct().expect("no isolated vertices");
            let (verdict, b) = g.is_quasi_f_characterized().expect("no isolated vertices");
            if direct.is_quasi_f != verdict {
                return Outcome::Fail(graph_violation(
                    &g,
                    format!(
                        "direct verdict {} disagrees with characterization {}",
                        direct.is_quasi_f, verdict
                    ),
                ));
            }
            if verdict && direct.type_vector.as_deref() != Some(&[0, b.unwrap()]) {
                return Outcome::Fail(graph_violation(
                    &g,
                    format!(
                        "direct type {:?} disagrees with characterized b = {}",
                        direct.type_vector,
                        b.unwrap()
                    ),
                ));
            }
            Outcome::Pass
        });
        cases += result.cases;
        violations.extend(result.violations);
    }
    (
        format!(
            "all isolated-vertex-free graphs, n = 2..={}",
            caps.graph_max_n
        ),
        cases,
        violations,
    )
}

/// The complement of every quasi-f graph (direct route) is
/// triangle-free; equivalently, the edge-ideal generators are upper
/// perfect, which exercises the shadow machinery as a second route.
fn suite_triangle_free_complement(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 2..=caps.graph_max_n {
        let space = EdgeSpace::new(n);
        let full = full_mask(n);
        let result = exec::sweep(space.total_masks(), |mask| {
            let mask = mask as u32;
            if space.coverage(mask) != full {
                return Outcome::Skipped;
            }
            let g = space.graph(mask);
            let direct = g.is_quasi_f_direct().expect("no isolated vertices");
            if !direct.is_quasi_f {
                return Outcome::Skipped;
            }
            if let Some((a, b, c)) = g.complement().find_triangle() {
                return Outcome::Fail(graph_violation(
                    &g,
                    format!("quasi-f but the complement holds the triangle {{{a},{b},{c}}}"),
                ));
            }
            let gens = g.edge_ideal().expect("quasi-f graphs have edges");
            match crate::ideal::is_upper_perfect(gens.generators(), n) {
                Ok(true) => Outcome::Pass,
                other => Outcome::Fail(graph_violation(
                    &g,
                    format!("edge-ideal generators are not upper perfect: {other:?}"),
                )),
            }
        });
        cases += result.cases;
        violations.extend(result.violations);
    }
    (
        format!("quasi-f graphs, n = 2..={}", caps.graph_max_n),
        cases,
        violations,
    )
}

/// Every quasi-f graph on n >= 4 vertices has b inside
/// `[-C(n,2) + 2, C(n,2) - 2 N(n,2)]`.
fn suite_type_bounds(caps: &Caps) -> Result<(String, u64, Vec<Violation>)> {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 4..=caps.graph_max_n {
        let (lo, hi) = type_bounds_d2(n)?;
        let space = EdgeSpace::new(n);
        let full = full_mask(n);
        let result = exec::sweep(space.total_masks(), |mask| {
            let mask = mask as u32;
            if space.coverage(mask) != full {
                return Outcome::Skipped;
            }
            let g = space.graph(mask);
            match g.is_quasi_f_characterized().expect("no isolated vertices") {
                (false, _) => Outcome::Skipped,
                (true, Some(b)) if lo <= b && b <= hi => Outcome::Pass,
                (true, b) => Outcome::Fail(graph_violation(
                    &g,
                    format!("b = {b:?} escapes the bounds [{lo}, {hi}]"),
                )),
            }
        });
        cases += result.cases;
        violations.extend(result.violations);
    }
    Ok((
        format!("quasi-f graphs, n = 4..={}", caps.graph_max_n),
        cases,
        violations,
    ))
}

/// Pure complexes of dimension >= 2 with quasi-f facet ideal are
/// connected.
fn suite_pure_connected(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for d in 2..=caps.complex_max_dim {
        for n in (d + 1)..=caps.complex_max_n {
            let candidates = subsets_of_size(n, d + 1);
            let k = candidates.len();
            if k > 20 {
                continue;
            }
            let full = full_mask(n);
            let result = exec::sweep(1u64 << k, |pick| {
                if pick == 0 {
                    return Outcome::Skipped;
                }
                let mut facets: Vec<Face> = Vec::new();
                let mut cover = 0u16;
                let mut rest = pick;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    cover |= candidates[i];
                    facets.push(Face::from_mask(candidates[i]));
                }
                if cover != full {
                    return Outcome::Skipped;
                }
                let ideal = SquarefreeIdeal::from_antichain(n, facets.clone());
                if !ideal.quasi_f_report().is_quasi_f {
                    return Outcome::Pass;
                }
                let complex = crate::complex::SimplicialComplex::from_facets(facets)
                    .expect("facets are non-empty");
                if complex.is_connected() {
                    Outcome::Pass
                } else {
                    // Serialized as the facet ideal so the case replays
                    // through `analyze-ideal`.
                    Outcome::Fail(Violation {
                        case: ideal.to_text(),
                        detail: format!("pure {d}-dimensional quasi-f complex is disconnected"),
                    })
                }
            });
            cases += result.cases;
            violations.extend(result.violations);
        }
    }
    (
        format!(
            "pure d-complexes covering 1..=n, d = 2..={}, n <= {}",
            caps.complex_max_dim, caps.complex_max_n
        ),
        cases,
        violations,
    )
}

/// Forward: a disconnected quasi-f graph is two cliques satisfying the
/// size identity, and connectivity coincides with not being a
/// two-clique graph. Converse: every two-clique graph with parts >= 2
/// is a disconnected quasi-f graph of the type the identity predicts.
fn suite_disconnected_classification(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 2..=caps.graph_max_n {
        let space = EdgeSpace::new(n);
        let full = full_mask(n);
        let result = exec::sweep(space.total_masks(), |mask| {
            let mask = mask as u32;
            if space.coverage(mask) != full {
                return Outcome::Skipped;
            }
            let g = space.graph(mask);
            let (verdict, _) = g.is_quasi_f_characterized().expect("no isolated vertices");
            if !verdict {
                return Outcome::Skipped;
            }
            if g.is_connected() {
                // A connected quasi-f graph must not be a two-clique
                // graph, and vice versa.
                return if g.is_mn_graph().is_none() {
                    Outcome::Pass
                } else {
                    Outcome::Fail(graph_violation(
                        &g,
                        "connected quasi-f graph classified as a two-clique graph".into(),
                    ))
                };
            }
            match g.check_disconnected_classification() {
                Ok(true) => Outcome::Pass,
                Ok(false) => Outcome::Fail(graph_violation(
                    &g,
                    "disconnected quasi-f graph is not a conforming two-clique graph".into(),
                )),
                Err(e) => Outcome::Fail(graph_violation(&g, format!("classification error: {e}"))),
            }
        });
        cases += result.cases;
        violations.extend(result.violations);
    }
    // Converse direction.
    for m in 2..=caps.graph_max_n {
        for n2 in 2..=m {
            if m + n2 > caps.graph_max_n {
                continue;
            }
            let g = two_cliques(m, n2);
            cases += 1;
            let b = g.b_value();
            let identity = (m as i64 - n2 as i64).pow(2) == (m + n2) as i64 - 2 * b;
            let report = g.is_quasi_f_direct().expect("parts of size >= 2");
            let ok = identity
                && report.is_quasi_f
                && report.type_vector == Some(vec![0, b])
                && !g.is_connected();
            if !ok {
                violations.push(graph_violation(
                    &g,
                    format!("two-clique graph K_{m} + K_{n2} fails the converse direction"),
                ));
            }
        }
    }
    (
        format!(
            "quasi-f graphs (connectivity classification) and two-clique graphs, n = 2..={}",
            caps.graph_max_n
        ),
        cases,
        violations,
    )
}

fn two_cliques(m: usize, n2: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in (u + 1)..=m {
            edges.push((u, v));
        }
    }
    for u in (m + 1)..=(m + n2) {
        for v in (u + 1)..=(m + n2) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(m + n2, edges).expect("labels stay in range")
}

/// `K_n + K_{n-r}` carries type `(0, (2n - r - r^2)/2)` and classifies
/// as disconnected quasi-f; `r = n - 1` is rejected for its isolated
/// vertex.
fn suite_two_clique_family(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for first in 4..=caps.construct_max_n {
        for r in 2..first {
            let total = 2 * first - r;
            if total > caps.construct_max_n {
                continue;
            }
            cases += 1;
            if r == first - 1 {
                if construct_n_nr_graph(first, r).is_ok() {
                    violations.push(Violation {
                        case: format!("n {first}\n"),
                        detail: format!(
                            "construct_n_nr_graph({first}, {r}) must reject the one-vertex part"
                        ),
                    });
                }
                continue;
            }
            match construct_n_nr_graph(first, r) {
                Err(e) => violations.push(Violation {
                    case: format!("n {total}\n"),
                    detail: format!("construction ({first}, {r}) failed: {e}"),
                }),
                Ok((g, b)) => {
                    let report = g.is_quasi_f_direct().expect("parts of size >= 2");
                    let ok = report.is_quasi_f
                        && report.type_vector == Some(vec![0, b])
                        && !g.is_connected()
                        && g.is_mn_graph() == Some((first, first - r))
                        && g.check_disconnected_classification().unwrap_or(false);
                    if !ok {
                        violations.push(graph_violation(
                            &g,
                            format!("[{first}:{}] graph does not verify (b = {b})", first - r),
                        ));
                    }
                }
            }
        }
    }
    (
        format!(
            "two-clique family, part sizes up to {}, total <= {}",
            caps.construct_max_n, caps.construct_max_n
        ),
        cases,
        violations,
    )
}

fn strict_b_values(n: usize) -> Vec<i64> {
    let bound = (n / 2) as i64;
    let parity: i64 = if n % 4 <= 1 { 0 } else { 1 };
    (-(bound - 1)..=(bound - 1))
        .filter(|b| b.rem_euclid(2) == parity)
        .collect()
}

/// The strict construction: type `(0,b)`, the counted number of edges,
/// a bipartite complement, and a `yes` from the CM check.
fn suite_strict_construction(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 4..=caps.construct_max_n {
        for b in strict_b_values(n) {
            cases += 1;
            let graph = plan_construction(n, b, BoundMode::Strict).and_then(|s| {
                debug_assert_eq!(s.join_count as i64, s.k as i64 - s.b_prime);
                build_cm_graph(&s)
            });
            let g = match graph {
                Ok(g) => g,
                Err(e) => {
                    violations.push(Violation {
                        case: format!("n {n}\n"),
                        detail: format!("construction (n={n}, b={b}) failed: {e}"),
                    });
                    continue;
                }
            };
            let report = g
                .is_quasi_f_direct()
                .expect("construction has no isolated vertex");
            let pairs = (n * (n - 1) / 2) as i64;
            let mut problems = Vec::new();
            if report.type_vector != Some(vec![0, b]) {
                problems.push(format!("type {:?} != (0,{b})", report.type_vector));
            }
            if 2 * g.edge_count() as i64 != pairs - b {
                problems.push(format!(
                    "edge count {} != (C(n,2) - b)/2 = {}",
                    g.edge_count(),
                    (pairs - b) / 2
                ));
            }
            if !is_bipartite(&g.complement()) {
                problems.push("complement is not bipartite".into());
            }
            let cm = cm_check(&g);
            if cm.verdict != CmVerdict::Yes {
                problems.push(format!("CM verdict {} != yes", cm.verdict));
            }
            if cm.exception.is_some() {
                problems.push(format!("unexpected exception match {:?}", cm.exception));
            }
            if !problems.is_empty() {
                violations.push(graph_violation(
                    &g,
                    format!("(n={n}, b={b}): {}", problems.join("; ")),
                ));
            }
        }
    }
    (
        format!(
            "n = 4..={}, parity-compatible |b| < floor(n/2)",
            caps.construct_max_n
        ),
        cases,
        violations,
    )
}

/// At `|b| = floor(n/2)` the matching-join construction stays CM except
/// for the 4-cycle; the star-join shapes are matched and non-CM.
fn suite_boundary_exceptions(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 4..=caps.construct_max_n {
        let bound = (n / 2) as i64;
        for b in [bound, -bound] {
            cases += 1;
            match plan_construction(n, b, BoundMode::Strict) {
                Err(Error::BoundViolation {
                    extended_would_accept: true,
                    ..
                }) => {}
                other => {
                    violations.push(Violation {
                        case: format!("n {n}\n"),
                        detail: format!(
                            "strict plan at the boundary (n={n}, b={b}) returned {other:?}"
                        ),
                    });
                    continue;
                }
            }
            let g = match plan_construction(n, b, BoundMode::Extended)
                .and_then(|s| build_cm_graph(&s))
            {
                Ok(g) => g,
                Err(e) => {
                    violations.push(Violation {
                        case: format!("n {n}\n"),
                        detail: format!("extended construction (n={n}, b={b}) failed: {e}"),
                    });
                    continue;
                }
            };
            let cm = cm_check(&g);
            match (cm.verdict, cm.exception) {
                (CmVerdict::Yes, None) => {}
                (CmVerdict::No, Some(_)) => {}
                (verdict, exception) => violations.push(graph_violation(
                    &g,
                    format!(
                        "boundary (n={n}, b={b}): verdict {verdict} with exception {exception:?}; \
                         a non-CM boundary construction must match a known pattern"
                    ),
                )),
            }
            if n == 4 && b == -2 && cm.verdict != CmVerdict::No {
                violations.push(graph_violation(
                    &g,
                    "the (4,-2) boundary construction is the 4-cycle and must be non-CM".into(),
                ));
            }
        }
    }
    // Explicit star-join exceptions.
    let star_cap = caps.construct_max_n.min(10);
    for k in 1..=4usize {
        let even = 2 * k;
        let odd = 2 * k + 1;
        let shapes = [
            (even, even, ExceptionPattern::EvenStarJoin),
            (even + 1, even, ExceptionPattern::EvenStarJoin),
            (odd, odd, ExceptionPattern::OddStarJoin),
            (odd + 1, odd, ExceptionPattern::OddStarJoin),
        ];
        for (m, y, expected) in shapes {
            if m + y > star_cap {
                continue;
            }
            cases += 1;
            let g = star_join_graph(m, y);
            let report = g
                .is_quasi_f_direct()
                .expect("star join has no isolated vertex");
            let cm = cm_check(&g);
            let ok = match_remark_exceptions(&g) == Some(expected)
                && cm.verdict == CmVerdict::No
                && report.type_vector == Some(vec![0, -(y as i64)]);
            if !ok {
                violations.push(graph_violation(
                    &g,
                    format!(
                        "star join K_{m}/K_{y}: expected {expected:?} and a non-CM verdict, got \
                         {:?} / {}",
                        match_remark_exceptions(&g),
                        cm.verdict
                    ),
                ));
            }
        }
    }
    (
        format!(
            "boundary |b| = floor(n/2), n = 4..={}; star joins up to {star_cap} vertices",
            caps.construct_max_n
        ),
        cases,
        violations,
    )
}

/// Brute force agrees with the closed form, and the closed form hits
/// the two pinned values N(6,2) = 6 and N(7,2) = 9.
fn suite_perfect_number(caps: &Caps) -> Result<(String, u64, Vec<Violation>)> {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 4..=caps.perfect_max_n {
        cases += 1;
        let closed = perfect_number_d2(n)?;
        let brute = perfect_number_bruteforce(n, 2)?;
        if closed != brute {
            violations.push(Violation {
                case: format!("n = {n}, d = 2"),
                detail: format!("closed form {closed} != brute force {brute}"),
            });
        }
    }
    for (n, expected) in [(6usize, 6u64), (7, 9)] {
        cases += 1;
        let closed = perfect_number_d2(n)?;
        if closed != expected {
            violations.push(Violation {
                case: format!("n = {n}, d = 2"),
                detail: format!("closed form {closed} != pinned value {expected}"),
            });
        }
    }
    Ok((
        format!("degree 2, n = 4..={}", caps.perfect_max_n),
        cases,
        violations,
    ))
}

/// `stanley_reisner(nonface_complex(I)) = I` and
/// `facet_ideal(facet_complex(I)) = I`; exhaustive through n = 4,
/// deterministically sampled at n = 5.
fn suite_duality(caps: &Caps) -> (String, u64, Vec<Violation>) {
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 1..=caps.ideal_max_n.min(4) {
        for gens in antichains_on(n) {
            cases += 1;
            let ideal = SquarefreeIdeal::from_antichain(n, gens);
            check_roundtrips(&ideal, &mut violations);
        }
    }
    if caps.ideal_max_n >= 5 {
        let n = 5;
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..10_000 {
            state = xorshift64(state);
            let family = (state & 0x7fff_ffff) as u32;
            if family == 0 {
                continue;
            }
            let gens: Vec<Face> = (0..31)
                .filter(|i| family & (1 << i) != 0)
                .map(|i| Face::from_mask((i + 1) as u16))
                .collect();
            // Reducing to the minimal members makes any sampled family a
            // legitimate generating set.
            let ideal = SquarefreeIdeal::from_generators(n, gens)
                .expect("non-empty family of non-empty sets");
            cases += 1;
            check_roundtrips(&ideal, &mut violations);
        }
    }
    (
        format!(
            "all ideals, n = 1..={}; 10k sampled ideals at n = 5 when capped at 5",
            caps.ideal_max_n.min(4)
        ),
        cases,
        violations,
    )
}

fn check_roundtrips(ideal: &SquarefreeIdeal, violations: &mut Vec<Violation>) {
    let n = ideal.ambient();
    match facet_ideal(&ideal.facet_complex(), n) {
        Ok(back) if back == *ideal => {}
        other => violations.push(Violation {
            case: ideal.to_text(),
            detail: format!("facet_ideal . facet_complex gave {other:?}"),
        }),
    }
    match ideal.nonface_complex() {
        Ok(nonface) => match stanley_reisner_ideal(&nonface, n) {
            Ok(back) if back == *ideal => {}
            other => violations.push(Violation {
                case: ideal.to_text(),
                detail: format!("stanley_reisner . nonface_complex gave {other:?}"),
            }),
        },
        Err(Error::EmptyComplex) => {
            // Only the ideal generated by every singleton leaves no
            // non-empty face behind.
            let all_singletons =
                ideal.generators().len() == n && ideal.generators().iter().all(|g| g.len() == 1);
            if !all_singletons {
                violations.push(Violation {
                    case: ideal.to_text(),
                    detail: "non-face complex vanished for a non-maximal ideal".into(),
                });
            }
        }
        Err(e) => violations.push(Violation {
            case: ideal.to_text(),
            detail: format!("nonface_complex failed: {e}"),
        }),
    }
}

/// Exactly five classes on four vertices, two CM and three not.
fn suite_census_n4() -> (String, u64, Vec<Violation>) {
    let mut violations = Vec::new();
    let census = enumerate_quasi_f_graphs(4, &GraphEnumOptions::default())
        .expect("n = 4 is inside every cap");
    if census.total != 5 {
        violations.push(Violation {
            case: "n 4\n".into(),
            detail: format!("census found {} classes, expected 5", census.total),
        });
    }
    let mut yes = 0usize;
    let mut no = 0usize;
    for g in &census.graphs {
        match cm_check(g).verdict {
            CmVerdict::Yes => yes += 1,
            CmVerdict::No => no += 1,
            CmVerdict::CriterionInapplicable => violations.push(graph_violation(
                g,
                "CM criterion must apply to every quasi-f graph".into(),
            )),
        }
    }
    if (yes, no) != (2, 3) {
        violations.push(Violation {
            case: "n 4\n".into(),
            detail: format!("CM split {yes}/{no}, expected 2/3"),
        });
    }
    (
        "the quasi-f census on 4 vertices".into(),
        census.total + 1,
        violations,
    )
}

// ---------------------------------------------------------------------
// Small enumeration helpers
// ---------------------------------------------------------------------

/// Every antichain of non-empty subsets of `1..=n` (as generator
/// lists), by depth-first extension.
pub(crate) fn antichains_on(n: usize) -> Vec<Vec<Face>> {
    fn extend(masks: &[u16], start: usize, family: &mut Vec<u16>, out: &mut Vec<Vec<Face>>) {
        if !family.is_empty() {
            out.push(family.iter().map(|&m| Face::from_mask(m)).collect());
        }
        for i in start..masks.len() {
            let m = masks[i];
            let comparable = family.iter().any(|&f| f & m == f || f & m == m);
            if comparable {
                continue;
            }
            family.push(m);
            extend(masks, i + 1, family, out);
            family.pop();
        }
    }
    let masks: Vec<u16> = (1..=full_mask(n)).collect();
    let mut out = Vec::new();
    extend(&masks, 0, &mut Vec::new(), &mut out);
    out
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let adj = g.adj_masks();
    let mut color = vec![2u8; n];
    for start in 0..n {
        if color[start] != 2 {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut rest = adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if color[u] == 2 {
                    color[u] = 1 - color[v];
                    stack.push(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

fn xorshift64(mut state: u64) -> u64 {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    state
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_caps() -> Caps {
        Caps {
            graph_max_n: 4,
            complex_max_n: 4,
            complex_max_dim: 2,
            construct_max_n: 8,
            ideal_max_n: 3,
            perfect_max_n: 4,
        }
    }

    #[test]
    fn suite_ids_roundtrip_through_names() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert_eq!(
            "thm_9_9".parse::<SuiteId>(),
            Err(Error::UnknownSuite {
                name: "thm_9_9".into()
            })
        );
    }

    #[test]
    fn degenerate_caps_are_rejected() {
        let caps = Caps {
            graph_max_n: 0,
            ..Caps::default()
        };
        assert!(matches!(run_all(&caps), Err(Error::CapExceeded { .. })));
        assert!(matches!(
            run_suite(SuiteId::Thm34, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn every_suite_passes_at_small_caps() {
        let report = run_all(&small_caps()).unwrap();
        for suite in &report.suites {
            assert!(
                suite.passed(),
                "suite {} failed: {:?}",
                suite.suite,
                suite.violations
            );
            assert!(suite.cases_run > 0, "suite {} ran nothing", suite.suite);
        }
        assert!(report.overall);
    }

    #[test]
    fn census_suite_reports_the_prose_counts() {
        let r = run_suite(SuiteId::CensusN4, &Caps::default()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn antichain_count_matches_dedekind() {
        // Non-empty antichains of non-empty subsets: Dedekind numbers
        // minus the two trivial elements ({} and {{}}).
        assert_eq!(antichains_on(1).len(), 1);
        assert_eq!(antichains_on(2).len(), 4);
        assert_eq!(antichains_on(3).len(), 18);
        assert_eq!(antichains_on(4).len(), 166);
    }

    #[test]
    fn bipartite_helper() {
        let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(is_bipartite(&c4));
        assert!(!is_bipartite(&Graph::complete(3).unwrap()));
    }
}
