//! Cohen-Macaulay quasi-f graph construction and checking.
//!
//! Construction: for a target vertex count `n` and type entry `b`
//! (parity-coupled to `n mod 4`), two cliques of nearly equal size are
//! joined by a matching of `k - b'` edges; the join edges land on a
//! matching because the edge-count argument is placement-independent
//! while a matching keeps the complement as connected as possible.
//!
//! Checking: a graph whose edge ideal has height `n - 2` is
//! Cohen-Macaulay exactly when its non-face complex is connected. The
//! verdict is three-valued; outside the height hypothesis the tool
//! reports the criterion as inapplicable instead of guessing. The
//! check is purely combinatorial, so no coefficient field enters the
//! report: the verdict holds over any field.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residue class of the vertex count mod 4; selects the part sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseId {
    #[serde(rename = "4k")]
    FourK,
    #[serde(rename = "4k+1")]
    FourKPlusOne,
    #[serde(rename = "4k+2")]
    FourKPlusTwo,
    #[serde(rename = "4k+3")]
    FourKPlusThree,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseId::FourK => "4k",
            CaseId::FourKPlusOne => "4k+1",
            CaseId::FourKPlusTwo => "4k+2",
            CaseId::FourKPlusThree => "4k+3",
        };
        write!(f, "{s}")
    }
}

/// Strict mode demands `|b| < floor(n/2)`; extended mode admits the
/// boundary `|b| = floor(n/2)` where a few constructions stop being
/// Cohen-Macaulay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    Strict,
    Extended,
}

/// Resolved parameters of one two-clique construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmConstructionSpec {
    pub n: usize,
    pub b: i64,
    pub case_id: CaseId,
    pub k: usize,
    pub b_prime: i64,
    /// Clique sizes `(p, q)` with `p >= q`.
    pub part_sizes: (usize, usize),
    /// Matching edges between the parts; `k - b'`.
    pub join_count: usize,
}

/// Resolves `n` and `b` into clique sizes and a join count.
pub fn plan_construction(n: usize, b: i64, mode: BoundMode) -> Result<CmConstructionSpec> {
    if !(4..=crate::face::MAX_VERTICES).contains(&n) {
        return Err(Error::ParameterOutOfRange {
            what: format!(
                "construction needs 4 <= n <= {} (got n={n})",
                crate::face::MAX_VERTICES
            ),
        });
    }
    let (case_id, k, part_sizes, b_even) = match n % 4 {
        0 => (CaseId::FourK, n / 4, (n / 2, n / 2), true),
        1 => {
            let k = (n - 1) / 4;
            (CaseId::FourKPlusOne, k, (2 * k + 1, 2 * k), true)
        }
        2 => {
            let k = (n - 2) / 4;
            (CaseId::FourKPlusTwo, k, (2 * k + 1, 2 * k + 1), false)
        }
        _ => {
            let k = (n - 3) / 4;
            (CaseId::FourKPlusThree, k, (2 * k + 2, 2 * k + 1), false)
        }
    };
    if b_even != (b % 2 == 0) {
        return Err(Error::ParityMismatch { n, b });
    }
    let bound = (n / 2) as u64;
    let b_abs = b.unsigned_abs();
    let within = match mode {
        BoundMode::Strict => b_abs < bound,
        BoundMode::Extended => b_abs <= bound,
    };
    if !within {
        return Err(Error::BoundViolation {
            n,
            b_abs,
            bound,
            extended_would_accept: b_abs == bound,
        });
    }
    let b_prime = if b_even { b / 2 } else { (b - 1) / 2 };
    let join_count = (k as i64 - b_prime) as usize;
    debug_assert!(mode == BoundMode::Extended || join_count >= 1);
    Ok(CmConstructionSpec {
        n,
        b,
        case_id,
        k,
        b_prime,
        part_sizes,
        join_count,
    })
}

/// Realizes a construction spec: `K_p` on `1..=p`, `K_q` on
/// `p+1..=p+q`, plus the matching `i -- p+i` for `i = 1..=join_count`.
pub fn build_cm_graph(spec: &CmConstructionSpec) -> Result<Graph> {
    let (p, q) = spec.part_sizes;
    if spec.join_count > p.min(q) {
        return Err(Error::JoinExceedsParts {
            join: spec.join_count,
            part: p.min(q),
        });
    }
    let mut edges = Vec::new();
    for u in 1..=p {
        for v in (u + 1)..=p {
            edges.push((u, v));
        }
    }
    for u in (p + 1)..=(p + q) {
        for v in (u + 1)..=(p + q) {
            edges.push((u, v));
        }
    }
    for i in 1..=spec.join_count {
        edges.push((i, p + i));
    }
    let g = Graph::from_edges(spec.n, edges)?;
    debug_assert_eq!(
        2 * g.edge_count() as i64,
        (spec.n * (spec.n - 1) / 2) as i64 - spec.b
    );
    Ok(g)
}

/// Height of the edge ideal: minimum vertex cover size, i.e. `n` minus
/// the independence number, by exhaustive subset search.
pub fn edge_ideal_height(g: &Graph) -> usize {
    let n = g.n();
    let adj = g.adj_masks();
    let mut alpha = 0usize;
    for s in 1u32..(1u32 << n) {
        let s16 = s as u16;
        if s16.count_ones() as usize <= alpha {
            continue;
        }
        let mut independent = true;
        let mut rest = s16;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & s16 != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            alpha = s16.count_ones() as usize;
        }
    }
    n - alpha
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmVerdict {
    Yes,
    No,
    CriterionInapplicable,
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CmVerdict::Yes => "yes",
            CmVerdict::No => "no",
            CmVerdict::CriterionInapplicable => "criterion_inapplicable",
        };
        write!(f, "{s}")
    }
}

/// Known boundary exceptions of the two-clique construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionPattern {
    /// The 4-cycle, of type `(0,-2)`.
    FourCycle,
    /// Two cliques of sizes `(2k, 2k)` or `(2k+1, 2k)` with one vertex
    /// of the first joined to all `2k` vertices of the second; type
    /// `(0,-2k)`.
    EvenStarJoin,
    /// The odd analogue: sizes `(2k+1, 2k+1)` or `(2k+2, 2k+1)` with a
    /// `2k+1`-edge star; type `(0,-2k-1)`.
    OddStarJoin,
}

impl ExceptionPattern {
    pub fn id(self) -> u8 {
        match self {
            ExceptionPattern::FourCycle => 1,
            ExceptionPattern::EvenStarJoin => 2,
            ExceptionPattern::OddStarJoin => 3,
        }
    }
}

impl fmt::Display for ExceptionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pattern {}", self.id())
    }
}

/// Three-valued Cohen-Macaulay report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub verdict: CmVerdict,
    pub height: usize,
    pub nonface_connected: Option<bool>,
    pub exception: Option<ExceptionPattern>,
}

/// Applies the height-(n-2) connectivity criterion. For a quasi-f
/// graph with `ht(I(G)) = n - 2` the verdict is `yes` exactly when the
/// non-face complex of the edge ideal is connected; anything else is
/// `criterion_inapplicable`.
pub fn cm_check(g: &Graph) -> CmReport {
    let height = edge_ideal_height(g);
    let exception = match_remark_exceptions(g);
    let quasi = matches!(g.is_quasi_f_direct(), Ok(report) if report.is_quasi_f);
    if !quasi || height != g.n() - 2 {
        return CmReport {
            verdict: CmVerdict::CriterionInapplicable,
            height,
            nonface_connected: None,
            exception,
        };
    }
    let nonface = g
        .edge_ideal()
        .expect("a quasi-f graph has edges")
        .nonface_complex()
        .expect("a degree-2 ideal keeps every singleton as a face");
    let connected = nonface.is_connected();
    CmReport {
        verdict: if connected {
            CmVerdict::Yes
        } else {
            CmVerdict::No
        },
        height,
        nonface_connected: Some(connected),
        exception,
    }
}

/// Structural match against the boundary exception shapes. The star
/// patterns are recognized as "one vertex adjacent to everything whose
/// removal splits the graph into two cliques of the right sizes".
pub fn match_remark_exceptions(g: &Graph) -> Option<ExceptionPattern> {
    let n = g.n();
    if n == 4 && g.edge_count() == 4 && (1..=4).all(|v| g.degree(v) == 2) && g.is_connected() {
        return Some(ExceptionPattern::FourCycle);
    }
    for u in 1..=n {
        if g.degree(u) != n - 1 {
            continue;
        }
        let rest = delete_vertex(g, u);
        let Some((big, small)) = rest.is_mn_graph() else {
            continue;
        };
        // The star source sits in the first clique: its size is the
        // clique left after deletion plus one.
        for (first, second) in [(big + 1, small), (small + 1, big)] {
            if second >= 2 && (first == second || first == second + 1) {
                return Some(if second % 2 == 0 {
                    ExceptionPattern::EvenStarJoin
                } else {
                    ExceptionPattern::OddStarJoin
                });
            }
        }
    }
    None
}

/// Builds the star-join shape directly: `K_m` on `1..=m`, `K_y` on
/// `m+1..=m+y`, and vertex 1 joined to all of the second clique.
pub(crate) fn star_join_graph(m: usize, y: usize) -> Graph {
    let n = m + y;
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in (u + 1)..=m {
            edges.push((u, v));
        }
    }
    for u in (m + 1)..=n {
        for v in (u + 1)..=n {
            edges.push((u, v));
        }
    }
    for v in (m + 1)..=n {
        edges.push((1, v));
    }
    Graph::from_edges(n, edges).expect("star join stays within the vertex cap")
}

fn delete_vertex(g: &Graph, u: usize) -> Graph {
    let n = g.n();
    let relabel = |v: usize| if v > u { v - 1 } else { v };
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != u && b != u)
        .map(|(a, b)| (relabel(a), relabel(b)));
    Graph::from_edges(n - 1, edges).expect("deletion keeps labels in range")
}
