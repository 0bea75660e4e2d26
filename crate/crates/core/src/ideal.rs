//! Square-free monomial ideals and their two associated complexes.
//!
//! An ideal is stored by the supports of its minimal generators inside
//! an explicit ambient variable set `1..=n`. The facet complex is
//! generated by those supports; the non-face complex consists of all
//! subsets of `1..=n` containing no generator support. Comparing the
//! two f-vectors yields the quasi-f verdict and type.
//!
//! The module also carries the degree-level shadow operators, the
//! perfect-set predicates, the closed form for the degree-2 perfect
//! number and its brute-force counterpart.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{full_mask, parse_label_line, FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// A square-free monomial ideal, encoded by the vertex supports of its
/// unique minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<Face>,
}

impl SquarefreeIdeal {
    /// Builds an ideal in `n` ambient variables. Non-minimal inputs are
    /// reduced: a support containing another input support is dropped,
    /// mirroring the passage to the minimal generating set.
    pub fn from_generators<I>(n: usize, generators: I) -> Result<SquarefreeIdeal>
    where
        I: IntoIterator<Item = Face>,
    {
        if n == 0 {
            return Err(Error::ParameterOutOfRange {
                what: "ambient variable count must be positive".into(),
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "ambient variable count",
                cap: MAX_VERTICES,
            });
        }
        let mut input: Vec<Face> = Vec::new();
        for g in generators {
            if g.is_empty() {
                return Err(Error::EmptyGenerator);
            }
            if let Some(max_label) = g.max_label() {
                if max_label > n {
                    return Err(Error::AmbientTooSmall { n, max_label });
                }
            }
            input.push(g);
        }
        if input.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut generators: Vec<Face> = Vec::new();
        for &g in &input {
            if input.iter().any(|&h| h != g && h.is_subset_of(g)) {
                continue;
            }
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
        generators.sort();
        Ok(SquarefreeIdeal { n, generators })
    }

    /// Constructor for callers that already hold an antichain of
    /// non-empty supports inside `1..=n` (edge sets, equal-size facet
    /// families); skips the minimality filter.
    pub(crate) fn from_antichain(n: usize, mut generators: Vec<Face>) -> SquarefreeIdeal {
        debug_assert!(!generators.is_empty());
        debug_assert!(generators
            .iter()
            .all(|g| !g.is_empty() && g.max_label().unwrap() <= n));
        debug_assert!(generators
            .iter()
            .all(|g| generators.iter().all(|h| g == h || !h.is_subset_of(*g))));
        generators.sort();
        SquarefreeIdeal { n, generators }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    /// The common degree of the generators, if they are degree-uniform.
    pub fn generator_degree(&self) -> Option<usize> {
        let d = self.generators[0].len();
        self.generators.iter().all(|g| g.len() == d).then_some(d)
    }

    /// The complex generated by the generator supports. Minimality of
    /// the generating set makes the supports inclusion-maximal.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.generators.iter().copied())
            .expect("generators are non-empty")
    }

    /// The complex of all subsets of `1..=n` containing no generator
    /// support, returned by its maximal faces. Fails with
    /// [`Error::EmptyComplex`] in the one degenerate case where every
    /// singleton is a generator, leaving only the empty face.
    pub fn nonface_complex(&self) -> Result<SimplicialComplex> {
        let full = full_mask(self.n);
        let is_face = |s: u16| self.generators.iter().all(|g| g.mask() & s != g.mask());
        let mut facets = Vec::new();
        for s in 1..=full {
            if s & !full != 0 || !is_face(s) {
                continue;
            }
            let extendable = (0..self.n).any(|b| s & (1 << b) == 0 && is_face(s | (1 << b)));
            if !extendable {
                facets.push(Face::from_mask(s));
            }
        }
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        SimplicialComplex::from_facets(facets)
    }

    /// Both f-vectors and their difference. The verdict only asks that
    /// the vectors share a length; the type vector is their difference
    /// when defined.
    pub fn quasi_f_report(&self) -> QuasiFReport {
        let mut facet_counts = [0u64; MAX_VERTICES];
        let mut nonface_counts = [0u64; MAX_VERTICES];
        for s in 1u32..(1u32 << self.n) {
            let s = s as u16;
            let mut inside_gen = false;
            let mut contains_gen = false;
            for g in &self.generators {
                let gm = g.mask();
                inside_gen |= s & gm == s;
                contains_gen |= s & gm == gm;
                if inside_gen && contains_gen {
                    break;
                }
            }
            let size = s.count_ones() as usize;
            if inside_gen {
                facet_counts[size - 1] += 1;
            }
            if !contains_gen {
                nonface_counts[size - 1] += 1;
            }
        }
        let trim = |counts: [u64; MAX_VERTICES]| {
            let len = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
            FVector::from_counts(counts[..len].to_vec())
        };
        let f_facet = trim(facet_counts);
        let f_nonface = trim(nonface_counts);
        let type_vector = f_nonface.type_vector(&f_facet);
        let is_quasi_f = type_vector.is_some();
        let is_f_ideal = type_vector
            .as_ref()
            .is_some_and(|t| t.iter().all(|&a| a == 0));
        QuasiFReport {
            is_quasi_f,
            is_f_ideal,
            type_vector,
            failure_reason: (!is_quasi_f).then_some(FailureReason::DimensionMismatch),
            f_facet,
            f_nonface,
        }
    }

    /// Parses the ideal file format: after `#` comments, the first line
    /// is `n <count>` and every following line is one generator support.
    pub fn parse(text: &str) -> Result<SquarefreeIdeal> {
        let mut n: Option<usize> = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let line_no = idx + 1;
            match n {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("n") {
                        return Err(Error::ParseError {
                            line: line_no,
                            message: "expected header `n <count>`".into(),
                        });
                    }
                    let count = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| Error::ParseError {
                            line: line_no,
                            message: "expected header `n <count>`".into(),
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::ParseError {
                            line: line_no,
                            message: "trailing tokens after header".into(),
                        });
                    }
                    n = Some(count);
                }
                Some(_) => gens.push(parse_label_line(line, line_no)?),
            }
        }
        let n = n.ok_or(Error::EmptyInput)?;
        SquarefreeIdeal::from_generators(n, gens)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for g in &self.generators {
            let labels: Vec<String> = g.labels().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(n={}; ", self.n)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// The ideal generated by the facets of `complex` inside `1..=n`.
pub fn facet_ideal(complex: &SimplicialComplex, n: usize) -> Result<SquarefreeIdeal> {
    SquarefreeIdeal::from_generators(n, complex.facets().iter().copied())
}

/// The ideal generated by the minimal non-faces of `complex` relative
/// to `1..=n`. The full simplex has no non-face, which surfaces as
/// [`Error::EmptyIdeal`].
pub fn stanley_reisner_ideal(complex: &SimplicialComplex, n: usize) -> Result<SquarefreeIdeal> {
    let nonfaces = complex.minimal_nonfaces_ambient(n)?;
    SquarefreeIdeal::from_generators(n, nonfaces)
}

/// Why a report is not quasi-f.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// The two f-vectors have different lengths, so their difference is
    /// undefined.
    DimensionMismatch,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::DimensionMismatch => write!(f, "dimension_mismatch"),
        }
    }
}

/// Outcome of comparing the facet-complex and non-face-complex
/// f-vectors of one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiFReport {
    pub is_quasi_f: bool,
    pub is_f_ideal: bool,
    #[serde(rename = "type")]
    pub type_vector: Option<Vec<i64>>,
    pub f_facet: FVector,
    pub f_nonface: FVector,
    pub failure_reason: Option<FailureReason>,
}

fn uniform_degree(monomials: &[Face]) -> Result<usize> {
    let first = monomials.first().ok_or(Error::EmptyInput)?;
    let d = first.len();
    for m in monomials {
        if m.len() != d {
            return Err(Error::MixedDegrees { a: d, b: m.len() });
        }
    }
    Ok(d)
}

fn check_ambient(monomials: &[Face], n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "ambient variable count",
            cap: MAX_VERTICES,
        });
    }
    for m in monomials {
        if let Some(max_label) = m.max_label() {
            if max_label > n {
                return Err(Error::AmbientTooSmall { n, max_label });
            }
        }
    }
    Ok(())
}

/// All monomials obtained from a degree-uniform set by multiplying in
/// one missing variable from `1..=n`.
pub fn upper_shadow(monomials: &[Face], n: usize) -> Result<Vec<Face>> {
    uniform_degree(monomials)?;
    check_ambient(monomials, n)?;
    let mut out: Vec<Face> = Vec::new();
    for m in monomials {
        for v in 1..=n {
            if !m.contains(v) {
                let up = Face::from_mask(m.mask() | (1 << (v - 1)));
                if !out.contains(&up) {
                    out.push(up);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All monomials obtained by dividing out one variable. A degree-1 set
/// shadows down to the empty monomial.
pub fn lower_shadow(monomials: &[Face]) -> Result<Vec<Face>> {
    uniform_degree(monomials)?;
    let mut out: Vec<Face> = Vec::new();
    for m in monomials {
        for v in m.labels() {
            let down = Face::from_mask(m.mask() & !(1 << (v - 1)));
            if !out.contains(&down) {
                out.push(down);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    for i in 0..k {
        num = num * (n - i) as u64 / (i + 1) as u64;
    }
    num
}

/// The upper shadow fills the whole next degree level.
pub fn is_upper_perfect(monomials: &[Face], n: usize) -> Result<bool> {
    let d = uniform_degree(monomials)?;
    check_ambient(monomials, n)?;
    let shadow = upper_shadow(monomials, n)?;
    Ok(shadow.len() as u64 == binomial(n, d + 1))
}

/// The lower shadow fills the whole previous degree level.
pub fn is_lower_perfect(monomials: &[Face], n: usize) -> Result<bool> {
    let d = uniform_degree(monomials)?;
    check_ambient(monomials, n)?;
    let shadow = lower_shadow(monomials)?;
    Ok(shadow.len() as u64 == binomial(n, d - 1))
}

pub fn is_perfect(monomials: &[Face], n: usize) -> Result<bool> {
    Ok(is_upper_perfect(monomials, n)? && is_lower_perfect(monomials, n)?)
}

/// Closed form for the smallest degree-2 perfect set on `n >= 4`
/// variables: `t^2 - t` when `n = 2t` and `t^2` when `n = 2t + 1`.
pub fn perfect_number_d2(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::OutOfValidatedRange {
            what: "closed-form degree-2 perfect number",
            range: "n >= 4",
        });
    }
    let t = (n / 2) as u64;
    Ok(if n.is_multiple_of(2) {
        t * t - t
    } else {
        t * t
    })
}

/// Smallest cardinality of a perfect degree-`d` set on `n` variables,
/// found by exhaustive search (iterative deepening over subset sizes
/// with exact coverage pruning). Capped at `n <= 7`, `d <= 3`; beyond
/// the cap the search space is declined rather than estimated.
pub fn perfect_number_bruteforce(n: usize, d: usize) -> Result<u64> {
    if d == 0 || d > n {
        return Err(Error::ParameterOutOfRange {
            what: format!("degree d = {d} must satisfy 1 <= d <= n = {n}"),
        });
    }
    if n > 7 || d > 3 {
        return Err(Error::CapExceeded {
            what: format!("perfect-set brute force capped at n <= 7, d <= 3 (got n={n}, d={d})"),
        });
    }
    let level: Vec<u16> = (1..=n)
        .combinations(d)
        .map(|c| Face::from_labels(c).unwrap().mask())
        .collect();
    let upper: Vec<u16> = (1..=n)
        .combinations(d + 1)
        .map(|c| Face::from_labels(c).unwrap().mask())
        .collect();
    let lower: Vec<u16> = if d >= 1 {
        (1..=n)
            .combinations(d - 1)
            .map(|c| Face::from_labels(c).unwrap().mask())
            .collect()
    } else {
        vec![0]
    };
    debug_assert!(upper.len() <= 64 && lower.len() <= 64);
    let up_cover: Vec<u64> = level
        .iter()
        .map(|&g| {
            upper
                .iter()
                .enumerate()
                .filter(|(_, &u)| g & u == g)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let low_cover: Vec<u64> = level
        .iter()
        .map(|&g| {
            lower
                .iter()
                .enumerate()
                .filter(|(_, &l)| l & g == l)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let up_full = if upper.is_empty() {
        0
    } else {
        u64::MAX >> (64 - upper.len())
    };
    let low_full = u64::MAX >> (64 - lower.len());

    let search = CoverSearch {
        up_full,
        low_full,
        up_cover,
        low_cover,
        per_up: (n - d).max(1),
        per_low: d.max(1),
    };
    for k in 1..=level.len() {
        if search.feasible(0, k, 0, 0) {
            return Ok(k as u64);
        }
    }
    unreachable!("the full degree level is always perfect")
}

/// Exact search for a size-k subset of the degree level whose shadows
/// cover both neighbouring levels.
struct CoverSearch {
    up_full: u64,
    low_full: u64,
    up_cover: Vec<u64>,
    low_cover: Vec<u64>,
    per_up: usize,
    per_low: usize,
}

impl CoverSearch {
    fn feasible(&self, start: usize, remaining: usize, up_acc: u64, low_acc: u64) -> bool {
        if up_acc == self.up_full && low_acc == self.low_full {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        // Each level element covers at most n-d upper and d lower sets,
        // bounding how much uncovered ground `remaining` picks can close.
        let need_up = (self.up_full & !up_acc).count_ones() as usize;
        let need_low = (self.low_full & !low_acc).count_ones() as usize;
        if need_up > remaining * self.per_up || need_low > remaining * self.per_low {
            return false;
        }
        for i in start..self.up_cover.len() {
            if self.up_cover.len() - i < remaining {
                break;
            }
            if self.feasible(
                i + 1,
                remaining - 1,
                up_acc | self.up_cover[i],
                low_acc | self.low_cover[i],
            ) {
                return true;
            }
        }
        false
    }
}

/// Bounds on the second type entry of a degree-2 quasi-f ideal on
/// `n >= 4` variables: `-C(n,2) + 2 <= b <= C(n,2) - 2 N(n,2)`.
pub fn type_bounds_d2(n: usize) -> Result<(i64, i64)> {
    let perfect = perfect_number_d2(n)? as i64;
    let pairs = binomial(n, 2) as i64;
    Ok((-pairs + 2, pairs - 2 * perfect))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ls: &[usize]) -> Face {
        Face::from_labels(ls.iter().copied()).unwrap()
    }

    fn worked_ideal() -> SquarefreeIdeal {
        SquarefreeIdeal::from_generators(
            5,
            [
                face(&[1, 2, 4]),
                face(&[1, 2, 5]),
                face(&[3, 4, 5]),
                face(&[1, 4, 5]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn minimality_filter_mirrors_generating_set() {
        let i = SquarefreeIdeal::from_generators(3, [face(&[1, 2]), face(&[1, 2, 3])]).unwrap();
        assert_eq!(i.generators(), &[face(&[1, 2])]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            SquarefreeIdeal::from_generators(3, std::iter::empty()),
            Err(Error::EmptyIdeal)
        );
        assert_eq!(
            SquarefreeIdeal::from_generators(3, [Face::EMPTY]),
            Err(Error::EmptyGenerator)
        );
        assert_eq!(
            SquarefreeIdeal::from_generators(2, [face(&[3])]),
            Err(Error::AmbientTooSmall { n: 2, max_label: 3 })
        );
    }

    #[test]
    fn facet_complex_of_worked_ideal() {
        let c = worked_ideal().facet_complex();
        let expected: Vec<Face> = vec![
            face(&[1, 2, 4]),
            face(&[1, 2, 5]),
            face(&[1, 4, 5]),
            face(&[3, 4, 5]),
        ];
        assert_eq!(c.facets(), expected.as_slice());
    }

    #[test]
    fn nonface_complex_of_worked_ideal() {
        let c = worked_ideal().nonface_complex().unwrap();
        let expected: Vec<Face> = vec![
            face(&[1, 2, 3]),
            face(&[1, 3, 4]),
            face(&[1, 3, 5]),
            face(&[2, 3, 4]),
            face(&[2, 3, 5]),
            face(&[2, 4, 5]),
        ];
        assert_eq!(c.facets(), expected.as_slice());
    }

    #[test]
    fn single_edge_ideal_complexes() {
        let i = SquarefreeIdeal::from_generators(2, [face(&[1, 2])]).unwrap();
        assert_eq!(i.facet_complex().facets(), &[face(&[1, 2])]);
        let nf = i.nonface_complex().unwrap();
        assert_eq!(nf.facets(), &[face(&[1]), face(&[2])]);
    }

    #[test]
    fn nonface_complex_degenerates_when_all_singletons_generate() {
        let i = SquarefreeIdeal::from_generators(3, [face(&[1]), face(&[2]), face(&[3])]).unwrap();
        assert_eq!(i.nonface_complex(), Err(Error::EmptyComplex));
        // The report still comes out, flagged as a dimension mismatch.
        let r = i.quasi_f_report();
        assert!(!r.is_quasi_f);
        assert!(r.f_nonface.is_empty());
        assert_eq!(r.f_facet.counts(), &[3]);
    }

    #[test]
    fn quasi_f_report_of_worked_ideal() {
        let r = worked_ideal().quasi_f_report();
        assert_eq!(r.f_facet.counts(), &[5, 8, 4]);
        assert_eq!(r.f_nonface.counts(), &[5, 10, 6]);
        assert!(r.is_quasi_f);
        assert!(!r.is_f_ideal);
        assert_eq!(r.type_vector, Some(vec![0, 2, 2]));
    }

    #[test]
    fn quasi_f_report_of_mixed_degree_facet_ideal() {
        // Facet ideal of <{1,2},{3,4},{3,5},{1,4,5}>.
        let i = SquarefreeIdeal::from_generators(
            5,
            [
                face(&[1, 2]),
                face(&[3, 4]),
                face(&[3, 5]),
                face(&[1, 4, 5]),
            ],
        )
        .unwrap();
        let r = i.quasi_f_report();
        assert_eq!(r.type_vector, Some(vec![0, 1, 0]));
        assert!(r.is_quasi_f);
    }

    #[test]
    fn roundtrips_on_the_worked_ideal() {
        let i = worked_ideal();
        assert_eq!(facet_ideal(&i.facet_complex(), 5).unwrap(), i);
        assert_eq!(
            stanley_reisner_ideal(&i.nonface_complex().unwrap(), 5).unwrap(),
            i
        );
    }

    #[test]
    fn full_simplex_has_no_stanley_reisner_generators() {
        let c = SimplicialComplex::from_facets([face(&[1, 2, 3])]).unwrap();
        assert_eq!(stanley_reisner_ideal(&c, 3), Err(Error::EmptyIdeal));
    }

    #[test]
    fn shadows_of_a_single_pair() {
        let up = upper_shadow(&[face(&[1, 2])], 3).unwrap();
        assert_eq!(up, vec![face(&[1, 2, 3])]);
        let down = lower_shadow(&[face(&[1, 2])]).unwrap();
        assert_eq!(down, vec![face(&[1]), face(&[2])]);
    }

    #[test]
    fn upper_shadow_of_worked_generators_fills_degree_four() {
        let gens: Vec<Face> = worked_ideal().generators().to_vec();
        let up = upper_shadow(&gens, 5).unwrap();
        // Direct expansion of the four generators: all five 4-subsets.
        let expected: Vec<Face> = vec![
            face(&[1, 2, 3, 4]),
            face(&[1, 2, 3, 5]),
            face(&[1, 2, 4, 5]),
            face(&[1, 3, 4, 5]),
            face(&[2, 3, 4, 5]),
        ];
        assert_eq!(up, expected);
        assert!(is_upper_perfect(&gens, 5).unwrap());
        assert!(!is_lower_perfect(&gens, 5).unwrap());
    }

    #[test]
    fn lower_shadow_of_all_pairs_is_all_singletons() {
        let pairs: Vec<Face> = (1..=4).combinations(2).map(|c| face(&c)).collect();
        let down = lower_shadow(&pairs).unwrap();
        assert_eq!(down.len(), 4);
        assert!(is_perfect(&pairs, 4).unwrap());
    }

    #[test]
    fn mixed_degrees_rejected() {
        let err = upper_shadow(&[face(&[1]), face(&[1, 2])], 3);
        assert_eq!(err, Err(Error::MixedDegrees { a: 1, b: 2 }));
        assert_eq!(
            is_perfect(&[face(&[1]), face(&[1, 2])], 3),
            Err(Error::MixedDegrees { a: 1, b: 2 })
        );
    }

    #[test]
    fn perfect_matching_on_four_vertices_is_perfect() {
        let u = vec![face(&[1, 2]), face(&[3, 4])];
        assert!(is_perfect(&u, 4).unwrap());
        let bigger = vec![face(&[1, 2]), face(&[3, 4]), face(&[1, 3]), face(&[2, 4])];
        assert!(is_perfect(&bigger, 4).unwrap());
    }

    #[test]
    fn closed_form_perfect_numbers() {
        assert_eq!(perfect_number_d2(6).unwrap(), 6);
        assert_eq!(perfect_number_d2(7).unwrap(), 9);
        assert_eq!(perfect_number_d2(4).unwrap(), 2);
        assert_eq!(perfect_number_d2(5).unwrap(), 4);
        assert!(matches!(
            perfect_number_d2(3),
            Err(Error::OutOfValidatedRange { .. })
        ));
    }

    #[test]
    fn brute_force_matches_closed_form() {
        for n in 4..=6 {
            assert_eq!(
                perfect_number_bruteforce(n, 2).unwrap(),
                perfect_number_d2(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn brute_force_cap() {
        assert!(matches!(
            perfect_number_bruteforce(8, 2),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            perfect_number_bruteforce(6, 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn type_bounds_examples() {
        assert_eq!(type_bounds_d2(5).unwrap(), (-8, 2));
        assert_eq!(type_bounds_d2(6).unwrap(), (-13, 3));
    }

    #[test]
    fn parse_and_serialize_roundtrip() {
        let text = "# worked ideal\nn 5\n1 2 4\n1 2 5\n3 4 5\n1 4 5\n";
        let i = SquarefreeIdeal::parse(text).unwrap();
        assert_eq!(i, worked_ideal());
        assert_eq!(SquarefreeIdeal::parse(&i.to_text()).unwrap(), i);
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(matches!(
            SquarefreeIdeal::parse("n 5\n1 x\n"),
            Err(Error::ParseError { line: 2, .. })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse("5\n1 2\n"),
            Err(Error::ParseError { line: 1, .. })
        ));
    }
}
