//! Simplicial complexes as explicit facet lists.
//!
//! A complex is stored by its inclusion-maximal faces together with its
//! support (the union of the facets). Faces, f-vectors, purity,
//! facet-path connectedness, minimal non-faces and a canonical form
//! under vertex relabeling are all computed directly from the facet
//! list; at the supported scale (up to 16 vertices) plain subset
//! enumeration is exact and fast.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// Vertex-count cap for the full-permutation canonical form.
pub const DEFAULT_CANON_CAP: usize = 10;

/// Face counts by dimension: `counts()[k]` is the number of
/// `k`-dimensional faces. The empty face is never reported.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn from_counts(counts: Vec<u64>) -> FVector {
        FVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self - other`, defined only for equal lengths.
    pub fn type_vector(&self, other: &FVector) -> Option<Vec<i64>> {
        if self.0.len() != other.0.len() {
            return None;
        }
        Some(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a as i64 - *b as i64)
                .collect(),
        )
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Renders an integer vector the same way `FVector` renders counts,
/// e.g. `(0,2,2)`.
pub fn format_type_vector(t: &[i64]) -> String {
    let mut s = String::from("(");
    for (i, c) in t.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&c.to_string());
    }
    s.push(')');
    s
}

/// A simplicial complex given by its facets.
///
/// Invariants: every facet is non-empty, no facet contains another, and
/// the vertex set is exactly the union of the facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    support: u16,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary non-empty faces; faces contained
    /// in another input face are dropped so that the stored family is
    /// inclusion-maximal.
    pub fn from_facets<I>(faces: I) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut input: Vec<Face> = Vec::new();
        for f in faces {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            input.push(f);
        }
        if input.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut facets: Vec<Face> = Vec::new();
        for &f in &input {
            if input.iter().any(|&g| f != g && f.is_subset_of(g)) {
                continue;
            }
            if !facets.contains(&f) {
                facets.push(f);
            }
        }
        facets.sort();
        let support = facets.iter().fold(0u16, |m, f| m | f.mask());
        Ok(SimplicialComplex { support, facets })
    }

    /// Like [`from_facets`](Self::from_facets) but additionally demands
    /// that the facets cover the declared vertex set `1..=n`; a declared
    /// vertex outside every facet is rejected.
    pub fn from_facets_on<I>(n: usize, faces: I) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = Face>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange {
                label: n,
                max: MAX_VERTICES,
            });
        }
        let complex = Self::from_facets(faces)?;
        let declared = full_mask(n);
        if complex.support != declared {
            let missing = declared & !complex.support;
            let label = Face::from_mask(missing).labels().next().unwrap();
            return Err(Error::IsolatedVertexDeclared { label });
        }
        Ok(complex)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn support(&self) -> Face {
        Face::from_mask(self.support)
    }

    pub fn vertex_count(&self) -> usize {
        self.support.count_ones() as usize
    }

    /// Largest facet dimension.
    pub fn dimension(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.len() - 1)
            .max()
            .expect("complex has at least one facet")
    }

    /// True when all facets share one dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// True when `face` is contained in some facet.
    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces of dimension `k`, deduplicated and sorted.
    pub fn faces(&self, k: usize) -> Result<Vec<Face>> {
        let dim = self.dimension();
        if k > dim {
            return Err(Error::DimensionOutOfRange { k, dim });
        }
        let mut out: Vec<Face> = Vec::new();
        for facet in &self.facets {
            let members: Vec<usize> = facet.labels().collect();
            if members.len() < k + 1 {
                continue;
            }
            for combo in members.into_iter().combinations(k + 1) {
                let face = Face::from_labels(combo)?;
                if !out.contains(&face) {
                    out.push(face);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The f-vector `(f_0, ..., f_d)`.
    pub fn f_vector(&self) -> FVector {
        let dim = self.dimension();
        let mut counts = vec![0u64; dim + 1];
        let support_bits: Vec<usize> = (0..MAX_VERTICES)
            .filter(|b| self.support & (1 << b) != 0)
            .collect();
        let s = support_bits.len();
        // Walk every non-empty subset of the support and test facet
        // containment; 2^16 subsets at the cap is nothing.
        for sub in 1u32..(1u32 << s) {
            let mut mask = 0u16;
            let mut bits = sub;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                mask |= 1 << support_bits[i];
                bits &= bits - 1;
            }
            let face = Face::from_mask(mask);
            if self.contains_face(face) {
                counts[face.len() - 1] += 1;
            }
        }
        FVector(counts)
    }

    /// True when any two facets are linked by a chain of facets with
    /// pairwise non-empty intersections.
    pub fn is_connected(&self) -> bool {
        let r = self.facets.len();
        let mut seen = vec![false; r];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut found = 1usize;
        while let Some(i) = stack.pop() {
            for (j, facet) in self.facets.iter().enumerate() {
                if !seen[j] && self.facets[i].mask() & facet.mask() != 0 {
                    seen[j] = true;
                    found += 1;
                    stack.push(j);
                }
            }
        }
        found == r
    }

    /// Inclusion-minimal non-faces relative to the support.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        self.minimal_nonfaces_within(self.support)
    }

    /// Inclusion-minimal subsets of `1..=n` that are not faces. Ambient
    /// vertices outside the support show up as singleton non-faces.
    pub fn minimal_nonfaces_ambient(&self, n: usize) -> Result<Vec<Face>> {
        let max_label = self.support().max_label().unwrap_or(0);
        if n < max_label {
            return Err(Error::AmbientTooSmall { n, max_label });
        }
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange {
                label: n,
                max: MAX_VERTICES,
            });
        }
        let mut out = self.minimal_nonfaces_within(self.support);
        let outside = full_mask(n) & !self.support;
        for v in Face::from_mask(outside).labels() {
            out.push(Face::from_labels([v]).unwrap());
        }
        out.sort();
        Ok(out)
    }

    fn minimal_nonfaces_within(&self, universe: u16) -> Vec<Face> {
        let bits: Vec<usize> = (0..MAX_VERTICES)
            .filter(|b| universe & (1 << b) != 0)
            .collect();
        let s = bits.len();
        let mut out: Vec<Face> = Vec::new();
        for sub in 1u32..(1u32 << s) {
            let mut mask = 0u16;
            let mut rest = sub;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                mask |= 1 << bits[i];
                rest &= rest - 1;
            }
            let face = Face::from_mask(mask);
            if self.contains_face(face) {
                continue;
            }
            // Minimal iff dropping any one vertex lands back in the complex.
            let minimal = face.labels().all(|v| {
                let smaller = Face::from_mask(face.mask() & !(1 << (v - 1)));
                self.contains_face(smaller)
            });
            if minimal {
                out.push(face);
            }
        }
        out.sort();
        out
    }

    /// Canonical form: the lexicographically least relabeling of the
    /// complex onto `1..=s` (s = number of support vertices) over all
    /// vertex permutations. Two complexes are isomorphic exactly when
    /// their canonical forms are equal.
    pub fn canonical(&self) -> Result<SimplicialComplex> {
        self.canonical_with_cap(DEFAULT_CANON_CAP)
    }

    pub fn canonical_with_cap(&self, cap: usize) -> Result<SimplicialComplex> {
        let s = self.vertex_count();
        if s > cap {
            return Err(Error::TooLarge {
                what: "canonical form permutation search",
                cap,
            });
        }
        // Compact the support onto bit positions 0..s.
        let positions: Vec<usize> = (0..MAX_VERTICES)
            .filter(|b| self.support & (1 << b) != 0)
            .collect();
        let compact: Vec<u16> = self
            .facets
            .iter()
            .map(|f| {
                let mut m = 0u16;
                for (new, &old) in positions.iter().enumerate() {
                    if f.mask() & (1 << old) != 0 {
                        m |= 1 << new;
                    }
                }
                m
            })
            .collect();

        let mut best: Option<Vec<Face>> = None;
        let mut perm: Vec<usize> = (0..s).collect();
        let mut scratch: Vec<Face> = Vec::with_capacity(compact.len());
        for_each_permutation(&mut perm, &mut |p| {
            scratch.clear();
            for &m in &compact {
                let mut out = 0u16;
                let mut rest = m;
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    out |= 1 << p[b];
                    rest &= rest - 1;
                }
                scratch.push(Face::from_mask(out));
            }
            scratch.sort();
            match &best {
                Some(b) if scratch.as_slice() >= b.as_slice() => {}
                _ => best = Some(scratch.clone()),
            }
        });
        let facets = best.expect("at least the identity permutation ran");
        Ok(SimplicialComplex {
            support: full_mask(s),
            facets,
        })
    }

    /// Total order used for deterministic censuses: facet lists compare
    /// lexicographically in the facet order.
    pub fn cmp_key(&self, other: &SimplicialComplex) -> Ordering {
        self.facets.cmp(&other.facets)
    }

    /// Parses the complex file format: `#`-prefixed comment lines are
    /// ignored and every remaining non-blank line is one facet given as
    /// space-separated positive vertex labels.
    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let mut facets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            facets.push(parse_label_line(line, idx + 1)?);
        }
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        SimplicialComplex::from_facets(facets)
    }

    /// Serializes in the complex file format; facets come out sorted by
    /// (size, lexicographic members).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let labels: Vec<String> = f.labels().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.facets.iter())
    }
}

pub(crate) fn full_mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

pub(crate) fn parse_label_line(line: &str, line_no: usize) -> Result<Face> {
    let mut labels = Vec::new();
    for tok in line.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| Error::ParseError {
            line: line_no,
            message: format!("expected a positive integer, found `{tok}`"),
        })?;
        if v == 0 || v > MAX_VERTICES {
            return Err(Error::ParseError {
                line: line_no,
                message: format!("vertex label {v} outside 1..={MAX_VERTICES}"),
            });
        }
        labels.push(v);
    }
    Face::from_labels(labels)
}

/// Heap's algorithm; calls `visit` on every permutation of `perm`.
pub(crate) fn for_each_permutation<F: FnMut(&[usize])>(perm: &mut [usize], visit: &mut F) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    visit(perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ls: &[usize]) -> Face {
        Face::from_labels(ls.iter().copied()).unwrap()
    }

    fn complex(facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| face(f))).unwrap()
    }

    /// Facet complex of the worked degree-3 ideal on 5 variables used
    /// throughout the tests: <{1,2,4},{1,2,5},{3,4,5},{1,4,5}>.
    fn worked_facet_complex() -> SimplicialComplex {
        complex(&[&[1, 2, 4], &[1, 2, 5], &[3, 4, 5], &[1, 4, 5]])
    }

    #[test]
    fn build_keeps_maximal_facets_only() {
        let c = complex(&[&[1, 2], &[2, 3]]);
        assert_eq!(c.facets(), &[face(&[1, 2]), face(&[2, 3])]);
        assert_eq!(c.support().labels().collect::<Vec<_>>(), vec![1, 2, 3]);

        let c = complex(&[&[1, 2], &[1, 2, 3]]);
        assert_eq!(c.facets(), &[face(&[1, 2, 3])]);
    }

    #[test]
    fn build_rejects_empty_inputs() {
        assert_eq!(
            SimplicialComplex::from_facets([Face::EMPTY]),
            Err(Error::EmptyFacet)
        );
        assert_eq!(
            SimplicialComplex::from_facets(std::iter::empty()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn declared_vertices_must_be_covered() {
        let err = SimplicialComplex::from_facets_on(4, [face(&[1, 2]), face(&[2, 3])]);
        assert_eq!(err, Err(Error::IsolatedVertexDeclared { label: 4 }));
        assert!(SimplicialComplex::from_facets_on(3, [face(&[1, 2]), face(&[2, 3])]).is_ok());
    }

    #[test]
    fn nonpure_mixed_dimension_complex() {
        // <{1,2},{3,4},{3,5},{1,4,5}>: facet dimensions (1,1,1,2).
        let c = complex(&[&[1, 2], &[3, 4], &[3, 5], &[1, 4, 5]]);
        assert_eq!(c.vertex_count(), 5);
        assert_eq!(c.dimension(), 2);
        assert!(!c.is_pure());
        let dims: Vec<i32> = c.facets().iter().map(|f| f.dimension()).collect();
        assert_eq!(dims, vec![1, 1, 1, 2]);
    }

    #[test]
    fn faces_of_a_triangle() {
        let c = complex(&[&[1, 2, 3]]);
        assert_eq!(
            c.faces(1).unwrap(),
            vec![face(&[1, 2]), face(&[1, 3]), face(&[2, 3])]
        );
        assert_eq!(c.faces(0).unwrap().len(), 3);
        assert!(matches!(
            c.faces(3),
            Err(Error::DimensionOutOfRange { k: 3, dim: 2 })
        ));
    }

    #[test]
    fn faces_of_worked_complex() {
        let c = worked_facet_complex();
        assert_eq!(c.faces(1).unwrap().len(), 8);
        let two_parts = complex(&[&[1, 2], &[3, 4]]);
        assert_eq!(two_parts.faces(0).unwrap().len(), 4);
    }

    #[test]
    fn f_vector_of_worked_complex() {
        let c = worked_facet_complex();
        assert_eq!(c.f_vector().counts(), &[5, 8, 4]);
    }

    #[test]
    fn f_vector_of_simplex_is_binomial() {
        let c = complex(&[&[1, 2, 3, 4]]);
        assert_eq!(c.f_vector().counts(), &[4, 6, 4, 1]);
    }

    #[test]
    fn purity_examples() {
        let g = complex(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(g.dimension(), 1);
        assert!(g.is_pure());
        let c = complex(&[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(c.dimension(), 2);
        assert!(c.is_pure());
    }

    /// Reachability closure over facet intersections, as an oracle for
    /// `is_connected` (Floyd-Warshall style, independent of the BFS).
    #[allow(clippy::needless_range_loop)]
    fn connected_oracle(c: &SimplicialComplex) -> bool {
        let r = c.facets().len();
        let mut reach = vec![vec![false; r]; r];
        for i in 0..r {
            for j in 0..r {
                reach[i][j] = i == j || c.facets()[i].mask() & c.facets()[j].mask() != 0;
            }
        }
        for k in 0..r {
            for i in 0..r {
                for j in 0..r {
                    reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
                }
            }
        }
        reach.iter().all(|row| row.iter().all(|&b| b))
    }

    #[test]
    fn connectivity_examples() {
        assert!(complex(&[&[1, 2], &[2, 3]]).is_connected());
        assert!(!complex(&[&[1, 2], &[3, 4]]).is_connected());
        let worked = worked_facet_complex();
        assert!(connected_oracle(&worked));
        assert!(worked.is_connected());
        let split = complex(&[&[1, 2], &[3, 4], &[3, 5]]);
        assert_eq!(split.is_connected(), connected_oracle(&split));
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let path = complex(&[&[1, 2], &[2, 3]]);
        assert_eq!(path.minimal_nonfaces(), vec![face(&[1, 3])]);
        let simplex = complex(&[&[1, 2, 3]]);
        assert!(simplex.minimal_nonfaces().is_empty());
    }

    #[test]
    fn minimal_nonfaces_ambient_adds_missing_singletons() {
        let c = complex(&[&[1, 2]]);
        let nf = c.minimal_nonfaces_ambient(3).unwrap();
        assert_eq!(nf, vec![face(&[3])]);
        assert_eq!(
            c.minimal_nonfaces_ambient(1),
            Err(Error::AmbientTooSmall { n: 1, max_label: 2 })
        );
    }

    #[test]
    fn nonface_face_partition_small_supports() {
        // Every complex on <= 5 vertices: no minimal non-face is a face,
        // and every non-face contains a minimal non-face.
        for n in 1..=5usize {
            for c in all_complexes_on(n) {
                let nonfaces = c.minimal_nonfaces();
                for nf in &nonfaces {
                    assert!(!c.contains_face(*nf));
                }
                let full: u16 = full_mask(n);
                for sub in 1u16..=full {
                    if sub & !full != 0 {
                        continue;
                    }
                    let f = Face::from_mask(sub);
                    if !c.contains_face(f) {
                        assert!(
                            nonfaces.iter().any(|nf| nf.is_subset_of(f)),
                            "non-face {f} of {c:?} misses all minimal non-faces"
                        );
                    }
                }
            }
        }
    }

    /// Every complex whose support is exactly {1..n}: antichains of
    /// non-empty subsets covering all n vertices.
    fn all_complexes_on(n: usize) -> Vec<SimplicialComplex> {
        let masks: Vec<u16> = (1..=full_mask(n)).collect();
        let mut out = Vec::new();
        let mut family: Vec<u16> = Vec::new();
        fn rec(
            masks: &[u16],
            start: usize,
            family: &mut Vec<u16>,
            n: usize,
            out: &mut Vec<SimplicialComplex>,
        ) {
            if !family.is_empty() {
                let cover = family.iter().fold(0u16, |m, f| m | f);
                if cover == full_mask(n) {
                    let faces = family.iter().map(|&m| Face::from_mask(m));
                    out.push(SimplicialComplex::from_facets(faces).unwrap());
                }
            }
            for i in start..masks.len() {
                let m = masks[i];
                let comparable = family.iter().any(|&f| f & m == f || f & m == m);
                if comparable {
                    continue;
                }
                family.push(m);
                rec(masks, i + 1, family, n, out);
                family.pop();
            }
        }
        rec(&masks, 0, &mut family, n, &mut out);
        out
    }

    #[test]
    fn face_closure_rebuilds_the_same_complex() {
        let c = worked_facet_complex();
        let mut all_faces: Vec<Face> = Vec::new();
        for k in 0..=c.dimension() {
            all_faces.extend(c.faces(k).unwrap());
        }
        let rebuilt = SimplicialComplex::from_facets(all_faces).unwrap();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn canonical_relabels_onto_prefix() {
        let c = complex(&[&[2, 3]]);
        let canon = c.canonical().unwrap();
        assert_eq!(canon.facets(), &[face(&[1, 2])]);
    }

    #[test]
    fn canonical_is_permutation_invariant_and_idempotent() {
        let c = complex(&[&[1, 2], &[3, 4], &[3, 5], &[1, 4, 5]]);
        let canon = c.canonical().unwrap();
        assert_eq!(canon.canonical().unwrap(), canon);
        // Relabel by the cycle 1->2->3->4->5->1 and re-canonicalize.
        let relabeled = SimplicialComplex::from_facets(
            c.facets()
                .iter()
                .map(|f| Face::from_labels(f.labels().map(|v| v % 5 + 1)).unwrap()),
        )
        .unwrap();
        assert_eq!(relabeled.canonical().unwrap(), canon);
    }

    #[test]
    fn canonical_cap_enforced() {
        let c = complex(&[&[1, 2, 3, 4, 5, 6]]);
        assert!(matches!(
            c.canonical_with_cap(5),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn parse_and_serialize_roundtrip() {
        let text = "# facet list\n1 2\n3 4\n3 5\n1 4 5\n";
        let c = SimplicialComplex::parse(text).unwrap();
        assert_eq!(c.vertex_count(), 5);
        let again = SimplicialComplex::parse(&c.to_text()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = SimplicialComplex::parse("1 2\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::ParseError { line: 2, .. }));
    }
}
