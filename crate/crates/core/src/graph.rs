//! Simple graphs, the two quasi-f routes, and exhaustive enumeration.
//!
//! A graph lives on the labeled vertex set `1..=n` with adjacency
//! stored as one bitmask per vertex. Two independent routes decide
//! whether a graph is quasi-f:
//!
//! * the direct route builds the edge ideal and compares the f-vectors
//!   of its two complexes, straight from the definitions;
//! * the characterized route only inspects `b = C(n,2) - 2|E|` and
//!   whether the complement has a triangle.
//!
//! The enumeration sweeps keep both routes around precisely so that one
//! can be checked against the other on every small graph.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canon;
use crate::complex::{full_mask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec;
use crate::face::{Face, MAX_VERTICES};
use crate::ideal::{facet_ideal, QuasiFReport, SquarefreeIdeal};

/// Default cap for graph enumeration up to isomorphism.
pub const DEFAULT_ENUM_CAP: usize = 8;

/// Hard cap: the labeled edge-mask sweep uses a `u32`.
pub const MAX_ENUM_VERTICES: usize = 8;

/// A finite simple graph on the labeled vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u16>,
}

impl Graph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange {
                label: n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u16; n];
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Graph { n, adj })
    }

    /// Complete graph on `1..=n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::from_edges(n, std::iter::empty())?;
        let full = full_mask(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & (1 << v) != 0 {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn adj_masks(&self) -> &[u16] {
        &self.adj
    }

    /// Edge-complement on the same vertex set; an involution.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// First vertex with no incident edge, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] == 0).map(|v| v + 1)
    }

    /// Connectivity of the graph on all `n` vertices (an isolated
    /// vertex disconnects a graph with `n >= 2`).
    pub fn is_connected(&self) -> bool {
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }

    /// Vertex sets of the connected components, ascending by least label.
    pub fn components(&self) -> Vec<Face> {
        let full = full_mask(self.n);
        let mut unvisited = full;
        let mut out = Vec::new();
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut comp = 1u16 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u16;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unvisited &= !comp;
            out.push(Face::from_mask(comp));
        }
        out
    }

    /// Some triangle, as ascending labels.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & (1 << v) == 0 {
                    continue;
                }
                let common = self.adj[u] & self.adj[v] & !((1 << (v + 1)) - 1);
                if common != 0 {
                    let w = common.trailing_zeros() as usize;
                    return Some((u + 1, v + 1, w + 1));
                }
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// The degree-2 ideal generated by the edges, in `n` ambient
    /// variables.
    pub fn edge_ideal(&self) -> Result<SquarefreeIdeal> {
        let gens: Vec<Face> = self
            .edges()
            .into_iter()
            .map(|(u, v)| Face::from_labels([u, v]).unwrap())
            .collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(SquarefreeIdeal::from_antichain(self.n, gens))
    }

    /// `C(n,2) - 2|E|`, always recomputed from the edge set.
    pub fn b_value(&self) -> i64 {
        let pairs = (self.n * (self.n - 1) / 2) as i64;
        pairs - 2 * self.edge_count() as i64
    }

    /// Definition route: build the edge ideal and compare the
    /// f-vectors of its facet and non-face complexes.
    pub fn is_quasi_f_direct(&self) -> Result<QuasiFReport> {
        if let Some(label) = self.isolated_vertex() {
            return Err(Error::IsolatedVertex { label });
        }
        let report = self.edge_ideal()?.quasi_f_report();
        debug_assert!(
            !report.is_quasi_f
                || report
                    .type_vector
                    .as_ref()
                    .is_some_and(|t| t.len() == 2 && t[0] == 0),
            "a quasi-f graph must have type shape (0,b)"
        );
        Ok(report)
    }

    /// Characterization route: quasi-f of type `(0,b)` exactly when
    /// `|b| < C(n,2)` and the complement is triangle-free.
    pub fn is_quasi_f_characterized(&self) -> Result<(bool, Option<i64>)> {
        if let Some(label) = self.isolated_vertex() {
            return Err(Error::IsolatedVertex { label });
        }
        let b = self.b_value();
        let pairs = (self.n * (self.n - 1) / 2) as i64;
        let verdict = b.abs() < pairs && !self.complement().has_triangle();
        Ok((verdict, verdict.then_some(b)))
    }

    /// Part sizes `(m, n)` with `m >= n` when the complement is a
    /// complete bipartite graph, i.e. when the graph is a disjoint
    /// union of two cliques.
    pub fn is_mn_graph(&self) -> Option<(usize, usize)> {
        let comps = self.components();
        if comps.len() != 2 {
            return None;
        }
        for comp in &comps {
            let mask = comp.mask();
            let size = comp.len();
            for v in comp.labels() {
                if (self.adj[v - 1] & mask).count_ones() as usize != size - 1 {
                    return None;
                }
            }
        }
        let (a, b) = (comps[0].len(), comps[1].len());
        Some((a.max(b), a.min(b)))
    }

    /// For a disconnected quasi-f graph of type `(0,b)`: is it a
    /// two-clique graph whose part sizes satisfy
    /// `(m - n)^2 = m + n - 2b`?
    pub fn check_disconnected_classification(&self) -> Result<bool> {
        let report = self.is_quasi_f_direct()?;
        if !report.is_quasi_f {
            return Err(Error::PreconditionViolated {
                what: "the graph is not quasi-f".into(),
            });
        }
        if self.is_connected() {
            return Err(Error::PreconditionViolated {
                what: "the graph is connected".into(),
            });
        }
        let b = self.b_value();
        Ok(match self.is_mn_graph() {
            Some((m, n2)) => {
                let (m, n2) = (m as i64, n2 as i64);
                (m - n2).pow(2) == m + n2 - 2 * b
            }
            None => false,
        })
    }

    /// The graph as a 1-dimensional complex (facets = edges). Vertices
    /// without edges do not survive, so isolated vertices are rejected.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if let Some(label) = self.isolated_vertex() {
            return Err(Error::IsolatedVertex { label });
        }
        SimplicialComplex::from_facets(
            self.edges()
                .into_iter()
                .map(|(u, v)| Face::from_labels([u, v]).unwrap()),
        )
    }

    /// Canonical adjacency key (see [`canonical`](Self::canonical)).
    pub fn canonical_key(&self) -> Result<u64> {
        if self.n > canon::MAX_CANON_VERTICES {
            return Err(Error::TooLarge {
                what: "graph canonical labeling",
                cap: canon::MAX_CANON_VERTICES,
            });
        }
        Ok(canon::canonical_mask(self.n, &self.adj))
    }

    /// The isomorphic representative with the lexicographically
    /// smallest adjacency bit-string.
    pub fn canonical(&self) -> Result<Graph> {
        let key = self.canonical_key()?;
        Graph::from_edges(self.n, canon::mask_to_edges(self.n, key))
    }

    /// Parses the graph file format: `n <count>` header, then one edge
    /// per line as two labels.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
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
                    n = Some(count);
                }
                Some(_) => {
                    let labels: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<usize>().map_err(|_| Error::ParseError {
                                line: line_no,
                                message: format!("expected a positive integer, found `{t}`"),
                            })
                        })
                        .collect::<Result<_>>()?;
                    if labels.len() != 2 {
                        return Err(Error::ParseError {
                            line: line_no,
                            message: "an edge line must hold exactly two labels".into(),
                        });
                    }
                    edges.push((labels[0], labels[1]));
                }
            }
        }
        let n = n.ok_or(Error::EmptyInput)?;
        Graph::from_edges(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

/// Disjoint union `K_n + K_{n-r}` on `2n - r` vertices, together with
/// its type entry `b = (2n - r - r^2) / 2`.
pub fn construct_n_nr_graph(n: usize, r: usize) -> Result<(Graph, i64)> {
    if n < 4 || r <= 1 || r >= n {
        return Err(Error::ParameterOutOfRange {
            what: format!("require n >= 4 and 1 < r < n (got n={n}, r={r})"),
        });
    }
    if r == n - 1 {
        // The second part would be a single vertex, which is isolated.
        return Err(Error::ParameterOutOfRange {
            what: format!("r = n - 1 = {r} leaves a one-vertex part with an isolated vertex"),
        });
    }
    let total = 2 * n - r;
    if total > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "two-clique construction vertex count",
            cap: MAX_VERTICES,
        });
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            edges.push((u, v));
        }
    }
    for u in (n + 1)..=total {
        for v in (u + 1)..=total {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(total, edges)?;
    let b = (2 * n as i64 - r as i64 - (r * r) as i64) / 2;
    debug_assert_eq!(g.b_value(), b);
    Ok((g, b))
}

// ---------------------------------------------------------------------
// Labeled edge-mask sweeps
// ---------------------------------------------------------------------

/// Precomputed tables for iterating every labeled graph on `n`
/// vertices as a `u32` over the edge slots in colex order.
pub(crate) struct EdgeSpace {
    pub n: usize,
    pub slots: Vec<(usize, usize)>,
    triples: Vec<u32>,
}

impl EdgeSpace {
    #[allow(clippy::needless_range_loop)]
    pub fn new(n: usize) -> EdgeSpace {
        assert!((1..=MAX_ENUM_VERTICES).contains(&n));
        let mut slots = Vec::new();
        let mut slot_of = [[0u8; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES];
        for p in 1..n {
            for q in 0..p {
                slot_of[q][p] = slots.len() as u8;
                slot_of[p][q] = slots.len() as u8;
                slots.push((q, p));
            }
        }
        let mut triples = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    triples.push(
                        (1u32 << slot_of[a][b]) | (1u32 << slot_of[a][c]) | (1u32 << slot_of[b][c]),
                    );
                }
            }
        }
        EdgeSpace { n, slots, triples }
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn total_masks(&self) -> u64 {
        1u64 << self.slots.len()
    }

    pub fn full_slots(&self) -> u32 {
        if self.slots.is_empty() {
            0
        } else {
            u32::MAX >> (32 - self.slots.len())
        }
    }

    pub fn adj(&self, mask: u32) -> Vec<u16> {
        let mut adj = vec![0u16; self.n];
        let mut rest = mask;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (q, p) = self.slots[k];
            adj[q] |= 1 << p;
            adj[p] |= 1 << q;
        }
        adj
    }

    /// Union of the endpoints of the present edges.
    pub fn coverage(&self, mask: u32) -> u16 {
        let mut cover = 0u16;
        let mut rest = mask;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (q, p) = self.slots[k];
            cover |= (1 << q) | (1 << p);
        }
        cover
    }

    pub fn has_triangle_mask(&self, mask: u32) -> bool {
        self.triples.iter().any(|&t| t & !mask == 0)
    }

    pub fn graph(&self, mask: u32) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj(mask),
        }
    }
}

/// Filters for [`enumerate_quasi_f_graphs`].
#[derive(Clone, Debug, Default)]
pub struct GraphEnumOptions {
    /// Keep only type `(0, b)` with this `b`.
    pub b: Option<i64>,
    /// Keep only connected (`Some(true)`) or disconnected
    /// (`Some(false)`) graphs.
    pub connected: Option<bool>,
    /// Enumeration cap override; `None` means [`DEFAULT_ENUM_CAP`].
    pub cap: Option<usize>,
}

/// A census of quasi-f graphs up to isomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct GraphCensus {
    pub n: usize,
    pub filter_b: Option<i64>,
    pub filter_connected: Option<bool>,
    pub total: u64,
    pub by_type: BTreeMap<i64, u64>,
    pub graphs: Vec<Graph>,
}

fn enum_guard(n: usize, options: &GraphEnumOptions) -> Result<EdgeSpace> {
    let cap = options
        .cap
        .unwrap_or(DEFAULT_ENUM_CAP)
        .min(MAX_ENUM_VERTICES);
    if n < 2 || n > cap {
        return Err(Error::TooLarge {
            what: "graph enumeration vertex count",
            cap,
        });
    }
    Ok(EdgeSpace::new(n))
}

/// Canonical key of the labeled graph `mask` when it passes the
/// characterization and the filters.
fn candidate_key(space: &EdgeSpace, mask: u32, options: &GraphEnumOptions) -> Option<u64> {
    let n = space.n;
    if space.coverage(mask) != full_mask(n) {
        return None;
    }
    let pairs = space.slot_count() as i64;
    let b = pairs - 2 * mask.count_ones() as i64;
    if b.abs() >= pairs || space.has_triangle_mask(space.full_slots() & !mask) {
        return None;
    }
    if options.b.is_some_and(|want| want != b) {
        return None;
    }
    let adj = space.adj(mask);
    if let Some(want_connected) = options.connected {
        let g = Graph {
            n,
            adj: adj.clone(),
        };
        if g.is_connected() != want_connected {
            return None;
        }
    }
    Some(canon::canonical_mask(n, &adj))
}

fn census_from_keys(n: usize, options: &GraphEnumOptions, mut keys: Vec<u64>) -> GraphCensus {
    keys.sort_unstable();
    keys.dedup();
    let mut by_type: BTreeMap<i64, u64> = BTreeMap::new();
    let graphs: Vec<Graph> = keys
        .iter()
        .map(|&key| {
            let g = Graph::from_edges(n, canon::mask_to_edges(n, key)).unwrap();
            *by_type.entry(g.b_value()).or_insert(0) += 1;
            g
        })
        .collect();
    GraphCensus {
        n,
        filter_b: options.b,
        filter_connected: options.connected,
        total: graphs.len() as u64,
        by_type,
        graphs,
    }
}

/// Every isolated-vertex-free graph on `n` labeled vertices that
/// passes the triangle-free-complement characterization, deduplicated
/// by canonical form and listed in canonical order.
pub fn enumerate_quasi_f_graphs(n: usize, options: &GraphEnumOptions) -> Result<GraphCensus> {
    let space = enum_guard(n, options)?;
    let keys = exec::filter_map_collect(space.total_masks(), |mask| {
        candidate_key(&space, mask as u32, options)
    });
    Ok(census_from_keys(n, options, keys))
}

/// Sequential twin of [`enumerate_quasi_f_graphs`]; the parallel and
/// sequential paths must agree exactly.
pub fn enumerate_quasi_f_graphs_seq(n: usize, options: &GraphEnumOptions) -> Result<GraphCensus> {
    let space = enum_guard(n, options)?;
    let keys = exec::filter_map_collect_seq(space.total_masks(), |mask| {
        candidate_key(&space, mask as u32, options)
    });
    Ok(census_from_keys(n, options, keys))
}

/// One entry of a pure-complex census.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexCensusEntry {
    pub facets: SimplicialComplex,
    #[serde(rename = "type")]
    pub type_vector: Vec<i64>,
    pub connected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexCensus {
    pub n: usize,
    pub d: usize,
    pub filter_type: Option<Vec<i64>>,
    pub total: u64,
    pub by_type: BTreeMap<String, u64>,
    pub complexes: Vec<ComplexCensusEntry>,
}

/// All pure `d`-dimensional complexes covering `1..=n` whose facet
/// ideal is quasi-f, up to isomorphism.
pub fn enumerate_quasi_f_complexes(
    n: usize,
    d: usize,
    type_filter: Option<&[i64]>,
) -> Result<ComplexCensus> {
    if n > 6 {
        return Err(Error::TooLarge {
            what: "pure-complex enumeration vertex count",
            cap: 6,
        });
    }
    if d == 0 || d > 3 || d + 1 > n {
        return Err(Error::ParameterOutOfRange {
            what: format!("require 1 <= d <= 3 and d + 1 <= n (got n={n}, d={d})"),
        });
    }
    let candidates: Vec<u16> = subsets_of_size(n, d + 1);
    let k = candidates.len();
    let full = full_mask(n);

    let surviving: Vec<Vec<Face>> = exec::filter_map_collect(1u64 << k, |pick| {
        if pick == 0 {
            return None;
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
            return None;
        }
        let ideal = SquarefreeIdeal::from_antichain(n, facets.clone());
        let report = ideal.quasi_f_report();
        if !report.is_quasi_f {
            return None;
        }
        if let Some(want) = type_filter {
            if report.type_vector.as_deref() != Some(want) {
                return None;
            }
        }
        Some(facets)
    });

    let mut seen: BTreeMap<Vec<Face>, ComplexCensusEntry> = BTreeMap::new();
    for facets in surviving {
        let complex = SimplicialComplex::from_facets(facets).unwrap();
        let canonical = complex.canonical_with_cap(n.max(1))?;
        let key = canonical.facets().to_vec();
        if seen.contains_key(&key) {
            continue;
        }
        let report = facet_ideal(&canonical, n)?.quasi_f_report();
        let entry = ComplexCensusEntry {
            connected: canonical.is_connected(),
            type_vector: report.type_vector.expect("filtered to quasi-f"),
            facets: canonical,
        };
        seen.insert(key, entry);
    }
    let mut by_type: BTreeMap<String, u64> = BTreeMap::new();
    let complexes: Vec<ComplexCensusEntry> = seen.into_values().collect();
    for e in &complexes {
        let key = crate::complex::format_type_vector(&e.type_vector);
        *by_type.entry(key).or_insert(0) += 1;
    }
    Ok(ComplexCensus {
        n,
        d,
        filter_type: type_filter.map(|t| t.to_vec()),
        total: complexes.len() as u64,
        by_type,
        complexes,
    })
}

/// All size-`k` subsets of `1..=n` as masks, ascending.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<u16> {
    let mut out = Vec::new();
    for mask in 0u16..=full_mask(n) {
        if mask.count_ones() as usize == k {
            out.push(mask);
        }
    }
    out
}
