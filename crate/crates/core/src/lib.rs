//! Combinatorics of square-free monomial ideals at desk scale.
//!
//! The crate revolves around one comparison: a square-free monomial
//! ideal `I` in `n` variables has a facet complex (generated by the
//! supports of its minimal generators) and a non-face complex (all
//! subsets of `1..=n` avoiding every generator support). When the two
//! f-vectors have the same length their difference is the *type* of
//! `I`, and ideals admitting a type are the quasi-f ideals. Graphs
//! enter through their edge ideals: a quasi-f graph always has type
//! `(0, b)` and is characterized by a triangle-free complement.
//!
//! What lives where:
//!
//! * [`complex`]: facet lists, faces, f-vectors, connectivity,
//!   minimal non-faces, canonical forms.
//! * [`ideal`]: ideals, both complexes, quasi-f reports, shadow
//!   operators, perfect sets and perfect numbers.
//! * [`graph`]: simple graphs, both quasi-f decision routes,
//!   enumeration up to isomorphism, two-clique families.
//! * [`cm`]: the matching-join Cohen-Macaulay construction, the
//!   height-(n-2) connectivity criterion, boundary exceptions.
//! * [`verify`]: exhaustive suites that certify each statement over
//!   explicit parameter ranges and report counterexamples.
//!
//! Everything is a pure function over immutable values; with the
//! `parallel` feature (default) the big sweeps fan out over rayon and
//! produce output identical to the sequential fallback.

pub mod canon;
pub mod cm;
pub mod complex;
pub mod error;
pub mod exec;
pub mod face;
pub mod graph;
pub mod ideal;
pub mod verify;

pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use graph::{Graph, GraphCensus, GraphEnumOptions};
pub use ideal::{QuasiFReport, SquarefreeIdeal};
pub use verify::{Caps, ConformanceReport, SuiteId, SuiteResult};
