//! Vertex subsets as 16-bit masks.
//!
//! Vertices carry the labels `1..=16`; label `v` maps to bit `v - 1`.
//! Everything downstream (complexes, ideals, graphs) is built on these
//! masks, which keeps exhaustive subset searches cheap.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on vertex labels; a face is a `u16` bitmask.
pub const MAX_VERTICES: usize = 16;

/// A set of vertex labels. The empty face is allowed (dimension -1) but
/// is never stored as a facet or generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u16);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from 1-based labels. Duplicates collapse.
    pub fn from_labels<I>(labels: I) -> Result<Face>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u16;
        for label in labels {
            if label == 0 || label > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    label,
                    max: MAX_VERTICES,
                });
            }
            mask |= 1 << (label - 1);
        }
        Ok(Face(mask))
    }

    pub const fn from_mask(mask: u16) -> Face {
        Face(mask)
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    pub fn labels(self) -> impl Iterator<Item = usize> {
        (1..=MAX_VERTICES).filter(move |v| self.0 & (1 << (v - 1)) != 0)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub const fn dimension(self) -> i32 {
        self.0.count_ones() as i32 - 1
    }

    pub const fn contains(self, label: usize) -> bool {
        label >= 1 && label <= MAX_VERTICES && self.0 & (1 << (label - 1)) != 0
    }

    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & other.0 == self.0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn max_label(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(16 - self.0.leading_zeros() as usize)
        }
    }
}

/// Faces order by cardinality first, then lexicographically on the
/// ascending member lists; this is the order used when serializing
/// facet lists.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                return Ordering::Equal;
            }
            // The set holding the smallest member of the symmetric
            // difference comes first in member-list order.
            let low = diff & diff.wrapping_neg();
            if self.0 & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.labels().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.labels() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
