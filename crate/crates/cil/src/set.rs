//! Vertex sets as 64-bit masks.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported ambient vertex/variable count.
pub const MAX_VERTICES: usize = 64;

/// A set of 1-based vertex indices stored as a bitmask (vertex `v` is bit
/// `v - 1`).
///
/// The derived `Ord` compares masks as integers, which is exactly the
/// colexicographic order on subsets; every canonical generator and facet
/// order in this crate relies on that.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    /// Builds a set from 1-based indices, rejecting indices outside `1..=64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Result<VertexSet> {
        let mut mask = 0u64;
        for v in vs {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1u64 << (v - 1);
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    #[must_use]
    pub fn insert(self, v: usize) -> VertexSet {
        self.union(VertexSet::singleton(v))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> VertexSet {
        self.difference(VertexSet::singleton(v))
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// `{1..n} \ self`.
    #[must_use]
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// True when all members are within `1..=n`.
    pub fn fits_within(self, n: usize) -> bool {
        self.is_subset_of(VertexSet::full(n))
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members strictly above `v`, i.e. `self ∩ {v+1, ..}`.
    #[must_use]
    pub fn above(self, v: usize) -> VertexSet {
        if v >= 64 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & !((1u64 << v) - 1))
        }
    }

    /// Ascending iterator over members (1-based).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    pub fn vertices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, the empty set first and `self` last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(vs).map_err(D::Error::custom)
    }
}
