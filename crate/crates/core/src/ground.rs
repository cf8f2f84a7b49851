//! Ground sets of labelled points and their subsets as bitmasks.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Hard cap on ground set size; a subset must fit in a `u16` mask.
pub const MAX_GROUND: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroundSetError {
    #[error("a ground set needs at least one element")]
    Empty,
    #[error("ground set has {0} elements, the cap is {MAX_GROUND}")]
    TooLarge(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("bad element label `{0}`: labels are non-empty and may not contain whitespace, braces, `:` or `#`")]
    BadLabel(String),
}

/// An ordered set of 1..=16 distinct element labels. Element `i` corresponds
/// to bit `i` of every [`Subset`] over this ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

fn label_ok(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | ':' | '#'))
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>, GroundSetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(GroundSetError::Empty);
        }
        if labels.len() > MAX_GROUND {
            return Err(GroundSetError::TooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if !label_ok(l) {
                return Err(GroundSetError::BadLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(GroundSetError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(GroundSet { labels }))
    }

    /// Anonymous ground set of size `n`, labelled `a`, `b`, `c`, ...
    pub fn with_size(n: usize) -> Result<Arc<Self>, GroundSetError> {
        if n == 0 {
            return Err(GroundSetError::Empty);
        }
        if n > MAX_GROUND {
            return Err(GroundSetError::TooLarge(n));
        }
        let labels = (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        Ok(Arc::new(GroundSet { labels }))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn universe_bits(&self) -> u16 {
        ((1u32 << self.size()) - 1) as u16
    }

    /// The empty subset.
    pub fn empty(&self) -> Subset {
        Subset { bits: 0, universe: self.universe_bits() }
    }

    /// The full subset (the ground set itself).
    pub fn full(&self) -> Subset {
        let u = self.universe_bits();
        Subset { bits: u, universe: u }
    }

    pub fn singleton(&self, i: usize) -> Subset {
        assert!(i < self.size(), "element index {i} out of range");
        Subset { bits: 1 << i, universe: self.universe_bits() }
    }

    /// Subset from a raw bitmask; `None` if a bit beyond the ground size is set.
    pub fn subset_from_bits(&self, bits: u16) -> Option<Subset> {
        let u = self.universe_bits();
        (bits & !u == 0).then_some(Subset { bits, universe: u })
    }

    pub fn subset_of_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> Subset {
        let mut bits = 0u16;
        for i in indices {
            assert!(i < self.size(), "element index {i} out of range");
            bits |= 1 << i;
        }
        Subset { bits, universe: self.universe_bits() }
    }

    /// All subsets in ascending mask order (the canonical order).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        let u = self.universe_bits();
        (0..=u as u32).map(move |bits| Subset { bits: bits as u16, universe: u })
    }

    pub fn subset_count(&self) -> u64 {
        1u64 << self.size()
    }
}

/// A subset of a ground set, stored as a bitmask together with the full mask
/// of its ground set. Ordering is by mask value, which is the canonical order
/// used everywhere a family is printed or enumerated.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u16,
    universe: u16,
}

impl Subset {
    pub fn bits(self) -> u16 {
        self.bits
    }

    /// Full mask of the owning ground set.
    pub fn universe(self) -> u16 {
        self.universe
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == self.universe
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.bits & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits & !other.bits == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits & other.bits != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits | other.bits, universe: self.universe }
    }

    pub fn intersect(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits & other.bits, universe: self.universe }
    }

    /// Set difference `self \ other`.
    pub fn minus(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits & !other.bits, universe: self.universe }
    }

    pub fn complement(self) -> Subset {
        Subset { bits: !self.bits & self.universe, universe: self.universe }
    }

    /// Indices of the elements in this subset, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16u32).filter_map(move |i| (self.bits >> i & 1 == 1).then_some(i as usize))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_validated() {
        assert_eq!(GroundSet::new(Vec::<String>::new()).unwrap_err(), GroundSetError::Empty);
        assert!(matches!(
            GroundSet::new(vec!["a"; 17]).unwrap_err(),
            GroundSetError::TooLarge(17) | GroundSetError::DuplicateLabel(_)
        ));
        assert_eq!(
            GroundSet::new(["a", "b", "a"]).unwrap_err(),
            GroundSetError::DuplicateLabel("a".into())
        );
        assert_eq!(
            GroundSet::new(["a:b"]).unwrap_err(),
            GroundSetError::BadLabel("a:b".into())
        );
        let g = GroundSet::new(["p", "q"]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.index_of("q"), Some(1));
    }

    #[test]
    fn sixteen_elements_fit() {
        let g = GroundSet::with_size(16).unwrap();
        assert_eq!(g.full().bits(), 0xffff);
        assert_eq!(g.full().len(), 16);
        assert!(g.subset_from_bits(0xffff).is_some());
    }

    #[test]
    fn subset_algebra() {
        let g = GroundSet::with_size(3).unwrap();
        let ac = g.subset_from_bits(0b101).unwrap();
        let ab = g.subset_from_bits(0b011).unwrap();
        assert_eq!(ac.union(ab).bits(), 0b111);
        assert_eq!(ac.intersect(ab).bits(), 0b001);
        assert_eq!(ac.minus(ab).bits(), 0b100);
        assert_eq!(ac.complement().bits(), 0b010);
        assert!(ac.intersect(ab).is_subset_of(ab));
        assert!(!ac.is_subset_of(ab));
        assert_eq!(ac.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(g.subset_from_bits(0b1000).is_none());
    }

    #[test]
    fn canonical_order_is_by_mask() {
        let g = GroundSet::with_size(3).unwrap();
        let all: Vec<u16> = g.subsets().map(Subset::bits).collect();
        assert_eq!(all, (0..8).collect::<Vec<u16>>());
    }
}
