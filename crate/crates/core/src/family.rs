//! Families of subsets, kept sorted and duplicate-free in mask order.

use std::sync::Arc;

use crate::ground::{GroundSet, Subset};

/// A finite family of subsets over one ground set. Members are stored sorted
/// ascending by mask value with duplicates removed, so equality of families
/// is plain structural equality and membership is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Arc<GroundSet>,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new(ground: Arc<GroundSet>, mut members: Vec<Subset>) -> Self {
        let universe = ground.full().universe();
        for m in &members {
            assert_eq!(
                m.universe(),
                universe,
                "family member built over a different ground set"
            );
        }
        members.sort_unstable();
        members.dedup();
        SetFamily { ground, members }
    }

    pub fn empty(ground: Arc<GroundSet>) -> Self {
        SetFamily { ground, members: Vec::new() }
    }

    /// The family containing only the empty set.
    pub fn just_empty_set(ground: Arc<GroundSet>) -> Self {
        let e = ground.empty();
        SetFamily { ground, members: vec![e] }
    }

    /// The full powerset, in canonical order.
    pub fn powerset(ground: Arc<GroundSet>) -> Self {
        let members = ground.subsets().collect();
        SetFamily { ground, members }
    }

    /// Decode a family from a bitmask over subset masks: bit `s` set means the
    /// subset with mask `s` is a member. Usable for ground sets of size <= 6.
    pub fn from_mask(ground: Arc<GroundSet>, family_mask: u64) -> Self {
        let count = ground.subset_count();
        assert!(count <= 64, "family masks only cover ground sets of size <= 6");
        let members = ground
            .subsets()
            .filter(|s| family_mask >> s.bits() & 1 == 1)
            .collect();
        let _ = count;
        SetFamily { ground, members }
    }

    /// Inverse of [`SetFamily::from_mask`].
    pub fn to_mask(&self) -> u64 {
        assert!(self.ground.subset_count() <= 64);
        self.members.iter().fold(0u64, |acc, m| acc | 1 << m.bits())
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|m| other.contains(*m))
    }

    /// Union of all members; the empty set for an empty family.
    pub fn union_of_members(&self) -> Subset {
        self.members
            .iter()
            .fold(self.ground.empty(), |acc, m| acc.union(*m))
    }

    pub fn intersection_with(&self, other: &SetFamily) -> SetFamily {
        assert_eq!(self.ground, other.ground);
        let members = self.iter().filter(|m| other.contains(*m)).collect();
        SetFamily { ground: self.ground.clone(), members }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_are_sorted_and_deduped() {
        let g = GroundSet::with_size(3).unwrap();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        let f = SetFamily::new(g.clone(), vec![s(5), s(0), s(5), s(3)]);
        let bits: Vec<u16> = f.iter().map(Subset::bits).collect();
        assert_eq!(bits, vec![0, 3, 5]);
        assert!(f.contains(s(3)));
        assert!(!f.contains(s(7)));
    }

    #[test]
    fn mask_round_trip() {
        let g = GroundSet::with_size(3).unwrap();
        for mask in [0u64, 1, 0b10101010, 0xff] {
            let f = SetFamily::from_mask(g.clone(), mask);
            assert_eq!(f.to_mask(), mask);
        }
        assert_eq!(SetFamily::powerset(g.clone()).to_mask(), 0xff);
        assert_eq!(SetFamily::just_empty_set(g).to_mask(), 1);
    }

    #[test]
    fn union_of_members_covers_family() {
        let g = GroundSet::with_size(4).unwrap();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        let f = SetFamily::new(g.clone(), vec![s(0b0011), s(0b0100)]);
        assert_eq!(f.union_of_members().bits(), 0b0111);
        assert_eq!(SetFamily::empty(g).union_of_members().bits(), 0);
    }
}
