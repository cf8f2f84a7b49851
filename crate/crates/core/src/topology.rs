//! Finite topologies with precomputed minimal neighborhoods.

use std::collections::HashSet;
use std::sync::Arc;
use thiserror::Error;

use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};

/// First topology axiom violated by a family, with the witnessing member pair
/// for the closure axioms. Checks run in the order listed here; witnesses are
/// the first offending pair in canonical member order.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    #[error("the empty set is not a member")]
    MissingEmpty,
    #[error("the full ground set is not a member")]
    MissingFull,
    #[error("union of members {0:?} and {1:?} is not a member")]
    NotUnionClosed(Subset, Subset),
    #[error("intersection of members {0:?} and {1:?} is not a member")]
    NotIntersectionClosed(Subset, Subset),
}

/// A topology on a finite ground set: the open-set family plus the minimal
/// open neighborhood of every point. On a finite space the intersection of
/// all opens containing a point is itself open, which makes most point tests
/// O(1) in the number of open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    family: SetFamily,
    min_nbhd: Vec<Subset>,
}

fn minimal_neighborhoods(family: &SetFamily) -> Vec<Subset> {
    let ground = family.ground();
    (0..ground.size())
        .map(|x| {
            family
                .iter()
                .filter(|u| u.contains(x))
                .fold(ground.full(), |acc, u| acc.intersect(u))
        })
        .collect()
}

impl Topology {
    /// Check the axioms and build the topology. The empty family fails with
    /// `MissingEmpty`.
    pub fn validate(family: SetFamily) -> Result<Topology, TopologyViolation> {
        let ground = family.ground().clone();
        if !family.contains(ground.empty()) {
            return Err(TopologyViolation::MissingEmpty);
        }
        if !family.contains(ground.full()) {
            return Err(TopologyViolation::MissingFull);
        }
        let members = family.members();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !family.contains(a.union(b)) {
                    return Err(TopologyViolation::NotUnionClosed(a, b));
                }
            }
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !family.contains(a.intersect(b)) {
                    return Err(TopologyViolation::NotIntersectionClosed(a, b));
                }
            }
        }
        let min_nbhd = minimal_neighborhoods(&family);
        Ok(Topology { family, min_nbhd })
    }

    /// Smallest topology containing every subbasis member: close under pairwise
    /// intersection, then under arbitrary union, and adjoin the empty and full
    /// sets. Idempotent: feeding the result back in returns it unchanged.
    pub fn generate(ground: Arc<GroundSet>, subbasis: &[Subset]) -> Topology {
        let full = ground.full();
        let mut inter: HashSet<u16> = HashSet::new();
        inter.insert(full.bits());
        let mut work: Vec<u16> = vec![full.bits()];
        for s in subbasis {
            assert_eq!(s.universe(), full.universe(), "subbasis member off ground");
            if inter.insert(s.bits()) {
                work.push(s.bits());
            }
        }
        // Intersection closure by worklist.
        while let Some(a) = work.pop() {
            let snapshot: Vec<u16> = inter.iter().copied().collect();
            for b in snapshot {
                let c = a & b;
                if inter.insert(c) {
                    work.push(c);
                }
            }
        }
        // Union closure by worklist over the intersection-closed base.
        let mut opens = inter;
        opens.insert(0);
        let mut work: Vec<u16> = opens.iter().copied().collect();
        while let Some(a) = work.pop() {
            let snapshot: Vec<u16> = opens.iter().copied().collect();
            for b in snapshot {
                let c = a | b;
                if opens.insert(c) {
                    work.push(c);
                }
            }
        }
        let members = opens
            .into_iter()
            .map(|bits| ground.subset_from_bits(bits).expect("generated open off ground"))
            .collect();
        let family = SetFamily::new(ground, members);
        let min_nbhd = minimal_neighborhoods(&family);
        Topology { family, min_nbhd }
    }

    /// The indiscrete topology `{{}, X}`.
    pub fn indiscrete(ground: Arc<GroundSet>) -> Topology {
        Topology::generate(ground, &[])
    }

    /// The discrete topology (full powerset).
    pub fn discrete(ground: Arc<GroundSet>) -> Topology {
        let family = SetFamily::powerset(ground);
        let min_nbhd = minimal_neighborhoods(&family);
        Topology { family, min_nbhd }
    }

    /// Internal constructor for families already known to satisfy the axioms,
    /// with their minimal neighborhoods in hand.
    pub(crate) fn from_parts_unchecked(family: SetFamily, min_nbhd: Vec<Subset>) -> Topology {
        debug_assert_eq!(minimal_neighborhoods(&family), min_nbhd);
        debug_assert!(Topology::validate(family.clone()).is_ok());
        Topology { family, min_nbhd }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        self.family.ground()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn opens(&self) -> impl Iterator<Item = Subset> + '_ {
        self.family.iter()
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.family.contains(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.family.contains(a.complement())
    }

    /// Minimal open neighborhood of point `x`.
    pub fn min_nbhd(&self, x: usize) -> Subset {
        self.min_nbhd[x]
    }

    /// Closure: the points whose every neighborhood meets `a`, equivalently
    /// the smallest closed superset of `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        let mut bits = 0u16;
        for (x, u) in self.min_nbhd.iter().enumerate() {
            if u.meets(a) {
                bits |= 1 << x;
            }
        }
        self.ground().subset_from_bits(bits).expect("closure off ground")
    }

    /// Interior: the points whose minimal neighborhood fits inside `a`,
    /// equivalently the largest open subset of `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        let mut bits = 0u16;
        for (x, u) in self.min_nbhd.iter().enumerate() {
            if u.is_subset_of(a) {
                bits |= 1 << x;
            }
        }
        self.ground().subset_from_bits(bits).expect("interior off ground")
    }

    /// The family of closed sets, in canonical order.
    pub fn closed_sets(&self) -> SetFamily {
        let members = self.family.iter().map(Subset::complement).collect();
        SetFamily::new(self.ground().clone(), members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground3() -> Arc<GroundSet> {
        GroundSet::with_size(3).unwrap()
    }

    fn fam(g: &Arc<GroundSet>, bits: &[u16]) -> SetFamily {
        SetFamily::new(
            g.clone(),
            bits.iter().map(|&b| g.subset_from_bits(b).unwrap()).collect(),
        )
    }

    #[test]
    fn validates_the_worked_space() {
        // {{}, {a c}, {a b c}} on {a b c}; minimal neighborhoods
        // a -> {a c}, b -> X, c -> {a c}.
        let g = ground3();
        let t = Topology::validate(fam(&g, &[0b000, 0b101, 0b111])).unwrap();
        assert_eq!(t.min_nbhd(0).bits(), 0b101);
        assert_eq!(t.min_nbhd(1).bits(), 0b111);
        assert_eq!(t.min_nbhd(2).bits(), 0b101);
    }

    #[test]
    fn discrete_pair_family_is_valid_only_on_its_own_ground() {
        let g2 = GroundSet::with_size(2).unwrap();
        assert!(Topology::validate(fam(&g2, &[0b00, 0b01, 0b10, 0b11])).is_ok());

        let g3 = ground3();
        let err = Topology::validate(fam(&g3, &[0b000, 0b001, 0b010, 0b111])).unwrap_err();
        assert_eq!(
            err,
            TopologyViolation::NotUnionClosed(
                g3.subset_from_bits(0b001).unwrap(),
                g3.subset_from_bits(0b010).unwrap()
            )
        );
    }

    #[test]
    fn missing_axioms_are_reported_in_order() {
        let g = ground3();
        assert_eq!(
            Topology::validate(SetFamily::empty(g.clone())).unwrap_err(),
            TopologyViolation::MissingEmpty
        );
        assert_eq!(
            Topology::validate(fam(&g, &[0b000])).unwrap_err(),
            TopologyViolation::MissingFull
        );
        let err = Topology::validate(fam(&g, &[0b000, 0b011, 0b101, 0b111])).unwrap_err();
        assert_eq!(
            err,
            TopologyViolation::NotIntersectionClosed(
                g.subset_from_bits(0b011).unwrap(),
                g.subset_from_bits(0b101).unwrap()
            )
        );
    }

    #[test]
    fn generation_from_subbases() {
        let g = ground3();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        let t = Topology::generate(g.clone(), &[s(0b101)]);
        let bits: Vec<u16> = t.opens().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b101, 0b111]);

        let t = Topology::generate(g.clone(), &[s(0b001), s(0b010)]);
        let bits: Vec<u16> = t.opens().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b010, 0b011, 0b111]);

        let t = Topology::generate(g.clone(), &[]);
        let bits: Vec<u16> = t.opens().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b111]);
    }

    #[test]
    fn generation_is_idempotent() {
        let g = ground3();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        let t = Topology::generate(g.clone(), &[s(0b011), s(0b110)]);
        let again = Topology::generate(g, &t.opens().collect::<Vec<_>>());
        assert_eq!(t, again);
    }

    #[test]
    fn closure_and_interior_on_the_worked_space() {
        let g = ground3();
        let t = Topology::validate(fam(&g, &[0b000, 0b101, 0b111])).unwrap();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        // closed sets are {}, {b}, X
        assert_eq!(t.closure(s(0b001)).bits(), 0b111);
        assert_eq!(t.closure(s(0b010)).bits(), 0b010);
        assert_eq!(t.interior(s(0b101)).bits(), 0b101);
        assert_eq!(t.interior(s(0b011)).bits(), 0b000);
        assert_eq!(t.closed_sets().members().len(), 3);
    }

    #[test]
    fn closure_is_dual_to_interior_everywhere_small() {
        let g = ground3();
        let t = Topology::generate(g.clone(), &[g.singleton(0), g.subset_from_bits(0b110).unwrap()]);
        for a in g.subsets() {
            assert_eq!(t.closure(a), t.interior(a.complement()).complement());
        }
    }
}
