//! Ideals of subsets: families closed downward and under finite unions.
//!
//! On a finite ground set every ideal is principal: it is the powerset of the
//! union of its members. An [`Ideal`] therefore stores that generator next to
//! the materialized family, and membership is a single mask comparison.

use std::sync::Arc;
use thiserror::Error;

use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};

/// First ideal axiom violated by a family. Checks run in the order listed;
/// witnesses are the first offenders in canonical member order.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealViolation {
    #[error("the empty set is not a member")]
    MissingEmpty,
    #[error("member {0:?} has non-member subset {1:?}")]
    NotDownwardClosed(Subset, Subset),
    #[error("union of members {0:?} and {1:?} is not a member")]
    NotUnionClosed(Subset, Subset),
}

/// An ideal over a finite ground set, stored as generator plus materialized
/// family. The family is always exactly the powerset of the generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    family: SetFamily,
    generator: Subset,
}

/// Submasks of `m` in ascending mask order, starting with 0.
fn submasks(m: u16) -> impl Iterator<Item = u16> {
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let s = next?;
        next = if s == m { None } else { Some(s.wrapping_sub(m) & m) };
        Some(s)
    })
}

impl Ideal {
    /// The principal ideal of all subsets of `generator`.
    pub fn generated(ground: Arc<GroundSet>, generator: Subset) -> Ideal {
        assert_eq!(
            generator.universe(),
            ground.full().universe(),
            "generator built over a different ground set"
        );
        let members = submasks(generator.bits())
            .map(|b| ground.subset_from_bits(b).expect("submask off ground"))
            .collect();
        let family = SetFamily::new(ground, members);
        Ideal { family, generator }
    }

    /// The ideal of subsets disjoint from `a`; its generator is the
    /// complement of `a`.
    pub fn epsilon(ground: Arc<GroundSet>, a: Subset) -> Ideal {
        Ideal::generated(ground, a.complement())
    }

    /// The trivial ideal `{{}}`.
    pub fn trivial(ground: Arc<GroundSet>) -> Ideal {
        let e = ground.empty();
        Ideal::generated(ground, e)
    }

    /// The full powerset as an ideal (the improper one).
    pub fn powerset(ground: Arc<GroundSet>) -> Ideal {
        let full = ground.full();
        Ideal::generated(ground, full)
    }

    /// Check the axioms on an explicit family and build the ideal. The empty
    /// family fails with `MissingEmpty`.
    pub fn validate(family: SetFamily) -> Result<Ideal, IdealViolation> {
        let ground = family.ground().clone();
        if !family.contains(ground.empty()) {
            return Err(IdealViolation::MissingEmpty);
        }
        for m in family.iter() {
            for sub in submasks(m.bits()) {
                let sub = ground.subset_from_bits(sub).expect("submask off ground");
                if !family.contains(sub) {
                    return Err(IdealViolation::NotDownwardClosed(m, sub));
                }
            }
        }
        let members = family.members();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !family.contains(a.union(b)) {
                    return Err(IdealViolation::NotUnionClosed(a, b));
                }
            }
        }
        let generator = family.union_of_members();
        debug_assert_eq!(family.len() as u64, 1u64 << generator.len());
        Ok(Ideal { family, generator })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        self.family.ground()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn generator(&self) -> Subset {
        self.generator
    }

    /// Membership test: `a` is in the ideal iff it sits inside the generator.
    pub fn contains(&self, a: Subset) -> bool {
        a.is_subset_of(self.generator)
    }

    /// Proper means not the whole powerset.
    pub fn is_proper(&self) -> bool {
        !self.generator.is_full()
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Intersection of two ideals; principal ideals intersect to the powerset
    /// of the generators' intersection.
    pub fn meet(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ground(), other.ground());
        Ideal::generated(self.ground().clone(), self.generator.intersect(other.generator))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground3() -> Arc<GroundSet> {
        GroundSet::with_size(3).unwrap()
    }

    #[test]
    fn generated_materializes_the_powerset_of_the_generator() {
        let g = ground3();
        let i = Ideal::generated(g.clone(), g.subset_from_bits(0b011).unwrap());
        let bits: Vec<u16> = i.family().iter().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b010, 0b011]);
        assert!(i.contains(g.subset_from_bits(0b010).unwrap()));
        assert!(!i.contains(g.subset_from_bits(0b100).unwrap()));
        assert!(i.is_proper());

        assert_eq!(Ideal::trivial(g.clone()).len(), 1);
        assert_eq!(Ideal::powerset(g.clone()).len(), 8);
        assert!(!Ideal::powerset(g).is_proper());
    }

    #[test]
    fn epsilon_is_disjointness() {
        let g = ground3();
        let a = g.subset_from_bits(0b101).unwrap();
        let i = Ideal::epsilon(g.clone(), a);
        assert_eq!(i.generator().bits(), 0b010);
        for s in g.subsets() {
            assert_eq!(i.contains(s), !s.meets(a));
        }
    }

    #[test]
    fn validation_reports_first_violation() {
        let g = ground3();
        let s = |b: u16| g.subset_from_bits(b).unwrap();
        let fam = |bits: &[u16]| {
            SetFamily::new(g.clone(), bits.iter().map(|&b| s(b)).collect())
        };

        assert_eq!(
            Ideal::validate(fam(&[0b001])).unwrap_err(),
            IdealViolation::MissingEmpty
        );
        assert_eq!(
            Ideal::validate(fam(&[0b000, 0b011])).unwrap_err(),
            IdealViolation::NotDownwardClosed(s(0b011), s(0b001))
        );
        assert_eq!(
            Ideal::validate(fam(&[0b000, 0b001, 0b010])).unwrap_err(),
            IdealViolation::NotUnionClosed(s(0b001), s(0b010))
        );

        let ok = Ideal::validate(fam(&[0b000, 0b001, 0b010, 0b011])).unwrap();
        assert_eq!(ok.generator().bits(), 0b011);
    }

    #[test]
    fn meet_of_principal_ideals() {
        let g = ground3();
        let i = Ideal::generated(g.clone(), g.subset_from_bits(0b011).unwrap());
        let j = Ideal::generated(g.clone(), g.subset_from_bits(0b110).unwrap());
        let m = i.meet(&j);
        assert_eq!(m.generator().bits(), 0b010);
        // Pointwise this is exactly the family intersection.
        for s in g.subsets() {
            assert_eq!(m.contains(s), i.contains(s) && j.contains(s));
        }
    }
}
