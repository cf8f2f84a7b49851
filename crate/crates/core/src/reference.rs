//! Definitional, deliberately unoptimized forms of the core operations.
//!
//! Everything here recomputes its answer straight from a quantifier-level
//! reading of the definitions: scans over all open neighborhoods, over all
//! family members, over all `2^(2^n)` candidate families. These functions are
//! the independent second route for every production fast path (minimal
//! neighborhoods, principal generators, row enumeration) and power both the
//! registry checkers and the test suite. Keep them free of the shortcuts they
//! are meant to audit.

use std::sync::Arc;

use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::ideal::Ideal;
use crate::space::IdealSpace;
use crate::topology::Topology;

/// Local function by the book: `x` is in `A*` iff no open neighborhood of `x`
/// cuts `A` down to an ideal member. Walks every open set and tests ideal
/// membership against the materialized family, not the generator.
pub fn local_function_by_neighborhoods(space: &IdealSpace, a: Subset) -> Subset {
    let ground = space.ground();
    let mut bits = 0u16;
    'points: for x in 0..ground.size() {
        for u in space.topology().opens() {
            if u.contains(x) && space.ideal().family().contains(u.intersect(a)) {
                continue 'points;
            }
        }
        bits |= 1 << x;
    }
    ground.subset_from_bits(bits).expect("points off ground")
}

/// Sharp function by the book: `x` is in `A#` iff every open neighborhood
/// `U` of `x` admits a non-empty ideal member inside `U n A`. Walks every
/// open set and every family member.
pub fn sharp_function_by_witness(space: &IdealSpace, a: Subset) -> Subset {
    let ground = space.ground();
    let mut bits = 0u16;
    'points: for x in 0..ground.size() {
        for u in space.topology().opens() {
            if !u.contains(x) {
                continue;
            }
            let cut = u.intersect(a);
            let witnessed = space
                .ideal()
                .family()
                .iter()
                .any(|m| !m.is_empty() && m.is_subset_of(cut));
            if !witnessed {
                continue 'points;
            }
        }
        bits |= 1 << x;
    }
    ground.subset_from_bits(bits).expect("points off ground")
}

/// Closure as the intersection of all closed supersets.
pub fn closure_by_closed_supersets(topology: &Topology, a: Subset) -> Subset {
    topology
        .opens()
        .map(Subset::complement)
        .filter(|c| a.is_subset_of(*c))
        .fold(topology.ground().full(), |acc, c| acc.intersect(c))
}

/// Interior as the union of all open subsets.
pub fn interior_by_open_subsets(topology: &Topology, a: Subset) -> Subset {
    topology
        .opens()
        .filter(|u| u.is_subset_of(a))
        .fold(topology.ground().empty(), |acc, u| acc.union(u))
}

/// Quotient by scanning all subsets: `{ A : A n J in I for every member J }`.
pub fn quotient_by_scan(i: &Ideal, j: &SetFamily) -> SetFamily {
    assert_eq!(i.ground(), j.ground());
    let members = i
        .ground()
        .subsets()
        .filter(|a| j.iter().all(|m| i.family().contains(a.intersect(m))))
        .collect();
    SetFamily::new(i.ground().clone(), members)
}

/// All `2^(2^n)` families over `ground`, by ascending family mask. Only for
/// ground sets of size <= 4 (65536 families); the caller owns the blowup.
pub fn all_families(ground: &Arc<GroundSet>) -> impl Iterator<Item = SetFamily> + '_ {
    let n = ground.size();
    assert!(n <= 4, "family enumeration is 2^(2^n); capped at n = 4");
    (0u64..1 << (1 << n)).map(|mask| SetFamily::from_mask(ground.clone(), mask))
}

/// Brute-force topology enumeration: filter every candidate family through
/// the axioms. The independent check for the row-based production path.
pub fn topologies_by_family_filter(ground: &Arc<GroundSet>) -> Vec<Topology> {
    all_families(ground)
        .filter_map(|f| Topology::validate(f).ok())
        .collect()
}

/// Brute-force ideal enumeration through the axioms.
pub fn ideals_by_family_filter(ground: &Arc<GroundSet>) -> Vec<Ideal> {
    all_families(ground)
        .filter_map(|f| Ideal::validate(f).ok())
        .collect()
}

/// T0 by the definition: every pair of distinct points is split by some open.
pub fn is_t0_by_separation(topology: &Topology) -> bool {
    let n = topology.ground().size();
    for x in 0..n {
        for y in x + 1..n {
            let split = topology
                .opens()
                .any(|u| u.contains(x) != u.contains(y));
            if !split {
                return false;
            }
        }
    }
    true
}

/// Maximality by the product characterization: proper, and whenever an
/// intersection lands in the ideal one of the factors already did.
pub fn is_maximal_by_product(i: &Ideal) -> bool {
    if !i.is_proper() {
        return false;
    }
    let ground = i.ground();
    for a in ground.subsets() {
        for b in ground.subsets() {
            if i.contains(a.intersect(b)) && !i.contains(a) && !i.contains(b) {
                return false;
            }
        }
    }
    true
}

/// Maximality straight from the definition: no ideal sits strictly between
/// `i` and the powerset. Enumerates every ideal on the ground set.
pub fn is_maximal_by_extension(i: &Ideal) -> bool {
    if !i.is_proper() {
        return false;
    }
    crate::enumerate::enumerate_ideals(i.ground())
        .iter()
        .all(|k| !(i.family().is_subfamily_of(k.family()) && k != i && k.is_proper()))
}

/// Minimality straight from the definition: proper, not the trivial ideal,
/// and no ideal sits strictly between the trivial one and `i`.
pub fn is_minimal_by_extension(i: &Ideal) -> bool {
    if !i.is_proper() || i.generator().is_empty() {
        return false;
    }
    crate::enumerate::enumerate_ideals(i.ground()).iter().all(|k| {
        !(k.family().is_subfamily_of(i.family())
            && k != i
            && !k.generator().is_empty())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators;

    fn worked_space() -> IdealSpace {
        let g = GroundSet::with_size(3).unwrap();
        let t = Topology::generate(g.clone(), &[g.subset_from_bits(0b101).unwrap()]);
        let i = Ideal::generated(g.clone(), g.subset_from_bits(0b011).unwrap());
        IdealSpace::new(t, i).unwrap()
    }

    #[test]
    fn definitional_routes_agree_on_the_worked_space() {
        let sp = worked_space();
        for a in sp.ground().subsets() {
            assert_eq!(
                local_function_by_neighborhoods(&sp, a),
                operators::local_function(&sp, a)
            );
            assert_eq!(
                sharp_function_by_witness(&sp, a),
                operators::sharp_function(&sp, a)
            );
            assert_eq!(
                closure_by_closed_supersets(sp.topology(), a),
                sp.topology().closure(a)
            );
            assert_eq!(
                interior_by_open_subsets(sp.topology(), a),
                sp.topology().interior(a)
            );
        }
    }

    #[test]
    fn quotient_scan_matches_closed_form() {
        let g = GroundSet::with_size(3).unwrap();
        let sub = |b: u16| g.subset_from_bits(b).unwrap();
        let i = Ideal::generated(g.clone(), sub(0b001));
        let j = SetFamily::new(g.clone(), vec![sub(0b001), sub(0b101)]);
        assert_eq!(quotient_by_scan(&i, &j), *operators::ideal_quotient(&i, &j).family());
    }

    #[test]
    fn brute_force_counts_line_up_small() {
        let g2 = GroundSet::with_size(2).unwrap();
        assert_eq!(topologies_by_family_filter(&g2).len(), 4);
        assert_eq!(ideals_by_family_filter(&g2).len(), 4);
        let g3 = GroundSet::with_size(3).unwrap();
        assert_eq!(topologies_by_family_filter(&g3).len(), 29);
        assert_eq!(ideals_by_family_filter(&g3).len(), 8);
    }

    #[test]
    fn maximality_routes_agree_on_three_points() {
        let g = GroundSet::with_size(3).unwrap();
        for i in crate::enumerate::enumerate_ideals(&g) {
            assert_eq!(is_maximal_by_product(&i), is_maximal_by_extension(&i));
        }
    }
}
