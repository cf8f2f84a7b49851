//! Classification predicates for ideals, topologies, and spaces.
//!
//! Every universally-quantified predicate that comes back `false` carries a
//! witness, so callers (the CLI report and the falsifier) can show why. The
//! eligibility rules are strict: asking whether the improper ideal is maximal
//! is an error, not a `false`.

use thiserror::Error;

use crate::family::SetFamily;
use crate::ground::Subset;
use crate::ideal::Ideal;
use crate::space::IdealSpace;
use crate::topology::Topology;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("predicate requires a proper ideal")]
    NotProper,
    #[error("predicate requires a proper ideal other than the trivial one")]
    NotEligible,
}

/// Evidence attached to a negative verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Set(Subset),
    Pair(Subset, Subset),
}

/// Outcome of one predicate: its name, the verdict, and on a negative
/// verdict of a universally-quantified predicate, a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub predicate: &'static str,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl ClassificationReport {
    fn yes(predicate: &'static str) -> Self {
        ClassificationReport { predicate, verdict: true, witness: None }
    }

    fn no(predicate: &'static str, witness: Witness) -> Self {
        ClassificationReport { predicate, verdict: false, witness: Some(witness) }
    }
}

/// Proper: not the whole powerset. The witness for `false` is the ground set
/// itself, the member a proper ideal must not have.
pub fn check_proper(i: &Ideal) -> ClassificationReport {
    if i.is_proper() {
        ClassificationReport::yes("proper_ideal")
    } else {
        ClassificationReport::no("proper_ideal", Witness::Set(i.ground().full()))
    }
}

pub fn is_proper(i: &Ideal) -> bool {
    i.is_proper()
}

/// Maximal: proper, and every subset or its complement is a member. The
/// negative witness is the first subset where both fail.
pub fn check_maximal_ideal(i: &Ideal) -> Result<ClassificationReport, ClassifyError> {
    if !i.is_proper() {
        return Err(ClassifyError::NotProper);
    }
    for a in i.ground().subsets() {
        if !i.contains(a) && !i.contains(a.complement()) {
            return Ok(ClassificationReport::no("maximal_ideal", Witness::Set(a)));
        }
    }
    Ok(ClassificationReport::yes("maximal_ideal"))
}

pub fn is_maximal_ideal(i: &Ideal) -> Result<bool, ClassifyError> {
    check_maximal_ideal(i).map(|r| r.verdict)
}

/// Minimal: proper, not trivial, and no smaller non-trivial ideal fits
/// inside; for principal ideals that is a singleton generator. The negative
/// witness is a pair of distinct non-empty members.
pub fn check_minimal_ideal(i: &Ideal) -> Result<ClassificationReport, ClassifyError> {
    if !i.is_proper() || i.generator().is_empty() {
        return Err(ClassifyError::NotEligible);
    }
    if i.generator().len() == 1 {
        return Ok(ClassificationReport::yes("minimal_ideal"));
    }
    let mut nonempty = i.family().iter().filter(|m| !m.is_empty() && m.len() == 1);
    let a = nonempty.next().expect("a non-singleton generator has singleton members");
    let b = nonempty.next().expect("a non-singleton generator has two singleton members");
    Ok(ClassificationReport::no("minimal_ideal", Witness::Pair(a, b)))
}

pub fn is_minimal_ideal(i: &Ideal) -> Result<bool, ClassifyError> {
    check_minimal_ideal(i).map(|r| r.verdict)
}

/// Faithful: the family's annihilator is trivial, i.e. its members cover the
/// ground set. The negative witness is a non-empty set disjoint from every
/// member (the annihilator's generator).
pub fn check_faithful(j: &SetFamily) -> ClassificationReport {
    let uncovered = j.union_of_members().complement();
    if uncovered.is_empty() {
        ClassificationReport::yes("faithful")
    } else {
        ClassificationReport::no("faithful", Witness::Set(uncovered))
    }
}

pub fn is_faithful(j: &SetFamily) -> bool {
    check_faithful(j).verdict
}

/// Hayashi-Samuel space: the topology and the ideal share only the empty
/// set. The negative witness is the first non-empty open lying in the ideal.
pub fn check_hayashi_samuel(space: &IdealSpace) -> ClassificationReport {
    for u in space.topology().opens() {
        if !u.is_empty() && space.ideal().contains(u) {
            return ClassificationReport::no("hayashi_samuel", Witness::Set(u));
        }
    }
    ClassificationReport::yes("hayashi_samuel")
}

pub fn is_hayashi_samuel(space: &IdealSpace) -> bool {
    check_hayashi_samuel(space).verdict
}

/// Dense: the closure of `a` is the whole space. The negative witness is the
/// non-empty open region `a` never reaches.
pub fn check_dense(topology: &Topology, a: Subset) -> ClassificationReport {
    let missed = topology.closure(a).complement();
    if missed.is_empty() {
        ClassificationReport::yes("dense")
    } else {
        ClassificationReport::no("dense", Witness::Set(missed))
    }
}

pub fn is_dense(topology: &Topology, a: Subset) -> bool {
    check_dense(topology, a).verdict
}

/// T0: distinct points have distinct minimal neighborhoods. The negative
/// witness is a pair of inseparable singletons.
pub fn check_t0(topology: &Topology) -> ClassificationReport {
    let n = topology.ground().size();
    for x in 0..n {
        for y in x + 1..n {
            if topology.min_nbhd(x) == topology.min_nbhd(y) {
                return ClassificationReport::no(
                    "t0",
                    Witness::Pair(topology.ground().singleton(x), topology.ground().singleton(y)),
                );
            }
        }
    }
    ClassificationReport::yes("t0")
}

pub fn is_t0(topology: &Topology) -> bool {
    check_t0(topology).verdict
}

/// Hausdorff: distinct points have disjoint minimal neighborhoods (on a
/// finite space that forces the discrete topology). The negative witness is
/// a pair of singletons whose minimal neighborhoods overlap.
pub fn check_hausdorff(topology: &Topology) -> ClassificationReport {
    let n = topology.ground().size();
    for x in 0..n {
        for y in x + 1..n {
            if topology.min_nbhd(x).meets(topology.min_nbhd(y)) {
                return ClassificationReport::no(
                    "hausdorff",
                    Witness::Pair(topology.ground().singleton(x), topology.ground().singleton(y)),
                );
            }
        }
    }
    ClassificationReport::yes("hausdorff")
}

pub fn is_hausdorff(topology: &Topology) -> bool {
    check_hausdorff(topology).verdict
}

/// The clopen members, in canonical order. Always contains the empty and
/// full sets.
pub fn clopen_sets(topology: &Topology) -> SetFamily {
    let members = topology
        .opens()
        .filter(|u| topology.is_open(u.complement()))
        .collect();
    SetFamily::new(topology.ground().clone(), members)
}

/// Connected: no clopen set besides the empty and full ones. The negative
/// witness is the first proper clopen.
pub fn check_connected(topology: &Topology) -> ClassificationReport {
    for u in clopen_sets(topology).iter() {
        if !u.is_empty() && !u.is_full() {
            return ClassificationReport::no("connected", Witness::Set(u));
        }
    }
    ClassificationReport::yes("connected")
}

pub fn is_connected(topology: &Topology) -> bool {
    check_connected(topology).verdict
}
