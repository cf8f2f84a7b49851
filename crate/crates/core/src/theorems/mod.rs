//! Executable registry of the library's claims, checked by brute force over
//! every space up to a small ground size, plus a counterexample search for
//! implications that are expected to fail.
//!
//! Each entry couples a claim with a quantifier plan: the shape of object
//! tuple it ranges over (space and subset, ideal and family, two spaces and
//! a map, and so on). [`run_theorem`] sweeps the full grid at one ground
//! size and reports either `Verified` with the instance count or the first
//! `Counterexample` in grid order. Grids are split across worker threads;
//! the lowest failing index wins regardless of completion order, so outcomes
//! are reproducible. Sampled mode draws instances from a seeded generator
//! instead, for sizes where the grid is too large to sweep.
//!
//! [`falsify`] takes two registered predicates over the same plan and hunts
//! for an instance where the first holds and the second fails, scanning
//! ground sizes 1 through the bound. Failure to find one is reported as
//! `Exhausted`, never as verification.
//!
//! Counterexamples are serialized in the text format of [`crate::format`]
//! under fixed binding names (sets `A` and `B`, families `J`, `K`, and
//! `I2`, map `f` with codomain space `other`), so any reported instance can
//! be parsed back and re-checked with [`recheck_document`] or
//! [`replay_implication`].

mod registry;

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::continuity::{self, FiniteMap};
use crate::enumerate;
use crate::family::SetFamily;
use crate::format::{self, SpaceDocument};
use crate::ground::{GroundSet, Subset};
use crate::ideal::Ideal;
use crate::operators;
use crate::space::IdealSpace;
use crate::topology::Topology;

use registry::TheoremCase;

/// Largest ground size any entry sweeps exhaustively. Individual entries
/// whose grids grow faster declare a smaller cap.
pub const EXHAUSTIVE_CAP: usize = 4;

/// Largest ground size accepted in any mode.
pub const SAMPLED_CAP: usize = 5;

/// How instances are drawn from the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Sweep the whole grid in index order.
    Exhaustive,
    /// Check `samples` instances drawn uniformly, with replacement, from a
    /// generator seeded by the `seed` argument.
    Sampled { samples: u64 },
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled { .. } => "sampled",
        }
    }
}

/// What a search found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchStatus {
    /// Every checked instance passed; `instances` is how many were checked.
    Verified { instances: u128 },
    /// The first failing instance in scan order. `document` is its
    /// serialization in the text space format and `note` says which part of
    /// the claim broke.
    Counterexample { index: u128, note: String, document: String },
    /// The budget ran out before the scan finished; nothing was found.
    Exhausted,
}

/// Outcome of one search run. Identical `(id, bound, mode, seed)` inputs
/// produce identical outcomes apart from `elapsed`.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub id: String,
    pub bound: usize,
    pub status: SearchStatus,
    /// Instances examined: the full grid (or sample) when nothing was
    /// found, or the failing index plus one.
    pub examined: u128,
    pub seed: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("unknown claim id `{0}`")]
    UnknownTheorem(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicates `{0}` and `{1}` quantify over different instance shapes")]
    MismatchedDomains(String, String),
    #[error("`{id}` accepts ground sizes 1..={cap} in {mode} mode, got {requested}")]
    CapExceeded { id: String, requested: usize, cap: usize, mode: &'static str },
    #[error("document does not carry the bindings this claim needs: {0}")]
    BadDocument(String),
}

/// Public description of one registry entry.
#[derive(Debug, Clone, Copy)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub title: &'static str,
    /// Ground size at which the entry is normally verified.
    pub declared_bound: usize,
    pub max_exhaustive: usize,
    pub max_bound: usize,
    /// True for demonstration entries that are supposed to produce a
    /// counterexample.
    pub expected_failure: bool,
}

/// Every registry entry, in id order.
pub fn theorems() -> Vec<TheoremInfo> {
    registry::CASES.iter().map(info).collect()
}

/// One entry by id.
pub fn theorem(id: &str) -> Option<TheoremInfo> {
    registry::find(id).map(info)
}

fn info(case: &TheoremCase) -> TheoremInfo {
    TheoremInfo {
        id: case.id,
        title: case.title,
        declared_bound: case.declared_bound,
        max_exhaustive: case.max_exhaustive,
        max_bound: case.max_bound,
        expected_failure: case.expected_failure,
    }
}

/// Public description of one falsification predicate.
#[derive(Debug, Clone, Copy)]
pub struct PredicateInfo {
    pub name: &'static str,
    pub about: &'static str,
    /// Human summary of the instance shape the predicate ranges over.
    pub domain: &'static str,
}

/// Every registered predicate.
pub fn predicates() -> Vec<PredicateInfo> {
    PREDICATES
        .iter()
        .map(|p| PredicateInfo { name: p.name, about: p.about, domain: p.plan.summary() })
        .collect()
}

/// The shape of object tuple a claim or predicate quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Plan {
    /// (topology, ideal, set A)
    SpaceSet,
    /// (topology, ideal, set A, set B)
    SpaceSetPair,
    /// (topology, ideal)
    Space,
    /// (topology, set A)
    TopologySet,
    /// (topology, ideal, second ideal K, set A)
    SpaceIdealPair,
    /// (ideal)
    IdealOnly,
    /// (ideal, family J)
    IdealFamily,
    /// (ideal, family J, family K)
    IdealFamilyPair,
    /// (ideal, second ideal I2, family J)
    IdealPairFamily,
    /// (topology, ideal, codomain topology sigma, map f)
    MapSpaces,
    /// A claim with no finite instances; sweeps are empty and verify
    /// vacuously.
    NoFiniteInstances,
}

impl Plan {
    fn summary(self) -> &'static str {
        match self {
            Plan::SpaceSet => "topology + ideal + set A",
            Plan::SpaceSetPair => "topology + ideal + sets A, B",
            Plan::Space => "topology + ideal",
            Plan::TopologySet => "topology + set A",
            Plan::SpaceIdealPair => "topology + ideal + ideal K + set A",
            Plan::IdealOnly => "ideal",
            Plan::IdealFamily => "ideal + family J",
            Plan::IdealFamilyPair => "ideal + families J, K",
            Plan::IdealPairFamily => "ideal + ideal I2 + family J",
            Plan::MapSpaces => "topology + ideal + topology sigma + map f",
            Plan::NoFiniteInstances => "nothing (no finite instances)",
        }
    }

    fn needs_maps(self) -> bool {
        self == Plan::MapSpaces
    }

    /// Largest bound `falsify` sweeps for this shape.
    fn falsify_cap(self) -> usize {
        match self {
            Plan::MapSpaces | Plan::IdealFamilyPair => 3,
            _ => EXHAUSTIVE_CAP,
        }
    }

    fn total(self, ctx: &SizeCtx) -> u128 {
        let n = ctx.ground.size();
        let t = ctx.topologies.len() as u128;
        let i = ctx.ideals.len() as u128;
        let s = 1u128 << n;
        let fam = 1u128 << (1u32 << n);
        match self {
            Plan::SpaceSet => t * i * s,
            Plan::SpaceSetPair => t * i * s * s,
            Plan::Space => t * i,
            Plan::TopologySet => t * s,
            Plan::SpaceIdealPair => t * i * i * s,
            Plan::IdealOnly => i,
            Plan::IdealFamily => i * fam,
            Plan::IdealFamilyPair => i * fam * fam,
            Plan::IdealPairFamily => i * i * fam,
            Plan::MapSpaces => t * i * t * (n as u128).pow(n as u32),
            Plan::NoFiniteInstances => 0,
        }
    }

    /// Instance at `index` in the grid. Components later in the tuple vary
    /// fastest; the first topology and ideal come from the enumeration
    /// order of [`crate::enumerate`].
    fn decode(self, ctx: &SizeCtx, index: u128) -> Instance {
        let n = ctx.ground.size();
        let mut radix = Radix { index };
        let s = 1u128 << n;
        let fam = 1u128 << (1u32 << n);
        match self {
            Plan::SpaceSet => {
                let a = radix.subset(ctx, s);
                let space = radix.space(ctx);
                Instance::SpaceSet { space, a }
            }
            Plan::SpaceSetPair => {
                let b = radix.subset(ctx, s);
                let a = radix.subset(ctx, s);
                let space = radix.space(ctx);
                Instance::SpaceSetPair { space, a, b }
            }
            Plan::Space => Instance::Space { space: radix.space(ctx) },
            Plan::TopologySet => {
                let a = radix.subset(ctx, s);
                let topology = ctx.topologies[radix.digit(ctx.topologies.len() as u128)].clone();
                Instance::TopologySet { topology, a }
            }
            Plan::SpaceIdealPair => {
                let a = radix.subset(ctx, s);
                let k = ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone();
                let space = radix.space(ctx);
                Instance::SpaceIdealPair { space, k, a }
            }
            Plan::IdealOnly => {
                Instance::IdealOnly { i: ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone() }
            }
            Plan::IdealFamily => {
                let j = radix.family(ctx, fam);
                let i = ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone();
                Instance::IdealFamily { i, j }
            }
            Plan::IdealFamilyPair => {
                let k = radix.family(ctx, fam);
                let j = radix.family(ctx, fam);
                let i = ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone();
                Instance::IdealFamilyPair { i, j, k }
            }
            Plan::IdealPairFamily => {
                let j = radix.family(ctx, fam);
                let i2 = ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone();
                let i = ctx.ideals[radix.digit(ctx.ideals.len() as u128)].clone();
                Instance::IdealPairFamily { i, i2, j }
            }
            Plan::MapSpaces => {
                let mut code = radix.digit((n as u128).pow(n as u32));
                let image: Vec<usize> = (0..n)
                    .map(|_| {
                        let y = code % n;
                        code /= n;
                        y
                    })
                    .collect();
                let f = FiniteMap::new(ctx.ground.clone(), ctx.codomain.clone(), image)
                    .expect("decoded digits are in range");
                let sigma =
                    ctx.codomain_topologies[radix.digit(ctx.codomain_topologies.len() as u128)].clone();
                let space = radix.space(ctx);
                Instance::MapSpaces { space, sigma, f }
            }
            Plan::NoFiniteInstances => unreachable!("empty plans are never decoded"),
        }
    }
}

struct Radix {
    index: u128,
}

impl Radix {
    fn digit(&mut self, base: u128) -> usize {
        let d = self.index % base;
        self.index /= base;
        d as usize
    }

    fn subset(&mut self, ctx: &SizeCtx, s: u128) -> Subset {
        let bits = self.digit(s) as u16;
        ctx.ground.subset_from_bits(bits).expect("digit is within the powerset")
    }

    fn family(&mut self, ctx: &SizeCtx, fam: u128) -> SetFamily {
        SetFamily::from_mask(ctx.ground.clone(), self.digit(fam) as u64)
    }

    /// Ideal digit, then topology digit.
    fn space(&mut self, ctx: &SizeCtx) -> IdealSpace {
        let ideal = ctx.ideals[self.digit(ctx.ideals.len() as u128)].clone();
        let topology = ctx.topologies[self.digit(ctx.topologies.len() as u128)].clone();
        IdealSpace::new(topology, ideal).expect("enumeration shares one ground set")
    }
}

/// Everything enumerable at one ground size.
pub(crate) struct SizeCtx {
    ground: Arc<GroundSet>,
    topologies: Vec<Topology>,
    ideals: Vec<Ideal>,
    /// Fresh labels for map codomains, so documents can carry a second
    /// topology without clashing with the primary ground set.
    codomain: Arc<GroundSet>,
    codomain_topologies: Vec<Topology>,
}

const CODOMAIN_LABELS: [&str; 5] = ["p", "q", "r", "s", "t"];

impl SizeCtx {
    fn new(n: usize, with_maps: bool) -> SizeCtx {
        assert!((1..=SAMPLED_CAP).contains(&n), "caller checks caps first");
        let ground = GroundSet::with_size(n).expect("size within the ground cap");
        let topologies = enumerate::enumerate_topologies(&ground);
        let ideals = enumerate::enumerate_ideals(&ground);
        let codomain = GroundSet::new(CODOMAIN_LABELS[..n].iter().copied())
            .expect("fresh labels are valid");
        let codomain_topologies = if with_maps {
            topologies.iter().map(|t| relabel(t, &codomain)).collect()
        } else {
            Vec::new()
        };
        SizeCtx { ground, topologies, ideals, codomain, codomain_topologies }
    }
}

/// The same family of opens over a ground set with different labels.
fn relabel(t: &Topology, ground: &Arc<GroundSet>) -> Topology {
    let members = t
        .opens()
        .map(|s| ground.subset_from_bits(s.bits()).expect("grounds have equal size"))
        .collect();
    Topology::validate(SetFamily::new(ground.clone(), members))
        .expect("the axioms do not depend on labels")
}

/// One point of a quantifier grid.
#[derive(Debug, Clone)]
pub(crate) enum Instance {
    SpaceSet { space: IdealSpace, a: Subset },
    SpaceSetPair { space: IdealSpace, a: Subset, b: Subset },
    Space { space: IdealSpace },
    TopologySet { topology: Topology, a: Subset },
    SpaceIdealPair { space: IdealSpace, k: Ideal, a: Subset },
    IdealOnly { i: Ideal },
    IdealFamily { i: Ideal, j: SetFamily },
    IdealFamilyPair { i: Ideal, j: SetFamily, k: SetFamily },
    IdealPairFamily { i: Ideal, i2: Ideal, j: SetFamily },
    MapSpaces { space: IdealSpace, sigma: Topology, f: FiniteMap },
}

impl Instance {
    pub(crate) fn space_set(&self) -> (&IdealSpace, Subset) {
        match self {
            Instance::SpaceSet { space, a } => (space, *a),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn space_set_pair(&self) -> (&IdealSpace, Subset, Subset) {
        match self {
            Instance::SpaceSetPair { space, a, b } => (space, *a, *b),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn space_only(&self) -> &IdealSpace {
        match self {
            Instance::Space { space } => space,
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn topology_set(&self) -> (&Topology, Subset) {
        match self {
            Instance::TopologySet { topology, a } => (topology, *a),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn space_ideal_pair(&self) -> (&IdealSpace, &Ideal, Subset) {
        match self {
            Instance::SpaceIdealPair { space, k, a } => (space, k, *a),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn ideal_only(&self) -> &Ideal {
        match self {
            Instance::IdealOnly { i } => i,
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn ideal_family(&self) -> (&Ideal, &SetFamily) {
        match self {
            Instance::IdealFamily { i, j } => (i, j),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn ideal_family_pair(&self) -> (&Ideal, &SetFamily, &SetFamily) {
        match self {
            Instance::IdealFamilyPair { i, j, k } => (i, j, k),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn ideal_pair_family(&self) -> (&Ideal, &Ideal, &SetFamily) {
        match self {
            Instance::IdealPairFamily { i, i2, j } => (i, i2, j),
            _ => unreachable!("checker ran off its plan"),
        }
    }

    pub(crate) fn map_spaces(&self) -> (&IdealSpace, &Topology, &FiniteMap) {
        match self {
            Instance::MapSpaces { space, sigma, f } => (space, sigma, f),
            _ => unreachable!("checker ran off its plan"),
        }
    }
}

/// Serialize an instance under the fixed binding names.
fn instance_document(inst: &Instance) -> SpaceDocument {
    match inst {
        Instance::SpaceSet { space, a } => {
            let mut doc = space_document(space);
            doc.sets.insert("A".into(), *a);
            doc
        }
        Instance::SpaceSetPair { space, a, b } => {
            let mut doc = space_document(space);
            doc.sets.insert("A".into(), *a);
            doc.sets.insert("B".into(), *b);
            doc
        }
        Instance::Space { space } => space_document(space),
        Instance::TopologySet { topology, a } => {
            let mut doc = SpaceDocument::over(topology.ground().clone());
            doc.topology = Some(topology.clone());
            doc.sets.insert("A".into(), *a);
            doc
        }
        Instance::SpaceIdealPair { space, k, a } => {
            let mut doc = space_document(space);
            doc.families.insert("K".into(), k.family().clone());
            doc.sets.insert("A".into(), *a);
            doc
        }
        Instance::IdealOnly { i } => {
            let mut doc = SpaceDocument::over(i.ground().clone());
            doc.ideal = Some(i.clone());
            doc
        }
        Instance::IdealFamily { i, j } => {
            let mut doc = SpaceDocument::over(i.ground().clone());
            doc.ideal = Some(i.clone());
            doc.families.insert("J".into(), j.clone());
            doc
        }
        Instance::IdealFamilyPair { i, j, k } => {
            let mut doc = SpaceDocument::over(i.ground().clone());
            doc.ideal = Some(i.clone());
            doc.families.insert("J".into(), j.clone());
            doc.families.insert("K".into(), k.clone());
            doc
        }
        Instance::IdealPairFamily { i, i2, j } => {
            let mut doc = SpaceDocument::over(i.ground().clone());
            doc.ideal = Some(i.clone());
            doc.families.insert("I2".into(), i2.family().clone());
            doc.families.insert("J".into(), j.clone());
            doc
        }
        Instance::MapSpaces { space, sigma, f } => {
            let mut doc = space_document(space);
            doc.aux.insert(
                "other".into(),
                format::AuxSpace { ground: f.codomain().clone(), topology: Some(sigma.clone()) },
            );
            doc.maps.insert("f".into(), f.clone());
            doc
        }
    }
}

fn space_document(space: &IdealSpace) -> SpaceDocument {
    let mut doc = SpaceDocument::over(space.ground().clone());
    doc.topology = Some(space.topology().clone());
    doc.ideal = Some(space.ideal().clone());
    doc
}

/// Rebuild an instance from a parsed document, for replaying counterexamples.
fn document_instance(plan: Plan, doc: &SpaceDocument) -> Result<Instance, TheoremError> {
    let bad = |msg: &str| TheoremError::BadDocument(msg.into());
    let space = |doc: &SpaceDocument| doc.space().map_err(TheoremError::BadDocument);
    let set = |name: &str| {
        doc.sets.get(name).copied().ok_or_else(|| bad(&format!("no `set {name}:` line")))
    };
    let family = |name: &str| {
        doc.families.get(name).cloned().ok_or_else(|| bad(&format!("no `family {name}:` line")))
    };
    let ideal = |doc: &SpaceDocument| {
        doc.ideal.clone().ok_or_else(|| bad("no `ideal:` line"))
    };
    let ideal_from_family = |name: &str| {
        family(name).and_then(|f| {
            Ideal::validate(f).map_err(|v| {
                bad(&format!("family {name} is not an ideal: {}", format::ideal_violation_to_string(&doc.ground, &v)))
            })
        })
    };
    Ok(match plan {
        Plan::SpaceSet => Instance::SpaceSet { space: space(doc)?, a: set("A")? },
        Plan::SpaceSetPair => {
            Instance::SpaceSetPair { space: space(doc)?, a: set("A")?, b: set("B")? }
        }
        Plan::Space => Instance::Space { space: space(doc)? },
        Plan::TopologySet => Instance::TopologySet {
            topology: doc.topology.clone().ok_or_else(|| bad("no `topology:` line"))?,
            a: set("A")?,
        },
        Plan::SpaceIdealPair => Instance::SpaceIdealPair {
            space: space(doc)?,
            k: ideal_from_family("K")?,
            a: set("A")?,
        },
        Plan::IdealOnly => Instance::IdealOnly { i: ideal(doc)? },
        Plan::IdealFamily => Instance::IdealFamily { i: ideal(doc)?, j: family("J")? },
        Plan::IdealFamilyPair => {
            Instance::IdealFamilyPair { i: ideal(doc)?, j: family("J")?, k: family("K")? }
        }
        Plan::IdealPairFamily => Instance::IdealPairFamily {
            i: ideal(doc)?,
            i2: ideal_from_family("I2")?,
            j: family("J")?,
        },
        Plan::MapSpaces => {
            let f = doc.maps.get("f").cloned().ok_or_else(|| bad("no `map f -> other:` line"))?;
            let aux = doc.aux.get("other").ok_or_else(|| bad("no `elements other:` line"))?;
            if &aux.ground != f.codomain() {
                return Err(bad("map f does not land in the `other` space"));
            }
            let sigma =
                aux.topology.clone().ok_or_else(|| bad("no `topology other:` line"))?;
            Instance::MapSpaces { space: space(doc)?, sigma, f }
        }
        Plan::NoFiniteInstances => return Err(bad("this claim has no finite instances")),
    })
}

/// Run one registry entry at ground size `bound`.
pub fn run_theorem(id: &str, bound: usize, mode: Mode, seed: u64) -> Result<SearchOutcome, TheoremError> {
    let case = registry::find(id).ok_or_else(|| TheoremError::UnknownTheorem(id.into()))?;
    let cap = match mode {
        Mode::Exhaustive => case.max_exhaustive,
        Mode::Sampled { .. } => case.max_bound,
    };
    if bound == 0 || bound > cap {
        return Err(TheoremError::CapExceeded {
            id: case.id.into(),
            requested: bound,
            cap,
            mode: mode.name(),
        });
    }
    let started = Instant::now();
    let ctx = SizeCtx::new(bound, case.plan.needs_maps());
    let total = case.plan.total(&ctx);
    let (status, examined) = match mode {
        Mode::Exhaustive => {
            match scan(case.plan, &ctx, total, |inst| (case.check)(inst).is_err()) {
                None => (SearchStatus::Verified { instances: total }, total),
                Some((index, inst)) => (counterexample(case, index, &inst), index + 1),
            }
        }
        Mode::Sampled { .. } if total == 0 => (SearchStatus::Verified { instances: 0 }, 0),
        Mode::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let indices: Vec<u128> = (0..samples).map(|_| rng.gen_range(0..total)).collect();
            let hit = indices
                .par_iter()
                .enumerate()
                .find_first(|&(_, &index)| (case.check)(&case.plan.decode(&ctx, index)).is_err());
            match hit {
                None => (SearchStatus::Verified { instances: samples as u128 }, samples as u128),
                Some((pos, &index)) => {
                    let inst = case.plan.decode(&ctx, index);
                    (counterexample(case, index, &inst), pos as u128 + 1)
                }
            }
        }
    };
    Ok(SearchOutcome {
        id: case.id.into(),
        bound,
        status,
        examined,
        seed,
        elapsed: started.elapsed(),
    })
}

fn counterexample(case: &TheoremCase, index: u128, inst: &Instance) -> SearchStatus {
    let note = (case.check)(inst).expect_err("checkers are deterministic");
    let document = format::print_space(&instance_document(inst));
    SearchStatus::Counterexample { index, note, document }
}

/// First grid index below `limit` whose instance satisfies `fails`, with the
/// instance itself. Work is parallel; the lowest index wins.
fn scan<F>(plan: Plan, ctx: &SizeCtx, limit: u128, fails: F) -> Option<(u128, Instance)>
where
    F: Fn(&Instance) -> bool + Sync,
{
    if limit == 0 {
        return None;
    }
    let limit = u64::try_from(limit).expect("exhaustive caps keep grids within u64");
    let hit = (0..limit)
        .into_par_iter()
        .find_first(|&index| fails(&plan.decode(ctx, index as u128)))?;
    Some((hit as u128, plan.decode(ctx, hit as u128)))
}

/// Re-run a registry entry's checker on a parsed document. `Ok(Ok(()))`
/// means the instance passes; `Ok(Err(note))` means it still fails.
pub fn recheck_document(id: &str, doc: &SpaceDocument) -> Result<Result<(), String>, TheoremError> {
    let case = registry::find(id).ok_or_else(|| TheoremError::UnknownTheorem(id.into()))?;
    let inst = document_instance(case.plan, doc)?;
    Ok((case.check)(&inst))
}

struct Predicate {
    name: &'static str,
    about: &'static str,
    plan: Plan,
    eval: fn(&Instance) -> bool,
}

static PREDICATES: &[Predicate] = &[
    Predicate {
        name: "tau_open",
        about: "A is open in tau",
        plan: Plan::SpaceSet,
        eval: |inst| {
            let (space, a) = inst.space_set();
            space.topology().is_open(a)
        },
    },
    Predicate {
        name: "tau_star_open",
        about: "A is open in the star topology",
        plan: Plan::SpaceSet,
        eval: |inst| {
            let (space, a) = inst.space_set();
            operators::tau_star(space).is_open(a)
        },
    },
    Predicate {
        name: "tau_sharp_open",
        about: "A is open in the sharp topology",
        plan: Plan::SpaceSet,
        eval: |inst| {
            let (space, a) = inst.space_set();
            operators::tau_sharp(space).is_open(a)
        },
    },
    Predicate {
        name: "continuous",
        about: "preimages of sigma-opens are tau-open",
        plan: Plan::MapSpaces,
        eval: |inst| {
            let (space, sigma, f) = inst.map_spaces();
            continuity::is_continuous(f, space.topology(), sigma)
                .expect("instances are built over matching grounds")
        },
    },
    Predicate {
        name: "star_continuous",
        about: "preimages of sigma-opens are open in the star topology",
        plan: Plan::MapSpaces,
        eval: |inst| {
            let (space, sigma, f) = inst.map_spaces();
            continuity::is_star_continuous(f, space, sigma)
                .expect("instances are built over matching grounds")
        },
    },
    Predicate {
        name: "sharp_continuous",
        about: "preimages of sigma-opens are open in the sharp topology",
        plan: Plan::MapSpaces,
        eval: |inst| {
            let (space, sigma, f) = inst.map_spaces();
            continuity::is_sharp_continuous(f, space, sigma)
                .expect("instances are built over matching grounds")
        },
    },
    Predicate {
        name: "quot_antitone",
        about: "(I:K) is a subfamily of (I:J)",
        plan: Plan::IdealFamilyPair,
        eval: |inst| {
            let (i, j, k) = inst.ideal_family_pair();
            operators::ideal_quotient(i, k)
                .family()
                .is_subfamily_of(operators::ideal_quotient(i, j).family())
        },
    },
    Predicate {
        name: "subfamily",
        about: "J is a subfamily of K",
        plan: Plan::IdealFamilyPair,
        eval: |inst| {
            let (_, j, k) = inst.ideal_family_pair();
            j.is_subfamily_of(k)
        },
    },
    Predicate {
        name: "quot_equals_ideal",
        about: "(I:J) equals I",
        plan: Plan::IdealFamily,
        eval: |inst| {
            let (i, j) = inst.ideal_family();
            operators::ideal_quotient(i, j) == *i
        },
    },
    Predicate {
        name: "family_contains_full",
        about: "J contains the full set X",
        plan: Plan::IdealFamily,
        eval: |inst| {
            let (i, j) = inst.ideal_family();
            j.contains(i.ground().full())
        },
    },
];

fn find_predicate(name: &str) -> Result<&'static Predicate, TheoremError> {
    PREDICATES
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| TheoremError::UnknownPredicate(name.into()))
}

/// Hunt for an instance where `antecedent` holds and `consequent` fails,
/// sweeping ground sizes 1..=bound in grid order. `budget` caps the total
/// number of instances examined. The reported index counts across sizes.
pub fn falsify(
    antecedent: &str,
    consequent: &str,
    bound: usize,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome, TheoremError> {
    let ant = find_predicate(antecedent)?;
    let con = find_predicate(consequent)?;
    if ant.plan != con.plan {
        return Err(TheoremError::MismatchedDomains(ant.name.into(), con.name.into()));
    }
    let id = format!("{}=>{}", ant.name, con.name);
    let cap = ant.plan.falsify_cap();
    if bound == 0 || bound > cap {
        return Err(TheoremError::CapExceeded { id, requested: bound, cap, mode: "falsify" });
    }
    let started = Instant::now();
    let budget = budget as u128;
    let mut examined: u128 = 0;
    for n in 1..=bound {
        if examined >= budget {
            break;
        }
        let ctx = SizeCtx::new(n, ant.plan.needs_maps());
        let total = ant.plan.total(&ctx);
        let limit = total.min(budget - examined);
        let hit = scan(ant.plan, &ctx, limit, |inst| (ant.eval)(inst) && !(con.eval)(inst));
        if let Some((index, inst)) = hit {
            let note = format!("`{}` holds but `{}` fails", ant.name, con.name);
            let document = format::print_space(&instance_document(&inst));
            return Ok(SearchOutcome {
                id,
                bound,
                status: SearchStatus::Counterexample { index: examined + index, note, document },
                examined: examined + index + 1,
                seed,
                elapsed: started.elapsed(),
            });
        }
        examined += limit;
        if limit < total {
            break;
        }
    }
    Ok(SearchOutcome {
        id,
        bound,
        status: SearchStatus::Exhausted,
        examined,
        seed,
        elapsed: started.elapsed(),
    })
}

/// Evaluate an implication pair on a parsed document. `Ok(true)` means the
/// document is (still) a counterexample: the antecedent holds and the
/// consequent fails.
pub fn replay_implication(
    antecedent: &str,
    consequent: &str,
    doc: &SpaceDocument,
) -> Result<bool, TheoremError> {
    let ant = find_predicate(antecedent)?;
    let con = find_predicate(consequent)?;
    if ant.plan != con.plan {
        return Err(TheoremError::MismatchedDomains(ant.name.into(), con.name.into()));
    }
    let inst = document_instance(ant.plan, doc)?;
    Ok((ant.eval)(&inst) && !(con.eval)(&inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_space;

    #[test]
    fn exhaustive_runs_are_deterministic() {
        let a = run_theorem("T15", 2, Mode::Exhaustive, 7).unwrap();
        let b = run_theorem("T15", 2, Mode::Exhaustive, 7).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.examined, b.examined);
        assert_eq!(a.status, SearchStatus::Verified { instances: 4 * 4 * 4 });
    }

    #[test]
    fn sampled_runs_repeat_with_the_same_seed() {
        let a = run_theorem("T2", 4, Mode::Sampled { samples: 500 }, 99).unwrap();
        let b = run_theorem("T2", 4, Mode::Sampled { samples: 500 }, 99).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.examined, b.examined);
        assert_eq!(a.status, SearchStatus::Verified { instances: 500 });
    }

    #[test]
    fn caps_and_unknown_ids_are_rejected() {
        assert!(matches!(
            run_theorem("T9", 4, Mode::Exhaustive, 0),
            Err(TheoremError::CapExceeded { cap: 3, .. })
        ));
        assert!(matches!(
            run_theorem("T1", 0, Mode::Exhaustive, 0),
            Err(TheoremError::CapExceeded { .. })
        ));
        assert!(matches!(
            run_theorem("nope", 2, Mode::Exhaustive, 0),
            Err(TheoremError::UnknownTheorem(_))
        ));
        assert!(matches!(
            falsify("tau_open", "nope", 2, 100, 0),
            Err(TheoremError::UnknownPredicate(_))
        ));
        assert!(matches!(
            falsify("tau_open", "continuous", 2, 100, 0),
            Err(TheoremError::MismatchedDomains(_, _))
        ));
    }

    #[test]
    fn falsify_finds_and_replays_a_star_open_witness() {
        let outcome = falsify("tau_star_open", "tau_open", 3, u64::MAX, 0).unwrap();
        let SearchStatus::Counterexample { index, document, .. } = &outcome.status else {
            panic!("expected a counterexample, got {:?}", outcome.status);
        };
        assert_eq!(outcome.examined, index + 1);
        let doc = parse_space(document).unwrap();
        assert!(replay_implication("tau_star_open", "tau_open", &doc).unwrap());
        assert!(!replay_implication("tau_open", "tau_star_open", &doc).unwrap());
    }

    #[test]
    fn falsify_budget_exhausts_deterministically() {
        let outcome = falsify("tau_star_open", "tau_open", 3, 1, 0).unwrap();
        assert_eq!(outcome.status, SearchStatus::Exhausted);
        assert_eq!(outcome.examined, 1);
    }

    #[test]
    fn map_documents_round_trip_through_replay() {
        let outcome = falsify("sharp_continuous", "continuous", 3, u64::MAX, 0).unwrap();
        let SearchStatus::Counterexample { document, .. } = &outcome.status else {
            panic!("expected a counterexample, got {:?}", outcome.status);
        };
        let doc = parse_space(document).unwrap();
        assert!(replay_implication("sharp_continuous", "continuous", &doc).unwrap());
    }

    #[test]
    fn outcomes_serialize_to_json() {
        let outcome = run_theorem("T15", 2, Mode::Exhaustive, 0).unwrap();
        let json = serde_json::to_string(&outcome).unwrap();
        assert!(json.contains("\"status\":\"verified\""));
        assert!(json.contains("\"instances\":64"));
    }
}
