//! The claim catalogue. Each entry states one verifiable fact about the
//! operators as a total check over its quantifier plan: conditional claims
//! pass vacuously off their hypothesis, so a sweep visits every instance.
//!
//! Checkers return `Err` with a note naming the conjunct that broke, which
//! becomes the `note` of a counterexample report.

use super::{Instance, Plan};
use crate::classify;
use crate::family::SetFamily;
use crate::ideal::Ideal;
use crate::operators::{
    annihilator, cl_sharp, ideal_quotient, local_function, psi, psi_sharp, sharp_function,
    tau_sharp, tau_star,
};
use crate::reference;
use crate::space::IdealSpace;
use crate::topology::Topology;

pub(crate) struct TheoremCase {
    pub id: &'static str,
    pub title: &'static str,
    pub plan: Plan,
    /// Ground size at which the entry is normally verified.
    pub declared_bound: usize,
    pub max_exhaustive: usize,
    pub max_bound: usize,
    /// True for demonstration entries that are supposed to produce a
    /// counterexample.
    pub expected_failure: bool,
    pub check: fn(&Instance) -> Result<(), String>,
}

pub(crate) fn find(id: &str) -> Option<&'static TheoremCase> {
    CASES.iter().find(|c| c.id == id)
}

fn ensure(ok: bool, claim: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(claim.to_string())
    }
}

/// Maximality for the guarded checkers: improper ideals are simply not
/// maximal, without being an error.
fn maximal(i: &Ideal) -> bool {
    classify::is_maximal_ideal(i).unwrap_or(false)
}

fn minimal(i: &Ideal) -> bool {
    classify::is_minimal_ideal(i).unwrap_or(false)
}

fn ann_space(space: &IdealSpace) -> IdealSpace {
    space
        .with_ideal(annihilator(space.ideal().family()))
        .expect("the annihilator lives on the same ground")
}

fn with(space: &IdealSpace, ideal: &Ideal) -> IdealSpace {
    space.with_ideal(ideal.clone()).expect("instances share one ground")
}

fn t1_sharp_is_local_of_annihilator(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    let swapped = ann_space(space);
    ensure(
        sharp_function(space, a) == local_function(&swapped, a),
        "sharp(A) differs from the local function of A under the annihilator ideal",
    )?;
    ensure(
        psi_sharp(space, a) == psi(&swapped, a),
        "psi_sharp(A) differs from psi(A) under the annihilator ideal",
    )
}

fn t2_sharp_and_local_cover_closure(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    ensure(
        sharp_function(space, a).union(local_function(space, a)) == space.topology().closure(a),
        "sharp(A) and local(A) do not union to the closure of A",
    )
}

fn t3_degenerate_operands_collapse(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    let local = local_function(space, a);
    let sharp = sharp_function(space, a);
    let cl = space.topology().closure(a);
    if space.ideal().contains(a) {
        ensure(sharp == cl, "A in the ideal, but sharp(A) is not the closure")?;
    }
    if annihilator(space.ideal().family()).contains(a) {
        ensure(local == cl, "A in the annihilator, but local(A) is not the closure")?;
    }
    if sharp.is_empty() {
        ensure(local == cl, "sharp(A) empty, but local(A) is not the closure")?;
    }
    if local.is_empty() {
        ensure(sharp == cl, "local(A) empty, but sharp(A) is not the closure")?;
    }
    Ok(())
}

fn t4_sharp_function_laws(inst: &Instance) -> Result<(), String> {
    let (space, a, b) = inst.space_set_pair();
    let sa = sharp_function(space, a);
    let sb = sharp_function(space, b);
    let cl = |s| space.topology().closure(s);
    if a.is_subset_of(b) {
        ensure(sa.is_subset_of(sb), "A inside B, but sharp(A) not inside sharp(B)")?;
    }
    ensure(sa == cl(sa), "sharp(A) is not closed")?;
    ensure(sa.is_subset_of(cl(a)), "sharp(A) escapes the closure of A")?;
    ensure(
        sharp_function(space, a.intersect(b)).is_subset_of(sa.intersect(sb)),
        "sharp(A intersect B) escapes sharp(A) intersect sharp(B)",
    )?;
    ensure(
        sharp_function(space, a.union(b)) == sa.union(sb),
        "sharp(A union B) differs from sharp(A) union sharp(B)",
    )?;
    ensure(
        sa.minus(sb).is_subset_of(sharp_function(space, a.minus(b))),
        "sharp(A) minus sharp(B) escapes sharp(A minus B)",
    )?;
    if annihilator(space.ideal().family()).contains(a) {
        ensure(sa.is_empty(), "A in the annihilator, but sharp(A) is non-empty")?;
        ensure(
            sharp_function(space, b.union(a)) == sb,
            "A in the annihilator, but sharp(B union A) differs from sharp(B)",
        )?;
        ensure(
            sharp_function(space, b.minus(a)) == sb,
            "A in the annihilator, but sharp(B minus A) differs from sharp(B)",
        )?;
    }
    if classify::is_faithful(space.ideal().family()) {
        ensure(sa == cl(a), "faithful ideal, but sharp(A) is not the closure of A")?;
    }
    Ok(())
}

fn t5_cl_sharp_is_kuratowski(inst: &Instance) -> Result<(), String> {
    let (space, a, b) = inst.space_set_pair();
    let cl = |s| cl_sharp(space, s);
    let ground = space.ground();
    ensure(cl(ground.empty()).is_empty(), "cl_sharp(empty) is non-empty")?;
    ensure(cl(ground.full()).is_full(), "cl_sharp(X) is not X")?;
    ensure(a.is_subset_of(cl(a)), "A escapes cl_sharp(A)")?;
    if a.is_subset_of(b) {
        ensure(cl(a).is_subset_of(cl(b)), "A inside B, but cl_sharp(A) not inside cl_sharp(B)")?;
    }
    ensure(
        cl(a.union(b)) == cl(a).union(cl(b)),
        "cl_sharp(A union B) differs from cl_sharp(A) union cl_sharp(B)",
    )?;
    ensure(cl(cl(a)) == cl(a), "cl_sharp is not idempotent on A")
}

fn t6_local_function_splits_over_meets(inst: &Instance) -> Result<(), String> {
    let (space, k, a) = inst.space_ideal_pair();
    if space.ideal().contains(a) {
        ensure(
            local_function(space, a).is_empty(),
            "A in the ideal, but local(A) is non-empty",
        )?;
    }
    let meet_space = with(space, &space.ideal().meet(k));
    let k_space = with(space, k);
    ensure(
        local_function(&meet_space, a)
            == local_function(space, a).union(local_function(&k_space, a)),
        "local(A) over the meet of the ideals differs from the union of the local functions",
    )?;
    ensure(
        tau_star(&meet_space).family()
            == &tau_star(space).family().intersection_with(tau_star(&k_space).family()),
        "the star topology of the meet differs from the meet of the star topologies",
    )
}

fn t7_quotient_is_an_ideal_containing_i(inst: &Instance) -> Result<(), String> {
    let (i, j) = inst.ideal_family();
    let q = ideal_quotient(i, j);
    let scanned = reference::quotient_by_scan(i, j);
    ensure(
        q.family() == &scanned,
        "the closed-form quotient differs from the member-by-member scan",
    )?;
    ensure(Ideal::validate(scanned).is_ok(), "the quotient violates an ideal axiom")?;
    ensure(i.family().is_subfamily_of(q.family()), "I is not contained in (I:J)")
}

fn t8_quotient_is_full_iff_j_inside_i(inst: &Instance) -> Result<(), String> {
    let (i, j) = inst.ideal_family();
    let collapses = !ideal_quotient(i, j).is_proper();
    ensure(
        collapses == j.is_subfamily_of(i.family()),
        "(I:J) is the powerset exactly when J is inside I, and this instance disagrees",
    )
}

fn t9_quotient_is_antitone_in_j(inst: &Instance) -> Result<(), String> {
    let (i, j, k) = inst.ideal_family_pair();
    if j.is_subfamily_of(k) {
        ensure(
            ideal_quotient(i, k).family().is_subfamily_of(ideal_quotient(i, j).family()),
            "J inside K, but (I:K) is not inside (I:J)",
        )?;
    }
    Ok(())
}

fn t10_full_member_makes_quotient_i(inst: &Instance) -> Result<(), String> {
    let (i, j) = inst.ideal_family();
    if j.contains(i.ground().full()) {
        ensure(ideal_quotient(i, j) == *i, "X in J, but (I:J) differs from I")?;
    }
    Ok(())
}

fn t11_quotient_distributes_over_meets(inst: &Instance) -> Result<(), String> {
    let (i, i2, j) = inst.ideal_pair_family();
    ensure(
        ideal_quotient(&i.meet(i2), j).family()
            == &ideal_quotient(i, j).family().intersection_with(ideal_quotient(i2, j).family()),
        "the quotient of the meet differs from the meet of the quotients",
    )
}

fn t12_quotient_fixed_points(inst: &Instance) -> Result<(), String> {
    let space = inst.space_only();
    let i = space.ideal();
    let ground = space.ground();
    ensure(!ideal_quotient(i, i.family()).is_proper(), "(I:I) is not the powerset")?;
    ensure(
        !ideal_quotient(&Ideal::powerset(ground.clone()), i.family()).is_proper(),
        "(powerset:I) is not the powerset",
    )?;
    ensure(
        !ideal_quotient(i, &SetFamily::just_empty_set(ground.clone())).is_proper(),
        "(I:{}) is not the powerset",
    )?;
    ensure(
        ideal_quotient(i, space.topology().family()) == *i,
        "(I:tau) differs from I",
    )?;
    ensure(
        classify::is_faithful(space.topology().family()),
        "a topology failed to be faithful",
    )
}

fn t13_maximal_means_quotients_collapse(inst: &Instance) -> Result<(), String> {
    let i = inst.ideal_only();
    if !i.is_proper() {
        return Ok(());
    }
    let ground = i.ground();
    let is_max = maximal(i);
    let mut every_outside_family_collapses = true;
    for mask in 0..(1u64 << (1usize << ground.size())) {
        let j = SetFamily::from_mask(ground.clone(), mask);
        let q = ideal_quotient(i, &j);
        if !j.is_subfamily_of(i.family()) && q != *i {
            every_outside_family_collapses = false;
        }
        if is_max {
            ensure(
                q == *i || !q.is_proper(),
                "I maximal, but some (I:J) is neither I nor the powerset",
            )?;
        }
    }
    ensure(
        is_max == every_outside_family_collapses,
        "maximality disagrees with the everything-outside-I-collapses test",
    )
}

fn t14_tau_is_meet_of_star_and_sharp(inst: &Instance) -> Result<(), String> {
    let space = inst.space_only();
    let star = tau_star(space);
    let sharp = tau_sharp(space);
    ensure(
        star.family().intersection_with(sharp.family()) == *space.topology().family(),
        "tau differs from the meet of the star and sharp topologies",
    )?;
    ensure(
        space.topology().family().is_subfamily_of(star.family()),
        "the star topology does not refine tau",
    )?;
    ensure(
        space.topology().family().is_subfamily_of(sharp.family()),
        "the sharp topology does not refine tau",
    )?;
    ensure(
        Topology::validate(star.family().clone()).is_ok(),
        "the star topology violates an axiom",
    )?;
    ensure(
        Topology::validate(sharp.family().clone()).is_ok(),
        "the sharp topology violates an axiom",
    )
}

fn t15_sharp_open_iff_inside_psi_sharp(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    ensure(
        tau_sharp(space).is_open(a) == a.is_subset_of(psi_sharp(space, a)),
        "openness in the sharp topology disagrees with A inside psi_sharp(A)",
    )
}

fn t16_psi_pair_meets_to_interior(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    let interior = space.topology().interior(a);
    ensure(
        psi_sharp(space, a).intersect(psi(space, a)) == interior,
        "psi_sharp(A) intersect psi(A) differs from the interior of A",
    )?;
    if space.ideal().contains(a.complement()) {
        ensure(
            psi_sharp(space, a) == interior,
            "complement of A in the ideal, but psi_sharp(A) differs from the interior",
        )?;
    }
    if annihilator(space.ideal().family()).contains(a.complement()) {
        ensure(
            psi(space, a) == interior,
            "complement of A in the annihilator, but psi(A) differs from the interior",
        )?;
    }
    Ok(())
}

fn t17_annihilator_is_the_disjointness_ideal(inst: &Instance) -> Result<(), String> {
    let i = inst.ideal_only();
    let ground = i.ground();
    let ann = annihilator(i.family());
    ensure(
        i.family().intersection_with(ann.family())
            == SetFamily::just_empty_set(ground.clone()),
        "I and its annihilator share a non-empty member",
    )?;
    ensure(
        ann == Ideal::epsilon(ground.clone(), i.generator()),
        "the annihilator differs from the ideal of sets disjoint from the generator",
    )
}

fn t18_double_annihilator(inst: &Instance) -> Result<(), String> {
    let i = inst.ideal_only();
    let double = annihilator(annihilator(i.family()).family());
    if classify::is_faithful(i.family()) {
        ensure(!double.is_proper(), "I faithful, but Ann(Ann(I)) is not the powerset")
    } else {
        ensure(double == *i, "Ann(Ann(I)) differs from I")
    }
}

fn t19_dense_iff_epsilon_ideal_is_tame(inst: &Instance) -> Result<(), String> {
    let (topology, a) = inst.topology_set();
    let eps = Ideal::epsilon(topology.ground().clone(), a);
    let space = IdealSpace::new(topology.clone(), eps).expect("same ground by construction");
    ensure(
        classify::is_dense(topology, a) == classify::is_hayashi_samuel(&space),
        "density of A disagrees with the disjointness ideal avoiding non-empty opens",
    )
}

fn t20_maximal_routes_agree(inst: &Instance) -> Result<(), String> {
    let i = inst.ideal_only();
    if !i.is_proper() {
        return Ok(());
    }
    let ground = i.ground();
    let by_complement = maximal(i);
    let by_product = reference::is_maximal_by_product(i);
    let by_extension = reference::is_maximal_by_extension(i);
    let by_epsilon =
        (0..ground.size()).any(|x| *i == Ideal::epsilon(ground.clone(), ground.singleton(x)));
    ensure(
        by_complement == by_product,
        "the complement test and the product test disagree on maximality",
    )?;
    ensure(
        by_complement == by_extension,
        "the complement test and the no-proper-extension test disagree on maximality",
    )?;
    ensure(
        by_complement == by_epsilon,
        "maximality disagrees with being the sets-missing-one-point ideal",
    )
}

fn t21_minimal_routes_agree(inst: &Instance) -> Result<(), String> {
    let i = inst.ideal_only();
    if !i.is_proper() {
        return Ok(());
    }
    let m = minimal(i);
    ensure(m == (i.len() == 2), "minimality disagrees with having exactly two members")?;
    let nonempty: Vec<_> = i.family().iter().filter(|s| !s.is_empty()).collect();
    let collapsed = !nonempty.is_empty() && nonempty.windows(2).all(|w| w[0] == w[1]);
    ensure(
        m == collapsed,
        "minimality disagrees with all non-empty members being one set",
    )?;
    ensure(
        m == (i.generator().len() == 1),
        "minimality disagrees with having a singleton generator",
    )?;
    ensure(
        m == reference::is_minimal_by_extension(i),
        "minimality disagrees with the no-ideal-strictly-between test",
    )?;
    ensure(
        m == maximal(&annihilator(i.family())),
        "minimality disagrees with maximality of the annihilator",
    )
}

fn t22_maximal_ideals_polarize_local(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    if !maximal(space.ideal()) {
        return Ok(());
    }
    ensure(
        local_function(space, a).is_empty() || local_function(space, a.complement()).is_empty(),
        "I maximal, but both local(A) and local(complement of A) are non-empty",
    )?;
    let star = tau_star(space);
    ensure(
        star.is_closed(a) || star.is_open(a),
        "I maximal, but A is neither closed nor open in the star topology",
    )?;
    ensure(classify::is_t0(&star), "I maximal, but the star topology is not T0")
}

fn t23_extreme_ideals_polarize_operators(inst: &Instance) -> Result<(), String> {
    let (space, a) = inst.space_set();
    let cl = space.topology().closure(a);
    let interior = space.topology().interior(a);
    if minimal(space.ideal()) {
        ensure(
            sharp_function(space, a).is_empty()
                || sharp_function(space, a.complement()).is_empty(),
            "I minimal, but both sharp(A) and sharp(complement of A) are non-empty",
        )?;
        let sharp_top = tau_sharp(space);
        ensure(
            sharp_top.is_closed(a) || sharp_top.is_open(a),
            "I minimal, but A is neither closed nor open in the sharp topology",
        )?;
        ensure(
            local_function(space, a) == cl || psi(space, a) == interior,
            "I minimal, but local(A) is not the closure and psi(A) is not the interior",
        )?;
    }
    if maximal(space.ideal()) {
        ensure(
            sharp_function(space, a) == cl || psi_sharp(space, a) == interior,
            "I maximal, but sharp(A) is not the closure and psi_sharp(A) is not the interior",
        )?;
    }
    Ok(())
}

fn t24_continuity_decomposes(inst: &Instance) -> Result<(), String> {
    let (space, sigma, f) = inst.map_spaces();
    let plain = crate::continuity::is_continuous(f, space.topology(), sigma)
        .expect("instances are built over matching grounds");
    let star = crate::continuity::is_star_continuous(f, space, sigma)
        .expect("instances are built over matching grounds");
    let sharp = crate::continuity::is_sharp_continuous(f, space, sigma)
        .expect("instances are built over matching grounds");
    if plain {
        ensure(sharp, "f is continuous but not sharp-continuous")?;
    }
    ensure(
        plain == (star && sharp),
        "continuity differs from star-continuity plus sharp-continuity",
    )
}

fn t25_closed_generators_disconnect_sharp(inst: &Instance) -> Result<(), String> {
    let (topology, a) = inst.topology_set();
    if !topology.is_closed(a) || a.is_empty() || a.is_full() {
        return Ok(());
    }
    let space =
        IdealSpace::new(topology.clone(), Ideal::generated(topology.ground().clone(), a))
            .expect("same ground by construction");
    let sharp = tau_sharp(&space);
    let c = a.complement();
    ensure(
        sharp.is_open(c) && sharp.is_closed(c),
        "the complement of the closed generator is not clopen in the sharp topology",
    )?;
    ensure(
        !classify::is_connected(&sharp),
        "the sharp topology stayed connected",
    )
}

fn x1_sharp_continuity_does_not_imply_continuity(inst: &Instance) -> Result<(), String> {
    let (space, sigma, f) = inst.map_spaces();
    let sharp = crate::continuity::is_sharp_continuous(f, space, sigma)
        .expect("instances are built over matching grounds");
    if !sharp {
        return Ok(());
    }
    let plain = crate::continuity::is_continuous(f, space.topology(), sigma)
        .expect("instances are built over matching grounds");
    ensure(plain, "f is sharp-continuous but not continuous")
}

fn inf1_vacuous(_: &Instance) -> Result<(), String> {
    unreachable!("plans with no finite instances decode nothing")
}

pub(crate) static CASES: &[TheoremCase] = &[
    TheoremCase {
        id: "T1",
        title: "the sharp function is the local function taken under the annihilator ideal, and likewise for psi_sharp and psi",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t1_sharp_is_local_of_annihilator,
    },
    TheoremCase {
        id: "T2",
        title: "sharp(A) union local(A) is the closure of A",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t2_sharp_and_local_cover_closure,
    },
    TheoremCase {
        id: "T3",
        title: "when A lies in the ideal or the annihilator, or one operator vanishes, the other operator is the closure",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t3_degenerate_operands_collapse,
    },
    TheoremCase {
        id: "T4",
        title: "the sharp function is monotone, closed-valued, subadditive on intersections, additive on unions, and blind to annihilator members",
        plan: Plan::SpaceSetPair,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t4_sharp_function_laws,
    },
    TheoremCase {
        id: "T5",
        title: "cl_sharp satisfies the Kuratowski closure axioms",
        plan: Plan::SpaceSetPair,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t5_cl_sharp_is_kuratowski,
    },
    TheoremCase {
        id: "T6",
        title: "the local function turns meets of ideals into unions, and the star topology turns them into meets",
        plan: Plan::SpaceIdealPair,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t6_local_function_splits_over_meets,
    },
    TheoremCase {
        id: "T7",
        title: "(I:J) matches its defining scan, is an ideal, and contains I",
        plan: Plan::IdealFamily,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t7_quotient_is_an_ideal_containing_i,
    },
    TheoremCase {
        id: "T8",
        title: "(I:J) is the powerset exactly when J is contained in I",
        plan: Plan::IdealFamily,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t8_quotient_is_full_iff_j_inside_i,
    },
    TheoremCase {
        id: "T9",
        title: "enlarging J shrinks (I:J)",
        plan: Plan::IdealFamilyPair,
        declared_bound: 3,
        max_exhaustive: 3,
        max_bound: 5,
        expected_failure: false,
        check: t9_quotient_is_antitone_in_j,
    },
    TheoremCase {
        id: "T10",
        title: "if J contains X then (I:J) is I",
        plan: Plan::IdealFamily,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t10_full_member_makes_quotient_i,
    },
    TheoremCase {
        id: "T11",
        title: "quotients distribute over meets of ideals",
        plan: Plan::IdealPairFamily,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t11_quotient_distributes_over_meets,
    },
    TheoremCase {
        id: "T12",
        title: "(I:I), (powerset:I), and (I:{}) are the powerset; (I:tau) is I; every topology is faithful",
        plan: Plan::Space,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t12_quotient_fixed_points,
    },
    TheoremCase {
        id: "T13",
        title: "a proper ideal is maximal exactly when every quotient by a family not inside it collapses, in which case quotients only take the values I and the powerset",
        plan: Plan::IdealOnly,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 4,
        expected_failure: false,
        check: t13_maximal_means_quotients_collapse,
    },
    TheoremCase {
        id: "T14",
        title: "the star and sharp topologies are topologies refining tau, and tau is their meet",
        plan: Plan::Space,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t14_tau_is_meet_of_star_and_sharp,
    },
    TheoremCase {
        id: "T15",
        title: "A is open in the sharp topology exactly when A lies inside psi_sharp(A)",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t15_sharp_open_iff_inside_psi_sharp,
    },
    TheoremCase {
        id: "T16",
        title: "psi_sharp(A) intersect psi(A) is the interior of A, with each factor alone sufficing on degenerate operands",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t16_psi_pair_meets_to_interior,
    },
    TheoremCase {
        id: "T17",
        title: "the annihilator of I meets I only in the empty set and equals the ideal of sets disjoint from the generator",
        plan: Plan::IdealOnly,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t17_annihilator_is_the_disjointness_ideal,
    },
    TheoremCase {
        id: "T18",
        title: "the double annihilator is the powerset for faithful ideals and recovers I otherwise",
        plan: Plan::IdealOnly,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t18_double_annihilator,
    },
    TheoremCase {
        id: "T19",
        title: "A is dense exactly when no non-empty open set is disjoint from A, phrased through the disjointness ideal",
        plan: Plan::TopologySet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t19_dense_iff_epsilon_ideal_is_tame,
    },
    TheoremCase {
        id: "T20",
        title: "for proper ideals, the complement test, product test, no-proper-extension test, and missing-one-point form agree on maximality",
        plan: Plan::IdealOnly,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t20_maximal_routes_agree,
    },
    TheoremCase {
        id: "T21",
        title: "for proper ideals, minimality equals two members, one non-empty member value, a singleton generator, no strict sub-ideal, and a maximal annihilator",
        plan: Plan::IdealOnly,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t21_minimal_routes_agree,
    },
    TheoremCase {
        id: "T22",
        title: "under a maximal ideal, local(A) or local(complement of A) vanishes, every set is star-closed or star-open, and the star topology is T0",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t22_maximal_ideals_polarize_local,
    },
    TheoremCase {
        id: "T23",
        title: "minimal ideals polarize the sharp operators the way maximal ideals polarize the star operators",
        plan: Plan::SpaceSet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t23_extreme_ideals_polarize_operators,
    },
    TheoremCase {
        id: "T24",
        title: "continuity implies sharp-continuity and equals star-continuity plus sharp-continuity",
        plan: Plan::MapSpaces,
        declared_bound: 2,
        max_exhaustive: 3,
        max_bound: 5,
        expected_failure: false,
        check: t24_continuity_decomposes,
    },
    TheoremCase {
        id: "T25",
        title: "a proper non-empty closed generator makes its complement clopen in the sharp topology, disconnecting it",
        plan: Plan::TopologySet,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: t25_closed_generators_disconnect_sharp,
    },
    TheoremCase {
        id: "X1",
        title: "sharp-continuity implies continuity (false; kept to demonstrate the counterexample machinery)",
        plan: Plan::MapSpaces,
        declared_bound: 2,
        max_exhaustive: 3,
        max_bound: 5,
        expected_failure: true,
        check: x1_sharp_continuity_does_not_imply_continuity,
    },
    TheoremCase {
        id: "INF1",
        title: "the ideal of finite sets is faithful (vacuous here: on a finite ground it is the improper powerset, so no instances exist)",
        plan: Plan::NoFiniteInstances,
        declared_bound: 3,
        max_exhaustive: 4,
        max_bound: 5,
        expected_failure: false,
        check: inf1_vacuous,
    },
];

#[cfg(test)]
mod tests {
    use super::super::{recheck_document, run_theorem, Mode, SearchStatus};
    use super::*;
    use crate::format::parse_space;

    #[test]
    fn ids_are_unique_and_findable() {
        for (pos, case) in CASES.iter().enumerate() {
            assert!(
                CASES.iter().skip(pos + 1).all(|c| c.id != case.id),
                "duplicate id {}",
                case.id
            );
            assert_eq!(find(case.id).unwrap().id, case.id);
        }
        assert!(find("T0").is_none());
    }

    #[test]
    fn instance_grid_sizes_are_pinned() {
        // 29 topologies and 8 ideals on three points, 8 subsets each.
        let outcome = run_theorem("T15", 3, Mode::Exhaustive, 0).unwrap();
        assert_eq!(outcome.status, SearchStatus::Verified { instances: 29 * 8 * 8 });
        // 4 topologies and 4 subsets on two points.
        let outcome = run_theorem("T19", 2, Mode::Exhaustive, 0).unwrap();
        assert_eq!(outcome.status, SearchStatus::Verified { instances: 16 });
    }

    #[test]
    fn every_sound_entry_verifies_on_two_points() {
        for case in CASES {
            if case.expected_failure {
                continue;
            }
            let outcome = run_theorem(case.id, 2.min(case.max_exhaustive), Mode::Exhaustive, 0)
                .unwrap_or_else(|e| panic!("{} failed to run: {e}", case.id));
            assert!(
                matches!(outcome.status, SearchStatus::Verified { .. }),
                "{} did not verify: {:?}",
                case.id,
                outcome.status
            );
        }
    }

    #[test]
    fn the_demonstration_entry_fails_and_replays() {
        let outcome = run_theorem("X1", 2, Mode::Exhaustive, 0).unwrap();
        let SearchStatus::Counterexample { index, note, document } = &outcome.status else {
            panic!("expected a counterexample, got {:?}", outcome.status);
        };
        assert_eq!(outcome.examined, index + 1);
        assert!(note.contains("sharp-continuous"));
        let doc = parse_space(document).unwrap();
        assert!(recheck_document("X1", &doc).unwrap().is_err());
        // The same document satisfies the sound decomposition claim.
        assert!(recheck_document("T24", &doc).unwrap().is_ok());
    }

    #[test]
    fn vacuous_entries_verify_with_zero_instances() {
        let outcome = run_theorem("INF1", 3, Mode::Exhaustive, 0).unwrap();
        assert_eq!(outcome.status, SearchStatus::Verified { instances: 0 });
        assert_eq!(outcome.examined, 0);
    }
}
