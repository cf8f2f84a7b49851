//! The local function, the sharp function, and the topologies they induce.
//!
//! For a space (X, tau, I) with minimal neighborhoods `U(x)` and principal
//! ideal generator `G`:
//!
//! * local function   `A*  = { x : U(x) n A  is not in I }  = { x : U(x) n A meets X\G }`
//! * sharp function   `A#  = { x : every open around x contains a non-empty
//!   ideal member inside its intersection with A } = { x : U(x) n A meets G }`
//!
//! The sharp production path below is exactly the local function taken with
//! respect to the annihilator ideal (generator `X\G`); the equivalence with
//! the literal exists-a-witness definition is registry entry T1 and is
//! cross-checked against [`crate::reference::sharp_function_by_witness`].

use crate::family::SetFamily;
use crate::ground::Subset;
use crate::ideal::Ideal;
use crate::space::IdealSpace;
use crate::topology::Topology;

/// Points whose minimal neighborhood, cut down to `a`, meets `probe`.
fn meets_through(topology: &Topology, a: Subset, probe: Subset) -> Subset {
    let mut bits = 0u16;
    for x in 0..topology.ground().size() {
        if topology.min_nbhd(x).intersect(a).meets(probe) {
            bits |= 1 << x;
        }
    }
    topology.ground().subset_from_bits(bits).expect("points off ground")
}

/// The local function `A*`: points none of whose neighborhoods shrink `A`
/// into the ideal.
pub fn local_function(space: &IdealSpace, a: Subset) -> Subset {
    meets_through(space.topology(), a, space.ideal().generator().complement())
}

/// The sharp function `A#`: points each of whose neighborhoods traps a
/// non-empty ideal member inside its intersection with `A`.
pub fn sharp_function(space: &IdealSpace, a: Subset) -> Subset {
    meets_through(space.topology(), a, space.ideal().generator())
}

/// `psi(A) = X \ (X \ A)*`, the dual of the local function.
pub fn psi(space: &IdealSpace, a: Subset) -> Subset {
    local_function(space, a.complement()).complement()
}

/// `psi#(A) = X \ (X \ A)#`, the dual of the sharp function.
pub fn psi_sharp(space: &IdealSpace, a: Subset) -> Subset {
    sharp_function(space, a.complement()).complement()
}

/// Kuratowski closure `cl*(A) = A u A*`.
pub fn cl_star(space: &IdealSpace, a: Subset) -> Subset {
    a.union(local_function(space, a))
}

/// Kuratowski closure `cl#(A) = A u A#`.
pub fn cl_sharp(space: &IdealSpace, a: Subset) -> Subset {
    a.union(sharp_function(space, a))
}

fn topology_of_closure(space: &IdealSpace, cl: impl Fn(&IdealSpace, Subset) -> Subset) -> Topology {
    let ground = space.ground();
    let members = ground
        .subsets()
        .filter(|&a| {
            let c = a.complement();
            cl(space, c) == c
        })
        .collect();
    let family = SetFamily::new(ground.clone(), members);
    Topology::validate(family).expect("a Kuratowski closure operator induces a topology")
}

/// The star topology: sets whose complement is `cl*`-closed. Refines `tau`.
pub fn tau_star(space: &IdealSpace) -> Topology {
    topology_of_closure(space, cl_star)
}

/// The sharp topology: sets whose complement is `cl#`-closed. Refines `tau`.
pub fn tau_sharp(space: &IdealSpace) -> Topology {
    topology_of_closure(space, cl_sharp)
}

/// The ideal quotient `(I : J) = { A : A n J is in I for every J in J }`.
///
/// With principal `I = powerset(G)` the condition collapses to `A` avoiding
/// every `J \ G`, so the quotient is the principal ideal generated by the
/// complement of the union of those residues. The scan form lives in
/// [`crate::reference::quotient_by_scan`].
pub fn ideal_quotient(i: &Ideal, j: &SetFamily) -> Ideal {
    assert_eq!(i.ground(), j.ground(), "quotient arguments off one ground");
    let g = i.generator();
    let blocked = j
        .iter()
        .fold(i.ground().empty(), |acc, m| acc.union(m.minus(g)));
    Ideal::generated(i.ground().clone(), blocked.complement())
}

/// The annihilator `Ann(J) = ({{}} : J)`: subsets disjoint from every member.
pub fn annihilator(j: &SetFamily) -> Ideal {
    Ideal::generated(j.ground().clone(), j.union_of_members().complement())
}
