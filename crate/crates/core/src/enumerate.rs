//! Exhaustive enumeration of topologies and ideals on small ground sets.
//!
//! Topologies are enumerated through their minimal-neighborhood rows: a
//! family of rows `R(x)` with `x in R(x)` and `y in R(x) => R(y) subset R(x)`
//! determines a topology (the sets `A` with `R(x) subset A` for every `x` in
//! `A`) and every topology arises from exactly one such row family, namely
//! its minimal neighborhoods. That keeps the search at `2^(n(n-1))`
//! candidates instead of the `2^(2^n)` raw families the brute-force filter
//! in [`crate::reference`] walks.

use std::sync::Arc;
use thiserror::Error;

use crate::ground::GroundSet;
use crate::ideal::Ideal;
use crate::topology::Topology;

/// Topology enumeration is practical up to here (6942 topologies at n = 5).
pub const TOPOLOGY_ENUMERATION_CAP: usize = 5;
/// Ideal enumeration shares the cap; there are `2^n` ideals either way.
pub const IDEAL_ENUMERATION_CAP: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("ground size {requested} is outside the supported range 1..={cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// Every topology on `ground`, each exactly once, in deterministic order.
pub fn enumerate_topologies(ground: &Arc<GroundSet>) -> Vec<Topology> {
    let n = ground.size();
    assert!(
        n <= TOPOLOGY_ENUMERATION_CAP,
        "topology enumeration capped at {TOPOLOGY_ENUMERATION_CAP} elements"
    );
    let free_bits = n * (n - 1);
    let mut out = Vec::new();
    'candidate: for counter in 0u64..(1u64 << free_bits) {
        // Spread the counter bits over the off-diagonal row positions.
        let mut rows = [0u16; 16];
        let mut bit = 0;
        for (x, row) in rows.iter_mut().enumerate().take(n) {
            *row = 1 << x;
            for y in 0..n {
                if y != x {
                    if counter >> bit & 1 == 1 {
                        *row |= 1 << y;
                    }
                    bit += 1;
                }
            }
        }
        // Transitivity: y in R(x) forces R(y) inside R(x).
        for x in 0..n {
            for y in 0..n {
                if rows[x] >> y & 1 == 1 && rows[y] & !rows[x] != 0 {
                    continue 'candidate;
                }
            }
        }
        let full = ground.full().bits();
        let members = (0..=full)
            .filter(|&a| (0..n).all(|x| a >> x & 1 == 0 || rows[x] & !a == 0))
            .map(|a| ground.subset_from_bits(a).expect("member off ground"))
            .collect();
        let family = crate::family::SetFamily::new(ground.clone(), members);
        let min_nbhd = (0..n)
            .map(|x| ground.subset_from_bits(rows[x]).expect("row off ground"))
            .collect();
        out.push(Topology::from_parts_unchecked(family, min_nbhd));
    }
    out
}

/// Checked entry point used by callers that take the size as data.
pub fn topologies_on(n: usize) -> Result<Vec<Topology>, EnumerationError> {
    if n == 0 || n > TOPOLOGY_ENUMERATION_CAP {
        return Err(EnumerationError::CapExceeded {
            requested: n,
            cap: TOPOLOGY_ENUMERATION_CAP,
        });
    }
    let ground = GroundSet::with_size(n).expect("size within ground cap");
    Ok(enumerate_topologies(&ground))
}

/// Every ideal on `ground`: one per generator, in ascending generator order.
pub fn enumerate_ideals(ground: &Arc<GroundSet>) -> Vec<Ideal> {
    assert!(
        ground.size() <= IDEAL_ENUMERATION_CAP,
        "ideal enumeration capped at {IDEAL_ENUMERATION_CAP} elements"
    );
    ground
        .subsets()
        .map(|gen| Ideal::generated(ground.clone(), gen))
        .collect()
}

/// Checked entry point used by callers that take the size as data.
pub fn ideals_on(n: usize) -> Result<Vec<Ideal>, EnumerationError> {
    if n == 0 || n > IDEAL_ENUMERATION_CAP {
        return Err(EnumerationError::CapExceeded {
            requested: n,
            cap: IDEAL_ENUMERATION_CAP,
        });
    }
    let ground = GroundSet::with_size(n).expect("size within ground cap");
    Ok(enumerate_ideals(&ground))
}
