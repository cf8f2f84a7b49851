//! Maps between finite spaces and the continuity notions the refined
//! topologies induce.

use std::sync::Arc;
use thiserror::Error;

use crate::ground::{GroundSet, Subset};
use crate::operators::{tau_sharp, tau_star};
use crate::space::IdealSpace;
use crate::topology::Topology;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContinuityError {
    #[error("map endpoints do not match the given spaces' ground sets")]
    GroundMismatch,
    #[error("image index {index} out of range for a codomain of size {size}")]
    BadImage { index: usize, size: usize },
}

/// A total map between two ground sets, stored pointwise as codomain indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    domain: Arc<GroundSet>,
    codomain: Arc<GroundSet>,
    image: Vec<usize>,
}

impl FiniteMap {
    pub fn new(
        domain: Arc<GroundSet>,
        codomain: Arc<GroundSet>,
        image: Vec<usize>,
    ) -> Result<FiniteMap, ContinuityError> {
        if image.len() != domain.size() {
            return Err(ContinuityError::GroundMismatch);
        }
        for &y in &image {
            if y >= codomain.size() {
                return Err(ContinuityError::BadImage { index: y, size: codomain.size() });
            }
        }
        Ok(FiniteMap { domain, codomain, image })
    }

    pub fn identity(ground: Arc<GroundSet>) -> FiniteMap {
        let image = (0..ground.size()).collect();
        FiniteMap { domain: ground.clone(), codomain: ground, image }
    }

    pub fn domain(&self) -> &Arc<GroundSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GroundSet> {
        &self.codomain
    }

    /// Codomain index of domain point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_indices(&self) -> &[usize] {
        &self.image
    }

    /// Preimage of a codomain subset.
    pub fn preimage(&self, b: Subset) -> Subset {
        debug_assert_eq!(b.universe(), self.codomain.full().universe());
        let mut bits = 0u16;
        for (x, &y) in self.image.iter().enumerate() {
            if b.contains(y) {
                bits |= 1 << x;
            }
        }
        self.domain.subset_from_bits(bits).expect("preimage off ground")
    }
}

/// All `|codomain|^|domain|` maps, in base-|codomain| counter order.
pub fn all_maps(domain: &Arc<GroundSet>, codomain: &Arc<GroundSet>) -> Vec<FiniteMap> {
    let m = domain.size();
    let k = codomain.size();
    let total = (k as u64).pow(m as u32);
    (0..total)
        .map(|mut counter| {
            let image = (0..m)
                .map(|_| {
                    let y = (counter % k as u64) as usize;
                    counter /= k as u64;
                    y
                })
                .collect();
            FiniteMap { domain: domain.clone(), codomain: codomain.clone(), image }
        })
        .collect()
}

fn check_endpoints(
    f: &FiniteMap,
    domain_topology: &Topology,
    sigma: &Topology,
) -> Result<(), ContinuityError> {
    if f.domain() != domain_topology.ground() || f.codomain() != sigma.ground() {
        return Err(ContinuityError::GroundMismatch);
    }
    Ok(())
}

/// Plain continuity: preimages of `sigma`-opens are open.
pub fn is_continuous(
    f: &FiniteMap,
    domain_topology: &Topology,
    sigma: &Topology,
) -> Result<bool, ContinuityError> {
    check_endpoints(f, domain_topology, sigma)?;
    Ok(sigma.opens().all(|v| domain_topology.is_open(f.preimage(v))))
}

/// Star continuity: preimages of `sigma`-opens land in the star topology of
/// the domain space.
pub fn is_star_continuous(
    f: &FiniteMap,
    space: &IdealSpace,
    sigma: &Topology,
) -> Result<bool, ContinuityError> {
    check_endpoints(f, space.topology(), sigma)?;
    let star = tau_star(space);
    Ok(sigma.opens().all(|v| star.is_open(f.preimage(v))))
}

/// Sharp continuity: preimages of `sigma`-opens land in the sharp topology
/// of the domain space.
pub fn is_sharp_continuous(
    f: &FiniteMap,
    space: &IdealSpace,
    sigma: &Topology,
) -> Result<bool, ContinuityError> {
    check_endpoints(f, space.topology(), sigma)?;
    let sharp = tau_sharp(space);
    Ok(sigma.opens().all(|v| sharp.is_open(f.preimage(v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;

    /// The one-space setup where sharp continuity strictly beats continuity:
    /// tau generated by {a c}, ideal generated by {a}, sigma = {{}, {a}, X},
    /// identity map.
    fn split_example() -> (FiniteMap, IdealSpace, Topology) {
        let g = GroundSet::with_size(3).unwrap();
        let t = Topology::generate(g.clone(), &[g.subset_from_bits(0b101).unwrap()]);
        let i = Ideal::generated(g.clone(), g.singleton(0));
        let sigma = Topology::generate(g.clone(), &[g.singleton(0)]);
        (FiniteMap::identity(g.clone()), IdealSpace::new(t, i).unwrap(), sigma)
    }

    #[test]
    fn preimages() {
        let g2 = GroundSet::with_size(2).unwrap();
        let g3 = GroundSet::with_size(3).unwrap();
        // a,b -> 0; c -> 1
        let f = FiniteMap::new(g3.clone(), g2.clone(), vec![0, 0, 1]).unwrap();
        assert_eq!(f.preimage(g2.singleton(0)).bits(), 0b011);
        assert_eq!(f.preimage(g2.singleton(1)).bits(), 0b100);
        assert_eq!(f.preimage(g2.empty()).bits(), 0b000);
        assert_eq!(f.preimage(g2.full()).bits(), 0b111);
    }

    #[test]
    fn map_construction_checks() {
        let g2 = GroundSet::with_size(2).unwrap();
        let g3 = GroundSet::with_size(3).unwrap();
        assert_eq!(
            FiniteMap::new(g3.clone(), g2.clone(), vec![0, 0]).unwrap_err(),
            ContinuityError::GroundMismatch
        );
        assert_eq!(
            FiniteMap::new(g3.clone(), g2.clone(), vec![0, 0, 2]).unwrap_err(),
            ContinuityError::BadImage { index: 2, size: 2 }
        );
        assert_eq!(all_maps(&g3, &g2).len(), 8);
        assert_eq!(all_maps(&g2, &g3).len(), 9);
    }

    #[test]
    fn identity_is_continuous_within_one_topology() {
        let g = GroundSet::with_size(3).unwrap();
        let t = Topology::generate(g.clone(), &[g.subset_from_bits(0b011).unwrap()]);
        let f = FiniteMap::identity(g.clone());
        assert!(is_continuous(&f, &t, &t).unwrap());
        let finer_target = Topology::discrete(g.clone());
        assert!(!is_continuous(&f, &t, &finer_target).unwrap());
    }

    #[test]
    fn sharp_continuity_without_continuity() {
        let (f, sp, sigma) = split_example();
        assert!(!is_continuous(&f, sp.topology(), &sigma).unwrap());
        assert!(is_sharp_continuous(&f, &sp, &sigma).unwrap());
        assert!(!is_star_continuous(&f, &sp, &sigma).unwrap());
    }

    #[test]
    fn endpoint_mismatch_is_an_error() {
        let (f, sp, _) = split_example();
        let g2 = GroundSet::with_size(2).unwrap();
        let bad_sigma = Topology::discrete(g2);
        assert_eq!(
            is_continuous(&f, sp.topology(), &bad_sigma).unwrap_err(),
            ContinuityError::GroundMismatch
        );
        assert_eq!(
            is_sharp_continuous(&f, &sp, &bad_sigma).unwrap_err(),
            ContinuityError::GroundMismatch
        );
    }
}
