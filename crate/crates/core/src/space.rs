//! A topology and an ideal sharing one ground set.

use std::sync::Arc;
use thiserror::Error;

use crate::ground::GroundSet;
use crate::ideal::Ideal;
use crate::topology::Topology;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("topology and ideal live on different ground sets")]
    GroundMismatch,
}

/// An ideal topological space: ground set, topology, ideal. Immutable after
/// construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpace {
    topology: Topology,
    ideal: Ideal,
}

impl IdealSpace {
    pub fn new(topology: Topology, ideal: Ideal) -> Result<IdealSpace, SpaceError> {
        if topology.ground() != ideal.ground() {
            return Err(SpaceError::GroundMismatch);
        }
        Ok(IdealSpace { topology, ideal })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        self.topology.ground()
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Same topology, different ideal.
    pub fn with_ideal(&self, ideal: Ideal) -> Result<IdealSpace, SpaceError> {
        IdealSpace::new(self.topology.clone(), ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grounds_must_match() {
        let g2 = GroundSet::with_size(2).unwrap();
        let g3 = GroundSet::with_size(3).unwrap();
        let t = Topology::indiscrete(g3.clone());
        let i = Ideal::trivial(g2);
        assert_eq!(IdealSpace::new(t.clone(), i).unwrap_err(), SpaceError::GroundMismatch);
        assert!(IdealSpace::new(t, Ideal::trivial(g3)).is_ok());
    }
}
