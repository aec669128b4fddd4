//! A tile system: the closed tile set, its free species and the temperature.

use stam_core::{Assembly, TileSet};

/// A free component present in unbounded count: a single tile or a small
/// preformed cluster, given in its own coordinate frame.
#[derive(Debug, Clone)]
pub struct Species {
    pub name: String,
    pub assembly: Assembly,
}

#[derive(Debug, Clone)]
pub struct TileSystem {
    pub set: TileSet,
    pub species: Vec<Species>,
    pub tau: u32,
}

impl TileSystem {
    pub fn new(set: TileSet, tau: u32) -> TileSystem {
        TileSystem { set, species: Vec::new(), tau }
    }

    pub fn add_species(&mut self, name: &str, assembly: Assembly) {
        debug_assert!(
            !assembly.is_empty() && assembly.is_tau_stable(&self.set, self.tau),
            "species {name} must be a stable nonempty assembly"
        );
        self.species.push(Species { name: name.to_string(), assembly });
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s.name == name)
    }
}
