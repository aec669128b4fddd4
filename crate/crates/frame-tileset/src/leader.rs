//! Election-phase singletons.
//!
//! After the rectangle departs, its cascade leaves a primer dock open on
//! the C tile it was seated on.  The primer seats there and starts the
//! election: directly (two-layer frames) or through the row scan, which
//! sweeps each row westward, turns around, and climbs one row at each
//! east end until it reaches the layer-1 C, whose override fires the
//! election into the B tile beside it.  The two scan singletons are the
//! turnaround reflectors; like the collision witnesses they carry no
//! rules of their own.

use stam_core::geom::Dir::{E, W};
use stam_core::tile::GlueState::On;

use crate::plan::TilePlan;

/// Primer: docks on the exposed strength-2 pad of a cascade-primed C.
pub fn primer() -> TilePlan {
    let mut p = TilePlan::new("primer");
    p.glue(W, "p2", 2, On);
    p
}

/// West-end reflector: catches the westward sweep at a row's last tile
/// and sends it back east.
pub fn scan_west_end() -> TilePlan {
    let mut p = TilePlan::new("scan_l");
    p.glue(E, "sp'", 1, On).glue(E, "spL'", 1, On);
    p
}

/// East-end reflector: catches the eastward sweep at a row's last tile
/// and bumps the scan one row north.
pub fn scan_east_end() -> TilePlan {
    let mut p = TilePlan::new("scan_r");
    p.glue(W, "spR'", 1, On).glue(W, "sp2'", 1, On);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflectors_are_passive_two_bond_seats() {
        for p in [primer(), scan_west_end(), scan_east_end()] {
            assert!(p.rules().is_empty());
        }
    }
}
