//! Event kinds and attachment-site enumeration.
//!
//! The soup evolves by discrete events: a free species attaching to a
//! placed assembly, two placed assemblies attaching (only when pairwise
//! probing is switched on), or a tile enacting one queued signal action.
//! Detachment is never an event of its own: assemblies only come apart as
//! the forced consequence of a deactivation, inside event application.

use stam_core::{Action, Assembly, Dir, GlueId, GlueState, Pos, TileSet};
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    /// Enact the `queue`-th pending action of the tile at `pos`.
    Signal { id: u64, pos: Pos, queue: usize, action: Action },
    /// Attach one copy of a species, shifted by (dx, dy).
    AttachSpecies { id: u64, species: usize, dx: i32, dy: i32 },
    /// Attach placed assembly `b` onto placed assembly `a`.
    AttachPair { a: u64, b: u64, dx: i32, dy: i32 },
}

/// Every offset at which `incoming` can attach to `target` with combined
/// new-bond strength at least `tau`, in ascending (dx, dy) order.
///
/// Any valid placement has at least one matched on/on glue pair, so it is
/// enough to align each on glue of `incoming` with each complementary
/// exposed on glue of `target` and verify the resulting offsets.
pub fn attach_sites(
    set: &TileSet,
    target: &Assembly,
    incoming: &Assembly,
    tau: u32,
) -> Vec<(i32, i32)> {
    // Exposed on glues of the target, keyed by glue and side.
    let mut index: HashMap<(GlueId, Dir), Vec<Pos>> = HashMap::new();
    for (tp, tile) in target.tiles() {
        let ty = set.ty(tile.ty);
        for d in Dir::ALL {
            if target.get(tp.step(d)).is_some() {
                continue; // covered face, nothing can land there
            }
            for slot in ty.side_slot_range(d) {
                if tile.states[slot] == GlueState::On {
                    index.entry((ty.slot(slot).1.glue, d)).or_default().push(tp);
                }
            }
        }
    }
    let mut candidates: BTreeSet<(i32, i32)> = BTreeSet::new();
    for (sp, stile) in incoming.tiles() {
        let sty = set.ty(stile.ty);
        for d in Dir::ALL {
            for slot in sty.side_slot_range(d) {
                if stile.states[slot] != GlueState::On {
                    continue;
                }
                let comp = set.glues.complement(sty.slot(slot).1.glue);
                let Some(anchors) = index.get(&(comp, d.opposite())) else {
                    continue;
                };
                for tp in anchors {
                    let world = tp.step(d.opposite());
                    candidates.insert((world.x - sp.x, world.y - sp.y));
                }
            }
        }
    }
    candidates
        .into_iter()
        .filter(|&(dx, dy)| target.can_attach(set, incoming, dx, dy, tau).is_some())
        .collect()
}
