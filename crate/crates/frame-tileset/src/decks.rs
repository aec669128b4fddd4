//! Shared signal decks layered onto frame tiles.
//!
//! Each function adds one overlay (glues plus rules) to a [`TilePlan`].
//! Tile-specific growth wiring lives in the path/gadget modules; the
//! decks here are the overlays common to many tile types: the leader
//! scan relay, the quit bus, the mold walk relay, and the layer-detach
//! cascade.

use stam_core::geom::Dir;
use stam_core::tile::Effect;
use stam_core::tile::GlueState::{Latent, On};

use crate::plan::{TilePlan, ON};

/// Leader-scan relay deck.  Every settled frame tile relays `sp`
/// westward, turns it around at exposed west faces (the west scan
/// singleton binds `sp`+`spL` there), relays `spR` eastward, and bumps
/// the scan one row north at exposed east faces (east singleton binds
/// `spR`+`sp2`).
///
/// `override_east` suppresses the westward relay rule for `sp'`; the
/// layer-1 corner tile replaces it with the election signal.
pub fn scan(p: &mut TilePlan, override_east: bool) {
    p.glue(Dir::E, "sp'", 1, On)
        .glue(Dir::E, "spR", 1, Latent)
        .glue(Dir::E, "sp2", 1, Latent)
        .glue(Dir::W, "sp", 1, Latent)
        .glue(Dir::W, "spL", 1, Latent)
        .glue(Dir::W, "spR'", 1, On)
        .glue(Dir::N, "spU", 1, Latent)
        .glue(Dir::S, "spU'", 1, On);
    if !override_east {
        p.on(Dir::E, "sp'", &[(Dir::W, "sp", ON), (Dir::W, "spL", ON)]);
    }
    p.on(Dir::W, "spL", &[(Dir::E, "spR", ON), (Dir::E, "sp2", ON)]);
    p.on(Dir::W, "spR'", &[(Dir::E, "spR", ON), (Dir::E, "sp2", ON)]);
    p.on(Dir::E, "sp2", &[(Dir::N, "spU", ON)]);
    p.on(Dir::S, "spU'", &[(Dir::W, "sp", ON), (Dir::W, "spL", ON)]);
}

/// Quit bus between the two ring-order neighbor sides `a` and `b`.
/// Receiving `q` (or the doubling variant `q2`) on either side relays
/// it out the other side and fires the tile's quit actions.
pub fn q_bus(
    p: &mut TilePlan,
    a: Dir,
    b: Dir,
    quit: &[(Dir, &str, Effect)],
    quit2: &[(Dir, &str, Effect)],
) {
    for d in [a, b] {
        p.glue(d, "q'", 1, On)
            .glue(d, "q", 1, Latent)
            .glue(d, "q2'", 1, On)
            .glue(d, "q2", 1, Latent);
    }
    p.on(a, "q'", &[(b, "q", ON)]).on(a, "q'", quit);
    p.on(b, "q'", &[(a, "q", ON)]).on(b, "q'", quit);
    p.on(a, "q2'", &[(b, "q2", ON)]).on(a, "q2'", quit2);
    p.on(b, "q2'", &[(a, "q2", ON)]).on(b, "q2'", quit2);
}

/// Mold-walk relay for a layer-1 ring tile whose walk entry is `entry`
/// and whose straight continuation is `exit`.  The entry receptor is
/// latent and must be armed by the tile's seating rule, so a stalled
/// head's exposed walk emitter can never recruit a tile by itself.
/// The border-release message `br` chases the walk along the armed
/// `br'` trail and fans out on all four sides so it bridges ring turns.
pub fn walk_relay(p: &mut TilePlan, entry: Dir, exit: Dir) {
    p.glue(entry, "g'", 1, Latent)
        .glue(entry, "br'", 1, Latent)
        .glue(exit, "g", 1, Latent);
    for d in Dir::ALL {
        p.glue(d, "br", 1, Latent);
    }
    p.on(entry, "g'", &[(exit, "g", ON), (entry, "br'", ON)]);
    p.on(
        entry,
        "br'",
        &[(Dir::N, "br", ON), (Dir::E, "br", ON), (Dir::S, "br", ON), (Dir::W, "br", ON)],
    );
}

/// Layer-detach cascade deck for an upper-layer ring tile: `d'` on
/// `front` is armed lazily once the growth chain continues (stalled
/// heads never expose it), and receiving the strength-2 detach bond
/// fires `kill` (the tile's anchor shutdown) and passes the cascade
/// backward out of `back`.
pub fn detach_cascade(p: &mut TilePlan, front: Dir, back: Dir, kill: &[(Dir, &str, Effect)]) {
    p.glue(front, "d'", 2, Latent).glue(back, "d", 2, Latent);
    p.on(front, "f", &[(front, "d'", ON)]);
    p.on(front, "d'", &[(back, "d", ON)]);
    p.on(front, "d'", kill);
}
