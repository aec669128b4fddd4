//! Bottom-row pre-growth between layers.
//!
//! Each layer's bottom row sits one cell lower than the previous one and
//! one gadget further along the corner diagonal.  Rather than wait for
//! the next layer's chain to come all the way around, a quitting layer's
//! south-west F tile drops a row starter directly below itself; the
//! starter grows a plain eastbound row at the next layer's bottom level.
//! When the next layer's own chain arrives from the west it joins the
//! starter's waiting chain glue, and the detach cascade (parked in the
//! pre-grown row by the early landing on the next B tile) can cross the
//! junction and finish its sweep.

use stam_core::geom::Dir::{E, N, S, W};
use stam_core::tile::GlueState::{Latent, On};

use crate::decks;
use crate::plan::{TilePlan, OFF, ON};

/// The row starter.  Hangs by a single strength-2 bond under a quitting
/// layer's south-west F tile, opens an eastbound chain, and severs its
/// own hanger when the detach cascade crosses it so it departs with the
/// rectangle it has become part of.
pub fn dstart() -> TilePlan {
    let mut p = TilePlan::new("dstart");
    p.glue(N, "dri'", 2, On)
        .glue(W, "f'", 1, On)
        .glue(W, "d", 2, Latent)
        .glue(E, "f", 1, Latent)
        .glue(E, "d'", 2, Latent)
        .glue(S, "x2", 1, Latent);
    p.on(N, "dri'", &[(E, "f", ON)]);
    p.on(E, "f", &[(E, "d'", ON)]);
    p.on(E, "d'", &[(N, "dri'", OFF), (W, "d", ON)]);
    // Standing down kills the parked cascade edge so a quit layer's
    // pre-grown row can never start a partial detach sweep later.
    let quit = [(S, "x2", ON), (W, "d", OFF)];
    decks::q_bus(&mut p, W, E, &quit, &quit);
    decks::scan(&mut p, false);
    p
}
