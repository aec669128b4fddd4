//! Straight-run tile types for frame rings.
//!
//! A ring grows head-first: each tile anchors the layer below on its left
//! side, extends the chain out of its front, and keeps its right side
//! quiet until the layer is told to quit.  Layer 1 hugs the input shape
//! and also carries the mold marks and the walk relay; upper layers hug
//! the layer below and carry the detach cascade instead.

use stam_core::geom::Dir;
use stam_core::tile::GlueState::{Latent, On};

use crate::decks;
use crate::plan::{TilePlan, OFF, ON};

/// The four heading-relative sides of a growing chain tile.
#[derive(Debug, Clone, Copy)]
pub struct Sides {
    /// Anchor side (the layer below): counter-clockwise from the heading.
    pub l: Dir,
    /// Outward side (the layer above): clockwise from the heading.
    pub r: Dir,
    /// Growth direction.
    pub f: Dir,
    /// Chain entry from the predecessor.
    pub b: Dir,
}

impl Sides {
    pub fn of(h: Dir) -> Sides {
        Sides {
            l: h.rot_ccw(),
            r: h.rot_cw(),
            f: h,
            b: h.opposite(),
        }
    }
}

/// Layer-1 straight tile heading `h`.
///
/// Seats on the input's boundary glue plus the predecessor's chain glue.
/// The seating rule probes the cell ahead with a second input receptor,
/// so a concave corner of the input captures the chain and turns it;
/// otherwise the probe stays unmatched and the plain front continuation
/// recruits the next tile.  Seating also arms the mold marks over the
/// input and the walk-relay entry behind.
pub fn path1(h: Dir) -> TilePlan {
    let s = Sides::of(h);
    let mut p = TilePlan::new(format!("path1_{}", h.letter()));
    p.glue(s.l, "x'", 1, On)
        .glue(s.l, "y", 1, Latent)
        .glue(s.l, "w", 1, Latent)
        .glue(s.f, "f", 1, Latent)
        .glue(s.f, "x'", 1, Latent)
        .glue(s.f, "y", 1, Latent)
        .glue(s.f, "w", 1, Latent)
        .glue(s.r, "f", 1, Latent)
        .glue(s.r, "x2", 1, Latent)
        .glue(s.r, "g", 1, Latent)
        .glue(s.r, "q", 1, Latent)
        .glue(s.b, "f'", 1, On);
    p.on(
        s.l,
        "x'",
        &[
            (s.f, "f", ON),
            (s.f, "x'", ON),
            (s.l, "y", ON),
            (s.l, "w", ON),
            (s.b, "g'", ON),
        ],
    );
    // Front probe hit: the input continues around a concave corner.  The
    // chain turns toward the old right (walk offered there too), and the
    // turn is also proof the layer is not a rectangle, so it quits: the
    // wave runs back down the chain and a quit mark waits on the right
    // for every tile that attaches after the turn.
    p.on(
        s.f,
        "x'",
        &[
            (s.r, "f", ON),
            (s.f, "y", ON),
            (s.f, "w", ON),
            (s.r, "g", ON),
            (s.b, "q", ON),
            (s.r, "q", ON),
            (s.r, "x2", ON),
        ],
    );
    decks::walk_relay(&mut p, s.b, s.f);
    // Border release severs the input anchors but leaves the mold marks.
    p.on(s.b, "br'", &[(s.l, "x'", OFF), (s.f, "x'", OFF)]);
    decks::q_bus(&mut p, s.f, s.b, &[(s.r, "x2", ON)], &[(s.r, "x2", ON)]);
    decks::scan(&mut p, false);
    p
}

/// Upper-layer straight tile heading `h`.
///
/// Seats on the quit-armed right side of the layer below.  Seating arms a
/// collision feeler on the outward side; the feeler binding (a detector
/// seated against a blocked front) quits the layer.  The front also
/// carries a landing receptor so a later layer's head that runs onto this
/// tile's row end announces itself.
pub fn path2(h: Dir) -> TilePlan {
    let s = Sides::of(h);
    let mut p = TilePlan::new(format!("path2_{}", h.letter()));
    p.glue(s.l, "x2'", 1, On)
        .glue(s.f, "f", 1, Latent)
        .glue(s.f, "lb'", 1, On)
        .glue(s.r, "c", 1, Latent)
        .glue(s.r, "x2", 1, Latent)
        .glue(s.r, "rdh", 1, Latent)
        .glue(s.r, "fl", 1, Latent)
        .glue(s.b, "f'", 1, On);
    p.on(s.l, "x2'", &[(s.f, "f", ON), (s.r, "c", ON)]);
    // Collision quit: a detector bridged the feeler to a foreign quit
    // mark, so this whole layer stands down and arms its own right side.
    p.on(
        s.r,
        "c",
        &[
            (s.f, "q", ON),
            (s.b, "q", ON),
            (s.r, "c", OFF),
            (s.r, "x2", ON),
            (s.f, "d'", OFF),
            (s.r, "rdh", OFF),
            (s.r, "fl", OFF),
        ],
    );
    // Landing: this head ran onto a settled row end.  Expose the probe
    // hook and the foreign-landing witness; whichever partner the row
    // offers decides whether the landing was home or foreign.
    p.on(s.f, "lb'", &[(s.r, "rdh", ON), (s.r, "fl", ON)]);
    p.on(s.r, "fl", &[(s.f, "q", ON), (s.b, "q", ON)]);
    let kill = [
        (s.l, "x2'", OFF),
        (s.r, "c", OFF),
        (s.r, "rdh", OFF),
        (s.r, "fl", OFF),
    ];
    decks::detach_cascade(&mut p, s.f, s.b, &kill);
    let quit = [
        (s.r, "x2", ON),
        (s.r, "c", OFF),
        (s.f, "d'", OFF),
        (s.r, "rdh", OFF),
        (s.r, "fl", OFF),
    ];
    decks::q_bus(&mut p, s.f, s.b, &quit, &quit);
    decks::scan(&mut p, false);
    p
}

/// Eastbound bottom-row variant of [`path2`]: carries the corner-gadget
/// handshake receptor so the south-east gadget can tell a row passing
/// underneath it apart from its own back seat.
pub fn path2_e_bottom() -> TilePlan {
    let mut p = path2(Dir::E);
    p.set_name("path2_eb");
    p.glue(Dir::N, "cg'", 1, On).glue(Dir::N, "vdr", 1, Latent);
    p.on(Dir::N, "cg'", &[(Dir::N, "vdr", ON)]);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocabulary;
    use stam_core::tile::TileSet;

    #[test]
    fn path1_probe_and_anchor_share_the_left_receptor_label() {
        let p = path1(Dir::N);
        // Heading north: anchor west, probe north, chain south/north.
        let mut set = TileSet::new();
        vocabulary::register_all(&mut set);
        let id = p.realize(&mut set);
        let t = set.ty(id);
        let mut on_w = 0;
        let mut lat_n = 0;
        for i in 0..t.slot_count() {
            let (side, g) = t.slot(i);
            let label = set.glues.label(g.glue);
            if label == "x'" && side == Dir::W && g.initial == On {
                on_w += 1;
            }
            if label == "x'" && side == Dir::N && g.initial == Latent {
                lat_n += 1;
            }
        }
        assert_eq!((on_w, lat_n), (1, 1));
    }

    #[test]
    fn path2_quits_cleanly() {
        let p = path2(Dir::E);
        // The collision rule must both quit and disarm the feeler.
        let rule = p
            .rules()
            .iter()
            .find(|((d, g), _)| *d == Dir::S && g == "c")
            .expect("feeler rule");
        assert!(rule.1.iter().any(|(d, g, e)| *d == Dir::S && g == "x2" && *e == ON));
        assert!(rule.1.iter().any(|(d, g, e)| *d == Dir::S && g == "c" && *e == OFF));
    }
}
