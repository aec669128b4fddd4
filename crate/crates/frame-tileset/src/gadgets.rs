//! Corner machinery: the south-east seat gadgets and the turn duples.
//!
//! A frame layer is a chain that starts and ends at a three-tile gadget
//! seated on (or diagonally below) a convex south-east corner.  The
//! gadget's A tile launches the chain northward, the C tile holds the
//! bookkeeping for the next layer and for the leader election, and the B
//! tile is where the chain lands when it has gone all the way around.
//! Left turns mid-chain are made by two-tile K/F duples: K accepts the
//! stalled head's forward glue, F anchors the substrate around the
//! corner, and a strength-2 internal bond holds the pair rigid.

use stam_core::geom::Dir;
use stam_core::tile::GlueState::{Latent, On};

use crate::decks;
use crate::paths;
use crate::plan::{TilePlan, OFF, ON};

use Dir::{E, N, S, W};

/// Layer-1 gadget, A tile: first cell of the ring, east of the corner.
///
/// Seats by its west input anchor (paired with the B tile's north one).
/// Seating starts the ring, marks the mold, wakes the C tile through the
/// internal `ka` handshake, and emits the walk that will chase the ring
/// all the way around.
pub fn se1_a() -> TilePlan {
    let mut p = TilePlan::new("se1_a");
    p.glue(W, "x'", 1, On)
        .glue(W, "y", 1, Latent)
        .glue(W, "w", 1, Latent)
        .glue(N, "f", 1, Latent)
        .glue(N, "x'", 1, Latent)
        .glue(N, "y", 1, Latent)
        .glue(N, "w", 1, Latent)
        .glue(E, "x2", 1, Latent)
        .glue(E, "g", 1, Latent)
        .glue(S, "tri", 2, On)
        .glue(S, "ka", 1, Latent);
    p.on(
        W,
        "x'",
        &[
            (N, "f", ON),
            (N, "x'", ON),
            (W, "y", ON),
            (W, "w", ON),
            (S, "ka", ON),
            (N, "g", ON),
            (S, "g'", ON),
        ],
    );
    // Probe hit: the input rises directly above, so the ring turns east
    // along its south side instead of climbing.
    p.on(N, "x'", &[(E, "f", ON), (N, "y", ON), (N, "w", ON), (E, "g", ON)]);
    p.on(S, "br'", &[(W, "x'", OFF), (N, "x'", OFF)]);
    decks::walk_relay(&mut p, S, N);
    decks::q_bus(&mut p, N, S, &[(E, "x2", ON)], &[(E, "x2", ON)]);
    decks::scan(&mut p, false);
    p
}

/// Layer-1 gadget, B tile: the ring's landing pad and, once elected, the
/// leader.  The chain arriving from the west quits the finished layer;
/// the walk arriving from the west proves the mold is complete and turns
/// into the border release; the election signal arriving from the C side
/// raises the seed mark over the vacated corner cell.
pub fn se1_b() -> TilePlan {
    let mut p = TilePlan::new("se1_b");
    p.glue(N, "x'", 1, On)
        .glue(N, "y", 1, Latent)
        .glue(N, "w", 1, Latent)
        .glue(N, "z", 1, Latent)
        .glue(W, "f'", 1, On)
        .glue(W, "g'", 1, Latent)
        .glue(E, "tri2'", 2, On)
        .glue(E, "u'", 1, On)
        .glue(E, "g", 1, Latent)
        .glue(S, "x2", 1, Latent);
    for d in Dir::ALL {
        p.glue(d, "br", 1, Latent);
    }
    p.on(N, "x'", &[(N, "y", ON), (N, "w", ON), (W, "g'", ON)]);
    p.on(W, "f'", &[(W, "q", ON), (E, "q", ON)]);
    p.on(E, "u'", &[(N, "z", ON), (E, "g", ON)]);
    p.on(
        W,
        "g'",
        &[
            (N, "br", ON),
            (E, "br", ON),
            (S, "br", ON),
            (W, "br", ON),
            (N, "x'", OFF),
            (E, "g", ON),
        ],
    );
    decks::q_bus(&mut p, W, E, &[(S, "x2", ON)], &[(S, "x2", ON)]);
    decks::scan(&mut p, false);
    p
}

/// Layer-1 gadget, C tile: diagonal bookkeeping cell.
///
/// Once the layer quits, its armed east and south faces seat the next
/// layer's gadget.  When the detached rectangle's cascade reaches back
/// down to this tile it exposes the primer dock; the primer (or, from
/// deeper stacks, the arriving row scan) fires the election westward
/// into the B tile.
pub fn se1_c() -> TilePlan {
    let mut p = TilePlan::new("se1_c");
    c_common(&mut p);
    p.glue(W, "u", 1, Latent);
    p.on(N, "ka'", &[(E, "c_se", ON), (S, "c_se", ON), (W, "g'", ON)]);
    p.on(E, "p2'", &[(W, "u", ON), (E, "p2'", OFF)]);
    decks::walk_relay(&mut p, W, N);
    decks::scan(&mut p, true);
    p.on(E, "sp'", &[(W, "u", ON)]);
    p
}

/// Upper-layer gadget, A tile: like the layer-1 A but seated on the
/// previous layer's quit marks, and additionally the terminus of the
/// detach cascade: when the cascade comes down the east flank it severs
/// this tile's own anchor and pokes the primer handshake into the C tile
/// it seated on.
pub fn se2_a() -> TilePlan {
    let mut p = TilePlan::new("se2_a");
    p.glue(W, "x2'", 1, On)
        .glue(W, "p", 1, Latent)
        .glue(N, "f", 1, Latent)
        .glue(N, "d'", 2, Latent)
        .glue(E, "c", 1, Latent)
        .glue(E, "x2", 1, Latent)
        .glue(S, "tri", 2, On)
        .glue(S, "ka", 1, Latent);
    p.on(W, "x2'", &[(N, "f", ON), (E, "c", ON), (S, "ka", ON)]);
    p.on(N, "f", &[(N, "d'", ON)]);
    p.on(N, "d'", &[(W, "p", ON), (E, "c", OFF)]);
    p.on(W, "p", &[(W, "x2'", OFF)]);
    p.on(
        E,
        "c",
        &[(N, "q", ON), (S, "q", ON), (E, "c", OFF), (E, "x2", ON), (N, "d'", OFF)],
    );
    let quit = [(E, "c", OFF), (E, "x2", ON), (N, "d'", OFF)];
    decks::q_bus(&mut p, N, S, &quit, &quit);
    decks::scan(&mut p, false);
    p
}

/// Upper-layer gadget, B tile.  A chain landing here while the layer is
/// still live is the layer's own ring closing: the landing arms the
/// rectangle probe dock, and the seated probe fires the detach cascade
/// westward into the landed chain.  On a layer that has already quit the
/// dock stays dead and the foreign-landing witness quits the lander
/// instead.
pub fn se2_b() -> TilePlan {
    let mut p = TilePlan::new("se2_b");
    p.glue(N, "x2'", 1, On)
        .glue(W, "f'", 1, On)
        .glue(W, "lb", 1, Latent)
        .glue(W, "d", 2, Latent)
        .glue(E, "tri2'", 2, On)
        .glue(S, "x2", 1, Latent)
        .glue(S, "rd", 1, Latent)
        .glue(S, "c2", 1, On);
    p.on(W, "f'", &[(S, "rd", ON), (S, "c2", OFF), (W, "lb", ON)]);
    p.on(S, "rd", &[(W, "d", ON), (S, "rd", OFF)]);
    p.on(S, "c2", &[(E, "q2", ON), (W, "q2", ON)]);
    let quit = [(S, "x2", ON), (S, "c2", OFF), (S, "rd", OFF)];
    decks::q_bus(&mut p, W, E, &quit, &quit);
    decks::scan(&mut p, false);
    p
}

/// Upper-layer gadget, C tile.  Same bookkeeping as the layer-1 C, but
/// the election it fires is the start of the row scan rather than the
/// scan's final hop.
pub fn se2_c() -> TilePlan {
    let mut p = TilePlan::new("se2_c");
    c_common(&mut p);
    p.on(N, "ka'", &[(E, "c_se", ON), (S, "c_se", ON)]);
    p.on(E, "p2'", &[(W, "sp", ON), (W, "spL", ON), (E, "p2'", OFF)]);
    decks::scan(&mut p, false);
    p
}

/// Glues and rules shared by both C tiles.
fn c_common(p: &mut TilePlan) {
    p.glue(N, "tri'", 2, On)
        .glue(N, "ka'", 1, On)
        .glue(W, "tri2", 2, On)
        .glue(E, "x2", 1, Latent)
        .glue(E, "p'", 1, Latent)
        .glue(E, "p2'", 2, Latent)
        .glue(E, "c_se", 1, Latent)
        .glue(E, "vdr", 1, Latent)
        .glue(S, "x2", 1, Latent)
        .glue(S, "c_se", 1, Latent)
        .glue(S, "cg", 1, Latent)
        .glue(S, "vdr'", 1, On);
    p.on(E, "x2", &[(E, "p'", ON)]);
    p.on(S, "x2", &[(S, "cg", ON)]);
    p.on(E, "p'", &[(E, "p2'", ON), (S, "x2", OFF)]);
    p.on(S, "vdr'", &[(E, "vdr", ON), (E, "x2", ON), (N, "q2", ON), (W, "q2", ON)]);
    let blocked = [
        (N, "q", ON),
        (W, "q", ON),
        (E, "c_se", OFF),
        (S, "c_se", OFF),
        (E, "x2", ON),
        (S, "x2", ON),
    ];
    p.on(E, "c_se", &blocked);
    p.on(S, "c_se", &blocked);
    let quit = [(E, "x2", ON), (S, "x2", ON), (E, "c_se", OFF), (S, "c_se", OFF)];
    let mut quit2 = quit.to_vec();
    quit2.push((E, "vdr", ON));
    decks::q_bus(p, W, N, &quit, &quit2);
}

/// The four left-turn corners a chain can take, named by compass corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    Ne,
    Nw,
    Sw,
    Se,
}

pub const CORNERS: [Corner; 4] = [Corner::Ne, Corner::Nw, Corner::Sw, Corner::Se];

impl Corner {
    pub fn tag(self) -> &'static str {
        match self {
            Corner::Ne => "ne",
            Corner::Nw => "nw",
            Corner::Sw => "sw",
            Corner::Se => "se",
        }
    }

    /// Incoming chain side of the K tile (where the stalled head is).
    pub fn entry(self) -> Dir {
        match self {
            Corner::Ne => S,
            Corner::Nw => E,
            Corner::Sw => N,
            Corner::Se => W,
        }
    }

    /// Side of the K tile the F tile extends from; also the new heading.
    pub fn out(self) -> Dir {
        match self {
            Corner::Ne => W,
            Corner::Nw => S,
            Corner::Sw => E,
            Corner::Se => N,
        }
    }

    /// The two faces of the K tile pointing away from the turn.
    pub fn outers(self) -> [Dir; 2] {
        match self {
            Corner::Ne => [N, E],
            Corner::Nw => [N, W],
            Corner::Sw => [S, W],
            Corner::Se => [S, E],
        }
    }
}

/// Layer-1 K tile: occupies the stalled head's front cell and relays the
/// walk and the quit bus around the turn.
pub fn k1(c: Corner) -> TilePlan {
    let mut p = TilePlan::new(format!("k1_{}", c.tag()));
    let (entry, out) = (c.entry(), c.out());
    let [o1, o2] = c.outers();
    p.glue(entry, "f'", 1, On)
        .glue(out, "kdx", 2, On)
        .glue(o1, "x2", 1, Latent)
        .glue(o2, "x2", 1, Latent);
    p.on(entry, "f'", &[(entry, "g'", ON)]);
    decks::walk_relay(&mut p, entry, out);
    let quit = [(o1, "x2", ON), (o2, "x2", ON)];
    decks::q_bus(&mut p, entry, out, &quit, &quit);
    decks::scan(&mut p, false);
    p
}

/// Layer-1 F tile: a straight tile whose chain entry is the rigid duple
/// bond to its K instead of a forward glue.  The south-west F also seeds
/// the next layer's bottom row starter when its layer quits.
pub fn f1(c: Corner) -> TilePlan {
    let mut p = paths::path1(c.out());
    p.set_name(format!("f1_{}", c.tag()));
    let b = c.out().opposite();
    p.drop_glue(b, "f'");
    p.glue(b, "kdx'", 2, On);
    if c == Corner::Sw {
        p.glue(S, "dri", 2, Latent);
        p.on(c.out(), "q'", &[(S, "dri", ON)]);
        p.on(b, "q'", &[(S, "dri", ON)]);
    }
    p
}

/// Upper-layer K tile: as [`k1`] minus the walk, plus the detach-cascade
/// relay around the turn.
pub fn k2(c: Corner) -> TilePlan {
    let mut p = TilePlan::new(format!("k2_{}", c.tag()));
    let (entry, out) = (c.entry(), c.out());
    let [o1, o2] = c.outers();
    p.glue(entry, "f'", 1, On)
        .glue(out, "kdx", 2, On)
        .glue(out, "d'", 2, Latent)
        .glue(entry, "d", 2, Latent)
        .glue(o1, "x2", 1, Latent)
        .glue(o2, "x2", 1, Latent);
    p.on(entry, "f'", &[(out, "d'", ON)]);
    p.on(out, "d'", &[(entry, "d", ON)]);
    let quit = [(o1, "x2", ON), (o2, "x2", ON), (out, "d'", OFF)];
    decks::q_bus(&mut p, entry, out, &quit, &quit);
    decks::scan(&mut p, false);
    p
}

/// Upper-layer F tile; see [`f1`].
pub fn f2(c: Corner) -> TilePlan {
    let mut p = paths::path2(c.out());
    p.set_name(format!("f2_{}", c.tag()));
    let b = c.out().opposite();
    p.drop_glue(b, "f'");
    p.glue(b, "kdx'", 2, On);
    if c == Corner::Sw {
        p.glue(S, "dri", 2, Latent);
        p.on(c.out(), "q'", &[(S, "dri", ON)]);
        p.on(b, "q'", &[(S, "dri", ON)]);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_frames_are_consistent() {
        for c in CORNERS {
            // Entry, out and the two outers partition the four sides.
            let mut seen = [false; 4];
            for d in [c.entry(), c.out(), c.outers()[0], c.outers()[1]] {
                assert!(!seen[d.index()], "{:?} repeats {d}", c);
                seen[d.index()] = true;
            }
            // The turn is a left turn: out is counter-clockwise of the
            // heading that entered (which points from entry into the K).
            assert_eq!(c.entry().opposite().rot_ccw(), c.out());
        }
    }

    #[test]
    fn sw_f_tiles_seed_the_row_starter_on_quit_only() {
        for (p, label) in [(f1(Corner::Sw), "f1"), (f2(Corner::Sw), "f2")] {
            for ((side, trig), acts) in p.rules() {
                let fires_dri = acts.iter().any(|(d, g, e)| *d == S && g == "dri" && *e == ON);
                if trig == "q'" {
                    assert!(fires_dri, "{label} quit on {side} must fire dri");
                } else {
                    assert!(!fires_dri, "{label} {trig}@{side} must not fire dri");
                }
            }
        }
    }

    #[test]
    fn b_tiles_guard_the_probe_dock() {
        // The layer-quit must kill the dock before any foreign landing
        // can arm it; both effects target the same slot.
        let p = se2_b();
        let quit = p
            .rules()
            .iter()
            .find(|((d, g), _)| *d == W && g == "q'")
            .expect("quit relay");
        assert!(quit.1.iter().any(|(d, g, e)| *d == S && g == "rd" && *e == OFF));
        let land = p
            .rules()
            .iter()
            .find(|((d, g), _)| *d == W && g == "f'")
            .expect("landing rule");
        assert!(land.1.iter().any(|(d, g, e)| *d == S && g == "rd" && *e == ON));
    }
}
