//! Passive witnesses that close two-party handshakes.
//!
//! A stalled chain head and the structure blocking it cannot talk to
//! each other directly: the head's feeler points one way, the blocker's
//! quit mark another.  Each witness species here bridges one geometric
//! arrangement of such a pair; seating the witness forms the bonds whose
//! binding fires the rules already waiting on the two parties.  The
//! witnesses themselves carry no rules and fall away once a severed glue
//! leaves them under-attached.

use stam_core::geom::Dir;
use stam_core::tile::GlueState::On;

use crate::plan::TilePlan;

/// One-tile detector: binds a feeler `c` through side `s1` and a quit
/// mark `x2` through side `s2`.  All ordered pairs of distinct sides
/// cover every way a blocked head can sit against a quit structure with
/// one shared empty cell touching both.
pub fn detector_single(s1: Dir, s2: Dir) -> TilePlan {
    assert_ne!(s1, s2);
    let mut p = TilePlan::new(format!(
        "det_s_{}{}",
        s1.letter().to_ascii_lowercase(),
        s2.letter().to_ascii_lowercase()
    ));
    p.glue(s1, "c'", 1, On).glue(s2, "x2'", 1, On);
    p
}

/// Two-tile detector for the parallel arrangement: feeler and quit mark
/// point the same way out of adjacent cells, so no single cell touches
/// both.  The receptors sit on side `s` of two tiles offset by `off`
/// (perpendicular to `s`), riveted by an internal strength-2 bond.
pub fn detector_duple(s: Dir, off: Dir) -> (TilePlan, TilePlan) {
    assert!(off != s && off != s.opposite());
    let tag = format!(
        "det_d_{}{}",
        s.letter().to_ascii_lowercase(),
        off.letter().to_ascii_lowercase()
    );
    let mut a = TilePlan::new(format!("{tag}_a"));
    a.glue(s, "c'", 1, On).glue(off, "ddx", 2, On);
    let mut b = TilePlan::new(format!("{tag}_b"));
    b.glue(s, "x2'", 1, On).glue(off.opposite(), "ddx'", 2, On);
    (a, b)
}

/// Rectangle probe: seats under a chain head that has just landed on a
/// still-live B tile (head hook west, B dock east).  Binding the dock
/// fires the B tile's detach cascade; the B then severs its own dock so
/// the probe falls instead of departing with the layer.
pub fn rect_probe() -> (TilePlan, TilePlan) {
    let mut a = TilePlan::new("rdet_a");
    a.glue(Dir::N, "rdh'", 1, On).glue(Dir::E, "rdx", 2, On);
    let mut b = TilePlan::new("rdet_b");
    b.glue(Dir::N, "rd'", 1, On).glue(Dir::W, "rdx'", 2, On);
    (a, b)
}

/// Foreign-landing witness: seats under a head that landed on a B tile
/// whose layer had already quit (dead dock, armed quit mark).  Binding
/// the head's `fl` hook makes the head quit its own layer.
pub fn foreign_landing() -> (TilePlan, TilePlan) {
    let mut a = TilePlan::new("dland_a");
    a.glue(Dir::N, "fl'", 1, On).glue(Dir::E, "ddx", 2, On);
    let mut b = TilePlan::new("dland_b");
    b.glue(Dir::N, "x2'", 1, On).glue(Dir::W, "ddx'", 2, On);
    (a, b)
}

/// Row patch under a live B tile: a row crossing one level below an
/// unfinished layer's B has no anchor there.  The patch bridges the B's
/// liveness mark to the stalled row head; binding the mark makes the B's
/// layer stand down (doubling-flavoured quit) while the row continues
/// east through the patch.
pub fn crossing_under_b() -> TilePlan {
    crossing("ch_b", "c2'")
}

/// Row patch under a live C tile; binding the C's corner feeler quits
/// the C's layer and frees the row to continue.
pub fn crossing_under_c() -> TilePlan {
    crossing("ch_c", "c_se'")
}

fn crossing(name: &str, north: &str) -> TilePlan {
    use stam_core::tile::GlueState::Latent;
    let mut p = TilePlan::new(name);
    p.glue(Dir::N, north, 1, On)
        .glue(Dir::W, "f'", 1, On)
        .glue(Dir::E, "f", 1, Latent)
        .glue(Dir::S, "x2", 1, Latent);
    p.on(Dir::W, "f'", &[(Dir::E, "f", crate::plan::ON), (Dir::S, "x2", crate::plan::ON)]);
    crate::decks::q_bus(
        &mut p,
        Dir::W,
        Dir::E,
        &[(Dir::S, "x2", crate::plan::ON)],
        &[(Dir::S, "x2", crate::plan::ON)],
    );
    crate::decks::scan(&mut p, false);
    p
}

/// Every (side, offset) pair the duple detector comes in.
pub fn duple_arrangements() -> Vec<(Dir, Dir)> {
    let mut v = Vec::new();
    for s in Dir::ALL {
        for off in Dir::ALL {
            if off != s && off != s.opposite() {
                v.push((s, off));
            }
        }
    }
    v
}
