//! The assembled soup: every frame-building species realized into one closed
//! tile set, with a template assembly per species.
//!
//! `build_frame_catalog` is the single entry point the simulator uses to stock
//! a soup.  Species templates are positionless (coordinates are relative); the
//! scheduler translates a copy wherever an attachment fits.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use stam_core::assembly::{Assembly, TileInstance};
use stam_core::geom::{Dir, Pos};
use stam_core::tile::{Effect, TileSet};

use crate::collision;
use crate::doubling;
use crate::gadgets::{self, CORNERS};
use crate::leader;
use crate::paths;
use crate::plan::TilePlan;
use crate::vocabulary;

/// A closed tile set plus one template assembly per species name.
pub struct FrameCatalog {
    pub set: TileSet,
    pub species: BTreeMap<String, Assembly>,
}

impl FrameCatalog {
    pub fn species_named(&self, name: &str) -> &Assembly {
        self.species
            .get(name)
            .unwrap_or_else(|| panic!("no species named {name:?}"))
    }
}

fn single(set: &mut TileSet, species: &mut BTreeMap<String, Assembly>, plan: &TilePlan) {
    let id = plan.realize(set);
    let prev = species.insert(plan.name().to_string(), Assembly::single(set, id));
    assert!(prev.is_none(), "species {:?} defined twice", plan.name());
}

fn multi(
    set: &mut TileSet,
    species: &mut BTreeMap<String, Assembly>,
    name: &str,
    parts: &[(Pos, &TilePlan)],
) {
    let mut asm = Assembly::new();
    for (pos, plan) in parts {
        let id = plan.realize(set);
        asm.insert(*pos, TileInstance::new(set, id));
    }
    let prev = species.insert(name.to_string(), asm);
    assert!(prev.is_none(), "species {name:?} defined twice");
}

/// Build the full frame-building catalog.
pub fn build_frame_catalog() -> FrameCatalog {
    let mut set = TileSet::new();
    vocabulary::register_all(&mut set);
    let mut species = BTreeMap::new();

    // Chain tiles.  The lower lane runs in all four headings; the upper lane
    // skips plain east because the eastbound upper tile doubles as the stack
    // hand-off receptor.
    for h in Dir::ALL {
        single(&mut set, &mut species, &paths::path1(h));
    }
    for h in [Dir::N, Dir::S, Dir::W] {
        single(&mut set, &mut species, &paths::path2(h));
    }
    single(&mut set, &mut species, &paths::path2_e_bottom());

    // Corner gadget triples, seated on a convex-southeast substrate corner:
    // A over the corner's east face, C below A, B west of C under the corner.
    multi(
        &mut set,
        &mut species,
        "cg1",
        &[
            (Pos::new(0, 0), &gadgets::se1_a()),
            (Pos::new(0, -1), &gadgets::se1_c()),
            (Pos::new(-1, -1), &gadgets::se1_b()),
        ],
    );
    multi(
        &mut set,
        &mut species,
        "cg2",
        &[
            (Pos::new(0, 0), &gadgets::se2_a()),
            (Pos::new(0, -1), &gadgets::se2_c()),
            (Pos::new(-1, -1), &gadgets::se2_b()),
        ],
    );

    // Concave-turn duples: the corner tile seats on a stalled chain head's
    // front face, the flank tile continues the lane around the turn.
    for c in CORNERS {
        let (dx, dy) = c.out().offset();
        let k1 = gadgets::k1(c);
        let f1 = gadgets::f1(c);
        multi(
            &mut set,
            &mut species,
            &format!("turn1_{}", c.tag()),
            &[(Pos::new(0, 0), &k1), (Pos::new(dx, dy), &f1)],
        );
        let k2 = gadgets::k2(c);
        let f2 = gadgets::f2(c);
        multi(
            &mut set,
            &mut species,
            &format!("turn2_{}", c.tag()),
            &[(Pos::new(0, 0), &k2), (Pos::new(dx, dy), &f2)],
        );
    }

    // Collision witnesses: single-cell detectors for facing/adjacent feeler
    // and quit-mark pairs, riveted duples for the parallel arrangements.
    for s1 in Dir::ALL {
        for s2 in Dir::ALL {
            if s1 != s2 {
                single(&mut set, &mut species, &collision::detector_single(s1, s2));
            }
        }
    }
    for (s, off) in collision::duple_arrangements() {
        let (a, b) = collision::detector_duple(s, off);
        let (dx, dy) = off.offset();
        let name = format!(
            "det_d_{}{}",
            s.letter().to_ascii_lowercase(),
            off.letter().to_ascii_lowercase()
        );
        multi(
            &mut set,
            &mut species,
            &name,
            &[(Pos::new(0, 0), &a), (Pos::new(dx, dy), &b)],
        );
    }
    {
        let (a, b) = collision::rect_probe();
        multi(
            &mut set,
            &mut species,
            "rdet",
            &[(Pos::new(0, 0), &a), (Pos::new(1, 0), &b)],
        );
        let (a, b) = collision::foreign_landing();
        multi(
            &mut set,
            &mut species,
            "dland",
            &[(Pos::new(0, 0), &a), (Pos::new(1, 0), &b)],
        );
    }
    single(&mut set, &mut species, &collision::crossing_under_b());
    single(&mut set, &mut species, &collision::crossing_under_c());

    // Width doubling and leader election.
    single(&mut set, &mut species, &doubling::dstart());
    single(&mut set, &mut species, &leader::primer());
    single(&mut set, &mut species, &leader::scan_west_end());
    single(&mut set, &mut species, &leader::scan_east_end());

    FrameCatalog { set, species }
}

/// Tile types that ride in a frame layer itself.  A detached assembly is
/// counted as frame-bearing when it contains any of these; helpers that can
/// end up loose after a quit (crossing markers, witnesses) are excluded.
pub fn is_frame_class(type_name: &str) -> bool {
    const PREFIXES: [&str; 9] = [
        "path1", "path2", "se1", "se2", "k1", "k2", "f1", "f2", "dstart",
    ];
    PREFIXES.iter().any(|p| type_name.starts_with(p))
}

/// Render every tile type's glue decks and rules as a fixed-width text table.
pub fn wiring_table(set: &TileSet) -> String {
    let mut out = String::new();
    for (_, ty) in set.types() {
        writeln!(out, "{}", ty.name).unwrap();
        for d in Dir::ALL {
            for slot in ty.side(d) {
                writeln!(
                    out,
                    "  {d} {:<6} s{} {}",
                    set.glues.label(slot.glue),
                    set.glues.strength(slot.glue),
                    slot.initial.letter()
                )
                .unwrap();
            }
        }
        for (d, g, actions) in ty.rules() {
            write!(out, "  [{d} {}] ->", set.glues.label(g)).unwrap();
            for a in actions {
                let sign = match a.effect {
                    Effect::Activate => '+',
                    Effect::Deactivate => '-',
                };
                write!(out, " {}@{}{sign}", set.glues.label(a.glue), a.side).unwrap();
            }
            out.push('\n');
        }
    }
    out
}
