//! Build the passive input assembly for a shape.
//!
//! Interior faces join neighbouring tiles with strength-2 `int` bonds
//! (unprimed on N and E, primed on S and W, so facing pairs complement);
//! every perimeter face exposes a strength-1 `x`, always on. The tiles
//! carry no rules. Tile types are named by their exposed-face profile and
//! reused across calls on the same tile set.

use crate::shape::{is_hole_free, Shape, ShapeError};
use stam_core::{Assembly, Dir, GlueState, TileInstance, TileSet, TileTypeId};

fn profile_type(set: &mut TileSet, exposed: [bool; 4]) -> TileTypeId {
    let mut name = String::from("alpha-");
    for d in Dir::ALL {
        if exposed[d.index()] {
            name.push(d.letter().to_ascii_lowercase());
        }
    }
    if name == "alpha-" {
        name.push_str("core");
    }
    if let Ok(id) = set.type_id(&name) {
        return id;
    }
    let mut b = set.builder(&name);
    for d in Dir::ALL {
        if exposed[d.index()] {
            b = b.glue(d, "x", 1, GlueState::On);
        } else {
            let label = match d {
                Dir::N | Dir::E => "int",
                Dir::S | Dir::W => "int'",
            };
            b = b.glue(d, label, 2, GlueState::On);
        }
    }
    b.build().expect("input profile types are well formed")
}

/// Assemble the shape out of passive tiles, one per cell, at the shape's
/// own coordinates. Rejects shapes with holes: their input assemblies
/// would trap frame growth inside.
pub fn build_input_assembly(set: &mut TileSet, s: &Shape) -> Result<Assembly, ShapeError> {
    if !is_hole_free(s) {
        return Err(ShapeError::NotHoleFree);
    }
    let mut asm = Assembly::new();
    for cell in s.cells() {
        let mut exposed = [false; 4];
        for d in Dir::ALL {
            exposed[d.index()] = !s.contains(cell.step(d));
        }
        let ty = profile_type(set, exposed);
        asm.insert(cell, TileInstance::new(set, ty));
    }
    Ok(asm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::parse_shape;
    use stam_core::GlueId;

    fn exposed_x_count(set: &TileSet, asm: &Assembly) -> usize {
        let x = set.glues.lookup("x").unwrap();
        let mut n = 0;
        for (pos, inst) in asm.tiles() {
            let ty = set.ty(inst.ty);
            for d in Dir::ALL {
                if asm.get(pos.step(d)).is_some() {
                    continue;
                }
                if ty.slot_index(d, x).is_some() {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn square_counts_and_stability() {
        let mut set = TileSet::new();
        let s = parse_shape("##\n##").unwrap();
        let asm = build_input_assembly(&mut set, &s).unwrap();
        assert_eq!(asm.len(), 4);
        let bonds = asm.bonds(&set);
        assert_eq!(bonds.len(), 4);
        assert!(bonds.iter().all(|b| b.strength == 2));
        assert!(asm.is_tau_stable(&set, 2));
        assert_eq!(exposed_x_count(&set, &asm), 8);
    }

    #[test]
    fn ell_reuses_types_and_exposes_full_perimeter() {
        let mut set = TileSet::new();
        let sq = parse_shape("##\n##").unwrap();
        build_input_assembly(&mut set, &sq).unwrap();
        let before = set.type_count();
        let ell = parse_shape("#.\n##").unwrap();
        let asm = build_input_assembly(&mut set, &ell).unwrap();
        // The L's three cells: new profiles new, shared profiles reused.
        assert!(set.type_count() > before);
        assert_eq!(exposed_x_count(&set, &asm), 8);
        assert!(asm.is_tau_stable(&set, 2));
        // Again with the same shapes: nothing new to add.
        let after = set.type_count();
        build_input_assembly(&mut set, &sq).unwrap();
        build_input_assembly(&mut set, &ell).unwrap();
        assert_eq!(set.type_count(), after);
    }

    #[test]
    fn holed_shape_is_rejected() {
        let mut set = TileSet::new();
        let ring = parse_shape("###\n#.#\n###").unwrap();
        assert!(matches!(
            build_input_assembly(&mut set, &ring),
            Err(ShapeError::NotHoleFree)
        ));
    }

    #[test]
    fn facing_interior_glues_complement() {
        let mut set = TileSet::new();
        let s = parse_shape("##").unwrap();
        let asm = build_input_assembly(&mut set, &s).unwrap();
        let bonds = asm.bonds(&set);
        assert_eq!(bonds.len(), 1);
        let g: GlueId = bonds[0].glue;
        assert_eq!(set.glues.label(g), "int");
    }
}
