//! Brute-force reference answers for stability questions.
//!
//! These enumerate every 2-partition of an assembly's tiles, so they only
//! work for small inputs, but they are obviously correct. The fast graph
//! routines in `assembly` are tested against them and must agree exactly.

use crate::assembly::{Assembly, Bond, BreakableCuts};
use crate::tile::TileSet;
use std::collections::BTreeMap;

pub const MAX_ORACLE_TILES: usize = 16;

struct PartitionScan {
    bonds: Vec<Bond>,
    /// For each bond, node indices of its two endpoints.
    ends: Vec<(usize, usize)>,
    n: usize,
}

fn scan(set: &TileSet, asm: &Assembly) -> PartitionScan {
    let n = asm.len();
    assert!(n <= MAX_ORACLE_TILES, "oracle limited to {MAX_ORACLE_TILES} tiles");
    let index: BTreeMap<_, _> = asm
        .tiles()
        .map(|(p, _)| p)
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let bonds = asm.bonds(set);
    let ends = bonds
        .iter()
        .map(|b| (index[&b.pos], index[&b.pos.step(b.side)]))
        .collect();
    PartitionScan { bonds, ends, n }
}

impl PartitionScan {
    /// Visit every nontrivial 2-partition; yields (crossing bond indices,
    /// crossing strength). Tile 0 is pinned to one side to halve the walk.
    fn for_each_cut(&self, mut f: impl FnMut(&[usize], u32)) {
        if self.n < 2 {
            return;
        }
        let mut crossing = Vec::new();
        for mask in 1u32..(1 << (self.n - 1)) {
            // Bit i of mask: tile i+1 is on the far side from tile 0.
            crossing.clear();
            let mut strength = 0u32;
            for (i, &(u, v)) in self.ends.iter().enumerate() {
                let su = u != 0 && mask & (1 << (u - 1)) != 0;
                let sv = v != 0 && mask & (1 << (v - 1)) != 0;
                if su != sv {
                    crossing.push(i);
                    strength += self.bonds[i].strength as u32;
                }
            }
            f(&crossing, strength);
        }
    }
}

/// Exhaustive check: is every 2-partition crossed by at least `tau`?
pub fn is_tau_stable(set: &TileSet, asm: &Assembly, tau: u32) -> bool {
    let scan = scan(set, asm);
    let mut stable = true;
    scan.for_each_cut(|_, strength| {
        if strength < tau {
            stable = false;
        }
    });
    stable
}

/// Exhaustive version of `Assembly::breakable_cuts`.
pub fn breakable_cuts(set: &TileSet, asm: &Assembly, tau: u32) -> BreakableCuts {
    let scan = scan(set, asm);
    let mut disconnected = false;
    let mut is_cut_bond = vec![false; scan.bonds.len()];
    scan.for_each_cut(|crossing, strength| {
        if crossing.is_empty() {
            disconnected = true;
        }
        if strength < tau && crossing.len() == 1 {
            is_cut_bond[crossing[0]] = true;
        }
    });
    let bridges = scan
        .bonds
        .iter()
        .zip(&is_cut_bond)
        .filter(|(_, &cut)| cut)
        .map(|(b, _)| *b)
        .collect();
    BreakableCuts { disconnected, bridges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::TileInstance;
    use crate::geom::{Dir, Pos};
    use crate::tile::GlueState;

    #[test]
    fn oracle_matches_hand_worked_square() {
        // A 2x2 ring of weak bonds: connected, no single bond disconnects,
        // but the whole thing is held by strength-1 bonds only, so every
        // corner can be cut off by a strength-2 cut; stable at tau 2.
        let mut set = TileSet::new();
        let t = set
            .builder("ring")
            .glue(Dir::N, "v", 1, GlueState::On)
            .glue(Dir::S, "v'", 1, GlueState::On)
            .glue(Dir::E, "h", 1, GlueState::On)
            .glue(Dir::W, "h'", 1, GlueState::On)
            .build()
            .unwrap();
        let mut a = Assembly::new();
        for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            a.insert(Pos::new(x, y), TileInstance::new(&set, t));
        }
        assert_eq!(a.bonds(&set).len(), 4);
        assert!(is_tau_stable(&set, &a, 2));
        assert!(!is_tau_stable(&set, &a, 3));
        let cuts = breakable_cuts(&set, &a, 2);
        assert!(!cuts.disconnected);
        assert!(cuts.bridges.is_empty());
    }
}
