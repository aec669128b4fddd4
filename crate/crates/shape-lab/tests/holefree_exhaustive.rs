//! Exhaustive cross-check of the hole predicate: every edge-connected
//! subset of a 5x5 box, compared against an independent bitboard flood.

use rayon::prelude::*;
use shape_lab::{is_hole_free, Shape};
use stam_core::Pos;

const W: usize = 5;
const N: usize = W * W;
const FULL: u32 = (1 << N) - 1;

// Column guards so row-internal shifts cannot wrap between rows.
const NOT_RIGHT: u32 = 0b01111_01111_01111_01111_01111;
const NOT_LEFT: u32 = 0b11110_11110_11110_11110_11110;

fn spread(m: u32) -> u32 {
    (m | ((m & NOT_RIGHT) << 1) | ((m & NOT_LEFT) >> 1) | (m << W) | (m >> W)) & FULL
}

fn connected(mask: u32) -> bool {
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let next = spread(seen) & mask;
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}

/// Flood the empty cells of the padded 7x7 board from a padding corner;
/// hole-free iff every empty cell is reached.
fn oracle_hole_free(mask: u32, not_right7: u64, not_left7: u64) -> bool {
    const FULL7: u64 = (1 << 49) - 1;
    let mut occ = 0u64;
    for i in 0..N {
        if mask >> i & 1 == 1 {
            occ |= 1 << ((i / W + 1) * 7 + (i % W + 1));
        }
    }
    let empty = !occ & FULL7;
    let mut reach = 1u64;
    loop {
        let grown = (reach
            | ((reach & not_right7) << 1)
            | ((reach & not_left7) >> 1)
            | (reach << 7)
            | (reach >> 7))
            & empty;
        if grown == reach {
            break;
        }
        reach = grown;
    }
    reach == empty
}

#[test]
fn hole_predicate_matches_flood_oracle_on_every_5x5_shape() {
    let mut not_right7 = 0u64;
    let mut not_left7 = 0u64;
    for y in 0..7u64 {
        for x in 0..7u64 {
            if x < 6 {
                not_right7 |= 1 << (y * 7 + x);
            }
            if x > 0 {
                not_left7 |= 1 << (y * 7 + x);
            }
        }
    }

    let (checked, mismatches) = (1u32..=FULL)
        .into_par_iter()
        .map(|mask| {
            if !connected(mask) {
                return (0u64, 0u64);
            }
            let cells = (0..N)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| Pos::new((i % W) as i32, (i / W) as i32));
            let shape = Shape::from_cells(None, cells).expect("connected by construction");
            let agree = is_hole_free(&shape) == oracle_hole_free(mask, not_right7, not_left7);
            (1, if agree { 0 } else { 1 })
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    assert_eq!(mismatches, 0);
    assert!(checked > 1_000_000, "only {checked} connected masks seen");
}
