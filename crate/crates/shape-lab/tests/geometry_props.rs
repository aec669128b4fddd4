//! Random-shape invariants: corner counts, the EXT/INT partition,
//! scaling laws, and leader-seat equivariance.

use proptest::prelude::*;
use shape_lab::{
    analyze_geometry, expected_leader_position, is_hole_free, is_min_width2, scale_shape,
    Quadrant, Shape,
};
use stam_core::testgen::Stream;
use stam_core::{Dir, Pos};
use std::collections::BTreeSet;

/// Random lattice walk, with any enclosed empty pockets filled in so the
/// result is hole-free.
fn walk_shape(seed: u64, steps: usize) -> Shape {
    let mut rng = Stream::new(seed);
    let mut cells: BTreeSet<Pos> = BTreeSet::new();
    let mut p = Pos::new(0, 0);
    cells.insert(p);
    for _ in 0..steps {
        p = p.step(Dir::from_index(rng.below(4) as usize));
        cells.insert(p);
    }

    let min_x = cells.iter().map(|c| c.x).min().unwrap() - 1;
    let max_x = cells.iter().map(|c| c.x).max().unwrap() + 1;
    let min_y = cells.iter().map(|c| c.y).min().unwrap() - 1;
    let max_y = cells.iter().map(|c| c.y).max().unwrap() + 1;
    let mut outside: BTreeSet<Pos> = BTreeSet::new();
    let mut queue = vec![Pos::new(min_x, min_y)];
    outside.insert(queue[0]);
    while let Some(q) = queue.pop() {
        for d in Dir::ALL {
            let n = q.step(d);
            if n.x < min_x || n.x > max_x || n.y < min_y || n.y > max_y {
                continue;
            }
            if !cells.contains(&n) && outside.insert(n) {
                queue.push(n);
            }
        }
    }
    for y in min_y..=max_y {
        for x in min_x..=max_x {
            let c = Pos::new(x, y);
            if !outside.contains(&c) {
                cells.insert(c);
            }
        }
    }
    Shape::from_cells(None, cells).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn corner_counts_and_edge_partition(seed in any::<u64>(), steps in 1usize..40) {
        let s = walk_shape(seed, steps);
        prop_assert!(is_hole_free(&s));

        let r = analyze_geometry(&s);
        prop_assert_eq!(r.convex_count() as i64 - r.concave_count() as i64, 4);
        for q in Quadrant::ALL {
            prop_assert!(!r.convex[&q].is_empty(), "no {:?} convex corner", q);
        }

        let mut perimeter = 0usize;
        for c in s.cells() {
            for d in Dir::ALL {
                if !s.contains(c.step(d)) {
                    perimeter += 1;
                }
            }
        }
        prop_assert_eq!(r.ext.len() + r.int.len(), perimeter);
        let ext: BTreeSet<_> = r.ext.iter().copied().collect();
        prop_assert!(r.int.iter().all(|e| !ext.contains(e)));
        prop_assert_eq!(
            r.concavities().iter().map(Vec::len).sum::<usize>(),
            r.int.len()
        );
    }

    #[test]
    fn scaling_laws(seed in any::<u64>(), steps in 1usize..12, a in 1i32..3, b in 1i32..3) {
        let s = walk_shape(seed, steps);
        prop_assert!(is_min_width2(&scale_shape(&s, 2)));
        let once = scale_shape(&s, a * b);
        let twice = scale_shape(&scale_shape(&s, a), b);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn leader_seat_is_translation_equivariant(
        seed in any::<u64>(),
        steps in 1usize..30,
        dx in -5i32..6,
        dy in -5i32..6,
    ) {
        let s = walk_shape(seed, steps);
        let moved = s.translate(dx, dy);
        let base = expected_leader_position(&s);
        prop_assert_eq!(expected_leader_position(&moved), base.translate(dx, dy));

        let r = analyze_geometry(&s);
        let rm = analyze_geometry(&moved);
        for q in Quadrant::ALL {
            let shifted: Vec<Pos> = r.convex[&q].iter().map(|p| p.translate(dx, dy)).collect();
            prop_assert_eq!(&rm.convex[&q], &shifted);
        }
    }
}
