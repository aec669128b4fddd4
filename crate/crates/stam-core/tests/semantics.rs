//! Randomized agreement tests between the fast stability/matching routines
//! and the brute-force oracle, plus algebraic properties of edge matching.

use proptest::prelude::*;
use stam_core::assembly::Assembly;
use stam_core::oracle;
use stam_core::testgen::{random_assembly, universal_set, Stream};
use stam_core::tile::GlueState;

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn stability_matches_oracle(seed in any::<u64>()) {
        let (set, ty) = universal_set();
        let mut rng = Stream::new(seed);
        let asm = random_assembly(&set, ty, &mut rng, 10);
        for tau in [1u32, 2] {
            prop_assert_eq!(
                asm.is_tau_stable(&set, tau),
                oracle::is_tau_stable(&set, &asm, tau),
                "tau {} disagreement on seed {}", tau, seed
            );
        }
    }

    #[test]
    fn breakable_cuts_match_oracle(seed in any::<u64>()) {
        let (set, ty) = universal_set();
        let mut rng = Stream::new(seed);
        let asm = random_assembly(&set, ty, &mut rng, 10);
        let fast = asm.breakable_cuts(&set, 2);
        let slow = oracle::breakable_cuts(&set, &asm, 2);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn match_edges_is_symmetric(seed in any::<u64>(), dx in -4i32..5, dy in -4i32..5) {
        let (set, ty) = universal_set();
        let mut rng = Stream::new(seed);
        let a = random_assembly(&set, ty, &mut rng, 6);
        let b = random_assembly(&set, ty, &mut rng, 6);
        let ab = a.match_edges(&set, &b, dx, dy);
        let ba = b.match_edges(&set, &a, -dx, -dy);
        prop_assert_eq!(Assembly::seam_strength(&ab), Assembly::seam_strength(&ba));
        // Same pairs, seen from the other side: (a tile, a slot) of one
        // equals (b tile shifted, b slot) of the other.
        let mut lhs: Vec<_> = ab
            .iter()
            .map(|s| (s.a_pos, s.a_slot, s.b_pos.translate(dx, dy), s.b_slot))
            .collect();
        let mut rhs: Vec<_> = ba
            .iter()
            .map(|s| (s.b_pos, s.b_slot, s.a_pos.translate(dx, dy), s.a_slot))
            .collect();
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn match_strength_is_monotone_in_activation(seed in any::<u64>(), dx in -4i32..5, dy in -4i32..5) {
        let (set, ty) = universal_set();
        let mut rng = Stream::new(seed);
        let a = random_assembly(&set, ty, &mut rng, 6);
        let mut b = random_assembly(&set, ty, &mut rng, 6);
        let before = Assembly::seam_strength(&a.match_edges(&set, &b, dx, dy));
        // Switching more glues on can only add matched pairs.
        let positions = b.domain();
        for p in positions {
            let tile = b.get_mut(p).unwrap();
            for s in tile.states.iter_mut() {
                if rng.chance(1, 2) {
                    *s = GlueState::On;
                }
            }
        }
        let after = Assembly::seam_strength(&a.match_edges(&set, &b, dx, dy));
        prop_assert!(after >= before, "activation decreased seam strength: {before} -> {after}");
    }
}
