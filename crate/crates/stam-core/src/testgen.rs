//! Deterministic generators for randomized testing.
//!
//! The fast stability routines are exercised against the brute-force
//! oracle on thousands of random assemblies; this module provides the
//! shared generator so every crate draws the same distribution from the
//! same seed.

use crate::assembly::{Assembly, TileInstance};
use crate::geom::{Dir, Pos};
use crate::tile::{GlueState, TileSet, TileTypeId};

/// Tiny splitmix64 stream; enough for test-case generation and free of
/// external dependencies.
#[derive(Debug, Clone)]
pub struct Stream(u64);

impl Stream {
    pub fn new(seed: u64) -> Stream {
        Stream(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// One tile type whose every side carries a weak and a strong glue;
/// north/east unprimed, south/west primed, so any two neighbours can bond.
pub fn universal_set() -> (TileSet, TileTypeId) {
    let mut set = TileSet::new();
    let ty = set
        .builder("blank")
        .glue(Dir::N, "a", 1, GlueState::Off)
        .glue(Dir::N, "b", 2, GlueState::Off)
        .glue(Dir::E, "a", 1, GlueState::Off)
        .glue(Dir::E, "b", 2, GlueState::Off)
        .glue(Dir::S, "a'", 1, GlueState::Off)
        .glue(Dir::S, "b'", 2, GlueState::Off)
        .glue(Dir::W, "a'", 1, GlueState::Off)
        .glue(Dir::W, "b'", 2, GlueState::Off)
        .build()
        .unwrap();
    (set, ty)
}

/// A random blob of tiles (drawn by a lattice walk, so usually face-connected
/// but with arbitrary glue states, hence an arbitrary bond graph).
pub fn random_assembly(set: &TileSet, ty: TileTypeId, rng: &mut Stream, max_tiles: usize) -> Assembly {
    let mut asm = Assembly::new();
    let mut pos = Pos::new(0, 0);
    let mut placed = 0;
    let walk_len = 3 * max_tiles;
    for _ in 0..walk_len {
        if placed < max_tiles && asm.get(pos).is_none() {
            let mut inst = TileInstance::new(set, ty);
            for s in inst.states.iter_mut() {
                *s = match rng.below(4) {
                    0 | 1 => GlueState::On,
                    2 => GlueState::Latent,
                    _ => GlueState::Off,
                };
            }
            asm.insert(pos, inst);
            placed += 1;
        }
        pos = pos.step(Dir::from_index(rng.below(4) as usize));
    }
    asm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let mut a = Stream::new(42);
        let mut b = Stream::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn generator_fills_requested_size_eventually() {
        let (set, ty) = universal_set();
        let mut rng = Stream::new(7);
        let mut nonempty = 0;
        for _ in 0..20 {
            let a = random_assembly(&set, ty, &mut rng, 8);
            assert!(a.len() <= 8);
            if a.len() >= 2 {
                nonempty += 1;
            }
        }
        assert!(nonempty >= 15, "walks should usually place several tiles");
    }
}
