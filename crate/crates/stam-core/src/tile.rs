//! Tile types: per-side glue decks and tile-local transition rules.

use crate::geom::Dir;
use crate::glue::{GlueError, GlueId, GlueTable};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlueState {
    On,
    Latent,
    Off,
}

impl GlueState {
    pub fn letter(self) -> char {
        match self {
            GlueState::On => 'o',
            GlueState::Latent => 'l',
            GlueState::Off => 'x',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Effect {
    Activate,
    Deactivate,
}

/// One signal: flip a glue on this same tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub side: Dir,
    pub glue: GlueId,
    pub effect: Effect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub trigger_side: Dir,
    pub trigger_glue: GlueId,
    pub actions: Vec<Action>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub glue: GlueId,
    pub initial: GlueState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TileTypeId(pub u32);

/// A tile type: up to a handful of glues per side plus tile-local rules.
///
/// Slots are stored flattened in side order (N, E, S, W), each side sorted by
/// glue id, so a slot index identifies a glue position canonically.
#[derive(Debug, Clone)]
pub struct TileType {
    pub name: String,
    sides: [Vec<Slot>; 4],
    slot_offset: [usize; 4],
    slot_count: usize,
    rules: HashMap<(Dir, GlueId), Vec<Action>>,
    rule_order: Vec<(Dir, GlueId)>,
}

impl TileType {
    pub fn side(&self, d: Dir) -> &[Slot] {
        &self.sides[d.index()]
    }

    pub fn slot_count(&self) -> usize {
        self.slot_count
    }

    /// Flattened index of (side, glue); None if the tile has no such glue.
    pub fn slot_index(&self, side: Dir, glue: GlueId) -> Option<usize> {
        let deck = &self.sides[side.index()];
        deck.iter()
            .position(|s| s.glue == glue)
            .map(|i| self.slot_offset[side.index()] + i)
    }

    pub fn slot(&self, index: usize) -> (Dir, Slot) {
        for d in Dir::ALL {
            let off = self.slot_offset[d.index()];
            let deck = &self.sides[d.index()];
            if index < off + deck.len() {
                return (d, deck[index - off]);
            }
        }
        panic!("slot index {index} out of range for tile type {}", self.name);
    }

    pub fn side_slot_range(&self, d: Dir) -> std::ops::Range<usize> {
        let off = self.slot_offset[d.index()];
        off..off + self.sides[d.index()].len()
    }

    pub fn rule(&self, side: Dir, glue: GlueId) -> Option<&[Action]> {
        self.rules.get(&(side, glue)).map(|v| v.as_slice())
    }

    pub fn rules(&self) -> impl Iterator<Item = (Dir, GlueId, &[Action])> {
        self.rule_order
            .iter()
            .map(move |&(d, g)| (d, g, self.rules[&(d, g)].as_slice()))
    }
}

#[derive(Debug, Error)]
pub enum TileSetError {
    #[error(transparent)]
    Glue(#[from] GlueError),
    #[error("tile type {0:?} defined twice")]
    DuplicateType(String),
    #[error("tile type {0:?}: duplicate glue {1:?} on side {2}")]
    DuplicateGlue(String, String, Dir),
    #[error("tile type {0:?}: second rule for trigger ({1}, {2:?})")]
    DuplicateRule(String, Dir, String),
    #[error("tile type {0:?}: rule targets missing glue {1:?} on side {2}")]
    MissingTarget(String, String, Dir),
    #[error("unknown tile type {0:?}")]
    UnknownType(String),
}

/// A closed set of glue definitions and tile types.
#[derive(Debug, Default, Clone)]
pub struct TileSet {
    pub glues: GlueTable,
    types: Vec<TileType>,
    by_name: HashMap<String, TileTypeId>,
}

impl TileSet {
    pub fn new() -> TileSet {
        TileSet::default()
    }

    pub fn ty(&self, id: TileTypeId) -> &TileType {
        &self.types[id.0 as usize]
    }

    pub fn type_id(&self, name: &str) -> Result<TileTypeId, TileSetError> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| TileSetError::UnknownType(name.to_string()))
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn types(&self) -> impl Iterator<Item = (TileTypeId, &TileType)> {
        self.types
            .iter()
            .enumerate()
            .map(|(i, t)| (TileTypeId(i as u32), t))
    }

    pub fn builder<'a>(&'a mut self, name: &str) -> TileTypeBuilder<'a> {
        TileTypeBuilder {
            set: self,
            name: name.to_string(),
            sides: Default::default(),
            rules: Vec::new(),
        }
    }

    fn insert(&mut self, ty: TileType) -> Result<TileTypeId, TileSetError> {
        if self.by_name.contains_key(&ty.name) {
            return Err(TileSetError::DuplicateType(ty.name));
        }
        let id = TileTypeId(self.types.len() as u32);
        self.by_name.insert(ty.name.clone(), id);
        self.types.push(ty);
        Ok(id)
    }
}

/// Convenience builder; glue arguments are rendered labels ("x2'").
pub struct TileTypeBuilder<'a> {
    set: &'a mut TileSet,
    name: String,
    sides: [Vec<Slot>; 4],
    rules: Vec<Rule>,
}

impl<'a> TileTypeBuilder<'a> {
    pub fn glue(mut self, side: Dir, label: &str, strength: u8, initial: GlueState) -> Self {
        let id = self
            .set
            .glues
            .intern_label(label, strength)
            .unwrap_or_else(|e| panic!("{}: {e}", self.name));
        self.sides[side.index()].push(Slot { glue: id, initial });
        self
    }

    /// Add a rule: when (side, label) first binds, run the actions.
    pub fn rule(mut self, side: Dir, label: &str, actions: &[(Dir, &str, Effect)]) -> Self {
        let glue = self
            .set
            .glues
            .lookup(label)
            .unwrap_or_else(|e| panic!("{}: trigger {e}", self.name));
        let actions = actions
            .iter()
            .map(|&(d, l, eff)| {
                let g = self
                    .set
                    .glues
                    .lookup(l)
                    .unwrap_or_else(|e| panic!("{}: action {e}", self.name));
                Action { side: d, glue: g, effect: eff }
            })
            .collect();
        self.rules.push(Rule { trigger_side: side, trigger_glue: glue, actions });
        self
    }

    pub fn build(self) -> Result<TileTypeId, TileSetError> {
        let TileTypeBuilder { set, name, mut sides, rules } = self;
        for d in Dir::ALL {
            let deck = &mut sides[d.index()];
            deck.sort_by_key(|s| s.glue);
            for w in deck.windows(2) {
                if w[0].glue == w[1].glue {
                    return Err(TileSetError::DuplicateGlue(
                        name,
                        set.glues.label(w[0].glue),
                        d,
                    ));
                }
            }
        }
        let mut slot_offset = [0usize; 4];
        let mut off = 0;
        for d in Dir::ALL {
            slot_offset[d.index()] = off;
            off += sides[d.index()].len();
        }
        let mut rule_map = HashMap::new();
        let mut rule_order = Vec::new();
        for r in rules {
            if sides[r.trigger_side.index()]
                .iter()
                .all(|s| s.glue != r.trigger_glue)
            {
                return Err(TileSetError::MissingTarget(
                    name,
                    set.glues.label(r.trigger_glue),
                    r.trigger_side,
                ));
            }
            for a in &r.actions {
                if sides[a.side.index()].iter().all(|s| s.glue != a.glue) {
                    return Err(TileSetError::MissingTarget(
                        name,
                        set.glues.label(a.glue),
                        a.side,
                    ));
                }
            }
            let key = (r.trigger_side, r.trigger_glue);
            if rule_map.insert(key, r.actions).is_some() {
                return Err(TileSetError::DuplicateRule(
                    name,
                    r.trigger_side,
                    set.glues.label(r.trigger_glue),
                ));
            }
            rule_order.push(key);
        }
        set.insert(TileType {
            name,
            sides,
            slot_offset,
            slot_count: off,
            rules: rule_map,
            rule_order,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> (TileSet, TileTypeId) {
        let mut set = TileSet::new();
        let id = set
            .builder("path-e")
            .glue(Dir::W, "x'", 1, GlueState::On)
            .glue(Dir::E, "f", 1, GlueState::Latent)
            .glue(Dir::E, "q'", 1, GlueState::On)
            .glue(Dir::S, "c", 1, GlueState::Latent)
            .rule(Dir::W, "x'", &[(Dir::S, "c", Effect::Activate)])
            .build()
            .unwrap();
        (set, id)
    }

    #[test]
    fn slots_are_canonical() {
        let (set, id) = sample();
        let ty = set.ty(id);
        assert_eq!(ty.slot_count(), 4);
        // Index 0..2 are the east deck (N empty), then south, then west.
        let (d0, _) = ty.slot(0);
        assert_eq!(d0, Dir::E);
        let xp = set.glues.lookup("x'").unwrap();
        let idx = ty.slot_index(Dir::W, xp).unwrap();
        let (d, s) = ty.slot(idx);
        assert_eq!(d, Dir::W);
        assert_eq!(s.glue, xp);
    }

    #[test]
    fn duplicate_rule_rejected() {
        let mut set = TileSet::new();
        let r = set
            .builder("t")
            .glue(Dir::N, "a", 1, GlueState::On)
            .rule(Dir::N, "a", &[])
            .rule(Dir::N, "a", &[])
            .build();
        assert!(matches!(r, Err(TileSetError::DuplicateRule(..))));
    }

    #[test]
    fn rule_target_must_exist() {
        let mut set = TileSet::new();
        set.glues.intern_label("b", 1).unwrap();
        let r = set
            .builder("t")
            .glue(Dir::N, "a", 1, GlueState::On)
            .rule(Dir::N, "a", &[(Dir::S, "b", Effect::Activate)])
            .build();
        assert!(matches!(r, Err(TileSetError::MissingTarget(..))));
    }
}
