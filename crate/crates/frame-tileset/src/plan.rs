//! Declarative tile-type plans.
//!
//! The frame construction layers many independent signal decks onto the
//! same tile types (growth anchors, quit bus, scan relay, mold walk, ...).
//! Writing those straight against [`TileSet::builder`] is painful because
//! the builder wants each `(side, trigger)` rule stated exactly once,
//! while the decks are naturally expressed as overlays that each
//! contribute a few actions to shared triggers.  [`TilePlan`] accumulates
//! glues and rule actions from any number of overlays, merging actions
//! for the same trigger and rejecting real conflicts loudly, then
//! realizes the finished plan into a `TileSet`.

use std::collections::BTreeMap;

use stam_core::geom::Dir;
use stam_core::tile::{Effect, GlueState, TileSet, TileTypeId};

/// Shorthand for `Effect::Activate` used throughout the wiring tables.
pub const ON: Effect = Effect::Activate;
/// Shorthand for `Effect::Deactivate`.
pub const OFF: Effect = Effect::Deactivate;

/// Side of the tile a path-heading `h` calls its left (anchor side).
pub fn left(h: Dir) -> Dir {
    h.rot_ccw()
}

/// Side of the tile a path-heading `h` calls its right (outward side).
pub fn right(h: Dir) -> Dir {
    h.rot_cw()
}

/// Side of the tile a path-heading `h` calls its back (entry side).
pub fn back(h: Dir) -> Dir {
    h.opposite()
}

/// Lower-case heading letter used in tile-type names.
pub fn tag(h: Dir) -> char {
    h.letter().to_ascii_lowercase()
}

/// An accumulating plan for one tile type.
pub struct TilePlan {
    name: String,
    glues: BTreeMap<(usize, String), (u8, GlueState)>,
    rules: Vec<((Dir, String), Vec<(Dir, String, Effect)>)>,
}

impl TilePlan {
    pub fn new(name: impl Into<String>) -> TilePlan {
        TilePlan { name: name.into(), glues: BTreeMap::new(), rules: Vec::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rename the plan; variants derived from a base plan use this.
    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// The accumulated rules, for tests that audit wiring.
    pub fn rules(&self) -> &[((Dir, String), Vec<(Dir, String, Effect)>)] {
        &self.rules
    }

    /// Remove a declared glue slot.  Variant tiles derived from a base
    /// plan use this to swap one port for another; the slot must exist
    /// and must not be referenced by any accumulated rule.
    pub fn drop_glue(&mut self, side: Dir, label: &str) -> &mut Self {
        let key = (side.index(), label.to_string());
        assert!(
            self.glues.remove(&key).is_some(),
            "{}: dropping undeclared glue {label} on {side}",
            self.name
        );
        let rkey = (side, label.to_string());
        assert!(
            !self.rules.iter().any(|(k, _)| *k == rkey),
            "{}: dropped glue {label} on {side} still has a rule",
            self.name
        );
        for (_, acts) in &mut self.rules {
            acts.retain(|(d, l, _)| !(*d == side && l == label));
        }
        self
    }

    /// Declare a glue slot.  Re-declaring the same slot is fine as long
    /// as strength and initial state agree; overlays share slots that way.
    pub fn glue(&mut self, side: Dir, label: &str, strength: u8, initial: GlueState) -> &mut Self {
        let key = (side.index(), label.to_string());
        match self.glues.get(&key) {
            None => {
                self.glues.insert(key, (strength, initial));
            }
            Some(&(s, init)) => {
                assert!(
                    s == strength && init == initial,
                    "{}: conflicting declarations for {} on {} ({:?}/{} vs {:?}/{})",
                    self.name,
                    label,
                    side,
                    init,
                    s,
                    initial,
                    strength
                );
            }
        }
        self
    }

    /// Add actions fired when `trigger` on `side` binds.  Actions from
    /// repeated calls for the same trigger are merged; exact duplicates
    /// collapse, opposite effects on the same target are a bug.
    pub fn on(&mut self, side: Dir, trigger: &str, actions: &[(Dir, &str, Effect)]) -> &mut Self {
        let key = (side, trigger.to_string());
        let entry = match self.rules.iter_mut().find(|(k, _)| *k == key) {
            Some((_, acts)) => acts,
            None => {
                self.rules.push((key, Vec::new()));
                &mut self.rules.last_mut().unwrap().1
            }
        };
        for &(d, label, eff) in actions {
            match entry.iter().find(|(ed, el, _)| *ed == d && el == label) {
                Some(&(_, _, old)) => {
                    assert!(
                        old == eff,
                        "{}: conflicting effects for {} on {} under trigger {}@{}",
                        self.name,
                        label,
                        d,
                        trigger,
                        side
                    );
                }
                None => entry.push((d, label.to_string(), eff)),
            }
        }
        self
    }

    /// Realize the plan as a tile type in `set`.
    ///
    /// Panics on tile-set validation errors: a plan that fails to build
    /// is a wiring bug, never a runtime condition.
    pub fn realize(&self, set: &mut TileSet) -> TileTypeId {
        let mut b = set.builder(&self.name);
        for (&(side, ref label), &(strength, initial)) in &self.glues {
            b = b.glue(Dir::from_index(side), label, strength, initial);
        }
        for ((side, trigger), actions) in &self.rules {
            let acts: Vec<(Dir, &str, Effect)> =
                actions.iter().map(|(d, l, e)| (*d, l.as_str(), *e)).collect();
            b = b.rule(*side, trigger, &acts);
        }
        match b.build() {
            Ok(id) => id,
            Err(e) => panic!("{}: {e}", self.name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlays_merge_shared_slots_and_triggers() {
        let mut p = TilePlan::new("t");
        p.glue(Dir::N, "x'", 1, GlueState::On)
            .glue(Dir::E, "f", 1, GlueState::Latent)
            .glue(Dir::N, "y", 1, GlueState::Latent)
            .on(Dir::N, "x'", &[(Dir::E, "f", ON)])
            .on(Dir::N, "x'", &[(Dir::N, "y", ON), (Dir::E, "f", ON)]);
        let mut set = TileSet::new();
        let id = p.realize(&mut set);
        let ty = set.ty(id);
        let trigger = set.glues.lookup("x'").unwrap();
        assert_eq!(ty.rule(Dir::N, trigger).unwrap().len(), 2);
    }

    #[test]
    #[should_panic(expected = "conflicting effects")]
    fn conflicting_effects_panic() {
        let mut p = TilePlan::new("t");
        p.glue(Dir::N, "x'", 1, GlueState::On).glue(Dir::E, "f", 1, GlueState::Latent);
        p.on(Dir::N, "x'", &[(Dir::E, "f", ON)]);
        p.on(Dir::N, "x'", &[(Dir::E, "f", OFF)]);
    }

    #[test]
    #[should_panic(expected = "conflicting declarations")]
    fn conflicting_strengths_panic() {
        let mut p = TilePlan::new("t");
        p.glue(Dir::N, "d", 2, GlueState::Latent);
        p.glue(Dir::N, "d", 1, GlueState::Latent);
    }
}
