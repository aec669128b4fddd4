//! JSON document model for tile sets and assemblies.
//!
//! The document structs mirror the in-memory types with everything in
//! canonical order (glues by id, tiles row-major), so serialising the same
//! state twice gives byte-identical output and a round trip is exact.

use crate::assembly::{Assembly, TileInstance};
use crate::geom::{Dir, Pos};
use crate::tile::{Action, Effect, GlueState, TileSet, TileSetError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InterchangeError {
    #[error("bad action {0:?}; expected e.g. \"on N:x'\"")]
    BadAction(String),
    #[error("bad glue state letter {0:?}")]
    BadState(char),
    #[error("tile at ({0},{1}): wrong {2} length for its type")]
    BadLength(i32, i32, &'static str),
    #[error(transparent)]
    TileSet(#[from] TileSetError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TileSetDoc {
    pub glues: Vec<GlueDoc>,
    pub tile_types: Vec<TileTypeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GlueDoc {
    pub label: String,
    pub strength: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TileTypeDoc {
    pub name: String,
    pub north: Vec<SlotDoc>,
    pub east: Vec<SlotDoc>,
    pub south: Vec<SlotDoc>,
    pub west: Vec<SlotDoc>,
    pub rules: Vec<RuleDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlotDoc {
    pub glue: String,
    pub state: String,
}

/// A rule in compact text: `when` is "side:label", `then` lists
/// "on side:label" / "off side:label" actions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleDoc {
    pub when: String,
    pub then: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssemblyDoc {
    pub tiles: Vec<TileDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TileDoc {
    pub x: i32,
    pub y: i32,
    #[serde(rename = "type")]
    pub ty: String,
    /// One letter per glue slot: o(n), l(atent), x = off.
    pub states: String,
    /// One digit per glue slot: has this glue's signal fired.
    pub fired: String,
    pub pending: Vec<String>,
}

fn state_letter(s: GlueState) -> char {
    s.letter()
}

fn state_from_letter(c: char) -> Result<GlueState, InterchangeError> {
    match c {
        'o' => Ok(GlueState::On),
        'l' => Ok(GlueState::Latent),
        'x' => Ok(GlueState::Off),
        other => Err(InterchangeError::BadState(other)),
    }
}

pub fn format_action(set: &TileSet, a: Action) -> String {
    let eff = match a.effect {
        Effect::Activate => "on",
        Effect::Deactivate => "off",
    };
    format!("{eff} {}:{}", a.side.letter(), set.glues.label(a.glue))
}

fn split_side_label(text: &str) -> Option<(Dir, &str)> {
    let (side, label) = text.split_once(':')?;
    let mut chars = side.chars();
    let d = Dir::parse(chars.next()?)?;
    chars.next().is_none().then_some((d, label))
}

fn parse_action_text(text: &str) -> Option<(Dir, &str, Effect)> {
    let (eff, rest) = text.split_once(' ')?;
    let effect = match eff {
        "on" => Effect::Activate,
        "off" => Effect::Deactivate,
        _ => return None,
    };
    let (side, label) = split_side_label(rest)?;
    Some((side, label, effect))
}

pub fn parse_action(set: &TileSet, text: &str) -> Result<Action, InterchangeError> {
    let bad = || InterchangeError::BadAction(text.to_string());
    let (side, label, effect) = parse_action_text(text).ok_or_else(bad)?;
    let glue = set.glues.lookup(label).map_err(|_| bad())?;
    Ok(Action { side, glue, effect })
}

pub fn tile_set_to_doc(set: &TileSet) -> TileSetDoc {
    let glues = set
        .glues
        .iter()
        .map(|(_, d)| GlueDoc { label: d.label(), strength: d.strength })
        .collect();
    let tile_types = set
        .types()
        .map(|(_, ty)| {
            let deck = |d: Dir| {
                ty.side(d)
                    .iter()
                    .map(|s| SlotDoc {
                        glue: set.glues.label(s.glue),
                        state: match s.initial {
                            GlueState::On => "on",
                            GlueState::Latent => "latent",
                            GlueState::Off => "off",
                        }
                        .to_string(),
                    })
                    .collect()
            };
            TileTypeDoc {
                name: ty.name.clone(),
                north: deck(Dir::N),
                east: deck(Dir::E),
                south: deck(Dir::S),
                west: deck(Dir::W),
                rules: ty
                    .rules()
                    .map(|(d, g, actions)| RuleDoc {
                        when: format!("{}:{}", d.letter(), set.glues.label(g)),
                        then: actions
                            .iter()
                            .map(|&a| format_action(set, a))
                            .collect(),
                    })
                    .collect(),
            }
        })
        .collect();
    TileSetDoc { glues, tile_types }
}

pub fn tile_set_from_doc(doc: &TileSetDoc) -> Result<TileSet, InterchangeError> {
    let mut set = TileSet::new();
    let mut strengths: HashMap<&str, u8> = HashMap::new();
    for g in &doc.glues {
        set.glues
            .intern_label(&g.label, g.strength)
            .map_err(TileSetError::from)?;
        strengths.insert(&g.label, g.strength);
    }
    for t in &doc.tile_types {
        // The builder panics on unknown labels, so vet every rule label
        // against the interned glue list before handing it over.
        for r in &t.rules {
            let (_, label) = split_side_label(&r.when)
                .ok_or_else(|| InterchangeError::BadAction(r.when.clone()))?;
            set.glues.lookup(label).map_err(TileSetError::from)?;
            for a in &r.then {
                let (_, label, _) = parse_action_text(a)
                    .ok_or_else(|| InterchangeError::BadAction(a.clone()))?;
                set.glues.lookup(label).map_err(TileSetError::from)?;
            }
        }
        let mut b = set.builder(&t.name);
        for (dir, deck) in [
            (Dir::N, &t.north),
            (Dir::E, &t.east),
            (Dir::S, &t.south),
            (Dir::W, &t.west),
        ] {
            for slot in deck {
                let strength = strengths.get(slot.glue.as_str()).copied().unwrap_or(1);
                let state = match slot.state.as_str() {
                    "on" => GlueState::On,
                    "latent" => GlueState::Latent,
                    "off" => GlueState::Off,
                    other => {
                        return Err(InterchangeError::BadState(
                            other.chars().next().unwrap_or('?'),
                        ))
                    }
                };
                b = b.glue(dir, &slot.glue, strength, state);
            }
        }
        for r in &t.rules {
            let (side, label) = split_side_label(&r.when).unwrap();
            let actions: Vec<(Dir, &str, Effect)> = r
                .then
                .iter()
                .map(|a| parse_action_text(a).unwrap())
                .collect();
            b = b.rule(side, label, &actions);
        }
        b.build()?;
    }
    Ok(set)
}

pub fn assembly_to_doc(set: &TileSet, asm: &Assembly) -> AssemblyDoc {
    let tiles = asm
        .tiles()
        .map(|(p, t)| TileDoc {
            x: p.x,
            y: p.y,
            ty: set.ty(t.ty).name.clone(),
            states: t.states.iter().map(|&s| state_letter(s)).collect(),
            fired: t.fired.iter().map(|&f| if f { '1' } else { '0' }).collect(),
            pending: t.pending.iter().map(|&a| format_action(set, a)).collect(),
        })
        .collect();
    AssemblyDoc { tiles }
}

pub fn assembly_from_doc(set: &TileSet, doc: &AssemblyDoc) -> Result<Assembly, InterchangeError> {
    let mut asm = Assembly::new();
    for t in &doc.tiles {
        let ty_id = set.type_id(&t.ty)?;
        let mut inst = TileInstance::new(set, ty_id);
        if t.states.chars().count() != inst.states.len() {
            return Err(InterchangeError::BadLength(t.x, t.y, "states"));
        }
        if t.fired.chars().count() != inst.fired.len() {
            return Err(InterchangeError::BadLength(t.x, t.y, "fired"));
        }
        for (i, c) in t.states.chars().enumerate() {
            inst.states[i] = state_from_letter(c)?;
        }
        for (i, c) in t.fired.chars().enumerate() {
            inst.fired[i] = c == '1';
        }
        for a in &t.pending {
            inst.pending.push(parse_action(set, a)?);
        }
        asm.insert(Pos::new(t.x, t.y), inst);
    }
    Ok(asm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_set() -> TileSet {
        let mut set = TileSet::new();
        set.builder("walker")
            .glue(Dir::W, "x'", 1, GlueState::On)
            .glue(Dir::E, "f", 1, GlueState::Latent)
            .glue(Dir::E, "q'", 1, GlueState::On)
            .glue(Dir::S, "d", 2, GlueState::Latent)
            .rule(Dir::W, "x'", &[(Dir::E, "f", Effect::Activate)])
            .rule(
                Dir::E,
                "q'",
                &[(Dir::S, "d", Effect::Activate), (Dir::W, "x'", Effect::Deactivate)],
            )
            .build()
            .unwrap();
        set.builder("anchor")
            .glue(Dir::E, "x", 1, GlueState::On)
            .build()
            .unwrap();
        set
    }

    #[test]
    fn tile_set_round_trips_byte_exact() {
        let set = sample_set();
        let doc = tile_set_to_doc(&set);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back = tile_set_from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        let json2 = serde_json::to_string_pretty(&tile_set_to_doc(&back)).unwrap();
        assert_eq!(json, json2);
    }

    #[test]
    fn assembly_round_trips_byte_exact() {
        let set = sample_set();
        let walker = set.type_id("walker").unwrap();
        let anchor = set.type_id("anchor").unwrap();
        let mut a = Assembly::single(&set, anchor);
        let w = Assembly::single(&set, walker);
        let seams = a.match_edges(&set, &w, 1, 0);
        a.attach(&set, &w, 1, 0, &seams);
        let doc = assembly_to_doc(&set, &a);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back = assembly_from_doc(&set, &serde_json::from_str(&json).unwrap()).unwrap();
        let json2 = serde_json::to_string_pretty(&assembly_to_doc(&set, &back)).unwrap();
        assert_eq!(json, json2);
        assert_eq!(a, back);
    }

    #[test]
    fn bad_action_text_is_rejected() {
        let set = sample_set();
        assert!(parse_action(&set, "on N x").is_err());
        assert!(parse_action(&set, "toggle N:x").is_err());
        assert!(parse_action(&set, "on Q:x").is_err());
        assert!(parse_action(&set, "on N:nosuch").is_err());
        assert!(parse_action(&set, "off W:x'").is_ok());
    }
}
