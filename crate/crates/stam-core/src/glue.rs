//! Glue labels, strengths and the complement pairing.
//!
//! A glue label is a base name plus a primed flag; `g` binds exactly `g'`.
//! Labels are interned per tile set so the hot paths compare `u32`s. The
//! strength belongs to the base: both polarities of a pair share it.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GlueId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueDef {
    pub base: String,
    pub primed: bool,
    pub strength: u8,
}

impl GlueDef {
    pub fn label(&self) -> String {
        if self.primed {
            format!("{}'", self.base)
        } else {
            self.base.clone()
        }
    }
}

#[derive(Debug, Error)]
pub enum GlueError {
    #[error("glue base {0:?} interned twice with different strengths ({1} vs {2})")]
    StrengthMismatch(String, u8, u8),
    #[error("unknown glue label {0:?}")]
    Unknown(String),
}

/// Intern table. Both polarities of a base are registered together so every
/// glue has a complement.
#[derive(Debug, Default, Clone)]
pub struct GlueTable {
    defs: Vec<GlueDef>,
    by_label: HashMap<String, GlueId>,
}

impl GlueTable {
    pub fn new() -> GlueTable {
        GlueTable::default()
    }

    /// Intern one polarity of a base, registering the other as well.
    pub fn intern(&mut self, base: &str, primed: bool, strength: u8) -> Result<GlueId, GlueError> {
        debug_assert!(!base.ends_with('\''), "pass primed as a flag, not in the base");
        let label = if primed { format!("{base}'") } else { base.to_string() };
        if let Some(&id) = self.by_label.get(&label) {
            let have = self.defs[id.0 as usize].strength;
            if have != strength {
                return Err(GlueError::StrengthMismatch(base.to_string(), have, strength));
            }
            return Ok(id);
        }
        for flag in [false, true] {
            let l = if flag { format!("{base}'") } else { base.to_string() };
            if !self.by_label.contains_key(&l) {
                let id = GlueId(self.defs.len() as u32);
                self.defs.push(GlueDef { base: base.to_string(), primed: flag, strength });
                self.by_label.insert(l, id);
            }
        }
        Ok(self.by_label[&label])
    }

    /// Parse a rendered label ("x" or "x'"); interns it if new.
    pub fn intern_label(&mut self, label: &str, strength: u8) -> Result<GlueId, GlueError> {
        let (base, primed) = split_label(label);
        self.intern(base, primed, strength)
    }

    pub fn lookup(&self, label: &str) -> Result<GlueId, GlueError> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| GlueError::Unknown(label.to_string()))
    }

    pub fn def(&self, id: GlueId) -> &GlueDef {
        &self.defs[id.0 as usize]
    }

    pub fn strength(&self, id: GlueId) -> u8 {
        self.defs[id.0 as usize].strength
    }

    pub fn label(&self, id: GlueId) -> String {
        self.defs[id.0 as usize].label()
    }

    /// The unique glue this one binds: same base, opposite polarity.
    pub fn complement(&self, id: GlueId) -> GlueId {
        let d = &self.defs[id.0 as usize];
        let l = if d.primed { d.base.clone() } else { format!("{}'", d.base) };
        self.by_label[&l]
    }

    pub fn matches(&self, a: GlueId, b: GlueId) -> bool {
        self.complement(a) == b
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GlueId, &GlueDef)> {
        self.defs.iter().enumerate().map(|(i, d)| (GlueId(i as u32), d))
    }
}

pub fn split_label(label: &str) -> (&str, bool) {
    match label.strip_suffix('\'') {
        Some(base) => (base, true),
        None => (label, false),
    }
}
