//! The soup: finitely many placed assemblies, each with a stable id and a
//! version counter for event caching.

use stam_core::Assembly;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct SoupEntry {
    pub asm: Assembly,
    pub version: u64,
}

#[derive(Debug, Clone, Default)]
pub struct Soup {
    entries: BTreeMap<u64, SoupEntry>,
    next_id: u64,
}

impl Soup {
    pub fn new() -> Soup {
        Soup { entries: BTreeMap::new(), next_id: 1 }
    }

    pub fn add(&mut self, asm: Assembly) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        self.entries.insert(id, SoupEntry { asm, version: 0 });
        id
    }

    pub fn remove(&mut self, id: u64) -> Option<SoupEntry> {
        self.entries.remove(&id)
    }

    pub fn get(&self, id: u64) -> Option<&SoupEntry> {
        self.entries.get(&id)
    }

    pub fn get_mut(&mut self, id: u64) -> Option<&mut SoupEntry> {
        self.entries.get_mut(&id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &SoupEntry)> {
        self.entries.iter().map(|(&id, e)| (id, e))
    }

    pub fn ids(&self) -> Vec<u64> {
        self.entries.keys().copied().collect()
    }

    /// Number of assemblies that are quiescent and whose tile domain equals
    /// the given canonical domain up to translation.
    pub fn census(&self, canonical_domain: &[stam_core::Pos]) -> usize {
        self.entries
            .values()
            .filter(|e| e.asm.is_quiescent() && e.asm.canonical_domain() == canonical_domain)
            .count()
    }

    /// All queued signals across the soup.
    pub fn total_pending(&self) -> usize {
        self.entries.values().map(|e| e.asm.pending_count()).sum()
    }
}
