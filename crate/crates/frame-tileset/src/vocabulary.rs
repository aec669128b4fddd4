//! Glue vocabulary for the frame and replication tile sets.
//!
//! Every glue label used anywhere in the catalog is registered here with
//! its canonical strength, split into the core working set and the
//! extension set (internal structural bonds of preformed gadgets plus a
//! few auxiliary handshakes).  Interning the whole vocabulary up front
//! means any strength disagreement between two tile plans panics at
//! catalog-build time instead of silently producing a second glue.

use stam_core::glue::split_label;
use stam_core::tile::TileSet;

/// Core glue classes and strengths.
pub const CORE: &[(&str, u8)] = &[
    ("x", 1),
    ("x2", 1),
    ("f", 1),
    ("c", 1),
    ("c2", 1),
    ("c_se", 1),
    ("c_sw", 1),
    ("c_ne", 1),
    ("c_nw", 1),
    ("q", 1),
    ("q2", 1),
    ("d", 2),
    ("dri", 2),
    ("vdr", 1),
    ("cg", 1),
    ("p", 1),
    ("p2", 2),
    ("sp", 1),
    ("sp2", 1),
    ("spL", 1),
    ("spR", 1),
    ("u", 1),
    ("z", 1),
    ("y", 1),
    ("w", 1),
    ("g", 1),
    ("br", 1),
    ("fill", 2),
];

/// Extension glue classes: structural bonds inside preformed gadgets,
/// auxiliary handshakes, and the route glues of the signal-following
/// overlay.
pub const EXTENSIONS: &[(&str, u8)] = &[
    // preformed gadget internals
    ("tri", 2),
    ("tri2", 2),
    ("kdx", 2),
    ("tdx", 2),
    ("ddx", 2),
    ("rdx", 2),
    // auxiliary handshakes
    ("ka", 1),   // corner-gadget seating kick, A -> C
    ("lb", 1),   // landing announcement, B -> landed head
    ("rd", 1),   // rectangle-probe dock on a live B
    ("rdh", 1),  // rectangle-probe anchor on a landed head
    ("fl", 1),   // foreign-landing witness anchor on a landed head
    ("spU", 1),  // scan row bump
    ("fd", 1),   // replica detach message, follows the crawl
    ("int", 2),  // input-assembly interior bond
    // signal-following start triggers
    ("ftrig", 2),
    ("rtrig", 2),
    // signal-following route glues
    ("fn", 1),
    ("fe", 1),
    ("fs", 1),
    ("fw", 1),
    ("rn", 1),
    ("re", 1),
    ("rs", 1),
    ("rw", 1),
];

/// Intern the whole vocabulary (unprimed labels; primed forms share the
/// definition automatically).
pub fn register_all(set: &mut TileSet) {
    for &(label, strength) in CORE.iter().chain(EXTENSIONS) {
        set.glues.intern_label(label, strength).expect("vocabulary registration");
    }
}

/// Canonical strength for a label (primed or not), if it belongs to the
/// vocabulary.
pub fn strength_of(label: &str) -> Option<u8> {
    let (base, _) = split_label(label);
    CORE.iter().chain(EXTENSIONS).find(|(l, _)| *l == base).map(|&(_, s)| s)
}

/// Check that every glue used by `set` comes from the vocabulary with
/// the canonical strength.  Returns offending labels.
pub fn closure_violations(set: &TileSet) -> Vec<String> {
    let mut bad = Vec::new();
    for (id, _) in set.glues.iter() {
        let label = set.glues.label(id);
        match strength_of(&label) {
            Some(s) if s == set.glues.strength(id) => {}
            _ => bad.push(label),
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vocabulary_interns_cleanly() {
        let mut set = TileSet::new();
        register_all(&mut set);
        assert!(closure_violations(&set).is_empty());
    }

    #[test]
    fn strengths_resolve_for_primed_labels() {
        assert_eq!(strength_of("d'"), Some(2));
        assert_eq!(strength_of("x2'"), Some(1));
        assert_eq!(strength_of("nope"), None);
    }
}
