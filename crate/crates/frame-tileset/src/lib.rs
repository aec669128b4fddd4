//! Frame-building tile set: a soup of signal tiles that grows concentric
//! layers around a hole-free seed polyomino until a layer closes as a plain
//! rectangle, detaches it, elects a leader tile on the innermost ring, and
//! leaves the seed's outline embossed on the ring's inner face.
//!
//! The catalog in [`catalog`] is the one entry point; the other modules hold
//! the per-species wiring.

pub mod collision;
pub mod decks;
pub mod doubling;
pub mod gadgets;
pub mod leader;
pub mod paths;
pub mod plan;
pub mod vocabulary;

pub mod catalog;

pub use catalog::{build_frame_catalog, is_frame_class, wiring_table, FrameCatalog};
pub use plan::TilePlan;
