//! Core model for a signal-passing tile assembly simulator on the square
//! lattice: glue pairing, tile types with per-side glue decks and
//! tile-local rules, and assemblies with derived bonds, temperature-2
//! stability checking and asynchronous signal firing.

pub mod assembly;
pub mod geom;
pub mod glue;
pub mod interchange;
pub mod oracle;
pub mod testgen;
pub mod tile;

pub use assembly::{Assembly, Bond, BreakableCuts, EnactOutcome, SeamBond, SplitStep, TileInstance};
pub use geom::{Dir, Pos};
pub use glue::{GlueDef, GlueError, GlueId, GlueTable};
pub use tile::{Action, Effect, GlueState, Rule, Slot, TileSet, TileSetError, TileType, TileTypeBuilder, TileTypeId};
