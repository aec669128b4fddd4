//! Soup dynamics for the signal-passing tile assembly simulator: species,
//! event enumeration, the seeded uniform scheduler, doubling time steps,
//! and parseable traces with exact replay.

pub mod events;
pub mod run;
pub mod soup;
pub mod system;
pub mod trace;

pub use events::{attach_sites, Event};
pub use run::{
    apply_event, replay, run, run_time_steps, ApplyError, ReplayError, RunConfig, RunResult,
    Scheduler, StopCondition, StopReason, TimeStepReport,
};
pub use soup::{Soup, SoupEntry};
pub use system::{Species, TileSystem};
pub use trace::{SplitNote, Trace, TraceKind, TraceParseError, TraceRecord};
