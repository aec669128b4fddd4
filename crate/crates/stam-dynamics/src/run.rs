//! Event application, the seeded scheduler, run loops and trace replay.
//!
//! Determinism contract: a run is a pure function of (system, initial soup,
//! config). Events are drawn uniformly from the canonically ordered list of
//! available events with a counter-based RNG, fresh assembly ids are handed
//! out in sorted piece order, and replaying a recorded trace over the same
//! initial soup reproduces the same final soup exactly.

use crate::events::{attach_sites, Event};
use crate::soup::Soup;
use crate::system::TileSystem;
use crate::trace::{SplitNote, Trace, TraceKind, TraceRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stam_core::interchange;
use stam_core::Pos;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ApplyError {
    #[error("no assembly {0} in the soup")]
    NoAssembly(u64),
    #[error("no species {0}")]
    NoSpecies(usize),
    #[error("attachment is not valid at this offset")]
    InvalidAttach,
    #[error("no such queued signal")]
    BadSignal,
}

/// Apply one event. Attachments fire their seam glues; a deactivation that
/// leaves the assembly unstable splits it here, atomically with the event,
/// and the pieces get fresh ids in sorted order.
pub fn apply_event(
    system: &TileSystem,
    soup: &mut Soup,
    event: &Event,
) -> Result<Vec<SplitNote>, ApplyError> {
    let set = &system.set;
    match *event {
        Event::AttachSpecies { id, species, dx, dy } => {
            let sp = system.species.get(species).ok_or(ApplyError::NoSpecies(species))?;
            let entry = soup.get_mut(id).ok_or(ApplyError::NoAssembly(id))?;
            let seams = entry
                .asm
                .can_attach(set, &sp.assembly, dx, dy, system.tau)
                .ok_or(ApplyError::InvalidAttach)?;
            entry.asm.attach(set, &sp.assembly, dx, dy, &seams);
            entry.version += 1;
            Ok(Vec::new())
        }
        Event::AttachPair { a, b, dx, dy } => {
            if a == b {
                return Err(ApplyError::InvalidAttach);
            }
            let b_asm = &soup.get(b).ok_or(ApplyError::NoAssembly(b))?.asm;
            let a_entry = soup.get(a).ok_or(ApplyError::NoAssembly(a))?;
            let seams = a_entry
                .asm
                .can_attach(set, b_asm, dx, dy, system.tau)
                .ok_or(ApplyError::InvalidAttach)?;
            let b_entry = soup.remove(b).unwrap();
            let a_entry = soup.get_mut(a).unwrap();
            a_entry.asm.attach(set, &b_entry.asm, dx, dy, &seams);
            a_entry.version += 1;
            Ok(Vec::new())
        }
        Event::Signal { id, pos, queue, action } => {
            let entry = soup.get_mut(id).ok_or(ApplyError::NoAssembly(id))?;
            let queued = entry
                .asm
                .get(pos)
                .and_then(|t| t.pending.get(queue))
                .copied()
                .ok_or(ApplyError::BadSignal)?;
            if queued != action {
                return Err(ApplyError::BadSignal);
            }
            let outcome = entry.asm.enact_pending(set, pos, queue);
            entry.version += 1;
            if outcome.bond_removed && !entry.asm.is_tau_stable(set, system.tau) {
                let removed = soup.remove(id).unwrap();
                let (pieces, steps) = removed.asm.stabilize(set, system.tau);
                let cuts = steps.iter().filter_map(|s| s.cut).collect();
                let pieces = pieces
                    .into_iter()
                    .map(|p| {
                        let n = p.len();
                        (soup.add(p), n)
                    })
                    .collect();
                return Ok(vec![SplitNote { from: id, cuts, pieces }]);
            }
            Ok(Vec::new())
        }
    }
}

/// Draws events uniformly from the currently available set, caching each
/// assembly's species attachment sites by (id, version).
pub struct Scheduler {
    rng: ChaCha8Rng,
    pairwise: bool,
    cache: HashMap<u64, (u64, Vec<(usize, i32, i32)>)>,
}

impl Scheduler {
    pub fn new(seed: u64, pairwise: bool) -> Scheduler {
        Scheduler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pairwise,
            cache: HashMap::new(),
        }
    }

    fn refresh(&mut self, system: &TileSystem, id: u64, soup: &Soup) {
        let entry = soup.get(id).unwrap();
        if let Some((ver, _)) = self.cache.get(&id) {
            if *ver == entry.version {
                return;
            }
        }
        let mut sites = Vec::new();
        for (si, sp) in system.species.iter().enumerate() {
            for (dx, dy) in attach_sites(&system.set, &entry.asm, &sp.assembly, system.tau) {
                sites.push((si, dx, dy));
            }
        }
        self.cache.insert(id, (entry.version, sites));
    }

    /// Uniformly pick one available event, or None when nothing can happen.
    pub fn pick(&mut self, system: &TileSystem, soup: &Soup) -> Option<Event> {
        let ids = soup.ids();
        if self.cache.len() > 4 * ids.len() + 64 {
            self.cache.retain(|id, _| soup.get(*id).is_some());
        }
        let mut total: u64 = 0;
        for &id in &ids {
            self.refresh(system, id, soup);
            let entry = soup.get(id).unwrap();
            total += entry.asm.pending_count() as u64;
            total += self.cache[&id].1.len() as u64;
        }
        let pair_sites: Vec<(u64, u64, i32, i32)> = if self.pairwise {
            let mut v = Vec::new();
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i + 1..] {
                    let a_asm = &soup.get(a).unwrap().asm;
                    let b_asm = &soup.get(b).unwrap().asm;
                    for (dx, dy) in attach_sites(&system.set, a_asm, b_asm, system.tau) {
                        v.push((a, b, dx, dy));
                    }
                }
            }
            v
        } else {
            Vec::new()
        };
        total += pair_sites.len() as u64;
        if total == 0 {
            return None;
        }
        let mut k = self.rng.random_range(0..total);
        for &id in &ids {
            let entry = soup.get(id).unwrap();
            let pend = entry.asm.pending_count() as u64;
            if k < pend {
                let (pos, queue, action) =
                    entry.asm.pending_signals().nth(k as usize).unwrap();
                return Some(Event::Signal { id, pos, queue, action });
            }
            k -= pend;
            let sites = &self.cache[&id].1;
            if (k as usize) < sites.len() {
                let (species, dx, dy) = sites[k as usize];
                return Some(Event::AttachSpecies { id, species, dx, dy });
            }
            k -= sites.len() as u64;
        }
        let (a, b, dx, dy) = pair_sites[k as usize];
        Some(Event::AttachPair { a, b, dx, dy })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub max_events: u64,
    pub record_trace: bool,
    pub pairwise: bool,
    /// Evaluate the stop condition every this many events (it is always
    /// evaluated once before the first event).
    pub stop_check_every: u64,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            seed: 0,
            max_events: 1_000_000,
            record_trace: false,
            pairwise: false,
            stop_check_every: 1,
        }
    }
}

pub struct StopCondition {
    pub name: String,
    pub check: Box<dyn Fn(&TileSystem, &Soup) -> bool + Send + Sync>,
}

impl StopCondition {
    pub fn new(
        name: &str,
        check: impl Fn(&TileSystem, &Soup) -> bool + Send + Sync + 'static,
    ) -> StopCondition {
        StopCondition { name: name.to_string(), check: Box::new(check) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopReason {
    /// The stop condition reported true.
    Stopped(String),
    /// The event budget ran out.
    MaxEvents,
    /// No event is available; the soup is terminal.
    Exhausted,
}

#[derive(Debug)]
pub struct RunResult {
    pub events: u64,
    pub reason: StopReason,
    pub trace: Trace,
}

fn record_for(system: &TileSystem, index: u64, ev: &Event, splits: Vec<SplitNote>) -> TraceRecord {
    let kind = match *ev {
        Event::AttachSpecies { id, species, dx, dy } => TraceKind::AttachSpecies {
            species: system.species[species].name.clone(),
            id,
            dx,
            dy,
        },
        Event::AttachPair { a, b, dx, dy } => TraceKind::AttachPair { a, b, dx, dy },
        Event::Signal { id, pos, queue, action } => TraceKind::Signal {
            id,
            pos,
            queue,
            action: interchange::format_action(&system.set, action),
        },
    };
    TraceRecord { index, kind, splits }
}

pub fn run(
    system: &TileSystem,
    soup: &mut Soup,
    cfg: &RunConfig,
    stop: Option<&StopCondition>,
) -> RunResult {
    let mut sched = Scheduler::new(cfg.seed, cfg.pairwise);
    let mut trace = Trace::default();
    let mut events = 0u64;
    let check_every = cfg.stop_check_every.max(1);
    loop {
        if events % check_every == 0 {
            if let Some(s) = stop {
                if (s.check)(system, soup) {
                    return RunResult {
                        events,
                        reason: StopReason::Stopped(s.name.clone()),
                        trace,
                    };
                }
            }
        }
        if events >= cfg.max_events {
            return RunResult { events, reason: StopReason::MaxEvents, trace };
        }
        let Some(ev) = sched.pick(system, soup) else {
            return RunResult { events, reason: StopReason::Exhausted, trace };
        };
        let splits = apply_event(system, soup, &ev).expect("scheduled event must apply");
        if cfg.record_trace {
            trace.records.push(record_for(system, events, &ev, splits));
        }
        events += 1;
    }
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("event {index}: {source}")]
    Apply {
        index: u64,
        #[source]
        source: ApplyError,
    },
    #[error("event {index}: unknown species {name:?}")]
    UnknownSpecies { index: u64, name: String },
    #[error("event {index}: bad action text {text:?}")]
    BadAction { index: u64, text: String },
    #[error("event {index}: splits disagree with the recorded trace")]
    SplitMismatch { index: u64 },
}

/// Re-apply a recorded trace over the same initial soup. The result is the
/// exact final soup of the original run; any divergence is an error.
pub fn replay(
    system: &TileSystem,
    soup: &mut Soup,
    trace: &Trace,
) -> Result<(), ReplayError> {
    for rec in &trace.records {
        let index = rec.index;
        let ev = match &rec.kind {
            TraceKind::AttachSpecies { species, id, dx, dy } => {
                let si = system.species_index(species).ok_or_else(|| {
                    ReplayError::UnknownSpecies { index, name: species.clone() }
                })?;
                Event::AttachSpecies { id: *id, species: si, dx: *dx, dy: *dy }
            }
            TraceKind::AttachPair { a, b, dx, dy } => {
                Event::AttachPair { a: *a, b: *b, dx: *dx, dy: *dy }
            }
            TraceKind::Signal { id, pos, queue, action } => {
                let act = interchange::parse_action(&system.set, action).map_err(|_| {
                    ReplayError::BadAction { index, text: action.clone() }
                })?;
                Event::Signal { id: *id, pos: *pos, queue: *queue, action: act }
            }
        };
        let splits = apply_event(system, soup, &ev)
            .map_err(|source| ReplayError::Apply { index, source })?;
        if splits != rec.splits {
            return Err(ReplayError::SplitMismatch { index });
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct TimeStepReport {
    /// Census of every tracked domain at each completed step boundary.
    pub boundary_census: Vec<Vec<usize>>,
    pub completed: usize,
    pub total_events: u64,
    /// True when a step could not finish within its event budget.
    pub starved: bool,
}

/// Run in doubling time steps: a step ends at the first event after which
/// every tracked domain's census (quiescent assemblies of exactly that
/// shape) reaches twice its count at the start of the step.
pub fn run_time_steps(
    system: &TileSystem,
    soup: &mut Soup,
    cfg: &RunConfig,
    tracked: &[Vec<Pos>],
    steps: usize,
    max_events_per_step: u64,
) -> TimeStepReport {
    let mut sched = Scheduler::new(cfg.seed, cfg.pairwise);
    let mut report = TimeStepReport {
        boundary_census: Vec::new(),
        completed: 0,
        total_events: 0,
        starved: false,
    };
    for _ in 0..steps {
        let starts: Vec<usize> = tracked.iter().map(|d| soup.census(d)).collect();
        if starts.iter().any(|&s| s == 0) {
            report.starved = true;
            return report;
        }
        let mut used = 0u64;
        loop {
            let counts: Vec<usize> = tracked.iter().map(|d| soup.census(d)).collect();
            if counts.iter().zip(&starts).all(|(&c, &s)| c >= 2 * s) {
                report.boundary_census.push(counts);
                report.completed += 1;
                break;
            }
            if used >= max_events_per_step {
                report.starved = true;
                return report;
            }
            let Some(ev) = sched.pick(system, soup) else {
                report.starved = true;
                return report;
            };
            apply_event(system, soup, &ev).expect("scheduled event must apply");
            used += 1;
            report.total_events += 1;
        }
    }
    report
}
