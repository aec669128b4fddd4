//! Line-oriented traces: every applied event on one line, with any forced
//! splits appended to the line that caused them. The format round-trips
//! exactly, so byte comparison of two trace files is a determinism check.

use stam_core::{Dir, Pos};
use std::fmt;
use thiserror::Error;

/// One forced break: the bridges cut (empty when the assembly was simply
/// disconnected) and the stable pieces with their fresh ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitNote {
    pub from: u64,
    pub cuts: Vec<(Pos, Dir)>,
    pub pieces: Vec<(u64, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceKind {
    AttachSpecies { species: String, id: u64, dx: i32, dy: i32 },
    /// Assembly `b` attached onto assembly `a`, which keeps its id.
    AttachPair { a: u64, b: u64, dx: i32, dy: i32 },
    Signal { id: u64, pos: Pos, queue: usize, action: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub index: u64,
    pub kind: TraceKind,
    pub splits: Vec<SplitNote>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub records: Vec<TraceRecord>,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.index)?;
        match &self.kind {
            TraceKind::AttachSpecies { species, id, dx, dy } => {
                write!(f, "attach {species} -> {id} at ({dx},{dy})")?;
            }
            TraceKind::AttachPair { a, b, dx, dy } => {
                write!(f, "pair {b} -> {a} at ({dx},{dy})")?;
            }
            TraceKind::Signal { id, pos, queue, action } => {
                write!(f, "signal {id} ({},{})#{queue} {action}", pos.x, pos.y)?;
            }
        }
        for s in &self.splits {
            write!(f, " | split {}", s.from)?;
            for (p, d) in &s.cuts {
                write!(f, " cut({},{},{})", p.x, p.y, d.letter())?;
            }
            write!(f, " ->")?;
            for (id, n) in &s.pieces {
                write!(f, " {id}:{n}")?;
            }
        }
        Ok(())
    }
}

impl Trace {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Trace, TraceParseError> {
        let mut records = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            records.push(parse_record(line).map_err(|msg| TraceParseError {
                line: lineno + 1,
                message: msg,
            })?);
        }
        Ok(Trace { records })
    }
}

#[derive(Debug, Error)]
#[error("trace line {line}: {message}")]
pub struct TraceParseError {
    pub line: usize,
    pub message: String,
}

fn parse_pair(text: &str) -> Option<(i32, i32)> {
    let inner = text.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

fn parse_record(line: &str) -> Result<TraceRecord, String> {
    let mut chunks = line.split(" | ");
    let body = chunks.next().unwrap();
    let toks: Vec<&str> = body.split_whitespace().collect();
    let bad = |what: &str| format!("bad {what} in {body:?}");
    if toks.len() < 2 {
        return Err(bad("event"));
    }
    let index: u64 = toks[0].parse().map_err(|_| bad("index"))?;
    let kind = match toks[1] {
        "attach" if toks.len() == 7 && toks[3] == "->" && toks[5] == "at" => {
            let (dx, dy) = parse_pair(toks[6]).ok_or_else(|| bad("offset"))?;
            TraceKind::AttachSpecies {
                species: toks[2].to_string(),
                id: toks[4].parse().map_err(|_| bad("id"))?,
                dx,
                dy,
            }
        }
        "pair" if toks.len() == 7 && toks[3] == "->" && toks[5] == "at" => {
            let (dx, dy) = parse_pair(toks[6]).ok_or_else(|| bad("offset"))?;
            TraceKind::AttachPair {
                b: toks[2].parse().map_err(|_| bad("id"))?,
                a: toks[4].parse().map_err(|_| bad("id"))?,
                dx,
                dy,
            }
        }
        "signal" if toks.len() == 6 => {
            let (loc, queue) = toks[3].split_once('#').ok_or_else(|| bad("position"))?;
            let (x, y) = parse_pair(loc).ok_or_else(|| bad("position"))?;
            TraceKind::Signal {
                id: toks[2].parse().map_err(|_| bad("id"))?,
                pos: Pos::new(x, y),
                queue: queue.parse().map_err(|_| bad("queue"))?,
                action: format!("{} {}", toks[4], toks[5]),
            }
        }
        other => return Err(format!("unknown event kind {other:?}")),
    };
    let mut splits = Vec::new();
    for chunk in chunks {
        splits.push(parse_split(chunk)?);
    }
    Ok(TraceRecord { index, kind, splits })
}

fn parse_split(chunk: &str) -> Result<SplitNote, String> {
    let toks: Vec<&str> = chunk.split_whitespace().collect();
    let bad = |what: &str| format!("bad {what} in split {chunk:?}");
    if toks.len() < 3 || toks[0] != "split" {
        return Err(bad("header"));
    }
    let from: u64 = toks[1].parse().map_err(|_| bad("id"))?;
    let mut cuts = Vec::new();
    let mut i = 2;
    while i < toks.len() && toks[i] != "->" {
        let inner = toks[i]
            .strip_prefix("cut(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("cut"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(bad("cut"));
        }
        let x: i32 = parts[0].parse().map_err(|_| bad("cut"))?;
        let y: i32 = parts[1].parse().map_err(|_| bad("cut"))?;
        let d = parts[2]
            .chars()
            .next()
            .and_then(Dir::parse)
            .ok_or_else(|| bad("cut"))?;
        cuts.push((Pos::new(x, y), d));
        i += 1;
    }
    if i >= toks.len() {
        return Err(bad("arrow"));
    }
    let mut pieces = Vec::new();
    for t in &toks[i + 1..] {
        let (id, n) = t.split_once(':').ok_or_else(|| bad("piece"))?;
        pieces.push((
            id.parse().map_err(|_| bad("piece"))?,
            n.parse().map_err(|_| bad("piece"))?,
        ));
    }
    if pieces.len() < 2 {
        return Err(bad("piece count"));
    }
    Ok(SplitNote { from, cuts, pieces })
}
