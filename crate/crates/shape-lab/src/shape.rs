//! Shapes: finite edge-connected cell sets, parsing, predicates, scaling.

use stam_core::{Dir, Pos};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub name: Option<String>,
    cells: BTreeSet<Pos>,
}

#[derive(Debug, Error)]
pub enum ShapeError {
    #[error("shape is empty")]
    Empty,
    #[error("shape is disconnected: components at {0}")]
    Disconnected(String),
    #[error("line {0}: unexpected character {1:?} (use '#' and '.')")]
    BadChar(usize, char),
    #[error("shape has an enclosed hole")]
    NotHoleFree,
}

impl Shape {
    /// Build from a cell list; rejects empty or edge-disconnected sets.
    pub fn from_cells(
        name: Option<String>,
        cells: impl IntoIterator<Item = Pos>,
    ) -> Result<Shape, ShapeError> {
        let cells: BTreeSet<Pos> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(ShapeError::Empty);
        }
        let comps = components(&cells);
        if comps.len() > 1 {
            let mut desc = String::new();
            for (i, c) in comps.iter().enumerate() {
                if i > 0 {
                    desc.push_str("; ");
                }
                desc.push_str(&format!("component {} starting {}", i + 1, c[0]));
            }
            return Err(ShapeError::Disconnected(desc));
        }
        Ok(Shape { name, cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = Pos> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, p: Pos) -> bool {
        self.cells.contains(&p)
    }

    /// Inclusive bounds: (min, max) corners.
    pub fn bounds(&self) -> (Pos, Pos) {
        let mut min = Pos::new(i32::MAX, i32::MAX);
        let mut max = Pos::new(i32::MIN, i32::MIN);
        for p in &self.cells {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        (min, max)
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Shape {
        Shape {
            name: self.name.clone(),
            cells: self.cells.iter().map(|p| p.translate(dx, dy)).collect(),
        }
    }

    /// The domain as a canonical sorted list (min corner at the origin).
    pub fn canonical_domain(&self) -> Vec<Pos> {
        let (min, _) = self.bounds();
        self.cells.iter().map(|p| p.translate(-min.x, -min.y)).collect()
    }

    pub fn to_text(&self) -> String {
        let (min, max) = self.bounds();
        let mut out = String::new();
        for y in (min.y..=max.y).rev() {
            for x in min.x..=max.x {
                out.push(if self.contains(Pos::new(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

fn components(cells: &BTreeSet<Pos>) -> Vec<Vec<Pos>> {
    let mut seen: BTreeSet<Pos> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(p) = queue.pop_front() {
            comp.push(p);
            for (_, n) in p.neighbors() {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Parse a grid document: '#' occupied, '.' empty, top row = greatest y.
/// An optional first line "name: whatever" names the shape.
pub fn parse_shape(text: &str) -> Result<Shape, ShapeError> {
    let mut name = None;
    let mut rows: Vec<&str> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim_end();
        if rows.is_empty() && name.is_none() {
            if let Some(n) = trimmed.strip_prefix("name:") {
                name = Some(n.trim().to_string());
                continue;
            }
        }
        if trimmed.is_empty() && rows.is_empty() {
            continue;
        }
        rows.push(trimmed);
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    let height = rows.len() as i32;
    let mut cells = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push(Pos::new(j as i32, height - 1 - i as i32)),
                '.' | ' ' => {}
                other => return Err(ShapeError::BadChar(i + 1, other)),
            }
        }
    }
    Shape::from_cells(name, cells)
}

/// True iff the complement is one (infinite) connected region: flood fill
/// the complement over a bounding box padded by one ring, starting outside.
pub fn is_hole_free(s: &Shape) -> bool {
    let (min, max) = s.bounds();
    let (lo, hi) = (min.translate(-1, -1), max.translate(1, 1));
    let w = (hi.x - lo.x + 1) as usize;
    let h = (hi.y - lo.y + 1) as usize;
    let idx = |p: Pos| ((p.y - lo.y) as usize) * w + ((p.x - lo.x) as usize);
    let mut seen = vec![false; w * h];
    let mut queue = VecDeque::from([lo]);
    seen[idx(lo)] = true;
    while let Some(p) = queue.pop_front() {
        for (_, n) in p.neighbors() {
            if n.x < lo.x || n.x > hi.x || n.y < lo.y || n.y > hi.y {
                continue;
            }
            if s.contains(n) || seen[idx(n)] {
                continue;
            }
            seen[idx(n)] = true;
            queue.push_back(n);
        }
    }
    // Any unreached empty cell inside the box is enclosed.
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let p = Pos::new(x, y);
            if !s.contains(p) && !seen[idx(p)] {
                return false;
            }
        }
    }
    true
}

/// True iff every cell has a horizontal neighbor in the shape and a
/// vertical neighbor in the shape.
pub fn is_min_width2(s: &Shape) -> bool {
    s.cells().all(|p| {
        (s.contains(p.step(Dir::E)) || s.contains(p.step(Dir::W)))
            && (s.contains(p.step(Dir::N)) || s.contains(p.step(Dir::S)))
    })
}

/// Blow up every cell to a k-by-k block.
pub fn scale_shape(s: &Shape, k: i32) -> Shape {
    assert!(k >= 1);
    let mut cells = Vec::new();
    for p in s.cells() {
        for dx in 0..k {
            for dy in 0..k {
                cells.push(Pos::new(p.x * k + dx, p.y * k + dy));
            }
        }
    }
    Shape { name: s.name.clone(), cells: cells.into_iter().collect() }
}

/// The layer-1 cell directly south of the easternmost bottom-row cell.
pub fn expected_leader_position(s: &Shape) -> Pos {
    let y_min = s.cells().map(|p| p.y).min().expect("nonempty");
    let x_e = s
        .cells()
        .filter(|p| p.y == y_min)
        .map(|p| p.x)
        .max()
        .unwrap();
    Pos::new(x_e, y_min - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_block_and_rejects_bad_input() {
        let s = parse_shape("##\n##").unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.contains(Pos::new(0, 0)) && s.contains(Pos::new(1, 1)));
        assert!(matches!(parse_shape(""), Err(ShapeError::Empty)));
        assert!(matches!(parse_shape("#.#"), Err(ShapeError::Disconnected(_))));
        assert!(matches!(parse_shape("#?#"), Err(ShapeError::BadChar(1, '?'))));
        let named = parse_shape("name: demo\n##\n.#").unwrap();
        assert_eq!(named.name.as_deref(), Some("demo"));
        assert_eq!(named.len(), 3);
    }

    #[test]
    fn top_row_maps_to_greatest_y() {
        let s = parse_shape("#.\n##").unwrap();
        assert!(s.contains(Pos::new(0, 1)), "top-left is y=1");
        assert!(!s.contains(Pos::new(1, 1)));
        assert!(s.contains(Pos::new(1, 0)));
    }

    #[test]
    fn hole_detection() {
        assert!(is_hole_free(&parse_shape("###\n###\n###").unwrap()));
        assert!(!is_hole_free(&parse_shape("###\n#.#\n###").unwrap()));
        let ell = parse_shape("##..\n##..\n####\n####").unwrap();
        assert!(is_hole_free(&ell));
    }

    #[test]
    fn min_width_predicate() {
        assert!(!is_min_width2(&parse_shape("#").unwrap()));
        assert!(is_min_width2(&parse_shape("##\n##").unwrap()));
        // An orphan column cell lacking a vertical neighbor.
        let s = parse_shape("##.\n###").unwrap();
        assert!(!is_min_width2(&s));
        assert!(!is_min_width2(&parse_shape("###\n###\n.#.").unwrap()));
    }

    #[test]
    fn scaling_composes_and_gives_min_width() {
        let s = parse_shape("#.\n##").unwrap();
        assert_eq!(scale_shape(&s, 1), s);
        let s6 = scale_shape(&s, 6);
        let s23 = scale_shape(&scale_shape(&s, 2), 3);
        assert_eq!(s6, s23);
        assert!(is_min_width2(&scale_shape(&s, 2)));
        assert_eq!(scale_shape(&s, 2).len(), s.len() * 4);
    }

    #[test]
    fn leader_position_examples() {
        let block = parse_shape("##\n##").unwrap();
        assert_eq!(expected_leader_position(&block), Pos::new(1, -1));
        let rect = parse_shape("#####\n#####").unwrap();
        assert_eq!(expected_leader_position(&rect), Pos::new(4, -1));
        let moved = rect.translate(3, 7);
        assert_eq!(expected_leader_position(&moved), Pos::new(7, 6));
    }
}
