//! Perimeter geometry: corner classification and the EXT/INT edge split.
//!
//! Vertices are lattice points; the vertex (x, y) touches the four cells
//! whose corners meet there. A perimeter vertex with exactly one incident
//! cell is a convex corner (classified by where the vertex sits on that
//! cell); one with exactly three is concave (classified by the missing
//! cell's direction from the vertex, reported at the inner diagonal cell).
//! Perimeter edges lying on the shape's convex hull are EXT, the rest INT;
//! concavities are the maximal vertex-connected runs of INT edges.

use crate::shape::Shape;
use stam_core::{Dir, Pos};
use std::collections::{BTreeMap, BTreeSet};

/// Diagonal corner classes, named like compass quadrants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    NE,
    SE,
    SW,
    NW,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NE, Quadrant::SE, Quadrant::SW, Quadrant::NW];

    /// Unit cell offset from a vertex into this quadrant.
    fn cell_offset(self) -> (i32, i32) {
        match self {
            Quadrant::NE => (0, 0),
            Quadrant::SE => (0, -1),
            Quadrant::SW => (-1, -1),
            Quadrant::NW => (-1, 0),
        }
    }
}

/// One exposed cell face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PerimeterEdge {
    pub cell: Pos,
    pub side: Dir,
}

impl PerimeterEdge {
    /// The edge's two lattice endpoints.
    pub fn endpoints(self) -> (Pos, Pos) {
        let c = self.cell;
        match self.side {
            Dir::S => (Pos::new(c.x, c.y), Pos::new(c.x + 1, c.y)),
            Dir::N => (Pos::new(c.x, c.y + 1), Pos::new(c.x + 1, c.y + 1)),
            Dir::W => (Pos::new(c.x, c.y), Pos::new(c.x, c.y + 1)),
            Dir::E => (Pos::new(c.x + 1, c.y), Pos::new(c.x + 1, c.y + 1)),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CornerReport {
    /// Convex corner cells per class: the single occupied cell at the
    /// vertex; the class names the vertex's position on that cell.
    pub convex: BTreeMap<Quadrant, Vec<Pos>>,
    /// Concave corner cells per class: the inner diagonal cell; the class
    /// names the missing cell's direction from the vertex.
    pub concave: BTreeMap<Quadrant, Vec<Pos>>,
    pub ext: Vec<PerimeterEdge>,
    pub int: Vec<PerimeterEdge>,
}

impl CornerReport {
    pub fn convex_count(&self) -> usize {
        self.convex.values().map(Vec::len).sum()
    }

    pub fn concave_count(&self) -> usize {
        self.concave.values().map(Vec::len).sum()
    }

    /// Maximal runs of INT edges connected through shared endpoints.
    pub fn concavities(&self) -> Vec<Vec<PerimeterEdge>> {
        let mut vertex_edges: BTreeMap<Pos, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.int.iter().enumerate() {
            let (a, b) = e.endpoints();
            vertex_edges.entry(a).or_default().push(i);
            vertex_edges.entry(b).or_default().push(i);
        }
        let mut seen = vec![false; self.int.len()];
        let mut out = Vec::new();
        for start in 0..self.int.len() {
            if seen[start] {
                continue;
            }
            let mut group = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                group.push(self.int[i]);
                let (a, b) = self.int[i].endpoints();
                for v in [a, b] {
                    for &j in &vertex_edges[&v] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            group.sort();
            out.push(group);
        }
        out
    }
}

/// Cells of the shape whose east and south neighbours are both outside:
/// where a layer's south-east corner gadget can seat.
pub fn convex_se_cells(s: &Shape) -> Vec<Pos> {
    s.cells()
        .filter(|&p| !s.contains(p.step(Dir::E)) && !s.contains(p.step(Dir::S)))
        .collect()
}

/// 2x2 windows holding exactly two diagonal cells of the shape; impossible
/// for hole-free edge-connected shapes, reported for diagnostics.
pub fn diagonal_windows(s: &Shape) -> Vec<Pos> {
    let mut out = Vec::new();
    let (min, max) = s.bounds();
    for y in (min.y - 1)..=max.y {
        for x in (min.x - 1)..=max.x {
            let sw = s.contains(Pos::new(x, y));
            let se = s.contains(Pos::new(x + 1, y));
            let nw = s.contains(Pos::new(x, y + 1));
            let ne = s.contains(Pos::new(x + 1, y + 1));
            if (sw && ne && !se && !nw) || (se && nw && !sw && !ne) {
                out.push(Pos::new(x + 1, y + 1)); // the shared vertex
            }
        }
    }
    out
}

pub fn analyze_geometry(s: &Shape) -> CornerReport {
    let mut report = CornerReport::default();
    for q in Quadrant::ALL {
        report.convex.insert(q, Vec::new());
        report.concave.insert(q, Vec::new());
    }

    // Classify every vertex incident to at least one cell.
    let mut vertices: BTreeSet<Pos> = BTreeSet::new();
    for c in s.cells() {
        for v in [
            Pos::new(c.x, c.y),
            Pos::new(c.x + 1, c.y),
            Pos::new(c.x, c.y + 1),
            Pos::new(c.x + 1, c.y + 1),
        ] {
            vertices.insert(v);
        }
    }
    for v in vertices {
        let mut occupied = Vec::new();
        let mut missing = Vec::new();
        for q in Quadrant::ALL {
            let (dx, dy) = q.cell_offset();
            let cell = Pos::new(v.x + dx, v.y + dy);
            if s.contains(cell) {
                occupied.push((q, cell));
            } else {
                missing.push((q, cell));
            }
        }
        match occupied.len() {
            1 => {
                let (q, cell) = occupied[0];
                // The vertex sits diagonally opposite its quadrant on the
                // cell: the cell NE of the vertex has the vertex at its SW.
                let class = match q {
                    Quadrant::NE => Quadrant::SW,
                    Quadrant::SE => Quadrant::NW,
                    Quadrant::SW => Quadrant::NE,
                    Quadrant::NW => Quadrant::SE,
                };
                report.convex.get_mut(&class).unwrap().push(cell);
            }
            3 => {
                let (q, _) = missing[0];
                let (dx, dy) = match q {
                    Quadrant::NE => Quadrant::SW.cell_offset(),
                    Quadrant::SE => Quadrant::NW.cell_offset(),
                    Quadrant::SW => Quadrant::NE.cell_offset(),
                    Quadrant::NW => Quadrant::SE.cell_offset(),
                };
                let inner = Pos::new(v.x + dx, v.y + dy);
                report.concave.get_mut(&q).unwrap().push(inner);
            }
            _ => {}
        }
    }
    for list in report.convex.values_mut().chain(report.concave.values_mut()) {
        list.sort();
    }

    // Perimeter edges, split by convex-hull membership.
    let hull = convex_hull(s);
    let mut perimeter = Vec::new();
    for cell in s.cells() {
        for side in Dir::ALL {
            if !s.contains(cell.step(side)) {
                perimeter.push(PerimeterEdge { cell, side });
            }
        }
    }
    perimeter.sort();
    for e in perimeter {
        let (a, b) = e.endpoints();
        if on_hull_boundary(&hull, a, b) {
            report.ext.push(e);
        } else {
            report.int.push(e);
        }
    }
    report
}

/// Convex hull of all cell corner vertices (monotone chain, integer math),
/// counter-clockwise without the closing point.
fn convex_hull(s: &Shape) -> Vec<Pos> {
    let mut pts: Vec<Pos> = Vec::new();
    for c in s.cells() {
        pts.push(Pos::new(c.x, c.y));
        pts.push(Pos::new(c.x + 1, c.y));
        pts.push(Pos::new(c.x, c.y + 1));
        pts.push(Pos::new(c.x + 1, c.y + 1));
    }
    pts.sort_by_key(|p| (p.x, p.y));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: Pos, a: Pos, b: Pos| {
        (a.x - o.x) as i64 * (b.y - o.y) as i64 - (a.y - o.y) as i64 * (b.x - o.x) as i64
    };
    let mut lower: Vec<Pos> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pos> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Does the unit segment (a, b) lie on the hull's boundary polygon?
fn on_hull_boundary(hull: &[Pos], a: Pos, b: Pos) -> bool {
    let on_segment = |p: Pos, u: Pos, v: Pos| {
        let cross =
            (v.x - u.x) as i64 * (p.y - u.y) as i64 - (v.y - u.y) as i64 * (p.x - u.x) as i64;
        cross == 0
            && p.x >= u.x.min(v.x)
            && p.x <= u.x.max(v.x)
            && p.y >= u.y.min(v.y)
            && p.y <= u.y.max(v.y)
    };
    let n = hull.len();
    if n == 1 {
        return false;
    }
    if n == 2 {
        return on_segment(a, hull[0], hull[1]) && on_segment(b, hull[0], hull[1]);
    }
    (0..n).any(|i| {
        let (u, v) = (hull[i], hull[(i + 1) % n]);
        on_segment(a, u, v) && on_segment(b, u, v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::parse_shape;

    #[test]
    fn rectangle_report() {
        let s = parse_shape("###\n###").unwrap();
        let r = analyze_geometry(&s);
        assert_eq!(r.convex_count(), 4);
        assert_eq!(r.concave_count(), 0);
        for q in Quadrant::ALL {
            assert_eq!(r.convex[&q].len(), 1, "{q:?}");
        }
        assert_eq!(r.convex[&Quadrant::SE], vec![Pos::new(2, 0)]);
        assert_eq!(r.convex[&Quadrant::NW], vec![Pos::new(0, 1)]);
        assert!(r.int.is_empty());
        assert_eq!(r.ext.len(), 10);
    }

    #[test]
    fn ell_report() {
        // 4x4 minus the top-right 2x2.
        let s = parse_shape("##..\n##..\n####\n####").unwrap();
        let r = analyze_geometry(&s);
        assert_eq!(r.convex_count(), 5);
        assert_eq!(r.concave_count(), 1);
        assert_eq!(r.concave[&Quadrant::NE], vec![Pos::new(1, 1)]);
        assert!(!r.int.is_empty());
        let conc = r.concavities();
        assert_eq!(conc.len(), 1);
        assert_eq!(conc[0].len(), r.int.len());
        // The notch faces: east faces of column 1 (rows 2..3) and north
        // faces of row 1 (cols 2..3).
        assert!(conc[0].contains(&PerimeterEdge { cell: Pos::new(1, 2), side: Dir::E }));
        assert!(conc[0].contains(&PerimeterEdge { cell: Pos::new(2, 1), side: Dir::N }));
    }

    #[test]
    fn corner_difference_is_four() {
        for text in ["##\n##", "##..\n##..\n####\n####", "###\n###\n#..", "#"] {
            let s = parse_shape(text).unwrap();
            let r = analyze_geometry(&s);
            assert_eq!(r.convex_count() as i64 - r.concave_count() as i64, 4, "{text}");
        }
    }

    #[test]
    fn se_cells_and_diagonal_windows() {
        let s = parse_shape("###\n###\n#..").unwrap();
        assert_eq!(convex_se_cells(&s), vec![Pos::new(0, 0), Pos::new(2, 1)]);
        assert!(diagonal_windows(&s).is_empty());
        let diag = Shape::from_cells(None, [Pos::new(0, 0), Pos::new(0, 1), Pos::new(1, 1)])
            .unwrap();
        assert!(diagonal_windows(&diag).is_empty());
    }
}
