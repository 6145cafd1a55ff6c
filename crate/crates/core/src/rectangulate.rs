//! Rectilinear skeleton `T ∪ ∂R`, its faces, rectangulation of rectilinear
//! faces by recursive median cuts, and the per-rectangle crossing sets.
//!
//! Everything lives on the Hanan grid of the skeleton's coordinates, so the
//! overlay only ever compares input coordinates exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{DirectionInterval, Point, Segment};
use crate::math;
use crate::mst::{bbox, rmst_lshape, Rect};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    Skeleton,
    Cut,
}

/// Cells and unit walls of a Hanan grid.
#[derive(Debug, Clone)]
struct Grid {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Vertical wall at `xs[i]` spanning row `j`: index `i * rows + j`.
    vwall: Vec<bool>,
    /// Horizontal wall at `ys[j]` spanning column `i`: index `j * cols + i`.
    hwall: Vec<bool>,
}

fn sorted_unique(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

fn index_of(coords: &[f64], c: f64) -> Option<usize> {
    coords.binary_search_by(|x| x.total_cmp(&c)).ok()
}

impl Grid {
    fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let (nx, ny) = (xs.len(), ys.len());
        Grid {
            vwall: vec![false; nx * ny.saturating_sub(1)],
            hwall: vec![false; ny * nx.saturating_sub(1)],
            xs,
            ys,
        }
    }

    fn cols(&self) -> usize {
        self.xs.len() - 1
    }

    fn rows(&self) -> usize {
        self.ys.len() - 1
    }

    fn num_cells(&self) -> usize {
        self.cols() * self.rows()
    }

    fn cell(&self, id: usize) -> (usize, usize) {
        (id % self.cols(), id / self.cols())
    }

    fn cell_id(&self, i: usize, j: usize) -> usize {
        j * self.cols() + i
    }

    fn vwall_id(&self, i: usize, j: usize) -> usize {
        i * self.rows() + j
    }

    fn hwall_id(&self, i: usize, j: usize) -> usize {
        j * self.cols() + i
    }

    fn add_wall(&mut self, s: &Segment) -> Result<()> {
        let (p, q) = (s.p, s.q);
        if p.x == q.x {
            let i = index_of(&self.xs, p.x).ok_or(Error::NotRectilinear)?;
            let a = index_of(&self.ys, p.y.min(q.y)).ok_or(Error::NotRectilinear)?;
            let b = index_of(&self.ys, p.y.max(q.y)).ok_or(Error::NotRectilinear)?;
            for j in a..b {
                let w = self.vwall_id(i, j);
                self.vwall[w] = true;
            }
        } else if p.y == q.y {
            let j = index_of(&self.ys, p.y).ok_or(Error::NotRectilinear)?;
            let a = index_of(&self.xs, p.x.min(q.x)).ok_or(Error::NotRectilinear)?;
            let b = index_of(&self.xs, p.x.max(q.x)).ok_or(Error::NotRectilinear)?;
            for i in a..b {
                let w = self.hwall_id(i, j);
                self.hwall[w] = true;
            }
        } else {
            return Err(Error::NotRectilinear);
        }
        Ok(())
    }

    /// Neighbours of a cell that are not separated from it by a wall.
    fn open_neighbors(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        let (i, j) = self.cell(id);
        let (cols, rows) = (self.cols(), self.rows());
        let left = (i > 0 && !self.vwall[self.vwall_id(i, j)]).then(|| id - 1);
        let right = (i + 1 < cols && !self.vwall[self.vwall_id(i + 1, j)]).then(|| id + 1);
        let down = (j > 0 && !self.hwall[self.hwall_id(i, j)]).then(|| id - cols);
        let up = (j + 1 < rows && !self.hwall[self.hwall_id(i, j + 1)]).then(|| id + cols);
        [left, right, down, up].into_iter().flatten()
    }

    /// Connected components of `cells` (restricted to cells marked with `stamp`).
    fn components(&self, cells: &[u32], mark: &mut [u32], stamp: u32, next: &mut u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for &c in cells {
            if mark[c as usize] != stamp {
                continue;
            }
            *next += 1;
            let comp_stamp = *next;
            mark[c as usize] = comp_stamp;
            let mut comp = vec![c];
            let mut k = 0;
            while k < comp.len() {
                let id = comp[k] as usize;
                k += 1;
                for nb in self.open_neighbors(id) {
                    if mark[nb] == stamp {
                        mark[nb] = comp_stamp;
                        comp.push(nb as u32);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn cell_rect(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> Rect {
        Rect {
            xmin: self.xs[i0],
            xmax: self.xs[i1 + 1],
            ymin: self.ys[j0],
            ymax: self.ys[j1 + 1],
        }
    }
}

/// A face of the skeleton: a connected set of grid cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Face {
    pub bounds: Rect,
    pub area: f64,
    /// Length of the walls bounding the face; walls with the face on both
    /// sides (slits) count twice.
    pub boundary_weight: f64,
    cells: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Skeleton {
    pub bbox: Rect,
    /// Realized L-shaped tree pieces followed by the four sides of the bounding box.
    pub segments: Vec<Segment>,
    pub faces: Vec<Face>,
    /// Set when the points do not span a two-dimensional bounding box.
    pub degenerate: bool,
    grid: Option<Grid>,
}

impl Skeleton {
    pub fn weight(&self) -> f64 {
        self.segments.iter().map(Segment::length).sum()
    }
}

fn face_of(grid: &Grid, cells: Vec<u32>, in_face: &[bool]) -> Face {
    let (mut i0, mut i1, mut j0, mut j1) = (usize::MAX, 0, usize::MAX, 0);
    let (mut area, mut boundary) = (0.0, 0.0);
    for &c in &cells {
        let (i, j) = grid.cell(c as usize);
        let (w, h) = (grid.xs[i + 1] - grid.xs[i], grid.ys[j + 1] - grid.ys[j]);
        (i0, i1, j0, j1) = (i0.min(i), i1.max(i), j0.min(j), j1.max(j));
        area += w * h;
        let walls = [
            (grid.vwall[grid.vwall_id(i, j)] || i == 0 || !in_face[c as usize - 1], h),
            (
                grid.vwall[grid.vwall_id(i + 1, j)] || i + 1 == grid.cols() || !in_face[c as usize + 1],
                h,
            ),
            (
                grid.hwall[grid.hwall_id(i, j)] || j == 0 || !in_face[c as usize - grid.cols()],
                w,
            ),
            (
                grid.hwall[grid.hwall_id(i, j + 1)]
                    || j + 1 == grid.rows()
                    || !in_face[c as usize + grid.cols()],
                w,
            ),
        ];
        boundary += walls.iter().filter(|(wall, _)| *wall).map(|(_, l)| l).sum::<f64>();
    }
    Face {
        bounds: grid.cell_rect(i0, i1, j0, j1),
        area,
        boundary_weight: boundary,
        cells,
    }
}

fn extract_faces(grid: &Grid, inside: impl Fn(usize) -> bool) -> Vec<Face> {
    let n = grid.num_cells();
    let mut mark: Vec<u32> = (0..n).map(|c| u32::from(inside(c))).collect();
    let all: Vec<u32> = (0..n as u32).collect();
    let mut next = 1;
    let comps = grid.components(&all, &mut mark, 1, &mut next);
    let mut in_face = vec![false; n];
    comps
        .into_iter()
        .map(|cells| {
            for &c in &cells {
                in_face[c as usize] = true;
            }
            let f = face_of(grid, cells, &in_face);
            for &c in &f.cells {
                in_face[c as usize] = false;
            }
            f
        })
        .collect()
}

/// Builds `T ∪ ∂bbox` for the L-shaped rectilinear MST `T` and extracts its faces.
pub fn build_skeleton(points: &[Point]) -> Result<Skeleton> {
    let r = bbox(points)?;
    let tree = rmst_lshape(points)?;
    let mut segments = tree.segments;
    if r.is_degenerate() {
        return Ok(Skeleton {
            bbox: r,
            segments,
            faces: Vec::new(),
            degenerate: true,
            grid: None,
        });
    }
    segments.extend(r.boundary_segments());
    let xs = sorted_unique(points.iter().map(|p| p.x).collect());
    let ys = sorted_unique(points.iter().map(|p| p.y).collect());
    let mut grid = Grid::new(xs, ys);
    for s in &segments {
        grid.add_wall(s)?;
    }
    let faces = extract_faces(&grid, |_| true);
    Ok(Skeleton {
        bbox: r,
        segments,
        faces,
        degenerate: false,
        grid: Some(grid),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rectangulation {
    pub cuts: Vec<Segment>,
    pub rects: Vec<Rect>,
}

impl Rectangulation {
    pub fn cut_weight(&self) -> f64 {
        self.cuts.iter().map(Segment::length).sum()
    }
}

/// Splits the cells of one face into rectangles, adding walls to `grid`.
/// Returns the rectangles and the unit walls that were added, as
/// `(vertical, wall index)`.
fn rectangulate_cells(grid: &mut Grid, cells: Vec<u32>, mark: &mut [u32], next: &mut u32) -> (Vec<Rect>, Vec<(bool, usize)>) {
    let mut rects = Vec::new();
    let mut added = Vec::new();
    let mut stack = vec![cells];
    while let Some(region) = stack.pop() {
        *next += 1;
        let stamp = *next;
        for &c in &region {
            mark[c as usize] = stamp;
        }
        let cols = grid.cols();
        let member = |mark: &[u32], i: usize, j: usize| mark[j * cols + i] == stamp;
        let (mut i0, mut i1, mut j0, mut j1) = (usize::MAX, 0, usize::MAX, 0);
        for &c in &region {
            let (i, j) = grid.cell(c as usize);
            (i0, i1, j0, j1) = (i0.min(i), i1.max(i), j0.min(j), j1.max(j));
        }
        // Open cost of cutting along each grid line, and which lines carry a
        // wall touching the region (its vertices and slits lie on those).
        let (nv, nh) = (i1 - i0, j1 - j0);
        let mut vcost = vec![0.0; nv];
        let mut hcost = vec![0.0; nh];
        let mut vevent = vec![false; nv];
        let mut hevent = vec![false; nh];
        let mut interior_walls = false;
        for &c in &region {
            let (i, j) = grid.cell(c as usize);
            if i > i0 {
                let wall = grid.vwall[grid.vwall_id(i, j)];
                if member(mark, i - 1, j) && !wall {
                    vcost[i - i0 - 1] += grid.ys[j + 1] - grid.ys[j];
                } else {
                    vevent[i - i0 - 1] = true;
                    interior_walls |= member(mark, i - 1, j);
                }
            }
            if i < i1 && (grid.vwall[grid.vwall_id(i + 1, j)] || !member(mark, i + 1, j)) {
                vevent[i - i0] = true;
            }
            if j > j0 {
                let wall = grid.hwall[grid.hwall_id(i, j)];
                if member(mark, i, j - 1) && !wall {
                    hcost[j - j0 - 1] += grid.xs[i + 1] - grid.xs[i];
                } else {
                    hevent[j - j0 - 1] = true;
                    interior_walls |= member(mark, i, j - 1);
                }
            }
            if j < j1 && (grid.hwall[grid.hwall_id(i, j + 1)] || !member(mark, i, j + 1)) {
                hevent[j - j0] = true;
            }
        }
        let full = region.len() == (nv + 1) * (nh + 1);
        if full && !interior_walls {
            rects.push(grid.cell_rect(i0, i1, j0, j1));
            continue;
        }
        let median = |cost: &[f64], event: &[bool]| {
            let mut lines: Vec<usize> = (0..cost.len()).filter(|&k| event[k] && cost[k] > 0.0).collect();
            if lines.is_empty() {
                lines = (0..cost.len()).filter(|&k| cost[k] > 0.0).collect();
            }
            (!lines.is_empty()).then(|| lines[lines.len() / 2])
        };
        let v = median(&vcost, &vevent);
        let h = median(&hcost, &hevent);
        let vertical = match (v, h) {
            (Some(a), Some(b)) => vcost[a] <= hcost[b],
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => {
                // Unreachable for connected regions; keep the cells as they are.
                for &c in &region {
                    let (i, j) = grid.cell(c as usize);
                    rects.push(grid.cell_rect(i, i, j, j));
                }
                continue;
            }
        };
        for &c in &region {
            let (i, j) = grid.cell(c as usize);
            if vertical {
                let line = i0 + 1 + v.unwrap();
                if i == line && member(mark, i - 1, j) {
                    let w = grid.vwall_id(i, j);
                    if !grid.vwall[w] {
                        grid.vwall[w] = true;
                        added.push((true, w));
                    }
                }
            } else {
                let line = j0 + 1 + h.unwrap();
                if j == line && member(mark, i, j - 1) {
                    let w = grid.hwall_id(i, j);
                    if !grid.hwall[w] {
                        grid.hwall[w] = true;
                        added.push((false, w));
                    }
                }
            }
        }
        let mut parts = grid.components(&region, mark, stamp, next);
        parts.reverse();
        stack.extend(parts);
    }
    (rects, added)
}

/// Joins unit walls into maximal segments.
fn wall_segments(grid: &Grid, walls: &mut [(bool, usize)]) -> Vec<Segment> {
    walls.sort_unstable();
    let mut out: Vec<Segment> = Vec::new();
    let mut last: Option<(bool, usize)> = None;
    for &(vertical, w) in walls.iter() {
        let seg = if vertical {
            let (i, j) = (w / grid.rows(), w % grid.rows());
            Segment::new(Point::new(grid.xs[i], grid.ys[j]), Point::new(grid.xs[i], grid.ys[j + 1]))
        } else {
            let (j, i) = (w / grid.cols(), w % grid.cols());
            Segment::new(Point::new(grid.xs[i], grid.ys[j]), Point::new(grid.xs[i + 1], grid.ys[j]))
        };
        let continues = last.is_some_and(|(lv, lw)| {
            lv == vertical
                && lw + 1 == w
                && if vertical { lw / grid.rows() == w / grid.rows() } else { lw / grid.cols() == w / grid.cols() }
        });
        match out.last_mut() {
            Some(prev) if continues => prev.q = seg.q,
            _ => out.push(seg),
        }
        last = Some((vertical, w));
    }
    out
}

fn check_polygon(poly: &[Point]) -> Result<()> {
    let m = poly.len();
    if m < 4 {
        return Err(Error::NotRectilinear);
    }
    let edges: Vec<Segment> = (0..m).map(|k| Segment::new(poly[k], poly[(k + 1) % m])).collect();
    for e in &edges {
        let (h, v) = (e.p.y == e.q.y, e.p.x == e.q.x);
        if h == v {
            return Err(Error::NotRectilinear);
        }
    }
    let span = |a: f64, b: f64| (a.min(b), a.max(b));
    for a in 0..m {
        for b in a + 1..m {
            let (e, f) = (&edges[a], &edges[b]);
            let (ex, ey) = (span(e.p.x, e.q.x), span(e.p.y, e.q.y));
            let (fx, fy) = (span(f.p.x, f.q.x), span(f.p.y, f.q.y));
            let touch = ex.0 <= fx.1 && fx.0 <= ex.1 && ey.0 <= fy.1 && fy.0 <= ey.1;
            if !touch {
                continue;
            }
            let adjacent = b == a + 1 || (a == 0 && b == m - 1);
            if !adjacent {
                return Err(Error::NotSimple);
            }
            // Adjacent edges may only share their common vertex.
            let shared = if b == a + 1 { e.q } else { e.p };
            let overlap = (ex.1.min(fx.1) - ex.0.max(fx.0)) + (ey.1.min(fy.1) - ey.0.max(fy.0));
            if overlap > 0.0 || !(shared == f.p || shared == f.q) {
                return Err(Error::NotSimple);
            }
        }
    }
    Ok(())
}

/// Rectangulates a simple rectilinear polygon given by its vertices in order.
pub fn rectangulate_face(polygon: &[Point]) -> Result<Rectangulation> {
    let mut poly = polygon.to_vec();
    if poly.len() > 1 && poly.first() == poly.last() {
        poly.pop();
    }
    check_polygon(&poly)?;
    let xs = sorted_unique(poly.iter().map(|p| p.x).collect());
    let ys = sorted_unique(poly.iter().map(|p| p.y).collect());
    let mut grid = Grid::new(xs, ys);
    let m = poly.len();
    for k in 0..m {
        grid.add_wall(&Segment::new(poly[k], poly[(k + 1) % m]))?;
    }
    // Even-odd fill per row from the vertical walls crossing it.
    let mut inside = vec![false; grid.num_cells()];
    for j in 0..grid.rows() {
        let mut on = false;
        for i in 0..grid.cols() {
            on ^= grid.vwall[grid.vwall_id(i, j)];
            inside[grid.cell_id(i, j)] = on;
        }
    }
    let faces = extract_faces(&grid, |c| inside[c]);
    let mut mark = vec![0u32; grid.num_cells()];
    let mut next = 0;
    let mut rects = Vec::new();
    let mut added = Vec::new();
    for f in faces {
        let (r, a) = rectangulate_cells(&mut grid, f.cells, &mut mark, &mut next);
        rects.extend(r);
        added.extend(a);
    }
    Ok(Rectangulation {
        cuts: wall_segments(&grid, &mut added),
        rects,
    })
}

/// The skeleton together with the rectangulation of all of its faces.
#[derive(Debug, Clone)]
pub struct RectilinearSubdivision {
    pub bbox: Rect,
    pub segments: Vec<(Segment, SegmentKind)>,
    pub rects: Vec<Rect>,
    pub degenerate: bool,
}

impl RectilinearSubdivision {
    pub fn weight_of(&self, kind: SegmentKind) -> f64 {
        self.segments
            .iter()
            .filter(|(_, k)| *k == kind)
            .map(|(s, _)| s.length())
            .sum()
    }
}

pub fn subdivide(points: &[Point]) -> Result<RectilinearSubdivision> {
    let skel = build_skeleton(points)?;
    let mut segments: Vec<(Segment, SegmentKind)> =
        skel.segments.iter().map(|s| (*s, SegmentKind::Skeleton)).collect();
    let Some(mut grid) = skel.grid else {
        return Ok(RectilinearSubdivision {
            bbox: skel.bbox,
            segments,
            rects: Vec::new(),
            degenerate: true,
        });
    };
    let mut mark = vec![0u32; grid.num_cells()];
    let mut next = 0;
    let mut rects = Vec::new();
    let mut added = Vec::new();
    for f in skel.faces {
        let (r, a) = rectangulate_cells(&mut grid, f.cells, &mut mark, &mut next);
        rects.extend(r);
        added.extend(a);
    }
    segments.extend(wall_segments(&grid, &mut added).into_iter().map(|s| (s, SegmentKind::Cut)));
    Ok(RectilinearSubdivision {
        bbox: skel.bbox,
        segments,
        rects,
        degenerate: false,
    })
}

/// Points and pieces of the cone pairs, per rectangle.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Crossings {
    /// `S(R)`: sorted, without duplicates.
    pub points: Vec<Vec<Point>>,
    pub pieces: Vec<Vec<Segment>>,
}

#[derive(Clone, Copy)]
enum Side {
    X(f64),
    Y(f64),
}

/// The part of segment `ab` inside `r`, with a positive length.
///
/// Points on a wall are computed from the wall coordinate and the segment in a
/// canonical orientation, so neighbouring rectangles obtain identical points.
pub fn clip_segment(a: Point, b: Point, r: &Rect) -> Option<Segment> {
    let (p, q) = if (a.x, a.y) <= (b.x, b.y) { (a, b) } else { (b, a) };
    let (dx, dy) = (q.x - p.x, q.y - p.y);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let (mut s0, mut s1): (Option<Side>, Option<Side>) = (None, None);
    for (d, start, lo, hi, side) in [
        (dx, p.x, r.xmin, r.xmax, Side::X as fn(f64) -> Side),
        (dy, p.y, r.ymin, r.ymax, Side::Y as fn(f64) -> Side),
    ] {
        if d == 0.0 {
            if start < lo || start > hi {
                return None;
            }
            continue;
        }
        let (ta, tb) = ((lo - start) / d, (hi - start) / d);
        let ((enter, ce), (exit, cx)) = if d > 0.0 { ((ta, lo), (tb, hi)) } else { ((tb, hi), (ta, lo)) };
        if enter > t0 {
            t0 = enter;
            s0 = Some(side(ce));
        }
        if exit < t1 {
            t1 = exit;
            s1 = Some(side(cx));
        }
    }
    if t1 <= t0 {
        return None;
    }
    let at = |s: Option<Side>, end: Point| match s {
        None => end,
        Some(Side::X(c)) => Point::new(c, (p.y + dy * ((c - p.x) / dx)).clamp(r.ymin, r.ymax)),
        Some(Side::Y(c)) => Point::new((p.x + dx * ((c - p.y) / dy)).clamp(r.xmin, r.xmax), c),
    };
    Some(Segment::new(at(s0, p), at(s1, q)))
}

/// Splits every pair with direction in `cone` over the rectangles `rects`.
pub fn crossings(pairs: &[(Point, Point)], cone: &DirectionInterval, rects: &[Rect]) -> Result<Crossings> {
    let mut out = Crossings {
        points: vec![Vec::new(); rects.len()],
        pieces: vec![Vec::new(); rects.len()],
    };
    for &(a, b) in pairs {
        if a == b || !cone.contains_segment(a, b) {
            continue;
        }
        let (xlo, xhi) = (a.x.min(b.x), a.x.max(b.x));
        let (ylo, yhi) = (a.y.min(b.y), a.y.max(b.y));
        let mut covered = 0.0;
        for (k, r) in rects.iter().enumerate() {
            if r.xmax < xlo || r.xmin > xhi || r.ymax < ylo || r.ymin > yhi {
                continue;
            }
            if let Some(piece) = clip_segment(a, b, r) {
                covered += piece.length();
                out.points[k].push(piece.p);
                out.points[k].push(piece.q);
                out.pieces[k].push(piece);
            }
        }
        if covered < (1.0 - 1e-9) * a.dist(&b) {
            return Err(Error::OutsideTiling(a, b));
        }
    }
    for pts in &mut out.points {
        pts.sort_by(|l, r| l.x.total_cmp(&r.x).then(l.y.total_cmp(&r.y)));
        pts.dedup();
    }
    Ok(out)
}

/// `log2(max(2, n))`, the logarithmic factor of the rectangulation bound.
pub fn log_factor(n: usize) -> f64 {
    math::log2(n.max(2) as f64)
}
