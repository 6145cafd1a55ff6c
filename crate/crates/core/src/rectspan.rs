//! Directional spanners for points on the boundary of a rectangle, for the
//! near-vertical cone of half-width `sqrt(eps)/8`.
//!
//! A rectangle whose aspect ratio lies in the band `[sqrt(eps)/8, sqrt(eps)/4]`
//! gets its boundary, two shallow-light trees from the midpoint of the left
//! side to the horizontal sides, and per corner a sequence of shallow-light
//! trees rooted on the vertical side at heights `height/2^j`. Other
//! rectangles are first cut into band pieces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::geom::{DirectionInterval, Point, Segment};
use crate::graph::{GeoGraph, GraphBuilder, VertexKind};
use crate::math;
use crate::mst::Rect;
use crate::rectangulate::clip_segment;
use crate::slt::{build_slt, SltInstance};
use crate::{Error, Result};

/// Relative slack on the aspect-ratio band.
const BAND_TOL: f64 = 1e-6;
/// Relative tolerance for points on a rectangle boundary.
const ON_BOUNDARY: f64 = 1e-9;
/// Rectangles with `short side <= SLIVER * long side` are rounding artefacts.
const SLIVER: f64 = 1e-9;

/// The near-vertical cone `[pi/2 - sqrt(eps)/8, pi/2 + sqrt(eps)/8]`.
pub fn cone(eps: f64) -> DirectionInterval {
    DirectionInterval::near_vertical(math::sqrt(eps) / 4.0)
}

/// Aspect-ratio band `[sqrt(eps)/8, sqrt(eps)/4]`.
pub fn band(eps: f64) -> (f64, f64) {
    let r = math::sqrt(eps);
    (r / 8.0, r / 4.0)
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter("eps must lie in (0, 1)".into()))
    }
}

fn check_band(r: &Rect, eps: f64) -> Result<()> {
    let aratio = r.aratio().filter(|_| !r.is_degenerate()).ok_or(Error::DegenerateRect)?;
    let (lo, hi) = band(eps);
    if aratio < lo * (1.0 - BAND_TOL) || aratio > hi * (1.0 + BAND_TOL) {
        return Err(Error::AspectOutOfBand { aratio, lo, hi });
    }
    Ok(())
}

/// Axis-parallel walls and the vertices lying on them. Walls on a common
/// line are united and split at every vertex once, at the end, so that
/// overlapping sides of neighbouring rectangles are not counted twice.
#[derive(Debug, Default)]
pub(crate) struct Walls {
    lines: BTreeMap<(bool, u64), Line>,
}

#[derive(Debug, Default)]
struct Line {
    intervals: Vec<(f64, f64)>,
    marks: Vec<(f64, Point)>,
}

fn line_key(vertical: bool, coord: f64) -> (bool, u64) {
    (vertical, (coord + 0.0).to_bits())
}

impl Walls {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Adds an axis-parallel segment; other segments are ignored.
    pub(crate) fn add_segment(&mut self, s: &Segment) {
        let (p, q) = (s.p, s.q);
        if p == q {
            return;
        }
        let (vertical, coord, a, b) = if p.x == q.x {
            (true, p.x, p.y, q.y)
        } else if p.y == q.y {
            (false, p.y, p.x, q.x)
        } else {
            return;
        };
        let line = self.lines.entry(line_key(vertical, coord)).or_default();
        line.intervals.push((a.min(b), a.max(b)));
        line.marks.push((a, p));
        line.marks.push((b, q));
    }

    fn add_mark(&mut self, vertical: bool, coord: f64, param: f64, p: Point) {
        self.lines
            .entry(line_key(vertical, coord))
            .or_default()
            .marks
            .push((param, p));
    }

    /// Registers `p` on every side of `r` it lies on; returns the side mask
    /// (bit 0 bottom, 1 right, 2 top, 3 left).
    fn mark_on_rect(&mut self, r: &Rect, p: Point, tol: f64) -> u8 {
        let mask = side_mask(r, p, tol);
        if mask & 1 != 0 {
            self.add_mark(false, r.ymin, p.x, p);
        }
        if mask & 2 != 0 {
            self.add_mark(true, r.xmax, p.y, p);
        }
        if mask & 4 != 0 {
            self.add_mark(false, r.ymax, p.x, p);
        }
        if mask & 8 != 0 {
            self.add_mark(true, r.xmin, p.y, p);
        }
        mask
    }

    fn add_rect(&mut self, r: &Rect) {
        for s in r.boundary_segments() {
            self.add_segment(&s);
        }
    }

    /// Emits the walls into `b` as chains through all of their vertices.
    pub(crate) fn finish(self, b: &mut GraphBuilder, tol: f64) {
        for ((vertical, bits), mut line) in self.lines {
            let coord = f64::from_bits(bits);
            let at = |t: f64| if vertical { Point::new(coord, t) } else { Point::new(t, coord) };
            line.intervals.sort_by(|l, r| l.0.total_cmp(&r.0).then(l.1.total_cmp(&r.1)));
            let mut merged: Vec<(f64, f64)> = Vec::new();
            for (lo, hi) in line.intervals {
                match merged.last_mut() {
                    Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                    _ => merged.push((lo, hi)),
                }
            }
            line.marks.sort_by(|l, r| l.0.total_cmp(&r.0));
            let mut k = 0;
            for (lo, hi) in merged {
                let mut chain = alloc::vec![b.add_vertex(at(lo), VertexKind::Steiner)];
                while k < line.marks.len() && line.marks[k].0 < lo - tol {
                    b.add_vertex(line.marks[k].1, VertexKind::Steiner);
                    k += 1;
                }
                while k < line.marks.len() && line.marks[k].0 <= hi + tol {
                    chain.push(b.add_vertex(line.marks[k].1, VertexKind::Steiner));
                    k += 1;
                }
                chain.push(b.add_vertex(at(hi), VertexKind::Steiner));
                for w in chain.windows(2) {
                    b.add_edge(w[0], w[1]);
                }
            }
            for (_, p) in &line.marks[k..] {
                b.add_vertex(*p, VertexKind::Steiner);
            }
        }
    }

    /// Total length of the united walls.
    pub(crate) fn covered_length(&self) -> f64 {
        let mut total = 0.0;
        for line in self.lines.values() {
            let mut iv = line.intervals.clone();
            iv.sort_by(|l, r| l.0.total_cmp(&r.0));
            let mut cur: Option<(f64, f64)> = None;
            for (lo, hi) in iv {
                match cur.as_mut() {
                    Some(c) if lo <= c.1 => c.1 = c.1.max(hi),
                    _ => {
                        if let Some(c) = cur {
                            total += c.1 - c.0;
                        }
                        cur = Some((lo, hi));
                    }
                }
            }
            if let Some(c) = cur {
                total += c.1 - c.0;
            }
        }
        total
    }
}

fn side_mask(r: &Rect, p: Point, tol: f64) -> u8 {
    let inx = p.x >= r.xmin - tol && p.x <= r.xmax + tol;
    let iny = p.y >= r.ymin - tol && p.y <= r.ymax + tol;
    let mut m = 0;
    if inx && (p.y - r.ymin).abs() <= tol {
        m |= 1;
    }
    if iny && (p.x - r.xmax).abs() <= tol {
        m |= 2;
    }
    if inx && (p.y - r.ymax).abs() <= tol {
        m |= 4;
    }
    if iny && (p.x - r.xmin).abs() <= tol {
        m |= 8;
    }
    m
}

fn boundary_tol(r: &Rect) -> f64 {
    ON_BOUNDARY * (r.width() + r.height())
}

/// Adds the vertices and non-boundary edges of `g`; vertices on the sides of
/// `r` are handed to `walls` instead of keeping the edges along the sides.
fn add_tree(b: &mut GraphBuilder, walls: &mut Walls, r: &Rect, g: &GeoGraph, tol: f64) {
    let mut ids = Vec::with_capacity(g.num_vertices());
    let mut masks = Vec::with_capacity(g.num_vertices());
    for &p in g.points() {
        ids.push(b.add_vertex(p, VertexKind::Steiner));
        masks.push(walls.mark_on_rect(r, p, tol));
    }
    for &[u, v] in g.edges() {
        let (u, v) = (u as usize, v as usize);
        if masks[u] & masks[v] == 0 {
            b.add_edge(ids[u], ids[v]);
        }
    }
}

/// Points on the boundary of a rectangle whose aspect ratio lies in the band.
#[derive(Debug, Clone, PartialEq)]
pub struct BandRectInstance {
    pub rect: Rect,
    pub points: Vec<Point>,
    pub eps: f64,
}

impl BandRectInstance {
    pub fn new(rect: Rect, points: Vec<Point>, eps: f64) -> Result<Self> {
        check_eps(eps)?;
        check_band(&rect, eps)?;
        let tol = boundary_tol(&rect);
        if let Some(p) = points.iter().find(|p| side_mask(&rect, **p, tol) == 0) {
            return Err(Error::Precondition(alloc::format!(
                "point ({}, {}) is not on the rectangle boundary",
                p.x,
                p.y
            )));
        }
        Ok(BandRectInstance { rect, points, eps })
    }
}

pub fn build_band_rect(inst: &BandRectInstance) -> Result<GeoGraph> {
    check_eps(inst.eps)?;
    let r = inst.rect;
    let tol = 1e-12 * (r.width() + r.height());
    let mut b = GraphBuilder::new(tol);
    for p in &inst.points {
        b.add_vertex(*p, VertexKind::Terminal);
    }
    let mut walls = Walls::new();
    add_band(&mut b, &mut walls, &r, &inst.points, inst.eps)?;
    walls.finish(&mut b, tol);
    Ok(b.build())
}

pub(crate) fn add_band(
    b: &mut GraphBuilder,
    walls: &mut Walls,
    r: &Rect,
    points: &[Point],
    eps: f64,
) -> Result<()> {
    check_band(r, eps)?;
    let btol = boundary_tol(r);
    walls.add_rect(r);
    let masks: Vec<u8> = points.iter().map(|p| walls.mark_on_rect(r, *p, btol)).collect();
    if let Some(k) = masks.iter().position(|m| *m == 0) {
        return Err(Error::Precondition(alloc::format!(
            "point ({}, {}) is not on the rectangle boundary",
            points[k].x,
            points[k].y
        )));
    }
    let d = cone(eps);
    let on = |side: u8| -> Vec<Point> {
        points
            .iter()
            .zip(&masks)
            .filter(|(_, m)| *m & side != 0)
            .map(|(p, _)| *p)
            .collect()
    };
    let (bottom, right, top, left) = (on(1), on(2), on(4), on(8));
    let any_pair = |s: &[Point], t: &[Point]| {
        s.iter().any(|a| t.iter().any(|c| d.contains_segment(*a, *c)))
    };
    let eps_slt = eps / 4.0;
    let [c00, c10, c11, c01] = r.corners();

    if any_pair(&top, &bottom) || any_pair(&left, &right) {
        let c = Point::new(r.xmin, 0.5 * (r.ymin + r.ymax));
        for (side, lo, hi) in [(&top, c01, c11), (&bottom, c00, c10)] {
            let mut targets = side.clone();
            targets.extend([lo, hi]);
            let g = build_slt(&SltInstance::new(c, Segment::new(lo, hi), targets, eps_slt)?)?;
            add_tree(b, walls, r, &g, btol);
        }
    }

    // Corner trees: (corner, unit vector up the vertical side, unit vector
    // along the horizontal side, vertical side points, horizontal side points).
    let h = r.height();
    let w = r.width();
    let tau = math::tan(math::sqrt(eps) / 8.0) * (1.0 + 1e-6);
    let corners = [
        (c00, Point::new(0.0, 1.0), Point::new(1.0, 0.0), &left, &bottom),
        (c10, Point::new(0.0, 1.0), Point::new(-1.0, 0.0), &right, &bottom),
        (c01, Point::new(0.0, -1.0), Point::new(1.0, 0.0), &left, &top),
        (c11, Point::new(0.0, -1.0), Point::new(-1.0, 0.0), &right, &top),
    ];
    for (o, ev, eh, vert, horiz) in corners {
        let us: Vec<(f64, Point)> = horiz
            .iter()
            .map(|p| ((*p - o).dot(&eh), *p))
            .filter(|(u, _)| *u > btol)
            .collect();
        if us.is_empty() {
            continue;
        }
        let mut levels = BTreeSet::new();
        for p in vert.iter() {
            let v = (*p - o).dot(&ev);
            if v <= btol {
                continue;
            }
            let mut j = (math::floor(math::log2(h / v)) as i64 + 1).max(1) as i32;
            while j > 1 && v > h * math::pow(2.0, -(j as f64 - 1.0)) {
                j -= 1;
            }
            while v <= h * math::pow(2.0, -(j as f64)) {
                j += 1;
            }
            levels.insert(j);
        }
        for j in levels {
            let y = h * math::pow(2.0, -(j as f64));
            let reach = w.min(2.0 * y * tau);
            let targets: Vec<Point> = us.iter().filter(|(u, _)| *u <= reach).map(|(_, p)| *p).collect();
            if targets.is_empty() {
                continue;
            }
            let inst = SltInstance::new(o + ev * y, Segment::new(o, o + eh * reach), targets, eps_slt)?;
            add_tree(b, walls, r, &build_slt(&inst)?, btol);
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Split {
    None,
    /// Slabs of width `size` from the left; the last one takes the remainder.
    Vertical { size: f64, count: usize },
    /// Slabs of height `size` from the top; the last one takes the remainder.
    Horizontal { size: f64, count: usize },
}

#[derive(Debug, Clone, Copy)]
struct Slabs {
    r: Rect,
    split: Split,
}

impl Slabs {
    fn new(r: &Rect, eps: f64) -> Result<Self> {
        check_eps(eps)?;
        if r.is_degenerate() {
            return Err(Error::DegenerateRect);
        }
        let (lo, hi) = band(eps);
        let (w, h) = (r.width(), r.height());
        let aratio = w / h;
        let split = if aratio > hi * (1.0 + BAND_TOL) {
            let size = h * lo;
            let count = math::floor(aratio / lo + 1e-9) as usize;
            Split::Vertical { size, count }
        } else if aratio < lo * (1.0 - BAND_TOL) {
            let size = w / hi;
            let count = math::floor(hi / aratio + 1e-9) as usize;
            Split::Horizontal { size, count }
        } else {
            Split::None
        };
        Ok(Slabs { r: *r, split })
    }

    fn count(&self) -> usize {
        match self.split {
            Split::None => 1,
            Split::Vertical { count, .. } | Split::Horizontal { count, .. } => count,
        }
    }

    /// Boundary `k` of `0..=count` along the split axis.
    fn boundary(&self, k: usize) -> f64 {
        let r = &self.r;
        match self.split {
            Split::None => unreachable!("unsplit rectangles have no slab boundaries"),
            Split::Vertical { size, count } => match k {
                0 => r.xmin,
                _ if k == count => r.xmax,
                _ => r.xmin + k as f64 * size,
            },
            Split::Horizontal { size, count } => match k {
                0 => r.ymax,
                _ if k == count => r.ymin,
                _ => r.ymax - k as f64 * size,
            },
        }
    }

    fn piece(&self, k: usize) -> Rect {
        let r = self.r;
        match self.split {
            Split::None => r,
            Split::Vertical { .. } => Rect {
                xmin: self.boundary(k),
                xmax: self.boundary(k + 1),
                ..r
            },
            Split::Horizontal { .. } => Rect {
                ymin: self.boundary(k + 1),
                ymax: self.boundary(k),
                ..r
            },
        }
    }

    fn cut(&self, k: usize) -> Segment {
        let r = self.r;
        let c = self.boundary(k);
        match self.split {
            Split::Vertical { .. } => Segment::new(Point::new(c, r.ymin), Point::new(c, r.ymax)),
            _ => Segment::new(Point::new(r.xmin, c), Point::new(r.xmax, c)),
        }
    }

    /// Slab indices that may meet the part of the split axis between `a` and `b`.
    fn range(&self, a: f64, b: f64) -> (usize, usize) {
        let n = self.count();
        let locate = |t: f64| {
            let (off, size) = match self.split {
                Split::None => return 0,
                Split::Vertical { size, .. } => (t - self.r.xmin, size),
                Split::Horizontal { size, .. } => (self.r.ymax - t, size),
            };
            (math::floor(off / size).max(0.0) as usize).min(n - 1)
        };
        let (i, j) = (locate(a), locate(b));
        (i.min(j).saturating_sub(1), (i.max(j) + 1).min(n - 1))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RectSubdivision {
    pub pieces: Vec<Rect>,
    pub cuts: Vec<Segment>,
}

impl RectSubdivision {
    pub fn cut_weight(&self) -> f64 {
        self.cuts.iter().map(Segment::length).sum()
    }
}

/// Cuts `r` into pieces whose aspect ratios lie in the band.
pub fn subdivide_rect(r: &Rect, eps: f64) -> Result<RectSubdivision> {
    let s = Slabs::new(r, eps)?;
    let n = s.count();
    Ok(RectSubdivision {
        pieces: (0..n).map(|k| s.piece(k)).collect(),
        cuts: match s.split {
            Split::None => Vec::new(),
            _ => (1..n).map(|k| s.cut(k)).collect(),
        },
    })
}

/// Directional spanner for `points` on the boundary of an arbitrary rectangle.
pub fn build_rect(r: &Rect, points: &[Point], eps: f64) -> Result<GeoGraph> {
    check_eps(eps)?;
    let d = cone(eps);
    let mut pieces = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for c in &points[i + 1..] {
            if d.contains_segment(*a, *c) {
                pieces.push(Segment::new(*a, *c));
            }
        }
    }
    let tol = 1e-12 * (r.width() + r.height());
    let mut b = GraphBuilder::new(tol);
    for p in points {
        b.add_vertex(*p, VertexKind::Terminal);
    }
    let mut walls = Walls::new();
    add_rect(&mut b, &mut walls, r, points, &pieces, eps)?;
    walls.finish(&mut b, tol);
    Ok(b.build())
}

/// Adds the spanner of `r` serving the given pieces of cone pairs, each a
/// chord of `r` with endpoints on its boundary. `points` are further
/// boundary points that only need to be present.
pub(crate) fn add_rect(
    b: &mut GraphBuilder,
    walls: &mut Walls,
    r: &Rect,
    points: &[Point],
    pieces: &[Segment],
    eps: f64,
) -> Result<()> {
    let slabs = Slabs::new(r, eps)?;
    walls.add_rect(r);
    let btol = boundary_tol(r);
    for p in points {
        walls.mark_on_rect(r, *p, btol);
    }
    if r.width().min(r.height()) <= SLIVER * r.width().max(r.height()) {
        for s in pieces {
            walls.mark_on_rect(r, s.p, btol);
            walls.mark_on_rect(r, s.q, btol);
            let (u, v) = (b.add_vertex(s.p, VertexKind::Steiner), b.add_vertex(s.q, VertexKind::Steiner));
            b.add_edge(u, v);
        }
        return Ok(());
    }
    if slabs.split == Split::None {
        let mut pts: Vec<Point> = points.to_vec();
        pts.extend(pieces.iter().flat_map(|s| [s.p, s.q]));
        sort_dedup(&mut pts);
        return add_band(b, walls, r, &pts, eps);
    }
    let mut per_slab: BTreeMap<usize, Vec<Point>> = BTreeMap::new();
    for s in pieces {
        let (lo, hi) = match slabs.split {
            Split::Vertical { .. } => (s.p.x, s.q.x),
            _ => (s.p.y, s.q.y),
        };
        let (k0, k1) = slabs.range(lo, hi);
        for k in k0..=k1 {
            if let Some(c) = clip_segment(s.p, s.q, &slabs.piece(k)) {
                per_slab.entry(k).or_default().extend([c.p, c.q]);
            }
        }
    }
    for (k, mut pts) in per_slab {
        sort_dedup(&mut pts);
        if pts.len() >= 2 {
            add_band(b, walls, &slabs.piece(k), &pts, eps)?;
        }
    }
    Ok(())
}

fn sort_dedup(pts: &mut Vec<Point>) {
    pts.sort_by(|l, r| l.x.total_cmp(&r.x).then(l.y.total_cmp(&r.y)));
    pts.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_stretch;
    use alloc::vec;
    use core::f64::consts::FRAC_PI_2;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn rect(w: f64, h: f64) -> Rect {
        Rect::new(0.0, w, 0.0, h).unwrap()
    }

    #[test]
    fn cone_is_near_vertical() {
        let d = cone(0.04);
        assert!((d.width() - 0.05).abs() < 1e-12);
        assert!(d.contains(FRAC_PI_2 + 0.025) && !d.contains(FRAC_PI_2 + 0.026));
    }

    #[test]
    fn band_rect_example() {
        let inst = BandRectInstance::new(rect(0.05, 1.0), vec![p(0.02, 1.0), p(0.03, 0.0)], 0.04).unwrap();
        let g = build_band_rect(&inst).unwrap();
        let res = verify_stretch(&g, &inst.points, 0.04, Some(&cone(0.04))).unwrap();
        assert_eq!(res.pairs_checked, 1);
        assert!(res.pass && res.max_ratio <= 1.04);
    }

    #[test]
    fn same_side_pairs_are_exact() {
        let pts = vec![p(0.0, 0.1), p(0.0, 0.7), p(0.0, 0.4)];
        let inst = BandRectInstance::new(rect(0.04, 1.0), pts.clone(), 0.04).unwrap();
        let g = build_band_rect(&inst).unwrap();
        let res = verify_stretch(&g, &pts, 0.04, None).unwrap();
        assert_eq!(res.max_ratio, 1.0);
    }

    #[test]
    fn band_rect_rejects_out_of_band() {
        assert!(matches!(
            BandRectInstance::new(rect(1.0, 1.0), vec![], 0.04),
            Err(Error::AspectOutOfBand { .. })
        ));
        assert!(BandRectInstance::new(rect(0.05, 1.0), vec![p(0.01, 0.5)], 0.04).is_err());
    }

    #[test]
    fn band_rect_dense_boundary() {
        let eps = 0.1;
        let r = Rect::new(1.0, 1.06, -2.0, -1.0).unwrap();
        let mut pts = Vec::new();
        for k in 0..=12 {
            let t = k as f64 / 12.0;
            pts.push(p(1.0 + 0.06 * t, -2.0));
            pts.push(p(1.0 + 0.06 * t, -1.0));
            pts.push(p(1.0, -2.0 + t * t));
            pts.push(p(1.06, -1.0 - t * t * t));
        }
        let inst = BandRectInstance::new(r, pts.clone(), eps).unwrap();
        let g = build_band_rect(&inst).unwrap();
        let res = verify_stretch(&g, &pts, eps, Some(&cone(eps))).unwrap();
        assert!(res.pairs_checked > 100);
        assert!(res.pass, "max ratio {}", res.max_ratio);
    }

    #[test]
    fn subdivision_examples() {
        let s = subdivide_rect(&rect(10.0, 1.0), 0.04).unwrap();
        assert_eq!((s.pieces.len(), s.cuts.len()), (400, 399));
        assert!((s.cut_weight() - 399.0).abs() < 1e-9);
        let s = subdivide_rect(&rect(1.0, 100.0), 0.04).unwrap();
        assert_eq!((s.pieces.len(), s.cuts.len()), (5, 4));
        assert!((s.cut_weight() - 4.0).abs() < 1e-12);
        assert!((s.pieces[0].height() - 20.0).abs() < 1e-12);
        let s = subdivide_rect(&rect(0.04, 1.0), 0.04).unwrap();
        assert!(s.cuts.is_empty() && s.pieces.len() == 1);
        assert_eq!(subdivide_rect(&rect(0.0, 1.0), 0.04), Err(Error::DegenerateRect));
    }

    #[test]
    fn tall_rect_pair_crosses_cut() {
        let eps = 0.04;
        let r = rect(1.0, 60.0);
        let pts = vec![p(0.3, 0.0), p(0.7, 60.0)];
        let g = build_rect(&r, &pts, eps).unwrap();
        let res = verify_stretch(&g, &pts, eps, Some(&cone(eps))).unwrap();
        assert_eq!(res.pairs_checked, 1);
        assert!(res.pass, "max ratio {}", res.max_ratio);
        assert!(g.num_steiner() > 0);
    }

    #[test]
    fn sliver_gets_direct_edges() {
        let eps = 0.04;
        let r = Rect::new(0.0, 4.0, 0.0, 1e-12).unwrap();
        let pts = vec![p(1.0, 0.0), p(1.0, 1e-12), p(3.0, 0.0)];
        let g = build_rect(&r, &pts, eps).unwrap();
        let res = verify_stretch(&g, &pts, eps, Some(&cone(eps))).unwrap();
        assert_eq!(res.pairs_checked, 1);
        assert!(res.pass && res.max_ratio == 1.0);
        assert!(g.num_vertices() < 20);
    }

    #[test]
    fn band_rect_through_build_rect_matches() {
        let r = rect(0.05, 1.0);
        let pts = vec![p(0.02, 1.0), p(0.03, 0.0), p(0.0, 0.3)];
        let direct = build_band_rect(&BandRectInstance::new(r, pts.clone(), 0.04).unwrap()).unwrap();
        let general = build_rect(&r, &pts, 0.04).unwrap();
        assert!((direct.total_weight() - general.total_weight()).abs() < 1e-12);
    }
}
