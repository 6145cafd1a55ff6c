//! Euclidean and rectilinear minimum spanning trees, bounding boxes.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Point, Segment};
use crate::{Error, Result};

/// Axis-aligned rectangle `[xmin, xmax] x [ymin, ymax]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Rect {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self> {
        if !(xmin <= xmax && ymin <= ymax) {
            return Err(Error::InvalidParameter(
                "rectangle bounds out of order".into(),
            ));
        }
        Ok(Rect {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    /// `width / height`; `None` for zero height.
    pub fn aratio(&self) -> Option<f64> {
        let h = self.height();
        (h > 0.0).then(|| self.width() / h)
    }

    pub fn per(&self) -> f64 {
        2.0 * (self.width() + self.height())
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn is_degenerate(&self) -> bool {
        !(self.width() > 0.0 && self.height() > 0.0)
    }

    pub fn center(&self) -> Point {
        Point::new(
            0.5 * (self.xmin + self.xmax),
            0.5 * (self.ymin + self.ymax),
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    /// Whether `p` lies on the boundary, up to `tol` in each coordinate.
    pub fn on_boundary(&self, p: Point, tol: f64) -> bool {
        let inside = p.x >= self.xmin - tol
            && p.x <= self.xmax + tol
            && p.y >= self.ymin - tol
            && p.y <= self.ymax + tol;
        inside
            && ((p.x - self.xmin).abs() <= tol
                || (p.x - self.xmax).abs() <= tol
                || (p.y - self.ymin).abs() <= tol
                || (p.y - self.ymax).abs() <= tol)
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    pub fn boundary_segments(&self) -> [Segment; 4] {
        let c = self.corners();
        [
            Segment::new(c[0], c[1]),
            Segment::new(c[1], c[2]),
            Segment::new(c[2], c[3]),
            Segment::new(c[3], c[0]),
        ]
    }
}

/// Minimum axis-aligned rectangle containing all points.
pub fn bbox(points: &[Point]) -> Result<Rect> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let mut r = Rect {
        xmin: first.x,
        xmax: first.x,
        ymin: first.y,
        ymax: first.y,
    };
    for p in &points[1..] {
        r.xmin = r.xmin.min(p.x);
        r.xmax = r.xmax.max(p.x);
        r.ymin = r.ymin.min(p.y);
        r.ymax = r.ymax.max(p.y);
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree {
    /// Edges as index pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
    pub weight: f64,
}

/// Quadratic Prim over a complete graph with metric `w`. Ties are broken by
/// the smaller `(weight, i, j)` triple, so the tree is fully deterministic.
fn prim(n: usize, w: impl Fn(usize, usize) -> f64) -> SpanningTree {
    let mut in_tree = vec![false; n];
    let mut best = vec![(f64::INFINITY, usize::MAX); n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut weight = 0.0;
    in_tree[0] = true;
    for j in 1..n {
        best[j] = (w(0, j), 0);
    }
    for _ in 1..n {
        let mut pick: Option<(f64, usize, usize, usize)> = None;
        for j in 0..n {
            if in_tree[j] {
                continue;
            }
            let (d, from) = best[j];
            let key = (d, from.min(j), from.max(j), j);
            if pick.is_none_or(|p| {
                key.0 < p.0 || (key.0 == p.0 && (key.1, key.2) < (p.1, p.2))
            }) {
                pick = Some(key);
            }
        }
        let (d, a, b, j) = pick.expect("graph is complete");
        in_tree[j] = true;
        edges.push((a, b));
        weight += d;
        for k in 0..n {
            if in_tree[k] {
                continue;
            }
            let dk = w(j, k);
            let (cur, from) = best[k];
            if dk < cur || (dk == cur && j.min(k) < from.min(k)) {
                best[k] = (dk, j);
            }
        }
    }
    SpanningTree { edges, weight }
}

/// Exact Euclidean minimum spanning tree.
pub fn emst(points: &[Point]) -> Result<SpanningTree> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(prim(points.len(), |i, j| points[i].dist(&points[j])))
}

/// Rectilinear MST with each edge drawn as an L-shape.
#[derive(Debug, Clone, PartialEq)]
pub struct RealizedTree {
    pub tree: SpanningTree,
    /// Axis-parallel pieces; zero-length pieces are omitted.
    pub segments: Vec<Segment>,
}

impl RealizedTree {
    pub fn realized_weight(&self) -> f64 {
        self.segments.iter().map(Segment::length).sum()
    }
}

/// L1 minimum spanning tree; the edge `(i, j)`, `i < j`, is realized
/// horizontal first: `p_i -> (x_j, y_i) -> p_j`.
pub fn rmst_lshape(points: &[Point]) -> Result<RealizedTree> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let l1 = |i: usize, j: usize| {
        (points[i].x - points[j].x).abs() + (points[i].y - points[j].y).abs()
    };
    let tree = prim(points.len(), l1);
    let mut segments = Vec::with_capacity(2 * tree.edges.len());
    for &(i, j) in &tree.edges {
        let (a, b) = (points[i], points[j]);
        let corner = Point::new(b.x, a.y);
        if a != corner {
            segments.push(Segment::new(a, corner));
        }
        if corner != b {
            segments.push(Segment::new(corner, b));
        }
    }
    Ok(RealizedTree { tree, segments })
}
