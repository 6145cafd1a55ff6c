//! Directional `(1+eps)`-spanner for a whole point set and the near-vertical
//! cone: skeleton, rectangulation, crossings, one rectangle spanner per
//! rectangle.

use alloc::vec::Vec;

use crate::geom::{DirectionInterval, Point};
use crate::graph::{diameter, GeoGraph, GraphBuilder, VertexKind};
use crate::math;
use crate::rectangulate::{crossings, subdivide, SegmentKind};
use crate::rectspan::{self, Walls};
use crate::{Error, Result};

/// Snap tolerance for construction, relative to the diameter.
pub const CONSTRUCTION_SNAP_REL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct DirSpanConfig {
    pub eps: f64,
    /// Always the near-vertical cone of width `sqrt(eps)/4`.
    pub cone: DirectionInterval,
    pub snap_tol: f64,
}

impl DirSpanConfig {
    pub fn new(eps: f64, snap_tol: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidParameter("eps must lie in (0, 1)".into()));
        }
        if !(snap_tol >= 0.0) {
            return Err(Error::InvalidParameter("snap tolerance must be non-negative".into()));
        }
        Ok(DirSpanConfig {
            eps,
            cone: rectspan::cone(eps),
            snap_tol,
        })
    }

    /// Configuration with the snap tolerance scaled to `points`.
    pub fn for_points(eps: f64, points: &[Point]) -> Result<Self> {
        Self::new(eps, CONSTRUCTION_SNAP_REL * diameter(points))
    }
}

/// Weight of the parts of a directional spanner; the parts sum to `total`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DirSpanBreakdown {
    pub skeleton: f64,
    pub rectangulation: f64,
    pub spanners: f64,
    pub total: f64,
}

pub fn build_directional(points: &[Point], cfg: &DirSpanConfig) -> Result<GeoGraph> {
    build_directional_with_breakdown(points, cfg).map(|(g, _)| g)
}

pub fn build_directional_with_breakdown(
    points: &[Point],
    cfg: &DirSpanConfig,
) -> Result<(GeoGraph, DirSpanBreakdown)> {
    let mut pairs = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a != b && cfg.cone.contains_segment(*a, *b) {
                pairs.push((*a, *b));
            }
        }
    }
    build_for_pairs(points, &pairs, cfg)
}

/// Directional spanner serving exactly the given pairs (which must have
/// their direction in the cone).
pub(crate) fn build_for_pairs(
    points: &[Point],
    pairs: &[(Point, Point)],
    cfg: &DirSpanConfig,
) -> Result<(GeoGraph, DirSpanBreakdown)> {
    if points.len() < 2 {
        return Err(Error::Precondition("at least two points are required".into()));
    }
    if (cfg.cone.width() - math::sqrt(cfg.eps) / 4.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter("cone width must be sqrt(eps)/4".into()));
    }
    let sub = subdivide(points)?;
    let mut b = GraphBuilder::new(cfg.snap_tol);
    for p in points {
        b.add_vertex(*p, VertexKind::Terminal);
    }
    let mut walls = Walls::new();
    let mut skeleton = Walls::new();
    for (s, kind) in &sub.segments {
        walls.add_segment(s);
        if *kind == SegmentKind::Skeleton {
            skeleton.add_segment(s);
        }
    }
    let skeleton_weight = skeleton.covered_length();
    let walls_weight = walls.covered_length();
    if !sub.degenerate {
        let cr = crossings(pairs, &cfg.cone, &sub.rects)?;
        for (r, pieces) in sub.rects.iter().zip(&cr.pieces) {
            if !pieces.is_empty() {
                rectspan::add_rect(&mut b, &mut walls, r, &[], pieces, cfg.eps)?;
            }
        }
    }
    walls.finish(&mut b, cfg.snap_tol);
    let g = b.build();
    let total = g.total_weight();
    let breakdown = DirSpanBreakdown {
        skeleton: skeleton_weight,
        rectangulation: walls_weight - skeleton_weight,
        spanners: total - walls_weight,
        total,
    };
    Ok((g, breakdown))
}
