//! Full Steiner `(1+eps)`-spanner: one directional spanner per cone
//! `D_i = [i pi/k, (i+1) pi/k)`, each built in a frame rotated so that `D_i`
//! becomes near-vertical.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::dirspan::{build_for_pairs, DirSpanConfig, CONSTRUCTION_SNAP_REL};
use crate::geom::{direction_of, rotate, rotate_point, DirectionInterval, Point, Segment};
use hashbrown::HashSet;

use crate::graph::{diameter, GeoGraph, PointLocator, VertexKind, SNAP_REL};
use crate::math;
use crate::mst::bbox;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FullSpanConfig {
    pub eps: f64,
    pub k: usize,
    /// Carried for reproducibility records; the construction is deterministic.
    pub seed: u64,
}

/// `ceil(4 pi / sqrt(eps))`, so each cone is at most `sqrt(eps)/4` wide.
pub fn cone_count(eps: f64) -> usize {
    math::ceil(4.0 * PI / math::sqrt(eps)) as usize
}

impl FullSpanConfig {
    pub fn new(eps: f64, seed: u64) -> Result<Self> {
        if !(eps > 0.0 && eps <= 0.5) {
            return Err(Error::InvalidParameter("eps must lie in (0, 1/2]".into()));
        }
        Ok(FullSpanConfig {
            eps,
            k: cone_count(eps),
            seed,
        })
    }
}

/// Index of the cone containing direction `theta` in `[0, pi)`.
pub fn cone_index(theta: f64, k: usize) -> usize {
    let i = math::floor(theta * k as f64 / PI);
    (i.max(0.0) as usize).min(k - 1)
}

pub fn cone_interval(i: usize, k: usize) -> DirectionInterval {
    let step = PI / k as f64;
    DirectionInterval {
        lo: i as f64 * step,
        hi: if i + 1 == k { 0.0 } else { (i + 1) as f64 * step },
    }
}

fn check(points: &[Point], cfg: &FullSpanConfig) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::Precondition("at least two points are required".into()));
    }
    if !(cfg.eps > 0.0 && cfg.eps <= 0.5) || cfg.k == 0 {
        return Err(Error::InvalidParameter("eps must lie in (0, 1/2] and k be positive".into()));
    }
    if (cfg.k as f64) * math::sqrt(cfg.eps) / 4.0 < PI * (1.0 - 1e-12) {
        return Err(Error::InvalidParameter("cones of width pi/k must be at most sqrt(eps)/4".into()));
    }
    Ok(())
}

/// Index pairs `(i, j)`, `i < j`, grouped by the cone of their direction.
pub fn cone_pairs(points: &[Point], k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut per_cone: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); k];
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate().skip(i + 1) {
            if let Ok(theta) = direction_of(&Segment::new(*a, *b)) {
                per_cone[cone_index(theta, k)].push((i, j));
            }
        }
    }
    per_cone
}

/// Directional spanner of cone `i` for `pairs`, in the original frame.
pub fn build_cone(points: &[Point], cfg: &FullSpanConfig, i: usize, pairs: &[(usize, usize)]) -> Result<GeoGraph> {
    check(points, cfg)?;
    let diam = diameter(points);
    let center = bbox(points)?.center();
    let dcfg = DirSpanConfig::new(cfg.eps, CONSTRUCTION_SNAP_REL * diam)?;
    let theta = (i as f64 + 0.5) * PI / cfg.k as f64;
    let phi = PI / 2.0 - theta;
    let rotated = rotate(points, phi, center);
    let rpairs: Vec<(Point, Point)> = pairs.iter().map(|&(a, c)| (rotated[a], rotated[c])).collect();
    let (g, _) = build_for_pairs(&rotated, &rpairs, &dcfg)?;
    let back = g.points().iter().map(|p| rotate_point(*p, -phi, center)).collect();
    Ok(GeoGraph::assemble(back, g.kinds().to_vec(), g.edges().to_vec()))
}

/// Union of cone graphs. Cone graphs live in different frames and share
/// only the terminals, which come first (duplicates collapsed).
pub struct Combiner {
    originals: PointLocator,
    nterm: usize,
    all: Vec<Point>,
    kinds: Vec<VertexKind>,
    edges: Vec<[u32; 2]>,
    terminal_edges: HashSet<(u32, u32)>,
    keep: bool,
    weight: f64,
}

impl Combiner {
    pub fn new(points: &[Point]) -> Self {
        let mut originals = PointLocator::new(SNAP_REL * diameter(points));
        let mut all: Vec<Point> = Vec::new();
        for p in points {
            if originals.find(*p).is_none() {
                originals.insert(*p, all.len() as u32);
                all.push(*p);
            }
        }
        let nterm = all.len();
        Combiner {
            originals,
            nterm,
            kinds: alloc::vec![VertexKind::Terminal; nterm],
            all,
            edges: Vec::new(),
            terminal_edges: HashSet::new(),
            keep: true,
            weight: 0.0,
        }
    }

    /// Tracks only the total weight of the union; Steiner vertices and
    /// edges are dropped after each `add`.
    pub fn weight_only(points: &[Point]) -> Self {
        Combiner { keep: false, ..Self::new(points) }
    }

    /// Weight of the union so far, edges measured in their cone graphs.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn add(&mut self, g: &GeoGraph) {
        let ids: Vec<u32> = g
            .points()
            .iter()
            .zip(g.kinds())
            .map(|(q, kind)| match kind {
                VertexKind::Terminal => match self.originals.find(*q) {
                    Some(id) => id,
                    None => self.push(*q),
                },
                VertexKind::Steiner if self.keep => self.push(*q),
                VertexKind::Steiner => u32::MAX,
            })
            .collect();
        for &e in g.edges() {
            let (u, v) = (ids[e[0] as usize], ids[e[1] as usize]);
            let terminal = (u as usize) < self.nterm && (v as usize) < self.nterm;
            if (u != v || u == u32::MAX) && (!terminal || self.terminal_edges.insert((u.min(v), u.max(v)))) {
                self.weight += g.edge_weight(e);
                if self.keep {
                    self.edges.push([u, v]);
                }
            }
        }
    }

    fn push(&mut self, p: Point) -> u32 {
        self.all.push(p);
        self.kinds.push(VertexKind::Steiner);
        (self.all.len() - 1) as u32
    }

    pub fn finish(self) -> GeoGraph {
        GeoGraph::assemble(self.all, self.kinds, self.edges)
    }
}

pub fn build_spanner(points: &[Point], cfg: &FullSpanConfig) -> Result<GeoGraph> {
    check(points, cfg)?;
    let mut out = Combiner::new(points);
    for (i, pairs) in cone_pairs(points, cfg.k).iter().enumerate() {
        if !pairs.is_empty() {
            out.add(&build_cone(points, cfg, i, pairs)?);
        }
    }
    Ok(out.finish())
}
