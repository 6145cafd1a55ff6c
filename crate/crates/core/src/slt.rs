//! Shallow-light trees from a source point to targets on a segment.
//!
//! The tree is a multi-level fan. In the local frame the baseline is the
//! x-axis and the source sits at height `H`. Level `i` lives at height
//! `H/2^i`; its nodes sit on rays from the source towards aim points spaced
//! `G 2^(-3i/4)` apart on the baseline, with `G = sqrt(8 beta eps) H`. A target
//! is served by the chain of nearest aims from the deepest level up, the
//! deepest node runs along its ray down to the baseline, and the baseline
//! itself carries the last hop.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geom::{Point, Segment};
use crate::graph::{GeoGraph, GraphBuilder, VertexKind};
use crate::math;
use crate::{Error, Result};

/// Fan density: the bend cost of a chain is about `11.3 beta eps H`.
const BETA: f64 = 0.04;
/// Share of the detour budget left for the final baseline hop.
const HOP_SHARE: f64 = 0.2;
const MAX_LEVELS: u32 = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct SltInstance {
    pub source: Point,
    pub baseline: Segment,
    pub targets: Vec<Point>,
    pub eps: f64,
}

impl SltInstance {
    /// Validates `eps`, the source position and that targets lie on the baseline.
    pub fn new(source: Point, baseline: Segment, targets: Vec<Point>, eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidParameter("eps must lie in (0, 1)".into()));
        }
        let inst = SltInstance {
            source,
            baseline,
            targets,
            eps,
        };
        let frame = Frame::new(&inst)?;
        let tol = 1e-9 * (frame.len + frame.height);
        for t in &inst.targets {
            let (x, y) = frame.local(*t);
            if y.abs() > tol || x < -tol || x > frame.len + tol {
                return Err(Error::Precondition(alloc::format!(
                    "target ({}, {}) is not on the baseline",
                    t.x,
                    t.y
                )));
            }
        }
        Ok(inst)
    }

    /// `s = (0, eps^(-1/2))`, baseline `[-1/2, 1/2] x {0}` with `n` evenly spaced targets.
    pub fn normalized(eps: f64, n: usize) -> Result<Self> {
        let (a, b) = (Point::new(-0.5, 0.0), Point::new(0.5, 0.0));
        let targets = match n {
            0 => Vec::new(),
            1 => alloc::vec![Point::new(0.0, 0.0)],
            _ => (0..n)
                .map(|k| a.lerp(&b, k as f64 / (n - 1) as f64))
                .collect(),
        };
        SltInstance::new(
            Point::new(0.0, 1.0 / math::sqrt(eps)),
            Segment::new(a, b),
            targets,
            eps,
        )
    }
}

/// Orthonormal frame with the baseline on the x-axis and the source above it.
struct Frame {
    origin: Point,
    u: Point,
    v: Point,
    len: f64,
    height: f64,
}

impl Frame {
    fn new(inst: &SltInstance) -> Result<Self> {
        let len = inst.baseline.length();
        let origin = inst.baseline.p;
        let (u, mut v) = if len > 0.0 {
            let u = inst.baseline.vector() * (1.0 / len);
            (u, Point::new(-u.y, u.x))
        } else {
            // A point baseline: any frame with the source straight above works.
            let d = inst.source - origin;
            let n = d.norm();
            if n == 0.0 {
                return Err(Error::Precondition("source lies on the baseline".into()));
            }
            let v = d * (1.0 / n);
            (Point::new(v.y, -v.x), v)
        };
        let mut height = (inst.source - origin).dot(&v);
        if height < 0.0 {
            v = v * -1.0;
            height = -height;
        }
        if !(height > 0.0) {
            return Err(Error::Precondition(
                "source lies on the line of the baseline".into(),
            ));
        }
        if height < 2.0 * len {
            return Err(Error::SourceTooClose {
                ratio: height / len,
            });
        }
        Ok(Frame {
            origin,
            u,
            v,
            len,
            height,
        })
    }

    fn local(&self, p: Point) -> (f64, f64) {
        let d = p - self.origin;
        (d.dot(&self.u), d.dot(&self.v))
    }

    fn global(&self, x: f64, y: f64) -> Point {
        self.origin + self.u * x + self.v * y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SltStats {
    /// Depth of the fan; 0 when the star was lighter.
    pub levels: u32,
    /// Targets whose fan chain missed the budget and got a direct edge.
    pub fallbacks: usize,
}

pub fn build_slt(inst: &SltInstance) -> Result<GeoGraph> {
    build_slt_with_stats(inst).map(|(g, _)| g)
}

pub fn build_slt_with_stats(inst: &SltInstance) -> Result<(GeoGraph, SltStats)> {
    if !(inst.eps > 0.0 && inst.eps < 1.0) {
        return Err(Error::InvalidParameter("eps must lie in (0, 1)".into()));
    }
    let frame = Frame::new(inst)?;
    let s = inst.source;
    let tol = 1e-12 * (frame.len + frame.height);
    let mut b = GraphBuilder::new(tol);
    let src = b.add_vertex(s, VertexKind::Terminal);

    // Distinct targets ordered along the baseline.
    let mut targets: Vec<(f64, Point)> = inst
        .targets
        .iter()
        .map(|t| (frame.local(*t).0, *t))
        .collect();
    targets.sort_by(|l, r| l.0.total_cmp(&r.0));
    targets.dedup_by(|l, r| l.1 == r.1);

    let lo = targets.first().map_or(0.0, |t| t.0);
    let span = targets.last().map_or(0.0, |t| t.0) - lo;
    let star_weight: f64 = targets.iter().map(|t| s.dist(&t.1)).sum();
    let fan = (span > 0.0 && targets.len() > 1)
        .then(|| Fan::plan(&frame, frame.local(s).0 - lo, span, inst.eps, &targets, lo))
        .filter(|f| f.weight < star_weight);

    let Some(fan) = fan else {
        for (_, t) in &targets {
            let id = b.add_vertex(*t, VertexKind::Terminal);
            b.add_edge(src, id);
        }
        return Ok((b.build(), SltStats::default()));
    };

    let mut ids: BTreeMap<(u32, usize), u32> = BTreeMap::new();
    for (key, p) in &fan.nodes {
        ids.insert(*key, b.add_vertex(*p, VertexKind::Steiner));
    }
    for (child, parent) in &fan.links {
        let u = parent.map_or(src, |k| ids[&k]);
        b.add_edge(u, ids[child]);
    }
    // Baseline: targets and leaf feet chained in order.
    let mut line: Vec<(f64, u32)> = targets
        .iter()
        .map(|(x, t)| (*x, b.add_vertex(*t, VertexKind::Terminal)))
        .collect();
    for (leaf, foot) in &fan.feet {
        let id = b.add_vertex(frame.global(foot + lo, 0.0), VertexKind::Steiner);
        b.add_edge(ids[leaf], id);
        line.push((foot + lo, id));
    }
    line.sort_by(|l, r| l.0.total_cmp(&r.0).then(l.1.cmp(&r.1)));
    for w in line.windows(2) {
        b.add_edge(w[0].1, w[1].1);
    }
    let mut fallbacks = 0;
    for (k, (_, t)) in targets.iter().enumerate() {
        if fan.chain_length[k] > (1.0 + inst.eps) * s.dist(t) {
            let id = b.add_vertex(*t, VertexKind::Terminal);
            b.add_edge(src, id);
            fallbacks += 1;
        }
    }
    Ok((
        b.build(),
        SltStats {
            levels: fan.levels,
            fallbacks,
        },
    ))
}

type NodeKey = (u32, usize);

struct Fan {
    levels: u32,
    nodes: BTreeMap<NodeKey, Point>,
    /// `(child, parent)`; a `None` parent is the source.
    links: BTreeMap<NodeKey, Option<NodeKey>>,
    /// Leaf node and the local x of its baseline foot.
    feet: BTreeMap<NodeKey, f64>,
    weight: f64,
    chain_length: Vec<f64>,
}

impl Fan {
    /// Plans the fan over `[0, span]` (shifted local coordinates) with the
    /// source at local x `sx`.
    fn plan(frame: &Frame, sx: f64, span: f64, eps: f64, targets: &[(f64, Point)], lo: f64) -> Fan {
        let h = frame.height;
        let g0 = math::sqrt(8.0 * BETA * eps) * h;
        let mut spacings = alloc::vec![0.0];
        let mut halves = alloc::vec![1.0];
        let mut depth = 0;
        loop {
            depth += 1;
            let g = g0 * math::pow(2.0, -0.75 * depth as f64);
            spacings.push(span / math::ceil(span / g).max(1.0));
            halves.push(0.5 * halves[depth as usize - 1]);
            if depth >= MAX_LEVELS || spacings[depth as usize] / 2.0 <= HOP_SHARE * eps * h {
                break;
            }
        }
        let spacing = |i: u32| spacings[i as usize];
        let count = |i: u32| math::round(span / spacing(i)).max(1.0) as usize;
        let aim = |i: u32, k: usize| (k as f64 + 0.5) * spacing(i);
        let nearest = |i: u32, x: f64| {
            let k = math::floor(x / spacing(i)).max(0.0) as usize;
            k.min(count(i) - 1)
        };
        let place = |i: u32, k: usize| {
            let a = aim(i, k);
            let f = halves[i as usize];
            frame.global(sx + (a - sx) * (1.0 - f) + lo, h * f)
        };

        let mut fan = Fan {
            levels: depth,
            nodes: BTreeMap::new(),
            links: BTreeMap::new(),
            feet: BTreeMap::new(),
            weight: 0.0,
            chain_length: Vec::with_capacity(targets.len()),
        };
        let source = frame.global(sx + lo, h);
        for (x, _) in targets {
            let mut key = (depth, nearest(depth, x - lo));
            let foot = aim(depth, key.1);
            let foot_point = frame.global(foot + lo, 0.0);
            let mut length = place(key.0, key.1).dist(&foot_point) + (x - lo - foot).abs();
            if fan.feet.insert(key, foot).is_none() {
                fan.weight += place(key.0, key.1).dist(&foot_point);
            }
            // Walk up the chain, creating nodes on demand; the length of the
            // shared part is accumulated even when it already exists.
            loop {
                let p = place(key.0, key.1);
                fan.nodes.insert(key, p);
                let parent = (key.0 > 1).then(|| (key.0 - 1, nearest(key.0 - 1, aim(key.0, key.1))));
                let q = parent.map_or(source, |pk| place(pk.0, pk.1));
                let edge = p.dist(&q);
                length += edge;
                if fan.links.insert(key, parent).is_none() {
                    fan.weight += edge;
                }
                match parent {
                    Some(pk) => key = pk,
                    None => break,
                }
            }
            fan.chain_length.push(length);
        }
        // Feet are aims, hence inside the target span.
        fan.weight += span;
        fan
    }
}
