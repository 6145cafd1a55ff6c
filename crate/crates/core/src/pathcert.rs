//! Short-path characterization: decomposition of a polygonal `ab`-path into
//! nearly parallel edges `E(alpha)` and the rest `F(alpha)`, the
//! near-parallel weight bound for paths of weight at most `(1+eps)|ab|`, and
//! the converse certificate for monotone paths.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::geom::{undirected_angle, Point, Segment};
use crate::math;
use crate::{Error, Result};

/// A polygonal path with at least two vertices and no repeated consecutive vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyPath {
    vertices: Vec<Point>,
}

impl PolyPath {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidParameter(
                "a path needs at least two vertices".into(),
            ));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(
                "consecutive path vertices coincide".into(),
            ));
        }
        Ok(PolyPath { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn a(&self) -> Point {
        self.vertices[0]
    }

    pub fn b(&self) -> Point {
        *self.vertices.last().unwrap()
    }

    pub fn ab(&self) -> Segment {
        Segment::new(self.a(), self.b())
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    pub fn weight(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathDecomposition {
    pub alpha: f64,
    /// Weight of edges at angle at most `alpha` to `ab`.
    pub weight_e: f64,
    pub weight_f: f64,
}

fn split_weights(p: &PolyPath, alpha: f64) -> PathDecomposition {
    let ab = p.ab();
    let (mut weight_e, mut weight_f) = (0.0, 0.0);
    for e in p.edges() {
        if undirected_angle(&ab, &e) <= alpha {
            weight_e += e.length();
        } else {
            weight_f += e.length();
        }
    }
    PathDecomposition {
        alpha,
        weight_e,
        weight_f,
    }
}

pub fn decompose(p: &PolyPath, alpha: f64) -> Result<PathDecomposition> {
    if p.a() == p.b() {
        return Err(Error::CoincidentFoci);
    }
    if !(0.0..PI / 2.0).contains(&alpha) {
        return Err(Error::InvalidParameter("alpha must lie in [0, pi/2)".into()));
    }
    Ok(split_weights(p, alpha))
}

#[derive(Debug, Clone, PartialEq)]
pub struct NearParallelCheck {
    pub pass: bool,
    /// `margins[i-1] = |E(i sqrt(eps))| - (1 - 2/i^2)|ab|` for `i = 1..=floor(1/sqrt(eps))`.
    pub margins: Vec<f64>,
}

/// Checks `|E(i sqrt(eps))| >= (1 - 2/i^2)|ab|` for all admissible `i`.
pub fn check_near_parallel_bound(p: &PolyPath, eps: f64) -> Result<NearParallelCheck> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter("eps must lie in (0, 1)".into()));
    }
    let ab = p.ab().length();
    if ab == 0.0 {
        return Err(Error::CoincidentFoci);
    }
    if p.weight() > (1.0 + eps) * ab {
        return Err(Error::Precondition(alloc::format!(
            "path weight {} exceeds (1+eps)|ab| = {}",
            p.weight(),
            (1.0 + eps) * ab
        )));
    }
    let root = math::sqrt(eps);
    let imax = math::floor(1.0 / root) as usize;
    let margins: Vec<f64> = (1..=imax)
        .map(|i| {
            let fi = i as f64;
            split_weights(p, fi * root).weight_e - (1.0 - 2.0 / (fi * fi)) * ab
        })
        .collect();
    // Margins of exactly tight instances may round to -1e-16.
    let pass = margins.iter().all(|m| *m >= -1e-12 * ab);
    Ok(NearParallelCheck { pass, margins })
}

/// Riemann zeta for `s > 1` by Euler-Maclaurin summation with 32 explicit
/// terms and six Bernoulli corrections; absolute error far below `1e-12`.
fn zeta(s: f64) -> f64 {
    const N: usize = 32;
    const BERNOULLI: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let n = N as f64;
    let mut sum: f64 = (1..N).map(|k| math::pow(k as f64, -s)).sum();
    sum += math::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * math::pow(n, -s);
    // Rising factorial s(s+1)...(s+2k-2) over (2k)!, times N^(-s-2k+1).
    let mut coef = s / 2.0;
    let mut power = math::pow(n, -s - 1.0);
    for (k, b) in BERNOULLI.iter().enumerate() {
        sum += b * coef * power;
        let k2 = 2.0 * (k as f64 + 1.0);
        coef *= (s + k2 - 1.0) * (s + k2) / ((k2 + 1.0) * (k2 + 2.0));
        power /= n * n;
    }
    sum
}

/// `kappa(delta) = 2 (1 + sum_{i>=1} (2i+1)/i^(2+delta))^(-1)`.
pub fn kappa(delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::InvalidParameter(
            "delta must be positive (the series diverges otherwise)".into(),
        ));
    }
    let series = 2.0 * zeta(1.0 + delta) + zeta(2.0 + delta);
    Ok(2.0 / (1.0 + series))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneCertificate {
    /// `|F(i sqrt(eps kappa))| <= |P|/i^(2+delta)` for every `i` up to `ceil(pi/sqrt(eps kappa))`.
    pub condition_holds: bool,
    pub weight_ok: bool,
}

impl MonotoneCertificate {
    /// The certified implication: the condition forces the weight bound.
    pub fn implication_holds(&self) -> bool {
        !self.condition_holds || self.weight_ok
    }
}

/// Whether every directed edge has a strictly positive projection on `ab`.
pub fn is_monotone(p: &PolyPath) -> bool {
    let dir = p.b() - p.a();
    p.edges().all(|e| e.vector().dot(&dir) > 0.0)
}

pub fn certify_monotone(p: &PolyPath, eps: f64, delta: f64) -> Result<MonotoneCertificate> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter("eps must lie in (0, 1)".into()));
    }
    if p.a() == p.b() {
        return Err(Error::CoincidentFoci);
    }
    if !is_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let k = kappa(delta)?;
    let step = math::sqrt(eps * k);
    let m = math::ceil(PI / step) as usize;
    let total = p.weight();
    let condition_holds = (1..=m).all(|i| {
        let fi = i as f64;
        split_weights(p, fi * step).weight_f <= total / math::pow(fi, 2.0 + delta)
    });
    let weight_ok = total <= (1.0 + eps) * p.ab().length();
    let cert = MonotoneCertificate {
        condition_holds,
        weight_ok,
    };
    debug_assert!(cert.implication_holds());
    Ok(cert)
}

/// Rejection sampler for `ab`-paths of weight at most `(1+eps)|ab|`: up to
/// `max_interior` vertices drawn uniformly from the detour ellipse, ordered
/// by their projection on `ab`. `uniform` must yield values in `[0, 1)`.
/// Returns `None` when the drawn path exceeds the budget.
pub fn sample_short_path(
    a: Point,
    b: Point,
    eps: f64,
    max_interior: usize,
    uniform: &mut impl FnMut() -> f64,
) -> Option<PolyPath> {
    let ab = b - a;
    let len = ab.norm();
    let u = ab * (1.0 / len);
    let v = Point::new(-u.y, u.x);
    let mid = a.lerp(&b, 0.5);
    let semi_major = 0.5 * (1.0 + eps) * len;
    let semi_minor = math::sqrt(semi_major * semi_major - 0.25 * len * len);
    let k = (uniform() * (max_interior as f64 + 1.0)) as usize;
    let mut interior: Vec<(f64, Point)> = (0..k.min(max_interior))
        .map(|_| {
            let r = math::sqrt(uniform());
            let t = 2.0 * PI * uniform();
            let (x, y) = (r * math::cos(t) * semi_major, r * math::sin(t) * semi_minor);
            let c = mid + u * x + v * y;
            ((c - a).dot(&u), c)
        })
        .collect();
    interior.sort_by(|l, r| l.0.total_cmp(&r.0));
    let mut vertices = Vec::with_capacity(interior.len() + 2);
    vertices.push(a);
    vertices.extend(interior.into_iter().map(|(_, c)| c));
    vertices.push(b);
    vertices.dedup();
    let path = PolyPath::new(vertices).ok()?;
    (path.weight() <= (1.0 + eps) * len).then_some(path)
}

/// Draws a monotone `ab`-path from `a` along the positive x-axis: `edges`
/// steps whose angles are mostly within `spread`, with occasional steeper
/// steps up to `3 spread`. Returns `None` if the result is not monotone.
pub fn sample_monotone_path(
    a: Point,
    edges: usize,
    spread: f64,
    uniform: &mut impl FnMut() -> f64,
) -> Option<PolyPath> {
    let mut vertices = Vec::with_capacity(edges + 1);
    vertices.push(a);
    let mut cur = a;
    for _ in 0..edges {
        let steep = uniform() < 0.2;
        let limit = if steep { 3.0 * spread } else { spread };
        let angle = (2.0 * uniform() - 1.0) * limit.min(PI / 2.0 - 1e-3);
        let len = 0.05 + uniform();
        cur = cur + Point::new(math::cos(angle), math::sin(angle)) * len;
        vertices.push(cur);
    }
    let path = PolyPath::new(vertices).ok()?;
    is_monotone(&path).then_some(path)
}
