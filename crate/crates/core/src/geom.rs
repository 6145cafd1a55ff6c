//! Planar geometric primitives: points, segments, directions, projections,
//! detour ellipses and rigid rotations.
//!
//! Directions of undirected lines live in the half-open interval `[0, pi)`.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};

use crate::math;
use crate::{Error, Result};

/// Slack used for boundary membership of directions.
pub const ANGLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        math::hypot(self.x - other.x, self.y - other.y)
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(&self, other: &Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> f64 {
        math::hypot(self.x, self.y)
    }

    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub const fn new(p: Point, q: Point) -> Self {
        Segment { p, q }
    }

    pub fn length(&self) -> f64 {
        self.p.dist(&self.q)
    }

    pub fn is_degenerate(&self) -> bool {
        self.p == self.q
    }

    pub fn vector(&self) -> Point {
        self.q - self.p
    }

    pub fn direction(&self) -> Result<f64> {
        direction_of(self)
    }
}

/// Direction of the supporting line of `s`, in `[0, pi)`.
pub fn direction_of(s: &Segment) -> Result<f64> {
    if s.is_degenerate() {
        return Err(Error::UndefinedDirection);
    }
    let v = s.vector();
    Ok(normalize_direction(math::atan2(v.y, v.x)))
}

/// Maps any angle onto the direction space `[0, pi)`.
pub fn normalize_direction(theta: f64) -> f64 {
    let mut t = theta % PI;
    if t < 0.0 {
        t += PI;
    }
    // `-0.0 + pi` style rounding can land exactly on pi.
    if t >= PI {
        t -= PI;
    }
    t
}

/// Cyclic distance between two directions; a metric on `[0, pi)` with maximum `pi/2`.
pub fn direction_distance(theta1: f64, theta2: f64) -> f64 {
    let d = (theta1 - theta2).abs();
    d.min(PI - d).max(0.0)
}

/// Angle between two undirected edges, `arccos |u1 . u2|`, in `[0, pi/2]`.
///
/// Returns 0 if either segment is degenerate.
pub fn undirected_angle(e1: &Segment, e2: &Segment) -> f64 {
    let (l1, l2) = (e1.length(), e2.length());
    if l1 == 0.0 || l2 == 0.0 {
        return 0.0;
    }
    let c = (e1.vector().dot(&e2.vector()) / (l1 * l2)).abs().min(1.0);
    math::acos(c)
}

/// Length of the orthogonal projection of `e` onto the supporting line of `ab`.
pub fn projected_length(e: &Segment, ab: &Segment) -> f64 {
    let lab = ab.length();
    if lab == 0.0 {
        return 0.0;
    }
    (e.vector().dot(&ab.vector()) / lab).abs().min(e.length())
}

/// Whether `c` lies in the detour ellipse with foci `a`, `b`:
/// `|ac| + |cb| <= (1+eps)|ab|`.
pub fn in_detour_ellipse(a: Point, b: Point, eps: f64, c: Point) -> Result<bool> {
    if a == b {
        return Err(Error::CoincidentFoci);
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    Ok(a.dist(&c) + c.dist(&b) <= (1.0 + eps) * a.dist(&b))
}

/// Rotates `p` counterclockwise by `theta` about `center`.
pub fn rotate_point(p: Point, theta: f64, center: Point) -> Point {
    let (s, c) = (math::sin(theta), math::cos(theta));
    let d = p - center;
    Point::new(center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y)
}

pub fn rotate(points: &[Point], theta: f64, center: Point) -> Vec<Point> {
    points
        .iter()
        .map(|&p| rotate_point(p, theta, center))
        .collect()
}

/// An interval of directions in `[0, pi)`; `lo > hi` wraps around `pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionInterval {
    pub lo: f64,
    pub hi: f64,
}

impl DirectionInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0..PI).contains(&lo) || !(0.0..PI).contains(&hi) {
            return Err(Error::InvalidParameter(
                "direction interval bounds must lie in [0, pi)".into(),
            ));
        }
        Ok(DirectionInterval { lo, hi })
    }

    /// Closed interval of directions within `half_width` of `center`.
    pub fn centered(center: f64, half_width: f64) -> Self {
        DirectionInterval {
            lo: normalize_direction(center - half_width),
            hi: normalize_direction(center + half_width),
        }
    }

    /// The near-vertical cone `[pi/2 - w/2, pi/2 + w/2]` of width `w`.
    pub fn near_vertical(width: f64) -> Self {
        Self::centered(PI / 2.0, width / 2.0)
    }

    pub fn width(&self) -> f64 {
        if self.lo <= self.hi {
            self.hi - self.lo
        } else {
            PI - self.lo + self.hi
        }
    }

    /// Closed membership with [`ANGLE_TOL`] slack at both ends.
    pub fn contains(&self, theta: f64) -> bool {
        let theta = normalize_direction(theta);
        let (lo, hi) = (self.lo - ANGLE_TOL, self.hi + ANGLE_TOL);
        if self.lo <= self.hi {
            (lo..=hi).contains(&theta) || theta >= PI + lo || theta <= hi - PI
        } else {
            theta >= lo || theta <= hi
        }
    }

    /// Exact half-open membership `[lo, hi)`.
    pub fn contains_half_open(&self, theta: f64) -> bool {
        if self.lo <= self.hi {
            theta >= self.lo && theta < self.hi
        } else {
            theta >= self.lo || theta < self.hi
        }
    }

    pub fn contains_segment(&self, a: Point, b: Point) -> bool {
        direction_of(&Segment::new(a, b)).is_ok_and(|t| self.contains(t))
    }
}
