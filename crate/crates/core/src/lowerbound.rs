//! Lower-bound instances: two lattices of spacing `d sqrt(eps)` on opposite
//! faces of a unit cube, optionally repeated in translated copies.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::Point;
use crate::math;
use crate::{Error, Result};

/// Gap between consecutive copies along the first axis.
pub const COPY_GAP: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridInstance {
    pub d: usize,
    pub eps: f64,
    pub copies: usize,
}

impl GridInstance {
    pub fn new(d: usize, eps: f64, copies: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter("dimension must be at least 2".into()));
        }
        if copies == 0 {
            return Err(Error::InvalidParameter("at least one copy is required".into()));
        }
        if !(eps > 0.0) {
            return Err(Error::InvalidParameter("eps must be positive".into()));
        }
        if eps > (1.0 / d as f64) * (1.0 + 1e-12) {
            return Err(Error::Precondition(alloc::format!(
                "eps = {eps} exceeds 1/d = {}",
                1.0 / d as f64
            )));
        }
        Ok(GridInstance { d, eps, copies })
    }

    pub fn spacing(&self) -> f64 {
        self.d as f64 * math::sqrt(self.eps)
    }

    /// Lattice points per axis, both ends included.
    pub fn per_axis(&self) -> usize {
        math::floor(1.0 / self.spacing() + 1e-9) as usize + 1
    }

    /// Points per face of one copy.
    pub fn per_face(&self) -> usize {
        self.per_axis().pow(self.d as u32 - 1)
    }

    /// Distance between the origins of consecutive copies.
    pub fn copy_offset(&self) -> f64 {
        (self.per_axis() - 1) as f64 * self.spacing() + COPY_GAP
    }

    pub fn num_points(&self) -> usize {
        2 * self.per_face() * self.copies
    }
}

/// All points, each as a vector of `d` coordinates. The faces are orthogonal
/// to the last axis (at 0 and 1); copies are translated along the first axis.
pub fn generate_grid_set(inst: &GridInstance) -> Result<Vec<Vec<f64>>> {
    let inst = GridInstance::new(inst.d, inst.eps, inst.copies)?;
    let (n, s, d) = (inst.per_axis(), inst.spacing(), inst.d);
    let mut out = Vec::with_capacity(inst.num_points());
    for c in 0..inst.copies {
        let shift = c as f64 * inst.copy_offset();
        for last in [0.0, 1.0] {
            let mut idx = vec![0usize; d - 1];
            loop {
                let mut p: Vec<f64> = idx.iter().map(|&i| i as f64 * s).collect();
                p[0] += shift;
                p.push(last);
                out.push(p);
                // Odometer over the first d-1 axes.
                let mut a = 0;
                while a < d - 1 {
                    idx[a] += 1;
                    if idx[a] < n {
                        break;
                    }
                    idx[a] = 0;
                    a += 1;
                }
                if a == d - 1 {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The planar instance as points.
pub fn generate_grid_set_2d(inst: &GridInstance) -> Result<Vec<Point>> {
    if inst.d != 2 {
        return Err(Error::InvalidParameter("planar instances need d = 2".into()));
    }
    Ok(generate_grid_set(inst)?
        .into_iter()
        .map(|p| Point::new(p[0], p[1]))
        .collect())
}

/// Closed form `k (1 + (|S|-2) d sqrt(eps)) + 3 (k-1)`, `|S|` the size of one copy.
pub fn reference_mst_weight(inst: &GridInstance) -> Result<f64> {
    let inst = GridInstance::new(inst.d, inst.eps, inst.copies)?;
    let per_copy = 2 * inst.per_face();
    let one = 1.0 + (per_copy as f64 - 2.0) * inst.spacing();
    let k = inst.copies as f64;
    Ok(k * one + COPY_GAP * (k - 1.0))
}
