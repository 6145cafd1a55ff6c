//! Non-Steiner reference spanners: path-greedy and the Theta-graph.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::geom::Point;
use crate::graph::{GeoGraph, GraphBuilder, VertexKind};
use crate::math;
use crate::{Error, Result};

#[derive(PartialEq)]
struct Item(f64, usize);

impl Eq for Item {}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

/// Dijkstra from `s` that gives up beyond `limit`; returns the distance to `t`
/// if it is at most `limit`.
fn bounded_distance(adj: &[Vec<(usize, f64)>], s: usize, t: usize, limit: f64, dist: &mut [f64], touched: &mut Vec<usize>) -> Option<f64> {
    for &v in touched.iter() {
        dist[v] = f64::INFINITY;
    }
    touched.clear();
    let mut heap = BinaryHeap::new();
    dist[s] = 0.0;
    touched.push(s);
    heap.push(Item(0.0, s));
    while let Some(Item(d, u)) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == t {
            return Some(d);
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd <= limit && nd < dist[v] {
                if dist[v].is_infinite() {
                    touched.push(v);
                }
                dist[v] = nd;
                heap.push(Item(nd, v));
            }
        }
    }
    None
}

/// Path-greedy `t`-spanner: pairs by increasing distance (ties by index),
/// an edge is added iff the current graph distance exceeds `t` times it.
pub fn greedy_spanner(points: &[Point], t: f64) -> Result<GeoGraph> {
    if !(t >= 1.0) {
        return Err(Error::InvalidParameter("stretch t must be at least 1".into()));
    }
    let n = points.len();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((points[i].dist(&points[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    let mut dist = vec![f64::INFINITY; n];
    let mut touched = Vec::new();
    let mut edges = Vec::new();
    for (d, i, j) in pairs {
        if d == 0.0 {
            continue;
        }
        if bounded_distance(&adj, i, j, t * d, &mut dist, &mut touched).is_none() {
            adj[i].push((j, d));
            adj[j].push((i, d));
            edges.push((i, j));
        }
    }
    let mut b = GraphBuilder::new(0.0);
    let ids: Vec<u32> = points.iter().map(|p| b.add_vertex(*p, VertexKind::Terminal)).collect();
    for (i, j) in edges {
        b.add_edge(ids[i], ids[j]);
    }
    Ok(b.build())
}

/// Cone of `q` around `p` among `k` cones `[2 pi j/k, 2 pi (j+1)/k)`.
pub fn theta_cone(p: Point, q: Point, k: usize) -> usize {
    let mut a = math::atan2(q.y - p.y, q.x - p.x);
    if a < 0.0 {
        a += 2.0 * PI;
    }
    ((math::floor(a * k as f64 / (2.0 * PI)).max(0.0)) as usize).min(k - 1)
}

/// Theta-graph: per point and cone, an edge to the point with the smallest
/// projection on the cone's bisector ray (ties by index).
pub fn theta_graph(points: &[Point], k: usize) -> Result<GeoGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter("a Theta-graph needs at least 3 cones".into()));
    }
    let bisectors: Vec<Point> = (0..k)
        .map(|j| {
            let a = (j as f64 + 0.5) * 2.0 * PI / k as f64;
            Point::new(math::cos(a), math::sin(a))
        })
        .collect();
    let mut b = GraphBuilder::new(0.0);
    let ids: Vec<u32> = points.iter().map(|p| b.add_vertex(*p, VertexKind::Terminal)).collect();
    let mut best: Vec<Option<(f64, usize)>> = vec![None; k];
    for (i, p) in points.iter().enumerate() {
        best.iter_mut().for_each(|c| *c = None);
        for (j, q) in points.iter().enumerate() {
            if p == q {
                continue;
            }
            let c = theta_cone(*p, *q, k);
            let key = (*q - *p).dot(&bisectors[c]);
            if best[c].is_none_or(|(bk, bj)| key < bk || (key == bk && j < bj)) {
                best[c] = Some((key, j));
            }
        }
        for (_, j) in best.iter().flatten() {
            b.add_edge(ids[i], ids[*j]);
        }
    }
    Ok(b.build())
}
