//! Geometric graphs with terminal and Steiner vertices.
//!
//! Edge weights are never stored: the weight of an edge is always the
//! Euclidean distance between its endpoints. Vertices closer than a snap
//! tolerance (max-norm) are identified when a graph is assembled through
//! [`GraphBuilder`].

use alloc::collections::{BTreeSet, BinaryHeap};
use hashbrown::{HashMap, HashSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geom::{DirectionInterval, Point};
use crate::mst;
use crate::{Error, Result};

/// Multiplicative slack on top of `1+eps` absorbing floating-point noise.
pub const STRETCH_SLACK: f64 = 1e-9;

/// Relative snap tolerance (times the terminal-set diameter).
pub const SNAP_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Terminal,
    Steiner,
}

#[derive(Debug, Clone, Default)]
pub struct GeoGraph {
    points: Vec<Point>,
    kinds: Vec<VertexKind>,
    edges: Vec<[u32; 2]>,
    offsets: Vec<u32>,
    adjacency: Vec<(u32, f64)>,
}

impl PartialEq for GeoGraph {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.kinds == other.kinds && self.edges == other.edges
    }
}

impl GeoGraph {
    /// Builds a graph from raw parts, rejecting self-loops, duplicate edges,
    /// dangling ids and non-finite coordinates.
    pub fn from_parts(
        points: Vec<Point>,
        kinds: Vec<VertexKind>,
        edges: Vec<[u32; 2]>,
    ) -> Result<Self> {
        if points.len() != kinds.len() {
            return Err(Error::InvalidParameter(
                "points and kinds differ in length".into(),
            ));
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter(alloc::format!(
                "non-finite vertex ({}, {})",
                p.x,
                p.y
            )));
        }
        let mut seen = BTreeSet::new();
        for &[u, v] in &edges {
            let n = points.len() as u32;
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v) as usize));
            }
            if u == v {
                return Err(Error::InvalidParameter(alloc::format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(alloc::format!(
                    "duplicate edge {u}-{v}"
                )));
            }
        }
        Ok(Self::assemble(points, kinds, edges))
    }

    pub(crate) fn assemble(points: Vec<Point>, kinds: Vec<VertexKind>, edges: Vec<[u32; 2]>) -> Self {
        let n = points.len();
        let mut degree = vec![0u32; n + 1];
        for &[u, v] in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = vec![0u32; n + 1];
        for i in 0..n {
            offsets[i + 1] = offsets[i] + degree[i];
        }
        let mut fill = offsets.clone();
        let mut adjacency = vec![(0u32, 0.0f64); offsets[n] as usize];
        for &[u, v] in &edges {
            let w = points[u as usize].dist(&points[v as usize]);
            adjacency[fill[u as usize] as usize] = (v, w);
            fill[u as usize] += 1;
            adjacency[fill[v as usize] as usize] = (u, w);
            fill[v as usize] += 1;
        }
        GeoGraph {
            points,
            kinds,
            edges,
            offsets,
            adjacency,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> Point {
        self.points[id]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn kind(&self, id: usize) -> VertexKind {
        self.kinds[id]
    }

    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    pub fn edge_weight(&self, e: [u32; 2]) -> f64 {
        self.points[e[0] as usize].dist(&self.points[e[1] as usize])
    }

    pub fn neighbors(&self, id: usize) -> &[(u32, f64)] {
        &self.adjacency[self.offsets[id] as usize..self.offsets[id + 1] as usize]
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|&e| self.edge_weight(e)).sum()
    }

    pub fn num_steiner(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| **k == VertexKind::Steiner)
            .count()
    }

    pub fn terminal_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == VertexKind::Terminal)
            .map(|(i, _)| i)
    }

    /// Vertices sorted by coordinates and edges by endpoint ids, so two graphs
    /// that differ only in vertex numbering compare equal.
    pub fn canonical(&self) -> GeoGraph {
        let mut order: Vec<usize> = (0..self.points.len()).collect();
        order.sort_by(|&a, &b| {
            cmp_points(&self.points[a], &self.points[b]).then(self.kinds[a].cmp(&self.kinds[b]))
        });
        let mut rank = vec![0u32; order.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r as u32;
        }
        let points = order.iter().map(|&i| self.points[i]).collect();
        let kinds = order.iter().map(|&i| self.kinds[i]).collect();
        let mut edges: Vec<[u32; 2]> = self
            .edges
            .iter()
            .map(|&[u, v]| {
                let (a, b) = (rank[u as usize], rank[v as usize]);
                [a.min(b), a.max(b)]
            })
            .collect();
        edges.sort_unstable();
        Self::assemble(points, kinds, edges)
    }

    /// Re-labels vertex kinds: vertices within `tol` of one of `terminals`
    /// become terminals and take its exact coordinates, all others Steiner.
    pub fn with_terminals(&self, terminals: &[Point], tol: f64) -> GeoGraph {
        let mut locator = PointLocator::new(tol);
        for (i, p) in self.points.iter().enumerate() {
            locator.insert(*p, i as u32);
        }
        let mut points = self.points.clone();
        let mut kinds = vec![VertexKind::Steiner; points.len()];
        for t in terminals {
            if let Some(id) = locator.find(*t) {
                points[id as usize] = *t;
                kinds[id as usize] = VertexKind::Terminal;
            }
        }
        Self::assemble(points, kinds, self.edges.clone())
    }

    pub fn check_id(&self, id: usize) -> Result<()> {
        if id < self.points.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(id))
        }
    }

    /// Single-source distances, stopping once every vertex in `stop_after` is settled.
    pub fn dijkstra(&self, source: usize, stop_after: Option<&[usize]>) -> (Vec<f64>, Vec<u32>) {
        let n = self.points.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut parent = vec![u32::MAX; n];
        let mut settled = vec![false; n];
        let mut remaining = match stop_after {
            Some(t) => {
                let mut want = vec![false; n];
                let mut count = 0usize;
                for &v in t {
                    if !want[v] {
                        want[v] = true;
                        count += 1;
                    }
                }
                Some((want, count))
            }
            None => None,
        };
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(HeapItem(0.0, source as u32));
        while let Some(HeapItem(d, u)) = heap.pop() {
            let u = u as usize;
            if settled[u] {
                continue;
            }
            settled[u] = true;
            if let Some((want, count)) = remaining.as_mut() {
                if want[u] {
                    *count -= 1;
                    if *count == 0 {
                        break;
                    }
                }
            }
            for &(v, w) in self.neighbors(u) {
                let nd = d + w;
                if nd < dist[v as usize] {
                    dist[v as usize] = nd;
                    parent[v as usize] = u as u32;
                    heap.push(HeapItem(nd, v));
                }
            }
        }
        (dist, parent)
    }
}

fn cmp_points(a: &Point, b: &Point) -> Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y))
}

#[derive(Debug, Clone, Copy)]
struct HeapItem(f64, u32);

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    // Min-heap on distance, ties by vertex id.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .total_cmp(&self.0)
            .then_with(|| other.1.cmp(&self.1))
    }
}

/// Grid-hashed lookup of points up to a max-norm tolerance.
#[derive(Debug, Clone)]
pub struct PointLocator {
    tol: f64,
    cell: f64,
    heads: HashMap<(bool, i64, i64), u32>,
    /// Point, id and the next entry of the same cell (`u32::MAX` ends a chain).
    nodes: Vec<(Point, u32, u32)>,
}

impl PointLocator {
    pub fn new(tol: f64) -> Self {
        let tol = tol.max(0.0);
        PointLocator {
            tol,
            cell: 8.0 * tol,
            heads: HashMap::new(),
            nodes: Vec::new(),
        }
    }

    /// Cells are `8 tol` wide; coordinates too large for them (or a zero
    /// tolerance) fall back to exact bit patterns.
    fn indexable(&self, p: Point) -> bool {
        const LIMIT: f64 = 4e15;
        self.cell > 0.0 && (p.x / self.cell).abs() < LIMIT && (p.y / self.cell).abs() < LIMIT
    }

    fn cell_of(&self, t: f64) -> i64 {
        crate::math::floor(t / self.cell) as i64
    }

    fn exact_key(p: Point) -> (bool, i64, i64) {
        (true, (p.x + 0.0).to_bits() as i64, (p.y + 0.0).to_bits() as i64)
    }

    fn chain(&self, key: (bool, i64, i64)) -> impl Iterator<Item = &(Point, u32, u32)> {
        let mut next = self.heads.get(&key).copied().unwrap_or(u32::MAX);
        core::iter::from_fn(move || {
            let node = self.nodes.get(next as usize)?;
            next = node.2;
            Some(node)
        })
    }

    pub fn find(&self, p: Point) -> Option<u32> {
        if !self.indexable(p) {
            return self.chain(Self::exact_key(p)).filter(|n| n.0 == p).map(|n| n.1).min();
        }
        let (x0, x1) = (self.cell_of(p.x - self.tol), self.cell_of(p.x + self.tol));
        let (y0, y1) = (self.cell_of(p.y - self.tol), self.cell_of(p.y + self.tol));
        let mut best: Option<(f64, u32)> = None;
        for kx in x0..=x1 {
            for ky in y0..=y1 {
                for &(q, id, _) in self.chain((false, kx, ky)) {
                    let d = (q.x - p.x).abs().max((q.y - p.y).abs());
                    if d <= self.tol && best.is_none_or(|(bd, bid)| (d, id) < (bd, bid)) {
                        best = Some((d, id));
                    }
                }
            }
        }
        best.map(|(_, id)| id)
    }

    pub fn insert(&mut self, p: Point, id: u32) {
        let key = if self.indexable(p) {
            (false, self.cell_of(p.x), self.cell_of(p.y))
        } else {
            Self::exact_key(p)
        };
        let at = self.nodes.len() as u32;
        let next = self.heads.insert(key, at).unwrap_or(u32::MAX);
        self.nodes.push((p, id, next));
    }
}

/// Incremental graph assembly with vertex snapping and edge deduplication.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    locator: PointLocator,
    points: Vec<Point>,
    kinds: Vec<VertexKind>,
    edges: Vec<[u32; 2]>,
    tags: Vec<u8>,
    edge_set: HashSet<(u32, u32)>,
}

impl GraphBuilder {
    pub fn new(snap_tol: f64) -> Self {
        GraphBuilder {
            locator: PointLocator::new(snap_tol),
            points: Vec::new(),
            kinds: Vec::new(),
            edges: Vec::new(),
            tags: Vec::new(),
            edge_set: HashSet::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    /// Adds (or finds) the vertex at `p`; a terminal absorbing a Steiner
    /// vertex upgrades it and moves it onto the terminal's coordinates.
    pub fn add_vertex(&mut self, p: Point, kind: VertexKind) -> u32 {
        if let Some(id) = self.locator.find(p) {
            let i = id as usize;
            if kind == VertexKind::Terminal && self.kinds[i] == VertexKind::Steiner {
                self.kinds[i] = VertexKind::Terminal;
                self.points[i] = p;
            }
            return id;
        }
        let id = self.points.len() as u32;
        self.points.push(p);
        self.kinds.push(kind);
        self.locator.insert(p, id);
        id
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> bool {
        self.add_tagged_edge(u, v, 0)
    }

    /// Adds an undirected edge; the first tag recorded for an edge wins.
    pub fn add_tagged_edge(&mut self, u: u32, v: u32, tag: u8) -> bool {
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        if !self.edge_set.insert(key) {
            return false;
        }
        self.edges.push([key.0, key.1]);
        self.tags.push(tag);
        true
    }

    pub fn add_segment(&mut self, p: Point, q: Point, kind: VertexKind) {
        let u = self.add_vertex(p, kind);
        let v = self.add_vertex(q, kind);
        self.add_edge(u, v);
    }

    /// Adds every vertex and edge of `g`, tagging the edges with `tag`.
    pub fn add_graph(&mut self, g: &GeoGraph, tag: u8) {
        let ids: Vec<u32> = g
            .points
            .iter()
            .zip(&g.kinds)
            .map(|(p, k)| self.add_vertex(*p, *k))
            .collect();
        for &[u, v] in &g.edges {
            self.add_tagged_edge(ids[u as usize], ids[v as usize], tag);
        }
    }

    pub fn build(self) -> GeoGraph {
        GeoGraph::assemble(self.points, self.kinds, self.edges)
    }

    pub fn build_tagged(self) -> (GeoGraph, Vec<u8>) {
        let tags = self.tags;
        (GeoGraph::assemble(self.points, self.kinds, self.edges), tags)
    }
}

/// Union of `graphs`; vertices within `snap_tol` are identified, duplicate
/// edges dropped, and terminal kind dominates Steiner.
pub fn merge(graphs: &[GeoGraph], snap_tol: f64) -> GeoGraph {
    let mut b = GraphBuilder::new(snap_tol);
    for g in graphs {
        b.add_graph(g, 0);
    }
    b.build()
}

/// Exact shortest path between two vertices with one witness path.
///
/// Returns `(+inf, [])` when `b` is unreachable from `a`.
pub fn shortest_path(g: &GeoGraph, a: usize, b: usize) -> Result<(f64, Vec<usize>)> {
    g.check_id(a)?;
    g.check_id(b)?;
    let (dist, parent) = g.dijkstra(a, Some(&[b]));
    if dist[b].is_infinite() {
        return Ok((f64::INFINITY, Vec::new()));
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur] as usize;
        path.push(cur);
    }
    path.reverse();
    Ok((dist[b], path))
}

/// Diameter of a point set (exact, quadratic).
pub fn diameter(points: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(p.dist(q));
        }
    }
    best
}

/// Default snap tolerance: `1e-9` times the diameter of `points`.
pub fn default_snap_tol(points: &[Point]) -> f64 {
    SNAP_REL * diameter(points)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StretchResult {
    pub max_ratio: f64,
    /// Indices into the terminal list of the worst pair, if any pair was checked.
    pub worst_pair: Option<(usize, usize)>,
    pub pairs_checked: usize,
    pub pass: bool,
}

/// Resolves each terminal to a terminal vertex of `g` within `tol`.
pub fn locate_terminals(g: &GeoGraph, terminals: &[Point], tol: f64) -> Result<Vec<usize>> {
    let mut locator = PointLocator::new(tol);
    for id in g.terminal_ids() {
        locator.insert(g.points[id], id as u32);
    }
    terminals
        .iter()
        .map(|t| {
            locator
                .find(*t)
                .map(|id| id as usize)
                .ok_or(Error::MissingTerminal(*t))
        })
        .collect()
}

/// Monotone priority queue on non-negative distances, bucketed by the
/// highest bit in which a key differs from the last popped key.
struct RadixHeap {
    last: u64,
    len: usize,
    buckets: [Vec<(u64, u32)>; 65],
}

impl RadixHeap {
    fn new() -> Self {
        RadixHeap {
            last: 0,
            len: 0,
            buckets: core::array::from_fn(|_| Vec::new()),
        }
    }

    fn bucket(&self, key: u64) -> usize {
        (64 - (key ^ self.last).leading_zeros()) as usize
    }

    fn push(&mut self, d: f64, v: u32) {
        let key = d.to_bits();
        let b = self.bucket(key);
        self.buckets[b].push((key, v));
        self.len += 1;
    }

    fn pop(&mut self) -> Option<(f64, u32)> {
        if self.len == 0 {
            return None;
        }
        if self.buckets[0].is_empty() {
            let i = (1..65).find(|&i| !self.buckets[i].is_empty())?;
            let items = core::mem::take(&mut self.buckets[i]);
            self.last = items.iter().map(|e| e.0).min()?;
            for (key, v) in &items {
                let b = self.bucket(*key);
                self.buckets[b].push((*key, *v));
            }
            // Keep the emptied bucket's allocation for reuse.
            let mut items = items;
            items.clear();
            if self.buckets[i].is_empty() {
                self.buckets[i] = items;
            }
        }
        self.len -= 1;
        self.buckets[0].pop().map(|(key, v)| (f64::from_bits(key), v))
    }
}

/// Terminal-to-terminal distance structure: `g` with Steiner leaves pruned
/// and chains of degree-2 Steiner vertices contracted to single edges.
/// Distances between the remaining vertices are those of `g`.
#[derive(Debug, Clone)]
pub struct DistanceKernel {
    /// Kernel index of each vertex of `g` (`u32::MAX` if contracted away).
    index: Vec<u32>,
    offsets: Vec<u32>,
    adjacency: Vec<(u32, f64)>,
}

impl DistanceKernel {
    pub fn new(g: &GeoGraph) -> Self {
        let n = g.num_vertices();
        let steiner = |v: usize| g.kinds[v] == VertexKind::Steiner;
        let mut degree: Vec<u32> = (0..n).map(|v| g.neighbors(v).len() as u32).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| steiner(v) && degree[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &(u, _) in g.neighbors(v) {
                let u = u as usize;
                if !removed[u] {
                    degree[u] -= 1;
                    if steiner(u) && degree[u] <= 1 {
                        stack.push(u);
                    }
                }
            }
        }
        let kept: Vec<usize> = (0..n)
            .filter(|&v| !removed[v] && (!steiner(v) || degree[v] != 2))
            .collect();
        let mut index = vec![u32::MAX; n];
        for (k, &v) in kept.iter().enumerate() {
            index[v] = k as u32;
        }
        let mut offsets = Vec::with_capacity(kept.len() + 1);
        let mut adjacency = Vec::new();
        offsets.push(0u32);
        for &v in &kept {
            for &(first, w0) in g.neighbors(v) {
                let (mut prev, mut cur, mut w) = (v, first as usize, w0);
                if removed[cur] {
                    continue;
                }
                // Walk the chain of contracted vertices; a chain closing on
                // itself without a kept vertex is unreachable from terminals.
                let mut steps = 0usize;
                while index[cur] == u32::MAX && steps <= n {
                    let next = g
                        .neighbors(cur)
                        .iter()
                        .find(|&&(x, _)| x as usize != prev && !removed[x as usize])
                        .copied();
                    match next {
                        Some((x, wx)) => {
                            prev = cur;
                            cur = x as usize;
                            w += wx;
                        }
                        None => break,
                    }
                    steps += 1;
                }
                if index[cur] != u32::MAX && cur != v {
                    adjacency.push((index[cur], w));
                }
            }
            offsets.push(adjacency.len() as u32);
        }
        DistanceKernel {
            index,
            offsets,
            adjacency,
        }
    }
    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Distances from graph vertex `source` to the graph vertices `targets`
    /// (all of which must be kept, as terminals are).
    pub fn distances(&self, source: usize, targets: &[usize]) -> Vec<f64> {
        let n = self.num_vertices();
        let mut dist = vec![f64::INFINITY; n];
        let mut want = vec![false; n];
        let mut remaining = 0usize;
        for &t in targets {
            let k = self.index[t] as usize;
            if !want[k] {
                want[k] = true;
                remaining += 1;
            }
        }
        let s = self.index[source] as usize;
        let mut heap = RadixHeap::new();
        dist[s] = 0.0;
        heap.push(0.0, s as u32);
        while let Some((d, u)) = heap.pop() {
            let u = u as usize;
            if d > dist[u] {
                continue;
            }
            if want[u] {
                want[u] = false;
                remaining -= 1;
                if remaining == 0 {
                    break;
                }
            }
            for &(v, w) in &self.adjacency[self.offsets[u] as usize..self.offsets[u + 1] as usize] {
                let nd = d + w;
                if nd < dist[v as usize] {
                    dist[v as usize] = nd;
                    heap.push(nd, v);
                }
            }
        }
        targets.iter().map(|&t| dist[self.index[t] as usize]).collect()
    }
}

/// Worst ratio over pairs `(i, j)`, `j > i`, for one source terminal `i`.
///
/// `ids` are the graph vertices of the terminals (see [`locate_terminals`]).
pub fn stretch_from_source(
    kernel: &DistanceKernel,
    terminals: &[Point],
    ids: &[usize],
    i: usize,
    cone: Option<&DirectionInterval>,
) -> (f64, Option<usize>, usize) {
    let wanted: Vec<usize> = (i + 1..terminals.len())
        .filter(|&j| terminals[i] != terminals[j])
        .filter(|&j| cone.is_none_or(|c| c.contains_segment(terminals[i], terminals[j])))
        .collect();
    if wanted.is_empty() {
        return (1.0, None, 0);
    }
    let stop: Vec<usize> = wanted.iter().map(|&j| ids[j]).collect();
    let dist = kernel.distances(ids[i], &stop);
    let mut best = (1.0f64, None);
    for (&j, d) in wanted.iter().zip(dist) {
        let ratio = d / terminals[i].dist(&terminals[j]);
        if best.1.is_none() || ratio > best.0 {
            best = (ratio, Some(j));
        }
    }
    (best.0, best.1, wanted.len())
}

/// Folds per-source results (in source order) into a [`StretchResult`].
pub fn fold_stretch(
    per_source: impl IntoIterator<Item = (usize, (f64, Option<usize>, usize))>,
    eps: f64,
) -> StretchResult {
    let mut res = StretchResult {
        max_ratio: 1.0,
        worst_pair: None,
        pairs_checked: 0,
        pass: true,
    };
    for (i, (ratio, j, count)) in per_source {
        res.pairs_checked += count;
        if let Some(j) = j {
            if res.worst_pair.is_none() || ratio > res.max_ratio {
                res.max_ratio = ratio;
                res.worst_pair = Some((i, j));
            }
        }
    }
    res.max_ratio = res.max_ratio.max(1.0);
    res.pass = res.max_ratio <= (1.0 + eps) * (1.0 + STRETCH_SLACK);
    res
}

/// Checks that every terminal pair (with direction in `cone`, when given) has
/// a path of weight at most `(1+eps)(1+1e-9)` times its distance.
pub fn verify_stretch(
    g: &GeoGraph,
    terminals: &[Point],
    eps: f64,
    cone: Option<&DirectionInterval>,
) -> Result<StretchResult> {
    let ids = locate_terminals(g, terminals, default_snap_tol(terminals))?;
    let kernel = DistanceKernel::new(g);
    Ok(fold_stretch(
        (0..terminals.len()).map(|i| (i, stretch_from_source(&kernel, terminals, &ids, i, cone))),
        eps,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpannerReport {
    pub total_weight: f64,
    pub mst_weight: f64,
    pub lightness: f64,
    pub sparsity: f64,
    pub max_stretch: f64,
    pub num_steiner: usize,
}

impl SpannerReport {
    /// Assembles a report from a precomputed stretch result.
    pub fn from_parts(g: &GeoGraph, terminals: &[Point], stretch: &StretchResult) -> Result<Self> {
        if terminals.is_empty() {
            return Err(Error::EmptyInput);
        }
        let total_weight = g.total_weight();
        let mst_weight = mst::emst(terminals)?.weight;
        let lightness = if mst_weight > 0.0 {
            total_weight / mst_weight
        } else if total_weight == 0.0 {
            1.0
        } else {
            f64::INFINITY
        };
        Ok(SpannerReport {
            total_weight,
            mst_weight,
            lightness,
            sparsity: g.num_edges() as f64 / terminals.len() as f64,
            max_stretch: stretch.max_ratio,
            num_steiner: g.num_steiner(),
        })
    }
}

pub fn report(g: &GeoGraph, terminals: &[Point], eps: f64) -> Result<SpannerReport> {
    if terminals.is_empty() {
        return Err(Error::EmptyInput);
    }
    let stretch = verify_stretch(g, terminals, eps, None)?;
    SpannerReport::from_parts(g, terminals, &stretch)
}
