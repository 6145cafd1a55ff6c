use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinerspan::graph::verify_stretch;
use steinerspan::rectangulate::{crossings, rectangulate_face, subdivide, SegmentKind};
use steinerspan::rectspan::{band, build_band_rect, build_rect, cone, subdivide_rect, BandRectInstance};
use steinerspan::{Point, Rect};

/// `(0,0), (k,0), (k,1), (k-1,1), (k-1,2), ..., (1,k), (0,k)`.
fn staircase(k: usize) -> Vec<Point> {
    let mut v = vec![Point::new(0.0, 0.0), Point::new(k as f64, 0.0)];
    for s in 0..k {
        let x = (k - s) as f64;
        v.push(Point::new(x, (s + 1) as f64));
        v.push(Point::new(x - 1.0, (s + 1) as f64));
    }
    v
}

fn overlap(a: &Rect, b: &Rect) -> f64 {
    let w = a.xmax.min(b.xmax) - a.xmin.max(b.xmin);
    let h = a.ymax.min(b.ymax) - a.ymin.max(b.ymin);
    if w > 0.0 && h > 0.0 { w * h } else { 0.0 }
}

fn assert_disjoint(rects: &[Rect], tol: f64) {
    for (i, a) in rects.iter().enumerate() {
        for b in &rects[i + 1..] {
            assert!(overlap(a, b) <= tol, "{a:?} overlaps {b:?}");
        }
    }
}

#[test]
fn staircase_cut_weight_stays_within_one_constant() {
    let mut worst: f64 = 0.0;
    for k in 4..=64usize {
        let poly = staircase(k);
        let r = rectangulate_face(&poly).unwrap();
        // Cell (i, j) is inside iff i + j <= k - 1.
        for q in &r.rects {
            for c in [q.xmin, q.xmax, q.ymin, q.ymax] {
                assert_eq!(c, c.round(), "corner off the lattice: {q:?}");
            }
            assert!(q.xmin >= 0.0 && q.ymin >= 0.0);
            assert!(q.xmax + q.ymax <= k as f64 + 1.0, "{q:?} leaves the face");
        }
        let area: f64 = r.rects.iter().map(Rect::area).sum();
        assert_eq!(area, (k * (k + 1) / 2) as f64);
        assert_disjoint(&r.rects, 0.0);
        let per = 4.0 * k as f64;
        let ratio = r.cut_weight() / (per * (poly.len() as f64).log2());
        worst = worst.max(ratio);
    }
    assert!(worst <= 0.25, "ratio {worst}");
}

/// Pieces and cut weight of the slab rule, computed directly.
fn slab_oracle(w: f64, h: f64, eps: f64) -> (usize, f64) {
    let (lo, hi) = (eps.sqrt() / 8.0, eps.sqrt() / 4.0);
    let a = w / h;
    if a > hi * (1.0 + 1e-6) {
        let m = (a / lo + 1e-9).floor() as usize;
        (m, (m - 1) as f64 * h)
    } else if a < lo * (1.0 - 1e-6) {
        let m = (hi / a + 1e-9).floor() as usize;
        (m, (m - 1) as f64 * w)
    } else {
        (1, 0.0)
    }
}

#[test]
fn slab_subdivision_tiles_the_rectangle() {
    let s = subdivide_rect(&Rect::new(0.0, 10.0, 0.0, 1.0).unwrap(), 0.04).unwrap();
    assert_eq!(s.cuts.len(), 399);
    assert!((s.cut_weight() - 399.0).abs() < 1e-9);
    let s = subdivide_rect(&Rect::new(0.0, 1.0, 0.0, 100.0).unwrap(), 0.04).unwrap();
    assert!((s.cut_weight() - 4.0).abs() < 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..300 {
        let eps: f64 = [0.5, 0.25, 0.04, 0.01, 0.0025][rng.gen_range(0..5)];
        let (x, y): (f64, f64) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let w = 10f64.powf(rng.gen_range(-1.5..1.5));
        let h = 10f64.powf(rng.gen_range(-1.5..1.5));
        let r = Rect::new(x, x + w, y, y + h).unwrap();
        let s = subdivide_rect(&r, eps).unwrap();
        let area: f64 = s.pieces.iter().map(Rect::area).sum();
        assert!((area - r.area()).abs() <= 1e-9 * r.area());
        let (lo, hi) = band(eps);
        for q in &s.pieces {
            let a = q.aratio().unwrap();
            assert!(a >= lo * (1.0 - 1e-9) && a <= hi * (1.0 + 1e-9), "aratio {a} outside [{lo}, {hi}]");
            assert!(q.xmin >= r.xmin && q.xmax <= r.xmax && q.ymin >= r.ymin && q.ymax <= r.ymax);
        }
        // Slabs run along one axis, so neighbours in sorted order suffice.
        let mut sorted = s.pieces.clone();
        sorted.sort_by(|a, b| a.xmin.total_cmp(&b.xmin).then(a.ymin.total_cmp(&b.ymin)));
        assert!(sorted.windows(2).all(|p| overlap(&p[0], &p[1]) <= 1e-12 * r.area()));
        let (m, weight) = slab_oracle(w, h, eps);
        assert_eq!(s.pieces.len(), m);
        assert_eq!(s.cuts.len(), m - 1);
        assert!((s.cut_weight() - weight).abs() <= 1e-9 * weight.max(1.0));
        if w / h > hi {
            assert!(s.cut_weight() <= 8.0 * w / eps.sqrt() * (1.0 + 1e-9));
        } else if w / h < lo {
            assert!(s.cut_weight() <= (eps.sqrt() * h / 4.0 + w) * (1.0 + 1e-9));
        }
    }
}

#[test]
fn point_subdivision_tiles_the_bounding_box() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for n in [3usize, 8, 20, 40] {
        for _ in 0..5 {
            let pts: Vec<Point> = (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect();
            let s = subdivide(&pts).unwrap();
            assert!(!s.degenerate);
            let area: f64 = s.rects.iter().map(Rect::area).sum();
            assert!((area - s.bbox.area()).abs() <= 1e-9 * s.bbox.area());
            assert_disjoint(&s.rects, 1e-12);
            for (seg, _) in &s.segments {
                assert!(seg.p.x == seg.q.x || seg.p.y == seg.q.y);
            }
            assert!(s.weight_of(SegmentKind::Skeleton) >= s.bbox.per());
        }
    }
}

#[test]
fn crossing_pieces_add_up_to_the_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let eps = 0.04;
    let d = cone(eps);
    for _ in 0..10 {
        let pts: Vec<Point> = (0..30).map(|_| Point::new(rng.gen(), rng.gen())).collect();
        let s = subdivide(&pts).unwrap();
        let mut pairs = Vec::new();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                pairs.push((*a, *b));
            }
        }
        // Force a few pairs into the cone; the mirrored ends are free points.
        let mirrored: Vec<Point> = pts[..5].iter().map(|a| Point::new(a.x, s.bbox.ymin + s.bbox.ymax - a.y)).collect();
        pairs.extend(pts[..5].iter().copied().zip(mirrored.iter().copied()));
        let mut inside = 0;
        for &(a, b) in &pairs {
            let c = crossings(&[(a, b)], &d, &s.rects).unwrap();
            if !d.contains_segment(a, b) {
                assert!(c.pieces.iter().all(Vec::is_empty));
                continue;
            }
            inside += 1;
            // Union of the pieces as parameter intervals along ab.
            let len = a.dist(&b);
            let mut spans: Vec<(f64, f64)> = c
                .pieces
                .iter()
                .flatten()
                .map(|p| {
                    let (s, t) = (a.dist(&p.p) / len, a.dist(&p.q) / len);
                    (s.min(t), s.max(t))
                })
                .collect();
            spans.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut reach = 0.0f64;
            for (s, t) in spans {
                assert!(s <= reach + 1e-9, "gap before {s}");
                reach = reach.max(t);
            }
            assert!((reach - 1.0).abs() <= 1e-9);
        }
        assert!(inside >= 5);
        let c = crossings(&pairs, &d, &s.rects).unwrap();
        for (k, r) in s.rects.iter().enumerate() {
            for p in c.points[k].iter().filter(|p| !mirrored.contains(p)) {
                assert!(r.on_boundary(*p, 1e-12), "{p:?} {r:?}");
            }
        }
    }
}

fn boundary_points(rng: &mut ChaCha8Rng, r: &Rect, n: usize) -> Vec<Point> {
    let (w, h) = (r.width(), r.height());
    (0..n)
        .map(|_| {
            let t: f64 = rng.gen();
            match rng.gen_range(0..4) {
                0 => Point::new(r.xmin + t * w, r.ymin),
                1 => Point::new(r.xmin + t * w, r.ymax),
                2 => Point::new(r.xmin, r.ymin + t * h),
                _ => Point::new(r.xmax, r.ymin + t * h),
            }
        })
        .collect()
}

#[test]
fn band_rectangle_weight_is_linear_in_height() {
    // Measured maximum about 8.7.
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..50 {
        let eps: f64 = rng.gen_range(0.01..0.5);
        let (lo, hi) = band(eps);
        let h: f64 = rng.gen_range(0.5..3.0);
        let r = Rect::new(0.0, h * rng.gen_range(lo..hi), 0.0, h).unwrap();
        let pts = boundary_points(&mut rng, &r, 12);
        let g = build_band_rect(&BandRectInstance::new(r, pts.clone(), eps).unwrap()).unwrap();
        assert!(verify_stretch(&g, &pts, eps, Some(&cone(eps))).unwrap().pass);
        assert!(g.total_weight() / h <= 12.0, "weight/height {}", g.total_weight() / h);
    }
}

#[test]
fn rectangle_weight_is_within_the_slab_bound() {
    // Measured maximum about 8.8.
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..50 {
        let eps: f64 = rng.gen_range(0.01..0.5);
        let (w, h) = (rng.gen_range(0.01..5.0), rng.gen_range(0.01..5.0));
        let r = Rect::new(0.0, w, 0.0, h).unwrap();
        let pts = boundary_points(&mut rng, &r, 12);
        let g = build_rect(&r, &pts, eps).unwrap();
        assert!(verify_stretch(&g, &pts, eps, Some(&cone(eps))).unwrap().pass);
        let c = g.total_weight() / (h + w / eps.sqrt());
        assert!(c <= 12.0, "constant {c}");
    }
}
