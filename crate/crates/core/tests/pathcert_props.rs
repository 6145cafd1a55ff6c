use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinerspan::pathcert::{
    certify_monotone, check_near_parallel_bound, kappa, sample_monotone_path, sample_short_path, PolyPath,
};
use steinerspan::Point;

/// `2 (1 + sum (2i+1)/i^(2+delta))^(-1)`: a million terms plus the integral
/// tail `int_N^inf (2x+1) x^(-2-delta) dx` with the half-term correction.
fn kappa_oracle(delta: f64) -> f64 {
    let n = 1_000_000u64;
    let term = |x: f64| (2.0 * x + 1.0) / x.powf(2.0 + delta);
    let mut sum = 0.0;
    for i in (1..n).rev() {
        sum += term(i as f64);
    }
    let x = n as f64;
    let tail = 2.0 * x.powf(-delta) / delta + x.powf(-1.0 - delta) / (1.0 + delta) + 0.5 * term(x);
    2.0 / (1.0 + sum + tail)
}

#[test]
fn kappa_against_series_oracle() {
    for &delta in &[0.5, 1.0, 2.0, 4.0] {
        let k = kappa(delta).unwrap();
        let oracle = kappa_oracle(delta);
        assert!((k - oracle).abs() < 1e-9, "delta {delta}: {k} vs {oracle}");
    }
    assert!((kappa(1.0).unwrap() - 0.364171).abs() < 5e-7);
    let mut prev = 0.0;
    for i in 1..40 {
        let k = kappa(0.25 * i as f64).unwrap();
        assert!(k > prev && k < 0.5);
        prev = k;
    }
    assert!((kappa(60.0).unwrap() - 0.5).abs() < 1e-12);
    assert!(kappa(0.0).is_err());
}

/// Undirected angle between the lines of two vectors, in `[0, pi/2]`.
fn line_angle(u: Point, v: Point) -> f64 {
    let c = (u.x * v.x + u.y * v.y).abs() / (u.norm() * v.norm());
    c.min(1.0).acos()
}

/// `|E(alpha)|` by direct summation.
fn near_parallel_weight(p: &PolyPath, alpha: f64) -> f64 {
    let ab = p.b() - p.a();
    p.vertices()
        .windows(2)
        .filter(|w| line_angle(w[1] - w[0], ab) <= alpha)
        .map(|w| w[0].dist(&w[1]))
        .sum()
}

#[test]
fn short_paths_are_mostly_near_parallel() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut uniform = move || rng.gen::<f64>();
    for &eps in &[0.3, 0.1, 0.02] {
        let mut accepted = 0;
        let mut draws = 0;
        while accepted < 1000 {
            draws += 1;
            assert!(draws < 1_000_000, "sampler starved at eps {eps}");
            let a = Point::new(4.0 * uniform() - 2.0, 4.0 * uniform() - 2.0);
            let b = Point::new(4.0 * uniform() - 2.0, 4.0 * uniform() - 2.0);
            if a.dist(&b) < 1e-3 {
                continue;
            }
            let Some(p) = sample_short_path(a, b, eps, 8, &mut uniform) else {
                continue;
            };
            accepted += 1;
            let ab = a.dist(&b);
            assert!(p.weight() <= (1.0 + eps) * ab);
            let imax = (1.0 / eps.sqrt()).floor() as usize;
            for i in 1..=imax {
                let fi = i as f64;
                let e = near_parallel_weight(&p, fi * eps.sqrt());
                assert!(e >= (1.0 - 2.0 / (fi * fi)) * ab - 1e-12 * ab, "eps {eps} i {i}: {e} vs {ab}");
            }
            assert!(check_near_parallel_bound(&p, eps).unwrap().pass);
        }
    }
}

#[test]
fn monotone_paths_meeting_the_condition_are_short() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut uniform = move || rng.gen::<f64>();
    let delta = 1.0;
    let k = kappa(delta).unwrap();
    for &eps in &[0.3, 0.1, 0.02] {
        let step = (eps * k).sqrt();
        let imax = (std::f64::consts::PI / step).ceil() as usize;
        let mut certified = 0;
        let mut draws = 0;
        while certified < 1000 {
            draws += 1;
            assert!(draws < 1_000_000, "no certified paths at eps {eps}");
            let edges = 1 + (uniform() * 12.0) as usize;
            let spread = step * (0.2 + 1.3 * uniform());
            let Some(p) = sample_monotone_path(Point::new(0.0, 0.0), edges, spread, &mut uniform) else {
                continue;
            };
            let cert = certify_monotone(&p, eps, delta).unwrap();
            // The condition re-evaluated independently.
            let ab = p.b() - p.a();
            let total = p.weight();
            let holds = (1..=imax).all(|i| {
                let fi = i as f64;
                let f: f64 = p
                    .vertices()
                    .windows(2)
                    .filter(|w| line_angle(w[1] - w[0], ab) > fi * step)
                    .map(|w| w[0].dist(&w[1]))
                    .sum();
                f <= total / fi.powf(2.0 + delta)
            });
            assert_eq!(cert.condition_holds, holds);
            if holds {
                certified += 1;
                assert!(total <= (1.0 + eps) * ab.norm(), "eps {eps}: {total} vs {}", ab.norm());
                assert!(cert.weight_ok);
            }
        }
    }
}
