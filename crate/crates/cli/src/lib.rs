//! File formats, rendering, benchmarks and the command implementations
//! behind the `steinerspan` binary.

pub mod error;
pub mod formats;
pub mod svg;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;
use steinerspan::baselines::{greedy_spanner, theta_graph};
use steinerspan::fullspan::{build_cone, build_spanner, cone_pairs, Combiner, FullSpanConfig};
use steinerspan::graph::{default_snap_tol, fold_stretch, locate_terminals, stretch_from_source, DistanceKernel};
use steinerspan::{DirectionInterval, GeoGraph, Point, SpannerReport, StretchResult};

pub use error::CliError;

/// Worker pool capped by `SPANNER_THREADS` (unset or 0: one per core).
pub fn thread_pool() -> Result<ThreadPool, CliError> {
    let n = match std::env::var("SPANNER_THREADS") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("SPANNER_THREADS must be a non-negative integer, got `{s}`")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// `n` points uniform in the unit square.
pub fn random_points(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    Steiner,
    Greedy,
    Theta,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Steiner => "steiner",
            Algo::Greedy => "greedy",
            Algo::Theta => "theta",
        }
    }
}

/// Fewest cones for which the classical bound `1/(1 - 2 sin(theta/2))`
/// is at most `1 + eps`.
pub fn theta_cones(eps: f64) -> usize {
    let theta = 2.0 * (eps / (2.0 * (1.0 + eps))).asin();
    ((2.0 * PI / theta).ceil() as usize).max(3)
}

pub fn build(algo: Algo, points: &[Point], eps: f64, pool: &ThreadPool) -> Result<GeoGraph, CliError> {
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(CliError::Usage(format!("eps must be a non-negative number, got {eps}")));
    }
    Ok(match algo {
        Algo::Steiner => build_steiner(points, eps, pool)?,
        Algo::Greedy => greedy_spanner(points, 1.0 + eps)?,
        Algo::Theta => {
            if eps == 0.0 {
                return Err(CliError::Usage("theta needs eps > 0".into()));
            }
            theta_graph(points, theta_cones(eps))?
        }
    })
}

/// The full Steiner spanner with the cones built in parallel and combined
/// in cone order, so the output does not depend on the pool size.
pub fn build_steiner(points: &[Point], eps: f64, pool: &ThreadPool) -> Result<GeoGraph, CliError> {
    let cfg = FullSpanConfig::new(eps, 0)?;
    if cone_pairs(points, cfg.k).iter().all(|p| p.is_empty()) {
        return Ok(build_spanner(points, &cfg)?);
    }
    Ok(combine_cones(points, &cfg, Combiner::new(points), pool)?.finish())
}

/// Total weight of `build_steiner`'s output without holding the whole graph.
pub fn steiner_weight(points: &[Point], eps: f64, pool: &ThreadPool) -> Result<f64, CliError> {
    let cfg = FullSpanConfig::new(eps, 0)?;
    Ok(combine_cones(points, &cfg, Combiner::weight_only(points), pool)?.weight())
}

fn combine_cones(
    points: &[Point],
    cfg: &FullSpanConfig,
    mut out: Combiner,
    pool: &ThreadPool,
) -> Result<Combiner, CliError> {
    let pairs = cone_pairs(points, cfg.k);
    let todo: Vec<usize> = (0..cfg.k).filter(|&i| !pairs[i].is_empty()).collect();
    pool.install(|| -> Result<(), CliError> {
        // Bounded batches keep at most one graph per worker alive.
        for batch in todo.chunks(rayon::current_num_threads().max(1)) {
            let graphs: Vec<_> = batch.par_iter().map(|&i| build_cone(points, cfg, i, &pairs[i])).collect();
            for g in graphs {
                out.add(&g?);
            }
        }
        Ok(())
    })?;
    Ok(out)
}

pub fn verify(
    g: &GeoGraph,
    points: &[Point],
    eps: f64,
    cone: Option<&DirectionInterval>,
    pool: &ThreadPool,
) -> Result<StretchResult, CliError> {
    let ids = locate_terminals(g, points, default_snap_tol(points))?;
    let kernel = DistanceKernel::new(g);
    let per_source: Vec<_> = pool.install(|| {
        (0..points.len())
            .into_par_iter()
            .map(|i| (i, stretch_from_source(&kernel, points, &ids, i, cone)))
            .collect()
    });
    Ok(fold_stretch(per_source, eps))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Measurement {
    pub total_weight: f64,
    pub mst_weight: f64,
    pub lightness: f64,
    pub sparsity: f64,
    pub max_stretch: f64,
    pub num_steiner: usize,
}

impl From<SpannerReport> for Measurement {
    fn from(r: SpannerReport) -> Self {
        Measurement {
            total_weight: r.total_weight,
            mst_weight: r.mst_weight,
            lightness: r.lightness,
            sparsity: r.sparsity,
            max_stretch: r.max_stretch,
            num_steiner: r.num_steiner,
        }
    }
}

pub fn measure(g: &GeoGraph, points: &[Point], eps: f64, pool: &ThreadPool) -> Result<Measurement, CliError> {
    let stretch = verify(g, points, eps, None, pool)?;
    Ok(SpannerReport::from_parts(g, points, &stretch)?.into())
}

pub struct BenchPlan {
    pub algos: Vec<Algo>,
    pub eps: Vec<f64>,
    pub n: Vec<usize>,
    pub seeds: Vec<u64>,
    /// Record build times; off gives byte-reproducible output.
    pub timing: bool,
}

pub const BENCH_HEADER: &str = "algo,eps,n,seed,weight,mst,lightness,sparsity,max_stretch,millis";

pub fn bench(plan: &BenchPlan, pool: &ThreadPool) -> Result<String, CliError> {
    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    for &algo in &plan.algos {
        for &eps in &plan.eps {
            for &n in &plan.n {
                for &seed in &plan.seeds {
                    let pts = random_points(n, seed);
                    let start = Instant::now();
                    let g = build(algo, &pts, eps, pool)?;
                    let millis = if plan.timing { start.elapsed().as_millis() } else { 0 };
                    let m = measure(&g, &pts, eps, pool)?;
                    writeln!(
                        out,
                        "{},{eps},{n},{seed},{},{},{},{},{},{millis}",
                        algo.name(),
                        m.total_weight,
                        m.mst_weight,
                        m.lightness,
                        m.sparsity,
                        m.max_stretch
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(out)
}
