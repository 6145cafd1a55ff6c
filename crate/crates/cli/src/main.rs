use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use steinerspan::lowerbound::{generate_grid_set, GridInstance};
use steinerspan::DirectionInterval;
use steinerspan_cli::formats::{read_graph, read_points, write_file, write_graph, write_points, write_rows};
use steinerspan_cli::{bench, build, measure, random_points, svg, thread_pool, verify, Algo, BenchPlan, CliError};

#[derive(Parser)]
#[command(name = "steinerspan", version, about = "Light Euclidean Steiner spanners in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    GridLb,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a spanner for a point set
    Build {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        eps: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the stretch of a graph; exit status 2 when it is too large
    Verify {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eps: f64,
        /// Only check pairs with direction in [LO, HI] (radians, mod pi)
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        cone: Option<Vec<f64>>,
    },
    /// Weight, lightness, sparsity and stretch of a graph
    Measure {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        json: bool,
    },
    /// Run algorithms over random point sets and write a CSV table
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        eps_list: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "steiner,greedy,theta")]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of consecutive seeds starting at --seed
        #[arg(long, default_value_t = 1)]
        reps: u64,
        /// Write 0 in the millis column
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Draw a graph as SVG
    Render {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Gen { kind, n, eps, d, copies, seed, out } => match kind {
            Kind::Random => {
                let n = n.ok_or_else(|| CliError::Usage("gen --kind random needs --n".into()))?;
                write_file(&out, &write_points(&random_points(n, seed)))?;
            }
            Kind::GridLb => {
                let eps = eps.ok_or_else(|| CliError::Usage("gen --kind grid-lb needs --eps".into()))?;
                let rows = generate_grid_set(&GridInstance::new(d, eps, copies)?)?;
                write_file(&out, &write_rows(&rows))?;
            }
        },
        Command::Build { algo, eps, input, out } => {
            let pts = read_points(&input)?;
            let g = build(algo, &pts, eps, &thread_pool()?)?;
            write_file(&out, &write_graph(&g))?;
        }
        Command::Verify { points, graph, eps, cone } => {
            let pts = read_points(&points)?;
            let g = read_graph(&graph)?;
            let cone = cone.map(|c| DirectionInterval::new(c[0], c[1])).transpose()?;
            if !(eps >= 0.0) {
                return Err(CliError::Usage("eps must be non-negative".into()));
            }
            let res = verify(&g, &pts, eps, cone.as_ref(), &thread_pool()?)?;
            println!("max stretch {}", res.max_ratio);
            match res.worst_pair {
                Some((i, j)) => println!(
                    "worst pair {i} {j} ({}, {}) ({}, {})",
                    pts[i].x, pts[i].y, pts[j].x, pts[j].y
                ),
                None => println!("worst pair none"),
            }
            println!("pairs checked {}", res.pairs_checked);
            println!("{}", if res.pass { "pass" } else { "fail" });
            if !res.pass {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Measure { points, graph, eps, json } => {
            let pts = read_points(&points)?;
            let g = read_graph(&graph)?;
            let m = measure(&g, &pts, eps, &thread_pool()?)?;
            if json {
                println!("{}", serde_json::to_string(&m).expect("plain struct serializes"));
            } else {
                println!("total_weight {}", m.total_weight);
                println!("mst_weight {}", m.mst_weight);
                println!("lightness {}", m.lightness);
                println!("sparsity {}", m.sparsity);
                println!("max_stretch {}", m.max_stretch);
                println!("num_steiner {}", m.num_steiner);
            }
        }
        Command::Bench { eps_list, n_list, algos, seed, reps, no_timing, csv } => {
            let plan = BenchPlan {
                algos,
                eps: eps_list,
                n: n_list,
                seeds: (seed..seed + reps.max(1)).collect(),
                timing: !no_timing,
            };
            write_file(&csv, &bench(&plan, &thread_pool()?)?)?;
        }
        Command::Render { graph, out } => {
            write_file(&out, &svg::render(&read_graph(&graph)?))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
