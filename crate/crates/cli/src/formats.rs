//! Text formats for point sets and graphs.
//!
//! Points: one `x y` pair per line. Graphs: `v <id> <x> <y> <T|S>` lines
//! followed by `e <u> <v>` lines; ids are dense and in order. Blank lines and
//! anything after `#` are ignored. Coordinates are written with 17
//! significant digits, which reproduces every `f64` exactly.

use std::fmt::Write as _;
use std::path::Path;

use steinerspan::{GeoGraph, Point, VertexKind};

use crate::error::CliError;

fn fmt_coord(out: &mut String, x: f64) {
    write!(out, "{x:.16e}").unwrap();
}

pub fn write_points(points: &[Point]) -> String {
    let mut out = String::with_capacity(48 * points.len());
    for p in points {
        fmt_coord(&mut out, p.x);
        out.push(' ');
        fmt_coord(&mut out, p.y);
        out.push('\n');
    }
    out
}

/// Rows of `d` coordinates, for instances in more than two dimensions.
pub fn write_rows(rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for row in rows {
        for (i, x) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            fmt_coord(&mut out, *x);
        }
        out.push('\n');
    }
    out
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_f64(path: &Path, line: usize, s: &str) -> Result<f64, CliError> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(CliError::parse(path, line, format!("bad coordinate `{s}`"))),
    }
}

pub fn parse_points(path: &Path, text: &str) -> Result<Vec<Point>, CliError> {
    lines(text)
        .map(|(n, f)| {
            if f.len() != 2 {
                return Err(CliError::parse(path, n, format!("expected `x y`, found {} fields", f.len())));
            }
            Ok(Point::new(parse_f64(path, n, f[0])?, parse_f64(path, n, f[1])?))
        })
        .collect()
}

pub fn write_graph(g: &GeoGraph) -> String {
    let mut out = String::with_capacity(56 * g.num_vertices() + 16 * g.num_edges());
    for (i, (p, k)) in g.points().iter().zip(g.kinds()).enumerate() {
        write!(out, "v {i} ").unwrap();
        fmt_coord(&mut out, p.x);
        out.push(' ');
        fmt_coord(&mut out, p.y);
        out.push_str(match k {
            VertexKind::Terminal => " T\n",
            VertexKind::Steiner => " S\n",
        });
    }
    for [u, v] in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_graph(path: &Path, text: &str) -> Result<GeoGraph, CliError> {
    let mut points = Vec::new();
    let mut kinds = Vec::new();
    let mut edges = Vec::new();
    for (n, f) in lines(text) {
        match (f[0], f.len()) {
            ("v", 5) => {
                if !edges.is_empty() {
                    return Err(CliError::parse(path, n, "vertex after the first edge".into()));
                }
                if f[1].parse::<usize>().ok() != Some(points.len()) {
                    return Err(CliError::parse(path, n, format!("expected vertex id {}", points.len())));
                }
                points.push(Point::new(parse_f64(path, n, f[2])?, parse_f64(path, n, f[3])?));
                kinds.push(match f[4] {
                    "T" => VertexKind::Terminal,
                    "S" => VertexKind::Steiner,
                    k => return Err(CliError::parse(path, n, format!("vertex kind `{k}` is not T or S"))),
                });
            }
            ("e", 3) => {
                let id = |s: &str| {
                    s.parse::<u32>()
                        .map_err(|_| CliError::parse(path, n, format!("bad vertex id `{s}`")))
                };
                edges.push([id(f[1])?, id(f[2])?]);
            }
            _ => return Err(CliError::parse(path, n, "expected a `v` or `e` record".into())),
        }
    }
    GeoGraph::from_parts(points, kinds, edges).map_err(|e| CliError::parse(path, 0, e.to_string()))
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    parse_points(path, &read_to_string(path)?)
}

pub fn read_graph(path: &Path) -> Result<GeoGraph, CliError> {
    parse_graph(path, &read_to_string(path)?)
}
