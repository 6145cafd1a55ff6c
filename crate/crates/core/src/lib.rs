//! Light Euclidean Steiner `(1+eps)`-spanners for planar point sets.
//!
//! The crate is `no_std` and only needs `alloc`. It contains the geometric
//! primitives, the geometric graph container with exact stretch verification,
//! minimum spanning trees, the short-path characterization tools, shallow-light
//! trees, the rectangle and rectangulation based directional spanners, the full
//! cone-union spanner, lower-bound instance generators and two classic
//! non-Steiner baselines (path-greedy and Theta-graph).
//!
//! File formats, rendering and the command-line front end live in the
//! `steinerspan-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baselines;
pub mod dirspan;
mod error;
pub mod fullspan;
pub mod geom;
pub mod graph;
pub mod lowerbound;
pub(crate) mod math;
pub mod mst;
pub mod pathcert;
pub mod rectangulate;
pub mod rectspan;
pub mod slt;

pub use error::{Error, Result};
pub use geom::{DirectionInterval, Point, Segment};
pub use graph::{GeoGraph, SpannerReport, StretchResult, VertexKind};
pub use mst::Rect;
