use alloc::string::String;
use core::fmt;

use crate::geom::Point;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A segment with coincident endpoints has no direction.
    UndefinedDirection,
    /// Foci of a detour ellipse coincide.
    CoincidentFoci,
    EmptyInput,
    UnknownVertex(usize),
    /// A terminal has no matching terminal vertex in the graph.
    MissingTerminal(Point),
    /// An operation's stated precondition does not hold.
    Precondition(String),
    InvalidParameter(String),
    /// The source of a shallow-light tree is too close to its baseline.
    SourceTooClose { ratio: f64 },
    AspectOutOfBand { aratio: f64, lo: f64, hi: f64 },
    DegenerateRect,
    NotRectilinear,
    NotSimple,
    NotMonotone,
    /// A segment leaves the region covered by the rectangles it is split over.
    OutsideTiling(Point, Point),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UndefinedDirection => write!(f, "undefined direction: degenerate segment"),
            Error::CoincidentFoci => write!(f, "detour ellipse foci coincide"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::UnknownVertex(id) => write!(f, "unknown vertex id {id}"),
            Error::MissingTerminal(p) => {
                write!(f, "terminal ({}, {}) is missing from the graph", p.x, p.y)
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SourceTooClose { ratio } => write!(
                f,
                "source too close for SLT contract (distance/length ratio {ratio} < 2)"
            ),
            Error::AspectOutOfBand { aratio, lo, hi } => {
                write!(f, "aspect ratio {aratio} outside band [{lo}, {hi}]")
            }
            Error::DegenerateRect => write!(f, "degenerate rectangle"),
            Error::NotRectilinear => write!(f, "polygon is not rectilinear"),
            Error::NotSimple => write!(f, "polygon is not simple"),
            Error::NotMonotone => write!(f, "path is not monotone with respect to ab"),
            Error::OutsideTiling(a, b) => write!(
                f,
                "segment ({}, {})-({}, {}) leaves the tiled region",
                a.x, a.y, b.x, b.y
            ),
        }
    }
}

impl core::error::Error for Error {}
