use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points coincide within tolerance")]
    CoincidentPoints,
    #[error("lines are identical within tolerance")]
    IdenticalLines,
    #[error("circles are identical within tolerance")]
    IdenticalCircles,
    #[error("input points are collinear")]
    CollinearInput,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("invalid line coefficients: (a, b) must not both vanish")]
    InvalidLine,
    #[error("invalid circle: {0}")]
    InvalidCircle(String),
    #[error("invalid tolerance: both epsilons must be positive and finite")]
    InvalidTolerance,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("side {0} is degenerate: consecutive vertices coincide")]
    DegenerateSide(usize),
    #[error("polygon is degenerate: vertices {0}, {1}, {2} are collinear")]
    DegeneratePolygon(usize, usize, usize),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("Simson point lies on the Simson line")]
    PointOnLine,
    #[error("feet {0} and {1} coincide")]
    DuplicateFeet(usize, usize),
    #[error("foot {0} does not lie on the Simson line")]
    FootOffLine(usize),
    #[error("invalid equidistant configuration: {0}")]
    InvalidConfig(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("sides {0} and {1} are parallel")]
    ParallelSides(usize, usize),
    #[error("invalid approximation problem: {0}")]
    InvalidProblem(String),
    #[error("bad interval [{0}, {1}]")]
    BadInterval(f64, f64),
    #[error("knots are not strictly increasing inside (a, b)")]
    UnorderedKnots,
    #[error("x = {0} lies outside [{1}, {2}]")]
    OutOfDomain(f64, f64, f64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
