use clap::{Args, ValueEnum};

use super::{CliError, Output, EXIT_CHECK_FAILED, EXIT_OK};
use crate::equidistant::{verify_polygon, CheckSet};
use crate::geom::Point;
use crate::scene::{polygon_of, SceneDocument};
use crate::simson::Polygon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Simson,
    ParallelChords,
    Isogonal,
    Optical,
    Archimedes,
    Lambert,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Checks to run, comma separated
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub checks: Vec<CheckKind>,
    /// Sides `i,j,k` (1-based) for the circumcircle check; all triples otherwise
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub triple: Option<Vec<usize>>,
    /// Id of the polygon entity; the first polygon otherwise
    #[arg(long)]
    pub polygon: Option<String>,
    /// Displace one vertex before checking; the checks are then expected to fail
    #[arg(long)]
    pub negative_control: bool,
    /// Size of the displacement relative to the polygon's bounding-box diagonal
    #[arg(long, default_value_t = 1e-3)]
    pub perturb: f64,
}

fn check_set(kinds: &[CheckKind]) -> CheckSet {
    if kinds.contains(&CheckKind::All) {
        return CheckSet::ALL;
    }
    let has = |k| kinds.contains(&k);
    CheckSet {
        simson: has(CheckKind::Simson),
        parallel_chords: has(CheckKind::ParallelChords),
        isogonal: has(CheckKind::Isogonal),
        optical: has(CheckKind::Optical),
        archimedes: has(CheckKind::Archimedes),
        lambert: has(CheckKind::Lambert),
    }
}

/// Vertex `n / 2` moved by `eps * scale` along `(0.6, 0.8)`.
pub fn negative_control_offset(poly: &Polygon, eps: f64) -> (usize, Point) {
    (poly.len() / 2, Point::new(0.6, 0.8) * (eps * poly.scale()))
}

pub(super) fn run(args: &VerifyArgs, out: &Output) -> Result<i32, CliError> {
    let tol = out.tolerance();
    let triple = match args.triple.as_deref() {
        None => None,
        Some(&[i, j, k]) => Some([i, j, k]),
        Some(_) => return Err(CliError::usage("--triple takes three indices i,j,k")),
    };
    let doc = SceneDocument::from_json(&out.input()?)?;
    let entity = doc
        .polygon_entity(args.polygon.as_deref())
        .ok_or_else(|| CliError::usage("scene contains no matching closed polygon"))?;
    let (mut polygon, mut recorded) = polygon_of(entity)?;
    if args.negative_control {
        if !(args.perturb > 0.0 && args.perturb.is_finite()) {
            return Err(CliError::usage("--perturb must be positive"));
        }
        let (index, offset) = negative_control_offset(&polygon, args.perturb);
        polygon = polygon.perturbed(index, offset)?;
        recorded = recorded.map(|sp| sp.with_perturbed_vertex(index, offset)).transpose()?;
    }
    let report = verify_polygon(&polygon, recorded.as_ref(), check_set(&args.checks), triple, tol)?;
    out.json(&report)?;
    Ok(if report.overall { EXIT_OK } else { EXIT_CHECK_FAILED })
}
