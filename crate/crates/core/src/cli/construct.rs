use clap::Args;

use super::{CliError, Output, EXIT_OK};
use crate::equidistant::{associated_parabola, make_equidistant, EquidistantConfig};
use crate::geom::{parse_line, parse_point, parse_point_list};
use crate::scene::SceneDocument;
use crate::simson::construct_simson_polygon;
use crate::svg;

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ConstructArgs {
    /// Equally spaced feet on the x-axis with S = (0, s)
    #[arg(long)]
    pub equidistant: bool,
    /// Signed distance of S above the x-axis
    #[arg(long)]
    pub s: Option<f64>,
    /// Spacing of the feet
    #[arg(long)]
    pub delta: Option<f64>,
    /// Number of feet (and vertices)
    #[arg(long)]
    pub n: Option<usize>,
    /// Position of the first foot
    #[arg(long, default_value_t = 0.0)]
    pub x0: f64,
    /// Feet as `x,y;x,y;...`
    #[arg(long, allow_hyphen_values = true, conflicts_with = "equidistant")]
    pub feet: Option<String>,
    /// Simson point as `x,y`
    #[arg(long, allow_hyphen_values = true)]
    pub simson_point: Option<String>,
    /// Equation such as `y=0` or coefficients `a,b,c`
    #[arg(long, allow_hyphen_values = true)]
    pub simson_line: Option<String>,
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("{flag} is required")))
}

pub(super) fn run(args: &ConstructArgs, out: &Output) -> Result<i32, CliError> {
    let tol = out.tolerance();
    let mut doc = SceneDocument::default();
    if args.equidistant {
        let cfg = EquidistantConfig::new(
            required(args.s, "--s")?,
            args.x0,
            required(args.delta, "--delta")?,
            required(args.n, "--n")?,
        )?;
        let eq = make_equidistant(&cfg)?;
        doc.add_simson_polygon(&eq.simson);
        let xs = eq.parabola_vertices().iter().map(|v| v.x);
        let range = [xs.clone().fold(f64::INFINITY, f64::min), xs.fold(f64::NEG_INFINITY, f64::max)];
        doc.add_parabola("C", &associated_parabola(&cfg), range);
    } else {
        let (Some(feet), Some(sp), Some(sl)) = (&args.feet, &args.simson_point, &args.simson_line) else {
            return Err(CliError::usage(
                "either --equidistant or all of --feet, --simson-point and --simson-line are required",
            ));
        };
        let feet = parse_point_list(feet)?;
        let s = parse_point(sp)?;
        let l = parse_line(sl)?;
        doc.add_simson_polygon(&construct_simson_polygon(s, &l, &feet, tol)?);
    }
    out.svg(|| svg::render(&doc))?;
    out.json(&doc)?;
    Ok(EXIT_OK)
}
