use clap::Args;
use serde::Serialize;

use super::{CliError, Output, EXIT_CHECK_FAILED, EXIT_OK};
use crate::approx::{
    optimal_knots, quadrature_l1, quadrature_l2, total_error_objective, ApproxProblem, ApproxResult,
};
use crate::equidistant::Parabola;
use crate::geom::Point;
use crate::scene::{Entity, SceneDocument, Shape};
use crate::svg;

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ApproxArgs {
    /// Parabola parameter in f(x) = (x^2 - delta^2) / (4s)
    #[arg(long)]
    pub s: f64,
    /// Left end of the interval
    #[arg(long)]
    pub a: f64,
    /// Right end of the interval
    #[arg(long)]
    pub b: f64,
    /// Number of segments
    #[arg(long)]
    pub n: usize,
    /// Offset in f(x); 0 gives x^2 / (4s)
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    /// Also integrate the error numerically
    #[arg(long)]
    pub compare_quadrature: bool,
    /// Move interior knot `i` by `eps` and report the change of the objective
    #[arg(long, allow_hyphen_values = true)]
    pub perturb_knot: Option<String>,
}

#[derive(Debug, Serialize)]
struct ApproxOutput {
    problem: ApproxProblem,
    #[serde(flatten)]
    result: ApproxResult,
    /// Sum of cubed knot gaps.
    objective: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature: Option<Quadrature>,
    #[serde(skip_serializing_if = "Option::is_none")]
    perturbation: Option<Perturbation>,
}

#[derive(Debug, Serialize)]
struct Quadrature {
    l1_error: f64,
    l2_error: f64,
    l1_relative_difference: f64,
    l2_relative_difference: f64,
}

#[derive(Debug, Serialize)]
struct Perturbation {
    index: usize,
    eps: f64,
    objective: f64,
    objective_delta: f64,
}

fn parse_perturbation(s: &str) -> Result<(usize, f64), CliError> {
    let bad = || CliError::usage(format!("--perturb-knot expects i,eps, got {s:?}"));
    let (i, eps) = s.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, eps.trim().parse().map_err(|_| bad())?))
}

fn relative(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

pub(super) fn run(args: &ApproxArgs, out: &Output) -> Result<i32, CliError> {
    if !(args.a < args.b) {
        return Err(CliError::usage(format!("need --a < --b, got a = {}, b = {}", args.a, args.b)));
    }
    if args.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let problem = ApproxProblem::new(args.s, args.delta, args.a, args.b, args.n)?;
    let result = optimal_knots(&problem)?;
    let interior = &result.knots[1..args.n];
    let objective = total_error_objective(&problem, interior)?;

    let quadrature = if args.compare_quadrature {
        let l1 = quadrature_l1(&problem, &result.knots)?;
        let l2 = quadrature_l2(&problem, &result.knots)?;
        Some(Quadrature {
            l1_error: l1,
            l2_error: l2,
            l1_relative_difference: relative(l1, result.l1_error),
            l2_relative_difference: relative(l2, result.l2_error),
        })
    } else {
        None
    };

    let perturbation = match &args.perturb_knot {
        Some(spec) => {
            let (index, eps) = parse_perturbation(spec)?;
            if index == 0 || index >= args.n {
                return Err(CliError::usage(format!(
                    "knot {index} is not interior; choose 1..={}",
                    args.n - 1
                )));
            }
            let mut moved = interior.to_vec();
            moved[index - 1] += eps;
            let value = total_error_objective(&problem, &moved)?;
            Some(Perturbation {
                index,
                eps,
                objective: value,
                objective_delta: value - objective,
            })
        }
        None => None,
    };
    let improved = perturbation.as_ref().is_some_and(|p| !(p.objective_delta > 0.0));

    out.svg(|| svg::render(&figure(&problem, &result)))?;
    out.json(&ApproxOutput {
        problem,
        result,
        objective,
        quadrature,
        perturbation,
    })?;
    Ok(if improved { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn figure(p: &ApproxProblem, r: &ApproxResult) -> SceneDocument {
    let mut doc = SceneDocument::default();
    let parabola = Parabola {
        s: p.s,
        c: p.delta * p.delta,
    };
    doc.add_parabola("f", &parabola, [p.a, p.b]);
    doc.push(Entity::new(
        "l",
        Shape::Polygon {
            vertices: r.knot_points.clone(),
            closed: false,
            simson: None,
        },
    ));
    for (i, k) in r.knot_points.iter().enumerate() {
        doc.push(Entity::point(&format!("x_{i}"), Point::new(k.x, k.y)));
    }
    doc
}
