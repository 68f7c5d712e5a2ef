use clap::Args;
use serde::Serialize;

use super::{CliError, Output, EXIT_CHECK_FAILED, EXIT_OK};
use crate::equidistant::{convergence_table, observed_orders, ConvergenceRow};

/// Smallest acceptable observed order between consecutive halvings.
pub const MIN_ORDER: f64 = 1.9;

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct LimitArgs {
    /// Signed distance of S above L
    #[arg(long)]
    pub s: f64,
    /// Half-width of the window around the parabola's apex
    #[arg(long, default_value_t = 4.0)]
    pub window: f64,
    /// Number of halvings of the vertex spacing, starting from 1
    #[arg(long, default_value_t = 6)]
    pub m_max: u32,
}

#[derive(Debug, Serialize)]
struct LimitOutput {
    s: f64,
    window: f64,
    rows: Vec<ConvergenceRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_order: Option<f64>,
    order_check: bool,
}

pub(super) fn run(args: &LimitArgs, out: &Output) -> Result<i32, CliError> {
    if !(args.window > 0.0 && args.window.is_finite()) {
        return Err(CliError::usage("--window must be positive"));
    }
    if args.m_max > 20 {
        return Err(CliError::usage("--m-max is limited to 20"));
    }
    let rows = convergence_table(args.s, args.window, args.m_max)?;
    let orders = observed_orders(&rows);
    let min_order = orders.iter().copied().reduce(f64::min);
    let order_check = min_order.is_none_or(|o| o >= MIN_ORDER);
    out.json(&LimitOutput {
        s: args.s,
        window: args.window,
        rows,
        min_order,
        order_check,
    })?;
    Ok(if order_check { EXIT_OK } else { EXIT_CHECK_FAILED })
}
