use serde::Serialize;
use std::f64::consts::PI;

use super::brute::{brute_force_max, SearchConfig};
use super::cubic::{shape_param, solve_k_closed_form, solve_k_numeric};
use crate::error::{Error, Result};
use crate::gamma2n::make_params;
use crate::hyptrig::{acosh_guarded, HypLength};
use crate::tolerance::ACOSH_CLAMP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    NumericRoot,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Optimum {
    pub n: u32,
    /// `cosh(systole / 2)`
    pub k: f64,
    pub c_star: HypLength,
    pub t_star: HypLength,
    pub systole: HypLength,
    pub method: Method,
}

/// The maximal-systole surface from the closed-form root.
pub fn optimal_surface(n: u32) -> Result<Optimum> {
    optimal_surface_with(n, Method::ClosedForm)
}

pub fn optimal_surface_with(n: u32, method: Method) -> Result<Optimum> {
    let l = shape_param(n)?;
    let k = match method {
        Method::ClosedForm => solve_k_closed_form(l)?.selected,
        Method::NumericRoot => solve_k_numeric(l)?,
        Method::BruteForce => return brute_force_max(n, &SearchConfig::default()),
    };
    from_root(n, k, method)
}

// The cuff lifts to 2c, so c = arccosh K. The twist then makes
// cosh(len_CD) = cosh(t/2)·cosh(s/2) equal cosh(c/2).
fn from_root(n: u32, k: f64, method: Method) -> Result<Optimum> {
    let c_star = acosh_guarded(k, ACOSH_CLAMP)?;
    let p = make_params(n, c_star.get(), 0.0)?;
    let ratio = c_star.half().cosh() / p.s().half().cosh();
    let t_star = HypLength::new(2.0 * acosh_guarded(ratio, ACOSH_CLAMP)?.get())?;
    if t_star > c_star {
        return Err(Error::NoValidRoot(format!(
            "K = {k} gives twist {} beyond c = {}",
            t_star.get(),
            c_star.get()
        )));
    }
    Ok(Optimum {
        n,
        k,
        c_star,
        t_star,
        systole: HypLength::new(2.0 * c_star.get())?,
        method,
    })
}

/// The twist formula `2·arccosh((K+1)/(2cos(π/n)))` as printed alongside the
/// theorem. It overshoots `c` for every n; kept for the erratum report.
pub fn printed_twist(n: u32, k: f64) -> f64 {
    2.0 * ((k + 1.0) / (2.0 * (PI / f64::from(n)).cos())).acosh()
}
