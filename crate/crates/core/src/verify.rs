//! Self-check battery over every module.
//!
//! Each check reports the worst error it measured and the bound it was held
//! to. Informational lines (printed-formula diagnostics) never fail.

use serde::Serialize;
use std::f64::consts::PI;

use crate::error::Result;
use crate::gamma2n::{
    analytic_partials, annulus_relations, candidate_lengths, dual_params, lift_chain, make_params,
    sigma12_boundary, systole_report, FamilyId,
};
use crate::maximizer::{
    cubic_residual, genus_table, optimal_surface, printed_closed_forms, printed_twist, shape_param,
    solve_k_closed_form, solve_k_numeric,
};
use crate::tolerance as tol;

/// How `measured` is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `measured ≤ tolerance`
    AtMost,
    /// `measured > 0`
    Positive,
    /// Reported only, never fails.
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub detail: String,
}

impl Check {
    pub fn informational(&self) -> bool {
        self.comparison == Comparison::Info
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n_max: u32,
    pub tolerances: Vec<(&'static str, f64)>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// `measured ≤ tolerance`
fn bounded(name: &str, measured: f64, tolerance: f64, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed: measured <= tolerance,
        measured,
        tolerance,
        comparison: Comparison::AtMost,
        detail,
    }
}

/// `measured > 0`
fn positive(name: &str, measured: f64, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed: measured > 0.0,
        measured,
        tolerance: 0.0,
        comparison: Comparison::Positive,
        detail,
    }
}

fn info(name: &str, measured: f64, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed: true,
        measured,
        tolerance: f64::NAN,
        comparison: Comparison::Info,
        detail,
    }
}

fn log_grid(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let ratio = hi / lo;
    (0..count).map(move |i| lo * ratio.powf(i as f64 / (count - 1) as f64))
}

const TWIST_FRACTIONS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];
const CUFF_SAMPLES: [f64; 5] = [0.3, 0.8, 1.5, 2.5, 3.5];

fn trirectangle_identity(n_max: u32) -> Result<Check> {
    let mut worst = 0.0f64;
    for n in 3..=n_max {
        for c in log_grid(0.05, 10.0, 40) {
            let p = make_params(n, c, 0.0)?;
            let lhs = p.s().half().sinh() * p.c().half().sinh();
            worst = worst.max((lhs - (PI / f64::from(n)).cos()).abs());
        }
    }
    Ok(bounded(
        "trirectangle identity sinh(s/2)·sinh(c/2) = cos(π/n)",
        worst,
        tol::CONSTRAINT_IDENTITY,
        format!("n = 3..={n_max}, c on a log grid over [0.05, 10]"),
    ))
}

fn lift_products(n_max: u32) -> Check {
    let mut mismatches = 0u32;
    for n in 3..=n_max {
        let de = if n % 2 == 1 { 4 * n } else { 2 * n };
        let expected = [
            (FamilyId::C, 2),
            (FamilyId::Cd, 4),
            (FamilyId::Ce, 4),
            (FamilyId::CePrime, 4),
            (FamilyId::De, de),
        ];
        for (f, want) in expected {
            let chain = lift_chain(f, n);
            if chain.product != u64::from(want)
                || chain.product != u64::from(chain.r1 * chain.r2 * chain.r3)
            {
                mismatches += 1;
            }
        }
    }
    bounded(
        "lift products per family and parity",
        f64::from(mismatches),
        0.0,
        "C 2, CD/CE/CE′ 4, DE 4n (odd) or 2n (even)".into(),
    )
}

fn endpoint_orderings(n_max: u32) -> Result<Vec<Check>> {
    let (mut at_zero, mut at_c) = (f64::INFINITY, f64::INFINITY);
    for n in 3..=n_max {
        for c in log_grid(0.05, 10.0, 30) {
            let l0 = candidate_lengths(&make_params(n, c, 0.0)?)?;
            at_zero = at_zero.min(l0.c.get() - 2.0 * l0.cd.get());
            let l1 = candidate_lengths(&make_params(n, c, c)?)?;
            at_c = at_c.min(2.0 * l1.cd.get() - l1.c.get());
        }
    }
    Ok(vec![
        positive(
            "2·len_CD < len_C at t = 0",
            at_zero,
            "smallest margin len_C − 2·len_CD".into(),
        ),
        positive(
            "2·len_CD > len_C at t = c",
            at_c,
            "smallest margin 2·len_CD − len_C".into(),
        ),
    ])
}

fn partials_vs_differences(n_max: u32) -> Result<Check> {
    let h = tol::FD_STEP;
    let cosh_lengths = |n, c, t| -> Result<[f64; 3]> {
        let l = candidate_lengths(&make_params(n, c, t)?)?;
        Ok([l.cd.cosh(), l.de.cosh(), l.c.cosh()])
    };
    let mut worst = 0.0f64;
    for n in 3..=n_max {
        for c in CUFF_SAMPLES {
            for frac in TWIST_FRACTIONS {
                let t = frac * c;
                let a = analytic_partials(&make_params(n, c, t)?);
                let (up, down) = (cosh_lengths(n, c, t + h)?, cosh_lengths(n, c, t - h)?);
                for (i, analytic) in [a.cd_dt, a.de_dt, a.c_dt].into_iter().enumerate() {
                    let fd = (up[i] - down[i]) / (2.0 * h);
                    worst = worst.max((analytic - fd).abs() / analytic.abs());
                }
            }
        }
    }
    Ok(bounded(
        "t-partials of cosh(len) vs central differences",
        worst,
        tol::PARTIALS_RELATIVE,
        format!("relative error, step {h}, CD/DE/C"),
    ))
}

fn dual_chart(n_max: u32) -> Result<Vec<Check>> {
    let (mut involution, mut systole, mut defined) = (0.0f64, 0.0f64, 0usize);
    for n in 3..=n_max {
        for c in CUFF_SAMPLES {
            for frac in TWIST_FRACTIONS {
                let p = make_params(n, c, frac * c)?;
                let Ok(q) = dual_params(&p) else { continue };
                let Ok(back) = dual_params(&q) else { continue };
                defined += 1;
                involution = involution
                    .max((back.c().get() - p.c().get()).abs())
                    .max((back.t().get() - p.t().get()).abs());
                let (sp, sq) = (systole_report(&p)?, systole_report(&q)?);
                systole = systole.max((sp.systole.get() - sq.systole.get()).abs());
            }
        }
    }
    Ok(vec![
        bounded(
            "dual chart is an involution",
            involution,
            tol::DUAL_INVOLUTION,
            format!("{defined} points where both applications are defined"),
        ),
        bounded(
            "dual chart preserves the systole",
            systole,
            tol::DUAL_SYSTOLE,
            format!("{defined} points"),
        ),
    ])
}

fn roots(n_max: u32) -> Result<Vec<Check>> {
    let (mut agreement, mut residual) = (0.0f64, 0.0f64);
    for n in 3..=n_max {
        let l = shape_param(n)?;
        let closed = solve_k_closed_form(l)?.selected;
        let numeric = solve_k_numeric(l)?;
        agreement = agreement.max((closed - numeric).abs());
        residual = residual.max(cubic_residual(closed, l).abs());
    }
    let bolza = (solve_k_closed_form(shape_param(3)?)?.selected - (1.0 + 2f64.sqrt())).abs();
    Ok(vec![
        bounded(
            "closed-form root vs bisection",
            agreement,
            tol::ROOT_AGREEMENT,
            format!("n = 3..={n_max}"),
        ),
        bounded(
            "cubic residual at the selected root",
            residual,
            tol::ROOT_RESIDUAL,
            format!("n = 3..={n_max}"),
        ),
        bounded(
            "Bolza K(3) = 1 + √2",
            bolza,
            tol::BOLZA,
            "three-real-root branch".into(),
        ),
    ])
}

fn at_optimum(n_max: u32) -> Result<Vec<Check>> {
    let (mut eq, mut margin, mut annulus) = (0.0f64, f64::INFINITY, 0.0f64);
    for n in 3..=n_max {
        let o = optimal_surface(n)?;
        let p = make_params(n, o.c_star.get(), o.t_star.get())?;
        let r = systole_report(&p)?;
        let c = o.c_star.get();
        eq = eq
            .max((r.candidates.c.get() - c).abs())
            .max((2.0 * r.candidates.cd.get() - c).abs());
        margin = margin
            .min(r.lifted.de.get() - r.systole.get())
            .min(r.lifted.ce_prime.get() - r.systole.get());
        let fit = annulus_relations(sigma12_boundary(&p)?, o.c_star)?;
        annulus = annulus.max(fit.residual.abs());
    }
    Ok(vec![
        bounded(
            "equalization len_C = 2·len_CD = c at the optimum",
            eq,
            tol::EQUALIZATION,
            format!("n = 3..={n_max}"),
        ),
        positive(
            "lifted DE and CE′ exceed the systole at the optimum",
            margin,
            "smallest margin".into(),
        ),
        bounded(
            "annulus closure |cosh k − cosh h·cosh(k/2)|",
            annulus,
            tol::ANNULUS_CLOSURE,
            format!("n = 3..={n_max}"),
        ),
    ])
}

fn genus_rows() -> Result<Check> {
    let published = [2.4142, 3.1787, 3.5989, 3.8473, 4.0044];
    let rows = genus_table(2, 6)?;
    let worst = rows
        .iter()
        .zip(published)
        .map(|(r, k)| (r.k - k).abs())
        .fold(0.0, f64::max);
    Ok(bounded(
        "K for genus 2..=6 against the four-decimal table",
        worst,
        tol::GENUS_TABLE,
        "2.4142, 3.1787, 3.5989, 3.8473, 4.0044".into(),
    ))
}

fn diagnostics() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [3u32, 4] {
        let o = optimal_surface(n)?;
        out.push(info(
            &format!("printed twist formula, n = {n}"),
            printed_twist(n, o.k),
            format!(
                "2·arccosh((K+1)/(2cos(π/n))) vs equalized t = {:.6} (c = {:.6})",
                o.t_star.get(),
                o.c_star.get()
            ),
        ));
        let forms = printed_closed_forms(shape_param(n)?);
        out.push(info(
            &format!("closed form with +27 radicand, n = {n}"),
            forms.radicand_plus,
            format!("selected root K = {:.6}", o.k),
        ));
        out.push(info(
            &format!("T-form as printed, n = {n}"),
            forms.theorem_literal,
            format!(
                "with 6·X^(1/3) denominator: {:.6}",
                forms.theorem_cbrt_denominator
            ),
        ));
    }
    Ok(out)
}

/// Run every check for symmetry orders `3..=n_max`.
pub fn run_battery(n_max: u32) -> Result<VerifyReport> {
    let n_max = n_max.max(3);
    let mut checks = vec![trirectangle_identity(n_max)?, lift_products(n_max)];
    checks.extend(endpoint_orderings(n_max)?);
    checks.push(partials_vs_differences(n_max)?);
    checks.extend(dual_chart(n_max)?);
    checks.extend(roots(n_max)?);
    checks.extend(at_optimum(n_max)?);
    checks.push(genus_rows()?);
    checks.extend(diagnostics()?);
    Ok(VerifyReport {
        n_max,
        tolerances: tol::all(),
        checks,
    })
}
