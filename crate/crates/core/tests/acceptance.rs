//! Acceptance gate. Runs each numbered criterion, prints one PASS/FAIL line
//! per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use systole_core::{
    analytic_partials, annulus_relations, brute_force_max, candidate_lengths, cubic_residual,
    dual_params, genus_table, make_params, optimal_surface, shape_param, sigma12_boundary,
    solve_k_closed_form, solve_k_numeric, systole_report, SearchConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn log_grid(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let ratio = hi / lo;
    (0..count).map(move |i| lo * ratio.powf(i as f64 / (count - 1) as f64))
}

fn table_reproduction() -> Outcome {
    let published = [2.4142, 3.1787, 3.5989, 3.8473, 4.0044];
    let start = Instant::now();
    let rows = genus_table(2, 6).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let worst = rows
        .iter()
        .zip(published)
        .map(|(r, k)| (r.k - k).abs())
        .fold(0.0, f64::max);
    check(
        rows.len() == 5 && worst < 5e-5 && elapsed < Duration::from_secs(1),
        format!("max |K − table| = {worst:.2e} (< 5e-5), {elapsed:?} (< 1 s)"),
    )
}

fn bolza_exactness() -> Outcome {
    let l = shape_param(3).map_err(|e| e.to_string())?;
    let k = solve_k_closed_form(l).map_err(|e| e.to_string())?.selected;
    let err = (k - (1.0 + 2f64.sqrt())).abs();
    check(
        err < 1e-9,
        format!("|K(3) − (1 + √2)| = {err:.2e} (< 1e-9)"),
    )
}

fn root_certification() -> Outcome {
    let (mut residual, mut agreement) = (0.0f64, 0.0f64);
    for n in 3..=200 {
        let l = shape_param(n).map_err(|e| e.to_string())?;
        let closed = solve_k_closed_form(l).map_err(|e| e.to_string())?.selected;
        let numeric = solve_k_numeric(l).map_err(|e| e.to_string())?;
        residual = residual.max(cubic_residual(closed, l).abs());
        agreement = agreement.max((closed - numeric).abs());
    }
    check(
        residual < 1e-9 && agreement < 1e-10,
        format!("n = 3..=200: max residual {residual:.2e} (< 1e-9), closed vs bisection {agreement:.2e} (< 1e-10)"),
    )
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut notes = Vec::new();
    for n in [3, 4, 5, 7, 12] {
        let closed = optimal_surface(n).map_err(|e| e.to_string())?;
        let brute = brute_force_max(n, &SearchConfig::default()).map_err(|e| e.to_string())?;
        let err = (brute.c_star.get() - closed.c_star.get())
            .abs()
            .max((brute.t_star.get() - closed.t_star.get()).abs())
            .max((brute.systole.get() - closed.systole.get()).abs());
        worst = worst.max(err);
        notes.push(format!("n={n}:{err:.1e}"));
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-5 && elapsed < Duration::from_secs(30),
        format!(
            "max (c, t, systole) gap {worst:.2e} (< 1e-5) [{}], {elapsed:?} (< 30 s)",
            notes.join(" ")
        ),
    )
}

fn equalization() -> Outcome {
    let (mut eq, mut margin) = (0.0f64, f64::INFINITY);
    for n in 3..=50 {
        let o = optimal_surface(n).map_err(|e| e.to_string())?;
        let p = make_params(n, o.c_star.get(), o.t_star.get()).map_err(|e| e.to_string())?;
        let r = systole_report(&p).map_err(|e| e.to_string())?;
        let c = p.c().get();
        eq = eq
            .max((r.candidates.c.get() - c).abs())
            .max((2.0 * r.candidates.cd.get() - c).abs());
        margin = margin
            .min(r.lifted.de.get() - r.systole.get())
            .min(r.lifted.ce_prime.get() - r.systole.get());
    }
    check(
        eq < 1e-9 && margin > 0.0,
        format!("n = 3..=50: max equalization gap {eq:.2e} (< 1e-9), min DE/CE′ margin {margin:.4} (> 0)"),
    )
}

fn derivative_checks() -> Outcome {
    let h = 1e-6;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0006);
    let cosh_lengths = |n: u32, c: f64, t: f64| -> Result<[f64; 3], String> {
        let p = make_params(n, c, t).map_err(|e| e.to_string())?;
        let l = candidate_lengths(&p).map_err(|e| e.to_string())?;
        Ok([l.cd.cosh(), l.de.cosh(), l.c.cosh()])
    };
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = rng.random_range(3..=50);
        let c = rng.random_range(0.2..=4.0);
        let t = c * rng.random_range(0.05..=0.95);
        let p = make_params(n, c, t).map_err(|e| e.to_string())?;
        let a = analytic_partials(&p);
        let (up, down) = (cosh_lengths(n, c, t + h)?, cosh_lengths(n, c, t - h)?);
        for (i, analytic) in [a.cd_dt, a.de_dt, a.c_dt].into_iter().enumerate() {
            let fd = (up[i] - down[i]) / (2.0 * h);
            worst = worst.max((analytic - fd).abs() / analytic.abs());
        }
    }
    check(
        worst < 1e-6,
        format!("1000 seeded interior points, CD/DE/C: max relative error {worst:.2e} (< 1e-6)"),
    )
}

fn endpoint_orderings() -> Outcome {
    let (mut at_zero, mut at_c, mut points) = (f64::INFINITY, f64::INFINITY, 0);
    for n in 3..=20 {
        for c in log_grid(0.01, 20.0, 60) {
            let l0 = make_params(n, c, 0.0)
                .and_then(|p| candidate_lengths(&p))
                .map_err(|e| e.to_string())?;
            let l1 = make_params(n, c, c)
                .and_then(|p| candidate_lengths(&p))
                .map_err(|e| e.to_string())?;
            at_zero = at_zero.min(l0.c.get() - 2.0 * l0.cd.get());
            at_c = at_c.min(2.0 * l1.cd.get() - l1.c.get());
            points += 1;
        }
    }
    check(
        at_zero > 0.0 && at_c > 0.0,
        format!("{points} (n, c) points: min len_C − 2·len_CD at t=0 {at_zero:.2e}, min 2·len_CD − len_C at t=c {at_c:.2e} (both > 0)"),
    )
}

fn dual_involution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
    let (mut involution, mut systole, mut defined) = (0.0f64, 0.0f64, 0);
    for _ in 0..2000 {
        let n = rng.random_range(3..=30);
        let c = rng.random_range(0.05..=5.0);
        let t = c * rng.random_range(0.0..=1.0);
        let p = make_params(n, c, t).map_err(|e| e.to_string())?;
        let Ok(q) = dual_params(&p) else { continue };
        let Ok(back) = dual_params(&q) else { continue };
        defined += 1;
        involution = involution
            .max((back.c().get() - c).abs())
            .max((back.t().get() - t).abs());
        let sp = systole_report(&p).map_err(|e| e.to_string())?.systole.get();
        let sq = systole_report(&q).map_err(|e| e.to_string())?.systole.get();
        systole = systole.max((sp - sq).abs());
    }
    let mut fixed = 0.0f64;
    for n in 3..=50 {
        let o = optimal_surface(n).map_err(|e| e.to_string())?;
        let p = make_params(n, o.c_star.get(), o.t_star.get()).map_err(|e| e.to_string())?;
        let q = dual_params(&p).map_err(|e| e.to_string())?;
        fixed = fixed
            .max((q.c().get() - p.c().get()).abs())
            .max((q.t().get() - p.t().get()).abs());
    }
    check(
        defined > 100 && involution < 1e-8 && systole < 1e-10 && fixed < 1e-8,
        format!("{defined} defined points: involution {involution:.2e} (< 1e-8), systole {systole:.2e} (< 1e-10); optimum fixed-point gap {fixed:.2e} (< 1e-8)"),
    )
}

fn annulus_closure() -> Outcome {
    let mut worst = 0.0f64;
    for n in 3..=20 {
        let o = optimal_surface(n).map_err(|e| e.to_string())?;
        let p = make_params(n, o.c_star.get(), o.t_star.get()).map_err(|e| e.to_string())?;
        let fit = sigma12_boundary(&p)
            .and_then(|l| annulus_relations(l, o.c_star))
            .map_err(|e| e.to_string())?;
        worst = worst.max(fit.residual.abs());
    }
    check(
        worst < 1e-6,
        format!("n = 3..=20: max |cosh k − cosh h·cosh(k/2)| {worst:.2e} (< 1e-6)"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("genus table reproduction", table_reproduction),
        ("Bolza exactness", bolza_exactness),
        ("root certification", root_certification),
        ("brute-force oracle agreement", oracle_agreement),
        ("equalization at the optimum", equalization),
        ("derivative checks", derivative_checks),
        ("endpoint orderings", endpoint_orderings),
        ("dual involution", dual_involution),
        ("annulus closure", annulus_closure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
