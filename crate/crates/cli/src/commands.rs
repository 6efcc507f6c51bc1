use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use systole_core::verify::{run_battery, Comparison};
use systole_core::{
    genus_table, make_params, optimal_surface_with, systole_report, FamilyId, Method, Optimum,
    SystoleReport,
};

use crate::args::{
    EvalArgs, MaximizeArgs, MethodArg, ReportFormat, ScanArgs, TableArgs, TableFormat, VerifyArgs,
};
use crate::error::CliError;
use crate::format::{csv_line, markdown_table, num};
use crate::sweep::SweepSpec;

pub const TABLE_HEADER: [&str; 6] = ["genus", "n", "K", "systole", "c_star", "t_star"];
pub const SCAN_HEADER: [&str; 10] = [
    "n",
    "c",
    "t",
    "len_CD",
    "len_DE",
    "len_CE",
    "len_CE_prime",
    "len_C",
    "systole",
    "argmin",
];
const MAX_GENUS: u32 = 1000;

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize infallibly")
}

pub fn eval(a: &EvalArgs) -> Result<String, CliError> {
    let p = make_params(a.order.n(), a.c, a.t)?;
    let r = systole_report(&p)?;
    Ok(match a.format {
        ReportFormat::Json => json(&r),
        ReportFormat::Text => eval_text(&r),
    })
}

fn eval_text(r: &SystoleReport) -> String {
    let p = &r.params;
    let mut out = format!(
        "n = {}  genus = {}\nc = {}  t = {}  s = {}\n\n",
        p.n(),
        p.genus(),
        num(p.c().get()),
        num(p.t().get()),
        num(p.s().get())
    );
    out.push_str(&format!(
        "{:<10}{:>14}{:>8}{:>14}\n",
        "family", "length", "lift", "lifted"
    ));
    for f in FamilyId::ALL {
        out.push_str(&format!(
            "{:<10}{:>14}{:>8}{:>14}\n",
            f.tag(),
            num(r.candidates.get(f).get()),
            r.lift_products.get(f),
            num(r.lifted.get(f).get())
        ));
    }
    out.push_str(&format!(
        "\nsystole = {}\nargmin = {}\n",
        num(r.systole.get()),
        r.argmin_tag()
    ));
    out
}

pub fn maximize(a: &MaximizeArgs) -> Result<String, CliError> {
    let method = match a.method {
        MethodArg::Closed => Method::ClosedForm,
        MethodArg::Numeric => Method::NumericRoot,
        MethodArg::Brute => Method::BruteForce,
    };
    let o = optimal_surface_with(a.order.n(), method)?;
    Ok(match a.format {
        ReportFormat::Json => json(&o),
        ReportFormat::Text => optimum_text(&o),
    })
}

fn optimum_text(o: &Optimum) -> String {
    let method = match o.method {
        Method::ClosedForm => "closed",
        Method::NumericRoot => "numeric",
        Method::BruteForce => "brute",
    };
    format!(
        "n = {}\ngenus = {}\nK = {}\nc_star = {}\nt_star = {}\nsystole = {}\nmethod = {method}\n",
        o.n,
        o.n - 1,
        num(o.k),
        num(o.c_star.get()),
        num(o.t_star.get()),
        num(o.systole.get())
    )
}

pub fn table(a: &TableArgs) -> Result<String, CliError> {
    if a.g_max > MAX_GENUS {
        return Err(CliError::Usage(format!(
            "g_max is capped at {MAX_GENUS}, got {}",
            a.g_max
        )));
    }
    let rows: Vec<Vec<String>> = genus_table(a.g_min, a.g_max)?
        .iter()
        .map(|r| {
            vec![
                r.genus.to_string(),
                r.n.to_string(),
                num(r.k),
                num(r.systole),
                num(r.c_star),
                num(r.t_star),
            ]
        })
        .collect();
    Ok(match a.format {
        TableFormat::Csv => {
            let mut out = csv_line(&TABLE_HEADER.map(String::from)) + "\n";
            for row in &rows {
                out.push_str(&csv_line(row));
                out.push('\n');
            }
            out
        }
        TableFormat::Markdown => markdown_table(&TABLE_HEADER, &rows),
    })
}

/// Writes the sweep to `out`, or returns it when no path is given.
pub fn scan(a: &ScanArgs) -> Result<Option<String>, CliError> {
    let spec = SweepSpec::from_args(a)?;
    // reject a bad order before spawning work
    make_params(spec.n, spec.c_range.0, 0.0)?;
    let rows = spec
        .points()
        .into_par_iter()
        .map(|(c, t)| {
            let r = systole_report(&make_params(spec.n, c, t)?)?;
            let mut fields = vec![spec.n.to_string(), num(c), num(t)];
            fields.extend(
                FamilyId::ALL
                    .iter()
                    .map(|&f| num(r.candidates.get(f).get())),
            );
            fields.push(num(r.systole.get()));
            fields.push(r.argmin_tag());
            Ok(csv_line(&fields))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut body = csv_line(&SCAN_HEADER.map(String::from)) + "\n";
    for row in rows {
        body.push_str(&row);
        body.push('\n');
    }
    match &a.out {
        None => Ok(Some(body)),
        Some(path) => {
            write_file(path, &body)?;
            Ok(None)
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    w.write_all(body.as_bytes()).map_err(io)?;
    w.flush().map_err(io)
}

/// The rendered battery and the number of failing checks.
pub fn verify(a: &VerifyArgs) -> Result<(String, usize), CliError> {
    if a.n_max < 3 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 3, got {}",
            a.n_max
        )));
    }
    let report = run_battery(a.n_max)?;
    let mut out = String::from("tolerances:\n");
    for (name, value) in &report.tolerances {
        out.push_str(&format!("  {name:<22} {value:e}\n"));
    }
    out.push_str(&format!("\nchecks (n = 3..={}):\n", report.n_max));
    for c in &report.checks {
        let status = match (c.comparison, c.passed) {
            (Comparison::Info, _) => "INFO",
            (_, true) => "PASS",
            (_, false) => "FAIL",
        };
        let bound = match c.comparison {
            Comparison::Info => String::new(),
            Comparison::Positive => " (must be > 0)".to_string(),
            Comparison::AtMost => format!(" (tolerance {:e})", c.tolerance),
        };
        out.push_str(&format!(
            "  {status} {}: measured {:e}{bound}; {}\n",
            c.name, c.measured, c.detail
        ));
    }
    let failed = report.failures().count();
    if failed == 0 {
        out.push_str("\nall checks passed\n");
    } else {
        out.push_str(&format!("\n{failed} check(s) failed:\n"));
        for c in report.failures() {
            let bound = match c.comparison {
                Comparison::Positive => "> 0".to_string(),
                _ => format!("≤ {:e}", c.tolerance),
            };
            out.push_str(&format!(
                "  {}: measured {:e}, required {bound}\n",
                c.name, c.measured
            ));
        }
    }
    Ok((out, failed))
}
