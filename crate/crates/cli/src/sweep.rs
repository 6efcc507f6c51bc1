use crate::args::{ScanArgs, TMode};
use crate::error::CliError;

/// A validated (c, t) grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n: u32,
    pub c_range: (f64, f64, usize),
    pub t_mode: TMode,
    pub t_range: (f64, f64, usize),
}

fn linspace((lo, hi, steps): (f64, f64, usize)) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (steps - 1) as f64;
    (0..steps).map(move |i| {
        if i + 1 == steps {
            hi
        } else {
            lo + step * i as f64
        }
    })
}

fn check_range(name: &str, (lo, hi, steps): (f64, f64, usize)) -> Result<(), CliError> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(CliError::Usage(format!(
            "{name} range needs finite min < max, got [{lo}, {hi}]"
        )));
    }
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "{name} range needs at least 2 steps, got {steps}"
        )));
    }
    Ok(())
}

impl SweepSpec {
    pub fn from_args(a: &ScanArgs) -> Result<Self, CliError> {
        let spec = SweepSpec {
            n: a.n,
            c_range: (a.c_min, a.c_max, a.c_steps),
            t_mode: a.t_mode,
            t_range: (a.t_min, a.t_max, a.t_steps),
        };
        check_range("c", spec.c_range)?;
        check_range("t", spec.t_range)?;
        if spec.c_range.0 <= 0.0 {
            return Err(CliError::Usage(format!(
                "c must be positive, got c_min = {}",
                spec.c_range.0
            )));
        }
        if spec.t_range.0 < 0.0 {
            return Err(CliError::Usage(format!(
                "t must be nonnegative, got t_min = {}",
                spec.t_range.0
            )));
        }
        if spec.t_mode == TMode::Fraction && spec.t_range.1 > 1.0 {
            return Err(CliError::Usage(format!(
                "fraction t range must lie in [0, 1], got t_max = {}",
                spec.t_range.1
            )));
        }
        Ok(spec)
    }

    /// Grid points in c-major order. Absolute-mode points with `t > c` are
    /// dropped.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.c_range.2 * self.t_range.2);
        for c in linspace(self.c_range) {
            for t in linspace(self.t_range) {
                match self.t_mode {
                    TMode::Absolute if t > c => {}
                    TMode::Absolute => out.push((c, t)),
                    TMode::Fraction => out.push((c, (t * c).min(c))),
                }
            }
        }
        out
    }
}
