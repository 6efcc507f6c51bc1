use rayon::prelude::*;
use serde::Serialize;

use super::optimum::{Method, Optimum};
use crate::error::{Error, Result};
use crate::gamma2n::{make_params, systole_report};
use crate::hyptrig::HypLength;

/// Grid and zoom schedule for [`brute_force_max`].
///
/// The first pass covers `c ∈ [c_min, c_max]`, `t ∈ [0, c_max]` (points with
/// `t > c` are skipped). Each refinement round recentres on the incumbent
/// with a window `zoom_cells` cells of the previous grid wide, keeping the
/// same number of grid points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchConfig {
    pub c_min: f64,
    pub c_max: f64,
    pub c_steps: usize,
    pub t_steps: usize,
    pub rounds: usize,
    pub zoom_cells: f64,
    /// Only admit points where the cuff is the shortest member of its family,
    /// i.e. `len_CE ≤ len_CE′`. Outside that region the same surface has a
    /// second chart in which `CE′` plays the cuff, and the five-curve envelope
    /// over-reports its systole.
    pub canonical_chart: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            c_min: 0.2,
            c_max: 4.0,
            c_steps: 200,
            t_steps: 200,
            rounds: 3,
            zoom_cells: 10.0,
            canonical_chart: true,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if !(self.c_min.is_finite() && self.c_max.is_finite()) {
            return bad("search bounds must be finite".into());
        }
        if self.c_min <= 0.0 || self.c_max <= self.c_min {
            return bad(format!(
                "need 0 < c_min < c_max, got [{}, {}]",
                self.c_min, self.c_max
            ));
        }
        if self.c_steps < 2 || self.t_steps < 2 {
            return bad(format!(
                "grid needs at least 2 points per axis, got {}×{}",
                self.c_steps, self.t_steps
            ));
        }
        if !(self.zoom_cells.is_finite() && self.zoom_cells > 0.0) {
            return bad(format!("zoom_cells must be > 0, got {}", self.zoom_cells));
        }
        Ok(())
    }
}

/// Systole at `(c, t)`, or `None` outside the searchable region.
fn objective(n: u32, c: f64, t: f64, canonical_chart: bool) -> Option<f64> {
    let p = make_params(n, c, t).ok()?;
    let r = systole_report(&p).ok()?;
    if canonical_chart && r.lifted.ce_prime < r.lifted.ce {
        return None;
    }
    Some(r.systole.get())
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    value: f64,
    i: usize,
    j: usize,
    c: f64,
    t: f64,
}

// Larger value wins; ties go to the lower grid index so the result does not
// depend on how rayon splits the work.
fn better(a: Option<Sample>, b: Option<Sample>) -> Option<Sample> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if b.value > a.value || (b.value == a.value && (b.i, b.j) < (a.i, a.j)) {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

struct Window {
    c_lo: f64,
    c_hi: f64,
    t_lo: f64,
    t_hi: f64,
}

fn scan_window(n: u32, w: &Window, cfg: &SearchConfig) -> Option<Sample> {
    let dc = (w.c_hi - w.c_lo) / (cfg.c_steps - 1) as f64;
    let dt = (w.t_hi - w.t_lo) / (cfg.t_steps - 1) as f64;
    (0..cfg.c_steps)
        .into_par_iter()
        .map(|i| {
            let c = w.c_lo + dc * i as f64;
            (0..cfg.t_steps)
                .filter_map(|j| {
                    let t = w.t_lo + dt * j as f64;
                    objective(n, c, t, cfg.canonical_chart).map(|value| Sample {
                        value,
                        i,
                        j,
                        c,
                        t,
                    })
                })
                .fold(None, |acc, s| better(acc, Some(s)))
        })
        .reduce(|| None, better)
}

/// Maximize the five-curve systole envelope over the (c, t) chart by grid
/// search with zoom refinement.
pub fn brute_force_max(n: u32, cfg: &SearchConfig) -> Result<Optimum> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 3, got {n}"
        )));
    }
    cfg.validate()?;

    let mut w = Window {
        c_lo: cfg.c_min,
        c_hi: cfg.c_max,
        t_lo: 0.0,
        t_hi: cfg.c_max,
    };
    let mut best = scan_window(n, &w, cfg)
        .ok_or_else(|| Error::InvalidParams("search window contains no admissible point".into()))?;

    for _ in 0..cfg.rounds {
        let half = 0.5 * cfg.zoom_cells;
        let dc = (w.c_hi - w.c_lo) / (cfg.c_steps - 1) as f64;
        let dt = (w.t_hi - w.t_lo) / (cfg.t_steps - 1) as f64;
        w = Window {
            c_lo: (best.c - half * dc).max(cfg.c_min),
            c_hi: (best.c + half * dc).min(cfg.c_max),
            t_lo: (best.t - half * dt).max(0.0),
            t_hi: (best.t + half * dt).min(cfg.c_max),
        };
        // the new grid need not contain the incumbent itself
        if let Some(s) = scan_window(n, &w, cfg) {
            if s.value >= best.value {
                best = s;
            }
        }
    }

    let systole = best.value;
    Ok(Optimum {
        n,
        k: (0.5 * systole).cosh(),
        c_star: HypLength::new(best.c)?,
        t_star: HypLength::new(best.t)?,
        systole: HypLength::new(systole)?,
        method: Method::BruteForce,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_configs_are_rejected() {
        let base = SearchConfig::default();
        for cfg in [
            SearchConfig { c_steps: 0, ..base },
            SearchConfig { t_steps: 1, ..base },
            SearchConfig { c_min: 0.0, ..base },
            SearchConfig { c_max: 0.1, ..base },
            SearchConfig {
                zoom_cells: 0.0,
                ..base
            },
            SearchConfig {
                c_max: f64::NAN,
                ..base
            },
        ] {
            assert!(matches!(
                brute_force_max(3, &cfg),
                Err(Error::InvalidParams(_))
            ));
        }
        assert!(brute_force_max(2, &base).is_err());
    }

    #[test]
    fn coarse_search_finds_bolza_neighbourhood() {
        let cfg = SearchConfig {
            c_steps: 60,
            t_steps: 60,
            rounds: 2,
            ..SearchConfig::default()
        };
        let o = brute_force_max(3, &cfg).unwrap();
        assert!(o.systole.get() <= 3.05715);
        assert!((o.systole.get() - 3.0571).abs() < 5e-3);
        assert!((o.c_star.get() - 1.5286).abs() < 1e-2);
        assert_eq!(o.method, Method::BruteForce);
    }

    #[test]
    fn ties_prefer_lower_index() {
        let s = |value, i, j| {
            Some(Sample {
                value,
                i,
                j,
                c: 0.0,
                t: 0.0,
            })
        };
        assert_eq!(better(s(1.0, 3, 0), s(1.0, 2, 5)).unwrap().i, 2);
        assert_eq!(better(s(1.0, 2, 5), s(1.0, 3, 0)).unwrap().i, 2);
        assert_eq!(better(s(0.5, 0, 0), s(1.0, 9, 9)).unwrap().i, 9);
    }
}
