use serde::Serialize;

use super::optimum::optimal_surface;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenusRow {
    pub genus: u32,
    pub n: u32,
    #[serde(rename = "K")]
    pub k: f64,
    pub systole: f64,
    pub c_star: f64,
    pub t_star: f64,
}

/// Maximal systole for each genus in `g_min..=g_max` (symmetry order `g + 1`).
pub fn genus_table(g_min: u32, g_max: u32) -> Result<Vec<GenusRow>> {
    if g_min < 2 || g_min > g_max {
        return Err(Error::InvalidParams(format!(
            "need 2 ≤ g_min ≤ g_max, got {g_min}..{g_max}"
        )));
    }
    (g_min..=g_max)
        .map(|genus| {
            let o = optimal_surface(genus + 1)?;
            Ok(GenusRow {
                genus,
                n: genus + 1,
                k: o.k,
                systole: o.systole.get(),
                c_star: o.c_star.get(),
                t_star: o.t_star.get(),
            })
        })
        .collect()
}
