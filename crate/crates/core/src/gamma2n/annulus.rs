use serde::Serialize;

use super::params::SurfaceParams;
use crate::error::{Error, Result};
use crate::hyptrig::{acosh_guarded, hexagon_opposite, HypLength};
use crate::tolerance::ACOSH_CLAMP;

/// Boundary length of the signature-(1,2) subsurface cut out by the cuffs.
///
/// Four congruent right-angled hexagons tile that subsurface; each has sides
/// `c`, `s`, `c` in a row, and the side opposite `s` is the boundary arc, so
/// `cosh l = sinh²c·cosh s − cosh²c`.
pub fn sigma12_boundary(p: &SurfaceParams) -> Result<HypLength> {
    hexagon_opposite(p.c(), p.c(), p.s())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnnulusFit {
    /// Distance from a branch point to the core geodesic of the annulus.
    pub h: HypLength,
    /// `cosh k − cosh h·cosh(k/2)`; zero exactly when the three branch points
    /// form an equilateral triangle of side `k`.
    pub residual: f64,
}

/// Solve the annulus hexagon for `h` given boundary length `l` and side `k`,
/// then measure how far the equilateral triangle relation is from closing.
pub fn annulus_relations(l: HypLength, k: HypLength) -> Result<AnnulusFit> {
    let ck = k.cosh();
    let denom = ck - 1.0;
    if denom <= 0.0 {
        return Err(Error::domain(
            "annulus_relations",
            format!("k = {} gives cosh k − 1 = 0", k.get()),
        ));
    }
    let q = (l.cosh() + ck) / denom;
    if !q.is_finite() || q < 1.0 {
        return Err(Error::domain(
            "annulus_relations",
            format!("cosh²h = {q} is below 1"),
        ));
    }
    let h = acosh_guarded(q.sqrt(), ACOSH_CLAMP)?;
    let residual = ck - h.cosh() * k.half().cosh();
    Ok(AnnulusFit { h, residual })
}
