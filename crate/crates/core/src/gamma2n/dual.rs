use super::candidates::candidate_lengths;
use super::params::{make_params, seam_length, SurfaceParams};
use crate::error::{Error, Result};
use crate::hyptrig::{acosh_guarded, HypLength};
use crate::tolerance::ACOSH_CLAMP;

/// The other pentagon chart of the same surface.
///
/// Cutting the pentagon along `CD` and regluing swaps the roles of the cuff
/// arc and the `CD` arc: the new half cuff is `c'' = 2·len_CD`, and the new
/// twist is chosen so the new `CD` arc has length `c/2`. Both charts describe
/// isometric surfaces, so the systole is unchanged.
pub fn dual_params(p: &SurfaceParams) -> Result<SurfaceParams> {
    let cd = candidate_lengths(p)?.cd;
    let c2 = 2.0 * cd.get();
    if c2 <= 0.0 {
        return Err(Error::OutOfDomain(
            "CD arc has zero length, dual cuff degenerates".into(),
        ));
    }
    let s2 = seam_length(p.n(), HypLength::new(c2)?)?;
    let ratio = p.c().half().cosh() / s2.half().cosh();
    if ratio < 1.0 - ACOSH_CLAMP {
        return Err(Error::OutOfDomain(format!(
            "cosh(c/2)/cosh(s''/2) = {ratio} < 1, no real dual twist"
        )));
    }
    let t2 = 2.0 * acosh_guarded(ratio, ACOSH_CLAMP)?.get();
    if t2 > c2 {
        return Err(Error::OutOfDomain(format!(
            "dual twist {t2} exceeds dual half cuff {c2}"
        )));
    }
    make_params(p.n(), c2, t2)
}
