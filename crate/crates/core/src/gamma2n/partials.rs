use serde::Serialize;

use super::params::SurfaceParams;

/// Partial derivatives of `cosh(length)` for the candidates that move with t.
///
/// These are derivatives of the cosh of each length, not of the length: the
/// signs agree because cosh is increasing on positive lengths. The
/// c-partials are total derivatives along the constraint curve `s = s(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoshPartials {
    pub ds_dc: f64,
    /// ∂ cosh(len_CD) / ∂t
    pub cd_dt: f64,
    /// ∂ cosh(len_DE) / ∂t
    pub de_dt: f64,
    /// d cosh(len_DE) / dc
    pub de_dc: f64,
    /// ∂ cosh(len_C) / ∂t
    pub c_dt: f64,
    /// d cosh(len_C) / dc
    pub c_dc: f64,
}

fn sinh_cosh(x: f64) -> (f64, f64) {
    (x.sinh(), x.cosh())
}

pub fn analytic_partials(p: &SurfaceParams) -> CoshPartials {
    let (c, t, s) = (p.c().get(), p.t().get(), p.s().get());
    let (sh_s2, ch_s2) = sinh_cosh(0.5 * s);
    let (sh_c2, ch_c2) = sinh_cosh(0.5 * c);
    let (sh_t2, ch_t2) = sinh_cosh(0.5 * t);
    let (sh_rest, ch_rest) = sinh_cosh(0.5 * (c - t));
    let (sh_far, ch_far) = sinh_cosh(c - 0.5 * t);
    let (sh_s, ch_s) = sinh_cosh(s);

    let ds_dc = -ch_c2 * sh_s2 / (ch_s2 * sh_c2);

    CoshPartials {
        ds_dc,
        cd_dt: 0.5 * sh_t2 * ch_s2,
        de_dt: -0.5 * ch_s2 * sh_rest,
        de_dc: 0.5 * (sh_s2 * ds_dc * ch_rest + ch_s2 * sh_rest),
        c_dt: 0.5 * (ch_s + 1.0) * (t - c).sinh(),
        c_dc: sh_s * ds_dc * ch_t2 * ch_far + ch_s * ch_t2 * sh_far - sh_t2 * ch_far,
    }
}
