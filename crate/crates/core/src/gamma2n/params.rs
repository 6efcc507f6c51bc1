use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyptrig::{trirectangle_partner, Angle, HypLength};

/// A point `(n, c, t)` of the Γ(2,n) parameter space with its seam length.
///
/// `c` is half the cuff length and `t` the twist, `0 ≤ t ≤ c`. Construct
/// through [`make_params`]; `s` is always consistent with `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceParams {
    n: u32,
    c: HypLength,
    t: HypLength,
    s: HypLength,
}

impl SurfaceParams {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn genus(&self) -> u32 {
        self.n - 1
    }

    pub fn c(&self) -> HypLength {
        self.c
    }

    pub fn t(&self) -> HypLength {
        self.t
    }

    pub fn s(&self) -> HypLength {
        self.s
    }

    /// The angle π/n at the centre of the right-angled 2n-gon.
    pub fn center_angle(&self) -> Angle {
        Angle::pi_over(self.n).expect("n ≥ 3 checked at construction")
    }
}

/// Seam length for cuff parameter `c` at symmetry order `n`.
pub(crate) fn seam_length(n: u32, c: HypLength) -> Result<HypLength> {
    let phi = Angle::pi_over(n)?;
    let s_half = trirectangle_partner(c.half(), phi)?;
    Ok(HypLength::new(2.0 * s_half.get()).expect("asinh of a positive ratio"))
}

pub fn make_params(n: u32, c: f64, t: f64) -> Result<SurfaceParams> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 3 (genus ≥ 2), got {n}"
        )));
    }
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "c must be finite and > 0, got {c}"
        )));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParams(format!(
            "t must be finite and ≥ 0, got {t}"
        )));
    }
    if t > c {
        return Err(Error::InvalidParams(format!(
            "t must not exceed c (t = {t}, c = {c})"
        )));
    }
    let c = HypLength::new(c)?;
    let s = seam_length(n, c)?;
    Ok(SurfaceParams {
        n,
        c,
        t: HypLength::new(t)?,
        s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn seam_at_bolza_optimum() {
        let p = make_params(3, 1.52857, 0.98242).unwrap();
        assert!((p.s().get() - 1.12840).abs() < 1e-4, "{}", p.s());
        assert_eq!(p.genus(), 2);
    }

    #[test]
    fn rejects_out_of_range() {
        for (n, c, t, needle) in [
            (3, 1.0, 1.5, "exceed"),
            (2, 1.0, 0.5, "n must"),
            (3, 0.0, 0.0, "c must"),
            (3, 1.0, -0.1, "t must"),
            (3, f64::NAN, 0.0, "c must"),
        ] {
            match make_params(n, c, t) {
                Err(Error::InvalidParams(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("expected InvalidParams for ({n}, {c}, {t}), got {other:?}"),
            }
        }
    }

    #[test]
    fn endpoints_are_allowed() {
        assert!(make_params(4, 1.0, 0.0).is_ok());
        assert!(make_params(4, 1.0, 1.0).is_ok());
    }

    #[test]
    fn constraint_identity_holds() {
        for n in 3..=100u32 {
            for i in 0..60 {
                let c = 0.05 * (200.0f64).powf(f64::from(i) / 59.0);
                let p = make_params(n, c, 0.0).unwrap();
                let lhs = (p.s().get() / 2.0).sinh() * (c / 2.0).sinh();
                let rhs = (PI / f64::from(n)).cos();
                assert!((lhs - rhs).abs() < 1e-12, "n={n} c={c}: {lhs} vs {rhs}");
            }
        }
    }
}
