//! Hyperbolic trigonometry kernels.
//!
//! Every length formula for the candidate curves reduces to one of four
//! classical relations, each stated as `cosh(out) = f(inputs)`:
//!
//! | relation | right-hand side |
//! |---|---|
//! | right triangle, legs `a`, `b` | `cosh a · cosh b` |
//! | trirectangle with acute angle `φ` | `sinh a · sinh b = cos φ` |
//! | quadrilateral with two right angles on base `d` | `cosh d cosh a cosh b − sinh a sinh b` |
//! | right-angled hexagon, opposite side | `sinh a₁ sinh a₂ cosh m − cosh a₁ cosh a₂` |

use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::tolerance::ACOSH_CLAMP;

/// A nonnegative, finite hyperbolic length.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HypLength(f64);

impl HypLength {
    pub const ZERO: HypLength = HypLength(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(HypLength(value))
        } else {
            Err(Error::InvalidParams(format!(
                "length must be finite and nonnegative, got {value}"
            )))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn cosh(self) -> f64 {
        self.0.cosh()
    }

    #[inline]
    pub fn sinh(self) -> f64 {
        self.0.sinh()
    }

    #[inline]
    pub fn half(self) -> HypLength {
        HypLength(0.5 * self.0)
    }
}

impl From<HypLength> for f64 {
    fn from(l: HypLength) -> f64 {
        l.0
    }
}

impl fmt::Display for HypLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An angle in `(0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if radians > 0.0 && radians <= FRAC_PI_2 {
            Ok(Angle(radians))
        } else {
            Err(Error::InvalidParams(format!(
                "angle must lie in (0, π/2], got {radians}"
            )))
        }
    }

    /// `π/n` for `n ≥ 2`.
    pub fn pi_over(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("π/n needs n ≥ 2, got {n}")));
        }
        Angle::new(std::f64::consts::PI / f64::from(n))
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// arccosh that stays accurate near 1.
///
/// `f64::acosh` forms `ln(x + √(x²−1))`, which loses about half the digits of
/// the result when `x − 1` is tiny. Going through `ln_1p` keeps full relative
/// precision on `x − 1`.
fn acosh_precise(x: f64) -> f64 {
    let d = x - 1.0;
    if d < 1.0 {
        (d + (d * (2.0 + d)).sqrt()).ln_1p()
    } else {
        x.acosh()
    }
}

/// arccosh with a clamp band just below 1.
///
/// Arguments in `[1 − tol, 1)` are treated as 1; anything lower, or NaN, is a
/// domain error since it means an upstream formula was evaluated on
/// inconsistent inputs.
pub fn acosh_guarded(x: f64, tol: f64) -> Result<HypLength> {
    if x.is_nan() || x < 1.0 - tol {
        return Err(Error::domain(
            "acosh",
            format!("argument {x} is below 1 (clamp band {tol})"),
        ));
    }
    if x == f64::INFINITY {
        return Err(Error::domain("acosh", "argument is infinite"));
    }
    Ok(HypLength(acosh_precise(x.max(1.0))))
}

/// Hypotenuse of a right triangle with legs `a` and `b`.
pub fn right_triangle_hyp(a: HypLength, b: HypLength) -> HypLength {
    // product of two cosh values is ≥ 1, so the guard never fires
    HypLength(acosh_precise((a.cosh() * b.cosh()).max(1.0)))
}

/// The side partner in a trirectangle (Lambert quadrilateral).
///
/// Given one half-side `c_half` adjacent to the acute angle's opposite corner
/// and the acute angle `phi`, returns `s_half > 0` with
/// `sinh(s_half)·sinh(c_half) = cos(phi)`.
pub fn trirectangle_partner(c_half: HypLength, phi: Angle) -> Result<HypLength> {
    let sh = c_half.sinh();
    if sh <= 0.0 {
        return Err(Error::domain(
            "trirectangle_partner",
            "opposite side has zero length, partner diverges",
        ));
    }
    let out = (phi.radians().cos() / sh).asinh();
    if !out.is_finite() {
        return Err(Error::domain(
            "trirectangle_partner",
            format!("partner of {} is not finite", c_half.get()),
        ));
    }
    Ok(HypLength(out))
}

/// Quadrilateral with two right angles at the ends of base `d`; `a` and `b`
/// are the perpendicular offsets. Returns the distance between the offset
/// endpoints.
pub fn quad_two_right(d: HypLength, a: HypLength, b: HypLength) -> Result<HypLength> {
    let arg = d.cosh() * a.cosh() * b.cosh() - a.sinh() * b.sinh();
    acosh_guarded(arg, ACOSH_CLAMP)
}

/// Side of a right-angled hexagon opposite to `m`, where `a1` and `a2` are the
/// two sides adjacent to `m`.
pub fn hexagon_opposite(a1: HypLength, a2: HypLength, m: HypLength) -> Result<HypLength> {
    let arg = a1.sinh() * a2.sinh() * m.cosh() - a1.cosh() * a2.cosh();
    if arg.is_nan() || arg < 1.0 - ACOSH_CLAMP {
        return Err(Error::domain(
            "hexagon_opposite",
            format!(
                "no right-angled hexagon with sides ({}, {}, {}): cosh of opposite side would be {arg}",
                a1.get(),
                a2.get(),
                m.get()
            ),
        ));
    }
    acosh_guarded(arg, ACOSH_CLAMP)
}
