use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::tolerance::{BISECTION_WIDTH, BRACKET_OFFSET, BRACKET_UPPER};

/// `L = 4cos²(π/n)`, in `(0, 4]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct ShapeParamL(f64);

impl ShapeParamL {
    /// Accepts any `L` in `(0, 4]`; `L = 4` is the `n → ∞` limit.
    pub fn from_value(l: f64) -> Result<Self> {
        if l > 0.0 && l <= 4.0 {
            Ok(ShapeParamL(l))
        } else {
            Err(Error::InvalidParams(format!(
                "L must lie in (0, 4], got {l}"
            )))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

pub fn shape_param(n: u32) -> Result<ShapeParamL> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 3, got {n}"
        )));
    }
    let cos = (PI / f64::from(n)).cos();
    Ok(ShapeParamL(4.0 * cos * cos))
}

/// `2K³ − 3K² + 1 − L(K+1)²`
pub fn cubic_residual(k: f64, l: ShapeParamL) -> f64 {
    let l = l.get();
    2.0 * k * k * k - 3.0 * k * k + 1.0 - l * (k + 1.0) * (k + 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicRoots {
    /// Real roots in ascending order.
    pub roots: Vec<f64>,
    /// The root above 1.
    pub selected: f64,
    /// `(q/2)² + (p/3)³` of the depressed cubic.
    pub discriminant: f64,
}

struct Depressed {
    shift: f64,
    p: f64,
    /// `−q/2`
    r: f64,
    discriminant: f64,
}

// Substituting K = y + (L+3)/6 into the monic cubic gives y³ + p·y + q = 0.
fn depress(l: f64) -> Depressed {
    let shift = (l + 3.0) / 6.0;
    let p = -l - (l + 3.0) * (l + 3.0) / 12.0;
    let r = ((l / 216.0 + 1.0 / 8.0) * l + 5.0 / 8.0) * l - 1.0 / 8.0;
    let discriminant = ((l + 18.0) * l - 27.0) * l / 108.0;
    Depressed {
        shift,
        p,
        r,
        discriminant,
    }
}

/// All real roots of the systole cubic by Cardano's formula, switching to the
/// trigonometric form when there are three real roots (only n = 3 among
/// integer orders).
pub fn solve_k_closed_form(l: ShapeParamL) -> Result<CubicRoots> {
    let Depressed {
        shift,
        p,
        r,
        discriminant,
    } = depress(l.get());

    let mut ys = if discriminant > 0.0 {
        // take the cube root with the larger magnitude, recover the other from u·v = −p/3
        let sq = discriminant.sqrt();
        let u = (r + sq.copysign(r)).cbrt();
        let v = if u == 0.0 { 0.0 } else { -p / (3.0 * u) };
        vec![u + v]
    } else if discriminant == 0.0 {
        let u = r.cbrt();
        if u == 0.0 {
            vec![0.0]
        } else {
            vec![2.0 * u, -u]
        }
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        // cos(3θ) = (3q / 2p)·√(−3/p) with q = −2r
        let arg = ((-3.0 * r / p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * PI * f64::from(k) / 3.0).cos())
            .collect()
    };
    ys.sort_by(f64::total_cmp);
    let roots: Vec<f64> = ys.into_iter().map(|y| y + shift).collect();

    let above: Vec<f64> = roots.iter().copied().filter(|&k| k > 1.0).collect();
    match above.as_slice() {
        [k] => Ok(CubicRoots {
            selected: *k,
            roots,
            discriminant,
        }),
        [] => Err(Error::NoValidRoot(format!(
            "no root above 1 for L = {} (roots {roots:?})",
            l.get()
        ))),
        _ => Err(Error::NoValidRoot(format!(
            "several roots above 1 for L = {} (roots {roots:?})",
            l.get()
        ))),
    }
}

/// Root of the systole cubic in `(1, 10)` by bisection.
pub fn solve_k_numeric(l: ShapeParamL) -> Result<f64> {
    let f = |k: f64| cubic_residual(k, l);
    let (mut lo, mut hi) = (1.0 + BRACKET_OFFSET, BRACKET_UPPER);
    let (f_lo, f_hi) = (f(lo), f(hi));
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoValidRoot(format!(
            "no sign change on [{lo}, {hi}] for L = {}",
            l.get()
        )));
    }
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The two closed forms as they appear in print, evaluated literally.
///
/// `radicand_plus` uses `√(L(L² + 18L + 27)/108)` under the cube roots;
/// `theorem_literal` is the `T`-form with `X` (not `X^{1/3}`) in the middle
/// denominator, and `theorem_cbrt_denominator` reads that denominator as
/// `6·X^{1/3}`. Values are NaN where the printed expression has no real value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrintedClosedForms {
    pub radicand_plus: f64,
    pub theorem_literal: f64,
    pub theorem_cbrt_denominator: f64,
}

pub fn printed_closed_forms(l: ShapeParamL) -> PrintedClosedForms {
    let l = l.get();
    let a = ((l / 216.0 + 1.0 / 8.0) * l + 5.0 / 8.0) * l - 1.0 / 8.0;
    let rad = (l * (l * l + 18.0 * l + 27.0) / 108.0).sqrt();
    let radicand_plus = (a + rad).cbrt() + (a - rad).cbrt() + (l + 3.0) / 6.0;

    let inner = l * l * l + 18.0 * l * l - 27.0 * l;
    let x = l * l * l + 27.0 * l * l + 12.0 * 3f64.sqrt() * inner.sqrt() + 135.0 * l - 27.0;
    let num = l * l + 18.0 * l + 9.0;
    let theorem_literal = x.cbrt() / 6.0 + num / (6.0 * x) + (l + 3.0) / 6.0;
    let theorem_cbrt_denominator = x.cbrt() / 6.0 + num / (6.0 * x.cbrt()) + (l + 3.0) / 6.0;
    PrintedClosedForms {
        radicand_plus,
        theorem_literal,
        theorem_cbrt_denominator,
    }
}
