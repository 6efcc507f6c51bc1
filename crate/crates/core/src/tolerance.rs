//! Every numeric threshold the crate relies on, in one place.
//!
//! `verify` prints these alongside each check so a failure names the bound it
//! broke.

/// How far below 1 an arccosh argument may drift before it is an error.
/// Inputs in `[1 - ACOSH_CLAMP, 1)` are clamped to 1.
pub const ACOSH_CLAMP: f64 = 1e-9;

/// Absolute tolerance for two lifted lengths to count as tied for the systole.
pub const ARGMIN_TIE: f64 = 1e-12;

/// The trirectangle constraint `sinh(s/2)·sinh(c/2) = cos(π/n)`.
pub const CONSTRAINT_IDENTITY: f64 = 1e-12;

/// Residual of a certified root of the systole cubic.
pub const ROOT_RESIDUAL: f64 = 1e-9;

/// Closed-form root vs bisection root.
pub const ROOT_AGREEMENT: f64 = 1e-10;

/// Bracket width at which bisection stops.
pub const BISECTION_WIDTH: f64 = 1e-13;

/// Lower end of the bisection bracket is `1 + BRACKET_OFFSET`.
pub const BRACKET_OFFSET: f64 = 1e-9;

/// Upper end of the bisection bracket.
pub const BRACKET_UPPER: f64 = 10.0;

/// `K(3) = 1 + √2`.
pub const BOLZA: f64 = 1e-9;

/// Table of K values is printed to four decimals.
pub const GENUS_TABLE: f64 = 5e-5;

/// `len_C = c` and `2·len_CD = c` at the optimum.
pub const EQUALIZATION: f64 = 1e-9;

/// Analytic cosh-length partials vs central differences (relative).
pub const PARTIALS_RELATIVE: f64 = 1e-6;

/// Step of the central differences.
pub const FD_STEP: f64 = 1e-6;

/// Applying the dual chart twice.
pub const DUAL_INVOLUTION: f64 = 1e-8;

/// Systole before and after the dual chart.
pub const DUAL_SYSTOLE: f64 = 1e-10;

/// `|cosh k − cosh h·cosh(k/2)|` at the optimum.
pub const ANNULUS_CLOSURE: f64 = 1e-6;

/// Brute force vs closed form in c, t and systole.
pub const ORACLE_AGREEMENT: f64 = 1e-5;

/// Every tolerance with its name, in the order `verify` prints them.
pub fn all() -> Vec<(&'static str, f64)> {
    vec![
        ("acosh_clamp", ACOSH_CLAMP),
        ("argmin_tie", ARGMIN_TIE),
        ("constraint_identity", CONSTRAINT_IDENTITY),
        ("root_residual", ROOT_RESIDUAL),
        ("root_agreement", ROOT_AGREEMENT),
        ("bisection_width", BISECTION_WIDTH),
        ("bolza", BOLZA),
        ("genus_table", GENUS_TABLE),
        ("equalization", EQUALIZATION),
        ("partials_relative", PARTIALS_RELATIVE),
        ("fd_step", FD_STEP),
        ("dual_involution", DUAL_INVOLUTION),
        ("dual_systole", DUAL_SYSTOLE),
        ("annulus_closure", ANNULUS_CLOSURE),
        ("oracle_agreement", ORACLE_AGREEMENT),
    ]
}
