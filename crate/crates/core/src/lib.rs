//! Systoles of the Γ(2,n) family of closed hyperbolic surfaces.
//!
//! A Γ(2,n) surface of genus `n - 1` is glued from two isometric n-holed
//! spheres and is determined by two shape parameters: the half cuff length
//! `c` and the twist `t`. This crate evaluates the five candidate curves on
//! the quotient orbifold S²(2,2,2,n), lifts them to the surface, and takes the
//! lower envelope as the systole. It then maximizes that systole two ways:
//! through the cubic `2K³ − 3K² + 1 − L(K+1)² = 0` with `L = 4cos²(π/n)`
//! and `K = cosh(sys/2)`, and through a brute-force maximin grid search that
//! serves as an independent oracle.
//!
//! Module map:
//! - [`hyptrig`]: right triangle, trirectangle, two-right-angle quadrilateral
//!   and right-angled hexagon relations.
//! - [`gamma2n`]: surface parameters, candidate lengths, lift ratios, the
//!   systole report, analytic partials, the dual chart and the annulus chain.
//! - [`maximizer`]: the systole cubic, its closed-form and bisection roots,
//!   the optimal surface, the brute-force oracle and the genus table.
//! - [`verify`]: a self-check battery over all of the above.

pub mod error;
pub mod gamma2n;
pub mod hyptrig;
pub mod maximizer;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use gamma2n::{
    analytic_partials, annulus_relations, candidate_lengths, dual_params, lift_chain, make_params,
    sigma12_boundary, systole_report, AnnulusFit, CandidateLengths, CoshPartials, FamilyId,
    LiftChain, PerFamily, SurfaceParams, SystoleReport,
};
pub use hyptrig::{Angle, HypLength};
pub use maximizer::{
    brute_force_max, cubic_residual, genus_table, optimal_surface, optimal_surface_with,
    shape_param, solve_k_closed_form, solve_k_numeric, CubicRoots, GenusRow, Method, Optimum,
    SearchConfig, ShapeParamL,
};
