//! The Γ(2,n) surface model.
//!
//! The surface is described by `(n, c, t)`: symmetry order, half cuff length
//! and twist. The seam length `s` follows from the trirectangle cut out of the
//! right-angled 2n-gon, `sinh(s/2)·sinh(c/2) = cos(π/n)`.
//!
//! On the quotient orbifold S²(2,2,2,n) only five curves can lift to a systole
//! (see [`FamilyId`]); their orbifold lengths come from [`candidate_lengths`]
//! and the lift factors through the tower of covers from [`lift_chain`].

mod annulus;
mod candidates;
mod dual;
mod family;
mod params;
mod partials;

pub use annulus::{annulus_relations, sigma12_boundary, AnnulusFit};
pub use candidates::{candidate_lengths, lift_chain, systole_report, LiftChain, SystoleReport};
pub use dual::dual_params;
pub use family::{CandidateLengths, FamilyId, PerFamily};
pub use params::{make_params, SurfaceParams};
pub use partials::{analytic_partials, CoshPartials};
