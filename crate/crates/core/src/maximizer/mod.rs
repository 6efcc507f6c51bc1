//! Maximizing the systole over the (c, t) chart.
//!
//! At the maximum the cuff, the `CD` curve and the `C` curve all lift to the
//! same length. Writing `K = cosh(sys/2)` and `L = 4cos²(π/n)`, that
//! equalization closes into the cubic `2K³ − 3K² + 1 − L(K+1)² = 0`, whose
//! unique root above 1 gives the maximal systole `2·arccosh K`.
//!
//! The cubic is solved in closed form ([`solve_k_closed_form`]) and, as a
//! cross-check, by bisection ([`solve_k_numeric`]). [`brute_force_max`]
//! ignores the cubic entirely and searches the min-envelope directly.

mod brute;
mod cubic;
mod optimum;
mod table;

pub use brute::{brute_force_max, SearchConfig};
pub use cubic::{
    cubic_residual, printed_closed_forms, shape_param, solve_k_closed_form, solve_k_numeric,
    CubicRoots, PrintedClosedForms, ShapeParamL,
};
pub use optimum::{optimal_surface, optimal_surface_with, printed_twist, Method, Optimum};
pub use table::{genus_table, GenusRow};
