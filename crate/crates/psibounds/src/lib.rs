//! Sharp logarithmic bounds for the digamma function and harmonic numbers,
//! with the machinery to evaluate, invert, and verify them.
//!
//! The crate is organized around one family of approximations,
//! `I_a(x) = ln(x + a) - 1/x`.  Its best constant shifts `a = 1/2` and
//! `a = exp(-gamma)` give the tightest two-sided log-shift bounds for
//! `psi(x)` on `x > 0`; the shift that makes the family exact at a point is
//! the strictly decreasing convex function `Q(x) = exp(psi(x+1)) - x`, and
//! evaluating everything at integers yields matching sharp bounds for
//! harmonic numbers.
//!
//! Modules:
//!
//! * [`special`] — digamma, polygamma up to order 12, harmonic numbers,
//!   and the digamma root, all to near machine accuracy.
//! * [`approx`] — the approximation family, the shift function `Q` with
//!   derivatives of any supported order, sharp and classical `psi` bounds,
//!   error envelopes, and the point-shift inversion pair.
//! * [`harmonic`](mod@crate::harmonic) — three competing bound families for `H_n`, the
//!   comparison functions that rank them, and the crossover scan.
//! * [`verify`] — grid verification of every inequality with
//!   cancellation-free margins, a complete-monotonicity evidence scanner,
//!   and a finite-difference oracle.
//! * [`fmt`] — 17-significant-digit formatting and figure CSV builders.
//!
//! All functions are pure; results depend only on arguments.  Invalid
//! input reports a structured [`Error`] instead of returning NaN.

pub mod approx;
pub mod error;
pub mod fmt;
pub mod harmonic;
pub mod special;
pub mod verify;

pub use approx::{
    approx_error, error_bound_pointwise, error_bound_uniform, family_approx, legacy_psi_bounds,
    point_for_shift, psi_bounds, q_derivative, q_function, q_kth_derivative, shift_for_point,
    Interval, EXP_NEG_GAMMA,
};
pub use error::{Error, Result};
pub use fmt::{figure_g_csv, figure_q_csv, fmt_sig17};
pub use harmonic::{
    comparison_f, comparison_f_limit, comparison_g, crossover_scan, h_bounds, tightest_interval,
    tightest_width, BoundFamily, CrossoverRow, EXP_ONE_MINUS_GAMMA,
};
pub use special::{digamma, euler_gamma, harmonic, polygamma, psi_root, EULER_GAMMA, ORDER_MAX};
pub use verify::{
    default_cm_grid, fd_default_step, finite_difference, verify_complete_monotonicity,
    verify_inequality, CheckId, GridSpec, InequalityId, Spacing, VerificationReport, Violation,
};
