//! The one-parameter logarithmic approximation family for digamma, its
//! error bounds, and the shift function that picks the best member of the
//! family at each point.
//!
//! The family is `I_a(x) = ln(x + a) - 1/x`.  Its two extreme members,
//! `a = 1/2` and `a = exp(-gamma)`, sandwich `psi(x)` on all of `x > 0` and
//! are the sharpest constant shifts that do so.  The shift that makes the
//! approximation exact at a given `x` is `Q(x) = exp(psi(x+1)) - x`, a
//! strictly decreasing convex function; restricted to `x > 0` it sweeps
//! exactly the open interval `(1/2, exp(-gamma))`, which is what makes the
//! inversion pair below well defined.

use crate::error::{Error, Result};
use crate::special::{self, ORDER_MAX, SHIFT_THRESHOLD};

/// `exp(-gamma)`, the supremum of the shift function, correctly rounded.
pub const EXP_NEG_GAMMA: f64 = 0.561459483566885169824143214790880;

/// A closed interval `[lo, hi]` used for bound pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    /// Lower endpoint.
    pub lo: f64,
    /// Upper endpoint.
    pub hi: f64,
}

impl Interval {
    /// Width `hi - lo`.
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Whether `v` lies in `[lo, hi]` (endpoints included).
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

/// The approximation family member `ln(x + a) - 1/x`.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite and positive, or if `x + a <= 0`
/// (the logarithm's argument must be positive; `a` itself may be any finite
/// value).
pub fn family_approx(a: f64, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { op: "family_approx", value: x });
    }
    if !a.is_finite() || x + a <= 0.0 {
        return Err(Error::Domain { op: "family_approx", value: a });
    }
    Ok((x + a).ln() - 1.0 / x)
}

/// The optimal-shift function `Q(x) = exp(psi(x+1)) - x` on `x > -1`.
///
/// `Q` decreases strictly from `1` (the limit at `x -> -1+`) toward `1/2`
/// at infinity, passing through `exp(-gamma)` exactly at `x = 0`.  For
/// `x >= SHIFT_THRESHOLD` the subtraction is rearranged through
/// `expm1`/`ln_1p` so the result keeps full relative accuracy even though
/// the two terms agree to many digits.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite or `x <= -1`.
pub fn q_function(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= -1.0 {
        return Err(Error::Domain { op: "q_function", value: x });
    }
    Ok(q_raw(x))
}

/// Domain-unchecked shift function; callers guarantee `x > -1` finite.
pub(crate) fn q_raw(x: f64) -> f64 {
    if x >= SHIFT_THRESHOLD {
        // Q = x * (exp(r) - 1) with r = psi(x+1) - ln x; r is tiny, so go
        // through expm1 to avoid cancelling e^psi against x.
        let y = x + 1.0;
        let r = (1.0 / x).ln_1p() - 0.5 / y - special::digamma_tail(y, 1);
        x * r.exp_m1()
    } else {
        special::digamma_raw(x + 1.0).exp() - x
    }
}

/// First derivative of the shift function,
/// `Q'(x) = trigamma(x+1) * exp(psi(x+1)) - 1`; strictly negative on the
/// whole domain.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite or `x <= -1`.
pub fn q_derivative(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= -1.0 {
        return Err(Error::Domain { op: "q_derivative", value: x });
    }
    Ok(q_derivative_raw(x))
}

pub(crate) fn q_derivative_raw(x: f64) -> f64 {
    special::polygamma_raw(1, x + 1.0) * special::digamma_raw(x + 1.0).exp() - 1.0
}

/// `k`-th derivative of the shift function for `0 <= k <= ORDER_MAX - 1`.
///
/// Derivatives of `exp(psi(x+1))` are built with the complete Bell
/// polynomial recurrence over the polygamma values
/// `g_i = psi^(i)(x+1)`:
///
/// ```text
/// B_0 = 1,   B_{m+1} = sum_{i=0..m} C(m,i) B_{m-i} g_{i+1}
/// (exp g)^(k) = exp(g) * B_k
/// ```
///
/// then the `-x` term contributes `-1` at `k = 1` and nothing beyond.
/// `k = 0` reproduces [`q_function`] and `k = 1` reproduces
/// [`q_derivative`] exactly.
///
/// # Errors
/// [`Error::UnsupportedOrder`] if `k >= ORDER_MAX` (the recurrence needs
/// polygamma orders up to `k`); [`Error::Domain`] if `x` is not finite or
/// `x <= -1`.
pub fn q_kth_derivative(k: u32, x: f64) -> Result<f64> {
    if k > ORDER_MAX - 1 {
        return Err(Error::UnsupportedOrder { op: "q_kth_derivative", order: k, max: ORDER_MAX - 1 });
    }
    if !x.is_finite() || x <= -1.0 {
        return Err(Error::Domain { op: "q_kth_derivative", value: x });
    }
    Ok(q_kth_derivative_raw(k, x).0)
}

/// Returns `(value, scale)` where `scale` is the magnitude of the largest
/// additive contribution to the final Bell stage.  The scale is what a
/// strictness threshold must be measured against: the absolute rounding
/// error of the result is proportional to it, not to the (possibly much
/// smaller) value.
pub(crate) fn q_kth_derivative_raw(k: u32, x: f64) -> (f64, f64) {
    if k == 0 {
        let q = q_raw(x);
        return (q, q.abs().max(x.abs()));
    }
    let k = k as usize;
    let g: Vec<f64> = (1..=k as u32).map(|i| special::polygamma_raw(i, x + 1.0)).collect();
    let mut bell = vec![0.0_f64; k + 1];
    bell[0] = 1.0;
    let mut last_scale = 0.0_f64;
    for m in 0..k {
        let mut s = 0.0;
        let mut mag = 0.0_f64;
        for i in 0..=m {
            let term = binomial(m, i) * bell[m - i] * g[i];
            s += term;
            mag = mag.max(term.abs());
        }
        bell[m + 1] = s;
        last_scale = mag;
    }
    let e = special::digamma_raw(x + 1.0).exp();
    if k == 1 {
        (e * bell[1] - 1.0, (e * last_scale).max(1.0))
    } else {
        (e * bell[k], (e * last_scale).max(f64::MIN_POSITIVE))
    }
}

/// Binomial coefficient as a float; exact for the small orders used here.
fn binomial(n: usize, k: usize) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c
}

/// The sharp constant-shift bounds
/// `ln(x + 1/2) - 1/x < psi(x) < ln(x + exp(-gamma)) - 1/x` on `x > 0`.
///
/// Both shift constants are best possible: raising `1/2` or lowering
/// `exp(-gamma)` breaks the corresponding inequality somewhere.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite and positive.
pub fn psi_bounds(x: f64) -> Result<Interval> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { op: "psi_bounds", value: x });
    }
    let inv = 1.0 / x;
    Ok(Interval { lo: (x + 0.5).ln() - inv, hi: (x + EXP_NEG_GAMMA).ln() - inv })
}

/// The classical unshifted bounds `ln x - 1/x < psi(x) < ln(x + 1) - 1/x`
/// that the sharp pair improves on.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite and positive.
pub fn legacy_psi_bounds(x: f64) -> Result<Interval> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { op: "legacy_psi_bounds", value: x });
    }
    let inv = 1.0 / x;
    Ok(Interval { lo: x.ln() - inv, hi: (x + 1.0).ln() - inv })
}

/// Signed approximation error `psi(x) - family_approx(a, x)` of one family
/// member at one point: positive where the member under-shoots the digamma
/// function, negative where it over-shoots.
///
/// # Errors
/// [`Error::Domain`] under the same conditions as [`family_approx`].
pub fn approx_error(a: f64, x: f64) -> Result<f64> {
    let approx = family_approx(a, x)?;
    Ok(special::digamma_raw(x) - approx)
}

/// Uniform worst-case error bound of the two-sided family envelope:
/// `max_a sup_x |approx_error|` over the sharp shift range is attained at
/// the digamma root `c`, giving `ln((c + exp(-gamma)) / (c + 1/2))`.
///
/// Always below `ln(3/2)`, the corresponding bound for the legacy pair.
pub fn error_bound_uniform() -> f64 {
    // Shares the exact expression of `error_bound_pointwise` at the root, so
    // the pointwise margin vanishes identically there.
    pointwise_bound_expr(special::psi_root())
}

/// Pointwise envelope width `ln((x + exp(-gamma)) / (x + 1/2))`: at each
/// `x > 0` every family member with an admissible shift lands within this
/// distance of `psi(x)`.  Strictly decreasing in `x`.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite and positive.
pub fn error_bound_pointwise(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { op: "error_bound_pointwise", value: x });
    }
    Ok(pointwise_bound_expr(x))
}

pub(crate) fn pointwise_bound_expr(x: f64) -> f64 {
    ((x + EXP_NEG_GAMMA) / (x + 0.5)).ln()
}

/// The shift that makes the family exact at `x`: an alias for
/// [`q_function`] restricted to `x > 0`, under the name the inversion pair
/// uses.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite and positive.
pub fn shift_for_point(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { op: "shift_for_point", value: x });
    }
    Ok(q_raw(x))
}

/// Inverse of [`shift_for_point`]: the unique `x > 0` whose optimal shift
/// equals `a`.  Bisection on the strictly decreasing shift function,
/// terminating when the residual drops below `1e-13` or the bracket
/// collapses to `1e-13` relative width.
///
/// # Errors
/// [`Error::ShiftOutOfRange`] unless `1/2 < a < exp(-gamma)` strictly; the
/// endpoints themselves are limits the shift function never attains.
pub fn point_for_shift(a: f64) -> Result<f64> {
    if !(a > 0.5 && a < EXP_NEG_GAMMA) {
        return Err(Error::ShiftOutOfRange { value: a });
    }
    let mut lo = 1e-12_f64;
    let mut hi = 1.0_f64;
    // Q(1e-12) is within a whisker of exp(-gamma) > a; grow hi until Q(hi)
    // falls below a.  Q -> 1/2 guarantees termination.
    while q_raw(hi) > a {
        hi *= 2.0;
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..300 {
        mid = 0.5 * (lo + hi);
        let qm = q_raw(mid);
        if (qm - a).abs() <= 1e-13 || hi - lo <= 1e-13 * mid.max(1.0) {
            break;
        }
        if qm > a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}
