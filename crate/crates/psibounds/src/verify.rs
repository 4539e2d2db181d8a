//! Grid-based verification of the crate's inequalities, plus the
//! complete-monotonicity evidence scanner and a finite-difference oracle.
//!
//! Every check evaluates a signed margin `R(x) - L(x)` at each grid point;
//! the margin of a true strict inequality is positive.  A point counts as a
//! violation only when its margin falls to or below `-4 ulp(scale)`, where
//! `scale` is the magnitude of the larger side: real violations surface,
//! while last-place rounding on a tight bound does not produce false alarms.
//!
//! Margins are never computed as the literal difference of two nearly equal
//! sides.  Each check carries an algebraically rearranged form (recurrence
//! identities below the asymptotic threshold, tail series above it) whose
//! rounding error is proportional to the margin itself, so even margins of
//! order `1e-18` keep their sign.

use std::fmt;

use crate::approx::{self, EXP_NEG_GAMMA};
use crate::error::{Error, Result};
use crate::harmonic::{h_bounds, BoundFamily};
use crate::special::{
    self, bernoulli_tail, digamma_minus_ln_raw, digamma_raw, digamma_tail, polygamma_raw,
    HarmonicLadder, ORDER_MAX, SHIFT_THRESHOLD,
};

/// Point-placement rule of a [`GridSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spacing {
    /// Equal steps between consecutive points.
    Linear,
    /// Equal ratios between consecutive points; requires `start > 0`.
    Logarithmic,
}

/// An evaluation grid: `count` points from `start` to `end` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// First grid point.
    pub start: f64,
    /// Last grid point.
    pub end: f64,
    /// Number of points; at least 2.
    pub count: usize,
    /// Placement rule.
    pub spacing: Spacing,
}

impl GridSpec {
    /// Validated constructor.
    ///
    /// # Errors
    /// [`Error::InvalidGrid`] unless `start < end` (both finite),
    /// `count >= 2`, and `start > 0` for logarithmic spacing.
    pub fn new(start: f64, end: f64, count: usize, spacing: Spacing) -> Result<Self> {
        let grid = GridSpec { start, end, count, spacing };
        grid.validate()?;
        Ok(grid)
    }

    /// Re-check the construction invariants; used by the verification entry
    /// points so hand-assembled grids get the same scrutiny.
    pub fn validate(&self) -> Result<()> {
        if !self.start.is_finite() || !self.end.is_finite() {
            return Err(Error::InvalidGrid { reason: "endpoints must be finite" });
        }
        if !(self.start < self.end) {
            return Err(Error::InvalidGrid { reason: "start must be strictly below end" });
        }
        if self.count < 2 {
            return Err(Error::InvalidGrid { reason: "count must be at least 2" });
        }
        if self.spacing == Spacing::Logarithmic && self.start <= 0.0 {
            return Err(Error::InvalidGrid { reason: "logarithmic spacing requires start > 0" });
        }
        Ok(())
    }

    /// The `i`-th point, `0 <= i < count`.  The endpoints are returned
    /// exactly — `point(0) == start` and `point(count - 1) == end` — so
    /// grids anchored at special abscissas (the digamma root, a domain
    /// edge) evaluate there without a lerp-roundoff nudge.
    pub fn point(&self, i: usize) -> f64 {
        if i == 0 {
            return self.start;
        }
        if i == self.count - 1 {
            return self.end;
        }
        let t = i as f64 / (self.count - 1) as f64;
        match self.spacing {
            Spacing::Linear => self.start + t * (self.end - self.start),
            Spacing::Logarithmic => {
                let (a, b) = (self.start.ln(), self.end.ln());
                (a + t * (b - a)).exp()
            }
        }
    }
}

/// The inequality checks the engine knows how to verify.  Tags are opaque
/// identifiers; each maps to a fixed pair of closed-form sides over a fixed
/// domain, described on the variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InequalityId {
    /// `ln(x + 1/2) - 1/x < psi(x)` on `x > 0`; margin closes as
    /// `x -> inf` (the shift `1/2` is best possible there).
    Thm1Lower,
    /// `psi(x) < ln(x + e^-gamma) - 1/x` on `x > 0`; margin closes as
    /// `x -> 0+`.
    Thm1Upper,
    /// The classical two-sided `ln x - 1/x < psi(x) < ln(x+1) - 1/x` on
    /// `x > 0`; margin taken as the smaller of the two one-sided margins.
    LegacyEq3,
    /// `ln x - 1/(2x) - 1/(12 x^2) < psi(x)` on `x > 0`.
    Eq10Lower,
    /// `psi(x) < ln x - 1/(2x)` on `x > 0`.
    Eq10Upper,
    /// `trigamma(x) * exp(psi(x)) < 1` on `x > 0`.
    Batir,
    /// `trigamma(x)^2 + tetragamma(x) > 0` on `x > 0`.
    Eq12Positivity,
    /// The shift function decreases strictly on `x > -1`: pointwise
    /// `Q'(x) < 0` plus an adjacent-point check `Q(x_i) > Q(x_{i+1})`.
    QDecreasing,
    /// The shift function is strictly convex on `x > -1`: `Q''(x) > 0`.
    QConvex,
    /// The sharp-new harmonic bounds contain `H_n` (integer grid).
    HnSharpNew,
    /// The qi-cui harmonic bounds contain `H_n` (integer grid).
    HnQiCui,
    /// The alzer harmonic bounds contain `H_n` (integer grid).
    HnAlzer,
    /// The uniform family-error bound dominates the pointwise envelope
    /// width on `x >= c` (`c` = the digamma root): the margin vanishes at
    /// `x = c` and grows from there.
    Thm4Uniform,
}

impl InequalityId {
    /// Every check, in the order `verify all` runs them.
    pub const ALL: [InequalityId; 13] = [
        InequalityId::Thm1Lower,
        InequalityId::Thm1Upper,
        InequalityId::LegacyEq3,
        InequalityId::Eq10Lower,
        InequalityId::Eq10Upper,
        InequalityId::Batir,
        InequalityId::Eq12Positivity,
        InequalityId::QDecreasing,
        InequalityId::QConvex,
        InequalityId::HnSharpNew,
        InequalityId::HnQiCui,
        InequalityId::HnAlzer,
        InequalityId::Thm4Uniform,
    ];

    /// Stable kebab-case identifier used by the CLI and in reports.
    pub fn name(self) -> &'static str {
        match self {
            InequalityId::Thm1Lower => "thm1-lower",
            InequalityId::Thm1Upper => "thm1-upper",
            InequalityId::LegacyEq3 => "legacy-eq3",
            InequalityId::Eq10Lower => "eq10-lower",
            InequalityId::Eq10Upper => "eq10-upper",
            InequalityId::Batir => "batir",
            InequalityId::Eq12Positivity => "eq12-positivity",
            InequalityId::QDecreasing => "q-decreasing",
            InequalityId::QConvex => "q-convex",
            InequalityId::HnSharpNew => "hn-sharp-new",
            InequalityId::HnQiCui => "hn-qi-cui",
            InequalityId::HnAlzer => "hn-alzer",
            InequalityId::Thm4Uniform => "thm4-uniform",
        }
    }

    /// Inverse of [`name`](Self::name).
    pub fn parse(s: &str) -> Option<InequalityId> {
        InequalityId::ALL.iter().copied().find(|id| id.name() == s)
    }

    /// The grid each check runs on when the caller does not supply one:
    /// wide log coverage for the `psi`-domain checks, the full integer range
    /// `1..=1e5` for the harmonic families, and linear grids over the shift
    /// function's domain for the rest.
    pub fn default_grid(self) -> GridSpec {
        match self {
            InequalityId::Thm1Lower
            | InequalityId::Thm1Upper
            | InequalityId::LegacyEq3
            | InequalityId::Eq10Lower
            | InequalityId::Eq10Upper
            | InequalityId::Batir
            | InequalityId::Eq12Positivity => {
                GridSpec { start: 1e-6, end: 1e8, count: 100_000, spacing: Spacing::Logarithmic }
            }
            InequalityId::QDecreasing | InequalityId::QConvex => {
                GridSpec { start: -0.9, end: 50.0, count: 10_000, spacing: Spacing::Linear }
            }
            InequalityId::HnSharpNew | InequalityId::HnQiCui | InequalityId::HnAlzer => {
                GridSpec { start: 1.0, end: 1e5, count: 100_000, spacing: Spacing::Linear }
            }
            InequalityId::Thm4Uniform => GridSpec {
                start: special::psi_root(),
                end: 100.0,
                count: 10_000,
                spacing: Spacing::Linear,
            },
        }
    }

    /// Whether the check samples integer harmonic indices.
    fn is_integer_domain(self) -> bool {
        matches!(
            self,
            InequalityId::HnSharpNew | InequalityId::HnQiCui | InequalityId::HnAlzer
        )
    }

    /// Lower boundary of the check's domain and whether the boundary itself
    /// is admissible.
    fn domain_floor(self) -> (f64, bool) {
        match self {
            InequalityId::Thm1Lower
            | InequalityId::Thm1Upper
            | InequalityId::LegacyEq3
            | InequalityId::Eq10Lower
            | InequalityId::Eq10Upper
            | InequalityId::Batir
            | InequalityId::Eq12Positivity => (0.0, false),
            InequalityId::QDecreasing | InequalityId::QConvex => (-1.0, false),
            // integer grids round to the nearest index, so anything from
            // 0.5 up lands on n >= 1
            InequalityId::HnSharpNew | InequalityId::HnQiCui | InequalityId::HnAlzer => (0.5, true),
            InequalityId::Thm4Uniform => (special::psi_root(), true),
        }
    }
}

/// A grid point whose margin crossed the strictness threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    /// The grid point (the harmonic index, for integer checks).
    pub x: f64,
    /// The signed margin observed there.
    pub margin: f64,
}

/// What a [`VerificationReport`] certifies: one of the named inequalities,
/// or one derivative order of the complete-monotonicity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// A named inequality check.
    Inequality(InequalityId),
    /// Sign check of `(-1)^order * Q^(order)` across the grid.
    CompleteMonotonicity {
        /// Derivative order of the scanned sign condition.
        order: u32,
    },
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Inequality(id) => f.write_str(id.name()),
            CheckId::CompleteMonotonicity { order } => write!(f, "cm-k{order}"),
        }
    }
}

/// Outcome of one verification run.
///
/// Reports are deterministic: the same check on the same grid produces a
/// bit-identical report, points evaluated in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// What was checked.
    pub id: CheckId,
    /// Number of grid points evaluated (after integer deduplication).
    pub points_checked: usize,
    /// Points whose margin crossed the strictness threshold; for the
    /// monotonicity scanner, only those the finite-difference cross-check
    /// confirms.
    pub violations: Vec<Violation>,
    /// Scanner-only: flagged points where the finite-difference estimate
    /// contradicts the analytic value, so the flag is attributed to the
    /// implementation rather than the inequality.  Always empty for plain
    /// inequality checks.
    pub disagreements: Vec<Violation>,
    /// Smallest margin seen anywhere on the grid.
    pub min_margin: f64,
    /// Grid point where `min_margin` occurred.
    pub argmin_x: f64,
}

impl VerificationReport {
    /// True when nothing was flagged: no violations and no analytic/numeric
    /// disagreements.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.disagreements.is_empty()
    }
}

/// Unit in the last place at magnitude `v`, floored at the smallest
/// positive double so a zero scale still yields a nonzero slack.
pub(crate) fn ulp_of(v: f64) -> f64 {
    let a = v.abs().max(f64::MIN_POSITIVE);
    f64::from_bits(a.to_bits() + 1) - a
}

/// Margins at or below this threshold count as violations; `scale` is the
/// magnitude of the larger inequality side at the point.
fn strictness_threshold(scale: f64) -> f64 {
    -4.0 * ulp_of(scale)
}

/// Running minimum/violation tracker shared by the verification loops.
struct MarginAccumulator {
    min_margin: f64,
    argmin_x: f64,
    violations: Vec<Violation>,
}

impl MarginAccumulator {
    fn new() -> Self {
        MarginAccumulator { min_margin: f64::INFINITY, argmin_x: f64::NAN, violations: Vec::new() }
    }

    fn observe(&mut self, x: f64, margin: f64, scale: f64) {
        if margin < self.min_margin {
            self.min_margin = margin;
            self.argmin_x = x;
        }
        if margin <= strictness_threshold(scale) {
            self.violations.push(Violation { x, margin });
        }
    }

    fn into_report(self, id: CheckId, points_checked: usize) -> VerificationReport {
        VerificationReport {
            id,
            points_checked,
            violations: self.violations,
            disagreements: Vec::new(),
            min_margin: self.min_margin,
            argmin_x: self.argmin_x,
        }
    }
}

/// Direct-evaluation threshold for the curvature positivity check; above
/// it the two polygamma terms cancel too deeply and the margin switches to
/// its asymptotic tail.
const CURVATURE_SERIES_THRESHOLD: f64 = 100.0;

/// Asymptotic tail of `trigamma(x)^2 + tetragamma(x)`: coefficients of
/// `x^-4 ... x^-12`.
const CURVATURE_SERIES: [f64; 9] = [
    1.0 / 12.0,
    1.0 / 6.0,
    23.0 / 180.0,
    -1.0 / 30.0,
    -41.0 / 315.0,
    1.0 / 42.0,
    509.0 / 2100.0,
    -1.0 / 30.0,
    -4813.0 / 6930.0,
];

fn curvature_series(x: f64) -> f64 {
    let inv = 1.0 / x;
    let mut acc = 0.0;
    for c in CURVATURE_SERIES.iter().rev() {
        acc = acc * inv + c;
    }
    acc * inv.powi(4)
}

/// `(margin, scale)` for one point of a pointwise (non-integer,
/// non-adjacency) check.  Each arm's comment states the two sides; the code
/// states the cancellation-free rearrangement actually evaluated.
fn pointwise_margin(id: InequalityId, x: f64) -> (f64, f64) {
    match id {
        // psi(x) - [ln(x+1/2) - 1/x]
        InequalityId::Thm1Lower => {
            if x >= SHIFT_THRESHOLD {
                let half = 0.5 / x;
                (half - half.ln_1p() - digamma_tail(x, 1), x.ln())
            } else {
                let d1 = digamma_raw(x + 1.0);
                let lnterm = (x + 0.5).ln();
                let inv = 1.0 / x;
                (d1 - lnterm, (d1 - inv).abs().max((lnterm - inv).abs()))
            }
        }
        // [ln(x+e^-gamma) - 1/x] - psi(x)
        InequalityId::Thm1Upper => {
            if x >= SHIFT_THRESHOLD {
                ((EXP_NEG_GAMMA / x).ln_1p() - 0.5 / x + digamma_tail(x, 1), x.ln())
            } else {
                let d1 = digamma_raw(x + 1.0);
                let lnterm = (x + EXP_NEG_GAMMA).ln();
                let inv = 1.0 / x;
                (lnterm - d1, (d1 - inv).abs().max((lnterm - inv).abs()))
            }
        }
        // min of psi(x) - [ln x - 1/x] and [ln(x+1) - 1/x] - psi(x)
        InequalityId::LegacyEq3 => {
            if x >= SHIFT_THRESHOLD {
                let tail = digamma_tail(x, 1);
                let half = 0.5 / x;
                let m_lo = half - tail;
                let m_hi = (1.0 / x).ln_1p() - half + tail;
                (m_lo.min(m_hi), x.ln())
            } else {
                let d1 = digamma_raw(x + 1.0);
                let inv = 1.0 / x;
                let m_lo = d1 - x.ln();
                let m_hi = (x + 1.0).ln() - d1;
                let scale = (d1 - inv)
                    .abs()
                    .max((x.ln() - inv).abs())
                    .max(((x + 1.0).ln() - inv).abs());
                (m_lo.min(m_hi), scale)
            }
        }
        // psi(x) - [ln x - 1/(2x) - 1/(12x^2)]
        InequalityId::Eq10Lower => {
            if x >= SHIFT_THRESHOLD {
                (-digamma_tail(x, 2), 0.5 / x)
            } else {
                let gap = digamma_raw(x + 1.0) - x.ln();
                let m = gap - (0.5 / x - 1.0 / (12.0 * x * x));
                (m, gap.abs().max(0.5 / x))
            }
        }
        // [ln x - 1/(2x)] - psi(x)
        InequalityId::Eq10Upper => {
            if x >= SHIFT_THRESHOLD {
                (digamma_tail(x, 1), 0.5 / x)
            } else {
                let gap = digamma_raw(x + 1.0) - x.ln();
                (0.5 / x - gap, gap.abs().max(0.5 / x))
            }
        }
        // 1 - trigamma(x) exp(psi(x)), via -expm1 of its logarithm above
        // the threshold: log = [psi - ln x] + ln(x trigamma(x)) with
        // x trigamma(x) = 1 + 1/(2x) + bernoulli tail
        InequalityId::Batir => {
            if x >= SHIFT_THRESHOLD {
                let s = digamma_minus_ln_raw(x) + (0.5 / x + bernoulli_tail(x, 1)).ln_1p();
                (-s.exp_m1(), 1.0)
            } else {
                let w = polygamma_raw(1, x) * digamma_raw(x).exp();
                (1.0 - w, w.abs().max(1.0))
            }
        }
        // trigamma(x)^2 + tetragamma(x)
        InequalityId::Eq12Positivity => {
            if x >= CURVATURE_SERIES_THRESHOLD {
                let m = curvature_series(x);
                (m, m.abs().max(f64::MIN_POSITIVE))
            } else {
                let p1 = polygamma_raw(1, x);
                let p2 = polygamma_raw(2, x);
                (p1 * p1 + p2, (p1 * p1).max(p2.abs()))
            }
        }
        // Q''(x)
        InequalityId::QConvex => approx::q_kth_derivative_raw(2, x),
        // uniform family-error bound minus the pointwise envelope width;
        // identical expressions, so the margin at the root is exactly zero
        InequalityId::Thm4Uniform => {
            let u = approx::error_bound_uniform();
            (u - approx::pointwise_bound_expr(x), u)
        }
        InequalityId::QDecreasing
        | InequalityId::HnSharpNew
        | InequalityId::HnQiCui
        | InequalityId::HnAlzer => unreachable!("handled by dedicated loops"),
    }
}

/// Run one inequality check over a grid.
///
/// Integer-domain checks round each grid point to the nearest index and
/// deduplicate, so `points_checked` can be smaller than `grid.count`.
///
/// # Errors
/// [`Error::InvalidGrid`] for a malformed grid; [`Error::GridDomain`] when
/// the grid extends outside the check's domain.
pub fn verify_inequality(id: InequalityId, grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let (floor, closed) = id.domain_floor();
    let admissible = if closed { grid.start >= floor } else { grid.start > floor };
    if !admissible {
        return Err(Error::GridDomain { check: id.name(), min_start: floor });
    }

    let mut acc = MarginAccumulator::new();
    let points_checked;
    if id.is_integer_domain() {
        let family = match id {
            InequalityId::HnSharpNew => BoundFamily::SharpNew,
            InequalityId::HnQiCui => BoundFamily::QiCui,
            InequalityId::HnAlzer => BoundFamily::Alzer,
            _ => unreachable!(),
        };
        let mut indices: Vec<u64> = (0..grid.count).map(|i| grid.point(i).round() as u64).collect();
        indices.dedup();
        let mut ladder = HarmonicLadder::new();
        for &n in &indices {
            let h = ladder.advance_to(n);
            let iv = h_bounds(family, n)?;
            let margin = (h - iv.lo).min(iv.hi - h);
            acc.observe(n as f64, margin, h);
        }
        points_checked = indices.len();
    } else if id == InequalityId::QDecreasing {
        // pointwise Q' < 0, plus strict decrease between adjacent samples
        let mut prev_q = None;
        for i in 0..grid.count {
            let x = grid.point(i);
            let w = polygamma_raw(1, x + 1.0) * digamma_raw(x + 1.0).exp();
            acc.observe(x, 1.0 - w, w.abs().max(1.0));
            let q = approx::q_raw(x);
            if let Some(prev) = prev_q {
                let prev: f64 = prev;
                acc.observe(x, prev - q, q.abs());
            }
            prev_q = Some(q);
        }
        points_checked = grid.count;
    } else {
        for i in 0..grid.count {
            let x = grid.point(i);
            let (margin, scale) = pointwise_margin(id, x);
            acc.observe(x, margin, scale);
        }
        points_checked = grid.count;
    }
    Ok(acc.into_report(CheckId::Inequality(id), points_checked))
}

/// The grid the monotonicity scanner uses when none is supplied; matches
/// the shift-function checks' default.
pub fn default_cm_grid() -> GridSpec {
    InequalityId::QDecreasing.default_grid()
}

/// How a flagged scanner point is classified, given the sign-adjusted
/// finite-difference margin at the same point (`None` when the order has no
/// derivative to estimate, i.e. the value itself was checked).
fn classify_flag(fd_margin: Option<f64>) -> bool {
    // true = confirmed violation; a cross-check that still sees a
    // non-positive margin agrees with the analytic flag
    match fd_margin {
        None => true,
        Some(m) => m <= 0.0,
    }
}

/// Scan the sign pattern `(-1)^k * Q^(k)(x) >= 0` for every order
/// `k = 0..=k_max` over one grid; one report per order.
///
/// A point that trips the strictness threshold is cross-checked with a
/// central finite difference of the next-lower derivative before being
/// reported: agreement lands it in `violations`, contradiction in
/// `disagreements`.  Nothing is suppressed either way.
///
/// # Errors
/// [`Error::UnsupportedOrder`] if `k_max` exceeds the largest supported
/// derivative order; [`Error::InvalidGrid`]/[`Error::GridDomain`] as for
/// [`verify_inequality`].
pub fn verify_complete_monotonicity(k_max: u32, grid: &GridSpec) -> Result<Vec<VerificationReport>> {
    if k_max > ORDER_MAX - 1 {
        return Err(Error::UnsupportedOrder {
            op: "verify_complete_monotonicity",
            order: k_max,
            max: ORDER_MAX - 1,
        });
    }
    grid.validate()?;
    if grid.start <= -1.0 {
        return Err(Error::GridDomain { check: "complete-monotonicity", min_start: -1.0 });
    }

    let mut reports = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let mut min_margin = f64::INFINITY;
        let mut argmin_x = f64::NAN;
        let mut violations = Vec::new();
        let mut disagreements = Vec::new();
        for i in 0..grid.count {
            let x = grid.point(i);
            let (d, scale) = approx::q_kth_derivative_raw(k, x);
            let margin = if k % 2 == 0 { d } else { -d };
            if margin < min_margin {
                min_margin = margin;
                argmin_x = x;
            }
            if margin <= strictness_threshold(scale) {
                let fd_margin = if k == 0 {
                    None
                } else {
                    let h = fd_default_step(1, x);
                    let fd = (approx::q_kth_derivative_raw(k - 1, x + h).0
                        - approx::q_kth_derivative_raw(k - 1, x - h).0)
                        / (2.0 * h);
                    Some(if k % 2 == 0 { fd } else { -fd })
                };
                let flagged = Violation { x, margin };
                if classify_flag(fd_margin) {
                    violations.push(flagged);
                } else {
                    disagreements.push(flagged);
                }
            }
        }
        reports.push(VerificationReport {
            id: CheckId::CompleteMonotonicity { order: k },
            points_checked: grid.count,
            violations,
            disagreements,
            min_margin,
            argmin_x,
        });
    }
    Ok(reports)
}

/// Central finite difference of `f` at `x`.
///
/// Order 1: `(f(x+h) - f(x-h)) / (2h)`; order 2:
/// `(f(x+h) - 2 f(x) + f(x-h)) / h^2`.
///
/// # Errors
/// [`Error::UnsupportedOrder`] for orders other than 1 and 2;
/// [`Error::Domain`] for a non-positive or non-finite step or non-finite
/// `x`; any error `f` itself returns on a stencil point is passed through.
pub fn finite_difference<F>(f: F, x: f64, order: u32, step: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(order == 1 || order == 2) {
        return Err(Error::UnsupportedOrder { op: "finite_difference", order, max: 2 });
    }
    if !x.is_finite() {
        return Err(Error::Domain { op: "finite_difference", value: x });
    }
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::Domain { op: "finite_difference", value: step });
    }
    match order {
        1 => Ok((f(x + step)? - f(x - step)?) / (2.0 * step)),
        _ => Ok((f(x + step)? - 2.0 * f(x)? + f(x - step)?) / (step * step)),
    }
}

/// Step size balancing truncation against roundoff for a central
/// difference of the given order: `eps^(1/3) * max(1, |x|)` for order 1,
/// `eps^(1/4) * max(1, |x|)` for order 2.
pub fn fd_default_step(order: u32, x: f64) -> f64 {
    let scale = x.abs().max(1.0);
    match order {
        1 => f64::EPSILON.powf(1.0 / 3.0) * scale,
        _ => f64::EPSILON.powf(0.25) * scale,
    }
}
