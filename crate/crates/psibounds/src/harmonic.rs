//! Sharp two-sided bounds for harmonic numbers and the comparison functions
//! that rank the competing bound families.
//!
//! Three families are implemented.  Writing `g = gamma`:
//!
//! * `sharp-new`:  `ln(n + 1/2) + g  <=  H_n  <=  ln(n + e^(1-g) - 1) + g`,
//!   with equality on the right at `n = 1`; both shift constants are best
//!   possible for this log-shift form.
//! * `qi-cui`:     `ln n + g + 1/(2n + a)` with `a = 1/(1-g) - 2` below and
//!   `a = 1/3` above; equality on the left at `n = 1`.
//! * `alzer`:      `c - ln(e^(1/(n+1)) - 1)` with `c = 1 + ln(sqrt(e) - 1)`
//!   below and `c = gamma` above; equality on the left at `n = 1`.

use crate::error::{Error, Result};
use crate::special::{HarmonicLadder, EULER_GAMMA};
use crate::Interval;

/// `exp(1 - gamma)`, the shift constant of the sharp-new upper bound,
/// correctly rounded.
pub const EXP_ONE_MINUS_GAMMA: f64 = 1.526205111595863880474888715036817;

/// The three harmonic-number bound families this crate knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundFamily {
    /// Logarithm with the sharp shift pair `(1/2, e^(1-gamma) - 1)`.
    SharpNew,
    /// Logarithm plus a sharp correction term `1/(2n + a)`.
    QiCui,
    /// Bounds through `ln(e^(1/(n+1)) - 1)`.
    Alzer,
}

impl BoundFamily {
    /// All families, in the order used for reports and tie-breaking.
    pub const ALL: [BoundFamily; 3] = [BoundFamily::SharpNew, BoundFamily::QiCui, BoundFamily::Alzer];

    /// Stable kebab-case name used in CLI output.
    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::SharpNew => "sharp-new",
            BoundFamily::QiCui => "qi-cui",
            BoundFamily::Alzer => "alzer",
        }
    }
}

/// Correction-term shift of the qi-cui lower bound, `1/(1 - gamma) - 2`.
const QI_CUI_LOWER_SHIFT: f64 = 1.0 / (1.0 - EULER_GAMMA) - 2.0;

/// `[lo, hi]` enclosure of `H_n` from one bound family.
///
/// # Errors
/// [`Error::Domain`] if `n == 0`.
pub fn h_bounds(family: BoundFamily, n: u64) -> Result<Interval> {
    if n == 0 {
        return Err(Error::Domain { op: "h_bounds", value: 0.0 });
    }
    let nf = n as f64;
    Ok(match family {
        BoundFamily::SharpNew => Interval {
            lo: (nf + 0.5).ln() + EULER_GAMMA,
            hi: (nf + (EXP_ONE_MINUS_GAMMA - 1.0)).ln() + EULER_GAMMA,
        },
        BoundFamily::QiCui => Interval {
            lo: nf.ln() + EULER_GAMMA + 1.0 / (2.0 * nf + QI_CUI_LOWER_SHIFT),
            hi: nf.ln() + EULER_GAMMA + 1.0 / (2.0 * nf + 1.0 / 3.0),
        },
        BoundFamily::Alzer => {
            let log_gap = (1.0 / (nf + 1.0)).exp_m1().ln();
            Interval {
                lo: (1.0 + 0.5_f64.exp_m1().ln()) - log_gap,
                hi: EULER_GAMMA - log_gap,
            }
        }
    })
}

/// The narrowest enclosure of `H_n` obtainable by mixing families: the
/// largest lower bound paired with the smallest upper bound over all three.
///
/// # Errors
/// [`Error::Domain`] if `n == 0`.
pub fn tightest_interval(n: u64) -> Result<Interval> {
    let mut best = h_bounds(BoundFamily::SharpNew, n)?;
    for family in [BoundFamily::QiCui, BoundFamily::Alzer] {
        let iv = h_bounds(family, n)?;
        if iv.lo > best.lo {
            best.lo = iv.lo;
        }
        if iv.hi < best.hi {
            best.hi = iv.hi;
        }
    }
    Ok(best)
}

/// Comparison function ranking the sharp-new lower bound against the alzer
/// lower bound, extended from integers to real `x >= 1`:
///
/// ```text
/// f(x) = ln[(x + 1/2)(e^(1/(x+1)) - 1)] + gamma - 1 - ln(sqrt(e) - 1)
/// ```
///
/// `f(x) < 0` means alzer's lower bound is tighter at `x`; `f` increases
/// from `f(1) ~ -0.0173` through a sign change between 2 and 3 to the
/// positive limit [`comparison_f_limit`], so the sharp-new lower bound
/// overtakes alzer's from `n = 3` on.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite or `x < 1`.
pub fn comparison_f(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::Domain { op: "comparison_f", value: x });
    }
    let t = (1.0 / (x + 1.0)).exp_m1();
    Ok(((x + 0.5) * t).ln() + comparison_f_limit())
}

/// Limit of [`comparison_f`] as `x -> inf`:
/// `gamma - 1 - ln(sqrt(e) - 1) ~ 0.00997`.
pub fn comparison_f_limit() -> f64 {
    EULER_GAMMA - 1.0 - 0.5_f64.exp_m1().ln()
}

/// Comparison function ranking the sharp-new upper bound against the alzer
/// upper bound on real `x > 1`:
///
/// ```text
/// g(x) = ln[(x + e^(1-gamma) - 1)(e^(1/(x+1)) - 1)]
/// ```
///
/// `g(x) < 0` means the sharp-new upper bound is tighter; `g` changes sign
/// between 2 and 3 and then tends to zero from above as `x -> inf`, so
/// neither upper bound dominates for all `n`.
///
/// # Errors
/// [`Error::Domain`] if `x` is not finite or `x <= 1`.
pub fn comparison_g(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::Domain { op: "comparison_g", value: x });
    }
    Ok(comparison_g_expr(x))
}

/// Domain-unchecked body of [`comparison_g`], shared with the figure
/// sampler so CSV rows reproduce the function bit for bit.
pub(crate) fn comparison_g_expr(x: f64) -> f64 {
    let t = (1.0 / (x + 1.0)).exp_m1();
    ((x + (EXP_ONE_MINUS_GAMMA - 1.0)) * t).ln()
}

/// One row of a [`crossover_scan`]: which family is tightest on each side
/// at index `n`, plus every family's slack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverRow {
    /// Harmonic index.
    pub n: u64,
    /// Family with the largest lower bound at `n` (first in
    /// [`BoundFamily::ALL`] order on exact ties).
    pub tightest_lower: BoundFamily,
    /// Family with the smallest upper bound at `n` (same tie rule).
    pub tightest_upper: BoundFamily,
    /// `H_n - lower` for each family, in [`BoundFamily::ALL`] order.
    pub lower_gaps: [f64; 3],
    /// `upper - H_n` for each family, in [`BoundFamily::ALL`] order.
    pub upper_gaps: [f64; 3],
}

/// Rank all three families at every `n = 1..=n_max`.
///
/// The returned rows expose the lower-bound crossover: alzer leads
/// sharp-new at `n = 1, 2` and falls behind from `n = 3` on, while qi-cui
/// holds the tightest lower bound throughout.
///
/// # Errors
/// [`Error::Domain`] if `n_max == 0`.
pub fn crossover_scan(n_max: u64) -> Result<Vec<CrossoverRow>> {
    if n_max == 0 {
        return Err(Error::Domain { op: "crossover_scan", value: 0.0 });
    }
    let mut ladder = HarmonicLadder::new();
    let mut rows = Vec::with_capacity(n_max.min(1 << 20) as usize);
    for n in 1..=n_max {
        let h = ladder.advance_to(n);
        let mut lower_gaps = [0.0_f64; 3];
        let mut upper_gaps = [0.0_f64; 3];
        let mut tightest_lower = BoundFamily::SharpNew;
        let mut tightest_upper = BoundFamily::SharpNew;
        let mut best_lo = f64::NEG_INFINITY;
        let mut best_hi = f64::INFINITY;
        for (i, family) in BoundFamily::ALL.iter().enumerate() {
            let iv = h_bounds(*family, n)?;
            lower_gaps[i] = h - iv.lo;
            upper_gaps[i] = iv.hi - h;
            // strict comparisons keep the earliest family on exact ties
            if iv.lo > best_lo {
                best_lo = iv.lo;
                tightest_lower = *family;
            }
            if iv.hi < best_hi {
                best_hi = iv.hi;
                tightest_upper = *family;
            }
        }
        rows.push(CrossoverRow { n, tightest_lower, tightest_upper, lower_gaps, upper_gaps });
    }
    Ok(rows)
}

/// Width of the mixed tightest enclosure, mostly useful as a quick quality
/// figure: at `n = 10` it is already below `4e-4`.
pub fn tightest_width(n: u64) -> Result<f64> {
    Ok(tightest_interval(n)?.width())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::harmonic;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    fn ulps_from(a: f64, b: f64) -> f64 {
        let u = f64::from_bits(b.abs().max(f64::MIN_POSITIVE).to_bits() + 1) - b.abs();
        (a - b).abs() / u
    }

    #[test]
    fn all_families_contain_small_harmonic_numbers() {
        for n in 1..=200u64 {
            let h = harmonic(n).unwrap();
            for family in BoundFamily::ALL {
                let iv = h_bounds(family, n).unwrap();
                assert!(
                    iv.lo <= h && h <= iv.hi,
                    "{} fails at n = {n}: [{}, {}] vs {h}",
                    family.name(),
                    iv.lo,
                    iv.hi
                );
            }
        }
    }

    #[test]
    fn sharp_new_upper_is_exact_at_one() {
        let iv = h_bounds(BoundFamily::SharpNew, 1).unwrap();
        assert!(ulps_from(iv.hi, 1.0) <= 4.0, "hi = {:e}", iv.hi - 1.0);
        assert!(close(iv.lo, 0.98268077300969724, 1e-15));
    }

    #[test]
    fn qi_cui_and_alzer_lowers_are_exact_at_one() {
        let qc = h_bounds(BoundFamily::QiCui, 1).unwrap();
        assert!(ulps_from(qc.lo, 1.0) <= 4.0);
        // upper correction at n = 1 is 1/(2 + 1/3) = 3/7
        assert!(close(qc.hi, EULER_GAMMA + 3.0 / 7.0, 1e-15));
        let al = h_bounds(BoundFamily::Alzer, 1).unwrap();
        assert!(ulps_from(al.lo, 1.0) <= 4.0);
        assert!(close(al.hi, 1.0099677944687214, 1e-14));
    }

    #[test]
    fn known_intervals_at_two() {
        let sh = h_bounds(BoundFamily::SharpNew, 2).unwrap();
        assert!(close(sh.lo, 1.4935063967756879, 1e-14));
        assert!(close(sh.hi, 1.5039338856899938, 1e-14));
        let qc = h_bounds(BoundFamily::QiCui, 2).unwrap();
        assert!(close(qc.lo, 1.4994436387832206, 1e-14));
        assert!(close(qc.hi, 1.5011320762307090, 1e-14));
        let al = h_bounds(BoundFamily::Alzer, 2).unwrap();
        assert!(close(al.lo, 1.4945681419541346, 1e-14));
        assert!(close(al.hi, 1.5045359364228561, 1e-14));
    }

    #[test]
    fn h_bounds_rejects_zero() {
        for family in BoundFamily::ALL {
            assert!(matches!(h_bounds(family, 0), Err(Error::Domain { .. })));
        }
        assert!(matches!(tightest_interval(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn lower_bound_crossover_sits_at_three() {
        let sharp2 = h_bounds(BoundFamily::SharpNew, 2).unwrap().lo;
        let alzer2 = h_bounds(BoundFamily::Alzer, 2).unwrap().lo;
        assert!(sharp2 < alzer2, "alzer still leads at n = 2");
        let sharp3 = h_bounds(BoundFamily::SharpNew, 3).unwrap().lo;
        let alzer3 = h_bounds(BoundFamily::Alzer, 3).unwrap().lo;
        assert!(sharp3 > alzer3, "sharp-new leads from n = 3");
    }

    #[test]
    fn comparison_f_known_values() {
        assert!(close(comparison_f(1.0).unwrap(), -0.017319226990302757, 1e-13));
        assert!(close(comparison_f(2.0).unwrap(), -0.0010617451784467164, 1e-12));
        assert!(close(comparison_f(3.0).unwrap(), 0.0040392135180572941, 1e-12));
        assert!(close(comparison_f(4.0).unwrap(), 0.0062733902744755924, 1e-12));
        assert!(close(comparison_f_limit(), 0.0099677944687214325, 1e-13));
    }

    #[test]
    fn comparison_f_increases_toward_its_limit_from_below() {
        let limit = comparison_f_limit();
        let mut prev = comparison_f(1.0).unwrap();
        for &x in &[1.5, 2.0, 3.0, 5.0, 10.0, 100.0, 1e4, 1e8] {
            let v = comparison_f(x).unwrap();
            assert!(v > prev, "not increasing at {x}");
            assert!(v < limit, "crossed the limit at {x}");
            prev = v;
        }
        assert!((comparison_f(1e8).unwrap() - limit).abs() < 1e-6);
    }

    #[test]
    fn comparison_f_rejects_points_left_of_one() {
        assert!(matches!(comparison_f(0.999), Err(Error::Domain { .. })));
        assert!(matches!(comparison_f(f64::NAN), Err(Error::Domain { .. })));
        assert!(comparison_f(1.0).is_ok());
    }

    #[test]
    fn comparison_g_known_values_and_sign_change() {
        assert!(close(comparison_g(2.0).unwrap(), -0.00060205073286241163, 1e-11));
        assert!(close(comparison_g(3.0).unwrap(), 0.0015307040220748830, 1e-11));
        assert!((comparison_g(1e8).unwrap()).abs() < 1e-6);
        assert!(comparison_g(1e4).unwrap() > 0.0);
    }

    #[test]
    fn comparison_g_rejects_points_up_to_one() {
        assert!(matches!(comparison_g(1.0), Err(Error::Domain { .. })));
        assert!(matches!(comparison_g(0.5), Err(Error::Domain { .. })));
        assert!(comparison_g(1.0000001).is_ok());
    }

    #[test]
    fn crossover_rows_rank_the_families() {
        let rows = crossover_scan(4).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].n, 1);
        // at n = 1 the qi-cui and alzer lower bounds tie at exactly H_1;
        // the earlier family in ALL order wins the tie
        assert_eq!(rows[0].tightest_lower, BoundFamily::QiCui);
        // the sharp-new upper bound is exact at n = 1
        assert_eq!(rows[0].tightest_upper, BoundFamily::SharpNew);
        // qi-cui holds the best lower bound from n = 2 on
        for row in &rows[1..] {
            assert_eq!(row.tightest_lower, BoundFamily::QiCui, "n = {}", row.n);
        }
        // the sharp-new/alzer flip shows up in the lower gaps:
        // at n = 2 alzer is closer, from n = 3 sharp-new is
        assert!(rows[1].lower_gaps[0] > rows[1].lower_gaps[2]);
        assert!(rows[2].lower_gaps[0] < rows[2].lower_gaps[2]);
        // every gap is a true slack
        for row in &rows {
            for g in row.lower_gaps.iter().chain(row.upper_gaps.iter()) {
                assert!(*g >= -1e-15, "n = {}", row.n);
            }
        }
    }

    #[test]
    fn crossover_scan_rejects_zero() {
        assert!(matches!(crossover_scan(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn tightest_interval_mixes_families() {
        let iv = tightest_interval(10).unwrap();
        assert!(close(iv.lo, 2.9289039564276242, 1e-13));
        assert!(close(iv.hi, 2.9289810857644310, 1e-13));
        assert!(iv.contains(harmonic(10).unwrap()));
        assert!(tightest_width(10).unwrap() < 4e-4);
        // never wider than any single family
        for family in BoundFamily::ALL {
            assert!(iv.width() <= h_bounds(family, 10).unwrap().width());
        }
    }

    #[test]
    fn family_names_are_stable() {
        assert_eq!(BoundFamily::SharpNew.name(), "sharp-new");
        assert_eq!(BoundFamily::QiCui.name(), "qi-cui");
        assert_eq!(BoundFamily::Alzer.name(), "alzer");
    }
}
