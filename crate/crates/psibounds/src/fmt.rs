//! Deterministic decimal formatting and the CSV builders behind the
//! `figure` subcommand.
//!
//! Every number the CLI prints goes through [`fmt_sig17`]: 17 significant
//! digits always round-trip a double exactly, and the fixed width makes
//! byte-identical output across runs and platforms trivial to guarantee.

use crate::error::{Error, Result};
use crate::harmonic::comparison_g_expr;

/// Format with exactly 17 significant digits.
///
/// Values whose decimal exponent lies in `[-4, 16]` render positionally
/// (`-0.57721566490153287`), everything else keeps scientific notation
/// (`1.2339708268582958e-9`).  Parsing the output back always recovers the
/// original bits.
pub fn fmt_sig17(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    // fold -0.0 into 0.0 so the sign of zero never leaks into output
    let v = if v == 0.0 { 0.0 } else { v };
    let sci = format!("{v:.16e}");
    let (mantissa, exponent) = sci.split_once('e').expect("e-format always carries an exponent");
    let e: i32 = exponent.parse().expect("exponent is a small integer");
    if !(-4..=16).contains(&e) {
        return sci;
    }
    let neg = mantissa.starts_with('-');
    let digits: Vec<u8> = mantissa.bytes().filter(|b| b.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 17);
    let mut out = String::with_capacity(24);
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let split = (e + 1) as usize;
        out.push_str(std::str::from_utf8(&digits[..split]).expect("ascii digits"));
        if split < digits.len() {
            out.push('.');
            out.push_str(std::str::from_utf8(&digits[split..]).expect("ascii digits"));
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(std::str::from_utf8(&digits).expect("ascii digits"));
    }
    out
}

/// Open-interval sampler: `points` cells over `(start, end)`, one sample at
/// each cell midpoint, so no sample ever lands on an excluded endpoint.
fn sampled_csv(start: f64, end: f64, points: usize, f: impl Fn(f64) -> f64) -> Result<String> {
    if points == 0 {
        return Err(Error::InvalidGrid { reason: "figure sampling needs at least one point" });
    }
    let h = (end - start) / points as f64;
    let mut out = String::with_capacity(42 * (points + 1));
    out.push_str("x,value\n");
    for i in 0..points {
        let x = start + (i as f64 + 0.5) * h;
        out.push_str(&fmt_sig17(x));
        out.push(',');
        out.push_str(&fmt_sig17(f(x)));
        out.push('\n');
    }
    Ok(out)
}

/// CSV of the shift function `Q` sampled across `(0, 9)`.
///
/// # Errors
/// [`Error::InvalidGrid`] if `points == 0`.
pub fn figure_q_csv(points: usize) -> Result<String> {
    sampled_csv(0.0, 9.0, points, crate::approx::q_raw)
}

/// CSV of the upper-bound comparison function `g` sampled across `(1, 29)`.
///
/// # Errors
/// [`Error::InvalidGrid`] if `points == 0`.
pub fn figure_g_csv(points: usize) -> Result<String> {
    sampled_csv(1.0, 29.0, points, comparison_g_expr)
}
