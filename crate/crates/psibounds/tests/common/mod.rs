//! Shared fixtures for the integration suites: a tiny deterministic RNG and
//! slow-but-independent reference implementations ("oracles") built from
//! series definitions rather than the asymptotic machinery the library uses.

#![allow(dead_code)]

/// SplitMix64: deterministic, seedable, no dependencies — exactly enough
/// randomness for reproducible sample points.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Compensated running sum, so the oracles' hundred-thousand-term partial
/// sums do not drown the comparison in their own roundoff.
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    fn add(&mut self, term: f64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Euler–Mascheroni constant recomputed from scratch:
/// `gamma = H_n - ln n - 1/(2n) + 1/(12n^2) - O(n^-4)` at n = 10^6, with a
/// compensated harmonic sum.  Keeps the oracles free of every library
/// constant.
pub fn oracle_gamma() -> f64 {
    use std::sync::OnceLock;
    static GAMMA: OnceLock<f64> = OnceLock::new();
    *GAMMA.get_or_init(|| {
        const N: u64 = 1_000_000;
        let mut s = Kahan::new();
        for k in 1..=N {
            s.add(1.0 / k as f64);
        }
        let n = N as f64;
        s.sum - n.ln() - 0.5 / n + 1.0 / (12.0 * n * n)
    })
}

/// Digamma from the series definition
/// `psi(x) = -gamma + sum_{j>=0} (1/(j+1) - 1/(j+x))`,
/// truncated at `N` terms with an Euler–Maclaurin tail.  Shares nothing
/// with the library's shift-plus-asymptotic-expansion evaluator beyond the
/// value of gamma itself.
pub fn oracle_digamma(x: f64) -> f64 {
    assert!(x > 0.0, "oracle_digamma needs x > 0, got {x}");
    const N: usize = 100_000;
    let n = N as f64;
    let mut s = Kahan::new();
    for j in 0..N {
        let j = j as f64;
        s.add(1.0 / (j + 1.0) - 1.0 / (j + x));
    }
    // tail: integral + trapezoid + first derivative correction
    let tail = ((n + x) / (n + 1.0)).ln()
        + 0.5 * (1.0 / (n + 1.0) - 1.0 / (n + x))
        + (1.0 / 12.0) * (1.0 / ((n + 1.0) * (n + 1.0)) - 1.0 / ((n + x) * (n + x)));
    -oracle_gamma() + s.sum + tail
}

/// Polygamma of order `1 <= k <= 4` from the Hurwitz-zeta series
/// `psi^(k)(x) = (-1)^(k+1) k! sum_{j>=0} (x+j)^-(k+1)`,
/// truncated with an Euler–Maclaurin tail at `m = x + M`.
pub fn oracle_polygamma(k: u32, x: f64) -> f64 {
    assert!((1..=4).contains(&k), "oracle_polygamma supports k = 1..4, got {k}");
    assert!(x > 0.0, "oracle_polygamma needs x > 0, got {x}");
    const M: usize = 100_000;
    let kf = k as f64;
    let mut s = Kahan::new();
    for j in 0..M {
        s.add((x + j as f64).powi(-(k as i32 + 1)));
    }
    let m = x + M as f64;
    let tail = m.powi(-(k as i32)) / kf
        + 0.5 * m.powi(-(k as i32 + 1))
        + (kf + 1.0) / 12.0 * m.powi(-(k as i32 + 2))
        - (kf + 1.0) * (kf + 2.0) * (kf + 3.0) / 720.0 * m.powi(-(k as i32 + 4));
    let factorial: f64 = (1..=k).map(f64::from).product();
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    sign * factorial * (s.sum + tail)
}

/// Exact harmonic number as a reduced u128 fraction, for small `n`.
/// Collapses to f64 only in the final division.
pub fn harmonic_rational(n: u64) -> f64 {
    assert!((1..=30).contains(&n), "harmonic_rational supports n = 1..30, got {n}");
    let mut num: u128 = 0;
    let mut den: u128 = 1;
    for k in 1..=n as u128 {
        // num/den + 1/k
        num = num * k + den;
        den *= k;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num as f64 / den as f64
}

fn gcd(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Relative-or-absolute closeness helper shared by the suites.
pub fn close(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol * expected.abs().max(1.0)
}
