//! Command-line front end for the psi/harmonic bounds library: point
//! evaluation, bound queries, shift inversion, verification sweeps, the
//! crossover comparison table, and CSV figure reproduction.
//!
//! Exit codes: 0 success, 1 verification found violations, 2 usage errors,
//! 3 domain errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use psibounds::{
    comparison_f, comparison_f_limit, comparison_g, crossover_scan, default_cm_grid, digamma,
    fmt_sig17, h_bounds, harmonic, legacy_psi_bounds, point_for_shift, polygamma, psi_bounds,
    q_kth_derivative, shift_for_point, tightest_interval, verify_complete_monotonicity,
    verify_inequality, BoundFamily, Error, GridSpec, InequalityId, Spacing, VerificationReport,
};

#[derive(Parser)]
#[command(name = "psibounds", about = "Sharp psi and harmonic-number bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function at a point.
    Eval {
        /// One of: digamma, polygamma, harmonic, q, qd.
        function: String,
        /// Abscissa (a positive integer for `harmonic`).
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Derivative order: defaults to 0 for polygamma, 1 for qd;
        /// rejected elsewhere.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Print two-sided bounds with the true value and both margins.
    Bounds {
        /// What to bound: psi or harmonic.
        target: String,
        /// Abscissa (x > 0 for psi, integer n >= 1 for harmonic).
        #[arg(allow_hyphen_values = true)]
        arg: String,
        /// psi: sharp|legacy|all; harmonic: sharp|qicui|alzer|all|tightest.
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Map a point to its exact shift, or a shift back to its point.
    Invert {
        /// Point x > 0: prints the shift that makes the family exact there.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Shift in (1/2, e^-gamma): prints the unique matching point.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
    },
    /// Run verification sweeps and print one report line per check.
    Verify {
        /// An inequality id (see `verify --help`), `all`, or `cm`.
        check: String,
        /// Grid override as start:end:count:lin|log.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Highest derivative order for `cm` (default 8).
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Print the comparison constants and the bound-crossover table.
    Compare {
        /// Largest harmonic index in the table.
        #[arg(long, default_value_t = 10)]
        nmax: u64,
    },
    /// Emit figure data as CSV (to stdout unless --out is given).
    Figure {
        /// Which figure: q (the shift function on (0,9)) or g (the
        /// comparison function on (1,29)).
        which: String,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sample count (default 901 for q, 2801 for g).
        #[arg(long)]
        points: Option<usize>,
    },
}

/// Anything a subcommand can fail with, pre-sorted into exit codes.
enum Failure {
    /// Malformed request: bad flag combination, unparseable number. Exit 2.
    Usage(String),
    /// The library rejected the values. Exit 2 for malformed grids,
    /// 3 for domain violations.
    Lib(Error),
    /// I/O while writing an output file. Exit 3.
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidGrid { .. } => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Eval { function, x, order } => eval(&function, &x, order),
        Command::Bounds { target, arg, family } => bounds(&target, &arg, &family),
        Command::Invert { x, a } => invert(x.as_deref(), a.as_deref()),
        Command::Verify { check, grid, kmax } => verify(&check, grid.as_deref(), kmax),
        Command::Compare { nmax } => compare(nmax),
        Command::Figure { which, out, points } => figure(&which, out.as_deref(), points),
    }
}

fn parse_f64(text: &str, what: &str) -> Result<f64, Failure> {
    text.parse::<f64>().map_err(|_| usage(format!("{what} is not a number: `{text}`")))
}

fn parse_index(text: &str, what: &str) -> Result<u64, Failure> {
    text.parse::<u64>().map_err(|_| usage(format!("{what} is not a positive integer: `{text}`")))
}

fn eval(function: &str, x: &str, order: Option<u32>) -> Result<ExitCode, Failure> {
    let value = match function {
        "digamma" => {
            reject_order(function, order)?;
            digamma(parse_f64(x, "x")?)?
        }
        "polygamma" => polygamma(order.unwrap_or(0), parse_f64(x, "x")?)?,
        "harmonic" => {
            reject_order(function, order)?;
            harmonic(parse_index(x, "n")?)?
        }
        "q" => {
            reject_order(function, order)?;
            psibounds::q_function(parse_f64(x, "x")?)?
        }
        "qd" => q_kth_derivative(order.unwrap_or(1), parse_f64(x, "x")?)?,
        other => return Err(usage(format!("unknown function `{other}`"))),
    };
    println!("{}", fmt_sig17(value));
    Ok(ExitCode::SUCCESS)
}

fn reject_order(function: &str, order: Option<u32>) -> Result<(), Failure> {
    if order.is_some() {
        return Err(usage(format!("--order does not apply to `{function}`")));
    }
    Ok(())
}

/// One `label lo hi value margin margin` bounds row.
fn bounds_row(label: &str, lo: f64, hi: f64, value: f64) -> String {
    format!(
        "{label} lo={} hi={} value={} lower_margin={} upper_margin={}",
        fmt_sig17(lo),
        fmt_sig17(hi),
        fmt_sig17(value),
        fmt_sig17(value - lo),
        fmt_sig17(hi - value),
    )
}

fn bounds(target: &str, arg: &str, family: &str) -> Result<ExitCode, Failure> {
    match target {
        "psi" => {
            let x = parse_f64(arg, "x")?;
            let value = digamma(x)?;
            let mut rows = Vec::new();
            if family == "sharp" || family == "all" {
                let iv = psi_bounds(x)?;
                rows.push(bounds_row("sharp", iv.lo, iv.hi, value));
            }
            if family == "legacy" || family == "all" {
                let iv = legacy_psi_bounds(x)?;
                rows.push(bounds_row("legacy", iv.lo, iv.hi, value));
            }
            if rows.is_empty() {
                return Err(usage(format!("psi bounds take --family sharp|legacy|all, got `{family}`")));
            }
            for row in rows {
                println!("{row}");
            }
        }
        "harmonic" => {
            let n = parse_index(arg, "n")?;
            let value = harmonic(n)?;
            let chosen: Vec<BoundFamily> = match family {
                "sharp" => vec![BoundFamily::SharpNew],
                "qicui" => vec![BoundFamily::QiCui],
                "alzer" => vec![BoundFamily::Alzer],
                "all" => BoundFamily::ALL.to_vec(),
                "tightest" => {
                    let iv = tightest_interval(n)?;
                    println!("{}", bounds_row("tightest", iv.lo, iv.hi, value));
                    return Ok(ExitCode::SUCCESS);
                }
                other => {
                    return Err(usage(format!(
                        "harmonic bounds take --family sharp|qicui|alzer|all|tightest, got `{other}`"
                    )))
                }
            };
            for fam in chosen {
                let iv = h_bounds(fam, n)?;
                println!("{}", bounds_row(fam.name(), iv.lo, iv.hi, value));
            }
        }
        other => return Err(usage(format!("unknown bounds target `{other}`"))),
    }
    Ok(ExitCode::SUCCESS)
}

fn invert(x: Option<&str>, a: Option<&str>) -> Result<ExitCode, Failure> {
    let value = match (x, a) {
        (Some(x), None) => shift_for_point(parse_f64(x, "x")?)?,
        (None, Some(a)) => point_for_shift(parse_f64(a, "a")?)?,
        _ => return Err(usage("invert needs exactly one of --x or --a")),
    };
    println!("{}", fmt_sig17(value));
    Ok(ExitCode::SUCCESS)
}

fn parse_grid(text: &str) -> Result<GridSpec, Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, end, count, spacing] = parts.as_slice() else {
        return Err(usage(format!("--grid wants start:end:count:lin|log, got `{text}`")));
    };
    let spacing = match *spacing {
        "lin" => Spacing::Linear,
        "log" => Spacing::Logarithmic,
        other => return Err(usage(format!("grid spacing must be lin or log, got `{other}`"))),
    };
    let count = count
        .parse::<usize>()
        .map_err(|_| usage(format!("grid count is not an integer: `{count}`")))?;
    Ok(GridSpec::new(parse_f64(start, "grid start")?, parse_f64(end, "grid end")?, count, spacing)?)
}

fn report_line(r: &VerificationReport) -> String {
    format!(
        "{} points={} violations={} disagreements={} min_margin={} argmin={} {}",
        r.id,
        r.points_checked,
        r.violations.len(),
        r.disagreements.len(),
        fmt_sig17(r.min_margin),
        fmt_sig17(r.argmin_x),
        if r.passed() { "PASS" } else { "FAIL" },
    )
}

fn verify(check: &str, grid: Option<&str>, kmax: Option<u32>) -> Result<ExitCode, Failure> {
    let reports: Vec<VerificationReport> = match check {
        "all" => {
            if grid.is_some() || kmax.is_some() {
                return Err(usage("verify all runs every check on its default grid; drop --grid/--kmax"));
            }
            InequalityId::ALL
                .iter()
                .map(|&id| verify_inequality(id, &id.default_grid()))
                .collect::<Result<_, _>>()?
        }
        "cm" => {
            let g = match grid {
                Some(text) => parse_grid(text)?,
                None => default_cm_grid(),
            };
            verify_complete_monotonicity(kmax.unwrap_or(8), &g)?
        }
        name => {
            let Some(id) = InequalityId::parse(name) else {
                return Err(usage(format!("unknown check `{name}`")));
            };
            if kmax.is_some() {
                return Err(usage("--kmax only applies to `verify cm`"));
            }
            let g = match grid {
                Some(text) => parse_grid(text)?,
                None => id.default_grid(),
            };
            vec![verify_inequality(id, &g)?]
        }
    };
    let mut all_pass = true;
    for r in &reports {
        println!("{}", report_line(r));
        all_pass &= r.passed();
    }
    println!("result: {}", if all_pass { "PASS" } else { "FAIL" });
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn compare(nmax: u64) -> Result<ExitCode, Failure> {
    println!("f(1) = {}", fmt_sig17(comparison_f(1.0)?));
    println!("f(2) = {}", fmt_sig17(comparison_f(2.0)?));
    println!("f(3) = {}", fmt_sig17(comparison_f(3.0)?));
    println!("f(limit) = {}", fmt_sig17(comparison_f_limit()));
    println!("g(2) = {}", fmt_sig17(comparison_g(2.0)?));
    println!("g(3) = {}", fmt_sig17(comparison_g(3.0)?));
    println!("families: {} {} {}", BoundFamily::ALL[0].name(), BoundFamily::ALL[1].name(), BoundFamily::ALL[2].name());
    for row in crossover_scan(nmax)? {
        let gaps = |g: &[f64; 3]| {
            format!("{} {} {}", fmt_sig17(g[0]), fmt_sig17(g[1]), fmt_sig17(g[2]))
        };
        println!(
            "n={} tightest_lower={} tightest_upper={} lower_gaps=[{}] upper_gaps=[{}]",
            row.n,
            row.tightest_lower.name(),
            row.tightest_upper.name(),
            gaps(&row.lower_gaps),
            gaps(&row.upper_gaps),
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn figure(which: &str, out: Option<&std::path::Path>, points: Option<usize>) -> Result<ExitCode, Failure> {
    let csv = match which {
        "q" => psibounds::figure_q_csv(points.unwrap_or(901))?,
        "g" => psibounds::figure_g_csv(points.unwrap_or(2801))?,
        other => return Err(usage(format!("unknown figure `{other}`"))),
    };
    match out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
