//! Argument parsing, report building and exit codes for the `disc2` binary.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use disc2::classify::{classify_cubic, lagrange_roots_with_tol, LAGRANGE_TOL};
use disc2::disc::{self, durand_kerner, eval_complex, residual_scale, MonicPoly, DK_MAX_ITER, DK_TOL};
use disc2::mpoly::Var;
use disc2::verify::{self, Check, SuiteConfig};
use disc2::{Error, MPoly, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "disc2", version, about = "Exact first and second discriminants of polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// D1, D2 and deg(F, x) of a concrete polynomial.
    Compute {
        #[command(flatten)]
        input: CoeffArgs,
        /// Also report E / D2^2.
        #[arg(long)]
        e_ratio: bool,
    },
    /// A generic construction in the symbols a0..a(n-1), in canonical text form.
    Symbolic {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Quantity::D2)]
        quantity: Quantity,
        /// Largest accepted n (default 5, or 7 for H).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Configuration class of a real cubic from the signs of (D1, D2).
    Classify {
        #[command(flatten)]
        input: CoeffArgs,
    },
    /// Numeric roots: by radicals for cubics, by Durand-Kerner iteration otherwise.
    Roots {
        #[command(flatten)]
        input: CoeffArgs,
        /// Relative residual tolerance (default 1e-9 by radicals, 1e-12 iterative).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Randomized cross-checks; one JSON report per trial.
    Verify {
        /// Degrees to test, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Checks to run, comma separated (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Bound on numerators and denominators of random roots.
        #[arg(long, default_value_t = 10)]
        bound: u32,
        /// Generic instances per planted one.
        #[arg(long, default_value_t = 4)]
        ratio: usize,
        /// Include per-check wall-clock times (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    /// Ascending coefficients including the leading one, e.g. "0,3,-4,1" for x^3 - 4x^2 + 3x.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Quantity {
    D1,
    D2,
    H,
    F,
    E,
    G,
}

impl Quantity {
    fn default_cap(self) -> usize {
        match self {
            Quantity::H | Quantity::D1 => 7,
            _ => 5,
        }
    }
}

/// What a command prints, and the process exit code.
#[derive(Debug, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

/// A failure with its exit code.
#[derive(Debug, PartialEq)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::DegreeTooSmall { .. }
            | Error::WrongDegree(_)
            | Error::CapExceeded { .. }
            | Error::TooManySymbols { .. }
            | Error::BadInput(_)
            | Error::NotNumeric
            | Error::DivisionByZero => EXIT_BAD_INPUT,
            _ => EXIT_CHECK_FAILED,
        };
        Failure { message: e.to_string(), code }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure { message: message.into(), code: EXIT_BAD_INPUT }
}

/// Parses `"p/q, p, ..."` (ascending, leading coefficient last) and divides
/// through by the leading coefficient.
pub fn parse_coeffs(text: &str) -> Result<(MonicPoly, Vec<String>), Failure> {
    let full: Vec<Rational> = text
        .split(',')
        .map(|c| c.trim().parse::<Rational>().map_err(|_| bad_input(format!("cannot parse coefficient {:?}", c.trim()))))
        .collect::<Result<_, _>>()?;
    let (f, lead) = MonicPoly::normalize(&full)?;
    let notices = lead.map(|l| format!("divided by leading coefficient {l} to make the polynomial monic")).into_iter().collect();
    Ok((f, notices))
}

fn constant(p: MPoly) -> Result<Rational, Failure> {
    p.constant_value().ok_or_else(|| Failure { message: format!("expected a number, got {p}"), code: EXIT_CHECK_FAILED })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub d1_sign: i8,
    pub d2_sign: i8,
    pub configuration: String,
    pub description: String,
}

/// The JSON object printed by `compute`, `classify` and `roots`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub monic_coeffs: Vec<Rational>,
    #[serde(rename = "D1", skip_serializing_if = "Option::is_none", default)]
    pub d1: Option<Rational>,
    #[serde(rename = "D2", skip_serializing_if = "Option::is_none", default)]
    pub d2: Option<Rational>,
    #[serde(rename = "F_degree", skip_serializing_if = "Option::is_none", default)]
    pub f_degree: Option<u32>,
    #[serde(rename = "E_ratio", skip_serializing_if = "Option::is_none", default)]
    pub e_ratio: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classification: Option<ClassReport>,
    /// `[re, im]` pairs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub roots: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residuals: Option<Vec<f64>>,
    pub notices: Vec<String>,
}

impl Report {
    fn new(f: &MonicPoly, notices: Vec<String>) -> Self {
        Report {
            n: f.degree(),
            monic_coeffs: f.rational_coeffs().expect("numeric input"),
            d1: None,
            d2: None,
            f_degree: None,
            e_ratio: None,
            classification: None,
            roots: None,
            residuals: None,
            notices,
        }
    }

    fn text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("n".into(), self.n.to_string())];
        let coeffs: Vec<String> = self.monic_coeffs.iter().map(ToString::to_string).collect();
        rows.push(("monic_coeffs".into(), coeffs.join(", ")));
        if let Some(v) = &self.d1 {
            rows.push(("D1".into(), v.to_string()));
        }
        if let Some(v) = &self.d2 {
            rows.push(("D2".into(), v.to_string()));
        }
        if let Some(v) = self.f_degree {
            rows.push(("F_degree".into(), v.to_string()));
        }
        if let Some(v) = &self.e_ratio {
            rows.push(("E_ratio".into(), v.to_string()));
        }
        if let Some(c) = &self.classification {
            rows.push(("signs".into(), format!("({:+}, {:+})", c.d1_sign, c.d2_sign)));
            rows.push(("classification".into(), c.configuration.clone()));
            rows.push(("description".into(), c.description.clone()));
        }
        if let (Some(roots), Some(res)) = (&self.roots, &self.residuals) {
            for (i, (r, e)) in roots.iter().zip(res).enumerate() {
                rows.push((format!("root {}", i + 1), format!("{:+.12} {:+.12}i  (residual {e:.1e})", r[0], r[1])));
            }
        }
        for n in &self.notices {
            rows.push(("notice".into(), n.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

/// The object printed by `symbolic`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolicReport {
    pub n: usize,
    pub quantity: String,
    pub polynomial: String,
    pub terms: usize,
    pub total_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_in_x: Option<u32>,
}

fn render<T: Serialize>(value: &T, format: Format, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Text => text(),
    }
}

fn compute(input: &CoeffArgs, e_ratio: bool, format: Format) -> Result<Output, Failure> {
    let (f, notices) = parse_coeffs(&input.coeffs)?;
    let mut report = Report::new(&f, notices);
    report.d1 = Some(constant(disc::d1(&f)?)?);
    let d2 = constant(disc::d2_via_h(&f)?)?;
    let big_f = disc::big_f(&f)?;
    report.f_degree = Some(big_f.degree_in(Var::X));
    if e_ratio {
        if d2.is_zero() {
            report.notices.push("E / D2^2 is undefined because D2 = 0".into());
        } else {
            let e = constant(disc::big_e_from_f(&f, &big_f)?)?;
            report.e_ratio = Some(&e / &(&d2 * &d2));
        }
    }
    report.d2 = Some(d2);
    Ok(Output { stdout: render(&report, format, || report.text()), code: EXIT_OK })
}

fn symbolic(n: usize, quantity: Quantity, cap: Option<usize>, format: Format) -> Result<Output, Failure> {
    let cap = cap.unwrap_or(quantity.default_cap());
    if n > cap {
        return Err(Error::CapExceeded { n, cap }.into());
    }
    let f = MonicPoly::generic(n)?;
    let p = match quantity {
        Quantity::D1 => disc::d1(&f)?,
        Quantity::D2 => disc::d2_via_h(&f)?,
        Quantity::H => disc::build_h(&f)?,
        Quantity::F => disc::big_f(&f)?,
        Quantity::E => disc::big_e(&f)?,
        Quantity::G => disc::big_g(&f)?,
    };
    let name = format!("{quantity:?}");
    let report = SymbolicReport {
        n,
        quantity: name.clone(),
        polynomial: p.to_string(),
        terms: p.term_count(),
        total_degree: p.total_degree(),
        degree_in_x: p.involves(Var::X).then(|| p.degree_in(Var::X)),
    };
    let text = || {
        let mut s = format!("{name} for n = {n}: {} terms, total degree {}", report.terms, report.total_degree);
        if let Some(d) = report.degree_in_x {
            s += &format!(", degree {d} in x");
        }
        s + "\n" + &report.polynomial + "\n"
    };
    Ok(Output { stdout: render(&report, format, text), code: EXIT_OK })
}

fn class_report(f: &MonicPoly) -> Result<ClassReport, Failure> {
    let class = classify_cubic(f)?;
    Ok(ClassReport {
        d1_sign: class.d1_sign,
        d2_sign: class.d2_sign,
        configuration: class.configuration.key().into(),
        description: class.configuration.description().into(),
    })
}

fn classify(input: &CoeffArgs, format: Format) -> Result<Output, Failure> {
    let (f, notices) = parse_coeffs(&input.coeffs)?;
    let mut report = Report::new(&f, notices);
    report.classification = Some(class_report(&f)?);
    report.d1 = Some(constant(disc::d1(&f)?)?);
    report.d2 = Some(constant(disc::d2_via_h(&f)?)?);
    let lag = lagrange_roots_with_tol(&f, LAGRANGE_TOL)?;
    report.roots = Some(lag.roots.iter().map(|z| [z.re, z.im]).collect());
    report.residuals = Some(lag.residuals.to_vec());
    Ok(Output { stdout: render(&report, format, || report.text()), code: EXIT_OK })
}

fn roots(input: &CoeffArgs, tol: Option<f64>, format: Format) -> Result<Output, Failure> {
    let (f, mut notices) = parse_coeffs(&input.coeffs)?;
    let mut report = Report::new(&f, vec![]);
    if f.degree() == 3 {
        let lag = lagrange_roots_with_tol(&f, tol.unwrap_or(LAGRANGE_TOL))?;
        report.roots = Some(lag.roots.iter().map(|z| [z.re, z.im]).collect());
        report.residuals = Some(lag.residuals.to_vec());
        notices.push("roots by radicals".into());
    } else {
        let z = durand_kerner(&f, tol.unwrap_or(DK_TOL), DK_MAX_ITER)?;
        let a: Vec<f64> = report.monic_coeffs.iter().map(Rational::to_f64).collect();
        report.residuals = Some(z.iter().map(|&r| eval_complex(&a, r).norm()).collect());
        report.roots = Some(z.iter().map(|r| [r.re, r.im]).collect());
        notices.push(format!("roots by Durand-Kerner iteration; residual scale {}", residual_scale(&a)));
    }
    report.notices = notices;
    Ok(Output { stdout: render(&report, format, || report.text()), code: EXIT_OK })
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    n: &[usize],
    trials: usize,
    seed: u64,
    checks: &[String],
    bound: u32,
    ratio: usize,
    timings: bool,
    format: Format,
) -> Result<Output, Failure> {
    let checks: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.iter().map(|c| c.parse::<Check>()).collect::<Result<_, _>>()?
    };
    if bound == 0 {
        return Err(bad_input("--bound must be at least 1"));
    }
    let cfg = SuiteConfig { degrees: n.to_vec(), trials, seed, checks, bound, ratio, timings };
    let reports = verify::run_suite(&cfg)?;
    let ok = reports.iter().all(|r| r.passed());
    let stdout = match format {
        Format::Json => verify::to_ndjson(&reports),
        Format::Text => {
            let mut s = String::new();
            for (n, (total, failed, cs)) in verify::summarize(&reports) {
                let cs: Vec<String> = cs.iter().map(ToString::to_string).collect();
                s += &format!("n = {n}: {total} trials, {failed} failed, E/D2^2 = [{}]\n", cs.join(", "));
            }
            for r in reports.iter().filter(|r| !r.passed()) {
                for c in r.checks.iter().filter(|c| !c.pass) {
                    s += &format!(
                        "FAIL n = {} trial {} {}: {}\n",
                        r.n,
                        r.trial,
                        c.check,
                        c.detail.as_deref().unwrap_or("")
                    );
                }
            }
            s
        }
    };
    Ok(Output { stdout, code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED } })
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Compute { input, e_ratio } => compute(input, *e_ratio, format),
        Command::Symbolic { n, quantity, cap } => symbolic(*n, *quantity, *cap, format),
        Command::Classify { input } => classify(input, format),
        Command::Roots { input, tol } => roots(input, *tol, format),
        Command::Verify { n, trials, seed, checks, bound, ratio, timings } => {
            verify_cmd(n, *trials, *seed, checks, *bound, *ratio, *timings, format)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("disc2").chain(args.iter().copied())).unwrap()
    }

    fn report(args: &[&str]) -> Report {
        let out = run(&cli(args)).unwrap();
        assert_eq!(out.code, EXIT_OK);
        serde_json::from_str(&out.stdout).unwrap()
    }

    fn q(v: i64) -> Option<Rational> {
        Some(Rational::from(v))
    }

    #[test]
    fn compute_examples() {
        let r = report(&["compute", "--coeffs", "0,3,-4,1"]);
        assert_eq!((r.d1, r.d2, r.f_degree), (q(36), q(20), Some(2)));
        let r = report(&["compute", "--coeffs", "0,-1,0,1"]);
        assert_eq!((r.d1, r.d2), (q(4), q(0)));
        let r = report(&["compute", "--coeffs", "0,0,0,2"]);
        assert_eq!((r.d1, r.d2), (q(0), q(0)));
        assert_eq!(r.monic_coeffs, vec![Rational::zero(); 3]);
        assert_eq!(r.notices.len(), 1);
    }

    #[test]
    fn e_ratio_is_reported() {
        let r = report(&["compute", "--coeffs", "0,3,-4,1", "--e-ratio"]);
        assert_eq!(r.e_ratio, Some("1/64".parse().unwrap()));
    }

    #[test]
    fn bad_inputs_exit_2() {
        for args in [
            &["compute", "--coeffs", "1,x,1"][..],
            &["compute", "--coeffs", "1,2,0"],
            &["compute", "--coeffs", "1,2,1"],
            &["classify", "--coeffs", "1,1,1,1,1"],
            &["symbolic", "--n", "6"],
            &["symbolic", "--n", "2"],
            &["verify", "--checks", "nonsense"],
        ] {
            assert_eq!(run(&cli(args)).unwrap_err().code, EXIT_BAD_INPUT, "{args:?}");
        }
    }

    #[test]
    fn symbolic_examples() {
        let out = run(&cli(&["symbolic", "--n", "3"])).unwrap();
        let r: SymbolicReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(r.polynomial, "-2*a2^3 + 9*a1*a2 - 27*a0");
        let out = run(&cli(&["symbolic", "--n", "7", "--quantity", "h"])).unwrap();
        let r: SymbolicReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(r.degree_in_x, Some(15));
    }

    #[test]
    fn classify_examples() {
        let r = report(&["classify", "--coeffs", "0,-1,0,1"]);
        let c = r.classification.unwrap();
        assert_eq!((c.d1_sign, c.d2_sign, c.configuration.as_str()), (1, 0, "three-real-progression"));
        let r = report(&["classify", "--coeffs", "0,1,0,1"]);
        let c = r.classification.unwrap();
        assert_eq!((c.d1_sign, c.d2_sign), (-1, 0));
        let r = report(&["classify", "--coeffs", "0,0,0,1"]);
        assert_eq!(r.classification.unwrap().configuration, "triple-root");
    }

    #[test]
    fn roots_any_degree() {
        let r = report(&["roots", "--coeffs", "-1,0,0,0,1"]);
        assert_eq!(r.roots.unwrap().len(), 4);
        assert!(r.residuals.unwrap().iter().all(|&e| e < 1e-10));
    }

    #[test]
    fn json_roundtrip_recomputes() {
        let first = report(&["compute", "--coeffs", "1/2,-3,5/7,2,4"]);
        let again: Vec<String> =
            first.monic_coeffs.iter().map(ToString::to_string).chain(["1".to_string()]).collect();
        let second = report(&["compute", "--coeffs", &again.join(",")]);
        assert_eq!((first.d1, first.d2, first.f_degree), (second.d1, second.d2, second.f_degree));
        assert!(second.notices.is_empty());
    }

    #[test]
    fn text_format() {
        let out = run(&cli(&["--format", "text", "compute", "--coeffs", "0,3,-4,1"])).unwrap();
        assert!(out.stdout.contains("D2"));
        assert!(out.stdout.lines().any(|l| l.starts_with("D1") && l.ends_with("36")));
    }
}
