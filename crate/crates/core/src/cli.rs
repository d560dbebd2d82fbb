//! Command-line driver. Exit status: 0 on success, 1 on expected failures
//! (bad input, degenerate parametrizations), 2 on internal invariant
//! violations.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::curve::{curve_implicitize, mu_basis_curve, verify_curve_implicit, CurveParam};
use crate::error::{Error, Result};
use crate::exact_poly::{BiPoly, Rat};
use crate::expr_io::report::{DegreesEntry, Report};
use crate::expr_io::{parse_mpoly, parse_poly, Frame};
use crate::ruled::{degree_formula, mu_basis_surface, normalize, pluecker_all, surface_implicitize, verify_implicit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Pluecker,
    MubasisCurve,
    MubasisSurface,
    ImplicitizeCurve,
    ImplicitizeSurface,
    Degrees,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Pluecker => "pluecker",
            Command::MubasisCurve => "mubasis-curve",
            Command::MubasisSurface => "mubasis-surface",
            Command::ImplicitizeCurve => "implicitize-curve",
            Command::ImplicitizeSurface => "implicitize-surface",
            Command::Degrees => "degrees",
            Command::Verify => "verify",
        }
    }

    /// Allowed numbers of input polynomials.
    pub fn arities(self) -> &'static [usize] {
        match self {
            Command::MubasisCurve | Command::ImplicitizeCurve => &[3],
            Command::Pluecker | Command::MubasisSurface | Command::ImplicitizeSurface | Command::Degrees => &[4],
            Command::Verify => &[4, 5],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Output {
    #[default]
    Text,
    Json,
}

/// A fully resolved invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub inputs: Vec<String>,
    pub seed: u64,
    pub output: Output,
    pub frame: Frame,
}

#[derive(Debug, Parser)]
#[command(name = "mubasis", version, about = "μ-bases and implicit equations of rational curves and ruled surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Polynomials: three in s for curve commands, four in s and t for surface
    /// commands; `verify` takes the implicit polynomial first.
    inputs: Vec<String>,
    /// Read the polynomials from a file, one per line ('#' starts a comment).
    #[arg(long, conflicts_with = "inputs")]
    file: Option<PathBuf>,
    #[arg(long, env = "MUBASIS_SEED", default_value_t = 0)]
    seed: u64,
    /// Emit the JSON report.
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long, value_enum, default_value_t = Frame::Original)]
    frame: Frame,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Normalized Plücker coordinates of a ruled surface.
    Pluecker(Common),
    /// μ-basis of a planar curve.
    MubasisCurve(Common),
    /// μ-basis of a ruled surface.
    MubasisSurface(Common),
    /// Implicit equation of a planar curve.
    ImplicitizeCurve(Common),
    /// Implicit equation of a ruled surface.
    ImplicitizeSurface(Common),
    /// Degree data of a ruled surface.
    Degrees(Common),
    /// Check that an implicit polynomial vanishes on a parametrization.
    Verify(Common),
}

/// Parses the file format: one polynomial per line, `#` comments, blank lines ignored.
pub fn read_input_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

impl CliConfig {
    fn from_cli(cli: Cli) -> Result<Self> {
        let (command, common) = match cli.command {
            Sub::Pluecker(c) => (Command::Pluecker, c),
            Sub::MubasisCurve(c) => (Command::MubasisCurve, c),
            Sub::MubasisSurface(c) => (Command::MubasisSurface, c),
            Sub::ImplicitizeCurve(c) => (Command::ImplicitizeCurve, c),
            Sub::ImplicitizeSurface(c) => (Command::ImplicitizeSurface, c),
            Sub::Degrees(c) => (Command::Degrees, c),
            Sub::Verify(c) => (Command::Verify, c),
        };
        let inputs = match &common.file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
                read_input_lines(&text)
            }
            None => common.inputs,
        };
        let output = if common.json { Output::Json } else { common.output };
        let config = Self { command, inputs, seed: common.seed, output, frame: common.frame };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let allowed = self.command.arities();
        if !allowed.contains(&self.inputs.len()) {
            let want: Vec<String> = allowed.iter().map(usize::to_string).collect();
            return Err(Error::Input(format!(
                "arity error: {} expects {} polynomials, got {}",
                self.command.name(),
                want.join(" or "),
                self.inputs.len()
            )));
        }
        Ok(())
    }
}

fn parse_all(inputs: &[String]) -> Result<Vec<BiPoly>> {
    inputs.iter().enumerate().map(|(i, s)| parse_poly(s).map_err(|e| Error::Input(format!("input {i}: {e}")))).collect()
}

fn parse_surface(inputs: &[String]) -> Result<[BiPoly; 4]> {
    let v = parse_all(inputs)?;
    v.try_into().map_err(|_| Error::Input("expected four polynomials".into()))
}

fn parse_curve(inputs: &[String]) -> Result<CurveParam> {
    let v = parse_all(inputs)?;
    let mut affine: [Vec<Rat>; 3] = Default::default();
    for (i, p) in v.iter().enumerate() {
        if p.degree_in(1).unwrap_or(0) > 0 {
            return Err(Error::Input(format!("input {i}: curve inputs must be polynomials in s only")));
        }
        let deg = p.degree_in(0).unwrap_or(0) as usize;
        let mut c = vec![Rat::zero(); deg + 1];
        for (m, coef) in p.terms() {
            c[m.0[0] as usize] = coef.clone();
        }
        affine[i] = c;
    }
    CurveParam::from_affine(&affine)
}

fn curve_degrees(c: &CurveParam, mu: (usize, usize)) -> DegreesEntry {
    DegreesEntry {
        n: Some(c.degree()),
        gcd_degree: c.gcd().degree().unwrap(),
        degree_formula: c.reduced_degree(),
        mu: [mu.0, mu.1],
        ..Default::default()
    }
}

/// Runs one command and builds its report.
pub fn execute(config: &CliConfig) -> Result<Report> {
    config.validate()?;
    let seed = config.seed;
    let name = config.command.name();
    match config.command {
        Command::MubasisCurve => {
            let c = parse_curve(&config.inputs)?;
            let b = mu_basis_curve(&c)?;
            Ok(Report::new(name).with_mu_basis(&[&b.p, &b.q]).with_degrees(curve_degrees(&c, (b.mu1, b.mu2))))
        }
        Command::ImplicitizeCurve => {
            let c = parse_curve(&config.inputs)?;
            let b = mu_basis_curve(&c)?;
            let r = curve_implicitize(&c, seed)?;
            let mut d = curve_degrees(&c, (b.mu1, b.mu2));
            d.implicit_degree = Some(r.hypersurface_degree);
            d.k = Some(r.k);
            Ok(Report::new(name).with_mu_basis(&[&b.p, &b.q]).with_implicit(&r, Frame::Original).with_degrees(d))
        }
        Command::Pluecker => {
            let raw = parse_surface(&config.inputs)?;
            let (p, rec) = normalize(&raw, seed)?;
            Ok(Report::new(name).with_pluecker(&pluecker_all(&p)).with_normalization(&rec))
        }
        Command::MubasisSurface | Command::ImplicitizeSurface | Command::Degrees => {
            let raw = parse_surface(&config.inputs)?;
            let (p, rec) = normalize(&raw, seed)?;
            let pl = pluecker_all(&p);
            let formula = degree_formula(&p)?;
            let b = mu_basis_surface(&p)?;
            if b.mu1 + b.mu2 != formula {
                return Err(Error::Internal(format!(
                    "μ1 + μ2 = {} differs from the degree formula {formula}",
                    b.mu1 + b.mu2
                )));
            }
            let mut d = DegreesEntry {
                n0: Some(p.n0()),
                n1: Some(p.n1()),
                gcd_degree: p.n0() + p.n1() - formula,
                degree_formula: formula,
                mu: [b.mu1, b.mu2],
                ..Default::default()
            };
            let mut report = Report::new(name).with_normalization(&rec).with_pluecker(&pl);
            if config.command != Command::MubasisSurface {
                let r = surface_implicitize(&p, &rec, seed)?;
                if !verify_implicit(&r.implicit, &raw) {
                    return Err(Error::Internal("implicit equation does not vanish on the input".into()));
                }
                d.implicit_degree = Some(r.hypersurface_degree);
                d.k = Some(r.k);
                if config.command == Command::ImplicitizeSurface {
                    report = report.with_implicit(&r, config.frame);
                }
            }
            Ok(report.with_mu_basis(&[&b.q1, &b.q2]).with_degrees(d))
        }
        Command::Verify => {
            let f = parse_mpoly(&config.inputs[0])
                .map_err(|e| Error::Input(format!("implicit polynomial: {e}")))?
                .homogenize(3);
            let ok = if config.inputs.len() == 4 {
                if f.degree_in(3).unwrap_or(0) > 0 {
                    false
                } else {
                    let c = parse_curve(&config.inputs[1..])?;
                    verify_curve_implicit(&f, &c)
                }
            } else {
                let raw = parse_surface(&config.inputs[1..])?;
                verify_implicit(&f, &raw)
            };
            Ok(Report::new(name).with_verified(ok))
        }
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

fn error_outcome(e: &Error, output: Output) -> Outcome {
    let code = exit_code(e);
    let stdout = match output {
        Output::Json => {
            let v = serde_json::json!({
                "error": {
                    "kind": if code == 2 { "internal" } else { "input" },
                    "message": e.to_string(),
                }
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Output::Text => String::new(),
    };
    Outcome { code, stdout, stderr: format!("error: {e}\n") }
}

pub fn run(config: &CliConfig) -> Outcome {
    match execute(config) {
        Ok(report) => Outcome {
            code: 0,
            stdout: match config.output {
                Output::Json => report.to_json(),
                Output::Text => report.to_text(),
            },
            stderr: String::new(),
        },
        Err(e) => error_outcome(&e, config.output),
    }
}

const VALUE_FLAGS: [&str; 4] = ["--file", "--seed", "--output", "--frame"];
const SWITCHES: [&str; 5] = ["--json", "--help", "-h", "--version", "-V"];

/// Polynomials such as `-s^2+1` start with a hyphen. Everything after the
/// subcommand that is not a known option is moved behind `--` so clap reads
/// it as a positional input.
fn separate_polynomials(args: Vec<OsString>) -> Vec<OsString> {
    if args.len() < 3 || args[2..].iter().any(|a| a == "--") {
        return args;
    }
    let mut head: Vec<OsString> = args[..2].to_vec();
    let mut positional = Vec::new();
    let mut it = args[2..].iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        let name = s.split('=').next().unwrap_or("");
        if VALUE_FLAGS.contains(&name) {
            head.push(a.clone());
            if !s.contains('=') {
                if let Some(v) = it.next() {
                    head.push(v.clone());
                }
            }
        } else if SWITCHES.contains(&s.as_ref()) {
            head.push(a.clone());
        } else {
            positional.push(a.clone());
        }
    }
    if !positional.is_empty() {
        head.push("--".into());
        head.extend(positional);
    }
    head
}

/// Parses `args` (including the program name) and runs, without printing.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = separate_polynomials(args.into_iter().map(Into::into).collect());
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match CliConfig::from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => error_outcome(&e, if wants_json { Output::Json } else { Output::Text }),
    }
}

/// Entry point for the binary: prints the outcome and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run_args(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
