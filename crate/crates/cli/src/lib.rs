//! `partible` command-line interface.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
//! an input error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use partible_core::congruence::{derive_constants, sweep};
use partible_core::poly::{parse_poly, parse_poly_in};
use partible_core::reduction::Scaling;
use partible_core::{
    find_gamma, guess_annihilator, is_partible, partible_reduce, reduce, Error, Family,
    FieldElement, Rational, ReductionProfile, ShiftOperator,
};
use serde::{Deserialize, Serialize};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "partible",
    version,
    about = "Polynomial reduction and congruence checks for holonomic sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree, b-polynomials, indicator polynomial and its nonnegative integer roots.
    Profile {
        #[arg(long)]
        operator: PathBuf,
    },
    /// Reduce a polynomial modulo the image of the adjoint.
    Reduce {
        #[arg(long)]
        operator: PathBuf,
        /// Polynomial in k (coefficients may use z).
        #[arg(long, conflicts_with = "power", required_unless_present = "power")]
        poly: Option<String>,
        /// Parity-preserving reduction of (λ(k-γ))^M for a power-partible operator.
        #[arg(long)]
        power: Option<usize>,
    },
    /// Symmetry centers γ and the power-partibility verdict.
    Gamma {
        #[arg(long)]
        operator: PathBuf,
    },
    /// Table of congruence constants c_r.
    Constants {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r_max: u32,
        /// Specialize delannoy_poly constants at this rational z.
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the family's congruences over r <= R and primes p <= P.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r_max: u32,
        #[arg(long)]
        p_max: u64,
        /// Integer values of z (delannoy_poly).
        #[arg(long, num_args = 1..)]
        z: Vec<i64>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Print a summary table instead of JSON lines.
        #[arg(long)]
        summary: bool,
    },
    /// Guess an annihilator from a JSON array of terms.
    Guess {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        deg: usize,
    },
}

/// JSON form of a [`ReductionProfile`]; polynomials use the parser syntax
/// (`k` for the b-polynomials, `s` for the indicator).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub d: i64,
    pub b_polys: Vec<String>,
    pub indicator: String,
    pub roots: Vec<u64>,
    pub nondegenerate: bool,
}

impl ProfileJson {
    pub fn from_profile(p: &ReductionProfile) -> Self {
        ProfileJson {
            d: p.degree,
            b_polys: p.b_polys.iter().map(|b| b.to_text("k")).collect(),
            indicator: p.indicator.to_text("s"),
            roots: p.roots.iter().copied().collect(),
            nondegenerate: p.nondegenerate,
        }
    }

    pub fn to_profile(&self) -> partible_core::Result<ReductionProfile> {
        Ok(ReductionProfile {
            degree: self.d,
            b_polys: self
                .b_polys
                .iter()
                .map(|s| parse_poly(s))
                .collect::<Result<_, _>>()?,
            indicator: parse_poly_in(&self.indicator, "s")?,
            roots: self.roots.iter().copied().collect(),
            nondegenerate: self.nondegenerate,
        })
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult = Result<u8, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_operator(path: &Path) -> Result<ShiftOperator, CliError> {
    ShiftOperator::from_json(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn family(name: &str) -> Result<Family, CliError> {
    Ok(name.parse::<Family>()?)
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))?;
    Ok(())
}

fn text_map(m: &BTreeMap<usize, FieldElement>) -> BTreeMap<String, String> {
    m.iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn cmd_profile(operator: &Path, out: &mut dyn Write) -> CliResult {
    let op = load_operator(operator)?;
    let json = ProfileJson::from_profile(&op.profile());
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&json).expect("serializable")
    )?;
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct ReduceJson {
    d: i64,
    x: String,
    exceptional: BTreeMap<String, String>,
    remainder: String,
    summable: bool,
}

#[derive(Serialize)]
struct PartibleJson {
    power: usize,
    gamma: String,
    unit: String,
    u: BTreeMap<String, String>,
    v: BTreeMap<String, String>,
    alpha: BTreeMap<String, String>,
}

fn cmd_reduce(
    operator: &Path,
    poly: Option<&str>,
    power: Option<usize>,
    out: &mut dyn Write,
) -> CliResult {
    let op = load_operator(operator)?;
    if let Some(src) = poly {
        let q = parse_poly(src)?;
        let res = reduce(&q, &op);
        if res.reassemble(&op) != q {
            return Err(CliError::Input("reduction failed to reassemble".into()));
        }
        let json = ReduceJson {
            d: res.degree,
            x: res.x.to_text("k"),
            exceptional: res
                .exceptional
                .iter()
                .map(|(s, c)| (s.to_string(), c.to_string()))
                .collect(),
            remainder: res.remainder.to_text("k"),
            summable: res.is_summable(),
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json).expect("serializable")
        )?;
        return Ok(EXIT_PASS);
    }
    let m = power.expect("clap requires --poly or --power");
    let cert = is_partible(&op)
        .ok_or_else(|| CliError::from(Error::NotPartible("no symmetry center".into())))?;
    let red = partible_reduce(m, &op, &cert, &Scaling::default_for(&cert.gamma))?;
    if !red.verify(&op) {
        return Ok(EXIT_FAIL);
    }
    let json = PartibleJson {
        power: m,
        gamma: red.gamma.to_string(),
        unit: red.unit.to_string(),
        u: text_map(&red.u_coeffs),
        v: text_map(&red.v_coeffs),
        alpha: text_map(&red.alphas),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&json).expect("serializable")
    )?;
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct GammaJson {
    d: i64,
    gammas: Vec<String>,
    partible: bool,
    gamma: Option<String>,
}

fn cmd_gamma(operator: &Path, out: &mut dyn Write) -> CliResult {
    let op = load_operator(operator)?;
    let cert = is_partible(&op);
    let json = GammaJson {
        d: op.profile().degree,
        gammas: find_gamma(&op).iter().map(ToString::to_string).collect(),
        partible: cert.is_some(),
        gamma: cert.map(|c| c.gamma.to_string()),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&json).expect("serializable")
    )?;
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct ConstantRow {
    r: u32,
    c: String,
}

#[derive(Serialize)]
struct ConstantsJson {
    family: Family,
    z: Option<String>,
    entries: Vec<ConstantRow>,
    denominator_support: Vec<u64>,
    unexpected_primes: Vec<u64>,
}

fn cmd_constants(
    name: &str,
    r_max: u32,
    z: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let fam = family(name)?;
    let z0 = match z {
        None => None,
        Some(_) if fam != Family::DelannoyPoly => {
            return Err(CliError::Input("--z only applies to delannoy_poly".into()))
        }
        Some(s) => Some(
            s.parse::<Rational>()
                .map_err(|e| CliError::Input(format!("--z {s}: {e}")))?,
        ),
    };
    let table = derive_constants(fam, r_max)?;
    let mut entries = Vec::new();
    for (r, c) in &table.entries {
        let c = match &z0 {
            None => c.to_string(),
            Some(z0) => c
                .eval_z(z0)
                .ok_or_else(|| CliError::Input(format!("c_{r} has a pole at z = {z0}")))?
                .to_string(),
        };
        entries.push(ConstantRow { r: *r, c });
    }
    let support: Vec<u64> = table.denominator_support.iter().copied().collect();
    let unexpected: Vec<u64> = table.unexpected_primes().into_iter().collect();
    if json {
        let j = ConstantsJson {
            family: fam,
            z: z0.map(|q| q.to_string()),
            entries,
            denominator_support: support,
            unexpected_primes: unexpected,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&j).expect("serializable")
        )?;
    } else {
        writeln!(out, "{:>3}  c_r", "r")?;
        for row in &entries {
            writeln!(out, "{:>3}  {}", row.r, row.c)?;
        }
        writeln!(out, "denominator support: {support:?}")?;
        if !unexpected.is_empty() {
            writeln!(out, "warning: unexpected denominator primes {unexpected:?}")?;
        }
    }
    Ok(EXIT_PASS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    name: &str,
    r_max: u32,
    p_max: u64,
    zs: &[i64],
    jobs: Option<usize>,
    summary: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let fam = family(name)?;
    if fam == Family::DelannoyPoly && zs.is_empty() {
        return Err(CliError::Input(
            "delannoy_poly needs at least one --z".into(),
        ));
    }
    if fam != Family::DelannoyPoly && !zs.is_empty() {
        return Err(CliError::Input("--z only applies to delannoy_poly".into()));
    }
    let run = || sweep(fam, r_max, p_max, zs);
    let outcome = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Input(format!("--jobs {n}: {e}")))?
            .install(run),
        None => run(),
    };
    if summary {
        write!(out, "{}", outcome.summary_table())?;
    } else {
        for rep in &outcome.reports {
            writeln!(out, "{}", rep.to_json_line())?;
        }
    }
    for e in &outcome.errors {
        json_line(err, e)?;
    }
    Ok(if outcome.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn parse_terms(src: &str) -> Result<Vec<Rational>, CliError> {
    let values: Vec<serde_json::Value> = serde_json::from_str(src).map_err(|e| {
        CliError::from(Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    })?;
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let text = match v {
                serde_json::Value::String(s) => s.trim().to_string(),
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                other => {
                    return Err(CliError::Input(format!(
                        "term {i}: expected an integer string, got {other}"
                    )))
                }
            };
            text.parse::<Rational>()
                .map_err(|e| CliError::Input(format!("term {i}: `{text}`: {e}")))
        })
        .collect()
}

fn cmd_guess(terms: &Path, order: usize, deg: usize, out: &mut dyn Write) -> CliResult {
    let terms = parse_terms(&read(terms)?)?;
    match guess_annihilator(&terms, order, deg)? {
        Some(op) => writeln!(out, "{}", op.to_json())?,
        None => writeln!(out, "none")?,
    }
    Ok(EXIT_PASS)
}

/// Runs one command; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Profile { operator } => cmd_profile(operator, out),
        Command::Reduce {
            operator,
            poly,
            power,
        } => cmd_reduce(operator, poly.as_deref(), *power, out),
        Command::Gamma { operator } => cmd_gamma(operator, out),
        Command::Constants {
            family,
            r_max,
            z,
            json,
        } => cmd_constants(family, *r_max, z.as_deref(), *json, out),
        Command::Verify {
            family,
            r_max,
            p_max,
            z,
            jobs,
            summary,
        } => cmd_verify(family, *r_max, *p_max, z, *jobs, *summary, out, err),
        Command::Guess { terms, order, deg } => cmd_guess(terms, *order, *deg, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
