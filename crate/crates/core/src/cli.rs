//! Front end for the `qht` binary. [`run`] never prints or exits; it returns
//! the exit code and the text to print so the whole surface is testable.
//!
//! Exit codes: 0 success, 1 a verification came out negative, 2 usage or
//! parse error, 3 numerical failure.

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::commutant::{
    check_eq22, convolution_constant, solve_commutant_with, solve_convolution_equation,
};
use crate::error::Error;
use crate::mellin::mellin_transform;
use crate::operators::{apply_qh, check_commute_range, operator_matrix, BasisVector};
use crate::quadrature::{validate_lemma2, QuadratureConfig};
use crate::symbols::{mellin_convolve, parse_symbol, QHSymbol, RadialSymbol};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Sweep bound used when `--kmax` is omitted and `QH_DEFAULT_KMAX` is unset.
pub const DEFAULT_KMAX: u32 = 64;

/// Agreement required of `validate` for exit code 0.
pub const VALIDATE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandOutcome {
    fn new(exit_code: i32, payload: impl Into<String>) -> Self {
        Self {
            exit_code,
            payload: payload.into(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qht",
    about = "Exact Mellin and Toeplitz computations on the harmonic Bergman space"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mellin transform of a radial symbol.
    Mellin { radial: String },
    /// Mellin convolution of two log-free radial symbols.
    Convolve { f: String, g: String },
    /// Image of one basis vector.
    Apply {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        basis: String,
    },
    /// Truncated operator matrix.
    Matrix {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Exact commutation test over |index| <= kmax.
    Commute {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Commutant of T_{e^{-isθ} r^n}, n = (2m+1)s, among degree-p symbols.
    Solve {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: u32,
        /// Sweep used to re-verify kernel members.
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Solve φ ∗ ψ = (r^{-1} - r)/2.
    ConvSolve {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        psi: String,
    },
    /// Indices k where the consistency identity fails.
    CheckEq22 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
    },
    /// Compare the exact basis action with quadrature.
    Validate {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        kmax: Option<u32>,
    },
}

/// Reads `QH_DEFAULT_KMAX`, falling back to [`DEFAULT_KMAX`].
pub fn default_kmax_from_env() -> Result<u32, String> {
    match std::env::var("QH_DEFAULT_KMAX") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("QH_DEFAULT_KMAX must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_KMAX),
    }
}

/// `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match default_kmax_from_env() {
        Ok(k) => run_with_default_kmax(argv, k),
        Err(msg) => CommandOutcome::new(EXIT_USAGE, msg),
    }
}

pub fn run_with_default_kmax<I, T>(argv: I, default_kmax: u32) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandOutcome::new(code, e.to_string());
        }
    };
    match dispatch(cli.command, cli.json, default_kmax) {
        Ok(out) => out,
        Err(e) => error_outcome(&e),
    }
}

fn error_outcome(e: &Error) -> CommandOutcome {
    let code = match e {
        Error::QuadratureFailure { .. } => EXIT_NUMERICAL,
        Error::NoAdmissibleSolution(_) => EXIT_VERIFICATION_FAILED,
        _ => EXIT_USAGE,
    };
    CommandOutcome::new(code, format!("error: {e}"))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn radial(text: &str) -> crate::Result<RadialSymbol> {
    let sym = parse_symbol(text)?;
    if sym.degree != 0 {
        return Err(Error::InvalidInput(format!(
            "expected a radial symbol, got degree {}",
            sym.degree
        )));
    }
    Ok(sym.radial)
}

#[derive(Serialize)]
struct ResultJson {
    result: String,
}

#[derive(Serialize)]
struct ConvSolveJson {
    p: u32,
    psi: String,
    constant: String,
    phi: String,
}

#[derive(Serialize)]
struct ConsistencyJson {
    p: u32,
    s: u32,
    n: u32,
    failing: Vec<u32>,
}

fn dispatch(cmd: Command, json: bool, default_kmax: u32) -> crate::Result<CommandOutcome> {
    let ok = |text: String| Ok(CommandOutcome::new(EXIT_OK, text));
    let single = |s: String| {
        if json {
            to_json(&ResultJson { result: s })
        } else {
            s
        }
    };
    match cmd {
        Command::Mellin { radial: r } => ok(single(mellin_transform(&radial(&r)?).to_string())),
        Command::Convolve { f, g } => ok(single(
            mellin_convolve(&radial(&f)?, &radial(&g)?)?.to_string(),
        )),
        Command::Apply { symbol, basis } => {
            let f = parse_symbol(&symbol)?;
            let v: BasisVector = basis.parse()?;
            ok(single(apply_qh(&f, v)?.to_string()))
        }
        Command::Matrix { symbol, kmax } => {
            let f = parse_symbol(&symbol)?;
            let m = operator_matrix(&f, kmax.unwrap_or(default_kmax))?;
            if json {
                return ok(to_json(&m.to_json()));
            }
            let mut lines: Vec<String> = m
                .entries
                .iter()
                .map(|e| format!("{} -> {} * {}", e.from, e.coeff, e.to))
                .collect();
            if !m.out_of_range.is_empty() {
                let cols: Vec<String> = m.out_of_range.iter().map(|v| v.to_string()).collect();
                lines.push(format!("leaves the truncation: {}", cols.join(", ")));
            }
            ok(lines.join("\n"))
        }
        Command::Commute { f, g, kmax } => {
            let (f, g): (QHSymbol, QHSymbol) = (parse_symbol(&f)?, parse_symbol(&g)?);
            let rep = check_commute_range(&f, &g, kmax.unwrap_or(default_kmax))?;
            let code = if rep.commutes {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            let text = if json {
                to_json(&rep.to_json())
            } else {
                let mut lines = vec![format!("commutes: {} (kmax {})", rep.commutes, rep.kmax)];
                for fl in &rep.failures {
                    lines.push(format!(
                        "  {}: T_f T_g = {}, T_g T_f = {}",
                        fl.vec, fl.lhs, fl.rhs
                    ));
                }
                lines.join("\n")
            };
            Ok(CommandOutcome::new(code, text))
        }
        Command::Solve { p, s, m, kmax } => {
            let res = solve_commutant_with(p, s, m, kmax.unwrap_or(default_kmax))?;
            let code = if res.kernel_verified {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            let j = res.to_json();
            let text = if json {
                to_json(&j)
            } else {
                let mut lines = vec![
                    format!("ansatz exponents: [{}]", j.ansatz.join(", ")),
                    format!("kernel: [{}]", j.kernel.join("; ")),
                ];
                for (k, b) in j.kernel.iter().zip(&j.boundedness) {
                    lines.push(format!("  {k}: {b:?}"));
                }
                lines.push(format!(
                    "candidate: {} (consistent: {})",
                    j.candidate.as_deref().unwrap_or("none"),
                    j.consistent
                ));
                lines.extend(j.diagnostics.iter().map(|d| format!("  {d}")));
                lines.join("\n")
            };
            Ok(CommandOutcome::new(code, text))
        }
        Command::ConvSolve { p, psi } => {
            let psi = radial(&psi)?;
            let phi = solve_convolution_equation(p, &psi)?;
            if json {
                return ok(to_json(&ConvSolveJson {
                    p,
                    psi: psi.to_string(),
                    constant: convolution_constant().to_string(),
                    phi: phi.to_string(),
                }));
            }
            ok(phi.to_string())
        }
        Command::CheckEq22 { p, s, n } => {
            let failing = check_eq22(p, s, n);
            let code = if failing.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            let text = if json {
                to_json(&ConsistencyJson { p, s, n, failing })
            } else {
                format!("{failing:?}")
            };
            Ok(CommandOutcome::new(code, text))
        }
        Command::Validate { symbol, kmax } => {
            let f = parse_symbol(&symbol)?;
            let rep = validate_lemma2(
                &f,
                kmax.unwrap_or(default_kmax),
                &QuadratureConfig::default(),
            )?;
            let code = if rep.max_abs_dev <= VALIDATE_TOLERANCE {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            let text = if json {
                to_json(&rep.to_json())
            } else {
                format!(
                    "kmax {}: max |exact - quadrature| = {:.3e} at {}",
                    rep.kmax, rep.max_abs_dev, rep.worst_index
                )
            };
            Ok(CommandOutcome::new(code, text))
        }
    }
}
