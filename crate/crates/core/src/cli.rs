//! Command-line front end for the `mfal` binary.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::alia::alia_table;
use crate::error::{Error, Result};
use crate::modforms::{named_form, numeric};
use crate::suite::{parse_tau, run_suite, Settings, Suite};
use crate::vvmf::{HilbertSeries, Level};

#[derive(Parser, Debug)]
#[command(name = "mfal", version, about = "Exact q-expansions, automorphic Lie algebras and their checks")]
pub struct Cli {
    /// Expansion order: series are computed below q^order.
    #[arg(long, global = true, env = "MFAL_ORDER", default_value_t = 64)]
    pub order: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Numeric tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalCheck {
    #[value(name = "S")]
    S,
    #[value(name = "T")]
    T,
    #[value(name = "none")]
    None,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the q-expansion of a named form.
    Expand { form: String },
    /// Print the bracket table of the automorphic Lie algebra of an orbit.
    Alia {
        /// A1, A2, B2 or G2.
        lie_type: String,
        /// Orbit label such as principal or subregular.
        orbit: String,
    },
    /// Dimensions of Sym^n-valued modular forms for weights -n..=kmax.
    Hilbert { n: usize, group: String, kmax: i64 },
    /// Evaluate a form numerically, optionally checking an S or T transformation.
    Eval {
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, value_enum, default_value_t = EvalCheck::None)]
        check: EvalCheck,
    },
    /// Run a certification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

/// Exit code for a library error: everything here is a usage problem.
fn error_code(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    2
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => error_code(&e, err),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let settings = Settings { order: cli.order, tol: cli.tol };
    let emit = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };
    match &cli.command {
        Command::Expand { form } => {
            let f = named_form(form, cli.order)?;
            match cli.format {
                Format::Text => emit(out, f.series.to_string()),
                Format::Json => emit(out, serde_json::to_string_pretty(&f).expect("serializable")),
            }
            Ok(0)
        }
        Command::Alia { lie_type, orbit } => {
            let t = alia_table(&format!("{lie_type}:{orbit}"))?;
            let body = t.to_json();
            match cli.format {
                Format::Json => emit(out, serde_json::to_string_pretty(&body).expect("serializable")),
                Format::Text => {
                    emit(out, format!("{} {} (dim {})", t.ty(), orbit, t.dim()));
                    for b in t.entries() {
                        emit(out, format!("[{}, {}] = {} {}", b.x, b.y, b.coeff, b.target));
                    }
                }
            }
            Ok(0)
        }
        Command::Hilbert { n, group, kmax } => {
            let level: Level = group.parse()?;
            let h = HilbertSeries::vector_valued(*n, level);
            let weights = h.coefficients(-(*n as i64), *kmax);
            match cli.format {
                Format::Json => emit(out, json!({ "weights": weights }).to_string()),
                Format::Text => {
                    for (k, d) in weights {
                        emit(out, format!("{k} {d}"));
                    }
                }
            }
            Ok(0)
        }
        Command::Eval { form, tau, check } => eval(cli, form, tau, *check, out),
        Command::Verify { suite } => {
            let report = run_suite(*suite, &settings);
            match cli.format {
                Format::Json => emit(out, serde_json::to_string_pretty(&report).expect("serializable")),
                Format::Text => {
                    let _ = write!(out, "{}", report.to_text());
                }
            }
            Ok(report.exit_code())
        }
    }
}

fn eval(cli: &Cli, id: &str, tau: &str, check: EvalCheck, out: &mut dyn Write) -> Result<i32> {
    let tau = parse_tau(tau)?;
    let f = named_form(id, cli.order)?;
    let value = f.series.eval_numeric(tau)?;
    let residual = match check {
        EvalCheck::None => None,
        EvalCheck::T => {
            // exact action of tau -> tau + 1 on the expansion versus numerics
            let shifted = f.series.shift_tau()?;
            let r = (f.series.eval_numeric(tau + 1.0)? - shifted.eval_numeric(tau)?).norm();
            Some(r)
        }
        EvalCheck::S => {
            if f.group != "SL2(Z)" || !f.weight.is_integer() {
                return Err(Error::InvalidArgument(format!(
                    "S check needs an integral-weight form on SL2(Z); {id} has weight {} on {}",
                    f.weight, f.group
                )));
            }
            let k = f.weight.to_integer().to_i32().expect("small weight");
            Some(numeric::s_residual(&f.series, k, tau)?)
        }
    };
    let pass = residual.map_or(true, |r| r < cli.tol);
    let check_name = match check {
        EvalCheck::S => "S",
        EvalCheck::T => "T",
        EvalCheck::None => "none",
    };
    match cli.format {
        Format::Json => {
            let body = json!({
                "form": id,
                "tau": [tau.re, tau.im],
                "order": cli.order,
                "value": [value.re, value.im],
                "check": check_name,
                "residual": residual,
                "tol": cli.tol,
                "pass": pass,
            });
            let _ = writeln!(out, "{body}");
        }
        Format::Text => {
            let _ = writeln!(out, "{id}({}) = {}", fmt_complex(tau), fmt_complex(value));
            if let Some(r) = residual {
                let verdict = if pass { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {check_name} residual {r:.3e} (tol {:.0e}, order {})", cli.tol, cli.order);
            }
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn fmt_complex(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
