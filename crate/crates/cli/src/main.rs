//! Verification CLI: run the identity suites and emit structured
//! reports, print exact harmonics, and tabulate ladder coefficients.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ylm_core::error::AlgebraError;
use ylm_core::harmonics::closed_form;
use ylm_core::operators::{
    i_lower_coeff, i_raise_coeff, j_lower_coeff, j_raise_coeff, k_lower_coeff, k_raise_coeff,
    su2_ladder_coeff,
};
use ylm_core::verify::{run_suite, Suite, SuiteConfig, VerificationReport};
use ylm_core::{Scalar, SphereFunction};

mod render;

#[derive(Parser)]
#[command(
    name = "ylm",
    version,
    about = "Exact spherical-harmonic ladder-operator verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenerateForm {
    Exact,
    Latex,
    #[value(name = "numeric-grid")]
    NumericGrid,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 0 iff no record fails.
    Verify {
        /// Suite name: su2, ladder-l, u11-K, u11-I, mixed-A, adjoint,
        /// orthonormality, generation, parity, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        lmax: i64,
        #[arg(long, default_value_t = 9)]
        dmax: i64,
        #[arg(long, default_value_t = 9)]
        smax: i64,
        /// Number of seeded random smooth test functions per identity.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for the numeric cross-checks.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one harmonic exactly, as LaTeX, or sampled on a grid.
    Generate {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = GenerateForm::Exact)]
        form: GenerateForm,
    },
    /// Print a one-step ladder-coefficient table as CSV.
    Table {
        /// Lplus, Lminus, Jplus, Jminus, Kplus-d<D>, Kminus-d<D>,
        /// Iplus-s<S>, Iminus-s<S>.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 4)]
        lmax: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            suite,
            lmax,
            dmax,
            smax,
            trials,
            seed,
            tol,
            format,
            out,
        } => cmd_verify(&suite, lmax, dmax, smax, trials, seed, tol, format, out),
        Command::Generate { l, m, form } => cmd_generate(l, m, form),
        Command::Table { family, lmax } => cmd_table(&family, lmax),
    };
    ExitCode::from(code)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite_name: &str,
    lmax: i64,
    dmax: i64,
    smax: i64,
    trials: usize,
    seed: u64,
    tol: f64,
    format: ReportFormat,
    out: Option<PathBuf>,
) -> u8 {
    let suite: Suite = match suite_name.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if lmax < 1 || tol <= 0.0 {
        eprintln!("error: --lmax must be >= 1 and --tol must be positive");
        return 2;
    }
    let mut config = SuiteConfig::new(suite);
    config.l_max = lmax;
    config.d_max = dmax;
    config.s_max = smax;
    config.random_trials = trials;
    config.seed = seed;
    config.numeric_tolerance = tol;

    let report = run_suite(&config);
    let body = match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => records_csv(&report),
    };
    let summary = format!(
        "suite={} records={} pass={} fail={} flagged={}",
        report.config.suite,
        report.records.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.flagged
    );
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
            println!("{summary}");
            println!("report written to {}", path.display());
        }
        None => {
            print!("{body}");
            eprintln!("{summary}");
        }
    }
    u8::from(report.fail_count() > 0)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn records_csv(report: &VerificationReport) -> String {
    let mut out = String::from("id,params,status,exact_zero,float_dev,note\n");
    for r in &report.records {
        let status = match r.status {
            ylm_core::verify::CheckStatus::Pass => "pass",
            ylm_core::verify::CheckStatus::Fail => "fail",
            ylm_core::verify::CheckStatus::Flagged => "flagged",
        };
        out.push_str(&format!(
            "{},{},{},{},{:e},{}\n",
            csv_field(&r.id),
            csv_field(&r.params),
            status,
            r.exact_zero,
            r.float_dev,
            csv_field(&r.note)
        ));
    }
    out
}

fn cmd_generate(l: i64, m: i64, form: GenerateForm) -> u8 {
    let y = match closed_form(l, m) {
        Ok(y) => y,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match form {
        GenerateForm::Exact => {
            println!("Y({l},{m}) =");
            print!("{}", render::exact(&y));
        }
        GenerateForm::Latex => {
            println!("Y_{{{l}}}^{{{m}}} = {}", render::latex(&y));
        }
        GenerateForm::NumericGrid => {
            print!("{}", numeric_grid(&y));
        }
    }
    0
}

fn numeric_grid(y: &SphereFunction) -> String {
    let mut out = String::from("theta,phi,re,im\n");
    for i in 0..=4 {
        let theta = std::f64::consts::PI * i as f64 / 4.0;
        for j in 0..8 {
            let phi = std::f64::consts::PI * j as f64 / 4.0;
            let v = y.eval(theta, phi);
            out.push_str(&format!("{theta:.8},{phi:.8},{:.8},{:.8}\n", v.re, v.im));
        }
    }
    out
}

enum TableFamily {
    LPlus,
    LMinus,
    JPlus,
    JMinus,
    KPlus(i64),
    KMinus(i64),
    IPlus(i64),
    IMinus(i64),
}

fn parse_family(s: &str) -> Result<TableFamily, AlgebraError> {
    let parse_param = |rest: &str| -> Option<i64> { rest.parse().ok() };
    match s {
        "Lplus" => Ok(TableFamily::LPlus),
        "Lminus" => Ok(TableFamily::LMinus),
        "Jplus" => Ok(TableFamily::JPlus),
        "Jminus" => Ok(TableFamily::JMinus),
        _ => if let Some(rest) = s.strip_prefix("Kplus-d") {
            parse_param(rest).map(TableFamily::KPlus)
        } else if let Some(rest) = s.strip_prefix("Kminus-d") {
            parse_param(rest).map(TableFamily::KMinus)
        } else if let Some(rest) = s.strip_prefix("Iplus-s") {
            parse_param(rest).map(TableFamily::IPlus)
        } else if let Some(rest) = s.strip_prefix("Iminus-s") {
            parse_param(rest).map(TableFamily::IMinus)
        } else {
            None
        }
        .ok_or_else(|| AlgebraError::UnknownFamily(s.to_string())),
    }
}

fn coeff_row(a: i64, b: i64, coeff: Result<Scalar, AlgebraError>) -> String {
    match coeff {
        Ok(c) => format!("{a},{b},{},{:.6}\n", csv_field(&c.to_string()), c.to_f64()),
        Err(e) => format!("{a},{b},error: {e},\n"),
    }
}

fn cmd_table(family: &str, lmax: i64) -> u8 {
    let family = match parse_family(family) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut out = String::new();
    match family {
        TableFamily::LPlus | TableFamily::LMinus => {
            out.push_str("l,m,exact,float\n");
            for l in 0..=lmax {
                for m in (-l + 1)..=l {
                    out.push_str(&coeff_row(l, m, su2_ladder_coeff(l, m)));
                }
            }
        }
        TableFamily::JPlus => {
            out.push_str("l,m,exact,float\n");
            for l in 1..=lmax {
                for m in (-l + 1)..=(l - 1) {
                    out.push_str(&coeff_row(l, m, j_raise_coeff(l, m)));
                }
            }
        }
        TableFamily::JMinus => {
            out.push_str("l,m,exact,float\n");
            for l in 1..=lmax {
                for m in -l..=l {
                    out.push_str(&coeff_row(l, m, j_lower_coeff(l, m)));
                }
            }
        }
        TableFamily::KPlus(d) => {
            out.push_str("d,m,exact,float\n");
            let lowest_m = d / 2 - d + 1;
            for m in (lowest_m + 1)..=(lmax - d + 1) {
                out.push_str(&coeff_row(d, m, k_raise_coeff(d, m)));
            }
        }
        TableFamily::KMinus(d) => {
            out.push_str("d,m,exact,float\n");
            let lowest_m = d / 2 - d + 1;
            for m in lowest_m..=(lmax - d + 1) {
                out.push_str(&coeff_row(d, m, k_lower_coeff(d, m)));
            }
        }
        TableFamily::IPlus(s) => {
            out.push_str("s,m,exact,float\n");
            let highest_m = s - 1 - s / 2;
            for m in (s - 1 - lmax)..=highest_m {
                out.push_str(&coeff_row(s, m, i_raise_coeff(s, m)));
            }
        }
        TableFamily::IMinus(s) => {
            out.push_str("s,m,exact,float\n");
            let highest_m = s - 1 - s / 2;
            for m in (s - 1 - lmax)..=highest_m {
                out.push_str(&coeff_row(s, m, i_lower_coeff(s, m)));
            }
        }
    }
    print!("{out}");
    0
}
