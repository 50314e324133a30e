//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                                                       |
//! |------|---------------------------------------------------------------|
//! | 0    | success (`sac`: condition holds)                              |
//! | 1    | `sac`: condition fails; other commands: usage or output error |
//! | 2    | `sac`: rank type does not parse; `check-model`: file unreadable |
//! | 3    | `check-model`: model file does not parse                      |
//! | 4    | `check-model`: model is not a valid minimal model             |
//! | 5    | `check-model`: cohomology computation failed                  |

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::filters::run_pipeline;
use crate::ranktype::{check_sac, enumerate_rank_types, parse_rank_type, MAX_SUPPORTED_FD};
use crate::report::{render_counts, render_enumeration, render_pipeline, Format};
use crate::sullivan::{
    catalog_entry, check_hilali, cohomology_profile, euler_characteristics, full_profile,
    poincare_check, witness_catalog, ModelFile, SullivanModel,
};

const EXIT_CODES: &str = "\
Exit codes:
  0  success (sac: condition holds)
  1  sac: condition fails; otherwise usage or output error
  2  sac: rank type does not parse; check-model: file unreadable
  3  check-model: model file does not parse
  4  check-model: model fails minimality or degree checks
  5  check-model: cohomology computation failed";

#[derive(Debug, Parser)]
#[command(name = "hilali", version, about = "Rank types, Hilali filters and Sullivan model cohomology", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every rank type satisfying the strong arithmetic condition.
    Enumerate(RunArgs),
    /// Run all filters and list the rank types left unverified.
    Pipeline(RunArgs),
    /// Decide the strong arithmetic condition for one rank type, e.g. "2,4:3,5,7".
    Sac { rank_type: String },
    /// Validate a JSON model file and print its cohomology.
    CheckModel {
        path: PathBuf,
        /// Highest degree to print; defaults to the formal dimension or truncation degree.
        #[arg(long)]
        up_to: Option<u32>,
    },
    /// List the built-in witness models, or dump one as a model file.
    Catalog {
        #[arg(long, value_name = "NAME")]
        dump: Option<String>,
    },
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=MAX_SUPPORTED_FD as i64))]
    pub max_fd: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match cli.command {
        Command::Enumerate(args) => {
            let enumeration =
                enumerate_rank_types(args.max_fd).expect("max-fd range checked by clap");
            let _ = stderr.write_all(render_counts(&enumeration).as_bytes());
            emit(
                &render_enumeration(&enumeration, args.format),
                args.out.as_ref(),
                stdout,
                stderr,
            )
        }
        Command::Pipeline(args) => {
            let report = run_pipeline(args.max_fd).expect("max-fd range checked by clap");
            for d in &report.dimensions {
                let _ = writeln!(
                    stderr,
                    "fd={}  total={}  verified={}  residual={}",
                    d.fd,
                    d.total,
                    d.verified_count(),
                    d.total - d.verified_count()
                );
            }
            emit(
                &render_pipeline(&report, args.format),
                args.out.as_ref(),
                stdout,
                stderr,
            )
        }
        Command::Sac { rank_type } => sac(&rank_type, stdout, stderr),
        Command::CheckModel { path, up_to } => check_model(&path, up_to, stdout, stderr),
        Command::Catalog { dump } => catalog(dump.as_deref(), stdout, stderr),
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            1
        }
    }
}

fn sac(text: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let t = match parse_rank_type(text) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let (holds, witness) = check_sac(&t);
    let mut out = String::new();
    writeln!(out, "{holds}").unwrap();
    for entry in &witness.entries {
        let support: Vec<String> = entry.support.iter().map(ToString::to_string).collect();
        match &entry.gamma {
            Some(gamma) => {
                let gamma: Vec<String> = gamma.iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "  S={{{}}}  b={}  gamma=({})",
                    support.join(","),
                    entry.b,
                    gamma.join(",")
                )
                .unwrap();
            }
            None if !holds => {
                writeln!(
                    out,
                    "  S={{{}}}  b={}  not expressible",
                    support.join(","),
                    entry.b
                )
                .unwrap();
            }
            None => {}
        }
    }
    let _ = stdout.write_all(out.as_bytes());
    if holds {
        0
    } else {
        1
    }
}

fn check_model(
    path: &PathBuf,
    up_to: Option<u32>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let model = match ModelFile::from_json(&text).and_then(ModelFile::into_model) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return 3;
        }
    };
    let mut out = String::new();
    let violations = model.validate();
    if !violations.is_empty() {
        out.push_str("valid: no\n");
        for v in &violations {
            writeln!(out, "  {v}").unwrap();
        }
        let _ = stdout.write_all(out.as_bytes());
        return 4;
    }
    out.push_str("valid: yes\n");
    let code = describe_cohomology(&model, up_to, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    if let Err(message) = code {
        let _ = writeln!(stderr, "error: {message}");
        return 5;
    }
    0
}

fn describe_cohomology(
    model: &SullivanModel,
    up_to: Option<u32>,
    out: &mut String,
) -> Result<(), String> {
    let profile = match (up_to, model.truncation_degree()) {
        (Some(k), _) => cohomology_profile(model, k),
        (None, Some(t)) => cohomology_profile(model, t),
        (None, None) => full_profile(model),
    }
    .map_err(|e| e.to_string())?;
    for (i, dim) in profile.dims.iter().enumerate() {
        writeln!(out, "H^{i} = {dim}").unwrap();
    }
    if model.is_truncated() {
        writeln!(
            out,
            "truncated at degree {}",
            model.truncation_degree().unwrap()
        )
        .unwrap();
        return Ok(());
    }
    let (chi, chi_pi) = euler_characteristics(model).map_err(|e| e.to_string())?;
    writeln!(out, "chi = {chi}").unwrap();
    writeln!(out, "chi_pi = {chi_pi}").unwrap();
    let full = full_profile(model).map_err(|e| e.to_string())?;
    let poincare = poincare_check(&full).map_err(|e| e.to_string())?;
    writeln!(
        out,
        "poincare duality: {}",
        if poincare { "yes" } else { "no" }
    )
    .unwrap();
    let h = check_hilali(model).map_err(|e| e.to_string())?;
    writeln!(
        out,
        "Hilali: {} {} {}, {}",
        h.dim_h,
        if h.holds { ">=" } else { "<" },
        h.dim_v,
        if h.holds { "holds" } else { "fails" }
    )
    .unwrap();
    Ok(())
}

fn catalog(dump: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dump {
        Some(name) => match catalog_entry(name) {
            Some(entry) => {
                let mut json = ModelFile::from_model(&entry.model).to_json();
                json.push('\n');
                emit(&json, None, stdout, stderr)
            }
            None => {
                let _ = writeln!(stderr, "error: no catalog entry named {name:?}");
                1
            }
        },
        None => {
            let mut out = String::new();
            for entry in witness_catalog() {
                let rank_type = entry
                    .model
                    .declared_rank_type()
                    .map(|t| format!("({t})"))
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{:<16} {:<22} {}",
                    entry.name, rank_type, entry.description
                )
                .unwrap();
            }
            emit(&out, None, stdout, stderr)
        }
    }
}
