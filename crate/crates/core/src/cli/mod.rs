//! Scenario runner behind the `ncsurf` binary.

mod dsl;
mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::monideal::GradedMonomialFamily;

pub use dsl::{parse_family, DslError};
pub use report::{Record, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Dsl(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Task {
    ReesReport,
    GluingIdeal,
    GlueCheck,
    ConeRestrict,
    PoleBounds,
    EmbedSearch,
    Example1Checks,
    Example2Checks,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Structured,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "ncsurf",
    about = "Exact checks for pluricanonical sections on normal crossing surfaces"
)]
pub struct Scenario {
    #[arg(long, value_enum, default_value = "all")]
    pub task: Task,
    /// Largest weight m covered by the degree-indexed suites.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..=200))]
    pub max_degree: i64,
    /// Monomial family, e.g. "x*y, x^m, y^m".
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub const DEFAULT_FAMILY: &str = "x*y, x^m, y^m";

fn rees(family: &GradedMonomialFamily, n: i64) -> Result<Report, CliError> {
    if n < 3 {
        return Err(CliError::Usage(
            "rees-report needs --max-degree >= 3".into(),
        ));
    }
    // non-multiplicative families are an input problem
    if let Some((a, b, w)) = family
        .multiplicativity_violation(n)
        .map_err(|e| CliError::Usage(e.to_string()))?
    {
        return Err(CliError::Usage(format!(
            "family is not multiplicative: I_{a}*I_{b} contains {} outside I_{}",
            crate::monideal::format_monomial(family.vars(), &w),
            a + b
        )));
    }
    suites::rees_report(family, n)
}

pub fn run(sc: &Scenario) -> Result<Report, CliError> {
    let n = sc.max_degree;
    if n < 1 {
        return Err(CliError::Usage("--max-degree must be at least 1".into()));
    }
    let family = sc.family.as_deref().map(parse_family).transpose()?;
    if family.is_some() && !matches!(sc.task, Task::ReesReport | Task::All) {
        return Err(CliError::Usage(
            "--family applies to rees-report and all only".into(),
        ));
    }
    match sc.task {
        Task::ReesReport => {
            let f = family.ok_or_else(|| CliError::Usage("rees-report needs --family".into()))?;
            rees(&f, n)
        }
        Task::GluingIdeal => suites::gluing_ideals(n),
        Task::GlueCheck => suites::glue_checks(n),
        Task::ConeRestrict => suites::cone_restrictions(n),
        Task::PoleBounds => suites::pole_bounds(n),
        Task::EmbedSearch => suites::embeddings(),
        Task::Example1Checks => suites::example1(),
        Task::Example2Checks => suites::example2(),
        Task::All => {
            let mut rep = Report::default();
            let main = match family {
                Some(f) => f,
                None => parse_family(DEFAULT_FAMILY)?,
            };
            let n_rees = n.max(3);
            rep.extend(rees(&main, n_rees)?);
            for control in ["x^m", "x*y"] {
                let f = parse_family(control)?;
                rep.extend(rees(&f, n_rees)?);
                let witness = f
                    .rees_report(n_rees)
                    .map_err(|e| CliError::Compute(e.to_string()))?
                    .witness;
                if control == "x*y" && witness {
                    rep.note("constant family x*y: I_a*I_b = (x^2*y^2) misses x*y, so x*y is a new generator in every degree and the algebra is not finitely generated");
                }
            }
            rep.extend(suites::gluing_ideals(n)?);
            rep.extend(suites::glue_checks(n)?);
            rep.extend(suites::cone_restrictions(n)?);
            rep.extend(suites::pole_bounds(n)?);
            rep.extend(suites::embeddings()?);
            rep.extend(suites::example1()?);
            rep.extend(suites::example2()?);
            Ok(rep)
        }
    }
}

pub fn render(rep: &Report, format: Format) -> String {
    match format {
        Format::Table => rep.render_table(),
        Format::Structured => rep.render_structured(),
    }
}

/// Parses `args` (program name first), runs the scenario and writes the
/// report. Returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let sc = match Scenario::try_parse_from(args) {
        Ok(sc) => sc,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = run(&sc).and_then(|rep| {
        let text = render(&rep, sc.format);
        match &sc.out {
            Some(path) => std::fs::write(path, &text)?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(rep.passed())
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
