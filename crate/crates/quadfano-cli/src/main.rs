use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use quadfano::audit::{audit_passed, render_text, run_audit};
use quadfano::tables::{generate, Format, TableId};
use quadfano::{classify, Classification, Containment, CurveInstance, TriState};

/// Exit status for malformed invocations (sysexits EX_USAGE).
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "quadfano",
    version,
    about = "Weak Fano blowups of the smooth quadric threefold"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Bl_C Y is weak Fano for a curve of genus g and degree d.
    #[command(group(ArgGroup::new("containment").args(["hyperplane", "quadric_section", "cubic_section"])))]
    #[command(group(ArgGroup::new("line").args(["no_4secant_line", "has_4secant_line"])))]
    #[command(group(ArgGroup::new("conic").args(["no_7secant_conic", "has_7secant_conic"])))]
    Classify {
        #[arg(short = 'g', long = "genus", allow_negative_numbers = true)]
        genus: i64,
        #[arg(short = 'd', long = "degree", allow_negative_numbers = true)]
        degree: i64,
        /// C lies in a hyperplane section of Y.
        #[arg(long)]
        hyperplane: bool,
        /// C lies on a smooth quadric section of Y.
        #[arg(long)]
        quadric_section: bool,
        /// C lies on a smooth cubic section of Y.
        #[arg(long)]
        cubic_section: bool,
        #[arg(long = "no-4secant-line")]
        no_4secant_line: bool,
        #[arg(long = "has-4secant-line")]
        has_4secant_line: bool,
        #[arg(long = "no-7secant-conic")]
        no_7secant_conic: bool,
        #[arg(long = "has-7secant-conic")]
        has_7secant_conic: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Regenerate a table: B, pgd-nmax, obstructions, plane-smooth, plane-cone, residual-f2, dp4, sarkisov.
    Table {
        id: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Compare every regenerated table against the embedded fixtures.
    Audit {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn tri(no: bool, yes: bool) -> TriState {
    match (no, yes) {
        (true, _) => TriState::No,
        (_, true) => TriState::Yes,
        _ => TriState::Unknown,
    }
}

fn tri_str(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

fn containment_str(c: Containment) -> &'static str {
    match c {
        Containment::Hyperplane => "hyperplane",
        Containment::SmoothQuadricSection => "quadric_section",
        Containment::SmoothCubicSection => "cubic_section",
        Containment::Unknown => "unknown",
    }
}

fn render_classification(c: &Classification, format: OutputFormat) -> Result<String> {
    let i = &c.instance;
    let n_max = c.n_max.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(c)? + "\n",
        OutputFormat::Csv => format!(
            "g,d,containment,has_4secant_line,has_7secant_conic,verdict,n_max,missing\n{},{},{},{},{},{},{},{}\n",
            i.g,
            i.d,
            containment_str(i.containment),
            tri_str(i.has_4secant_line),
            tri_str(i.has_7secant_conic),
            c.verdict.as_str(),
            n_max,
            c.missing.join(";"),
        ),
        OutputFormat::Text => {
            let mut out = format!("verdict: {}\n(g,d) = ({},{})\nn_max: {n_max}\n", c.verdict.as_str(), i.g, i.d);
            for r in &c.reasons {
                out.push_str(&format!("reason: {r}\n"));
            }
            if !c.missing.is_empty() {
                out.push_str(&format!("missing: {}\n", c.missing.join(", ")));
            }
            for cert in &c.certificates {
                let reason = serde_json::to_value(cert.reason)?;
                let reason = reason.as_str().unwrap_or_default();
                match (&cert.divisor, cert.cg) {
                    (Some(div), Some(cg)) => out.push_str(&format!(
                        "certificate: n={} cg={cg} {reason} D={} (H·D, D², C·D, Γ·D)=({}, {}, {}, {})\n",
                        cert.n, div.label, div.h_d, div.d_sq, div.c_d, div.gamma_d
                    )),
                    (None, Some(cg)) => {
                        out.push_str(&format!("certificate: n={} cg={cg} {reason}\n", cert.n))
                    }
                    _ => out.push_str(&format!("certificate: n={} {reason}\n", cert.n)),
                }
            }
            out
        }
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Classify {
            genus,
            degree,
            hyperplane,
            quadric_section,
            cubic_section,
            no_4secant_line,
            has_4secant_line,
            no_7secant_conic,
            has_7secant_conic,
            format,
        } => {
            if genus < 0 || degree < 1 {
                bail!(UsageError(format!(
                    "need g >= 0 and d >= 1, got g = {genus}, d = {degree}"
                )));
            }
            let containment = if hyperplane {
                Containment::Hyperplane
            } else if quadric_section {
                Containment::SmoothQuadricSection
            } else if cubic_section {
                Containment::SmoothCubicSection
            } else {
                Containment::Unknown
            };
            let instance = CurveInstance::new(genus, degree)
                .with_containment(containment)
                .with_secants(
                    tri(no_4secant_line, has_4secant_line),
                    tri(no_7secant_conic, has_7secant_conic),
                );
            let c = classify(&instance).context("classification failed")?;
            print!("{}", render_classification(&c, format)?);
            Ok(c.verdict.exit_code() as u8)
        }
        Command::Table { id, format } => {
            let id: TableId = id.parse().map_err(|e| UsageError(format!("{e}")))?;
            print!("{}", generate(id)?.render(format.into())?);
            Ok(0)
        }
        Command::Audit { format } => {
            let results = run_audit()?;
            match format {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&results)?),
                _ => print!("{}", render_text(&results)),
            }
            Ok(if audit_passed(&results) { 0 } else { 1 })
        }
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::from(70)
            }
        }
    }
}
