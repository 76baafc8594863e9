//! Command-line front end. [`run`] never panics on bad input: usage and input errors
//! exit with 2, audit failures (a TIE or MISMATCH certificate, or a property-suite
//! counterexample) exit with 1.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::checks;
use crate::condiam::{brute_force_conditional_diameter, conditional_diameter};
use crate::error::{Error, Result};
use crate::families::{claimed_extremal, FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::invariants::{transmission, InvariantReport};
use crate::search::{
    audit, audit_grid, sweep_class, verify_claim, Graph6Lines, Source, VerificationCertificate,
    CSV_HEADER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_AUDIT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "condiam", version, about = "Wiener index and conditional diameter toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of one graph
    Compute(ComputeArgs),
    /// Emit a family member or a claimed extremal graph as graph6
    Family(FamilyArgs),
    /// Conditional diameter D(G;s) with a witness pair
    Condiam(CondiamArgs),
    /// Randomised property suites for the Wiener-monotone transformations
    TransformCheck(TransformCheckArgs),
    /// Wiener maximisers of one class filtered by conditional diameter
    Sweep(SweepArgs),
    /// Audit one (c, s, n) extremal claim
    Verify(VerifyArgs),
    /// Audit a grid of (c, s, n) instances
    Audit(AuditArgs),
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Inline graph6 record
    #[arg(long, conflicts_with = "input")]
    g6: Option<String>,
    /// File holding graph6 records; the first one is used
    #[arg(long)]
    input: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.g6, &self.input) {
            (Some(text), _) => parse_graph6(text.as_bytes()),
            (None, Some(path)) => {
                let file = std::fs::File::open(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                Graph6Lines::new(std::io::BufReader::new(file), false)
                    .next()
                    .unwrap_or(Err(Error::EmptySource))
            }
            (None, None) => Err(Error::InvalidParameter("one of --g6 or --input is required".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    G6,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write machine output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long)]
    wiener: bool,
    #[arg(long)]
    diameter: bool,
    /// Transmission of this vertex
    #[arg(long)]
    transmission: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// path, cycle, single, double or tail2
    #[arg(long, required_unless_present = "claimed")]
    kind: Option<String>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Emit the claimed extremal graph for (c, s, n) instead
    #[arg(long, requires_all = ["c", "s"])]
    claimed: bool,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<i32>,
    #[arg(long)]
    s: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CondiamArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long)]
    s: usize,
    /// Also evaluate the definitional brute force and compare
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct TransformCheckArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// trees, exhaustive or g6:PATH
    #[arg(long, default_value = "trees")]
    source: String,
    /// Skip malformed graph6 lines instead of aborting
    #[arg(long)]
    lenient: bool,
    #[arg(long, env = "CONDIAM_THREADS", default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s: usize,
    #[arg(long = "target-d")]
    target_d: u32,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    c: i32,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [-1, 0, 1])]
    c: Vec<i32>,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
    s: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// Parses `args` (including the program name) and dispatches. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            // first line only: the diagnostic, without the usage block
            let text = e.render().to_string();
            let _ = writeln!(stderr, "{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(output: &OutputArgs, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute(args) => compute(args, stdout),
        Command::Family(args) => family(args, stdout),
        Command::Condiam(args) => condiam(args, stdout),
        Command::TransformCheck(args) => transform_check(args, stdout),
        Command::Sweep(args) => sweep(args, stdout),
        Command::Verify(args) => verify(args, stdout),
        Command::Audit(args) => run_audit(args, stdout),
    }
}

fn compute(args: ComputeArgs, stdout: &mut dyn Write) -> Result<i32> {
    let g = args.graph.load()?;
    let report = InvariantReport::compute(&g)?;
    let selected = args.wiener || args.diameter || args.transmission.is_some();
    let text = match args.output.format.unwrap_or(Format::Text) {
        Format::Json => with_newline(serde_json::to_string_pretty(&report).expect("serialisable")),
        Format::Text if selected => {
            let mut lines = Vec::new();
            if args.wiener {
                lines.push(report.wiener.to_string());
            }
            if args.diameter {
                lines.push(report.diameter.to_string());
            }
            if let Some(u) = args.transmission {
                lines.push(transmission(&g, u)?.to_string());
            }
            with_newline(lines.join("\n"))
        }
        Format::Text => {
            let trans: Vec<String> = report.transmissions.iter().map(u64::to_string).collect();
            format!(
                "n {}\nm {}\nwiener {}\ndiameter {}\ntransmissions {}\n",
                report.n,
                g.size(),
                report.wiener,
                report.diameter,
                trans.join(" ")
            )
        }
        other => return Err(Error::InvalidParameter(format!("compute does not support {other:?} output"))),
    };
    emit(&args.output, stdout, &text)?;
    Ok(EXIT_OK)
}

fn family(args: FamilyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let g = if args.claimed {
        claimed_extremal(args.c.expect("required by clap"), args.s.expect("required by clap"), args.n)?
    } else {
        let kind: FamilyKind = args.kind.as_deref().unwrap_or_default().parse()?;
        FamilySpec { kind, n: args.n, i: args.i, j: args.j }.build()?
    };
    let text = match args.output.format.unwrap_or(Format::G6) {
        Format::G6 | Format::Text => with_newline(emit_graph6(&g)?),
        Format::Json => with_newline(
            json!({ "n": g.order(), "edges": g.edges().collect::<Vec<_>>(), "graph6": emit_graph6(&g)? })
                .to_string(),
        ),
        Format::Csv => return Err(Error::InvalidParameter("family does not support csv output".into())),
    };
    emit(&args.output, stdout, &text)?;
    Ok(EXIT_OK)
}

fn condiam(args: CondiamArgs, stdout: &mut dyn Write) -> Result<i32> {
    let g = args.graph.load()?;
    let (value, witness) = conditional_diameter(&g, args.s)?;
    let brute = if args.check {
        Some(brute_force_conditional_diameter(&g, args.s)?)
    } else {
        None
    };
    let text = match args.output.format.unwrap_or(Format::Text) {
        Format::Json => with_newline(
            serde_json::to_string_pretty(&json!({ "s": args.s, "value": value, "witness": witness, "brute_force": brute }))
                .expect("serialisable"),
        ),
        Format::Text => {
            let mut text = format!("{value}\n");
            if let Some(w) = &witness {
                text += &format!("V1 {:?}\nV2 {:?}\n", w.v1, w.v2);
            }
            if let Some(b) = brute {
                text += &format!("brute-force {b}\n");
            }
            text
        }
        other => return Err(Error::InvalidParameter(format!("condiam does not support {other:?} output"))),
    };
    emit(&args.output, stdout, &text)?;
    if brute.is_some_and(|b| b != value) {
        return Err(Error::Inconsistent(format!("exact {value} != brute force {}", brute.unwrap())));
    }
    Ok(EXIT_OK)
}

fn transform_check(args: TransformCheckArgs, stdout: &mut dyn Write) -> Result<i32> {
    let reports = checks::run_all(args.trials, args.max_n, args.seed)?;
    let text = match args.output.format.unwrap_or(Format::Text) {
        Format::Json => with_newline(serde_json::to_string_pretty(&reports).expect("serialisable")),
        _ => {
            let mut text = String::new();
            for r in &reports {
                text += &format!(
                    "{} checked={} failures={}\n",
                    r.name,
                    r.checked,
                    r.failures.len()
                );
                for f in &r.failures {
                    text += &format!("  counterexample: {f}\n");
                }
            }
            text
        }
    };
    emit(&args.output, stdout, &text)?;
    Ok(if reports.iter().all(checks::CheckReport::passed) { EXIT_OK } else { EXIT_AUDIT })
}

fn sweep(args: SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let source: Source = args.source.source.parse()?;
    let graphs = source.graphs(args.n, args.source.lenient)?;
    let report = sweep_class(&graphs, args.s, args.target_d, args.source.threads)?;
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Text => {
            let mut text = format!(
                "examined {}\nclass_size {}\nmax_wiener {}\n",
                report.examined,
                report.class_size,
                report.max_wiener.map(|w| w.to_string()).unwrap_or_else(|| "-".into())
            );
            for m in &report.maximizers {
                text += &format!("maximizer {}\n", m.graph6);
            }
            text
        }
        Format::G6 => report.maximizers.iter().map(|m| format!("{}\n", m.graph6)).collect(),
        _ => with_newline(serde_json::to_string_pretty(&report).expect("serialisable")),
    };
    emit(&args.output, stdout, &text)?;
    Ok(EXIT_OK)
}

fn certificate_exit(certs: &[VerificationCertificate]) -> i32 {
    if certs.iter().any(|c| c.status.is_audit_failure()) {
        EXIT_AUDIT
    } else {
        EXIT_OK
    }
}

fn render_certificates(certs: &[VerificationCertificate], format: Format, single: bool) -> Result<String> {
    Ok(match format {
        Format::Json if single => with_newline(certs[0].to_json()),
        Format::Json => with_newline(serde_json::to_string_pretty(certs).expect("serialisable")),
        Format::Csv => {
            let mut text = format!("{CSV_HEADER}\n");
            for c in certs {
                text += &c.to_csv_row();
                text.push('\n');
            }
            text
        }
        Format::Text => {
            let mut text = String::new();
            for c in certs {
                text += &format!(
                    "c={} s={} n={} D={} class={} maxW={} status={}",
                    c.claim.c,
                    c.claim.s,
                    c.claim.n,
                    c.claim.target_d,
                    c.report.class_size,
                    c.report.max_wiener.map(|w| w.to_string()).unwrap_or_else(|| "-".into()),
                    c.status
                );
                if let Some(x) = &c.crosscheck {
                    text += &format!(
                        " poly={} construction={}",
                        x.claimed_poly_value, x.construction_difference_value
                    );
                }
                text.push('\n');
                if c.status.is_audit_failure() {
                    for m in &c.report.maximizers {
                        text += &format!("  maximizer {}\n", m.graph6);
                    }
                }
            }
            text
        }
        Format::G6 => return Err(Error::InvalidParameter("certificates are JSON, CSV or text".into())),
    })
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let source: Source = args.source.source.parse()?;
    let graphs = source.graphs(args.n, args.source.lenient)?;
    let cert = verify_claim(args.c, args.s, args.n, &graphs, &source.describe(args.n), args.source.threads)?;
    let certs = [cert];
    let text = render_certificates(&certs, args.output.format.unwrap_or(Format::Json), true)?;
    emit(&args.output, stdout, &text)?;
    Ok(certificate_exit(&certs))
}

fn run_audit(args: AuditArgs, stdout: &mut dyn Write) -> Result<i32> {
    let source: Source = args.source.source.parse()?;
    let grid = audit_grid(&args.c, &args.s, args.n_min, args.n_max);
    if grid.is_empty() {
        return Err(Error::InvalidParameter("no admissible (c, s, n) in the grid".into()));
    }
    let certs = audit(&grid, &source, args.source.lenient, args.source.threads)?;
    let text = render_certificates(&certs, args.output.format.unwrap_or(Format::Csv), false)?;
    emit(&args.output, stdout, &text)?;
    Ok(certificate_exit(&certs))
}
