//! Argument parsing and the subcommand drivers.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use orthocircle::analysis::audit;
use orthocircle::arrangement::{
    depth_labeling, is_nonnested, validate, Arrangement, Observed, ValidationMode, ValidationReport, Violation,
};
use orthocircle::cells::build_subdivision;
use orthocircle::generators::{augment_triangles, make_b, make_nonnested_b, make_random_nonnested, make_wheel, perturb_acute};
use orthocircle::geom::Tolerance;
use orthocircle::graph::{build_graph, check_bounds, distinct_count, find_forbidden, max_edges_c3c4_free};

use crate::document::ArrangementDocument;
use crate::report::{AnalyzeReport, CellsReport, OracleReport, ReportDocument};
use crate::{read_file, svg, write_output, CliError};

#[derive(Debug, Parser)]
#[command(name = "orthocircle", version, about = "Construct, validate and analyze arrangements of orthogonal circles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an arrangement document.
    Gen(GenArgs),
    /// Check pairwise crossing angles; one violation per line.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Accept crossing angles at most a right angle.
        #[arg(long)]
        acute: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph statistics, edge bounds and forbidden subgraphs.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Face census of the arc subdivision.
    Cells {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the structural audit.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive small-graph search.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Render the arrangement as SVG.
    ExportSvg {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Arrangement document.
    pub file: PathBuf,
    /// Override the document's relative tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Wheel,
    B,
    Nonnested,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    /// Number of nested wheels (b, nonnested).
    #[arg(long, default_value_t = 1)]
    pub wheels: usize,
    /// Satellites per wheel (wheel, b).
    #[arg(long, default_value_t = 5)]
    pub satellites: usize,
    /// Circle count (random).
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add small circles at every crossing point.
    #[arg(long)]
    pub augment: bool,
    /// Shrink radii until every crossing is acute (uses --seed).
    #[arg(long)]
    pub acute: bool,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OracleQuery {
    /// Largest edge count of an n-vertex graph without triangles or induced 4-cycles.
    MaxEdges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Violation,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 1,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Violation
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match run(cli, stdout, stderr) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(&args, stdout),
        Command::Verify { input, acute, out } => cmd_verify(&input, acute, out.as_deref(), stdout),
        Command::Analyze { input, out } => cmd_analyze(&input, out.as_deref(), stdout, stderr),
        Command::Cells { input, out } => cmd_cells(&input, out.as_deref(), stdout, stderr),
        Command::Audit { input, out } => cmd_audit(&input, out.as_deref(), stdout, stderr),
        Command::Oracle { query: OracleQuery::MaxEdges { n, out } } => cmd_oracle(n, out.as_deref(), stdout),
        Command::ExportSvg { input, out } => {
            let arr = load(&input)?;
            write_output(out.as_deref(), svg::render(&arr).as_bytes(), stdout)?;
            Ok(Outcome::Ok)
        }
    }
}

fn load(input: &InputArgs) -> Result<Arrangement, CliError> {
    ArrangementDocument::parse(&read_file(&input.file)?)?.to_arrangement(input.tolerance)
}

fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut arr = match args.kind {
        GenKind::Wheel => make_wheel(args.satellites, 1.0, std::f64::consts::PI / args.satellites.max(1) as f64)?,
        GenKind::B => make_b(args.wheels, args.satellites)?,
        GenKind::Nonnested => make_nonnested_b(args.wheels)?,
        GenKind::Random => make_random_nonnested(args.n, args.seed)?,
    };
    if let Some(eps) = args.tolerance {
        arr = arr.with_tolerance(Tolerance::new(eps)?);
    }
    if args.augment {
        arr = augment_triangles(&arr)?;
    }
    if args.acute {
        arr = perturb_acute(&arr, args.seed)?.arrangement;
    }
    let text = ArrangementDocument::from_arrangement(&arr).to_text();
    write_output(args.out.as_deref(), text.as_bytes(), stdout)?;
    Ok(Outcome::Ok)
}

fn violation_line(v: &Violation) -> String {
    match v.observed {
        Observed::Tangent => format!("{} {}: tangent; expected {}", v.a, v.b, v.expected),
        Observed::Crossing { angle } => {
            format!("{} {}: crossing angle {angle}; expected {}", v.a, v.b, v.expected)
        }
    }
}

fn cmd_verify(input: &InputArgs, acute: bool, out: Option<&Path>, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let arr = load(input)?;
    let mode = if acute { ValidationMode::Acute } else { ValidationMode::Orthogonal };
    let report = validate(&arr, mode);
    let lines: String = report.violations.iter().map(|v| violation_line(v) + "\n").collect();
    write_output(None, lines.as_bytes(), stdout)?;
    if let Some(path) = out {
        write_output(Some(path), ReportDocument::new("verify", &report).to_text().as_bytes(), stdout)?;
    }
    Ok(Outcome::from_ok(report.ok))
}

/// Orthogonal if possible, else acute; `None` if neither.
fn detect_mode(arr: &Arrangement) -> (Option<ValidationMode>, ValidationReport) {
    let orth = validate(arr, ValidationMode::Orthogonal);
    if orth.ok {
        return (Some(ValidationMode::Orthogonal), orth);
    }
    let acute = validate(arr, ValidationMode::Acute);
    if acute.ok {
        (Some(ValidationMode::Acute), acute)
    } else {
        (None, orth)
    }
}

fn cmd_analyze(
    input: &InputArgs,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let arr = load(input)?;
    let (mode, validation) = detect_mode(&arr);
    if mode.is_none() {
        for v in &validation.violations {
            let _ = writeln!(stderr, "{}", violation_line(v));
        }
        return Ok(Outcome::Violation);
    }
    let g = build_graph(&arr)?;
    let crossings = g.crossing_pairs();
    let nonnested = is_nonnested(&arr);
    let outer_face_size = if crossings.is_plane() { Some(distinct_count(&g.outer_face_walk()?)) } else { None };
    let forbidden_checked = mode == Some(ValidationMode::Orthogonal);
    let report = AnalyzeReport {
        mode,
        validation,
        n: g.vertex_count(),
        m: g.edge_count(),
        nonnested,
        crossing_count: crossings.count(),
        depth_histogram: depth_labeling(&arr).histogram(),
        outer_face_size,
        bounds: check_bounds(&arr)?,
        forbidden_checked,
        forbidden: if forbidden_checked { find_forbidden(&g) } else { None },
    };
    let ok = report.bounds.all_pass() && report.forbidden.is_none() && !(nonnested && report.crossing_count > 0);
    write_output(out, ReportDocument::new("analyze", &report).to_text().as_bytes(), stdout)?;
    Ok(Outcome::from_ok(ok))
}

fn cmd_cells(
    input: &InputArgs,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let arr = load(input)?;
    let sub = match build_subdivision(&arr) {
        Ok(sub) => sub,
        // Tangencies and coincident crossing points leave no valid subdivision.
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            return Ok(Outcome::Violation);
        }
    };
    let report = CellsReport {
        vertices: sub.vertex_count(),
        arcs: sub.arc_count(),
        loops: sub.loop_count(),
        faces: sub.face_count(),
        components: sub.component_count(),
        euler_holds: sub.euler_holds(),
        census: sub.census(),
    };
    write_output(out, ReportDocument::new("cells", &report).to_text().as_bytes(), stdout)?;
    Ok(Outcome::from_ok(report.euler_holds))
}

fn cmd_audit(
    input: &InputArgs,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let arr = load(input)?;
    let report = audit(&arr);
    write_output(out, ReportDocument::new("audit", &report).to_text().as_bytes(), stdout)?;
    if report.mode.is_none() {
        let _ = writeln!(stderr, "arrangement is neither orthogonal nor acute; nothing audited");
        return Ok(Outcome::Violation);
    }
    for entry in report.failures() {
        let _ = writeln!(stderr, "FAIL {}", entry.check.tag());
    }
    Ok(Outcome::from_ok(!report.has_fail()))
}

fn cmd_oracle(n: usize, out: Option<&Path>, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let (max_edges, witness) = max_edges_c3c4_free(n)?;
    let report = OracleReport {
        n,
        max_edges,
        witness_edges: witness.edges(),
        witness_degrees: witness.degree_sequence(),
    };
    write_output(out, ReportDocument::new("oracle", &report).to_text().as_bytes(), stdout)?;
    Ok(Outcome::Ok)
}
