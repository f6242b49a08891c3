//! `acolor`: acyclic edge colorings of planar graphs from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 improper coloring,
//! 3 bichromatic cycle, 4 incomplete coloring, 5 planarity refuted,
//! 6 budget or tier cap exhausted.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use acyclic_planar::colorer::{acolor_with, ColorerOptions, Tier};
use acyclic_planar::coloring::json::ColoringDoc;
use acyclic_planar::coloring::{validate_acyclic, PartialEdgeColoring, Verdict};
use acyclic_planar::discharging::audit_triangulation;
use acyclic_planar::embedding::{generate_apollonian, rotations, RotationSystem};
use acyclic_planar::error::Error;
use acyclic_planar::families;
use acyclic_planar::graph::Graph;
use acyclic_planar::oracle::{exact_chi_a, is_acyclically_k_colorable, SearchBudget};
use acyclic_planar::scanner::find_configuration;
use acyclic_planar::{Rational, SCHEMA};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "acolor", version, about = "Acyclic edge coloring of planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scalar {
    Exact,
    F64,
    F32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Wheel,
    Grid,
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a planar graph as an edge list.
    Gen {
        /// Stacked triangulation with this many vertices.
        #[arg(long, conflicts_with = "family")]
        apollonian: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Size parameter for --family (vertices, leaves, rim or rows).
        #[arg(long, default_value_t = 4)]
        size: usize,
        /// Columns for --family grid.
        #[arg(long, default_value_t = 4)]
        cols: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Also write the rotation system here.
        #[arg(long)]
        rotation: Option<PathBuf>,
    },
    /// Color a graph with at most max-degree + 10 colors.
    #[command(visible_alias = "acolor")]
    Color {
        /// Edge list, or a coloring document whose graph is reused.
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Write the reduction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Highest extension tier allowed (1-4).
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=4))]
        max_tier: u8,
        /// Node budget for exhaustive recoloring.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a coloring document for totality, properness and acyclicity.
    Verify {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact acyclic chromatic index, or a k-colorability decision.
    #[command(name = "chi-a")]
    ChiA {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Maximum search nodes.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Report a vertex realizing one of A1-A4.
    #[command(name = "find-config")]
    FindConfig {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Charge audit of an embedded triangulation.
    Audit {
        /// Edge list; needs --rotation.
        #[arg(long = "in", requires = "rotation")]
        input: Option<PathBuf>,
        #[arg(long)]
        rotation: Option<PathBuf>,
        /// Audit a generated stacked triangulation instead.
        #[arg(long, conflicts_with = "input")]
        apollonian: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "exact")]
        scalar: Scalar,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotPlanarEvidence(_) => 5,
            Error::BudgetExhausted { .. } | Error::TierCapReached { .. } => 6,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn write_output(path: &Path, text: &str) -> io::Result<()> {
    if path == Path::new("-") {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()
    } else {
        fs::write(path, text)
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Edge list, or the graph of a coloring document.
fn parse_graph(text: &str) -> Result<Graph, Error> {
    if text.trim_start().starts_with('{') {
        Ok(ColoringDoc::from_json(text)?.into_parts()?.0)
    } else {
        Graph::parse_edge_list(text)
    }
}

fn dot(g: &Graph, phi: &PartialEdgeColoring) -> String {
    let mut s = String::from("graph coloring {\n  node [shape=circle];\n");
    for v in g.vertices() {
        s.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        match phi.color(e) {
            Some(c) => {
                // Cycle through a 12-color brewer scheme; the label keeps
                // the exact index.
                let hue = (c.get() - 1) % 12 + 1;
                s.push_str(&format!(
                    "  {} -- {} [label=\"{c}\", colorscheme=set312, color={hue}];\n",
                    e.lo(),
                    e.hi()
                ));
            }
            None => s.push_str(&format!("  {} -- {} [style=dashed];\n", e.lo(), e.hi())),
        }
    }
    s.push_str("}\n");
    s
}

fn plain_coloring(g: &Graph, phi: &PartialEdgeColoring) -> String {
    let mut s = format!("{} {} {}\n", g.vertex_count(), g.edge_count(), phi.palette_size());
    for e in g.edges() {
        let c = phi.color(e).map_or("-".to_string(), |c| c.to_string());
        s.push_str(&format!("{} {} {c}\n", e.lo(), e.hi()));
    }
    s
}

fn generate(family: Family, size: usize, cols: usize) -> (Graph, RotationSystem) {
    match family {
        Family::Path => (families::path(size), rotations::path(size)),
        Family::Cycle => (families::cycle(size), rotations::cycle(size)),
        Family::Star => (families::star(size), rotations::star(size)),
        Family::Wheel => (families::wheel(size), rotations::wheel(size)),
        Family::Grid => (families::grid(size, cols), rotations::grid(size, cols)),
        Family::Tetrahedron => (families::tetrahedron(), rotations::tetrahedron()),
        Family::Octahedron => (families::octahedron(), rotations::octahedron()),
        Family::Cube => (families::cube(), rotations::cube()),
        Family::Icosahedron => (families::icosahedron(), rotations::icosahedron()),
        Family::Dodecahedron => (families::dodecahedron(), rotations::dodecahedron()),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen {
            apollonian,
            seed,
            family,
            size,
            cols,
            out,
            rotation,
        } => {
            let (g, rot) = match (apollonian, family) {
                (Some(n), _) => generate_apollonian(n, seed)?,
                (None, Some(f)) => generate(f, size, cols),
                (None, None) => {
                    return Err(Failure {
                        code: 1,
                        message: "gen needs --apollonian N or --family NAME".into(),
                    })
                }
            };
            if let Some(path) = rotation {
                write_output(&path, &with_newline(rot.to_text()))?;
            }
            write_output(&out, &with_newline(g.to_edge_list()))?;
            Ok(0)
        }
        Command::Color {
            input,
            out,
            trace,
            max_tier,
            budget,
            format,
        } => {
            let g = parse_graph(&read_input(&input)?)?;
            let mut opts = ColorerOptions {
                max_tier: Tier::from_level(max_tier).expect("range checked by clap"),
                ..ColorerOptions::default()
            };
            if let Some(nodes) = budget {
                opts.exhaustive_budget = SearchBudget::new(nodes, opts.exhaustive_budget.wall_clock)?;
            }
            let (phi, steps) = acolor_with(&g, &opts)?;
            if let Some(path) = trace {
                write_output(&path, &with_newline(steps.to_json().to_string()))?;
            }
            let text = match format {
                Format::Json => ColoringDoc::new(&g, &phi).to_json(),
                Format::Dot => dot(&g, &phi),
                Format::Plain => plain_coloring(&g, &phi),
            };
            write_output(&out, &with_newline(text))?;
            Ok(0)
        }
        Command::Verify { input, format } => {
            let doc = ColoringDoc::from_json(&read_input(&input)?)?;
            let (g, phi) = doc.into_parts()?;
            let report = validate_acyclic(&g, &phi);
            let verdict = report.verdict();
            let text = match format {
                Format::Plain => json!(verdict).as_str().unwrap_or_default().to_string(),
                _ => json!({"schema": SCHEMA, "verdict": verdict, "report": report}).to_string(),
            };
            write_output(Path::new("-"), &with_newline(text))?;
            Ok(match verdict {
                Verdict::Acyclic => 0,
                Verdict::Improper => 2,
                Verdict::BichromaticCycle => 3,
                Verdict::Incomplete => 4,
            })
        }
        Command::ChiA {
            input,
            k,
            budget,
            timeout,
        } => {
            let g = parse_graph(&read_input(&input)?)?;
            let budget = SearchBudget::new(budget, timeout.map(Duration::from_secs))?;
            let line = match k {
                Some(k) => match is_acyclically_k_colorable(&g, k, budget) {
                    Ok(answer) => answer.to_string(),
                    Err(Error::BudgetExhausted { .. }) => "exhausted".into(),
                    Err(e) => return Err(e.into()),
                },
                None => match exact_chi_a(&g, budget) {
                    Ok(value) => value.to_string(),
                    Err(_) => "exhausted".into(),
                },
            };
            write_output(Path::new("-"), &with_newline(line.clone()))?;
            Ok(if line == "exhausted" { 6 } else { 0 })
        }
        Command::FindConfig { input, format } => {
            let g = parse_graph(&read_input(&input)?)?;
            let cfg = find_configuration(&g)?;
            let text = match format {
                Format::Plain => {
                    let ns: Vec<String> = cfg.neighbors.iter().map(|n| format!("{}:{}", n.v, n.d)).collect();
                    format!("{} {} {}", cfg.kind, cfg.v, ns.join(" "))
                }
                _ => json!({"schema": SCHEMA, "config": cfg}).to_string(),
            };
            write_output(Path::new("-"), &with_newline(text))?;
            Ok(0)
        }
        Command::Audit {
            input,
            rotation,
            apollonian,
            seed,
            scalar,
        } => {
            let (g, rot) = match (input, apollonian) {
                (Some(path), _) => {
                    let g = parse_graph(&read_input(&path)?)?;
                    let rot_path = rotation.expect("clap enforces --rotation with --in");
                    (g, RotationSystem::parse(&read_input(&rot_path)?)?)
                }
                (None, Some(n)) => generate_apollonian(n, seed)?,
                (None, None) => {
                    return Err(Failure {
                        code: 1,
                        message: "audit needs --in with --rotation, or --apollonian N".into(),
                    })
                }
            };
            let report = match scalar {
                Scalar::Exact => audit_triangulation::<Rational>(&g, &rot)?.to_json(),
                Scalar::F64 => audit_triangulation::<f64>(&g, &rot)?.to_json(),
                Scalar::F32 => audit_triangulation::<f32>(&g, &rot)?.to_json(),
            };
            write_output(Path::new("-"), &with_newline(report.to_string()))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("acolor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
