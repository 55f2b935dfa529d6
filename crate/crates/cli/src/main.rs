//! `wreath`: command-line front end for groups, closures and the verification suite.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use wreath_core::io::{digraph_from_json, graph_from_json, group_from_json, hypergraph_from_json};
use wreath_core::{
    automorphism_group, classify, closure, composition, free_composition,
    free_composition_directed, orbit_hypergraph, orbital_digraph, orbital_graph,
    parse_group_spec_with, wreath_imprimitive, wreath_product_action, AnyStructure, ClosureKind,
    Error, Limits, PermGroup,
};
use wreath_harness::{run_suite, Oracle};

use crate::output::{render_structure, Structure};

#[derive(Parser, Debug)]
#[command(
    name = "wreath",
    version,
    about = "Permutation groups, wreath products and their graph closures"
)]
struct Cli {
    /// Largest number of group elements ever enumerated.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    order_cap: u64,
    /// Largest number of points of a constructed group.
    #[arg(long, global = true, default_value_t = 4096)]
    point_cap: usize,
    /// Largest vertex count for graph and digraph searches.
    #[arg(long, global = true, default_value_t = 128)]
    graph_cap: usize,
    /// Largest vertex count for hypergraph searches.
    #[arg(long, global = true, default_value_t = 16)]
    hypergraph_cap: usize,
    /// Time budget per automorphism search in milliseconds; 0 disables it.
    #[arg(long, global = true, default_value_t = 120_000)]
    timeout_ms: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize a group: order, orbits, orbitals.
    Group { spec: String },
    /// Membership in GR, DGR, BGR and DGR+, with witnesses.
    Classify { spec: String },
    /// Compute the 2*-closure (gr), 2-closure (dgr) or subset-orbit closure (bgr).
    Closure {
        #[arg(long, value_enum)]
        kind: Kind,
        spec: String,
    },
    /// Build a wreath product.
    Wreath {
        fibre: String,
        base: String,
        #[arg(long, value_enum, default_value_t = Action::Imprimitive)]
        action: Action,
    },
    /// Automorphism group of a structure read from a JSON file.
    Aut { file: PathBuf },
    /// Lexicographic or free composition `G o H` of two orbital structures.
    ///
    /// Each operand is a group spec (its orbital graph or digraph is used)
    /// or `@FILE` holding a graph or digraph in JSON.
    Compose {
        outer: String,
        inner: String,
        #[arg(long)]
        free: bool,
        #[arg(long)]
        directed: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite; exits with status 2 on any disagreement.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Include per-outcome running times.
        #[arg(long)]
        timings: bool,
    },
    /// Write a group or one of its orbital structures.
    Export {
        /// Group spec; omit when using --input.
        spec: Option<String>,
        #[arg(long, value_enum, default_value_t = Object::Group)]
        object: Object,
        /// Re-emit a structure read from a JSON file instead.
        #[arg(long, conflicts_with = "spec")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Classify small catalog groups and products, listing those in a class.
    Scan {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = ScanClass::All)]
        class: ScanClass,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Gr,
    Dgr,
    Bgr,
}

impl From<Kind> for ClosureKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Gr => ClosureKind::Gr,
            Kind::Dgr => ClosureKind::Dgr,
            Kind::Bgr => ClosureKind::Bgr,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Action {
    Imprimitive,
    Product,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Object {
    Group,
    OrbitalGraph,
    OrbitalDigraph,
    OrbitHypergraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanClass {
    /// 2-closed but not subset-orbit closed.
    DgrNotBgr,
    /// Subset-orbit closed but not the group of any uncolored hypergraph.
    BgrNotUncolored,
    All,
}

/// Outcome of a command that did not succeed normally.
enum Failure {
    Computation(String),
    Parse(String),
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Json(_) => Failure::Parse(e.to_string()),
            other => Failure::Computation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Computation(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn limits(cli: &Cli) -> Limits {
    Limits {
        order_cap: cli.order_cap,
        point_cap: cli.point_cap,
        graph_cap: cli.graph_cap,
        hypergraph_cap: cli.hypergraph_cap,
        timeout: (cli.timeout_ms > 0).then(|| Duration::from_millis(cli.timeout_ms)),
    }
}

/// A group spec, or `@FILE` holding either a spec or a group in JSON.
fn load_group(spec: &str, limits: Limits) -> Result<PermGroup, Failure> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            if text.trim_start().starts_with('{') {
                Ok(group_from_json(&text)?.with_limits(limits))
            } else {
                Ok(parse_group_spec_with(text.trim(), limits)?)
            }
        }
        None => Ok(parse_group_spec_with(spec, limits)?),
    }
}

fn load_structure(text: &str) -> Result<Structure, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
    if value.get("generators").is_some() {
        Ok(Structure::Group(group_from_json(text)?))
    } else if value.get("vertex_colors").is_some() {
        Ok(Structure::Digraph(digraph_from_json(text)?))
    } else if value.get("colors").is_some_and(|c| c.is_object()) {
        Ok(Structure::Hypergraph(hypergraph_from_json(text)?))
    } else {
        Ok(Structure::Graph(graph_from_json(text)?))
    }
}

fn operand(spec: &str, directed: bool, limits: Limits) -> Result<Structure, Failure> {
    if let Some(path) = spec.strip_prefix('@') {
        let s = load_structure(&std::fs::read_to_string(path)?)?;
        if matches!(s, Structure::Graph(_) | Structure::Digraph(_)) {
            return Ok(s);
        }
        return Err(Failure::Parse(format!(
            "{path}: expected a graph or digraph"
        )));
    }
    let g = parse_group_spec_with(spec, limits)?;
    Ok(if directed {
        Structure::Digraph(orbital_digraph(&g)?)
    } else {
        Structure::Graph(orbital_graph(&g)?)
    })
}

fn run(cli: &Cli) -> Outcome {
    let limits = limits(cli);
    let json = cli.json;
    match &cli.command {
        Command::Group { spec } => {
            let g = load_group(spec, limits)?;
            Ok(output::group_summary(spec, &g, json)?)
        }
        Command::Classify { spec } => {
            let g = load_group(spec, limits)?;
            Ok(output::class_report(spec, &classify(&g)?, json)?)
        }
        Command::Closure { kind, spec } => {
            let g = load_group(spec, limits)?;
            let c = closure(&g, (*kind).into())?;
            Ok(output::closure_summary(spec, (*kind).into(), &g, &c, json)?)
        }
        Command::Wreath {
            fibre,
            base,
            action,
        } => {
            let (a, b) = (load_group(fibre, limits)?, load_group(base, limits)?);
            let (g, label) = match action {
                Action::Imprimitive => (wreath_imprimitive(&a, &b)?, format!("wr({fibre},{base})")),
                Action::Product => (
                    wreath_product_action(&a, &b)?,
                    format!("wrp({fibre},{base})"),
                ),
            };
            Ok(output::group_summary(&label, &g, json)?)
        }
        Command::Aut { file } => {
            let s = match load_structure(&std::fs::read_to_string(file)?)? {
                Structure::Graph(g) => AnyStructure::Graph(g),
                Structure::Digraph(d) => AnyStructure::Digraph(d),
                Structure::Hypergraph(h) => AnyStructure::Hypergraph(h),
                Structure::Group(_) => {
                    return Err(Failure::Parse(
                        "expected a graph, digraph or hypergraph".into(),
                    ))
                }
            };
            let g = automorphism_group(&s, &limits)?;
            Ok(output::group_summary(
                &file.display().to_string(),
                &g,
                json,
            )?)
        }
        Command::Compose {
            outer,
            inner,
            free,
            directed,
            format,
        } => {
            let (g, h) = (
                operand(outer, *directed, limits)?,
                operand(inner, *directed, limits)?,
            );
            let result = match (g, h, free) {
                (Structure::Graph(g), Structure::Graph(h), false) => {
                    Structure::Graph(composition(&g, &h)?)
                }
                (Structure::Graph(g), Structure::Graph(h), true) => {
                    Structure::Graph(free_composition(&g, &h, &limits)?)
                }
                (Structure::Digraph(g), Structure::Digraph(h), true) => {
                    Structure::Digraph(free_composition_directed(&g, &h, &limits)?)
                }
                _ => {
                    return Err(Failure::Parse(
                        "operands must both be graphs, or both digraphs with --free".into(),
                    ))
                }
            };
            Ok(render_structure(&result, *format)?)
        }
        Command::Verify { suite, timings } => {
            let report = run_suite(suite, &Oracle::exact().with_limits(limits))?;
            let text = if json {
                serde_json::to_string_pretty(&report.to_json(*timings)).expect("report serializes")
                    + "\n"
            } else {
                report.table(*timings)
            };
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Disagreement)
            }
        }
        Command::Export {
            spec,
            object,
            input,
            format,
            output,
        } => {
            let structure = match (spec, input) {
                (_, Some(path)) => load_structure(&std::fs::read_to_string(path)?)?,
                (Some(spec), None) => {
                    let g = load_group(spec, limits)?;
                    match object {
                        Object::Group => Structure::Group(g),
                        Object::OrbitalGraph => Structure::Graph(orbital_graph(&g)?),
                        Object::OrbitalDigraph => Structure::Digraph(orbital_digraph(&g)?),
                        Object::OrbitHypergraph => Structure::Hypergraph(orbit_hypergraph(&g)?),
                    }
                }
                (None, None) => {
                    return Err(Failure::Parse("export needs a spec or --input".into()))
                }
            };
            let text = render_structure(&structure, *format)?;
            match output {
                Some(path) => {
                    std::fs::write(path, text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Scan { max_degree, class } => Ok(output::scan(*max_degree, *class, limits, json)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Disagreement) => ExitCode::from(2),
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
