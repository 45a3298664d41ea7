//! `cera` — temporal filtration analysis of causal graphs.
//!
//! Subcommands: `build` turns an event table into a level-tagged filtration
//! file; `analyze` produces the per-level bridge/component report; `hilbert`
//! prints graded dimension tables; `collapse` prints the aggregated edge
//! ideal; `morphism` checks a vertex map between two filtrations.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when an internal
//! invariant is violated (a bug, reported loudly).

use cera_cli::{formats, report};

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use cera_core::filtration::{auto_grid, Filtration, TimeGrid, VertexMode};
use cera_core::functorial::{
    check_morphism, collapse_from_level_generators, induced_image_check, temporal_collapse,
    verify_naturality,
};
use cera_core::graph::{build_causal_graph, AdmissibilityParams, Metric};
use cera_core::oracle::{brute_force_graded_dim, brute_force_nonface_dim};
use cera_core::rees::{edge_ideal, hilbert_table};
use cera_core::simplicial::{
    clique_complex, sr_hilbert_table, sr_hilbert_table_for_complexes, stanley_reisner_ideal,
    SimplicialComplex,
};

use formats::InputKind;
use report::{ConfigEcho, HilbertTable, InternalError};

#[derive(Parser)]
#[command(
    name = "cera",
    version,
    about = "Temporal filtrations of causal graphs: bridges, edge ideals, graded dimensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a level-tagged filtration file from an event table
    Build(BuildArgs),
    /// Per-level connectivity, edge classification and bridge report
    Analyze(AnalyzeArgs),
    /// Graded dimension tables of the level ideals
    Hilbert(HilbertArgs),
    /// Aggregated edge ideal after collapsing the level grading
    Collapse(CollapseArgs),
    /// Check a vertex map between two filtrations
    Morphism(MorphismArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Events table (csv or json) or level-tagged edge list
    #[arg(long)]
    input: PathBuf,
    /// Input kind; inferred from the file when omitted
    #[arg(long, value_parser = ["events", "levels"])]
    format: Option<String>,
    /// Maximum admissible time gap (events input)
    #[arg(long)]
    delta: Option<f64>,
    /// Maximum admissible spatial distance (events input)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Spatial metric (events input)
    #[arg(long, default_value = "euclidean", value_parser = ["euclidean", "manhattan", "chebyshev"])]
    metric: String,
    /// Time grid: `auto` or comma-separated instants (events input)
    #[arg(long, default_value = "auto")]
    grid: String,
    /// Whether isolated vertices are present at every level
    #[arg(long, default_value = "full", value_parser = ["full", "incident"])]
    vertex_mode: String,
    /// Replay order for a level's new edges
    #[arg(long = "order", default_value = "lex", value_parser = ["lex", "input-order"])]
    order: String,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Include graded dimension tables up to this degree
    #[arg(long = "d-max")]
    d_max: Option<usize>,
    /// Also tabulate the non-face (Stanley–Reisner) ideals
    #[arg(long, requires = "d_max")]
    sr: bool,
    /// Re-derive components and graded cells by brute force and compare
    #[arg(long)]
    oracle: bool,
    /// Extra outputs to write into --out-dir (comma separated: json,csv,dot)
    #[arg(long, value_delimiter = ',', value_parser = ["json", "csv", "dot"])]
    emit: Vec<String>,
    /// Directory for emitted files
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct HilbertArgs {
    /// Events table (csv or json) or level-tagged edge list
    #[arg(long, required_unless_present = "complexes", conflicts_with = "complexes")]
    input: Option<PathBuf>,
    /// Input kind; inferred from the file when omitted
    #[arg(long, value_parser = ["events", "levels"])]
    format: Option<String>,
    /// Maximum admissible time gap (events input)
    #[arg(long)]
    delta: Option<f64>,
    /// Maximum admissible spatial distance (events input)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Spatial metric (events input)
    #[arg(long, default_value = "euclidean", value_parser = ["euclidean", "manhattan", "chebyshev"])]
    metric: String,
    /// Time grid: `auto` or comma-separated instants (events input)
    #[arg(long, default_value = "auto")]
    grid: String,
    /// Whether isolated vertices are present at every level
    #[arg(long, default_value = "full", value_parser = ["full", "incident"])]
    vertex_mode: String,
    /// Largest polynomial degree to tabulate
    #[arg(long = "d-max")]
    d_max: usize,
    /// Which ideals to tabulate
    #[arg(long, default_value = "edge", value_parser = ["edge", "sr"])]
    kind: String,
    /// Simplicial filtration file; implies --kind sr over its complexes
    #[arg(long)]
    complexes: Option<PathBuf>,
    /// Compare every cell against brute-force enumeration
    #[arg(long)]
    oracle: bool,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CollapseArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MorphismArgs {
    /// Source filtration (events or levels file)
    #[arg(long)]
    source: PathBuf,
    /// Target filtration (events or levels file)
    #[arg(long)]
    target: PathBuf,
    /// Vertex map file
    #[arg(long)]
    map: PathBuf,
    /// Maximum admissible time gap (events inputs)
    #[arg(long)]
    delta: Option<f64>,
    /// Maximum admissible spatial distance (events inputs)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Spatial metric (events inputs)
    #[arg(long, default_value = "euclidean", value_parser = ["euclidean", "manhattan", "chebyshev"])]
    metric: String,
    /// Time grid for events inputs: `auto` or comma-separated instants
    #[arg(long, default_value = "auto")]
    grid: String,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Input(e)
    }
}

impl From<InternalError> for CliError {
    fn from(e: InternalError) -> Self {
        CliError::Internal(e.0)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Collapse(args) => cmd_collapse(args),
        Command::Morphism(args) => cmd_morphism(args),
    };
    match result {
        Ok(()) => {}
        Err(CliError::Input(e)) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
        Err(CliError::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn parse_grid_flag(grid: &str) -> anyhow::Result<Option<TimeGrid>> {
    if grid == "auto" {
        return Ok(None);
    }
    let instants: Result<Vec<f64>, _> = grid.split(',').map(|t| t.trim().parse()).collect();
    let instants = instants.map_err(|_| anyhow!("invalid --grid value {grid:?}"))?;
    Ok(Some(TimeGrid::new(instants)?))
}

struct LoadedInput {
    filtration: Filtration,
    kind: InputKind,
    resolved_grid: Option<Vec<f64>>,
}

fn load_filtration(args: &InputArgs) -> anyhow::Result<LoadedInput> {
    let kind = match args.format.as_deref() {
        Some("events") => InputKind::Events,
        Some("levels") => InputKind::Levels,
        _ => formats::sniff_kind(&args.input)?,
    };
    let mode = VertexMode::parse(&args.vertex_mode).expect("validated by clap");
    match kind {
        InputKind::Events => {
            let (delta, epsilon) = match (args.delta, args.epsilon) {
                (Some(d), Some(e)) => (d, e),
                _ => bail!("events input requires --delta and --epsilon"),
            };
            let metric = Metric::parse(&args.metric).expect("validated by clap");
            let params = AdmissibilityParams::new(delta, epsilon, metric)?;
            let events = formats::parse_events(&args.input)?;
            let graph = build_causal_graph(events, &params)?;
            let grid = match parse_grid_flag(&args.grid)? {
                Some(grid) => grid,
                None => auto_grid(&graph)?,
            };
            let filtration = Filtration::build(&graph, &grid, mode)?;
            Ok(LoadedInput {
                filtration,
                kind,
                resolved_grid: Some(grid.instants().to_vec()),
            })
        }
        InputKind::Levels => {
            let filtration = formats::parse_edge_levels(&args.input)?.into_filtration(mode)?;
            Ok(LoadedInput {
                filtration,
                kind,
                resolved_grid: None,
            })
        }
    }
}

fn config_echo(args: &InputArgs, loaded: &LoadedInput, d_max: Option<usize>, sr: bool, oracle: bool) -> ConfigEcho {
    let events = loaded.kind == InputKind::Events;
    ConfigEcho {
        input: args.input.display().to_string(),
        format: loaded.kind.name().to_string(),
        delta: if events { args.delta } else { None },
        epsilon: if events { args.epsilon } else { None },
        metric: events.then(|| args.metric.clone()),
        vertex_mode: args.vertex_mode.clone(),
        order_policy: args.order.clone(),
        grid: loaded.resolved_grid.clone(),
        d_max,
        sr,
        oracle,
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_build(args: BuildArgs) -> Result<(), CliError> {
    let loaded = load_filtration(&args.input)?;
    let text = formats::write_edge_levels(&loaded.filtration);
    write_output(&args.out, &text)?;
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let loaded = load_filtration(&args.input)?;
    let config = config_echo(&args.input, &loaded, args.d_max, args.sr, args.oracle);
    let analysis = report::run_analyze(&loaded.filtration, config)?;
    let json = report::to_json(&analysis.report);
    print!("{json}");

    if !args.emit.is_empty() {
        fs::create_dir_all(&args.out_dir)
            .with_context(|| format!("cannot create {}", args.out_dir.display()))
            .map_err(CliError::Input)?;
        let mut files: Vec<(String, String)> = Vec::new();
        for target in &args.emit {
            match target.as_str() {
                "json" => files.push(("report.json".to_string(), json.clone())),
                "csv" => files.extend(report::to_csv_files(&analysis.report)),
                "dot" => files.extend(report::to_dot_files(&loaded.filtration, &analysis)),
                _ => unreachable!("validated by clap"),
            }
        }
        for (name, content) in files {
            let path = args.out_dir.join(&name);
            fs::write(&path, content)
                .with_context(|| format!("cannot write {}", path.display()))
                .map_err(CliError::Input)?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct HilbertOutput {
    config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    edge: Option<HilbertTable>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    sr: Option<HilbertTable>,
}

fn hilbert_from_rows(table: &cera_core::rees::GradedDimTable) -> HilbertTable {
    HilbertTable {
        d_max: table.d_max(),
        rows: table
            .rows()
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

fn cmd_hilbert(args: HilbertArgs) -> Result<(), CliError> {
    let d_max = args.d_max;

    if let Some(complexes_path) = &args.complexes {
        let file_levels = formats::parse_complexes(complexes_path)?;
        // baseline row: the bare vertex set before any level
        let vertex_set: BTreeSet<_> = file_levels
            .iter()
            .flat_map(|c| c.vertex_set().iter().copied())
            .collect();
        let baseline = SimplicialComplex::from_maximal_faces(vertex_set, [])
            .map_err(|e| CliError::Input(e.into()))?;
        let mut complexes = vec![baseline];
        complexes.extend(file_levels);
        let table = sr_hilbert_table_for_complexes(&complexes, d_max);
        if args.oracle {
            for (n, complex) in complexes.iter().enumerate() {
                for d in 0..=d_max {
                    let fast = table.get(n, d);
                    let slow = brute_force_nonface_dim(complex, d);
                    if *fast != slow {
                        return Err(CliError::Internal(anyhow!(
                            "oracle: non-face H({n},{d}) = {fast} but enumeration counts {slow}"
                        )));
                    }
                }
            }
        }
        let output = HilbertOutput {
            config: ConfigEcho {
                input: complexes_path.display().to_string(),
                format: "complexes".to_string(),
                delta: None,
                epsilon: None,
                metric: None,
                vertex_mode: "full".to_string(),
                order_policy: "lex".to_string(),
                grid: None,
                d_max: Some(d_max),
                sr: true,
                oracle: args.oracle,
            },
            edge: None,
            sr: Some(hilbert_from_rows(&table)),
        };
        let mut text = serde_json::to_string_pretty(&output).expect("serializable");
        text.push('\n');
        write_output(&args.out, &text)?;
        return Ok(());
    }

    let input_args = InputArgs {
        input: args.input.clone().expect("required unless --complexes"),
        format: args.format.clone(),
        delta: args.delta,
        epsilon: args.epsilon,
        metric: args.metric.clone(),
        grid: args.grid.clone(),
        vertex_mode: args.vertex_mode.clone(),
        order: "lex".to_string(),
    };
    let loaded = load_filtration(&input_args)?;
    let filtration = &loaded.filtration;
    let sr_kind = args.kind == "sr";
    let config = config_echo(&input_args, &loaded, Some(d_max), sr_kind, args.oracle);

    let (edge, sr) = if sr_kind {
        let table = sr_hilbert_table(filtration, d_max).map_err(|e| CliError::Input(e.into()))?;
        if args.oracle {
            oracle_check_sr(filtration, &table, d_max)?;
        }
        (None, Some(hilbert_from_rows(&table)))
    } else {
        let table = hilbert_table(filtration, d_max);
        if args.oracle {
            for n in 0..=filtration.level_count() {
                let ideal = edge_ideal(filtration, n);
                for d in 0..=d_max {
                    let fast = table.get(n, d);
                    let slow = brute_force_graded_dim(&ideal, d);
                    if *fast != slow {
                        return Err(CliError::Internal(anyhow!(
                            "oracle: H({n},{d}) = {fast} but enumeration counts {slow}"
                        )));
                    }
                }
            }
        }
        (Some(hilbert_from_rows(&table)), None)
    };

    let output = HilbertOutput { config, edge, sr };
    let mut text = serde_json::to_string_pretty(&output).expect("serializable");
    text.push('\n');
    write_output(&args.out, &text)?;
    Ok(())
}

fn oracle_check_sr(
    filtration: &Filtration,
    table: &cera_core::rees::GradedDimTable,
    d_max: usize,
) -> Result<(), CliError> {
    for n in 0..=filtration.level_count() {
        let lg = filtration
            .underlying_undirected(n)
            .map_err(|e| CliError::Input(e.into()))?;
        let complex = clique_complex(&lg);
        for d in 0..=d_max {
            let fast = table.get(n, d);
            let slow = brute_force_nonface_dim(&complex, d);
            let via_ideal = stanley_reisner_ideal(&complex).graded_dim(d);
            if *fast != slow || via_ideal != slow {
                return Err(CliError::Internal(anyhow!(
                    "oracle: non-face H({n},{d}) = {fast} (ideal route {via_ideal}) but enumeration counts {slow}"
                )));
            }
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CollapseOutput {
    config: ConfigEcho,
    generators: Vec<String>,
}

fn cmd_collapse(args: CollapseArgs) -> Result<(), CliError> {
    let loaded = load_filtration(&args.input)?;
    let collapsed = temporal_collapse(&loaded.filtration);
    let via_levels = collapse_from_level_generators(&loaded.filtration)
        .map_err(|e| CliError::Input(e.into()))?;
    if collapsed.minimal_generators() != via_levels.minimal_generators() {
        return Err(CliError::Internal(anyhow!(
            "collapsed ideal disagrees with the union of level generators"
        )));
    }
    let output = CollapseOutput {
        config: config_echo(&args.input, &loaded, None, false, false),
        generators: collapsed
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&output).expect("serializable");
    text.push('\n');
    write_output(&args.out, &text)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct MorphismEdgeOut {
    u: u64,
    v: u64,
}

#[derive(Serialize, Deserialize)]
struct MorphismViolationOut {
    u: u64,
    v: u64,
    level: usize,
}

#[derive(Serialize, Deserialize)]
struct MorphismOutput {
    source: String,
    target: String,
    valid: bool,
    violations: Vec<MorphismViolationOut>,
    collapsed_edges: Vec<MorphismEdgeOut>,
    induced_image_ok: bool,
    naturality_ok: bool,
}

fn cmd_morphism(args: MorphismArgs) -> Result<(), CliError> {
    let input_for = |path: &Path| InputArgs {
        input: path.to_path_buf(),
        format: None,
        delta: args.delta,
        epsilon: args.epsilon,
        metric: args.metric.clone(),
        grid: args.grid.clone(),
        vertex_mode: "full".to_string(),
        order: "lex".to_string(),
    };
    let source = load_filtration(&input_for(&args.source))?.filtration;
    let target = load_filtration(&input_for(&args.target))?.filtration;
    let map = formats::parse_morphism(&args.map)?;

    let checked =
        check_morphism(&source, &target, &map).map_err(|e| CliError::Input(e.into()))?;
    if !checked.collapsed.is_empty() {
        eprintln!(
            "warning: {} edge(s) collapse onto a single vertex; their images are squares and cannot be target edges",
            checked.collapsed.len()
        );
    }
    let induced =
        induced_image_check(&source, &target, &map).map_err(|e| CliError::Input(e.into()))?;
    let natural =
        verify_naturality(&source, &target, &map).map_err(|e| CliError::Input(e.into()))?;

    let output = MorphismOutput {
        source: args.source.display().to_string(),
        target: args.target.display().to_string(),
        valid: checked.is_valid(),
        violations: checked
            .violations
            .iter()
            .map(|violation| MorphismViolationOut {
                u: violation.edge.0 .0,
                v: violation.edge.1 .0,
                level: violation.level,
            })
            .collect(),
        collapsed_edges: checked
            .collapsed
            .iter()
            .map(|&(u, v)| MorphismEdgeOut { u: u.0, v: v.0 })
            .collect(),
        induced_image_ok: induced,
        naturality_ok: natural,
    };
    let mut text = serde_json::to_string_pretty(&output).expect("serializable");
    text.push('\n');
    write_output(&args.out, &text)?;
    Ok(())
}
