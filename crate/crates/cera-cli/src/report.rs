//! Analysis report assembly and emission.
//!
//! The JSON report is deterministic: struct field order and sorted
//! collections fix the key and row ordering, so identical input and config
//! produce byte-identical output. Graded dimension cells are serialized as
//! decimal strings because they can exceed 53-bit float precision.

use anyhow::{anyhow, Result};
use serde::{Deserialize, Serialize};

use cera_core::connectivity::{
    beta0, bridge_polynomial, classify_level_edges, verify_bridge_theorem, LevelClassification,
    OrderPolicy,
};
use cera_core::filtration::{Filtration, UndirectedEdge, VertexMode};
use cera_core::oracle::{bfs_component_count, brute_force_graded_dim, brute_force_nonface_dim};
use cera_core::rees::{edge_ideal, hilbert_table, GradedDimTable};
use cera_core::simplicial::{clique_complex, sr_hilbert_table};

/// Input configuration echoed into every report, so output files are
/// self-describing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub input: String,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub metric: Option<String>,
    pub vertex_mode: String,
    pub order_policy: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_max: Option<usize>,
    #[serde(default)]
    pub sr: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub n: usize,
    pub t_n: Option<f64>,
    pub edge_count: usize,
    pub beta0: usize,
    pub dim_b: usize,
    pub dim_c: usize,
    pub dim_r: usize,
    pub theorem_holds: bool,
    pub discrepancy: usize,
}

/// Graded dimension table with cells rendered as decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub d_max: usize,
    pub rows: Vec<Vec<String>>,
}

impl HilbertTable {
    fn from_table(table: &GradedDimTable) -> Self {
        HilbertTable {
            d_max: table.d_max(),
            rows: table
                .rows()
                .iter()
                .map(|row| row.iter().map(|cell| cell.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub config: ConfigEcho,
    pub vertex_count: usize,
    pub beta0_initial: usize,
    pub levels: Vec<LevelRecord>,
    pub bridge_polynomial: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilbert_edge: Option<HilbertTable>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilbert_sr: Option<HilbertTable>,
}

/// Report plus the per-level classifications (needed by the DOT emitter).
pub struct Analysis {
    pub report: AnalysisReport,
    pub classifications: Vec<LevelClassification>,
}

/// Errors that indicate a broken internal invariant rather than bad input;
/// the CLI maps these to a distinct exit code.
#[derive(Debug)]
pub struct InternalError(pub anyhow::Error);

fn internal(message: String) -> InternalError {
    InternalError(anyhow!(message))
}

pub fn run_analyze(
    filtration: &Filtration,
    config: ConfigEcho,
) -> Result<Analysis, InternalError> {
    let policy = OrderPolicy::parse(&config.order_policy).expect("validated by the CLI");
    let full = filtration.vertex_mode() == VertexMode::Full;
    let k = filtration.level_count();

    let fail = |message: String| Err(internal(message));

    let beta0_initial = beta0(filtration, 0).expect("level 0 always exists");
    let theorem = verify_bridge_theorem(filtration, policy).expect("levels in range");
    let mut classifications = Vec::with_capacity(k);
    let mut levels = Vec::with_capacity(k);
    let mut beta_prev = beta0_initial;
    for n in 1..=k {
        let classification = classify_level_edges(filtration, n, policy).expect("level in range");
        let beta_now = beta0(filtration, n).expect("level in range");
        let diff_size = filtration.level_diff(n).expect("level in range").len();
        let record = LevelRecord {
            n,
            t_n: filtration.instants().map(|ts| ts[n - 1]),
            edge_count: filtration.edges_at(n).len(),
            beta0: beta_now,
            dim_b: classification.dim_b,
            dim_c: classification.dim_c,
            dim_r: classification.dim_r,
            theorem_holds: theorem[n - 1].holds,
            discrepancy: theorem[n - 1].discrepancy,
        };

        // consistency gates; a failure here is a bug, not bad input
        if record.dim_b + record.dim_c + record.dim_r != diff_size {
            return fail(format!(
                "level {n}: dimension sum {} differs from diff size {diff_size}",
                record.dim_b + record.dim_c + record.dim_r
            ));
        }
        if full && !record.theorem_holds {
            return fail(format!(
                "level {n}: bridge count {} does not match component drop under the full vertex set",
                record.dim_b
            ));
        }
        let expected =
            beta_prev as i64 + classification.creations() as i64 - classification.dim_b as i64;
        if beta_now as i64 != expected {
            return fail(format!(
                "level {n}: component ledger expected {expected}, counted {beta_now}"
            ));
        }

        beta_prev = beta_now;
        classifications.push(classification);
        levels.push(record);
    }

    let polynomial = bridge_polynomial(filtration, policy).expect("levels in range");
    if full {
        let bound = filtration.vertices().len() - beta0(filtration, k).expect("level in range");
        if polynomial.total_bridges() > bound {
            return fail(format!(
                "total bridges {} exceed the spanning bound {bound}",
                polynomial.total_bridges()
            ));
        }
    }

    let hilbert_edge = config
        .d_max
        .map(|d_max| hilbert_table(filtration, d_max))
        .map(|table| HilbertTable::from_table(&table));
    let hilbert_sr = match config.d_max {
        Some(d_max) if config.sr => Some(HilbertTable::from_table(
            &sr_hilbert_table(filtration, d_max).expect("levels in range"),
        )),
        _ => None,
    };

    if config.oracle {
        oracle_pass(filtration, &levels, config.d_max)?;
    }

    Ok(Analysis {
        report: AnalysisReport {
            config,
            vertex_count: filtration.vertices().len(),
            beta0_initial,
            levels,
            bridge_polynomial: polynomial.coefficients().to_vec(),
            hilbert_edge,
            hilbert_sr,
        },
        classifications,
    })
}

/// Re-derives component counts by breadth-first search and graded cells by
/// exhaustive enumeration; any disagreement is an internal failure.
fn oracle_pass(
    filtration: &Filtration,
    levels: &[LevelRecord],
    d_max: Option<usize>,
) -> Result<(), InternalError> {
    for record in levels {
        let lg = filtration
            .underlying_undirected(record.n)
            .expect("level in range");
        let via_bfs = bfs_component_count(&lg);
        if via_bfs != record.beta0 {
            return Err(internal(format!(
                "oracle: level {}: BFS counts {via_bfs} components, union-find {}",
                record.n, record.beta0
            )));
        }
    }
    if let Some(d_max) = d_max {
        for n in 0..=filtration.level_count() {
            let ideal = edge_ideal(filtration, n);
            let complex =
                clique_complex(&filtration.underlying_undirected(n).expect("level in range"));
            for d in 0..=d_max {
                let fast = ideal.graded_dim(d);
                let slow = brute_force_graded_dim(&ideal, d);
                if fast != slow {
                    return Err(internal(format!(
                        "oracle: H({n},{d}) = {fast} but enumeration counts {slow}"
                    )));
                }
                let nonface_fast = cera_core::simplicial::stanley_reisner_ideal(&complex)
                    .graded_dim(d);
                let nonface_slow = brute_force_nonface_dim(&complex, d);
                if nonface_fast != nonface_slow {
                    return Err(internal(format!(
                        "oracle: non-face H({n},{d}) = {nonface_fast} but enumeration counts {nonface_slow}"
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn to_json(report: &AnalysisReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn parse_report(text: &str) -> Result<AnalysisReport> {
    Ok(serde_json::from_str(text)?)
}

/// One CSV table per report section, as (file name, content) pairs.
pub fn to_csv_files(report: &AnalysisReport) -> Vec<(String, String)> {
    let mut files = Vec::new();

    let mut config = String::from("key,value\n");
    let echo = &report.config;
    let entries: Vec<(&str, String)> = vec![
        ("input", echo.input.clone()),
        ("format", echo.format.clone()),
        ("delta", echo.delta.map_or(String::new(), |x| x.to_string())),
        (
            "epsilon",
            echo.epsilon.map_or(String::new(), |x| x.to_string()),
        ),
        ("metric", echo.metric.clone().unwrap_or_default()),
        ("vertex_mode", echo.vertex_mode.clone()),
        ("order_policy", echo.order_policy.clone()),
        (
            "grid",
            echo.grid.as_ref().map_or(String::new(), |g| {
                g.iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }),
        ),
        ("d_max", echo.d_max.map_or(String::new(), |x| x.to_string())),
        ("oracle", echo.oracle.to_string()),
        ("vertex_count", report.vertex_count.to_string()),
        ("beta0_initial", report.beta0_initial.to_string()),
    ];
    for (key, value) in entries {
        config.push_str(&format!("{key},{value}\n"));
    }
    files.push(("report_config.csv".to_string(), config));

    let mut levels =
        String::from("n,t_n,edge_count,beta0,dim_b,dim_c,dim_r,theorem_holds,discrepancy\n");
    for r in &report.levels {
        levels.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.t_n.map_or(String::new(), |t| t.to_string()),
            r.edge_count,
            r.beta0,
            r.dim_b,
            r.dim_c,
            r.dim_r,
            r.theorem_holds,
            r.discrepancy
        ));
    }
    files.push(("report_levels.csv".to_string(), levels));

    let mut polynomial = String::from("n,coefficient\n");
    for (i, c) in report.bridge_polynomial.iter().enumerate() {
        polynomial.push_str(&format!("{},{c}\n", i + 1));
    }
    files.push(("report_bridge_polynomial.csv".to_string(), polynomial));

    for (name, table) in [
        ("report_hilbert_edge.csv", &report.hilbert_edge),
        ("report_hilbert_sr.csv", &report.hilbert_sr),
    ] {
        if let Some(table) = table {
            files.push((name.to_string(), hilbert_csv(table)));
        }
    }
    files
}

pub fn hilbert_csv(table: &HilbertTable) -> String {
    let mut out = String::from("n");
    for d in 0..=table.d_max {
        out.push_str(&format!(",d={d}"));
    }
    out.push('\n');
    for (n, row) in table.rows.iter().enumerate() {
        out.push_str(&n.to_string());
        for cell in row {
            out.push(',');
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}

/// One DOT file per level: the level's undirected graph with that level's
/// bridges highlighted.
pub fn to_dot_files(filtration: &Filtration, analysis: &Analysis) -> Vec<(String, String)> {
    let mut files = Vec::new();
    for record in &analysis.report.levels {
        let n = record.n;
        let lg = filtration.underlying_undirected(n).expect("level in range");
        let bridges: std::collections::BTreeSet<UndirectedEdge> = analysis.classifications
            [n - 1]
            .bridges()
            .copied()
            .collect();
        let mut dot = format!("graph \"level_{n}\" {{\n");
        dot.push_str(&format!(
            "  label=\"level {n}: edges={}, beta0={}\";\n  labelloc=\"t\";\n  node [shape=circle];\n",
            record.edge_count, record.beta0
        ));
        for v in &lg.vertices {
            dot.push_str(&format!("  \"{v}\";\n"));
        }
        for edge in &lg.undirected_edges {
            let (a, b) = edge.endpoints();
            if bridges.contains(edge) {
                dot.push_str(&format!(
                    "  \"{a}\" -- \"{b}\" [color=red, penwidth=2.0, label=\"bridge\"];\n"
                ));
            } else {
                dot.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
            }
        }
        dot.push_str("}\n");
        files.push((format!("level_{n}.dot"), dot));
    }
    files
}
