//! Cumulative temporal filtrations E_1 ⊆ … ⊆ E_k of a causal graph, and the
//! per-level undirected graphs derived from them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CeraError, Result};
use crate::graph::{CausalGraph, DirectedEdge, VertexId};

/// Strictly increasing sequence of time instants t_1 < … < t_k.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    instants: Vec<f64>,
}

impl TimeGrid {
    pub fn new(instants: Vec<f64>) -> Result<Self> {
        if instants.is_empty() {
            return Err(CeraError::EmptyGrid);
        }
        if instants.iter().any(|t| !t.is_finite()) {
            return Err(CeraError::NonFinite("time grid"));
        }
        if instants.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CeraError::NonIncreasingGrid);
        }
        Ok(TimeGrid { instants })
    }

    pub fn instants(&self) -> &[f64] {
        &self.instants
    }

    pub fn len(&self) -> usize {
        self.instants.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Whether every vertex of the universe is present at every level, or only
/// the vertices incident to edges accumulated so far.
///
/// Full mode counts isolated vertices toward the component count, which makes
/// the bridge-count/component-drop identity hold unconditionally; incident
/// mode restricts each level to the vertices its edges touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexMode {
    #[default]
    Full,
    Incident,
}

impl VertexMode {
    pub fn name(&self) -> &'static str {
        match self {
            VertexMode::Full => "full",
            VertexMode::Incident => "incident",
        }
    }

    pub fn parse(s: &str) -> Option<VertexMode> {
        match s {
            "full" => Some(VertexMode::Full),
            "incident" => Some(VertexMode::Incident),
            _ => None,
        }
    }
}

/// Unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UndirectedEdge {
    a: VertexId,
    b: VertexId,
}

impl UndirectedEdge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        debug_assert_ne!(u, v, "self-loops are excluded upstream");
        if u <= v {
            UndirectedEdge { a: u, b: v }
        } else {
            UndirectedEdge { a: v, b: u }
        }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }
}

impl fmt::Display for UndirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.a, self.b)
    }
}

/// Symmetrized snapshot of one filtration level: its vertex set (per the
/// filtration's vertex mode) and deduplicated undirected edges.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelGraph {
    pub level: usize,
    pub vertices: BTreeSet<VertexId>,
    pub undirected_edges: BTreeSet<UndirectedEdge>,
}

/// Increasing sequence of cumulative edge sets indexed by level, together
/// with the vertex universe. Level 0 is always the empty edge set, and
/// levels stabilize beyond the last one.
///
/// A filtration is built either from a causal graph and a time grid
/// ([`Filtration::build`]: level n holds the edges whose target time is at
/// most t_n) or directly from level-tagged edge lists
/// ([`Filtration::from_level_diffs`]), which covers inputs stated per level
/// without timestamps.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    vertices: BTreeSet<VertexId>,
    /// cumulative[n] = E_n; cumulative[0] is empty, length is k + 1.
    cumulative: Vec<BTreeSet<DirectedEdge>>,
    /// diff_order[n - 1] = edges introduced at level n, in input order.
    diff_order: Vec<Vec<DirectedEdge>>,
    instants: Option<Vec<f64>>,
    vertex_mode: VertexMode,
}

impl Filtration {
    /// Builds the filtration of `graph` over `grid`: E_n = edges whose target
    /// timestamp is at most t_n. Edges arriving after the last instant are
    /// absent from every level. Fails if the graph violates the causal
    /// condition.
    pub fn build(graph: &CausalGraph, grid: &TimeGrid, mode: VertexMode) -> Result<Self> {
        let violations = graph.validate_causal();
        if !violations.is_empty() {
            return Err(CeraError::NotCausal(violations.len()));
        }
        let k = grid.len();
        let mut cumulative = Vec::with_capacity(k + 1);
        cumulative.push(BTreeSet::new());
        let mut diff_order = Vec::with_capacity(k);
        for n in 1..=k {
            let t_n = grid.instants()[n - 1];
            let level: BTreeSet<DirectedEdge> = graph
                .edges()
                .iter()
                .copied()
                .filter(|&(_, v)| graph.tau(v).expect("endpoint validated") <= t_n)
                .collect();
            let diff: Vec<DirectedEdge> =
                level.difference(&cumulative[n - 1]).copied().collect();
            diff_order.push(diff);
            cumulative.push(level);
        }
        Ok(Filtration {
            vertices: graph.vertex_ids(),
            cumulative,
            diff_order,
            instants: Some(grid.instants().to_vec()),
            vertex_mode: mode,
        })
    }

    /// Assembles cumulative levels from per-level lists of newly arriving
    /// edges. Monotonicity holds by construction; every endpoint must belong
    /// to the given universe, each directed edge may arrive only once, and
    /// both orientations of a pair are rejected (such data cannot come from a
    /// causally ordered graph).
    pub fn from_level_diffs(
        vertices: BTreeSet<VertexId>,
        diffs: Vec<Vec<DirectedEdge>>,
        mode: VertexMode,
    ) -> Result<Self> {
        if diffs.is_empty() {
            return Err(CeraError::EmptyFiltration);
        }
        let mut cumulative = vec![BTreeSet::new()];
        let mut seen_pairs: BTreeSet<UndirectedEdge> = BTreeSet::new();
        let mut diff_order = Vec::with_capacity(diffs.len());
        for diff in diffs {
            let mut level = cumulative.last().unwrap().clone();
            for &(u, v) in &diff {
                if u == v {
                    return Err(CeraError::SelfLoop(u));
                }
                for w in [u, v] {
                    if !vertices.contains(&w) {
                        return Err(CeraError::EndpointOutsideUniverse(w));
                    }
                }
                if !seen_pairs.insert(UndirectedEdge::new(u, v)) {
                    if level.contains(&(u, v)) {
                        return Err(CeraError::DuplicateEdge(u, v));
                    }
                    return Err(CeraError::OrientationClash(u, v));
                }
                level.insert((u, v));
            }
            diff_order.push(diff);
            cumulative.push(level);
        }
        Ok(Filtration {
            vertices,
            cumulative,
            diff_order,
            instants: None,
            vertex_mode: mode,
        })
    }

    /// Number of levels k.
    pub fn level_count(&self) -> usize {
        self.cumulative.len() - 1
    }

    pub fn vertex_mode(&self) -> VertexMode {
        self.vertex_mode
    }

    /// Same filtration viewed under a different vertex mode.
    pub fn with_vertex_mode(&self, mode: VertexMode) -> Self {
        let mut f = self.clone();
        f.vertex_mode = mode;
        f
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    /// Grid instants when the filtration was built from a graph; absent for
    /// level-tagged ingestion.
    pub fn instants(&self) -> Option<&[f64]> {
        self.instants.as_deref()
    }

    /// Attaches grid instants to a level-tagged filtration, one per level.
    pub fn with_instants(mut self, instants: Vec<f64>) -> Result<Self> {
        let grid = TimeGrid::new(instants)?;
        if grid.len() != self.level_count() {
            return Err(CeraError::InstantCountMismatch {
                instants: grid.len(),
                levels: self.level_count(),
            });
        }
        self.instants = Some(grid.instants().to_vec());
        Ok(self)
    }

    /// E_n, with E_0 empty and E_n = E_k for n ≥ k (stabilization).
    pub fn edges_at(&self, n: usize) -> &BTreeSet<DirectedEdge> {
        &self.cumulative[n.min(self.level_count())]
    }

    fn check_level(&self, n: usize, lowest: usize) -> Result<()> {
        let k = self.level_count();
        if n < lowest || n > k {
            return Err(CeraError::LevelOutOfRange { level: n, max: k });
        }
        Ok(())
    }

    /// E_n \ E_{n−1} for 1 ≤ n ≤ k.
    pub fn level_diff(&self, n: usize) -> Result<BTreeSet<DirectedEdge>> {
        self.check_level(n, 1)?;
        Ok(self.diff_order[n - 1].iter().copied().collect())
    }

    /// The level diff in input order, for order-sensitive consumers.
    pub fn level_diff_ordered(&self, n: usize) -> Result<&[DirectedEdge]> {
        self.check_level(n, 1)?;
        Ok(&self.diff_order[n - 1])
    }

    /// Symmetrized, deduplicated view of level n with the vertex set chosen
    /// by the filtration's vertex mode.
    pub fn underlying_undirected(&self, n: usize) -> Result<LevelGraph> {
        self.check_level(n, 0)?;
        let undirected_edges: BTreeSet<UndirectedEdge> = self
            .edges_at(n)
            .iter()
            .map(|&(u, v)| UndirectedEdge::new(u, v))
            .collect();
        let vertices = match self.vertex_mode {
            VertexMode::Full => self.vertices.clone(),
            VertexMode::Incident => undirected_edges
                .iter()
                .flat_map(|e| {
                    let (a, b) = e.endpoints();
                    [a, b]
                })
                .collect(),
        };
        Ok(LevelGraph {
            level: n,
            vertices,
            undirected_edges,
        })
    }
}

/// Grid made of the distinct target timestamps of the graph's edges, so the
/// filtration grows exactly when edges arrive. A graph without edges gets a
/// single instant at its latest event time.
pub fn auto_grid(graph: &CausalGraph) -> Result<TimeGrid> {
    if graph.vertex_count() == 0 {
        return Err(CeraError::EmptyGraph);
    }
    let mut targets: Vec<f64> = graph
        .edges()
        .iter()
        .map(|&(_, v)| graph.tau(v).expect("endpoint validated"))
        .collect();
    if targets.is_empty() {
        let max_tau = graph
            .events()
            .map(|e| e.tau)
            .fold(f64::NEG_INFINITY, f64::max);
        return TimeGrid::new(vec![max_tau]);
    }
    targets.sort_by(|a, b| a.partial_cmp(b).unwrap());
    targets.dedup();
    TimeGrid::new(targets)
}
