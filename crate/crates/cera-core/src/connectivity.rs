//! Connected components along the filtration, classification of newly
//! arriving edges, bridge/cycle/residual dimensions and the bridge
//! polynomial; verification that the bridge count equals the drop in the
//! number of components.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::filtration::{Filtration, LevelGraph, UndirectedEdge, VertexMode};
use crate::graph::VertexId;

/// Union-find forest over a set of vertices, tracking the number of disjoint
/// sets (= β₀ of the graph whose edges have been merged in).
#[derive(Debug, Clone, Default)]
pub struct ComponentState {
    index: BTreeMap<VertexId, usize>,
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl ComponentState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Seeds the forest with a level graph: all its vertices, then all its
    /// edges merged in.
    pub fn from_level_graph(g: &LevelGraph) -> Self {
        let mut state = Self::new();
        for &v in &g.vertices {
            state.add_vertex(v);
        }
        for e in &g.undirected_edges {
            let (a, b) = e.endpoints();
            state.union(a, b);
        }
        state
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    /// Adds an isolated vertex; returns false if it was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.index.contains_key(&v) {
            return false;
        }
        let id = self.parent.len();
        self.index.insert(v, id);
        self.parent.push(id);
        self.size.push(1);
        self.components += 1;
        true
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// True iff both vertices are present and lie in the same set.
    pub fn in_same_set(&mut self, u: VertexId, v: VertexId) -> bool {
        match (self.index.get(&u).copied(), self.index.get(&v).copied()) {
            (Some(a), Some(b)) => self.find(a) == self.find(b),
            _ => false,
        }
    }

    /// Merges the sets of `u` and `v` (adding missing vertices first);
    /// returns true iff two distinct sets were joined.
    pub fn union(&mut self, u: VertexId, v: VertexId) -> bool {
        self.add_vertex(u);
        self.add_vertex(v);
        let mut a = self.find(self.index[&u]);
        let mut b = self.find(self.index[&v]);
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

/// Order in which a level's new edges are replayed against the union-find.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderPolicy {
    /// Sorted endpoint pairs; reproducible regardless of input order.
    #[default]
    Lex,
    /// The order edges appeared in the input.
    InputOrder,
}

impl OrderPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            OrderPolicy::Lex => "lex",
            OrderPolicy::InputOrder => "input-order",
        }
    }

    pub fn parse(s: &str) -> Option<OrderPolicy> {
        match s {
            "lex" => Some(OrderPolicy::Lex),
            "input-order" | "input" => Some(OrderPolicy::InputOrder),
            _ => None,
        }
    }
}

/// How a newly arriving edge interacts with the components accumulated so
/// far. Expansion and creation only occur in incident vertex mode, where a
/// level's vertex set grows with its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeClass {
    /// Joins two distinct existing components.
    Bridge,
    /// Closes a cycle within one existing component.
    Cycle,
    /// Attaches one new vertex to an existing component.
    Expansion,
    /// Both endpoints are new: a fresh component appears.
    Creation,
}

impl EdgeClass {
    pub fn name(&self) -> &'static str {
        match self {
            EdgeClass::Bridge => "bridge",
            EdgeClass::Cycle => "cycle",
            EdgeClass::Expansion => "expansion",
            EdgeClass::Creation => "creation",
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification of one level's new edges, with the dimensions of the
/// bridge, cycle and residual summands and the component counts before and
/// after the level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelClassification {
    pub level: usize,
    pub classified: BTreeMap<UndirectedEdge, EdgeClass>,
    pub dim_b: usize,
    pub dim_c: usize,
    pub dim_r: usize,
    pub beta0_before: usize,
    pub beta0_after: usize,
}

impl LevelClassification {
    pub fn bridges(&self) -> impl Iterator<Item = &UndirectedEdge> {
        self.classified
            .iter()
            .filter(|(_, c)| **c == EdgeClass::Bridge)
            .map(|(e, _)| e)
    }

    pub fn creations(&self) -> usize {
        self.classified
            .values()
            .filter(|c| **c == EdgeClass::Creation)
            .count()
    }

    pub fn new_edge_count(&self) -> usize {
        self.classified.len()
    }
}

/// Number of connected components of the undirected graph at level n, under
/// the filtration's vertex mode.
pub fn beta0(filtration: &Filtration, n: usize) -> Result<usize> {
    let lg = filtration.underlying_undirected(n)?;
    Ok(ComponentState::from_level_graph(&lg).component_count())
}

/// Replays the edges introduced at level n, in the chosen order, against a
/// union-find seeded with the previous level. Each edge is classified at its
/// processing time; when several new edges would join the same component
/// pair, only the first counts as a bridge and later ones close cycles, so
/// the bridge dimension counts independent merge events exactly.
pub fn classify_level_edges(
    filtration: &Filtration,
    n: usize,
    policy: OrderPolicy,
) -> Result<LevelClassification> {
    let prev = filtration.underlying_undirected(n - 1)?;
    let mut state = ComponentState::from_level_graph(&prev);
    let beta0_before = state.component_count();

    let ordered: Vec<UndirectedEdge> = match policy {
        OrderPolicy::Lex => filtration
            .level_diff(n)?
            .iter()
            .map(|&(u, v)| UndirectedEdge::new(u, v))
            .collect(),
        OrderPolicy::InputOrder => filtration
            .level_diff_ordered(n)?
            .iter()
            .map(|&(u, v)| UndirectedEdge::new(u, v))
            .collect(),
    };

    let full = filtration.vertex_mode() == VertexMode::Full;
    let mut classified = BTreeMap::new();
    let (mut dim_b, mut dim_c, mut dim_r) = (0, 0, 0);
    for edge in ordered {
        let (u, v) = edge.endpoints();
        let u_known = state.contains(u);
        let v_known = state.contains(v);
        let class = match (u_known, v_known) {
            (true, true) => {
                if state.in_same_set(u, v) {
                    EdgeClass::Cycle
                } else {
                    EdgeClass::Bridge
                }
            }
            (false, false) => EdgeClass::Creation,
            _ => EdgeClass::Expansion,
        };
        debug_assert!(
            !full || matches!(class, EdgeClass::Bridge | EdgeClass::Cycle),
            "full mode admits only bridges and cycles"
        );
        state.union(u, v);
        match class {
            EdgeClass::Bridge => dim_b += 1,
            EdgeClass::Cycle => dim_c += 1,
            EdgeClass::Expansion | EdgeClass::Creation => dim_r += 1,
        }
        let previous = classified.insert(edge, class);
        debug_assert!(previous.is_none(), "level diffs hold each pair once");
    }

    Ok(LevelClassification {
        level: n,
        classified,
        dim_b,
        dim_c,
        dim_r,
        beta0_before,
        beta0_after: state.component_count(),
    })
}

/// Coefficients c_1 … c_k of the generating function Σ c_n tⁿ, where c_n is
/// the bridge dimension at level n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgePolynomial {
    coefficients: Vec<usize>,
}

impl BridgePolynomial {
    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    pub fn total_bridges(&self) -> usize {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for BridgePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let n = i + 1;
            let coeff = if c == 1 { String::new() } else { c.to_string() };
            let power = if n == 1 {
                "t".to_string()
            } else {
                format!("t^{n}")
            };
            terms.push(format!("{coeff}{power}"));
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

pub fn bridge_polynomial(filtration: &Filtration, policy: OrderPolicy) -> Result<BridgePolynomial> {
    let mut coefficients = Vec::with_capacity(filtration.level_count());
    for n in 1..=filtration.level_count() {
        coefficients.push(classify_level_edges(filtration, n, policy)?.dim_b);
    }
    Ok(BridgePolynomial { coefficients })
}

/// Per-level comparison of the bridge dimension against the drop in the
/// component count. `holds` states their equality; `discrepancy` is the
/// number of creation edges, which accounts for any mismatch in incident
/// mode (components can appear there, so the drop may even be negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremLevelReport {
    pub level: usize,
    pub dim_b: usize,
    pub beta0_drop: i64,
    pub holds: bool,
    pub discrepancy: usize,
}

pub fn verify_bridge_theorem(
    filtration: &Filtration,
    policy: OrderPolicy,
) -> Result<Vec<TheoremLevelReport>> {
    let mut reports = Vec::with_capacity(filtration.level_count());
    let mut beta_prev = beta0(filtration, 0)?;
    for n in 1..=filtration.level_count() {
        let classification = classify_level_edges(filtration, n, policy)?;
        let beta_now = beta0(filtration, n)?;
        let drop = beta_prev as i64 - beta_now as i64;
        reports.push(TheoremLevelReport {
            level: n,
            dim_b: classification.dim_b,
            beta0_drop: drop,
            holds: classification.dim_b as i64 == drop,
            discrepancy: classification.creations(),
        });
        beta_prev = beta_now;
    }
    Ok(reports)
}
