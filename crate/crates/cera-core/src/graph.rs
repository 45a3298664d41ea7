//! Spatiotemporal causal graphs: timestamped events in space joined by
//! directed edges that always point forward in time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{CeraError, Result};

/// Identifier of a vertex. Ids may be dense or sparse; uniqueness within a
/// graph is enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for VertexId {
    fn from(id: u64) -> Self {
        VertexId(id)
    }
}

/// Directed edge (source, target).
pub type DirectedEdge = (VertexId, VertexId);

/// A spatially localized event: a vertex with coordinates and a timestamp.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub vertex: VertexId,
    pub coords: Vec<f64>,
    pub tau: f64,
}

impl Event {
    pub fn new(vertex: impl Into<VertexId>, coords: Vec<f64>, tau: f64) -> Self {
        Event {
            vertex: vertex.into(),
            coords,
            tau,
        }
    }
}

/// Spatial distance function used by the admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Euclidean,
    Manhattan,
    Chebyshev,
}

impl Metric {
    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        match self {
            Metric::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            Metric::Manhattan => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
            Metric::Chebyshev => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Manhattan => "manhattan",
            Metric::Chebyshev => "chebyshev",
        }
    }

    pub fn parse(s: &str) -> Option<Metric> {
        match s {
            "euclidean" => Some(Metric::Euclidean),
            "manhattan" => Some(Metric::Manhattan),
            "chebyshev" => Some(Metric::Chebyshev),
            _ => None,
        }
    }
}

/// Constraints under which a directed pair of events admits a causal edge:
/// a maximum time gap `delta` and a maximum spatial distance `epsilon`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityParams {
    pub delta: f64,
    pub epsilon: f64,
    pub metric: Metric,
}

impl AdmissibilityParams {
    pub fn new(delta: f64, epsilon: f64, metric: Metric) -> Result<Self> {
        if !delta.is_finite() || delta <= 0.0 {
            return Err(CeraError::NonPositiveParam("delta"));
        }
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(CeraError::NonPositiveParam("epsilon"));
        }
        Ok(AdmissibilityParams {
            delta,
            epsilon,
            metric,
        })
    }
}

/// An edge whose endpoints do not respect the strict temporal ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalViolation {
    pub edge: DirectedEdge,
    pub tau_source: f64,
    pub tau_target: f64,
}

/// A finite set of events together with directed edges. Construction
/// enforces structural well-formedness (unique ids, consistent coordinate
/// dimension, finite values, endpoints present, no self-loops or duplicate
/// pairs); the temporal ordering of edges is checked by [`validate_causal`].
#[derive(Debug, Clone, PartialEq)]
pub struct CausalGraph {
    events: BTreeMap<VertexId, Event>,
    edges: BTreeSet<DirectedEdge>,
}

impl CausalGraph {
    pub fn new(
        events: Vec<Event>,
        edges: impl IntoIterator<Item = DirectedEdge>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut dim: Option<usize> = None;
        for event in events {
            if !event.tau.is_finite() {
                return Err(CeraError::NonFinite("event timestamp"));
            }
            if event.coords.iter().any(|c| !c.is_finite()) {
                return Err(CeraError::NonFinite("event coordinates"));
            }
            match dim {
                None => dim = Some(event.coords.len()),
                Some(d) if d != event.coords.len() => {
                    return Err(CeraError::DimensionMismatch(d, event.coords.len()))
                }
                _ => {}
            }
            if map.insert(event.vertex, event.clone()).is_some() {
                return Err(CeraError::DuplicateVertex(event.vertex));
            }
        }
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(CeraError::SelfLoop(u));
            }
            if !map.contains_key(&u) {
                return Err(CeraError::MissingEndpoint(u));
            }
            if !map.contains_key(&v) {
                return Err(CeraError::MissingEndpoint(v));
            }
            if !edge_set.insert((u, v)) {
                return Err(CeraError::DuplicateEdge(u, v));
            }
        }
        Ok(CausalGraph {
            events: map,
            edges: edge_set,
        })
    }

    pub fn events(&self) -> impl Iterator<Item = &Event> {
        self.events.values()
    }

    pub fn event(&self, v: VertexId) -> Option<&Event> {
        self.events.get(&v)
    }

    pub fn tau(&self, v: VertexId) -> Option<f64> {
        self.events.get(&v).map(|e| e.tau)
    }

    pub fn vertex_ids(&self) -> BTreeSet<VertexId> {
        self.events.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.events.len()
    }

    pub fn edges(&self) -> &BTreeSet<DirectedEdge> {
        &self.edges
    }

    /// Lists every edge whose endpoints fail the strict ordering
    /// tau(source) < tau(target). An empty report implies acyclicity.
    pub fn validate_causal(&self) -> Vec<CausalViolation> {
        self.edges
            .iter()
            .filter_map(|&(u, v)| {
                let tu = self.events[&u].tau;
                let tv = self.events[&v].tau;
                if tu < tv {
                    None
                } else {
                    Some(CausalViolation {
                        edge: (u, v),
                        tau_source: tu,
                        tau_target: tv,
                    })
                }
            })
            .collect()
    }

    pub fn is_causal(&self) -> bool {
        self.validate_causal().is_empty()
    }
}

/// Whether the ordered pair (u, v) admits a causal edge: strictly increasing
/// time, time gap at most `delta`, spatial distance at most `epsilon`.
/// Self-pairs are never admissible.
pub fn admissible(u: &Event, v: &Event, params: &AdmissibilityParams) -> Result<bool> {
    if u.coords.len() != v.coords.len() {
        return Err(CeraError::DimensionMismatch(u.coords.len(), v.coords.len()));
    }
    if u.vertex == v.vertex {
        return Ok(false);
    }
    Ok(u.tau < v.tau
        && v.tau - u.tau <= params.delta
        && params.metric.distance(&u.coords, &v.coords) <= params.epsilon)
}

/// Builds the graph whose edge set is exactly the admissible ordered pairs.
/// The result is independent of the order of the input events.
pub fn build_causal_graph(events: Vec<Event>, params: &AdmissibilityParams) -> Result<CausalGraph> {
    let graph = CausalGraph::new(events, [])?;
    let all: Vec<&Event> = graph.events.values().collect();
    let mut edges = BTreeSet::new();
    for u in &all {
        for v in &all {
            if admissible(u, v, params)? {
                edges.insert((u.vertex, v.vertex));
            }
        }
    }
    let events = graph.events.into_values().collect();
    CausalGraph::new(events, edges)
}
