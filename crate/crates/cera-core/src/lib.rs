//! Temporal filtrations of spatiotemporal causal graphs and their algebraic
//! invariants.
//!
//! A causal graph carries timestamped events and directed edges that respect
//! the temporal order. Accumulating its edges over a time grid gives an
//! increasing filtration; each level has an edge ideal, and the level-graded
//! sum of those ideals (a Rees-algebra construction) encodes the whole
//! history of connectivity. This crate computes the combinatorial and
//! algebraic invariants of that object:
//!
//! - per-level component counts, classification of newly arriving edges into
//!   bridges, cycles and residual edges, and the bridge polynomial
//!   ([`connectivity`]), together with verification that the bridge
//!   dimension at each level equals the drop in the component count;
//! - edge ideals, quotient generators, generator tables and truncated graded
//!   dimension tables ([`rees`], [`ideal`]);
//! - clique complexes per level, minimal non-faces and their squarefree
//!   ideals, and the bigraded dimension table ([`simplicial`]);
//! - morphisms of filtered graphs, induced monomial maps, and the collapse
//!   to the aggregated edge ideal ([`functorial`]);
//! - independent brute-force oracles for auditing the above ([`oracle`]).

pub mod connectivity;
pub mod error;
pub mod filtration;
pub mod functorial;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod rees;
pub mod simplicial;

pub use error::{CeraError, Result};
pub use filtration::{Filtration, LevelGraph, TimeGrid, UndirectedEdge, VertexMode};
pub use graph::{
    admissible, build_causal_graph, AdmissibilityParams, CausalGraph, DirectedEdge, Event,
    Metric, VertexId,
};
