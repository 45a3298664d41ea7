//! Fixtures shared by the integration suites: the small worked examples,
//! the 3×3 lattice scenario, and seeded random generators.
//!
//! Each test binary uses its own subset.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use cera_core::filtration::{Filtration, LevelGraph, UndirectedEdge, VertexMode};
use cera_core::graph::{DirectedEdge, VertexId};
use cera_core::ideal::{Monomial, MonomialIdeal};

pub fn v(id: u64) -> VertexId {
    VertexId(id)
}

pub fn levels(
    universe: impl IntoIterator<Item = u64>,
    diffs: &[&[(u64, u64)]],
    mode: VertexMode,
) -> Filtration {
    Filtration::from_level_diffs(
        universe.into_iter().map(v).collect(),
        diffs
            .iter()
            .map(|level| level.iter().map(|&(a, b)| (v(a), v(b))).collect())
            .collect(),
        mode,
    )
    .unwrap()
}

/// Two 2-vertex components joined by one later edge.
pub fn two_blocks_bridge(mode: VertexMode) -> Filtration {
    levels(1..=4, &[&[(1, 2), (3, 4)], &[(2, 3)]], mode)
}

/// A path whose endpoints are joined later, closing a cycle.
pub fn path_then_cycle(mode: VertexMode) -> Filtration {
    levels(1..=4, &[&[(1, 2), (2, 3), (3, 4)], &[(4, 1)]], mode)
}

/// Three 2-vertex components merged by two simultaneous edges.
pub fn three_blocks_two_bridges(mode: VertexMode) -> Filtration {
    levels(1..=6, &[&[(1, 2), (3, 4), (5, 6)], &[(2, 3), (4, 5)]], mode)
}

/// 3×3 lattice scenario: an upper-left cluster forms first, a lower-right
/// cluster second, one edge then joins them, and the last step adds nothing.
/// Vertex ids encode (row, column) as two digits.
pub fn lattice_two_clusters(mode: VertexMode) -> Filtration {
    levels(
        [11, 12, 13, 21, 22, 23, 31, 32, 33],
        &[
            &[(11, 12), (11, 21), (21, 22)],
            &[(23, 33), (32, 33)],
            &[(22, 23)],
            &[],
        ],
        mode,
    )
}

pub fn edge_monomials(pairs: &[(u64, u64)]) -> BTreeSet<Monomial> {
    pairs
        .iter()
        .map(|&(a, b)| Monomial::edge(v(a), v(b)))
        .collect()
}

/// Random cumulative filtration: every unordered pair is independently kept
/// with the given probability, randomly oriented, and assigned to a uniform
/// level. Empty diffs are allowed.
pub fn random_filtration(
    rng: &mut ChaCha8Rng,
    max_vertices: u64,
    max_levels: usize,
    edge_probability: f64,
    mode: VertexMode,
) -> Filtration {
    let nv = rng.random_range(2..=max_vertices);
    let k = rng.random_range(1..=max_levels);
    let mut diffs: Vec<Vec<DirectedEdge>> = vec![Vec::new(); k];
    for a in 1..=nv {
        for b in (a + 1)..=nv {
            if rng.random_bool(edge_probability) {
                let level = rng.random_range(0..k);
                let (s, t) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
                diffs[level].push((v(s), v(t)));
            }
        }
    }
    Filtration::from_level_diffs((1..=nv).map(v).collect(), diffs, mode).unwrap()
}

/// Random undirected graph presented as a single level.
pub fn random_level_graph(
    rng: &mut ChaCha8Rng,
    max_vertices: u64,
    edge_probability: f64,
) -> LevelGraph {
    let nv = rng.random_range(1..=max_vertices);
    let mut edges = BTreeSet::new();
    for a in 1..=nv {
        for b in (a + 1)..=nv {
            if rng.random_bool(edge_probability) {
                edges.insert(UndirectedEdge::new(v(a), v(b)));
            }
        }
    }
    LevelGraph {
        level: 1,
        vertices: (1..=nv).map(v).collect(),
        undirected_edges: edges,
    }
}

/// Random monomial ideal over at most `max_vars` variables; generators have
/// supports of size 1..=3, occasionally with a squared variable.
pub fn random_ideal(rng: &mut ChaCha8Rng, max_vars: u64) -> MonomialIdeal {
    let nv = rng.random_range(1..=max_vars);
    let generator_count = rng.random_range(0..=5usize);
    let mut generators = Vec::new();
    for _ in 0..generator_count {
        let size = rng.random_range(1..=3usize).min(nv as usize);
        let mut support = BTreeSet::new();
        while support.len() < size {
            support.insert(rng.random_range(1..=nv));
        }
        let squared = rng.random_bool(0.3);
        let exponents: Vec<(VertexId, u32)> = support
            .iter()
            .enumerate()
            .map(|(i, &var)| (v(var), if squared && i == 0 { 2 } else { 1 }))
            .collect();
        generators.push(Monomial::from_exponents(exponents));
    }
    MonomialIdeal::new((1..=nv).map(v), generators)
}
