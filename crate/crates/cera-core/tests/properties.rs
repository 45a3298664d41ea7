//! Property suites over randomly generated inputs.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use cera_core::connectivity::{beta0, classify_level_edges, OrderPolicy};
use cera_core::filtration::{Filtration, LevelGraph, UndirectedEdge, VertexMode};
use cera_core::graph::{
    admissible, build_causal_graph, AdmissibilityParams, Event, Metric, VertexId,
};
use cera_core::ideal::Monomial;
use cera_core::oracle::brute_force_graded_dim;
use cera_core::rees::{edge_ideal, hilbert_table, quotient_new_generators};
use cera_core::simplicial::{clique_complex, minimal_nonfaces, stanley_reisner_ideal};

use common::v;

fn arb_event(id: u64) -> impl Strategy<Value = Event> {
    // coarse grids of coordinates and times so collisions actually happen
    (0..5i32, 0..5i32, 0..5i32)
        .prop_map(move |(x, y, t)| Event::new(id, vec![x as f64, y as f64], t as f64))
}

fn arb_events(max: usize) -> impl Strategy<Value = Vec<Event>> {
    (2..=max).prop_flat_map(|n| (0..n as u64).map(arb_event).collect::<Vec<_>>())
}

/// Unordered pairs over 1..=n assigned to levels 1..=k, each with a random
/// orientation; None drops the pair.
fn arb_level_assignment(
    max_vertices: u64,
    max_levels: usize,
) -> impl Strategy<Value = (u64, Vec<Vec<(u64, u64)>>)> {
    (2..=max_vertices, 1..=max_levels).prop_flat_map(|(nv, k)| {
        let pairs: Vec<(u64, u64)> = (1..=nv)
            .flat_map(|a| ((a + 1)..=nv).map(move |b| (a, b)))
            .collect();
        let per_pair = proptest::option::of((0..k, any::<bool>()));
        proptest::collection::vec(per_pair, pairs.len()).prop_map(move |choices| {
            let mut diffs = vec![Vec::new(); k];
            for (&(a, b), choice) in pairs.iter().zip(choices) {
                if let Some((level, flip)) = choice {
                    let (s, t) = if flip { (b, a) } else { (a, b) };
                    diffs[level].push((s, t));
                }
            }
            (nv, diffs)
        })
    })
}

fn filtration_from(nv: u64, diffs: Vec<Vec<(u64, u64)>>, mode: VertexMode) -> Filtration {
    Filtration::from_level_diffs(
        (1..=nv).map(v).collect(),
        diffs
            .into_iter()
            .map(|level| level.into_iter().map(|(a, b)| (v(a), v(b))).collect())
            .collect(),
        mode,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_graphs_validate_and_ignore_input_order(events in arb_events(7)) {
        let params = AdmissibilityParams::new(2.0, 2.0, Metric::Euclidean).unwrap();
        let forward = build_causal_graph(events.clone(), &params).unwrap();
        prop_assert!(forward.validate_causal().is_empty());
        let mut reversed = events;
        reversed.reverse();
        let backward = build_causal_graph(reversed, &params).unwrap();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn admissibility_is_antisymmetric(
        a in arb_event(1),
        b in arb_event(2),
        delta in 1..4i32,
        epsilon in 1..4i32,
    ) {
        let params =
            AdmissibilityParams::new(delta as f64, epsilon as f64, Metric::Manhattan).unwrap();
        if admissible(&a, &b, &params).unwrap() {
            prop_assert!(!admissible(&b, &a, &params).unwrap());
        }
    }

    #[test]
    fn levels_are_monotone_and_diffs_partition(
        (nv, diffs) in arb_level_assignment(8, 5),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        for n in 1..=f.level_count() {
            prop_assert!(f.edges_at(n - 1).is_subset(f.edges_at(n)));
            let diff = f.level_diff(n).unwrap();
            prop_assert!(diff.is_disjoint(f.edges_at(n - 1)));
            let union: BTreeSet<_> = diff.union(f.edges_at(n - 1)).copied().collect();
            prop_assert_eq!(&union, f.edges_at(n));
        }
    }

    #[test]
    fn beta0_is_monotone_and_ideals_grow(
        (nv, diffs) in arb_level_assignment(8, 5),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        for n in 1..=f.level_count() {
            prop_assert!(beta0(&f, n - 1).unwrap() >= beta0(&f, n).unwrap());
            let current = edge_ideal(&f, n);
            for g in edge_ideal(&f, n - 1).generators() {
                prop_assert!(current.contains(g));
            }
        }
    }

    #[test]
    fn degree_two_jump_counts_new_generators(
        (nv, diffs) in arb_level_assignment(7, 4),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        let table = hilbert_table(&f, 2);
        for n in 1..=f.level_count() {
            let jump = table.get(n, 2) - table.get(n - 1, 2);
            let newly = quotient_new_generators(&f, n).unwrap().len();
            prop_assert_eq!(jump, newly.into());
        }
    }

    #[test]
    fn full_mode_bridge_dimension_is_order_invariant(
        (nv, diffs) in arb_level_assignment(8, 4),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        for n in 1..=f.level_count() {
            let lex = classify_level_edges(&f, n, OrderPolicy::Lex).unwrap();
            let input = classify_level_edges(&f, n, OrderPolicy::InputOrder).unwrap();
            prop_assert_eq!(lex.dim_b, input.dim_b);
            prop_assert_eq!(lex.dim_c, input.dim_c);

            // bridge monomials are among the level's new quotient generators
            let new_generators = quotient_new_generators(&f, n).unwrap();
            for bridge in lex.bridges() {
                let (a, b) = bridge.endpoints();
                prop_assert!(new_generators.contains(&Monomial::edge(a, b)));
            }
            prop_assert!(lex.dim_b <= f.level_diff(n).unwrap().len());
        }
    }

    #[test]
    fn incident_mode_net_delta_is_order_invariant(
        (nv, diffs) in arb_level_assignment(8, 4),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Incident);
        for n in 1..=f.level_count() {
            let lex = classify_level_edges(&f, n, OrderPolicy::Lex).unwrap();
            let input = classify_level_edges(&f, n, OrderPolicy::InputOrder).unwrap();
            prop_assert_eq!(
                lex.creations() as i64 - lex.dim_b as i64,
                input.creations() as i64 - input.dim_b as i64
            );
            prop_assert_eq!(lex.beta0_after, input.beta0_after);
            prop_assert_eq!(
                lex.dim_b + lex.dim_c + lex.dim_r,
                f.level_diff(n).unwrap().len()
            );
        }
    }

    #[test]
    fn flag_complex_nonfaces_are_nonedges_and_sr_matches_complement(
        (nv, diffs) in arb_level_assignment(8, 1),
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        let lg = f.underlying_undirected(1).unwrap();
        let complex = clique_complex(&lg);
        let nonedges: BTreeSet<BTreeSet<VertexId>> = {
            let vs: Vec<_> = lg.vertices.iter().copied().collect();
            let mut out = BTreeSet::new();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if !lg.undirected_edges.contains(&UndirectedEdge::new(a, b)) {
                        out.insert(BTreeSet::from([a, b]));
                    }
                }
            }
            out
        };
        prop_assert_eq!(minimal_nonfaces(&complex), nonedges.clone());

        // the non-face ideal is the edge ideal of the complement graph
        let complement = LevelGraph {
            level: 1,
            vertices: lg.vertices.clone(),
            undirected_edges: nonedges
                .iter()
                .map(|pair| {
                    let mut it = pair.iter();
                    UndirectedEdge::new(*it.next().unwrap(), *it.next().unwrap())
                })
                .collect(),
        };
        let complement_filtration = Filtration::from_level_diffs(
            lg.vertices.clone(),
            vec![complement
                .undirected_edges
                .iter()
                .map(|e| e.endpoints())
                .collect()],
            VertexMode::Full,
        )
        .unwrap();
        let sr = stanley_reisner_ideal(&complex);
        let complement_ideal = edge_ideal(&complement_filtration, 1);
        prop_assert_eq!(sr.generators(), complement_ideal.generators());
    }

    #[test]
    fn graded_dim_agrees_with_enumeration(
        (nv, diffs) in arb_level_assignment(6, 2),
        d in 0..=4usize,
    ) {
        let f = filtration_from(nv, diffs, VertexMode::Full);
        let ideal = edge_ideal(&f, f.level_count());
        prop_assert_eq!(ideal.graded_dim(d), brute_force_graded_dim(&ideal, d));
    }
}
