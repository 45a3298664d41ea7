//! Acceptance suite: each test pins one exit criterion and prints a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cera_core::connectivity::{
    beta0, bridge_polynomial, classify_level_edges, verify_bridge_theorem, EdgeClass,
    OrderPolicy,
};
use cera_core::filtration::{UndirectedEdge, VertexMode};
use cera_core::functorial::{
    check_morphism, collapse_from_level_generators, induced_image_check, temporal_collapse,
    verify_naturality, VertexMap,
};
use cera_core::oracle::{bfs_component_count, brute_force_graded_dim, brute_force_nonface_dim};
use cera_core::rees::{
    check_multiplicative_closure, edge_ideal, generator_pair_samples, quotient_new_generators,
};
use cera_core::simplicial::{
    clique_complex, minimal_nonfaces, sr_hilbert_table_for_complexes, stanley_reisner_ideal,
};
use cera_core::Filtration;

use common::*;

fn pass(id: &str, summary: &str) {
    println!("[acceptance] criterion {id}: PASS — {summary}");
}

#[test]
fn criterion_01_two_blocks_bridge_exact_values() {
    let started = Instant::now();
    let f = two_blocks_bridge(VertexMode::Full);

    assert_eq!(beta0(&f, 1).unwrap(), 2);
    assert_eq!(beta0(&f, 2).unwrap(), 1);
    assert_eq!(
        classify_level_edges(&f, 2, OrderPolicy::Lex).unwrap().dim_b,
        1
    );
    assert_eq!(
        quotient_new_generators(&f, 2).unwrap(),
        edge_monomials(&[(2, 3)])
    );
    assert_eq!(
        edge_ideal(&f, 1).generators(),
        &edge_monomials(&[(1, 2), (3, 4)])
    );
    assert_eq!(
        edge_ideal(&f, 2).generators(),
        &edge_monomials(&[(1, 2), (3, 4), (2, 3)])
    );

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(
        "01",
        &format!("beta0 (2,1), dim B_2 = 1, quotient {{x2*x3}}, level ideals exact ({elapsed:?})"),
    );
}

#[test]
fn criterion_02_cycle_level_adds_no_bridge() {
    let f = path_then_cycle(VertexMode::Full);
    let classification = classify_level_edges(&f, 2, OrderPolicy::Lex).unwrap();
    assert_eq!(classification.dim_b, 0);
    assert_eq!(
        classification.classified[&UndirectedEdge::new(v(4), v(1))],
        EdgeClass::Cycle
    );
    assert_eq!(beta0(&f, 1).unwrap(), 1);
    assert_eq!(beta0(&f, 2).unwrap(), 1);
    pass("02", "dim B_2 = 0, new edge is a cycle, beta0 constant at 1");
}

#[test]
fn criterion_03_two_simultaneous_bridges() {
    let f = three_blocks_two_bridges(VertexMode::Full);
    assert_eq!(beta0(&f, 1).unwrap(), 3);
    assert_eq!(beta0(&f, 2).unwrap(), 1);
    let classification = classify_level_edges(&f, 2, OrderPolicy::Lex).unwrap();
    assert_eq!(classification.dim_b, 2);
    let bridges: BTreeSet<UndirectedEdge> = classification.bridges().copied().collect();
    assert_eq!(
        bridges,
        BTreeSet::from([
            UndirectedEdge::new(v(2), v(3)),
            UndirectedEdge::new(v(4), v(5))
        ])
    );
    pass("03", "beta0 3 -> 1, dim B_2 = 2, both bridges identified");
}

#[test]
fn criterion_04_lattice_bridge_at_third_level() {
    // the two clusters are what the incident view sees; the merging step is
    // the third level
    let f = lattice_two_clusters(VertexMode::Incident);
    assert_eq!(beta0(&f, 2).unwrap(), 2);
    assert_eq!(beta0(&f, 3).unwrap(), 1);
    let classification = classify_level_edges(&f, 3, OrderPolicy::Lex).unwrap();
    assert_eq!(classification.dim_b, 1);
    let bridges: Vec<&UndirectedEdge> = classification.bridges().collect();
    assert_eq!(bridges, vec![&UndirectedEdge::new(v(22), v(23))]);

    // under the full vertex set the drop at that level is still exactly one
    let full = lattice_two_clusters(VertexMode::Full);
    for report in verify_bridge_theorem(&full, OrderPolicy::Lex).unwrap() {
        assert!(report.holds);
    }
    assert_eq!(
        classify_level_edges(&full, 3, OrderPolicy::Lex).unwrap().dim_b,
        1
    );
    pass("04", "one bridge at the third level, beta0 drops 2 -> 1 there");
}

#[test]
fn criterion_05_bridge_dimension_equals_bfs_drop() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut levels_checked = 0usize;
    for _ in 0..200 {
        let f = random_filtration(&mut rng, 10, 6, 0.35, VertexMode::Full);
        let mut beta_prev = bfs_component_count(&f.underlying_undirected(0).unwrap());
        for n in 1..=f.level_count() {
            let beta_now = bfs_component_count(&f.underlying_undirected(n).unwrap());
            let dim_b = classify_level_edges(&f, n, OrderPolicy::Lex).unwrap().dim_b;
            assert_eq!(
                dim_b,
                beta_prev - beta_now,
                "level {n} of a random filtration"
            );
            beta_prev = beta_now;
            levels_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass(
        "05",
        &format!("200 random filtrations, {levels_checked} levels, zero failures ({elapsed:?})"),
    );
}

#[test]
fn criterion_06_incident_mode_component_ledger() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut levels_checked = 0usize;
    for _ in 0..200 {
        let f = random_filtration(&mut rng, 10, 6, 0.35, VertexMode::Incident);
        let mut beta_prev = bfs_component_count(&f.underlying_undirected(0).unwrap());
        for n in 1..=f.level_count() {
            let beta_now = bfs_component_count(&f.underlying_undirected(n).unwrap());
            let c = classify_level_edges(&f, n, OrderPolicy::Lex).unwrap();
            assert_eq!(
                beta_now as i64,
                beta_prev as i64 + c.creations() as i64 - c.dim_b as i64,
                "level {n} ledger"
            );
            beta_prev = beta_now;
            levels_checked += 1;
        }
    }
    pass(
        "06",
        &format!("incident ledger over {levels_checked} levels, zero failures"),
    );
}

#[test]
fn criterion_07_graded_dimensions_match_brute_force() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cells = 0usize;
    for i in 0..100 {
        if i % 2 == 0 {
            let ideal = random_ideal(&mut rng, 7);
            for d in 0..=5 {
                assert_eq!(ideal.graded_dim(d), brute_force_graded_dim(&ideal, d));
                cells += 1;
            }
        } else {
            let complex = clique_complex(&random_level_graph(&mut rng, 7, 0.4));
            let table = sr_hilbert_table_for_complexes(std::slice::from_ref(&complex), 5);
            for d in 0..=5 {
                assert_eq!(table.get(0, d), &brute_force_nonface_dim(&complex, d));
                // the same cell through the non-face ideal
                assert_eq!(
                    stanley_reisner_ideal(&complex).graded_dim(d),
                    brute_force_nonface_dim(&complex, d)
                );
                cells += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    pass(
        "07",
        &format!("{cells} cells across 100 random instances match brute force ({elapsed:?})"),
    );
}

#[test]
fn criterion_08_minimal_nonfaces_of_flag_complexes_are_nonedges() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let graph = random_level_graph(&mut rng, 12, 0.4);
        let complex = clique_complex(&graph);
        let expected: BTreeSet<BTreeSet<_>> = {
            let vertices: Vec<_> = graph.vertices.iter().copied().collect();
            let mut nonedges = BTreeSet::new();
            for (i, &a) in vertices.iter().enumerate() {
                for &b in &vertices[i + 1..] {
                    if !graph.undirected_edges.contains(&UndirectedEdge::new(a, b)) {
                        nonedges.insert(BTreeSet::from([a, b]));
                    }
                }
            }
            nonedges
        };
        assert_eq!(minimal_nonfaces(&complex), expected);
    }
    pass("08", "100 random graphs (N <= 12), zero failures");
}

#[test]
fn criterion_09_multiplicative_and_bigraded_closure() {
    let examples = [
        two_blocks_bridge(VertexMode::Full),
        path_then_cycle(VertexMode::Full),
        three_blocks_two_bridges(VertexMode::Full),
    ];
    let mut products = 0usize;
    for f in &examples {
        // level-sum closure of the edge-ideal filtration
        let samples = generator_pair_samples(f);
        assert!(check_multiplicative_closure(f, &samples));
        products += samples.len();

        // bigraded closure of the non-face ideals: a product of generators
        // from levels a and b must lie in the ideal of level max(a, b)
        let complexes: Vec<_> = (0..=f.level_count())
            .map(|n| clique_complex(&f.underlying_undirected(n).unwrap()))
            .collect();
        let ideals: Vec<_> = complexes.iter().map(stanley_reisner_ideal).collect();
        for (a, ia) in ideals.iter().enumerate() {
            for (b, ib) in ideals.iter().enumerate() {
                for ga in ia.generators() {
                    for gb in ib.generators() {
                        let product = ga.mul(gb);
                        assert!(
                            ideals[a.max(b)].contains(&product),
                            "product {product} outside level {}",
                            a.max(b)
                        );
                        products += 1;
                    }
                }
            }
        }
    }
    pass(
        "09",
        &format!("{products} exhaustive generator products, all inside, zero failures"),
    );
}

#[test]
fn criterion_10_collapse_and_naturality() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..50 {
        let f = random_filtration(&mut rng, 8, 4, 0.35, VertexMode::Full);

        // collapse equals the aggregated edge ideal, generator for generator
        let collapsed = temporal_collapse(&f);
        assert_eq!(collapsed, edge_ideal(&f, f.level_count()));
        assert_eq!(
            collapsed.minimal_generators(),
            collapse_from_level_generators(&f).unwrap().minimal_generators()
        );

        // a relabeling embedding into a padded copy is a valid morphism and
        // its naturality square commutes on generators
        let shift = 100;
        let relabeled: Vec<Vec<_>> = (1..=f.level_count())
            .map(|n| {
                f.level_diff_ordered(n)
                    .unwrap()
                    .iter()
                    .map(|&(a, b)| (v(a.0 + shift), v(b.0 + shift)))
                    .collect()
            })
            .collect();
        let mut universe: BTreeSet<_> =
            f.vertices().iter().map(|&w| v(w.0 + shift)).collect();
        universe.insert(v(1));
        universe.insert(v(2));
        let mut padded = relabeled;
        padded[0].push((v(1), v(2)));
        let target = Filtration::from_level_diffs(universe, padded, VertexMode::Full).unwrap();
        let map: VertexMap = f.vertices().iter().map(|&w| (w, v(w.0 + shift))).collect();

        assert!(check_morphism(&f, &target, &map).unwrap().is_valid());
        assert!(induced_image_check(&f, &target, &map).unwrap());
        assert!(verify_naturality(&f, &target, &map).unwrap());

        let identity: VertexMap = f.vertices().iter().map(|&w| (w, w)).collect();
        assert!(verify_naturality(&f, &f, &identity).unwrap());
    }
    pass(
        "10",
        "50 random filtrations: collapse identities and naturality squares, zero failures",
    );
}

#[test]
fn sanity_full_mode_bridge_polynomial_bound() {
    // not a numbered criterion: the polynomial's total is bounded by the
    // spanning count whenever every vertex is present
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let f = random_filtration(&mut rng, 9, 5, 0.3, VertexMode::Full);
        let p = bridge_polynomial(&f, OrderPolicy::Lex).unwrap();
        let bound = f.vertices().len() - beta0(&f, f.level_count()).unwrap();
        assert!(p.total_bridges() <= bound);
    }
}
