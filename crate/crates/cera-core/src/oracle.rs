//! Brute-force reference computations, kept independent of the main
//! implementation paths so results can be audited against them. These are
//! shipped in-tree (not only under test) and are selectable from the CLI.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::filtration::LevelGraph;
use crate::graph::VertexId;
use crate::ideal::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

/// Component count by breadth-first search over an adjacency list; no
/// union-find involved.
pub fn bfs_component_count(level_graph: &LevelGraph) -> usize {
    let vertices: Vec<VertexId> = level_graph.vertices.iter().copied().collect();
    let mut visited: BTreeSet<VertexId> = BTreeSet::new();
    let mut components = 0;
    for &start in &vertices {
        if visited.contains(&start) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        visited.insert(start);
        while let Some(current) = queue.pop_front() {
            for e in &level_graph.undirected_edges {
                let (a, b) = e.endpoints();
                let neighbour = if a == current {
                    b
                } else if b == current {
                    a
                } else {
                    continue;
                };
                if visited.insert(neighbour) {
                    queue.push_back(neighbour);
                }
            }
        }
    }
    components
}

/// Walks every degree-d exponent vector over the given variables.
fn for_each_monomial(
    vars: &[VertexId],
    degree: usize,
    exponents: &mut Vec<u32>,
    visit: &mut impl FnMut(&Monomial),
) {
    if exponents.len() == vars.len() {
        if degree == 0 {
            let m = Monomial::from_exponents(
                vars.iter().copied().zip(exponents.iter().copied()),
            );
            visit(&m);
        }
        return;
    }
    for e in 0..=degree {
        exponents.push(e as u32);
        for_each_monomial(vars, degree - e, exponents, visit);
        exponents.pop();
    }
}

/// Counts the degree-d monomials over the ideal's ambient variables that
/// some generator divides, by exhaustive enumeration.
pub fn brute_force_graded_dim(ideal: &MonomialIdeal, d: usize) -> BigUint {
    let vars: Vec<VertexId> = ideal.ambient_vars().iter().copied().collect();
    let mut count = BigUint::zero();
    let mut exponents = Vec::with_capacity(vars.len());
    for_each_monomial(&vars, d, &mut exponents, &mut |m| {
        if ideal.generators().iter().any(|g| g.divides(m)) {
            count += BigUint::one();
        }
    });
    count
}

/// Counts the degree-d monomials over the complex's vertex variables whose
/// support is not a face, by exhaustive enumeration.
pub fn brute_force_nonface_dim(complex: &SimplicialComplex, d: usize) -> BigUint {
    let vars: Vec<VertexId> = complex.vertex_set().iter().copied().collect();
    let mut count = BigUint::zero();
    let mut exponents = Vec::with_capacity(vars.len());
    for_each_monomial(&vars, d, &mut exponents, &mut |m| {
        if !complex.is_face(&m.support()) {
            count += BigUint::one();
        }
    });
    count
}
