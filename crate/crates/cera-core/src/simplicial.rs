//! Clique complexes of the per-level graphs, face-count vectors, minimal
//! non-faces and the associated squarefree ideals, and the bigraded
//! dimension table they induce over the filtration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CeraError, Result};
use crate::filtration::{Filtration, LevelGraph};
use crate::ideal::{binomial, count_monomials, Monomial, MonomialIdeal};
use crate::rees::GradedDimTable;

type Face = BTreeSet<VertexId>;

use crate::graph::VertexId;

/// Finite simplicial complex stored through its maximal faces. The empty
/// set is always a face, and every vertex of the vertex set is a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_set: BTreeSet<VertexId>,
    maximal_faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Normalizes the given faces: singletons are added for uncovered
    /// vertices and non-maximal faces are pruned.
    pub fn from_maximal_faces(
        vertices: impl IntoIterator<Item = VertexId>,
        faces: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let vertex_set: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut candidates: BTreeSet<Face> = faces
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect();
        for face in &candidates {
            for v in face {
                if !vertex_set.contains(v) {
                    return Err(CeraError::FaceVertexOutsideUniverse(*v));
                }
            }
        }
        let covered: BTreeSet<VertexId> = candidates.iter().flatten().copied().collect();
        for &v in vertex_set.difference(&covered.clone()) {
            candidates.insert(BTreeSet::from([v]));
        }
        let maximal_faces: BTreeSet<Face> = candidates
            .iter()
            .filter(|f| {
                !candidates
                    .iter()
                    .any(|other| *other != **f && f.is_subset(other))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            vertex_set,
            maximal_faces,
        })
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertex_set
    }

    pub fn maximal_faces(&self) -> &BTreeSet<Face> {
        &self.maximal_faces
    }

    /// Dimension: largest face cardinality minus one; −1 for the complex
    /// whose only face is the empty set.
    pub fn dim(&self) -> isize {
        self.maximal_faces
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_face(&self, s: &Face) -> bool {
        s.is_empty() || self.maximal_faces.iter().any(|m| s.is_subset(m))
    }

    /// True iff every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertex_set.is_subset(&other.vertex_set)
            && self.maximal_faces.iter().all(|f| other.is_face(f))
    }
}

/// All maximal cliques of the level graph, via pivoted Bron–Kerbosch.
/// Isolated vertices yield singleton cliques, so the clique complex keeps
/// the whole vertex set.
pub fn clique_complex(level_graph: &LevelGraph) -> SimplicialComplex {
    let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> = level_graph
        .vertices
        .iter()
        .map(|&v| (v, BTreeSet::new()))
        .collect();
    for e in &level_graph.undirected_edges {
        let (a, b) = e.endpoints();
        adjacency.entry(a).or_default().insert(b);
        adjacency.entry(b).or_default().insert(a);
    }
    let mut cliques = Vec::new();
    let mut r = BTreeSet::new();
    let p: BTreeSet<VertexId> = adjacency.keys().copied().collect();
    let x = BTreeSet::new();
    bron_kerbosch(&adjacency, &mut r, p, x, &mut cliques);
    SimplicialComplex::from_maximal_faces(
        adjacency.keys().copied().collect::<Vec<_>>(),
        cliques,
    )
    .expect("cliques lie inside the vertex set")
}

fn bron_kerbosch(
    adjacency: &BTreeMap<VertexId, BTreeSet<VertexId>>,
    r: &mut BTreeSet<VertexId>,
    mut p: BTreeSet<VertexId>,
    mut x: BTreeSet<VertexId>,
    out: &mut Vec<Face>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // pivot with the most neighbours in p prunes the candidate set
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|v| adjacency[v].intersection(&p).count())
        .copied()
        .expect("p or x nonempty");
    let candidates: Vec<VertexId> = p.difference(&adjacency[&pivot]).copied().collect();
    for v in candidates {
        let neighbours = &adjacency[&v];
        r.insert(v);
        bron_kerbosch(
            adjacency,
            r,
            p.intersection(neighbours).copied().collect(),
            x.intersection(neighbours).copied().collect(),
            out,
        );
        r.remove(&v);
        p.remove(&v);
        x.insert(v);
    }
}

/// Face counts by cardinality: entry i is the number of faces with i
/// vertices, entry 0 counting the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of faces with `cardinality` vertices.
    pub fn faces_of_cardinality(&self, cardinality: usize) -> u64 {
        self.counts.get(cardinality).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Counts faces by cardinality with a depth-first walk over the face poset;
/// the closure is never stored.
pub fn f_vector(complex: &SimplicialComplex) -> FVector {
    let vertices: Vec<VertexId> = complex.vertex_set.iter().copied().collect();
    let mut counts = vec![0u64; vertices.len() + 1];
    counts[0] = 1;
    let mut stack: Vec<(Face, usize)> = vec![(BTreeSet::new(), 0)];
    while let Some((face, next)) = stack.pop() {
        for (offset, &v) in vertices[next..].iter().enumerate() {
            let mut extended = face.clone();
            extended.insert(v);
            if complex.is_face(&extended) {
                counts[extended.len()] += 1;
                stack.push((extended, next + offset + 1));
            }
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    FVector { counts }
}

/// All inclusion-minimal subsets of the vertex set that are not faces. For
/// a clique complex these are exactly the non-edges of the graph.
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> BTreeSet<Face> {
    let vertices: Vec<VertexId> = complex.vertex_set.iter().copied().collect();
    let mut result = BTreeSet::new();
    let mut faces_prev: Vec<Face> = vec![BTreeSet::new()];
    for _cardinality in 1..=vertices.len() {
        let mut candidates: BTreeSet<Face> = BTreeSet::new();
        for face in &faces_prev {
            for &v in &vertices {
                if !face.contains(&v) {
                    let mut candidate = face.clone();
                    candidate.insert(v);
                    candidates.insert(candidate);
                }
            }
        }
        let mut faces_here = Vec::new();
        for candidate in candidates {
            if complex.is_face(&candidate) {
                faces_here.push(candidate);
            } else {
                let all_proper_subsets_are_faces = candidate.iter().all(|w| {
                    let mut sub = candidate.clone();
                    sub.remove(w);
                    complex.is_face(&sub)
                });
                if all_proper_subsets_are_faces {
                    result.insert(candidate);
                }
            }
        }
        if faces_here.is_empty() {
            break;
        }
        faces_prev = faces_here;
    }
    result
}

/// Squarefree ideal generated by the minimal non-faces, over the complex's
/// vertex variables. Minimality of the generators is automatic.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::new(
        complex.vertex_set.iter().copied(),
        minimal_nonfaces(complex)
            .into_iter()
            .map(|nf| Monomial::from_exponents(nf.into_iter().map(|v| (v, 1)))),
    )
}

/// Number of degree-d monomials whose support is a face: 1 at d = 0, and
/// Σ_i f_{i−1}·C(d−1, i−1) over face cardinalities i ≥ 1 otherwise. This is
/// the Hilbert value of the quotient by the complex's non-face ideal.
pub fn quotient_hilbert(complex: &SimplicialComplex, d: usize) -> BigUint {
    if d == 0 {
        return BigUint::one();
    }
    let f = f_vector(complex);
    let mut sum = BigUint::zero();
    for (cardinality, &count) in f.counts().iter().enumerate().skip(1) {
        if count == 0 {
            continue;
        }
        sum += BigUint::from(count) * binomial((d - 1) as u64, (cardinality - 1) as u64);
    }
    sum
}

/// H(n, d) for the non-face ideals of the per-level clique complexes:
/// the count of degree-d monomials over the level's vertex variables whose
/// support is not a face. Unlike edge-ideal tables, these shrink as levels
/// grow, because added edges turn non-faces into faces.
pub fn sr_hilbert_table(filtration: &Filtration, d_max: usize) -> Result<GradedDimTable> {
    let mut complexes = Vec::with_capacity(filtration.level_count() + 1);
    for n in 0..=filtration.level_count() {
        complexes.push(clique_complex(&filtration.underlying_undirected(n)?));
    }
    Ok(sr_hilbert_table_for_complexes(&complexes, d_max))
}

/// Same table over an explicitly supplied sequence of complexes (one row
/// per complex).
pub fn sr_hilbert_table_for_complexes(
    complexes: &[SimplicialComplex],
    d_max: usize,
) -> GradedDimTable {
    let values = complexes
        .iter()
        .map(|complex| {
            let n_vars = complex.vertex_set().len();
            (0..=d_max)
                .map(|d| count_monomials(n_vars, d) - quotient_hilbert(complex, d))
                .collect()
        })
        .collect();
    GradedDimTable::from_rows(values)
}
