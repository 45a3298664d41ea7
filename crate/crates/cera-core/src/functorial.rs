//! Morphisms of filtered graphs, the monomial maps they induce on the
//! level ideals, and the collapse that forgets the level grading.

use std::collections::BTreeMap;

use crate::error::{CeraError, Result};
use crate::filtration::Filtration;
use crate::graph::{DirectedEdge, VertexId};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::rees::{edge_ideal, quotient_new_generators};

/// Vertex assignment underlying a morphism of filtered graphs.
pub type VertexMap = BTreeMap<VertexId, VertexId>;

/// Source edge whose image is missing from the target at the level where the
/// edge first appears.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismViolation {
    pub edge: DirectedEdge,
    pub level: usize,
}

/// Outcome of checking the morphism condition level by level. `collapsed`
/// lists edges both of whose endpoints map to one vertex; such an image can
/// never be a target edge, so each collapsed edge is also a violation, but
/// callers may want to warn about them separately.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MorphismReport {
    pub violations: Vec<MorphismViolation>,
    pub collapsed: Vec<DirectedEdge>,
}

impl MorphismReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn checked_image(
    source: &Filtration,
    target: &Filtration,
    map: &VertexMap,
) -> Result<()> {
    for &v in source.vertices() {
        match map.get(&v) {
            None => return Err(CeraError::UnmappedVertex(v)),
            Some(w) if !target.vertices().contains(w) => {
                return Err(CeraError::ImageOutsideTarget(v, *w))
            }
            _ => {}
        }
    }
    Ok(())
}

/// Verifies that the vertex map carries every level's edges into the same
/// level of the target. Edges are checked at the level where they first
/// appear; the cumulative structure covers later levels.
pub fn check_morphism(
    source: &Filtration,
    target: &Filtration,
    map: &VertexMap,
) -> Result<MorphismReport> {
    checked_image(source, target, map)?;
    let mut report = MorphismReport::default();
    for n in 1..=source.level_count() {
        for &(u, v) in source.level_diff(n)?.iter() {
            let (iu, iv) = (map[&u], map[&v]);
            if iu == iv {
                report.collapsed.push((u, v));
            }
            if !target.edges_at(n).contains(&(iu, iv)) {
                report.violations.push(MorphismViolation {
                    edge: (u, v),
                    level: n,
                });
            }
        }
    }
    Ok(report)
}

/// Checks that the induced monomial map sends each level's generators into
/// the target ideal of the same level: the image of x_u·x_v must lie in the
/// target level ideal. Images with collapsed endpoints (x_w²) are tested by
/// plain divisibility like any other monomial.
pub fn induced_image_check(
    source: &Filtration,
    target: &Filtration,
    map: &VertexMap,
) -> Result<bool> {
    checked_image(source, target, map)?;
    for n in 1..=source.level_count() {
        let target_ideal = edge_ideal(target, n);
        for generator in edge_ideal(source, n).minimal_generators() {
            if !target_ideal.contains(&map_monomial(&generator, map)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Image of a monomial under the induced variable substitution
/// x_v ↦ x_{map(v)}; collapsing substitutions accumulate exponents.
pub fn map_monomial(m: &Monomial, map: &VertexMap) -> Monomial {
    let mut image = Monomial::one();
    for (v, e) in m.exponents() {
        let factor = Monomial::from_exponents([(map[&v], e)]);
        image = image.mul(&factor);
    }
    image
}

/// Forgets the level grading: the edge ideal of the aggregated graph, which
/// equals the final level ideal by stabilization.
pub fn temporal_collapse(filtration: &Filtration) -> MonomialIdeal {
    edge_ideal(filtration, filtration.level_count())
}

/// Union of the new generators across all levels; equals the collapsed
/// ideal's minimal generators and serves as its independent reconstruction.
pub fn collapse_from_level_generators(filtration: &Filtration) -> Result<MonomialIdeal> {
    let mut generators = Vec::new();
    for n in 1..=filtration.level_count() {
        generators.extend(quotient_new_generators(filtration, n)?);
    }
    let ambient = filtration
        .underlying_undirected(filtration.level_count())?
        .vertices;
    Ok(MonomialIdeal::new(ambient, generators))
}

/// Commutativity of mapping and collapsing on generators: the image of every
/// generator of the collapsed source ideal must lie in the collapsed target
/// ideal.
pub fn verify_naturality(
    source: &Filtration,
    target: &Filtration,
    map: &VertexMap,
) -> Result<bool> {
    checked_image(source, target, map)?;
    let collapsed_target = temporal_collapse(target);
    Ok(temporal_collapse(source)
        .minimal_generators()
        .iter()
        .all(|g| collapsed_target.contains(&map_monomial(g, map))))
}

/// Composition of vertex maps (`outer` after `inner`).
pub fn compose(outer: &VertexMap, inner: &VertexMap) -> Result<VertexMap> {
    inner
        .iter()
        .map(|(&v, w)| match outer.get(w) {
            Some(&u) => Ok((v, u)),
            None => Err(CeraError::UnmappedVertex(*w)),
        })
        .collect()
}
