//! The level-indexed algebra of a filtration: edge ideals I_n, the new
//! quotient generators appearing at each level, the generator table of the
//! associated Rees construction, and truncated graded dimension tables.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{CeraError, Result};
use crate::filtration::Filtration;
use crate::ideal::{Monomial, MonomialIdeal};

/// Edge ideal of level n: generated by x_u·x_v over the undirected edges of
/// the level graph, inside the ring on that level's vertex set. Level 0 is
/// the zero ideal and levels stabilize beyond the last one.
pub fn edge_ideal(filtration: &Filtration, n: usize) -> MonomialIdeal {
    let n = n.min(filtration.level_count());
    let lg = filtration
        .underlying_undirected(n)
        .expect("level index clamped");
    MonomialIdeal::new(
        lg.vertices.iter().copied(),
        lg.undirected_edges.iter().map(|e| {
            let (u, v) = e.endpoints();
            Monomial::edge(u, v)
        }),
    )
}

/// Monomials of the edges introduced at level n, after symmetrization; these
/// generate the quotient of level n by level n − 1. Empty beyond the last
/// level, where the quotients vanish.
pub fn quotient_new_generators(filtration: &Filtration, n: usize) -> Result<BTreeSet<Monomial>> {
    if n == 0 {
        return Err(CeraError::LevelOutOfRange {
            level: 0,
            max: filtration.level_count(),
        });
    }
    if n > filtration.level_count() {
        return Ok(BTreeSet::new());
    }
    let previous = edge_ideal(filtration, n - 1);
    Ok(filtration
        .level_diff(n)?
        .iter()
        .map(|&(u, v)| Monomial::edge(u, v))
        .filter(|m| !previous.contains(m))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorStatus {
    New,
    Inherited,
}

impl fmt::Display for GeneratorStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorStatus::New => "new",
            GeneratorStatus::Inherited => "inherited",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CeraTableRow {
    pub level: usize,
    pub monomial: Monomial,
    pub status: GeneratorStatus,
}

/// Per-level minimal generators of the filtration's edge ideals, each marked
/// new (first appears at that level) or inherited from the previous one.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CeraGeneratorTable {
    rows: Vec<CeraTableRow>,
}

impl CeraGeneratorTable {
    pub fn rows(&self) -> &[CeraTableRow] {
        &self.rows
    }

    pub fn new_at_level(&self, n: usize) -> BTreeSet<Monomial> {
        self.rows
            .iter()
            .filter(|r| r.level == n && r.status == GeneratorStatus::New)
            .map(|r| r.monomial.clone())
            .collect()
    }

    pub fn generators_at_level(&self, n: usize) -> BTreeSet<Monomial> {
        self.rows
            .iter()
            .filter(|r| r.level == n)
            .map(|r| r.monomial.clone())
            .collect()
    }
}

pub fn cera_table(filtration: &Filtration) -> CeraGeneratorTable {
    let mut rows = Vec::new();
    for n in 1..=filtration.level_count() {
        let previous = edge_ideal(filtration, n - 1).minimal_generators();
        let current = edge_ideal(filtration, n).minimal_generators();
        for monomial in current {
            let status = if previous.contains(&monomial) {
                GeneratorStatus::Inherited
            } else {
                GeneratorStatus::New
            };
            rows.push(CeraTableRow {
                level: n,
                monomial,
                status,
            });
        }
    }
    CeraGeneratorTable { rows }
}

/// Truncated table of graded dimensions H(n, d) for 0 ≤ n ≤ k and
/// 0 ≤ d ≤ d_max; values are arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDimTable {
    values: Vec<Vec<BigUint>>,
}

impl GradedDimTable {
    pub(crate) fn from_rows(values: Vec<Vec<BigUint>>) -> Self {
        GradedDimTable { values }
    }

    /// Highest tabulated level k.
    pub fn level_count(&self) -> usize {
        self.values.len() - 1
    }

    pub fn d_max(&self) -> usize {
        self.values[0].len() - 1
    }

    /// H(n, d); rows repeat beyond the last level (stabilization).
    pub fn get(&self, n: usize, d: usize) -> &BigUint {
        &self.values[n.min(self.level_count())][d]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.values
    }
}

/// H(n, d) = graded dimension of the level-n edge ideal at degree d.
pub fn hilbert_table(filtration: &Filtration, d_max: usize) -> GradedDimTable {
    let values = (0..=filtration.level_count())
        .map(|n| {
            let ideal = edge_ideal(filtration, n);
            (0..=d_max).map(|d| ideal.graded_dim(d)).collect()
        })
        .collect();
    GradedDimTable::from_rows(values)
}

/// A sampled pair of elements with their filtration levels, for checking
/// that products land in the level-sum ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureSample {
    pub f: Monomial,
    pub level_f: usize,
    pub g: Monomial,
    pub level_g: usize,
}

/// All ordered pairs of minimal generators across levels, each tagged with
/// the first level where it appears.
pub fn generator_pair_samples(filtration: &Filtration) -> Vec<ClosureSample> {
    let mut tagged: Vec<(Monomial, usize)> = Vec::new();
    for n in 1..=filtration.level_count() {
        for m in quotient_new_generators(filtration, n).expect("level in range") {
            tagged.push((m, n));
        }
    }
    let mut samples = Vec::with_capacity(tagged.len() * tagged.len());
    for (f, level_f) in &tagged {
        for (g, level_g) in &tagged {
            samples.push(ClosureSample {
                f: f.clone(),
                level_f: *level_f,
                g: g.clone(),
                level_g: *level_g,
            });
        }
    }
    samples
}

/// Checks that each sampled product f·g lies in the edge ideal at level
/// a + b (capped at k, where the filtration stabilizes). This is the
/// multiplicative closure making the level-graded sum a subalgebra.
pub fn check_multiplicative_closure(filtration: &Filtration, samples: &[ClosureSample]) -> bool {
    let k = filtration.level_count();
    samples.iter().all(|s| {
        let level = (s.level_f + s.level_g).min(k);
        edge_ideal(filtration, level).contains(&s.f.mul(&s.g))
    })
}
