//! Monomials over vertex variables and finitely generated monomial ideals,
//! with membership by generator divisibility and graded dimension counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::VertexId;

/// Binomial coefficient C(n, k) over arbitrary-precision integers.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Number of degree-d monomials in `num_vars` variables: C(N + d − 1, d).
pub fn count_monomials(num_vars: usize, d: usize) -> BigUint {
    if d == 0 {
        return BigUint::one();
    }
    if num_vars == 0 {
        return BigUint::zero();
    }
    binomial((num_vars + d - 1) as u64, d as u64)
}

/// Sparse monomial: a map from variables to positive exponents. The empty
/// map is the unit monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<VertexId, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(v: VertexId) -> Self {
        Monomial {
            exponents: BTreeMap::from([(v, 1)]),
        }
    }

    /// x_u · x_v for a pair of distinct vertices.
    pub fn edge(u: VertexId, v: VertexId) -> Self {
        debug_assert_ne!(u, v);
        Monomial {
            exponents: BTreeMap::from([(u, 1), (v, 1)]),
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (VertexId, u32)>) -> Self {
        let exponents = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        Monomial { exponents }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e == 1)
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.exponents.keys().copied().collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, &e)| other.exponents.get(v).is_some_and(|&o| o >= e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            *exponents.entry(v).or_insert(0) += e;
        }
        Monomial { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in &self.exponents {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial ideal given by a generator set inside the polynomial ring over
/// an ordered set of ambient variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: BTreeSet<Monomial>,
    ambient: BTreeSet<VertexId>,
}

impl MonomialIdeal {
    pub fn new(
        ambient: impl IntoIterator<Item = VertexId>,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Self {
        MonomialIdeal {
            generators: generators.into_iter().collect(),
            ambient: ambient.into_iter().collect(),
        }
    }

    pub fn zero(ambient: impl IntoIterator<Item = VertexId>) -> Self {
        Self::new(ambient, [])
    }

    pub fn generators(&self) -> &BTreeSet<Monomial> {
        &self.generators
    }

    pub fn ambient_vars(&self) -> &BTreeSet<VertexId> {
        &self.ambient
    }

    pub fn num_vars(&self) -> usize {
        self.ambient.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Membership by divisibility: m lies in the ideal iff some generator
    /// divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Generators none of which divides another; they generate the same
    /// ideal.
    pub fn minimal_generators(&self) -> BTreeSet<Monomial> {
        self.generators
            .iter()
            .filter(|g| {
                !self
                    .generators
                    .iter()
                    .any(|other| *other != **g && other.divides(g))
            })
            .cloned()
            .collect()
    }

    pub fn minimalize(&self) -> MonomialIdeal {
        MonomialIdeal {
            generators: self.minimal_generators(),
            ambient: self.ambient.clone(),
        }
    }

    /// Number of degree-d monomials over the ambient variables that lie in
    /// the ideal. For squarefree ideals the complement is counted through
    /// the face-cardinality vector of the subsets avoiding every generator
    /// support; otherwise the complement is enumerated directly.
    pub fn graded_dim(&self, d: usize) -> BigUint {
        if self.generators.is_empty() {
            return BigUint::zero();
        }
        if self.generators.iter().any(Monomial::is_one) {
            return count_monomials(self.num_vars(), d);
        }
        let total = count_monomials(self.num_vars(), d);
        let outside = if self.is_squarefree() && self.num_vars() <= 128 {
            standard_monomials_by_faces(self, d)
        } else {
            standard_monomials_by_enumeration(self, d)
        };
        total - outside
    }
}

/// Hilbert value of the quotient at degree d computed from face counts:
/// a monomial avoids a squarefree ideal exactly when its support contains no
/// generator support, so the count is Σ_i f_{i−1}·C(d−1, i−1) over support
/// cardinalities i ≥ 1, plus 1 at d = 0.
fn standard_monomials_by_faces(ideal: &MonomialIdeal, d: usize) -> BigUint {
    if d == 0 {
        return BigUint::one();
    }
    let vars: Vec<VertexId> = ideal.ambient.iter().copied().collect();
    let position: BTreeMap<VertexId, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let supports: Vec<u128> = ideal
        .generators
        .iter()
        .map(|g| {
            g.support()
                .iter()
                .map(|v| 1u128 << position[v])
                .fold(0, |acc, bit| acc | bit)
        })
        .collect();

    // counts[c] = number of cardinality-c subsets containing no support
    let mut counts = vec![0u64; vars.len() + 1];
    let mut stack: Vec<(u128, usize)> = vec![(0, 0)];
    while let Some((subset, next)) = stack.pop() {
        counts[subset.count_ones() as usize] += 1;
        for i in next..vars.len() {
            let extended = subset | (1u128 << i);
            if supports.iter().all(|&s| s & extended != s) {
                stack.push((extended, i + 1));
            }
        }
    }

    let mut sum = BigUint::zero();
    for (card, &count) in counts.iter().enumerate().skip(1) {
        if count == 0 {
            continue;
        }
        sum += BigUint::from(count) * binomial((d - 1) as u64, (card - 1) as u64);
    }
    sum
}

/// Fallback for non-squarefree generators: enumerate degree-d exponent
/// vectors and count those divisible by no generator.
fn standard_monomials_by_enumeration(ideal: &MonomialIdeal, d: usize) -> BigUint {
    let vars: Vec<VertexId> = ideal.ambient.iter().copied().collect();
    let mut count = BigUint::zero();
    let mut exponents = vec![0u32; vars.len()];
    enumerate(ideal, &vars, d, 0, &mut exponents, &mut count);
    count
}

fn enumerate(
    ideal: &MonomialIdeal,
    vars: &[VertexId],
    remaining: usize,
    idx: usize,
    exponents: &mut Vec<u32>,
    count: &mut BigUint,
) {
    if idx == vars.len() {
        if remaining == 0 {
            let m = Monomial::from_exponents(
                vars.iter().copied().zip(exponents.iter().copied()),
            );
            if !ideal.contains(&m) {
                *count += BigUint::one();
            }
        }
        return;
    }
    for e in 0..=remaining {
        exponents[idx] = e as u32;
        enumerate(ideal, vars, remaining - e, idx + 1, exponents, count);
    }
    exponents[idx] = 0;
}
