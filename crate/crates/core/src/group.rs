use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::partition::OrderedPartition;
use crate::perm::{check_point, Permutation};

/// A permutation group on `1..=degree`, given by generators.
///
/// The stabilizer chain is built on first use and cached; construction is
/// idempotent and thread-safe.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// Parses each generator from cycle notation.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|text| Permutation::parse(text, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// The natural symmetric group, generated by `(1,2)` and `(1,2,...,n)`.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree.max(1));
        }
        let swap = Permutation::transposition(degree, 1, 2).unwrap();
        let mut images: Vec<usize> = (2..=degree).collect();
        images.push(1);
        let cycle = Permutation::from_images(&images).unwrap();
        Self::new(degree, vec![swap, cycle]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators, &[]))
    }

    /// A fresh chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> Result<StabChain> {
        for &p in prefix {
            check_point(p, self.degree)?;
        }
        Ok(StabChain::new(self.degree, &self.generators, prefix))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Sorted orbit of `point` under the generators.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        check_point(point, self.degree)?;
        Ok(orbit_under(&self.generators, self.degree, point))
    }

    /// Orbits ordered by minimal element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree + 1];
        let mut orbits = Vec::new();
        for p in 1..=self.degree {
            if seen[p] {
                continue;
            }
            let orbit = orbit_under(&self.generators, self.degree, p);
            for &q in &orbit {
                seen[q] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn orbit_partition(&self) -> OrderedPartition {
        OrderedPartition::new(self.degree, self.orbits()).expect("orbits partition the domain")
    }

    pub fn is_transitive(&self) -> bool {
        orbit_under(&self.generators, self.degree, 1).len() == self.degree
    }

    /// Stabilizer of `point`, read off a chain with `point` as first base point.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        let chain = self.chain_with_base(&[point])?;
        let mut gens = chain.generators_at(1).to_vec();
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        let stabilizer = PermGroup {
            degree: self.degree,
            generators: gens,
            chain: OnceLock::new(),
        };
        let _ = stabilizer.chain.set(chain.tail(1));
        Ok(stabilizer)
    }

    /// Largest `k` such that the group is `k`-transitive on its domain.
    pub fn transitivity_degree(&self) -> usize {
        let mut remaining: BTreeSet<usize> = (1..=self.degree).collect();
        let mut current = self.clone();
        let mut k = 0;
        while let Some(&alpha) = remaining.iter().next() {
            let orbit = current.orbit(alpha).expect("point in range");
            if orbit.len() != remaining.len() || orbit.iter().any(|p| !remaining.contains(p)) {
                break;
            }
            k += 1;
            remaining.remove(&alpha);
            if remaining.is_empty() {
                break;
            }
            current = current.point_stabilizer(alpha).expect("point in range");
        }
        k
    }
}

pub(crate) fn orbit_under(generators: &[Permutation], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree + 1];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut next = 0;
    while next < orbit.len() {
        let x = orbit[next];
        next += 1;
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}
