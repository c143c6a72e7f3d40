//! Deterministic Schreier–Sims stabilizer chains.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    // Strong generators fixing every earlier base point.
    generators: Vec<Permutation>,
    // transversal[x] maps base_point to x, for x in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            transversal: Vec::new(),
            orbit: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree + 1];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut next = 0;
        while next < self.orbit.len() {
            let x = self.orbit[next];
            next += 1;
            for s in &self.generators {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(s);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// Base and strong generating set with per-level orbit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Runs Schreier–Sims on `generators`.
    ///
    /// The base starts with `base_prefix` (kept even when a point is fixed by
    /// the whole group); further base points are the smallest point moved by
    /// the generator that needs them.
    pub fn new(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut levels: Vec<Level> = base_prefix.iter().map(|&b| Level::new(b, degree)).collect();

        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        for g in &gens {
            if levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.first_moved_point().expect("non-identity");
                levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for level in levels.iter_mut() {
                level.generators.push(g.clone());
                if g.apply(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        for level in levels.iter_mut() {
            level.rebuild_orbit(degree);
        }

        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            match self.find_missing_generator(l) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved_point().expect("sift residue is not identity");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for t in l + 1..=j {
                        self.levels[t].generators.push(h.clone());
                        self.levels[t].rebuild_orbit(self.degree);
                    }
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    // First Schreier generator at level `l` that does not sift through the
    // levels below it, together with its residue and drop-out level.
    fn find_missing_generator(&self, l: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[l];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for s in &level.generators {
                let uxs = level.transversal[s.apply(x)].as_ref().unwrap();
                let schreier = ux.then(s).then(&uxs.inverse());
                let (residue, j) = self.sift(schreier, l + 1);
                if j < self.levels.len() || !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.apply(level.base_point);
            match &level.transversal[x] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Number of levels (the base length).
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Strong generators fixing the first `level` base points.
    pub fn generators_at(&self, level: usize) -> &[Permutation] {
        self.levels.get(level).map_or(&[], |l| &l.generators)
    }

    /// Basic orbit at `level`, in discovery order.
    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Element of the level's stabilizer mapping its base point to `point`.
    pub fn transversal_element(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels.get(level)?.transversal.get(point)?.as_ref()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.sift(g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The chain of the stabilizer of the first `from` base points.
    pub fn tail(&self, from: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[from.min(self.levels.len())..].to_vec(),
        }
    }
}
