use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Ordered list of disjoint, sorted, nonempty cells covering `1..=degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrderedPartition {
    degree: usize,
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Validates and wraps `cells`. Cell order is kept as given.
    pub fn new(degree: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree + 1];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            if cell.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPartition(format!("cell {cell:?} is not strictly increasing")));
            }
            for &p in cell {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen[p] {
                    return Err(Error::InvalidPartition(format!("point {p} in two cells")));
                }
                seen[p] = true;
            }
        }
        if let Some(p) = (1..=degree).find(|&p| !seen[p]) {
            return Err(Error::InvalidPartition(format!("point {p} is not covered")));
        }
        Ok(OrderedPartition { degree, cells })
    }

    /// Sorts each cell and orders cells by their minimal element.
    pub fn canonical(degree: usize, mut cells: Vec<Vec<usize>>) -> Result<Self> {
        for cell in cells.iter_mut() {
            cell.sort_unstable();
        }
        cells.sort_by_key(|c| c.first().copied());
        Self::new(degree, cells)
    }

    /// The single-cell partition.
    pub fn unit(degree: usize) -> Self {
        OrderedPartition {
            degree,
            cells: vec![(1..=degree).collect()],
        }
    }

    /// All-singleton partition.
    pub fn discrete(degree: usize) -> Self {
        OrderedPartition {
            degree,
            cells: (1..=degree).map(|p| vec![p]).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `cell_index()[p]` is the index of the cell containing `p` (index 0 unused).
    pub fn cell_index(&self) -> Vec<usize> {
        let mut index = vec![usize::MAX; self.degree + 1];
        for (i, cell) in self.cells.iter().enumerate() {
            for &p in cell {
                index[p] = i;
            }
        }
        index
    }

    /// True when every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &OrderedPartition) -> bool {
        if self.degree != coarser.degree {
            return false;
        }
        let index = coarser.cell_index();
        self.cells
            .iter()
            .all(|cell| cell.iter().all(|&p| index[p] == index[cell[0]]))
    }

    /// Generators of the stabilizer of this partition in the symmetric group:
    /// adjacent transpositions `(c1,c2), (c2,c3), ...` inside each cell.
    pub fn stabilizer_generators(&self) -> Vec<Permutation> {
        self.cells
            .iter()
            .flat_map(|cell| cell.windows(2))
            .map(|w| Permutation::transposition(self.degree, w[0], w[1]).expect("points in range"))
            .collect()
    }
}

/// Free-function form of [`OrderedPartition::stabilizer_generators`].
pub fn partition_stabilizer_generators(partition: &OrderedPartition) -> Vec<Permutation> {
    partition.stabilizer_generators()
}
