//! Permutations of the point domain `1..=n`.
//!
//! Points are 1-based throughout the public API. Composition follows the
//! right-action convention: `p.compose(&q)` applies `p` first, then `q`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1, ..., n}` stored as an image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based image table: images[i] is the image of point i + 1, minus one.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 1-based image table.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &image in images {
            if image == 0 || image > degree || seen[image - 1] {
                return Err(Error::NotBijection(degree));
            }
            seen[image - 1] = true;
            table.push(image - 1);
        }
        Ok(Permutation { images: table })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        check_point(a, degree)?;
        check_point(b, degree)?;
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// Parses a product of disjoint cycles, e.g. `"(1,2)(3,4)"` or `"()"`.
    ///
    /// Whitespace is ignored. A cycle written without commas, such as `"(123)"`,
    /// is read one digit per point and is only accepted when `degree <= 9`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(Error::Syntax("empty input".into()));
        }
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| Error::Syntax(format!("expected a parenthesised cycle at {rest:?}")))?;
            let body = &rest[1..=body_end];
            rest = &rest[body_end + 2..];
            if body.contains('(') {
                return Err(Error::Syntax(format!("nested parenthesis in {compact:?}")));
            }
            let cycle = parse_cycle_body(body, degree)?;
            for &point in &cycle {
                check_point(point, degree)?;
                if used[point - 1] {
                    return Err(Error::RepeatedPoint(point));
                }
                used[point - 1] = true;
            }
            for (i, &point) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[point - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `point` under this permutation.
    ///
    /// Panics if `point` is outside `1..=degree`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// Checked variant of [`Permutation::apply`].
    pub fn try_apply(&self, point: usize) -> Result<usize> {
        check_point(point, self.degree())?;
        Ok(self.apply(point))
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self` followed by `other`: `x^(self*other) = (x^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    // Degrees are checked by the callers inside the crate.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Smallest point not fixed by this permutation.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, j)| i != *j)
            .map(|(i, _)| i + 1)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

fn parse_cycle_body(body: &str, degree: usize) -> Result<Vec<usize>> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let points: Vec<usize> = if body.contains(',') {
        body.split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Syntax(format!("bad point {tok:?} in ({body})")))
            })
            .collect::<Result<_>>()?
    } else if body.len() == 1 || degree <= 9 {
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Syntax(format!("bad point {c:?} in ({body})")))
            })
            .collect::<Result<_>>()?
    } else {
        return Err(Error::Syntax(format!(
            "cycle ({body}) needs commas for degree {degree}"
        )));
    };
    let mut sorted = points.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedPoint(w[0]));
    }
    Ok(points)
}

pub(crate) fn check_point(point: usize, degree: usize) -> Result<()> {
    if point == 0 || point > degree {
        Err(Error::PointOutOfRange { point, degree })
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
