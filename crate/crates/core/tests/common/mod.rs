#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use orbitals::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x0_5eed_2017;

/// Random permutation moving only a random subset of the points.
pub fn random_generator(rng: &mut impl Rng, degree: usize) -> Permutation {
    let support_size = rng.gen_range(2..=degree);
    let mut points: Vec<usize> = (1..=degree).collect();
    points.shuffle(rng);
    let support = &points[..support_size];
    let mut shuffled = support.to_vec();
    shuffled.shuffle(rng);
    let mut images: Vec<usize> = (1..=degree).collect();
    for (&from, &to) in support.iter().zip(&shuffled) {
        images[from - 1] = to;
    }
    Permutation::from_images(&images).unwrap()
}

/// Groups of degree 4..=8 with 1..=3 random generators, fixed seed.
pub fn random_corpus(count: usize) -> Vec<PermGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(4..=8);
            let gens = (0..rng.gen_range(1..=3))
                .map(|_| random_generator(&mut rng, degree))
                .collect();
            PermGroup::new(degree, gens).unwrap()
        })
        .collect()
}

/// Every element of the group by closure under right multiplication with the
/// generators, or `None` once more than `limit` elements turn up.
pub fn enumerate_elements(group: &PermGroup, limit: usize) -> Option<Vec<Permutation>> {
    let identity = Permutation::identity(group.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let mut elements = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in group.generators() {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
        elements.push(x);
    }
    Some(elements)
}

/// All ordered pairs of distinct points.
pub fn all_pairs(degree: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=degree).flat_map(move |a| (1..=degree).filter(move |&b| b != a).map(move |b| (a, b)))
}

pub fn example_s7() -> PermGroup {
    PermGroup::from_cycles(7, &["(2,3)", "(4,6)"]).unwrap()
}

pub fn two_triangles() -> PermGroup {
    PermGroup::from_cycles(
        9,
        &["(1,2)", "(1,3)", "(4,5)", "(4,6)", "(1,4)(2,5)(3,6)", "(7,8,9)"],
    )
    .unwrap()
}

pub fn dihedral_square() -> PermGroup {
    PermGroup::from_cycles(4, &["(1,2,4,3)", "(1,2)(3,4)"]).unwrap()
}

pub fn s3_on_two_triangles() -> PermGroup {
    PermGroup::from_cycles(6, &["(1,2,3)(4,5,6)", "(1,3)(4,5)"]).unwrap()
}
