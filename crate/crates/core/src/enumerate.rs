//! Exhaustive enumeration of small structures: labeled topologies (through
//! their specialization preorders), posets up to isomorphism, and the
//! downset lattices built from them.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Mask};
use crate::dlat::DistLattice;
use crate::order::{downset_lattice, FinPoset};
use crate::topspace::FinSpace;

/// Default seed for sampled universes.
pub const DEFAULT_SEED: u64 = 0x5704_e5ee_d000_0001;

fn point_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Every preorder on `0..n`, as `up[x] = {y | x ≤ y}`, in increasing order
/// of the off-diagonal relation code.
pub fn preorders(n: usize) -> Vec<Vec<Mask>> {
    assert!(n <= 6, "preorder enumeration is limited to 6 points");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1 << pairs.len()) {
        let mut up: Vec<Mask> = (0..n).map(bits::bit).collect();
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                up[x] |= bits::bit(y);
            }
        }
        let transitive = (0..n).all(|x| bits::ones(up[x]).all(|y| bits::is_subset(up[y], up[x])));
        if transitive {
            out.push(up);
        }
    }
    out
}

/// The topology whose opens are the up-sets of a preorder.
pub fn alexandrov_space(up: &[Mask]) -> FinSpace {
    let n = up.len();
    let opens = (0..=bits::full(n))
        .filter(|&u| bits::ones(u).all(|x| bits::is_subset(up[x], u)))
        .collect();
    FinSpace::from_opens(point_labels(n), opens).expect("up-sets of a preorder form a topology")
}

/// All topologies on the labeled points `0..n` (1, 1, 4, 29, 355, 6942 for
/// `n = 0..=5`).
pub fn labeled_topologies(n: usize) -> Vec<FinSpace> {
    preorders(n).iter().map(|up| alexandrov_space(up)).collect()
}

/// All topologies on at most `max_points` labeled points, smallest first.
pub fn topologies_up_to(max_points: usize) -> Vec<FinSpace> {
    (0..=max_points).flat_map(labeled_topologies).collect()
}

/// `count` distinct topologies on `n` labeled points chosen with a seeded
/// generator (all of them when `count` is at least the total), in
/// enumeration order.
pub fn sample_topologies(n: usize, count: usize, seed: u64) -> Vec<FinSpace> {
    sample_indexed_topologies(n, count, seed)
        .into_iter()
        .map(|(_, x)| x)
        .collect()
}

/// As [`sample_topologies`], paired with each topology's position in
/// [`labeled_topologies`].
pub fn sample_indexed_topologies(n: usize, count: usize, seed: u64) -> Vec<(usize, FinSpace)> {
    let all = labeled_topologies(n);
    let mut picked: Vec<usize> = if count >= all.len() {
        (0..all.len()).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample(&mut rng, all.len(), count).into_vec()
    };
    picked.sort_unstable();
    picked.into_iter().map(|i| (i, all[i].clone())).collect()
}

/// Posets on `n` elements up to isomorphism, labeled `a, b, c, …`.
pub fn posets(n: usize) -> Vec<FinPoset> {
    assert!(n <= 6, "poset enumeration is limited to 6 elements");
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    // naturally labeled: i < j whenever i ≤ j strictly
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut found: Vec<FinPoset> = Vec::new();
    let mut signatures: Vec<Vec<(u32, u32)>> = Vec::new();
    for code in 0u64..(1 << pairs.len()) {
        let rel = |i: usize, j: usize| {
            i == j
                || pairs
                    .iter()
                    .position(|&p| p == (i, j))
                    .is_some_and(|k| code >> k & 1 == 1)
        };
        // keep only codes that are already transitively closed
        let closed = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k))));
        if !closed {
            continue;
        }
        let (p, _) = FinPoset::from_relation(labels.clone(), rel).expect("acyclic by construction");
        let sig = signature(&p);
        let duplicate = found
            .iter()
            .zip(&signatures)
            .any(|(q, s)| *s == sig && q.is_isomorphic(&p));
        if !duplicate {
            found.push(p);
            signatures.push(sig);
        }
    }
    found
}

fn signature(p: &FinPoset) -> Vec<(u32, u32)> {
    let mut s: Vec<(u32, u32)> = (0..p.len())
        .map(|x| (p.below(x).count_ones(), p.above(x).count_ones()))
        .collect();
    s.sort_unstable();
    s
}

/// Downset lattices of all posets with at most `max_elements` elements,
/// keeping those of size at most `max_size`, smallest poset first.
pub fn lattices_up_to(max_elements: usize, max_size: usize) -> Vec<DistLattice> {
    (0..=max_elements)
        .flat_map(posets)
        .map(|p| downset_lattice(&p))
        .filter(|l| l.len() <= max_size)
        .collect()
}
