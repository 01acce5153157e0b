//! Finite posets, monotone maps and the Birkhoff correspondence.
//!
//! Elements are stored in a canonical order: a linear extension of the
//! partial order in which ties are broken by label. Every iteration order in
//! the crate derives from it, so output is byte-deterministic.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask, MAX_CARRIER};
use crate::dlat::DistLattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order closure has a cycle: `{a}` <= `{b}` <= `{a}`")]
    Cycle { a: String, b: String },
    #[error("carrier of {0} elements exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("assignment is not total on the source")]
    NotTotal,
    #[error("map is not monotone: `{a}` <= `{b}` but images are unrelated")]
    NotMonotone { a: String, b: String },
}

/// A finite partial order on labelled elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinPoset {
    labels: Vec<String>,
    /// `below[i]` holds every `j` with `j <= i`.
    below: Vec<Mask>,
}

impl FinPoset {
    /// Reflexive-transitive closure of the generating `pairs` (`(a, b)` reads `a <= b`).
    pub fn order_closure<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self, OrderError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(OrderError::DuplicateElement(l.clone()));
            }
        }
        let idx = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| OrderError::UnknownElement(s.to_string()))
        };
        let mut gen = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            gen.push((idx(a.as_ref())?, idx(b.as_ref())?));
        }
        let (poset, _) = Self::from_relation(labels.clone(), |i, j| i == j || gen.contains(&(i, j)))?;
        Ok(poset)
    }

    /// Builds a poset from a relation that generates the order (closure is applied).
    ///
    /// Returns the poset together with the position of each input element in
    /// the canonical order.
    pub fn from_relation(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<(Self, Vec<usize>), OrderError> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(OrderError::TooLarge(n));
        }
        let mut below = vec![0 as Mask; n];
        for (i, b) in below.iter_mut().enumerate() {
            *b = bits::bit(i);
            for j in 0..n {
                if leq(j, i) {
                    *b |= bits::bit(j);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if bits::contains(below[i], k) {
                    below[i] |= below[k];
                }
            }
        }
        for i in 0..n {
            for j in bits::ones(below[i]) {
                if j != i && bits::contains(below[j], i) {
                    let (a, b) = if i < j { (i, j) } else { (j, i) };
                    return Err(OrderError::Cycle {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }
        {
            let mut seen = BTreeSet::new();
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    return Err(OrderError::DuplicateElement(l.clone()));
                }
            }
        }
        // Kahn's algorithm, smallest label first among the available minima.
        let mut placed: Mask = 0;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .filter(|&i| !bits::contains(placed, i))
                .filter(|&i| bits::is_subset(below[i] & !bits::bit(i), placed))
                .min_by(|&a, &b| labels[a].cmp(&labels[b]))
                .expect("acyclic relation always has a minimal element");
            placed |= bits::bit(next);
            order.push(next);
        }
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let remap = |m: Mask| bits::from_indices(bits::ones(m).map(|j| position[j]));
        let poset = FinPoset {
            labels: order.iter().map(|&o| labels[o].clone()).collect(),
            below: order.iter().map(|&o| remap(below[o])).collect(),
        };
        Ok((poset, position))
    }

    pub fn empty() -> Self {
        FinPoset {
            labels: Vec::new(),
            below: Vec::new(),
        }
    }

    /// The chain `e0 < e1 < ... < e(n-1)`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Self::from_relation(labels, |i, j| i <= j).unwrap().0
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Self::from_relation(labels, |i, j| i == j).unwrap().0
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        bits::contains(self.below[b], a)
    }

    /// `{x | x <= a}`
    #[inline]
    pub fn below(&self, a: usize) -> Mask {
        self.below[a]
    }

    /// `{x | a <= x}`
    pub fn above(&self, a: usize) -> Mask {
        bits::from_indices((0..self.len()).filter(|&x| self.leq(a, x)))
    }

    /// Every pair `(a, b)` with `a <= b`, in canonical order.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| (0..self.len()).filter(move |&b| self.leq(a, b)).map(move |b| (a, b)))
            .collect()
    }

    /// Maximal elements of a subset.
    pub fn maximal(&self, mask: Mask) -> Mask {
        bits::from_indices(bits::ones(mask).filter(|&x| bits::ones(mask).all(|y| y == x || !self.leq(x, y))))
    }

    pub fn minimal(&self, mask: Mask) -> Mask {
        bits::from_indices(bits::ones(mask).filter(|&x| bits::ones(mask).all(|y| y == x || !self.leq(y, x))))
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> Mask {
        self.maximal(self.below[a] & !bits::bit(a))
    }

    /// Cover pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if bits::contains(self.lower_covers(b), a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_downset(&self, mask: Mask) -> bool {
        bits::ones(mask).all(|x| bits::is_subset(self.below[x], mask))
    }

    pub fn is_upset(&self, mask: Mask) -> bool {
        bits::ones(mask).all(|x| bits::is_subset(self.above(x), mask))
    }

    /// All down-closed subsets, in increasing numeric mask order.
    pub fn downsets(&self) -> Vec<Mask> {
        let n = self.len();
        let above: Vec<Mask> = (0..n).map(|i| self.above(i) & !bits::bit(i)).collect();
        let mut out = Vec::new();
        fn go(i: usize, inc: Mask, above: &[Mask], out: &mut Vec<Mask>) {
            if i == 0 {
                out.push(inc);
                return;
            }
            let x = i - 1;
            if above[x] & inc != 0 {
                go(x, inc | bits::bit(x), above, out);
            } else {
                go(x, inc, above, out);
                go(x, inc | bits::bit(x), above, out);
            }
        }
        go(n, 0, &above, &mut out);
        out.sort_unstable();
        out
    }

    /// All up-closed subsets, in increasing numeric mask order.
    pub fn upsets(&self) -> Vec<Mask> {
        let all = self.all();
        let mut out: Vec<Mask> = self.downsets().into_iter().map(|d| all & !d).collect();
        out.sort_unstable();
        out
    }

    /// The order dual, with the same labels.
    pub fn dual(&self) -> Self {
        let labels = self.labels.clone();
        Self::from_relation(labels, |i, j| self.leq(j, i)).unwrap().0
    }

    /// Finds an order isomorphism `self -> other` by exhaustive backtracking.
    pub fn isomorphism(&self, other: &FinPoset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let sig = |p: &FinPoset, i: usize| (p.below[i].count_ones(), p.above(i).count_ones());
        let sa: Vec<_> = (0..n).map(|i| sig(self, i)).collect();
        let sb: Vec<_> = (0..n).map(|i| sig(other, i)).collect();
        let mut assign = vec![usize::MAX; n];
        let mut used: Mask = 0;
        fn go(
            i: usize,
            a: &FinPoset,
            b: &FinPoset,
            sa: &[(u32, u32)],
            sb: &[(u32, u32)],
            assign: &mut [usize],
            used: &mut Mask,
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if bits::contains(*used, j) || sa[i] != sb[j] {
                    continue;
                }
                let ok = (0..i).all(|k| a.leq(k, i) == b.leq(assign[k], j) && a.leq(i, k) == b.leq(j, assign[k]));
                if !ok {
                    continue;
                }
                assign[i] = j;
                *used |= bits::bit(j);
                if go(i + 1, a, b, sa, sb, assign, used) {
                    return true;
                }
                *used &= !bits::bit(j);
            }
            assign[i] = usize::MAX;
            false
        }
        go(0, self, other, &sa, &sb, &mut assign, &mut used).then_some(assign)
    }

    pub fn is_isomorphic(&self, other: &FinPoset) -> bool {
        self.isomorphism(other).is_some()
    }
}

/// A monotone map between finite posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Arc<FinPoset>,
    target: Arc<FinPoset>,
    assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Arc<FinPoset>, target: Arc<FinPoset>, assignment: Vec<usize>) -> Result<Self, OrderError> {
        if assignment.len() != source.len() || assignment.iter().any(|&y| y >= target.len()) {
            return Err(OrderError::NotTotal);
        }
        for (a, b) in source.leq_pairs() {
            if !target.leq(assignment[a], assignment[b]) {
                return Err(OrderError::NotMonotone {
                    a: source.label(a).to_string(),
                    b: source.label(b).to_string(),
                });
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &Arc<FinPoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinPoset> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

/// The lattice of down-closed subsets, ordered by inclusion.
pub fn downset_lattice(poset: &FinPoset) -> DistLattice {
    let sets = poset.downsets();
    let labels: Vec<String> = sets.iter().map(|&d| bits::render(d, poset.labels())).collect();
    let (order, _) = FinPoset::from_relation(labels, |i, j| bits::is_subset(sets[i], sets[j]))
        .expect("inclusion is a partial order");
    DistLattice::new(order).expect("downsets form a distributive lattice")
}

/// The subposet of join-irreducible elements (exactly one lower cover).
pub fn join_irreducibles(lattice: &DistLattice) -> FinPoset {
    let order = lattice.order();
    let keep: Vec<usize> = (0..order.len())
        .filter(|&x| x != lattice.bot() && order.lower_covers(x).count_ones() == 1)
        .collect();
    let labels = keep.iter().map(|&x| order.label(x).to_string()).collect();
    FinPoset::from_relation(labels, |i, j| order.leq(keep[i], keep[j]))
        .expect("subposet of a poset")
        .0
}
