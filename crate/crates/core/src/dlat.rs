//! Finite bounded distributive lattices, their homomorphisms, ideals and
//! prime filters, and the ideal-lattice monad `(𝔍, ⋃, ↓)`.
//!
//! A finite frame is the same thing as a finite distributive lattice (every
//! join is finite and the frame law reduces to binary distributivity), so
//! [`DistLattice`] also serves as the frame type throughout the crate.

use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::order::{FinPoset, OrderError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("`{a}` and `{b}` have no greatest lower bound")]
    NoMeet { a: String, b: String },
    #[error("`{a}` and `{b}` have no least upper bound")]
    NoJoin { a: String, b: String },
    #[error("not distributive: {a} ∧ ({b} ∨ {c}) ≠ ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("not a lattice homomorphism: {0}")]
    NotAHom(String),
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("subset is not a prime filter")]
    NotAPrimeFilter,
    #[error("ideal does not live over the expected lattice")]
    ForeignIdeal,
}

/// Meet and join tables of a finite poset that has all binary bounds.
///
/// This is the input of [`LatticeCandidate::is_distributive`]; a candidate
/// need not be distributive.
#[derive(Clone, Debug)]
pub struct LatticeCandidate {
    n: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl LatticeCandidate {
    pub fn from_poset(order: &FinPoset) -> Result<Self, LatticeError> {
        let n = order.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let above: Vec<Mask> = (0..n).map(|i| order.above(i)).collect();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower = order.below(a) & order.below(b);
                meet[a * n + b] =
                    bits::ones(lower)
                        .find(|&m| order.below(m) == lower)
                        .ok_or_else(|| LatticeError::NoMeet {
                            a: order.label(a).into(),
                            b: order.label(b).into(),
                        })?;
                let upper = above[a] & above[b];
                join[a * n + b] =
                    bits::ones(upper)
                        .find(|&j| above[j] == upper)
                        .ok_or_else(|| LatticeError::NoJoin {
                            a: order.label(a).into(),
                            b: order.label(b).into(),
                        })?;
            }
        }
        Ok(LatticeCandidate { n, meet, join })
    }

    /// The first triple violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let m = |x: usize, y: usize| self.meet[x * n + y];
        let j = |x: usize, y: usize| self.join[x * n + y];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(a, j(b, c)) != j(m(a, b), m(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }
}

/// A finite bounded distributive lattice (equivalently, a finite frame).
///
/// Elements are indexed in the canonical order of the underlying poset, so
/// the bottom is always `0` and the top is always `len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistLattice {
    order: FinPoset,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl DistLattice {
    pub fn new(order: FinPoset) -> Result<Self, LatticeError> {
        let cand = LatticeCandidate::from_poset(&order)?;
        if let Some((a, b, c)) = cand.distributivity_witness() {
            return Err(LatticeError::NotDistributive {
                a: order.label(a).into(),
                b: order.label(b).into(),
                c: order.label(c).into(),
            });
        }
        Ok(DistLattice {
            order,
            meet: cand.meet,
            join: cand.join,
        })
    }

    pub fn from_pairs<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self, LatticeError> {
        Self::new(FinPoset::order_closure(elements, pairs)?)
    }

    /// Chain `0 < 1 < ... < n-1` labelled by position.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::new(FinPoset::from_relation(labels, |i, j| i <= j).unwrap().0).unwrap()
    }

    /// The two-element lattice `0 < 1`.
    pub fn two() -> Self {
        Self::chain(2)
    }

    /// The Boolean algebra of subsets of `k` atoms.
    pub fn boolean(k: usize) -> Self {
        crate::order::downset_lattice(&FinPoset::antichain(k))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> &FinPoset {
        &self.order
    }

    pub fn labels(&self) -> &[String] {
        self.order.labels()
    }

    pub fn label(&self, a: usize) -> &str {
        self.order.label(a)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.order.index_of(label)
    }

    pub fn all(&self) -> Mask {
        self.order.all()
    }

    #[inline]
    pub fn bot(&self) -> usize {
        0
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.len() - 1
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    #[inline]
    pub fn below(&self, a: usize) -> Mask {
        self.order.below(a)
    }

    pub fn above(&self, a: usize) -> Mask {
        self.order.above(a)
    }

    /// Join of a subset; the empty join is the bottom.
    pub fn join_all(&self, mask: Mask) -> usize {
        bits::ones(mask).fold(self.bot(), |acc, x| self.join(acc, x))
    }

    /// Meet of a subset; the empty meet is the top.
    pub fn meet_all(&self, mask: Mask) -> usize {
        bits::ones(mask).fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// The complement of `a`, if one exists.
    pub fn complement(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.meet(a, b) == self.bot() && self.join(a, b) == self.top())
    }

    pub fn candidate(&self) -> LatticeCandidate {
        LatticeCandidate {
            n: self.len(),
            meet: self.meet.clone(),
            join: self.join.clone(),
        }
    }

    /// Order-isomorphism search on the underlying posets.
    pub fn isomorphism(&self, other: &DistLattice) -> Option<Vec<usize>> {
        self.order.isomorphism(&other.order)
    }
}

/// A bounded lattice homomorphism (preserves `∧`, `∨`, bottom and top).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeHom {
    source: Arc<DistLattice>,
    target: Arc<DistLattice>,
    assignment: Vec<usize>,
}

impl LatticeHom {
    pub fn new(
        source: Arc<DistLattice>,
        target: Arc<DistLattice>,
        assignment: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        if let Some(reason) = hom_violation(&source, &target, &assignment) {
            return Err(LatticeError::NotAHom(reason));
        }
        Ok(LatticeHom {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(l: &Arc<DistLattice>) -> Self {
        LatticeHom {
            source: l.clone(),
            target: l.clone(),
            assignment: (0..l.len()).collect(),
        }
    }

    /// `g ∘ f`
    pub fn compose(g: &LatticeHom, f: &LatticeHom) -> Result<Self, LatticeError> {
        if f.target != g.source {
            return Err(LatticeError::NotAHom("composite of non-matching homs".into()));
        }
        Ok(LatticeHom {
            source: f.source.clone(),
            target: g.target.clone(),
            assignment: f.assignment.iter().map(|&x| g.assignment[x]).collect(),
        })
    }

    pub fn source(&self) -> &Arc<DistLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DistLattice> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.assignment[a]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, mask: Mask) -> Mask {
        bits::from_indices(bits::ones(mask).map(|a| self.assignment[a]))
    }

    pub fn preimage(&self, mask: Mask) -> Mask {
        bits::from_indices((0..self.source.len()).filter(|&a| bits::contains(mask, self.assignment[a])))
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len()
            && bits::from_indices(self.assignment.iter().copied()) == self.target.all()
    }

    /// Inverse of a bijective hom (bijective lattice homs are isomorphisms).
    pub fn inverse(&self) -> Option<LatticeHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target.len()];
        for (a, &b) in self.assignment.iter().enumerate() {
            inv[b] = a;
        }
        Some(LatticeHom {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment: inv,
        })
    }
}

fn hom_violation(source: &DistLattice, target: &DistLattice, f: &[usize]) -> Option<String> {
    if f.len() != source.len() || f.iter().any(|&y| y >= target.len()) {
        return Some("assignment is not total".into());
    }
    if f[source.bot()] != target.bot() {
        return Some("bottom not preserved".into());
    }
    if f[source.top()] != target.top() {
        return Some("top not preserved".into());
    }
    for a in 0..source.len() {
        for b in 0..source.len() {
            if f[source.meet(a, b)] != target.meet(f[a], f[b]) {
                return Some(format!(
                    "meet of {} and {} not preserved",
                    source.label(a),
                    source.label(b)
                ));
            }
            if f[source.join(a, b)] != target.join(f[a], f[b]) {
                return Some(format!(
                    "join of {} and {} not preserved",
                    source.label(a),
                    source.label(b)
                ));
            }
        }
    }
    None
}

/// All lattice homomorphisms `source -> target`, ordered by assignment.
///
/// A hom is determined by its values on join-irreducibles, so the search
/// ranges over monotone assignments on those and extends by joins.
pub fn homs(source: &Arc<DistLattice>, target: &Arc<DistLattice>) -> Vec<LatticeHom> {
    let order = source.order();
    let irr: Vec<usize> = (0..source.len())
        .filter(|&x| x != source.bot() && order.lower_covers(x).count_ones() == 1)
        .collect();
    let mut out = Vec::new();
    let mut values = vec![0usize; irr.len()];
    fn go(
        k: usize,
        irr: &[usize],
        values: &mut [usize],
        source: &Arc<DistLattice>,
        target: &Arc<DistLattice>,
        out: &mut Vec<LatticeHom>,
    ) {
        if k == irr.len() {
            let assignment: Vec<usize> = (0..source.len())
                .map(|x| {
                    irr.iter()
                        .zip(values.iter())
                        .filter(|(&j, _)| source.leq(j, x))
                        .fold(target.bot(), |acc, (_, &v)| target.join(acc, v))
                })
                .collect();
            if let Ok(h) = LatticeHom::new(source.clone(), target.clone(), assignment) {
                out.push(h);
            }
            return;
        }
        for v in 0..target.len() {
            let monotone = (0..k).all(|i| !source.leq(irr[i], irr[k]) || target.leq(values[i], v));
            if !monotone {
                continue;
            }
            values[k] = v;
            go(k + 1, irr, values, source, target, out);
        }
    }
    go(0, &irr, &mut values, source, target, &mut out);
    out.sort_by(|a, b| a.assignment.cmp(&b.assignment));
    out
}

/// All lattice homomorphisms into the two-element lattice.
pub fn homs_to_2(l: &Arc<DistLattice>) -> Vec<LatticeHom> {
    homs(l, &Arc::new(DistLattice::two()))
}

// ---------------------------------------------------------------------------
// Ideals

/// Nonempty, down-closed and closed under binary joins.
pub fn is_ideal(l: &DistLattice, s: Mask) -> bool {
    s != 0 && l.order().is_downset(s) && bits::ones(s).all(|a| bits::ones(s).all(|b| bits::contains(s, l.join(a, b))))
}

/// An ideal of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    home: Arc<DistLattice>,
    members: Mask,
}

impl Ideal {
    pub fn new(home: Arc<DistLattice>, members: Mask) -> Result<Self, LatticeError> {
        if !is_ideal(&home, members) {
            return Err(LatticeError::NotAnIdeal);
        }
        Ok(Ideal { home, members })
    }

    pub fn home(&self) -> &Arc<DistLattice> {
        &self.home
    }

    pub fn members(&self) -> Mask {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        bits::contains(self.members, a)
    }

    /// The element generating the ideal if it is principal.
    pub fn generator(&self) -> Option<usize> {
        let j = self.home.join_all(self.members);
        (self.home.below(j) == self.members).then_some(j)
    }
}

/// Join in `𝔍L`: every finite join `i₁ ∨ … ∨ iₙ` with each `iₖ` drawn from a
/// member of the family. The empty family yields the bottom ideal `{⊥}`.
pub fn ideal_join(l: &DistLattice, family: &[Mask]) -> Mask {
    let union = family.iter().fold(0, |acc, &m| acc | m);
    let mut acc = bits::bit(l.bot()) | union;
    loop {
        let mut next = acc;
        for a in bits::ones(acc) {
            for b in bits::ones(union) {
                next |= bits::bit(l.join(a, b));
            }
        }
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

/// `𝔍L`: the lattice of all ideals of `L` under inclusion, together with
/// the ideal each element stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    base: Arc<DistLattice>,
    lattice: Arc<DistLattice>,
    ideals: Vec<Mask>,
}

impl IdealLattice {
    pub fn new(base: &Arc<DistLattice>) -> Self {
        let found: Vec<Mask> = base
            .order()
            .downsets()
            .into_iter()
            .filter(|&d| is_ideal(base, d))
            .collect();
        let labels: Vec<String> = found.iter().map(|&i| ideal_label(base, i)).collect();
        let (order, pos) = FinPoset::from_relation(labels, |i, j| bits::is_subset(found[i], found[j]))
            .expect("inclusion is a partial order");
        let mut ideals = vec![0; found.len()];
        for (old, &new) in pos.iter().enumerate() {
            ideals[new] = found[old];
        }
        let lattice = DistLattice::new(order).expect("ideals of a distributive lattice form a frame");
        IdealLattice {
            base: base.clone(),
            lattice: Arc::new(lattice),
            ideals,
        }
    }

    pub fn base(&self) -> &Arc<DistLattice> {
        &self.base
    }

    pub fn lattice(&self) -> &Arc<DistLattice> {
        &self.lattice
    }

    pub fn ideals(&self) -> &[Mask] {
        &self.ideals
    }

    /// The ideal of the base that element `i` of `𝔍L` stands for.
    pub fn ideal(&self, i: usize) -> Mask {
        self.ideals[i]
    }

    pub fn index_of(&self, ideal: Mask) -> Option<usize> {
        self.ideals.iter().position(|&m| m == ideal)
    }

    pub fn element(&self, i: usize) -> Ideal {
        Ideal {
            home: self.base.clone(),
            members: self.ideals[i],
        }
    }

    /// Index of a validated ideal, rejecting ideals of another lattice.
    pub fn locate(&self, ideal: &Ideal) -> Result<usize, LatticeError> {
        if *ideal.home != *self.base {
            return Err(LatticeError::ForeignIdeal);
        }
        self.index_of(ideal.members).ok_or(LatticeError::ForeignIdeal)
    }
}

fn ideal_label(l: &DistLattice, ideal: Mask) -> String {
    let j = l.join_all(ideal);
    if l.below(j) == ideal {
        format!("↓{}", l.label(j))
    } else {
        bits::render(ideal, l.labels())
    }
}

/// `𝔍f(I) = {b | b ≤ f(a) for some a ∈ I}`
pub fn ideal_map_image(f: &LatticeHom, ideal: &Ideal) -> Result<Ideal, LatticeError> {
    if *ideal.home != **f.source() {
        return Err(LatticeError::ForeignIdeal);
    }
    let members = bits::ones(ideal.members).fold(0, |acc, a| acc | f.target().below(f.apply(a)));
    Ok(Ideal {
        home: f.target().clone(),
        members,
    })
}

/// `𝔍f` as a homomorphism `𝔍(source) -> 𝔍(target)`.
pub fn ideal_map(f: &LatticeHom) -> LatticeHom {
    let src = IdealLattice::new(f.source());
    let tgt = IdealLattice::new(f.target());
    ideal_map_between(f, &src, &tgt)
}

pub(crate) fn ideal_map_between(f: &LatticeHom, src: &IdealLattice, tgt: &IdealLattice) -> LatticeHom {
    let assignment = src
        .ideals()
        .iter()
        .map(|&i| {
            let image = bits::ones(i).fold(0, |acc, a| acc | f.target().below(f.apply(a)));
            tgt.index_of(image).expect("image of an ideal is an ideal")
        })
        .collect();
    LatticeHom::new(src.lattice().clone(), tgt.lattice().clone(), assignment).expect("𝔍f is a frame homomorphism")
}

/// Unit `↓` of the ideal monad: the principal ideal `{x | x ≤ a}`.
pub fn monad_unit_down(l: &Arc<DistLattice>, a: usize) -> Ideal {
    Ideal {
        home: l.clone(),
        members: l.below(a),
    }
}

/// `↓` as a homomorphism `L -> 𝔍L`.
pub fn down_map(il: &IdealLattice) -> LatticeHom {
    let l = il.base();
    let assignment = (0..l.len())
        .map(|a| il.index_of(l.below(a)).expect("principal ideals are ideals"))
        .collect();
    LatticeHom::new(l.clone(), il.lattice().clone(), assignment).expect("↓ is a lattice hom")
}

/// Multiplication `⋃` of the ideal monad: flattens an ideal of `𝔍L` to an ideal of `L`.
pub fn monad_mult_union(l: &Arc<DistLattice>, family: &Ideal) -> Result<Ideal, LatticeError> {
    let il = IdealLattice::new(l);
    if *family.home != **il.lattice() {
        return Err(LatticeError::ForeignIdeal);
    }
    let members = bits::ones(family.members).fold(0, |acc, j| acc | il.ideal(j));
    Ideal::new(l.clone(), members)
}

/// `⋃` as a homomorphism `𝔍𝔍L -> 𝔍L`.
pub fn union_map(il: &IdealLattice, iil: &IdealLattice) -> LatticeHom {
    debug_assert_eq!(iil.base(), il.lattice());
    let assignment = iil
        .ideals()
        .iter()
        .map(|&fam| {
            let u = bits::ones(fam).fold(0, |acc, j| acc | il.ideal(j));
            il.index_of(u).expect("union of an ideal of ideals is an ideal")
        })
        .collect();
    LatticeHom::new(iil.lattice().clone(), il.lattice().clone(), assignment).expect("⋃ is a lattice hom")
}

/// The join map `α(I) = ⋁I`, the canonical `𝕀`-algebra structure `𝔍L -> L`.
pub fn frame_join_algebra(il: &IdealLattice) -> LatticeHom {
    let l = il.base();
    let assignment = il.ideals().iter().map(|&i| l.join_all(i)).collect();
    LatticeHom::new(il.lattice().clone(), l.clone(), assignment).expect("⋁ is a frame hom")
}

// ---------------------------------------------------------------------------
// Prime filters

/// Proper, contains the top, up-closed, meet-closed and prime.
pub fn is_prime_filter(l: &DistLattice, s: Mask) -> bool {
    !bits::contains(s, l.bot())
        && bits::contains(s, l.top())
        && l.order().is_upset(s)
        && bits::ones(s).all(|a| bits::ones(s).all(|b| bits::contains(s, l.meet(a, b))))
        && (0..l.len()).all(|a| {
            (0..l.len()).all(|b| !bits::contains(s, l.join(a, b)) || bits::contains(s, a) || bits::contains(s, b))
        })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFilter {
    home: Arc<DistLattice>,
    members: Mask,
}

impl PrimeFilter {
    pub fn new(home: Arc<DistLattice>, members: Mask) -> Result<Self, LatticeError> {
        if !is_prime_filter(&home, members) {
            return Err(LatticeError::NotAPrimeFilter);
        }
        Ok(PrimeFilter { home, members })
    }

    pub fn home(&self) -> &Arc<DistLattice> {
        &self.home
    }

    pub fn members(&self) -> Mask {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        bits::contains(self.members, a)
    }

    /// `↑a` where `a` is the least member.
    pub fn label(&self) -> String {
        filter_label(&self.home, self.members)
    }

    /// The characteristic hom `L -> 2`.
    pub fn characteristic(&self) -> LatticeHom {
        let assignment = (0..self.home.len()).map(|a| usize::from(self.contains(a))).collect();
        LatticeHom::new(self.home.clone(), Arc::new(DistLattice::two()), assignment)
            .expect("prime filters have lattice-hom characteristic maps")
    }
}

pub(crate) fn filter_label(l: &DistLattice, members: Mask) -> String {
    let m = l.meet_all(members);
    if l.above(m) == members {
        format!("↑{}", l.label(m))
    } else {
        bits::render(members, l.labels())
    }
}

/// Every prime filter, ordered by member mask.
pub fn prime_filters(l: &Arc<DistLattice>) -> Vec<PrimeFilter> {
    prime_filter_masks(l)
        .into_iter()
        .map(|members| PrimeFilter {
            home: l.clone(),
            members,
        })
        .collect()
}

pub(crate) fn prime_filter_masks(l: &DistLattice) -> Vec<Mask> {
    l.order()
        .upsets()
        .into_iter()
        .filter(|&u| is_prime_filter(l, u))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::downset_lattice;

    fn arc(l: DistLattice) -> Arc<DistLattice> {
        Arc::new(l)
    }

    fn square() -> Arc<DistLattice> {
        arc(DistLattice::from_pairs(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap())
    }

    fn m3_poset() -> FinPoset {
        FinPoset::order_closure(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap()
    }

    #[test]
    fn distributivity_examples() {
        assert!(square().candidate().is_distributive());
        assert!(DistLattice::chain(5).candidate().is_distributive());
        let m3 = LatticeCandidate::from_poset(&m3_poset()).unwrap();
        // a ∧ (b ∨ c) = a but (a ∧ b) ∨ (a ∧ c) = 0
        let (a, b, c) = m3.distributivity_witness().unwrap();
        assert_eq!((a, b, c), (1, 2, 3));
        assert!(matches!(
            DistLattice::new(m3_poset()),
            Err(LatticeError::NotDistributive { .. })
        ));
    }

    #[test]
    fn non_lattice_is_rejected() {
        let p = FinPoset::antichain(2);
        assert!(matches!(DistLattice::new(p), Err(LatticeError::NoMeet { .. })));
        assert_eq!(DistLattice::new(FinPoset::empty()).unwrap_err(), LatticeError::Empty);
    }

    #[test]
    fn ideal_examples() {
        let l = square();
        let (z, a, b) = (0, l.index_of("a").unwrap(), l.index_of("b").unwrap());
        assert!(is_ideal(&l, bits::from_indices([z, a])));
        assert!(!is_ideal(&l, bits::from_indices([z, a, b])));
        assert!(!is_ideal(&l, 0));
    }

    #[test]
    fn ideal_join_examples() {
        let l = square();
        let (a, b) = (l.index_of("a").unwrap(), l.index_of("b").unwrap());
        assert_eq!(ideal_join(&l, &[l.below(a), l.below(b)]), l.all());
        assert_eq!(ideal_join(&l, &[l.below(a)]), l.below(a));
        assert_eq!(ideal_join(&l, &[]), bits::bit(l.bot()));

        let c = DistLattice::chain(3);
        assert_eq!(ideal_join(&c, &[c.below(0), c.below(1)]), c.below(1));
    }

    #[test]
    fn ideal_lattice_examples() {
        let c3 = arc(DistLattice::chain(3));
        let il = IdealLattice::new(&c3);
        assert!(il.lattice().order().is_isomorphic(c3.order()));
        assert_eq!(il.lattice().labels(), &["↓0", "↓1", "↓2"]);

        assert_eq!(IdealLattice::new(&square()).lattice().len(), 4);

        let one = arc(DistLattice::chain(1));
        assert_eq!(IdealLattice::new(&one).lattice().len(), 1);
    }

    #[test]
    fn ideal_lattice_operations_are_intersection_and_ideal_join() {
        let l = arc(downset_lattice(
            &FinPoset::order_closure(&["a", "b", "c"], &[("a", "c")]).unwrap(),
        ));
        let il = IdealLattice::new(&l);
        let jl = il.lattice();
        for x in 0..jl.len() {
            for y in 0..jl.len() {
                assert_eq!(il.ideal(jl.meet(x, y)), il.ideal(x) & il.ideal(y));
                assert_eq!(il.ideal(jl.join(x, y)), ideal_join(&l, &[il.ideal(x), il.ideal(y)]));
            }
        }
    }

    #[test]
    fn ideal_map_examples() {
        // 2 -> 2² sending 1 to 1
        let two = arc(DistLattice::two());
        let sq = square();
        let f = LatticeHom::new(two.clone(), sq.clone(), vec![0, 3]).unwrap();
        let top = monad_unit_down(&two, 1);
        assert_eq!(ideal_map_image(&f, &top).unwrap().members(), sq.all());

        let id = LatticeHom::identity(&sq);
        let i = monad_unit_down(&sq, 1);
        assert_eq!(ideal_map_image(&id, &i).unwrap(), i);

        // 3-chain -> 2 collapsing m to 1
        let c3 = arc(DistLattice::chain(3));
        let g = LatticeHom::new(c3.clone(), two.clone(), vec![0, 1, 1]).unwrap();
        let im = ideal_map_image(&g, &monad_unit_down(&c3, 1)).unwrap();
        assert_eq!(im.members(), two.all());

        assert_eq!(ideal_map_image(&g, &i), Err(LatticeError::ForeignIdeal));
    }

    #[test]
    fn prime_filter_examples() {
        let c3 = arc(DistLattice::chain(3));
        let pf = prime_filters(&c3);
        assert_eq!(pf.len(), 2);
        let labels: Vec<_> = pf.iter().map(|f| f.label()).collect();
        assert_eq!(labels, vec!["↑2", "↑1"]);

        let sq = square();
        let labels: Vec<_> = prime_filters(&sq).iter().map(|f| f.label()).collect();
        assert_eq!(labels, vec!["↑a", "↑b"]);

        assert_eq!(prime_filters(&arc(DistLattice::two())).len(), 1);
    }

    #[test]
    fn homs_to_two_examples() {
        assert_eq!(homs_to_2(&square()).len(), 2);
        assert_eq!(homs_to_2(&arc(DistLattice::two())).len(), 1);
        for n in 1..7 {
            assert_eq!(homs_to_2(&arc(DistLattice::chain(n))).len(), n - 1);
        }
    }

    #[test]
    fn homs_match_brute_force() {
        let c3 = arc(DistLattice::chain(3));
        let sq = square();
        for (s, t) in [(&c3, &sq), (&sq, &c3), (&sq, &sq), (&c3, &c3)] {
            let mut brute = Vec::new();
            let n = s.len();
            let m = t.len();
            for code in 0..m.pow(n as u32) {
                let assignment: Vec<usize> = (0..n).map(|i| (code / m.pow(i as u32)) % m).collect();
                if let Ok(h) = LatticeHom::new(s.clone(), t.clone(), assignment) {
                    brute.push(h);
                }
            }
            brute.sort_by(|a, b| a.assignment().cmp(b.assignment()));
            assert_eq!(homs(s, t), brute);
        }
    }

    #[test]
    fn unit_examples() {
        let sq = square();
        let a = sq.index_of("a").unwrap();
        assert_eq!(monad_unit_down(&sq, a).members(), bits::from_indices([0, a]));
        assert_eq!(monad_unit_down(&sq, sq.bot()).members(), 1);
        assert_eq!(monad_unit_down(&sq, sq.top()).members(), sq.all());
    }

    #[test]
    fn mult_examples() {
        let sq = square();
        let il = IdealLattice::new(&sq);
        let a = sq.index_of("a").unwrap();
        let da = il.index_of(sq.below(a)).unwrap();
        let fam = monad_unit_down(il.lattice(), da);
        assert_eq!(monad_mult_union(&sq, &fam).unwrap().members(), sq.below(a));

        let c3 = arc(DistLattice::chain(3));
        let ic = IdealLattice::new(&c3);
        let whole = Ideal::new(ic.lattice().clone(), ic.lattice().all()).unwrap();
        assert_eq!(monad_mult_union(&c3, &whole).unwrap().members(), c3.all());

        let bottom = Ideal::new(ic.lattice().clone(), 1).unwrap();
        assert_eq!(monad_mult_union(&c3, &bottom).unwrap().members(), 1);

        assert_eq!(monad_mult_union(&sq, &bottom), Err(LatticeError::ForeignIdeal));
    }

    #[test]
    fn join_algebra_examples() {
        let sq = square();
        let il = IdealLattice::new(&sq);
        let alpha = frame_join_algebra(&il);
        for a in 0..sq.len() {
            assert_eq!(alpha.apply(il.index_of(sq.below(a)).unwrap()), a);
        }
        let (a, b) = (sq.index_of("a").unwrap(), sq.index_of("b").unwrap());
        let closure = ideal_join(&sq, &[bits::from_indices([0, a, b])]);
        assert_eq!(alpha.apply(il.index_of(closure).unwrap()), sq.top());
        assert_eq!(alpha.apply(il.index_of(1).unwrap()), sq.bot());
    }

    #[test]
    fn hom_validation() {
        let sq = square();
        let c3 = arc(DistLattice::chain(3));
        assert!(matches!(
            LatticeHom::new(sq.clone(), c3.clone(), vec![0, 1, 1, 2]),
            Err(LatticeError::NotAHom(_))
        ));
        let h = LatticeHom::new(sq.clone(), sq.clone(), vec![0, 2, 1, 3]).unwrap();
        let inv = h.inverse().unwrap();
        assert_eq!(LatticeHom::compose(&inv, &h).unwrap(), LatticeHom::identity(&sq));
    }
}
