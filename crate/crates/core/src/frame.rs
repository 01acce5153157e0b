//! Frame-theoretic structure on finite distributive lattices: the way-below
//! relation, stable compactness, regularity, the ideal-frame comonad
//! `𝕂 = (𝔍, c, γ)`, the spectrum and the compact-regular coreflection.
//!
//! The comonad is presented with comultiplication `c` and the coalgebra map
//! `γ(a) = {x | x ≪ a}`. Its counit is not displayed alongside them; here it
//! is `I ↦ ⋁I`, the counit of the free-frame/forgetful adjunction that induces
//! `𝕂`, and `γ` is treated as the canonical coalgebra structure.

use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::dlat::{
    self, frame_join_algebra, homs, ideal_map_image, DistLattice, Ideal, IdealLattice, LatticeError, LatticeHom,
};
use crate::order::FinPoset;
use crate::topspace::FinSpace;

/// Largest lattice for which the literal subset definition of `≪` is evaluated.
pub const WAY_BELOW_MAX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("way-below by definition needs 2^{0} subsets; limit is 2^{max}", max = WAY_BELOW_MAX)]
    TooLarge(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The way-below relation `a ≪ b` of a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WayBelowRelation {
    home: Arc<DistLattice>,
    /// `way_below[b] = {a | a ≪ b}`
    way_below: Vec<Mask>,
}

impl WayBelowRelation {
    pub fn home(&self) -> &Arc<DistLattice> {
        &self.home
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        bits::contains(self.way_below[b], a)
    }

    /// `{x | x ≪ b}`
    pub fn approximants(&self, b: usize) -> Mask {
        self.way_below[b]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.home.len();
        (0..n)
            .flat_map(|a| (0..n).filter(move |&b| self.holds(a, b)).map(move |b| (a, b)))
            .collect()
    }

    /// True iff the relation coincides with `≤`.
    pub fn equals_order(&self) -> bool {
        (0..self.home.len()).all(|b| self.way_below[b] == self.home.below(b))
    }
}

/// `a ≪ b` iff every `S` with `b ≤ ⋁S` has a finite `G ⊆ S` with `a ≤ ⋁G`.
///
/// Evaluated over all `2^|L|` subsets `S`; for each `S` the set of elements
/// covered by some `G ⊆ S` is accumulated over every sub-family `G`.
pub fn way_below(l: &Arc<DistLattice>) -> Result<WayBelowRelation, FrameError> {
    let n = l.len();
    if n > WAY_BELOW_MAX {
        return Err(FrameError::TooLarge(n));
    }
    let subsets = 1usize << n;
    let mut join_of = vec![l.bot(); subsets];
    // covered[S] = ⋃ { ↓⋁G | G ⊆ S }
    let mut covered = vec![0 as Mask; subsets];
    for s in 1..subsets {
        let low = s.trailing_zeros() as usize;
        join_of[s] = l.join(join_of[s & (s - 1)], low);
    }
    covered[0] = l.below(l.bot());
    for s in 1..subsets {
        let mut c = l.below(join_of[s]);
        for x in bits::ones(s as Mask) {
            c |= covered[s & !(1usize << x)];
        }
        covered[s] = c;
    }
    let mut way = vec![l.all(); n];
    for s in 0..subsets {
        let j = join_of[s];
        for b in bits::ones(l.below(j)) {
            way[b] &= covered[s];
        }
    }
    Ok(WayBelowRelation {
        home: l.clone(),
        way_below: way,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCompactnessReport {
    pub holds: bool,
    pub failures: Vec<String>,
}

/// `≪` is a sublattice of `L×L` containing `(0,0)` and `(1,1)`, and every
/// `a = ⋁{x | x ≪ a}`.
pub fn is_stably_compact(l: &Arc<DistLattice>) -> Result<StableCompactnessReport, FrameError> {
    let wb = way_below(l)?;
    let mut failures = Vec::new();
    let name = |x: usize| l.label(x).to_string();
    if !wb.holds(l.bot(), l.bot()) {
        failures.push("(0,0) not in ≪".to_string());
    }
    if !wb.holds(l.top(), l.top()) {
        failures.push("(1,1) not in ≪".to_string());
    }
    let pairs = wb.pairs();
    'outer: for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            if !wb.holds(l.meet(a, c), l.meet(b, d)) {
                failures.push(format!(
                    "({},{}) ∧ ({},{}) not in ≪",
                    name(a),
                    name(b),
                    name(c),
                    name(d)
                ));
                break 'outer;
            }
            if !wb.holds(l.join(a, c), l.join(b, d)) {
                failures.push(format!(
                    "({},{}) ∨ ({},{}) not in ≪",
                    name(a),
                    name(b),
                    name(c),
                    name(d)
                ));
                break 'outer;
            }
        }
    }
    for a in 0..l.len() {
        if l.join_all(wb.approximants(a)) != a {
            failures.push(format!("{} is not the join of its approximants", name(a)));
        }
    }
    Ok(StableCompactnessReport {
        holds: failures.is_empty(),
        failures,
    })
}

/// `1 ≪ 1`
pub fn is_compact_frame(l: &Arc<DistLattice>) -> Result<bool, FrameError> {
    Ok(way_below(l)?.holds(l.top(), l.top()))
}

/// `a* = ⋁{x | x ∧ a = 0}`
pub fn pseudocomplement(l: &DistLattice, a: usize) -> usize {
    let disjoint = bits::from_indices((0..l.len()).filter(|&x| l.meet(x, a) == l.bot()));
    l.join_all(disjoint)
}

/// The well-inside relation: `well[b] = {a | a* ∨ b = 1}`.
pub fn well_inside(l: &DistLattice) -> Vec<Mask> {
    let star: Vec<usize> = (0..l.len()).map(|a| pseudocomplement(l, a)).collect();
    (0..l.len())
        .map(|b| bits::from_indices((0..l.len()).filter(|&a| l.join(star[a], b) == l.top())))
        .collect()
}

/// Every `b = ⋁{a | a ≺ b}`.
pub fn is_regular(l: &DistLattice) -> bool {
    let well = well_inside(l);
    (0..l.len()).all(|b| l.join_all(well[b]) == b)
}

/// Every element has a complement.
pub fn is_boolean(l: &DistLattice) -> bool {
    (0..l.len()).all(|a| l.complement(a).is_some())
}

/// The compact-regular coreflection of a finite frame: its Boolean center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCenter {
    pub lattice: Arc<DistLattice>,
    /// Inclusion `CReg L -> L`.
    pub inclusion: LatticeHom,
}

pub fn creg_coreflection(l: &Arc<DistLattice>) -> BooleanCenter {
    let keep: Vec<usize> = (0..l.len()).filter(|&a| l.complement(a).is_some()).collect();
    let labels = keep.iter().map(|&a| l.label(a).to_string()).collect();
    let (order, pos) =
        FinPoset::from_relation(labels, |i, j| l.leq(keep[i], keep[j])).expect("suborder of a partial order");
    let mut assignment = vec![0; keep.len()];
    for (old, &new) in pos.iter().enumerate() {
        assignment[new] = keep[old];
    }
    let center = Arc::new(DistLattice::new(order).expect("complemented elements form a sublattice"));
    let inclusion =
        LatticeHom::new(center.clone(), l.clone(), assignment).expect("inclusion of the center is a lattice hom");
    BooleanCenter {
        lattice: center,
        inclusion,
    }
}

/// Checks that every hom `B -> L` from each given Boolean algebra factors
/// uniquely through the inclusion of the center.
pub fn creg_is_couniversal(l: &Arc<DistLattice>, boolean_algebras: &[Arc<DistLattice>]) -> bool {
    let center = creg_coreflection(l);
    boolean_algebras.iter().all(|b| {
        let through = homs(b, &center.lattice);
        homs(b, l).iter().all(|h| {
            through
                .iter()
                .filter(|g| LatticeHom::compose(&center.inclusion, g).as_ref() == Ok(h))
                .count()
                == 1
        })
    })
}

// ---------------------------------------------------------------------------
// Spectrum

/// `ΣL`: the homs `L -> 2` with basic opens `Σ_a = {f | f(a) = 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    lattice: Arc<DistLattice>,
    space: Arc<FinSpace>,
    /// Point `p` is the hom whose preimage of 1 is `points[p]`.
    points: Vec<Mask>,
    /// `basic[a] = Σ_a` as a set of points.
    basic: Vec<Mask>,
}

impl Spectrum {
    pub fn new(l: &Arc<DistLattice>) -> Self {
        let filters: Vec<Mask> = dlat::homs_to_2(l)
            .iter()
            .map(|h| bits::from_indices((0..l.len()).filter(|&a| h.apply(a) == 1)))
            .collect();
        let labels: Vec<String> = filters.iter().map(|&f| dlat::filter_label(l, f)).collect();
        let opens: Vec<Mask> = (0..l.len())
            .map(|a| bits::from_indices((0..filters.len()).filter(|&p| bits::contains(filters[p], a))))
            .collect();
        let (space, pos) =
            FinSpace::from_labeled_opens(labels, opens.clone()).expect("basic opens of a spectrum form a topology");
        let mut points = vec![0; filters.len()];
        for (old, &new) in pos.iter().enumerate() {
            points[new] = filters[old];
        }
        let remap = |m: Mask| bits::from_indices(bits::ones(m).map(|p| pos[p]));
        Spectrum {
            lattice: l.clone(),
            space: Arc::new(space),
            points,
            basic: opens.into_iter().map(remap).collect(),
        }
    }

    pub fn lattice(&self) -> &Arc<DistLattice> {
        &self.lattice
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    /// The prime filter `f⁻¹(1)` of point `p`.
    pub fn point_filter(&self, p: usize) -> Mask {
        self.points[p]
    }

    pub fn point_hom(&self, p: usize) -> LatticeHom {
        let assignment = (0..self.lattice.len())
            .map(|a| usize::from(bits::contains(self.points[p], a)))
            .collect();
        LatticeHom::new(self.lattice.clone(), Arc::new(DistLattice::two()), assignment)
            .expect("spectrum points are homs")
    }

    /// The point whose hom has the given preimage of 1.
    pub fn point_of_filter(&self, filter: Mask) -> Option<usize> {
        self.points.iter().position(|&f| f == filter)
    }

    /// `Σ_a`
    pub fn basic_open(&self, a: usize) -> Mask {
        self.basic[a]
    }
}

pub fn spectrum(l: &Arc<DistLattice>) -> Arc<FinSpace> {
    Spectrum::new(l).space().clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialityReport {
    /// `a ↦ Σ_a` as a hom `L -> 𝒪(ΣL)`.
    pub hom: LatticeHom,
    pub bijective: bool,
}

/// The comparison `a ↦ Σ_a` from `L` into the opens of its spectrum.
pub fn spatiality_iso(l: &Arc<DistLattice>) -> SpatialityReport {
    let spec = Spectrum::new(l);
    let frame = crate::topspace::OpenSetFrame::new(spec.space());
    let assignment = (0..l.len())
        .map(|a| frame.index_of(spec.basic_open(a)).expect("Σ_a is open"))
        .collect();
    let hom = LatticeHom::new(l.clone(), frame.lattice().clone(), assignment).expect("a ↦ Σ_a is a lattice hom");
    let bijective = hom.is_bijective();
    SpatialityReport { hom, bijective }
}

// ---------------------------------------------------------------------------
// The ideal-frame comonad

/// Comultiplication `c(I) = {J ∈ 𝔍L | ⋁J ∈ I}`.
pub fn comonad_c(l: &Arc<DistLattice>, ideal: &Ideal) -> Result<Ideal, LatticeError> {
    let il = IdealLattice::new(l);
    il.locate(ideal)?;
    let members = bits::from_indices((0..il.lattice().len()).filter(|&j| ideal.contains(l.join_all(il.ideal(j)))));
    Ideal::new(il.lattice().clone(), members)
}

/// The same comultiplication computed as `𝔍(↓)(I)`.
pub fn comonad_c_via_down(l: &Arc<DistLattice>, ideal: &Ideal) -> Result<Ideal, LatticeError> {
    let il = IdealLattice::new(l);
    ideal_map_image(&dlat::down_map(&il), ideal)
}

/// `c` as a hom `𝔍L -> 𝔍𝔍L`.
pub fn comultiplication_map(il: &IdealLattice, iil: &IdealLattice) -> LatticeHom {
    let l = il.base();
    let assignment = il
        .ideals()
        .iter()
        .map(|&i| {
            let m = bits::from_indices((0..il.lattice().len()).filter(|&j| bits::contains(i, l.join_all(il.ideal(j)))));
            iil.index_of(m).expect("c(I) is an ideal of 𝔍L")
        })
        .collect();
    LatticeHom::new(il.lattice().clone(), iil.lattice().clone(), assignment).expect("c is a frame hom")
}

/// Counit `I ↦ ⋁I`.
pub fn comonad_counit(l: &Arc<DistLattice>, ideal: &Ideal) -> Result<usize, LatticeError> {
    if **ideal.home() != **l {
        return Err(LatticeError::ForeignIdeal);
    }
    Ok(l.join_all(ideal.members()))
}

/// Counit `⋁ : 𝔍L -> L` as a hom.
pub fn counit_map(il: &IdealLattice) -> LatticeHom {
    frame_join_algebra(il)
}

/// A candidate coalgebra structure `L -> 𝔍L`, not assumed to be a hom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraCandidate {
    home: Arc<DistLattice>,
    structure: Vec<Mask>,
}

impl CoalgebraCandidate {
    pub fn new(home: Arc<DistLattice>, structure: Vec<Mask>) -> Self {
        assert_eq!(structure.len(), home.len(), "structure map must be total");
        CoalgebraCandidate { home, structure }
    }

    pub fn home(&self) -> &Arc<DistLattice> {
        &self.home
    }

    pub fn apply(&self, a: usize) -> Mask {
        self.structure[a]
    }

    pub fn structure(&self) -> &[Mask] {
        &self.structure
    }

    /// The structure map as a lattice hom into `𝔍L`, when it is one.
    pub fn as_hom(&self, il: &IdealLattice) -> Option<LatticeHom> {
        let assignment: Option<Vec<usize>> = self.structure.iter().map(|&m| il.index_of(m)).collect();
        LatticeHom::new(self.home.clone(), il.lattice().clone(), assignment?).ok()
    }
}

/// `γ(a) = {x | x ≪ a}`
pub fn coalgebra_gamma(l: &Arc<DistLattice>) -> Result<CoalgebraCandidate, FrameError> {
    let wb = way_below(l)?;
    Ok(CoalgebraCandidate {
        home: l.clone(),
        structure: (0..l.len()).map(|a| wb.approximants(a)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraVerdict {
    pub is_hom: bool,
    /// `⋁ ∘ γ = id`
    pub counit_law: bool,
    /// `c ∘ γ = 𝔍γ ∘ γ`
    pub coassociativity: bool,
}

impl CoalgebraVerdict {
    pub fn passes(&self) -> bool {
        self.is_hom && self.counit_law && self.coassociativity
    }
}

pub fn check_coalgebra(l: &Arc<DistLattice>, cand: &CoalgebraCandidate) -> CoalgebraVerdict {
    let il = IdealLattice::new(l);
    check_coalgebra_in(&il, cand)
}

pub(crate) fn check_coalgebra_in(il: &IdealLattice, cand: &CoalgebraCandidate) -> CoalgebraVerdict {
    let l = il.base();
    let is_hom = cand.as_hom(il).is_some();
    let counit_law = (0..l.len()).all(|a| l.join_all(cand.apply(a)) == a);
    let all_ideals = cand.structure.iter().all(|&m| il.index_of(m).is_some());
    let coassociativity = all_ideals
        && (0..l.len()).all(|a| {
            let g = cand.apply(a);
            // c(γ(a)) as a set of ideals of L
            let lhs =
                bits::from_indices((0..il.lattice().len()).filter(|&j| bits::contains(g, l.join_all(il.ideal(j)))));
            // 𝔍γ(γ(a)) = {J | J ⊆ γ(x) for some x ∈ γ(a)}
            let rhs = bits::from_indices(
                (0..il.lattice().len()).filter(|&j| bits::ones(g).any(|x| bits::is_subset(il.ideal(j), cand.apply(x)))),
            );
            lhs == rhs
        });
    CoalgebraVerdict {
        is_hom,
        counit_law,
        coassociativity,
    }
}

/// Coalgebra-morphism square `𝔍h ∘ γ_src = γ_tgt ∘ h`.
pub fn is_proper_frame_hom(h: &LatticeHom) -> Result<bool, FrameError> {
    let gs = coalgebra_gamma(h.source())?;
    let gt = coalgebra_gamma(h.target())?;
    let tgt = h.target();
    Ok((0..h.source().len()).all(|a| {
        let image = bits::ones(gs.apply(a)).fold(0, |acc, x| acc | tgt.below(h.apply(x)));
        image == gt.apply(h.apply(a))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{downset_lattice, FinPoset};

    fn arc(l: DistLattice) -> Arc<DistLattice> {
        Arc::new(l)
    }

    fn n_poset_lattice() -> Arc<DistLattice> {
        // The "N" poset a<c, b<c, b<d
        let p = FinPoset::order_closure(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap();
        arc(downset_lattice(&p))
    }

    /// Way-below by the textbook quantifier structure, enumerating every
    /// sub-family `G ⊆ S` explicitly.
    fn way_below_oracle(l: &DistLattice, a: usize, b: usize) -> bool {
        let n = l.len();
        (0u64..1 << n).all(|s| {
            if !l.leq(b, l.join_all(s)) {
                return true;
            }
            let mut g = s;
            loop {
                if l.leq(a, l.join_all(g)) {
                    return true;
                }
                if g == 0 {
                    return false;
                }
                g = (g - 1) & s;
            }
        })
    }

    #[test]
    fn way_below_matches_oracle() {
        for l in [
            arc(DistLattice::chain(3)),
            arc(DistLattice::boolean(2)),
            n_poset_lattice(),
        ] {
            let wb = way_below(&l).unwrap();
            for a in 0..l.len() {
                for b in 0..l.len() {
                    assert_eq!(wb.holds(a, b), way_below_oracle(&l, a, b));
                }
            }
            assert!(wb.equals_order());
        }
    }

    #[test]
    fn way_below_examples() {
        let c3 = arc(DistLattice::chain(3));
        let wb = way_below(&c3).unwrap();
        assert!(wb.holds(1, 1));
        for a in 0..3 {
            assert!(wb.holds(c3.bot(), a));
        }
    }

    #[test]
    fn stable_compactness_examples() {
        assert!(is_stably_compact(&arc(DistLattice::boolean(2))).unwrap().holds);
        assert!(is_stably_compact(&arc(DistLattice::chain(1))).unwrap().holds);
        let n = n_poset_lattice();
        assert_eq!(n.len(), 8);
        assert!(is_stably_compact(&n).unwrap().holds);
        for l in [arc(DistLattice::chain(4)), arc(DistLattice::boolean(3)), n] {
            assert!(is_compact_frame(&l).unwrap());
        }
    }

    #[test]
    fn way_below_refuses_oversized_lattices() {
        let big = arc(DistLattice::chain(WAY_BELOW_MAX + 1));
        assert_eq!(way_below(&big).unwrap_err(), FrameError::TooLarge(WAY_BELOW_MAX + 1));
    }

    #[test]
    fn regularity_examples() {
        let c3 = DistLattice::chain(3);
        assert_eq!(pseudocomplement(&c3, 1), 0);
        let well = well_inside(&c3);
        assert!(bits::contains(well[2], 1));
        assert!(!bits::contains(well[1], 1));
        assert!(!is_regular(&c3));
        assert!(is_regular(&DistLattice::boolean(2)));
        assert!(is_regular(&DistLattice::chain(1)));
    }

    #[test]
    fn creg_examples() {
        let c3 = arc(DistLattice::chain(3));
        let center = creg_coreflection(&c3);
        assert!(center.lattice.order().is_isomorphic(DistLattice::two().order()));
        assert_eq!(center.inclusion.assignment(), &[0, 2]);

        let sq = arc(DistLattice::boolean(2));
        assert_eq!(*creg_coreflection(&sq).lattice, *sq);

        // 2-chain plus a disjoint point
        let p = FinPoset::order_closure(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let l = arc(downset_lattice(&p));
        let c = creg_coreflection(&l);
        assert_eq!(c.lattice.len(), 4);
        let tests: Vec<_> = (0..3).map(|k| arc(DistLattice::boolean(k))).collect();
        assert!(creg_is_couniversal(&l, &tests));
        assert!(creg_is_couniversal(&c3, &tests));
    }

    #[test]
    fn spectrum_examples() {
        let c3 = arc(DistLattice::chain(3));
        let s = spectrum(&c3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.opens().len(), 3);
        assert!(s.is_homeomorphic(&FinSpace::sierpinski()));

        let sq = arc(DistLattice::boolean(2));
        assert!(spectrum(&sq).is_homeomorphic(&FinSpace::discrete(2)));
        assert_eq!(spectrum(&arc(DistLattice::two())).len(), 1);
    }

    #[test]
    fn spatiality_examples() {
        for l in [
            arc(DistLattice::chain(3)),
            arc(DistLattice::boolean(2)),
            arc(DistLattice::chain(1)),
        ] {
            assert!(spatiality_iso(&l).bijective);
        }
        let one = arc(DistLattice::chain(1));
        assert_eq!(spectrum(&one).len(), 0);
    }

    #[test]
    fn comultiplication_examples() {
        let sq = arc(DistLattice::boolean(2));
        let il = IdealLattice::new(&sq);
        let bot = dlat::monad_unit_down(&sq, sq.bot());
        let c_bot = comonad_c(&sq, &bot).unwrap();
        assert_eq!(c_bot.members(), 1);
        let a = 1;
        let c_a = comonad_c(&sq, &dlat::monad_unit_down(&sq, a)).unwrap();
        let expected = bits::from_indices([il.index_of(1).unwrap(), il.index_of(sq.below(a)).unwrap()]);
        assert_eq!(c_a.members(), expected);
        let top = dlat::monad_unit_down(&sq, sq.top());
        assert_eq!(comonad_c(&sq, &top).unwrap().members(), il.lattice().all());
        for i in 0..il.lattice().len() {
            let ideal = il.element(i);
            assert_eq!(comonad_c(&sq, &ideal), comonad_c_via_down(&sq, &ideal));
        }
    }

    #[test]
    fn counit_examples() {
        let sq = arc(DistLattice::boolean(2));
        for a in 0..4 {
            assert_eq!(comonad_counit(&sq, &dlat::monad_unit_down(&sq, a)).unwrap(), a);
        }
        let whole = Ideal::new(sq.clone(), sq.all()).unwrap();
        assert_eq!(comonad_counit(&sq, &whole).unwrap(), sq.top());
        let c3 = arc(DistLattice::chain(3));
        assert_eq!(comonad_counit(&c3, &whole), Err(LatticeError::ForeignIdeal));
    }

    #[test]
    fn gamma_examples() {
        let c3 = arc(DistLattice::chain(3));
        let g = coalgebra_gamma(&c3).unwrap();
        assert_eq!(g.apply(c3.bot()), 1);
        assert_eq!(g.apply(1), 0b011);
        let sq = arc(DistLattice::boolean(2));
        let gs = coalgebra_gamma(&sq).unwrap();
        for a in 0..4 {
            assert_eq!(sq.join_all(gs.apply(a)), a);
        }
    }

    #[test]
    fn coalgebra_check_examples() {
        let sq = arc(DistLattice::boolean(2));
        assert!(check_coalgebra(&sq, &coalgebra_gamma(&sq).unwrap()).passes());
        let constant = CoalgebraCandidate::new(sq.clone(), vec![1; 4]);
        let v = check_coalgebra(&sq, &constant);
        assert!(!v.counit_law);
        assert!(!v.passes());
        let c3 = arc(DistLattice::chain(3));
        let down = CoalgebraCandidate::new(c3.clone(), (0..3).map(|a| c3.below(a)).collect());
        assert!(check_coalgebra(&c3, &down).passes());
    }

    #[test]
    fn properness_examples() {
        let sq = arc(DistLattice::boolean(2));
        assert!(is_proper_frame_hom(&LatticeHom::identity(&sq)).unwrap());
        let c3 = arc(DistLattice::chain(3));
        for f in homs(&c3, &sq) {
            assert!(is_proper_frame_hom(&f).unwrap());
            for g in homs(&sq, &c3) {
                let gf = LatticeHom::compose(&g, &f).unwrap();
                assert!(is_proper_frame_hom(&gf).unwrap());
            }
        }
    }
}
