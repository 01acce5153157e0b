//! Finite topological spaces, the open-set functor, the open prime filter
//! monad `𝔽 = (F, μ, η)`, sobriety and `T₀` machinery, the Hausdorff
//! reflection, the finite ultrafilter space, and the comparison between the
//! filter and ideal sides.
//!
//! Specialization order: `x ≤ y` iff every open containing `x` contains `y`,
//! so opens are up-sets. With this orientation the spectrum of the 3-chain is
//! the Sierpiński space with `{1}` open.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask, MAX_CARRIER};
use crate::dlat::{self, DistLattice, IdealLattice, LatticeHom};
use crate::frame::{self, Spectrum};
use crate::order::{FinPoset, OrderError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("space of {0} points exceeds the supported maximum")]
    TooLarge(usize),
    #[error("open mask {0:#b} mentions points outside the carrier")]
    OutOfRange(Mask),
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("map is not total on the source")]
    NotTotal,
    #[error("not continuous: preimage of open {0} is not open")]
    NotContinuous(String),
    #[error("filter does not live over the expected space")]
    ForeignFilter,
    #[error("not an open prime filter")]
    NotAPrimeFilter,
    #[error("space is not T0 (`{x}` and `{y}` are indistinguishable); it carries no F-algebra")]
    NoCanonicalAlgebra { x: String, y: String },
    #[error("structure map has the wrong type")]
    WrongType,
}

/// A finite space given by its full family of opens.
///
/// Points are sorted by label; opens are kept in increasing mask order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSpace {
    labels: Vec<String>,
    opens: Vec<Mask>,
}

impl FinSpace {
    /// Validates a family that must already be a topology.
    ///
    /// Returns the space and the canonical position of every input point.
    pub fn from_labeled_opens(labels: Vec<String>, opens: Vec<Mask>) -> Result<(Self, Vec<usize>), TopologyError> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(TopologyError::TooLarge(n));
        }
        let all = bits::full(n);
        let set: BTreeSet<Mask> = opens.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&m| !bits::is_subset(m, all)) {
            return Err(TopologyError::OutOfRange(bad));
        }
        let render = |m: Mask| bits::render(m, &labels);
        if !set.contains(&0) {
            return Err(TopologyError::NotATopology("∅ is not open".into()));
        }
        if !set.contains(&all) {
            return Err(TopologyError::NotATopology("the whole space is not open".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&(a | b)) {
                    return Err(TopologyError::NotATopology(format!(
                        "union of {} and {} is not open",
                        render(a),
                        render(b)
                    )));
                }
                if !set.contains(&(a & b)) {
                    return Err(TopologyError::NotATopology(format!(
                        "intersection of {} and {} is not open",
                        render(a),
                        render(b)
                    )));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(TopologyError::DuplicatePoint(l.clone()));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let remap = |m: Mask| bits::from_indices(bits::ones(m).map(|p| pos[p]));
        let mut opens: Vec<Mask> = set.into_iter().map(remap).collect();
        opens.sort_unstable();
        let space = FinSpace {
            labels: order.iter().map(|&o| labels[o].clone()).collect(),
            opens,
        };
        Ok((space, pos))
    }

    pub fn from_opens(labels: Vec<String>, opens: Vec<Mask>) -> Result<Self, TopologyError> {
        Ok(Self::from_labeled_opens(labels, opens)?.0)
    }

    /// The topology generated by the given sets under finite unions and
    /// intersections (the empty set and the whole space are always added).
    pub fn generated(labels: Vec<String>, generators: &[Mask]) -> Result<(Self, Vec<usize>), TopologyError> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(TopologyError::TooLarge(n));
        }
        let all = bits::full(n);
        if let Some(&bad) = generators.iter().find(|&&m| !bits::is_subset(m, all)) {
            return Err(TopologyError::OutOfRange(bad));
        }
        let mut set: BTreeSet<Mask> = generators.iter().copied().collect();
        set.insert(0);
        set.insert(all);
        loop {
            let current: Vec<Mask> = set.iter().copied().collect();
            let before = set.len();
            for &a in &current {
                for &b in &current {
                    set.insert(a | b);
                    set.insert(a & b);
                }
            }
            if set.len() == before {
                break;
            }
        }
        Self::from_labeled_opens(labels, set.into_iter().collect())
    }

    /// `({0,1}, {∅, {1}, {0,1}})`
    pub fn sierpinski() -> Self {
        Self::from_opens(vec!["0".into(), "1".into()], vec![0, 0b10, 0b11]).unwrap()
    }

    pub fn discrete(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_opens(labels, (0..=bits::full(n)).collect()).unwrap()
    }

    pub fn indiscrete(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_opens(labels, vec![0, bits::full(n)]).unwrap()
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn empty() -> Self {
        Self::discrete(0)
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn is_open(&self, m: Mask) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    pub fn is_closed(&self, m: Mask) -> bool {
        self.is_open(self.all() & !m)
    }

    pub fn render(&self, m: Mask) -> String {
        bits::render(m, &self.labels)
    }

    /// Kuratowski closure: the least closed superset.
    pub fn closure(&self, a: Mask) -> Mask {
        let outside = self.opens.iter().filter(|&&u| u & a == 0).fold(0, |acc, &u| acc | u);
        self.all() & !outside
    }

    /// `up[x] = {y | x ≤ y}`, the least open containing `x`.
    pub fn specialization_preorder(&self) -> Vec<Mask> {
        (0..self.len())
            .map(|x| {
                self.opens
                    .iter()
                    .filter(|&&u| bits::contains(u, x))
                    .fold(self.all(), |acc, &u| acc & u)
            })
            .collect()
    }

    /// A pair of distinct points with the same neighbourhoods, if any.
    pub fn indistinguishable_pair(&self) -> Option<(usize, usize)> {
        let up = self.specialization_preorder();
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if bits::contains(up[x], y) && bits::contains(up[y], x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_t0(&self) -> bool {
        self.indistinguishable_pair().is_none()
    }

    pub fn is_homeomorphic(&self, other: &FinSpace) -> bool {
        find_homeomorphism(&Arc::new(self.clone()), &Arc::new(other.clone())).is_some()
    }
}

impl fmt::Display for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opens: Vec<String> = self.opens.iter().map(|&u| self.render(u)).collect();
        write!(f, "[{}] τ=[{}]", self.labels.join(","), opens.join(","))
    }
}

/// A continuous map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuousMap {
    source: Arc<FinSpace>,
    target: Arc<FinSpace>,
    assignment: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(source: Arc<FinSpace>, target: Arc<FinSpace>, assignment: Vec<usize>) -> Result<Self, TopologyError> {
        if assignment.len() != source.len() || assignment.iter().any(|&y| y >= target.len()) {
            return Err(TopologyError::NotTotal);
        }
        let map = ContinuousMap {
            source,
            target,
            assignment,
        };
        for &v in map.target.opens() {
            if !map.source.is_open(map.preimage(v)) {
                return Err(TopologyError::NotContinuous(map.target.render(v)));
            }
        }
        Ok(map)
    }

    pub fn identity(x: &Arc<FinSpace>) -> Self {
        ContinuousMap {
            source: x.clone(),
            target: x.clone(),
            assignment: (0..x.len()).collect(),
        }
    }

    /// `g ∘ f`
    pub fn compose(g: &ContinuousMap, f: &ContinuousMap) -> Result<Self, TopologyError> {
        if f.target != g.source {
            return Err(TopologyError::WrongType);
        }
        Ok(ContinuousMap {
            source: f.source.clone(),
            target: g.target.clone(),
            assignment: f.assignment.iter().map(|&x| g.assignment[x]).collect(),
        })
    }

    pub fn source(&self) -> &Arc<FinSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinSpace> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn preimage(&self, v: Mask) -> Mask {
        bits::from_indices((0..self.source.len()).filter(|&x| bits::contains(v, self.assignment[x])))
    }

    pub fn image(&self, a: Mask) -> Mask {
        bits::from_indices(bits::ones(a).map(|x| self.assignment[x]))
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.image(self.source.all()) == self.target.all()
    }

    /// The inverse map when this is a homeomorphism.
    pub fn inverse(&self) -> Option<ContinuousMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target.len()];
        for (x, &y) in self.assignment.iter().enumerate() {
            inv[y] = x;
        }
        ContinuousMap::new(self.target.clone(), self.source.clone(), inv).ok()
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.inverse().is_some()
    }
}

/// Exhaustive bijection search transporting opens.
pub fn find_homeomorphism(x: &Arc<FinSpace>, y: &Arc<FinSpace>) -> Option<ContinuousMap> {
    if x.len() != y.len() || x.opens().len() != y.opens().len() {
        return None;
    }
    let n = x.len();
    let degree = |s: &FinSpace, p: usize| s.opens().iter().filter(|&&u| bits::contains(u, p)).count();
    let dx: Vec<usize> = (0..n).map(|p| degree(x, p)).collect();
    let dy: Vec<usize> = (0..n).map(|p| degree(y, p)).collect();
    let mut assign = vec![0; n];
    fn go(
        i: usize,
        x: &Arc<FinSpace>,
        y: &Arc<FinSpace>,
        dx: &[usize],
        dy: &[usize],
        assign: &mut Vec<usize>,
        used: Mask,
    ) -> Option<ContinuousMap> {
        if i == x.len() {
            let f = ContinuousMap::new(x.clone(), y.clone(), assign.clone()).ok()?;
            return f.is_homeomorphism().then_some(f);
        }
        for j in 0..y.len() {
            if bits::contains(used, j) || dx[i] != dy[j] {
                continue;
            }
            assign[i] = j;
            if let Some(f) = go(i + 1, x, y, dx, dy, assign, used | bits::bit(j)) {
                return Some(f);
            }
        }
        None
    }
    go(0, x, y, &dx, &dy, &mut assign, 0)
}

// ---------------------------------------------------------------------------
// The open-set frame

/// `𝒪X` as a lattice, remembering which open each element is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenSetFrame {
    space: Arc<FinSpace>,
    lattice: Arc<DistLattice>,
    opens: Vec<Mask>,
}

impl OpenSetFrame {
    pub fn new(space: &Arc<FinSpace>) -> Self {
        let raw = space.opens().to_vec();
        let labels = raw.iter().map(|&u| space.render(u)).collect();
        let (order, pos) = FinPoset::from_relation(labels, |i, j| bits::is_subset(raw[i], raw[j]))
            .expect("inclusion is a partial order");
        let mut opens = vec![0; raw.len()];
        for (old, &new) in pos.iter().enumerate() {
            opens[new] = raw[old];
        }
        OpenSetFrame {
            space: space.clone(),
            lattice: Arc::new(DistLattice::new(order).expect("opens form a distributive lattice")),
            opens,
        }
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn lattice(&self) -> &Arc<DistLattice> {
        &self.lattice
    }

    pub fn open(&self, i: usize) -> Mask {
        self.opens[i]
    }

    pub fn index_of(&self, open: Mask) -> Option<usize> {
        self.opens.iter().position(|&u| u == open)
    }
}

pub fn open_set_frame(x: &Arc<FinSpace>) -> Arc<DistLattice> {
    OpenSetFrame::new(x).lattice().clone()
}

/// `𝒪f = f⁻¹[-]` as a hom `𝒪Y -> 𝒪X`.
pub fn preimage_hom(f: &ContinuousMap) -> LatticeHom {
    let src = OpenSetFrame::new(f.source());
    let tgt = OpenSetFrame::new(f.target());
    preimage_hom_between(f, &src, &tgt)
}

pub(crate) fn preimage_hom_between(f: &ContinuousMap, src: &OpenSetFrame, tgt: &OpenSetFrame) -> LatticeHom {
    let assignment = tgt
        .opens
        .iter()
        .map(|&v| src.index_of(f.preimage(v)).expect("continuity"))
        .collect();
    LatticeHom::new(tgt.lattice.clone(), src.lattice.clone(), assignment).expect("preimage is a frame hom")
}

// ---------------------------------------------------------------------------
// Specialization and T0

/// The specialization order of a `T₀` space.
pub fn specialization_order(x: &FinSpace) -> Result<FinPoset, TopologyError> {
    if let Some((a, b)) = x.indistinguishable_pair() {
        return Err(TopologyError::NoCanonicalAlgebra {
            x: x.label(a).into(),
            y: x.label(b).into(),
        });
    }
    let up = x.specialization_preorder();
    let (p, _) =
        FinPoset::from_relation(x.labels().to_vec(), |a, b| bits::contains(up[a], b)).map_err(|e| match e {
            OrderError::Cycle { a, b } => TopologyError::NoCanonicalAlgebra { x: a, y: b },
            other => TopologyError::NotATopology(other.to_string()),
        })?;
    Ok(p)
}

pub fn is_t0(x: &FinSpace) -> bool {
    x.is_t0()
}

fn quotient_by(
    x: &Arc<FinSpace>,
    class_of: &[usize],
    classes: &[Mask],
    discrete: bool,
) -> (Arc<FinSpace>, ContinuousMap) {
    let labels: Vec<String> = classes
        .iter()
        .map(|&c| {
            let names: Vec<&str> = bits::ones(c).map(|p| x.label(p)).collect();
            format!("[{}]", names.join(","))
        })
        .collect();
    let opens: Vec<Mask> = if discrete {
        (0..=bits::full(classes.len())).collect()
    } else {
        x.opens()
            .iter()
            .map(|&u| bits::from_indices((0..classes.len()).filter(|&k| bits::is_subset(classes[k], u))))
            .collect()
    };
    let (q, pos) = FinSpace::from_labeled_opens(labels, opens).expect("quotient topology");
    let q = Arc::new(q);
    let proj = ContinuousMap::new(x.clone(), q.clone(), class_of.iter().map(|&k| pos[k]).collect())
        .expect("projection is continuous");
    (q, proj)
}

fn partition(n: usize, same: impl Fn(usize, usize) -> bool) -> (Vec<usize>, Vec<Mask>) {
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Mask> = Vec::new();
    for p in 0..n {
        if class_of[p] != usize::MAX {
            continue;
        }
        let k = classes.len();
        let mut c = 0;
        for q in p..n {
            if class_of[q] == usize::MAX && same(p, q) {
                class_of[q] = k;
                c |= bits::bit(q);
            }
        }
        classes.push(c);
    }
    (class_of, classes)
}

/// Identifies topologically indistinguishable points.
pub fn t0_quotient(x: &Arc<FinSpace>) -> (Arc<FinSpace>, ContinuousMap) {
    let up = x.specialization_preorder();
    let (class_of, classes) = partition(x.len(), |p, q| up[p] == up[q]);
    quotient_by(x, &class_of, &classes, false)
}

// ---------------------------------------------------------------------------
// The open prime filter monad

/// An open prime filter: a prime filter of the lattice `𝒪X`.
///
/// Members are indices into [`OpenSetFrame::new`] of the home space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenPrimeFilter {
    home: Arc<FinSpace>,
    members: Mask,
}

impl OpenPrimeFilter {
    pub fn new(home: Arc<FinSpace>, members: Mask) -> Result<Self, TopologyError> {
        let frame = OpenSetFrame::new(&home);
        if !dlat::is_prime_filter(frame.lattice(), members) {
            return Err(TopologyError::NotAPrimeFilter);
        }
        Ok(OpenPrimeFilter { home, members })
    }

    pub fn home(&self) -> &Arc<FinSpace> {
        &self.home
    }

    pub fn members(&self) -> Mask {
        self.members
    }

    /// The member opens as point sets.
    pub fn opens(&self) -> Vec<Mask> {
        let frame = OpenSetFrame::new(&self.home);
        bits::ones(self.members).map(|i| frame.open(i)).collect()
    }

    pub fn contains_open(&self, open: Mask) -> bool {
        OpenSetFrame::new(&self.home)
            .index_of(open)
            .is_some_and(|i| bits::contains(self.members, i))
    }
}

/// `FX` with its points identified as open prime filters and each basic
/// open `O*` recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterSpace {
    frame: OpenSetFrame,
    space: Arc<FinSpace>,
    /// Point `p` of `FX` is the filter `filters[p]` (over `frame` indices).
    filters: Vec<Mask>,
    /// `star[o] = O*` for the open at frame index `o`.
    star: Vec<Mask>,
}

impl FilterSpace {
    pub fn new(x: &Arc<FinSpace>) -> Self {
        let frame = OpenSetFrame::new(x);
        let lat = frame.lattice().clone();
        let found = dlat::prime_filter_masks(&lat);
        let labels: Vec<String> = found.iter().map(|&f| dlat::filter_label(&lat, f)).collect();
        let stars: Vec<Mask> = (0..lat.len())
            .map(|o| bits::from_indices((0..found.len()).filter(|&p| bits::contains(found[p], o))))
            .collect();
        let (space, pos) = FinSpace::generated(labels, &stars).expect("basis O* generates a topology");
        let mut filters = vec![0; found.len()];
        for (old, &new) in pos.iter().enumerate() {
            filters[new] = found[old];
        }
        let remap = |m: Mask| bits::from_indices(bits::ones(m).map(|p| pos[p]));
        FilterSpace {
            frame,
            space: Arc::new(space),
            filters,
            star: stars.into_iter().map(remap).collect(),
        }
    }

    pub fn base(&self) -> &Arc<FinSpace> {
        self.frame.space()
    }

    pub fn frame(&self) -> &OpenSetFrame {
        &self.frame
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn filter(&self, p: usize) -> OpenPrimeFilter {
        OpenPrimeFilter {
            home: self.base().clone(),
            members: self.filters[p],
        }
    }

    pub fn filter_mask(&self, p: usize) -> Mask {
        self.filters[p]
    }

    pub fn point_of(&self, filter: &OpenPrimeFilter) -> Result<usize, TopologyError> {
        if filter.home != *self.base() {
            return Err(TopologyError::ForeignFilter);
        }
        self.filters
            .iter()
            .position(|&f| f == filter.members)
            .ok_or(TopologyError::ForeignFilter)
    }

    /// `O* = {F | O ∈ F}` for an open of the base.
    pub fn star(&self, open: Mask) -> Option<Mask> {
        self.frame.index_of(open).map(|o| self.star[o])
    }

    /// True iff every `O*` is open and the family `{O*}` is closed under
    /// finite intersections and unions and exhausts the topology.
    pub fn stars_form_the_topology(&self) -> bool {
        let set: BTreeSet<Mask> = self.star.iter().copied().collect();
        let closed = set
            .iter()
            .all(|&a| set.iter().all(|&b| set.contains(&(a & b)) && set.contains(&(a | b))));
        closed && set.iter().copied().eq(self.space.opens().iter().copied())
    }
}

pub fn filter_space(x: &Arc<FinSpace>) -> Arc<FinSpace> {
    FilterSpace::new(x).space().clone()
}

fn image_filter(f: &ContinuousMap, src: &OpenSetFrame, tgt: &OpenSetFrame, members: Mask) -> Mask {
    bits::from_indices((0..tgt.lattice().len()).filter(|&v| {
        let pre = f.preimage(tgt.open(v));
        src.index_of(pre).is_some_and(|u| bits::contains(members, u))
    }))
}

/// `Ff(F) = {V | f⁻¹(V) ∈ F}`
pub fn filter_map_image(f: &ContinuousMap, filter: &OpenPrimeFilter) -> Result<OpenPrimeFilter, TopologyError> {
    if filter.home != *f.source() {
        return Err(TopologyError::ForeignFilter);
    }
    let src = OpenSetFrame::new(f.source());
    let tgt = OpenSetFrame::new(f.target());
    OpenPrimeFilter::new(f.target().clone(), image_filter(f, &src, &tgt, filter.members))
}

/// `Ff : FX -> FY`
pub fn filter_map(f: &ContinuousMap) -> ContinuousMap {
    filter_map_between(f, &FilterSpace::new(f.source()), &FilterSpace::new(f.target()))
}

pub(crate) fn filter_map_between(f: &ContinuousMap, fx: &FilterSpace, fy: &FilterSpace) -> ContinuousMap {
    let assignment = fx
        .filters
        .iter()
        .map(|&m| {
            let image = image_filter(f, &fx.frame, &fy.frame, m);
            fy.filters
                .iter()
                .position(|&g| g == image)
                .expect("image of a prime filter is prime")
        })
        .collect();
    ContinuousMap::new(fx.space.clone(), fy.space.clone(), assignment).expect("Ff is continuous")
}

/// `η(x) = {O ∈ τ | x ∈ O}`
pub fn monad_eta(x: &Arc<FinSpace>, point: usize) -> OpenPrimeFilter {
    let frame = OpenSetFrame::new(x);
    OpenPrimeFilter {
        home: x.clone(),
        members: neighbourhoods(&frame, point),
    }
}

fn neighbourhoods(frame: &OpenSetFrame, point: usize) -> Mask {
    bits::from_indices((0..frame.opens.len()).filter(|&o| bits::contains(frame.opens[o], point)))
}

/// `η_X : X -> FX`
pub fn eta_map(fx: &FilterSpace) -> ContinuousMap {
    let x = fx.base();
    let assignment = (0..x.len())
        .map(|p| {
            let n = neighbourhoods(&fx.frame, p);
            fx.filters
                .iter()
                .position(|&f| f == n)
                .expect("neighbourhood filters are prime")
        })
        .collect();
    ContinuousMap::new(x.clone(), fx.space.clone(), assignment).expect("η is continuous")
}

/// `μ(𝔛) = {O ∈ τ | O* ∈ 𝔛}` for an open prime filter `𝔛` of `FX`.
pub fn monad_mu(x: &Arc<FinSpace>, filter: &OpenPrimeFilter) -> Result<OpenPrimeFilter, TopologyError> {
    let fx = FilterSpace::new(x);
    if filter.home != fx.space {
        return Err(TopologyError::ForeignFilter);
    }
    let ffx_frame = OpenSetFrame::new(&fx.space);
    let members = mu_members(&fx, &ffx_frame, filter.members);
    OpenPrimeFilter::new(x.clone(), members)
}

fn mu_members(fx: &FilterSpace, ffx_frame: &OpenSetFrame, outer: Mask) -> Mask {
    bits::from_indices(
        (0..fx.star.len()).filter(|&o| ffx_frame.index_of(fx.star[o]).is_some_and(|i| bits::contains(outer, i))),
    )
}

/// `μ_X : FFX -> FX`
pub fn mu_map(fx: &FilterSpace, ffx: &FilterSpace) -> ContinuousMap {
    debug_assert_eq!(ffx.base(), fx.space());
    let assignment = ffx
        .filters
        .iter()
        .map(|&outer| {
            let m = mu_members(fx, &ffx.frame, outer);
            fx.filters
                .iter()
                .position(|&f| f == m)
                .expect("μ yields a prime filter")
        })
        .collect();
    ContinuousMap::new(ffx.space.clone(), fx.space.clone(), assignment).expect("μ is continuous")
}

/// Outcome of [`canonical_f_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalAlgebra {
    /// `α = η⁻¹ : FX -> X`
    Structure(ContinuousMap),
    /// Two distinct points with `η(x) = η(y)`; `α ∘ η = id` is impossible.
    NoAlgebra { x: String, y: String },
}

/// The structure map `η⁻¹` of a finite `T₀` space.
pub fn canonical_f_algebra(x: &Arc<FinSpace>) -> CanonicalAlgebra {
    if let Some((a, b)) = x.indistinguishable_pair() {
        return CanonicalAlgebra::NoAlgebra {
            x: x.label(a).into(),
            y: x.label(b).into(),
        };
    }
    let fx = FilterSpace::new(x);
    let eta = eta_map(&fx);
    match eta.inverse() {
        Some(alpha) => CanonicalAlgebra::Structure(alpha),
        // Unreachable for finite T0 spaces; reported rather than assumed.
        None => CanonicalAlgebra::NoAlgebra {
            x: "η".into(),
            y: "not a homeomorphism".into(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FAlgebraVerdict {
    /// `α ∘ η = id`
    pub unit_law: bool,
    /// `α ∘ Fα = α ∘ μ`
    pub assoc_law: bool,
}

impl FAlgebraVerdict {
    pub fn passes(&self) -> bool {
        self.unit_law && self.assoc_law
    }
}

pub fn check_f_algebra(x: &Arc<FinSpace>, alpha: &ContinuousMap) -> Result<FAlgebraVerdict, TopologyError> {
    let fx = FilterSpace::new(x);
    if alpha.source() != fx.space() || alpha.target() != x {
        return Err(TopologyError::WrongType);
    }
    let ffx = FilterSpace::new(fx.space());
    Ok(check_f_algebra_in(&fx, &ffx, alpha))
}

pub(crate) fn check_f_algebra_in(fx: &FilterSpace, ffx: &FilterSpace, alpha: &ContinuousMap) -> FAlgebraVerdict {
    let eta = eta_map(fx);
    let unit_law = ContinuousMap::compose(alpha, &eta).ok() == Some(ContinuousMap::identity(fx.base()));
    let f_alpha = filter_map_between(alpha, ffx, fx);
    let mu = mu_map(fx, ffx);
    let lhs = ContinuousMap::compose(alpha, &f_alpha).ok();
    let rhs = ContinuousMap::compose(alpha, &mu).ok();
    FAlgebraVerdict {
        unit_law,
        assoc_law: lhs.is_some() && lhs == rhs,
    }
}

/// Algebra-morphism square `α_Y ∘ Ff = f ∘ α_X`.
pub fn is_proper_map(f: &ContinuousMap) -> Result<bool, TopologyError> {
    let structure = |x: &Arc<FinSpace>| match canonical_f_algebra(x) {
        CanonicalAlgebra::Structure(a) => Ok(a),
        CanonicalAlgebra::NoAlgebra { x, y } => Err(TopologyError::NoCanonicalAlgebra { x, y }),
    };
    let ax = structure(f.source())?;
    let ay = structure(f.target())?;
    let ff = filter_map(f);
    Ok(ContinuousMap::compose(&ay, &ff)? == ContinuousMap::compose(f, &ax)?)
}

// ---------------------------------------------------------------------------
// Sobrification and the pairing with the ideal side

/// `Σ𝒪X` with the unit `x ↦ (U ↦ [x ∈ U])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sobrification {
    pub spectrum: Spectrum,
    pub unit: ContinuousMap,
}

pub fn sobrification(x: &Arc<FinSpace>) -> Sobrification {
    let frame = OpenSetFrame::new(x);
    let spectrum = Spectrum::new(frame.lattice());
    let assignment = (0..x.len())
        .map(|p| {
            spectrum
                .point_of_filter(neighbourhoods(&frame, p))
                .expect("neighbourhood filters are points of the spectrum")
        })
        .collect();
    let unit = ContinuousMap::new(x.clone(), spectrum.space().clone(), assignment).expect("unit is continuous");
    Sobrification { spectrum, unit }
}

/// The unit into the sobrification is a homeomorphism.
pub fn is_sober(x: &Arc<FinSpace>) -> bool {
    sobrification(x).unit.is_homeomorphism()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    /// `FX -> Σ𝔍𝒪X`, `F ↦ (I ↦ [I ∩ F ≠ ∅])`
    pub map: ContinuousMap,
    pub homeomorphism: bool,
}

pub fn pairing_iso(x: &Arc<FinSpace>) -> PairingReport {
    let fx = FilterSpace::new(x);
    let il = IdealLattice::new(fx.frame.lattice());
    let spec = Spectrum::new(il.lattice());
    let map = pairing_map_in(&fx, &il, &spec);
    let homeomorphism = map.is_homeomorphism();
    PairingReport { map, homeomorphism }
}

pub(crate) fn pairing_map_in(fx: &FilterSpace, il: &IdealLattice, spec: &Spectrum) -> ContinuousMap {
    let assignment = fx
        .filters
        .iter()
        .map(|&f| {
            let hom_filter = bits::from_indices((0..il.lattice().len()).filter(|&i| il.ideal(i) & f != 0));
            spec.point_of_filter(hom_filter)
                .expect("I ↦ [I ∩ F ≠ ∅] is a point of Σ𝔍𝒪X")
        })
        .collect();
    ContinuousMap::new(fx.space.clone(), spec.space().clone(), assignment).expect("pairing map is continuous")
}

/// Checks `O* ↦ image ideal` identifies `𝒪(FX)` with `𝔍(𝒪X)`: the opens of
/// `FX` correspond bijectively and order-preservingly to ideals of `𝒪X`.
pub fn open_filter_frame_matches_ideals(x: &Arc<FinSpace>) -> bool {
    let fx = FilterSpace::new(x);
    let lat = fx.frame.lattice().clone();
    let il = IdealLattice::new(&lat);
    let ofx = OpenSetFrame::new(&fx.space);
    // each open W of FX is the union of the O* it contains; send it to the
    // ideal {O | O* ⊆ W}
    let assignment: Option<Vec<usize>> = (0..ofx.lattice().len())
        .map(|w| {
            let open = ofx.open(w);
            let ideal = bits::from_indices((0..lat.len()).filter(|&o| bits::is_subset(fx.star[o], open)));
            il.index_of(ideal)
        })
        .collect();
    match assignment {
        Some(a) => LatticeHom::new(ofx.lattice().clone(), il.lattice().clone(), a)
            .map(|h| h.is_bijective())
            .unwrap_or(false),
        None => false,
    }
}

// ---------------------------------------------------------------------------
// Hausdorff reflection and the Čech–Stone comparison

/// Quotient by quasi-components (points not separated by clopens), with
/// the discrete topology.
pub fn hausdorff_reflection(x: &Arc<FinSpace>) -> (Arc<FinSpace>, ContinuousMap) {
    let clopens: Vec<Mask> = x.opens().iter().copied().filter(|&u| x.is_closed(u)).collect();
    let (class_of, classes) = partition(x.len(), |p, q| {
        clopens.iter().all(|&c| bits::contains(c, p) == bits::contains(c, q))
    });
    quotient_by(x, &class_of, &classes, true)
}

/// Every continuous map into each given finite discrete space factors
/// uniquely through the reflection.
pub fn hausdorff_is_universal(x: &Arc<FinSpace>, discrete_targets: &[Arc<FinSpace>]) -> bool {
    let (rx, q) = hausdorff_reflection(x);
    discrete_targets.iter().all(|d| {
        let through = all_continuous_maps(&rx, d);
        all_continuous_maps(x, d).iter().all(|f| {
            through
                .iter()
                .filter(|g| ContinuousMap::compose(g, &q).as_ref() == Ok(f))
                .count()
                == 1
        })
    })
}

/// Every continuous map `x -> y`, in lexicographic assignment order.
pub fn all_continuous_maps(x: &Arc<FinSpace>, y: &Arc<FinSpace>) -> Vec<ContinuousMap> {
    all_functions(x.len(), y.len())
        .into_iter()
        .filter_map(|a| ContinuousMap::new(x.clone(), y.clone(), a).ok())
        .collect()
}

pub(crate) fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let total = m.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            let mut a = vec![0; n];
            for slot in a.iter_mut().rev() {
                *slot = c % m;
                c /= m;
            }
            a
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechStoneReport {
    /// Points of `Σ(CReg(𝒪(FX)))`.
    pub pointfree_points: usize,
    /// Points of `R(FX)`.
    pub pointset_points: usize,
    /// `R(FX) -> Σ(CReg(𝒪FX))`, class ↦ its clopen-neighbourhood hom.
    pub comparison: Option<ContinuousMap>,
    pub iso: bool,
}

pub fn cech_stone_square(x: &Arc<FinSpace>) -> CechStoneReport {
    let fx = FilterSpace::new(x);
    let ofx = OpenSetFrame::new(&fx.space);
    let center = frame::creg_coreflection(ofx.lattice());
    let spec = Spectrum::new(&center.lattice);
    let (rfx, q) = hausdorff_reflection(&fx.space);

    let clopen_hom = |p: usize| {
        bits::from_indices(
            (0..center.lattice.len()).filter(|&c| bits::contains(ofx.open(center.inclusion.apply(c)), p)),
        )
    };
    let mut assignment = vec![usize::MAX; rfx.len()];
    let mut well_defined = true;
    for p in 0..fx.space.len() {
        let point = spec.point_of_filter(clopen_hom(p));
        match point {
            Some(s) => {
                let k = q.apply(p);
                if assignment[k] != usize::MAX && assignment[k] != s {
                    well_defined = false;
                }
                assignment[k] = s;
            }
            None => well_defined = false,
        }
    }
    let comparison = if well_defined {
        ContinuousMap::new(rfx.clone(), spec.space().clone(), assignment).ok()
    } else {
        None
    };
    let iso = comparison.as_ref().is_some_and(|c| c.is_homeomorphism());
    CechStoneReport {
        pointfree_points: spec.space().len(),
        pointset_points: rfx.len(),
        comparison,
        iso,
    }
}

// ---------------------------------------------------------------------------
// Finite ultrafilter space

/// `UX`: ultrafilters on the underlying set with topology generated by
/// `Â = {u | A ∈ u}` for `A` open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrafilterSpace {
    pub space: Arc<FinSpace>,
    /// Ultrafilter of each point of `UX`, as a set of subsets of `X`.
    pub ultrafilters: Vec<BTreeSet<Mask>>,
    /// `x ↦` the principal ultrafilter at `x`, when it is a homeomorphism onto `UX`.
    pub principal: ContinuousMap,
}

pub fn ultrafilter_space(x: &Arc<FinSpace>) -> UltrafilterSpace {
    let (powerset, subsets) = powerset_lattice(x);
    let powerset = Arc::new(powerset);
    let found = dlat::prime_filter_masks(&powerset);
    let ufs: Vec<BTreeSet<Mask>> = found
        .iter()
        .map(|&f| bits::ones(f).map(|i| subsets[i]).collect())
        .collect();
    let labels: Vec<String> = found.iter().map(|&f| dlat::filter_label(&powerset, f)).collect();
    let hats: Vec<Mask> = x
        .opens()
        .iter()
        .map(|a| bits::from_indices((0..ufs.len()).filter(|&u| ufs[u].contains(a))))
        .collect();
    let (space, pos) = FinSpace::generated(labels, &hats).expect("generated topology");
    let mut ultrafilters = vec![BTreeSet::new(); ufs.len()];
    for (old, uf) in ufs.into_iter().enumerate() {
        ultrafilters[pos[old]] = uf;
    }
    let space = Arc::new(space);
    let assignment = (0..x.len())
        .map(|p| {
            ultrafilters
                .iter()
                .position(|u| u.contains(&bits::bit(p)))
                .expect("principal ultrafilters exist")
        })
        .collect();
    let principal = ContinuousMap {
        source: x.clone(),
        target: space.clone(),
        assignment,
    };
    UltrafilterSpace {
        space,
        ultrafilters,
        principal,
    }
}

/// The Boolean lattice of all subsets of the points, with the subset each
/// element stands for.
fn powerset_lattice(x: &FinSpace) -> (DistLattice, Vec<Mask>) {
    let raw: Vec<Mask> = (0..=x.all()).collect();
    let labels = raw.iter().map(|&m| x.render(m)).collect();
    let (order, pos) = FinPoset::from_relation(labels, |i, j| bits::is_subset(raw[i], raw[j])).unwrap();
    let mut subsets = vec![0; raw.len()];
    for (old, &new) in pos.iter().enumerate() {
        subsets[new] = raw[old];
    }
    (DistLattice::new(order).unwrap(), subsets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrafilterReport {
    /// Every ultrafilter is principal and `x ↦ principal(x)` is a homeomorphism `X ≅ UX`.
    pub ux_is_x: bool,
    /// `FX ≅ sobrification(t0Quotient(UX))`
    pub fx_matches: bool,
}

pub fn ultrafilter_comparison(x: &Arc<FinSpace>) -> UltrafilterReport {
    let ux = ultrafilter_space(x);
    let all_principal = ux.ultrafilters.iter().all(|u| u.iter().any(|&s| s.count_ones() == 1));
    let ux_is_x = all_principal
        && ContinuousMap::new(x.clone(), ux.space.clone(), ux.principal.assignment.clone())
            .is_ok_and(|m| m.is_homeomorphism());
    let (t0, _) = t0_quotient(&ux.space);
    let sob = sobrification(&t0);
    let fx = filter_space(x);
    let fx_matches = find_homeomorphism(&fx, sob.spectrum.space()).is_some();
    UltrafilterReport { ux_is_x, fx_matches }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(x: FinSpace) -> Arc<FinSpace> {
        Arc::new(x)
    }

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn topology_validation() {
        assert!(matches!(
            FinSpace::from_opens(labels(&["a", "b"]), vec![0, 1, 2, 3 & 0]),
            Err(TopologyError::NotATopology(_))
        ));
        assert!(matches!(
            FinSpace::from_opens(labels(&["a", "b"]), vec![0, 1, 2, 3]),
            Ok(_)
        ));
        assert!(matches!(
            FinSpace::from_opens(labels(&["a", "b", "c"]), vec![0, 1, 2, 7]),
            Err(TopologyError::NotATopology(_))
        ));
        let (g, _) = FinSpace::generated(labels(&["a", "b", "c"]), &[1, 2]).unwrap();
        assert_eq!(g.opens(), &[0, 1, 2, 3, 7]);
    }

    #[test]
    fn points_are_sorted_by_label() {
        let (s, pos) = FinSpace::from_labeled_opens(labels(&["b", "a"]), vec![0, 0b01, 0b11]).unwrap();
        assert_eq!(s.labels(), &["a", "b"]);
        assert_eq!(pos, vec![1, 0]);
        assert_eq!(s.opens(), &[0, 0b10, 0b11]);
    }

    #[test]
    fn open_set_frame_examples() {
        let s = arc(FinSpace::sierpinski());
        let f = open_set_frame(&s);
        assert!(f.order().is_isomorphic(DistLattice::chain(3).order()));
        let d = open_set_frame(&arc(FinSpace::discrete(2)));
        assert!(d.order().is_isomorphic(DistLattice::boolean(2).order()));
        let id = ContinuousMap::identity(&s);
        assert_eq!(preimage_hom(&id), LatticeHom::identity(&f));
    }

    #[test]
    fn preimage_is_contravariant() {
        let s = arc(FinSpace::sierpinski());
        let d = arc(FinSpace::discrete(2));
        let i = arc(FinSpace::indiscrete(2));
        for f in all_continuous_maps(&d, &s) {
            for g in all_continuous_maps(&s, &i) {
                let gf = ContinuousMap::compose(&g, &f).unwrap();
                let lhs = preimage_hom(&gf);
                let rhs = LatticeHom::compose(&preimage_hom(&f), &preimage_hom(&g)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn specialization_examples() {
        let s = arc(FinSpace::sierpinski());
        let p = specialization_order(&s).unwrap();
        assert!(p.leq(0, 1) && !p.leq(1, 0));
        assert!(s.is_t0());

        let i = arc(FinSpace::indiscrete(2));
        assert!(!i.is_t0());
        let (q, proj) = t0_quotient(&i);
        assert_eq!(q.len(), 1);
        assert_eq!(proj.assignment(), &[0, 0]);

        let d = arc(FinSpace::discrete(3));
        let p = specialization_order(&d).unwrap();
        assert_eq!(p.leq_pairs().len(), 3);
        let (q, _) = t0_quotient(&d);
        assert!(q.is_homeomorphic(&d));
    }

    #[test]
    fn t0_quotient_is_universal() {
        let x = arc(FinSpace::from_opens(labels(&["a", "b", "c"]), vec![0, 0b011, 0b111]).unwrap());
        let (q, proj) = t0_quotient(&x);
        assert!(q.is_t0());
        for y in [
            arc(FinSpace::sierpinski()),
            arc(FinSpace::discrete(2)),
            arc(FinSpace::point()),
        ] {
            for f in all_continuous_maps(&x, &y) {
                let n = all_continuous_maps(&q, &y)
                    .iter()
                    .filter(|g| ContinuousMap::compose(g, &proj).as_ref() == Ok(&f))
                    .count();
                assert_eq!(n, 1);
            }
        }
    }

    #[test]
    fn filter_space_examples() {
        let s = arc(FinSpace::sierpinski());
        let fs = FilterSpace::new(&s);
        assert!(fs.space().is_homeomorphic(&s));
        assert!(fs.stars_form_the_topology());
        assert_eq!(fs.space().labels(), &["↑{0,1}", "↑{1}"]);

        assert_eq!(filter_space(&arc(FinSpace::indiscrete(2))).len(), 1);
        assert_eq!(filter_space(&arc(FinSpace::point())).len(), 1);
        assert_eq!(filter_space(&arc(FinSpace::empty())).len(), 0);
    }

    #[test]
    fn filter_map_examples() {
        let s = arc(FinSpace::sierpinski());
        let fs = FilterSpace::new(&s);
        let id = ContinuousMap::identity(&s);
        for p in 0..fs.space().len() {
            let f = fs.filter(p);
            assert_eq!(filter_map_image(&id, &f).unwrap(), f);
        }
        let pt = arc(FinSpace::point());
        let to_pt = ContinuousMap::new(s.clone(), pt.clone(), vec![0, 0]).unwrap();
        let unique = FilterSpace::new(&pt).filter(0);
        for p in 0..fs.space().len() {
            assert_eq!(filter_map_image(&to_pt, &fs.filter(p)).unwrap(), unique);
        }
        // inclusion of {1}
        let one = arc(FinSpace::from_opens(labels(&["1"]), vec![0, 1]).unwrap());
        let inc = ContinuousMap::new(one.clone(), s.clone(), vec![1]).unwrap();
        let f1 = FilterSpace::new(&one).filter(0);
        assert_eq!(filter_map_image(&inc, &f1).unwrap(), monad_eta(&s, 1));
        assert_eq!(filter_map_image(&inc, &fs.filter(0)), Err(TopologyError::ForeignFilter));
    }

    #[test]
    fn eta_examples() {
        let s = arc(FinSpace::sierpinski());
        assert_eq!(monad_eta(&s, 1).opens(), vec![0b10, 0b11]);
        assert_eq!(monad_eta(&s, 0).opens(), vec![0b11]);
        let i = arc(FinSpace::indiscrete(2));
        assert_eq!(monad_eta(&i, 0), monad_eta(&i, 1));
        let pt = arc(FinSpace::point());
        assert_eq!(monad_eta(&pt, 0), FilterSpace::new(&pt).filter(0));
    }

    #[test]
    fn mu_unit_laws_on_sierpinski() {
        let s = arc(FinSpace::sierpinski());
        let fs = FilterSpace::new(&s);
        let ffs = FilterSpace::new(fs.space());
        for p in 0..fs.space().len() {
            let f = fs.filter(p);
            let eta_f = monad_eta(fs.space(), p);
            assert_eq!(monad_mu(&s, &eta_f).unwrap(), f);
            let eta_s = eta_map(&fs);
            let lifted = filter_map(&eta_s);
            let _ = &ffs;
            let q = lifted.apply(p);
            // F(η)(F) as a filter over FX
            let outer = OpenPrimeFilter::new(fs.space().clone(), FilterSpace::new(fs.space()).filter_mask(q)).unwrap();
            assert_eq!(monad_mu(&s, &outer).unwrap(), f);
        }
        assert_eq!(monad_mu(&s, &fs.filter(0)), Err(TopologyError::ForeignFilter));
    }

    #[test]
    fn canonical_algebra_examples() {
        let s = arc(FinSpace::sierpinski());
        match canonical_f_algebra(&s) {
            CanonicalAlgebra::Structure(a) => {
                let fs = FilterSpace::new(&s);
                let eta = eta_map(&fs);
                for x in 0..2 {
                    assert_eq!(a.apply(eta.apply(x)), x);
                }
                assert!(check_f_algebra(&s, &a).unwrap().passes());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            canonical_f_algebra(&arc(FinSpace::indiscrete(2))),
            CanonicalAlgebra::NoAlgebra {
                x: "0".into(),
                y: "1".into()
            }
        );
        // 4 points: indiscrete pair next to a Sierpiński space
        let x = arc(FinSpace::from_opens(labels(&["a", "b", "c", "d"]), vec![0, 0b0011, 0b0111, 0b1111]).unwrap());
        assert!(matches!(canonical_f_algebra(&x), CanonicalAlgebra::NoAlgebra { .. }));
    }

    #[test]
    fn constant_structure_fails_unit_law() {
        let s = arc(FinSpace::sierpinski());
        let fs = filter_space(&s);
        let c = ContinuousMap::new(fs, s.clone(), vec![1, 1]).unwrap();
        let v = check_f_algebra(&s, &c).unwrap();
        assert!(!v.unit_law);
        assert!(is_proper_map(&ContinuousMap::identity(&s)).unwrap());
        let i = arc(FinSpace::indiscrete(2));
        assert!(matches!(
            is_proper_map(&ContinuousMap::identity(&i)),
            Err(TopologyError::NoCanonicalAlgebra { .. })
        ));
    }

    #[test]
    fn sobrification_examples() {
        let i = arc(FinSpace::indiscrete(2));
        assert_eq!(sobrification(&i).spectrum.space().len(), 1);
        assert!(!is_sober(&i));
        let s = arc(FinSpace::sierpinski());
        assert!(sobrification(&s).spectrum.space().is_homeomorphic(&s));
        assert!(is_sober(&s));
        let d = arc(FinSpace::discrete(3));
        assert!(sobrification(&d).spectrum.space().is_homeomorphic(&d));
    }

    #[test]
    fn pairing_examples() {
        for x in [FinSpace::sierpinski(), FinSpace::point(), FinSpace::discrete(2)] {
            let x = arc(x);
            let r = pairing_iso(&x);
            assert!(r.homeomorphism);
            assert!(open_filter_frame_matches_ideals(&x));
        }
        let chain3 = arc(FinSpace::from_opens(labels(&["a", "b", "c"]), vec![0, 0b100, 0b110, 0b111]).unwrap());
        let r = pairing_iso(&chain3);
        assert_eq!(r.map.source().len(), 3);
        assert!(r.homeomorphism);
    }

    #[test]
    fn hausdorff_examples() {
        let s = arc(FinSpace::sierpinski());
        assert_eq!(hausdorff_reflection(&s).0.len(), 1);
        let d = arc(FinSpace::discrete(2));
        assert!(hausdorff_reflection(&d).0.is_homeomorphic(&d));
        // Sierpiński plus an isolated point
        let x =
            arc(FinSpace::from_opens(labels(&["0", "1", "p"]), vec![0, 0b010, 0b011, 0b100, 0b110, 0b111]).unwrap());
        let (rx, _) = hausdorff_reflection(&x);
        assert!(rx.is_homeomorphic(&d));
        let targets: Vec<_> = (1..=3).map(|n| arc(FinSpace::discrete(n))).collect();
        assert!(hausdorff_is_universal(&x, &targets));
        let (rrx, _) = hausdorff_reflection(&rx);
        assert!(rrx.is_homeomorphic(&rx));
    }

    #[test]
    fn cech_stone_examples() {
        let s = arc(FinSpace::sierpinski());
        let r = cech_stone_square(&s);
        assert_eq!((r.pointfree_points, r.pointset_points, r.iso), (1, 1, true));
        let r = cech_stone_square(&arc(FinSpace::discrete(2)));
        assert_eq!((r.pointfree_points, r.pointset_points, r.iso), (2, 2, true));
        let r = cech_stone_square(&arc(FinSpace::indiscrete(2)));
        assert_eq!((r.pointfree_points, r.pointset_points, r.iso), (1, 1, true));
    }

    #[test]
    fn ultrafilter_examples() {
        for x in [FinSpace::discrete(2), FinSpace::indiscrete(2), FinSpace::sierpinski()] {
            let x = arc(x);
            let r = ultrafilter_comparison(&x);
            assert!(r.ux_is_x, "{x}");
            assert!(r.fx_matches, "{x}");
        }
        let i = arc(FinSpace::indiscrete(2));
        let ux = ultrafilter_space(&i);
        assert!(ux.space.is_homeomorphic(&i));
        assert_eq!(filter_space(&i).len(), 1);
    }

    #[test]
    fn closure_operator() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(0b10), 0b11);
        assert_eq!(s.closure(0b01), 0b01);
        assert_eq!(s.closure(0), 0);
    }
}
