//! Concrete instances for the engine: the categories of finite spaces and of
//! finite distributive lattices (and its opposite, locales), the open-set and
//! spectrum functors with `𝒪 ⊣ Σ`, the ideal monad and comonad, the open
//! prime filter monad, the Boolean-center comonad, the free-frame adjunction,
//! and the checks that tie them together.

use std::sync::Arc;

use crate::bits;
use crate::catengine::{
    self, AdjunctionInstance, AlgebraInstance, CatError, Category, ComonadInstance, FunctorInstance, LawReport,
    MonadInstance, NatTransInstance, Opposite, Outcome, Universe,
};
use crate::dlat::{self, DistLattice, IdealLattice, LatticeHom};
use crate::enumerate;
use crate::frame::{self, CoalgebraCandidate, Spectrum};
use crate::topspace::{self, CanonicalAlgebra, ContinuousMap, FilterSpace, FinSpace};

/// Finite spaces and continuous maps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Top;

/// Finite distributive lattices (= finite frames) and lattice homs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Lat;

/// Finite locales: `Latᵒᵖ`.
pub type Loc = Opposite<Lat>;

pub const LOC: Loc = Opposite(Lat);

pub fn describe_lattice(l: &DistLattice) -> String {
    let covers: Vec<String> = l
        .order()
        .covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", l.label(a), l.label(b)))
        .collect();
    format!("⟨{} | {}⟩", l.labels().join(","), covers.join(","))
}

pub fn describe_map(f: &ContinuousMap) -> String {
    let parts: Vec<String> = (0..f.source().len())
        .map(|x| format!("{}↦{}", f.source().label(x), f.target().label(f.apply(x))))
        .collect();
    format!("[{}]", parts.join(" "))
}

pub fn describe_hom(h: &LatticeHom) -> String {
    let parts: Vec<String> = (0..h.source().len())
        .map(|a| format!("{}↦{}", h.source().label(a), h.target().label(h.apply(a))))
        .collect();
    format!("[{}]", parts.join(" "))
}

impl Category for Top {
    type Obj = Arc<FinSpace>;
    type Mor = ContinuousMap;

    fn name(&self) -> String {
        "Top".into()
    }
    fn dom(&self, f: &ContinuousMap) -> Arc<FinSpace> {
        f.source().clone()
    }
    fn cod(&self, f: &ContinuousMap) -> Arc<FinSpace> {
        f.target().clone()
    }
    fn identity(&self, x: &Arc<FinSpace>) -> ContinuousMap {
        ContinuousMap::identity(x)
    }
    fn compose(&self, g: &ContinuousMap, f: &ContinuousMap) -> Result<ContinuousMap, CatError> {
        ContinuousMap::compose(g, f).map_err(|_| CatError::NotComposable {
            outer: describe_map(g),
            inner: describe_map(f),
        })
    }
    fn inverse(&self, f: &ContinuousMap) -> Option<ContinuousMap> {
        f.inverse()
    }
    fn describe_obj(&self, x: &Arc<FinSpace>) -> String {
        x.to_string()
    }
    fn describe_mor(&self, f: &ContinuousMap) -> String {
        describe_map(f)
    }
}

impl Category for Lat {
    type Obj = Arc<DistLattice>;
    type Mor = LatticeHom;

    fn name(&self) -> String {
        "DLat".into()
    }
    fn dom(&self, f: &LatticeHom) -> Arc<DistLattice> {
        f.source().clone()
    }
    fn cod(&self, f: &LatticeHom) -> Arc<DistLattice> {
        f.target().clone()
    }
    fn identity(&self, x: &Arc<DistLattice>) -> LatticeHom {
        LatticeHom::identity(x)
    }
    fn compose(&self, g: &LatticeHom, f: &LatticeHom) -> Result<LatticeHom, CatError> {
        LatticeHom::compose(g, f).map_err(|_| CatError::NotComposable {
            outer: describe_hom(g),
            inner: describe_hom(f),
        })
    }
    fn inverse(&self, f: &LatticeHom) -> Option<LatticeHom> {
        f.inverse()
    }
    fn describe_obj(&self, x: &Arc<DistLattice>) -> String {
        describe_lattice(x)
    }
    fn describe_mor(&self, f: &LatticeHom) -> String {
        describe_hom(f)
    }
}

// ---------------------------------------------------------------------------
// Functors and the adjunction 𝒪 ⊣ Σ

pub fn open_functor() -> FunctorInstance<Top, Loc> {
    FunctorInstance::new(
        "𝒪",
        Top,
        LOC,
        |x: &Arc<FinSpace>| Ok(topspace::open_set_frame(x)),
        |f: &ContinuousMap| Ok(topspace::preimage_hom(f)),
    )
}

/// `Σh : ΣA -> ΣB, p ↦ p∘h` for a frame hom `h : B -> A`.
pub fn spectrum_map(h: &LatticeHom) -> ContinuousMap {
    let from = Spectrum::new(h.target());
    let to = Spectrum::new(h.source());
    let assignment = (0..from.space().len())
        .map(|p| {
            to.point_of_filter(h.preimage(from.point_filter(p)))
                .expect("preimage of a prime filter is prime")
        })
        .collect();
    ContinuousMap::new(from.space().clone(), to.space().clone(), assignment).expect("Σh is continuous")
}

pub fn spectrum_functor() -> FunctorInstance<Loc, Top> {
    FunctorInstance::new(
        "Σ",
        LOC,
        Top,
        |l: &Arc<DistLattice>| Ok(frame::spectrum(l)),
        |h: &LatticeHom| Ok(spectrum_map(h)),
    )
}

/// `𝒪 ⊣ Σ` with unit the sobrification map and counit `a ↦ Σ_a`.
pub fn open_spectrum_adjunction() -> AdjunctionInstance<Top, Loc> {
    let left = open_functor();
    let right = spectrum_functor();
    AdjunctionInstance {
        unit: NatTransInstance::new("η", FunctorInstance::identity(Top), left.then(&right), |x| {
            Ok(topspace::sobrification(x).unit)
        }),
        counit: NatTransInstance::new("ε", right.then(&left), FunctorInstance::identity(LOC), |l| {
            Ok(frame::spatiality_iso(l).hom)
        }),
        left,
        right,
    }
}

// ---------------------------------------------------------------------------
// Ideals

pub fn ideal_functor() -> FunctorInstance<Lat, Lat> {
    FunctorInstance::new(
        "𝔍",
        Lat,
        Lat,
        |l: &Arc<DistLattice>| Ok(IdealLattice::new(l).lattice().clone()),
        |f: &LatticeHom| Ok(dlat::ideal_map(f)),
    )
}

/// `𝕀 = (𝔍, ⋃, ↓)` on lattices.
pub fn ideal_monad() -> MonadInstance<Lat> {
    let endo = ideal_functor();
    MonadInstance {
        name: "𝕀".into(),
        unit: NatTransInstance::new("↓", FunctorInstance::identity(Lat), endo.clone(), |l| {
            Ok(dlat::down_map(&IdealLattice::new(l)))
        }),
        mult: NatTransInstance::new("⋃", endo.then(&endo), endo.clone(), |l| {
            let il = IdealLattice::new(l);
            let iil = IdealLattice::new(il.lattice());
            Ok(dlat::union_map(&il, &iil))
        }),
        endo,
    }
}

/// `𝕂 = (𝔍, c, ⋁)` on frames.
pub fn ideal_comonad() -> ComonadInstance<Lat> {
    let endo = ideal_functor();
    ComonadInstance {
        name: "𝕂".into(),
        counit: NatTransInstance::new("⋁", endo.clone(), FunctorInstance::identity(Lat), |l| {
            Ok(frame::counit_map(&IdealLattice::new(l)))
        }),
        comult: NatTransInstance::new("c", endo.clone(), endo.then(&endo), |l| {
            let il = IdealLattice::new(l);
            let iil = IdealLattice::new(il.lattice());
            Ok(frame::comultiplication_map(&il, &iil))
        }),
        endo,
    }
}

/// `𝕂` read as a monad on locales.
pub fn ideal_monad_on_loc() -> MonadInstance<Loc> {
    ideal_comonad().as_monad_on_opposite()
}

/// Free frame `𝔍` left adjoint to the forgetful functor, with unit `↓` and
/// counit `⋁`.
pub fn free_frame_adjunction() -> AdjunctionInstance<Lat, Lat> {
    let left = ideal_functor();
    let right = FunctorInstance::new(
        "U",
        Lat,
        Lat,
        |l: &Arc<DistLattice>| Ok(l.clone()),
        |f: &LatticeHom| Ok(f.clone()),
    );
    AdjunctionInstance {
        unit: NatTransInstance::new("↓", FunctorInstance::identity(Lat), left.then(&right), |l| {
            Ok(dlat::down_map(&IdealLattice::new(l)))
        }),
        counit: NatTransInstance::new("⋁", right.then(&left), FunctorInstance::identity(Lat), |l| {
            Ok(frame::counit_map(&IdealLattice::new(l)))
        }),
        left,
        right,
    }
}

// ---------------------------------------------------------------------------
// Boolean center

/// Restriction of a hom to the Boolean centers.
pub fn creg_map(f: &LatticeHom) -> LatticeHom {
    let src = frame::creg_coreflection(f.source());
    let tgt = frame::creg_coreflection(f.target());
    let assignment = (0..src.lattice.len())
        .map(|c| {
            let image = f.apply(src.inclusion.apply(c));
            (0..tgt.lattice.len())
                .find(|&d| tgt.inclusion.apply(d) == image)
                .expect("homs preserve complements")
        })
        .collect();
    LatticeHom::new(src.lattice, tgt.lattice, assignment).expect("restriction is a hom")
}

pub fn creg_functor() -> FunctorInstance<Lat, Lat> {
    FunctorInstance::new(
        "CReg",
        Lat,
        Lat,
        |l: &Arc<DistLattice>| Ok(frame::creg_coreflection(l).lattice),
        |f: &LatticeHom| Ok(creg_map(f)),
    )
}

fn relabel_hom(source: &Arc<DistLattice>, target: &Arc<DistLattice>) -> Result<LatticeHom, CatError> {
    let assignment: Option<Vec<usize>> = source.labels().iter().map(|l| target.index_of(l)).collect();
    let assignment = assignment.ok_or_else(|| CatError::Evaluation("label mismatch".into()))?;
    LatticeHom::new(source.clone(), target.clone(), assignment).map_err(|e| CatError::Evaluation(e.to_string()))
}

/// The coreflection onto the Boolean center: counit the inclusion,
/// comultiplication the identity `CReg L = CReg CReg L`.
pub fn creg_comonad() -> ComonadInstance<Lat> {
    let endo = creg_functor();
    ComonadInstance {
        name: "CReg".into(),
        counit: NatTransInstance::new("ι", endo.clone(), FunctorInstance::identity(Lat), |l| {
            Ok(frame::creg_coreflection(l).inclusion)
        }),
        comult: NatTransInstance::new("δ", endo.clone(), endo.then(&endo), |l| {
            let c = frame::creg_coreflection(l).lattice;
            let cc = frame::creg_coreflection(&c).lattice;
            relabel_hom(&c, &cc)
        }),
        endo,
    }
}

/// `CReg∘𝔍` with counit `⋁∘ι` and comultiplication
/// `δ(I) = {J ∈ CReg𝔍L | ⋁J ∈ I}`.
pub fn creg_ideal_comonad() -> ComonadInstance<Lat> {
    let endo = ideal_functor().then(&creg_functor());
    ComonadInstance {
        name: "CReg𝔍".into(),
        counit: NatTransInstance::new("⋁ι", endo.clone(), FunctorInstance::identity(Lat), |l| {
            let il = IdealLattice::new(l);
            let c = frame::creg_coreflection(il.lattice());
            Lat.compose(&frame::counit_map(&il), &c.inclusion)
        }),
        comult: NatTransInstance::new("δ", endo.clone(), endo.then(&endo), |l| {
            let il = IdealLattice::new(l);
            let c1 = frame::creg_coreflection(il.lattice());
            let il2 = IdealLattice::new(&c1.lattice);
            let c2 = frame::creg_coreflection(il2.lattice());
            let ideal_of = |k: usize| il.ideal(c1.inclusion.apply(k));
            let assignment: Option<Vec<usize>> = (0..c1.lattice.len())
                .map(|k| {
                    let i = ideal_of(k);
                    let members = bits::from_indices(
                        (0..c1.lattice.len()).filter(|&j| bits::contains(i, l.join_all(ideal_of(j)))),
                    );
                    let at = il2.index_of(members)?;
                    (0..c2.lattice.len()).find(|&d| c2.inclusion.apply(d) == at)
                })
                .collect();
            let assignment =
                assignment.ok_or_else(|| CatError::Evaluation("δ(I) is not a complemented ideal".into()))?;
            LatticeHom::new(c1.lattice.clone(), c2.lattice.clone(), assignment)
                .map_err(|e| CatError::Evaluation(e.to_string()))
        }),
        endo,
    }
}

// ---------------------------------------------------------------------------
// The open prime filter monad and the pairing

pub fn filter_functor() -> FunctorInstance<Top, Top> {
    FunctorInstance::new(
        "F",
        Top,
        Top,
        |x: &Arc<FinSpace>| Ok(topspace::filter_space(x)),
        |f: &ContinuousMap| Ok(topspace::filter_map(f)),
    )
}

/// `𝔽 = (F, μ, η)`
pub fn filter_monad() -> MonadInstance<Top> {
    let endo = filter_functor();
    MonadInstance {
        name: "𝔽".into(),
        unit: NatTransInstance::new("η", FunctorInstance::identity(Top), endo.clone(), |x| {
            Ok(topspace::eta_map(&FilterSpace::new(x)))
        }),
        mult: NatTransInstance::new("μ", endo.then(&endo), endo.clone(), |x| {
            let fx = FilterSpace::new(x);
            let ffx = FilterSpace::new(fx.space());
            Ok(topspace::mu_map(&fx, &ffx))
        }),
        endo,
    }
}

/// `Σ𝔍𝒪` with the lifted unit and multiplication.
pub fn lifted_ideal_monad() -> MonadInstance<Top> {
    catengine::lift_monad(&open_spectrum_adjunction(), &ideal_monad_on_loc()).expect("𝕂 lives on locales")
}

/// `φ : F ⇒ Σ𝔍𝒪`, `F ↦ (I ↦ [I ∩ F ≠ ∅])`.
pub fn pairing_transformation() -> NatTransInstance<Top, Top> {
    NatTransInstance::new("φ", filter_functor(), lifted_ideal_monad().endo, |x| {
        Ok(topspace::pairing_iso(x).map)
    })
}

/// The pairing is an isomorphism, natural, a monad morphism `𝔽 -> Σ𝔍𝒪`, and
/// the structure transported along it is exactly the lifted one.
pub fn check_pairing(u: &Universe<Top>) -> LawReport {
    let f = filter_monad();
    let m = lifted_ideal_monad();
    let phi = pairing_transformation();
    let mut rep = catengine::check_monad_morphism(&phi, &f, &m, u);
    for (name, x) in &u.objects {
        let outcome = match phi.at(x) {
            Ok(p) if p.is_homeomorphism() => Outcome::Pass,
            Ok(p) => Outcome::Fail(format!("φ = {} is not a homeomorphism", describe_map(&p))),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        rep.push(name, "pairing-iso", outcome);

        let transported = (|| {
            let px = phi.at(x)?;
            let mx = m.endo.obj(x)?;
            // (φ∗φ)_X = φ_{MX} ∘ F(φ_X) : FFX -> MMX
            let phiphi = Top.compose(&phi.at(&mx)?, &f.endo.mor(&px)?)?;
            let inv = phiphi
                .inverse()
                .ok_or_else(|| CatError::Evaluation("φ∗φ is not invertible".into()))?;
            let lhs = Top.compose_all(&[&px, &f.mult.at(x)?, &inv])?;
            let rhs = m.mult.at(x)?;
            Ok::<_, CatError>(if lhs == rhs {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "φμ(φ∗φ)⁻¹ = {} ≠ n = {}",
                    describe_map(&lhs),
                    describe_map(&rhs)
                ))
            })
        })();
        rep.push(
            name,
            "transported-mult",
            transported.unwrap_or_else(|e| Outcome::Fail(e.to_string())),
        );
    }
    rep
}

// ---------------------------------------------------------------------------
// Algebra and coalgebra censuses

/// Every continuous `α : FX -> X` satisfying both algebra laws.
pub fn f_algebra_census(x: &Arc<FinSpace>) -> Vec<ContinuousMap> {
    let fx = FilterSpace::new(x);
    let ffx = FilterSpace::new(fx.space());
    topspace::all_continuous_maps(fx.space(), x)
        .into_iter()
        .filter(|a| topspace::check_f_algebra_in(&fx, &ffx, a).passes())
        .collect()
}

/// Every lattice hom `L -> 𝔍L` satisfying both coalgebra laws.
pub fn coalgebra_census(l: &Arc<DistLattice>) -> Vec<LatticeHom> {
    let il = IdealLattice::new(l);
    dlat::homs(l, il.lattice())
        .into_iter()
        .filter(|h| {
            let cand = CoalgebraCandidate::new(l.clone(), h.assignment().iter().map(|&i| il.ideal(i)).collect());
            frame::check_coalgebra_in(&il, &cand).passes()
        })
        .collect()
}

/// Every lattice hom `𝔍L -> L` satisfying both `𝕀`-algebra laws.
pub fn ideal_algebra_census(l: &Arc<DistLattice>) -> Vec<LatticeHom> {
    let t = ideal_monad();
    let il = IdealLattice::new(l);
    dlat::homs(il.lattice(), l)
        .into_iter()
        .filter(|h| {
            catengine::check_algebra(
                &t,
                &AlgebraInstance {
                    carrier: l.clone(),
                    structure: h.clone(),
                },
            )
            .passed()
        })
        .collect()
}

/// `(L, γ)` as an algebra of `𝕂` on locales: `γ : L -> 𝔍L` is a locale map
/// `𝔍L -> L`.
pub fn gamma_algebra(l: &Arc<DistLattice>) -> AlgebraInstance<Loc> {
    AlgebraInstance {
        carrier: l.clone(),
        structure: dlat::down_map(&IdealLattice::new(l)),
    }
}

/// `(𝔍L, c)`, the free algebra on `L`.
pub fn free_loc_algebra(l: &Arc<DistLattice>) -> AlgebraInstance<Loc> {
    let il = IdealLattice::new(l);
    let iil = IdealLattice::new(il.lattice());
    AlgebraInstance {
        carrier: il.lattice().clone(),
        structure: frame::comultiplication_map(&il, &iil),
    }
}

/// The structure `η⁻¹ ∘ φ⁻¹ : Σ𝔍𝒪Y -> Y` of a `T₀` space.
pub fn lifted_canonical_algebra(y: &Arc<FinSpace>) -> Option<AlgebraInstance<Top>> {
    let alpha = match topspace::canonical_f_algebra(y) {
        CanonicalAlgebra::Structure(a) => a,
        CanonicalAlgebra::NoAlgebra { .. } => return None,
    };
    let phi_inv = topspace::pairing_iso(y).map.inverse()?;
    Some(AlgebraInstance {
        carrier: y.clone(),
        structure: ContinuousMap::compose(&alpha, &phi_inv).ok()?,
    })
}

// ---------------------------------------------------------------------------
// Universes

/// Every labeled topology on at most `max_points` points, named `X<n>.<k>`.
pub fn space_universe(max_points: usize) -> Universe<Top> {
    let mut u = Universe::new(Top);
    for n in 0..=max_points {
        for (k, x) in enumerate::labeled_topologies(n).into_iter().enumerate() {
            u.add_object(format!("X{n}.{k}"), Arc::new(x));
        }
    }
    u
}

/// A seeded sample of `count` labeled topologies on `n` points, named by
/// their enumeration position as in [`space_universe`].
pub fn sampled_space_universe(n: usize, count: usize, seed: u64) -> Universe<Top> {
    let mut u = Universe::new(Top);
    for (k, x) in enumerate::sample_indexed_topologies(n, count, seed) {
        u.add_object(format!("X{n}.{k}"), Arc::new(x));
    }
    u
}

/// Adds every continuous map between universe objects with at most
/// `max_points` points.
pub fn add_all_maps(u: &mut Universe<Top>, max_points: usize) {
    let small: Vec<(String, Arc<FinSpace>)> = u
        .objects
        .iter()
        .filter(|(_, x)| x.len() <= max_points)
        .cloned()
        .collect();
    for (a, x) in &small {
        for (b, y) in &small {
            for (k, f) in topspace::all_continuous_maps(x, y).into_iter().enumerate() {
                u.add_morphism(format!("{a}→{b}#{k}"), f);
            }
        }
    }
}

/// Downset lattices of posets with at most `max_elements` elements and size
/// at most `max_size`, named `L<k>`.
pub fn lattice_universe(max_elements: usize, max_size: usize) -> Universe<Lat> {
    let mut u = Universe::new(Lat);
    for (k, l) in enumerate::lattices_up_to(max_elements, max_size)
        .into_iter()
        .enumerate()
    {
        u.add_object(format!("L{k}"), Arc::new(l));
    }
    u
}

/// Adds every hom between universe lattices of size at most `max_size`.
pub fn add_all_homs(u: &mut Universe<Lat>, max_size: usize) {
    let small: Vec<(String, Arc<DistLattice>)> =
        u.objects.iter().filter(|(_, l)| l.len() <= max_size).cloned().collect();
    for (a, x) in &small {
        for (b, y) in &small {
            for (k, h) in dlat::homs(x, y).into_iter().enumerate() {
                u.add_morphism(format!("{a}→{b}#{k}"), h);
            }
        }
    }
}

/// The same objects and morphisms read in `Loc`.
pub fn as_loc(u: &Universe<Lat>) -> Universe<Loc> {
    Universe {
        cat: LOC,
        objects: u.objects.clone(),
        morphisms: u.morphisms.clone(),
    }
}

// ---------------------------------------------------------------------------
// Suites

/// The lifting suite on the Stone instance: both lifting diagrams for
/// `λ = Σ𝔍ε`, monad laws of the lifted monad, `K` against its counit form,
/// `K`/`K*` round trips, `ReL` as a monad morphism, lifting of monad
/// morphisms, `𝔏(CReg∘𝔍) ≅ 𝔏(CReg)𝔏(𝔍)`, and idempotence of `𝔏(CReg)`.
pub fn lifting_report(spaces: &Universe<Top>, lattices: &Universe<Lat>) -> LawReport {
    let adj = open_spectrum_adjunction();
    let t = ideal_monad_on_loc();
    let loc = as_loc(lattices);
    let mut rep = LawReport::new();

    match catengine::lift_law(&adj, &t, &loc) {
        Ok(law) => rep.extend(law.report),
        Err(e) => rep.push("𝒪⊣Σ", "lift-law", Outcome::Fail(e.to_string())),
    }
    let m = lifted_ideal_monad();
    rep.extend(catengine::check_monad_laws(&m, spaces));

    for (name, l) in &loc.objects {
        for (tag, alg) in [("γ", gamma_algebra(l)), ("free", free_loc_algebra(l))] {
            let k = catengine::comparison_algebra(&adj, &t, &alg);
            let direct = catengine::comparison_via_counit(&adj, &t, &alg);
            let outcome = match (&k, &direct) {
                (Ok(a), Ok(b)) if a == b => {
                    let laws = catengine::check_algebra(&m, a);
                    match laws.first_failure() {
                        None => Outcome::Pass,
                        Some(l) => Outcome::Fail(format!("K{tag} fails {}", l.law)),
                    }
                }
                (Ok(_), Ok(_)) => Outcome::Fail(format!("Rα∘λ differs from R(α∘Tε) for {tag}")),
                (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
            };
            rep.push(name, format!("comparison-{tag}"), outcome);
            rep.extend(scope_laws(catengine::check_round_trip_c(&adj, &t, &alg), name, tag));
        }
    }
    match catengine::check_counit_iso_on_t(&adj, &t, &loc) {
        Ok(()) => rep.push("𝒪⊣Σ", "counit-iso-on-T", Outcome::Pass),
        Err(e) => rep.push("𝒪⊣Σ", "counit-iso-on-T", Outcome::Fail(e.to_string())),
    }
    for (name, y) in &spaces.objects {
        if let Some(beta) = lifted_canonical_algebra(y) {
            rep.extend(scope_laws(
                catengine::check_round_trip_b(&adj, &t, &beta),
                name,
                "canonical",
            ));
        }
    }

    // ReL : ℍ -> Σ𝔍𝒪, and 𝔏 on monad morphisms
    let h = catengine::lift_monad(&adj, &MonadInstance::identity(LOC)).expect("identity monad lives on locales");
    let rel = catengine::lift_of_morphism(&adj, &t.unit);
    rep.extend(rename(catengine::check_monad_morphism(&rel, &h, &m, spaces), "ReL"));
    let id_t = NatTransInstance::identity(&t.endo);
    let lifted_id = catengine::lift_of_morphism(&adj, &id_t);
    for (name, x) in &spaces.objects {
        let outcome = match (lifted_id.at(x), m.endo.obj(x)) {
            (Ok(a), Ok(mx)) if a == ContinuousMap::identity(&mx) => Outcome::Pass,
            (Ok(a), Ok(_)) => Outcome::Fail(format!("𝔏(1) = {}", describe_map(&a))),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
        };
        rep.push(name, "lift-of-identity", outcome);
    }
    let e_then_id = t.unit.then(&id_t);
    let lifted_composite = catengine::lift_of_morphism(&adj, &e_then_id);
    let composite_of_lifts = rel.then(&lifted_id);
    for (name, x) in &spaces.objects {
        let outcome = match (lifted_composite.at(x), composite_of_lifts.at(x)) {
            (Ok(a), Ok(b)) if a == b => Outcome::Pass,
            (Ok(a), Ok(b)) => Outcome::Fail(format!("{} ≠ {}", describe_map(&a), describe_map(&b))),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
        };
        rep.push(name, "lift-of-composite-morphism", outcome);
    }

    rep.extend(cech_stone_lifting(spaces, lattices));
    rep
}

/// `𝔏(CReg∘𝔍) ≅ 𝔏(CReg)𝔏(𝔍)` along `𝒪 ⊣ Σ`, and `𝔏(CReg)` idempotent.
pub fn cech_stone_lifting(spaces: &Universe<Top>, lattices: &Universe<Lat>) -> LawReport {
    let adj = open_spectrum_adjunction();
    let loc = as_loc(lattices);
    let n = creg_comonad().as_monad_on_opposite();
    let t = ideal_monad_on_loc();
    let nt = creg_ideal_comonad().as_monad_on_opposite();
    let mut rep = LawReport::new();
    match catengine::lift_composite(&adj, &n, &t, &nt, spaces, &loc) {
        Ok(r) => rep.extend(r),
        Err(e) => rep.push("𝒪⊣Σ", "lift-composite", Outcome::Fail(e.to_string())),
    }
    match catengine::lift_monad(&adj, &n) {
        Ok(ln) => rep.extend(catengine::check_idempotent(&ln, spaces)),
        Err(e) => rep.push("𝒪⊣Σ", "idempotent", Outcome::Fail(e.to_string())),
    }
    rep
}

fn scope_laws(mut r: LawReport, subject: &str, tag: &str) -> LawReport {
    for l in &mut r.lines {
        l.subject = subject.to_string();
        l.law = format!("{}-{tag}", l.law);
    }
    r
}

fn rename(mut r: LawReport, prefix: &str) -> LawReport {
    for l in &mut r.lines {
        l.law = format!("{prefix}:{}", l.law);
    }
    r
}

/// `Σ∘CReg∘𝒪∘F X ≅ R∘F X` for every universe space.
pub fn cech_stone_report(spaces: &Universe<Top>) -> LawReport {
    let mut rep = LawReport::new();
    for (name, x) in &spaces.objects {
        let r = topspace::cech_stone_square(x);
        let outcome = if r.iso {
            Outcome::Pass
        } else {
            Outcome::Fail(format!(
                "pointfree side has {} points, point-set side {}",
                r.pointfree_points, r.pointset_points
            ))
        };
        rep.push(name, "cech-stone-square", outcome);
    }
    rep
}

/// `X ≅ UX` through principal ultrafilters, and `FX ≅ sob(t0(UX))`.
pub fn ultrafilter_report(spaces: &Universe<Top>) -> LawReport {
    let mut rep = LawReport::new();
    for (name, x) in &spaces.objects {
        let r = topspace::ultrafilter_comparison(x);
        let ok = |b: bool, what: &str| {
            if b {
                Outcome::Pass
            } else {
                Outcome::Fail(what.to_string())
            }
        };
        rep.push(name, "ultrafilters-principal", ok(r.ux_is_x, "X ≇ UX"));
        rep.push(name, "filter-vs-ultrafilter", ok(r.fx_matches, "FX ≇ sob(t0(UX))"));
    }
    rep
}

// ---------------------------------------------------------------------------
// Fault fixtures

/// Deliberately broken instances; every checker has at least one designed
/// failure here.
pub mod faults {
    use super::*;

    /// `μ` followed by a swap of two points of `FX` whenever `FX` has a
    /// homeomorphic transposition.
    pub fn corrupted_filter_monad() -> MonadInstance<Top> {
        let mut t = filter_monad();
        let honest = t.mult.clone();
        t.mult = NatTransInstance::new("μ̃", honest.source.clone(), honest.target.clone(), move |x| {
            let mu = honest.at(x)?;
            let fx = mu.target().clone();
            for i in 0..fx.len() {
                for j in i + 1..fx.len() {
                    let mut swap: Vec<usize> = (0..fx.len()).collect();
                    swap.swap(i, j);
                    if let Ok(s) = ContinuousMap::new(fx.clone(), fx.clone(), swap) {
                        return Top.compose(&s, &mu);
                    }
                }
            }
            Ok(mu)
        });
        t
    }

    /// `𝒪 ⊣ Σ` with every counit component `ε_L` precomposed by a
    /// non-identity endomorphism of `L` (an automorphism when `invertible`).
    pub fn broken_counit_adjunction(invertible: bool) -> AdjunctionInstance<Top, Loc> {
        let mut a = open_spectrum_adjunction();
        let honest = a.counit.clone();
        a.counit = NatTransInstance::new("ε̃", honest.source.clone(), honest.target.clone(), move |l| {
            let eps = honest.at(l)?;
            let twist = dlat::homs(l, l)
                .into_iter()
                .find(|h| *h != LatticeHom::identity(l) && h.is_bijective() == invertible);
            match twist {
                Some(h) => Lat.compose(&eps, &h),
                None => Ok(eps),
            }
        });
        a
    }

    /// `𝒪 ⊣ Σ` with `ε` twisted by an automorphism at the single object
    /// `at` and honest elsewhere, so the lifted multiplication sees
    /// inconsistent counits.
    pub fn counit_twisted_at(at: Arc<DistLattice>) -> AdjunctionInstance<Top, Loc> {
        let mut a = open_spectrum_adjunction();
        let honest = a.counit.clone();
        a.counit = NatTransInstance::new("ε̃", honest.source.clone(), honest.target.clone(), move |l| {
            let eps = honest.at(l)?;
            if *l != at {
                return Ok(eps);
            }
            match dlat::homs(l, l)
                .into_iter()
                .find(|h| *h != LatticeHom::identity(l) && h.is_bijective())
            {
                Some(h) => Lat.compose(&eps, &h),
                None => Ok(eps),
            }
        });
        a
    }

    /// `(L, ↓∘h)` for a non-identity endomorphism `h`; fails the unit law.
    pub fn broken_gamma_algebra(l: &Arc<DistLattice>) -> Option<AlgebraInstance<Loc>> {
        let h = dlat::homs(l, l).into_iter().find(|h| *h != LatticeHom::identity(l))?;
        let down = dlat::down_map(&IdealLattice::new(l));
        Some(AlgebraInstance {
            carrier: l.clone(),
            structure: LatticeHom::compose(&down, &h).ok()?,
        })
    }

    pub fn sierpinski() -> Arc<FinSpace> {
        Arc::new(FinSpace::sierpinski())
    }

    pub fn indiscrete_pair() -> Arc<FinSpace> {
        Arc::new(FinSpace::indiscrete(2))
    }

    pub fn discrete_to_indiscrete() -> ContinuousMap {
        let d = Arc::new(FinSpace::discrete(2));
        ContinuousMap::new(d, indiscrete_pair(), vec![0, 1]).expect("every map into an indiscrete space is continuous")
    }

    /// `M₃`: bottom, three atoms, top.
    pub fn m3() -> Result<DistLattice, dlat::LatticeError> {
        DistLattice::from_pairs(
            &["0", "1", "2", "3", "4"],
            &[("0", "1"), ("0", "2"), ("0", "3"), ("1", "4"), ("2", "4"), ("3", "4")],
        )
    }

    /// Runs every fixture. Each line is expected to FAIL with its witness.
    pub fn fault_report() -> LawReport {
        let mut rep = LawReport::new();
        let d2 = Arc::new(FinSpace::discrete(2));
        let mut u = Universe::new(Top);
        u.add_object("X2.discrete", d2);
        let laws = catengine::check_monad_laws(&corrupted_filter_monad(), &u);
        push_first(&mut rep, "fault:corrupted-μ", "monad-laws", &laws);

        let boolean2 = Arc::new(DistLattice::boolean(2));
        let mut lu = Universe::new(LOC);
        lu.add_object("L.2²", boolean2);
        let mut su = Universe::new(Top);
        su.add_object("X.sierpinski", sierpinski());
        let twisted = broken_counit_adjunction(true);
        push_first(
            &mut rep,
            "fault:twisted-ε",
            "adjunction",
            &catengine::check_adjunction(&twisted, &su, &lu),
        );
        let ideals_of_square = ideal_functor()
            .obj(&Arc::new(DistLattice::boolean(2)))
            .expect("𝔍 is total");
        match catengine::lift_law(&counit_twisted_at(ideals_of_square), &ideal_monad_on_loc(), &lu) {
            Ok(law) => push_first(&mut rep, "fault:twisted-ε@𝔍L", "lift-law", &law.report),
            Err(e) => rep.push("fault:twisted-ε@𝔍L", "lift-law", Outcome::Fail(e.to_string())),
        }

        let chain3 = Arc::new(DistLattice::chain(3));
        let collapsing = broken_counit_adjunction(false);
        let t = ideal_monad_on_loc();
        let beta = lifted_canonical_algebra(&sierpinski()).expect("Sierpiński is T0");
        rep.push(
            "fault:collapsing-ε",
            "inverse-comparison",
            error_outcome(catengine::inverse_comparison(&collapsing, &t, &beta).map(|_| ())),
        );
        let mut cu = Universe::new(LOC);
        cu.add_object("L.3-chain", chain3.clone());
        let n = creg_comonad().as_monad_on_opposite();
        let nt = creg_ideal_comonad().as_monad_on_opposite();
        rep.push(
            "fault:collapsing-ε",
            "lift-composite",
            error_outcome(catengine::lift_composite(&collapsing, &n, &t, &nt, &su, &cu).map(|_| ())),
        );

        let adj = open_spectrum_adjunction();
        let bad = broken_gamma_algebra(&chain3).expect("3-chain has a non-identity endomorphism");
        rep.push(
            "fault:broken-α",
            "comparison",
            error_outcome(catengine::comparison_algebra(&adj, &t, &bad).map(|_| ())),
        );

        let outcome = match topspace::canonical_f_algebra(&indiscrete_pair()) {
            CanonicalAlgebra::NoAlgebra { x, y } => Outcome::Fail(format!("no 𝔽-algebra: η({x}) = η({y})")),
            CanonicalAlgebra::Structure(_) => Outcome::Pass,
        };
        rep.push("fault:indiscrete-pair", "f-algebra", outcome);

        rep.push("fault:M3", "distributive", error_outcome(m3().map(|_| ())));

        let r = catengine::closure_initiality(&discrete_to_indiscrete());
        let outcome = match r.witness {
            Some((a, native, lifted)) => Outcome::Fail(format!("c({a}) = {native} but f*c f₊({a}) = {lifted}")),
            None => Outcome::Pass,
        };
        rep.push("fault:discrete→indiscrete", "c-initial", outcome);
        rep
    }

    fn push_first(rep: &mut LawReport, subject: &str, law: &str, r: &LawReport) {
        let outcome = match r.first_failure() {
            Some(l) => Outcome::Fail(format!("{} at {}: {}", l.law, l.subject, witness_of(&l.outcome))),
            None => Outcome::Pass,
        };
        rep.push(subject, law, outcome);
    }

    fn witness_of(o: &Outcome) -> &str {
        match o {
            Outcome::Fail(w) => w,
            Outcome::Pass => "",
        }
    }

    fn error_outcome<E: std::fmt::Display>(r: Result<(), E>) -> Outcome {
        match r {
            Ok(()) => Outcome::Pass,
            Err(e) => Outcome::Fail(e.to_string()),
        }
    }
}
