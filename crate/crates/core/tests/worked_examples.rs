//! Small worked examples, each checked against a brute-force computation
//! written here from the definitions.

use std::sync::Arc;

use stonekit::bits::{self, Mask};
use stonekit::catengine::{self, MonadInstance, NatTransInstance};
use stonekit::dlat::{self, DistLattice, Ideal, IdealLattice, LatticeHom};
use stonekit::enumerate;
use stonekit::frame;
use stonekit::order::{downset_lattice, join_irreducibles, FinPoset};
use stonekit::stone;
use stonekit::topspace::{self, CanonicalAlgebra, ContinuousMap, FilterSpace, FinSpace};

fn lattice(elements: &[&str], leq: &[(&str, &str)]) -> Arc<DistLattice> {
    Arc::new(DistLattice::from_pairs(elements, leq).unwrap())
}

/// `0 < a, b < 1`
fn diamond() -> Arc<DistLattice> {
    lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
}

/// `0 < m < 1`
fn chain3() -> Arc<DistLattice> {
    lattice(&["0", "m", "1"], &[("0", "m"), ("m", "1")])
}

fn two() -> Arc<DistLattice> {
    lattice(&["0", "1"], &[("0", "1")])
}

fn el(l: &DistLattice, s: &str) -> usize {
    l.index_of(s).unwrap()
}

fn set(l: &DistLattice, names: &[&str]) -> Mask {
    bits::from_indices(names.iter().map(|s| el(l, s)))
}

fn sierpinski() -> Arc<FinSpace> {
    Arc::new(FinSpace::sierpinski())
}

// --- oracles -------------------------------------------------------------

fn subsets(n: usize) -> impl Iterator<Item = Mask> {
    0..=bits::full(n)
}

fn oracle_is_ideal(l: &DistLattice, s: Mask) -> bool {
    s != 0
        && bits::ones(s).all(|a| (0..l.len()).all(|b| !l.leq(b, a) || bits::contains(s, b)))
        && bits::ones(s).all(|a| bits::ones(s).all(|b| bits::contains(s, l.join(a, b))))
}

fn oracle_prime_filters(l: &DistLattice) -> Vec<Mask> {
    subsets(l.len())
        .filter(|&s| {
            let proper = s != 0 && !bits::contains(s, l.bot());
            let up = bits::ones(s).all(|a| (0..l.len()).all(|b| !l.leq(a, b) || bits::contains(s, b)));
            let meets = bits::ones(s).all(|a| bits::ones(s).all(|b| bits::contains(s, l.meet(a, b))));
            let prime = (0..l.len()).all(|a| {
                (0..l.len()).all(|b| !bits::contains(s, l.join(a, b)) || bits::contains(s, a) || bits::contains(s, b))
            });
            proper && up && meets && prime
        })
        .collect()
}

/// Open prime filters as sets of opens, straight from the definition.
fn oracle_open_prime_filters(x: &FinSpace) -> Vec<Vec<Mask>> {
    let opens = x.opens();
    let mut out = Vec::new();
    for pick in 0u64..1 << opens.len() {
        let f: Vec<Mask> = bits::ones(pick).map(|i| opens[i]).collect();
        let has = |u: Mask| f.contains(&u);
        let ok = has(x.all())
            && !has(0)
            && f.iter()
                .all(|&u| opens.iter().all(|&v| !bits::is_subset(u, v) || has(v)))
            && f.iter().all(|&u| f.iter().all(|&v| has(u & v)))
            && opens
                .iter()
                .all(|&u| opens.iter().all(|&v| !has(u | v) || has(u) || has(v)));
        if ok {
            out.push(f);
        }
    }
    out
}

/// Number of classes of points with equal neighbourhood systems.
fn oracle_t0_classes(x: &FinSpace) -> usize {
    let mut systems: Vec<Vec<bool>> = (0..x.len())
        .map(|p| x.opens().iter().map(|&u| bits::contains(u, p)).collect())
        .collect();
    systems.sort();
    systems.dedup();
    systems.len()
}

/// Number of classes of points no clopen separates.
fn oracle_quasi_components(x: &FinSpace) -> usize {
    let clopens: Vec<Mask> = x.opens().iter().copied().filter(|&u| x.is_open(x.all() & !u)).collect();
    let mut signatures: Vec<Vec<bool>> = (0..x.len())
        .map(|p| clopens.iter().map(|&c| bits::contains(c, p)).collect())
        .collect();
    signatures.sort();
    signatures.dedup();
    signatures.len()
}

fn oracle_complemented(l: &DistLattice) -> usize {
    (0..l.len())
        .filter(|&a| (0..l.len()).any(|b| l.meet(a, b) == l.bot() && l.join(a, b) == l.top()))
        .count()
}

// --- order and lattices --------------------------------------------------

#[test]
fn downset_lattices_of_small_posets() {
    let anti = FinPoset::antichain(2);
    let square = downset_lattice(&anti);
    assert_eq!(square.len(), 4);
    assert!(square.isomorphism(&diamond()).is_some());
    let chain = downset_lattice(&FinPoset::chain(2));
    assert!(chain.isomorphism(&chain3()).is_some());
}

#[test]
fn join_irreducibles_recover_the_poset() {
    assert!(join_irreducibles(&chain3()).is_isomorphic(&FinPoset::chain(2)));
    assert!(join_irreducibles(&diamond()).is_isomorphic(&FinPoset::antichain(2)));
}

#[test]
fn ideals_of_the_diamond() {
    let l = diamond();
    assert!(dlat::is_ideal(&l, set(&l, &["0", "a"])));
    assert!(!dlat::is_ideal(&l, set(&l, &["0", "a", "b"])));
    for s in subsets(l.len()) {
        assert_eq!(dlat::is_ideal(&l, s), oracle_is_ideal(&l, s), "{s:#b}");
    }
    assert_eq!(
        dlat::ideal_join(&l, &[l.below(el(&l, "a")), l.below(el(&l, "b"))]),
        l.all()
    );
    let c = chain3();
    assert_eq!(
        dlat::ideal_join(&c, &[c.below(el(&c, "0")), c.below(el(&c, "m"))]),
        c.below(el(&c, "m"))
    );
    assert_eq!(
        IdealLattice::new(&l).ideals().len(),
        subsets(4).filter(|&s| oracle_is_ideal(&l, s)).count()
    );
    assert!(IdealLattice::new(&c).lattice().isomorphism(&c).is_some());
}

#[test]
fn ideal_functor_on_maps() {
    let (t, l) = (two(), diamond());
    let f = LatticeHom::new(t.clone(), l.clone(), vec![el(&l, "0"), el(&l, "1")]).unwrap();
    let top = Ideal::new(t.clone(), t.all()).unwrap();
    assert_eq!(dlat::ideal_map_image(&f, &top).unwrap().members(), l.all());

    let c = chain3();
    let collapse = LatticeHom::new(c.clone(), t.clone(), vec![0, 1, 1]).unwrap();
    let down_m = Ideal::new(c.clone(), c.below(el(&c, "m"))).unwrap();
    assert_eq!(
        dlat::ideal_map_image(&collapse, &down_m).unwrap().members(),
        t.below(el(&t, "1"))
    );
}

#[test]
fn prime_filters_and_characters() {
    for (l, count) in [(chain3(), 2), (diamond(), 2), (two(), 1)] {
        let mut found: Vec<Mask> = dlat::prime_filters(&l).iter().map(|f| f.members()).collect();
        found.sort_unstable();
        assert_eq!(found, oracle_prime_filters(&l));
        assert_eq!(found.len(), count);
        assert_eq!(dlat::homs_to_2(&l).len(), count);
    }
    let d = diamond();
    let labels: Vec<String> = dlat::prime_filters(&d).iter().map(|f| f.label()).collect();
    assert_eq!(labels, ["↑a", "↑b"]);
    for n in 2..=6 {
        assert_eq!(dlat::homs_to_2(&Arc::new(DistLattice::chain(n))).len(), n - 1);
    }
}

#[test]
fn unit_multiplication_and_algebra_of_ideals() {
    let l = diamond();
    assert_eq!(dlat::monad_unit_down(&l, el(&l, "a")).members(), set(&l, &["0", "a"]));
    let c = chain3();
    let il = IdealLattice::new(&c);
    let everything = Ideal::new(il.lattice().clone(), il.lattice().all()).unwrap();
    assert_eq!(dlat::monad_mult_union(&c, &everything).unwrap().members(), c.all());
    let sup = dlat::frame_join_algebra(&IdealLattice::new(&l));
    let whole = IdealLattice::new(&l).index_of(l.all()).unwrap();
    assert_eq!(sup.apply(whole), el(&l, "1"));
}

// --- frames --------------------------------------------------------------

#[test]
fn pseudocomplements_and_regularity() {
    let c = chain3();
    assert_eq!(frame::pseudocomplement(&c, el(&c, "m")), el(&c, "0"));
    assert!(!frame::is_regular(&c));
    assert!(frame::is_regular(&diamond()));
}

#[test]
fn boolean_centers() {
    let c = frame::creg_coreflection(&chain3());
    assert_eq!(c.lattice.len(), 2);
    let d = frame::creg_coreflection(&diamond());
    assert!(d.lattice.isomorphism(&diamond()).is_some());
    // 2-chain ⊕ point
    let p = FinPoset::order_closure(&["x", "y", "z"], &[("x", "y")]).unwrap();
    let l = Arc::new(downset_lattice(&p));
    let center = frame::creg_coreflection(&l);
    assert_eq!(center.lattice.len(), oracle_complemented(&l));
    let booleans: Vec<Arc<DistLattice>> = (0..=2).map(|k| Arc::new(DistLattice::boolean(k))).collect();
    assert!(frame::creg_is_couniversal(&l, &booleans));
}

#[test]
fn stable_compactness_of_the_n_lattice() {
    let p = FinPoset::order_closure(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap();
    let l = Arc::new(downset_lattice(&p));
    assert!(frame::is_stably_compact(&l).unwrap().holds);
    assert!(frame::is_stably_compact(&diamond()).unwrap().holds);
}

#[test]
fn spectra_of_small_lattices() {
    let s = frame::spectrum(&chain3());
    assert!(s.is_homeomorphic(&FinSpace::sierpinski()));
    assert!(frame::spectrum(&diamond()).is_homeomorphic(&FinSpace::discrete(2)));
    assert_eq!(frame::spectrum(&two()).len(), 1);
    assert_eq!(frame::spectrum(&Arc::new(DistLattice::chain(1))).len(), 0);
}

#[test]
fn comultiplication_and_counit() {
    let l = diamond();
    let il = IdealLattice::new(&l);
    let down_a = Ideal::new(l.clone(), l.below(el(&l, "a"))).unwrap();
    let c = frame::comonad_c(&l, &down_a).unwrap();
    // oracle: ideals J with ⋁J ∈ ↓a
    let expected: Vec<Mask> = il
        .ideals()
        .iter()
        .copied()
        .filter(|&j| bits::is_subset(j, down_a.members()))
        .collect();
    let got: Vec<Mask> = bits::ones(c.members()).map(|j| il.ideal(j)).collect();
    assert_eq!(got, expected);
    assert_eq!(got, vec![set(&l, &["0"]), set(&l, &["0", "a"])]);
    assert_eq!(frame::comonad_counit(&l, &down_a).unwrap(), el(&l, "a"));

    let ch = chain3();
    let gamma = frame::coalgebra_gamma(&ch).unwrap();
    assert_eq!(gamma.apply(el(&ch, "m")), set(&ch, &["0", "m"]));
}

#[test]
fn every_small_hom_is_proper() {
    let u = stone::lattice_universe(3, 8);
    for (_, a) in &u.objects {
        for (_, b) in &u.objects {
            for h in dlat::homs(a, b) {
                assert!(frame::is_proper_frame_hom(&h).unwrap());
            }
        }
    }
}

// --- spaces --------------------------------------------------------------

#[test]
fn open_set_frames() {
    assert!(topspace::open_set_frame(&sierpinski()).isomorphism(&chain3()).is_some());
    assert!(topspace::open_set_frame(&Arc::new(FinSpace::discrete(2)))
        .isomorphism(&diamond())
        .is_some());
}

#[test]
fn specialization_and_t0() {
    let order = topspace::specialization_order(&sierpinski()).unwrap();
    assert!(order.is_isomorphic(&FinPoset::chain(2)));
    let pair = Arc::new(FinSpace::indiscrete(2));
    assert!(!pair.is_t0());
    for x in enumerate::topologies_up_to(3) {
        let x = Arc::new(x);
        assert_eq!(topspace::t0_quotient(&x).0.len(), oracle_t0_classes(&x));
    }
}

#[test]
fn open_prime_filters_match_the_definition() {
    for x in enumerate::topologies_up_to(3) {
        let x = Arc::new(x);
        let fx = FilterSpace::new(&x);
        let mut got: Vec<Vec<Mask>> = (0..fx.space().len()).map(|p| fx.filter(p).opens()).collect();
        let mut want = oracle_open_prime_filters(&x);
        got.iter_mut().for_each(|f| f.sort_unstable());
        want.iter_mut().for_each(|f| f.sort_unstable());
        got.sort();
        want.sort();
        assert_eq!(got, want, "{x}");
    }
    assert!(topspace::filter_space(&sierpinski()).is_homeomorphic(&FinSpace::sierpinski()));
    assert_eq!(topspace::filter_space(&Arc::new(FinSpace::indiscrete(2))).len(), 1);
}

#[test]
fn neighbourhood_filters() {
    let s = sierpinski();
    assert_eq!(topspace::monad_eta(&s, 1).opens(), vec![0b10, 0b11]);
    assert_eq!(topspace::monad_eta(&s, 0).opens(), vec![0b11]);
    let pair = Arc::new(FinSpace::indiscrete(2));
    assert_eq!(topspace::monad_eta(&pair, 0), topspace::monad_eta(&pair, 1));

    // the inclusion {1} ↪ S sends the point filter of 1 to η(1)
    let one = Arc::new(FinSpace::from_opens(vec!["1".into()], vec![0, 1]).unwrap());
    let inc = ContinuousMap::new(one.clone(), s.clone(), vec![1]).unwrap();
    let image = topspace::filter_map_image(&inc, &topspace::monad_eta(&one, 0)).unwrap();
    assert_eq!(image, topspace::monad_eta(&s, 1));
}

#[test]
fn multiplication_splits_f_eta() {
    let s = sierpinski();
    let fx = FilterSpace::new(&s);
    let ffx = FilterSpace::new(fx.space());
    let eta = topspace::eta_map(&fx);
    let composite = ContinuousMap::compose(&topspace::mu_map(&fx, &ffx), &topspace::filter_map(&eta)).unwrap();
    assert_eq!(composite, ContinuousMap::identity(fx.space()));
}

#[test]
fn algebras_exist_exactly_on_t0_spaces() {
    let s = sierpinski();
    let CanonicalAlgebra::Structure(alpha) = topspace::canonical_f_algebra(&s) else {
        panic!("no algebra")
    };
    let fx = FilterSpace::new(&s);
    for x in 0..s.len() {
        assert_eq!(alpha.apply(fx.point_of(&topspace::monad_eta(&s, x)).unwrap()), x);
    }
    assert!(topspace::check_f_algebra(&s, &alpha).unwrap().passes());
    let constant = ContinuousMap::new(fx.space().clone(), s.clone(), vec![1; fx.space().len()]).unwrap();
    assert!(!topspace::check_f_algebra(&s, &constant).unwrap().unit_law);
    for x in enumerate::labeled_topologies(4).into_iter().filter(|x| !x.is_t0()) {
        let x = Arc::new(x);
        assert!(matches!(
            topspace::canonical_f_algebra(&x),
            CanonicalAlgebra::NoAlgebra { .. }
        ));
    }
}

#[test]
fn sobrification_examples() {
    assert_eq!(
        topspace::sobrification(&Arc::new(FinSpace::indiscrete(2)))
            .spectrum
            .space()
            .len(),
        1
    );
    let s = topspace::sobrification(&sierpinski());
    assert!(s.unit.is_homeomorphism());
}

#[test]
fn pairing_counts() {
    let chain_space = Arc::new(enumerate::alexandrov_space(&[0b111, 0b110, 0b100]));
    for x in [sierpinski(), Arc::new(FinSpace::point()), chain_space] {
        let filters = oracle_open_prime_filters(&x).len();
        let homs = dlat::homs_to_2(&topspace::open_set_frame(&x)).len();
        assert_eq!(filters, homs);
        assert!(topspace::pairing_iso(&x).homeomorphism);
    }
}

#[test]
fn hausdorff_reflections() {
    let sum = Arc::new(
        FinSpace::from_opens(
            vec!["0".into(), "1".into(), "2".into()],
            vec![0b000, 0b010, 0b011, 0b100, 0b110, 0b111],
        )
        .unwrap(),
    );
    for (x, n) in [(sierpinski(), 1), (Arc::new(FinSpace::discrete(2)), 2), (sum, 2)] {
        let (r, _) = topspace::hausdorff_reflection(&x);
        assert_eq!(r.len(), n);
        assert_eq!(r.len(), oracle_quasi_components(&x));
    }
}

#[test]
fn cech_stone_examples() {
    for (x, n) in [
        (sierpinski(), 1),
        (Arc::new(FinSpace::discrete(2)), 2),
        (Arc::new(FinSpace::indiscrete(2)), 1),
    ] {
        let r = topspace::cech_stone_square(&x);
        assert!(r.iso);
        assert_eq!((r.pointfree_points, r.pointset_points), (n, n));
        assert_eq!(oracle_quasi_components(&topspace::filter_space(&x)), n);
    }
}

#[test]
fn ultrafilter_examples() {
    for x in [
        sierpinski(),
        Arc::new(FinSpace::indiscrete(2)),
        Arc::new(FinSpace::discrete(2)),
    ] {
        let r = topspace::ultrafilter_comparison(&x);
        assert!(r.ux_is_x && r.fx_matches);
    }
}

// --- category engine ------------------------------------------------------

#[test]
fn adjunctions_on_the_finite_universe() {
    let mut spaces = stone::space_universe(2);
    stone::add_all_maps(&mut spaces, 2);
    let mut lats = stone::lattice_universe(3, 8);
    stone::add_all_homs(&mut lats, 5);
    let os = catengine::check_adjunction(&stone::open_spectrum_adjunction(), &spaces, &stone::as_loc(&lats));
    assert!(os.passed(), "{:?}", os.first_failure());
    let free = catengine::check_adjunction(&stone::free_frame_adjunction(), &lats, &lats);
    assert!(free.passed(), "{:?}", free.first_failure());
}

#[test]
fn lifting_the_identity_monad() {
    let adj = stone::open_spectrum_adjunction();
    let lats = stone::as_loc(&stone::lattice_universe(3, 8));
    let id = MonadInstance::identity(stone::LOC);
    let law = catengine::lift_law(&adj, &id, &lats).unwrap();
    assert!(law.report.passed());
    let lifted = catengine::lift_monad(&adj, &id).unwrap();
    assert!(catengine::check_monad_laws(&lifted, &stone::space_universe(2)).passed());
}

#[test]
fn monad_morphisms() {
    let mut lats = stone::lattice_universe(3, 8);
    stone::add_all_homs(&mut lats, 4);
    let t = stone::ideal_monad();
    let id = NatTransInstance::identity(&t.endo);
    assert!(catengine::check_monad_morphism(&id, &t, &t, &lats).passed());
    let unit = MonadInstance::identity(stone::Lat);
    assert!(catengine::check_monad_morphism(&t.unit, &unit, &t, &lats).passed());
}

#[test]
fn closure_initiality_examples() {
    let s = sierpinski();
    assert!(catengine::closure_initiality(&ContinuousMap::identity(&s)).c_initial);
    // every subspace inclusion of a space with at most three points
    for x in enumerate::topologies_up_to(3) {
        let x = Arc::new(x);
        for sub in 1..=x.all() {
            let keep: Vec<usize> = bits::ones(sub).collect();
            let labels = keep.iter().map(|&i| x.label(i).to_string()).collect();
            let squeeze = |u: Mask| {
                bits::from_indices(
                    keep.iter()
                        .enumerate()
                        .filter(|(_, &i)| bits::contains(u, i))
                        .map(|(k, _)| k),
                )
            };
            let opens = x.opens().iter().map(|&u| squeeze(u)).collect();
            let y = Arc::new(FinSpace::from_opens(labels, opens).unwrap());
            let assignment = (0..y.len()).map(|k| x.index_of(y.label(k)).unwrap()).collect();
            let inc = ContinuousMap::new(y, x.clone(), assignment).unwrap();
            assert!(catengine::closure_initiality(&inc).c_initial, "{x} ⊇ {}", x.render(sub));
        }
    }
    let r = catengine::closure_initiality(&stone::faults::discrete_to_indiscrete());
    assert!(!r.c_initial);
}
