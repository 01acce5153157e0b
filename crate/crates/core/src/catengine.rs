//! A structure-agnostic engine for checking functor, natural-transformation,
//! monad, comonad and adjunction laws on finite universes of test objects and
//! morphisms, together with monad lifting along an adjunction:
//!
//! * `M = RTL` with unit `d = ReL·η` and multiplication `n = RmL·RTεTL`;
//! * the law `λ = RTε : MR ⇒ RT` and its two diagrams;
//! * the comparison `K(X, α) = (RX, Rα·λ_X)` and, when `εT` is invertible,
//!   `K*(Y, β) = (LY, Lβ·ε⁻¹_{TLY})`;
//! * lifting of monad morphisms, composites, and idempotence.
//!
//! Categories are never enumerated; every check is an objectwise equation
//! evaluated on the supplied universe.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::topspace::ContinuousMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("cannot compose {outer} after {inner}")]
    NotComposable { outer: String, inner: String },
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("not an algebra: {0}")]
    NotAnAlgebra(String),
    #[error("counit is not invertible at {witness}")]
    CounitNotIso { witness: String },
    #[error("hypothesis LRT ≅ T fails at {witness}")]
    HypothesisFailed { witness: String },
    #[error("{0}")]
    Evaluation(String),
}

/// What the engine needs to know about a category.
pub trait Category: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Obj: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;
    type Mor: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, CatError>;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    fn describe_obj(&self, x: &Self::Obj) -> String;
    fn describe_mor(&self, f: &Self::Mor) -> String;

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.inverse(f).is_some()
    }

    fn compose_all(&self, chain: &[&Self::Mor]) -> Result<Self::Mor, CatError> {
        // chain is written left to right as in `h ∘ g ∘ f`
        let (last, rest) = chain.split_last().expect("nonempty chain");
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, g| self.compose(g, &acc))
    }
}

/// `C^op`: same objects and morphisms, arrows reversed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Opposite<C>(pub C);

impl<C: Category> Category for Opposite<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn name(&self) -> String {
        format!("{}ᵒᵖ", self.0.name())
    }
    fn dom(&self, f: &C::Mor) -> C::Obj {
        self.0.cod(f)
    }
    fn cod(&self, f: &C::Mor) -> C::Obj {
        self.0.dom(f)
    }
    fn identity(&self, x: &C::Obj) -> C::Mor {
        self.0.identity(x)
    }
    fn compose(&self, g: &C::Mor, f: &C::Mor) -> Result<C::Mor, CatError> {
        self.0.compose(f, g)
    }
    fn inverse(&self, f: &C::Mor) -> Option<C::Mor> {
        self.0.inverse(f)
    }
    fn describe_obj(&self, x: &C::Obj) -> String {
        self.0.describe_obj(x)
    }
    fn describe_mor(&self, f: &C::Mor) -> String {
        self.0.describe_mor(f)
    }
}

type ObjFn<C, D> = Arc<dyn Fn(&<C as Category>::Obj) -> Result<<D as Category>::Obj, CatError> + Send + Sync>;
type MorFn<C, D> = Arc<dyn Fn(&<C as Category>::Mor) -> Result<<D as Category>::Mor, CatError> + Send + Sync>;
type ComponentFn<C, D> = Arc<dyn Fn(&<C as Category>::Obj) -> Result<<D as Category>::Mor, CatError> + Send + Sync>;

/// A finite list of named test objects and morphisms.
#[derive(Clone, Debug)]
pub struct Universe<C: Category> {
    pub cat: C,
    pub objects: Vec<(String, C::Obj)>,
    pub morphisms: Vec<(String, C::Mor)>,
}

impl<C: Category> Universe<C> {
    pub fn new(cat: C) -> Self {
        Universe {
            cat,
            objects: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    pub fn with_objects(cat: C, objects: Vec<C::Obj>) -> Self {
        let objects = objects.into_iter().map(|x| (cat.describe_obj(&x), x)).collect();
        Universe {
            cat,
            objects,
            morphisms: Vec::new(),
        }
    }

    pub fn add_object(&mut self, name: impl Into<String>, x: C::Obj) {
        self.objects.push((name.into(), x));
    }

    pub fn add_morphism(&mut self, name: impl Into<String>, f: C::Mor) {
        self.morphisms.push((name.into(), f));
    }

    /// Index pairs `(f, g)` with `cod f = dom g`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let doms: Vec<C::Obj> = self.morphisms.iter().map(|(_, f)| self.cat.dom(f)).collect();
        let cods: Vec<C::Obj> = self.morphisms.iter().map(|(_, f)| self.cat.cod(f)).collect();
        let mut out = Vec::new();
        for (i, c) in cods.iter().enumerate() {
            for (j, d) in doms.iter().enumerate() {
                if c == d {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[derive(Clone)]
pub struct FunctorInstance<C: Category, D: Category> {
    pub name: String,
    pub source: C,
    pub target: D,
    on_obj: ObjFn<C, D>,
    on_mor: MorFn<C, D>,
}

impl<C: Category, D: Category> fmt::Debug for FunctorInstance<C, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source.name(), self.target.name())
    }
}

impl<C: Category, D: Category> FunctorInstance<C, D> {
    pub fn new(
        name: impl Into<String>,
        source: C,
        target: D,
        on_obj: impl Fn(&C::Obj) -> Result<D::Obj, CatError> + Send + Sync + 'static,
        on_mor: impl Fn(&C::Mor) -> Result<D::Mor, CatError> + Send + Sync + 'static,
    ) -> Self {
        FunctorInstance {
            name: name.into(),
            source,
            target,
            on_obj: Arc::new(on_obj),
            on_mor: Arc::new(on_mor),
        }
    }

    pub fn obj(&self, x: &C::Obj) -> Result<D::Obj, CatError> {
        (self.on_obj)(x)
    }

    pub fn mor(&self, f: &C::Mor) -> Result<D::Mor, CatError> {
        (self.on_mor)(f)
    }

    /// `G ∘ F`, named by juxtaposition.
    pub fn then<E: Category>(&self, g: &FunctorInstance<D, E>) -> FunctorInstance<C, E> {
        let (f1, g1) = (self.clone(), g.clone());
        let (f2, g2) = (self.clone(), g.clone());
        FunctorInstance::new(
            format!("{}{}", g.name, self.name),
            self.source.clone(),
            g.target.clone(),
            move |x| g1.obj(&f1.obj(x)?),
            move |m| g2.mor(&f2.mor(m)?),
        )
    }

    pub fn opposite(&self) -> FunctorInstance<Opposite<C>, Opposite<D>> {
        FunctorInstance {
            name: self.name.clone(),
            source: Opposite(self.source.clone()),
            target: Opposite(self.target.clone()),
            on_obj: self.on_obj.clone(),
            on_mor: self.on_mor.clone(),
        }
    }
}

impl<C: Category> FunctorInstance<C, C> {
    pub fn identity(cat: C) -> Self {
        FunctorInstance::new(
            "Id",
            cat.clone(),
            cat,
            |x: &C::Obj| Ok(x.clone()),
            |f: &C::Mor| Ok(f.clone()),
        )
    }
}

/// A transformation `F ⇒ G` between functors `C -> D`.
#[derive(Clone)]
pub struct NatTransInstance<C: Category, D: Category> {
    pub name: String,
    pub source: FunctorInstance<C, D>,
    pub target: FunctorInstance<C, D>,
    component: ComponentFn<C, D>,
}

impl<C: Category, D: Category> fmt::Debug for NatTransInstance<C, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ⇒ {}", self.name, self.source.name, self.target.name)
    }
}

impl<C: Category, D: Category> NatTransInstance<C, D> {
    pub fn new(
        name: impl Into<String>,
        source: FunctorInstance<C, D>,
        target: FunctorInstance<C, D>,
        component: impl Fn(&C::Obj) -> Result<D::Mor, CatError> + Send + Sync + 'static,
    ) -> Self {
        NatTransInstance {
            name: name.into(),
            source,
            target,
            component: Arc::new(component),
        }
    }

    pub fn at(&self, x: &C::Obj) -> Result<D::Mor, CatError> {
        (self.component)(x)
    }

    pub fn identity(f: &FunctorInstance<C, D>) -> Self {
        let g = f.clone();
        NatTransInstance::new(format!("1_{}", f.name), f.clone(), f.clone(), move |x| {
            Ok(g.target.identity(&g.obj(x)?))
        })
    }

    /// Vertical composite `β ∘ α`.
    pub fn then(&self, beta: &NatTransInstance<C, D>) -> Self {
        let (a, b) = (self.clone(), beta.clone());
        NatTransInstance::new(
            format!("{}·{}", beta.name, self.name),
            self.source.clone(),
            beta.target.clone(),
            move |x| a.source.target.compose(&b.at(x)?, &a.at(x)?),
        )
    }

    /// `αF` for `F : B -> C`.
    pub fn whisker_pre<B: Category>(&self, f: &FunctorInstance<B, C>) -> NatTransInstance<B, D> {
        let (a, g) = (self.clone(), f.clone());
        NatTransInstance::new(
            format!("{}{}", self.name, f.name),
            f.then(&self.source),
            f.then(&self.target),
            move |x| a.at(&g.obj(x)?),
        )
    }

    /// `Hα` for `H : D -> E`.
    pub fn whisker_post<E: Category>(&self, h: &FunctorInstance<D, E>) -> NatTransInstance<C, E> {
        let (a, k) = (self.clone(), h.clone());
        NatTransInstance::new(
            format!("{}{}", h.name, self.name),
            self.source.then(h),
            self.target.then(h),
            move |x| k.mor(&a.at(x)?),
        )
    }

    /// `α : F ⇒ G` read as `Gᵒᵖ ⇒ Fᵒᵖ`.
    pub fn opposite(&self) -> NatTransInstance<Opposite<C>, Opposite<D>> {
        NatTransInstance {
            name: self.name.clone(),
            source: self.target.opposite(),
            target: self.source.opposite(),
            component: self.component.clone(),
        }
    }
}

/// `(T, e, m)` on a category `C`.
#[derive(Clone, Debug)]
pub struct MonadInstance<C: Category> {
    pub name: String,
    pub endo: FunctorInstance<C, C>,
    pub unit: NatTransInstance<C, C>,
    pub mult: NatTransInstance<C, C>,
}

impl<C: Category> MonadInstance<C> {
    pub fn cat(&self) -> &C {
        &self.endo.source
    }

    pub fn identity(cat: C) -> Self {
        let id = FunctorInstance::identity(cat);
        MonadInstance {
            name: "Id".into(),
            unit: NatTransInstance::identity(&id),
            mult: NatTransInstance::identity(&id),
            endo: id,
        }
    }
}

/// `(T, counit, comultiplication)` on `C`.
#[derive(Clone, Debug)]
pub struct ComonadInstance<C: Category> {
    pub name: String,
    pub endo: FunctorInstance<C, C>,
    pub counit: NatTransInstance<C, C>,
    pub comult: NatTransInstance<C, C>,
}

impl<C: Category> ComonadInstance<C> {
    /// The same data read as a monad on `Cᵒᵖ`.
    pub fn as_monad_on_opposite(&self) -> MonadInstance<Opposite<C>> {
        MonadInstance {
            name: self.name.clone(),
            endo: self.endo.opposite(),
            unit: self.counit.opposite(),
            mult: self.comult.opposite(),
        }
    }
}

/// `L ⊣ R` with `L : B -> C`, unit `η : 1 ⇒ RL` and counit `ε : LR ⇒ 1`.
#[derive(Clone, Debug)]
pub struct AdjunctionInstance<B: Category, C: Category> {
    pub left: FunctorInstance<B, C>,
    pub right: FunctorInstance<C, B>,
    pub unit: NatTransInstance<B, B>,
    pub counit: NatTransInstance<C, C>,
}

impl<B: Category, C: Category> AdjunctionInstance<B, C> {
    pub fn left_cat(&self) -> &B {
        &self.left.source
    }

    pub fn right_cat(&self) -> &C {
        &self.left.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInstance<C: Category> {
    pub carrier: C::Obj,
    pub structure: C::Mor,
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawLine {
    pub subject: String,
    pub law: String,
    pub outcome: Outcome,
}

impl fmt::Display for LawLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "{}\t{}\tPASS", self.subject, self.law),
            Outcome::Fail(w) => write!(f, "{}\t{}\tFAIL\t{}", self.subject, self.law, w),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub lines: Vec<LawLine>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, subject: impl Into<String>, law: impl Into<String>, outcome: Outcome) {
        self.lines.push(LawLine {
            subject: subject.into(),
            law: law.into(),
            outcome,
        });
    }

    pub fn extend(&mut self, other: LawReport) {
        self.lines.extend(other.lines);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.outcome == Outcome::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawLine> {
        self.lines.iter().filter(|l| l.outcome != Outcome::Pass)
    }

    pub fn first_failure(&self) -> Option<&LawLine> {
        self.failures().next()
    }

    /// Prefixes every subject, e.g. with a universe id.
    pub fn scoped(mut self, scope: &str) -> Self {
        for l in &mut self.lines {
            l.subject = format!("{scope}:{}", l.subject);
        }
        self
    }
}

fn compare<C: Category>(cat: &C, what: &str, lhs: Result<C::Mor, CatError>, rhs: Result<C::Mor, CatError>) -> Outcome {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => Outcome::Pass,
        (Ok(a), Ok(b)) => Outcome::Fail(format!("{what}: {} ≠ {}", cat.describe_mor(&a), cat.describe_mor(&b))),
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(format!("{what}: {e}")),
    }
}

fn outcome_of(r: Result<Outcome, CatError>, what: &str) -> Outcome {
    r.unwrap_or_else(|e| Outcome::Fail(format!("{what}: {e}")))
}

// ---------------------------------------------------------------------------
// Checkers

pub fn check_functor_laws<C: Category, D: Category>(f: &FunctorInstance<C, D>, u: &Universe<C>) -> LawReport {
    let mut rep = LawReport::new();
    let d = &f.target;
    for (name, x) in &u.objects {
        let lhs = f.mor(&u.cat.identity(x));
        let rhs = f.obj(x).map(|fx| d.identity(&fx));
        rep.push(name, format!("{}-identity", f.name), compare(d, "F(id) = id", lhs, rhs));
    }
    for (i, j) in u.composable_pairs() {
        let (fname, m) = &u.morphisms[i];
        let (gname, g) = &u.morphisms[j];
        let lhs = u.cat.compose(g, m).and_then(|gm| f.mor(&gm));
        let rhs = f.mor(g).and_then(|fg| d.compose(&fg, &f.mor(m)?));
        rep.push(
            format!("{gname}∘{fname}"),
            format!("{}-composition", f.name),
            compare(d, "F(g∘f) = Fg∘Ff", lhs, rhs),
        );
    }
    rep
}

/// Typing of every component and every naturality square over the universe.
pub fn check_nat_trans<C: Category, D: Category>(a: &NatTransInstance<C, D>, u: &Universe<C>) -> LawReport {
    let mut rep = LawReport::new();
    let d = &a.source.target;
    for (name, x) in &u.objects {
        let typed = (|| {
            let c = a.at(x)?;
            let ok = d.dom(&c) == a.source.obj(x)? && d.cod(&c) == a.target.obj(x)?;
            Ok(if ok {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("component {} has the wrong type", d.describe_mor(&c)))
            })
        })();
        rep.push(name, format!("{}-typing", a.name), outcome_of(typed, "component"));
    }
    for (name, m) in &u.morphisms {
        let (x, y) = (u.cat.dom(m), u.cat.cod(m));
        let lhs = a.at(&y).and_then(|ay| d.compose(&ay, &a.source.mor(m)?));
        let rhs = a.target.mor(m).and_then(|gm| d.compose(&gm, &a.at(&x)?));
        rep.push(
            name,
            format!("{}-naturality", a.name),
            compare(d, "α_Y∘Ff = Gf∘α_X", lhs, rhs),
        );
    }
    rep
}

/// Functor laws, naturality of unit and multiplication, and the three monad
/// identities `m∘Te = id = m∘eT`, `m∘Tm = m∘mT` on every universe object.
pub fn check_monad_laws<C: Category>(t: &MonadInstance<C>, u: &Universe<C>) -> LawReport {
    let mut rep = check_functor_laws(&t.endo, u);
    rep.extend(check_nat_trans(&t.unit, u));
    rep.extend(check_nat_trans(&t.mult, u));
    let c = t.cat();
    for (name, x) in &u.objects {
        let tx = t.endo.obj(x);
        let id_tx = tx.clone().map(|tx| c.identity(&tx));
        let mx = t.mult.at(x);

        let left = mx.clone().and_then(|m| c.compose(&m, &t.endo.mor(&t.unit.at(x)?)?));
        rep.push(name, "left-unit", compare(c, "m∘Te = id", left, id_tx.clone()));

        let right = mx.clone().and_then(|m| c.compose(&m, &t.unit.at(&tx.clone()?)?));
        rep.push(name, "right-unit", compare(c, "m∘eT = id", right, id_tx));

        let assoc_l = mx.clone().and_then(|m| c.compose(&m, &t.endo.mor(&m)?));
        let assoc_r = mx.and_then(|m| c.compose(&m, &t.mult.at(&tx?)?));
        rep.push(name, "associativity", compare(c, "m∘Tm = m∘mT", assoc_l, assoc_r));
    }
    rep
}

/// The dual identities, checked as monad laws on the opposite category.
pub fn check_comonad_laws<C: Category>(k: &ComonadInstance<C>, u: &Universe<C>) -> LawReport {
    let op = Universe {
        cat: Opposite(u.cat.clone()),
        objects: u.objects.clone(),
        morphisms: u.morphisms.clone(),
    };
    let mut rep = check_monad_laws(&k.as_monad_on_opposite(), &op);
    for l in &mut rep.lines {
        l.law = match l.law.as_str() {
            "left-unit" => "left-counit".into(),
            "right-unit" => "right-counit".into(),
            "associativity" => "coassociativity".into(),
            other => other.into(),
        };
    }
    rep
}

/// Naturality of `η`, `ε` and the triangle identities `εL∘Lη = id`,
/// `Rε∘ηR = id`.
pub fn check_adjunction<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    left: &Universe<B>,
    right: &Universe<C>,
) -> LawReport {
    let mut rep = check_nat_trans(&a.unit, left);
    rep.extend(check_nat_trans(&a.counit, right));
    let (b, c) = (a.left_cat(), a.right_cat());
    for (name, x) in &left.objects {
        let lhs = a
            .left
            .obj(x)
            .and_then(|lx| c.compose(&a.counit.at(&lx)?, &a.left.mor(&a.unit.at(x)?)?));
        let rhs = a.left.obj(x).map(|lx| c.identity(&lx));
        rep.push(name, "triangle-L", compare(c, "εL∘Lη = id", lhs, rhs));
    }
    for (name, y) in &right.objects {
        let lhs = a
            .right
            .obj(y)
            .and_then(|ry| b.compose(&a.right.mor(&a.counit.at(y)?)?, &a.unit.at(&ry)?));
        let rhs = a.right.obj(y).map(|ry| b.identity(&ry));
        rep.push(name, "triangle-R", compare(b, "Rε∘ηR = id", lhs, rhs));
    }
    rep
}

pub fn check_algebra<C: Category>(t: &MonadInstance<C>, alg: &AlgebraInstance<C>) -> LawReport {
    let c = t.cat();
    let mut rep = LawReport::new();
    let name = c.describe_obj(&alg.carrier);
    let a = &alg.structure;
    let typed = t
        .endo
        .obj(&alg.carrier)
        .map(|tx| c.dom(a) == tx && c.cod(a) == alg.carrier)
        .unwrap_or(false);
    if !typed {
        rep.push(
            name,
            "algebra-typing",
            Outcome::Fail(format!("{} is not TX -> X", c.describe_mor(a))),
        );
        return rep;
    }
    let unit = t.unit.at(&alg.carrier).and_then(|e| c.compose(a, &e));
    rep.push(
        &name,
        "algebra-unit",
        compare(c, "a∘e = id", unit, Ok(c.identity(&alg.carrier))),
    );
    let lhs = t.endo.mor(a).and_then(|ta| c.compose(a, &ta));
    let rhs = t.mult.at(&alg.carrier).and_then(|m| c.compose(a, &m));
    rep.push(&name, "algebra-assoc", compare(c, "a∘Ta = a∘m", lhs, rhs));
    rep
}

fn ensure_same_category<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
) -> Result<(), CatError> {
    if t.cat() != a.right_cat() {
        return Err(CatError::UniverseMismatch(format!(
            "monad {} lives on {}, adjunction lands in {}",
            t.name,
            t.cat().name(),
            a.right_cat().name()
        )));
    }
    Ok(())
}

/// `M = RTL`, `d = ReL·η`, `n = RmL·RTεTL`.
pub fn lift_monad<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
) -> Result<MonadInstance<B>, CatError> {
    ensure_same_category(a, t)?;
    let endo = a.left.then(&t.endo).then(&a.right);
    let b = a.left_cat().clone();

    let (adj, mon, cat) = (a.clone(), t.clone(), b.clone());
    let unit = NatTransInstance::new(
        format!("{}{}", a.right.name, "eL·η"),
        FunctorInstance::identity(b.clone()),
        endo.clone(),
        move |x| {
            let lx = adj.left.obj(x)?;
            let rel = adj.right.mor(&mon.unit.at(&lx)?)?;
            cat.compose(&rel, &adj.unit.at(x)?)
        },
    );

    let (adj, mon, cat) = (a.clone(), t.clone(), b.clone());
    let mult = NatTransInstance::new("RmL·RTεTL", endo.then(&endo), endo.clone(), move |x| {
        let lx = adj.left.obj(x)?;
        let tlx = mon.endo.obj(&lx)?;
        let step = adj.right.mor(&mon.endo.mor(&adj.counit.at(&tlx)?)?)?;
        let rml = adj.right.mor(&mon.mult.at(&lx)?)?;
        cat.compose(&rml, &step)
    });

    Ok(MonadInstance {
        name: format!("{}{}{}", a.right.name, t.endo.name, a.left.name),
        endo,
        unit,
        mult,
    })
}

/// `λ = RTε : MR ⇒ RT` with the report of both lifting diagrams:
/// `λ_Y∘d_{RY} = Re_Y` and `λ_Y∘n_{RY} = Rm_Y∘λ_{TY}∘Mλ_Y`.
#[derive(Clone, Debug)]
pub struct LiftLaw<B: Category, C: Category> {
    pub lambda: NatTransInstance<C, B>,
    pub report: LawReport,
}

pub fn lift_law<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    right: &Universe<C>,
) -> Result<LiftLaw<B, C>, CatError> {
    let m = lift_monad(a, t)?;
    let lambda = lambda_of(a, t);
    let b = a.left_cat();
    let mut report = check_nat_trans(&lambda, right);
    for (name, y) in &right.objects {
        let ry = a.right.obj(y);
        let unit_l = ry.clone().and_then(|ry| b.compose(&lambda.at(y)?, &m.unit.at(&ry)?));
        let unit_r = t.unit.at(y).and_then(|e| a.right.mor(&e));
        report.push(name, "lift-unit", compare(b, "λ∘dR = Re", unit_l, unit_r));

        let mult_l = ry.and_then(|ry| b.compose(&lambda.at(y)?, &m.mult.at(&ry)?));
        let mult_r = (|| {
            let ty = t.endo.obj(y)?;
            let rm = a.right.mor(&t.mult.at(y)?)?;
            let lty = lambda.at(&ty)?;
            let ml = m.endo.mor(&lambda.at(y)?)?;
            b.compose_all(&[&rm, &lty, &ml])
        })();
        report.push(name, "lift-mult", compare(b, "λ∘nR = Rm∘λT∘Mλ", mult_l, mult_r));
    }
    Ok(LiftLaw { lambda, report })
}

fn lambda_of<B: Category, C: Category>(a: &AdjunctionInstance<B, C>, t: &MonadInstance<C>) -> NatTransInstance<C, B> {
    let rt = t.endo.then(&a.right);
    let mr = a.right.then(&a.left).then(&t.endo).then(&a.right);
    let (adj, mon) = (a.clone(), t.clone());
    NatTransInstance::new(format!("{}{}ε", a.right.name, t.endo.name), mr, rt, move |y| {
        adj.right.mor(&mon.endo.mor(&adj.counit.at(y)?)?)
    })
}

fn require_algebra<C: Category>(t: &MonadInstance<C>, alg: &AlgebraInstance<C>) -> Result<(), CatError> {
    let rep = check_algebra(t, alg);
    match rep.first_failure() {
        Some(l) => Err(CatError::NotAnAlgebra(format!("{} ({})", l.law, witness(l)))),
        None => Ok(()),
    }
}

fn witness(l: &LawLine) -> &str {
    match &l.outcome {
        Outcome::Fail(w) => w,
        Outcome::Pass => "",
    }
}

/// `K(X, α) = (RX, Rα∘λ_X)`
pub fn comparison_algebra<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    alg: &AlgebraInstance<C>,
) -> Result<AlgebraInstance<B>, CatError> {
    ensure_same_category(a, t)?;
    require_algebra(t, alg)?;
    let lambda = lambda_of(a, t);
    let structure = a
        .left_cat()
        .compose(&a.right.mor(&alg.structure)?, &lambda.at(&alg.carrier)?)?;
    Ok(AlgebraInstance {
        carrier: a.right.obj(&alg.carrier)?,
        structure,
    })
}

/// The same algebra computed without `λ`: `R(α∘Tε_X)`.
pub fn comparison_via_counit<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    alg: &AlgebraInstance<C>,
) -> Result<AlgebraInstance<B>, CatError> {
    ensure_same_category(a, t)?;
    require_algebra(t, alg)?;
    let teps = t.endo.mor(&a.counit.at(&alg.carrier)?)?;
    let inner = a.right_cat().compose(&alg.structure, &teps)?;
    Ok(AlgebraInstance {
        carrier: a.right.obj(&alg.carrier)?,
        structure: a.right.mor(&inner)?,
    })
}

/// `ε_{TY}` is invertible for every universe object.
pub fn check_counit_iso_on_t<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    right: &Universe<C>,
) -> Result<(), CatError> {
    for (name, y) in &right.objects {
        let ty = t.endo.obj(y)?;
        if !a.right_cat().is_iso(&a.counit.at(&ty)?) {
            return Err(CatError::CounitNotIso { witness: name.clone() });
        }
    }
    Ok(())
}

/// `K*(Y, β) = (LY, Lβ∘ε⁻¹_{TLY})`
pub fn inverse_comparison<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    beta: &AlgebraInstance<B>,
) -> Result<AlgebraInstance<C>, CatError> {
    let m = lift_monad(a, t)?;
    let c = a.right_cat();
    let ly = a.left.obj(&beta.carrier)?;
    let tly = t.endo.obj(&ly)?;
    let eps = a.counit.at(&tly)?;
    let inv = c.inverse(&eps).ok_or_else(|| CatError::CounitNotIso {
        witness: c.describe_obj(&tly),
    })?;
    require_algebra(&m, beta)?;
    Ok(AlgebraInstance {
        carrier: ly,
        structure: c.compose(&a.left.mor(&beta.structure)?, &inv)?,
    })
}

/// `K*K(X, α) ≅ (X, α)` through `ε_X`: iso and algebra morphism.
pub fn check_round_trip_c<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    alg: &AlgebraInstance<C>,
) -> LawReport {
    let c = a.right_cat();
    let mut rep = LawReport::new();
    let name = c.describe_obj(&alg.carrier);
    let there = comparison_algebra(a, t, alg).and_then(|k| inverse_comparison(a, t, &k));
    let back = match there {
        Ok(back) => back,
        Err(e) => {
            rep.push(name, "K*K-round-trip", Outcome::Fail(e.to_string()));
            return rep;
        }
    };
    let outcome = outcome_of(
        (|| {
            let eps = a.counit.at(&alg.carrier)?;
            if !c.is_iso(&eps) {
                return Ok(Outcome::Fail(format!("ε at {name} is not invertible")));
            }
            let lhs = c.compose(&eps, &back.structure);
            let rhs = c.compose(&alg.structure, &t.endo.mor(&eps)?);
            Ok(compare(c, "ε∘α' = α∘Tε", lhs, rhs))
        })(),
        "round trip",
    );
    rep.push(name, "K*K-round-trip", outcome);
    rep
}

/// `KK*(Y, β) ≅ (Y, β)` through `η_Y`: iso and algebra morphism.
pub fn check_round_trip_b<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    t: &MonadInstance<C>,
    beta: &AlgebraInstance<B>,
) -> LawReport {
    let b = a.left_cat();
    let mut rep = LawReport::new();
    let name = b.describe_obj(&beta.carrier);
    let outcome = outcome_of(
        (|| {
            let m = lift_monad(a, t)?;
            let back = comparison_algebra(a, t, &inverse_comparison(a, t, beta)?)?;
            let eta = a.unit.at(&beta.carrier)?;
            if !b.is_iso(&eta) {
                return Ok(Outcome::Fail(format!("η at {name} is not invertible")));
            }
            let lhs = b.compose(&eta, &beta.structure);
            let rhs = b.compose(&back.structure, &m.endo.mor(&eta)?);
            Ok(compare(b, "η∘β = β''∘Mη", lhs, rhs))
        })(),
        "round trip",
    );
    rep.push(name, "KK*-round-trip", outcome);
    rep
}

/// `α∘e = d` and `α∘m = n∘(α∗α)` objectwise, plus naturality of `α`.
pub fn check_monad_morphism<C: Category>(
    alpha: &NatTransInstance<C, C>,
    t: &MonadInstance<C>,
    n: &MonadInstance<C>,
    u: &Universe<C>,
) -> LawReport {
    let c = t.cat();
    let mut rep = check_nat_trans(alpha, u);
    for (name, x) in &u.objects {
        let lhs = alpha.at(x).and_then(|ax| c.compose(&ax, &t.unit.at(x)?));
        rep.push(name, "morphism-unit", compare(c, "α∘e = d", lhs, n.unit.at(x)));
        let lhs = alpha.at(x).and_then(|ax| c.compose(&ax, &t.mult.at(x)?));
        let rhs = (|| {
            let nx = n.endo.obj(x)?;
            let ax = alpha.at(x)?;
            c.compose_all(&[&n.mult.at(x)?, &alpha.at(&nx)?, &t.endo.mor(&ax)?])
        })();
        rep.push(name, "morphism-mult", compare(c, "α∘m = n∘αN∘Tα", lhs, rhs));
    }
    rep
}

/// `RαL : RTL ⇒ RNL`
pub fn lift_of_morphism<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    alpha: &NatTransInstance<C, C>,
) -> NatTransInstance<B, B> {
    alpha.whisker_pre(&a.left).whisker_post(&a.right)
}

/// `𝔏(NT) ≅ 𝔏(N)𝔏(T)` via `φ = RNεTL`, provided `ε_T` is invertible on
/// the right universe.
pub fn lift_composite<B: Category, C: Category>(
    a: &AdjunctionInstance<B, C>,
    n: &MonadInstance<C>,
    t: &MonadInstance<C>,
    nt: &MonadInstance<C>,
    left: &Universe<B>,
    right: &Universe<C>,
) -> Result<LawReport, CatError> {
    ensure_same_category(a, n)?;
    ensure_same_category(a, t)?;
    ensure_same_category(a, nt)?;
    for (name, y) in &right.objects {
        let ty = t.endo.obj(y)?;
        if !a.right_cat().is_iso(&a.counit.at(&ty)?) {
            return Err(CatError::HypothesisFailed { witness: name.clone() });
        }
    }
    let (ln, lt, lnt) = (lift_monad(a, n)?, lift_monad(a, t)?, lift_monad(a, nt)?);
    let b = a.left_cat();
    let mut rep = LawReport::new();
    for (name, y) in &right.objects {
        let composite = (|| Ok::<_, CatError>(nt.endo.obj(y)? == n.endo.obj(&t.endo.obj(y)?)?))();
        let outcome = match composite {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail(format!("{} differs from N(T(-))", nt.name)),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        rep.push(name, "composite-endofunctor", outcome);
    }
    let phi = |x: &B::Obj| -> Result<B::Mor, CatError> {
        let tlx = t.endo.obj(&a.left.obj(x)?)?;
        a.right.mor(&n.endo.mor(&a.counit.at(&tlx)?)?)
    };
    for (name, x) in &left.objects {
        let outcome = outcome_of(
            (|| {
                let p = phi(x)?;
                let src = ln.endo.obj(&lt.endo.obj(x)?)?;
                let tgt = lnt.endo.obj(x)?;
                if b.dom(&p) != src || b.cod(&p) != tgt {
                    return Ok(Outcome::Fail(format!("φ has the wrong type: {}", b.describe_mor(&p))));
                }
                Ok(if b.is_iso(&p) {
                    Outcome::Pass
                } else {
                    Outcome::Fail(format!("φ = {} is not invertible", b.describe_mor(&p)))
                })
            })(),
            "φ",
        );
        rep.push(name, "lift-composite-iso", outcome);
    }
    for (name, f) in &left.morphisms {
        let (x, y) = (b.dom(f), b.cod(f));
        let lhs = phi(&y).and_then(|py| b.compose(&py, &ln.endo.mor(&lt.endo.mor(f)?)?));
        let rhs = phi(&x).and_then(|px| b.compose(&lnt.endo.mor(f)?, &px));
        rep.push(
            name,
            "lift-composite-naturality",
            compare(b, "φ∘𝔏N𝔏T(f) = 𝔏(NT)(f)∘φ", lhs, rhs),
        );
    }
    Ok(rep)
}

/// Idempotence up to iso: every `m_X` is invertible.
pub fn check_idempotent<C: Category>(t: &MonadInstance<C>, u: &Universe<C>) -> LawReport {
    let c = t.cat();
    let mut rep = LawReport::new();
    for (name, x) in &u.objects {
        let outcome = match t.mult.at(x) {
            Ok(m) if c.is_iso(&m) => Outcome::Pass,
            Ok(m) => Outcome::Fail(format!("m = {} is not invertible", c.describe_mor(&m))),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        rep.push(name, "idempotent", outcome);
    }
    rep
}

// ---------------------------------------------------------------------------
// Powerset posets and c-initiality

/// The subsets of a finite carrier ordered by inclusion, as a thin category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetPoset {
    pub labels: Vec<String>,
}

/// An inclusion `from ⊆ to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inclusion {
    pub from: Mask,
    pub to: Mask,
}

impl PowersetPoset {
    pub fn new(labels: Vec<String>) -> Self {
        PowersetPoset { labels }
    }

    pub fn all(&self) -> Mask {
        bits::full(self.labels.len())
    }

    pub fn inclusion(&self, from: Mask, to: Mask) -> Result<Inclusion, CatError> {
        if bits::is_subset(from, to) && bits::is_subset(to, self.all()) {
            Ok(Inclusion { from, to })
        } else {
            Err(CatError::Evaluation(format!(
                "{} ⊄ {}",
                bits::render(from, &self.labels),
                bits::render(to, &self.labels)
            )))
        }
    }

    /// Every subset and every inclusion.
    pub fn universe(&self) -> Universe<PowersetPoset> {
        let mut u = Universe::new(self.clone());
        for s in 0..=self.all() {
            u.add_object(bits::render(s, &self.labels), s);
        }
        for a in 0..=self.all() {
            for b in 0..=self.all() {
                if bits::is_subset(a, b) {
                    let name = format!("{}⊆{}", bits::render(a, &self.labels), bits::render(b, &self.labels));
                    u.add_morphism(name, Inclusion { from: a, to: b });
                }
            }
        }
        u
    }
}

impl Category for PowersetPoset {
    type Obj = Mask;
    type Mor = Inclusion;

    fn name(&self) -> String {
        format!("P{}", bits::render(self.all(), &self.labels))
    }
    fn dom(&self, f: &Inclusion) -> Mask {
        f.from
    }
    fn cod(&self, f: &Inclusion) -> Mask {
        f.to
    }
    fn identity(&self, x: &Mask) -> Inclusion {
        Inclusion { from: *x, to: *x }
    }
    fn compose(&self, g: &Inclusion, f: &Inclusion) -> Result<Inclusion, CatError> {
        if f.to != g.from {
            return Err(CatError::NotComposable {
                outer: self.describe_mor(g),
                inner: self.describe_mor(f),
            });
        }
        Ok(Inclusion { from: f.from, to: g.to })
    }
    fn inverse(&self, f: &Inclusion) -> Option<Inclusion> {
        (f.from == f.to).then_some(*f)
    }
    fn describe_obj(&self, x: &Mask) -> String {
        bits::render(*x, &self.labels)
    }
    fn describe_mor(&self, f: &Inclusion) -> String {
        format!("{}⊆{}", self.describe_obj(&f.from), self.describe_obj(&f.to))
    }
}

/// Kuratowski closure of a space as an idempotent monad on its powerset.
pub fn closure_monad(x: &Arc<crate::topspace::FinSpace>) -> MonadInstance<PowersetPoset> {
    let p = PowersetPoset::new(x.labels().to_vec());
    let (s1, s2) = (x.clone(), x.clone());
    let pc = p.clone();
    let endo = FunctorInstance::new(
        "c",
        p.clone(),
        p.clone(),
        move |a: &Mask| Ok(s1.closure(*a)),
        move |f: &Inclusion| pc.inclusion(s2.closure(f.from), s2.closure(f.to)),
    );
    let (s3, s4) = (x.clone(), x.clone());
    let (p3, p4) = (p.clone(), p.clone());
    MonadInstance {
        name: "c".into(),
        unit: NatTransInstance::new("e", FunctorInstance::identity(p.clone()), endo.clone(), move |a| {
            p3.inclusion(*a, s3.closure(*a))
        }),
        mult: NatTransInstance::new("m", endo.then(&endo), endo.clone(), move |a| {
            let c = s4.closure(*a);
            p4.inclusion(s4.closure(c), c)
        }),
        endo,
    }
}

/// Image ⊣ preimage along `f : X -> Y` between powerset posets.
pub fn image_preimage_adjunction(f: &ContinuousMap) -> AdjunctionInstance<PowersetPoset, PowersetPoset> {
    let px = PowersetPoset::new(f.source().labels().to_vec());
    let py = PowersetPoset::new(f.target().labels().to_vec());
    let (f1, f2, f3, f4, f5, f6) = (f.clone(), f.clone(), f.clone(), f.clone(), f.clone(), f.clone());
    let (py1, px1, px2, py2) = (py.clone(), px.clone(), px.clone(), py.clone());
    let left = FunctorInstance::new(
        "f₊",
        px.clone(),
        py.clone(),
        move |a: &Mask| Ok(f1.image(*a)),
        move |i: &Inclusion| py1.inclusion(f2.image(i.from), f2.image(i.to)),
    );
    let right = FunctorInstance::new(
        "f*",
        py.clone(),
        px.clone(),
        move |b: &Mask| Ok(f3.preimage(*b)),
        move |i: &Inclusion| px1.inclusion(f4.preimage(i.from), f4.preimage(i.to)),
    );
    let unit = NatTransInstance::new(
        "η",
        FunctorInstance::identity(px.clone()),
        left.then(&right),
        move |a| px2.inclusion(*a, f5.preimage(f5.image(*a))),
    );
    let counit = NatTransInstance::new(
        "ε",
        right.then(&left),
        FunctorInstance::identity(py.clone()),
        move |b| py2.inclusion(f6.image(f6.preimage(*b)), *b),
    );
    AdjunctionInstance {
        left,
        right,
        unit,
        counit,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureInitiality {
    /// `c_X = f*∘c_Y∘f₊` on every subset of `X`.
    pub c_initial: bool,
    /// The lifted operator is monotone, inflationary and idempotent.
    pub lifted_is_closure: bool,
    /// Monad laws of the lifted operator on the powerset of `X`.
    pub lifted_laws: LawReport,
    /// First subset where the two operators differ: `(A, c_X A, f*c_Y f₊ A)`.
    pub witness: Option<(String, String, String)>,
}

pub fn closure_initiality(f: &ContinuousMap) -> ClosureInitiality {
    let x = f.source().clone();
    let adj = image_preimage_adjunction(f);
    let cy = closure_monad(f.target());
    let lifted = lift_monad(&adj, &cy).expect("closure monad lives on the target powerset");
    let px = adj.left_cat().clone();
    let op = |a: Mask| lifted.endo.obj(&a).expect("lifted operator is total");

    let mut witness = None;
    for a in 0..=x.all() {
        if op(a) != x.closure(a) {
            witness = Some((
                px.describe_obj(&a),
                px.describe_obj(&x.closure(a)),
                px.describe_obj(&op(a)),
            ));
            break;
        }
    }
    let subsets = 0..=x.all();
    let inflationary = subsets.clone().all(|a| bits::is_subset(a, op(a)));
    let idempotent = subsets.clone().all(|a| op(op(a)) == op(a));
    let monotone = subsets.clone().all(|a| {
        subsets
            .clone()
            .filter(|&b| bits::is_subset(a, b))
            .all(|b| bits::is_subset(op(a), op(b)))
    });
    ClosureInitiality {
        c_initial: witness.is_none(),
        lifted_is_closure: inflationary && idempotent && monotone,
        lifted_laws: check_monad_laws(&lifted, &px.universe()),
        witness,
    }
}
