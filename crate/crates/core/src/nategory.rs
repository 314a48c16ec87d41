//! Finite categories with norphisms.
//!
//! Norphisms are stored extensionally as Boolean vectors over a finite
//! hom-set (their curried form `Hom(a, b) -> 2`, with `true` meaning banned).
//! Inexact composition is supplied by an [`InexactRule`]; [`ExactRule`]
//! transports bans along composition and is the default. The checkers here
//! enumerate every quadruple `(n, f, g)` and report violations as data.

use std::collections::HashMap;

use crate::dp::{self, DesignProblem};
use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;
use crate::norphism::NorphismDP;
use crate::poset::{Direction, Preorder};
use crate::Side;

pub type MorId = usize;

/// Finite hom-sets with (possibly partial) composition.
///
/// `compose` returns `None` only for composites that fall outside the
/// materialized hom-sets, as with length-capped path categories.
pub trait HomSets {
    fn object_count(&self) -> usize;
    fn hom(&self, a: usize, b: usize) -> &[MorId];
    fn dom(&self, f: MorId) -> usize;
    fn cod(&self, f: MorId) -> usize;
    /// Position of `f` inside `hom(dom(f), cod(f))`.
    fn position(&self, f: MorId) -> usize;
    fn compose(&self, f: MorId, g: MorId) -> Option<MorId>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    positions: Vec<usize>,
    homs: Vec<Vec<Vec<MorId>>>,
    identities: Vec<MorId>,
    // dense table, `comp[f * n + g]`
    comp: Vec<Option<MorId>>,
}

impl FiniteCategory {
    /// Builds a category from explicit tables and verifies every axiom.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        identities: Vec<MorId>,
        comp: &HashMap<(MorId, MorId), MorId>,
    ) -> Result<Self> {
        Self::from_fn(objects, morphisms, identities, |f, g| comp.get(&(f, g)).copied())
    }

    /// As [`FiniteCategory::new`], with composition given by a function.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        identities: Vec<MorId>,
        comp: impl Fn(MorId, MorId) -> Option<MorId>,
    ) -> Result<Self> {
        let no = objects.len();
        let nm = morphisms.len();
        let mut homs = vec![vec![Vec::new(); no]; no];
        let mut positions = Vec::with_capacity(nm);
        for (id, m) in morphisms.iter().enumerate() {
            if m.dom >= no || m.cod >= no {
                return Err(Error::Axiom(format!("morphism `{}` has a dangling endpoint", m.name)));
            }
            positions.push(homs[m.dom][m.cod].len());
            homs[m.dom][m.cod].push(id);
        }
        if identities.len() != no {
            return Err(Error::Axiom(format!(
                "expected {no} identities, found {}",
                identities.len()
            )));
        }
        for (a, &id) in identities.iter().enumerate() {
            if id >= nm {
                return Err(Error::Axiom(format!("dangling identity id {id}")));
            }
            if morphisms[id].dom != a || morphisms[id].cod != a {
                return Err(Error::Axiom(format!(
                    "identity `{}` is not an endomorphism of `{}`",
                    morphisms[id].name, objects[a]
                )));
            }
        }
        let mut table = vec![None; nm * nm];
        for f in 0..nm {
            for g in 0..nm {
                if morphisms[f].cod != morphisms[g].dom {
                    continue;
                }
                let h = comp(f, g).ok_or_else(|| {
                    Error::Axiom(format!(
                        "composition undefined for ({}, {})",
                        morphisms[f].name, morphisms[g].name
                    ))
                })?;
                if h >= nm {
                    return Err(Error::Axiom(format!("dangling composite id {h}")));
                }
                if morphisms[h].dom != morphisms[f].dom || morphisms[h].cod != morphisms[g].cod {
                    return Err(Error::Axiom(format!(
                        "composite of ({}, {}) is ill-typed",
                        morphisms[f].name, morphisms[g].name
                    )));
                }
                table[f * nm + g] = Some(h);
            }
        }
        let cat = Self {
            objects,
            morphisms,
            positions,
            homs,
            identities,
            comp: table,
        };
        cat.check_axioms()?;
        Ok(cat)
    }

    fn check_axioms(&self) -> Result<()> {
        let nm = self.morphisms.len();
        for f in 0..nm {
            let (a, b) = (self.morphisms[f].dom, self.morphisms[f].cod);
            if self.comp(self.identities[a], f) != f || self.comp(f, self.identities[b]) != f {
                return Err(Error::Axiom(format!("unit law fails at `{}`", self.morphisms[f].name)));
            }
        }
        for f in 0..nm {
            for g in self.out_of(self.morphisms[f].cod) {
                let fg = self.comp(f, g);
                for h in self.out_of(self.morphisms[g].cod) {
                    if self.comp(fg, h) != self.comp(f, self.comp(g, h)) {
                        return Err(Error::Axiom(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[f].name, self.morphisms[g].name, self.morphisms[h].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn out_of(&self, a: usize) -> impl Iterator<Item = MorId> + '_ {
        (0..self.objects.len()).flat_map(move |b| self.homs[a][b].iter().copied())
    }

    /// Total composition; panics on a non-composable pair.
    pub fn comp(&self, f: MorId, g: MorId) -> MorId {
        self.comp[f * self.morphisms.len() + g].expect("composable pair")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismDecl] {
        &self.morphisms
    }

    pub fn identity(&self, a: usize) -> MorId {
        self.identities[a]
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }
}

impl HomSets for FiniteCategory {
    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn hom(&self, a: usize, b: usize) -> &[MorId] {
        &self.homs[a][b]
    }

    fn dom(&self, f: MorId) -> usize {
        self.morphisms[f].dom
    }

    fn cod(&self, f: MorId) -> usize {
        self.morphisms[f].cod
    }

    fn position(&self, f: MorId) -> usize {
        self.positions[f]
    }

    fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.comp[f * self.morphisms.len() + g]
    }
}

/// A preorder on each hom-set, indexed by position within the hom-set.
#[derive(Clone, Debug)]
pub struct HomPreorder {
    orders: Vec<Vec<Preorder>>,
}

/// Evidence that `lower <= upper` within one hom-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderWitness {
    lower: MorId,
    upper: MorId,
}

impl OrderWitness {
    pub fn reflexive(f: MorId) -> Self {
        Self { lower: f, upper: f }
    }

    pub fn lower(&self) -> MorId {
        self.lower
    }

    pub fn upper(&self) -> MorId {
        self.upper
    }
}

impl HomPreorder {
    /// Only reflexive pairs.
    pub fn discrete<C: HomSets + ?Sized>(cat: &C) -> Self {
        Self::from_fn(cat, |f, g| f == g).expect("equality is a preorder")
    }

    /// Order given by `leq(f, g)` on each hom-set; fails unless every
    /// hom-set order is reflexive and transitive.
    pub fn from_fn<C: HomSets + ?Sized>(cat: &C, leq: impl Fn(MorId, MorId) -> bool) -> Result<Self> {
        let n = cat.object_count();
        let mut orders = Vec::with_capacity(n);
        for a in 0..n {
            let mut row = Vec::with_capacity(n);
            for b in 0..n {
                let hom = cat.hom(a, b);
                let m = BoolMatrix::from_fn(hom.len(), hom.len(), |i, j| leq(hom[i], hom[j]));
                let names = hom.iter().map(|f| f.to_string()).collect();
                row.push(Preorder::from_matrix(names, m)?);
            }
            orders.push(row);
        }
        Ok(Self { orders })
    }

    pub fn order(&self, a: usize, b: usize) -> &Preorder {
        &self.orders[a][b]
    }

    pub fn leq<C: HomSets + ?Sized>(&self, cat: &C, f: MorId, g: MorId) -> bool {
        let (a, b) = (cat.dom(f), cat.cod(f));
        (cat.dom(g), cat.cod(g)) == (a, b) && self.orders[a][b].leq(cat.position(f), cat.position(g))
    }

    /// A witness for `f <= g`, if one exists.
    pub fn witness<C: HomSets + ?Sized>(&self, cat: &C, f: MorId, g: MorId) -> Result<OrderWitness> {
        if (cat.dom(f), cat.cod(f)) != (cat.dom(g), cat.cod(g)) {
            return Err(Error::WrongHomSet(g));
        }
        if !self.leq(cat, f, g) {
            return Err(Error::NotMonotoneComposition(format!("{f} is not below {g}")));
        }
        Ok(OrderWitness { lower: f, upper: g })
    }
}

/// From `f <= g` in `C(a, b)` and `k <= h` in `C(b, c)`, the witness
/// `f;k <= g;h` in `C(a, c)`.
pub fn compose_witness<C: HomSets + ?Sized>(
    cat: &C,
    order: &HomPreorder,
    w1: OrderWitness,
    w2: OrderWitness,
) -> Result<OrderWitness> {
    if cat.cod(w1.lower) != cat.dom(w2.lower) {
        return Err(Error::ObjectMismatch(format!(
            "witnesses on ({}, {}) and ({}, {}) are not composable",
            cat.dom(w1.lower),
            cat.cod(w1.lower),
            cat.dom(w2.lower),
            cat.cod(w2.lower)
        )));
    }
    let missing = |f, g| Error::BrokenPath(format!("composite of {f} and {g} is not materialized"));
    let lower = cat.compose(w1.lower, w2.lower).ok_or_else(|| missing(w1.lower, w2.lower))?;
    let upper = cat.compose(w1.upper, w2.upper).ok_or_else(|| missing(w1.upper, w2.upper))?;
    if !order.leq(cat, lower, upper) {
        return Err(Error::NotMonotoneComposition(format!(
            "{lower} = {};{} is not below {upper} = {};{}",
            w1.lower, w2.lower, w1.upper, w2.upper
        )));
    }
    Ok(OrderWitness { lower, upper })
}

/// First `(f, g, k)` breaking monotonicity of composition: either
/// `f <= g` but not `f;k <= g;k`, or `f <= g` but not `k;f <= k;g`.
pub fn find_monotone_violation<C: HomSets + ?Sized>(
    cat: &C,
    order: &HomPreorder,
) -> Option<(MorId, MorId, MorId)> {
    let n = cat.object_count();
    for a in 0..n {
        for b in 0..n {
            let hom = cat.hom(a, b);
            for &f in hom {
                for &g in hom {
                    if f == g || !order.leq(cat, f, g) {
                        continue;
                    }
                    for c in 0..n {
                        for &k in cat.hom(b, c) {
                            if let (Some(fk), Some(gk)) = (cat.compose(f, k), cat.compose(g, k)) {
                                if !order.leq(cat, fk, gk) {
                                    return Some((f, g, k));
                                }
                            }
                        }
                        for &k in cat.hom(c, a) {
                            if let (Some(kf), Some(kg)) = (cat.compose(k, f), cat.compose(k, g)) {
                                if !order.leq(cat, kf, kg) {
                                    return Some((f, g, k));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn check_monotone_homs<C: HomSets + ?Sized>(cat: &C, order: &HomPreorder) -> bool {
    find_monotone_violation(cat, order).is_none()
}

/// A curried norphism: one ban flag per morphism of `hom(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NorphismGeneric {
    dom: usize,
    cod: usize,
    banned: Vec<bool>,
}

impl NorphismGeneric {
    pub fn new<C: HomSets + ?Sized>(cat: &C, dom: usize, cod: usize, banned: Vec<bool>) -> Result<Self> {
        let len = cat.hom(dom, cod).len();
        if banned.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: banned.len(),
            });
        }
        Ok(Self { dom, cod, banned })
    }

    pub fn zero<C: HomSets + ?Sized>(cat: &C, dom: usize, cod: usize) -> Self {
        Self {
            dom,
            cod,
            banned: vec![false; cat.hom(dom, cod).len()],
        }
    }

    /// Materializes a predicate over `hom(dom, cod)`.
    pub fn from_predicate<C: HomSets + ?Sized>(
        cat: &C,
        dom: usize,
        cod: usize,
        pred: impl Fn(MorId) -> bool,
    ) -> Self {
        Self {
            dom,
            cod,
            banned: cat.hom(dom, cod).iter().map(|&f| pred(f)).collect(),
        }
    }

    pub fn hom(&self) -> (usize, usize) {
        (self.dom, self.cod)
    }

    pub fn banned(&self) -> &[bool] {
        &self.banned
    }

    pub fn banned_count(&self) -> usize {
        self.banned.iter().filter(|&&b| b).count()
    }
}

/// `i(n, f)`: whether `n` bans `f`.
pub fn incompatibility<C: HomSets + ?Sized>(cat: &C, n: &NorphismGeneric, f: MorId) -> Result<bool> {
    if (cat.dom(f), cat.cod(f)) != n.hom() {
        return Err(Error::WrongHomSet(f));
    }
    Ok(n.banned[cat.position(f)])
}

/// Default inexact composition for the exact rule.
///
/// * `Side::Pre` with `x = f : a -> b` and `n` on `(a, c)`: bans `g : b -> c`
///   iff `n` bans `f;g` (the `f . n` composite).
/// * `Side::Post` with `x = g : b -> c` and `n` on `(a, c)`: bans `f : a -> b`
///   iff `n` bans `f;g`.
pub fn inexact_compose<C: HomSets + ?Sized>(
    cat: &C,
    x: MorId,
    n: &NorphismGeneric,
    side: Side,
) -> Result<NorphismGeneric> {
    let (a, c) = n.hom();
    match side {
        Side::Pre => {
            if cat.dom(x) != a {
                return Err(Error::WrongHomSet(x));
            }
            Ok(ExactRule.left(cat, x, n))
        }
        Side::Post => {
            if cat.cod(x) != c {
                return Err(Error::WrongHomSet(x));
            }
            Ok(ExactRule.right(cat, n, x))
        }
    }
}

/// Inexact composition of morphisms with norphisms.
pub trait InexactRule<C: HomSets + ?Sized> {
    type Nor;

    fn hom_of(&self, n: &Self::Nor) -> (usize, usize);

    fn incompatible(&self, cat: &C, n: &Self::Nor, f: MorId) -> bool;

    /// `f . n` for `f : a -> b`, `n` on `(a, c)`; a norphism on `(b, c)`.
    fn left(&self, cat: &C, f: MorId, n: &Self::Nor) -> Self::Nor;

    /// `n -o g` for `n` on `(a, c)`, `g : b -> c`; a norphism on `(a, b)`.
    fn right(&self, cat: &C, n: &Self::Nor, g: MorId) -> Self::Nor;
}

/// Transports bans exactly along composition. Composites outside the
/// materialized hom-sets are never banned.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactRule;

impl<C: HomSets + ?Sized> InexactRule<C> for ExactRule {
    type Nor = NorphismGeneric;

    fn hom_of(&self, n: &NorphismGeneric) -> (usize, usize) {
        n.hom()
    }

    fn incompatible(&self, cat: &C, n: &NorphismGeneric, f: MorId) -> bool {
        n.banned[cat.position(f)]
    }

    fn left(&self, cat: &C, f: MorId, n: &NorphismGeneric) -> NorphismGeneric {
        let (_, c) = n.hom();
        NorphismGeneric::from_predicate(cat, cat.cod(f), c, |g| {
            cat.compose(f, g).is_some_and(|fg| n.banned[cat.position(fg)])
        })
    }

    fn right(&self, cat: &C, n: &NorphismGeneric, g: MorId) -> NorphismGeneric {
        let (a, _) = n.hom();
        NorphismGeneric::from_predicate(cat, a, cat.dom(g), |f| {
            cat.compose(f, g).is_some_and(|fg| n.banned[cat.position(fg)])
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `i(f . n, g) => i(n, f;g)`
    Equiv1,
    /// `i(n -o g, f) => i(n, f;g)`
    Equiv2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub norphism: usize,
    pub f: MorId,
    pub g: MorId,
    pub condition: Condition,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub violations: Vec<Violation>,
    /// Both conditions hold with equality on every checked pair.
    pub exact: bool,
    /// Checked `(n, f, g)` triples.
    pub checked: usize,
    /// Triples whose composite `f;g` lies outside the materialized hom-sets.
    pub skipped: usize,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both equivariance conditions for every norphism, every
/// intermediate object `b`, and every `f : a -> b`, `g : b -> c`.
pub fn check_equivariance<C, R>(cat: &C, norphisms: &[R::Nor], rule: &R) -> EquivarianceReport
where
    C: HomSets + ?Sized,
    R: InexactRule<C>,
{
    let mut report = EquivarianceReport {
        exact: true,
        ..Default::default()
    };
    for (idx, n) in norphisms.iter().enumerate() {
        let (a, c) = rule.hom_of(n);
        for b in 0..cat.object_count() {
            let fs = cat.hom(a, b);
            let gs = cat.hom(b, c);
            if fs.is_empty() || gs.is_empty() {
                continue;
            }
            let lefts: Vec<R::Nor> = fs.iter().map(|&f| rule.left(cat, f, n)).collect();
            let rights: Vec<R::Nor> = gs.iter().map(|&g| rule.right(cat, n, g)).collect();
            for (fi, &f) in fs.iter().enumerate() {
                for (gi, &g) in gs.iter().enumerate() {
                    let Some(fg) = cat.compose(f, g) else {
                        report.skipped += 1;
                        continue;
                    };
                    report.checked += 1;
                    let exact = rule.incompatible(cat, n, fg);
                    let via_left = rule.incompatible(cat, &lefts[fi], g);
                    let via_right = rule.incompatible(cat, &rights[gi], f);
                    if via_left && !exact {
                        report.violations.push(Violation {
                            norphism: idx,
                            f,
                            g,
                            condition: Condition::Equiv1,
                        });
                    }
                    if via_right && !exact {
                        report.violations.push(Violation {
                            norphism: idx,
                            f,
                            g,
                            condition: Condition::Equiv2,
                        });
                    }
                    if via_left != exact || via_right != exact {
                        report.exact = false;
                    }
                }
            }
        }
    }
    report
}

/// Whether the banned set is upward-closed in the hom-set order.
pub fn check_expansiveness(n: &NorphismGeneric, order: &HomPreorder) -> bool {
    let (a, b) = n.hom();
    order.order(a, b).is_closed(&n.banned, Direction::Upward)
}

/// Largest instance whose composition table is materialized.
pub const MAX_INSTANCE_MORPHISMS: usize = 512;

/// The design-problem category restricted to finitely many preorders, with
/// every hom-set enumerated.
#[derive(Clone, Debug)]
pub struct DpInstance {
    pub spaces: Vec<Preorder>,
    pub category: FiniteCategory,
    pub morphisms: Vec<DesignProblem>,
    index: HashMap<DesignProblem, MorId>,
}

impl DpInstance {
    /// Enumerates all design problems between the given spaces (each hom-set
    /// under `cell_cap`) and checks the category axioms on the result.
    pub fn build(spaces: &[Preorder], cell_cap: usize) -> Result<Self> {
        for (i, p) in spaces.iter().enumerate() {
            if spaces[..i].contains(p) {
                return Err(Error::DuplicateElement(format!("object #{i}")));
            }
        }
        let mut morphisms = Vec::new();
        let mut decls = Vec::new();
        for (a, p) in spaces.iter().enumerate() {
            for (b, q) in spaces.iter().enumerate() {
                for (k, d) in dp::enumerate_design_problems_capped(p, q, cell_cap)?
                    .into_iter()
                    .enumerate()
                {
                    decls.push(MorphismDecl {
                        name: format!("d{a}_{b}_{k}"),
                        dom: a,
                        cod: b,
                    });
                    morphisms.push(d);
                }
            }
        }
        if morphisms.len() > MAX_INSTANCE_MORPHISMS {
            return Err(Error::CapExceeded {
                what: "design-problem instance",
                size: morphisms.len(),
                cap: MAX_INSTANCE_MORPHISMS,
            });
        }
        let index: HashMap<DesignProblem, MorId> =
            morphisms.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let identities = spaces
            .iter()
            .map(|p| index[&DesignProblem::identity(p)])
            .collect();
        let objects = (0..spaces.len()).map(|i| format!("P{i}")).collect();
        let category = FiniteCategory::from_fn(objects, decls, identities, |f, g| {
            morphisms[f]
                .compose(&morphisms[g])
                .ok()
                .and_then(|h| index.get(&h).copied())
        })?;
        Ok(Self {
            spaces: spaces.to_vec(),
            category,
            morphisms,
            index,
        })
    }

    pub fn object_of(&self, p: &Preorder) -> Result<usize> {
        self.spaces
            .iter()
            .position(|s| s == p)
            .ok_or_else(|| Error::ObjectMismatch(format!("{:?} is not an object", p.elements())))
    }

    pub fn id_of(&self, d: &DesignProblem) -> Result<MorId> {
        self.index
            .get(d)
            .copied()
            .ok_or_else(|| Error::ObjectMismatch("design problem outside the instance".into()))
    }

    /// Pointwise order on every hom-set.
    pub fn hom_preorder(&self) -> HomPreorder {
        HomPreorder::from_fn(&self.category, |f, g| {
            self.morphisms[f].rel().le(self.morphisms[g].rel())
        })
        .expect("pointwise order is a preorder")
    }

    /// Wraps a design-problem norphism as its curried ban predicate.
    pub fn wrap(&self, n: &NorphismDP) -> Result<NorphismGeneric> {
        let a = self.object_of(n.dom())?;
        let b = self.object_of(n.cod())?;
        Ok(NorphismGeneric::from_predicate(&self.category, a, b, |f| {
            n.rel().overlaps(self.morphisms[f].rel())
        }))
    }

    /// Every norphism on `(a, b)`.
    pub fn all_norphisms(&self, a: usize, b: usize) -> Vec<NorphismDP> {
        let (p, q) = (&self.spaces[a], &self.spaces[b]);
        p.opposite()
            .product(q)
            .closed_vectors(Direction::Downward)
            .into_iter()
            .map(|v| {
                NorphismDP::new(p.clone(), q.clone(), BoolMatrix::from_fn(p.len(), q.len(), |i, j| v[i * q.len() + j]))
                    .expect("downward-closed covector is a norphism")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_object() -> FiniteCategory {
        let decls = vec![MorphismDecl {
            name: "id".into(),
            dom: 0,
            cod: 0,
        }];
        let comp = HashMap::from([((0, 0), 0)]);
        FiniteCategory::new(vec!["a".into()], decls, vec![0], &comp).unwrap()
    }

    /// Objects a, b; morphisms id_a, id_b, u, v : a -> b.
    fn parallel_pair(comp_override: Option<((MorId, MorId), MorId)>) -> Result<FiniteCategory> {
        let decl = |name: &str, dom, cod| MorphismDecl {
            name: name.into(),
            dom,
            cod,
        };
        let decls = vec![decl("id_a", 0, 0), decl("id_b", 1, 1), decl("u", 0, 1), decl("v", 0, 1)];
        let mut comp = HashMap::from([
            ((0, 0), 0),
            ((1, 1), 1),
            ((0, 2), 2),
            ((0, 3), 3),
            ((2, 1), 2),
            ((3, 1), 3),
        ]);
        if let Some((k, v)) = comp_override {
            comp.insert(k, v);
        }
        FiniteCategory::new(vec!["a".into(), "b".into()], decls, vec![0, 1], &comp)
    }

    #[test]
    fn trivial_category() {
        let c = one_object();
        assert_eq!(c.morphism_count(), 1);
        assert_eq!(c.comp(0, 0), 0);
    }

    #[test]
    fn corrupted_tables_rejected() {
        assert!(parallel_pair(None).is_ok());
        let err = parallel_pair(Some(((0, 2), 3))).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("unit law")), "{err}");
        let err = FiniteCategory::new(
            vec!["a".into()],
            vec![MorphismDecl {
                name: "id".into(),
                dom: 0,
                cod: 3,
            }],
            vec![0],
            &HashMap::new(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("dangling")));
    }

    #[test]
    fn associativity_violation_reports_triple() {
        // one object, morphisms id, x, y with x;x = y, x;y = x, y;x = y, y;y = y
        let decls = ["id", "x", "y"]
            .iter()
            .map(|n| MorphismDecl {
                name: n.to_string(),
                dom: 0,
                cod: 0,
            })
            .collect();
        let mut comp = HashMap::new();
        for f in 0..3 {
            comp.insert((0, f), f);
            comp.insert((f, 0), f);
        }
        comp.insert((1, 1), 2);
        comp.insert((1, 2), 1);
        comp.insert((2, 1), 2);
        comp.insert((2, 2), 2);
        let err = FiniteCategory::new(vec!["a".into()], decls, vec![0], &comp).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("associativity")), "{err}");
    }

    #[test]
    fn witnesses_and_monotonicity() {
        let c = parallel_pair(None).unwrap();
        let order = HomPreorder::from_fn(&c, |f, g| f == g || (f, g) == (2, 3)).unwrap();
        assert!(check_monotone_homs(&c, &order));
        let w = order.witness(&c, 2, 3).unwrap();
        let w2 = compose_witness(&c, &order, w, OrderWitness::reflexive(1)).unwrap();
        assert_eq!((w2.lower(), w2.upper()), (2, 3));
        let id = compose_witness(&c, &order, OrderWitness::reflexive(0), OrderWitness::reflexive(0)).unwrap();
        assert_eq!(id, OrderWitness::reflexive(0));
        assert!(order.witness(&c, 3, 2).is_err());
        assert!(compose_witness(&c, &order, w, OrderWitness::reflexive(0)).is_err());
        assert!(check_monotone_homs(&c, &HomPreorder::discrete(&c)));
    }

    #[test]
    fn expansiveness_checks() {
        let c = parallel_pair(None).unwrap();
        let order = HomPreorder::from_fn(&c, |f, g| f == g || (f, g) == (2, 3)).unwrap();
        let good = NorphismGeneric::new(&c, 0, 1, vec![false, true]).unwrap();
        let bad = NorphismGeneric::new(&c, 0, 1, vec![true, false]).unwrap();
        assert!(check_expansiveness(&good, &order));
        assert!(!check_expansiveness(&bad, &order));
        assert!(check_expansiveness(&bad, &HomPreorder::discrete(&c)));
        assert!(NorphismGeneric::new(&c, 0, 1, vec![true]).is_err());
    }

    #[test]
    fn incompatibility_lookup() {
        let c = parallel_pair(None).unwrap();
        let z = NorphismGeneric::zero(&c, 0, 1);
        assert!(!incompatibility(&c, &z, 2).unwrap());
        let n = NorphismGeneric::new(&c, 0, 1, vec![false, true]).unwrap();
        assert!(incompatibility(&c, &n, 3).unwrap());
        assert_eq!(incompatibility(&c, &n, 0).unwrap_err(), Error::WrongHomSet(0));
    }

    #[test]
    fn exact_rule_on_parallel_pair() {
        let c = parallel_pair(None).unwrap();
        let n = NorphismGeneric::new(&c, 0, 1, vec![false, true]).unwrap();
        let left = inexact_compose(&c, 0, &n, Side::Pre).unwrap();
        assert_eq!(left, n);
        let right = inexact_compose(&c, 1, &n, Side::Post).unwrap();
        assert_eq!(right, n);
        assert!(inexact_compose(&c, 1, &n, Side::Pre).is_err());
        let report = check_equivariance(&c, &[n], &ExactRule);
        assert!(report.passed() && report.exact);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn dp_instance_over_unit_and_chain() {
        let inst = DpInstance::build(&[Preorder::unit(), Preorder::chain(2)], 16).unwrap();
        assert_eq!(inst.category.morphism_count(), 2 + 3 + 3 + 6);
        let order = inst.hom_preorder();
        assert!(check_monotone_homs(&inst.category, &order));
    }
}
