use std::collections::HashSet;

use norphism_core::nategory::{
    check_equivariance, check_expansiveness, check_monotone_homs, compose_witness, incompatibility,
    inexact_compose, Condition, DpInstance, ExactRule, HomSets, InexactRule, MorId, NorphismGeneric,
    OrderWitness, Violation,
};
use norphism_core::poset::Preorder;
use norphism_core::Side;

fn instance() -> DpInstance {
    DpInstance::build(&[Preorder::unit(), Preorder::chain(2)], 16).unwrap()
}

fn all_generic(inst: &DpInstance) -> Vec<NorphismGeneric> {
    let k = inst.spaces.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for n in inst.all_norphisms(a, b) {
                out.push(inst.wrap(&n).unwrap());
            }
        }
    }
    out
}

/// Adds a ban on the first unbanned morphism of every left composite.
struct SpuriousBan;

impl<C: HomSets + ?Sized> InexactRule<C> for SpuriousBan {
    type Nor = NorphismGeneric;

    fn hom_of(&self, n: &NorphismGeneric) -> (usize, usize) {
        n.hom()
    }

    fn incompatible(&self, cat: &C, n: &NorphismGeneric, f: MorId) -> bool {
        ExactRule.incompatible(cat, n, f)
    }

    fn left(&self, cat: &C, f: MorId, n: &NorphismGeneric) -> NorphismGeneric {
        let exact = ExactRule.left(cat, f, n);
        let (a, b) = exact.hom();
        let mut banned = exact.banned().to_vec();
        if let Some(slot) = banned.iter_mut().find(|b| !**b) {
            *slot = true;
        }
        NorphismGeneric::new(cat, a, b, banned).unwrap()
    }

    fn right(&self, cat: &C, n: &NorphismGeneric, g: MorId) -> NorphismGeneric {
        ExactRule.right(cat, n, g)
    }
}

/// Forgets every ban after composition: equivariant but not exact.
struct DropBans;

impl<C: HomSets + ?Sized> InexactRule<C> for DropBans {
    type Nor = NorphismGeneric;

    fn hom_of(&self, n: &NorphismGeneric) -> (usize, usize) {
        n.hom()
    }

    fn incompatible(&self, cat: &C, n: &NorphismGeneric, f: MorId) -> bool {
        ExactRule.incompatible(cat, n, f)
    }

    fn left(&self, cat: &C, f: MorId, n: &NorphismGeneric) -> NorphismGeneric {
        NorphismGeneric::zero(cat, cat.cod(f), n.hom().1)
    }

    fn right(&self, cat: &C, n: &NorphismGeneric, g: MorId) -> NorphismGeneric {
        NorphismGeneric::zero(cat, n.hom().0, cat.dom(g))
    }
}

/// Straight double loop over all composable pairs, independent of the checker.
fn reference_violations<C: HomSets, R: InexactRule<C, Nor = NorphismGeneric>>(
    cat: &C,
    ns: &[NorphismGeneric],
    rule: &R,
) -> HashSet<Violation> {
    let mut out = HashSet::new();
    for (idx, n) in ns.iter().enumerate() {
        let (a, c) = n.hom();
        for b in 0..cat.object_count() {
            for &f in cat.hom(a, b) {
                for &g in cat.hom(b, c) {
                    let Some(fg) = cat.compose(f, g) else { continue };
                    let exact = n.banned()[cat.position(fg)];
                    let left = rule.left(cat, f, n);
                    let right = rule.right(cat, n, g);
                    if left.banned()[cat.position(g)] && !exact {
                        out.insert(Violation { norphism: idx, f, g, condition: Condition::Equiv1 });
                    }
                    if right.banned()[cat.position(f)] && !exact {
                        out.insert(Violation { norphism: idx, f, g, condition: Condition::Equiv2 });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn dp_instance_is_exact() {
    let inst = instance();
    let ns = all_generic(&inst);
    let report = check_equivariance(&inst.category, &ns, &ExactRule);
    assert!(report.passed());
    assert!(report.exact);
    assert_eq!(report.skipped, 0);
    assert!(report.checked > 0);
}

#[test]
fn spurious_ban_is_detected() {
    let inst = instance();
    let ns = all_generic(&inst);
    let report = check_equivariance(&inst.category, &ns, &SpuriousBan);
    assert!(!report.violations.is_empty());
    assert!(report.violations.iter().all(|v| v.condition == Condition::Equiv1));
    let got: HashSet<Violation> = report.violations.iter().cloned().collect();
    assert_eq!(got, reference_violations(&inst.category, &ns, &SpuriousBan));
}

#[test]
fn dropped_bans_pass_but_are_not_exact() {
    let inst = instance();
    let ns = all_generic(&inst);
    let report = check_equivariance(&inst.category, &ns, &DropBans);
    assert!(report.passed());
    assert!(!report.exact);
    assert!(reference_violations(&inst.category, &ns, &DropBans).is_empty());
}

#[test]
fn wrapping_preserves_incompatibility_and_propagation() {
    let inst = instance();
    let cat = &inst.category;
    let k = inst.spaces.len();
    for a in 0..k {
        for c in 0..k {
            for n in inst.all_norphisms(a, c) {
                let w = inst.wrap(&n).unwrap();
                for &m in cat.hom(a, c) {
                    assert_eq!(incompatibility(cat, &w, m).unwrap(), n.bans(&inst.morphisms[m]).unwrap());
                }
                for b in 0..k {
                    for &f in cat.hom(a, b) {
                        let lib = n.propagate(&inst.morphisms[f], Side::Pre).unwrap();
                        let generic = inexact_compose(cat, f, &w, Side::Pre).unwrap();
                        assert_eq!(inst.wrap(&lib).unwrap(), generic);
                    }
                    for &g in cat.hom(b, c) {
                        let lib = n.propagate(&inst.morphisms[g], Side::Post).unwrap();
                        let generic = inexact_compose(cat, g, &w, Side::Post).unwrap();
                        assert_eq!(inst.wrap(&lib).unwrap(), generic);
                    }
                }
            }
        }
    }
}

#[test]
fn every_dp_norphism_is_expansive() {
    let inst = instance();
    let order = inst.hom_preorder();
    for n in all_generic(&inst) {
        assert!(check_expansiveness(&n, &order));
    }
    assert!(check_monotone_homs(&inst.category, &order));
}

#[test]
fn composed_witnesses_are_valid() {
    let inst = instance();
    let cat = &inst.category;
    let order = inst.hom_preorder();
    let k = inst.spaces.len();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for &f in cat.hom(a, b) {
                    for &g in cat.hom(a, b) {
                        let Ok(w1) = order.witness(cat, f, g) else { continue };
                        for &h in cat.hom(b, c) {
                            for &j in cat.hom(b, c) {
                                let Ok(w2) = order.witness(cat, h, j) else { continue };
                                let w = compose_witness(cat, &order, w1, w2).unwrap();
                                assert_eq!(w.lower(), cat.comp(f, h));
                                assert_eq!(w.upper(), cat.comp(g, j));
                                assert!(inst.morphisms[w.lower()].leq(&inst.morphisms[w.upper()]).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
    let id = cat.identity(0);
    assert_eq!(OrderWitness::reflexive(id).lower(), id);
}

#[test]
fn non_expansive_predicate_is_flagged() {
    let inst = instance();
    let cat = &inst.category;
    let order = inst.hom_preorder();
    let c2 = 1;
    // ban exactly the least element of the 2-chain endomorphisms
    let least = cat
        .hom(c2, c2)
        .iter()
        .copied()
        .find(|&f| cat.hom(c2, c2).iter().all(|&g| order.leq(cat, f, g)))
        .unwrap();
    let n = NorphismGeneric::from_predicate(cat, c2, c2, |f| f == least);
    assert!(!check_expansiveness(&n, &order));
}
