use norphism_core::dp::{self, enumerate_design_problems, DesignProblem, FVector, RCovector};
use norphism_core::gen;
use norphism_core::poset::{Direction, Preorder};
use proptest::prelude::*;

fn small_spaces() -> Vec<Preorder> {
    vec![Preorder::unit(), Preorder::chain(2), Preorder::antichain(2)]
}

#[test]
fn category_axioms_exhaustive_small() {
    let spaces = small_spaces();
    for p in &spaces {
        for q in &spaces {
            for d in enumerate_design_problems(p, q).unwrap() {
                assert_eq!(DesignProblem::identity(p).compose(&d).unwrap(), d);
                assert_eq!(d.compose(&DesignProblem::identity(q)).unwrap(), d);
            }
        }
    }
    for p in &spaces {
        for q in &spaces {
            let ds = enumerate_design_problems(p, q).unwrap();
            for r in &spaces {
                let es = enumerate_design_problems(q, r).unwrap();
                for s in &spaces {
                    let gs = enumerate_design_problems(r, s).unwrap();
                    for d in &ds {
                        for e in &es {
                            let de = d.compose(e).unwrap();
                            for g in &gs {
                                assert_eq!(
                                    de.compose(g).unwrap(),
                                    d.compose(&e.compose(g).unwrap()).unwrap()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Direct triple loop, independent of the matrix product.
fn brute_compose(d: &DesignProblem, e: &DesignProblem) -> Vec<Vec<bool>> {
    (0..d.dom().len())
        .map(|p| {
            (0..e.cod().len())
                .map(|r| (0..d.cod().len()).any(|q| d.get(p, q) && e.get(q, r)))
                .collect()
        })
        .collect()
}

#[test]
fn compose_matches_brute_force_and_stays_monotone() {
    let mut rng = gen::rng(11);
    for _ in 0..200 {
        let n = [3, 4];
        let ps: Vec<Preorder> = (0..3)
            .map(|i| gen::random_preorder(&mut rng, n[i % 2]))
            .collect();
        let d = gen::random_design_problem(&mut rng, &ps[0], &ps[1]);
        let e = gen::random_design_problem(&mut rng, &ps[1], &ps[2]);
        let de = d.compose(&e).unwrap();
        assert!(de.is_valid());
        let brute = brute_compose(&d, &e);
        for (p, row) in brute.iter().enumerate() {
            for (r, &v) in row.iter().enumerate() {
                assert_eq!(de.get(p, r), v);
            }
        }
    }
}

#[test]
fn closure_preservation_and_feasibility_factorization() {
    let mut rng = gen::rng(12);
    for _ in 0..300 {
        let p = gen::random_preorder(&mut rng, 3);
        let q = gen::random_preorder(&mut rng, 4);
        let d = gen::random_design_problem(&mut rng, &p, &q);
        let f = gen::random_fvector(&mut rng, &p);
        let r = gen::random_rcovector(&mut rng, &q);
        let fd = dp::map_functionality(&f, &d).unwrap();
        let dr = dp::map_resources(&d, &r).unwrap();
        assert!(q.check_closed(fd.members(), Direction::Upward).unwrap());
        assert!(p.check_closed(dr.members(), Direction::Downward).unwrap());
        let direct = dp::feasible(&f, &d, &r).unwrap();
        assert_eq!(direct, dp::contract(&fd, &r).unwrap());
        assert_eq!(direct, dp::contract(&f, &dr).unwrap());
    }
}

#[test]
fn hom_order_compatible_with_composition() {
    let c2 = Preorder::chain(2);
    let homs = enumerate_design_problems(&c2, &c2).unwrap();
    for d in &homs {
        assert!(d.leq(d).unwrap());
        for d2 in &homs {
            if !d.leq(d2).unwrap() {
                continue;
            }
            for e in &homs {
                assert!(e.compose(d).unwrap().leq(&e.compose(d2).unwrap()).unwrap());
                assert!(d.compose(e).unwrap().leq(&d2.compose(e).unwrap()).unwrap());
            }
            for d3 in &homs {
                if d2.leq(d3).unwrap() {
                    assert!(d.leq(d3).unwrap());
                }
            }
        }
    }
}

#[test]
fn tensor_is_functorial() {
    let c2 = Preorder::chain(2);
    let u = Preorder::unit();
    let ds = enumerate_design_problems(&c2, &c2).unwrap();
    let us = enumerate_design_problems(&u, &c2).unwrap();
    let vs = enumerate_design_problems(&c2, &u).unwrap();
    for d in &ds {
        for e in &ds {
            for d2 in &us {
                for e2 in &vs {
                    let lhs = d.compose(e).unwrap().tensor(&d2.compose(e2).unwrap());
                    let rhs = d.tensor(d2).compose(&e.tensor(e2)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn transpose_coherence_on_generators() {
    for (_, p) in gen::generator_preorders() {
        let eta = dp::unit_eta(&p);
        assert_eq!(
            DesignProblem::untranspose(&eta, &p, &p).unwrap(),
            DesignProblem::identity(&p)
        );
        let space = p.opposite().product(&p);
        assert!(space.check_closed(eta.members(), Direction::Upward).unwrap());
    }
}

/// Vectors and covectors on the 2-chain against a hand enumeration.
#[test]
fn closed_vectors_on_chain() {
    let c2 = Preorder::chain(2);
    let fs: Vec<Vec<bool>> = FVector::enumerate(&c2).iter().map(|f| f.members().to_vec()).collect();
    assert_eq!(fs, vec![vec![false, false], vec![false, true], vec![true, true]]);
    let rs: Vec<Vec<bool>> = RCovector::enumerate(&c2).iter().map(|r| r.members().to_vec()).collect();
    assert_eq!(rs, vec![vec![false, false], vec![true, false], vec![true, true]]);
}

fn arb_preorder(max: usize) -> impl Strategy<Value = Preorder> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let covers: Vec<(String, String)> = (0..n * n)
                .filter(|&k| bits[k])
                .map(|k| (names[k / n].clone(), names[k % n].clone()))
                .collect();
            Preorder::from_hasse(&names, &covers).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn constructed_preorders_validate(p in arb_preorder(5), q in arb_preorder(3)) {
        prop_assert!(p.validate().is_ok());
        prop_assert!(p.product(&q).validate().is_ok());
        prop_assert!(p.opposite().validate().is_ok());
    }

    #[test]
    fn closure_idempotent_and_extensive(p in arb_preorder(5), mask in 0u32..32, up in any::<bool>()) {
        let dir = if up { Direction::Upward } else { Direction::Downward };
        let seed: Vec<usize> = (0..p.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let once = p.closure(&seed, dir).unwrap();
        let twice = p.closure(&once.indices(), dir).unwrap();
        prop_assert_eq!(&once, &twice);
        for &s in &seed {
            prop_assert!(once.contains(s));
        }
        prop_assert!(p.check_closed(once.members(), dir).unwrap());
    }

    #[test]
    fn opposite_swaps_direction(p in arb_preorder(5), mask in 0u32..32) {
        let v: Vec<bool> = (0..p.len()).map(|i| mask >> i & 1 == 1).collect();
        let op = p.opposite();
        prop_assert_eq!(
            p.check_closed(&v, Direction::Upward).unwrap(),
            op.check_closed(&v, Direction::Downward).unwrap()
        );
    }

    #[test]
    fn product_order_is_componentwise(p in arb_preorder(3), q in arb_preorder(3)) {
        let pq = p.product(&q);
        let m = q.len();
        for a in 0..pq.len() {
            for b in 0..pq.len() {
                prop_assert_eq!(pq.leq(a, b), p.leq(a / m, b / m) && q.leq(a % m, b % m));
            }
        }
    }

    #[test]
    fn unit_laws_and_associativity_random(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let sizes = [3usize, 4, 3, 4];
        let ps: Vec<Preorder> = sizes.iter().map(|&n| gen::random_preorder(&mut rng, n)).collect();
        let d = gen::random_design_problem(&mut rng, &ps[0], &ps[1]);
        let e = gen::random_design_problem(&mut rng, &ps[1], &ps[2]);
        let g = gen::random_design_problem(&mut rng, &ps[2], &ps[3]);
        prop_assert_eq!(DesignProblem::identity(&ps[0]).compose(&d).unwrap(), d.clone());
        prop_assert_eq!(d.compose(&DesignProblem::identity(&ps[1])).unwrap(), d.clone());
        prop_assert_eq!(
            d.compose(&e).unwrap().compose(&g).unwrap(),
            d.compose(&e.compose(&g).unwrap()).unwrap()
        );
        prop_assert!(d.tensor(&e).is_valid());
    }

    #[test]
    fn transpose_round_trip(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let p = gen::random_preorder(&mut rng, 3);
        let q = gen::random_preorder(&mut rng, 4);
        let d = gen::random_design_problem(&mut rng, &p, &q);
        prop_assert_eq!(DesignProblem::untranspose(&d.transpose(), &p, &q).unwrap(), d);
    }
}
