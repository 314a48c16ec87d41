//! Design problems: monotone Boolean relations between finite preorders.
//!
//! A design problem `d : P -> Q` is a matrix `rel[p][q]` that is
//! non-increasing along the domain axis and non-decreasing along the codomain
//! axis. Composition is Boolean matrix product (OR of ANDs). Functionality
//! vectors travel forward through `d`, resource covectors travel backward.

use crate::error::{Axis, Error, Result};
use crate::matrix::BoolMatrix;
use crate::poset::{Direction, Preorder};

/// Default cap on `|P| * |Q|` for hom-set enumeration.
pub const DEFAULT_CELL_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DesignProblem {
    dom: Preorder,
    cod: Preorder,
    rel: BoolMatrix,
}

/// Checks both monotonicity constraints, reporting the first failing cell.
pub fn check_relation(dom: &Preorder, cod: &Preorder, rel: &BoolMatrix) -> Result<()> {
    if rel.rows() != dom.len() || rel.cols() != cod.len() {
        return Err(Error::LengthMismatch {
            expected: dom.len() * cod.len(),
            found: rel.rows() * rel.cols(),
        });
    }
    for p in 0..dom.len() {
        for q in 0..cod.len() {
            if !rel.get(p, q) {
                continue;
            }
            // p' <= p  =>  rel[p'][q] must hold
            if let Some(p2) = (0..dom.len()).find(|&p2| dom.leq(p2, p) && !rel.get(p2, q)) {
                return Err(Error::NotMonotone {
                    axis: Axis::Domain,
                    row: p2,
                    col: q,
                });
            }
            if let Some(q2) = (0..cod.len()).find(|&q2| cod.leq(q, q2) && !rel.get(p, q2)) {
                return Err(Error::NotMonotone {
                    axis: Axis::Codomain,
                    row: p,
                    col: q2,
                });
            }
        }
    }
    Ok(())
}

/// Whether `rel` satisfies both design-problem monotonicity invariants.
pub fn validate(dom: &Preorder, cod: &Preorder, rel: &BoolMatrix) -> bool {
    check_relation(dom, cod, rel).is_ok()
}

fn check_same(what: &str, a: &Preorder, b: &Preorder) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ObjectMismatch(format!(
            "{what}: {:?} vs {:?}",
            a.elements(),
            b.elements()
        )))
    }
}

impl DesignProblem {
    pub fn new(dom: Preorder, cod: Preorder, rel: BoolMatrix) -> Result<Self> {
        check_relation(&dom, &cod, &rel)?;
        Ok(Self { dom, cod, rel })
    }

    pub(crate) fn new_unchecked(dom: Preorder, cod: Preorder, rel: BoolMatrix) -> Self {
        debug_assert!(validate(&dom, &cod, &rel));
        Self { dom, cod, rel }
    }

    pub fn from_pairs(dom: Preorder, cod: Preorder, pairs: &[(usize, usize)]) -> Result<Self> {
        let rel = pairs_matrix(&dom, &cod, pairs)?;
        Self::new(dom, cod, rel)
    }

    /// Smallest design problem containing `pairs`: closes downward along the
    /// domain axis and upward along the codomain axis.
    pub fn autoclose(dom: Preorder, cod: Preorder, pairs: &[(usize, usize)]) -> Result<Self> {
        let seed = pairs_matrix(&dom, &cod, pairs)?;
        let rel = BoolMatrix::from_fn(dom.len(), cod.len(), |p, q| {
            seed.true_cells().any(|(p0, q0)| dom.leq(p, p0) && cod.leq(q0, q))
        });
        Ok(Self::new_unchecked(dom, cod, rel))
    }

    /// The order relation of `space`, which is the identity design problem.
    pub fn identity(space: &Preorder) -> Self {
        Self::new_unchecked(space.clone(), space.clone(), space.leq_matrix().clone())
    }

    pub fn zero(dom: &Preorder, cod: &Preorder) -> Self {
        Self::new_unchecked(dom.clone(), cod.clone(), BoolMatrix::zeros(dom.len(), cod.len()))
    }

    pub fn full(dom: &Preorder, cod: &Preorder) -> Self {
        Self::new_unchecked(dom.clone(), cod.clone(), BoolMatrix::ones(dom.len(), cod.len()))
    }

    pub fn dom(&self) -> &Preorder {
        &self.dom
    }

    pub fn cod(&self) -> &Preorder {
        &self.cod
    }

    pub fn rel(&self) -> &BoolMatrix {
        &self.rel
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> bool {
        self.rel.get(p, q)
    }

    /// Diagrammatic-order composite `self ; other`.
    pub fn compose(&self, other: &DesignProblem) -> Result<DesignProblem> {
        check_same("compose", &self.cod, &other.dom)?;
        Ok(Self::new_unchecked(
            self.dom.clone(),
            other.cod.clone(),
            self.rel.compose(&other.rel),
        ))
    }

    pub fn tensor(&self, other: &DesignProblem) -> DesignProblem {
        let dom = self.dom.product(&other.dom);
        let cod = self.cod.product(&other.cod);
        let (m, n) = (other.dom.len(), other.cod.len());
        let rel = BoolMatrix::from_fn(dom.len(), cod.len(), |a, b| {
            self.get(a / m, b / n) && other.get(a % m, b % n)
        });
        Self::new_unchecked(dom, cod, rel)
    }

    /// Re-indexes the relation as a functionality vector on `dom^op x cod`.
    pub fn transpose(&self) -> FVector {
        let space = self.dom.opposite().product(&self.cod);
        FVector {
            space,
            members: self.rel.as_flat().to_vec(),
        }
    }

    /// Inverse of [`DesignProblem::transpose`]; `v` must live on `dom^op x cod`.
    pub fn untranspose(v: &FVector, dom: &Preorder, cod: &Preorder) -> Result<DesignProblem> {
        let expected = dom.opposite().product(cod);
        check_same("untranspose", &expected, &v.space)?;
        let rel = BoolMatrix::from_flat(dom.len(), cod.len(), v.members.clone());
        Self::new(dom.clone(), cod.clone(), rel)
    }

    /// Pointwise hom-set order.
    pub fn leq(&self, other: &DesignProblem) -> Result<bool> {
        check_same("leq domain", &self.dom, &other.dom)?;
        check_same("leq codomain", &self.cod, &other.cod)?;
        Ok(self.rel.le(&other.rel))
    }

    pub fn is_valid(&self) -> bool {
        validate(&self.dom, &self.cod, &self.rel)
    }

    pub fn true_pairs(&self) -> Vec<(usize, usize)> {
        self.rel.true_cells().collect()
    }
}

fn pairs_matrix(dom: &Preorder, cod: &Preorder, pairs: &[(usize, usize)]) -> Result<BoolMatrix> {
    let mut rel = BoolMatrix::zeros(dom.len(), cod.len());
    for &(p, q) in pairs {
        if p >= dom.len() {
            return Err(Error::UnknownElement(format!("#{p}")));
        }
        if q >= cod.len() {
            return Err(Error::UnknownElement(format!("#{q}")));
        }
        rel.set(p, q, true);
    }
    Ok(rel)
}

/// All design problems `P -> Q` with `|P| * |Q|` under the default cell cap.
pub fn enumerate_design_problems(dom: &Preorder, cod: &Preorder) -> Result<Vec<DesignProblem>> {
    enumerate_design_problems_capped(dom, cod, DEFAULT_CELL_CAP)
}

pub fn enumerate_design_problems_capped(
    dom: &Preorder,
    cod: &Preorder,
    cap: usize,
) -> Result<Vec<DesignProblem>> {
    let cells = dom.len() * cod.len();
    if cells > cap {
        return Err(Error::CapExceeded {
            what: "hom-set",
            size: cells,
            cap,
        });
    }
    // design problems are exactly the up-closed subsets of dom^op x cod
    let space = dom.opposite().product(cod);
    Ok(space
        .closed_vectors(Direction::Upward)
        .into_iter()
        .map(|v| {
            DesignProblem::new_unchecked(
                dom.clone(),
                cod.clone(),
                BoolMatrix::from_flat(dom.len(), cod.len(), v),
            )
        })
        .collect())
}

/// Upward-closed demand vector `f : 1 -> P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    space: Preorder,
    members: Vec<bool>,
}

/// Downward-closed availability covector `r : P -> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RCovector {
    space: Preorder,
    members: Vec<bool>,
}

macro_rules! closed_vector_impl {
    ($ty:ident, $dir:expr, $label:literal) => {
        impl $ty {
            /// Checks closure; fails on a non-closed vector.
            pub fn new(space: Preorder, members: Vec<bool>) -> Result<Self> {
                if !space.check_closed(&members, $dir)? {
                    return Err(Error::NotClosed($label));
                }
                Ok(Self { space, members })
            }

            /// Closes an arbitrary seed set.
            pub fn from_seed(space: &Preorder, seed: &[usize]) -> Result<Self> {
                let members = space.closure(seed, $dir)?.into_members();
                Ok(Self {
                    space: space.clone(),
                    members,
                })
            }

            pub fn from_names<S: AsRef<str>>(space: &Preorder, seed: &[S]) -> Result<Self> {
                let members = space.closure_by_name(seed, $dir)?.into_members();
                Ok(Self {
                    space: space.clone(),
                    members,
                })
            }

            pub fn empty(space: &Preorder) -> Self {
                Self {
                    space: space.clone(),
                    members: vec![false; space.len()],
                }
            }

            pub fn full(space: &Preorder) -> Self {
                Self {
                    space: space.clone(),
                    members: vec![true; space.len()],
                }
            }

            pub fn space(&self) -> &Preorder {
                &self.space
            }

            pub fn members(&self) -> &[bool] {
                &self.members
            }

            pub fn contains(&self, i: usize) -> bool {
                self.members[i]
            }

            pub fn is_empty(&self) -> bool {
                !self.members.iter().any(|&b| b)
            }

            pub fn indices(&self) -> Vec<usize> {
                (0..self.members.len()).filter(|&i| self.members[i]).collect()
            }

            /// Every closed vector on `space`.
            pub fn enumerate(space: &Preorder) -> Vec<Self> {
                space
                    .closed_vectors($dir)
                    .into_iter()
                    .map(|members| Self {
                        space: space.clone(),
                        members,
                    })
                    .collect()
            }
        }
    };
}

closed_vector_impl!(FVector, Direction::Upward, "upward");
closed_vector_impl!(RCovector, Direction::Downward, "downward");

impl FVector {
    /// `f ; d`: `out[q] = OR_p f[p] AND d[p][q]`.
    pub fn map(&self, d: &DesignProblem) -> Result<FVector> {
        check_same("map_functionality", &self.space, &d.dom)?;
        let members = (0..d.cod.len())
            .map(|q| (0..d.dom.len()).any(|p| self.members[p] && d.get(p, q)))
            .collect();
        Ok(FVector {
            space: d.cod.clone(),
            members,
        })
    }

    /// Pointwise complement, which is downward-closed.
    pub fn complement(&self) -> RCovector {
        RCovector {
            space: self.space.clone(),
            members: self.members.iter().map(|b| !b).collect(),
        }
    }
}

impl RCovector {
    /// `d ; r`: `out[p] = OR_q d[p][q] AND r[q]`.
    pub fn pull(&self, d: &DesignProblem) -> Result<RCovector> {
        check_same("map_resources", &self.space, &d.cod)?;
        let members = (0..d.dom.len())
            .map(|p| (0..d.cod.len()).any(|q| d.get(p, q) && self.members[q]))
            .collect();
        Ok(RCovector {
            space: d.dom.clone(),
            members,
        })
    }

    /// Pointwise complement, which is upward-closed.
    pub fn complement(&self) -> FVector {
        FVector {
            space: self.space.clone(),
            members: self.members.iter().map(|b| !b).collect(),
        }
    }
}

pub fn map_functionality(f: &FVector, d: &DesignProblem) -> Result<FVector> {
    f.map(d)
}

pub fn map_resources(d: &DesignProblem, r: &RCovector) -> Result<RCovector> {
    r.pull(d)
}

/// `OR_p f[p] AND r[p]`.
pub fn contract(f: &FVector, r: &RCovector) -> Result<bool> {
    check_same("contract", &f.space, &r.space)?;
    Ok(f.members.iter().zip(&r.members).any(|(a, b)| *a && *b))
}

/// `OR_{p,q} f[p] AND d[p][q] AND r[q]`.
pub fn feasible(f: &FVector, d: &DesignProblem, r: &RCovector) -> Result<bool> {
    check_same("feasible demand", &f.space, &d.dom)?;
    check_same("feasible resources", &r.space, &d.cod)?;
    Ok(d.rel.true_cells().any(|(p, q)| f.members[p] && r.members[q]))
}

/// `eta[(p1, p2)] = p1 <= p2`, a functionality vector on `P^op x P`.
pub fn unit_eta(space: &Preorder) -> FVector {
    DesignProblem::identity(space).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Preorder {
        Preorder::chain(2)
    }

    fn dp(rows: &[[u8; 2]]) -> DesignProblem {
        DesignProblem::new(c2(), c2(), BoolMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn identity_matrices() {
        assert_eq!(DesignProblem::identity(&c2()).rel(), &BoolMatrix::from_rows(&[[1, 1], [0, 1]]));
        let a = Preorder::antichain(2);
        assert_eq!(DesignProblem::identity(&a).rel(), &BoolMatrix::from_rows(&[[1, 0], [0, 1]]));
        let id = DesignProblem::identity(&c2());
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    /// The identity is the unique design problem satisfying both unit laws
    /// against every enumerated 2-chain endomorphism.
    #[test]
    fn identity_is_unique_unit() {
        let all = enumerate_design_problems(&c2(), &c2()).unwrap();
        let units: Vec<_> = all
            .iter()
            .filter(|u| {
                all.iter()
                    .all(|d| u.compose(d).unwrap() == *d && d.compose(u).unwrap() == *d)
            })
            .collect();
        assert_eq!(units.len(), 1);
        assert_eq!(units[0].rel(), &BoolMatrix::from_rows(&[[1, 1], [0, 1]]));
    }

    #[test]
    fn compose_examples() {
        let e = dp(&[[0, 1], [0, 1]]);
        let id = DesignProblem::identity(&c2());
        assert_eq!(id.compose(&e).unwrap(), e);
        let d = dp(&[[0, 1], [0, 1]]);
        let e = dp(&[[1, 1], [0, 1]]);
        assert_eq!(d.compose(&e).unwrap().rel(), &BoolMatrix::from_rows(&[[0, 1], [0, 1]]));
        let u = DesignProblem::identity(&Preorder::unit());
        assert!(matches!(d.compose(&u), Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn validator_axes() {
        assert!(validate(&c2(), &c2(), &BoolMatrix::from_rows(&[[1, 1], [0, 1]])));
        let bad = BoolMatrix::from_rows(&[[0, 1], [1, 1]]);
        assert!(!validate(&c2(), &c2(), &bad));
        assert!(matches!(
            check_relation(&c2(), &c2(), &bad),
            Err(Error::NotMonotone { axis: Axis::Domain, .. })
        ));
        let bad = BoolMatrix::from_rows(&[[1, 0], [0, 0]]);
        assert!(matches!(
            check_relation(&c2(), &c2(), &bad),
            Err(Error::NotMonotone { axis: Axis::Codomain, .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        let u = Preorder::unit();
        assert_eq!(enumerate_design_problems(&c2(), &c2()).unwrap().len(), 6);
        assert_eq!(enumerate_design_problems(&c2(), &u).unwrap().len(), 3);
        assert_eq!(enumerate_design_problems(&u, &u).unwrap().len(), 2);
        assert!(matches!(
            enumerate_design_problems(&Preorder::chain(5), &Preorder::chain(4)),
            Err(Error::CapExceeded { size: 20, cap: 16, .. })
        ));
    }

    /// Brute force over all 16 Boolean 2x2 matrices, filtered by the validator.
    #[test]
    fn enumeration_matches_brute_force() {
        let brute: Vec<BoolMatrix> = (0u8..16)
            .map(|m| BoolMatrix::from_fn(2, 2, |i, j| m >> (2 * i + j) & 1 == 1))
            .filter(|m| validate(&c2(), &c2(), m))
            .collect();
        let enumerated: Vec<BoolMatrix> = enumerate_design_problems(&c2(), &c2())
            .unwrap()
            .into_iter()
            .map(|d| d.rel().clone())
            .collect();
        assert_eq!(brute.len(), enumerated.len());
        for m in &brute {
            assert!(enumerated.contains(m));
        }
    }

    #[test]
    fn vector_maps() {
        let id = DesignProblem::identity(&c2());
        let f = FVector::from_seed(&c2(), &[1]).unwrap();
        assert_eq!(f.map(&id).unwrap(), f);
        let full = DesignProblem::full(&c2(), &c2());
        assert_eq!(f.map(&full).unwrap().members(), &[true, true]);
        assert!(FVector::empty(&c2()).map(&full).unwrap().is_empty());

        let r = RCovector::from_seed(&c2(), &[0]).unwrap();
        assert_eq!(r.members(), &[true, false]);
        assert_eq!(r.pull(&id).unwrap(), r);
        let r = RCovector::full(&c2());
        assert_eq!(r.pull(&dp(&[[0, 1], [0, 1]])).unwrap().members(), &[true, true]);
        assert!(RCovector::empty(&c2()).pull(&full).unwrap().is_empty());
    }

    #[test]
    fn feasibility_examples() {
        let id = DesignProblem::identity(&c2());
        let f = FVector::from_seed(&c2(), &[1]).unwrap();
        let r = RCovector::from_seed(&c2(), &[0]).unwrap();
        assert!(!feasible(&f, &id, &r).unwrap());
        assert!(feasible(&f, &id, &RCovector::full(&c2())).unwrap());
        assert!(!feasible(&FVector::empty(&c2()), &DesignProblem::full(&c2(), &c2()), &RCovector::full(&c2())).unwrap());
        assert!(contract(&f, &RCovector::full(&c2())).unwrap());
        assert!(!contract(&f, &r).unwrap());
    }

    #[test]
    fn contract_is_monotone_in_demand() {
        let fs = FVector::enumerate(&c2());
        let rs = RCovector::enumerate(&c2());
        for f in &fs {
            for f2 in &fs {
                let sub = f.members().iter().zip(f2.members()).all(|(a, b)| !a || *b);
                if !sub {
                    continue;
                }
                for r in &rs {
                    assert!(contract(f, r).unwrap() <= contract(f2, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn closed_vector_constructors() {
        assert_eq!(FVector::new(c2(), vec![true, false]).unwrap_err(), Error::NotClosed("upward"));
        assert_eq!(RCovector::new(c2(), vec![false, true]).unwrap_err(), Error::NotClosed("downward"));
        assert!(FVector::new(c2(), vec![false, true]).is_ok());
        let f = FVector::from_names(&c2(), &["0"]).unwrap();
        assert_eq!(f.members(), &[true, true]);
    }

    #[test]
    fn tensor_examples() {
        let id = DesignProblem::identity(&c2());
        assert_eq!(id.tensor(&id), DesignProblem::identity(&c2().product(&c2())));
        let d = dp(&[[0, 1], [0, 1]]);
        let t = d.tensor(&DesignProblem::identity(&Preorder::unit()));
        assert_eq!(t.rel(), d.rel());
        let all = enumerate_design_problems(&c2(), &c2()).unwrap();
        for a in &all {
            for b in &all {
                assert!(a.tensor(b).is_valid());
            }
        }
    }

    #[test]
    fn eta_and_transpose() {
        let eta = unit_eta(&c2());
        // (p1, p2) at index 2 * p1 + p2
        assert_eq!(eta.members(), &[true, true, false, true]);
        assert!(eta.space().check_closed(eta.members(), Direction::Upward).unwrap());
        assert_eq!(unit_eta(&Preorder::unit()).members(), &[true]);
        assert_eq!(DesignProblem::untranspose(&eta, &c2(), &c2()).unwrap(), DesignProblem::identity(&c2()));
        for d in enumerate_design_problems(&c2(), &c2()).unwrap() {
            assert_eq!(DesignProblem::untranspose(&d.transpose(), &c2(), &c2()).unwrap(), d);
        }
        let space = c2().opposite().product(&c2());
        let bad = FVector {
            space,
            members: vec![false, true, true, true],
        };
        assert!(DesignProblem::untranspose(&bad, &c2(), &c2()).is_err());
    }

    #[test]
    fn hom_order() {
        let a = dp(&[[0, 1], [0, 1]]);
        let b = dp(&[[1, 1], [0, 1]]);
        assert!(a.leq(&b).unwrap());
        assert!(a.leq(&a).unwrap());
        assert!(!b.leq(&a).unwrap());
    }

    #[test]
    fn autoclose_closes_both_axes() {
        let d = DesignProblem::autoclose(c2(), c2(), &[(1, 0)]).unwrap();
        assert_eq!(d, DesignProblem::full(&c2(), &c2()));
        let d = DesignProblem::autoclose(c2(), c2(), &[(0, 1)]).unwrap();
        assert_eq!(d.rel(), &BoolMatrix::from_rows(&[[0, 1], [0, 0]]));
    }
}
