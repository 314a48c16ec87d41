//! Norphisms internal to the design-problem category.
//!
//! A ban on design problems `P -> Q` is stored as a Boolean matrix `n[p][q]`,
//! non-decreasing in `p` and non-increasing in `q`. Read as a covector on
//! `P^op x Q` it is itself a design problem `P^op x Q -> 1`, and a design
//! problem `m` is banned exactly when the transpose of `m` contracts with it.

use crate::dp::{self, DesignProblem, FVector, RCovector, DEFAULT_CELL_CAP};
use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;
use crate::poset::Preorder;
use crate::Side;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NorphismDP {
    dom: Preorder,
    cod: Preorder,
    rel: BoolMatrix,
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

/// A norphism matrix on `P -> Q` is a design-problem matrix on `P^op -> Q^op`.
pub fn check_norphism(dom: &Preorder, cod: &Preorder, rel: &BoolMatrix) -> Result<()> {
    dp::check_relation(&dom.opposite(), &cod.opposite(), rel)
}

impl NorphismDP {
    pub fn new(dom: Preorder, cod: Preorder, rel: BoolMatrix) -> Result<Self> {
        check_norphism(&dom, &cod, &rel)?;
        Ok(Self { dom, cod, rel })
    }

    fn new_unchecked(dom: Preorder, cod: Preorder, rel: BoolMatrix) -> Self {
        debug_assert!(check_norphism(&dom, &cod, &rel).is_ok());
        Self { dom, cod, rel }
    }

    pub fn from_pairs(dom: Preorder, cod: Preorder, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = BoolMatrix::zeros(dom.len(), cod.len());
        for &(p, q) in pairs {
            if p >= dom.len() || q >= cod.len() {
                return Err(Error::UnknownElement(format!("#({p},{q})")));
            }
            rel.set(p, q, true);
        }
        Self::new(dom, cod, rel)
    }

    /// Bans nothing.
    pub fn zero(dom: &Preorder, cod: &Preorder) -> Self {
        Self::new_unchecked(dom.clone(), cod.clone(), BoolMatrix::zeros(dom.len(), cod.len()))
    }

    /// Bans every design problem that delivers demand `f` from resources `r`:
    /// the outer product `n[p][q] = f[p] AND r[q]`.
    pub fn performance(f: &FVector, r: &RCovector) -> Self {
        let rel = BoolMatrix::from_fn(f.space().len(), r.space().len(), |p, q| {
            f.contains(p) && r.contains(q)
        });
        Self::new_unchecked(f.space().clone(), r.space().clone(), rel)
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

    pub fn is_zero(&self) -> bool {
        self.rel.is_zero()
    }

    /// Pointwise OR of two bans on the same hom-set.
    pub fn join(&self, other: &NorphismDP) -> Result<NorphismDP> {
        check_same("join domain", &self.dom, &other.dom)?;
        check_same("join codomain", &self.cod, &other.cod)?;
        Ok(Self::new_unchecked(
            self.dom.clone(),
            self.cod.clone(),
            self.rel.or(&other.rel),
        ))
    }

    /// Incompatibility: `OR_{p,q} n[p][q] AND m[p][q]`; true means banned.
    pub fn bans(&self, m: &DesignProblem) -> Result<bool> {
        check_same("bans domain", &self.dom, m.dom())?;
        check_same("bans codomain", &self.cod, m.cod())?;
        Ok(self.rel.overlaps(m.rel()))
    }

    /// Carries the ban across a design problem attached on one side.
    ///
    /// * `Side::Pre`, `attach : P -> R`: result bans `m' : R -> Q` exactly when
    ///   `attach ; m'` is banned.
    /// * `Side::Post`, `attach : R -> Q`: result bans `m'' : P -> R` exactly
    ///   when `m'' ; attach` is banned.
    pub fn propagate(&self, attach: &DesignProblem, side: Side) -> Result<NorphismDP> {
        match side {
            Side::Pre => {
                check_same("propagate pre", &self.dom, attach.dom())?;
                // out[r][q] = OR_p attach[p][r] AND n[p][q]
                let rel = attach.rel().transpose().compose(&self.rel);
                Ok(Self::new_unchecked(attach.cod().clone(), self.cod.clone(), rel))
            }
            Side::Post => {
                check_same("propagate post", &self.cod, attach.cod())?;
                // out[p][r] = OR_q n[p][q] AND attach[r][q]
                let rel = self.rel.compose(&attach.rel().transpose());
                Ok(Self::new_unchecked(self.dom.clone(), attach.dom().clone(), rel))
            }
        }
    }

    /// The norphism read as a covector on `P^op x Q`, i.e. as a design
    /// problem `P^op x Q -> 1`.
    pub fn as_covector(&self) -> RCovector {
        let space = self.dom.opposite().product(&self.cod);
        RCovector::new(space, self.rel.as_flat().to_vec()).expect("norphism invariant")
    }

    /// Every enumerable design problem this norphism bans, under the default
    /// cell cap.
    pub fn banned_set(&self) -> Result<Vec<DesignProblem>> {
        self.banned_set_capped(DEFAULT_CELL_CAP)
    }

    pub fn banned_set_capped(&self, cap: usize) -> Result<Vec<DesignProblem>> {
        Ok(dp::enumerate_design_problems_capped(&self.dom, &self.cod, cap)?
            .into_iter()
            .filter(|m| self.rel.overlaps(m.rel()))
            .collect())
    }

    /// Splits the ban into performance-norphism generators whose join is
    /// `self`: one `(up(p), down(q))` pair per true cell `(p, q)`.
    pub fn decompose(&self) -> Vec<(FVector, RCovector)> {
        self.rel
            .true_cells()
            .map(|(p, q)| {
                (
                    FVector::from_seed(&self.dom, &[p]).expect("index in range"),
                    RCovector::from_seed(&self.cod, &[q]).expect("index in range"),
                )
            })
            .collect()
    }

    /// Join of performance norphisms; the zero norphism on `dom -> cod` when
    /// `parts` is empty.
    pub fn from_parts(dom: &Preorder, cod: &Preorder, parts: &[(FVector, RCovector)]) -> Result<Self> {
        parts.iter().try_fold(Self::zero(dom, cod), |acc, (f, r)| {
            acc.join(&Self::performance(f, r))
        })
    }
}

/// Ban on endo-design problems `P -> P` that would expand any of the given
/// resource pools: `n[p1][p2] = OR_i (NOT pool_i[p1]) AND pool_i[p2]`.
///
/// The complement of a pool is the functionality just beyond what the pool
/// provides, so each summand is a performance norphism and the identity is
/// never banned.
pub fn resource_limit_schema(space: &Preorder, pools: &[RCovector]) -> Result<NorphismDP> {
    let mut n = NorphismDP::zero(space, space);
    for pool in pools {
        check_same("schema pool", space, pool.space())?;
        n = n.join(&NorphismDP::performance(&pool.complement(), pool))?;
    }
    Ok(n)
}
