//! Finite preorders and their up/down-closed subsets.
//!
//! Elements are kept in constructor order and every matrix in the crate is
//! indexed by that order. Cycles are allowed: two distinct elements may be
//! below each other.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;

/// Default cap on the number of elements for closed-set enumeration.
pub const DEFAULT_ELEMENT_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Upward,
    Downward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Upward => Direction::Downward,
            Direction::Downward => Direction::Upward,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Direction::Upward => "upward",
            Direction::Downward => "downward",
        }
    }
}

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    elements: Vec<String>,
    leq: BoolMatrix,
}

/// A finite preorder. Cheap to clone.
#[derive(Clone, Eq)]
pub struct Preorder(Arc<Inner>);

impl PartialEq for Preorder {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for Preorder {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Preorder")
            .field("elements", &self.0.elements)
            .field("leq", &self.0.leq)
            .finish()
    }
}

impl Preorder {
    /// Reflexive-transitive closure of `covers` over `elements`.
    pub fn from_hasse<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateElement(n.clone()));
            }
        }
        let index = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_owned()))
        };
        let n = names.len();
        let mut leq = BoolMatrix::from_fn(n, n, |i, j| i == j);
        for (a, b) in covers {
            let (i, j) = (index(a.as_ref())?, index(b.as_ref())?);
            leq.set(i, j, true);
        }
        warshall(&mut leq);
        Ok(Self(Arc::new(Inner {
            elements: names,
            leq,
        })))
    }

    /// Wraps an explicit order matrix, checking reflexivity and transitivity.
    pub fn from_matrix(elements: Vec<String>, leq: BoolMatrix) -> Result<Self> {
        if leq.rows() != elements.len() || leq.cols() != elements.len() {
            return Err(Error::LengthMismatch {
                expected: elements.len(),
                found: leq.rows(),
            });
        }
        let p = Self(Arc::new(Inner { elements, leq }));
        p.validate()?;
        Ok(p)
    }

    fn from_parts(elements: Vec<String>, leq: BoolMatrix) -> Self {
        Self(Arc::new(Inner { elements, leq }))
    }

    /// The one-element space.
    pub fn unit() -> Self {
        Self::from_parts(vec!["*".into()], BoolMatrix::ones(1, 1))
    }

    /// Chain `0 <= 1 <= ... <= n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_parts(
            (0..n).map(|i| i.to_string()).collect(),
            BoolMatrix::from_fn(n, n, |i, j| i <= j),
        )
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_parts(
            (0..n).map(|i| i.to_string()).collect(),
            BoolMatrix::from_fn(n, n, |i, j| i == j),
        )
    }

    /// Bottom, two incomparable middles, top.
    pub fn diamond() -> Self {
        Self::from_hasse(
            &["bot", "l", "r", "top"],
            &[("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
        )
        .expect("static preorder")
    }

    /// One bottom below two incomparable tops.
    pub fn vee() -> Self {
        Self::from_hasse(&["bot", "l", "r"], &[("bot", "l"), ("bot", "r")]).expect("static preorder")
    }

    /// Two incomparable bottoms below one top.
    pub fn wedge() -> Self {
        Self::from_hasse(&["l", "r", "top"], &[("l", "top"), ("r", "top")]).expect("static preorder")
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.0.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .elements
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.0.leq.get(i, j)
    }

    pub fn leq_matrix(&self) -> &BoolMatrix {
        &self.0.leq
    }

    /// Checks reflexivity and transitivity.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if (0..n).any(|i| !self.leq(i, i)) {
            return Err(Error::NotPreorder("reflexive"));
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(Error::NotPreorder("transitive"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Self {
        Self::from_parts(self.0.elements.clone(), self.0.leq.transpose())
    }

    /// Componentwise order on pairs; pair `(p, q)` sits at index `p * |other| + q`.
    pub fn product(&self, other: &Self) -> Self {
        let m = other.len();
        let elements = self
            .elements()
            .iter()
            .flat_map(|p| other.elements().iter().map(move |q| format!("({p},{q})")))
            .collect();
        let n = self.len() * m;
        let leq = BoolMatrix::from_fn(n, n, |a, b| {
            self.leq(a / m, b / m) && other.leq(a % m, b % m)
        });
        Self::from_parts(elements, leq)
    }

    /// Smallest closed set containing `seed`.
    pub fn closure(&self, seed: &[usize], direction: Direction) -> Result<ClosedSet> {
        let mut members = vec![false; self.len()];
        for &s in seed {
            if s >= self.len() {
                return Err(Error::UnknownElement(format!("#{s}")));
            }
            members[s] = true;
        }
        Ok(ClosedSet {
            space: self.clone(),
            members: self.close_vector(&members, direction),
            direction,
        })
    }

    pub fn closure_by_name<S: AsRef<str>>(&self, seed: &[S], direction: Direction) -> Result<ClosedSet> {
        let idx = seed
            .iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.closure(&idx, direction)
    }

    pub(crate) fn close_vector(&self, members: &[bool], direction: Direction) -> Vec<bool> {
        (0..self.len())
            .map(|y| {
                (0..self.len()).any(|x| {
                    members[x]
                        && match direction {
                            Direction::Upward => self.leq(x, y),
                            Direction::Downward => self.leq(y, x),
                        }
                })
            })
            .collect()
    }

    /// Whether `membership` is closed in `direction`.
    pub fn check_closed(&self, membership: &[bool], direction: Direction) -> Result<bool> {
        if membership.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: membership.len(),
            });
        }
        Ok(self.is_closed(membership, direction))
    }

    pub(crate) fn is_closed(&self, membership: &[bool], direction: Direction) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            !membership[x]
                || (0..n).all(|y| {
                    let related = match direction {
                        Direction::Upward => self.leq(x, y),
                        Direction::Downward => self.leq(y, x),
                    };
                    !related || membership[y]
                })
        })
    }

    /// All closed subsets, each exactly once, under the default element cap.
    pub fn enumerate_closed_sets(&self, direction: Direction) -> Result<Vec<ClosedSet>> {
        self.enumerate_closed_sets_capped(direction, DEFAULT_ELEMENT_CAP)
    }

    pub fn enumerate_closed_sets_capped(&self, direction: Direction, cap: usize) -> Result<Vec<ClosedSet>> {
        if self.len() > cap {
            return Err(Error::CapExceeded {
                what: "preorder",
                size: self.len(),
                cap,
            });
        }
        Ok(self
            .closed_vectors(direction)
            .into_iter()
            .map(|members| ClosedSet {
                space: self.clone(),
                members,
                direction,
            })
            .collect())
    }

    /// Backtracking enumeration of closed membership vectors, no cap.
    ///
    /// Each decided element is checked against every earlier decision, so
    /// only consistent prefixes are extended.
    pub(crate) fn closed_vectors(&self, direction: Direction) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        // `forces(x, y)`: membership of x forces membership of y.
        let forces = |x: usize, y: usize| match direction {
            Direction::Upward => self.leq(x, y),
            Direction::Downward => self.leq(y, x),
        };
        fn go(
            n: usize,
            cur: &mut Vec<bool>,
            out: &mut Vec<Vec<bool>>,
            forces: &dyn Fn(usize, usize) -> bool,
        ) {
            let i = cur.len();
            if i == n {
                out.push(cur.clone());
                return;
            }
            for v in [false, true] {
                let ok = (0..i).all(|j| {
                    let (in_i, in_j) = (v, cur[j]);
                    !(in_i && !in_j && forces(i, j)) && !(in_j && !in_i && forces(j, i))
                });
                if ok {
                    cur.push(v);
                    go(n, cur, out, forces);
                    cur.pop();
                }
            }
        }
        go(n, &mut cur, &mut out, &forces);
        out
    }

    /// Canonical generating covers.
    ///
    /// Elements that are mutually below each other are grouped into classes;
    /// each class is linked as a cycle in element order, and distinct classes
    /// are linked by the covering pairs of the quotient order between their
    /// first members. The closure of the result is exactly `leq`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let equiv = |i: usize, j: usize| self.leq(i, j) && self.leq(j, i);
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (i..n).filter(|&j| equiv(i, j)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let mut out = Vec::new();
        for class in &classes {
            if class.len() > 1 {
                for w in class.windows(2) {
                    out.push((w[0], w[1]));
                }
                out.push((*class.last().unwrap(), class[0]));
            }
        }
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let strict = |a: usize, b: usize| self.leq(a, b) && !self.leq(b, a);
        for &a in &reps {
            for &b in &reps {
                if a == b || !strict(a, b) {
                    continue;
                }
                let between = reps.iter().any(|&c| c != a && c != b && strict(a, c) && strict(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn warshall(m: &mut BoolMatrix) {
    let n = m.rows();
    for k in 0..n {
        for i in 0..n {
            if !m.get(i, k) {
                continue;
            }
            for j in 0..n {
                if m.get(k, j) {
                    m.set(i, j, true);
                }
            }
        }
    }
}

/// An up- or down-closed subset of a preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSet {
    space: Preorder,
    members: Vec<bool>,
    direction: Direction,
}

impl ClosedSet {
    pub fn new(space: Preorder, members: Vec<bool>, direction: Direction) -> Result<Self> {
        if !space.check_closed(&members, direction)? {
            return Err(Error::NotClosed(direction.name()));
        }
        Ok(Self {
            space,
            members,
            direction,
        })
    }

    pub fn space(&self) -> &Preorder {
        &self.space
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&i| self.members[i]).collect()
    }

    pub fn into_members(self) -> Vec<bool> {
        self.members
    }
}
