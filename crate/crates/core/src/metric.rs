//! Lower-bound norphisms on path categories.
//!
//! Morphisms are paths in a weighted digraph and `L` is a subadditive length
//! functional. A lower bound `mu` on `(a, c)` bans short paths; attaching a
//! known path of length `L(x)` on either side yields the bound `mu - L(x)` on
//! the remaining pair, which stays sound because
//! `L(f) >= L(f;g) - L(g) >= mu - L(g)`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::nategory::{HomSets, InexactRule, MorId, NorphismGeneric};
use crate::Side;

pub type Rational = Ratio<i64>;

/// Default maximum number of edges in materialized paths.
pub const DEFAULT_PATH_CAP: usize = 5;

/// Hard limit on the number of materialized paths in one path category.
pub const MAX_MATERIALIZED_PATHS: usize = 500_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    nodes: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
}

impl WeightedDigraph {
    pub fn new(nodes: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut out = vec![Vec::new(); nodes.len()];
        for (i, e) in edges.iter().enumerate() {
            if e.src >= nodes.len() {
                return Err(Error::UnknownNode(format!("#{}", e.src)));
            }
            if e.dst >= nodes.len() {
                return Err(Error::UnknownNode(format!("#{}", e.dst)));
            }
            if e.weight.is_negative() {
                return Err(Error::NegativeWeight(
                    nodes[e.src].clone(),
                    nodes[e.dst].clone(),
                ));
            }
            out[e.src].push(i);
        }
        for (i, n) in nodes.iter().enumerate() {
            if nodes[..i].contains(n) {
                return Err(Error::DuplicateElement(n.clone()));
            }
        }
        Ok(Self { nodes, edges, out })
    }

    /// Builds from `(src, dst, weight)` name triples.
    pub fn from_named<S: AsRef<str>>(nodes: &[S], edges: &[(S, S, Rational)]) -> Result<Self> {
        let nodes: Vec<String> = nodes.iter().map(|s| s.as_ref().to_owned()).collect();
        let find = |s: &str| {
            nodes
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownNode(s.to_owned()))
        };
        let edges = edges
            .iter()
            .map(|(s, d, w)| {
                Ok(Edge {
                    src: find(s.as_ref())?,
                    dst: find(d.as_ref())?,
                    weight: *w,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(nodes, edges)
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownNode(name.to_owned()))
    }
}

/// A walk: a start node and a sequence of edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    edges: Vec<usize>,
}

impl Path {
    pub fn empty(node: usize) -> Self {
        Self {
            start: node,
            edges: Vec::new(),
        }
    }

    /// Checks that consecutive edges connect.
    pub fn new(g: &WeightedDigraph, start: usize, edges: Vec<usize>) -> Result<Self> {
        if start >= g.node_count() {
            return Err(Error::UnknownNode(format!("#{start}")));
        }
        let mut at = start;
        for &e in &edges {
            let edge = g
                .edges
                .get(e)
                .ok_or_else(|| Error::BrokenPath(format!("no edge #{e}")))?;
            if edge.src != at {
                return Err(Error::BrokenPath(format!(
                    "edge {} -> {} does not leave {}",
                    g.nodes[edge.src], g.nodes[edge.dst], g.nodes[at]
                )));
            }
            at = edge.dst;
        }
        Ok(Self { start, edges })
    }

    /// Path through the named nodes, taking the lightest edge (first on ties)
    /// between consecutive nodes.
    pub fn through<S: AsRef<str>>(g: &WeightedDigraph, nodes: &[S]) -> Result<Self> {
        let first = nodes
            .first()
            .ok_or_else(|| Error::BrokenPath("no nodes given".into()))?;
        let start = g.index_of(first.as_ref())?;
        let mut edges = Vec::new();
        let mut at = start;
        for name in &nodes[1..] {
            let next = g.index_of(name.as_ref())?;
            let e = g.out[at]
                .iter()
                .copied()
                .filter(|&e| g.edges[e].dst == next)
                .min_by(|&x, &y| g.edges[x].weight.cmp(&g.edges[y].weight).then(x.cmp(&y)))
                .ok_or_else(|| {
                    Error::BrokenPath(format!("no edge {} -> {}", g.nodes[at], g.nodes[next]))
                })?;
            edges.push(e);
            at = next;
        }
        Ok(Self { start, edges })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self, g: &WeightedDigraph) -> usize {
        self.edges.last().map_or(self.start, |&e| g.edges[e].dst)
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self ; other`, or `None` if they do not meet.
    pub fn concat(&self, g: &WeightedDigraph, other: &Path) -> Option<Path> {
        (self.end(g) == other.start).then(|| Path {
            start: self.start,
            edges: self.edges.iter().chain(&other.edges).copied().collect(),
        })
    }

    pub fn node_names(&self, g: &WeightedDigraph) -> Vec<String> {
        std::iter::once(self.start)
            .chain(self.edges.iter().map(|&e| g.edges[e].dst))
            .map(|v| g.nodes[v].clone())
            .collect()
    }
}

/// A length functional on paths.
pub trait LengthFunctional {
    fn length(&self, g: &WeightedDigraph, p: &Path) -> Rational;
}

/// Sum of edge weights.
#[derive(Clone, Copy, Debug, Default)]
pub struct PathSum;

impl LengthFunctional for PathSum {
    fn length(&self, g: &WeightedDigraph, p: &Path) -> Rational {
        p.edges.iter().map(|&e| g.edges[e].weight).sum()
    }
}

/// `min(path sum, cap)`.
#[derive(Clone, Copy, Debug)]
pub struct Capped(pub Rational);

impl LengthFunctional for Capped {
    fn length(&self, g: &WeightedDigraph, p: &Path) -> Rational {
        PathSum.length(g, p).min(self.0)
    }
}

/// Path sum with explicit per-path overrides.
#[derive(Clone, Debug, Default)]
pub struct Overridden {
    pub overrides: HashMap<Path, Rational>,
}

impl LengthFunctional for Overridden {
    fn length(&self, g: &WeightedDigraph, p: &Path) -> Rational {
        self.overrides
            .get(p)
            .copied()
            .unwrap_or_else(|| PathSum.length(g, p))
    }
}

/// Length of a validated path.
pub fn path_length<L: LengthFunctional + ?Sized>(l: &L, g: &WeightedDigraph, p: &Path) -> Result<Rational> {
    Path::new(g, p.start, p.edges.clone())?;
    Ok(l.length(g, p))
}

/// All paths with at most `max_len` edges, grouped into hom-sets.
/// Composition is concatenation when the result stays within the cap.
#[derive(Clone, Debug)]
pub struct PathCategory {
    graph: WeightedDigraph,
    max_len: usize,
    paths: Vec<Path>,
    ends: Vec<(usize, usize)>,
    positions: Vec<usize>,
    homs: Vec<Vec<Vec<MorId>>>,
    index: HashMap<Path, MorId>,
}

impl PathCategory {
    pub fn new(graph: &WeightedDigraph, max_len: usize) -> Result<Self> {
        let n = graph.node_count();
        let mut paths = Vec::new();
        let mut frontier: Vec<Path> = (0..n).map(Path::empty).collect();
        for depth in 0..=max_len {
            paths.extend(frontier.iter().cloned());
            if paths.len() > MAX_MATERIALIZED_PATHS {
                return Err(Error::CapExceeded {
                    what: "path category",
                    size: paths.len(),
                    cap: MAX_MATERIALIZED_PATHS,
                });
            }
            if depth == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &frontier {
                for &e in &graph.out[p.end(graph)] {
                    let mut q = p.clone();
                    q.edges.push(e);
                    next.push(q);
                }
            }
            frontier = next;
        }
        let mut homs = vec![vec![Vec::new(); n]; n];
        let mut ends = Vec::with_capacity(paths.len());
        let mut positions = Vec::with_capacity(paths.len());
        let mut index = HashMap::with_capacity(paths.len());
        for (id, p) in paths.iter().enumerate() {
            let (a, b) = (p.start, p.end(graph));
            ends.push((a, b));
            positions.push(homs[a][b].len());
            homs[a][b].push(id);
            index.insert(p.clone(), id);
        }
        Ok(Self {
            graph: graph.clone(),
            max_len,
            paths,
            ends,
            positions,
            homs,
            index,
        })
    }

    pub fn graph(&self) -> &WeightedDigraph {
        &self.graph
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn path(&self, id: MorId) -> &Path {
        &self.paths[id]
    }

    pub fn id_of(&self, p: &Path) -> Option<MorId> {
        self.index.get(p).copied()
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }
}

impl HomSets for PathCategory {
    fn object_count(&self) -> usize {
        self.graph.node_count()
    }

    fn hom(&self, a: usize, b: usize) -> &[MorId] {
        &self.homs[a][b]
    }

    fn dom(&self, f: MorId) -> usize {
        self.ends[f].0
    }

    fn cod(&self, f: MorId) -> usize {
        self.ends[f].1
    }

    fn position(&self, f: MorId) -> usize {
        self.positions[f]
    }

    fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        let (pf, pg) = (&self.paths[f], &self.paths[g]);
        if self.ends[f].1 != self.ends[g].0 || pf.len() + pg.len() > self.max_len {
            return None;
        }
        let fg = pf.concat(&self.graph, pg)?;
        self.index.get(&fg).copied()
    }
}

/// First composable pair `(f, g)` with `L(f;g) > L(f) + L(g)`, among paths
/// whose concatenation has at most `max_len` edges.
pub fn find_subadditivity_violation<L: LengthFunctional + ?Sized>(
    l: &L,
    cat: &PathCategory,
) -> Option<(MorId, MorId)> {
    let g = cat.graph();
    let lengths: Vec<Rational> = cat.paths.iter().map(|p| l.length(g, p)).collect();
    for f in 0..cat.path_count() {
        let b = cat.cod(f);
        for c in 0..cat.object_count() {
            for &h in cat.hom(b, c) {
                if let Some(fh) = cat.compose(f, h) {
                    if lengths[fh] > lengths[f] + lengths[h] {
                        return Some((f, h));
                    }
                }
            }
        }
    }
    None
}

pub fn check_subadditive<L: LengthFunctional + ?Sized>(l: &L, g: &WeightedDigraph, max_path_len: usize) -> Result<bool> {
    let cat = PathCategory::new(g, max_path_len)?;
    Ok(find_subadditivity_violation(l, &cat).is_none())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strictness {
    /// Bans `L(h) <= mu`.
    Literal,
    /// Bans `L(h) < mu`.
    #[default]
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub from: usize,
    pub to: usize,
    pub mu: Rational,
    pub strictness: Strictness,
}

impl LowerBound {
    pub fn new(from: usize, to: usize, mu: Rational, strictness: Strictness) -> Self {
        Self {
            from,
            to,
            mu,
            strictness,
        }
    }

    /// Whether a path of length `len` is banned.
    pub fn bans_length(&self, len: Rational) -> bool {
        match self.strictness {
            Strictness::Literal => -len >= -self.mu,
            Strictness::Strict => len < self.mu,
        }
    }

    /// Sound iff no path from `from` to `to` is shorter than `mu`.
    pub fn is_sound(&self, g: &WeightedDigraph) -> Result<bool> {
        Ok(match shortest_path_oracle(g, self.from, self.to)? {
            Some(d) => self.mu <= d,
            None => true,
        })
    }
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu({} -> {}) = {}", self.from, self.to, self.mu)
    }
}

/// A lower bound together with its materialized ban over a path hom-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdNorphism {
    pub bound: LowerBound,
    pub generic: NorphismGeneric,
}

/// Materializes the ban of `bound` over `cat.hom(from, to)`.
pub fn threshold_norphism<L: LengthFunctional + ?Sized>(
    cat: &PathCategory,
    l: &L,
    bound: &LowerBound,
) -> ThresholdNorphism {
    let g = cat.graph();
    let generic = NorphismGeneric::from_predicate(cat, bound.from, bound.to, |h| {
        bound.bans_length(l.length(g, cat.path(h)))
    });
    ThresholdNorphism {
        bound: bound.clone(),
        generic,
    }
}

/// Bound on the remaining pair after attaching a known path.
///
/// * `Side::Post`, `attach : b -> to`: bound on `(from, b)`.
/// * `Side::Pre`, `attach : from -> b`: bound on `(b, to)`.
pub fn propagate_bound<L: LengthFunctional + ?Sized>(
    l: &L,
    g: &WeightedDigraph,
    bound: &LowerBound,
    attach: &Path,
    side: Side,
) -> Result<LowerBound> {
    let len = path_length(l, g, attach)?;
    let (from, to) = match side {
        Side::Post => {
            if attach.end(g) != bound.to {
                return Err(Error::BrokenPath(format!(
                    "attached path ends at {}, bound targets {}",
                    g.nodes[attach.end(g)],
                    g.nodes[bound.to]
                )));
            }
            (bound.from, attach.start)
        }
        Side::Pre => {
            if attach.start != bound.from {
                return Err(Error::BrokenPath(format!(
                    "attached path starts at {}, bound starts at {}",
                    g.nodes[attach.start],
                    g.nodes[bound.from]
                )));
            }
            (attach.end(g), bound.to)
        }
    };
    Ok(LowerBound {
        from,
        to,
        mu: bound.mu - len,
        strictness: bound.strictness,
    })
}

/// Inexact composition for threshold norphisms: subtract the attached length.
pub struct BoundRule<'a, L: ?Sized> {
    pub length: &'a L,
}

impl<L: LengthFunctional + ?Sized> InexactRule<PathCategory> for BoundRule<'_, L> {
    type Nor = ThresholdNorphism;

    fn hom_of(&self, n: &ThresholdNorphism) -> (usize, usize) {
        n.generic.hom()
    }

    fn incompatible(&self, cat: &PathCategory, n: &ThresholdNorphism, f: MorId) -> bool {
        n.generic.banned()[cat.position(f)]
    }

    fn left(&self, cat: &PathCategory, f: MorId, n: &ThresholdNorphism) -> ThresholdNorphism {
        let b = propagate_bound(self.length, cat.graph(), &n.bound, cat.path(f), Side::Pre)
            .expect("attached path starts at the bound source");
        threshold_norphism(cat, self.length, &b)
    }

    fn right(&self, cat: &PathCategory, n: &ThresholdNorphism, g: MorId) -> ThresholdNorphism {
        let b = propagate_bound(self.length, cat.graph(), &n.bound, cat.path(g), Side::Post)
            .expect("attached path ends at the bound target");
        threshold_norphism(cat, self.length, &b)
    }
}

/// Exact shortest distance by Dijkstra; `None` when unreachable.
pub fn shortest_path_oracle(g: &WeightedDigraph, a: usize, c: usize) -> Result<Option<Rational>> {
    Ok(distances_from(g, a)?[c])
}

/// Single-source distances to every node.
pub fn distances_from(g: &WeightedDigraph, a: usize) -> Result<Vec<Option<Rational>>> {
    if a >= g.node_count() {
        return Err(Error::UnknownNode(format!("#{a}")));
    }
    if let Some(e) = g.edges.iter().find(|e| e.weight.is_negative()) {
        return Err(Error::NegativeWeight(g.nodes[e.src].clone(), g.nodes[e.dst].clone()));
    }
    let mut dist: Vec<Option<Rational>> = vec![None; g.node_count()];
    let mut heap = BinaryHeap::new();
    dist[a] = Some(Rational::zero());
    heap.push(Reverse((Rational::zero(), a)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist[v].is_some_and(|best| d > best) {
            continue;
        }
        for &e in &g.out[v] {
            let edge = &g.edges[e];
            let nd = d + edge.weight;
            if dist[edge.dst].is_none_or(|cur| nd < cur) {
                dist[edge.dst] = Some(nd);
                heap.push(Reverse((nd, edge.dst)));
            }
        }
    }
    Ok(dist)
}

/// A shortest path from `a` to every reachable node, as a predecessor walk.
pub fn shortest_path_tree(g: &WeightedDigraph, a: usize) -> Result<Vec<Option<Path>>> {
    let dist = distances_from(g, a)?;
    let mut pred: Vec<Option<usize>> = vec![None; g.node_count()];
    for (i, e) in g.edges.iter().enumerate() {
        if let (Some(ds), Some(dd)) = (dist[e.src], dist[e.dst]) {
            if e.dst != a && ds + e.weight == dd && pred[e.dst].is_none() {
                pred[e.dst] = Some(i);
            }
        }
    }
    let mut out = vec![None; g.node_count()];
    for v in 0..g.node_count() {
        if dist[v].is_none() {
            continue;
        }
        let mut edges = Vec::new();
        let mut at = v;
        // zero-weight cycles could make predecessors loop; bounded walk
        while at != a && edges.len() <= g.node_count() {
            let e = pred[at].expect("reachable node has a predecessor");
            edges.push(e);
            at = g.edges[e].src;
        }
        if at == a {
            edges.reverse();
            out[v] = Some(Path { start: a, edges });
        }
    }
    Ok(out)
}

/// Bounds on `(v, c)` for every `v` reachable from `a`, obtained by
/// propagating the exact bound `d(a, c)` along shortest paths `a -> v`.
/// Empty when `c` is unreachable.
pub fn propagated_goal_bounds(g: &WeightedDigraph, a: usize, c: usize) -> Result<Vec<LowerBound>> {
    let Some(d) = shortest_path_oracle(g, a, c)? else {
        return Ok(Vec::new());
    };
    let root = LowerBound::new(a, c, d, Strictness::Strict);
    shortest_path_tree(g, a)?
        .into_iter()
        .flatten()
        .map(|p| propagate_bound(&PathSum, g, &root, &p, Side::Pre))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub distance: Option<Rational>,
    pub expansions: usize,
}

#[derive(PartialEq, Eq)]
struct Entry {
    f: Rational,
    g: Rational,
    not_goal: bool,
    node: usize,
}

impl Ord for Entry {
    // max-heap: "greater" pops first
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .cmp(&self.f)
            .then_with(|| other.not_goal.cmp(&self.not_goal))
            .then_with(|| other.g.cmp(&self.g))
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A* from `a` to `c` using lower bounds on `(v, c)` as the heuristic.
///
/// Every bound is checked for admissibility against the oracle first. Ties
/// on `g + h` go to the goal, then to the shallower entry, then to the lower
/// node index; with no bounds this is plain uniform-cost search. Under a
/// consistent heuristic only nodes closer than the goal are expanded.
pub fn astar_with_bounds(
    g: &WeightedDigraph,
    a: usize,
    c: usize,
    bounds: &[LowerBound],
) -> Result<SearchOutcome> {
    if a >= g.node_count() || c >= g.node_count() {
        return Err(Error::UnknownNode(format!("#{}", a.max(c))));
    }
    for b in bounds {
        if let Some(d) = shortest_path_oracle(g, b.from, b.to)? {
            if b.mu > d {
                return Err(Error::Inadmissible {
                    from: g.nodes[b.from].clone(),
                    to: g.nodes[b.to].clone(),
                    mu: b.mu.to_string(),
                    distance: d.to_string(),
                });
            }
        }
    }
    let mut h = vec![Rational::zero(); g.node_count()];
    for b in bounds.iter().filter(|b| b.to == c) {
        if b.mu > h[b.from] {
            h[b.from] = b.mu;
        }
    }
    let mut best: Vec<Option<Rational>> = vec![None; g.node_count()];
    let mut heap = BinaryHeap::new();
    let mut expansions = 0;
    best[a] = Some(Rational::zero());
    heap.push(Entry {
        f: h[a],
        g: Rational::zero(),
        not_goal: a != c,
        node: a,
    });
    while let Some(Entry { g: gv, node, .. }) = heap.pop() {
        if best[node].is_some_and(|b| gv > b) {
            continue;
        }
        if node == c {
            return Ok(SearchOutcome {
                distance: Some(gv),
                expansions,
            });
        }
        // a node reached again more cheaply is expanded again
        expansions += 1;
        for &e in &g.out[node] {
            let edge = &g.edges[e];
            let ng = gv + edge.weight;
            if best[edge.dst].is_none_or(|cur| ng < cur) {
                best[edge.dst] = Some(ng);
                heap.push(Entry {
                    f: ng + h[edge.dst],
                    g: ng,
                    not_goal: edge.dst != c,
                    node: edge.dst,
                });
            }
        }
    }
    Ok(SearchOutcome {
        distance: None,
        expansions,
    })
}

/// Parses an integer, a decimal such as `"2.75"`, or a fraction `"p/q"`
/// into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let q: i64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        return Some(Rational::new(p.trim().parse().ok()?, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: i64 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    let r = Rational::new(numer, denom);
    Some(if neg { -r } else { r })
}

/// Integer, terminating decimal, or `p/q`, whichever is exact.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let mut d = *r.denom();
    let (mut twos, mut fives) = (0u32, 0u32);
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    if d != 1 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scaled = *r * Rational::from_integer(10i64.pow(places));
    let n = scaled.to_integer();
    let sign = if n < 0 { "-" } else { "" };
    let n = n.abs();
    let p = 10i64.pow(places);
    format!("{sign}{}.{:0width$}", n / p, n % p, width = places as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn triangle() -> WeightedDigraph {
        WeightedDigraph::from_named(
            &["a", "b", "c"],
            &[("a", "b", r(1)), ("b", "c", r(1)), ("a", "c", r(3))],
        )
        .unwrap()
    }

    #[test]
    fn lengths() {
        let g = WeightedDigraph::from_named(&["a", "b", "c"], &[("a", "b", r(2)), ("b", "c", r(3))]).unwrap();
        let p = Path::through(&g, &["a", "b", "c"]).unwrap();
        assert_eq!(path_length(&PathSum, &g, &p).unwrap(), r(5));
        assert_eq!(path_length(&PathSum, &g, &Path::empty(0)).unwrap(), r(0));
        let ab = Path::through(&g, &["a", "b"]).unwrap();
        let bc = Path::through(&g, &["b", "c"]).unwrap();
        let l = |p: &Path| PathSum.length(&g, p);
        assert_eq!(l(&ab.concat(&g, &bc).unwrap()), l(&ab) + l(&bc));
        assert!(ab.concat(&g, &ab).is_none());
        let broken = Path { start: 0, edges: vec![1] };
        assert!(matches!(path_length(&PathSum, &g, &broken), Err(Error::BrokenPath(_))));
    }

    #[test]
    fn graph_validation() {
        let neg = WeightedDigraph::from_named(&["a", "b"], &[("a", "b", r(-1))]);
        assert!(matches!(neg, Err(Error::NegativeWeight(..))));
        let unknown = WeightedDigraph::from_named(&["a"], &[("a", "z", r(1))]);
        assert_eq!(unknown.unwrap_err(), Error::UnknownNode("z".into()));
    }

    #[test]
    fn oracle_examples() {
        let g = triangle();
        assert_eq!(shortest_path_oracle(&g, 0, 2).unwrap(), Some(r(2)));
        assert_eq!(shortest_path_oracle(&g, 0, 0).unwrap(), Some(r(0)));
        assert_eq!(shortest_path_oracle(&g, 2, 0).unwrap(), None);
    }

    #[test]
    fn subadditivity() {
        let g = triangle();
        assert!(check_subadditive(&PathSum, &g, 5).unwrap());
        assert!(check_subadditive(&Capped(r(2)), &g, 5).unwrap());
        let abc = Path::through(&g, &["a", "b", "c"]).unwrap();
        let inflated = Overridden {
            overrides: HashMap::from([(abc, r(10))]),
        };
        assert!(!check_subadditive(&inflated, &g, 5).unwrap());
    }

    #[test]
    fn threshold_modes() {
        let lit = LowerBound::new(0, 2, r(5), Strictness::Literal);
        let strict = LowerBound::new(0, 2, r(5), Strictness::Strict);
        assert!(lit.bans_length(r(4)) && strict.bans_length(r(4)));
        assert!(lit.bans_length(r(5)) && !strict.bans_length(r(5)));
        let g = triangle();
        let cat = PathCategory::new(&g, 5).unwrap();
        let zero = LowerBound::new(0, 2, r(0), Strictness::Strict);
        assert_eq!(threshold_norphism(&cat, &PathSum, &zero).generic.banned_count(), 0);
    }

    #[test]
    fn bound_arithmetic() {
        let g = WeightedDigraph::from_named(
            &["a", "b", "c", "d"],
            &[("b", "c", r(3)), ("d", "b", r(2)), ("a", "b", r(1))],
        )
        .unwrap();
        let b = LowerBound::new(0, 2, r(10), Strictness::Strict);
        let bc = Path::through(&g, &["b", "c"]).unwrap();
        let p = propagate_bound(&PathSum, &g, &b, &bc, Side::Post).unwrap();
        assert_eq!((p.from, p.to, p.mu), (0, 1, r(7)));
        let db = Path::through(&g, &["d", "b"]).unwrap();
        let p2 = propagate_bound(&PathSum, &g, &p, &db, Side::Post).unwrap();
        assert_eq!((p2.from, p2.to, p2.mu), (0, 3, r(5)));
        assert!(propagate_bound(&PathSum, &g, &b, &db, Side::Post).is_err());
        let ab = Path::through(&g, &["a", "b"]).unwrap();
        let p3 = propagate_bound(&PathSum, &g, &b, &ab, Side::Pre).unwrap();
        assert_eq!((p3.from, p3.to, p3.mu), (1, 2, r(9)));
    }

    #[test]
    fn astar_rejects_overestimate() {
        let g = triangle();
        let over = LowerBound::new(0, 2, r(3), Strictness::Strict);
        assert!(matches!(astar_with_bounds(&g, 0, 2, &[over]), Err(Error::Inadmissible { .. })));
        let out = astar_with_bounds(&g, 0, 2, &[]).unwrap();
        assert_eq!(out.distance, Some(r(2)));
        let exact = LowerBound::new(1, 2, r(1), Strictness::Strict);
        let out2 = astar_with_bounds(&g, 0, 2, &[exact]).unwrap();
        assert_eq!(out2.distance, Some(r(2)));
        assert!(out2.expansions <= out.expansions);
    }

    #[test]
    fn path_tree_matches_oracle() {
        let g = triangle();
        let tree = shortest_path_tree(&g, 0).unwrap();
        for v in 0..3 {
            let p = tree[v].as_ref().unwrap();
            assert_eq!(Some(PathSum.length(&g, p)), shortest_path_oracle(&g, 0, v).unwrap());
        }
        assert!(shortest_path_tree(&g, 2).unwrap()[0].is_none());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("3"), Some(r(3)));
        assert_eq!(parse_rational("2.75"), Some(Rational::new(11, 4)));
        assert_eq!(parse_rational("-0.5"), Some(Rational::new(-1, 2)));
        assert_eq!(parse_rational("1/3"), Some(Rational::new(1, 3)));
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&Rational::new(11, 4)), "2.75");
        assert_eq!(format_rational(&Rational::new(-1, 20)), "-0.05");
        assert_eq!(format_rational(&Rational::new(1, 3)), "1/3");
        assert_eq!(format_rational(&r(7)), "7");
    }
}
