//! Seeded generators for test corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dp::{DesignProblem, FVector, RCovector};
use crate::metric::{Edge, Rational, WeightedDigraph};
use crate::norphism::NorphismDP;
use crate::poset::Preorder;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fixed list of small preorders: chains, antichains, diamond, V and its dual.
pub fn generator_preorders() -> Vec<(String, Preorder)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("chain{n}"), Preorder::chain(n)));
    }
    for n in 2..=4 {
        out.push((format!("antichain{n}"), Preorder::antichain(n)));
    }
    out.push(("diamond".into(), Preorder::diamond()));
    out.push(("vee".into(), Preorder::vee()));
    out.push(("wedge".into(), Preorder::wedge()));
    out
}

/// Closure of a random relation on `n` elements; cycles are possible.
pub fn random_preorder<R: Rng>(rng: &mut R, n: usize) -> Preorder {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.3) {
                covers.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Preorder::from_hasse(&names, &covers).expect("generated names are distinct")
}

/// Closure of a random set of true cells.
pub fn random_design_problem<R: Rng>(rng: &mut R, dom: &Preorder, cod: &Preorder) -> DesignProblem {
    let density = rng.gen_range(0.0..0.5);
    let pairs: Vec<(usize, usize)> = (0..dom.len())
        .flat_map(|p| (0..cod.len()).map(move |q| (p, q)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    DesignProblem::autoclose(dom.clone(), cod.clone(), &pairs).expect("indices in range")
}

pub fn random_fvector<R: Rng>(rng: &mut R, space: &Preorder) -> FVector {
    let seed: Vec<usize> = (0..space.len()).filter(|_| rng.gen_bool(0.3)).collect();
    FVector::from_seed(space, &seed).expect("indices in range")
}

pub fn random_rcovector<R: Rng>(rng: &mut R, space: &Preorder) -> RCovector {
    let seed: Vec<usize> = (0..space.len()).filter(|_| rng.gen_bool(0.3)).collect();
    RCovector::from_seed(space, &seed).expect("indices in range")
}

/// Join of up to three random performance norphisms.
pub fn random_norphism<R: Rng>(rng: &mut R, dom: &Preorder, cod: &Preorder) -> NorphismDP {
    let parts: Vec<_> = (0..rng.gen_range(0..=3))
        .map(|_| (random_fvector(rng, dom), random_rcovector(rng, cod)))
        .collect();
    NorphismDP::from_parts(dom, cod, &parts).expect("parts share spaces")
}

/// Random digraph with `2..=max_nodes` nodes, edge probability `density`,
/// no self-loops, and integer weights in `1..=max_weight`.
pub fn random_digraph<R: Rng>(rng: &mut R, max_nodes: usize, density: f64, max_weight: i64) -> WeightedDigraph {
    let n = rng.gen_range(2..=max_nodes.max(2));
    let nodes = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for src in 0..n {
        for dst in 0..n {
            if src != dst && rng.gen_bool(density) {
                edges.push(Edge {
                    src,
                    dst,
                    weight: Rational::from_integer(rng.gen_range(1..=max_weight)),
                });
            }
        }
    }
    WeightedDigraph::new(nodes, edges).expect("generated graph is valid")
}
