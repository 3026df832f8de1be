//! Seeded random instances for tests, examples and benchmarks.
//!
//! Everything here takes an explicit RNG so results are reproducible; use
//! [`rng`] to get a ChaCha generator from a seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::combinatorics::BipartiteGraph;
use crate::csct::{CsctInstance, CsctSet};
use crate::model::{connected_components, Coloring, Graph, Instance, Motif, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graph with every edge present independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Connected graph: a random spanning tree plus independent extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.push((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_dedup(n, &edges).expect("valid edges")
}

/// Random connected subset of `g` with `size` vertices grown from a random
/// vertex, or fewer if the component is smaller.
pub fn random_connected_subset<R: Rng>(rng: &mut R, g: &Graph, size: usize) -> Vec<Vertex> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut inside = vec![false; g.n()];
    let start = rng.gen_range(0..g.n());
    inside[start] = true;
    let mut set = vec![start];
    while set.len() < size {
        let frontier: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| !inside[w])
            .collect();
        let Some(&w) = frontier.choose(rng) else { break };
        inside[w] = true;
        set.push(w);
    }
    set.sort_unstable();
    set
}

/// Parameters for [`random_instance`].
#[derive(Clone, Debug)]
pub struct InstanceShape {
    pub max_n: usize,
    pub colors: std::ops::RangeInclusive<usize>,
    pub max_motif: usize,
    pub edge_prob: f64,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape {
            max_n: 12,
            colors: 2..=4,
            max_motif: 6,
            edge_prob: 0.25,
        }
    }
}

/// Random connected instance. Half of the motifs are read off a random
/// connected subset (so many instances are YES), the rest are drawn freely.
pub fn random_instance<R: Rng>(rng: &mut R, shape: &InstanceShape) -> Instance {
    let n = rng.gen_range(1..=shape.max_n);
    let g = random_connected_graph(rng, n, shape.edge_prob);
    let q = rng.gen_range(shape.colors.clone());
    let coloring = Coloring::new((0..n).map(|_| rng.gen_range(0..q)).collect());
    let size = rng.gen_range(1..=shape.max_motif);
    let motif = if rng.gen_bool(0.5) {
        let r = random_connected_subset(rng, &g, size);
        coloring.multiset_of(&r)
    } else {
        Motif::from_colors((0..size).map(|_| rng.gen_range(0..q)))
    };
    Instance::new(g, coloring, motif).expect("consistent sizes")
}

/// Random colored set cover instance over `n` elements with `m` sets.
pub fn random_csct<R: Rng>(rng: &mut R, n: usize, m: usize, colors: usize) -> CsctInstance {
    let sets = (0..m)
        .map(|_| CsctSet {
            color: rng.gen_range(0..colors),
            elements: (0..n).filter(|_| rng.gen_bool(0.35)).collect(),
        })
        .collect();
    let thresholds: BTreeMap<usize, usize> = (0..colors).map(|c| (c, rng.gen_range(1..=3))).collect();
    CsctInstance::new(n, sets, thresholds).expect("valid instance")
}

/// Random bipartite graph with each edge present with probability `p`.
pub fn random_bipartite<R: Rng>(rng: &mut R, left: usize, right: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for l in 0..left {
        for r in 0..right {
            if rng.gen_bool(p) {
                edges.push((l, r));
            }
        }
    }
    BipartiteGraph::new(left, right, &edges).expect("valid edges")
}

/// Connected graph that is neither a cycle nor edgeless beyond one vertex.
pub fn random_connected_non_cycle<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(1..=max_n);
        let g = random_connected_graph(rng, n, 0.2);
        if !crate::estimators::is_cycle(&g) {
            return g;
        }
    }
}

/// True iff `g` is connected when restricted to `vertices`.
pub fn is_connected_subset(g: &Graph, vertices: &[Vertex]) -> bool {
    connected_components(g, vertices).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_connected_and_reproducible() {
        let shape = InstanceShape::default();
        let a: Vec<Instance> = (0..20).map({
            let mut r = rng(3);
            move |_| random_instance(&mut r, &shape)
        }).collect();
        let mut r = rng(3);
        for inst in &a {
            assert!(inst.graph.is_connected());
            assert!(inst.motif.total() <= 6);
            assert_eq!(*inst, random_instance(&mut r, &InstanceShape::default()));
        }
    }
}
