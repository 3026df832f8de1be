//! Exact Graph Motif solvers and the shared dispatcher.
//!
//! Every solver goes through [`solve`], which validates supplied covers,
//! drops vertices whose color is not in the motif, splits the graph into
//! connected components, runs the selected algorithm on each component that
//! could still host a solution, and verifies any witness against the
//! original instance before returning it.

use std::time::Duration;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::estimators::{
    dist_to_clique_set_within, min_vertex_cover_within, validate_clique_cover, CoverMode,
};
use crate::model::{connected_components, prune_wrong_colors, verify_solution, Instance, SolveOutcome, Vertex};

mod brute;
mod co_cluster;
mod dist_clique;
mod edge_clique_cover;
mod max_leaf;
mod path;
mod vertex_clique_cover;
mod vertex_cover;

pub use brute::{solve_brute_rooted, BRUTE_LIMIT};
pub use dist_clique::dist_clique_core;
pub use max_leaf::StarWordProblem;
pub use path::solve_on_path;
pub use vertex_cover::vertex_cover_core;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Brute,
    DistClique,
    VertexCover,
    EdgeCliqueCover,
    VertexCliqueCover,
    CoCluster,
    MaxLeaf,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Brute,
        Algorithm::DistClique,
        Algorithm::VertexCover,
        Algorithm::EdgeCliqueCover,
        Algorithm::VertexCliqueCover,
        Algorithm::CoCluster,
        Algorithm::MaxLeaf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::DistClique => "dist-clique",
            Algorithm::VertexCover => "vc",
            Algorithm::EdgeCliqueCover => "ecc",
            Algorithm::VertexCliqueCover => "vcc",
            Algorithm::CoCluster => "cocluster",
            Algorithm::MaxLeaf => "maxleaf",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Algorithm::ALL.into_iter().find(|a| a.name() == name)
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    /// Partition of the vertex set into cliques; required by `vcc`.
    pub vertex_clique_cover: Option<Vec<Vec<Vertex>>>,
    /// Cliques covering every edge; required by `ecc`.
    pub edge_clique_cover: Option<Vec<Vec<Vertex>>>,
    pub timeout: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl SolverConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        SolverConfig {
            algorithm,
            vertex_clique_cover: None,
            edge_clique_cover: None,
            timeout: None,
            node_limit: None,
        }
    }

    pub fn with_vertex_clique_cover(mut self, cliques: Vec<Vec<Vertex>>) -> Self {
        self.vertex_clique_cover = Some(cliques);
        self
    }

    pub fn with_edge_clique_cover(mut self, cliques: Vec<Vec<Vertex>>) -> Self {
        self.edge_clique_cover = Some(cliques);
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    fn budget(&self) -> Budget {
        match (self.timeout, self.node_limit) {
            (Some(t), _) => Budget::with_timeout(t),
            (None, Some(n)) => Budget::with_node_limit(n),
            (None, None) => Budget::unlimited(),
        }
    }
}

pub fn solve(inst: &Instance, config: &SolverConfig) -> Result<SolveOutcome> {
    solve_with_budget(inst, config, &config.budget())
}

fn required_cover<'a>(cover: &'a Option<Vec<Vec<Vertex>>>, what: &str) -> Result<&'a [Vec<Vertex>]> {
    cover
        .as_deref()
        .ok_or_else(|| Error::input(format!("this algorithm needs a {what}")))
}

pub fn solve_with_budget(inst: &Instance, config: &SolverConfig, budget: &Budget) -> Result<SolveOutcome> {
    // an already expired budget fails even on instances needing no search
    budget.tick()?;
    let alg = config.algorithm;
    let cover = match alg {
        Algorithm::VertexCliqueCover => {
            let c = required_cover(&config.vertex_clique_cover, "vertex clique cover")?;
            if !validate_clique_cover(&inst.graph, c, CoverMode::VertexPartition) {
                return Err(Error::input("vertex clique cover is not a partition of V into cliques"));
            }
            Some(c)
        }
        Algorithm::EdgeCliqueCover => {
            let c = required_cover(&config.edge_clique_cover, "edge clique cover")?;
            if !validate_clique_cover(&inst.graph, c, CoverMode::EdgeCover) {
                return Err(Error::input("edge clique cover misses an edge or holds a non-clique"));
            }
            Some(c)
        }
        _ => None,
    };
    if alg == Algorithm::Brute && inst.n() > BRUTE_LIMIT {
        return Err(Error::Capacity(format!(
            "brute force is limited to {BRUTE_LIMIT} vertices, got {}",
            inst.n()
        )));
    }

    let (pruned, map) = prune_wrong_colors(inst);
    let all: Vec<Vertex> = (0..pruned.n()).collect();
    if !pruned.coloring.multiset_of(&all).includes(&inst.motif) {
        return Ok(SolveOutcome::No);
    }

    for comp in connected_components(&pruned.graph, &all) {
        if !pruned.coloring.multiset_of(&comp).includes(&inst.motif) {
            continue;
        }
        let local = if inst.motif.total() == 1 {
            Some(vec![0])
        } else {
            let sub = pruned.induced(&comp);
            let sub_cover = cover.map(|c| restrict_cover(c, &map.old_to_new, &comp, pruned.n()));
            run_component(&sub, alg, sub_cover.as_deref(), budget)?
        };
        if let Some(w) = local {
            let mut witness: Vec<Vertex> = w.iter().map(|&i| map.new_to_old[comp[i]]).collect();
            witness.sort_unstable();
            witness.dedup();
            if !verify_solution(inst, &witness)? {
                return Err(Error::Internal(format!(
                    "{alg} produced a witness that fails verification: {witness:?}"
                )));
            }
            return Ok(SolveOutcome::Yes(witness));
        }
    }
    Ok(SolveOutcome::No)
}

/// Maps cliques given on the original vertex ids onto component-local ids,
/// dropping vertices outside the component and cliques left empty.
fn restrict_cover(
    cliques: &[Vec<Vertex>],
    old_to_pruned: &[Option<Vertex>],
    comp: &[Vertex],
    pruned_n: usize,
) -> Vec<Vec<Vertex>> {
    let mut local = vec![usize::MAX; pruned_n];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    cliques
        .iter()
        .map(|c| {
            let mut out: Vec<Vertex> = c
                .iter()
                .filter_map(|&v| old_to_pruned[v])
                .filter(|&p| local[p] != usize::MAX)
                .map(|p| local[p])
                .collect();
            out.sort_unstable();
            out
        })
        .filter(|c| !c.is_empty())
        .collect()
}

/// Runs one algorithm on a connected instance whose vertices all carry
/// motif colors and whose colors include the motif, with `|M| >= 2`.
fn run_component(
    sub: &Instance,
    alg: Algorithm,
    cover: Option<&[Vec<Vertex>]>,
    budget: &Budget,
) -> Result<Option<Vec<Vertex>>> {
    let n = sub.n();
    match alg {
        Algorithm::Brute => brute::brute_core(sub, budget),
        Algorithm::DistClique => {
            let s = dist_to_clique_set_within(&sub.graph, n, budget)?.expect("V is a deletion set");
            dist_clique_core(sub, &s, budget)
        }
        Algorithm::VertexCover => {
            let s = min_vertex_cover_within(&sub.graph, n, budget)?.expect("V is a cover");
            vertex_cover_core(sub, &s, budget)
        }
        Algorithm::EdgeCliqueCover => edge_clique_cover::ecc_core(sub, cover.unwrap_or(&[]), budget),
        Algorithm::VertexCliqueCover => vertex_clique_cover::vcc_core(sub, cover.unwrap_or(&[]), budget),
        Algorithm::CoCluster => co_cluster::co_cluster_core(sub, budget),
        Algorithm::MaxLeaf => max_leaf::max_leaf_core(sub, budget),
    }
}

pub fn solve_brute(inst: &Instance) -> Result<SolveOutcome> {
    solve(inst, &SolverConfig::new(Algorithm::Brute))
}

pub fn solve_dist_clique(inst: &Instance) -> Result<SolveOutcome> {
    solve(inst, &SolverConfig::new(Algorithm::DistClique))
}

pub fn solve_vertex_cover(inst: &Instance) -> Result<SolveOutcome> {
    solve(inst, &SolverConfig::new(Algorithm::VertexCover))
}

pub fn solve_edge_clique_cover(inst: &Instance, cover: &[Vec<Vertex>]) -> Result<SolveOutcome> {
    solve(
        inst,
        &SolverConfig::new(Algorithm::EdgeCliqueCover).with_edge_clique_cover(cover.to_vec()),
    )
}

pub fn solve_vertex_clique_cover(inst: &Instance, partition: &[Vec<Vertex>]) -> Result<SolveOutcome> {
    solve(
        inst,
        &SolverConfig::new(Algorithm::VertexCliqueCover).with_vertex_clique_cover(partition.to_vec()),
    )
}

pub fn solve_co_cluster(inst: &Instance) -> Result<SolveOutcome> {
    solve(inst, &SolverConfig::new(Algorithm::CoCluster))
}

pub fn solve_max_leaf_xp(inst: &Instance) -> Result<SolveOutcome> {
    solve(inst, &SolverConfig::new(Algorithm::MaxLeaf))
}

/// Picks, for each color of `need`, the smallest-id vertices of that color
/// from `pool` that are not in `taken`. `None` if some color runs short.
pub(crate) fn pick_by_color(
    inst: &Instance,
    pool: impl IntoIterator<Item = Vertex>,
    need: &crate::model::Motif,
    taken: &[bool],
) -> Option<Vec<Vertex>> {
    let mut left = need.clone();
    let mut out = Vec::with_capacity(need.total());
    let mut pool: Vec<Vertex> = pool.into_iter().collect();
    pool.sort_unstable();
    pool.dedup();
    for v in pool {
        if left.is_empty() {
            break;
        }
        let c = inst.color(v);
        if !taken[v] && left.multiplicity(c) > 0 {
            left.remove(c, 1);
            out.push(v);
        }
    }
    left.is_empty().then_some(out)
}
