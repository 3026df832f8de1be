//! Solver parameterized by distance to clique.
//!
//! With `S` a deletion set leaving a clique `C`, guess `S' = S ∩ R`. The
//! clique part of `R` must touch every component of `G[S']`, and its colors
//! must fit into `M - c(S')`: a colored set cover over the components with
//! one set per clique vertex and the remaining multiplicities as thresholds.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::Budget;
use crate::combinatorics::iter_subsets;
use crate::csct::{solve_csct, CsctInstance, CsctSet};
use crate::error::{Error, Result};
use crate::model::{connected_components, Instance, Vertex};
use crate::solvers::pick_by_color;

/// Exact search given `deletion` with `G - deletion` a clique. Tolerates
/// vertices with colors outside the motif and disconnected graphs.
pub fn dist_clique_core(inst: &Instance, deletion: &[Vertex], budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let motif = &inst.motif;
    let mut in_s = vec![false; n];
    for &v in deletion {
        in_s[v] = true;
    }
    let clique: Vec<Vertex> = (0..n).filter(|&v| !in_s[v]).collect();
    debug_assert!(inst.graph.is_clique(&clique));
    let clique_colors = inst.coloring.multiset_of(&clique);
    let none = vec![false; n];

    let candidates: Vec<Vertex> = deletion
        .iter()
        .copied()
        .filter(|&v| motif.multiplicity(inst.color(v)) > 0)
        .collect();
    for s1 in iter_subsets(&candidates) {
        budget.tick()?;
        let used = inst.coloring.multiset_of(&s1);
        if !motif.includes(&used) {
            continue;
        }
        if s1.is_empty() {
            // the whole solution sits in the clique
            if let Some(r) = pick_by_color(inst, clique.iter().copied(), motif, &none) {
                return Ok(Some(r));
            }
            continue;
        }
        let rest = motif.difference(&used);
        if rest.is_empty() {
            if connected_components(&inst.graph, &s1).len() == 1 {
                return Ok(Some(s1));
            }
            continue;
        }
        if !clique_colors.includes(&rest) {
            continue;
        }

        let comps = connected_components(&inst.graph, &s1);
        if comps.len() > crate::csct::MAX_UNIVERSE {
            return Err(Error::Capacity(format!("{} components exceed the set cover bound", comps.len())));
        }
        let mut comp_of = vec![usize::MAX; n];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = i;
            }
        }

        // one set per clique vertex; keep a single representative per
        // (color, touched components) and drop those dominated by a superset
        let mut by_key: BTreeMap<(usize, u64), Vertex> = BTreeMap::new();
        for &v in &clique {
            let c = inst.color(v);
            if rest.multiplicity(c) == 0 {
                continue;
            }
            let mask = inst
                .graph
                .neighbors(v)
                .iter()
                .filter(|&&w| comp_of[w] != usize::MAX)
                .fold(0u64, |m, &w| m | 1 << comp_of[w]);
            if mask != 0 {
                by_key.entry((c, mask)).or_insert(v);
            }
        }
        let keys: Vec<(usize, u64)> = by_key.keys().copied().collect();
        let maximal: Vec<(usize, u64)> = keys
            .iter()
            .copied()
            .filter(|&(c, m)| !keys.iter().any(|&(c2, m2)| c2 == c && m2 != m && m2 & m == m))
            .collect();
        let sets = maximal
            .iter()
            .map(|&(c, m)| CsctSet {
                color: c,
                elements: (0..comps.len()).filter(|&i| m >> i & 1 == 1).collect(),
            })
            .collect();
        let thresholds: BTreeMap<usize, usize> = rest.iter().collect();
        let csct = CsctInstance::new(comps.len(), sets, thresholds)?;
        let Some(sol) = solve_csct(&csct)? else { continue };

        let chosen: BTreeSet<Vertex> = sol.chosen.iter().map(|&i| by_key[&maximal[i]]).collect();
        let mut taken = vec![false; n];
        let mut r: Vec<Vertex> = s1.clone();
        for &v in &chosen {
            taken[v] = true;
            r.push(v);
        }
        let leftover = rest.difference(&inst.coloring.multiset_of(&chosen.iter().copied().collect::<Vec<_>>()));
        let Some(extra) = pick_by_color(inst, clique.iter().copied(), &leftover, &taken) else {
            continue;
        };
        r.extend(extra);
        r.sort_unstable();
        return Ok(Some(r));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use crate::model::{Coloring, Graph, Instance, Motif, SolveOutcome};
    use crate::solvers::solve_dist_clique;

    #[test]
    fn clique_answers_by_multiset_inclusion() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let col = Coloring::new(vec![0, 1, 1, 2]);
        let yes = Instance::new(g.clone(), col.clone(), Motif::from_colors([1, 1, 2])).unwrap();
        assert_eq!(solve_dist_clique(&yes).unwrap(), SolveOutcome::Yes(vec![1, 2, 3]));
        let no = Instance::new(g, col, Motif::from_colors([0, 0])).unwrap();
        assert_eq!(solve_dist_clique(&no).unwrap(), SolveOutcome::No);
    }

    #[test]
    fn pendant_vertices_need_clique_connectors() {
        // clique {0,1,2}; pendants 3~0 and 4~1
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let col = Coloring::new(vec![0, 1, 0, 2, 2]);
        let i = Instance::new(g.clone(), col.clone(), Motif::from_colors([2, 2, 0, 1])).unwrap();
        assert_eq!(solve_dist_clique(&i).unwrap(), SolveOutcome::Yes(vec![0, 1, 3, 4]));
        // both pendants but only one connector color allowed
        let i = Instance::new(g, col, Motif::from_colors([2, 2, 0])).unwrap();
        assert_eq!(solve_dist_clique(&i).unwrap(), SolveOutcome::No);
    }
}
