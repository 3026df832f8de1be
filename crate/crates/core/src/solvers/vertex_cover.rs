//! Solver parameterized by vertex cover number.
//!
//! Guess `S' = S ∩ R` for a vertex cover `S`. The rest of `R` lies in the
//! independent set `I`, so each such vertex hangs off `S'`. A minimal set of
//! connectors `r_1..r_l` joining the components of `G[S']` is found through
//! an ordered partition `<A_1..A_l>` of the components: `r_i` touches every
//! component of `A_i` and, for `i >= 2`, some component of an earlier block.
//! A bipartite matching between blocks and color copies of `M - c(S')`
//! assigns connector colors; the rest is completed freely.

use crate::budget::Budget;
use crate::combinatorics::{iter_ordered_partitions, iter_subsets_by_size, max_matching_with_cover, BipartiteGraph};
use crate::error::{Error, Result};
use crate::model::{connected_components, Color, Instance, Vertex};
use crate::solvers::pick_by_color;

/// Exact search given a vertex cover `cover` of `inst.graph`. Tolerates
/// vertices with colors outside the motif and disconnected graphs.
pub fn vertex_cover_core(inst: &Instance, cover: &[Vertex], budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let motif = &inst.motif;
    let mut in_s = vec![false; n];
    for &v in cover {
        in_s[v] = true;
    }
    let independent: Vec<Vertex> = (0..n).filter(|&v| !in_s[v]).collect();
    debug_assert!(independent.iter().all(|&v| inst.graph.neighbors(v).iter().all(|&w| in_s[w])));

    let candidates: Vec<Vertex> = cover
        .iter()
        .copied()
        .filter(|&v| motif.multiplicity(inst.color(v)) > 0)
        .collect();
    let mut in_s1 = vec![false; n];
    for s1 in iter_subsets_by_size(&candidates) {
        budget.tick()?;
        let used = inst.coloring.multiset_of(&s1);
        if !motif.includes(&used) {
            continue;
        }
        if s1.is_empty() {
            // R inside an independent set is a single vertex
            if motif.total() == 1 {
                let c = motif.colors().next().unwrap();
                if let Some(&v) = independent.iter().find(|&&v| inst.color(v) == c) {
                    return Ok(Some(vec![v]));
                }
            }
            continue;
        }
        let rest = motif.difference(&used);
        let comps = connected_components(&inst.graph, &s1);
        if rest.is_empty() {
            if comps.len() == 1 {
                return Ok(Some(s1));
            }
            continue;
        }
        if comps.len() > 64 {
            return Err(Error::Capacity("more than 64 components in a guessed cover part".into()));
        }

        for &v in &s1 {
            in_s1[v] = true;
        }
        let mut comp_of = vec![usize::MAX; n];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = i;
            }
        }
        // I'': independent vertices with a useful color and a neighbor in S'
        let hanging: Vec<(Vertex, u64)> = independent
            .iter()
            .filter(|&&v| rest.multiplicity(inst.color(v)) > 0)
            .filter_map(|&v| {
                let mask = inst
                    .graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| in_s1[w])
                    .fold(0u64, |m, &w| m | 1 << comp_of[w]);
                (mask != 0).then_some((v, mask))
            })
            .collect();
        for &v in &s1 {
            in_s1[v] = false;
        }
        let pool: Vec<Vertex> = hanging.iter().map(|&(v, _)| v).collect();
        if !inst.coloring.multiset_of(&pool).includes(&rest) {
            continue;
        }

        let found = if comps.len() == 1 {
            pick_by_color(inst, pool.iter().copied(), &rest, &vec![false; n])
        } else {
            connect_components(inst, comps.len(), &hanging, &rest, budget)?
        };
        if let Some(mut extra) = found {
            let mut r = s1;
            r.append(&mut extra);
            r.sort_unstable();
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Finds connectors joining `k >= 2` components plus a completion from the
/// hanging vertices, returning the vertices to add to `S'`.
fn connect_components(
    inst: &Instance,
    k: usize,
    hanging: &[(Vertex, u64)],
    rest: &crate::model::Motif,
    budget: &Budget,
) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    // right side of B: one node per copy of each color of M'
    let copies: Vec<Color> = rest.iter().flat_map(|(c, k)| std::iter::repeat_n(c, k)).collect();
    let comp_ids: Vec<usize> = (0..k).collect();
    // a first connector touching a single component could be dropped, so l < k
    for l in 1..=(k - 1).min(copies.len()) {
        for blocks in iter_ordered_partitions(&comp_ids, l)? {
            budget.tick()?;
            let block_masks: Vec<u64> = blocks.iter().map(|b| b.iter().fold(0u64, |m, &i| m | 1 << i)).collect();
            let fits = |i: usize, mask: u64| -> bool {
                let earlier: u64 = block_masks[..i].iter().fold(0, |m, &b| m | b);
                mask & block_masks[i] == block_masks[i] && (i == 0 || mask & earlier != 0)
            };
            // colors available to each block, and the smallest vertex per color
            let mut edges = Vec::new();
            let mut pick: Vec<Vec<(Color, Vertex)>> = vec![Vec::new(); l];
            for i in 0..l {
                for &(v, mask) in hanging {
                    let c = inst.color(v);
                    if fits(i, mask) && !pick[i].iter().any(|&(c2, _)| c2 == c) {
                        pick[i].push((c, v));
                    }
                }
                for (j, &c) in copies.iter().enumerate() {
                    if pick[i].iter().any(|&(c2, _)| c2 == c) {
                        edges.push((i, j));
                    }
                }
            }
            let b = BipartiteGraph::new(l, copies.len(), &edges)?;
            let res = max_matching_with_cover(&b);
            if res.size() < l {
                continue;
            }
            let mut taken = vec![false; n];
            let mut chosen = Vec::with_capacity(rest.total());
            for &(i, j) in &res.matching {
                let c = copies[j];
                let v = pick[i].iter().find(|&&(c2, _)| c2 == c).unwrap().1;
                if !taken[v] {
                    taken[v] = true;
                    chosen.push(v);
                }
            }
            let leftover = rest.difference(&inst.coloring.multiset_of(&chosen));
            let pool = hanging.iter().map(|&(v, _)| v);
            if let Some(mut extra) = pick_by_color(inst, pool, &leftover, &taken) {
                chosen.append(&mut extra);
                return Ok(Some(chosen));
            }
        }
    }
    Ok(None)
}
