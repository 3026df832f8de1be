//! Solver parameterized by distance to co-cluster.
//!
//! With `X` a deletion set, `G - X` is complete multipartite with
//! independent classes `S_1..S_q`. Either the solution meets at most one
//! class, and `X` is a vertex cover of `G[X ∪ S_i]`, or it contains two
//! adjacent vertices `s`, `t` from different classes. Every vertex outside
//! `X` sees `s` or `t`, so after fixing the pair the rest of the graph
//! outside `X` behaves like a clique and the distance-to-clique solver
//! finishes the job.

use crate::budget::Budget;
use crate::error::Result;
use crate::estimators::{co_cluster_classes, dist_to_co_cluster_set_within};
use crate::model::{verify_solution, Coloring, Graph, Instance, Motif, Vertex};
use crate::solvers::{dist_clique_core, vertex_cover_core};

pub(crate) fn co_cluster_core(inst: &Instance, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let g = &inst.graph;
    let x = dist_to_co_cluster_set_within(g, n, budget)?.expect("V is a deletion set");
    let mut in_x = vec![false; n];
    for &v in &x {
        in_x[v] = true;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| !in_x[v]).collect();
    let classes = co_cluster_classes(g, &rest);

    // case A: at most one class meets R
    let mut groups: Vec<Vec<Vertex>> = classes
        .iter()
        .map(|c| {
            let mut vs: Vec<Vertex> = x.iter().chain(c).copied().collect();
            vs.sort_unstable();
            vs
        })
        .collect();
    if groups.is_empty() {
        groups.push(x.clone());
    }
    for vs in &groups {
        let sub = inst.induced(vs);
        let cover: Vec<Vertex> = (0..vs.len()).filter(|&i| in_x[vs[i]]).collect();
        if let Some(w) = vertex_cover_core(&sub, &cover, budget)? {
            let mut r: Vec<Vertex> = w.iter().map(|&i| vs[i]).collect();
            r.sort_unstable();
            return Ok(Some(r));
        }
    }

    // case B: two classes meet R
    let mut class_of = vec![usize::MAX; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let motif = &inst.motif;
    for &s in &rest {
        for &t in &rest {
            if t <= s || class_of[s] == class_of[t] {
                continue;
            }
            budget.tick()?;
            let pair = inst.coloring.multiset_of(&[s, t]);
            if !motif.includes(&pair) {
                continue;
            }
            let m2 = motif.difference(&pair);
            if m2.is_empty() {
                return Ok(Some(vec![s, t]));
            }
            for contract in [false, true] {
                if let Some(r) = pair_case(inst, &in_x, &class_of, s, t, &m2, contract, budget)? {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

/// Solves the rest of the motif once `s` and `t` are fixed. Without
/// `contract` this is the edge-completed graph on `V - {s,t}`; the answer is
/// re-checked in `G`. With `contract`, `s` and `t` are merged into a vertex
/// `z` of a fresh color that must be used, which keeps connectivity exact.
#[allow(clippy::too_many_arguments)]
fn pair_case(
    inst: &Instance,
    in_x: &[bool],
    class_of: &[usize],
    s: Vertex,
    t: Vertex,
    m2: &Motif,
    contract: bool,
    budget: &Budget,
) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let g = &inst.graph;
    let keep: Vec<Vertex> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
        .map(|(u, v)| (pos[u], pos[v]))
        .collect();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if !in_x[u] && !in_x[v] && class_of[u] == class_of[v] {
                edges.push((i, j));
            }
        }
    }
    let mut colors: Vec<usize> = keep.iter().map(|&v| inst.color(v)).collect();
    let mut deletion: Vec<Vertex> = keep.iter().enumerate().filter(|&(_, &v)| in_x[v]).map(|(i, _)| i).collect();
    let mut motif = m2.clone();
    let size = if contract {
        let z = keep.len();
        let gamma = inst.coloring.color_bound().max(inst.motif.max_color().map_or(0, |c| c + 1));
        for &v in g.neighbors(s).iter().chain(g.neighbors(t)) {
            if pos[v] != usize::MAX {
                edges.push((pos[v], z));
            }
        }
        colors.push(gamma);
        deletion.push(z);
        motif.add(gamma, 1);
        keep.len() + 1
    } else {
        keep.len()
    };
    let sub = Instance::new(Graph::from_edges_dedup(size, &edges)?, Coloring::new(colors), motif)?;
    let Some(w) = dist_clique_core(&sub, &deletion, budget)? else {
        return Ok(None);
    };
    let mut r: Vec<Vertex> = w.into_iter().filter(|&i| i < keep.len()).map(|i| keep[i]).collect();
    r.push(s);
    r.push(t);
    r.sort_unstable();
    Ok(verify_solution(inst, &r)?.then_some(r))
}

#[cfg(test)]
mod tests {
    use crate::model::{Coloring, Graph, Instance, Motif, SolveOutcome};
    use crate::solvers::{solve_brute, solve_co_cluster};

    #[test]
    fn complete_bipartite_colorful() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 2, 3]), Motif::from_colors([0, 1, 2, 3])).unwrap();
        assert_eq!(solve_co_cluster(&i).unwrap(), SolveOutcome::Yes(vec![0, 1, 2, 3]));
    }

    #[test]
    fn motif_split_across_classes() {
        // K_{2,3} with a pendant on one side
        let g = Graph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
        let col = Coloring::new(vec![0, 0, 1, 1, 2, 3]);
        for motif in [vec![0, 0, 1], vec![0, 1, 3], vec![0, 2, 3], vec![1, 1, 3], vec![0, 0, 1, 1, 2, 3]] {
            let i = Instance::new(g.clone(), col.clone(), Motif::from_colors(motif.clone())).unwrap();
            assert_eq!(
                solve_co_cluster(&i).unwrap().is_yes(),
                solve_brute(&i).unwrap().is_yes(),
                "{motif:?}"
            );
        }
    }
}
