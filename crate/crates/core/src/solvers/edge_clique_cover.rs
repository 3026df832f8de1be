//! Solver for graphs given with an edge clique cover.
//!
//! Guess a family `F` of cover cliques meeting the solution, then solve the
//! bipartite incidence graph between one fresh-colored node per clique and
//! the union `W` of the family. The clique nodes form a vertex cover of that
//! graph, so the vertex cover solver applies.
//!
//! Only families that are connected through shared vertices and have at
//! most `|M| - 1` members are tried: one clique per edge of a spanning tree
//! of `R` is always such a family.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::model::{Coloring, Graph, Instance, Vertex};
use crate::solvers::vertex_cover_core;

const FREE: u8 = 0;
const IN_SET: u8 = 1;
const FRONT: u8 = 2;
const FORBID: u8 = 3;

/// Enumerates connected vertex subsets of `adj` with at most `max` members,
/// each exactly once, stopping at the first `Some` returned by `visit`.
struct ConnectedSets<'a, T> {
    adj: &'a [Vec<usize>],
    max: usize,
    state: Vec<u8>,
    visit: &'a mut dyn FnMut(&[usize]) -> Result<Option<T>>,
}

impl<T> ConnectedSets<'_, T> {
    fn run(&mut self) -> Result<Option<T>> {
        for root in 0..self.adj.len() {
            self.state[root] = IN_SET;
            let mut frontier = Vec::new();
            for &w in &self.adj[root] {
                if self.state[w] == FREE {
                    self.state[w] = FRONT;
                    frontier.push(w);
                }
            }
            let mut set = vec![root];
            let found = self.grow(&mut set, &frontier)?;
            for &w in &frontier {
                self.state[w] = FREE;
            }
            self.state[root] = FORBID;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn grow(&mut self, set: &mut Vec<usize>, frontier: &[usize]) -> Result<Option<T>> {
        if let Some(found) = (self.visit)(set)? {
            return Ok(Some(found));
        }
        if set.len() == self.max {
            return Ok(None);
        }
        let mut result = None;
        for idx in 0..frontier.len() {
            let v = frontier[idx];
            self.state[v] = IN_SET;
            set.push(v);
            let mut added = Vec::new();
            for &w in &self.adj[v] {
                if self.state[w] == FREE {
                    self.state[w] = FRONT;
                    added.push(w);
                }
            }
            let mut next = frontier[idx + 1..].to_vec();
            next.extend_from_slice(&added);
            let found = self.grow(set, &next);
            for &w in &added {
                self.state[w] = FREE;
            }
            set.pop();
            self.state[v] = FORBID;
            match found {
                Ok(Some(x)) => {
                    result = Some(x);
                    break;
                }
                Ok(None) => {}
                Err(e) => {
                    for &u in frontier {
                        self.state[u] = FRONT;
                    }
                    return Err(e);
                }
            }
        }
        for &u in frontier {
            self.state[u] = FRONT;
        }
        Ok(result)
    }
}

pub(crate) fn ecc_core(inst: &Instance, cover: &[Vec<Vertex>], budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let motif = &inst.motif;
    // cliques without an edge carry no connectivity
    let cliques: Vec<Vec<Vertex>> = cover
        .iter()
        .filter(|c| c.len() >= 2)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            owners[v].push(i);
        }
    }
    let adj: Vec<Vec<usize>> = (0..cliques.len())
        .map(|i| {
            let mut nb: Vec<usize> = cliques[i]
                .iter()
                .flat_map(|&v| owners[v].iter().copied())
                .filter(|&j| j != i)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();

    let gamma = inst.coloring.color_bound().max(motif.max_color().map_or(0, |c| c + 1));
    let mut visit = |family: &[usize]| -> Result<Option<Vec<Vertex>>> {
        budget.tick()?;
        let mut w: Vec<Vertex> = family.iter().flat_map(|&i| cliques[i].iter().copied()).collect();
        w.sort_unstable();
        w.dedup();
        if !inst.coloring.multiset_of(&w).includes(motif) {
            return Ok(None);
        }
        // B: clique nodes 0..f, then W
        let f = family.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in w.iter().enumerate() {
            pos[v] = f + i;
        }
        let mut edges = Vec::new();
        for (a, &i) in family.iter().enumerate() {
            for &v in &cliques[i] {
                edges.push((a, pos[v]));
            }
        }
        let mut colors = vec![gamma; f];
        colors.extend(w.iter().map(|&v| inst.color(v)));
        let mut b_motif = motif.clone();
        b_motif.add(gamma, f);
        let b = Instance::new(Graph::from_edges(f + w.len(), &edges)?, Coloring::new(colors), b_motif)?;
        let a: Vec<Vertex> = (0..f).collect();
        Ok(vertex_cover_core(&b, &a, budget)?
            .map(|sol| sol.into_iter().filter(|&x| x >= f).map(|x| w[x - f]).collect()))
    };
    let max = motif.total().saturating_sub(1).max(1);
    ConnectedSets {
        adj: &adj,
        max,
        state: vec![FREE; cliques.len()],
        visit: &mut visit,
    }
    .run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Motif, SolveOutcome};
    use crate::solvers::solve_edge_clique_cover;

    #[test]
    fn connected_sets_are_enumerated_once() {
        // path 0-1-2-3: connected subsets of size <= 3 are 4 + 3 + 2
        let adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        let mut seen = BTreeSet::new();
        let mut count = 0;
        let mut visit = |s: &[usize]| -> Result<Option<()>> {
            let mut s = s.to_vec();
            s.sort_unstable();
            seen.insert(s);
            count += 1;
            Ok(None)
        };
        ConnectedSets {
            adj: &adj,
            max: 3,
            state: vec![FREE; 4],
            visit: &mut visit,
        }
        .run()
        .unwrap();
        assert_eq!(count, 9);
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn triangle_with_whole_cover() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 2]), Motif::from_colors([0, 1, 2])).unwrap();
        assert_eq!(solve_edge_clique_cover(&i, &[vec![0, 1, 2]]).unwrap(), SolveOutcome::Yes(vec![0, 1, 2]));
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 2, 1, 0]), Motif::from_colors([0, 0])).unwrap();
        assert_eq!(solve_edge_clique_cover(&i, &[vec![0, 1, 2], vec![2, 3, 4]]).unwrap(), SolveOutcome::No);
    }
}
