//! Exhaustive search over connected vertex sets.
//!
//! Each connected set is generated exactly once, from its smallest vertex,
//! by the include/exclude extension scheme: repeatedly pick the lowest
//! frontier vertex and either add it or forbid it. Colors whose budget is
//! spent are forbidden without branching.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::model::{Instance, SolveOutcome, Vertex};

/// Largest graph the exhaustive solver accepts (one machine word per set).
pub const BRUTE_LIMIT: usize = 64;

struct Search<'a> {
    inst: &'a Instance,
    nbr: Vec<u64>,
    budget: &'a Budget,
}

impl Search<'_> {
    fn new<'a>(inst: &'a Instance, budget: &'a Budget) -> Search<'a> {
        let nbr = (0..inst.n())
            .map(|v| inst.graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        Search { inst, nbr, budget }
    }

    /// Extends `set` within `allowed`; `left` holds remaining multiplicities
    /// indexed by color and `need` their sum.
    fn extend(&self, set: u64, frontier: u64, allowed: u64, left: &mut [usize], need: usize) -> Result<Option<u64>> {
        self.budget.tick()?;
        if need == 0 {
            return Ok(Some(set));
        }
        let mut frontier = frontier;
        let mut allowed = allowed;
        loop {
            if frontier == 0 {
                return Ok(None);
            }
            let v = frontier.trailing_zeros() as usize;
            let bit = 1u64 << v;
            frontier &= !bit;
            allowed &= !bit;
            let c = self.inst.color(v);
            if left.get(c).copied().unwrap_or(0) == 0 {
                continue;
            }
            left[c] -= 1;
            let grown = frontier | (self.nbr[v] & allowed & !set);
            let found = self.extend(set | bit, grown, allowed, left, need - 1)?;
            left[c] += 1;
            if found.is_some() {
                return Ok(found);
            }
            // v is now forbidden for the rest of this branch
        }
    }

    fn search_root(&self, root: Vertex, allowed: u64) -> Result<Option<u64>> {
        let mut left = self.inst.motif.dense(self.inst.coloring.color_bound());
        let c = self.inst.color(root);
        if left[c] == 0 {
            return Ok(None);
        }
        left[c] -= 1;
        let bit = 1u64 << root;
        let allowed = allowed & !bit;
        self.extend(bit, self.nbr[root] & allowed, allowed, &mut left, self.inst.motif.total() - 1)
    }
}

fn mask_to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn brute_core(inst: &Instance, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    debug_assert!(n <= BRUTE_LIMIT);
    let search = Search::new(inst, budget);
    for root in 0..n {
        // sets anchored at `root` use no smaller vertex
        let allowed = full_mask(n) & !full_mask(root);
        if let Some(mask) = search.search_root(root, allowed)? {
            return Ok(Some(mask_to_vec(mask)));
        }
    }
    Ok(None)
}

/// Exhaustive search restricted to solutions containing `root`.
pub fn solve_brute_rooted(inst: &Instance, root: Vertex) -> Result<SolveOutcome> {
    let n = inst.n();
    if n > BRUTE_LIMIT {
        return Err(Error::Capacity(format!("brute force is limited to {BRUTE_LIMIT} vertices")));
    }
    if root >= n {
        return Err(Error::input(format!("root {root} out of range")));
    }
    let budget = Budget::unlimited();
    let search = Search::new(inst, &budget);
    Ok(match search.search_root(root, full_mask(n))? {
        Some(mask) => SolveOutcome::Yes(mask_to_vec(mask)),
        None => SolveOutcome::No,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Coloring, Graph, Motif};
    use crate::solvers::solve_brute;

    #[test]
    fn single_matching_vertex() {
        let i = Instance::new(Graph::empty(1), Coloring::new(vec![0]), Motif::from_colors([0])).unwrap();
        assert_eq!(solve_brute(&i).unwrap(), SolveOutcome::Yes(vec![0]));
    }

    #[test]
    fn absent_color() {
        let i = Instance::new(Graph::empty(2), Coloring::new(vec![0, 0]), Motif::from_colors([1])).unwrap();
        assert_eq!(solve_brute(&i).unwrap(), SolveOutcome::No);
    }

    #[test]
    fn needs_a_connector() {
        // path 0-1-2 colored a b a; {a, a} is not connected, {a, b, a} is
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let two_a = Instance::new(g.clone(), Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 0])).unwrap();
        assert_eq!(solve_brute(&two_a).unwrap(), SolveOutcome::No);
        let all = Instance::new(g, Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 0, 1])).unwrap();
        assert_eq!(solve_brute(&all).unwrap(), SolveOutcome::Yes(vec![0, 1, 2]));
    }

    #[test]
    fn rooted_variant() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 1])).unwrap();
        assert_eq!(solve_brute_rooted(&i, 2).unwrap(), SolveOutcome::Yes(vec![1, 2]));
        assert_eq!(solve_brute_rooted(&i, 1).unwrap(), SolveOutcome::Yes(vec![0, 1]));
        assert!(solve_brute_rooted(&i, 3).is_err());
    }
}
