use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A bipartite graph with left vertices `0..left` and right vertices `0..right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); left];
        for &(l, r) in edges {
            if l >= left || r >= right {
                return Err(Error::input(format!("bipartite edge ({l},{r}) out of range")));
            }
            adj[l].push(r);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input("duplicate bipartite edge"));
            }
        }
        Ok(BipartiteGraph { left, right, adj })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left(usize),
    Right(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched `(left, right)` pairs, sorted by left vertex.
    pub matching: Vec<(usize, usize)>,
    /// A minimum vertex cover, sorted (left vertices first).
    pub cover: Vec<Side>,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.matching.len()
    }
}

fn augment(
    b: &BipartiteGraph,
    l: usize,
    seen: &mut [bool],
    match_r: &mut [Option<usize>],
) -> bool {
    for &r in b.neighbors(l) {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_r[r].is_none_or(|l2| augment(b, l2, seen, match_r)) {
            match_r[r] = Some(l);
            return true;
        }
    }
    false
}

/// Maximum matching by repeated augmenting paths, and a König cover read
/// off the alternating-reachability sets from unmatched left vertices.
pub fn max_matching_with_cover(b: &BipartiteGraph) -> MatchingResult {
    let mut match_r: Vec<Option<usize>> = vec![None; b.right];
    let mut seen = vec![false; b.right];
    for l in 0..b.left {
        seen.iter_mut().for_each(|s| *s = false);
        augment(b, l, &mut seen, &mut match_r);
    }
    let mut match_l: Vec<Option<usize>> = vec![None; b.left];
    for (r, l) in match_r.iter().enumerate() {
        if let Some(l) = *l {
            match_l[l] = Some(r);
        }
    }

    // Z = vertices reachable from free left vertices by alternating paths
    let mut reach_l = vec![false; b.left];
    let mut reach_r = vec![false; b.right];
    let mut queue = VecDeque::new();
    for l in 0..b.left {
        if match_l[l].is_none() {
            reach_l[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in b.neighbors(l) {
            if reach_r[r] {
                continue;
            }
            reach_r[r] = true;
            if let Some(l2) = match_r[r] {
                if !reach_l[l2] {
                    reach_l[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }
    let mut cover: Vec<Side> = (0..b.left).filter(|&l| !reach_l[l]).map(Side::Left).collect();
    cover.extend((0..b.right).filter(|&r| reach_r[r]).map(Side::Right));

    let matching = match_l
        .iter()
        .enumerate()
        .filter_map(|(l, r)| r.map(|r| (l, r)))
        .collect();
    MatchingResult { matching, cover }
}
