/// Decodes a Prüfer sequence over `0..k` (length `k - 2`) into the edge set
/// of a labeled tree. Edges are `(min, max)` pairs, sorted.
pub fn prufer_decode(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, k.max(2));
    if k < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &x in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    edges
}

/// All `k^(k-2)` labeled trees on nodes `0..k`, one per Prüfer sequence.
/// `k = 1` yields the single empty tree.
///
/// # Panics
/// If `k == 0`.
pub fn iter_labeled_trees(k: usize) -> LabeledTrees {
    assert!(k >= 1, "a tree needs at least one node");
    LabeledTrees {
        k,
        seq: vec![0; k.saturating_sub(2)],
        done: false,
    }
}

pub struct LabeledTrees {
    k: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = prufer_decode(&self.seq, self.k);
        // odometer increment
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.k {
                break;
            }
            self.seq[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn is_spanning_tree(k: usize, edges: &[(usize, usize)]) -> bool {
        if edges.len() + 1 != k {
            return false;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v) in edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    #[test]
    fn small_cases() {
        assert_eq!(iter_labeled_trees(1).collect::<Vec<_>>(), vec![vec![]]);
        assert_eq!(iter_labeled_trees(2).collect::<Vec<_>>(), vec![vec![(0, 1)]]);
        assert_eq!(iter_labeled_trees(3).count(), 3);
        assert_eq!(iter_labeled_trees(4).count(), 16);
    }

    #[test]
    fn cayley_counts_and_distinct_trees() {
        for k in 1..=6usize {
            let trees: Vec<_> = iter_labeled_trees(k).collect();
            let expected = if k == 1 { 1 } else { k.pow(k as u32 - 2) };
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(|t| is_spanning_tree(k, t)));
            let distinct: BTreeSet<_> = trees.into_iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }
}
