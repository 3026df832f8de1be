use crate::error::{Error, Result};

/// Restricted-growth strings of a fixed length, in lexicographic order.
struct Rgs {
    a: Vec<usize>,
    /// `pmax[i]` is the maximum of `a[0..=i]`.
    pmax: Vec<usize>,
    fresh: bool,
}

impl Rgs {
    fn new(n: usize) -> Self {
        Rgs {
            a: vec![0; n],
            pmax: vec![0; n],
            fresh: true,
        }
    }

    fn blocks(&self) -> usize {
        self.pmax.last().map_or(0, |&m| m + 1)
    }

    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let n = self.a.len();
        for i in (1..n).rev() {
            if self.a[i] <= self.pmax[i - 1] {
                self.a[i] += 1;
                self.pmax[i] = self.pmax[i - 1].max(self.a[i]);
                for j in i + 1..n {
                    self.a[j] = 0;
                    self.pmax[j] = self.pmax[j - 1];
                }
                return true;
            }
        }
        false
    }

    fn groups<T: Clone>(&self, items: &[T]) -> Vec<Vec<T>> {
        let mut out = vec![Vec::new(); self.blocks()];
        for (x, &b) in items.iter().zip(&self.a) {
            out[b].push(x.clone());
        }
        out
    }
}

/// Every partition of `items` into nonempty unordered blocks. Blocks are
/// listed by their first item; the empty input has exactly one (empty)
/// partition.
pub fn iter_set_partitions<T: Clone>(items: &[T]) -> SetPartitions<'_, T> {
    SetPartitions {
        items,
        rgs: Rgs::new(items.len()),
        done: false,
    }
}

pub struct SetPartitions<'a, T> {
    items: &'a [T],
    rgs: Rgs,
    done: bool,
}

impl<T: Clone> Iterator for SetPartitions<'_, T> {
    type Item = Vec<Vec<T>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done || !self.rgs.advance() {
            self.done = true;
            return None;
        }
        Some(self.rgs.groups(self.items))
    }
}

/// Every ordered partition `<A_1, ..., A_l>` of `items` into exactly `l`
/// nonempty blocks: restricted-growth strings with `l` blocks, each composed
/// with all `l!` block orders.
pub fn iter_ordered_partitions<T: Clone>(items: &[T], l: usize) -> Result<OrderedPartitions<'_, T>> {
    if l == 0 || l > items.len() {
        return Err(Error::input(format!(
            "cannot split {} items into {l} nonempty parts",
            items.len()
        )));
    }
    Ok(OrderedPartitions {
        items,
        l,
        rgs: Rgs::new(items.len()),
        base: None,
        perm: Vec::new(),
    })
}

pub struct OrderedPartitions<'a, T> {
    items: &'a [T],
    l: usize,
    rgs: Rgs,
    base: Option<Vec<Vec<T>>>,
    perm: Vec<usize>,
}

/// Lexicographic successor; false when `p` is the last permutation.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl<T: Clone> Iterator for OrderedPartitions<'_, T> {
    type Item = Vec<Vec<T>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.base.is_some() && next_permutation(&mut self.perm) {
            let base = self.base.as_ref().unwrap();
            return Some(self.perm.iter().map(|&b| base[b].clone()).collect());
        }
        loop {
            if !self.rgs.advance() {
                self.base = None;
                return None;
            }
            if self.rgs.blocks() == self.l {
                break;
            }
        }
        let base = self.rgs.groups(self.items);
        self.perm = (0..self.l).collect();
        let out = base.clone();
        self.base = Some(base);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn stirling2(n: usize, k: usize) -> usize {
        match (n, k) {
            (0, 0) => 1,
            (0, _) | (_, 0) => 0,
            _ => k * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
        }
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn ordered_partition_counts() {
        assert_eq!(iter_ordered_partitions(&[1, 2], 2).unwrap().count(), 2);
        assert_eq!(iter_ordered_partitions(&[1, 2, 3], 2).unwrap().count(), 6);
        assert_eq!(iter_ordered_partitions(&[1], 1).unwrap().count(), 1);
        assert!(iter_ordered_partitions(&[1, 2], 0).is_err());
        assert!(iter_ordered_partitions(&[1, 2], 3).is_err());
        for n in 1..=6 {
            let items: Vec<usize> = (0..n).collect();
            for l in 1..=n {
                let all: Vec<_> = iter_ordered_partitions(&items, l).unwrap().collect();
                assert_eq!(all.len(), factorial(l) * stirling2(n, l), "n={n} l={l}");
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                for p in &all {
                    assert_eq!(p.len(), l);
                    assert!(p.iter().all(|b| !b.is_empty()));
                    let mut flat: Vec<usize> = p.iter().flatten().copied().collect();
                    flat.sort_unstable();
                    assert_eq!(flat, items);
                }
            }
        }
    }

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            let items: Vec<usize> = (0..n).collect();
            assert_eq!(iter_set_partitions(&items).count(), b);
        }
        let parts: Vec<_> = iter_set_partitions(&['a', 'b']).collect();
        assert_eq!(parts, vec![vec![vec!['a', 'b']], vec![vec!['a'], vec!['b']]]);
    }
}
