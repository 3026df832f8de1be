/// All subsets of `items` in binary-counter order: the empty set first, then
/// `{items[0]}`, `{items[1]}`, `{items[0], items[1]}`, and so on.
///
/// # Panics
/// If `items` has more than 63 elements.
pub fn iter_subsets<T: Clone>(items: &[T]) -> Subsets<'_, T> {
    assert!(items.len() < 64, "subset enumeration limited to 63 items");
    Subsets {
        items,
        next: 0,
        end: 1u64 << items.len(),
    }
}

pub struct Subsets<'a, T> {
    items: &'a [T],
    next: u64,
    end: u64,
}

impl<T: Clone> Iterator for Subsets<'_, T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(
            self.items
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect(),
        )
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// All subsets of `items` by increasing cardinality; within one size, in
/// lexicographic order of item positions.
pub fn iter_subsets_by_size<T: Clone>(items: &[T]) -> SubsetsBySize<'_, T> {
    SubsetsBySize {
        items,
        idx: Vec::new(),
        done: false,
    }
}

pub struct SubsetsBySize<'a, T> {
    items: &'a [T],
    idx: Vec<usize>,
    done: bool,
}

impl<T: Clone> SubsetsBySize<'_, T> {
    /// Moves `idx` to the next combination of the same size, or to the first
    /// combination of the next size. Returns false past the full set.
    fn advance(&mut self) -> bool {
        let n = self.items.len();
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return true;
            }
        }
        if k == n {
            return false;
        }
        self.idx = (0..=k).collect();
        true
    }
}

impl<T: Clone> Iterator for SubsetsBySize<'_, T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i].clone()).collect();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_order() {
        let all: Vec<Vec<char>> = iter_subsets(&['a', 'b']).collect();
        assert_eq!(all, vec![vec![], vec!['a'], vec!['b'], vec!['a', 'b']]);
        assert_eq!(iter_subsets::<u8>(&[]).collect::<Vec<_>>(), vec![Vec::<u8>::new()]);
        assert_eq!(iter_subsets(&[1, 2, 3]).count(), 8);
    }

    #[test]
    fn by_size_order() {
        let all: Vec<Vec<u8>> = iter_subsets_by_size(&[1, 2, 3]).collect();
        assert_eq!(
            all,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
        assert_eq!(iter_subsets_by_size::<u8>(&[]).count(), 1);
        assert_eq!(iter_subsets_by_size(&[0; 10]).count(), 1024);
    }
}
