//! Jumbled pattern matching: Graph Motif on a path.

use crate::model::{Color, Motif};

/// Leftmost window `(i, j)` (inclusive) of `word` whose color counts equal
/// `motif`.
pub fn solve_on_path(word: &[Color], motif: &Motif) -> Option<(usize, usize)> {
    let len = motif.total();
    if len == 0 || len > word.len() {
        return None;
    }
    let bound = word.iter().copied().max().unwrap_or(0).max(motif.max_color().unwrap_or(0)) + 1;
    // diff[c] = count in window - multiplicity; `off` counts nonzero entries
    let mut diff: Vec<i64> = motif.dense(bound).into_iter().map(|m| -(m as i64)).collect();
    let mut off = diff.iter().filter(|&&d| d != 0).count();
    let mut bump = |diff: &mut Vec<i64>, c: Color, by: i64| {
        let was = diff[c] != 0;
        diff[c] += by;
        let is = diff[c] != 0;
        match (was, is) {
            (true, false) => off -= 1,
            (false, true) => off += 1,
            _ => {}
        }
        off
    };
    for &c in &word[..len - 1] {
        bump(&mut diff, c, 1);
    }
    for i in 0..=word.len() - len {
        let j = i + len - 1;
        if bump(&mut diff, word[j], 1) == 0 {
            return Some((i, j));
        }
        bump(&mut diff, word[i], -1);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic(word: &[Color], motif: &Motif) -> Option<(usize, usize)> {
        let len = motif.total();
        (0..word.len())
            .filter(|&i| i + len <= word.len())
            .find(|&i| Motif::from_colors(word[i..i + len].iter().copied()) == *motif)
            .map(|i| (i, i + len - 1))
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve_on_path(&[1, 2, 1], &Motif::from_colors([1, 2])), Some((0, 1)));
        assert_eq!(solve_on_path(&[1, 2], &Motif::from_colors([1, 2, 2])), None);
        assert_eq!(solve_on_path(&[0, 0, 1, 0], &Motif::from_colors([0, 0])), Some((0, 1)));
        assert_eq!(solve_on_path(&[0, 1, 0, 1], &Motif::from_colors([0, 0])), None);
    }

    #[test]
    fn agrees_with_all_windows() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(0..=50);
            let word: Vec<Color> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let k = rng.gen_range(1..=6);
            let motif = Motif::from_colors((0..k).map(|_| rng.gen_range(0..3)));
            assert_eq!(solve_on_path(&word, &motif), quadratic(&word, &motif));
        }
    }
}
