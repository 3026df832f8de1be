//! Split-graph reductions from Hitting Set and Set Cover. Element vertices
//! have color 0 and set vertices color 1; an element is adjacent to the
//! sets containing it.

use crate::error::{Error, Result};
use crate::model::Motif;

use super::{Builder, GeneratedInstance, Reduction, SetSystem};

/// Elements form a clique, sets are independent, motif `{0×t, 1×m}`. A
/// solution takes every set vertex and `t` elements, and is connected iff
/// every set contains one of them. The element side is a vertex cover.
///
/// `t` and `n` must be positive; `t` is clamped to `n`.
pub fn gen_hitting_set_split(s: &SetSystem) -> Result<GeneratedInstance> {
    if s.n == 0 || s.t == 0 {
        return Err(Error::input("hitting set split needs n >= 1 and t >= 1"));
    }
    let mut b = incidence(s, true);
    b.claim("vertex-cover", s.n);
    let mut motif = Motif::new();
    motif.add(0, s.t.min(s.n));
    motif.add(1, s.sets.len());
    b.finish(Reduction::HittingSetSplit, motif, None)
}

/// Sets form a clique, elements are independent, motif `{0×n, 1×t}`. A
/// solution takes every element and `t` sets covering them. Removing the
/// element side leaves a clique.
///
/// `t` and the number of sets must be positive; `t` is clamped to it.
pub fn gen_set_cover_split(s: &SetSystem) -> Result<GeneratedInstance> {
    if s.sets.is_empty() || s.t == 0 {
        return Err(Error::input("set cover split needs at least one set and t >= 1"));
    }
    let mut b = incidence(s, false);
    b.claim("distance-to-clique", s.n);
    let mut motif = Motif::new();
    motif.add(0, s.n);
    motif.add(1, s.t.min(s.sets.len()));
    b.finish(Reduction::SetCoverSplit, motif, None)
}

fn incidence(s: &SetSystem, elements_clique: bool) -> Builder {
    let mut b = Builder::default();
    let elems: Vec<usize> = (0..s.n).map(|_| b.vertex(0)).collect();
    let sets: Vec<usize> = s.sets.iter().map(|_| b.vertex(1)).collect();
    for (e, &v) in elems.iter().enumerate() {
        b.map(format!("elem:{e}"), v);
    }
    for (i, &v) in sets.iter().enumerate() {
        b.map(format!("set:{i}"), v);
        for &e in &s.sets[i] {
            b.edge(elems[e], v);
        }
    }
    b.clique(if elements_clique { &elems } else { &sets });
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hitting_set_examples() {
        let s = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]], 1).unwrap();
        let g = gen_hitting_set_split(&s).unwrap();
        let w = g.solve_designated().unwrap();
        assert_eq!(w.witness(), Some(&[1, 3, 4][..]));
        let disjoint = SetSystem::new(3, vec![vec![0], vec![2]], 1).unwrap();
        assert!(!gen_hitting_set_split(&disjoint).unwrap().solve_designated().unwrap().is_yes());
        assert!(gen_hitting_set_split(&SetSystem { t: 0, ..s }).is_err());
    }

    #[test]
    fn set_cover_examples() {
        let s = SetSystem::new(2, vec![vec![0], vec![1], vec![0, 1]], 1).unwrap();
        assert!(gen_set_cover_split(&s).unwrap().solve_designated().unwrap().is_yes());
        let s2 = SetSystem::new(2, vec![vec![0], vec![1]], 1).unwrap();
        assert!(!gen_set_cover_split(&s2).unwrap().solve_designated().unwrap().is_yes());
        let s3 = SetSystem { t: 2, ..s2 };
        assert!(gen_set_cover_split(&s3).unwrap().solve_designated().unwrap().is_yes());
    }
}
