//! XP solver parameterized by max leaf number.
//!
//! `S` is the set of vertices of degree at least 3; `G - S` is a union of
//! paths. Guess `T = R ∩ S`. If `T` is empty the solution lives inside a
//! single path (jumbled pattern matching). Otherwise each path meets `R` in
//! nothing, a prefix, a suffix, a prefix and a suffix, or the whole path,
//! and every nonempty piece must touch `T` through the path end it contains.
//! The per-path choices are explored by backtracking with a failure memo on
//! (path index, remaining multiset, connectivity classes of `T`).

use std::collections::{BTreeMap, HashSet};

use crate::budget::Budget;
use crate::combinatorics::iter_subsets_by_size;
use crate::error::{Error, Result};
use crate::estimators::{degree3_decomposition, is_cycle};
use crate::model::{Color, Graph, Instance, Motif, Vertex};
use crate::solvers::solve_on_path;

/// Prefix-anagram problem on words: choose a prefix of every word so that
/// the concatenation of the prefixes is an anagram of `target`.
///
/// This is Graph Motif on a subdivided star whose center is forced into the
/// solution, with one word per branch read outward from the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarWordProblem {
    pub target: Motif,
    pub words: Vec<Vec<Color>>,
}

impl StarWordProblem {
    pub fn new(target: Motif, words: Vec<Vec<Color>>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::input("star word problem needs at least one word"));
        }
        Ok(StarWordProblem { target, words })
    }

    /// Prefix lengths, one per word, or `None` if no choice works.
    pub fn solve(&self) -> Option<Vec<usize>> {
        self.solve_with_budget(&Budget::unlimited()).expect("unlimited budget")
    }

    pub fn solve_with_budget(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let dense = ColorIndex::new(&self.target);
        let options: Vec<Vec<Piece>> = self
            .words
            .iter()
            .map(|w| {
                let mut out = vec![Piece::empty(dense.len())];
                let mut counts = vec![0u32; dense.len()];
                for (a, &c) in w.iter().enumerate() {
                    match dense.get(c) {
                        Some(i) => counts[i] += 1,
                        None => break,
                    }
                    out.push(Piece {
                        counts: counts.clone(),
                        merges: Vec::new(),
                        kind: Kind::Prefix(a + 1),
                    });
                }
                out
            })
            .collect();
        let engine = Engine {
            options: &options,
            budget,
        };
        let need = dense.vector(&self.target);
        Ok(engine.run(need, vec![0])?.map(|choice| {
            choice
                .iter()
                .zip(&options)
                .map(|(&i, opts)| match opts[i].kind {
                    Kind::Prefix(a) => a,
                    _ => 0,
                })
                .collect()
        }))
    }
}

/// Dense indices for the colors of a motif.
struct ColorIndex(BTreeMap<Color, usize>);

impl ColorIndex {
    fn new(motif: &Motif) -> Self {
        ColorIndex(motif.colors().enumerate().map(|(i, c)| (c, i)).collect())
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    fn get(&self, c: Color) -> Option<usize> {
        self.0.get(&c).copied()
    }

    fn vector(&self, motif: &Motif) -> Vec<u32> {
        let mut v = vec![0u32; self.len()];
        for (c, k) in motif.iter() {
            v[self.0[&c]] = k as u32;
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Empty,
    Prefix(usize),
    Suffix(usize),
    Both(usize, usize),
    Whole,
}

/// One way a path can meet the solution.
#[derive(Clone, Debug)]
struct Piece {
    counts: Vec<u32>,
    /// Groups of `T` indices this piece joins, one group per contiguous part.
    merges: Vec<Vec<usize>>,
    kind: Kind,
}

impl Piece {
    fn empty(colors: usize) -> Self {
        Piece {
            counts: vec![0; colors],
            merges: Vec::new(),
            kind: Kind::Empty,
        }
    }
}

/// Backtracking over one piece per path. Option 0 of every path is empty.
struct Engine<'a> {
    options: &'a [Vec<Piece>],
    budget: &'a Budget,
}

impl Engine<'_> {
    /// `labels` gives the initial connectivity class of every `T` vertex.
    fn run(&self, need: Vec<u32>, labels: Vec<u8>) -> Result<Option<Vec<usize>>> {
        let paths = self.options.len();
        let colors = need.len();
        // avail[i][c]: most of color c the paths i.. can still supply
        let mut avail = vec![vec![0u32; colors]; paths + 1];
        for i in (0..paths).rev() {
            for c in 0..colors {
                let best = self.options[i].iter().map(|p| p.counts[c]).max().unwrap_or(0);
                avail[i][c] = avail[i + 1][c] + best;
            }
        }
        let mut search = Search {
            engine: self,
            avail,
            failed: HashSet::new(),
            choice: Vec::with_capacity(paths),
        };
        let mut need = need;
        if search.go(0, &mut need, canonical(&labels))? {
            let mut choice = search.choice;
            choice.resize(paths, 0);
            Ok(Some(choice))
        } else {
            Ok(None)
        }
    }
}

struct Search<'a, 'b> {
    engine: &'a Engine<'b>,
    avail: Vec<Vec<u32>>,
    failed: HashSet<(usize, Vec<u32>, Vec<u8>)>,
    choice: Vec<usize>,
}

impl Search<'_, '_> {
    fn go(&mut self, i: usize, need: &mut Vec<u32>, labels: Vec<u8>) -> Result<bool> {
        let connected = labels.iter().all(|&l| l == 0);
        if need.iter().all(|&x| x == 0) && connected {
            return Ok(true);
        }
        if i == self.engine.options.len() {
            return Ok(false);
        }
        if need.iter().zip(&self.avail[i]).any(|(n, a)| n > a) {
            return Ok(false);
        }
        let key = (i, need.clone(), labels);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let labels = key.2.clone();
        self.engine.budget.tick()?;
        for (idx, piece) in self.engine.options[i].iter().enumerate() {
            if piece.counts.iter().zip(need.iter()).any(|(c, n)| c > n) {
                continue;
            }
            for (n, c) in need.iter_mut().zip(&piece.counts) {
                *n -= c;
            }
            let next = piece.merges.iter().fold(labels.clone(), |l, group| merge(&l, group));
            self.choice.push(idx);
            let ok = self.go(i + 1, need, next)?;
            for (n, c) in need.iter_mut().zip(&piece.counts) {
                *n += c;
            }
            if ok {
                return Ok(true);
            }
            self.choice.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Relabels classes in order of first appearance.
fn canonical(labels: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    labels
        .iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

fn merge(labels: &[u8], members: &[usize]) -> Vec<u8> {
    if members.len() < 2 {
        return labels.to_vec();
    }
    let joined: Vec<u8> = members.iter().map(|&i| labels[i]).collect();
    let target = *joined.iter().min().unwrap();
    let out: Vec<u8> = labels
        .iter()
        .map(|&l| if joined.contains(&l) { target } else { l })
        .collect();
    canonical(&out)
}

pub(crate) fn max_leaf_core(inst: &Instance, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let g = &inst.graph;
    let motif = &inst.motif;
    if is_cycle(g) {
        return Ok(solve_on_cycle(inst));
    }
    let dec = degree3_decomposition(g)?;
    let word = |p: &[Vertex]| -> Vec<Color> { p.iter().map(|&v| inst.color(v)).collect() };

    // T empty: the solution is a window of one path
    for p in &dec.paths {
        if let Some((i, j)) = solve_on_path(&word(&p.vertices), motif) {
            let mut r = p.vertices[i..=j].to_vec();
            r.sort_unstable();
            return Ok(Some(r));
        }
    }
    if dec.s.len() >= 64 {
        return Err(Error::Capacity(format!("{} vertices of degree at least 3", dec.s.len())));
    }

    let dense = ColorIndex::new(motif);
    let mut t_index = vec![usize::MAX; inst.n()];
    for t in iter_subsets_by_size(&dec.s).skip(1) {
        if t.len() > motif.total() {
            break;
        }
        budget.tick()?;
        let used = inst.coloring.multiset_of(&t);
        if !motif.includes(&used) {
            continue;
        }
        for (i, &v) in t.iter().enumerate() {
            t_index[v] = i;
        }
        let labels = t_classes(g, &t, &t_index);
        let need = dense.vector(&motif.difference(&used));
        let options: Vec<Vec<Piece>> = dec
            .paths
            .iter()
            .map(|p| {
                let attach = |a: &[Vertex]| -> Vec<usize> {
                    a.iter().filter(|&&v| t_index[v] != usize::MAX).map(|&v| t_index[v]).collect()
                };
                path_options(&word(&p.vertices), &dense, &attach(&p.head_attach), &attach(&p.tail_attach))
            })
            .collect();
        let engine = Engine {
            options: &options,
            budget,
        };
        let found = engine.run(need, labels)?;
        for &v in &t {
            t_index[v] = usize::MAX;
        }
        if let Some(choice) = found {
            let mut r = t;
            for (p, (&idx, opts)) in dec.paths.iter().zip(choice.iter().zip(&options)) {
                let vs = &p.vertices;
                let l = vs.len();
                match opts[idx].kind {
                    Kind::Empty => {}
                    Kind::Prefix(a) => r.extend_from_slice(&vs[..a]),
                    Kind::Suffix(b) => r.extend_from_slice(&vs[l - b..]),
                    Kind::Both(a, b) => {
                        r.extend_from_slice(&vs[..a]);
                        r.extend_from_slice(&vs[l - b..]);
                    }
                    Kind::Whole => r.extend_from_slice(vs),
                }
            }
            r.sort_unstable();
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Connectivity classes of `G[T]` as labels indexed like `t`.
fn t_classes(g: &Graph, t: &[Vertex], t_index: &[usize]) -> Vec<u8> {
    let mut labels: Vec<u8> = (0..t.len() as u8).collect();
    for (i, &v) in t.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = t_index[w];
            if j != usize::MAX && j > i {
                labels = merge(&labels, &[i, j]);
            }
        }
    }
    canonical(&labels)
}

/// All admissible intersections of one path with the solution, deduplicated
/// by color counts and attachment.
fn path_options(word: &[Color], dense: &ColorIndex, head: &[usize], tail: &[usize]) -> Vec<Piece> {
    let l = word.len();
    let colors = dense.len();
    let Some(idx): Option<Vec<usize>> = word.iter().map(|&c| dense.get(c)).collect() else {
        // a color outside the motif: only pieces avoiding it could be used,
        // but pruned instances never contain one
        return vec![Piece::empty(colors)];
    };
    let mut prefix = vec![vec![0u32; colors]; l + 1];
    for a in 0..l {
        prefix[a + 1] = prefix[a].clone();
        prefix[a + 1][idx[a]] += 1;
    }
    let suffix = |b: usize| -> Vec<u32> { (0..colors).map(|c| prefix[l][c] - prefix[l - b][c]).collect() };

    let mut out = vec![Piece::empty(colors)];
    let mut seen: HashSet<(Vec<u32>, Vec<Vec<usize>>)> = HashSet::new();
    let mut push = |out: &mut Vec<Piece>, counts: Vec<u32>, merges: Vec<Vec<usize>>, kind: Kind| {
        if seen.insert((counts.clone(), merges.clone())) {
            out.push(Piece { counts, merges, kind });
        }
    };
    let both: Vec<usize> = {
        let mut v: Vec<usize> = head.iter().chain(tail).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if !both.is_empty() {
        push(&mut out, prefix[l].clone(), vec![both.clone()], Kind::Whole);
    }
    if !head.is_empty() {
        for a in 1..l {
            push(&mut out, prefix[a].clone(), vec![head.to_vec()], Kind::Prefix(a));
        }
    }
    if !tail.is_empty() {
        for b in 1..l {
            push(&mut out, suffix(b), vec![tail.to_vec()], Kind::Suffix(b));
        }
    }
    if !head.is_empty() && !tail.is_empty() {
        for a in 1..l {
            for b in 1..l - a {
                let counts: Vec<u32> = suffix(b).iter().zip(&prefix[a]).map(|(x, y)| x + y).collect();
                // the two parts stay apart, so head and tail classes are not joined
                push(&mut out, counts, vec![head.to_vec(), tail.to_vec()], Kind::Both(a, b));
            }
        }
    }
    out
}

fn solve_on_cycle(inst: &Instance) -> Option<Vec<Vertex>> {
    let g = &inst.graph;
    let n = g.n();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < n {
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = next;
        order.push(cur);
    }
    let len = inst.motif.total();
    if len > n {
        return None;
    }
    let word: Vec<Color> = order.iter().chain(&order).take(n + len - 1).map(|&v| inst.color(v)).collect();
    let (i, j) = solve_on_path(&word, &inst.motif)?;
    let mut r: Vec<Vertex> = (i..=j).map(|p| order[p % n]).collect();
    r.sort_unstable();
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Coloring, SolveOutcome};
    use crate::solvers::{solve_brute, solve_max_leaf_xp};

    #[test]
    fn star_words() {
        let p = StarWordProblem::new(Motif::from_colors([1, 2, 2]), vec![vec![2, 1], vec![2, 2]]).unwrap();
        assert_eq!(p.solve(), Some(vec![2, 1]));
        let p = StarWordProblem::new(Motif::from_colors([1, 1]), vec![vec![2, 1], vec![1]]).unwrap();
        assert_eq!(p.solve(), None);
        assert!(StarWordProblem::new(Motif::from_colors([1]), vec![]).is_err());
    }

    #[test]
    fn path_graph_is_jumbled_matching() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 1, 0]), Motif::from_colors([1, 0])).unwrap();
        assert_eq!(solve_max_leaf_xp(&i).unwrap(), SolveOutcome::Yes(vec![0, 1]));
    }

    #[test]
    fn cycle_wraps_around() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 1, 1, 2]), Motif::from_colors([2, 0])).unwrap();
        assert_eq!(solve_max_leaf_xp(&i).unwrap(), SolveOutcome::Yes(vec![0, 4]));
    }

    #[test]
    fn prefix_and_suffix_of_a_loop_path() {
        // triangle-ish: 0 has degree 3, path 1-2-3-4 with both ends on 0
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let col = Coloring::new(vec![0, 1, 2, 2, 1, 3]);
        let i = Instance::new(g, col, Motif::from_colors([0, 1, 1])).unwrap();
        let out = solve_max_leaf_xp(&i).unwrap();
        assert_eq!(out, SolveOutcome::Yes(vec![0, 1, 4]));
        assert!(solve_brute(&i).unwrap().is_yes());
    }
}
