//! Source problems for the reductions, with exhaustive solvers, text
//! formats and seeded random samplers.
//!
//! ```text
//! p x3c <q> <nsets>        then one `s a b c` line per triple
//! p sets <n> <m> <t>       then one `s e1 e2 ...` line per set (may be empty)
//! p ds <n> <m> <t>         then one `e u v` line per edge
//! p mcc <k> <t>            then `e i q j q'` edges and optional `h i j` pattern pairs
//! ```
//!
//! An OR-composition source is a sequence of `p x3c` sections in one file.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::io::{parse_num, token_lines};
use crate::model::{Graph, Instance, Vertex};
use crate::sampling;

/// Exact cover by 3-sets: universe `0..3q` and a list of triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3cInstance {
    pub q: usize,
    pub triples: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        if q == 0 {
            return Err(Error::input("X3C needs q >= 1"));
        }
        for t in &triples {
            if t.iter().any(|&x| x >= 3 * q) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::input(format!("bad triple {t:?} for q={q}")));
            }
        }
        Ok(X3cInstance { q, triples })
    }

    pub fn universe(&self) -> usize {
        3 * self.q
    }

    /// Indices of `q` pairwise disjoint triples covering the universe.
    pub fn exact_cover(&self) -> Option<Vec<usize>> {
        fn go(x: &X3cInstance, covered: u64, from: usize, pick: &mut Vec<usize>) -> bool {
            if pick.len() == x.q {
                return covered.count_ones() as usize == x.universe();
            }
            for i in from..x.triples.len() {
                let mask = x.triples[i].iter().fold(0u64, |m, &e| m | 1 << e);
                if mask & covered == 0 {
                    pick.push(i);
                    if go(x, covered | mask, i + 1, pick) {
                        return true;
                    }
                    pick.pop();
                }
            }
            false
        }
        let mut pick = Vec::new();
        go(self, 0, 0, &mut pick).then_some(pick)
    }
}

/// A set system over `0..n` with a budget `t`, read either as Hitting Set
/// (at most `t` elements meeting every set) or as Set Cover (at most `t`
/// sets covering every element).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
    pub t: usize,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Vec<usize>>, t: usize) -> Result<Self> {
        if sets.iter().flatten().any(|&e| e >= n) {
            return Err(Error::input(format!("set element out of range 0..{n}")));
        }
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Ok(SetSystem { n, sets, t })
    }

    fn masks(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.iter().fold(0, |m, &e| m | 1 << e)).collect()
    }

    pub fn has_hitting_set(&self) -> bool {
        let masks = self.masks();
        (0u64..1 << self.n)
            .any(|h| h.count_ones() as usize <= self.t && masks.iter().all(|&s| s & h != 0))
    }

    pub fn has_set_cover(&self) -> bool {
        let masks = self.masks();
        let full = (1u64 << self.n) - 1;
        (0u64..1 << masks.len()).any(|pick| {
            pick.count_ones() as usize <= self.t
                && (0..masks.len()).filter(|&i| pick >> i & 1 == 1).fold(0, |m, i| m | masks[i]) == full
        })
    }
}

/// Dominating Set: does `h` have a dominating set of at most `t` vertices?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomSetSource {
    pub h: Graph,
    pub t: usize,
}

impl DomSetSource {
    pub fn has_dominating_set(&self) -> bool {
        let n = self.h.n();
        let closed: Vec<u64> = (0..n)
            .map(|v| self.h.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (0u64..1 << n).any(|d| {
            d.count_ones() as usize <= self.t
                && (0..n).filter(|&v| d >> v & 1 == 1).fold(0, |m, v| m | closed[v]) == full
        })
    }
}

/// A graph with `k` classes of `t` vertices each; vertex `(i, q)` is the
/// `q`-th vertex of class `i`. Without a pattern the question is whether
/// there is a multicolored `k`-clique; with one, only the listed class
/// pairs must be adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub k: usize,
    pub t: usize,
    /// Edges `(i, q, j, q')` with `i < j`.
    pub edges: Vec<(usize, usize, usize, usize)>,
    pub pattern: Option<Vec<(usize, usize)>>,
}

impl PartitionedGraph {
    pub fn new(
        k: usize,
        t: usize,
        edges: Vec<(usize, usize, usize, usize)>,
        pattern: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        if k < 2 || t == 0 {
            return Err(Error::input("partitioned graph needs k >= 2 and t >= 1"));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (i, q, j, r) in edges {
            if i >= k || j >= k || q >= t || r >= t || i == j {
                return Err(Error::input(format!("bad edge ({i},{q})-({j},{r})")));
            }
            norm.push(if i < j { (i, q, j, r) } else { (j, r, i, q) });
        }
        norm.sort_unstable();
        norm.dedup();
        let pattern = match pattern {
            Some(p) => {
                let mut p: Vec<(usize, usize)> = p
                    .into_iter()
                    .map(|(i, j)| (i.min(j), i.max(j)))
                    .collect();
                p.sort_unstable();
                p.dedup();
                if p.iter().any(|&(i, j)| i == j || j >= k) {
                    return Err(Error::input("bad pattern pair"));
                }
                if let Some(e) = norm.iter().find(|e| p.binary_search(&(e.0, e.2)).is_err()) {
                    return Err(Error::input(format!("edge {e:?} outside the pattern")));
                }
                Some(p)
            }
            None => None,
        };
        Ok(PartitionedGraph { k, t, edges: norm, pattern })
    }

    /// Class pairs that must be adjacent, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match &self.pattern {
            Some(p) => p.clone(),
            None => (0..self.k).flat_map(|i| (i + 1..self.k).map(move |j| (i, j))).collect(),
        }
    }

    pub fn has_edge(&self, i: usize, q: usize, j: usize, r: usize) -> bool {
        let e = if i < j { (i, q, j, r) } else { (j, r, i, q) };
        self.edges.binary_search(&e).is_ok()
    }

    /// One vertex per class such that every required pair is adjacent.
    pub fn find_pattern(&self) -> Option<Vec<usize>> {
        let pairs = self.pairs();
        let mut pick = vec![0usize; self.k];
        loop {
            if pairs.iter().all(|&(i, j)| self.has_edge(i, pick[i], j, pick[j])) {
                return Some(pick);
            }
            let mut i = 0;
            while i < self.k {
                pick[i] += 1;
                if pick[i] < self.t {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == self.k {
                return None;
            }
        }
    }
}

/// An instance with a designated vertex that every solution must contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedInstance {
    pub instance: Instance,
    pub root: Vertex,
}

// ---- text formats ----

fn header<'a>(lines: &'a [(usize, Vec<&'a str>)], kind: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
    let (no, toks) = lines.first().ok_or_else(|| Error::input(format!("empty {kind} source")))?;
    if toks.len() != arity + 2 || toks[0] != "p" || toks[1] != kind {
        return Err(Error::parse(*no, format!("expected 'p {kind}' header with {arity} numbers")));
    }
    let nums = toks[2..].iter().map(|t| parse_num(t, *no, "header field")).collect::<Result<_>>()?;
    Ok((*no, nums))
}

fn nums(toks: &[&str], no: usize) -> Result<Vec<usize>> {
    toks.iter().map(|t| parse_num(t, no, "number")).collect()
}

fn x3c_from_lines(lines: &[(usize, Vec<&str>)]) -> Result<X3cInstance> {
    let (no, h) = header(lines, "x3c", 2)?;
    let mut triples = Vec::new();
    for (l, toks) in &lines[1..] {
        match toks.as_slice() {
            ["s", a, b, c] => triples.push([parse_num(a, *l, "element")?, parse_num(b, *l, "element")?, parse_num(c, *l, "element")?]),
            _ => return Err(Error::parse(*l, "expected 's a b c'")),
        }
    }
    if triples.len() != h[1] {
        return Err(Error::parse(no, format!("header says {} triples, found {}", h[1], triples.len())));
    }
    X3cInstance::new(h[0], triples)
}

pub fn parse_x3c(text: &str) -> Result<X3cInstance> {
    x3c_from_lines(&token_lines(text))
}

pub fn write_x3c(x: &X3cInstance) -> String {
    let mut out = format!("p x3c {} {}\n", x.q, x.triples.len());
    for t in &x.triples {
        let _ = writeln!(out, "s {} {} {}", t[0], t[1], t[2]);
    }
    out
}

/// Splits at every `p x3c` header.
pub fn parse_x3c_family(text: &str) -> Result<Vec<X3cInstance>> {
    let lines = token_lines(text);
    let starts: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].1.first() == Some(&"p")).collect();
    if starts.first() != Some(&0) {
        return Err(Error::input("X3C family must start with a 'p x3c' header"));
    }
    starts
        .iter()
        .enumerate()
        .map(|(k, &s)| x3c_from_lines(&lines[s..starts.get(k + 1).copied().unwrap_or(lines.len())]))
        .collect()
}

pub fn write_x3c_family(xs: &[X3cInstance]) -> String {
    xs.iter().map(write_x3c).collect()
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let lines = token_lines(text);
    let (no, h) = header(&lines, "sets", 3)?;
    let mut sets = Vec::new();
    for (l, toks) in &lines[1..] {
        if toks[0] != "s" {
            return Err(Error::parse(*l, "expected 's e1 e2 ...'"));
        }
        sets.push(nums(&toks[1..], *l)?);
    }
    if sets.len() != h[1] {
        return Err(Error::parse(no, format!("header says {} sets, found {}", h[1], sets.len())));
    }
    SetSystem::new(h[0], sets, h[2])
}

pub fn write_set_system(s: &SetSystem) -> String {
    let mut out = format!("p sets {} {} {}\n", s.n, s.sets.len(), s.t);
    for set in &s.sets {
        out.push('s');
        for e in set {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_domset(text: &str) -> Result<DomSetSource> {
    let lines = token_lines(text);
    let (no, h) = header(&lines, "ds", 3)?;
    let mut edges = Vec::new();
    for (l, toks) in &lines[1..] {
        match toks.as_slice() {
            ["e", u, v] => edges.push((parse_num(u, *l, "vertex")?, parse_num(v, *l, "vertex")?)),
            _ => return Err(Error::parse(*l, "expected 'e u v'")),
        }
    }
    if edges.len() != h[1] {
        return Err(Error::parse(no, format!("header says {} edges, found {}", h[1], edges.len())));
    }
    Ok(DomSetSource { h: Graph::from_edges(h[0], &edges)?, t: h[2] })
}

pub fn write_domset(d: &DomSetSource) -> String {
    let mut out = format!("p ds {} {} {}\n", d.h.n(), d.h.m(), d.t);
    for (u, v) in d.h.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_partitioned(text: &str) -> Result<PartitionedGraph> {
    let lines = token_lines(text);
    let (_, h) = header(&lines, "mcc", 2)?;
    let mut edges = Vec::new();
    let mut pattern: Option<Vec<(usize, usize)>> = None;
    for (l, toks) in &lines[1..] {
        match toks.as_slice() {
            ["e", rest @ ..] if rest.len() == 4 => {
                let v = nums(rest, *l)?;
                edges.push((v[0], v[1], v[2], v[3]));
            }
            ["h", i, j] => pattern
                .get_or_insert_with(Vec::new)
                .push((parse_num(i, *l, "class")?, parse_num(j, *l, "class")?)),
            _ => return Err(Error::parse(*l, "expected 'e i q j q2' or 'h i j'")),
        }
    }
    PartitionedGraph::new(h[0], h[1], edges, pattern)
}

pub fn write_partitioned(p: &PartitionedGraph) -> String {
    let mut out = format!("p mcc {} {}\n", p.k, p.t);
    for &(i, q, j, r) in &p.edges {
        let _ = writeln!(out, "e {i} {q} {j} {r}");
    }
    for &(i, j) in p.pattern.iter().flatten() {
        let _ = writeln!(out, "h {i} {j}");
    }
    out
}

// ---- random sources ----

pub fn random_x3c<R: Rng>(rng: &mut R, q: usize, nsets: usize) -> X3cInstance {
    let u = 3 * q;
    let mut triples = Vec::with_capacity(nsets);
    if rng.gen_bool(0.5) && nsets >= q {
        let mut perm: Vec<usize> = (0..u).collect();
        perm.shuffle(rng);
        for c in perm.chunks(3) {
            triples.push([c[0], c[1], c[2]]);
        }
    }
    let all: Vec<usize> = (0..u).collect();
    while triples.len() < nsets {
        let t: Vec<usize> = all.choose_multiple(rng, 3).copied().collect();
        triples.push([t[0], t[1], t[2]]);
    }
    triples.shuffle(rng);
    for t in &mut triples {
        t.sort_unstable();
    }
    X3cInstance::new(q, triples).expect("valid triples")
}

pub fn random_small_x3c<R: Rng>(rng: &mut R) -> X3cInstance {
    let q = rng.gen_range(1..=2);
    let nsets = rng.gen_range(q..=q + 3);
    random_x3c(rng, q, nsets)
}

pub fn random_set_system<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> SetSystem {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let density = rng.gen_range(0.2..0.6);
    let sets = (0..m).map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect()).collect();
    let t = rng.gen_range(1..=3);
    SetSystem::new(n, sets, t).expect("elements in range")
}

pub fn random_domset<R: Rng>(rng: &mut R, max_n: usize) -> DomSetSource {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.15..0.6);
    DomSetSource { h: sampling::random_graph(rng, n, p), t: rng.gen_range(1..=3) }
}

/// Random partitioned graph in which every required class pair has at
/// least one edge. With probability 0.3 a random pattern is drawn.
pub fn random_partitioned<R: Rng>(rng: &mut R, k: usize, t: usize) -> PartitionedGraph {
    let all: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let pattern = rng.gen_bool(0.3).then(|| {
        let mut p: Vec<(usize, usize)> = all.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        if p.is_empty() {
            p.push(*all.choose(rng).expect("k >= 2"));
        }
        p
    });
    let pairs = pattern.clone().unwrap_or_else(|| all.clone());
    let density = rng.gen_range(0.3..0.8);
    let mut edges = Vec::new();
    for &(i, j) in &pairs {
        let mut any = false;
        for q in 0..t {
            for r in 0..t {
                if rng.gen_bool(density) {
                    edges.push((i, q, j, r));
                    any = true;
                }
            }
        }
        if !any {
            edges.push((i, rng.gen_range(0..t), j, rng.gen_range(0..t)));
        }
    }
    PartitionedGraph::new(k, t, edges, pattern).expect("valid partitioned graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_cover_small() {
        let x = X3cInstance::new(2, vec![[0, 1, 2], [2, 3, 4], [3, 4, 5]]).unwrap();
        assert_eq!(x.exact_cover(), Some(vec![0, 2]));
        let y = X3cInstance::new(2, vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]]).unwrap();
        assert_eq!(y.exact_cover(), None);
        assert!(X3cInstance::new(0, vec![]).is_err());
        assert!(X3cInstance::new(1, vec![[0, 0, 1]]).is_err());
    }

    #[test]
    fn hitting_and_covering() {
        let s = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]], 1).unwrap();
        assert!(s.has_hitting_set());
        let s0 = SetSystem { t: 0, ..s.clone() };
        assert!(!s0.has_hitting_set());
        let c = SetSystem::new(2, vec![vec![0], vec![1], vec![0, 1]], 1).unwrap();
        assert!(c.has_set_cover());
        let c2 = SetSystem::new(2, vec![vec![0], vec![1]], 1).unwrap();
        assert!(!c2.has_set_cover());
    }

    #[test]
    fn domination_of_a_path() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!DomSetSource { h: p5.clone(), t: 1 }.has_dominating_set());
        assert!(DomSetSource { h: p5, t: 2 }.has_dominating_set());
    }

    #[test]
    fn multicolored_triangle() {
        let tri = PartitionedGraph::new(3, 2, vec![(0, 1, 1, 0), (1, 0, 2, 1), (0, 1, 2, 1)], None).unwrap();
        assert_eq!(tri.find_pattern(), Some(vec![1, 0, 1]));
        let path = PartitionedGraph::new(3, 2, vec![(0, 1, 1, 0), (1, 0, 2, 1), (0, 0, 2, 1)], None).unwrap();
        assert_eq!(path.find_pattern(), None);
        let pat = PartitionedGraph::new(3, 2, vec![(0, 1, 1, 0), (1, 0, 2, 1)], Some(vec![(0, 1), (1, 2)])).unwrap();
        assert!(pat.find_pattern().is_some());
        assert!(PartitionedGraph::new(3, 2, vec![(0, 0, 2, 0)], Some(vec![(0, 1)])).is_err());
    }

    #[test]
    fn formats_round_trip() {
        let mut r = sampling::rng(5);
        for _ in 0..20 {
            let x = random_small_x3c(&mut r);
            assert_eq!(parse_x3c(&write_x3c(&x)).unwrap(), x);
            let fam = vec![x.clone(), random_x3c(&mut r, x.q, x.triples.len())];
            assert_eq!(parse_x3c_family(&write_x3c_family(&fam)).unwrap(), fam);
            let s = random_set_system(&mut r, 6, 5);
            assert_eq!(parse_set_system(&write_set_system(&s)).unwrap(), s);
            let d = random_domset(&mut r, 6);
            assert_eq!(parse_domset(&write_domset(&d)).unwrap(), d);
            let p = random_partitioned(&mut r, 3, 2);
            assert_eq!(parse_partitioned(&write_partitioned(&p)).unwrap(), p);
        }
        assert!(parse_x3c("p x3c 1 2\ns 0 1 2\n").is_err());
    }
}
