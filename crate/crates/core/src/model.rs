//! Vertex-colored graphs, color multisets and the solution predicate.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = usize;

/// A simple undirected graph on vertices `0..n` stored as sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `vertices` (any order, no duplicates); vertex `i`
    /// of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                let mut list = Vec::with_capacity(n - 1 - self.adj[u].len());
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                        continue;
                    }
                    if v != u {
                        list.push(v);
                    }
                }
                list
            })
            .collect();
        Graph { adj }
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = (0..self.n()).collect();
        connected_components(self, &all).len() <= 1
    }
}

/// Per-vertex colors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// One past the largest color id in use.
    pub fn color_bound(&self) -> usize {
        self.0.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Multiset of the colors carried by `vertices`.
    pub fn multiset_of(&self, vertices: &[Vertex]) -> Motif {
        Motif::from_colors(vertices.iter().map(|&v| self.0[v]))
    }
}

/// A multiset of colors.
///
/// Multiplicities stored are always positive. The empty multiset is a valid
/// value of this type (it shows up as the result of differences), but an
/// [`Instance`] never carries one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Motif {
    counts: BTreeMap<Color, usize>,
    total: usize,
}

impl Motif {
    pub fn new() -> Self {
        Motif::default()
    }

    /// Builds a multiset from `(color, multiplicity)` pairs. Repeated colors add up;
    /// zero multiplicities are rejected.
    pub fn from_pairs<I: IntoIterator<Item = (Color, usize)>>(pairs: I) -> Result<Self> {
        let mut m = Motif::new();
        for (c, k) in pairs {
            if k == 0 {
                return Err(Error::input(format!("color {c} has multiplicity 0")));
            }
            m.add(c, k);
        }
        Ok(m)
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let mut m = Motif::new();
        for c in colors {
            m.add(c, 1);
        }
        m
    }

    pub fn add(&mut self, color: Color, k: usize) {
        if k == 0 {
            return;
        }
        *self.counts.entry(color).or_insert(0) += k;
        self.total += k;
    }

    /// Removes up to `k` copies of `color`.
    pub fn remove(&mut self, color: Color, k: usize) {
        if let Some(cur) = self.counts.get_mut(&color) {
            let take = k.min(*cur);
            *cur -= take;
            self.total -= take;
            if *cur == 0 {
                self.counts.remove(&color);
            }
        }
    }

    pub fn multiplicity(&self, color: Color) -> usize {
        self.counts.get(&color).copied().unwrap_or(0)
    }

    /// Cardinality counted with multiplicity.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Color, usize)> + '_ {
        self.counts.iter().map(|(&c, &k)| (c, k))
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.counts.keys().copied()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.counts.keys().next_back().copied()
    }

    /// `other ⊆ self` as multisets.
    pub fn includes(&self, other: &Motif) -> bool {
        other.iter().all(|(c, k)| self.multiplicity(c) >= k)
    }

    /// Saturating multiset difference `self ∖ other`.
    pub fn difference(&self, other: &Motif) -> Motif {
        let mut out = self.clone();
        for (c, k) in other.iter() {
            out.remove(c, k);
        }
        out
    }

    pub fn union(&self, other: &Motif) -> Motif {
        let mut out = self.clone();
        for (c, k) in other.iter() {
            out.add(c, k);
        }
        out
    }

    /// Multiplicities as a dense vector indexed by color, of length at least `len`.
    pub fn dense(&self, len: usize) -> Vec<usize> {
        let len = len.max(self.max_color().map_or(0, |c| c + 1));
        let mut v = vec![0; len];
        for (c, k) in self.iter() {
            v[c] = k;
        }
        v
    }
}

impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (c, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}x{c}")?;
        }
        write!(f, "}}")
    }
}

/// A Graph Motif instance: graph, coloring and a non-empty motif.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub coloring: Coloring,
    pub motif: Motif,
}

impl Instance {
    pub fn new(graph: Graph, coloring: Coloring, motif: Motif) -> Result<Self> {
        if coloring.len() != graph.n() {
            return Err(Error::input(format!(
                "coloring has {} entries but the graph has {} vertices",
                coloring.len(),
                graph.n()
            )));
        }
        if motif.is_empty() {
            return Err(Error::input("empty motif"));
        }
        Ok(Instance {
            graph,
            coloring,
            motif,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.coloring.get(v)
    }

    /// Sub-instance induced by `vertices`, same motif. Vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Instance {
        Instance {
            graph: self.graph.induced(vertices),
            coloring: Coloring::new(vertices.iter().map(|&v| self.color(v)).collect()),
            motif: self.motif.clone(),
        }
    }
}

/// Answer of a solver. A `Yes` witness is sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    No,
    Yes(Vec<Vertex>),
}

impl SolveOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveOutcome::Yes(_))
    }

    pub fn witness(&self) -> Option<&[Vertex]> {
        match self {
            SolveOutcome::Yes(w) => Some(w),
            SolveOutcome::No => None,
        }
    }
}

/// Why a candidate vertex set is or is not a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Empty,
    Duplicate,
    Disconnected,
    MultisetMismatch,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Empty => "empty",
            Verdict::Duplicate => "duplicate",
            Verdict::Disconnected => "connectivity",
            Verdict::MultisetMismatch => "multiset",
        }
    }
}

/// Classifies `r` against `inst`. Multiset failures are reported before
/// connectivity failures.
pub fn check_solution(inst: &Instance, r: &[Vertex]) -> Result<Verdict> {
    let n = inst.n();
    if let Some(&bad) = r.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("vertex {bad} out of range for n={n}")));
    }
    if r.is_empty() {
        return Ok(Verdict::Empty);
    }
    let mut sorted = r.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Verdict::Duplicate);
    }
    if inst.coloring.multiset_of(&sorted) != inst.motif {
        return Ok(Verdict::MultisetMismatch);
    }
    if connected_components(&inst.graph, &sorted).len() != 1 {
        return Ok(Verdict::Disconnected);
    }
    Ok(Verdict::Valid)
}

/// True iff `r` is non-empty, induces a connected subgraph and its colors
/// equal the motif exactly.
pub fn verify_solution(inst: &Instance, r: &[Vertex]) -> Result<bool> {
    check_solution(inst, r).map(|v| v == Verdict::Valid)
}

/// Connected components of `G[s]`, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph, s: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut in_set = vec![false; g.n()];
    for &v in s {
        in_set[v] = true;
    }
    let mut starts = s.to_vec();
    starts.sort_unstable();
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for &root in &starts {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if in_set[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Old-to-new vertex renumbering produced by restricting an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

impl VertexMap {
    pub fn from_kept(n_old: usize, kept: Vec<Vertex>) -> Self {
        let mut old_to_new = vec![None; n_old];
        for (i, &v) in kept.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        VertexMap {
            old_to_new,
            new_to_old: kept,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.old_to_new.len() == self.new_to_old.len()
            && self.new_to_old.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn to_old(&self, vs: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = vs.iter().map(|&v| self.new_to_old[v]).collect();
        out.sort_unstable();
        out
    }

    /// Maps old ids to new ids, dropping vertices that were removed.
    pub fn to_new(&self, vs: &[Vertex]) -> Vec<Vertex> {
        vs.iter().filter_map(|&v| self.old_to_new[v]).collect()
    }
}

/// Drops every vertex whose color does not occur in the motif.
pub fn prune_wrong_colors(inst: &Instance) -> (Instance, VertexMap) {
    let kept: Vec<Vertex> = (0..inst.n())
        .filter(|&v| inst.motif.multiplicity(inst.color(v)) > 0)
        .collect();
    let pruned = inst.induced(&kept);
    (pruned, VertexMap::from_kept(inst.n(), kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(Graph::from_edges_dedup(2, &[(0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn complement_of_path() {
        let c = path3().complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
    }

    #[test]
    fn motif_algebra_matches_the_worked_example() {
        let m = Motif::from_colors([1, 2, 2, 4, 5, 5, 5]);
        let n = Motif::from_colors([1, 1, 1, 2, 2, 3, 3, 4, 5, 5, 5, 5]);
        assert_eq!(m.total(), 7);
        assert_eq!(n.total(), 12);
        assert!(m.difference(&n).is_empty());
        assert_eq!(n.difference(&m), Motif::from_colors([1, 1, 3, 3, 5]));
        assert!(n.includes(&m));
        assert!(!m.includes(&n));
    }

    #[test]
    fn empty_motif_is_rejected() {
        let g = Graph::empty(1);
        assert!(Instance::new(g, Coloring::new(vec![0]), Motif::new()).is_err());
    }

    #[test]
    fn verify_single_vertex() {
        let inst = Instance::new(Graph::empty(1), Coloring::new(vec![1]), Motif::from_colors([1])).unwrap();
        assert!(verify_solution(&inst, &[0]).unwrap());
    }

    #[test]
    fn verify_rejects_disconnected_pair() {
        let inst = Instance::new(Graph::empty(2), Coloring::new(vec![1, 1]), Motif::from_colors([1, 1])).unwrap();
        assert!(!verify_solution(&inst, &[0, 1]).unwrap());
        assert_eq!(check_solution(&inst, &[0, 1]).unwrap(), Verdict::Disconnected);
    }

    #[test]
    fn verify_reports_multiset_and_range_errors() {
        let inst = Instance::new(path3(), Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 1])).unwrap();
        assert_eq!(check_solution(&inst, &[0, 1, 2]).unwrap(), Verdict::MultisetMismatch);
        assert_eq!(check_solution(&inst, &[]).unwrap(), Verdict::Empty);
        assert_eq!(check_solution(&inst, &[1, 1]).unwrap(), Verdict::Duplicate);
        assert!(check_solution(&inst, &[3]).is_err());
    }

    #[test]
    fn components_examples() {
        let g = path3();
        assert_eq!(connected_components(&g, &[0, 2]), vec![vec![0], vec![2]]);
        assert!(connected_components(&g, &[]).is_empty());
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(connected_components(&tri, &[2, 0, 1]), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn prune_examples() {
        let inst = Instance::new(path3(), Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 1])).unwrap();
        let (p, map) = prune_wrong_colors(&inst);
        assert!(map.is_identity());
        assert_eq!(p, inst);

        let inst = Instance::new(path3(), Coloring::new(vec![0, 7, 0]), Motif::from_colors([0])).unwrap();
        let (p, map) = prune_wrong_colors(&inst);
        assert_eq!(p.n(), 2);
        assert_eq!(map.new_to_old, vec![0, 2]);
        assert_eq!(map.old_to_new[1], None);

        let inst = Instance::new(path3(), Coloring::new(vec![3, 3, 3]), Motif::from_colors([0])).unwrap();
        let (p, _) = prune_wrong_colors(&inst);
        assert_eq!(p.n(), 0);
    }
}
