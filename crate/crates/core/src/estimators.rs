//! Structural parameters: deletion sets, the degree-3 decomposition, clique
//! cover validation and an exact max-leaf oracle for small graphs.

use std::fmt::Write as _;

use crate::budget::Budget;
use crate::combinatorics::iter_subsets_by_size;
use crate::error::{Error, Result};
use crate::model::{connected_components, Graph, Vertex};

/// Mutable view of a graph under vertex deletions.
struct Residual<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        Residual {
            g,
            alive: vec![true; g.n()],
            deg: (0..g.n()).map(|v| g.degree(v)).collect(),
        }
    }

    fn remove(&mut self, v: Vertex) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    fn restore(&mut self, v: Vertex) {
        debug_assert!(!self.alive[v]);
        self.alive[v] = true;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] += 1;
            }
        }
    }

    fn alive_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w]).collect()
    }
}

fn vc_search(r: &mut Residual<'_>, k: usize, chosen: &mut Vec<Vertex>, budget: &Budget) -> Result<bool> {
    budget.tick()?;
    let mut best: Option<Vertex> = None;
    let mut edges2 = 0;
    for v in 0..r.g.n() {
        if !r.alive[v] || r.deg[v] == 0 {
            continue;
        }
        edges2 += r.deg[v];
        if best.is_none_or(|b| r.deg[v] > r.deg[b]) {
            best = Some(v);
        }
    }
    let Some(v) = best else { return Ok(true) };
    if k == 0 || edges2 / 2 > k * r.deg[v] {
        return Ok(false);
    }

    // take v
    r.remove(v);
    chosen.push(v);
    let found = vc_search(r, k - 1, chosen, budget)?;
    r.restore(v);
    if found {
        return Ok(true);
    }
    chosen.pop();

    // or every neighbor of v; a single neighbor is already covered by the first branch
    let nbrs = r.alive_neighbors(v);
    if nbrs.len() < 2 || nbrs.len() > k {
        return Ok(false);
    }
    for &w in &nbrs {
        r.remove(w);
    }
    let before = chosen.len();
    chosen.extend_from_slice(&nbrs);
    let found = vc_search(r, k - nbrs.len(), chosen, budget)?;
    for &w in nbrs.iter().rev() {
        r.restore(w);
    }
    if !found {
        chosen.truncate(before);
    }
    Ok(found)
}

/// Minimum vertex cover of size at most `max_k`, by iterative deepening on
/// the cover size with two-way branching (`v` versus `N(v)` for a vertex `v`
/// of maximum degree). `Ok(None)` if every cover is larger than `max_k`.
pub fn min_vertex_cover_within(g: &Graph, max_k: usize, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let mut r = Residual::new(g);
    for k in 0..=max_k.min(g.n()) {
        let mut chosen = Vec::new();
        if vc_search(&mut r, k, &mut chosen, budget)? {
            chosen.sort_unstable();
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

pub fn min_vertex_cover(g: &Graph) -> Vec<Vertex> {
    min_vertex_cover_within(g, usize::MAX, &Budget::unlimited())
        .expect("unlimited budget")
        .expect("V is always a cover")
}

/// Smallest `S` such that `G - S` is a clique: a minimum vertex cover of
/// the complement.
pub fn dist_to_clique_set(g: &Graph) -> Vec<Vertex> {
    min_vertex_cover(&g.complement())
}

pub fn dist_to_clique_set_within(g: &Graph, max_k: usize, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    min_vertex_cover_within(&g.complement(), max_k, budget)
}

/// An induced co-P3: an edge `uv` and a vertex `w` adjacent to neither.
fn find_co_p3(r: &Residual<'_>) -> Option<[Vertex; 3]> {
    let g = r.g;
    let n = g.n();
    let mut mark = vec![false; n];
    for u in 0..n {
        if !r.alive[u] {
            continue;
        }
        for &v in g.neighbors(u) {
            if v < u || !r.alive[v] {
                continue;
            }
            mark[u] = true;
            mark[v] = true;
            for &x in g.neighbors(u).iter().chain(g.neighbors(v)) {
                mark[x] = true;
            }
            let w = (0..n).find(|&w| r.alive[w] && !mark[w]);
            mark[u] = false;
            mark[v] = false;
            for &x in g.neighbors(u).iter().chain(g.neighbors(v)) {
                mark[x] = false;
            }
            if let Some(w) = w {
                return Some([u, v, w]);
            }
        }
    }
    None
}

fn cocluster_search(r: &mut Residual<'_>, k: usize, chosen: &mut Vec<Vertex>, budget: &Budget) -> Result<bool> {
    budget.tick()?;
    let Some(triple) = find_co_p3(r) else { return Ok(true) };
    if k == 0 {
        return Ok(false);
    }
    for x in triple {
        r.remove(x);
        chosen.push(x);
        let found = cocluster_search(r, k - 1, chosen, budget)?;
        r.restore(x);
        if found {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Minimum deletion set of size at most `max_k` leaving a co-cluster graph
/// (a graph without induced co-P3), by three-way branching.
pub fn dist_to_co_cluster_set_within(g: &Graph, max_k: usize, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let mut r = Residual::new(g);
    for k in 0..=max_k.min(g.n()) {
        let mut chosen = Vec::new();
        if cocluster_search(&mut r, k, &mut chosen, budget)? {
            chosen.sort_unstable();
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

pub fn dist_to_co_cluster_set(g: &Graph) -> Vec<Vertex> {
    dist_to_co_cluster_set_within(g, usize::MAX, &Budget::unlimited())
        .expect("unlimited budget")
        .expect("deleting everything leaves a co-cluster")
}

/// True iff `g` has no induced co-P3.
pub fn is_co_cluster(g: &Graph) -> bool {
    find_co_p3(&Residual::new(g)).is_none()
}

/// Classes of a co-cluster graph: the connected components of its complement.
pub fn co_cluster_classes(g: &Graph, vertices: &[Vertex]) -> Vec<Vec<Vertex>> {
    let sub = g.induced(vertices);
    let comp = sub.complement();
    let all: Vec<Vertex> = (0..sub.n()).collect();
    connected_components(&comp, &all)
        .into_iter()
        .map(|c| c.into_iter().map(|i| vertices[i]).collect())
        .collect()
}

/// True iff `g` is a cycle (connected, at least 3 vertices, all degree 2).
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// A maximal path of `G - S`, listed from one end to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPiece {
    pub vertices: Vec<Vertex>,
    /// Neighbors in `S` of the first vertex.
    pub head_attach: Vec<Vertex>,
    /// Neighbors in `S` of the last vertex.
    pub tail_attach: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree3Decomposition {
    /// Vertices of degree at least 3.
    pub s: Vec<Vertex>,
    pub paths: Vec<PathPiece>,
}

/// Splits `g` into its vertices of degree at least 3 and the paths left
/// after removing them. Fails if some component of `G - S` is a cycle,
/// which for a connected graph happens only when `g` itself is a cycle.
pub fn degree3_decomposition(g: &Graph) -> Result<Degree3Decomposition> {
    let n = g.n();
    let in_s: Vec<bool> = (0..n).map(|v| g.degree(v) >= 3).collect();
    let s: Vec<Vertex> = (0..n).filter(|&v| in_s[v]).collect();
    let rest: Vec<Vertex> = (0..n).filter(|&v| !in_s[v]).collect();
    let inner = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| !in_s[w]).collect() };
    let outer = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| in_s[w]).collect() };

    let mut paths = Vec::new();
    for comp in connected_components(g, &rest) {
        let start = comp.iter().copied().find(|&v| inner(v).len() <= 1).ok_or_else(|| {
            Error::input(format!("component containing vertex {} is a cycle", comp[0]))
        })?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = inner(cur).into_iter().find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    order.push(w);
                }
                None => break,
            }
        }
        debug_assert_eq!(order.len(), comp.len());
        let head_attach = outer(order[0]);
        let tail_attach = outer(*order.last().unwrap());
        paths.push(PathPiece {
            vertices: order,
            head_attach,
            tail_attach,
        });
    }
    Ok(Degree3Decomposition { s, paths })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    /// The cliques partition the vertex set.
    VertexPartition,
    /// Every edge lies inside some clique.
    EdgeCover,
}

pub fn validate_clique_cover(g: &Graph, cliques: &[Vec<Vertex>], mode: CoverMode) -> bool {
    let n = g.n();
    let mut count = vec![0usize; n];
    for c in cliques {
        if c.iter().any(|&v| v >= n) || !g.is_clique(c) {
            return false;
        }
        for &v in c {
            count[v] += 1;
        }
    }
    match mode {
        CoverMode::VertexPartition => count.iter().all(|&k| k == 1),
        CoverMode::EdgeCover => {
            let mut owner: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (i, c) in cliques.iter().enumerate() {
                for &v in c {
                    owner[v].push(i);
                }
            }
            g.edges()
                .iter()
                .all(|&(u, v)| owner[u].iter().any(|i| owner[v].contains(i)))
        }
    }
}

/// A vertex clique cover built greedily: each vertex, in id order, starts a
/// clique that absorbs later unassigned vertices adjacent to all members.
pub fn greedy_vertex_clique_cover(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        assigned[v] = true;
        let mut clique = vec![v];
        for &w in g.neighbors(v) {
            if !assigned[w] && clique.iter().all(|&x| g.has_edge(x, w)) {
                assigned[w] = true;
                clique.push(w);
            }
        }
        clique.sort_unstable();
        out.push(clique);
    }
    out
}

/// The edge clique cover made of one two-vertex clique per edge.
pub fn edge_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    g.edges().into_iter().map(|(u, v)| vec![u, v]).collect()
}

/// Largest graph accepted by [`max_leaf_oracle`].
pub const MAX_LEAF_ORACLE_LIMIT: usize = 20;

/// Exact max leaf number of a connected graph: `n - gamma_c(G)` for
/// `n >= 3`, where `gamma_c` is the minimum connected dominating set size,
/// found by exhaustive search by size.
pub fn max_leaf_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > MAX_LEAF_ORACLE_LIMIT {
        return Err(Error::Capacity(format!("max leaf oracle limited to {MAX_LEAF_ORACLE_LIMIT} vertices")));
    }
    if !g.is_connected() {
        return Err(Error::input("max leaf number needs a connected graph"));
    }
    match n {
        0 | 1 => return Ok(0),
        2 => return Ok(2),
        _ => {}
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let all: Vec<Vertex> = (0..n).collect();
    for d in iter_subsets_by_size(&all).skip(1) {
        let dom = d.iter().fold(0u32, |m, &v| m | closed[v]);
        if dom == full && connected_components(g, &d).len() == 1 {
            return Ok(n - d.len());
        }
    }
    unreachable!("V itself is a connected dominating set")
}

/// Structural parameters of a graph, each `None` when not computed within
/// the given bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub vertex_cover: Option<Vec<Vertex>>,
    pub dist_to_clique: Option<Vec<Vertex>>,
    pub dist_to_co_cluster: Option<Vec<Vertex>>,
    pub degree3: Option<Degree3Decomposition>,
    pub vertex_clique_cover: Option<bool>,
    pub edge_clique_cover: Option<bool>,
}

/// Computes every parameter, giving up on a deletion set once it would
/// exceed `max_k` or once `budget` runs out.
pub fn param_report(
    g: &Graph,
    vertex_cover_cliques: Option<&[Vec<Vertex>]>,
    edge_cover_cliques: Option<&[Vec<Vertex>]>,
    max_k: usize,
    budget: &Budget,
) -> ParamReport {
    let all: Vec<Vertex> = (0..g.n()).collect();
    let ok = |r: Result<Option<Vec<Vertex>>>| r.ok().flatten();
    ParamReport {
        n: g.n(),
        m: g.m(),
        components: connected_components(g, &all).len(),
        vertex_cover: ok(min_vertex_cover_within(g, max_k, budget)),
        dist_to_clique: ok(dist_to_clique_set_within(g, max_k, budget)),
        dist_to_co_cluster: ok(dist_to_co_cluster_set_within(g, max_k, budget)),
        degree3: degree3_decomposition(g).ok(),
        vertex_clique_cover: vertex_cover_cliques.map(|c| validate_clique_cover(g, c, CoverMode::VertexPartition)),
        edge_clique_cover: edge_cover_cliques.map(|c| validate_clique_cover(g, c, CoverMode::EdgeCover)),
    }
}

impl ParamReport {
    /// One `label: value` line per parameter.
    pub fn render(&self) -> String {
        fn set(out: &mut String, label: &str, s: &Option<Vec<Vertex>>) {
            match s {
                Some(s) => {
                    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "{label}: {} [{}]", s.len(), ids.join(" "));
                }
                None => {
                    let _ = writeln!(out, "{label}: unknown");
                }
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}", self.n);
        let _ = writeln!(out, "edges: {}", self.m);
        let _ = writeln!(out, "components: {}", self.components);
        set(&mut out, "vertex-cover", &self.vertex_cover);
        set(&mut out, "distance-to-clique", &self.dist_to_clique);
        set(&mut out, "distance-to-co-cluster", &self.dist_to_co_cluster);
        match &self.degree3 {
            Some(d) => {
                let _ = writeln!(out, "degree3-set: {}", d.s.len());
                let _ = writeln!(out, "paths: {}", d.paths.len());
            }
            None => {
                let _ = writeln!(out, "degree3-set: cycle");
            }
        }
        if let Some(ok) = self.vertex_clique_cover {
            let _ = writeln!(out, "vertex-clique-cover: {}", if ok { "valid" } else { "invalid" });
        }
        if let Some(ok) = self.edge_clique_cover {
            let _ = writeln!(out, "edge-clique-cover: {}", if ok { "valid" } else { "invalid" });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn vertex_cover_examples() {
        assert!(min_vertex_cover(&Graph::empty(4)).is_empty());
        assert_eq!(min_vertex_cover(&path(2)).len(), 1);
        assert_eq!(min_vertex_cover(&petersen()).len(), 6);
        assert_eq!(min_vertex_cover_within(&petersen(), 5, &Budget::unlimited()).unwrap(), None);
    }

    #[test]
    fn clique_distance_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(dist_to_clique_set(&k4).is_empty());
        assert_eq!(dist_to_clique_set(&path(3)).len(), 1);
        // the largest clique of C5 is an edge
        assert_eq!(dist_to_clique_set(&cycle(5)).len(), 3);
    }

    #[test]
    fn co_cluster_examples() {
        // complete tripartite K_{1,2,2}
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(is_co_cluster(&g));
        assert!(dist_to_co_cluster_set(&g).is_empty());
        assert_eq!(co_cluster_classes(&g, &[0, 1, 2, 3, 4]), vec![vec![0], vec![1, 2], vec![3, 4]]);
        assert_eq!(dist_to_co_cluster_set(&path(4)).len(), 1);
    }

    #[test]
    fn degree3_examples() {
        let d = degree3_decomposition(&star(4)).unwrap();
        assert_eq!(d.s, vec![0]);
        assert_eq!(d.paths.len(), 4);
        assert!(d.paths.iter().all(|p| p.vertices.len() == 1 && p.head_attach == vec![0]));

        let d = degree3_decomposition(&path(5)).unwrap();
        assert!(d.s.is_empty());
        assert_eq!(d.paths[0].vertices, vec![0, 1, 2, 3, 4]);

        // K_{1,3} with every edge subdivided once
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let d = degree3_decomposition(&g).unwrap();
        assert_eq!(d.s, vec![0]);
        assert_eq!(d.paths.len(), 3);
        assert_eq!(d.paths[0].vertices, vec![1, 2]);
        assert_eq!(d.paths[0].head_attach, vec![0]);
        assert!(d.paths[0].tail_attach.is_empty());

        assert!(degree3_decomposition(&cycle(5)).is_err());
        assert!(is_cycle(&cycle(5)));
        assert!(!is_cycle(&path(5)));
    }

    #[test]
    fn clique_cover_validation() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let whole = vec![vec![0, 1, 2]];
        assert!(validate_clique_cover(&tri, &whole, CoverMode::VertexPartition));
        assert!(validate_clique_cover(&tri, &whole, CoverMode::EdgeCover));
        let overlap = vec![vec![0, 1], vec![1, 2]];
        assert!(!validate_clique_cover(&tri, &overlap, CoverMode::VertexPartition));
        assert!(!validate_clique_cover(&tri, &overlap, CoverMode::EdgeCover));
        assert!(validate_clique_cover(&tri, &edge_cliques(&tri), CoverMode::EdgeCover));
        assert!(!validate_clique_cover(&path(3), &[vec![0, 1, 2]], CoverMode::VertexPartition));
        let greedy = greedy_vertex_clique_cover(&petersen());
        assert!(validate_clique_cover(&petersen(), &greedy, CoverMode::VertexPartition));
    }

    #[test]
    fn max_leaf_examples() {
        assert_eq!(max_leaf_oracle(&path(6)).unwrap(), 2);
        assert_eq!(max_leaf_oracle(&star(4)).unwrap(), 4);
        assert_eq!(max_leaf_oracle(&cycle(5)).unwrap(), 2);
        assert_eq!(max_leaf_oracle(&path(2)).unwrap(), 2);
        assert!(max_leaf_oracle(&Graph::empty(2)).is_err());
    }

    #[test]
    fn report_renders_labeled_lines() {
        let r = param_report(&path(3), None, None, 10, &Budget::unlimited());
        let text = r.render();
        assert!(text.contains("vertex-cover: 1 [1]"));
        assert!(text.contains("distance-to-clique: 1"));
        assert!(text.contains("paths: 1"));
    }
}
