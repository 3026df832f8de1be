//! Solver for graphs given with a partition of the vertices into cliques.
//!
//! Guess the cliques `C'_1..C'_k'` meeting the solution and the shape of
//! `k' - 1` transversal edges joining them: a labeled spanning tree on the
//! clique indices plus, inside each clique, which tree edges share an
//! endpoint. Each shared endpoint becomes a node of an abstract forest. Node
//! colors are guessed through a König win/win on the per-edge color graphs
//! `B_e`: an edge whose `B_e` has a large matching is abundant and left for
//! later, otherwise we branch on a small vertex cover of `B_e`. The forest is
//! then realized bottom-up (candidate sets `J`) and extracted top-down, and
//! the solution is completed with any vertices of the right colors.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::Budget;
use crate::combinatorics::{
    iter_labeled_trees, iter_set_partitions, iter_subsets_by_size, max_matching_with_cover, BipartiteGraph, Side,
};
use crate::error::Result;
use crate::model::{connected_components, Color, Graph, Instance, Motif, Vertex};
use crate::solvers::pick_by_color;

pub(crate) fn vcc_core(inst: &Instance, cliques: &[Vec<Vertex>], budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    let n = inst.n();
    let motif = &inst.motif;
    let k = cliques.len();
    let mut clique_of = vec![usize::MAX; n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            clique_of[v] = i;
        }
    }
    // ordered color pairs of transversal edges, per ordered clique pair
    let mut pairs: BTreeMap<(usize, usize), BTreeSet<(Color, Color)>> = BTreeMap::new();
    for (u, v) in inst.graph.edges() {
        let (i, j) = (clique_of[u], clique_of[v]);
        if i == j {
            continue;
        }
        let (cu, cv) = (inst.color(u), inst.color(v));
        if cu == cv && motif.multiplicity(cu) < 2 {
            continue;
        }
        pairs.entry((i, j)).or_default().insert((cu, cv));
        pairs.entry((j, i)).or_default().insert((cv, cu));
    }
    let quotient = Graph::from_edges(
        k,
        &pairs.keys().filter(|&&(i, j)| i < j).copied().collect::<Vec<_>>(),
    )?;

    let ctx = Ctx {
        inst,
        cliques,
        pairs: &pairs,
        budget,
    };
    let ids: Vec<usize> = (0..k).collect();
    for chosen in iter_subsets_by_size(&ids).skip(1) {
        if chosen.len() > motif.total() {
            break;
        }
        budget.tick()?;
        let union: Vec<Vertex> = chosen.iter().flat_map(|&i| cliques[i].iter().copied()).collect();
        if !inst.coloring.multiset_of(&union).includes(motif) {
            continue;
        }
        if chosen.len() == 1 {
            return Ok(pick_by_color(inst, union, motif, &vec![false; n]));
        }
        if connected_components(&quotient, &chosen).len() != 1 {
            continue;
        }
        if let Some(nodes) = ctx.search_subset(&chosen, &quotient)? {
            let mut taken = vec![false; n];
            for &v in &nodes {
                taken[v] = true;
            }
            let leftover = motif.difference(&inst.coloring.multiset_of(&nodes));
            if let Some(mut extra) = pick_by_color(inst, union, &leftover, &taken) {
                let mut r = nodes;
                r.append(&mut extra);
                r.sort_unstable();
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

struct Ctx<'a> {
    inst: &'a Instance,
    cliques: &'a [Vec<Vertex>],
    pairs: &'a BTreeMap<(usize, usize), BTreeSet<(Color, Color)>>,
    budget: &'a Budget,
}

/// An abstract forest: nodes are shared transversal-edge endpoints.
struct Shape {
    clique: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Ctx<'_> {
    /// Tries every tree shape over the chosen cliques; returns the
    /// transversal-edge endpoints of a realizable one.
    fn search_subset(&self, chosen: &[usize], quotient: &Graph) -> Result<Option<Vec<Vertex>>> {
        let kp = chosen.len();
        let local_edges: Vec<(usize, usize)> = (0..kp)
            .flat_map(|a| (a + 1..kp).map(move |b| (a, b)))
            .filter(|&(a, b)| quotient.has_edge(chosen[a], chosen[b]))
            .collect();
        // every labeled tree is a candidate when the cliques are pairwise
        // adjacent; otherwise only spanning trees of the quotient are
        let trees: Vec<Vec<(usize, usize)>> = if local_edges.len() == kp * (kp - 1) / 2 {
            iter_labeled_trees(kp).collect()
        } else {
            spanning_trees(kp, &local_edges)
        };
        for tree in trees {
            // tree edges incident to each local clique
            let mut incident: Vec<Vec<usize>> = vec![Vec::new(); kp];
            for (e, &(a, b)) in tree.iter().enumerate() {
                incident[a].push(e);
                incident[b].push(e);
            }
            // distinct shared endpoints in one clique are distinct vertices
            let options: Vec<Vec<Vec<Vec<usize>>>> = incident
                .iter()
                .enumerate()
                .map(|(i, inc)| {
                    iter_set_partitions(inc)
                        .filter(|p| p.len() <= self.cliques[chosen[i]].len())
                        .collect()
                })
                .collect();
            let mut pick = vec![0usize; kp];
            loop {
                self.budget.tick()?;
                let shape = build_shape(chosen, &tree, &options, &pick);
                if let Some(found) = self.solve_shape(&shape, kp)? {
                    return Ok(Some(found));
                }
                // odometer over the per-clique sharing partitions
                let mut i = 0;
                while i < kp {
                    pick[i] += 1;
                    if pick[i] < options[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == kp {
                    break;
                }
            }
        }
        Ok(None)
    }

    fn colors_in(&self, clique: usize) -> BTreeSet<Color> {
        self.cliques[clique]
            .iter()
            .map(|&v| self.inst.color(v))
            .filter(|&c| self.inst.motif.multiplicity(c) > 0)
            .collect()
    }

    fn allowed(&self, shape: &Shape, e: usize, ca: Color, cb: Color) -> bool {
        let (a, b) = shape.edges[e];
        self.pairs
            .get(&(shape.clique[a], shape.clique[b]))
            .is_some_and(|p| p.contains(&(ca, cb)))
    }

    fn solve_shape(&self, shape: &Shape, kp: usize) -> Result<Option<Vec<Vertex>>> {
        let nodes = shape.clique.len();
        let mut cand: Vec<BTreeSet<Color>> = shape.clique.iter().map(|&c| self.colors_in(c)).collect();
        // arc consistency along the forest edges
        let mut changed = true;
        while changed {
            changed = false;
            for (e, &(a, b)) in shape.edges.iter().enumerate() {
                let keep_a: BTreeSet<Color> = cand[a]
                    .iter()
                    .copied()
                    .filter(|&ca| cand[b].iter().any(|&cb| self.allowed(shape, e, ca, cb)))
                    .collect();
                let keep_b: BTreeSet<Color> = cand[b]
                    .iter()
                    .copied()
                    .filter(|&cb| keep_a.iter().any(|&ca| self.allowed(shape, e, ca, cb)))
                    .collect();
                if keep_a.len() != cand[a].len() || keep_b.len() != cand[b].len() {
                    changed = true;
                    cand[a] = keep_a;
                    cand[b] = keep_b;
                }
                if cand[a].is_empty() || cand[b].is_empty() {
                    return Ok(None);
                }
            }
        }
        let mut state = Branch {
            ctx: self,
            shape,
            cand: &cand,
            threshold: 2 * kp - 3,
            fixed: vec![None; nodes],
            used: Motif::new(),
            abundant: vec![false; shape.edges.len()],
        };
        state.branch()
    }
}

/// Spanning trees of the graph on `0..k` with edges `edges`, by
/// include/exclude over the edge list.
fn spanning_trees(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    fn go(
        k: usize,
        edges: &[(usize, usize)],
        i: usize,
        parent: &mut Vec<usize>,
        tree: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if tree.len() + 1 == k {
            out.push(tree.clone());
            return;
        }
        if edges.len() - i < k - 1 - tree.len() {
            return;
        }
        let (a, b) = edges[i];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            tree.push((a, b));
            go(k, edges, i + 1, parent, tree, out);
            tree.pop();
            parent[ra] = ra;
        }
        go(k, edges, i + 1, parent, tree, out);
    }
    let mut out = Vec::new();
    go(k, edges, 0, &mut (0..k).collect(), &mut Vec::new(), &mut out);
    out
}

fn build_shape(chosen: &[usize], tree: &[(usize, usize)], options: &[Vec<Vec<Vec<usize>>>], pick: &[usize]) -> Shape {
    let mut clique = Vec::new();
    // node_of[(local clique, edge)] = node id
    let mut node_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (local, opts) in options.iter().enumerate() {
        for class in &opts[pick[local]] {
            let id = clique.len();
            clique.push(chosen[local]);
            for &e in class {
                node_of.insert((local, e), id);
            }
        }
    }
    let edges = tree
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (node_of[&(a, e)], node_of[&(b, e)]))
        .collect();
    Shape { clique, edges }
}

struct Branch<'a, 'c> {
    ctx: &'a Ctx<'c>,
    shape: &'a Shape,
    cand: &'a [BTreeSet<Color>],
    threshold: usize,
    fixed: Vec<Option<Color>>,
    used: Motif,
    abundant: Vec<bool>,
}

impl Branch<'_, '_> {
    fn motif(&self) -> &Motif {
        &self.ctx.inst.motif
    }

    /// Fixes `node` to `color` if the budget and every fully fixed edge at
    /// `node` allow it.
    fn try_fix(&mut self, node: usize, color: Color) -> bool {
        if self.used.multiplicity(color) >= self.motif().multiplicity(color) {
            return false;
        }
        for (e, &(a, b)) in self.shape.edges.iter().enumerate() {
            let ok = if a == node {
                self.fixed[b].is_none_or(|cb| self.ctx.allowed(self.shape, e, color, cb))
            } else if b == node {
                self.fixed[a].is_none_or(|ca| self.ctx.allowed(self.shape, e, ca, color))
            } else {
                true
            };
            if !ok {
                return false;
            }
        }
        self.fixed[node] = Some(color);
        self.used.add(color, 1);
        true
    }

    fn unfix(&mut self, node: usize) {
        let c = self.fixed[node].take().unwrap();
        self.used.remove(c, 1);
    }

    fn with_fixed(&mut self, node: usize, color: Color) -> Result<Option<Vec<Vertex>>> {
        if !self.try_fix(node, color) {
            return Ok(None);
        }
        let found = self.branch();
        self.unfix(node);
        found
    }

    fn branch(&mut self) -> Result<Option<Vec<Vertex>>> {
        self.ctx.budget.tick()?;
        let open = (0..self.shape.edges.len()).find(|&e| {
            let (a, b) = self.shape.edges[e];
            !self.abundant[e] && (self.fixed[a].is_none() || self.fixed[b].is_none())
        });
        let Some(e) = open else {
            return self.finish();
        };
        let (a, b) = self.shape.edges[e];
        match (self.fixed[a], self.fixed[b]) {
            (None, None) => {
                let left: Vec<Color> = self.cand[a].iter().copied().collect();
                let right: Vec<Color> = self.cand[b].iter().copied().collect();
                let mut edges = Vec::new();
                for (i, &ca) in left.iter().enumerate() {
                    for (j, &cb) in right.iter().enumerate() {
                        if self.ctx.allowed(self.shape, e, ca, cb) {
                            edges.push((i, j));
                        }
                    }
                }
                let res = max_matching_with_cover(&BipartiteGraph::new(left.len(), right.len(), &edges)?);
                if res.size() >= self.threshold {
                    return self.abundant_then(e);
                }
                for side in res.cover {
                    let found = match side {
                        Side::Left(i) => self.with_fixed(a, left[i])?,
                        Side::Right(j) => self.with_fixed(b, right[j])?,
                    };
                    if found.is_some() {
                        return Ok(found);
                    }
                }
                Ok(None)
            }
            (Some(ca), None) => {
                let options: Vec<Color> = self.cand[b]
                    .iter()
                    .copied()
                    .filter(|&cb| self.ctx.allowed(self.shape, e, ca, cb))
                    .collect();
                self.branch_one_side(e, b, options)
            }
            (None, Some(cb)) => {
                let options: Vec<Color> = self.cand[a]
                    .iter()
                    .copied()
                    .filter(|&ca| self.ctx.allowed(self.shape, e, ca, cb))
                    .collect();
                self.branch_one_side(e, a, options)
            }
            (Some(_), Some(_)) => unreachable!("edge with both ends fixed is closed"),
        }
    }

    fn branch_one_side(&mut self, e: usize, node: usize, options: Vec<Color>) -> Result<Option<Vec<Vertex>>> {
        if options.len() >= self.threshold {
            return self.abundant_then(e);
        }
        for c in options {
            if let Some(found) = self.with_fixed(node, c)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn abundant_then(&mut self, e: usize) -> Result<Option<Vec<Vertex>>> {
        self.abundant[e] = true;
        let found = self.branch();
        self.abundant[e] = false;
        found
    }

    /// Assigns colors to the nodes left free by the branching, deepest
    /// nodes first, then realizes the forest.
    fn finish(&mut self) -> Result<Option<Vec<Vertex>>> {
        let order = depth_order(self.shape);
        let free: Vec<usize> = order.into_iter().filter(|&v| self.fixed[v].is_none()).collect();
        self.assign(&free, 0)
    }

    fn assign(&mut self, free: &[usize], i: usize) -> Result<Option<Vec<Vertex>>> {
        if i == free.len() {
            let colors: Vec<Color> = self.fixed.iter().map(|c| c.unwrap()).collect();
            return Ok(realize(self.ctx, self.shape, &colors));
        }
        self.ctx.budget.tick()?;
        let node = free[i];
        let options: Vec<Color> = self.cand[node].iter().copied().collect();
        for c in options {
            if self.try_fix(node, c) {
                let found = self.assign(free, i + 1)?;
                self.unfix(node);
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

/// Forest adjacency, roots (smallest node of each tree) and parents.
fn forest(shape: &Shape) -> (Vec<Vec<usize>>, Vec<usize>, Vec<Option<usize>>, Vec<usize>) {
    let nodes = shape.clique.len();
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &shape.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; nodes];
    let mut depth = vec![usize::MAX; nodes];
    let mut bfs = Vec::with_capacity(nodes);
    for root in 0..nodes {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let start = bfs.len();
        bfs.push(root);
        let mut head = start;
        while head < bfs.len() {
            let v = bfs[head];
            head += 1;
            for &w in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    bfs.push(w);
                }
            }
        }
    }
    (adj, bfs, parent, depth)
}

fn depth_order(shape: &Shape) -> Vec<usize> {
    let (_, mut bfs, _, depth) = forest(shape);
    bfs.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    bfs
}

/// Bottom-up candidate sets and top-down extraction for fixed node colors.
fn realize(ctx: &Ctx<'_>, shape: &Shape, colors: &[Color]) -> Option<Vec<Vertex>> {
    let g = &ctx.inst.graph;
    let (_, bfs, parent, _) = forest(shape);
    let nodes = shape.clique.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for &v in &bfs {
        if let Some(p) = parent[v] {
            children[p].push(v);
        }
    }
    let mut j: Vec<Vec<Vertex>> = vec![Vec::new(); nodes];
    for &v in bfs.iter().rev() {
        j[v] = ctx.cliques[shape.clique[v]]
            .iter()
            .copied()
            .filter(|&u| ctx.inst.color(u) == colors[v])
            .filter(|&u| {
                children[v]
                    .iter()
                    .all(|&h| j[h].iter().any(|&x| g.has_edge(u, x)))
            })
            .collect();
        if j[v].is_empty() {
            return None;
        }
    }
    let mut vert = vec![usize::MAX; nodes];
    for &v in &bfs {
        vert[v] = match parent[v] {
            None => j[v][0],
            Some(p) => *j[v].iter().find(|&&x| g.has_edge(vert[p], x)).expect("bottom-up guarantees a neighbor"),
        };
    }
    let mut out: Vec<Vertex> = vert;
    out.sort_unstable();
    out.dedup();
    Some(out)
}

#[cfg(test)]
mod tests {
    use crate::model::{Coloring, Graph, Instance, Motif, SolveOutcome};
    use crate::solvers::{solve_brute, solve_vertex_clique_cover};

    #[test]
    fn spanning_trees_of_small_graphs() {
        // K4 has 16 spanning trees, a 4-cycle 4, a star exactly one
        let k4: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        assert_eq!(super::spanning_trees(4, &k4).len(), 16);
        assert_eq!(super::spanning_trees(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).len(), 4);
        assert_eq!(super::spanning_trees(4, &[(0, 1), (0, 2), (0, 3)]).len(), 1);
        assert_eq!(super::spanning_trees(3, &[(0, 1)]).len(), 0);
    }

    #[test]
    fn single_clique() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let i = Instance::new(g, Coloring::new(vec![0, 1, 1]), Motif::from_colors([1, 0])).unwrap();
        assert_eq!(solve_vertex_clique_cover(&i, &[vec![0, 1, 2]]).unwrap(), SolveOutcome::Yes(vec![0, 1]));
    }

    #[test]
    fn two_cliques_joined_by_one_edge() {
        // {0,1,2} and {3,4,5}, bridge 2-3
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        )
        .unwrap();
        let col = Coloring::new(vec![0, 1, 2, 3, 4, 0]);
        let cover = [vec![0, 1, 2], vec![3, 4, 5]];
        for motif in [vec![0, 4], vec![2, 3], vec![0, 0], vec![1, 2, 3, 4], vec![1, 4]] {
            let i = Instance::new(g.clone(), col.clone(), Motif::from_colors(motif.clone())).unwrap();
            let expect = solve_brute(&i).unwrap().is_yes();
            assert_eq!(solve_vertex_clique_cover(&i, &cover).unwrap().is_yes(), expect, "{motif:?}");
        }
    }

    #[test]
    fn shared_endpoint_must_be_one_vertex() {
        // middle clique {2,3}; only 2 sees the left clique, only 3 the right
        let g = Graph::from_edges(5, &[(0, 2), (2, 3), (3, 4), (0, 1)]).unwrap();
        let col = Coloring::new(vec![0, 0, 1, 1, 2]);
        let cover = [vec![0, 1], vec![2, 3], vec![4]];
        let i = Instance::new(g.clone(), col.clone(), Motif::from_colors([0, 1, 2])).unwrap();
        assert_eq!(solve_vertex_clique_cover(&i, &cover).unwrap(), SolveOutcome::No);
        let i = Instance::new(g, col, Motif::from_colors([0, 1, 1, 2])).unwrap();
        assert_eq!(solve_vertex_clique_cover(&i, &cover).unwrap(), SolveOutcome::Yes(vec![0, 2, 3, 4]));
    }
}
