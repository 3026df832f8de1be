//! Reductions around dominating sets: a wrapper that makes any rooted
//! instance have a dominating set of size 2, and the reduction from
//! Dominating Set to graphs at distance 1 from cluster (or to trees).

use crate::error::{Error, Result};
use crate::model::{Graph, Instance, Vertex};

use super::{Builder, GeneratedInstance, Reduction};

/// Adds a universal vertex `u` and a pendant chain `root - t - s`, with
/// `c(u) = c(t) = x` and `c(s) = y` for fresh colors `x`, `y`. The motif
/// gains `{x, y}`. Since `s` is the only `y` vertex and hangs off `t`, a
/// solution must use `t` rather than `u`, so it is a solution of the rooted
/// instance plus `{s, t}`. `{u, t}` dominates the new graph.
pub fn gen_domset_gadget(inst: &Instance, root: Vertex) -> Result<GeneratedInstance> {
    let n = inst.n();
    if root >= n {
        return Err(Error::input(format!("root {root} out of range")));
    }
    let x = inst.coloring.color_bound().max(inst.motif.max_color().map_or(0, |c| c + 1));
    let y = x + 1;
    let mut b = Builder::default();
    for v in 0..n {
        b.vertex(inst.color(v));
    }
    for (p, q) in inst.graph.edges() {
        b.edge(p, q);
    }
    let u = b.vertex(x);
    let s = b.vertex(y);
    let t = b.vertex(x);
    for v in 0..n {
        b.edge(u, v);
    }
    b.edge(s, t);
    b.edge(t, root);
    b.map("u", u);
    b.map("s", s);
    b.map("t", t);
    b.map("root", root);
    b.claim("dominating-set", 2);
    let mut motif = inst.motif.clone();
    motif.add(x, 1);
    motif.add(y, 1);
    b.finish(Reduction::DomsetGadget, motif, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomVariant {
    /// Each closed neighborhood becomes a clique; removing the hub leaves a
    /// cluster graph.
    Cluster,
    /// Each closed neighborhood becomes a star; the whole graph is a tree.
    Tree,
}

/// For every vertex `v` of `h`, a block made of a special vertex (color
/// `c = |V(h)|`) and one vertex of color `w` per `w ∈ N[v]`. A hub `z` of
/// color `c` is adjacent to every special vertex. The motif is
/// `{c × (t+1)} ∪ {w : w ∈ V(h)}`: picking the blocks of a dominating set
/// of size `t` covers every color `w` once.
///
/// `t` must be positive and is clamped to `|V(h)|`.
pub fn gen_domset_reduction(h: &Graph, t: usize, variant: DomVariant) -> Result<GeneratedInstance> {
    let n = h.n();
    if n == 0 {
        return Err(Error::input("dominating set source needs a vertex"));
    }
    if t == 0 {
        return Err(Error::input("dominating set budget must be at least 1"));
    }
    let t = t.min(n);
    let special = n;
    let mut b = Builder::default();
    let z = b.vertex(special);
    b.map("z", z);
    let mut cover = vec![vec![z]];
    for v in 0..n {
        let sp = b.vertex(special);
        b.edge(z, sp);
        b.map(format!("v:{v}"), sp);
        let mut closed: Vec<Vertex> = h.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        let mut block = vec![sp];
        block.extend(closed.iter().map(|&w| b.vertex(w)));
        match variant {
            DomVariant::Cluster => b.clique(&block),
            DomVariant::Tree => {
                for &w in &block[1..] {
                    b.edge(sp, w);
                }
            }
        }
        cover.push(block);
    }
    let mut motif = crate::model::Motif::from_colors(0..n);
    motif.add(special, t + 1);
    match variant {
        DomVariant::Cluster => {
            b.claim("distance-to-cluster", 1);
            b.finish(Reduction::DomsetCluster, motif, Some(cover))
        }
        DomVariant::Tree => {
            b.claim("tree", 1);
            b.finish(Reduction::DomsetTree, motif, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::DomSetSource;
    use crate::model::{Coloring, Motif};
    use crate::solvers::{solve_brute, solve_brute_rooted};

    #[test]
    fn gadget_preserves_rooted_answer() {
        // path 0-1-2 colored a b a; motif {a, b}
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = Instance::new(g, Coloring::new(vec![0, 1, 0]), Motif::from_colors([0, 1])).unwrap();
        for root in 0..3 {
            let gen = gen_domset_gadget(&inst, root).unwrap();
            assert_eq!(gen.instance.n(), 6);
            let expect = solve_brute_rooted(&inst, root).unwrap().is_yes();
            assert_eq!(solve_brute(&gen.instance).unwrap().is_yes(), expect);
        }
        assert!(gen_domset_gadget(&inst, 3).is_err());
    }

    #[test]
    fn k2_counts() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let gen = gen_domset_reduction(&k2, 1, DomVariant::Cluster).unwrap();
        assert_eq!(gen.instance.n(), 7);
        let mut m = Motif::from_colors([0, 1]);
        m.add(2, 2);
        assert_eq!(gen.instance.motif, m);
        assert!(gen.solve_designated().unwrap().is_yes());
    }

    #[test]
    fn matches_source_on_paths() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        for t in 1..=3 {
            let expect = DomSetSource { h: p5.clone(), t }.has_dominating_set();
            for variant in [DomVariant::Cluster, DomVariant::Tree] {
                let gen = gen_domset_reduction(&p5, t, variant).unwrap();
                assert_eq!(gen.solve_designated().unwrap().is_yes(), expect, "t={t} {variant:?}");
            }
        }
        assert!(gen_domset_reduction(&p5, 0, DomVariant::Tree).is_err());
    }
}
