//! Reductions from Exact Cover by 3-Sets.
//!
//! Colors are dense and 0-based. For a source with `q` and sets
//! `S_0..S_{s-1}`, the path and comb constructions use color `i` for the
//! heads `a_i`, `s + i` for the tails `b_i` and `2s + x` for element `x`.

use crate::error::{Error, Result};
use crate::model::{Motif, Vertex};

use super::{Builder, GeneratedInstance, Reduction, X3cInstance};

/// Per set two paths hanging off a root: `a¹ x y z b¹` and `a² b²`. A
/// solution takes exactly one of them per set, so the long ones it takes
/// form an exact cover.
pub fn gen_x3c_paths(x: &X3cInstance) -> Result<GeneratedInstance> {
    let s = x.triples.len();
    let mut b = Builder::default();
    let root = b.vertex(2 * s + x.universe());
    b.map("root", root);
    for (i, t) in x.triples.iter().enumerate() {
        let long = set_paths(&mut b, x, i, t);
        b.edge(root, long[0]);
        b.edge(root, long[1]);
    }
    b.claim("distance-to-paths", 1);
    b.claim("paths", 2 * s);
    b.finish(Reduction::X3cPaths, colorful(2 * s + x.universe() + 1), None)
}

/// Comb variant: the root becomes a spine `r_0¹ r_0² r_1¹ r_1² ...` of
/// fresh colors and each path hangs off its own spine vertex. Vertices are
/// numbered tooth by tooth, so the numbering itself witnesses bandwidth 6.
pub fn gen_x3c_comb(x: &X3cInstance) -> Result<GeneratedInstance> {
    let s = x.triples.len();
    let base = 2 * s + x.universe();
    let mut b = Builder::default();
    let mut prev: Option<Vertex> = None;
    for (i, t) in x.triples.iter().enumerate() {
        let r1 = b.vertex(base + 2 * i);
        let long = set_paths_one(&mut b, x, i, t, true);
        let r2 = b.vertex(base + 2 * i + 1);
        let short = set_paths_one(&mut b, x, i, t, false);
        b.edge(r1, long);
        b.edge(r2, short);
        b.edge(r1, r2);
        if let Some(p) = prev {
            b.edge(p, r1);
        }
        prev = Some(r2);
        b.map(format!("spine:{i}:1"), r1);
        b.map(format!("spine:{i}:2"), r2);
    }
    for p in 0..b.colors.len() {
        b.map(format!("pos:{p}"), p);
    }
    b.claim("bandwidth-at-most", 6);
    b.finish(Reduction::X3cComb, colorful(base + 2 * s), None)
}

/// Adds both paths of set `i` and returns their first vertices.
fn set_paths(b: &mut Builder, x: &X3cInstance, i: usize, t: &[usize; 3]) -> [Vertex; 2] {
    [set_paths_one(b, x, i, t, true), set_paths_one(b, x, i, t, false)]
}

fn set_paths_one(b: &mut Builder, x: &X3cInstance, i: usize, t: &[usize; 3], long: bool) -> Vertex {
    let s = x.triples.len();
    let a = b.vertex(i);
    let mut path = vec![a];
    if long {
        path.extend(t.iter().map(|&e| b.vertex(2 * s + e)));
    }
    path.push(b.vertex(s + i));
    b.path(&path);
    b.map(format!("set:{i}:{}", if long { "long" } else { "short" }), a);
    a
}

fn colorful(k: usize) -> Motif {
    Motif::from_colors(0..k)
}

/// Root plus one clique `{σ_i} ∪ S_i` per set, the root adjacent to every
/// set vertex `σ_i`. Element `x` has color `x`.
///
/// Without `colorful` all set vertices share color `3q` and the motif asks
/// for `q` of them. With it, every set clique is copied once per slot
/// `j < q` with set vertex color `3q + j`, which makes the motif colorful
/// at the price of `q` times as many cliques.
pub fn gen_x3c_superstar_cliques(x: &X3cInstance, colorful_motif: bool) -> Result<GeneratedInstance> {
    let u = x.universe();
    let slots = if colorful_motif { x.q } else { 1 };
    let root_color = u + slots;
    let mut b = Builder::default();
    let root = b.vertex(root_color);
    b.map("root", root);
    let mut cover = vec![vec![root]];
    for (i, t) in x.triples.iter().enumerate() {
        for j in 0..slots {
            let sigma = b.vertex(u + j);
            let mut clique = vec![sigma];
            clique.extend(t.iter().map(|&e| b.vertex(e)));
            b.clique(&clique);
            b.edge(root, sigma);
            b.map(if colorful_motif { format!("set:{i}:slot:{j}") } else { format!("set:{i}") }, sigma);
            cover.push(clique);
        }
    }
    let motif = if colorful_motif {
        colorful(root_color + 1)
    } else {
        let mut m = colorful(u);
        m.add(u, x.q);
        m.add(root_color, 1);
        m
    };
    b.claim("distance-to-cluster", 1);
    let red = if colorful_motif { Reduction::X3cSuperstarColorful } else { Reduction::X3cSuperstar };
    b.finish(red, motif, Some(cover))
}

/// OR of X3C instances sharing `q` and the number of sets: independent
/// roots `r_i` (color 0), a subset node for every triple of the universe
/// (color 1) adjacent to the roots whose instance contains it, and element
/// nodes (color 2) adjacent to the subset nodes containing them. The motif
/// `{0, 1×q, 2×3q}` forces one root and an exact cover among its triples.
///
/// With `colorful`, subset nodes are copied into `q` layers with colors
/// `1..=q` (each copy keeps all adjacencies) and element `e` gets color
/// `1 + q + e`, so the motif becomes the full color set.
pub fn gen_or_composition(xs: &[X3cInstance], colorful_motif: bool) -> Result<GeneratedInstance> {
    let first = xs.first().ok_or_else(|| Error::input("OR composition needs at least one instance"))?;
    let (q, nsets) = (first.q, first.triples.len());
    if xs.iter().any(|x| x.q != q || x.triples.len() != nsets) {
        return Err(Error::input("all instances must share q and the number of sets"));
    }
    let u = 3 * q;
    let layers = if colorful_motif { q } else { 1 };
    let mut b = Builder::default();
    let roots: Vec<Vertex> = (0..xs.len()).map(|_| b.vertex(0)).collect();
    for (i, &r) in roots.iter().enumerate() {
        b.map(format!("r:{i}"), r);
    }
    let triples: Vec<[usize; 3]> = (0..u)
        .flat_map(|a| (a + 1..u).flat_map(move |c| (c + 1..u).map(move |d| [a, c, d])))
        .collect();
    let mut subset_nodes = Vec::new();
    for t in &triples {
        for j in 0..layers {
            let v = b.vertex(1 + j);
            let tag = format!("s:{}:{}:{}", t[0], t[1], t[2]);
            b.map(if colorful_motif { format!("{tag}:{j}") } else { tag }, v);
            subset_nodes.push((*t, v));
        }
    }
    let elements: Vec<Vertex> = (0..u)
        .map(|e| b.vertex(if colorful_motif { 1 + q + e } else { 2 }))
        .collect();
    for (e, &v) in elements.iter().enumerate() {
        b.map(format!("x:{e}"), v);
    }
    for &(t, v) in &subset_nodes {
        for (i, x) in xs.iter().enumerate() {
            if x.triples.contains(&t) {
                b.edge(roots[i], v);
            }
        }
        for &e in &t {
            b.edge(v, elements[e]);
        }
    }
    b.claim("vertex-cover", subset_nodes.len());
    let (motif, red) = if colorful_motif {
        (colorful(1 + q + u), Reduction::OrCompositionColorful)
    } else {
        let mut m = Motif::new();
        m.add(0, 1);
        m.add(1, q);
        m.add(2, u);
        (m, Reduction::OrComposition)
    };
    b.finish(red, motif, None)
}
