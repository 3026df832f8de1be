//! Multicolored Clique (or Partitioned Subgraph Isomorphism, with a
//! pattern) to Graph Motif on a subdivided star.
//!
//! The center has color `c0 = 0`. Every branch is tiled by *blocks*: a
//! `cb = 1` vertex, some internal vertices, then a `ce = 2` vertex. Since the
//! motif asks for as many `cb` as `ce`, a solution takes whole blocks from
//! the center outward. Branch `P_i` has `t - 1` copies of a block holding
//! `t` vertices of color `ij` for each required pair `(i, j)` and one of
//! color `li` for each required pair `(l, i)`: stopping after `q` blocks
//! selects vertex `q` of class `i` and contributes `q·t` (resp. `q`) vertices
//! of the pair colors. Branch `P_ij` has one block per edge of `E_ij`, sized
//! so that stopping after the block of edge `(q, q')` adds exactly
//! `t² - (q·t + q')` vertices of color `ij`. The branch `P_be` of empty
//! blocks absorbs the remaining `cb`/`ce` budget.

use crate::error::Result;
use crate::model::{Motif, Vertex};

use super::{Builder, GeneratedInstance, PartitionedGraph, Reduction};

const C0: usize = 0;
const CB: usize = 1;
const CE: usize = 2;

/// Classes of size 1 are padded to size 2 with an isolated vertex so that
/// every `P_i` is non-empty. A required pair without edges yields an empty
/// `P_ij` and a `warning empty-pair` claim; such an instance is NO.
pub fn gen_mcc_star(p: &PartitionedGraph) -> Result<GeneratedInstance> {
    let k = p.k;
    let t = p.t.max(2);
    let pairs = p.pairs();
    let color_of = |i: usize, j: usize| 3 + pairs.binary_search(&(i, j)).expect("required pair");
    let s = k * (t - 1) + pairs.len() * t * t;

    let mut b = Builder::default();
    let center = b.vertex(C0);
    b.map("center", center);
    let mut branches = 0;

    let be: Vec<Vertex> = (0..2 * s).map(|i| b.vertex(if i % 2 == 0 { CB } else { CE })).collect();
    b.edge(center, be[0]);
    b.path(&be);
    b.map("be:first", be[0]);
    branches += 1;

    for i in 0..k {
        let mut internal: Vec<usize> = Vec::new();
        for &(a, c) in &pairs {
            if c == i {
                internal.push(color_of(a, c));
            } else if a == i {
                internal.extend(std::iter::repeat_n(color_of(a, c), t));
            }
        }
        internal.sort_unstable();
        let ends = branch(&mut b, center, (0..t - 1).map(|_| internal.clone()));
        b.map(format!("u:{i}:0"), center);
        for q in 1..p.t {
            b.map(format!("u:{i}:{q}"), ends[q - 1]);
        }
        branches += 1;
    }

    for &(i, j) in &pairs {
        let mut edges: Vec<(usize, usize)> =
            p.edges.iter().filter(|e| e.0 == i && e.2 == j).map(|e| (e.1, e.3)).collect();
        // sorted by L = t² - (q·t + q'), i.e. by decreasing q·t + q'
        edges.sort_unstable_by_key(|&(q, r)| std::cmp::Reverse(q * t + r));
        if edges.is_empty() {
            b.claim("warning", "empty-pair");
            continue;
        }
        let mut prev = 0;
        let mut blocks = Vec::new();
        for &(q, r) in &edges {
            let l = t * t - (q * t + r);
            blocks.push(vec![color_of(i, j); l - prev]);
            prev = l;
        }
        let ends = branch(&mut b, center, blocks.into_iter());
        for (&(q, r), &v) in edges.iter().zip(&ends) {
            b.map(format!("e:{i}:{q}:{j}:{r}"), v);
        }
        branches += 1;
    }

    let mut motif = Motif::new();
    motif.add(C0, 1);
    motif.add(CB, s);
    motif.add(CE, s);
    for &(i, j) in &pairs {
        motif.add(color_of(i, j), t * t);
    }
    b.claim("max-leaf", branches);
    b.claim("alternating", 1);
    b.finish(Reduction::MccStar, motif, None)
}

/// Appends a branch made of the given blocks (internal colors only) and
/// returns the `ce` vertex ending each block.
fn branch(b: &mut Builder, center: Vertex, blocks: impl Iterator<Item = Vec<usize>>) -> Vec<Vertex> {
    let mut path = vec![center];
    let mut ends = Vec::new();
    for internal in blocks {
        path.push(b.vertex(CB));
        for c in internal {
            path.push(b.vertex(c));
        }
        let e = b.vertex(CE);
        path.push(e);
        ends.push(e);
    }
    b.path(&path);
    ends
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::verify_solution;

    fn triangle_source(with_triangle: bool) -> PartitionedGraph {
        let mut edges = vec![(0, 1, 1, 0), (1, 0, 2, 1)];
        edges.push(if with_triangle { (0, 1, 2, 1) } else { (0, 0, 2, 1) });
        PartitionedGraph::new(3, 2, edges, None).unwrap()
    }

    #[test]
    fn k3_t2_sizes() {
        let g = gen_mcc_star(&triangle_source(true)).unwrap();
        let m = &g.instance.motif;
        assert_eq!(m.multiplicity(CB), 15);
        assert_eq!(m.multiplicity(CE), 15);
        assert!((3..6).all(|c| m.multiplicity(c) == 4));
        assert_eq!(g.certificate.claim("max-leaf"), Some("7"));
        let be = g.instance.graph.neighbors(0).len();
        assert_eq!(be, 7);
    }

    #[test]
    fn triangle_decides_answer() {
        let yes = gen_mcc_star(&triangle_source(true)).unwrap();
        let out = yes.solve_designated().unwrap();
        let w = out.witness().expect("triangle gives YES");
        assert!(verify_solution(&yes.instance, w).unwrap());
        // the stopping points of the triangle are in the witness
        for tok in ["u:0:1", "u:2:1", "e:0:1:1:0", "e:1:0:2:1", "e:0:1:2:1"] {
            assert!(w.contains(&yes.certificate.vertex(tok).unwrap()), "{tok}");
        }
        let no = gen_mcc_star(&triangle_source(false)).unwrap();
        assert!(!no.solve_designated().unwrap().is_yes());
    }

    #[test]
    fn pattern_and_padding() {
        let p = PartitionedGraph::new(3, 1, vec![(0, 0, 1, 0)], Some(vec![(0, 1)])).unwrap();
        let g = gen_mcc_star(&p).unwrap();
        assert_eq!(g.certificate.claim("max-leaf"), Some("5"));
        assert!(g.solve_designated().unwrap().is_yes());
        let empty = PartitionedGraph::new(3, 2, vec![(0, 0, 1, 0), (1, 0, 2, 0)], None).unwrap();
        let g = gen_mcc_star(&empty).unwrap();
        assert_eq!(g.certificate.claim("warning"), Some("empty-pair"));
        assert!(!g.solve_designated().unwrap().is_yes());
    }
}
