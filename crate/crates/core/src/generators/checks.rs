//! Structural checks behind the certificate claims.

use crate::estimators::{validate_clique_cover, CoverMode};
use crate::model::{connected_components, Graph, Vertex};

use super::{GeneratedInstance, Reduction};

type Check = std::result::Result<(), String>;

pub(super) fn check(gen: &GeneratedInstance) -> Check {
    let g = &gen.instance.graph;
    let n = g.n();
    let cert = &gen.certificate;
    if let Some((tok, v)) = cert.map.iter().find(|(_, v)| *v >= n) {
        return Err(format!("certificate maps {tok} to {v}, outside 0..{n}"));
    }
    let vertex = |tok: &str| cert.vertex(tok).ok_or_else(|| format!("certificate lacks {tok}"));
    let claim = |name: &str| -> std::result::Result<usize, String> {
        cert.claim(name)
            .ok_or_else(|| format!("certificate lacks claim {name}"))?
            .parse()
            .map_err(|_| format!("claim {name} is not a number"))
    };
    let tagged = |prefix: &str| -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = cert.map.iter().filter(|(t, _)| t.starts_with(prefix)).map(|&(_, v)| v).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };

    match gen.reduction {
        Reduction::X3cPaths => {
            expect(claim("distance-to-paths")? == 1, "distance-to-paths claim is not 1")?;
            let comps = components_without(g, &[vertex("root")?]);
            if let Some(c) = comps.iter().find(|c| !is_path(g, c)) {
                return Err(format!("component {c:?} of G - root is not a path"));
            }
            expect(comps.len() == claim("paths")?, "wrong number of paths after removing the root")
        }
        Reduction::X3cComb => {
            let bound = claim("bandwidth-at-most")?;
            expect(bound <= 6, "bandwidth claim above 6")?;
            let mut pos = vec![usize::MAX; n];
            for p in 0..n {
                let v = vertex(&format!("pos:{p}"))?;
                expect(pos[v] == usize::MAX, "numbering is not a bijection")?;
                pos[v] = p;
            }
            match g.edges().into_iter().find(|&(u, v)| pos[u].abs_diff(pos[v]) > bound) {
                Some(e) => Err(format!("edge {e:?} stretches more than {bound}")),
                None => Ok(()),
            }
        }
        Reduction::X3cSuperstar | Reduction::X3cSuperstarColorful | Reduction::DomsetCluster => {
            expect(claim("distance-to-cluster")? == 1, "distance-to-cluster claim is not 1")?;
            let hub = vertex(if gen.reduction == Reduction::DomsetCluster { "z" } else { "root" })?;
            if let Some(c) = components_without(g, &[hub]).iter().find(|c| !g.is_clique(c)) {
                return Err(format!("component {c:?} of G - {hub} is not a clique"));
            }
            let cover = gen.vertex_clique_cover.as_deref().ok_or("missing vertex clique cover")?;
            expect(validate_clique_cover(g, cover, CoverMode::VertexPartition), "invalid vertex clique cover")
        }
        Reduction::OrComposition | Reduction::OrCompositionColorful => {
            let s = tagged("s:");
            expect(s.len() == claim("vertex-cover")?, "vertex-cover claim differs from the subset layer")?;
            expect(is_vertex_cover(g, &s), "subset layer is not a vertex cover")?;
            expect(is_independent(g, &tagged("r:")), "roots are not independent")
        }
        Reduction::DomsetGadget => {
            expect(claim("dominating-set")? == 2, "dominating-set claim is not 2")?;
            let d = [vertex("u")?, vertex("t")?];
            let dominated = (0..n).all(|v| d.contains(&v) || d.iter().any(|&x| g.has_edge(x, v)));
            expect(dominated, "{u, t} does not dominate")
        }
        Reduction::DomsetTree => {
            expect(claim("tree")? == 1, "tree claim is not 1")?;
            expect(is_tree(g), "graph is not a tree")
        }
        Reduction::HittingSetSplit | Reduction::SetCoverSplit => {
            let elems = tagged("elem:");
            let sets = tagged("set:");
            expect(elems.len() + sets.len() == n, "elements and sets do not partition V")?;
            if gen.reduction == Reduction::HittingSetSplit {
                expect(g.is_clique(&elems) && is_independent(g, &sets), "not a split graph with the element clique")?;
                expect(claim("vertex-cover")? == elems.len(), "vertex-cover claim differs from |elements|")?;
                expect(is_vertex_cover(g, &elems), "element side is not a vertex cover")
            } else {
                expect(g.is_clique(&sets) && is_independent(g, &elems), "not a split graph with the set clique")?;
                expect(claim("distance-to-clique")? == elems.len(), "distance-to-clique claim differs from |elements|")
            }
        }
        Reduction::MccStar => check_mcc(gen, claim("max-leaf")?, vertex("center")?, vertex("be:first")?),
    }
}

fn check_mcc(gen: &GeneratedInstance, leaves: usize, center: Vertex, be_first: Vertex) -> Check {
    let g = &gen.instance.graph;
    expect(is_tree(g), "graph is not a tree")?;
    let actual = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
    expect(actual == leaves, "leaf count differs from the max-leaf claim")?;
    expect(gen.certificate.claim("alternating") == Some("1"), "missing alternating claim")?;
    let color = |v: Vertex| gen.instance.color(v);
    let (cb, ce) = (color(be_first), color(g.neighbors(be_first).iter().copied().find(|&w| w != center).ok_or("short P_be")?));
    for &first in g.neighbors(center) {
        // walk the branch outward and parse it into blocks
        let (mut prev, mut cur) = (center, Some(first));
        let mut open = false;
        while let Some(v) = cur {
            let c = color(v);
            if c == cb {
                expect(!open, "block begins inside a block")?;
                open = true;
            } else if c == ce {
                expect(open, "block ends outside a block")?;
                open = false;
            } else {
                expect(open, "internal vertex outside a block")?;
            }
            let next: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| w != prev).collect();
            expect(next.len() <= 1, "branch is not a path")?;
            prev = v;
            cur = next.first().copied();
        }
        expect(!open, "branch ends inside a block")?;
    }
    Ok(())
}

fn expect(ok: bool, msg: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    connected_components(g, &rest)
}

/// A connected vertex set inducing a path.
fn is_path(g: &Graph, comp: &[Vertex]) -> bool {
    let sub = g.induced(comp);
    (0..sub.n()).all(|v| sub.degree(v) <= 2) && sub.m() + 1 == sub.n()
}

fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.m() + 1 == g.n()
}

fn is_independent(g: &Graph, vs: &[Vertex]) -> bool {
    vs.iter().all(|&u| vs.iter().all(|&v| !g.has_edge(u, v)))
}

fn is_vertex_cover(g: &Graph, vs: &[Vertex]) -> bool {
    g.edges().iter().all(|(u, v)| vs.contains(u) || vs.contains(v))
}
