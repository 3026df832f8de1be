//! Distance to co-cluster: a complete multipartite graph plus a few extra
//! vertices.
//!
//! cargo run --example co_cluster

use motif_kit::estimators::{co_cluster_classes, dist_to_co_cluster_set};
use motif_kit::solvers::{solve_brute, solve_co_cluster};
use motif_kit::{Coloring, Graph, Instance, Motif};

fn main() -> motif_kit::Result<()> {
    // classes {0,1}, {2,3,4}, {5}; vertex 6 sees only 0, vertex 7 only 6
    let classes = [vec![0, 1], vec![2, 3, 4], vec![5]];
    let mut edges = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            for &u in a {
                for &v in b {
                    edges.push((u, v));
                }
            }
        }
    }
    edges.extend([(0, 6), (6, 7)]);
    let g = Graph::from_edges(8, &edges)?;
    let x = dist_to_co_cluster_set(&g);
    let rest: Vec<usize> = (0..8).filter(|v| !x.contains(v)).collect();
    println!("deletion set {x:?}, classes {:?}", co_cluster_classes(&g, &rest));

    let colors = Coloring::new(vec![0, 0, 1, 1, 2, 3, 4, 5]);
    for motif in [vec![5, 4, 0, 1], vec![5, 1, 1], vec![0, 0, 3]] {
        let inst = Instance::new(g.clone(), colors.clone(), Motif::from_colors(motif.clone()))?;
        let out = solve_co_cluster(&inst)?;
        assert_eq!(out.is_yes(), solve_brute(&inst)?.is_yes());
        println!("motif {motif:?} -> {:?}", out.witness());
    }
    Ok(())
}
