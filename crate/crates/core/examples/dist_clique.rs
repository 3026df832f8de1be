//! A 200-vertex clique with a dozen attached vertices: the distance-to-clique
//! solver only branches over the 12 outsiders.
//!
//! cargo run --release --example dist_clique

use std::time::Instant;

use motif_kit::estimators::dist_to_clique_set;
use motif_kit::solvers::solve_dist_clique;
use motif_kit::{Coloring, Graph, Instance, Motif};
use rand::Rng;

fn main() -> motif_kit::Result<()> {
    let (clique, k) = (200, 12);
    let mut rng = motif_kit::sampling::rng(1);
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for x in clique..clique + k {
        for u in 0..clique {
            if rng.gen_bool(0.05) {
                edges.push((u, x));
            }
        }
        for y in x + 1..clique + k {
            if rng.gen_bool(0.3) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(clique + k, &edges)?;
    let colors = (0..clique + k).map(|v| if v < clique { v % 6 } else { 6 + v % 3 }).collect();
    let motif = Motif::from_pairs([(6, 4), (7, 4), (8, 4), (0, 2), (3, 1)])?;
    let inst = Instance::new(g, Coloring::new(colors), motif)?;

    println!("deletion set size: {}", dist_to_clique_set(&inst.graph).len());
    let start = Instant::now();
    let out = solve_dist_clique(&inst)?;
    println!("{:?} in {:.3}s", out.witness().map(|w| w.len()), start.elapsed().as_secs_f64());
    Ok(())
}
