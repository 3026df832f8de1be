//! Solvers that take a clique cover as input: a partition of the vertices
//! into cliques, or a family of cliques covering every edge.
//!
//! cargo run --example clique_covers

use motif_kit::estimators::{edge_cliques, greedy_vertex_clique_cover};
use motif_kit::solvers::{solve_brute, solve_edge_clique_cover, solve_vertex_clique_cover};
use motif_kit::{Coloring, Graph, Instance, Motif};

fn main() -> motif_kit::Result<()> {
    // two triangles {0,1,2} and {3,4,5} joined by the edge 2-3, plus 6 hanging off 5
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)])?;
    let colors = Coloring::new(vec![0, 1, 2, 0, 1, 2, 3]);
    for motif in [vec![0, 0, 2], vec![1, 2, 0, 3], vec![1, 1, 3]] {
        let inst = Instance::new(g.clone(), colors.clone(), Motif::from_colors(motif.clone()))?;
        let partition = greedy_vertex_clique_cover(&inst.graph);
        let vcc = solve_vertex_clique_cover(&inst, &partition)?;
        let ecc = solve_edge_clique_cover(&inst, &edge_cliques(&inst.graph))?;
        assert_eq!(vcc.is_yes(), solve_brute(&inst)?.is_yes());
        println!("motif {motif:?}: cliques {partition:?} -> {:?}; edge cover -> {:?}", vcc.witness(), ecc.witness());
    }
    Ok(())
}
