//! Graph Motif on a graph with a small vertex cover: a split graph built from
//! a hitting-set instance, solved by the vertex-cover solver.
//!
//! cargo run --example vertex_cover

use motif_kit::estimators::min_vertex_cover;
use motif_kit::generators::{gen_hitting_set_split, SetSystem};
use motif_kit::solvers::solve_vertex_cover;

fn main() -> motif_kit::Result<()> {
    // does some element hit {0,1}, {1,2} and {1,3}? element 1 does
    let sets = SetSystem::new(4, vec![vec![0, 1], vec![1, 2], vec![1, 3]], 1)?;
    let gen = gen_hitting_set_split(&sets)?;
    let cover = min_vertex_cover(&gen.instance.graph);
    println!("minimum vertex cover {cover:?}");
    match solve_vertex_cover(&gen.instance)? {
        motif_kit::SolveOutcome::Yes(w) => {
            let elems: Vec<String> = gen
                .certificate
                .map
                .iter()
                .filter(|(t, v)| t.starts_with("elem:") && w.contains(v))
                .map(|(t, _)| t.clone())
                .collect();
            println!("YES, hitting set {elems:?}");
        }
        motif_kit::SolveOutcome::No => println!("NO"),
    }
    Ok(())
}
