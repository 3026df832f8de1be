//! Graph Motif on trees with few leaves, seen as words read outward from a
//! center: choose a prefix of each word so that together they spell an
//! anagram of the target.
//!
//! cargo run --example star_words

use motif_kit::solvers::{solve_max_leaf_xp, StarWordProblem};
use motif_kit::{Coloring, Graph, Instance, Motif};

fn main() -> motif_kit::Result<()> {
    let words = vec![vec![1, 2, 1, 3], vec![2, 2, 3], vec![3, 1]];
    let target = Motif::from_colors([1, 1, 2, 2, 3]);
    let problem = StarWordProblem::new(target.clone(), words.clone())?;
    println!("prefix lengths: {:?}", problem.solve());

    // the same thing as a subdivided star with center color 0
    let mut colors = vec![0];
    let mut edges = Vec::new();
    for w in &words {
        let mut prev = 0;
        for &c in w {
            colors.push(c);
            edges.push((prev, colors.len() - 1));
            prev = colors.len() - 1;
        }
    }
    let g = Graph::from_edges(colors.len(), &edges)?;
    let mut motif = target;
    motif.add(0, 1);
    let inst = Instance::new(g, Coloring::new(colors), motif)?;
    println!("as a tree: {:?}", solve_max_leaf_xp(&inst)?.witness());
    Ok(())
}
