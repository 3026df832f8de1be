//! Build the X3C tree instance for a small exact-cover problem and solve it
//! with the max-leaf solver. The certificate tells which sets were used.
//!
//! cargo run --example x3c_paths

use motif_kit::generators::{gen_x3c_paths, X3cInstance};
use motif_kit::solvers::{solve_brute, solve_max_leaf_xp};

fn main() -> motif_kit::Result<()> {
    // universe 0..6; {0,2,4} and {1,3,5} form an exact cover
    let x3c = X3cInstance::new(2, vec![[0, 2, 4], [0, 1, 3], [1, 3, 5], [1, 4, 5]])?;
    let gen = gen_x3c_paths(&x3c)?;
    let inst = &gen.instance;
    println!(
        "{} vertices, {} edges, {} colors",
        inst.n(),
        inst.graph.m(),
        inst.motif.distinct()
    );

    let out = solve_max_leaf_xp(inst)?;
    let witness = out.witness().expect("the source has an exact cover");
    let chosen: Vec<usize> = (0..x3c.triples.len())
        .filter(|i| {
            let head = gen.certificate.vertex(&format!("set:{i}:long")).unwrap();
            witness.contains(&head)
        })
        .collect();
    println!("witness {witness:?}");
    println!("sets used: {chosen:?}");
    assert!(solve_brute(inst)?.is_yes());
    Ok(())
}
