//! Every reduction on a few random sources: generate, check the structural
//! claims, solve with the designated solver and compare with the source.
//!
//! cargo run --release --example reductions

use motif_kit::generators::{random_source, Reduction};

fn main() -> motif_kit::Result<()> {
    let mut rng = motif_kit::sampling::rng(2024);
    println!("{:<24} {:>5} {:>6} {:>10} {:>7}", "reduction", "n", "|M|", "solver", "agree");
    for red in Reduction::ALL {
        let mut agree = 0;
        let mut last = (0, 0);
        for _ in 0..10 {
            let source = random_source(red, &mut rng);
            let gen = source.generate()?;
            gen.check_claims().expect("claims hold");
            if gen.solve_designated()?.is_yes() == source.solve_source() {
                agree += 1;
            }
            last = (gen.instance.n(), gen.instance.motif.total());
        }
        println!("{:<24} {:>5} {:>6} {:>10} {:>5}/10", red.name(), last.0, last.1, red.designated_algorithm().name(), agree);
    }
    Ok(())
}
