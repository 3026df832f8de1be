//! Structural parameters of a random graph, as printed by `motif-kit params`.
//!
//! cargo run --example params -- 14 0.3

use motif_kit::estimators::param_report;
use motif_kit::Budget;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(14);
    let p: f64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(0.3);
    let mut rng = motif_kit::sampling::rng(7);
    let g = motif_kit::sampling::random_connected_graph(&mut rng, n, p);
    print!("{}", param_report(&g, None, None, n, &Budget::unlimited()).render());
}
