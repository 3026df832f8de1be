//! Jumbled pattern matching: find a window of a string that is an anagram
//! of a pattern. This is Graph Motif on a path.
//!
//! cargo run --example jumbled_pattern -- abracadabra cabr

use motif_kit::solvers::solve_on_path;
use motif_kit::Motif;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "abracadabra".into());
    let pattern = args.next().unwrap_or_else(|| "cabr".into());
    let word: Vec<usize> = text.bytes().map(usize::from).collect();
    let motif = Motif::from_colors(pattern.bytes().map(usize::from));
    match solve_on_path(&word, &motif) {
        Some((i, j)) => println!("{pattern} ~ {} at {i}..={j}", &text[i..=j]),
        None => println!("no window of {text} is an anagram of {pattern}"),
    }
}
