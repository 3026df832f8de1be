//! Colored Set Cover with Thresholds: cover a small universe using at most
//! a given (positive) number of sets of each color.
//!
//! cargo run --example csct

use std::collections::BTreeMap;

use motif_kit::csct::{solve_csct, CsctInstance, CsctSet};

fn main() -> motif_kit::Result<()> {
    let set = |color, elements: &[usize]| CsctSet { color, elements: elements.to_vec() };
    let sets = vec![set(0, &[0, 1]), set(0, &[2, 3]), set(1, &[1, 2]), set(1, &[3, 4]), set(2, &[4])];
    for (red, blue, green) in [(1, 1, 1), (2, 1, 1), (1, 2, 1)] {
        let thresholds = BTreeMap::from([(0, red), (1, blue), (2, green)]);
        let inst = CsctInstance::new(5, sets.clone(), thresholds)?;
        let sol = solve_csct(&inst)?;
        if let Some(s) = &sol {
            assert!(inst.accepts(s));
        }
        println!("at most {red} red, {blue} blue, {green} green: {:?}", sol.map(|s| s.chosen));
    }
    Ok(())
}
