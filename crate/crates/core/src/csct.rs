//! Colored Set Cover with Thresholds.
//!
//! Given a universe, a family of colored sets and a positive threshold per
//! color, decide whether some subfamily covers the universe while using at
//! most `a_i` sets of color `i`. Solved by a subset dynamic program over
//! `2^n` universe masks, with one take/discard bit per entry for
//! reconstruction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::Color;

/// Largest supported universe.
pub const MAX_UNIVERSE: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsctSet {
    pub color: Color,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsctInstance {
    pub universe: usize,
    pub sets: Vec<CsctSet>,
    pub thresholds: BTreeMap<Color, usize>,
}

/// Indices (into `CsctInstance::sets`) of the chosen sets, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsctSolution {
    pub chosen: Vec<usize>,
}

impl CsctInstance {
    pub fn new(universe: usize, sets: Vec<CsctSet>, thresholds: BTreeMap<Color, usize>) -> Result<Self> {
        let inst = CsctInstance {
            universe,
            sets,
            thresholds,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        if self.universe > MAX_UNIVERSE {
            return Err(Error::Capacity(format!(
                "set cover universe of {} elements exceeds {MAX_UNIVERSE}",
                self.universe
            )));
        }
        if let Some((c, _)) = self.thresholds.iter().find(|&(_, &a)| a == 0) {
            return Err(Error::input(format!("threshold of color {c} is 0")));
        }
        for (i, s) in self.sets.iter().enumerate() {
            if !self.thresholds.contains_key(&s.color) {
                return Err(Error::input(format!("set {i} has color {} without a threshold", s.color)));
            }
            if let Some(&e) = s.elements.iter().find(|&&e| e >= self.universe) {
                return Err(Error::input(format!("set {i} holds element {e} outside the universe")));
            }
        }
        Ok(())
    }

    fn mask(&self, i: usize) -> u64 {
        self.sets[i].elements.iter().fold(0u64, |m, &e| m | 1 << e)
    }

    /// True iff `sol` covers the universe and respects every threshold.
    pub fn accepts(&self, sol: &CsctSolution) -> bool {
        let mut covered = 0u64;
        let mut used: BTreeMap<Color, usize> = BTreeMap::new();
        for &i in &sol.chosen {
            if i >= self.sets.len() {
                return false;
            }
            covered |= self.mask(i);
            *used.entry(self.sets[i].color).or_insert(0) += 1;
        }
        let full = if self.universe == 0 { 0 } else { u64::MAX >> (64 - self.universe) };
        covered == full && used.iter().all(|(c, &k)| k <= self.thresholds[c])
    }
}

const INF: u32 = u32::MAX;

/// Packed bit row, one bit per universe subset.
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }
}

/// Returns a threshold-respecting cover if one exists.
pub fn solve_csct(inst: &CsctInstance) -> Result<Option<CsctSolution>> {
    inst.validate()?;
    let n = inst.universe;
    if n == 0 {
        return Ok(Some(CsctSolution { chosen: Vec::new() }));
    }
    let m = inst.sets.len();
    if m == 0 {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| inst.sets[i].color); // stable: same-color sets stay in input order
    let masks: Vec<usize> = order.iter().map(|&i| inst.mask(i) as usize).collect();
    let colors: Vec<Color> = order.iter().map(|&i| inst.sets[i].color).collect();
    debug_assert!(colors.windows(2).all(|w| w[0] <= w[1]), "same-color sets must be consecutive");

    let size = 1usize << n;
    let full = size - 1;
    let mut take: Vec<Bits> = Vec::with_capacity(m);

    // column 1: only S_1, which costs one set for any nonempty U inside it
    let mut prev = vec![INF; size];
    let mut bits = Bits::new(size);
    prev[0] = 0;
    for u in 1..size {
        if u & !masks[0] == 0 {
            prev[u] = 1;
            bits.set(u);
        }
    }
    take.push(bits);

    let mut cur = vec![INF; size];
    for j in 1..m {
        let sj = masks[j];
        let mut bits = Bits::new(size);
        if colors[j] != colors[j - 1] {
            for u in 0..size {
                cur[u] = if prev[u] != INF {
                    0
                } else if prev[u & !sj] != INF {
                    bits.set(u);
                    1
                } else {
                    INF
                };
            }
        } else {
            let cap = inst.thresholds[&colors[j]] as u32;
            for u in 0..size {
                let discard = prev[u];
                let v = prev[u & !sj];
                let add = if v < cap { v + 1 } else { INF };
                if add < discard {
                    cur[u] = add;
                    bits.set(u);
                } else {
                    cur[u] = discard;
                }
            }
        }
        take.push(bits);
        std::mem::swap(&mut prev, &mut cur);
    }

    if prev[full] == INF {
        return Ok(None);
    }
    let mut chosen = Vec::new();
    let mut u = full;
    for j in (0..m).rev() {
        if take[j].get(u) {
            chosen.push(order[j]);
            u &= !masks[j];
        }
    }
    debug_assert_eq!(u, 0);
    chosen.sort_unstable();
    Ok(Some(CsctSolution { chosen }))
}
