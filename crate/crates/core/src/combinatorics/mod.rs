//! Enumeration and matching primitives shared by the solvers.

mod matching;
mod partitions;
mod subsets;
mod trees;

pub use matching::{max_matching_with_cover, BipartiteGraph, MatchingResult, Side};
pub use partitions::{iter_ordered_partitions, iter_set_partitions, OrderedPartitions, SetPartitions};
pub use subsets::{iter_subsets, iter_subsets_by_size, Subsets, SubsetsBySize};
pub use trees::{iter_labeled_trees, prufer_decode, LabeledTrees};
