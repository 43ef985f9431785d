//! Exact enumeration of non-crossing (planar) set partitions.
//!
//! The crate covers:
//!
//! * [`partition`]: canonical set partitions with planarity, boxes,
//!   refinement, the non-crossing join, contraction and comb partitions;
//! * [`fusscatalan`]: exact Fuss-Catalan numbers and the box-count triangle;
//! * [`enumerate`]: pruned generators for every planar family counted by a
//!   Fuss-Catalan number, and refinement chains;
//! * [`bijections`]: the maps between planar `mp`-partitions and chains of
//!   planar partitions, with constructive inverses;
//! * [`ptree`]: full `p`-ary trees and their bijection with planar
//!   `p`-partitions;
//! * [`oracle`]: brute-force reference implementations used for
//!   cross-checking.
//!
//! ```
//! use ncpart::{enumerate, fusscatalan};
//!
//! let count = enumerate::enum_nc_p(3, 4).unwrap().count();
//! assert_eq!(fusscatalan::fuss_catalan(3, 4).unwrap().to_string(), count.to_string());
//! ```

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod fusscatalan;
pub mod oracle;
pub mod partition;
pub mod ptree;

pub use bijections::{
    chain_to_tied_diagram, fold_m, merge_even, multiple_to_tuple, split_even, tuple_to_multiple, unfold_m, Tie,
    TiedDiagram,
};
pub use enumerate::{
    box_histogram, enum_chains, enum_double, enum_mtuple_p, enum_multiple, enum_nc, enum_nc_p, PartitionChain,
};
pub use error::{Error, Result};
pub use fusscatalan::{fuss_catalan, t_entry, triangle_row, BigCount, Triangle};
pub use partition::{Arc, SetPartition};
pub use ptree::{enum_ptrees, partition_of_tree, tree_of_partition, PTree};
