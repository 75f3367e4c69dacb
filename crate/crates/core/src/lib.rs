//! Exact computations in Šunić groups `G_{p,f}` acting on the `p`-regular rooted tree.

pub mod algebra;
pub mod analysis;
pub mod boundary;
pub mod cli;
pub mod elements;
pub mod error;
pub mod perm;
pub mod recursion;

pub use algebra::{BVec, GroupSpec, Subspace};
pub use elements::{Element, Group, Letter};
pub use error::{Error, Result};
