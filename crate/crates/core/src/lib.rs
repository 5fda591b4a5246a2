//! Exact enumeration of standard Young tableaux.
//!
//! The crate covers ordinary (Ferrers) shapes, shifted shapes and shapes
//! truncated at their north-east corner. Closed forms are evaluated through
//! prime-exponent vectors and converted to big integers at the very end; a
//! dynamic program over order ideals of the cell poset provides an
//! independent ground truth for every shape.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
mod error;
pub mod exact_count;
pub mod formulas;
pub mod pivot;
pub mod shapes;
pub mod truncated;

pub use arith::{ExactCount, FactoredRatio, Factorization};
pub use error::Error;
pub use exact_count::{count_syt, enumerate_syt, is_valid_tableau};
pub use shapes::{CellRegion, Partition, RegionKind, ShapeSpec, StrictPartition, Tableau};

pub type Result<T, E = Error> = core::result::Result<T, E>;
