//! Exact cohomology of tautological bundles on Quot schemes of the projective line.

pub mod bwb;
pub mod complex;
pub mod error;
pub mod partition;
pub mod quot;
pub mod schur;
pub mod table;

pub use bwb::{BwbOutcome, GrSpec};
pub use error::{Error, Result};
pub use partition::{Partition, Weight};
pub use table::{kunneth, CohomTable};
