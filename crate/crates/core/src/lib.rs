//! Metrological witnesses of multipartite entanglement indexed by Young
//! diagrams.
//!
//! A partition of `N` particles into entangled blocks is a Young diagram with
//! width `w` (largest block), height `h` (number of blocks) and Dyson rank
//! `r = w - h`. The maximal quantum Fisher information of a state separable in
//! a partition is the sum of squared row lengths; maximizing it over classes
//! of diagrams gives the bounds in [`bounds`], which [`witness`] compares
//! against measured QFI or squeezing values.

pub mod bounds;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod partitions;
pub mod squeezing;
pub mod states;
pub mod tuples;
pub mod witness;

pub use error::{Error, Result};
pub use partitions::{Constraint, YoungDiagram};
pub use tuples::TupleClass;
pub use witness::{BoundMode, Kind, Measurement, Unit, Witness, WitnessReport};
