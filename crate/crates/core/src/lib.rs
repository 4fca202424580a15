//! Online Z-normal form reduction and minimum path graph inference.
//!
//! A Z-shape is a factor `x·xᴿ·x`; contracting it to `x` is the only way a
//! walk on a path can be shortened without changing which edges it crosses.
//! [`reduce`] computes the unique normal form in linear time, one letter at a
//! time, and [`build_path_graph`] turns it into the smallest consistent path.

pub mod baseline;
pub mod bench;
pub mod cli;
pub mod detector;
pub mod error;
pub mod gen;
pub mod graph;
pub mod model;
pub mod oracle;
pub mod reducer;
pub mod shapes;

pub use detector::{detect_first_z, is_irreducible, DetectOutcome};
pub use error::{Error, Result};
pub use model::{Alphabet, LabeledString, PalsArray, Symbol, ZOccurrence};
pub use reducer::{reduce, ContractionEvent, Counters, Reducer};
pub use graph::{build_path_graph, to_dot, to_json, PathGraph};
