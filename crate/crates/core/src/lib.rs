//! Counting and enumerating down-sets of finite posets.
//!
//! The central tool is the pivot-set decomposition: for any subset `M` of a
//! poset `P`, the down-sets of `P` split by their trace on `M`, and each part is
//! in bijection with the down-sets of `P − M↕N`. The crate applies it to the
//! Boolean lattices to compute the Dedekind numbers up to `b(6)` by several
//! independent routes.

pub mod boolean;
pub mod classes;
pub mod dedekind;
pub mod engine;
pub mod error;
pub mod format;
pub mod iso;
pub mod known;
pub mod pointset;
pub mod poset;
pub mod tables;
pub mod verify;

pub use boolean::{boolean, BooleanContext, Trim};
pub use engine::{count_downsets, enumerate_downsets, Count, DownSetFamily};
pub use error::{Error, Result};
pub use pointset::PointSet;
pub use poset::Poset;
