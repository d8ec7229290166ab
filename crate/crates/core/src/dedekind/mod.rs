//! Concrete computations of `b⁻⁻(5) = 6212` and `b⁻⁻(6) = 7741776`, each
//! producing a [`MethodReport`] with its coefficient table.

mod five;
mod lemma2;
mod mu;
mod run;
mod sigma;
pub mod split;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::classes::IsoClassRecord;
use crate::engine::Count;

pub use five::{bmm5_gamma, bmm5_iso, bmm5_nu, gamma_cardinality_invariance};
pub use lemma2::{
    bmm6_lemma2_reference, bmm6_split_direct, classify_inner_type, inner_type_census,
    sigma_reference_all, InnerType, InnerTypeCensus, SigmaReference,
};
pub use mu::bmm6_mu;
pub use run::{dedekind, DedekindRun, Method};
pub use sigma::{bmm6_iso, defining_sigma_evaluations, sigma_fast, table7, SigmaPrecomp};
pub use split::{build_t0_t1, lemma1_check, LowerTables, QSplit};

/// `b⁻⁻(5)`.
pub const BMM5: Count = 6212;
/// `b⁻⁻(6)`.
pub const BMM6: Count = 7741776;

/// One cell `γ_j(c, a)`: for `#N₂ = j`, the number of `N₃` whose residual is
/// `c` two-chains plus `a` isolated points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaCell {
    pub j: usize,
    pub c: usize,
    pub a: usize,
    pub count: u64,
}

/// Coefficient table attached to a method run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "cells")]
pub enum Coefficients {
    None,
    /// `ν_i`, `i = 0..=10`.
    Nu(Vec<u64>),
    /// Non-zero `γ_j(c, a)`, sorted by `(j, c, a)`.
    Gamma(Vec<GammaCell>),
    /// `μ(i, j)` as a 16×16 grid.
    Mu(Vec<Vec<u64>>),
    /// Per-class rows.
    Classes(Vec<IsoClassRecord>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: String,
    pub value: Count,
    pub coefficients: Coefficients,
    /// Residual or σ evaluations performed by the main summation.
    pub evaluations: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}
