use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{Coefficients, MethodReport, QSplit};
use crate::engine::{enumerate_downsets, for_each_downset, Count, DownSetFamily};
use crate::error::{Error, Result};
use crate::iso::{isolated_points, type_code};
use crate::pointset::PointSet;

/// `σ(N) = Σ_{N′ ∈ D(Q23), N′ ⊆ N} 2^{e(N′)}` evaluated by its defining sum for
/// every down-set `N` of `Q23`.
#[derive(Debug, Clone)]
pub struct SigmaReference {
    /// `D(Q23)` in local indexing.
    pub family: DownSetFamily,
    pub e: Vec<u32>,
    pub t: Vec<u32>,
    pub sigma: Vec<Count>,
    /// Number of pairs `N′ ⊆ N` summed over.
    pub pairs: u64,
}

impl SigmaReference {
    pub fn sigma_of(&self, n: PointSet) -> Option<Count> {
        self.family.index_of(n).map(|i| self.sigma[i])
    }
}

pub fn sigma_reference_all(split: &QSplit) -> Result<SigmaReference> {
    let family = enumerate_downsets(&split.q23)?;
    let members = family.members();
    let e: Vec<u32> = members.iter().map(|&d| split.e_local(d)).collect();
    let t: Vec<u32> = members.iter().map(|&d| split.t_local(d)).collect();
    let (sigma, pairs): (Vec<Count>, Vec<u64>) = members
        .par_iter()
        .map(|&n| {
            let mut sum: Count = 0;
            let mut pairs = 0;
            for (k, &m) in members.iter().enumerate() {
                if m.is_subset(n) {
                    sum += 1 << e[k];
                    pairs += 1;
                }
            }
            (sum, pairs)
        })
        .unzip();
    Ok(SigmaReference {
        family,
        e,
        t,
        sigma,
        pairs: pairs.iter().sum(),
    })
}

/// `b⁻⁻(6) = Σ_{N ∈ D(Q23)} 2^{t(N)}·σ(N)` with σ from its defining sum.
pub fn bmm6_lemma2_reference(split: &QSplit) -> Result<MethodReport> {
    let start = Instant::now();
    let r = sigma_reference_all(split)?;
    let value = r.sigma.iter().zip(&r.t).map(|(&s, &t)| s << t).sum();
    Ok(MethodReport {
        method: "lemma2".into(),
        value,
        coefficients: Coefficients::None,
        evaluations: r.pairs,
        wall_time: start.elapsed(),
    })
}

/// `b⁻⁻(6) = Σ_{N ∈ D(Q)} 2^{s(N)+t(N)}`, summing directly over the 40-point `Q`.
pub fn bmm6_split_direct(split: &QSplit) -> (Count, u64) {
    let mut total: Count = 0;
    let mut terms = 0u64;
    for_each_downset(&split.q, &mut |n| {
        let base = split.q.lift(n);
        total += 1 << (split.s_of(base) + split.t_of(base));
        terms += 1;
        true
    });
    (total, terms)
}

/// Types of down-sets of `Q23` with upper points and `e(D) > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InnerType {
    #[serde(rename = "1-300")]
    T1_300,
    #[serde(rename = "2-410")]
    T2_410,
    #[serde(rename = "3-330")]
    T3_330,
    #[serde(rename = "4-060")]
    T4_060,
    #[serde(rename = "other")]
    Other,
}

impl InnerType {
    pub fn code(self) -> &'static str {
        match self {
            InnerType::T1_300 => "1-300",
            InnerType::T2_410 => "2-410",
            InnerType::T3_330 => "3-330",
            InnerType::T4_060 => "4-060",
            InnerType::Other => "other",
        }
    }

    fn from_code(code: &str) -> InnerType {
        match code {
            "1-300" => InnerType::T1_300,
            "2-410" => InnerType::T2_410,
            "3-330" => InnerType::T3_330,
            "4-060" => InnerType::T4_060,
            _ => InnerType::Other,
        }
    }
}

/// Type of `D` with isolated points removed, or `Other` when `D` has no upper
/// points, `e(D) = 0`, or the type is none of the four listed.
pub fn classify_inner_type(split: &QSplit, d: PointSet) -> Result<InnerType> {
    if !split.q23.is_downset(d) || !d.fits(split.q23.len()) {
        return Err(Error::NotADownSet);
    }
    if d.is_disjoint(split.upper23) || split.e_local(d) == 0 {
        return Ok(InnerType::Other);
    }
    Ok(InnerType::from_code(&core_code(split, d)?))
}

pub(crate) fn core_code(split: &QSplit, d: PointSet) -> Result<String> {
    let core = d.difference(isolated_points(&split.q23, d));
    type_code(&split.q23.induced(core))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerTypeCensus {
    /// Down-sets of `Q23` with at least one upper point.
    pub with_upper: u64,
    /// Those with `e(D) > 0`.
    pub positive: u64,
    /// All down-sets with `e(D) > 0`, with or without upper points.
    pub positive_all: u64,
    /// Core type of each positive one.
    pub by_type: BTreeMap<String, u64>,
}

pub fn inner_type_census(split: &QSplit) -> Result<InnerTypeCensus> {
    let family = enumerate_downsets(&split.q23)?;
    let mut census = InnerTypeCensus {
        with_upper: 0,
        positive: 0,
        positive_all: 0,
        by_type: BTreeMap::new(),
    };
    for &d in family.members() {
        let positive = split.e_local(d) > 0;
        if positive {
            census.positive_all += 1;
        }
        if d.is_disjoint(split.upper23) {
            continue;
        }
        census.with_upper += 1;
        if positive {
            census.positive += 1;
            *census.by_type.entry(core_code(split, d)?).or_insert(0) += 1;
        }
    }
    Ok(census)
}
