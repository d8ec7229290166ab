//! Fast evaluation of `σ(A + R)` from per-class data and the `T₁` table.
//!
//! For a representative `R` with upper points `U` and `A ⊆ Δ(R)`, with
//! `A′` the lower points of `A + R`:
//!
//! `σ(A+R) = 2^{#A}·#↓R − 2^{#A′} + T₁(A′) + 2·#U + ρ₁ + ρ₂ + ρ₃ + ρ₄`
//!
//! where the `ρ` count the sub-down-sets with upper points and `e > 0`, grouped
//! by the type of their core (1-300, 2-410, 3-330, 4-060).

use std::time::Instant;

use super::lemma2::core_code;
use super::{build_t0_t1, Coefficients, LowerTables, MethodReport, QSplit};
use crate::classes::IsoClassRecord;
use crate::engine::{count_within, Count};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Data derived once per representative.
#[derive(Debug, Clone)]
pub struct SigmaPrecomp {
    pub representative: PointSet,
    pub uppers: PointSet,
    pub down_count: Count,
    /// `(G₁(u), G₂(u))` for each upper point `u`.
    pub single_groups: Vec<(PointSet, PointSet)>,
    /// `g(V)` for each 2-410 pair `V ⊆ U`.
    pub pair_points: Vec<usize>,
    pub triples: u64,
    pub quadruples: u64,
}

fn structure(msg: String) -> Error {
    Error::Structure(msg)
}

impl SigmaPrecomp {
    pub fn new(split: &QSplit, representative: PointSet) -> Result<SigmaPrecomp> {
        let q23 = &split.q23;
        if !q23.is_downset(representative) {
            return Err(Error::NotADownSet);
        }
        let uppers = representative.intersection(split.upper23);
        let lower = split.lower23;
        let below = |v: PointSet| q23.down_closure(v);
        let e_with = |base: PointSet, y: PointSet| split.e_local(base.union(y));

        let mut single_groups = Vec::new();
        for u in uppers.iter() {
            let du = below(PointSet::singleton(u));
            let delta = lower.difference(du);
            if e_with(du, PointSet::EMPTY) != 2 {
                return Err(structure(format!("e(↓u) != 2 for upper point {u}")));
            }
            let singles: Vec<usize> = delta
                .iter()
                .filter(|&y| e_with(du, PointSet::singleton(y)) == 1)
                .collect();
            let mut groups: Vec<PointSet> = Vec::new();
            for &y in &singles {
                let joined = groups.iter().position(|g| {
                    g.iter()
                        .all(|z| e_with(du, PointSet::from_indices([y, z])) == 1)
                });
                match joined {
                    Some(i) => groups[i] = groups[i].with(y),
                    None => groups.push(PointSet::singleton(y)),
                }
            }
            if groups.len() != 2 || groups.iter().any(|g| g.len() != 3) {
                return Err(structure(format!(
                    "upper point {u}: expected two disjoint 3-point groups, found {groups:?}"
                )));
            }
            let (g1, g2) = (groups[0], groups[1]);
            for y in delta.subsets() {
                let expected = if y.is_empty() {
                    2
                } else if y.is_subset(g1) || y.is_subset(g2) {
                    1
                } else {
                    0
                };
                if e_with(du, y) != expected {
                    return Err(structure(format!("e(Y ∪ ↓{u}) deviates for Y = {y:?}")));
                }
            }
            single_groups.push((g1, g2));
        }

        let mut pair_points = Vec::new();
        let mut triples = 0;
        let mut quadruples = 0;
        for v in uppers.subsets() {
            let k = v.len();
            if !(2..=4).contains(&k) {
                continue;
            }
            let dv = below(v);
            let lowers = dv.intersection(lower).len();
            let delta = lower.difference(dv);
            match (k, lowers) {
                (2, 5) => {
                    if core_code(split, dv)? != "2-410" {
                        return Err(structure(format!(
                            "pair {v:?} with 5 lower points is not 2-410"
                        )));
                    }
                    let g: Vec<usize> = delta
                        .iter()
                        .filter(|&y| e_with(dv, PointSet::singleton(y)) == 1)
                        .collect();
                    if g.len() != 1 {
                        return Err(structure(format!("pair {v:?}: no unique point g(V)")));
                    }
                    let gs = PointSet::singleton(g[0]);
                    for y in delta.subsets() {
                        if e_with(dv, y) != y.is_subset(gs) as u32 {
                            return Err(structure(format!("pair {v:?}: e deviates for Y = {y:?}")));
                        }
                    }
                    pair_points.push(g[0]);
                }
                (3, 6) | (4, 6) => {
                    let want = if k == 3 { "3-330" } else { "4-060" };
                    if core_code(split, dv)? != want {
                        return Err(structure(format!(
                            "{v:?} with 6 lower points is not {want}"
                        )));
                    }
                    for y in delta.subsets() {
                        if e_with(dv, y) != y.is_empty() as u32 {
                            return Err(structure(format!(
                                "{want} set {v:?}: e deviates for Y = {y:?}"
                            )));
                        }
                    }
                    if k == 3 {
                        triples += 1;
                    } else {
                        quadruples += 1;
                    }
                }
                _ => {}
            }
        }
        Ok(SigmaPrecomp {
            representative,
            uppers,
            down_count: count_within(q23, representative),
            single_groups,
            pair_points,
            triples,
            quadruples,
        })
    }
}

/// `σ(A + R)` for `A` a set of lower points outside `R` (local indexing).
pub fn sigma_fast(
    split: &QSplit,
    tables: &LowerTables,
    pre: &SigmaPrecomp,
    a: PointSet,
) -> Result<Count> {
    let delta = split.lower23.difference(pre.representative);
    if !a.is_subset(delta) {
        return Err(Error::Domain("A must be a subset of Δ(R)".into()));
    }
    let lowers = pre.representative.union(a).intersection(split.lower23);
    let rho_single: Count = pre
        .single_groups
        .iter()
        .map(|&(g1, g2)| {
            (1 << g1.intersection(lowers).len()) + (1 << g2.intersection(lowers).len()) - 1
        })
        .sum();
    let rho_pair: Count = pre
        .pair_points
        .iter()
        .map(|&g| if lowers.contains(g) { 2 } else { 1 })
        .sum();
    let base =
        (pre.down_count << a.len()) - (1 << lowers.len()) + tables.t1[split.lower_index(lowers)];
    Ok(base
        + 2 * pre.uppers.len() as Count
        + rho_single
        + rho_pair
        + pre.triples as Count
        + pre.quadruples as Count)
}

/// Fills `t`, `σ`, `#↓` and the inner sum of every class; also returns the number
/// of fast σ evaluations on down-sets with upper points.
pub fn table7(split: &QSplit, r0: &[IsoClassRecord]) -> Result<(Vec<IsoClassRecord>, u64)> {
    let tables = build_t0_t1(split);
    let mut evaluations = 0;
    let mut rows = Vec::with_capacity(r0.len());
    for record in r0 {
        let rep = record.representative;
        let pre = SigmaPrecomp::new(split, rep)?;
        let delta = split.lower23.difference(rep);
        let inner = if pre.uppers.is_empty() {
            // Upper-free down-sets: the whole T₁ table.
            tables.t1.iter().sum()
        } else {
            let mut sum = 0;
            for a in delta.subsets() {
                sum += sigma_fast(split, &tables, &pre, a)?;
                evaluations += 1;
            }
            sum
        };
        rows.push(IsoClassRecord {
            t: Some(split.t_local(rep)),
            sigma: Some(sigma_fast(split, &tables, &pre, PointSet::EMPTY)?),
            down_count: Some(pre.down_count),
            inner_sum: Some(inner),
            ..record.clone()
        });
    }
    Ok((rows, evaluations))
}

/// Number of terms the defining σ sums would need over one `A + R` per class:
/// `Σ_R 3^{δ(R)}·#↓R`.
pub fn defining_sigma_evaluations(rows: &[IsoClassRecord]) -> Count {
    rows.iter()
        .map(|r| 3u128.pow(r.delta as u32) * r.down_count.unwrap_or(0))
        .sum()
}

/// `b⁻⁻(6) = Σ_R ι(R)·2^{t(R)}·Σ_{A ⊆ Δ(R)} σ(A + R)`.
pub fn bmm6_iso(split: &QSplit, r0: &[IsoClassRecord]) -> Result<MethodReport> {
    let start = Instant::now();
    let (rows, evaluations) = table7(split, r0)?;
    let value = rows
        .iter()
        .map(|r| (r.iota as Count) * (r.inner_sum.unwrap() << r.t.unwrap()))
        .sum();
    Ok(MethodReport {
        method: "iso".into(),
        value,
        coefficients: Coefficients::Classes(rows),
        evaluations,
        wall_time: start.elapsed(),
    })
}
