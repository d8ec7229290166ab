//! Isomorphism classes of the down-sets of `Q23 ≅ B⁻⁻(5)`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dedekind::{QSplit, SigmaReference};
use crate::engine::{enumerate_downsets, Count};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, isolated_points, type_code, CanonicalForm};
use crate::pointset::PointSet;
use crate::poset::Poset;

/// One class of down-sets without isolated points, with the per-class
/// parameters of the `b⁻⁻(6)` summation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClassRecord {
    pub code: String,
    /// Numerically least member of the class, as a `Q23`-local mask.
    pub representative: PointSet,
    pub upper_points: usize,
    /// Number of down-sets of `Q23` in the class.
    pub iota: u64,
    /// Number of lower points outside the representative.
    pub delta: usize,
    pub t: Option<u32>,
    pub sigma: Option<Count>,
    /// `#↓R` in `D(Q23)`.
    pub down_count: Option<Count>,
    /// `Σ_{A ⊆ Δ(R)} σ(A + R)`.
    pub inner_sum: Option<Count>,
}

#[derive(Debug, Clone)]
pub struct RepresentationSystem {
    /// Number of isomorphism classes among all down-sets.
    pub total_classes: usize,
    /// Classes of down-sets without isolated points, ordered by `(u, code)`.
    pub r0: Vec<IsoClassRecord>,
    /// All members of each `r0` class.
    pub copies: Vec<Vec<PointSet>>,
}

/// Classifies `D(q23)` up to isomorphism. `q23` must have height two; its
/// minimal points are the lower points.
pub fn representation_system(q23: &Poset) -> Result<RepresentationSystem> {
    let lower = q23.minimal(q23.carrier());
    let family = enumerate_downsets(q23)?;
    let forms: Vec<CanonicalForm> = family
        .members()
        .par_iter()
        .map(|&d| canonical_form(&q23.induced(d)))
        .collect::<Result<_>>()?;
    let total_classes = forms.iter().collect::<BTreeSet<_>>().len();

    let mut groups: HashMap<&CanonicalForm, Vec<PointSet>> = HashMap::new();
    for (&d, form) in family.members().iter().zip(&forms) {
        if isolated_points(q23, d).is_empty() {
            groups.entry(form).or_default().push(d);
        }
    }
    let mut rows: Vec<(IsoClassRecord, Vec<PointSet>)> = groups
        .into_values()
        .map(|mut members| {
            members.sort_unstable();
            let rep = members[0];
            let code = type_code(&q23.induced(rep))?;
            let record = IsoClassRecord {
                code,
                representative: rep,
                upper_points: rep.difference(lower).len(),
                iota: members.len() as u64,
                delta: lower.difference(rep).len(),
                t: None,
                sigma: None,
                down_count: None,
                inner_sum: None,
            };
            Ok((record, members))
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| (a.0.upper_points, &a.0.code).cmp(&(b.0.upper_points, &b.0.code)));
    let codes: BTreeSet<&str> = rows.iter().map(|r| r.0.code.as_str()).collect();
    if codes.len() != rows.len() {
        return Err(Error::Structure(
            "type codes do not separate the classes".into(),
        ));
    }
    let (r0, copies) = rows.into_iter().unzip();
    Ok(RepresentationSystem {
        total_classes,
        r0,
        copies,
    })
}

/// Checks that `t`, `σ`, `#↓` and the inner sum of every copy of every class
/// agree with the tabulated per-class values, using the defining σ sums.
pub fn check_class_constancy(
    split: &QSplit,
    system: &RepresentationSystem,
    rows: &[IsoClassRecord],
    reference: &SigmaReference,
) -> Result<()> {
    let family = &reference.family;
    for (row, copies) in rows.iter().zip(&system.copies) {
        for &copy in copies {
            let idx = family.index_of(copy).ok_or(Error::NotADownSet)?;
            let delta = split.lower23.difference(copy);
            let inner: Count = delta
                .subsets()
                .map(|a| reference.sigma_of(copy.union(a)).unwrap())
                .sum();
            let down = family
                .members()
                .iter()
                .filter(|m| m.is_subset(copy))
                .count() as Count;
            let ok = Some(reference.t[idx]) == row.t
                && Some(reference.sigma[idx]) == row.sigma
                && Some(down) == row.down_count
                && Some(inner) == row.inner_sum;
            if !ok {
                return Err(Error::Structure(format!(
                    "class {} is not constant across its copies (copy {:?})",
                    row.code, copy
                )));
            }
        }
    }
    Ok(())
}
