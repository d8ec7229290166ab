//! Down-set counting, enumeration and the pivot-set decomposition
//! `d(P) = Σ_{N ∈ D(P|M)} d(P − M↕N)`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;

/// Down-set counts. Every count needed here is far below `2^64`; the only
/// poset whose count does not fit is the 128-point antichain.
pub type Count = u128;

/// Default bound on the number of materialized down-sets.
pub const DEFAULT_LIMIT: usize = 1 << 24;

/// Tuning for the counting recurrence. Results never depend on it.
#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    /// Cache component counts keyed by the component's point set.
    pub memo: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { memo: true }
    }
}

// Components smaller than this are cheaper to recount than to look up.
const MEMO_MIN_POINTS: usize = 7;

struct Counter<'a> {
    poset: &'a Poset,
    memo: Option<HashMap<u128, Count>>,
}

impl Counter<'_> {
    fn count(&mut self, alive: PointSet) -> Option<Count> {
        if alive.is_empty() {
            return Some(1);
        }
        let comps = self.poset.components(alive);
        let mut total: Count = 1;
        for comp in comps {
            total = total.checked_mul(self.count_connected(comp)?)?;
        }
        Some(total)
    }

    fn count_connected(&mut self, alive: PointSet) -> Option<Count> {
        let size = alive.len();
        if size == 1 {
            return Some(2);
        }
        let p = self.poset;
        let mut pivot = usize::MAX;
        let mut best = 0;
        let mut is_chain = true;
        for x in alive.iter() {
            let reach = p.comparable(x).intersection(alive).len();
            if reach < size {
                is_chain = false;
            }
            if reach > best {
                best = reach;
                pivot = x;
            }
        }
        if is_chain {
            return Some(size as Count + 1);
        }
        let memoize = self.memo.is_some() && size >= MEMO_MIN_POINTS;
        if memoize {
            if let Some(&hit) = self.memo.as_ref().and_then(|m| m.get(&alive.bits())) {
                return Some(hit);
            }
        }
        // d(P) = d(P∖x) + d(P∖(↓x ∪ ↑x))
        let without = self.count(alive.without(pivot))?;
        let detached = self.count(alive.difference(p.comparable(pivot)))?;
        let result = without.checked_add(detached)?;
        if memoize {
            self.memo.as_mut().unwrap().insert(alive.bits(), result);
        }
        Some(result)
    }
}

/// Counts the down-sets of the sub-poset induced on `alive`, without building it.
pub fn try_count_within(p: &Poset, alive: PointSet, opts: CountOptions) -> Result<Count> {
    let mut counter = Counter {
        poset: p,
        memo: opts.memo.then(HashMap::new),
    };
    counter
        .count(alive)
        .ok_or_else(|| Error::Capacity("down-set count does not fit in 128 bits".into()))
}

pub fn count_within(p: &Poset, alive: PointSet) -> Count {
    try_count_within(p, alive, CountOptions::default()).expect("count overflow")
}

/// `d(P)`.
///
/// # Panics
/// Only for the 128-point antichain, whose count `2^128` is not representable;
/// use [`try_count_downsets`] to get an error instead.
pub fn count_downsets(p: &Poset) -> Count {
    count_within(p, p.carrier())
}

pub fn try_count_downsets(p: &Poset) -> Result<Count> {
    try_count_within(p, p.carrier(), CountOptions::default())
}

pub fn count_downsets_with(p: &Poset, opts: CountOptions) -> Result<Count> {
    try_count_within(p, p.carrier(), opts)
}

/// Calls `visit` once for every down-set of the sub-poset induced on `alive`
/// (in the parent's indexing). Visiting stops early when `visit` returns false.
pub fn for_each_downset_within(
    p: &Poset,
    alive: PointSet,
    visit: &mut impl FnMut(PointSet) -> bool,
) -> bool {
    fn rec(
        p: &Poset,
        base: PointSet,
        alive: PointSet,
        visit: &mut impl FnMut(PointSet) -> bool,
    ) -> bool {
        let Some(x) = alive.first() else {
            return visit(base);
        };
        // x excluded: nothing above x may be taken.
        if !rec(p, base, alive.difference(p.up_of(x)), visit) {
            return false;
        }
        // x included: all of ↓x is taken.
        let lower = p.down_of(x).intersection(alive);
        rec(p, base.union(lower), alive.difference(lower), visit)
    }
    rec(p, PointSet::EMPTY, alive, visit)
}

pub fn for_each_downset(p: &Poset, visit: &mut impl FnMut(PointSet) -> bool) -> bool {
    for_each_downset_within(p, p.carrier(), visit)
}

/// `D(P)` as an explicit, sorted list.
#[derive(Debug, Clone)]
pub struct DownSetFamily {
    owner: Poset,
    members: Vec<PointSet>,
}

impl DownSetFamily {
    pub fn owner(&self) -> &Poset {
        &self.owner
    }

    /// Members sorted by bit pattern.
    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, d: PointSet) -> Option<usize> {
        self.members.binary_search(&d).ok()
    }
}

/// Materializes every down-set of `p`, failing once more than `limit` exist.
pub fn enumerate_downsets_limited(p: &Poset, limit: usize) -> Result<DownSetFamily> {
    let mut members = Vec::new();
    let complete = for_each_downset(p, &mut |d| {
        members.push(d);
        members.len() <= limit
    });
    if !complete || members.len() > limit {
        return Err(Error::Capacity(format!(
            "poset has more than {limit} down-sets"
        )));
    }
    members.sort_unstable();
    Ok(DownSetFamily {
        owner: p.clone(),
        members,
    })
}

pub fn enumerate_downsets(p: &Poset) -> Result<DownSetFamily> {
    enumerate_downsets_limited(p, DEFAULT_LIMIT)
}

/// One summand of the decomposition for a fixed pivot set `M`.
#[derive(Debug, Clone)]
pub struct DecompositionTerm {
    /// The down-set `N` of `P|M`, in `P`'s indexing.
    pub pivot_downset: PointSet,
    /// `M↕N`.
    pub removed: PointSet,
    /// `P − M↕N`; its origin map points into `P`.
    pub residual: Poset,
}

impl DecompositionTerm {
    pub fn residual_count(&self) -> Count {
        count_downsets(&self.residual)
    }

    /// Carrier of the residual in `P`'s indexing.
    pub fn residual_set(&self) -> PointSet {
        self.residual.lift(self.residual.carrier())
    }
}

fn check_pivot(p: &Poset, m: PointSet) -> Result<()> {
    if !m.fits(p.len()) {
        let index = 127 - m.bits().leading_zeros() as usize;
        return Err(Error::Index {
            index,
            len: p.len(),
        });
    }
    Ok(())
}

/// Down-sets of `P|M`, in `P`'s indexing, sorted.
pub fn pivot_downsets(p: &Poset, m: PointSet) -> Result<Vec<PointSet>> {
    check_pivot(p, m)?;
    let mut out = Vec::new();
    for_each_downset_within(p, m, &mut |n| {
        out.push(n);
        true
    });
    out.sort_unstable();
    Ok(out)
}

/// Pairs `(N, P − M↕N)` as point sets of `P`, one per down-set `N` of `P|M`.
pub fn decompose_sets(p: &Poset, m: PointSet) -> Result<Vec<(PointSet, PointSet)>> {
    let carrier = p.carrier();
    Ok(pivot_downsets(p, m)?
        .into_iter()
        .map(|n| (n, carrier.difference(p.updown_unchecked(m, n))))
        .collect())
}

/// Streams the decomposition terms for pivot set `m`. Residual posets are built
/// lazily, one per item.
pub fn decompose(p: &Poset, m: PointSet) -> Result<impl Iterator<Item = DecompositionTerm> + '_> {
    let pivots = pivot_downsets(p, m)?;
    Ok(pivots.into_iter().map(move |n| {
        let removed = p.updown_unchecked(m, n);
        DecompositionTerm {
            pivot_downset: n,
            removed,
            residual: p.remove(removed),
        }
    }))
}

/// `d(P)` as the sum of the residual counts for pivot set `m`.
pub fn count_via_decomposition(p: &Poset, m: PointSet) -> Result<Count> {
    let terms = decompose_sets(p, m)?;
    Ok(terms
        .par_iter()
        .map(|&(_, residual)| count_within(p, residual))
        .sum())
}

fn check_trace(p: &Poset, m: PointSet, n: PointSet) -> Result<()> {
    check_pivot(p, m)?;
    if !p.is_downset_within(m, n) {
        return Err(Error::NotADownSet);
    }
    Ok(())
}

/// `φ_{M,N}(D) = D ∖ ↓N`, a down-set of `P − M↕N` (returned in `P`'s indexing).
pub fn phi_forward(p: &Poset, m: PointSet, n: PointSet, d: PointSet) -> Result<PointSet> {
    check_trace(p, m, n)?;
    if !d.fits(p.len()) || !p.is_downset(d) {
        return Err(Error::NotADownSet);
    }
    if d.intersection(m) != n {
        return Err(Error::TraceMismatch);
    }
    Ok(d.difference(p.down_closure(n)))
}

/// `φ⁻¹(D′) = D′ ∪ ↓N` for a down-set `D′` of `P − M↕N` given in `P`'s indexing.
pub fn phi_inverse(p: &Poset, m: PointSet, n: PointSet, d_res: PointSet) -> Result<PointSet> {
    check_trace(p, m, n)?;
    let residual = p.carrier().difference(p.updown_unchecked(m, n));
    if !p.is_downset_within(residual, d_res) {
        return Err(Error::NotADownSet);
    }
    Ok(d_res.union(p.down_closure(n)))
}

/// `d(C_n × Q)` by the recursion `d(C_n × Q) = Σ_{N ∈ D(Q)} d(C_{n−1} × Q|_N)`.
pub fn chain_product_count(n: usize, q: &Poset) -> Result<Count> {
    chain_product_count_limited(n, q, DEFAULT_LIMIT)
}

pub fn chain_product_count_limited(n: usize, q: &Poset, limit: usize) -> Result<Count> {
    match n {
        0 => Ok(1),
        1 => try_count_downsets(q),
        _ => {
            let family = enumerate_downsets_limited(q, limit)?;
            family
                .members()
                .par_iter()
                .map(|&d| {
                    if n == 2 {
                        try_count_within(q, d, CountOptions::default())
                    } else {
                        chain_product_count_limited(n - 1, &q.induced(d), limit)
                    }
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))
        }
    }
}

/// Per-member containment counts within a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Containment {
    /// `#{E ∈ F : E ⊆ D}`.
    pub below: u64,
    /// `#{E ∈ F : D ⊆ E}`.
    pub above: u64,
}

/// For every member `D` of `F`, how many members lie below and above it.
pub fn containment_counts(family: &DownSetFamily) -> Vec<Containment> {
    let members = family.members();
    members
        .par_iter()
        .map(|&d| {
            let mut below = 0;
            let mut above = 0;
            for &e in members {
                below += e.is_subset(d) as u64;
                above += d.is_subset(e) as u64;
            }
            Containment { below, above }
        })
        .collect()
}
