//! Boolean lattices `B(n)`, their trimmed sub-posets and two routes to the
//! Dedekind numbers `b(n) = d(B(n))`.

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{containment_counts, enumerate_downsets, Count};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::{compress, Poset};

/// Largest `n` with `B(n)` inside the 128-point carrier limit.
pub const MAX_ATOMS: usize = 7;

/// `B(n)` with point index equal to the integer value of the binary word. The
/// first (leftmost) digit is the most significant of the `n` bits.
#[derive(Debug, Clone)]
pub struct BooleanContext {
    n: usize,
    lattice: Poset,
    levels: Vec<PointSet>,
}

/// Which part of `B(n)` to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trim {
    /// `B(n)` itself.
    Full,
    /// `B₋(n)`: levels `2..=n` (bottom and atoms removed).
    Lower,
    /// `B⁻(n)`: levels `0..=n-2` (top and co-atoms removed).
    Upper,
    /// `B⁻⁻(n)`: levels `2..=n-2`, defined for `n >= 3`.
    Both,
}

pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc: Count, i| acc * (n - i) as Count / (i + 1) as Count)
}

impl BooleanContext {
    pub fn new(n: usize) -> Result<BooleanContext> {
        if n > MAX_ATOMS {
            return Err(Error::Capacity(format!("B({n}) has more than 128 points")));
        }
        let size = 1usize << n;
        let down = (0..size)
            .map(|y| (0..size).filter(|&x| x & y == x).collect())
            .collect();
        let mut lattice = Poset::from_down_rows(down);
        for w in 0..size {
            lattice.set_label(w, word(w, n));
        }
        let levels = (0..=n)
            .map(|l| (0..size).filter(|w| w.count_ones() as usize == l).collect())
            .collect();
        Ok(BooleanContext { n, lattice, levels })
    }

    pub fn atoms(&self) -> usize {
        self.n
    }

    pub fn lattice(&self) -> &Poset {
        &self.lattice
    }

    /// `L_ℓ(n)`, the words with exactly `ℓ` ones.
    pub fn level(&self, l: usize) -> PointSet {
        self.levels.get(l).copied().unwrap_or_default()
    }

    pub fn levels_between(&self, lo: usize, hi: usize) -> PointSet {
        (lo..=hi).fold(PointSet::EMPTY, |acc, l| acc.union(self.level(l)))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        (1 << self.n) - 1
    }

    /// Carrier of the requested trim, as a subset of `B(n)`.
    pub fn trim_set(&self, which: Trim) -> Result<PointSet> {
        let n = self.n;
        Ok(match which {
            Trim::Full => self.lattice.carrier(),
            Trim::Lower => self.levels_between(2, n),
            Trim::Upper if n >= 2 => self.levels_between(0, n - 2),
            Trim::Upper => PointSet::EMPTY,
            Trim::Both if n >= 3 => self.levels_between(2, n - 2),
            Trim::Both => {
                return Err(Error::Domain(format!("B⁻⁻({n}) needs at least 3 atoms")));
            }
        })
    }

    pub fn sub_poset(&self, which: Trim) -> Result<Poset> {
        Ok(self.lattice.induced(self.trim_set(which)?))
    }
}

/// Binary word of `w` with `n` digits, most significant first.
pub fn word(w: usize, n: usize) -> String {
    (0..n)
        .rev()
        .map(|b| if (w >> b) & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn boolean(n: usize) -> Result<BooleanContext> {
    BooleanContext::new(n)
}

/// `b₋₋(k)`, `b₋(k)` and `b(k)` for `k = 0..=n`; entries that are undefined or
/// not derivable are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DedekindLadder {
    pub bmm: Vec<Option<Count>>,
    pub bm: Vec<Option<Count>>,
    pub b: Vec<Count>,
}

impl DedekindLadder {
    pub fn dedekind(&self, k: usize) -> Count {
        self.b[k]
    }
}

/// Dedekind numbers from the values `b₋₋(k)`, `3 <= k <= n`:
/// `b₋(2) = 2`, `b₋(k) = b₋₋(k) + 2 + Σ_{i=2}^{k-1} C(k,i)·b₋(i)` and
/// `b(k) = 2 + k + Σ_{i=2}^{k} C(k,i)·b₋(i)`.
pub fn dedekind_via_theorem2(n: usize, bmm: &[(usize, Count)]) -> Result<DedekindLadder> {
    let lookup = |k: usize| bmm.iter().find(|&&(kk, _)| kk == k).map(|&(_, v)| v);
    let mut ladder = DedekindLadder {
        bmm: vec![None; n + 1],
        bm: vec![None; n + 1],
        b: Vec::with_capacity(n + 1),
    };
    for k in 0..=n {
        if k == 2 {
            ladder.bm[2] = Some(2);
        } else if k >= 3 {
            let v = lookup(k).ok_or_else(|| Error::MissingInput(format!("b₋₋({k})")))?;
            ladder.bmm[k] = Some(v);
            let inner: Count = (2..k).map(|i| binomial(k, i) * ladder.bm[i].unwrap()).sum();
            ladder.bm[k] = Some(v + 2 + inner);
        }
        let sum: Count = (2..=k)
            .map(|i| binomial(k, i) * ladder.bm[i].unwrap())
            .sum();
        ladder.b.push(2 + k as Count + sum);
    }
    Ok(ladder)
}

/// Result of the standard pair-sum algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StandardResult {
    pub value: Count,
    /// Unordered pairs `{D, E}` summed over.
    pub summands: u64,
}

/// `b(n) = Σ_{(D,E)} #↓(D∩E)·#↑(D∪E)` over pairs of down-sets of `B(n−2)`,
/// each unordered pair visited once.
pub fn dedekind_standard(n: usize) -> Result<StandardResult> {
    if n < 2 {
        return Err(Error::Domain(format!("the pair sum needs n >= 2, got {n}")));
    }
    if n > MAX_ATOMS {
        return Err(Error::Capacity(format!(
            "pair sum is limited to n <= {MAX_ATOMS}"
        )));
    }
    let ctx = boolean(n - 2)?;
    let family = enumerate_downsets(ctx.lattice())?;
    let table = containment_counts(&family);
    let members = family.members();
    let value = (0..members.len())
        .into_par_iter()
        .map(|i| {
            let d = members[i];
            let mut acc: Count = 0;
            for (j, &e) in members.iter().enumerate().skip(i) {
                let lo = family.index_of(d.intersection(e)).expect("∩ of down-sets");
                let hi = family.index_of(d.union(e)).expect("∪ of down-sets");
                let term = table[lo].below as Count * table[hi].above as Count;
                acc += if j == i { term } else { 2 * term };
            }
            acc
        })
        .sum();
    let m = members.len() as u64;
    Ok(StandardResult {
        value,
        summands: m * (m + 1) / 2,
    })
}

/// Isomorphism type of `B(n) − L₁(n)↕N` for `N ⊆ L₁(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualShape {
    /// `{⊥}` (for `N = ∅`).
    Bottom,
    /// The empty poset (for `#N = 1`).
    Empty,
    /// `B₋(k)` with `k = #N >= 2`.
    LowerTrimmed(usize),
}

/// Builds `B(n) − L₁(n)↕N` and classifies it, checking the claimed shape by
/// an explicit order isomorphism.
pub fn theorem2_residual_shape(ctx: &BooleanContext, n_set: PointSet) -> Result<ResidualShape> {
    let atoms = ctx.level(1);
    if !n_set.is_subset(atoms) {
        return Err(Error::Domain("N must consist of atoms".into()));
    }
    let b = ctx.lattice();
    let removed = b.updown(atoms, n_set)?;
    let residual = b.carrier().difference(removed);
    let k = n_set.len();
    let mismatch = || Error::Structure(format!("residual for #N = {k} has the wrong shape"));
    match k {
        0 => {
            if residual != PointSet::singleton(ctx.bottom()) {
                return Err(mismatch());
            }
            Ok(ResidualShape::Bottom)
        }
        1 => {
            if !residual.is_empty() {
                return Err(mismatch());
            }
            Ok(ResidualShape::Empty)
        }
        _ => {
            let digits = PointSet(n_set.iter().fold(0u128, |acc, a| acc | a as u128));
            let small = boolean(k)?;
            let target = small.trim_set(Trim::Lower)?;
            let image: Vec<usize> = residual
                .iter()
                .map(|w| compress(PointSet(w as u128), digits).bits() as usize)
                .collect();
            let image_set: PointSet = image.iter().copied().collect();
            let support_ok = residual
                .iter()
                .all(|w| PointSet(w as u128).is_subset(digits));
            if !support_ok || image_set != target || image.len() != target.len() {
                return Err(mismatch());
            }
            let points: Vec<usize> = residual.iter().collect();
            for (a, &x) in points.iter().enumerate() {
                for (c, &y) in points.iter().enumerate() {
                    if b.leq(x, y) != small.lattice().leq(image[a], image[c]) {
                        return Err(mismatch());
                    }
                }
            }
            Ok(ResidualShape::LowerTrimmed(k))
        }
    }
}
