use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// An immutable finite partial order on the points `0..n`, `n <= 128`.
///
/// The full order relation is stored twice as bit rows: `down[i]` is the set of
/// points `j` with `j <= i` and `up[i]` the set of points `j` with `i <= j`.
/// Closures are therefore unions of rows. Equality compares the relation only,
/// labels and origin maps are ignored.
#[derive(Clone)]
pub struct Poset {
    n: usize,
    down: Vec<PointSet>,
    up: Vec<PointSet>,
    labels: Vec<Option<String>>,
    origin: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.down == other.down
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::Capacity(format!(
            "{n} points exceed the {MAX_POINTS}-point limit"
        )));
    }
    Ok(())
}

impl Poset {
    /// Builds a poset from its full down-rows. The caller guarantees that the rows
    /// describe a reflexive, antisymmetric and transitive relation.
    pub(crate) fn from_down_rows(down: Vec<PointSet>) -> Poset {
        let n = down.len();
        let mut up = vec![PointSet::EMPTY; n];
        for (i, row) in down.iter().enumerate() {
            for j in row.iter() {
                up[j] = up[j].with(i);
            }
        }
        Poset {
            n,
            down,
            up,
            labels: vec![None; n],
            origin: (0..n).collect(),
        }
    }

    /// Builds a poset whose order is `leq(i, j)`; the predicate must already be a
    /// partial order.
    pub fn from_leq_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        check_capacity(n)?;
        let down = (0..n)
            .map(|j| (0..n).filter(|&i| leq(i, j)).collect::<PointSet>())
            .collect();
        let p = Poset::from_down_rows(down);
        p.check_order()?;
        Ok(p)
    }

    /// Smallest partial order on `0..n` containing every `(low, high)` pair.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        check_capacity(n)?;
        let mut down: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(low, high) in covers {
            for index in [low, high] {
                if index >= n {
                    return Err(Error::Index { index, len: n });
                }
            }
            if low == high {
                return Err(Error::Cycle(low));
            }
            down[high] = down[high].with(low);
        }
        // Warshall closure over bit rows.
        for k in 0..n {
            let row_k = down[k];
            for row in down.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for (i, row) in down.iter().enumerate() {
            for j in row.without(i).iter() {
                if down[j].contains(i) {
                    return Err(Error::Cycle(i));
                }
            }
        }
        Ok(Poset::from_down_rows(down))
    }

    fn check_order(&self) -> Result<()> {
        for i in 0..self.n {
            if !self.down[i].contains(i) {
                return Err(Error::Domain(format!("relation is not reflexive at {i}")));
            }
            for j in self.down[i].without(i).iter() {
                if self.down[j].contains(i) {
                    return Err(Error::Cycle(i));
                }
                if !self.down[j].is_subset(self.down[i]) {
                    return Err(Error::Domain(format!(
                        "relation is not transitive through {j} <= {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The chain `0 < 1 < ... < c-1`.
    pub fn chain(c: usize) -> Result<Poset> {
        check_capacity(c)?;
        Ok(Poset::from_down_rows(
            (0..c).map(|j| PointSet::full(j + 1)).collect(),
        ))
    }

    /// `a` pairwise incomparable points.
    pub fn antichain(a: usize) -> Result<Poset> {
        check_capacity(a)?;
        Ok(Poset::from_down_rows(
            (0..a).map(PointSet::singleton).collect(),
        ))
    }

    /// Product order; point `(i, j)` gets index `i * other.len() + j`.
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        let m = other.n;
        let n = self.n * m;
        check_capacity(n)?;
        let mut down = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..m {
                let mut row = PointSet::EMPTY;
                for a in self.down[i].iter() {
                    row = row.union(PointSet(other.down[j].bits() << (a * m)));
                }
                down.push(row);
            }
        }
        let mut p = Poset::from_down_rows(down);
        if self.labels.iter().all(Option::is_some) && other.labels.iter().all(Option::is_some) {
            for i in 0..self.n {
                for j in 0..m {
                    p.labels[i * m + j] = Some(format!(
                        "({},{})",
                        self.labels[i].as_deref().unwrap_or_default(),
                        other.labels[j].as_deref().unwrap_or_default()
                    ));
                }
            }
        }
        Ok(p)
    }

    /// Disjoint union; `self`'s points come first, then `other`'s.
    pub fn direct_sum(&self, other: &Poset) -> Result<Poset> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let shift = self.n;
        let down = self
            .down
            .iter()
            .copied()
            .chain(other.down.iter().map(|r| PointSet(r.bits() << shift)))
            .collect();
        let mut p = Poset::from_down_rows(down);
        p.labels = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        Ok(p)
    }

    /// The order dual.
    pub fn dual(&self) -> Poset {
        let mut p = Poset::from_down_rows(self.up.clone());
        p.labels = self.labels.clone();
        p
    }

    /// Sub-poset induced on `keep`. Point `k` of the result is the `k`-th smallest
    /// member of `keep`; [`Poset::origin`] maps it back.
    pub fn induced(&self, keep: PointSet) -> Poset {
        debug_assert!(keep.fits(self.n));
        let members: Vec<usize> = keep.iter().collect();
        let down = members
            .iter()
            .map(|&i| compress(self.down[i].intersection(keep), keep))
            .collect();
        let mut p = Poset::from_down_rows(down);
        p.labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        p.origin = members;
        p
    }

    /// `P - Y`: the sub-poset induced on the complement of `y`.
    pub fn remove(&self, y: PointSet) -> Poset {
        self.induced(y.complement(self.n))
    }

    /// Applies a relabeling: point `i` of `self` becomes point `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut down = vec![PointSet::EMPTY; self.n];
        for i in 0..self.n {
            down[perm[i]] = self.down[i].iter().map(|j| perm[j]).collect();
        }
        let mut p = Poset::from_down_rows(down);
        for i in 0..self.n {
            p.labels[perm[i]] = self.labels[i].clone();
        }
        p
    }

    /// A random poset: each pair `i < j` becomes a cover candidate with
    /// probability `density`, the transitive closure is taken and the points are
    /// shuffled.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
        let mut covers = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if rng.gen_bool(density) {
                    covers.push((i, j));
                }
            }
        }
        let p = Poset::from_covers(n, &covers).expect("forward edges are acyclic");
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        p.relabel(&perm)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `↓i`, including `i`.
    #[inline]
    pub fn down_of(&self, i: usize) -> PointSet {
        self.down[i]
    }

    /// `↑i`, including `i`.
    #[inline]
    pub fn up_of(&self, i: usize) -> PointSet {
        self.up[i]
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    pub fn set_label(&mut self, i: usize, label: impl Into<String>) {
        self.labels[i] = Some(label.into());
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Index of each point in the poset this one was induced from.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// Maps a set of this poset's points to the parent's indexing.
    pub fn lift(&self, set: PointSet) -> PointSet {
        set.iter().map(|i| self.origin[i]).collect()
    }

    pub fn down_closure(&self, v: PointSet) -> PointSet {
        v.iter()
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn up_closure(&self, v: PointSet) -> PointSet {
        v.iter()
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn is_downset(&self, y: PointSet) -> bool {
        y.iter().all(|i| self.down[i].is_subset(y))
    }

    pub fn is_upset(&self, y: PointSet) -> bool {
        y.iter().all(|i| self.up[i].is_subset(y))
    }

    pub fn is_antichain(&self, y: PointSet) -> bool {
        y.iter()
            .all(|i| self.down[i].intersection(y) == PointSet::singleton(i))
    }

    /// Is `n` a down-set of the sub-poset induced on `m`?
    pub fn is_downset_within(&self, m: PointSet, n: PointSet) -> bool {
        n.is_subset(m) && n.iter().all(|i| self.down[i].intersection(m).is_subset(n))
    }

    /// `M↕N = ↑(M∖N) ∪ ↓N`, the set removed from the poset for the summand of `N`.
    pub fn updown(&self, m: PointSet, n: PointSet) -> Result<PointSet> {
        if !m.fits(self.n) {
            return Err(Error::Index {
                index: 127 - m.bits().leading_zeros() as usize,
                len: self.n,
            });
        }
        if !self.is_downset_within(m, n) {
            return Err(Error::NotADownSet);
        }
        Ok(self.updown_unchecked(m, n))
    }

    #[inline]
    pub(crate) fn updown_unchecked(&self, m: PointSet, n: PointSet) -> PointSet {
        self.up_closure(m.difference(n)).union(self.down_closure(n))
    }

    /// Minimal elements of `within`.
    pub fn minimal(&self, within: PointSet) -> PointSet {
        within
            .iter()
            .filter(|&i| self.down[i].intersection(within) == PointSet::singleton(i))
            .collect()
    }

    /// Maximal elements of `within`.
    pub fn maximal(&self, within: PointSet) -> PointSet {
        within
            .iter()
            .filter(|&i| self.up[i].intersection(within) == PointSet::singleton(i))
            .collect()
    }

    /// Points covered by `j`.
    pub fn lower_covers(&self, j: usize) -> PointSet {
        let strict = self.down[j].without(j);
        let below_those = strict
            .iter()
            .fold(PointSet::EMPTY, |acc, k| acc.union(self.down[k].without(k)));
        strict.difference(below_those)
    }

    /// Cover pairs `(i, j)` of the transitive reduction in ascending order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|j| self.lower_covers(j).iter().map(move |i| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Points comparable with `i` (including `i`).
    #[inline]
    pub fn comparable(&self, i: usize) -> PointSet {
        self.down[i].union(self.up[i])
    }

    /// Connected components of the comparability graph restricted to `within`,
    /// ordered by their smallest point.
    pub fn components(&self, within: PointSet) -> Vec<PointSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = PointSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = frontier
                    .iter()
                    .fold(PointSet::EMPTY, |acc, i| acc.union(self.comparable(i)))
                    .intersection(within);
                frontier = reach.difference(comp);
                comp = comp.union(reach);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }
}

/// Packs the members of `set` (all inside `keep`) into the positions they have
/// among `keep`'s members.
pub(crate) fn compress(set: PointSet, keep: PointSet) -> PointSet {
    let mut out = 0u128;
    for (k, i) in keep.iter().enumerate() {
        if set.contains(i) {
            out |= 1u128 << k;
        }
    }
    PointSet(out)
}
