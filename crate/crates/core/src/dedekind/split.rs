//! The four-block split of `B⁻⁻(6)` by first digit.
//!
//! `M23`/`M34` are the points of levels 2–3 with first digit 0 and of levels
//! 3–4 with first digit 1; `E2`/`E4` are the remaining level-2 and level-4
//! points. `Q` is the sub-poset on `M23 ∪ M34 ≅ C₂ × B⁻⁻(5)` and `β` flips the
//! first digit, mapping `M23` onto `M34`.

use crate::boolean::{boolean, Trim};
use crate::engine::Count;
use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::pointset::PointSet;
use crate::poset::{compress, Poset};

/// Number of lower points of `M23`, i.e. the width of the `T₀`/`T₁` index.
pub const LOWER_POINTS: usize = 10;

#[derive(Debug, Clone)]
pub struct QSplit {
    /// `B⁻⁻(6)`; `origin()` gives each point's binary word.
    pub base: Poset,
    pub m23: PointSet,
    pub m34: PointSet,
    pub e2: PointSet,
    pub e4: PointSet,
    pub q: Poset,
    pub q23: Poset,
    pub q34: Poset,
    pub s: Poset,
    pub t: Poset,
    /// `β` on `Q23`-local indices, as base indices.
    pub beta: Vec<usize>,
    /// Lower (level-2) points of `Q23`, local indexing.
    pub lower23: PointSet,
    /// Upper (level-3) points of `Q23`, local indexing.
    pub upper23: PointSet,
    e2_below_beta: Vec<PointSet>,
    e4_above: Vec<PointSet>,
}

const FIRST_DIGIT: usize = 1 << 5;

impl QSplit {
    pub fn new() -> Result<QSplit> {
        let ctx = boolean(6)?;
        let base = ctx.sub_poset(Trim::Both)?;
        let words = base.origin().to_vec();
        let select = |f: &dyn Fn(usize) -> bool| -> PointSet {
            (0..base.len()).filter(|&i| f(words[i])).collect()
        };
        let level = |w: usize| w.count_ones();
        let top = |w: usize| w & FIRST_DIGIT != 0;
        let m23 = select(&|w| !top(w) && (level(w) == 2 || level(w) == 3));
        let m34 = select(&|w| top(w) && (level(w) == 3 || level(w) == 4));
        let e2 = select(&|w| top(w) && level(w) == 2);
        let e4 = select(&|w| !top(w) && level(w) == 4);
        let q = base.induced(m23.union(m34));
        let q23 = base.induced(m23);
        let q34 = base.induced(m34);
        let s = base.induced(e2.union(m34));
        let t = base.induced(e4.union(m23));

        let index_of_word = |w: usize| words.iter().position(|&x| x == w).unwrap();
        let beta: Vec<usize> = q23
            .origin()
            .iter()
            .map(|&i| index_of_word(words[i] | FIRST_DIGIT))
            .collect();
        let lower23: PointSet = (0..q23.len())
            .filter(|&k| level(words[q23.origin()[k]]) == 2)
            .collect();
        let upper23 = q23.carrier().difference(lower23);
        let e2_below_beta = beta
            .iter()
            .map(|&b| base.down_of(b).intersection(e2))
            .collect();
        let e4_above = q23
            .origin()
            .iter()
            .map(|&i| base.up_of(i).intersection(e4))
            .collect();
        let split = QSplit {
            base,
            m23,
            m34,
            e2,
            e4,
            q,
            q23,
            q34,
            s,
            t,
            beta,
            lower23,
            upper23,
            e2_below_beta,
            e4_above,
        };
        split.check()?;
        Ok(split)
    }

    fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Structure(format!("split of B⁻⁻(6): {what}")));
        let all = self.m23.union(self.m34).union(self.e2).union(self.e4);
        let total = self.m23.len() + self.m34.len() + self.e2.len() + self.e4.len();
        if all != self.base.carrier() || total != self.base.len() {
            return fail("blocks do not partition the carrier");
        }
        if (self.m23.len(), self.m34.len(), self.e2.len(), self.e4.len()) != (20, 20, 5, 5) {
            return fail("block sizes");
        }
        if self.lower23.len() != LOWER_POINTS {
            return fail("lower points of M23");
        }
        let b5 = boolean(5)?.sub_poset(Trim::Both)?;
        if !are_isomorphic(&self.q23, &b5)? || !are_isomorphic(&self.q34, &b5)? {
            return fail("Q23 or Q34 is not B⁻⁻(5)");
        }
        let origin = self.q23.origin();
        for x in 0..self.q23.len() {
            if !self.base.lt(origin[x], self.beta[x]) {
                return fail("x < β(x)");
            }
            for y in self.m34.iter() {
                // x < y in Q iff β(x) ≤ y in Q34
                if self.base.lt(origin[x], y) != self.base.leq(self.beta[x], y) {
                    return fail("β does not describe the order between the copies");
                }
            }
        }
        Ok(())
    }

    /// `β[Y]` for `Y` in `Q23`-local indexing, as base indices.
    pub fn beta_image(&self, y: PointSet) -> PointSet {
        y.iter().map(|k| self.beta[k]).collect()
    }

    /// `e(Y) = #(E₂ ∖ ↓_S β[Y])` for `Y ⊆ M23` in local indexing.
    #[inline]
    pub fn e_local(&self, y: PointSet) -> u32 {
        let hit = y
            .iter()
            .fold(PointSet::EMPTY, |acc, k| acc.union(self.e2_below_beta[k]));
        (self.e2.len() - hit.len()) as u32
    }

    /// `t(N) = #(E₄ ∖ ↑_T(M23 ∖ N))`, depending only on `N ∩ M23` (local indexing).
    #[inline]
    pub fn t_local(&self, n23: PointSet) -> u32 {
        let outside = self.q23.carrier().difference(n23);
        let hit = outside
            .iter()
            .fold(PointSet::EMPTY, |acc, k| acc.union(self.e4_above[k]));
        (self.e4.len() - hit.len()) as u32
    }

    /// `M23`-points of a base-indexed set, in `Q23`-local indexing.
    pub fn to_local23(&self, n: PointSet) -> PointSet {
        compress(n.intersection(self.m23), self.m23)
    }

    /// `e(Y)` for `Y ⊆ M23` given in base indexing.
    pub fn e_of(&self, y: PointSet) -> Result<u32> {
        if !y.is_subset(self.m23) {
            return Err(Error::Domain("e(Y) needs Y ⊆ M23".into()));
        }
        Ok(self.e_local(self.to_local23(y)))
    }

    /// `s(N) = #(E₂ ∖ ↓_S(M34 ∩ N))` for `N ⊆ M` in base indexing.
    pub fn s_of(&self, n: PointSet) -> u32 {
        let hit = self
            .base
            .down_closure(n.intersection(self.m34))
            .intersection(self.e2);
        (self.e2.len() - hit.len()) as u32
    }

    /// `t(N)` for `N ⊆ M` in base indexing, evaluated from its definition.
    pub fn t_of(&self, n: PointSet) -> u32 {
        let hit = self
            .base
            .up_closure(self.m23.difference(n))
            .intersection(self.e4);
        (self.e4.len() - hit.len()) as u32
    }

    /// Position of lower-point set `y` (local) in the `T` tables.
    #[inline]
    pub fn lower_index(&self, y: PointSet) -> usize {
        compress(y.intersection(self.lower23), self.lower23).bits() as usize
    }

    /// Inverse of [`QSplit::lower_index`].
    pub fn lower_set(&self, index: usize) -> PointSet {
        self.lower23
            .iter()
            .enumerate()
            .filter(|&(bit, _)| (index >> bit) & 1 == 1)
            .map(|(_, k)| k)
            .collect()
    }
}

/// `T₀(Y) = 2^{e(Y)}` and its subset-sum transform `T₁(Y) = Σ_{Z ⊆ Y} T₀(Z)`,
/// indexed by the lower points of `M23`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTables {
    pub t0: Vec<Count>,
    pub t1: Vec<Count>,
}

pub fn build_t0_t1(split: &QSplit) -> LowerTables {
    let size = 1usize << LOWER_POINTS;
    let t0: Vec<Count> = (0..size)
        .map(|i| 1 << split.e_local(split.lower_set(i)))
        .collect();
    let mut t1 = t0.clone();
    for bit in 0..LOWER_POINTS {
        for i in 0..size {
            if i & (1 << bit) != 0 {
                t1[i] += t1[i ^ (1 << bit)];
            }
        }
    }
    LowerTables { t0, t1 }
}

/// Checks `P − M₀↕N = P₁|β[N]` on `P = C₂ × Q`, where `N` is a down-set of the
/// bottom copy (given in `Q`'s indexing).
pub fn lemma1_check(q: &Poset, n: PointSet) -> Result<bool> {
    if !q.is_downset(n) || !n.fits(q.len()) {
        return Err(Error::NotADownSet);
    }
    let p = Poset::chain(2)?.product(q)?;
    let m0 = PointSet::full(q.len());
    let residual = p.carrier().difference(p.updown(m0, n)?);
    Ok(residual == PointSet(n.bits() << q.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_invariants_hold() {
        let split = QSplit::new().unwrap();
        assert_eq!(split.q.len(), 40);
        assert_eq!(split.upper23.len(), 10);
    }

    #[test]
    fn e_and_t_extremes() {
        let split = QSplit::new().unwrap();
        assert_eq!(split.e_local(PointSet::EMPTY), 5);
        assert_eq!(split.t_local(PointSet::EMPTY), 0);
        assert_eq!(split.t_local(split.q23.carrier()), 5);
        assert_eq!(split.t_of(PointSet::EMPTY), 0);
        assert_eq!(split.t_of(split.m23), 5);
        assert_eq!(split.e_of(PointSet::EMPTY).unwrap(), 5);
        assert!(split.e_of(split.e2).is_err());
    }

    #[test]
    fn lower_tables() {
        let split = QSplit::new().unwrap();
        let tables = build_t0_t1(&split);
        assert_eq!(tables.t0[0], 32);
        assert_eq!(tables.t1[0], 32);
        let total: Count = tables.t0.iter().sum();
        assert_eq!(tables.t1[(1 << LOWER_POINTS) - 1], total);
        for i in [0usize, 5, 1000] {
            assert_eq!(split.lower_index(split.lower_set(i)), i);
        }
    }

    #[test]
    fn lemma1_extremes() {
        let q = boolean(3).unwrap().lattice().clone();
        assert!(lemma1_check(&q, PointSet::EMPTY).unwrap());
        assert!(lemma1_check(&q, q.carrier()).unwrap());
        assert!(lemma1_check(&q, PointSet::from_indices([1])).is_err());
    }
}
