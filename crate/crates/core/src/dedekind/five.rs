use std::collections::BTreeMap;
use std::time::Instant;

use super::{Coefficients, GammaCell, MethodReport};
use crate::boolean::{binomial, boolean, Trim};
use crate::classes::IsoClassRecord;
use crate::engine::{decompose, Count};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;

const FIRST_DIGIT: usize = 1 << 4;

struct Bmm5 {
    poset: Poset,
    words: Vec<usize>,
}

impl Bmm5 {
    fn new() -> Result<Bmm5> {
        let poset = boolean(5)?.sub_poset(Trim::Both)?;
        let words = poset.origin().to_vec();
        Ok(Bmm5 { poset, words })
    }

    fn select(&self, f: impl Fn(usize) -> bool) -> PointSet {
        (0..self.poset.len())
            .filter(|&i| f(self.words[i]))
            .collect()
    }
}

/// Pivot set `L₃(5)`: every residual is the antichain `L₂(5) ∖ ↓N`.
pub fn bmm5_nu() -> Result<MethodReport> {
    let start = Instant::now();
    let b = Bmm5::new()?;
    let m = b.select(|w| w.count_ones() == 3);
    let mut nu = vec![0u64; 11];
    let mut evaluations = 0;
    for term in decompose(&b.poset, m)? {
        let residual = &term.residual;
        if !residual.is_antichain(residual.carrier()) {
            return Err(Error::Shape(
                "residual over L₃(5) is not an antichain".into(),
            ));
        }
        nu[residual.len()] += 1;
        evaluations += 1;
    }
    let value = nu
        .iter()
        .enumerate()
        .map(|(i, &v)| v as Count * (1 << i))
        .sum();
    Ok(MethodReport {
        method: "nu".into(),
        value,
        coefficients: Coefficients::Nu(nu),
        evaluations,
        wall_time: start.elapsed(),
    })
}

struct GammaSetup {
    b: Bmm5,
    m: PointSet,
    m2: Vec<usize>,
    m3: Vec<usize>,
}

impl GammaSetup {
    fn new() -> Result<GammaSetup> {
        let b = Bmm5::new()?;
        let m2s = b.select(|w| w.count_ones() == 2 && w & FIRST_DIGIT != 0);
        let m3s = b.select(|w| w.count_ones() == 3 && w & FIRST_DIGIT == 0);
        Ok(GammaSetup {
            m: m2s.union(m3s),
            m2: m2s.iter().collect(),
            m3: m3s.iter().collect(),
            b,
        })
    }

    /// `(c, a)` for the residual of `N = N₂ ∪ N₃`.
    fn shape(&self, n: PointSet) -> Result<(usize, usize)> {
        let p = &self.b.poset;
        let residual = p.carrier().difference(p.updown(self.m, n)?);
        let (mut c, mut a) = (0, 0);
        for comp in p.components(residual) {
            match comp.len() {
                1 => a += 1,
                2 => c += 1,
                k => {
                    return Err(Error::Shape(format!(
                        "residual has a {k}-point component, expected 2-chains and points"
                    )))
                }
            }
        }
        Ok((c, a))
    }

    fn histogram(&self, n2: PointSet) -> Result<BTreeMap<(usize, usize), u64>> {
        let mut hist = BTreeMap::new();
        for bits in 0..1usize << self.m3.len() {
            let n3: PointSet = (0..self.m3.len())
                .filter(|&k| (bits >> k) & 1 == 1)
                .map(|k| self.m3[k])
                .collect();
            *hist.entry(self.shape(n2.union(n3))?).or_insert(0) += 1;
        }
        Ok(hist)
    }
}

/// Pivot set `M₂ ∪ M₃` (an 8-point antichain); one representative `N₂` per
/// cardinality times the sixteen `N₃ ⊆ M₃`.
pub fn bmm5_gamma() -> Result<MethodReport> {
    let start = Instant::now();
    let g = GammaSetup::new()?;
    let mut cells = Vec::new();
    let mut value: Count = 0;
    let mut evaluations = 0;
    for j in 0..=g.m2.len() {
        let n2: PointSet = g.m2[..j].iter().copied().collect();
        let hist = g.histogram(n2)?;
        evaluations += 1 << g.m3.len();
        for (&(c, a), &count) in &hist {
            value += binomial(4, j) * 3u128.pow(c as u32) * (1 << a) * count as Count;
            cells.push(GammaCell { j, c, a, count });
        }
    }
    Ok(MethodReport {
        method: "gamma".into(),
        value,
        coefficients: Coefficients::Gamma(cells),
        evaluations,
        wall_time: start.elapsed(),
    })
}

/// Checks that the residual shape histogram over `N₃` depends on `N₂` only
/// through `#N₂`, for all sixteen `N₂ ⊆ M₂`.
pub fn gamma_cardinality_invariance() -> Result<()> {
    let g = GammaSetup::new()?;
    let mut by_size: BTreeMap<usize, BTreeMap<(usize, usize), u64>> = BTreeMap::new();
    for bits in 0..1usize << g.m2.len() {
        let n2: PointSet = (0..g.m2.len())
            .filter(|&k| (bits >> k) & 1 == 1)
            .map(|k| g.m2[k])
            .collect();
        let hist = g.histogram(n2)?;
        match by_size.get(&n2.len()) {
            Some(seen) if *seen != hist => {
                return Err(Error::Structure(format!(
                    "residual shapes differ between N₂ subsets of size {}",
                    n2.len()
                )))
            }
            Some(_) => {}
            None => {
                by_size.insert(n2.len(), hist);
            }
        }
    }
    Ok(())
}

/// `b⁻⁻(5) = Σ_R ι(R)·2^{δ(R)}` over the classes without isolated points.
pub fn bmm5_iso(classes: &[IsoClassRecord]) -> MethodReport {
    let start = Instant::now();
    let value = classes
        .iter()
        .map(|r| r.iota as Count * (1 << r.delta))
        .sum();
    MethodReport {
        method: "iso5".into(),
        value,
        coefficients: Coefficients::None,
        evaluations: classes.len() as u64,
        wall_time: start.elapsed(),
    }
}
