//! Canonical forms of small posets and the structural codes used to name the
//! down-set classes of `B⁻⁻(5)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;

/// Largest poset accepted by [`canonical_form`].
pub const MAX_CANONICAL_POINTS: usize = 24;

/// Byte certificate of an isomorphism class: equal certificates iff isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(p: &Poset) -> Result<CanonicalForm> {
    if p.len() > MAX_CANONICAL_POINTS {
        return Err(Error::Capacity(format!(
            "canonical forms are limited to {MAX_CANONICAL_POINTS} points"
        )));
    }
    let mut parts: Vec<Vec<u8>> = p
        .components(p.carrier())
        .into_iter()
        .map(|c| canonical_connected(&p.induced(c)))
        .collect();
    parts.sort_unstable();
    let mut out = vec![p.len() as u8, parts.len() as u8];
    for part in parts {
        out.extend(part);
    }
    Ok(CanonicalForm(out))
}

pub fn are_isomorphic(p: &Poset, q: &Poset) -> Result<bool> {
    if p.len() != q.len() {
        return Ok(false);
    }
    Ok(canonical_form(p)? == canonical_form(q)?)
}

/// Relabels colors so that equal keys share an index and indices follow the
/// key order.
fn recolor<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).unwrap() as u32)
        .collect()
}

fn distinct_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

struct Canon<'a> {
    p: &'a Poset,
    strict_down: Vec<PointSet>,
    strict_up: Vec<PointSet>,
    cover_down: Vec<PointSet>,
    cover_up: Vec<PointSet>,
    best: Option<Vec<u8>>,
}

impl Canon<'_> {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        loop {
            let before = distinct_count(&colors);
            let profile = |set: PointSet| {
                let mut v: Vec<u32> = set.iter().map(|j| colors[j]).collect();
                v.sort_unstable();
                v
            };
            let keys: Vec<_> = (0..self.p.len())
                .map(|i| {
                    (
                        colors[i],
                        profile(self.strict_down[i]),
                        profile(self.strict_up[i]),
                        profile(self.cover_down[i]),
                        profile(self.cover_up[i]),
                    )
                })
                .collect();
            colors = recolor(&keys);
            if distinct_count(&colors) == before {
                return colors;
            }
        }
    }

    fn certificate(&self, colors: &[u32]) -> Vec<u8> {
        let n = self.p.len();
        let mut order = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let mut bytes = vec![n as u8];
        let mut acc = 0u8;
        let mut nbits = 0;
        for &a in &order {
            for &b in &order {
                acc = (acc << 1) | self.p.lt(a, b) as u8;
                nbits += 1;
                if nbits == 8 {
                    bytes.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push(acc << (8 - nbits));
        }
        bytes
    }

    fn search(&mut self, colors: Vec<u32>) {
        let n = self.p.len();
        if distinct_count(&colors) == n {
            let cert = self.certificate(&colors);
            if self.best.as_ref().is_none_or(|b| cert < *b) {
                self.best = Some(cert);
            }
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let mut tried: Vec<(PointSet, PointSet)> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            // Twins (same strict neighbourhoods) are exchanged by an automorphism.
            let key = (self.strict_down[v], self.strict_up[v]);
            if tried.contains(&key) {
                continue;
            }
            tried.push(key);
            let keys: Vec<(u32, bool)> = (0..n).map(|i| (colors[i], i != v)).collect();
            let next = self.refine(recolor(&keys));
            self.search(next);
        }
    }
}

fn canonical_connected(p: &Poset) -> Vec<u8> {
    let n = p.len();
    let strict_down: Vec<PointSet> = (0..n).map(|i| p.down_of(i).without(i)).collect();
    let strict_up: Vec<PointSet> = (0..n).map(|i| p.up_of(i).without(i)).collect();
    let cover_down: Vec<PointSet> = (0..n).map(|i| p.lower_covers(i)).collect();
    let mut cover_up = vec![PointSet::EMPTY; n];
    for (j, cd) in cover_down.iter().enumerate() {
        for i in cd.iter() {
            cover_up[i] = cover_up[i].with(j);
        }
    }
    let mut canon = Canon {
        p,
        strict_down,
        strict_up,
        cover_down,
        cover_up,
        best: None,
    };
    let initial: Vec<(usize, usize)> = (0..n)
        .map(|i| (canon.strict_down[i].len(), canon.strict_up[i].len()))
        .collect();
    let colors = canon.refine(recolor(&initial));
    canon.search(colors);
    canon.best.unwrap_or_else(|| vec![0])
}

/// Removes the points comparable to nothing else; returns the rest and the
/// number removed.
pub fn strip_isolated(p: &Poset) -> (Poset, usize) {
    let isolated = isolated_points(p, p.carrier());
    (p.remove(isolated), isolated.len())
}

/// Points of `within` incomparable to every other point of `within`.
pub fn isolated_points(p: &Poset, within: PointSet) -> PointSet {
    within
        .iter()
        .filter(|&i| p.comparable(i).intersection(within) == PointSet::singleton(i))
        .collect()
}

/// Lower (minimal, non-isolated) and upper (non-minimal) points of a poset of
/// height at most two.
fn two_levels(p: &Poset) -> Result<(PointSet, PointSet)> {
    let minimal = p.minimal(p.carrier());
    let upper = p.carrier().difference(minimal);
    for u in upper.iter() {
        if !p.down_of(u).without(u).is_subset(minimal) {
            return Err(Error::Domain(
                "type codes need a poset of height at most two".into(),
            ));
        }
    }
    Ok((minimal, upper))
}

/// Does the two-level poset contain four lower and four upper points whose
/// comparabilities form a single 8-cycle?
pub fn has_eight_crown(p: &Poset) -> Result<bool> {
    let (lower, upper) = two_levels(p)?;
    let lows: Vec<usize> = lower.iter().collect();
    let ups: Vec<usize> = upper.iter().collect();
    for uq in subsets_of_size(&ups, 4) {
        let us: PointSet = uq.iter().copied().collect();
        let candidates: Vec<usize> = lows
            .iter()
            .copied()
            .filter(|&l| p.up_of(l).intersection(us).len() == 2)
            .collect();
        for lq in subsets_of_size(&candidates, 4) {
            let ls: PointSet = lq.iter().copied().collect();
            if uq.iter().any(|&u| p.down_of(u).intersection(ls).len() != 2) {
                continue;
            }
            let everything = ls.union(us);
            let comps = p.components(everything);
            if comps.len() == 1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| {
            (0..n)
                .filter(|&i| (m >> i) & 1 == 1)
                .map(|i| items[i])
                .collect()
        })
        .collect()
}

/// Code `u-c₁c₂c₃` of a two-level poset without isolated points: `u` upper points,
/// `c_j` lower points covered by exactly `j` upper points. The ambiguous codes
/// 4-440 and 6-442 get a `-0`/`-1` suffix.
pub fn type_code(p: &Poset) -> Result<String> {
    let (lower, upper) = two_levels(p)?;
    if !isolated_points(p, p.carrier()).is_empty() {
        return Err(Error::Domain(
            "type codes need a poset without isolated points".into(),
        ));
    }
    let mut c = [0usize; 4];
    for l in lower.iter() {
        let j = p.up_of(l).without(l).len();
        if j > 3 {
            return Err(Error::Domain(format!(
                "lower point covered by {j} upper points"
            )));
        }
        c[j] += 1;
    }
    let mut code = format!("{}-{}{}{}", upper.len(), c[1], c[2], c[3]);
    match code.as_str() {
        "4-440" => {
            code.push_str(if has_eight_crown(p)? { "-1" } else { "-0" });
        }
        "6-442" => {
            let every_upper_has_triple = upper.iter().all(|x| {
                p.down_of(x)
                    .without(x)
                    .iter()
                    .any(|y| p.up_of(y).without(y).len() == 3)
            });
            code.push_str(if every_upper_has_triple { "-0" } else { "-1" });
        }
        _ => {}
    }
    Ok(code)
}

/// Groups posets by isomorphism class, in order of first appearance.
pub fn group_by_class<'a, I>(posets: I) -> Result<Vec<Vec<usize>>>
where
    I: IntoIterator<Item = &'a Poset>,
{
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, p) in posets.into_iter().enumerate() {
        let cf = canonical_form(p)?;
        let g = *index.entry(cf).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_relabeled_is_isomorphic() {
        let c = Poset::chain(3).unwrap();
        assert!(are_isomorphic(&c, &c.relabel(&[1, 2, 0])).unwrap());
        assert!(!are_isomorphic(&Poset::chain(2).unwrap(), &Poset::antichain(2).unwrap()).unwrap());
    }

    #[test]
    fn capacity_bound() {
        assert!(matches!(
            canonical_form(&Poset::antichain(25).unwrap()),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn strip_cases() {
        let (core, k) = strip_isolated(&Poset::antichain(3).unwrap());
        assert!(core.is_empty());
        assert_eq!(k, 3);
        let (core, k) = strip_isolated(&Poset::chain(2).unwrap());
        assert_eq!((core, k), (Poset::chain(2).unwrap(), 0));
        let a2c2 = Poset::antichain(2)
            .unwrap()
            .product(&Poset::chain(2).unwrap())
            .unwrap();
        let p = a2c2.direct_sum(&Poset::antichain(3).unwrap()).unwrap();
        let (core, k) = strip_isolated(&p);
        assert_eq!(k, 3);
        assert!(are_isomorphic(&core, &a2c2).unwrap());
    }

    #[test]
    fn crown_detection() {
        // lowers 0..4, uppers 4..8, upper 4+i above lowers i and i+1 (mod 4)
        let covers: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| [(i, 4 + i), ((i + 1) % 4, 4 + i)])
            .collect();
        let crown = Poset::from_covers(8, &covers).unwrap();
        assert!(has_eight_crown(&crown).unwrap());
        // two 4-crowns are not an 8-crown
        let covers: Vec<(usize, usize)> = vec![
            (0, 4),
            (1, 4),
            (0, 5),
            (1, 5),
            (2, 6),
            (3, 6),
            (2, 7),
            (3, 7),
        ];
        let split = Poset::from_covers(8, &covers).unwrap();
        assert!(!has_eight_crown(&split).unwrap());
        assert!(!are_isomorphic(&crown, &split).unwrap());
    }

    #[test]
    fn single_upper_code() {
        let covers = [(0, 3), (1, 3), (2, 3)];
        let p = Poset::from_covers(4, &covers).unwrap();
        assert_eq!(type_code(&p).unwrap(), "1-300");
        assert!(type_code(&Poset::chain(3).unwrap()).is_err());
    }
}
