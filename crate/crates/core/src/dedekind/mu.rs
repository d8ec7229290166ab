use std::time::Instant;

use rayon::prelude::*;

use super::{Coefficients, MethodReport};
use crate::boolean::{boolean, Trim};
use crate::engine::Count;
use crate::error::Result;

const MIDDLE: usize = 20;
const SIDE: usize = 15;
// The high bits fix a chunk; the low bits are swept in Gray-code order.
const CHUNK_BITS: usize = 6;

/// Sweep state for one `N ⊆ L₃(6)`: how many members of `N` lie above each
/// level-2 point and how many non-members lie below each level-4 point.
struct Sweep<'a> {
    lower_of: &'a [[usize; 3]],
    upper_of: &'a [[usize; 3]],
    above_count: [u8; SIDE],
    outside_below: [u8; SIDE],
    /// `#P₂(N)`: level-2 points with nothing of `N` above.
    free_lower: usize,
    /// `#P₄(N)`: level-4 points with nothing of `L₃ ∖ N` below.
    free_upper: usize,
}

impl Sweep<'_> {
    fn insert(&mut self, m: usize) {
        for &l in &self.lower_of[m] {
            if self.above_count[l] == 0 {
                self.free_lower -= 1;
            }
            self.above_count[l] += 1;
        }
        for &u in &self.upper_of[m] {
            self.outside_below[u] -= 1;
            if self.outside_below[u] == 0 {
                self.free_upper += 1;
            }
        }
    }

    fn delete(&mut self, m: usize) {
        for &l in &self.lower_of[m] {
            self.above_count[l] -= 1;
            if self.above_count[l] == 0 {
                self.free_lower += 1;
            }
        }
        for &u in &self.upper_of[m] {
            if self.outside_below[u] == 0 {
                self.free_upper -= 1;
            }
            self.outside_below[u] += 1;
        }
    }
}

/// Pivot set `L₃(6)`: every residual is an antichain with `i` level-2 and `j`
/// level-4 points, contributing `2^{i+j}`.
pub fn bmm6_mu() -> Result<MethodReport> {
    let start = Instant::now();
    let ctx = boolean(6)?;
    let b = ctx.lattice();
    let lows: Vec<usize> = ctx.level(2).iter().collect();
    let mids: Vec<usize> = ctx.level(3).iter().collect();
    let ups: Vec<usize> = ctx.level(4).iter().collect();
    let pick = |pool: &[usize], f: &dyn Fn(usize) -> bool| -> [usize; 3] {
        let v: Vec<usize> = (0..pool.len()).filter(|&k| f(pool[k])).collect();
        [v[0], v[1], v[2]]
    };
    let lower_of: Vec<[usize; 3]> = mids
        .iter()
        .map(|&m| pick(&lows, &|l| b.leq(l, m)))
        .collect();
    let upper_of: Vec<[usize; 3]> = mids.iter().map(|&m| pick(&ups, &|u| b.leq(m, u))).collect();
    debug_assert_eq!(ctx.sub_poset(Trim::Both)?.len(), SIDE + MIDDLE + SIDE);

    let low_bits = MIDDLE - CHUNK_BITS;
    let grid = (0..1usize << CHUNK_BITS)
        .into_par_iter()
        .map(|prefix| {
            let mut sweep = Sweep {
                lower_of: &lower_of,
                upper_of: &upper_of,
                above_count: [0; SIDE],
                outside_below: [4; SIDE],
                free_lower: SIDE,
                free_upper: 0,
            };
            for k in 0..CHUNK_BITS {
                if (prefix >> k) & 1 == 1 {
                    sweep.insert(low_bits + k);
                }
            }
            let mut local = vec![[0u64; 16]; 16];
            let mut gray = 0usize;
            local[sweep.free_lower][sweep.free_upper] += 1;
            for step in 1usize..1 << low_bits {
                let bit = step.trailing_zeros() as usize;
                gray ^= 1 << bit;
                if (gray >> bit) & 1 == 1 {
                    sweep.insert(bit);
                } else {
                    sweep.delete(bit);
                }
                local[sweep.free_lower][sweep.free_upper] += 1;
            }
            local
        })
        .reduce(
            || vec![[0u64; 16]; 16],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(&b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    let value = grid
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &c)| c as Count * (1 << (i + j)))
        })
        .sum();
    Ok(MethodReport {
        method: "mu".into(),
        value,
        coefficients: Coefficients::Mu(grid.iter().map(|r| r.to_vec()).collect()),
        evaluations: 1 << MIDDLE,
        wall_time: start.elapsed(),
    })
}
