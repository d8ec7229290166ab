//! Published reference values the computations are checked against.

use crate::engine::Count;

/// `b(n)` for `n = 0..=7`.
pub const DEDEKIND: [Count; 8] = [2, 3, 6, 20, 168, 7581, 7828354, 2414682040998];

/// `(n, b₋₋(n), b₋(n), b(n))` for `n = 3..=6`.
pub const LADDER: [(usize, Count, Count, Count); 4] = [
    (3, 1, 9, 20),
    (4, 64, 114, 168),
    (5, 6212, 6894, 7581),
    (6, 7741776, 7785062, 7828354),
];

pub const NU: [u64; 11] = [388, 290, 195, 70, 40, 30, 0, 10, 0, 0, 1];

/// Non-zero `(j, c, a, γ_j(c, a))`.
#[rustfmt::skip]
pub const GAMMA: [(usize, usize, usize, u64); 24] = [
    (0, 0, 0, 5), (0, 0, 1, 6), (0, 0, 3, 4), (0, 0, 6, 1),
    (1, 0, 0, 5), (1, 0, 1, 6), (1, 0, 3, 4), (1, 0, 6, 1),
    (2, 0, 1, 5), (2, 0, 2, 5), (2, 0, 4, 2), (2, 1, 0, 1), (2, 1, 2, 2), (2, 1, 5, 1),
    (3, 0, 3, 5), (3, 0, 4, 3), (3, 0, 6, 1), (3, 1, 2, 3), (3, 2, 2, 3), (3, 3, 3, 1),
    (4, 0, 6, 5), (4, 1, 5, 6), (4, 3, 3, 4), (4, 6, 0, 1),
];

/// Rows of the `μ(i, j)` grid; omitted trailing cells are zero.
#[rustfmt::skip]
pub const MU_ROWS: [&[u64]; 16] = [
    &[165980, 152265, 86130, 43385, 17700, 7569, 2895, 1350, 420, 160, 90, 0, 20, 0, 0, 1],
    &[152265, 103500, 43080, 16320, 4410, 1560, 420, 180, 0, 15],
    &[86130, 43080, 13260, 3660, 585, 180, 60],
    &[43385, 16320, 3660, 800, 0, 60],
    &[17700, 4410, 585],
    &[7569, 1560, 180, 60, 0, 6],
    &[2895, 420, 60],
    &[1350, 180],
    &[420],
    &[160, 15],
    &[90],
    &[],
    &[20],
    &[],
    &[],
    &[1],
];

pub fn mu_grid() -> Vec<Vec<u64>> {
    MU_ROWS
        .iter()
        .map(|row| {
            let mut full = row.to_vec();
            full.resize(16, 0);
            full
        })
        .collect()
}

/// One published class row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassRow {
    pub code: &'static str,
    pub iota: u64,
    pub delta: usize,
    pub t: u32,
    pub sigma: Count,
    pub down_count: Count,
    pub inner_sum: Count,
}

const fn row(
    code: &'static str,
    iota: u64,
    delta: usize,
    t: u32,
    sigma: Count,
    down_count: Count,
    inner_sum: Count,
) -> ClassRow {
    ClassRow {
        code,
        iota,
        delta,
        t,
        sigma,
        down_count,
        inner_sum,
    }
}

#[rustfmt::skip]
pub const CLASSES: [ClassRow; 34] = [
    row("0-000", 1, 10, 0, 32, 1, 173433),
    row("1-300", 10, 7, 0, 76, 9, 42075),
    row("2-600", 15, 4, 0, 221, 81, 10821),
    row("2-410", 30, 5, 0, 166, 41, 17711),
    row("3-710", 30, 2, 0, 644, 369, 4791),
    row("3-520", 60, 3, 0, 387, 187, 7621),
    row("3-601", 10, 3, 0, 403, 189, 7738),
    row("3-330", 20, 4, 0, 294, 95, 12481),
    row("4-901", 10, 0, 0, 2201, 1701, 2201),
    row("4-630", 60, 1, 0, 1227, 853, 3433),
    row("4-440-0", 60, 2, 0, 728, 434, 5462),
    row("4-440-1", 15, 2, 0, 697, 433, 5413),
    row("4-521", 60, 2, 0, 736, 439, 5519),
    row("4-060", 5, 4, 1, 332, 113, 14297),
    row("5-550", 12, 0, 0, 2496, 1975, 2496),
    row("5-631", 60, 0, 0, 2530, 2006, 2530),
    row("5-360", 60, 1, 0, 1400, 1007, 3938),
    row("5-441", 60, 1, 0, 1423, 1022, 3994),
    row("5-522", 30, 1, 0, 1437, 1035, 4036),
    row("5-251", 30, 2, 1, 842, 524, 6378),
    row("6-361", 60, 0, 0, 2925, 2377, 2925),
    row("6-442-0", 15, 0, 1, 2984, 2431, 2984),
    row("6-442-1", 60, 0, 0, 2967, 2416, 2967),
    row("6-604", 5, 0, 0, 3045, 2489, 3045),
    row("6-090", 10, 1, 0, 1607, 1195, 4545),
    row("6-252", 60, 1, 1, 1666, 1241, 4704),
    row("7-172", 30, 0, 0, 3456, 2881, 3456),
    row("7-253", 60, 0, 1, 3529, 2949, 3529),
    row("7-334", 20, 0, 1, 3584, 3001, 3584),
    row("7-063", 10, 1, 2, 1968, 1519, 5591),
    row("8-064", 15, 0, 1, 4214, 3607, 4214),
    row("8-145", 30, 0, 2, 4310, 3698, 4310),
    row("9-037", 10, 0, 3, 5337, 4693, 5337),
    row("10-0010", 1, 0, 5, 6893, 6212, 6893),
];

pub const CLASSES_R0: usize = 34;
pub const CLASSES_R: usize = 91;
pub const STANDARD_SUMMANDS: [(usize, u64); 2] = [(5, 210), (6, 14196)];
#[rustfmt::skip]
pub const GAMMA_EVALUATIONS: u64 = 80;
pub const ISO_EVALUATIONS: u64 = 245;
pub const DEFINING_SIGMA_EVALUATIONS: u64 = 208099;
pub const C2_TIMES_BMM5: Count = 3933651;
pub const WITH_UPPER_POINTS: u64 = 5188;
pub const POSITIVE_WITH_UPPER_POINTS: u64 = 491;
