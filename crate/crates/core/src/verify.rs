//! The full self-check: every published value and every oracle comparison,
//! reported as a deterministic pass/fail ledger.

use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean::{dedekind_standard, dedekind_via_theorem2};
use crate::classes::{
    check_class_constancy, representation_system, IsoClassRecord, RepresentationSystem,
};
use crate::dedekind::{
    bmm5_gamma, bmm5_iso, bmm5_nu, bmm6_iso, bmm6_lemma2_reference, bmm6_mu, build_t0_t1,
    defining_sigma_evaluations, gamma_cardinality_invariance, inner_type_census, lemma1_check,
    sigma_fast, sigma_reference_all, Coefficients, GammaCell, QSplit, SigmaPrecomp, SigmaReference,
};
use crate::engine::{
    chain_product_count, count_downsets, count_via_decomposition, enumerate_downsets, phi_forward,
    phi_inverse, Count,
};
use crate::error::Result;
use crate::known::{self, ClassRow};
use crate::pointset::PointSet;
use crate::poset::Poset;

/// Reference values the checks compare against.
#[derive(Debug, Clone)]
pub struct Expectations {
    pub dedekind: Vec<Count>,
    pub ladder: Vec<(usize, Count, Count, Count)>,
    pub standard_summands: Vec<(usize, u64)>,
    pub bmm5: Count,
    pub bmm6: Count,
    pub nu: Vec<u64>,
    pub gamma: Vec<GammaCell>,
    pub gamma_evaluations: u64,
    pub mu: Vec<Vec<u64>>,
    pub classes: Vec<ClassRow>,
    pub classes_r0: usize,
    pub classes_r: usize,
    pub iso5_evaluations: u64,
    pub iso_evaluations: u64,
    pub defining_sigma_evaluations: Count,
    pub c2_times_bmm5: Count,
    pub with_upper_points: u64,
    pub positive_with_upper_points: u64,
}

impl Default for Expectations {
    fn default() -> Expectations {
        Expectations {
            dedekind: known::DEDEKIND[..=6].to_vec(),
            ladder: known::LADDER.to_vec(),
            standard_summands: known::STANDARD_SUMMANDS.to_vec(),
            bmm5: known::LADDER[2].1,
            bmm6: known::LADDER[3].1,
            nu: known::NU.to_vec(),
            gamma: known::GAMMA
                .iter()
                .map(|&(j, c, a, count)| GammaCell { j, c, a, count })
                .collect(),
            gamma_evaluations: known::GAMMA_EVALUATIONS,
            mu: known::mu_grid(),
            classes: known::CLASSES.to_vec(),
            classes_r0: known::CLASSES_R0,
            classes_r: known::CLASSES_R,
            iso5_evaluations: known::CLASSES_R0 as u64,
            iso_evaluations: known::ISO_EVALUATIONS,
            defining_sigma_evaluations: known::DEFINING_SIGMA_EVALUATIONS as Count,
            c2_times_bmm5: known::C2_TIMES_BMM5,
            with_upper_points: known::WITH_UPPER_POINTS,
            positive_with_upper_points: known::POSITIVE_WITH_UPPER_POINTS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Adds per-class constancy over every copy and the γ invariance sweep.
    pub strict: bool,
    pub seed: u64,
    pub random_posets: usize,
    pub lemma1_instances: usize,
    pub sigma_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            strict: false,
            seed: 0x5eed_d0e5,
            random_posets: 1000,
            lemma1_instances: 500,
            sigma_samples: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn ledger(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {:<26} {}", c.name, c.detail).unwrap();
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "{ok}/{} checks passed", self.checks.len()).unwrap();
        out
    }
}

/// Outcome of a single check: `Ok((passed, detail))`, or an error that counts
/// as a failure.
type Outcome = Result<(bool, String)>;

fn eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> (bool, String) {
    if got == want {
        (true, format!("{label} = {got:?}"))
    } else {
        (false, format!("{label} = {got:?}, expected {want:?}"))
    }
}

fn all(parts: Vec<(bool, String)>) -> (bool, String) {
    let passed = parts.iter().all(|p| p.0);
    let detail = parts
        .into_iter()
        .filter(|p| passed || !p.0)
        .map(|p| p.1)
        .collect::<Vec<_>>()
        .join("; ");
    (passed, detail)
}

struct Shared {
    split: QSplit,
    system: RepresentationSystem,
    rows: Vec<IsoClassRecord>,
    reference: SigmaReference,
}

fn shared() -> Result<Shared> {
    let split = QSplit::new()?;
    let system = representation_system(&split.q23)?;
    let (rows, _) = crate::dedekind::table7(&split, &system.r0)?;
    let reference = sigma_reference_all(&split)?;
    Ok(Shared {
        split,
        system,
        rows,
        reference,
    })
}

pub fn run(exp: &Expectations, opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, outcome: Outcome| {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        checks.push(Check {
            name,
            passed,
            detail,
        });
    };

    push("ladder", check_ladder(exp));
    push("standard", check_standard(exp));
    push("nu", check_nu(exp));
    push("gamma", check_gamma(exp));
    push("mu", check_mu(exp));
    push("lemma2", check_lemma2(exp));

    let shared = shared();
    let with = |f: &dyn Fn(&Shared) -> Outcome| match &shared {
        Ok(s) => f(s),
        Err(e) => Err(e.clone()),
    };
    push("iso-classes", with(&|s| check_classes(exp, s)));
    push("iso-evaluations", with(&|s| check_iso_evaluations(exp, s)));
    push("iso-value", with(&|s| check_iso_value(exp, s)));
    push("iso5", with(&|s| check_iso5(exp, s)));
    push(
        "defining-sigma-terms",
        with(&|s| check_defining_terms(exp, s)),
    );
    push("c2-times-bmm5", check_c2_times_bmm5(exp));
    push("upper-point-census", with(&|s| check_census(exp, s)));
    push(
        "random-posets",
        random_poset_suite(opts.seed, opts.random_posets),
    );
    push("lemma1", lemma1_suite(opts.seed ^ 1, opts.lemma1_instances));
    push(
        "sigma-fast",
        with(&|s| sigma_suite(s, opts.seed ^ 2, opts.sigma_samples)),
    );
    if opts.strict {
        push(
            "class-constancy",
            with(&|s| {
                check_class_constancy(&s.split, &s.system, &s.rows, &s.reference)?;
                let copies: usize = s.system.copies.iter().map(Vec::len).sum();
                Ok((true, format!("{copies} copies agree with their class row")))
            }),
        );
        push(
            "gamma-invariance",
            gamma_cardinality_invariance().map(|()| (true, "all 16 N₂ agree with #N₂".into())),
        );
    }
    VerifyReport { checks }
}

fn check_ladder(exp: &Expectations) -> Outcome {
    let inputs: Vec<(usize, Count)> = exp.ladder.iter().map(|&(k, bmm, _, _)| (k, bmm)).collect();
    let n = exp.dedekind.len() - 1;
    let ladder = dedekind_via_theorem2(n, &inputs)?;
    let mut parts = vec![eq("b(0..)", ladder.b.clone(), exp.dedekind.clone())];
    for &(k, _, bm, b) in &exp.ladder {
        if k <= n {
            parts.push(eq(
                &format!("b₋({k}), b({k})"),
                (ladder.bm[k], ladder.b[k]),
                (Some(bm), b),
            ));
        }
    }
    Ok(all(parts))
}

fn check_standard(exp: &Expectations) -> Outcome {
    let mut parts = Vec::new();
    for &(n, summands) in &exp.standard_summands {
        let r = dedekind_standard(n)?;
        parts.push(eq(
            &format!("standard({n})"),
            (r.value, r.summands),
            (exp.dedekind[n], summands),
        ));
    }
    Ok(all(parts))
}

fn check_nu(exp: &Expectations) -> Outcome {
    let r = bmm5_nu()?;
    let Coefficients::Nu(nu) = &r.coefficients else {
        return Ok((false, "no ν table".into()));
    };
    Ok(all(vec![
        eq("ν", nu.clone(), exp.nu.clone()),
        eq("Σν", nu.iter().sum::<u64>(), 1024),
        eq("total", r.value, exp.bmm5),
    ]))
}

fn check_gamma(exp: &Expectations) -> Outcome {
    let r = bmm5_gamma()?;
    let Coefficients::Gamma(cells) = &r.coefficients else {
        return Ok((false, "no γ table".into()));
    };
    let mut row_sums = [0u64; 5];
    for c in cells {
        row_sums[c.j] += c.count;
    }
    Ok(all(vec![
        eq("γ cells match", cells == &exp.gamma, true),
        eq("row sums", row_sums, [16; 5]),
        eq("evaluations", r.evaluations, exp.gamma_evaluations),
        eq("total", r.value, exp.bmm5),
    ]))
}

fn check_mu(exp: &Expectations) -> Outcome {
    let r = bmm6_mu()?;
    let Coefficients::Mu(grid) = &r.coefficients else {
        return Ok((false, "no μ table".into()));
    };
    let symmetric = (0..grid.len()).all(|i| (0..grid.len()).all(|j| grid[i][j] == grid[j][i]));
    Ok(all(vec![
        eq("μ grid matches", grid == &exp.mu, true),
        eq("Σμ", grid.iter().flatten().sum::<u64>(), 1 << 20),
        eq("symmetric", symmetric, true),
        eq("total", r.value, exp.bmm6),
    ]))
}

fn check_lemma2(exp: &Expectations) -> Outcome {
    let split = QSplit::new()?;
    let r = bmm6_lemma2_reference(&split)?;
    let (passed, detail) = eq("total", r.value, exp.bmm6);
    Ok((passed, format!("{detail} over {} pairs", r.evaluations)))
}

fn check_classes(exp: &Expectations, s: &Shared) -> Outcome {
    let mut parts = vec![
        eq("|R0|", s.rows.len(), exp.classes_r0),
        eq("|R|", s.system.total_classes, exp.classes_r),
    ];
    let mut mismatched = Vec::new();
    for want in &exp.classes {
        let got = s.rows.iter().find(|r| r.code == want.code);
        let same = got.is_some_and(|r| {
            (r.iota, r.delta, r.t, r.sigma, r.down_count, r.inner_sum)
                == (
                    want.iota,
                    want.delta,
                    Some(want.t),
                    Some(want.sigma),
                    Some(want.down_count),
                    Some(want.inner_sum),
                )
        });
        if !same {
            mismatched.push(want.code);
        }
    }
    parts.push(eq("mismatched rows", mismatched, vec![]));
    Ok(all(parts))
}

fn check_iso_evaluations(exp: &Expectations, s: &Shared) -> Outcome {
    let (_, evaluations) = crate::dedekind::table7(&s.split, &s.system.r0)?;
    Ok(eq(
        "σ evaluations with upper points",
        evaluations,
        exp.iso_evaluations,
    ))
}

fn check_iso_value(exp: &Expectations, s: &Shared) -> Outcome {
    let r = bmm6_iso(&s.split, &s.system.r0)?;
    Ok(eq("total", r.value, exp.bmm6))
}

fn check_iso5(exp: &Expectations, s: &Shared) -> Outcome {
    let r = bmm5_iso(&s.system.r0);
    Ok(all(vec![
        eq("evaluations", r.evaluations, exp.iso5_evaluations),
        eq("total", r.value, exp.bmm5),
    ]))
}

fn check_defining_terms(exp: &Expectations, s: &Shared) -> Outcome {
    Ok(eq(
        "Σ 3^δ·#↓R",
        defining_sigma_evaluations(&s.rows),
        exp.defining_sigma_evaluations,
    ))
}

fn check_c2_times_bmm5(exp: &Expectations) -> Outcome {
    let q = crate::boolean::boolean(5)?.sub_poset(crate::boolean::Trim::Both)?;
    Ok(eq(
        "d(C2 × B⁻⁻(5))",
        chain_product_count(2, &q)?,
        exp.c2_times_bmm5,
    ))
}

fn check_census(exp: &Expectations, s: &Shared) -> Outcome {
    let census = inner_type_census(&s.split)?;
    let (passed, detail) = all(vec![
        eq(
            "with upper points",
            census.with_upper,
            exp.with_upper_points,
        ),
        eq(
            "of those with e > 0",
            census.positive,
            exp.positive_with_upper_points,
        ),
    ]);
    Ok((
        passed,
        format!("{detail} ({} with e > 0 overall)", census.positive_all),
    ))
}

fn random_subset<R: Rng>(rng: &mut R, within: PointSet) -> PointSet {
    PointSet(within.bits() & rng.gen::<u128>())
}

/// Random posets of up to 14 points: decomposition over a random pivot set,
/// the pivot recurrence and explicit enumeration must agree, and φ must
/// round-trip on a few members.
pub fn random_poset_suite(seed: u64, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let n = rng.gen_range(0..=14);
        let density = rng.gen::<f64>();
        let p = Poset::random(&mut rng, n, density);
        let m = random_subset(&mut rng, p.carrier());
        let direct = count_downsets(&p);
        let via = count_via_decomposition(&p, m)?;
        let family = enumerate_downsets(&p)?;
        if direct != via || direct != family.len() as Count {
            return Ok((
                false,
                format!(
                    "poset #{k} (n={n}): count {direct}, decomposition {via}, enumeration {}",
                    family.len()
                ),
            ));
        }
        for _ in 0..3 {
            let d = family.members()[rng.gen_range(0..family.len())];
            let trace = d.intersection(m);
            let forward = phi_forward(&p, m, trace, d)?;
            if phi_inverse(&p, m, trace, forward)? != d {
                return Ok((false, format!("poset #{k}: φ round trip failed on {d:?}")));
            }
        }
    }
    Ok((true, format!("{count} random posets agree")))
}

/// `C2 × Q − M0↕N` is the copy of `N` in the upper layer, for random `Q`, `N`.
pub fn lemma1_suite(seed: u64, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let n = rng.gen_range(1..=12);
        let density = rng.gen::<f64>();
        let q = Poset::random(&mut rng, n, density);
        let down = q.down_closure(random_subset(&mut rng, q.carrier()));
        if !lemma1_check(&q, down)? {
            return Ok((false, format!("instance #{k} (n={n}) fails")));
        }
    }
    Ok((true, format!("{count} random instances hold")))
}

/// The closed σ formula against the defining sums on random copies of random
/// classes with random `A ⊆ Δ(R)`.
fn sigma_suite(s: &Shared, seed: u64, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables = build_t0_t1(&s.split);
    for k in 0..count {
        let class = rng.gen_range(0..s.system.copies.len());
        let copies = &s.system.copies[class];
        let r = copies[rng.gen_range(0..copies.len())];
        let a = random_subset(&mut rng, s.split.lower23.difference(r));
        let pre = SigmaPrecomp::new(&s.split, r)?;
        let fast = sigma_fast(&s.split, &tables, &pre, a)?;
        let slow = s.reference.sigma_of(r.union(a));
        if Some(fast) != slow {
            return Ok((
                false,
                format!(
                    "sample #{k} ({}): fast {fast}, defining {slow:?}",
                    s.system.r0[class].code
                ),
            ));
        }
    }
    Ok((true, format!("{count} random (R, A) agree")))
}
