//! Engine results against exhaustive brute force over all subsets.

use downsets::boolean::{boolean, theorem2_residual_shape, ResidualShape, Trim};
use downsets::engine::{
    chain_product_count, containment_counts, count_downsets_with, count_via_decomposition,
    decompose, decompose_sets, enumerate_downsets, phi_forward, phi_inverse, CountOptions,
};
use downsets::iso::{are_isomorphic, canonical_form};
use downsets::{count_downsets, PointSet, Poset};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All down-sets by testing every subset against the raw order relation.
fn brute_downsets(p: &Poset) -> Vec<PointSet> {
    let n = p.len();
    (0u128..1 << n)
        .map(PointSet)
        .filter(|&s| {
            s.iter()
                .all(|i| (0..n).all(|j| !p.leq(j, i) || s.contains(j)))
        })
        .collect()
}

fn brute_count_within(p: &Poset, keep: PointSet) -> u128 {
    brute_downsets(&p.induced(keep)).len() as u128
}

fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (0..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<bool>(), pairs),
            any::<u64>(),
        )
            .prop_map(|(n, edges, seed)| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                let mut covers = Vec::new();
                let mut k = 0;
                for j in 0..n {
                    for i in 0..j {
                        if edges[k] {
                            covers.push((i, j));
                        }
                        k += 1;
                    }
                }
                Poset::from_covers(n, &covers).unwrap().relabel(&perm)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn counting_matches_brute_force(p in poset_strategy(12), mask in any::<u128>()) {
        let brute = brute_downsets(&p);
        let m = PointSet(mask & p.carrier().bits());
        prop_assert_eq!(count_downsets(&p), brute.len() as u128);
        prop_assert_eq!(count_via_decomposition(&p, m).unwrap(), brute.len() as u128);
        let family = enumerate_downsets(&p).unwrap();
        prop_assert_eq!(family.members(), &brute[..]);
        prop_assert_eq!(count_downsets_with(&p, CountOptions { memo: false }).unwrap(), brute.len() as u128);
        prop_assert_eq!(count_downsets(&p.dual()), brute.len() as u128);
    }

    #[test]
    fn decomposition_partitions_the_downsets(p in poset_strategy(10), mask in any::<u128>()) {
        let m = PointSet(mask & p.carrier().bits());
        let terms = decompose_sets(&p, m).unwrap();
        let brute = brute_downsets(&p);
        for (n, residual) in &terms {
            let class: Vec<PointSet> = brute.iter().copied().filter(|d| d.intersection(m) == *n).collect();
            prop_assert_eq!(class.len() as u128, brute_count_within(&p, *residual));
            for &d in &class {
                let image = phi_forward(&p, m, *n, d).unwrap();
                prop_assert!(image.is_subset(*residual));
                prop_assert!(image.iter().all(|x| p.down_of(x).intersection(*residual).is_subset(image)));
                prop_assert_eq!(phi_inverse(&p, m, *n, image).unwrap(), d);
            }
        }
        let covered: usize = terms.iter().map(|(n, _)| brute.iter().filter(|d| d.intersection(m) == *n).count()).sum();
        prop_assert_eq!(covered, brute.len());
    }

    #[test]
    fn relabelling_preserves_count_and_form(p in poset_strategy(10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rng);
        let q = p.relabel(&perm);
        prop_assert_eq!(count_downsets(&q), count_downsets(&p));
        prop_assert_eq!(canonical_form(&q).unwrap(), canonical_form(&p).unwrap());
    }
}

#[test]
fn canonical_form_is_invariant_under_many_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = boolean(4).unwrap().sub_poset(Trim::Both).unwrap();
    let form = canonical_form(&p).unwrap();
    for _ in 0..100 {
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rng);
        assert_eq!(canonical_form(&p.relabel(&perm)).unwrap(), form);
    }
    let chain = Poset::chain(4).unwrap();
    let antichain = Poset::antichain(4).unwrap();
    assert!(!are_isomorphic(&chain, &antichain).unwrap());
}

#[test]
fn b3_over_atoms_has_known_residual_counts() {
    let ctx = boolean(3).unwrap();
    let b = ctx.lattice();
    let m = ctx.level(1);
    let mut counts: Vec<u128> = decompose(b, m)
        .unwrap()
        .map(|t| {
            let oracle = brute_downsets(&t.residual).len() as u128;
            assert_eq!(t.residual_count(), oracle);
            oracle
        })
        .collect();
    counts.sort_unstable();
    assert_eq!(counts, vec![1, 1, 1, 2, 2, 2, 2, 9]);
    assert_eq!(counts.iter().sum::<u128>(), 20);
}

#[test]
fn theorem2_shapes_on_b4() {
    let ctx = boolean(4).unwrap();
    for n in ctx.level(1).subsets() {
        let shape = theorem2_residual_shape(&ctx, n).unwrap();
        let expected = match n.len() {
            0 => ResidualShape::Bottom,
            1 => ResidualShape::Empty,
            k => ResidualShape::LowerTrimmed(k),
        };
        assert_eq!(shape, expected);
    }
}

#[test]
fn containment_on_small_lattice() {
    let b2 = boolean(2).unwrap();
    let family = enumerate_downsets(b2.lattice()).unwrap();
    let table = containment_counts(&family);
    let members = family.members();
    for (i, c) in table.iter().enumerate() {
        let below = members.iter().filter(|e| e.is_subset(members[i])).count() as u64;
        let above = members.iter().filter(|e| members[i].is_subset(**e)).count() as u64;
        assert_eq!((c.below, c.above), (below, above));
    }
    assert_eq!(table.iter().map(|c| c.below).sum::<u64>(), 20);
}

#[test]
fn chain_products() {
    let a2 = Poset::antichain(2).unwrap();
    assert_eq!(chain_product_count(2, &a2).unwrap(), 9);
    let q = Poset::chain(2)
        .unwrap()
        .direct_sum(&Poset::antichain(1).unwrap())
        .unwrap();
    for n in 0..4 {
        let explicit = Poset::chain(n).unwrap().product(&q).unwrap();
        assert_eq!(
            chain_product_count(n, &q).unwrap(),
            brute_downsets(&explicit).len() as u128
        );
    }
}

#[test]
fn random_sparse_and_dense_posets_up_to_fourteen_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for density in [0.05, 0.2, 0.5, 0.9] {
        for _ in 0..5 {
            let p = Poset::random(&mut rng, 14, density);
            assert_eq!(count_downsets(&p), brute_downsets(&p).len() as u128);
        }
    }
}
