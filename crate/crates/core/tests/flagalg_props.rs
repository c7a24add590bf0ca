use std::collections::BTreeSet;

use flagbound::distvec::{enumerate_distance_vectors, max_flag_distance, DistanceVector, TypeVector};
use flagbound::dvalues::{max_distance_with_zeros, patterns_of_size, ZeroPattern};
use flagbound::flagalg::{
    brute_force_distance_vector_set, brute_force_distance_vector_sets, code_census,
    code_census_with, distance_vector_of_pair, enumerate_flag_variety, is_disjoint, is_m_disjoint,
    oracle_check, parse_flag_code, projected_distances, realize_distance_vector, subspace_distance,
    Flag, FlagCode, OracleMode, PrimeFieldMatrix, Subspace,
};
use flagbound::Execution;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn flag(p: u64, ty: &TypeVector, units: &[usize]) -> Flag {
    let n = ty.ambient();
    let mut entries = vec![0i64; units.len() * n];
    for (r, &u) in units.iter().enumerate() {
        entries[r * n + u - 1] = 1;
    }
    let m = PrimeFieldMatrix::from_entries(p, units.len(), n, &entries).unwrap();
    Flag::from_nested_basis(&m, ty).unwrap()
}

fn dv(c: &[usize], t: &TypeVector) -> DistanceVector {
    DistanceVector::new(c.to_vec(), t).unwrap()
}

#[test]
fn four_flag_example() {
    let t = TypeVector::full(4).unwrap();
    let f1 = flag(2, &t, &[1, 2, 4]);
    let f2 = flag(2, &t, &[2, 1, 3]);
    let f3 = flag(2, &t, &[1, 3, 2]);
    let f4 = flag(2, &t, &[2, 3, 1]);
    assert_eq!(distance_vector_of_pair(&f1, &f2).unwrap(), dv(&[2, 0, 2], &t));
    assert_eq!(distance_vector_of_pair(&f1, &f3).unwrap(), dv(&[0, 2, 2], &t));
    assert_eq!(distance_vector_of_pair(&f1, &f1).unwrap(), DistanceVector::zero(&t));

    let code = FlagCode::new(vec![f1, f3, f4]).unwrap();
    let census = code_census(&code);
    assert_eq!(census.min_distance, 4);
    let want: BTreeSet<DistanceVector> = [dv(&[0, 2, 2], &t), dv(&[2, 2, 0], &t)].into_iter().collect();
    assert_eq!(census.vectors_at_min, want);
    assert_eq!(census.pairs.len(), 3);
}

#[test]
fn subspace_distance_examples() {
    let t = TypeVector::full(4).unwrap();
    let a = flag(2, &t, &[1, 2, 4]);
    let b = flag(2, &t, &[1, 3, 2]);
    let c = flag(2, &t, &[2, 1, 3]);
    assert_eq!(subspace_distance(&a.subspaces()[0], &c.subspaces()[0]).unwrap(), 2);
    assert_eq!(subspace_distance(&a.subspaces()[1], &b.subspaces()[1]).unwrap(), 2);
    assert_eq!(subspace_distance(&a.subspaces()[1], &a.subspaces()[1]).unwrap(), 0);
    assert!(subspace_distance(&a.subspaces()[0], &a.subspaces()[1]).is_err());
    let other = Subspace::zero(3, 4).unwrap();
    assert!(subspace_distance(&a.subspaces()[0], &other).is_err());
}

#[test]
fn three_flag_disjointness_example() {
    let t = TypeVector::full(5).unwrap();
    let code = FlagCode::new(vec![
        flag(2, &t, &[1, 2, 3, 4]),
        flag(2, &t, &[1, 3, 2, 4]),
        flag(2, &t, &[1, 3, 5, 4]),
    ])
    .unwrap();
    let z = ZeroPattern::new(vec![2, 3]).unwrap();
    assert!(is_disjoint(&code, &z).unwrap().disjoint);
    let rep = is_m_disjoint(&code, 2).unwrap();
    assert!(!rep.disjoint);
    let (pat, a, b) = rep.failure.unwrap();
    let fa = &code.flags()[a];
    let fb = &code.flags()[b];
    for &i in pat.positions() {
        assert_eq!(fa.subspaces()[i - 1], fb.subspaces()[i - 1]);
    }
    let all = ZeroPattern::new((1..=4).collect()).unwrap();
    assert!(is_disjoint(&code, &all).unwrap().disjoint);
}

#[test]
fn singleton_and_whole_variety_census() {
    let t = TypeVector::full(4).unwrap();
    let flags: Vec<Flag> = enumerate_flag_variety(2, &t).unwrap().collect();
    let single = FlagCode::new(vec![flags[7].clone()]).unwrap();
    let c = code_census(&single);
    assert_eq!(c.min_distance, 0);
    assert!(c.vectors_at_min.is_empty() && c.pairs.is_empty());
    assert_eq!(projected_distances(&single), vec![0, 0, 0]);

    let whole = FlagCode::new(flags).unwrap();
    let a = code_census_with(&whole, Execution::Sequential);
    let b = code_census_with(&whole, Execution::Parallel);
    assert_eq!(a, b);
    assert_eq!(a.min_distance, 2);
}

#[test]
fn oracle_equality_up_to_five() {
    for n in 2..=5 {
        for t in TypeVector::full(n).unwrap().subtypes() {
            let mode = if n <= 4 { OracleMode::Exhaustive } else { OracleMode::Anchored };
            for row in oracle_check(&t, 2, mode, Execution::default()).unwrap() {
                assert!(row.passed(), "t={t} n={n}: {row:?}");
            }
        }
    }
}

#[test]
fn oracle_does_not_depend_on_q() {
    for t in TypeVector::full(4).unwrap().subtypes() {
        let a = brute_force_distance_vector_sets(&t, 2, OracleMode::Anchored, Execution::default()).unwrap();
        let b = brute_force_distance_vector_sets(&t, 3, OracleMode::Anchored, Execution::default()).unwrap();
        assert_eq!(a, b, "t={t}");
    }
}

#[test]
fn sampled_oracle_is_contained_in_theory() {
    let t = TypeVector::full(5).unwrap();
    let mode = OracleMode::Sampled { pairs: 20_000, seed: 11 };
    let a = brute_force_distance_vector_sets(&t, 2, mode, Execution::Sequential).unwrap();
    let b = brute_force_distance_vector_sets(&t, 2, mode, Execution::Parallel).unwrap();
    assert_eq!(a, b, "sampling is deterministic for a seed");
    for (d, set) in &a {
        let theory: BTreeSet<DistanceVector> = enumerate_distance_vectors(*d, &t).unwrap().into_iter().collect();
        assert!(set.is_subset(&theory));
    }
}

#[test]
fn oracle_extremes() {
    let t = TypeVector::new(vec![1, 3], 5).unwrap();
    let top = brute_force_distance_vector_set(max_flag_distance(&t), &t, 2).unwrap();
    assert_eq!(top.len(), 1);
    let zero = brute_force_distance_vector_set(0, &t, 2).unwrap();
    assert_eq!(zero.into_iter().collect::<Vec<_>>(), vec![DistanceVector::zero(&t)]);
}

#[test]
fn realization_round_trip_up_to_six() {
    for p in [2u64, 3] {
        for n in 2..=6 {
            for t in TypeVector::full(n).unwrap().subtypes() {
                for d in (0..=max_flag_distance(&t)).step_by(2) {
                    for v in enumerate_distance_vectors(d, &t).unwrap() {
                        let (f, g) = realize_distance_vector(&v, p).unwrap();
                        assert_eq!(distance_vector_of_pair(&f, &g).unwrap(), v, "p={p} t={t}");
                        assert_eq!(f.modulus() as u64, p);
                    }
                }
            }
        }
    }
}

#[test]
fn realization_is_deterministic() {
    let t = TypeVector::new(vec![1, 3, 5, 6], 7).unwrap();
    let v = dv(&[2, 6, 2, 2], &t);
    assert_eq!(realize_distance_vector(&v, 2).unwrap(), realize_distance_vector(&v, 2).unwrap());
    assert!(realize_distance_vector(&v, 4).is_err());
}

fn random_code(rng: &mut ChaCha8Rng, pool: &[Flag], max: usize) -> FlagCode {
    let size = rng.gen_range(1..=max);
    let picked: Vec<Flag> = pool.choose_multiple(rng, size).cloned().collect();
    FlagCode::new(picked).unwrap()
}

#[test]
fn census_consistency_and_disjointness_soundness() {
    let t = TypeVector::full(4).unwrap();
    let pool: Vec<Flag> = enumerate_flag_variety(2, &t).unwrap().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let patterns: Vec<ZeroPattern> = (1..=3).flat_map(|m| patterns_of_size(3, m)).collect();
    let mut exercised = 0;
    for _ in 0..1000 {
        let code = random_code(&mut rng, &pool, 5);
        let c = code_census(&code);
        let min_sum = c.pairs.iter().map(|p| p.vector.sum()).min().unwrap_or(0);
        assert_eq!(c.min_distance, min_sum);
        if code.len() > 1 {
            let allowed: BTreeSet<DistanceVector> =
                enumerate_distance_vectors(c.min_distance, &t).unwrap().into_iter().collect();
            assert!(c.vectors_at_min.is_subset(&allowed));
        }
        if code.len() > 1 {
            let pd = projected_distances(&code);
            for m in 1..=3 {
                if is_m_disjoint(&code, m).unwrap().disjoint {
                    let floor = flagbound::bounds::min_distance_lower_bound_for_disjoint(&pd, m).unwrap();
                    assert!(c.min_distance >= floor, "m={m}");
                }
            }
        }
        for z in &patterns {
            let (_, dz) = max_distance_with_zeros(&t, z).unwrap();
            if code.len() > 1 && c.min_distance > dz {
                exercised += 1;
                assert!(is_disjoint(&code, z).unwrap().disjoint);
            }
        }
    }
    assert!(exercised > 0);
}

#[test]
fn parse_errors_report_lines() {
    let text = "q=2\nn=3\ntype=1,2\nflag\n1 0 0\n0 1 0\nflag\n1 0 0\n2 0 0\n";
    match parse_flag_code(text) {
        Err(flagbound::Error::Parse { line, .. }) => assert_eq!(line, 7),
        other => panic!("expected a parse error, got {other:?}"),
    }
}
