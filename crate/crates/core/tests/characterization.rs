use std::collections::BTreeSet;

use flagbound::distvec::{
    component_ranges, enumerate_distance_vectors, enumerate_distance_vectors_with,
    extremal_vector_with_component, is_distance_vector, max_flag_distance, project_type,
    DistanceVector, Extremum, TypeVector,
};
use flagbound::Execution;
use proptest::prelude::*;

/// The four conditions, checked directly.
fn conditions_hold(v: &[usize], d: usize, t: &TypeVector) -> bool {
    let n = t.ambient();
    let dims = t.dims();
    v.iter().sum::<usize>() == d
        && v.iter().all(|x| x % 2 == 0)
        && v.iter()
            .zip(dims)
            .all(|(&x, &k)| x <= (2 * k).min(2 * (n - k)))
        && (1..v.len()).all(|i| v[i].abs_diff(v[i - 1]) <= 2 * (dims[i] - dims[i - 1]))
}

/// All vectors of even entries in `[0, cap_i]` summing to `d`.
fn generate_and_test(d: usize, t: &TypeVector) -> BTreeSet<Vec<usize>> {
    let caps: Vec<usize> = (0..t.len()).map(|j| t.cap(j)).collect();
    let mut out = BTreeSet::new();
    let mut cur = vec![0usize; caps.len()];
    loop {
        if conditions_hold(&cur, d, t) {
            out.insert(cur.clone());
        }
        let mut j = 0;
        loop {
            if j == cur.len() {
                return out;
            }
            if cur[j] + 2 <= caps[j] {
                cur[j] += 2;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

fn as_set(vs: Vec<DistanceVector>) -> BTreeSet<Vec<usize>> {
    vs.into_iter().map(|v| v.comps().to_vec()).collect()
}

#[test]
fn enumeration_equals_generate_and_test_up_to_eight() {
    for n in 2..=8 {
        for t in TypeVector::full(n).unwrap().subtypes() {
            let all = (0..=max_flag_distance(&t)).step_by(2);
            let mut expected_by_d = Vec::new();
            {
                let caps: Vec<usize> = (0..t.len()).map(|j| t.cap(j)).collect();
                let total: usize = caps.iter().sum();
                assert_eq!(total, max_flag_distance(&t));
            }
            for d in all {
                let got = as_set(enumerate_distance_vectors(d, &t).unwrap());
                let want = generate_and_test(d, &t);
                assert_eq!(got, want, "d = {d}, t = {t}, n = {n}");
                expected_by_d.push(want.len());
            }
            assert!(expected_by_d.iter().all(|&c| c > 0), "every even d is attained for {t}");
        }
    }
}

#[test]
fn worked_sets() {
    let full7 = TypeVector::full(7).unwrap();
    let got = as_set(enumerate_distance_vectors(20, &full7).unwrap());
    let want: BTreeSet<Vec<usize>> = [
        vec![2, 4, 4, 4, 4, 2],
        vec![2, 2, 4, 6, 4, 2],
        vec![2, 4, 6, 4, 2, 2],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);

    let t = TypeVector::new(vec![1, 3, 5, 6], 7).unwrap();
    let got = as_set(enumerate_distance_vectors(12, &t).unwrap());
    let want: BTreeSet<Vec<usize>> = [vec![2, 4, 4, 2], vec![2, 6, 2, 2]].into_iter().collect();
    assert_eq!(got, want);

    let full6 = TypeVector::full(6).unwrap();
    let got = as_set(enumerate_distance_vectors(16, &full6).unwrap());
    assert_eq!(got, [vec![2, 4, 4, 4, 2]].into_iter().collect());
}

#[test]
fn sequential_and_parallel_agree() {
    let t = TypeVector::full(9).unwrap();
    for d in [10, 24, 30] {
        let a = enumerate_distance_vectors_with(d, &t, Execution::Sequential).unwrap();
        let b = enumerate_distance_vectors_with(d, &t, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn projection_is_surjective() {
    for n in 2..=7 {
        let full = TypeVector::full(n).unwrap();
        for t in full.subtypes() {
            for d in (0..=max_flag_distance(&full)).step_by(2) {
                for v in enumerate_distance_vectors(d, &full).unwrap() {
                    let p = project_type(&v, &t).unwrap();
                    assert!(is_distance_vector(&to_i64(p.comps()), &t).unwrap());
                }
            }
            let mut image = BTreeSet::new();
            for d in (0..=max_flag_distance(&full)).step_by(2) {
                for v in enumerate_distance_vectors(d, &full).unwrap() {
                    image.insert(project_type(&v, &t).unwrap().comps().to_vec());
                }
            }
            let mut target = BTreeSet::new();
            for d in (0..=max_flag_distance(&t)).step_by(2) {
                target.extend(as_set(enumerate_distance_vectors(d, &t).unwrap()));
            }
            assert_eq!(image, target, "t = {t}");
        }
    }
}

fn to_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

#[test]
fn component_ranges_match_enumeration_extremes() {
    for n in 2..=7 {
        for t in TypeVector::full(n).unwrap().subtypes() {
            for d in (0..=max_flag_distance(&t)).step_by(2) {
                let vs = enumerate_distance_vectors(d, &t).unwrap();
                let ranges = component_ranges(d, &t).unwrap();
                for (j, r) in ranges.iter().enumerate() {
                    let lo = vs.iter().map(|v| v.comps()[j]).min().unwrap();
                    let hi = vs.iter().map(|v| v.comps()[j]).max().unwrap();
                    assert_eq!((r.lo, r.hi), (lo, hi));
                    // A component value is feasible exactly when d lies between
                    // the two extremal distances for it.
                    for c in (0..=t.cap(j)).step_by(2) {
                        let (_, dmin) = extremal_vector_with_component(j + 1, c, &t, Extremum::Min).unwrap();
                        let (_, dmax) = extremal_vector_with_component(j + 1, c, &t, Extremum::Max).unwrap();
                        let feasible = vs.iter().any(|v| v.comps()[j] == c);
                        assert_eq!(feasible, dmin <= d && d <= dmax, "t={t} d={d} i={} v={c}", j + 1);
                    }
                }
            }
        }
    }
}

fn arb_type() -> impl Strategy<Value = TypeVector> {
    (2usize..=12).prop_flat_map(|n| {
        proptest::collection::btree_set(1..n, 1..n).prop_map(move |s| {
            TypeVector::new(s.into_iter().collect(), n).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn extremal_vectors_are_attainable(t in arb_type(), pos in 0usize..64, val in 0usize..64) {
        let i = pos % t.len() + 1;
        let cap = t.cap(i - 1);
        let v = 2 * (val % (cap / 2 + 1));
        for which in [Extremum::Min, Extremum::Max] {
            let (w, s) = extremal_vector_with_component(i, v, &t, which).unwrap();
            prop_assert_eq!(w.comps()[i - 1], v);
            prop_assert_eq!(w.sum(), s);
            prop_assert!(conditions_hold(w.comps(), s, &t));
        }
    }

    #[test]
    fn predicate_rejects_broken_vectors(t in arb_type(), seed in proptest::collection::vec(0i64..14, 1..12)) {
        let comps: Vec<i64> = (0..t.len()).map(|j| seed[j % seed.len()] - 1).collect();
        let direct = comps.iter().all(|&x| x >= 0)
            && conditions_hold(
                &comps.iter().map(|&x| x.max(0) as usize).collect::<Vec<_>>(),
                comps.iter().map(|&x| x.max(0) as usize).sum(),
                &t,
            );
        prop_assert_eq!(is_distance_vector(&comps, &t).unwrap(), direct);
    }

    #[test]
    fn enumerated_vectors_sum_to_d(t in arb_type(), k in 0usize..200) {
        let max = max_flag_distance(&t);
        let d = 2 * (k % (max / 2 + 1));
        if t.len() <= 7 {
            for v in enumerate_distance_vectors(d, &t).unwrap() {
                prop_assert_eq!(v.sum(), d);
                prop_assert!(conditions_hold(v.comps(), d, &t));
            }
        }
    }
}

#[test]
fn odd_and_excessive_distances_are_rejected() {
    let t = TypeVector::full(4).unwrap();
    assert!(enumerate_distance_vectors(3, &t).is_err());
    assert!(enumerate_distance_vectors(10, &t).is_err());
    assert_eq!(enumerate_distance_vectors(8, &t).unwrap().len(), 1);
}
