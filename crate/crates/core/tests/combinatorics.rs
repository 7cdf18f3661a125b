use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;

use horn_core::combinatorics::{
    enumerate_subsets, lambda_of_subset, slope, subset_of_lambda, CardSubset, PositionTuple, Weight,
};

fn subset_in(n: usize, r: usize) -> impl Strategy<Value = CardSubset> {
    subsequence((1..=n).collect::<Vec<_>>(), r).prop_map(move |el| CardSubset::new(n, el).unwrap())
}

fn tuple_in(r: usize, n: usize, s: usize) -> impl Strategy<Value = PositionTuple> {
    proptest::collection::vec(subset_in(n, r), s).prop_map(|parts| PositionTuple::new(parts).unwrap())
}

/// `(T, U, V)` with `T ∈ Subsets(r,n,s)`, `U ∈ Subsets(d,r,s)`, `V ∈ Subsets(e,d,s)`.
fn nested_triple() -> impl Strategy<Value = (PositionTuple, PositionTuple, PositionTuple)> {
    (1..=8usize, 1..=3usize)
        .prop_flat_map(|(n, s)| (Just(n), Just(s), 0..=n))
        .prop_flat_map(|(n, s, r)| (Just(n), Just(s), Just(r), 0..=r))
        .prop_flat_map(|(n, s, r, d)| (tuple_in(r, n, s), tuple_in(d, r, s), (0..=d).prop_flat_map(move |e| tuple_in(e, d, s))))
}

fn antidominant(r: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-20i64..=20, r).prop_map(|mut v| {
        v.sort();
        Weight::from_i64s(&v)
    })
}

#[test]
fn quotient_dimension_identity_exhaustive() {
    for n in 0..=8 {
        for r in 0..=n {
            for i in enumerate_subsets(r, n).unwrap() {
                for d in 0..=r {
                    for j in enumerate_subsets(d, r).unwrap() {
                        let q = i.quotient(&j).unwrap();
                        let c = i.compose(&j).unwrap();
                        assert_eq!(q.dim() + c.dim(), i.dim() + j.dim(), "I={i}, J={j}");
                        assert_eq!((q.len(), q.ground()), (r - d, n - d));
                        assert_eq!(i.exponent(&j).unwrap(), i.quotient(&j.complement()).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn exponent_dimension_identity_exhaustive() {
    for n in 0..=6 {
        for r in 0..=n {
            for i in enumerate_subsets(r, n).unwrap() {
                for d in 0..=r {
                    for j in enumerate_subsets(d, r).unwrap() {
                        let ij = i.exponent(&j).unwrap();
                        for e in 0..=d {
                            for k in enumerate_subsets(e, d).unwrap() {
                                let jk = j.compose(&k).unwrap();
                                let lhs = ij.compose(&k).unwrap().dim() as i64 - k.dim() as i64;
                                let rhs = i.compose(&jk).unwrap().dim() as i64 - jk.dim() as i64;
                                assert_eq!(lhs, rhs, "I={i}, J={j}, K={k}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn worked_subset_values() {
    let s = |n, v: &[usize]| CardSubset::new(n, v.to_vec()).unwrap();
    assert_eq!(s(6, &[2, 4, 6]).dim(), 6);
    assert_eq!(s(4, &[2, 4]).dim(), 3);
    assert_eq!(s(6, &[2, 4, 6]).compose(&s(3, &[1, 3])).unwrap(), s(6, &[2, 6]));
    assert_eq!(s(6, &[2, 4, 6]).quotient(&s(3, &[2])).unwrap(), s(5, &[2, 5]));
    assert_eq!(s(6, &[1, 3, 5, 6]).exponent(&s(4, &[2, 4])).unwrap(), s(4, &[2, 4]));
    assert_eq!(lambda_of_subset(&s(6, &[2, 4, 6])), Weight::from_i64s(&[-1, -2, -3]));
    assert_eq!(subset_of_lambda(&Weight::from_i64s(&[0, -2]), 4).unwrap(), s(4, &[1, 4]));
    assert_eq!(s(4, &[2, 4]).shuffle_permutation(), vec![2, 4, 1, 3]);
}

#[test]
fn weights_of_worked_tuples() {
    let t = PositionTuple::from_lists(2, &[vec![1], vec![2], vec![2]]).unwrap();
    assert_eq!(t.weights(), vec![Weight::from_i64s(&[1]), Weight::from_i64s(&[0]), Weight::from_i64s(&[-1])]);
    let t = PositionTuple::from_lists(4, &[vec![1, 4], vec![2, 3]]).unwrap();
    assert_eq!(t.weights(), vec![Weight::from_i64s(&[2, 0]), Weight::from_i64s(&[-1, -1])]);
    // slope against the negated weights equals edim(IJ) - edim(J)
    let j = PositionTuple::from_lists(2, &[vec![1], vec![2]]).unwrap();
    let theta: Vec<Weight> = t.weights().iter().map(Weight::neg).collect();
    let lhs = slope(&j, &theta).unwrap();
    let rhs = t.compose(&j).unwrap().edim() - j.edim();
    assert_eq!(lhs, num_rational::BigRational::from_integer(rhs.into()));
    assert_eq!(rhs, -1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tuple_edim_identities((t, u, v) in nested_triple()) {
        let tu = t.compose(&u).unwrap();
        let quotient = t.quotient(&u).unwrap();
        prop_assert_eq!(quotient.edim(), t.edim() + u.edim() - tu.edim());
        let exp = t.exponent(&u).unwrap();
        prop_assert_eq!(exp.edim(), tu.edim() - u.edim());
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(
            exp.compose(&v).unwrap().edim() - v.edim(),
            t.compose(&uv).unwrap().edim() - uv.edim()
        );
    }

    #[test]
    fn weights_dictionary_matches_edim(t in (1..=7usize, 1..=4usize)
        .prop_flat_map(|(n, s)| (Just(n), Just(s), 0..=n))
        .prop_flat_map(|(n, s, r)| tuple_in(r, n, s)))
    {
        let total: BigInt = t.weights().iter().map(Weight::total).sum();
        prop_assert_eq!(BigInt::from(t.edim()), -total);
    }

    #[test]
    fn lambda_roundtrip(i in (0..=9usize).prop_flat_map(|n| (Just(n), 0..=n)).prop_flat_map(|(n, r)| subset_in(n, r))) {
        let lambda = lambda_of_subset(&i);
        prop_assert!(lambda.is_dominant());
        prop_assert_eq!(subset_of_lambda(&lambda, i.ground()).unwrap(), i);
    }

    #[test]
    fn slope_is_permutation_invariant(
        (j, theta, perm) in (1..=5usize, 1..=4usize)
            .prop_flat_map(|(r, s)| (Just(r), Just(s), 1..=r))
            .prop_flat_map(|(r, s, d)| (
                tuple_in(d, r, s),
                proptest::collection::vec(antidominant(r), s),
                Just((0..s).collect::<Vec<_>>()).prop_shuffle(),
            ))
    ) {
        let permuted_theta: Vec<Weight> = perm.iter().map(|&k| theta[k].clone()).collect();
        prop_assert_eq!(slope(&j, &theta).unwrap(), slope(&j.permuted(&perm), &permuted_theta).unwrap());
    }
}
