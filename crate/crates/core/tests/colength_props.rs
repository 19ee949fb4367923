use hk_core::{
    dp_bruteforce, dp_formula, increment_check, product_coefficients, sandwich_check,
    IntPolynomial, Polynomial, UpperChoice, DEFAULT_MAX_DIM,
};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn naive_product(a: &[u64]) -> IntPolynomial {
    a.iter().fold(IntPolynomial::one(), |acc, &len| {
        acc * Polynomial::new(vec![BigInt::one(); len as usize])
    })
}

fn prime_and_args(max_s: usize) -> impl Strategy<Value = (u64, Vec<u64>)> {
    (prop::sample::select(&PRIMES[..]), 2..=max_s).prop_flat_map(|(p, s)| {
        (Just(p), prop::collection::vec(1..=p, s))
    })
}

proptest! {
    #[test]
    fn product_is_palindromic_and_matches_naive(a in prop::collection::vec(1u64..9, 1..5)) {
        let fast = product_coefficients(&a);
        prop_assert!(fast.is_palindromic());
        prop_assert_eq!(fast.degree(), Some(a.iter().map(|x| x - 1).sum::<u64>() as usize));
        prop_assert_eq!(fast, naive_product(&a));
    }

    #[test]
    fn formula_matches_brute((p, a) in prime_and_args(4)) {
        let f = dp_formula(p, &a).unwrap();
        let b = dp_bruteforce(p, &a, DEFAULT_MAX_DIM).unwrap();
        prop_assert_eq!(f, BigUint::from(b));
    }

    #[test]
    fn permutation_invariant((p, mut a) in prime_and_args(4), seed in any::<u64>()) {
        let before = dp_formula(p, &a).unwrap();
        let n = a.len();
        a.rotate_left(seed as usize % n);
        a.swap(0, (seed as usize / 7) % n);
        prop_assert_eq!(dp_formula(p, &a).unwrap(), before);
    }

    #[test]
    fn monotone_in_each_argument((p, a) in prime_and_args(4), which in any::<prop::sample::Index>()) {
        let i = which.index(a.len());
        prop_assume!(a[i] < p);
        let mut grown = a.clone();
        grown[i] += 1;
        prop_assert!(dp_formula(p, &grown).unwrap() >= dp_formula(p, &a).unwrap());
    }

    #[test]
    fn two_variables_give_min(p in prop::sample::select(&[3u64, 5, 7, 11, 13][..]), x in 0u64..14, y in 0u64..14) {
        prop_assume!(x <= p && y <= p);
        prop_assert_eq!(dp_formula(p, &[x, y]).unwrap(), BigUint::from(x.min(y)));
    }

    #[test]
    fn increment_bound_holds((p, u) in prime_and_args(4)) {
        prop_assume!(p > 2 && u.iter().all(|&x| x < p));
        prop_assert!(increment_check(p, &u).unwrap());
    }
}

#[test]
fn scaling_by_p() {
    for (p, k) in [(3u64, vec![1u64, 1, 1]), (3, vec![2, 1]), (2, vec![1, 3, 2]), (3, vec![1, 1, 2])] {
        let scaled: Vec<u64> = k.iter().map(|x| x * p).collect();
        let lhs = dp_bruteforce(p, &scaled, DEFAULT_MAX_DIM).unwrap();
        let rhs = dp_bruteforce(p, &k, DEFAULT_MAX_DIM).unwrap() * (p as usize).pow(k.len() as u32 - 1);
        assert_eq!(lhs, rhs, "p={p} k={k:?}");
    }
}

#[test]
fn sandwich_holds_on_small_instances() {
    for p in [3u64, 5, 7] {
        for d in [vec![2u64, 2], vec![2, 3], vec![3, 3], vec![2, 5], vec![2, 2, 2], vec![2, 3, 3]] {
            if (p as usize).pow(d.len() as u32) > 400 {
                continue;
            }
            for choice in [UpperChoice::Ceil, UpperChoice::FloorPlusOne] {
                let rep = sandwich_check(p, &d, DEFAULT_MAX_DIM, choice);
                assert!(rep.is_ok(), "p={p} d={d:?}: {rep:?}");
            }
        }
    }
}

#[test]
fn brute_accepts_arguments_above_p() {
    // colength of (y+z)^4 in F_3[y, z]/(y^4, z^4)
    let v = dp_bruteforce(3, &[4, 4, 4], DEFAULT_MAX_DIM).unwrap();
    assert!(dp_formula(3, &[4, 4, 4]).is_err());
    assert!(v > 0 && v <= 16);
}
