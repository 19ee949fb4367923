use hk_core::{
    c_lambda, convergence_table, eulerian_polynomial, eulerian_sec_tan_coefficient, eval_gaussian,
    f_s, factorial, is_prime, lemma33_residual, mu_limit, mu_limit_quadratic, sec_tan_series,
    theorem38_limit, zigzag_coefficient, zigzag_number, ArgChoice, GaussianRational, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Coefficients of (1 + sin z) / cos z by long division on plain vectors.
fn sec_tan_by_long_division(order: usize) -> Vec<Rational> {
    let inv_fact = |n: usize| Rational::new(BigInt::one(), factorial(n));
    let num: Vec<Rational> = (0..=order)
        .map(|n| match n {
            0 => Rational::one(),
            _ if n % 4 == 1 => inv_fact(n),
            _ if n % 4 == 3 => -inv_fact(n),
            _ => Rational::zero(),
        })
        .collect();
    let den: Vec<Rational> = (0..=order)
        .map(|n| match n % 4 {
            0 => inv_fact(n),
            2 => -inv_fact(n),
            _ => Rational::zero(),
        })
        .collect();
    let mut q = vec![Rational::zero(); order + 1];
    for n in 0..=order {
        let mut acc = num[n].clone();
        for k in 0..n {
            acc -= &q[k] * &den[n - k];
        }
        q[n] = acc / &den[0];
    }
    q
}

#[test]
fn zigzag_against_long_division() {
    let oracle = sec_tan_by_long_division(20);
    assert_eq!(oracle[4], r(5, 24));
    assert_eq!(oracle[5], r(2, 15));
    for (n, want) in oracle.iter().enumerate() {
        assert_eq!(&zigzag_coefficient(n), want, "n={n}");
    }
}

#[test]
fn zigzag_against_series_module() {
    let series = sec_tan_series(20).unwrap();
    for n in 0..=20 {
        assert_eq!(series.coeff(n), &zigzag_coefficient(n), "n={n}");
    }
}

#[test]
fn zigzag_numbers_are_integers() {
    let want = [1, 1, 1, 2, 5, 16, 61, 272, 1385];
    for (n, w) in want.into_iter().enumerate() {
        assert_eq!(zigzag_number(n), BigInt::from(w));
        assert_eq!(zigzag_coefficient(n) * Rational::from_integer(factorial(n)), r(w, 1));
    }
}

#[test]
fn eulerian_values_at_i_give_sec_tan() {
    let one_plus_i = GaussianRational::from_integers(1, 1);
    for s in 2..=12usize {
        let at_i = eval_gaussian(&eulerian_polynomial(s - 1), &GaussianRational::i());
        let c = at_i / one_plus_i.pow(s as u32 - 2);
        assert!(c.is_real(), "s={s}: {c}");
        assert_eq!(c.re / Rational::from_integer(factorial(s - 1)), zigzag_coefficient(s - 1));
        assert_eq!(
            eulerian_sec_tan_coefficient(s - 1),
            GaussianRational::from_rational(zigzag_coefficient(s - 1))
        );
    }
}

#[test]
fn eulerian_basic_properties() {
    for n in 0..=12 {
        let a = eulerian_polynomial(n);
        let at_one: BigInt = a.coeffs().iter().sum();
        assert_eq!(at_one, factorial(n));
        if n >= 1 {
            assert!(a.is_palindromic());
        }
    }
}

#[test]
fn generating_function_residual_vanishes() {
    for order in 1..=10 {
        assert!(lemma33_residual(order).unwrap().is_zero(), "order {order}");
    }
}

#[test]
fn c0_for_squares_matches_f_s() {
    for s in 2..=10usize {
        let c0 = c_lambda(0, &vec![2; s]).unwrap();
        let want = Rational::new(f_s(s, s as i64), BigInt::from(2).pow(s as u32 - 1));
        assert_eq!(c0, want, "s={s}");
        // C_lambda = f_s(s - 4 lambda) / 2^{s-1} in general
        let c1 = c_lambda(1, &vec![2; s]).unwrap();
        let want1 = Rational::new(f_s(s, s as i64 - 4), BigInt::from(2).pow(s as u32 - 1));
        assert_eq!(c1, want1, "s={s}");
    }
}

#[test]
fn three_routes_to_the_quadratic_limit() {
    for s in 2..=12 {
        let general = mu_limit(&vec![2; s]).unwrap().mu_limit;
        assert_eq!(general, mu_limit_quadratic(s).unwrap());
        assert_eq!(general, theorem38_limit(s).unwrap());
    }
}

fn exact_mu_quartic(p: i64) -> Rational {
    let sign = if p % 4 == 1 { 1 } else { -1 };
    r(8, 3) * r(2 * p * p + sign * 2 * p + 3, 2 * p * p + sign * 2 * p + 1)
}

#[test]
fn convergence_quartic_is_order_one_over_p() {
    let primes: Vec<u64> = (5..200).filter(|&n| is_prime(n)).collect();
    let rows = convergence_table(&[4, 4, 4, 4], &primes, ArgChoice::FloorParityUp).unwrap();
    let k = rows.iter().map(|row| row.p_times_gap.clone()).max().unwrap();
    // empirical k stays small and bounds the distance to the exact per-p value
    assert!(k < r(40, 1), "k = {k}");
    for row in &rows {
        let p = row.p as i64;
        let dist = (&row.value - exact_mu_quartic(p)).abs();
        assert!(dist * r(p, 1) <= k.clone() * r(2, 1), "p={p}");
    }
    let p13 = rows.iter().find(|row| row.p == 13).unwrap();
    assert_eq!(p13.a, vec![3, 3, 3, 3]);
}

#[test]
fn convergence_quintic_squares_at_seven() {
    let rows = convergence_table(&[2; 5], &[7], ArgChoice::FloorParityUp).unwrap();
    let exact = r(29 * 49 + 15, 24 * 49 + 12);
    let dist = (&rows[0].value - exact).abs();
    assert!(dist < r(1, 1), "{dist}");
}

#[test]
fn both_argument_choices_converge() {
    let primes: Vec<u64> = (11..120).filter(|&n| is_prime(n)).collect();
    for choice in [ArgChoice::FloorParityUp, ArgChoice::CeilParityDown] {
        let rows = convergence_table(&[2, 3, 4], &primes, choice).unwrap();
        let k = rows.iter().map(|row| row.p_times_gap.clone()).max().unwrap();
        assert!(k < r(60, 1), "{choice:?}: k = {k}");
    }
}

proptest! {
    #[test]
    fn c_lambda_symmetric_and_vanishing(d in prop::collection::vec(2u64..10, 2..7), lambda in -7i64..8) {
        let s = d.len() as i64;
        let c = c_lambda(lambda, &d).unwrap();
        prop_assert_eq!(&c, &c_lambda(-lambda, &d).unwrap());
        if 4 * lambda.abs() >= s {
            prop_assert!(c.is_zero());
        }
    }

    #[test]
    fn limit_is_permutation_invariant(mut d in prop::collection::vec(1u64..8, 2..6), shift in 0usize..6) {
        let before = mu_limit(&d).unwrap();
        let n = d.len();
        d.rotate_left(shift % n);
        d.reverse();
        let after = mu_limit(&d).unwrap();
        prop_assert_eq!(&before.mu_limit, &after.mu_limit);
        prop_assert_eq!(before.c_lambda_table, after.c_lambda_table);
        prop_assert!(after.mu_limit.is_positive());
    }

    #[test]
    fn limit_table_is_symmetric(d in prop::collection::vec(2u64..8, 2..9)) {
        let res = mu_limit(&d).unwrap();
        for (lambda, c) in &res.c_lambda_table {
            prop_assert!(4 * lambda.abs() < d.len() as i64);
            prop_assert_eq!(Some(c), res.c_lambda_table.get(&-lambda));
        }
    }
}
