//! Eulerian polynomials `A_n(T) = (1-T)^{n+1} sum_{k>=1} k^n T^{k-1}` and the
//! identities they satisfy.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comb::factorial;
use crate::gaussian::GaussianRational;
use crate::poly::{IntPolynomial, Polynomial, RatPolynomial};
use crate::series::{check_order, TruncatedSeries};
use crate::{Rational, Result};

/// `A_n` from the Eulerian-number triangle
/// `E(n, k) = (k+1) E(n-1, k) + (n-k) E(n-1, k-1)`.
pub fn eulerian_polynomial(n: usize) -> IntPolynomial {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        // row holds E(m-1, 0..m-1); the new row has m entries
        let mut next = vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += &row[k] * (k + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                v += &row[k - 1] * (m - k);
            }
            *slot = v;
        }
        row = next;
    }
    Polynomial::new(row)
}

/// Exact evaluation of an integer polynomial at a Gaussian rational.
pub fn eval_gaussian(poly: &IntPolynomial, point: &GaussianRational) -> GaussianRational {
    poly.eval_with(point, GaussianRational::from_int)
}

/// `A_n(i) / ((1+i)^{n-1} n!)` for `n >= 1`, and `1` for `n = 0`.
///
/// Summed against `z^n` these give the series of `sec z + tan z`.
pub fn eulerian_sec_tan_coefficient(n: usize) -> GaussianRational {
    if n == 0 {
        return GaussianRational::one();
    }
    let value = eval_gaussian(&eulerian_polynomial(n), &GaussianRational::i());
    let denom = GaussianRational::from_integers(1, 1).pow((n - 1) as u32)
        * GaussianRational::from_int(&factorial(n));
    value / denom
}

/// `LHS - RHS` of
/// `(sum_{n>=1} A_n(T)/(1-T)^n z^n/n!) (1 - T e^z) = e^z - 1`,
/// with both sides multiplied by `(1-T)^order` so every `z`-coefficient is a
/// polynomial in `T`. The identity holds iff the result is the zero series.
pub fn lemma33_residual(order: usize) -> Result<TruncatedSeries<RatPolynomial>> {
    check_order(order, 1)?;
    let one_minus_t = RatPolynomial::new(vec![Rational::one(), -Rational::one()]);
    let lift = |c: &BigInt| Rational::from_integer(c.clone());

    let generating = TruncatedSeries::new(
        order,
        (0..=order).map(|n| {
            if n == 0 {
                return RatPolynomial::zero();
            }
            let a_n = eulerian_polynomial(n).map(lift);
            let n_fact = Rational::from_integer(factorial(n));
            (a_n * one_minus_t.pow((order - n) as u32)).scale(&n_fact.recip())
        }),
    );

    let exp_z = TruncatedSeries::<Rational>::z(order)
        .exp()?
        .map(|c| RatPolynomial::constant(c.clone()));
    let one = TruncatedSeries::<RatPolynomial>::one(order);
    let t_exp_z = exp_z.scale(&RatPolynomial::x());

    let lhs = generating * (one.clone() - t_exp_z);
    let rhs = (exp_z - one).scale(&one_minus_t.pow(order as u32));
    Ok(lhs - rhs)
}
