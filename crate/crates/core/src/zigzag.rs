//! Zigzag (secant–tangent) numbers and the series of `sec z + tan z`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comb::factorial;
use crate::series::{check_order, TruncatedSeries};
use crate::{Rational, Result};

/// The integer `E_n` with `sum E_n z^n / n! = sec z + tan z`, from the
/// boustrophedon (Seidel–Entringer) triangle.
pub fn zigzag_number(n: usize) -> BigInt {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigInt::zero());
        for k in 1..=m {
            let v = &next[k - 1] + &row[m - k];
            next.push(v);
        }
        row = next;
    }
    row.pop().unwrap_or_else(BigInt::one)
}

/// Coefficient of `z^n` in `sec z + tan z`.
pub fn zigzag_coefficient(n: usize) -> Rational {
    Rational::new(zigzag_number(n), factorial(n))
}

fn sin_cos(order: usize) -> (TruncatedSeries<Rational>, TruncatedSeries<Rational>) {
    let mut sin = vec![Rational::zero(); order + 1];
    let mut cos = vec![Rational::zero(); order + 1];
    for (n, (s, c)) in sin.iter_mut().zip(cos.iter_mut()).enumerate() {
        let term = Rational::from_integer(factorial(n)).recip();
        match n % 4 {
            0 => *c = term,
            1 => *s = term,
            2 => *c = -term,
            _ => *s = -term,
        }
    }
    (TruncatedSeries::new(order, sin), TruncatedSeries::new(order, cos))
}

/// `sec z + tan z` up to `z^order`, as `(1 + sin z) / cos z`.
pub fn sec_tan_series(order: usize) -> Result<TruncatedSeries<Rational>> {
    check_order(order, 0)?;
    let (sin, cos) = sin_cos(order);
    (TruncatedSeries::one(order) + sin).checked_div(&cos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn first_zigzag_numbers() {
        let got: Vec<BigInt> = (0..=10).map(zigzag_number).collect();
        let want: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn coefficients() {
        assert_eq!(zigzag_coefficient(0), r(1, 1));
        assert_eq!(zigzag_coefficient(1), r(1, 1));
        assert_eq!(zigzag_coefficient(4), r(5, 24));
        assert_eq!(zigzag_coefficient(5), r(2, 15));
    }

    #[test]
    fn series_division() {
        let s = sec_tan_series(4).unwrap();
        assert_eq!(s.coeffs(), &[r(1, 1), r(1, 1), r(1, 2), r(1, 3), r(5, 24)]);
        assert_eq!(sec_tan_series(0).unwrap().coeffs(), &[r(1, 1)]);
        assert_eq!(*sec_tan_series(5).unwrap().coeff(5), r(2, 15));
    }

    #[test]
    fn other_quotient_form_agrees() {
        // cos z / (1 - sin z) is the same series
        let (sin, cos) = sin_cos(12);
        let alt = cos.checked_div(&(TruncatedSeries::one(12) - sin)).unwrap();
        assert_eq!(alt, sec_tan_series(12).unwrap());
    }
}
