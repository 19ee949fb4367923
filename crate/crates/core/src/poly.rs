//! Dense univariate polynomials over an exact coefficient ring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with exact arithmetic. Blanket-implemented.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Exact division by a nonzero machine integer, needed for `exp` and `z^n/n!` terms.
pub trait DivInteger {
    fn div_integer(&self, n: u64) -> Self;
}

impl DivInteger for BigRational {
    fn div_integer(&self, n: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(n))
    }
}

impl<C: Ring + DivInteger> DivInteger for Polynomial<C> {
    fn div_integer(&self, n: u64) -> Self {
        self.map(|c| c.div_integer(n))
    }
}

/// Dense polynomial, `coeffs[k]` is the coefficient of the k-th power.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has
/// no coefficients at all and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPolynomial = Polynomial<BigRational>;

impl<C: Ring> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^degree`
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Horner evaluation in a ring that the coefficients embed into.
    pub fn eval_with<R: Ring>(&self, point: &R, lift: impl Fn(&C) -> R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * point.clone() + lift(c))
    }

    pub fn eval(&self, point: &C) -> C {
        self.eval_with(point, C::clone)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    /// Coefficients read the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }
}

impl<C: Ring> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Polynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Add for Polynomial<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (slot, c) in long.iter_mut().zip(short) {
            *slot = slot.clone() + c;
        }
        Self::new(long)
    }
}

impl<C: Ring> Neg for Polynomial<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<C: Ring> Sub for Polynomial<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Mul for Polynomial<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("T")?,
                1 => write!(f, "{c}T")?,
                _ if c.is_one() => write!(f, "T^{k}")?,
                _ => write!(f, "{c}T^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(c: &[i64]) -> IntPolynomial {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = int_poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(int_poly(&[0, 0]).is_zero());
        assert_eq!(int_poly(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = int_poly(&[1, 1]);
        assert_eq!(a.pow(3), int_poly(&[1, 3, 3, 1]));
        assert_eq!(a.clone() - a.clone(), IntPolynomial::zero());
        assert_eq!(int_poly(&[1, -1]) * int_poly(&[1, 1]), int_poly(&[1, 0, -1]));
        assert_eq!(a.eval(&BigInt::from(4)), BigInt::from(5));
    }

    #[test]
    fn palindromes() {
        assert!(int_poly(&[1, 11, 11, 1]).is_palindromic());
        assert!(!int_poly(&[1, 2]).is_palindromic());
        assert!(IntPolynomial::zero().is_palindromic());
    }

    #[test]
    fn display() {
        use alloc::string::ToString;
        assert_eq!(int_poly(&[1, 11, 0, 1]).to_string(), "1 + 11T + T^3");
    }
}
