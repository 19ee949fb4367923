//! Power series in `z` truncated at a fixed order.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::poly::{DivInteger, Ring};
use crate::{Error, Rational, Result};

/// Largest order accepted by the series-valued operations.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`.
///
/// Binary operations between series of different orders truncate to the
/// smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    /// Pads with zeros or drops terms so that exactly `order + 1` coefficients remain.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut coeffs: Vec<C> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, [C::one()])
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::new(order, [C::zero(), C::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Changes the order, padding with zeros when it grows.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().cloned())
    }
}

impl<C: Ring + DivInteger> TruncatedSeries<C> {
    /// `exp(self)`; the constant term must vanish.
    ///
    /// Uses `n e_n = sum_{k=1}^n k u_k e_{n-k}` for `e = exp(u)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("zero for exp"));
        }
        let order = self.order();
        let mut out: Vec<C> = vec![C::zero(); order + 1];
        out[0] = C::one();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let weighted = self.coeffs[k].clone() * out[n - k].clone();
                acc = acc + mul_usize(weighted, k);
            }
            out[n] = acc.div_integer(n as u64);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl TruncatedSeries<Rational> {
    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::BadConstantTerm("nonzero for inversion"));
        }
        let order = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let acc = (1..=n).fold(Rational::zero(), |acc, k| {
                acc + &self.coeffs[k] * &out[n - k]
            });
            out[n] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inverse()?)
    }
}

fn mul_usize<C: Ring>(c: C, k: usize) -> C {
    let mut acc = C::zero();
    for _ in 0..k {
        acc = acc + c.clone();
    }
    acc
}

fn zip_truncated<C: Ring>(a: Vec<C>, b: Vec<C>, f: impl Fn(C, C) -> C) -> Vec<C> {
    a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

impl<C: Ring> Add for TruncatedSeries<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        TruncatedSeries {
            coeffs: zip_truncated(self.coeffs, rhs.coeffs, |x, y| x + y),
        }
    }
}

impl<C: Ring> Sub for TruncatedSeries<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        TruncatedSeries {
            coeffs: zip_truncated(self.coeffs, rhs.coeffs, |x, y| x - y),
        }
    }
}

impl<C: Ring> Neg for TruncatedSeries<C> {
    type Output = Self;

    fn neg(self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

/// Cauchy product.
impl<C: Ring> Mul for TruncatedSeries<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

pub(crate) fn check_order(order: usize, min: usize) -> Result<()> {
    if order < min || order > DEFAULT_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order,
            min,
            max: DEFAULT_MAX_ORDER,
        });
    }
    Ok(())
}
