//! Colengths `D_p(a_1, ..., a_s)` and `e_1(h)` for `h = sum x_i^{d_i}` over `F_p`.
//!
//! `D_p(a) = dim F_p[x_1..x_s] / (x_1 + ... + x_s, x_1^{a_1}, ..., x_s^{a_s})` is
//! computed two ways: by summing coefficients of `prod (1 - t^{a_i}) / (1 - t)`
//! in the residue classes `gamma + lambda p`, and by brute force as the corank
//! of multiplication by `(x_2 + ... + x_s)^{a_1}` on the box ring
//! `F_p[x_2..x_s] / (x_2^{a_2}, ..., x_s^{a_s})`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::modmatrix::ModMatrix;
use crate::poly::{IntPolynomial, Polynomial};
use crate::primes::require_prime;
use crate::{Error, Result};

/// Default bound on the dimension of the quotient rings built by the brute-force oracles.
pub const DEFAULT_MAX_DIM: usize = 5000;
/// Dimensions above this are allowed but slow; front ends should warn.
pub const SLOW_DIM: usize = 3000;

/// The exponents `d_1, ..., d_s` of `h = sum x_i^{d_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HKInstance {
    d: Vec<u64>,
    dprod: BigUint,
}

impl HKInstance {
    pub fn new(d: Vec<u64>) -> Result<Self> {
        if d.len() < 2 {
            return Err(Error::TooFewVariables(d.len()));
        }
        require_at_least(&d, 1)?;
        let dprod = d.iter().map(|&x| BigUint::from(x)).product();
        Ok(HKInstance { d, dprod })
    }

    pub fn s(&self) -> usize {
        self.d.len()
    }

    pub fn d(&self) -> &[u64] {
        &self.d
    }

    /// `d = prod d_i`
    pub fn dprod(&self) -> &BigUint {
        &self.dprod
    }
}

/// Arguments of `D_p`. `gamma` is always recomputed from `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpArgs {
    p: u64,
    a: Vec<u64>,
}

impl DpArgs {
    pub fn new(p: u64, a: Vec<u64>) -> Result<Self> {
        require_prime(p)?;
        if a.len() < 2 {
            return Err(Error::TooFewVariables(a.len()));
        }
        Ok(DpArgs { p, a })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `floor(sum (a_i - 1) / 2)`; negative only when some `a_i = 0`.
    pub fn gamma(&self) -> i128 {
        let total: i128 = self.a.iter().map(|&x| x as i128 - 1).sum();
        total.div_euclid(2)
    }
}

fn require_at_least(values: &[u64], min: u64) -> Result<()> {
    match values.iter().position(|&v| v < min) {
        Some(index) => Err(Error::EntryTooSmall {
            index,
            value: values[index],
            min,
        }),
        None => Ok(()),
    }
}

/// Coefficients of `prod_i (1 + t + ... + t^{a_i - 1})`.
///
/// Any `a_i = 0` gives the zero polynomial.
pub fn product_coefficients(a: &[u64]) -> IntPolynomial {
    if a.contains(&0) {
        return IntPolynomial::zero();
    }
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for &len in a {
        let len = len as usize;
        let mut next = Vec::with_capacity(coeffs.len() + len - 1);
        // sliding window sum of coeffs[k-len+1 ..= k]
        let mut window = BigInt::zero();
        for k in 0..coeffs.len() + len - 1 {
            if k < coeffs.len() {
                window += &coeffs[k];
            }
            if k >= len {
                window -= &coeffs[k - len];
            }
            next.push(window.clone());
        }
        coeffs = next;
    }
    Polynomial::new(coeffs)
}

/// `D_p(a)` as the sum over `lambda` of the coefficients of `t^{gamma + lambda p}`
/// in [`product_coefficients`]. Requires every `a_i <= p`.
pub fn dp_formula(p: u64, a: &[u64]) -> Result<BigUint> {
    let args = DpArgs::new(p, a.to_vec())?;
    if let Some(index) = a.iter().position(|&x| x > p) {
        return Err(Error::ArgumentExceedsPrime {
            index,
            value: a[index],
            p,
        });
    }
    if a.contains(&0) {
        return Ok(BigUint::zero());
    }
    let product = product_coefficients(a);
    let gamma = args.gamma() as usize;
    let step = p as usize;
    let total: BigInt = product
        .coeffs()
        .iter()
        .skip(gamma % step)
        .step_by(step)
        .sum();
    Ok(total.to_biguint().expect("coefficients are non-negative"))
}

/// `F_p[y_1..y_k] / (y_1^{b_1}, ..., y_k^{b_k})` with its monomial basis in
/// lexicographic order (first variable most significant).
struct BoxRing {
    bounds: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
}

impl BoxRing {
    fn new(bounds: Vec<usize>, max_dim: usize) -> Result<Self> {
        let dim128 = bounds
            .iter()
            .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128))
            .unwrap_or(u128::MAX);
        if dim128 > max_dim as u128 {
            return Err(Error::DimensionTooLarge {
                dim: dim128,
                max_dim,
            });
        }
        let mut strides = vec![1usize; bounds.len()];
        for i in (0..bounds.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * bounds[i + 1];
        }
        Ok(BoxRing {
            dim: dim128 as usize,
            bounds,
            strides,
        })
    }

    fn exponents(&self, mut index: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&s| {
                let e = index / s;
                index %= s;
                e
            })
            .collect()
    }

    /// Index of `x^shift * basis[index]`, or `None` if it falls into the ideal.
    fn shift(&self, index_exps: &[usize], shift: &[usize]) -> Option<usize> {
        let mut out = 0;
        for ((&e, &sh), (&b, &st)) in index_exps
            .iter()
            .zip(shift)
            .zip(self.bounds.iter().zip(&self.strides))
        {
            let t = e + sh;
            if t >= b {
                return None;
            }
            out += t * st;
        }
        Some(out)
    }

    /// `(y_1 + ... + y_k)^power` as a dense residue vector.
    fn linear_form_power(&self, power: u64, p: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[0] = 1 % p;
        for _ in 0..power {
            let mut next = vec![0u64; self.dim];
            for (idx, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let exps = self.exponents(idx);
                for (var, (&e, &b)) in exps.iter().zip(&self.bounds).enumerate() {
                    if e + 1 < b {
                        let t = idx + self.strides[var];
                        next[t] = (next[t] + c) % p;
                    }
                }
            }
            v = next;
            if v.iter().all(|&c| c == 0) {
                break;
            }
        }
        v
    }

    /// `dim - rank` of multiplication by `element` on this ring.
    fn multiplication_corank(&self, element: &[u64], p: u64) -> Result<usize> {
        let mut matrix = ModMatrix::zeros(p, self.dim, self.dim)?;
        let exps: Vec<Vec<usize>> = (0..self.dim).map(|i| self.exponents(i)).collect();
        let terms: Vec<(usize, u32)> = element
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c as u32))
            .collect();
        for (row, row_exps) in exps.iter().enumerate() {
            for &(term, c) in &terms {
                if let Some(col) = self.shift(row_exps, &exps[term]) {
                    matrix.add_to(row, col, c);
                }
            }
        }
        Ok(self.dim - matrix.into_rank())
    }
}

/// `D_p(a)` as `dim R - rank` of multiplication by `(x_2 + ... + x_s)^{a_1}` on
/// `R = F_p[x_2..x_s] / (x_2^{a_2}, ..., x_s^{a_s})`. Valid for any `a_i >= 1`,
/// including `a_i > p`.
pub fn dp_bruteforce(p: u64, a: &[u64], max_dim: usize) -> Result<usize> {
    DpArgs::new(p, a.to_vec())?;
    require_at_least(a, 1)?;
    let ring = BoxRing::new(a[1..].iter().map(|&x| x as usize).collect(), max_dim)?;
    let element = ring.linear_form_power(a[0], p);
    ring.multiplication_corank(&element, p)
}

/// `e_1(h) = dim F_p[x_1..x_s] / (h, x_1^p, ..., x_s^p)` for `h = sum x_i^{d_i}`.
pub fn e1_bruteforce(p: u64, d: &[u64], max_dim: usize) -> Result<usize> {
    require_prime(p)?;
    let inst = HKInstance::new(d.to_vec())?;
    let ring = BoxRing::new(vec![p as usize; inst.s()], max_dim)?;
    let mut element = vec![0u64; ring.dim];
    for (var, &di) in inst.d().iter().enumerate() {
        if di < p {
            element[di as usize * ring.strides[var]] = 1;
        }
    }
    ring.multiplication_corank(&element, p)
}

/// How the upper arguments `v_i` with `d_i v_i >= p` are chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UpperChoice {
    /// `v_i = ceil(p / d_i)`
    #[default]
    Ceil,
    /// `v_i = floor(p / d_i) + 1`
    FloorPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub u: Vec<u64>,
    pub v: Vec<u64>,
    /// `d * D_p(u)`
    pub lower: BigUint,
    pub e1: usize,
    /// `d * D_p(v)`
    pub upper: BigUint,
}

/// Evaluates `d D_p(u) <= e_1(h) <= d D_p(v)` with `u_i = floor(p / d_i)`.
///
/// A violated inequality is reported as [`Error::Inconsistent`].
pub fn sandwich_check(
    p: u64,
    d: &[u64],
    max_dim: usize,
    upper: UpperChoice,
) -> Result<SandwichReport> {
    require_prime(p)?;
    let inst = HKInstance::new(d.to_vec())?;
    let u: Vec<u64> = d.iter().map(|&di| p / di).collect();
    let v: Vec<u64> = match upper {
        UpperChoice::Ceil => d.iter().map(|&di| p.div_ceil(di)).collect(),
        UpperChoice::FloorPlusOne => u.iter().map(|&ui| ui + 1).collect(),
    };
    let e1 = e1_bruteforce(p, d, max_dim)?;
    let lower = inst.dprod() * dp_formula(p, &u)?;
    let upper = inst.dprod() * dp_formula(p, &v)?;
    let e1_big = BigUint::from(e1);
    if lower > e1_big || e1_big > upper {
        return Err(Error::Inconsistent("e_1 outside the D_p sandwich"));
    }
    Ok(SandwichReport {
        u,
        v,
        lower,
        e1,
        upper,
    })
}

/// `D_p(u + 1) - D_p(u) <= s p^{s-2}` for `1 <= u_i <= p - 1`.
pub fn increment_check(p: u64, u: &[u64]) -> Result<bool> {
    require_prime(p)?;
    if u.len() < 2 {
        return Err(Error::TooFewVariables(u.len()));
    }
    require_at_least(u, 1)?;
    if let Some(index) = u.iter().position(|&x| x >= p) {
        return Err(Error::EntryTooLarge {
            index,
            value: u[index],
            max: p - 1,
        });
    }
    let bumped: Vec<u64> = u.iter().map(|&x| x + 1).collect();
    let low = dp_formula(p, u)?;
    let high = dp_formula(p, &bumped)?;
    let s = u.len();
    let bound = BigUint::from(s) * BigUint::from(p).pow((s - 2) as u32);
    Ok(high <= low + bound)
}
