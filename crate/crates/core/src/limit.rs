//! The `p -> infinity` limit of the Hilbert–Kunz multiplicity of `sum x_i^{d_i}`.
//!
//! With `C_lambda = sum eps_1...eps_s (eps_1/d_1 + ... + eps_s/d_s - 2 lambda)^{s-1}`,
//! the sum running over sign tuples whose base is positive, the limit is
//! `d 2^{1-s} / (s-1)! * sum_lambda C_lambda`. For `d = (2, ..., 2)` it reduces
//! to a sum of `f_s(a)` over `a = s (mod 4)`, and equals one plus the
//! coefficient of `z^{s-1}` in `sec z + tan z`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::colength::dp_formula;
use crate::comb::{binomial, factorial};
use crate::eulerian::{eulerian_polynomial, eval_gaussian};
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;
use crate::primes::require_prime;
use crate::zigzag::zigzag_coefficient;
use crate::{Error, Rational, Result};

/// Sign enumeration is a `2^s` loop; beyond this it is not worth attempting.
pub const MAX_SIGN_VARIABLES: usize = 24;

/// A tuple `(eps_1, ..., eps_s)` with every entry `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignTuple {
    epsilons: Vec<i8>,
}

impl SignTuple {
    /// Bit `i` of `mask` set means `eps_i = -1`.
    pub fn from_mask(s: usize, mask: u32) -> Self {
        SignTuple {
            epsilons: (0..s)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn all(s: usize) -> impl Iterator<Item = SignTuple> {
        (0..1u32 << s).map(move |mask| SignTuple::from_mask(s, mask))
    }

    pub fn epsilons(&self) -> &[i8] {
        &self.epsilons
    }

    /// `eps_1 * ... * eps_s`
    pub fn sign(&self) -> i8 {
        self.epsilons.iter().product()
    }

    /// `sum eps_i / d_i`
    pub fn weighted_sum(&self, d: &[u64]) -> Rational {
        self.epsilons
            .iter()
            .zip(d)
            .map(|(&e, &di)| Rational::new(BigInt::from(e), BigInt::from(di)))
            .sum()
    }
}

fn check_variables(s: usize) -> Result<()> {
    if s < 2 {
        return Err(Error::TooFewVariables(s));
    }
    if s > MAX_SIGN_VARIABLES {
        return Err(Error::TooManyVariables {
            got: s,
            max: MAX_SIGN_VARIABLES,
        });
    }
    Ok(())
}

fn check_exponents(d: &[u64], min: u64) -> Result<()> {
    check_variables(d.len())?;
    match d.iter().position(|&x| x < min) {
        Some(index) => Err(Error::EntryTooSmall {
            index,
            value: d[index],
            min,
        }),
        None => Ok(()),
    }
}

fn c_lambda_unchecked(lambda: i64, d: &[u64], sums: &[(i8, Rational)]) -> Rational {
    let shift = Rational::from_integer(BigInt::from(2 * lambda));
    let power = d.len() as i32 - 1;
    sums.iter()
        .filter_map(|(sign, w)| {
            let base = w - &shift;
            base.is_positive().then(|| {
                let term = base.pow(power);
                if *sign < 0 { -term } else { term }
            })
        })
        .sum()
}

fn signed_sums(d: &[u64]) -> Vec<(i8, Rational)> {
    SignTuple::all(d.len())
        .map(|t| (t.sign(), t.weighted_sum(d)))
        .collect()
}

/// `C_lambda` for exponents `d_i >= 2`.
pub fn c_lambda(lambda: i64, d: &[u64]) -> Result<Rational> {
    check_exponents(d, 2)?;
    Ok(c_lambda_unchecked(lambda, d, &signed_sums(d)))
}

/// Which route produced a [`LimitResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitMethod {
    General,
    /// Every `d_i = 2`.
    Quadratic,
    /// Some `d_i = 1`; the limit is 1.
    Degenerate,
    /// `s = 2`; the limit is `min(d_1, d_2)`.
    S2MinRule,
}

impl LimitMethod {
    pub fn tag(self) -> &'static str {
        match self {
            LimitMethod::General => "general",
            LimitMethod::Quadratic => "quadratic",
            LimitMethod::Degenerate => "degenerate-d_i=1",
            LimitMethod::S2MinRule => "s=2-min-rule",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitResult {
    pub mu_limit: Rational,
    /// `C_lambda` for every `|lambda| < s/4`. Empty for the degenerate case.
    pub c_lambda_table: BTreeMap<i64, Rational>,
    pub method: LimitMethod,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LimitOptions {
    /// Also evaluate `C_lambda` for `ceil(s/4) < |lambda| <= s` and fail if any is nonzero.
    pub verify_vanishing: bool,
}

pub fn mu_limit(d: &[u64]) -> Result<LimitResult> {
    mu_limit_with(d, LimitOptions::default())
}

/// `d 2^{1-s} / (s-1)! * (C_0 + 2 sum_{lambda > 0} C_lambda)`, or 1 if some `d_i = 1`.
pub fn mu_limit_with(d: &[u64], options: LimitOptions) -> Result<LimitResult> {
    check_exponents(d, 1)?;
    let s = d.len();
    if d.contains(&1) {
        return Ok(LimitResult {
            mu_limit: Rational::one(),
            c_lambda_table: BTreeMap::new(),
            method: LimitMethod::Degenerate,
        });
    }

    let sums = signed_sums(d);
    // C_lambda vanishes for lambda >= s/4
    let max_lambda = s.div_ceil(4) as i64;
    let mut total = Rational::zero();
    let mut table = BTreeMap::new();
    for lambda in 0..=max_lambda {
        let c = c_lambda_unchecked(lambda, d, &sums);
        total += if lambda == 0 { c.clone() } else { &c + &c };
        if 4 * lambda < s as i64 {
            table.insert(lambda, c.clone());
            if lambda > 0 {
                table.insert(-lambda, c_lambda_unchecked(-lambda, d, &sums));
            }
        } else if !c.is_zero() {
            return Err(Error::Inconsistent("C_lambda nonzero for lambda >= s/4"));
        }
    }
    if options.verify_vanishing {
        for lambda in max_lambda + 1..=s as i64 {
            if !c_lambda_unchecked(lambda, d, &sums).is_zero()
                || !c_lambda_unchecked(-lambda, d, &sums).is_zero()
            {
                return Err(Error::Inconsistent("C_lambda nonzero for lambda >= s/4"));
            }
        }
    }

    let dprod: BigInt = d.iter().map(|&x| BigInt::from(x)).product();
    let scale = Rational::new(dprod, BigInt::from(2u32).pow(s as u32 - 1) * factorial(s - 1));
    let method = if d.iter().all(|&x| x == 2) {
        LimitMethod::Quadratic
    } else if s == 2 {
        LimitMethod::S2MinRule
    } else {
        LimitMethod::General
    };
    Ok(LimitResult {
        mu_limit: scale * total,
        c_lambda_table: table,
        method,
    })
}

/// `f_s(a) = sum_j (-1)^j C(s, j) (a - 2j)^{s-1}`, where negative bases contribute 0.
pub fn f_s(s: usize, a: i64) -> BigInt {
    assert!(s >= 2, "f_s needs s >= 2");
    (0..=s)
        .filter_map(|j| {
            let base = a - 2 * j as i64;
            (base > 0).then(|| {
                let term = binomial(s, j) * BigInt::from(base).pow(s as u32 - 1);
                if j % 2 == 1 { -term } else { term }
            })
        })
        .sum()
}

fn check_s(s: usize) -> Result<()> {
    if s < 2 {
        return Err(Error::TooFewVariables(s));
    }
    Ok(())
}

/// `sum f_s(a)` over `a = s (mod 4)`, `1 <= a <= 2s - 1`.
pub fn quadratic_sum(s: usize) -> Result<BigInt> {
    check_s(s)?;
    Ok((1..=2 * s as i64 - 1)
        .filter(|a| (a - s as i64).rem_euclid(4) == 0)
        .map(|a| f_s(s, a))
        .sum())
}

/// `quadratic_sum(s) / ((s-1)! 2^{s-2})`
pub fn mu_limit_quadratic(s: usize) -> Result<Rational> {
    let num = quadratic_sum(s)?;
    let den = factorial(s - 1) * BigInt::from(2u32).pow(s as u32 - 2);
    Ok(Rational::new(num, den))
}

/// `c = A_{s-1}(i) / (1+i)^{s-2}`.
pub fn theorem37_c(s: usize) -> Result<GaussianRational> {
    check_s(s)?;
    let value = eval_gaussian(&eulerian_polynomial(s - 1), &GaussianRational::i());
    Ok(value / GaussianRational::from_integers(1, 1).pow(s as u32 - 2))
}

/// `2^{s-2} (A_{s-1}(1) + c/2 + conj(c)/2)`, evaluated in Gaussian rationals.
///
/// Fails with [`Error::Inconsistent`] unless the result is a real integer.
pub fn theorem37_sum(s: usize) -> Result<BigInt> {
    let c = theorem37_c(s)?;
    let a_at_one: BigInt = eulerian_polynomial(s - 1).coeffs().iter().sum();
    let half = GaussianRational::from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
    let inner = GaussianRational::from_int(&a_at_one) + half.clone() * c.clone() + half * c.conj();
    let value = GaussianRational::from_int(&BigInt::from(2u32).pow(s as u32 - 2)) * inner;
    if !value.is_real() || !value.re.is_integer() {
        return Err(Error::Inconsistent("sum is not a rational integer"));
    }
    Ok(value.re.to_integer())
}

/// `1 + [z^{s-1}] (sec z + tan z)`
pub fn theorem38_limit(s: usize) -> Result<Rational> {
    check_s(s)?;
    Ok(Rational::one() + zigzag_coefficient(s - 1))
}

/// Checks `sum_a f_s(a) T^{a-1} = (1+T)^s A_{s-1}(T)` coefficient by coefficient.
pub fn lemma36_check(s: usize) -> Result<bool> {
    check_s(s)?;
    let lhs = Polynomial::new((1..=2 * s as i64 - 1).map(|a| f_s(s, a)).collect());
    let one_plus_t = Polynomial::new(vec![BigInt::one(), BigInt::one()]);
    let rhs = one_plus_t.pow(s as u32) * eulerian_polynomial(s - 1);
    // f_s vanishes outside 1..=2s-1
    let outside_zero = (-2..=0).chain(2 * s as i64..2 * s as i64 + 3).all(|a| f_s(s, a).is_zero());
    Ok(lhs == rhs && outside_zero)
}

/// How `a_i = p / d_i + O(1)` is instantiated for each prime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ArgChoice {
    /// `a_i = floor(p / d_i)`, then `a_1 += 1` if `sum a_i` and `s` differ in parity.
    #[default]
    FloorParityUp,
    /// `a_i = ceil(p / d_i)`, then `a_1 -= 1` if `sum a_i` and `s` differ in parity.
    CeilParityDown,
}

impl ArgChoice {
    pub fn pick(self, p: u64, d: &[u64]) -> Vec<u64> {
        let s = d.len() as u64;
        let mut a: Vec<u64> = match self {
            ArgChoice::FloorParityUp => d.iter().map(|&di| p / di).collect(),
            ArgChoice::CeilParityDown => d.iter().map(|&di| p.div_ceil(di)).collect(),
        };
        if (a.iter().sum::<u64>() + s) % 2 == 1 {
            match self {
                ArgChoice::FloorParityUp => a[0] += 1,
                ArgChoice::CeilParityDown => a[0] -= 1,
            }
        }
        a
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub p: u64,
    pub a: Vec<u64>,
    /// `d p^{1-s} D_p(a)`
    pub value: Rational,
    /// `|value - mu_limit(d)|`
    pub gap: Rational,
    pub p_times_gap: Rational,
}

/// One row per prime, in the order given.
pub fn convergence_table(d: &[u64], primes: &[u64], choice: ArgChoice) -> Result<Vec<ConvergenceRow>> {
    check_exponents(d, 2)?;
    let limit = mu_limit(d)?.mu_limit;
    let max_d = d.iter().copied().max().unwrap_or(0);
    let s = d.len();
    let dprod: BigUint = d.iter().map(|&x| BigUint::from(x)).product();
    primes
        .iter()
        .map(|&p| {
            require_prime(p)?;
            if p < max_d {
                return Err(Error::PrimeBelowExponent { p, max_d });
            }
            let a = choice.pick(p, d);
            let dp = dp_formula(p, &a)?;
            let value = Rational::new(
                BigInt::from(&dprod * dp),
                BigInt::from(p).pow(s as u32 - 1),
            );
            let gap = (&value - &limit).abs();
            let p_times_gap = &gap * Rational::from_integer(BigInt::from(p));
            Ok(ConvergenceRow {
                p,
                a,
                value,
                gap,
                p_times_gap,
            })
        })
        .collect()
}
