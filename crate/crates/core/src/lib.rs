//! Exact arithmetic for Hilbert–Kunz colengths of diagonal hypersurfaces
//! `x_1^{d_1} + ... + x_s^{d_s}` over `F_p` and for the limit of their
//! Hilbert–Kunz multiplicity as `p -> infinity`.
//!
//! Everything here is exact: big rationals, integer polynomials, Gaussian
//! rationals and truncated power series. The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;

pub mod colength;
mod comb;
pub mod error;
pub mod eulerian;
pub mod gaussian;
pub mod limit;
pub mod modmatrix;
pub mod poly;
pub mod primes;
pub mod series;
pub mod zigzag;

pub use colength::{
    dp_bruteforce, dp_formula, e1_bruteforce, increment_check, product_coefficients,
    sandwich_check, DpArgs, HKInstance, SandwichReport, UpperChoice, DEFAULT_MAX_DIM, SLOW_DIM,
};
pub use comb::{binomial, factorial};
pub use error::{Error, Result};
pub use eulerian::{eulerian_polynomial, eulerian_sec_tan_coefficient, eval_gaussian, lemma33_residual};
pub use gaussian::GaussianRational;
pub use limit::{
    c_lambda, convergence_table, f_s, lemma36_check, mu_limit, mu_limit_quadratic, mu_limit_with,
    quadratic_sum, theorem37_c, theorem37_sum, theorem38_limit, ArgChoice, ConvergenceRow,
    LimitMethod, LimitOptions, LimitResult, SignTuple,
};
pub use modmatrix::ModMatrix;
pub use poly::{IntPolynomial, Polynomial, RatPolynomial, Ring};
pub use primes::is_prime;
pub use series::{TruncatedSeries, DEFAULT_MAX_ORDER};
pub use zigzag::{sec_tan_series, zigzag_coefficient, zigzag_number};

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
