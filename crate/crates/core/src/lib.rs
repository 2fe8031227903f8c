//! Exact computations in the enveloping algebra of `sl_n` and in its
//! scalar generalized Verma modules.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is computed
//! over arbitrary-precision rationals:
//!
//! * [`rootdata`]: roots, weights, Chevalley generators, parabolic characters.
//! * [`exactla`]: canonical reduced echelon forms, kernels, sums, intersections.
//! * [`pbw`]: PBW monomials, straightening, multiplication, filtration degree.
//! * [`verma`]: the modules `M(rho)`, their action, weights and filtration.
//! * [`ideals`]: truncated character and annihilator ideals.
//! * [`quotient`]: the maximal submodule `K`, the simple quotient `L(rho)`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod exactla;
pub mod ideals;
pub mod pbw;
pub mod quotient;
pub mod rootdata;
pub mod verma;

mod error;

pub use error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds the integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `C(a, b)`, saturating at `usize::MAX`.
pub fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc * (a - k) as u128 / (k + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}
