//! Concrete rational-coefficient aliases and small constructors.

use super::dense::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar.
pub type QQ = BigRational;
/// Univariate polynomial over the rationals.
pub type RatPoly = Poly<BigRational>;
/// Bivariate polynomial: outer variable y, inner variable x.
pub type BiPoly = Poly<Poly<BigRational>>;

/// Rational from an integer.
pub fn qi(n: i64) -> QQ {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from numerator/denominator.
pub fn qq(n: i64, d: i64) -> QQ {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial from integer coefficients, constant term first.
pub fn ratpoly_from_i64(coeffs: &[i64]) -> RatPoly {
    Poly::from_coeffs(coeffs.iter().map(|&c| qi(c)).collect())
}

/// Polynomial from rational coefficients, constant term first.
pub fn ratpoly_from_q(coeffs: &[QQ]) -> RatPoly {
    Poly::from_coeffs(coeffs.to_vec())
}
