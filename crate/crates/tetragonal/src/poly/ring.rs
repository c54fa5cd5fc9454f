//! Coefficient ring abstraction for dense polynomials.
//!
//! Everything downstream works over exact arithmetic: rationals, Gaussian
//! rationals, or polynomials over those. The only operation beyond ordinary
//! ring arithmetic we ever need is division that is known to be exact
//! (subresultant chains, content removal, Yun's algorithm).

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring with exact division where divisibility is guaranteed
/// by the caller.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Exact quotient `self / rhs`. Panics if the division is not exact;
    /// callers only invoke it where exactness is a theorem.
    fn exact_div(&self, rhs: &Self) -> Self;

    /// A gcd usable for content extraction. Fields return 1 for nonzero
    /// arguments; this is only a size-control device, any associate works.
    fn content_gcd(&self, rhs: &Self) -> Self;
}

impl Ring for num_bigint::BigInt {
    fn exact_div(&self, rhs: &Self) -> Self {
        let q = self / rhs;
        assert!((self - &q * rhs).is_zero(), "inexact division");
        q
    }

    fn content_gcd(&self, rhs: &Self) -> Self {
        let mut a = Signed::abs(self);
        let mut b = Signed::abs(rhs);
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }
}

impl Ring for BigRational {
    fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "exact_div by zero");
        self / rhs
    }

    fn content_gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() && rhs.is_zero() {
            Self::zero()
        } else {
            Self::one()
        }
    }
}

/// Fields additionally expose true inverses, enabling ordinary Euclidean
/// division of polynomials.
pub trait Field: Ring {
    fn inv(&self) -> Self;
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        BigRational::one() / self
    }
}

/// Rings with a real ordering (used by Sturm sequences and sign bookkeeping).
pub trait OrderedRing: Ring + PartialOrd {
    fn signum(&self) -> i8;
    fn abs(&self) -> Self;
}

impl OrderedRing for BigRational {
    fn signum(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}
