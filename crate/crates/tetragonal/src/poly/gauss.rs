//! Gaussian rationals: exact complex numbers with rational parts.

use super::ring::Ring;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussQ {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussQ {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussQ {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2, an exact rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero GaussQ");
        GaussQ {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

impl fmt::Debug for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl Add for GaussQ {
    type Output = GaussQ;
    fn add(self, o: GaussQ) -> GaussQ {
        GaussQ {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussQ {
    type Output = GaussQ;
    fn sub(self, o: GaussQ) -> GaussQ {
        GaussQ {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Neg for GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussQ {
    type Output = GaussQ;
    fn mul(self, o: GaussQ) -> GaussQ {
        GaussQ {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Zero for GaussQ {
    fn zero() -> Self {
        GaussQ::from_real(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussQ {
    fn one() -> Self {
        GaussQ::from_real(BigRational::one())
    }
}

impl Ring for GaussQ {
    fn exact_div(&self, d: &Self) -> Self {
        self.clone() * d.recip()
    }
    fn content_gcd(&self, _other: &Self) -> Self {
        GaussQ::one()
    }
}

impl crate::poly::ring::Field for GaussQ {
    fn inv(&self) -> Self {
        self.recip()
    }
}
