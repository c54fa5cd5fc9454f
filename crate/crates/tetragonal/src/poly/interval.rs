//! Exact rational interval arithmetic, with optional outward dyadic
//! rounding to keep coefficient sizes bounded during long evaluations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Closed interval with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl QInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        QInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        QInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Round endpoints outward to multiples of 2^-bits.
    pub fn round_out(&self, bits: u32) -> Self {
        QInterval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }
}

fn dyadic_floor(v: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = v * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

fn dyadic_ceil(v: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = v * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

impl Add for &QInterval {
    type Output = QInterval;
    fn add(self, o: &QInterval) -> QInterval {
        QInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
}

impl Sub for &QInterval {
    type Output = QInterval;
    fn sub(self, o: &QInterval) -> QInterval {
        QInterval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }
}

impl Neg for &QInterval {
    type Output = QInterval;
    fn neg(self) -> QInterval {
        QInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }
}

impl Mul for &QInterval {
    type Output = QInterval;
    fn mul(self, o: &QInterval) -> QInterval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        QInterval { lo, hi }
    }
}

/// Rectangular complex interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CInterval {
    pub re: QInterval,
    pub im: QInterval,
}

impl CInterval {
    pub fn new(re: QInterval, im: QInterval) -> Self {
        CInterval { re, im }
    }

    pub fn from_real(re: QInterval) -> Self {
        CInterval {
            re,
            im: QInterval::point(BigRational::zero()),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    pub fn round_out(&self, bits: u32) -> CInterval {
        CInterval {
            re: self.re.round_out(bits),
            im: self.im.round_out(bits),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{qi, qq};

    #[test]
    fn interval_mul_signs() {
        let a = QInterval::new(qi(-2), qi(3));
        let b = QInterval::new(qi(-1), qi(4));
        let p = &a * &b;
        assert_eq!(p.lo, qi(-8));
        assert_eq!(p.hi, qi(12));
    }

    #[test]
    fn rounding_is_outward() {
        let a = QInterval::new(qq(1, 3), qq(2, 3));
        let r = a.round_out(8);
        assert!(r.lo <= a.lo && r.hi >= a.hi);
        assert!(r.width() <= a.width() + qq(1, 128));
    }

    #[test]
    fn complex_square() {
        // (1+i)^2 = 2i
        let z = CInterval::new(QInterval::point(qi(1)), QInterval::point(qi(1)));
        let s = z.mul(&z);
        assert_eq!(s.re, QInterval::point(qi(0)));
        assert_eq!(s.im, QInterval::point(qi(2)));
    }
}
