//! Real algebraic numbers: a squarefree defining polynomial together with
//! an isolating interval, supporting exact comparison and sign queries.

use super::rational::{qi, RatPoly, QQ};
use super::resultant::squarefree_part;
use super::sturm::{isolate_real_roots, refine_interval, sign_at_root, SturmChain};
use num_traits::ToPrimitive;
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct AlgReal {
    /// Squarefree polynomial vanishing at the number.
    pub poly: RatPoly,
    /// Isolating interval `(lo, hi]` containing exactly this root.
    pub lo: QQ,
    pub hi: QQ,
}

impl AlgReal {
    pub fn from_rational(q: QQ) -> Self {
        let poly = RatPoly::from_coeffs(vec![-q.clone(), qi(1)]);
        AlgReal {
            lo: &q - qi(1),
            hi: q,
            poly,
        }
    }

    /// All real roots of `f`, in increasing order.
    pub fn roots_of(f: &RatPoly) -> Vec<AlgReal> {
        let sf = squarefree_part(f);
        isolate_real_roots(&sf)
            .into_iter()
            .map(|(lo, hi)| AlgReal {
                poly: sf.clone(),
                lo,
                hi,
            })
            .collect()
    }

    pub fn is_rational(&self) -> Option<QQ> {
        if self.poly.deg() == 1 {
            let c0 = self.poly.coeff(0);
            let c1 = self.poly.coeff(1);
            return Some(-c0 / c1);
        }
        None
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        let (lo, hi) = refine_interval(&self.poly, &self.lo, &self.hi);
        self.lo = lo;
        self.hi = hi;
    }

    /// Refine until the interval width is at most `eps`.
    pub fn refine_to(&mut self, eps: &QQ) {
        while &(&self.hi - &self.lo) > eps {
            self.refine();
        }
    }

    pub fn width(&self) -> QQ {
        &self.hi - &self.lo
    }

    /// Exact sign of this number.
    pub fn sign(&self) -> i8 {
        // x itself is the polynomial t at the root
        sign_at_root(&RatPoly::from_coeffs(vec![qi(0), qi(1)]), &self.poly, &self.lo, &self.hi)
    }

    /// Exact sign of `f` at this number.
    pub fn sign_of(&self, f: &RatPoly) -> i8 {
        sign_at_root(f, &self.poly, &self.lo, &self.hi)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &QQ) -> Ordering {
        let diff = RatPoly::from_coeffs(vec![-q.clone(), qi(1)]);
        match self.sign_of(&diff) {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn cmp_alg(&self, other: &AlgReal) -> Ordering {
        // quick interval separation after a few refinements
        let mut a = self.clone();
        let mut b = other.clone();
        for _ in 0..64 {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
        // suspected equality: check a common root in the overlap
        let g = a.poly.gcd(&b.poly);
        if g.deg() > 0 {
            let chain = SturmChain::new(&g);
            let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
            let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
            if lo <= hi && chain.count_in(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        // genuinely distinct but very close: keep refining
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    /// A floating approximation (refined to ~1e-15 first).
    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        a.refine_to(&QQ::new(1.into(), num_bigint::BigInt::from(1u64 << 52)));
        let mid = (&a.lo + &a.hi) / qi(2);
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// A rational strictly below / above this number, within `eps`.
    pub fn rational_below(&self, eps: &QQ) -> QQ {
        let mut a = self.clone();
        a.refine_to(eps);
        // lo is strictly below the root by the (lo, hi] convention
        a.lo
    }

    pub fn rational_above(&self, eps: &QQ) -> QQ {
        let mut a = self.clone();
        a.refine_to(eps);
        if a.sign_of(&RatPoly::from_coeffs(vec![-a.hi.clone(), qi(1)])) < 0 {
            a.hi
        } else {
            // the root equals hi exactly
            &a.hi + eps
        }
    }
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_alg(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{qq, ratpoly_from_i64};

    #[test]
    fn sqrt2_basics() {
        let f = ratpoly_from_i64(&[-2, 0, 1]);
        let roots = AlgReal::roots_of(&f);
        assert_eq!(roots.len(), 2);
        let s2 = &roots[1];
        assert_eq!(s2.sign(), 1);
        assert_eq!(s2.cmp_rational(&qq(3, 2)), Ordering::Less);
        assert_eq!(s2.cmp_rational(&qq(7, 5)), Ordering::Greater);
        let approx = s2.to_f64();
        assert!((approx - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn comparisons_and_equality() {
        let f = ratpoly_from_i64(&[-2, 0, 1]);
        let g = ratpoly_from_i64(&[0, -2, 0, 1]); // x(x^2-2)
        let a = AlgReal::roots_of(&f)[1].clone();
        let b = AlgReal::roots_of(&g)[2].clone();
        assert_eq!(a.cmp_alg(&b), Ordering::Equal);
        let c = AlgReal::from_rational(qq(3, 2));
        assert_eq!(a.cmp_alg(&c), Ordering::Less);
    }

    #[test]
    fn sign_of_poly_at_root() {
        let f = ratpoly_from_i64(&[-2, 0, 1]);
        let s2 = AlgReal::roots_of(&f)[1].clone();
        assert_eq!(s2.sign_of(&ratpoly_from_i64(&[-2, 0, 1])), 0);
        assert_eq!(s2.sign_of(&ratpoly_from_i64(&[-1, 1])), 1); // x-1 > 0
    }
}
