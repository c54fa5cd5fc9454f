//! Dense univariate polynomials over an exact coefficient ring.

use super::ring::{Field, Ring};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial; `coeffs[i]` is the coefficient of degree `i`.
/// Invariant: the last entry, if any, is nonzero.
#[derive(Clone, PartialEq)]
pub struct Poly<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: C, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of degree `i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg 0 = 0 for the zero polynomial; convenient in chains
    /// where the zero case has been excluded already.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate under a coefficient embedding, e.g. Q[y] at a Gaussian point.
    pub fn eval_map<D: Ring>(&self, embed: impl Fn(&C) -> D, x: &D) -> D {
        let mut acc = D::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut n = C::zero();
            for _ in 0..i {
                n = n + C::one();
            }
            out.push(n * c.clone());
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Exact coefficientwise division by a ring element.
    pub fn exact_div_coeff(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.exact_div(c)).collect())
    }

    /// Multiply by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// gcd of all coefficients (content), via `Ring::content_gcd`.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = if g.is_zero() { c.clone() } else { g.content_gcd(c) };
            }
        }
        g
    }

    /// Pseudo-remainder: `lc(d)^(deg n - deg d + 1) * n  mod  d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo_rem by zero polynomial");
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.clone();
        let mut steps = if self.deg() >= dd { self.deg() - dd + 1 } else { 0 };
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let rl = r.leading();
            r = &r.scale(&lc) - &d.scale(&rl).shift_up(k);
            steps = steps.saturating_sub(1);
        }
        // keep the classical normalization lc^(delta+1) * n mod d
        let mut out = r;
        for _ in 0..steps {
            out = out.scale(&lc);
        }
        out
    }

    /// Exact polynomial division; panics when the remainder is nonzero.
    pub fn exact_div_poly(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.clone();
        let mut q = vec![C::zero(); self.deg().saturating_sub(dd) + 1];
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let c = r.leading().exact_div(&lc);
            q[k] = c.clone();
            r = &r - &d.scale(&c).shift_up(k);
        }
        assert!(r.is_zero(), "exact_div_poly: division was not exact");
        Self::from_coeffs(q)
    }
}

impl<C: Field> Poly<C> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lci = d.leading().inv();
        let mut r = self.clone();
        let mut q = vec![C::zero(); self.deg().saturating_sub(dd) + 1];
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let c = r.leading() * lci.clone();
            q[k] = c.clone();
            r = &r - &d.scale(&c).shift_up(k);
        }
        (Self::from_coeffs(q), r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().inv())
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(
                self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
                    + rhs.coeffs.get(i).cloned().unwrap_or_else(C::zero),
            );
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(
                self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
                    - rhs.coeffs.get(i).cloned().unwrap_or_else(C::zero),
            );
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Self {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn exact_div(&self, rhs: &Self) -> Self {
        self.exact_div_poly(rhs)
    }

    fn content_gcd(&self, _rhs: &Self) -> Self {
        // only used for content extraction one level up, which we skip
        // for polynomial coefficients
        Self::one()
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{:?}", c)?;
            } else {
                write!(f, "({:?})*X^{}", c, i)?;
            }
        }
        Ok(())
    }
}
