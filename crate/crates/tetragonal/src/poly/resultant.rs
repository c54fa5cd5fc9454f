//! Resultants and discriminants via the subresultant PRS
//! (Cohen, Algorithm 3.3.7), plus squarefree decomposition.

use super::dense::Poly;
use super::ring::{Field, Ring};
use crate::error::PolyError;
use num_traits::Zero;

fn pow_ring<C: Ring>(base: &C, n: usize) -> C {
    let mut acc = C::one();
    for _ in 0..n {
        acc = acc * base.clone();
    }
    acc
}

/// Resultant of two nonzero polynomials over an exact ring.
pub fn resultant<C: Ring>(f: &Poly<C>, g: &Poly<C>) -> Result<C, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(pow_ring(&f.leading(), g.deg()));
    }
    if g.deg() == 0 {
        return Ok(pow_ring(&g.leading(), f.deg()));
    }

    // content extraction keeps the chain coefficients small
    let ca = f.content();
    let cb = g.content();
    let mut a = f.exact_div_coeff(&ca);
    let mut b = g.exact_div_coeff(&cb);
    let t = pow_ring(&ca, b.deg()) * pow_ring(&cb, a.deg());

    let mut sign_flip = false;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_flip = !sign_flip;
        }
        std::mem::swap(&mut a, &mut b);
    }

    let mut g1 = C::one();
    let mut h = C::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.exact_div_coeff(&(g1.clone() * pow_ring(&h, delta)));
        g1 = a.leading();
        h = if delta == 0 {
            h
        } else {
            pow_ring(&g1, delta).exact_div(&pow_ring(&h, delta - 1))
        };
        if b.is_zero() {
            // a common divisor of positive degree: resultant vanishes
            return Ok(C::zero());
        }
        if b.deg() == 0 {
            let da = a.deg();
            let res = pow_ring(&b.leading(), da).exact_div(&pow_ring(&h, da.saturating_sub(1)));
            let res = res * t;
            return Ok(if sign_flip { -res } else { res });
        }
    }
}

/// Discriminant: `(-1)^(n(n-1)/2) * res(f, f') / lc(f)`.
pub fn discriminant<C: Ring>(f: &Poly<C>) -> Result<C, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let n = f.deg();
    if n == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    if n == 1 {
        return Ok(C::one());
    }
    let r = resultant(f, &f.derivative())?;
    let d = r.exact_div(&f.leading());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Squarefree part over a field: `f / gcd(f, f')`, made monic.
pub fn squarefree_part<C: Field>(f: &Poly<C>) -> Poly<C> {
    let g = f.gcd(&f.derivative());
    f.exact_div_poly(&g).monic()
}

/// Yun's squarefree decomposition: factors (monic) with multiplicities,
/// ascending in multiplicity; the product of `factor^mult` equals the input
/// up to a constant.
pub fn squarefree_decompose<C: Field>(f: &Poly<C>) -> Result<Vec<(Poly<C>, usize)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let f = f.monic();
    if f.deg() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div_poly(&a);
    let mut c = df.exact_div_poly(&a);
    let mut i = 1usize;
    loop {
        let d = &c - &b.derivative();
        if d.is_zero() {
            if b.deg() > 0 {
                out.push((b.monic(), i));
            }
            break;
        }
        a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.monic(), i));
        }
        b = b.exact_div_poly(&a);
        c = d.exact_div_poly(&a);
        i += 1;
        if b.deg() == 0 {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{ratpoly_from_i64, QQ};
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn resultant_linear_factors() {
        // res_y(y - a, y - b) = b - a with this sign convention
        let a = ratpoly_from_i64(&[-3, 1]);
        let b = ratpoly_from_i64(&[-5, 1]);
        let r = resultant(&a, &b).unwrap();
        assert_eq!(r, QQ::from_integer((-2).into()));
    }

    #[test]
    fn resultant_matches_root_product() {
        // f = (x-1)(x-2), g = (x-3)(x-4): res = prod f-roots into g
        let f = ratpoly_from_i64(&[2, -3, 1]);
        let g = ratpoly_from_i64(&[12, -7, 1]);
        // res(f,g) = g(1)*g(2) = 6*2 = 12
        assert_eq!(resultant(&f, &g).unwrap(), QQ::from_integer(12.into()));
    }

    #[test]
    fn discriminant_quadratic() {
        // disc(ax^2+bx+c) = b^2-4ac
        let f = ratpoly_from_i64(&[5, 3, 2]);
        assert_eq!(
            discriminant(&f).unwrap(),
            QQ::from_integer((9 - 40).into())
        );
    }

    #[test]
    fn squarefree_cube_times_linear() {
        // (x-1)^3 * x
        let xm1 = ratpoly_from_i64(&[-1, 1]);
        let x = ratpoly_from_i64(&[0, 1]);
        let f = &xm1.pow(3) * &x;
        let dec = squarefree_decompose(&f).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (x, 1));
        assert_eq!(dec[1], (xm1, 3));
        // reassembly
        let mut prod = crate::poly::dense::Poly::<BigRational>::one();
        for (p, m) in &dec {
            prod = &prod * &p.pow(*m);
        }
        assert_eq!(prod.monic(), f.monic());
    }
}
