//! Reduced quartic models y^4 + p(x) y^2 + q(x) y + r(x), their cubic
//! resolvents, discriminants, and the twist parameter of a real segment
//! without real fiber points.

use crate::error::CurveError;
use crate::poly::{qi, AlgReal, BiPoly, Poly, QQ, RatPoly};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// A tetragonal curve model in reduced form: the fiber over `x` is the
/// quartic `y^4 + p(x) y^2 + q(x) y + r(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticModel {
    pub p: RatPoly,
    pub q: RatPoly,
    pub r: RatPoly,
}

impl QuarticModel {
    pub fn new(p: RatPoly, q: RatPoly, r: RatPoly) -> Self {
        QuarticModel { p, q, r }
    }

    /// The quartic in y over a given rational x.
    pub fn fiber(&self, x: &QQ) -> RatPoly {
        RatPoly::from_coeffs(vec![
            self.r.eval(x),
            self.q.eval(x),
            self.p.eval(x),
            QQ::zero(),
            qi(1),
        ])
    }

    /// As a bivariate polynomial, outer variable y.
    pub fn as_bipoly(&self) -> BiPoly {
        Poly::from_coeffs(vec![
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            RatPoly::zero(),
            RatPoly::one(),
        ])
    }

    /// b1 = p^2 - 4r, the middle coefficient of the modified resolvent.
    pub fn b1(&self) -> RatPoly {
        &(&self.p * &self.p) - &self.r.scale(&qi(4))
    }

    /// Modified cubic resolvent s^3 - 2 p s^2 + b1 s + q^2, whose roots
    /// are -(y_i + y_j)^2 over the three splittings of the quartic roots.
    pub fn resolvent(&self) -> BiPoly {
        Poly::from_coeffs(vec![
            &self.q * &self.q,
            self.b1(),
            self.p.scale(&qi(-2)),
            RatPoly::one(),
        ])
    }

    /// Resolvent specialized at a rational x (cubic in s).
    pub fn resolvent_at(&self, x: &QQ) -> RatPoly {
        let p = self.p.eval(x);
        let q = self.q.eval(x);
        let b1 = &p * &p - qi(4) * self.r.eval(x);
        RatPoly::from_coeffs(vec![&q * &q, b1, qi(-2) * p, qi(1)])
    }

    /// Discriminant of the fiber quartic, as a polynomial in x:
    /// 16 p^4 r - 4 p^3 q^2 - 128 p^2 r^2 + 144 p q^2 r - 27 q^4 + 256 r^3.
    pub fn disc_x(&self) -> RatPoly {
        let p = &self.p;
        let q2 = &self.q * &self.q;
        let r = &self.r;
        let p2 = p * p;
        let p3 = &p2 * p;
        let p4 = &p2 * &p2;
        let r2 = r * r;
        let q4 = &q2 * &q2;
        let mut d = (&p4 * r).scale(&qi(16));
        d = &d - &(&p3 * &q2).scale(&qi(4));
        d = &d - &(&p2 * &r2).scale(&qi(128));
        d = &d + &(&(p * &q2) * r).scale(&qi(144));
        d = &d - &q4.scale(&qi(27));
        d = &d + &(&r2 * r).scale(&qi(256));
        d
    }

    /// Number of real roots of the fiber over a rational nonsingular x:
    /// 0, 2, or 4 (counted without multiplicity).
    pub fn real_roots_at(&self, x: &QQ) -> usize {
        AlgReal::roots_of(&self.fiber(x)).len()
    }
}

/// One counted root of q inside a twist segment.
#[derive(Debug, Clone)]
pub struct TwistRoot {
    /// Approximate location (for reporting).
    pub x_approx: f64,
    /// +1 when q changes sign from negative to positive, -1 the other way,
    /// 0 when q does not change sign (not counted).
    pub direction: i8,
    /// Exact sign of b1 at the root.
    pub b1_sign: i8,
    /// Whether this root contributes to the twist parameter.
    pub counted: bool,
}

/// Certificate for a twist parameter computation on a segment.
#[derive(Debug, Clone)]
pub struct TwistCertificate {
    pub t: i64,
    pub roots: Vec<TwistRoot>,
}

/// The twist parameter of the open segment (a, b): the signed number of
/// roots x' of q in the segment at which q changes sign and b1(x') > 0,
/// counted +1 when q is increasing and -1 when decreasing.
pub fn twist_parameter(
    model: &QuarticModel,
    a: &QQ,
    b: &QQ,
) -> Result<TwistCertificate, CurveError> {
    if a >= b {
        return Err(CurveError::Hypothesis(
            "twist segment must be nondegenerate".into(),
        ));
    }
    let q = &model.q;
    if q.is_zero() {
        return Err(CurveError::Hypothesis(
            "q vanishes identically; the model is degenerate".into(),
        ));
    }
    let b1 = model.b1();
    // roots of q strictly inside (a, b)
    let mut roots: Vec<AlgReal> = AlgReal::roots_of(q)
        .into_iter()
        .filter(|r| {
            r.cmp_rational(a) == Ordering::Greater && r.cmp_rational(b) == Ordering::Less
        })
        .collect();
    // refine all isolating intervals into (a, b) and pairwise disjoint
    for r in roots.iter_mut() {
        while !(r.lo > *a && r.hi < *b) {
            r.refine();
        }
    }
    loop {
        let mut ok = true;
        for k in 1..roots.len() {
            if roots[k - 1].hi >= roots[k].lo {
                ok = false;
            }
        }
        if ok {
            break;
        }
        for r in roots.iter_mut() {
            r.refine();
        }
    }
    // sample signs of q strictly between consecutive roots
    let mut samples = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        samples.push((a + b) / qi(2));
    } else {
        samples.push((a + &roots[0].lo) / qi(2));
        for k in 1..roots.len() {
            samples.push((&roots[k - 1].hi + &roots[k].lo) / qi(2));
        }
        samples.push((&roots[roots.len() - 1].hi + b) / qi(2));
    }
    let signs: Vec<i8> = samples
        .iter()
        .map(|s| {
            let v = q.eval(s);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect();
    if signs.iter().any(|&s| s == 0) {
        return Err(CurveError::Certification(
            "sample point between q-roots hit a root".into(),
        ));
    }

    let mut t = 0i64;
    let mut cert_roots = Vec::with_capacity(roots.len());
    for (k, r) in roots.iter().enumerate() {
        let pre = signs[k];
        let post = signs[k + 1];
        let direction = if pre == post { 0 } else { post };
        let b1_sign = r.sign_of(&b1);
        if direction != 0 && b1_sign == 0 {
            return Err(CurveError::Hypothesis(
                "b1 vanishes at a sign-changing root of q".into(),
            ));
        }
        let counted = direction != 0 && b1_sign > 0;
        if counted {
            t += direction as i64;
        }
        cert_roots.push(TwistRoot {
            x_approx: r.to_f64(),
            direction,
            b1_sign,
            counted,
        });
    }
    Ok(TwistCertificate {
        t,
        roots: cert_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{discriminant, qq, ratpoly_from_i64, resultant};

    fn const_model(p: i64, q: i64, r: i64) -> QuarticModel {
        QuarticModel::new(
            ratpoly_from_i64(&[p]),
            ratpoly_from_i64(&[q]),
            ratpoly_from_i64(&[r]),
        )
    }

    #[test]
    fn resolvent_roots_are_negated_squared_pair_sums() {
        // quartic with roots 1, 2, 3, -6 (sum 0): p = -25, q = 60, r = -36
        let m = const_model(-25, 60, -36);
        let res = m.resolvent_at(&qi(0));
        // pair sums: 1+2=3, 1+3=4, 2+3=5 -> resolvent roots -9, -16, -25
        for s in [-9i64, -16, -25] {
            assert!(res.eval(&qi(s)).is_zero(), "missing resolvent root {}", s);
        }
    }

    #[test]
    fn quartic_and_resolvent_share_discriminant() {
        for (p, q, r) in [(1i64, 2i64, 3i64), (-4, 7, 2), (0, 1, -1), (5, -3, 11)] {
            let m = const_model(p, q, r);
            let quartic = m.fiber(&qi(0));
            let res = m.resolvent_at(&qi(0));
            assert_eq!(
                discriminant(&quartic).unwrap(),
                discriminant(&res).unwrap(),
                "disc mismatch at ({}, {}, {})",
                p,
                q,
                r
            );
        }
    }

    #[test]
    fn disc_formula_matches_subresultant() {
        let m = QuarticModel::new(
            ratpoly_from_i64(&[1, -2]),
            ratpoly_from_i64(&[0, 3, 1]),
            ratpoly_from_i64(&[-1, 0, 0, 2]),
        );
        let d_formula = m.disc_x();
        // independent route: treat the fiber symbolically and take resultants
        // along y at several rational points
        for x in [-3i64, -1, 0, 1, 2, 5] {
            let x = qi(x);
            let f = m.fiber(&x);
            assert_eq!(d_formula.eval(&x), discriminant(&f).unwrap());
        }
        let _ = resultant(&m.p, &m.q);
    }

    #[test]
    fn twist_counts_signed_sign_changes() {
        // q = x(x-1)(x+1) = x^3 - x, p = 0, r = -1 so b1 = 4 > 0 everywhere
        let m = QuarticModel::new(
            ratpoly_from_i64(&[0]),
            ratpoly_from_i64(&[0, -1, 0, 1]),
            ratpoly_from_i64(&[-1]),
        );
        let cert = twist_parameter(&m, &qi(-2), &qi(2)).unwrap();
        // q decreasing at -1 and +1? q' = 3x^2-1: positive at both; at 0
        // q' = -1 negative. directions: +1, -1, +1 -> t = 1
        assert_eq!(cert.t, 1);
        assert_eq!(cert.roots.len(), 3);
        assert!(cert.roots.iter().all(|r| r.counted));
    }

    #[test]
    fn twist_skips_negative_b1() {
        // q = x, b1 = p^2 - 4r with p = 0, r = 1 -> b1 = -4 < 0
        let m = const_model_poly();
        let cert = twist_parameter(&m, &qi(-1), &qi(1)).unwrap();
        assert_eq!(cert.t, 0);
        assert_eq!(cert.roots.len(), 1);
        assert_eq!(cert.roots[0].b1_sign, -1);
        assert!(!cert.roots[0].counted);
    }

    fn const_model_poly() -> QuarticModel {
        QuarticModel::new(
            ratpoly_from_i64(&[0]),
            ratpoly_from_i64(&[0, 1]),
            ratpoly_from_i64(&[1]),
        )
    }

    #[test]
    fn twist_ignores_double_roots() {
        // q = x^2 (x - 1): no sign change at 0, change at 1
        let m = QuarticModel::new(
            ratpoly_from_i64(&[0]),
            ratpoly_from_i64(&[0, 0, -1, 1]),
            ratpoly_from_i64(&[-1]),
        );
        let cert = twist_parameter(&m, &qq(-1, 2), &qi(2)).unwrap();
        assert_eq!(cert.roots.len(), 2);
        assert_eq!(cert.roots[0].direction, 0);
        assert!(!cert.roots[0].counted);
        assert!(cert.roots[1].counted);
        assert_eq!(cert.t, 1);
    }
}
