//! Alexander polynomial of a finitely presented group whose generators
//! all map to the same unit `t` of `Z[t^{±1}]`, via Fox calculus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::presentation::Presentation;
use crate::poly::dense::Poly;

/// An integer Laurent polynomial, stored as `t^low · (c_0 + c_1 t + …)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent { low: e, coeffs: vec![BigInt::from(c)] }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let hi = (self.low + self.coeffs.len() as i64)
            .max(other.low + other.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += c;
        }
        Laurent { low, coeffs }.normalize()
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs =
            vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent { low: self.low + other.low, coeffs }.normalize()
    }

    /// Drops the unit `t^low`, returning an ordinary integer polynomial
    /// with nonzero constant term (or zero).
    pub fn to_poly(&self) -> Poly<BigInt> {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

/// The Fox derivative matrix of the relators, with every generator sent
/// to `t`. Entry `(i, j)` is `∂r_i/∂x_j` evaluated in `Z[t^{±1}]`.
pub fn fox_matrix(p: &Presentation) -> Vec<Vec<Laurent>> {
    p.relators
        .iter()
        .map(|r| {
            let mut row = vec![Laurent::zero(); p.n_gens];
            let mut e: i64 = 0;
            for &l in r.letters() {
                let j = l.unsigned_abs() as usize - 1;
                if l > 0 {
                    row[j] = row[j].add(&Laurent::monomial(1, e));
                    e += 1;
                } else {
                    e -= 1;
                    row[j] = row[j].sub(&Laurent::monomial(1, e));
                }
            }
            row
        })
        .collect()
}

fn det(mat: &[Vec<Laurent>]) -> Laurent {
    let n = mat.len();
    if n == 0 {
        return Laurent::monomial(1, 0);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    // Cofactor expansion along the first row; the matrices here are tiny
    // (at most 3×3 for a four-generator group).
    let mut acc = Laurent::zero();
    for j in 0..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Laurent>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = mat[0][j].mul(&det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn content(f: &Poly<BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in f.coeffs() {
        let mut a = g.abs();
        let mut b = c.abs();
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        g = a;
    }
    g
}

/// Gcd of two integer polynomials (primitive-part method over `Q[t]`).
fn poly_gcd_z(f: &Poly<BigInt>, g: &Poly<BigInt>) -> Poly<BigInt> {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let to_q = |p: &Poly<BigInt>| {
        p.map_coeffs(|c| BigRational::from_integer(c.clone()))
    };
    let gq = to_q(f).gcd(&to_q(g));
    // Clear denominators and take the primitive part.
    let mut lcm = BigInt::one();
    for c in gq.coeffs() {
        let d = c.denom();
        let mut a = lcm.clone();
        let mut b = d.clone();
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        lcm = &lcm / &a * d;
    }
    let gz: Poly<BigInt> =
        gq.map_coeffs(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
    let cont = content(&gz);
    let prim = gz.map_coeffs(|c| c / &cont);
    // Carry along the gcd of the integer contents of the inputs.
    let mut a = content(f);
    let mut b = content(g);
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    prim.scale(&a)
}

/// Canonical form: nonzero constant term and positive leading coefficient.
fn canonicalize(f: Poly<BigInt>) -> Poly<BigInt> {
    if f.is_zero() {
        return f;
    }
    let shift = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut coeffs: Vec<BigInt> = f.coeffs()[shift..].to_vec();
    if coeffs.last().is_some_and(|c| c.is_negative()) {
        for c in &mut coeffs {
            *c = -&*c;
        }
    }
    Poly::from_coeffs(coeffs)
}

/// The Alexander polynomial: the gcd of the `(n-1)×(n-1)` minors of the
/// Fox derivative matrix under `x_j ↦ t`, normalized to have a nonzero
/// constant term and positive leading coefficient. Returns the zero
/// polynomial when the first elementary ideal is trivial.
pub fn alexander_polynomial(p: &Presentation) -> Poly<BigInt> {
    let n = p.n_gens;
    if n == 0 {
        return Poly::from_coeffs(vec![BigInt::one()]);
    }
    let mat = fox_matrix(p);
    let m = mat.len();
    let k = n - 1;
    if m < k {
        return Poly::from_coeffs(vec![]);
    }
    let mut g: Poly<BigInt> = Poly::from_coeffs(vec![]);
    // All k-subsets of rows and of columns.
    let rows = subsets(m, k);
    let cols = subsets(n, k);
    for rs in &rows {
        for cs in &cols {
            let sub: Vec<Vec<Laurent>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| mat[i][j].clone()).collect())
                .collect();
            let d = det(&sub).to_poly();
            if !d.is_zero() {
                g = poly_gcd_z(&g, &d);
            }
            if g.deg() == 0 && !g.is_zero() {
                // The ideal already contains a constant; the gcd can only
                // shrink, so finish cheaply.
                let c = content(&g);
                if c == BigInt::one() {
                    return canonicalize(g);
                }
            }
        }
    }
    canonicalize(g)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::free::FreeWord;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn poly_of(coeffs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trefoil_alexander_polynomial() {
        // ⟨a,b | abab⁻¹a⁻¹b⁻¹⟩: Δ(t) = t² − t + 1.
        let p = Presentation::new(2, vec![w("a1 a2 a1 a2^-1 a1^-1 a2^-1")]);
        assert_eq!(alexander_polynomial(&p), poly_of(&[1, -1, 1]));
    }

    #[test]
    fn figure_eight_alexander_polynomial() {
        // ⟨a,b | awb⁻¹w⁻¹⟩ with w = b⁻¹aba⁻¹ is the figure-eight knot
        // group; Δ(t) = t² − 3t + 1.
        let p = Presentation::new(
            2,
            vec![w("a1 a2^-1 a1 a2 a1^-1 a2^-1 a1 a2^-1 a1^-1 a2")],
        );
        assert_eq!(alexander_polynomial(&p), poly_of(&[1, -3, 1]));
    }

    #[test]
    fn unknot_alexander_polynomial_is_one() {
        let p = Presentation::new(2, vec![w("a1 a2^-1")]);
        assert_eq!(alexander_polynomial(&p), poly_of(&[1]));
    }

    #[test]
    fn fox_derivative_exponent_bookkeeping() {
        // ∂(aba⁻¹b⁻¹)/∂a = 1 − t·t⁻¹·t = 1 − t under a,b ↦ t.
        let p = Presentation::new(2, vec![w("a1 a2 a1^-1 a2^-1")]);
        let m = fox_matrix(&p);
        assert_eq!(m[0][0], Laurent::monomial(1, 0).sub(&Laurent::monomial(1, 1)));
        assert_eq!(m[0][1], Laurent::monomial(1, 1).sub(&Laurent::monomial(1, 0)));
    }
}
