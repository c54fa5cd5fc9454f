//! Sturm chains: exact real-root counting and isolation over the rationals.

use super::rational::{qi, RatPoly, QQ};
use super::resultant::squarefree_part;
use num_traits::{One, Signed, Zero};

/// A Sturm chain for a squarefree rational polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    pub chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Build the chain for the squarefree part of `f`.
    pub fn new(f: &RatPoly) -> Self {
        assert!(!f.is_zero(), "Sturm chain of zero polynomial");
        let f0 = squarefree_part(f);
        let mut chain = vec![f0.clone()];
        if f0.deg() > 0 {
            chain.push(f0.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-r);
            }
        }
        SturmChain { chain }
    }

    fn sign_changes_at(&self, x: &QQ) -> usize {
        let mut last = 0i8;
        let mut changes = 0usize;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    fn sign_changes_at_inf(&self, positive: bool) -> usize {
        let mut last = 0i8;
        let mut changes = 0usize;
        for p in &self.chain {
            let lc = p.leading();
            let mut s = if lc.is_positive() { 1i8 } else { -1 };
            if !positive && p.deg() % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &QQ, b: &QQ) -> usize {
        assert!(a <= b);
        self.sign_changes_at(a) - self.sign_changes_at(b)
    }

    /// Number of distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.sign_changes_at_inf(false) - self.sign_changes_at_inf(true)
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &QQ) -> usize {
        self.sign_changes_at(a) - self.sign_changes_at_inf(true)
    }

    /// Number of distinct real roots in `(-inf, b]`.
    pub fn count_below(&self, b: &QQ) -> usize {
        self.sign_changes_at_inf(false) - self.sign_changes_at(b)
    }
}

/// A rational bound `B` such that all real roots of `f` lie in `(-B, B)`:
/// the Cauchy bound `1 + max |a_i / a_n|`.
pub fn root_bound(f: &RatPoly) -> QQ {
    assert!(!f.is_zero());
    let lc = f.leading();
    let mut m = QQ::zero();
    for i in 0..f.deg() {
        let r = (f.coeff(i) / &lc).abs();
        if r > m {
            m = r;
        }
    }
    m + QQ::one()
}

/// Isolating intervals `(a, b]` for every distinct real root of `f`,
/// sorted in increasing order. Each interval contains exactly one root.
pub fn isolate_real_roots(f: &RatPoly) -> Vec<(QQ, QQ)> {
    if f.deg() == 0 {
        return vec![];
    }
    let chain = SturmChain::new(f);
    let bound = root_bound(f);
    let a = -bound.clone();
    let total = chain.count_in(&a, &bound);
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(a, bound, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / qi(2);
                let left = chain.count_in(&lo, &mid);
                // push right first so the stack pops left-to-right... order
                // is restored by the final sort anyway
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halve the width of an isolating interval for `sf` (squarefree),
/// preserving the `(a, b]` convention.
pub fn refine_interval(sf: &RatPoly, lo: &QQ, hi: &QQ) -> (QQ, QQ) {
    let mid = (lo + hi) / qi(2);
    let v = sf.eval(&mid);
    let vh = sf.eval(hi);
    if v.is_zero() {
        // shrink around the exact root
        let w = (hi - lo) / qi(4);
        return (&mid - &w, mid + w);
    }
    if (v.is_positive() && vh.is_positive()) || (v.is_negative() && vh.is_negative()) {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// Sign of `f` at the unique root of squarefree `g` in `(lo, hi]`.
/// Exact: if `g | gcd(f, g)` detects a shared root the sign is 0,
/// otherwise the interval is refined until `f` has no root inside it.
pub fn sign_at_root(f: &RatPoly, g: &RatPoly, lo: &QQ, hi: &QQ) -> i8 {
    if f.is_zero() {
        return 0;
    }
    let common = f.gcd(g);
    if common.deg() > 0 {
        let chain = SturmChain::new(&common);
        if chain.count_in(lo, hi) > 0 {
            return 0;
        }
    }
    let fchain = SturmChain::new(f);
    let (mut a, mut b) = (lo.clone(), hi.clone());
    loop {
        if fchain.count_in(&a, &b) == 0 {
            let v = f.eval(&b);
            return if v.is_positive() { 1 } else { -1 };
        }
        let (na, nb) = refine_interval(g, &a, &b);
        a = na;
        b = nb;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{qq, ratpoly_from_i64};

    #[test]
    fn counts_roots_of_cubic() {
        // x^3 - 3x  has roots -sqrt3, 0, sqrt3
        let f = ratpoly_from_i64(&[0, -3, 0, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_all(), 3);
        assert_eq!(chain.count_in(&qi(0), &qi(2)), 1);
        assert_eq!(chain.count_in(&qi(-2), &qi(0)), 2); // includes 0 at right end
    }

    #[test]
    fn isolates_quartic_roots() {
        // (x^2-2)(x^2-3)
        let f = ratpoly_from_i64(&[6, 0, -5, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 4);
        for (lo, hi) in &roots {
            assert!(lo < hi);
        }
        // intervals are disjoint and ordered
        for w in roots.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
    }

    #[test]
    fn handles_repeated_roots() {
        // (x-1)^2 (x+2)
        let f = ratpoly_from_i64(&[2, -3, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn sign_at_sqrt2() {
        let g = ratpoly_from_i64(&[-2, 0, 1]); // root sqrt2 in (1,2]
        let f = ratpoly_from_i64(&[-3, 0, 1]); // x^2-3 < 0 there
        assert_eq!(sign_at_root(&f, &g, &qi(1), &qi(2)), -1);
        let h = ratpoly_from_i64(&[-1, 0, 1]); // x^2-1 > 0 there
        assert_eq!(sign_at_root(&h, &g, &qi(1), &qi(2)), 1);
        // shared root
        let s = ratpoly_from_i64(&[0, -2, 0, 1]); // x(x^2-2)
        assert_eq!(sign_at_root(&s, &g, &qi(1), &qi(2)), 0);
        let _ = qq(1, 2);
    }
}
