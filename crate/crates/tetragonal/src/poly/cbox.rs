//! Certified complex root isolation for rational polynomials, based on
//! exact winding numbers around rectangular boxes.
//!
//! The winding number of `f` along the boundary of a box is computed as the
//! signed number of crossings of the negative real axis by `f(z(t))` as
//! `z(t)` traverses the boundary counterclockwise. Each edge gives a real
//! parameter polynomial pair `(R(t), I(t))`; crossings are the sign-changing
//! roots of `I` where `R < 0`, all decided exactly with Sturm chains.

use super::dense::Poly;
use super::gauss::GaussQ;
use super::rational::{qi, qq, RatPoly, QQ};
use super::resultant::squarefree_part;
use super::sturm::{isolate_real_roots, refine_interval, root_bound, sign_at_root, SturmChain};
use num_traits::{Signed, Zero};

/// Axis-aligned rectangle in the complex plane with rational corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CBox {
    pub re_lo: QQ,
    pub re_hi: QQ,
    pub im_lo: QQ,
    pub im_hi: QQ,
}

impl CBox {
    pub fn new(re_lo: QQ, re_hi: QQ, im_lo: QQ, im_hi: QQ) -> Self {
        assert!(re_lo < re_hi && im_lo < im_hi, "degenerate box");
        CBox {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        }
    }

    pub fn mid_re(&self) -> QQ {
        (&self.re_lo + &self.re_hi) / qi(2)
    }

    pub fn mid_im(&self) -> QQ {
        (&self.im_lo + &self.im_hi) / qi(2)
    }

    pub fn width(&self) -> QQ {
        let w = &self.re_hi - &self.re_lo;
        let h = &self.im_hi - &self.im_lo;
        if w > h {
            w
        } else {
            h
        }
    }

    /// Counterclockwise corner list.
    fn corners(&self) -> [GaussQ; 4] {
        [
            GaussQ::new(self.re_lo.clone(), self.im_lo.clone()),
            GaussQ::new(self.re_hi.clone(), self.im_lo.clone()),
            GaussQ::new(self.re_hi.clone(), self.im_hi.clone()),
            GaussQ::new(self.re_lo.clone(), self.im_hi.clone()),
        ]
    }
}

/// Lift a rational polynomial to Gaussian coefficients.
pub fn to_gauss(f: &RatPoly) -> Poly<GaussQ> {
    f.map_coeffs(|c| GaussQ::from_real(c.clone()))
}

/// Compose f with the affine segment a + t (b - a), returning the real and
/// imaginary part polynomials in the real parameter t.
fn edge_parts(f: &Poly<GaussQ>, a: &GaussQ, b: &GaussQ) -> (RatPoly, RatPoly) {
    let dir = b.clone() - a.clone();
    let seg = Poly::from_coeffs(vec![a.clone(), dir]);
    let w = f.compose(&seg);
    let n = w.coeffs().len();
    let mut re = Vec::with_capacity(n);
    let mut im = Vec::with_capacity(n);
    for c in w.coeffs() {
        re.push(c.re.clone());
        im.push(c.im.clone());
    }
    (Poly::from_coeffs(re), Poly::from_coeffs(im))
}

/// Signed crossings of the negative real axis along one edge, for t in
/// (0, 1). Returns None when a crossing cannot be certified (value on the
/// axis at a corner, or zero on the edge): the caller must move the box.
fn edge_crossings(re: &RatPoly, im: &RatPoly) -> Option<i64> {
    if im.is_zero() {
        // the whole edge maps into the real axis; any sign change of R
        // means a zero on the boundary
        if re.is_zero() {
            return None;
        }
        let chain = SturmChain::new(re);
        if chain.count_in(&qi(0), &qi(1)) > 0 || re.eval(&qi(0)).is_zero() {
            return None;
        }
        return Some(0);
    }
    // endpoints on the real axis: reject unless the value is strictly right
    for t in [qi(0), qi(1)] {
        if im.eval(&t).is_zero() && !re.eval(&t).is_positive() {
            return None;
        }
    }
    let im_sf = squarefree_part(im);
    let mut roots: Vec<(QQ, QQ)> = isolate_real_roots(&im_sf);
    // shrink intervals into the open unit interval; endpoint roots were
    // already excluded above when they matter
    let zero = qi(0);
    let one = qi(1);
    roots.retain(|(lo, hi)| !(*hi <= zero || *lo >= one));
    let mut refined = Vec::with_capacity(roots.len());
    for (mut lo, mut hi) in roots {
        for _ in 0..256 {
            if lo > zero && hi < one {
                break;
            }
            let (nl, nh) = refine_interval(&im_sf, &lo, &hi);
            lo = nl;
            hi = nh;
        }
        if !(lo > zero && hi < one) {
            // root pinned at a parameter endpoint: it was classified above
            // (value strictly right of the axis), so it cannot contribute
            continue;
        }
        refined.push((lo, hi));
    }
    // separate the intervals so that sample points between them exist
    loop {
        let mut ok = true;
        for k in 1..refined.len() {
            if refined[k - 1].1 >= refined[k].0 {
                ok = false;
            }
        }
        if ok {
            break;
        }
        for r in refined.iter_mut() {
            let (nl, nh) = refine_interval(&im_sf, &r.0, &r.1);
            *r = (nl, nh);
        }
    }

    if refined.is_empty() {
        return Some(0);
    }
    // sample signs of I strictly between consecutive roots (and strictly
    // inside (0,1) at the ends, where I may vanish at a corner)
    let mut samples = vec![&refined[0].0 / qi(2)];
    for k in 1..refined.len() {
        samples.push((&refined[k - 1].1 + &refined[k].0) / qi(2));
    }
    samples.push((&refined[refined.len() - 1].1 + &one) / qi(2));
    let signs: Vec<i8> = samples
        .iter()
        .map(|s| {
            let v = im.eval(s);
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
        // samples sit strictly between isolated roots, so this cannot
        // happen; bail out rather than certify a wrong count
        return None;
    }

    let mut total = 0i64;
    for (k, (lo, hi)) in refined.iter().enumerate() {
        let pre = signs[k];
        let post = signs[k + 1];
        if pre == 0 || post == 0 || pre == post {
            continue;
        }
        // a counterclockwise pass of f over the negative real axis has I
        // going from positive to negative, contributing +1 to the winding
        match sign_at_root(re, &im_sf, lo, hi) {
            0 => return None,
            s if s < 0 => total += pre as i64,
            _ => {}
        }
    }
    Some(total)
}

/// Number of roots of `f` (with multiplicity) strictly inside the box, or
/// None if a root lies on (or too close to) the boundary to certify.
pub fn winding_count(f: &Poly<GaussQ>, b: &CBox) -> Option<usize> {
    if f.is_zero() {
        return None;
    }
    if f.deg() == 0 {
        return Some(0);
    }
    let corners = b.corners();
    for c in &corners {
        if f.eval(c).is_zero() {
            return None;
        }
    }
    let mut total = 0i64;
    for k in 0..4 {
        let (re, im) = edge_parts(f, &corners[k], &corners[(k + 1) % 4]);
        total += edge_crossings(&re, &im)?;
    }
    if total < 0 {
        return None; // cannot happen for a holomorphic function; be safe
    }
    Some(total as usize)
}

/// Location of one root of a squarefree real polynomial: either a real
/// root given by an isolating interval, or a conjugate pair given by the
/// box of the upper root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLoc {
    Real(QQ, QQ),
    /// Box of the root with positive imaginary part; its conjugate is the
    /// mirror image.
    Pair(CBox),
}

/// Isolate the roots of the squarefree part of `f` in the open upper half
/// plane, one per box.
pub fn isolate_upper_roots(f: &RatPoly) -> Vec<CBox> {
    let sf = squarefree_part(f);
    if sf.deg() == 0 {
        return vec![];
    }
    let n_real = SturmChain::new(&sf).count_all();
    let n_pairs = (sf.deg() - n_real) / 2;
    if n_pairs == 0 {
        return vec![];
    }
    let g = to_gauss(&sf);
    let bound = root_bound(&sf);
    // find a horizontal floor that separates the upper roots from the axis
    let mut floor = qq(1, 2);
    let outer = loop {
        let b = CBox::new(-&bound - qi(1), &bound + qi(1), floor.clone(), &bound + qi(1));
        match winding_count(&g, &b) {
            Some(k) if k == n_pairs => break b,
            _ => {
                floor = floor / qi(2);
                assert!(
                    floor > qq(1, 1 << 62),
                    "failed to separate upper roots from the real axis"
                );
            }
        }
    };
    let mut done = Vec::with_capacity(n_pairs);
    let mut work = vec![(outer, n_pairs)];
    while let Some((b, k)) = work.pop() {
        if k == 1 {
            done.push(b);
            continue;
        }
        // split along the longer side, nudging the cut if it hits a root
        let wide = (&b.re_hi - &b.re_lo) >= (&b.im_hi - &b.im_lo);
        let mut num = 1i64;
        let mut den = 2i64;
        loop {
            let cut_ok = (|| {
                let (b1, b2) = if wide {
                    let cut = &b.re_lo + (&b.re_hi - &b.re_lo) * qq(num, den);
                    (
                        CBox::new(b.re_lo.clone(), cut.clone(), b.im_lo.clone(), b.im_hi.clone()),
                        CBox::new(cut, b.re_hi.clone(), b.im_lo.clone(), b.im_hi.clone()),
                    )
                } else {
                    let cut = &b.im_lo + (&b.im_hi - &b.im_lo) * qq(num, den);
                    (
                        CBox::new(b.re_lo.clone(), b.re_hi.clone(), b.im_lo.clone(), cut.clone()),
                        CBox::new(b.re_lo.clone(), b.re_hi.clone(), cut, b.im_hi.clone()),
                    )
                };
                let k1 = winding_count(&g, &b1)?;
                let k2 = winding_count(&g, &b2)?;
                Some((b1, k1, b2, k2))
            })();
            match cut_ok {
                Some((b1, k1, b2, k2)) => {
                    debug_assert_eq!(k1 + k2, k);
                    if k1 > 0 {
                        work.push((b1, k1));
                    }
                    if k2 > 0 {
                        work.push((b2, k2));
                    }
                    break;
                }
                None => {
                    // move the cut: walk through 1/3, 2/3, 1/5, 2/5, ...
                    num += 2;
                    if num >= den {
                        den += den + 1;
                        num = 1;
                    }
                    assert!(den < 1 << 40, "cannot place a root-free cut");
                }
            }
        }
    }
    done
}

/// Shrink a box known to contain exactly one root of the squarefree part
/// of `f` until its width is at most `eps`.
pub fn refine_box(f: &Poly<GaussQ>, b: &CBox, eps: &QQ) -> CBox {
    let mut cur = b.clone();
    while &cur.width() > eps {
        let wide = (&cur.re_hi - &cur.re_lo) >= (&cur.im_hi - &cur.im_lo);
        let mut num = 1i64;
        let mut den = 2i64;
        loop {
            let (b1, b2) = if wide {
                let cut = &cur.re_lo + (&cur.re_hi - &cur.re_lo) * qq(num, den);
                (
                    CBox::new(cur.re_lo.clone(), cut.clone(), cur.im_lo.clone(), cur.im_hi.clone()),
                    CBox::new(cut, cur.re_hi.clone(), cur.im_lo.clone(), cur.im_hi.clone()),
                )
            } else {
                let cut = &cur.im_lo + (&cur.im_hi - &cur.im_lo) * qq(num, den);
                (
                    CBox::new(cur.re_lo.clone(), cur.re_hi.clone(), cur.im_lo.clone(), cut.clone()),
                    CBox::new(cur.re_lo.clone(), cur.re_hi.clone(), cut, cur.im_hi.clone()),
                )
            };
            match (winding_count(f, &b1), winding_count(f, &b2)) {
                (Some(1), Some(0)) => {
                    cur = b1;
                    break;
                }
                (Some(0), Some(1)) => {
                    cur = b2;
                    break;
                }
                _ => {
                    num += 2;
                    if num >= den {
                        den += den + 1;
                        num = 1;
                    }
                    assert!(den < 1 << 40, "cannot place a root-free cut");
                }
            }
        }
    }
    cur
}

/// Squarefree part of a complex-coefficient polynomial (monic).
pub fn gauss_squarefree(f: &Poly<GaussQ>) -> Poly<GaussQ> {
    let g = f.gcd(&f.derivative());
    f.exact_div_poly(&g).monic()
}

/// A bound B such that all complex roots lie in the open disc |z| < B.
pub fn gauss_root_bound(f: &Poly<GaussQ>) -> QQ {
    assert!(f.deg() > 0);
    let lcn = f.leading().norm_sq();
    let mut m = QQ::zero();
    for i in 0..f.deg() {
        // |a_i/a_n| <= (|a_i/a_n|^2 + 1) / 2, a rational upper bound
        let t = f.coeff(i).norm_sq() / &lcn;
        let bound = (t + qi(1)) / qi(2);
        if bound > m {
            m = bound;
        }
    }
    m + qi(1)
}

/// Isolate every distinct complex root of `f` in its own box, by quadtree
/// subdivision with exact winding counts. Cuts that hit a root are nudged.
pub fn isolate_complex_roots(f: &Poly<GaussQ>) -> Vec<CBox> {
    let sf = gauss_squarefree(f);
    let n = sf.deg();
    if n == 0 {
        return vec![];
    }
    let b0 = gauss_root_bound(&sf);
    // grow the outer box until the boundary is certified, keeping the
    // four sides at incommensurate offsets so symmetric value patterns
    // (e.g. corners of z^4 - 1 on the diagonals) cannot block every try
    let mut tries = 0i64;
    let outer = loop {
        let cand = CBox::new(
            -&b0 - qq(3 * tries + 1, 3),
            &b0 + qq(5 * tries + 1, 5),
            -&b0 - qq(7 * tries + 1, 7),
            &b0 + qq(11 * tries + 1, 11),
        );
        match winding_count(&sf, &cand) {
            Some(k) if k == n => break cand,
            _ => {
                tries += 1;
                assert!(tries < 1000, "cannot certify an outer root box");
            }
        }
    };
    let mut done = Vec::with_capacity(n);
    let mut work = vec![(outer, n)];
    while let Some((b, k)) = work.pop() {
        if k == 1 {
            done.push(b);
            continue;
        }
        let wide = (&b.re_hi - &b.re_lo) >= (&b.im_hi - &b.im_lo);
        let mut num = 1i64;
        let mut den = 2i64;
        loop {
            let attempt = (|| {
                let (b1, b2) = split_box(&b, wide, num, den);
                let k1 = winding_count(&sf, &b1)?;
                let k2 = winding_count(&sf, &b2)?;
                Some((b1, k1, b2, k2))
            })();
            match attempt {
                Some((b1, k1, b2, k2)) => {
                    debug_assert_eq!(k1 + k2, k);
                    if k1 > 0 {
                        work.push((b1, k1));
                    }
                    if k2 > 0 {
                        work.push((b2, k2));
                    }
                    break;
                }
                None => {
                    num += 2;
                    if num >= den {
                        den += den + 1;
                        num = 1;
                    }
                    assert!(den < 1 << 40, "cannot place a root-free cut");
                }
            }
        }
    }
    done
}

fn split_box(b: &CBox, wide: bool, num: i64, den: i64) -> (CBox, CBox) {
    if wide {
        let cut = &b.re_lo + (&b.re_hi - &b.re_lo) * qq(num, den);
        (
            CBox::new(b.re_lo.clone(), cut.clone(), b.im_lo.clone(), b.im_hi.clone()),
            CBox::new(cut, b.re_hi.clone(), b.im_lo.clone(), b.im_hi.clone()),
        )
    } else {
        let cut = &b.im_lo + (&b.im_hi - &b.im_lo) * qq(num, den);
        (
            CBox::new(b.re_lo.clone(), b.re_hi.clone(), b.im_lo.clone(), cut.clone()),
            CBox::new(b.re_lo.clone(), b.re_hi.clone(), cut, b.im_hi.clone()),
        )
    }
}

/// All roots of the squarefree part of a real polynomial: real roots as
/// isolating intervals, nonreal ones as conjugate pairs (upper box kept).
pub fn isolate_all_roots(f: &RatPoly) -> Vec<RootLoc> {
    let sf = squarefree_part(f);
    let mut out: Vec<RootLoc> = isolate_real_roots(&sf)
        .into_iter()
        .map(|(a, b)| RootLoc::Real(a, b))
        .collect();
    for b in isolate_upper_roots(&sf) {
        out.push(RootLoc::Pair(b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::ratpoly_from_i64;

    #[test]
    fn winding_counts_roots_of_quadratic() {
        // z^2 + 1: roots at +-i
        let f = to_gauss(&ratpoly_from_i64(&[1, 0, 1]));
        let upper = CBox::new(qi(-1), qi(1), qq(1, 2), qi(2));
        assert_eq!(winding_count(&f, &upper), Some(1));
        let both = CBox::new(qi(-2), qi(2), qi(-2), qi(2));
        assert_eq!(winding_count(&f, &both), Some(2));
        let none = CBox::new(qi(3), qi(4), qi(3), qi(4));
        assert_eq!(winding_count(&f, &none), Some(0));
    }

    #[test]
    fn winding_rejects_boundary_root() {
        let f = to_gauss(&ratpoly_from_i64(&[1, 0, 1]));
        // i sits on the top edge
        let b = CBox::new(qi(-1), qi(1), qi(0), qi(1));
        assert_eq!(winding_count(&f, &b), None);
    }

    #[test]
    fn winding_with_multiplicity() {
        // (z-i)^2 (z+i)^2 = (z^2+1)^2
        let q = ratpoly_from_i64(&[1, 0, 1]);
        let f = to_gauss(&(&q * &q));
        let upper = CBox::new(qi(-1), qi(1), qq(1, 2), qi(2));
        assert_eq!(winding_count(&f, &upper), Some(2));
    }

    #[test]
    fn isolates_quartic_with_mixed_roots() {
        // (x^2-2)(x^2+3): two real, one conjugate pair
        let f = ratpoly_from_i64(&[-6, 0, 1, 0, 1]);
        let locs = isolate_all_roots(&f);
        let reals = locs
            .iter()
            .filter(|l| matches!(l, RootLoc::Real(_, _)))
            .count();
        let pairs = locs
            .iter()
            .filter(|l| matches!(l, RootLoc::Pair(_)))
            .count();
        assert_eq!(reals, 2);
        assert_eq!(pairs, 1);
        if let Some(RootLoc::Pair(b)) = locs.iter().find(|l| matches!(l, RootLoc::Pair(_))) {
            // the pair is +- i sqrt(3)
            assert!(b.re_lo < qi(0) && b.re_hi > qi(0) || b.width() < qi(1));
            assert!(b.im_lo > qi(0));
        }
    }

    #[test]
    fn quadtree_isolates_all_complex_roots() {
        // z^4 - 1: roots 1, -1, i, -i
        let f = to_gauss(&ratpoly_from_i64(&[-1, 0, 0, 0, 1]));
        let boxes = isolate_complex_roots(&f);
        assert_eq!(boxes.len(), 4);
        for b in &boxes {
            assert_eq!(winding_count(&f, b), Some(1));
        }
        // a genuinely complex-coefficient polynomial: (z - (1+i))(z - 2)
        use crate::poly::gauss::GaussQ;
        let r1 = GaussQ::new(qi(1), qi(1));
        let r2 = GaussQ::new(qi(2), qi(0));
        let g = Poly::from_coeffs(vec![r1.clone() * r2.clone(), -(r1 + r2), GaussQ::new(qi(1), qi(0))]);
        let boxes = isolate_complex_roots(&g);
        assert_eq!(boxes.len(), 2);
    }

    #[test]
    fn refine_shrinks_box() {
        let f = to_gauss(&ratpoly_from_i64(&[1, 0, 1]));
        let b = CBox::new(qi(-1), qi(1), qq(1, 2), qi(2));
        let r = refine_box(&f, &b, &qq(1, 1000));
        assert!(r.width() <= qq(1, 1000));
        // still contains i
        assert!(r.re_lo <= qi(0) && r.re_hi >= qi(0));
        assert!(r.im_lo <= qi(1) && r.im_hi >= qi(1));
    }
}
