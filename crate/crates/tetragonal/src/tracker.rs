//! Certified braid tracking: follow the fiber roots of a curve along a
//! polyline in the complex x-line and read off the braid.
//!
//! Roots are confined to rational boxes. A step from x0 to x1 is accepted
//! only when, for every strand, the curve polynomial is certified nonzero
//! on the boundary of a hull box for all x on the segment [x0, x1]
//! (exact interval arithmetic), so the root count in each hull stays 1
//! throughout the step. Strand order is the lexicographic order by
//! (Re, Im), i.e. the projection Re + eta Im for an infinitesimal eta > 0.
//! Two strands may exchange order during a step only when their hulls have
//! disjoint Im projections, in which case the step contributes exactly one
//! letter whose sign is determined by which strand passes above:
//! an upper strand moving toward smaller Re gives a positive generator.
//! Emitted letters index strand positions by *decreasing* (Re, Im) - the
//! canonical basis convention - so position 1 is the strand with the
//! largest Re. With this convention the full counterclockwise loop of
//! y^2 - x around the origin tracks to s1.

use crate::error::CurveError;
use crate::group::Braid;
use crate::poly::{
    isolate_all_roots, isolate_complex_roots, qi, qq, refine_box, winding_count, BiPoly, CBox,
    CInterval, GaussQ, Poly, QInterval, QQ, RatPoly, RootLoc,
};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;

/// Minimum step size, as a fraction of a leg.
const MIN_STEP_LOG2: u32 = 40;
/// Outward rounding precision for interval Horner evaluation.
const ROUND_BITS: u32 = 64;

/// Evaluate the x-coefficients of `f` at a Gaussian rational point,
/// producing the fiber polynomial in y.
pub fn fiber_at(f: &BiPoly, z: &GaussQ) -> Poly<GaussQ> {
    Poly::from_coeffs(
        f.coeffs()
            .iter()
            .map(|p| p.eval_map(|c| GaussQ::from_real(c.clone()), z))
            .collect(),
    )
}

fn q_to_f64(q: &QQ) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn box_center(b: &CBox) -> (f64, f64) {
    (q_to_f64(&b.mid_re()), q_to_f64(&b.mid_im()))
}

/// Interval evaluation of `f(x, y)` for `x` in `xiv`, `y` in `yiv`.
fn eval_biv_interval(f: &BiPoly, xiv: &CInterval, yiv: &CInterval) -> CInterval {
    let zero = CInterval::from_real(QInterval::point(BigRational::zero()));
    let mut acc = zero.clone();
    for p in f.coeffs().iter().rev() {
        let mut cx = zero.clone();
        for c in p.coeffs().iter().rev() {
            cx = cx
                .mul(xiv)
                .add(&CInterval::from_real(QInterval::point(c.clone())))
                .round_out(ROUND_BITS);
        }
        acc = acc.mul(yiv).add(&cx).round_out(ROUND_BITS);
    }
    acc
}

fn box_edges(b: &CBox) -> [CInterval; 4] {
    let re = QInterval::new(b.re_lo.clone(), b.re_hi.clone());
    let im = QInterval::new(b.im_lo.clone(), b.im_hi.clone());
    let re_lo = QInterval::point(b.re_lo.clone());
    let re_hi = QInterval::point(b.re_hi.clone());
    let im_lo = QInterval::point(b.im_lo.clone());
    let im_hi = QInterval::point(b.im_hi.clone());
    [
        CInterval::new(re.clone(), im_lo),
        CInterval::new(re_hi, im.clone()),
        CInterval::new(re, im_hi),
        CInterval::new(re_lo, im),
    ]
}

/// True when `f` is certified nonzero on the boundary of `b` for every x
/// in `xiv`. Edges are bisected adaptively when a single interval
/// evaluation is too coarse to decide.
pub(crate) fn boundary_clear(f: &BiPoly, xiv: &CInterval, b: &CBox) -> bool {
    box_edges(b).iter().all(|e| {
        let mut budget: u32 = 4000;
        edge_clear(f, xiv, e, 24, &mut budget)
    })
}

fn split_q(iv: &QInterval) -> (QInterval, QInterval) {
    let m = iv.mid();
    (
        QInterval::new(iv.lo.clone(), m.clone()),
        QInterval::new(m, iv.hi.clone()),
    )
}

fn edge_clear(f: &BiPoly, xiv: &CInterval, e: &CInterval, depth: u32, budget: &mut u32) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if !eval_biv_interval(f, xiv, e).contains_zero() {
        return true;
    }
    if depth == 0 {
        return false;
    }
    // interval dependency shrinks linearly in each coordinate width, so
    // bisect whichever of the four coordinates is widest
    let widths = [e.re.width(), e.im.width(), xiv.re.width(), xiv.im.width()];
    let k = (0..4).max_by(|&a, &b| widths[a].cmp(&widths[b])).unwrap();
    if widths[k] <= QQ::zero() {
        return false;
    }
    match k {
        0 => {
            let (a, b) = split_q(&e.re);
            edge_clear(f, xiv, &CInterval::new(a, e.im.clone()), depth - 1, budget)
                && edge_clear(f, xiv, &CInterval::new(b, e.im.clone()), depth - 1, budget)
        }
        1 => {
            let (a, b) = split_q(&e.im);
            edge_clear(f, xiv, &CInterval::new(e.re.clone(), a), depth - 1, budget)
                && edge_clear(f, xiv, &CInterval::new(e.re.clone(), b), depth - 1, budget)
        }
        2 => {
            let (a, b) = split_q(&xiv.re);
            edge_clear(f, &CInterval::new(a, xiv.im.clone()), e, depth - 1, budget)
                && edge_clear(f, &CInterval::new(b, xiv.im.clone()), e, depth - 1, budget)
        }
        _ => {
            let (a, b) = split_q(&xiv.im);
            edge_clear(f, &CInterval::new(xiv.re.clone(), a), e, depth - 1, budget)
                && edge_clear(f, &CInterval::new(xiv.re.clone(), b), e, depth - 1, budget)
        }
    }
}

pub(crate) fn hull_boxes(a: &CBox, b: &CBox) -> CBox {
    CBox::new(
        a.re_lo.clone().min(b.re_lo.clone()),
        a.re_hi.clone().max(b.re_hi.clone()),
        a.im_lo.clone().min(b.im_lo.clone()),
        a.im_hi.clone().max(b.im_hi.clone()),
    )
}

/// Positive gap between two boxes in the Re or Im direction, or zero when
/// they touch or overlap in both.
pub(crate) fn box_gap(a: &CBox, b: &CBox) -> QQ {
    let re_gap = (&b.re_lo - &a.re_hi).max(&a.re_lo - &b.re_hi);
    let im_gap = (&b.im_lo - &a.im_hi).max(&a.im_lo - &b.im_hi);
    re_gap.max(im_gap).max(QQ::zero())
}

pub(crate) fn pad_box(b: &CBox, pad: &QQ) -> CBox {
    CBox::new(
        &b.re_lo - pad,
        &b.re_hi + pad,
        &b.im_lo - pad,
        &b.im_hi + pad,
    )
}

fn re_disjoint(a: &CBox, b: &CBox) -> bool {
    a.re_hi < b.re_lo || b.re_hi < a.re_lo
}

fn im_disjoint(a: &CBox, b: &CBox) -> bool {
    a.im_hi < b.im_lo || b.im_hi < a.im_lo
}

fn contains_box(outer: &CBox, inner: &CBox) -> bool {
    outer.re_lo <= inner.re_lo
        && inner.re_hi <= outer.re_hi
        && outer.im_lo <= inner.im_lo
        && inner.im_hi <= outer.im_hi
}

/// Lexicographic (Re, then Im) comparison of two disjoint root boxes;
/// None when the boxes cannot be ordered yet.
fn lex_cmp(a: &CBox, b: &CBox) -> Option<Ordering> {
    if a.re_hi < b.re_lo {
        return Some(Ordering::Less);
    }
    if b.re_hi < a.re_lo {
        return Some(Ordering::Greater);
    }
    if a.re_lo == b.re_lo && a.re_hi == b.re_hi {
        // identical Re ranges (conjugate twins at a real fiber): Im decides
        if a.im_hi <= b.im_lo {
            return Some(Ordering::Less);
        }
        if b.im_hi <= a.im_lo {
            return Some(Ordering::Greater);
        }
    }
    None
}

/// Positions of the strands in lex order: `order[p] = strand index at
/// position p` (0-based). None when some pair is not yet separated.
pub(crate) fn lex_order(boxes: &[CBox]) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..boxes.len()).collect();
    // insertion sort with fallible comparisons
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 {
            match lex_cmp(&boxes[idx[j - 1]], &boxes[idx[j]])? {
                Ordering::Greater => {
                    idx.swap(j - 1, j);
                    j -= 1;
                }
                _ => break,
            }
        }
    }
    Some(idx)
}

/// Lex-orderable, and every pairwise gap dominates both box widths (so a
/// certified tracking step has room for padded enclosures).
fn well_separated(boxes: &[CBox]) -> bool {
    if lex_order(boxes).is_none() {
        return false;
    }
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            let need = boxes[i].width().max(boxes[j].width()) * qi(2);
            if box_gap(&boxes[i], &boxes[j]) < need {
                return false;
            }
        }
    }
    true
}

fn mirror_box(b: &CBox) -> CBox {
    CBox::new(
        b.re_lo.clone(),
        b.re_hi.clone(),
        -b.im_hi.clone(),
        -b.im_lo.clone(),
    )
}

/// Isolate the fiber roots over a real rational x into boxes that are
/// symmetric for conjugate pairs, refined until well separated.
pub fn real_fiber_boxes(g: &RatPoly) -> Result<Vec<CBox>, CurveError> {
    let gg = crate::poly::to_gauss(g);
    let sf = crate::poly::squarefree_part(g);
    enum Item {
        Real(QQ, QQ),
        Pair(CBox),
    }
    let mut items: Vec<Item> = Vec::new();
    for loc in isolate_all_roots(g) {
        match loc {
            RootLoc::Real(lo, hi) => {
                let (mut lo, mut hi) = (lo, hi);
                if sf.eval(&hi).is_zero() {
                    // rational root exactly at the interval end: recenter
                    let w = (&hi - &lo) / qi(2);
                    lo = &hi - &w;
                    hi = &hi + &w;
                }
                items.push(Item::Real(lo, hi));
            }
            RootLoc::Pair(b) => items.push(Item::Pair(b)),
        }
    }
    for _ in 0..200 {
        // build certified boxes from the current items
        let mut boxes: Vec<CBox> = Vec::new();
        for item in &mut items {
            match item {
                Item::Real(lo, hi) => loop {
                    let h = (&*hi - &*lo) / qi(2);
                    if h.is_zero() {
                        return Err(CurveError::Certification(
                            "degenerate real root interval".into(),
                        ));
                    }
                    let b = CBox::new(lo.clone(), hi.clone(), -h.clone(), h.clone());
                    if winding_count(&gg, &b) == Some(1) {
                        boxes.push(b);
                        break;
                    }
                    let (nl, nh) = crate::poly::sturm::refine_interval(&sf, lo, hi);
                    *lo = nl;
                    *hi = nh;
                },
                Item::Pair(b) => {
                    boxes.push(b.clone());
                    boxes.push(mirror_box(b));
                }
            }
        }
        if well_separated(&boxes) {
            return Ok(boxes);
        }
        // refine every item once; conjugate twins stay exact mirrors
        for item in &mut items {
            match item {
                Item::Real(lo, hi) => {
                    let (nl, nh) = crate::poly::sturm::refine_interval(&sf, lo, hi);
                    *lo = nl;
                    *hi = nh;
                }
                Item::Pair(b) => {
                    let eps = b.width() / qi(2);
                    *b = refine_box(&gg, b, &eps);
                }
            }
        }
    }
    Err(CurveError::Certification(
        "could not separate fiber roots in the Re projection".into(),
    ))
}

fn refine_until_separated(g: &Poly<GaussQ>, boxes: &mut [CBox]) -> Result<(), CurveError> {
    for _ in 0..200 {
        if well_separated(boxes) {
            return Ok(());
        }
        for b in boxes.iter_mut() {
            let eps = b.width() / qi(2);
            *b = refine_box(g, b, &eps);
        }
    }
    Err(CurveError::Certification(
        "could not separate fiber roots in the Re projection".into(),
    ))
}

/// Isolate fiber roots over an arbitrary Gaussian rational x.
pub fn fiber_boxes(f: &BiPoly, z: &GaussQ) -> Result<Vec<CBox>, CurveError> {
    let g = fiber_at(f, z);
    if z.is_real() {
        let real = RatPoly::from_coeffs(g.coeffs().iter().map(|c| c.re.clone()).collect());
        return real_fiber_boxes(&real);
    }
    let mut boxes = isolate_complex_roots(&g);
    refine_until_separated(&g, &mut boxes)?;
    Ok(boxes)
}

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

fn eval_c64(coeffs: &[C64], z: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(*c);
    }
    acc
}

/// Durand-Kerner iteration for all roots simultaneously, seeded from the
/// previous root positions. Approximate only; every result is certified
/// afterwards with exact winding numbers.
fn approx_roots(g: &Poly<GaussQ>, seeds: &[(f64, f64)]) -> Option<Vec<C64>> {
    let lc = g.coeffs().last()?;
    let lc64 = C64::new(q_to_f64(&lc.re), q_to_f64(&lc.im));
    let coeffs: Vec<C64> = g
        .coeffs()
        .iter()
        .map(|c| C64::new(q_to_f64(&c.re), q_to_f64(&c.im)).div(lc64))
        .collect();
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return None;
    }
    let mut z: Vec<C64> = seeds.iter().map(|&(a, b)| C64::new(a, b)).collect();
    for _ in 0..80 {
        let mut delta: f64 = 0.0;
        for j in 0..z.len() {
            let mut denom = C64::new(1.0, 0.0);
            for k in 0..z.len() {
                if k != j {
                    denom = denom.mul(z[j].sub(z[k]));
                }
            }
            let step = eval_c64(&coeffs, z[j]).div(denom);
            z[j] = z[j].sub(step);
            delta = delta.max(step.abs());
        }
        if delta < 1e-13 {
            break;
        }
    }
    if z.iter().all(|w| w.re.is_finite() && w.im.is_finite()) {
        Some(z)
    } else {
        None
    }
}

/// Nearest dyadic with denominator 2^bits.
fn dyadic_near(v: f64, bits: i32) -> QQ {
    let scaled = (v * (bits as f64).exp2()).round();
    QQ::new(
        num_bigint::BigInt::from(scaled as i64),
        num_bigint::BigInt::from(1u8) << bits as usize,
    )
}

/// Fast path: approximate the roots numerically, box them with small
/// dyadic coordinates, and certify each box with one exact winding count.
/// Boxes shrink adaptively until the lex order resolves (close Re parts
/// need tighter boxes than the pairwise separation suggests).
fn isolate_fast(g: &Poly<GaussQ>, prev: &[CBox]) -> Option<Vec<CBox>> {
    let seeds: Vec<(f64, f64)> = prev.iter().map(box_center).collect();
    let z = approx_roots(g, &seeds)?;
    let n = z.len();
    let mut sep = vec![f64::INFINITY; n];
    for j in 0..n {
        for k in 0..n {
            if k != j {
                sep[j] = sep[j].min(z[j].sub(z[k]).abs());
            }
        }
        if !(sep[j] > 1e-10) {
            return None;
        }
    }
    // smallest decided coordinate distance: boxes must be tighter than
    // both the Euclidean separation and any nonzero Re/Im difference
    // (f64 roots carry ~1e-14 noise, so differences below 1e-12 are
    //  treated as ties and left to the exact fallback)
    let mut min_diff = f64::INFINITY;
    for j in 0..n {
        for k in j + 1..n {
            let dre = (z[j].re - z[k].re).abs();
            let dim = (z[j].im - z[k].im).abs();
            let d = if dre > 1e-12 { dre } else { dim };
            min_diff = min_diff.min(d);
        }
    }
    for shrink in [4.0, 16.0, 64.0] {
        let mut boxes: Vec<CBox> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let r = (sep[j] / 16.0).min(min_diff / shrink);
            let hw_bits = (-r.log2()).ceil().max(1.0) as i32;
            if hw_bits > (MIN_STEP_LOG2 as i32) + 12 {
                ok = false;
                break;
            }
            let hw = QQ::new(
                num_bigint::BigInt::from(1u8),
                num_bigint::BigInt::from(1u8) << hw_bits as usize,
            );
            let cre = dyadic_near(z[j].re, hw_bits + 4);
            let cim = dyadic_near(z[j].im, hw_bits + 4);
            boxes.push(CBox::new(&cre - &hw, &cre + &hw, &cim - &hw, &cim + &hw));
        }
        if !ok {
            return None;
        }
        if !well_separated(&boxes) {
            continue;
        }
        // certify: exactly one root in each box
        if boxes.iter().all(|b| winding_count(g, b) == Some(1)) {
            return Some(boxes);
        }
        return None;
    }
    None
}

/// Try to isolate tight boxes at the new fiber near the previous ones;
/// falls back to global isolation.
fn isolate_near(g: &Poly<GaussQ>, prev: &[CBox]) -> Vec<CBox> {
    if let Some(boxes) = isolate_fast(g, prev) {
        return boxes;
    }
    isolate_near_slow(g, prev)
}

fn isolate_near_slow(g: &Poly<GaussQ>, prev: &[CBox]) -> Vec<CBox> {
    let mut pads: Vec<CBox> = Vec::with_capacity(prev.len());
    for b in prev {
        let w = b.width();
        pads.push(CBox::new(
            &b.re_lo - &w,
            &b.re_hi + &w,
            &b.im_lo - &w,
            &b.im_hi + &w,
        ));
    }
    let local_ok = pads
        .iter()
        .enumerate()
        .all(|(j, p)| {
            pads.iter().skip(j + 1).all(|q| re_disjoint(p, q) || im_disjoint(p, q))
                && winding_count(g, p) == Some(1)
        });
    if local_ok {
        pads.iter()
            .map(|p| {
                let eps = p.width() / qi(8);
                refine_box(g, p, &eps)
            })
            .collect()
    } else {
        let mut boxes = isolate_complex_roots(g);
        let _ = refine_until_separated(g, &mut boxes);
        boxes
    }
}

/// Match each new box to the nearest previous box center (bijectively).
fn match_boxes(prev: &[CBox], next: &[CBox]) -> Option<Vec<usize>> {
    let n = prev.len();
    if next.len() != n {
        return None;
    }
    let pc: Vec<(f64, f64)> = prev.iter().map(box_center).collect();
    let nc: Vec<(f64, f64)> = next.iter().map(box_center).collect();
    let mut assigned = vec![usize::MAX; n]; // prev index -> next index
    let mut used = vec![false; n];
    // greedy nearest matching over all pairs by increasing distance
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for (i, p) in pc.iter().enumerate() {
        for (j, q) in nc.iter().enumerate() {
            let d = (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);
            pairs.push((d, i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    for (_, i, j) in pairs {
        if assigned[i] == usize::MAX && !used[j] {
            assigned[i] = j;
            used[j] = true;
        }
    }
    Some(assigned)
}

struct StepResult {
    boxes: Vec<CBox>,
    letters: Vec<i32>,
}

/// One certified step from the fiber at z0 to the fiber at z1.
fn trace(msg: &str) {
    if std::env::var_os("TETRA_TRACE").is_some() {
        eprintln!("  bail: {}", msg);
    }
}

fn try_step(
    f: &BiPoly,
    z0: &GaussQ,
    z1: &GaussQ,
    cur: &[CBox],
) -> Option<StepResult> {
    let t_start = std::time::Instant::now();
    let g0 = fiber_at(f, z0);
    let g1 = fiber_at(f, z1);
    // at a real fiber, conjugate pairs share their Re exactly; only the
    // symmetric construction can order them
    let next = if z1.is_real() {
        let real = RatPoly::from_coeffs(g1.coeffs().iter().map(|c| c.re.clone()).collect());
        real_fiber_boxes(&real).ok()?
    } else {
        let mut boxes = isolate_near(&g1, cur);
        if refine_until_separated(&g1, &mut boxes).is_err() {
            trace("end fiber separation");
            return None;
        }
        boxes
    };
    trace(&format!("isolation {:?}", t_start.elapsed()));
    let t_mid = std::time::Instant::now();
    if next.len() != cur.len() {
        trace("root count");
        return None;
    }
    let matching = match_boxes(cur, &next)?;
    // hulls
    let tight: Vec<CBox> = cur
        .iter()
        .zip(matching.iter())
        .map(|(b, &m)| hull_boxes(b, &next[m]))
        .collect();
    // pad each hull so its boundary keeps a certifiable distance from the
    // roots it encloses; the pad is capped by a third of the gap to the
    // nearest other hull so the padded hulls stay pairwise separated
    let hulls: Vec<CBox> = tight
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let mut pad = h.width() / qi(2);
            for (j, other) in tight.iter().enumerate() {
                if j != i {
                    pad = pad.min(box_gap(h, other) / qi(3));
                }
            }
            pad_box(h, &pad)
        })
        .collect();
    // start count in each hull must be exactly 1
    for h in &hulls {
        if winding_count(&g0, h) != Some(1) {
            trace("hull start count");
            return None;
        }
    }
    // confinement over the whole x-step
    let xiv = CInterval::new(
        QInterval::new(
            z0.re.clone().min(z1.re.clone()),
            z0.re.clone().max(z1.re.clone()),
        ),
        QInterval::new(
            z0.im.clone().min(z1.im.clone()),
            z0.im.clone().max(z1.im.clone()),
        ),
    );
    for h in &hulls {
        if !boundary_clear(f, &xiv, h) {
            trace("confinement");
            return None;
        }
    }
    trace(&format!("confinement {:?}", t_mid.elapsed()));
    // every matched end box must sit inside its hull
    for (j, &m) in matching.iter().enumerate() {
        if !contains_box(&hulls[j], &next[m]) {
            trace("end box containment");
            return None;
        }
    }
    // pairwise separation of hulls: Re- or Im-disjoint
    for i in 0..hulls.len() {
        for j in i + 1..hulls.len() {
            if !(re_disjoint(&hulls[i], &hulls[j]) || im_disjoint(&hulls[i], &hulls[j])) {
                trace("hull separation");
                return None;
            }
        }
    }
    // orders at both ends
    let ord0 = lex_order(cur)?;
    let ordered_next = lex_order(&next)?;
    // express end order in strand indices via the matching
    let mut inv_match = vec![usize::MAX; matching.len()];
    for (i, &m) in matching.iter().enumerate() {
        inv_match[m] = i;
    }
    let ord1: Vec<usize> = ordered_next.iter().map(|&j| inv_match[j]).collect();
    // permutation between ord0 and ord1: must be a product of disjoint
    // adjacent transpositions (such crossings commute, e.g. both conjugate
    // pairs of a real fiber splitting at once)
    let n = ord0.len();
    let mut letters: Vec<i32> = Vec::new();
    let mut p = 0;
    while p < n {
        if ord0[p] == ord1[p] {
            p += 1;
            continue;
        }
        if p + 1 >= n || ord0[p] != ord1[p + 1] || ord0[p + 1] != ord1[p] {
            trace("permutation");
            return None;
        }
        let a = ord0[p]; // strand at the left position before the step
        let b = ord0[p + 1];
        // the crossing pair must be Im-separated
        let (upper, _) = if hulls[a].im_lo > hulls[b].im_hi {
            (a, b)
        } else if hulls[b].im_lo > hulls[a].im_hi {
            (b, a)
        } else {
            trace("crossing not Im-separated");
            return None;
        };
        // upper strand moving toward smaller Re is positive; positions
        // here ascend in Re, so translate to the canonical (descending)
        // index n - 1 - p
        let sign = if upper == b { 1 } else { -1 };
        letters.push(sign * ((n - 1 - p) as i32));
        p += 2;
    }
    // reorder end boxes by strand index
    let boxes: Vec<CBox> = matching.iter().map(|&m| next[m].clone()).collect();
    Some(StepResult { boxes, letters })
}

/// Track the fiber roots along a polyline of Gaussian rational points and
/// return the resulting braid. The path must avoid all singular fibers.
pub fn track_path(f: &BiPoly, path: &[GaussQ]) -> Result<Braid, CurveError> {
    if path.len() < 2 {
        return Err(CurveError::Hypothesis("path needs at least two points".into()));
    }
    let n = f.deg();
    let mut cur = fiber_boxes(f, &path[0])?;
    if cur.len() != n {
        return Err(CurveError::Certification(
            "fiber is not reduced at the start of the path".into(),
        ));
    }
    let mut letters: Vec<i32> = Vec::new();
    for leg in path.windows(2) {
        let (za, zb) = (&leg[0], &leg[1]);
        if za == zb {
            continue;
        }
        let dir = zb.clone() - za.clone();
        // t runs over [0,1] in dyadic steps
        let mut t = QQ::zero();
        let one = qi(1);
        let mut h = qq(1, 4);
        let min_h = QQ::new(1.into(), num_bigint::BigInt::from(1u128 << MIN_STEP_LOG2));
        while t < one {
            if &t + &h > one {
                h = &one - &t;
            }
            let z0 = point_on(za, &dir, &t);
            let t1 = &t + &h;
            let z1 = point_on(za, &dir, &t1);
            if std::env::var_os("TETRA_TRACE").is_some() {
                eprintln!("step t={} h={}", t, h);
            }
            match try_step(f, &z0, &z1, &cur) {
                Some(res) => {
                    letters.extend_from_slice(&res.letters);
                    cur = res.boxes;
                    t = t1;
                    h = &h * qi(2);
                    if h > qq(1, 4) {
                        h = qq(1, 4);
                    }
                }
                None => {
                    h = &h / qi(2);
                    if h < min_h {
                        return Err(CurveError::Certification(format!(
                            "step size underflow near x = {:?} (singular fiber on the path?)",
                            z0
                        )));
                    }
                }
            }
        }
    }
    Ok(Braid::from_word(n, letters))
}

fn point_on(base: &GaussQ, dir: &GaussQ, t: &QQ) -> GaussQ {
    let tq = GaussQ::from_real(t.clone());
    base.clone() + dir.clone() * tq
}

/// Polyline from the real point `a` to the real point `b` through the
/// upper half plane at height `h`. When the rectangle swept between this
/// path and the real segment [a, b] contains no singular fiber except
/// possibly real ones strictly between `a` and `b`, the tracked braid is
/// the monodromy along the upper semicircle / real segment it replaces.
pub fn upper_detour(a: &QQ, b: &QQ, h: &QQ) -> Vec<GaussQ> {
    vec![
        GaussQ::from_real(a.clone()),
        GaussQ::new(a.clone(), h.clone()),
        GaussQ::new(b.clone(), h.clone()),
        GaussQ::from_real(b.clone()),
    ]
}

/// Counterclockwise rectangle loop [l, r] x [-h, h] based at (r, 0);
/// tracks the local monodromy of a singular fiber strictly inside (l, r)
/// when no other singular fiber meets the closed rectangle.
pub fn rect_loop(l: &QQ, r: &QQ, h: &QQ) -> Vec<GaussQ> {
    vec![
        GaussQ::from_real(r.clone()),
        GaussQ::new(r.clone(), h.clone()),
        GaussQ::new(l.clone(), h.clone()),
        GaussQ::from_real(l.clone()),
        GaussQ::new(l.clone(), -h.clone()),
        GaussQ::new(r.clone(), -h.clone()),
        GaussQ::from_real(r.clone()),
    ]
}

/// Convenience: a counterclockwise polygonal loop (regular octagon with
/// rational vertices) around a real center, starting and ending at
/// center + radius.
pub fn octagon_loop(center: &QQ, radius: &QQ) -> Vec<GaussQ> {
    let dirs: [(i64, i64, i64); 8] = [
        (1, 0, 1),
        (3, 4, 5),
        (0, 1, 1),
        (-3, 4, 5),
        (-1, 0, 1),
        (-3, -4, 5),
        (0, -1, 1),
        (3, -4, 5),
    ];
    let mut pts: Vec<GaussQ> = dirs
        .iter()
        .map(|&(a, b, d)| {
            GaussQ::new(center + radius * qq(a, d), radius * qq(b, d))
        })
        .collect();
    pts.push(pts[0].clone());
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Braid;
    use crate::poly::ratpoly_from_i64;

    /// Bivariate helper: coefficients in x for each power of y.
    fn biv(coeffs_y: &[&[i64]]) -> BiPoly {
        Poly::from_coeffs(coeffs_y.iter().map(|c| ratpoly_from_i64(c)).collect())
    }

    #[test]
    fn branch_loop_of_sqrt_is_sigma1() {
        // y^2 - x around the origin, counterclockwise: s1
        let f = biv(&[&[0, -1], &[], &[1]]);
        let path = octagon_loop(&qi(0), &qi(1));
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::gen(2, 1)), "got {}", b);
    }

    #[test]
    fn clockwise_branch_loop_is_inverse() {
        let f = biv(&[&[0, -1], &[], &[1]]);
        let mut path = octagon_loop(&qi(0), &qi(1));
        path.reverse();
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::gen(2, 1).inverse()), "got {}", b);
    }

    #[test]
    fn loop_around_nothing_is_trivial() {
        let f = biv(&[&[0, -1], &[], &[1]]);
        let path = octagon_loop(&qi(5), &qi(1));
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::identity(2)), "got {}", b);
    }

    #[test]
    fn double_loop_of_node_is_full_twist() {
        // y^2 - x, twice around: s1^2
        let f = biv(&[&[0, -1], &[], &[1]]);
        let mut path = octagon_loop(&qi(0), &qi(1));
        let second = octagon_loop(&qi(0), &qi(1));
        path.extend_from_slice(&second[1..]);
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::gen(2, 1).pow(2)), "got {}", b);
    }

    #[test]
    fn cusp_loop_is_sigma_cubed() {
        // y^2 - x^3 around the origin: s1^3
        let f = biv(&[&[0, 0, 0, -1], &[], &[1]]);
        let path = octagon_loop(&qi(0), &qi(1));
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::gen(2, 1).pow(3)), "got {}", b);
    }

    #[test]
    fn four_strand_far_branch_is_sigma1() {
        // (y^2 - x)(y + 2)(y + 3): strands -3, -2 stay put; the two
        // sqrt(x) strands are the pair (1,2) in the canonical
        // (decreasing-Re) order near x = 1
        let sq = biv(&[&[0, -1], &[], &[1]]);
        let lin1 = biv(&[&[2], &[1]]);
        let lin2 = biv(&[&[3], &[1]]);
        let f = &(&sq * &lin1) * &lin2;
        let path = octagon_loop(&qi(0), &qi(1));
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&Braid::gen(4, 1)), "got {}", b);
    }

    #[test]
    fn quarter_turn_of_imaginary_quartet_is_tau() {
        // y^4 + (5+x)y^2 + xy + 4: at x = 0 the roots are +-i, +-2i; the
        // coefficient of y crosses zero increasing with p^2 - 4r = 9 > 0,
        // so the monodromy over a real segment through x = 0 is the
        // quarter-turn twist tau = s2^-1 s3 s1^-1 s2. (The x in p breaks
        // the (x,y) -> (-x,-y) symmetry so the two Re-crossings split; the
        // detour height 2/5 stays below the non-real singular fiber near
        // -0.67 + 0.46i.)
        let f = biv(&[&[4], &[0, 1], &[5, 1], &[], &[1]]);
        let path = upper_detour(&qi(-1), &qi(1), &qq(2, 5));
        let b = track_path(&f, &path).unwrap();
        assert!(b.equivalent(&crate::group::tau()), "got {}", b);
    }
}
