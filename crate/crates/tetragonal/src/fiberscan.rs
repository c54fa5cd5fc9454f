//! Combinatorial scan of a real trigonal/tetragonal model: bring an
//! improper model to the reduced proper form, locate all singular fibers
//! of the projection, certify which pair of branches merges at each and
//! how the realness of branches changes, and classify every real segment
//! between singular fibers. The output feeds the relation assembly; all
//! discrete claims are certified with exact interval arithmetic.

use std::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CurveError;
use crate::monodromy::{LocalPoint, Transition};
use crate::poly::{
    qi, resultant, squarefree_part, to_gauss, winding_count, AlgReal, BiPoly, CBox, CInterval,
    Poly, QInterval, RatPoly, QQ,
};
use crate::resolvent::{twist_parameter, QuarticModel, TwistCertificate};
use crate::tracker::{boundary_clear, box_gap, hull_boxes, lex_order, pad_box, real_fiber_boxes};

/// A curve Σ y^i a_i(x) whose fiber over x = 0 passes through the blown-up
/// point: a_4 = λx² and x | a_3.
#[derive(Debug, Clone)]
pub struct TildeCurve {
    pub a: [RatPoly; 5],
}

/// The reduced proper model y⁴ + p y² + q y + r obtained from a tilde
/// curve, plus the data about the distinguished fiber x = 0: its node sits
/// at y = `node_y` in the reduced coordinates.
#[derive(Debug, Clone)]
pub struct ProperCurve {
    pub model: QuarticModel,
    pub node_y: QQ,
}

/// The distinguished (formerly improper) fiber of a scan input.
#[derive(Debug, Clone)]
pub struct Improper {
    pub x: QQ,
    pub node_y: QQ,
}

/// A reduced model ready to scan, with the improper-fiber bookkeeping and
/// the substitution (if any) that moved the fiber at infinity.
#[derive(Debug, Clone)]
pub struct ScanCurve {
    pub model: QuarticModel,
    pub improper: Option<Improper>,
    pub mobius_u: Option<QQ>,
}

/// Depress a monic quartic y⁴ + c3 y³ + c2 y² + c1 y + c0 over Q[x] by
/// y = Y − c3/4; returns the reduced model and the shift c3/4.
pub fn reduce_monic_quartic(
    c3: &RatPoly,
    c2: &RatPoly,
    c1: &RatPoly,
    c0: &RatPoly,
) -> (QuarticModel, RatPoly) {
    let b = c3;
    let b2 = b * b;
    let b3 = &b2 * b;
    let b4 = &b2 * &b2;
    let p = c2 - &b2.scale(&QQ::new(3.into(), 8.into()));
    let q = &(c1 - &(b * c2).scale(&QQ::new(1.into(), 2.into())))
        + &b3.scale(&QQ::new(1.into(), 8.into()));
    let r = &(c0 - &(b * c1).scale(&QQ::new(1.into(), 4.into())))
        + &(&(&b2 * c2).scale(&QQ::new(1.into(), 16.into()))
            - &b4.scale(&QQ::new(3.into(), 256.into())));
    (
        QuarticModel::new(p, q, r),
        b.scale(&QQ::new(1.into(), 4.into())),
    )
}

impl TildeCurve {
    pub fn new(a: [RatPoly; 5]) -> Self {
        TildeCurve { a }
    }

    /// The proper transform: substitute y → y/x, multiply by x², check the
    /// expected shape, and depress the resulting monic quartic. The node
    /// created over x = 0 is recorded in the depressed coordinates.
    pub fn to_proper(&self) -> Result<ProperCurve, CurveError> {
        let a4 = &self.a[4];
        if a4.degree() != Some(2) || !a4.coeff(0).is_zero() || !a4.coeff(1).is_zero() {
            return Err(CurveError::Hypothesis(
                "the y^4 coefficient must be a nonzero multiple of x^2".into(),
            ));
        }
        let lam = a4.coeff(2);
        let inv = QQ::one() / lam;
        let a: Vec<RatPoly> = self.a.iter().map(|f| f.scale(&inv)).collect();
        if !a[3].coeff(0).is_zero() {
            return Err(CurveError::Hypothesis(
                "x must divide the y^3 coefficient".into(),
            ));
        }
        // x² f(x, y/x) = y⁴ + (a3/x) y³ + a2 y² + (a1 x) y + a0 x²
        let c3 = RatPoly::from_coeffs(a[3].coeffs().iter().skip(1).cloned().collect());
        let c2 = a[2].clone();
        let c1 = a[1].shift_up(1);
        let c0 = a[0].shift_up(2);
        // nondegenerate double point at the origin of the proper transform
        let node_disc = c1.coeff(1).clone() * c1.coeff(1)
            - qi(4) * c2.coeff(0).clone() * c0.coeff(2).clone();
        if node_disc.is_zero() {
            return Err(CurveError::Hypothesis(
                "the proper transform does not acquire a node over x = 0".into(),
            ));
        }
        if c2.coeff(0).is_zero() {
            return Err(CurveError::Hypothesis(
                "the fiber over x = 0 must meet the node with multiplicity two".into(),
            ));
        }
        let (model, shift) = reduce_monic_quartic(&c3, &c2, &c1, &c0);
        Ok(ProperCurve {
            model,
            node_y: shift.coeff(0),
        })
    }
}

/// w^d · f(u − 1/w) as a polynomial in w; requires deg f ≤ d.
fn mobius_numerator(f: &RatPoly, u: &QQ, d: usize) -> RatPoly {
    assert!(f.degree().map_or(true, |k| k <= d), "degree too large");
    let lin = RatPoly::from_coeffs(vec![-QQ::one(), u.clone()]); // uw − 1
    let mut acc = RatPoly::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &lin.pow(k).scale(c).shift_up(d - k);
    }
    acc
}

impl ProperCurve {
    /// Move the fiber at infinity to a nonsingular position by the change
    /// of base w = −1/(x − u) with u a nonsingular real fiber; the fiber
    /// coordinate is rescaled by w², which is positive on real fibers and
    /// therefore preserves all realness and ordering data.
    pub fn regularize(&self, u: &QQ) -> Result<ScanCurve, CurveError> {
        if u.is_zero() {
            return Err(CurveError::Hypothesis(
                "the substitution center coincides with the distinguished fiber".into(),
            ));
        }
        let disc = self.model.disc_x();
        if disc.eval(u).is_zero() {
            return Err(CurveError::Hypothesis(
                "the substitution center is a singular fiber".into(),
            ));
        }
        let model = QuarticModel::new(
            mobius_numerator(&self.model.p, u, 4),
            mobius_numerator(&self.model.q, u, 6),
            mobius_numerator(&self.model.r, u, 8),
        );
        let new_disc = model.disc_x();
        if new_disc.degree() != Some(24) {
            return Err(CurveError::Hypothesis(
                "the fiber at infinity is singular even after the substitution".into(),
            ));
        }
        let u2 = u * u;
        Ok(ScanCurve {
            model,
            improper: Some(Improper {
                x: QQ::one() / u,
                node_y: &self.node_y / u2,
            }),
            mobius_u: Some(u.clone()),
        })
    }

    /// Use the model as is (the fiber at infinity must already be
    /// nonsingular for the global relation to apply).
    pub fn without_substitution(&self) -> ScanCurve {
        ScanCurve {
            model: self.model.clone(),
            improper: Some(Improper {
                x: QQ::zero(),
                node_y: self.node_y.clone(),
            }),
            mobius_u: None,
        }
    }
}

impl ScanCurve {
    /// A reduced proper model with no distinguished fiber (synthetic
    /// inputs and perturbation tests).
    pub fn from_model(model: QuarticModel) -> Self {
        ScanCurve {
            model,
            improper: None,
            mobius_u: None,
        }
    }
}

/// One singular fiber of the scanned model.
#[derive(Debug, Clone)]
pub struct FiberEvent {
    pub x: AlgReal,
    pub x_rational: Option<QQ>,
    /// Multiplicity of x as a discriminant root.
    pub mult: usize,
    /// The certified double points in this fiber (one or two).
    pub points: Vec<LocalPoint>,
    /// For the distinguished fiber: the canonical pair merging at the node.
    pub node_pair: Option<usize>,
    /// Certified sample abscissas bracketing the fiber.
    pub sample_left: QQ,
    pub sample_right: QQ,
}

/// The combinatorial type of a real segment between singular fibers.
#[derive(Debug, Clone)]
pub enum SegmentKind {
    FourReal,
    TwoReal { from_slot: usize, to_slot: usize },
    ZeroReal { cert: TwistCertificate },
}

#[derive(Debug, Clone)]
pub struct Segment {
    pub lo: QQ,
    pub hi: QQ,
    pub kind: SegmentKind,
}

/// The full combinatorial picture of a scanned model.
#[derive(Debug, Clone)]
pub struct CurveDiagram {
    pub model: QuarticModel,
    pub events: Vec<FiberEvent>,
    /// events.len() + 1 segments; segments[i] precedes events[i].
    pub segments: Vec<Segment>,
    /// Multiplicities of the distinct conjugate pairs of non-real
    /// discriminant roots (one entry per pair).
    pub nonreal_fibers: Vec<usize>,
    pub infinity_nonsingular: bool,
    /// At most one pair of non-real singular fibers.
    pub complete: bool,
}

fn qf64(q: &QQ) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BoxKind {
    Real,
    Upper,
    Lower,
}

fn box_kind(b: &CBox) -> BoxKind {
    if b.im_hi.is_negative() || b.im_hi.is_zero() {
        BoxKind::Lower
    } else if !b.im_lo.is_negative() {
        BoxKind::Upper
    } else {
        BoxKind::Real
    }
}

/// Canonical slot of each box: slot 1 has the largest Re (ties between
/// conjugates broken by decreasing Im).
fn canonical_slots(boxes: &[CBox]) -> Result<Vec<usize>, CurveError> {
    let order = lex_order(boxes).ok_or_else(|| {
        CurveError::Certification("fiber roots are not canonically orderable".into())
    })?;
    let n = boxes.len();
    let mut slot = vec![0usize; n];
    for (pos, &idx) in order.iter().enumerate() {
        slot[idx] = n - pos;
    }
    Ok(slot)
}

/// Canonical slot (1..=3) of the conjugate pair at a two-real sample.
fn pair_slot_at(model: &QuarticModel, x: &QQ) -> Result<usize, CurveError> {
    let boxes = real_fiber_boxes(&model.fiber(x))?;
    let slots = canonical_slots(&boxes)?;
    let mut upper = None;
    let mut lower = None;
    for (i, b) in boxes.iter().enumerate() {
        match box_kind(b) {
            BoxKind::Upper => upper = Some(slots[i]),
            BoxKind::Lower => lower = Some(slots[i]),
            BoxKind::Real => {}
        }
    }
    match (upper, lower) {
        (Some(u), Some(l)) if l == u + 1 => Ok(u),
        _ => Err(CurveError::Certification(
            "conjugate pair does not occupy adjacent canonical slots".into(),
        )),
    }
}

/// The polynomial in x whose real roots contain every abscissa where the
/// common real part of a conjugate pair of branches crosses another
/// branch. For the reduced quartic with roots {a ± bi, a, −3a} the
/// elementary symmetric functions force q = 20a³ + 2pa and
/// r = −21a⁴ − 3pa²; eliminating a yields the locus.
fn equal_re_locus(model: &QuarticModel) -> Result<RatPoly, CurveError> {
    let p = &model.p;
    let q = &model.q;
    let r = &model.r;
    let f = Poly::<RatPoly>::from_coeffs(vec![
        -q.clone(),
        p.scale(&qi(2)),
        RatPoly::zero(),
        RatPoly::constant(qi(20)),
    ]);
    let g = Poly::<RatPoly>::from_coeffs(vec![
        r.clone(),
        RatPoly::zero(),
        p.scale(&qi(3)),
        RatPoly::zero(),
        RatPoly::constant(qi(21)),
    ]);
    let res = resultant(&f, &g)
        .map_err(|e| CurveError::Certification(format!("eliminant failed: {e}")))?;
    if res.is_zero() {
        return Err(CurveError::Hypothesis(
            "the equal-real-part locus is degenerate".into(),
        ));
    }
    Ok(res)
}

struct Cluster {
    /// 1-based canonical pair index: the cluster occupies slots
    /// (pair, pair + 1).
    pair: usize,
    n_real: usize,
    /// Index into `centers` (0 when centers are implicit).
    center: usize,
}

/// Certify, at the rational sample `x_hat`, which strands merge as x
/// approaches `x_inner`: isolate the four strands, group them into the
/// candidate clusters, and verify by winding counts plus interval
/// non-vanishing of f on the region boundaries over the whole x range
/// that the grouping is the true limit partition.
fn certify_side(
    model: &QuarticModel,
    f_bi: &BiPoly,
    x_inner: &QQ,
    x_hat: &QQ,
    centers: &[AlgReal],
    two_clusters: bool,
) -> Result<Vec<Cluster>, CurveError> {
    let g = model.fiber(x_hat);
    let gg = to_gauss(&g);
    let boxes = real_fiber_boxes(&g)?;
    if boxes.len() != 4 {
        return Err(CurveError::Certification(
            "expected four strands in the fiber".into(),
        ));
    }
    let slots = canonical_slots(&boxes)?;
    // box index at each canonical position 1..=4
    let mut at = [0usize; 5];
    for (i, &s) in slots.iter().enumerate() {
        at[s] = i;
    }
    // candidate partition into clusters of canonical positions
    let groups: Vec<Vec<usize>> = if two_clusters {
        vec![vec![at[1], at[2]], vec![at[3], at[4]]]
    } else {
        // the adjacent pair with minimal gap
        let mut best = 1usize;
        let mut best_gap: Option<QQ> = None;
        for k in 1..=3 {
            let gap = box_gap(&boxes[at[k]], &boxes[at[k + 1]]);
            if best_gap.as_ref().map_or(true, |b| gap < *b) {
                best = k;
                best_gap = Some(gap);
            }
        }
        let mut rest: Vec<usize> = (1..=4).filter(|&s| s != best && s != best + 1).collect();
        rest.sort_unstable();
        vec![
            vec![at[best], at[best + 1]],
            vec![at[rest[0]]],
            vec![at[rest[1]]],
        ]
    };
    // regions: padded hulls
    let mut regions: Vec<(CBox, usize)> = Vec::new();
    for grp in &groups {
        let mut hull = boxes[grp[0]].clone();
        for &i in &grp[1..] {
            hull = hull_boxes(&hull, &boxes[i]);
        }
        let mut min_gap: Option<QQ> = None;
        for (i, b) in boxes.iter().enumerate() {
            if grp.contains(&i) {
                continue;
            }
            let gap = box_gap(&hull, b);
            if min_gap.as_ref().map_or(true, |m| gap < *m) {
                min_gap = Some(gap);
            }
        }
        let pad = min_gap.unwrap_or_else(|| qi(1)) / qi(4);
        if pad.is_zero() {
            return Err(CurveError::Certification(
                "cluster hulls are not separated".into(),
            ));
        }
        regions.push((pad_box(&hull, &pad), grp.len()));
    }
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            if box_gap(&regions[i].0, &regions[j].0).is_zero() {
                return Err(CurveError::Certification(
                    "cluster regions overlap".into(),
                ));
            }
        }
    }
    let (xa, xb) = if x_inner <= x_hat {
        (x_inner.clone(), x_hat.clone())
    } else {
        (x_hat.clone(), x_inner.clone())
    };
    let xiv = CInterval::from_real(QInterval::new(xa, xb));
    for (region, expected) in &regions {
        if winding_count(&gg, region) != Some(*expected) {
            return Err(CurveError::Certification(
                "winding count does not match the cluster size".into(),
            ));
        }
        if !boundary_clear(f_bi, &xiv, region) {
            return Err(CurveError::Certification(
                "could not certify strand confinement up to the fiber".into(),
            ));
        }
    }
    // build the cluster records for the 2-element groups
    let mut clusters = Vec::new();
    for (gi, grp) in groups.iter().enumerate() {
        if grp.len() != 2 {
            continue;
        }
        let (s0, s1) = (slots[grp[0]].min(slots[grp[1]]), slots[grp[0]].max(slots[grp[1]]));
        if s1 != s0 + 1 {
            return Err(CurveError::Certification(
                "merging strands are not canonically adjacent".into(),
            ));
        }
        let kinds = (box_kind(&boxes[grp[0]]), box_kind(&boxes[grp[1]]));
        let n_real = match kinds {
            (BoxKind::Real, BoxKind::Real) => 2,
            (BoxKind::Upper, BoxKind::Lower) | (BoxKind::Lower, BoxKind::Upper) => 0,
            _ => {
                return Err(CurveError::Certification(
                    "merging pair is not closed under conjugation".into(),
                ))
            }
        };
        // match the cluster to its limit center
        let center = if centers.len() <= 1 {
            0
        } else {
            let region = &regions[gi].0;
            let mut found = None;
            for (ci, c) in centers.iter().enumerate() {
                if c.cmp_rational(&region.re_lo) == Ordering::Greater
                    && c.cmp_rational(&region.re_hi) == Ordering::Less
                {
                    found = Some(ci);
                    break;
                }
            }
            found.ok_or_else(|| {
                CurveError::Certification("cluster matches no limit double point".into())
            })?
        };
        clusters.push(Cluster {
            pair: s0,
            n_real,
            center,
        });
    }
    clusters.sort_by_key(|c| c.center);
    Ok(clusters)
}

/// Assign Milnor numbers to the limit double points of one singular fiber.
fn assign_mu(
    mult: usize,
    centers: &[AlgReal],
    node_y: Option<&QQ>,
) -> Result<(Vec<usize>, Option<usize>), CurveError> {
    match (centers.len(), node_y) {
        (1, None) => Ok((vec![mult - 1], None)),
        (1, Some(ny)) => {
            if centers[0].cmp_rational(ny) != Ordering::Equal {
                return Err(CurveError::Hypothesis(
                    "the distinguished fiber is singular away from its node only".into(),
                ));
            }
            if mult != 2 {
                return Err(CurveError::Hypothesis(
                    "expected a second merging point in the distinguished fiber".into(),
                ));
            }
            Ok((vec![1], Some(0)))
        }
        (2, Some(ny)) => {
            let node_idx = centers
                .iter()
                .position(|c| c.cmp_rational(ny) == Ordering::Equal)
                .ok_or_else(|| {
                    CurveError::Hypothesis(
                        "no merging point of the distinguished fiber matches the node".into(),
                    )
                })?;
            if mult < 3 {
                return Err(CurveError::Hypothesis(
                    "inconsistent discriminant multiplicity at the distinguished fiber".into(),
                ));
            }
            let mut mus = vec![0usize; 2];
            mus[node_idx] = 1;
            mus[1 - node_idx] = mult - 3;
            Ok((mus, Some(node_idx)))
        }
        (2, None) => Err(CurveError::Hypothesis(
            "cannot split Milnor numbers between two merging points of an ordinary fiber".into(),
        )),
        _ => Err(CurveError::Hypothesis(
            "unsupported merging pattern in a singular fiber".into(),
        )),
    }
}

fn certify_event(
    model: &QuarticModel,
    f_bi: &BiPoly,
    x: &AlgReal,
    mult: usize,
    sample_left: &QQ,
    sample_right: &QQ,
    node_y: Option<&QQ>,
) -> Result<FiberEvent, CurveError> {
    let x_rational = x.is_rational();
    // limit double points of the fiber (available when x is rational)
    let centers: Vec<AlgReal> = if let Some(xr) = &x_rational {
        let g = model.fiber(xr);
        let h = g.gcd(&g.derivative());
        if h.deg() == 0 {
            return Err(CurveError::Certification(
                "discriminant root with a squarefree fiber".into(),
            ));
        }
        if h.gcd(&h.derivative()).deg() > 0 {
            return Err(CurveError::Hypothesis(
                "fiber has a point of multiplicity greater than two".into(),
            ));
        }
        if h.deg() > 2 {
            return Err(CurveError::Hypothesis(
                "more than two double points in one fiber".into(),
            ));
        }
        let roots = AlgReal::roots_of(&h);
        if roots.len() != h.deg() {
            return Err(CurveError::Hypothesis(
                "conjugate non-real double points in a real fiber are unsupported".into(),
            ));
        }
        roots
    } else {
        if node_y.is_some() {
            return Err(CurveError::Hypothesis(
                "the distinguished fiber must be rational".into(),
            ));
        }
        Vec::new()
    };
    let n_points = centers.len().max(1);
    let (mus, node_idx) = if centers.is_empty() {
        (vec![mult - 1], None)
    } else {
        assign_mu(mult, &centers, node_y)?
    };
    let two_clusters = n_points == 2;

    let mut xr = x.clone();
    let x_lo_bound = |xr: &AlgReal| -> QQ {
        x_rational.clone().unwrap_or_else(|| xr.lo.clone())
    };
    let x_hi_bound = |xr: &AlgReal| -> QQ {
        x_rational.clone().unwrap_or_else(|| xr.hi.clone())
    };

    let mut left = sample_left.clone();
    let mut right = sample_right.clone();
    let mut result = None;
    for _attempt in 0..8 {
        let try_sides = (|| -> Result<(Vec<Cluster>, Vec<Cluster>), CurveError> {
            let r = certify_side(model, f_bi, &x_hi_bound(&xr), &right, &centers, two_clusters)?;
            let l = certify_side(model, f_bi, &x_lo_bound(&xr), &left, &centers, two_clusters)?;
            Ok((l, r))
        })();
        match try_sides {
            Ok(lr) => {
                result = Some(lr);
                break;
            }
            Err(_) => {
                // move the samples closer to the fiber and sharpen x
                xr.refine();
                xr.refine();
                left = (&left + &xr.lo) / qi(2);
                right = (&right + &xr.hi) / qi(2);
            }
        }
    }
    let (lc, rc) = result.ok_or_else(|| {
        CurveError::Certification(format!(
            "could not certify the merging pattern at x ≈ {:.6}",
            x.to_f64()
        ))
    })?;
    if lc.len() != n_points || rc.len() != n_points {
        return Err(CurveError::Certification(
            "cluster count differs from the number of double points".into(),
        ));
    }
    let mut points = Vec::with_capacity(n_points);
    let mut node_pair = None;
    for k in 0..n_points {
        if lc[k].pair != rc[k].pair {
            return Err(CurveError::Hypothesis(
                "merging pair occupies different canonical slots on the two sides".into(),
            ));
        }
        let transition =
            Transition::from_counts(lc[k].n_real, rc[k].n_real).ok_or_else(|| {
                CurveError::Certification("inconsistent realness counts at a fiber".into())
            })?;
        let mu = mus[k];
        if (mu % 2 == 0) != transition.is_even_type() {
            return Err(CurveError::Certification(format!(
                "realness transition {:?} contradicts Milnor number {}",
                transition, mu
            )));
        }
        if node_idx == Some(k) {
            node_pair = Some(rc[k].pair);
        }
        points.push(LocalPoint {
            mu,
            pair: rc[k].pair,
            transition,
        });
    }
    if two_clusters {
        let mut pairs: Vec<usize> = points.iter().map(|p| p.pair).collect();
        pairs.sort_unstable();
        if pairs != [1, 3] {
            return Err(CurveError::Hypothesis(
                "two merging pairs must occupy slots (1,2) and (3,4)".into(),
            ));
        }
    }
    Ok(FiberEvent {
        x: x.clone(),
        x_rational,
        mult,
        points,
        node_pair,
        sample_left: left,
        sample_right: right,
    })
}

struct Mark {
    root: AlgReal,
    /// Index into the event list when this mark is a singular fiber.
    event: Option<usize>,
}

fn insert_mark(marks: &mut Vec<Mark>, root: AlgReal, event: Option<usize>) {
    for m in marks.iter() {
        if m.root.cmp_alg(&root) == Ordering::Equal {
            return; // singular fibers take precedence over other landmarks
        }
    }
    marks.push(Mark { root, event });
}

/// Scan a reduced model: certified singular-fiber events plus segment
/// classification.
pub fn scan(sc: &ScanCurve) -> Result<CurveDiagram, CurveError> {
    let model = &sc.model;
    let f_bi = model.as_bipoly();
    let disc = model.disc_x();
    if disc.is_zero() {
        return Err(CurveError::Hypothesis(
            "the discriminant vanishes identically (non-reduced curve)".into(),
        ));
    }
    let infinity_nonsingular = disc.degree() == Some(24);
    let factors = squarefree_part_factors(&disc)?;
    let mut real_events: Vec<(AlgReal, usize)> = Vec::new();
    let mut nonreal_fibers: Vec<usize> = Vec::new();
    for (g, m) in &factors {
        let roots = AlgReal::roots_of(g);
        let pairs = (g.deg() - roots.len()) / 2;
        for _ in 0..pairs {
            nonreal_fibers.push(*m);
        }
        for r in roots {
            real_events.push((r, *m));
        }
    }
    real_events.sort_by(|a, b| a.0.cmp_alg(&b.0));

    // landmark set: singular fibers, roots of q, equal-Re crossings
    let mut marks: Vec<Mark> = Vec::new();
    for (i, (root, _)) in real_events.iter().enumerate() {
        insert_mark(&mut marks, root.clone(), Some(i));
    }
    if !model.q.is_zero() && model.q.deg() >= 1 {
        for r in AlgReal::roots_of(&squarefree_part(&model.q)) {
            insert_mark(&mut marks, r, None);
        }
    }
    let locus = equal_re_locus(model)?;
    if locus.deg() >= 1 {
        for r in AlgReal::roots_of(&squarefree_part(&locus)) {
            insert_mark(&mut marks, r, None);
        }
    }
    marks.sort_by(|a, b| a.root.cmp_alg(&b.root));
    // refine until strictly disjoint
    for _ in 0..256 {
        let ok = marks
            .windows(2)
            .all(|w| w[0].root.hi < w[1].root.lo);
        if ok {
            break;
        }
        for m in marks.iter_mut() {
            m.root.refine();
        }
    }
    if !marks.windows(2).all(|w| w[0].root.hi < w[1].root.lo) {
        return Err(CurveError::Certification(
            "could not separate the landmark abscissas".into(),
        ));
    }

    // samples bracketing each singular fiber, biased toward the fiber
    let mut samples: Vec<(QQ, QQ)> = Vec::with_capacity(real_events.len());
    let mark_pos: Vec<usize> = {
        let mut v = Vec::new();
        for (mi, m) in marks.iter().enumerate() {
            if m.event.is_some() {
                v.push(mi);
            }
        }
        v
    };
    for (k, &mi) in mark_pos.iter().enumerate() {
        let root = &marks[mi].root;
        let left = if mi == 0 {
            &root.lo - qi(1)
        } else {
            let gap = &root.lo - &marks[mi - 1].root.hi;
            &root.lo - gap / qi(4)
        };
        let right = if mi + 1 == marks.len() {
            &root.hi + qi(1)
        } else {
            let gap = &marks[mi + 1].root.lo - &root.hi;
            &root.hi + gap / qi(4)
        };
        debug_assert_eq!(marks[mi].event, Some(k));
        samples.push((left, right));
    }
    let r_left = marks
        .first()
        .map(|m| &m.root.lo - qi(1))
        .unwrap_or_else(|| qi(-1));
    let r_right = marks
        .last()
        .map(|m| &m.root.hi + qi(1))
        .unwrap_or_else(|| qi(1));

    // events
    let mut events = Vec::with_capacity(real_events.len());
    let mut improper_found = sc.improper.is_none();
    for (i, (root, mult)) in real_events.iter().enumerate() {
        let node_y = sc.improper.as_ref().and_then(|imp| {
            if root.cmp_rational(&imp.x) == Ordering::Equal {
                Some(&imp.node_y)
            } else {
                None
            }
        });
        if node_y.is_some() {
            improper_found = true;
        }
        let ev = certify_event(
            model,
            &f_bi,
            root,
            *mult,
            &samples[i].0,
            &samples[i].1,
            node_y,
        )?;
        events.push(ev);
    }
    if !improper_found {
        return Err(CurveError::Hypothesis(
            "the distinguished fiber is not a singular fiber of the model".into(),
        ));
    }

    // segments between (and around) the singular fibers
    let mut bounds: Vec<(QQ, QQ)> = Vec::new();
    let mut lo = r_left;
    for ev in &events {
        bounds.push((lo.clone(), ev.sample_left.clone()));
        lo = ev.sample_right.clone();
    }
    bounds.push((lo, r_right));
    let mut segments = Vec::with_capacity(bounds.len());
    for (lo, hi) in bounds {
        let n_real = model.real_roots_at(&lo);
        let kind = match n_real {
            4 => SegmentKind::FourReal,
            0 => SegmentKind::ZeroReal {
                cert: twist_parameter(model, &lo, &hi)?,
            },
            2 => SegmentKind::TwoReal {
                from_slot: pair_slot_at(model, &lo)?,
                to_slot: pair_slot_at(model, &hi)?,
            },
            _ => {
                return Err(CurveError::Certification(
                    "odd real root count inside a segment".into(),
                ))
            }
        };
        segments.push(Segment { lo, hi, kind });
    }

    let complete = nonreal_fibers.len() <= 1;
    Ok(CurveDiagram {
        model: model.clone(),
        events,
        segments,
        nonreal_fibers,
        infinity_nonsingular,
        complete,
    })
}

fn squarefree_part_factors(disc: &RatPoly) -> Result<Vec<(RatPoly, usize)>, CurveError> {
    crate::poly::squarefree_decompose(disc)
        .map_err(|e| CurveError::Certification(format!("squarefree decomposition failed: {e}")))
        .map(|v| v.into_iter().filter(|(g, _)| g.deg() >= 1).collect())
}

impl Segment {
    /// The braid carried by this segment.
    pub fn braid(&self) -> crate::group::Braid {
        use crate::monodromy::{gamma_two_real, gamma_zero_real};
        match &self.kind {
            SegmentKind::FourReal => crate::group::Braid::identity(4),
            SegmentKind::TwoReal { from_slot, to_slot } => gamma_two_real(*from_slot, *to_slot),
            SegmentKind::ZeroReal { cert } => gamma_zero_real(cert.t),
        }
    }
}

impl CurveDiagram {
    pub fn fiber_beta(&self, i: usize) -> crate::group::Braid {
        crate::monodromy::fiber_beta_lambda(&self.events[i].points).0
    }

    pub fn fiber_lambda(&self, i: usize) -> crate::group::Braid {
        crate::monodromy::fiber_beta_lambda(&self.events[i].points).1
    }

    pub fn slope(&self, i: usize) -> crate::group::FreeWord {
        crate::monodromy::slope_for(self.events[i].node_pair)
    }

    /// γ₀ β₁ γ₁ ⋯ β_r γ_r: the monodromy along the real axis with small
    /// upper detours at the singular fibers.
    pub fn real_chain(&self) -> crate::group::Braid {
        let mut b = self.segments[0].braid();
        for i in 0..self.events.len() {
            b = b.then(&self.fiber_beta(i)).then(&self.segments[i + 1].braid());
        }
        b
    }

    /// A height certified to keep upper detours below every non-real
    /// discriminant root (None when there are none to avoid).
    pub fn safe_height(&self) -> Option<QQ> {
        let disc = self.model.disc_x();
        let sf = squarefree_part(&disc);
        let boxes = crate::poly::isolate_upper_roots(&sf);
        let mut h: Option<QQ> = None;
        for mut b in boxes {
            // refine until the lower Im bound is positive
            let gg = to_gauss(&sf);
            while !b.im_lo.is_positive() {
                let eps = b.width() / qi(2);
                b = crate::poly::refine_box(&gg, &b, &eps);
            }
            if h.as_ref().map_or(true, |cur| b.im_lo < *cur) {
                h = Some(b.im_lo.clone());
            }
        }
        h.map(|v| v / qi(2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratpoly_from_i64 as rp;

    /// (y² − x)(y − 2)(y + 3), depressed.
    fn crossing_model() -> QuarticModel {
        // (y² − x)(y² + y − 6) = y⁴ + y³ − (6 + x) y² − x y + 6x
        let (model, _) = reduce_monic_quartic(
            &rp(&[1]),
            &rp(&[-6, -1]),
            &rp(&[0, -1]),
            &rp(&[0, 6]),
        );
        model
    }

    #[test]
    fn scan_crossing_model() {
        let sc = ScanCurve::from_model(crossing_model());
        let d = scan(&sc).unwrap();
        assert_eq!(d.events.len(), 3);
        assert!(d.nonreal_fibers.is_empty());
        assert!(d.complete);
        // x = 0: the conjugate pair becomes real, pair (2,3)
        let e0 = &d.events[0];
        assert_eq!(e0.x_rational, Some(QQ::zero()));
        assert_eq!(e0.points.len(), 1);
        assert_eq!(e0.points[0].mu, 0);
        assert_eq!(e0.points[0].pair, 2);
        assert_eq!(e0.points[0].transition, Transition::RealPairAppears);
        // x = 4: branches √x and 2 cross, slots (1,2)
        let e1 = &d.events[1];
        assert_eq!(e1.x_rational, Some(qi(4)));
        assert_eq!(e1.points[0].mu, 1);
        assert_eq!(e1.points[0].pair, 1);
        assert_eq!(e1.points[0].transition, Transition::RealToReal);
        // x = 9: branches −√x and −3 cross, slots (3,4)
        let e2 = &d.events[2];
        assert_eq!(e2.x_rational, Some(qi(9)));
        assert_eq!(e2.points[0].mu, 1);
        assert_eq!(e2.points[0].pair, 3);
        assert_eq!(e2.points[0].transition, Transition::RealToReal);
        // segments: 2-real with the pair parked at slot (2,3), then all real
        match &d.segments[0].kind {
            SegmentKind::TwoReal { from_slot, to_slot } => {
                assert_eq!((*from_slot, *to_slot), (2, 2));
            }
            k => panic!("unexpected first segment {k:?}"),
        }
        for s in &d.segments[1..] {
            assert!(matches!(s.kind, SegmentKind::FourReal));
        }
        // γ's are trivial, β's are id (A₀), σ1⁻¹ and σ3⁻¹
        let expect = crate::group::Braid::parse(4, "s1^-1 s3^-1").unwrap();
        assert!(d.real_chain().equivalent(&expect));
    }

    /// A tilde curve whose proper transform is
    /// (y² − xy − 2x²)(y² + (4 + x)y + (x + 5)).
    fn tilde_example() -> TildeCurve {
        // product: y⁴ + 4y³ + (5 − 3x − 2x²) y² + (−x² − 9x²… ) — built
        // here coefficient by coefficient from the factorization
        let f1 = [rp(&[0, 0, -2]), rp(&[0, -1]), rp(&[1])]; // y² − xy − 2x²
        let f2 = [rp(&[5, 1]), rp(&[4, 1]), rp(&[1])]; // y² + (4+x)y + (x+5)
        let mut prod = [
            RatPoly::zero(),
            RatPoly::zero(),
            RatPoly::zero(),
            RatPoly::zero(),
            RatPoly::zero(),
        ];
        for (i, a) in f1.iter().enumerate() {
            for (j, b) in f2.iter().enumerate() {
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        // tilde coefficients: ã = [c0/x², c1/x, c2, c3·x, x²]
        let c0 = RatPoly::from_coeffs(prod[0].coeffs().iter().skip(2).cloned().collect());
        let c1 = RatPoly::from_coeffs(prod[1].coeffs().iter().skip(1).cloned().collect());
        assert_eq!(prod[0].coeff(0), QQ::zero());
        assert_eq!(prod[0].coeff(1), QQ::zero());
        assert_eq!(prod[1].coeff(0), QQ::zero());
        TildeCurve::new([c0, c1, prod[2].clone(), prod[3].shift_up(1), rp(&[0, 0, 1])])
    }

    #[test]
    fn tilde_to_proper_records_node() {
        let pc = tilde_example().to_proper().unwrap();
        // shift = c3/4 = 1, so the node over x = 0 sits at Y = 1
        assert_eq!(pc.node_y, qi(1));
        // the model must be singular over x = 0
        let disc = pc.model.disc_x();
        assert!(disc.eval(&QQ::zero()).is_zero());
    }

    #[test]
    fn scan_tilde_example() {
        let pc = tilde_example().to_proper().unwrap();
        let sc = pc.without_substitution();
        let d = scan(&sc).unwrap();
        // distinguished fiber: a plain node, merging the two branches that
        // stay near Y = 1 while the far pair sits near Y = −2 ± i
        let imp = d
            .events
            .iter()
            .position(|e| e.x_rational == Some(QQ::zero()))
            .expect("distinguished fiber present");
        let e = &d.events[imp];
        assert_eq!(e.mult, 2);
        assert_eq!(e.points.len(), 1);
        assert_eq!(e.points[0].mu, 1);
        assert_eq!(e.points[0].pair, 1);
        assert_eq!(e.node_pair, Some(1));
        assert_eq!(d.slope(imp).to_string(), "a1 a2");
        // multiplicity bookkeeping: Σ (μ + 1) = multiplicity at each fiber
        for ev in &d.events {
            let s: usize = ev.points.iter().map(|p| p.mu + 1).sum();
            assert_eq!(s, ev.mult);
        }
        // the tangency fibers x² + 4x − 4 = 0 are irrational
        assert!(d.events.iter().any(|e| e.x_rational.is_none()));
    }

    #[test]
    fn mobius_preserves_singular_fibers() {
        let pc = tilde_example().to_proper().unwrap();
        let disc0 = pc.model.disc_x();
        let sc = pc.regularize(&qi(-1)).unwrap();
        let disc1 = sc.model.disc_x();
        assert_eq!(disc1.degree(), Some(24));
        // x = 0 maps to w = 1/u = −1; disc must vanish there
        assert!(disc1.eval(&qi(-1)).is_zero());
        // a sample singular fiber x₀ maps to −1/(x₀ − u)
        for r in AlgReal::roots_of(&squarefree_part(&disc0)) {
            if let Some(x0) = r.is_rational() {
                let w = -QQ::one() / (&x0 - &qi(-1));
                assert!(
                    disc1.eval(&w).is_zero(),
                    "image of singular fiber {x0} is not singular"
                );
            }
        }
    }

    #[test]
    fn scan_rejects_nonreduced_input() {
        // (y² − x)² has identically vanishing discriminant
        let model = QuarticModel::new(rp(&[0, -2]), RatPoly::zero(), rp(&[0, 0, 1]));
        let sc = ScanCurve::from_model(model);
        assert!(matches!(scan(&sc), Err(CurveError::Hypothesis(_))));
    }

    #[test]
    fn tilde_shape_violations_are_reported() {
        // a4 not a multiple of x²
        let bad = TildeCurve::new([
            rp(&[1]),
            rp(&[1]),
            rp(&[1]),
            rp(&[0, 1]),
            rp(&[1, 0, 1]),
        ]);
        assert!(matches!(bad.to_proper(), Err(CurveError::Hypothesis(_))));
        // y³ coefficient not divisible by x
        let bad = TildeCurve::new([
            rp(&[1]),
            rp(&[1]),
            rp(&[1]),
            rp(&[1, 1]),
            rp(&[0, 0, 1]),
        ]);
        assert!(matches!(bad.to_proper(), Err(CurveError::Hypothesis(_))));
    }
}
