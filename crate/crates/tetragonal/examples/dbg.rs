use tetragonal::poly::*;

fn main() {
    // (y^2 - x)(y + 2)(y + 3) expanded: y^4 + 5y^3 + (6 - x)y^2 - 5xy - 6x
    let f: BiPoly = Poly::from_coeffs(vec![
        ratpoly_from_i64(&[0, -6]),
        ratpoly_from_i64(&[0, -5]),
        ratpoly_from_i64(&[6, -1]),
        ratpoly_from_i64(&[5]),
        ratpoly_from_i64(&[1]),
    ]);
    // hull 0 from the trace
    let re = QInterval::new(qq(-399, 128), qq(-371, 128));
    let im = QInterval::new(qq(-7, 64), qq(7, 64));
    // x near the first octagon leg start
    let xiv = CInterval::new(
        QInterval::new(qq(9, 10), qi(1)),
        QInterval::new(qi(0), qq(1, 5)),
    );
    // top edge: re interval, im = 7/64
    let edges = [
        CInterval::new(re.clone(), QInterval::point(qq(-7, 64))),
        CInterval::new(QInterval::point(qq(-371, 128)), im.clone()),
        CInterval::new(re.clone(), QInterval::point(qq(7, 64))),
        CInterval::new(QInterval::point(qq(-399, 128)), im.clone()),
    ];
    for (k, e) in edges.iter().enumerate() {
        let ok = edge_clear_dbg(&f, &xiv, e, 12);
        println!("edge {}: clear={}", k, ok);
    }
}

fn edge_clear_dbg(f: &BiPoly, xiv: &CInterval, e: &CInterval, depth: u32) -> bool {
    use num_traits::Zero;
    if !eval_biv_interval_dbg(f, xiv, e).contains_zero() {
        return true;
    }
    if depth == 0 {
        println!(
            "  depth exhausted at re [{}, {}] im [{}, {}]",
            e.re.lo, e.re.hi, e.im.lo, e.im.hi
        );
        return false;
    }
    if e.re.width() > QQ::zero() {
        let m = e.re.mid();
        let left = CInterval::new(QInterval::new(e.re.lo.clone(), m.clone()), e.im.clone());
        let right = CInterval::new(QInterval::new(m, e.re.hi.clone()), e.im.clone());
        edge_clear_dbg(f, xiv, &left, depth - 1) && edge_clear_dbg(f, xiv, &right, depth - 1)
    } else if e.im.width() > QQ::zero() {
        let m = e.im.mid();
        let lo = CInterval::new(e.re.clone(), QInterval::new(e.im.lo.clone(), m.clone()));
        let hi = CInterval::new(e.re.clone(), QInterval::new(m, e.im.hi.clone()));
        edge_clear_dbg(f, xiv, &lo, depth - 1) && edge_clear_dbg(f, xiv, &hi, depth - 1)
    } else {
        println!("  point edge still zero");
        false
    }
}

fn eval_biv_interval_dbg(f: &BiPoly, xiv: &CInterval, yiv: &CInterval) -> CInterval {
    use num_traits::Zero;
    let zero = CInterval::from_real(QInterval::point(QQ::zero()));
    let mut acc = zero.clone();
    for p in f.coeffs().iter().rev() {
        let mut cx = zero.clone();
        for c in p.coeffs().iter().rev() {
            cx = cx
                .mul(xiv)
                .add(&CInterval::from_real(QInterval::point(c.clone())))
                .round_out(192);
        }
        acc = acc.mul(yiv).add(&cx).round_out(192);
    }
    acc
}
