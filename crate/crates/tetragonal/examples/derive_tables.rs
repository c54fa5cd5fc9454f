//! Dev tool: derive the local monodromy dictionary (beta, lambda per
//! singular-fiber type, and the elementary segment-crossing braids) by
//! certified tracking on synthetic local models. The printed words are
//! frozen into the monodromy tables and re-validated by tests.

use tetragonal::poly::{qi, qq, BiPoly, Poly, RatPoly};
use tetragonal::tracker::{octagon_loop, track_path, upper_detour};

fn biv(coeffs_y: &[&[i64]]) -> BiPoly {
    Poly::from_coeffs(
        coeffs_y
            .iter()
            .map(|c| RatPoly::from_coeffs(c.iter().map(|&v| qi(v)).collect()))
            .collect(),
    )
}

/// (y - c) as a bivariate polynomial.
fn linear(c: i64) -> BiPoly {
    biv(&[&[-c], &[1]])
}

/// y^2 - s x^(mu+1): the merging pair centered at 0.
fn merging(mu: usize, s: i64) -> BiPoly {
    let mut xpow = vec![0i64; mu + 2];
    xpow[mu + 1] = -s;
    biv(&[&xpow, &[], &[1]])
}

fn main() {
    let run_beta = std::env::args().any(|a| a == "--beta");
    // beta / lambda: A_mu fiber at x = 0, merging pair (i, i+1) in the
    // canonical (descending) order, s = +1 / -1 controlling realness
    let far: [(i64, i64); 3] = [(-3, -6), (3, -3), (6, 3)];
    for mu in 0..=8usize {
        if !run_beta {
            break;
        }
        for s in [1i64, -1] {
            for (pair, &(c1, c2)) in far.iter().enumerate() {
                let f = &(&merging(mu, s) * &linear(c1)) * &linear(c2);
                let beta = track_path(&f, &upper_detour(&qq(-1, 2), &qq(1, 2), &qq(1, 2)));
                let lambda = track_path(&f, &octagon_loop(&qi(0), &qq(1, 2)));
                println!(
                    "mu={} s={:+} pair=({},{}): beta = {}   lambda = {}",
                    mu,
                    s,
                    pair + 1,
                    pair + 2,
                    beta.map(|b| b.to_string()).unwrap_or_else(|e| format!("ERR {e}")),
                    lambda.map(|b| b.to_string()).unwrap_or_else(|e| format!("ERR {e}")),
                );
            }
        }
    }

    // gamma crossings: a real branch crossing the common Re of a conjugate
    // pair (3y^2 + 3xy + 3 + x: Re = -x/2, slightly asymmetric so the two
    // elementary crossings separate on the complex detour), 4th branch far
    // away. The detour is homotopic to the real segment because no fiber
    // in the swept rectangle is singular.
    // D_k: pair block moves up from slots (k+1, k+2) to (k, k+1);
    // U_k: pair block moves down from slots (k, k+1) to (k+1, k+2).
    let pairf = biv(&[&[3, 1], &[0, 3], &[3]]); // 3(y^2 + xy + 1) + x
    let cases: [(&str, i64, i64); 4] = [
        ("D_1", 1, -9),  // real y = -x above the pair, far branch at -9
        ("U_1", -1, -9), // real y = +x below the pair, far branch at -9
        ("D_2", 1, 9),   // real y = -x, far branch at +9
        ("U_2", -1, 9),  // real y = +x, far branch at +9
    ];
    for (name, rs, c) in cases {
        // real branch y = -rs * x
        let real = biv(&[&[0, rs], &[1]]);
        let f = &(&pairf * &real) * &linear(c);
        let g = track_path(&f, &upper_detour(&qq(-1, 2), &qq(1, 2), &qq(1, 8)));
        println!(
            "{}: gamma = {}",
            name,
            g.map(|b| b.to_string()).unwrap_or_else(|e| format!("ERR {e}")),
        );
    }
}
