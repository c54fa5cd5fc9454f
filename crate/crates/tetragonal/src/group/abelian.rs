//! Abelianization of a finite presentation via the Smith normal form of
//! the relator exponent matrix.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::presentation::Presentation;

/// The abelianization `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | …`
/// and every `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_cyclic_of_order(&self, n: u64) -> bool {
        self.rank == 0 && self.torsion == vec![BigInt::from(n)]
    }

    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.rank == r && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> =
            self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        if self.rank > 0 {
            parts.insert(0, if self.rank == 1 { "Z".into() } else { format!("Z^{}", self.rank) });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reduces an integer matrix to Smith normal form in place, returning the
/// diagonal entries (non-negative, each dividing the next).
pub fn smith_normal_form(mat: &mut Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = mat.len();
    let n = if m == 0 { 0 } else { mat[0].len() };
    let mut diag = Vec::new();
    let mut r = 0;
    let mut c = 0;
    while r < m && c < n {
        // Pick the nonzero pivot of least absolute value in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in r..m {
            for j in c..n {
                if !mat[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| {
                        mat[i][j].abs() < mat[pi][pj].abs()
                    })
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        mat.swap(r, pi);
        for row in mat.iter_mut() {
            row.swap(c, pj);
        }
        // Clear the pivot row and column; repeat until clean (the pivot
        // may shrink as remainders replace entries).
        loop {
            let mut dirty = false;
            for i in 0..m {
                if i == r || mat[i][c].is_zero() {
                    continue;
                }
                let q = div_round(&mat[i][c], &mat[r][c]);
                for j in c..n {
                    let s = &mat[r][j] * &q;
                    mat[i][j] -= s;
                }
                if !mat[i][c].is_zero() {
                    mat.swap(r, i);
                    dirty = true;
                }
            }
            for j in 0..n {
                if j == c || mat[r][j].is_zero() {
                    continue;
                }
                let q = div_round(&mat[r][j], &mat[r][c]);
                for row in mat.iter_mut() {
                    let s = &row[c] * &q;
                    row[j] -= s;
                }
                if !mat[r][j].is_zero() {
                    for row in mat.iter_mut() {
                        row.swap(c, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(mat[r][c].abs());
        r += 1;
        c += 1;
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            if !(&diag[i + 1] % &diag[i]).is_zero() {
                let a = diag[i].clone();
                let b = diag[i + 1].clone();
                let g = gcd(&a, &b);
                let l = &a / &g * &b;
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    diag
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Rounded division, so remainders have at most half the pivot's size.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = (a / b, a % b);
    if &r.abs() * &two > b.abs() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// The abelianization of the group presented by `p`.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let mut mat: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| {
            r.exponent_sums(p.n_gens)
                .into_iter()
                .map(BigInt::from)
                .collect()
        })
        .collect();
    if mat.is_empty() {
        return AbelianGroup { rank: p.n_gens, torsion: Vec::new() };
    }
    let diag = smith_normal_form(&mut mat);
    let nonzero: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    let rank = p.n_gens - nonzero.len();
    let one = BigInt::from(1);
    let torsion = nonzero.into_iter().filter(|d| *d != one).collect();
    AbelianGroup { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::free::FreeWord;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn snf_divisibility_chain() {
        let mut mat = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(4), BigInt::from(16)],
        ];
        let d = smith_normal_form(&mut mat);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn trefoil_abelianization_is_z() {
        let p = Presentation::new(2, vec![w("a1 a2 a1 a2^-1 a1^-1 a2^-1")]);
        let ab = abelianization(&p);
        assert!(ab.is_free_of_rank(1));
    }

    #[test]
    fn c2_star_c3_abelianization_is_c6() {
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2 a2")]);
        let ab = abelianization(&p);
        assert_eq!(ab.rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(6)]);
        assert!(ab.is_cyclic_of_order(6));
        assert_eq!(ab.to_string(), "Z/6");
    }

    #[test]
    fn free_group_abelianization() {
        let ab = abelianization(&Presentation::free(4));
        assert!(ab.is_free_of_rank(4));
    }
}
