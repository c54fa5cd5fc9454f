//! The braid group B_n acting on the free group F_n from the right.
//!
//! The Artin generator `s_i` maps `a_i -> a_i a_{i+1} a_i^-1` and
//! `a_{i+1} -> a_i`, fixing the other generators. Braid words act left to
//! right; equality of braids is decided through the induced (faithful)
//! action on F_n.

use super::free::{fmt_word, parse_token, FreeEndo, FreeWord};
use crate::error::GroupError;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    n: usize,
    /// Letters `k` / `-k` for `s_k` / `s_k^-1`, `1 <= k < n`; stored with
    /// free cancellation of adjacent inverse pairs only.
    word: Vec<i32>,
}

impl Braid {
    pub fn identity(n: usize) -> Self {
        Braid { n, word: vec![] }
    }

    pub fn gen(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k < n, "generator index out of range");
        Braid {
            n,
            word: vec![k as i32],
        }
    }

    pub fn from_word(n: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut word: Vec<i32> = Vec::new();
        for l in letters {
            let k = l.unsigned_abs() as usize;
            assert!(l != 0 && k < n, "braid letter out of range");
            if let Some(&last) = word.last() {
                if last == -l {
                    word.pop();
                    continue;
                }
            }
            word.push(l);
        }
        Braid { n, word }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty_word(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Braid {
            n: self.n,
            word: self.word.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn then(&self, other: &Braid) -> Self {
        assert_eq!(self.n, other.n);
        Braid::from_word(self.n, self.word.iter().chain(other.word.iter()).copied())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut out = Braid::identity(self.n);
        for _ in 0..e.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// g^-1 self g.
    pub fn conjugate_by(&self, g: &Braid) -> Self {
        g.inverse().then(self).then(g)
    }

    /// The induced automorphism of F_n (applying the braid word left to
    /// right).
    pub fn endo(&self) -> FreeEndo {
        let mut e = FreeEndo::identity(self.n);
        for &l in &self.word {
            e = e.then(&gen_endo(self.n, l));
        }
        e
    }

    /// Action on a free word.
    pub fn act(&self, w: &FreeWord) -> FreeWord {
        self.endo().apply(w)
    }

    /// Exact equality as elements of B_n, via the faithful action on F_n.
    pub fn equivalent(&self, other: &Braid) -> bool {
        self.n == other.n && self.endo() == other.endo()
    }

    /// Sum of letter signs (the exponent sum, a braid invariant).
    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Parse words like "s1 s2^-1 s3^2".
    pub fn parse(n: usize, s: &str) -> Result<Braid, GroupError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (idx, exp) = parse_token(tok)?;
            if idx >= n {
                return Err(GroupError::BadGenerator(idx));
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(if exp >= 0 { idx as i32 } else { -(idx as i32) });
            }
        }
        Ok(Braid::from_word(n, letters))
    }
}

impl fmt::Debug for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, 's', f)
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, 's', f)
    }
}

/// Endomorphism of one Artin letter (positive or negative).
fn gen_endo(n: usize, letter: i32) -> FreeEndo {
    let i = letter.unsigned_abs() as usize;
    let mut e = FreeEndo::identity(n);
    let a = FreeWord::gen(i);
    let b = FreeWord::gen(i + 1);
    if letter > 0 {
        // a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i
        e.images[i - 1] = a.concat(&b).concat(&a.inverse());
        e.images[i] = a;
    } else {
        // inverse: a_i -> a_{i+1}, a_{i+1} -> a_{i+1}^-1 a_i a_{i+1}
        e.images[i - 1] = b.clone();
        e.images[i] = b.inverse().concat(&a).concat(&b);
    }
    e
}

/// The Garside half-twist of B_4: s1 s2 s3 s1 s2 s1.
pub fn garside_delta() -> Braid {
    Braid::from_word(4, [1, 2, 3, 1, 2, 1])
}

/// Full twist, the generator of the center of B_4.
pub fn full_twist() -> Braid {
    let d = garside_delta();
    d.then(&d)
}

/// The twist braid tau = s2^-1 s3 s1^-1 s2 of B_4.
pub fn tau() -> Braid {
    Braid::from_word(4, [-2, 3, -1, 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn artin_relations_hold() {
        for n in 2..=5usize {
            for i in 1..n - 1 {
                // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
                let lhs = Braid::from_word(n, [i as i32, (i + 1) as i32, i as i32]);
                let rhs = Braid::from_word(n, [(i + 1) as i32, i as i32, (i + 1) as i32]);
                assert!(lhs.equivalent(&rhs));
            }
            for i in 1..n {
                for j in 1..n {
                    if i + 1 < j {
                        let lhs = Braid::from_word(n, [i as i32, j as i32]);
                        let rhs = Braid::from_word(n, [j as i32, i as i32]);
                        assert!(lhs.equivalent(&rhs), "far commutation {} {}", i, j);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_cancels() {
        let b = Braid::from_word(4, [1, -2, 3, 3, -1]);
        assert!(b.then(&b.inverse()).equivalent(&Braid::identity(4)));
    }

    #[test]
    fn full_twist_is_central() {
        let d2 = full_twist();
        for k in 1..4 {
            let g = Braid::gen(4, k);
            assert!(d2.then(&g).equivalent(&g.then(&d2)));
        }
    }

    #[test]
    fn delta_conjugation_reverses_generators() {
        // delta^-1 s_i delta = s_{4-i} in B_4
        let d = garside_delta();
        for k in 1..4usize {
            let lhs = Braid::gen(4, k).conjugate_by(&d);
            let rhs = Braid::gen(4, 4 - k);
            assert!(lhs.equivalent(&rhs));
        }
    }

    #[test]
    fn action_preserves_boundary_product() {
        // braids fix a1 a2 a3 a4 (the class of a large loop)
        let w = FreeWord::from_letters([1, 2, 3, 4]);
        for b in [garside_delta(), tau(), Braid::from_word(4, [3, -1, 2, 2])] {
            assert_eq!(b.act(&w), w);
        }
    }

    #[test]
    fn parse_roundtrip() {
        let b = Braid::parse(4, "s1 s2^-2 s3").unwrap();
        assert_eq!(b.word(), &[1, -2, -2, 3]);
        assert_eq!(format!("{}", b), "s1 s2^-2 s3");
        assert!(Braid::parse(4, "s4").is_err());
        assert!(Braid::parse(4, "x").is_err());
    }

    #[test]
    fn exponent_sum_invariant() {
        let d = garside_delta();
        assert_eq!(d.exponent_sum(), 6);
        assert_eq!(tau().exponent_sum(), 0);
    }
}
