//! Freely reduced words in a free group and endomorphisms given by
//! generator images.

use crate::error::GroupError;
use std::fmt;

/// A freely reduced word. Letters are nonzero integers: `k > 0` is the
/// k-th generator (1-based), `-k` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: vec![] }
    }

    pub fn gen(k: usize) -> Self {
        FreeWord {
            letters: vec![k as i32],
        }
    }

    pub fn gen_inv(k: usize) -> Self {
        FreeWord {
            letters: vec![-(k as i32)],
        }
    }

    /// Build from raw letters, reducing freely.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "zero letter");
            if let Some(&last) = out.last() {
                if last == -l {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        FreeWord::from_letters(
            self.letters
                .iter()
                .chain(other.letters.iter())
                .copied(),
        )
    }

    /// self^-1 * other ... emptiness tests equality, but PartialEq is
    /// already canonical; this is a convenience for ratio words.
    pub fn ratio(&self, other: &FreeWord) -> Self {
        self.inverse().concat(other)
    }

    /// g w g^-1.
    pub fn conjugate_by(&self, g: &FreeWord) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Largest generator index used, or 0 for the identity.
    pub fn max_gen(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Sum of exponents of each generator (abelianization image).
    pub fn exponent_sums(&self, n_gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n_gens];
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            if k <= n_gens {
                sums[k - 1] += l.signum() as i64;
            }
        }
        sums
    }

    /// Cyclically reduced form.
    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.letters.clone();
        while w.len() >= 2 && w[0] == -w[w.len() - 1] {
            w.pop();
            w.remove(0);
        }
        FreeWord { letters: w }
    }

    /// Parse words like "a1 a3^-1 a2^2"; the prefix letter is arbitrary
    /// but must be followed by a 1-based index.
    pub fn parse(s: &str) -> Result<FreeWord, GroupError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (idx, exp) = parse_token(tok)?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(if exp >= 0 { idx as i32 } else { -(idx as i32) });
            }
        }
        Ok(FreeWord::from_letters(letters))
    }
}

pub(crate) fn parse_token(tok: &str) -> Result<(usize, i64), GroupError> {
    let bad = || GroupError::BadWord(tok.to_string());
    let rest: &str = tok
        .strip_prefix(|c: char| c.is_ascii_alphabetic())
        .ok_or_else(bad)?;
    let (idx_s, exp_s) = match rest.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (rest, None),
    };
    let idx: usize = idx_s.parse().map_err(|_| bad())?;
    if idx == 0 {
        return Err(bad());
    }
    let exp: i64 = match exp_s {
        Some(e) => e.parse().map_err(|_| bad())?,
        None => 1,
    };
    Ok((idx, exp))
}

pub(crate) fn fmt_word(letters: &[i32], prefix: char, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    let mut first = true;
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1usize;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        let exp = if l > 0 { run as i64 } else { -(run as i64) };
        if exp == 1 {
            write!(f, "{}{}", prefix, l.unsigned_abs())?;
        } else {
            write!(f, "{}{}^{}", prefix, l.unsigned_abs(), exp)?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.letters, 'a', f)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.letters, 'a', f)
    }
}

/// An endomorphism of a free group of rank `n`, given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeEndo {
    pub images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(n: usize) -> Self {
        FreeEndo {
            images: (1..=n).map(FreeWord::gen).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Apply to a word (substitute generator images).
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut letters = Vec::new();
        for &l in w.letters() {
            let k = l.unsigned_abs() as usize;
            assert!(k <= self.images.len(), "letter out of range");
            let img = &self.images[k - 1];
            if l > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend(img.letters().iter().rev().map(|&x| -x));
            }
        }
        FreeWord::from_letters(letters)
    }

    /// Composition: first `self`, then `other`.
    pub fn then(&self, other: &FreeEndo) -> FreeEndo {
        FreeEndo {
            images: self.images.iter().map(|w| other.apply(w)).collect(),
        }
    }
}
