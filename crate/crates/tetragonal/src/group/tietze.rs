//! Budgeted Tietze simplification of finite presentations.
//!
//! The transformations used are standard and conservative: cyclic
//! reduction, duplicate removal, elimination of generators that occur
//! exactly once in some relator, and shortening a relator by a cyclic
//! subword of another relator covering more than half of it. Every step
//! preserves the isomorphism type of the presented group.

use super::free::FreeWord;
use super::presentation::Presentation;

/// Simplifies `p`, spending at most `budget` elementary passes. Returns
/// the simplified presentation; generators are renumbered consecutively.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let n_gens = p.n_gens;
    let mut relators: Vec<FreeWord> = p.relators.clone();
    let mut dead = vec![false; n_gens];
    let mut spent = 0;
    loop {
        normalize(&mut relators);
        if spent >= budget {
            break;
        }
        spent += 1;
        if eliminate_generator(n_gens, &mut relators, &mut dead) {
            continue;
        }
        if shorten_by_overlap(&mut relators) {
            continue;
        }
        break;
    }
    normalize(&mut relators);
    let (n_gens, relators) = renumber(n_gens, &dead, relators);
    Presentation::new(n_gens, relators)
}

/// Cyclically reduces, drops empty relators, and removes duplicates up to
/// cyclic rotation and inversion.
fn normalize(relators: &mut Vec<FreeWord>) {
    for r in relators.iter_mut() {
        *r = r.cyclic_reduce();
    }
    relators.retain(|r| !r.is_empty());
    relators.sort_by_key(|r| r.len());
    let mut seen = std::collections::HashSet::new();
    relators.retain(|r| seen.insert(cyclic_canon(r)));
}

/// Canonical representative of a relator's class under cyclic rotation
/// and inversion.
fn cyclic_canon(r: &FreeWord) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for w in [r.clone(), r.inverse()] {
        let ls = w.letters();
        let n = ls.len();
        for s in 0..n.max(1) {
            let rot: Vec<i32> = (0..n).map(|i| ls[(s + i) % n]).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Finds a relator in which some generator occurs exactly once, solves for
/// that generator and substitutes everywhere. Prefers the substitution
/// that minimizes the resulting total length.
fn eliminate_generator(
    n_gens: usize,
    relators: &mut Vec<FreeWord>,
    dead: &mut [bool],
) -> bool {
    let mut best: Option<(usize, usize, usize)> = None; // (relator, gen, cost)
    for (ri, r) in relators.iter().enumerate() {
        let mut counts = vec![0usize; n_gens];
        for &l in r.letters() {
            counts[l.unsigned_abs() as usize - 1] += 1;
        }
        for (g, &c) in counts.iter().enumerate() {
            if c != 1 {
                continue;
            }
            let occurrences: usize = relators
                .iter()
                .enumerate()
                .filter(|&(rj, _)| rj != ri)
                .map(|(_, s)| {
                    s.letters()
                        .iter()
                        .filter(|&&l| l.unsigned_abs() as usize == g + 1)
                        .count()
                })
                .sum();
            let cost = occurrences * (r.len() - 1);
            if best.is_none_or(|(_, _, bc)| cost < bc) {
                best = Some((ri, g, cost));
            }
        }
    }
    let Some((ri, g, _)) = best else { return false };
    let r = relators.remove(ri);
    // Rotate r so that the unique occurrence of g comes first: r = x^e · u,
    // hence x^e = u⁻¹ and x = (u⁻¹)^e.
    let ls = r.letters();
    let pos = ls
        .iter()
        .position(|&l| l.unsigned_abs() as usize == g + 1)
        .unwrap();
    let e = ls[pos].signum();
    let u = FreeWord::from_letters(
        ls[pos + 1..].iter().chain(&ls[..pos]).copied(),
    );
    let mut image = u.inverse();
    if e < 0 {
        image = image.inverse();
    }
    for s in relators.iter_mut() {
        *s = substitute(s, g + 1, &image);
    }
    dead[g] = true;
    true
}

/// Replaces every occurrence of generator `g` in `w` by `image`.
fn substitute(w: &FreeWord, g: usize, image: &FreeWord) -> FreeWord {
    let mut out: Vec<i32> = Vec::new();
    for &l in w.letters() {
        if l.unsigned_abs() as usize == g {
            if l > 0 {
                out.extend_from_slice(image.letters());
            } else {
                out.extend_from_slice(image.inverse().letters());
            }
        } else {
            out.push(l);
        }
    }
    FreeWord::from_letters(out)
}

/// If more than half of some relator `s` appears as a cyclic subword of a
/// shorter (or equal) relator `r` (or its inverse), rewrites `s` using the
/// complementary part of `r`, strictly shortening `s`.
fn shorten_by_overlap(relators: &mut Vec<FreeWord>) -> bool {
    for si in 0..relators.len() {
        for ri in 0..relators.len() {
            if ri == si {
                continue;
            }
            let (rlen, slen) = (relators[ri].len(), relators[si].len());
            if rlen > slen || rlen < 2 {
                continue;
            }
            // A match of length > rlen/2 lets us swap in the shorter
            // complement from r.
            let need = rlen / 2 + 1;
            if let Some(shorter) = try_overlap(&relators[si], &relators[ri], need) {
                if shorter.len() < slen {
                    relators[si] = shorter;
                    return true;
                }
            }
        }
    }
    false
}

/// Searches for a cyclic subword of `r` (or `r⁻¹`) of length ≥ `need`
/// occurring in `s`; if found, returns `s` with the occurrence replaced by
/// the inverse of the complementary cyclic part of `r`.
fn try_overlap(s: &FreeWord, r: &FreeWord, need: usize) -> Option<FreeWord> {
    let sl = s.letters();
    let n = sl.len();
    for rw in [r.clone(), r.inverse()] {
        let rl = rw.letters();
        let m = rl.len();
        // Longest match of r starting at each rotation, against each
        // position of s (non-cyclic in s: relators are cyclically reduced
        // and we may rotate s implicitly by trying all start offsets).
        for s0 in 0..n {
            for r0 in 0..m {
                let mut k = 0;
                while k < n && k < m && sl[(s0 + k) % n] == rl[(r0 + k) % m] {
                    k += 1;
                }
                if k >= need {
                    // s (rotated to start at s0) = matched · tail, and
                    // matched = r-part; replace by inverse complement of r.
                    let complement: Vec<i32> =
                        (k..m).map(|i| rl[(r0 + i) % m]).collect();
                    let mut out: Vec<i32> = FreeWord::from_letters(complement)
                        .inverse()
                        .letters()
                        .to_vec();
                    out.extend((k..n).map(|i| sl[(s0 + i) % n]));
                    return Some(FreeWord::from_letters(out).cyclic_reduce());
                }
            }
        }
    }
    None
}

/// Renumbers the surviving generators consecutively: eliminated ones are
/// dropped, while generators that merely occur in no relator are genuine
/// free factors and are kept.
fn renumber(
    n_gens: usize,
    dead: &[bool],
    relators: Vec<FreeWord>,
) -> (usize, Vec<FreeWord>) {
    let mut map = vec![0usize; n_gens];
    let mut next = 0usize;
    for g in 0..n_gens {
        if !dead[g] {
            next += 1;
            map[g] = next;
        }
    }
    let relabeled = relators
        .into_iter()
        .map(|r| {
            FreeWord::from_letters(
                r.letters()
                    .iter()
                    .map(|&l| l.signum() * map[l.unsigned_abs() as usize - 1] as i32),
            )
        })
        .collect();
    (next, relabeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::abelian::abelianization;
    use crate::group::coset::group_order;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn eliminates_redundant_generator() {
        // ⟨a,b,c | c = ab, a², b³, (ab)²⟩ simplifies to two generators.
        let p = Presentation::new(
            3,
            vec![
                w("a3 a2^-1 a1^-1"),
                w("a1 a1"),
                w("a2 a2 a2"),
                w("a1 a2").pow(2),
            ],
        );
        let s = tietze_simplify(&p, 100);
        assert_eq!(s.n_gens, 2);
        assert_eq!(
            group_order(&s, 1000).unwrap(),
            group_order(&p, 1000).unwrap()
        );
    }

    #[test]
    fn detects_free_group_after_elimination() {
        // ⟨a,b | b = a⁻¹⟩ is infinite cyclic: one generator, no relators.
        let p = Presentation::new(2, vec![w("a2 a1")]);
        let s = tietze_simplify(&p, 100);
        assert_eq!(s.n_gens, 1);
        assert!(s.relators.is_empty());
    }

    #[test]
    fn overlap_shortening_preserves_group() {
        // (ab)⁴ contains (ab)³ entirely, so it collapses to ab.
        let p = Presentation::new(
            2,
            vec![
                w("a1 a1"),
                w("a2 a2"),
                w("a1 a2").pow(3),
                w("a1 a2").pow(4),
            ],
        );
        let s = tietze_simplify(&p, 100);
        assert!(s.total_length() < p.total_length());
        assert_eq!(
            abelianization(&s).to_string(),
            abelianization(&p).to_string()
        );
        assert_eq!(
            group_order(&s, 10000).unwrap(),
            group_order(&p, 10000).unwrap()
        );
    }

    #[test]
    fn duplicate_relators_are_removed() {
        // Rotations and inverses of the same relator collapse to one; the
        // generators occur twice each, so no elimination interferes.
        let p = Presentation::new(
            2,
            vec![
                w("a1 a2 a1 a2"),
                w("a2 a1 a2 a1"),
                w("a2^-1 a1^-1 a2^-1 a1^-1"),
            ],
        );
        let s = tietze_simplify(&p, 100);
        assert_eq!(s.relators.len(), 1);
    }
}
