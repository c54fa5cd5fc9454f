//! Subgroup presentations by the Reidemeister–Schreier rewriting process,
//! and presentations of normal closures via the regular action of the
//! quotient.

use super::coset::{todd_coxeter, CosetTable};
use super::free::FreeWord;
use super::presentation::Presentation;
use crate::error::GroupError;

/// A presentation of a finite-index subgroup together with expressions of
/// its generators as words in the ambient group.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// `ambient_words[k]` is subgroup generator `k+1` written in the
    /// generators of the ambient group.
    pub ambient_words: Vec<FreeWord>,
}

/// Rewrites the point stabilizer of coset `0` in the permutation action
/// described by `table` (the subgroup `H` whose cosets were enumerated).
///
/// The output has exactly `index·(n−1) + 1` generators, one per non-tree
/// edge of the Schreier graph, and one rewritten relator per
/// (coset, ambient relator) pair.
pub fn reidemeister_schreier(p: &Presentation, table: &CosetTable) -> SubgroupPresentation {
    let n = table.index();
    let ng = p.n_gens;
    // Schreier transversal: BFS tree rooted at coset 0. `tree_edge[c]`
    // records (parent, letter) for c ≠ 0.
    let mut parent_edge: Vec<Option<(usize, i32)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut order = vec![0usize];
    while let Some(c) = queue.pop_front() {
        for k in 1..=ng {
            for l in [k as i32, -(k as i32)] {
                let t = step(table, c, l);
                if !seen[t] {
                    seen[t] = true;
                    parent_edge[t] = Some((c, l));
                    queue.push_back(t);
                    order.push(t);
                }
            }
        }
    }
    // Transversal words.
    let mut transversal = vec![FreeWord::identity(); n];
    for &c in &order[1..] {
        let (par, l) = parent_edge[c].unwrap();
        transversal[c] = transversal[par].concat(&FreeWord::from_letters([l]));
    }
    // Number the non-tree positive edges (c, k): edge is a tree edge if it
    // realizes the parent link of either endpoint.
    let mut gen_of_edge = vec![vec![0usize; ng]; n]; // 0 = tree edge
    let mut ambient_words = Vec::new();
    let mut next = 1usize;
    for c in 0..n {
        for k in 1..=ng {
            let t = step(table, c, k as i32);
            let is_tree = parent_edge[t] == Some((c, k as i32))
                || parent_edge[c] == Some((t, -(k as i32)));
            if is_tree {
                continue;
            }
            gen_of_edge[c][k - 1] = next;
            ambient_words.push(
                transversal[c]
                    .concat(&FreeWord::gen(k))
                    .concat(&transversal[t].inverse()),
            );
            next += 1;
        }
    }
    let n_sub_gens = next - 1;
    debug_assert_eq!(n_sub_gens, n * ng - (n - 1));

    // Rewrite each ambient relator from each coset.
    let rewrite = |start: usize, w: &FreeWord| -> FreeWord {
        let mut out: Vec<i32> = Vec::new();
        let mut c = start;
        for &l in w.letters() {
            if l > 0 {
                let g = gen_of_edge[c][l as usize - 1];
                if g != 0 {
                    out.push(g as i32);
                }
                c = step(table, c, l);
            } else {
                c = step(table, c, l);
                let g = gen_of_edge[c][(-l) as usize - 1];
                if g != 0 {
                    out.push(-(g as i32));
                }
            }
        }
        debug_assert_eq!(c, start);
        FreeWord::from_letters(out)
    };
    let mut relators = Vec::new();
    for c in 0..n {
        for r in &p.relators {
            let w = rewrite(c, r);
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    SubgroupPresentation {
        presentation: Presentation::new(n_sub_gens, relators),
        ambient_words,
    }
}

fn step(table: &CosetTable, c: usize, l: i32) -> usize {
    let k = l.unsigned_abs() as usize;
    table.table[c][2 * (k - 1) + if l < 0 { 1 } else { 0 }]
}

/// A presentation of the normal closure `N = ⟨⟨w⟩⟩` of a word in the group
/// presented by `p`, provided the quotient `G/N` is finite within `limit`.
///
/// The quotient is enumerated on the trivial subgroup; its regular coset
/// table is a table for `N ≤ G`, to which Reidemeister–Schreier applies.
pub fn normal_closure_presentation(
    p: &Presentation,
    w: &FreeWord,
    limit: usize,
) -> Result<(SubgroupPresentation, usize), GroupError> {
    let q = p.quotient([w.clone()]);
    let table = todd_coxeter(&q, &[], limit)?;
    let index = table.index();
    Ok((reidemeister_schreier(p, &table), index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::coset::group_order;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn schreier_index_formula() {
        // Index-3 subgroup ⟨a⟩ ≤ S3 = ⟨a,b | a², b², (ab)³⟩.
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2"), w("a1 a2").pow(3)]);
        let t = todd_coxeter(&p, &[w("a1")], 100).unwrap();
        let sub = reidemeister_schreier(&p, &t);
        assert_eq!(sub.presentation.n_gens, 3 * (2 - 1) + 1);
        assert_eq!(sub.ambient_words.len(), sub.presentation.n_gens);
    }

    #[test]
    fn commutator_subgroup_of_s3_has_order_3() {
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2"), w("a1 a2").pow(3)]);
        // N = ⟨⟨ab⟩⟩ has abelian quotient C2, so index 2 and order 3.
        let (sub, index) = normal_closure_presentation(&p, &w("a1 a2"), 100).unwrap();
        assert_eq!(index, 2);
        assert_eq!(group_order(&sub.presentation, 100).unwrap(), 3);
    }

    #[test]
    fn ambient_words_lie_in_the_subgroup() {
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2"), w("a1 a2").pow(3)]);
        let t = todd_coxeter(&p, &[w("a1")], 100).unwrap();
        let sub = reidemeister_schreier(&p, &t);
        for g in &sub.ambient_words {
            assert_eq!(t.trace(0, g), 0);
        }
    }

    #[test]
    fn kernel_of_free_group_onto_c2() {
        // F2 → C2 (both generators map to the involution): the kernel is
        // free of rank 3 and R-S yields no relators.
        let p = Presentation::free(2);
        let q = Presentation::new(2, vec![w("a1 a1"), w("a1 a2^-1")]);
        let t = todd_coxeter(&q, &[], 100).unwrap();
        assert_eq!(t.index(), 2);
        let sub = reidemeister_schreier(&p, &t);
        assert_eq!(sub.presentation.n_gens, 3);
        assert!(sub.presentation.relators.is_empty());
    }
}
