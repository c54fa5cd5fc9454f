//! Coset enumeration (Todd–Coxeter, HLT strategy with coincidence
//! handling) over a finite presentation.

use super::free::FreeWord;
use super::presentation::Presentation;
use crate::error::GroupError;

/// Default ceiling on the number of cosets defined during enumeration.
pub const DEFAULT_COSET_LIMIT: usize = 10_000_000;

/// A completed coset table for a subgroup `H ≤ G`.
///
/// Rows are live cosets (coset `0` is `H` itself) and columns are indexed
/// by `2*(k-1)` for generator `k` and `2*(k-1)+1` for its inverse.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub n_gens: usize,
    /// `table[c][col]` is the coset reached from `c`; every entry is
    /// defined once enumeration succeeds.
    pub table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.table.len()
    }

    fn col(letter: i32) -> usize {
        let k = letter.unsigned_abs() as usize;
        2 * (k - 1) + if letter < 0 { 1 } else { 0 }
    }

    /// Traces a word from a coset.
    pub fn trace(&self, start: usize, w: &FreeWord) -> usize {
        let mut c = start;
        for &l in w.letters() {
            c = self.table[c][Self::col(l)];
        }
        c
    }
}

struct Enumerator {
    n_gens: usize,
    limit: usize,
    /// Flat table, one row of `2*n_gens` entries per coset; `UNDEF` marks
    /// an empty slot.
    table: Vec<u32>,
    /// Union-find of coincident cosets.
    parent: Vec<u32>,
    n_defined: usize,
    n_live: usize,
}

const UNDEF: u32 = u32::MAX;

impl Enumerator {
    fn new(n_gens: usize, limit: usize) -> Self {
        let mut e = Enumerator {
            n_gens,
            limit,
            table: Vec::new(),
            parent: Vec::new(),
            n_defined: 0,
            n_live: 0,
        };
        e.define_coset();
        e
    }

    fn cols(&self) -> usize {
        2 * self.n_gens
    }

    fn inv_col(col: usize) -> usize {
        col ^ 1
    }

    fn define_coset(&mut self) -> Option<u32> {
        if self.n_defined >= self.limit {
            return None;
        }
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat(UNDEF).take(self.cols()));
        self.n_defined += 1;
        self.n_live += 1;
        Some(c)
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let g = self.parent[self.parent[c as usize] as usize];
            self.parent[c as usize] = g;
            c = g;
        }
        c
    }

    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.cols() + col]
    }

    fn set(&mut self, c: u32, col: usize, v: u32) {
        let cols = self.cols();
        self.table[c as usize * cols + col] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (s, d) = if a < b { (a, b) } else { (b, a) };
        self.parent[d as usize] = s;
        self.n_live -= 1;
        queue.push(d);
    }

    /// Processes the coincidence `a = b`, merging rows and propagating any
    /// further coincidences this uncovers.
    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut qi = 0;
        while qi < queue.len() {
            let dead = queue[qi];
            qi += 1;
            for col in 0..self.cols() {
                let f = self.get(dead, col);
                if f == UNDEF {
                    continue;
                }
                self.set(dead, col, UNDEF);
                // Remove the reverse entry before re-inserting.
                if self.get(f, Self::inv_col(col)) == dead {
                    self.set(f, Self::inv_col(col), UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(f);
                let existing = self.get(mu, col);
                if existing != UNDEF {
                    self.merge(nu, existing, &mut queue);
                } else {
                    self.set(mu, col, nu);
                }
                let nu = self.rep(nu);
                let mu = self.rep(mu);
                let existing = self.get(nu, Self::inv_col(col));
                if existing != UNDEF {
                    self.merge(mu, existing, &mut queue);
                } else {
                    self.set(nu, Self::inv_col(col), mu);
                }
            }
        }
    }

    /// Scans relator `w` from coset `c`, defining new cosets as needed so
    /// the scan closes (HLT style). Returns `false` on table overflow.
    fn scan_and_fill(&mut self, c: u32, cols: &[usize]) -> bool {
        let mut f = self.rep(c);
        let mut i = 0;
        let mut b = f;
        let mut j = cols.len();
        loop {
            // Scan forward as far as the table is defined.
            while i < j {
                let next = self.get(f, cols[i]);
                if next == UNDEF {
                    break;
                }
                f = self.rep(next);
                i += 1;
            }
            // Scan backward.
            while j > i {
                let prev = self.get(b, Self::inv_col(cols[j - 1]));
                if prev == UNDEF {
                    break;
                }
                b = self.rep(prev);
                j -= 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            if j == i + 1 {
                // Deduction: a single gap closes the scan.
                self.set(f, cols[i], b);
                self.set(b, Self::inv_col(cols[i]), f);
                return true;
            }
            // Fill the first gap with a new coset and keep scanning.
            let Some(n) = self.define_coset() else {
                return false;
            };
            self.set(f, cols[i], n);
            self.set(n, Self::inv_col(cols[i]), f);
        }
    }
}

fn word_cols(w: &FreeWord) -> Vec<usize> {
    w.letters().iter().map(|&l| CosetTable::col(l)).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup_gens` in
/// the group presented by `p`.
///
/// Returns the completed table (so `index()` is the subgroup index, and
/// the group order when the subgroup is trivial) or
/// [`GroupError::CosetOverflow`] if more than `limit` cosets would be
/// defined. Overflow does *not* certify infiniteness.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[FreeWord],
    limit: usize,
) -> Result<CosetTable, GroupError> {
    for r in p.relators.iter().chain(subgroup_gens) {
        if r.max_gen() > p.n_gens {
            return Err(GroupError::BadGenerator(r.max_gen()));
        }
    }
    let mut e = Enumerator::new(p.n_gens, limit);
    let rel_cols: Vec<Vec<usize>> = p.relators.iter().map(word_cols).collect();

    for h in subgroup_gens {
        if !e.scan_and_fill(0, &word_cols(h)) {
            return Err(GroupError::CosetOverflow(limit));
        }
    }

    let mut c: u32 = 0;
    while (c as usize) < e.parent.len() {
        if e.is_live(c) {
            for cols in &rel_cols {
                if !e.scan_and_fill(c, cols) {
                    return Err(GroupError::CosetOverflow(limit));
                }
                if !e.is_live(c) {
                    break;
                }
            }
            // Fill any remaining gaps in the row so that every live coset
            // gets a complete row (needed when a generator occurs in no
            // relator).
            if e.is_live(c) {
                for col in 0..e.cols() {
                    if e.get(c, col) == UNDEF {
                        let Some(n) = e.define_coset() else {
                            return Err(GroupError::CosetOverflow(limit));
                        };
                        e.set(c, col, n);
                        e.set(n, Enumerator::inv_col(col), c);
                    }
                }
            }
        }
        c += 1;
    }

    // Compact: renumber live cosets consecutively.
    let mut index_of = vec![usize::MAX; e.parent.len()];
    let mut n_live = 0;
    for c in 0..e.parent.len() as u32 {
        if e.is_live(c) {
            index_of[c as usize] = n_live;
            n_live += 1;
        }
    }
    let mut table = vec![vec![0usize; 2 * p.n_gens]; n_live];
    for c in 0..e.parent.len() as u32 {
        if !e.is_live(c) {
            continue;
        }
        for col in 0..e.cols() {
            let t = e.get(c, col);
            debug_assert!(t != UNDEF);
            let t = e.rep(t);
            table[index_of[c as usize]][col] = index_of[t as usize];
        }
    }
    Ok(CosetTable { n_gens: p.n_gens, table })
}

/// The order of the group presented by `p`, via enumeration over the
/// trivial subgroup.
pub fn group_order(p: &Presentation, limit: usize) -> Result<usize, GroupError> {
    todd_coxeter(p, &[], limit).map(|t| t.index())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn cyclic_group_order() {
        let p = Presentation::new(1, vec![w("a1").pow(7)]);
        assert_eq!(group_order(&p, 1000).unwrap(), 7);
    }

    #[test]
    fn symmetric_group_s3() {
        // ⟨a,b | a², b², (ab)³⟩ ≅ S3.
        let ab = w("a1 a2");
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2"), ab.pow(3)]);
        assert_eq!(group_order(&p, 1000).unwrap(), 6);
    }

    #[test]
    fn symmetric_group_s4_as_coxeter() {
        let p = Presentation::new(
            3,
            vec![
                w("a1 a1"),
                w("a2 a2"),
                w("a3 a3"),
                w("a1 a2").pow(3),
                w("a2 a3").pow(3),
                w("a1 a3").pow(2),
            ],
        );
        assert_eq!(group_order(&p, 10000).unwrap(), 24);
    }

    #[test]
    fn quaternion_group() {
        // ⟨a,b | a⁴, a²b⁻², b⁻¹aba⟩ ≅ Q8.
        let p = Presentation::new(
            2,
            vec![w("a1").pow(4), w("a1 a1 a2^-1 a2^-1"), w("a2^-1 a1 a2 a1")],
        );
        assert_eq!(group_order(&p, 1000).unwrap(), 8);
    }

    #[test]
    fn subgroup_index_in_s3() {
        let ab = w("a1 a2");
        let p = Presentation::new(2, vec![w("a1 a1"), w("a2 a2"), ab.pow(3)]);
        let t = todd_coxeter(&p, &[w("a1")], 1000).unwrap();
        assert_eq!(t.index(), 3);
    }

    #[test]
    fn von_dyck_234_has_order_24() {
        let p = Presentation::new(
            2,
            vec![w("a1 a1"), w("a2 a2 a2"), w("a1 a2").pow(4)],
        );
        assert_eq!(group_order(&p, 10000).unwrap(), 24);
    }

    #[test]
    fn free_generator_overflows() {
        let p = Presentation::free(1);
        assert_eq!(
            group_order(&p, 100),
            Err(GroupError::CosetOverflow(100))
        );
    }

    #[test]
    fn table_traces_relators_to_identity() {
        let ab = w("a1 a2");
        let rels = vec![w("a1 a1"), w("a2 a2 a2"), ab.pow(4)];
        let p = Presentation::new(2, rels.clone());
        let t = todd_coxeter(&p, &[], 10000).unwrap();
        for c in 0..t.index() {
            for r in &rels {
                assert_eq!(t.trace(c, r), c);
            }
        }
    }
}
