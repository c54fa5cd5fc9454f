//! Finite presentations of groups.

use super::free::FreeWord;

/// A finite presentation `⟨ x_1 … x_n | r_1 … r_m ⟩`.
///
/// Generators are identified by their 1-based index, matching the letter
/// convention of [`FreeWord`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub n_gens: usize,
    pub relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(n_gens: usize, relators: Vec<FreeWord>) -> Self {
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Presentation { n_gens, relators }
    }

    /// The free group of rank `n`.
    pub fn free(n_gens: usize) -> Self {
        Presentation { n_gens, relators: Vec::new() }
    }

    /// Adds extra relators, e.g. to form a quotient.
    pub fn quotient(&self, extra: impl IntoIterator<Item = FreeWord>) -> Self {
        let mut relators = self.relators.clone();
        relators.extend(extra.into_iter().filter(|r| !r.is_empty()));
        Presentation { n_gens: self.n_gens, relators }
    }

    /// Total length of all relators.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    pub fn max_relator_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Renders the presentation as `⟨ a1 … | w1, … ⟩` with words in the
    /// `a1 a2^-1` syntax accepted by [`FreeWord::parse`].
    pub fn display(&self) -> String {
        let gens: Vec<String> = (1..=self.n_gens).map(|k| format!("a{k}")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        format!("< {} | {} >", gens.join(" "), rels.join(", "))
    }
}
