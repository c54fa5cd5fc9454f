//! Free groups, the braid group B_4 and its action, finitely presented
//! groups and their analysis.

pub mod abelian;
pub mod alexander;
pub mod braid;
pub mod coset;
pub mod free;
pub mod presentation;
pub mod rewrite;
pub mod tietze;

pub use abelian::{abelianization, AbelianGroup};
pub use alexander::alexander_polynomial;
pub use braid::{full_twist, garside_delta, tau, Braid};
pub use coset::{group_order, todd_coxeter, CosetTable, DEFAULT_COSET_LIMIT};
pub use free::{FreeEndo, FreeWord};
pub use presentation::Presentation;
pub use rewrite::{normal_closure_presentation, reidemeister_schreier, SubgroupPresentation};
pub use tietze::tietze_simplify;
