//! Exact polynomial arithmetic: generic dense polynomials, rational and
//! Gaussian-rational scalars, Sturm chains, resultants, real algebraic
//! numbers, interval arithmetic, and certified complex root isolation.

pub mod algnum;
pub mod cbox;
pub mod dense;
pub mod gauss;
pub mod interval;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod sturm;

pub use algnum::AlgReal;
pub use cbox::{
    gauss_root_bound, gauss_squarefree, isolate_all_roots, isolate_complex_roots,
    isolate_upper_roots, refine_box, to_gauss, winding_count, CBox, RootLoc,
};
pub use dense::Poly;
pub use gauss::GaussQ;
pub use interval::{CInterval, QInterval};
pub use rational::{qi, qq, ratpoly_from_i64, ratpoly_from_q, BiPoly, RatPoly, QQ};
pub use resultant::{discriminant, resultant, squarefree_decompose, squarefree_part};
pub use ring::{Field, OrderedRing, Ring};
pub use sturm::{isolate_real_roots, root_bound, sign_at_root, SturmChain};
