//! Finite quotients: permutation representations, coset enumeration and
//! what can be certified with them.
//!
//! Nothing here decides the word problem. A separation certificate proves
//! two words differ; failing to find one proves nothing.

mod coset;
mod homs;
mod perm;
mod structure;
pub mod whitehead;

pub use coset::{reidemeister_schreier, todd_coxeter, CosetTable, SubgroupPresentation};
pub use homs::{
    check_assignment, eta_n, order_profile, search_homs, separate, HomSearch, PermAssignment,
    SeparationCertificate,
};
pub use perm::{parse_perm, Perm};
pub use structure::{identify_structure, regular_elements, SplitCyclic, StructureReport};

use crate::grouppres::GeneratorMap;
use crate::grouppres::Word;

/// The symmetry `u -> w -> y -> u`, `v -> x -> z -> v` of the Borromean
/// core presentation, as a generator map on `u, v, w, x, y, z`.
pub fn borromean_rotation() -> GeneratorMap {
    let target = [2usize, 3, 4, 5, 0, 1];
    GeneratorMap::from_fn(6, |g| Word::gen(target[g]))
}

/// `η_n ∘ σ^j` for `j = 0, 1, 2`.
pub fn eta_family(n: usize) -> crate::error::Result<Vec<PermAssignment>> {
    let e = eta_n(n)?;
    let s = borromean_rotation();
    let s2 = s.compose(&s)?;
    Ok(vec![e.clone(), e.precompose(&s, 6)?, e.precompose(&s2, 6)?])
}
