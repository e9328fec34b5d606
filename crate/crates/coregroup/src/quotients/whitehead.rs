//! The even-product subgroups of the twisted Whitehead links, computed from
//! the two-generator presentation and from a generated diagram.

use crate::abelian::abelianization;
use crate::diagram::twisted_whitehead;
use crate::error::{Error, Result};
use crate::grouppres::{
    build_core_presentation, split_off_generator, tietze_simplify, Presentation, PresentationKind,
    Word,
};

use super::{identify_structure, reidemeister_schreier, todd_coxeter, StructureReport};

/// `<a, b ; a^2 b a^2 b^-1, a^(4n-1) b^2>`.
pub fn two_generator_presentation(n: i64) -> Result<Presentation> {
    let m = 4 * n - 1;
    let mut second = Word::gen_pow(0, m);
    second = second.concat(&Word::gen_pow(1, 2));
    let first = Word::from_signed(&[1, 1, 2, 1, 1, -2]);
    Presentation::new(
        vec!["a".into(), "b".into()],
        vec![first, second],
        PresentationKind::Derived,
    )
}

/// The core presentation of the generated diagram with one arc generator
/// set to the identity.
pub fn diagram_presentation(n: i64) -> Result<Presentation> {
    let d = twisted_whitehead(n)?;
    split_off_generator(&build_core_presentation(&d), 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadReport {
    pub n: i64,
    pub order: u64,
    pub b_order: u64,
    /// Order of `u = a b^-2`.
    pub u_order: u64,
    /// Index of `<u>`, the kernel of `b -> 1, u -> 0`.
    pub kernel_index: usize,
    /// Invariant factors of the kernel's abelianization.
    pub kernel_abelianization: Vec<u64>,
    /// The kernel has order `order / kernel_index` and a cyclic
    /// abelianization of that order.
    pub kernel_cyclic: bool,
    /// `b u b^-1 = u^-1`.
    pub b_inverts_u: bool,
    pub structure: StructureReport,
}

pub fn analyze_two_generator(n: i64, ceiling: usize) -> Result<WhiteheadReport> {
    let p = two_generator_presentation(n)?;
    let t = todd_coxeter(&p, &[], ceiling)?;
    let structure = identify_structure(&t)?;
    let b = Word::gen(1);
    let u = Word::gen(0).concat(&Word::gen_pow(1, -2));
    let b_order = t.word_perm(&b).order();
    let u_order = t.word_perm(&u).order();
    let bub = b.concat(&u).concat(&b.inverse());
    let b_inverts_u = t.word_perm(&bub) == t.word_perm(&u.inverse());
    let kt = todd_coxeter(&p, std::slice::from_ref(&u), ceiling)?;
    let sub = reidemeister_schreier(&kt)?;
    let simplified = tietze_simplify(&sub.presentation).presentation;
    let ab = abelianization(&simplified)?;
    let korder = t.count() / kt.count();
    let kernel_cyclic = ab.free_rank == 0
        && ab.torsion.len() <= 1
        && ab.torsion.iter().product::<u64>() == korder as u64;
    if t.count() % kt.count() != 0 {
        return Err(Error::Invariant(
            "subgroup index does not divide the order".into(),
        ));
    }
    Ok(WhiteheadReport {
        n,
        order: t.count() as u64,
        b_order,
        u_order,
        kernel_index: kt.count(),
        kernel_abelianization: ab.torsion.clone(),
        kernel_cyclic,
        b_inverts_u,
        structure,
    })
}

/// Order and structure of the diagram-derived presentation.
pub fn analyze_diagram(n: i64, ceiling: usize) -> Result<StructureReport> {
    let p = diagram_presentation(n)?;
    identify_structure(&todd_coxeter(&p, &[], ceiling)?)
}
