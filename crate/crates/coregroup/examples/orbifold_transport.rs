//! Sending peripheral pairs into the orbifold group of the augmented
//! diagram and reading them back.

use coregroup::grouppres::{build_core_presentation, Rewriter};
use coregroup::peripheral::{
    embed_pair, enumerate_pairs, orbifold_plus_presentation, transport_pair_from_orbifold,
    FreeReduction,
};
use coregroup::{generate_named, Named, Word};

fn main() -> coregroup::Result<()> {
    for name in [Named::Hopf, Named::LinkL, Named::BorromeanB] {
        let d = generate_named(&name)?;
        let p = build_core_presentation(&d);
        let op = orbifold_plus_presentation(&d)?;
        let rw = Rewriter::new(&p);
        let same = |a: &Word, b: &Word| rw.rewrite(&a.concat(&b.inverse()), 10_000).is_empty();
        let pairs = enumerate_pairs(&d, 1, &FreeReduction)?;
        let mut agree = 0;
        for pair in &pairs {
            let (m, l) = embed_pair(&d, pair)?;
            let back = transport_pair_from_orbifold(&d, &m, &l)?;
            if same(&back.meridian.word, &pair.meridian.word)
                && same(&back.longitude, &pair.longitude)
            {
                agree += 1;
            }
        }
        let (m, l) = embed_pair(&d, &pairs[pairs.len() - 1])?;
        println!(
            "{name}: last pair goes to ({}, {})",
            op.show(&m),
            op.show(&l)
        );
        println!(
            "{name}: {agree} of {} pairs come back unchanged",
            pairs.len()
        );
    }
    Ok(())
}
