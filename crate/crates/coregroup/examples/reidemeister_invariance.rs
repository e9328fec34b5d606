//! Random Reidemeister moves leave the abelianization of the core group
//! unchanged.

use coregroup::abelian::abelianization;
use coregroup::diagram::{apply_reidemeister, legal_moves};
use coregroup::grouppres::build_core_presentation;
use coregroup::{generate_named, Named};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coregroup::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in [Named::Hopf, Named::BorromeanB, Named::Pretzel(7, -3, 5)] {
        let mut d = generate_named(&name)?;
        let start = abelianization(&build_core_presentation(&d))?.describe();
        for step in 1..=12 {
            let moves = legal_moves(&d);
            let mv = *moves.choose(&mut rng).expect("a kink can always be added");
            d = apply_reidemeister(&d, mv)?;
            let now = abelianization(&build_core_presentation(&d))?.describe();
            assert_eq!(now, start, "{name} changed after {mv:?}");
            if step % 4 == 0 {
                println!(
                    "{name}: {step} moves, {} crossings, abelianization {now}",
                    d.crossing_count()
                );
            }
        }
    }
    Ok(())
}
