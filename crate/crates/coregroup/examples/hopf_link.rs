//! The Hopf link: core presentation, free-product structure, the ι maps
//! and the orbifold quotient.

use coregroup::grouppres::{
    build_core_presentation, build_orbifold_presentation, recognize_free_product_of_cyclics,
    Rewriter,
};
use coregroup::peripheral::{iota, Meridian};
use coregroup::quotients::{identify_structure, todd_coxeter};
use coregroup::{generate_named, Named};

fn main() -> coregroup::Result<()> {
    let d = generate_named(&Named::Hopf)?;
    let p = build_core_presentation(&d);
    print!("{}", p.emit());

    let fp = recognize_free_product_of_cyclics(&p, 10_000)?;
    let factors: Vec<String> = fp.factors.iter().map(|f| p.show(&f.word)).collect();
    println!(
        "free product: {} generated by {}",
        fp.describe(),
        factors.join(", ")
    );

    // Each ι acts trivially once the relators are taken into account.
    let rw = Rewriter::new(&p);
    for m in Meridian::arcs(&d) {
        for g in 0..p.ngens() {
            let img = iota(&m, &coregroup::Word::gen(g), p.ngens())?;
            let diff = rw.rewrite(&img.concat(&coregroup::Word::gen(g).inverse()), 10_000);
            println!(
                "iota_{}({}) = {}  ~ {} mod relators",
                p.show(&m.word),
                p.generators()[g],
                p.show(&img),
                if diff.is_empty() { "itself" } else { "?" }
            );
        }
    }

    let o = build_orbifold_presentation(&p)?;
    let t = todd_coxeter(&o, &[], 1_000)?;
    println!(
        "orbifold quotient: order {} = {}",
        t.count(),
        identify_structure(&t)?
    );
    Ok(())
}
