//! The Borromean rings: abelianization in a hand-picked basis, the six
//! longitudes, the η representations, and the separation of `B` from `B'`.

use coregroup::abelian::abelianization;
use coregroup::grouppres::build_core_presentation;
use coregroup::peripheral::{enumerate_meridians, longitude};
use coregroup::quotients::{eta_n, search_homs, separate, HomSearch};
use coregroup::{generate_named, Named};

fn main() -> coregroup::Result<()> {
    let d = generate_named(&Named::BorromeanB)?;
    let p = build_core_presentation(&d);
    let ab = abelianization(&p)?;
    println!("abelianization: {}", ab.describe());

    let basis = [p.word("g_u")?, p.word("g_w g_u^-1")?, p.word("g_y g_u^-1")?];
    let ab = ab.with_basis(&p, &basis, &[0, 4, 4])?;
    // deduplicated by abelian image
    let ms = enumerate_meridians(&d, 1, &ab)?;
    println!("{} meridian images at depth <= 1:", ms.len());
    for m in &ms {
        println!(
            "  K{} {:<16} -> {:?}",
            m.component + 1,
            p.show(&m.word),
            ab.image(&m.word)?
        );
    }

    for arc in d.arcs() {
        println!(
            "lambda({}) = {}",
            arc.label,
            p.show(&longitude(&d, arc.id)?)
        );
    }
    for n in 1..=6 {
        let e = eta_n(n)?;
        let lw = e.eval(&longitude(&d, d.arc_by_label("w")?)?)?;
        println!(
            "eta_{n}: order of lambda(w) image {}, of g_y image {}",
            lw.order(),
            e.images[4].order()
        );
    }

    let homs = search_homs(&p, HomSearch::new(4, 100).transitive())?;
    let e2 = eta_n(2)?;
    println!(
        "transitive degree-4 search: {} found, one conjugate to eta_2: {}",
        homs.len(),
        homs.iter().any(|h| h.is_conjugate_to(&e2))
    );

    let dp = generate_named(&Named::BorromeanBprime)?;
    let y = d.arc_by_label("y")?;
    let (l1, l2) = (longitude(&d, y)?, longitude(&dp, y)?);
    if let Some(cert) = separate(&p, &l1, &l2, &[eta_n(3)?], 0, 0)? {
        println!("B vs B': lambda(y) separated\n{}", cert.emit(&p));
    }
    Ok(())
}
