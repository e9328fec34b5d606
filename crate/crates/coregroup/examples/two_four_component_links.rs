//! Two four-component links with the same linking data: in one every
//! longitude is nontrivial, in the other one component's longitude is the
//! identity.

use coregroup::grouppres::build_core_presentation;
use coregroup::grouppres::freeprod::recognize_with_roots;
use coregroup::peripheral::longitude;
use coregroup::{generate_named, Named};

fn main() -> coregroup::Result<()> {
    for name in [Named::LinkL, Named::LinkLprime] {
        let d = generate_named(&name)?;
        let p = build_core_presentation(&d);
        // prefer t and v as roots so the factors read g_t, g_s g_t^-1, ...
        let roots: Vec<usize> = ["t", "v"]
            .iter()
            .filter_map(|l| d.arc_by_label(l).ok())
            .collect();
        let fp = recognize_with_roots(&p, &roots, 10_000)?;
        let factors: Vec<String> = fp.factors.iter().map(|f| p.show(&f.word)).collect();
        println!(
            "{name}: {} with factors {}",
            fp.describe(),
            factors.join(", ")
        );
        for arc in d.arcs() {
            let l = longitude(&d, arc.id)?;
            let nf = fp.normal_form(&l)?;
            println!(
                "  lambda({}) = {:<16} normal form {}",
                arc.label,
                p.show(&l),
                fp.show_normal_form(&nf, p.generators())
            );
        }
    }
    Ok(())
}
