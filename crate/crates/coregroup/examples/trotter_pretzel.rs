//! The pretzel knot `(7, -3, 5)`: the triangle-group quotient, its
//! reflection representation, and the longitude acting as a translation.

use coregroup::diagram::pretzel;
use coregroup::grouppres::{build_wirtinger_presentation, tietze_simplify};
use coregroup::triangle::{
    build_triangle, check_translation_along_xi, evaluate, relation_residual,
    trotter_longitude_class, trotter_quotient,
};

fn main() -> coregroup::Result<()> {
    let (p, q, r) = (7, -3, 5);
    let d = pretzel(p, q, r)?;
    let w = tietze_simplify(&build_wirtinger_presentation(&d)).presentation;
    println!(
        "knot group after Tietze: {} generators, {} relators",
        w.ngens(),
        w.relators().len()
    );

    let quotient = trotter_quotient(p, q, r)?;
    print!("{}", quotient.emit());
    let (data, refl) = build_triangle(p, q, r)?;
    println!("k, l, m = {}, {}, {}", data.k, data.l, data.m);
    println!("relation residual {:.2e}", relation_residual(&data, &refl));

    let lam = trotter_longitude_class(p, q, r)?;
    println!("longitude image: {}", quotient.show(&lam));
    let fwd = check_translation_along_xi(&data, &refl, &evaluate(&lam, &refl)?)?;
    let back = check_translation_along_xi(&data, &refl, &evaluate(&lam.inverse(), &refl)?)?;
    println!(
        "commutes with X: {} (residual {:.2e}); translation length {:.4}; direction {} / inverse {}",
        fwd.commutes_with_x, fwd.commutator_residual, fwd.translation_length, fwd.direction_sign, back.direction_sign
    );
    Ok(())
}
