//! Module-level invariants checked over the whole fixture catalogue.

use coregroup::abelian::abelianization;
use coregroup::diagram::{
    apply_reidemeister, generate_named, legal_moves, parse_gauss_code, Named, VirtualLinkDiagram,
};
use coregroup::grouppres::{
    build_core_presentation, recognize_free_product_of_cyclics, tietze_simplify, Letter,
    Presentation, Rewriter, Word,
};
use coregroup::peripheral::{
    enumerate_meridians, iota, iota_on_meridian, longitude, FreeReduction, Meridian,
};
use coregroup::quotients::whitehead::{diagram_presentation, two_generator_presentation};
use coregroup::quotients::{
    check_assignment, eta_family, search_homs, separate, todd_coxeter, HomSearch, PermAssignment,
};
use coregroup::triangle::{
    build_triangle, check_translation_along_xi, evaluate, relation_residual,
    trotter_longitude_class, Isometry,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalogue() -> Vec<(Named, VirtualLinkDiagram)> {
    Named::catalogue()
        .into_iter()
        .map(|n| (n.clone(), generate_named(&n).unwrap()))
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(0..ngens), if rng.gen() { 1 } else { -1 }))
            .collect(),
    )
}

/// Verified finite quotients: the η family where it applies, plus a few
/// searched transitive ones.
fn quotients(p: &Presentation) -> Vec<PermAssignment> {
    let mut out: Vec<PermAssignment> = Vec::new();
    if p.ngens() == 6 {
        for n in 1..=6 {
            out.extend(
                eta_family(n)
                    .unwrap()
                    .into_iter()
                    .filter(|a| check_assignment(p, a).unwrap()),
            );
        }
    }
    for degree in 2..=4 {
        out.extend(search_homs(p, HomSearch::new(degree, 10).transitive()).unwrap());
    }
    out
}

#[test]
fn builtins_round_trip_and_count_underpasses() {
    for (name, d) in catalogue() {
        assert_eq!(
            parse_gauss_code(&d.to_gauss_code()).unwrap().components(),
            d.components(),
            "{name}"
        );
        let k: usize = (0..d.mu()).map(|c| d.underpass_count(c)).sum();
        assert_eq!(k, d.crossing_count(), "{name}");
    }
}

#[test]
fn every_move_site_preserves_abelianization() {
    let mut applied = 0;
    for (name, d) in catalogue()
        .into_iter()
        .filter(|(_, d)| d.crossing_count() <= 8)
    {
        let want = abelianization(&build_core_presentation(&d)).unwrap();
        for mv in legal_moves(&d) {
            let e = apply_reidemeister(&d, mv).unwrap();
            let got = abelianization(&build_core_presentation(&e)).unwrap();
            assert_eq!(
                (got.free_rank, &got.torsion),
                (want.free_rank, &want.torsion),
                "{name} {mv:?}"
            );
            applied += 1;
        }
    }
    assert!(applied > 100);
}

#[test]
fn core_relators_alternate() {
    for (name, d) in catalogue() {
        for r in build_core_presentation(&d).relators() {
            let exps: Vec<i8> = r.letters().iter().map(|l| l.exp).collect();
            assert_eq!(exps, [1, -1, 1, -1], "{name}");
        }
    }
}

#[test]
fn rewriting_keeps_quotient_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, d) in catalogue() {
        let p = build_core_presentation(&d);
        let rw = Rewriter::new(&p);
        let qs = quotients(&p);
        for _ in 0..30 {
            let w = random_word(&mut rng, p.ngens(), 20);
            let v = rw.rewrite(&w, 2_000);
            for q in &qs {
                assert_eq!(q.eval(&w).unwrap(), q.eval(&v).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn distinct_normal_forms_are_separated() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in [Named::LinkL, Named::LinkLprime] {
        let d = generate_named(&name).unwrap();
        let p = build_core_presentation(&d);
        let fp = recognize_free_product_of_cyclics(&p, 10_000).unwrap();
        let homs: Vec<PermAssignment> = (2..=4)
            .flat_map(|n| search_homs(&p, HomSearch::new(n, 3_000).transitive()).unwrap())
            .collect();
        let mut separated = 0;
        for _ in 0..20 {
            let (a, b) = (
                random_word(&mut rng, p.ngens(), 6),
                random_word(&mut rng, p.ngens(), 6),
            );
            if fp.normal_form(&a).unwrap() == fp.normal_form(&b).unwrap() {
                continue;
            }
            let cert = separate(&p, &a, &b, &homs, 8, 50).unwrap();
            assert!(
                cert.is_some(),
                "{name}: {} vs {} not separated",
                p.show(&a),
                p.show(&b)
            );
            separated += 1;
        }
        assert!(separated > 10);
    }
}

#[test]
fn tietze_keeps_abelianization() {
    for (name, d) in catalogue() {
        let p = build_core_presentation(&d);
        let t = tietze_simplify(&p).presentation;
        let (a, b) = (abelianization(&p).unwrap(), abelianization(&t).unwrap());
        assert_eq!((a.free_rank, a.torsion), (b.free_rank, b.torsion), "{name}");
    }
}

#[test]
fn longitudes_are_even_alternating_and_share_abelian_images() {
    for (name, d) in catalogue() {
        let p = build_core_presentation(&d);
        let ab = abelianization(&p).unwrap();
        for c in 0..d.mu() {
            let imgs: Vec<Vec<i64>> = d
                .component_arcs(c)
                .iter()
                .map(|&a| ab.image(&longitude(&d, a).unwrap()).unwrap())
                .collect();
            assert!(
                imgs.windows(2).all(|w| w[0] == w[1]),
                "{name} component {c}"
            );
        }
        for a in d.arcs() {
            let l = longitude(&d, a.id).unwrap().free_reduce();
            assert!(l.is_even_alternating(), "{name}: {}", p.show(&l));
        }
    }
}

#[test]
fn iota_preserves_component_tags() {
    for (name, d) in catalogue() {
        let ms = enumerate_meridians(&d, 1, &FreeReduction).unwrap();
        for m in &ms {
            for n in &ms {
                assert_eq!(iota_on_meridian(m, n).component, n.component, "{name}");
            }
        }
    }
}

#[test]
fn iota_is_a_homomorphism_in_quotients() {
    for (name, d) in catalogue() {
        let p = build_core_presentation(&d);
        let n = p.ngens();
        let qs = quotients(&p);
        for c in d.crossings() {
            let [a, b1, b2] =
                [c.over_arc, c.right_under, c.left_under()].map(|x| Meridian::arc(&d, x).unwrap());
            for g in 0..n {
                let w = Word::gen(g);
                let lhs = iota(&a, &iota(&b1, &iota(&a, &w, n).unwrap(), n).unwrap(), n).unwrap();
                let rhs = iota(&b2, &w, n).unwrap();
                for q in &qs {
                    assert_eq!(
                        q.eval(&lhs).unwrap(),
                        q.eval(&rhs).unwrap(),
                        "{name} crossing {}",
                        c.id
                    );
                }
            }
        }
    }
}

#[test]
fn coset_tables_verify() {
    for n in -3..=3 {
        for p in [
            two_generator_presentation(n).unwrap(),
            diagram_presentation(n).unwrap(),
        ] {
            let t = todd_coxeter(&p, &[], 100_000).unwrap();
            assert!(t.verify(), "n = {n}");
            let sub = todd_coxeter(&p, &[Word::gen(0)], 100_000).unwrap();
            assert!(sub.verify() && t.count() % sub.count() == 0, "n = {n}");
        }
    }
}

fn admissible() -> Vec<(i64, i64, i64)> {
    let abs = [3i64, 5, 7, 9, 11];
    let mut out = Vec::new();
    for &p in &abs {
        for &q in &abs {
            for &r in &abs {
                if p == q || q == r || p == r {
                    continue;
                }
                for s in 0..8 {
                    let sg = |bit: i64, x: i64| if s >> bit & 1 == 1 { -x } else { x };
                    out.push((sg(0, p), sg(1, q), sg(2, r)));
                }
            }
        }
    }
    out
}

#[test]
fn triangle_relations_for_all_small_triples() {
    for (p, q, r) in admissible() {
        let (data, refl) = build_triangle(p, q, r).unwrap();
        for x in &refl {
            assert!(x.mul(x).distance(&Isometry::identity()) < 1e-9);
        }
        assert!(relation_residual(&data, &refl) < 1e-7, "({p},{q},{r})");
        let lam = trotter_longitude_class(p, q, r).unwrap();
        let rep =
            check_translation_along_xi(&data, &refl, &evaluate(&lam, &refl).unwrap()).unwrap();
        assert!(
            rep.commutes_with_x && rep.translation_length > 1e-3,
            "({p},{q},{r}): {rep:?}"
        );
    }
}

#[test]
fn long_products_stay_lorentz() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (_, refl) = build_triangle(7, -3, 5).unwrap();
    for _ in 0..50 {
        let w = random_word(&mut rng, 3, 64);
        assert!(evaluate(&w, &refl).unwrap().lorentz_defect() < 1e-7);
    }
}
