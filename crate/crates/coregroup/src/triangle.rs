//! Reflection representation of the Trotter triangle quotient.
//!
//! Works in the hyperboloid model: `R^3` with the form `J = diag(1, 1, -1)`.
//! Sides are given by unit spacelike normals `n` and the reflection in a
//! side is `v -> v - 2<v, n> n`. The normals come from the Gram matrix of
//! the triangle, factored through its eigendecomposition.
//!
//! The side pairs `(ξ, η)`, `(η, ζ)`, `(ζ, ξ)` meet at angles `π/|r|`,
//! `π/|p|`, `π/|q|`, so `xy`, `yz`, `zx` are rotations of orders `|r|`,
//! `|p|`, `|q|`. Signs of `p, q, r` only enter through `k, l, m`.

use std::f64::consts::PI;

use nalgebra::{Matrix3, SymmetricEigen, Vector3};

use crate::error::{Error, Result};
use crate::grouppres::{Presentation, PresentationKind, Word};
use crate::tolerances::{COMPOSED, CONSTRUCTION, MIN_TRANSLATION};

fn lorentz() -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0))
}

fn form(a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    a.x * b.x + a.y * b.y - a.z * b.z
}

/// An isometry of the hyperboloid, as a 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry(pub Matrix3<f64>);

impl Isometry {
    pub fn identity() -> Self {
        Isometry(Matrix3::identity())
    }

    /// `self` applied after `other`.
    pub fn mul(&self, other: &Isometry) -> Isometry {
        Isometry(self.0 * other.0)
    }

    /// `J^-1 M^T J`, exact for Lorentz matrices.
    pub fn inverse(&self) -> Isometry {
        let j = lorentz();
        Isometry(j * self.0.transpose() * j)
    }

    /// Largest entry of `M^T J M - J`, relative to the squared size of
    /// `M`. Long translations have entries near `cosh` of their length, so
    /// absolute residuals grow with them.
    pub fn lorentz_defect(&self) -> f64 {
        let j = lorentz();
        (self.0.transpose() * j * self.0 - j).abs().max() / self.size().powi(2)
    }

    /// Largest absolute entry, at least 1.
    pub fn size(&self) -> f64 {
        self.0.abs().max().max(1.0)
    }

    /// Largest entry of `self - other`.
    pub fn distance(&self, other: &Isometry) -> f64 {
        (self.0 - other.0).abs().max()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }
}

/// Parameters and side normals of the triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleData {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub k: i64,
    pub l: i64,
    pub m: i64,
    /// Normals of `ξ`, `η`, `ζ`.
    pub normals: [Vector3<f64>; 3],
}

impl TriangleData {
    /// Angle between two sides, from their normals.
    pub fn angle(&self, i: usize, j: usize) -> f64 {
        (-form(&self.normals[i], &self.normals[j]))
            .clamp(-1.0, 1.0)
            .acos()
    }
}

fn check_triple(p: i64, q: i64, r: i64) -> Result<()> {
    let a = [p.unsigned_abs(), q.unsigned_abs(), r.unsigned_abs()];
    if [p, q, r].iter().any(|x| x % 2 == 0) {
        return Err(Error::InvalidParameter(format!(
            "({p},{q},{r}) has an even entry"
        )));
    }
    if a.iter().any(|&x| x < 3) {
        return Err(Error::InvalidParameter(format!(
            "({p},{q},{r}) needs |entries| >= 3"
        )));
    }
    if a[0] == a[1] || a[1] == a[2] || a[0] == a[2] {
        return Err(Error::InvalidParameter(format!(
            "({p},{q},{r}) needs distinct absolute values"
        )));
    }
    if a.iter().map(|&x| 1.0 / x as f64).sum::<f64>() >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "({p},{q},{r}) is not hyperbolic"
        )));
    }
    Ok(())
}

/// `x -> v - 2<v, n> n`.
pub fn reflection(n: &Vector3<f64>) -> Isometry {
    Isometry(Matrix3::identity() - 2.0 * n * (lorentz() * n).transpose())
}

/// The triangle for `(p, q, r)` and the reflections `X, Y, Z` in its sides.
pub fn build_triangle(p: i64, q: i64, r: i64) -> Result<(TriangleData, [Isometry; 3])> {
    check_triple(p, q, r)?;
    // Gram matrix in side order ξ, η, ζ
    let c = |m: i64| -(PI / m.unsigned_abs() as f64).cos();
    let gram = Matrix3::new(1.0, c(r), c(q), c(r), 1.0, c(p), c(q), c(p), 1.0);
    let eig = SymmetricEigen::new(gram);
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    if !(eig.eigenvalues[order[1]] > 0.0 && eig.eigenvalues[order[2]] < 0.0) {
        return Err(Error::Invariant(
            "Gram matrix does not have signature (2,1)".into(),
        ));
    }
    // rows: sqrt|λ| q^T, negative eigenvalue last
    let mut nm = Matrix3::zeros();
    for (row, &e) in order.iter().enumerate() {
        let s = eig.eigenvalues[e].abs().sqrt();
        for col in 0..3 {
            nm[(row, col)] = s * eig.eigenvectors[(col, e)];
        }
    }
    let normals = [
        nm.column(0).into_owned(),
        nm.column(1).into_owned(),
        nm.column(2).into_owned(),
    ];
    let data = TriangleData {
        p,
        q,
        r,
        k: (p - 1).div_euclid(2),
        l: (q - 1).div_euclid(2),
        m: (r - 1).div_euclid(2),
        normals,
    };
    for (i, j, want) in [(0, 1, r), (1, 2, p), (2, 0, q)] {
        if (data.angle(i, j) - PI / want.unsigned_abs() as f64).abs() > CONSTRUCTION {
            return Err(Error::Invariant("side angles do not match".into()));
        }
    }
    let refl = [
        reflection(&normals[0]),
        reflection(&normals[1]),
        reflection(&normals[2]),
    ];
    for x in &refl {
        if x.lorentz_defect() > CONSTRUCTION
            || x.mul(x).distance(&Isometry::identity()) > CONSTRUCTION
        {
            return Err(Error::Invariant(
                "reflection is not a Lorentz involution".into(),
            ));
        }
    }
    Ok((data, refl))
}

/// `<x, y, z ; x^2, y^2, z^2, (xy)^r, (yz)^p, (zx)^q>`.
pub fn trotter_quotient(p: i64, q: i64, r: i64) -> Result<Presentation> {
    let xy = Word::from_signed(&[1, 2]);
    let yz = Word::from_signed(&[2, 3]);
    let zx = Word::from_signed(&[3, 1]);
    let rels = vec![
        Word::gen_pow(0, 2),
        Word::gen_pow(1, 2),
        Word::gen_pow(2, 2),
        xy.pow(r),
        yz.pow(p),
        zx.pow(q),
    ];
    Presentation::new(
        vec!["x".into(), "y".into(), "z".into()],
        rels,
        PresentationKind::Derived,
    )
}

/// `((xy)^-m (yz)^-k (zx)^-l)^2` over `x, y, z`.
pub fn trotter_longitude_class(p: i64, q: i64, r: i64) -> Result<Word> {
    if [p, q, r].iter().any(|x| x % 2 == 0) {
        return Err(Error::InvalidParameter(format!(
            "({p},{q},{r}) has an even entry"
        )));
    }
    let (k, l, m) = ((p - 1) / 2, (q - 1) / 2, (r - 1) / 2);
    let xy = Word::from_signed(&[1, 2]);
    let yz = Word::from_signed(&[2, 3]);
    let zx = Word::from_signed(&[3, 1]);
    let base = xy.pow(-m).concat(&yz.pow(-k)).concat(&zx.pow(-l));
    Ok(base.concat(&base))
}

/// Image of a word over `x, y, z`, letters multiplied left to right.
/// Reflections are involutions, so exponents do not matter.
pub fn evaluate(word: &Word, refl: &[Isometry; 3]) -> Result<Isometry> {
    word.letters()
        .iter()
        .try_fold(Isometry::identity(), |acc, l| {
            let g = refl
                .get(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", l.gen)))?;
            Ok(acc.mul(g))
        })
}

/// Largest deviation from the identity among `(XY)^|r|`, `(YZ)^|p|`,
/// `(ZX)^|q|`.
pub fn relation_residual(data: &TriangleData, refl: &[Isometry; 3]) -> f64 {
    let [x, y, z] = refl;
    let power = |a: Isometry, n: i64| {
        (0..n.unsigned_abs()).fold(Isometry::identity(), |acc, _| acc.mul(&a))
    };
    [
        power(x.mul(y), data.r),
        power(y.mul(z), data.p),
        power(z.mul(x), data.q),
    ]
    .iter()
    .map(|m| m.distance(&Isometry::identity()))
    .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TranslationReport {
    pub commutes_with_x: bool,
    /// `|TX - XT|`, relative to the size of `T`.
    pub commutator_residual: f64,
    pub translation_length: f64,
    /// `+1` along the chosen orientation of `ξ`, `-1` against, `0` when
    /// the translation length is below the noise floor.
    pub direction_sign: i8,
}

/// Checks that `t` preserves `ξ` and measures its translation along it.
/// `ξ` is oriented by `J(n_ξ × P)` at the vertex `P = ξ ∩ η`.
pub fn check_translation_along_xi(
    data: &TriangleData,
    refl: &[Isometry; 3],
    t: &Isometry,
) -> Result<TranslationReport> {
    if t.lorentz_defect() > COMPOSED {
        return Err(Error::Invariant(format!(
            "product drifted off the Lorentz group by {:e}",
            t.lorentz_defect()
        )));
    }
    let x = &refl[0];
    let commutator_residual = t.mul(x).distance(&x.mul(t)) / t.size();
    let j = lorentz();
    let (nx, ny) = (&data.normals[0], &data.normals[1]);
    let mut vertex = j * nx.cross(ny);
    let norm = (-form(&vertex, &vertex)).sqrt();
    vertex /= norm;
    if vertex.z < 0.0 {
        vertex = -vertex;
    }
    let mut tangent = j * nx.cross(&vertex);
    tangent /= form(&tangent, &tangent).sqrt();
    let c = ((t.trace() - 1.0) / 2.0).max(1.0);
    let translation_length = c.acosh();
    let moved = t.0 * vertex;
    let along = form(&moved, &tangent);
    let direction_sign = if translation_length < MIN_TRANSLATION {
        0
    } else if along > 0.0 {
        1
    } else {
        -1
    };
    Ok(TranslationReport {
        commutes_with_x: commutator_residual < COMPOSED,
        commutator_residual,
        translation_length,
        direction_sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longitude_word_for_seven_minus_three_five() {
        let w = trotter_longitude_class(7, -3, 5).unwrap();
        let p = trotter_quotient(7, -3, 5).unwrap();
        assert_eq!(
            p.show(&w),
            "y^-1 x^-1 y^-1 x^-1 z^-1 y^-1 z^-1 y^-1 z^-1 y^-1 z x z x y^-1 x^-1 y^-1 x^-1 z^-1 y^-1 z^-1 y^-1 z^-1 y^-1 z x z x"
        );
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(build_triangle(3, 3, 5).is_err());
        assert!(build_triangle(4, 3, 5).is_err());
        assert!(build_triangle(1, 3, 5).is_err());
    }

    #[test]
    fn reflections_are_involutions() {
        let (d, refl) = build_triangle(7, -3, 5).unwrap();
        for x in &refl {
            assert!(x.mul(x).distance(&Isometry::identity()) < CONSTRUCTION);
        }
        assert!(relation_residual(&d, &refl) < COMPOSED);
    }
}
