//! Abelianizations.
//!
//! A presentation abelianizes to `Z^n / rowspace(M)` with `M` the exponent
//! sum matrix. After `U M V = D`, sending a generator's exponent row `x` to
//! `x V` identifies that quotient with `⊕ Z/d_i`. Coordinates with `d_i = 1`
//! are dropped; the rest are ordered free first, then torsion ascending.
//!
//! Named coordinates come from [`AbelianStructure::with_basis`]: name
//! words whose images should be the unit vectors and the map is solved for
//! coordinate by coordinate.

mod matrix;

pub use matrix::{smith_normal_form, solve_mod, IntegerMatrix, Snf};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::VirtualLinkDiagram;
use crate::error::{Error, Result};
use crate::grouppres::{Presentation, Word};
use crate::peripheral::Meridian;
use matrix::to_i64;

/// Exponent sums: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = p
        .relators()
        .iter()
        .map(|r| r.exponent_vector(p.ngens()))
        .collect();
    IntegerMatrix::from_rows(p.ngens(), &rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianStructure {
    pub free_rank: usize,
    /// Invariant factors `>= 2`, each dividing the next.
    pub torsion: Vec<u64>,
    /// Modulus of each coordinate, `0` for a free coordinate.
    moduli: Vec<u64>,
    /// Coordinate vector of each generator.
    coords: Vec<Vec<i64>>,
}

fn reduce(x: i64, m: u64) -> i64 {
    if m == 0 {
        x
    } else {
        x.rem_euclid(m as i64)
    }
}

impl AbelianStructure {
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Coordinates of generator `g`.
    pub fn basis_image(&self, g: usize) -> &[i64] {
        &self.coords[g]
    }

    /// Exponent-sum image of a word.
    pub fn image(&self, w: &Word) -> Result<Vec<i64>> {
        let mut v = vec![0i64; self.moduli.len()];
        for l in w.letters() {
            let c = self
                .coords
                .get(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", l.gen)))?;
            for (x, y) in v.iter_mut().zip(c) {
                *x += l.exp as i64 * y;
            }
        }
        Ok(self.normalize(&v))
    }

    pub fn normalize(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| reduce(x, m))
            .collect()
    }

    pub fn is_zero(&self, v: &[i64]) -> bool {
        self.normalize(v).iter().all(|&x| x == 0)
    }

    /// `Z^r + Zd^k + …`, or `0` for the trivial group.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            parts.push(if j - i == 1 {
                format!("Z{d}")
            } else {
                format!("Z{d}^{}", j - i)
            });
            i = j;
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Re-expresses the group in the basis whose `j`-th element is the image
    /// of `basis[j]`, a cyclic summand of order `orders[j]` (`0` for `Z`).
    /// Fails unless the orders match this structure and the words really
    /// generate with those orders.
    pub fn with_basis(
        &self,
        p: &Presentation,
        basis: &[Word],
        orders: &[u64],
    ) -> Result<AbelianStructure> {
        if basis.len() != orders.len() {
            return Err(Error::InvalidParameter(
                "one order per basis word is needed".into(),
            ));
        }
        let free = orders.iter().filter(|&&o| o == 0).count();
        let mut tors: Vec<u64> = orders.iter().copied().filter(|&o| o != 0).collect();
        tors.sort_unstable();
        if free != self.free_rank || tors != self.torsion {
            return Err(Error::InvalidParameter(format!(
                "basis orders {:?} do not match {}",
                orders,
                self.describe()
            )));
        }
        let n = p.ngens();
        let rel = relation_matrix(p);
        let b_rows: Vec<Vec<i64>> = basis.iter().map(|w| w.exponent_vector(n)).collect();
        let a = rel.stack(&IntegerMatrix::from_rows(n, &b_rows));
        let mut coords = vec![vec![0i64; orders.len()]; n];
        for (t, &o) in orders.iter().enumerate() {
            let mut c = vec![BigInt::zero(); a.rows()];
            c[rel.rows() + t] = BigInt::one();
            let y = solve_mod(&a, &c, o)?.ok_or_else(|| {
                Error::InvalidParameter(format!("basis word {} cannot be a unit vector", t + 1))
            })?;
            for g in 0..n {
                coords[g][t] = reduce(to_i64(&y[g])?, o);
            }
        }
        let out = AbelianStructure {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
            moduli: orders.to_vec(),
            coords,
        };
        // A surjection between isomorphic finitely generated abelian groups
        // is an isomorphism, so these checks suffice.
        for r in p.relators() {
            if !out.is_zero(&out.image(r)?) {
                return Err(Error::Invariant(
                    "basis change does not kill a relator".into(),
                ));
            }
        }
        for (t, w) in basis.iter().enumerate() {
            let mut e = vec![0i64; orders.len()];
            e[t] = 1;
            if out.image(w)? != out.normalize(&e) {
                return Err(Error::Invariant(
                    "basis change misplaces a basis word".into(),
                ));
            }
        }
        Ok(out)
    }
}

/// Abelianization with canonical coordinates.
pub fn abelianization(p: &Presentation) -> Result<AbelianStructure> {
    let m = relation_matrix(p);
    let s = smith_normal_form(&m)?;
    let n = p.ngens();
    let diag = s.diagonal();
    let mut free_cols = Vec::new();
    let mut tors_cols = Vec::new();
    for k in 0..n {
        match diag.get(k) {
            None => free_cols.push((k, 0u64)),
            Some(d) if d.is_one() => {}
            Some(d) => tors_cols.push((k, to_i64(d)? as u64)),
        }
    }
    let cols: Vec<(usize, u64)> = free_cols
        .into_iter()
        .chain(tors_cols.iter().copied())
        .collect();
    let moduli: Vec<u64> = cols.iter().map(|c| c.1).collect();
    let mut coords = Vec::with_capacity(n);
    for g in 0..n {
        let mut v = Vec::with_capacity(cols.len());
        for &(k, m) in &cols {
            v.push(reduce(to_i64(s.v.get(g, k))?, m));
        }
        coords.push(v);
    }
    Ok(AbelianStructure {
        free_rank: n - diag.len(),
        torsion: tors_cols.iter().map(|c| c.1).collect(),
        moduli,
        coords,
    })
}

/// Image of a word; free-function form.
pub fn image_in_ab(s: &AbelianStructure, w: &Word) -> Result<Vec<i64>> {
    s.image(w)
}

/// `x -> translation - x` on abelian coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineInvolution {
    pub translation: Vec<i64>,
    moduli: Vec<u64>,
}

impl AffineInvolution {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.translation
            .iter()
            .zip(x)
            .zip(&self.moduli)
            .map(|((&t, &y), &m)| reduce(t - y, m))
            .collect()
    }
}

/// The involution induced on the abelianization by `ι_m`: since `ι_m(n) =
/// m n^-1 m` on meridians, it sends `α(n)` to `2α(m) - α(n)`.
pub fn induced_j(s: &AbelianStructure, m: &Word) -> Result<AffineInvolution> {
    let t: Vec<i64> = s.image(m)?.iter().map(|x| 2 * x).collect();
    Ok(AffineInvolution {
        translation: s.normalize(&t),
        moduli: s.moduli.clone(),
    })
}

/// Outcome of a parity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Consistent,
    Violated,
}

/// For a sequence of meridians whose `j` maps, composed, fix the image of
/// `start`, reports whether each component other than `start`'s occurs an
/// even number of times. `Violated` would contradict the parity
/// proposition for the Borromean rings.
pub fn parity_obstruction(
    s: &AbelianStructure,
    start: &Meridian,
    sequence: &[Meridian],
    mu: usize,
) -> Result<Parity> {
    let x0 = s.image(&start.word)?;
    let mut x = x0.clone();
    for m in sequence.iter().rev() {
        x = induced_j(s, &m.word)?.apply(&x);
    }
    if x != x0 {
        return Err(Error::Precondition(
            "the composed j maps do not fix the start image".into(),
        ));
    }
    let mut counts = vec![0usize; mu];
    for m in sequence {
        counts[m.component] += 1;
    }
    let ok = (0..mu)
        .filter(|&c| c != start.component)
        .all(|c| counts[c].is_multiple_of(2));
    Ok(if ok {
        Parity::Consistent
    } else {
        Parity::Violated
    })
}

/// Alexander relation matrix specialized at `t = -1`: per crossing the row
/// `γ_b2 - 2γ_a + γ_b1`.
pub fn alexander_nu_matrix(d: &VirtualLinkDiagram) -> IntegerMatrix {
    let n = d.arcs().len();
    let rows: Vec<Vec<i64>> = d
        .crossings()
        .map(|c| {
            let mut r = vec![0i64; n];
            r[c.left_under()] += 1;
            r[c.over_arc] -= 2;
            r[c.right_under] += 1;
            r
        })
        .collect();
    IntegerMatrix::from_rows(n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouppres::PresentationKind;

    #[test]
    fn hopf_abelianization() {
        let p = Presentation::from_text(
            &["a", "b"],
            &["a b^-1 a b^-1", "b a^-1 b a^-1"],
            PresentationKind::Core,
        )
        .unwrap();
        let s = abelianization(&p).unwrap();
        assert_eq!(s.describe(), "Z + Z2");
        for r in p.relators() {
            assert!(s.is_zero(&s.image(r).unwrap()));
        }
    }

    #[test]
    fn free_presentation() {
        let p = Presentation::from_text(&["a", "b"], &[], PresentationKind::Derived).unwrap();
        assert_eq!(relation_matrix(&p).rows(), 0);
        assert_eq!(abelianization(&p).unwrap().describe(), "Z^2");
    }

    #[test]
    fn basis_change() {
        let p = Presentation::from_text(
            &["a", "b"],
            &["a b^-1 a b^-1", "b a^-1 b a^-1"],
            PresentationKind::Core,
        )
        .unwrap();
        let s = abelianization(&p).unwrap();
        let basis = [p.word("a").unwrap(), p.word("b a^-1").unwrap()];
        let t = s.with_basis(&p, &basis, &[0, 2]).unwrap();
        assert_eq!(t.image(&p.word("b").unwrap()).unwrap(), vec![1, 1]);
        assert!(s.with_basis(&p, &basis, &[0, 4]).is_err());
    }

    #[test]
    fn involution() {
        let p = Presentation::from_text(&["a", "b"], &[], PresentationKind::Derived).unwrap();
        let s = abelianization(&p).unwrap();
        let j = induced_j(&s, &p.word("a").unwrap()).unwrap();
        let x = vec![3, -1];
        assert_eq!(j.apply(&j.apply(&x)), x);
    }
}
