//! Arbitrary-precision integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row_i64(&self, i: usize) -> Result<Vec<i64>> {
        (0..self.cols).map(|j| to_i64(self.get(i, j))).collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntegerMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invariant(format!("integer {x} does not fit in 64 bits")))
}

/// `U · M · V = D`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }

    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_one())
            .collect()
    }

    /// Columns minus rank.
    pub fn rank_deficit(&self) -> usize {
        self.d.cols - self.rank()
    }
}

/// Smith normal form with the result checked: `U M V = D`, `D` diagonal
/// with a divisibility chain of nonnegative entries, `det U, det V = ±1`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<Snf> {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(r);
    let mut v = IntegerMatrix::identity(c);
    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry of the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = d.get(i, j);
                if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < d.get(pi, pj).abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                // divisibility: fold an offending row into row t
                let p = d.get(t, t).clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        d.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            } else {
                // move the smallest remainder into the pivot position
                let mut best = (t, t);
                for i in t..r {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t..c {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let snf = Snf { u, d, v };
    verify_snf(m, &snf)?;
    Ok(snf)
}

fn verify_snf(m: &IntegerMatrix, s: &Snf) -> Result<()> {
    if s.u.mul(m).mul(&s.v) != s.d {
        return Err(Error::Invariant("Smith form check U*M*V = D failed".into()));
    }
    for i in 0..s.d.rows {
        for j in 0..s.d.cols {
            if i != j && !s.d.get(i, j).is_zero() {
                return Err(Error::Invariant("Smith form is not diagonal".into()));
            }
        }
    }
    let diag: Vec<BigInt> = (0..s.d.rows.min(s.d.cols))
        .map(|i| s.d.get(i, i).clone())
        .collect();
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        };
        if !ok || w[0].is_negative() {
            return Err(Error::Invariant(
                "Smith form divisibility chain broken".into(),
            ));
        }
    }
    for x in [s.u.det(), s.v.det()] {
        if x.abs() != BigInt::one() {
            return Err(Error::Invariant(
                "Smith form transform is not unimodular".into(),
            ));
        }
    }
    Ok(())
}

/// Solves `A y ≡ c` over `Z/o` (`o = 0` meaning `Z`). Returns one solution
/// or `None`.
pub fn solve_mod(a: &IntegerMatrix, c: &[BigInt], o: u64) -> Result<Option<Vec<BigInt>>> {
    let s = smith_normal_form(a)?;
    let o = BigInt::from(o);
    let uc: Vec<BigInt> = (0..a.rows)
        .map(|i| (0..a.rows).fold(BigInt::zero(), |acc, k| acc + s.u.get(i, k) * &c[k]))
        .collect();
    let mut z = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        let di = if i < a.cols {
            s.d.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        let rhs = &uc[i];
        if o.is_zero() {
            if di.is_zero() {
                if !rhs.is_zero() {
                    return Ok(None);
                }
            } else {
                if !rhs.is_multiple_of(&di) {
                    return Ok(None);
                }
                z[i] = rhs / &di;
            }
        } else {
            let g = di.gcd(&o);
            if !rhs.mod_floor(&o).is_multiple_of(&g) {
                return Ok(None);
            }
            if di.is_zero() {
                continue;
            }
            let m = &o / &g;
            let inv = mod_inverse(&(&di / &g).mod_floor(&m), &m);
            if i < a.cols {
                z[i] = ((rhs / &g) * inv).mod_floor(&m);
            }
        }
    }
    let y = (0..a.cols)
        .map(|i| (0..a.cols).fold(BigInt::zero(), |acc, k| acc + s.v.get(i, k) * &z[k]))
        .collect();
    Ok(Some(y))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}
