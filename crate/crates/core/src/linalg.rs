//! Dense exact linear algebra over the rationals.
//!
//! Everything here works on [`Scalar`] (an arbitrary-precision rational kept in
//! lowest terms) and is deterministic: elimination always pivots on the first
//! nonzero entry of the leftmost remaining column, so two runs on the same input
//! produce bit-identical echelon forms. [`Subspace`] stores its basis in reduced
//! row echelon form, which makes subspace equality a plain `==`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always normalized (lowest terms, positive denominator).
pub type Scalar = BigRational;

/// Builds the scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds the scalar `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` exactly. Whitespace and decimal points are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid rational {text:?}: expected \"p\" or \"p/q\""));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) || den.starts_with('-') {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("invalid rational {text:?}: zero denominator")));
    }
    Ok(Scalar::new(num, den))
}

/// Renders a scalar as `"p"` or `"p/q"`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn zero_vector(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vec<Scalar> {
    let mut v = zero_vector(len);
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (s, t) in acc.iter_mut().zip(x) {
        if !t.is_zero() {
            *s += a * t;
        }
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Row-major construction; `entries.len()` must equal `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience for tests and literals: integer entries.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    pub fn pow(&self, exp: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut out = Matrix::identity(self.rows);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Block-diagonal matrix `diag(a, b)`.
    pub fn block_diagonal(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                m[(r, c)] = a[(r, c)].clone();
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                m[(a.rows + r, a.cols + c)] = b[(r, c)].clone();
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let red = rref(&aug);
        if red.pivots.len() < n || (n > 0 && red.pivots[n - 1] != n - 1) {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red.matrix[(r, n + c)].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form. The pivot for each column is the first row (at or
/// below the current pivot row) with a nonzero entry; no other heuristics.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..cols {
                a.entries.swap(found * cols + c, pivot_row * cols + c);
            }
        }
        let inv = a[(pivot_row, col)].recip();
        for c in col..cols {
            let v = &a[(pivot_row, c)] * &inv;
            a[(pivot_row, c)] = v;
        }
        let pivot: Vec<Scalar> = a.row(pivot_row).to_vec();
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = a[(r, col)].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                if !pivot[c].is_zero() {
                    let v = &a[(r, c)] - &factor * &pivot[c];
                    a[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    let rank = pivots.len();
    Rref { matrix: a, pivots, rank }
}

/// A linear subspace of `Q^ambient_dim`, stored by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect() }
    }

    /// Span of arbitrary vectors (possibly dependent or zero).
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut entries = Vec::new();
        let mut rows = 0;
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::Dimension(format!(
                    "vector of length {} in a {ambient_dim}-dimensional space",
                    v.len()
                )));
            }
            entries.extend(v);
            rows += 1;
        }
        let red = rref(&Matrix { rows, cols: ambient_dim, entries });
        let basis = (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Residual of `v` after eliminating against the basis; zero iff `v` is in the span.
    pub fn residual(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} in a {}-dimensional space",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut r = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            let c = -r[p].clone();
            axpy(&mut r, &c, row);
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.residual(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Zassenhaus intersection: row-reduce `[a | a]` over `[b | 0]`; rows whose
    /// left half vanishes carry a basis of the intersection on the right.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let mut entries = Vec::with_capacity((self.dim() + other.dim()) * 2 * n);
        for v in &self.basis {
            entries.extend(v.iter().cloned());
            entries.extend(v.iter().cloned());
        }
        for v in &other.basis {
            entries.extend(v.iter().cloned());
            entries.extend(std::iter::repeat_n(Scalar::zero(), n));
        }
        let stacked = Matrix { rows: self.dim() + other.dim(), cols: 2 * n, entries };
        let red = rref(&stacked);
        let meet = Subspace::span(
            n,
            red.pivots
                .iter()
                .enumerate()
                .filter(|(_, &p)| p >= n)
                .map(|(r, _)| red.matrix.row(r)[n..].to_vec()),
        )?;
        debug_assert_eq!(self.dim() + other.dim(), self.sum(other)?.dim() + meet.dim());
        Ok(meet)
    }

    /// Extends this subspace's basis to the whole space with standard basis
    /// vectors, taken in ascending index order; returns the indices used.
    pub fn greedy_complement_indices(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut picked = Vec::new();
        for i in 0..self.ambient_dim {
            let e = unit_vector(self.ambient_dim, i);
            if !current.contains(&e).expect("same ambient") {
                current = current.sum(&Subspace::span(self.ambient_dim, [e]).expect("unit")).expect("same ambient");
                picked.push(i);
            }
        }
        picked
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "Subspace(dim {} of {}: {})", self.dim(), self.ambient_dim, rows.join(", "))
    }
}

/// Kernel of `m` as a canonical subspace. One basis vector per free column
/// (ascending), then re-reduced to RREF.
pub fn nullspace(m: &Matrix) -> Subspace {
    let red = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = unit_vector(cols, free);
        for (r, &p) in red.pivots.iter().enumerate() {
            v[p] = -red.matrix[(r, free)].clone();
        }
        v
    });
    Subspace::span(cols, vectors).expect("kernel vectors have length cols")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_proportional_rows() {
        let r = rref(&Matrix::from_int_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.matrix, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let r = rref(&Matrix::identity(3));
        assert_eq!(r.matrix, Matrix::identity(3));
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_fractional_entries() {
        let m = Matrix::from_rows(vec![vec![frac(1, 2), int(1)], vec![int(1), int(3)]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.matrix, Matrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn nullspace_of_zero_and_identity() {
        assert_eq!(nullspace(&Matrix::zeros(2, 3)), Subspace::full(3));
        assert_eq!(nullspace(&Matrix::identity(4)), Subspace::zero(4));
    }

    #[test]
    fn nullspace_single_equation() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3]]);
        let ns = nullspace(&m);
        assert_eq!(ns.dim(), 2);
        for b in ns.basis() {
            assert!(is_zero_vector(&m.apply(b).unwrap()));
        }
    }

    #[test]
    fn sums() {
        let e1 = Subspace::span(2, [v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, [v(&[0, 1])]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        let p = Subspace::span(2, [v(&[1, 1])]).unwrap();
        let q = Subspace::span(2, [v(&[1, -1])]).unwrap();
        assert_eq!(p.sum(&q).unwrap(), Subspace::full(2));
    }

    #[test]
    fn intersections() {
        let e1 = Subspace::span(3, [v(&[1, 0, 0])]).unwrap();
        let e2 = Subspace::span(3, [v(&[0, 1, 0])]).unwrap();
        assert!(e1.intersection(&e2).unwrap().is_zero());
        assert_eq!(e1.intersection(&e1).unwrap(), e1);
        let a = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), e2);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.intersection(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.contains(&v(&[1, 2, 3])), Err(Error::Dimension(_))));
    }

    #[test]
    fn membership() {
        let s = Subspace::span(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]).unwrap();
        assert!(s.contains(&v(&[0, 0, 0])).unwrap());
        let e = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert!(!e.contains(&v(&[0, 0, 1])).unwrap());
        let combo: Vec<Scalar> = s.basis()[0]
            .iter()
            .zip(&s.basis()[1])
            .map(|(a, b)| int(2) * a - int(3) * b)
            .collect();
        assert!(s.contains(&combo).unwrap());
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3/2").unwrap(), frac(3, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert_eq!(parse_scalar("6/4").unwrap(), frac(3, 2));
        for bad in ["1.5", "1/0", "", "a", "1/-2", " 1"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(matches!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    fn small_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        (0..=max_rows).prop_flat_map(move |rows| {
            prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
                Matrix::from_entries(rows, cols, xs.into_iter().map(int).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(4, 4)) {
            let once = rref(&m);
            let twice = rref(&once.matrix);
            prop_assert_eq!(&once.matrix, &twice.matrix);
            prop_assert_eq!(once.rank, once.pivots.len());
        }

        #[test]
        fn nullspace_vectors_are_annihilated(m in small_matrix(4, 5)) {
            let ns = nullspace(&m);
            prop_assert_eq!(ns.dim(), m.cols() - m.rank());
            for b in ns.basis() {
                prop_assert!(is_zero_vector(&m.apply(b).unwrap()));
            }
        }

        #[test]
        fn grassmann_identity(a in small_matrix(3, 4), b in small_matrix(3, 4)) {
            let sa = Subspace::span(4, a.row_vectors()).unwrap();
            let sb = Subspace::span(4, b.row_vectors()).unwrap();
            let sum = sa.sum(&sb).unwrap();
            let meet = sa.intersection(&sb).unwrap();
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
            prop_assert!(sa.contains_subspace(&meet).unwrap());
            prop_assert!(sb.contains_subspace(&meet).unwrap());
            prop_assert!(sum.contains_subspace(&sa).unwrap());
        }

        #[test]
        fn canonical_form_decides_equality(a in small_matrix(3, 4), seed in prop::collection::vec(-2i64..=2, 9)) {
            // a random recombination of the rows spans the same space iff it has the same rank
            let sa = Subspace::span(4, a.row_vectors()).unwrap();
            let mixer = Matrix::from_entries(3, 3, seed.into_iter().map(int).collect()).unwrap();
            if a.rows() == 3 {
                let mixed = mixer.mul(&a).unwrap();
                let sm = Subspace::span(4, mixed.row_vectors()).unwrap();
                prop_assert_eq!(sm == sa, sm.dim() == sa.dim());
            }
        }
    }
}
