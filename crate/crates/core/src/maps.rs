//! Homogeneous linear maps on an algebra and the operations on them.

use std::fmt;

use crate::algebra::{koszul, AlgebraSpec, HomAlgebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// A linear endomorphism homogeneous of a fixed degree: `matrix[(m, i)]` is the
/// coefficient of `e_m` in the image of `e_i`, and is zero unless
/// `deg(e_m) = deg(e_i) + degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedMap {
    matrix: Matrix,
    degree: Parity,
}

impl GradedMap {
    /// Checks homogeneity against the basis degrees of the algebra.
    pub fn new(degrees: &[Parity], matrix: Matrix, degree: Parity) -> Result<Self> {
        let n = degrees.len();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Dimension(format!("{}x{} map on a {n}-dimensional algebra", matrix.rows(), matrix.cols())));
        }
        for m in 0..n {
            for i in 0..n {
                if degrees[m] != degrees[i] + degree && !num_traits::Zero::is_zero(&matrix[(m, i)]) {
                    return Err(Error::InvalidAlgebra(format!(
                        "map is not homogeneous of degree {degree}: entry ({m},{i}) is nonzero"
                    )));
                }
            }
        }
        Ok(GradedMap { matrix, degree })
    }

    /// Skips the homogeneity check; callers guarantee it.
    pub(crate) fn from_parts(matrix: Matrix, degree: Parity) -> Self {
        GradedMap { matrix, degree }
    }

    pub fn zero(n: usize, degree: Parity) -> Self {
        GradedMap { matrix: Matrix::zeros(n, n), degree }
    }

    pub fn identity(n: usize) -> Self {
        GradedMap { matrix: Matrix::identity(n), degree: Parity::Even }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.apply(v)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        Ok(GradedMap { matrix: self.matrix.mul(&other.matrix)?, degree: self.degree + other.degree })
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        self.same_degree(other)?;
        Ok(GradedMap { matrix: self.matrix.add(&other.matrix)?, degree: self.degree })
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap> {
        self.same_degree(other)?;
        Ok(GradedMap { matrix: self.matrix.sub(&other.matrix)?, degree: self.degree })
    }

    pub fn scale(&self, s: &Scalar) -> GradedMap {
        GradedMap { matrix: self.matrix.scale(s), degree: self.degree }
    }

    fn same_degree(&self, other: &GradedMap) -> Result<()> {
        // the zero map is homogeneous of every degree
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Dimension(format!(
                "adding maps of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Row-major entries, the coordinates used by map spaces.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.matrix.entries().to_vec()
    }
}

impl fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMap(deg {}, {})", self.degree, self.matrix)
    }
}

impl fmt::Display for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// `[a, b] = ab - (-1)^(|a||b|) ba`.
pub fn supercommutator(a: &GradedMap, b: &GradedMap) -> Result<GradedMap> {
    let ab = a.compose(b)?;
    let ba = b.compose(a)?;
    let m = ab.matrix.sub(&ba.matrix.scale(&koszul(a.degree, b.degree)))?;
    Ok(GradedMap { matrix: m, degree: a.degree + b.degree })
}

/// `a • b = ab + (-1)^(|a||b|) ba`.
pub fn jordan_product(a: &GradedMap, b: &GradedMap) -> Result<GradedMap> {
    let ab = a.compose(b)?;
    let ba = b.compose(a)?;
    let m = ab.matrix.add(&ba.matrix.scale(&koszul(a.degree, b.degree)))?;
    Ok(GradedMap { matrix: m, degree: a.degree + b.degree })
}

/// `D ↦ D ∘ α`.
pub fn alpha_shift(spec: &AlgebraSpec, d: &GradedMap) -> Result<GradedMap> {
    Ok(GradedMap { matrix: d.matrix.mul(spec.alpha())?, degree: d.degree })
}

/// End(L) under the Jordan product `•`, twisted by `D ↦ D ∘ α`.
pub struct JordanMaps<'a> {
    pub spec: &'a AlgebraSpec,
}

impl HomAlgebra for JordanMaps<'_> {
    type Elem = GradedMap;

    fn product(&self, a: &GradedMap, b: &GradedMap) -> Result<GradedMap> {
        jordan_product(a, b)
    }

    fn twist_elem(&self, a: &GradedMap) -> Result<GradedMap> {
        alpha_shift(self.spec, a)
    }

    fn difference(&self, a: &GradedMap, b: &GradedMap) -> Result<GradedMap> {
        a.sub(b)
    }
}
