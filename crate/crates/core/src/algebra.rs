//! Hom-Lie superalgebras given by structure constants.
//!
//! Basis vectors `e_0 .. e_{n-1}` are homogeneous with a fixed parity. The
//! bracket is stored for every ordered pair `(i, j)` as the coefficient vector
//! of `[e_i, e_j]`; the twist `alpha` is a matrix whose column `i` is `alpha(e_i)`.
//! Linear maps throughout the crate use the same column convention.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, format_scalar, is_zero_vector, nullspace, unit_vector, zero_vector, Matrix, Scalar, Subspace};

/// Z/2 degree of a homogeneous element or map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::Parse(format!("degree must be 0 or 1, got {other}"))),
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = Error;
    fn try_from(bit: u8) -> Result<Self> {
        Parity::from_bit(bit)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Koszul sign `(-1)^(a b)`.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    if a.is_odd() && b.is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// A finite-dimensional Z/2-graded algebra with bracket and twist, stored by
/// structure constants. Construction enforces evenness of bracket and twist and
/// super skew-symmetry; [`AlgebraSpec::validate`] checks the twisted Jacobi
/// identity and multiplicativity.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    basis_names: Vec<String>,
    degrees: Vec<Parity>,
    alpha: Matrix,
    /// `brackets[i][j]` = coefficients of `[e_i, e_j]`.
    brackets: Vec<Vec<Vec<Scalar>>>,
}

/// One independent structure constant entry: `[e_left, e_right] = result`.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub result: Vec<Scalar>,
}

impl AlgebraSpec {
    /// Builds a spec from the independent brackets: pairs with `left < right`,
    /// plus `left == right` for odd basis elements. Pairs with `left > right`
    /// are filled in by super skew-symmetry; unlisted pairs are zero.
    pub fn from_brackets(
        name: impl Into<String>,
        basis_names: Vec<String>,
        degrees: Vec<Parity>,
        alpha: Matrix,
        entries: &[BracketEntry],
    ) -> Result<Self> {
        let n = degrees.len();
        if basis_names.len() != n {
            return Err(Error::InvalidAlgebra(format!("{} basis names for {n} degrees", basis_names.len())));
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::InvalidAlgebra(format!(
                "alpha is {}x{}, expected {n}x{n}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        for m in 0..n {
            for i in 0..n {
                if degrees[m] != degrees[i] && !alpha[(m, i)].is_zero() {
                    return Err(Error::InvalidAlgebra(format!(
                        "alpha is not even: entry ({m},{i}) maps {} (degree {}) onto {} (degree {})",
                        basis_names[i], degrees[i], basis_names[m], degrees[m]
                    )));
                }
            }
        }
        let mut brackets = vec![vec![zero_vector(n); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for entry in entries {
            let (i, j) = (entry.left, entry.right);
            if i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!("bracket index ({i},{j}) out of range for dimension {n}")));
            }
            if entry.result.len() != n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i},{j}) has {} coefficients, expected {n}",
                    entry.result.len()
                )));
            }
            if i > j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i},{j}) must be given with left < right; the reverse order is derived"
                )));
            }
            if std::mem::replace(&mut seen[i][j], true) {
                return Err(Error::InvalidAlgebra(format!("duplicate bracket ({i},{j})")));
            }
            if i == j && degrees[i] == Parity::Even && !is_zero_vector(&entry.result) {
                return Err(Error::InvalidAlgebra(format!(
                    "[{0},{0}] must vanish for the even element {0}",
                    basis_names[i]
                )));
            }
            let target = degrees[i] + degrees[j];
            if let Some(m) = (0..n).find(|&m| degrees[m] != target && !entry.result[m].is_zero()) {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket is not even: [{}, {}] has a component along {} of degree {}",
                    basis_names[i], basis_names[j], basis_names[m], degrees[m]
                )));
            }
            let sign = -koszul(degrees[i], degrees[j]);
            brackets[j][i] = entry.result.iter().map(|c| &sign * c).collect();
            brackets[i][j] = entry.result.clone();
        }
        Ok(AlgebraSpec { name: name.into(), basis_names, degrees, alpha, brackets })
    }

    /// Builds a spec from the full table of brackets without enforcing any
    /// invariant. Intended for negative tests of [`AlgebraSpec::validate`].
    pub fn from_raw_table(
        name: impl Into<String>,
        degrees: Vec<Parity>,
        alpha: Matrix,
        brackets: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let n = degrees.len();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::Dimension("alpha shape".into()));
        }
        if brackets.len() != n || brackets.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Dimension("bracket table shape".into()));
        }
        let basis_names = (0..n).map(|i| format!("e{}", i + 1)).collect();
        Ok(AlgebraSpec { name: name.into(), basis_names, degrees, alpha, brackets })
    }

    /// The n-dimensional abelian algebra with the given degrees and twist.
    pub fn abelian(name: impl Into<String>, degrees: Vec<Parity>, alpha: Matrix) -> Result<Self> {
        let names = (0..degrees.len()).map(|i| format!("e{}", i + 1)).collect();
        AlgebraSpec::from_brackets(name, names, degrees, alpha, &[])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[Parity] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> Parity {
        self.degrees[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn alpha_power(&self, k: u32) -> Matrix {
        self.alpha.pow(k).expect("alpha is square")
    }

    /// Coefficients of `[e_i, e_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Scalar] {
        &self.brackets[i][j]
    }

    /// The independent bracket entries (`i < j`, and odd diagonal), nonzero only.
    pub fn independent_brackets(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = &self.brackets[i][j];
                if (i < j || self.degrees[i].is_odd()) && !is_zero_vector(v) {
                    out.push(BracketEntry { left: i, right: j, result: v.clone() });
                }
            }
        }
        out
    }

    pub fn is_alpha_invertible(&self) -> bool {
        self.alpha.rank() == self.dim()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension(format!("vector of length {} in a {}-dimensional algebra", v.len(), self.dim())));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(u)?;
        self.check_len(v)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                axpy(&mut out, &(ui * vj), &self.brackets[i][j]);
            }
        }
        Ok(out)
    }

    pub fn twist(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.alpha.apply(v)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim(), i)
    }

    /// Matrix of `x -> [x, e_j]`.
    pub fn right_multiplication(&self, j: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for (r, c) in self.brackets[i][j].iter().enumerate() {
                m[(r, i)] = c.clone();
            }
        }
        m
    }

    /// Checks the Hom-Lie superalgebra axioms and multiplicativity on all basis
    /// pairs and triples. Both sides of every identity are multilinear, so basis
    /// elements suffice.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let d = &self.degrees;
        let mut report = ValidationReport {
            skew_ok: true,
            jacobi_ok: true,
            even_ok: true,
            multiplicative_ok: true,
            failures: Vec::new(),
        };
        for m in 0..n {
            for i in 0..n {
                if d[m] != d[i] && !self.alpha[(m, i)].is_zero() {
                    report.even_ok = false;
                    report.failures.push(IdentityFailure {
                        identity: "alpha even".into(),
                        indices: vec![m, i],
                        residual: vec![self.alpha[(m, i)].clone()],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let b = &self.brackets[i][j];
                if let Some(m) = (0..n).find(|&m| d[m] != d[i] + d[j] && !b[m].is_zero()) {
                    report.even_ok = false;
                    let mut residual = zero_vector(n);
                    residual[m] = b[m].clone();
                    report.failures.push(IdentityFailure { identity: "bracket even".into(), indices: vec![i, j], residual });
                }
                let sign = koszul(d[i], d[j]);
                let skew: Vec<Scalar> =
                    b.iter().zip(&self.brackets[j][i]).map(|(x, y)| x + &sign * y).collect();
                if !is_zero_vector(&skew) {
                    report.skew_ok = false;
                    report.failures.push(IdentityFailure { identity: "super skew-symmetry".into(), indices: vec![i, j], residual: skew });
                }
                let lhs = self.twist(b).expect("length n");
                let rhs = self
                    .bracket(&self.alpha.column(i), &self.alpha.column(j))
                    .expect("length n");
                let diff: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
                if !is_zero_vector(&diff) {
                    report.multiplicative_ok = false;
                    report.failures.push(IdentityFailure { identity: "multiplicativity".into(), indices: vec![i, j], residual: diff });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self.jacobi_residual(i, j, k);
                    if !is_zero_vector(&r) {
                        report.jacobi_ok = false;
                        report.failures.push(IdentityFailure { identity: "twisted Jacobi".into(), indices: vec![i, j, k], residual: r });
                    }
                }
            }
        }
        report
    }

    /// `(-1)^(d_k d_i)[α e_i,[e_j,e_k]] + (-1)^(d_i d_j)[α e_j,[e_k,e_i]] + (-1)^(d_j d_k)[α e_k,[e_i,e_j]]`
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let d = &self.degrees;
        let term = |a: usize, b: usize, c: usize| {
            self.bracket(&self.alpha.column(a), &self.brackets[b][c]).expect("length n")
        };
        let mut out = zero_vector(self.dim());
        axpy(&mut out, &koszul(d[k], d[i]), &term(i, j, k));
        axpy(&mut out, &koszul(d[i], d[j]), &term(j, k, i));
        axpy(&mut out, &koszul(d[j], d[k]), &term(k, i, j));
        out
    }

    /// `{x : [x, y] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for j in 0..n {
            stacked = stacked.vstack(&self.right_multiplication(j)).expect("n columns");
        }
        nullspace(&stacked)
    }

    /// Span of all brackets `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::span(self.dim(), self.brackets.iter().flatten().cloned()).expect("length n")
    }
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({}, dim {}, degrees [", self.name, self.dim())?;
        for (i, d) in self.degrees.iter().enumerate() {
            write!(f, "{}{d}", if i > 0 { "," } else { "" })?;
        }
        write!(f, "], alpha {}, brackets [", self.alpha)?;
        for (idx, e) in self.independent_brackets().iter().enumerate() {
            let terms: Vec<String> = e.result.iter().map(format_scalar).collect();
            write!(f, "{}({},{})->({})", if idx > 0 { ", " } else { "" }, e.left, e.right, terms.join(","))?;
        }
        write!(f, "])")
    }
}

/// A single failed identity with the basis indices it was evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub skew_ok: bool,
    pub jacobi_ok: bool,
    pub even_ok: bool,
    pub multiplicative_ok: bool,
    pub failures: Vec<IdentityFailure>,
}

impl ValidationReport {
    /// Hom-Lie superalgebra axioms (multiplicativity is a separate property).
    pub fn is_hom_lie(&self) -> bool {
        self.skew_ok && self.jacobi_ok && self.even_ok
    }

    pub fn all_ok(&self) -> bool {
        self.is_hom_lie() && self.multiplicative_ok
    }
}

/// A graded algebra with a twist, enough structure to form the Hom-associator.
pub trait HomAlgebra {
    type Elem;
    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn twist_elem(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn difference(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

/// `as(x, y, z) = μ(μ(x, y), α(z)) - μ(α(x), μ(y, z))`.
pub fn hom_associator<A: HomAlgebra>(alg: &A, x: &A::Elem, y: &A::Elem, z: &A::Elem) -> Result<A::Elem> {
    let left = alg.product(&alg.product(x, y)?, &alg.twist_elem(z)?)?;
    let right = alg.product(&alg.twist_elem(x)?, &alg.product(y, z)?)?;
    alg.difference(&left, &right)
}

impl HomAlgebra for AlgebraSpec {
    type Elem = Vec<Scalar>;

    fn product(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        self.bracket(a, b)
    }

    fn twist_elem(&self, a: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        self.twist(a)
    }

    fn difference(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::int;

    fn vecq(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn example_brackets() {
        let l = corpus::ex2_5();
        assert_eq!(l.bracket(&vecq(&[1, 0, 0]), &vecq(&[0, 1, 0])).unwrap(), vecq(&[1, 0, 0]));
        assert_eq!(l.bracket(&vecq(&[0, 1, 0]), &vecq(&[0, 0, 1])).unwrap(), vecq(&[0, 0, 2]));
        assert_eq!(l.bracket(&vecq(&[0, 0, 1]), &vecq(&[1, 0, 0])).unwrap(), vecq(&[0, -1, 0]));
        let v = vecq(&[3, -1, 2]);
        assert!(is_zero_vector(&l.bracket(&v, &v).unwrap()));
        assert!(matches!(l.bracket(&vecq(&[1]), &v), Err(Error::Dimension(_))));
    }

    #[test]
    fn example_axioms() {
        let r = corpus::ex2_5().validate();
        assert!(r.skew_ok && r.jacobi_ok && r.even_ok);
        // [α x1, α x2] = 2 x1 while α[x1, x2] = x1
        assert!(!r.multiplicative_ok);
        assert!(r.failures.iter().any(|f| f.identity == "multiplicativity" && f.indices == vec![0, 1]));
    }

    #[test]
    fn abelian_passes_everything() {
        let alpha = Matrix::from_int_rows(&[&[2, 1], &[0, 3]]);
        let l = AlgebraSpec::abelian("ab", vec![Parity::Even, Parity::Even], alpha).unwrap();
        assert!(l.validate().all_ok());
        assert_eq!(l.center(), Subspace::full(2));
        assert!(l.derived_subalgebra().is_zero());
    }

    #[test]
    fn perturbed_example_fails_jacobi() {
        // [x2, x3] = x3 instead of 2 x3: the (1,2,3) Jacobi residual becomes
        // [x1, x3] + [2 x2, -x2] + [2 x3, x1] = x2 - 2 x2 = -x2
        let l = corpus::ex2_5();
        let entries = vec![
            BracketEntry { left: 0, right: 1, result: vecq(&[1, 0, 0]) },
            BracketEntry { left: 0, right: 2, result: vecq(&[0, 1, 0]) },
            BracketEntry { left: 1, right: 2, result: vecq(&[0, 0, 1]) },
        ];
        let bad = AlgebraSpec::from_brackets("bad", l.basis_names().to_vec(), l.degrees().to_vec(), l.alpha().clone(), &entries)
            .unwrap();
        let r = bad.validate();
        assert!(!r.jacobi_ok);
        assert_eq!(bad.jacobi_residual(0, 1, 2), vecq(&[0, -1, 0]));
    }

    #[test]
    fn centers() {
        assert!(corpus::ex2_5().center().is_zero());
        let h = corpus::heisenberg3();
        assert_eq!(h.center(), Subspace::span(3, [vecq(&[0, 0, 1])]).unwrap());
        assert_eq!(h.derived_subalgebra(), h.center());
        assert_eq!(corpus::ex2_5().derived_subalgebra(), Subspace::full(3));
    }

    #[test]
    fn construction_rejects_bad_input() {
        let names = vec!["a".to_string(), "b".to_string()];
        let even = vec![Parity::Even, Parity::Even];
        let mixed = vec![Parity::Even, Parity::Odd];
        let id = Matrix::identity(2);
        let diag = BracketEntry { left: 0, right: 0, result: vecq(&[0, 0]) };
        assert!(AlgebraSpec::from_brackets("ok", names.clone(), even.clone(), id.clone(), &[diag]).is_ok());
        let diag = BracketEntry { left: 0, right: 0, result: vecq(&[1, 0]) };
        assert!(AlgebraSpec::from_brackets("x", names.clone(), even.clone(), id.clone(), &[diag]).is_err());
        let odd_alpha = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(AlgebraSpec::from_brackets("x", names.clone(), mixed.clone(), odd_alpha, &[]).is_err());
        let odd_bracket = BracketEntry { left: 0, right: 1, result: vecq(&[1, 0]) };
        assert!(AlgebraSpec::from_brackets("x", names.clone(), mixed.clone(), id.clone(), &[odd_bracket]).is_err());
        let dup = BracketEntry { left: 0, right: 1, result: vecq(&[0, 0]) };
        assert!(AlgebraSpec::from_brackets("x", names.clone(), even.clone(), id.clone(), &[dup.clone(), dup]).is_err());
        let reversed = BracketEntry { left: 1, right: 0, result: vecq(&[0, 0]) };
        assert!(AlgebraSpec::from_brackets("x", names, even, id, &[reversed]).is_err());
    }

    #[test]
    fn odd_self_bracket_is_free_and_symmetric() {
        let l = corpus::odd_heisenberg();
        assert!(l.validate().all_ok());
        assert_eq!(l.structure_constants(1, 1), &vecq(&[1, 0])[..]);
        assert!(l.center().contains(&vecq(&[1, 0])).unwrap());
    }

    #[test]
    fn skew_and_multiplicativity_on_basis_pairs() {
        for l in corpus::all() {
            let n = l.dim();
            for i in 0..n {
                for j in 0..n {
                    let s = koszul(l.degree(i), l.degree(j));
                    let lhs = l.bracket(&l.basis_vector(i), &l.basis_vector(j)).unwrap();
                    let rhs = l.bracket(&l.basis_vector(j), &l.basis_vector(i)).unwrap();
                    let sum: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a + &s * b).collect();
                    assert!(is_zero_vector(&sum), "{} ({i},{j})", l.name());
                }
            }
            if l.validate().multiplicative_ok {
                for v in l.center().basis() {
                    assert!(l.center().contains(&l.twist(v).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn associator_of_an_associative_product_vanishes() {
        struct Poly;
        impl HomAlgebra for Poly {
            type Elem = Vec<Scalar>;
            // truncated polynomial multiplication in Q[t]/(t^3)
            fn product(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Result<Vec<Scalar>> {
                let mut out = zero_vector(3);
                for i in 0..3 {
                    for j in 0..3 - i {
                        out[i + j] += &a[i] * &b[j];
                    }
                }
                Ok(out)
            }
            fn twist_elem(&self, a: &Vec<Scalar>) -> Result<Vec<Scalar>> {
                Ok(a.clone())
            }
            fn difference(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Result<Vec<Scalar>> {
                Ok(a.iter().zip(b).map(|(x, y)| x - y).collect())
            }
        }
        let (x, y, z) = (vecq(&[1, 2, 0]), vecq(&[0, -1, 3]), vecq(&[2, 0, 1]));
        assert!(is_zero_vector(&hom_associator(&Poly, &x, &y, &z).unwrap()));
        let l = corpus::ex2_5();
        let zero = zero_vector(3);
        assert!(is_zero_vector(&hom_associator(&l, &zero, &zero, &zero).unwrap()));
        assert!(hom_associator(&l, &vecq(&[1]), &zero, &zero).is_err());
    }
}
