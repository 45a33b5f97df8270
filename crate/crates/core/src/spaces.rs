//! Solution spaces of derivation-type operators at a fixed twist power `k`
//! and degree `θ`.
//!
//! Each kind is cut out by linear identities evaluated on basis pairs
//! `(e_i, e_j)`, with `s = (-1)^(θ |e_i|)`:
//!
//! | kind | tuple        | identities                                              |
//! |------|--------------|---------------------------------------------------------|
//! | Der  | `D`          | `D[e_i,e_j] = [D e_i, α^k e_j] + s[α^k e_i, D e_j]`     |
//! | GDer | `D, D', D''` | `[D e_i, α^k e_j] + s[α^k e_i, D' e_j] = D''[e_i,e_j]`  |
//! | QDer | `D, D'`      | `[D e_i, α^k e_j] + s[α^k e_i, D e_j] = D'[e_i,e_j]`    |
//! | C    | `D`          | `[D e_i, α^k e_j] = D[e_i,e_j] = s[α^k e_i, D e_j]`     |
//! | QC   | `D`          | `[D e_i, α^k e_j] = s[α^k e_i, D e_j]`                  |
//! | ZDer | `D`          | `[D e_i, α^k e_j] = 0 = D[e_i,e_j]`                     |
//!
//! In [`Mode::Strict`] every map of the tuple must also commute with `α`.
//! Homogeneity is structural: only matrix entries allowed by `θ` are unknowns.
//! A space is stored as a canonical [`Subspace`] of the stacked coordinates
//! (`arity * n^2`, each map row-major).

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{koszul, AlgebraSpec, Parity};
use crate::error::{Error, Result};
use crate::linalg::{axpy, frac, is_zero_vector, nullspace, zero_vector, Matrix, Scalar, Subspace};
use crate::maps::GradedMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceKind {
    Der,
    GDer,
    QDer,
    C,
    QC,
    ZDer,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 6] =
        [SpaceKind::Der, SpaceKind::GDer, SpaceKind::QDer, SpaceKind::C, SpaceKind::QC, SpaceKind::ZDer];

    pub fn arity(self) -> usize {
        match self {
            SpaceKind::GDer => 3,
            SpaceKind::QDer => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Der => "Der",
            SpaceKind::GDer => "GDer",
            SpaceKind::QDer => "QDer",
            SpaceKind::C => "C",
            SpaceKind::QC => "QC",
            SpaceKind::ZDer => "ZDer",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SpaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown space kind {s:?} (expected Der, GDer, QDer, C, QC or ZDer)")))
    }
}

/// Whether unknown maps are required to commute with the twist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Strict,
    Lax,
}

impl Mode {
    pub fn is_strict(self) -> bool {
        self == Mode::Strict
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Lax => "lax",
        })
    }
}

/// Precomputed data for evaluating identities at one twist power.
struct Evaluator<'a> {
    spec: &'a AlgebraSpec,
    /// columns of α^k
    twisted: Vec<Vec<Scalar>>,
}

impl<'a> Evaluator<'a> {
    fn new(spec: &'a AlgebraSpec, k: u32) -> Self {
        let ak = spec.alpha_power(k);
        let twisted = (0..spec.dim()).map(|j| ak.column(j)).collect();
        Evaluator { spec, twisted }
    }

    fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.spec.bracket(u, v).expect("vectors of length n")
    }

    /// Residual of the defining identities of `kind` for the given tuple of
    /// matrices, concatenated over all basis pairs.
    fn residual(&self, kind: SpaceKind, degree: Parity, maps: &[&Matrix]) -> Vec<Scalar> {
        let spec = self.spec;
        let n = spec.dim();
        let one = Scalar::from_integer(1.into());
        let minus = -one.clone();
        let mut out = Vec::new();
        let images: Vec<Vec<Vec<Scalar>>> =
            maps.iter().map(|m| (0..n).map(|i| m.column(i)).collect()).collect();
        for i in 0..n {
            let s = koszul(degree, spec.degree(i));
            for j in 0..n {
                let b = spec.structure_constants(i, j);
                let d = &images[0];
                let left = self.bracket(&d[i], &self.twisted[j]);
                let apply = |m: usize| maps[m].apply(b).expect("length n");
                match kind {
                    SpaceKind::Der => {
                        let right = self.bracket(&self.twisted[i], &d[j]);
                        let mut r = apply(0);
                        axpy(&mut r, &minus, &left);
                        axpy(&mut r, &-s.clone(), &right);
                        out.extend(r);
                    }
                    SpaceKind::GDer => {
                        let right = self.bracket(&self.twisted[i], &images[1][j]);
                        let mut r = left;
                        axpy(&mut r, &s, &right);
                        axpy(&mut r, &minus, &apply(2));
                        out.extend(r);
                    }
                    SpaceKind::QDer => {
                        let right = self.bracket(&self.twisted[i], &d[j]);
                        let mut r = left;
                        axpy(&mut r, &s, &right);
                        axpy(&mut r, &minus, &apply(1));
                        out.extend(r);
                    }
                    SpaceKind::C => {
                        let right = self.bracket(&self.twisted[i], &d[j]);
                        let db = apply(0);
                        let mut r1 = left;
                        axpy(&mut r1, &minus, &db);
                        let mut r2 = zero_vector(n);
                        axpy(&mut r2, &s, &right);
                        axpy(&mut r2, &minus, &db);
                        out.extend(r1);
                        out.extend(r2);
                    }
                    SpaceKind::QC => {
                        let right = self.bracket(&self.twisted[i], &d[j]);
                        let mut r = left;
                        axpy(&mut r, &-s.clone(), &right);
                        out.extend(r);
                    }
                    SpaceKind::ZDer => {
                        out.extend(left);
                        out.extend(apply(0));
                    }
                }
            }
        }
        out
    }
}

fn commutation_residual(spec: &AlgebraSpec, m: &Matrix) -> Vec<Scalar> {
    let a = spec.alpha();
    m.mul(a).expect("square").sub(&a.mul(m).expect("square")).expect("same shape").into_entries()
}

/// Residual of the defining identities (and, in strict mode, of `Mα - αM` for
/// every map). Zero exactly when the tuple satisfies the identities.
pub fn tuple_residual(spec: &AlgebraSpec, kind: SpaceKind, k: u32, degree: Parity, mode: Mode, maps: &[&Matrix]) -> Result<Vec<Scalar>> {
    let n = spec.dim();
    if maps.len() != kind.arity() {
        return Err(Error::Dimension(format!("{kind} takes {} maps, got {}", kind.arity(), maps.len())));
    }
    if maps.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Dimension(format!("maps must be {n}x{n}")));
    }
    let mut r = Evaluator::new(spec, k).residual(kind, degree, maps);
    if mode.is_strict() {
        for m in maps {
            r.extend(commutation_residual(spec, m));
        }
    }
    Ok(r)
}

fn homogeneous_entries(spec: &AlgebraSpec, degree: Parity) -> Vec<(usize, usize)> {
    let d = spec.degrees();
    let n = spec.dim();
    (0..n)
        .flat_map(|m| (0..n).map(move |i| (m, i)))
        .filter(|&(m, i)| d[m] == d[i] + degree)
        .collect()
}

/// A solved space: the canonical basis of all tuples satisfying the identities.
#[derive(Clone, PartialEq, Eq)]
pub struct MapSpace {
    kind: SpaceKind,
    k: u32,
    degree: Parity,
    mode: Mode,
    n: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The space as a subspace of stacked coordinates.
    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn label(&self) -> String {
        format!("{}_{{alpha^{}}} deg {}", self.kind, self.k, self.degree)
    }

    fn split(&self, stacked: &[Scalar]) -> Vec<GradedMap> {
        let nn = self.n * self.n;
        stacked
            .chunks(nn)
            .map(|c| GradedMap::from_parts(Matrix::from_entries(self.n, self.n, c.to_vec()).expect("n*n"), self.degree))
            .collect()
    }

    /// Canonical basis, one tuple of maps per basis vector.
    pub fn tuples(&self) -> Vec<Vec<GradedMap>> {
        self.space.basis().iter().map(|v| self.split(v)).collect()
    }

    pub fn contains_tuple(&self, maps: &[GradedMap]) -> Result<bool> {
        if maps.len() != self.kind.arity() {
            return Err(Error::Dimension(format!("{} takes {} maps, got {}", self.kind, self.kind.arity(), maps.len())));
        }
        if maps.iter().any(|m| !m.is_zero() && m.degree() != self.degree) {
            return Ok(false);
        }
        let stacked: Vec<Scalar> = maps.iter().flat_map(|m| m.matrix().entries().iter().cloned()).collect();
        self.space.contains(&stacked)
    }

    /// Span of one tuple component, as a subspace of the `n^2`-dimensional map space.
    pub fn project_component(&self, index: usize) -> Result<Subspace> {
        let arity = self.kind.arity();
        if index >= arity {
            return Err(Error::ComponentOutOfRange { index, arity });
        }
        let nn = self.n * self.n;
        Subspace::span(nn, self.space.basis().iter().map(|v| v[index * nn..(index + 1) * nn].to_vec()))
    }

    /// Canonical basis of the first-component projection, as maps.
    pub fn first_components(&self) -> Vec<GradedMap> {
        let proj = self.project_component(0).expect("arity >= 1");
        proj.basis()
            .iter()
            .map(|v| GradedMap::from_parts(Matrix::from_entries(self.n, self.n, v.clone()).expect("n*n"), self.degree))
            .collect()
    }
}

impl fmt::Debug for MapSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MapSpace({}, {}, dim {}, {:?})", self.label(), self.mode, self.dim(), self.tuples())
    }
}

/// Solves for the canonical basis of `kind` at twist power `k` and degree `θ`.
pub fn solve_space(spec: &AlgebraSpec, kind: SpaceKind, k: i64, degree: Parity, mode: Mode) -> Result<MapSpace> {
    let k = u32::try_from(k).map_err(|_| Error::NegativePower(k))?;
    let n = spec.dim();
    let nn = n * n;
    let arity = kind.arity();
    let free = homogeneous_entries(spec, degree);
    let unknowns: Vec<(usize, usize, usize)> =
        (0..arity).flat_map(|t| free.iter().map(move |&(m, i)| (t, m, i))).collect();
    let zero = Matrix::zeros(n, n);
    let evaluator = Evaluator::new(spec, k);
    let mut columns = Vec::with_capacity(unknowns.len());
    for &(t, m, i) in &unknowns {
        let mut unit = Matrix::zeros(n, n);
        unit[(m, i)] = Scalar::from_integer(1.into());
        let maps: Vec<&Matrix> = (0..arity).map(|s| if s == t { &unit } else { &zero }).collect();
        let mut col = evaluator.residual(kind, degree, &maps);
        if mode.is_strict() {
            for mm in &maps {
                col.extend(commutation_residual(spec, mm));
            }
        }
        columns.push(col);
    }
    let space = if columns.is_empty() {
        Subspace::zero(arity * nn)
    } else {
        let system = Matrix::from_rows(columns).expect("equal residual lengths").transpose();
        let kernel = nullspace(&system);
        Subspace::span(
            arity * nn,
            kernel.basis().iter().map(|coeffs| {
                let mut stacked = zero_vector(arity * nn);
                for (c, &(t, m, i)) in coeffs.iter().zip(&unknowns) {
                    if !c.is_zero() {
                        stacked[t * nn + m * n + i] = c.clone();
                    }
                }
                stacked
            }),
        )?
    };
    Ok(MapSpace { kind, k, degree, mode, n, space })
}

/// Memoized solver for one algebra and mode.
pub struct SpaceCache<'a> {
    spec: &'a AlgebraSpec,
    mode: Mode,
    solved: HashMap<(SpaceKind, u32, Parity), Rc<MapSpace>>,
}

impl<'a> SpaceCache<'a> {
    pub fn new(spec: &'a AlgebraSpec, mode: Mode) -> Self {
        SpaceCache { spec, mode, solved: HashMap::new() }
    }

    pub fn spec(&self) -> &'a AlgebraSpec {
        self.spec
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&mut self, kind: SpaceKind, k: u32, degree: Parity) -> Rc<MapSpace> {
        let (spec, mode) = (self.spec, self.mode);
        self.solved
            .entry((kind, k, degree))
            .or_insert_with(|| Rc::new(solve_space(spec, kind, i64::from(k), degree, mode).expect("k fits")))
            .clone()
    }

    /// First-component projection (the "set of maps D" for GDer and QDer).
    pub fn maps(&mut self, kind: SpaceKind, k: u32, degree: Parity) -> Subspace {
        self.get(kind, k, degree).project_component(0).expect("arity >= 1")
    }

    pub fn map_basis(&mut self, kind: SpaceKind, k: u32, degree: Parity) -> Vec<GradedMap> {
        self.get(kind, k, degree).first_components()
    }
}

/// Result of splitting a generalized derivation into a quasiderivation pair
/// and a quasicentroid element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedSplit {
    /// `(D + D')/2` with partner `D''`.
    pub quasiderivation: (GradedMap, GradedMap),
    /// `(D - D')/2`.
    pub quasicentroid: GradedMap,
}

/// Splits `(D, D', D'') ∈ GDer` as `D = (D + D')/2 + (D - D')/2`, checking that
/// the first part (with partner `D''`) is a quasiderivation and the second a
/// quasicentroid element at the same `k` and degree.
pub fn decompose_generalized(
    spec: &AlgebraSpec,
    k: u32,
    degree: Parity,
    mode: Mode,
    triple: [&GradedMap; 3],
) -> Result<GeneralizedSplit> {
    let n = spec.dim();
    for m in triple {
        GradedMap::new(spec.degrees(), m.matrix().clone(), degree).map_err(|e| Error::NotMember {
            space: "GDer".into(),
            detail: e.to_string(),
        })?;
    }
    let mats: Vec<&Matrix> = triple.iter().map(|m| m.matrix()).collect();
    let r = tuple_residual(spec, SpaceKind::GDer, k, degree, mode, &mats)?;
    if !is_zero_vector(&r) {
        let pair = r.iter().position(|x| !x.is_zero()).unwrap_or(0) / n;
        return Err(Error::NotMember {
            space: format!("GDer_{{alpha^{k}}}"),
            detail: format!("identity fails (first nonzero residual block {pair})"),
        });
    }
    let half = frac(1, 2);
    let (d, dp, dpp) = (triple[0], triple[1], triple[2]);
    let dq = GradedMap::from_parts(d.matrix().add(dp.matrix())?.scale(&half), degree);
    let dc = GradedMap::from_parts(d.matrix().sub(dp.matrix())?.scale(&half), degree);
    let dq_partner = GradedMap::from_parts(dpp.matrix().clone(), degree);
    let rq = tuple_residual(spec, SpaceKind::QDer, k, degree, mode, &[dq.matrix(), dq_partner.matrix()])?;
    let rc = tuple_residual(spec, SpaceKind::QC, k, degree, mode, &[dc.matrix()])?;
    debug_assert!(is_zero_vector(&rq) && is_zero_vector(&rc));
    if !is_zero_vector(&rq) || !is_zero_vector(&rc) {
        return Err(Error::NotMember { space: "QDer + QC".into(), detail: "split failed verification".into() });
    }
    debug_assert_eq!(dq.add(&dc)?.matrix(), d.matrix());
    Ok(GeneralizedSplit { quasiderivation: (dq, dq_partner), quasicentroid: dc })
}
