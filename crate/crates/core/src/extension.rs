//! The extension `L̆ = Lt ⊕ Lt²` with `[x t^i, y t^j] = [x, y] t^(i+j)` (zero
//! once `i + j ≥ 3`) and twist `α` acting on each block, plus the map `φ` that
//! turns a quasiderivation pair `(D, D')` into a derivation of `L̆`.
//!
//! Basis of `L̆`: `e_1 t, …, e_n t, e_1 t², …, e_n t²`.

use num_traits::Zero;

use crate::algebra::{AlgebraSpec, BracketEntry, Parity};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, nullspace, unit_vector, zero_vector, Matrix, Subspace};
use crate::maps::GradedMap;
use crate::report::{Check, CheckReport, Witness};
use crate::spaces::{solve_space, tuple_residual, Mode, SpaceKind};

#[derive(Clone, Debug)]
pub struct ExtendedAlgebra {
    base: AlgebraSpec,
    spec: AlgebraSpec,
    derived: Subspace,
    u_complement: Subspace,
    /// Projection of the base onto `[L, L]` along the complement.
    projection: Matrix,
}

/// Builds `L̆` from a base satisfying the Hom-Lie superalgebra axioms.
pub fn build_extended(base: &AlgebraSpec) -> Result<ExtendedAlgebra> {
    let report = base.validate();
    if !report.is_hom_lie() {
        let first = report.failures.first().map(|f| format!("{} at {:?}", f.identity, f.indices)).unwrap_or_default();
        return Err(Error::InvalidAlgebra(format!("base algebra {} fails validation: {first}", base.name())));
    }
    let n = base.dim();
    let names = base
        .basis_names()
        .iter()
        .map(|b| format!("{b}·t"))
        .chain(base.basis_names().iter().map(|b| format!("{b}·t²")))
        .collect();
    let degrees: Vec<Parity> = base.degrees().iter().chain(base.degrees()).copied().collect();
    let alpha = Matrix::block_diagonal(base.alpha(), base.alpha());
    let mut entries = Vec::new();
    for e in base.independent_brackets() {
        let mut result = zero_vector(n);
        result.extend(e.result);
        entries.push(BracketEntry { left: e.left, right: e.right, result });
    }
    let spec = AlgebraSpec::from_brackets(format!("{}-ext", base.name()), names, degrees, alpha, &entries)?;

    let derived = base.derived_subalgebra();
    let picked = derived.greedy_complement_indices();
    let u_complement = Subspace::span(n, picked.iter().map(|&i| unit_vector(n, i)))?;
    // change of basis: columns = derived basis, then complement vectors
    let columns: Vec<Vec<_>> = derived.basis().iter().cloned().chain(u_complement.basis().iter().cloned()).collect();
    let change = Matrix::from_rows(columns).map(|m| m.transpose()).unwrap_or_else(|_| Matrix::zeros(n, n));
    let keep: Vec<_> = (0..n).map(|i| crate::linalg::int(i64::from(i < derived.dim()))).collect();
    let projection = if n == 0 {
        Matrix::zeros(0, 0)
    } else {
        change.mul(&Matrix::from_diagonal(&keep))?.mul(&change.inverse()?)?
    };
    Ok(ExtendedAlgebra { base: base.clone(), spec, derived, u_complement, projection })
}

impl ExtendedAlgebra {
    pub fn base(&self) -> &AlgebraSpec {
        &self.base
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn derived(&self) -> &Subspace {
        &self.derived
    }

    pub fn u_complement(&self) -> &Subspace {
        &self.u_complement
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `Lt²` as a subspace of `L̆`.
    pub fn top_layer(&self) -> Subspace {
        let n = self.base.dim();
        Subspace::span(2 * n, (n..2 * n).map(|i| unit_vector(2 * n, i))).expect("2n")
    }
}

/// Axioms of `L̆`, and vanishing of every bracket whose `t`-powers sum to 3 or 4.
pub fn check_extension(ext: &ExtendedAlgebra) -> CheckReport {
    let mut report = crate::theorems::check_axioms(&ext.spec);
    report.title = format!("extension {}", ext.spec.name());
    let n = ext.base.dim();
    let power = |i: usize| if i < n { 1 } else { 2 };
    let mut witness = None;
    let mut checked = 0;
    'outer: for i in 0..2 * n {
        for j in 0..2 * n {
            if power(i) + power(j) >= 3 {
                checked += 1;
                let b = ext.spec.structure_constants(i, j);
                if !is_zero_vector(b) {
                    witness = Some(Witness::new("bracket of total t-power >= 3 is nonzero").with_indices(vec![i, j]).with_residual(b));
                    break 'outer;
                }
            }
        }
    }
    report.push(Check::from_outcome("brackets of t-power >= 3 vanish", format!("{checked} basis pairs"), witness));
    report
}

/// `φ(D, D')`: acts as `D` on `Lt`, as `D'` on `[L,L]t²` and as zero on `Ut²`.
/// The pair must lie in QDer at twist power `k` and share a degree.
pub fn phi(ext: &ExtendedAlgebra, k: u32, mode: Mode, pair: (&GradedMap, &GradedMap)) -> Result<GradedMap> {
    let base = &ext.base;
    let (d, dp) = pair;
    let degree = if d.is_zero() { dp.degree() } else { d.degree() };
    for m in [d, dp] {
        GradedMap::new(base.degrees(), m.matrix().clone(), degree)
            .map_err(|e| Error::NotMember { space: "QDer".into(), detail: e.to_string() })?;
    }
    let r = tuple_residual(base, SpaceKind::QDer, k, degree, mode, &[d.matrix(), dp.matrix()])?;
    if !is_zero_vector(&r) {
        return Err(Error::NotMember { space: format!("QDer_{{alpha^{k}}}"), detail: "quasiderivation identity fails".into() });
    }
    Ok(phi_unchecked(ext, d, dp, degree))
}

fn phi_unchecked(ext: &ExtendedAlgebra, d: &GradedMap, dp: &GradedMap, degree: Parity) -> GradedMap {
    let top = dp.matrix().mul(&ext.projection).expect("n x n");
    GradedMap::new(ext.spec.degrees(), Matrix::block_diagonal(d.matrix(), &top), degree).expect("blocks are homogeneous")
}

/// Well-definedness, injectivity and `φ(QDer) ⊆ Der(L̆)` at twist power `k`.
pub fn verify_phi_properties(ext: &ExtendedAlgebra, k: u32, mode: Mode) -> CheckReport {
    let mut report = CheckReport::new(format!("phi properties ({mode} mode, k = {k})"));
    let n = ext.base.dim();
    let nn = n * n;
    for degree in Parity::BOTH {
        let qder = solve_space(&ext.base, SpaceKind::QDer, i64::from(k), degree, mode).expect("k >= 0");
        let tuples = qder.tuples();

        // pairs (0, D') in QDer must have D' vanish on [L, L]
        let kernel_pairs = Subspace::span(2 * nn, (0..nn).map(|i| unit_vector(2 * nn, nn + i))).expect("2n^2");
        let partners = qder.subspace().intersection(&kernel_pairs).expect("same ambient");
        let mut witness = None;
        for v in partners.basis() {
            let dp = Matrix::from_entries(n, n, v[nn..].to_vec()).expect("n*n");
            if let Some(b) = ext.derived.basis().iter().find(|b| !is_zero_vector(&dp.apply(b).expect("n"))) {
                witness = Some(Witness::new("two partners of the same D differ on [L,L]").with_matrix(&dp).with_residual(b));
                break;
            }
        }
        report.push(Check::from_outcome(
            format!("phi well-defined, degree {degree}"),
            format!("{} partner-only directions, all vanish on [L,L]", partners.dim()),
            witness,
        ));

        // injectivity: every linear relation among φ-images is a relation among the D's
        let images: Vec<GradedMap> = tuples.iter().map(|t| phi_unchecked(ext, &t[0], &t[1], degree)).collect();
        let witness = if images.is_empty() {
            None
        } else {
            let rows: Vec<Vec<_>> = images.iter().map(GradedMap::to_vector).collect();
            let relations = nullspace(&Matrix::from_rows(rows).expect("equal lengths").transpose());
            relations.basis().iter().find_map(|c| {
                let mut combo = Matrix::zeros(n, n);
                for (coef, t) in c.iter().zip(&tuples) {
                    if !coef.is_zero() {
                        combo = combo.add(&t[0].matrix().scale(coef)).expect("n x n");
                    }
                }
                (!combo.is_zero()).then(|| Witness::new("phi kills a pair with nonzero D").with_matrix(&combo))
            })
        };
        let image_span = Subspace::span(4 * nn, images.iter().map(GradedMap::to_vector)).expect("4n^2");
        let proj = qder.project_component(0).expect("arity 2");
        let witness = witness.or_else(|| {
            (image_span.dim() != proj.dim())
                .then(|| Witness::new(format!("dim phi(QDer) = {} but dim QDer = {}", image_span.dim(), proj.dim())))
        });
        report.push(Check::from_outcome(
            format!("phi injective, degree {degree}"),
            format!("dim phi(QDer) = dim QDer = {}", proj.dim()),
            witness,
        ));

        let der = solve_space(&ext.spec, SpaceKind::Der, i64::from(k), degree, mode).expect("k >= 0");
        let outside = images.iter().find(|m| !der.contains_tuple(std::slice::from_ref(*m)).expect("arity 1"));
        report.push(Check::from_outcome(
            format!("phi(QDer) ⊆ Der(L̆), degree {degree}"),
            format!("{} images checked against Der of dim {}", images.len(), der.dim()),
            outside.map(|m| Witness::new("phi image is not a derivation of the extension").with_map(m)),
        ));
    }
    report
}

/// `Der(L̆) = φ(QDer(L)) ⊕ ZDer(L̆)` at twist power `k`, and `Lt² ⊆ Z(L̆)`.
/// Requires `Z(L) = 0` and `α` surjective; otherwise reported as skipped.
pub fn verify_embedding_decomposition(ext: &ExtendedAlgebra, k: u32, mode: Mode) -> CheckReport {
    let mut report = CheckReport::new(format!("Der(L̆) = phi(QDer) ⊕ ZDer(L̆) ({mode} mode, k = {k})"));
    let name = "Der(L̆) = phi(QDer) ⊕ ZDer(L̆)";
    if !ext.base.center().is_zero() {
        report.push(Check::skipped(name, "center of the base is nonzero"));
        return report;
    }
    if !ext.base.is_alpha_invertible() {
        report.push(Check::skipped(name, "alpha is not surjective"));
        return report;
    }
    let center = ext.spec.center();
    report.push(Check::from_outcome(
        "Lt² ⊆ Z(L̆)",
        format!("dim Z(L̆) = {}", center.dim()),
        (!center.contains_subspace(&ext.top_layer()).expect("2n")).then(|| Witness::new("some x t² is not central")),
    ));
    for degree in Parity::BOTH {
        let qder = solve_space(&ext.base, SpaceKind::QDer, i64::from(k), degree, mode).expect("k >= 0");
        let images = qder.tuples().into_iter().map(|t| phi_unchecked(ext, &t[0], &t[1], degree).to_vector());
        let nn = 4 * ext.base.dim() * ext.base.dim();
        let a = Subspace::span(nn, images).expect("4n^2");
        let b = solve_space(&ext.spec, SpaceKind::ZDer, i64::from(k), degree, mode).expect("k >= 0");
        let t = solve_space(&ext.spec, SpaceKind::Der, i64::from(k), degree, mode).expect("k >= 0");
        let (b, t) = (b.subspace().clone(), t.subspace().clone());
        let sum = a.sum(&b).expect("same ambient");
        let meet = a.intersection(&b).expect("same ambient");
        let detail = format!(
            "dim Der = {}, dim phi(QDer) = {}, dim ZDer = {}, dim(sum) = {}, dim(meet) = {}",
            t.dim(),
            a.dim(),
            b.dim(),
            sum.dim(),
            meet.dim()
        );
        let witness = if sum != t {
            let v = t.basis().iter().chain(sum.basis()).find(|v| !(t.contains(v).unwrap() && sum.contains(v).unwrap()));
            let mut w = Witness::new("phi(QDer) + ZDer differs from Der");
            if let Some(v) = v {
                let m2 = 2 * ext.base.dim();
                w = w.with_matrix(&Matrix::from_entries(m2, m2, v.clone()).expect("2n x 2n"));
            }
            Some(w)
        } else if !meet.is_zero() {
            Some(Witness::new("phi(QDer) and ZDer intersect nontrivially"))
        } else if t.dim() != a.dim() + b.dim() {
            Some(Witness::new("dimension identity fails"))
        } else {
            None
        };
        report.push(Check::from_outcome(format!("{name}, degree {degree}"), detail, witness));
    }
    report
}
