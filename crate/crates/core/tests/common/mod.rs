//! Independent dense oracle for the operator spaces, plus a seeded generator of
//! random valid algebras. Shares no code with the solver beyond reading the
//! structure constants, degrees and twist of the input.

#![allow(dead_code)]

use homlie::algebra::{AlgebraSpec, BracketEntry, Parity};
use homlie::{Matrix, SpaceKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Gauss-Jordan on a dense row list; returns (reduced rows, pivot columns).
pub fn reduce(mut rows: Vec<Vec<Q>>, cols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Canonical basis of the solution set of `rows · x = 0`.
pub fn kernel(rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = reduce(rows, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    reduce(basis, cols).0
}

fn mat_pow(a: &[Vec<Q>], k: u32) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut out: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for _ in 0..k {
        out = (0..n).map(|i| (0..n).map(|j| (0..n).map(|t| &out[i][t] * &a[t][j]).sum()).collect()).collect();
    }
    out
}

/// Canonical basis of the stacked-coordinate space for `kind`, computed by
/// writing every defining equation as an explicit row over all
/// `arity * n^2` matrix entries.
pub fn oracle_space(spec: &AlgebraSpec, kind: SpaceKind, k: u32, theta: Parity, strict: bool) -> Vec<Vec<Q>> {
    let n = spec.dim();
    let nn = n * n;
    let arity = match kind {
        SpaceKind::GDer => 3,
        SpaceKind::QDer => 2,
        _ => 1,
    };
    let cols = arity * nn;
    let deg: Vec<u8> = spec.degrees().iter().map(|d| d.bit()).collect();
    let th = theta.bit();
    let alpha: Vec<Vec<Q>> = (0..n).map(|r| spec.alpha().row(r).to_vec()).collect();
    let a = mat_pow(&alpha, k);
    let c = |i: usize, j: usize, r: usize| spec.structure_constants(i, j)[r].clone();
    let var = |comp: usize, row: usize, col: usize| comp * nn + row * n + col;
    let mut rows: Vec<Vec<Q>> = Vec::new();

    // homogeneity
    for comp in 0..arity {
        for m in 0..n {
            for i in 0..n {
                if deg[m] != (deg[i] + th) % 2 {
                    let mut row = vec![Q::zero(); cols];
                    row[var(comp, m, i)] = Q::one();
                    rows.push(row);
                }
            }
        }
    }
    // commutation with α
    if strict {
        for comp in 0..arity {
            for r in 0..n {
                for cc in 0..n {
                    let mut row = vec![Q::zero(); cols];
                    for t in 0..n {
                        row[var(comp, r, t)] += &alpha[t][cc];
                        row[var(comp, t, cc)] -= &alpha[r][t];
                    }
                    rows.push(row);
                }
            }
        }
    }

    // Row fragments for the three terms at (i, j, r), each scaled by `f`:
    //   left  = [M e_i, A e_j]_r   = Σ_m Σ_p M[m][i] A[p][j] c(m,p,r)
    //   right = s[A e_i, M e_j]_r  = s Σ_p Σ_m A[p][i] M[m][j] c(p,m,r)
    //   inner = (M [e_i, e_j])_r   = Σ_t M[r][t] c(i,j,t)
    let left = |row: &mut Vec<Q>, comp: usize, i: usize, j: usize, r: usize, f: &Q| {
        for m in 0..n {
            let coef: Q = (0..n).map(|p| &a[p][j] * &c(m, p, r)).sum();
            row[var(comp, m, i)] += &coef * f;
        }
    };
    let right = |row: &mut Vec<Q>, comp: usize, i: usize, j: usize, r: usize, f: &Q| {
        let s = if th * deg[i] % 2 == 1 { q(-1) } else { q(1) };
        for m in 0..n {
            let coef: Q = (0..n).map(|p| &a[p][i] * &c(p, m, r)).sum();
            row[var(comp, m, j)] += &(&coef * &s) * f;
        }
    };
    let inner = |row: &mut Vec<Q>, comp: usize, i: usize, j: usize, r: usize, f: &Q| {
        for t in 0..n {
            row[var(comp, r, t)] += &c(i, j, t) * f;
        }
    };
    let (one, minus) = (q(1), q(-1));
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let mut eqs: Vec<Vec<Q>> = Vec::new();
                let mut row = vec![Q::zero(); cols];
                match kind {
                    SpaceKind::Der => {
                        left(&mut row, 0, i, j, r, &one);
                        right(&mut row, 0, i, j, r, &one);
                        inner(&mut row, 0, i, j, r, &minus);
                        eqs.push(row);
                    }
                    SpaceKind::GDer => {
                        left(&mut row, 0, i, j, r, &one);
                        right(&mut row, 1, i, j, r, &one);
                        inner(&mut row, 2, i, j, r, &minus);
                        eqs.push(row);
                    }
                    SpaceKind::QDer => {
                        left(&mut row, 0, i, j, r, &one);
                        right(&mut row, 0, i, j, r, &one);
                        inner(&mut row, 1, i, j, r, &minus);
                        eqs.push(row);
                    }
                    SpaceKind::QC => {
                        left(&mut row, 0, i, j, r, &one);
                        right(&mut row, 0, i, j, r, &minus);
                        eqs.push(row);
                    }
                    SpaceKind::C => {
                        let mut second = row.clone();
                        left(&mut row, 0, i, j, r, &one);
                        inner(&mut row, 0, i, j, r, &minus);
                        right(&mut second, 0, i, j, r, &one);
                        inner(&mut second, 0, i, j, r, &minus);
                        eqs.push(row);
                        eqs.push(second);
                    }
                    SpaceKind::ZDer => {
                        let mut second = row.clone();
                        left(&mut row, 0, i, j, r, &one);
                        inner(&mut second, 0, i, j, r, &one);
                        eqs.push(row);
                        eqs.push(second);
                    }
                }
                rows.extend(eqs);
            }
        }
    }
    kernel(rows, cols)
}

/// Dimension of the span of component 0 of an oracle basis.
pub fn first_component_dim(basis: &[Vec<Q>], n: usize) -> usize {
    let nn = n * n;
    reduce(basis.iter().map(|v| v[..nn].to_vec()).collect(), nn).0.len()
}

/// Random algebras with entries in -2..=2 that satisfy the axioms, from a fixed seed.
pub fn random_valid_algebras(seed: u64, count: usize) -> Vec<AlgebraSpec> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempt = 0;
    let mut abelian = 0;
    while out.len() < count {
        attempt += 1;
        let n = rng.gen_range(1..=3);
        let degrees: Vec<Parity> = (0..n).map(|_| if rng.gen_bool(0.3) { Parity::Odd } else { Parity::Even }).collect();
        let alpha_entries: Vec<Q> = (0..n * n)
            .map(|t| {
                let (r, c) = (t / n, t % n);
                if degrees[r] != degrees[c] {
                    Q::zero()
                } else if r == c {
                    q(rng.gen_range(-2..=2))
                } else if rng.gen_bool(0.25) {
                    q(rng.gen_range(-1..=1))
                } else {
                    Q::zero()
                }
            })
            .collect();
        let alpha = Matrix::from_entries(n, n, alpha_entries).unwrap();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && degrees[i] == Parity::Even {
                    continue;
                }
                let target = degrees[i] + degrees[j];
                let result: Vec<Q> = (0..n)
                    .map(|m| if degrees[m] == target && rng.gen_bool(0.35) { q(rng.gen_range(-2..=2)) } else { Q::zero() })
                    .collect();
                if result.iter().any(|x| !x.is_zero()) {
                    entries.push(BracketEntry { left: i, right: j, result });
                }
            }
        }
        let names = (0..n).map(|i| format!("e{i}")).collect();
        let Ok(spec) = AlgebraSpec::from_brackets(format!("random{attempt}"), names, degrees, alpha, &entries) else {
            continue;
        };
        if !spec.validate().is_hom_lie() {
            continue;
        }
        // keep most of the sample non-abelian
        if spec.derived_subalgebra().is_zero() {
            if abelian * 4 >= count {
                continue;
            }
            abelian += 1;
        }
        out.push(spec);
    }
    out
}
