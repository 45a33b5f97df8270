//! Split generalized derivations into a quasiderivation and a quasicentroid
//! part, first for a hand-built triple, then for every basis triple.
//!
//!     cargo run --example generalized_split

use homlie::algebra::Parity;
use homlie::linalg::int;
use homlie::{corpus, decompose_generalized, solve_space, GradedMap, Matrix, Mode, SpaceKind};

fn diag(xs: &[i64]) -> GradedMap {
    let d: Vec<_> = xs.iter().map(|&x| int(x)).collect();
    GradedMap::new(&[Parity::Even; 3], Matrix::from_diagonal(&d), Parity::Even).unwrap()
}

fn main() -> homlie::Result<()> {
    let l = corpus::ex2_5();

    // (D, D', D'') with D = 2 diag(1,2,2), D' = 0 and D'' = diag(4,4,8) at k = 1
    let triple = [diag(&[2, 4, 4]), diag(&[0, 0, 0]), diag(&[4, 4, 8])];
    let split = decompose_generalized(&l, 1, Parity::Even, Mode::Strict, [&triple[0], &triple[1], &triple[2]])?;
    println!("D          = {}", triple[0]);
    println!("QDer part  = {}  with partner {}", split.quasiderivation.0, split.quasiderivation.1);
    println!("QC part    = {}", split.quasicentroid);

    // a triple outside GDer is rejected with the reason
    let bad = diag(&[1, 0, 0]);
    if let Err(e) = decompose_generalized(&l, 1, Parity::Even, Mode::Strict, [&bad, &bad, &bad]) {
        println!("rejected: {e}");
    }

    for spec in corpus::all() {
        for degree in Parity::BOTH {
            let gder = solve_space(&spec, SpaceKind::GDer, 0, degree, Mode::Strict)?;
            for t in gder.tuples() {
                decompose_generalized(&spec, 0, degree, Mode::Strict, [&t[0], &t[1], &t[2]])?;
            }
            println!("{}: all {} basis triples of {} split", spec.name(), gder.dim(), gder.label());
        }
    }
    Ok(())
}
