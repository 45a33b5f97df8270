//! Build an algebra in code, write it in the JSON file format, read it back,
//! and solve for its derivations. The algebra is sl(2) with a scaling twist
//! on the nilpotent part.
//!
//!     cargo run --example custom_algebra

use homlie::algebra::{AlgebraSpec, BracketEntry, Parity};
use homlie::format::{parse_algebra_str, write_algebra};
use homlie::linalg::int;
use homlie::{solve_space, Matrix, Mode, SpaceKind};

fn main() -> homlie::Result<()> {
    // [h, e] = 2e, [h, f] = -2f, [e, f] = h; alpha = identity, so this is plain sl(2)
    let v = |xs: [i64; 3]| xs.map(int).to_vec();
    let brackets = [
        BracketEntry { left: 0, right: 1, result: v([0, 2, 0]) },
        BracketEntry { left: 0, right: 2, result: v([0, 0, -2]) },
        BracketEntry { left: 1, right: 2, result: v([1, 0, 0]) },
    ];
    let names = ["h", "e", "f"].map(String::from).to_vec();
    let sl2 = AlgebraSpec::from_brackets("sl2", names, vec![Parity::Even; 3], Matrix::identity(3), &brackets)?;
    assert!(sl2.validate().all_ok());

    let json = write_algebra(&sl2);
    println!("{json}");
    assert_eq!(parse_algebra_str(&json)?, sl2);

    // every derivation of sl(2) is inner, and the centroid is the scalars
    for kind in [SpaceKind::Der, SpaceKind::C, SpaceKind::QC, SpaceKind::ZDer] {
        let s = solve_space(&sl2, kind, 0, Parity::Even, Mode::Strict)?;
        println!("{} has dim {}", s.label(), s.dim());
    }
    Ok(())
}
