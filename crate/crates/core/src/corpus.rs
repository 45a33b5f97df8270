//! Bundled algebras: the 3-dimensional twisted example with invertible
//! diagonal twist, an abelian plane, the Heisenberg algebra, and the 1|1
//! odd Heisenberg superalgebra with `[f, f] = e`.

use crate::algebra::AlgebraSpec;
use crate::format::parse_algebra_str;

pub const EX2_5: &str = include_str!("../data/ex2_5.json");
pub const ABELIAN2: &str = include_str!("../data/abelian2.json");
pub const HEISENBERG3: &str = include_str!("../data/heisenberg3.json");
pub const ODD_HEISENBERG: &str = include_str!("../data/odd_heisenberg.json");

pub const NAMES: [&str; 4] = ["ex2_5", "abelian2", "heisenberg3", "odd_heisenberg"];

/// Looks up a bundled algebra by name.
pub fn by_name(name: &str) -> Option<AlgebraSpec> {
    let text = match name {
        "ex2_5" => EX2_5,
        "abelian2" => ABELIAN2,
        "heisenberg3" => HEISENBERG3,
        "odd_heisenberg" => ODD_HEISENBERG,
        _ => return None,
    };
    Some(parse_algebra_str(text).expect("bundled algebra parses"))
}

pub fn ex2_5() -> AlgebraSpec {
    by_name("ex2_5").unwrap()
}

pub fn abelian2() -> AlgebraSpec {
    by_name("abelian2").unwrap()
}

pub fn heisenberg3() -> AlgebraSpec {
    by_name("heisenberg3").unwrap()
}

pub fn odd_heisenberg() -> AlgebraSpec {
    by_name("odd_heisenberg").unwrap()
}

pub fn all() -> Vec<AlgebraSpec> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}
