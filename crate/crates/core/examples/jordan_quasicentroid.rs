//! The quasicentroid under the Jordan product: closure under brackets versus
//! composition, and the Hom-Jordan identities, on every bundled algebra.
//!
//!     cargo run --example jordan_quasicentroid

use homlie::algebra::{hom_associator, Parity};
use homlie::maps::{jordan_product, JordanMaps};
use homlie::theorems::check_qc_structure;
use homlie::{corpus, Mode, SpaceCache, SpaceKind};

fn main() {
    for spec in corpus::all() {
        let mut cache = SpaceCache::new(&spec, Mode::Strict);
        let qc = check_qc_structure(&mut cache, 2);
        println!("== {} ==", spec.name());
        for c in &qc.closures {
            println!(
                "  (k, s) = ({}, {}): bracket-closed {}, composition-closed {}",
                c.k, c.s, c.bracket_closed, c.composition_closed
            );
        }
        for (k, ok) in &qc.jordan {
            println!("  Hom-Jordan identities on QC_{k}: {}", if *ok { "hold" } else { "FAIL" });
        }

        // one product and associator by hand
        let basis = cache.map_basis(SpaceKind::QC, 1, Parity::Even);
        if let Some(x) = basis.first() {
            let jm = JordanMaps { spec: &spec };
            println!("  x = {x}");
            println!("  x • x = {}", jordan_product(x, x).expect("same size"));
            println!("  as(x, x, x) = {}", hom_associator(&jm, x, x, x).expect("same size"));
        }
    }
}
