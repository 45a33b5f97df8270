//! The extension L t + L t^2, the map phi from quasiderivations to its
//! derivations, and the decomposition Der = phi(QDer) + ZDer.
//!
//!     cargo run --example extension_embedding -- ex2_5

use homlie::algebra::Parity;
use homlie::cli::load_algebra;
use homlie::extension::{build_extended, check_extension, phi, verify_embedding_decomposition, verify_phi_properties};
use homlie::{solve_space, Mode, SpaceKind};

fn main() -> homlie::Result<()> {
    let spec = load_algebra(&std::env::args().nth(1).unwrap_or_else(|| "ex2_5".into()))?;
    let ext = build_extended(&spec)?;
    println!("{} has dim {}; complement U of [L, L] has dim {}", ext.spec().name(), ext.spec().dim(), ext.u_complement().dim());
    println!("projection onto [L, L] along U: {}", ext.projection());
    print!("{}", check_extension(&ext));

    let qder = solve_space(&spec, SpaceKind::QDer, 1, Parity::Even, Mode::Strict)?;
    for t in qder.tuples() {
        let image = phi(&ext, 1, Mode::Strict, (&t[0], &t[1]))?;
        println!("phi({}, {}) = {}", t[0], t[1], image);
    }

    for mode in [Mode::Strict, Mode::Lax] {
        for k in 0..=1 {
            print!("{}", verify_phi_properties(&ext, k, mode));
            print!("{}", verify_embedding_decomposition(&ext, k, mode));
        }
    }
    Ok(())
}
