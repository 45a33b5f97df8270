//! Load an algebra (bundled name or JSON path), check the axioms, and print
//! its center and derived subalgebra.
//!
//!     cargo run --example validate_algebra -- heisenberg3

use homlie::cli::load_algebra;
use homlie::linalg::format_scalar;

fn main() -> homlie::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "ex2_5".into());
    let spec = load_algebra(&arg)?;
    println!("{} (dim {}, degrees {:?})", spec.name(), spec.dim(), spec.degrees().iter().map(|d| d.bit()).collect::<Vec<_>>());
    println!("alpha = {}", spec.alpha());

    let v = spec.validate();
    println!("even: {}, skew: {}, Jacobi: {}, multiplicative: {}", v.even_ok, v.skew_ok, v.jacobi_ok, v.multiplicative_ok);
    for f in &v.failures {
        let r: Vec<_> = f.residual.iter().map(format_scalar).collect();
        println!("  {} fails at {:?}: [{}]", f.identity, f.indices, r.join(", "));
    }

    let show = |label: &str, basis: &[Vec<homlie::Scalar>]| {
        println!("{label} (dim {}):", basis.len());
        for b in basis {
            println!("  [{}]", b.iter().map(format_scalar).collect::<Vec<_>>().join(", "));
        }
    };
    show("center", spec.center().basis());
    show("[L, L]", spec.derived_subalgebra().basis());
    Ok(())
}
