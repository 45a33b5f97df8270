//! Dimension table of all six operator spaces, then the canonical bases at
//! one twist power.
//!
//!     cargo run --example solve_spaces -- ex2_5 1

use homlie::algebra::Parity;
use homlie::cli::load_algebra;
use homlie::{solve_space, Mode, SpaceKind};

fn main() -> homlie::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = load_algebra(&args.next().unwrap_or_else(|| "ex2_5".into()))?;
    let k: i64 = args.next().map(|s| s.parse().expect("k is an integer")).unwrap_or(1);

    println!("{}: dim / first-component dim, strict mode", spec.name());
    print!("{:>6}", "");
    for kk in 0..=2 {
        print!("{:>14}", format!("k={kk} deg 0|1"));
    }
    println!();
    for kind in SpaceKind::ALL {
        print!("{:>6}", kind.name());
        for kk in 0..=2 {
            let cells: Vec<String> = Parity::BOTH
                .iter()
                .map(|&d| {
                    let s = solve_space(&spec, kind, kk, d, Mode::Strict).expect("k >= 0");
                    format!("{}/{}", s.dim(), s.project_component(0).expect("arity >= 1").dim())
                })
                .collect();
            print!("{:>14}", cells.join(" "));
        }
        println!();
    }

    for kind in SpaceKind::ALL {
        let space = solve_space(&spec, kind, k, Parity::Even, Mode::Strict)?;
        println!("\n{} (dim {}):", space.label(), space.dim());
        for tuple in space.tuples() {
            let maps: Vec<String> = tuple.iter().map(|m| m.to_string()).collect();
            println!("  {}", maps.join("  |  "));
        }
    }
    Ok(())
}
