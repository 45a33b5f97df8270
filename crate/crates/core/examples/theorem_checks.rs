//! Inclusion chain, bracket laws and the GDer = QDer + QC split on every
//! bundled algebra, in strict and lax mode.
//!
//!     cargo run --example theorem_checks

use homlie::corpus;
use homlie::report::Status;
use homlie::theorems::{check_bracket_laws, check_generalized_split, check_inclusion_chain};
use homlie::{Mode, SpaceCache};

fn main() {
    for mode in [Mode::Strict, Mode::Lax] {
        for spec in corpus::all() {
            let mut cache = SpaceCache::new(&spec, mode);
            let reports = [
                check_inclusion_chain(&mut cache, 2),
                check_bracket_laws(&mut cache, 2),
                check_generalized_split(&mut cache, 2),
            ];
            let count = |s| reports.iter().map(|r| r.count(s)).sum::<usize>();
            println!(
                "{:<15} {mode:<6} pass {:>3}  fail {}  skipped {}",
                spec.name(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skipped)
            );
            // skipped checks say which hypothesis is missing
            for c in reports.iter().flat_map(|r| &r.checks).filter(|c| c.status != Status::Pass) {
                println!("    {c}");
            }
        }
    }
}
