//! Reduces the sum of all PS-hollow submodules of Z_60 to a minimal
//! representation, printing each step.

use hollowlat::module::{FiniteModule, SubmoduleLattice};
use hollowlat::pshollow::{MinimizeStep, PsHollowAnalysis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sl = SubmoduleLattice::new(FiniteModule::cyclic(60)?)?;
    let a = PsHollowAnalysis::new(&sl);
    let start = a.ps_hollow_submodules();
    println!("start: {}", sl.names(&start));
    let result = a.minimize(&start)?;
    for step in &result.trace {
        match step {
            MinimizeStep::RemovedRedundant { removed } => println!("  drop {}", sl.name(*removed)),
            MinimizeStep::MergedEqualFamilies { parts, into } => {
                println!("  merge {} into {}", sl.names(parts), sl.name(*into))
            }
            MinimizeStep::ReplacedByInterior { parts, into } => {
                println!("  replace {} by {}", sl.names(&[parts.0, parts.1]), sl.name(*into))
            }
        }
    }
    let rep = &result.representation;
    println!("minimal: {} ({})", sl.names(&rep.summands), rep.minimal);
    Ok(())
}
