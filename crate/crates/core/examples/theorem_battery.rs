//! Runs the PS-hollow battery on a module given as `ring N` and factors,
//! e.g. `cargo run --example theorem_battery -- 12 2 6`.

use hollowlat::module::{FiniteModule, Ring, SubmoduleLattice};
use hollowlat::pshollow::PsHollowAnalysis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, factors) = match args.split_first() {
        Some((&n, rest)) if !rest.is_empty() => (n, rest.to_vec()),
        Some((&n, _)) => (n, vec![n]),
        None => (12, vec![12]),
    };
    let sl = SubmoduleLattice::new(FiniteModule::new(Ring::new(n)?, factors)?)?;
    let report = PsHollowAnalysis::new(&sl).check_all(6)?;
    print!("{}", report.to_text());
    std::process::exit(report.exit_code());
}
