//! Enumerates the minimal PS-hollow representations of Z_n for a few n and
//! compares every pair with the two uniqueness checks.

use hollowlat::module::{FiniteModule, SubmoduleLattice};
use hollowlat::pshollow::PsHollowAnalysis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [36, 72, 120, 180] {
        let sl = SubmoduleLattice::new(FiniteModule::cyclic(n)?)?;
        let a = PsHollowAnalysis::new(&sl);
        let reps = a.enumerate_minimal_representations(6)?;
        let mut failures = 0;
        for x in &reps {
            for y in &reps {
                failures += a.verify_first_uniqueness(x, y).has_failures() as usize;
                failures += a.verify_second_uniqueness(x, y).has_failures() as usize;
            }
        }
        let shown: Vec<String> = reps.iter().map(|r| sl.names(&r.summands)).collect();
        println!(
            "Z_{n}: {} representation(s) {:?}, {failures} failure(s)",
            reps.len(),
            shown
        );
    }
    Ok(())
}
