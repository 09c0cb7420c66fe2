//! Runs the lattice duality battery over seeded random lattices with poset
//! actions and tallies the verdicts.

use std::collections::BTreeMap;

use hollowlat::generate::random_instance;
use hollowlat::report::Verdict;
use hollowlat::spectra::{check_all, index_label};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    for _ in 0..500 {
        let action = random_instance(&mut rng, 8, 4);
        for finding in check_all(&action, &index_label)?.findings {
            let slot = match finding.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::HypothesisUnmet => 2,
            };
            tally.entry(finding.claim).or_default()[slot] += 1;
        }
    }
    println!("{:<50} {:>5} {:>5} {:>5}", "claim", "pass", "fail", "unmet");
    for (claim, [pass, fail, unmet]) in tally {
        println!("{claim:<50} {pass:>5} {fail:>5} {unmet:>5}");
    }
    Ok(())
}
