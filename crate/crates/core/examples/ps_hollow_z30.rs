//! PS-hollow submodules of Z_30 with their ideal families and interiors.

use hollowlat::module::{FiniteModule, SubmoduleLattice};
use hollowlat::pshollow::PsHollowAnalysis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sl = SubmoduleLattice::new(FiniteModule::cyclic(30)?)?;
    let a = PsHollowAnalysis::new(&sl);
    for n in a.ps_hollow_submodules() {
        let p = a.profile(n);
        println!(
            "{:<5} H={} In={}",
            sl.name(n),
            a.family_name(&p.minimal),
            sl.name(p.interior)
        );
    }
    for n in sl
        .indices()
        .filter(|&n| n != sl.zero() && !a.is_ps_hollow(n).unwrap_or(false))
    {
        if let Some((im, l)) = a.violation(n) {
            println!(
                "{:<5} not PS-hollow: inside {} + {}, but in neither",
                sl.name(n),
                sl.name(im),
                sl.name(l)
            );
        }
    }
    println!(
        "associated hollow ideals: {:?}",
        a.associated_hollow_ideals()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
