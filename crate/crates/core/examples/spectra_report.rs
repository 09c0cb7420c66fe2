//! Every spectrum of the submodule lattice of Z_12 under the ideal action.

use hollowlat::module::{FiniteModule, SubmoduleLattice};
use hollowlat::spectra::{spectrum, SpectrumKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sl = SubmoduleLattice::new(FiniteModule::cyclic(12)?)?;
    for kind in SpectrumKind::ALL {
        println!("{kind:>20}: {}", sl.names(&spectrum(sl.action(), kind)));
    }
    Ok(())
}
