//! Writes the Hasse diagram of the submodules of Z_2 ⊕ Z_2 ⊕ Z_2 as DOT,
//! with the second submodules filled.

use hollowlat::dot::emit_dot;
use hollowlat::module::{FiniteModule, Ring, SubmoduleLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sl = SubmoduleLattice::new(FiniteModule::new(Ring::new(2)?, vec![2, 2, 2])?)?;
    let seconds = sl.second_submodules();
    let hollow = sl.hollow_submodules();
    let dot = emit_dot(
        sl.lattice(),
        &|i| sl.name(i),
        &seconds,
        &[("second".into(), seconds.clone()), ("hollow".into(), hollow)],
    );
    print!("{dot}");
    Ok(())
}
