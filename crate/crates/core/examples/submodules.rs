//! Submodules of Z_2 ⊕ Z_4 over Z/4 with annihilators and class properties.

use hollowlat::module::{FiniteModule, Ring, SubmoduleLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let module = FiniteModule::new(Ring::new(4)?, vec![2, 4])?;
    let sl = SubmoduleLattice::new(module)?;
    println!("{}", sl.module().describe());
    for i in sl.indices() {
        let n = sl.submodule(i);
        println!("  {:<16} order {:>2}  ann {}", sl.name(i), n.len(), sl.annihilator(i));
    }
    println!("second: {}", sl.names(&sl.second_submodules()));
    println!("hollow: {}", sl.names(&sl.hollow_submodules()));
    println!("multiplication: {}", sl.is_multiplication());
    println!("distributive: {}", sl.is_distributive());
    println!("pseudo-distributive: {}", sl.is_pseudo_distributive());
    Ok(())
}
