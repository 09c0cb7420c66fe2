//! Builds the pentagon lattice, prints meets, joins and covers, and checks a
//! poset action on it.

use hollowlat::lattice::{FiniteLattice, FinitePoset, PosetAction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 0 < a < b < 1 and 0 < c < 1
    let n5 = FiniteLattice::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])?;
    println!("covers: {:?}", n5.covers());
    println!("a ∧ c = {}, b ∨ c = {}", n5.meet(1, 3), n5.join(2, 3));
    println!("dual covers: {:?}", n5.dual().covers());

    // s0 sends everything to 0, s1 is the identity
    let action = PosetAction::from_fn(n5, FinitePoset::chain(2), |s, x| if s == 0 { 0 } else { x })?;
    println!("multiplication: {}", action.is_multiplication());
    println!("join-distributive: {}", action.is_join_distributive());
    let interval = action.lower_interval(2);
    println!("[0, b] has {} elements", interval.lattice().size());
    Ok(())
}
