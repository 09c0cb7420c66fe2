//! Finite lattices with poset actions, their primeness and coprimeness
//! spectra, finite modules over `Z/nZ`, and PS-hollow representations.

pub mod cli;
pub mod dot;
pub mod generate;
pub mod lattice;
pub mod module;
pub mod pshollow;
pub mod report;
pub mod specfile;
pub mod spectra;
