//! Seeded random generators of finite lattices, posets and valid actions.
//!
//! Lattices come from random intersection-closed families of subsets of a
//! small ground set (every finite lattice arises this way), with element ids
//! shuffled so that ids carry no order information. Actions come in two
//! flavours: star-shaped ones, `s ⇀ x = a_s ∧ x` with `a_s` monotone in `s`,
//! and general ones filled entry by entry between the lower bound forced by
//! monotonicity and the upper bound `x`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::lattice::{ElementId, FiniteLattice, FinitePoset, PosetAction};

const GROUND_BITS: u32 = 4;

/// A random lattice with at most `max_size` elements (at least one).
pub fn random_lattice<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> FiniteLattice {
    let max_size = max_size.max(1);
    let target = rng.gen_range(1..=max_size);
    let full: u8 = (1 << GROUND_BITS) - 1;
    let mut family = vec![full];
    let mut attempts = 0;
    while family.len() < target && attempts < 64 {
        attempts += 1;
        let candidate: u8 = rng.gen_range(0..=full);
        let closed = intersection_closure(&family, candidate);
        if closed.len() <= max_size {
            family = closed;
        }
    }
    let mut ids: Vec<usize> = (0..family.len()).collect();
    ids.shuffle(rng);
    let mut pairs = Vec::new();
    for (i, &a) in family.iter().enumerate() {
        for (j, &b) in family.iter().enumerate() {
            if i != j && a & b == a {
                pairs.push((ids[i], ids[j]));
            }
        }
    }
    FiniteLattice::new(family.len(), &pairs).expect("intersection-closed families with a top are lattices")
}

fn intersection_closure(family: &[u8], extra: u8) -> Vec<u8> {
    let mut out: Vec<u8> = family.to_vec();
    if !out.contains(&extra) {
        out.push(extra);
    }
    loop {
        let mut grew = false;
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                let m = out[i] & out[j];
                if !out.contains(&m) {
                    out.push(m);
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

/// A random poset with between 1 and `max_size` elements.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max_size.max(1));
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.35) {
                pairs.push((ids[i], ids[j]));
            }
        }
    }
    FinitePoset::new(n, &pairs).expect("edges follow a fixed linear order")
}

/// `s ⇀ x = a_s ∧ x` with `a_s` chosen monotone along the poset.
pub fn random_star_action<R: Rng + ?Sized>(rng: &mut R, lattice: &FiniteLattice, poset: &FinitePoset) -> PosetAction {
    let mut top_image = vec![lattice.bottom(); poset.size()];
    for s in poset.linear_extension() {
        let floor = lattice.join_all((0..poset.size()).filter(|&t| poset.lt(t, s)).map(|t| top_image[t]));
        let choices = lattice.up_set(floor);
        top_image[s] = *choices.choose(rng).expect("up-set contains the floor");
    }
    PosetAction::from_fn(lattice.clone(), poset.clone(), |s, x| lattice.meet(top_image[s], x))
        .expect("star-shaped tables satisfy the axioms")
}

/// A general action: each entry is drawn between the join of the entries it
/// must dominate and `x` itself.
pub fn random_action<R: Rng + ?Sized>(rng: &mut R, lattice: &FiniteLattice, poset: &FinitePoset) -> PosetAction {
    let n = lattice.size();
    let mut table: Vec<Option<ElementId>> = vec![None; poset.size() * n];
    let element_order = lattice.order().linear_extension();
    for s in poset.linear_extension() {
        for &x in &element_order {
            let mut floor = lattice.bottom();
            for t in (0..poset.size()).filter(|&t| poset.lt(t, s)) {
                floor = lattice.join(floor, table[t * n + x].expect("filled earlier"));
            }
            for y in (0..n).filter(|&y| y != x && lattice.leq(y, x)) {
                floor = lattice.join(floor, table[s * n + y].expect("filled earlier"));
            }
            let choices: Vec<ElementId> = (0..n).filter(|&w| lattice.leq(floor, w) && lattice.leq(w, x)).collect();
            table[s * n + x] = Some(*choices.choose(rng).expect("floor lies below x"));
        }
    }
    let table = table.into_iter().map(|e| e.expect("every entry filled")).collect();
    PosetAction::new(lattice.clone(), poset.clone(), table).expect("monotone fill satisfies the axioms")
}

/// A random instance; half star-shaped, half general.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, max_lattice: usize, max_poset: usize) -> PosetAction {
    let lattice = random_lattice(rng, max_lattice);
    let poset = random_poset(rng, max_poset);
    if rng.gen_bool(0.5) {
        random_star_action(rng, &lattice, &poset)
    } else {
        random_action(rng, &lattice, &poset)
    }
}
