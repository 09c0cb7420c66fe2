//! Finite modules over `R = Z/nZ`, given as direct sums of cyclic groups
//! `Z_{d_1} ⊕ ... ⊕ Z_{d_k}` with every `d_i | n`.
//!
//! Scalars act as integer multiples, so submodules are exactly the subgroups.
//! Elements are mixed-radix indices with the last factor least significant,
//! which makes index order the lexicographic order on coordinate tuples.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use thiserror::Error;

use crate::lattice::{ElementId, FiniteLattice, FinitePoset, LatticeError, PosetAction};

/// Default cap on the module order.
pub const DEFAULT_BOUND: usize = 4096;
/// Cap on the number of submodules a lattice is built for.
pub const SUBMODULE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("ring modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("module needs at least one cyclic factor")]
    NoFactors,
    #[error("cyclic factor {factor} must be at least 2")]
    FactorTooSmall { factor: u32 },
    #[error("cyclic factor {factor} does not divide the ring modulus {modulus}")]
    FactorDoesNotDivide { factor: u32, modulus: u32 },
    #[error("{what} {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("{0} is not a divisor of the ring modulus")]
    NotAnIdeal(u32),
    #[error("element {index} out of range for a module of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("coordinate tuple has {got} entries, the module has {expected} factors")]
    Arity { got: usize, expected: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Prime factorisation as `(p, m)` pairs with ascending `p`.
pub fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut m = 0;
        while n.is_multiple_of(p) {
            n /= p;
            m += 1;
        }
        if m > 0 {
            out.push((p, m));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Z/nZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    modulus: u32,
}

impl Ring {
    pub fn new(modulus: u32) -> Result<Self, ModuleError> {
        if modulus < 2 {
            return Err(ModuleError::InvalidModulus(modulus));
        }
        Ok(Ring { modulus })
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// All ideals `(d)`, `d | n`, by ascending generator (so from `R` down to `0`).
    pub fn ideals(self) -> Vec<Ideal> {
        divisors(self.modulus)
            .into_iter()
            .map(|generator| Ideal {
                modulus: self.modulus,
                generator,
            })
            .collect()
    }

    pub fn ideal(self, generator: u32) -> Result<Ideal, ModuleError> {
        if generator == 0 || !self.modulus.is_multiple_of(generator) {
            return Err(ModuleError::NotAnIdeal(generator));
        }
        Ok(Ideal {
            modulus: self.modulus,
            generator,
        })
    }

    /// The ideal generated by an arbitrary integer, `(gcd(m, n))`.
    pub fn ideal_of(self, m: u32) -> Ideal {
        Ideal {
            modulus: self.modulus,
            generator: gcd(m, self.modulus),
        }
    }
}

/// The ideal `(d)` of `Z/nZ` with `d | n`; `(n)` is the zero ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    modulus: u32,
    generator: u32,
}

impl Ideal {
    pub fn generator(self) -> u32 {
        self.generator
    }

    pub fn is_zero(self) -> bool {
        self.generator == self.modulus
    }

    /// `other ⊆ self`.
    pub fn contains(self, other: Ideal) -> bool {
        other.generator.is_multiple_of(self.generator)
    }

    pub fn sum(self, other: Ideal) -> Ideal {
        Ideal {
            generator: gcd(self.generator, other.generator),
            ..self
        }
    }

    pub fn intersection(self, other: Ideal) -> Ideal {
        Ideal {
            generator: lcm(self.generator, other.generator),
            ..self
        }
    }

    /// Hollow in the ideal lattice: nonzero, and `I = J + K` forces `I = J`
    /// or `I = K`.
    pub fn is_hollow(self) -> bool {
        if self.is_zero() {
            return false;
        }
        let ring = Ring { modulus: self.modulus };
        let ideals = ring.ideals();
        ideals
            .iter()
            .all(|&j| ideals.iter().all(|&k| j.sum(k) != self || j == self || k == self))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("(0)")
        } else {
            write!(f, "({})", self.generator)
        }
    }
}

/// Finite abelian groups with an explicit element enumeration. Implemented by
/// modules and by their quotients so that spans and subgroup enumeration are
/// shared.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn zero(&self) -> usize {
        0
    }
}

/// Adds `<g>` to the subgroup `set` in place.
fn adjoin<G: FiniteGroup + ?Sized>(group: &G, set: &mut FixedBitSet, g: usize) {
    if set.contains(g) {
        return;
    }
    let base: Vec<usize> = set.ones().collect();
    let original = set.clone();
    let mut multiple = g;
    while !original.contains(multiple) {
        for &b in &base {
            set.insert(group.add(b, multiple));
        }
        multiple = group.add(multiple, g);
    }
}

/// The subgroup generated by `gens`.
pub fn span_in<G: FiniteGroup + ?Sized>(group: &G, gens: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(group.order());
    set.insert(group.zero());
    for g in gens {
        adjoin(group, &mut set, g);
    }
    set
}

/// `A + B` for subgroups given as bit sets.
pub fn sum_in<G: FiniteGroup + ?Sized>(group: &G, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut set = a.clone();
    for g in b.ones() {
        adjoin(group, &mut set, g);
    }
    set
}

/// Every subgroup, found by closing the cyclic subgroups under sums.
pub fn subgroups_in<G: FiniteGroup + ?Sized>(group: &G, limit: usize) -> Result<Vec<FixedBitSet>, ModuleError> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();
    for g in 0..group.order() {
        let c = span_in(group, [g]);
        if seen.insert(c) {
            cyclic_gens.push(g);
        }
    }
    let mut all: Vec<FixedBitSet> = cyclic_gens.iter().map(|&g| span_in(group, [g])).collect();
    let mut i = 0;
    while i < all.len() {
        for &g in &cyclic_gens {
            if all[i].contains(g) {
                continue;
            }
            let mut next = all[i].clone();
            adjoin(group, &mut next, g);
            if seen.insert(next.clone()) {
                all.push(next);
                if all.len() > limit {
                    return Err(ModuleError::BoundExceeded {
                        what: "submodule count",
                        size: all.len(),
                        bound: limit,
                    });
                }
            }
        }
        i += 1;
    }
    Ok(all)
}

/// `Z_{d_1} ⊕ ... ⊕ Z_{d_k}` over `Z/nZ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    ring: Ring,
    factors: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

impl FiniteModule {
    pub fn new(ring: Ring, factors: Vec<u32>) -> Result<Self, ModuleError> {
        Self::with_bound(ring, factors, DEFAULT_BOUND)
    }

    pub fn with_bound(ring: Ring, factors: Vec<u32>, bound: usize) -> Result<Self, ModuleError> {
        if factors.is_empty() {
            return Err(ModuleError::NoFactors);
        }
        let mut order: usize = 1;
        for &factor in &factors {
            if factor < 2 {
                return Err(ModuleError::FactorTooSmall { factor });
            }
            if !ring.modulus().is_multiple_of(factor) {
                return Err(ModuleError::FactorDoesNotDivide {
                    factor,
                    modulus: ring.modulus(),
                });
            }
            order = order.saturating_mul(factor as usize);
        }
        if order > bound {
            return Err(ModuleError::BoundExceeded {
                what: "module order",
                size: order,
                bound,
            });
        }
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        Ok(FiniteModule {
            ring,
            factors,
            strides,
            order,
        })
    }

    /// `Z_n` as a module over `Z/nZ`.
    pub fn cyclic(n: u32) -> Result<Self, ModuleError> {
        Self::new(Ring::new(n)?, vec![n])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn describe(&self) -> String {
        let body = self.factors.iter().map(|d| format!("Z_{d}")).join("⊕");
        format!("{body} over Z/{}", self.ring.modulus())
    }

    pub fn coords(&self, index: usize) -> Vec<u32> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &stride)| ((index / stride) % d as usize) as u32)
            .collect()
    }

    pub fn element(&self, coords: &[u32]) -> Result<usize, ModuleError> {
        if coords.len() != self.factors.len() {
            return Err(ModuleError::Arity {
                got: coords.len(),
                expected: self.factors.len(),
            });
        }
        Ok(coords
            .iter()
            .zip(&self.factors)
            .zip(&self.strides)
            .map(|((&c, &d), &stride)| (c % d) as usize * stride)
            .sum())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `k · a`.
    pub fn scale(&self, k: u32, a: usize) -> usize {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &stride)| {
                let c = ((a / stride) % d as usize) as u64;
                ((c * k as u64) % d as u64) as usize * stride
            })
            .sum()
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&c, &d)| d / gcd(c, d))
            .fold(1, lcm)
    }

    pub fn format_element(&self, a: usize) -> String {
        let c = self.coords(a);
        if c.len() == 1 {
            c[0].to_string()
        } else {
            format!("({})", c.iter().join(","))
        }
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::from_set(self, span_in(self, []))
    }

    pub fn whole(&self) -> Submodule {
        let mut set = FixedBitSet::with_capacity(self.order);
        set.insert_range(..);
        Submodule::from_set(self, set)
    }

    /// Least submodule containing `gens`.
    pub fn span(&self, gens: &[usize]) -> Result<Submodule, ModuleError> {
        if let Some(&index) = gens.iter().find(|&&g| g >= self.order) {
            return Err(ModuleError::ElementOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(Submodule::from_set(self, span_in(self, gens.iter().copied())))
    }

    /// All submodules sorted by (cardinality, member list).
    pub fn enumerate_submodules(&self) -> Result<Vec<Submodule>, ModuleError> {
        let mut subs: Vec<Submodule> = subgroups_in(self, SUBMODULE_LIMIT)?
            .into_iter()
            .map(|set| Submodule::from_set(self, set))
            .collect();
        subs.sort();
        Ok(subs)
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Submodule {
        Submodule::from_set(self, sum_in(self, &a.members, &b.members))
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Submodule {
        let mut set = a.members.clone();
        set.intersect_with(&b.members);
        Submodule::from_set(self, set)
    }

    /// `I N = { d x : x ∈ N }` for `I = (d)`.
    pub fn ideal_apply(&self, ideal: Ideal, n: &Submodule) -> Submodule {
        let mut set = FixedBitSet::with_capacity(self.order);
        for x in n.members.ones() {
            set.insert(self.scale(ideal.generator(), x));
        }
        Submodule::from_set(self, set)
    }

    /// `Ann(N) = (d)` for the least `d ≥ 1` with `d N = 0`.
    pub fn annihilator(&self, n: &Submodule) -> Ideal {
        let exponent = n.members.ones().map(|x| self.element_order(x)).fold(1, lcm);
        self.ring.ideal_of(exponent)
    }

    /// `(0 :_M I) = { m : I m = 0 }`.
    pub fn annihilated_by(&self, ideal: Ideal) -> Submodule {
        let mut set = FixedBitSet::with_capacity(self.order);
        for m in self.elements() {
            if self.scale(ideal.generator(), m) == 0 {
                set.insert(m);
            }
        }
        Submodule::from_set(self, set)
    }

    pub fn quotient<'a>(&'a self, kernel: &Submodule) -> QuotientModule<'a> {
        QuotientModule::new(self, kernel)
    }
}

impl FiniteGroup for FiniteModule {
    fn order(&self) -> usize {
        self.order
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &stride)| {
                let d = d as usize;
                ((a / stride) % d + (b / stride) % d) % d * stride
            })
            .sum()
    }
}

/// A submodule, identified by its member set.
#[derive(Clone)]
pub struct Submodule {
    members: FixedBitSet,
    generators: Vec<usize>,
    len: usize,
}

impl Submodule {
    fn from_set<G: FiniteGroup + ?Sized>(group: &G, members: FixedBitSet) -> Self {
        let mut generators = Vec::new();
        let mut spanned = span_in(group, []);
        for x in members.ones() {
            if !spanned.contains(x) {
                adjoin(group, &mut spanned, x);
                generators.push(x);
            }
        }
        let len = members.count_ones(..);
        Submodule {
            members,
            generators,
            len,
        }
    }

    /// Cardinality; never zero, since `0` is always a member.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.len == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    /// An irredundant generating list, picked greedily by element index.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

/// `M / K` as a coset structure with the induced addition.
#[derive(Debug, Clone)]
pub struct QuotientModule<'a> {
    module: &'a FiniteModule,
    coset_of: Vec<usize>,
    representatives: Vec<usize>,
}

impl<'a> QuotientModule<'a> {
    fn new(module: &'a FiniteModule, kernel: &Submodule) -> Self {
        let mut coset_of = vec![usize::MAX; module.order()];
        let mut representatives = Vec::new();
        for m in module.elements() {
            if coset_of[m] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(m);
            for k in kernel.members() {
                coset_of[module.add(m, k)] = c;
            }
        }
        QuotientModule {
            module,
            coset_of,
            representatives,
        }
    }

    pub fn project(&self, m: usize) -> usize {
        self.coset_of[m]
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }

    /// Image of a submodule of `M` as a set of cosets.
    pub fn image(&self, n: &Submodule) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        for m in n.members() {
            set.insert(self.coset_of[m]);
        }
        set
    }

    pub fn element_order(&self, coset: usize) -> usize {
        let mut k = 1;
        let mut x = coset;
        while x != self.zero() {
            x = self.add(x, coset);
            k += 1;
        }
        k
    }

    pub fn submodules(&self) -> Result<Vec<FixedBitSet>, ModuleError> {
        subgroups_in(self, SUBMODULE_LIMIT)
    }

    /// `N` is small in this quotient: `N + L = whole` forces `L = whole`.
    pub fn is_small(&self, n: &FixedBitSet) -> Result<bool, ModuleError> {
        let order = self.order();
        Ok(self.submodules()?.iter().all(|l| {
            let total = sum_in(self, n, l);
            total.count_ones(..) != order || l.count_ones(..) == order
        }))
    }
}

impl FiniteGroup for QuotientModule<'_> {
    fn order(&self) -> usize {
        self.representatives.len()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.coset_of[self.module.add(self.representatives[a], self.representatives[b])]
    }

    fn zero(&self) -> usize {
        self.coset_of[0]
    }
}

/// The submodule lattice of `M` with the action of the ideal poset of
/// `Z/nZ` by `I ⇀ N = I N`. Submodules are indexed in canonical order, so
/// index 0 is the zero submodule and the last index is `M`.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: FiniteModule,
    submodules: Vec<Submodule>,
    index: HashMap<FixedBitSet, usize>,
    ideals: Vec<Ideal>,
    action: PosetAction,
}

impl SubmoduleLattice {
    pub fn new(module: FiniteModule) -> Result<Self, ModuleError> {
        let submodules = module.enumerate_submodules()?;
        let index: HashMap<FixedBitSet, usize> = submodules
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), i))
            .collect();
        let pairs: Vec<(ElementId, ElementId)> = submodules
            .iter()
            .enumerate()
            .flat_map(|(i, a)| {
                submodules
                    .iter()
                    .enumerate()
                    .filter(move |(_, b)| a.is_subset(b))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        let lattice = FiniteLattice::new(submodules.len(), &pairs)?;
        let ideals = module.ring().ideals();
        let ideal_pairs: Vec<(usize, usize)> = ideals
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                ideals
                    .iter()
                    .enumerate()
                    .filter(move |&(_, &b)| b.contains(a))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        let poset = FinitePoset::new(ideals.len(), &ideal_pairs)?;
        let mut table = Vec::with_capacity(ideals.len() * submodules.len());
        for &ideal in &ideals {
            for n in &submodules {
                let image = module.ideal_apply(ideal, n);
                table.push(index[&image.members]);
            }
        }
        let action = PosetAction::new(lattice, poset, table)?;
        Ok(SubmoduleLattice {
            module,
            submodules,
            index,
            ideals,
            action,
        })
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.action.lattice()
    }

    pub fn action(&self) -> &PosetAction {
        &self.action
    }

    /// Number of submodules, at least one.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.submodules
    }

    pub fn submodule(&self, i: usize) -> &Submodule {
        &self.submodules[i]
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.submodules.len()
    }

    pub fn index_of(&self, n: &Submodule) -> Option<usize> {
        self.index.get(&n.members).copied()
    }

    pub fn zero(&self) -> usize {
        self.lattice().bottom()
    }

    pub fn whole(&self) -> usize {
        self.lattice().top()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal_index(&self, ideal: Ideal) -> usize {
        self.ideals
            .iter()
            .position(|&i| i == ideal)
            .expect("ideal of this ring")
    }

    /// Canonical name: `0`, `(d)` inside a cyclic module, generator list otherwise.
    pub fn name(&self, i: usize) -> String {
        let n = &self.submodules[i];
        if n.is_zero() {
            return "0".to_owned();
        }
        if let [d] = self.module.factors() {
            return format!("({})", *d as usize / n.len());
        }
        format!(
            "<{}>",
            n.generators().iter().map(|&g| self.module.format_element(g)).join(",")
        )
    }

    pub fn names(&self, items: &[usize]) -> String {
        format!("{{{}}}", items.iter().map(|&i| self.name(i)).join(","))
    }

    /// Looks up a submodule by its canonical name.
    pub fn find_by_name(&self, name: &str) -> Option<usize> {
        self.indices().find(|&i| self.name(i) == name)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice().leq(a, b)
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.lattice().join(a, b)
    }

    #[inline]
    pub fn intersect(&self, a: usize, b: usize) -> usize {
        self.lattice().meet(a, b)
    }

    pub fn sum_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        self.lattice().join_all(items)
    }

    /// `I N` for the ideal at position `ideal` in [`Self::ideals`].
    #[inline]
    pub fn ideal_apply(&self, ideal: usize, n: usize) -> usize {
        self.action.apply(ideal, n)
    }

    /// `I M`.
    #[inline]
    pub fn ideal_image(&self, ideal: usize) -> usize {
        self.action.apply_top(ideal)
    }

    pub fn annihilator(&self, n: usize) -> Ideal {
        self.module.annihilator(&self.submodules[n])
    }

    pub fn annihilated_by(&self, ideal: Ideal) -> usize {
        self.index_of(&self.module.annihilated_by(ideal))
            .expect("annihilated part is a submodule")
    }

    /// `N + L = M` forces `L = M`.
    pub fn is_small(&self, n: usize) -> bool {
        self.indices()
            .all(|l| self.sum(n, l) != self.whole() || l == self.whole())
    }

    /// `N/X` is small in `M/X` (requires `X ⊆ N`), decided on the interval
    /// above `X`.
    pub fn is_small_over(&self, n: usize, x: usize) -> bool {
        self.indices()
            .filter(|&l| self.leq(x, l))
            .all(|l| self.sum(n, l) != self.whole() || l == self.whole())
    }

    /// A complement `K` with `N ∩ K = 0` and `N + K = M`, if any.
    pub fn complement(&self, n: usize) -> Option<usize> {
        self.indices()
            .find(|&k| self.intersect(n, k) == self.zero() && self.sum(n, k) == self.whole())
    }

    pub fn is_direct_summand(&self, n: usize) -> bool {
        self.complement(n).is_some()
    }

    /// Nonzero, and every ideal acts on `N` as `N` or `0`.
    pub fn is_second(&self, n: usize) -> bool {
        let sub = &self.submodules[n];
        if sub.is_zero() {
            return false;
        }
        let zero = self.module.zero_submodule();
        self.ideals.iter().all(|&ideal| {
            let image = self.module.ideal_apply(ideal, sub);
            image == *sub || image == zero
        })
    }

    /// Submodules are subgroups, so simple means prime order.
    pub fn is_simple(&self, n: usize) -> bool {
        let len = self.submodules[n].len();
        len > 1 && self.indices().all(|k| !self.leq(k, n) || k == n || k == self.zero())
    }

    pub fn is_semisimple(&self) -> bool {
        self.indices().all(|n| self.is_direct_summand(n))
    }

    /// Every submodule is `I M` for some ideal.
    pub fn is_multiplication(&self) -> bool {
        self.action.is_multiplication()
    }

    /// Every `K` equals `(0 :_M Ann(K))`.
    pub fn is_comultiplication(&self) -> bool {
        self.indices().all(|k| self.annihilated_by(self.annihilator(k)) == k)
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// `(L, K, N)` with `L ∩ (K + N) ≠ (L ∩ K) + (L ∩ N)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        for l in self.indices() {
            for k in self.indices() {
                for n in self.indices() {
                    let lhs = self.intersect(l, self.sum(k, n));
                    let rhs = self.sum(self.intersect(l, k), self.intersect(l, n));
                    if lhs != rhs {
                        return Some((l, k, n));
                    }
                }
            }
        }
        None
    }

    /// `L ∩ (I M + N) = (L ∩ I M) + (L ∩ N)` for all `L`, `N`, `I`.
    pub fn is_pseudo_distributive(&self) -> bool {
        let images: Vec<usize> = (0..self.ideals.len()).map(|i| self.ideal_image(i)).unique().collect();
        images.iter().all(|&im| {
            self.indices().all(|l| {
                self.indices().all(|n| {
                    self.intersect(l, self.sum(im, n)) == self.sum(self.intersect(l, im), self.intersect(l, n))
                })
            })
        })
    }

    /// Hollow as a lattice element: nonzero and not a sum of two proper parts.
    pub fn is_hollow(&self, n: usize) -> bool {
        n != self.zero()
            && self
                .indices()
                .all(|a| self.indices().all(|b| self.sum(a, b) != n || a == n || b == n))
    }

    pub fn hollow_submodules(&self) -> Vec<usize> {
        self.indices().filter(|&n| self.is_hollow(n)).collect()
    }

    /// Hollow submodules not properly contained in another hollow submodule.
    pub fn maximal_hollow_submodules(&self) -> Vec<usize> {
        let hollow = self.hollow_submodules();
        hollow
            .iter()
            .copied()
            .filter(|&n| !hollow.iter().any(|&k| k != n && self.leq(n, k)))
            .collect()
    }

    /// Every `N` contains a direct summand `X` of `M` with `N/X` small in `M/X`.
    pub fn is_lifting(&self) -> bool {
        self.lifting_witness().is_none()
    }

    /// A submodule for which no suitable summand exists.
    pub fn lifting_witness(&self) -> Option<usize> {
        let summands: Vec<usize> = self.indices().filter(|&x| self.is_direct_summand(x)).collect();
        self.indices()
            .find(|&n| !summands.iter().any(|&x| self.leq(x, n) && self.is_small_over(n, x)))
    }

    /// Lifting, and every maximal hollow submodule is second.
    pub fn is_s_lifting(&self) -> bool {
        self.is_lifting() && self.maximal_hollow_submodules().into_iter().all(|n| self.is_second(n))
    }

    pub fn second_submodules(&self) -> Vec<usize> {
        self.indices().filter(|&n| self.is_second(n)).collect()
    }

    /// Second submodules with no second submodule properly above them.
    pub fn maximal_second_submodules(&self) -> Vec<usize> {
        let seconds = self.second_submodules();
        seconds
            .iter()
            .copied()
            .filter(|&n| !seconds.iter().any(|&k| k != n && self.leq(n, k)))
            .collect()
    }

    /// Every way to write `M` as an irredundant sum of second submodules with
    /// pairwise distinct annihilators. Empty when `M` is not second
    /// representable.
    pub fn minimal_second_representations(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<(Ideal, Vec<usize>)> = Vec::new();
        for n in self.second_submodules() {
            let ann = self.annihilator(n);
            match groups.iter_mut().find(|(a, _)| *a == ann) {
                Some((_, members)) => members.push(n),
                None => groups.push((ann, vec![n])),
            }
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.second_search(&groups, 0, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn second_search(
        &self,
        groups: &[(Ideal, Vec<usize>)],
        depth: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == groups.len() {
            if !chosen.is_empty()
                && self.sum_all(chosen.iter().copied()) == self.whole()
                && self.redundant_summand(chosen).is_none()
            {
                let mut rep = chosen.clone();
                rep.sort();
                out.push(rep);
            }
            return;
        }
        self.second_search(groups, depth + 1, chosen, out);
        for &n in &groups[depth].1 {
            chosen.push(n);
            self.second_search(groups, depth + 1, chosen, out);
            chosen.pop();
        }
    }

    /// Position of a summand contained in the sum of the others.
    pub fn redundant_summand(&self, summands: &[usize]) -> Option<usize> {
        (0..summands.len()).find(|&j| {
            let rest = self.sum_all(summands.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &n)| n));
            self.leq(summands[j], rest)
        })
    }

    /// Annihilators of a minimal second representation, sorted; `None` when
    /// `M` is not second representable.
    pub fn attached_primes(&self) -> Option<Vec<Ideal>> {
        let reps = self.minimal_second_representations();
        let first = reps.first()?;
        Some(first.iter().map(|&n| self.annihilator(n)).sorted().collect())
    }
}

/// Ideals of `att` none of which properly contains another.
pub fn minimal_ideals(att: &[Ideal]) -> Vec<Ideal> {
    att.iter()
        .copied()
        .filter(|&i| !att.iter().any(|&j| j != i && i.contains(j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> SubmoduleLattice {
        SubmoduleLattice::new(FiniteModule::cyclic(n).unwrap()).unwrap()
    }

    fn klein() -> SubmoduleLattice {
        SubmoduleLattice::new(FiniteModule::new(Ring::new(2).unwrap(), vec![2, 2]).unwrap()).unwrap()
    }

    fn named(sl: &SubmoduleLattice, name: &str) -> usize {
        sl.find_by_name(name).unwrap_or_else(|| panic!("no submodule {name}"))
    }

    #[test]
    fn construction_errors() {
        let r12 = Ring::new(12).unwrap();
        assert_eq!(Ring::new(1), Err(ModuleError::InvalidModulus(1)));
        assert!(matches!(
            FiniteModule::new(r12, vec![5]),
            Err(ModuleError::FactorDoesNotDivide { factor: 5, modulus: 12 })
        ));
        assert!(matches!(FiniteModule::new(r12, vec![]), Err(ModuleError::NoFactors)));
        assert!(matches!(
            FiniteModule::with_bound(r12, vec![12, 12], 100),
            Err(ModuleError::BoundExceeded { size: 144, .. })
        ));
        assert!(r12.ideal(5).is_err());
    }

    #[test]
    fn spans() {
        let m = FiniteModule::cyclic(12).unwrap();
        let four = m.span(&[4]).unwrap();
        assert_eq!(four.members().collect::<Vec<_>>(), vec![0, 4, 8]);
        assert!(m.span(&[]).unwrap().is_zero());
        let k = FiniteModule::new(Ring::new(2).unwrap(), vec![2, 2]).unwrap();
        let gens = [k.element(&[1, 0]).unwrap(), k.element(&[0, 1]).unwrap()];
        assert_eq!(k.span(&gens).unwrap(), k.whole());
        assert!(m.span(&[12]).is_err());
    }

    #[test]
    fn submodule_counts() {
        assert_eq!(z(12).len(), 6);
        assert_eq!(klein().len(), 5);
        assert_eq!(z(30).len(), 8);
    }

    #[test]
    fn ideal_products() {
        let m = FiniteModule::cyclic(12).unwrap();
        let r = m.ring();
        let two_m = m.ideal_apply(r.ideal(2).unwrap(), &m.whole());
        assert_eq!(two_m.members().collect::<Vec<_>>(), vec![0, 2, 4, 6, 8, 10]);
        let four = m.span(&[4]).unwrap();
        assert!(m.ideal_apply(r.ideal(3).unwrap(), &four).is_zero());
        assert_eq!(m.ideal_apply(r.ideal(1).unwrap(), &four), four);
    }

    #[test]
    fn sums_intersections_annihilators() {
        let sl = z(12);
        let (four, six, two) = (named(&sl, "(4)"), named(&sl, "(6)"), named(&sl, "(2)"));
        assert_eq!(sl.sum(four, six), two);
        assert_eq!(sl.intersect(four, six), sl.zero());
        let m = sl.module();
        assert_eq!(m.sum(sl.submodule(four), sl.submodule(six)), *sl.submodule(two));
        assert_eq!(sl.annihilator(four).to_string(), "(3)");
        assert_eq!(sl.annihilator(sl.whole()).to_string(), "(0)");
        assert_eq!(sl.annihilator(sl.whole()).generator(), 12);
        assert_eq!(sl.annihilator(sl.zero()).to_string(), "(1)");
    }

    #[test]
    fn quotients() {
        let m = FiniteModule::cyclic(12).unwrap();
        let four = m.span(&[4]).unwrap();
        let q = m.quotient(&four);
        assert_eq!(q.order(), 4);
        assert!((0..4).any(|c| q.element_order(c) == 4), "Z_12/(4) is cyclic of order 4");
        assert_eq!(m.quotient(&m.whole()).order(), 1);
        assert_eq!(m.quotient(&m.zero_submodule()).order(), 12);
    }

    #[test]
    fn smallness() {
        let z4 = z(4);
        assert!(z4.is_small(z4.zero()));
        assert!(z4.is_small(named(&z4, "(2)")));
        let z12 = z(12);
        assert!(!z12.is_small(named(&z12, "(3)")));
        assert!(z12.is_small(named(&z12, "(6)")));
    }

    #[test]
    fn class_predicates() {
        let z30 = z(30);
        assert!(z30.is_multiplication());
        assert!(z30.is_comultiplication());
        assert!(z30.is_semisimple());

        let k = klein();
        assert!(k.is_pseudo_distributive());
        assert!(!k.is_distributive());

        let z12 = z(12);
        assert!(!z12.is_semisimple());
        assert!(!z12.is_s_lifting());
        assert!(z12.is_lifting());
        assert_eq!(z12.names(&z12.maximal_hollow_submodules()), "{(4),(3)}");
    }

    #[test]
    fn second_submodules_and_representations() {
        let z12 = z(12);
        assert_eq!(z12.names(&z12.second_submodules()), "{(6),(4)}");
        assert!(z12.minimal_second_representations().is_empty());
        assert_eq!(z12.attached_primes(), None);

        let z30 = z(30);
        let reps = z30.minimal_second_representations();
        assert_eq!(reps.len(), 1);
        assert_eq!(z30.names(&reps[0]), "{(15),(10),(6)}");
        let att: Vec<String> = z30.attached_primes().unwrap().iter().map(|i| i.to_string()).collect();
        assert_eq!(att, ["(2)", "(3)", "(5)"]);

        let z5 = z(5);
        assert_eq!(z5.minimal_second_representations(), vec![vec![z5.whole()]]);
    }

    #[test]
    fn bridged_lattices() {
        let z7 = z(7);
        assert_eq!(z7.lattice(), &FiniteLattice::chain(2));
        assert_eq!(z7.action().poset().size(), 2);
        let k = klein();
        assert_eq!(k.lattice().size(), 5);
        assert_eq!(k.lattice().covers().len(), 6);
    }

    #[test]
    fn hollow_ideals() {
        let r = Ring::new(12).unwrap();
        assert!(r.ideal(4).unwrap().is_hollow());
        assert!(!r.ideal(2).unwrap().is_hollow());
        assert!(!r.ideal(12).unwrap().is_hollow());
        assert!(Ring::new(7).unwrap().ideal(1).unwrap().is_hollow());
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(180), vec![(2, 2), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
