//! Finite posets, finite bounded lattices and monotone deflationary poset
//! actions, together with the dual, star, interval and quotient
//! constructions.
//!
//! Elements are plain indices (`ElementId`) into one lattice instance. The
//! order relation is stored as a dense boolean matrix; meets and joins are
//! tabulated for lattices of up to [`TABLE_LIMIT`] elements and computed on
//! demand above that.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Index of an element inside one lattice (or poset) instance.
pub type ElementId = usize;

/// Lattices up to this size get precomputed meet/join tables.
pub const TABLE_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Meet => f.write_str("greatest lower bound"),
            Bound::Join => f.write_str("least upper bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("relation is not a partial order: {a} <= {b} <= {a} with {a} != {b}")]
    NotAPartialOrder { a: ElementId, b: ElementId },
    #[error("elements {x} and {y} have no unique {bound}")]
    MeetOrJoinMissing { x: ElementId, y: ElementId, bound: Bound },
    #[error("order has no least or no greatest element")]
    Unbounded,
    #[error("index {index} out of range for a structure of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("action table has {got} entries, expected {expected}")]
    TableShape { got: usize, expected: usize },
    #[error("action violates axiom A{axiom}: {detail}")]
    AxiomViolation { axiom: u8, detail: String },
    #[error("quotient by {base} is not a lattice: {detail}")]
    NotALattice { base: ElementId, detail: String },
}

/// A finite partially ordered set on `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("size", &self.size)
            .field("covers", &self.covers())
            .finish()
    }
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `pairs` and checks
    /// antisymmetry.
    pub fn new(size: usize, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(a, b) in pairs {
            for index in [a, b] {
                if index >= size {
                    return Err(LatticeError::OutOfRange { index, size });
                }
            }
            leq[a * size + b] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if !leq[i * size + k] {
                    continue;
                }
                for j in 0..size {
                    if leq[k * size + j] {
                        leq[i * size + j] = true;
                    }
                }
            }
        }
        Self::from_relation(size, leq)
    }

    /// Wraps an already closed relation, checking that it is a partial order.
    pub fn from_relation(size: usize, leq: Vec<bool>) -> Result<Self, LatticeError> {
        if leq.len() != size * size {
            return Err(LatticeError::TableShape {
                got: leq.len(),
                expected: size * size,
            });
        }
        for a in 0..size {
            if !leq[a * size + a] {
                return Err(LatticeError::NotAPartialOrder { a, b: a });
            }
            for b in a + 1..size {
                if leq[a * size + b] && leq[b * size + a] {
                    return Err(LatticeError::NotAPartialOrder { a, b });
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if !leq[a * size + b] {
                    continue;
                }
                for c in 0..size {
                    if leq[b * size + c] && !leq[a * size + c] {
                        return Err(LatticeError::NotAPartialOrder { a, b: c });
                    }
                }
            }
        }
        Ok(FinitePoset { size, leq })
    }

    pub fn antichain(size: usize) -> Self {
        Self::new(size, &[]).expect("discrete order is a partial order")
    }

    /// The chain `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Self {
        let pairs: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        Self::new(size, &pairs).expect("chain is a partial order")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// The same set with the order reversed.
    pub fn dual(&self) -> Self {
        let n = self.size;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(b, a);
            }
        }
        FinitePoset { size: n, leq }
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements listed so that every element comes after everything below it.
    /// Ties are broken by index, so the result is deterministic.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size;
        let mut below: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| self.lt(a, b)).count()).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&b| below[b] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(next) = ready.pop_first() {
            out.push(next);
            for (b, count) in below.iter_mut().enumerate() {
                if self.lt(next, b) {
                    *count -= 1;
                    if *count == 0 {
                        ready.insert(b);
                    }
                }
            }
        }
        out
    }

    pub fn down_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&y| self.leq(y, x))
    }

    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&y| self.leq(x, y))
    }
}

/// A finite bounded lattice.
#[derive(Clone)]
pub struct FiniteLattice {
    order: FinitePoset,
    bottom: ElementId,
    top: ElementId,
    /// Linear extension, used by on-demand meet/join.
    extension: Vec<ElementId>,
    meet: Option<Vec<ElementId>>,
    join: Option<Vec<ElementId>>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for FiniteLattice {}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("size", &self.size())
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .field("covers", &self.order.covers())
            .finish()
    }
}

impl FiniteLattice {
    /// Builds and validates a lattice from generating order pairs
    /// (reflexive-transitive closure is applied).
    pub fn new(size: usize, leq_pairs: &[(ElementId, ElementId)]) -> Result<Self, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Unbounded);
        }
        Self::from_poset(FinitePoset::new(size, leq_pairs)?)
    }

    pub fn from_poset(order: FinitePoset) -> Result<Self, LatticeError> {
        let n = order.size();
        if n == 0 {
            return Err(LatticeError::Unbounded);
        }
        let extension = order.linear_extension();
        let mut lattice = FiniteLattice {
            bottom: 0,
            top: 0,
            extension,
            order,
            meet: None,
            join: None,
        };
        if n <= TABLE_LIMIT {
            let mut meet = vec![0; n * n];
            let mut join = vec![0; n * n];
            for x in 0..n {
                for y in x..n {
                    let m = lattice
                        .search_bound(x, y, Bound::Meet)
                        .ok_or(LatticeError::MeetOrJoinMissing {
                            x,
                            y,
                            bound: Bound::Meet,
                        })?;
                    let j = lattice
                        .search_bound(x, y, Bound::Join)
                        .ok_or(LatticeError::MeetOrJoinMissing {
                            x,
                            y,
                            bound: Bound::Join,
                        })?;
                    meet[x * n + y] = m;
                    meet[y * n + x] = m;
                    join[x * n + y] = j;
                    join[y * n + x] = j;
                }
            }
            lattice.meet = Some(meet);
            lattice.join = Some(join);
        } else {
            for x in 0..n {
                for y in x + 1..n {
                    for bound in [Bound::Meet, Bound::Join] {
                        if lattice.search_bound(x, y, bound).is_none() {
                            return Err(LatticeError::MeetOrJoinMissing { x, y, bound });
                        }
                    }
                }
            }
        }
        let lattice_order = &lattice.order;
        let bottom = (0..n).find(|&b| (0..n).all(|x| lattice_order.leq(b, x)));
        let top = (0..n).find(|&t| (0..n).all(|x| lattice_order.leq(x, t)));
        match (bottom, top) {
            (Some(b), Some(t)) => {
                lattice.bottom = b;
                lattice.top = t;
                Ok(lattice)
            }
            _ => Err(LatticeError::Unbounded),
        }
    }

    /// Finds the unique greatest common lower bound (or least common upper
    /// bound) by scanning a linear extension, then confirms uniqueness.
    fn search_bound(&self, x: ElementId, y: ElementId, bound: Bound) -> Option<ElementId> {
        let ord = &self.order;
        let candidate = match bound {
            Bound::Meet => self
                .extension
                .iter()
                .rev()
                .copied()
                .find(|&z| ord.leq(z, x) && ord.leq(z, y))?,
            Bound::Join => self
                .extension
                .iter()
                .copied()
                .find(|&z| ord.leq(x, z) && ord.leq(y, z))?,
        };
        let dominates_all = (0..ord.size()).all(|z| match bound {
            Bound::Meet => !(ord.leq(z, x) && ord.leq(z, y)) || ord.leq(z, candidate),
            Bound::Join => !(ord.leq(x, z) && ord.leq(y, z)) || ord.leq(candidate, z),
        });
        dominates_all.then_some(candidate)
    }

    /// The one-element lattice.
    pub fn trivial() -> Self {
        Self::new(1, &[]).expect("one point is a lattice")
    }

    /// The chain `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Self {
        Self::from_poset(FinitePoset::chain(size)).expect("chains are lattices")
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size()
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        match &self.meet {
            Some(table) => table[x * self.size() + y],
            None => self
                .search_bound(x, y, Bound::Meet)
                .expect("validated lattice has all meets"),
        }
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        match &self.join {
            Some(table) => table[x * self.size() + y],
            None => self
                .search_bound(x, y, Bound::Join)
                .expect("validated lattice has all joins"),
        }
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = ElementId>) -> ElementId {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = ElementId>) -> ElementId {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The dual lattice: same elements, reversed order, swapped bounds.
    pub fn dual(&self) -> Self {
        let order = self.order.dual();
        let extension = self.extension.iter().rev().copied().collect();
        FiniteLattice {
            order,
            bottom: self.top,
            top: self.bottom,
            extension,
            meet: self.join.clone(),
            join: self.meet.clone(),
        }
    }

    /// Covering pairs of the order (the Hasse diagram edges).
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        self.order.covers()
    }

    pub fn down_set(&self, x: ElementId) -> Vec<ElementId> {
        self.order.down_set(x).collect()
    }

    pub fn up_set(&self, x: ElementId) -> Vec<ElementId> {
        self.order.up_set(x).collect()
    }
}

/// An action `s ⇀ x` of a finite poset on a finite lattice: monotone in
/// both arguments and deflationary (`s ⇀ x ≤ x`).
#[derive(Clone, PartialEq, Eq)]
pub struct PosetAction {
    lattice: FiniteLattice,
    poset: FinitePoset,
    table: Vec<ElementId>,
}

impl fmt::Debug for PosetAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PosetAction")
            .field("lattice", &self.lattice)
            .field("poset", &self.poset)
            .field("table", &self.table)
            .finish()
    }
}

impl PosetAction {
    /// `table[s * |L| + x]` is `s ⇀ x`. Validates the three action axioms.
    pub fn new(lattice: FiniteLattice, poset: FinitePoset, table: Vec<ElementId>) -> Result<Self, LatticeError> {
        let expected = lattice.size() * poset.size();
        if table.len() != expected {
            return Err(LatticeError::TableShape {
                got: table.len(),
                expected,
            });
        }
        if let Some(&index) = table.iter().find(|&&y| y >= lattice.size()) {
            return Err(LatticeError::OutOfRange {
                index,
                size: lattice.size(),
            });
        }
        let action = PosetAction { lattice, poset, table };
        action.validate()?;
        Ok(action)
    }

    pub fn from_fn(
        lattice: FiniteLattice,
        poset: FinitePoset,
        f: impl Fn(usize, ElementId) -> ElementId,
    ) -> Result<Self, LatticeError> {
        let table = (0..poset.size())
            .flat_map(|s| lattice.elements().map(move |x| (s, x)))
            .map(|(s, x)| f(s, x))
            .collect();
        Self::new(lattice, poset, table)
    }

    /// `s ⇀ x = x` for every `s`.
    pub fn identity(lattice: FiniteLattice, poset: FinitePoset) -> Self {
        Self::from_fn(lattice, poset, |_, x| x).expect("identity action satisfies the axioms")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn acting(&self) -> std::ops::Range<usize> {
        0..self.poset.size()
    }

    #[inline]
    pub fn apply(&self, s: usize, x: ElementId) -> ElementId {
        self.table[s * self.lattice.size() + x]
    }

    /// `s ⇀ 1`.
    #[inline]
    pub fn apply_top(&self, s: usize) -> ElementId {
        self.apply(s, self.lattice.top())
    }

    /// Checks A1 (monotone in `s`), A2 (monotone in `x`) and A3 (`s ⇀ x ≤ x`).
    pub fn validate(&self) -> Result<(), LatticeError> {
        let l = &self.lattice;
        for s in self.acting() {
            for x in l.elements() {
                let sx = self.apply(s, x);
                if !l.leq(sx, x) {
                    return Err(LatticeError::AxiomViolation {
                        axiom: 3,
                        detail: format!("{s} ⇀ {x} = {sx} is not below {x}"),
                    });
                }
            }
        }
        for s1 in self.acting() {
            for s2 in self.acting() {
                if s1 == s2 || !self.poset.leq(s1, s2) {
                    continue;
                }
                for x in l.elements() {
                    if !l.leq(self.apply(s1, x), self.apply(s2, x)) {
                        return Err(LatticeError::AxiomViolation {
                            axiom: 1,
                            detail: format!("{s1} <= {s2} but {s1} ⇀ {x} is not below {s2} ⇀ {x}"),
                        });
                    }
                }
            }
        }
        for s in self.acting() {
            for x in l.elements() {
                for y in l.elements() {
                    if x != y && l.leq(x, y) && !l.leq(self.apply(s, x), self.apply(s, y)) {
                        return Err(LatticeError::AxiomViolation {
                            axiom: 2,
                            detail: format!("{x} <= {y} but {s} ⇀ {x} is not below {s} ⇀ {y}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The action of the dual poset on the dual lattice,
    /// `s ⇀⁰ x = (s ⇀ 1) ∨ x`.
    pub fn dual_action(&self) -> Result<PosetAction, LatticeError> {
        let l = &self.lattice;
        let table = self
            .acting()
            .flat_map(|s| l.elements().map(move |x| l.join(self.apply_top(s), x)))
            .collect();
        PosetAction::new(l.dual(), self.poset.dual(), table)
    }

    /// `s ⇀* x = (s ⇀ 1) ∧ x` on the same lattice.
    pub fn star_action(&self) -> PosetAction {
        let l = &self.lattice;
        let table = self
            .acting()
            .flat_map(|s| l.elements().map(move |x| l.meet(self.apply_top(s), x)))
            .collect();
        PosetAction::new(l.clone(), self.poset.clone(), table)
            .expect("star action of a valid action satisfies the axioms")
    }

    /// Every element is `s ⇀ 1` for some `s`.
    pub fn is_multiplication(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.lattice.size());
        for s in self.acting() {
            hit.insert(self.apply_top(s));
        }
        hit.count_ones(..) == self.lattice.size()
    }

    /// `s ⇀ (y ∨ z) = (s ⇀ y) ∨ (s ⇀ z)` for all `s, y, z`.
    pub fn is_join_distributive(&self) -> bool {
        self.join_distributivity_witness().is_none()
    }

    /// A triple violating join-distributivity of the action, if any.
    pub fn join_distributivity_witness(&self) -> Option<(usize, ElementId, ElementId)> {
        let l = &self.lattice;
        for s in self.acting() {
            for y in l.elements() {
                for z in y + 1..l.size() {
                    if self.apply(s, l.join(y, z)) != l.join(self.apply(s, y), self.apply(s, z)) {
                        return Some((s, y, z));
                    }
                }
            }
        }
        None
    }

    /// The interval `[0, x]` with the restricted action.
    pub fn lower_interval(&self, x: ElementId) -> Interval {
        let l = &self.lattice;
        let elements: Vec<ElementId> = l.down_set(x);
        let mut position = vec![usize::MAX; l.size()];
        for (i, &y) in elements.iter().enumerate() {
            position[y] = i;
        }
        let pairs: Vec<_> = elements
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                elements
                    .iter()
                    .enumerate()
                    .filter(move |&(_, &b)| l.leq(a, b))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        let sub = FiniteLattice::new(elements.len(), &pairs).expect("a lower interval of a lattice is a lattice");
        let table = self
            .acting()
            .flat_map(|s| elements.iter().map(move |&y| (s, y)))
            .map(|(s, y)| position[self.apply(s, y)])
            .collect();
        let action = PosetAction::new(sub, self.poset.clone(), table)
            .expect("restriction of an action to a lower interval is an action");
        Interval { action, elements }
    }

    /// The quotient lattice `L/x` with the induced action
    /// `s ⇀ y/x = ((s ⇀ y) ∨ x)/x`.
    pub fn quotient(&self, x: ElementId) -> Result<Quotient, LatticeError> {
        Quotient::build(self, x)
    }
}

/// A lower interval `[0, x]` re-indexed from zero.
#[derive(Debug, Clone)]
pub struct Interval {
    pub action: PosetAction,
    /// `elements[i]` is the original id of interval element `i`.
    pub elements: Vec<ElementId>,
}

impl Interval {
    pub fn lattice(&self) -> &FiniteLattice {
        self.action.lattice()
    }

    pub fn position(&self, original: ElementId) -> Option<ElementId> {
        self.elements.iter().position(|&y| y == original)
    }
}

/// `L/x`: classes of `{y : x ≤ y}` under the quotient equivalence.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub action: PosetAction,
    pub base: ElementId,
    /// Members of each class, ascending; the first member is the representative.
    pub classes: Vec<Vec<ElementId>>,
    /// Class of each element above the base, `None` for the rest.
    pub class_of: Vec<Option<usize>>,
}

impl Quotient {
    fn build(action: &PosetAction, x: ElementId) -> Result<Self, LatticeError> {
        let l = action.lattice();
        let n = l.size();
        let above: Vec<ElementId> = l.up_set(x);
        // shadow[y] = { y' ∨ x : y' ≤ y }; the quotient relation compares these
        // sets in both directions.
        let shadow: Vec<FixedBitSet> = (0..n)
            .map(|y| {
                let mut set = FixedBitSet::with_capacity(n);
                if l.leq(x, y) {
                    for y_low in l.order().down_set(y) {
                        set.insert(l.join(y_low, x));
                    }
                }
                set
            })
            .collect();
        let below_q = |y: ElementId, z: ElementId| shadow[y].is_subset(&shadow[z]);
        let related = |y: ElementId, z: ElementId| below_q(y, z) && below_q(z, y);

        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        let mut class_of = vec![None; n];
        for &y in &above {
            match classes.iter().position(|members| related(members[0], y)) {
                Some(c) => {
                    classes[c].push(y);
                    class_of[y] = Some(c);
                }
                None => {
                    class_of[y] = Some(classes.len());
                    classes.push(vec![y]);
                }
            }
        }
        let k = classes.len();
        let mut leq = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                leq[a * k + b] = below_q(classes[a][0], classes[b][0]);
            }
        }
        let not_lattice = |detail: String| LatticeError::NotALattice { base: x, detail };
        let order = FinitePoset::from_relation(k, leq).map_err(|e| not_lattice(e.to_string()))?;
        let quotient = FiniteLattice::from_poset(order).map_err(|e| not_lattice(e.to_string()))?;

        // Meets and joins must agree with (y ∧ z)/x and (y ∨ z)/x for every
        // choice of representatives.
        let class = |y: ElementId| class_of[y].expect("element above the base");
        for &y in &above {
            for &z in &above {
                let (cy, cz) = (class(y), class(z));
                if quotient.meet(cy, cz) != class(l.meet(y, z)) {
                    return Err(not_lattice(format!("meet of {y}/{x} and {z}/{x} is not well defined")));
                }
                if quotient.join(cy, cz) != class(l.join(y, z)) {
                    return Err(not_lattice(format!("join of {y}/{x} and {z}/{x} is not well defined")));
                }
            }
        }

        let mut table = Vec::with_capacity(action.poset().size() * k);
        for s in action.acting() {
            for members in &classes {
                let image = class(l.join(action.apply(s, members[0]), x));
                if let Some(&y) = members.iter().find(|&&y| class(l.join(action.apply(s, y), x)) != image) {
                    return Err(not_lattice(format!(
                        "induced action of {s} differs on {}/{x} and {y}/{x}",
                        members[0]
                    )));
                }
                table.push(image);
            }
        }
        let action = PosetAction::new(quotient, action.poset().clone(), table)?;
        Ok(Quotient {
            action,
            base: x,
            classes,
            class_of,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.action.lattice()
    }

    pub fn representative(&self, class: usize) -> ElementId {
        self.classes[class][0]
    }

    /// Class of `y ∨ x`, the canonical projection `L → L/x`.
    pub fn project(&self, lattice: &FiniteLattice, y: ElementId) -> usize {
        self.class_of[lattice.join(y, self.base)].expect("y ∨ x lies above x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FiniteLattice {
        // 0 < a=1, b=2 < 3
        FiniteLattice::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn two_chain() {
        let l = FiniteLattice::new(2, &[(0, 1)]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
    }

    #[test]
    fn diamond_meets_and_joins() {
        let l = diamond();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        for x in l.elements() {
            assert_eq!(l.meet(x, l.top()), x);
            assert_eq!(l.join(x, x), x);
        }
    }

    #[test]
    fn two_minimal_upper_bounds_is_rejected() {
        // a=0, b=1 both below c=2 and d=3
        let err = FiniteLattice::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, LatticeError::MeetOrJoinMissing { .. }), "{err:?}");
    }

    #[test]
    fn cycle_is_not_a_partial_order() {
        let err = FiniteLattice::new(3, &[(0, 1), (1, 2), (2, 1)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPartialOrder { .. }));
    }

    #[test]
    fn empty_is_unbounded() {
        assert_eq!(FiniteLattice::new(0, &[]).unwrap_err(), LatticeError::Unbounded);
    }

    #[test]
    fn out_of_range_pair() {
        assert!(matches!(
            FiniteLattice::new(2, &[(0, 5)]),
            Err(LatticeError::OutOfRange { index: 5, size: 2 })
        ));
    }

    #[test]
    fn dual_swaps_bounds_and_is_an_involution() {
        let chain = FiniteLattice::chain(2);
        let d = chain.dual();
        assert_eq!(d.bottom(), 1);
        assert_eq!(d.top(), 0);
        assert!(d.leq(1, 0));
        assert_eq!(d.dual(), chain);

        let dia = diamond().dual();
        assert_eq!(dia.bottom(), 3);
        assert_eq!(dia.top(), 0);
        assert_eq!(dia.meet(1, 2), 3);
        assert_eq!(dia.join(1, 2), 0);
    }

    #[test]
    fn on_demand_bounds_match_tables() {
        let l = diamond();
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(l.search_bound(x, y, Bound::Meet), Some(l.meet(x, y)));
                assert_eq!(l.search_bound(x, y, Bound::Join), Some(l.join(x, y)));
            }
        }
    }

    #[test]
    fn identity_action_dual_on_two_chain() {
        let a = PosetAction::identity(FiniteLattice::chain(2), FinitePoset::antichain(1));
        let d = a.dual_action().unwrap();
        // s ⇀⁰ x = 1 ∨ x = 1, the bottom of the dual lattice
        assert_eq!(d.apply(0, 0), 1);
        assert_eq!(d.apply(0, 1), 1);
        assert_eq!(d.lattice().bottom(), 1);
    }

    #[test]
    fn dual_action_absorbing_cases() {
        let l = diamond();
        let s = FinitePoset::chain(2);
        // s=0 sends 1 to 0, s=1 is the identity
        let a = PosetAction::from_fn(l.clone(), s, |s, x| if s == 0 { 0 } else { x }).unwrap();
        let d = a.dual_action().unwrap();
        for x in l.elements() {
            assert_eq!(d.apply(0, x), x, "s ⇀ 1 = 0 gives the identity");
            assert_eq!(d.apply(1, x), 3);
        }
    }

    #[test]
    fn star_action_basics() {
        let l = diamond();
        let a = PosetAction::from_fn(l.clone(), FinitePoset::antichain(1), |_, x| {
            if l.leq(x, 1) {
                x
            } else if x == 3 {
                1
            } else {
                0
            }
        })
        .unwrap();
        let star = a.star_action();
        assert_eq!(star.apply(0, l.top()), a.apply_top(0));
        assert_eq!(star.apply(0, l.bottom()), l.bottom());
        let twice = a.dual_action().unwrap().dual_action().unwrap();
        assert_eq!(twice.table(), star.table());
        assert_eq!(twice.lattice(), star.lattice());
    }

    #[test]
    fn axiom_violations_are_reported() {
        let l = FiniteLattice::chain(2);
        let err = PosetAction::new(l.clone(), FinitePoset::antichain(1), vec![1, 1]).unwrap_err();
        assert!(matches!(err, LatticeError::AxiomViolation { axiom: 3, .. }));
        // s=0 <= s=1 but 0 ⇀ 1 = 1 > 0 = 1 ⇀ 1
        let err = PosetAction::new(l, FinitePoset::chain(2), vec![0, 1, 0, 0]).unwrap_err();
        assert!(matches!(err, LatticeError::AxiomViolation { axiom: 1, .. }));
    }

    #[test]
    fn lower_intervals() {
        let l = diamond();
        let a = PosetAction::identity(l.clone(), FinitePoset::antichain(1));
        let whole = a.lower_interval(l.top());
        assert_eq!(whole.lattice(), &l);
        assert_eq!(whole.lattice().size(), 1 + 1 + 1 + 1);
        assert_eq!(a.lower_interval(l.bottom()).lattice().size(), 1);
        let side = a.lower_interval(1);
        assert_eq!(side.elements, vec![0, 1]);
        assert_eq!(side.lattice(), &FiniteLattice::chain(2));
    }

    #[test]
    fn quotient_of_three_chain_by_middle() {
        let l = FiniteLattice::chain(3);
        let a = PosetAction::identity(l.clone(), FinitePoset::antichain(1));
        let q = a.quotient(1).unwrap();
        assert_eq!(q.classes, vec![vec![1], vec![2]]);
        assert_eq!(q.class_of, vec![None, Some(0), Some(1)]);
        assert!(q.lattice().lt_for_test(0, 1));
        assert_eq!(q.project(&l, 0), 0);
    }

    #[test]
    fn quotient_by_bounds() {
        let l = diamond();
        let a = PosetAction::identity(l.clone(), FinitePoset::antichain(2));
        let q0 = a.quotient(l.bottom()).unwrap();
        assert_eq!(q0.lattice().size(), l.size());
        assert!(q0.class_of.iter().all(Option::is_some));
        let q1 = a.quotient(l.top()).unwrap();
        assert_eq!(q1.lattice().size(), 1);
    }

    #[test]
    fn multiplication_and_join_distributivity() {
        let chain = FiniteLattice::chain(2);
        let id = PosetAction::identity(chain.clone(), FinitePoset::antichain(1));
        assert!(!id.is_multiplication());
        assert!(id.is_join_distributive());
        assert!(PosetAction::identity(FiniteLattice::trivial(), FinitePoset::antichain(1)).is_multiplication());
        let two = PosetAction::from_fn(chain, FinitePoset::chain(2), |s, x| if s == 0 { 0 } else { x }).unwrap();
        assert!(two.is_multiplication());
    }

    #[test]
    fn star_action_join_distributivity_matches_exhaustive_check() {
        // diamond (distributive) and M3 (three atoms, not distributive)
        let m3 = FiniteLattice::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        for (l, expected) in [(diamond(), true), (m3, false)] {
            let base = PosetAction::from_fn(l.clone(), FinitePoset::antichain(1), |_, x| l.meet(1, x)).unwrap();
            let star = base.star_action();
            let brute = l.elements().all(|y| {
                l.elements()
                    .all(|z| l.meet(1, l.join(y, z)) == l.join(l.meet(1, y), l.meet(1, z)))
            });
            assert_eq!(brute, expected);
            assert_eq!(star.is_join_distributive(), brute);
        }
    }

    impl FiniteLattice {
        fn lt_for_test(&self, a: ElementId, b: ElementId) -> bool {
            self.order.lt(a, b)
        }
    }
}
