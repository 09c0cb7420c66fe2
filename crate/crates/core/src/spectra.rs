//! Primeness and coprimeness predicates on a lattice with a poset action,
//! the spectra they cut out, varieties, and checkers for the duality
//! statements relating them.
//!
//! Every predicate is decided by exhaustive quantification over the finite
//! lattice and the acting poset.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::lattice::{ElementId, FiniteLattice, LatticeError, PosetAction};
use crate::report::{Report, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("{kind} is only defined for elements other than the {excluded} ({x} given)")]
    Domain {
        kind: SpectrumKind,
        x: ElementId,
        excluded: &'static str,
    },
    #[error("element {x} out of range for a lattice of size {size}")]
    OutOfRange { x: ElementId, size: usize },
    #[error("variety base set may not contain the top element {0}")]
    TopInBaseSet(ElementId),
    #[error("unknown spectrum kind `{0}`")]
    UnknownKind(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Note attached to every report that evaluates the PS-hollow predicate.
pub const PS_HOLLOW_READING: &str =
    "ps_hollow is evaluated as: x <= (s⇀1) ∨ y implies x <= s⇀1 or x <= y, for all s and y";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumKind {
    Irreducible,
    StronglyIrreducible,
    Hollow,
    StronglyHollow,
    /// Pseudo strongly irreducible.
    Psi,
    Prime,
    Coprime,
    PsHollow,
    Second,
    First,
}

impl SpectrumKind {
    pub const ALL: [SpectrumKind; 10] = [
        SpectrumKind::Irreducible,
        SpectrumKind::StronglyIrreducible,
        SpectrumKind::Hollow,
        SpectrumKind::StronglyHollow,
        SpectrumKind::Psi,
        SpectrumKind::Prime,
        SpectrumKind::Coprime,
        SpectrumKind::PsHollow,
        SpectrumKind::Second,
        SpectrumKind::First,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::Irreducible => "irreducible",
            SpectrumKind::StronglyIrreducible => "strongly_irreducible",
            SpectrumKind::Hollow => "hollow",
            SpectrumKind::StronglyHollow => "strongly_hollow",
            SpectrumKind::Psi => "psi",
            SpectrumKind::Prime => "prime",
            SpectrumKind::Coprime => "coprime",
            SpectrumKind::PsHollow => "ps_hollow",
            SpectrumKind::Second => "second",
            SpectrumKind::First => "first",
        }
    }

    /// Primeness kinds live on `L \ {1}`, coprimeness kinds on `L \ {0}`.
    pub fn excludes_top(self) -> bool {
        matches!(
            self,
            SpectrumKind::Irreducible
                | SpectrumKind::StronglyIrreducible
                | SpectrumKind::Psi
                | SpectrumKind::Prime
                | SpectrumKind::Coprime
        )
    }

    pub fn in_domain(self, lattice: &FiniteLattice, x: ElementId) -> bool {
        if self.excludes_top() {
            x != lattice.top()
        } else {
            x != lattice.bottom()
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectrumKind {
    type Err = SpectraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpectrumKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SpectraError::UnknownKind(s.to_owned()))
    }
}

/// Decides whether `x` belongs to the spectrum of the given kind.
pub fn is_kind(action: &PosetAction, x: ElementId, kind: SpectrumKind) -> Result<bool, SpectraError> {
    let l = action.lattice();
    if x >= l.size() {
        return Err(SpectraError::OutOfRange { x, size: l.size() });
    }
    if !kind.in_domain(l, x) {
        return Err(SpectraError::Domain {
            kind,
            x,
            excluded: if kind.excludes_top() { "top" } else { "bottom" },
        });
    }
    Ok(holds(action, x, kind))
}

fn holds(action: &PosetAction, x: ElementId, kind: SpectrumKind) -> bool {
    let l = action.lattice();
    let pairs = || l.elements().cartesian_product(l.elements());
    let acting_pairs = || action.acting().cartesian_product(l.elements());
    let (bottom, top) = (l.bottom(), l.top());
    match kind {
        SpectrumKind::Irreducible => pairs().all(|(a, b)| l.meet(a, b) != x || a == x || b == x),
        SpectrumKind::StronglyIrreducible => {
            pairs().all(|(a, b)| !l.leq(l.meet(a, b), x) || l.leq(a, x) || l.leq(b, x))
        }
        SpectrumKind::Hollow => pairs().all(|(a, b)| l.join(a, b) != x || a == x || b == x),
        SpectrumKind::StronglyHollow => pairs().all(|(a, b)| !l.leq(x, l.join(a, b)) || l.leq(x, a) || l.leq(x, b)),
        SpectrumKind::Psi => acting_pairs().all(|(s, y)| {
            let st = action.apply_top(s);
            !l.leq(l.meet(st, y), x) || l.leq(st, x) || l.leq(y, x)
        }),
        SpectrumKind::Prime => {
            acting_pairs().all(|(s, y)| !l.leq(action.apply(s, y), x) || l.leq(action.apply_top(s), x) || l.leq(y, x))
        }
        SpectrumKind::Coprime => action.acting().all(|s| {
            let st = action.apply_top(s);
            l.leq(st, x) || l.join(st, x) == top
        }),
        SpectrumKind::PsHollow => acting_pairs().all(|(s, y)| {
            let st = action.apply_top(s);
            !l.leq(x, l.join(st, y)) || l.leq(x, st) || l.leq(x, y)
        }),
        SpectrumKind::Second => action.acting().all(|s| {
            let sx = action.apply(s, x);
            sx == x || sx == bottom
        }),
        SpectrumKind::First => acting_pairs().all(|(s, y)| {
            !(action.apply(s, y) == bottom && l.leq(y, x)) || action.apply(s, x) == bottom || y == bottom
        }),
    }
}

/// All elements of the kind's domain satisfying the predicate, ascending.
pub fn spectrum(action: &PosetAction, kind: SpectrumKind) -> Vec<ElementId> {
    let l = action.lattice();
    l.elements()
        .filter(|&x| kind.in_domain(l, x) && holds(action, x, kind))
        .collect()
}

/// `V(a) = { p ∈ X : a ≤ p }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variety {
    pub base: ElementId,
    pub members: Vec<ElementId>,
}

fn check_base_set(lattice: &FiniteLattice, base_set: &[ElementId]) -> Result<(), SpectraError> {
    for &p in base_set {
        if p >= lattice.size() {
            return Err(SpectraError::OutOfRange {
                x: p,
                size: lattice.size(),
            });
        }
        if p == lattice.top() {
            return Err(SpectraError::TopInBaseSet(p));
        }
    }
    Ok(())
}

pub fn variety(lattice: &FiniteLattice, base_set: &[ElementId], a: ElementId) -> Result<Variety, SpectraError> {
    check_base_set(lattice, base_set)?;
    let members = base_set
        .iter()
        .copied()
        .filter(|&p| lattice.leq(a, p))
        .sorted()
        .dedup()
        .collect();
    Ok(Variety { base: a, members })
}

/// Whether the varieties over `base_set` are closed under finite unions.
/// Returns a pair `(a, b)` whose union is not a variety when they are not.
pub fn top_witness(
    lattice: &FiniteLattice,
    base_set: &[ElementId],
) -> Result<Option<(ElementId, ElementId)>, SpectraError> {
    check_base_set(lattice, base_set)?;
    let varieties: Vec<Vec<ElementId>> = lattice
        .elements()
        .map(|a| variety(lattice, base_set, a).map(|v| v.members))
        .collect::<Result<_, _>>()?;
    for (a, b) in lattice.elements().tuple_combinations() {
        let union: Vec<ElementId> = varieties[a]
            .iter()
            .chain(&varieties[b])
            .copied()
            .sorted()
            .dedup()
            .collect();
        if !varieties.contains(&union) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

pub fn is_top(lattice: &FiniteLattice, base_set: &[ElementId]) -> Result<bool, SpectraError> {
    Ok(top_witness(lattice, base_set)?.is_none())
}

/// Renders element ids in reports.
pub type Labeler<'a> = &'a dyn Fn(ElementId) -> String;

pub fn index_label(x: ElementId) -> String {
    x.to_string()
}

fn set_token(items: &[ElementId], label: Labeler<'_>) -> String {
    format!("{{{}}}", items.iter().map(|&x| label(x)).join(","))
}

fn equality_claim(
    report: &mut Report,
    claim: &str,
    lhs: &[ElementId],
    rhs: &[ElementId],
    label: Labeler<'_>,
) -> Verdict {
    report.claim(
        claim,
        Verdict::from_bool(lhs == rhs),
        [set_token(lhs, label), set_token(rhs, label)],
    )
}

/// The four duality statements relating coprime, second and first spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityClaim {
    /// Coprime elements of `L` are the second elements of the dual.
    CoprimeIsDualSecond,
    /// Coprime elements of the dual are the second elements under the star action.
    DualCoprimeIsStarSecond,
    /// For prime `x`, every class of `L/x` except `x/x` is first.
    PrimeQuotientAllFirst,
    /// Under join-distributivity of the action, the previous statement
    /// characterises primes.
    PrimeIffQuotientAllFirst,
}

impl DualityClaim {
    pub const ALL: [DualityClaim; 4] = [
        DualityClaim::CoprimeIsDualSecond,
        DualityClaim::DualCoprimeIsStarSecond,
        DualityClaim::PrimeQuotientAllFirst,
        DualityClaim::PrimeIffQuotientAllFirst,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DualityClaim::CoprimeIsDualSecond => "coprime-equals-dual-second",
            DualityClaim::DualCoprimeIsStarSecond => "dual-coprime-equals-star-second",
            DualityClaim::PrimeQuotientAllFirst => "prime-quotient-all-first",
            DualityClaim::PrimeIffQuotientAllFirst => "prime-iff-quotient-all-first",
        }
    }
}

/// Whether every class of `L/x` other than `x/x` is first.
pub fn quotient_all_first(action: &PosetAction, x: ElementId) -> Result<bool, LatticeError> {
    let q = action.quotient(x)?;
    let bottom_class = q.lattice().bottom();
    let expected: Vec<ElementId> = q.lattice().elements().filter(|&c| c != bottom_class).collect();
    Ok(spectrum(&q.action, SpectrumKind::First) == expected)
}

pub fn check_duality(action: &PosetAction, claim: DualityClaim, label: Labeler<'_>) -> Result<Report, SpectraError> {
    let mut report = Report::new(claim.id());
    let l = action.lattice();
    match claim {
        DualityClaim::CoprimeIsDualSecond => {
            let dual = action.dual_action()?;
            let lhs = spectrum(action, SpectrumKind::Coprime);
            let rhs = spectrum(&dual, SpectrumKind::Second);
            equality_claim(&mut report, claim.id(), &lhs, &rhs, label);
        }
        DualityClaim::DualCoprimeIsStarSecond => {
            let dual = action.dual_action()?;
            let lhs = spectrum(&dual, SpectrumKind::Coprime);
            let rhs = spectrum(&action.star_action(), SpectrumKind::Second);
            equality_claim(&mut report, claim.id(), &lhs, &rhs, label);
        }
        DualityClaim::PrimeQuotientAllFirst => {
            let primes = spectrum(action, SpectrumKind::Prime);
            if primes.is_empty() {
                report.claim(claim.id(), Verdict::HypothesisUnmet, ["no-prime-elements"]);
            } else {
                let mut bad = Vec::new();
                for &x in &primes {
                    if !quotient_all_first(action, x)? {
                        bad.push(x);
                    }
                }
                let witnesses = if bad.is_empty() {
                    vec![format!("primes={}", set_token(&primes, label))]
                } else {
                    vec![format!("counterexamples={}", set_token(&bad, label))]
                };
                report.claim(claim.id(), Verdict::from_bool(bad.is_empty()), witnesses);
            }
        }
        DualityClaim::PrimeIffQuotientAllFirst => {
            if let Some((s, y, z)) = action.join_distributivity_witness() {
                report.flag("action is not join-distributive; equivalence not asserted");
                report.claim(
                    claim.id(),
                    Verdict::HypothesisUnmet,
                    [format!(
                        "join-distributivity-fails-at:s={s},y={},z={}",
                        label(y),
                        label(z)
                    )],
                );
            } else {
                let mut bad = Vec::new();
                for x in l.elements().filter(|&x| x != l.top()) {
                    let prime = holds(action, x, SpectrumKind::Prime);
                    if prime != quotient_all_first(action, x)? {
                        bad.push(x);
                    }
                }
                let witnesses = if bad.is_empty() {
                    vec![format!("checked={}", l.size() - 1)]
                } else {
                    vec![format!("counterexamples={}", set_token(&bad, label))]
                };
                report.claim(claim.id(), Verdict::from_bool(bad.is_empty()), witnesses);
            }
        }
    }
    Ok(report)
}

/// Elements of `range` where `left` and `right` disagree.
fn disagreements(
    range: impl Iterator<Item = ElementId>,
    left: impl Fn(ElementId) -> bool,
    right: impl Fn(ElementId) -> bool,
) -> Vec<ElementId> {
    range.filter(|&x| left(x) != right(x)).collect()
}

fn agreement_claim(report: &mut Report, claim: &str, bad: &[ElementId], label: Labeler<'_>) {
    let witnesses = if bad.is_empty() {
        Vec::new()
    } else {
        vec![format!("disagree={}", set_token(bad, label))]
    };
    report.claim(claim, Verdict::from_bool(bad.is_empty()), witnesses);
}

/// Seven elementary relations between the spectra of `L`, its dual, its
/// star action and its lower intervals.
pub fn check_elementary_relations(action: &PosetAction, label: Labeler<'_>) -> Result<Report, SpectraError> {
    let mut report = Report::new("elementary spectral relations");
    let l = action.lattice();
    let (bottom, top) = (l.bottom(), l.top());
    let dual = action.dual_action()?;
    let star = action.star_action();

    if l.size() < 2 {
        report.claim(
            "zero-prime-iff-top-first",
            Verdict::HypothesisUnmet,
            ["one-element-lattice"],
        );
    } else {
        let lhs = holds(action, bottom, SpectrumKind::Prime);
        let rhs = holds(action, top, SpectrumKind::First);
        report.claim(
            "zero-prime-iff-top-first",
            Verdict::from_bool(lhs == rhs),
            [format!("zero-prime={lhs}"), format!("top-first={rhs}")],
        );
    }

    let sh = spectrum(action, SpectrumKind::StronglyHollow);
    let dual_prime = spectrum(&dual, SpectrumKind::Prime);
    let missing: Vec<_> = sh.iter().copied().filter(|x| !dual_prime.contains(x)).collect();
    report.claim(
        "strongly-hollow-within-dual-prime",
        Verdict::from_bool(missing.is_empty()),
        [set_token(&sh, label), set_token(&dual_prime, label)],
    );

    report.flag(
        "multiplication case read with the PS-hollow spectrum in first position (the printed pseudo strongly irreducible spectrum lives on L\\{1} and differs on chains)",
    );
    if action.is_multiplication() {
        let psh = spectrum(action, SpectrumKind::PsHollow);
        let ok = psh == sh && sh == dual_prime;
        report.claim(
            "multiplication-hollow-spectra-coincide",
            Verdict::from_bool(ok),
            [
                set_token(&psh, label),
                set_token(&sh, label),
                set_token(&dual_prime, label),
            ],
        );
        report.flag(PS_HOLLOW_READING);
    } else {
        report.claim(
            "multiplication-hollow-spectra-coincide",
            Verdict::HypothesisUnmet,
            ["not-multiplication"],
        );
    }

    let proper = || l.elements().filter(move |&x| x != top);
    let bad = disagreements(
        proper(),
        |x| holds(&star, x, SpectrumKind::Prime),
        |x| holds(action, x, SpectrumKind::Psi),
    );
    agreement_claim(&mut report, "star-prime-iff-psi", &bad, label);

    let bad = disagreements(
        proper(),
        |x| holds(action, x, SpectrumKind::Coprime),
        |x| holds(&star, x, SpectrumKind::Coprime),
    );
    agreement_claim(&mut report, "coprime-invariant-under-star", &bad, label);

    let nonzero = || l.elements().filter(move |&x| x != bottom);
    let bad = disagreements(
        nonzero(),
        |x| holds(action, x, SpectrumKind::First),
        |x| {
            let interval = action.lower_interval(x);
            holds(&interval.action, interval.lattice().bottom(), SpectrumKind::Prime)
        },
    );
    agreement_claim(&mut report, "first-iff-zero-prime-in-interval", &bad, label);

    let bad = disagreements(
        nonzero(),
        |x| holds(action, x, SpectrumKind::Second),
        |x| {
            let interval = action.lower_interval(x);
            holds(&interval.action, interval.lattice().bottom(), SpectrumKind::Coprime)
        },
    );
    agreement_claim(&mut report, "second-iff-zero-coprime-in-interval", &bad, label);

    Ok(report)
}

/// Multiplication lattices are top with respect to their prime spectrum.
pub fn check_prime_topology(action: &PosetAction, label: Labeler<'_>) -> Result<Report, SpectraError> {
    let mut report = Report::new("prime topology");
    let claim = "multiplication-implies-prime-top";
    if !action.is_multiplication() {
        report.claim(claim, Verdict::HypothesisUnmet, ["not-multiplication"]);
        return Ok(report);
    }
    let primes = spectrum(action, SpectrumKind::Prime);
    match top_witness(action.lattice(), &primes)? {
        None => report.claim(claim, Verdict::Pass, [set_token(&primes, label)]),
        Some((a, b)) => report.claim(claim, Verdict::Fail, [format!("V({})∪V({})", label(a), label(b))]),
    };
    Ok(report)
}

/// Strong forms imply weak forms: strongly irreducible ⇒ irreducible,
/// strongly hollow ⇒ hollow and PS-hollow; PS-hollow ⇔ strongly hollow on
/// multiplication lattices.
pub fn check_inclusions(action: &PosetAction, label: Labeler<'_>) -> Report {
    let mut report = Report::new("spectrum inclusions");
    let subset = |a: SpectrumKind, b: SpectrumKind| -> Vec<ElementId> {
        let inner = spectrum(action, b);
        spectrum(action, a).into_iter().filter(|x| !inner.contains(x)).collect()
    };
    for (claim, a, b) in [
        (
            "strongly-irreducible-implies-irreducible",
            SpectrumKind::StronglyIrreducible,
            SpectrumKind::Irreducible,
        ),
        (
            "strongly-hollow-implies-hollow",
            SpectrumKind::StronglyHollow,
            SpectrumKind::Hollow,
        ),
        (
            "strongly-hollow-implies-ps-hollow",
            SpectrumKind::StronglyHollow,
            SpectrumKind::PsHollow,
        ),
    ] {
        let bad = subset(a, b);
        agreement_claim(&mut report, claim, &bad, label);
    }
    if action.is_multiplication() {
        let bad = subset(SpectrumKind::PsHollow, SpectrumKind::StronglyHollow);
        agreement_claim(
            &mut report,
            "multiplication-ps-hollow-implies-strongly-hollow",
            &bad,
            label,
        );
    } else {
        report.claim(
            "multiplication-ps-hollow-implies-strongly-hollow",
            Verdict::HypothesisUnmet,
            ["not-multiplication"],
        );
    }
    report.flag(PS_HOLLOW_READING);
    report
}

/// Every duality claim, the elementary relations, the top-lattice check and the inclusions.
pub fn check_all(action: &PosetAction, label: Labeler<'_>) -> Result<Report, SpectraError> {
    let mut report = Report::new("lattice battery");
    for claim in DualityClaim::ALL {
        report.absorb(check_duality(action, claim, label)?);
    }
    report.absorb(check_elementary_relations(action, label)?);
    report.absorb(check_prime_topology(action, label)?);
    report.absorb(check_inclusions(action, label));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FinitePoset;

    fn identity_chain() -> PosetAction {
        PosetAction::identity(FiniteLattice::chain(2), FinitePoset::antichain(1))
    }

    #[test]
    fn zero_is_prime_in_identity_chain() {
        let a = identity_chain();
        assert!(is_kind(&a, 0, SpectrumKind::Prime).unwrap());
    }

    #[test]
    fn domain_errors() {
        let a = identity_chain();
        assert!(matches!(
            is_kind(&a, 1, SpectrumKind::Prime),
            Err(SpectraError::Domain { .. })
        ));
        assert!(matches!(
            is_kind(&a, 0, SpectrumKind::Second),
            Err(SpectraError::Domain { .. })
        ));
        assert!(matches!(
            is_kind(&a, 9, SpectrumKind::Second),
            Err(SpectraError::OutOfRange { .. })
        ));
    }

    #[test]
    fn top_is_second_iff_every_top_image_is_trivial() {
        let l = FiniteLattice::chain(3);
        let poset = FinitePoset::antichain(3);
        // s=0 kills everything, s=1 is identity, s=2 sends 2 to 1
        let a = PosetAction::from_fn(l, poset, |s, x| match s {
            0 => 0,
            1 => x,
            _ => x.min(1),
        })
        .unwrap();
        assert!(!is_kind(&a, 2, SpectrumKind::Second).unwrap());
        let images: Vec<_> = a.acting().map(|s| a.apply_top(s)).collect();
        assert_eq!(images, vec![0, 2, 1]);
    }

    #[test]
    fn one_element_lattice_has_empty_spectra() {
        let a = PosetAction::identity(FiniteLattice::trivial(), FinitePoset::antichain(2));
        for kind in SpectrumKind::ALL {
            assert!(spectrum(&a, kind).is_empty(), "{kind}");
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in SpectrumKind::ALL {
            assert_eq!(kind.name().parse::<SpectrumKind>().unwrap(), kind);
        }
        assert!("bogus".parse::<SpectrumKind>().is_err());
    }

    #[test]
    fn varieties_and_top() {
        let chain = FiniteLattice::chain(4);
        assert!(is_top(&chain, &[]).unwrap());
        assert!(is_top(&chain, &[0, 1, 2]).unwrap());
        assert_eq!(variety(&chain, &[0, 1, 2], 1).unwrap().members, vec![1, 2]);
        assert!(matches!(is_top(&chain, &[3]), Err(SpectraError::TopInBaseSet(3))));

        // M3 with X = the three atoms: V(a) ∪ V(b) = {a, b} is not a variety
        let m3 = FiniteLattice::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(top_witness(&m3, &[1, 2, 3]).unwrap(), Some((1, 2)));
    }

    #[test]
    fn zero_prime_matches_top_first_on_identity_chain() {
        let a = identity_chain();
        let r = check_elementary_relations(&a, &index_label).unwrap();
        assert_eq!(r.verdict("zero-prime-iff-top-first"), Some(Verdict::Pass));
        assert!(!r.has_failures(), "{}", r.to_text());
    }

    #[test]
    fn equivalence_needs_join_distributive_action() {
        let m3 = FiniteLattice::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let base = PosetAction::from_fn(m3.clone(), FinitePoset::antichain(1), |_, x| m3.meet(1, x)).unwrap();
        let r = check_duality(&base, DualityClaim::PrimeIffQuotientAllFirst, &index_label).unwrap();
        assert_eq!(
            r.verdict("prime-iff-quotient-all-first"),
            Some(Verdict::HypothesisUnmet)
        );
        assert!(r.flags.iter().any(|f| f.contains("not join-distributive")));
    }
}
