//! PS-hollow submodules and their representations.
//!
//! `N ≤ M` is PS-hollow when `N ⊆ IM + L` forces `N ⊆ IM` or `N ⊆ L` for
//! every ideal `I` and submodule `L`. A PS-hollow `N` carries a profile:
//! `A_N = { I : N ⊆ IM }`, its inclusion-minimal members `H_N`, and the
//! interior `In(N) = ⋂_{I ∈ H_N} IM`.
//!
//! Everything here is computed on a [`SubmoduleLattice`]; submodules and ideals
//! are referred to by their indices there.

use itertools::Itertools;
use thiserror::Error;

use crate::module::{factorize, Ideal, SubmoduleLattice};
use crate::report::{Report, Verdict};
use crate::spectra::{is_kind, SpectrumKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsHollowError {
    #[error("the PS-hollow predicate is only defined for nonzero submodules")]
    ZeroSubmodule,
    #[error("submodule index {index} out of range ({len} submodules)")]
    OutOfRange { index: usize, len: usize },
    #[error("not a PS-hollow representation: {0}")]
    NotARepresentation(String),
    #[error("minimization step {step} could not complete: {detail}")]
    StepFailed { step: u8, detail: String },
    #[error("max_terms must be at least 1")]
    ZeroTerms,
}

/// `(A_N, H_N, In(N))`, kept for every submodule; `ps_hollow` tells whether
/// the profile is meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HollowProfile {
    pub submodule: usize,
    /// Positions in [`SubmoduleLattice::ideals`] of the ideals with `N ⊆ IM`.
    pub contained_in: Vec<usize>,
    /// Inclusion-minimal members of `contained_in`.
    pub minimal: Vec<usize>,
    pub interior: usize,
    pub ps_hollow: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    /// Submodule indices in canonical order.
    pub summands: Vec<usize>,
    pub profiles: Vec<HollowProfile>,
    pub minimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityViolation {
    /// Positions `i < j` whose interiors are comparable.
    ComparableInteriors(usize, usize),
    /// Position of a summand inside the sum of the others.
    Redundant(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimizeStep {
    RemovedRedundant { removed: usize },
    MergedEqualFamilies { parts: Vec<usize>, into: usize },
    ReplacedByInterior { parts: (usize, usize), into: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimization {
    pub representation: Representation,
    pub trace: Vec<MinimizeStep>,
}

/// Precomputed PS-hollow data for one submodule lattice.
#[derive(Debug, Clone)]
pub struct PsHollowAnalysis<'a> {
    sl: &'a SubmoduleLattice,
    /// Ideal images `IM` without repetition.
    images: Vec<usize>,
    /// The defining condition, evaluated literally (so true for zero).
    condition: Vec<bool>,
    profiles: Vec<HollowProfile>,
}

impl<'a> PsHollowAnalysis<'a> {
    pub fn new(sl: &'a SubmoduleLattice) -> Self {
        let images: Vec<usize> = (0..sl.ideals().len()).map(|i| sl.ideal_image(i)).unique().collect();
        let condition: Vec<bool> = sl
            .indices()
            .map(|n| {
                images.iter().all(|&im| {
                    sl.indices()
                        .all(|l| !sl.leq(n, sl.sum(im, l)) || sl.leq(n, im) || sl.leq(n, l))
                })
            })
            .collect();
        let profiles = sl
            .indices()
            .map(|n| {
                let contained_in: Vec<usize> = (0..sl.ideals().len())
                    .filter(|&i| sl.leq(n, sl.ideal_image(i)))
                    .collect();
                let ideals = sl.ideals();
                let minimal: Vec<usize> = contained_in
                    .iter()
                    .copied()
                    .filter(|&i| !contained_in.iter().any(|&j| j != i && ideals[i].contains(ideals[j])))
                    .collect();
                let interior = sl.lattice().meet_all(minimal.iter().map(|&i| sl.ideal_image(i)));
                HollowProfile {
                    submodule: n,
                    contained_in,
                    minimal,
                    interior,
                    ps_hollow: n != sl.zero() && condition[n],
                }
            })
            .collect();
        PsHollowAnalysis {
            sl,
            images,
            condition,
            profiles,
        }
    }

    pub fn lattice(&self) -> &'a SubmoduleLattice {
        self.sl
    }

    fn check_index(&self, n: usize) -> Result<(), PsHollowError> {
        if n >= self.sl.len() {
            return Err(PsHollowError::OutOfRange {
                index: n,
                len: self.sl.len(),
            });
        }
        Ok(())
    }

    pub fn is_ps_hollow(&self, n: usize) -> Result<bool, PsHollowError> {
        self.check_index(n)?;
        if n == self.sl.zero() {
            return Err(PsHollowError::ZeroSubmodule);
        }
        Ok(self.condition[n])
    }

    /// The defining implication with the zero submodule admitted (it holds
    /// there vacuously). Used where hypotheses quantify over all submodules.
    pub fn satisfies_condition(&self, n: usize) -> bool {
        self.condition[n]
    }

    /// Submodule indices `(IM, L)` with `N ⊆ IM + L` but neither inclusion.
    pub fn violation(&self, n: usize) -> Option<(usize, usize)> {
        let sl = self.sl;
        self.images.iter().find_map(|&im| {
            sl.indices()
                .find(|&l| sl.leq(n, sl.sum(im, l)) && !sl.leq(n, im) && !sl.leq(n, l))
                .map(|l| (im, l))
        })
    }

    pub fn profile(&self, n: usize) -> &HollowProfile {
        &self.profiles[n]
    }

    fn is_psh(&self, n: usize) -> bool {
        self.profiles[n].ps_hollow
    }

    fn family(&self, n: usize) -> &[usize] {
        &self.profiles[n].minimal
    }

    fn interior(&self, n: usize) -> usize {
        self.profiles[n].interior
    }

    /// `N` is PS-hollow with `H_N = family`.
    pub fn is_h_ps_hollow(&self, n: usize, family: &[usize]) -> bool {
        self.is_psh(n) && self.family(n) == family
    }

    pub fn ps_hollow_submodules(&self) -> Vec<usize> {
        self.sl.indices().filter(|&n| self.is_psh(n)).collect()
    }

    pub fn family_name(&self, family: &[usize]) -> String {
        format!("{{{}}}", family.iter().map(|&i| self.sl.ideals()[i]).join(","))
    }

    /// Ideals occurring in some `H_N`.
    pub fn associated_hollow_ideals(&self) -> Vec<Ideal> {
        self.ps_hollow_submodules()
            .into_iter()
            .flat_map(|n| self.family(n).to_vec())
            .sorted()
            .dedup()
            .map(|i| self.sl.ideals()[i])
            .collect()
    }

    pub fn is_ps_hollow_representable(&self) -> bool {
        self.sl.sum_all(self.ps_hollow_submodules()) == self.sl.whole()
    }

    fn validate_representation(&self, summands: &[usize]) -> Result<(), PsHollowError> {
        for &n in summands {
            self.check_index(n)?;
            if !self.is_psh(n) {
                return Err(PsHollowError::NotARepresentation(format!(
                    "{} is not PS-hollow",
                    self.sl.name(n)
                )));
            }
        }
        if self.sl.sum_all(summands.iter().copied()) != self.sl.whole() {
            return Err(PsHollowError::NotARepresentation(format!(
                "{} does not sum to the module",
                self.sl.names(summands)
            )));
        }
        Ok(())
    }

    /// Violations of the two minimality conditions; empty when minimal.
    pub fn minimality_violations(&self, summands: &[usize]) -> Vec<MinimalityViolation> {
        let sl = self.sl;
        let mut out = Vec::new();
        for (i, j) in (0..summands.len()).tuple_combinations() {
            let (a, b) = (self.interior(summands[i]), self.interior(summands[j]));
            if sl.leq(a, b) || sl.leq(b, a) {
                out.push(MinimalityViolation::ComparableInteriors(i, j));
            }
        }
        for j in 0..summands.len() {
            let rest = sl.sum_all(summands.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &n)| n));
            if sl.leq(summands[j], rest) {
                out.push(MinimalityViolation::Redundant(j));
            }
        }
        out
    }

    pub fn is_minimal(&self, summands: &[usize]) -> bool {
        self.minimality_violations(summands).is_empty()
    }

    pub fn representation(&self, summands: &[usize]) -> Result<Representation, PsHollowError> {
        self.validate_representation(summands)?;
        let mut summands = summands.to_vec();
        summands.sort_unstable();
        Ok(Representation {
            profiles: summands.iter().map(|&n| self.profiles[n].clone()).collect(),
            minimal: self.is_minimal(&summands),
            summands,
        })
    }

    /// Reduces a PS-hollow representation to a minimal one: drop a redundant
    /// summand, merge summands sharing the same `H`, replace two summands with
    /// comparable interiors by the larger interior; repeat until none applies.
    /// Candidates are always taken in canonical order.
    pub fn minimize(&self, summands: &[usize]) -> Result<Minimization, PsHollowError> {
        self.validate_representation(summands)?;
        let sl = self.sl;
        let mut current: Vec<usize> = summands.iter().copied().sorted().dedup().collect();
        let mut trace = Vec::new();
        loop {
            if let Some(&MinimalityViolation::Redundant(j)) = self
                .minimality_violations(&current)
                .iter()
                .find(|v| matches!(v, MinimalityViolation::Redundant(_)))
            {
                trace.push(MinimizeStep::RemovedRedundant {
                    removed: current.remove(j),
                });
                continue;
            }
            let group = current
                .iter()
                .copied()
                .into_group_map_by(|&n| self.family(n).to_vec())
                .into_values()
                .filter(|g| g.len() > 1)
                .min();
            if let Some(parts) = group {
                let into = sl.sum_all(parts.iter().copied());
                if !self.is_h_ps_hollow(into, self.family(parts[0])) {
                    return Err(PsHollowError::StepFailed {
                        step: 2,
                        detail: format!(
                            "sum {} of {} is not {}-PS-hollow",
                            sl.name(into),
                            sl.names(&parts),
                            self.family_name(self.family(parts[0]))
                        ),
                    });
                }
                current.retain(|n| !parts.contains(n));
                current.push(into);
                current = current.into_iter().sorted().dedup().collect();
                trace.push(MinimizeStep::MergedEqualFamilies { parts, into });
                continue;
            }
            let comparable = (0..current.len()).tuple_combinations().find(|&(i, j)| {
                let (a, b) = (self.interior(current[i]), self.interior(current[j]));
                sl.leq(a, b) || sl.leq(b, a)
            });
            if let Some((i, j)) = comparable {
                let (a, b) = (self.interior(current[i]), self.interior(current[j]));
                let into = if sl.leq(a, b) { b } else { a };
                if !self.is_psh(into) {
                    return Err(PsHollowError::StepFailed {
                        step: 3,
                        detail: format!(
                            "interior {} of {} is not PS-hollow",
                            sl.name(into),
                            sl.names(&[current[i], current[j]])
                        ),
                    });
                }
                let parts = (current[i], current[j]);
                current.retain(|&n| n != parts.0 && n != parts.1);
                current.push(into);
                current = current.into_iter().sorted().dedup().collect();
                trace.push(MinimizeStep::ReplacedByInterior { parts, into });
                continue;
            }
            break;
        }
        Ok(Minimization {
            representation: self.representation(&current)?,
            trace,
        })
    }

    /// Every minimal PS-hollow representation with at most `max_terms`
    /// summands, each listed once in canonical order.
    pub fn enumerate_minimal_representations(&self, max_terms: usize) -> Result<Vec<Representation>, PsHollowError> {
        if max_terms == 0 {
            return Err(PsHollowError::ZeroTerms);
        }
        let candidates = self.ps_hollow_submodules();
        let max_terms = max_terms.min(candidates.len());
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        self.search(&candidates, 0, self.sl.zero(), max_terms, &mut chosen, &mut found);
        found.iter().map(|s: &Vec<usize>| self.representation(s)).collect()
    }

    fn search(
        &self,
        candidates: &[usize],
        start: usize,
        sum: usize,
        max_terms: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let sl = self.sl;
        if sum == sl.whole() {
            if self.is_minimal(chosen) {
                found.push(chosen.clone());
            }
            return;
        }
        if chosen.len() == max_terms {
            return;
        }
        for k in start..candidates.len() {
            let n = candidates[k];
            if sl.leq(n, sum) {
                continue;
            }
            let interior = self.interior(n);
            if chosen.iter().any(|&c| {
                let other = self.interior(c);
                sl.leq(other, interior) || sl.leq(interior, other)
            }) {
                continue;
            }
            chosen.push(n);
            self.search(candidates, k + 1, sl.sum(sum, n), max_terms, chosen, found);
            chosen.pop();
        }
    }

    /// For `Z_d` over `Z/dZ`: the summands `(d / p^m)` over the prime powers
    /// `p^m` exactly dividing `d`.
    pub fn cyclic_canonical_summands(&self) -> Option<Vec<usize>> {
        let module = self.sl.module();
        let [d] = module.factors() else {
            return None;
        };
        if *d != module.ring().modulus() {
            return None;
        }
        factorize(*d)
            .into_iter()
            .map(|(p, m)| {
                let generator = d / p.pow(m);
                let ideal = module.ring().ideal(generator).ok()?;
                Some(self.sl.ideal_image(self.sl.ideal_index(ideal)))
            })
            .collect::<Option<Vec<usize>>>()
            .map(|v| v.into_iter().sorted().collect())
    }

    /// Positions of `b` matched to the positions of `a` by equal `H`; `None`
    /// when the families differ.
    fn align(&self, a: &Representation, b: &Representation) -> Option<Vec<usize>> {
        if a.summands.len() != b.summands.len() {
            return None;
        }
        a.profiles
            .iter()
            .map(|p| b.profiles.iter().position(|q| q.minimal == p.minimal))
            .collect::<Option<Vec<usize>>>()
            .filter(|m| m.iter().all_unique())
    }

    /// Equal length, equal families `{H_i}`, and equal interiors wherever the
    /// families agree. Returns the first mismatch.
    pub fn first_uniqueness_mismatch(&self, a: &Representation, b: &Representation) -> Option<String> {
        let sl = self.sl;
        if a.summands.len() != b.summands.len() {
            return Some(format!("lengths {} and {}", a.summands.len(), b.summands.len()));
        }
        let fam =
            |r: &Representation| -> Vec<Vec<usize>> { r.profiles.iter().map(|p| p.minimal.clone()).sorted().collect() };
        if fam(a) != fam(b) {
            return Some(format!(
                "families differ for {} and {}",
                sl.names(&a.summands),
                sl.names(&b.summands)
            ));
        }
        for p in &a.profiles {
            for q in b.profiles.iter().filter(|q| q.minimal == p.minimal) {
                if p.interior != q.interior {
                    return Some(format!(
                        "In({})={} but In({})={}",
                        sl.name(p.submodule),
                        sl.name(p.interior),
                        sl.name(q.submodule),
                        sl.name(q.interior)
                    ));
                }
            }
        }
        None
    }

    pub fn verify_first_uniqueness(&self, a: &Representation, b: &Representation) -> Report {
        let mut report = Report::new(self.subject());
        if !a.minimal || !b.minimal {
            report.claim(
                "first-uniqueness",
                Verdict::HypothesisUnmet,
                ["representation-not-minimal"],
            );
            return report;
        }
        match self.first_uniqueness_mismatch(a, b) {
            None => report.claim("first-uniqueness", Verdict::Pass, Vec::<String>::new()),
            Some(w) => report.claim("first-uniqueness", Verdict::Fail, [w]),
        };
        report
    }

    /// After aligning by `H`: whenever `H_m` is inclusion-minimal among the
    /// families, `N_m = K_m` or `In(N_m)` is not PS-hollow. `Err` carries the
    /// reason the hypothesis fails.
    pub fn second_uniqueness_mismatch(&self, a: &Representation, b: &Representation) -> Result<Option<String>, String> {
        if !a.minimal || !b.minimal {
            return Err("representation-not-minimal".to_owned());
        }
        let alignment = self.align(a, b).ok_or("families-not-alignable")?;
        let sl = self.sl;
        for (m, p) in a.profiles.iter().enumerate() {
            let is_min = !a
                .profiles
                .iter()
                .any(|q| q.minimal != p.minimal && q.minimal.iter().all(|i| p.minimal.contains(i)));
            if !is_min {
                continue;
            }
            let k = b.summands[alignment[m]];
            if p.submodule != k && self.is_psh(p.interior) {
                return Ok(Some(format!(
                    "{}!={} with In={} PS-hollow",
                    sl.name(p.submodule),
                    sl.name(k),
                    sl.name(p.interior)
                )));
            }
        }
        Ok(None)
    }

    pub fn verify_second_uniqueness(&self, a: &Representation, b: &Representation) -> Report {
        let mut report = Report::new(self.subject());
        report.flag(FAMILY_ORDER_READING);
        match self.second_uniqueness_mismatch(a, b) {
            Err(why) => report.claim("second-uniqueness", Verdict::HypothesisUnmet, [why]),
            Ok(None) => report.claim("second-uniqueness", Verdict::Pass, Vec::<String>::new()),
            Ok(Some(w)) => report.claim("second-uniqueness", Verdict::Fail, [w]),
        };
        report
    }

    fn subject(&self) -> String {
        self.sl.module().describe()
    }

    /// Independence: `K_i ∩ Σ_{j≠i} K_j = 0` for every `i`.
    pub fn is_direct(&self, summands: &[usize]) -> bool {
        let sl = self.sl;
        (0..summands.len()).all(|i| {
            let rest = sl.sum_all(summands.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &n)| n));
            sl.intersect(summands[i], rest) == sl.zero()
        })
    }

    /// Non-small parts of an `H`-PS-hollow `N` inherit the profile of `N`,
    /// provided every non-small submodule of `M` is an ideal image.
    pub fn check_non_small_parts(&self, n: usize) -> Report {
        let sl = self.sl;
        let mut report = Report::new(self.subject());
        let id = "non-small-parts-inherit-profile";
        report.flag(NON_SMALL_READING);
        if !self.is_psh(n) {
            report.claim(id, Verdict::HypothesisUnmet, [format!("{}-not-PS-hollow", sl.name(n))]);
            return report;
        }
        let images: Vec<usize> = (0..sl.ideals().len()).map(|i| sl.ideal_image(i)).collect();
        if let Some(k) = sl.indices().find(|&k| !sl.is_small(k) && !images.contains(&k)) {
            report.claim(
                id,
                Verdict::HypothesisUnmet,
                [format!("{}-non-small-not-ideal-image", sl.name(k))],
            );
            return report;
        }
        let small_in_n = |k: usize| {
            sl.indices()
                .filter(|&l| sl.leq(l, n))
                .all(|l| sl.sum(k, l) != n || l == n)
        };
        let bad = sl.indices().filter(|&k| sl.leq(k, n) && !small_in_n(k)).find(|&k| {
            !self.is_h_ps_hollow(k, self.family(n)) || images.iter().any(|&im| sl.leq(k, im) != sl.leq(n, im))
        });
        match bad {
            None => report.claim(id, Verdict::Pass, [sl.name(n)]),
            Some(k) => report.claim(id, Verdict::Fail, [sl.name(n), sl.name(k)]),
        };
        report
    }

    /// Runs every checker on this module.
    pub fn check_all(&self, max_terms: usize) -> Result<Report, PsHollowError> {
        let sl = self.sl;
        let mut report = Report::new(self.subject());
        report.flag(FAMILY_ORDER_READING);
        let psh = self.ps_hollow_submodules();
        let reps = self.enumerate_minimal_representations(max_terms)?;

        // Minimal members of A_N are hollow ideals, and N ⊆ In(N).
        let mut t = Tally::default();
        for &n in &psh {
            let p = self.profile(n);
            for &i in &p.minimal {
                t.record(sl.ideals()[i].is_hollow(), || {
                    format!("{}:{}", sl.name(n), sl.ideals()[i])
                });
            }
        }
        t.finish(&mut report, "minimal-ideals-are-hollow", "no-PS-hollow-submodule");
        let mut t = Tally::default();
        for &n in &psh {
            t.record(sl.leq(n, self.interior(n)), || sl.name(n));
        }
        t.finish(&mut report, "ps-hollow-within-interior", "no-PS-hollow-submodule");

        // Strongly hollow and PS-hollow.
        let mut t = Tally::default();
        let mut u = Tally::default();
        let multiplication = sl.is_multiplication();
        for n in sl.indices().filter(|&n| n != sl.zero()) {
            let sh = is_kind(sl.action(), n, SpectrumKind::StronglyHollow).expect("nonzero");
            if sh {
                t.record(self.is_psh(n), || sl.name(n));
            }
            if multiplication && self.is_psh(n) {
                u.record(sh, || sl.name(n));
            }
        }
        t.finish(
            &mut report,
            "strongly-hollow-is-ps-hollow",
            "no-strongly-hollow-submodule",
        );
        u.finish(
            &mut report,
            "multiplication-ps-hollow-is-strongly-hollow",
            "not-multiplication",
        );

        let mut t = Tally::default();
        if sl.is_second(sl.whole()) {
            for n in sl.indices().filter(|&n| n != sl.zero()) {
                t.record(self.is_psh(n), || sl.name(n));
            }
        }
        t.finish(&mut report, "second-module-all-ps-hollow", "module-not-second");

        // Sums of incomparable PS-hollow submodules.
        let mut t = Tally::default();
        for (&n, &l) in psh.iter().tuple_combinations() {
            if sl.leq(n, l) || sl.leq(l, n) {
                continue;
            }
            t.record(self.sum_law_holds(n, l), || format!("{}+{}", sl.name(n), sl.name(l)));
        }
        t.finish(&mut report, "sum-of-incomparable-ps-hollow", "no-incomparable-pair");

        // Interiors.
        let mut t = Tally::default();
        let mut u = Tally::default();
        for &n in &psh {
            let inn = self.interior(n);
            if self.is_psh(inn) {
                t.record(self.family(inn) == self.family(n), || sl.name(n));
            }
            let below_overmodules = sl.indices().filter(|&l| sl.leq(n, l)).all(|l| sl.leq(inn, l));
            if below_overmodules {
                u.record(self.is_h_ps_hollow(inn, self.family(n)), || sl.name(n));
            }
        }
        t.finish(&mut report, "interior-keeps-family", "no-ps-hollow-interior");
        u.finish(
            &mut report,
            "interior-below-overmodules-is-ps-hollow",
            "no-interior-below-overmodules",
        );

        // Existence through minimization.
        let interiors_closed = psh.iter().all(|&n| self.is_psh(self.interior(n)));
        if !self.is_ps_hollow_representable() {
            report.claim(
                "minimization-reaches-minimal",
                Verdict::HypothesisUnmet,
                ["not-PS-hollow-representable"],
            );
        } else if !interiors_closed {
            let w = psh.iter().find(|&&n| !self.is_psh(self.interior(n))).expect("exists");
            report.claim(
                "minimization-reaches-minimal",
                Verdict::HypothesisUnmet,
                [format!("In({})-not-PS-hollow", sl.name(*w))],
            );
        } else {
            match self.minimize(&psh) {
                Ok(m) if m.representation.minimal && !reps.is_empty() => report.claim(
                    "minimization-reaches-minimal",
                    Verdict::Pass,
                    [sl.names(&m.representation.summands)],
                ),
                Ok(m) => report.claim(
                    "minimization-reaches-minimal",
                    Verdict::Fail,
                    [sl.names(&m.representation.summands)],
                ),
                Err(e) => report.claim("minimization-reaches-minimal", Verdict::Fail, [e.to_string()]),
            };
        }

        if multiplication {
            let v = Verdict::from_bool(reps.len() <= 1);
            report.claim(
                "multiplication-unique-minimal-representation",
                v,
                reps.iter().map(|r| sl.names(&r.summands)),
            );
        } else {
            report.claim(
                "multiplication-unique-minimal-representation",
                Verdict::HypothesisUnmet,
                ["not-multiplication"],
            );
        }

        // Uniqueness.
        let mut first = Tally::default();
        let mut second = Tally::default();
        let mut equal = Tally::default();
        let main: Vec<usize> = reps.iter().flat_map(|r| r.summands.clone()).unique().collect();
        let main_interiors_closed = main.iter().all(|&n| self.is_psh(self.interior(n)));
        for (a, b) in reps.iter().cartesian_product(&reps) {
            let pair = || format!("{}|{}", sl.names(&a.summands), sl.names(&b.summands));
            first.record(self.first_uniqueness_mismatch(a, b).is_none(), pair);
            if let Ok(outcome) = self.second_uniqueness_mismatch(a, b) {
                second.record(outcome.is_none(), pair);
                if main_interiors_closed {
                    let alignment = self.align(a, b).expect("aligned above");
                    let same = (0..a.summands.len()).all(|m| a.summands[m] == b.summands[alignment[m]]);
                    equal.record(same, pair);
                }
            }
        }
        first.finish(&mut report, "first-uniqueness", "no-minimal-representation");
        second.finish(&mut report, "second-uniqueness", "no-aligned-pair");
        equal.finish(
            &mut report,
            "ps-hollow-interiors-force-equal-summands",
            "main-interior-not-PS-hollow",
        );

        // Hollow submodules.
        let mut t = Tally::default();
        if sl.is_pseudo_distributive() {
            for n in sl.hollow_submodules() {
                t.record(self.is_psh(n), || sl.name(n));
            }
        }
        t.finish(
            &mut report,
            "pseudo-distributive-hollow-is-ps-hollow",
            "not-pseudo-distributive",
        );
        let mut t = Tally::default();
        if sl.is_s_lifting() {
            for n in sl.maximal_hollow_submodules() {
                t.record(self.is_psh(n), || sl.name(n));
            }
        }
        t.finish(&mut report, "s-lifting-maximal-hollow-is-ps-hollow", "not-s-lifting");

        // Non-small parts.
        let mut t = Tally::default();
        let mut unmet = None;
        for &n in &psh {
            let r = self.check_non_small_parts(n);
            let f = &r.findings[0];
            match f.verdict {
                Verdict::HypothesisUnmet => unmet = unmet.or(f.witnesses.first().cloned()),
                v => t.record(v == Verdict::Pass, || f.witnesses.join("/")),
            }
        }
        report.flag(NON_SMALL_READING);
        t.finish(
            &mut report,
            "non-small-parts-inherit-profile",
            unmet.as_deref().unwrap_or("no-PS-hollow-submodule"),
        );

        report.absorb(self.check_semisimple_equivalences());
        report.absorb(self.check_direct_sums(&reps));
        Ok(report)
    }

    /// `N + L` is `H`-PS-hollow iff both `N` and `L` are, for every candidate
    /// family `H` drawn from the associated hollow ideals.
    fn sum_law_holds(&self, n: usize, l: usize) -> bool {
        let s = self.sl.sum(n, l);
        let mut families = vec![self.family(n).to_vec(), self.family(l).to_vec()];
        if self.is_psh(s) {
            families.push(self.family(s).to_vec());
        }
        families
            .iter()
            .all(|h| self.is_h_ps_hollow(s, h) == (self.is_h_ps_hollow(n, h) && self.is_h_ps_hollow(l, h)))
    }

    /// Single-pair form of the sum law, with the incomparability gate.
    pub fn check_sum_of_pair(&self, n: usize, l: usize) -> Report {
        let sl = self.sl;
        let mut report = Report::new(self.subject());
        let id = "sum-of-incomparable-ps-hollow";
        let pair = format!("{}+{}", sl.name(n), sl.name(l));
        if sl.leq(n, l) || sl.leq(l, n) {
            report.claim(id, Verdict::HypothesisUnmet, [format!("{pair}:comparable")]);
        } else if !self.is_psh(n) || !self.is_psh(l) {
            report.claim(id, Verdict::HypothesisUnmet, [format!("{pair}:not-PS-hollow")]);
        } else {
            report.claim(id, Verdict::from_bool(self.sum_law_holds(n, l)), [pair]);
        }
        report
    }

    /// The four-way equivalence for semisimple modules (multiplication, every
    /// PS-hollow submodule simple, every second submodule simple,
    /// comultiplication), under the annihilator condition on the maximal
    /// second submodules and, separately, under second representability with
    /// pairwise incomparable attached primes.
    pub fn check_semisimple_equivalences(&self) -> Report {
        let sl = self.sl;
        let mut report = Report::new(self.subject());
        let semisimple = sl.is_semisimple();
        let conditions = [
            sl.is_multiplication(),
            self.ps_hollow_submodules().iter().all(|&n| sl.is_simple(n)),
            sl.second_submodules().iter().all(|&n| sl.is_simple(n)),
            sl.is_comultiplication(),
        ];
        let witness = conditions.iter().map(|&c| if c { "1" } else { "0" }).join("");
        let equivalent = conditions.iter().all_equal();

        let id = "semisimple-multiplication-equivalences";
        if !semisimple {
            report.claim(id, Verdict::HypothesisUnmet, ["not-semisimple"]);
        } else {
            let b = sl.maximal_second_submodules();
            let ann_m = sl.annihilator(sl.whole());
            let ring_ideal = sl.module().ring().ideal(1).expect("unit ideal");
            let offending = b.iter().find(|&&n| {
                let rest = b
                    .iter()
                    .filter(|&&k| k != n)
                    .map(|&k| sl.annihilator(k))
                    .fold(ring_ideal, Ideal::intersection);
                rest == ann_m
            });
            match offending {
                Some(&n) => report.claim(
                    id,
                    Verdict::HypothesisUnmet,
                    [format!("annihilator-condition-fails-at-{}", sl.name(n))],
                ),
                None => report.claim(id, Verdict::from_bool(equivalent), [witness.clone()]),
            };
        }

        let id = "second-representable-semisimple-equivalences";
        match sl.attached_primes() {
            _ if !semisimple => report.claim(id, Verdict::HypothesisUnmet, ["not-semisimple"]),
            None => report.claim(id, Verdict::HypothesisUnmet, ["not-second-representable"]),
            Some(att) if crate::module::minimal_ideals(&att) != att => {
                report.claim(id, Verdict::HypothesisUnmet, ["attached-primes-comparable"])
            }
            Some(_) => report.claim(id, Verdict::from_bool(equivalent), [witness]),
        };
        report
    }

    /// Direct-sum criteria for minimal second and minimal PS-hollow
    /// representations.
    pub fn check_direct_sums(&self, reps: &[Representation]) -> Report {
        let sl = self.sl;
        let mut report = Report::new(self.subject());
        report.flag(INTERVAL_READING);

        let pairwise_disjoint = |ks: &[usize]| {
            ks.iter()
                .tuple_combinations()
                .all(|(&a, &b)| sl.intersect(a, b) == sl.zero())
        };
        let rest_of =
            |ks: &[usize], i: usize| sl.sum_all(ks.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &k)| k));

        // Minimal second representations.
        let mut t = Tally::default();
        let mut why = "not-second-representable";
        for ks in sl.minimal_second_representations() {
            let att: Vec<Ideal> = ks.iter().map(|&k| sl.annihilator(k)).collect();
            if crate::module::minimal_ideals(&att).len() != att.len() {
                why = "attached-primes-comparable";
                continue;
            }
            if !(0..ks.len()).all(|i| self.satisfies_condition(sl.intersect(ks[i], rest_of(&ks, i)))) {
                why = "overlap-not-PS-hollow";
                continue;
            }
            t.record(self.is_direct(&ks) == pairwise_disjoint(&ks), || sl.names(&ks));
        }
        t.finish(&mut report, "second-representation-direct-iff-disjoint", why);

        // Distributive modules.
        let mut t = Tally::default();
        let mut why = "not-distributive";
        if sl.is_distributive() {
            why = "no-qualifying-representation";
            for r in reps {
                let ok = r.summands.iter().all(|&k| {
                    let interval = sl.action().lower_interval(k);
                    sl.indices().filter(|&x| sl.leq(x, k)).all(|x| {
                        x == sl.zero()
                            || self.is_h_ps_hollow(x, self.family(k))
                            || (x != k
                                && is_kind(
                                    &interval.action,
                                    interval.position(x).expect("inside"),
                                    SpectrumKind::StronglyIrreducible,
                                )
                                .expect("proper part"))
                    })
                });
                if ok {
                    t.record(self.is_direct(&r.summands), || sl.names(&r.summands));
                }
            }
        }
        t.finish(&mut report, "distributive-representation-is-direct", why);

        // Disjoint interiors.
        let mut t = Tally::default();
        let mut u = Tally::default();
        for r in reps {
            let ks = &r.summands;
            let parts_ok = ks.iter().all(|&k| {
                sl.indices()
                    .filter(|&x| sl.leq(x, k))
                    .all(|x| self.satisfies_condition(x))
            });
            let interiors: Vec<usize> = ks.iter().map(|&k| self.interior(k)).collect();
            if parts_ok && pairwise_disjoint(&interiors) {
                t.record(self.is_direct(ks), || sl.names(ks));
            }
            let interior_parts_ok = ks.iter().all(|&k| {
                sl.indices()
                    .filter(|&x| x != sl.zero() && sl.leq(x, self.interior(k)))
                    .all(|x| self.is_h_ps_hollow(x, self.family(k)))
            });
            if interior_parts_ok {
                u.record(self.is_direct(ks), || sl.names(ks));
            }
        }
        t.finish(
            &mut report,
            "disjoint-interiors-give-direct-sum",
            "hypothesis-fails-for-every-representation",
        );
        u.finish(
            &mut report,
            "interior-parts-give-direct-sum",
            "hypothesis-fails-for-every-representation",
        );

        // Canonical summands of a cyclic module.
        if let Some(canon) = self.cyclic_canonical_summands() {
            let listed = reps.iter().any(|r| r.summands == canon);
            let d = sl.module().factors()[0];
            let families_ok = canon.iter().all(|&k| {
                let generator = d / sl.submodule(k).len() as u32;
                let ideal = sl.module().ring().ideal(generator).expect("divisor");
                self.family(k) == [sl.ideal_index(ideal)]
            });
            report.claim(
                "cyclic-canonical-representation",
                Verdict::from_bool(listed && families_ok && self.is_minimal(&canon)),
                [sl.names(&canon)],
            );
        }
        report
    }
}

/// Note attached to reports that compare `H` families.
pub const FAMILY_ORDER_READING: &str =
    "families H are compared by set inclusion of their ideals when deciding minimality";

/// Note attached to reports of the non-small-parts check.
pub const NON_SMALL_READING: &str = "non-small means non-small in N; a part K must satisfy A_K = A_N and H_K = H_N";

/// Note attached to reports of the distributive direct-sum criterion.
pub const INTERVAL_READING: &str =
    "strong irreducibility of parts of a summand K is evaluated inside the interval [0,K]";

/// Aggregates instance checks into one claim.
#[derive(Default)]
struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn record(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self, report: &mut Report, id: &str, unmet: &str) {
        match (self.checked, self.failure) {
            (0, _) => report.claim(id, Verdict::HypothesisUnmet, [unmet.to_owned()]),
            (_, Some(w)) => report.claim(id, Verdict::Fail, [w]),
            (k, None) => report.claim(id, Verdict::Pass, [format!("{k}-instances")]),
        };
    }
}
