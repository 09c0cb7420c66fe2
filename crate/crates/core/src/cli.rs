//! The `hollowlat` command line.
//!
//! Every command reads one spec file, prints a text report, optionally writes
//! the machine-readable report (`--report`) and a Hasse diagram (`--dot`), and
//! exits with the report's exit code. Input problems exit with
//! [`EXIT_INPUT`].

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;
use thiserror::Error;

use crate::dot::emit_dot;
use crate::lattice::{ElementId, LatticeError, PosetAction};
use crate::module::{ModuleError, SubmoduleLattice, DEFAULT_BOUND};
use crate::pshollow::{MinimalityViolation, MinimizeStep, PsHollowAnalysis, PsHollowError, FAMILY_ORDER_READING};
use crate::report::{Report, Verdict, EXIT_INPUT, EXIT_PASS};
use crate::specfile::{read_spec, Spec, SpecError};
use crate::spectra::{self, index_label, SpectraError, SpectrumKind};

pub const BOUND_ENV: &str = "HOLLOWLAT_BOUND";

#[derive(Debug, Parser)]
#[command(
    name = "hollowlat",
    version,
    about = "Spectra of lattices with poset actions and PS-hollow representations of finite modules over Z/nZ"
)]
pub struct AnalysisRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Module or lattice spec file.
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    /// Cap on the number of summands in searched representations.
    #[arg(long, value_name = "N")]
    pub max_terms: Option<usize>,
    /// Cap on the module order (default 4096, or $HOLLOWLAT_BOUND).
    #[arg(long, value_name = "N")]
    pub bound: Option<usize>,
    /// Also write the Hasse diagram here.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Write the machine-readable report here.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List submodules, annihilators and module class properties.
    Submodules(Common),
    /// Every primeness and coprimeness spectrum, with the duality checks.
    Spectra(Common),
    /// PS-hollow submodules with their profiles.
    Pshollow(Common),
    /// Minimal PS-hollow and second representations.
    Represent(Common),
    /// Reduce a given PS-hollow representation to a minimal one.
    Minimize {
        #[command(flatten)]
        common: Common,
        /// A summand by canonical name, e.g. `(3)`; repeat for each summand.
        #[arg(long = "summand", value_name = "NAME", required = true)]
        summands: Vec<String>,
    },
    /// Run the full theorem battery.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Restrict the output to these claim ids.
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
    },
    /// Print the Hasse diagram in DOT form.
    Hasse {
        #[command(flatten)]
        common: Common,
        /// Fill the members of this spectrum, e.g. `second`.
        #[arg(long, value_name = "KIND")]
        highlight: Option<SpectrumKind>,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Submodules(c) | Command::Spectra(c) | Command::Pshollow(c) | Command::Represent(c) => c,
            Command::Minimize { common, .. } | Command::Verify { common, .. } | Command::Hasse { common, .. } => common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Submodules(_) => "submodules",
            Command::Spectra(_) => "spectra",
            Command::Pshollow(_) => "pshollow",
            Command::Represent(_) => "represent",
            Command::Minimize { .. } => "minimize",
            Command::Verify { .. } => "verify",
            Command::Hasse { .. } => "hasse",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    PsHollow(#[from] PsHollowError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    /// Hasse diagram, when one was produced.
    pub dot: Option<String>,
    pub exit_code: i32,
}

fn resolve_bound(common: &Common) -> Result<usize, CliError> {
    if let Some(b) = common.bound {
        return Ok(b);
    }
    match std::env::var(BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BOUND_ENV}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_BOUND),
    }
}

/// Either input kind, reduced to a lattice with an action plus names.
enum Subject {
    Module(SubmoduleLattice),
    Lattice(PosetAction),
}

impl Subject {
    fn action(&self) -> &PosetAction {
        match self {
            Subject::Module(sl) => sl.action(),
            Subject::Lattice(a) => a,
        }
    }

    fn label(&self, x: ElementId) -> String {
        match self {
            Subject::Module(sl) => sl.name(x),
            Subject::Lattice(_) => index_label(x),
        }
    }

    fn describe(&self) -> String {
        match self {
            Subject::Module(sl) => sl.module().describe(),
            Subject::Lattice(a) => format!(
                "lattice of size {} acted on by a poset of size {}",
                a.lattice().size(),
                a.poset().size()
            ),
        }
    }

    fn names(&self, xs: &[ElementId]) -> String {
        format!("{{{}}}", xs.iter().map(|&x| self.label(x)).join(","))
    }
}

fn load(common: &Common) -> Result<Subject, CliError> {
    let bound = resolve_bound(common)?;
    Ok(match read_spec(&common.input, bound)? {
        Spec::Module(m) => Subject::Module(SubmoduleLattice::new(m)?),
        Spec::Lattice(a) => Subject::Lattice(a),
    })
}

fn require_module<'a>(subject: &'a Subject, command: &str) -> Result<&'a SubmoduleLattice, CliError> {
    match subject {
        Subject::Module(sl) => Ok(sl),
        Subject::Lattice(_) => Err(CliError::Usage(format!(
            "`{command}` needs a module spec (`ring`/`module`), not a lattice spec"
        ))),
    }
}

fn hasse(subject: &Subject, highlight: Option<SpectrumKind>) -> String {
    let action = subject.action();
    let memberships: Vec<(String, Vec<ElementId>)> = SpectrumKind::ALL
        .iter()
        .map(|&k| (k.name().to_owned(), spectra::spectrum(action, k)))
        .collect();
    let highlights = highlight.map(|k| spectra::spectrum(action, k)).unwrap_or_default();
    emit_dot(action.lattice(), &|x| subject.label(x), &highlights, &memberships)
}

/// Executes a parsed request without touching stdout; files named by
/// `--dot` and `--report` are written.
pub fn run(request: &AnalysisRequest) -> Result<Outcome, CliError> {
    let command = &request.command;
    let common = command.common();
    let subject = load(common)?;
    let max_terms = common.max_terms.unwrap_or(usize::MAX);
    if max_terms == 0 {
        return Err(CliError::Usage("--max-terms must be at least 1".into()));
    }
    let mut report = Report::new(subject.describe());
    let mut dot = None;
    match command {
        Command::Submodules(_) => submodules(require_module(&subject, command.name())?, &mut report),
        Command::Spectra(_) => spectra_report(&subject, &mut report)?,
        Command::Pshollow(_) => pshollow(require_module(&subject, command.name())?, max_terms, &mut report)?,
        Command::Represent(_) => represent(require_module(&subject, command.name())?, max_terms, &mut report)?,
        Command::Minimize { summands, .. } => {
            minimize(require_module(&subject, command.name())?, summands, &mut report)?
        }
        Command::Verify { claims, .. } => verify(&subject, max_terms, claims, &mut report)?,
        Command::Hasse { highlight, .. } => {
            let text = hasse(&subject, *highlight);
            report.fact("nodes", [subject.action().lattice().size()]);
            report.fact("edges", [subject.action().lattice().covers().len()]);
            dot = Some(text);
        }
    }
    if let Some(path) = &common.dot {
        let text = dot.clone().unwrap_or_else(|| hasse(&subject, None));
        write(path, &text)?;
        dot = Some(text);
    }
    if let Some(path) = &common.report {
        write(path, &report.to_machine())?;
    }
    let exit_code = report.exit_code();
    Ok(Outcome { report, dot, exit_code })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Write {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn submodules(sl: &SubmoduleLattice, report: &mut Report) {
    let m = sl.module();
    report.fact("order", [m.elements().len()]);
    report.fact("submodule-count", [sl.len()]);
    for n in sl.indices() {
        let sub = sl.submodule(n);
        report.fact(
            "submodule",
            [
                sl.name(n),
                format!("order={}", sub.len()),
                format!("ann={}", sl.annihilator(n)),
            ],
        );
    }
    report.fact("second", [sl.names(&sl.second_submodules())]);
    report.fact("hollow", [sl.names(&sl.hollow_submodules())]);
    report.fact("maximal-hollow", [sl.names(&sl.maximal_hollow_submodules())]);
    for (key, value) in [
        ("multiplication", sl.is_multiplication()),
        ("comultiplication", sl.is_comultiplication()),
        ("semisimple", sl.is_semisimple()),
        ("distributive", sl.is_distributive()),
        ("pseudo-distributive", sl.is_pseudo_distributive()),
        ("lifting", sl.is_lifting()),
        ("s-lifting", sl.is_s_lifting()),
        ("second-representable", !sl.minimal_second_representations().is_empty()),
    ] {
        report.fact(key, [yes_no(value)]);
    }
    consistency_claims(sl, report);
}

/// Module-level computations agree with the bridged lattice.
fn consistency_claims(sl: &SubmoduleLattice, report: &mut Report) {
    let m = sl.module();
    let disagreement = sl
        .indices()
        .filter(|&n| n != sl.zero())
        .find(|&n| spectra::is_kind(sl.action(), n, SpectrumKind::Second).expect("nonzero") != sl.is_second(n));
    match disagreement {
        None => report.claim(
            "second-agrees-with-lattice",
            Verdict::Pass,
            [format!("{}-submodules", sl.len())],
        ),
        Some(n) => report.claim("second-agrees-with-lattice", Verdict::Fail, [sl.name(n)]),
    };
    let mismatch = sl.indices().cartesian_product(sl.indices()).find(|&(a, b)| {
        let set_sum = m.sum(sl.submodule(a), sl.submodule(b));
        sl.index_of(&set_sum) != Some(sl.sum(a, b))
    });
    match mismatch {
        None => report.claim("join-agrees-with-sum", Verdict::Pass, Vec::<String>::new()),
        Some((a, b)) => report.claim(
            "join-agrees-with-sum",
            Verdict::Fail,
            [format!("{}+{}", sl.name(a), sl.name(b))],
        ),
    };
}

fn spectra_report(subject: &Subject, report: &mut Report) -> Result<(), CliError> {
    let action = subject.action();
    for kind in SpectrumKind::ALL {
        report.fact(
            format!("spectrum.{kind}"),
            [subject.names(&spectra::spectrum(action, kind))],
        );
    }
    report.absorb(spectra::check_all(action, &|x| subject.label(x))?);
    Ok(())
}

/// Copies the findings with the given ids, and only the notes in `flags`.
fn keep(report: &mut Report, source: Report, ids: &[&str], flags: &[&str]) {
    for flag in source.flags.into_iter().filter(|f| flags.contains(&f.as_str())) {
        report.flag(flag);
    }
    report
        .findings
        .extend(source.findings.into_iter().filter(|f| ids.contains(&f.claim.as_str())));
}

fn pshollow(sl: &SubmoduleLattice, max_terms: usize, report: &mut Report) -> Result<(), CliError> {
    let a = PsHollowAnalysis::new(sl);
    let psh = a.ps_hollow_submodules();
    report.fact("ps-hollow", [sl.names(&psh)]);
    for &n in &psh {
        let p = a.profile(n);
        let contained: Vec<usize> = p.contained_in.clone();
        report.fact(
            "profile",
            [
                sl.name(n),
                format!("A={}", a.family_name(&contained)),
                format!("H={}", a.family_name(&p.minimal)),
                format!("In={}", sl.name(p.interior)),
            ],
        );
    }
    report.fact(
        "associated-hollow-ideals",
        [format!("{{{}}}", a.associated_hollow_ideals().iter().join(","))],
    );
    let all = a.check_all(max_terms)?;
    keep(
        report,
        all,
        &[
            "minimal-ideals-are-hollow",
            "ps-hollow-within-interior",
            "strongly-hollow-is-ps-hollow",
            "multiplication-ps-hollow-is-strongly-hollow",
            "second-module-all-ps-hollow",
        ],
        &[],
    );
    Ok(())
}

fn represent(sl: &SubmoduleLattice, max_terms: usize, report: &mut Report) -> Result<(), CliError> {
    let a = PsHollowAnalysis::new(sl);
    let reps = a.enumerate_minimal_representations(max_terms)?;
    report.fact("ps-hollow-representable", [yes_no(a.is_ps_hollow_representable())]);
    for r in &reps {
        let families = r
            .profiles
            .iter()
            .map(|p| format!("{}:H={}", sl.name(p.submodule), a.family_name(&p.minimal)));
        report.fact(
            "minimal-representation",
            std::iter::once(sl.names(&r.summands)).chain(families),
        );
    }
    if let Some(first) = reps.first() {
        let main: Vec<String> = first
            .profiles
            .iter()
            .flat_map(|p| p.minimal.iter().map(|&i| sl.ideals()[i]))
            .sorted()
            .dedup()
            .map(|i| i.to_string())
            .collect();
        report.fact("main-associated-hollow-ideals", [format!("{{{}}}", main.join(","))]);
    }
    let seconds = sl.minimal_second_representations();
    report.fact("second-representable", [yes_no(!seconds.is_empty())]);
    for s in &seconds {
        report.fact("minimal-second-representation", [sl.names(s)]);
    }
    if let Some(att) = sl.attached_primes() {
        report.fact("attached-primes", [format!("{{{}}}", att.iter().join(","))]);
    }
    if reps.is_empty() {
        let why = if a.is_ps_hollow_representable() {
            format!("none-with-at-most-{max_terms}-terms")
        } else {
            "not-PS-hollow-representable".to_owned()
        };
        report.claim("minimal-representation-found", Verdict::Fail, [why]);
    } else {
        report.claim(
            "minimal-representation-found",
            Verdict::Pass,
            [format!("{}-found", reps.len())],
        );
    }
    let all = a.check_all(max_terms)?;
    keep(
        report,
        all,
        &[
            "first-uniqueness",
            "second-uniqueness",
            "ps-hollow-interiors-force-equal-summands",
            "multiplication-unique-minimal-representation",
            "cyclic-canonical-representation",
        ],
        &[FAMILY_ORDER_READING],
    );
    Ok(())
}

fn minimize(sl: &SubmoduleLattice, names: &[String], report: &mut Report) -> Result<(), CliError> {
    let a = PsHollowAnalysis::new(sl);
    let summands: Vec<usize> = names
        .iter()
        .map(|name| {
            sl.find_by_name(name.trim())
                .ok_or_else(|| CliError::Usage(format!("no submodule named `{name}`; see `submodules` for names")))
        })
        .collect::<Result<_, _>>()?;
    report.fact("input", [sl.names(&summands)]);
    let violations = a.minimality_violations(&summands);
    let describe = |v: &MinimalityViolation| match *v {
        MinimalityViolation::Redundant(j) => format!("{}-redundant", sl.name(summands[j])),
        MinimalityViolation::ComparableInteriors(i, j) => {
            format!("In({})~In({})-comparable", sl.name(summands[i]), sl.name(summands[j]))
        }
    };
    let minimized = a.minimize(&summands);
    if let Err(PsHollowError::NotARepresentation(why)) = &minimized {
        return Err(CliError::Usage(format!("not a PS-hollow representation: {why}")));
    }
    if violations.is_empty() {
        report.claim("input-is-minimal", Verdict::Pass, Vec::<String>::new());
    } else {
        report.claim("input-is-minimal", Verdict::Fail, violations.iter().map(describe));
    }
    match minimized {
        Ok(m) => {
            for step in &m.trace {
                let text = match step {
                    MinimizeStep::RemovedRedundant { removed } => format!("remove:{}", sl.name(*removed)),
                    MinimizeStep::MergedEqualFamilies { parts, into } => {
                        format!("merge:{}->{}", sl.names(parts), sl.name(*into))
                    }
                    MinimizeStep::ReplacedByInterior { parts, into } => {
                        format!("replace:{}->{}", sl.names(&[parts.0, parts.1]), sl.name(*into))
                    }
                };
                report.fact("step", [text]);
            }
            report.fact("result", [sl.names(&m.representation.summands)]);
            report.claim(
                "minimization-completes",
                Verdict::from_bool(m.representation.minimal),
                [sl.names(&m.representation.summands)],
            );
        }
        Err(e) => {
            report.claim("minimization-completes", Verdict::Fail, [e.to_string()]);
        }
    }
    Ok(())
}

fn verify(subject: &Subject, max_terms: usize, claims: &[String], report: &mut Report) -> Result<(), CliError> {
    let mut full = Report::new(subject.describe());
    if let Subject::Module(sl) = subject {
        consistency_claims(sl, &mut full);
        let a = PsHollowAnalysis::new(sl);
        full.absorb(a.check_all(max_terms)?);
    }
    full.absorb(spectra::check_all(subject.action(), &|x| subject.label(x))?);
    if let Some(unknown) = claims.iter().find(|c| full.finding(c).is_none()) {
        return Err(CliError::Usage(format!(
            "unknown claim `{unknown}`; known claims: {}",
            full.findings.iter().map(|f| &f.claim).join(", ")
        )));
    }
    for flag in full.flags {
        report.flag(flag);
    }
    report.facts.extend(full.facts);
    report.findings.extend(
        full.findings
            .into_iter()
            .filter(|f| claims.is_empty() || claims.contains(&f.claim)),
    );
    Ok(())
}

/// Parses `args`, runs the command, prints the outcome and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match AnalysisRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match run(&request) {
        Ok(outcome) => {
            match (&request.command, &outcome.dot, &request.command.common().dot) {
                (Command::Hasse { .. }, Some(text), None) => print!("{text}"),
                _ => print!("{}", outcome.report.to_text()),
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("hollowlat: {e}");
            EXIT_INPUT
        }
    }
}
