//! Acceptance suite: one line per criterion with its tolerance and time
//! limit. Run with `cargo test --test acceptance`.

mod oracle;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::Parser;
use hollowlat::cli::{run, AnalysisRequest, Outcome};
use hollowlat::generate::random_instance;
use hollowlat::module::{minimal_ideals, FiniteModule, Ring, SubmoduleLattice};
use hollowlat::pshollow::PsHollowAnalysis;
use hollowlat::report::{Report, Verdict};
use hollowlat::specfile::{read_spec, Spec};
use hollowlat::spectra::{self, index_label, quotient_all_first, spectrum, SpectrumKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oracle::Oracle;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn cli(args: &[&str]) -> Result<Outcome, String> {
    let request = AnalysisRequest::try_parse_from(std::iter::once("hollowlat").chain(args.iter().copied()))
        .map_err(|e| e.to_string())?;
    run(&request).map_err(|e| e.to_string())
}

fn cyclic_spec(n: u32) -> tempfile::NamedTempFile {
    let file = tempfile::NamedTempFile::new().expect("temp file");
    std::fs::write(file.path(), format!("ring {n}\nmodule {n}\n")).expect("write spec");
    file
}

fn cyclic(n: u32) -> SubmoduleLattice {
    SubmoduleLattice::new(FiniteModule::cyclic(n).expect("valid modulus")).expect("within bound")
}

fn names(sl: &SubmoduleLattice, items: &[usize]) -> BTreeSet<String> {
    items.iter().map(|&i| sl.name(i)).collect()
}

fn set_of(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Splits a `{a,b}` token into its members.
fn braced(token: &str) -> BTreeSet<String> {
    let inner = token.trim_start_matches('{').trim_end_matches('}');
    inner.split(',').filter(|s| !s.is_empty()).map(str::to_owned).collect()
}

fn facts<'r>(report: &'r Report, key: &str) -> Vec<&'r [String]> {
    report
        .facts
        .iter()
        .filter(|(k, _)| k == key)
        .map(|(_, v)| v.as_slice())
        .collect()
}

fn no_failures(report: &Report, context: &str) -> Check {
    match report.findings.iter().find(|f| f.verdict == Verdict::Fail) {
        None => Ok(()),
        Some(f) => Err(format!("{context}: {} failed {:?}", f.claim, f.witnesses)),
    }
}

fn canonical_representation() -> Check {
    for n in [12u32, 30, 60, 72, 180] {
        let spec = cyclic_spec(n);
        let outcome = cli(&["represent", "--in", spec.path().to_str().expect("utf-8 path")])?;
        let expected: BTreeSet<String> = oracle::prime_powers(n).iter().map(|q| format!("({})", n / q)).collect();
        let reps = facts(&outcome.report, "minimal-representation");
        ensure(!reps.is_empty(), || {
            format!("Z_{n}: no minimal representation reported")
        })?;
        for rep in reps {
            let summands = braced(&rep[0]);
            ensure(summands == expected, || {
                format!("Z_{n}: got {summands:?}, expected {expected:?}")
            })?;
            ensure(rep.len() == 1 + expected.len(), || {
                format!("Z_{n}: summand multiset {rep:?}")
            })?;
            for part in &rep[1..] {
                let (summand, family) = part.split_once(":H=").ok_or_else(|| format!("bad token {part}"))?;
                ensure(braced(family) == set_of(&[summand]), || {
                    format!("Z_{n}: {part} should have H={{{summand}}}")
                })?;
            }
        }
    }
    Ok(())
}

fn z12_facts() -> Check {
    let outcome = cli(&["represent", "--in", fixture("z12.spec").to_str().expect("utf-8 path")])?;
    let reps = facts(&outcome.report, "minimal-representation");
    ensure(
        reps.len() == 1 && braced(&reps[0][0]) == set_of(&["(3)", "(4)"]),
        || format!("minimal representation {reps:?}"),
    )?;
    let sl = cyclic(12);
    let seconds = names(&sl, &sl.second_submodules());
    ensure(seconds == set_of(&["(4)", "(6)"]), || {
        format!("second submodules {seconds:?}")
    })?;
    let o = Oracle::new(12, &[12]);
    let subs = o.submodules();
    let oracle_seconds: Vec<_> = subs.iter().filter(|n| o.is_second(n)).collect();
    let oracle_names: BTreeSet<String> = oracle_seconds.iter().map(|n| format!("({})", 12 / n.len())).collect();
    ensure(oracle_names == seconds, || format!("oracle seconds {oracle_names:?}"))?;
    let second_sum = oracle_seconds.iter().fold(o.zero_sub(), |acc, n| o.sum(&acc, n));
    ensure(second_sum != o.whole(), || {
        "oracle: seconds sum to the whole module".into()
    })?;
    ensure(
        sl.minimal_second_representations().is_empty() && sl.attached_primes().is_none(),
        || "reported second representable".into(),
    )?;
    ensure(!sl.is_semisimple(), || "reported semisimple".into())?;
    ensure(!sl.is_s_lifting(), || "reported s-lifting".into())
}

fn z30_facts() -> Check {
    let sl = cyclic(30);
    let a = PsHollowAnalysis::new(&sl);
    let psh = names(&sl, &a.ps_hollow_submodules());
    ensure(psh == set_of(&["(6)", "(10)", "(15)"]), || format!("PS-hollow {psh:?}"))?;
    let t = Oracle::new(30, &[30]).table();
    let oracle_psh: BTreeSet<String> = t
        .subs
        .iter()
        .enumerate()
        .filter(|&(k, _)| t.is_ps_hollow(k))
        .map(|(_, n)| format!("({})", 30 / n.len()))
        .collect();
    ensure(oracle_psh == psh, || format!("oracle PS-hollow {oracle_psh:?}"))?;
    let att = sl.attached_primes().ok_or("not second representable")?;
    let att_names: BTreeSet<String> = att.iter().map(|i| i.to_string()).collect();
    ensure(att_names == set_of(&["(2)", "(3)", "(5)"]), || {
        format!("att {att_names:?}")
    })?;
    ensure(minimal_ideals(&att) == att, || {
        "att differs from its minimal members".into()
    })?;
    ensure(sl.is_multiplication(), || "not multiplication".into())?;
    ensure(sl.is_comultiplication(), || "not comultiplication".into())?;
    ensure(sl.is_semisimple(), || "not semisimple".into())?;
    let report = a.check_semisimple_equivalences();
    ensure(
        report.verdict("semisimple-multiplication-equivalences") == Some(Verdict::Pass),
        || format!("equivalence verdict {:?}", report.findings),
    )
}

fn uniqueness() -> Check {
    let mut pairs = 0usize;
    for n in 2u32..=200 {
        let sl = cyclic(n);
        let a = PsHollowAnalysis::new(&sl);
        let reps = a
            .enumerate_minimal_representations(8)
            .map_err(|e| format!("Z_{n}: {e}"))?;
        ensure(!reps.is_empty(), || format!("Z_{n}: no minimal representation"))?;
        for x in &reps {
            for y in &reps {
                pairs += 1;
                no_failures(&a.verify_first_uniqueness(x, y), &format!("Z_{n}"))?;
                no_failures(&a.verify_second_uniqueness(x, y), &format!("Z_{n}"))?;
            }
        }
        let battery = a.check_all(8).map_err(|e| format!("Z_{n}: {e}"))?;
        for claim in [
            "first-uniqueness",
            "second-uniqueness",
            "ps-hollow-interiors-force-equal-summands",
        ] {
            ensure(battery.verdict(claim) != Some(Verdict::Fail), || {
                format!("Z_{n}: {claim} failed")
            })?;
        }
    }
    ensure(pairs >= 199, || format!("only {pairs} pairs"))
}

fn duality_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..240 {
        let action = random_instance(&mut rng, 8, 4);
        let report = spectra::check_all(&action, &index_label).map_err(|e| format!("instance {i}: {e}"))?;
        no_failures(&report, &format!("instance {i}"))?;
        let l = action.lattice();
        let by_oracle = |f: fn(&hollowlat::lattice::PosetAction, usize) -> bool, kind: SpectrumKind| {
            let expected: Vec<usize> = l
                .elements()
                .filter(|&x| kind.in_domain(l, x) && f(&action, x))
                .collect();
            ensure(spectrum(&action, kind) == expected, || {
                format!("instance {i}: {kind} spectrum disagrees with oracle")
            })
        };
        by_oracle(oracle::lattice_second, SpectrumKind::Second)?;
        by_oracle(oracle::lattice_prime, SpectrumKind::Prime)?;
        by_oracle(oracle::lattice_coprime, SpectrumKind::Coprime)?;
    }
    Ok(())
}

fn quotient_prime() -> Check {
    let mut primes_seen = 0usize;
    let mut converse_instances = 0usize;
    for n in 2u32..=60 {
        let sl = cyclic(n);
        let action = sl.action();
        let l = action.lattice();
        for x in spectrum(action, SpectrumKind::Prime) {
            primes_seen += 1;
            ensure(quotient_all_first(action, x).map_err(|e| e.to_string())?, || {
                format!("Z_{n}: quotient by prime {} has a non-first class", sl.name(x))
            })?;
        }
        if action.is_join_distributive() {
            converse_instances += 1;
            for x in l.elements().filter(|&x| x != l.top()) {
                if quotient_all_first(action, x).map_err(|e| e.to_string())? {
                    ensure(oracle::lattice_prime(action, x), || {
                        format!("Z_{n}: {} has an all-first quotient but is not prime", sl.name(x))
                    })?;
                }
            }
        }
    }
    ensure(primes_seen > 0 && converse_instances > 0, || {
        format!("vacuous: {primes_seen} primes, {converse_instances} converse instances")
    })
}

fn klein_group() -> Check {
    let module = FiniteModule::new(Ring::new(2).map_err(|e| e.to_string())?, vec![2, 2]).map_err(|e| e.to_string())?;
    let sl = SubmoduleLattice::new(module).map_err(|e| e.to_string())?;
    let a = PsHollowAnalysis::new(&sl);
    let o = Oracle::new(2, &[2, 2]);
    let t = o.table();
    ensure(sl.len() == t.subs.len(), || {
        format!("{} submodules, oracle {}", sl.len(), t.subs.len())
    })?;
    ensure(sl.is_pseudo_distributive() && t.is_pseudo_distributive(), || {
        "not pseudo-distributive".into()
    })?;
    ensure(!sl.is_distributive() && !t.is_distributive(), || "distributive".into())?;
    let (whole, oracle_whole) = (sl.whole(), t.position(&o.whole()));
    ensure(
        a.is_ps_hollow(whole).map_err(|e| e.to_string())? && t.is_ps_hollow(oracle_whole),
        || "whole module not PS-hollow".into(),
    )?;
    ensure(!sl.is_hollow(whole) && !t.is_hollow(oracle_whole), || {
        "whole module hollow".into()
    })
}

fn verify_battery() -> Check {
    for name in ["z12.spec", "z30.spec"] {
        let outcome = cli(&["verify", "--in", fixture(name).to_str().expect("utf-8 path")])?;
        ensure(outcome.exit_code == 0, || format!("{name}: exit {}", outcome.exit_code))?;
        no_failures(&outcome.report, name)?;
        ensure(outcome.report.count(Verdict::Pass) > 0, || {
            format!("{name}: nothing applicable")
        })?;
    }
    let sl = cyclic(12);
    let a = PsHollowAnalysis::new(&sl);
    for name in ["(3)", "(4)"] {
        let k = sl.find_by_name(name).ok_or_else(|| format!("no submodule {name}"))?;
        let report = a.check_non_small_parts(k);
        ensure(
            report.verdict("non-small-parts-inherit-profile") == Some(Verdict::Pass),
            || format!("{name}: {:?}", report.findings),
        )?;
    }
    Ok(())
}

fn second_consistency() -> Check {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .flatten()
        .map(|e| e.path())
        .collect();
    entries.sort();
    let mut modules = 0;
    for path in entries {
        let Ok(Spec::Module(module)) = read_spec(&path, hollowlat::module::DEFAULT_BOUND) else {
            continue;
        };
        modules += 1;
        let o = (module.factors().len() <= 2).then(|| Oracle::new(module.ring().modulus(), module.factors()));
        let sl = SubmoduleLattice::new(module).map_err(|e| e.to_string())?;
        for i in sl.indices().filter(|&i| i != sl.zero()) {
            let lattice_level = spectra::is_kind(sl.action(), i, SpectrumKind::Second).map_err(|e| e.to_string())?;
            ensure(sl.is_second(i) == lattice_level, || {
                format!("{}: {} disagrees", path.display(), sl.name(i))
            })?;
            if let Some(o) = &o {
                let set = oracle::as_set(&sl, sl.submodule(i));
                ensure(o.is_second(&set) == lattice_level, || {
                    format!("{}: oracle disagrees on {}", path.display(), sl.name(i))
                })?;
            }
        }
    }
    ensure(modules >= 3, || format!("only {modules} module fixtures"))
}

struct Criterion {
    id: u32,
    what: &'static str,
    limit: Duration,
    check: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            what: "Z_n canonical representation, n in {12,30,60,72,180}",
            limit: Duration::from_secs(5),
            check: canonical_representation,
        },
        Criterion {
            id: 2,
            what: "Z_12 representation, seconds, class properties",
            limit: Duration::from_secs(1),
            check: z12_facts,
        },
        Criterion {
            id: 3,
            what: "Z_30 PS-hollow set, attached primes, semisimple equivalence",
            limit: Duration::from_secs(1),
            check: z30_facts,
        },
        Criterion {
            id: 4,
            what: "uniqueness of minimal representations, Z_n for n <= 200",
            limit: Duration::from_secs(60),
            check: uniqueness,
        },
        Criterion {
            id: 5,
            what: "lattice duality suite, 240 seeded instances |L|<=8 |S|<=4",
            limit: Duration::from_secs(30),
            check: duality_suite,
        },
        Criterion {
            id: 6,
            what: "quotient/prime correspondence, Z_n for n <= 60",
            limit: Duration::from_secs(30),
            check: quotient_prime,
        },
        Criterion {
            id: 7,
            what: "Z_2+Z_2: pseudo-distributive not distributive, PS-hollow not hollow",
            limit: Duration::from_secs(1),
            check: klein_group,
        },
        Criterion {
            id: 8,
            what: "verify exits 0 on Z_12 and Z_30; non-small parts of (3),(4) in Z_12",
            limit: Duration::from_secs(5),
            check: verify_battery,
        },
        Criterion {
            id: 9,
            what: "module and lattice second predicates agree on fixtures",
            limit: Duration::from_secs(5),
            check: second_consistency,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(()) if elapsed <= c.limit => ("PASS", String::new()),
            Ok(()) => ("FAIL", " (time limit exceeded)".to_owned()),
            Err(e) => ("FAIL", format!(" ({e})")),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {verdict}: {} [exact; {:.2}s of {}s]{detail}",
            c.id,
            c.what,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
