//! Text spec files for modules and for lattices with a poset action.
//!
//! Module files:
//!
//! ```text
//! ring 12
//! module 12
//! ```
//!
//! Lattice files list the order (closed transitively), the acting poset, and
//! every entry of the action table:
//!
//! ```text
//! lattice 2
//! leq 0 1
//! poset 1
//! act 0 0 0
//! act 0 1 1
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fs;
use std::path::Path;

use itertools::Itertools;
use thiserror::Error;

use crate::lattice::{FinitePoset, LatticeError, PosetAction};
use crate::module::{FiniteModule, ModuleError, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid structure: {0}")]
    Validation(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl From<LatticeError> for SpecError {
    fn from(e: LatticeError) -> Self {
        SpecError::Validation(e.to_string())
    }
}

impl From<ModuleError> for SpecError {
    fn from(e: ModuleError) -> Self {
        SpecError::Validation(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Spec {
    Module(FiniteModule),
    Lattice(PosetAction),
}

fn parse_error(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<T: std::str::FromStr>(
    line: usize,
    keyword: &str,
    args: &[&str],
    count: Option<usize>,
) -> Result<Vec<T>, SpecError> {
    if let Some(count) = count {
        if args.len() != count {
            return Err(parse_error(
                line,
                format!("`{keyword}` takes {count} argument(s), found {}", args.len()),
            ));
        }
    }
    args.iter()
        .map(|a| {
            a.parse::<T>()
                .map_err(|_| parse_error(line, format!("`{a}` is not a valid number")))
        })
        .collect()
}

pub fn read_spec(path: &Path, bound: usize) -> Result<Spec, SpecError> {
    let text = fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_spec(&text, bound)
}

/// Parses either file kind; `bound` caps the module order.
pub fn parse_spec(text: &str, bound: usize) -> Result<Spec, SpecError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            (
                i + 1,
                raw.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, words)| !words.is_empty())
        .collect();
    match lines.first() {
        None => Err(parse_error(1, "empty spec file")),
        Some((_, words)) if words[0] == "ring" => parse_module(&lines, bound).map(Spec::Module),
        Some((_, words)) if words[0] == "lattice" => parse_lattice(&lines).map(Spec::Lattice),
        Some((line, words)) => Err(parse_error(
            *line,
            format!("expected `ring` or `lattice`, found `{}`", words[0]),
        )),
    }
}

fn parse_module(lines: &[(usize, Vec<&str>)], bound: usize) -> Result<FiniteModule, SpecError> {
    let (ring_line, ring_words) = &lines[0];
    let n: u32 = numbers(*ring_line, "ring", &ring_words[1..], Some(1))?[0];
    let Some((module_line, module_words)) = lines.get(1) else {
        return Err(parse_error(*ring_line + 1, "missing `module` line"));
    };
    if module_words[0] != "module" {
        return Err(parse_error(
            *module_line,
            format!("expected `module`, found `{}`", module_words[0]),
        ));
    }
    let factors: Vec<u32> = numbers(*module_line, "module", &module_words[1..], None)?;
    if let Some((line, words)) = lines.get(2) {
        return Err(parse_error(*line, format!("unexpected `{}` after `module`", words[0])));
    }
    Ok(FiniteModule::with_bound(Ring::new(n)?, factors, bound)?)
}

fn parse_lattice(lines: &[(usize, Vec<&str>)]) -> Result<PosetAction, SpecError> {
    let (first_line, first_words) = &lines[0];
    let size: usize = numbers(*first_line, "lattice", &first_words[1..], Some(1))?[0];
    let mut leq = Vec::new();
    let mut poset_size: Option<usize> = None;
    let mut sleq = Vec::new();
    let mut table: Vec<Option<usize>> = Vec::new();
    for (line, words) in &lines[1..] {
        let (line, args) = (*line, &words[1..]);
        match words[0] {
            "leq" => {
                let v: Vec<usize> = numbers(line, "leq", args, Some(2))?;
                if v.iter().any(|&x| x >= size) {
                    return Err(parse_error(
                        line,
                        format!("element out of range for lattice of size {size}"),
                    ));
                }
                leq.push((v[0], v[1]));
            }
            "poset" => {
                if poset_size.is_some() {
                    return Err(parse_error(line, "`poset` given twice"));
                }
                let m: usize = numbers(line, "poset", args, Some(1))?[0];
                if m == 0 {
                    return Err(parse_error(line, "the acting poset must be nonempty"));
                }
                poset_size = Some(m);
                table = vec![None; m * size];
            }
            "sleq" | "act" => {
                let Some(m) = poset_size else {
                    return Err(parse_error(line, format!("`{}` before `poset`", words[0])));
                };
                if words[0] == "sleq" {
                    let v: Vec<usize> = numbers(line, "sleq", args, Some(2))?;
                    if v.iter().any(|&s| s >= m) {
                        return Err(parse_error(
                            line,
                            format!("poset element out of range for poset of size {m}"),
                        ));
                    }
                    sleq.push((v[0], v[1]));
                } else {
                    let v: Vec<usize> = numbers(line, "act", args, Some(3))?;
                    if v[0] >= m || v[1] >= size || v[2] >= size {
                        return Err(parse_error(line, "`act` argument out of range"));
                    }
                    let slot = &mut table[v[0] * size + v[1]];
                    if slot.is_some() {
                        return Err(parse_error(line, format!("`act {} {}` given twice", v[0], v[1])));
                    }
                    *slot = Some(v[2]);
                }
            }
            other => return Err(parse_error(line, format!("unknown directive `{other}`"))),
        }
    }
    let last = lines.last().map_or(1, |(l, _)| *l);
    let Some(m) = poset_size else {
        return Err(parse_error(last, "missing `poset` line"));
    };
    if let Some(k) = table.iter().position(Option::is_none) {
        return Err(parse_error(
            last,
            format!("missing `act {} {}`", k / size.max(1), k % size.max(1)),
        ));
    }
    let lattice = crate::lattice::FiniteLattice::new(size, &leq)?;
    let poset = FinitePoset::new(m, &sleq)?;
    let table = table.into_iter().map(|e| e.expect("checked")).collect();
    Ok(PosetAction::new(lattice, poset, table)?)
}

pub fn emit_module(module: &FiniteModule) -> String {
    format!(
        "ring {}\nmodule {}\n",
        module.ring().modulus(),
        module.factors().iter().join(" ")
    )
}

/// Canonical text: covering pairs only, action entries in table order.
pub fn emit_lattice(action: &PosetAction) -> String {
    let l = action.lattice();
    let mut out = format!("lattice {}\n", l.size());
    for (a, b) in l.covers() {
        out.push_str(&format!("leq {a} {b}\n"));
    }
    out.push_str(&format!("poset {}\n", action.poset().size()));
    for (s, t) in action.poset().covers() {
        out.push_str(&format!("sleq {s} {t}\n"));
    }
    for s in action.acting() {
        for x in l.elements() {
            out.push_str(&format!("act {s} {x} {}\n", action.apply(s, x)));
        }
    }
    out
}

pub fn emit_spec(spec: &Spec) -> String {
    match spec {
        Spec::Module(m) => emit_module(m),
        Spec::Lattice(a) => emit_lattice(a),
    }
}
