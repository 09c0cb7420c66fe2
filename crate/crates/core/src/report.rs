//! Verdict reports shared by the theorem checkers and the command line.
//!
//! The machine-readable form is line oriented:
//!
//! ```text
//! hollowlat-report 1
//! subject <text>
//! flag <text>
//! fact <key> <token>...
//! claim <id> <pass|fail|hypothesis-unmet> <witness>...
//! ```
//!
//! Tokens never contain whitespace, so the output is stable under diffing.

use std::fmt;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNMET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisUnmet,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisUnmet => "hypothesis-unmet",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub claim: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub flags: Vec<String>,
    pub facts: Vec<(String, Vec<String>)>,
    pub findings: Vec<Finding>,
}

fn token(raw: &str) -> String {
    let t: String = raw.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
    if t.is_empty() {
        "-".to_owned()
    } else {
        t
    }
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn claim<W: ToString>(
        &mut self,
        claim: impl Into<String>,
        verdict: Verdict,
        witnesses: impl IntoIterator<Item = W>,
    ) -> Verdict {
        self.findings.push(Finding {
            claim: claim.into(),
            verdict,
            witnesses: witnesses.into_iter().map(|w| token(&w.to_string())).collect(),
        });
        verdict
    }

    pub fn fact<W: ToString>(&mut self, key: impl Into<String>, values: impl IntoIterator<Item = W>) {
        self.facts.push((
            token(&key.into()),
            values.into_iter().map(|w| token(&w.to_string())).collect(),
        ));
    }

    /// Records an interpretive decision once.
    pub fn flag(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.flags.contains(&text) {
            self.flags.push(text);
        }
    }

    /// Appends the flags, facts and findings of `other`.
    pub fn absorb(&mut self, other: Report) {
        for flag in other.flags {
            self.flag(flag);
        }
        self.facts.extend(other.facts);
        self.findings.extend(other.findings);
    }

    pub fn finding(&self, claim: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.claim == claim)
    }

    pub fn verdict(&self, claim: &str) -> Option<Verdict> {
        self.finding(claim).map(|f| f.verdict)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.findings.iter().filter(|f| f.verdict == verdict).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Verdict::Fail) > 0
    }

    /// 1 on any failure; 0 when something passed; 2 when every claim had an
    /// unmet hypothesis.
    pub fn exit_code(&self) -> i32 {
        if self.has_failures() {
            EXIT_FAIL
        } else if self.count(Verdict::Pass) == 0 && self.count(Verdict::HypothesisUnmet) > 0 {
            EXIT_UNMET
        } else {
            EXIT_PASS
        }
    }

    pub fn to_machine(&self) -> String {
        let mut out = format!("hollowlat-report {SCHEMA_VERSION}\nsubject {}\n", self.subject);
        for flag in &self.flags {
            out.push_str(&format!("flag {flag}\n"));
        }
        for (key, values) in &self.facts {
            out.push_str("fact ");
            out.push_str(key);
            for v in values {
                out.push(' ');
                out.push_str(v);
            }
            out.push('\n');
        }
        for f in &self.findings {
            out.push_str(&format!("claim {} {}", f.claim, f.verdict));
            for w in &f.witnesses {
                out.push(' ');
                out.push_str(w);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.subject);
        for (key, values) in &self.facts {
            out.push_str(&format!("  {key}: {}\n", values.join(" ")));
        }
        for f in &self.findings {
            let mark = match f.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::HypothesisUnmet => "SKIP",
            };
            out.push_str(&format!("  [{mark}] {}", f.claim));
            if !f.witnesses.is_empty() {
                out.push_str(&format!("  ({})", f.witnesses.join(" ")));
            }
            out.push('\n');
        }
        if !self.flags.is_empty() {
            out.push_str("  notes:\n");
            for flag in &self.flags {
                out.push_str(&format!("    - {flag}\n"));
            }
        }
        let (p, f, u) = (
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::HypothesisUnmet),
        );
        if p + f + u > 0 {
            out.push_str(&format!("  summary: {p} pass, {f} fail, {u} hypothesis-unmet\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x");
        assert_eq!(r.exit_code(), EXIT_PASS);
        r.claim("a", Verdict::HypothesisUnmet, ["why"]);
        assert_eq!(r.exit_code(), EXIT_UNMET);
        r.claim("b", Verdict::Pass, Vec::<String>::new());
        assert_eq!(r.exit_code(), EXIT_PASS);
        r.claim("c", Verdict::Fail, ["(3)"]);
        assert_eq!(r.exit_code(), EXIT_FAIL);
    }

    #[test]
    fn machine_form_has_no_inner_whitespace() {
        let mut r = Report::new("Z_12");
        r.flag("reading chosen");
        r.fact("second", ["(4)", "(6)"]);
        r.claim("claim-x", Verdict::Fail, ["a b"]);
        assert_eq!(
            r.to_machine(),
            "hollowlat-report 1\nsubject Z_12\nflag reading chosen\nfact second (4) (6)\nclaim claim-x fail a_b\n"
        );
    }
}
