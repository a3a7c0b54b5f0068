//! Plain-text run reports.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Infeasible,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Infeasible => 2,
            Verdict::Error => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Infeasible => "infeasible",
            Verdict::Error => "error",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Info,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub status: Status,
    pub lines: Vec<String>,
}

impl Section {
    pub fn new(title: impl Into<String>, status: Status, lines: Vec<String>) -> Self {
        Self { title: title.into(), status, lines }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub subject: String,
    pub verdict: Verdict,
    pub sections: Vec<Section>,
}

impl RunReport {
    /// Verdict `fail` if any section failed, `pass` otherwise.
    pub fn from_sections(command: &str, subject: impl Into<String>, sections: Vec<Section>) -> Self {
        let failed = sections.iter().any(|s| s.status == Status::Fail);
        let verdict = if failed { Verdict::Fail } else { Verdict::Pass };
        Self { command: command.into(), subject: subject.into(), verdict, sections }
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.command, self.subject)?;
        for s in &self.sections {
            writeln!(f, "\n[{}] {}", s.status.tag(), s.title)?;
            for line in &s.lines {
                writeln!(f, "  {line}")?;
            }
        }
        writeln!(f, "\nverdict: {}", self.verdict)
    }
}
