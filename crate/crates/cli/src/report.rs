use std::fmt::Write as _;

use crossmod::verdict::{Verdict, Witness};
use crossmod::xul::Certificate;
use crossmod::Error;
use serde::Serialize;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Parameters {
    pub degree: usize,
    pub slack: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report_degree: Option<usize>,
}

/// A dimension comparison between two independent computations.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub degree: Option<usize>,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub verdict: Status,
}

/// Per-degree dimensions of one space.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Dimensions {
    pub name: String,
    pub by_degree: Vec<usize>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub name: String,
    pub elements: Vec<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CertificateOut {
    pub degree: usize,
    pub slack: usize,
    pub report_degree: usize,
    pub profile: Vec<[usize; 3]>,
    pub more_slack: Vec<[usize; 3]>,
    pub more_degree: Vec<[usize; 3]>,
    pub carriers_stabilized: bool,
    pub stable: bool,
}

impl From<&Certificate> for CertificateOut {
    fn from(c: &Certificate) -> Self {
        CertificateOut {
            degree: c.degree,
            slack: c.slack,
            report_degree: c.report_degree,
            profile: c.profile.clone(),
            more_slack: c.more_slack.clone(),
            more_degree: c.more_degree.clone(),
            carriers_stabilized: c.carriers_stabilized,
            stable: c.is_stable(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct WitnessOut {
    pub identity: String,
    pub tuple: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        WitnessOut {
            identity: w.identity.clone(),
            tuple: w.tuple.clone(),
            lhs: w.lhs.clone(),
            rhs: w.rhs.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Parameters>,
    pub dimensions: Vec<Dimensions>,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bases: Vec<Basis>,
    pub certificates: Vec<CertificateOut>,
    pub checked: usize,
    pub witnesses: Vec<WitnessOut>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            parameters: None,
            dimensions: Vec::new(),
            records: Vec::new(),
            bases: Vec::new(),
            certificates: Vec::new(),
            checked: 0,
            witnesses: Vec::new(),
            status: Status::Pass,
            stage: None,
            error: None,
            exit_code: 0,
        }
    }

    pub fn verdict(&mut self, v: &Verdict) {
        self.checked += v.checked;
        self.witnesses
            .extend(v.witnesses.iter().map(WitnessOut::from));
    }

    pub fn certificate(&mut self, c: &Certificate) {
        self.certificates.push(c.into());
    }

    pub fn dims(&mut self, name: &str, by_degree: Vec<usize>) {
        self.dimensions.push(Dimensions {
            name: name.to_string(),
            by_degree,
        });
    }

    pub fn record(&mut self, name: &str, degree: Option<usize>, lhs_dim: usize, rhs_dim: usize) {
        let verdict = if lhs_dim == rhs_dim {
            Status::Pass
        } else {
            Status::Fail
        };
        self.records.push(Record {
            name: name.to_string(),
            degree,
            lhs_dim,
            rhs_dim,
            verdict,
        });
    }

    /// Sets the status from witnesses, records and certificates.
    pub fn finish(mut self) -> Self {
        self.status = if !self.witnesses.is_empty()
            || self.records.iter().any(|r| r.verdict == Status::Fail)
        {
            Status::Fail
        } else if self.certificates.iter().any(|c| !c.stable) {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        self.exit_code = self.status.exit_code();
        self
    }

    /// A report for a run that stopped with an error. Input problems exit with 2; a failed axiom
    /// check or an inconsistency inside the pipeline is a violation and exits with 1.
    pub fn failed(mut self, e: &Error) -> Self {
        let mut stages = Vec::new();
        let mut cur = e;
        while let Error::Stage { stage, source } = cur {
            stages.push(stage.clone());
            cur = source;
        }
        self.status = match cur {
            Error::Parse(_) | Error::Dimension(_) | Error::Input(_) => Status::Error,
            Error::Axiom { stage, detail } => {
                stages.push(stage.clone());
                self.witnesses.push(WitnessOut {
                    identity: stage.clone(),
                    tuple: Vec::new(),
                    lhs: detail.clone(),
                    rhs: String::new(),
                });
                Status::Fail
            }
            _ => Status::Fail,
        };
        if !stages.is_empty() {
            self.stage = Some(stages.join(" / "));
        }
        self.error = Some(e.to_string());
        self.exit_code = self.status.exit_code();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.input);
        if let Some(p) = &self.parameters {
            let d = p
                .report_degree
                .map(|d| format!("  d = {d}"))
                .unwrap_or_default();
            let _ = writeln!(out, "  D = {}  S = {}{d}", p.degree, p.slack);
        }
        if !self.dimensions.is_empty() {
            let w = self
                .dimensions
                .iter()
                .map(|d| d.name.chars().count())
                .max()
                .unwrap_or(0);
            let _ = writeln!(out, "dimensions by degree:");
            for d in &self.dimensions {
                let cells: Vec<String> = d.by_degree.iter().map(|x| format!("{x:>5}")).collect();
                let _ = writeln!(
                    out,
                    "  {}{} {}",
                    d.name,
                    " ".repeat(w - d.name.chars().count()),
                    cells.join("")
                );
            }
        }
        if !self.records.is_empty() {
            let w = self
                .records
                .iter()
                .map(|r| r.name.chars().count())
                .max()
                .unwrap_or(0);
            let _ = writeln!(out, "checks:");
            for r in &self.records {
                let deg = r
                    .degree
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into());
                let pad = " ".repeat(w - r.name.chars().count());
                let _ = writeln!(
                    out,
                    "  {}{pad}  k={deg:<3} {:>6} {:>6}  {}",
                    r.name,
                    r.lhs_dim,
                    r.rhs_dim,
                    r.verdict.label()
                );
            }
        }
        for b in &self.bases {
            let _ = writeln!(out, "basis of {}: {}", b.name, b.elements.join(", "));
        }
        for c in &self.certificates {
            let _ = writeln!(
                out,
                "certificate (D={}, S={}, d={}): {} {:?} | S+1 {:?} | D+1 {:?} | carriers stabilized: {}",
                c.degree,
                c.slack,
                c.report_degree,
                if c.stable { "stable" } else { "NOT stable" },
                c.profile,
                c.more_slack,
                c.more_degree,
                c.carriers_stabilized
            );
        }
        let _ = writeln!(out, "identities checked: {}", self.checked);
        for w in self.witnesses.iter().take(20) {
            if w.tuple.is_empty() && w.rhs.is_empty() {
                let _ = writeln!(out, "  violation: {}: {}", w.identity, w.lhs);
            } else {
                let _ = writeln!(
                    out,
                    "  violation: {} at ({}): lhs = {}, rhs = {}",
                    w.identity,
                    w.tuple.join(", "),
                    w.lhs,
                    w.rhs
                );
            }
        }
        if self.witnesses.len() > 20 {
            let _ = writeln!(out, "  ... {} more", self.witnesses.len() - 20);
        }
        if let Some(s) = &self.stage {
            let _ = writeln!(out, "stage: {s}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let _ = writeln!(
            out,
            "status: {} (exit {})",
            self.status.label(),
            self.exit_code
        );
        out
    }
}
