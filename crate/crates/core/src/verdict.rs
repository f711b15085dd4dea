use std::fmt;

use crate::exact::{format_rational, SparseVec};

/// Renders `v` as a linear combination of named basis vectors.
pub fn render_vec(v: &SparseVec, names: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
            if c == &crate::exact::one() {
                name
            } else {
                format!("{}*{}", format_rational(c), name)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Overall outcome of a truncated verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Identities hold, but the computation did not stabilize at the requested degree.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at ({}): lhs = {}, rhs = {}",
            self.identity,
            self.tuple.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn new() -> Self {
        Verdict::default()
    }

    pub fn is_pass(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Records one instance of `identity`; a witness is kept when the sides differ.
    pub fn compare(
        &mut self,
        identity: &str,
        tuple: &[&str],
        lhs: &SparseVec,
        rhs: &SparseVec,
        names: &[String],
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.witnesses.push(Witness {
                identity: identity.to_string(),
                tuple: tuple.iter().map(|s| s.to_string()).collect(),
                lhs: render_vec(lhs, names),
                rhs: render_vec(rhs, names),
            });
        }
    }

    pub fn fail(&mut self, identity: &str, tuple: &[&str], lhs: String, rhs: String) {
        self.checked += 1;
        self.witnesses.push(Witness {
            identity: identity.to_string(),
            tuple: tuple.iter().map(|s| s.to_string()).collect(),
            lhs,
            rhs,
        });
    }

    pub fn merge(&mut self, other: Verdict) {
        self.checked += other.checked;
        self.witnesses.extend(other.witnesses);
    }

    /// Merges `other`, naming the structure its identities belong to.
    pub fn merge_as(&mut self, prefix: &str, other: Verdict) {
        self.checked += other.checked;
        self.witnesses
            .extend(other.witnesses.into_iter().map(|mut w| {
                w.identity = format!("{prefix}: {}", w.identity);
                w
            }));
    }

    pub fn first_identity(&self) -> Option<&str> {
        self.witnesses.first().map(|w| w.identity.as_str())
    }
}
