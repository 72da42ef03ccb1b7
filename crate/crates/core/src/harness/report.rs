use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One verified statement. `pass` is `expected == computed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Ordinal-prefixed slug; checks are sorted by it.
    pub key: String,
    pub name: String,
    /// The mathematical statement being reproduced.
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// The resolved configuration a report was produced with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub field: String,
    pub t_max: usize,
    pub subset_limit: u64,
    pub samples: usize,
    pub seed: u64,
    pub attempts: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub scenario: String,
    pub config: ConfigEcho,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Wall-clock time; left out unless requested so that reports are reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(scenario: &str, config: ConfigEcho, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.key.cmp(&b.key));
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            scenario: scenario.to_string(),
            config,
            pass: checks.iter().all(|c| c.pass),
            checks,
            elapsed_ms: None,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "scenario {}  n={} field={} t_max={} seed={}\n",
            self.scenario, self.config.n, self.config.field, self.config.t_max, self.config.seed
        );
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<width$}  expected {}", c.name, c.expected));
            if c.computed != c.expected {
                out.push_str(&format!(", computed {}", c.computed));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  [{d}]"));
            }
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "{} of {} checks passed: {}\n",
            passed,
            self.checks.len(),
            if self.pass { "PASS" } else { "FAIL" }
        ));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed {ms} ms\n"));
        }
        out
    }
}

/// Collects checks in declaration order and assigns their keys.
#[derive(Debug, Default)]
pub struct Checks {
    items: Vec<Check>,
}

fn slug(name: &str) -> String {
    let mut s = String::new();
    for ch in name.chars() {
        if ch.is_ascii_alphanumeric() {
            s.push(ch.to_ascii_lowercase());
        } else if !s.ends_with('-') && !s.is_empty() {
            s.push('-');
        }
    }
    s.trim_end_matches('-').to_string()
}

impl Checks {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `expected == computed`.
    pub fn eq(
        &mut self,
        name: impl Into<String>,
        claim: &str,
        expected: impl Display,
        computed: impl Display,
    ) -> &mut Check {
        let name = name.into();
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let key = format!("{:03}-{}", self.items.len() + 1, slug(&name));
        self.items.push(Check {
            key,
            pass: expected == computed,
            name,
            claim: claim.to_string(),
            expected,
            computed,
            detail: None,
        });
        self.items.last_mut().expect("just pushed")
    }

    /// Records a statement that should hold.
    pub fn holds(&mut self, name: impl Into<String>, claim: &str, computed: bool) -> &mut Check {
        self.eq(name, claim, true, computed)
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl Check {
    pub fn with_detail(&mut self, detail: impl Into<String>) -> &mut Self {
        self.detail = Some(detail.into());
        self
    }
}

impl Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, computed {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.computed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> ConfigEcho {
        ConfigEcho {
            n: 3,
            field: "gf(5)".into(),
            t_max: 2,
            subset_limit: 10,
            samples: 1,
            seed: 7,
            attempts: 4,
            module: None,
        }
    }

    #[test]
    fn keys_keep_declaration_order() {
        let mut c = Checks::new();
        c.eq("Hom(B, I2)", "", 2, 2);
        c.holds("I_3 is generated", "", false).with_detail("trace (20,8)");
        let report = Report::new("demo", echo(), c.into_vec());
        assert_eq!(report.checks[0].key, "001-hom-b-i2");
        assert_eq!(report.checks[1].key, "002-i-3-is-generated");
        assert!(!report.pass);
        assert_eq!(report.failures().count(), 1);
    }

    #[test]
    fn json_round_trips_without_timing() {
        let mut c = Checks::new();
        c.eq("x", "claim", "a", "a");
        let report = Report::new("demo", echo(), c.into_vec());
        let json = report.to_json();
        assert!(!json.contains("elapsed_ms"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
