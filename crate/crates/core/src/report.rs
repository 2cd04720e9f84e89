use serde::Serialize;

/// One failed instance of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub key: String,
    pub detail: String,
}

/// Outcome of a checker: how many instances were examined and which failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), instances: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance; `ok` false stores a failure.
    pub fn record(&mut self, ok: bool, key: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure { key: key(), detail: detail() });
        }
    }

    pub fn pass(&mut self) {
        self.instances += 1;
    }

    pub fn fail(&mut self, key: impl Into<String>, detail: impl Into<String>) {
        self.instances += 1;
        self.failures.push(Failure { key: key.into(), detail: detail.into() });
    }

    /// Folds another report in, prefixing its failure keys.
    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        for f in other.failures {
            self.failures.push(Failure { key: format!("{}/{}", other.name, f.key), detail: f.detail });
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances,
            self.failures.len()
        )
    }
}
