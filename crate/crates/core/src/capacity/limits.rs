use serde::{Deserialize, Serialize};

/// One breached limit: its printed form, the bound that was crossed and the
/// column's actual value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitViolation {
    pub limit: String,
    pub bound: f64,
    pub actual: f64,
}

/// `applicable` is true exactly when `violations` is empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApplicabilityReport {
    pub applicable: bool,
    pub violations: Vec<LimitViolation>,
}

impl Default for ApplicabilityReport {
    fn default() -> Self {
        Self {
            applicable: true,
            violations: Vec::new(),
        }
    }
}

impl ApplicabilityReport {
    pub fn has_violation(&self, limit: &str) -> bool {
        self.violations.iter().any(|v| v.limit == limit)
    }
}

/// Accumulates limit checks into an [`ApplicabilityReport`].
#[derive(Default)]
pub(crate) struct LimitCheck {
    violations: Vec<LimitViolation>,
}

impl LimitCheck {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, limit: &str, bound: f64, actual: f64) {
        self.violations.push(LimitViolation {
            limit: limit.to_string(),
            bound,
            actual,
        });
    }

    pub fn at_most(mut self, limit: &str, bound: f64, actual: f64) -> Self {
        if !(actual <= bound) {
            self.push(limit, bound, actual);
        }
        self
    }

    pub fn at_least(mut self, limit: &str, bound: f64, actual: f64) -> Self {
        if !(actual >= bound) {
            self.push(limit, bound, actual);
        }
        self
    }

    /// Two-sided; the reported bound is the side that was crossed.
    pub fn within(mut self, limit: &str, lo: f64, hi: f64, actual: f64) -> Self {
        if actual < lo {
            self.push(limit, lo, actual);
        } else if !(actual <= hi) {
            self.push(limit, hi, actual);
        }
        self
    }

    pub fn finish(self) -> ApplicabilityReport {
        ApplicabilityReport {
            applicable: self.violations.is_empty(),
            violations: self.violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sided_reports_crossed_side() {
        let r = LimitCheck::new()
            .within("a", 1.0, 2.0, 0.5)
            .within("b", 1.0, 2.0, 3.0)
            .finish();
        assert!(!r.applicable);
        assert_eq!(r.violations[0].bound, 1.0);
        assert_eq!(r.violations[1].bound, 2.0);
        let ok = LimitCheck::new()
            .within("a", 1.0, 2.0, 2.0)
            .at_least("b", 1.0, 1.0)
            .finish();
        assert!(ok.applicable && ok.violations.is_empty());
    }
}
