//! Verification reports shared by every suite.

use std::fmt::Write as _;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::scalar::Measured;

/// At most this many counterexamples are kept per check.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Floating,
}

/// Execution options for per-tuple checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exec {
    pub parallel: bool,
}

impl Exec {
    pub const SEQUENTIAL: Exec = Exec { parallel: false };

    /// Maps `f` over `items`, preserving order either way.
    pub fn map<I, O, F>(&self, items: Vec<I>, f: F) -> Vec<O>
    where
        I: Send,
        O: Send,
        F: Fn(I) -> O + Sync + Send,
    {
        if self.parallel {
            items.into_par_iter().map(f).collect()
        } else {
            items.into_iter().map(f).collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub tuple: Vec<usize>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Largest residual seen, rendered in the suite's arithmetic.
    pub max_residual: String,
    pub max_residual_f64: f64,
    pub evaluated: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Accumulates residuals for one named identity.
#[derive(Debug)]
pub struct Check {
    name: String,
    exact: bool,
    tolerance: f64,
    evaluated: usize,
    violations: usize,
    max: f64,
    max_text: String,
    examples: Vec<Counterexample>,
}

impl Check {
    /// Exact check: any nonzero residual is a violation.
    pub fn exact(name: impl Into<String>) -> Self {
        Self::with_tolerance(name, true, 0.0)
    }

    pub fn with_tolerance(name: impl Into<String>, exact: bool, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            exact,
            tolerance,
            evaluated: 0,
            violations: 0,
            max: 0.0,
            max_text: "0".into(),
            examples: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Check in the arithmetic of `R`: exact rings ignore `tolerance`.
    pub fn for_ring<R: Measured>(name: impl Into<String>, tolerance: f64) -> Self {
        Self::with_tolerance(name, R::EXACT, tolerance)
    }

    /// Records one evaluation whose residual magnitude is `size` (rendered as
    /// `text`); `nonzero` is the exact verdict.
    pub fn record_raw(&mut self, tuple: &[usize], size: f64, text: String, nonzero: bool) {
        self.evaluated += 1;
        let violated = if self.exact { nonzero } else { !(size <= self.tolerance) };
        if size > self.max || (self.max == 0.0 && nonzero && self.max_text == "0") {
            self.max = size;
            self.max_text = text.clone();
        }
        if violated {
            self.violations += 1;
            self.examples.push(Counterexample {
                tuple: tuple.to_vec(),
                residual: text,
            });
        }
    }

    /// Records the largest entry of a residual vector.
    pub fn record<R: Measured>(&mut self, tuple: &[usize], residual: &[R]) {
        let mut worst: Option<&R> = None;
        let mut size = 0.0;
        for r in residual {
            let m = r.magnitude();
            if worst.is_none() || m > size || m.is_nan() {
                size = m;
                worst = Some(r);
            }
        }
        let nonzero = residual.iter().any(|r| !r.is_zero());
        let text = worst.map_or_else(|| "0".to_string(), Measured::render);
        self.record_raw(tuple, size, text, nonzero);
    }

    pub fn record_scalar<R: Measured>(&mut self, tuple: &[usize], residual: &R) {
        self.record(tuple, std::slice::from_ref(residual));
    }

    pub fn finish(mut self) -> CheckResult {
        self.examples.sort_by(|a, b| a.tuple.cmp(&b.tuple));
        self.examples.truncate(MAX_COUNTEREXAMPLES);
        CheckResult {
            name: self.name,
            passed: self.violations == 0,
            max_residual: self.max_text,
            max_residual_f64: self.max,
            evaluated: self.evaluated,
            violations: self.violations,
            counterexamples: self.examples,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub instance: String,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
    pub step: Option<f64>,
    pub duration_ms: f64,
    pub checks: Vec<CheckResult>,
    /// Free-form lines, e.g. certificates.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, instance: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            instance: instance.into(),
            mode: Mode::Exact,
            seed: None,
            tolerance: None,
            step: None,
            duration_ms: 0.0,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check.finish());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names of failing checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn set_duration(&mut self, d: Duration) {
        self.duration_ms = d.as_secs_f64() * 1e3;
    }

    /// Appends all checks of `other` with a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite: {}", self.suite);
        let _ = writeln!(s, "instance: {}", self.instance);
        let mode = match self.mode {
            Mode::Exact => "exact",
            Mode::Floating => "floating",
        };
        let _ = write!(s, "mode: {mode}");
        if let Some(seed) = self.seed {
            let _ = write!(s, "  seed: {seed}");
        }
        if let Some(t) = self.tolerance {
            let _ = write!(s, "  tolerance: {t:e}");
        }
        if let Some(h) = self.step {
            let _ = write!(s, "  step: {h:e}");
        }
        let _ = writeln!(s, "  time: {:.1} ms", self.duration_ms);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "  [{status}] {:<36} evaluated {:>6}  max residual {}",
                c.name, c.evaluated, c.max_residual
            );
            for ce in &c.counterexamples {
                let _ = writeln!(s, "         at {:?}: {}", ce.tuple, ce.residual);
            }
            if c.violations > c.counterexamples.len() {
                let _ = writeln!(
                    s,
                    "         ... {} more",
                    c.violations - c.counterexamples.len()
                );
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "pass" } else { "fail" });
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Scalar};

    #[test]
    fn exact_check_flags_nonzero() {
        let mut c = Check::exact("x");
        c.record::<Scalar>(&[0], &[int(0), int(0)]);
        c.record::<Scalar>(&[1], &[int(0), int(-3)]);
        let r = c.finish();
        assert!(!r.passed);
        assert_eq!(r.evaluated, 2);
        assert_eq!(r.counterexamples[0].tuple, vec![1]);
        assert_eq!(r.max_residual, "-3");
    }

    #[test]
    fn floating_check_uses_tolerance() {
        let mut c = Check::for_ring::<f64>("x", 1e-10);
        c.record::<f64>(&[0], &[1e-12]);
        assert!(c.finish().passed);
        let mut c = Check::for_ring::<f64>("x", 1e-10);
        c.record::<f64>(&[0], &[f64::NAN]);
        assert!(!c.finish().passed);
    }

    #[test]
    fn counterexamples_are_sorted_and_bounded() {
        let mut c = Check::exact("x");
        for i in (0..30).rev() {
            c.record::<Scalar>(&[i], &[int(1)]);
        }
        let r = c.finish();
        assert_eq!(r.violations, 30);
        assert_eq!(r.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert_eq!(r.counterexamples[0].tuple, vec![0]);
    }

    #[test]
    fn exec_preserves_order() {
        let v: Vec<usize> = (0..100).collect();
        let a = Exec { parallel: true }.map(v.clone(), |x| x * 2);
        let b = Exec::SEQUENTIAL.map(v, |x| x * 2);
        assert_eq!(a, b);
    }
}
