//! Machine-readable run reports and the exit-code convention.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::cobord::CobordError;
use crate::frobenius::AlgebraError;
use crate::group::GroupError;
use crate::io::IoError;
use crate::statesum::StateSumError;
use crate::surface::SurfaceError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_ACCEPTANCE: i32 = 3;

/// A residual measured against its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `residual < tolerance`; NaN never passes.
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self { name: name.into(), residual, tolerance, pass: residual < tolerance }
    }

    /// A yes/no check, reported as residual 0 or 1 against tolerance 0.5.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 0.0 } else { 1.0 }, 0.5)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    /// Input name to SHA-256 of its bytes.
    pub inputs: BTreeMap<String, String>,
    #[serde(flatten)]
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: Map::new(),
            checks: Vec::new(),
            pass: true,
            elapsed_ms: 0.0,
            started: Some(Instant::now()),
        }
    }

    pub fn input(&mut self, name: impl Into<String>, digest: impl Into<String>) {
        self.inputs.insert(name.into(), digest.into());
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("outputs are plain data");
        self.outputs.insert(key.to_string(), v);
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Sorts checks by name (stable), so concurrently gathered checks merge
    /// deterministically, and fixes `pass` and the elapsed time.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.pass = self.checks.iter().all(|c| c.pass);
        if let Some(t) = self.started {
            self.elapsed_ms = t.elapsed().as_secs_f64() * 1e3;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// Exit code for a failed operation: numerical trouble is 2, everything
/// else is bad input.
pub trait ExitCode {
    fn exit_code(&self) -> i32;
}

impl ExitCode for AlgebraError {
    fn exit_code(&self) -> i32 {
        match self {
            AlgebraError::SingularMetric { .. } => EXIT_NUMERICAL,
            _ => EXIT_INPUT,
        }
    }
}

impl ExitCode for StateSumError {
    fn exit_code(&self) -> i32 {
        match self {
            StateSumError::Algebra(e) => e.exit_code(),
            StateSumError::PlanOverflow { .. } | StateSumError::TooLarge { .. } => EXIT_NUMERICAL,
            _ => EXIT_INPUT,
        }
    }
}

impl ExitCode for IoError {
    fn exit_code(&self) -> i32 {
        match self {
            IoError::Algebra(e) => e.exit_code(),
            _ => EXIT_INPUT,
        }
    }
}

impl ExitCode for CobordError {
    fn exit_code(&self) -> i32 {
        match self {
            CobordError::Algebra(e) => e.exit_code(),
            _ => EXIT_INPUT,
        }
    }
}

impl ExitCode for SurfaceError {
    fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

impl ExitCode for GroupError {
    fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

/// Short variant name of an error, for reports (`SingularMetric`, ...).
pub fn error_name(e: &impl std::fmt::Debug) -> String {
    let s = format!("{e:?}");
    // peel transparent wrappers such as `Algebra(SingularMetric { .. })`
    let mut name = s.as_str();
    loop {
        let end = name.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(name.len());
        let head = &name[..end];
        let rest = &name[end..];
        if rest.starts_with('(') && matches!(head, "Algebra" | "Group" | "Surface") {
            let inner = &rest[1..];
            if inner.starts_with(|c: char| c.is_ascii_uppercase()) {
                name = inner;
                continue;
            }
        }
        return head.to_string();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_and_merge_order() {
        let mut r = RunReport::new("x");
        r.check(Check::new("b", 1e-12, 1e-10));
        r.check(Check::new("a", f64::NAN, 1e-10));
        r.output("Z", [1.0, 0.0]);
        let r = r.finish();
        assert_eq!(r.checks[0].name, "a");
        assert!(!r.pass);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["Z"], serde_json::json!([1.0, 0.0]));
        assert_eq!(v["command"], "x");
    }

    #[test]
    fn exit_codes_and_names() {
        let singular = AlgebraError::SingularMetric { sigma_min: 0.0, sigma_max: 2.0 };
        assert_eq!(IoError::Algebra(singular.clone()).exit_code(), EXIT_NUMERICAL);
        assert_eq!(error_name(&IoError::Algebra(singular)), "SingularMetric");
        let nc = AlgebraError::NotCentral { generator: 0, residual: 1.0 };
        assert_eq!(nc.exit_code(), EXIT_INPUT);
        assert_eq!(error_name(&StateSumError::Algebra(nc)), "NotCentral");
        assert_eq!(StateSumError::TooLarge { colorings: 2, cap: 1 }.exit_code(), EXIT_NUMERICAL);
        let g = AlgebraError::Group(GroupError::GroupMismatch { expected: 1, found: 2 });
        assert_eq!(error_name(&g), "GroupMismatch");
    }
}
