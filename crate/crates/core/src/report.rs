//! Structured pass/fail records shared by the verification routines and the
//! command-line harness.

use serde_json::{json, Value};

use crate::error::{Result, SerpError};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::serpentine::SerpentineTableau;
use crate::symfun::{format_rational, Rational, SymFun};
use crate::tableau::TwoRowTableau;

/// Conversion to the JSON form used in reports.
pub trait ToReport {
    fn to_report(&self) -> Value;
}

impl ToReport for QPoly {
    /// Sorted `[exponent, coefficient]` pairs.
    fn to_report(&self) -> Value {
        Value::Array(self.terms().map(|(e, c)| json!([e, c])).collect())
    }
}

impl ToReport for Rational {
    fn to_report(&self) -> Value {
        Value::String(format_rational(self))
    }
}

impl ToReport for SymFun {
    /// `[partition, coefficient]` pairs in partition order.
    fn to_report(&self) -> Value {
        Value::Array(self.terms().map(|(l, c)| json!([l.to_string(), format_rational(c)])).collect())
    }
}

impl ToReport for Partition {
    fn to_report(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToReport for TwoRowTableau {
    fn to_report(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToReport for SerpentineTableau {
    fn to_report(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToReport for Value {
    fn to_report(&self) -> Value {
        self.clone()
    }
}

impl ToReport for String {
    fn to_report(&self) -> Value {
        Value::String(self.clone())
    }
}

impl ToReport for &str {
    fn to_report(&self) -> Value {
        Value::String((*self).to_string())
    }
}

macro_rules! plain_report {
    ($($t:ty),*) => {
        $(impl ToReport for $t {
            fn to_report(&self) -> Value {
                json!(self)
            }
        })*
    };
}

plain_report!(bool, i64, u64, u32, i32, usize);

impl<T: ToReport> ToReport for Vec<T> {
    fn to_report(&self) -> Value {
        Value::Array(self.iter().map(ToReport::to_report).collect())
    }
}

impl<A: ToReport, B: ToReport> ToReport for (A, B) {
    fn to_report(&self) -> Value {
        Value::Array(vec![self.0.to_report(), self.1.to_report()])
    }
}

impl<T: ToReport> ToReport for Option<T> {
    fn to_report(&self) -> Value {
        self.as_ref().map_or(Value::Null, ToReport::to_report)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One compared pair of values.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    pub witness: Option<Value>,
}

impl Check {
    /// Passes iff `lhs == rhs`.
    pub fn equal<T: PartialEq + ToReport>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, lhs: lhs.to_report(), rhs: rhs.to_report(), witness: None }
    }

    /// A check whose outcome was decided by the caller.
    pub fn verdict(name: impl Into<String>, ok: bool, lhs: impl ToReport, rhs: impl ToReport) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, lhs: lhs.to_report(), rhs: rhs.to_report(), witness: None }
    }

    pub fn with_witness(mut self, witness: impl ToReport) -> Self {
        self.witness = Some(witness.to_report());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "status": self.status.as_str(),
            "lhs": self.lhs,
            "rhs": self.rhs,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckSet {
    checks: Vec<Check>,
}

impl CheckSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn equal<T: PartialEq + ToReport>(&mut self, name: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let c = Check::equal(name, lhs, rhs);
        let ok = c.passed();
        self.checks.push(c);
        ok
    }

    pub fn verdict(&mut self, name: impl Into<String>, ok: bool, lhs: impl ToReport, rhs: impl ToReport) -> bool {
        self.checks.push(Check::verdict(name, ok, lhs, rhs));
        ok
    }

    pub fn extend(&mut self, other: CheckSet) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// `Ok` when every check passed, otherwise a verification error naming
    /// the first failure.
    pub fn ensure(&self, context: &str) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(SerpError::VerificationFailed {
                check: context.to_string(),
                detail: format!("{}: {} != {}", c.name, c.lhs, c.rhs),
            }),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.checks.iter().map(Check::to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::ratio;

    #[test]
    fn serialization() {
        assert_eq!(QPoly::from_exponents([2, 4]).to_report(), json!([[2, 1], [4, 1]]));
        assert_eq!(ratio(-3, 6).to_report(), json!("-1/2"));
        assert_eq!(SymFun::p_of(&[2, 1]).to_report(), json!([["(2,1)", "1"]]));
    }

    #[test]
    fn check_sets() {
        let mut s = CheckSet::new();
        assert!(s.equal("same", &1u64, &1u64));
        assert!(s.ensure("ctx").is_ok());
        assert!(!s.equal("differ", &QPoly::one(), &QPoly::zero()));
        assert!(!s.all_passed());
        let err = s.ensure("ctx").unwrap_err();
        assert!(matches!(err, SerpError::VerificationFailed { .. }));
        let j = s.to_json();
        assert_eq!(j[1]["status"], "fail");
        assert!(j[0].get("witness").is_none());
    }
}
