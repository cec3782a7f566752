//! Certification reports: per-identity verdicts with exact witnesses.
//!
//! Every verification operation returns a `Report` listing one entry per
//! identity it checked, in a fixed order, each entry carrying a witness for
//! the first failing basis tuple (both sides rendered exactly). Reports
//! serialize deterministically; `timing_ms` is always `null` so that output
//! bytes are reproducible across runs.

use crate::elem::Elem;
use crate::linmap::LinearMap;
use crate::sweep;
use crate::tensor::Tensor;
use serde::{Deserialize, Serialize};

/// The first failing basis tuple of an identity, with both sides rendered
/// as exact linear combinations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis tuple of the identity's free variables (empty for closed
    /// identities and for matrix-level comparisons, where `lhs` carries the
    /// differing position instead).
    pub tuple: Vec<usize>,
    /// Left-hand side: `(basis tuple, coefficient)` pairs.
    pub lhs: Vec<(String, String)>,
    /// Right-hand side: `(basis tuple, coefficient)` pairs.
    pub rhs: Vec<(String, String)>,
}

/// Verdict for a single identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    /// Identity id, e.g. `"q3"`, `"wyd1"`, `"eqbialgebra"`.
    pub id: String,
    /// Whether the identity holds on every basis tuple.
    pub passed: bool,
    /// Witness of the first failure; `null` when passed.
    pub witness: Option<Witness>,
}

/// The result of a verification operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Name of the operation that produced this report.
    pub op: String,
    /// Conjunction of all entries.
    pub overall: bool,
    /// Per-identity verdicts in the operation's documented order.
    pub checks: Vec<IdentityCheck>,
    /// Always `null`: timing is reported on stderr, never in the report, so
    /// serialized reports are byte-stable.
    pub timing_ms: Option<u64>,
}

impl Report {
    /// Look up an entry by id.
    pub fn check(&self, id: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Whether the entry with this id passed (false if absent).
    pub fn passed(&self, id: &str) -> bool {
        self.check(id).map(|c| c.passed).unwrap_or(false)
    }

    /// The first failed entry, if any.
    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Ids of all failed entries.
    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect()
    }
}

/// Accumulates identity checks into a [`Report`].
///
/// In fail-fast mode (used internally by mutation harnesses) remaining
/// checks are skipped after the first failure; public verification entry
/// points always run every check.
pub struct Runner {
    op: String,
    checks: Vec<IdentityCheck>,
    fail_fast: bool,
}

impl Runner {
    /// A runner that evaluates every check.
    pub fn new(op: &str) -> Runner {
        Runner { op: op.to_string(), checks: Vec::new(), fail_fast: false }
    }

    /// A runner that skips remaining checks after the first failure.
    pub fn fail_fast(op: &str) -> Runner {
        Runner { op: op.to_string(), checks: Vec::new(), fail_fast: true }
    }

    /// Whether all checks so far passed.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn halted(&self) -> bool {
        self.fail_fast && !self.ok()
    }

    /// Record a pre-computed verdict.
    pub fn push(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    /// Run a group of comparisons under one identity id; the entry passes
    /// iff every comparison in the group passes.
    pub fn probe(&mut self, id: &str, build: impl FnOnce(&mut Probe)) {
        if self.halted() {
            return;
        }
        let mut probe = Probe { failed: None };
        build(&mut probe);
        self.checks.push(IdentityCheck { id: id.to_string(), passed: probe.failed.is_none(), witness: probe.failed });
    }

    /// Check an elementwise identity over a sweep space: `f` produces the
    /// two sides for each basis tuple.
    pub fn elem_eq(&mut self, id: &str, dims: &[usize], f: impl Fn(&[usize]) -> (Elem, Elem) + Sync) {
        self.probe(id, |p| p.elem_eq(dims, f));
    }

    /// Check equality of two dense maps under one id.
    pub fn map_eq(&mut self, id: &str, lhs: &LinearMap, rhs: &LinearMap) {
        self.probe(id, |p| p.map_eq(lhs, rhs));
    }

    /// Check equality of two tensors under one id.
    pub fn tensor_eq(&mut self, id: &str, lhs: &Tensor, rhs: &Tensor) {
        self.probe(id, |p| p.tensor_eq(lhs, rhs));
    }

    /// Record a bare boolean condition under one id.
    pub fn bool_check(&mut self, id: &str, ok: bool, note: &str) {
        self.probe(id, |p| p.bool_check(ok, note));
    }

    /// Absorb all entries of a sub-report.
    pub fn absorb(&mut self, report: Report) {
        if self.halted() {
            return;
        }
        self.checks.extend(report.checks);
    }

    /// Finalize into a report.
    pub fn finish(self) -> Report {
        let overall = self.checks.iter().all(|c| c.passed);
        Report { op: self.op, overall, checks: self.checks, timing_ms: None }
    }
}

/// A group of comparisons contributing to one identity entry; stops at the
/// first failure inside the group.
pub struct Probe {
    failed: Option<Witness>,
}

impl Probe {
    /// Elementwise identity over a sweep space.
    pub fn elem_eq(&mut self, dims: &[usize], f: impl Fn(&[usize]) -> (Elem, Elem) + Sync) {
        if self.failed.is_some() {
            return;
        }
        let witness_tuple = sweep::first_failure(dims, |idx| {
            let (l, r) = f(idx);
            l == r
        });
        if let Some(tuple) = witness_tuple {
            let (l, r) = f(&tuple);
            self.failed = Some(Witness { tuple, lhs: l.render(), rhs: r.render() });
        }
    }

    /// Equality of two dense maps; the witness records the first differing
    /// entry as ("(row,col)", value) on each side.
    pub fn map_eq(&mut self, lhs: &LinearMap, rhs: &LinearMap) {
        if self.failed.is_some() {
            return;
        }
        if let Some((r, c)) = lhs.first_difference(rhs) {
            self.failed = Some(Witness {
                tuple: vec![r, c],
                lhs: vec![(format!("({r},{c})"), entry_string(lhs, r, c))],
                rhs: vec![(format!("({r},{c})"), entry_string(rhs, r, c))],
            });
        }
    }

    /// Equality of two tensors (shapes must match for a pass).
    pub fn tensor_eq(&mut self, lhs: &Tensor, rhs: &Tensor) {
        if self.failed.is_some() {
            return;
        }
        if lhs.shape() != rhs.shape() {
            self.failed = Some(Witness {
                tuple: vec![],
                lhs: vec![("shape".into(), format!("{:?}", lhs.shape()))],
                rhs: vec![("shape".into(), format!("{:?}", rhs.shape()))],
            });
            return;
        }
        for (idx, v) in lhs.iter() {
            let w = rhs.get(&idx);
            if v != w {
                let tuple_str = idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                self.failed = Some(Witness {
                    tuple: idx.clone(),
                    lhs: vec![(format!("({tuple_str})"), v.canonical_string())],
                    rhs: vec![(format!("({tuple_str})"), w.canonical_string())],
                });
                return;
            }
        }
    }

    /// Bare boolean condition; `note` describes the failing side.
    pub fn bool_check(&mut self, ok: bool, note: &str) {
        if self.failed.is_some() || ok {
            return;
        }
        self.failed = Some(Witness {
            tuple: vec![],
            lhs: vec![("condition".into(), note.to_string())],
            rhs: vec![("expected".into(), "true".to_string())],
        });
    }
}

fn entry_string(m: &LinearMap, r: usize, c: usize) -> String {
    if r < m.rows() && c < m.cols() {
        m.get(r, c).canonical_string()
    } else {
        format!("<absent: map is {}x{}>", m.rows(), m.cols())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn failing_check_carries_witness_and_sinks_overall() {
        let mut r = Runner::new("demo");
        r.elem_eq("always-true", &[2], |idx| {
            let e = Elem::basis(2, idx[0], Field::Rational);
            (e.clone(), e)
        });
        r.elem_eq("fails-at-one", &[2], |idx| {
            let l = Elem::basis(2, idx[0], Field::Rational);
            let r = Elem::basis(2, 0, Field::Rational);
            (l, r)
        });
        let report = r.finish();
        assert!(!report.overall);
        assert!(report.passed("always-true"));
        let failed = report.check("fails-at-one").unwrap();
        assert!(!failed.passed);
        assert_eq!(failed.witness.as_ref().unwrap().tuple, vec![1]);
    }

    #[test]
    fn fail_fast_skips_later_checks() {
        let mut r = Runner::fail_fast("demo");
        r.bool_check("first", false, "broken");
        r.bool_check("second", true, "");
        let report = r.finish();
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn report_serializes_with_null_timing() {
        let report = Runner::new("x").finish();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"timing_ms\":null"));
    }
}
