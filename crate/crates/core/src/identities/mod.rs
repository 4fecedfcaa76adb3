//! Registry of integral and series identities and the generic verifier.
//!
//! Each record names its parameters with their domains, an optional
//! constraint that fixes one parameter from the others, and evaluators for
//! the two sides. An evaluator returns one value per component; a complex
//! identity has components `re` and `im`, a chain of equalities one
//! component per compared pair.

mod integrals;
mod registry;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadResult;
use crate::series::SeriesResult;

pub use integrals::{phi, psi};

/// Parameter assignment by name.
pub type ParamMap = BTreeMap<String, f64>;

/// Relative tolerance on a user-supplied constrained parameter.
pub const CONSTRAINT_TOL: f64 = 1e-14;

/// Which side of an identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lhs,
    Rhs,
}

/// A computed side: value, error estimate and cost.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SideValue {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

impl SideValue {
    pub fn exact(value: f64) -> Self {
        SideValue { value, error_estimate: 0.0, evaluations: 0 }
    }

    pub fn add(self, o: Self) -> Self {
        SideValue {
            value: self.value + o.value,
            error_estimate: self.error_estimate + o.error_estimate,
            evaluations: self.evaluations + o.evaluations,
        }
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.scale(-1.0))
    }

    pub fn mul(self, o: Self) -> Self {
        SideValue {
            value: self.value * o.value,
            error_estimate: self.value.abs() * o.error_estimate
                + o.value.abs() * self.error_estimate
                + self.error_estimate * o.error_estimate,
            evaluations: self.evaluations + o.evaluations,
        }
    }

    pub fn sq(self) -> Self {
        self.mul(SideValue { evaluations: 0, ..self })
    }

    pub fn scale(self, s: f64) -> Self {
        SideValue { value: self.value * s, error_estimate: self.error_estimate * s.abs(), evaluations: self.evaluations }
    }
}

impl From<QuadResult<f64>> for SideValue {
    fn from(r: QuadResult<f64>) -> Self {
        SideValue { value: r.value, error_estimate: r.abs_error_estimate, evaluations: r.evaluations }
    }
}

impl From<SeriesResult<f64>> for SideValue {
    fn from(r: SeriesResult<f64>) -> Self {
        SideValue { value: r.value, error_estimate: r.tail_bound, evaluations: r.terms_used }
    }
}

/// Admissible interval of a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub integer: bool,
}

impl Domain {
    pub const fn positive() -> Self {
        Domain { lo: 0.0, hi: f64::INFINITY, lo_closed: false, hi_closed: false, integer: false }
    }

    pub const fn non_negative() -> Self {
        Domain { lo: 0.0, hi: f64::INFINITY, lo_closed: true, hi_closed: false, integer: false }
    }

    pub const fn open(lo: f64, hi: f64) -> Self {
        Domain { lo, hi, lo_closed: false, hi_closed: false, integer: false }
    }

    pub const fn left_open(lo: f64, hi: f64) -> Self {
        Domain { lo, hi, lo_closed: false, hi_closed: true, integer: false }
    }

    pub const fn counting(lo: f64, hi: f64) -> Self {
        Domain { lo, hi, lo_closed: true, hi_closed: true, integer: true }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_closed { v >= self.lo } else { v > self.lo };
        let below = if self.hi_closed { v <= self.hi } else { v < self.hi };
        v.is_finite() && above && below && (!self.integer || v.fract() == 0.0)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = |v: f64| if v.is_infinite() { "inf".to_string() } else { format!("{v}") };
        let (l, r) = (if self.lo_closed { '[' } else { '(' }, if self.hi_closed { ']' } else { ')' });
        write!(f, "{}{}, {}{}", l, num(self.lo), num(self.hi), r)?;
        if self.integer {
            write!(f, " integer")?;
        }
        Ok(())
    }
}

/// A free parameter.
#[derive(Debug, Clone, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    pub domain: Domain,
    /// Range used by sampled grids.
    pub sample: (f64, f64),
}

/// A relation fixing `derived` from the free parameters.
#[derive(Clone)]
pub struct Constraint {
    pub text: &'static str,
    pub derived: &'static str,
    pub derive: fn(&Params) -> f64,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Constraint").field("text", &self.text).field("derived", &self.derived).finish()
    }
}

/// Resolved parameters handed to evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct Params(ParamMap);

impl Params {
    pub fn get(&self, name: &str) -> f64 {
        *self.0.get(name).unwrap_or_else(|| panic!("parameter {name} not resolved"))
    }

    pub fn map(&self) -> &ParamMap {
        &self.0
    }
}

pub type Evaluator = fn(&Params, f64) -> Result<Vec<SideValue>>;

/// One identity.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub citation: &'static str,
    pub params: Vec<ParamSpec>,
    pub constraint: Option<Constraint>,
    pub components: Vec<&'static str>,
    pub lhs_spec: &'static str,
    pub rhs_spec: &'static str,
    pub default_tol: f64,
    /// Exploratory records report residuals without asserting equality.
    pub asserted: bool,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("constraint", &self.constraint)
            .field("default_tol", &self.default_tol)
            .finish()
    }
}

impl IdentityRecord {
    /// Names of all parameters, the constrained one last.
    pub fn param_names(&self) -> Vec<&'static str> {
        let mut v: Vec<_> = self.params.iter().map(|p| p.name).collect();
        v.extend(self.constraint.as_ref().map(|c| c.derived));
        v
    }

    /// Fills defaults, derives the constrained parameter and checks domains.
    pub fn resolve(&self, given: &ParamMap) -> Result<Params> {
        let names = self.param_names();
        for k in given.keys() {
            if !names.contains(&k.as_str()) {
                return Err(Error::UnknownParameter { identity: self.id.to_string(), name: k.clone() });
            }
        }
        let mut map = ParamMap::new();
        for p in &self.params {
            let v = given.get(p.name).copied().unwrap_or(p.default);
            if !p.domain.contains(v) {
                return Err(Error::domain(format!("{}: {} = {} outside {}", self.id, p.name, v, p.domain)));
            }
            map.insert(p.name.to_string(), v);
        }
        if let Some(c) = &self.constraint {
            let derived = (c.derive)(&Params(map.clone()));
            if let Some(&v) = given.get(c.derived) {
                let mismatch = ((v - derived) / derived).abs();
                if !(mismatch <= CONSTRAINT_TOL) {
                    return Err(Error::ConstraintViolation { constraint: c.text.to_string(), mismatch });
                }
            }
            map.insert(c.derived.to_string(), derived);
        }
        Ok(Params(map))
    }

    /// Tolerance handed to each side.
    pub fn side_tol(tol: f64) -> f64 {
        (tol / 10.0).max(1e-13)
    }
}

/// Summary line of a record.
#[derive(Debug, Clone, Serialize)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub citation: &'static str,
    pub params: Vec<ParamSpec>,
    pub constraint: Option<&'static str>,
    pub derived: Option<&'static str>,
    pub components: Vec<&'static str>,
    pub lhs_spec: &'static str,
    pub rhs_spec: &'static str,
    pub default_tol: f64,
    pub asserted: bool,
}

fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = registry::build();
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}

/// The full registry, sorted by id.
pub fn records() -> &'static [IdentityRecord] {
    registry()
}

pub fn find(id: &str) -> Result<&'static IdentityRecord> {
    registry().iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn list_identities() -> Vec<IdentitySummary> {
    registry()
        .iter()
        .map(|r| IdentitySummary {
            id: r.id,
            citation: r.citation,
            params: r.params.clone(),
            constraint: r.constraint.as_ref().map(|c| c.text),
            derived: r.constraint.as_ref().map(|c| c.derived),
            components: r.components.clone(),
            lhs_spec: r.lhs_spec,
            rhs_spec: r.rhs_spec,
            default_tol: r.default_tol,
            asserted: r.asserted,
        })
        .collect()
}

/// Evaluates one side; one value per component.
pub fn evaluate_side(id: &str, side: Side, params: &ParamMap, tol: f64) -> Result<Vec<SideValue>> {
    let rec = find(id)?;
    let p = rec.resolve(params)?;
    check_tol(tol)?;
    let f = match side {
        Side::Lhs => rec.lhs,
        Side::Rhs => rec.rhs,
    };
    let values = f(&p, IdentityRecord::side_tol(tol))?;
    debug_assert_eq!(values.len(), rec.components.len());
    Ok(values)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// An evaluation did not converge.
    Inconclusive,
    /// The record is exploratory; residuals are reported, nothing asserted.
    Exploratory,
}

/// Per-component comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentOutcome {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_error: f64,
    pub rhs_error: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
}

impl ComponentOutcome {
    fn new(name: &str, l: SideValue, r: SideValue) -> Self {
        let abs_diff = (l.value - r.value).abs();
        let scale = l.value.abs().max(r.value.abs());
        let rel_diff = if scale > 0.0 { abs_diff / scale } else { 0.0 };
        ComponentOutcome {
            name: name.to_string(),
            lhs: l.value,
            rhs: r.value,
            lhs_error: l.error_estimate,
            rhs_error: r.error_estimate,
            abs_diff,
            rel_diff,
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.abs_diff <= tol || self.rel_diff <= tol
    }

    fn badness(&self) -> f64 {
        self.abs_diff.min(self.rel_diff)
    }
}

/// Result of one verification.
///
/// `abs_diff` and `rel_diff` are those of the worst component, so that
/// `pass ⇔ abs_diff ≤ tol ∨ rel_diff ≤ tol` holds for the record as a whole.
/// `lhs` and `rhs` are set only for single-component identities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub identity_id: String,
    pub params: ParamMap,
    pub components: Vec<ComponentOutcome>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub status: Status,
    pub pass: bool,
    pub asserted: bool,
    pub tol: f64,
    pub evaluations: u64,
    pub elapsed_ms: Option<f64>,
    pub message: Option<String>,
}

impl VerificationOutcome {
    /// Counts toward the exit status: asserted and not passing.
    pub fn is_failure(&self) -> bool {
        self.asserted && !self.pass
    }
}

/// Evaluates both sides of `id` and compares them.
///
/// Non-convergence is reported as an inconclusive outcome; invalid
/// parameters and unknown ids are errors.
pub fn verify(id: &str, params: &ParamMap, tol: Option<f64>) -> Result<VerificationOutcome> {
    let rec = find(id)?;
    let p = rec.resolve(params)?;
    let tol = tol.unwrap_or(rec.default_tol);
    check_tol(tol)?;
    let start = Instant::now();
    let side_tol = IdentityRecord::side_tol(tol);
    let sides = (rec.lhs)(&p, side_tol).and_then(|l| Ok((l, (rec.rhs)(&p, side_tol)?)));
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let mut out = VerificationOutcome {
        identity_id: rec.id.to_string(),
        params: p.map().clone(),
        components: Vec::new(),
        lhs: None,
        rhs: None,
        abs_diff: None,
        rel_diff: None,
        status: Status::Inconclusive,
        pass: false,
        asserted: rec.asserted,
        tol,
        evaluations: 0,
        elapsed_ms: Some(elapsed),
        message: None,
    };
    match sides {
        Ok((l, r)) => {
            out.evaluations = l.iter().chain(&r).map(|s| s.evaluations).sum();
            out.components =
                rec.components.iter().zip(l.iter().zip(&r)).map(|(n, (a, b))| ComponentOutcome::new(n, *a, *b)).collect();
            if let [c] = out.components.as_slice() {
                out.lhs = Some(c.lhs);
                out.rhs = Some(c.rhs);
            }
            let worst = out
                .components
                .iter()
                .max_by(|a, b| a.badness().total_cmp(&b.badness()))
                .expect("every record has a component");
            out.abs_diff = Some(worst.abs_diff);
            out.rel_diff = Some(worst.rel_diff);
            out.pass = worst.passes(tol);
            out.status = match (rec.asserted, out.pass) {
                (false, _) => Status::Exploratory,
                (true, true) => Status::Pass,
                (true, false) => Status::Fail,
            };
        }
        Err(e @ Error::NonConvergence { .. }) => {
            out.message = Some(e.to_string());
            if !rec.asserted {
                out.status = Status::Exploratory;
            }
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}
