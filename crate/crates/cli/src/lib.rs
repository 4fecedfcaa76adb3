//! Verification runner behind the `mordellkit` binary.
//!
//! A run expands the selected identities into parameter points, validates
//! every point before evaluating anything, fans the points out over a rayon
//! pool and assembles the report in `(id, point index)` order.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use mordellkit::identities::{find, records, verify, IdentityRecord, ParamMap, Status, VerificationOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Configuration problems; the binary maps these to exit status 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => usage(format!("unknown format `{s}`, expected text or json")),
        }
    }
}

/// `name:start:stop:count[:log|:lin]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRange {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub log: bool,
}

impl FromStr for SweepRange {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(4..=5).contains(&parts.len()) {
            return usage(format!("range `{s}` is not name:start:stop:count[:log]"));
        }
        let num = |t: &str| t.parse::<f64>().map_err(|_| UsageError(format!("range `{s}`: `{t}` is not a number")));
        let count: usize =
            parts[3].parse().map_err(|_| UsageError(format!("range `{s}`: count `{}` is not an integer", parts[3])))?;
        let log = match parts.get(4) {
            None | Some(&"lin") => false,
            Some(&"log") => true,
            Some(other) => return usage(format!("range `{s}`: spacing `{other}` is neither log nor lin")),
        };
        let r = SweepRange { name: parts[0].to_string(), start: num(parts[1])?, stop: num(parts[2])?, count, log };
        if r.name.is_empty() {
            return usage(format!("range `{s}` has no parameter name"));
        }
        if r.count < 1 {
            return usage(format!("range `{s}`: count must be at least 1"));
        }
        if !(r.start.is_finite() && r.stop.is_finite()) {
            return usage(format!("range `{s}` has a non-finite endpoint"));
        }
        if r.log && !(r.start > 0.0 && r.stop > 0.0) {
            return usage(format!("range `{s}`: log spacing needs positive endpoints"));
        }
        Ok(r)
    }
}

impl SweepRange {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                if self.log {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect()
    }
}

/// Parses `k=v`.
pub fn parse_assignment(s: &str) -> Result<(String, f64), UsageError> {
    let (k, v) = s.split_once('=').ok_or_else(|| UsageError(format!("parameter `{s}` is not name=value")))?;
    let v: f64 = v.trim().parse().map_err(|_| UsageError(format!("parameter `{s}`: `{v}` is not a number")))?;
    if k.trim().is_empty() || !v.is_finite() {
        return usage(format!("parameter `{s}` is not name=value with a finite value"));
    }
    Ok((k.trim().to_string(), v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Verify,
    Sweep,
}

/// Everything that determines a report, echoed into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    /// Identity ids; `all` selects the whole registry.
    pub ids: Vec<String>,
    pub params: ParamMap,
    pub ranges: Vec<SweepRange>,
    pub tol: Option<f64>,
    pub format: Format,
    pub jobs: usize,
    pub seed: u64,
    /// Random points per identity drawn from the sampling boxes of the
    /// parameters not fixed by `params`; zero means the single default point.
    pub samples: usize,
    pub timings: bool,
}

impl RunConfig {
    pub fn verify(ids: Vec<String>) -> Self {
        RunConfig {
            command: Command::Verify,
            ids,
            params: ParamMap::new(),
            ranges: Vec::new(),
            tol: None,
            format: Format::Text,
            jobs: 1,
            seed: 0,
            samples: 0,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub exploratory: usize,
    /// Largest relative difference over asserted outcomes.
    pub max_rel_diff: Option<f64>,
}

impl Summary {
    pub fn tally(outcomes: &[VerificationOutcome]) -> Self {
        let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
        let max_rel_diff = outcomes
            .iter()
            .filter(|o| o.asserted)
            .filter_map(|o| o.rel_diff)
            .fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))));
        Summary {
            total: outcomes.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            inconclusive: count(Status::Inconclusive),
            exploratory: count(Status::Exploratory),
            max_rel_diff,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub timestamp: String,
    pub config: RunConfig,
    pub outcomes: Vec<VerificationOutcome>,
    pub summary: Summary,
}

impl Report {
    /// 0 when every asserted outcome passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.outcomes.iter().any(VerificationOutcome::is_failure) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => self.to_json() + "\n",
            Format::Text => render_text(self),
        }
    }
}

/// One unit of work.
#[derive(Debug, Clone)]
struct Task {
    id: &'static str,
    params: ParamMap,
}

fn select(ids: &[String]) -> Result<Vec<&'static IdentityRecord>, UsageError> {
    if ids.is_empty() {
        return usage("no identity selected");
    }
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(records().iter());
        } else {
            out.push(find(id).map_err(|e| UsageError(e.to_string()))?);
        }
    }
    out.sort_by_key(|r| r.id);
    out.dedup_by_key(|r| r.id);
    Ok(out)
}

/// The assignments of `given` that `rec` declares.
fn applicable(rec: &IdentityRecord, given: &ParamMap) -> ParamMap {
    let names = rec.param_names();
    given.iter().filter(|(k, _)| names.contains(&k.as_str())).map(|(k, v)| (k.clone(), *v)).collect()
}

fn check_assignments_used(recs: &[&IdentityRecord], given: &ParamMap) -> Result<(), UsageError> {
    for k in given.keys() {
        if !recs.iter().any(|r| r.param_names().contains(&k.as_str())) {
            let ids: Vec<_> = recs.iter().map(|r| r.id).collect();
            return usage(format!("no selected identity ({}) has a parameter `{k}`", ids.join(", ")));
        }
    }
    Ok(())
}

fn sampled_points(rec: &IdentityRecord, fixed: &ParamMap, n: usize, seed: u64) -> Vec<ParamMap> {
    // One stream per identity, so adding ids to a run leaves the others' points unchanged.
    let key = rec.id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ key);
    (0..n)
        .map(|_| {
            let mut p = fixed.clone();
            for spec in &rec.params {
                if p.contains_key(spec.name) {
                    continue;
                }
                let (lo, hi) = spec.sample;
                let mut v = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
                if spec.domain.integer {
                    v = v.round();
                }
                p.insert(spec.name.to_string(), v);
            }
            p
        })
        .collect()
}

fn grid(ranges: &[SweepRange]) -> Vec<Vec<(String, f64)>> {
    let mut out = vec![Vec::new()];
    for r in ranges {
        let pts = r.points();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pts.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push((r.name.clone(), v));
                    p
                })
            })
            .collect();
    }
    out
}

fn plan(cfg: &RunConfig) -> Result<Vec<Task>, UsageError> {
    if let Some(t) = cfg.tol {
        if !(t > 0.0 && t.is_finite()) {
            return usage(format!("tolerance {t} must be positive"));
        }
    }
    if cfg.jobs == 0 {
        return usage("--jobs must be at least 1");
    }
    let recs = select(&cfg.ids)?;
    check_assignments_used(&recs, &cfg.params)?;
    let mut tasks = Vec::new();
    match cfg.command {
        Command::Verify => {
            if !cfg.ranges.is_empty() {
                return usage("ranges are only accepted by sweep");
            }
            for rec in &recs {
                let fixed = applicable(rec, &cfg.params);
                let points =
                    if cfg.samples == 0 { vec![fixed] } else { sampled_points(rec, &fixed, cfg.samples, cfg.seed) };
                tasks.extend(points.into_iter().map(|params| Task { id: rec.id, params }));
            }
        }
        Command::Sweep => {
            if recs.len() != 1 || cfg.ids.iter().any(|i| i == "all") {
                return usage("sweep takes exactly one identity");
            }
            if cfg.ranges.is_empty() {
                return usage("sweep needs at least one --range");
            }
            let rec = recs[0];
            let derived = rec.constraint.as_ref().map(|c| c.derived);
            for (i, r) in cfg.ranges.iter().enumerate() {
                if Some(r.name.as_str()) == derived {
                    return usage(format!("{} is derived from the constraint of {}; sweep a free parameter", r.name, rec.id));
                }
                if !rec.params.iter().any(|p| p.name == r.name) {
                    return usage(format!("{} has no free parameter `{}`", rec.id, r.name));
                }
                if cfg.ranges[..i].iter().any(|o| o.name == r.name) {
                    return usage(format!("parameter `{}` is swept twice", r.name));
                }
                if cfg.params.contains_key(&r.name) {
                    return usage(format!("parameter `{}` is both fixed and swept", r.name));
                }
            }
            for point in grid(&cfg.ranges) {
                let mut params = applicable(rec, &cfg.params);
                params.extend(point);
                tasks.push(Task { id: rec.id, params });
            }
        }
    }
    // Every point must resolve before anything is evaluated.
    for t in &tasks {
        let rec = find(t.id).expect("selected ids exist");
        rec.resolve(&t.params).map_err(|e| UsageError(format!("{}: {e}", t.id)))?;
    }
    Ok(tasks)
}

fn evaluate(task: &Task, tol: Option<f64>, timings: bool) -> VerificationOutcome {
    match verify(task.id, &task.params, tol) {
        Ok(mut o) => {
            if !timings {
                o.elapsed_ms = None;
            }
            o
        }
        // Validation already passed, so this is a numerical failure at this point.
        Err(e) => {
            let rec = find(task.id).expect("selected ids exist");
            let params = rec.resolve(&task.params).map(|p| p.map().clone()).unwrap_or_else(|_| task.params.clone());
            VerificationOutcome {
                identity_id: task.id.to_string(),
                params,
                components: Vec::new(),
                lhs: None,
                rhs: None,
                abs_diff: None,
                rel_diff: None,
                status: if rec.asserted { Status::Fail } else { Status::Exploratory },
                pass: false,
                asserted: rec.asserted,
                tol: tol.unwrap_or(rec.default_tol),
                evaluations: 0,
                elapsed_ms: None,
                message: Some(e.to_string()),
            }
        }
    }
}

/// Validates, evaluates and assembles the report.
pub fn run(cfg: RunConfig) -> Result<Report, UsageError> {
    let tasks = plan(&cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| UsageError(format!("cannot start {} worker threads: {e}", cfg.jobs)))?;
    // Indexed collection keeps task order whatever the scheduling.
    let outcomes: Vec<VerificationOutcome> =
        pool.install(|| tasks.par_iter().map(|t| evaluate(t, cfg.tol, cfg.timings)).collect());
    let summary = Summary::tally(&outcomes);
    Ok(Report {
        tool: "mordellkit".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        config: cfg,
        outcomes,
        summary,
    })
}

/// Registry listing: a header and one line per identity.
pub fn list_text() -> String {
    let rows: Vec<[String; 4]> = records()
        .iter()
        .map(|r| {
            let domains = if r.params.is_empty() {
                "-".to_string()
            } else {
                r.params.iter().map(|p| format!("{} in {}", p.name, p.domain)).collect::<Vec<_>>().join(", ")
            };
            let constraint = r.constraint.as_ref().map_or("-".to_string(), |c| c.text.to_string());
            [r.id.to_string(), domains, constraint, r.citation.to_string()]
        })
        .collect();
    table(&["id", "parameters", "constraint", "citation"], &rows)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or("-".to_string(), |v| format!("{v:.12e}"))
}

fn render_text(rep: &Report) -> String {
    let swept: Vec<&str> = rep.config.ranges.iter().map(|r| r.name.as_str()).collect();
    let mut header: Vec<&str> = vec!["id"];
    header.extend(&swept);
    header.extend(["params", "status", "lhs", "rhs", "abs_diff", "rel_diff", "tol"]);
    if rep.config.timings {
        header.push("ms");
    }
    let rows: Vec<Vec<String>> = rep
        .outcomes
        .iter()
        .map(|o| {
            let mut row = vec![o.identity_id.clone()];
            row.extend(swept.iter().map(|n| o.params.get(*n).map_or("-".to_string(), |v| format!("{v:.6}"))));
            let params: BTreeMap<_, _> = o.params.iter().filter(|(k, _)| !swept.contains(&k.as_str())).collect();
            row.push(if params.is_empty() {
                "-".to_string()
            } else {
                params.iter().map(|(k, v)| format!("{k}={v:.6}")).collect::<Vec<_>>().join(",")
            });
            let status = match o.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Inconclusive => "inconclusive",
                Status::Exploratory => "exploratory",
            };
            row.extend([
                status.to_string(),
                fmt_opt(o.lhs),
                fmt_opt(o.rhs),
                fmt_opt(o.abs_diff),
                fmt_opt(o.rel_diff),
                format!("{:.1e}", o.tol),
            ]);
            if rep.config.timings {
                row.push(o.elapsed_ms.map_or("-".to_string(), |t| format!("{t:.1}")));
            }
            row
        })
        .collect();
    let mut out = table(&header, &rows);
    for o in rep.outcomes.iter().filter(|o| o.message.is_some()) {
        let _ = writeln!(out, "note {}: {}", o.identity_id, o.message.as_deref().unwrap_or_default());
    }
    let s = &rep.summary;
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} inconclusive, {} exploratory; max rel_diff {}",
        s.pass,
        s.fail,
        s.inconclusive,
        s.exploratory,
        fmt_opt(s.max_rel_diff)
    );
    out
}

fn table<R: AsRef<[String]>>(header: &[&str], rows: &[R]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r.as_ref()) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c}{}  ", " ".repeat(w - c.chars().count()));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.as_ref().iter().map(String::as_str).collect()));
    }
    out
}
