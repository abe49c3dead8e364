use std::time::Instant;

use qtnok_core::identities::{lookup, registry, run, IdentityEntry, IdentityReport, Status, Windows, ENGINE_VERSION};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cache::Cache;
use crate::config::{ConfigError, RunConfig};

/// What happened to one entry.
pub struct Outcome {
    pub id: String,
    pub status: Status,
    pub pass: bool,
    /// Engine error; `true` when it is a window overflow.
    pub error: Option<(bool, String)>,
    /// The report without `elapsed_ms`.
    pub body: Map<String, Value>,
    pub elapsed_ms: u128,
}

impl Outcome {
    pub fn json(&self) -> Value {
        let mut m = Map::new();
        for (k, v) in &self.body {
            if k == "engine_version" {
                m.insert("elapsed_ms".into(), json!(self.elapsed_ms as u64));
            }
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    pub fn text(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!("{} [{}] {} ({})", self.id, self.status.name(), verdict, windows_text(&self.body["windows"]));
        if let Some(d) = self.body.get("first_diff") {
            s += &format!(" first diff in {} at {}: {} vs {}", d["label"].as_str().unwrap_or(""), d["monomial"].as_str().unwrap_or(""), d["lhs"].as_str().unwrap_or(""), d["rhs"].as_str().unwrap_or(""));
        }
        if let Some((_, e)) = &self.error {
            s += &format!(" error: {}", e);
        }
        s
    }
}

fn windows_text(w: &Value) -> String {
    match w.as_object() {
        Some(m) => m.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().join(" "),
        None => String::new(),
    }
}

pub fn windows_json(w: &Windows) -> Value {
    json!({
        "tmax": w.tmax,
        "qt_deg": w.qt_deg,
        "u_window": w.u_window,
        "extra_deg": w.extra_deg,
        "size": w.size,
        "p_max": w.p_max,
    })
}

fn body(id: &str, status: Status, pass: bool, windows: &Windows) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("id".into(), json!(id));
    m.insert("status".into(), json!(status.name()));
    m.insert("pass".into(), json!(pass));
    m.insert("windows".into(), windows_json(windows));
    m
}

pub fn report_body(r: &IdentityReport) -> Map<String, Value> {
    let mut m = body(&r.id, r.status, r.pass, &r.windows);
    if let Some(d) = &r.first_diff {
        m.insert("first_diff".into(), json!({"label": d.label, "monomial": d.monomial, "lhs": d.lhs, "rhs": d.rhs}));
    }
    m.insert("checks".into(), json!(r.checks));
    m.insert("engine_version".into(), json!(r.engine_version));
    m
}

/// The windows a profile pins for an entry; `desk` is the registry default.
pub fn profile_windows(profile: &str, e: &IdentityEntry) -> Result<Windows, ConfigError> {
    match profile {
        "desk" => Ok(e.windows),
        _ => Err(ConfigError(format!("unknown profile {}", profile))),
    }
}

/// Selected entries with their effective windows, in registry order.
pub fn select(rc: &RunConfig) -> Result<Vec<(IdentityEntry, Windows)>, ConfigError> {
    let entries = if rc.all {
        registry()
    } else {
        let mut v = Vec::new();
        for id in &rc.ids {
            let e = lookup(id).map_err(|e| ConfigError(e.to_string()))?;
            if !v.iter().any(|x: &IdentityEntry| x.id == e.id) {
                v.push(e);
            }
        }
        v
    };
    let mut out = Vec::new();
    for e in entries {
        let w = profile_windows(&rc.profile, &e)?.apply(&rc.overrides);
        // u-Laurent entries need u ∈ [-K, K] at T^K
        if e.windows.u_window > 0 && w.u_window < w.tmax as i32 {
            return Err(ConfigError(format!("{}: u-window {} does not cover [-{}, {}]", e.id, w.u_window, w.tmax, w.tmax)));
        }
        out.push((e, w));
    }
    Ok(out)
}

fn run_one(e: &IdentityEntry, w: &Windows, perturb: bool, cache: Option<&Cache>) -> Outcome {
    let cache = cache.filter(|_| !perturb);
    let start = Instant::now();
    if let Some(body) = cache.and_then(|c| c.load(e.id, w)) {
        let pass = body.get("pass").and_then(Value::as_bool).unwrap_or(false);
        return Outcome { id: e.id.into(), status: e.status, pass, error: None, body, elapsed_ms: start.elapsed().as_millis() };
    }
    let (pass, error, body) = match run(e, w, perturb) {
        Ok(r) => (r.pass, None, report_body(&r)),
        Err(err) => {
            let mut m = body(e.id, e.status, false, w);
            m.insert("error".into(), json!(err.to_string()));
            m.insert("engine_version".into(), json!(ENGINE_VERSION));
            (false, Some((err.is_window(), err.to_string())), m)
        }
    };
    if error.is_none() {
        if let Some(c) = cache {
            // a cache that cannot be written only costs time
            let _ = c.store(e.id, w, &body);
        }
    }
    Outcome { id: e.id.into(), status: e.status, pass, error, body, elapsed_ms: start.elapsed().as_millis() }
}

pub fn run_all(selected: &[(IdentityEntry, Windows)], jobs: usize, perturb: bool, cache: Option<&Cache>) -> Vec<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
    let work = || selected.par_iter().map(|(e, w)| run_one(e, w, perturb, cache)).collect();
    match pool {
        Ok(p) => p.install(work),
        Err(_) => selected.iter().map(|(e, w)| run_one(e, w, perturb, cache)).collect(),
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;

/// Conjecture-evidence entries never change the exit code.
pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    let gating: Vec<&Outcome> = outcomes.iter().filter(|o| o.status == Status::Theorem).collect();
    if gating.iter().any(|o| o.error.is_some()) {
        EXIT_ENGINE
    } else if gating.iter().any(|o| !o.pass) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}
