use qtnok_core::elliptic::{compute_big_c, compute_d, CoeffTable};
use qtnok_core::exactnum::Term;
use qtnok_core::hooks::Params;
use qtnok_core::macdonald::{principal_p, principal_p_inf, qt_binomial, refined_vertex, Branching};
use qtnok_core::nekrasov::{expected_degree, fnm, fnm_ring, hbar_in_zw, hrv_pipeline, Provenance};
use qtnok_core::partitions::Partition;
use qtnok_core::{Error, Ring, Var};
use serde_json::{json, Value};

use crate::args::{Format, Object};

pub enum ComputeError {
    Config(String),
    Engine(Error),
}

impl From<Error> for ComputeError {
    fn from(e: Error) -> Self {
        ComputeError::Engine(e)
    }
}

fn partition(s: &str) -> Result<Partition, ComputeError> {
    Partition::parse(s).ok_or_else(|| ComputeError::Config(format!("not a partition: {}", s)))
}

fn hrv_cap(g: u32, n: u32, cap: Option<i32>) -> i32 {
    cap.unwrap_or_else(|| expected_degree(g, n).max(2) + 6)
}

fn table_json(t: &CoeffTable) -> Value {
    let rows: Vec<Value> = t.iter().map(|((m, l, a, b), v)| json!([m, l, a, b, v])).collect();
    json!(rows)
}

/// The object as text, and as JSON.
pub fn compute(obj: &Object, format: Format) -> Result<String, ComputeError> {
    let (name, text, extra) = match obj {
        Object::Fnm { n, m, qt_deg, provenance } => {
            let prov = Provenance::parse(provenance).ok_or_else(|| ComputeError::Config(format!("unknown provenance {}", provenance)))?;
            let nm = n * m;
            let ring = fnm_ring(*qt_deg, nm, nm as i32);
            let (u, p) = (Term::mono(ring.mono(&[(Var::U, 1)])), Params::standard(&ring));
            let f = fnm(&ring, *n, *m, prov, &u, &p)?;
            ("fnm", f.value.join(&ring)?.to_string(), json!({"n": n, "m": m, "qt_deg": qt_deg, "provenance": prov.name()}))
        }
        Object::Hbar { g, n, cap } | Object::Un { g, n, cap } => {
            if *n == 0 {
                return Err(ComputeError::Config("n must be positive".into()));
            }
            let cap = hrv_cap(*g, *n, *cap);
            let out = hrv_pipeline(*g, *n, cap)?;
            let i = *n as usize - 1;
            let (name, text) = if matches!(obj, Object::Un { .. }) {
                ("un", out.u[i].to_string())
            } else {
                // genus 0 has no polynomial form in z, w
                let t = match hbar_in_zw(&out.hbar[i]) {
                    Ok(h) => h.to_string(),
                    Err(Error::Domain(_)) => out.hbar[i].to_string(),
                    Err(e) => return Err(e.into()),
                };
                ("hbar", t)
            };
            (name, text, json!({"g": g, "n": n, "cap": cap}))
        }
        Object::CTable { max_m, d } => {
            let c = compute_big_c(*max_m)?;
            let t = if *d { compute_d(&c) } else { c };
            let text = t.to_text();
            if format == Format::Json {
                let v = json!({"object": if *d { "D-table" } else { "C-table" }, "max_m": max_m, "entries": table_json(&t)});
                return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
            }
            return Ok(text);
        }
        Object::Binomial { lambda, mu, qt_deg } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            let ring = Ring::new().trunc(Var::Q, *qt_deg).trunc(Var::T, *qt_deg);
            let mut br = Branching::new(Params::standard(&ring));
            ("binomial", qt_binomial(&mut br, &ring, &l, &m)?.to_string(), json!({"lambda": l.to_string(), "mu": m.to_string(), "qt_deg": qt_deg}))
        }
        Object::Principal { lambda, n, qt_deg } => {
            let l = partition(lambda)?;
            let ring = Ring::new().trunc(Var::Q, *qt_deg).trunc(Var::T, *qt_deg);
            let p = Params::standard(&ring);
            let v = match n {
                Some(n) => principal_p(&ring, &l, *n, &p)?,
                None => principal_p_inf(&ring, &l, &p)?,
            };
            ("principal", v.to_string(), json!({"lambda": l.to_string(), "n": n, "qt_deg": qt_deg}))
        }
        Object::Vertex { lambda, mu, nu, deg } => {
            let (l, m, n) = (partition(lambda)?, partition(mu)?, partition(nu)?);
            let ring = Ring::new().trunc(Var::T, *deg).trunc(Var::Z, *deg);
            let z = Term::mono(ring.mono(&[(Var::Z, 1)]));
            let t = Term::mono(ring.mono(&[(Var::T, 1)]));
            let v = refined_vertex(&ring, &l, &m, &n, &z, &t)?;
            ("vertex", v.to_string(), json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "deg": deg}))
        }
    };
    Ok(match format {
        Format::Text => text + "\n",
        Format::Json => {
            let v = json!({"object": name, "params": extra, "value": text});
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
    })
}
