use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qtnok(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtnok")).args(args).env_remove("QTNOK_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn without_elapsed(mut v: Value) -> Value {
    for r in v.as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

// "2*a*b^-1" -> (2, {a, b^-1}); variable order inside a term does not matter
fn term_set(s: &str) -> BTreeSet<(i64, BTreeSet<String>)> {
    let s = s.trim().replace(" - ", " + -");
    s.split(" + ")
        .map(|t| {
            let (sign, t) = match t.strip_prefix('-') {
                Some(r) => (-1, r),
                None => (1, t),
            };
            let mut c = sign;
            let mut vars = BTreeSet::new();
            for f in t.split('*') {
                match f.parse::<i64>() {
                    Ok(n) => c *= n,
                    Err(_) => {
                        vars.insert(f.to_string());
                    }
                }
            }
            (c, vars)
        })
        .collect()
}

#[test]
fn fnm_one_one() {
    let o = qtnok(&["compute", "fnm", "--n", "1", "--m", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1 - t*u^-1*T + T - q*u");
    assert_eq!(term_set(&stdout(&o)), term_set("1 - u*q + T - t*T*u^-1"));
    for prov in ["def", "single_sum"] {
        let p = qtnok(&["compute", "fnm", "--n", "1", "--m", "1", "--provenance", prov]);
        assert_eq!(stdout(&p), stdout(&o));
    }
}

#[test]
fn hbar_genus_one() {
    let o = qtnok(&["compute", "hbar", "--g", "1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "z^2 - 2*z*w + w^2");
}

#[test]
fn c_table_is_deterministic() {
    let a = qtnok(&["compute", "C-table", "--max-m", "1"]);
    let b = qtnok(&["compute", "C-table", "--max-m", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 9);
    assert_eq!(text.lines().next(), Some("0 0 0 0 1"));
    let j = json(&qtnok(&["compute", "C-table", "--max-m", "1", "--format", "json"]));
    assert_eq!(j["entries"].as_array().unwrap().len(), 9);
    let d = qtnok(&["compute", "C-table", "--max-m", "0", "--d"]);
    assert_eq!(stdout(&d).lines().count(), 4);
}

#[test]
fn small_objects() {
    assert_eq!(stdout(&qtnok(&["compute", "binomial", "--lambda", "2", "--mu", "1"])).trim(), "1 + q");
    // P_(1)(1, t) = 1 + t
    assert_eq!(stdout(&qtnok(&["compute", "principal", "--lambda", "1", "--n", "2"])).trim(), "1 + t");
    assert_eq!(stdout(&qtnok(&["compute", "vertex", "--lambda", "0", "--mu", "0", "--nu", "0"])).trim(), "1");
    let u = qtnok(&["compute", "un", "--g", "1", "--n", "1", "--format", "json"]);
    assert_eq!(json(&u)["object"], "un");
    assert_eq!(code(&qtnok(&["compute", "binomial", "--lambda", "x", "--mu", "1"])), 2);
    assert_eq!(code(&qtnok(&["compute", "fnm", "--n", "1", "--m", "1", "--provenance", "nope"])), 2);
}

#[test]
fn verify_main_theorem() {
    let o = qtnok(&["verify", "--id", "qtno", "--tmax", "3", "--qt-deg", "8", "--u-window", "3", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let r = &v[0];
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["id", "status", "pass", "windows", "checks", "elapsed_ms", "engine_version"]);
    assert_eq!(r["id"], "qtno");
    assert_eq!(r["status"], "theorem");
    assert_eq!(r["pass"], true);
    assert_eq!(r["windows"]["tmax"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&qtnok(&["verify", "--id", "nosuch"])), 2);
    assert_eq!(code(&qtnok(&["verify"])), 2);
    assert_eq!(code(&qtnok(&["verify", "--all", "--profile", "huge"])), 2);
    assert_eq!(code(&qtnok(&["verify", "--id", "qtno", "--tmax", "3", "--u-window", "2"])), 2);
    assert_eq!(code(&qtnok(&["verify", "--bogus"])), 2);
    assert_eq!(code(&qtnok(&["verify", "--id", "elliptic-no", "--u-window", "2"])), 3);
    let f = qtnok(&["verify", "--id", "qtno", "--perturb", "--format", "json"]);
    assert_eq!(code(&f), 1);
    let d = &json(&f)[0]["first_diff"];
    assert_eq!(d["monomial"], "1");
    assert_eq!((d["lhs"].as_str(), d["rhs"].as_str()), (Some("1"), Some("2")));
}

#[test]
fn conjectures_do_not_gate() {
    let o = qtnok(&["verify", "--id", "fnm-polynomiality,hrv-g2", "--perturb", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == false && r["status"] == "conjecture-evidence"));
    let mixed = qtnok(&["verify", "--id", "fnm-polynomiality", "--id", "nfactorial", "--perturb"]);
    assert_eq!(code(&mixed), 1);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--id", "qtno,dp,cauchy", "--format", "json"];
    let a = without_elapsed(json(&qtnok(&[&args[..], &["--jobs", "1"]].concat())));
    let b = without_elapsed(json(&qtnok(&[&args[..], &["--jobs", "3"]].concat())));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let ids: Vec<&str> = a.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["qtno", "dp", "cauchy"]);
}

#[test]
fn list_is_sorted_and_labelled() {
    let a = qtnok(&["list"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, qtnok(&["list"]).stdout);
    let v = json(&qtnok(&["list", "--format", "json"]));
    let rows = v.as_array().unwrap();
    let status = |id: &str| rows.iter().find(|r| r["id"] == id).map(|r| r["status"].as_str().unwrap().to_string());
    assert_eq!(status("qtno").as_deref(), Some("theorem"));
    assert_eq!(status("fnm-polynomiality").as_deref(), Some("conjecture-evidence"));
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.len() >= 22);
}

#[test]
fn config_file_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# windows\nid = qtno\ntmax = 1\nqt-deg = 3\nu-window = 2\nformat = json\n").unwrap();
    let out = dir.path().join("r.json");
    let o = qtnok(&["verify", "--config", cfg.to_str().unwrap(), "--tmax", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v[0]["windows"]["tmax"], 2);
    assert_eq!(v[0]["windows"]["qt_deg"], 3);
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(code(&qtnok(&["list", "--config", cfg.to_str().unwrap()])), 2);
}

fn cache_files(dir: &Path) -> usize {
    std::fs::read_dir(dir).map(|r| r.count()).unwrap_or(0)
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("cache");
    let cs = c.to_str().unwrap();
    let args = ["verify", "--id", "qtno", "--tmax", "2", "--qt-deg", "4", "--format", "json", "--cache-dir", cs];
    let first = without_elapsed(json(&qtnok(&args)));
    assert_eq!(cache_files(&c), 1);
    let second = without_elapsed(json(&qtnok(&args)));
    assert_eq!(first, second);
    let stat = stdout(&qtnok(&["cache", "stat", "--cache-dir", cs]));
    assert!(stat.contains("entries: 1"), "{}", stat);
    // perturbed runs neither read nor write the cache
    assert_eq!(code(&qtnok(&[&args[..], &["--perturb"]].concat())), 1);
    let env = Command::new(env!("CARGO_BIN_EXE_qtnok")).args(["cache", "clear"]).env("QTNOK_CACHE_DIR", cs).output().unwrap();
    assert_eq!(code(&env), 0);
    assert!(stdout(&env).contains("removed 1"));
    assert_eq!(cache_files(&c), 0);
    assert_eq!(code(&qtnok(&["cache", "stat"])), 2);
}
