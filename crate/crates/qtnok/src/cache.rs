//! On-disk cache of verification reports, one JSON file per
//! `(id, windows, engine version)`. Safe to delete at any time.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use qtnok_core::identities::{Windows, ENGINE_VERSION};
use serde_json::{json, Map, Value};

pub const FORMAT_VERSION: u64 = 1;
const SUFFIX: &str = ".qtnok.json";

pub struct Cache {
    dir: PathBuf,
}

pub struct Stat {
    pub entries: usize,
    pub bytes: u64,
}

impl Cache {
    pub fn new(dir: &Path) -> Cache {
        Cache { dir: dir.to_path_buf() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, id: &str, w: &Windows) -> PathBuf {
        let name = format!(
            "{}-t{}-d{}-u{}-x{}-s{}-p{}-v{}{}",
            id, w.tmax, w.qt_deg, w.u_window, w.extra_deg, w.size, w.p_max, ENGINE_VERSION, SUFFIX
        );
        self.dir.join(name)
    }

    /// The stored report body, if present and written by this format and
    /// engine version.
    pub fn load(&self, id: &str, w: &Windows) -> Option<Map<String, Value>> {
        let text = fs::read_to_string(self.path(id, w)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        if v.get("format")?.as_u64()? != FORMAT_VERSION || v.get("engine_version")?.as_str()? != ENGINE_VERSION {
            return None;
        }
        v.get("report")?.as_object().cloned()
    }

    pub fn store(&self, id: &str, w: &Windows, body: &Map<String, Value>) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let v = json!({"format": FORMAT_VERSION, "engine_version": ENGINE_VERSION, "report": body});
        let tmp = self.path(id, w).with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&v)?)?;
        fs::rename(tmp, self.path(id, w))
    }

    fn files(&self) -> io::Result<Vec<PathBuf>> {
        let mut out = Vec::new();
        match fs::read_dir(&self.dir) {
            Ok(rd) => {
                for e in rd {
                    let p = e?.path();
                    if p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.ends_with(SUFFIX)) {
                        out.push(p);
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        out.sort();
        Ok(out)
    }

    pub fn stat(&self) -> io::Result<Stat> {
        let files = self.files()?;
        let mut bytes = 0;
        for f in &files {
            bytes += fs::metadata(f)?.len();
        }
        Ok(Stat { entries: files.len(), bytes })
    }

    /// Removes the cache files and returns how many there were. Other files
    /// in the directory are left alone.
    pub fn clear(&self) -> io::Result<usize> {
        let files = self.files()?;
        for f in &files {
            fs::remove_file(f)?;
        }
        Ok(files.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let w = Windows::new(1, 2, 1, 0, 0);
        assert!(c.load("qtno", &w).is_none());
        let mut body = Map::new();
        body.insert("pass".into(), json!(true));
        c.store("qtno", &w, &body).unwrap();
        assert_eq!(c.load("qtno", &w).unwrap(), body);
        assert!(c.load("qtno", &Windows::new(2, 2, 1, 0, 0)).is_none());
        fs::write(dir.path().join("keep.txt"), "x").unwrap();
        assert_eq!(c.stat().unwrap().entries, 1);
        assert_eq!(c.clear().unwrap(), 1);
        assert_eq!(c.stat().unwrap().entries, 0);
        assert!(dir.path().join("keep.txt").exists());
    }

    #[test]
    fn ignores_other_formats() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let w = Windows::new(1, 2, 1, 0, 0);
        fs::write(c.path("qtno", &w), r#"{"format": 0, "engine_version": "x", "report": {}}"#).unwrap();
        assert!(c.load("qtno", &w).is_none());
    }
}
