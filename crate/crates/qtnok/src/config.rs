//! `key=value` configuration files. Keys are the long flag names; flags
//! given on the command line win.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qtnok_core::identities::WindowOverride;

use crate::args::{Cli, Format, VerifyArgs};

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

const KEYS: [&str; 13] = [
    "id", "all", "tmax", "qt-deg", "u-window", "p-max", "extra-deg", "size", "profile", "jobs", "format", "out", "cache-dir",
];

pub const PROFILES: [&str; 1] = ["desk"];

#[derive(Debug, Default)]
pub struct FileConfig(BTreeMap<String, String>);

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {}", path.display(), e)))?;
        FileConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<FileConfig, ConfigError> {
        let mut map = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| ConfigError(format!("line {}: expected key=value", no + 1)))?;
            let k = k.trim().trim_start_matches("--").replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                return Err(ConfigError(format!("line {}: unknown key {}", no + 1, k)));
            }
            map.insert(k, v.trim().to_string());
        }
        Ok(FileConfig(map))
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| ConfigError(format!("bad value for {}: {}", key, v))),
        }
    }
}

/// Everything `verify` needs, after merging flags over the file.
#[derive(Debug)]
pub struct RunConfig {
    pub ids: Vec<String>,
    pub all: bool,
    pub overrides: WindowOverride,
    pub profile: String,
    pub jobs: usize,
    pub perturb: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

pub struct Globals {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

pub fn load(cli: &Cli) -> Result<FileConfig, ConfigError> {
    match &cli.config {
        Some(p) => FileConfig::load(p),
        None => Ok(FileConfig::default()),
    }
}

pub fn globals(cli: &Cli, file: &FileConfig) -> Result<Globals, ConfigError> {
    let format = match (cli.format, file.0.get("format")) {
        (Some(f), _) => f,
        (None, Some(s)) => match s.as_str() {
            "json" => Format::Json,
            "text" => Format::Text,
            _ => return Err(ConfigError(format!("bad value for format: {}", s))),
        },
        (None, None) => Format::Text,
    };
    Ok(Globals {
        format,
        out: cli.out.clone().or(file.get("out")?),
        cache_dir: cli.cache_dir.clone().or(file.get("cache-dir")?),
    })
}

pub fn run_config(v: &VerifyArgs, g: Globals, file: &FileConfig) -> Result<RunConfig, ConfigError> {
    let mut ids = v.ids.clone();
    if ids.is_empty() {
        if let Some(s) = file.0.get("id") {
            ids = s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
        }
    }
    let all = v.all || file.get::<bool>("all")?.unwrap_or(false);
    let overrides = WindowOverride {
        tmax: v.tmax.or(file.get("tmax")?),
        qt_deg: v.qt_deg.or(file.get("qt-deg")?),
        u_window: v.u_window.or(file.get("u-window")?),
        extra_deg: v.extra_deg.or(file.get("extra-deg")?),
        size: v.size.or(file.get("size")?),
        p_max: v.p_max.or(file.get("p-max")?),
    };
    let profile = v.profile.clone().or(file.get("profile")?).unwrap_or_else(|| "desk".to_string());
    if !PROFILES.contains(&profile.as_str()) {
        return Err(ConfigError(format!("unknown profile {}", profile)));
    }
    if all == !ids.is_empty() {
        return Err(ConfigError("give either --all or at least one --id".into()));
    }
    if let Some(u) = overrides.u_window {
        if u < 0 {
            return Err(ConfigError("u-window must be nonnegative".into()));
        }
    }
    if let Some(q) = overrides.qt_deg {
        if q < 0 {
            return Err(ConfigError("qt-deg must be nonnegative".into()));
        }
    }
    Ok(RunConfig {
        ids,
        all,
        overrides,
        profile,
        jobs: v.jobs.or(file.get("jobs")?).unwrap_or(0),
        perturb: v.perturb,
        format: g.format,
        out: g.out,
        cache_dir: g.cache_dir,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_flag_spellings() {
        let f = FileConfig::parse("# defaults\n\n--tmax = 2\nqt_deg=5\nid = qtno, dp\n").unwrap();
        assert_eq!(f.get::<u32>("tmax").unwrap(), Some(2));
        assert_eq!(f.get::<i32>("qt-deg").unwrap(), Some(5));
        let g = Globals { format: Format::Text, out: None, cache_dir: None };
        let rc = run_config(&VerifyArgs::default(), g, &f).unwrap();
        assert_eq!(rc.ids, ["qtno", "dp"]);
        assert_eq!(rc.overrides.tmax, Some(2));
    }

    #[test]
    fn flags_win_over_the_file() {
        let f = FileConfig::parse("tmax=2\nall=true").unwrap();
        let v = VerifyArgs { tmax: Some(1), ..Default::default() };
        let g = Globals { format: Format::Json, out: None, cache_dir: None };
        let rc = run_config(&v, g, &f).unwrap();
        assert_eq!(rc.overrides.tmax, Some(1));
        assert!(rc.all);
    }

    #[test]
    fn rejects_unknown_keys_and_values() {
        assert!(FileConfig::parse("colour=blue").is_err());
        assert!(FileConfig::parse("no equals sign").is_err());
        let f = FileConfig::parse("tmax=lots").unwrap();
        let g = Globals { format: Format::Text, out: None, cache_dir: None };
        let v = VerifyArgs { all: true, ..Default::default() };
        assert!(run_config(&v, g, &f).is_err());
    }

    #[test]
    fn needs_a_selection() {
        let g = || Globals { format: Format::Text, out: None, cache_dir: None };
        let f = FileConfig::default();
        assert!(run_config(&VerifyArgs::default(), g(), &f).is_err());
        let both = VerifyArgs { all: true, ids: vec!["qtno".into()], ..Default::default() };
        assert!(run_config(&both, g(), &f).is_err());
        let bad = VerifyArgs { all: true, profile: Some("huge".into()), ..Default::default() };
        assert!(run_config(&bad, g(), &f).is_err());
    }
}
