mod args;
mod cache;
mod compute;
mod config;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qtnok_core::identities::registry;
use serde_json::{json, Value};

use args::{CacheAction, Cli, Command, Format};
use cache::Cache;
use compute::ComputeError;
use config::{ConfigError, Globals};
use verify::{windows_json, EXIT_CONFIG, EXIT_ENGINE, EXIT_FAIL, EXIT_OK};

fn emit(g: &Globals, text: &str) -> Result<(), ConfigError> {
    match &g.out {
        Some(p) => std::fs::write(p, text).map_err(|e| ConfigError(format!("{}: {}", p.display(), e))),
        None => {
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn list(g: &Globals) -> String {
    let reg = registry();
    match g.format {
        Format::Json => {
            let v: Vec<Value> = reg
                .iter()
                .map(|e| json!({"id": e.id, "status": e.status.name(), "windows": windows_json(&e.windows), "statement": e.statement}))
                .collect();
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Format::Text => {
            let width = reg.iter().map(|e| e.id.len()).max().unwrap_or(0);
            let mut s = String::new();
            for e in reg {
                s += &format!("{:width$}  {:19}  {}\n    {}\n", e.id, e.status.name(), e.windows, e.statement, width = width);
            }
            s
        }
    }
}

fn run(cli: Cli) -> Result<i32, ConfigError> {
    let file = config::load(&cli)?;
    let g = config::globals(&cli, &file)?;
    match &cli.command {
        Command::List => {
            emit(&g, &list(&g))?;
            Ok(EXIT_OK)
        }
        Command::Compute(obj) => match compute::compute(obj, g.format) {
            Ok(text) => {
                emit(&g, &text)?;
                Ok(EXIT_OK)
            }
            Err(ComputeError::Config(s)) => Err(ConfigError(s)),
            Err(ComputeError::Engine(e)) => {
                eprintln!("qtnok: {}", e);
                Ok(EXIT_ENGINE)
            }
        },
        Command::Cache { action } => {
            let dir = g.cache_dir.clone().ok_or_else(|| ConfigError("no cache directory configured".into()))?;
            let c = Cache::new(&dir);
            let io = |e: std::io::Error| ConfigError(format!("{}: {}", dir.display(), e));
            let text = match action {
                CacheAction::Stat => {
                    let s = c.stat().map_err(io)?;
                    format!("dir: {}\nentries: {}\nbytes: {}\n", c.dir().display(), s.entries, s.bytes)
                }
                CacheAction::Clear => format!("removed {} entries from {}\n", c.clear().map_err(io)?, c.dir().display()),
            };
            emit(&g, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify(v) => {
            let rc = config::run_config(v, g, &file)?;
            let selected = verify::select(&rc)?;
            let cache = rc.cache_dir.as_deref().map(Cache::new);
            let outcomes = verify::run_all(&selected, rc.jobs, rc.perturb, cache.as_ref());
            let text = match rc.format {
                Format::Json => {
                    let v: Vec<Value> = outcomes.iter().map(|o| o.json()).collect();
                    serde_json::to_string_pretty(&v).unwrap() + "\n"
                }
                Format::Text => outcomes.iter().map(|o| o.text() + "\n").collect(),
            };
            let g = Globals { format: rc.format, out: rc.out.clone(), cache_dir: None };
            emit(&g, &text)?;
            Ok(verify::exit_code(&outcomes))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG as u8 } else { EXIT_OK as u8 });
        }
    };
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("qtnok: {}", e);
            EXIT_CONFIG
        }
    };
    debug_assert!([EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_ENGINE].contains(&code));
    ExitCode::from(code as u8)
}
