//! The identity registry: each entry builds pairs of series that must agree
//! inside its windows, and [`verify`] reports the first disagreement.

mod cauchy;
mod classical;
mod elliptic;
mod gauge;
mod nekrasov;
mod qqpp;
mod special;
mod util;

pub use gauge::{double_product, r_function};
pub use special::{cp_sides, dp_killed, jacobi_sides};

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Rational, Var};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Theorem,
    ConjectureEvidence,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Theorem => "theorem",
            Status::ConjectureEvidence => "conjecture-evidence",
        }
    }
}

/// Truncation windows. Each entry reads the fields it needs and ignores
/// the rest; the meaning of `size` is entry specific (a partition size cap,
/// a largest `n`, or a largest `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Windows {
    /// Order in the grading variable `T`.
    pub tmax: u32,
    /// Cap on `q` and `t`.
    pub qt_deg: i32,
    /// `u ∈ [-u_window, u_window]`.
    pub u_window: i32,
    /// Cap on auxiliary variables (`x_i`, `y_j`, `a`..`d`, `u`, `v`, `w`).
    pub extra_deg: i32,
    pub size: u32,
    /// Order in the elliptic nome `p`.
    pub p_max: u32,
}

impl Windows {
    pub const fn new(tmax: u32, qt_deg: i32, u_window: i32, extra_deg: i32, size: u32) -> Windows {
        Windows { tmax, qt_deg, u_window, extra_deg, size, p_max: 0 }
    }

    pub fn apply(&self, o: &WindowOverride) -> Windows {
        Windows {
            tmax: o.tmax.unwrap_or(self.tmax),
            qt_deg: o.qt_deg.unwrap_or(self.qt_deg),
            u_window: o.u_window.unwrap_or(self.u_window),
            extra_deg: o.extra_deg.unwrap_or(self.extra_deg),
            size: o.size.unwrap_or(self.size),
            p_max: o.p_max.unwrap_or(self.p_max),
        }
    }
}

impl fmt::Display for Windows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tmax={} qt_deg={} u_window={} extra_deg={} size={} p_max={}",
            self.tmax, self.qt_deg, self.u_window, self.extra_deg, self.size, self.p_max
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WindowOverride {
    pub tmax: Option<u32>,
    pub qt_deg: Option<i32>,
    pub u_window: Option<i32>,
    pub extra_deg: Option<i32>,
    pub size: Option<u32>,
    pub p_max: Option<u32>,
}

/// Two series that must agree, with a label naming the instance.
#[derive(Clone, Debug)]
pub struct Pair {
    pub label: String,
    pub lhs: MultiSeries,
    pub rhs: MultiSeries,
    /// Explicit comparison bounds; other truncated variables are compared
    /// up to the common precision.
    pub window: Vec<(Var, i32)>,
}

impl Pair {
    pub fn new(label: impl Into<String>, lhs: MultiSeries, rhs: MultiSeries) -> Pair {
        Pair { label: label.into(), lhs, rhs, window: Vec::new() }
    }

    /// Compares only up to `window`, failing with a window error if either
    /// side is not known that far.
    pub fn within(mut self, window: &[(Var, i32)]) -> Pair {
        self.window = window.to_vec();
        self
    }

    /// A count that has to come out as `want`.
    pub fn count(label: impl Into<String>, got: usize, want: usize) -> Pair {
        let r = crate::exactnum::Ring::new();
        Pair::new(label, r.constant(Rational::int(got as i64)), r.constant(Rational::int(want as i64)))
    }
}

pub type Builder = fn(&Windows) -> Result<Vec<Pair>>;

#[derive(Clone, Copy)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub windows: Windows,
    pub build: Builder,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("windows", &self.windows)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstDiff {
    pub label: String,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub status: Status,
    pub windows: Windows,
    pub pass: bool,
    pub first_diff: Option<FirstDiff>,
    pub checks: usize,
    pub engine_version: &'static str,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{} [{}] {} ({} checks; {})", self.id, self.status.name(), verdict, self.checks, self.windows)?;
        if let Some(d) = &self.first_diff {
            write!(f, " first diff in {} at {}: {} vs {}", d.label, d.monomial, d.lhs, d.rhs)?;
        }
        Ok(())
    }
}

/// All entries, sorted by id.
pub fn registry() -> Vec<IdentityEntry> {
    let mut out = Vec::new();
    out.extend(nekrasov::entries());
    out.extend(classical::entries());
    out.extend(special::entries());
    out.extend(cauchy::entries());
    out.extend(qqpp::entries());
    out.extend(gauge::entries());
    out.extend(elliptic::entries());
    out.sort_by_key(|e| e.id);
    out
}

pub fn lookup(id: &str) -> Result<IdentityEntry> {
    registry().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Builds both sides of `id` and compares them.
pub fn verify(id: &str, overrides: &WindowOverride) -> Result<IdentityReport> {
    let e = lookup(id)?;
    run(&e, &e.windows.apply(overrides), false)
}

/// Like [`verify`], but with `1` added to the constant term of the first
/// right-hand side. A sound verifier must report a failure.
pub fn verify_perturbed(id: &str, overrides: &WindowOverride) -> Result<IdentityReport> {
    let e = lookup(id)?;
    run(&e, &e.windows.apply(overrides), true)
}

pub fn run(entry: &IdentityEntry, windows: &Windows, perturb: bool) -> Result<IdentityReport> {
    let mut pairs = (entry.build)(windows)?;
    if perturb {
        let p = pairs.first_mut().ok_or_else(|| Error::Structural("entry built no pairs".into()))?;
        let one = p.rhs.ring().one();
        p.rhs = p.rhs.add(&one)?;
    }
    let mut first_diff = None;
    for p in &pairs {
        if let Some((m, a, b)) = p.lhs.first_diff(&p.rhs, &p.window)? {
            first_diff = Some(FirstDiff {
                label: p.label.clone(),
                monomial: p.lhs.mono_text(&m),
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
            break;
        }
    }
    Ok(IdentityReport {
        id: entry.id.to_string(),
        status: entry.status,
        windows: *windows,
        pass: first_diff.is_none(),
        first_diff,
        checks: pairs.len(),
        engine_version: ENGINE_VERSION,
    })
}

#[cfg(test)]
mod tests;
