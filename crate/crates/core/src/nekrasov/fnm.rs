//! The finite family `f_{n,m}(u,T;q,t)` in its three representations.

use alloc::vec;
use alloc::vec::Vec;

use super::{t_order, t_power};
use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Ring, TGraded, Term, Var};
use crate::hooks::{qtno_summand, HookProduct, Params};
use crate::macdonald::{Alphabet, Branching};
use crate::partitions::{in_box, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// The double sum over `λ, μ ⊆ (m^n)` of four Macdonald evaluations.
    Def,
    /// The single sum after the dual Cauchy identity.
    SingleSum,
    /// Hook products only.
    HookForm,
}

impl Provenance {
    pub const ALL: [Provenance; 3] = [Provenance::Def, Provenance::SingleSum, Provenance::HookForm];

    pub fn name(self) -> &'static str {
        match self {
            Provenance::Def => "def",
            Provenance::SingleSum => "single_sum",
            Provenance::HookForm => "hook_form",
        }
    }

    pub fn parse(s: &str) -> Option<Provenance> {
        Provenance::ALL.into_iter().find(|p| p.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnmResult {
    pub n: u32,
    pub m: u32,
    pub provenance: Provenance,
    pub value: TGraded,
}

/// `f_{n,m}` in full; the T-cap of `ring` must be at least `nm`.
pub fn fnm(ring: &Ring, n: u32, m: u32, provenance: Provenance, u: &Term, p: &Params) -> Result<FnmResult> {
    if t_order(ring)? < n * m {
        return Err(Error::WindowTooSmall { var: Var::Tg, exponent: (n * m) as i32 });
    }
    fnm_to(ring, n, m, provenance, u, p)
}

/// `f_{n,m}` up to the T-cap of `ring`.
pub fn fnm_to(ring: &Ring, n: u32, m: u32, provenance: Provenance, u: &Term, p: &Params) -> Result<FnmResult> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("f_{n,m} needs n, m >= 1".into()));
    }
    let order = t_order(ring)?.min(n * m);
    let f = match provenance {
        Provenance::Def => def_form(ring, n, m, order, u, p)?,
        Provenance::SingleSum => single_sum(ring, n, m, order, u, p)?,
        Provenance::HookForm => hook_form(ring, n, m, order, u, p)?,
    };
    let value = TGraded::split(&f, Var::Tg, order as i32)?;
    Ok(FnmResult { n, m, provenance, value })
}

// caps of `ring` raised by `extra`, indexed like the ring
fn widen(ring: &Ring, extra: &[i32]) -> Ring {
    let mut out = ring.clone();
    for (v, &e) in ring.specs().iter().zip(extra) {
        if v.is_trunc() && e > 0 {
            out = out.trunc(v.var, v.cap + e);
        }
    }
    out
}

fn negative_part(ring: &Ring, terms: &[Term]) -> Vec<i32> {
    (0..ring.len()).map(|i| terms.iter().map(|t| (-t.m.get(i)).max(0)).max().unwrap_or(0)).collect()
}

fn def_form(ring: &Ring, n: u32, m: u32, order: u32, u: &Term, p: &Params) -> Result<MultiSeries> {
    let nm = (n * m) as i32;
    let base = u.neg().pow(nm).mul(&p.qt((n * m * (m + 1) / 2) as i32, (m * n * (n - 1) / 2) as i32));
    let step = u.neg().mul(&p.qt(m as i32, n as i32 - 1)).inv();
    let work = widen(ring, &negative_part(ring, &[base.clone(), base.mul(&step.pow(2 * nm))]));
    let mut br = Branching::new(p.clone());
    let mut dual = Branching::new(p.swap());
    let boxed = in_box(m, n);
    let mut acc = work.zero();
    for lam in boxed.iter().filter(|l| l.size() <= order) {
        let lc = lam.conjugate();
        let a = br.eval_p(&work, lam, &Alphabet::geometric(&p.t, n as usize))?;
        let b = dual.eval_p(&work, &lc, &Alphabet::geometric(&p.q, m as usize))?;
        let ab = a.mul(&b)?;
        if ab.is_zero() {
            continue;
        }
        let x = Alphabet::shifted(lam, n as usize, p);
        let y = Alphabet::shifted(&lc, m as usize, &p.swap());
        let mut inner = work.zero();
        for mu in &boxed {
            let c = br.eval_p(&work, mu, &x)?;
            if c.is_zero() {
                continue;
            }
            let d = dual.eval_p(&work, &mu.conjugate(), &y)?;
            let w = step.pow(mu.size() as i32);
            inner = inner.add(&c.mul(&d)?.mul_term(&w.c, &w.m)?)?;
        }
        let s = lam.size() as i32;
        let w = base.mul(&step.pow(s)).mul(&t_power(ring, s));
        acc = acc.add(&ab.mul(&inner)?.mul_term(&w.c, &w.m)?)?;
    }
    acc.with_caps(ring)
}

fn single_sum(ring: &Ring, n: u32, m: u32, order: u32, u: &Term, p: &Params) -> Result<MultiSeries> {
    let lead = p.t.mul(&u.inv()).neg();
    let mut hooks: Vec<(Partition, HookProduct)> = Vec::new();
    let mut need = vec![0; ring.len()];
    for lam in in_box(m, n).into_iter().filter(|l| l.size() <= order) {
        let lc = lam.conjugate();
        let s = lam.size() as i32;
        let mut h = HookProduct::new(ring);
        h.mul_term(&lead.pow(s).mul(&t_power(ring, s)));
        for i in 1..=n as usize {
            for j in 1..=m as usize {
                let e = p.qt(j as i32 - lam.part(i) as i32, i as i32 - lc.part(j) as i32 - 1);
                h.push_one_minus(&u.mul(&e), 1)?;
            }
        }
        if h.is_zero() {
            continue;
        }
        for (i, v) in ring.specs().iter().enumerate() {
            if v.is_trunc() {
                let val = h.valuation(i).ok_or_else(|| Error::Structural("unbounded valuation".into()))?;
                need[i] = need[i].max(-val);
            }
        }
        hooks.push((lam, h));
    }
    let work = widen(ring, &need);
    let mut br = Branching::new(p.clone());
    let mut dual = Branching::new(p.swap());
    let mut acc = work.zero();
    for (lam, h) in hooks {
        let a = br.eval_p(&work, &lam, &Alphabet::geometric(&p.t, n as usize))?;
        let b = dual.eval_p(&work, &lam.conjugate(), &Alphabet::geometric(&p.q, m as usize))?;
        acc = acc.add(&h.expand(&work)?.mul(&a.mul(&b)?)?)?;
    }
    acc.with_caps(ring)
}

fn hook_form(ring: &Ring, n: u32, m: u32, order: u32, u: &Term, p: &Params) -> Result<MultiSeries> {
    // single summands are not Laurent polynomials in u, only their sum is
    let spread: i32 = ring.specs().iter().filter(|v| v.is_trunc() && v.var != Var::Tg).map(|v| v.cap).sum();
    let mut work = ring.clone();
    for v in ring.specs() {
        if !v.is_trunc() {
            work = work.laurent(v.var, v.lo - spread, v.hi + spread);
        }
    }
    let mut pre = HookProduct::new(ring);
    for i in 1..=n as i32 {
        for j in 1..=m as i32 {
            pre.push_one_minus(&u.mul(&p.qt(j, i - 1)), 1)?;
        }
    }
    let (n, m) = (n as i32, m as i32);
    let mut acc = work.zero();
    for lam in in_box(m as u32, n as u32).into_iter().filter(|l| l.size() <= order) {
        let mut h = qtno_summand(ring, &lam, u, p)?;
        for s in lam.all_cell_stats() {
            let (a, l) = (s.arm_co, s.leg_co);
            h.push_one_minus(&p.qt(a, n - l), 1)?;
            h.push_one_minus(&p.qt(m - a, l), 1)?;
            h.push_one_minus(&u.mul(&p.qt(a + 1, n - l - 1)), -1)?;
            h.push_one_minus(&u.mul(&p.qt(m - a, l)), -1)?;
        }
        if h.is_zero() {
            continue;
        }
        h.mul_term(&t_power(ring, lam.size() as i32));
        acc = acc.add(&h.expand(&work)?)?;
    }
    acc.mul(&pre.expand(&work)?)?.with_caps(ring)
}
