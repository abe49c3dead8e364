//! The q,t-Nekrasov-Okounkov identity and the finite family `f_{n,m}`.
//!
//! Every builder here takes a ring that contains the grading variable `T`
//! (`Var::Tg`); its cap is the T-order of the result.

mod checks;
mod classical;
mod fnm;
mod hrv;

pub use checks::{
    fnm_conjecture_check, fnm_limit_check, fnm_provenance_check, fnm_ring, fnm_special_values,
    fnm_symmetry_check, reflect_t, reflect_u,
};
pub use classical::{classical_no, classical_no_sides};
pub use fnm::{fnm, fnm_to, FnmResult, Provenance};
pub use hrv::{expected_degree, hbar_in_zw, hrv_pipeline, HrvOutcome};

use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Rational, Ring, TGraded, Term, Var};
use crate::hooks::{qtno_summand, HookProduct, Params};
use crate::partitions::partitions_of;
use crate::report::Report;

/// The T-order of a ring, i.e. the cap of `T`.
pub fn t_order(ring: &Ring) -> Result<u32> {
    match ring.spec(Var::Tg) {
        Some(s) if s.is_trunc() => Ok(s.cap.max(0) as u32),
        _ => Err(Error::Structural("ring needs a truncated T".into())),
    }
}

pub(crate) fn t_power(ring: &Ring, k: i32) -> Term {
    Term::mono(ring.mono(&[(Var::Tg, k)]))
}

/// `log (x; b_1, ..., b_k)_∞ = -Σ_r x^r / (r Π_i (1 - b_i^r))`, summed while
/// `x^r` stays inside the caps.
pub fn log_pochhammer(ring: &Ring, x: &Term, bases: &[Term]) -> Result<MultiSeries> {
    for b in bases {
        crate::macdonald::check_contracting(ring, b)?;
    }
    let mut rmax: Option<i32> = None;
    for (i, v) in ring.specs().iter().enumerate() {
        let e = x.m.get(i);
        if v.is_trunc() && e > 0 {
            let r = v.cap / e;
            rmax = Some(rmax.map_or(r, |m: i32| m.min(r)));
        }
    }
    let rmax = rmax.ok_or(Error::DivergentPochhammer)?;
    let mut acc = ring.zero();
    for r in 1..=rmax {
        let mut h = HookProduct::new(ring);
        h.mul_term(&x.pow(r).mul(&Term::constant(Rational::new(-1, r as i64))));
        for b in bases {
            h.push_one_minus(&b.pow(r), -1)?;
        }
        acc = acc.add(&h.expand(ring)?)?;
    }
    Ok(acc)
}

/// `Σ_{λ ⊢ k}` of the q,t-NO summand.
pub fn qtno_lhs_coefficient(ring: &Ring, k: u32, u: &Term, p: &Params) -> Result<MultiSeries> {
    let mut acc = ring.zero();
    for lambda in partitions_of(k) {
        acc = acc.add(&qtno_summand(ring, &lambda, u, p)?.expand(ring)?)?;
    }
    Ok(acc)
}

/// `Σ_λ T^{|λ|} Π_{s∈λ} (1-uq^{a+1}t^l)(1-u^{-1}q^a t^{l+1}) / ((1-q^{a+1}t^l)(1-q^a t^{l+1}))`.
pub fn qtno_lhs(ring: &Ring, u: &Term, p: &Params) -> Result<TGraded> {
    let k = t_order(ring)?;
    let mut acc = ring.zero();
    for j in 0..=k {
        let c = qtno_lhs_coefficient(ring, j, u, p)?;
        let tj = t_power(ring, j as i32);
        acc = acc.add(&c.mul_term(&tj.c, &tj.m)?)?;
    }
    TGraded::split(&acc, Var::Tg, k as i32)
}

/// `Π_{i,j,k≥1} (1-uq^i t^{j-1}T^k)(1-u^{-1}q^{i-1}t^j T^k) / ((1-q^{i-1}t^{j-1}T^k)(1-q^i t^j T^k))`
/// as `(uqT, u^{-1}tT; q,t,T)_∞ / (T, qtT; q,t,T)_∞`, assembled from the
/// logarithm.
pub fn qtno_rhs(ring: &Ring, u: &Term, p: &Params) -> Result<TGraded> {
    let k = t_order(ring)?;
    let log = qtno_rhs_log(ring, u, p)?;
    TGraded::split(&log.exp()?, Var::Tg, k as i32)
}

fn qtno_rhs_log(ring: &Ring, u: &Term, p: &Params) -> Result<MultiSeries> {
    let t = t_power(ring, 1);
    let bases = [p.q.clone(), p.t.clone(), t.clone()];
    let num = [u.mul(&p.q).mul(&t), u.inv().mul(&p.t).mul(&t)];
    let den = [t.clone(), p.qt(1, 1).mul(&t)];
    let mut log = ring.zero();
    for x in &num {
        log = log.add(&log_pochhammer(ring, x, &bases)?)?;
    }
    for x in &den {
        log = log.sub(&log_pochhammer(ring, x, &bases)?)?;
    }
    Ok(log)
}

/// Checks `qtno_lhs = qtno_rhs` coefficient by coefficient.
pub fn qtno_check(ring: &Ring, u: &Term, p: &Params) -> Result<Report> {
    let lhs = qtno_lhs(ring, u, p)?;
    let rhs = qtno_rhs(ring, u, p)?;
    let mut rep = Report::new("q,t-Nekrasov-Okounkov");
    for (k, (a, b)) in lhs.coeffs.iter().zip(&rhs.coeffs).enumerate() {
        rep.compare(&alloc::format!("T^{}", k), a, b, &[])?;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
