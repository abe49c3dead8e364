//! The `u = q^{-p}` specialization, its `q = t` shadow over p-cores and the
//! Jacobi triple product.

use alloc::format;
use alloc::vec::Vec;

use super::util::{poch_hook, t_pow, var};
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Var};
use crate::hooks::{qtno_summand, HookProduct, Params};
use crate::nekrasov::qtno_lhs;
use crate::partitions::{partitions_up_to, Partition};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "dp",
            statement: "Σ_{λ∈D_p} T^|λ| Π_s (1-q^{a-p+1}t^l)(1-q^{a+p}t^{l+1})/((1-q^{a+1}t^l)(1-q^a t^{l+1})) \
                        = Π_{i=1}^{p-1} (q^{i-p}T;t,T)_∞/(q^i tT;t,T)_∞",
            status: Status::Theorem,
            windows: Windows::new(6, 8, 0, 0, 3),
            build: dp,
        },
        IdentityEntry {
            id: "cp",
            statement: "Σ_{λ p-core} T^|λ| Π_h (1-t^{h-p})(1-t^{h+p})/(1-t^h)^2 \
                        = (T;T)_∞^{p-1} Π_{i<j} (t^{j-i}T;T)_∞ (t^{i-j}T;T)_∞",
            status: Status::Theorem,
            windows: Windows::new(6, 8, 0, 0, 3),
            build: cp,
        },
        IdentityEntry {
            id: "jacobi-triple",
            statement: "Σ_{n≥1} (-1)^n T^{n(n-1)/2} (t^n - t^{1-n})/(1-t) = (T;T)_∞ (tT;T)_∞ (T/t;T)_∞",
            status: Status::Theorem,
            windows: Windows::new(6, 8, 0, 0, 0),
            build: jacobi_triple,
        },
    ]
}

// the lowest power of the specialized variable is -(p-1) per unit of T,
// so the cap is raised by that much to keep `qt_deg` fully known
fn slack_ring(w: &Windows, p: u32, x: Var) -> Ring {
    let extra = (p.max(1) as i32 - 1) * w.tmax as i32;
    let mut r = Ring::new().trunc(x, w.qt_deg + extra).trunc(Var::Tg, w.tmax as i32);
    if x == Var::Q {
        r = r.trunc(Var::T, w.qt_deg);
    }
    r
}

/// Partitions of size at most `k` whose summand vanishes at `u = q^{-p}`.
pub fn dp_killed(p: u32, k: u32) -> Result<Vec<Partition>> {
    let ring = Ring::new().trunc(Var::Q, 1).trunc(Var::T, 1);
    let params = Params::standard(&ring);
    let u = params.q.pow(-(p as i32));
    let mut out = Vec::new();
    for lambda in partitions_up_to(k) {
        if qtno_summand(&ring, &lambda, &u, &params)?.is_zero() {
            out.push(lambda);
        }
    }
    Ok(out)
}

fn dp(w: &Windows) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for p in 1..=w.size {
        let ring = slack_ring(w, p, Var::Q);
        let params = Params::standard(&ring);
        let (q, t) = (params.q.clone(), params.t.clone());
        let pi = p as i32;
        let mut lhs = ring.zero();
        for lambda in partitions_up_to(w.tmax).into_iter().filter(|l| l.in_dp(p)) {
            let mut h = HookProduct::new(&ring);
            h.mul_term(&t_pow(&ring, lambda.size() as i32));
            for s in lambda.all_cell_stats() {
                let (a, l) = (s.arm, s.leg);
                h.push_one_minus(&params.qt(a - pi + 1, l), 1)?;
                h.push_one_minus(&params.qt(a + pi, l + 1), 1)?;
                h.push_one_minus(&params.qt(a + 1, l), -1)?;
                h.push_one_minus(&params.qt(a, l + 1), -1)?;
            }
            lhs = lhs.add(&h.expand(&ring)?)?;
        }
        let tg = t_pow(&ring, 1);
        let num: Vec<_> = (1..pi).map(|i| q.pow(i - pi).mul(&tg)).collect();
        let den: Vec<_> = (1..pi).map(|i| q.pow(i).mul(&t).mul(&tg)).collect();
        let rhs = poch_hook(&ring, &num, &den, &[t.clone(), tg.clone()])?.expand(&ring)?;
        let full = qtno_lhs(&ring, &q.pow(-pi), &params)?.join(&ring)?;
        let window = [(Var::Q, w.qt_deg)];
        out.push(Pair::new(format!("p = {}", p), lhs.clone(), rhs).within(&window));
        out.push(Pair::new(format!("p = {}: D_p sum = full sum at u = q^-p", p), lhs, full).within(&window));
        let killed = dp_killed(p, w.tmax)?;
        let wrong = partitions_up_to(w.tmax).iter().filter(|l| killed.contains(l) == l.in_dp(p)).count();
        out.push(Pair::count(format!("p = {}: summands vanish exactly off D_p", p), wrong, 0));
    }
    Ok(out)
}

/// Both sides of the p-core identity, compared up to `t^{qt_deg}`.
pub fn cp_sides(w: &Windows, p: u32) -> Result<(MultiSeries, MultiSeries)> {
    let ring = slack_ring(w, p, Var::T);
    let t = var(&ring, Var::T);
    let pi = p as i32;
    let mut lhs = ring.zero();
    for lambda in partitions_up_to(w.tmax).into_iter().filter(|l| l.is_p_core(p)) {
        let mut h = HookProduct::new(&ring);
        h.mul_term(&t_pow(&ring, lambda.size() as i32));
        for hk in lambda.hooks() {
            let hk = hk as i32;
            h.push_one_minus(&t.pow(hk - pi), 1)?;
            h.push_one_minus(&t.pow(hk + pi), 1)?;
            h.push_one_minus(&t.pow(hk), -2)?;
        }
        lhs = lhs.add(&h.expand(&ring)?)?;
    }
    let tg = t_pow(&ring, 1);
    let mut num: Vec<_> = (1..pi).map(|_| tg.clone()).collect();
    for i in 1..=pi {
        for j in i + 1..=pi {
            num.push(t.pow(j - i).mul(&tg));
            num.push(t.pow(i - j).mul(&tg));
        }
    }
    let rhs = poch_hook(&ring, &num, &[], &[tg])?.expand(&ring)?;
    Ok((lhs, rhs))
}

fn cp(w: &Windows) -> Result<Vec<Pair>> {
    let window = [(Var::T, w.qt_deg)];
    let mut out = Vec::new();
    for p in 1..=w.size {
        let (lhs, rhs) = cp_sides(w, p)?;
        out.push(Pair::new(format!("p = {}", p), lhs, rhs).within(&window));
        let lambdas = partitions_up_to(w.tmax);
        let wrong = lambdas.iter().filter(|l| l.is_p_core(p) != l.is_p_core_divisible(p)).count();
        out.push(Pair::count(format!("p = {}: no hook p iff no hook divisible by p", p), wrong, 0));
    }
    if w.size >= 2 {
        let (lhs, rhs) = cp_sides(w, 2)?;
        let (jl, jr) = jacobi_sides(w)?;
        out.push(Pair::new("p = 2 sum = triple product sum", lhs, jl).within(&window));
        out.push(Pair::new("p = 2 product = triple product", rhs, jr).within(&window));
    }
    Ok(out)
}

/// The triple product sum and product, in the ring of the `p = 2` case.
pub fn jacobi_sides(w: &Windows) -> Result<(MultiSeries, MultiSeries)> {
    let ring = slack_ring(w, 2, Var::T);
    let k = w.tmax as i32;
    let mut terms = Vec::new();
    let mut n = 1;
    while n * (n - 1) / 2 <= k {
        // (t^n - t^{1-n})/(1-t) = -(t^{1-n} + ... + t^{n-1})
        let sign = if n % 2 == 0 { -1 } else { 1 };
        for j in 1 - n..n {
            terms.push((ring.mono(&[(Var::T, j), (Var::Tg, n * (n - 1) / 2)]), Rational::int(sign)));
        }
        n += 1;
    }
    let lhs = MultiSeries::from_terms(&ring, terms)?;
    let (t, tg) = (var(&ring, Var::T), t_pow(&ring, 1));
    let rhs = poch_hook(&ring, &[tg.clone(), t.mul(&tg), t.inv().mul(&tg)], &[], &[tg])?.expand(&ring)?;
    Ok((lhs, rhs))
}

fn jacobi_triple(w: &Windows) -> Result<Vec<Pair>> {
    let (lhs, rhs) = jacobi_sides(w)?;
    Ok(alloc::vec![Pair::new("triple product", lhs, rhs).within(&[(Var::T, w.qt_deg)])])
}
