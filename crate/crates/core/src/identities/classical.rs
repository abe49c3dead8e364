//! Hook-length entries that need no Macdonald polynomials beyond Schur
//! functions: factorial sums, the genus 0 and 1 hook series, the Schur case
//! of the q,t sum and the classical formula.

use alloc::format;
use alloc::vec::Vec;

use super::util::{mono, poch_ratio, t_pow, var};
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{factorial, MultiSeries, Rational, Ring, Term, Var};
use crate::hooks::{classical_no_summand_at, genus_hook, hook_c, hook_cprime, HookProduct, Params};
use crate::macdonald::{Alphabet, Branching};
use crate::nekrasov::{classical_no_sides, log_pochhammer, qtno_lhs};
use crate::partitions::{partitions_of, partitions_up_to, Partition};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "nfactorial",
            statement: "Σ_{λ⊢n} Π_s 1/h(s)^2 = 1/n!",
            status: Status::Theorem,
            windows: Windows::new(0, 0, 0, 0, 8),
            build: nfactorial,
        },
        IdentityEntry {
            id: "qt-nfactorial",
            statement: "Σ_{λ⊢n} q^{n(λ')} t^{n(λ)} / (c_λ(q,t) c'_λ(q,t)) = [u^n] (-u;q,t)_∞",
            status: Status::Theorem,
            windows: Windows::new(0, 8, 0, 0, 6),
            build: qt_nfactorial,
        },
        IdentityEntry {
            id: "genus0",
            statement: "Σ_λ H_λ(q^{1/2},t^{-1/2}) T^|λ| = Π_{i,j} 1/(1-q^{i-1}t^j T), at q = Z^2, t = W^2",
            status: Status::Theorem,
            windows: Windows::new(4, 8, 0, 0, 0),
            build: genus0,
        },
        IdentityEntry {
            id: "hrv-g1",
            statement: "Σ_λ H_λ(q^{1/2},t^{-1/2}) T^|λ| = Π_{i,j,k} (1-q^{i-1/2}t^{j-1/2}T^k)^2/((1-q^{i-1}t^{j-1}T^k)(1-q^i t^j T^k)) \
                        at genus 1, q = Z^2, t = W^2; also the q,t sum at u = W/Z",
            status: Status::Theorem,
            windows: Windows::new(3, 8, 0, 0, 0),
            build: hrv_g1,
        },
        IdentityEntry {
            id: "tq-hook",
            statement: "Σ_λ T^|λ| Π_h (1-uq^h)(1-u^{-1}q^h)/(1-q^h)^2 = Π_{k,r} (1-uq^r T^k)^r (1-u^{-1}q^r T^k)^r/((1-q^{r-1}T^k)^r (1-q^{r+1}T^k)^r)",
            status: Status::Theorem,
            windows: Windows::new(4, 8, 4, 0, 0),
            build: tq_hook,
        },
        IdentityEntry {
            id: "hook-power-schur",
            statement: "Π_h (1-q^{h+p})(1-q^{h-p})/(1-q^h)^2 = (-1)^|λ| q^{-l(λ)p(p-1)/2} s_μ(1,q,...,q^{p-1}), \
                        μ = (λ_1..λ_p) + (λ'_1-λ'_p, ..., λ'_1-λ'_2, 0)",
            status: Status::Theorem,
            windows: Windows::new(0, 60, 0, 0, 4),
            build: hook_power_schur,
        },
        IdentityEntry {
            id: "classical-no",
            statement: "Σ_λ T^|λ| Π_h (1 - s/h^2) = Π_k (1-T^k)^{s-1}, and at s = 4 only staircases contribute",
            status: Status::Theorem,
            windows: Windows::new(6, 0, 0, 0, 0),
            build: classical_no,
        },
    ]
}

fn nfactorial(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new();
    let mut out = Vec::new();
    for n in 0..=w.size {
        let mut acc = Rational::ZERO;
        for lambda in partitions_of(n) {
            let mut prod = Rational::ONE;
            for h in lambda.hooks() {
                prod = &prod * &Rational::new(1, (h * h) as i64);
            }
            acc = &acc + &prod;
        }
        let rhs = factorial(n).recip().expect("n! is nonzero");
        out.push(Pair::new(format!("n = {}", n), ring.constant(acc), ring.constant(rhs)));
    }
    Ok(out)
}

/// `Σ_{λ⊢n} q^{n(λ')} t^{n(λ)} / (c_λ c'_λ)`.
pub(super) fn qt_factorial_sum(ring: &Ring, n: u32, p: &Params) -> Result<MultiSeries> {
    let mut acc = ring.zero();
    for lambda in partitions_of(n) {
        let mut h = hook_c(ring, &lambda, p)?;
        h.mul(&hook_cprime(ring, &lambda, p)?)?;
        let mut h = h.inv();
        h.mul_term(&p.qt(lambda.conjugate().n_stat() as i32, lambda.n_stat() as i32));
        acc = acc.add(&h.expand(ring)?)?;
    }
    Ok(acc)
}

fn qt_nfactorial(w: &Windows) -> Result<Vec<Pair>> {
    let n_max = w.size;
    let qt = Ring::new().trunc(Var::Q, w.qt_deg).trunc(Var::T, w.qt_deg);
    let ring = qt.clone().trunc(Var::U, n_max as i32);
    let p = Params::standard(&ring);
    let minus_u = var(&ring, Var::U).neg();
    let gen = log_pochhammer(&ring, &minus_u, &[p.q.clone(), p.t.clone()])?.exp()?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let lhs = qt_factorial_sum(&qt, n, &Params::standard(&qt))?;
        out.push(Pair::new(format!("n = {}", n), lhs, gen.extract(Var::U, n as i32)?));
    }
    Ok(out)
}

fn zw_ring(w: &Windows) -> Ring {
    Ring::new().trunc(Var::Z, w.qt_deg).trunc(Var::W, w.qt_deg).trunc(Var::Tg, w.tmax as i32)
}

fn genus_sum(ring: &Ring, g: u32, k: u32) -> Result<MultiSeries> {
    let mut acc = ring.zero();
    for lambda in partitions_up_to(k) {
        let mut h = genus_hook(ring, &lambda, g)?;
        h.mul_term(&t_pow(ring, lambda.size() as i32));
        acc = acc.add(&h.expand(ring)?)?;
    }
    Ok(acc)
}

fn genus0(w: &Windows) -> Result<Vec<Pair>> {
    let ring = zw_ring(w);
    let (q, t) = (mono(&ring, &[(Var::Z, 2)]), mono(&ring, &[(Var::W, 2)]));
    let lhs = genus_sum(&ring, 0, w.tmax)?;
    let rhs = poch_ratio(&ring, &[], &[t.mul(&t_pow(&ring, 1))], &[q, t])?;
    Ok(alloc::vec![Pair::new("genus 0 hook series", lhs, rhs)])
}

fn hrv_g1(w: &Windows) -> Result<Vec<Pair>> {
    let ring = zw_ring(w);
    let (q, t, tg) = (mono(&ring, &[(Var::Z, 2)]), mono(&ring, &[(Var::W, 2)]), t_pow(&ring, 1));
    let half = mono(&ring, &[(Var::Z, 1), (Var::W, 1), (Var::Tg, 1)]);
    let bases = [q.clone(), t.clone(), tg.clone()];
    let lhs = genus_sum(&ring, 1, w.tmax)?;
    let rhs = poch_ratio(&ring, &[half.clone(), half], &[tg.clone(), q.mul(&t).mul(&tg)], &bases)?;
    let u = mono(&ring, &[(Var::Z, -1), (Var::W, 1)]);
    let via_qtno = qtno_lhs(&ring, &u, &Params::new(q, t))?.join(&ring)?;
    Ok(alloc::vec![
        Pair::new("genus 1 hook series = product", lhs.clone(), rhs),
        Pair::new("genus 1 hook series = q,t sum at u = W/Z", lhs, via_qtno),
    ])
}

fn tq_hook(w: &Windows) -> Result<Vec<Pair>> {
    let (d, k) = (w.qt_deg, w.tmax as i32);
    let ring = Ring::new().trunc(Var::Q, d).laurent(Var::U, -w.u_window, w.u_window).trunc(Var::Tg, k);
    let (q, u) = (var(&ring, Var::Q), var(&ring, Var::U));
    let lhs = qtno_lhs(&ring, &u, &Params::new(q.clone(), q.clone()))?.join(&ring)?;
    let mut prod = HookProduct::new(&ring);
    for kk in 1..=k {
        let tk = t_pow(&ring, kk);
        for r in 1..=d + 1 {
            prod.push_one_minus(&u.mul(&q.pow(r)).mul(&tk), r)?;
            prod.push_one_minus(&u.inv().mul(&q.pow(r)).mul(&tk), r)?;
            prod.push_one_minus(&q.pow(r - 1).mul(&tk), -r)?;
            prod.push_one_minus(&q.pow(r + 1).mul(&tk), -r)?;
        }
    }
    Ok(alloc::vec![Pair::new("t = q", lhs, prod.expand(&ring)?)])
}

/// `(λ_1, ..., λ_p) + (λ'_1 - λ'_p, ..., λ'_1 - λ'_2, 0)`.
pub fn sl_weight(lambda: &Partition, p: u32) -> Partition {
    let lc = lambda.conjugate();
    let p = p as usize;
    let parts: Vec<u32> = (1..=p).map(|i| lambda.part(i) + lc.part(1) - lc.part(p + 1 - i)).collect();
    Partition::new(&parts)
}

fn hook_power_schur(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new().trunc(Var::Q, w.qt_deg);
    let q = var(&ring, Var::Q);
    let schur = Params::new(q.clone(), q.clone());
    let mut br = Branching::new(schur);
    let mut out = Vec::new();
    for lambda in partitions_up_to(w.size).into_iter().filter(|l| !l.is_empty()) {
        let n = lambda.size();
        for p in n + 1..=(n + 1).max(w.size) {
            let mut h = HookProduct::new(&ring);
            for hk in lambda.hooks() {
                let (hk, p) = (hk as i32, p as i32);
                h.push_one_minus(&q.pow(hk + p), 1)?;
                h.push_one_minus(&q.pow(hk - p), 1)?;
                h.push_one_minus(&q.pow(hk), -2)?;
            }
            let mu = sl_weight(&lambda, p);
            let s = br.eval_p(&ring, &mu, &Alphabet::geometric(&q, p as usize))?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let pre = Term::constant(Rational::int(sign)).mul(&q.pow(-(lambda.len() as i32) * (p * (p - 1) / 2) as i32));
            let rhs = s.mul_term(&pre.c, &pre.m)?;
            out.push(Pair::new(format!("λ = {}, p = {}", lambda, p), h.expand(&ring)?, rhs));
        }
    }
    Ok(out)
}

fn classical_no(w: &Windows) -> Result<Vec<Pair>> {
    let k = w.tmax;
    let ring = Ring::new().trunc(Var::Tg, k as i32).trunc(Var::S, k as i32);
    let (lhs, rhs) = classical_no_sides(&ring, &var(&ring, Var::S))?;
    let mut out: Vec<Pair> =
        lhs.coeffs.into_iter().zip(rhs.coeffs).enumerate().map(|(j, (a, b))| Pair::new(format!("T^{} in Q[s]", j), a, b)).collect();
    let plain = Ring::new().trunc(Var::Tg, k as i32);
    let four = Term::constant(Rational::int(4));
    let mut wrong = 0;
    for lambda in partitions_up_to(k) {
        let vanishes = classical_no_summand_at(&plain, &lambda, &four)?.is_zero();
        let stair = (0..=k + 1).any(|n| Partition::staircase(n) == lambda);
        wrong += (vanishes == stair) as usize;
    }
    out.push(Pair::count("s = 4 summands off staircases", wrong, 0));
    Ok(out)
}
