//! Sums of two principally specialized skew polynomials, and the
//! interpolation binomial theorem at rational points.

use alloc::format;
use alloc::vec::Vec;

use super::util::times;
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{Rational, Ring, Term, Var};
use crate::hooks::{hook_b, qt_pochhammer, Params};
use crate::macdonald::{
    binomial_at, binomial_theorem_sides, principal_p, principal_p_inf, rho_length, skew_q_rho, Alphabet, Branching,
};
use crate::partitions::{partitions_up_to, Partition};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "qqpp",
            statement: "Σ_ν q^{-n(λ')-n(μ')-|ν|} t^{n(λ)+n(μ)} b_ν(t,q) Q_{λ'/ν}(q^ρ;t,q) Q_{μ'/ν}(q^ρ;t,q) \
                        = P_μ(t^ρ;q,t) P_λ(q^{-μ}t^ρ;q,t), all |λ|,|μ| ≤ size",
            status: Status::Theorem,
            windows: Windows::new(0, 5, 0, 0, 3),
            build: qqpp,
        },
        IdentityEntry {
            id: "qqpp-finite",
            statement: "Σ_ν q^{-n(λ')-n(μ')-|ν|} t^{n(λ)+n(μ)} (t^n;q,t)_λ (t^n;q,t)_μ/((t^n;q,t)_ν b_ν(q,t)) \
                        Q_{λ'/ν'}(q^ρ;t,q) Q_{μ'/ν'}(q^ρ;t,q) = P_μ(t^{ρ_n}) P_λ(q^{-μ}t^{ρ_n}), n ≤ 3",
            status: Status::Theorem,
            windows: Windows::new(0, 5, 0, 0, 3),
            build: qqpp_finite,
        },
        IdentityEntry {
            id: "binom-theorem",
            statement: "Σ_ν a^|ν| [λ,ν]_{1/q,1/t} P*_λ(at^{-δ})/P*_ν(at^{-δ}) P*_ν(x;1/q,1/t) = P*_λ(ax), at rational points",
            status: Status::Theorem,
            windows: Windows::new(0, 0, 0, 0, 2),
            build: binom_theorem,
        },
        IdentityEntry {
            id: "qbinom-duality",
            statement: "[λ,μ]_{q,t} = [λ',μ']_{1/t,1/q}, at rational points",
            status: Status::Theorem,
            windows: Windows::new(0, 0, 0, 0, 4),
            build: qbinom_duality,
        },
    ]
}

fn n_conj(l: &Partition) -> i32 {
    l.conjugate().n_stat() as i32
}

// the left sides carry q^{-n(λ')-n(μ')-|ν|}; the caps leave room for it
fn ring_for(w: &Windows, lambda: &Partition, mu: &Partition) -> Ring {
    let slack = n_conj(lambda) + n_conj(mu) + lambda.size().min(mu.size()) as i32;
    Ring::new().trunc(Var::Q, w.qt_deg + slack).trunc(Var::T, w.qt_deg)
}

/// `(q^{-μ_1}, q^{-μ_2} t, ..., q^{-μ_n} t^{n-1})`.
fn shifted_rho(p: &Params, mu: &Partition, n: usize) -> Alphabet {
    Alphabet::new((1..=n).map(|i| p.qt(-(mu.part(i) as i32), i as i32 - 1)).collect())
}

fn prefactor(p: &Params, lambda: &Partition, mu: &Partition, nu: &Partition) -> Term {
    p.qt(-n_conj(lambda) - n_conj(mu) - nu.size() as i32, (lambda.n_stat() + mu.n_stat()) as i32)
}

fn qqpp(w: &Windows) -> Result<Vec<Pair>> {
    let window = [(Var::Q, w.qt_deg), (Var::T, w.qt_deg)];
    let shapes = partitions_up_to(w.size);
    let mut out = Vec::new();
    for lambda in &shapes {
        for mu in &shapes {
            let ring = ring_for(w, lambda, mu);
            let p = Params::standard(&ring);
            let mut bs = Branching::new(p.swap());
            let (lc, mc) = (lambda.conjugate(), mu.conjugate());
            let mut lhs = ring.zero();
            for nu in shapes.iter().filter(|n| lc.contains(n) && mc.contains(n)) {
                let f = skew_q_rho(&mut bs, &ring, &lc, nu)?.mul(&skew_q_rho(&mut bs, &ring, &mc, nu)?)?;
                let f = f.mul(&hook_b(&ring, nu, &p.swap())?.expand(&ring)?)?;
                lhs = lhs.add(&times(&f, &prefactor(&p, lambda, mu, nu))?)?;
            }
            let n = rho_length(&ring, &p.t)?.max(mu.len());
            let mut br = Branching::new(p.clone());
            let rhs = principal_p_inf(&ring, mu, &p)?.mul(&br.eval_p(&ring, lambda, &shifted_rho(&p, mu, n))?)?;
            out.push(Pair::new(format!("λ = {}, μ = {}", lambda, mu), lhs, rhs).within(&window));
        }
    }
    Ok(out)
}

fn qqpp_finite(w: &Windows) -> Result<Vec<Pair>> {
    let window = [(Var::Q, w.qt_deg), (Var::T, w.qt_deg)];
    let shapes = partitions_up_to(w.size);
    let mut out = Vec::new();
    for n in 1..=3usize {
        let fits: Vec<&Partition> = shapes.iter().filter(|l| l.len() <= n).collect();
        for lambda in &fits {
            for mu in &fits {
                let ring = ring_for(w, lambda, mu);
                let p = Params::standard(&ring);
                let tn = p.t.pow(n as i32);
                let mut bs = Branching::new(p.swap());
                let mut top = qt_pochhammer(&ring, &tn, lambda, &p)?;
                top.mul(&qt_pochhammer(&ring, &tn, mu, &p)?)?;
                let mut lhs = ring.zero();
                for nu in shapes.iter().filter(|x| lambda.contains(x) && mu.contains(x)) {
                    let nc = nu.conjugate();
                    let mut h = top.clone();
                    h.mul(&qt_pochhammer(&ring, &tn, nu, &p)?.inv())?;
                    h.mul(&hook_b(&ring, nu, &p)?.inv())?;
                    h.mul_term(&prefactor(&p, lambda, mu, nu));
                    let f = skew_q_rho(&mut bs, &ring, &lambda.conjugate(), &nc)?
                        .mul(&skew_q_rho(&mut bs, &ring, &mu.conjugate(), &nc)?)?;
                    lhs = lhs.add(&f.mul(&h.expand(&ring)?)?)?;
                }
                let mut br = Branching::new(p.clone());
                let rhs = principal_p(&ring, mu, n as u32, &p)?.mul(&br.eval_p(&ring, lambda, &shifted_rho(&p, mu, n))?)?;
                out.push(Pair::new(format!("n = {}, λ = {}, μ = {}", n, lambda, mu), lhs, rhs).within(&window));
            }
        }
    }
    Ok(out)
}

fn sample_points() -> [(Rational, Rational); 3] {
    [
        (Rational::new(2, 3), Rational::new(5, 7)),
        (Rational::int(3), Rational::new(1, 2)),
        (Rational::new(-2, 5), Rational::new(4, 3)),
    ]
}

fn binom_theorem(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new();
    let a = Rational::new(3, 5);
    let mut out = Vec::new();
    for lambda in partitions_up_to(w.size) {
        for n in lambda.len().max(1)..=2 {
            let x: Vec<Rational> = (0..n).map(|i| Rational::new(2 * i as i64 + 1, 7)).collect();
            for (q, t) in sample_points() {
                let (l, r) = binomial_theorem_sides(&lambda, n, &q, &t, &a, &x)?;
                out.push(Pair::new(format!("λ = {}, n = {}, q = {}, t = {}", lambda, n, q, t), ring.constant(l), ring.constant(r)));
            }
        }
    }
    Ok(out)
}

fn qbinom_duality(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new();
    let mut out = Vec::new();
    for lambda in partitions_up_to(w.size) {
        for mu in partitions_up_to(lambda.size()).iter().filter(|m| lambda.contains(m)) {
            for (q, t) in sample_points() {
                let l = binomial_at(&lambda, mu, &q, &t)?;
                let (qd, td) = (t.recip().unwrap(), q.recip().unwrap());
                let r = binomial_at(&lambda.conjugate(), &mu.conjugate(), &qd, &td)?;
                out.push(Pair::new(format!("λ = {}, μ = {}, q = {}, t = {}", lambda, mu, q, t), ring.constant(l), ring.constant(r)));
            }
        }
    }
    Ok(out)
}
