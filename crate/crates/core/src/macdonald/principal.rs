//! Principal specializations and q,t-binomial coefficients.

use super::{check_contracting, Alphabet, Branching};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Ring, Term};
use crate::hooks::{hook_c, hook_cprime, qt_pochhammer, HookProduct, Params};
use crate::partitions::Partition;

/// `P_λ(1, t, ..., t^{n-1}) = t^{n(λ)} (t^n;q,t)_λ / c_λ(q,t)`.
pub fn principal_p(ring: &Ring, lambda: &Partition, n: u32, p: &Params) -> Result<MultiSeries> {
    let mut h = qt_pochhammer(ring, &p.t.pow(n as i32), lambda, p)?;
    h.mul(&hook_c(ring, lambda, p)?.inv())?;
    h.mul_term(&p.t.pow(lambda.n_stat() as i32));
    h.expand(ring)
}

/// `P_λ(1, t, t^2, ...) = t^{n(λ)} / c_λ(q,t)`.
pub fn principal_p_inf(ring: &Ring, lambda: &Partition, p: &Params) -> Result<MultiSeries> {
    let mut h = hook_c(ring, lambda, p)?.inv();
    h.mul_term(&p.t.pow(lambda.n_stat() as i32));
    h.expand(ring)
}

/// Number of entries of `(1, x, x^2, ...)` that can reach the caps of
/// `ring`: every later entry has a truncated exponent past its cap.
pub fn rho_length(ring: &Ring, x: &Term) -> Result<usize> {
    check_contracting(ring, x)?;
    let mut n = i32::MAX;
    for (i, v) in ring.specs().iter().enumerate() {
        let e = x.m.get(i);
        if v.is_trunc() && e > 0 {
            n = n.min(v.cap.max(0) / e + 1);
        }
    }
    Ok(n as usize)
}

/// `Q_{λ/μ}(1, t, t^2, ...)` with the alphabet cut at [`rho_length`].
pub fn skew_q_rho(br: &mut Branching, ring: &Ring, lambda: &Partition, mu: &Partition) -> Result<MultiSeries> {
    let t = br.params().t.clone();
    let alpha = Alphabet::geometric(&t, rho_length(ring, &t)?);
    br.eval_skew_q(ring, lambda, mu, &alpha)
}

/// `Q_{λ/μ}(a t^ρ) = a^{|λ|-|μ|} Q_{λ/μ}(t^ρ)`.
pub fn skew_q_principal(
    br: &mut Branching,
    ring: &Ring,
    lambda: &Partition,
    mu: &Partition,
    a: &Term,
) -> Result<MultiSeries> {
    if !lambda.contains(mu) {
        return Ok(ring.zero());
    }
    let r = (lambda.size() - mu.size()) as i32;
    let ar = a.pow(r);
    let work = Alphabet::new(alloc::vec![ar.clone()]).working_ring(ring, 1);
    let v = skew_q_rho(br, &work, lambda, mu)?;
    v.mul_term(&ar.c, &ar.m)?.with_caps(ring)
}

/// `[λ, μ]_{q,t} = t^{n(μ)-n(λ)} c'_λ/c'_μ Q_{λ/μ}(t^ρ)`.
pub fn qt_binomial(br: &mut Branching, ring: &Ring, lambda: &Partition, mu: &Partition) -> Result<MultiSeries> {
    if !lambda.contains(mu) {
        return Ok(ring.zero());
    }
    let p = br.params().clone();
    let shift = p.t.pow(mu.n_stat() as i32 - lambda.n_stat() as i32);
    let mut h: HookProduct = hook_cprime(ring, lambda, &p)?;
    h.mul(&hook_cprime(ring, mu, &p)?.inv())?;
    h.mul_term(&shift);
    let work = Alphabet::new(alloc::vec![shift.clone()]).working_ring(ring, 1);
    let q = skew_q_rho(br, &work, lambda, mu)?;
    q.mul(&h.expand(&work)?)?.with_caps(ring)
}
