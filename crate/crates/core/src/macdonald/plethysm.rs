//! Skew Macdonald polynomials at the plethystic alphabet `(a - b)/(1 - t)`.

use super::{rho_length, Alphabet, Branching, Family};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Term};
use crate::partitions::{subpartitions, Partition};

/// `P_{λ/μ}([(a - b)/(1 - t)]; q, t)`, split over intermediate shapes `ν` as
///
/// `Σ_ν a^{|λ/ν|} P_{λ/ν}(t^ρ; q,t) (-1)^{|ν/μ|} b^{|ν/μ|} Q_{ν'/μ'}(q^ρ; t,q)`.
pub fn plethystic_eval(
    br: &mut Branching,
    ring: &Ring,
    lambda: &Partition,
    mu: &Partition,
    a: &Term,
    b: &Term,
) -> Result<MultiSeries> {
    if !lambda.contains(mu) {
        return Ok(ring.zero());
    }
    let size = lambda.size() - mu.size();
    let work = Alphabet::new(alloc::vec![a.clone(), b.clone()]).working_ring(ring, size);
    let params = br.params().clone();
    let mut dual = Branching::new(params.swap());
    let t_alpha = Alphabet::geometric(&params.t, rho_length(&work, &params.t)?);
    let q_alpha = Alphabet::geometric(&params.q, rho_length(&work, &params.q)?);
    let mut acc = work.zero();
    for nu in subpartitions(lambda) {
        if !nu.contains(mu) {
            continue;
        }
        let (r, s) = ((lambda.size() - nu.size()) as i32, (nu.size() - mu.size()) as i32);
        if (r > 0 && a.is_zero()) || (s > 0 && b.is_zero()) {
            continue;
        }
        let pos = br.eval_skew(&work, Family::P, lambda, &nu, &t_alpha)?;
        let neg = dual.eval_skew(&work, Family::Q, &nu.conjugate(), &mu.conjugate(), &q_alpha)?;
        let sign = if s % 2 == 0 { Rational::ONE } else { Rational::int(-1) };
        let scale = a.pow(r).mul(&b.pow(s)).mul(&Term::constant(sign));
        acc = acc.add(&pos.mul(&neg)?.mul_term(&scale.c, &scale.m)?)?;
    }
    acc.with_caps(ring)
}
