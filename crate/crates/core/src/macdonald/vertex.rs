//! The refined topological vertex as an exact truncated series.

use alloc::vec::Vec;

use super::{Alphabet, Branching, Family};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Term};
use crate::hooks::{hook_c, HookProduct, Params};
use crate::partitions::{subpartitions, Partition};

/// `C_{λμν}(t,q) = q^{n(μ')+n(ν')+(|λ|+|μ|+|ν|)/2} t^{-n(μ)} c_ν(q,t)^{-1}
/// Σ_η t^{-|η|} s_{λ'/η}(t^ρ q^{-ν}) s_{μ/η}(q^ρ t^{-ν'})`,
/// with `half_q` a monomial whose square is `q`.
pub fn refined_vertex(
    ring: &Ring,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    half_q: &Term,
    t: &Term,
) -> Result<MultiSeries> {
    let q = half_q.pow(2);
    let p = Params::new(q.clone(), t.clone());
    let lc = lambda.conjugate();
    let nc = nu.conjugate();

    // room for every negative power that can occur before the final product
    let neg_t = nc.part(1) * mu.size() + mu.n_stat() + mu.size();
    let neg_q = nu.part(1) * lambda.size();
    let work = Alphabet::new(alloc::vec![t.inv()]).working_ring(ring, neg_t);
    let work = Alphabet::new(alloc::vec![q.inv()]).working_ring(&work, neg_q);

    let a = shifted_rho(&work, t, &q.inv(), nu)?;
    let b = shifted_rho(&work, &q, &t.inv(), &nc)?;
    // at q = t the Macdonald branching coefficients are all 1: Schur functions
    let one = Term::constant(Rational::int(2));
    let mut schur = Branching::new(Params::new(one.clone(), one));

    let mut sum = work.zero();
    for eta in subpartitions(&lc) {
        if !mu.contains(&eta) {
            continue;
        }
        let x = schur.eval_skew(&work, Family::P, &lc, &eta, &a)?;
        if x.is_zero() {
            continue;
        }
        let y = schur.eval_skew(&work, Family::P, mu, &eta, &b)?;
        let w = t.pow(-(eta.size() as i32));
        sum = sum.add(&x.mul(&y)?.mul_term(&w.c, &w.m)?)?;
    }

    let mut pre: HookProduct = hook_c(&work, nu, &p)?.inv();
    let half = (lambda.size() + mu.size() + nu.size()) as i32;
    pre.mul_term(&half_q.pow(2 * (mu.conjugate().n_stat() + nc.n_stat()) as i32 + half));
    pre.mul_term(&t.pow(-(mu.n_stat() as i32)));
    sum.mul(&pre.expand(&work)?)?.with_caps(ring)
}

// (x^{i-1} y^{κ_i})_{i ≥ 1}, cut where the geometric tail leaves the caps.
fn shifted_rho(ring: &Ring, x: &Term, y: &Term, kappa: &Partition) -> Result<Alphabet> {
    let n = super::rho_length(ring, x)?.max(kappa.len());
    let entries: Vec<Term> = (1..=n).map(|i| x.pow(i as i32 - 1).mul(&y.pow(kappa.part(i) as i32))).collect();
    Ok(Alphabet::new(entries))
}
