//! Hook-length products over partitions, built in factored form.

mod product;

pub use product::HookProduct;

use crate::error::Result;
use crate::exactnum::{Rational, Ring, Term, Var};
use crate::partitions::Partition;

/// The pair `(q, t)` as signed monomials of some ring. Swapping, inverting
/// or specializing the parameters is just a different choice of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub q: Term,
    pub t: Term,
}

impl Params {
    /// `q` and `t` as the ring variables of the same name.
    pub fn standard(ring: &Ring) -> Params {
        Params { q: Term::mono(ring.mono(&[(Var::Q, 1)])), t: Term::mono(ring.mono(&[(Var::T, 1)])) }
    }

    pub fn new(q: Term, t: Term) -> Params {
        Params { q, t }
    }

    pub fn swap(&self) -> Params {
        Params { q: self.t.clone(), t: self.q.clone() }
    }

    pub fn inverse(&self) -> Params {
        Params { q: self.q.inv(), t: self.t.inv() }
    }

    /// `q^i t^j`.
    pub fn qt(&self, i: i32, j: i32) -> Term {
        self.q.pow(i).mul(&self.t.pow(j))
    }
}

/// `c_λ(q,t) = Π (1 - q^{a} t^{l+1})`.
pub fn hook_c(ring: &Ring, lambda: &Partition, p: &Params) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for s in lambda.all_cell_stats() {
        h.push_one_minus(&p.qt(s.arm, s.leg + 1), 1)?;
    }
    Ok(h)
}

/// `c'_λ(q,t) = Π (1 - q^{a+1} t^{l})`.
pub fn hook_cprime(ring: &Ring, lambda: &Partition, p: &Params) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for s in lambda.all_cell_stats() {
        h.push_one_minus(&p.qt(s.arm + 1, s.leg), 1)?;
    }
    Ok(h)
}

/// `b_λ(q,t) = c_λ / c'_λ`.
pub fn hook_b(ring: &Ring, lambda: &Partition, p: &Params) -> Result<HookProduct> {
    let mut h = hook_c(ring, lambda, p)?;
    h.mul(&hook_cprime(ring, lambda, p)?.inv())?;
    Ok(h)
}

/// `(z;q,t)_λ = Π (1 - z q^{a'} t^{-l'})`.
pub fn qt_pochhammer(ring: &Ring, z: &Term, lambda: &Partition, p: &Params) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for s in lambda.all_cell_stats() {
        h.push_one_minus(&z.mul(&p.qt(s.arm_co, -s.leg_co)), 1)?;
    }
    Ok(h)
}

/// `(z;q)_k = Π_{i<k} (1 - z q^i)`.
pub fn q_pochhammer(ring: &Ring, z: &Term, q: &Term, k: u32) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for i in 0..k as i32 {
        h.push_one_minus(&z.mul(&q.pow(i)), 1)?;
    }
    Ok(h)
}

/// The genus-g hook function at `z = Z`, `w = 1/W`:
/// `Π (z^{2a+1} - w^{2l+1})^{2g} / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2}))`.
pub fn genus_hook(ring: &Ring, lambda: &Partition, g: u32) -> Result<HookProduct> {
    let z = Term::mono(ring.mono(&[(Var::Z, 1)]));
    let w = Term::mono(ring.mono(&[(Var::W, -1)]));
    genus_hook_at(ring, lambda, g, &z, &w)
}

/// The genus-g hook function at arbitrary monomial points `z`, `w`.
pub fn genus_hook_at(ring: &Ring, lambda: &Partition, g: u32, z: &Term, w: &Term) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for s in lambda.all_cell_stats() {
        let (a, l) = (s.arm, s.leg);
        h.push_difference(&z.pow(2 * a + 1), &w.pow(2 * l + 1), 2 * g as i32)?;
        h.push_difference(&z.pow(2 * a + 2), &w.pow(2 * l), -1)?;
        h.push_difference(&z.pow(2 * a), &w.pow(2 * l + 2), -1)?;
    }
    Ok(h)
}

/// The summand of the q,t-Nekrasov-Okounkov sum:
/// `Π (1 - u q^{a+1} t^l)(1 - u^{-1} q^a t^{l+1}) / ((1 - q^{a+1} t^l)(1 - q^a t^{l+1}))`.
pub fn qtno_summand(ring: &Ring, lambda: &Partition, u: &Term, p: &Params) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    let ui = u.inv();
    for s in lambda.all_cell_stats() {
        let (a, l) = (s.arm, s.leg);
        h.push_one_minus(&u.mul(&p.qt(a + 1, l)), 1)?;
        h.push_one_minus(&ui.mul(&p.qt(a, l + 1)), 1)?;
        h.push_one_minus(&p.qt(a + 1, l), -1)?;
        h.push_one_minus(&p.qt(a, l + 1), -1)?;
    }
    Ok(h)
}

/// Multiplies `h` by `θ(x; p)^k` in triple-product form, keeping only the
/// factors that can reach the cap of `p`.
pub fn push_theta(h: &mut HookProduct, x: &Term, pvar: Var, k: i32) -> Result<()> {
    let ring = h.ring().clone();
    let pm = Term::mono(ring.mono(&[(pvar, 1)]));
    let cap = ring.cap(pvar);
    let xi = x.inv();
    h.push_one_minus(x, k)?;
    for j in 1..=cap {
        let pj = pm.pow(j);
        h.push_one_minus(&x.mul(&pj), k)?;
        h.push_one_minus(&xi.mul(&pj), k)?;
        h.push_one_minus(&pj, k)?;
    }
    Ok(())
}

/// The elliptic summand
/// `Π θ(u q^{a+1} t^l) θ(u^{-1} q^a t^{l+1}) / (θ(q^{a+1} t^l) θ(q^a t^{l+1}))`.
pub fn elliptic_summand(
    ring: &Ring,
    lambda: &Partition,
    u: &Term,
    p: &Params,
    pvar: Var,
) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    let ui = u.inv();
    for s in lambda.all_cell_stats() {
        let (a, l) = (s.arm, s.leg);
        push_theta(&mut h, &u.mul(&p.qt(a + 1, l)), pvar, 1)?;
        push_theta(&mut h, &ui.mul(&p.qt(a, l + 1)), pvar, 1)?;
        push_theta(&mut h, &p.qt(a + 1, l), pvar, -1)?;
        push_theta(&mut h, &p.qt(a, l + 1), pvar, -1)?;
    }
    Ok(h)
}

/// `Π_{h ∈ hooks} (1 - s/h^2)` as a polynomial in `s`.
pub fn classical_no_summand(ring: &Ring, lambda: &Partition) -> Result<HookProduct> {
    classical_no_summand_at(ring, lambda, &Term::mono(ring.mono(&[(Var::S, 1)])))
}

/// `Π_{h ∈ hooks} (1 - s/h^2)` at a given term `s`.
pub fn classical_no_summand_at(ring: &Ring, lambda: &Partition, s: &Term) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for hk in lambda.hooks() {
        let c = Term::constant(Rational::new(1, (hk * hk) as i64));
        h.push_one_minus(&s.mul(&c), 1)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests;
