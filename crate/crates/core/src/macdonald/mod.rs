//! Macdonald polynomials evaluated at finite alphabets of monomials, by
//! one-variable branching.

mod interp;
mod plethysm;
mod principal;
mod vertex;

pub use interp::{
    binomial_at, binomial_theorem_sides, interpolation_poly, interpolation_spot_check, macdonald_p_at, InterpolationReport, SymPoly,
};
pub use plethysm::plethystic_eval;
pub use principal::{
    principal_p, principal_p_inf, qt_binomial, rho_length, skew_q_principal, skew_q_rho,
};
pub use vertex::refined_vertex;

use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Ring, Term};
use crate::hooks::{HookProduct, Params};
use crate::partitions::{horizontal_strips_below, Partition};

/// Which of the two normalizations `P_λ` or `Q_λ = b_λ P_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    Q,
}

/// A finite list of signed monomials `(x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(pub Vec<Term>);

impl Alphabet {
    pub fn new(entries: Vec<Term>) -> Alphabet {
        Alphabet(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(1, x, x^2, ..., x^{n-1})`.
    pub fn geometric(x: &Term, n: usize) -> Alphabet {
        Alphabet((0..n as i32).map(|i| x.pow(i)).collect())
    }

    /// `(q^{λ_i} t^{n-i})_{i=1..n}`, the point `q^λ t^{δ_n}`.
    pub fn shifted(lambda: &Partition, n: usize, p: &Params) -> Alphabet {
        Alphabet((1..=n).map(|i| p.qt(lambda.part(i) as i32, (n - i) as i32)).collect())
    }

    /// Every entry multiplied by `a`.
    pub fn scaled(&self, a: &Term) -> Alphabet {
        Alphabet(self.0.iter().map(|x| x.mul(a)).collect())
    }

    pub fn inverse(&self) -> Alphabet {
        Alphabet(self.0.iter().map(|x| x.inv()).collect())
    }

    /// `ring` with each truncated cap raised by what `degree` factors from
    /// this alphabet can pull below zero.
    pub fn working_ring(&self, ring: &Ring, degree: u32) -> Ring {
        let mut out = ring.clone();
        for (i, v) in ring.specs().iter().enumerate() {
            if v.is_trunc() {
                let neg = self.0.iter().map(|x| (-x.m.get(i)).max(0)).max().unwrap_or(0);
                if neg > 0 {
                    out = out.trunc(v.var, v.cap + neg * degree as i32);
                }
            }
        }
        out
    }
}

/// Memo table of one-row branching coefficients `ψ_{λ/μ}` and `φ_{λ/μ}` for
/// one choice of `(q, t)`, expanded per working ring.
///
/// Each worker may own its own cache; the values do not depend on the order
/// in which they are filled.
#[derive(Clone, Debug)]
pub struct Branching {
    params: Params,
    table: HashMap<(Family, Ring, Partition, Partition), MultiSeries>,
}

impl Branching {
    pub fn new(params: Params) -> Branching {
        Branching { params, table: HashMap::new() }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Factored coefficient; zero unless `λ/μ` is a horizontal strip.
    pub fn factored(&self, ring: &Ring, family: Family, lambda: &Partition, mu: &Partition) -> Result<HookProduct> {
        branching_factored(ring, &self.params, family, lambda, mu)
    }

    pub fn coefficient(
        &mut self,
        ring: &Ring,
        family: Family,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<MultiSeries> {
        let key = (family, ring.clone(), lambda.clone(), mu.clone());
        if let Some(v) = self.table.get(&key) {
            return Ok(v.clone());
        }
        let v = self.factored(ring, family, lambda, mu)?.expand(ring)?;
        self.table.insert(key, v.clone());
        Ok(v)
    }

    pub fn psi(&mut self, ring: &Ring, lambda: &Partition, mu: &Partition) -> Result<MultiSeries> {
        self.coefficient(ring, Family::P, lambda, mu)
    }

    pub fn phi(&mut self, ring: &Ring, lambda: &Partition, mu: &Partition) -> Result<MultiSeries> {
        self.coefficient(ring, Family::Q, lambda, mu)
    }

    /// `P_{λ/μ}` or `Q_{λ/μ}` at `alphabet`, as a series of `ring`.
    pub fn eval_skew(
        &mut self,
        ring: &Ring,
        family: Family,
        lambda: &Partition,
        mu: &Partition,
        alphabet: &Alphabet,
    ) -> Result<MultiSeries> {
        if !lambda.contains(mu) {
            return Ok(ring.zero());
        }
        let work = alphabet.working_ring(ring, lambda.size() - mu.size());
        let mut memo = HashMap::new();
        let v = self.eval_rec(&work, family, lambda, mu, alphabet, alphabet.len(), &mut memo)?;
        v.with_caps(ring)
    }

    pub fn eval_p(&mut self, ring: &Ring, lambda: &Partition, alphabet: &Alphabet) -> Result<MultiSeries> {
        self.eval_skew(ring, Family::P, lambda, &Partition::empty(), alphabet)
    }

    pub fn eval_q(&mut self, ring: &Ring, lambda: &Partition, alphabet: &Alphabet) -> Result<MultiSeries> {
        self.eval_skew(ring, Family::Q, lambda, &Partition::empty(), alphabet)
    }

    pub fn eval_skew_q(
        &mut self,
        ring: &Ring,
        lambda: &Partition,
        mu: &Partition,
        alphabet: &Alphabet,
    ) -> Result<MultiSeries> {
        self.eval_skew(ring, Family::Q, lambda, mu, alphabet)
    }

    // The last `k` entries are peeled off last-first.
    #[allow(clippy::too_many_arguments)]
    fn eval_rec(
        &mut self,
        ring: &Ring,
        family: Family,
        lambda: &Partition,
        mu: &Partition,
        alphabet: &Alphabet,
        k: usize,
        memo: &mut HashMap<(Partition, usize), MultiSeries>,
    ) -> Result<MultiSeries> {
        if lambda == mu {
            return Ok(ring.one());
        }
        if k == 0 || !fits_columns(lambda, mu, k) {
            return Ok(ring.zero());
        }
        if let Some(v) = memo.get(&(lambda.clone(), k)) {
            return Ok(v.clone());
        }
        let x = &alphabet.0[k - 1];
        let mut acc = ring.zero();
        for nu in horizontal_strips_below(lambda) {
            if !nu.contains(mu) {
                continue;
            }
            let r = (lambda.size() - nu.size()) as i32;
            let xr = x.pow(r);
            let rest = self.eval_rec(ring, family, &nu, mu, alphabet, k - 1, memo)?;
            if rest.is_zero() {
                continue;
            }
            let rest = rest.mul_term(&xr.c, &xr.m)?;
            if rest.is_zero() {
                continue;
            }
            let c = self.coefficient(ring, family, lambda, &nu)?;
            acc = acc.add(&rest.mul(&c)?)?;
        }
        memo.insert((lambda.clone(), k), acc.clone());
        Ok(acc)
    }
}

// A skew shape with a column longer than k vanishes in k variables.
fn fits_columns(lambda: &Partition, mu: &Partition, k: usize) -> bool {
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    (1..=lc.len()).all(|j| (lc.part(j) - mc.part(j)) as usize <= k)
}

fn push_b(h: &mut HookProduct, p: &Params, lambda: &Partition, i: usize, j: usize, k: i32) -> Result<()> {
    if !lambda.contains_cell(i, j) {
        return Ok(());
    }
    let s = lambda.cell_stats(i, j)?;
    h.push_one_minus(&p.qt(s.arm, s.leg + 1), k)?;
    h.push_one_minus(&p.qt(s.arm + 1, s.leg), -k)
}

/// `φ_{λ/μ} = Π_{s ∈ C} b_λ(s)/b_μ(s)` and `ψ_{λ/μ} = Π_{s ∈ R - C} b_μ(s)/b_λ(s)`
/// where `C` and `R` are the columns and rows of `λ` meeting `λ/μ`.
fn branching_factored(
    ring: &Ring,
    p: &Params,
    family: Family,
    lambda: &Partition,
    mu: &Partition,
) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    if !lambda.is_horizontal_strip(mu) {
        h.mul_term(&Term::constant(crate::exactnum::Rational::ZERO));
        return Ok(h);
    }
    let rows: Vec<bool> = (1..=lambda.len()).map(|i| lambda.part(i) > mu.part(i)).collect();
    let mut cols = alloc::vec![false; lambda.part(1) as usize + 1];
    for i in 1..=lambda.len() {
        for j in mu.part(i) + 1..=lambda.part(i) {
            cols[j as usize] = true;
        }
    }
    for (i, j) in lambda.cells() {
        match family {
            Family::Q if cols[j] => {
                push_b(&mut h, p, lambda, i, j, 1)?;
                push_b(&mut h, p, mu, i, j, -1)?;
            }
            Family::P if rows[i - 1] && !cols[j] => {
                push_b(&mut h, p, mu, i, j, 1)?;
                push_b(&mut h, p, lambda, i, j, -1)?;
            }
            _ => {}
        }
    }
    Ok(h)
}

/// Errors unless `t` has a positive exponent in some truncated variable
/// and none negative, as needed for an infinite geometric alphabet.
pub(crate) fn check_contracting(ring: &Ring, x: &Term) -> Result<()> {
    let mut pos = false;
    for (i, v) in ring.specs().iter().enumerate() {
        let e = x.m.get(i);
        if v.is_trunc() {
            if e < 0 {
                return Err(Error::Domain("principal alphabet base has a negative truncated exponent".into()));
            }
            pos |= e > 0;
        }
    }
    if pos {
        Ok(())
    } else {
        Err(Error::Domain("principal alphabet base has no truncated direction".into()))
    }
}

pub mod oracle;
#[cfg(test)]
mod tests;
