//! Products of factors `(1 - c*m)^k` kept in factored form until expansion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::{Mono, MultiSeries, Rational, Ring, Term, EXACT};

/// `coeff * prefactor * prod (1 - c*m)^k` over a fixed ring.
///
/// Factors are normalized on insertion: a factor whose monomial has only
/// non-positive truncated exponents (some negative) is rewritten as
/// `-c*m * (1 - m^-1/c)`, constant factors are folded into `coeff`, and
/// identical factors with opposite multiplicities cancel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookProduct {
    ring: Ring,
    coeff: Rational,
    prefactor: Mono,
    factors: BTreeMap<(Mono, Rational), i32>,
}

impl HookProduct {
    pub fn new(ring: &Ring) -> HookProduct {
        HookProduct {
            ring: ring.clone(),
            coeff: Rational::ONE,
            prefactor: Mono::ONE,
            factors: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn prefactor(&self) -> &Mono {
        &self.prefactor
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Nontrivial factors `(m, c, k)` meaning `(1 - c*m)^k`.
    pub fn factors(&self) -> impl Iterator<Item = (&Mono, &Rational, i32)> {
        self.factors.iter().map(|((m, c), k)| (m, c, *k))
    }

    pub fn mul_term(&mut self, t: &Term) {
        self.coeff = &self.coeff * &t.c;
        self.prefactor = self.prefactor.mul(&t.m);
    }

    fn sign(&self, m: &Mono) -> (bool, bool) {
        let (mut pos, mut neg) = (false, false);
        for (i, v) in self.ring.specs().iter().enumerate() {
            if v.is_trunc() {
                pos |= m.get(i) > 0;
                neg |= m.get(i) < 0;
            }
        }
        (pos, neg)
    }

    /// Multiplies by `(1 - t)^k`.
    pub fn push_one_minus(&mut self, t: &Term, k: i32) -> Result<()> {
        if k == 0 || t.c.is_zero() {
            return Ok(());
        }
        if t.m.is_one() {
            let s = &Rational::ONE - &t.c;
            if s.is_zero() && k < 0 {
                return Err(Error::Domain("division by a vanishing factor".into()));
            }
            self.coeff = &self.coeff * &s.pow(k).unwrap();
            return Ok(());
        }
        let (pos, neg) = self.sign(&t.m);
        let (m, c) = if !pos && neg {
            // 1 - c m = -c m (1 - m^-1 / c)
            let lead = Term::new(-&t.c, t.m).pow(k);
            self.mul_term(&lead);
            (t.m.inv(), t.c.recip().unwrap())
        } else {
            if !pos && k < 0 {
                return Err(Error::NonInvertible(alloc::format!(
                    "factor without a truncated direction in the denominator (multiplicity {})",
                    k
                )));
            }
            (t.m, t.c.clone())
        };
        let key = (m, c);
        let e = self.factors.entry(key.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.factors.remove(&key);
        }
        Ok(())
    }

    /// Multiplies by `(a - b)^k`.
    pub fn push_difference(&mut self, a: &Term, b: &Term, k: i32) -> Result<()> {
        if a.c.is_zero() {
            self.mul_term(&b.neg().pow(k));
            return Ok(());
        }
        self.mul_term(&a.pow(k));
        self.push_one_minus(&b.mul(&a.inv()), k)
    }

    pub fn mul(&mut self, other: &HookProduct) -> Result<()> {
        self.coeff = &self.coeff * &other.coeff;
        self.prefactor = self.prefactor.mul(&other.prefactor);
        for ((m, c), k) in &other.factors {
            self.push_one_minus(&Term::new(c.clone(), *m), *k)?;
        }
        Ok(())
    }

    pub fn pow(&self, e: i32) -> HookProduct {
        let mut out = HookProduct::new(&self.ring);
        if e == 0 {
            return out;
        }
        out.coeff = self.coeff.pow(e).expect("zero product raised to a negative power");
        out.prefactor = self.prefactor.pow(e);
        out.factors = self.factors.iter().map(|(key, k)| (key.clone(), k * e)).collect();
        out
    }

    pub fn inv(&self) -> HookProduct {
        self.pow(-1)
    }

    /// Lower bound for the exponent of the `i`-th ring variable in the
    /// expansion; `None` when a denominator can produce unboundedly negative
    /// powers.
    pub fn valuation(&self, i: usize) -> Option<i32> {
        let mut v = self.prefactor.get(i);
        for ((m, _), k) in &self.factors {
            let e = m.get(i);
            if e < 0 {
                if *k < 0 {
                    return None;
                }
                v += e * k;
            }
        }
        Some(v)
    }

    /// Total number of factor instances, counting multiplicity.
    pub fn degree(&self) -> i32 {
        self.factors.values().map(|k| k.abs()).sum()
    }

    /// Expands into `target`, whose truncated caps are the required
    /// precision. Intermediate work uses enlarged caps where the prefactor or
    /// negative-direction factors would otherwise lose precision.
    pub fn expand(&self, target: &Ring) -> Result<MultiSeries> {
        if self.coeff.is_zero() {
            return Ok(target.zero());
        }
        let specs = self.ring.specs();
        let mut extra: Vec<i32> = specs
            .iter()
            .enumerate()
            .map(|(i, v)| if v.is_trunc() { (-self.prefactor.get(i)).max(0) } else { 0 })
            .collect();
        for ((m, _), k) in &self.factors {
            for (i, v) in specs.iter().enumerate() {
                if v.is_trunc() && m.get(i) < 0 {
                    extra[i] += -m.get(i) * k.abs();
                }
            }
        }
        for _attempt in 0..8 {
            let mut work = target.clone();
            for (i, v) in specs.iter().enumerate() {
                if v.is_trunc() {
                    work = work.trunc(v.var, target.cap(v.var) + extra[i]);
                } else {
                    // partial products may leave the window before the
                    // prefactor and later factors bring them back
                    let t = target.spec(v.var).copied().unwrap_or(*v);
                    let spread: i32 = self.factors.iter().map(|((m, _), k)| m.get(i).abs() * k.abs()).sum();
                    let p = self.prefactor.get(i);
                    work = work.laurent(v.var, t.lo.min(t.lo - p) - spread, t.hi.max(t.hi - p) + spread);
                }
            }
            let f = self.expand_in(&work)?;
            let mut short = false;
            for (i, v) in specs.iter().enumerate() {
                if !v.is_trunc() {
                    continue;
                }
                let got = f.precision(v.var).unwrap_or(EXACT);
                let want = target.cap(v.var);
                if got < want {
                    extra[i] += (want - got).max(1);
                    short = true;
                }
            }
            if !short {
                return f.with_caps(target)?.truncate_to(target);
            }
        }
        Err(Error::Structural("hook product expansion did not reach the target precision".into()))
    }

    fn expand_in(&self, work: &Ring) -> Result<MultiSeries> {
        let mut f = work.one();
        let mut dens = Vec::new();
        for ((m, c), k) in &self.factors {
            if *k > 0 {
                for _ in 0..*k {
                    f = f.mul_one_minus(c, m)?;
                }
            } else {
                dens.push((m, c, -*k));
            }
        }
        for (m, c, k) in dens {
            for _ in 0..k {
                f = f.div_one_minus(c, m)?;
            }
        }
        f.mul_term(&self.coeff, &self.prefactor)
    }
}
