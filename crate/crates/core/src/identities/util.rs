
use crate::error::Result;
use crate::exactnum::{MultiSeries, Ring, Term, Var};
use crate::hooks::HookProduct;
use crate::macdonald::Alphabet;
use crate::nekrasov::log_pochhammer;

pub(crate) fn mono(ring: &Ring, exps: &[(Var, i32)]) -> Term {
    Term::mono(ring.mono(exps))
}

pub(crate) fn var(ring: &Ring, v: Var) -> Term {
    mono(ring, &[(v, 1)])
}

/// `(x_1, ..., x_n)` as ring variables.
pub(crate) fn letters(ring: &Ring, f: fn(u8) -> Var, n: u8) -> Alphabet {
    Alphabet::new((1..=n).map(|i| var(ring, f(i))).collect())
}

/// `Π (num; bases)_∞ / Π (den; bases)_∞` through logarithms.
pub(crate) fn poch_ratio(ring: &Ring, num: &[Term], den: &[Term], bases: &[Term]) -> Result<MultiSeries> {
    let mut log = ring.zero();
    for x in num {
        log = log.add(&log_pochhammer(ring, x, bases)?)?;
    }
    for x in den {
        log = log.sub(&log_pochhammer(ring, x, bases)?)?;
    }
    log.exp()
}

/// `T^k` for the grading variable.
pub(crate) fn t_pow(ring: &Ring, k: i32) -> Term {
    mono(ring, &[(Var::Tg, k)])
}

pub(crate) fn times(f: &MultiSeries, t: &Term) -> Result<MultiSeries> {
    f.mul_term(&t.c, &t.m)
}

/// `Π (num; bases)_∞ / Π (den; bases)_∞` as a finite product: a factor
/// `1 - x b^k` with an exponent past its cap is dropped. The caps must leave
/// room for the negative exponents the factors can contribute.
pub(crate) fn poch_hook(ring: &Ring, num: &[Term], den: &[Term], bases: &[Term]) -> Result<HookProduct> {
    let mut h = HookProduct::new(ring);
    for (xs, k) in [(num, 1), (den, -1)] {
        for x in xs {
            push_poch(ring, &mut h, x, bases, k)?;
        }
    }
    Ok(h)
}

fn past_caps(ring: &Ring, x: &Term) -> bool {
    ring.specs().iter().enumerate().any(|(i, v)| v.is_trunc() && x.m.get(i) > v.cap)
}

fn push_poch(ring: &Ring, h: &mut HookProduct, x: &Term, bases: &[Term], k: i32) -> Result<()> {
    match bases.split_first() {
        None => h.push_one_minus(x, k),
        Some((b, rest)) => {
            let mut y = x.clone();
            while !past_caps(ring, &y) {
                push_poch(ring, h, &y, rest, k)?;
                y = y.mul(b);
            }
            Ok(())
        }
    }
}
