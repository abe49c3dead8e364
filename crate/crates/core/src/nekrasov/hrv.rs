//! The genus-g hook generating function, its plethystic logarithm `U_n`
//! and the Möbius-inverted `H̄_n`, in `z = Z`, `w = 1/W`.

use alloc::vec::Vec;

use super::t_power;
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, TGraded, Term, Var};
use crate::hooks::{genus_hook, HookProduct};
use crate::partitions::{divisors, mobius, partitions_of};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct HrvOutcome {
    /// `U_1, ..., U_{n_max}` as series in `Z, W`.
    pub u: Vec<MultiSeries>,
    /// `H̄_1, ..., H̄_{n_max}`.
    pub hbar: Vec<MultiSeries>,
    pub report: Report,
}

/// `d_n = 2n^2(g-1) + 2`, the expected degree of `H̄_n`; only a heuristic
/// for choosing windows.
pub fn expected_degree(g: u32, n: u32) -> i32 {
    2 * (n * n) as i32 * (g as i32 - 1) + 2
}

/// Runs the pipeline with `Z` and `W` capped at `cap` and checks the
/// known genus-0 and genus-1 answers, plus polynomiality and sign
/// evidence for `H̄_n(z,-w)`.
pub fn hrv_pipeline(g: u32, n_max: u32, cap: i32) -> Result<HrvOutcome> {
    let ring = Ring::new().trunc(Var::Tg, n_max as i32).trunc(Var::Z, cap).trunc(Var::W, cap);
    let coeff_ring = ring.clone().without(Var::Tg);
    let mut sum = ring.zero();
    for k in 0..=n_max {
        let tk = t_power(&ring, k as i32);
        for lambda in partitions_of(k) {
            let mut h = genus_hook(&ring, &lambda, g)?;
            h.mul_term(&tk);
            sum = sum.add(&h.expand(&ring)?)?;
        }
    }
    let log = TGraded::split(&sum, Var::Tg, n_max as i32)?.log()?;
    let u: Vec<MultiSeries> =
        (1..=n_max).map(|n| log.coeffs[n as usize].scale(&Rational::int(n as i64))).collect();

    let w2 = coeff_ring.mono(&[(Var::W, -2)]);
    let z2 = coeff_ring.mono(&[(Var::Z, 2)]);
    let one = coeff_ring.mono(&[]);
    let pre = MultiSeries::from_terms(&coeff_ring, [(z2, Rational::ONE), (one, -Rational::ONE)])?.mul_one_minus(&Rational::ONE, &w2)?;
    let mut hbar = Vec::new();
    for n in 1..=n_max {
        let mut acc = coeff_ring.zero();
        for d in divisors(n) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            let x = u[(n / d) as usize - 1].adams(d as i32)?;
            acc = acc.add(&x.scale(&Rational::int(mu as i64)))?;
        }
        hbar.push(acc.mul(&pre)?.scale(&Rational::new(1, n as i64)));
    }

    let mut rep = if g >= 2 {
        Report::conjecture_evidence(&alloc::format!("genus {} hook pipeline", g))
    } else {
        Report::new(&alloc::format!("genus {} hook pipeline", g))
    };
    let single = genus_hook(&coeff_ring, &crate::partitions::Partition::new(&[1]), g)?.expand(&coeff_ring)?;
    rep.compare("U_1 = H_(1)", &u[0], &single, &[])?;

    let (zv, wv) = (|e: i32| coeff_ring.mono(&[(Var::Z, e)]), |e: i32| coeff_ring.mono(&[(Var::W, e)]));
    for n in 1..=n_max as i32 {
        let i = n as usize - 1;
        match g {
            0 => {
                let mut h = HookProduct::new(&coeff_ring);
                h.mul_term(&Term::mono(wv(2 * n)));
                h.push_one_minus(&Term::mono(zv(2 * n)), -1)?;
                h.push_one_minus(&Term::mono(wv(2 * n)), -1)?;
                rep.compare(&alloc::format!("U_{} closed form", n), &u[i], &h.expand(&coeff_ring)?, &[])?;
                let want = if n == 1 { coeff_ring.one() } else { coeff_ring.zero() };
                rep.compare(&alloc::format!("H_{} = delta", n), &hbar[i], &want, &[])?;
            }
            1 => {
                let mut want = coeff_ring.zero();
                for k in divisors(n as u32) {
                    let k = k as i32;
                    let mut h = HookProduct::new(&coeff_ring);
                    h.mul_term(&Term::constant(Rational::int((n / k) as i64)));
                    h.push_one_minus(&Term::mono(zv(k).mul(&wv(k))), 2)?;
                    h.push_one_minus(&Term::mono(zv(2 * k)), -1)?;
                    h.push_one_minus(&Term::mono(wv(2 * k)), -1)?;
                    want = want.add(&h.expand(&coeff_ring)?)?;
                }
                rep.compare(&alloc::format!("U_{} closed form", n), &u[i], &want, &[])?;
                let sq = MultiSeries::from_terms(
                    &coeff_ring,
                    [(zv(2), Rational::ONE), (zv(1).mul(&wv(-1)), Rational::int(-2)), (wv(-2), Rational::ONE)],
                )?;
                rep.compare(&alloc::format!("H_{} = (z-w)^2", n), &hbar[i], &sq, &[])?;
            }
            _ => {}
        }
        polynomial_evidence(&mut rep, n, &hbar[i], expected_degree(g, n as u32));
    }
    Ok(HrvOutcome { u, hbar, report: rep })
}

// within the known precision: no positive powers of W (a polynomial in w),
// total degree at most d_n, and H̄_n(z,-w) has nonnegative coefficients
fn polynomial_evidence(rep: &mut Report, n: i32, h: &MultiSeries, dn: i32) {
    let (iz, iw) = (h.index(Var::Z).unwrap(), h.index(Var::W).unwrap());
    let known = h.precision(Var::W).unwrap_or(0);
    rep.push(
        &alloc::format!("H_{} known through w^0", n),
        known >= 0,
        alloc::format!("W precision {}", known),
    );
    let zk = h.precision(Var::Z).unwrap_or(0);
    rep.push(
        &alloc::format!("H_{} known beyond z^{}", n, dn),
        zk > dn,
        alloc::format!("Z precision {}", zk),
    );
    let mut poly = true;
    let mut signs = true;
    for (m, c) in h.terms() {
        let (a, b) = (m.get(iz), m.get(iw));
        poly &= b <= 0 && a - b <= dn;
        let sign = if b.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
        signs &= !sign.is_negative();
    }
    rep.push(&alloc::format!("H_{} polynomial of degree <= {}", n, dn), poly, alloc::string::String::new());
    rep.push(&alloc::format!("H_{}(z,-w) nonnegative", n), signs, alloc::string::String::new());
}

/// `H̄_n` rewritten in `z = Z`, `w = 1/W`. Needs the series known through
/// `W^0` with no positive powers of `W`.
pub fn hbar_in_zw(h: &MultiSeries) -> Result<MultiSeries> {
    let (iz, iw) = (h.index(Var::Z).unwrap(), h.index(Var::W).unwrap());
    let known = h.precision(Var::W).unwrap_or(0);
    if known < 0 {
        return Err(crate::Error::WindowTooSmall { var: Var::W, exponent: 0 });
    }
    let (mut za, mut wb) = (0, 0);
    for (m, _) in h.terms() {
        if m.get(iw) > 0 {
            return Err(crate::Error::Domain("positive power of W in H_n".into()));
        }
        za = za.max(m.get(iz));
        wb = wb.max(-m.get(iw));
    }
    let ring = Ring::new().laurent(Var::Zs, 0, za).laurent(Var::Wv, 0, wb);
    MultiSeries::from_terms(
        &ring,
        h.terms().iter().map(|(m, c)| (ring.mono(&[(Var::Zs, m.get(iz)), (Var::Wv, -m.get(iw))]), c.clone())),
    )
}
