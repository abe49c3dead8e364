//! The classical Nekrasov-Okounkov formula in `Q[s][[T]]` with `s = z^2`.

use super::{log_pochhammer, t_order, t_power};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Ring, TGraded, Term, Var};
use crate::hooks::classical_no_summand_at;
use crate::partitions::partitions_of;
use crate::report::Report;

/// Both sides up to the T-cap of `ring`:
/// `Σ_λ T^{|λ|} Π_h (1 - s/h^2)` and `exp((s - 1) log Π_k (1 - T^k))`.
pub fn classical_no_sides(ring: &Ring, s: &Term) -> Result<(TGraded, TGraded)> {
    let k = t_order(ring)?;
    let mut lhs = ring.zero();
    for j in 0..=k {
        let tj = t_power(ring, j as i32);
        for lambda in partitions_of(j) {
            let mut h = classical_no_summand_at(ring, &lambda, s)?;
            if h.is_zero() {
                continue;
            }
            h.mul_term(&tj);
            lhs = lhs.add(&h.expand(ring)?)?;
        }
    }
    let t = t_power(ring, 1);
    let euler = log_pochhammer(ring, &t, &[t.clone()])?;
    let s_minus_one = MultiSeries::from_terms(ring, [(s.m, s.c.clone()), (ring.mono(&[]), -crate::Rational::ONE)])?;
    let rhs = euler.mul(&s_minus_one)?.exp()?;
    Ok((TGraded::split(&lhs, Var::Tg, k as i32)?, TGraded::split(&rhs, Var::Tg, k as i32)?))
}

/// The identity with `s` a formal variable, plus its `s = 4` and `s = 1`
/// specializations, to `T^k`.
pub fn classical_no(k: u32) -> Result<Report> {
    let mut rep = Report::new("classical Nekrasov-Okounkov");
    let ring = Ring::new().trunc(Var::Tg, k as i32).trunc(Var::S, k as i32);
    let s = Term::mono(ring.mono(&[(Var::S, 1)]));
    let (lhs, rhs) = classical_no_sides(&ring, &s)?;
    for (j, (a, b)) in lhs.coeffs.iter().zip(&rhs.coeffs).enumerate() {
        rep.compare(&alloc::format!("T^{} in Q[s]", j), a, b, &[])?;
    }

    let plain = Ring::new().trunc(Var::Tg, k as i32);
    for (value, label) in [(4, "s = 4"), (1, "s = 1")] {
        let s = Term::constant(crate::Rational::int(value));
        let (lhs, rhs) = classical_no_sides(&plain, &s)?;
        for (j, (a, b)) in lhs.coeffs.iter().zip(&rhs.coeffs).enumerate() {
            rep.compare(&alloc::format!("{}: T^{}", label, j), a, b, &[])?;
        }
    }
    // at s = 4 only staircases survive, factor by factor
    let four = Term::constant(crate::Rational::int(4));
    let mut staircase_only = true;
    for j in 0..=k {
        for lambda in partitions_of(j) {
            let vanishes = classical_no_summand_at(&plain, &lambda, &four)?.is_zero();
            let stair = (0..=j + 1).any(|n| crate::partitions::Partition::staircase(n) == lambda);
            staircase_only &= vanishes != stair;
        }
    }
    rep.push("s = 4 summands vanish exactly off staircases", staircase_only, alloc::string::String::new());
    Ok(rep)
}
