//! Symmetries, special values, the large-(n,m) limit and the integrality
//! and positivity conjecture for `f_{n,m}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::fnm::{fnm, fnm_to, FnmResult, Provenance};
use super::{log_pochhammer, qtno_lhs, t_power};
use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Rational, Ring, TGraded, Term, Var};
use crate::hooks::{HookProduct, Params};
use crate::report::Report;

/// `q, t` truncated at `d`, `u` Laurent on `[-u_span, u_span]`, `T` capped at
/// `order`.
pub fn fnm_ring(d: i32, order: u32, u_span: i32) -> Ring {
    Ring::new().trunc(Var::Q, d).trunc(Var::T, d).laurent(Var::U, -u_span, u_span).trunc(Var::Tg, order as i32)
}

fn standard(ring: &Ring) -> (Term, Params) {
    (Term::mono(ring.mono(&[(Var::U, 1)])), Params::standard(ring))
}

// the part of `c` with u-exponent exactly `e`
fn u_slice(c: &MultiSeries, e: i32) -> Result<MultiSeries> {
    let ring = c.ring();
    let u = ring.mono(&[(Var::U, e)]);
    c.extract(Var::U, e)?.embed(&ring)?.mul_term(&Rational::ONE, &u)
}

fn u_exponents(c: &MultiSeries) -> Vec<i32> {
    match c.exponent_range(Var::U) {
        Some((lo, hi)) => (lo..=hi).collect(),
        None => Vec::new(),
    }
}

fn compare_graded(rep: &mut Report, label: &str, a: &TGraded, b: &TGraded) -> Result<bool> {
    let mut ok = a.coeffs.len() == b.coeffs.len();
    if !ok {
        rep.push(label, false, alloc::format!("T-orders {} vs {}", a.order(), b.order()));
        return Ok(false);
    }
    for (k, (x, y)) in a.coeffs.iter().zip(&b.coeffs).enumerate() {
        ok &= rep.compare(&alloc::format!("{} [T^{}]", label, k), x, y, &[])?;
    }
    Ok(ok)
}

/// `T^{nm} f(u/T, 1/T)` by moving `c_{k,e} u^e T^k` to `T^{nm-k-e}`.
pub fn reflect_t(f: &FnmResult) -> Result<Option<TGraded>> {
    let nm = (f.n * f.m) as i32;
    let zero = f.value.coeffs[0].ring().zero();
    let mut out = alloc::vec![zero; nm as usize + 1];
    for (k, c) in f.value.coeffs.iter().enumerate() {
        for e in u_exponents(c) {
            let s = u_slice(c, e)?;
            if s.is_zero() {
                continue;
            }
            let j = nm - k as i32 - e;
            if j < 0 || j > nm {
                return Ok(None);
            }
            out[j as usize] = out[j as usize].add(&s)?;
        }
    }
    Ok(Some(TGraded { var: f.value.var, coeffs: out }))
}

/// `f(tT/(uq), T)` by moving `c_{k,e} u^e T^k` to `(t/q)^e u^{-e} T^{k+e}`.
pub fn reflect_u(f: &FnmResult, p: &Params) -> Result<Option<TGraded>> {
    let nm = (f.n * f.m) as i32;
    let ring = f.value.coeffs[0].ring();
    let mut out = alloc::vec![ring.zero(); nm as usize + 1];
    for (k, c) in f.value.coeffs.iter().enumerate() {
        for e in u_exponents(c) {
            let s = u_slice(c, e)?;
            if s.is_zero() {
                continue;
            }
            let j = k as i32 + e;
            if j < 0 || j > nm {
                return Ok(None);
            }
            let w = p.t.mul(&p.q.inv()).pow(e);
            let shift = w.m.mul(&ring.mono(&[(Var::U, -2 * e)]));
            out[j as usize] = out[j as usize].add(&s.mul_term(&w.c, &shift)?)?;
        }
    }
    Ok(Some(TGraded { var: f.value.var, coeffs: out }))
}

/// The three representations of `f_{n,m}` agree.
pub fn fnm_provenance_check(ring: &Ring, n: u32, m: u32, provenances: &[Provenance]) -> Result<Report> {
    let (u, p) = standard(ring);
    let mut rep = Report::new(&alloc::format!("f_{{{},{}}} representations", n, m));
    let base = fnm(ring, n, m, Provenance::HookForm, &u, &p)?;
    for &pv in provenances.iter().filter(|&&pv| pv != Provenance::HookForm) {
        let other = fnm(ring, n, m, pv, &u, &p)?;
        compare_graded(&mut rep, &alloc::format!("{} = hook_form", pv.name()), &other.value, &base.value)?;
    }
    Ok(rep)
}

/// `f_{n,m}(u,T) = T^{nm} f_{n,m}(u/T,1/T) = f_{n,m}(tT/uq,T)` and
/// `f_{n,m}(u,T;q,t) = f_{m,n}(qu/t,T;t,q)`, with `q, t` truncated at `d`.
pub fn fnm_symmetry_check(n: u32, m: u32, d: i32) -> Result<Report> {
    let nm = n * m;
    // the u-reflection costs up to nm powers of q
    let ring = fnm_ring(d + nm as i32, nm, nm as i32 + 1);
    let (u, p) = standard(&ring);
    let f = fnm(&ring, n, m, Provenance::HookForm, &u, &p)?;
    let mut rep = Report::new(&alloc::format!("f_{{{},{}}} symmetries", n, m));
    match reflect_t(&f)? {
        Some(g) => {
            compare_graded(&mut rep, "T -> 1/T", &g, &f.value)?;
        }
        None => rep.push("T -> 1/T", false, "exponent outside [0, nm]".into()),
    }
    match reflect_u(&f, &p)? {
        Some(g) => {
            compare_graded(&mut rep, "u -> tT/(uq)", &g, &f.value)?;
        }
        None => rep.push("u -> tT/(uq)", false, "exponent outside [0, nm]".into()),
    }
    let swapped = fnm(&ring, m, n, Provenance::HookForm, &p.q.mul(&u).mul(&p.t.inv()), &p.swap())?;
    compare_graded(&mut rep, "(n,m,u,q,t) -> (m,n,qu/t,t,q)", &swapped.value, &f.value)?;
    Ok(rep)
}

fn box_product(ring: &Ring, n: u32, m: u32, x: impl Fn(i32, i32) -> Term) -> Result<MultiSeries> {
    let mut h = HookProduct::new(ring);
    for i in 1..=n as i32 {
        for j in 1..=m as i32 {
            h.push_one_minus(&x(i, j), 1)?;
        }
    }
    h.expand(ring)
}

/// `f(t) = Π(1-q^j t^i)`, `f(1/q) = T^{mn} Π(1-q^j t^i)` and
/// `lim_{u→0} f(u,uT) = Π(1-T q^{j-1} t^i)` over `i ≤ n, j ≤ m`.
pub fn fnm_special_values(n: u32, m: u32, d: i32, provenances: &[Provenance]) -> Result<Report> {
    let nm = n * m;
    let ring = fnm_ring(d, nm, nm as i32);
    let (u, p) = standard(&ring);
    let mut rep = Report::new(&alloc::format!("f_{{{},{}}} special values", n, m));
    let prod = box_product(&ring, n, m, |i, j| p.qt(j, i))?;
    let top = t_power(&ring, nm as i32);
    let at_t = TGraded::split(&prod, Var::Tg, nm as i32)?;
    let at_q = TGraded::split(&prod.mul_term(&top.c, &top.m)?, Var::Tg, nm as i32)?;
    for &pv in provenances {
        let f = fnm(&ring, n, m, pv, &p.t, &p)?;
        compare_graded(&mut rep, &alloc::format!("{} at u = t", pv.name()), &f.value, &at_t)?;
        // the hook form has removable poles at u = 1/q
        if pv != Provenance::HookForm {
            let f = fnm(&ring, n, m, pv, &p.q.inv(), &p)?;
            compare_graded(&mut rep, &alloc::format!("{} at u = 1/q", pv.name()), &f.value, &at_q)?;
        }
    }
    let t1 = t_power(&ring, 1);
    let limit = box_product(&ring, n, m, |i, j| t1.mul(&p.qt(j - 1, i)))?;
    let limit = TGraded::split(&limit, Var::Tg, nm as i32)?;
    let f = fnm(&ring, n, m, Provenance::SingleSum, &u, &p)?;
    // T -> uT sends c_{k,e} u^e T^k to u^{e+k} T^k; u -> 0 keeps e + k = 0
    let mut coeffs = Vec::new();
    let mut bounded = true;
    for (k, c) in f.value.coeffs.iter().enumerate() {
        bounded &= c.exponent_range(Var::U).map_or(true, |(lo, _)| lo + k as i32 >= 0);
        coeffs.push(c.extract(Var::U, -(k as i32))?.embed(&c.ring())?);
    }
    rep.push("f(u,uT) has no negative powers of u", bounded, alloc::string::String::new());
    let lim = TGraded { var: Var::Tg, coeffs };
    let limit = TGraded {
        var: Var::Tg,
        coeffs: limit.coeffs.iter().map(|c| c.embed(&f.value.coeffs[0].ring())).collect::<Result<_>>()?,
    };
    compare_graded(&mut rep, "lim u->0 f(u,uT)", &lim, &limit)?;
    Ok(rep)
}

/// Integrality of `f_{n,m}` and nonnegativity of `f_{n,m}(-z/w,T;z^2,1/w^2)`,
/// read off once the hook-form expansion at `q, t` caps `d` and `2d` agree
/// and no term reaches degree `d`.
pub fn fnm_conjecture_check(n: u32, m: u32, d: i32) -> Result<Report> {
    let nm = n * m;
    let mut rep = Report::conjecture_evidence(&alloc::format!("f_{{{},{}}} integrality and positivity", n, m));
    let small = fnm_ring(d, nm, nm as i32);
    let big = fnm_ring(2 * d, nm, nm as i32);
    let (u, p) = standard(&big);
    let f = fnm(&big, n, m, Provenance::HookForm, &u, &p)?;
    let mut top = 0;
    for c in &f.value.coeffs {
        for v in [Var::Q, Var::T] {
            if let Some((_, hi)) = c.exponent_range(v) {
                top = top.max(hi);
            }
        }
    }
    rep.push(
        "degree stabilized",
        top < d,
        alloc::format!("highest q,t exponent {} at caps {}", top, 2 * d),
    );
    let (us, ps) = standard(&small);
    let g = fnm(&small, n, m, Provenance::HookForm, &us, &ps)?;
    let ok = g.value.coeffs.iter().zip(&f.value.coeffs).all(|(a, b)| a.first_diff(b, &[]).ok().flatten().is_none());
    rep.push("caps d and 2d agree", ok, alloc::string::String::new());

    let mut integral = true;
    // (z, w, T) exponents
    let mut image: BTreeMap<(i32, i32, usize), Rational> = BTreeMap::new();
    for (k, c) in f.value.coeffs.iter().enumerate() {
        let (iq, it, iu) = (c.index(Var::Q).unwrap(), c.index(Var::T).unwrap(), c.index(Var::U).unwrap());
        for (mono, coef) in c.terms() {
            integral &= coef.is_integer();
            let (a, b, e) = (mono.get(iq), mono.get(it), mono.get(iu));
            let sign = if e.rem_euclid(2) == 0 { coef.clone() } else { -coef.clone() };
            *image.entry((2 * a + e, -2 * b - e, k)).or_default() += &sign;
        }
    }
    rep.push("coefficients in Z[q,t,u,1/u,T]", integral, alloc::string::String::new());
    let negative = image.iter().find(|(_, c)| c.is_negative());
    rep.push(
        "f(-z/w,T;z^2,1/w^2) has nonnegative coefficients",
        negative.is_none(),
        negative.map_or(alloc::string::String::new(), |((a, b, k), c)| {
            alloc::format!("z^{}*w^{}*T^{}: {}", a, b, k, c)
        }),
    );
    Ok(rep)
}

/// For `n, m` beyond the windows, `f_{n,m} = (uq;q,t)_∞ Σ_λ T^{|λ|}(...)`
/// `= (uq, u^{-1}tT; q,t,T)_∞ / (T, qtT; q,t,T)_∞` up to `T^k` and
/// `q, t` caps `d`.
pub fn fnm_limit_check(k: u32, d: i32, n: u32, m: u32) -> Result<Report> {
    if (n as i32) < d + k as i32 + 1 || (m as i32) < d + k as i32 + 1 {
        return Err(Error::Domain(alloc::format!("n, m must exceed {} for this window", d + k as i32)));
    }
    let ring = fnm_ring(d, k, d + k as i32);
    let (u, p) = standard(&ring);
    let mut rep = Report::new("f_{n,m} limit");
    let f = fnm_to(&ring, n, m, Provenance::HookForm, &u, &p)?;
    let bases = [p.q.clone(), p.t.clone()];
    let poch = log_pochhammer(&ring, &u.mul(&p.q), &bases)?.exp()?;
    let lhs = qtno_lhs(&ring, &u, &p)?.join(&ring)?;
    let first = TGraded::split(&poch.mul(&lhs)?, Var::Tg, k as i32)?;
    compare_graded(&mut rep, "(uq;q,t)_inf * sum", &f.value, &first)?;

    let t = t_power(&ring, 1);
    let bases = [p.q.clone(), p.t.clone(), t.clone()];
    let mut log = log_pochhammer(&ring, &u.mul(&p.q), &bases)?;
    log = log.add(&log_pochhammer(&ring, &u.inv().mul(&p.t).mul(&t), &bases)?)?;
    log = log.sub(&log_pochhammer(&ring, &t, &bases)?)?;
    log = log.sub(&log_pochhammer(&ring, &p.qt(1, 1).mul(&t), &bases)?)?;
    let closed = TGraded::split(&log.exp()?, Var::Tg, k as i32)?;
    compare_graded(&mut rep, "closed product", &f.value, &closed)?;
    Ok(rep)
}
