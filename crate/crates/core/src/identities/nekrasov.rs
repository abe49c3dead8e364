//! Entries built on the q,t-Nekrasov-Okounkov sum and the family `f_{n,m}`.

use alloc::format;
use alloc::vec::Vec;

use super::util::{mono, var};
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Var};
use crate::hooks::Params;
use crate::nekrasov::{fnm, fnm_ring, hbar_in_zw, hrv_pipeline, qtno_lhs, qtno_rhs, Provenance};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "qtno",
            statement: "Σ_λ T^|λ| Π_s (1-uq^{a+1}t^l)(1-u^{-1}q^a t^{l+1})/((1-q^{a+1}t^l)(1-q^a t^{l+1})) \
                        = Π_{i,j,k} (1-uq^i t^{j-1}T^k)(1-u^{-1}q^{i-1}t^j T^k)/((1-q^{i-1}t^{j-1}T^k)(1-q^i t^j T^k))",
            status: Status::Theorem,
            windows: Windows::new(3, 8, 3, 0, 0),
            build: qtno,
        },
        IdentityEntry {
            id: "fnm-forms",
            statement: "f_{n,m}: double Macdonald sum = single sum after dual Cauchy = hook product form",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 0, 3),
            build: fnm_forms,
        },
        IdentityEntry {
            id: "fnm-polynomiality",
            statement: "f_{n,m} ∈ Z[q,t,u,1/u,T] and f_{n,m}(-z/w,T;z^2,1/w^2) has nonnegative coefficients",
            status: Status::ConjectureEvidence,
            windows: Windows::new(0, 8, 0, 0, 2),
            build: fnm_polynomiality,
        },
        IdentityEntry {
            id: "hrv-g2",
            statement: "genus 2: H̄_n(z,w) is a polynomial of degree 2n^2+2 and H̄_n(z,-w) has nonnegative coefficients",
            status: Status::ConjectureEvidence,
            windows: Windows::new(2, 14, 0, 0, 0),
            build: hrv_g2,
        },
    ]
}

pub(super) fn qtno_pairs(ring: &Ring) -> Result<Vec<Pair>> {
    let (u, p) = (var(ring, Var::U), Params::standard(ring));
    let lhs = qtno_lhs(ring, &u, &p)?;
    let rhs = qtno_rhs(ring, &u, &p)?;
    Ok(lhs.coeffs.into_iter().zip(rhs.coeffs).enumerate().map(|(k, (a, b))| Pair::new(format!("T^{}", k), a, b)).collect())
}

fn qtno(w: &Windows) -> Result<Vec<Pair>> {
    qtno_pairs(&fnm_ring(w.qt_deg, w.tmax, w.u_window))
}

fn fnm_forms(w: &Windows) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for n in 1..=w.size {
        for m in 1..=w.size {
            let nm = n * m;
            let ring = fnm_ring(w.qt_deg, nm, nm as i32);
            let (u, p) = (var(&ring, Var::U), Params::standard(&ring));
            let hook = fnm(&ring, n, m, Provenance::HookForm, &u, &p)?.value.join(&ring)?;
            for prov in [Provenance::Def, Provenance::SingleSum] {
                let f = fnm(&ring, n, m, prov, &u, &p)?.value.join(&ring)?;
                out.push(Pair::new(format!("f_{{{},{}}} {} = hook_form", n, m, prov.name()), f, hook.clone()));
            }
        }
    }
    Ok(out)
}

/// `f` restricted to the terms accepted by `keep`, as an exactly known
/// series: comparing `f` with it exposes every rejected term.
pub(super) fn project(f: &MultiSeries, keep: impl Fn(&[i32], &Rational) -> Option<Rational>) -> Result<MultiSeries> {
    let n = f.vars().len();
    let terms = f.terms().iter().filter_map(|(m, c)| {
        let e: Vec<i32> = (0..n).map(|i| m.get(i)).collect();
        keep(&e, c).map(|c| (*m, c))
    });
    MultiSeries::from_terms(&f.ring(), terms)
}

pub(super) fn nonnegative_part(f: &MultiSeries) -> Result<MultiSeries> {
    project(f, |_, c| (!c.is_negative()).then(|| c.clone()))
}

fn integer_part(c: &Rational) -> Rational {
    Rational::from_bigint(c.numer() / c.denom())
}

fn fnm_polynomiality(w: &Windows) -> Result<Vec<Pair>> {
    let d = w.qt_deg;
    let mut out = Vec::new();
    for n in 1..=w.size {
        for m in 1..=w.size {
            let nm = n * m;
            let value = |cap: i32| -> Result<MultiSeries> {
                let ring = fnm_ring(cap, nm, nm as i32);
                let (u, p) = (var(&ring, Var::U), Params::standard(&ring));
                fnm(&ring, n, m, Provenance::HookForm, &u, &p)?.value.join(&ring)
            };
            let (small, big) = (value(d)?, value(2 * d)?);
            let tag = format!("f_{{{},{}}}", n, m);
            let (iq, it) = (big.index(Var::Q).unwrap(), big.index(Var::T).unwrap());
            let low = project(&big, |e, c| (e[iq] <= d && e[it] <= d).then(|| c.clone()))?;
            let ints = project(&big, |_, c| Some(integer_part(c)))?;
            let image = positivity_image(&big, nm, 2 * d)?;
            out.push(Pair::new(format!("{} stable from caps {} to {}", tag, d, 2 * d), small, big.clone()));
            out.push(Pair::new(format!("{} has no q,t exponent in ({}, {}]", tag, d, 2 * d), big.clone(), low));
            out.push(Pair::new(format!("{} integral", tag), big, ints));
            out.push(Pair::new(format!("{}(-z/w,T;z^2,1/w^2) nonnegative", tag), image.clone(), nonnegative_part(&image)?));
        }
    }
    Ok(out)
}

// u^e q^a t^b T^k -> (-1)^e z^{2a+e} w^{-2b-e} T^k
fn positivity_image(f: &MultiSeries, nm: u32, d: i32) -> Result<MultiSeries> {
    let s = nm as i32;
    let ring = Ring::new().laurent(Var::Zs, -s, 2 * d + s).laurent(Var::Wv, -2 * d - s, s).trunc(Var::Tg, s);
    let (iq, it, iu, ik) = (
        f.index(Var::Q).unwrap(),
        f.index(Var::T).unwrap(),
        f.index(Var::U).unwrap(),
        f.index(Var::Tg).unwrap(),
    );
    let terms = f.terms().iter().map(|(m, c)| {
        let (a, b, e, k) = (m.get(iq), m.get(it), m.get(iu), m.get(ik));
        let c = if e.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
        (mono(&ring, &[(Var::Zs, 2 * a + e), (Var::Wv, -2 * b - e), (Var::Tg, k)]).m, c)
    });
    MultiSeries::from_terms(&ring, terms)
}

fn hrv_g2(w: &Windows) -> Result<Vec<Pair>> {
    let out = hrv_pipeline(2, w.tmax, w.qt_deg)?;
    let mut pairs = alloc::vec![Pair::count("window requirements", out.report.failures().count(), 0)];
    for (i, h) in out.hbar.iter().enumerate() {
        let n = i as i32 + 1;
        let dn = crate::nekrasov::expected_degree(2, n as u32);
        let zw = hbar_in_zw(h)?;
        let (iz, iw) = (zw.index(Var::Zs).unwrap(), zw.index(Var::Wv).unwrap());
        let bounded = project(&zw, |e, c| (e[iz] + e[iw] <= dn).then(|| c.clone()))?;
        let signed = project(&zw, |e, c| Some(if e[iw] % 2 == 0 { c.clone() } else { -c.clone() }))?;
        pairs.push(Pair::new(format!("H_{} degree <= {}", n, dn), zw.clone(), bounded));
        pairs.push(Pair::new(format!("H_{}(z,-w) nonnegative", n), signed.clone(), nonnegative_part(&signed)?));
    }
    Ok(pairs)
}
