use std::string::ToString;

use super::*;
use crate::exactnum::Mono;
use crate::partitions::{partitions_up_to, Partition};

fn ring(d: i32, k: u32, span: i32) -> Ring {
    fnm_ring(d, k, span)
}

fn u_of(r: &Ring) -> Term {
    Term::mono(r.mono(&[(Var::U, 1)]))
}

fn same(a: &MultiSeries, b: &MultiSeries) -> bool {
    a.first_diff(b, &[]).unwrap().is_none()
}

fn joined(r: &Ring, g: &TGraded) -> MultiSeries {
    g.join(r).unwrap()
}

#[test]
fn f11_in_all_representations() {
    let r = ring(4, 1, 2);
    let (u, p) = (u_of(&r), Params::standard(&r));
    for pv in Provenance::ALL {
        let f = fnm(&r, 1, 1, pv, &u, &p).unwrap();
        assert_eq!(f.value.order(), 1);
        assert_eq!(joined(&r, &f.value).to_string(), "1 - t*u^-1*T + T - q*u", "{:?}", pv);
    }
}

#[test]
fn qtno_first_coefficient_matches_series_division() {
    let r = ring(6, 1, 1);
    let (u, p) = (u_of(&r), Params::standard(&r));
    let lhs = qtno_lhs(&r, &u, &p).unwrap();
    let rhs = qtno_rhs(&r, &u, &p).unwrap();
    let c = lhs.coeffs[1].ring();
    let m = |q: i32, t: i32, u: i32| c.mono(&[(Var::Q, q), (Var::T, t), (Var::U, u)]);
    let one = crate::Rational::ONE;
    let num = c.one().mul_one_minus(&one, &m(1, 0, 1)).unwrap().mul_one_minus(&one, &m(0, 1, -1)).unwrap();
    let want = num.div_one_minus(&one, &m(1, 0, 0)).unwrap().div_one_minus(&one, &m(0, 1, 0)).unwrap();
    assert!(same(&lhs.coeffs[1], &want));
    assert!(same(&rhs.coeffs[1], &want));
    assert!(same(&lhs.coeffs[0], &c.one()) && same(&rhs.coeffs[0], &c.one()));
}

#[test]
fn qtno_identity_holds() {
    let r = ring(5, 3, 3);
    let (u, p) = (u_of(&r), Params::standard(&r));
    let rep = qtno_check(&r, &u, &p).unwrap();
    assert!(rep.passed(), "{}", rep);
    assert_eq!(rep.checks.len(), 4);
}

// at t = q: Π_h (1-uq^h)(1-u^{-1}q^h)/(1-q^h)^2 and the literal product
// Π_{k,r} ((1-uq^r T^k)(1-u^{-1}q^r T^k) / ((1-q^{r-1}T^k)(1-q^{r+1}T^k)))^r
#[test]
fn schur_case_against_literal_products() {
    let (d, k) = (6, 3);
    let r = Ring::new().trunc(Var::Q, d).laurent(Var::U, -(k as i32), k as i32).trunc(Var::Tg, k as i32);
    let q = Term::mono(r.mono(&[(Var::Q, 1)]));
    let u = u_of(&r);
    let p = Params::new(q.clone(), q.clone());
    let lhs = joined(&r, &qtno_lhs(&r, &u, &p).unwrap());
    let rhs = joined(&r, &qtno_rhs(&r, &u, &p).unwrap());

    let mut hooks = r.zero();
    for lam in partitions_up_to(k) {
        let mut h = HookProduct::new(&r);
        h.mul_term(&t_power(&r, lam.size() as i32));
        for hk in lam.hooks() {
            let qh = q.pow(hk as i32);
            h.push_one_minus(&u.mul(&qh), 1).unwrap();
            h.push_one_minus(&u.inv().mul(&qh), 1).unwrap();
            h.push_one_minus(&qh, -2).unwrap();
        }
        hooks = hooks.add(&h.expand(&r).unwrap()).unwrap();
    }
    let mut prod = HookProduct::new(&r);
    for kk in 1..=k as i32 {
        let tk = t_power(&r, kk);
        for rr in 1..=d + 1 {
            prod.push_one_minus(&u.mul(&q.pow(rr)).mul(&tk), rr).unwrap();
            prod.push_one_minus(&u.inv().mul(&q.pow(rr)).mul(&tk), rr).unwrap();
            prod.push_one_minus(&q.pow(rr - 1).mul(&tk), -rr).unwrap();
            prod.push_one_minus(&q.pow(rr + 1).mul(&tk), -rr).unwrap();
        }
    }
    let prod = prod.expand(&r).unwrap();
    assert!(same(&lhs, &hooks));
    assert!(same(&rhs, &prod));
    assert!(same(&lhs, &rhs));
}

#[test]
fn degenerate_u_kills_every_nonempty_summand() {
    let r = ring(4, 4, 4);
    let p = Params::standard(&r);
    for lam in partitions_up_to(6).into_iter().filter(|l| !l.is_empty()) {
        assert!(qtno_summand(&r, &lam, &p.t, &p).unwrap().is_zero(), "{}", lam);
        assert!(qtno_summand(&r, &lam, &p.q.inv(), &p).unwrap().is_zero(), "{}", lam);
    }
    assert!(!qtno_summand(&r, &Partition::empty(), &p.t, &p).unwrap().is_zero());
}

#[test]
fn representations_agree() {
    for (n, m) in [(1, 2), (2, 1), (2, 2)] {
        let r = ring(4, n * m, (n * m) as i32);
        let rep = fnm_provenance_check(&r, n, m, &Provenance::ALL).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
    for (n, m) in [(1, 3), (3, 1), (2, 3)] {
        let r = ring(4, n * m, (n * m) as i32);
        let rep = fnm_provenance_check(&r, n, m, &[Provenance::SingleSum]).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
}

#[test]
fn f11_reflections_by_hand() {
    let r = ring(4, 1, 2);
    let (u, p) = (u_of(&r), Params::standard(&r));
    let f = fnm(&r, 1, 1, Provenance::SingleSum, &u, &p).unwrap();
    let g = reflect_t(&f).unwrap().unwrap();
    // 1 - uq <-> T(1 - t/u) with u -> u/T
    assert_eq!(joined(&r, &g).to_string(), joined(&r, &f.value).to_string());
    let h = reflect_u(&f, &p).unwrap().unwrap();
    assert_eq!(joined(&r, &h).to_string(), "1 - t*u^-1*T + T - q*u");
}

#[test]
fn symmetries() {
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let rep = fnm_symmetry_check(n, m, 4).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
}

#[test]
fn special_values() {
    for (n, m) in [(1, 1), (1, 2), (2, 1)] {
        let rep = fnm_special_values(n, m, 5, &Provenance::ALL).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
    let rep = fnm_special_values(2, 2, 5, &[Provenance::SingleSum, Provenance::HookForm]).unwrap();
    assert!(rep.passed(), "{}", rep);
}

#[test]
fn conjecture_evidence_small_boxes() {
    let rep = fnm_conjecture_check(1, 1, 3).unwrap();
    assert!(rep.passed() && rep.conjecture, "{}", rep);
    let rep = fnm_conjecture_check(1, 2, 6).unwrap();
    assert!(rep.passed(), "{}", rep);
}

#[test]
fn f11_positivity_image() {
    // 1 - uq + T - tT/u at u = -z/w, q = z^2, t = w^-2 is 1 + z^3/w + T + T/(zw)
    let rep = fnm_conjecture_check(1, 1, 2).unwrap();
    assert!(rep.checks.iter().all(|c| c.passed), "{}", rep);
}

#[test]
fn limit_against_sum_and_closed_product() {
    let rep = fnm_limit_check(2, 3, 6, 6).unwrap();
    assert!(rep.passed(), "{}", rep);
    assert!(fnm_limit_check(2, 3, 5, 6).is_err());
}

#[test]
fn classical_identity() {
    let rep = classical_no(6).unwrap();
    assert!(rep.passed(), "{}", rep);
}

#[test]
fn classical_first_coefficient() {
    let r = Ring::new().trunc(Var::Tg, 2).trunc(Var::S, 2);
    let s = Term::mono(r.mono(&[(Var::S, 1)]));
    let (lhs, rhs) = classical_no_sides(&r, &s).unwrap();
    assert_eq!(lhs.coeffs[1].to_string(), "1 - s");
    assert_eq!(rhs.coeffs[1].to_string(), "1 - s");
}

#[test]
fn hrv_genus_zero_and_one() {
    for g in [0, 1] {
        let out = hrv_pipeline(g, 3, 8).unwrap();
        assert!(out.report.passed(), "{}", out.report);
    }
    let out = hrv_pipeline(1, 1, 6).unwrap();
    assert_eq!(out.hbar[0].to_string(), "W^-2 - 2*Z*W^-1 + Z^2");
    assert_eq!(hbar_in_zw(&out.hbar[0]).unwrap().to_string(), "z^2 - 2*z*w + w^2");
}

#[test]
fn hrv_genus_two_first_term() {
    let out = hrv_pipeline(2, 1, 10).unwrap();
    // (z - w)^4
    assert_eq!(hbar_in_zw(&out.hbar[0]).unwrap().to_string(), "z^4 - 4*z^3*w + 6*z^2*w^2 - 4*z*w^3 + w^4");
    assert!(out.report.passed(), "{}", out.report);
    assert!(out.report.conjecture);
}

#[test]
fn log_pochhammer_matches_product() {
    let r = Ring::new().trunc(Var::Q, 6).trunc(Var::T, 6);
    let p = Params::standard(&r);
    let x = p.qt(1, 0);
    let got = log_pochhammer(&r, &x, &[p.q.clone(), p.t.clone()]).unwrap().exp().unwrap();
    let mut h = HookProduct::new(&r);
    for i in 0..=6 {
        for j in 0..=6 {
            h.push_one_minus(&x.mul(&p.qt(i, j)), 1).unwrap();
        }
    }
    assert!(same(&got, &h.expand(&r).unwrap()));
    let _ = Mono::ONE;
}

#[test]
fn hrv_genus_two_second_term_is_positive() {
    let out = hrv_pipeline(2, 2, 14).unwrap();
    assert!(out.report.passed(), "{}", out.report);
    let h = hbar_in_zw(&out.hbar[1]).unwrap();
    assert_eq!(h.exponent_range(Var::Zs), Some((0, 10)));
    assert_eq!(h.len(), 25);
}
