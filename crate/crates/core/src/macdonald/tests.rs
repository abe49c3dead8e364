use std::format;
use std::vec::Vec;

use super::oracle::{gram_schmidt, inner};
use super::*;
use crate::exactnum::{Mono, Rational, Var};
use crate::hooks::{hook_b, hook_c};
use crate::partitions::{partitions_of, partitions_up_to};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts)
}

fn qt_ring(d: i32) -> Ring {
    Ring::new().trunc(Var::Q, d).trunc(Var::T, d)
}

fn xs_ring(d: i32, n: u8, lo: i32, hi: i32) -> Ring {
    let mut r = qt_ring(d);
    for i in 1..=n {
        r = r.laurent(Var::X(i), lo, hi);
    }
    r
}

fn xs(ring: &Ring, n: u8) -> Alphabet {
    Alphabet::new((1..=n).map(|i| Term::mono(ring.mono(&[(Var::X(i), 1)]))).collect())
}

fn x_mono(ring: &Ring, e: &[u32]) -> Mono {
    let v: Vec<(Var, i32)> = e.iter().enumerate().map(|(i, &k)| (Var::X(i as u8 + 1), k as i32)).collect();
    ring.mono(&v)
}

fn coef_x(f: &MultiSeries, e: &[u32]) -> MultiSeries {
    let mut g = f.clone();
    for (i, &k) in e.iter().enumerate() {
        g = g.extract(Var::X(i as u8 + 1), k as i32).unwrap();
    }
    g
}

fn same(a: &MultiSeries, b: &MultiSeries) -> bool {
    a.first_diff(b, &[]).unwrap().is_none()
}

#[test]
fn trivial_branching_coefficients() {
    let ring = qt_ring(6);
    let mut br = Branching::new(Params::standard(&ring));
    for lambda in partitions_up_to(4) {
        assert!(same(&br.psi(&ring, &lambda, &lambda).unwrap(), &ring.one()));
        assert!(same(&br.phi(&ring, &lambda, &lambda).unwrap(), &ring.one()));
    }
    assert!(same(&br.psi(&ring, &p(&[1]), &Partition::empty()).unwrap(), &ring.one()));
    assert!(br.psi(&ring, &p(&[1, 1]), &Partition::empty()).unwrap().is_zero());
}

#[test]
fn two_row_oracle_coefficient() {
    // P_(2) = m_(2) + (1+q)(1-t)/(1-qt) m_(1,1)
    let ring = qt_ring(8);
    let pr = Params::standard(&ring);
    let (parts, basis, _) = gram_schmidt(&ring, &pr, 2);
    let i2 = parts.iter().position(|l| *l == p(&[2])).unwrap();
    let i11 = parts.iter().position(|l| *l == p(&[1, 1])).unwrap();
    let mut h = HookProduct::new(&ring);
    h.push_one_minus(&Term::constant(Rational::int(-1)).mul(&pr.q), 1).unwrap();
    h.push_one_minus(&pr.t, 1).unwrap();
    h.push_one_minus(&pr.qt(1, 1), -1).unwrap();
    assert!(same(&basis[i2][i11], &h.expand(&ring).unwrap()));
    assert!(same(&basis[i2][i2], &ring.one()));
    assert!(same(&basis[i11][i11], &ring.one()));
    assert!(basis[i11][i2].is_zero());
}

#[test]
fn oracle_is_dominance_triangular_and_biorthogonal() {
    let ring = qt_ring(6);
    let pr = Params::standard(&ring);
    for n in 1..=4 {
        let (parts, basis, g) = gram_schmidt(&ring, &pr, n);
        for (i, lam) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                if !mu.dominance_leq(lam) {
                    assert!(basis[i][j].is_zero(), "{} has {}", lam, mu);
                }
                let b = hook_b(&ring, mu, &pr).unwrap().expand(&ring).unwrap();
                let qmu: Vec<MultiSeries> = basis[j].iter().map(|c| c.mul(&b).unwrap()).collect();
                let ip = inner(&g, &basis[i], &qmu);
                let want = if i == j { ring.one() } else { ring.zero() };
                assert!(same(&ip, &want), "<P_{}, Q_{}>", lam, mu);
            }
        }
    }
}

#[test]
fn branching_matches_oracle() {
    let d = 5;
    let pr_ring = qt_ring(d);
    let pr = Params::standard(&pr_ring);
    for n in 1..=5u32 {
        let (parts, basis, _) = gram_schmidt(&pr_ring, &pr, n);
        let ring = xs_ring(d, n as u8, 0, n as i32);
        let rp = Params::standard(&ring);
        let mut br = Branching::new(rp.clone());
        let alpha = xs(&ring, n as u8);
        for (i, lam) in parts.iter().enumerate() {
            let ev = br.eval_p(&ring, lam, &alpha).unwrap();
            let evq = br.eval_q(&ring, lam, &alpha).unwrap();
            let b = hook_b(&pr_ring, lam, &pr).unwrap().expand(&pr_ring).unwrap();
            for (j, mu) in parts.iter().enumerate() {
                let mut e: Vec<u32> = mu.parts().to_vec();
                e.resize(n as usize, 0);
                let got = coef_x(&ev, &e);
                assert!(same(&got, &basis[i][j]), "P_{} at m_{}", lam, mu);
                // symmetric: the reversed exponent vector has the same coefficient
                e.reverse();
                let rev = coef_x(&ev, &e);
                assert!(same(&rev, &got), "P_{} symmetric", lam);
                e.reverse();
                let gotq = coef_x(&evq, &e);
                assert!(same(&gotq, &basis[i][j].mul(&b).unwrap()), "Q_{} at m_{}", lam, mu);
            }
        }
    }
}

#[test]
fn packaged_oracle_accepts_the_evaluator() {
    let rep = super::oracle::gram_schmidt_oracle(3, 4).unwrap();
    assert!(rep.passed(), "{}", rep);
    // one check per (λ, μ) with |λ| = |μ| ≤ 3, for P and for Q
    assert_eq!(rep.checks.len(), 2 * (1 + 4 + 9));
}

#[test]
fn monomial_examples() {
    let ring = xs_ring(4, 3, 0, 9);
    let mut br = Branching::new(Params::standard(&ring));
    let alpha = xs(&ring, 3);
    let e1 = br.eval_p(&ring, &p(&[1]), &alpha).unwrap();
    assert_eq!(format!("{}", e1), "x1 + x2 + x3");
    for m in 1..=3 {
        let got = br.eval_p(&ring, &Partition::rectangle(m, 3), &alpha).unwrap();
        let want = ring.term(Rational::ONE, x_mono(&ring, &[m, m, m])).unwrap();
        assert!(same(&got, &want), "m={}", m);
    }
    assert!(br.eval_p(&ring, &p(&[1, 1, 1, 1]), &alpha).unwrap().is_zero());
}

#[test]
fn principal_values() {
    let ring = qt_ring(8);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    for n in 1..=4u32 {
        let alpha = Alphabet::geometric(&pr.t, n as usize);
        let want = ring
            .one_minus(Rational::ONE, ring.mono(&[(Var::T, n as i32)]))
            .unwrap()
            .div_one_minus(&Rational::ONE, &ring.mono(&[(Var::T, 1)]))
            .unwrap();
        assert!(same(&br.eval_p(&ring, &p(&[1]), &alpha).unwrap(), &want));
        for lambda in partitions_up_to(5) {
            let a = br.eval_p(&ring, &lambda, &alpha).unwrap();
            let b = principal_p(&ring, &lambda, n, &pr).unwrap();
            assert!(same(&a, &b), "{} n={}", lambda, n);
        }
    }
    assert!(same(&principal_p(&ring, &Partition::empty(), 3, &pr).unwrap(), &ring.one()));
    let inf = principal_p_inf(&ring, &p(&[1]), &pr).unwrap();
    let want = ring.one().div_one_minus(&Rational::ONE, &ring.mono(&[(Var::T, 1)])).unwrap();
    assert!(same(&inf, &want));
}

#[test]
fn koornwinder_duality() {
    let ring = qt_ring(9);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    for n in 1..=3usize {
        let base = Alphabet::geometric(&pr.t, n);
        let lams: Vec<Partition> = partitions_up_to(3).into_iter().filter(|l| l.len() <= n).collect();
        for lam in &lams {
            for mu in &lams {
                let l = br
                    .eval_p(&ring, lam, &base)
                    .unwrap()
                    .mul(&br.eval_p(&ring, mu, &Alphabet::shifted(lam, n, &pr)).unwrap())
                    .unwrap();
                let r = br
                    .eval_p(&ring, mu, &base)
                    .unwrap()
                    .mul(&br.eval_p(&ring, lam, &Alphabet::shifted(mu, n, &pr)).unwrap())
                    .unwrap();
                assert!(same(&l, &r), "{} {} n={}", lam, mu, n);
            }
        }
    }
}

#[test]
fn inverted_parameters_leave_p_unchanged() {
    let ring = xs_ring(6, 3, -4, 4);
    let pr = Params::standard(&ring);
    let mut a = Branching::new(pr.clone());
    let mut b = Branching::new(pr.inverse());
    let x = xs(&ring, 3);
    let mixed = Alphabet::new(std::vec![x.0[0].clone(), x.0[1].inv(), x.0[2].clone()]);
    for lambda in partitions_up_to(4) {
        for alpha in [&x, &mixed] {
            let l = a.eval_p(&ring, &lambda, alpha).unwrap();
            let r = b.eval_p(&ring, &lambda, alpha).unwrap();
            assert!(same(&l, &r), "{}", lambda);
        }
    }
}

#[test]
fn box_complement() {
    let (m, n) = (2u32, 3u8);
    let ring = xs_ring(6, n, -(m as i32) * 3, m as i32 * 3);
    let mut br = Branching::new(Params::standard(&ring));
    let x = xs(&ring, n);
    let prod = Term::mono(x_mono(&ring, &[m, m, m]));
    for mu in crate::partitions::in_box(m, n as u32) {
        let comp = mu.complement_in_box(m, n as u32).unwrap();
        let l = br.eval_p(&ring, &comp, &x).unwrap();
        let r = br.eval_p(&ring, &mu, &x.inverse()).unwrap().mul_term(&prod.c, &prod.m).unwrap();
        assert!(same(&l, &r), "{}", mu);
    }
}

#[test]
fn homogeneity() {
    let ring = xs_ring(6, 3, 0, 8).laurent(Var::A, -8, 8);
    let mut br = Branching::new(Params::standard(&ring));
    let x = xs(&ring, 3);
    let a = Term::mono(ring.mono(&[(Var::A, -1)]));
    for lambda in partitions_up_to(4) {
        let l = br.eval_p(&ring, &lambda, &x.scaled(&a)).unwrap();
        let ar = a.pow(lambda.size() as i32);
        let r = br.eval_p(&ring, &lambda, &x).unwrap().mul_term(&ar.c, &ar.m).unwrap();
        assert!(same(&l, &r), "{}", lambda);
    }
}

#[test]
fn principal_skew_q() {
    let ring = qt_ring(8);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    let geo = ring.one().div_one_minus(&Rational::ONE, &ring.mono(&[(Var::Q, 1)])).unwrap();
    let one = Term::one();
    let q1 = skew_q_principal(&mut br, &ring, &p(&[1]), &Partition::empty(), &one).unwrap();
    assert!(same(&q1, &geo));
    let q21 = skew_q_principal(&mut br, &ring, &p(&[2]), &p(&[1]), &one).unwrap();
    assert!(same(&q21, &geo));
    for lambda in partitions_up_to(4) {
        let v = skew_q_principal(&mut br, &ring, &lambda, &lambda, &pr.q).unwrap();
        assert!(same(&v, &ring.one()));
        // Q_λ(t^ρ) = b_λ t^{n(λ)} / c_λ
        let mut h = hook_b(&ring, &lambda, &pr).unwrap();
        h.mul(&hook_c(&ring, &lambda, &pr).unwrap().inv()).unwrap();
        h.mul_term(&pr.t.pow(lambda.n_stat() as i32));
        let got = skew_q_rho(&mut br, &ring, &lambda, &Partition::empty()).unwrap();
        assert!(same(&got, &h.expand(&ring).unwrap()), "{}", lambda);
    }
}

#[test]
fn rho_truncation_is_stable_under_doubling() {
    let ring = qt_ring(7);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    let n = rho_length(&ring, &pr.t).unwrap();
    assert_eq!(n, 8);
    for lambda in partitions_up_to(4) {
        for mu in crate::partitions::subpartitions(&lambda) {
            let a = br.eval_skew_q(&ring, &lambda, &mu, &Alphabet::geometric(&pr.t, n)).unwrap();
            let b = br.eval_skew_q(&ring, &lambda, &mu, &Alphabet::geometric(&pr.t, 2 * n)).unwrap();
            assert!(same(&a, &b), "{}/{}", lambda, mu);
        }
    }
}

#[test]
fn binomial_examples() {
    let ring = qt_ring(8);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    let b = qt_binomial(&mut br, &ring, &p(&[2]), &p(&[1])).unwrap();
    assert_eq!(format!("{}", b), "1 + q");
    for lambda in partitions_up_to(4) {
        let z = qt_binomial(&mut br, &ring, &lambda, &Partition::empty()).unwrap();
        assert!(same(&z, &ring.one()), "[{}, 0]", lambda);
        let s = qt_binomial(&mut br, &ring, &lambda, &lambda).unwrap();
        assert!(same(&s, &ring.one()), "[{}, {}]", lambda, lambda);
    }
    assert!(qt_binomial(&mut br, &ring, &p(&[1]), &p(&[2])).unwrap().is_zero());
    for n in 2..=4 {
        for lambda in partitions_of(n) {
            let mu = Partition::new(&lambda.parts()[1..]);
            let _ = qt_binomial(&mut br, &ring, &lambda, &mu).unwrap();
        }
    }
}

#[test]
fn b_duality_through_branching_cache() {
    let ring = qt_ring(10);
    let pr = Params::standard(&ring);
    for lambda in partitions_up_to(8) {
        let mut h = hook_b(&ring, &lambda, &pr).unwrap();
        h.mul(&hook_b(&ring, &lambda.conjugate(), &pr.swap()).unwrap()).unwrap();
        assert!(same(&h.expand(&ring).unwrap(), &ring.one()));
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn interpolation_one_variable() {
    let f = interpolation_poly(&p(&[1]), 1, &r(1, 2), &r(1, 3)).unwrap();
    let mut want = SymPoly::zero(1);
    want.terms.insert(std::vec![1], Rational::ONE);
    want.terms.insert(std::vec![0], Rational::int(-1));
    assert_eq!(f, want);
    let e = interpolation_poly(&Partition::empty(), 3, &r(1, 2), &r(1, 3)).unwrap();
    assert_eq!(e.terms.len(), 1);
    assert_eq!(e.terms.get(&std::vec![0, 0, 0]), Some(&Rational::ONE));
}

#[test]
fn interpolation_spot_checks() {
    let points = [(r(1, 2), r(1, 3)), (r(2, 5), r(-3, 7)), (r(5, 3), r(2, 9))];
    for (q0, t0) in &points {
        for mu in partitions_up_to(3) {
            for n in mu.len().max(1)..=3 {
                let rep = interpolation_spot_check(&mu, n, q0, t0).unwrap();
                assert!(rep.all(), "{:?} at q={} t={}", rep, q0, t0);
            }
        }
    }
}

#[test]
fn binomial_against_interpolation_and_duality() {
    let (q0, t0) = (r(1, 2), r(1, 3));
    let ring = qt_ring(22);
    let mut br = Branching::new(Params::standard(&ring));
    for lambda in partitions_up_to(4) {
        for mu in crate::partitions::subpartitions(&lambda) {
            let v = binomial_at(&lambda, &mu, &q0, &t0).unwrap();
            let dual = binomial_at(&lambda.conjugate(), &mu.conjugate(), &t0.recip().unwrap(), &q0.recip().unwrap()).unwrap();
            assert_eq!(v, dual, "[{}, {}]", lambda, mu);
            // the series side is a rational function; c_μ c'_μ clears its denominator
            let pr = br.params().clone();
            let mut h = hook_c(&ring, &mu, &pr).unwrap();
            h.mul(&crate::hooks::hook_cprime(&ring, &mu, &pr).unwrap()).unwrap();
            let s = qt_binomial(&mut br, &ring, &lambda, &mu).unwrap().mul(&h.expand(&ring).unwrap()).unwrap();
            assert!(s.terms().iter().all(|(m, _)| m.get(0).max(m.get(1)) <= 17), "[{}, {}]: {}", lambda, mu, s);
            let mut at = Rational::ZERO;
            for (m, c) in s.terms() {
                at = &at + &(c * &(&q0.pow(m.get(0)).unwrap() * &t0.pow(m.get(1)).unwrap()));
            }
            let mut den = Rational::ONE;
            for st in mu.all_cell_stats() {
                let a = &q0.pow(st.arm).unwrap() * &t0.pow(st.leg + 1).unwrap();
                let b = &q0.pow(st.arm + 1).unwrap() * &t0.pow(st.leg).unwrap();
                den = &den * &(&(&Rational::ONE - &a) * &(&Rational::ONE - &b));
            }
            assert_eq!(at, &v * &den, "[{}, {}]", lambda, mu);
        }
    }
    assert_eq!(binomial_at(&p(&[1]), &p(&[2]), &q0, &t0).unwrap(), Rational::ZERO);
}

#[test]
fn plethystic_split_against_power_sums() {
    // p_r -> (a^r - b^r)/(1 - t^r) applied to the power-sum expansion
    let base = qt_ring(6);
    let ring = base.clone().laurent(Var::A, 0, 3).laurent(Var::B, 0, 3);
    let pr = Params::standard(&ring);
    let bpr = Params::standard(&base);
    let mut br = Branching::new(pr.clone());
    let a = Term::mono(ring.mono(&[(Var::A, 1)]));
    let b = Term::mono(ring.mono(&[(Var::B, 1)]));
    for lambda in partitions_up_to(3) {
        for mu in crate::partitions::subpartitions(&lambda) {
            let got = plethystic_eval(&mut br, &ring, &lambda, &mu, &a, &b).unwrap();
            let f = super::oracle::skew_p_in_power_sums(&base, &bpr, &lambda, &mu);
            let mut want = ring.zero();
            for (rho, c) in f {
                let mut term = c.embed(&ring).unwrap();
                for &r in rho.parts() {
                    let num = ring
                        .var(Var::A)
                        .mul_term(&Rational::ONE, &ring.mono(&[(Var::A, r as i32 - 1)]))
                        .unwrap()
                        .sub(&ring.term(Rational::ONE, ring.mono(&[(Var::B, r as i32)])).unwrap())
                        .unwrap();
                    let den = num.div_one_minus(&Rational::ONE, &ring.mono(&[(Var::T, r as i32)])).unwrap();
                    term = term.mul(&den).unwrap();
                }
                want = want.add(&term).unwrap();
            }
            assert!(same(&got, &want), "{}/{}: {} vs {}", lambda, mu, got, want);
        }
    }
}

#[test]
fn plethystic_examples() {
    let ring = qt_ring(6).laurent(Var::A, 0, 4).laurent(Var::B, 0, 4);
    let pr = Params::standard(&ring);
    let mut br = Branching::new(pr.clone());
    let a = Term::mono(ring.mono(&[(Var::A, 1)]));
    let b = Term::mono(ring.mono(&[(Var::B, 1)]));
    let zero = Term::constant(Rational::ZERO);
    for lambda in partitions_up_to(3) {
        let v = plethystic_eval(&mut br, &ring, &lambda, &lambda, &a, &b).unwrap();
        assert!(same(&v, &ring.one()));
        for mu in crate::partitions::subpartitions(&lambda) {
            let got = plethystic_eval(&mut br, &ring, &lambda, &mu, &a, &zero).unwrap();
            let rho = Alphabet::geometric(&pr.t, rho_length(&ring, &pr.t).unwrap());
            let ar = a.pow((lambda.size() - mu.size()) as i32);
            let want = br.eval_skew(&ring, Family::P, &lambda, &mu, &rho).unwrap().mul_term(&ar.c, &ar.m).unwrap();
            assert!(same(&got, &want), "{}/{}", lambda, mu);
        }
    }
    let one = plethystic_eval(&mut br, &ring, &p(&[1]), &Partition::empty(), &a, &b).unwrap();
    let want = ring
        .var(Var::A)
        .sub(&ring.var(Var::B))
        .unwrap()
        .div_one_minus(&Rational::ONE, &ring.mono(&[(Var::T, 1)]))
        .unwrap();
    assert!(same(&one, &want));
}

fn vertex_ring() -> Ring {
    Ring::new().trunc(Var::T, 8).trunc(Var::Z, 14)
}

#[test]
fn vertex_trivial_and_one_leg() {
    let ring = vertex_ring();
    let z = Term::mono(ring.mono(&[(Var::Z, 1)]));
    let t = Term::mono(ring.mono(&[(Var::T, 1)]));
    let e = Partition::empty();
    let c0 = refined_vertex(&ring, &e, &e, &e, &z, &t).unwrap();
    assert!(same(&c0, &ring.one()));
    // λ = ν = 0: q^{n(μ')+|μ|/2} t^{-n(μ)} s_μ(q^ρ), with s_μ(q^ρ) = q^{n(μ)} / Π (1 - q^h)
    for mu in partitions_up_to(4) {
        let got = refined_vertex(&ring, &e, &mu, &e, &z, &t).unwrap();
        let mut h = HookProduct::new(&ring);
        for hk in mu.hooks() {
            h.push_one_minus(&z.pow(2 * hk as i32), -1).unwrap();
        }
        h.mul_term(&z.pow(2 * (mu.conjugate().n_stat() + mu.n_stat()) as i32 + mu.size() as i32));
        h.mul_term(&t.pow(-(mu.n_stat() as i32)));
        let want = h.expand(&ring).unwrap();
        assert!(same(&got, &want), "{}: {} vs {}", mu, got, want);
    }
}

#[test]
fn vertex_specializes_at_t_equal_q() {
    let ring = vertex_ring();
    let z = Term::mono(ring.mono(&[(Var::Z, 1)]));
    let t = Term::mono(ring.mono(&[(Var::T, 1)]));
    let target = Ring::new().trunc(Var::Z, 8);
    for (l, m, n) in [(&[1u32][..], &[][..], &[][..]), (&[1], &[1], &[]), (&[1], &[1], &[1]), (&[2], &[1], &[1, 1])] {
        let v = refined_vertex(&ring, &p(l), &p(m), &p(n), &z, &t).unwrap();
        let s = v.substitute(&target, &[(Var::T, Rational::ONE, target.mono(&[(Var::Z, 2)]))]);
        assert!(s.is_ok(), "{:?}", s.err());
    }
}

#[test]
fn vertex_is_cyclic_at_t_equal_q() {
    // at t = q the refined vertex becomes the ordinary one, which is cyclically symmetric
    let ring = vertex_ring();
    let z = Term::mono(ring.mono(&[(Var::Z, 1)]));
    let t = Term::mono(ring.mono(&[(Var::T, 1)]));
    let target = Ring::new().trunc(Var::Z, 8);
    let at_q = |l: &Partition, m: &Partition, n: &Partition| {
        refined_vertex(&ring, l, m, n, &z, &t)
            .unwrap()
            .substitute(&target, &[(Var::T, Rational::ONE, target.mono(&[(Var::Z, 2)]))])
            .unwrap()
    };
    let shapes = [p(&[]), p(&[1]), p(&[2]), p(&[1, 1])];
    for l in &shapes {
        for m in &shapes {
            for n in &shapes {
                assert!(same(&at_q(l, m, n), &at_q(m, n, l)), "{} {} {}", l, m, n);
            }
        }
    }
}
