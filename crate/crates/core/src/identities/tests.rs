use std::collections::HashSet;
use std::println;

use super::util::var;
use super::*;
use crate::exactnum::{Ring, Term};
use crate::hooks::{qt_pochhammer, HookProduct, Params};
use crate::macdonald::{Alphabet, Branching};
use crate::partitions::{partitions_up_to, Partition};

#[test]
fn ids_are_unique() {
    let ids: HashSet<_> = registry().iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), registry().len());
    assert!(ids.len() >= 22);
}

#[test]
fn every_entry_passes() {
    for e in registry() {
        let r = run(&e, &e.windows, false).unwrap();
        println!("{}", r);
        assert!(r.pass, "{}", r);
    }
}

#[test]
fn perturbation_is_detected() {
    for e in registry() {
        let r = run(&e, &e.windows, true).unwrap();
        let d = r.first_diff.unwrap_or_else(|| panic!("{} passed after perturbation", e.id));
        let first = (e.build)(&e.windows).unwrap().remove(0);
        assert_eq!(d.label, first.label);
    }
}

#[test]
fn entries_are_not_trivial() {
    for e in registry() {
        let pairs = (e.build)(&e.windows).unwrap();
        assert!(!pairs.is_empty(), "{}", e.id);
        let busy = pairs.iter().any(|p| p.lhs.terms().len() > 1 || !p.lhs.constant_term().is_one());
        assert!(busy, "{} only compares ones", e.id);
    }
}

#[test]
fn unknown_id() {
    assert!(matches!(verify("no-such-identity", &WindowOverride::default()), Err(Error::UnknownIdentity(_))));
}

#[test]
fn overrides_reach_the_report() {
    let o = WindowOverride { tmax: Some(2), ..Default::default() };
    let r = verify("qtno", &o).unwrap();
    assert!(r.pass);
    assert_eq!(r.windows.tmax, 2);
    assert_eq!(r.checks, 3);
}

#[test]
fn dp_at_p_one_is_one_equals_one() {
    let e = lookup("dp").unwrap();
    let w = Windows { size: 1, ..e.windows };
    let pairs = (e.build)(&w).unwrap();
    for side in [&pairs[0].lhs, &pairs[0].rhs] {
        assert_eq!(side.terms().len(), 1);
        assert!(side.terms()[0].0.is_one() && side.terms()[0].1.is_one());
    }
    assert_eq!(dp_killed(1, 5).unwrap().len(), partitions_up_to(5).len() - 1);
}

#[test]
fn cp_two_is_the_triple_product() {
    let w = lookup("cp").unwrap().windows;
    let (cl, cr) = cp_sides(&w, 2).unwrap();
    let (jl, jr) = jacobi_sides(&w).unwrap();
    let window = [(Var::T, w.qt_deg)];
    assert_eq!(cl.first_diff(&jl, &window).unwrap(), None);
    assert_eq!(cr.first_diff(&jr, &window).unwrap(), None);
}

fn literal_double_product(ring: &Ring, x: &Term, alpha: &Partition, beta: &Partition, n: i32) -> HookProduct {
    let p = Params::standard(ring);
    let mut h = HookProduct::new(ring);
    for i in 1..=n {
        for j in 1..=n {
            let e = (i - alpha.part(j as usize) as i32, j - beta.part(i as usize) as i32);
            h.push_one_minus(&x.mul(&p.qt(e.0, e.1)), 1).unwrap();
        }
    }
    h
}

#[test]
fn double_product_matches_literal_product() {
    let ring = Ring::new().trunc(Var::Q, 4).trunc(Var::T, 4).trunc(Var::Wv, 3);
    let p = Params::standard(&ring);
    let w = var(&ring, Var::Wv);
    let base = literal_double_product(&ring, &w, &Partition::empty(), &Partition::empty(), 8).expand(&ring).unwrap();
    for alpha in partitions_up_to(3) {
        for beta in partitions_up_to(3) {
            let lit = literal_double_product(&ring, &w, &alpha, &beta, 8).expand(&ring).unwrap();
            let reg = double_product(&ring, &w, &alpha, &beta, &p).unwrap().expand(&ring).unwrap();
            assert_eq!(lit.first_diff(&reg.mul(&base).unwrap(), &[]).unwrap(), None, "α = {}, β = {}", alpha, beta);
        }
    }
}

#[test]
fn double_product_gives_qt_pochhammer() {
    let ring = Ring::new().trunc(Var::Q, 4).trunc(Var::T, 4).trunc(Var::U, 3);
    let p = Params::standard(&ring);
    let u = var(&ring, Var::U);
    for lambda in partitions_up_to(4) {
        let a = double_product(&ring, &u.mul(&p.q.inv()), &Partition::empty(), &lambda.conjugate(), &p).unwrap();
        let b = qt_pochhammer(&ring, &u, &lambda, &p).unwrap();
        assert_eq!(a.expand(&ring).unwrap().first_diff(&b.expand(&ring).unwrap(), &[]).unwrap(), None);
    }
}

#[test]
fn r_function_at_b_zero_is_macdonald_p() {
    let ring = Ring::new().trunc(Var::Q, 4).trunc(Var::T, 6);
    let p = Params::standard(&ring);
    let xs = Alphabet::geometric(&p.t, 3);
    let mut br = Branching::new(p.clone());
    let zero = Term::constant(crate::exactnum::Rational::ZERO);
    for lambda in partitions_up_to(4) {
        let r = r_function(&mut br, &ring, &lambda, &xs, &zero).unwrap();
        let pl = br.eval_p(&ring, &lambda, &xs).unwrap();
        assert_eq!(r.first_diff(&pl, &[]).unwrap(), None, "λ = {}", lambda);
    }
}

#[test]
fn r_function_one_row_one_variable() {
    // R_(k)(x; b) = x^k / (bx; q)_k
    let ring = Ring::new().trunc(Var::Q, 5).trunc(Var::T, 4).trunc(Var::X(1), 4).trunc(Var::B, 3);
    let p = Params::standard(&ring);
    let (x, b) = (var(&ring, Var::X(1)), var(&ring, Var::B));
    let mut br = Branching::new(p.clone());
    for k in 0..=4u32 {
        let r = r_function(&mut br, &ring, &Partition::new(&[k]), &Alphabet::new(std::vec![x.clone()]), &b).unwrap();
        let mut h = HookProduct::new(&ring);
        h.mul_term(&x.pow(k as i32));
        for i in 0..k as i32 {
            h.push_one_minus(&b.mul(&x).mul(&p.q.pow(i)), -1).unwrap();
        }
        assert_eq!(r.first_diff(&h.expand(&ring).unwrap(), &[]).unwrap(), None, "k = {}", k);
    }
}
