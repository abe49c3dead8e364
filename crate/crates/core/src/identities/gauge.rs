//! Gauge theory sums with two hypermultiplets, the flop companion and the
//! bounded q-Gauss sum.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::util::{poch_ratio, var};
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Term, Var};
use crate::hooks::{hook_c, hook_cprime, qt_pochhammer, HookProduct, Params};
use crate::macdonald::{Alphabet, Branching, Family};
use crate::partitions::{horizontal_strips_below, partitions_up_to, Partition};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "ikb",
            statement: "Σ_{μ,ν} (-u)^|μ| (-v)^|ν| q^{n(μ')+n(ν')} t^{n(μ)+n(ν)}/(c_μ c'_μ c_ν c'_ν) Π_{i,j} (1-wq^{i-ν_j}t^{j-μ'_i}) \
                        = Σ_λ (-wqt)^|λ| q^{n(λ')} t^{n(λ)}/(c_λ c'_λ) Π_{i,j} (1-uq^{i-1}t^{j-λ'_i-1})(1-vq^{i-λ_j-1}t^{j-1}) \
                        = (u,v,wqt,uvw;q,t)_∞/(uwq,vwt;q,t)_∞",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 0),
            build: ikb,
        },
        IdentityEntry {
            id: "flop",
            statement: "Σ_λ w^|λ| t^{2n(λ)}/(c_λ c'_λ) Π_{i,j} (1-uq^{i-1}t^{j-λ'_i})(1-vq^{i-1}t^{j-λ'_i}) \
                        = (ut,vt,uw,vw;q,t)_∞/(w,uvw;q,t)_∞; equivalently with (u,v;q,t)_λ and (uw,vw;q,t)_∞/(w,uvw;q,t)_∞",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 0),
            build: flop,
        },
        IdentityEntry {
            id: "q-gauss",
            statement: "Σ_λ t^{n(λ)} w^|λ| (u,v;q,t)_λ/c'_λ R_λ(t^δ;uvw) = Π_{i≤n} (uwt^{i-1},vwt^{i-1};q)_∞/(wt^{i-1},uvwt^{i-1};q)_∞, \
                        R_λ(t^δ;b) = t^{n(λ)} (t^n;q,t)_λ/((bt^{n-1};q,t)_λ c_λ), n ≤ 3",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 3),
            build: q_gauss,
        },
    ]
}

fn uvw_ring(w: &Windows) -> Ring {
    Ring::new()
        .trunc(Var::Q, w.qt_deg)
        .trunc(Var::T, w.qt_deg)
        .trunc(Var::U, w.extra_deg)
        .trunc(Var::V, w.extra_deg)
        .trunc(Var::Wv, w.extra_deg)
}

/// `Π_{i,j≥1} (1 - x q^{i-α_j} t^{j-β_i}) / (xqt;q,t)_∞` as a finite
/// product. Outside the block `i <= l(β)`, `j <= l(α)` each row or column
/// telescopes against the denominator.
pub fn double_product(ring: &Ring, x: &Term, alpha: &Partition, beta: &Partition, p: &Params) -> Result<HookProduct> {
    let (ni, nj) = (beta.len() as i32, alpha.len() as i32);
    let mut h = HookProduct::new(ring);
    for i in 1..=ni {
        let bi = beta.part(i as usize) as i32;
        for j in 1..=nj {
            let aj = alpha.part(j as usize) as i32;
            h.push_one_minus(&x.mul(&p.qt(i - aj, j - bi)), 1)?;
            h.push_one_minus(&x.mul(&p.qt(i, j)), -1)?;
        }
        for j in nj + 1 - bi..=nj {
            h.push_one_minus(&x.mul(&p.qt(i, j)), 1)?;
        }
    }
    for j in 1..=nj {
        let aj = alpha.part(j as usize) as i32;
        for i in ni + 1 - aj..=ni {
            h.push_one_minus(&x.mul(&p.qt(i, j)), 1)?;
        }
    }
    Ok(h)
}

/// `q^{n(λ')} t^{n(λ)} / (c_λ c'_λ)` times `z^{|λ|}`.
fn weight(ring: &Ring, lambda: &Partition, z: &Term, p: &Params) -> Result<HookProduct> {
    let mut h = hook_c(ring, lambda, p)?;
    h.mul(&hook_cprime(ring, lambda, p)?)?;
    let mut h = h.inv();
    h.mul_term(&p.qt(lambda.conjugate().n_stat() as i32, lambda.n_stat() as i32).mul(&z.pow(lambda.size() as i32)));
    Ok(h)
}

fn minus(x: &Term) -> Term {
    x.mul(&Term::constant(Rational::int(-1)))
}

fn ikb(w: &Windows) -> Result<Vec<Pair>> {
    let ring = uvw_ring(w);
    let p = Params::standard(&ring);
    let [u, v, wv] = [Var::U, Var::V, Var::Wv].map(|x| var(&ring, x));
    let shapes = partitions_up_to(w.extra_deg as u32);
    let (qi, ti) = (p.q.inv(), p.t.inv());
    let qt = p.q.mul(&p.t);

    let mut first = ring.zero();
    for mu in &shapes {
        for nu in &shapes {
            let mut h = weight(&ring, mu, &minus(&u), &p)?;
            h.mul(&weight(&ring, nu, &minus(&v), &p)?)?;
            h.mul(&double_product(&ring, &wv, nu, &mu.conjugate(), &p)?)?;
            first = first.add(&h.expand(&ring)?)?;
        }
    }
    let first = first.mul(&poch_ratio(&ring, &[wv.mul(&qt)], &[], &[p.q.clone(), p.t.clone()])?)?;

    let mut second = ring.zero();
    let empty = Partition::empty();
    for lambda in &shapes {
        let mut h = weight(&ring, lambda, &minus(&wv.mul(&qt)), &p)?;
        h.mul(&double_product(&ring, &u.mul(&qi).mul(&ti), &empty, &lambda.conjugate(), &p)?)?;
        h.mul(&double_product(&ring, &v.mul(&qi).mul(&ti), lambda, &empty, &p)?)?;
        second = second.add(&h.expand(&ring)?)?;
    }
    let second = second.mul(&poch_ratio(&ring, &[u.clone(), v.clone()], &[], &[p.q.clone(), p.t.clone()])?)?;

    let uvw = u.mul(&v).mul(&wv);
    let third = poch_ratio(
        &ring,
        &[u.clone(), v.clone(), wv.mul(&qt), uvw],
        &[u.mul(&wv).mul(&p.q), v.mul(&wv).mul(&p.t)],
        &[p.q.clone(), p.t.clone()],
    )?;
    Ok(alloc::vec![
        Pair::new("sum over (μ, ν) = sum over λ", first.clone(), second),
        Pair::new("sum over (μ, ν) = product", first, third),
    ])
}

fn flop(w: &Windows) -> Result<Vec<Pair>> {
    let ring = uvw_ring(w);
    let p = Params::standard(&ring);
    let [u, v, wv] = [Var::U, Var::V, Var::Wv].map(|x| var(&ring, x));
    let qi = p.q.inv();
    let mut via_products = ring.zero();
    let mut via_pochhammer = ring.zero();
    for lambda in partitions_up_to(w.extra_deg as u32) {
        let mut base = hook_c(&ring, &lambda, &p)?;
        base.mul(&hook_cprime(&ring, &lambda, &p)?)?;
        let mut base = base.inv();
        base.mul_term(&wv.pow(lambda.size() as i32).mul(&p.t.pow(2 * lambda.n_stat() as i32)));
        let lc = lambda.conjugate();
        let mut a = base.clone();
        a.mul(&double_product(&ring, &u.mul(&qi), &Partition::empty(), &lc, &p)?)?;
        a.mul(&double_product(&ring, &v.mul(&qi), &Partition::empty(), &lc, &p)?)?;
        via_products = via_products.add(&a.expand(&ring)?)?;
        let mut b = base;
        b.mul(&qt_pochhammer(&ring, &u, &lambda, &p)?)?;
        b.mul(&qt_pochhammer(&ring, &v, &lambda, &p)?)?;
        via_pochhammer = via_pochhammer.add(&b.expand(&ring)?)?;
    }
    let bases = [p.q.clone(), p.t.clone()];
    let uvw = u.mul(&v).mul(&wv);
    let tail = poch_ratio(&ring, &[u.mul(&p.t), v.mul(&p.t)], &[], &bases)?;
    let same = poch_ratio(&ring, &[u.mul(&wv), v.mul(&wv)], &[wv.clone(), uvw], &bases)?;
    Ok(alloc::vec![
        Pair::new("product form", via_products.mul(&tail)?, same.mul(&tail)?),
        Pair::new("(u,v;q,t)_λ form", via_pochhammer, same),
    ])
}

/// `R_λ(x_1, ..., x_n; b; q, t)` by its branching formula, peeling `x_n`
/// first. Terms with `l(μ)` above the number of remaining variables vanish
/// and are skipped, so with `x = (1, t, ..., t^{n-1})` no denominator has a
/// negative power of `t`.
pub fn r_function(br: &mut Branching, ring: &Ring, lambda: &Partition, xs: &Alphabet, b: &Term) -> Result<MultiSeries> {
    let mut memo = HashMap::new();
    r_rec(br, ring, lambda, xs, xs.len(), b, &mut memo)
}

fn r_rec(
    br: &mut Branching,
    ring: &Ring,
    lambda: &Partition,
    xs: &Alphabet,
    k: usize,
    b: &Term,
    memo: &mut HashMap<(Partition, usize), MultiSeries>,
) -> Result<MultiSeries> {
    if lambda.len() > k {
        return Ok(ring.zero());
    }
    if k == 0 {
        return Ok(ring.one());
    }
    if let Some(v) = memo.get(&(lambda.clone(), k)) {
        return Ok(v.clone());
    }
    let p = br.params().clone();
    let x = &xs.0[k - 1];
    let bx = b.mul(x);
    let mut acc = ring.zero();
    for mu in horizontal_strips_below(lambda) {
        if mu.len() >= k {
            continue;
        }
        let rest = r_rec(br, ring, &mu, xs, k - 1, b, memo)?;
        if rest.is_zero() {
            continue;
        }
        let mut h = qt_pochhammer(ring, &bx.mul(&p.t.inv()), &mu, &p)?;
        h.mul(&qt_pochhammer(ring, &bx, lambda, &p)?.inv())?;
        let skew = br.eval_skew(ring, Family::P, lambda, &mu, &Alphabet::new(alloc::vec![x.clone()]))?;
        acc = acc.add(&h.expand(ring)?.mul(&skew)?.mul(&rest)?)?;
    }
    memo.insert((lambda.clone(), k), acc.clone());
    Ok(acc)
}

/// `t^{n(λ)} (t^n;q,t)_λ / ((b t^{n-1};q,t)_λ c_λ)`.
fn r_closed(ring: &Ring, lambda: &Partition, n: u32, b: &Term, p: &Params) -> Result<HookProduct> {
    let mut h = qt_pochhammer(ring, &p.t.pow(n as i32), lambda, p)?;
    h.mul(&qt_pochhammer(ring, &b.mul(&p.t.pow(n as i32 - 1)), lambda, p)?.inv())?;
    h.mul(&hook_c(ring, lambda, p)?.inv())?;
    h.mul_term(&p.t.pow(lambda.n_stat() as i32));
    Ok(h)
}

fn q_gauss(w: &Windows) -> Result<Vec<Pair>> {
    let ring = uvw_ring(w);
    let p = Params::standard(&ring);
    let [u, v, wv] = [Var::U, Var::V, Var::Wv].map(|x| var(&ring, x));
    let uvw = u.mul(&v).mul(&wv);
    let shapes = partitions_up_to(w.extra_deg as u32);
    let mut out = Vec::new();
    for n in 1..=w.size {
        let xs = Alphabet::geometric(&p.t, n as usize);
        let mut br = Branching::new(p.clone());
        let mut gauss = ring.zero();
        let mut bounded = ring.zero();
        for lambda in shapes.iter().filter(|l| l.len() <= n as usize) {
            let r = r_function(&mut br, &ring, lambda, &xs, &uvw)?;
            let closed = r_closed(&ring, lambda, n, &uvw, &p)?;
            out.push(Pair::new(format!("n = {}, R_{} branching = closed form", n, lambda), r.clone(), closed.expand(&ring)?));

            let mut c = qt_pochhammer(&ring, &u, lambda, &p)?;
            c.mul(&qt_pochhammer(&ring, &v, lambda, &p)?)?;
            c.mul(&hook_cprime(&ring, lambda, &p)?.inv())?;
            c.mul_term(&p.t.pow(lambda.n_stat() as i32).mul(&wv.pow(lambda.size() as i32)));
            gauss = gauss.add(&c.expand(&ring)?.mul(&r)?)?;

            c.mul(&closed)?;
            bounded = bounded.add(&c.expand(&ring)?)?;
        }
        let mut nums = Vec::new();
        let mut dens = Vec::new();
        for i in 0..n as i32 {
            let ti = p.t.pow(i);
            nums.extend([u.mul(&wv).mul(&ti), v.mul(&wv).mul(&ti)]);
            dens.extend([wv.mul(&ti), uvw.mul(&ti)]);
        }
        let rhs = poch_ratio(&ring, &nums, &dens, &[p.q.clone()])?;
        out.push(Pair::new(format!("n = {}, q-Gauss sum with branching R", n), gauss, rhs.clone()));
        out.push(Pair::new(format!("n = {}, bounded flop sum", n), bounded, rhs));
    }
    Ok(out)
}
