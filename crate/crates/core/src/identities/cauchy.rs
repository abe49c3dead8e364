//! Cauchy-type kernels in two formal variables `x_1, x_2` and `y_1, y_2`,
//! the binomial theorem, the q-exponential sum and the fourfold skew sum.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::util::{letters, mono, poch_hook, poch_ratio, t_pow, times, var};
use super::{IdentityEntry, Pair, Status, Windows};
use crate::error::Result;
use crate::exactnum::{MultiSeries, Rational, Ring, Term, Var};
use crate::hooks::{hook_b, hook_cprime, qt_pochhammer, Params};
use crate::macdonald::{skew_q_principal, skew_q_rho, Alphabet, Branching, Family};
use crate::partitions::{partitions_up_to, Partition};

const N: u8 = 2;

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![
        IdentityEntry {
            id: "km-binomial",
            statement: "Σ_λ t^{n(λ)} (a;q,t)_λ P_λ(x;q,t)/c'_λ(q,t) = Π_i (ax_i;q)_∞/(x_i;q)_∞, two variables",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 0),
            build: km_binomial,
        },
        IdentityEntry {
            id: "cauchy",
            statement: "Σ_λ P_λ(x;q,t) Q_λ(y;q,t) = Π_{i,j} (tx_iy_j;q)_∞/(x_iy_j;q)_∞, two variables each",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 0),
            build: cauchy,
        },
        IdentityEntry {
            id: "cauchy-skew",
            statement: "Σ_λ P_{λ/ν}(x) Q_{λ/τ}(y) = Π_{i,j} (tx_iy_j;q)_∞/(x_iy_j;q)_∞ Σ_λ P_{τ/λ}(x) Q_{ν/λ}(y), all |ν|,|τ| ≤ size",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 2),
            build: cauchy_skew,
        },
        IdentityEntry {
            id: "cauchy-dual",
            statement: "Σ_μ T^|μ| P_μ(x;q,t) P_μ'(y;t,q) = Π_{i,j} (1+Tx_iy_j), two variables each",
            status: Status::Theorem,
            windows: Windows::new(4, 4, 0, 3, 0),
            build: cauchy_dual,
        },
        IdentityEntry {
            id: "doublesum",
            statement: "Σ_{λ,ν} T^|λ| P_{λ/ν}(x;q,t) Q_{λ/ν}(y;q,t) = 1/(T;T)_∞ Π_{i,j} (tTx_iy_j;q,T)_∞/(Tx_iy_j;q,T)_∞",
            status: Status::Theorem,
            windows: Windows::new(3, 4, 0, 3, 0),
            build: doublesum,
        },
        IdentityEntry {
            id: "q-exponential",
            statement: "Σ_λ (-1)^|λ| q^{n(λ')} P_λ(x;q,t)/c'_λ(q,t) = Π_i (x_i;q)_∞, two variables",
            status: Status::Theorem,
            windows: Windows::new(0, 4, 0, 3, 0),
            build: q_exponential,
        },
        IdentityEntry {
            id: "prod-log",
            statement: "Π_{i,j} (tTx_iy_j;q)_∞/(Tx_iy_j;q)_∞ = exp(Σ_r T^r/r (1-t^r)/(1-q^r) p_r(x) p_r(y))",
            status: Status::Theorem,
            windows: Windows::new(3, 4, 0, 3, 0),
            build: prod_log,
        },
        IdentityEntry {
            id: "fourfold",
            statement: "Σ T^|λ| b_ν(q,t) b_τ(t,q) Q_{λ/ν}(at^ρ;q,t) Q_{λ'/τ}(bq^ρ;t,q) Q_{μ/ν}(ct^ρ;q,t) Q_{μ'/τ}(dq^ρ;t,q) \
                        = (-abT,-cd;q,t,T)_∞/((T;T)_∞ (acT,bdT;q,t,T)_∞); and the form in a,b,c,d with base abcd",
            status: Status::Theorem,
            windows: Windows::new(3, 4, 0, 3, 0),
            build: fourfold,
        },
    ]
}

fn xy_ring(w: &Windows) -> Ring {
    let mut r = Ring::new().trunc(Var::Q, w.qt_deg).trunc(Var::T, w.qt_deg);
    for i in 1..=N {
        r = r.trunc(Var::X(i), w.extra_deg).trunc(Var::Y(i), w.extra_deg);
    }
    r
}

fn xy(ring: &Ring) -> (Alphabet, Alphabet) {
    (letters(ring, Var::X, N), letters(ring, Var::Y, N))
}

/// Partitions that can be nonzero in `N` variables with total degree at
/// most `N * extra_deg` above `|base|`.
fn shapes(w: &Windows, extra: u32) -> Vec<Partition> {
    partitions_up_to(N as u32 * w.extra_deg as u32 + extra)
}

/// `Π_{i,j} (c x_i y_j; bases)_∞ / (x_i y_j c'; bases)_∞` with numerator
/// scale `num` and denominator scale `den`.
fn kernel(ring: &Ring, num: &Term, den: &Term, bases: &[Term]) -> Result<MultiSeries> {
    let (x, y) = xy(ring);
    let mut nums = Vec::new();
    let mut dens = Vec::new();
    for a in &x.0 {
        for b in &y.0 {
            nums.push(a.mul(b).mul(num));
            dens.push(a.mul(b).mul(den));
        }
    }
    poch_ratio(ring, &nums, &dens, bases)
}

fn km_binomial(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new()
        .trunc(Var::Q, w.qt_deg)
        .trunc(Var::T, w.qt_deg)
        .trunc(Var::A, w.extra_deg)
        .trunc(Var::X(1), w.extra_deg)
        .trunc(Var::X(2), w.extra_deg);
    let p = Params::standard(&ring);
    let a = var(&ring, Var::A);
    let x = letters(&ring, Var::X, N);
    let mut br = Branching::new(p.clone());
    let mut lhs = ring.zero();
    for lambda in shapes(w, 0).iter().filter(|l| l.len() <= N as usize) {
        let mut h = qt_pochhammer(&ring, &a, lambda, &p)?;
        h.mul(&hook_cprime(&ring, lambda, &p)?.inv())?;
        h.mul_term(&p.t.pow(lambda.n_stat() as i32));
        lhs = lhs.add(&h.expand(&ring)?.mul(&br.eval_p(&ring, lambda, &x)?)?)?;
    }
    let nums: Vec<Term> = x.0.iter().map(|xi| xi.mul(&a)).collect();
    let rhs = poch_ratio(&ring, &nums, &x.0, &[p.q.clone()])?;
    Ok(alloc::vec![Pair::new("two variables", lhs, rhs)])
}

fn cauchy(w: &Windows) -> Result<Vec<Pair>> {
    let ring = xy_ring(w);
    let p = Params::standard(&ring);
    let (x, y) = xy(&ring);
    let mut br = Branching::new(p.clone());
    let mut lhs = ring.zero();
    for lambda in shapes(w, 0).iter().filter(|l| l.len() <= N as usize) {
        lhs = lhs.add(&br.eval_p(&ring, lambda, &x)?.mul(&br.eval_q(&ring, lambda, &y)?)?)?;
    }
    let rhs = kernel(&ring, &p.t, &Term::one(), &[p.q.clone()])?;
    Ok(alloc::vec![Pair::new("two variables each", lhs, rhs)])
}

fn cauchy_skew(w: &Windows) -> Result<Vec<Pair>> {
    let ring = xy_ring(w);
    let p = Params::standard(&ring);
    let (x, y) = xy(&ring);
    let mut br = Branching::new(p.clone());
    let k = kernel(&ring, &p.t, &Term::one(), &[p.q.clone()])?;
    let small = partitions_up_to(w.size);
    let mut out = Vec::new();
    for nu in &small {
        for tau in &small {
            let mut lhs = ring.zero();
            for lambda in shapes(w, w.size).iter().filter(|l| l.contains(nu) && l.contains(tau)) {
                let a = br.eval_skew(&ring, Family::P, lambda, nu, &x)?;
                if a.is_zero() {
                    continue;
                }
                lhs = lhs.add(&a.mul(&br.eval_skew(&ring, Family::Q, lambda, tau, &y)?)?)?;
            }
            let mut inner = ring.zero();
            for lambda in small.iter().filter(|l| nu.contains(l) && tau.contains(l)) {
                let a = br.eval_skew(&ring, Family::P, tau, lambda, &x)?;
                inner = inner.add(&a.mul(&br.eval_skew(&ring, Family::Q, nu, lambda, &y)?)?)?;
            }
            out.push(Pair::new(format!("ν = {}, τ = {}", nu, tau), lhs, k.mul(&inner)?));
        }
    }
    Ok(out)
}

fn cauchy_dual(w: &Windows) -> Result<Vec<Pair>> {
    let ring = xy_ring(w).trunc(Var::Tg, w.tmax as i32);
    let p = Params::standard(&ring);
    let (x, y) = xy(&ring);
    let mut br = Branching::new(p.clone());
    let mut bs = Branching::new(p.swap());
    let mut lhs = ring.zero();
    for mu in partitions_up_to(w.tmax).iter().filter(|m| m.len() <= N as usize && m.part(1) <= N as u32) {
        let f = br.eval_p(&ring, mu, &x)?.mul(&bs.eval_p(&ring, &mu.conjugate(), &y)?)?;
        lhs = lhs.add(&times(&f, &t_pow(&ring, mu.size() as i32))?)?;
    }
    let mut rhs = ring.one();
    for a in &x.0 {
        for b in &y.0 {
            let m = a.mul(b).mul(&t_pow(&ring, 1));
            rhs = rhs.add(&times(&rhs, &m)?)?;
        }
    }
    Ok(alloc::vec![Pair::new("two variables each", lhs, rhs)])
}

fn doublesum(w: &Windows) -> Result<Vec<Pair>> {
    let ring = xy_ring(w).trunc(Var::Tg, w.tmax as i32);
    let p = Params::standard(&ring);
    let (x, y) = xy(&ring);
    let mut br = Branching::new(p.clone());
    let mut lhs = ring.zero();
    for lambda in partitions_up_to(w.tmax) {
        for nu in partitions_up_to(lambda.size()).iter().filter(|n| lambda.contains(n)) {
            let a = br.eval_skew(&ring, Family::P, &lambda, nu, &x)?;
            if a.is_zero() {
                continue;
            }
            let f = a.mul(&br.eval_skew(&ring, Family::Q, &lambda, nu, &y)?)?;
            lhs = lhs.add(&times(&f, &t_pow(&ring, lambda.size() as i32))?)?;
        }
    }
    let tg = t_pow(&ring, 1);
    let k = kernel(&ring, &p.t.mul(&tg), &tg, &[p.q.clone(), tg.clone()])?;
    let rhs = k.mul(&poch_ratio(&ring, &[], &[tg.clone()], &[tg])?)?;
    Ok(alloc::vec![Pair::new("two variables each", lhs, rhs)])
}

fn q_exponential(w: &Windows) -> Result<Vec<Pair>> {
    let ring = Ring::new()
        .trunc(Var::Q, w.qt_deg)
        .trunc(Var::T, w.qt_deg)
        .trunc(Var::X(1), w.extra_deg)
        .trunc(Var::X(2), w.extra_deg);
    let p = Params::standard(&ring);
    let x = letters(&ring, Var::X, N);
    let mut br = Branching::new(p.clone());
    let mut lhs = ring.zero();
    for lambda in shapes(w, 0).iter().filter(|l| l.len() <= N as usize) {
        let mut h = hook_cprime(&ring, lambda, &p)?.inv();
        let sign = if lambda.size() % 2 == 0 { 1 } else { -1 };
        h.mul_term(&p.q.pow(lambda.conjugate().n_stat() as i32).mul(&Term::constant(Rational::int(sign))));
        lhs = lhs.add(&h.expand(&ring)?.mul(&br.eval_p(&ring, lambda, &x)?)?)?;
    }
    let rhs = poch_ratio(&ring, &x.0, &[], &[p.q.clone()])?;
    Ok(alloc::vec![Pair::new("two variables", lhs, rhs)])
}

fn prod_log(w: &Windows) -> Result<Vec<Pair>> {
    let ring = xy_ring(w).trunc(Var::Tg, w.tmax as i32);
    let p = Params::standard(&ring);
    let (x, y) = xy(&ring);
    let tg = t_pow(&ring, 1);
    let mut nums = Vec::new();
    let mut dens = Vec::new();
    for a in &x.0 {
        for b in &y.0 {
            nums.push(a.mul(b).mul(&tg).mul(&p.t));
            dens.push(a.mul(b).mul(&tg));
        }
    }
    let lhs = poch_hook(&ring, &nums, &dens, &[p.q.clone()])?.expand(&ring)?;
    let power_sum = |alpha: &Alphabet, r: i32| -> Result<MultiSeries> {
        let mut s = ring.zero();
        for a in &alpha.0 {
            s = s.add(&ring.constant(Rational::ONE).mul_term(&a.pow(r).c, &a.pow(r).m)?)?;
        }
        Ok(s)
    };
    let mut log = ring.zero();
    for r in 1..=w.tmax as i32 {
        let pre = t_pow(&ring, r).mul(&Term::constant(Rational::new(1, r as i64)));
        let f = power_sum(&x, r)?.mul(&power_sum(&y, r)?)?.mul_one_minus(&Rational::ONE, &p.t.pow(r).m)?;
        let f = f.div_one_minus(&Rational::ONE, &p.q.pow(r).m)?;
        log = log.add(&times(&f, &pre)?)?;
    }
    Ok(alloc::vec![Pair::new("two variables each", lhs, log.exp()?)])
}

type SkewTable = HashMap<(Partition, Partition), MultiSeries>;

/// `b_ν(q,t)` for every `ν` that appears, as series.
fn b_table(ring: &Ring, p: &Params, parts: &[Partition]) -> Result<HashMap<Partition, MultiSeries>> {
    let mut out = HashMap::new();
    for nu in parts {
        out.insert(nu.clone(), hook_b(ring, nu, p)?.expand(ring)?);
    }
    Ok(out)
}

/// All `Q_{λ/ν}(a t^ρ)` with `|λ| <= n`, keyed by `(λ, ν)`.
fn skew_table(br: &mut Branching, ring: &Ring, n: u32, a: Option<&Term>) -> Result<SkewTable> {
    let mut out = HashMap::new();
    for lambda in partitions_up_to(n) {
        for nu in partitions_up_to(lambda.size()).into_iter().filter(|m| lambda.contains(m)) {
            let v = match a {
                Some(a) => skew_q_principal(br, ring, &lambda, &nu, a)?,
                None => skew_q_rho(br, ring, &lambda, &nu)?,
            };
            out.insert((lambda.clone(), nu), v);
        }
    }
    Ok(out)
}

fn fourfold(w: &Windows) -> Result<Vec<Pair>> {
    Ok(alloc::vec![fourfold_b(w)?, fourfold_symmetric(w)?])
}

fn fourfold_ring(w: &Windows) -> Ring {
    Ring::new()
        .trunc(Var::Q, w.qt_deg)
        .trunc(Var::T, w.qt_deg)
        .trunc(Var::A, w.extra_deg)
        .trunc(Var::B, w.extra_deg)
        .trunc(Var::C, w.extra_deg)
        .trunc(Var::D, w.extra_deg)
}

// Σ over λ ⊇ ν, μ ⊇ ν, λ' ⊇ τ, μ' ⊇ τ of the four skew factors times
// `weight(λ, μ, ν, τ)`
#[allow(clippy::too_many_arguments)]
fn fourfold_sum(
    ring: &Ring,
    lambdas: &[Partition],
    mus: &[Partition],
    qa: &SkewTable,
    qb: &SkewTable,
    qc: &SkewTable,
    qd: &SkewTable,
    weight: impl Fn(&Partition, &Partition, &Partition, &Partition) -> Term,
) -> Result<MultiSeries> {
    let p = Params::standard(ring);
    let nus: Vec<Partition> = partitions_up_to(lambdas.iter().map(|l| l.size()).max().unwrap_or(0));
    let bq = b_table(ring, &p, &nus)?;
    let bt = b_table(ring, &p.swap(), &nus)?;
    let mut acc = ring.zero();
    for lambda in lambdas {
        let lc = lambda.conjugate();
        for mu in mus {
            let mc = mu.conjugate();
            for nu in nus.iter().filter(|n| lambda.contains(n) && mu.contains(n)) {
                let left = qa[&(lambda.clone(), nu.clone())].mul(&qc[&(mu.clone(), nu.clone())])?.mul(&bq[nu])?;
                if left.is_zero() {
                    continue;
                }
                for tau in nus.iter().filter(|t| lc.contains(t) && mc.contains(t)) {
                    let right = qb[&(lc.clone(), tau.clone())].mul(&qd[&(mc.clone(), tau.clone())])?.mul(&bt[tau])?;
                    acc = acc.add(&times(&left.mul(&right)?, &weight(lambda, mu, nu, tau))?)?;
                }
            }
        }
    }
    Ok(acc)
}

fn fourfold_b(w: &Windows) -> Result<Pair> {
    let ring = fourfold_ring(w).trunc(Var::Tg, w.tmax as i32);
    let p = Params::standard(&ring);
    let [a, b, c, d] = [Var::A, Var::B, Var::C, Var::D].map(|v| var(&ring, v));
    let k = w.tmax;
    // μ is bounded by the c and d degrees: |μ/ν| <= extra and |ν| <= |λ| <= k
    let mu_max = k + w.extra_deg as u32;
    let mut br = Branching::new(p.clone());
    let mut bs = Branching::new(p.swap());
    let qa = skew_table(&mut br, &ring, k, Some(&a))?;
    let qc = skew_table(&mut br, &ring, mu_max, Some(&c))?;
    let qb = skew_table(&mut bs, &ring, k, Some(&b))?;
    let qd = skew_table(&mut bs, &ring, mu_max, Some(&d))?;
    let lambdas = partitions_up_to(k);
    let mus = partitions_up_to(mu_max);
    let lhs = fourfold_sum(&ring, &lambdas, &mus, &qa, &qb, &qc, &qd, |l, _, _, _| t_pow(&ring, l.size() as i32))?;
    let tg = t_pow(&ring, 1);
    let minus = Term::constant(Rational::int(-1));
    let num = [a.mul(&b).mul(&tg).mul(&minus), c.mul(&d).mul(&minus)];
    let den = [a.mul(&c).mul(&tg), b.mul(&d).mul(&tg)];
    let rhs = poch_ratio(&ring, &num, &den, &[p.q.clone(), p.t.clone(), tg.clone()])?
        .mul(&poch_ratio(&ring, &[], &[tg.clone()], &[tg])?)?;
    Ok(Pair::new("T-graded form", lhs, rhs))
}

fn fourfold_symmetric(w: &Windows) -> Result<Pair> {
    let ring = fourfold_ring(w);
    let p = Params::standard(&ring);
    let n = w.extra_deg as u32;
    let mut br = Branching::new(p.clone());
    let mut bs = Branching::new(p.swap());
    let qt = skew_table(&mut br, &ring, n, None)?;
    let qq = skew_table(&mut bs, &ring, n, None)?;
    let shapes = partitions_up_to(n);
    let lhs = fourfold_sum(&ring, &shapes, &shapes, &qt, &qq, &qt, &qq, |l, m, nu, tau| {
        let e = [l, m, nu, tau].map(|x| x.size() as i32);
        mono(&ring, &[(Var::A, e[0]), (Var::B, e[1]), (Var::C, e[2]), (Var::D, e[3])])
    })?;
    let [a, b, c, d] = [Var::A, Var::B, Var::C, Var::D].map(|v| var(&ring, v));
    let abcd = a.mul(&b).mul(&c).mul(&d);
    let minus = Term::constant(Rational::int(-1));
    let rhs = poch_ratio(
        &ring,
        &[a.mul(&minus), b.mul(&minus)],
        &[a.mul(&b).mul(&c), a.mul(&b).mul(&d)],
        &[p.q.clone(), p.t.clone(), abcd.clone()],
    )?
    .mul(&poch_ratio(&ring, &[], &[abcd.clone()], &[abcd])?)?;
    Ok(Pair::new("symmetric form", lhs, rhs))
}
