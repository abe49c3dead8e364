//! Brute-force Macdonald polynomials by Gram-Schmidt in the monomial basis,
//! orthogonalized for the q,t-deformed Hall scalar product. Slow; only
//! used to validate the branching evaluator.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Alphabet, Branching};
use crate::error::Result;
use crate::exactnum::{factorial, MultiSeries, Rational, Ring, Term, Var};
use crate::hooks::{hook_b, HookProduct, Params};
use crate::report::Report;
use crate::partitions::{partitions_of, Partition};

/// `p_ρ = Σ_μ L[ρ][μ] m_μ` for all `ρ, μ ⊢ n`, by expanding in `n` variables.
pub fn power_to_monomial(n: u32) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions_of(n);
    let nv = n as usize;
    let mut rows = Vec::new();
    for rho in &parts {
        let mut poly: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        poly.insert(vec![0; nv], 1);
        for &r in rho.parts() {
            let mut next = BTreeMap::new();
            for (e, c) in &poly {
                for i in 0..nv {
                    let mut e2 = e.clone();
                    e2[i] += r;
                    *next.entry(e2).or_insert(0) += c;
                }
            }
            poly = next;
        }
        let row = parts
            .iter()
            .map(|mu| {
                let mut e: Vec<u32> = mu.parts().to_vec();
                e.resize(nv, 0);
                poly.get(&e).copied().unwrap_or(0)
            })
            .collect();
        rows.push(row);
    }
    (parts, rows)
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular matrix");
        m.swap(col, piv);
        let inv = m[col][col].recip().unwrap();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let v = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - &v;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `z_ρ = Π i^{m_i} m_i!`.
pub fn z(rho: &Partition) -> Rational {
    let mut out = Rational::ONE;
    let mut counts = BTreeMap::new();
    for &r in rho.parts() {
        *counts.entry(r).or_insert(0u32) += 1;
        out = &out * &Rational::int(r as i64);
    }
    for (_, m) in counts {
        out = &out * &factorial(m);
    }
    out
}

/// The q,t Hall product on degree `n`, expressed as the Gram matrix of the
/// monomial basis, together with the partition order used for indices.
pub fn monomial_gram(ring: &Ring, p: &Params, n: u32) -> (Vec<Partition>, Vec<Vec<MultiSeries>>) {
    let (parts, l) = power_to_monomial(n);
    let lr: Vec<Vec<Rational>> = l.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect();
    // m_μ = Σ_ρ k[μ][ρ] p_ρ with k the inverse of l
    let k = invert(&lr);
    let w: Vec<MultiSeries> = parts
        .iter()
        .map(|rho| {
            let mut h = HookProduct::new(ring);
            for &r in rho.parts() {
                h.push_one_minus(&p.q.pow(r as i32), 1).unwrap();
                h.push_one_minus(&p.t.pow(r as i32), -1).unwrap();
            }
            h.expand(ring).unwrap().scale(&z(rho))
        })
        .collect();
    let np = parts.len();
    let mut g = vec![vec![ring.zero(); np]; np];
    for a in 0..np {
        for b in 0..np {
            let mut acc = ring.zero();
            for r in 0..np {
                let c = &k[a][r] * &k[b][r];
                if !c.is_zero() {
                    acc = acc.add(&w[r].scale(&c)).unwrap();
                }
            }
            g[a][b] = acc;
        }
    }
    (parts, g)
}

pub fn inner(g: &[Vec<MultiSeries>], f: &[MultiSeries], h: &[MultiSeries]) -> MultiSeries {
    let mut acc = f[0].ring().zero();
    for (a, fa) in f.iter().enumerate() {
        if fa.is_zero() {
            continue;
        }
        for (b, hb) in h.iter().enumerate() {
            if hb.is_zero() {
                continue;
            }
            acc = acc.add(&fa.mul(hb).unwrap().mul(&g[a][b]).unwrap()).unwrap();
        }
    }
    acc
}

/// `P_λ` for all `λ ⊢ n` as coefficient vectors in the monomial basis,
/// indexed like the returned partition list.
pub fn gram_schmidt(ring: &Ring, p: &Params, n: u32) -> (Vec<Partition>, Vec<Vec<MultiSeries>>, Vec<Vec<MultiSeries>>) {
    let (parts, g) = monomial_gram(ring, p, n);
    // partitions_of lists in decreasing lex order; orthogonalize from the bottom
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by(|&a, &b| parts[a].cmp(&parts[b]));
    let np = parts.len();
    let mut basis: Vec<Vec<MultiSeries>> = vec![Vec::new(); np];
    for (pos, &i) in order.iter().enumerate() {
        let mut v: Vec<MultiSeries> = (0..np).map(|j| if j == i { ring.one() } else { ring.zero() }).collect();
        let mi = v.clone();
        for &j in &order[..pos] {
            let pj = &basis[j];
            let c = inner(&g, &mi, pj).div(&inner(&g, pj, pj)).unwrap();
            for (x, y) in v.iter_mut().zip(pj) {
                *x = x.sub(&y.mul(&c).unwrap()).unwrap();
            }
        }
        basis[i] = v;
    }
    (parts, basis, g)
}

/// A symmetric function in the power-sum basis with series coefficients.
pub type PowerSum = BTreeMap<Partition, MultiSeries>;

/// `P_κ` for `κ ⊢ n` in the power-sum basis.
pub fn p_in_power_sums(ring: &Ring, p: &Params, n: u32) -> Vec<(Partition, PowerSum)> {
    let (parts, basis, _) = gram_schmidt(ring, p, n);
    let (_, l) = power_to_monomial(n);
    let lr: Vec<Vec<Rational>> = l.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect();
    let k = invert(&lr);
    parts
        .iter()
        .enumerate()
        .map(|(i, kappa)| {
            let mut f = PowerSum::new();
            for (r, rho) in parts.iter().enumerate() {
                let mut c = ring.zero();
                for (m, u) in basis[i].iter().enumerate() {
                    if !k[m][r].is_zero() {
                        c = c.add(&u.scale(&k[m][r])).unwrap();
                    }
                }
                if !c.is_zero() {
                    f.insert(rho.clone(), c);
                }
            }
            (kappa.clone(), f)
        })
        .collect()
}

pub fn power_product(f: &PowerSum, g: &PowerSum) -> PowerSum {
    let mut out = PowerSum::new();
    for (a, x) in f {
        for (b, y) in g {
            let mut parts = a.parts().to_vec();
            parts.extend_from_slice(b.parts());
            let key = Partition::new(&parts);
            let v = x.mul(y).unwrap();
            let e = out.remove(&key);
            out.insert(key, match e {
                Some(old) => old.add(&v).unwrap(),
                None => v,
            });
        }
    }
    out
}

pub fn power_inner(ring: &Ring, p: &Params, f: &PowerSum, g: &PowerSum) -> MultiSeries {
    let mut acc = ring.zero();
    for (rho, x) in f {
        if let Some(y) = g.get(rho) {
            let mut h = HookProduct::new(ring);
            for &r in rho.parts() {
                h.push_one_minus(&p.q.pow(r as i32), 1).unwrap();
                h.push_one_minus(&p.t.pow(r as i32), -1).unwrap();
            }
            let w = h.expand(ring).unwrap().scale(&z(rho));
            acc = acc.add(&x.mul(y).unwrap().mul(&w).unwrap()).unwrap();
        }
    }
    acc
}

/// `P_{λ/μ} = Σ_ν <P_λ, Q_μ Q_ν> P_ν` in the power-sum basis.
pub fn skew_p_in_power_sums(ring: &Ring, p: &Params, lambda: &Partition, mu: &Partition) -> PowerSum {
    let find = |k: &Partition| -> PowerSum {
        if k.is_empty() {
            let mut one = PowerSum::new();
            one.insert(Partition::empty(), ring.one());
            return one;
        }
        p_in_power_sums(ring, p, k.size()).into_iter().find(|(x, _)| x == k).unwrap().1
    };
    let q_of = |k: &Partition| -> PowerSum {
        let b = crate::hooks::hook_b(ring, k, p).unwrap().expand(ring).unwrap();
        find(k).into_iter().map(|(r, c)| (r, c.mul(&b).unwrap())).collect()
    };
    let pl = find(lambda);
    let qm = q_of(mu);
    let mut out = PowerSum::new();
    let d = lambda.size() - mu.size();
    let nus = if d == 0 { vec![Partition::empty()] } else { partitions_of(d) };
    for nu in nus {
        let c = power_inner(ring, p, &pl, &power_product(&qm, &q_of(&nu)));
        if c.is_zero() {
            continue;
        }
        for (r, x) in find(&nu) {
            let v = x.mul(&c).unwrap();
            let e = out.remove(&r);
            out.insert(r, match e {
                Some(old) => old.add(&v).unwrap(),
                None => v,
            });
        }
    }
    out
}

/// Checks every coefficient of `P_λ(x_1..x_n)` and `Q_λ(x_1..x_n)` from the
/// branching evaluator against the Gram-Schmidt basis, for `|λ| = n ≤
/// max_size` and `q, t` truncated at `d`. This covers `ψ` and `φ`, since
/// the evaluator is their iterated sum.
pub fn gram_schmidt_oracle(max_size: u32, d: i32) -> Result<Report> {
    let mut rep = Report::new("Gram-Schmidt oracle");
    let qt = Ring::new().trunc(Var::Q, d).trunc(Var::T, d);
    let pr = Params::standard(&qt);
    for n in 1..=max_size {
        let (parts, basis, _) = gram_schmidt(&qt, &pr, n);
        let mut ring = qt.clone();
        for i in 1..=n as u8 {
            ring = ring.laurent(Var::X(i), 0, n as i32);
        }
        let alpha = Alphabet::new((1..=n as u8).map(|i| Term::mono(ring.mono(&[(Var::X(i), 1)]))).collect());
        let mut br = Branching::new(Params::standard(&ring));
        for (i, lambda) in parts.iter().enumerate() {
            let ev = br.eval_p(&ring, lambda, &alpha)?;
            let evq = br.eval_q(&ring, lambda, &alpha)?;
            let b = hook_b(&qt, lambda, &pr)?.expand(&qt)?;
            for (j, mu) in parts.iter().enumerate() {
                let mut p_coef = ev.clone();
                let mut q_coef = evq.clone();
                for k in 1..=n as usize {
                    let e = mu.part(k) as i32;
                    p_coef = p_coef.extract(Var::X(k as u8), e)?;
                    q_coef = q_coef.extract(Var::X(k as u8), e)?;
                }
                rep.compare(&alloc::format!("P_{} at m_{}", lambda, mu), &p_coef, &basis[i][j], &[])?;
                rep.compare(&alloc::format!("Q_{} at m_{}", lambda, mu), &q_coef, &basis[i][j].mul(&b)?, &[])?;
            }
        }
    }
    Ok(rep)
}
