//! Interpolation Macdonald polynomials at exact rational `(q, t)`, solved
//! from their vanishing conditions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Branching;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Ring, Term, Var};
use crate::hooks::Params;
use crate::partitions::{partitions_bounded, Partition};

/// A polynomial in `n` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> SymPoly {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    /// The monomial symmetric polynomial `m_ν(x_1, ..., x_n)`.
    pub fn monomial(nu: &Partition, nvars: usize) -> SymPoly {
        let mut e: Vec<u32> = nu.parts().to_vec();
        e.resize(nvars, 0);
        e.sort_unstable();
        let mut out = SymPoly::zero(nvars);
        loop {
            out.terms.insert(e.clone(), Rational::ONE);
            if !next_permutation(&mut e) {
                break;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &SymPoly, c: &Rational) {
        for (e, v) in &other.terms {
            let s = &self.terms.get(e).cloned().unwrap_or(Rational::ZERO) + &(v * c);
            if s.is_zero() {
                self.terms.remove(e);
            } else {
                self.terms.insert(e.clone(), s);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// The homogeneous part of top degree.
    pub fn top(&self) -> SymPoly {
        let d = self.degree();
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        SymPoly { nvars: self.nvars, terms }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                v = &v * &xi.pow(k as i32).expect("zero to a nonnegative power");
            }
            acc = &acc + &v;
        }
        acc
    }

    /// `f(t x_1, ..., t x_{n-1}, 1)` as a polynomial in `n - 1` variables.
    pub fn restrict_scaled(&self, t: &Rational) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let head = e[..self.nvars - 1].to_vec();
            let d: u32 = head.iter().sum();
            let v = c * &t.pow(d as i32).unwrap();
            let mut single = SymPoly::zero(self.nvars - 1);
            single.terms.insert(head, Rational::ONE);
            out.add_scaled(&single, &v);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(q^{λ_i} t^{n-i})_i` at rational `q, t`.
pub fn grid_point(lambda: &Partition, n: usize, q: &Rational, t: &Rational) -> Vec<Rational> {
    (1..=n).map(|i| &q.pow(lambda.part(i) as i32).unwrap() * &t.pow((n - i) as i32).unwrap()).collect()
}

/// Solves `A x = b` exactly; `Error::Singular` if `A` is not invertible.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip().unwrap();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let v = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - &v;
                }
                let v = &b[col] * &f;
                b[r] = &b[r] - &v;
            }
        }
    }
    Ok(b)
}

/// `P*_μ(x_1, ..., x_n; q, t)` from vanishing at `q^λ t^{δ_n}` for
/// `|λ| ≤ |μ|, λ ≠ μ` and `[x^μ] = 1`.
pub fn interpolation_poly(mu: &Partition, n: usize, q: &Rational, t: &Rational) -> Result<SymPoly> {
    if mu.len() > n {
        return Err(Error::Domain(alloc::format!("{} has more than {} parts", mu, n)));
    }
    let basis: Vec<Partition> = (0..=mu.size()).flat_map(|k| partitions_bounded(k, k, n)).collect();
    let polys: Vec<SymPoly> = basis.iter().map(|nu| SymPoly::monomial(nu, n)).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for lam in &basis {
        if lam == mu {
            rows.push(basis.iter().map(|nu| if nu == mu { Rational::ONE } else { Rational::ZERO }).collect());
            rhs.push(Rational::ONE);
        } else {
            let x = grid_point(lam, n, q, t);
            rows.push(polys.iter().map(|p| p.eval(&x)).collect());
            rhs.push(Rational::ZERO);
        }
    }
    let c = solve(rows, rhs)?;
    let mut out = SymPoly::zero(n);
    for (p, ci) in polys.iter().zip(&c) {
        out.add_scaled(p, ci);
    }
    Ok(out)
}

/// `[λ, μ]_{q,t}` at rational `q, t` from interpolation polynomials in
/// `n = max(l(λ), l(μ), 1)` variables.
pub fn binomial_at(lambda: &Partition, mu: &Partition, q: &Rational, t: &Rational) -> Result<Rational> {
    let n = lambda.len().max(mu.len()).max(1);
    let f = interpolation_poly(mu, n, q, t)?;
    let den = f.eval(&grid_point(mu, n, q, t));
    Ok(&f.eval(&grid_point(lambda, n, q, t)) * &den.recip().ok_or(Error::Singular)?)
}

/// Outcome of the interpolation checks for one `(μ, n, q, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationReport {
    pub mu: Partition,
    pub n: usize,
    pub normalisation: bool,
    pub stability: bool,
    pub top_degree: bool,
    pub binomial: bool,
}

impl InterpolationReport {
    pub fn all(&self) -> bool {
        self.normalisation && self.stability && self.top_degree && self.binomial
    }
}

fn c_prime_at(mu: &Partition, q: &Rational, t: &Rational) -> Rational {
    let mut acc = Rational::ONE;
    for s in mu.all_cell_stats() {
        let v = &q.pow(s.arm + 1).unwrap() * &t.pow(s.leg).unwrap();
        acc = &acc * &(&Rational::ONE - &v);
    }
    acc
}

/// Builds `P*_μ` at `(q, t)` and checks its value at `q^μ t^{δ_n}`, the
/// stability under adding a variable, that its top-degree part is `P_μ`,
/// and the binomial theorem at a sampled point.
pub fn interpolation_spot_check(mu: &Partition, n: usize, q: &Rational, t: &Rational) -> Result<InterpolationReport> {
    let f = interpolation_poly(mu, n, q, t)?;
    let size = mu.size() as i32;

    let sign = if size % 2 == 0 { Rational::ONE } else { Rational::int(-1) };
    let pre = &(&sign * &q.pow(mu.conjugate().n_stat() as i32).unwrap())
        * &t.pow((n as i32 - 1) * size - 2 * mu.n_stat() as i32).unwrap();
    let normalisation = f.eval(&grid_point(mu, n, q, t)) == &pre * &c_prime_at(mu, q, t);

    let bigger = interpolation_poly(mu, n + 1, q, t)?;
    let stability = bigger.restrict_scaled(t) == f.scale(&t.pow(size).unwrap());

    let top_degree = f.top() == macdonald_p_at(mu, n, q, t)?;

    let binomial = binomial_theorem_holds(mu, n, q, t)?;

    Ok(InterpolationReport { mu: mu.clone(), n, normalisation, stability, top_degree, binomial })
}

/// `P_μ(x_1, ..., x_n; q, t)` at rational `(q, t)` through the branching
/// evaluator, read back as a polynomial.
pub fn macdonald_p_at(mu: &Partition, n: usize, q: &Rational, t: &Rational) -> Result<SymPoly> {
    let mut ring = Ring::new();
    for i in 1..=n {
        ring = ring.laurent(Var::X(i as u8), 0, mu.size() as i32);
    }
    let params = Params::new(Term::constant(q.clone()), Term::constant(t.clone()));
    let mut br = Branching::new(params);
    let xs = (1..=n).map(|i| Term::mono(ring.mono(&[(Var::X(i as u8), 1)]))).collect();
    let v = br.eval_p(&ring, mu, &super::Alphabet::new(xs))?;
    let mut out = SymPoly::zero(n);
    for (m, c) in v.terms() {
        out.terms.insert((0..n).map(|i| m.get(i) as u32).collect(), c.clone());
    }
    Ok(out)
}

fn binomial_theorem_holds(lambda: &Partition, n: usize, q: &Rational, t: &Rational) -> Result<bool> {
    let a = Rational::new(3, 5);
    let x: Vec<Rational> = (0..n).map(|i| Rational::new(2 * i as i64 + 1, 7)).collect();
    let (lhs, rhs) = binomial_theorem_sides(lambda, n, q, t, &a, &x)?;
    Ok(lhs == rhs)
}

/// Both sides of the binomial theorem for interpolation polynomials,
/// `Σ_ν a^{|ν|} [λ,ν]_{1/q,1/t} P*_λ(a t^{-δ})/P*_ν(a t^{-δ}) P*_ν(x; 1/q,1/t)`
/// and `P*_λ(a x)`, at a rational point.
pub fn binomial_theorem_sides(
    lambda: &Partition,
    n: usize,
    q: &Rational,
    t: &Rational,
    a: &Rational,
    x: &[Rational],
) -> Result<(Rational, Rational)> {
    let (qi, ti) = (q.recip().ok_or(Error::Singular)?, t.recip().ok_or(Error::Singular)?);
    let at: Vec<Rational> = (1..=n).map(|i| a * &ti.pow((n - i) as i32).unwrap()).collect();
    let fl = interpolation_poly(lambda, n, q, t)?;
    let fl_at = fl.eval(&at);
    let mut lhs = Rational::ZERO;
    for nu in crate::partitions::subpartitions(lambda) {
        let fnu = interpolation_poly(&nu, n, q, t)?;
        let gnu = interpolation_poly(&nu, n, &qi, &ti)?;
        let bin = &gnu.eval(&grid_point(lambda, n, &qi, &ti)) * &gnu.eval(&grid_point(&nu, n, &qi, &ti)).recip().ok_or(Error::Singular)?;
        let ratio = &fl_at * &fnu.eval(&at).recip().ok_or(Error::Singular)?;
        let term = &(&(&a.pow(nu.size() as i32).unwrap() * &bin) * &ratio) * &gnu.eval(x);
        lhs = &lhs + &term;
    }
    let ax: Vec<Rational> = x.iter().map(|xi| a * xi).collect();
    Ok((lhs, fl.eval(&ax)))
}
