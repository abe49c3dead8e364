//! Theta-function coefficient systems and the elliptic Nekrasov-Okounkov
//! product.
//!
//! `C` is read off the convention-free quotient
//! `(put₁⁻¹, pu⁻¹t₁, put₂⁻¹, pu⁻¹t₂; p)_∞ / (pt₁⁻¹, pt₁, pt₂⁻¹, pt₂; p)_∞`.
//! The coefficients `c` of `θ(ut₁⁻¹, u⁻¹t₂; p) / θ(t₁⁻¹, t₂; p)` depend on
//! how `1/(1-t₁⁻¹)` and `1/(1-t₂)` are expanded. We expand in descending
//! powers of `t₁` and ascending powers of `t₂`, so `c` is a power series in
//! `s = t₁⁻¹` and `t₂`; this is the region in which
//! `c(m,ℓ,n₁,n₂) = Σ_{i,j≥1} D(m,ℓ,n₁+i,n₂-j)` holds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::exactnum::{MultiSeries, Rational, Ring, Term, Var};
use crate::hooks::{elliptic_summand, push_theta, HookProduct, Params};
use crate::nekrasov::{fnm_ring, qtno_lhs, qtno_rhs};
use crate::partitions::partitions_up_to;
use crate::report::Report;

pub const CONVENTION: &str = "1/(1-t1^-1) expanded in descending t1, 1/(1-t2) in ascending t2";

/// Integer coefficients indexed by `(m, ℓ, n₁, n₂)`; zeros are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoeffTable {
    pub max_m: u32,
    entries: BTreeMap<(u32, i32, i32, i32), i64>,
}

impl CoeffTable {
    pub fn new(max_m: u32) -> CoeffTable {
        CoeffTable { max_m, entries: BTreeMap::new() }
    }

    pub fn get(&self, m: u32, l: i32, n1: i32, n2: i32) -> i64 {
        self.entries.get(&(m, l, n1, n2)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, key: (u32, i32, i32, i32), v: i64) {
        if v == 0 {
            return;
        }
        let e = self.entries.entry(key).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, i32, i32, i32), i64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Nonzero entries `((ℓ, n₁, n₂), value)` of one `m`.
    pub fn slice(&self, m: u32) -> impl Iterator<Item = ((i32, i32, i32), i64)> + '_ {
        self.entries.range((m, i32::MIN, i32::MIN, i32::MIN)..=(m, i32::MAX, i32::MAX, i32::MAX)).map(|(k, v)| ((k.1, k.2, k.3), *v))
    }

    /// One line `m l n1 n2 value` per nonzero entry, sorted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for ((m, l, n1, n2), v) in self.iter() {
            let _ = writeln!(s, "{} {} {} {} {}", m, l, n1, n2, v);
        }
        s
    }
}

fn integer(c: &Rational, what: &str) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::NonInteger(format!("{} = {}", what, c)));
    }
    c.to_i64().ok_or_else(|| Error::NonInteger(format!("{} = {} overflows", what, c)))
}

fn exps(f: &MultiSeries, vars: &[Var]) -> Result<Vec<usize>> {
    vars.iter()
        .map(|v| f.index(*v).ok_or_else(|| Error::Structural(format!("no variable {}", v))))
        .collect()
}

/// `C(m, ℓ, n₁, n₂)` for `m ≤ max_m`, from the quadruple Pochhammer quotient.
pub fn compute_big_c(max_m: u32) -> Result<CoeffTable> {
    let w = max_m as i32;
    let ring = Ring::new()
        .trunc(Var::P, w)
        .laurent(Var::U, -w, w)
        .laurent(Var::T1, -w, w)
        .laurent(Var::T2, -w, w);
    let x = |e: &[(Var, i32)]| Term::mono(ring.mono(e));
    let num = [
        x(&[(Var::P, 1), (Var::U, 1), (Var::T1, -1)]),
        x(&[(Var::P, 1), (Var::U, -1), (Var::T1, 1)]),
        x(&[(Var::P, 1), (Var::U, 1), (Var::T2, -1)]),
        x(&[(Var::P, 1), (Var::U, -1), (Var::T2, 1)]),
    ];
    let den = [
        x(&[(Var::P, 1), (Var::T1, -1)]),
        x(&[(Var::P, 1), (Var::T1, 1)]),
        x(&[(Var::P, 1), (Var::T2, -1)]),
        x(&[(Var::P, 1), (Var::T2, 1)]),
    ];
    let p = x(&[(Var::P, 1)]);
    let mut h = HookProduct::new(&ring);
    for j in 0..w {
        let pj = p.pow(j);
        for a in &num {
            h.push_one_minus(&a.mul(&pj), 1)?;
        }
        for a in &den {
            h.push_one_minus(&a.mul(&pj), -1)?;
        }
    }
    let f = h.expand(&ring)?;
    let ix = exps(&f, &[Var::P, Var::U, Var::T1, Var::T2])?;
    let mut table = CoeffTable::new(max_m);
    for (mono, c) in f.terms() {
        let k = (mono.get(ix[0]) as u32, mono.get(ix[1]), mono.get(ix[2]), mono.get(ix[3]));
        table.add(k, integer(c, &format!("C{:?}", k))?);
    }
    Ok(table)
}

/// Checks `C(0) = δ`, the support box `|ℓ|,|n₁|,|n₂| ≤ m` and both
/// symmetries on every slice.
pub fn check_big_c(table: &CoeffTable) -> Report {
    let mut rep = Report::new("C coefficients");
    let zero: Vec<_> = table.slice(0).collect();
    rep.push("C(0) = δ", zero == [((0, 0, 0), 1)], format!("{:?}", zero));
    for m in 0..=table.max_m {
        let mi = m as i32;
        let (mut boxed, mut swap, mut neg) = (true, true, true);
        for ((l, n1, n2), v) in table.slice(m) {
            boxed &= l.abs() <= mi && n1.abs() <= mi && n2.abs() <= mi;
            swap &= table.get(m, l, n2, n1) == v;
            neg &= table.get(m, -l, -n1, -n2) == v;
        }
        rep.push(&format!("m = {}: support in |ℓ|,|n1|,|n2| ≤ m", m), boxed, String::new());
        rep.push(&format!("m = {}: C(ℓ,n1,n2) = C(ℓ,n2,n1)", m), swap, String::new());
        rep.push(&format!("m = {}: C(ℓ,n1,n2) = C(-ℓ,-n1,-n2)", m), neg, String::new());
    }
    rep
}

/// `D(m,ℓ,n₁,n₂) = C(m,ℓ,n₁-1,n₂+1) + C(m,ℓ,n₁,n₂) - C(m,ℓ-1,n₁,n₂+1) - C(m,ℓ+1,n₁-1,n₂)`.
pub fn compute_d(big_c: &CoeffTable) -> CoeffTable {
    let mut d = CoeffTable::new(big_c.max_m);
    for ((m, l, n1, n2), v) in big_c.iter() {
        d.add((m, l, n1 + 1, n2 - 1), v);
        d.add((m, l, n1, n2), v);
        d.add((m, l + 1, n1, n2 - 1), -v);
        d.add((m, l - 1, n1 + 1, n2), -v);
    }
    d
}

/// `c(m,ℓ,n₁,n₂) = Σ_{i,j≥1} D(m,ℓ,n₁+i,n₂-j)`.
pub fn c_from_d(d: &CoeffTable, m: u32, l: i32, n1: i32, n2: i32) -> i64 {
    d.slice(m).filter(|((a, b, c), _)| *a == l && *b > n1 && *c < n2).map(|(_, v)| v).sum()
}

fn c_ring(max_m: u32, n: i32) -> Ring {
    let w = max_m as i32 + 1;
    Ring::new().trunc(Var::P, max_m as i32).laurent(Var::U, -w, w).trunc(Var::S, n).trunc(Var::T2, n)
}

// θ(us, u⁻¹t₂; p) / θ(s, t₂; p) with s = t₁⁻¹
fn c_series(max_m: u32, n: i32) -> Result<MultiSeries> {
    let ring = c_ring(max_m, n);
    let x = |e: &[(Var, i32)]| Term::mono(ring.mono(e));
    let mut h = HookProduct::new(&ring);
    push_theta(&mut h, &x(&[(Var::U, 1), (Var::S, 1)]), Var::P, 1)?;
    push_theta(&mut h, &x(&[(Var::U, -1), (Var::T2, 1)]), Var::P, 1)?;
    push_theta(&mut h, &x(&[(Var::S, 1)]), Var::P, -1)?;
    push_theta(&mut h, &x(&[(Var::T2, 1)]), Var::P, -1)?;
    h.expand(&ring)
}

/// `c(m, ℓ, n₁, n₂)` for `m ≤ max_m`, `-n₁ ≤ n` and `n₂ ≤ n`, expanded
/// directly from the theta quotient.
pub fn c_direct(max_m: u32, n: i32) -> Result<CoeffTable> {
    let f = c_series(max_m, n)?;
    let ix = exps(&f, &[Var::P, Var::U, Var::S, Var::T2])?;
    let mut table = CoeffTable::new(max_m);
    for (mono, c) in f.terms() {
        let k = (mono.get(ix[0]) as u32, mono.get(ix[1]), -mono.get(ix[2]), mono.get(ix[3]));
        if -k.2 <= n && k.3 <= n {
            table.add(k, integer(c, &format!("c{:?}", k))?);
        }
    }
    Ok(table)
}

/// Compares `c` from the `D` sum with the direct expansion for all
/// `m ≤ max_m` inside `-n₁ ≤ n`, `n₂ ≤ n`.
pub fn c_consistency(max_m: u32, n: i32) -> Result<Report> {
    let mut rep = Report::new("c from D");
    let d = compute_d(&compute_big_c(max_m)?);
    let direct = c_direct(max_m, n)?;
    for m in 0..=max_m {
        let mi = m as i32;
        let mut bad = Vec::new();
        let mut seen = 0;
        // c vanishes for n₁ > m or n₂ < -m, and ℓ stays within m + 1
        for l in -mi - 1..=mi + 1 {
            for n1 in -n..=mi + 1 {
                for n2 in -mi - 1..=n {
                    let (a, b) = (c_from_d(&d, m, l, n1, n2), direct.get(m, l, n1, n2));
                    seen += (a != 0) as usize;
                    if a != b && bad.len() < 3 {
                        bad.push(format!("({},{},{},{}): {} vs {}", m, l, n1, n2, a, b));
                    }
                }
            }
        }
        let total = direct.slice(m).count();
        rep.push(&format!("m = {}: {} nonzero values agree", m, seen), bad.is_empty() && seen == total, bad.join(", "));
    }
    Ok(rep)
}

/// The ring of the elliptic check: `q, t ≤ qt_deg`, `u` Laurent on
/// `[-u_window, u_window]`, `T ≤ k`, `p ≤ m`.
pub fn elliptic_ring(k: u32, m: u32, qt_deg: i32, u_window: i32) -> Ring {
    fnm_ring(qt_deg, k, u_window).trunc(Var::P, m as i32)
}

/// `Σ_{|λ| ≤ K} T^{|λ|} Π_s θ(uq^{a+1}t^l, u⁻¹q^a t^{l+1}; p) / θ(q^{a+1}t^l, q^a t^{l+1}; p)`.
pub fn elliptic_lhs(ring: &Ring) -> Result<MultiSeries> {
    let k = ring.cap(Var::Tg);
    let (u, p) = (Term::mono(ring.mono(&[(Var::U, 1)])), Params::standard(ring));
    let mut acc = ring.zero();
    for lambda in partitions_up_to(k.max(0) as u32) {
        let tl = ring.mono(&[(Var::Tg, lambda.size() as i32)]);
        let f = elliptic_summand(ring, &lambda, &u, &p, Var::P)?.expand(ring)?;
        acc = acc.add(&f.mul_term(&Rational::ONE, &tl)?)?;
    }
    Ok(acc)
}

/// `Π_{m≥0} Π_{i,j,k≥1} Π_{ℓ,n₁,n₂}` of
/// `((1-p^m T^k u^{ℓ+1} q^{i-n₁} t^{j+n₂-1}) (1-p^m T^k u^{ℓ-1} q^{i-n₁-1} t^{j+n₂})
/// / ((1-p^m T^k u^ℓ q^{i-n₁-1} t^{j+n₂-1}) (1-p^m T^k u^ℓ q^{i-n₁} t^{j+n₂})))^{C(km,ℓ,n₁,n₂)}`.
pub fn elliptic_rhs(ring: &Ring, big_c: &CoeffTable) -> Result<MultiSeries> {
    let (kmax, mmax) = (ring.cap(Var::Tg), ring.cap(Var::P));
    if ((kmax * mmax) as u32) > big_c.max_m {
        return Err(Error::Structural(format!("C is needed up to m = {}", kmax * mmax)));
    }
    // A factor with T^k reaches down to q^{-kM} and t^{-kM}. The product is
    // taken in S = T q^{-M} t^{-M}, where every factor is a power series.
    let shift = mmax;
    let (d_q, d_t) = (ring.cap(Var::Q), ring.cap(Var::T));
    let (cq, ct) = (d_q + kmax * shift, d_t + kmax * shift);
    let work = ring.clone().trunc(Var::Q, cq).trunc(Var::T, ct);
    let mut f = work.one();
    for m in 0..=mmax {
        for k in 1..=kmax {
            for ((l, n1, n2), e) in big_c.slice((k * m) as u32) {
                let e = e as i32;
                // q, t, u exponents at i = j = 1, and the multiplicity
                let corners = [(1 - n1, n2, l + 1, e), (-n1, n2 + 1, l - 1, e), (-n1, n2, l, -e), (1 - n1, n2 + 1, l, -e)];
                for (a, b, c, mult) in corners {
                    let (a, b) = (a + k * shift, b + k * shift);
                    for i in a..=cq {
                        for j in b..=ct {
                            let mono = work.mono(&[(Var::P, m), (Var::Tg, k), (Var::U, c), (Var::Q, i), (Var::T, j)]);
                            for _ in 0..mult.abs() {
                                f = if mult > 0 { f.mul_one_minus(&Rational::ONE, &mono)? } else { f.div_one_minus(&Rational::ONE, &mono)? };
                            }
                        }
                    }
                }
            }
        }
    }
    let ix = exps(&f, &[Var::Q, Var::T, Var::Tg])?;
    let terms = f.terms().iter().filter_map(|(x, c)| {
        let k = x.get(ix[2]);
        let (a, b) = (x.get(ix[0]) - k * shift, x.get(ix[1]) - k * shift);
        if a > d_q || b > d_t {
            return None;
        }
        let mut y = *x;
        y.set(ix[0], a);
        y.set(ix[1], b);
        Some((y, c.clone()))
    });
    MultiSeries::from_terms(ring, terms.collect::<Vec<_>>())?.truncate_to(ring)
}

/// Checks the elliptic identity slice by slice in `T` and `p`, and that the
/// `p⁰` slices of both sides coincide with the two sides of the q,t identity
/// built in the same `q, t, u, T` windows.
pub fn elliptic_no_verify(k: u32, m: u32, qt_deg: i32, u_window: i32) -> Result<Report> {
    let ring = elliptic_ring(k, m, qt_deg, u_window);
    let big_c = compute_big_c(k * m)?;
    let lhs = elliptic_lhs(&ring)?;
    let rhs = elliptic_rhs(&ring, &big_c)?;
    let mut rep = Report::new("elliptic Nekrasov-Okounkov");
    let window = [(Var::Q, qt_deg), (Var::T, qt_deg)];
    for j in 0..=m as i32 {
        let (a, b) = (lhs.extract(Var::P, j)?, rhs.extract(Var::P, j)?);
        for i in 0..=k as i32 {
            rep.compare(&format!("T^{} p^{}", i, j), &a.extract(Var::Tg, i)?, &b.extract(Var::Tg, i)?, &window)?;
        }
    }
    let plain = fnm_ring(qt_deg, k, u_window);
    let (u, p) = (Term::mono(plain.mono(&[(Var::U, 1)])), Params::standard(&plain));
    let sides = [("left", &lhs, qtno_lhs(&plain, &u, &p)?.join(&plain)?), ("right", &rhs, qtno_rhs(&plain, &u, &p)?.join(&plain)?)];
    for (name, ours, want) in sides {
        let slice = ours.extract(Var::P, 0)?;
        let same = slice.terms() == want.terms();
        let detail = if same { String::new() } else { format!("{} vs {} terms", slice.terms().len(), want.terms().len()) };
        rep.push(&format!("p^0 slice of the {} side is the q,t series", name), same, detail);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
