//! Operations that expand infinitely: reciprocals, exp/log, geometric
//! quotients, infinite products, theta series and monomial substitutions.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::rational::Rational;
use super::series::{effective_box, finish, MultiSeries, Ring, VarSpec, EXACT};
use super::var::{Mono, Var, MAXV};
use crate::error::{Error, Result};

/// Total truncated degree of a monomial.
fn weight(vars: &[VarSpec], m: &Mono) -> i32 {
    vars.iter()
        .enumerate()
        .filter(|(_, v)| v.is_trunc())
        .map(|(i, _)| m.get(i))
        .sum()
}

fn inside(vars: &[VarSpec], hi: &[i32; MAXV], m: &Mono) -> bool {
    (0..vars.len()).all(|i| !vars[i].is_trunc() || m.get(i) <= hi[i])
}

/// Splits terms with nonnegative truncated exponents into homogeneous
/// components by total truncated degree, up to `max_w`.
fn graded(vars: &[VarSpec], terms: &[(Mono, Rational)], max_w: i32) -> Vec<Vec<(Mono, Rational)>> {
    let mut out = vec![Vec::new(); max_w.max(0) as usize + 1];
    for (m, c) in terms {
        let w = weight(vars, m);
        if w <= max_w {
            out[w as usize].push((*m, c.clone()));
        }
    }
    out
}

fn acc_product(
    map: &mut HashMap<Mono, Rational>,
    a: &[(Mono, Rational)],
    b: &[(Mono, Rational)],
    scale: &Rational,
    vars: &[VarSpec],
    hi: &[i32; MAXV],
) {
    for (ma, ca) in a {
        let cs = ca * scale;
        for (mb, cb) in b {
            let m = ma.mul(mb);
            if !inside(vars, hi, &m) {
                continue;
            }
            *map.entry(m).or_default() += &(&cs * cb);
        }
    }
}

/// Laurent windows are checked once on the final result, not here.
fn drain(map: HashMap<Mono, Rational>) -> Vec<(Mono, Rational)> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Checks that `f` lies in the augmentation ideal: every known and unknown
/// term has nonnegative truncated exponents, not all zero.
fn require_small(f: &MultiSeries, what: &str) -> Result<()> {
    for v in &f.vars {
        if v.is_trunc() && v.lo < 0 {
            return Err(Error::Domain(alloc::format!(
                "{}: negative valuation bound in {}",
                what, v.var
            )));
        }
    }
    for (m, _) in &f.terms {
        if weight(&f.vars, m) <= 0 {
            return Err(Error::Domain(alloc::format!(
                "{}: nonzero constant term {}",
                what,
                f.mono_text(m)
            )));
        }
    }
    Ok(())
}

fn box_weight(vars: &[VarSpec], hi: &[i32; MAXV]) -> i32 {
    vars.iter()
        .enumerate()
        .filter(|(_, v)| v.is_trunc())
        .map(|(i, _)| hi[i].max(0))
        .sum()
}

impl MultiSeries {
    /// Reciprocal of `c*m*(1 + r)` with `r` small.
    pub fn invert(&self) -> Result<MultiSeries> {
        if self.terms.is_empty() {
            return Err(Error::NonInvertible("zero series".into()));
        }
        let n = self.vars.len();
        let mut m0 = Mono::ONE;
        for i in 0..n {
            if self.vars[i].is_trunc() {
                let e = self.terms.iter().map(|(m, _)| m.get(i)).min().unwrap();
                m0.set(i, e);
            }
        }
        let lead: Vec<&(Mono, Rational)> = self
            .terms
            .iter()
            .filter(|(m, _)| (0..n).all(|i| !self.vars[i].is_trunc() || m.get(i) == m0.get(i)))
            .collect();
        if lead.len() != 1 {
            return Err(Error::NonInvertible(alloc::format!(
                "{} leading terms at {}",
                lead.len(),
                self.mono_text(&m0)
            )));
        }
        let (m, c) = (lead[0].0, lead[0].1.clone());
        for (i, v) in self.vars.iter().enumerate() {
            if v.is_trunc() && v.lo < m.get(i) {
                return Err(Error::NonInvertible(alloc::format!(
                    "leading term undetermined in {}",
                    v.var
                )));
            }
        }
        let cinv = c.recip().unwrap();
        let minv = m.inv();
        // result box and the box y = 1/(1+r) must be computed in
        let mut vars = self.vars.clone();
        let mut ybox = [i32::MAX; MAXV];
        for (i, v) in vars.iter_mut().enumerate() {
            if v.is_trunc() {
                let e = m.get(i);
                let hi = if v.hi >= EXACT { v.cap } else { (v.hi - 2 * e).min(v.cap) };
                v.hi = hi;
                v.lo = -e;
                ybox[i] = hi + e;
            }
        }
        let r: Vec<(Mono, Rational)> = self
            .terms
            .iter()
            .filter(|(x, _)| *x != m)
            .map(|(x, a)| (x.mul(&minv), a * &cinv))
            .collect();
        let maxw = box_weight(&vars, &ybox);
        let rg = graded(&vars, &r, maxw);
        if r.iter().any(|(x, _)| weight(&vars, x) <= 0) {
            return Err(Error::NonInvertible("unit part is not 1 + small".into()));
        }
        let mut y: Vec<Vec<(Mono, Rational)>> = vec![vec![(Mono::ONE, Rational::ONE)]];
        let minus = Rational::int(-1);
        for w in 1..=maxw as usize {
            let mut map = HashMap::new();
            for k in 1..=w {
                if rg[k].is_empty() || y[w - k].is_empty() {
                    continue;
                }
                acc_product(&mut map, &rg[k], &y[w - k], &minus, &vars, &ybox);
            }
            y.push(drain(map));
        }
        let terms = y
            .into_iter()
            .flatten()
            .map(|(x, a)| (x.mul(&minv), a * &cinv))
            .collect();
        finish(vars, terms)
    }

    pub fn div(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.mul(&other.invert()?)
    }

    /// `self / (1 - c*m)` where `m` has a positive truncated exponent.
    /// Negative truncated exponents in `m` are allowed; the number of
    /// geometric steps is bounded by the positive directions.
    pub fn div_one_minus(&self, c: &Rational, m: &Mono) -> Result<MultiSeries> {
        if c.is_zero() {
            return Ok(self.clone());
        }
        let n = self.vars.len();
        let pos: Vec<usize> = (0..n)
            .filter(|&i| self.vars[i].is_trunc() && m.get(i) > 0)
            .collect();
        if pos.is_empty() {
            return Err(Error::NonInvertible(alloc::format!(
                "1 - c*{} is not a unit",
                self.mono_text(m)
            )));
        }
        let mut vars = self.vars.clone();
        for &i in &pos {
            if vars[i].hi >= EXACT {
                vars[i].hi = vars[i].cap;
            }
        }
        // number of geometric steps that can still land inside the box
        let mut kmax = i32::MAX;
        for &i in &pos {
            let lo = if self.vars[i].lo >= EXACT { 0 } else { self.vars[i].lo };
            let hi = vars[i].hi.min(vars[i].cap);
            kmax = kmax.min(if hi < lo { 0 } else { (hi - lo) / m.get(i) });
        }
        if self.terms.is_empty() {
            return finish(vars, Vec::new());
        }
        for (i, v) in vars.iter_mut().enumerate() {
            let e = m.get(i);
            if v.is_trunc() && e < 0 {
                if v.lo < EXACT {
                    v.lo += kmax * e;
                }
                if v.hi < EXACT {
                    v.hi += kmax * e;
                }
            }
        }
        // only directions where m does not decrease are monotone; the rest
        // are filtered by `finish`
        let mut hi = effective_box(&vars, None);
        for i in 0..n {
            if m.get(i) < 0 {
                hi[i] = i32::MAX;
            }
        }
        let mut acc: HashMap<Mono, Rational> = HashMap::with_capacity(self.terms.len() * 2);
        for (x, a) in &self.terms {
            acc.insert(*x, a.clone());
        }
        let mut cur: Vec<(Mono, Rational)> = self.terms.clone();
        for _ in 0..kmax {
            cur = cur
                .into_iter()
                .filter_map(|(x, a)| {
                    let y = x.mul(m);
                    if inside(&vars, &hi, &y) {
                        Some((y, &a * c))
                    } else {
                        None
                    }
                })
                .collect();
            if cur.is_empty() {
                break;
            }
            for (x, a) in &cur {
                *acc.entry(*x).or_default() += a;
            }
        }
        finish(vars, acc.into_iter().collect())
    }

    /// `exp(f)` for `f` without constant term.
    pub fn exp(&self) -> Result<MultiSeries> {
        require_small(self, "exp")?;
        let mut vars = self.vars.clone();
        for v in vars.iter_mut() {
            if v.is_trunc() {
                v.lo = 0;
                if v.hi >= EXACT && !self.terms.is_empty() {
                    v.hi = v.cap;
                }
            }
        }
        let hi = effective_box(&vars, None);
        let maxw = box_weight(&vars, &hi);
        let fg = graded(&vars, &self.terms, maxw);
        let mut y: Vec<Vec<(Mono, Rational)>> = vec![vec![(Mono::ONE, Rational::ONE)]];
        for w in 1..=maxw as usize {
            let mut map = HashMap::new();
            for k in 1..=w {
                if fg[k].is_empty() || y[w - k].is_empty() {
                    continue;
                }
                let s = Rational::new(k as i64, w as i64);
                acc_product(&mut map, &fg[k], &y[w - k], &s, &vars, &hi);
            }
            y.push(drain(map));
        }
        finish(vars, y.into_iter().flatten().collect())
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<MultiSeries> {
        let one = self.ring().one();
        let h = self.sub(&one)?;
        require_small(&h, "log")?;
        let mut vars = h.vars.clone();
        for v in vars.iter_mut() {
            if v.is_trunc() {
                v.lo = 0;
                if v.hi >= EXACT && !h.terms.is_empty() {
                    v.hi = v.cap;
                }
            }
        }
        let hi = effective_box(&vars, None);
        let maxw = box_weight(&vars, &hi);
        let hg = graded(&vars, &h.terms, maxw);
        let mut g: Vec<Vec<(Mono, Rational)>> = vec![Vec::new()];
        for w in 1..=maxw as usize {
            let mut map: HashMap<Mono, Rational> = HashMap::new();
            for (m, c) in &hg[w] {
                map.insert(*m, c.clone());
            }
            for k in 1..w {
                if hg[k].is_empty() || g[w - k].is_empty() {
                    continue;
                }
                let s = Rational::new(-((w - k) as i64), w as i64);
                acc_product(&mut map, &hg[k], &g[w - k], &s, &vars, &hi);
            }
            g.push(drain(map));
        }
        finish(vars, g.into_iter().flatten().collect())
    }

    /// Applies the monomial substitution `var_i -> c_i * image_i` into
    /// `target`. Variables absent from `images` map to the same variable of
    /// `target`. The known precision of the result is derived from the
    /// source precision; an error is raised when it cannot be bounded.
    pub fn substitute(&self, target: &Ring, images: &[(Var, Rational, Mono)]) -> Result<MultiSeries> {
        let n = self.vars.len();
        let tn = target.len();
        let mut img: Vec<(Rational, Mono)> = Vec::with_capacity(n);
        for v in &self.vars {
            match images.iter().find(|(w, _, _)| *w == v.var) {
                Some((_, c, m)) => img.push((c.clone(), *m)),
                None => {
                    let j = target.index(v.var).ok_or_else(|| {
                        Error::Structural(alloc::format!("no image for {}", v.var))
                    })?;
                    let mut m = Mono::ONE;
                    m.set(j, 1);
                    img.push((Rational::ONE, m));
                }
            }
        }
        let exact_all = self.vars.iter().all(|v| !v.is_trunc() || v.hi >= EXACT);
        // per-source exponent range that unknown terms may use
        let src_range = |i: usize| -> (i64, i64) {
            let v = &self.vars[i];
            if !v.is_trunc() {
                return (v.lo as i64, v.hi as i64);
            }
            let (smin, smax) = match self.exponent_range(v.var) {
                Some(r) => r,
                None => (0, 0),
            };
            let lo = if exact_all { smin } else { v.lo.min(smin) };
            let hi = if exact_all { smax as i64 } else { i64::MAX };
            (lo as i64, hi)
        };
        let mut vars: Vec<VarSpec> = target.specs().to_vec();
        for j in 0..tn {
            if !vars[j].is_trunc() {
                continue;
            }
            let mut lo: i64 = 0;
            for i in 0..n {
                let k = img[i].1.get(j) as i64;
                if k == 0 {
                    continue;
                }
                let (a, b) = src_range(i);
                let c = if k > 0 { a * k } else if b == i64::MAX { i64::MIN } else { b * k };
                lo = lo.saturating_add(c);
            }
            if self.terms.is_empty() && exact_all {
                lo = EXACT as i64;
            }
            if lo == i64::MIN || lo < -(EXACT as i64) {
                return Err(Error::Structural(alloc::format!(
                    "cannot bound the valuation of {} after substitution",
                    vars[j].var
                )));
            }
            vars[j].lo = lo.min(EXACT as i64) as i32;
            vars[j].hi = EXACT;
        }
        // every finitely known source direction needs a carrier
        for i in 0..n {
            let v = &self.vars[i];
            if !v.is_trunc() || v.hi >= EXACT {
                continue;
            }
            let mut best: Option<(usize, i64)> = None;
            for j in 0..tn {
                let k = img[i].1.get(j) as i64;
                if k <= 0 || !vars[j].is_trunc() {
                    continue;
                }
                let mut rest: i64 = 0;
                let mut ok = true;
                for u in 0..n {
                    if u == i {
                        continue;
                    }
                    let ku = img[u].1.get(j) as i64;
                    if ku == 0 {
                        continue;
                    }
                    let (a, b) = src_range(u);
                    if ku > 0 {
                        rest += a * ku;
                    } else if b == i64::MAX {
                        ok = false;
                    } else {
                        rest += b * ku;
                    }
                }
                if !ok {
                    continue;
                }
                let bound = (v.hi as i64 + 1) * k + rest - 1;
                if best.map_or(true, |(_, b)| bound > b) {
                    best = Some((j, bound));
                }
            }
            match best {
                Some((j, b)) => {
                    vars[j].hi = vars[j].hi.min(b.clamp(-(EXACT as i64), EXACT as i64) as i32)
                }
                None => {
                    return Err(Error::Structural(alloc::format!(
                        "substitution loses the precision of {}",
                        v.var
                    )))
                }
            }
        }
        let mut map: HashMap<Mono, Rational> = HashMap::with_capacity(self.terms.len());
        let mut pw: Vec<HashMap<i32, Rational>> = vec![HashMap::new(); n];
        for (m, c) in &self.terms {
            let mut out = Mono::ONE;
            let mut coef = c.clone();
            for i in 0..n {
                let e = m.get(i);
                if e == 0 {
                    continue;
                }
                let (ci, mi) = &img[i];
                out = out.mul(&mi.pow(e));
                if !ci.is_one() {
                    let p = match pw[i].get(&e) {
                        Some(p) => p.clone(),
                        None => {
                            let p = ci.pow(e).ok_or_else(|| {
                                Error::Domain("zero coefficient raised to a negative power".into())
                            })?;
                            pw[i].insert(e, p.clone());
                            p
                        }
                    };
                    coef = &coef * &p;
                }
            }
            *map.entry(out).or_default() += &coef;
        }
        finish(vars, map.into_iter().collect())
    }

    /// Replaces every variable `v` by `v^r`.
    pub fn adams(&self, r: i32) -> Result<MultiSeries> {
        let ring = self.ring();
        let images: Vec<(Var, Rational, Mono)> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut m = Mono::ONE;
                m.set(i, r);
                (v.var, Rational::ONE, m)
            })
            .collect();
        let f = MultiSeries { vars: self.vars.clone(), terms: self.terms.clone() };
        f.substitute(&ring, &images)
    }

    /// Plethystic exponential `exp(sum_r adams_r(f)/r)`.
    pub fn plethystic_exp(&self) -> Result<MultiSeries> {
        require_small(self, "plethystic exp")?;
        let mut acc = self.clone();
        let mut r = 2;
        loop {
            let g = self.adams(r)?;
            if g.is_empty() {
                break;
            }
            acc = acc.add(&g.scale(&Rational::new(1, r as i64)))?;
            r += 1;
        }
        acc.exp()
    }
}

/// `prod_{i in N^k} (1 - c*x*b^i)`, or its reciprocal.
pub fn pochhammer(
    ring: &Ring,
    c: &Rational,
    x: &Mono,
    bases: &[Mono],
    invert: bool,
) -> Result<MultiSeries> {
    let mut out = ring.one();
    if c.is_zero() {
        return Ok(out);
    }
    let specs = ring.specs();
    for b in bases {
        let ok = specs
            .iter()
            .enumerate()
            .all(|(i, v)| !v.is_trunc() || b.get(i) >= 0)
            && specs.iter().enumerate().any(|(i, v)| v.is_trunc() && b.get(i) > 0);
        if !ok {
            return Err(Error::Domain("pochhammer base must be small".into()));
        }
    }
    let mut hi = [i32::MAX; MAXV];
    for (i, v) in specs.iter().enumerate() {
        if v.is_trunc() {
            hi[i] = v.cap;
        }
    }
    let mut factors = Vec::new();
    collect_factors(specs, &hi, *x, bases, 0, &mut factors);
    for m in factors {
        if m.is_one() && c.is_one() {
            return Err(Error::DivergentPochhammer);
        }
        out = if invert { out.div_one_minus(c, &m)? } else { out.mul_one_minus(c, &m)? };
    }
    Ok(out)
}

fn collect_factors(
    specs: &[VarSpec],
    hi: &[i32; MAXV],
    x: Mono,
    bases: &[Mono],
    k: usize,
    out: &mut Vec<Mono>,
) {
    if !inside(specs, hi, &x) {
        return;
    }
    if k == bases.len() {
        out.push(x);
        return;
    }
    let mut y = x;
    while inside(specs, hi, &y) {
        collect_factors(specs, hi, y, bases, k + 1, out);
        y = y.mul(&bases[k]);
    }
}

/// `theta(c*x; p) = sum_k (-c*x)^k p^{k(k-1)/2}` to the cap of `p`.
pub fn theta_sum(ring: &Ring, c: &Rational, x: &Mono, p: Var) -> Result<MultiSeries> {
    let pm = ring.mono(&[(p, 1)]);
    let cap = ring.cap(p);
    let mut terms = Vec::new();
    let mut k: i32 = 0;
    while k * (k - 1) / 2 <= cap {
        k -= 1;
    }
    k += 1;
    while k * (k - 1) / 2 <= cap {
        let coef = (-c).pow(k).ok_or_else(|| Error::Domain("theta at zero".into()))?;
        terms.push((x.pow(k).mul(&pm.pow(k * (k - 1) / 2)), coef));
        k += 1;
    }
    MultiSeries::from_terms(ring, terms)?.truncate(p, cap)
}

/// `(c*x, p/(c*x), p; p)_inf`.
pub fn theta_product(ring: &Ring, c: &Rational, x: &Mono, p: Var) -> Result<MultiSeries> {
    let pm = ring.mono(&[(p, 1)]);
    let ci = c.recip().ok_or_else(|| Error::Domain("theta at zero".into()))?;
    let a = pochhammer(ring, c, x, &[pm], false)?;
    let b = pochhammer(ring, &ci, &pm.mul(&x.inv()), &[pm], false)?;
    let d = pochhammer(ring, &Rational::ONE, &pm, &[pm], false)?;
    a.mul(&b)?.mul(&d)
}
