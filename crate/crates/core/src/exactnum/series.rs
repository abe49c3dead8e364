//! Sparse truncated multivariate series.
//!
//! Every variable of a series is either *truncated* or *Laurent*.
//!
//! A truncated variable `v` carries a valuation bound `lo` (no term of the
//! true series has a smaller exponent), a precision `hi` (all terms whose
//! exponents are `<= hi` in every truncated variable are stored exactly) and
//! a hard ceiling `cap`. `hi == EXACT` means nothing was lost in that
//! direction. Terms above `hi` are dropped silently; this is sound because
//! the set of dropped monomials is an ideal for the operations below.
//!
//! A Laurent variable has a fixed window `[lo, hi]`. It is never truncated:
//! a term leaving the window is an error, since dropping it would corrupt
//! low-order coefficients.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use super::rational::Rational;
use super::var::{Mono, Var, MAXV};
use crate::error::{Error, Result};

/// Precision sentinel for "known exactly".
pub const EXACT: i32 = 1 << 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Trunc,
    Laurent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSpec {
    pub var: Var,
    pub kind: Kind,
    pub lo: i32,
    pub hi: i32,
    pub cap: i32,
}

impl VarSpec {
    #[inline]
    pub fn is_trunc(&self) -> bool {
        self.kind == Kind::Trunc
    }
}

#[inline]
pub(crate) fn sat(a: i32, b: i32) -> i32 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        (a + b).min(EXACT)
    }
}

/// A declared variable set: truncated variables with their caps, Laurent
/// variables with their windows. Kept sorted in canonical variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ring {
    specs: Vec<VarSpec>,
}

impl Ring {
    pub fn new() -> Ring {
        Ring { specs: Vec::new() }
    }

    fn insert(mut self, spec: VarSpec) -> Ring {
        match self.specs.binary_search_by(|s| s.var.cmp(&spec.var)) {
            Ok(i) => self.specs[i] = spec,
            Err(i) => self.specs.insert(i, spec),
        }
        assert!(self.specs.len() <= MAXV, "too many variables");
        self
    }

    /// Adds (or replaces) a truncated variable with precision `cap`.
    pub fn trunc(self, var: Var, cap: i32) -> Ring {
        self.insert(VarSpec { var, kind: Kind::Trunc, lo: 0, hi: cap, cap })
    }

    /// Adds (or replaces) a Laurent variable with exact window `[lo, hi]`.
    pub fn laurent(self, var: Var, lo: i32, hi: i32) -> Ring {
        assert!(lo <= hi);
        self.insert(VarSpec { var, kind: Kind::Laurent, lo, hi, cap: hi })
    }

    pub fn without(mut self, var: Var) -> Ring {
        self.specs.retain(|s| s.var != var);
        self
    }

    pub fn specs(&self) -> &[VarSpec] {
        &self.specs
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    pub fn index(&self, var: Var) -> Option<usize> {
        self.specs.iter().position(|s| s.var == var)
    }

    pub fn spec(&self, var: Var) -> Option<&VarSpec> {
        self.specs.iter().find(|s| s.var == var)
    }

    pub fn cap(&self, var: Var) -> i32 {
        self.spec(var).map(|s| s.cap).unwrap_or(0)
    }

    pub fn has(&self, var: Var) -> bool {
        self.index(var).is_some()
    }

    /// Exponent vector from `(var, exponent)` pairs; panics on unknown vars.
    pub fn mono(&self, exps: &[(Var, i32)]) -> Mono {
        let mut m = Mono::ONE;
        for &(v, e) in exps {
            let i = self
                .index(v)
                .unwrap_or_else(|| panic!("variable {} not in ring", v));
            m.set(i, m.get(i) + e);
        }
        m
    }

    pub fn zero(&self) -> MultiSeries {
        MultiSeries::exact(self, Vec::new())
    }

    pub fn one(&self) -> MultiSeries {
        self.constant(Rational::ONE)
    }

    pub fn constant(&self, c: Rational) -> MultiSeries {
        if c.is_zero() {
            return self.zero();
        }
        MultiSeries::exact(self, alloc::vec![(Mono::ONE, c)])
    }

    /// `c * m` as a series. Fails if `m` leaves a Laurent window.
    pub fn term(&self, c: Rational, m: Mono) -> Result<MultiSeries> {
        MultiSeries::from_terms(self, core::iter::once((m, c)))
    }

    pub fn var(&self, v: Var) -> MultiSeries {
        self.term(Rational::ONE, self.mono(&[(v, 1)]))
            .expect("variable outside its own window")
    }

    /// `1 - c*m`.
    pub fn one_minus(&self, c: Rational, m: Mono) -> Result<MultiSeries> {
        MultiSeries::from_terms(self, [(Mono::ONE, Rational::ONE), (m, -c)])
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    pub(crate) vars: Vec<VarSpec>,
    pub(crate) terms: Vec<(Mono, Rational)>,
}

impl MultiSeries {
    /// Exactly known series; the terms must be unique and in-window.
    fn exact(ring: &Ring, terms: Vec<(Mono, Rational)>) -> MultiSeries {
        let mut s = MultiSeries { vars: ring.specs.clone(), terms };
        s.terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (i, v) in s.vars.iter_mut().enumerate() {
            if v.is_trunc() {
                v.hi = EXACT;
                v.lo = s.terms.iter().map(|(m, _)| m.get(i)).min().unwrap_or(EXACT);
            }
        }
        s
    }

    /// Exact series from arbitrary terms (duplicates are summed). Terms above
    /// a truncated cap are dropped and mark the series as truncated there.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<MultiSeries>
    where
        I: IntoIterator<Item = (Mono, Rational)>,
    {
        let mut map: HashMap<Mono, Rational> = HashMap::new();
        for (m, c) in terms {
            *map.entry(m).or_default() += &c;
        }
        let raw: Vec<(Mono, Rational)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut vars = ring.specs.clone();
        for (i, v) in vars.iter_mut().enumerate() {
            if v.is_trunc() {
                v.hi = EXACT;
                v.lo = raw.iter().map(|(m, _)| m.get(i)).min().unwrap_or(EXACT);
            }
        }
        finish(vars, raw)
    }

    pub fn ring(&self) -> Ring {
        let specs = self
            .vars
            .iter()
            .map(|v| {
                if v.is_trunc() {
                    VarSpec { lo: 0, hi: v.cap, ..*v }
                } else {
                    *v
                }
            })
            .collect();
        Ring { specs }
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.vars
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index(&self, var: Var) -> Option<usize> {
        self.vars.iter().position(|s| s.var == var)
    }

    pub fn spec(&self, var: Var) -> Option<&VarSpec> {
        self.vars.iter().find(|s| s.var == var)
    }

    /// Known precision in `var` (`EXACT` if nothing was dropped).
    pub fn precision(&self, var: Var) -> Option<i32> {
        self.spec(var).map(|s| s.hi)
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// Coefficient of `m`, failing when `m` lies beyond the known precision.
    pub fn coeff_checked(&self, m: &Mono) -> Result<Rational> {
        for (i, v) in self.vars.iter().enumerate() {
            if v.is_trunc() && m.get(i) > v.hi {
                return Err(Error::WindowTooSmall { var: v.var, exponent: m.get(i) });
            }
        }
        Ok(self.coeff(m))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Mono::ONE)
    }

    fn same_vars(&self, other: &MultiSeries) -> Result<()> {
        if self.vars.len() != other.vars.len()
            || self
                .vars
                .iter()
                .zip(&other.vars)
                .any(|(a, b)| a.var != b.var || a.kind != b.kind)
        {
            return Err(Error::Structural(alloc::format!(
                "variable sets differ: {} vs {}",
                VarList(&self.vars),
                VarList(&other.vars)
            )));
        }
        Ok(())
    }

    fn merged_vars(&self, other: &MultiSeries, mul: bool) -> Result<Vec<VarSpec>> {
        self.same_vars(other)?;
        Ok(self
            .vars
            .iter()
            .zip(&other.vars)
            .map(|(a, b)| {
                if a.is_trunc() {
                    let (lo, hi) = if mul {
                        let lo = sat(a.lo, b.lo);
                        let hi = sat(a.hi, b.lo).min(sat(b.hi, a.lo)).min(a.hi.max(b.hi));
                        (lo, hi)
                    } else {
                        (a.lo.min(b.lo), a.hi.min(b.hi))
                    };
                    VarSpec { lo, hi, cap: a.cap.min(b.cap), ..*a }
                } else {
                    VarSpec { lo: a.lo.min(b.lo), hi: a.hi.max(b.hi), cap: a.hi.max(b.hi), ..*a }
                }
            })
            .collect())
    }

    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.combine(other, true)
    }

    fn combine(&self, other: &MultiSeries, negate: bool) -> Result<MultiSeries> {
        let vars = self.merged_vars(other, false)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                core::cmp::Ordering::Greater
            } else if j == b.len() {
                core::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        finish(vars, out)
    }

    pub fn neg(&self) -> MultiSeries {
        MultiSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiSeries {
        if c.is_zero() {
            return MultiSeries { vars: self.vars.clone(), terms: Vec::new() };
        }
        MultiSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        let mut vars = self.merged_vars(other, true)?;
        for (i, v) in vars.iter_mut().enumerate() {
            if v.is_trunc() && v.hi >= EXACT {
                let top = |t: &[(Mono, Rational)]| t.iter().map(|(m, _)| m.get(i)).max();
                if let (Some(a), Some(b)) = (top(&self.terms), top(&other.terms)) {
                    if a + b > v.cap {
                        v.hi = v.cap;
                    }
                }
            }
        }
        let hi = effective_box(&vars, None);
        let map = mul_raw(&self.terms, &other.terms, &vars, &hi)?;
        finish(vars, map.into_iter().collect())
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, c: &Rational, m: &Mono) -> Result<MultiSeries> {
        let mut vars = self.vars.clone();
        for (i, v) in vars.iter_mut().enumerate() {
            if v.is_trunc() {
                let e = m.get(i);
                if v.lo < EXACT {
                    v.lo += e;
                }
                if v.hi < EXACT {
                    v.hi += e;
                }
            }
        }
        if c.is_zero() {
            return finish(vars, Vec::new());
        }
        let terms = self.terms.iter().map(|(x, a)| (x.mul(m), a * c)).collect();
        finish(vars, terms)
    }

    /// `self * (1 - c*m)`.
    pub fn mul_one_minus(&self, c: &Rational, m: &Mono) -> Result<MultiSeries> {
        let f = self.ring().one_minus(c.clone(), *m)?;
        self.mul(&f)
    }

    /// Lowers the precision of `var` to at most `hi`.
    pub fn truncate(&self, var: Var, hi: i32) -> Result<MultiSeries> {
        let i = self
            .index(var)
            .ok_or_else(|| Error::Structural(alloc::format!("no variable {}", var)))?;
        let mut vars = self.vars.clone();
        if !vars[i].is_trunc() {
            return Err(Error::Structural(alloc::format!("{} is not truncated", var)));
        }
        vars[i].hi = vars[i].hi.min(hi);
        vars[i].cap = vars[i].cap.min(hi.max(0));
        finish(vars, self.terms.clone())
    }

    /// Sets every truncated precision and cap to the given ring's caps
    /// (never raising the known precision).
    pub fn truncate_to(&self, ring: &Ring) -> Result<MultiSeries> {
        let mut f = self.clone();
        for s in ring.specs() {
            if s.is_trunc() {
                f = f.truncate(s.var, s.cap)?;
            }
        }
        Ok(f)
    }

    /// Re-declares the caps without touching the known precision.
    pub fn with_caps(&self, ring: &Ring) -> Result<MultiSeries> {
        self.same_vars_ring(ring)?;
        let mut vars = self.vars.clone();
        for (v, s) in vars.iter_mut().zip(ring.specs()) {
            if v.is_trunc() {
                v.cap = s.cap;
                if v.hi < EXACT {
                    v.hi = v.hi.min(s.cap);
                }
            } else {
                v.lo = s.lo;
                v.hi = s.hi;
                v.cap = s.hi;
            }
        }
        finish(vars, self.terms.clone())
    }

    fn same_vars_ring(&self, ring: &Ring) -> Result<()> {
        let probe = MultiSeries { vars: ring.specs.clone(), terms: Vec::new() };
        self.same_vars(&probe)
    }

    /// Moves the series into `ring`, which must contain every variable of
    /// `self` with the same kind. New variables appear with exponent 0.
    pub fn embed(&self, ring: &Ring) -> Result<MultiSeries> {
        let mut pos = [usize::MAX; MAXV];
        for (i, v) in self.vars.iter().enumerate() {
            let j = ring.index(v.var).ok_or_else(|| {
                Error::Structural(alloc::format!("cannot embed: {} missing", v.var))
            })?;
            if ring.specs[j].kind != v.kind {
                return Err(Error::Structural(alloc::format!("kind of {} differs", v.var)));
            }
            pos[i] = j;
        }
        let mut vars = ring.specs.clone();
        for (j, s) in vars.iter_mut().enumerate() {
            if let Some(i) = pos.iter().position(|&p| p == j) {
                let v = &self.vars[i];
                if s.is_trunc() {
                    s.lo = v.lo;
                    s.hi = v.hi;
                }
            } else if s.is_trunc() {
                s.lo = 0;
                s.hi = EXACT;
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = Mono::ONE;
                for i in 0..self.vars.len() {
                    n.set(pos[i], m.get(i));
                }
                (n, c.clone())
            })
            .collect();
        finish(vars, terms)
    }

    /// Coefficient of `var^e`, as a series in the remaining variables.
    pub fn extract(&self, var: Var, e: i32) -> Result<MultiSeries> {
        let i = self
            .index(var)
            .ok_or_else(|| Error::Structural(alloc::format!("no variable {}", var)))?;
        let v = self.vars[i];
        if v.is_trunc() && e > v.hi {
            return Err(Error::WindowTooSmall { var, exponent: e });
        }
        let mut vars = self.vars.clone();
        vars.remove(i);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.get(i) == e)
            .map(|(m, c)| {
                let mut n = Mono::ONE;
                let mut k = 0;
                for j in 0..self.vars.len() {
                    if j != i {
                        n.set(k, m.get(j));
                        k += 1;
                    }
                }
                (n, c.clone())
            })
            .collect();
        finish(vars, terms)
    }

    /// Lowest and highest stored exponent of `var`.
    pub fn exponent_range(&self, var: Var) -> Option<(i32, i32)> {
        let i = self.index(var)?;
        let lo = self.terms.iter().map(|(m, _)| m.get(i)).min()?;
        let hi = self.terms.iter().map(|(m, _)| m.get(i)).max()?;
        Some((lo, hi))
    }

    /// First monomial (in canonical order) inside `window` at which the two
    /// series differ. Truncated variables not named in `window` are compared
    /// up to the smaller of the two precisions.
    pub fn first_diff(
        &self,
        other: &MultiSeries,
        window: &[(Var, i32)],
    ) -> Result<Option<(Mono, Rational, Rational)>> {
        self.same_vars(other)?;
        let mut bound = [i32::MAX; MAXV];
        for (i, (a, b)) in self.vars.iter().zip(&other.vars).enumerate() {
            if !a.is_trunc() {
                continue;
            }
            let known = a.hi.min(b.hi);
            let w = window.iter().find(|(v, _)| *v == a.var).map(|&(_, e)| e);
            match w {
                Some(e) if e > known => {
                    return Err(Error::WindowTooSmall { var: a.var, exponent: e })
                }
                Some(e) => bound[i] = e,
                None => bound[i] = known,
            }
        }
        let inside = |m: &Mono| (0..self.vars.len()).all(|i| m.get(i) <= bound[i]);
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        loop {
            while i < a.len() && !inside(&a[i].0) {
                i += 1;
            }
            while j < b.len() && !inside(&b[j].0) {
                j += 1;
            }
            match (a.get(i), b.get(j)) {
                (None, None) => return Ok(None),
                (Some(x), None) => return Ok(Some((x.0, x.1.clone(), Rational::ZERO))),
                (None, Some(y)) => return Ok(Some((y.0, Rational::ZERO, y.1.clone()))),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    core::cmp::Ordering::Less => {
                        return Ok(Some((x.0, x.1.clone(), Rational::ZERO)))
                    }
                    core::cmp::Ordering::Greater => {
                        return Ok(Some((y.0, Rational::ZERO, y.1.clone())))
                    }
                    core::cmp::Ordering::Equal => {
                        if x.1 != y.1 {
                            return Ok(Some((x.0, x.1.clone(), y.1.clone())));
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    /// Renders a monomial of this series in canonical text form.
    pub fn mono_text(&self, m: &Mono) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        for (i, v) in self.vars.iter().enumerate() {
            let e = m.get(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "{}", v.var);
            if e != 1 {
                let _ = write!(s, "^{}", e);
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Terms in print order: ascending total degree, then descending
    /// exponent vectors.
    pub fn print_order(&self) -> Vec<&(Mono, Rational)> {
        let n = self.vars.len();
        let deg = |m: &Mono| (0..n).map(|i| m.get(i)).sum::<i32>();
        let mut out: Vec<&(Mono, Rational)> = self.terms.iter().collect();
        out.sort_by(|a, b| deg(&a.0).cmp(&deg(&b.0)).then(b.0.cmp(&a.0)));
        out
    }
}

pub(crate) struct VarList<'a>(pub &'a [VarSpec]);

impl fmt::Display for VarList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v.var)?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.print_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", self.mono_text(m))?;
            } else {
                write!(f, "{}*{}", abs, self.mono_text(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, VarList(&self.vars))
    }
}

/// Per-variable drop thresholds for truncated variables; `i32::MAX` for
/// Laurent ones. `EXACT` precisions are replaced by the cap.
pub(crate) fn effective_box(vars: &[VarSpec], extra: Option<&[i32]>) -> [i32; MAXV] {
    let mut hi = [i32::MAX; MAXV];
    for (i, v) in vars.iter().enumerate() {
        if v.is_trunc() {
            hi[i] = if v.hi >= EXACT { v.cap } else { v.hi.min(v.cap) };
            if let Some(x) = extra {
                hi[i] = hi[i].min(x[i]);
            }
        }
    }
    hi
}

/// Product of two term lists, dropping monomials outside `hi` and checking
/// Laurent windows on the survivors.
pub(crate) fn mul_raw(
    a: &[(Mono, Rational)],
    b: &[(Mono, Rational)],
    vars: &[VarSpec],
    hi: &[i32; MAXV],
) -> Result<HashMap<Mono, Rational>> {
    let n = vars.len();
    let mut map: HashMap<Mono, Rational> = HashMap::with_capacity(a.len().max(b.len()) * 2);
    let first_trunc = n > 0 && vars[0].is_trunc();
    if a.is_empty() || b.is_empty() {
        return Ok(map);
    }
    let mut bmin = [i32::MAX; MAXV];
    for (m, _) in b {
        for i in 0..n {
            bmin[i] = bmin[i].min(m.get(i));
        }
    }
    'outer: for (ma, ca) in a {
        for i in 0..n {
            if vars[i].is_trunc() && ma.get(i) + bmin[i] > hi[i] {
                continue 'outer;
            }
        }
        for (mb, cb) in b {
            if first_trunc && ma.get(0) + mb.get(0) > hi[0] {
                break;
            }
            let m = ma.mul(mb);
            if (0..n).any(|i| m.get(i) > hi[i]) {
                continue;
            }
            let c = ca * cb;
            match map.entry(m) {
                hashbrown::hash_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                }
                hashbrown::hash_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
    }
    for (m, _) in map.iter() {
        check_laurent(vars, m)?;
    }
    map.retain(|_, c| !c.is_zero());
    Ok(map)
}

#[inline]
pub(crate) fn check_laurent(vars: &[VarSpec], m: &Mono) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        if !v.is_trunc() {
            let e = m.get(i);
            if e < v.lo || e > v.hi {
                return Err(Error::WindowTooSmall { var: v.var, exponent: e });
            }
        }
    }
    Ok(())
}

/// Normalizes precision against the caps, drops terms outside the known
/// box, checks Laurent windows and sorts.
pub(crate) fn finish(mut vars: Vec<VarSpec>, mut terms: Vec<(Mono, Rational)>) -> Result<MultiSeries> {
    for (i, v) in vars.iter_mut().enumerate() {
        if !v.is_trunc() {
            continue;
        }
        if v.hi >= EXACT {
            if terms.iter().any(|(m, _)| m.get(i) > v.cap) {
                v.hi = v.cap;
            } else {
                v.hi = EXACT;
            }
        } else {
            v.hi = v.hi.min(v.cap);
        }
    }
    let n = vars.len();
    terms.retain(|(m, c)| {
        !c.is_zero() && (0..n).all(|i| !vars[i].is_trunc() || m.get(i) <= vars[i].hi)
    });
    for (m, _) in &terms {
        check_laurent(&vars, m)?;
    }
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(MultiSeries { vars, terms })
}
