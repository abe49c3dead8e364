use alloc::vec::Vec;

use super::series::{MultiSeries, Ring};
use super::var::{Mono, Var};
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// A series split by the power of its grading variable: `coeffs[k]` is the
/// coefficient of `T^k`, a series in the remaining variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGraded {
    pub var: Var,
    pub coeffs: Vec<MultiSeries>,
}

impl TGraded {
    /// Splits `f` by powers of `var` from 0 to `order`.
    pub fn split(f: &MultiSeries, var: Var, order: i32) -> Result<TGraded> {
        let mut coeffs = Vec::with_capacity(order as usize + 1);
        for k in 0..=order {
            coeffs.push(f.extract(var, k)?);
        }
        Ok(TGraded { var, coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Reassembles into a series over `ring`, which must contain `var`.
    pub fn join(&self, ring: &Ring) -> Result<MultiSeries> {
        let idx = ring
            .index(self.var)
            .ok_or_else(|| Error::Structural(alloc::format!("no variable {}", self.var)))?;
        let mut acc = ring.zero().truncate(self.var, self.order() as i32)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut m = Mono::ONE;
            m.set(idx, k as i32);
            acc = acc.add(&c.embed(ring)?.mul_term(&Rational::ONE, &m)?)?;
        }
        Ok(acc)
    }

    /// Logarithm degree by degree, `n L_n = n f_n - Σ_{k<n} k L_k f_{n-k}`.
    /// Needs `f_0 = 1`; the coefficients may have negative valuations.
    pub fn log(&self) -> Result<TGraded> {
        let f = &self.coeffs;
        let one = f[0].ring().one();
        if f[0].first_diff(&one, &[])?.is_some() {
            return Err(Error::NonInvertible("graded log needs constant term 1".into()));
        }
        let mut l = alloc::vec![f[0].ring().zero()];
        for n in 1..f.len() {
            let mut acc = f[n].scale(&Rational::int(n as i64));
            for k in 1..n {
                acc = acc.sub(&l[k].mul(&f[n - k])?.scale(&Rational::int(k as i64)))?;
            }
            l.push(acc.scale(&Rational::new(1, n as i64)));
        }
        Ok(TGraded { var: self.var, coeffs: l })
    }
}
