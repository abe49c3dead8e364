//! Integer partitions and their cell statistics.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts; the empty partition is 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

/// Arm, leg, arm-colength and leg-colength of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub arm: i32,
    pub leg: i32,
    pub arm_co: i32,
    pub leg_co: i32,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Accepts parts in any order; zero parts are dropped.
    pub fn new(parts: &[u32]) -> Partition {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Requires weakly decreasing positive parts.
    pub fn from_parts(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("parts must be positive and weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// `(m^n)`, the rectangle with `n` rows of length `m`.
    pub fn rectangle(m: u32, n: u32) -> Partition {
        if m == 0 {
            return Partition::empty();
        }
        Partition(alloc::vec![m; n as usize])
    }

    /// The staircase `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: u32) -> Partition {
        Partition((1..n).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` counted from 1; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let mut out = Vec::with_capacity(first as usize);
        for j in 1..=first {
            out.push(self.0.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition(out)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Cells `(i, j)` in row order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn cell_stats(&self, i: usize, j: usize) -> Result<CellStats> {
        if !self.contains_cell(i, j) {
            return Err(Error::Domain(alloc::format!("cell ({},{}) not in {}", i, j, self)));
        }
        let col = self.0.iter().filter(|&&p| p as usize >= j).count();
        Ok(CellStats {
            arm: self.part(i) as i32 - j as i32,
            leg: col as i32 - i as i32,
            arm_co: j as i32 - 1,
            leg_co: i as i32 - 1,
        })
    }

    /// Arm/leg statistics of every cell, in row order.
    pub fn all_cell_stats(&self) -> Vec<CellStats> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| CellStats {
                arm: self.part(i) as i32 - j as i32,
                leg: conj.part(j) as i32 - i as i32,
                arm_co: j as i32 - 1,
                leg_co: i as i32 - 1,
            })
            .collect()
    }

    pub fn hooks(&self) -> Vec<u32> {
        self.all_cell_stats()
            .into_iter()
            .map(|s| (s.arm + s.leg + 1) as u32)
            .collect()
    }

    /// No hook length equal to `p`.
    pub fn is_p_core(&self, p: u32) -> bool {
        !self.hooks().contains(&p)
    }

    /// No hook length divisible by `p`.
    pub fn is_p_core_divisible(&self, p: u32) -> bool {
        self.hooks().iter().all(|h| h % p != 0)
    }

    /// Consecutive parts differ by at most `p-1`, including `λ_l - 0`.
    pub fn in_dp(&self, p: u32) -> bool {
        let mut prev = self.0.iter().copied().chain(core::iter::once(0));
        let mut a = match prev.next() {
            Some(x) => x,
            None => return true,
        };
        for b in prev {
            if a - b > p.saturating_sub(1) {
                return false;
            }
            a = b;
        }
        true
    }

    /// `μ ⊆ λ`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `λ/μ` is a horizontal strip: `λ_i ≥ μ_i ≥ λ_{i+1}`.
    pub fn is_horizontal_strip(&self, mu: &Partition) -> bool {
        if !self.contains(mu) {
            return false;
        }
        (1..=self.len()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    /// `λ/μ` is a vertical strip.
    pub fn is_vertical_strip(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len()).all(|i| self.part(i) - mu.part(i) <= 1)
    }

    /// Dominance order `self ≤ other` (sizes must agree).
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `(m - μ_n, ..., m - μ_1)` for `μ ⊆ (m^n)`.
    pub fn complement_in_box(&self, m: u32, n: u32) -> Result<Partition> {
        if self.len() > n as usize || self.part(1) > m {
            return Err(Error::Domain(alloc::format!("{} not inside ({}^{})", self, m, n)));
        }
        let parts: Vec<u32> = (1..=n as usize).rev().map(|i| m - self.part(i)).collect();
        Ok(Partition::new(&parts))
    }

    /// Adds a cell at the end of row `i` (1-based) if that keeps a partition.
    pub fn add_cell(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 {
            return None;
        }
        if i > 1 && self.part(i - 1) == self.part(i) {
            return None;
        }
        let mut v = self.0.clone();
        if i == v.len() + 1 {
            v.push(1);
        } else {
            v[i - 1] += 1;
        }
        Some(Partition(v))
    }

    /// Parses `0`, `3,1`, `(3,1)` or `3 1`.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Some(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            parts.push(tok.parse().ok()?);
        }
        Partition::from_parts(parts).ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, usize::MAX, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() >= rows {
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, rows, cur, out);
        cur.pop();
    }
}

/// All partitions of size at most `n`, by size then lexicographically
/// descending.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions of `size` with at most `rows` parts, each at most `max`.
pub fn partitions_bounded(size: u32, max: u32, rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(size, max.min(size), rows, &mut cur, &mut out);
    out
}

/// All `λ ⊆ (m^n)`, by size then lexicographically descending.
pub fn in_box(m: u32, n: u32) -> Vec<Partition> {
    (0..=m * n)
        .flat_map(|k| partitions_bounded(k, m, n as usize))
        .collect()
}

pub fn p_cores_of_size(p: u32, n: u32) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|l| l.is_p_core(p)).collect()
}

pub fn dp_of_size(p: u32, n: u32) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|l| l.in_dp(p)).collect()
}

/// All `μ ⊆ λ` with `λ/μ` a horizontal strip.
pub fn horizontal_strips_below(lambda: &Partition) -> Vec<Partition> {
    let l = lambda.len();
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; l];
    strips(lambda, 0, &mut cur, &mut out);
    out
}

fn strips(lambda: &Partition, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == cur.len() {
        out.push(Partition::new(cur));
        return;
    }
    let hi = lambda.part(i + 1);
    let lo = lambda.part(i + 2);
    for m in lo..=hi {
        cur[i] = m;
        strips(lambda, i + 1, cur, out);
    }
}

/// All partitions `μ ⊆ λ`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    subs(lambda, 0, u32::MAX, &mut cur, &mut out);
    out
}

fn subs(lambda: &Partition, i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    if i >= lambda.len() {
        return;
    }
    for p in 1..=lambda.parts()[i].min(max) {
        cur.push(p);
        subs(lambda, i + 1, p, cur, out);
        cur.pop();
    }
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn mobius(n: u32) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn arm_and_leg_of_sample_cell() {
        let l = p(&[8, 7, 7, 6, 4, 3, 1]);
        let s = l.cell_stats(3, 3).unwrap();
        assert_eq!((s.arm, s.leg), (4, 3));
        let one = p(&[1]).cell_stats(1, 1).unwrap();
        assert_eq!(one, CellStats { arm: 0, leg: 0, arm_co: 0, leg_co: 0 });
        let s = p(&[2, 1]).cell_stats(1, 1).unwrap();
        assert_eq!((s.arm, s.leg), (1, 1));
        assert!(p(&[2, 1]).cell_stats(2, 2).is_err());
    }

    #[test]
    fn conjugates_and_n() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(Partition::empty().n_stat(), 0);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(in_box(1, 1), [Partition::empty(), p(&[1])]);
        assert_eq!(partitions_of(3), [p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        for n in [0, 1, 3, 6] {
            assert_eq!(p_cores_of_size(2, n).len(), 1);
        }
        assert_eq!(p_cores_of_size(2, 6), [p(&[3, 2, 1])]);
        for n in [2, 4, 5, 7] {
            assert!(p_cores_of_size(2, n).is_empty());
        }
    }

    #[test]
    fn partition_numbers_follow_euler_recurrence() {
        let mut pn = alloc::vec![1i64];
        for n in 1..=30i64 {
            let mut s = 0;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * pn[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    s += sign * pn[(n - g2) as usize];
                }
                k += 1;
            }
            pn.push(s);
        }
        for n in 0..=30u32 {
            assert_eq!(partitions_of(n).len() as i64, pn[n as usize], "p({})", n);
        }
    }

    #[test]
    fn hooks_and_predicates() {
        assert_eq!(p(&[2]).hooks(), [2, 1]);
        assert!(p(&[2, 1]).is_p_core(2));
        assert!(!p(&[1]).in_dp(1));
        assert!(Partition::empty().in_dp(1));
        assert!(p(&[2, 1]).is_horizontal_strip(&p(&[1])));
        assert!(!p(&[2, 2]).is_horizontal_strip(&p(&[1])));
    }

    #[test]
    fn p_core_predicates_agree() {
        for pp in 1..=5 {
            for n in 0..=12 {
                for l in partitions_of(n) {
                    assert_eq!(l.is_p_core(pp), l.is_p_core_divisible(pp), "{} p={}", l, pp);
                }
            }
        }
    }

    #[test]
    fn dp_counts_by_length() {
        for pp in 1..=4u32 {
            for len in 1..=4usize {
                // largest part of a D_p member of length l is at most l(p-1)
                let bound = len as u32 * (pp - 1);
                let count = (0..=bound * len as u32)
                    .flat_map(partitions_of)
                    .filter(|l| l.len() == len && l.in_dp(pp))
                    .count() as u32;
                assert_eq!(count, pp.pow(len as u32) - pp.pow(len as u32 - 1));
            }
        }
    }

    #[test]
    fn box_complement() {
        assert_eq!(Partition::empty().complement_in_box(3, 2).unwrap(), Partition::rectangle(3, 2));
        assert_eq!(Partition::rectangle(3, 2).complement_in_box(3, 2).unwrap(), Partition::empty());
        assert_eq!(p(&[1]).complement_in_box(2, 2).unwrap(), p(&[2, 1]));
        assert!(p(&[3]).complement_in_box(2, 2).is_err());
        for l in in_box(3, 3) {
            let c = l.complement_in_box(3, 3).unwrap();
            assert_eq!(c.complement_in_box(3, 3).unwrap(), l);
            assert_eq!(l.size() + c.size(), 9);
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!([mobius(1), mobius(4), mobius(6)], [1, 0, 1]);
        for n in 1..=20 {
            let s: i32 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, (n == 1) as i32);
        }
    }

    #[test]
    fn strips_and_subpartitions() {
        let l = p(&[2, 1]);
        let s = horizontal_strips_below(&l);
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|m| l.is_horizontal_strip(m)));
        assert_eq!(subpartitions(&l).len(), 5);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..7, 0..7).prop_map(|v| Partition::new(&v))
    }

    proptest! {
        #[test]
        fn conjugation_properties(l in arb_partition()) {
            let c = l.conjugate();
            prop_assert_eq!(c.conjugate(), l.clone());
            prop_assert_eq!(c.size(), l.size());
            let binom: u32 = c.parts().iter().map(|&x| x * x.saturating_sub(1) / 2).sum();
            prop_assert_eq!(l.n_stat(), binom);
            for (i, j) in l.cells() {
                let a = l.cell_stats(i, j).unwrap();
                let b = c.cell_stats(j, i).unwrap();
                prop_assert_eq!(a.arm, b.leg);
                prop_assert_eq!(a.leg, b.arm);
            }
        }
    }
}
