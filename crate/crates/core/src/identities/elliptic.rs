//! The elliptic Nekrasov-Okounkov product and its `p → 0` limit.

use alloc::format;
use alloc::vec::Vec;

use super::util::var;
use super::{IdentityEntry, Pair, Status, Windows};
use crate::elliptic::{compute_big_c, elliptic_lhs, elliptic_rhs, elliptic_ring};
use crate::error::Result;
use crate::exactnum::Var;
use crate::hooks::Params;
use crate::nekrasov::{fnm_ring, qtno_lhs, qtno_rhs};

pub(super) fn entries() -> Vec<IdentityEntry> {
    alloc::vec![IdentityEntry {
        id: "elliptic-no",
        statement: "Σ_λ T^|λ| Π_s θ(uq^{a+1}t^l, u^{-1}q^a t^{l+1}; p)/θ(q^{a+1}t^l, q^a t^{l+1}; p) \
                    = Π_{m≥0} Π_{i,j,k≥1} Π_{ℓ,n1,n2} ((1-p^m T^k u^{ℓ+1} q^{i-n1} t^{j+n2-1}) \
                    (1-p^m T^k u^{ℓ-1} q^{i-n1-1} t^{j+n2}) / ((1-p^m T^k u^ℓ q^{i-n1-1} t^{j+n2-1}) \
                    (1-p^m T^k u^ℓ q^{i-n1} t^{j+n2})))^{C(km,ℓ,n1,n2)}",
        status: Status::Theorem,
        windows: Windows { p_max: 1, ..Windows::new(2, 6, 4, 0, 0) },
        build: elliptic_no,
    }]
}

fn elliptic_no(w: &Windows) -> Result<Vec<Pair>> {
    let ring = elliptic_ring(w.tmax, w.p_max, w.qt_deg, w.u_window);
    let lhs = elliptic_lhs(&ring)?;
    let rhs = elliptic_rhs(&ring, &compute_big_c(w.tmax * w.p_max)?)?;
    let window = [(Var::Q, w.qt_deg), (Var::T, w.qt_deg)];
    let mut out = Vec::new();
    for j in 0..=w.p_max as i32 {
        let (a, b) = (lhs.extract(Var::P, j)?, rhs.extract(Var::P, j)?);
        for i in 0..=w.tmax as i32 {
            let label = format!("T^{} p^{}", i, j);
            out.push(Pair::new(label, a.extract(Var::Tg, i)?, b.extract(Var::Tg, i)?).within(&window));
        }
    }
    let plain = fnm_ring(w.qt_deg, w.tmax, w.u_window);
    let (u, p) = (var(&plain, Var::U), Params::standard(&plain));
    let limits = [("left", &lhs, qtno_lhs(&plain, &u, &p)?.join(&plain)?), ("right", &rhs, qtno_rhs(&plain, &u, &p)?.join(&plain)?)];
    for (side, ours, want) in limits {
        let slice = ours.extract(Var::P, 0)?;
        let same = (slice.terms() == want.terms()) as usize;
        out.push(Pair::count(format!("p^0 slice of the {} side is term for term the q,t series", side), same, 1));
    }
    Ok(out)
}
