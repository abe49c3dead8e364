use super::*;
use std::collections::BTreeSet;

#[test]
fn big_c_at_zero_is_delta() {
    let c = compute_big_c(0).unwrap();
    assert_eq!(c.iter().collect::<Vec<_>>(), [((0, 0, 0, 0), 1)]);
}

#[test]
fn big_c_first_order() {
    // p-coefficient of Π(1 - p x_i) / Π(1 - p y_j) is Σ y_j - Σ x_i
    let c = compute_big_c(1).unwrap();
    let mut want = BTreeMap::new();
    for k in [(1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1)] {
        *want.entry(k).or_insert(0) -= 1;
    }
    for k in [(0, -1, 0), (0, 1, 0), (0, 0, -1), (0, 0, 1)] {
        *want.entry(k).or_insert(0) += 1;
    }
    let got: BTreeMap<_, _> = c.slice(1).collect();
    assert_eq!(got, want);
    assert_eq!(got.len(), 8);
}

#[test]
fn big_c_is_integral_and_symmetric() {
    let c = compute_big_c(3).unwrap();
    let rep = check_big_c(&c);
    assert!(rep.passed(), "{}", rep);
    assert!(c.slice(3).count() > c.slice(2).count());
}

#[test]
fn d_at_zero_has_four_shifts() {
    let d = compute_d(&compute_big_c(0).unwrap());
    let got: BTreeMap<_, _> = d.slice(0).collect();
    let want: BTreeMap<_, _> = [((0, 1, -1), 1), ((0, 0, 0), 1), ((1, 0, -1), -1), ((-1, 1, 0), -1)].into_iter().collect();
    assert_eq!(got, want);
}

#[test]
fn d_support_box() {
    let d = compute_d(&compute_big_c(2).unwrap());
    for ((m, l, n1, n2), _) in d.iter() {
        let b = m as i32 + 1;
        assert!(l.abs() <= b && n1.abs() <= b && n2.abs() <= b, "{:?}", (m, l, n1, n2));
    }
}

#[test]
fn c_at_zero_by_hand() {
    // (1 - us)(1 - t2/u) / ((1 - s)(1 - t2)) with s = 1/t1:
    // the u^0 part is (1 + s t2)/((1 - s)(1 - t2)), the u^1 part -s/((1 - s)(1 - t2))
    let c = c_direct(0, 3).unwrap();
    assert_eq!(c.get(0, 0, 0, 0), 1);
    assert_eq!(c.get(0, 0, -1, 0), 1);
    assert_eq!(c.get(0, 1, -1, 0), -1);
    assert_eq!(c.get(0, -1, 0, 1), -1);
    assert_eq!(c.get(0, 0, -1, 1), 2);
    assert_eq!(c.get(0, 0, -3, 2), 2);
    assert_eq!(c.get(0, 0, 0, 2), 1);
    let d = compute_d(&compute_big_c(0).unwrap());
    for (l, n1, n2) in [(0, 0, 0), (0, -1, 0), (1, -1, 0), (-1, 0, 1), (0, -1, 1), (0, -3, 2)] {
        assert_eq!(c_from_d(&d, 0, l, n1, n2), c.get(0, l, n1, n2), "{:?}", (l, n1, n2));
    }
}

#[test]
fn c_from_d_matches_direct_expansion() {
    let rep = c_consistency(2, 4).unwrap();
    assert!(rep.passed(), "{}", rep);
}

#[test]
fn c_vanishes_outside_the_shifted_support() {
    let c = c_direct(2, 4).unwrap();
    for ((m, _, n1, n2), _) in c.iter() {
        assert!(n1 <= m as i32 && n2 >= -(m as i32), "{:?}", (m, n1, n2));
    }
}

#[test]
fn text_export_is_sorted_and_complete() {
    let c = compute_big_c(1).unwrap();
    let text = c.to_text();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), c.len());
    assert_eq!(lines[0], "0 0 0 0 1");
    let keys: Vec<(u32, i32, i32, i32)> = lines
        .iter()
        .map(|l| {
            let v: Vec<i64> = l.split(' ').map(|x| x.parse().unwrap()).collect();
            (v[0] as u32, v[1] as i32, v[2] as i32, v[3] as i32)
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(keys.iter().collect::<BTreeSet<_>>().len(), keys.len());
}

#[test]
fn rhs_without_p_is_the_qt_product() {
    let ring = elliptic_ring(2, 0, 4, 3);
    let rhs = elliptic_rhs(&ring, &compute_big_c(0).unwrap()).unwrap();
    let plain = fnm_ring(4, 2, 3);
    let (u, p) = (Term::mono(plain.mono(&[(Var::U, 1)])), Params::standard(&plain));
    let want = qtno_rhs(&plain, &u, &p).unwrap().join(&plain).unwrap();
    assert_eq!(rhs.extract(Var::P, 0).unwrap().terms(), want.terms());
}

#[test]
fn first_order_in_t_and_p() {
    // λ = (1): θ(uq)θ(t/u)/(θ(q)θ(t)); its p-coefficient against C(1) data
    let ring = elliptic_ring(1, 1, 5, 3);
    let lhs = elliptic_lhs(&ring).unwrap();
    let rhs = elliptic_rhs(&ring, &compute_big_c(1).unwrap()).unwrap();
    let a = lhs.extract(Var::Tg, 1).unwrap().extract(Var::P, 1).unwrap();
    let b = rhs.extract(Var::Tg, 1).unwrap().extract(Var::P, 1).unwrap();
    assert!(!a.is_zero());
    assert_eq!(a.first_diff(&b, &[(Var::Q, 5), (Var::T, 5)]).unwrap(), None);
}

#[test]
fn t_zero_slice_is_one() {
    let ring = elliptic_ring(1, 1, 3, 2);
    let lhs = elliptic_lhs(&ring).unwrap().extract(Var::Tg, 0).unwrap();
    let rhs = elliptic_rhs(&ring, &compute_big_c(1).unwrap()).unwrap().extract(Var::Tg, 0).unwrap();
    for f in [lhs, rhs] {
        assert_eq!(f.terms().len(), 1);
        assert!(f.constant_term().is_one());
    }
}

#[test]
fn elliptic_identity_small() {
    let rep = elliptic_no_verify(2, 1, 4, 4).unwrap();
    assert!(rep.passed(), "{}", rep);
}
