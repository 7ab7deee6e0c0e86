use super::*;
use crate::lie::{CartanType, RootSystem, WeylElement};

fn a(rank: usize) -> RootSystem {
    RootSystem::new(CartanType::A, rank).unwrap()
}

fn m(rows: &[&[i64]]) -> QMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
}

#[test]
fn sl2_representative() {
    let w = weyl_representative(2, &[1], &rat(1, 1)).unwrap();
    assert_eq!(w, m(&[&[0, -1], &[1, 0]]));
    assert_eq!(root_subgroup_element(2, &[1], &rat(0, 1)).unwrap(), QMatrix::identity(2));
    assert_eq!(weyl_representative(2, &[1], &rat(0, 1)), Err(SliceError::ZeroParameter));
}

#[test]
fn reflections_on_torus() {
    for rank in 1..=3 {
        assert!(reflection_check(rank + 1, &a(rank)).unwrap().pass);
    }
    // s_a1 on diag(a, b, c) gives diag(b, a, c)
    let w = weyl_representative(3, &[1, 0], &rat(1, 1)).unwrap();
    let d = m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
    assert_eq!(w.mul(&d).mul(&w.inverse().unwrap()), m(&[&[3, 0, 0], &[0, 2, 0], &[0, 0, 5]]));
}

#[test]
fn u_elements() {
    assert_eq!(u_element(2, &[vec![1]], &[rat(1, 1)]).unwrap(), m(&[&[1, 0], &[1, 1]]));
    assert_eq!(u_element(2, &[vec![1]], &[rat(0, 1)]).unwrap(), QMatrix::identity(2));
    let u = u_element(3, &[vec![1, 0], vec![0, 1]], &[rat(1, 1), rat(1, 1)]).unwrap();
    // (1 + E_21)(1 + E_32)
    assert_eq!(u, m(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]]));
}

#[test]
fn sl2_ledger() {
    let r = Realization::new(&a(1), &[0], None).unwrap();
    let d = slice_audit(&r, 100, 1).unwrap();
    assert!(d.pass(), "{:?}", d.lines);
    assert_eq!((d.dim_z, d.dim_n_s, d.slice_dim), (0, 1, 1));
}

#[test]
fn sl3_coxeter_ledger() {
    let r = Realization::new(&a(2), &[0, 1], None).unwrap();
    let d = slice_audit(&r, 100, 2).unwrap();
    assert!(d.pass(), "{:?}", d.lines);
    assert_eq!((d.reduced_dim, d.slice_dim), (2, 2));
}

#[test]
fn a2_all_elements() {
    // the second identity holds for every s; the first fails exactly on reflections
    let rs = a(2);
    for w in WeylElement::all(&rs) {
        if w.is_identity() {
            continue;
        }
        let word = w.reduced_word(&rs);
        let r = Realization::new(&rs, &word, None).unwrap();
        let d = slice_audit(&r, 100, 3).unwrap();
        assert!(d.lines[1..].iter().all(|l| l.pass), "{:?} {:?}", word, d.lines);
        assert_eq!(d.lines[0].pass, r.lprime() != 1, "{:?}", word);
    }
}

#[test]
fn a3_coxeter_ledger() {
    let r = Realization::new(&a(3), &[0, 1, 2], None).unwrap();
    let d = slice_audit(&r, 100, 4).unwrap();
    assert!(d.pass(), "{:?}", d.lines);
}

#[test]
fn identity_element() {
    let r = Realization::new(&a(2), &[], None).unwrap();
    let d = slice_audit(&r, 10, 5).unwrap();
    assert!(d.pass());
    assert_eq!(d.reduced_dim, d.dim_g as i64);
}
