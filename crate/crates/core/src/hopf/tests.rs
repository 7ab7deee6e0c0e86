use super::checks::*;
use super::*;
use crate::lie::{CartanType, RootSystem};

fn a2_coxeter() -> Hopf {
    let rs = RootSystem::new(CartanType::A, 2).unwrap();
    let r = Realization::new(&rs, &[0, 1], None).unwrap();
    Hopf::for_realization(&r).unwrap()
}

#[test]
fn generator_coproducts() {
    let mut h = a2_coxeter();
    let t = h.alg.t(0, 1);
    assert_eq!(h.coproduct(&t).unwrap(), Tensor::pure(&[&t, &t]));
    let e = h.alg.e_simple(0);
    let d = h.coproduct(&e).unwrap();
    assert_eq!(d.len(), 2);
}

#[test]
fn axioms_on_generators_a2() {
    let mut h = a2_coxeter();
    let s = sample_set(&h, 4, 3);
    for line in hopf_axioms(&mut h, &s).unwrap() {
        assert!(line.pass, "{:?}", line);
    }
    assert!(antipode_square(&mut h).unwrap().pass);
}

#[test]
fn adjoint_a2() {
    let mut h = a2_coxeter();
    let xs = vec![h.alg.e_simple(0), h.alg.f_simple(1), h.alg.t(1, 1)];
    let ws = vec![h.alg.e_simple(1), h.alg.f_simple(0), h.alg.t(0, 1), h.alg.e(1)];
    for line in adjoint_checks(&mut h, &xs, &ws).unwrap() {
        assert!(line.pass, "{:?}", line);
    }
}

#[test]
fn coideal_a2() {
    let mut h = a2_coxeter();
    let e = h.alg.e(1);
    assert!(h.coideal_membership(&e).unwrap());
    // correction terms of Delta(e_beta) carry later roots on the left
    for k in 0..3 {
        let c = h.cm1_check(k).unwrap();
        assert!(c.after && c.right_b, "{} {}", k, c.rest);
    }
    assert!(!h.cm1_check(1).unwrap().before);
}

