use super::*;
use crate::coeff::Coeff;
use crate::hopf::Hopf;
use crate::lie::{CartanType, RootSystem};
use crate::realization::Realization;
use crate::rep::WeightModule;

fn setup(ty: CartanType, rank: usize, s: &[usize]) -> (Realization, Hopf) {
    let rs = RootSystem::new(ty, rank).unwrap();
    let r = Realization::new(&rs, s, None).unwrap();
    let h = Hopf::for_realization(&r).unwrap();
    (r, h)
}

#[test]
fn certificates() {
    for (ty, rank, s) in [(CartanType::A, 1, vec![0]), (CartanType::A, 2, vec![0, 1]), (CartanType::B, 2, vec![0, 1])] {
        let (r, mut h) = setup(ty, rank, &s);
        let (rels, line) = certify(&mut h.alg, &r).unwrap();
        assert!(line.pass, "{:?} {:?}", line, rels);
        let pairs = r.segment_len() * (r.segment_len() - 1) / 2;
        assert_eq!(rels.len(), pairs);
    }
}

#[test]
fn a2_coxeter_relation_exponent() {
    let (r, mut h) = setup(CartanType::A, 2, &[0, 1]);
    let (rels, _) = certify(&mut h.alg, &r).unwrap();
    let simple: Vec<_> = rels.iter().filter(|x| x.alpha.len() <= 2 && x.beta.len() <= 2).collect();
    assert_eq!(simple.len(), 1);
    assert_eq!(simple[0].q_exponent, "0");
}

#[test]
fn reduction_basics() {
    let (r, mut h) = setup(CartanType::A, 1, &[0]);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    let g = red.generator(&h.alg, 0);
    assert!(red.reduce(&mut h.alg, &g).unwrap().is_zero());
    let one = h.alg.unit();
    assert_eq!(red.reduce(&mut h.alg, &one).unwrap(), one);
    // any left multiple of a generator reduces to zero
    let f = h.alg.f(0);
    let t = h.alg.t(0, 3);
    let x = h.alg.mul_all(&[&f, &t, &f, &g]).unwrap();
    assert!(red.reduce(&mut h.alg, &x).unwrap().is_zero());
    // idempotent
    let y = h.alg.mul(&h.alg.e(0), &f).unwrap();
    let ry = red.reduce(&mut h.alg, &y).unwrap();
    let back = h.alg.from_e_right(&ry);
    assert_eq!(red.reduce(&mut h.alg, &back).unwrap(), ry);
}

#[test]
fn trivial_predicates() {
    let (r, mut h) = setup(CartanType::A, 2, &[0, 1]);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    let one = h.alg.unit();
    assert!(red.whittaker_test(&mut h.alg, &one).unwrap());
    assert!(red.ad_invariance_test(&mut h, &one).unwrap());
}

#[test]
fn a1_invariants() {
    let (r, mut h) = setup(CartanType::A, 1, &[0]);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    let gens = torus_generators(&h.alg, &r).unwrap();
    let basis = coset_basis(&h.alg, &red, &gens, 3);
    let eq = equivalence_on_basis(&mut h, &red, &basis).unwrap();
    assert!(eq.disagreements.is_empty(), "{:?}", eq);
    let (inv, rep) = w_elements(&mut h, &red, &basis).unwrap();
    println!("{:#?}", rep);
    assert!(rep.ad_agrees);
    assert!(inv.len() >= 2);
}

#[test]
fn module_whittaker_vectors() {
    let (r, mut h) = setup(CartanType::A, 1, &[0]);
    let zero = WhittakerCharacter::new(&r, vec![Coeff::zero()]).unwrap();
    let red = IdealReducer::new(&h.alg, zero);
    let m = WeightModule::trivial(&r.rs, h.alg.d);
    assert_eq!(wh_of_module(&mut h.alg, &red, &m).unwrap().len(), 1);
    let m = WeightModule::a1_spin(&r.rs, h.alg.d, 2).unwrap();
    assert_eq!(wh_of_module(&mut h.alg, &red, &m).unwrap().len(), 1);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    assert!(wh_of_module(&mut h.alg, &red, &m).unwrap().is_empty());
}

#[test]
fn a1_invariant_growth() {
    // one generator of degree 2 (the Casimir coset): polynomial growth of a 1-dimensional slice
    let (r, mut h) = setup(CartanType::A, 1, &[0]);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    let gens = torus_generators(&h.alg, &r).unwrap();
    let mut dims = Vec::new();
    for n in 0..=4 {
        let basis = coset_basis(&h.alg, &red, &gens, n);
        dims.push(w_elements(&mut h, &red, &basis).unwrap().0.len());
    }
    assert_eq!(dims, vec![1, 1, 2, 2, 3]);
}

#[test]
fn a2_coxeter_equivalence() {
    let (r, mut h) = setup(CartanType::A, 2, &[0, 1]);
    let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).unwrap());
    let gens = torus_generators(&h.alg, &r).unwrap();
    let basis = coset_basis(&h.alg, &red, &gens, 2);
    let eq = equivalence_on_basis(&mut h, &red, &basis).unwrap();
    assert!(eq.disagreements.is_empty(), "{:?}", eq);
    println!("{:?}", eq);
}
