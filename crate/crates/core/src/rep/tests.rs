use super::*;
use crate::coeff::{qint, Coeff, SubscriptedQ};
use crate::hopf::Hopf;
use crate::lie::{CartanType, RootSystem};
use crate::pbw::Algebra;
use crate::realization::Realization;

fn a(rank: usize) -> RootSystem {
    RootSystem::new(CartanType::A, rank).unwrap()
}

#[test]
fn a1_standard_spin_half() {
    let rs = a(1);
    let mut h = Hopf::standard(Algebra::standard(&rs, &[0], 1).unwrap()).unwrap();
    let m = WeightModule::a1_spin(&rs, 1, 1).unwrap();
    assert!(m.check_relations().failures.is_empty());
    let act = Action::new(&h.alg, &m).unwrap();
    let data = RData::standard(1);
    assert!(check_quasitriangular(&mut h, &data, &act, &act).unwrap().pass);
    assert!(check_ybe(&mut h, &data, &act).unwrap().pass);
}

#[test]
fn a1_twisted_spin_modules() {
    let rs = a(1);
    let r = Realization::new(&rs, &[0], None).unwrap();
    let mut h = Hopf::for_realization(&r).unwrap();
    let data = RData::twisted(&r.consts.cayley);
    for n in 1..=2 {
        let m = WeightModule::a1_spin(&rs, h.alg.d, n).unwrap();
        assert!(m.check_relations().failures.is_empty());
        let act = Action::new(&h.alg, &m).unwrap();
        let line = check_quasitriangular(&mut h, &data, &act, &act).unwrap();
        assert!(line.pass, "{:?}", line);
    }
    let m = WeightModule::a1_spin(&rs, h.alg.d, 1).unwrap();
    let act = Action::new(&h.alg, &m).unwrap();
    assert!(check_ybe(&mut h, &data, &act).unwrap().pass);
}

#[test]
fn spin_modules_are_irreducible() {
    // commutant of X^+, X^- is the scalars
    let rs = a(1);
    for n in 1..=4 {
        let m = WeightModule::a1_spin(&rs, 1, n).unwrap();
        let dim = m.dim();
        let mut rows = Vec::new();
        for g in [&m.xp[0], &m.xm[0]] {
            for r in 0..dim {
                for c in 0..dim {
                    // (g A - A g)_(r,c) as a linear form in the entries of A
                    let mut row = vec![Coeff::zero(); dim * dim];
                    for k in 0..dim {
                        row[k * dim + c] = &row[k * dim + c] + g.get(r, k);
                        row[r * dim + k] = &row[r * dim + k] - g.get(k, c);
                    }
                    rows.push(row);
                }
            }
        }
        let sys = CMat::from_rows(rows);
        assert_eq!(sys.kernel().len(), 1, "spin {}/2", n);
    }
}

#[test]
fn a2_coxeter_vector() {
    let rs = a(2);
    let r = Realization::new(&rs, &[0, 1], None).unwrap();
    let mut h = Hopf::for_realization(&r).unwrap();
    let data = RData::twisted(&r.consts.cayley);
    for dual in [false, true] {
        let m = WeightModule::a2_vector(&rs, h.alg.d, dual).unwrap();
        assert!(m.check_relations().failures.is_empty());
    }
    let m = WeightModule::a2_vector(&rs, h.alg.d, false).unwrap();
    let act = Action::new(&h.alg, &m).unwrap();
    assert!(check_quasitriangular(&mut h, &data, &act, &act).unwrap().pass);
    assert!(check_ybe(&mut h, &data, &act).unwrap().pass);
    for k in 0..3 {
        assert!(check_comult(&mut h, &data, &act, &act, k, Conjugator::After).unwrap().pass);
    }
    let before = check_comult(&mut h, &data, &act, &act, 1, Conjugator::Before).unwrap();
    assert!(!before.pass);
    // the first root has nothing before it, the last nothing after it
    assert!(check_comult(&mut h, &data, &act, &act, 0, Conjugator::Before).unwrap().pass);
}

#[test]
fn a2_standard_comult_both_words() {
    let rs = a(2);
    for word in [vec![0, 1, 0], vec![1, 0, 1]] {
        let mut h = Hopf::standard(Algebra::standard(&rs, &word, 3).unwrap()).unwrap();
        let m = WeightModule::a2_vector(&rs, 3, false).unwrap();
        let act = Action::new(&h.alg, &m).unwrap();
        let data = RData::standard(2);
        assert!(check_quasitriangular(&mut h, &data, &act, &act).unwrap().pass);
        assert!(check_comult(&mut h, &data, &act, &act, 1, Conjugator::After).unwrap().pass);
        for which in [Conjugator::Before, Conjugator::BeforeInverted] {
            assert!(!check_comult(&mut h, &data, &act, &act, 1, which).unwrap().pass);
        }
    }
}

#[test]
fn trivial_module_r_is_identity() {
    let rs = a(2);
    let r = Realization::new(&rs, &[0, 1], None).unwrap();
    let mut alg = Algebra::for_realization(&r).unwrap();
    let m = WeightModule::trivial(&rs, alg.d);
    let act = Action::new(&alg, &m).unwrap();
    let data = RData::twisted(&r.consts.cayley);
    assert_eq!(data.r_matrix(&mut alg, &act, &act).unwrap(), CMat::identity(1));
}

#[test]
fn verma_a1_raising_pattern() {
    // E F^k v = [k]_q [lambda - k + 1]_q F^(k-1) v, computed from the q-integer formula
    let rs = a(1);
    let mut alg = Algebra::standard(&rs, &[0], 1).unwrap();
    let lambda = 3;
    let m = WeightModule::verma(&mut alg, &[lambda], 5).unwrap();
    assert_eq!(m.dim(), 6);
    let sub = SubscriptedQ::new(1, 1);
    for k in 1..6usize {
        let expect = &qint(k as i64, sub) * &qint(lambda - k as i64 + 1, sub);
        assert_eq!(m.xp[0].get(k - 1, k), &expect, "k = {}", k);
        assert_eq!(m.xm[0].get(k, k - 1), &Coeff::one());
    }
    assert!(m.check_relations().failures.is_empty());
}

#[test]
fn verma_a2_depth_two() {
    // f-monomials of height <= 2 in A2: 1, f1, f2, f12, f1^2, f2^2, f1 f2
    let rs = a(2);
    let mut alg = Algebra::standard(&rs, &[0, 1, 0], 1).unwrap();
    let m = WeightModule::verma(&mut alg, &[1, 1], 2).unwrap();
    assert_eq!(m.dim(), 7);
    assert!(m.check_relations().failures.is_empty());
}

#[test]
fn l_operator_a1() {
    let rs = a(1);
    let r = Realization::new(&rs, &[0], None).unwrap();
    let mut h = Hopf::for_realization(&r).unwrap();
    let data = RData::twisted(&r.consts.cayley);
    let m = WeightModule::a1_spin(&rs, h.alg.d, 1).unwrap();
    let act = Action::new(&h.alg, &m).unwrap();
    let line = l_square_check(&mut h.alg, &data, &act, 0).unwrap();
    assert!(line.pass, "{:?}", line);
    let l2 = h.alg.torus(h.alg.l_exp(0, 2).unwrap());
    let rep = ad_orbit_probe(&mut h, &l2, 8).unwrap();
    assert!(rep.stabilized, "{:?}", rep);
}

#[test]
fn l_operator_a1_standard() {
    let rs = a(1);
    let mut alg = Algebra::standard(&rs, &[0], 2).unwrap();
    let m = WeightModule::a1_spin(&rs, 2, 1).unwrap();
    let act = Action::new(&alg, &m).unwrap();
    let lv = l_operator(&mut alg, &RData::standard(1), &act).unwrap();
    // lowest weight diagonal entry carries e f terms
    assert!(lv.get(1, 1).len() > 1);
    assert!(l_square_check(&mut alg, &RData::standard(1), &act, 0).unwrap().pass);
}

