use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wq_core::hopf::Hopf;
use wq_core::lie::{CartanType, RootSystem, WeylElement};
use wq_core::linalg::rat;
use wq_core::pbw::{checks::random_elem, Algebra, Form};
use wq_core::realization::Realization;
use wq_core::report::{self, SessionConfig};
use wq_core::slice;
use wq_core::wq::{IdealReducer, WhittakerCharacter};

fn a2_coxeter() -> Realization {
    Realization::new(&RootSystem::new(CartanType::A, 2).unwrap(), &[0, 1], None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisted_product_is_associative(seed in any::<u64>()) {
        let r = a2_coxeter();
        let mut alg = Algebra::for_realization(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_elem(&alg, &mut rng, 2, 2);
        let y = random_elem(&alg, &mut rng, 2, 2);
        let z = random_elem(&alg, &mut rng, 2, 2);
        let xy = alg.mul(&x, &y).unwrap();
        let yz = alg.mul(&y, &z).unwrap();
        prop_assert_eq!(alg.mul(&xy, &z).unwrap(), alg.mul(&x, &yz).unwrap());
    }

    #[test]
    fn normal_forms_round_trip(seed in any::<u64>()) {
        let r = a2_coxeter();
        let mut alg = Algebra::for_realization(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_elem(&alg, &mut rng, 3, 3);
        let er = alg.to_e_right(&x);
        prop_assert_eq!(alg.from_e_right(&er), x.clone());
        let p = alg.psi(&x, Form::Standard);
        prop_assert_eq!(alg.psi_inv(&p, Form::Standard), x);
    }

    #[test]
    fn counit_is_multiplicative_and_antipode_preserves_it(seed in any::<u64>()) {
        let r = a2_coxeter();
        let mut h = Hopf::for_realization(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_elem(&h.alg, &mut rng, 2, 2);
        let y = random_elem(&h.alg, &mut rng, 2, 2);
        let xy = h.alg.mul(&x, &y).unwrap();
        prop_assert_eq!(h.counit(&xy), &h.counit(&x) * &h.counit(&y));
        let sx = h.antipode(&x).unwrap();
        prop_assert_eq!(h.counit(&sx), h.counit(&x));
        prop_assert_eq!(h.antipode_inverse(&sx).unwrap(), x);
    }

    #[test]
    fn reduction_kills_left_ideal(seed in any::<u64>()) {
        let r = Realization::new(&RootSystem::new(CartanType::A, 1).unwrap(), &[0], None).unwrap();
        let mut alg = Algebra::for_realization(&r).unwrap();
        let red = IdealReducer::new(&alg, WhittakerCharacter::ones(&r).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_elem(&alg, &mut rng, 3, 2);
        let g = red.generator(&alg, 0);
        let xg = alg.mul(&x, &g).unwrap();
        prop_assert!(red.reduce(&mut alg, &xg).unwrap().is_zero());
        let rx = red.reduce(&mut alg, &x).unwrap();
        let back = alg.from_e_right(&rx);
        prop_assert_eq!(red.reduce(&mut alg, &back).unwrap(), rx);
    }

    #[test]
    fn weyl_words_are_reduced(idx in 0usize..24) {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let all = WeylElement::all(&rs);
        let w = &all[idx % all.len()];
        let word = w.reduced_word(&rs);
        prop_assert_eq!(word.len(), w.length(&rs));
        prop_assert_eq!(&WeylElement::from_word(&rs, &word).unwrap(), w);
        prop_assert!(w.mul(&w.inverse(&rs)).is_identity());
    }

    #[test]
    fn root_subgroups_are_unimodular(num in -20i64..20, den in 1i64..9, which in 0usize..6) {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let alpha = rs.positive[which].clone();
        let t = rat(num, den);
        prop_assert_eq!(slice::root_subgroup_element(4, &alpha, &t).unwrap().det(), rat(1, 1));
        if num != 0 {
            prop_assert_eq!(slice::weyl_representative(4, &alpha, &t).unwrap().det(), rat(1, 1));
        }
    }

    #[test]
    fn reports_are_deterministic(seed in 0u64..1000) {
        let mut cfg = SessionConfig::minimal("A", 2, vec![1, 2]);
        cfg.seed = seed;
        cfg.bounds.assoc_triples = 3;
        let a = report::run("algebra-check", &cfg).unwrap().to_json();
        let b = report::run("algebra-check", &cfg).unwrap().to_json();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn config_echo_round_trips(rank in 1usize..4, seed in any::<u64>(), deg in 0u32..5) {
        let mut cfg = SessionConfig::minimal("A", rank, (1..=rank).collect());
        cfg.seed = seed;
        cfg.bounds.invariant_degree = deg;
        cfg.specialize = vec!["3/2".into()];
        let text = toml::to_string(&cfg).unwrap();
        prop_assert_eq!(SessionConfig::parse(&text).unwrap(), cfg);
    }
}
