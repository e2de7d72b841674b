//! The action of Aut(G) x F_p^* on classes, and invariance of the classifier.

use h2orbits::aut_oracle::aut_generators;
use h2orbits::cohomology::{act, kernel_m, kernel_t, wedge_factorize, wedge_is_decomposable};
use h2orbits::{classify, AutElement, GroupType, HabClass, WedgeClass};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Case {
    g: GroupType,
    word: Vec<usize>,
    word2: Vec<usize>,
    h: Vec<i64>,
    f: Vec<u64>,
    gg: Vec<u64>,
}

fn case() -> impl Strategy<Value = Case> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 2usize..=4)
        .prop_flat_map(|(p, d)| {
            let lo = if p == 2 { 2 } else { 1 };
            let e = prop::collection::vec(lo..=4u32, d);
            let coeffs = prop::collection::vec(0..p, d);
            (
                Just(p),
                e,
                prop::collection::vec(0usize..64, 0..6),
                prop::collection::vec(0usize..64, 0..6),
                prop::collection::vec(0..p as i64, d),
                coeffs.clone(),
                coeffs,
            )
        })
        .prop_map(|(p, e, word, word2, h, f, gg)| Case {
            g: GroupType::new(p, &e).unwrap(),
            word,
            word2,
            h,
            f,
            gg,
        })
}

fn element(g: &GroupType, word: &[usize]) -> AutElement {
    let gens = aut_generators(g);
    word.iter()
        .fold(AutElement::identity(g), |acc, &i| acc.compose(&gens[i % gens.len()]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn action_is_a_left_action(c in case()) {
        let (a, b) = (element(&c.g, &c.word), element(&c.g, &c.word2));
        let h = HabClass::new(&c.g, &c.h).unwrap();
        let w = WedgeClass::wedge(&c.g, &c.f, &c.gg);
        let ab = a.compose(&b).unwrap();
        let (h1, w1) = act(&b, &h, &w).unwrap();
        let lhs = act(&a, &h1, &w1).unwrap();
        prop_assert_eq!(act(&ab, &h, &w).unwrap(), lhs);
        prop_assert_eq!(act(&AutElement::identity(&c.g), &h, &w).unwrap(), (h, w));
    }

    #[test]
    fn kernels_are_equivariant(c in case()) {
        let a = element(&c.g, &c.word);
        let h = HabClass::new(&c.g, &c.h).unwrap();
        let w = WedgeClass::wedge(&c.g, &c.f, &c.gg);
        let (h2, w2) = act(&a, &h, &w).unwrap();
        prop_assert_eq!(kernel_t(&h2), a.apply_subgroup(&kernel_t(&h)));
        prop_assert_eq!(kernel_m(&w2).unwrap(), a.apply_subgroup(&kernel_m(&w).unwrap()));
    }

    #[test]
    fn classifier_is_constant_on_orbits(c in case()) {
        let a = element(&c.g, &c.word);
        let h = HabClass::new(&c.g, &c.h).unwrap();
        let w = WedgeClass::wedge(&c.g, &c.f, &c.gg);
        let (h2, w2) = act(&a, &h, &w).unwrap();
        prop_assert_eq!(classify(&h2, &w2).unwrap(), classify(&h, &w).unwrap());
    }

    #[test]
    fn wedges_of_two_functionals_factor_back(c in case()) {
        let w = WedgeClass::wedge(&c.g, &c.f, &c.gg);
        prop_assert!(wedge_is_decomposable(&w));
        prop_assert!(w.rank() == 0 || w.rank() == 2);
        if w.is_zero() {
            prop_assert!(wedge_factorize(&w).is_err());
        } else {
            let (f, g) = wedge_factorize(&w).unwrap();
            prop_assert_eq!(WedgeClass::wedge(&c.g, &f, &g), w);
        }
    }

    #[test]
    fn abelian_classes_depend_on_the_functional_only(c in case()) {
        let h = HabClass::new(&c.g, &c.h).unwrap();
        let v = classify(&h, &WedgeClass::zero(&c.g)).unwrap();
        let t = kernel_t(&h);
        prop_assert_eq!(t.log_index(), u32::from(!h.is_zero()));
        let a = element(&c.g, &c.word);
        let (h2, _) = act(&a, &h, &WedgeClass::zero(&c.g)).unwrap();
        prop_assert_eq!(classify(&h2, &WedgeClass::zero(&c.g)).unwrap(), v);
    }
}

#[test]
fn scalars_act_by_weights_one_and_two() {
    let g = GroupType::new(5, &[1, 2, 3]).unwrap();
    let d = g.rank();
    let id: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    let a = AutElement::new(&g, &id, 2).unwrap();
    let h = HabClass::new(&g, &[1, 3, 0]).unwrap();
    let w = WedgeClass::from_entries(&g, &[(0, 1, 1), (1, 2, 4)]).unwrap();
    let (h2, w2) = act(&a, &h, &w).unwrap();
    assert_eq!(h2.functional(), &[2, 1, 0]);
    assert_eq!(w2, WedgeClass::from_entries(&g, &[(0, 1, 2), (1, 2, 3)]).unwrap());
}

#[test]
fn non_endomorphisms_are_rejected() {
    let g = GroupType::new(3, &[1, 2]).unwrap();
    // entry (1, 0) must be divisible by 3: Z/3 -> Z/9 lands in 3 Z/9
    assert!(AutElement::new(&g, &[vec![1, 0], vec![1, 1]], 1).is_err());
    assert!(AutElement::new(&g, &[vec![1, 0], vec![3, 1]], 1).is_ok());
    assert!(AutElement::new(&g, &[vec![1, 0], vec![0, 3]], 1).is_err());
    assert!(AutElement::new(&g, &[vec![1, 0], vec![0, 1]], 3).is_err());
}
