mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use verma_core::int;
use verma_core::pbw::{PbwAlgebra, Selector};
use verma_core::rootdata::{bracket, ChevalleyElement, Generator, RootDatum};

use common::random_element;

fn element(n: usize, coeffs: &[i64]) -> ChevalleyElement {
    let gens = RootDatum::new(n).unwrap().generators();
    ChevalleyElement::from_terms(n, gens.into_iter().zip(coeffs.iter().map(|c| int(*c)))).unwrap()
}

fn coeff_triples() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (2usize..=4).prop_flat_map(|n| {
        let d = n * n - 1;
        let v = || proptest::collection::vec(-5i64..=5, d);
        (Just(n), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn jacobi_identity((n, a, b, c) in coeff_triples()) {
        let (x, y, z) = (element(n, &a), element(n, &b), element(n, &c));
        let s = bracket(&x, &bracket(&y, &z).unwrap()).unwrap()
            .add(&bracket(&y, &bracket(&z, &x).unwrap()).unwrap()).unwrap()
            .add(&bracket(&z, &bracket(&x, &y).unwrap()).unwrap()).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric((n, a, b, _c) in coeff_triples()) {
        let (x, y) = (element(n, &a), element(n, &b));
        let s = bracket(&x, &y).unwrap().add(&bracket(&y, &x).unwrap()).unwrap();
        prop_assert!(s.is_zero());
    }
}

#[test]
fn fundamental_representation_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let algebras: Vec<PbwAlgebra> = (2..=4).map(|n| PbwAlgebra::new(n).unwrap()).collect();
    for _ in 0..100 {
        let alg = &algebras[rng.gen_range(0..algebras.len())];
        let a = random_element(alg, &mut rng, 3, 4);
        let b = random_element(alg, &mut rng, 3, 4);
        let ab = alg.multiply(&a, &b).unwrap();
        let lhs = alg.fundamental_matrix(&ab).unwrap();
        let rhs = &alg.fundamental_matrix(&a).unwrap() * &alg.fundamental_matrix(&b).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [2, 3] {
        let alg = PbwAlgebra::new(n).unwrap();
        for _ in 0..25 {
            let a = random_element(&alg, &mut rng, 2, 3);
            let b = random_element(&alg, &mut rng, 2, 3);
            let c = random_element(&alg, &mut rng, 2, 3);
            let left = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
            let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn filtration_degree_is_additive() {
    // the associated graded algebra is a polynomial ring, hence a domain
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in [2, 3, 4] {
        let alg = PbwAlgebra::new(n).unwrap();
        for _ in 0..30 {
            let a = random_element(&alg, &mut rng, 3, 3);
            let b = random_element(&alg, &mut rng, 3, 3);
            let ab = alg.multiply(&a, &b).unwrap();
            match (a.filtration_degree(), b.filtration_degree()) {
                (Some(x), Some(y)) => assert_eq!(ab.filtration_degree(), Some(x + y)),
                _ => assert!(ab.is_zero()),
            }
        }
    }
}

#[test]
fn commutators_of_generators_match_the_lie_bracket() {
    for n in [2, 3, 4] {
        let alg = PbwAlgebra::new(n).unwrap();
        for &x in alg.generators() {
            for &y in alg.generators() {
                let lhs = alg.commutator(&alg.generator(x).unwrap(), &alg.generator(y).unwrap()).unwrap();
                let br = bracket(
                    &ChevalleyElement::generator(n, x).unwrap(),
                    &ChevalleyElement::generator(n, y).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, alg.lift(&br).unwrap(), "[{x}, {y}]");
            }
        }
    }
}

#[test]
fn pbw_counts() {
    for n in [2, 3, 4] {
        let alg = PbwAlgebra::new(n).unwrap();
        for l in 0..=3 {
            let all = alg.enumerate_pbw(l, Selector::All).unwrap();
            assert_eq!(all.len(), PbwAlgebra::truncated_dim(n * n - 1, l));
            let raising = alg.enumerate_pbw(l, Selector::Raising).unwrap();
            assert_eq!(raising.len(), PbwAlgebra::truncated_dim(n * (n - 1) / 2, l));
        }
    }
}

#[test]
fn straightening_a_reversed_word() {
    // E_12 E_21 = E_21 E_12 + H_1
    let alg = PbwAlgebra::new(2).unwrap();
    let out = alg.straighten(&[Generator::Unit(1, 2), Generator::Unit(2, 1)], 1).unwrap();
    let expected = alg
        .straighten(&[Generator::Unit(2, 1), Generator::Unit(1, 2)], 1)
        .unwrap()
        .add(&alg.generator(Generator::Cartan(1)).unwrap());
    assert_eq!(out, expected);
}
