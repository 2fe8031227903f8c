#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use verma_core::int;
use verma_core::pbw::{Monomial, PbwAlgebra, UeaElement};
use verma_core::rootdata::ParabolicCharacter;

/// Random element with up to `terms` monomials of degree at most `deg`.
pub fn random_element(alg: &PbwAlgebra, rng: &mut ChaCha8Rng, deg: u32, terms: usize) -> UeaElement {
    let mut out = UeaElement::zero();
    let count = rng.gen_range(1..=terms);
    for _ in 0..count {
        let mut exps = vec![0u32; alg.dim()];
        let d = rng.gen_range(0..=deg);
        for _ in 0..d {
            exps[rng.gen_range(0..alg.dim())] += 1;
        }
        let c = rng.gen_range(-4i64..=4);
        out.add_term(Monomial::from_exps(exps), int(c));
    }
    out
}

pub fn pc(n: usize, flag: &[usize], ell: &[i64]) -> ParabolicCharacter {
    ParabolicCharacter::from_ints(n, flag, ell).unwrap()
}

/// Small characters of every flag type for `n <= 3`, across sign patterns.
pub fn small_characters() -> Vec<ParabolicCharacter> {
    vec![
        pc(2, &[1], &[3]),
        pc(2, &[1], &[0]),
        pc(2, &[1], &[-2]),
        pc(3, &[1], &[2]),
        pc(3, &[1], &[-1]),
        pc(3, &[2], &[1]),
        pc(3, &[1, 2], &[1, 1]),
        pc(3, &[1, 2], &[2, 0]),
        pc(3, &[1, 2], &[2, -1]),
        pc(3, &[1, 2], &[-1, -2]),
    ]
}
