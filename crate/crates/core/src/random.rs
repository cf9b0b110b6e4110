//! Seeded generators of small polynomials and factorizations for property
//! tests and benchmarks.

use alloc::vec::Vec;

use rand::Rng;

use crate::factorization::{MatrixFactorization, Morphism};
use crate::poly::{rational, Exponents, Monomial, Polynomial, VarId};
use crate::standard::{standard_factorize, StandardVariant, SummandList};

const VARS: [&str; 3] = ["x", "y", "z"];

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, max_degree: u32) -> Monomial {
    let mut coeff = 0;
    while coeff == 0 {
        coeff = rng.random_range(-3..=3);
    }
    let mut pairs = Vec::new();
    let degree = rng.random_range(0..=max_degree);
    for _ in 0..degree {
        let v = VARS[rng.random_range(0..VARS.len())];
        pairs.push((VarId::new(v).expect("valid name"), 1));
    }
    Monomial::new(rational(coeff), Exponents::from_pairs(pairs)).expect("nonzero")
}

/// A nonzero polynomial with 1 to `max_terms` terms of degree at most 2.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, max_terms: usize) -> Polynomial {
    loop {
        let n = rng.random_range(1..=max_terms.max(1));
        let p = Polynomial::from_terms((0..n).map(|_| random_monomial(rng, 2)));
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_pairs<R: Rng + ?Sized>(rng: &mut R, k: usize) -> SummandList {
    let pairs = (0..k)
        .map(|_| (random_polynomial(rng, 2), random_polynomial(rng, 2)))
        .collect();
    SummandList::new(pairs).expect("nonzero summands")
}

fn random_variant<R: Rng + ?Sized>(rng: &mut R) -> StandardVariant {
    StandardVariant::ALL[rng.random_range(0..StandardVariant::ALL.len())]
}

/// Two factorizations of one polynomial, both of size `size` (1 to 4).
///
/// Sizes 1, 2, 4 come from the standard method; size 3 is a `1 ⊕ 2` direct
/// sum for `f = (g1 + g2) h`.
pub fn random_factorization_pair<R: Rng + ?Sized>(
    rng: &mut R,
    size: usize,
) -> (MatrixFactorization, MatrixFactorization) {
    let build = |rng: &mut R, list: &SummandList| {
        let x = standard_factorize(list, random_variant(rng));
        if rng.random_bool(0.5) {
            x.swapped()
        } else {
            x
        }
    };
    match size {
        1 | 2 | 4 => {
            let k = match size {
                1 => 1,
                2 => 2,
                _ => 3,
            };
            let list = random_pairs(rng, k);
            (build(rng, &list), build(rng, &list))
        }
        3 => {
            let g1 = random_polynomial(rng, 2);
            let h = random_polynomial(rng, 2);
            let (g2, sum) = loop {
                let g2 = random_polynomial(rng, 2);
                let sum = &g1 + &g2;
                if !sum.is_zero() {
                    break (g2, sum);
                }
            };
            let mut one = || {
                let small = MatrixFactorization::trivial(sum.clone(), h.clone());
                let list = SummandList::new(alloc::vec![
                    (g1.clone(), h.clone()),
                    (g2.clone(), h.clone())
                ])
                .expect("nonzero summands");
                let two = standard_factorize(&list, random_variant(rng));
                small.direct_sum(&two).expect("same target")
            };
            (one(), one())
        }
        _ => panic!("random factorizations come in sizes 1 to 4, got {size}"),
    }
}

pub fn random_factorization<R: Rng + ?Sized>(rng: &mut R, size: usize) -> MatrixFactorization {
    random_factorization_pair(rng, size).0
}

/// An identity, scalar or composite-scalar endomorphism of `x`.
pub fn random_endomorphism<R: Rng + ?Sized>(rng: &mut R, x: &MatrixFactorization) -> Morphism {
    match rng.random_range(0..3) {
        0 => Morphism::identity(x),
        1 => Morphism::scalar(x, &random_polynomial(rng, 2)),
        _ => {
            let a = Morphism::scalar(x, &random_polynomial(rng, 2));
            let b = Morphism::scalar(x, &random_polynomial(rng, 2));
            a.compose(&b).expect("same object")
        }
    }
}
