#![allow(dead_code)]

use gerstenhaber::bracket::{Engine, SmallCochain};
use gerstenhaber::oracle::BarCochain;
use gerstenhaber::{AlgElem, Algebra};
use rand::Rng;

/// A random integer combination of the admissible values in degree `deg`.
pub fn random_cochain<R: Rng>(e: &Engine, deg: usize, rng: &mut R) -> SmallCochain {
    let mut v = AlgElem::zero(e.alg());
    for m in e.admissible(deg) {
        let c = e.alg().scalar(rng.gen_range(-3..=3));
        v.add_assign(&AlgElem::term(e.alg(), m, c));
    }
    e.cochain(deg, v).unwrap()
}

/// A random integer combination of the cocycle basis monomials.
pub fn random_cocycle<R: Rng>(e: &Engine, deg: usize, rng: &mut R) -> SmallCochain {
    let mut v = AlgElem::zero(e.alg());
    for m in e.admissible(deg) {
        let f = e.basis_cochain(deg, m).unwrap();
        if e.is_cocycle(&f) {
            v.add_assign(&f.value.scale(&e.alg().scalar(rng.gen_range(-3..=3))));
        }
    }
    e.cochain(deg, v).unwrap()
}

/// Monomials whose basis cochain is a cocycle.
pub fn cocycle_monomials(e: &Engine, deg: usize) -> Vec<SmallCochain> {
    e.admissible(deg)
        .into_iter()
        .map(|m| e.basis_cochain(deg, m).unwrap())
        .filter(|f| e.is_cocycle(f))
        .collect()
}

/// A bar cochain with small random integer entries.
pub fn random_bar<R: Rng>(alg: &Algebra, deg: usize, rng: &mut R) -> BarCochain {
    let monos = alg.monomials();
    BarCochain::from_fn(alg, deg, |_| {
        let mut v = AlgElem::zero(alg);
        for &m in &monos {
            if rng.gen_bool(0.3) {
                v.add_assign(&AlgElem::term(alg, m, alg.scalar(rng.gen_range(-2..=2))));
            }
        }
        v
    })
}

pub fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
