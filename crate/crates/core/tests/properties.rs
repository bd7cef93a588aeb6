mod common;

use common::{random_bar, random_cochain, random_cocycle, sign};
use gerstenhaber::bracket::Engine;
use gerstenhaber::hopf::TrivialCochain;
use gerstenhaber::oracle::{
    bracket_bar, class_equal, cup_bar, hochschild_differential, ComparisonMaps,
};
use gerstenhaber::{AlgElem, Algebra, AlgebraKind, Mono};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![Just(AlgebraKind::TruncPoly), Just(AlgebraKind::Taft)]
}

fn mono(p: usize) -> impl Strategy<Value = Mono> {
    (0..p, 0..p).prop_map(|(x, g)| Mono::new(x, g))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn taft_product_is_associative(p in prop::sample::select(vec![3usize, 5, 7]), seed: u64) {
        let t = Algebra::taft(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || Mono::new(rng.gen_range(0..p), rng.gen_range(0..p));
        let (a, b, c) = (AlgElem::mono(&t, pick()), AlgElem::mono(&t, pick()), AlgElem::mono(&t, pick()));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn antipode_reverses_products(a in mono(3), b in mono(3)) {
        let t = Algebra::taft(3).unwrap();
        let (a, b) = (AlgElem::mono(&t, a), AlgElem::mono(&t, b));
        let lhs = a.mul(&b).antipode().unwrap();
        let rhs = b.antipode().unwrap().mul(&a.antipode().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn comultiplication_is_multiplicative(a in mono(5), b in mono(5)) {
        let t = Algebra::taft(5).unwrap();
        let (a, b) = (AlgElem::mono(&t, a), AlgElem::mono(&t, b));
        let lhs = a.mul(&b).comultiply().unwrap();
        let rhs = a.comultiply().unwrap().mul(&b.comultiply().unwrap());
        prop_assert_eq!(lhs.terms(), rhs.terms());
    }

    #[test]
    fn bar_differential_squares_to_zero(k in kind(), deg in 0usize..=2, seed: u64) {
        let alg = Algebra::new(k, 3).unwrap();
        let f = random_bar(&alg, deg, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(hochschild_differential(&hochschild_differential(&f)).is_zero());
    }

    #[test]
    fn bar_bracket_antisymmetric_and_jacobi(m in 0usize..=2, n in 0usize..=2, l in 0usize..=1, seed: u64) {
        prop_assume!(m + n > 0 && n + l > 0 && l + m > 0);
        let a = Algebra::truncated(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_bar(&a, m, &mut rng);
        let g = random_bar(&a, n, &mut rng);
        let h = random_bar(&a, l, &mut rng);
        let fg = bracket_bar(&f, &g).unwrap();
        let gf = bracket_bar(&g, &f).unwrap();
        prop_assert!(fg.add(&gf.scale(&a.scalar(sign((m + 1) * (n + 1))))).unwrap().is_zero());

        let cyc = |x: &_, y: &_, z: &_, dx: usize, dz: usize| {
            bracket_bar(x, &bracket_bar(y, z).unwrap()).unwrap().scale(&a.scalar(sign((dx + 1) * (dz + 1))))
        };
        let j = cyc(&f, &g, &h, m, l).add(&cyc(&g, &h, &f, n, m)).unwrap().add(&cyc(&h, &f, &g, l, n)).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn differential_is_a_derivation_of_cup(m in 0usize..=1, n in 0usize..=1, seed: u64) {
        let a = Algebra::taft(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_bar(&a, m, &mut rng);
        let g = random_bar(&a, n, &mut rng);
        let lhs = hochschild_differential(&cup_bar(&f, &g).unwrap());
        let rhs = cup_bar(&hochschild_differential(&f), &g).unwrap().scale(&a.scalar(sign(n))).add(
            &cup_bar(&f, &hochschild_differential(&g)).unwrap(),
        ).unwrap();
        prop_assert_eq!(lhs.entries(), rhs.entries());
    }

    #[test]
    fn small_bracket_antisymmetric(k in kind(), m in 0usize..=3, n in 0usize..=3, seed: u64) {
        prop_assume!(m + n > 0);
        let e = Engine::new(&Algebra::new(k, 3).unwrap(), 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cochain(&e, m, &mut rng);
        let g = random_cochain(&e, n, &mut rng);
        let fg = e.bracket(&f, &g).unwrap().value;
        let gf = e.bracket(&g, &f).unwrap().value;
        prop_assert!(fg.add(&gf.scale(&e.alg().scalar(sign((m + 1) * (n + 1))))).is_zero());
    }

    #[test]
    fn small_bracket_preserves_cocycles(k in kind(), m in 0usize..=3, n in 0usize..=3, seed: u64) {
        prop_assume!(m + n > 0);
        let e = Engine::new(&Algebra::new(k, 5).unwrap(), 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cocycle(&e, m, &mut rng);
        let g = random_cocycle(&e, n, &mut rng);
        prop_assert!(e.is_cocycle(&e.bracket(&f, &g).unwrap()));
        prop_assert!(e.is_cocycle(&e.cup(&f, &g)));
    }

    #[test]
    fn cup_graded_commutative_on_classes(k in kind(), m in 0usize..=3, n in 0usize..=3, seed: u64) {
        let e = Engine::new(&Algebra::new(k, 3).unwrap(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cocycle(&e, m, &mut rng);
        let g = random_cocycle(&e, n, &mut rng);
        let fg = e.cup(&f, &g);
        let mut gf = e.cup(&g, &f);
        gf.value = gf.value.scale(&e.alg().scalar(sign(m * n)));
        prop_assert_eq!(e.to_class(&fg).unwrap(), e.to_class(&gf).unwrap());
    }

    #[test]
    fn class_equality_ignores_coboundaries(k in kind(), deg in 1usize..=2, seed: u64) {
        let alg = Algebra::new(k, 3).unwrap();
        let e = Engine::new(&alg, 1).unwrap();
        let maps = ComparisonMaps::build(e.resolution(), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = maps.pullback(&random_cocycle(&e, deg, &mut rng)).unwrap();
        let shift = hochschild_differential(&random_bar(&alg, deg - 1, &mut rng));
        prop_assert!(class_equal(&f, &f.add(&shift).unwrap()).unwrap());
    }

    #[test]
    fn trivial_coboundary_squares_to_zero(deg in 0usize..=3, seed: u64) {
        let t = Algebra::taft(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = TrivialCochain::from_fn(&t, deg, |_| t.scalar(rng.gen_range(-2..=2)));
        prop_assert!(f.coboundary().coboundary().is_zero());
    }
}
