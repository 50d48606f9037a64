use infmod_core::corpus::{pencil, random_nonsingular_l, random_pencil, reversed_pencil, zoo};
use infmod_core::matrix::{is_bicausal, jordan_nilpotent_blocks};
use infmod_core::{
    dim_ul, finite_structure_at_zero, gram_matrix, infinite_elementary_divisors, minor_valuation_profile,
    smith_at_infinity, smith_at_infinity_with, with_prime, Gf, PivotRule, PolyMatrix, Rational, Scalar, UBasis,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_factorization<F: Scalar>(l: &PolyMatrix<F>) {
    let w = l.to_rat().shift(-1);
    let f = smith_at_infinity(&w);
    assert!(f.verify(&w));
    assert!(is_bicausal(&f.p).unwrap() && is_bicausal(&f.q).unwrap());
    assert_eq!(f.profile, minor_valuation_profile(&w));
    assert_eq!(smith_at_infinity_with(&w, PivotRule::ColumnMajor).profile, f.profile);
    let alphas = infinite_elementary_divisors(l).unwrap();
    assert_eq!(alphas, f.profile.alphas);
    let basis = UBasis::compute(l).unwrap();
    assert_eq!(basis.dim(), alphas.iter().sum::<usize>());
    assert_eq!(dim_ul(l).unwrap(), basis.dim());
    assert_eq!(jordan_nilpotent_blocks(basis.shift_matrix()).unwrap(), alphas);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_over_rationals(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_factorization(&random_nonsingular_l::<Rational, _>(&mut rng, n, 3));
    }

    #[test]
    fn factorization_over_gf101(seed in any::<u64>(), n in 1usize..=3) {
        with_prime(101, || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            check_factorization(&random_nonsingular_l::<Gf, _>(&mut rng, n, 3));
        })
        .unwrap();
    }

    #[test]
    fn pencil_structure_matches_reversal(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a0, a1) = random_pencil::<Rational, _>(&mut rng, n);
        let mut at_infinity = infinite_elementary_divisors(&pencil(&a0, &a1)).unwrap();
        let mut at_zero = finite_structure_at_zero(&reversed_pencil(&a0, &a1)).unwrap();
        at_infinity.sort_unstable();
        at_zero.sort_unstable();
        prop_assert_eq!(at_infinity, at_zero);
    }

    #[test]
    fn gram_is_invertible(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_nonsingular_l::<Rational, _>(&mut rng, n, 3);
        let b = UBasis::compute(&l).unwrap();
        let bt = UBasis::compute(&l.transpose()).unwrap();
        prop_assert_eq!(b.dim(), bt.dim());
        let g = gram_matrix(&bt, &b).unwrap();
        prop_assert_eq!(infmod_core::matrix::rank(&g), b.dim());
    }
}

#[test]
fn zoo_is_consistent() {
    for (name, l) in zoo::<Rational>() {
        check_factorization(&l);
        let t = infinite_elementary_divisors(&l.transpose()).unwrap();
        assert_eq!(t, infinite_elementary_divisors(&l).unwrap(), "{name}");
    }
}
