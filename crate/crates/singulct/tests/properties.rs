//! Property tests: algebraic identities that must hold exactly, plus
//! brute-force oracles for the enumeration engine.

use proptest::prelude::*;

use singulct::exact::ideal::{MonomialIdeal, WeightVector};
use singulct::exact::monomial::Monomial;
use singulct::exact::parse::parse_polynomial;
use singulct::exact::poly::Polynomial;
use singulct::exact::rational::rat_int;
use singulct::expsum::{
    exp_sum_from_histogram, residue_histogram, PrimePowerModulus, SubschemeSpec,
};

fn arb_poly(n_vars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n_vars), -9i64..=9),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            n_vars,
            terms
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(e, c)| (e, rat_int(c))),
        )
    })
}

fn arb_ideal(n_vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=5u32, n_vars), 1..=5)
        .prop_map(move |gens| MonomialIdeal::new(n_vars, gens.into_iter().map(Monomial).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_print_parse_is_identity(f in arb_poly(2, 6, 5)) {
        let names = ["x".to_string(), "y".to_string()];
        let printed = f.to_string_with(&["x", "y"]);
        let reparsed = parse_polynomial(&printed, &names).unwrap();
        prop_assert_eq!(&reparsed, &f);
        // And the printed form is a fixed point of print ∘ parse.
        prop_assert_eq!(reparsed.to_string_with(&["x", "y"]), printed);
    }

    #[test]
    fn derivative_is_linear(f in arb_poly(2, 5, 4), g in arb_poly(2, 5, 4)) {
        let sum = f.add(&g);
        for i in 0..2 {
            let lhs = sum.partial_derivative(i).unwrap();
            let rhs = f.partial_derivative(i).unwrap().add(&g.partial_derivative(i).unwrap());
            prop_assert_eq!(&lhs, &rhs);
        }
    }

    #[test]
    fn derivative_product_rule(f in arb_poly(2, 4, 3), g in arb_poly(2, 4, 3)) {
        let prod = f.mul(&g);
        for i in 0..2 {
            let lhs = prod.partial_derivative(i).unwrap();
            let rhs = f
                .partial_derivative(i)
                .unwrap()
                .mul(&g)
                .add(&f.mul(&g.partial_derivative(i).unwrap()));
            prop_assert_eq!(&lhs, &rhs);
        }
    }

    #[test]
    fn eval_mod_is_additive(
        f in arb_poly(2, 5, 4),
        g in arb_poly(2, 5, 4),
        x in 0u64..27,
        y in 0u64..27,
    ) {
        let modulus = 27u64;
        let sum = f.add(&g);
        let lhs = sum.eval_mod(&[x, y], modulus).unwrap();
        let rhs = (f.eval_mod(&[x, y], modulus).unwrap() + g.eval_mod(&[x, y], modulus).unwrap()) % modulus;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_mod_matches_exact_evaluation(f in arb_poly(2, 5, 4), x in 0u64..25, y in 0u64..25) {
        let modulus = 25u64;
        let exact = f
            .eval(&[rat_int(x as i64), rat_int(y as i64)])
            .unwrap();
        let reduced = exact.numer().clone() % num_bigint::BigInt::from(modulus);
        let want = ((reduced + num_bigint::BigInt::from(modulus)) % num_bigint::BigInt::from(modulus))
            .to_string()
            .parse::<u64>()
            .unwrap();
        prop_assert_eq!(f.eval_mod(&[x, y], modulus).unwrap(), want);
    }

    #[test]
    fn ord_w_is_additive_on_products(
        i in arb_ideal(2),
        j in arb_ideal(2),
        w in prop::collection::vec(0u64..6, 2),
    ) {
        prop_assume!(w.iter().any(|&x| x > 0));
        let w = WeightVector::new(w).unwrap();
        let oi = w.ord_ideal(&i).unwrap().as_finite().unwrap();
        let oj = w.ord_ideal(&j).unwrap().as_finite().unwrap();
        let op = w.ord_ideal(&i.product(&j)).unwrap().as_finite().unwrap();
        prop_assert_eq!(op, oi + oj);
    }

    #[test]
    fn canonicalization_is_idempotent_and_order_insensitive(
        gens in prop::collection::vec(prop::collection::vec(0..=5u32, 2), 1..=6),
        seed in 0u64..1000,
    ) {
        let monos: Vec<Monomial> = gens.into_iter().map(Monomial).collect();
        let a = MonomialIdeal::new(2, monos.clone());
        // Deterministic shuffle driven by the seed.
        let mut shuffled = monos.clone();
        let mut s = seed;
        for k in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(k, (s % (k as u64 + 1)) as usize);
        }
        let b = MonomialIdeal::new(2, shuffled);
        prop_assert_eq!(&a, &b);
        let again = MonomialIdeal::new(2, a.generators().to_vec());
        prop_assert_eq!(&again, &a);
    }

    #[test]
    fn histogram_matches_brute_force(
        f in arb_poly(2, 4, 3),
        pm in prop::sample::select(vec![(3u64, 1u32), (3, 2), (5, 1), (7, 1)]),
    ) {
        let (p, m) = pm;
        let modulus = PrimePowerModulus::new(p, m).unwrap();
        let mv = modulus.value();
        let z = SubschemeSpec::full_space(2);
        let h = residue_histogram(&f, &modulus, &z, 1 << 22).unwrap();
        let mut want = vec![0u64; mv as usize];
        for x in 0..mv {
            for y in 0..mv {
                let r = f.eval_mod(&[x, y], mv).unwrap();
                want[r as usize] += 1;
            }
        }
        prop_assert_eq!(h.counts(), want.as_slice());
        prop_assert_eq!(h.total(), mv * mv);
    }

    #[test]
    fn sums_are_bounded_and_conjugate_symmetric(
        f in arb_poly(1, 4, 4),
        twist in 1u64..48,
    ) {
        prop_assume!(twist % 7 != 0);
        let modulus = PrimePowerModulus::new(7, 2).unwrap();
        let z = SubschemeSpec::full_space(1);
        let h = residue_histogram(&f, &modulus, &z, 1 << 22).unwrap();
        let e = exp_sum_from_histogram(&h, twist).unwrap();
        prop_assert!(e.abs <= 1.0 + 2f64.powi(-40));
        if e.exact_zero {
            prop_assert!(e.abs < 1e-9);
        }
        let conj = exp_sum_from_histogram(&h, 49 - twist).unwrap();
        prop_assert!((e.abs - conj.abs).abs() < 1e-12);
        prop_assert!((e.im + conj.im).abs() < 1e-12);
        prop_assert!((e.re - conj.re).abs() < 1e-12);
    }
}
