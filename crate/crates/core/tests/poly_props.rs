use ivhs_core::linalg::rat;
use ivhs_core::poly::{graded_monomials, monomial_count, Monomial, Polynomial, VariableSet};
use proptest::prelude::*;

fn poly_of_degree(d: u32) -> impl Strategy<Value = Polynomial> {
    let monos = graded_monomials(3, d);
    prop::collection::vec(-5i64..=5, monos.len()).prop_map(move |coeffs| {
        Polynomial::from_terms(
            &VariableSet::xyz(),
            monos.iter().cloned().zip(coeffs).map(|(m, c)| (m, rat(c))),
        )
    })
}

fn any_poly() -> impl Strategy<Value = Polynomial> {
    (0u32..4).prop_flat_map(poly_of_degree)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_commutes(a in any_poly(), b in any_poly()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
    }

    #[test]
    fn multiplication_associates(a in any_poly(), b in any_poly(), c in any_poly()) {
        let left = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn euler_relation((d, f) in (1u32..7).prop_flat_map(|d| (Just(d), poly_of_degree(d)))) {
        let vars = f.vars().clone();
        let mut sum = Polynomial::zero(&vars);
        for i in 0..vars.len() {
            let xi = Polynomial::monomial(&vars, Monomial::var(vars.len(), i), rat(1));
            sum = sum.try_add(&xi.try_mul(&f.partial_derivative(i)).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, f.scale(&rat(d as i64)));
    }

    #[test]
    fn degree_adds(a in poly_of_degree(2), b in poly_of_degree(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(a.try_mul(&b).unwrap().homogeneous_degree(), Some(5));
    }

    #[test]
    fn printing_round_trips(f in any_poly()) {
        let printed = f.to_string();
        prop_assert_eq!(Polynomial::parse(&printed, &VariableSet::xyz()).unwrap(), f);
    }
}

#[test]
fn binomial_counts_exhaustive() {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for n in 1..=6usize {
        for k in 0..=20u32 {
            let expected = binom(k as u64 + n as u64 - 1, n as u64 - 1) as usize;
            assert_eq!(graded_monomials(n, k).len(), expected);
            assert_eq!(monomial_count(n, k as i64), expected);
        }
    }
}

#[test]
fn graded_monomials_strictly_decreasing() {
    for n in 1..=4 {
        for k in 0..=6 {
            let ms = graded_monomials(n, k);
            assert!(ms.windows(2).all(|w| w[0] > w[1]));
        }
    }
}
