//! Randomized checks of the algebraic laws the exact layer must satisfy.

mod common;

use proptest::prelude::*;
use zhouval::poly::context;
use zhouval::rational::{q, ExtQ, Q};
use zhouval::trop::{relative_type, weight_relative_type, weight_value, AnalyticWeight, Ray};

use common::*;

fn ok<T>(r: Result<T, String>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

#[test]
fn monomial_valuation_axioms() {
    ok(nu_w_axioms(1000));
}

#[test]
fn curve_order_axioms() {
    ok(curve_valuation_axioms(1000));
}

#[test]
fn universal_denominators_denominate() {
    ok(universal_denominator_property(2, 3, 1, 500));
    ok(universal_denominator_property(2, 5, 2, 500));
    ok(universal_denominator_property(3, 4, 2, 500));
}

#[test]
fn polynomial_print_parse_round_trip() {
    ok(parse_round_trip(500));
}

#[test]
fn relative_type_plus_one_is_jumping_number() {
    ok(jumping_identity(50));
}

#[test]
fn tian_functions_are_linear_for_candidates() {
    assert!(ok(tian_linearity()) > 0);
}

#[test]
fn truncations_decrease_to_the_threshold() {
    ok(truncation_limit());
    ok(multiplicative_bound());
    ok(jumping_gap());
}

#[test]
fn interpolation_witnesses_are_sound() {
    ok(witness_soundness());
}

#[test]
fn universal_denominator_oracle_matches_formula() {
    for p in 1..=7i64 {
        for q in (p + 1)..=9i64 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let curve = zhouval::curve::MonomialCurve::new(p as u32, q as u32).unwrap();
            assert_eq!(curve.frobenius(), frobenius_brute(p, q), "({p},{q})");
            let m = denominator_exponent_brute(p, q);
            let delta = zhouval::curve::universal_denominator(&curve);
            assert_eq!(delta.to_string(), if m == 0 { "1".into() } else if m == 1 { "z1".into() } else { format!("z1^{m}") });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    // sigma(log|g|, c phi) = sigma(log|g|, phi) / c
    #[test]
    fn relative_type_scales_inversely(g in poly_in(context(&V2), 4, 5), num in 1i64..=5, den in 1i64..=5) {
        let phi = weight(&V2, q(1), &[("z1^2", q(1)), ("z1*z2", q(1)), ("z2^3", q(1))]);
        let c = Q::new(num.into(), den.into());
        let base = relative_type(&g, &phi).unwrap().value;
        let scaled = relative_type(&g, &phi.scaled(&c).unwrap()).unwrap().value;
        match (base, scaled) {
            (ExtQ::Finite(a), ExtQ::Finite(b)) => prop_assert_eq!(a / &c, b),
            (a, b) => prop_assert_eq!(a, b),
        }
    }

    // the exact optimum is a lower bound for every ray
    #[test]
    fn relative_type_is_a_lower_bound(g in poly_in(context(&V2), 4, 5), w in ray_in(2)) {
        let phi = weight(&V2, q(1), &[("z1^3", q(1)), ("z2^2", q(1))]);
        let ray = Ray::new(w.clone()).unwrap();
        let d = weight_value(&phi, &ray).unwrap();
        let sigma = relative_type(&g, &phi).unwrap().value;
        if d > Q::from_integer(0.into()) {
            let r = monomial_valuation(&g, &w).unwrap() / d;
            prop_assert!(sigma <= ExtQ::Finite(r));
        }
    }

    // sigma(psi, phi) sigma(phi, psi) <= 1 and equality iff the weights are equivalent up to scalars
    #[test]
    fn weight_relative_types_compose(a in 1u32..=5, b in 1u32..=5) {
        let x = format!("z1^{a}");
        let y = format!("z2^{b}");
        let psi = weight(&V2, q(1), &[(x.as_str(), q(1)), (y.as_str(), q(1))]);
        let phi = weight(&V2, q(1), &[("z1", q(1)), ("z2", q(1))]);
        let ExtQ::Finite(s1) = weight_relative_type(&psi, &phi).unwrap() else { unreachable!() };
        let ExtQ::Finite(s2) = weight_relative_type(&phi, &psi).unwrap() else { unreachable!() };
        prop_assert_eq!(s1.clone(), Q::from_integer(a.min(b).into()));
        prop_assert!(&s1 * &s2 <= Q::from_integer(1.into()));
        prop_assert_eq!(&s1 * &s2 == Q::from_integer(1.into()), a == b);
    }
}

#[test]
fn weight_family_is_monomial() {
    for phi in zhou_family() {
        assert!(AnalyticWeight::is_monomial_class(&phi));
    }
}
