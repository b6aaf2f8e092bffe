mod common;

use proptest::prelude::*;

use bverify::instances;
use bverify::omega;
use bverify::{AlgebraElement, AlgebraSpec, Scalar, ScalarDomain};

fn domains() -> Vec<ScalarDomain> {
    vec![
        ScalarDomain::Rational,
        ScalarDomain::cyclotomic(6).unwrap(),
        ScalarDomain::cyclotomic(5).unwrap(),
        ScalarDomain::rational_function("q"),
    ]
}

/// A small random scalar: `(a + b g + c g^2) / d` in the domain's
/// generator `g` (just `a / d` over the rationals).
fn scalar_in(domain: &ScalarDomain, a: i64, b: i64, c: i64, d: i64, e: i64) -> Scalar {
    let text = match domain {
        ScalarDomain::Rational => format!("({a})/({d})"),
        ScalarDomain::Cyclotomic(_) => format!("(({a}) + ({b})*zeta + ({c})*zeta^2)/({d})"),
        ScalarDomain::RationalFunction(v) => format!("(({a}) + ({b})*{v} + ({c})*{v}^2)/(({d}) + ({e})*{v})"),
    };
    domain.parse(&text).unwrap()
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

fn scalar_parts() -> impl Strategy<Value = (i64, i64, i64, i64, i64)> {
    (-6i64..=6, -6i64..=6, -6i64..=6, nonzero(), -3i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(
        dom in 0usize..4,
        x in scalar_parts(),
        y in scalar_parts(),
        z in scalar_parts(),
    ) {
        let domain = &domains()[dom];
        let x = scalar_in(domain, x.0, x.1, x.2, x.3, x.4);
        let y = scalar_in(domain, y.0, y.1, y.2, y.3, y.4);
        let z = scalar_in(domain, z.0, z.1, z.2, z.3, z.4);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &domain.one(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        // canonical forms render and re-parse to the same value
        prop_assert_eq!(domain.parse(&x.to_string()).unwrap(), x);
    }
}

fn element(spec: &AlgebraSpec, coeffs: &[i64]) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, &c) in spec.basis(2).into_iter().zip(coeffs) {
        out.add_term(m, spec.domain().from_int(c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_and_bilinear(
        a in prop::collection::vec(-3i64..=3, 11),
        b in prop::collection::vec(-3i64..=3, 11),
        c in prop::collection::vec(-3i64..=3, 11),
        k in -4i64..=4,
    ) {
        for spec in [instances::gr4_spec(), instances::qp_spec()] {
            let (a, b, c) = (element(&spec, &a), element(&spec, &b), element(&spec, &c));
            let ab_c = spec.multiply(&spec.multiply(&a, &b).unwrap(), &c).unwrap();
            let a_bc = spec.multiply(&a, &spec.multiply(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let k = spec.domain().from_int(k);
            let left = spec.multiply(&a.add(&b.scale(&k)), &c).unwrap();
            let right = spec.multiply(&a, &c).unwrap().add(&spec.multiply(&b, &c).unwrap().scale(&k));
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn omega_is_multilinear(
        a in prop::collection::vec(-3i64..=3, 11),
        a2 in prop::collection::vec(-3i64..=3, 11),
        b in prop::collection::vec(-3i64..=3, 11),
        c in prop::collection::vec(-3i64..=3, 11),
        k in -4i64..=4,
    ) {
        let gr4 = instances::gr4();
        let spec = &gr4.spec;
        let e = gr4.map("D_odd").unwrap();
        let (a, a2, b, c) = (element(spec, &a), element(spec, &a2), element(spec, &b), element(spec, &c));
        let k = spec.domain().from_int(k);
        let mixed = a.add(&a2.scale(&k));
        for path in [omega::OmegaPath::Closed, omega::OmegaPath::Definitional] {
            let lhs = omega::omega2(path, spec, e, &mixed, &b).unwrap();
            let rhs = omega::omega2(path, spec, e, &a, &b).unwrap()
                .add(&omega::omega2(path, spec, e, &a2, &b).unwrap().scale(&k));
            prop_assert_eq!(lhs, rhs);
            let lhs = omega::omega3(path, spec, e, &b, &mixed, &c).unwrap();
            let rhs = omega::omega3(path, spec, e, &b, &a, &c).unwrap()
                .add(&omega::omega3(path, spec, e, &b, &a2, &c).unwrap().scale(&k));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

/// Every nonzero Omega value on a basis tuple has degree `sum + deg E`.
#[test]
fn omega_values_are_homogeneous() {
    let gr4 = instances::gr4();
    let spec = &gr4.spec;
    for name in ["D_odd", "D_even", "d1"] {
        let e = gr4.map(name).unwrap();
        for a in spec.basis(4) {
            for b in spec.basis(4) {
                let ea = AlgebraElement::term(a.clone(), spec.one());
                let eb = AlgebraElement::term(b.clone(), spec.one());
                let v = omega::omega2_closed(spec, e, &ea, &eb).unwrap();
                if let Some(d) = spec.degree_of(&v).unwrap() {
                    let want = e.shift(&spec.add_degrees(&spec.monomial_degree(&a), &spec.monomial_degree(&b)));
                    assert_eq!(d, want, "{name}");
                }
            }
        }
    }
}

/// The engine's normal form agrees with the bitmask model on all pairs.
#[test]
fn grassmann_products_match_oracle() {
    let spec = instances::gr4_spec();
    for a in 0..16u8 {
        for b in 0..16u8 {
            let got = spec
                .multiply(
                    &common::to_engine(&spec, &common::mono(a)),
                    &common::to_engine(&spec, &common::mono(b)),
                )
                .unwrap();
            let want = common::to_engine(&spec, &common::mul(&common::mono(a), &common::mono(b)));
            assert_eq!(got, want, "masks {a} {b}");
        }
    }
}

/// D_odd against the bitmask model, including the documented values.
#[test]
fn d_odd_matches_oracle() {
    let gr4 = instances::gr4();
    let spec = &gr4.spec;
    let d = gr4.map("D_odd").unwrap();
    for m in 0..16u8 {
        let got = d.apply(&common::to_engine(spec, &common::mono(m))).unwrap();
        assert_eq!(got, common::to_engine(spec, &common::d_odd(&common::mono(m))));
    }
    let x2x3x4 = spec.parse_element("x2*x3*x4").unwrap();
    assert_eq!(spec.render(&d.apply(&x2x3x4).unwrap()), "x1*x4");
    assert!(d.power(2).vanishes_on_basis(4).unwrap());
    let m = common::to_mask(&spec.parse_monomial("x1*x3").unwrap());
    assert_eq!(m, 0b0101);
}
