//! Reference instances: the Grassmann algebra on four odd generators, the
//! quantum plane, a non-symmetric plane, and a cyclotomic bicharacter on Z4.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{AlgebraSpec, Generator};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::omega::{CFunction, GradedLinearMap};
use crate::scalar::ScalarDomain;
use crate::verify::{Bounds, Instance};

fn gen(name: &str, degree: &[i64]) -> Generator {
    Generator {
        name: name.to_string(),
        degree: GroupElement(degree.to_vec()),
    }
}

/// `chi(m, n) = (-1)^(mn)` on `Z`, generators `x1..x4` of degree 1, over
/// the rationals.
pub fn gr4_spec_with_max_len(max_len: usize) -> AlgebraSpec {
    let chi = Bicharacter::parse(GroupSpec::free(1), ScalarDomain::Rational, &[vec!["-1"]])
        .expect("valid bicharacter");
    let gens = (1..=4).map(|i| gen(&format!("x{i}"), &[1])).collect();
    AlgebraSpec::new(gens, chi, max_len).expect("valid algebra")
}

/// [`gr4_spec_with_max_len`] with room for products of three basis
/// monomials.
pub fn gr4_spec() -> AlgebraSpec {
    gr4_spec_with_max_len(12)
}

/// `chi(a, b) = q^(a1 b2 - a2 b1)` on `Z^2`, `x` of degree `(1,0)` and `y`
/// of degree `(0,1)`, over `Q(q)`.
pub fn qp_spec() -> AlgebraSpec {
    let chi = Bicharacter::parse(
        GroupSpec::free(2),
        ScalarDomain::rational_function("q"),
        &[vec!["1", "q"], vec!["q^-1", "1"]],
    )
    .expect("valid bicharacter");
    AlgebraSpec::new(vec![gen("x", &[1, 0]), gen("y", &[0, 1])], chi, 8).expect("valid algebra")
}

/// Like the quantum plane but with `chi(y, x) = 1`, so that
/// `chi(x, y) chi(y, x) = q`.
pub fn ns_spec() -> AlgebraSpec {
    let chi = Bicharacter::parse(
        GroupSpec::free(2),
        ScalarDomain::rational_function("q"),
        &[vec!["1", "q"], vec!["1", "1"]],
    )
    .expect("valid bicharacter");
    AlgebraSpec::new(vec![gen("x", &[1, 0]), gen("y", &[0, 1])], chi, 8).expect("valid algebra")
}

/// `chi(m, n) = zeta_4^(mn)` on `Z/4`.
pub fn z4_chi() -> Bicharacter {
    let domain = ScalarDomain::cyclotomic(4).expect("nonzero order");
    Bicharacter::parse(GroupSpec::new(0, vec![4]).expect("valid group"), domain, &[vec!["zeta"]])
        .expect("valid bicharacter")
}

fn partial(spec: &Arc<AlgebraSpec>, name: &str) -> GradedLinearMap {
    let i = spec.generator_index(name).expect("known generator");
    let degree = spec.group().neg(&spec.generators()[i].degree).expect("valid degree");
    GradedLinearMap::derivation_named(spec, &[(name, spec.unit())], degree).expect("valid derivation")
}

/// GR4 with `d1..d4` (the partial derivatives), `D_odd = x1 . d3 . d2`,
/// `D_even = d2 . d1`, `D_bad = d2 . d1 + d4 . d3`, and the scaling function
/// `c(g, h) = (-1)^(g + h)`.
pub fn gr4_with_max_len(max_len: usize) -> Instance {
    let spec = Arc::new(gr4_spec_with_max_len(max_len));
    let mut maps = BTreeMap::new();
    let d: Vec<GradedLinearMap> = (1..=4).map(|i| partial(&spec, &format!("x{i}"))).collect();
    for (i, m) in d.iter().enumerate() {
        maps.insert(format!("d{}", i + 1), m.clone());
    }
    let x1 = GradedLinearMap::left_multiply(&spec, spec.gen(0)).expect("homogeneous");
    maps.insert("D_odd".into(), x1.compose(&d[2]).compose(&d[1]));
    maps.insert("D_even".into(), d[1].compose(&d[0]));
    let bad = d[1].compose(&d[0]).add(&d[3].compose(&d[2])).expect("equal degrees");
    maps.insert("D_bad".into(), bad);
    Instance {
        name: "GR4".into(),
        spec,
        maps,
        cfun: Some(CFunction::sign_alternating(vec![1])),
        bounds: Bounds::with_total(4, 6),
    }
}

pub fn gr4() -> Instance {
    gr4_with_max_len(12)
}

/// The quantum plane with `dx`, `dy` and `dydx = dy . dx`.
pub fn qp() -> Instance {
    let spec = Arc::new(qp_spec());
    let dx = partial(&spec, "x");
    let dy = partial(&spec, "y");
    let mut maps = BTreeMap::new();
    maps.insert("dydx".into(), dy.compose(&dx));
    maps.insert("dx".into(), dx);
    maps.insert("dy".into(), dy);
    Instance {
        name: "QP".into(),
        spec,
        maps,
        cfun: None,
        bounds: Bounds::per_arg(2),
    }
}

/// The non-symmetric plane with no maps.
pub fn ns() -> Instance {
    Instance {
        name: "NS".into(),
        spec: Arc::new(ns_spec()),
        maps: BTreeMap::new(),
        cfun: None,
        bounds: Bounds::per_arg(2),
    }
}
