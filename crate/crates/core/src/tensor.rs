//! The braided tensor square `A (x) A`, the braiding, and the map
//! `a -> a (x) 1 - 1 (x) a` with its iterated products.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraElement, AlgebraSpec, Monomial};
use crate::error::Result;
use crate::scalar::Scalar;

/// A finite linear combination of basis pairs `u (x) v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn unit(spec: &AlgebraSpec) -> Self {
        TensorElement::pair(Monomial::unit(), Monomial::unit(), spec.one())
    }

    pub fn pair(left: Monomial, right: Monomial, c: Scalar) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(left, right, c);
        t
    }

    /// `a (x) b` for algebra elements.
    pub fn from_elements(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut t = TensorElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Applies `f (x) id`, where `f` maps a basis monomial to an element.
    pub fn map_left<F>(&self, mut f: F) -> Result<TensorElement>
    where
        F: FnMut(&Monomial) -> Result<AlgebraElement>,
    {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, d) in f(l)?.terms() {
                out.add_term(m.clone(), r.clone(), c * d);
            }
        }
        Ok(out)
    }
}

/// The braiding `u (x) v -> chi(|u|, |v|) v (x) u`, or its inverse
/// `u (x) v -> chi(|v|, |u|)^-1 v (x) u`.
pub fn braiding_apply(spec: &AlgebraSpec, t: &TensorElement, inverse: bool) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((u, v), c) in &t.terms {
        let du = spec.monomial_degree(u);
        let dv = spec.monomial_degree(v);
        let factor = if inverse {
            spec.chi_eval(&dv, &du).inv().expect("bicharacter values are units")
        } else {
            spec.chi_eval(&du, &dv)
        };
        out.add_term(v.clone(), u.clone(), c * &factor);
    }
    out
}

/// `(a (x) b)(c (x) d) = chi(|b|, |c|) ac (x) bd`.
pub fn tensor_multiply(spec: &AlgebraSpec, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for ((a, b), c1) in &s.terms {
        let db = spec.monomial_degree(b);
        for ((c, d), c2) in &t.terms {
            let Some((k1, ac)) = spec.multiply_monomials(a, c)? else {
                continue;
            };
            let Some((k2, bd)) = spec.multiply_monomials(b, d)? else {
                continue;
            };
            let braid = spec.chi_eval(&db, &spec.monomial_degree(c));
            let coeff = &(&(c1 * c2) * &braid) * &(&k1 * &k2);
            out.add_term(ac, bd, coeff);
        }
    }
    Ok(out)
}

/// The multiplication map `u (x) v -> uv`.
pub fn contract(spec: &AlgebraSpec, t: &TensorElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for ((u, v), c) in &t.terms {
        if let Some((k, m)) = spec.multiply_monomials(u, v)? {
            out.add_term(m, c * &k);
        }
    }
    Ok(out)
}

/// `a (x) 1 - 1 (x) a`, extended linearly.
pub fn delta(_spec: &AlgebraSpec, a: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.terms() {
        out.add_term(m.clone(), Monomial::unit(), c.clone());
        out.add_term(Monomial::unit(), m.clone(), -c);
    }
    out
}

/// `delta(a_1) delta(a_2) ... delta(a_n)`, multiplied left to right in the
/// braided tensor square.
pub fn delta_n(spec: &AlgebraSpec, args: &[AlgebraElement]) -> Result<TensorElement> {
    let mut acc = TensorElement::unit(spec);
    for a in args {
        acc = tensor_multiply(spec, &acc, &delta(spec, a))?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Renders as `coeff * (m1 ⊗ m2) + ...` in pair order.
pub fn render(spec: &AlgebraSpec, t: &TensorElement) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    t.terms
        .iter()
        .map(|((l, r), c)| {
            format!(
                "{c} * ({} ⊗ {})",
                spec.render_monomial(l),
                spec.render_monomial(r)
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn mono(spec: &AlgebraSpec, s: &str) -> Monomial {
        spec.parse_monomial(s).unwrap()
    }

    #[test]
    fn braiding_examples() {
        let gr4 = instances::gr4_spec();
        let t = TensorElement::pair(mono(&gr4, "x1"), mono(&gr4, "x2"), gr4.one());
        assert_eq!(render(&gr4, &braiding_apply(&gr4, &t, false)), "-1 * (x2 ⊗ x1)");
        let unit_left = TensorElement::pair(Monomial::unit(), mono(&gr4, "x1*x3"), gr4.one());
        assert_eq!(
            render(&gr4, &braiding_apply(&gr4, &unit_left, false)),
            "1 * (x1*x3 ⊗ 1)"
        );

        let qp = instances::qp_spec();
        let t = TensorElement::pair(mono(&qp, "x"), mono(&qp, "y"), qp.one());
        let b = braiding_apply(&qp, &t, false);
        assert_eq!(render(&qp, &b), "q * (y ⊗ x)");
        assert_eq!(braiding_apply(&qp, &b, true), t);
    }

    #[test]
    fn tensor_product_examples() {
        let gr4 = instances::gr4_spec();
        let one = gr4.one();
        let s = TensorElement::pair(Monomial::unit(), mono(&gr4, "x1"), one.clone());
        let t = TensorElement::pair(mono(&gr4, "x2"), Monomial::unit(), one.clone());
        assert_eq!(
            render(&gr4, &tensor_multiply(&gr4, &s, &t).unwrap()),
            "-1 * (x2 ⊗ x1)"
        );
        let a = TensorElement::pair(mono(&gr4, "x3"), Monomial::unit(), one.clone());
        let b = TensorElement::pair(mono(&gr4, "x2"), Monomial::unit(), one);
        assert_eq!(
            render(&gr4, &tensor_multiply(&gr4, &a, &b).unwrap()),
            "-1 * (x2*x3 ⊗ 1)"
        );

        let qp = instances::qp_spec();
        let s = TensorElement::pair(Monomial::unit(), mono(&qp, "y"), qp.one());
        let t = TensorElement::pair(mono(&qp, "x"), Monomial::unit(), qp.one());
        assert_eq!(
            render(&qp, &tensor_multiply(&qp, &s, &t).unwrap()),
            "1/q * (x ⊗ y)"
        );
    }

    #[test]
    fn delta_examples() {
        let gr4 = instances::gr4_spec();
        let x1 = gr4.parse_element("x1").unwrap();
        assert_eq!(render(&gr4, &delta(&gr4, &x1)), "-1 * (1 ⊗ x1) + 1 * (x1 ⊗ 1)");
        assert!(delta(&gr4, &gr4.unit()).is_zero());
        let a = gr4.parse_element("2*x1*x2").unwrap();
        assert_eq!(
            render(&gr4, &delta(&gr4, &a)),
            "-2 * (1 ⊗ x1*x2) + 2 * (x1*x2 ⊗ 1)"
        );
        assert_eq!(delta_n(&gr4, std::slice::from_ref(&x1)).unwrap(), delta(&gr4, &x1));
        assert!(delta_n(&gr4, &[gr4.unit(), x1]).unwrap().is_zero());
    }
}
