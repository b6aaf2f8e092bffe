//! Degree-homogeneous linear endomorphisms of a presented algebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::algebra::{AlgebraElement, AlgebraSpec, Monomial};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::scalar::Scalar;

#[derive(Debug)]
enum Rule {
    Zero,
    Identity,
    /// Explicit images; monomials up to `basis_len` not listed map to zero.
    Table {
        images: BTreeMap<Monomial, AlgebraElement>,
        basis_len: usize,
    },
    /// Values on generators, extended by the braided Leibniz rule.
    Derivation { values: Vec<AlgebraElement> },
    LeftMultiply(AlgebraElement),
    /// `f_0 . f_1 . ... . f_k`: `f_k` is applied first.
    Compose(Vec<GradedLinearMap>),
    Sum(Vec<GradedLinearMap>),
    Scale(Scalar, GradedLinearMap),
}

struct Node {
    spec: Arc<AlgebraSpec>,
    degree: GroupElement,
    rule: Rule,
    memo: RwLock<HashMap<Monomial, AlgebraElement>>,
}

/// A linear map `E` with `|E(a)| = |a| + degree` for homogeneous `a`.
///
/// Cloning is cheap; clones share the per-monomial memo table.
#[derive(Clone)]
pub struct GradedLinearMap(Arc<Node>);

impl fmt::Debug for GradedLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedLinearMap")
            .field("degree", &self.0.degree)
            .field("rule", &self.0.rule)
            .finish()
    }
}

impl GradedLinearMap {
    fn build(spec: &Arc<AlgebraSpec>, degree: GroupElement, rule: Rule) -> Self {
        GradedLinearMap(Arc::new(Node {
            spec: spec.clone(),
            degree,
            rule,
            memo: RwLock::new(HashMap::new()),
        }))
    }

    pub fn zero(spec: &Arc<AlgebraSpec>, degree: GroupElement) -> Result<Self> {
        let degree = spec.group().canonicalize(&degree)?;
        Ok(Self::build(spec, degree, Rule::Zero))
    }

    pub fn identity(spec: &Arc<AlgebraSpec>) -> Self {
        Self::build(spec, spec.zero_degree(), Rule::Identity)
    }

    /// A map given by explicit images of basis monomials of length
    /// `<= basis_len`. Unlisted monomials in range map to zero.
    pub fn table(
        spec: &Arc<AlgebraSpec>,
        degree: GroupElement,
        images: BTreeMap<Monomial, AlgebraElement>,
        basis_len: usize,
    ) -> Result<Self> {
        let degree = spec.group().canonicalize(&degree)?;
        if basis_len > spec.max_len() {
            return Err(Error::TruncationExceeded {
                len: basis_len,
                max_len: spec.max_len(),
            });
        }
        for (m, img) in &images {
            if m.len() > basis_len {
                return Err(Error::OutOfBasis(spec.render_monomial(m)));
            }
            let expected = spec.add_degrees(&spec.monomial_degree(m), &degree);
            check_degree(spec, img, &expected, &spec.render_monomial(m))?;
        }
        Ok(Self::build(spec, degree, Rule::Table { images, basis_len }))
    }

    /// Extends generator values to the whole algebra by
    /// `d(ab) = d(a) b + chi(|a|, |b|) chi(|a|, |d(b)|)^-1 a d(b)`, with
    /// `d(1) = 0`. `values` lists the nonzero generator images.
    pub fn derivation(
        spec: &Arc<AlgebraSpec>,
        values: &BTreeMap<usize, AlgebraElement>,
        degree: GroupElement,
    ) -> Result<Self> {
        let degree = spec.group().canonicalize(&degree)?;
        let mut table = vec![AlgebraElement::zero(); spec.generators().len()];
        for (&i, v) in values {
            let gen = spec
                .generators()
                .get(i)
                .ok_or_else(|| Error::Invalid(format!("generator index {i} out of range")))?;
            let expected = spec.add_degrees(&gen.degree, &degree);
            check_degree(spec, v, &expected, &gen.name)?;
            table[i] = v.clone();
        }
        Ok(Self::build(spec, degree, Rule::Derivation { values: table }))
    }

    /// Derivation from `(generator name, value)` pairs.
    pub fn derivation_named(
        spec: &Arc<AlgebraSpec>,
        values: &[(&str, AlgebraElement)],
        degree: GroupElement,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (name, v) in values {
            let i = spec
                .generator_index(name)
                .ok_or_else(|| Error::Invalid(format!("unknown generator '{name}'")))?;
            map.insert(i, v.clone());
        }
        Self::derivation(spec, &map, degree)
    }

    /// `a -> x a` for a nonzero homogeneous `x`.
    pub fn left_multiply(spec: &Arc<AlgebraSpec>, x: AlgebraElement) -> Result<Self> {
        let degree = spec
            .degree_of(&x)?
            .ok_or_else(|| Error::InhomogeneousRule("left multiplication by zero has no degree".into()))?;
        Ok(Self::build(spec, degree, Rule::LeftMultiply(x)))
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &GradedLinearMap) -> Self {
        let spec = &self.0.spec;
        let degree = spec.add_degrees(&self.0.degree, &other.0.degree);
        Self::build(spec, degree, Rule::Compose(vec![self.clone(), other.clone()]))
    }

    /// `self^k`; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> Self {
        match k {
            0 => Self::identity(&self.0.spec),
            1 => self.clone(),
            _ => {
                let spec = &self.0.spec;
                let degree = (0..k).fold(spec.zero_degree(), |acc, _| {
                    spec.add_degrees(&acc, &self.0.degree)
                });
                Self::build(spec, degree, Rule::Compose(vec![self.clone(); k]))
            }
        }
    }

    pub fn add(&self, other: &GradedLinearMap) -> Result<Self> {
        if self.0.degree != other.0.degree {
            return Err(Error::InhomogeneousRule(format!(
                "sum of maps of degrees {} and {}",
                self.0.degree, other.0.degree
            )));
        }
        Ok(Self::build(
            &self.0.spec,
            self.0.degree.clone(),
            Rule::Sum(vec![self.clone(), other.clone()]),
        ))
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self::build(&self.0.spec, self.0.degree.clone(), Rule::Scale(s, self.clone()))
    }

    pub fn degree(&self) -> &GroupElement {
        &self.0.degree
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.0.spec
    }

    /// Formal degree of the image of something of degree `g`.
    pub fn shift(&self, g: &GroupElement) -> GroupElement {
        self.0.spec.add_degrees(g, &self.0.degree)
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (m, c) in a.terms() {
            let img = self.apply_monomial(m)?;
            out.add_assign(&img.scale(c));
        }
        Ok(out)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<AlgebraElement> {
        if let Some(v) = self.0.memo.read().unwrap().get(m) {
            return Ok(v.clone());
        }
        let v = self.evaluate(m)?;
        self.0.memo.write().unwrap().insert(m.clone(), v.clone());
        Ok(v)
    }

    fn evaluate(&self, m: &Monomial) -> Result<AlgebraElement> {
        let spec = &self.0.spec;
        match &self.0.rule {
            Rule::Zero => Ok(AlgebraElement::zero()),
            Rule::Identity => Ok(AlgebraElement::term(m.clone(), spec.one())),
            Rule::Table { images, basis_len } => {
                if m.len() > *basis_len {
                    return Err(Error::OutOfBasis(spec.render_monomial(m)));
                }
                Ok(images.get(m).cloned().unwrap_or_default())
            }
            Rule::Derivation { values } => {
                let Some((&first, rest)) = m.indices().split_first() else {
                    return Ok(AlgebraElement::zero());
                };
                let head = Monomial::single(first);
                let tail = Monomial::from_sorted(rest.to_vec());
                let head_deg = spec.monomial_degree(&head);
                let tail_deg = spec.monomial_degree(&tail);
                // d(x t) = d(x) t + chi(|x|, |t|) chi(|x|, |t| + e)^-1 x d(t)
                let tail_el = AlgebraElement::term(tail.clone(), spec.one());
                let mut out = spec.multiply(&values[first], &tail_el)?;
                let d_tail = self.apply_monomial(&tail)?;
                if !d_tail.is_zero() {
                    let coeff = &spec.chi_eval(&head_deg, &tail_deg)
                        * &spec
                            .chi_eval(&head_deg, &self.shift(&tail_deg))
                            .inv()
                            .expect("bicharacter values are units");
                    let head_el = AlgebraElement::term(head, coeff);
                    out.add_assign(&spec.multiply(&head_el, &d_tail)?);
                }
                Ok(out)
            }
            Rule::LeftMultiply(x) => {
                spec.multiply(x, &AlgebraElement::term(m.clone(), spec.one()))
            }
            Rule::Compose(maps) => {
                let mut acc = AlgebraElement::term(m.clone(), spec.one());
                for f in maps.iter().rev() {
                    if acc.is_zero() {
                        break;
                    }
                    acc = f.apply(&acc)?;
                }
                Ok(acc)
            }
            Rule::Sum(maps) => {
                let mut acc = AlgebraElement::zero();
                for f in maps {
                    acc.add_assign(&f.apply_monomial(m)?);
                }
                Ok(acc)
            }
            Rule::Scale(s, f) => Ok(f.apply_monomial(m)?.scale(s)),
        }
    }

    /// Verifies `|E(m)| = |m| + degree` on every basis monomial of length
    /// `<= max_len`.
    pub fn check_homogeneous(&self, max_len: usize) -> Result<()> {
        let spec = &self.0.spec;
        for m in spec.basis(max_len) {
            let img = self.apply_monomial(&m)?;
            let expected = self.shift(&spec.monomial_degree(&m));
            check_degree(spec, &img, &expected, &spec.render_monomial(&m))?;
        }
        Ok(())
    }

    /// True when the map is zero on every basis monomial of length
    /// `<= max_len`.
    pub fn vanishes_on_basis(&self, max_len: usize) -> Result<bool> {
        for m in self.0.spec.basis(max_len) {
            if !self.apply_monomial(&m)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_degree(
    spec: &AlgebraSpec,
    img: &AlgebraElement,
    expected: &GroupElement,
    what: &str,
) -> Result<()> {
    match spec.degree_of(img)? {
        Some(d) if d != *expected => Err(Error::InhomogeneousRule(format!(
            "image of {what} has degree {d}, expected {expected}"
        ))),
        _ => Ok(()),
    }
}
