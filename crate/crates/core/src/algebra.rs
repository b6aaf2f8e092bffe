//! Presented chi-commutative graded algebras.
//!
//! An algebra is generated by homogeneous symbols `x_1 < x_2 < ...` subject
//! to the swap relations `x_j x_i = chi(|x_j|, |x_i|) x_i x_j` for `j > i`.
//! A generator with `chi(|x|, |x|) != 1` squares to zero. Normal-form
//! monomials are non-decreasing index sequences, ordered by length and then
//! lexicographically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expr::{self, ExprSemantics};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::scalar::{scalar_symbol, Scalar, ScalarDomain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: GroupElement,
}

/// A normal-form monomial: sorted generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub(crate) fn single(i: usize) -> Self {
        Monomial(vec![i])
    }

    /// Wraps indices that are already in normal form.
    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] <= w[1]));
        Monomial(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of normal-form monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Accumulates `c * m`, pruning zero coefficients.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Checked variant of [`AlgebraElement::add`].
    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_domain(other)?;
        Ok(self.add(other))
    }

    /// Checked variant of [`AlgebraElement::scale`].
    pub fn checked_scale(&self, s: &Scalar) -> Result<AlgebraElement> {
        if let Some((_, c)) = self.terms.iter().next() {
            if c.domain() != s.domain() {
                return Err(Error::DomainMismatch(
                    c.domain().to_string(),
                    s.domain().to_string(),
                ));
            }
        }
        Ok(self.scale(s))
    }

    fn check_domain(&self, other: &AlgebraElement) -> Result<()> {
        if let (Some((_, a)), Some((_, b))) = (self.terms.iter().next(), other.terms.iter().next())
        {
            if a.domain() != b.domain() {
                return Err(Error::DomainMismatch(
                    a.domain().to_string(),
                    b.domain().to_string(),
                ));
            }
        }
        Ok(())
    }
}

/// A pair of algebra elements that should agree but do not, together with
/// the basis inputs that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub inputs: Vec<Monomial>,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativityVerdict {
    pub pairs_checked: usize,
    pub failures: Vec<Mismatch>,
}

impl CommutativityVerdict {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.pairs_checked > 0
    }
}

/// A presented chi-commutative algebra truncated at `max_len`.
#[derive(Debug)]
pub struct AlgebraSpec {
    generators: Vec<Generator>,
    chi: Bicharacter,
    max_len: usize,
    swap: Vec<Vec<Scalar>>,
    nilpotent: Vec<bool>,
    chi_cache: RwLock<HashMap<(GroupElement, GroupElement), Scalar>>,
}

impl Clone for AlgebraSpec {
    fn clone(&self) -> Self {
        AlgebraSpec {
            generators: self.generators.clone(),
            chi: self.chi.clone(),
            max_len: self.max_len,
            swap: self.swap.clone(),
            nilpotent: self.nilpotent.clone(),
            chi_cache: RwLock::new(HashMap::new()),
        }
    }
}

impl AlgebraSpec {
    pub fn new(generators: Vec<Generator>, chi: Bicharacter, max_len: usize) -> Result<Self> {
        let group = chi.group().clone();
        let mut gens = Vec::with_capacity(generators.len());
        for (i, g) in generators.into_iter().enumerate() {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || !g.name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
            {
                return Err(Error::Invalid(format!("invalid generator name '{}'", g.name)));
            }
            if gens.iter().any(|h: &Generator| h.name == g.name) {
                return Err(Error::Invalid(format!("duplicate generator name '{}'", g.name)));
            }
            if scalar_symbol(chi.domain(), &g.name).is_some() {
                return Err(Error::Invalid(format!(
                    "generator {i} uses reserved scalar symbol '{}'",
                    g.name
                )));
            }
            let degree = group.canonicalize(&g.degree)?;
            gens.push(Generator {
                name: g.name,
                degree,
            });
        }
        let swap: Vec<Vec<Scalar>> = gens
            .iter()
            .map(|a| gens.iter().map(|b| chi.eval_unchecked(&a.degree, &b.degree)).collect())
            .collect();
        let nilpotent = (0..gens.len()).map(|i| !swap[i][i].is_one()).collect();
        Ok(AlgebraSpec {
            generators: gens,
            chi,
            max_len,
            swap,
            nilpotent,
            chi_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn chi(&self) -> &Bicharacter {
        &self.chi
    }

    pub fn group(&self) -> &GroupSpec {
        self.chi.group()
    }

    pub fn domain(&self) -> &ScalarDomain {
        self.chi.domain()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// `chi(g, h)` on degrees, memoized.
    pub fn chi_eval(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        let key = (g.clone(), h.clone());
        if let Some(v) = self.chi_cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.chi.eval_unchecked(g, h);
        self.chi_cache.write().unwrap().insert(key, v.clone());
        v
    }

    pub fn one(&self) -> Scalar {
        self.domain().one()
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::term(Monomial::unit(), self.one())
    }

    pub fn constant(&self, c: Scalar) -> AlgebraElement {
        AlgebraElement::term(Monomial::unit(), c)
    }

    /// The generator `x_i` as an element.
    pub fn gen(&self, i: usize) -> AlgebraElement {
        AlgebraElement::term(Monomial(vec![i]), self.one())
    }

    /// The generator with the given name.
    pub fn gen_named(&self, name: &str) -> Result<AlgebraElement> {
        self.generator_index(name)
            .map(|i| self.gen(i))
            .ok_or_else(|| Error::Invalid(format!("unknown generator '{name}'")))
    }

    pub fn zero_degree(&self) -> GroupElement {
        self.group().zero()
    }

    pub fn add_degrees(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.group().add_unchecked(a, b)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> GroupElement {
        m.0.iter().fold(self.zero_degree(), |acc, &i| {
            self.add_degrees(&acc, &self.generators[i].degree)
        })
    }

    /// The common degree of a homogeneous element; `None` for zero.
    pub fn degree_of(&self, a: &AlgebraElement) -> Result<Option<GroupElement>> {
        let mut deg: Option<GroupElement> = None;
        for m in a.terms.keys() {
            let d = self.monomial_degree(m);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev != d => {
                    return Err(Error::InhomogeneousRule(format!(
                        "element {} mixes degrees {prev} and {d}",
                        self.render(a)
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Monomial from an already sorted index list; `None` if it vanishes.
    pub fn monomial(&self, indices: Vec<usize>) -> Result<Option<Monomial>> {
        match self.normalize_word(&indices)? {
            Some((c, m)) if c.is_one() => Ok(Some(m)),
            Some(_) => Err(Error::Invalid("monomial indices must be sorted".into())),
            None => Ok(None),
        }
    }

    /// Sorts a word by adjacent swaps, collecting
    /// `chi(|x_j|, |x_i|)` for every swap `x_j x_i -> x_i x_j`. Returns
    /// `None` when the word vanishes.
    pub fn normalize_word(&self, word: &[usize]) -> Result<Option<(Scalar, Monomial)>> {
        if word.len() > self.max_len {
            return Err(Error::TruncationExceeded {
                len: word.len(),
                max_len: self.max_len,
            });
        }
        if let Some(&bad) = word.iter().find(|&&i| i >= self.generators.len()) {
            return Err(Error::Invalid(format!("generator index {bad} out of range")));
        }
        let mut w = word.to_vec();
        let mut coeff = self.one();
        for k in 1..w.len() {
            let mut pos = k;
            while pos > 0 && w[pos - 1] > w[pos] {
                coeff = &coeff * &self.swap[w[pos - 1]][w[pos]];
                w.swap(pos - 1, pos);
                pos -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1] && self.nilpotent[p[0]]) {
            return Ok(None);
        }
        Ok(Some((coeff, Monomial(w))))
    }

    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Option<(Scalar, Monomial)>> {
        let mut word = Vec::with_capacity(a.len() + b.len());
        word.extend_from_slice(&a.0);
        word.extend_from_slice(&b.0);
        self.normalize_word(&word)
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                if let Some((c, m)) = self.multiply_monomials(ma, mb)? {
                    out.add_term(m, &(ca * cb) * &c);
                }
            }
        }
        Ok(out)
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
        let mut acc = self.unit();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn homogeneous_components(&self, a: &AlgebraElement) -> BTreeMap<GroupElement, AlgebraElement> {
        let mut out: BTreeMap<GroupElement, AlgebraElement> = BTreeMap::new();
        for (m, c) in &a.terms {
            out.entry(self.monomial_degree(m))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// All nonzero normal-form monomials of length `<= max_len`, in
    /// (length, lexicographic) order.
    pub fn basis(&self, max_len: usize) -> Vec<Monomial> {
        let n = self.generators.len();
        let mut out = vec![Monomial::unit()];
        let mut layer = vec![Vec::<usize>::new()];
        for _ in 0..max_len.min(self.max_len) {
            let mut next = Vec::new();
            for w in &layer {
                let start = w.last().copied().unwrap_or(0);
                for i in start..n {
                    if w.last() == Some(&i) && self.nilpotent[i] {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned().map(Monomial));
            layer = next;
        }
        out
    }

    /// Checks `a b = chi(|a|, |b|) b a` on every pair of basis monomials of
    /// length `<= max_len`.
    pub fn validate_commutativity(&self, max_len: usize) -> Result<CommutativityVerdict> {
        let basis = self.basis(max_len);
        let mut failures = Vec::new();
        let mut pairs_checked = 0;
        for a in &basis {
            for b in &basis {
                pairs_checked += 1;
                if let Some(m) = self.commutativity_mismatch(a, b)? {
                    failures.push(m);
                }
            }
        }
        Ok(CommutativityVerdict {
            pairs_checked,
            failures,
        })
    }

    pub(crate) fn commutativity_mismatch(&self, a: &Monomial, b: &Monomial) -> Result<Option<Mismatch>> {
        let ea = AlgebraElement::term(a.clone(), self.one());
        let eb = AlgebraElement::term(b.clone(), self.one());
        let lhs = self.multiply(&ea, &eb)?;
        let chi = self.chi_eval(&self.monomial_degree(a), &self.monomial_degree(b));
        let rhs = self.multiply(&eb, &ea)?.scale(&chi);
        Ok((lhs != rhs).then(|| Mismatch {
            inputs: vec![a.clone(), b.clone()],
            lhs,
            rhs,
        }))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        m.0.iter()
            .map(|&i| self.generators[i].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Renders an element so that [`AlgebraSpec::parse_element`] reads it
    /// back, e.g. `x1*x2 + (-1/2)*x3`.
    pub fn render(&self, a: &AlgebraElement) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        a.terms
            .iter()
            .map(|(m, c)| {
                let cs = c.to_string();
                if m.is_unit() {
                    if cs.starts_with('-') || cs.contains(['+', '/', '*']) {
                        format!("({cs})")
                    } else {
                        cs
                    }
                } else if c.is_one() {
                    self.render_monomial(m)
                } else if c.is_minus_one() {
                    format!("-{}", self.render_monomial(m))
                } else {
                    format!("({cs})*{}", self.render_monomial(m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses an expression over generator names and scalar symbols.
    /// Division is only allowed by scalars; powers of non-scalars must be
    /// non-negative.
    pub fn parse_element(&self, text: &str) -> Result<AlgebraElement> {
        expr::parse(&ElementGrammar(self), text)
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let e = self.parse_element(text)?;
        match e.terms.iter().next() {
            Some((m, c)) if e.len() == 1 && c.is_one() => Ok(m.clone()),
            _ => Err(Error::parse(0, format!("'{text}' is not a normal-form monomial"))),
        }
    }
}

struct ElementGrammar<'a>(&'a AlgebraSpec);

impl ElementGrammar<'_> {
    fn as_scalar(a: &AlgebraElement) -> Option<Scalar> {
        match a.terms.len() {
            0 => None,
            1 => a.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }
}

impl ExprSemantics for ElementGrammar<'_> {
    type Value = AlgebraElement;

    fn integer(&self, n: BigInt) -> Result<AlgebraElement> {
        let c = self.0.domain().from_rational(num_rational::BigRational::from_integer(n));
        Ok(self.0.constant(c))
    }

    fn symbol(&self, name: &str, offset: usize) -> Result<AlgebraElement> {
        if let Some(i) = self.0.generator_index(name) {
            return Ok(self.0.gen(i));
        }
        match scalar_symbol(self.0.domain(), name) {
            Some(s) => Ok(self.0.constant(s?)),
            None => Err(Error::parse(offset, format!("unknown generator '{name}'"))),
        }
    }

    fn add(&self, a: AlgebraElement, b: AlgebraElement) -> Result<AlgebraElement> {
        Ok(a.add(&b))
    }

    fn sub(&self, a: AlgebraElement, b: AlgebraElement) -> Result<AlgebraElement> {
        Ok(a.sub(&b))
    }

    fn mul(&self, a: AlgebraElement, b: AlgebraElement) -> Result<AlgebraElement> {
        self.0.multiply(&a, &b)
    }

    fn div(&self, a: AlgebraElement, b: AlgebraElement, offset: usize) -> Result<AlgebraElement> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let s = Self::as_scalar(&b)
            .ok_or_else(|| Error::parse(offset, "division by a non-scalar element"))?;
        Ok(a.scale(&s.inv()?))
    }

    fn neg(&self, a: AlgebraElement) -> Result<AlgebraElement> {
        Ok(a.neg())
    }

    fn pow(&self, a: AlgebraElement, k: i64, offset: usize) -> Result<AlgebraElement> {
        if let Some(s) = Self::as_scalar(&a) {
            return Ok(self.0.constant(s.pow(k)?));
        }
        if k < 0 {
            return Err(Error::parse(offset, "negative power of a non-scalar element"));
        }
        let mut acc = self.0.unit();
        for _ in 0..k {
            acc = self.0.multiply(&acc, &a)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn word(spec: &AlgebraSpec, text: &str) -> Vec<usize> {
        text.split('*').map(|n| spec.generator_index(n).unwrap()).collect()
    }

    #[test]
    fn grassmann_normal_forms() {
        let gr4 = instances::gr4_spec();
        let (c, m) = gr4.normalize_word(&word(&gr4, "x2*x1")).unwrap().unwrap();
        assert!(c.is_minus_one());
        assert_eq!(gr4.render_monomial(&m), "x1*x2");
        assert!(gr4.normalize_word(&word(&gr4, "x1*x1")).unwrap().is_none());
    }

    #[test]
    fn quantum_plane_normal_forms() {
        let qp = instances::qp_spec();
        let (c, m) = qp.normalize_word(&word(&qp, "y*x")).unwrap().unwrap();
        assert_eq!(c.to_string(), "1/q");
        assert_eq!(qp.render_monomial(&m), "x*y");
        let (c, m) = qp.normalize_word(&word(&qp, "x*x")).unwrap().unwrap();
        assert!(c.is_one());
        assert_eq!(qp.render_monomial(&m), "x*x");
    }

    #[test]
    fn normal_forms_are_fixed_points() {
        let qp = instances::qp_spec();
        for m in qp.basis(4) {
            let (c, n) = qp.normalize_word(m.indices()).unwrap().unwrap();
            assert!(c.is_one());
            assert_eq!(n, m);
        }
    }

    #[test]
    fn multiplication_examples() {
        let gr4 = instances::gr4_spec();
        let p = |s: &str| gr4.parse_element(s).unwrap();
        assert!(gr4.multiply(&p("x1*x2"), &p("x2*x3")).unwrap().is_zero());
        assert_eq!(gr4.multiply(&p("x1*x3"), &p("x2")).unwrap(), p("-x1*x2*x3"));
        let qp = instances::qp_spec();
        let p = |s: &str| qp.parse_element(s).unwrap();
        let prod = qp.multiply(&p("x*y"), &p("x")).unwrap();
        assert_eq!(qp.render(&prod), "(1/q)*x*x*y");
        assert_eq!(prod, p("q^-1*x^2*y"));
    }

    #[test]
    fn truncation_is_loud() {
        let qp = instances::qp_spec();
        let long = vec![0; qp.max_len() + 1];
        assert!(matches!(
            qp.normalize_word(&long),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    #[test]
    fn linear_structure() {
        let gr4 = instances::gr4_spec();
        let p = |s: &str| gr4.parse_element(s).unwrap();
        assert!(p("x1").add(&p("-x1")).is_zero());
        assert_eq!(p("x1*x2").scale(&gr4.domain().from_int(2)), p("2*x1*x2"));
        assert!(AlgebraElement::zero().neg().is_zero());
        let other = crate::scalar::ScalarDomain::Cyclotomic(4).one();
        assert!(p("x1").checked_scale(&other).is_err());
    }

    #[test]
    fn components_by_degree() {
        let gr4 = instances::gr4_spec();
        let a = gr4.parse_element("x1 + x1*x2").unwrap();
        let comps = gr4.homogeneous_components(&a);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&GroupElement(vec![1])], gr4.parse_element("x1").unwrap());
        assert_eq!(comps[&GroupElement(vec![2])], gr4.parse_element("x1*x2").unwrap());
        assert!(gr4.homogeneous_components(&AlgebraElement::zero()).is_empty());
        assert!(gr4.degree_of(&a).is_err());
    }

    #[test]
    fn basis_enumeration() {
        let gr4 = instances::gr4_spec();
        assert_eq!(gr4.basis(4).len(), 16);
        assert_eq!(gr4.basis(0), vec![Monomial::unit()]);
        let qp = instances::qp_spec();
        let names: Vec<String> = qp.basis(2).iter().map(|m| qp.render_monomial(m)).collect();
        assert_eq!(names, ["1", "x", "y", "x*x", "x*y", "y*y"]);
    }

    #[test]
    fn commutativity_verdicts() {
        assert!(instances::gr4_spec().validate_commutativity(4).unwrap().holds());
        assert!(instances::qp_spec().validate_commutativity(3).unwrap().holds());
        let ns = instances::ns_spec();
        let v = ns.validate_commutativity(2).unwrap();
        assert!(!v.holds());
        let first = &v.failures[0];
        let names: Vec<String> = first.inputs.iter().map(|m| ns.render_monomial(m)).collect();
        assert_eq!(names, ["x", "y"]);
    }

    #[test]
    fn render_parse_round_trip() {
        let qp = instances::qp_spec();
        let a = qp.parse_element("(q+1)/(2*q)*x*y - 3 + y^2/q").unwrap();
        assert_eq!(qp.parse_element(&qp.render(&a)).unwrap(), a);
        assert!(qp.parse_element("x/y").is_err());
        assert!(qp.parse_element("z").is_err());
    }
}
