//! JSON run configurations: parsing, validation into an [`Instance`], and
//! canonical rendering with a content digest.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{AlgebraElement, AlgebraSpec, Generator};
use crate::error::{Error, Result};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::omega::{CFunction, GradedLinearMap};
use crate::scalar::ScalarDomain;
use crate::verify::{Bounds, Instance, Mode, SuiteId, SuiteRequest};

pub const SCHEMA: &str = "bverify/config/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub schema: String,
    pub name: String,
    pub domain: String,
    pub group: GroupSpec,
    pub bicharacter: Vec<Vec<String>>,
    pub generators: Vec<GeneratorConfig>,
    pub max_len: usize,
    #[serde(default)]
    pub derivations: Vec<DerivationConfig>,
    #[serde(default)]
    pub maps: Vec<MapConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cfun: Option<CFunctionConfig>,
    pub bounds: BoundsConfig,
    #[serde(default)]
    pub prechecks: Vec<String>,
    pub suites: Vec<SuiteConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub name: String,
    pub degree: Vec<i64>,
}

/// A derivation given by its generator values; unlisted generators map to
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationConfig {
    pub name: String,
    pub degree: Vec<i64>,
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapConfig {
    /// Explicit images of basis monomials of length `<= basis_len`.
    Table {
        name: String,
        degree: Vec<i64>,
        basis_len: usize,
        images: BTreeMap<String, String>,
    },
    Derivation {
        name: String,
        degree: Vec<i64>,
        values: BTreeMap<String, String>,
    },
    /// `lmul(x1) . der(d3) . der(d2) + ...`: sums of compositions of
    /// left multiplications, derivations, `id` and earlier maps.
    Composite {
        name: String,
        expr: String,
        degree: Vec<i64>,
    },
}

impl MapConfig {
    pub fn name(&self) -> &str {
        match self {
            MapConfig::Table { name, .. }
            | MapConfig::Derivation { name, .. }
            | MapConfig::Composite { name, .. } => name,
        }
    }

    fn degree(&self) -> &[i64] {
        match self {
            MapConfig::Table { degree, .. }
            | MapConfig::Derivation { degree, .. }
            | MapConfig::Composite { degree, .. } => degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CFunctionConfig {
    Constant { value: String },
    SignAlternating { functional: Vec<i64> },
    Table { entries: Vec<CEntry> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CEntry {
    pub g: Vec<i64>,
    pub h: Vec<i64>,
    pub value: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    pub per_arg: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<usize>,
}

impl From<BoundsConfig> for Bounds {
    fn from(b: BoundsConfig) -> Self {
        Bounds {
            per_arg: b.per_arg,
            total: b.total,
        }
    }
}

impl From<Bounds> for BoundsConfig {
    fn from(b: Bounds) -> Self {
        BoundsConfig {
            per_arg: b.per_arg,
            total: b.total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsConfig>,
}

/// A validated configuration: the instance, the suite requests and the
/// maps to precheck.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub config: Config,
    pub instance: Instance,
    pub requests: Vec<SuiteRequest>,
    pub prechecks: Vec<String>,
    pub digest: String,
}

impl Config {
    /// Parses JSON text. Syntax errors carry a byte offset; structural ones
    /// are schema errors.
    pub fn from_json(text: &str) -> Result<Config> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
            let offset = byte_offset(text, e.line(), e.column());
            Error::parse(offset, format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::schema("$", "expected an object"))?;
        match obj.get("schema") {
            None => return Err(Error::schema("schema", "missing field")),
            Some(serde_json::Value::String(s)) if s == SCHEMA => {}
            Some(other) => {
                return Err(Error::schema("schema", format!("expected \"{SCHEMA}\", got {other}")))
            }
        }
        serde_json::from_value(value).map_err(|e| {
            let msg = e.to_string();
            Error::schema(schema_field(&msg), msg)
        })
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Config::from_json(&text)
    }

    /// Pretty JSON in field order; `from_json(render())` returns `self`.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("config serializes");
        s.push('\n');
        s
    }

    /// `sha256:<hex>` of the compact canonical JSON.
    pub fn digest(&self) -> String {
        let compact = serde_json::to_string(self).expect("config serializes");
        format!("sha256:{}", hex::encode(Sha256::digest(compact.as_bytes())))
    }

    /// Validates the configuration, builds the instance, and returns the
    /// configuration with every scalar and element rewritten in canonical
    /// form.
    pub fn validate(&self) -> Result<Loaded> {
        let domain: ScalarDomain = self
            .domain
            .parse()
            .map_err(|e: Error| Error::validation("domain", e.to_string()))?;
        let group = GroupSpec::new(self.group.free_rank, self.group.torsion_orders.clone())
            .map_err(|e| Error::validation("group", e.to_string()))?;
        let chi = build_chi(&self.bicharacter, &group, &domain)?;
        let mut canon = self.clone();
        canon.domain = domain.to_string();
        canon.bicharacter = chi
            .matrix()
            .iter()
            .map(|row| row.iter().map(|s| s.to_string()).collect())
            .collect();

        let gens = self
            .generators
            .iter()
            .map(|g| Generator {
                name: g.name.clone(),
                degree: GroupElement(g.degree.clone()),
            })
            .collect();
        let spec = Arc::new(
            AlgebraSpec::new(gens, chi, self.max_len).map_err(|e| Error::validation("generators", e.to_string()))?,
        );
        for (i, g) in spec.generators().iter().enumerate() {
            canon.generators[i].degree = g.degree.0.clone();
        }

        let mut derivations = BTreeMap::new();
        for (i, d) in self.derivations.iter().enumerate() {
            let field = format!("derivations[{i}]");
            if derivations.contains_key(&d.name) {
                return Err(Error::validation(field, format!("duplicate derivation '{}'", d.name)));
            }
            let (map, values) = build_derivation(&spec, &d.degree, &d.values, &field)?;
            canon.derivations[i].values = values;
            canon.derivations[i].degree = map.degree().0.clone();
            derivations.insert(d.name.clone(), map);
        }

        let mut maps = BTreeMap::new();
        for (i, m) in self.maps.iter().enumerate() {
            let field = format!("maps[{i}]");
            let name = m.name().to_string();
            if maps.contains_key(&name) || derivations.contains_key(&name) {
                return Err(Error::validation(field, format!("duplicate map '{name}'")));
            }
            let declared = spec
                .group()
                .canonicalize(&GroupElement(m.degree().to_vec()))
                .map_err(|e| Error::validation(format!("{field}.degree"), e.to_string()))?;
            let built = match (m, &mut canon.maps[i]) {
                (
                    MapConfig::Table {
                        basis_len, images, ..
                    },
                    MapConfig::Table { images: out, .. },
                ) => {
                    let (map, rendered) = build_table(&spec, &declared, *basis_len, images, &field)?;
                    *out = rendered;
                    map
                }
                (MapConfig::Derivation { values, .. }, MapConfig::Derivation { values: out, .. }) => {
                    let (map, rendered) = build_derivation(&spec, m.degree(), values, &field)?;
                    *out = rendered;
                    map
                }
                (MapConfig::Composite { expr, .. }, MapConfig::Composite { expr: out, .. }) => {
                    let (map, rendered) = CompositeParser::new(&spec, &derivations, &maps, &field).parse(expr)?;
                    *out = rendered;
                    map
                }
                _ => unreachable!("canonical copy has the same shape"),
            };
            if built.degree() != &declared {
                return Err(Error::validation(
                    format!("{field}.degree"),
                    format!("declared {declared} but the map has degree {}", built.degree()),
                ));
            }
            set_degree(&mut canon.maps[i], declared.0.clone());
            maps.insert(name, built);
        }

        let cfun = match &self.cfun {
            None => None,
            Some(c) => Some(build_cfun(c, &spec, &mut canon)?),
        };

        let mut requests = Vec::new();
        for (i, s) in self.suites.iter().enumerate() {
            let field = format!("suites[{i}]");
            let suite: SuiteId = s
                .suite
                .parse()
                .map_err(|e: Error| Error::validation(format!("{field}.suite"), e.to_string()))?;
            let mut req = SuiteRequest::new(suite);
            match (&s.map, suite.needs_map()) {
                (Some(name), _) if !maps.contains_key(name) => {
                    return Err(Error::validation(format!("{field}.map"), format!("unknown map '{name}'")))
                }
                (Some(name), _) => req = req.map(name),
                (None, true) => {
                    return Err(Error::validation(format!("{field}.map"), format!("suite {suite} needs a map")))
                }
                (None, false) => {}
            }
            if let Some(mode) = &s.mode {
                let mode: Mode = mode
                    .parse()
                    .map_err(|e: Error| Error::validation(format!("{field}.mode"), e.to_string()))?;
                req = req.mode(mode);
            }
            if let Some(b) = s.bounds {
                req = req.bounds(b.into());
            }
            requests.push(req);
        }

        let mut prechecks: BTreeSet<String> = BTreeSet::new();
        for (i, name) in self.prechecks.iter().enumerate() {
            if !maps.contains_key(name) {
                return Err(Error::validation(format!("prechecks[{i}]"), format!("unknown map '{name}'")));
            }
            prechecks.insert(name.clone());
        }
        for r in &requests {
            if r.suite.requires_special_map() {
                prechecks.extend(r.map.clone());
            }
        }

        let instance = Instance {
            name: self.name.clone(),
            spec,
            maps,
            cfun,
            bounds: self.bounds.into(),
        };
        let digest = canon.digest();
        Ok(Loaded {
            config: canon,
            instance,
            requests,
            prechecks: prechecks.into_iter().collect(),
            digest,
        })
    }
}

fn set_degree(m: &mut MapConfig, d: Vec<i64>) {
    match m {
        MapConfig::Table { degree, .. } | MapConfig::Derivation { degree, .. } | MapConfig::Composite { degree, .. } => {
            *degree = d
        }
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (i, l) in text.split_inclusive('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1).min(l.len());
        }
        offset += l.len();
    }
    text.len()
}

/// Best-effort field name from a serde message such as "missing field `suites`".
fn schema_field(msg: &str) -> String {
    msg.split('`').nth(1).unwrap_or("config").to_string()
}

fn build_chi(rows: &[Vec<String>], group: &GroupSpec, domain: &ScalarDomain) -> Result<Bicharacter> {
    let mut matrix = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, s) in row.iter().enumerate() {
            let v = domain
                .parse(s)
                .map_err(|e| Error::validation(format!("bicharacter[{i}][{j}]"), e.to_string()))?;
            out.push(v);
        }
        matrix.push(out);
    }
    let chi = Bicharacter::new(group.clone(), domain.clone(), matrix)
        .map_err(|e| Error::validation("bicharacter", e.to_string()))?;
    let check = chi.validate();
    if let Some(v) = check.violations.first() {
        return Err(Error::validation(
            format!("bicharacter[{}][{}]", v.row, v.col),
            format!(
                "entry {} raised to the torsion order {} is {}, not 1",
                chi.matrix()[v.row][v.col],
                v.order,
                v.power
            ),
        ));
    }
    Ok(chi)
}

fn parse_elem(spec: &AlgebraSpec, text: &str, field: &str) -> Result<AlgebraElement> {
    spec.parse_element(text)
        .map_err(|e| Error::validation(field, e.to_string()))
}

fn build_derivation(
    spec: &Arc<AlgebraSpec>,
    degree: &[i64],
    values: &BTreeMap<String, String>,
    field: &str,
) -> Result<(GradedLinearMap, BTreeMap<String, String>)> {
    let mut parsed = BTreeMap::new();
    let mut rendered = BTreeMap::new();
    for (gen, text) in values {
        let f = format!("{field}.values.{gen}");
        let i = spec
            .generator_index(gen)
            .ok_or_else(|| Error::validation(&f, format!("unknown generator '{gen}'")))?;
        let v = parse_elem(spec, text, &f)?;
        rendered.insert(gen.clone(), spec.render(&v));
        parsed.insert(i, v);
    }
    let map = GradedLinearMap::derivation(spec, &parsed, GroupElement(degree.to_vec()))
        .map_err(|e| Error::validation(field, e.to_string()))?;
    Ok((map, rendered))
}

fn build_table(
    spec: &Arc<AlgebraSpec>,
    degree: &GroupElement,
    basis_len: usize,
    images: &BTreeMap<String, String>,
    field: &str,
) -> Result<(GradedLinearMap, BTreeMap<String, String>)> {
    let mut parsed = BTreeMap::new();
    for (mono, text) in images {
        let f = format!("{field}.images.{mono}");
        let m = spec
            .parse_monomial(mono)
            .map_err(|e| Error::validation(&f, e.to_string()))?;
        let v = parse_elem(spec, text, &f)?;
        if parsed.insert(m, v).is_some() {
            return Err(Error::validation(f, "monomial listed twice"));
        }
    }
    let rendered = parsed
        .iter()
        .map(|(m, v)| (spec.render_monomial(m), spec.render(v)))
        .collect();
    let map = GradedLinearMap::table(spec, degree.clone(), parsed, basis_len)
        .map_err(|e| Error::validation(field, e.to_string()))?;
    Ok((map, rendered))
}

fn build_cfun(c: &CFunctionConfig, spec: &AlgebraSpec, canon: &mut Config) -> Result<CFunction> {
    let domain = spec.domain();
    let dim = spec.group().dimension();
    let check_dim = |v: &[i64], field: String| {
        if v.len() == dim {
            Ok(())
        } else {
            Err(Error::validation(field, format!("expected {dim} coordinates, got {}", v.len())))
        }
    };
    match c {
        CFunctionConfig::Constant { value } => {
            let v = domain
                .parse(value)
                .map_err(|e| Error::validation("cfun.value", e.to_string()))?;
            canon.cfun = Some(CFunctionConfig::Constant { value: v.to_string() });
            Ok(CFunction::Constant(v))
        }
        CFunctionConfig::SignAlternating { functional } => {
            check_dim(functional, "cfun.functional".into())?;
            Ok(CFunction::sign_alternating(functional.clone()))
        }
        CFunctionConfig::Table { entries } => {
            let mut table = BTreeMap::new();
            let mut rendered = Vec::new();
            for (i, entry) in entries.iter().enumerate() {
                let field = format!("cfun.entries[{i}]");
                check_dim(&entry.g, format!("{field}.g"))?;
                check_dim(&entry.h, format!("{field}.h"))?;
                let canon_deg = |v: &[i64]| {
                    spec.group()
                        .canonicalize(&GroupElement(v.to_vec()))
                        .map_err(|e| Error::validation(&field, e.to_string()))
                };
                let g = canon_deg(&entry.g)?;
                let h = canon_deg(&entry.h)?;
                let v = domain
                    .parse(&entry.value)
                    .map_err(|e| Error::validation(format!("{field}.value"), e.to_string()))?;
                rendered.push(CEntry {
                    g: g.0.clone(),
                    h: h.0.clone(),
                    value: v.to_string(),
                });
                if table.insert((g, h), v).is_some() {
                    return Err(Error::validation(field, "degree pair listed twice"));
                }
            }
            canon.cfun = Some(CFunctionConfig::Table { entries: rendered });
            Ok(CFunction::Table(table))
        }
    }
}

/// Parser for composite map expressions:
///
/// ```text
/// expr   := ['-'] chain (('+' | '-') chain)*
/// chain  := factor ('.' factor)*
/// factor := 'lmul(' element ')' | 'der(' name ')' | 'id' | name
/// ```
struct CompositeParser<'a> {
    spec: &'a Arc<AlgebraSpec>,
    derivations: &'a BTreeMap<String, GradedLinearMap>,
    maps: &'a BTreeMap<String, GradedLinearMap>,
    field: &'a str,
}

impl<'a> CompositeParser<'a> {
    fn new(
        spec: &'a Arc<AlgebraSpec>,
        derivations: &'a BTreeMap<String, GradedLinearMap>,
        maps: &'a BTreeMap<String, GradedLinearMap>,
        field: &'a str,
    ) -> Self {
        CompositeParser {
            spec,
            derivations,
            maps,
            field,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::validation(format!("{}.expr", self.field), msg)
    }

    fn parse(&self, expr: &str) -> Result<(GradedLinearMap, String)> {
        let mut chains: Vec<(bool, &str)> = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let mut negative = false;
        let bytes = expr.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 => {
                    let piece = expr[start..i].trim();
                    if piece.is_empty() {
                        if !chains.is_empty() || i != expr.len() - expr.trim_start().len() {
                            return Err(self.err(format!("dangling operator at offset {i}")));
                        }
                    } else {
                        chains.push((negative, piece));
                    }
                    negative = b == b'-';
                    start = i + 1;
                }
                _ => {}
            }
            if depth < 0 {
                return Err(self.err(format!("unbalanced ')' at offset {i}")));
            }
        }
        if depth != 0 {
            return Err(self.err("unbalanced '('"));
        }
        let last = expr[start..].trim();
        if last.is_empty() {
            return Err(self.err("empty term"));
        }
        chains.push((negative, last));

        let mut total: Option<GradedLinearMap> = None;
        let mut rendered = String::new();
        for (neg, chain) in chains {
            let (map, text) = self.chain(chain)?;
            let map = if neg {
                map.scale(self.spec.domain().from_int(-1))
            } else {
                map
            };
            rendered.push_str(match (rendered.is_empty(), neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            });
            rendered.push_str(&text);
            total = Some(match total {
                None => map,
                Some(t) => t.add(&map).map_err(|e| self.err(e.to_string()))?,
            });
        }
        Ok((total.expect("at least one term"), rendered))
    }

    fn chain(&self, chain: &str) -> Result<(GradedLinearMap, String)> {
        let mut factors = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, b) in chain.bytes().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'.' if depth == 0 => {
                    factors.push(chain[start..i].trim());
                    start = i + 1;
                }
                _ => {}
            }
        }
        factors.push(chain[start..].trim());
        let mut out: Option<GradedLinearMap> = None;
        let mut texts = Vec::new();
        for f in factors {
            let (map, text) = self.factor(f)?;
            texts.push(text);
            out = Some(match out {
                None => map,
                Some(acc) => acc.compose(&map),
            });
        }
        Ok((out.expect("nonempty chain"), texts.join(" . ")))
    }

    fn factor(&self, f: &str) -> Result<(GradedLinearMap, String)> {
        if f.is_empty() {
            return Err(self.err("empty factor"));
        }
        if let Some(inner) = call_arg(f, "lmul") {
            let x = self
                .spec
                .parse_element(inner)
                .map_err(|e| self.err(format!("in lmul: {e}")))?;
            let text = format!("lmul({})", self.spec.render(&x));
            let map = GradedLinearMap::left_multiply(self.spec, x).map_err(|e| self.err(e.to_string()))?;
            return Ok((map, text));
        }
        if let Some(inner) = call_arg(f, "der") {
            let name = inner.trim();
            let map = self
                .derivations
                .get(name)
                .ok_or_else(|| self.err(format!("unknown derivation '{name}'")))?;
            return Ok((map.clone(), format!("der({name})")));
        }
        if f == "id" {
            return Ok((GradedLinearMap::identity(self.spec), "id".into()));
        }
        match self.maps.get(f) {
            Some(m) => Ok((m.clone(), f.to_string())),
            None => Err(self.err(format!("unknown map '{f}'"))),
        }
    }
}

fn call_arg<'t>(f: &'t str, head: &str) -> Option<&'t str> {
    f.strip_prefix(head)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

#[cfg(test)]
mod tests {
    use super::*;

    const GR4: &str = include_str!("../configs/gr4.json");

    #[test]
    fn shipped_gr4_parses() {
        let c = Config::from_json(GR4).unwrap();
        assert_eq!(c.generators.len(), 4);
        assert_eq!(c.maps.len(), 2);
        let loaded = c.validate().unwrap();
        assert_eq!(loaded.instance.maps.len(), 2);
        let d = &loaded.instance.maps["D_odd"];
        let spec = &loaded.instance.spec;
        let x2x3 = spec.parse_element("x2*x3").unwrap();
        assert_eq!(spec.render(&d.apply(&x2x3).unwrap()), "x1");
    }

    #[test]
    fn render_round_trips() {
        let c = Config::from_json(GR4).unwrap();
        let canon = c.validate().unwrap().config;
        let again = Config::from_json(&canon.render()).unwrap();
        assert_eq!(again, canon);
        assert_eq!(again.validate().unwrap().config, canon);
        assert_eq!(again.digest(), canon.digest());
    }

    #[test]
    fn missing_suites_is_a_schema_error() {
        let mut v: serde_json::Value = serde_json::from_str(GR4).unwrap();
        v.as_object_mut().unwrap().remove("suites");
        let err = Config::from_json(&v.to_string()).unwrap_err();
        assert!(matches!(err, Error::Schema { ref field, .. } if field == "suites"), "{err}");
    }

    #[test]
    fn wrong_schema_tag() {
        let text = GR4.replace(SCHEMA, "bverify/config/0");
        assert!(matches!(Config::from_json(&text), Err(Error::Schema { .. })));
    }

    #[test]
    fn syntax_error_has_offset() {
        let err = Config::from_json("{\n  \"schema\": }").unwrap_err();
        assert!(matches!(err, Error::Parse { offset, .. } if offset > 0), "{err}");
    }

    #[test]
    fn torsion_violation_names_entry() {
        let text = r#"{
          "schema": "bverify/config/1", "name": "bad", "domain": "rational_function(q)",
          "group": {"free_rank": 0, "torsion": [2]}, "bicharacter": [["q"]],
          "generators": [{"name": "x", "degree": [1]}], "max_len": 4,
          "bounds": {"per_arg": 2}, "suites": []
        }"#;
        let err = Config::from_json(text).unwrap().validate().unwrap_err();
        assert!(
            matches!(err, Error::Validation { ref field, .. } if field == "bicharacter[0][0]"),
            "{err}"
        );
    }

    #[test]
    fn unknown_map_reference() {
        let text = GR4.replace("\"map\": \"D_odd\"", "\"map\": \"D_missing\"");
        let err = Config::from_json(&text).unwrap().validate().unwrap_err();
        assert!(matches!(err, Error::Validation { ref message, .. } if message.contains("D_missing")));
    }

    #[test]
    fn composite_grammar() {
        let c = Config::from_json(GR4).unwrap().validate().unwrap();
        let spec = c.instance.spec.clone();
        let derivs: BTreeMap<String, GradedLinearMap> = ["d1", "d2", "d3", "d4"]
            .iter()
            .map(|n| (n.to_string(), crate::instances::gr4().maps[*n].clone()))
            .collect();
        let maps = BTreeMap::new();
        let p = CompositeParser::new(&spec, &derivs, &maps, "maps[0]");
        let (m, text) = p.parse("der(d2).der(d1) + der(d4) . der(d3)").unwrap();
        assert_eq!(text, "der(d2) . der(d1) + der(d4) . der(d3)");
        let x = spec.parse_element("x1*x2*x3*x4").unwrap();
        assert_eq!(spec.render(&m.power(2).apply(&x).unwrap()), "2");
        let (neg, text) = p.parse("-id").unwrap();
        assert_eq!(text, "-id");
        assert_eq!(spec.render(&neg.apply(&spec.gen(0)).unwrap()), "-x1");
        assert!(p.parse("der(d2) +").is_err());
        assert!(p.parse("der(d9)").is_err());
        assert!(p.parse("lmul(x1").is_err());
    }
}
