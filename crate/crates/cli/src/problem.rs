//! The JSON problem file: parsing with validation, and canonical output.
//!
//! Canonical output writes every collection, sorts all object keys, stores
//! vectors by their closed member sets, and writes design problems and
//! norphisms as explicit `true_pairs` relations.

use std::collections::BTreeMap;

use norphism_core::dp::{DesignProblem, FVector, RCovector};
use norphism_core::metric::{format_rational, parse_rational, Edge, LowerBound, Rational, Strictness, WeightedDigraph};
use norphism_core::norphism::{resource_limit_schema, NorphismDP};
use norphism_core::poset::Preorder;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Spaced<T> {
    pub space: String,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Typed<T> {
    pub dom: String,
    pub cod: String,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphBound {
    pub graph: String,
    pub bound: LowerBound,
}

/// A fully resolved and validated problem file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProblemFile {
    pub posets: BTreeMap<String, Preorder>,
    pub vectors: BTreeMap<String, Spaced<FVector>>,
    pub covectors: BTreeMap<String, Spaced<RCovector>>,
    pub dps: BTreeMap<String, Typed<DesignProblem>>,
    pub norphisms: BTreeMap<String, Typed<NorphismDP>>,
    pub graphs: BTreeMap<String, WeightedDigraph>,
    pub bounds: BTreeMap<String, GraphBound>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    posets: BTreeMap<String, RawPoset>,
    #[serde(default)]
    vectors: BTreeMap<String, RawVector>,
    #[serde(default)]
    covectors: BTreeMap<String, RawVector>,
    #[serde(default)]
    dps: BTreeMap<String, Value>,
    #[serde(default)]
    norphisms: BTreeMap<String, Value>,
    #[serde(default)]
    graphs: BTreeMap<String, RawGraph>,
    #[serde(default)]
    bounds: BTreeMap<String, RawBound>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoset {
    elements: Vec<String>,
    #[serde(default)]
    covers: Vec<(String, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVector {
    space: String,
    members: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdentity {
    identity: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRelation {
    dom: String,
    cod: String,
    true_pairs: Vec<(String, String)>,
    #[serde(default)]
    autoclose: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPart {
    f: String,
    r: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParts {
    parts: Vec<RawPart>,
    dom: Option<String>,
    cod: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSchema {
    schema: String,
    pools: Vec<String>,
    space: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    nodes: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String, RawNumber)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBound {
    graph: Option<String>,
    from: String,
    to: String,
    mu: RawNumber,
    #[serde(default = "default_strict")]
    strict: bool,
}

fn default_strict() -> bool {
    true
}

/// Integers stay JSON numbers; anything else must be a decimal or `p/q` string.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Int(i64),
    Float(f64),
    Text(String),
}

impl RawNumber {
    fn to_rational(&self, kind: &'static str, name: &str) -> Result<Rational> {
        let bad = |message: String| CliError::Malformed {
            kind,
            name: name.to_owned(),
            message,
        };
        match self {
            RawNumber::Int(i) => Ok(Rational::from_integer(*i)),
            RawNumber::Float(x) => Err(bad(format!(
                "non-integer number {x}; write it as a string such as \"{x}\" to keep it exact"
            ))),
            RawNumber::Text(s) => parse_rational(s).ok_or_else(|| bad(format!("`{s}` is not a number"))),
        }
    }
}

pub(crate) fn number(r: &Rational) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(format_rational(r))
    }
}

fn syntax(e: serde_json::Error) -> CliError {
    CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn entry<T: DeserializeOwned>(kind: &'static str, name: &str, v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::Malformed {
        kind,
        name: name.to_owned(),
        message: e.to_string(),
    })
}

fn lookup<'a, T>(
    map: &'a BTreeMap<String, T>,
    kind: &'static str,
    name: &str,
    target_kind: &'static str,
    target: &str,
) -> Result<&'a T> {
    map.get(target).ok_or_else(|| CliError::Unresolved {
        kind,
        name: name.to_owned(),
        target_kind,
        target: target.to_owned(),
    })
}

fn pairs(
    kind: &'static str,
    name: &str,
    dom: &Preorder,
    cod: &Preorder,
    raw: &[(String, String)],
) -> Result<Vec<(usize, usize)>> {
    let invalid = |source: norphism_core::Error| CliError::Invalid {
        kind,
        name: name.to_owned(),
        source: Box::new(source),
    };
    raw.iter()
        .map(|(p, q)| Ok((dom.index_of(p).map_err(invalid)?, cod.index_of(q).map_err(invalid)?)))
        .collect()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(syntax)?;
        let mut file = ProblemFile::default();

        for (name, p) in &raw.posets {
            let covers: Vec<(&str, &str)> = p.covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let elements: Vec<&str> = p.elements.iter().map(String::as_str).collect();
            let space = Preorder::from_hasse(&elements, &covers).map_err(|source| CliError::Invalid {
                kind: "poset",
                name: name.clone(),
                source: Box::new(source),
            })?;
            file.posets.insert(name.clone(), space);
        }

        for (name, v) in &raw.vectors {
            let space = lookup(&file.posets, "vector", name, "poset", &v.space)?;
            let value = FVector::from_names(space, &v.members).map_err(|source| CliError::Invalid {
                kind: "vector",
                name: name.clone(),
                source: Box::new(source),
            })?;
            file.vectors.insert(name.clone(), Spaced { space: v.space.clone(), value });
        }
        for (name, v) in &raw.covectors {
            let space = lookup(&file.posets, "covector", name, "poset", &v.space)?;
            let value = RCovector::from_names(space, &v.members).map_err(|source| CliError::Invalid {
                kind: "covector",
                name: name.clone(),
                source: Box::new(source),
            })?;
            file.covectors.insert(name.clone(), Spaced { space: v.space.clone(), value });
        }

        for (name, v) in &raw.dps {
            let entry = file.parse_dp(name, v)?;
            file.dps.insert(name.clone(), entry);
        }
        for (name, v) in &raw.norphisms {
            let entry = file.parse_norphism(name, v)?;
            file.norphisms.insert(name.clone(), entry);
        }

        for (name, g) in &raw.graphs {
            let mut edges = Vec::with_capacity(g.edges.len());
            for (s, d, w) in &g.edges {
                let find = |n: &str| {
                    g.nodes.iter().position(|x| x == n).ok_or_else(|| CliError::Unresolved {
                        kind: "graph",
                        name: name.clone(),
                        target_kind: "node",
                        target: n.to_owned(),
                    })
                };
                edges.push(Edge {
                    src: find(s)?,
                    dst: find(d)?,
                    weight: w.to_rational("graph", name)?,
                });
            }
            let graph = WeightedDigraph::new(g.nodes.clone(), edges).map_err(|source| CliError::Invalid {
                kind: "graph",
                name: name.clone(),
                source: Box::new(source),
            })?;
            file.graphs.insert(name.clone(), graph);
        }

        for (name, b) in &raw.bounds {
            let graph_name = match (&b.graph, file.graphs.len()) {
                (Some(g), _) => g.clone(),
                (None, 1) => file.graphs.keys().next().cloned().unwrap_or_default(),
                (None, n) => {
                    return Err(CliError::Malformed {
                        kind: "bound",
                        name: name.clone(),
                        message: format!("the file has {n} graphs; name one with `graph`"),
                    })
                }
            };
            let g = lookup(&file.graphs, "bound", name, "graph", &graph_name)?;
            let node = |n: &str| {
                g.index_of(n).map_err(|source| CliError::Invalid {
                    kind: "bound",
                    name: name.clone(),
                    source: Box::new(source),
                })
            };
            let strictness = if b.strict { Strictness::Strict } else { Strictness::Literal };
            let bound = LowerBound::new(node(&b.from)?, node(&b.to)?, b.mu.to_rational("bound", name)?, strictness);
            file.bounds.insert(name.clone(), GraphBound { graph: graph_name, bound });
        }
        Ok(file)
    }

    fn parse_dp(&self, name: &str, v: &Value) -> Result<Typed<DesignProblem>> {
        const KIND: &str = "dp";
        if v.get("identity").is_some() {
            let raw: RawIdentity = entry(KIND, name, v)?;
            let space = lookup(&self.posets, KIND, name, "poset", &raw.identity)?;
            return Ok(Typed {
                dom: raw.identity.clone(),
                cod: raw.identity,
                value: DesignProblem::identity(space),
            });
        }
        let raw: RawRelation = entry(KIND, name, v)?;
        let dom = lookup(&self.posets, KIND, name, "poset", &raw.dom)?;
        let cod = lookup(&self.posets, KIND, name, "poset", &raw.cod)?;
        let cells = pairs(KIND, name, dom, cod, &raw.true_pairs)?;
        let built = if raw.autoclose {
            DesignProblem::autoclose(dom.clone(), cod.clone(), &cells)
        } else {
            DesignProblem::from_pairs(dom.clone(), cod.clone(), &cells)
        };
        let value = built.map_err(|source| CliError::Invalid {
            kind: KIND,
            name: name.to_owned(),
            source: Box::new(source),
        })?;
        Ok(Typed {
            dom: raw.dom,
            cod: raw.cod,
            value,
        })
    }

    fn parse_norphism(&self, name: &str, v: &Value) -> Result<Typed<NorphismDP>> {
        const KIND: &str = "norphism";
        let invalid = |source: norphism_core::Error| CliError::Invalid {
            kind: KIND,
            name: name.to_owned(),
            source: Box::new(source),
        };
        let malformed = |message: String| CliError::Malformed {
            kind: KIND,
            name: name.to_owned(),
            message,
        };
        if v.get("schema").is_some() {
            let raw: RawSchema = entry(KIND, name, v)?;
            if raw.schema != "resource_limit" {
                return Err(malformed(format!("unknown schema `{}`", raw.schema)));
            }
            let mut pools = Vec::new();
            let mut space_name = raw.space.clone();
            for p in &raw.pools {
                let pool = lookup(&self.covectors, KIND, name, "covector", p)?;
                match &space_name {
                    Some(s) if *s != pool.space => {
                        return Err(malformed(format!("pool `{p}` lives on `{}`, not `{s}`", pool.space)))
                    }
                    _ => space_name = Some(pool.space.clone()),
                }
                pools.push(pool.value.clone());
            }
            let space_name = space_name.ok_or_else(|| malformed("no pools and no `space`".into()))?;
            let space = lookup(&self.posets, KIND, name, "poset", &space_name)?;
            let value = resource_limit_schema(space, &pools).map_err(invalid)?;
            return Ok(Typed {
                dom: space_name.clone(),
                cod: space_name,
                value,
            });
        }
        if v.get("parts").is_some() {
            let raw: RawParts = entry(KIND, name, v)?;
            let mut dom = raw.dom.clone();
            let mut cod = raw.cod.clone();
            let mut parts = Vec::new();
            for part in &raw.parts {
                let f = lookup(&self.vectors, KIND, name, "vector", &part.f)?;
                let r = lookup(&self.covectors, KIND, name, "covector", &part.r)?;
                for (slot, got) in [(&mut dom, &f.space), (&mut cod, &r.space)] {
                    match slot {
                        Some(s) if s != got => {
                            return Err(malformed(format!("part ({}, {}) does not live on ({s}, ...)", part.f, part.r)))
                        }
                        _ => *slot = Some(got.clone()),
                    }
                }
                parts.push((f.value.clone(), r.value.clone()));
            }
            let (Some(dom), Some(cod)) = (dom, cod) else {
                return Err(malformed("no parts and no `dom`/`cod`".into()));
            };
            let p = lookup(&self.posets, KIND, name, "poset", &dom)?;
            let q = lookup(&self.posets, KIND, name, "poset", &cod)?;
            let value = NorphismDP::from_parts(p, q, &parts).map_err(invalid)?;
            return Ok(Typed { dom, cod, value });
        }
        let raw: RawRelation = entry(KIND, name, v)?;
        if raw.autoclose {
            return Err(malformed("`autoclose` applies to design problems only".into()));
        }
        let p = lookup(&self.posets, KIND, name, "poset", &raw.dom)?;
        let q = lookup(&self.posets, KIND, name, "poset", &raw.cod)?;
        let cells = pairs(KIND, name, p, q, &raw.true_pairs)?;
        let value = NorphismDP::from_pairs(p.clone(), q.clone(), &cells).map_err(invalid)?;
        Ok(Typed {
            dom: raw.dom,
            cod: raw.cod,
            value,
        })
    }

    /// Canonical JSON document.
    pub fn to_value(&self) -> Value {
        let mut out = Map::new();
        out.insert(
            "posets".into(),
            self.posets.iter().map(|(k, p)| (k.clone(), poset_value(p))).collect(),
        );
        let vector = |space: &str, s: &Preorder, members: &[bool]| {
            json!({"space": space, "members": names(s, members)})
        };
        out.insert(
            "vectors".into(),
            self.vectors
                .iter()
                .map(|(k, v)| (k.clone(), vector(&v.space, v.value.space(), v.value.members())))
                .collect(),
        );
        out.insert(
            "covectors".into(),
            self.covectors
                .iter()
                .map(|(k, v)| (k.clone(), vector(&v.space, v.value.space(), v.value.members())))
                .collect(),
        );
        out.insert(
            "dps".into(),
            self.dps
                .iter()
                .map(|(k, d)| (k.clone(), relation_value(&d.dom, &d.cod, d.value.dom(), d.value.cod(), &d.value.true_pairs())))
                .collect(),
        );
        out.insert(
            "norphisms".into(),
            self.norphisms
                .iter()
                .map(|(k, n)| {
                    let cells: Vec<_> = n.value.rel().true_cells().collect();
                    (k.clone(), relation_value(&n.dom, &n.cod, n.value.dom(), n.value.cod(), &cells))
                })
                .collect(),
        );
        out.insert(
            "graphs".into(),
            self.graphs.iter().map(|(k, g)| (k.clone(), graph_value(g))).collect(),
        );
        out.insert(
            "bounds".into(),
            self.bounds
                .iter()
                .map(|(k, b)| {
                    let g = &self.graphs[&b.graph];
                    (k.clone(), bound_value(&b.graph, g, &b.bound))
                })
                .collect(),
        );
        Value::Object(out)
    }

    /// Canonical text: pretty-printed, keys sorted, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }
}

fn names(space: &Preorder, members: &[bool]) -> Vec<String> {
    (0..members.len())
        .filter(|&i| members[i])
        .map(|i| space.name(i).to_owned())
        .collect()
}

pub(crate) fn poset_value(p: &Preorder) -> Value {
    let covers: Vec<Value> = p
        .covers()
        .into_iter()
        .map(|(a, b)| json!([p.name(a), p.name(b)]))
        .collect();
    json!({"elements": p.elements(), "covers": covers})
}

pub(crate) fn relation_value(dom_name: &str, cod_name: &str, dom: &Preorder, cod: &Preorder, cells: &[(usize, usize)]) -> Value {
    let pairs: Vec<Value> = cells
        .iter()
        .map(|&(p, q)| json!([dom.name(p), cod.name(q)]))
        .collect();
    json!({"dom": dom_name, "cod": cod_name, "true_pairs": pairs})
}

pub(crate) fn graph_value(g: &WeightedDigraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!([g.nodes()[e.src], g.nodes()[e.dst], number(&e.weight)]))
        .collect();
    json!({"nodes": g.nodes(), "edges": edges})
}

pub(crate) fn bound_value(graph_name: &str, g: &WeightedDigraph, b: &LowerBound) -> Value {
    json!({
        "graph": graph_name,
        "from": g.nodes()[b.from],
        "to": g.nodes()[b.to],
        "mu": number(&b.mu),
        "strict": b.strictness == Strictness::Strict,
    })
}
