//! Command dispatch. Every answer comes straight from a library call.

use norphism_core::dp::{self, DesignProblem, DEFAULT_CELL_CAP};
use norphism_core::gen;
use norphism_core::metric::{
    astar_with_bounds, find_subadditivity_violation, path_length, propagate_bound, threshold_norphism, BoundRule,
    Path, PathCategory, PathSum, DEFAULT_PATH_CAP,
};
use norphism_core::nategory::{
    check_equivariance, check_expansiveness, check_monotone_homs, Condition, DpInstance, EquivarianceReport,
    ExactRule, MorId, NorphismGeneric,
};
use norphism_core::norphism::{resource_limit_schema, NorphismDP};
use norphism_core::poset::Preorder;
use norphism_core::{Error as CoreError, Side};
use serde_json::{json, Value};

use crate::dot;
use crate::error::{CliError, Result};
use crate::problem::{bound_value, relation_value, ProblemFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Equivariance,
    Expansiveness,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Equivariance => "equivariance",
            Suite::Expansiveness => "expansiveness",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Compose { d: String, e: String },
    Feasible { f: String, d: String, r: String },
    BanCheck { n: String, m: String },
    Propagate { n: String, attach: String, side: Side },
    ResourceLimit { pools: Vec<String> },
    BoundPropagate { bound: String, attach: Vec<String>, side: Side },
    Astar { graph: String, from: String, to: String, bounds: Vec<String> },
    Verify { suite: Suite },
    ExportDot { entity: String },
    Canonicalize,
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Pre => "pre",
        Side::Post => "post",
    }
}

impl Command {
    pub fn echo(&self) -> Value {
        match self {
            Command::Compose { d, e } => json!({"name": "compose", "d": d, "e": e}),
            Command::Feasible { f, d, r } => json!({"name": "feasible", "f": f, "d": d, "r": r}),
            Command::BanCheck { n, m } => json!({"name": "ban-check", "n": n, "m": m}),
            Command::Propagate { n, attach, side } => {
                json!({"name": "propagate", "n": n, "attach": attach, "side": side_name(*side)})
            }
            Command::ResourceLimit { pools } => json!({"name": "schema resource-limit", "pools": pools}),
            Command::BoundPropagate { bound, attach, side } => {
                json!({"name": "bound-propagate", "bound": bound, "attach": attach, "side": side_name(*side)})
            }
            Command::Astar { graph, from, to, bounds } => {
                json!({"name": "astar", "graph": graph, "from": from, "to": to, "bounds": bounds})
            }
            Command::Verify { suite } => json!({"name": "verify", "suite": suite.name()}),
            Command::ExportDot { entity } => json!({"name": "export-dot", "entity": entity}),
            Command::Canonicalize => json!({"name": "canonicalize"}),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Cell cap for design-problem hom-set enumeration.
    pub cap: usize,
    /// Edge cap for materialized paths.
    pub path_cap: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CELL_CAP,
            path_cap: DEFAULT_PATH_CAP,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub command: Value,
    pub result: Value,
    pub diagnostics: Vec<String>,
    /// Set for Boolean queries.
    pub answer: Option<bool>,
}

impl CommandResult {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "result": self.result,
            "diagnostics": self.diagnostics,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
        s.push('\n');
        s
    }
}

fn get<'a, T>(map: &'a std::collections::BTreeMap<String, T>, kind: &'static str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| CliError::UnknownEntity {
        kind,
        name: name.to_owned(),
    })
}

fn norphism_value(dom: &str, cod: &str, n: &NorphismDP) -> Value {
    let cells: Vec<_> = n.rel().true_cells().collect();
    let mut v = relation_value(dom, cod, n.dom(), n.cod(), &cells);
    v["matrix"] = json!(n.rel().to_rows());
    v
}

fn dp_value(dom: &str, cod: &str, d: &DesignProblem) -> Value {
    let mut v = relation_value(dom, cod, d.dom(), d.cod(), &d.true_pairs());
    v["matrix"] = json!(d.rel().to_rows());
    v
}

fn mismatch(e: CoreError, what: String) -> CliError {
    match e {
        CoreError::ObjectMismatch(_) => CliError::TypeMismatch(what),
        other => other.into(),
    }
}

pub fn run_command(file: &ProblemFile, cmd: &Command, opts: &Options) -> Result<CommandResult> {
    let mut diagnostics = Vec::new();
    let mut answer = None;
    let result = match cmd {
        Command::Compose { d, e } => {
            let (dd, ee) = (get(&file.dps, "dp", d)?, get(&file.dps, "dp", e)?);
            let out = dd.value.compose(&ee.value).map_err(|err| {
                mismatch(err, format!("dp `{d}` ends at `{}` but dp `{e}` starts at `{}`", dd.cod, ee.dom))
            })?;
            dp_value(&dd.dom, &ee.cod, &out)
        }
        Command::Feasible { f, d, r } => {
            let ff = get(&file.vectors, "vector", f)?;
            let dd = get(&file.dps, "dp", d)?;
            let rr = get(&file.covectors, "covector", r)?;
            let ok = dp::feasible(&ff.value, &dd.value, &rr.value).map_err(|err| {
                mismatch(
                    err,
                    format!("`{f}` on `{}`, dp `{d}` on ({}, {}), `{r}` on `{}`", ff.space, dd.dom, dd.cod, rr.space),
                )
            })?;
            answer = Some(ok);
            json!(ok)
        }
        Command::BanCheck { n, m } => {
            let nn = get(&file.norphisms, "norphism", n)?;
            let mm = get(&file.dps, "dp", m)?;
            let banned = nn.value.bans(&mm.value).map_err(|err| {
                mismatch(err, format!("norphism `{n}` is on ({}, {}), dp `{m}` on ({}, {})", nn.dom, nn.cod, mm.dom, mm.cod))
            })?;
            answer = Some(banned);
            json!(banned)
        }
        Command::Propagate { n, attach, side } => {
            let nn = get(&file.norphisms, "norphism", n)?;
            let aa = get(&file.dps, "dp", attach)?;
            let out = nn.value.propagate(&aa.value, *side).map_err(|err| {
                mismatch(err, format!("dp `{attach}` cannot be attached on the {} side of `{n}`", side_name(*side)))
            })?;
            let (dom, cod) = match side {
                Side::Pre => (&aa.cod, &nn.cod),
                Side::Post => (&nn.dom, &aa.dom),
            };
            norphism_value(dom, cod, &out)
        }
        Command::ResourceLimit { pools } => {
            let mut values = Vec::new();
            let mut space: Option<&str> = None;
            for p in pools {
                let pp = get(&file.covectors, "covector", p)?;
                match space {
                    Some(s) if s != pp.space => {
                        return Err(CliError::TypeMismatch(format!("pool `{p}` lives on `{}`, not `{s}`", pp.space)))
                    }
                    _ => space = Some(&pp.space),
                }
                values.push(pp.value.clone());
            }
            let space = space.ok_or_else(|| CliError::TypeMismatch("at least one pool is required".into()))?;
            let p = get(&file.posets, "poset", space)?;
            let n = resource_limit_schema(p, &values)?;
            let bans_identity = n.bans(&DesignProblem::identity(p))?;
            json!({"norphism": norphism_value(space, space, &n), "bans_identity": bans_identity})
        }
        Command::BoundPropagate { bound, attach, side } => {
            let b = get(&file.bounds, "bound", bound)?;
            let g = &file.graphs[&b.graph];
            let path = Path::through(g, attach)?;
            let out = propagate_bound(&PathSum, g, &b.bound, &path, *side)?;
            if !b.bound.is_sound(g)? {
                diagnostics.push(format!("input bound `{bound}` exceeds the shortest distance of its pair"));
            }
            json!({
                "bound": bound_value(&b.graph, g, &out),
                "attach_length": crate::problem::number(&path_length(&PathSum, g, &path)?),
            })
        }
        Command::Astar { graph, from, to, bounds } => {
            let g = get(&file.graphs, "graph", graph)?;
            let a = g.index_of(from)?;
            let c = g.index_of(to)?;
            let mut list = Vec::new();
            for name in bounds {
                let b = get(&file.bounds, "bound", name)?;
                if b.graph != *graph {
                    return Err(CliError::TypeMismatch(format!("bound `{name}` belongs to graph `{}`", b.graph)));
                }
                list.push(b.bound.clone());
            }
            let guided = astar_with_bounds(g, a, c, &list)?;
            let baseline = astar_with_bounds(g, a, c, &[])?;
            json!({
                "distance": guided.distance.as_ref().map(crate::problem::number),
                "expansions": guided.expansions,
                "baseline_expansions": baseline.expansions,
            })
        }
        Command::Verify { suite } => {
            let report = verify(file, *suite, opts, &mut diagnostics)?;
            answer = Some(report["passed"].as_bool().unwrap_or(false));
            report
        }
        Command::ExportDot { entity } => json!(export_dot(file, entity)?),
        Command::Canonicalize => file.to_value(),
    };
    Ok(CommandResult {
        command: cmd.echo(),
        result,
        diagnostics,
        answer,
    })
}

pub fn export_dot(file: &ProblemFile, entity: &str) -> Result<String> {
    let (kind, name) = match entity.split_once(':') {
        Some((k, n)) if ["poset", "dp", "norphism", "graph"].contains(&k) => (Some(k), n),
        _ => (None, entity),
    };
    let mut found = Vec::new();
    if kind.is_none_or(|k| k == "poset") {
        if let Some(p) = file.posets.get(name) {
            found.push(dot::poset(name, p));
        }
    }
    if kind.is_none_or(|k| k == "dp") {
        if let Some(d) = file.dps.get(name) {
            found.push(dot::relation(name, d.value.dom(), d.value.cod(), d.value.rel()));
        }
    }
    if kind.is_none_or(|k| k == "norphism") {
        if let Some(n) = file.norphisms.get(name) {
            found.push(dot::norphism(name, n.value.dom(), n.value.cod(), n.value.rel()));
        }
    }
    if kind.is_none_or(|k| k == "graph") {
        if let Some(g) = file.graphs.get(name) {
            found.push(dot::graph(name, g));
        }
    }
    match found.len() {
        0 => Err(CliError::UnknownEntity {
            kind: kind.map_or("entity", |k| match k {
                "poset" => "poset",
                "dp" => "dp",
                "norphism" => "norphism",
                _ => "graph",
            }),
            name: name.to_owned(),
        }),
        1 => Ok(found.pop().unwrap()),
        _ => Err(CliError::Ambiguous(entity.to_owned())),
    }
}

fn describe_dp(d: &DesignProblem) -> String {
    d.rel()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|b| b.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

fn describe_path(cat: &PathCategory, f: MorId) -> String {
    cat.path(f).node_names(cat.graph()).join(">")
}

fn condition_name(c: Condition) -> &'static str {
    match c {
        Condition::Equiv1 => "left",
        Condition::Equiv2 => "right",
    }
}

/// Distinct posets of the file, first name wins.
fn instance_spaces(file: &ProblemFile) -> Vec<(String, Preorder)> {
    let mut out: Vec<(String, Preorder)> = Vec::new();
    for (name, p) in &file.posets {
        if !out.iter().any(|(_, q)| q == p) {
            out.push((name.clone(), p.clone()));
        }
    }
    out
}

struct DpNorphisms {
    labels: Vec<String>,
    generic: Vec<NorphismGeneric>,
}

fn dp_norphisms(file: &ProblemFile, inst: &DpInstance, opts: &Options) -> Result<DpNorphisms> {
    let mut labels = Vec::new();
    let mut generic = Vec::new();
    for (name, n) in &file.norphisms {
        labels.push(name.clone());
        generic.push(inst.wrap(&n.value)?);
    }
    let mut rng = gen::rng(opts.seed);
    let k = inst.spaces.len();
    for a in 0..k {
        for b in 0..k {
            for i in 0..RANDOM_NORPHISMS_PER_PAIR {
                let n = gen::random_norphism(&mut rng, &inst.spaces[a], &inst.spaces[b]);
                labels.push(format!("random#{a}.{b}.{i}"));
                generic.push(inst.wrap(&n)?);
            }
        }
    }
    Ok(DpNorphisms { labels, generic })
}

const RANDOM_NORPHISMS_PER_PAIR: usize = 8;

fn push_equivariance(
    violations: &mut Vec<Value>,
    instance: &str,
    labels: &[String],
    report: &EquivarianceReport,
    describe: impl Fn(MorId) -> String,
) {
    for v in &report.violations {
        violations.push(json!({
            "check": "equivariance",
            "instance": instance,
            "norphism": labels[v.norphism],
            "f": describe(v.f),
            "g": describe(v.g),
            "condition": condition_name(v.condition),
        }));
    }
}

fn verify(file: &ProblemFile, suite: Suite, opts: &Options, diagnostics: &mut Vec<String>) -> Result<Value> {
    let mut violations: Vec<Value> = Vec::new();
    let mut checks = serde_json::Map::new();
    let spaces = instance_spaces(file);
    let preorders: Vec<Preorder> = spaces.iter().map(|(_, p)| p.clone()).collect();
    diagnostics.push(format!(
        "design-problem instance over {} poset(s), cell cap {}",
        preorders.len(),
        opts.cap
    ));
    diagnostics.push(format!("path cap {} edges, seed {}", opts.path_cap, opts.seed));

    let inst = if preorders.is_empty() {
        None
    } else {
        match DpInstance::build(&preorders, opts.cap) {
            Ok(inst) => Some(inst),
            Err(CoreError::Axiom(msg)) => {
                violations.push(json!({"check": "axioms", "instance": "dp", "message": msg}));
                None
            }
            Err(e) => return Err(e.into()),
        }
    };
    let mut paths = Vec::new();
    for (name, g) in &file.graphs {
        paths.push((name.clone(), PathCategory::new(g, opts.path_cap)?));
    }

    if suite.includes(Suite::Axioms) {
        let before = violations.len();
        if let Some(inst) = &inst {
            if !check_monotone_homs(&inst.category, &inst.hom_preorder()) {
                violations.push(json!({
                    "check": "axioms",
                    "instance": "dp",
                    "message": "composition is not monotone in the hom-set order",
                }));
            }
            diagnostics.push(format!("dp instance: {} morphisms", inst.category.morphism_count()));
        }
        for (name, d) in &file.dps {
            if !d.value.is_valid() {
                violations.push(json!({"check": "axioms", "instance": "dp", "message": format!("dp `{name}` is not monotone")}));
            }
        }
        for (name, cat) in &paths {
            if let Some((f, g)) = find_subadditivity_violation(&PathSum, cat) {
                violations.push(json!({
                    "check": "axioms",
                    "instance": format!("graph {name}"),
                    "message": format!("path sum not subadditive at ({}, {})", describe_path(cat, f), describe_path(cat, g)),
                }));
            }
        }
        checks.insert("axioms".into(), json!(violations.len() == before));
    }

    let dp_nors = match &inst {
        Some(inst) if suite != Suite::Axioms => Some(dp_norphisms(file, inst, opts)?),
        _ => None,
    };

    if suite.includes(Suite::Equivariance) {
        let before = violations.len();
        let mut exact = true;
        if let (Some(inst), Some(nors)) = (&inst, &dp_nors) {
            let report = check_equivariance(&inst.category, &nors.generic, &ExactRule);
            push_equivariance(&mut violations, "dp", &nors.labels, &report, |m| describe_dp(&inst.morphisms[m]));
            if !report.exact {
                exact = false;
                violations.push(json!({
                    "check": "equivariance",
                    "instance": "dp",
                    "message": "default rule is not exact",
                }));
            }
            diagnostics.push(format!(
                "dp equivariance: {} norphisms, {} triples checked",
                nors.generic.len(),
                report.checked
            ));
        }
        for (name, b) in &file.bounds {
            let (_, cat) = paths.iter().find(|(g, _)| *g == b.graph).expect("bound graph is loaded");
            let n = threshold_norphism(cat, &PathSum, &b.bound);
            let report = check_equivariance(cat, &[n], &BoundRule { length: &PathSum });
            push_equivariance(&mut violations, &format!("graph {}", b.graph), std::slice::from_ref(name), &report, |m| {
                describe_path(cat, m)
            });
            exact &= report.exact;
            diagnostics.push(format!(
                "bound `{name}`: {} triples checked, {} beyond the path cap",
                report.checked, report.skipped
            ));
        }
        checks.insert("equivariance".into(), json!(violations.len() == before));
        checks.insert("exact".into(), json!(exact));
    }

    if suite.includes(Suite::Expansiveness) {
        let before = violations.len();
        if let (Some(inst), Some(nors)) = (&inst, &dp_nors) {
            let order = inst.hom_preorder();
            for (label, n) in nors.labels.iter().zip(&nors.generic) {
                if !check_expansiveness(n, &order) {
                    violations.push(json!({
                        "check": "expansiveness",
                        "instance": "dp",
                        "norphism": label,
                    }));
                }
            }
        }
        if !file.bounds.is_empty() {
            diagnostics.push("path hom-sets carry the discrete order; bounds are trivially expansive".into());
        }
        checks.insert("expansiveness".into(), json!(violations.len() == before));
    }

    Ok(json!({
        "suite": suite.name(),
        "passed": violations.is_empty(),
        "checks": checks,
        "violations": violations,
    }))
}
