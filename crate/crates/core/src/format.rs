//! JSON structure files: semirings, triples, systems, modules, Morita
//! contexts and tensor presentations. Elements are referred to by name
//! everywhere; tables are arrays of rows.
//!
//! Output is deterministic (arrays of scalars on one line, everything else
//! indented), so dump → load → dump reproduces the bytes.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::error::StructureError;
use crate::module::{same_ground, Action, FiniteModuleSystem, ModuleParts, Side};
use crate::morita::MoritaContext;
use crate::negation::NegationMap;
use crate::semiring::{Elem, FiniteSemiring};
use crate::surpass::{circ_relation, SurpassRelation};
use crate::system::{surpass_circ, SystemDef, Triple};
use crate::tensor::TensorPresentation;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {source}")]
    Structure {
        path: String,
        #[source]
        source: StructureError,
    },
}

fn at(path: &str) -> impl Fn(StructureError) -> FormatError + '_ {
    move |source| FormatError::Structure { path: path.to_string(), source }
}

type Pairs = Vec<(String, String)>;

/// A semiring, triple or system. `negation` is required from triples on;
/// a missing `surpass` means `≼∘`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub tangibles: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<Pairs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surpass: Option<Pairs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_surpassing: Option<bool>,
}

/// Either an inline system or, inside a context, `"a"` / `"a_prime"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroundDoc {
    Role(String),
    Inline(Box<SystemDoc>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub ground: GroundDoc,
    /// `table[a][x]` is `a·x` (left) or `x·a` (right).
    pub table: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub add: Vec<Vec<String>>,
    pub tangibles: Vec<String>,
    pub negation: Pairs,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surpass: Option<Pairs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<ActionDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextDoc {
    pub name: String,
    pub a: SystemDoc,
    pub a_prime: SystemDoc,
    pub m: ModuleDoc,
    pub m_prime: ModuleDoc,
    /// `tau[x][x']`, values in `a`.
    pub tau: Vec<Vec<String>>,
    /// `tau_prime[x'][x]`, values in `a_prime`.
    pub tau_prime: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub name: String,
    pub left_elements: Vec<String>,
    pub right_elements: Vec<String>,
    /// `simple[x][y]` is the class of `x ⊗ y`.
    pub simple: Vec<Vec<String>>,
    pub module: ModuleDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Semiring(SystemDoc),
    Triple(SystemDoc),
    System(SystemDoc),
    Module(ModuleDoc),
    Context(ContextDoc),
    Tensor(TensorDoc),
}

/// A tensor presentation as stored on disk.
#[derive(Debug, Clone)]
pub struct TensorFile {
    pub module: FiniteModuleSystem,
    pub left_elements: Vec<String>,
    pub right_elements: Vec<String>,
    /// Row-major `|left| × |right|` class table.
    pub simple: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub enum Structure {
    Semiring(FiniteSemiring),
    Triple(Triple),
    System(SystemDef),
    Module(FiniteModuleSystem),
    Context(MoritaContext),
    Tensor(TensorFile),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Semiring(_) => "semiring",
            Structure::Triple(_) => "triple",
            Structure::System(_) => "system",
            Structure::Module(_) => "module",
            Structure::Context(_) => "context",
            Structure::Tensor(_) => "tensor",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub structure: Structure,
}

// ---------------------------------------------------------------- reading

fn index_of(names: &[String], path: &str) -> Result<HashMap<String, Elem>, FormatError> {
    crate::semiring::name_index(names).map_err(at(path))
}

fn lookup(index: &HashMap<String, Elem>, name: &str, path: &str) -> Result<Elem, FormatError> {
    index.get(name).copied().ok_or_else(|| FormatError::Structure {
        path: path.to_string(),
        source: StructureError::UnknownElement { what: path.to_string(), name: name.to_string() },
    })
}

fn lookup_all(index: &HashMap<String, Elem>, names: &[String], path: &str) -> Result<Vec<Elem>, FormatError> {
    names.iter().map(|n| lookup(index, n, path)).collect()
}

/// Flattens a `rows × cols` table of names resolved against `values`.
fn table(
    rows: &[Vec<String>],
    n_rows: usize,
    n_cols: usize,
    values: &HashMap<String, Elem>,
    path: &str,
) -> Result<Vec<Elem>, FormatError> {
    if rows.len() != n_rows {
        return Err(at(path)(StructureError::Shape { what: "rows".into(), expected: n_rows, found: rows.len() }));
    }
    let mut out = Vec::with_capacity(n_rows * n_cols);
    for (i, row) in rows.iter().enumerate() {
        let p = format!("{path}[{i}]");
        if row.len() != n_cols {
            return Err(at(&p)(StructureError::Shape { what: "columns".into(), expected: n_cols, found: row.len() }));
        }
        for v in row {
            out.push(lookup(values, v, &p)?);
        }
    }
    Ok(out)
}

fn pairs(index: &HashMap<String, Elem>, list: &Pairs, path: &str) -> Result<Vec<(Elem, Elem)>, FormatError> {
    list.iter()
        .map(|(a, b)| Ok((lookup(index, a, path)?, lookup(index, b, path)?)))
        .collect()
}

fn read_semiring(d: &SystemDoc) -> Result<(FiniteSemiring, HashMap<String, Elem>), FormatError> {
    let n = d.elements.len();
    let index = index_of(&d.elements, "elements")?;
    let add = table(&d.add, n, n, &index, "add")?;
    let mul = table(&d.mul, n, n, &index, "mul")?;
    let tangibles = lookup_all(&index, &d.tangibles, "tangibles")?;
    let s = FiniteSemiring::new(
        d.elements.clone(),
        lookup(&index, &d.zero, "zero")?,
        lookup(&index, &d.one, "one")?,
        add,
        mul,
        &tangibles,
    )
    .map_err(at("semiring"))?;
    Ok((s, index))
}

fn read_triple(d: &SystemDoc) -> Result<(Triple, HashMap<String, Elem>), FormatError> {
    let (s, index) = read_semiring(d)?;
    let Some(neg) = &d.negation else {
        return Err(at("negation")(StructureError::Invalid("field is required".into())));
    };
    let negation = NegationMap::from_pairs(s.size(), &pairs(&index, neg, "negation")?).map_err(at("negation"))?;
    Ok((Triple::new(s, negation), index))
}

pub fn read_system(d: &SystemDoc) -> Result<SystemDef, FormatError> {
    let (t, index) = read_triple(d)?;
    let n = t.semiring.size();
    let surpass = match &d.surpass {
        None => surpass_circ(&t),
        Some(list) => SurpassRelation::from_pairs(n, &pairs(&index, list, "surpass")?).map_err(at("surpass"))?,
    };
    Ok(SystemDef::new(t, surpass, d.t_surpassing.unwrap_or(false)))
}

fn read_module(d: &ModuleDoc, roles: &[(&str, &Arc<SystemDef>)]) -> Result<FiniteModuleSystem, FormatError> {
    let n = d.elements.len();
    let index = index_of(&d.elements, "elements")?;
    let negation = NegationMap::from_pairs(n, &pairs(&index, &d.negation, "negation")?).map_err(at("negation"))?;
    let surpass = match &d.surpass {
        None => None,
        Some(list) => {
            Some(SurpassRelation::from_pairs(n, &pairs(&index, list, "surpass")?).map_err(at("surpass"))?)
        }
    };
    let action = |a: &Option<ActionDoc>, side: &str| -> Result<Option<Action>, FormatError> {
        let Some(a) = a else { return Ok(None) };
        let ground = match &a.ground {
            GroundDoc::Inline(doc) => Arc::new(read_system(doc)?),
            GroundDoc::Role(r) => roles
                .iter()
                .find(|(name, _)| name == r)
                .map(|(_, g)| (*g).clone())
                .ok_or_else(|| {
                    at(side)(StructureError::Invalid(format!("unknown ground reference {r:?}")))
                })?,
        };
        let t = table(&a.table, ground.size(), n, &index, &format!("{side}.table"))?;
        Ok(Some(Action::new(ground, t, n).map_err(at(side))?))
    };
    FiniteModuleSystem::new(ModuleParts {
        names: d.elements.clone(),
        zero: lookup(&index, &d.zero, "zero")?,
        add: table(&d.add, n, n, &index, "add")?,
        tangibles: lookup_all(&index, &d.tangibles, "tangibles")?,
        negation,
        surpass,
        left: action(&d.left, "left")?,
        right: action(&d.right, "right")?,
    })
    .map_err(at("module"))
}

fn nested(prefix: &str, e: FormatError) -> FormatError {
    match e {
        FormatError::Structure { path, source } => FormatError::Structure { path: format!("{prefix}.{path}"), source },
        other => other,
    }
}

fn read_context(d: &ContextDoc) -> Result<MoritaContext, FormatError> {
    let a = Arc::new(read_system(&d.a).map_err(|e| nested("a", e))?);
    let a_prime = if d.a_prime == d.a {
        a.clone()
    } else {
        Arc::new(read_system(&d.a_prime).map_err(|e| nested("a_prime", e))?)
    };
    let roles = [("a", &a), ("a_prime", &a_prime)];
    let m = read_module(&d.m, &roles).map_err(|e| nested("m", e))?;
    let mp = read_module(&d.m_prime, &roles).map_err(|e| nested("m_prime", e))?;
    let a_index = index_of(a.semiring().names(), "a.elements")?;
    let ap_index = index_of(a_prime.semiring().names(), "a_prime.elements")?;
    let tau = table(&d.tau, m.size(), mp.size(), &a_index, "tau")?;
    let tau_prime = table(&d.tau_prime, mp.size(), m.size(), &ap_index, "tau_prime")?;
    MoritaContext::new(a, a_prime, m, mp, tau, tau_prime).map_err(at("context"))
}

fn read_tensor(d: &TensorDoc) -> Result<TensorFile, FormatError> {
    let module = read_module(&d.module, &[]).map_err(|e| nested("module", e))?;
    let index = index_of(module.names(), "module.elements")?;
    let simple = table(&d.simple, d.left_elements.len(), d.right_elements.len(), &index, "simple")?;
    Ok(TensorFile {
        module,
        left_elements: d.left_elements.clone(),
        right_elements: d.right_elements.clone(),
        simple,
    })
}

/// Parses and assembles a structure file. Malformed JSON is reported with
/// its line and column, fields of the wrong type with their path.
pub fn load_str(text: &str) -> Result<Loaded, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    load_document(&parse_document(value)?)
}

fn parse_document(mut value: Value) -> Result<Document, FormatError> {
    let schema = |path: &str, message: String| FormatError::Schema { path: path.to_string(), message };
    let kind = match value.as_object_mut().map(|o| o.remove("kind")) {
        None => return Err(schema("", "expected an object".into())),
        Some(Some(Value::String(k))) => k,
        Some(_) => return Err(schema("kind", "missing or not a string".into())),
    };
    fn body<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, FormatError> {
        serde_path_to_error::deserialize(v).map_err(|e| FormatError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }
    Ok(match kind.as_str() {
        "semiring" => Document::Semiring(body(value)?),
        "triple" => Document::Triple(body(value)?),
        "system" => Document::System(body(value)?),
        "module" => Document::Module(body(value)?),
        "context" => Document::Context(body(value)?),
        "tensor" => Document::Tensor(body(value)?),
        other => return Err(schema("kind", format!("unknown kind {other:?}"))),
    })
}

pub fn load_document(doc: &Document) -> Result<Loaded, FormatError> {
    Ok(match doc {
        Document::Semiring(d) => Loaded { name: d.name.clone(), structure: Structure::Semiring(read_semiring(d)?.0) },
        Document::Triple(d) => Loaded { name: d.name.clone(), structure: Structure::Triple(read_triple(d)?.0) },
        Document::System(d) => Loaded { name: d.name.clone(), structure: Structure::System(read_system(d)?) },
        Document::Module(d) => Loaded { name: d.name.clone(), structure: Structure::Module(read_module(d, &[])?) },
        Document::Context(d) => Loaded { name: d.name.clone(), structure: Structure::Context(read_context(d)?) },
        Document::Tensor(d) => Loaded { name: d.name.clone(), structure: Structure::Tensor(read_tensor(d)?) },
    })
}

// ---------------------------------------------------------------- writing

fn names_of(names: &[String], els: impl IntoIterator<Item = Elem>) -> Vec<String> {
    els.into_iter().map(|e| names[e].clone()).collect()
}

fn rows(names: &[String], flat: &[Elem], n_cols: usize) -> Vec<Vec<String>> {
    flat.chunks(n_cols.max(1)).map(|r| names_of(names, r.iter().copied())).collect()
}

fn pair_names(names: &[String], list: &[(Elem, Elem)]) -> Pairs {
    list.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect()
}

fn semiring_doc(name: &str, s: &FiniteSemiring) -> SystemDoc {
    let names = s.names();
    let n = s.size();
    SystemDoc {
        name: name.to_string(),
        elements: names.to_vec(),
        zero: names[s.zero()].clone(),
        one: names[s.one()].clone(),
        add: rows(names, s.add_table(), n),
        mul: rows(names, s.mul_table(), n),
        tangibles: names_of(names, s.tangibles()),
        negation: None,
        surpass: None,
        t_surpassing: None,
    }
}

fn triple_doc(name: &str, t: &Triple) -> SystemDoc {
    SystemDoc {
        negation: Some(pair_names(t.semiring.names(), &t.negation.moved_pairs())),
        ..semiring_doc(name, &t.semiring)
    }
}

pub fn system_doc(name: &str, s: &SystemDef) -> SystemDoc {
    let surpass = (s.surpass != surpass_circ(&s.triple)).then(|| pair_names(s.semiring().names(), &s.surpass.pairs()));
    SystemDoc {
        surpass,
        t_surpassing: Some(s.t_surpassing),
        ..triple_doc(name, &s.triple)
    }
}

pub fn module_doc(name: &str, m: &FiniteModuleSystem, roles: &[(&str, &Arc<SystemDef>)]) -> ModuleDoc {
    let names = m.names();
    let n = m.size();
    let surpass = (*m.surpass() != circ_relation(m, m.negation())).then(|| pair_names(names, &m.surpass().pairs()));
    let action = |side: Side| {
        m.action(side).map(|act| ActionDoc {
            ground: match roles.iter().find(|(_, g)| same_ground(g, &act.ground)) {
                Some((r, _)) => GroundDoc::Role(r.to_string()),
                None => GroundDoc::Inline(Box::new(system_doc("ground", &act.ground))),
            },
            table: rows(names, act.table(), n),
        })
    };
    ModuleDoc {
        name: name.to_string(),
        elements: names.to_vec(),
        zero: names[m.zero()].clone(),
        add: rows(names, m.add_table(), n),
        tangibles: names_of(names, m.tangibles()),
        negation: pair_names(names, &m.negation().moved_pairs()),
        surpass,
        left: action(Side::Left),
        right: action(Side::Right),
    }
}

pub fn context_doc(name: &str, ctx: &MoritaContext) -> ContextDoc {
    let roles = [("a", &ctx.a), ("a_prime", &ctx.a_prime)];
    ContextDoc {
        name: name.to_string(),
        a: system_doc("A", &ctx.a),
        a_prime: system_doc("A'", &ctx.a_prime),
        m: module_doc("M", &ctx.m, &roles),
        m_prime: module_doc("M'", &ctx.m_prime, &roles),
        tau: rows(ctx.a.semiring().names(), &ctx.tau, ctx.m_prime.size()),
        tau_prime: rows(ctx.a_prime.semiring().names(), &ctx.tau_prime, ctx.m.size()),
    }
}

pub fn tensor_doc(name: &str, t: &TensorPresentation) -> TensorDoc {
    TensorDoc {
        name: name.to_string(),
        left_elements: t.left.names().to_vec(),
        right_elements: t.right.names().to_vec(),
        simple: rows(t.module.names(), t.simple_table(), t.right.size()),
        module: module_doc("tensor", &t.module, &[]),
    }
}

pub fn to_document(loaded: &Loaded) -> Document {
    let name = loaded.name.as_str();
    match &loaded.structure {
        Structure::Semiring(s) => Document::Semiring(semiring_doc(name, s)),
        Structure::Triple(t) => Document::Triple(triple_doc(name, t)),
        Structure::System(s) => Document::System(system_doc(name, s)),
        Structure::Module(m) => Document::Module(module_doc(name, m, &[])),
        Structure::Context(c) => Document::Context(context_doc(name, c)),
        Structure::Tensor(t) => Document::Tensor(TensorDoc {
            name: name.to_string(),
            left_elements: t.left_elements.clone(),
            right_elements: t.right_elements.clone(),
            simple: rows(t.module.names(), &t.simple, t.right_elements.len()),
            module: module_doc("tensor", &t.module, &[]),
        }),
    }
}

/// Serializes with scalar arrays kept on one line.
pub fn to_json(doc: &Document) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn dump(loaded: &Loaded) -> String {
    to_json(&to_document(loaded))
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalars serialize")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{boolean_identity_negation, entries, make_boolean, symmetrize};
    use crate::morita::{row_column_context, trivial_context};

    fn round_trip(loaded: &Loaded) -> String {
        let text = dump(loaded);
        let again = load_str(&text).unwrap();
        let text2 = dump(&again);
        assert_eq!(text, text2);
        text
    }

    #[test]
    fn corpus_round_trips() {
        for e in entries() {
            let l = Loaded { name: e.name.clone(), structure: Structure::System(e.system.clone()) };
            round_trip(&l);
            let Structure::System(s) = load_str(&dump(&l)).unwrap().structure else { panic!() };
            assert_eq!(s, e.system);
        }
    }

    #[test]
    fn triples_semirings_modules_and_contexts_round_trip() {
        round_trip(&Loaded { name: "b".into(), structure: Structure::Semiring(make_boolean()) });
        round_trip(&Loaded { name: "bt".into(), structure: Structure::Triple(boolean_identity_negation()) });
        let a = Arc::new(symmetrize(&make_boolean()));
        round_trip(&Loaded { name: "reg".into(), structure: Structure::Module(FiniteModuleSystem::regular(&a)) });
        round_trip(&Loaded { name: "triv".into(), structure: Structure::Context(trivial_context(&a)) });
        let text = round_trip(&Loaded { name: "rc".into(), structure: Structure::Context(row_column_context(&a)) });
        assert!(text.contains("\"ground\": \"a_prime\""));
    }

    #[test]
    fn truncated_table_is_a_shape_error() {
        let l = Loaded { name: "b".into(), structure: Structure::Semiring(make_boolean()) };
        let mut doc = to_document(&l);
        if let Document::Semiring(d) = &mut doc {
            d.add.pop();
        }
        let err = load_str(&to_json(&doc)).unwrap_err();
        assert!(matches!(err, FormatError::Structure { ref path, source: StructureError::Shape { .. } } if path == "add"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = load_str("{\n  \"kind\": \"system\",\n  \"name\": \"x\"\n  \"elements\": []\n}").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 4, .. }), "{err}");
        let err = load_str("{\"kind\": \"system\", \"name\": \"x\", \"elements\": [\"a\", 3]}").unwrap_err();
        assert!(matches!(err, FormatError::Schema { ref path, .. } if path == "elements[1]"), "{err}");
        let err = load_str("{\"kind\": \"semiring\", \"bogus\": 1}").unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
    }

    #[test]
    fn unknown_names_are_reported_with_their_location() {
        let l = Loaded { name: "b".into(), structure: Structure::Semiring(make_boolean()) };
        let text = dump(&l).replacen("\"tangibles\": [\"1\"]", "\"tangibles\": [\"7\"]", 1);
        let err = load_str(&text).unwrap_err();
        assert!(err.to_string().contains("\"7\""), "{err}");
    }
}
