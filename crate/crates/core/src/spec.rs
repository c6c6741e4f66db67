//! JSON descriptions of groups and quandles.
//!
//! Specs are tagged objects such as `{"type":"dihedral","n":5}` and nest
//! through `product`, `free_union`, `galex` and `core`. Errors carry the JSON
//! path of the offending node, e.g. `/factors/1/n`.

use serde_json::{json, Map, Value};

use crate::constructors::{self, WeightedGraphSpec};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::permutation::Permutation;
use crate::quandle::FiniteQuandle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Product { factors: Vec<GroupSpec> },
    Table { mult: Vec<Vec<usize>> },
}

/// An automorphism given either as an image array or in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSpec {
    Images(Vec<usize>),
    Cycles(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuandleSpec {
    Trivial { n: usize },
    Dihedral { n: usize },
    Galex { group: GroupSpec, sigma: MapSpec },
    Core { group: GroupSpec },
    Sphere { dim: usize },
    Torus { m: Vec<usize> },
    Graph {
        vertices: usize,
        weight_group: GroupSpec,
        d: Vec<Vec<usize>>,
    },
    Cycle { n: usize },
    Path { n: usize },
    Product { factors: Vec<QuandleSpec> },
    FreeUnion { parts: Vec<QuandleSpec> },
    Table {
        s: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

pub fn parse_spec(text: &str) -> Result<QuandleSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    QuandleSpec::from_value(&value)
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    GroupSpec::from_value(&value, "")
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: if path.is_empty() { "/".into() } else { path.into() },
        message: message.into(),
    }
}

/// A tagged JSON object and its path.
struct Node<'a> {
    map: &'a Map<String, Value>,
    path: String,
}

impl<'a> Node<'a> {
    fn open(value: &'a Value, path: &str) -> Result<(Self, &'a str)> {
        let map = value
            .as_object()
            .ok_or_else(|| schema(path, "expected an object"))?;
        let tag = match map.get("type") {
            None => return Err(schema(&format!("{path}/type"), "missing")),
            Some(Value::String(s)) => s.as_str(),
            Some(_) => return Err(schema(&format!("{path}/type"), "expected a string")),
        };
        let node = Node {
            map,
            path: path.to_string(),
        };
        Ok((node, tag))
    }

    fn only(&self, keys: &[&str]) -> Result<()> {
        for key in self.map.keys() {
            if key != "type" && !keys.contains(&key.as_str()) {
                return Err(schema(&self.child(key), "unknown field"));
            }
        }
        Ok(())
    }

    fn child(&self, key: &str) -> String {
        format!("{}/{key}", self.path)
    }

    fn get(&self, key: &str) -> Result<&'a Value> {
        self.map
            .get(key)
            .ok_or_else(|| schema(&self.child(key), "missing"))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        as_usize(self.get(key)?, &self.child(key))
    }

    fn usize_vec(&self, key: &str) -> Result<Vec<usize>> {
        as_usize_vec(self.get(key)?, &self.child(key))
    }

    fn matrix(&self, key: &str) -> Result<Vec<Vec<usize>>> {
        let path = self.child(key);
        as_array(self.get(key)?, &path)?
            .iter()
            .enumerate()
            .map(|(i, row)| as_usize_vec(row, &format!("{path}/{i}")))
            .collect()
    }

    fn array(&self, key: &str) -> Result<(&'a [Value], String)> {
        let path = self.child(key);
        Ok((as_array(self.get(key)?, &path)?, path))
    }
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a [Value]> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| schema(path, "expected an array"))
}

fn as_usize_vec(v: &Value, path: &str) -> Result<Vec<usize>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_usize(x, &format!("{path}/{i}")))
        .collect()
}

impl GroupSpec {
    pub fn from_value(value: &Value, path: &str) -> Result<Self> {
        let (node, tag) = Node::open(value, path)?;
        let spec = match tag {
            "cyclic" => {
                node.only(&["n"])?;
                GroupSpec::Cyclic { n: node.usize("n")? }
            }
            "symmetric" => {
                node.only(&["n"])?;
                GroupSpec::Symmetric { n: node.usize("n")? }
            }
            "product" => {
                node.only(&["factors"])?;
                let (items, path) = node.array("factors")?;
                if items.is_empty() {
                    return Err(schema(&path, "needs at least one factor"));
                }
                let factors = items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| GroupSpec::from_value(v, &format!("{path}/{i}")))
                    .collect::<Result<_>>()?;
                GroupSpec::Product { factors }
            }
            "table" => {
                node.only(&["mult"])?;
                GroupSpec::Table {
                    mult: node.matrix("mult")?,
                }
            }
            other => return Err(unknown(other, path)),
        };
        Ok(spec)
    }

    pub fn to_value(&self) -> Value {
        match self {
            GroupSpec::Cyclic { n } => json!({"type": "cyclic", "n": n}),
            GroupSpec::Symmetric { n } => json!({"type": "symmetric", "n": n}),
            GroupSpec::Product { factors } => json!({
                "type": "product",
                "factors": factors.iter().map(GroupSpec::to_value).collect::<Vec<_>>(),
            }),
            GroupSpec::Table { mult } => json!({"type": "table", "mult": mult}),
        }
    }

    pub fn resolve(&self) -> Result<FiniteGroup> {
        self.resolve_at("")
    }

    fn resolve_at(&self, path: &str) -> Result<FiniteGroup> {
        let here = |e: Error| e.at(if path.is_empty() { "/" } else { path });
        match self {
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n).map_err(here),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n).map_err(here),
            GroupSpec::Table { mult } => FiniteGroup::from_table(mult.clone()).map_err(here),
            GroupSpec::Product { factors } => {
                let mut acc = factors[0].resolve_at(&format!("{path}/factors/0"))?;
                for (i, f) in factors.iter().enumerate().skip(1) {
                    let g = f.resolve_at(&format!("{path}/factors/{i}"))?;
                    acc = FiniteGroup::direct_product(&acc, &g);
                }
                Ok(acc)
            }
        }
    }
}

fn unknown(tag: &str, path: &str) -> Error {
    let e = Error::UnknownType(tag.to_string());
    if path.is_empty() {
        e
    } else {
        e.at(path)
    }
}

impl MapSpec {
    fn from_value(value: &Value, path: &str) -> Result<Self> {
        match value {
            Value::String(s) => Ok(MapSpec::Cycles(s.clone())),
            v => Ok(MapSpec::Images(as_usize_vec(v, path).map_err(|_| {
                schema(path, "expected an image array or a cycle-notation string")
            })?)),
        }
    }

    fn to_value(&self) -> Value {
        match self {
            MapSpec::Images(images) => json!(images),
            MapSpec::Cycles(s) => json!(s),
        }
    }

    pub fn resolve(&self, degree: usize) -> Result<Permutation> {
        match self {
            MapSpec::Images(images) => {
                if images.len() != degree {
                    return Err(Error::DegreeMismatch {
                        left: degree,
                        right: images.len(),
                    });
                }
                Permutation::new(images.clone())
            }
            MapSpec::Cycles(s) => Permutation::from_cycles(degree, s),
        }
    }
}

impl QuandleSpec {
    pub fn from_value(value: &Value) -> Result<Self> {
        Self::parse_at(value, "")
    }

    fn parse_at(value: &Value, path: &str) -> Result<Self> {
        let (node, tag) = Node::open(value, path)?;
        let spec = match tag {
            "trivial" | "dihedral" | "cycle" | "path" => {
                node.only(&["n"])?;
                let n = node.usize("n")?;
                match tag {
                    "trivial" => QuandleSpec::Trivial { n },
                    "dihedral" => QuandleSpec::Dihedral { n },
                    "cycle" => QuandleSpec::Cycle { n },
                    _ => QuandleSpec::Path { n },
                }
            }
            "galex" => {
                node.only(&["group", "sigma"])?;
                QuandleSpec::Galex {
                    group: GroupSpec::from_value(node.get("group")?, &node.child("group"))?,
                    sigma: MapSpec::from_value(node.get("sigma")?, &node.child("sigma"))?,
                }
            }
            "core" => {
                node.only(&["group"])?;
                QuandleSpec::Core {
                    group: GroupSpec::from_value(node.get("group")?, &node.child("group"))?,
                }
            }
            "sphere" => {
                node.only(&["dim"])?;
                QuandleSpec::Sphere {
                    dim: node.usize("dim")?,
                }
            }
            "torus" => {
                node.only(&["m"])?;
                QuandleSpec::Torus {
                    m: node.usize_vec("m")?,
                }
            }
            "graph" => {
                node.only(&["vertices", "weight_group", "d"])?;
                let vertices = node.usize("vertices")?;
                let d = node.matrix("d")?;
                if d.len() != vertices {
                    return Err(schema(
                        &node.child("d"),
                        format!("expected {vertices} rows, found {}", d.len()),
                    ));
                }
                QuandleSpec::Graph {
                    vertices,
                    weight_group: GroupSpec::from_value(
                        node.get("weight_group")?,
                        &node.child("weight_group"),
                    )?,
                    d,
                }
            }
            "product" | "free_union" => {
                let key = if tag == "product" { "factors" } else { "parts" };
                node.only(&[key])?;
                let (items, path) = node.array(key)?;
                if items.is_empty() {
                    return Err(schema(&path, "needs at least one entry"));
                }
                let parts = items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| QuandleSpec::parse_at(v, &format!("{path}/{i}")))
                    .collect::<Result<Vec<_>>>()?;
                if tag == "product" {
                    QuandleSpec::Product { factors: parts }
                } else {
                    QuandleSpec::FreeUnion { parts }
                }
            }
            "table" => {
                node.only(&["n", "s", "labels"])?;
                let s = node.matrix("s")?;
                if node.map.contains_key("n") {
                    let n = node.usize("n")?;
                    if n != s.len() {
                        return Err(schema(
                            &node.child("n"),
                            format!("n = {n} but the table has {} rows", s.len()),
                        ));
                    }
                }
                let labels = match node.map.get("labels") {
                    None => None,
                    Some(v) => {
                        let path = node.child("labels");
                        Some(
                            as_array(v, &path)?
                                .iter()
                                .enumerate()
                                .map(|(i, l)| {
                                    l.as_str()
                                        .map(str::to_string)
                                        .ok_or_else(|| schema(&format!("{path}/{i}"), "expected a string"))
                                })
                                .collect::<Result<Vec<_>>>()?,
                        )
                    }
                };
                QuandleSpec::Table { s, labels }
            }
            other => return Err(unknown(other, path)),
        };
        Ok(spec)
    }

    pub fn to_value(&self) -> Value {
        match self {
            QuandleSpec::Trivial { n } => json!({"type": "trivial", "n": n}),
            QuandleSpec::Dihedral { n } => json!({"type": "dihedral", "n": n}),
            QuandleSpec::Cycle { n } => json!({"type": "cycle", "n": n}),
            QuandleSpec::Path { n } => json!({"type": "path", "n": n}),
            QuandleSpec::Galex { group, sigma } => json!({
                "type": "galex", "group": group.to_value(), "sigma": sigma.to_value(),
            }),
            QuandleSpec::Core { group } => json!({"type": "core", "group": group.to_value()}),
            QuandleSpec::Sphere { dim } => json!({"type": "sphere", "dim": dim}),
            QuandleSpec::Torus { m } => json!({"type": "torus", "m": m}),
            QuandleSpec::Graph {
                vertices,
                weight_group,
                d,
            } => json!({
                "type": "graph", "vertices": vertices,
                "weight_group": weight_group.to_value(), "d": d,
            }),
            QuandleSpec::Product { factors } => json!({
                "type": "product",
                "factors": factors.iter().map(QuandleSpec::to_value).collect::<Vec<_>>(),
            }),
            QuandleSpec::FreeUnion { parts } => json!({
                "type": "free_union",
                "parts": parts.iter().map(QuandleSpec::to_value).collect::<Vec<_>>(),
            }),
            QuandleSpec::Table { s, labels } => {
                let mut v = json!({"type": "table", "n": s.len(), "s": s});
                if let Some(labels) = labels {
                    v["labels"] = json!(labels);
                }
                v
            }
        }
    }

    /// The weighted graph behind a `graph`, `cycle` or `path` spec; `None`
    /// for every other root type.
    pub fn graph_spec(&self) -> Option<Result<WeightedGraphSpec>> {
        let here = |e: Error| e.at("/");
        match self {
            QuandleSpec::Graph {
                weight_group, d, ..
            } => Some(
                weight_group
                    .resolve_at("/weight_group")
                    .and_then(|a| WeightedGraphSpec::new(a, d.clone()).map_err(here)),
            ),
            QuandleSpec::Cycle { n } => Some(constructors::cycle_spec(*n).map_err(here)),
            QuandleSpec::Path { n } => Some(constructors::path_spec(*n).map_err(here)),
            _ => None,
        }
    }

    pub fn resolve(&self) -> Result<FiniteQuandle> {
        self.resolve_at("")
    }

    fn resolve_at(&self, path: &str) -> Result<FiniteQuandle> {
        let here = |e: Error| e.at(if path.is_empty() { "/" } else { path });
        let fold = |items: &[QuandleSpec],
                    key: &str,
                    combine: fn(&FiniteQuandle, &FiniteQuandle) -> Result<FiniteQuandle>|
         -> Result<FiniteQuandle> {
            let mut acc = items[0].resolve_at(&format!("{path}/{key}/0"))?;
            for (i, item) in items.iter().enumerate().skip(1) {
                let next = item.resolve_at(&format!("{path}/{key}/{i}"))?;
                acc = combine(&acc, &next).map_err(here)?;
            }
            Ok(acc)
        };
        match self {
            QuandleSpec::Trivial { n } => constructors::trivial(*n).map_err(here),
            QuandleSpec::Dihedral { n } => constructors::dihedral(*n).map_err(here),
            QuandleSpec::Cycle { n } => constructors::cycle_quandle(*n).map_err(here),
            QuandleSpec::Path { n } => constructors::path_quandle(*n).map_err(here),
            QuandleSpec::Sphere { dim } => constructors::discrete_sphere(*dim).map_err(here),
            QuandleSpec::Torus { m } => constructors::discrete_torus(m).map_err(here),
            QuandleSpec::Galex { group, sigma } => {
                let g = group.resolve_at(&format!("{path}/group"))?;
                let sigma = sigma
                    .resolve(g.order())
                    .map_err(|e| e.at(&format!("{path}/sigma")))?;
                constructors::galex(&g, &sigma).map_err(here)
            }
            QuandleSpec::Core { group } => {
                let g = group.resolve_at(&format!("{path}/group"))?;
                constructors::core(&g).map_err(here)
            }
            QuandleSpec::Graph {
                weight_group, d, ..
            } => {
                let a = weight_group.resolve_at(&format!("{path}/weight_group"))?;
                let spec = WeightedGraphSpec::new(a, d.clone()).map_err(here)?;
                constructors::graph_quandle(&spec).map_err(here)
            }
            QuandleSpec::Product { factors } => fold(factors, "factors", FiniteQuandle::direct_product),
            QuandleSpec::FreeUnion { parts } => fold(parts, "parts", FiniteQuandle::free_union),
            QuandleSpec::Table { s, labels } => {
                let q = FiniteQuandle::validate(s.clone()).map_err(here)?;
                match labels {
                    Some(l) => q.with_labels(l.clone()).map_err(here),
                    None => Ok(q),
                }
            }
        }
    }
}

pub fn resolve(spec: &QuandleSpec) -> Result<FiniteQuandle> {
    spec.resolve()
}

/// The canonical `table` spec of a resolved quandle, as a `QuandleSpec`.
pub fn table_spec(q: &FiniteQuandle) -> QuandleSpec {
    QuandleSpec::Table {
        s: q.table(),
        labels: q.labels().map(<[String]>::to_vec),
    }
}

/// Canonical single-line JSON: `{"type":"table","n":..,"s":[..]}` plus
/// `"labels"` when present. Keys always appear in that order.
pub fn table_json(q: &FiniteQuandle) -> String {
    #[derive(serde::Serialize)]
    struct Table<'a> {
        #[serde(rename = "type")]
        kind: &'static str,
        n: usize,
        s: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<&'a [String]>,
    }
    serde_json::to_string(&Table {
        kind: "table",
        n: q.size(),
        s: q.table(),
        labels: q.labels(),
    })
    .expect("table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{dihedral, discrete_sphere, discrete_torus};

    #[test]
    fn parses_simple_specs() {
        assert_eq!(
            parse_spec(r#"{"type":"dihedral","n":5}"#).unwrap(),
            QuandleSpec::Dihedral { n: 5 }
        );
        assert_eq!(
            parse_spec(r#"{"type":"sphere"}"#).unwrap_err(),
            Error::Schema {
                path: "/dim".into(),
                message: "missing".into()
            }
        );
        let nested = parse_spec(
            r#"{"type":"product","factors":[{"type":"dihedral","n":3},{"type":"trivial","n":2}]}"#,
        )
        .unwrap();
        assert_eq!(
            nested,
            QuandleSpec::Product {
                factors: vec![QuandleSpec::Dihedral { n: 3 }, QuandleSpec::Trivial { n: 2 }]
            }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_spec("{\"type\":"), Err(Error::Syntax { line: 1, .. })));
        assert_eq!(
            parse_spec(r#"{"type":"klein"}"#).unwrap_err(),
            Error::UnknownType("klein".into())
        );
        let nested = parse_spec(r#"{"type":"free_union","parts":[{"type":"trivial","n":1},{"type":"nope"}]}"#)
            .unwrap_err();
        assert_eq!(nested.root(), &Error::UnknownType("nope".into()));
        assert!(nested.to_string().contains("/parts/1"));
        assert_eq!(
            parse_spec(r#"{"type":"dihedral","n":-1}"#).unwrap_err(),
            Error::Schema {
                path: "/n".into(),
                message: "expected a non-negative integer".into()
            }
        );
        assert!(matches!(
            parse_spec(r#"{"type":"dihedral","n":3,"m":4}"#),
            Err(Error::Schema { path, .. }) if path == "/m"
        ));
        assert!(matches!(
            parse_spec(r#"{"n":3}"#),
            Err(Error::Schema { path, .. }) if path == "/type"
        ));
        assert!(matches!(
            parse_spec(r#"{"type":"table","n":2,"s":[[0]]}"#),
            Err(Error::Schema { path, .. }) if path == "/n"
        ));
    }

    #[test]
    fn resolves() {
        let r3 = parse_spec(r#"{"type":"dihedral","n":3}"#).unwrap().resolve().unwrap();
        assert_eq!(r3.table(), vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        let core = parse_spec(r#"{"type":"core","group":{"type":"cyclic","n":3}}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(core, dihedral(3).unwrap());
        let torus = parse_spec(r#"{"type":"torus","m":[3,3]}"#).unwrap().resolve().unwrap();
        assert_eq!(torus.size(), 9);
        assert_eq!(torus, discrete_torus(&[3, 3]).unwrap());
    }

    #[test]
    fn galex_sigma_forms() {
        let images = parse_spec(r#"{"type":"galex","group":{"type":"cyclic","n":5},"sigma":[0,2,4,1,3]}"#)
            .unwrap()
            .resolve()
            .unwrap();
        let cycles = parse_spec(r#"{"type":"galex","group":{"type":"cyclic","n":5},"sigma":"(1 2 4 3)"}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(images, cycles);
        let bad = parse_spec(r#"{"type":"galex","group":{"type":"cyclic","n":4},"sigma":[1,2,3,0]}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
        assert_eq!(bad.root(), &Error::NotAnAutomorphism);
    }

    #[test]
    fn resolve_errors_carry_paths() {
        let e = parse_spec(r#"{"type":"product","factors":[{"type":"dihedral","n":3},{"type":"trivial","n":0}]}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
        match e {
            Error::AtPath { path, source } => {
                assert_eq!(path, "/factors/1");
                assert!(matches!(*source, Error::InvalidParameter(_)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let e = parse_spec(r#"{"type":"table","s":[[1,0],[1,0]]}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
        assert_eq!(e.root(), &Error::Q1Violation(0));
    }

    #[test]
    fn graph_specs() {
        let spec = parse_spec(
            r#"{"type":"graph","vertices":3,"weight_group":{"type":"cyclic","n":2},"d":[[0,1,0],[0,0,1],[1,0,0]]}"#,
        )
        .unwrap();
        let q = spec.resolve().unwrap();
        assert_eq!(q.size(), 6);
        assert!(spec.graph_spec().unwrap().is_ok());
        assert!(QuandleSpec::Cycle { n: 3 }.graph_spec().is_some());
        assert!(QuandleSpec::Dihedral { n: 3 }.graph_spec().is_none());
        assert!(parse_spec(
            r#"{"type":"graph","vertices":2,"weight_group":{"type":"cyclic","n":2},"d":[[0,1,0]]}"#
        )
        .is_err());
    }

    #[test]
    fn table_round_trip() {
        let q = discrete_sphere(2).unwrap();
        let text = table_json(&q);
        assert!(text.starts_with(r#"{"type":"table","n":6,"s":[[0,1,3,2,5,4],"#));
        let back = parse_spec(&text).unwrap().resolve().unwrap();
        assert_eq!(back, q);
        assert_eq!(table_json(&back), text);
        assert_eq!(parse_spec(&text).unwrap(), table_spec(&q));
    }

    #[test]
    fn spec_value_round_trip() {
        let text = r#"{"type":"free_union","parts":[{"type":"galex","group":{"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":2}]},"sigma":[0,2,1,3]},{"type":"graph","vertices":2,"weight_group":{"type":"symmetric","n":1},"d":[[0,0],[0,0]]}]}"#;
        let spec = parse_spec(text).unwrap();
        assert_eq!(QuandleSpec::from_value(&spec.to_value()).unwrap(), spec);
    }
}
