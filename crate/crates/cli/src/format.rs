//! The `.struct` file format: structure constants as JSON-compatible text,
//! with every scalar written as a rational string.
//!
//! A file declares named spaces, matrices and rank-3 tensors, then bundles
//! that assemble them into algebraic objects. Parsing validates the whole
//! object graph; [`serialize`] writes the canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::{Map, Value};
use thiserror::Error;

use homhopf::constructions::{BiproductSpec, CrossedProductSpec};
use homhopf::convact::{Coaction, Cocycle, ModuleAction};
use homhopf::exactlin::{Field, LinearMap, Scalar, Space};
use homhopf::homcore::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf};

pub const FORMAT_VERSION: u64 = 1;

/// Reserved name of the one-dimensional ground space, basis `1`.
pub const GROUND: &str = "k";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: unknown {kind} {name:?}")]
    UnknownReference {
        path: String,
        kind: &'static str,
        name: String,
    },
    #[error("{path}: {message}")]
    Shape { path: String, message: String },
    #[error("{path}: bad rational {text:?}")]
    BadRational { path: String, text: String },
}

impl ParseError {
    /// Stable name of the error class, as used in JSON reports.
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownReference { .. } => "UnknownReference",
            ParseError::Shape { .. } => "ShapeError",
            ParseError::BadRational { .. } => "BadRational",
        }
    }
}

fn shape(path: &str, message: impl ToString) -> ParseError {
    ParseError::Shape {
        path: path.to_string(),
        message: message.to_string(),
    }
}

fn unknown(path: &str, kind: &'static str, name: &str) -> ParseError {
    ParseError::UnknownReference {
        path: path.to_string(),
        kind,
        name: name.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDecl {
    pub from: String,
    pub to: String,
    pub map: LinearMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    /// `X ⊗ Y → Z`; `table[i][j][k]` is the coefficient of `z_k` in the
    /// image of `x_i ⊗ y_j`.
    Product,
    /// `X → Y ⊗ Z`; `table[i][j][k]` is the coefficient of `y_j ⊗ z_k` in
    /// the image of `x_i`.
    Coproduct,
}

impl TensorKind {
    fn name(self) -> &'static str {
        match self {
            TensorKind::Product => "product",
            TensorKind::Coproduct => "coproduct",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecl {
    pub kind: TensorKind,
    pub legs: [String; 3],
    pub map: LinearMap,
}

/// A named assembly of declarations. Fields hold the names of spaces, maps,
/// tensors or other bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bundle {
    Algebra { space: String, mult: String, unit: String, alpha: String },
    Coalgebra { space: String, comult: String, counit: String, gamma: String },
    Bialgebra { algebra: String, coalgebra: String },
    Hopf { bialgebra: String, antipode: String },
    Action { acting: String, target: String, act: String },
    Coaction { coacting: String, target: String, coact: String },
    Cocycle { source: String, target: String, sigma: String, inverse: Option<String> },
    Crossed { action: String, cocycle: String, m: i64, k: i64 },
    Biproduct { crossed: String, coaction: String, antipodes: Option<(String, String)> },
}

impl Bundle {
    pub fn kind(&self) -> &'static str {
        match self {
            Bundle::Algebra { .. } => "algebra",
            Bundle::Coalgebra { .. } => "coalgebra",
            Bundle::Bialgebra { .. } => "bialgebra",
            Bundle::Hopf { .. } => "hopf",
            Bundle::Action { .. } => "action",
            Bundle::Coaction { .. } => "coaction",
            Bundle::Cocycle { .. } => "cocycle",
            Bundle::Crossed { .. } => "crossed",
            Bundle::Biproduct { .. } => "biproduct",
        }
    }

    /// `(key, value)` pairs for the string-valued fields, in any order.
    fn references(&self) -> Vec<(&'static str, &str)> {
        let mut out = match self {
            Bundle::Algebra { space, mult, unit, alpha } => vec![("space", space), ("mult", mult), ("unit", unit), ("alpha", alpha)],
            Bundle::Coalgebra { space, comult, counit, gamma } => {
                vec![("space", space), ("comult", comult), ("counit", counit), ("gamma", gamma)]
            }
            Bundle::Bialgebra { algebra, coalgebra } => vec![("algebra", algebra), ("coalgebra", coalgebra)],
            Bundle::Hopf { bialgebra, antipode } => vec![("bialgebra", bialgebra), ("antipode", antipode)],
            Bundle::Action { acting, target, act } => vec![("acting", acting), ("target", target), ("act", act)],
            Bundle::Coaction { coacting, target, coact } => vec![("coacting", coacting), ("target", target), ("coact", coact)],
            Bundle::Cocycle { source, target, sigma, inverse } => {
                let mut v = vec![("source", source), ("target", target), ("sigma", sigma)];
                if let Some(i) = inverse {
                    v.push(("inverse", i));
                }
                v
            }
            Bundle::Crossed { action, cocycle, .. } => vec![("action", action), ("cocycle", cocycle)],
            Bundle::Biproduct { crossed, coaction, antipodes } => {
                let mut v = vec![("crossed", crossed), ("coaction", coaction)];
                if let Some((h, a)) = antipodes {
                    v.push(("antipode_h", h));
                    v.push(("antipode_a", a));
                }
                v
            }
        };
        out.sort_by_key(|(k, _)| *k);
        out.into_iter().map(|(k, v)| (k, v.as_str())).collect()
    }
}

/// A resolved bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
    Hopf(HomHopf),
    Action(ModuleAction),
    Coaction(Coaction),
    Cocycle(Cocycle),
    Crossed(CrossedProductSpec),
    Biproduct {
        spec: BiproductSpec,
        antipodes: Option<(LinearMap, LinearMap)>,
    },
}

/// Declarations of a `.struct` file before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declarations {
    pub field: Field,
    pub spaces: BTreeMap<String, Space>,
    pub maps: BTreeMap<String, MapDecl>,
    pub tensors: BTreeMap<String, TensorDecl>,
    pub bundles: BTreeMap<String, Bundle>,
}

impl Declarations {
    pub fn new(field: Field) -> Declarations {
        Declarations {
            field,
            spaces: BTreeMap::new(),
            maps: BTreeMap::new(),
            tensors: BTreeMap::new(),
            bundles: BTreeMap::new(),
        }
    }
}

/// A validated file: declarations plus every bundle resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    decls: Declarations,
    objects: BTreeMap<String, Object>,
}

impl StructureFile {
    /// Resolves every bundle, failing on the first dangling reference or
    /// inconsistent shape.
    pub fn new(decls: Declarations) -> Result<StructureFile, ParseError> {
        let mut r = Resolver {
            decls: &decls,
            objects: BTreeMap::new(),
            visiting: BTreeSet::new(),
        };
        for name in decls.bundles.keys() {
            r.bundle(&format!("bundles.{name}"), name)?;
        }
        let objects = r.objects;
        Ok(StructureFile { decls, objects })
    }

    pub fn declarations(&self) -> &Declarations {
        &self.decls
    }

    pub fn field(&self) -> Field {
        self.decls.field
    }

    pub fn objects(&self) -> &BTreeMap<String, Object> {
        &self.objects
    }

    pub fn object(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }
}

struct Resolver<'a> {
    decls: &'a Declarations,
    objects: BTreeMap<String, Object>,
    visiting: BTreeSet<String>,
}

impl Resolver<'_> {
    fn space(&self, path: &str, name: &str) -> Result<Space, ParseError> {
        if name == GROUND {
            return Ok(Space::ground());
        }
        self.decls.spaces.get(name).cloned().ok_or_else(|| unknown(path, "space", name))
    }

    /// A declared map, required to run `from → to`.
    fn map(&self, path: &str, name: &str, from: &Space, to: &Space) -> Result<LinearMap, ParseError> {
        let m = self.decls.maps.get(name).ok_or_else(|| unknown(path, "map", name))?;
        if m.map.domain() != from || m.map.codomain() != to {
            return Err(shape(path, format!("map {name:?} runs {} -> {}, which does not fit here", m.from, m.to)));
        }
        Ok(m.map.clone())
    }

    fn tensor(&self, path: &str, name: &str, kind: TensorKind, legs: [&Space; 3]) -> Result<LinearMap, ParseError> {
        let t = self.decls.tensors.get(name).ok_or_else(|| unknown(path, "tensor", name))?;
        if t.kind != kind {
            return Err(shape(path, format!("tensor {name:?} is a {}, expected a {}", t.kind.name(), kind.name())));
        }
        for (leg, want) in t.legs.iter().zip(legs) {
            if &self.space(path, leg)? != want {
                return Err(shape(path, format!("tensor {name:?} has legs {:?}, which do not fit here", t.legs)));
            }
        }
        Ok(t.map.clone())
    }

    fn bundle(&mut self, path: &str, name: &str) -> Result<Object, ParseError> {
        if let Some(o) = self.objects.get(name) {
            return Ok(o.clone());
        }
        let b = self.decls.bundles.get(name).ok_or_else(|| unknown(path, "bundle", name))?;
        if !self.visiting.insert(name.to_string()) {
            return Err(shape(path, format!("bundle {name:?} refers to itself")));
        }
        let here = format!("bundles.{name}");
        let obj = self.build(&here, b)?;
        self.visiting.remove(name);
        self.objects.insert(name.to_string(), obj.clone());
        Ok(obj)
    }

    fn build(&mut self, path: &str, b: &Bundle) -> Result<Object, ParseError> {
        let at = |key: &str| format!("{path}.{key}");
        let bad = |e: &dyn std::fmt::Display| shape(path, e);
        Ok(match b {
            Bundle::Algebra { space, mult, unit, alpha } => {
                let s = self.space(&at("space"), space)?;
                let mult = self.tensor(&at("mult"), mult, TensorKind::Product, [&s, &s, &s])?;
                let unit = self.map(&at("unit"), unit, &Space::ground(), &s)?;
                let alpha = self.map(&at("alpha"), alpha, &s, &s)?;
                Object::Algebra(HomAlgebra::new(&s, mult, unit, alpha).map_err(|e| bad(&e))?)
            }
            Bundle::Coalgebra { space, comult, counit, gamma } => {
                let s = self.space(&at("space"), space)?;
                let comult = self.tensor(&at("comult"), comult, TensorKind::Coproduct, [&s, &s, &s])?;
                let counit = self.map(&at("counit"), counit, &s, &Space::ground())?;
                let gamma = self.map(&at("gamma"), gamma, &s, &s)?;
                Object::Coalgebra(HomCoalgebra::new(&s, comult, counit, gamma).map_err(|e| bad(&e))?)
            }
            Bundle::Bialgebra { algebra, coalgebra } => {
                let a = self.algebra(&at("algebra"), algebra)?;
                let c = self.coalgebra(&at("coalgebra"), coalgebra)?;
                Object::Bialgebra(HomBialgebra::new(a, c).map_err(|e| bad(&e))?)
            }
            Bundle::Hopf { bialgebra, antipode } => {
                let b = self.bialgebra(&at("bialgebra"), bialgebra)?;
                let s = self.map(&at("antipode"), antipode, b.space(), b.space())?;
                Object::Hopf(HomHopf::new(b, s).map_err(|e| bad(&e))?)
            }
            Bundle::Action { acting, target, act } => {
                let h = self.bialgebra(&at("acting"), acting)?;
                let a = self.algebra(&at("target"), target)?;
                let act = self.tensor(&at("act"), act, TensorKind::Product, [h.space(), a.space(), a.space()])?;
                Object::Action(ModuleAction::new(&h, &a, act).map_err(|e| bad(&e))?)
            }
            Bundle::Coaction { coacting, target, coact } => {
                let h = self.bialgebra(&at("coacting"), coacting)?;
                let c = self.coalgebra(&at("target"), target)?;
                let co = self.tensor(&at("coact"), coact, TensorKind::Coproduct, [c.space(), h.space(), c.space()])?;
                Object::Coaction(Coaction::new(&h, &c, co).map_err(|e| bad(&e))?)
            }
            Bundle::Cocycle { source, target, sigma, inverse } => {
                let h = self.bialgebra(&at("source"), source)?;
                let a = self.algebra(&at("target"), target)?;
                let legs = [h.space(), h.space(), a.space()];
                let s = self.tensor(&at("sigma"), sigma, TensorKind::Product, legs)?;
                let mut c = Cocycle::new(&h, &a, s).map_err(|e| bad(&e))?;
                if let Some(inv) = inverse {
                    let inv = self.tensor(&at("inverse"), inv, TensorKind::Product, legs)?;
                    c = c.with_inverse(inv).map_err(|e| bad(&e))?;
                }
                Object::Cocycle(c)
            }
            Bundle::Crossed { action, cocycle, m, k } => {
                let Object::Action(act) = self.expect(&at("action"), action, "action")? else { unreachable!() };
                let Object::Cocycle(sigma) = self.expect(&at("cocycle"), cocycle, "cocycle")? else { unreachable!() };
                Object::Crossed(CrossedProductSpec::new(act, sigma, *m, *k).map_err(|e| bad(&e))?)
            }
            Bundle::Biproduct { crossed, coaction, antipodes } => {
                let Object::Crossed(c) = self.expect(&at("crossed"), crossed, "crossed")? else { unreachable!() };
                let Object::Coaction(co) = self.expect(&at("coaction"), coaction, "coaction")? else { unreachable!() };
                let antipodes = match antipodes {
                    None => None,
                    Some((sh, sa)) => {
                        let (h, a) = (c.bialgebra().space(), c.algebra().space());
                        Some((self.map(&at("antipode_h"), sh, h, h)?, self.map(&at("antipode_a"), sa, a, a)?))
                    }
                };
                let spec = BiproductSpec::new(c, co).map_err(|e| bad(&e))?;
                Object::Biproduct { spec, antipodes }
            }
        })
    }

    fn expect(&mut self, path: &str, name: &str, kind: &str) -> Result<Object, ParseError> {
        let o = self.bundle(path, name)?;
        let found = self.decls.bundles[name].kind();
        if found != kind {
            return Err(shape(path, format!("bundle {name:?} is a {found}, expected a {kind}")));
        }
        Ok(o)
    }

    /// Algebras may be given directly or as the algebra part of a bialgebra
    /// or Hopf bundle; likewise for the other accessors below.
    fn algebra(&mut self, path: &str, name: &str) -> Result<HomAlgebra, ParseError> {
        match self.bundle(path, name)? {
            Object::Algebra(a) => Ok(a),
            Object::Bialgebra(b) => Ok(b.algebra().clone()),
            Object::Hopf(h) => Ok(h.bialgebra().algebra().clone()),
            _ => Err(shape(path, format!("bundle {name:?} is not an algebra"))),
        }
    }

    fn coalgebra(&mut self, path: &str, name: &str) -> Result<HomCoalgebra, ParseError> {
        match self.bundle(path, name)? {
            Object::Coalgebra(c) => Ok(c),
            Object::Bialgebra(b) => Ok(b.coalgebra().clone()),
            Object::Hopf(h) => Ok(h.bialgebra().coalgebra().clone()),
            _ => Err(shape(path, format!("bundle {name:?} is not a coalgebra"))),
        }
    }

    fn bialgebra(&mut self, path: &str, name: &str) -> Result<HomBialgebra, ParseError> {
        match self.bundle(path, name)? {
            Object::Bialgebra(b) => Ok(b),
            Object::Hopf(h) => Ok(h.bialgebra().clone()),
            _ => Err(shape(path, format!("bundle {name:?} is not a bialgebra"))),
        }
    }
}

/// Parses and validates `.struct` text.
pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: syntax_message(&e),
    })?;
    StructureFile::new(declarations(&value)?)
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn syntax_message(e: &serde_json::Error) -> String {
    let full = e.to_string();
    match full.rfind(" at line ") {
        Some(i) => full[..i].to_string(),
        None => full,
    }
}

fn object<'v>(path: &str, v: &'v Value, keys: &[&str], optional: &[&str]) -> Result<&'v Map<String, Value>, ParseError> {
    let m = v.as_object().ok_or_else(|| shape(path, "expected an object"))?;
    for k in m.keys() {
        if !keys.contains(&k.as_str()) && !optional.contains(&k.as_str()) {
            return Err(shape(path, format!("unexpected key {k:?}")));
        }
    }
    for k in keys {
        if !m.contains_key(*k) {
            return Err(shape(path, format!("missing key {k:?}")));
        }
    }
    Ok(m)
}

/// An object whose keys are user-chosen names.
fn named<'v>(path: &str, v: &'v Value) -> Result<&'v Map<String, Value>, ParseError> {
    v.as_object().ok_or_else(|| shape(path, "expected an object"))
}

fn string<'v>(path: &str, v: &'v Value) -> Result<&'v str, ParseError> {
    v.as_str().ok_or_else(|| shape(path, "expected a string"))
}

fn integer(path: &str, v: &Value) -> Result<i64, ParseError> {
    v.as_i64().ok_or_else(|| shape(path, "expected an integer"))
}

fn array<'v>(path: &str, v: &'v Value, len: usize) -> Result<&'v [Value], ParseError> {
    let a = v.as_array().ok_or_else(|| shape(path, "expected an array"))?;
    if a.len() != len {
        return Err(shape(path, format!("expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

fn scalar(path: &str, field: Field, v: &Value) -> Result<Scalar, ParseError> {
    let bad = |text: String| ParseError::BadRational { path: path.to_string(), text };
    let text = v.as_str().ok_or_else(|| bad(v.to_string()))?;
    field.parse(text).map_err(|_| bad(text.to_string()))
}

fn declarations(v: &Value) -> Result<Declarations, ParseError> {
    let top = object("", v, &["format_version", "field", "spaces", "maps", "tensors", "bundles"], &[])?;
    let version = top["format_version"].as_u64();
    if version != Some(FORMAT_VERSION) {
        return Err(shape("format_version", format!("expected {FORMAT_VERSION}")));
    }
    let field_text = string("field", &top["field"])?;
    let field: Field = field_text.parse().map_err(|e| shape("field", e))?;
    let mut d = Declarations::new(field);

    for (name, names) in named("spaces", &top["spaces"])? {
        let path = format!("spaces.{name}");
        if name == GROUND {
            return Err(shape(&path, format!("{GROUND:?} is reserved for the ground field")));
        }
        let list = names.as_array().ok_or_else(|| shape(&path, "expected an array of basis names"))?;
        let basis = list
            .iter()
            .enumerate()
            .map(|(i, n)| string(&format!("{path}[{i}]"), n).map(str::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        d.spaces.insert(name.clone(), Space::new(basis).map_err(|e| shape(&path, e))?);
    }

    let space = |path: &str, name: &str, d: &Declarations| -> Result<Space, ParseError> {
        if name == GROUND {
            return Ok(Space::ground());
        }
        d.spaces.get(name).cloned().ok_or_else(|| unknown(path, "space", name))
    };

    for (name, m) in named("maps", &top["maps"])? {
        let path = format!("maps.{name}");
        let o = object(&path, m, &["from", "to", "matrix"], &[])?;
        let from = string(&format!("{path}.from"), &o["from"])?;
        let to = string(&format!("{path}.to"), &o["to"])?;
        let (dom, cod) = (space(&format!("{path}.from"), from, &d)?, space(&format!("{path}.to"), to, &d)?);
        let mpath = format!("{path}.matrix");
        let rows = array(&mpath, &o["matrix"], cod.dim())?
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let rpath = format!("{mpath}[{r}]");
                array(&rpath, row, dom.dim())?
                    .iter()
                    .enumerate()
                    .map(|(c, s)| scalar(&format!("{rpath}[{c}]"), field, s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let map = LinearMap::from_rows(field, &dom, &cod, rows).map_err(|e| shape(&mpath, e))?;
        d.maps.insert(name.clone(), MapDecl { from: from.to_string(), to: to.to_string(), map });
    }

    for (name, t) in named("tensors", &top["tensors"])? {
        let path = format!("tensors.{name}");
        let o = object(&path, t, &["kind", "legs", "table"], &[])?;
        let kind = match string(&format!("{path}.kind"), &o["kind"])? {
            "product" => TensorKind::Product,
            "coproduct" => TensorKind::Coproduct,
            other => return Err(shape(&format!("{path}.kind"), format!("unknown tensor kind {other:?}"))),
        };
        let lpath = format!("{path}.legs");
        let legs = array(&lpath, &o["legs"], 3)?
            .iter()
            .enumerate()
            .map(|(i, l)| string(&format!("{lpath}[{i}]"), l).map(str::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        let spaces = legs
            .iter()
            .map(|l| space(&lpath, l, &d))
            .collect::<Result<Vec<_>, _>>()?;
        let tpath = format!("{path}.table");
        let (d0, d1, d2) = (spaces[0].dim(), spaces[1].dim(), spaces[2].dim());
        let mut table = Vec::with_capacity(d0);
        for (i, plane) in array(&tpath, &o["table"], d0)?.iter().enumerate() {
            let ppath = format!("{tpath}[{i}]");
            let mut rows = Vec::with_capacity(d1);
            for (j, row) in array(&ppath, plane, d1)?.iter().enumerate() {
                let rpath = format!("{ppath}[{j}]");
                let entries = array(&rpath, row, d2)?
                    .iter()
                    .enumerate()
                    .map(|(k, s)| scalar(&format!("{rpath}[{k}]"), field, s))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(entries);
            }
            table.push(rows);
        }
        let map = match kind {
            TensorKind::Product => LinearMap::from_binary_table(field, &spaces[0], &spaces[1], &spaces[2], &table),
            TensorKind::Coproduct => LinearMap::from_split_table(field, &spaces[0], &spaces[1], &spaces[2], &table),
        }
        .map_err(|e| shape(&tpath, e))?;
        let legs = [legs[0].clone(), legs[1].clone(), legs[2].clone()];
        d.tensors.insert(name.clone(), TensorDecl { kind, legs, map });
    }

    for (name, b) in named("bundles", &top["bundles"])? {
        d.bundles.insert(name.clone(), bundle(&format!("bundles.{name}"), b)?);
    }
    Ok(d)
}

fn bundle(path: &str, v: &Value) -> Result<Bundle, ParseError> {
    let kind = v
        .as_object()
        .and_then(|o| o.get("kind"))
        .ok_or_else(|| shape(path, "missing key \"kind\""))?;
    let kind = string(&format!("{path}.kind"), kind)?;
    let (keys, optional): (&[&str], &[&str]) = match kind {
        "algebra" => (&["kind", "space", "mult", "unit", "alpha"], &[]),
        "coalgebra" => (&["kind", "space", "comult", "counit", "gamma"], &[]),
        "bialgebra" => (&["kind", "algebra", "coalgebra"], &[]),
        "hopf" => (&["kind", "bialgebra", "antipode"], &[]),
        "action" => (&["kind", "acting", "target", "act"], &[]),
        "coaction" => (&["kind", "coacting", "target", "coact"], &[]),
        "cocycle" => (&["kind", "source", "target", "sigma"], &["inverse"]),
        "crossed" => (&["kind", "action", "cocycle", "m", "k"], &[]),
        "biproduct" => (&["kind", "crossed", "coaction"], &["antipode_h", "antipode_a"]),
        other => return Err(shape(&format!("{path}.kind"), format!("unknown bundle kind {other:?}"))),
    };
    let o = object(path, v, keys, optional)?;
    let s = |key: &str| -> Result<String, ParseError> { string(&format!("{path}.{key}"), &o[key]).map(str::to_string) };
    let opt = |key: &str| -> Result<Option<String>, ParseError> {
        o.get(key).map(|v| string(&format!("{path}.{key}"), v).map(str::to_string)).transpose()
    };
    let int = |key: &str| integer(&format!("{path}.{key}"), &o[key]);
    Ok(match kind {
        "algebra" => Bundle::Algebra { space: s("space")?, mult: s("mult")?, unit: s("unit")?, alpha: s("alpha")? },
        "coalgebra" => Bundle::Coalgebra { space: s("space")?, comult: s("comult")?, counit: s("counit")?, gamma: s("gamma")? },
        "bialgebra" => Bundle::Bialgebra { algebra: s("algebra")?, coalgebra: s("coalgebra")? },
        "hopf" => Bundle::Hopf { bialgebra: s("bialgebra")?, antipode: s("antipode")? },
        "action" => Bundle::Action { acting: s("acting")?, target: s("target")?, act: s("act")? },
        "coaction" => Bundle::Coaction { coacting: s("coacting")?, target: s("target")?, coact: s("coact")? },
        "cocycle" => Bundle::Cocycle { source: s("source")?, target: s("target")?, sigma: s("sigma")?, inverse: opt("inverse")? },
        "crossed" => Bundle::Crossed { action: s("action")?, cocycle: s("cocycle")?, m: int("m")?, k: int("k")? },
        _ => {
            let antipodes = match (opt("antipode_h")?, opt("antipode_a")?) {
                (Some(h), Some(a)) => Some((h, a)),
                (None, None) => None,
                _ => return Err(shape(path, "antipode_h and antipode_a come together")),
            };
            Bundle::Biproduct { crossed: s("crossed")?, coaction: s("coaction")?, antipodes }
        }
    })
}

fn text_row(row: impl IntoIterator<Item = Scalar>) -> Value {
    Value::Array(row.into_iter().map(|s| Value::String(s.to_text())).collect())
}

/// The file as a JSON value.
pub fn to_value(file: &StructureFile) -> Value {
    let d = &file.decls;
    let mut top = Map::new();
    top.insert("format_version".into(), Value::from(FORMAT_VERSION));
    top.insert("field".into(), Value::String(d.field.to_string()));
    let spaces = d
        .spaces
        .iter()
        .map(|(n, s)| (n.clone(), Value::Array(s.names().iter().cloned().map(Value::String).collect())))
        .collect();
    top.insert("spaces".into(), Value::Object(spaces));
    let maps = d
        .maps
        .iter()
        .map(|(n, m)| {
            let mut o = Map::new();
            o.insert("from".into(), Value::String(m.from.clone()));
            o.insert("to".into(), Value::String(m.to.clone()));
            let rows = (0..m.map.rows()).map(|r| text_row(m.map.row(r).iter().cloned())).collect();
            o.insert("matrix".into(), Value::Array(rows));
            (n.clone(), Value::Object(o))
        })
        .collect();
    top.insert("maps".into(), Value::Object(maps));
    let tensors = d
        .tensors
        .iter()
        .map(|(n, t)| {
            let dims: Vec<usize> = t.legs.iter().map(|l| file.space_dim(l)).collect();
            let table = match t.kind {
                TensorKind::Product => t.map.binary_table(dims[0], dims[1]),
                TensorKind::Coproduct => t.map.split_table(dims[1], dims[2]),
            };
            let table = table
                .into_iter()
                .map(|plane| Value::Array(plane.into_iter().map(text_row).collect()))
                .collect();
            let mut o = Map::new();
            o.insert("kind".into(), Value::String(t.kind.name().into()));
            o.insert("legs".into(), Value::Array(t.legs.iter().cloned().map(Value::String).collect()));
            o.insert("table".into(), Value::Array(table));
            (n.clone(), Value::Object(o))
        })
        .collect();
    top.insert("tensors".into(), Value::Object(tensors));
    let bundles = d
        .bundles
        .iter()
        .map(|(n, b)| {
            let mut o = Map::new();
            o.insert("kind".into(), Value::String(b.kind().into()));
            for (k, v) in b.references() {
                o.insert(k.into(), Value::String(v.into()));
            }
            if let Bundle::Crossed { m, k, .. } = b {
                o.insert("m".into(), Value::from(*m));
                o.insert("k".into(), Value::from(*k));
            }
            (n.clone(), Value::Object(o))
        })
        .collect();
    top.insert("bundles".into(), Value::Object(bundles));
    Value::Object(top)
}

impl StructureFile {
    fn space_dim(&self, name: &str) -> usize {
        if name == GROUND {
            1
        } else {
            self.decls.spaces[name].dim()
        }
    }
}

/// Canonical text: keys sorted, two-space indentation, innermost arrays of
/// scalars on one line, rationals in lowest terms, trailing newline.
pub fn serialize(file: &StructureFile) -> String {
    canonical_json(&to_value(file))
}

/// Renders any JSON value in the canonical layout.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_leaf) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(depth));
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(depth + 1), Value::String((*k).clone()));
                write_value(&m[k.as_str()], depth + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(depth));
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}
