//! JSON formats for Hopf algebras, cocycles, (C)QT structures and YD objects.
//!
//! Scalars are strings `"a"` or `"a/b"` (JSON integers are also accepted).
//! Sparse entry lists omit zeros. Structures over a Hopf algebra carry a
//! `"host"` key holding a catalog name (`"h4"`, `"kc2"`, resolved over the
//! document's `"field"`, default `Q`), a path to a Hopf JSON file, or an
//! inline Hopf object.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::catalog::{self, Payload};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{FieldSpec, Matrix, Scalar, Tensor};
use crate::quasitriangular::{CqtStructure, QtStructure};
use crate::twist::{DualCocycle, LazyOneCocycle, TwoCocycle};
use crate::yd::{YdAlgebra, YdModule};

/// Parses a document; relative host paths resolve against `base`.
pub fn parse(text: &str, base: Option<&Path>) -> Result<Payload> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())))?;
    Reader { base: base.map(Path::to_path_buf), lenient: false }.payload(&v)
}

/// Like [`load`], but a top-level Hopf algebra with a singular antipode is
/// accepted so that its verifier can report the failure.
pub fn load_for_validation(path: &Path) -> Result<Payload> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!("{}: malformed JSON at line {}, column {}: {e}", path.display(), e.line(), e.column()))
    })?;
    Reader { base: path.parent().map(Path::to_path_buf), lenient: true }.payload(&v)
}

/// Reads and parses a file.
pub fn load(path: &Path) -> Result<Payload> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text, path.parent()).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Loads a document that must be a Hopf algebra, or a catalog name.
pub fn load_hopf(name: &str, field: FieldSpec) -> Result<Arc<HopfAlgebra>> {
    Reader { base: None, lenient: false }.host_by_name(name, field)
}

pub fn to_json(p: &Payload) -> Value {
    match p {
        Payload::Hopf(h) => hopf_json(h),
        Payload::Cocycle(c) => pair_json("cocycle", c.host(), c.sigma(), c.sigma_inv()),
        Payload::DualCocycle(d) => pair_json("dual_cocycle", d.host(), d.theta(), d.theta_inv()),
        Payload::Cqt(c) => pair_json("cqt", c.host(), c.r(), c.r_inv()),
        Payload::Qt(q) => pair_json("qt", q.host(), q.rr(), q.rr_inv()),
        Payload::OneCocycle(m) => {
            let mut o = header("one_cocycle", m.host());
            o.insert("entries".into(), sparse1(m.mu()));
            o.insert("inverse".into(), sparse1(m.mu_inv()));
            Value::Object(o)
        }
        Payload::Module(m) => Value::Object(module_json("yd_module", m)),
        Payload::Algebra(a) => {
            let mut o = module_json("yd_algebra", a.module());
            o.insert("mult".into(), sparse_tensor(&a.mult_tensor()));
            o.insert("unit".into(), dense(a.unit()));
            Value::Object(o)
        }
    }
}

/// Indented JSON with each innermost array on one line.
pub fn to_string(p: &Payload) -> String {
    let mut out = String::new();
    write_compact(&to_json(p), 0, &mut out);
    out
}

fn write_compact(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_compact(x, depth + 1, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_compact(x, depth + 1, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn s(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn dense(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn sparse_tensor(t: &Tensor) -> Value {
    let shape = t.shape().to_vec();
    let mut out = Vec::new();
    for (flat, c) in t.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut idx = vec![0; shape.len()];
        let mut rest = flat;
        for (k, d) in shape.iter().enumerate().rev() {
            idx[k] = rest % d;
            rest /= d;
        }
        let mut row: Vec<Value> = idx.into_iter().map(Value::from).collect();
        row.push(s(c));
        out.push(Value::Array(row));
    }
    Value::Array(out)
}

fn sparse_matrix(m: &Matrix) -> Value {
    sparse_tensor(&Tensor::from_matrix(m))
}

fn sparse1(v: &[Scalar]) -> Value {
    let rows = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| json!([i, s(c)]))
        .collect();
    Value::Array(rows)
}

fn hopf_json(h: &HopfAlgebra) -> Value {
    let n = h.dim();
    let antipode: Vec<Value> = (0..n).map(|i| dense(&h.antipode().col(i))).collect();
    json!({
        "field": h.field().to_string(),
        "dim": n,
        "basis": h.basis_names(),
        "mult": sparse_tensor(h.mult()),
        "comult": sparse_tensor(h.comult()),
        "unit": dense(h.unit()),
        "counit": dense(h.counit()),
        "antipode": antipode,
    })
}

fn header(kind: &str, host: &HopfAlgebra) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("kind".into(), kind.into());
    o.insert("field".into(), h_field(host));
    o.insert(
        "host".into(),
        match catalog::host_name(host) {
            Some(name) => name.into(),
            None => hopf_json(host),
        },
    );
    o
}

fn h_field(h: &HopfAlgebra) -> Value {
    h.field().to_string().into()
}

fn pair_json(kind: &str, host: &HopfAlgebra, m: &Matrix, inv: &Matrix) -> Value {
    let mut o = header(kind, host);
    o.insert("entries".into(), sparse_matrix(m));
    o.insert("inverse".into(), sparse_matrix(inv));
    Value::Object(o)
}

fn module_json(kind: &str, m: &YdModule) -> Map<String, Value> {
    let mut o = header(kind, m.host());
    o.insert("dim".into(), m.dim().into());
    o.insert("action".into(), sparse_tensor(&m.action_tensor()));
    o.insert("coaction".into(), sparse_tensor(&m.coaction_tensor()));
    o
}

struct Reader {
    base: Option<PathBuf>,
    /// Accept a singular antipode on a top-level Hopf document.
    lenient: bool,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn key<'a>(o: &'a Value, k: &str) -> Result<&'a Value> {
    o.get(k).ok_or_else(|| perr(format!("missing key {k:?}")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| perr(format!("{what}: expected a non-negative integer")))
}

fn scalar(f: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(t) => f.parse(t),
        Value::Number(n) => f.parse(&n.to_string()),
        _ => Err(perr(format!("expected a scalar, found {v}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{what}: expected an array")))
}

fn dense_of(f: FieldSpec, v: &Value, len: usize, what: &str) -> Result<Vector> {
    let a = array(v, what)?;
    if a.len() != len {
        return Err(Error::Shape(format!("{what}: expected {len} entries, found {}", a.len())));
    }
    a.iter().map(|x| scalar(f, x)).collect()
}

/// Reads sparse `[i, j, …, "c"]` rows into a tensor of the given shape.
fn sparse_of(f: FieldSpec, v: &Value, shape: &[usize], what: &str) -> Result<Tensor> {
    let mut t = Tensor::zeros(f, shape);
    for (r, row) in array(v, what)?.iter().enumerate() {
        let row = array(row, what)?;
        if row.len() != shape.len() + 1 {
            return Err(perr(format!("{what}[{r}]: expected {} fields", shape.len() + 1)));
        }
        let mut idx = Vec::with_capacity(shape.len());
        for (k, d) in shape.iter().enumerate() {
            let i = usize_of(&row[k], what)?;
            if i >= *d {
                return Err(Error::Shape(format!("{what}[{r}]: index {i} out of range {d}")));
            }
            idx.push(i);
        }
        let c = scalar(f, &row[shape.len()])?;
        let prev = t.get(&idx).clone();
        t.set(&idx, &prev + &c);
    }
    Ok(t)
}

fn field_of(o: &Value) -> Result<FieldSpec> {
    match o.get("field") {
        None => Ok(FieldSpec::Rationals),
        Some(Value::String(t)) => t.parse(),
        Some(other) => Err(perr(format!("field: expected a string, found {other}"))),
    }
}

impl Reader {
    fn payload(&self, v: &Value) -> Result<Payload> {
        if !v.is_object() {
            return Err(perr("top-level value must be an object"));
        }
        let kind = match v.get("kind") {
            None => "hopf",
            Some(k) => k.as_str().ok_or_else(|| perr("kind: expected a string"))?,
        };
        Ok(match kind {
            "hopf" => Payload::Hopf(self.hopf(v, self.lenient)?),
            "cocycle" => {
                let (h, m, inv) = self.pair(v)?;
                Payload::Cocycle(TwoCocycle::new(h, m, inv)?)
            }
            "dual_cocycle" => {
                let (h, m, inv) = self.pair(v)?;
                Payload::DualCocycle(DualCocycle::new(h, m, inv)?)
            }
            "cqt" => {
                let (h, m, inv) = self.pair(v)?;
                Payload::Cqt(CqtStructure::new(h, m, inv)?)
            }
            "qt" => {
                let (h, m, inv) = self.pair(v)?;
                Payload::Qt(QtStructure::new(h, m, inv)?)
            }
            "one_cocycle" => {
                let h = self.host(v)?;
                let f = h.field();
                let mu = sparse_of(f, key(v, "entries")?, &[h.dim()], "entries")?;
                Payload::OneCocycle(LazyOneCocycle::new(h, mu.entries().to_vec())?)
            }
            "yd_module" => Payload::Module(self.module(v)?),
            "yd_algebra" => {
                let m = self.module(v)?;
                let (f, d) = (m.host().field(), m.dim());
                let mult = sparse_of(f, key(v, "mult")?, &[d, d, d], "mult")?;
                let unit = dense_of(f, key(v, "unit")?, d, "unit")?;
                Payload::Algebra(YdAlgebra::new(m, &mult, unit)?)
            }
            other => return Err(perr(format!("unknown kind {other:?}"))),
        })
    }

    fn hopf(&self, v: &Value, lenient: bool) -> Result<HopfAlgebra> {
        let f = field_of(v)?;
        let n = usize_of(key(v, "dim")?, "dim")?;
        if n > crate::linalg::max_dim() {
            return Err(Error::TooLarge { dim: n, max: crate::linalg::max_dim() });
        }
        let names = match v.get("basis") {
            None => (0..n).map(|i| format!("e{i}")).collect(),
            Some(b) => array(b, "basis")?
                .iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| perr("basis: expected strings")))
                .collect::<Result<Vec<_>>>()?,
        };
        let mult = sparse_of(f, key(v, "mult")?, &[n, n, n], "mult")?;
        let comult = sparse_of(f, key(v, "comult")?, &[n, n, n], "comult")?;
        let unit = dense_of(f, key(v, "unit")?, n, "unit")?;
        let counit = dense_of(f, key(v, "counit")?, n, "counit")?;
        let rows = array(key(v, "antipode")?, "antipode")?;
        if rows.len() != n {
            return Err(Error::Shape(format!("antipode: expected {n} rows")));
        }
        let images = rows
            .iter()
            .map(|r| dense_of(f, r, n, "antipode"))
            .collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_cols(f, n, &images);
        if lenient {
            HopfAlgebra::new_for_validation(f, names, mult, unit, comult, counit, antipode)
        } else {
            HopfAlgebra::new(f, names, mult, unit, comult, counit, antipode, None)
        }
    }

    fn host(&self, v: &Value) -> Result<Arc<HopfAlgebra>> {
        let f = field_of(v)?;
        let h = match key(v, "host")? {
            Value::String(name) => self.host_by_name(name, f)?,
            obj @ Value::Object(_) => Arc::new(self.hopf(obj, false)?),
            other => return Err(perr(format!("host: expected a name or an object, found {other}"))),
        };
        if v.get("field").is_some() && h.field() != f {
            return Err(Error::Field(format!("document field {f} differs from host field {}", h.field())));
        }
        Ok(h)
    }

    fn host_by_name(&self, name: &str, f: FieldSpec) -> Result<Arc<HopfAlgebra>> {
        match name.to_ascii_lowercase().as_str() {
            "h4" => return catalog::sweedler_h4(f).map(Arc::new),
            "kc2" => return catalog::group_algebra_c2(f).map(Arc::new),
            _ => {}
        }
        let path = match &self.base {
            Some(b) => b.join(name),
            None => PathBuf::from(name),
        };
        match load(&path)? {
            Payload::Hopf(h) => Ok(Arc::new(h)),
            other => Err(perr(format!("host {name:?} is a {}, not a Hopf algebra", other.kind()))),
        }
    }

    fn pair(&self, v: &Value) -> Result<(Arc<HopfAlgebra>, Matrix, Option<Matrix>)> {
        let h = self.host(v)?;
        let (f, n) = (h.field(), h.dim());
        let m = sparse_of(f, key(v, "entries")?, &[n, n], "entries")?.to_matrix(1);
        let inv = match v.get("inverse") {
            None => None,
            Some(x) => Some(sparse_of(f, x, &[n, n], "inverse")?.to_matrix(1)),
        };
        Ok((h, m, inv))
    }

    fn module(&self, v: &Value) -> Result<YdModule> {
        let h = self.host(v)?;
        let (f, n) = (h.field(), h.dim());
        let d = usize_of(key(v, "dim")?, "dim")?;
        if d > crate::linalg::max_dim() {
            return Err(Error::TooLarge { dim: d, max: crate::linalg::max_dim() });
        }
        let action = sparse_of(f, key(v, "action")?, &[n, d, d], "action")?;
        let coaction = sparse_of(f, key(v, "coaction")?, &[d, d, n], "coaction")?;
        YdModule::from_tensors(h, &action, &coaction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_round_trips() {
        let q = FieldSpec::Rationals;
        for info in catalog::ENTRIES {
            let e = catalog::entry(info.name, q, &q.int(1)).unwrap();
            let text = to_string(&e.payload);
            let back = parse(&text, None).unwrap();
            assert_eq!(to_string(&back), text, "{}", info.name);
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse("{\n  \"dim\": 2,\n  oops\n}", None).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn antipode_rows_are_images() {
        let q = FieldSpec::Rationals;
        let v = to_json(&Payload::Hopf(catalog::sweedler_h4(q).unwrap()));
        assert_eq!(v["antipode"][2], json!(["0", "0", "0", "1"]));
        assert_eq!(v["antipode"][3], json!(["0", "0", "-1", "0"]));
    }
}
