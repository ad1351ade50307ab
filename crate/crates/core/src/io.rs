//! Canonical JSON text formats.
//!
//! Indices are 1-based in files, entries are sparse `[i, j, (k,) "p/q"]`
//! lists in lexicographic index order, and zero entries are never written.
//! Readers accept rationals as strings or JSON integers and report the
//! field path of the first problem found.

use std::fs;
use std::path::Path;

use num_traits::Zero;
pub use serde_json::Value;
use serde_json::{json, Map};

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::form::BilinearForm;
use crate::linear::{LinearMap, MatrixFamily};
use crate::representations::{LDendModule, PreLieModule};
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor2, Tensor3};

/// Compact JSON plus a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    parse_json(&text, &path.display().to_string())
}

/// Parse JSON text; `source` names it in error messages.
pub fn parse_json(text: &str, source: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::format(source, format!("invalid JSON: {e}")))
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, to_canonical_string(v))?;
    Ok(())
}

fn s(x: &Scalar) -> Value {
    Value::String(scalar::format(x))
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::format(path_or_root(path), "expected an object"))
}

fn path_or_root(path: &str) -> String {
    if path.is_empty() {
        "<root>".to_string()
    } else {
        path.to_string()
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn field<'a>(o: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| Error::format(join(path, key), "missing field"))
}

fn positive(v: &Value, path: &str) -> Result<usize> {
    match v.as_u64() {
        Some(n) if n > 0 => usize::try_from(n).map_err(|_| Error::format(path, "too large")),
        _ => Err(Error::format(path, "expected a positive integer")),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::format(path, "expected an array"))
}

fn rational(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::String(t) => scalar::parse(t).map_err(|e| match e {
            Error::Format { message, .. } => Error::format(path, message),
            other => other,
        }),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(scalar::int(i)),
            None => Err(Error::format(
                path,
                "numbers must be integers; write fractions as \"p/q\"",
            )),
        },
        _ => Err(Error::format(path, "expected a rational string \"p/q\"")),
    }
}

/// Parse sparse entries `[i1, .., ir, value]` with `1 ≤ i_t ≤ bounds[t]`,
/// returning 0-based indices. Duplicate index tuples are rejected.
fn sparse_entries(v: &Value, path: &str, bounds: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let mut out: Vec<(Vec<usize>, Scalar)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (n, item) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{}]", n + 1);
        let parts = array(item, &p)?;
        if parts.len() != bounds.len() + 1 {
            return Err(Error::format(
                &p,
                format!("expected {} indices followed by a value", bounds.len()),
            ));
        }
        let mut idx = Vec::with_capacity(bounds.len());
        for (t, &bound) in bounds.iter().enumerate() {
            let ip = format!("{p}[{}]", t + 1);
            let i = positive(&parts[t], &ip)?;
            if i > bound {
                return Err(Error::format(
                    ip,
                    format!("index {i} out of range 1..={bound}"),
                ));
            }
            idx.push(i - 1);
        }
        if !seen.insert(idx.clone()) {
            return Err(Error::format(&p, "duplicate entry"));
        }
        let val = rational(&parts[bounds.len()], &format!("{p}[{}]", bounds.len() + 1))?;
        out.push((idx, val));
    }
    Ok(out)
}

pub fn table_to_json(t: &StructureConstants) -> Value {
    Value::Array(
        t.nonzero()
            .map(|(i, j, k, v)| json!([i + 1, j + 1, k + 1, s(v)]))
            .collect(),
    )
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let ops: Map<String, Value> = alg
        .ops()
        .map(|(op, t)| (op.name().to_string(), table_to_json(t)))
        .collect();
    let mut o = Map::new();
    o.insert("dim".into(), json!(alg.dim()));
    if let Some(tag) = alg.class_tag() {
        o.insert("class".into(), json!(tag));
    }
    o.insert("ops".into(), Value::Object(ops));
    Value::Object(o)
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    algebra_at(v, "")
}

fn algebra_at(v: &Value, path: &str) -> Result<Algebra> {
    let o = obj(v, path)?;
    let dp = join(path, "dim");
    let n = positive(field(o, path, "dim")?, &dp)?;
    let op_path = join(path, "ops");
    let ops = obj(field(o, path, "ops")?, &op_path)?;
    let mut alg = Algebra::new(n);
    for (name, entries) in ops {
        let p = join(&op_path, name);
        let op: Op = name
            .parse()
            .map_err(|_| Error::format(&p, format!("unknown operation `{name}`")))?;
        let mut t = StructureConstants::zeros(n);
        for (idx, val) in sparse_entries(entries, &p, &[n, n, n])? {
            t.set(idx[0], idx[1], idx[2], val);
        }
        alg.insert(op, t)?;
    }
    if let Some(tag) = o.get("class") {
        let tag = tag
            .as_str()
            .ok_or_else(|| Error::format(join(path, "class"), "expected a string"))?;
        alg.set_class_tag(Some(tag.to_string()));
    }
    Ok(alg)
}

fn matrix_entries(m: &LinearMap) -> Value {
    Value::Array(
        m.entries()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, v)| json!([i + 1, j + 1, s(v)]))
            .collect(),
    )
}

pub fn map_to_json(m: &LinearMap) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": matrix_entries(m) })
}

pub fn map_from_json(v: &Value) -> Result<LinearMap> {
    map_at(v, "", "entries")
}

fn map_at(v: &Value, path: &str, key: &str) -> Result<LinearMap> {
    let o = obj(v, path)?;
    let rows = positive(field(o, path, "rows")?, &join(path, "rows"))?;
    let cols = positive(field(o, path, "cols")?, &join(path, "cols"))?;
    let mut m = LinearMap::zeros(rows, cols);
    for (idx, val) in sparse_entries(field(o, path, key)?, &join(path, key), &[rows, cols])? {
        m.set(idx[0], idx[1], val);
    }
    Ok(m)
}

pub fn form_to_json(b: &BilinearForm) -> Value {
    let g = b.gram();
    json!({ "rows": g.rows(), "cols": g.cols(), "gram": matrix_entries(g) })
}

pub fn form_from_json(v: &Value) -> Result<BilinearForm> {
    let g = map_at(v, "", "gram")?;
    if !g.is_square() {
        return Err(Error::format("cols", "a Gram matrix must be square"));
    }
    BilinearForm::new(g)
}

pub fn tensor2_to_json(r: &Tensor2) -> Value {
    let entries: Vec<Value> = r
        .nonzero()
        .map(|(i, j, v)| json!([i + 1, j + 1, s(v)]))
        .collect();
    json!({ "dim": r.dim(), "rank": 2, "entries": entries })
}

pub fn tensor3_to_json(t: &Tensor3) -> Value {
    let entries: Vec<Value> = t
        .nonzero()
        .map(|(i, j, k, v)| json!([i + 1, j + 1, k + 1, s(v)]))
        .collect();
    json!({ "dim": t.dim(), "rank": 3, "entries": entries })
}

fn tensor_header(v: &Value, want: u64) -> Result<(&Map<String, Value>, usize)> {
    let o = obj(v, "")?;
    let n = positive(field(o, "", "dim")?, "dim")?;
    let rank = field(o, "", "rank")?
        .as_u64()
        .ok_or_else(|| Error::format("rank", "expected 2 or 3"))?;
    if rank != want {
        return Err(Error::format(
            "rank",
            format!("expected a rank-{want} tensor, found rank {rank}"),
        ));
    }
    Ok((o, n))
}

pub fn tensor2_from_json(v: &Value) -> Result<Tensor2> {
    let (o, n) = tensor_header(v, 2)?;
    let mut r = Tensor2::zeros(n);
    for (idx, val) in sparse_entries(field(o, "", "entries")?, "entries", &[n, n])? {
        r.set(idx[0], idx[1], val);
    }
    Ok(r)
}

pub fn tensor3_from_json(v: &Value) -> Result<Tensor3> {
    let (o, n) = tensor_header(v, 3)?;
    let mut t = Tensor3::zeros(n);
    for (idx, val) in sparse_entries(field(o, "", "entries")?, "entries", &[n, n, n])? {
        t.set(idx[0], idx[1], idx[2], val);
    }
    Ok(t)
}

fn family_to_json(f: &MatrixFamily) -> Value {
    Value::Array(f.members().iter().map(map_to_json).collect())
}

fn family_at(o: &Map<String, Value>, key: &str, vdim: usize) -> Result<MatrixFamily> {
    let items = array(field(o, "", key)?, key)?;
    let mut mats = Vec::with_capacity(items.len());
    for (n, item) in items.iter().enumerate() {
        let p = format!("{key}[{}]", n + 1);
        let m = map_at(item, &p, "entries")?;
        if m.rows() != vdim || m.cols() != vdim {
            return Err(Error::format(p, format!("expected a {vdim}x{vdim} matrix")));
        }
        mats.push(m);
    }
    MatrixFamily::new(vdim, mats)
}

pub fn prelie_module_to_json(m: &PreLieModule) -> Value {
    json!({
        "base": algebra_to_json(m.base()),
        "vdim": m.vdim(),
        "l": family_to_json(m.l()),
        "r": family_to_json(m.r()),
    })
}

pub fn prelie_module_from_json(v: &Value) -> Result<PreLieModule> {
    let o = obj(v, "")?;
    let base = algebra_at(field(o, "", "base")?, "base")?;
    let vdim = positive(field(o, "", "vdim")?, "vdim")?;
    PreLieModule::new(base, family_at(o, "l", vdim)?, family_at(o, "r", vdim)?)
}

pub fn ldend_module_to_json(m: &LDendModule) -> Value {
    json!({
        "base": algebra_to_json(m.base()),
        "vdim": m.vdim(),
        "l_r": family_to_json(m.l_r()),
        "r_r": family_to_json(m.r_r()),
        "l_l": family_to_json(m.l_l()),
        "r_l": family_to_json(m.r_l()),
    })
}

pub fn ldend_module_from_json(v: &Value) -> Result<LDendModule> {
    let o = obj(v, "")?;
    let base = algebra_at(field(o, "", "base")?, "base")?;
    let vdim = positive(field(o, "", "vdim")?, "vdim")?;
    LDendModule::new(
        base,
        family_at(o, "l_r", vdim)?,
        family_at(o, "r_r", vdim)?,
        family_at(o, "l_l", vdim)?,
        family_at(o, "r_l", vdim)?,
    )
}

/// Either kind of module file, told apart by its keys.
#[derive(Clone, Debug)]
pub enum ModuleFile {
    PreLie(PreLieModule),
    LDend(LDendModule),
}

pub fn module_from_json(v: &Value) -> Result<ModuleFile> {
    let o = obj(v, "")?;
    if o.contains_key("l_r") {
        Ok(ModuleFile::LDend(ldend_module_from_json(v)?))
    } else if o.contains_key("l") {
        Ok(ModuleFile::PreLie(prelie_module_from_json(v)?))
    } else {
        Err(Error::format(
            "<root>",
            "module files need `l`/`r` or `l_r`/`r_r`/`l_l`/`r_l`",
        ))
    }
}

pub fn fixture_to_json(f: &Fixture) -> Value {
    match f {
        Fixture::Algebra(a) => algebra_to_json(a),
        Fixture::Map(m) => map_to_json(m),
        Fixture::Form(b) => form_to_json(b),
        Fixture::PreLieModule(m) => prelie_module_to_json(m),
        Fixture::LDendModule(m) => ldend_module_to_json(m),
    }
}

/// Conventional file suffix for a catalog entry.
pub fn fixture_suffix(f: &Fixture) -> &'static str {
    match f {
        Fixture::Algebra(_) => "alg.json",
        Fixture::Map(_) => "map.json",
        Fixture::Form(_) => "form.json",
        Fixture::PreLieModule(_) | Fixture::LDendModule(_) => "mod.json",
    }
}
