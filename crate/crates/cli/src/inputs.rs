//! Reading arguments: inline JSON or files, fixture spaces and categories.

use std::fs;
use std::path::Path;

use braidinj::binj::BraidedInjection;
use braidinj::bspace::{
    materialize, materialize_monoid, ConstantModel, Diagram, FreeOneModel, NonFlatModel, PhiNerveModel, SMap, TBSpace, TBSpaceMonoid, TSSet,
    XBulletModel,
};
use braidinj::fincat::{FinCat, TableCat};
use braidinj::symspec::BrokenSigmaModel;
use braidinj::{Error, Result};
use serde_json::Value;

/// Inline JSON (starting with `{` or `[`) or a path to a JSON file.
pub fn json_arg(s: &str) -> Result<Value> {
    let t = s.trim_start();
    let (text, origin) = if t.starts_with('{') || t.starts_with('[') {
        (s.to_string(), "argument".to_string())
    } else {
        (fs::read_to_string(s).map_err(|e| Error::Parse(format!("cannot read {s}: {e}")))?, s.to_string())
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON in {origin}: {e}")))
}

/// "1,3" or "1 3".
pub fn usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("'{t}' is not a non-negative integer"))))
        .collect()
}

pub fn table_cat(s: &str) -> Result<TableCat> {
    TableCat::from_json(&json_arg(s)?)
}

pub fn fin_cat(s: &str) -> Result<FinCat> {
    FinCat::from_json(&json_arg(s)?)
}

pub fn binj(s: &str) -> Result<BraidedInjection> {
    BraidedInjection::from_json(&json_arg(s)?)
}

/// A JSON array of object names, e.g. `["1","0"]`.
pub fn tuple(cat: &TableCat, s: &str) -> Result<Vec<usize>> {
    let v = json_arg(s)?;
    let names = v.as_array().ok_or_else(|| Error::Parse("object tuple must be a JSON array".into()))?;
    names
        .iter()
        .map(|n| n.as_str().ok_or_else(|| Error::Parse("object names are strings".into())).and_then(|n| cat.object_index(n)))
        .collect()
}

pub fn names(cat: &TableCat, t: &[usize]) -> Vec<String> {
    t.iter().map(|&i| cat.objects[i].clone()).collect()
}

/// Every `*.json` braided category in a directory, in file-name order.
pub fn fixture_dir(dir: &str) -> Result<Vec<TableCat>> {
    let mut paths: Vec<_> = fs::read_dir(Path::new(dir))
        .map_err(|e| Error::Parse(format!("cannot read directory {dir}: {e}")))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| table_cat(&p.to_string_lossy())).collect()
}

pub const SPACE_FIXTURES: &str = "terminal, s0, free-one, xbullet-s0, non-flat, nphi (with --cat), nphi-z2, nphi-terminal, broken-sigma";

/// A built-in 𝔅-space, with its monoid structure when it has one.
pub fn space_fixture(name: &str, n_max: usize, dim: usize, cat: Option<&str>) -> Result<(TBSpace, Option<TBSpaceMonoid>)> {
    let monoid = |m: TBSpaceMonoid| (m.space.clone(), Some(m));
    Ok(match name {
        "terminal" => monoid(materialize_monoid(&ConstantModel::terminal(n_max, dim))?),
        "s0" => (materialize(&ConstantModel { x: TSSet::discrete(dim, &["a", "b"]), n_max })?.0, None),
        "free-one" => (materialize(&FreeOneModel { n_max, dim })?.0, None),
        "xbullet-s0" => monoid(materialize_monoid(&XBulletModel::s0(n_max, dim))?),
        "non-flat" => (materialize(&NonFlatModel { n_max, dim })?.0, None),
        "nphi-z2" => monoid(materialize_monoid(&PhiNerveModel::new(TableCat::z2(), n_max, dim))?),
        "nphi-terminal" => monoid(materialize_monoid(&PhiNerveModel::new(TableCat::terminal(), n_max, dim))?),
        "nphi" => {
            let c = cat.ok_or_else(|| Error::Parse("fixture 'nphi' needs --cat".into()))?;
            monoid(materialize_monoid(&PhiNerveModel::new(table_cat(c)?, n_max, dim))?)
        }
        "broken-sigma" => (materialize(&BrokenSigmaModel)?.0, None),
        _ => return Err(Error::Parse(format!("unknown space fixture '{name}' ({SPACE_FIXTURES})"))),
    })
}

/// `--space FILE` wins over `--fixture`.
pub fn space(file: Option<&str>, fixture: &str, n_max: usize, dim: usize, cat: Option<&str>) -> Result<(TBSpace, Option<TBSpaceMonoid>)> {
    match file {
        Some(f) => Ok((TBSpace::from_json(&json_arg(f)?)?, None)),
        None => space_fixture(fixture, n_max, dim, cat),
    }
}

pub fn sset_fixture(name: &str, dim: usize) -> Result<TSSet> {
    if let Some(n) = name.strip_prefix("sphere-") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad sphere '{name}'")))?;
        return Ok(TSSet::boundary_simplex(n + 1, dim));
    }
    Ok(match name {
        "point" => TSSet::point(dim),
        "s0" => TSSet::discrete(dim, &["a", "b"]),
        "circle" => TSSet::circle(dim),
        "nerve-z2" => braidinj::bspace::nerve(&FinCat::cyclic_group(2), dim),
        "nerve-z3" => braidinj::bspace::nerve(&FinCat::cyclic_group(3), dim),
        _ => return Err(Error::Parse(format!("unknown simplicial set '{name}' (point, s0, circle, sphere-N, nerve-z2, nerve-z3)"))),
    })
}

/// `{"shape": category, "values": [simplicial sets], "maps": [[[..]]]}`
/// with one map per morphism in declaration order.
pub fn diagram(s: &str) -> Result<Diagram> {
    let v = json_arg(s)?;
    let shape = FinCat::from_json(v.get("shape").ok_or_else(|| Error::Parse("diagram needs 'shape'".into()))?)?;
    let values = v
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("diagram needs 'values'".into()))?
        .iter()
        .map(TSSet::from_json)
        .collect::<Result<Vec<_>>>()?;
    let maps = v
        .get("maps")
        .cloned()
        .ok_or_else(|| Error::Parse("diagram needs 'maps'".into()))
        .and_then(|m| serde_json::from_value::<Vec<Vec<Vec<usize>>>>(m).map_err(|e| Error::Parse(format!("maps: {e}"))))?
        .into_iter()
        .map(|dims| SMap { dims })
        .collect();
    Diagram::new(shape, values, maps)
}

pub fn diagram_fixture(name: &str, dim: usize) -> Result<Diagram> {
    let constant = |c: FinCat| Diagram::constant(c, &TSSet::point(dim));
    Ok(match name {
        "pushout" => {
            let shape = FinCat::pushout_shape();
            let s0 = TSSet::discrete(dim, &["a", "b"]);
            let pt = TSSet::point(dim);
            let values = vec![s0.clone(), pt.clone(), pt];
            let to_pt = SMap { dims: (0..=dim).map(|k| vec![0; s0.count(k)]).collect() };
            let maps = (0..shape.morphisms.len())
                .map(|f| if shape.source(f) == shape.target(f) { SMap::identity(&values[shape.source(f)]) } else { to_pt.clone() })
                .collect();
            Diagram::new(shape, values, maps)?
        }
        "point-z2" => constant(FinCat::cyclic_group(2)),
        "point-z3" => constant(FinCat::cyclic_group(3)),
        "point-span" => constant(FinCat::pushout_shape()),
        _ => return Err(Error::Parse(format!("unknown diagram '{name}' (pushout, point-z2, point-z3, point-span)"))),
    })
}
