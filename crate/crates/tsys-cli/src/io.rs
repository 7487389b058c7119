//! JSON file formats and value serialization.
//!
//! Rationals travel as strings `"p/q"` with `/q` omitted when the
//! denominator is one. Laurent polynomials become arrays of
//! `{"coeff": "...", "exps": [[i, j, e], ...]}` in canonical term order.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use tsys_core::lattice::{InitialSurface, Parity};
use tsys_core::pentagram::{Mat3, TwistedPolygon};
use tsys_core::report::{CheckStatus, Report};
use tsys_core::ring::{rat_string, Int, LaurentPoly, Rat, RingValue};

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let n: Int = num.parse().map_err(|_| format!("bad integer {:?}", num))?;
    let d: Int = match den {
        Some(b) => b.parse().map_err(|_| format!("bad integer {:?}", b))?,
        None => Int::from(1),
    };
    if d == Int::from(0) {
        return Err(format!("zero denominator in {:?}", s));
    }
    Ok(Rat::new(n, d))
}

pub fn poly_to_json(p: &LaurentPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: Vec<serde_json::Value> =
                m.exps().iter().map(|((i, j), e)| serde_json::json!([i, j, e])).collect();
            serde_json::json!({"coeff": c.to_string(), "exps": exps})
        })
        .collect();
    serde_json::Value::Array(terms)
}

pub fn value_to_json(v: &RingValue) -> serde_json::Value {
    match v {
        RingValue::Rat(r) => serde_json::Value::String(rat_string(r)),
        RingValue::Poly(p) => poly_to_json(p),
    }
}

pub fn report_to_json(r: &Report) -> serde_json::Value {
    let checks: Vec<serde_json::Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut m = serde_json::Map::new();
            m.insert("claim".into(), c.claim.clone().into());
            let status = if c.status == CheckStatus::Pass { "pass" } else { "fail" };
            m.insert("status".into(), status.into());
            if let Some(cx) = &c.counterexample {
                m.insert("counterexample".into(), cx.clone().into());
            }
            serde_json::Value::Object(m)
        })
        .collect();
    serde_json::json!({"passed": r.all_passed(), "checks": checks})
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

/// `{"parity": "odd", "entries": [{"i", "j", "k", "value"}, ...]}` with
/// `"value": "sym"` denoting the symbol at that cell, or the flat form
/// `{"parity": "odd", "value": "sym", "half": 4}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub parity: Option<String>,
    pub entries: Option<Vec<SurfaceEntry>>,
    pub value: Option<String>,
    pub half: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceEntry {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub value: String,
}

pub struct LoadedSurface {
    pub surface: InitialSurface,
    pub parity: Option<Parity>,
}

fn parse_parity(s: Option<&str>) -> Result<Option<Parity>, String> {
    match s {
        None => Ok(None),
        Some("odd") => Ok(Some(Parity::Odd)),
        Some("even") => Ok(Some(Parity::Even)),
        Some(other) => Err(format!("parity must be \"odd\" or \"even\", got {:?}", other)),
    }
}

pub fn load_surface(path: &Path) -> Result<LoadedSurface, String> {
    let f: SurfaceFile = read_json(path)?;
    let parity = parse_parity(f.parity.as_deref())?;
    match (f.entries, f.value.as_deref()) {
        (Some(entries), None) => {
            if entries.is_empty() {
                return Err("surface entries must be nonempty".into());
            }
            let mut s = InitialSurface::new();
            for e in &entries {
                let v = if e.value == "sym" {
                    RingValue::var((e.i, e.j))
                } else {
                    RingValue::Rat(parse_rat(&e.value)?)
                };
                s.insert(e.i, e.j, e.k, v);
            }
            Ok(LoadedSurface { surface: s, parity })
        }
        (None, Some("sym")) => {
            let h = f.half.unwrap_or(4);
            if h < 1 {
                return Err("half must be at least 1".into());
            }
            let p = parity.unwrap_or(Parity::Odd);
            Ok(LoadedSurface {
                surface: InitialSurface::flat_symbolic(p, (-h, h), (-h, h)),
                parity: Some(p),
            })
        }
        _ => Err("surface file needs either \"entries\" or \"value\": \"sym\"".into()),
    }
}

/// `{"d": 2, "ell": 3, "grid": [["1/1", ...], ...]}`; `ell` absent means a
/// single wall with the grid width free.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeFile {
    pub d: i64,
    pub ell: Option<i64>,
    pub grid: Vec<Vec<String>>,
}

pub fn load_grid(path: &Path) -> Result<(i64, Option<i64>, Vec<Vec<Rat>>), String> {
    let f: TubeFile = read_json(path)?;
    if f.d < 1 {
        return Err("d must be at least 1".into());
    }
    if f.grid.len() as i64 != f.d {
        return Err(format!("grid must have d = {} rows", f.d));
    }
    let width = f.grid[0].len();
    if width == 0 || f.grid.iter().any(|r| r.len() != width) {
        return Err("grid rows must be nonempty and of equal length".into());
    }
    if let Some(l) = f.ell {
        if l < 1 {
            return Err("ell must be at least 1".into());
        }
        if width as i64 != l {
            return Err(format!("grid rows must have ell = {} columns", l));
        }
    }
    let mut rows = Vec::with_capacity(f.grid.len());
    for r in &f.grid {
        let mut row = Vec::with_capacity(width);
        for s in r {
            row.push(parse_rat(s)?);
        }
        rows.push(row);
    }
    Ok((f.d, f.ell, rows))
}

/// `{"n": 5, "vertices": [["1","0","1"], ...], "monodromy": [[...], ...]}`;
/// the monodromy defaults to the identity (a closed polygon).
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub n: usize,
    pub vertices: Vec<[String; 3]>,
    pub monodromy: Option<Vec<[String; 3]>>,
}

pub fn load_polygon(path: &Path) -> Result<TwistedPolygon, String> {
    let f: PolygonFile = read_json(path)?;
    if f.vertices.len() != f.n {
        return Err(format!("expected n = {} vertices, got {}", f.n, f.vertices.len()));
    }
    let mut vertices = Vec::with_capacity(f.n);
    for v in &f.vertices {
        vertices.push([parse_rat(&v[0])?, parse_rat(&v[1])?, parse_rat(&v[2])?]);
    }
    let monodromy = match &f.monodromy {
        None => Mat3::identity(),
        Some(rows) => {
            if rows.len() != 3 {
                return Err("monodromy must have 3 rows".into());
            }
            let mut m = Mat3::identity();
            for (r, row) in rows.iter().enumerate() {
                for c in 0..3 {
                    m.0[r][c] = parse_rat(&row[c])?;
                }
            }
            m
        }
    };
    TwistedPolygon::new(vertices, monodromy).map_err(|e| format!("bad polygon: {}", e))
}

/// `{"kappa": 3, "p": ["...", ...], "q": ["...", ...]}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PqFile {
    pub kappa: i64,
    pub p: Vec<String>,
    pub q: Vec<String>,
}

pub fn load_pq(path: &Path) -> Result<(i64, Vec<Rat>, Vec<Rat>), String> {
    let f: PqFile = read_json(path)?;
    if f.kappa < 3 {
        return Err("kappa must be at least 3".into());
    }
    if f.p.is_empty() || f.p.len() != f.q.len() {
        return Err("p and q must be nonempty lists of equal length".into());
    }
    let ps = f.p.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?;
    let qs = f.q.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?;
    Ok((f.kappa, ps, qs))
}

/// `{"kappa": 3, "n": 5, "lambda": "2", "mu": "3", "fundamental":
/// [{"i", "j", "value"}, ...]}` with one entry per translation class.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnfoldFile {
    pub kappa: i64,
    pub n: i64,
    pub lambda: String,
    pub mu: String,
    pub fundamental: Vec<FundamentalEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FundamentalEntry {
    pub i: i64,
    pub j: i64,
    pub value: String,
}

/// Matrix input: either a bare array of rows or `{"matrix": [...]}`, every
/// entry a rational string.
pub fn load_matrix(path: &Path) -> Result<Vec<Vec<Rat>>, String> {
    let v: serde_json::Value = read_json(path)?;
    let rows = match &v {
        serde_json::Value::Array(rows) => rows,
        serde_json::Value::Object(m) => match m.get("matrix") {
            Some(serde_json::Value::Array(rows)) => rows,
            _ => return Err("matrix file needs an array of rows or {\"matrix\": [...]}".into()),
        },
        _ => return Err("matrix file needs an array of rows or {\"matrix\": [...]}".into()),
    };
    let n = rows.len();
    if n == 0 {
        return Err("matrix must be nonempty".into());
    }
    let mut out = Vec::with_capacity(n);
    for row in rows {
        let cells = row.as_array().ok_or("matrix rows must be arrays")?;
        if cells.len() != n {
            return Err("matrix must be square".into());
        }
        let mut r = Vec::with_capacity(n);
        for c in cells {
            let s = c.as_str().ok_or("matrix entries must be rational strings")?;
            r.push(parse_rat(s)?);
        }
        out.push(r);
    }
    Ok(out)
}

pub fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

pub fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {}", p.display(), e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}
