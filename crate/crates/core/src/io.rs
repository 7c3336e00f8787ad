//! JSON file formats for groups, algebras, actions and surfaces.
//!
//! Scalars are `[re, im]` pairs and all indices are 0-based. Writers emit
//! exactly what the readers accept, so files round-trip.
//!
//! ```
//! use hqft::io;
//!
//! let g = io::parse_group(r#"{"orders": [4]}"#).unwrap();
//! let s = io::parse_surface(
//!     r#"{"triangles": [{"label": [1]}, {}],
//!         "gluings": [[[0,2],[1,0]], [[0,0],[1,1]], [[0,1],[1,2]]]}"#,
//!     &g,
//! )
//! .unwrap();
//! assert_eq!(s.euler_characteristic(), 0);
//! assert_eq!(io::parse_surface(&io::surface_to_json(&s), &g).unwrap(), s);
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::frobenius::{Algebra, AlgebraError, GAction, DEFAULT_TOLERANCE};
use crate::group::{FiniteAbelianGroup, GroupError};
use crate::linalg::{Scalar, ZERO};
use crate::surface::{EdgeMatch, GluingSpec, LabeledSurface, Slot, SurfaceError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad entry: {0}")]
    BadEntry(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Reads a file and returns its text with the hex SHA-256 of its bytes.
pub fn read_with_digest(path: &Path) -> Result<(String, String), IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    let digest = digest(text.as_bytes());
    Ok((text, digest))
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    orders: Vec<i64>,
}

pub fn parse_group(text: &str) -> Result<FiniteAbelianGroup, IoError> {
    let f: GroupFile = serde_json::from_str(text)?;
    Ok(FiniteAbelianGroup::new(&f.orders)?)
}

pub fn group_to_json(g: &FiniteAbelianGroup) -> String {
    let orders = g.orders().iter().map(|&n| n as i64).collect();
    serde_json::to_string(&GroupFile { orders }).expect("plain data")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    unit: Vec<[f64; 2]>,
    structure: Vec<(usize, usize, usize, f64, f64)>,
}

fn scalar(z: [f64; 2]) -> Scalar {
    Scalar::new(z[0], z[1])
}

fn pair(z: Scalar) -> [f64; 2] {
    [z.re, z.im]
}

/// Parses an algebra; `tol` defaults to [`DEFAULT_TOLERANCE`].
pub fn parse_algebra(text: &str, tol: Option<f64>) -> Result<Algebra, IoError> {
    let f: AlgebraFile = serde_json::from_str(text)?;
    let d = f.dim;
    let mut c = vec![ZERO; d * d * d];
    let mut seen = vec![false; d * d * d];
    for &(i, j, k, re, im) in &f.structure {
        if i >= d || j >= d || k >= d {
            return Err(IoError::BadEntry(format!("structure index ({i},{j},{k}) out of range for dim {d}")));
        }
        let at = (i * d + j) * d + k;
        if std::mem::replace(&mut seen[at], true) {
            return Err(IoError::BadEntry(format!("structure entry ({i},{j},{k}) given twice")));
        }
        c[at] = Scalar::new(re, im);
    }
    let unit = f.unit.into_iter().map(scalar).collect();
    Ok(Algebra::new(d, c, unit, tol.unwrap_or(DEFAULT_TOLERANCE))?)
}

/// Sparse form: exact zeros are omitted.
pub fn algebra_to_json(alg: &Algebra) -> String {
    let d = alg.dim();
    let mut structure = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let z = alg.c(i, j, k);
                if z != ZERO {
                    structure.push((i, j, k, z.re, z.im));
                }
            }
        }
    }
    let unit = alg.unit().iter().copied().map(pair).collect();
    serde_json::to_string(&AlgebraFile { dim: d, unit, structure }).expect("plain data")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionFile {
    images: Vec<Vec<[f64; 2]>>,
}

pub fn parse_action(text: &str, group: &FiniteAbelianGroup, alg: &Algebra) -> Result<GAction, IoError> {
    let f: ActionFile = serde_json::from_str(text)?;
    let images = f.images.into_iter().map(|v| v.into_iter().map(scalar).collect()).collect();
    Ok(GAction::new(group.clone(), images, alg)?)
}

pub fn action_to_json(action: &GAction) -> String {
    let images = action.images().iter().map(|v| v.iter().copied().map(pair).collect()).collect();
    serde_json::to_string(&ActionFile { images }).expect("plain data")
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct TriangleEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GluingEntry {
    Plain([usize; 2], [usize; 2]),
    Marked([usize; 2], [usize; 2], EdgeMatch),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceFile {
    triangles: Vec<TriangleEntry>,
    gluings: Vec<GluingEntry>,
}

/// Parses a surface whose labels live in `group`. A gluing may carry a third
/// element `"reverse"` (the default, head-to-tail) or `"preserve"`, which is
/// always rejected as non-orientable.
pub fn parse_surface(text: &str, group: &FiniteAbelianGroup) -> Result<LabeledSurface, IoError> {
    let f: SurfaceFile = serde_json::from_str(text)?;
    let labels = f
        .triangles
        .iter()
        .map(|t| t.label.as_ref().map(|r| group.element(r)).transpose())
        .collect::<Result<Vec<_>, _>>()?;
    let gluings: Vec<GluingSpec> = f
        .gluings
        .iter()
        .map(|g| {
            let (a, b, matching) = match *g {
                GluingEntry::Plain(a, b) => (a, b, EdgeMatch::Reverse),
                GluingEntry::Marked(a, b, m) => (a, b, m),
            };
            GluingSpec { a: Slot::new(a[0], a[1]), b: Slot::new(b[0], b[1]), matching }
        })
        .collect();
    Ok(LabeledSurface::new(group.clone(), labels, gluings)?)
}

/// Identity labels are omitted.
pub fn surface_to_json(s: &LabeledSurface) -> String {
    let triangles = s
        .labels()
        .iter()
        .map(|g| TriangleEntry {
            label: g.residues().iter().any(|&r| r != 0).then(|| g.residues().iter().map(|&r| r as i64).collect()),
        })
        .collect();
    let gluings = s
        .gluings()
        .iter()
        .map(|g| GluingEntry::Plain([g.a.triangle, g.a.edge], [g.b.triangle, g.b.edge]))
        .collect();
    serde_json::to_string(&SurfaceFile { triangles, gluings }).expect("plain data")
}
