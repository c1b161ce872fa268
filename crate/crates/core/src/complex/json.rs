//! JSON interchange for complexes and chain maps. All integers are written
//! as decimal strings.

use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::cell::Cell;
use crate::complex::chain::{ChainComplex, ChainMap, ComplexInfo, Construction};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::Int;
use crate::weyl::{GenSet, WeylGroup, WeylType};

pub const COMPLEX_SCHEMA: &str = "salvetti-complex/v1";
pub const CHAIN_MAP_SCHEMA: &str = "salvetti-chain-map/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub schema: String,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub required: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_convention: Option<String>,
    /// Reduced word of each group element, by index.
    #[serde(default)]
    pub elements: Vec<String>,
    pub degrees: Vec<DegreeFile>,
    pub boundaries: Vec<MatrixFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeFile {
    pub degree: String,
    pub cells: Vec<CellFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellFile {
    pub element: String,
    /// Bitmask, bit `i` for `s_i`.
    pub gamma: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub degree: String,
    pub rows: String,
    pub cols: String,
    /// `[row, col, value]` triples, column-major.
    pub entries: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainMapFile {
    pub schema: String,
    pub name: String,
    pub shift: String,
    pub source: ComplexFile,
    pub target: ComplexFile,
    /// Indexed by source degree.
    pub matrices: Vec<MatrixFile>,
}

fn labels(set: GenSet) -> Vec<String> {
    set.iter().map(|l| format!("s{l}")).collect()
}

fn parse_labels(list: &[String]) -> Result<GenSet> {
    list.join(",").parse().map_err(|_| Error::Schema(format!("bad generator list {list:?}")))
}

fn num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Schema(format!("{what}: `{s}` is not an integer")))
}

fn matrix_to_file(degree: usize, m: &SparseMatrix<Int>) -> MatrixFile {
    MatrixFile {
        degree: degree.to_string(),
        rows: m.rows().to_string(),
        cols: m.cols().to_string(),
        entries: m.triplets().map(|(r, c, v)| [r.to_string(), c.to_string(), v.to_string()]).collect(),
    }
}

fn matrix_from_file(f: &MatrixFile) -> Result<SparseMatrix<Int>> {
    let rows: usize = num(&f.rows, "rows")?;
    let cols: usize = num(&f.cols, "cols")?;
    let mut triplets = Vec::with_capacity(f.entries.len());
    for [r, c, v] in &f.entries {
        let (r, c): (usize, usize) = (num(r, "row")?, num(c, "col")?);
        if r >= rows || c >= cols {
            return Err(Error::Schema(format!("entry ({r}, {c}) outside {rows}x{cols}")));
        }
        triplets.push((r, c, num::<Int>(v, "value")?));
    }
    Ok(SparseMatrix::from_triplets(rows, cols, triplets))
}

/// Serialises a complex; `group` supplies the element words.
pub fn complex_to_file(c: &ChainComplex<Int>, group: Option<&WeylGroup>) -> ComplexFile {
    let info = c.info;
    ComplexFile {
        schema: COMPLEX_SCHEMA.into(),
        kind: info.map(|i| i.kind.to_string()),
        construction: info.map(|i| i.construction.name().to_string()),
        generators: info.map(|i| labels(i.generators)).unwrap_or_default(),
        required: info.map(|i| labels(i.required)).unwrap_or_default(),
        mu_convention: info.map(|i| i.mu.name().to_string()),
        elements: group.map(|g| (0..g.order()).map(|w| g.word_string(w)).collect()).unwrap_or_default(),
        degrees: (0..c.num_degrees())
            .map(|k| DegreeFile {
                degree: k.to_string(),
                cells: c
                    .cells(k)
                    .iter()
                    .map(|cell| CellFile { element: cell.element.to_string(), gamma: cell.gamma.bits().to_string() })
                    .collect(),
            })
            .collect(),
        boundaries: (0..c.num_degrees()).map(|k| matrix_to_file(k, &c.boundary(k))).collect(),
    }
}

pub fn complex_from_file(f: &ComplexFile) -> Result<ChainComplex<Int>> {
    if f.schema != COMPLEX_SCHEMA {
        return Err(Error::Schema(format!("expected schema {COMPLEX_SCHEMA}, found {}", f.schema)));
    }
    let info = match (&f.kind, &f.construction) {
        (Some(kind), Some(construction)) => Some(ComplexInfo {
            kind: WeylType::from_str(kind)?,
            construction: match construction.as_str() {
                "salvetti" => Construction::Salvetti,
                "toric" => Construction::Toric,
                other => return Err(Error::Schema(format!("unknown construction `{other}`"))),
            },
            generators: parse_labels(&f.generators)?,
            required: parse_labels(&f.required)?,
            mu: f.mu_convention.as_deref().unwrap_or("index").parse()?,
        }),
        _ => None,
    };
    let mut basis = Vec::with_capacity(f.degrees.len());
    for (k, d) in f.degrees.iter().enumerate() {
        if num::<usize>(&d.degree, "degree")? != k {
            return Err(Error::Schema(format!("degrees must be listed in order; found {} at position {k}", d.degree)));
        }
        let cells = d
            .cells
            .iter()
            .map(|c| Ok(Cell::new(num(&c.element, "element")?, GenSet(num(&c.gamma, "gamma")?))))
            .collect::<Result<Vec<_>>>()?;
        basis.push(cells);
    }
    let mut boundary = vec![None; basis.len()];
    for m in &f.boundaries {
        let k: usize = num(&m.degree, "degree")?;
        let slot = boundary.get_mut(k).ok_or_else(|| Error::Schema(format!("boundary for missing degree {k}")))?;
        *slot = Some(matrix_from_file(m)?);
    }
    let boundary = boundary
        .into_iter()
        .enumerate()
        .map(|(k, m)| m.unwrap_or_else(|| SparseMatrix::zeros(if k == 0 { 0 } else { basis[k - 1].len() }, basis[k].len())))
        .collect();
    ChainComplex::new(info, basis, boundary)
}

pub fn chain_map_to_file(f: &ChainMap<Int>, group: Option<&WeylGroup>) -> ChainMapFile {
    ChainMapFile {
        schema: CHAIN_MAP_SCHEMA.into(),
        name: f.name.clone(),
        shift: f.shift.to_string(),
        source: complex_to_file(&f.source, group),
        target: complex_to_file(&f.target, group),
        matrices: f.matrices().iter().enumerate().map(|(d, m)| matrix_to_file(d, m)).collect(),
    }
}

pub fn chain_map_from_file(f: &ChainMapFile) -> Result<ChainMap<Int>> {
    if f.schema != CHAIN_MAP_SCHEMA {
        return Err(Error::Schema(format!("expected schema {CHAIN_MAP_SCHEMA}, found {}", f.schema)));
    }
    let source = Arc::new(complex_from_file(&f.source)?);
    let target = Arc::new(complex_from_file(&f.target)?);
    let matrices = f.matrices.iter().map(matrix_from_file).collect::<Result<Vec<_>>>()?;
    ChainMap::new(f.name.clone(), source, target, num(&f.shift, "shift")?, matrices)
}

pub fn complex_to_json(c: &ChainComplex<Int>, group: Option<&WeylGroup>) -> String {
    serde_json::to_string_pretty(&complex_to_file(c, group)).expect("complex serialises")
}

pub fn complex_from_json(s: &str) -> Result<ChainComplex<Int>> {
    complex_from_file(&serde_json::from_str(s)?)
}

pub fn chain_map_to_json(f: &ChainMap<Int>, group: Option<&WeylGroup>) -> String {
    serde_json::to_string_pretty(&chain_map_to_file(f, group)).expect("chain map serialises")
}

pub fn chain_map_from_json(s: &str) -> Result<ChainMap<Int>> {
    chain_map_from_file(&serde_json::from_str(s)?)
}

