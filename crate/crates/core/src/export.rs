//! JSON and DOT serialization for posets and cell complexes.
//!
//! The JSON documents have a fixed shape, described by [`PosetDoc`] and
//! [`ComplexDoc`]. Unknown fields are rejected on read, and [`validate_poset`]
//! and [`validate_complex`] check index ranges, so a round trip through the
//! typed documents is the schema check.

use serde::{Deserialize, Serialize};
use std::fmt::Write;

use crate::complex::CellComplex;
use crate::poset::FacePoset;
use crate::{Error, Result};

/// Poset document. Faces are numbered globally, codim 0 first; each cover
/// pair is `[lower, upper]` (the upper face has one fewer chord class).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub dim: usize,
    pub ranks: Vec<Vec<Vec<u32>>>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceDoc {
    pub dim: usize,
    pub cell: usize,
    pub tile: usize,
    pub slot: usize,
    pub mult: usize,
    pub face: Vec<u32>,
}

/// Complex document. `cells[d]` lists the class keys of the `d`-cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ComplexDoc {
    pub top_dim: usize,
    pub cells: Vec<Vec<Vec<u32>>>,
    pub incidences: Vec<IncidenceDoc>,
}

pub fn poset_doc(p: &FacePoset) -> PosetDoc {
    let mut covers = Vec::new();
    for (k, level) in p.covers().iter().enumerate() {
        let (lo, hi) = (p.rank_offset(k + 1), p.rank_offset(k));
        covers.extend(level.iter().map(|&(a, b)| [lo + a, hi + b]));
    }
    PosetDoc { dim: p.dim(), ranks: p.ranks().to_vec(), covers }
}

pub fn complex_doc(c: &CellComplex) -> ComplexDoc {
    ComplexDoc {
        top_dim: c.top_dim,
        cells: c.cells.clone(),
        incidences: c
            .incidences
            .iter()
            .map(|i| IncidenceDoc {
                dim: i.dim,
                cell: i.cell,
                tile: i.tile,
                slot: i.slot,
                mult: i.mult,
                face: i.face.clone(),
            })
            .collect(),
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents contain only integers and lists")
}

pub fn poset_json(p: &FacePoset) -> String {
    to_json(&poset_doc(p))
}

pub fn complex_json(c: &CellComplex) -> String {
    to_json(&complex_doc(c))
}

fn schema_error(msg: impl Into<String>) -> Error {
    Error::Precondition(format!("schema violation: {}", msg.into()))
}

pub fn validate_poset(doc: &PosetDoc) -> Result<()> {
    if doc.ranks.len() != doc.dim + 1 {
        return Err(schema_error(format!("{} ranks for dim {}", doc.ranks.len(), doc.dim)));
    }
    let mut rank_of = Vec::new();
    for (k, r) in doc.ranks.iter().enumerate() {
        rank_of.extend(std::iter::repeat_n(k, r.len()));
    }
    for &[lo, hi] in &doc.covers {
        match (rank_of.get(lo), rank_of.get(hi)) {
            (Some(&a), Some(&b)) if a == b + 1 => {}
            _ => return Err(schema_error(format!("cover [{lo},{hi}] does not join adjacent ranks"))),
        }
    }
    Ok(())
}

pub fn validate_complex(doc: &ComplexDoc) -> Result<()> {
    if doc.cells.len() != doc.top_dim + 1 {
        return Err(schema_error(format!("{} cell dimensions for topDim {}", doc.cells.len(), doc.top_dim)));
    }
    let tiles = doc.cells[doc.top_dim].len();
    for i in &doc.incidences {
        if i.dim > doc.top_dim || i.cell >= doc.cells[i.dim].len() || i.tile >= tiles || i.mult == 0 {
            return Err(schema_error(format!("incidence {i:?} out of range")));
        }
    }
    Ok(())
}

pub fn parse_poset_json(s: &str) -> Result<PosetDoc> {
    let doc: PosetDoc = serde_json::from_str(s).map_err(|e| schema_error(e.to_string()))?;
    validate_poset(&doc)?;
    Ok(doc)
}

pub fn parse_complex_json(s: &str) -> Result<ComplexDoc> {
    let doc: ComplexDoc = serde_json::from_str(s).map_err(|e| schema_error(e.to_string()))?;
    validate_complex(&doc)?;
    Ok(doc)
}

fn join(face: &[u32]) -> String {
    face.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Hasse diagram, top face first; edges point from a face to the faces it covers.
pub fn poset_dot(p: &FacePoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=TB;\n");
    for (k, r) in p.ranks().iter().enumerate() {
        let _ = write!(out, "  {{ rank=same;");
        for x in 0..r.len() {
            let _ = write!(out, " f{};", p.rank_offset(k) + x);
        }
        out.push_str(" }\n");
        for (x, face) in r.iter().enumerate() {
            let _ = writeln!(out, "  f{} [label=\"{}\"];", p.rank_offset(k) + x, join(face));
        }
    }
    for (k, level) in p.covers().iter().enumerate() {
        for &(a, b) in level {
            let _ = writeln!(out, "  f{} -> f{};", p.rank_offset(k) + b, p.rank_offset(k + 1) + a);
        }
    }
    out.push_str("}\n");
    out
}

/// Dual multigraph: one node per tile, one edge per codim-1 cell joining the
/// tiles whose slots land on it. A cell met twice by one tile is a self-loop.
pub fn complex_dot(c: &CellComplex) -> String {
    let mut out = String::from("graph dual {\n");
    for (t, key) in c.cells[c.top_dim].iter().enumerate() {
        let _ = writeln!(out, "  t{t} [label=\"{}\"];", join(key));
    }
    if c.top_dim > 0 {
        let d = c.top_dim - 1;
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); c.cells[d].len()];
        for i in c.incidences.iter().filter(|i| i.dim == d) {
            ends[i.cell].push(i.tile);
        }
        for (cell, tiles) in ends.iter().enumerate() {
            for pair in tiles.chunks(2) {
                let b = pair.get(1).copied().unwrap_or(pair[0]);
                let style = if pair.len() == 1 { ", style=dashed" } else { "" };
                let _ = writeln!(out, "  t{} -- t{} [label=\"e{cell}\"{style}];", pair[0], b);
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::{build_complex, Space};
    use crate::poset::{associahedron, cyclohedron};

    #[test]
    fn poset_round_trip() {
        let p = cyclohedron(3).unwrap();
        let json = poset_json(&p);
        let doc = parse_poset_json(&json).unwrap();
        assert_eq!(doc.ranks.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 6, 6]);
        assert_eq!(doc.covers.len(), 18);
        assert_eq!(json, poset_json(&cyclohedron(3).unwrap()));
    }

    #[test]
    fn complex_round_trip() {
        let c = build_complex(Space::Z, 3).unwrap();
        let doc = parse_complex_json(&complex_json(&c)).unwrap();
        assert_eq!(doc.cells.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 6, 2]);
        assert_eq!(doc, complex_doc(&c));
    }

    #[test]
    fn schema_rejects_bad_documents() {
        assert!(parse_poset_json(r#"{"dim":0,"ranks":[[[]]],"covers":[],"extra":1}"#).is_err());
        assert!(parse_poset_json(r#"{"dim":1,"ranks":[[[]],[[0,2]]],"covers":[[0,1]]}"#).is_err());
        assert!(parse_complex_json(r#"{"topDim":1,"cells":[[[1]]],"incidences":[]}"#).is_err());
    }

    #[test]
    fn dot_shapes() {
        let dot = poset_dot(&associahedron(4).unwrap());
        assert_eq!(dot.matches(" -> ").count(), 15);
        let dual = complex_dot(&build_complex(Space::Z, 2).unwrap());
        // Z2: one edge tile glued to itself through its single vertex class
        assert!(dual.contains("t0 -- t0"));
    }
}
