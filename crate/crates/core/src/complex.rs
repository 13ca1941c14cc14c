//! Space-agnostic analytics on tiled cell complexes.
//!
//! A [`CellComplex`] records, for each tile (top cell), which cell every face
//! slot of the tile is identified with. Counts here are always taken with
//! multiplicity over (tile, slot) pairs, so a tile glued to itself contributes
//! twice.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::dissect::Mode;
use crate::{Error, Result};

/// One face slot of one tile, and the cell it lands on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Incidence {
    pub tile: usize,
    pub slot: usize,
    pub dim: usize,
    pub cell: usize,
    /// Number of slots of this tile landing on the same cell.
    pub mult: usize,
    /// Dissection encoding of the slot inside the tile's polygon.
    pub face: Vec<u32>,
}

/// A directed pass of a 2-cell's boundary over one edge cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Traversal {
    pub slot: usize,
    pub edge: usize,
    /// Whether the pass agrees with the edge cell's reference direction.
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComplex {
    pub top_dim: usize,
    pub mode: Mode,
    /// Side count of the polygons the cells are encoded on.
    pub sides: usize,
    /// `cells[d]` lists the canonical encodings of the `d`-cells. Tile `t` is `cells[top_dim][t]`.
    pub cells: Vec<Vec<Vec<u32>>>,
    /// Sorted by `(tile, slot)`.
    pub incidences: Vec<Incidence>,
    /// Boundary cycle of each tile, present when `top_dim == 2`.
    pub boundaries: Vec<Vec<Traversal>>,
}

impl CellComplex {
    pub fn tile_count(&self) -> usize {
        self.cells.get(self.top_dim).map_or(0, Vec::len)
    }

    /// Cell counts indexed by dimension.
    pub fn cell_counts(&self) -> Vec<u64> {
        self.cells.iter().map(|c| c.len() as u64).collect()
    }

    /// Number of (tile, slot) incidences on each `dim`-cell.
    pub fn incidence_counts(&self, dim: usize) -> Vec<usize> {
        let mut counts = vec![0; self.cells.get(dim).map_or(0, Vec::len)];
        for inc in self.incidences.iter().filter(|i| i.dim == dim) {
            counts[inc.cell] += 1;
        }
        counts
    }

    /// Face slots of tile `t` by dimension.
    pub fn tile_face_counts(&self, t: usize) -> Vec<usize> {
        let mut counts = vec![0; self.top_dim + 1];
        for inc in self.incidences.iter().filter(|i| i.tile == t) {
            counts[inc.dim] += 1;
        }
        counts
    }

    /// Places `other` beside `self`. Both must share dimension and encoding.
    pub fn disjoint_union(&self, other: &CellComplex) -> Result<CellComplex> {
        if self.top_dim != other.top_dim {
            return Err(Error::Precondition("disjoint union needs equal top dimensions".into()));
        }
        let mut out = self.clone();
        let tile_shift = self.tile_count();
        for (d, cells) in other.cells.iter().enumerate() {
            out.cells[d].extend(cells.iter().map(|k| {
                let mut k = k.clone();
                k.insert(0, u32::MAX);
                k
            }));
        }
        for inc in &other.incidences {
            let mut inc = inc.clone();
            inc.tile += tile_shift;
            inc.cell += self.cells[inc.dim].len();
            out.incidences.push(inc);
        }
        let edge_shift = self.cells.get(1).map_or(0, Vec::len);
        for b in &other.boundaries {
            out.boundaries.push(
                b.iter()
                    .map(|t| Traversal { edge: t.edge + edge_shift, ..t.clone() })
                    .collect(),
            );
        }
        Ok(out)
    }
}

pub fn euler(c: &CellComplex) -> i64 {
    c.cells
        .iter()
        .enumerate()
        .map(|(d, cells)| if d % 2 == 0 { cells.len() as i64 } else { -(cells.len() as i64) })
        .sum()
}

/// Every codim-1 cell carries exactly two top-cell incidences.
pub fn pseudomanifold(c: &CellComplex) -> bool {
    if c.top_dim == 0 {
        return true;
    }
    c.incidence_counts(c.top_dim - 1).iter().all(|&x| x == 2)
}

/// Every codim-`k` cell carries exactly `2^k` incidences.
pub fn codim_incidence(c: &CellComplex, k: usize) -> Result<bool> {
    if k > c.top_dim {
        return Err(Error::OutOfRange(format!("codim {k} exceeds top dimension {}", c.top_dim)));
    }
    Ok(c.incidence_counts(c.top_dim - k).iter().all(|&x| x == 1 << k))
}

/// Connected components as lists of tiles, each with its Euler characteristic.
/// Cells with no incidences form their own components.
pub fn components(c: &CellComplex) -> Vec<Component> {
    let offsets: Vec<usize> = c
        .cells
        .iter()
        .scan(0, |acc, cells| {
            let o = *acc;
            *acc += cells.len();
            Some(o)
        })
        .collect();
    let total: usize = c.cells.iter().map(Vec::len).sum();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for inc in &c.incidences {
        let a = find(&mut parent, offsets[c.top_dim] + inc.tile);
        let b = find(&mut parent, offsets[inc.dim] + inc.cell);
        parent[a] = b;
    }
    let mut groups: BTreeMap<usize, Component> = BTreeMap::new();
    for (d, cells) in c.cells.iter().enumerate() {
        for x in 0..cells.len() {
            let root = find(&mut parent, offsets[d] + x);
            let comp = groups.entry(root).or_insert_with(|| Component { tiles: Vec::new(), euler: 0 });
            comp.euler += if d % 2 == 0 { 1 } else { -1 };
            if d == c.top_dim {
                comp.tiles.push(x);
            }
        }
    }
    let mut out: Vec<Component> = groups.into_values().collect();
    out.sort_by(|a, b| a.tiles.cmp(&b.tiles));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub tiles: Vec<usize>,
    pub euler: i64,
}

pub fn is_connected(c: &CellComplex) -> bool {
    components(c).len() <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    /// Genus when orientable, otherwise the number of crosscaps.
    pub parameter: u64,
}

impl SurfaceType {
    pub fn euler(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.parameter as i64
        } else {
            2 - self.parameter as i64
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "orientable genus {}", self.parameter)
        } else {
            write!(f, "non-orientable crosscaps {}", self.parameter)
        }
    }
}

/// Tries to orient every tile so that each edge is crossed in opposite
/// directions by its two boundary passes. `Ok(None)` means consistent.
/// The returned pair names an edge where the attempt failed.
fn orientation_conflict(c: &CellComplex) -> Result<Option<usize>> {
    let tiles = c.tile_count();
    if c.boundaries.len() != tiles {
        return Err(Error::Precondition("boundary traversals missing for some tiles".into()));
    }
    let edges = c.cells[1].len();
    let mut passes: Vec<Vec<(usize, i8)>> = vec![Vec::new(); edges];
    for (t, cycle) in c.boundaries.iter().enumerate() {
        for pass in cycle {
            passes[pass.edge].push((t, if pass.forward { 1 } else { -1 }));
        }
    }
    if let Some(e) = passes.iter().position(|p| p.len() != 2) {
        return Err(Error::Precondition(format!("edge {e} is not crossed by exactly two boundary passes")));
    }
    let mut sign: Vec<i8> = vec![0; tiles];
    for start in 0..tiles {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for pass in &c.boundaries[t] {
                let (a, b) = (passes[pass.edge][0], passes[pass.edge][1]);
                let (mine, other) = if a.0 == t && b.0 != t {
                    (a, b)
                } else if b.0 == t && a.0 != t {
                    (b, a)
                } else {
                    // self-gluing: the two passes must disagree
                    if a.1 == b.1 {
                        return Ok(Some(pass.edge));
                    }
                    continue;
                };
                let want = -(sign[t] * mine.1) * other.1;
                if sign[other.0] == 0 {
                    sign[other.0] = want;
                    stack.push(other.0);
                } else if sign[other.0] != want {
                    return Ok(Some(pass.edge));
                }
            }
        }
    }
    Ok(None)
}

/// Classifies a closed connected surface by orientability and Euler characteristic.
pub fn classify_surface(c: &CellComplex) -> Result<SurfaceType> {
    if c.top_dim != 2 {
        return Err(Error::Precondition(format!("surface classification needs top dimension 2, got {}", c.top_dim)));
    }
    if !is_connected(c) {
        return Err(Error::Precondition("complex is not connected".into()));
    }
    if !pseudomanifold(c) {
        return Err(Error::Precondition("complex is not a pseudomanifold".into()));
    }
    let orientable = orientation_conflict(c)?.is_none();
    let chi = euler(c);
    let surface = if orientable {
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::Precondition(format!("orientable surface with impossible Euler characteristic {chi}")));
        }
        SurfaceType { orientable, parameter: ((2 - chi) / 2) as u64 }
    } else {
        if chi > 1 {
            return Err(Error::Precondition(format!("non-orientable surface with impossible Euler characteristic {chi}")));
        }
        SurfaceType { orientable, parameter: (2 - chi) as u64 }
    };
    Ok(surface)
}
