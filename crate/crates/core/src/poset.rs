//! Graded face posets of associahedra and cyclohedra.
//!
//! A face at codimension `k` is a dissection with `k` chord classes; it is
//! covered by the faces obtained by deleting one class. The empty dissection
//! is the whole polytope.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use crate::dissect::{all_dissections, all_sym_dissections, Dissection};
use crate::{binomial, Error, Result};

/// Face lattice graded by codimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePoset {
    dim: usize,
    /// `ranks[k]` holds the encodings of the codim-`k` faces.
    ranks: Vec<Vec<Vec<u32>>>,
    /// `covers[k]` holds pairs `(index at codim k+1, index at codim k)`.
    covers: Vec<Vec<(usize, usize)>>,
}

impl FacePoset {
    /// Builds a poset from faces bucketed by codimension. `lower` lists the
    /// faces one codimension up (those covering the given face).
    pub(crate) fn build<T>(
        dim: usize,
        faces: Vec<Vec<T>>,
        encode: impl Fn(&T) -> Vec<u32>,
        lower: impl Fn(&T) -> Vec<T>,
    ) -> Self {
        let ranks: Vec<Vec<Vec<u32>>> = faces.iter().map(|r| r.iter().map(&encode).collect()).collect();
        let index: Vec<HashMap<&Vec<u32>, usize>> = ranks
            .iter()
            .map(|r| r.iter().enumerate().map(|(x, e)| (e, x)).collect())
            .collect();
        let mut covers = vec![Vec::new(); dim];
        for k in 1..faces.len() {
            for (x, face) in faces[k].iter().enumerate() {
                for up in lower(face) {
                    if let Some(&y) = index[k - 1].get(&encode(&up)) {
                        covers[k - 1].push((x, y));
                    }
                }
            }
            covers[k - 1].sort_unstable();
            covers[k - 1].dedup();
        }
        FacePoset { dim, ranks, covers }
    }

    /// Builds a poset directly from ranks and cover pairs.
    pub fn from_parts(dim: usize, ranks: Vec<Vec<Vec<u32>>>, covers: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        if ranks.len() != dim + 1 || covers.len() != dim {
            return Err(Error::Precondition(format!(
                "a dim-{dim} poset needs {} ranks and {dim} cover levels",
                dim + 1
            )));
        }
        for (k, level) in covers.iter().enumerate() {
            if level.iter().any(|&(a, b)| a >= ranks[k + 1].len() || b >= ranks[k].len()) {
                return Err(Error::Precondition(format!("cover index out of range at codim {k}")));
            }
        }
        Ok(FacePoset { dim, ranks, covers })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ranks(&self) -> &[Vec<Vec<u32>>] {
        &self.ranks
    }

    /// Faces at codimension `k`.
    pub fn rank(&self, k: usize) -> &[Vec<u32>] {
        &self.ranks[k]
    }

    pub fn covers(&self) -> &[Vec<(usize, usize)>] {
        &self.covers
    }

    pub fn face_count(&self) -> usize {
        self.ranks.iter().map(Vec::len).sum()
    }

    /// Offset of codim `k` in a flat face numbering (codim 0 first).
    pub fn rank_offset(&self, k: usize) -> usize {
        self.ranks[..k].iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> FVector {
        f_vector(self)
    }
}

/// `f_i` = number of `i`-dimensional faces, `i = 0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FVector {
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `Σ_{i<dim} (−1)^i f_i`, the boundary Euler characteristic.
    pub fn boundary_euler(&self) -> i64 {
        self.0[..self.dim()]
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    }
}

impl HVector {
    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

/// Face poset of `K_n`, from the dissections of an `(n+1)`-gon.
pub fn associahedron(n: usize) -> Result<FacePoset> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("associahedron K_n needs n >= 2, got {n}")));
    }
    Ok(dissection_poset(n - 2, all_dissections(n + 1)))
}

/// Face poset of `W_n`, from the centrally symmetric dissections of a `2n`-gon.
pub fn cyclohedron(n: usize) -> Result<FacePoset> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("cyclohedron W_n needs n >= 1, got {n}")));
    }
    Ok(dissection_poset(n - 1, all_sym_dissections(n)))
}

fn dissection_poset(dim: usize, faces: Vec<Vec<Dissection>>) -> FacePoset {
    FacePoset::build(dim, faces, Dissection::encode, |d| {
        (0..d.codim()).map(|x| d.without_class(x)).collect()
    })
}

pub fn f_vector(p: &FacePoset) -> FVector {
    FVector((0..=p.dim).map(|i| p.ranks[p.dim - i].len() as u64).collect())
}

/// Coefficients of `Σ_i f_i (t − 1)^i`.
pub fn h_vector(f: &FVector) -> HVector {
    let d = f.0.len();
    HVector(
        (0..d)
            .map(|j| {
                (j..d)
                    .map(|i| {
                        let term = f.0[i] as i64 * binomial(i as u64, j as u64) as i64;
                        if (i - j) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum()
            })
            .collect(),
    )
}

/// Product decomposition `W_c × Π K_{n_j}` of a face of `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceFactor {
    pub central: usize,
    /// Associahedron indices, sorted ascending.
    pub outer: Vec<usize>,
}

/// Splits the `2n`-gon along all chords of `d`. The centrally symmetric piece
/// (a `2c`-gon, or nothing when a diameter is present, giving `c = 1`) yields
/// `W_c`; each antipodal pair of `s`-sided pieces yields one `K_{s−1}`.
pub fn face_factor(n: usize, d: &Dissection) -> Result<FaceFactor> {
    if n < 1 {
        return Err(Error::OutOfRange("face_factor needs n >= 1".into()));
    }
    let m = 2 * n;
    d.validate(m, true)?;
    let shift = |piece: &Vec<usize>| {
        let mut s: Vec<usize> = piece.iter().map(|v| (v + n) % m).collect();
        s.sort_unstable();
        s
    };
    let mut central = 1;
    let mut outer = Vec::new();
    for piece in d.pieces(m) {
        let mut own = piece.clone();
        own.sort_unstable();
        let image = shift(&piece);
        if own == image {
            central = piece.len() / 2;
        } else if own < image {
            outer.push(piece.len() - 1);
        }
    }
    outer.sort_unstable();
    Ok(FaceFactor { central, outer })
}
