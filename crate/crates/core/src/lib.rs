//! Associahedra, cyclohedra and the real moduli spaces they tile.
//!
//! Faces of the associahedron `K_n` are dissections of an `(n+1)`-gon and
//! faces of the cyclohedron `W_n` are centrally symmetric dissections of a
//! `2n`-gon. Labeling the sides of those polygons and gluing along twists
//! produces cell complexes for `M̄₀ⁿ(ℝ)` and `Z̄ⁿ`, whose counts (tiles, cells,
//! Euler characteristics, surface types, strata) are computed here by direct
//! enumeration.
//!
//! Modules:
//! - [`dissect`]: chords, labeled polygons, dissection enumeration, canonical forms.
//! - [`poset`]: face posets, f- and h-vectors, face factorization.
//! - [`moduli`]: twists, tiles, cell classes and complex assembly.
//! - [`complex`]: Euler characteristic, pseudomanifold checks, surface classification.
//! - [`nested`]: tubings of path and cycle diagrams, arrangement censuses.
//! - [`nc`]: non-crossing partitions of types A and B.
//! - [`export`] and [`report`]: JSON/DOT artifacts and the verification report.

pub mod complex;
pub mod dissect;
mod error;
pub mod export;
pub mod moduli;
pub mod nc;
pub mod nested;
pub mod poset;
pub mod report;

pub use error::{Error, Result};

/// `n!` as u64. Panics on overflow, which only happens far outside desk scale.
pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
