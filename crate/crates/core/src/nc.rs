//! Non-crossing partitions of types A and B, and their rank counts.
//!
//! Type A: partitions of `1..=n` placed on a circle. Type B: partitions of
//! `1..n, 1̄..n̄` (cyclic order) that are invariant under the bar map, with at
//! most one block equal to its own image. Positions are 0-indexed: element `i`
//! sits at `i-1` and `ī` at `n+i-1`.

use serde::{Deserialize, Serialize};

use crate::poset::{associahedron, cyclohedron, h_vector};
use crate::{Error, Result};

/// A set partition of `1..=n` with sorted blocks ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionA {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl PartitionA {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidDissection(format!("element {x} is out of range or repeated")));
            }
            seen[x] = true;
        }
        if blocks.iter().any(Vec::is_empty) || seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidDissection(format!("blocks do not partition 1..={n}")));
        }
        Ok(Self::normalized(blocks, n))
    }

    fn normalized(mut blocks: Vec<Vec<usize>>, n: usize) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        PartitionA { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// A bar-invariant partition of the `2n` signed elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedPartition {
    n: usize,
    /// Blocks as sorted position lists.
    blocks: Vec<Vec<usize>>,
}

impl SignedPartition {
    /// Blocks are given as signed integers: `i` for `i`, `-i` for `ī`.
    pub fn new(blocks: &[Vec<i64>], n: usize) -> Result<Self> {
        let pos = |x: i64| -> Result<usize> {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidDissection(format!("signed element {x} out of range")));
            }
            Ok(if x > 0 { a - 1 } else { n + a - 1 })
        };
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|&x| pos(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_positions(blocks, n)
    }

    pub fn from_positions(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let m = 2 * n;
        let mut seen = vec![false; m];
        for &x in blocks.iter().flatten() {
            if x >= m || seen[x] {
                return Err(Error::InvalidDissection(format!("position {x} out of range or repeated")));
            }
            seen[x] = true;
        }
        if blocks.iter().any(Vec::is_empty) || seen.iter().any(|s| !s) {
            return Err(Error::InvalidDissection(format!("blocks do not partition the {m} signed elements")));
        }
        let p = Self::normalized(blocks, n);
        if !p.is_bar_closed() {
            return Err(Error::InvalidDissection("partition is not invariant under the bar map".into()));
        }
        Ok(p)
    }

    fn normalized(mut blocks: Vec<Vec<usize>>, n: usize) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        SignedPartition { n, blocks }
    }

    fn bar_block(&self, b: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = b.iter().map(|&x| (x + self.n) % (2 * self.n)).collect();
        out.sort_unstable();
        out
    }

    fn is_bar_closed(&self) -> bool {
        self.blocks.iter().all(|b| self.blocks.binary_search(&self.bar_block(b)).is_ok())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks equal to their own bar image.
    pub fn self_bar_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| self.bar_block(b) == **b).count()
    }

    /// Type-B partition: at most one self-bar block.
    pub fn is_type_b(&self) -> bool {
        self.self_bar_blocks() <= 1
    }

    /// Number of bar pairs `{B_i, B̄_i}` of non-self-bar blocks.
    pub fn pairs(&self) -> usize {
        (self.blocks.len() - self.self_bar_blocks()) / 2
    }
}

/// Blocks on a circle cross iff one block meets two of the arcs cut by the other.
fn blocks_cross(x: &[usize], y: &[usize]) -> bool {
    let region = |v: usize| x.iter().filter(|&&a| a < v).count() % x.len();
    let first = region(y[0]);
    y.iter().any(|&v| region(v) != first)
}

fn non_crossing(blocks: &[Vec<usize>]) -> bool {
    blocks
        .iter()
        .enumerate()
        .all(|(a, x)| blocks[a + 1..].iter().all(|y| !blocks_cross(x, y)))
}

pub fn is_non_crossing_a(p: &PartitionA) -> bool {
    non_crossing(&p.blocks)
}

/// Non-crossing test on the `2n` points; self-bar block count is not checked here.
pub fn is_non_crossing_b(p: &SignedPartition) -> bool {
    non_crossing(&p.blocks)
}

/// Visits every set partition of `0..m` as a restricted growth string.
fn for_each_partition(m: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    fn go(x: usize, m: usize, blocks: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if x == m {
            visit(blocks);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(x);
            go(x + 1, m, blocks, visit);
            blocks[b].pop();
        }
        blocks.push(vec![x]);
        go(x + 1, m, blocks, visit);
        blocks.pop();
    }
    go(0, m, &mut Vec::new(), &mut visit);
}

pub const MAX_NC_A: usize = 12;
pub const MAX_NC_B: usize = 5;

fn cap_error(what: &str, n: usize, cap: usize, flag: &str) -> Error {
    Error::Budget { what: format!("{what} with n={n} exceeds cap {cap}"), flag: flag.into() }
}

/// `counts[k]` = number of non-crossing partitions of `1..=n` into `k` blocks.
pub fn nc_a_counts(n: usize) -> Result<Vec<u64>> {
    if n > MAX_NC_A {
        return Err(cap_error("type A enumeration", n, MAX_NC_A, "a smaller --n"));
    }
    let mut counts = vec![0u64; n + 1];
    for_each_partition(n, |blocks| {
        if non_crossing(blocks) {
            counts[blocks.len()] += 1;
        }
    });
    Ok(counts)
}

pub fn count_nc_a(n: usize, k: usize) -> Result<u64> {
    Ok(nc_a_counts(n)?.get(k).copied().unwrap_or(0))
}

/// `counts[k]` = number of non-crossing type-B partitions with `k` bar pairs.
pub fn nc_b_counts_with(n: usize, cap: usize) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(Error::OutOfRange("type B needs n >= 1".into()));
    }
    if n > cap {
        return Err(cap_error("type B enumeration", n, cap, "--cap or CYCLOHEDRA_CAP_NCB"));
    }
    let mut counts = vec![0u64; n + 1];
    for_each_partition(2 * n, |blocks| {
        if !non_crossing(blocks) {
            return;
        }
        let p = SignedPartition::normalized(blocks.to_vec(), n);
        if p.is_bar_closed() && p.is_type_b() {
            counts[p.pairs()] += 1;
        }
    });
    Ok(counts)
}

pub fn nc_b_counts(n: usize) -> Result<Vec<u64>> {
    nc_b_counts_with(n, MAX_NC_B)
}

pub fn count_nc_b(n: usize, k: usize) -> Result<u64> {
    Ok(nc_b_counts(n)?.get(k).copied().unwrap_or(0))
}

/// Checks `h_k(K_{n+1}) = #NC_A(n, n-k)` for every `k`.
pub fn verify_identity_a(n: usize) -> Result<bool> {
    if !(1..=7).contains(&n) {
        return Err(Error::OutOfRange(format!("type A identity checked for 1 <= n <= 7, got {n}")));
    }
    let h = h_vector(&associahedron(n + 1)?.f_vector());
    let counts = nc_a_counts(n)?;
    Ok(h.0.len() == n && (0..n).all(|k| h.0[k] == counts[n - k] as i64))
}

/// Checks `h_k(W_{n+1}) = #NC_B(n, n-k)` for every `k`.
pub fn verify_identity_b(n: usize) -> Result<bool> {
    if !(1..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("type B identity checked for 1 <= n <= 5, got {n}")));
    }
    let h = h_vector(&cyclohedron(n + 1)?.f_vector());
    let counts = nc_b_counts(n)?;
    Ok(h.0.len() == n + 1 && (0..=n).all(|k| h.0[k] == counts[n - k] as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;

    fn catalan(n: u64) -> u64 {
        binomial(2 * n, n) / (n + 1)
    }

    /// Crossing via straight segments between points on the unit circle.
    fn geometric_cross(x: &[usize], y: &[usize], m: usize) -> bool {
        let pt = |v: usize| {
            let t = std::f64::consts::TAU * v as f64 / m as f64;
            (t.cos(), t.sin())
        };
        let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        for (&a, &b) in x.iter().flat_map(|a| x.iter().map(move |b| (a, b))) {
            for (&c, &d) in y.iter().flat_map(|c| y.iter().map(move |d| (c, d))) {
                if a < b && c < d {
                    let (pa, pb, pc, pd) = (pt(a), pt(b), pt(c), pt(d));
                    if orient(pa, pb, pc) * orient(pa, pb, pd) < 0.0 && orient(pc, pd, pa) * orient(pc, pd, pb) < 0.0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn type_a_examples() {
        assert!(!is_non_crossing_a(&PartitionA::new(vec![vec![1, 3], vec![2, 4]], 4).unwrap()));
        assert!(is_non_crossing_a(&PartitionA::new(vec![vec![1, 4], vec![2, 3]], 4).unwrap()));
        assert_eq!(nc_a_counts(4).unwrap(), vec![0, 1, 6, 6, 1]);
        assert!(PartitionA::new(vec![vec![1, 2]], 3).is_err());
    }

    #[test]
    fn type_a_catalan_and_symmetry() {
        for n in 1..=8 {
            let c = nc_a_counts(n).unwrap();
            assert_eq!(c.iter().sum::<u64>(), catalan(n as u64));
            for k in 1..=n {
                assert_eq!(c[k], c[n + 1 - k]);
                // Narayana numbers
                let nk = binomial(n as u64, k as u64) * binomial(n as u64, k as u64 - 1) / n as u64;
                assert_eq!(c[k], nk);
            }
        }
    }

    #[test]
    fn type_b_examples() {
        let p = SignedPartition::new(&[vec![1, 2, -1, -2]], 2).unwrap();
        assert!(is_non_crossing_b(&p));
        assert_eq!(p.self_bar_blocks(), 1);
        let q = SignedPartition::new(&[vec![1, -1], vec![2, -2]], 2).unwrap();
        assert!(!is_non_crossing_b(&q));
        assert!(!q.is_type_b());
        assert!(SignedPartition::new(&[vec![1, 2], vec![-1], vec![-2]], 2).is_err());
        assert_eq!(nc_b_counts(2).unwrap(), vec![1, 4, 1]);
        assert_eq!(nc_b_counts(3).unwrap(), vec![1, 9, 9, 1]);
    }

    #[test]
    fn type_b_central_binomial_and_symmetry() {
        for n in 1..=5 {
            let c = nc_b_counts(n).unwrap();
            assert_eq!(c.iter().sum::<u64>(), binomial(2 * n as u64, n as u64));
            for k in 0..=n {
                assert_eq!(c[k], c[n - k]);
                assert_eq!(c[k], binomial(n as u64, k as u64).pow(2));
            }
        }
    }

    #[test]
    fn crossing_matches_geometry() {
        for m in 4..=8 {
            for_each_partition(m, |blocks| {
                let algebraic = non_crossing(blocks);
                let geometric = blocks
                    .iter()
                    .enumerate()
                    .all(|(a, x)| blocks[a + 1..].iter().all(|y| !geometric_cross(x, y, m)));
                assert_eq!(algebraic, geometric, "{blocks:?}");
            });
        }
    }

    #[test]
    fn identities() {
        for n in 1..=6 {
            assert!(verify_identity_a(n).unwrap());
        }
        for n in 1..=4 {
            assert!(verify_identity_b(n).unwrap());
        }
        assert!(verify_identity_a(0).is_err());
        assert!(matches!(nc_b_counts_with(4, 3), Err(Error::Budget { .. })));
    }
}
