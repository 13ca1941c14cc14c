//! Tubings of path and cycle diagrams, and braid arrangement censuses.
//!
//! A tube is a proper nonempty set of diagram nodes inducing a connected
//! subgraph. Two tubes are compatible when nested, or disjoint with no edge
//! between them. Tubings graded by size give the face poset of the truncated
//! simplex: `K_{n+1}` for the `n`-node path and `W_n` for the `n`-cycle.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::poset::FacePoset;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub kind: DiagramKind,
    pub nodes: usize,
}

impl Diagram {
    pub fn path(nodes: usize) -> Result<Self> {
        if !(1..=30).contains(&nodes) {
            return Err(Error::OutOfRange(format!("path diagram needs 1..=30 nodes, got {nodes}")));
        }
        Ok(Diagram { kind: DiagramKind::Path, nodes })
    }

    pub fn cycle(nodes: usize) -> Result<Self> {
        if !(3..=30).contains(&nodes) {
            return Err(Error::OutOfRange(format!("cycle diagram needs 3..=30 nodes, got {nodes}")));
        }
        Ok(Diagram { kind: DiagramKind::Cycle, nodes })
    }

    /// Adjacency as node pairs `(a, b)` with `a < b`, 0-indexed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.nodes.saturating_sub(1)).map(|a| (a, a + 1)).collect();
        if self.kind == DiagramKind::Cycle {
            out.push((0, self.nodes - 1));
        }
        out
    }

    fn neighbor_mask(&self, mask: u32) -> u32 {
        self.edges().iter().fold(0, |acc, &(a, b)| {
            let mut acc = acc;
            if mask >> a & 1 == 1 {
                acc |= 1 << b;
            }
            if mask >> b & 1 == 1 {
                acc |= 1 << a;
            }
            acc
        })
    }

    fn is_connected(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let mut reached = 1 << mask.trailing_zeros();
        loop {
            let grown = (reached | self.neighbor_mask(reached)) & mask;
            if grown == reached {
                return reached == mask;
            }
            reached = grown;
        }
    }
}

/// A tube as a node bitmask (bit `i` = node `i`, 0-indexed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tube(pub u32);

impl Tube {
    pub fn nodes(&self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tubing {
    pub tubes: Vec<Tube>,
}

impl Tubing {
    pub fn encode(&self) -> Vec<u32> {
        self.tubes.iter().map(|t| t.0).collect()
    }
}

/// All tubes, ordered by size then by node list.
pub fn tubes(d: &Diagram) -> Vec<Tube> {
    let full = (1u32 << d.nodes) - 1;
    let mut out: Vec<Tube> = (1..full).filter(|&m| d.is_connected(m)).map(Tube).collect();
    out.sort_by_key(|t| (t.len(), t.nodes()));
    out
}

pub fn compatible(d: &Diagram, a: Tube, b: Tube) -> bool {
    let nested = a.0 & b.0 == a.0 || a.0 & b.0 == b.0;
    let separated = a.0 & b.0 == 0 && d.neighbor_mask(a.0) & b.0 == 0;
    nested || separated
}

/// All tubings bucketed by number of tubes.
pub fn tubings(d: &Diagram) -> Vec<Vec<Tubing>> {
    let all = tubes(d);
    let compat: Vec<Vec<bool>> = all
        .iter()
        .map(|&a| all.iter().map(|&b| a != b && compatible(d, a, b)).collect())
        .collect();
    let mut buckets: Vec<Vec<Tubing>> = vec![Vec::new(); d.nodes];
    let mut chosen: Vec<usize> = Vec::new();
    fn recurse(
        start: usize,
        chosen: &mut Vec<usize>,
        all: &[Tube],
        compat: &[Vec<bool>],
        buckets: &mut Vec<Vec<Tubing>>,
    ) {
        let mut tubes: Vec<Tube> = chosen.iter().map(|&x| all[x]).collect();
        tubes.sort();
        buckets[chosen.len()].push(Tubing { tubes });
        for next in start..all.len() {
            if chosen.iter().all(|&x| compat[x][next]) {
                chosen.push(next);
                recurse(next + 1, chosen, all, compat, buckets);
                chosen.pop();
            }
        }
    }
    recurse(0, &mut chosen, &all, &compat, &mut buckets);
    while buckets.last().is_some_and(Vec::is_empty) {
        buckets.pop();
    }
    for b in buckets.iter_mut() {
        b.sort();
    }
    buckets
}

/// Face poset of the truncated simplex: tubings graded by tube count.
pub fn tubing_poset(d: &Diagram) -> FacePoset {
    let faces = tubings(d);
    let dim = d.nodes - 1;
    FacePoset::build(dim, faces, Tubing::encode, |t| {
        (0..t.tubes.len())
            .map(|x| {
                let mut tubes = t.tubes.clone();
                tubes.remove(x);
                Tubing { tubes }
            })
            .collect()
    })
}

struct Graded {
    up: Vec<Vec<Vec<usize>>>,
    down: Vec<Vec<Vec<usize>>>,
    signature: Vec<Vec<Vec<usize>>>,
}

impl Graded {
    fn new(p: &FacePoset) -> Self {
        let ranks = p.ranks();
        let mut up: Vec<Vec<Vec<usize>>> = ranks.iter().map(|r| vec![Vec::new(); r.len()]).collect();
        let mut down = up.clone();
        for (k, level) in p.covers().iter().enumerate() {
            for &(lo, hi) in level {
                up[k + 1][lo].push(hi);
                down[k][hi].push(lo);
            }
        }
        for level in up.iter_mut().chain(down.iter_mut()) {
            for list in level.iter_mut() {
                list.sort_unstable();
            }
        }
        // sizes of the down-set of each face at every deeper rank
        let mut signature: Vec<Vec<Vec<usize>>> = Vec::with_capacity(ranks.len());
        for k in 0..ranks.len() {
            let mut rows = Vec::with_capacity(ranks[k].len());
            for x in 0..ranks[k].len() {
                let mut sig = vec![up[k][x].len()];
                let mut frontier = vec![x];
                for r in k..ranks.len() - 1 {
                    let mut next: Vec<usize> = frontier.iter().flat_map(|&f| down[r][f].iter().copied()).collect();
                    next.sort_unstable();
                    next.dedup();
                    sig.push(next.len());
                    frontier = next;
                }
                rows.push(sig);
            }
            signature.push(rows);
        }
        Graded { up, down, signature }
    }

    fn common_below(&self, k: usize, a: usize, b: usize) -> usize {
        let (x, y) = (&self.down[k][a], &self.down[k][b]);
        x.iter().filter(|v| y.binary_search(v).is_ok()).count()
    }
}

/// Search for a rank- and cover-preserving bijection. `step_cap` bounds the
/// number of candidate trials.
pub fn poset_iso_with(a: &FacePoset, b: &FacePoset, step_cap: u64) -> Result<bool> {
    if a.dim() != b.dim()
        || a.ranks().iter().map(Vec::len).ne(b.ranks().iter().map(Vec::len))
        || a.covers().iter().map(Vec::len).ne(b.covers().iter().map(Vec::len))
    {
        return Ok(false);
    }
    let (ga, gb) = (Graded::new(a), Graded::new(b));
    for k in 0..a.ranks().len() {
        let mut sa = ga.signature[k].clone();
        let mut sb = gb.signature[k].clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(false);
        }
    }

    // order: rank by rank; inside a rank, breadth-first over "shares a face below"
    let mut order: Vec<(usize, usize)> = Vec::new();
    for k in 0..a.ranks().len() {
        let size = a.ranks()[k].len();
        let mut placed = vec![false; size];
        for seed in 0..size {
            if placed[seed] {
                continue;
            }
            placed[seed] = true;
            let mut queue = std::collections::VecDeque::from([seed]);
            while let Some(x) = queue.pop_front() {
                order.push((k, x));
                let mut near: Vec<usize> = Vec::new();
                if k + 1 < a.ranks().len() {
                    for &lo in &ga.down[k][x] {
                        near.extend(ga.up[k + 1][lo].iter().copied());
                    }
                }
                near.sort_unstable();
                near.dedup();
                for y in near {
                    if !placed[y] {
                        placed[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
    }

    let mut buckets: Vec<HashMap<&Vec<usize>, Vec<usize>>> = Vec::new();
    for k in 0..b.ranks().len() {
        let mut map: HashMap<&Vec<usize>, Vec<usize>> = HashMap::new();
        for (y, sig) in gb.signature[k].iter().enumerate() {
            map.entry(sig).or_default().push(y);
        }
        buckets.push(map);
    }

    struct Search<'a> {
        ga: &'a Graded,
        gb: &'a Graded,
        order: &'a [(usize, usize)],
        buckets: &'a [HashMap<&'a Vec<usize>, Vec<usize>>],
        phi: Vec<Vec<Option<usize>>>,
        used: Vec<Vec<bool>>,
        steps: u64,
        cap: u64,
    }

    impl Search<'_> {
        fn fits(&self, k: usize, x: usize, y: usize) -> bool {
            let up_x = &self.ga.up[k][x];
            let up_y = &self.gb.up[k][y];
            if up_x.len() != up_y.len() {
                return false;
            }
            for &z in up_x {
                match self.phi[k - 1][z] {
                    Some(w) if up_y.binary_search(&w).is_ok() => {}
                    Some(_) => return false,
                    None => {}
                }
            }
            // faces of the same rank already placed must share as many faces below
            if k + 1 < self.ga.down.len() && k <= 2 {
                for (other, img) in self.phi[k].iter().enumerate() {
                    if let Some(w) = img {
                        if self.ga.common_below(k, x, other) != self.gb.common_below(k, y, *w) {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, at: usize) -> Result<bool> {
            let Some(&(k, x)) = self.order.get(at) else {
                return Ok(true);
            };
            let candidates = match self.buckets[k].get(&self.ga.signature[k][x]) {
                Some(c) => c.clone(),
                None => return Ok(false),
            };
            for y in candidates {
                if self.used[k][y] {
                    continue;
                }
                self.steps += 1;
                if self.steps > self.cap {
                    return Err(Error::Budget {
                        what: format!("poset isomorphism search exceeded {} steps", self.cap),
                        flag: "step_cap".into(),
                    });
                }
                if k > 0 && !self.fits(k, x, y) {
                    continue;
                }
                self.phi[k][x] = Some(y);
                self.used[k][y] = true;
                if self.run(at + 1)? {
                    return Ok(true);
                }
                self.phi[k][x] = None;
                self.used[k][y] = false;
            }
            Ok(false)
        }
    }

    let mut search = Search {
        ga: &ga,
        gb: &gb,
        order: &order,
        buckets: &buckets,
        phi: a.ranks().iter().map(|r| vec![None; r.len()]).collect(),
        used: b.ranks().iter().map(|r| vec![false; r.len()]).collect(),
        steps: 0,
        cap: step_cap,
    };
    search.run(0)
}

pub fn poset_iso(a: &FacePoset, b: &FacePoset) -> Result<bool> {
    poset_iso_with(a, b, 50_000_000)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrangementKind {
    /// Braid arrangement on the projectivized sum-zero hyperplane of ℝ^{n+1}.
    Linear,
    /// Affine braid arrangement `x_i = x_j + k` on the sum-zero hyperplane of ℝⁿ, modulo the lattice.
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementDescriptor {
    pub kind: ArrangementKind,
    pub n: usize,
}

impl ArrangementDescriptor {
    pub fn linear(n: usize) -> Self {
        ArrangementDescriptor { kind: ArrangementKind::Linear, n }
    }

    pub fn affine(n: usize) -> Self {
        ArrangementDescriptor { kind: ArrangementKind::Affine, n }
    }

    fn coordinates(&self) -> usize {
        match self.kind {
            ArrangementKind::Linear => self.n + 1,
            ArrangementKind::Affine => self.n,
        }
    }
}

/// Codimension of the flat cut out by the given hyperplanes `x_a = x_b`
/// (the rank of the graph they form).
fn flat_codim(pairs: &[(usize, usize)], coords: usize) -> usize {
    let mut parent: Vec<usize> = (0..coords).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut rank = 0;
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

/// Number of codim-`k` minimal building-set elements: flats where exactly
/// `(k+1 choose 2)` braid hyperplanes meet, found by enumerating coordinate subsets.
pub fn building_set_count(a: &ArrangementDescriptor, k: usize) -> Result<u64> {
    let valid = match a.kind {
        ArrangementKind::Affine => k >= 1 && k < a.n,
        ArrangementKind::Linear => k >= 1 && k < a.n,
    };
    if !valid || a.n < 2 || a.coordinates() > 20 {
        return Err(Error::OutOfRange(format!("codim {k} invalid for {:?} arrangement with n={}", a.kind, a.n)));
    }
    let coords = a.coordinates();
    let mut count = 0;
    for subset in (0..coords).powerset().filter(|s| s.len() >= 2) {
        let pairs: Vec<(usize, usize)> = subset.iter().copied().tuple_combinations().collect();
        if pairs.len() == (k + 1) * k / 2 && flat_codim(&pairs, coords) == k {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of top cells cut out by the arrangement: coordinate orderings up to
/// reversal (linear, projective) or up to cyclic rotation (affine, on the torus).
pub fn chamber_count(a: &ArrangementDescriptor) -> Result<u64> {
    if a.n < 2 || a.coordinates() > 10 {
        return Err(Error::OutOfRange(format!("chamber count needs 2 <= n with at most 10 coordinates, got n={}", a.n)));
    }
    let coords = a.coordinates();
    let count = (0..coords)
        .permutations(coords)
        .filter(|p| match a.kind {
            ArrangementKind::Linear => {
                let rev: Vec<usize> = p.iter().rev().copied().collect();
                *p < rev
            }
            ArrangementKind::Affine => (1..coords).all(|r| {
                let rot: Vec<usize> = p[r..].iter().chain(&p[..r]).copied().collect();
                *p < rot
            }),
        })
        .count();
    Ok(count as u64)
}
