//! Chords, labeled polygons and dissections.
//!
//! Vertices of an `m`-gon are numbered `0..m` counterclockwise and side `s`
//! joins vertex `s` to vertex `s + 1 (mod m)`. Everything here is exact index
//! arithmetic. A dissection is a set of pairwise non-crossing diagonals, where
//! two diagonals sharing an endpoint do not cross.
//!
//! Centrally symmetric `2n`-gons group their diagonals into classes: either an
//! antipodal pair `{δ, δ + n}` or a single diameter `(i, i + n)`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{Error, Result};

/// A diagonal `(i, j)` of an `m`-gon with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    i: usize,
    j: usize,
}

impl Chord {
    /// Builds a diagonal of an `m`-gon. Endpoints may be given in either order.
    pub fn new(a: usize, b: usize, m: usize) -> Result<Self> {
        let c = Self::from_ends(a, b);
        if c.is_valid(m) {
            Ok(c)
        } else {
            Err(Error::InvalidChord { i: a, j: b, m })
        }
    }

    /// Normalizes endpoint order without validating.
    pub(crate) fn from_ends(a: usize, b: usize) -> Self {
        if a < b {
            Chord { i: a, j: b }
        } else {
            Chord { i: b, j: a }
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// True when this is a genuine diagonal (not a side) of an `m`-gon.
    pub fn is_valid(&self, m: usize) -> bool {
        self.i < self.j && self.j < m && self.j - self.i >= 2 && !(self.i == 0 && self.j == m - 1)
    }

    pub fn is_diameter(&self, n: usize) -> bool {
        self.j - self.i == n
    }

    /// Image under the half-turn `v ↦ v + n` of a `2n`-gon.
    pub fn antipode(&self, n: usize) -> Chord {
        Chord::from_ends((self.i + n) % (2 * n), (self.j + n) % (2 * n))
    }

    fn shares_endpoint(&self, other: &Chord) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }

    fn strictly_inside(&self, v: usize) -> bool {
        self.i < v && v < self.j
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Crossing test for two diagonals of an `m`-gon.
pub fn crosses(a: Chord, b: Chord, m: usize) -> Result<bool> {
    for c in [a, b] {
        if !c.is_valid(m) {
            return Err(Error::InvalidChord { i: c.i, j: c.j, m });
        }
    }
    Ok(crosses_unchecked(&a, &b))
}

pub(crate) fn crosses_unchecked(a: &Chord, b: &Chord) -> bool {
    !a.shares_endpoint(b) && a.strictly_inside(b.i) != a.strictly_inside(b.j)
}

/// One "diagonal" in the sense of the cyclohedron: a diameter, an antipodal
/// pair of chords, or (for plain polygons) a single chord.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChordClass {
    members: Vec<Chord>,
}

impl ChordClass {
    pub fn single(c: Chord) -> Self {
        ChordClass { members: vec![c] }
    }

    pub(crate) fn from_members(mut members: Vec<Chord>) -> Self {
        members.sort_unstable();
        members.dedup();
        ChordClass { members }
    }

    pub fn members(&self) -> &[Chord] {
        &self.members
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    fn crosses(&self, other: &ChordClass) -> bool {
        self.members
            .iter()
            .any(|a| other.members.iter().any(|b| crosses_unchecked(a, b)))
    }
}

impl fmt::Display for ChordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The class of `c` in a `2n`-gon.
pub fn antipodal_class(c: Chord, n: usize) -> Result<ChordClass> {
    if !c.is_valid(2 * n) {
        return Err(Error::InvalidChord { i: c.i, j: c.j, m: 2 * n });
    }
    Ok(antipodal_class_unchecked(c, n))
}

pub(crate) fn antipodal_class_unchecked(c: Chord, n: usize) -> ChordClass {
    if c.is_diameter(n) {
        ChordClass::single(c)
    } else {
        ChordClass::from_members(vec![c, c.antipode(n)])
    }
}

/// How the sides of a polygon are labeled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `m` distinct labels.
    Plain,
    /// A `2n`-gon whose antipodal sides share a label from `1..=n`.
    Symmetric,
    /// A `2n`-gon whose antipodal sides carry `i` and `ī`; `ī` is encoded as `i + n`.
    Barred,
}

/// Bar involution on labels `1..=2n` (`ī = i + n`).
pub fn bar(label: u32, n: usize) -> u32 {
    let n = n as u32;
    if label > n {
        label - n
    } else {
        label + n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledPolygon {
    labels: Vec<u32>,
    mode: Mode,
}

impl LabeledPolygon {
    pub fn new(labels: Vec<u32>, mode: Mode) -> Result<Self> {
        let m = labels.len();
        let bad = |msg: String| Err(Error::InvalidPolygon(msg));
        match mode {
            Mode::Plain => {
                if m < 3 {
                    return bad(format!("a plain polygon needs at least 3 sides, got {m}"));
                }
                let mut sorted = labels.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != m {
                    return bad("plain labels must be distinct".into());
                }
            }
            Mode::Symmetric | Mode::Barred => {
                if m < 2 || !m.is_multiple_of(2) {
                    return bad(format!("a centrally symmetric polygon needs an even side count, got {m}"));
                }
                let n = m / 2;
                let mut seen = vec![false; n + 1];
                for s in 0..n {
                    let (a, b) = (labels[s], labels[s + n]);
                    let expected = if mode == Mode::Symmetric { a } else { bar(a, n) };
                    if b != expected {
                        return bad(format!("sides {s} and {} are antipodal but labeled {a} and {b}", s + n));
                    }
                    let base = if mode == Mode::Barred && a as usize > n { a as usize - n } else { a as usize };
                    if base == 0 || base > n || a as usize > 2 * n || seen[base] {
                        return bad(format!("label {a} is out of range or repeated"));
                    }
                    seen[base] = true;
                }
            }
        }
        Ok(LabeledPolygon { labels, mode })
    }

    pub fn plain(labels: Vec<u32>) -> Result<Self> {
        Self::new(labels, Mode::Plain)
    }

    pub fn symmetric(labels: Vec<u32>) -> Result<Self> {
        Self::new(labels, Mode::Symmetric)
    }

    pub fn barred(labels: Vec<u32>) -> Result<Self> {
        Self::new(labels, Mode::Barred)
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<u32>, mode: Mode) -> Self {
        LabeledPolygon { labels, mode }
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.mode != Mode::Plain
    }
}

/// A set of chord classes whose chords pairwise do not cross.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dissection {
    classes: Vec<ChordClass>,
}

impl Dissection {
    pub fn empty() -> Self {
        Dissection::default()
    }

    /// Plain-mode dissection of an `m`-gon: every chord is its own class.
    pub fn plain(chords: impl IntoIterator<Item = Chord>, m: usize) -> Result<Self> {
        let d = Dissection::from_classes_unchecked(chords.into_iter().map(ChordClass::single).collect());
        d.validate(m, false)?;
        Ok(d)
    }

    /// Centrally symmetric dissection of a `2n`-gon from its full chord set.
    pub fn symmetric(chords: impl IntoIterator<Item = Chord>, n: usize) -> Result<Self> {
        let chords: Vec<Chord> = chords.into_iter().collect();
        for c in &chords {
            if !c.is_valid(2 * n) {
                return Err(Error::InvalidChord { i: c.i, j: c.j, m: 2 * n });
            }
        }
        let d = Dissection::from_classes_unchecked(
            chords.iter().map(|&c| antipodal_class_unchecked(c, n)).collect(),
        );
        if d.chords().len() != {
            let mut s = chords.clone();
            s.sort_unstable();
            s.dedup();
            s.len()
        } {
            return Err(Error::InvalidDissection("chord set is not closed under the antipodal map".into()));
        }
        d.validate(2 * n, true)?;
        Ok(d)
    }

    pub fn from_classes(classes: Vec<ChordClass>, m: usize, symmetric: bool) -> Result<Self> {
        let d = Dissection::from_classes_unchecked(classes);
        d.validate(m, symmetric)?;
        Ok(d)
    }

    pub(crate) fn from_classes_unchecked(mut classes: Vec<ChordClass>) -> Self {
        classes.sort_unstable();
        classes.dedup();
        Dissection { classes }
    }

    pub fn classes(&self) -> &[ChordClass] {
        &self.classes
    }

    pub fn codim(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, class: &ChordClass) -> bool {
        self.classes.binary_search(class).is_ok()
    }

    /// All chords, sorted.
    pub fn chords(&self) -> Vec<Chord> {
        let mut out: Vec<Chord> = self.classes.iter().flat_map(|c| c.members.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    pub fn with_class(&self, class: ChordClass) -> Dissection {
        let mut classes = self.classes.clone();
        classes.push(class);
        Dissection::from_classes_unchecked(classes)
    }

    pub fn without_class(&self, index: usize) -> Dissection {
        let mut classes = self.classes.clone();
        classes.remove(index);
        Dissection { classes }
    }

    /// Flattened sorted chord list `[i₀, j₀, i₁, j₁, …]`.
    pub fn encode(&self) -> Vec<u32> {
        self.chords().iter().flat_map(|c| [c.i as u32, c.j as u32]).collect()
    }

    /// Checks chord validity, non-crossing and (optionally) central symmetry for an `m`-gon.
    pub fn validate(&self, m: usize, symmetric: bool) -> Result<()> {
        let chords = self.chords();
        for c in &chords {
            if !c.is_valid(m) {
                return Err(Error::InvalidChord { i: c.i, j: c.j, m });
            }
        }
        if chords.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDissection("a chord appears in two classes".into()));
        }
        for (x, a) in chords.iter().enumerate() {
            for b in &chords[x + 1..] {
                if crosses_unchecked(a, b) {
                    return Err(Error::InvalidDissection(format!("chords {a} and {b} cross")));
                }
            }
        }
        if symmetric {
            if !m.is_multiple_of(2) {
                return Err(Error::InvalidDissection("odd polygon cannot be centrally symmetric".into()));
            }
            let n = m / 2;
            for class in &self.classes {
                if *class != antipodal_class_unchecked(class.members[0], n) {
                    return Err(Error::InvalidDissection(format!("{class} is not an antipodal class")));
                }
            }
        } else if self.classes.iter().any(|c| !c.is_singleton()) {
            return Err(Error::InvalidDissection("plain dissections use single-chord classes".into()));
        }
        Ok(())
    }

    /// The pieces the chords cut an `m`-gon into, each as its cyclic vertex list.
    pub fn pieces(&self, m: usize) -> Vec<Vec<usize>> {
        let mut pieces = vec![(0..m).collect::<Vec<usize>>()];
        for c in self.chords() {
            let Some(idx) = pieces.iter().position(|p| p.contains(&c.i) && p.contains(&c.j)) else {
                continue;
            };
            let piece = pieces.swap_remove(idx);
            let p = piece.iter().position(|&v| v == c.i).unwrap();
            let q = piece.iter().position(|&v| v == c.j).unwrap();
            let (p, q) = (p.min(q), p.max(q));
            let inner = piece[p..=q].to_vec();
            let mut outer = piece[q..].to_vec();
            outer.extend_from_slice(&piece[..=p]);
            pieces.push(inner);
            pieces.push(outer);
        }
        pieces.sort();
        pieces
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.classes.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// All diagonals of an `m`-gon in lexicographic order.
pub fn diagonals(m: usize) -> Vec<Chord> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if !(i == 0 && j == m - 1) {
                out.push(Chord { i, j });
            }
        }
    }
    out
}

/// All chord classes of a centrally symmetric `2n`-gon, sorted.
pub fn symmetric_classes(n: usize) -> Vec<ChordClass> {
    let mut out: Vec<ChordClass> = diagonals(2 * n)
        .into_iter()
        .map(|c| antipodal_class_unchecked(c, n))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every pairwise-compatible selection from `classes`, bucketed by size.
/// When `only` is set, just that size is collected.
fn compatible_sets(classes: &[ChordClass], only: Option<usize>) -> Vec<Vec<Dissection>> {
    let k = classes.len();
    let compat: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| a != b && !classes[a].crosses(&classes[b])).collect())
        .collect();
    let mut buckets: Vec<Vec<Dissection>> = Vec::new();
    let mut chosen = Vec::new();

    fn recurse(
        start: usize,
        chosen: &mut Vec<usize>,
        compat: &[Vec<bool>],
        classes: &[ChordClass],
        only: Option<usize>,
        buckets: &mut Vec<Vec<Dissection>>,
    ) {
        let size = chosen.len();
        if only.is_none_or(|o| o == size) {
            if buckets.len() <= size {
                buckets.resize_with(size + 1, Vec::new);
            }
            buckets[size].push(Dissection {
                classes: chosen.iter().map(|&x| classes[x].clone()).collect(),
            });
        }
        if only.is_some_and(|o| size >= o) {
            return;
        }
        for next in start..classes.len() {
            if chosen.iter().all(|&x| compat[x][next]) {
                chosen.push(next);
                recurse(next + 1, chosen, compat, classes, only, buckets);
                chosen.pop();
            }
        }
    }

    recurse(0, &mut chosen, &compat, classes, only, &mut buckets);
    buckets
}

/// All plain dissections of an `m`-gon using exactly `k` chords, in lexicographic order.
pub fn enum_dissections(m: usize, k: usize) -> Vec<Dissection> {
    if m < 3 || k > m - 3 {
        return Vec::new();
    }
    let classes: Vec<ChordClass> = diagonals(m).into_iter().map(ChordClass::single).collect();
    compatible_sets(&classes, Some(k)).into_iter().nth(k).unwrap_or_default()
}

/// All plain dissections of an `m`-gon, indexed by chord count.
pub fn all_dissections(m: usize) -> Vec<Vec<Dissection>> {
    let classes: Vec<ChordClass> = diagonals(m).into_iter().map(ChordClass::single).collect();
    compatible_sets(&classes, None)
}

/// All centrally symmetric dissections of a `2n`-gon with exactly `k` classes.
pub fn enum_sym_dissections(n: usize, k: usize) -> Vec<Dissection> {
    if n < 1 || k > n - 1 {
        return Vec::new();
    }
    compatible_sets(&symmetric_classes(n), Some(k)).into_iter().nth(k).unwrap_or_default()
}

/// All centrally symmetric dissections of a `2n`-gon, indexed by class count.
pub fn all_sym_dissections(n: usize) -> Vec<Vec<Dissection>> {
    compatible_sets(&symmetric_classes(n), None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Rotations,
    Dihedral,
}

/// Rotations (and optionally reflections) of an `m`-gon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub kind: GroupKind,
    pub m: usize,
}

/// `v ↦ shift + v` or, when `reflect`, `v ↦ shift − v` (mod m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub reflect: bool,
    pub shift: usize,
}

impl GroupElement {
    pub fn vertex(&self, v: usize, m: usize) -> usize {
        if self.reflect {
            (self.shift + m - v % m) % m
        } else {
            (self.shift + v) % m
        }
    }

    /// Where side `s` goes. A reflection sends the side `(s, s+1)` to `(shift−s−1, shift−s)`.
    pub fn slot(&self, s: usize, m: usize) -> usize {
        if self.reflect {
            (self.shift + 2 * m - s - 1) % m
        } else {
            (self.shift + s) % m
        }
    }

    pub fn chord(&self, c: Chord, m: usize) -> Chord {
        Chord::from_ends(self.vertex(c.i, m), self.vertex(c.j, m))
    }

    pub(crate) fn apply(&self, labels: &[u32], chords: &[Chord]) -> (Vec<u32>, Vec<Chord>) {
        let m = labels.len();
        let mut out = vec![0; m];
        for (s, &l) in labels.iter().enumerate() {
            out[self.slot(s, m)] = l;
        }
        let mut cs: Vec<Chord> = chords.iter().map(|&c| self.chord(c, m)).collect();
        cs.sort_unstable();
        (out, cs)
    }
}

impl SymmetryGroup {
    pub fn rotations(m: usize) -> Self {
        SymmetryGroup { kind: GroupKind::Rotations, m }
    }

    pub fn dihedral(m: usize) -> Self {
        SymmetryGroup { kind: GroupKind::Dihedral, m }
    }

    pub fn order(&self) -> usize {
        match self.kind {
            GroupKind::Rotations => self.m,
            GroupKind::Dihedral => 2 * self.m,
        }
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = (0..self.m).map(|shift| GroupElement { reflect: false, shift }).collect();
        if self.kind == GroupKind::Dihedral {
            out.extend((0..self.m).map(|shift| GroupElement { reflect: true, shift }));
        }
        out
    }
}

/// Integer encoding of a labeled dissected polygon: labels, then sorted chord endpoints.
pub fn encode(labels: &[u32], chords: &[Chord]) -> Vec<u32> {
    let mut out = Vec::with_capacity(labels.len() + 2 * chords.len());
    out.extend_from_slice(labels);
    for c in chords {
        out.push(c.i as u32);
        out.push(c.j as u32);
    }
    out
}

/// Lexicographically least (labels, chords) encoding over the orbit of `g`.
pub(crate) fn canonical_parts(labels: &[u32], chords: &[Chord], g: &SymmetryGroup) -> (Vec<u32>, Vec<Chord>) {
    let mut best: Option<(Vec<u32>, (Vec<u32>, Vec<Chord>))> = None;
    for e in g.elements() {
        let (l, c) = e.apply(labels, chords);
        let key = encode(&l, &c);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, (l, c)));
        }
    }
    best.expect("symmetry groups are nonempty").1
}

/// Rebuilds the class structure of a chord set for the given polygon mode.
pub(crate) fn classes_of(chords: &[Chord], m: usize, mode: Mode) -> Dissection {
    match mode {
        Mode::Plain => Dissection::from_classes_unchecked(chords.iter().map(|&c| ChordClass::single(c)).collect()),
        _ => Dissection::from_classes_unchecked(
            chords.iter().map(|&c| antipodal_class_unchecked(c, m / 2)).collect(),
        ),
    }
}

/// The orbit-minimal representative of `(p, d)` under `g`.
pub fn canonicalize(p: &LabeledPolygon, d: &Dissection, g: &SymmetryGroup) -> Result<(LabeledPolygon, Dissection)> {
    if g.m != p.m() {
        return Err(Error::SizeMismatch { expected: p.m(), found: g.m });
    }
    d.validate(p.m(), p.is_centrally_symmetric())?;
    let (labels, chords) = canonical_parts(p.labels(), &d.chords(), g);
    let d = classes_of(&chords, p.m(), p.mode());
    Ok((LabeledPolygon::from_parts_unchecked(labels, p.mode()), d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(i: usize, j: usize, m: usize) -> Chord {
        Chord::new(i, j, m).unwrap()
    }

    /// Exact segment intersection with vertices on the unit circle.
    fn geometric_cross(a: Chord, b: Chord, m: usize) -> bool {
        let pt = |v: usize| {
            let t = 2.0 * std::f64::consts::PI * v as f64 / m as f64;
            (t.cos(), t.sin())
        };
        let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
        if a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j {
            return false;
        }
        let (p1, p2, q1, q2) = (pt(a.i), pt(a.j), pt(b.i), pt(b.j));
        let d1 = orient(p1, p2, q1);
        let d2 = orient(p1, p2, q2);
        let d3 = orient(q1, q2, p1);
        let d4 = orient(q1, q2, p2);
        d1 * d2 < 0.0 && d3 * d4 < 0.0
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(ch(0, 2, 4), ch(1, 3, 4), 4).unwrap());
        assert!(!crosses(ch(0, 2, 6), ch(2, 4, 6), 6).unwrap());
        assert!(crosses(ch(0, 3, 6), ch(1, 5, 6), 6).unwrap());
        assert!(geometric_cross(ch(0, 3, 6), ch(1, 5, 6), 6));
    }

    #[test]
    fn crossing_matches_geometry() {
        for m in 4..=10 {
            let ds = diagonals(m);
            for &a in &ds {
                for &b in &ds {
                    assert_eq!(crosses(a, b, m).unwrap(), geometric_cross(a, b, m), "{a} {b} in {m}-gon");
                }
            }
        }
    }

    #[test]
    fn sides_are_not_chords() {
        assert!(Chord::new(0, 1, 5).is_err());
        assert!(Chord::new(0, 4, 5).is_err());
        assert!(Chord::new(1, 6, 5).is_err());
        assert!(crosses(Chord { i: 0, j: 1 }, ch(0, 2, 5), 5).is_err());
    }

    #[test]
    fn antipodal_examples() {
        assert_eq!(antipodal_class(ch(0, 2, 6), 3).unwrap().members(), &[ch(0, 2, 6), ch(3, 5, 6)]);
        assert_eq!(antipodal_class(ch(0, 3, 6), 3).unwrap().members(), &[ch(0, 3, 6)]);
        assert_eq!(antipodal_class(ch(1, 3, 4), 2).unwrap().members(), &[ch(1, 3, 4)]);
    }

    /// Brute force over every subset of diagonals.
    fn brute_count(m: usize, k: usize) -> usize {
        let ds = diagonals(m);
        (0u32..1 << ds.len())
            .filter(|mask| mask.count_ones() as usize == k)
            .filter(|mask| {
                let chosen: Vec<Chord> = (0..ds.len()).filter(|b| mask >> b & 1 == 1).map(|b| ds[b]).collect();
                chosen.iter().enumerate().all(|(x, a)| chosen[x + 1..].iter().all(|b| !crosses_unchecked(a, b)))
            })
            .count()
    }

    fn brute_sym_count(n: usize, k: usize) -> usize {
        let ds = diagonals(2 * n);
        (0u32..1 << ds.len())
            .filter(|mask| {
                let chosen: Vec<Chord> = (0..ds.len()).filter(|b| mask >> b & 1 == 1).map(|b| ds[b]).collect();
                let closed = chosen.iter().all(|c| chosen.contains(&c.antipode(n)));
                let ok = chosen.iter().enumerate().all(|(x, a)| chosen[x + 1..].iter().all(|b| !crosses_unchecked(a, b)));
                let classes = chosen.iter().filter(|c| c.is_diameter(n)).count()
                    + chosen.iter().filter(|c| !c.is_diameter(n)).count() / 2;
                closed && ok && classes == k
            })
            .count()
    }

    #[test]
    fn dissection_counts() {
        assert_eq!(enum_dissections(5, 1).len(), 5);
        assert_eq!(enum_dissections(5, 2).len(), 5);
        assert_eq!(enum_dissections(6, 3).len(), 14);
        assert_eq!(brute_count(5, 1), 5);
        assert_eq!(brute_count(5, 2), 5);
        assert_eq!(brute_count(6, 3), 14);
        assert!(enum_dissections(5, 3).is_empty());
        assert!(enum_dissections(2, 0).is_empty());
        for m in 4..=8 {
            for k in 0..=m - 3 {
                assert_eq!(enum_dissections(m, k).len(), brute_count(m, k), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn symmetric_dissection_counts() {
        assert_eq!(enum_sym_dissections(3, 1).len(), 6);
        assert_eq!(enum_sym_dissections(3, 2).len(), 6);
        assert_eq!(enum_sym_dissections(2, 1).len(), 2);
        assert_eq!(enum_sym_dissections(1, 0).len(), 1);
        for n in 2..=4 {
            for k in 0..n {
                assert_eq!(enum_sym_dissections(n, k).len(), brute_sym_count(n, k), "n={n} k={k}");
            }
        }
        for n in 1..=5 {
            for d in all_sym_dissections(n).iter().flatten() {
                let chords = d.chords();
                assert!(chords.iter().all(|c| chords.contains(&c.antipode(n))));
            }
        }
    }

    fn catalan(k: usize) -> usize {
        let mut c = vec![1usize; k + 1];
        for x in 1..=k {
            c[x] = (0..x).map(|y| c[y] * c[x - 1 - y]).sum();
        }
        c[k]
    }

    /// Little Schröder numbers by the dissection recurrence on the root side.
    fn all_dissections_oracle(m: usize) -> usize {
        // d[p] = number of dissections of a (p+1)-gon seen as a root side with p
        // descending sides, where each child is a side (1 way) or a sub-polygon.
        let mut d = vec![0usize; m.max(2)];
        d[1] = 1;
        for p in 2..m {
            // sequences of >= 2 children composing p leaves, each child a leaf or subtree
            let mut seq = vec![vec![0usize; p + 1]; p + 1];
            seq[0][0] = 1;
            for parts in 1..=p {
                for total in 1..=p {
                    let mut acc = 0;
                    for first in 1..=total {
                        acc += seq[parts - 1][total - first] * d[first];
                    }
                    seq[parts][total] = acc;
                }
            }
            d[p] = (2..=p).map(|parts| seq[parts][p]).sum();
        }
        d[m - 1]
    }

    #[test]
    fn totals_match_oracles() {
        for m in 3..=9 {
            let total: usize = all_dissections(m).iter().map(Vec::len).sum();
            assert_eq!(total, all_dissections_oracle(m), "m={m}");
            assert_eq!(enum_dissections(m, m - 3).len(), catalan(m - 2));
        }
        assert_eq!(all_dissections_oracle(6), 45);
    }

    #[test]
    fn canonicalize_examples() {
        let tri = LabeledPolygon::plain(vec![2, 3, 1]).unwrap();
        let (p, d) = canonicalize(&tri, &Dissection::empty(), &SymmetryGroup::rotations(3)).unwrap();
        assert_eq!(p.labels(), &[1, 2, 3]);
        assert!(d.is_empty());

        let hex = LabeledPolygon::symmetric(vec![2, 1, 3, 2, 1, 3]).unwrap();
        let (p, _) = canonicalize(&hex, &Dissection::empty(), &SymmetryGroup::rotations(6)).unwrap();
        assert_eq!(p.labels(), &[1, 3, 2, 1, 3, 2]);

        // Enumerate the full rotation orbit by hand and take its minimum.
        let hex = LabeledPolygon::symmetric(vec![1, 2, 3, 1, 2, 3]).unwrap();
        let d = Dissection::symmetric([ch(1, 3, 6), ch(4, 0, 6)], 3).unwrap();
        let mut orbit = Vec::new();
        for r in 0..6 {
            let labels: Vec<u32> = (0..6).map(|s| hex.labels()[(s + 6 - r) % 6]).collect();
            let mut chords: Vec<Chord> = d.chords().iter().map(|c| Chord::from_ends((c.i + r) % 6, (c.j + r) % 6)).collect();
            chords.sort();
            orbit.push(encode(&labels, &chords));
        }
        let min = orbit.iter().min().unwrap().clone();
        let (p, d2) = canonicalize(&hex, &d, &SymmetryGroup::rotations(6)).unwrap();
        assert_eq!(encode(p.labels(), &d2.chords()), min);
        assert_eq!(p.labels(), &[1, 2, 3, 1, 2, 3]);
        assert_eq!(d2.chords(), vec![ch(0, 4, 6), ch(1, 3, 6)]);
        // rotation by -1 gives labels (2,3,1,2,3,1) and the same place for the chords
        assert!(orbit.contains(&encode(&[2, 3, 1, 2, 3, 1], &[ch(0, 2, 6), ch(3, 5, 6)])));
    }

    #[test]
    fn canonicalize_rejects_mismatch() {
        let tri = LabeledPolygon::plain(vec![1, 2, 3]).unwrap();
        assert!(matches!(
            canonicalize(&tri, &Dissection::empty(), &SymmetryGroup::rotations(4)),
            Err(Error::SizeMismatch { .. })
        ));
        let sq = LabeledPolygon::plain(vec![1, 2, 3, 4]).unwrap();
        let d = Dissection::from_classes_unchecked(vec![ChordClass::single(Chord { i: 0, j: 2 }), ChordClass::single(Chord { i: 1, j: 3 })]);
        assert!(canonicalize(&sq, &d, &SymmetryGroup::dihedral(4)).is_err());
    }

    #[test]
    fn polygon_validation() {
        assert!(LabeledPolygon::symmetric(vec![1, 2, 1, 3]).is_err());
        assert!(LabeledPolygon::symmetric(vec![1, 2, 3]).is_err());
        assert!(LabeledPolygon::plain(vec![1, 1, 2]).is_err());
        assert!(LabeledPolygon::barred(vec![1, 4, 3, 2, 1, 6]).is_err());
        assert!(LabeledPolygon::barred(vec![1, 5, 3, 4, 2, 6]).is_ok());
        assert!(LabeledPolygon::symmetric(vec![1, 1]).is_ok());
        assert!(Dissection::symmetric([ch(0, 2, 6)], 3).is_err());
    }

    #[test]
    fn pieces_of_a_hexagon_vertex() {
        let d = Dissection::symmetric([ch(0, 3, 6), ch(0, 2, 6), ch(3, 5, 6)], 3).unwrap();
        let pieces = d.pieces(6);
        assert_eq!(pieces.len(), 4);
        assert!(pieces.iter().all(|p| p.len() == 3));
    }
}
