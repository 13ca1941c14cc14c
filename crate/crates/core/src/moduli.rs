//! Twists, tiles and the cell complexes of `M̄₀ⁿ(ℝ)` and `Z̄ⁿ`.
//!
//! A tile is a labeled polygon up to its space's symmetry group: plain
//! `n`-gons up to rotation and reflection for `M̄₀ⁿ(ℝ)`, centrally symmetric
//! `2n`-gons up to rotation for `Z̄ⁿ`. A face of a tile is a dissection of its
//! polygon, and two labeled dissected polygons are the same cell when a
//! sequence of twists along their chord classes, together with symmetries,
//! carries one to the other.
//!
//! Twist conventions:
//! - plain chord `(i, j)`: the sides `i..j` and the chords inside that arc are
//!   reflected across the chord;
//! - antipodal pair: both outer pieces (the ones cut off away from the
//!   center) are reflected across their own chord;
//! - diameter `(i, i + n)`: the whole polygon is reflected by `v ↦ 2i + n − v`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::complex::{CellComplex, Incidence, Traversal};
use crate::dissect::{
    all_dissections, all_sym_dissections, bar, canonical_parts, classes_of, encode, Chord,
    ChordClass, Dissection, GroupElement, LabeledPolygon, Mode, SymmetryGroup,
};
use crate::{factorial, Error, Result};

/// Which moduli space (or cover) a complex models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Space {
    /// `M̄₀ⁿ(ℝ)`: plain `n`-gons, dihedral symmetry.
    M,
    /// `Z̄ⁿ`: centrally symmetric `2n`-gons, rotations only.
    Z,
    /// Barred labelings `{i, ī}` on antipodal sides of a `2n`-gon, rotations only.
    Cover,
}

impl Space {
    pub fn mode(&self) -> Mode {
        match self {
            Space::M => Mode::Plain,
            Space::Z => Mode::Symmetric,
            Space::Cover => Mode::Barred,
        }
    }

    pub fn sides(&self, n: usize) -> usize {
        match self {
            Space::M => n,
            Space::Z | Space::Cover => 2 * n,
        }
    }

    pub fn group(&self, n: usize) -> SymmetryGroup {
        match self {
            Space::M => SymmetryGroup::dihedral(n),
            Space::Z | Space::Cover => SymmetryGroup::rotations(2 * n),
        }
    }

    /// Dimension of the space tiled by `n`-point polygons.
    pub fn top_dim(&self, n: usize) -> usize {
        match self {
            Space::M => n - 3,
            Space::Z | Space::Cover => n - 1,
        }
    }

    fn min_n(&self) -> usize {
        match self {
            Space::M => 3,
            Space::Z | Space::Cover => 1,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Space::M => "M",
            Space::Z => "Z",
            Space::Cover => "cover",
        }
    }
}

/// Resource caps for complex assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_m: usize,
    pub max_z: usize,
    pub max_cover: usize,
    /// Hard cap on states visited while closing a single orbit.
    pub orbit_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_m: 6, max_z: 5, max_cover: 4, orbit_cap: 200_000 }
    }
}

impl Budget {
    fn check(&self, space: Space, n: usize) -> Result<()> {
        if n < space.min_n() {
            return Err(Error::OutOfRange(format!("{}-space needs n >= {}, got {n}", space.name(), space.min_n())));
        }
        let (cap, flag) = match space {
            Space::M => (self.max_m, "CYCLOHEDRA_CAP_M"),
            Space::Z => (self.max_z, "CYCLOHEDRA_CAP_Z"),
            Space::Cover => (self.max_cover, "CYCLOHEDRA_CAP_COVER"),
        };
        if n > cap {
            return Err(Error::Budget {
                what: format!("{}-space n={n} exceeds cap {cap}", space.name()),
                flag: format!("--cap or {flag}"),
            });
        }
        Ok(())
    }
}

/// A top cell: a labeled polygon canonical under its space's symmetry group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tile {
    pub polygon: LabeledPolygon,
}

/// A cell: the orbit-minimal labeled dissected polygon of its twist orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellClass {
    pub polygon: LabeledPolygon,
    pub dissection: Dissection,
    pub codim: usize,
}

impl CellClass {
    pub fn key(&self) -> Vec<u32> {
        encode(self.polygon.labels(), &self.dissection.chords())
    }
}

/// Reflection of arcs in place, or a global symmetry.
#[derive(Clone, Debug)]
enum Move {
    Global(GroupElement),
    /// `(start vertex, length in sides)`; each arc is reflected across the chord joining its ends.
    Arcs(Vec<(usize, usize)>),
}

impl Move {
    fn vertex_in_arc(v: usize, start: usize, len: usize, m: usize) -> Option<usize> {
        let off = (v + m - start) % m;
        (off <= len).then_some(off)
    }

    fn chord(&self, c: Chord, m: usize) -> Chord {
        match self {
            Move::Global(g) => g.chord(c, m),
            Move::Arcs(arcs) => {
                for &(start, len) in arcs {
                    if let (Some(a), Some(b)) = (
                        Self::vertex_in_arc(c.i(), start, len, m),
                        Self::vertex_in_arc(c.j(), start, len, m),
                    ) {
                        return Chord::from_ends((start + len - a) % m, (start + len - b) % m);
                    }
                }
                c
            }
        }
    }

    fn slot(&self, s: usize, m: usize) -> usize {
        match self {
            Move::Global(g) => g.slot(s, m),
            Move::Arcs(arcs) => {
                for &(start, len) in arcs {
                    let off = (s + m - start) % m;
                    if off < len {
                        return (start + len - 1 - off) % m;
                    }
                }
                s
            }
        }
    }

    fn apply(&self, state: &State) -> State {
        let m = state.labels.len();
        let mut labels = vec![0; m];
        for (s, &l) in state.labels.iter().enumerate() {
            labels[self.slot(s, m)] = l;
        }
        let mut chords: Vec<Chord> = state.chords.iter().map(|&c| self.chord(c, m)).collect();
        chords.sort_unstable();
        let markers = state
            .markers
            .iter()
            .map(|class| {
                let mut cs: Vec<Chord> = class.iter().map(|&c| self.chord(c, m)).collect();
                cs.sort_unstable();
                cs
            })
            .collect();
        State { labels, chords, markers }
    }
}

/// The twist along one chord class, for a polygon of the given mode.
fn twist_move(class: &ChordClass, m: usize, mode: Mode) -> Move {
    match mode {
        Mode::Plain => {
            let c = class.members()[0];
            Move::Arcs(vec![(c.i(), c.j() - c.i())])
        }
        Mode::Symmetric | Mode::Barred => {
            let n = m / 2;
            let first = class.members()[0];
            if class.is_singleton() && first.is_diameter(n) {
                Move::Global(GroupElement { reflect: true, shift: (2 * first.i() + n) % m })
            } else {
                Move::Arcs(
                    class
                        .members()
                        .iter()
                        .map(|c| {
                            let len = c.j() - c.i();
                            if len < n {
                                (c.i(), len)
                            } else {
                                (c.j(), m - len)
                            }
                        })
                        .collect(),
                )
            }
        }
    }
}

/// A labeled dissected polygon with optional marker classes carried along by moves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct State {
    labels: Vec<u32>,
    chords: Vec<Chord>,
    markers: Vec<Vec<Chord>>,
}

impl State {
    fn face_key(&self) -> Vec<u32> {
        encode(&self.labels, &self.chords)
    }

    fn full_key(&self) -> Vec<u32> {
        let mut k = self.face_key();
        for class in &self.markers {
            k.push(u32::MAX);
            for c in class {
                k.push(c.i() as u32);
                k.push(c.j() as u32);
            }
        }
        k
    }
}

struct Orbit {
    key: Vec<u32>,
    states: Vec<State>,
}

/// Breadth-first closure of `start` under twists along the classes present in
/// each visited state and under the symmetry generators.
fn orbit(space: Space, start: State, cap: usize) -> Result<Orbit> {
    let m = start.labels.len();
    let mode = space.mode();
    let mut generators = vec![Move::Global(GroupElement { reflect: false, shift: 1 % m })];
    if space == Space::M {
        generators.push(Move::Global(GroupElement { reflect: true, shift: 0 }));
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut states = Vec::new();
    seen.insert(start.full_key());
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        let dissection = classes_of(&state.chords, m, mode);
        let twists = dissection.classes().iter().map(|c| twist_move(c, m, mode));
        for mv in generators.iter().cloned().chain(twists) {
            let next = mv.apply(&state);
            if seen.insert(next.full_key()) {
                if seen.len() > cap {
                    return Err(Error::Budget {
                        what: format!("orbit closure exceeded {cap} states"),
                        flag: "Budget::orbit_cap".into(),
                    });
                }
                queue.push_back(next);
            }
        }
        states.push(state);
    }
    let key = states.iter().map(State::face_key).min().expect("orbit contains its start");
    Ok(Orbit { key, states })
}

fn check_polygon(space: Space, p: &LabeledPolygon, d: &Dissection) -> Result<()> {
    if p.mode() != space.mode() {
        return Err(Error::Precondition(format!("{:?} polygon used in {}-space", p.mode(), space.name())));
    }
    d.validate(p.m(), p.is_centrally_symmetric())
}

fn decode(key: &[u32], m: usize, mode: Mode) -> (LabeledPolygon, Dissection) {
    let labels = key[..m].to_vec();
    let chords: Vec<Chord> = key[m..].chunks(2).map(|c| Chord::from_ends(c[0] as usize, c[1] as usize)).collect();
    (LabeledPolygon::from_parts_unchecked(labels, mode), classes_of(&chords, m, mode))
}

/// Twist of a plain polygon along `c`, canonical under the dihedral group.
pub fn twist_plain(p: &LabeledPolygon, d: &Dissection, c: Chord) -> Result<(LabeledPolygon, Dissection)> {
    let (labels, chords) = twist_plain_raw(p, d, c)?;
    let (labels, chords) = canonical_parts(&labels, &chords, &SymmetryGroup::dihedral(p.m()));
    Ok((LabeledPolygon::from_parts_unchecked(labels, Mode::Plain), classes_of(&chords, p.m(), Mode::Plain)))
}

/// The same twist before canonicalization: sides `i..j` and inner chords reflected.
pub fn twist_plain_raw(p: &LabeledPolygon, d: &Dissection, c: Chord) -> Result<(Vec<u32>, Vec<Chord>)> {
    check_polygon(Space::M, p, d)?;
    let class = ChordClass::single(c);
    if !d.contains(&class) {
        return Err(Error::NotInDissection(class.to_string()));
    }
    let state = State { labels: p.labels().to_vec(), chords: d.chords(), markers: vec![] };
    let next = twist_move(&class, p.m(), Mode::Plain).apply(&state);
    Ok((next.labels, next.chords))
}

/// Symmetric twist along a class of a centrally symmetric polygon, canonical under rotations.
pub fn twist_sym(p: &LabeledPolygon, d: &Dissection, cc: &ChordClass) -> Result<(LabeledPolygon, Dissection)> {
    let (labels, chords) = twist_sym_raw(p, d, cc)?;
    let (labels, chords) = canonical_parts(&labels, &chords, &SymmetryGroup::rotations(p.m()));
    Ok((LabeledPolygon::from_parts_unchecked(labels, p.mode()), classes_of(&chords, p.m(), p.mode())))
}

pub fn twist_sym_raw(p: &LabeledPolygon, d: &Dissection, cc: &ChordClass) -> Result<(Vec<u32>, Vec<Chord>)> {
    if !p.is_centrally_symmetric() {
        return Err(Error::Precondition("symmetric twist needs a centrally symmetric polygon".into()));
    }
    d.validate(p.m(), true)?;
    if !d.contains(cc) {
        return Err(Error::NotInDissection(cc.to_string()));
    }
    let state = State { labels: p.labels().to_vec(), chords: d.chords(), markers: vec![] };
    let next = twist_move(cc, p.m(), p.mode()).apply(&state);
    Ok((next.labels, next.chords))
}

/// All tiles of the space for `n` marked points, sorted.
pub fn tiles(space: Space, n: usize) -> Result<Vec<Tile>> {
    if n < space.min_n() {
        return Err(Error::OutOfRange(format!("{}-space needs n >= {}, got {n}", space.name(), space.min_n())));
    }
    if n > 10 {
        return Err(Error::Budget { what: format!("tile enumeration for n={n}"), flag: "n <= 10".into() });
    }
    let group = space.group(n);
    let labelings: Vec<Vec<u32>> = match space {
        Space::M => (1..=n as u32).permutations(n).collect(),
        Space::Z => (1..=n as u32)
            .permutations(n)
            .map(|p| p.iter().chain(p.iter()).copied().collect())
            .collect(),
        Space::Cover => (1..=n as u32)
            .permutations(n)
            .flat_map(|p| {
                (0u32..1 << n).map(move |bars| {
                    let half: Vec<u32> = p
                        .iter()
                        .enumerate()
                        .map(|(s, &l)| if bars >> s & 1 == 1 { bar(l, n) } else { l })
                        .collect();
                    half.iter().copied().chain(half.iter().map(|&l| bar(l, n))).collect()
                })
            })
            .collect(),
    };
    let mut out: Vec<Tile> = labelings
        .into_iter()
        .map(|l| {
            let (labels, _) = canonical_parts(&l, &[], &group);
            Tile { polygon: LabeledPolygon::from_parts_unchecked(labels, space.mode()) }
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The cell a labeled dissected polygon belongs to.
pub fn cell_class_of(p: &LabeledPolygon, d: &Dissection, space: Space) -> Result<CellClass> {
    check_polygon(space, p, d)?;
    let state = State { labels: p.labels().to_vec(), chords: d.chords(), markers: vec![] };
    let orbit = orbit(space, state, Budget::default().orbit_cap)?;
    let (polygon, dissection) = decode(&orbit.key, p.m(), p.mode());
    Ok(CellClass { codim: dissection.codim(), polygon, dissection })
}

/// Builds the complex for `n` points under the default budget.
pub fn build_complex(space: Space, n: usize) -> Result<CellComplex> {
    build_complex_with(space, n, &Budget::default())
}

pub fn build_complex_with(space: Space, n: usize, budget: &Budget) -> Result<CellComplex> {
    budget.check(space, n)?;
    let tiles: Vec<(Vec<u32>, Dissection)> = tiles(space, n)?
        .into_iter()
        .map(|t| (t.polygon.labels().to_vec(), Dissection::empty()))
        .collect();
    assemble(space, n, &tiles, budget)
}

/// The barred cover of `Z̄ⁿ` under the default budget.
pub fn cover_complex(n: usize) -> Result<CellComplex> {
    build_complex(Space::Cover, n)
}

/// Tiles of the cover divided by tiles of `Z̄ⁿ`.
pub fn cover_fold(cover: &CellComplex, n: usize) -> u64 {
    cover.tile_count() as u64 / factorial(n as u64 - 1)
}

fn all_faces(space: Space, n: usize) -> Vec<Dissection> {
    let buckets = match space {
        Space::M => all_dissections(n),
        Space::Z | Space::Cover => all_sym_dissections(n),
    };
    buckets.into_iter().flatten().collect()
}

/// Assembles a complex whose top cells are the given labeled dissected
/// polygons (`base` empty for full tiles, nonempty for strata). The faces of
/// a top cell are the dissections containing its base. Output ordering is
/// canonical and does not depend on the order of `tops`.
pub fn assemble(space: Space, n: usize, tops: &[(Vec<u32>, Dissection)], budget: &Budget) -> Result<CellComplex> {
    let m = space.sides(n);
    let mode = space.mode();
    let faces = all_faces(space, n);
    let base_codim = tops.first().map_or(0, |t| t.1.codim());
    if tops.iter().any(|t| t.1.codim() != base_codim) {
        return Err(Error::Precondition("top cells must share a codimension".into()));
    }
    let top_dim = space.top_dim(n) - base_codim;

    // class of every face slot
    let mut memo: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
    let mut class_of = |labels: &[u32], chords: Vec<Chord>| -> Result<Vec<u32>> {
        let key = encode(labels, &chords);
        if let Some(k) = memo.get(&key) {
            return Ok(k.clone());
        }
        let orbit = orbit(space, State { labels: labels.to_vec(), chords, markers: vec![] }, budget.orbit_cap)?;
        for s in &orbit.states {
            memo.insert(s.face_key(), orbit.key.clone());
        }
        Ok(orbit.key)
    };

    struct Top {
        key: Vec<u32>,
        labels: Vec<u32>,
        slots: Vec<(Dissection, usize, Vec<u32>)>,
    }
    let mut top_cells = Vec::with_capacity(tops.len());
    for (labels, base) in tops {
        if labels.len() != m {
            return Err(Error::SizeMismatch { expected: m, found: labels.len() });
        }
        base.validate(m, mode != Mode::Plain)?;
        let key = class_of(labels, base.chords())?;
        let (polygon, base) = decode(&key, m, mode);
        let labels = polygon.labels();
        let mut slots = Vec::new();
        for d in faces.iter().filter(|d| base.classes().iter().all(|c| d.contains(c))) {
            let dim = top_dim - (d.codim() - base_codim);
            let key = class_of(labels, d.chords())?;
            slots.push((d.clone(), dim, key));
        }
        slots.sort_by_key(|a| (a.0.codim(), a.0.encode()));
        top_cells.push(Top { key, labels: labels.to_vec(), slots });
    }
    top_cells.sort_by(|a, b| a.key.cmp(&b.key));
    top_cells.dedup_by(|a, b| a.key == b.key);

    let mut cell_keys: Vec<BTreeMap<Vec<u32>, usize>> = vec![BTreeMap::new(); top_dim + 1];
    for t in &top_cells {
        for (_, dim, key) in &t.slots {
            cell_keys[*dim].entry(key.clone()).or_insert(0);
        }
    }
    for level in cell_keys.iter_mut() {
        for (x, v) in level.values_mut().enumerate() {
            *v = x;
        }
    }

    let mut incidences = Vec::new();
    for (t, top) in top_cells.iter().enumerate() {
        let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
        let placed: Vec<(usize, usize)> = top.slots.iter().map(|(_, dim, key)| (*dim, cell_keys[*dim][key])).collect();
        for &p in &placed {
            *mult.entry(p).or_insert(0) += 1;
        }
        for (slot, ((d, _, _), &(dim, cell))) in top.slots.iter().zip(&placed).enumerate() {
            incidences.push(Incidence { tile: t, slot, dim, cell, mult: mult[&(dim, cell)], face: d.encode() });
        }
    }

    let mut complex = CellComplex {
        top_dim,
        mode,
        sides: m,
        cells: cell_keys.iter().map(|level| level.keys().cloned().collect()).collect(),
        incidences,
        boundaries: Vec::new(),
    };
    if top_dim == 2 {
        let tops: Vec<(Vec<u32>, Vec<Dissection>)> = top_cells
            .iter()
            .map(|t| (t.labels.clone(), t.slots.iter().map(|s| s.0.clone()).collect()))
            .collect();
        complex.boundaries = boundary_traversals(space, &complex, &tops, base_codim, budget)?;
    }
    Ok(complex)
}

/// Walks each 2-cell's boundary and orients every pass against a reference
/// direction chosen per edge cell. The reference comes from carrying the
/// endpoint classes of one pass through the edge's whole twist orbit.
fn boundary_traversals(
    space: Space,
    complex: &CellComplex,
    tops: &[(Vec<u32>, Vec<Dissection>)],
    base_codim: usize,
    budget: &Budget,
) -> Result<Vec<Vec<Traversal>>> {
    // (edge cell, tile, slot, from class, to class)
    let mut passes: Vec<Vec<(usize, usize, Vec<Chord>, Vec<Chord>)>> = Vec::new();
    for (t, (_, slots)) in tops.iter().enumerate() {
        let incs: Vec<&Incidence> = complex.incidences.iter().filter(|i| i.tile == t).collect();
        let edge_slots: Vec<usize> = (0..slots.len()).filter(|&s| slots[s].codim() == base_codim + 1).collect();
        let base = &slots[0];
        let extra = |d: &Dissection| -> Vec<ChordClass> {
            d.classes().iter().filter(|c| !base.contains(c)).cloned().collect()
        };
        let mut endpoints: BTreeMap<ChordClass, Vec<ChordClass>> = BTreeMap::new();
        for d in slots.iter().filter(|d| d.codim() == base_codim + 2) {
            let pair = extra(d);
            endpoints.entry(pair[0].clone()).or_default().push(pair[1].clone());
            endpoints.entry(pair[1].clone()).or_default().push(pair[0].clone());
        }
        let slot_of: HashMap<ChordClass, usize> =
            edge_slots.iter().map(|&s| (extra(&slots[s]).remove(0), s)).collect();
        if endpoints.values().any(|v| v.len() != 2) || endpoints.len() != edge_slots.len() {
            return Err(Error::Precondition(format!("tile {t} is not a polygon")));
        }
        let (first, ends) = endpoints.iter().next().expect("2-cells have edges");
        let mut cycle = Vec::new();
        let (mut prev, mut cur) = (ends[0].clone(), first.clone());
        loop {
            let e = &endpoints[&cur];
            let next = if e[0] == prev { e[1].clone() } else { e[0].clone() };
            let slot = slot_of[&cur];
            let edge = incs[slot].cell;
            cycle.push((edge, slot, prev.members().to_vec(), next.members().to_vec()));
            prev = cur;
            cur = next;
            if cur == *first {
                break;
            }
        }
        if cycle.len() != edge_slots.len() {
            return Err(Error::Precondition(format!("boundary of tile {t} is not a single cycle")));
        }
        passes.push(cycle);
    }

    // reference direction per edge cell
    let mut reference: HashMap<usize, HashMap<Vec<u32>, HashSet<(Vec<Chord>, Vec<Chord>)>>> = HashMap::new();
    let mut out = Vec::with_capacity(passes.len());
    for (t, cycle) in passes.iter().enumerate() {
        let labels = &tops[t].0;
        let mut traversals = Vec::with_capacity(cycle.len());
        for (edge, slot, from, to) in cycle {
            let chords = tops[t].1[*slot].chords();
            if !reference.contains_key(edge) {
                let start = State { labels: labels.clone(), chords: chords.clone(), markers: vec![from.clone(), to.clone()] };
                let orbit = orbit(space, start, budget.orbit_cap)?;
                let mut frames: HashMap<Vec<u32>, HashSet<(Vec<Chord>, Vec<Chord>)>> = HashMap::new();
                for s in orbit.states {
                    let mut ms = s.markers.clone().into_iter();
                    let (a, b) = (ms.next().unwrap(), ms.next().unwrap());
                    frames.entry(s.face_key()).or_default().insert((a, b));
                }
                reference.insert(*edge, frames);
            }
            let frames = &reference[edge][&encode(labels, &chords)];
            let fwd = frames.contains(&(from.clone(), to.clone()));
            let bwd = frames.contains(&(to.clone(), from.clone()));
            if fwd == bwd {
                return Err(Error::Precondition(format!("edge cell {edge} is identified with itself reversed")));
            }
            traversals.push(Traversal { slot: *slot, edge: *edge, forward: fwd });
        }
        out.push(traversals);
    }
    Ok(out)
}

/// Labels on the outer side of a chord class: the sides cut off by the
/// pair's chords, or all labels for a diameter.
fn separated_labels(labels: &[u32], class: &ChordClass) -> Vec<u32> {
    let m = labels.len();
    let n = m / 2;
    let c = class.members()[0];
    let mut out: Vec<u32> = if c.is_diameter(n) {
        labels[..n].to_vec()
    } else {
        let len = c.j() - c.i();
        let (start, len) = if len < n { (c.i(), len) } else { (c.j(), m - len) };
        (0..len).map(|o| labels[(start + o) % m]).collect()
    };
    out.sort_unstable();
    out
}

/// One product stratum of `Z̄ⁿ`: the closure of the codim-1 cells whose
/// distinguished class cuts off exactly the sides labeled by `labels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub labels: Vec<u32>,
    pub complex: CellComplex,
}

impl Stratum {
    pub fn cell_counts(&self) -> Vec<u64> {
        self.complex.cell_counts()
    }
}

/// Strata of `Z̄ⁿ` coming from codim-`k` minimal elements: one per
/// `(k+1)`-subset of labels that some codim-1 cell actually separates.
pub fn strata_census(n: usize, k: usize) -> Result<Vec<Stratum>> {
    strata_census_with(n, k, &Budget::default())
}

pub fn strata_census_with(n: usize, k: usize, budget: &Budget) -> Result<Vec<Stratum>> {
    if k < 1 || k + 1 > n {
        return Err(Error::OutOfRange(format!("strata need 1 <= k <= n-1, got n={n} k={k}")));
    }
    budget.check(Space::Z, n)?;
    let ambient = build_complex_with(Space::Z, n, budget)?;
    let m = 2 * n;
    let mut groups: BTreeMap<Vec<u32>, Vec<(Vec<u32>, Dissection)>> = BTreeMap::new();
    for key in &ambient.cells[ambient.top_dim - 1] {
        let (polygon, d) = decode(key, m, Mode::Symmetric);
        let class = &d.classes()[0];
        let sep = separated_labels(polygon.labels(), class);
        if sep.len() == k + 1 {
            groups.entry(sep).or_default().push((polygon.labels().to_vec(), d));
        }
    }
    groups
        .into_iter()
        .map(|(labels, tops)| Ok(Stratum { labels, complex: assemble(Space::Z, n, &tops, budget)? }))
        .collect()
}

/// f-vector (cells by dimension) of a product of two cell complexes.
pub fn product_counts(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (x, &p) in a.iter().enumerate() {
        for (y, &q) in b.iter().enumerate() {
            out[x + y] += p * q;
        }
    }
    out
}
