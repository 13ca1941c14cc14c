//! Verification suites and the machine-readable report.
//!
//! Each entry compares a computed value, rendered as a string, with its
//! target. `max_n` clamps the size range of every entry; an entry whose
//! fixed size exceeds it is left out.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::complex::{classify_surface, codim_incidence, euler, is_connected, pseudomanifold, CellComplex};
use crate::dissect::{
    all_dissections, all_sym_dissections, canonicalize, crosses, diagonals, Chord, Dissection, LabeledPolygon,
    SymmetryGroup,
};
use crate::moduli::{
    assemble, build_complex, cover_complex, cover_fold, product_counts, strata_census, tiles, twist_plain_raw,
    twist_sym_raw, Budget, Space,
};
use crate::nc::{nc_a_counts, nc_b_counts, verify_identity_a, verify_identity_b};
use crate::nested::{
    building_set_count, chamber_count, poset_iso, tubing_poset, ArrangementDescriptor, Diagram,
};
use crate::poset::{associahedron, cyclohedron};
use crate::{binomial, factorial, Result};

pub const SUITES: &[&str] = &[
    "polytope",
    "tiling",
    "complex",
    "incidence",
    "strata",
    "truncation",
    "arrangement",
    "nc",
    "nc-sym",
    "cover",
    "property",
];

/// Where a target value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A value stated in the literature on these spaces.
    Published,
    /// A value produced by an independent brute-force count or closed formula.
    Derived,
    /// A value that holds by construction.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Entry {
    pub suite: String,
    pub name: String,
    pub target: String,
    pub provenance: Provenance,
    pub computed: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Suites to run; empty means all. The name `none` selects nothing.
    pub suites: Vec<String>,
    pub max_n: Option<usize>,
    pub seed: u64,
}

struct Runner {
    suite: &'static str,
    max_n: usize,
    entries: Vec<Entry>,
}

impl Runner {
    /// The upper end of a size range, clamped by `max_n`.
    fn upto(&self, default: usize) -> usize {
        default.min(self.max_n)
    }

    fn fits(&self, n: usize) -> bool {
        n <= self.max_n
    }

    fn check(&mut self, name: &str, target: &str, provenance: Provenance, f: impl FnOnce() -> Result<String>) {
        let start = Instant::now();
        let computed = f().unwrap_or_else(|e| format!("error: {e}"));
        self.entries.push(Entry {
            suite: self.suite.to_string(),
            name: name.to_string(),
            target: target.to_string(),
            provenance,
            pass: computed == target,
            computed,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }

    /// An entry whose target is `true`: a predicate over a range.
    fn holds(&mut self, name: &str, provenance: Provenance, f: impl FnOnce() -> Result<bool>) {
        self.check(name, "true", provenance, || f().map(|b| b.to_string()));
    }
}

fn list(v: &[u64]) -> String {
    format!("[{}]", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
}

fn f_of(p: Result<crate::poset::FacePoset>) -> Result<String> {
    Ok(p?.f_vector().to_string())
}

fn polytope(r: &mut Runner) {
    use Provenance::*;
    if r.fits(4) {
        r.check("f(K4)", "[5,5,1]", Published, || f_of(associahedron(4)));
        r.check("f(W4)", "[20,30,12,1]", Derived, || f_of(cyclohedron(4)));
    }
    if r.fits(3) {
        r.check("f(W3)", "[6,6,1]", Published, || f_of(cyclohedron(3)));
    }
    if r.fits(5) {
        r.check("f(K5)", "[14,21,9,1]", Derived, || f_of(associahedron(5)));
    }
    let top = r.upto(8);
    r.holds(&format!("vertices of K_n are Catalan numbers, n<={top}"), Derived, || {
        for n in 2..=top {
            let catalan = binomial(2 * (n as u64 - 1), n as u64 - 1) / n as u64;
            if associahedron(n)?.f_vector().0[0] != catalan {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let top = r.upto(7);
    r.holds(&format!("vertices of W_n are central binomials, n<={top}"), Derived, || {
        for n in 1..=top {
            if cyclohedron(n)?.f_vector().0[0] != binomial(2 * (n as u64 - 1), n as u64 - 1) {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn tiling(r: &mut Runner) {
    let top = r.upto(5);
    r.holds(&format!("|tiles(Z,n)| = (n-1)!, n<={top}"), Provenance::Published, || {
        for n in 1..=top {
            if tiles(Space::Z, n)?.len() as u64 != factorial(n as u64 - 1) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let top = r.upto(6);
    r.holds(&format!("|tiles(M,n)| = (n-1)!/2, n<={top}"), Provenance::Published, || {
        for n in 3..=top {
            if tiles(Space::M, n)?.len() as u64 != factorial(n as u64 - 1) / 2 {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

/// Cells by dimension, Euler characteristic and topological type.
fn summary(c: &CellComplex) -> Result<String> {
    let mut s = format!("cells {} euler {}", list(&c.cell_counts()), euler(c));
    match c.top_dim {
        1 if is_connected(c) && pseudomanifold(c) => s.push_str(" circle"),
        2 => s.push_str(&format!(" {}", classify_surface(c)?)),
        _ => s.push_str(&format!(" pseudomanifold {}", pseudomanifold(c))),
    }
    Ok(s)
}

fn complex(r: &mut Runner) {
    use Provenance::*;
    let cases: [(Space, usize, &str, &str, Provenance); 5] = [
        (Space::Z, 2, "Z2", "cells [1,1] euler 0 circle", Published),
        (Space::Z, 3, "Z3", "cells [3,6,2] euler -1 non-orientable crosscaps 3", Published),
        (Space::Z, 4, "Z4", "cells [15,45,36,6] euler 0 pseudomanifold true", Derived),
        (Space::M, 4, "M4", "cells [3,3] euler 0 circle", Published),
        (Space::M, 5, "M5", "cells [15,30,12] euler -3 non-orientable crosscaps 5", Published),
    ];
    for (space, n, name, target, prov) in cases {
        if r.fits(n) {
            r.check(name, target, prov, || summary(&build_complex(space, n)?));
        }
    }
}

fn incidence(r: &mut Runner) {
    let (zt, mt) = (r.upto(4), r.upto(6));
    r.holds(&format!("pseudomanifold for Z n<={zt} and M n<={mt}"), Provenance::Published, || {
        let built = (1..=zt).map(|n| (Space::Z, n)).chain((3..=mt).map(|n| (Space::M, n)));
        for (space, n) in built {
            if !pseudomanifold(&build_complex(space, n)?) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    for (space, n, name) in [(Space::M, 5, "M5"), (Space::Z, 3, "Z3")] {
        if r.fits(n) {
            r.holds(&format!("codim-k incidence is 2^k in {name}, k=1,2"), Provenance::Published, || {
                let c = build_complex(space, n)?;
                Ok(codim_incidence(&c, 1)? && codim_incidence(&c, 2)?)
            });
        }
    }
}

fn strata(r: &mut Runner) {
    let top = r.upto(4);
    if top < 3 {
        return;
    }
    r.holds(&format!("stratum count (n choose k+1), n=3..{top}"), Provenance::Published, || {
        for n in 3..=top {
            for k in 1..n {
                if strata_census(n, k)?.len() as u64 != binomial(n as u64, k as u64 + 1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r.holds(&format!("stratum f-vectors are products M(k+2) x Z(n-k), n=3..{top}"), Provenance::Published, || {
        for n in 3..=top {
            for k in 1..n {
                let expected = product_counts(
                    &build_complex(Space::M, k + 2)?.cell_counts(),
                    &build_complex(Space::Z, n - k)?.cell_counts(),
                );
                if strata_census(n, k)?.iter().any(|s| s.cell_counts() != expected) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    if r.fits(4) {
        r.check("strata (4,2) are tori", "4 x orientable genus 1", Provenance::Published, || {
            let types: Vec<String> =
                strata_census(4, 2)?.iter().map(|s| classify_surface(&s.complex).map(|t| t.to_string())).collect::<Result<_>>()?;
            let first = types.first().cloned().unwrap_or_default();
            if types.iter().all(|t| *t == first) {
                Ok(format!("{} x {first}", types.len()))
            } else {
                Ok(format!("mixed {types:?}"))
            }
        });
    }
}

fn truncation(r: &mut Runner) {
    let top = r.upto(4);
    r.holds(&format!("tubings of path n ~ K_(n+1), n<={top}"), Provenance::Published, || {
        for n in 1..=top {
            if !poset_iso(&tubing_poset(&Diagram::path(n)?), &associahedron(n + 1)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let top = r.upto(5);
    r.holds(&format!("tubings of cycle n ~ W_n, n=3..{top}"), Provenance::Published, || {
        for n in 3..=top {
            if !poset_iso(&tubing_poset(&Diagram::cycle(n)?), &cyclohedron(n)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    if r.fits(6) {
        r.holds("f-vectors agree at n=6 (path and cycle)", Provenance::Published, || {
            Ok(tubing_poset(&Diagram::path(6)?).f_vector() == associahedron(7)?.f_vector()
                && tubing_poset(&Diagram::cycle(6)?).f_vector() == cyclohedron(6)?.f_vector())
        });
    }
}

fn arrangement(r: &mut Runner) {
    if r.fits(4) {
        r.check("chambers linear 3, affine 3, affine 4", "[12,2,6]", Provenance::Published, || {
            let counts = [
                chamber_count(&ArrangementDescriptor::linear(3))?,
                chamber_count(&ArrangementDescriptor::affine(3))?,
                chamber_count(&ArrangementDescriptor::affine(4))?,
            ];
            Ok(list(&counts))
        });
    }
    let top = r.upto(6);
    r.holds(&format!("affine building sets (n choose k+1), n<={top}"), Provenance::Derived, || {
        for n in 2..=top {
            for k in 1..n {
                if building_set_count(&ArrangementDescriptor::affine(n), k)? != binomial(n as u64, k as u64 + 1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    if r.fits(3) {
        r.check("linear building set n=3 k=2", "4", Provenance::Published, || {
            Ok(building_set_count(&ArrangementDescriptor::linear(3), 2)?.to_string())
        });
    }
}

fn nc(r: &mut Runner) {
    let top = r.upto(7);
    if top >= 2 {
        r.holds(&format!("h(K_(n+1)) from type A counts, n=2..{top}"), Provenance::Published, || {
            for n in 2..=top {
                if !verify_identity_a(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        });
    }
    let top = r.upto(5);
    if top >= 1 {
        r.holds(&format!("h(W_(n+1)) from type B counts, n=1..{top}"), Provenance::Published, || {
            for n in 1..=top {
                if !verify_identity_b(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        });
    }
}

fn nc_sym(r: &mut Runner) {
    let top = r.upto(8);
    r.holds(&format!("type A counts sum to Catalan, n<={top}"), Provenance::Derived, || {
        for n in 1..=top {
            let total: u64 = nc_a_counts(n)?.iter().sum();
            if total != binomial(2 * n as u64, n as u64) / (n as u64 + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let (ta, tb) = (r.upto(8), r.upto(5));
    r.holds(&format!("rank symmetry, type A n<={ta}, type B n<={tb}"), Provenance::Derived, || {
        for n in 1..=ta {
            let c = nc_a_counts(n)?;
            if (1..=n).any(|k| c[k] != c[n + 1 - k]) {
                return Ok(false);
            }
        }
        for n in 1..=tb {
            let c = nc_b_counts(n)?;
            if (0..=n).any(|k| c[k] != c[n - k]) {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn cover(r: &mut Runner) {
    if r.fits(3) {
        r.check("cover of Z3", "tiles 8 fold 4", Provenance::Published, || {
            let c = cover_complex(3)?;
            Ok(format!("tiles {} fold {}", c.tile_count(), cover_fold(&c, 3)))
        });
    }
}

/// Random labeled dissected polygons: plain `m`-gons or symmetric `2n`-gons.
fn random_plain(rng: &mut ChaCha8Rng, faces: &[Vec<Dissection>]) -> (LabeledPolygon, Dissection) {
    let m = rng.gen_range(4..faces.len());
    let mut labels: Vec<u32> = (1..=m as u32).collect();
    labels.shuffle(rng);
    let all = &faces[m];
    let d = all[rng.gen_range(0..all.len())].clone();
    (LabeledPolygon::from_parts_unchecked(labels, crate::dissect::Mode::Plain), d)
}

fn random_sym(rng: &mut ChaCha8Rng, faces: &[Vec<Dissection>]) -> (LabeledPolygon, Dissection) {
    let n = rng.gen_range(2..faces.len());
    let mut half: Vec<u32> = (1..=n as u32).collect();
    half.shuffle(rng);
    let labels = half.iter().chain(half.iter()).copied().collect();
    let all = &faces[n];
    let d = all[rng.gen_range(0..all.len())].clone();
    (LabeledPolygon::from_parts_unchecked(labels, crate::dissect::Mode::Symmetric), d)
}

fn nonempty(buckets: Vec<Vec<Dissection>>) -> Vec<Dissection> {
    buckets.into_iter().skip(1).flatten().collect()
}

fn property(r: &mut Runner, seed: u64) {
    let plain_faces: Vec<Vec<Dissection>> = (0..=8).map(|m| if m >= 4 { nonempty(all_dissections(m)) } else { vec![] }).collect();
    let sym_faces: Vec<Vec<Dissection>> = (0..=5).map(|n| if n >= 2 { nonempty(all_sym_dissections(n)) } else { vec![] }).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    r.holds("twist involution on 1000 random polygons of each kind", Provenance::Trivial, || {
        for _ in 0..1000 {
            let (p, d) = random_plain(&mut rng, &plain_faces);
            let c = d.classes()[rng.gen_range(0..d.codim())].members()[0];
            let (l1, c1) = twist_plain_raw(&p, &d, c)?;
            let p1 = LabeledPolygon::plain(l1)?;
            let (l2, c2) = twist_plain_raw(&p1, &Dissection::plain(c1, p.m())?, c)?;
            if l2 != p.labels() || c2 != d.chords() {
                return Ok(false);
            }

            let (p, d) = random_sym(&mut rng, &sym_faces);
            let n = p.m() / 2;
            let cc = d.classes()[rng.gen_range(0..d.codim())].clone();
            let (l1, c1) = twist_sym_raw(&p, &d, &cc)?;
            let p1 = LabeledPolygon::symmetric(l1)?;
            let (l2, c2) = twist_sym_raw(&p1, &Dissection::symmetric(c1, n)?, &cc)?;
            if l2 != p.labels() || c2 != d.chords() {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.holds("canonical forms are idempotent and orbit-invariant", Provenance::Trivial, || {
        for _ in 0..500 {
            let (p, d) = if rng.gen_bool(0.5) { random_plain(&mut rng, &plain_faces) } else { random_sym(&mut rng, &sym_faces) };
            let g = if p.is_centrally_symmetric() { SymmetryGroup::rotations(p.m()) } else { SymmetryGroup::dihedral(p.m()) };
            let canon = canonicalize(&p, &d, &g)?;
            if canonicalize(&canon.0, &canon.1, &g)? != canon {
                return Ok(false);
            }
            let elements = g.elements();
            let e = elements[rng.gen_range(0..elements.len())];
            let (labels, chords) = e.apply(p.labels(), &d.chords());
            let moved = LabeledPolygon::new(labels, p.mode())?;
            let moved_d = crate::dissect::classes_of(&chords, p.m(), p.mode());
            if canonicalize(&moved, &moved_d, &g)? != canon {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.holds("crosses is symmetric", Provenance::Trivial, || {
        for _ in 0..1000 {
            let m = rng.gen_range(4..=12);
            let all: Vec<Chord> = diagonals(m);
            let (a, b) = (all[rng.gen_range(0..all.len())], all[rng.gen_range(0..all.len())]);
            if crosses(a, b, m)? != crosses(b, a, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.holds("complex assembly ignores input order", Provenance::Trivial, || {
        for (space, n) in [(Space::M, 5), (Space::Z, 3)] {
            let mut tops: Vec<(Vec<u32>, Dissection)> =
                tiles(space, n)?.into_iter().map(|t| (t.polygon.labels().to_vec(), Dissection::empty())).collect();
            let budget = Budget::default();
            let reference = assemble(space, n, &tops, &budget)?;
            for _ in 0..3 {
                tops.shuffle(&mut rng);
                let again = assemble(space, n, &tops, &budget)?;
                if again != reference || classify_surface(&again)? != classify_surface(&reference)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
}

/// Runs the selected suites in their fixed order.
pub fn run(options: &VerifyOptions) -> VerificationReport {
    let selected = |name: &str| options.suites.is_empty() || options.suites.iter().any(|s| s == name);
    let mut entries = Vec::new();
    for &suite in SUITES {
        if !selected(suite) {
            continue;
        }
        let mut r = Runner { suite, max_n: options.max_n.unwrap_or(usize::MAX), entries: Vec::new() };
        match suite {
            "polytope" => polytope(&mut r),
            "tiling" => tiling(&mut r),
            "complex" => complex(&mut r),
            "incidence" => incidence(&mut r),
            "strata" => strata(&mut r),
            "truncation" => truncation(&mut r),
            "arrangement" => arrangement(&mut r),
            "nc" => nc(&mut r),
            "nc-sym" => nc_sym(&mut r),
            "cover" => cover(&mut r),
            "property" => property(&mut r, options.seed),
            _ => unreachable!("suite list is fixed"),
        }
        entries.extend(r.entries);
    }
    let pass = entries.iter().all(|e| e.pass);
    VerificationReport { entries, pass }
}
