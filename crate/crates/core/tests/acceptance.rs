//! Acceptance criteria, one line of output each. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use cyclohedra::complex::{classify_surface, codim_incidence, euler, pseudomanifold};
use cyclohedra::dissect::{diagonals, Chord};
use cyclohedra::moduli::{build_complex, cover_complex, cover_fold, product_counts, strata_census, tiles, Space};
use cyclohedra::nc::{nc_a_counts, nc_b_counts, verify_identity_a, verify_identity_b};
use cyclohedra::nested::{building_set_count, chamber_count, poset_iso, tubing_poset, ArrangementDescriptor, Diagram};
use cyclohedra::poset::{associahedron, cyclohedron};
use cyclohedra::report::{run, VerifyOptions};

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: cyclohedra::Error) -> String {
    e.to_string()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Triangulations of an m-gon by subset search over diagonals, independent of the library's recursive enumeration.
fn triangulations_oracle(m: usize) -> u64 {
    let diags: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 2..m).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == m - 1)).collect();
    let cross = |a: (usize, usize), b: (usize, usize)| (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1);
    fn go(start: usize, left: usize, chosen: &mut Vec<(usize, usize)>, diags: &[(usize, usize)], cross: &dyn Fn((usize, usize), (usize, usize)) -> bool) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for x in start..diags.len() {
            if chosen.iter().all(|&c| !cross(c, diags[x])) {
                chosen.push(diags[x]);
                total += go(x + 1, left - 1, chosen, diags, cross);
                chosen.pop();
            }
        }
        total
    }
    go(0, m.saturating_sub(3), &mut Vec::new(), &diags, &cross)
}

fn polytope() -> Check {
    let f = |p: cyclohedra::Result<cyclohedra::poset::FacePoset>| p.map(|p| p.f_vector().0).map_err(err);
    ensure(f(associahedron(4))? == [5, 5, 1], || "f(K4)".into())?;
    ensure(f(cyclohedron(3))? == [6, 6, 1], || "f(W3)".into())?;
    ensure(f(associahedron(5))? == [14, 21, 9, 1], || "f(K5)".into())?;
    ensure(f(cyclohedron(4))? == [20, 30, 12, 1], || "f(W4)".into())?;
    for n in 2..=8 {
        let v = f(associahedron(n))?[0];
        ensure(v == triangulations_oracle(n + 1), || format!("vertices of K{n}: {v}"))?;
    }
    for n in 1..=7u64 {
        let v = f(cyclohedron(n as usize))?[0];
        ensure(v == binomial(2 * n - 2, n - 1), || format!("vertices of W{n}: {v}"))?;
    }
    Ok(())
}

fn tiling() -> Check {
    for n in 1..=5 {
        let t = tiles(Space::Z, n).map_err(err)?.len() as u64;
        ensure(t == factorial(n as u64 - 1), || format!("Z{n} has {t} tiles"))?;
    }
    for n in 3..=6 {
        let t = tiles(Space::M, n).map_err(err)?.len() as u64;
        ensure(t == factorial(n as u64 - 1) / 2, || format!("M{n} has {t} tiles"))?;
    }
    Ok(())
}

fn complexes() -> Check {
    let z2 = build_complex(Space::Z, 2).map_err(err)?;
    ensure(z2.cell_counts() == [1, 1] && euler(&z2) == 0 && pseudomanifold(&z2), || "Z2 is not a circle".into())?;
    let z3 = build_complex(Space::Z, 3).map_err(err)?;
    let s = classify_surface(&z3).map_err(err)?;
    ensure(z3.tile_count() == 2 && euler(&z3) == -1 && !s.orientable && s.parameter == 3, || format!("Z3: {s}"))?;
    let z4 = build_complex(Space::Z, 4).map_err(err)?;
    ensure(z4.tile_count() == 6 && euler(&z4) == 0 && pseudomanifold(&z4), || "Z4".into())?;
    let m4 = build_complex(Space::M, 4).map_err(err)?;
    ensure(m4.cell_counts() == [3, 3] && pseudomanifold(&m4), || "M4 is not a 3-segment circle".into())?;
    let m5 = build_complex(Space::M, 5).map_err(err)?;
    let s = classify_surface(&m5).map_err(err)?;
    ensure(m5.tile_count() == 12 && euler(&m5) == -3 && !s.orientable && s.parameter == 5, || format!("M5: {s}"))?;
    Ok(())
}

fn incidence() -> Check {
    let built = (1..=5).map(|n| (Space::Z, n)).chain((3..=6).map(|n| (Space::M, n))).chain((1..=4).map(|n| (Space::Cover, n)));
    for (space, n) in built {
        let c = build_complex(space, n).map_err(err)?;
        ensure(pseudomanifold(&c), || format!("{space:?} {n} is not a pseudomanifold"))?;
    }
    for (space, n) in [(Space::M, 5), (Space::Z, 3)] {
        let c = build_complex(space, n).map_err(err)?;
        for k in 1..=2 {
            ensure(codim_incidence(&c, k).map_err(err)?, || format!("{space:?} {n} codim {k}"))?;
        }
    }
    Ok(())
}

fn strata() -> Check {
    for n in 3..=4 {
        for k in 1..n {
            let s = strata_census(n, k).map_err(err)?;
            ensure(s.len() as u64 == binomial(n as u64, k as u64 + 1), || format!("({n},{k}) gives {} strata", s.len()))?;
            let expected = product_counts(
                &build_complex(Space::M, k + 2).map_err(err)?.cell_counts(),
                &build_complex(Space::Z, n - k).map_err(err)?.cell_counts(),
            );
            for st in &s {
                ensure(st.cell_counts() == expected, || format!("stratum {:?} has {:?}", st.labels, st.cell_counts()))?;
            }
        }
    }
    for st in strata_census(4, 2).map_err(err)? {
        let t = classify_surface(&st.complex).map_err(err)?;
        ensure(t.orientable && t.parameter == 1, || format!("stratum {:?} is {t}", st.labels))?;
    }
    Ok(())
}

fn truncation() -> Check {
    for n in 1..=4 {
        let same = poset_iso(&tubing_poset(&Diagram::path(n).map_err(err)?), &associahedron(n + 1).map_err(err)?).map_err(err)?;
        ensure(same, || format!("path {n}"))?;
    }
    for n in 3..=5 {
        let same = poset_iso(&tubing_poset(&Diagram::cycle(n).map_err(err)?), &cyclohedron(n).map_err(err)?).map_err(err)?;
        ensure(same, || format!("cycle {n}"))?;
    }
    ensure(
        tubing_poset(&Diagram::path(6).map_err(err)?).f_vector() == associahedron(7).map_err(err)?.f_vector()
            && tubing_poset(&Diagram::cycle(6).map_err(err)?).f_vector() == cyclohedron(6).map_err(err)?.f_vector(),
        || "f-vectors at 6".into(),
    )
}

fn arrangement() -> Check {
    let c = |a| chamber_count(&a).map_err(err);
    ensure(c(ArrangementDescriptor::linear(3))? == 12, || "linear 3".into())?;
    ensure(c(ArrangementDescriptor::affine(3))? == 2, || "affine 3".into())?;
    ensure(c(ArrangementDescriptor::affine(4))? == 6, || "affine 4".into())?;
    for n in 2..=6u64 {
        for k in 1..n {
            let got = building_set_count(&ArrangementDescriptor::affine(n as usize), k as usize).map_err(err)?;
            ensure(got == binomial(n, k + 1), || format!("affine ({n},{k}) gives {got}"))?;
        }
    }
    ensure(building_set_count(&ArrangementDescriptor::linear(3), 2).map_err(err)? == 4, || "linear (3,2)".into())
}

fn non_crossing() -> Check {
    for n in 2..=7 {
        ensure(verify_identity_a(n).map_err(err)?, || format!("identity A at {n}"))?;
    }
    for n in 1..=5 {
        ensure(verify_identity_b(n).map_err(err)?, || format!("identity B at {n}"))?;
    }
    for n in 1..=8u64 {
        let c = nc_a_counts(n as usize).map_err(err)?;
        ensure(c.iter().sum::<u64>() == binomial(2 * n, n) / (n + 1), || format!("Catalan at {n}"))?;
        ensure((1..=n as usize).all(|k| c[k] == c[n as usize + 1 - k]), || format!("type A symmetry at {n}"))?;
    }
    for n in 1..=5 {
        let c = nc_b_counts(n).map_err(err)?;
        ensure((0..=n).all(|k| c[k] == c[n - k]), || format!("type B symmetry at {n}"))?;
    }
    Ok(())
}

fn cover() -> Check {
    let c = cover_complex(3).map_err(err)?;
    let hexagons = (0..c.tile_count()).all(|t| c.tile_face_counts(t)[1] == 6);
    ensure(c.tile_count() == 8 && hexagons, || format!("{} tiles", c.tile_count()))?;
    ensure(cover_fold(&c, 3) == 4, || format!("fold {}", cover_fold(&c, 3)))
}

fn property() -> Check {
    // quick direct check beside the seeded suite
    for m in 4..=9 {
        let d = diagonals(m);
        for &a in &d {
            for &b in &d {
                let (x, y): (Chord, Chord) = (a, b);
                ensure(cyclohedra::dissect::crosses(x, y, m) == cyclohedra::dissect::crosses(y, x, m), || format!("{x} {y}"))?;
            }
        }
    }
    let report = run(&VerifyOptions { suites: vec!["property".into()], max_n: None, seed: 7 });
    match report.entries.iter().find(|e| !e.pass) {
        Some(e) => Err(format!("{}: {}", e.name, e.computed)),
        None => Ok(()),
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 10] = [
        ("1 polytope", polytope, Some(10)),
        ("2 tiling", tiling, Some(5)),
        ("3 complex", complexes, Some(60)),
        ("4 incidence", incidence, None),
        ("5 strata", strata, None),
        ("6 truncation", truncation, None),
        ("7 arrangement", arrangement, None),
        ("8 non-crossing", non_crossing, Some(30)),
        ("9 cover", cover, None),
        ("10 property", property, None),
    ];
    let mut failed = Vec::new();
    let total = Instant::now();
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let mut result = check();
        let took = start.elapsed();
        if let (Ok(()), Some(s)) = (&result, limit) {
            if took > Duration::from_secs(s) {
                result = Err(format!("took {took:?}, limit {s}s"));
            }
        }
        match &result {
            Ok(()) => println!("PASS criterion {name} ({took:.2?})"),
            Err(why) => {
                println!("FAIL criterion {name} ({took:.2?}): {why}");
                failed.push(name);
            }
        }
    }
    println!("acceptance total {:.2?}", total.elapsed());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
