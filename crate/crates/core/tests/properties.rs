use proptest::prelude::*;

use cyclohedra::complex::classify_surface;
use cyclohedra::dissect::{
    all_dissections, all_sym_dissections, canonicalize, crosses, diagonals, Dissection, GroupElement, LabeledPolygon,
    SymmetryGroup,
};
use cyclohedra::moduli::{assemble, tiles, twist_plain_raw, twist_sym_raw, Budget, Space};

fn faces(m: usize) -> Vec<Dissection> {
    all_dissections(m).into_iter().skip(1).flatten().collect()
}

fn sym_faces(n: usize) -> Vec<Dissection> {
    all_sym_dissections(n).into_iter().skip(1).flatten().collect()
}

fn plain_case() -> impl Strategy<Value = (LabeledPolygon, Dissection, usize)> {
    (4usize..=8).prop_flat_map(|m| {
        let all = faces(m);
        let labels = Just((1..=m as u32).collect::<Vec<_>>()).prop_shuffle();
        (labels, prop::sample::select(all), any::<prop::sample::Index>()).prop_map(|(l, d, pick)| {
            let k = pick.index(d.codim());
            (LabeledPolygon::plain(l).unwrap(), d, k)
        })
    })
}

fn sym_case() -> impl Strategy<Value = (LabeledPolygon, Dissection, usize)> {
    (2usize..=5).prop_flat_map(|n| {
        let half = Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle();
        (half, prop::sample::select(sym_faces(n)), any::<prop::sample::Index>()).prop_map(|(h, d, pick)| {
            let labels = h.iter().chain(&h).copied().collect();
            let k = pick.index(d.codim());
            (LabeledPolygon::symmetric(labels).unwrap(), d, k)
        })
    })
}

fn moved(p: &LabeledPolygon, d: &Dissection, e: GroupElement) -> (LabeledPolygon, Dissection) {
    let m = p.m();
    let mut labels = vec![0; m];
    for (s, &l) in p.labels().iter().enumerate() {
        labels[e.slot(s, m)] = l;
    }
    let chords = d.chords().into_iter().map(|c| e.chord(c, m));
    if p.is_centrally_symmetric() {
        (LabeledPolygon::symmetric(labels).unwrap(), Dissection::symmetric(chords, m / 2).unwrap())
    } else {
        (LabeledPolygon::plain(labels).unwrap(), Dissection::plain(chords, m).unwrap())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn plain_twist_is_an_involution((p, d, k) in plain_case()) {
        let c = d.classes()[k].members()[0];
        let (l1, c1) = twist_plain_raw(&p, &d, c).unwrap();
        let d1 = Dissection::plain(c1, p.m()).unwrap();
        let (l2, c2) = twist_plain_raw(&LabeledPolygon::plain(l1).unwrap(), &d1, c).unwrap();
        prop_assert_eq!(l2.as_slice(), p.labels());
        prop_assert_eq!(c2, d.chords());
    }

    #[test]
    fn symmetric_twist_is_an_involution((p, d, k) in sym_case()) {
        let cc = d.classes()[k].clone();
        let (l1, c1) = twist_sym_raw(&p, &d, &cc).unwrap();
        let d1 = Dissection::symmetric(c1, p.m() / 2).unwrap();
        let (l2, c2) = twist_sym_raw(&LabeledPolygon::symmetric(l1).unwrap(), &d1, &cc).unwrap();
        prop_assert_eq!(l2.as_slice(), p.labels());
        prop_assert_eq!(c2, d.chords());
    }
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent_and_orbit_invariant(
        (p, d, _) in prop_oneof![plain_case(), sym_case()],
        pick in any::<prop::sample::Index>(),
    ) {
        let g = if p.is_centrally_symmetric() { SymmetryGroup::rotations(p.m()) } else { SymmetryGroup::dihedral(p.m()) };
        let canon = canonicalize(&p, &d, &g).unwrap();
        prop_assert_eq!(&canonicalize(&canon.0, &canon.1, &g).unwrap(), &canon);
        let elements = g.elements();
        let (q, e) = moved(&p, &d, elements[pick.index(elements.len())]);
        prop_assert_eq!(canonicalize(&q, &e, &g).unwrap(), canon);
    }

    #[test]
    fn crossing_is_symmetric(m in 4usize..=14, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let all = diagonals(m);
        let (x, y) = (all[a.index(all.len())], all[b.index(all.len())]);
        prop_assert_eq!(crosses(x, y, m).unwrap(), crosses(y, x, m).unwrap());
        prop_assert!(!crosses(x, x, m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn assembly_ignores_tile_order(
        space in prop_oneof![Just((Space::M, 5)), Just((Space::Z, 3))],
        order in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let (space, n) = space;
        let tops: Vec<(Vec<u32>, Dissection)> =
            tiles(space, n).unwrap().into_iter().map(|t| (t.polygon.labels().to_vec(), Dissection::empty())).collect();
        let shuffled: Vec<_> = order.iter().filter(|&&x| x < tops.len()).map(|&x| tops[x].clone()).collect();
        let budget = Budget::default();
        let a = assemble(space, n, &tops, &budget).unwrap();
        let b = assemble(space, n, &shuffled, &budget).unwrap();
        prop_assert_eq!(classify_surface(&a).unwrap(), classify_surface(&b).unwrap());
        prop_assert_eq!(a, b);
    }
}
