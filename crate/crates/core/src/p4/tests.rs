use super::*;
use crate::chow::ChowClass;
use crate::Error;
use proptest::prelude::*;

fn cls(s: &str) -> ChowClass {
    normalize(s).unwrap()
}

fn deg(x: &ChowClass) -> i64 {
    x.degree().unwrap()
}

#[test]
fn ranks() {
    let r = ring();
    assert_eq!(r.basis().len(), 120);
    assert_eq!((0..=4).map(|g| r.rank(g)).collect::<Vec<_>>(), vec![1, 26, 66, 26, 1]);
}

#[test]
fn table_examples() {
    assert_eq!(cls("H").mul(&cls("H")).unwrap(), cls("S"));
    assert!(cls("E_0").mul(&cls("E_1")).unwrap().is_zero());
    assert_eq!(cls("P_01").mul(&cls("F_01")).unwrap(), cls("-p"));
    assert_eq!(deg(&cls("p")), 1);
    assert_eq!(deg(&cls("H").mul(&cls("H").mul(&cls("S")).unwrap()).unwrap()), 1);
    assert_eq!(deg(&cls("l_0").mul(&cls("E_0")).unwrap()), -1);
    assert!(cls("F_01").mul(&cls("V_234,2")).unwrap().is_zero());
    assert_eq!(
        cls("E_01").mul(&cls("E_012")).unwrap(),
        cls("H_012 - V_012,0 - V_012,1")
    );
    assert_eq!(
        cls("E_012").mul(&cls("E_012")).unwrap(),
        cls("-M_012 - Lambda_012")
    );
}

#[test]
fn grade_errors() {
    assert_eq!(cls("S").mul(&cls("l")), Err(Error::GradeOverflow(2, 3)));
    assert!(matches!(cls("S").degree(), Err(Error::WrongGrade { expected: 4, found: 2 })));
    assert!(matches!(
        cls("H").add(&cls("S")),
        Err(Error::MixedGrade(_))
    ));
}

#[test]
fn normalize_examples() {
    assert_eq!(cls("G_01"), cls("P_01 + F_01"));
    assert_eq!(cls("Λ_012"), cls("2H_012 - V_012,0 - V_012,1 - V_012,2"));
    assert_eq!(cls("e_012,0"), cls("f_012 + l_0 - l_01 - l_02"));
    assert_eq!(cls("h_01"), cls("l_01 + l - l_0 - l_1"));
    assert_eq!(cls("l_012"), cls("2f_012 + l - l_01 - l_02 - l_12"));
    assert_eq!(
        cls("M_012"),
        cls("S - S_0 - S_1 - S_2 - P_01 - P_02 - P_12 + Lambda_012")
    );
    assert!(matches!(normalize("G_00"), Err(Error::UnknownSymbol(_))));
    assert!(matches!(normalize("Q_01"), Err(Error::UnknownSymbol(_))));
}

#[test]
fn named_construction_rejects_derived_symbols() {
    let r = ring();
    assert_eq!(r.make_class_named(1, &[("H", 1)]).unwrap(), cls("H"));
    assert!(r.make_class_named(2, &[("S", 1), ("S", -1)]).unwrap().is_zero());
    assert!(matches!(
        r.make_class_named(2, &[("G_01", 1)]),
        Err(Error::UnknownBasis { .. })
    ));
    assert!(matches!(
        r.make_class_named(2, &[("S", 1), ("H", 1)]),
        Err(Error::MixedGrade(_))
    ));
}

#[test]
fn cremona_examples() {
    assert_eq!(
        cremona(&cls("H")).unwrap(),
        cls("4H - 3E_0 - 3E_1 - 3E_2 - 3E_3 - 3E_4 \
             - 2E_01 - 2E_02 - 2E_03 - 2E_04 - 2E_12 - 2E_13 - 2E_14 - 2E_23 - 2E_24 - 2E_34 \
             - E_012 - E_013 - E_014 - E_023 - E_024 - E_034 - E_123 - E_124 - E_134 - E_234")
    );
    assert_eq!(cremona(&cls("E_01")).unwrap(), cls("E_234"));
    assert_eq!(cremona(&cls("l")).unwrap(), cls("4l - l_0 - l_1 - l_2 - l_3 - l_4"));
    assert_eq!(cremona(&cls("p")).unwrap(), cls("p"));
    assert_eq!(
        cremona(&cls("l_01")).unwrap(),
        cls("2l - l_2 - l_3 - l_4 + f_234")
    );
    assert_eq!(cremona(&cls("G_01")).unwrap(), cls("Lambda_234"));
}

#[test]
fn cremona_is_an_involution() {
    for a in ring().basis() {
        let x = ChowClass::basis(*a);
        assert_eq!(cremona(&cremona(&x).unwrap()).unwrap(), x, "{a}");
    }
}

#[test]
fn cremona_is_a_ring_automorphism() {
    let r = ring();
    let images: Vec<ChowClass> = r
        .basis()
        .iter()
        .map(|a| cremona(&ChowClass::basis(*a)).unwrap())
        .collect();
    for (i, a) in r.basis().iter().enumerate() {
        for (j, b) in r.basis().iter().enumerate().skip(i) {
            if a.grade() + b.grade() > 4 {
                continue;
            }
            let lhs = cremona(&ChowClass::basis(*a).mul(&ChowClass::basis(*b)).unwrap()).unwrap();
            let rhs = images[i].mul(&images[j]).unwrap();
            assert_eq!(lhs, rhs, "{a} * {b}");
        }
    }
}

#[test]
fn table_is_symmetric() {
    let r = ring();
    for a in r.basis() {
        for b in r.basis() {
            if a.grade() + b.grade() <= 4 {
                assert_eq!(r.product(a, b).unwrap(), r.product(b, a).unwrap());
            }
        }
    }
}

#[test]
fn associativity_on_divisor_pairs_times_surfaces() {
    let r = ring();
    let a1: Vec<_> = r.basis_of_grade(1).copied().collect();
    let a2: Vec<_> = r.basis_of_grade(2).copied().collect();
    for a in &a1 {
        for b in &a1 {
            let ab = ChowClass::basis(*a).mul(&ChowClass::basis(*b)).unwrap();
            for c in &a2 {
                let z = ChowClass::basis(*c);
                let lhs = ab.mul(&z).unwrap();
                let rhs = ChowClass::basis(*a).mul(&ChowClass::basis(*b).mul(&z).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn divisor_examples() {
    let hyper = P4DivisorData { d: 1, m: [1, 1, 1, 1, 0], ..Default::default() };
    assert_eq!(hyper.cremona().d, 0);
    let quadric = P4DivisorData { d: 2, m: [1; 5], ..Default::default() };
    assert_eq!(
        quadric.cremona(),
        P4DivisorData { d: 3, m: [2; 5], m_line: [1; 10], m_plane: [0; 10] }
    );
    assert_eq!(P4DivisorData::default().cremona(), P4DivisorData::default());
}

#[test]
fn surface_examples() {
    let plane = P4SurfaceData { d: 1, ..Default::default() };
    let img = plane.cremona();
    assert_eq!((img.d, img.m, img.m_line), (6, [3; 5], [1; 10]));
    assert!(img.is_reduced());
    let s0 = P4SurfaceData { m: [1, 0, 0, 0, 0], ..Default::default() };
    let img = s0.to_class();
    assert_eq!(img, cls("-S_0"));
    let img = P4SurfaceData::from_class(&cremona(&cls("S_0")).unwrap()).unwrap();
    assert_eq!((img.d, img.m), (3, [0, 2, 2, 2, 2]));
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        assert_eq!(img.m_line[k], if i == 0 { 0 } else { 1 }, "pair {i}{j}");
    }
}

#[test]
fn curve_examples() {
    let line = P4CurveData { d: 1, m: [1, 1, 0, 0, 0], ..Default::default() };
    assert_eq!(line.cremona().d, -2);
    let general = P4CurveData { d: 1, ..Default::default() };
    assert_eq!(
        general.cremona(),
        P4CurveData { d: 4, m: [1; 5], ..Default::default() }
    );
    assert_eq!(P4CurveData::default().cremona(), P4CurveData::default());
}

#[test]
fn reduced_examples() {
    let mut ml = [0; 10];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        ml[pair_index(i, j)] = 1;
    }
    let plane = ReducedSurface { d: 1, m: [1, 1, 1, 0, 0], m_line: ml };
    let mut expect = [0; 10];
    expect[pair_index(3, 4)] = 1;
    assert_eq!(plane.cremona(), ReducedSurface { d: 0, m: [0; 5], m_line: expect });
    // The image of a general plane goes back to the plane.
    let sextic = ReducedSurface { d: 6, m: [3; 5], m_line: [1; 10] };
    assert_eq!(sextic.cremona(), ReducedSurface { d: 1, ..Default::default() });
    assert_eq!(ReducedSurface::default().cremona(), ReducedSurface::default());

    assert_eq!(ReducedCurve { d: 1, m: [0; 5] }.cremona(), ReducedCurve { d: 4, m: [1; 5] });
    assert_eq!(ReducedCurve { d: 4, m: [1; 5] }.cremona(), ReducedCurve { d: 1, m: [0; 5] });
    assert_eq!(ReducedCurve { d: 1, m: [1, 1, 0, 0, 0] }.cremona().d, -2);

    assert_eq!(
        ReducedDivisor { d: 1, m: [1, 1, 1, 1, 0] }.cremona(),
        ReducedDivisor { d: 0, m: [0, 0, 0, 0, -1] }
    );
    assert_eq!(ReducedDivisor { d: 2, m: [1; 5] }.cremona(), ReducedDivisor { d: 3, m: [2; 5] });
    assert_eq!(ReducedDivisor::default().cremona(), ReducedDivisor::default());
}

fn entry() -> impl Strategy<Value = i64> {
    -3i64..=3
}

prop_compose! {
    fn divisor()(d in entry(), m in proptest::array::uniform5(entry()),
                 ml in proptest::array::uniform10(entry()), mp in proptest::array::uniform10(entry()))
                 -> P4DivisorData {
        P4DivisorData { d, m, m_line: ml, m_plane: mp }
    }
}

prop_compose! {
    fn curve()(d in entry(), m in proptest::array::uniform5(entry()),
               ml in proptest::array::uniform10(entry()), mp in proptest::array::uniform10(entry()))
               -> P4CurveData {
        P4CurveData { d, m, m_line: ml, m_plane: mp }
    }
}

prop_compose! {
    fn surface()(d in entry(), m in proptest::array::uniform5(entry()),
                 ml in proptest::array::uniform10(entry()), nl in proptest::array::uniform10(entry()),
                 mp in proptest::array::uniform10(entry()),
                 nv in proptest::array::uniform10(proptest::array::uniform3(entry())))
                 -> P4SurfaceData {
        P4SurfaceData { d, m, m_line: ml, n_line: nl, m_plane: mp, n_v: nv }
    }
}

prop_compose! {
    fn reduced_surface()(d in entry(), m in proptest::array::uniform5(entry()),
                         ml in proptest::array::uniform10(entry())) -> ReducedSurface {
        ReducedSurface { d, m, m_line: ml }
    }
}

proptest! {
    #[test]
    fn divisor_record_matches_class_action(x in divisor()) {
        let c = x.to_class();
        prop_assert_eq!(P4DivisorData::from_class(&c).unwrap(), x);
        prop_assert_eq!(P4DivisorData::from_class(&cremona(&c).unwrap()).unwrap(), x.cremona());
        prop_assert_eq!(x.cremona().cremona(), x);
    }

    #[test]
    fn surface_record_matches_class_action(x in surface()) {
        let c = x.to_class();
        prop_assert_eq!(P4SurfaceData::from_class(&c).unwrap(), x);
        prop_assert_eq!(P4SurfaceData::from_class(&cremona(&c).unwrap()).unwrap(), x.cremona());
        prop_assert_eq!(x.cremona().cremona(), x);
    }

    #[test]
    fn curve_record_matches_class_action(x in curve()) {
        let c = x.to_class();
        prop_assert_eq!(P4CurveData::from_class(&c).unwrap(), x);
        prop_assert_eq!(P4CurveData::from_class(&cremona(&c).unwrap()).unwrap(), x.cremona());
        prop_assert_eq!(x.cremona().cremona(), x);
    }

    #[test]
    fn reduced_records_are_closed(t in reduced_surface(), d in entry(), m in proptest::array::uniform5(entry())) {
        let full = t.to_full().cremona();
        prop_assert!(full.is_reduced());
        prop_assert_eq!(ReducedSurface::from_full(&full), Some(t.cremona()));
        let c = ReducedCurve { d, m };
        prop_assert_eq!(c.to_full().cremona(), c.cremona().to_full());
        let dv = ReducedDivisor { d, m };
        prop_assert_eq!(ReducedDivisor::from_full(&dv.to_full().cremona()), dv.cremona());
    }

    #[test]
    fn pairings_are_preserved(x in divisor(), y in curve(), s in surface(), t in surface()) {
        prop_assert_eq!(
            pairing(&x.to_class(), &y.to_class()).unwrap(),
            pairing(&x.cremona().to_class(), &y.cremona().to_class()).unwrap()
        );
        prop_assert_eq!(
            pairing(&s.to_class(), &t.to_class()).unwrap(),
            pairing(&s.cremona().to_class(), &t.cremona().to_class()).unwrap()
        );
    }

    #[test]
    fn minus_p_reads_line_multiplicity_on_reduced_surfaces(t in reduced_surface()) {
        let c = t.to_full().to_class();
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let minus_p = ChowClass::basis(sym::p(i, j)).scale(-1).unwrap();
            prop_assert_eq!(pairing(&c, &minus_p).unwrap(), t.m_line[k]);
        }
    }

    #[test]
    fn minus_p_reads_line_minus_fiber_multiplicity(t in surface()) {
        let c = t.to_class();
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let minus_p = ChowClass::basis(sym::p(i, j)).scale(-1).unwrap();
            prop_assert_eq!(pairing(&c, &minus_p).unwrap(), t.m_line[k] - t.n_line[k]);
        }
    }

    #[test]
    fn bilinearity(a in -3i64..=3, b in -3i64..=3, i in 0usize..26, j in 0usize..26, k in 0usize..66) {
        let r = ring();
        let a1: Vec<_> = r.basis_of_grade(1).copied().collect();
        let a2: Vec<_> = r.basis_of_grade(2).copied().collect();
        let x = ChowClass::basis(a1[i]);
        let y = ChowClass::basis(a1[j]);
        let z = ChowClass::basis(a2[k]);
        let lhs = x.scale(a).unwrap().add(&y.scale(b).unwrap()).unwrap().mul(&z).unwrap();
        let rhs = x.mul(&z).unwrap().scale(a).unwrap().add(&y.mul(&z).unwrap().scale(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sampled_quadruple_associativity(i in 0usize..26, j in 0usize..26, k in 0usize..26, l in 0usize..26) {
        let r = ring();
        let a1: Vec<ChowClass> = r.basis_of_grade(1).map(|e| ChowClass::basis(*e)).collect();
        let lhs = a1[i].mul(&a1[j]).unwrap().mul(&a1[k].mul(&a1[l]).unwrap()).unwrap();
        let rhs = a1[i].mul(&a1[j].mul(&a1[k]).unwrap()).unwrap().mul(&a1[l]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
