use proptest::prelude::*;

use super::*;
use crate::weyl::{apply_word_unchecked, plane_orbit8, Centers, Generator, Perm, WeylWord};

fn fp(d: i64, m: &[i64]) -> FatPointDivisor {
    FatPointDivisor::new(d, m).unwrap()
}

fn ten_point_example() -> FatPointDivisor {
    let mut m = vec![4];
    m.extend([2; 9]);
    fp(4, &m)
}

fn plane(p: [u8; 3]) -> SurfaceRecord {
    SurfaceRecord::plane(8, p).unwrap()
}

#[test]
fn binomials() {
    assert_eq!(binom4(3), 0);
    assert_eq!(binom4(-2), 0);
    assert_eq!(binom4(4), 1);
    assert_eq!(binom4(8), 70);
    assert_eq!(binom4(MAX_ENTRY + 4), (MAX_ENTRY + 4) * (MAX_ENTRY + 3) / 2 * (MAX_ENTRY + 2) / 3 * (MAX_ENTRY + 1) / 4);
}

#[test]
fn entries_are_bounded() {
    assert!(FatPointDivisor::new(MAX_ENTRY + 1, &[]).is_err());
    assert!(FatPointDivisor::new(1, &[0, -MAX_ENTRY - 1]).is_err());
    assert_eq!(fp(3, &[1, 2]).to_string(), "(3;1,2)");
}

#[test]
fn chi_examples() {
    assert_eq!(chi(&ten_point_example()), -10);
    assert_eq!(chi(&fp(1, &[1, 1, 1, 1])), 1);
    assert_eq!(chi(&fp(0, &[])), 1);
    assert_eq!(chi(&fp(0, &[0; 8])), 1);
}

#[test]
fn curve_k_examples() {
    let d = ten_point_example();
    for i in 2..=10 {
        assert_eq!(k_line(&d, 1, i), 2);
    }
    assert_eq!(k_line(&d, 2, 3), 0);
    assert_eq!(k_line(&fp(1, &[1, 1, 0, 0]), 1, 2), 1);
    assert_eq!(k_quartic(&fp(4, &[2; 8]), 8), -2);
    let q = CurveRecord::quartic(8, 8).unwrap();
    assert_eq!(k_curve(&fp(4, &[2; 8]), &q), -2);
    let l = CurveRecord::line(8, 1, 2).unwrap();
    assert_eq!(k_curve(&fp(1, &[1, 1]), &l), 1);
}

#[test]
fn plane_k_on_basis_records() {
    let s3 = SurfaceFamily::S3(1, 8).template(8).unwrap();
    let s1 = plane([1, 2, 3]);
    let basis = |idx: usize| -> FatPointDivisor {
        if idx == 0 {
            fp(1, &[0; 8])
        } else {
            let mut m = [0; 8];
            m[idx - 1] = 1;
            fp(0, &m)
        }
    };
    // Coefficients of d, m_1, ..., m_8.
    let s1_form = [-2, 1, 1, 1, 0, 0, 0, 0, 0];
    let s3_form = [-5, 2, 1, 1, 1, 1, 1, 1, 0];
    for idx in 0..9 {
        assert_eq!(k_weyl_plane(&basis(idx), &s1).unwrap(), s1_form[idx]);
        assert_eq!(k_weyl_plane(&basis(idx), &s3).unwrap(), s3_form[idx]);
    }
    for t in plane_orbit8().members.keys() {
        assert_eq!(k_weyl_plane(&fp(0, &[0; 8]), t).unwrap(), 0);
    }
    let not_weyl = SurfaceRecord::new(8, 2, &[0; 8], &[0; 8], &[0; 28]).unwrap();
    assert!(matches!(k_weyl_plane(&fp(1, &[]), &not_weyl), Err(Error::NotAWeylPlane)));
}

#[test]
fn divisor_k_examples() {
    let w = DivisorRecord::hyperplane(8, &[1, 2, 3, 4]).unwrap();
    assert_eq!(k_weyl_divisor(&fp(1, &[1, 1, 1, 1]), &w).unwrap(), 1);
    assert_eq!(k_weyl_divisor(&fp(2, &[]), &w).unwrap(), -6);
    let not_weyl = DivisorRecord::new(8, 3, &[0; 8]).unwrap();
    assert!(matches!(k_weyl_divisor(&fp(1, &[]), &not_weyl), Err(Error::NotAWeylDivisor)));
    assert!(matches!(k_weyl_divisor(&fp(1, &[0; 9]), &w), Err(Error::UnsupportedPointCount(9))));
}

#[test]
fn wdim_examples() {
    assert_eq!(wdim(&fp(1, &[1, 1, 1, 1, 0, 0, 0, 0])).unwrap(), 1);
    assert_eq!(wdim(&fp(0, &[])).unwrap(), 1);
    assert_eq!(wdim(&fp(0, &[0; 8])).unwrap(), 1);
    assert!(matches!(wdim(&ten_point_example()), Err(Error::UnsupportedPointCount(10))));
    let d = ten_point_example();
    assert_eq!(h1_correction(&d), 9);
    assert_eq!(wdim_lines_only(&d), -1);
    assert_eq!(h1_correction(&fp(2, &[2, 2, 0, 0, 0, 0, 0, 0])), 1);
    assert_eq!(h1_correction(&fp(5, &[1; 8])), 0);
}

#[test]
fn report_examples() {
    let mut m = vec![4];
    m.extend([2; 7]);
    let r = base_locus_report(&fp(4, &m)).unwrap();
    let expected: BTreeMap<(u8, u8), i64> = (2..=8).map(|i| ((1, i), 2)).collect();
    assert_eq!(r.lines, expected);
    assert!(r.planes.is_empty());
    assert!(r.pairwise_conflicts.is_empty());
    assert!(!r.empties_hint);
    assert_eq!(r.line_violations.len(), 7);

    let r = base_locus_report(&fp(1, &[1, 1, 1, 0, 0, 0, 0, 0])).unwrap();
    assert_eq!(r.planes.get(&SurfaceFamily::S1([1, 2, 3])), Some(&1));
    assert_eq!(r.planes.len(), 1);
    assert!(r.line_violations.is_empty());

    let r = base_locus_report(&fp(2, &[1; 8])).unwrap();
    assert!(!r.has_positive_k());
    assert_eq!(r, BaseLocusReport::default());
}

#[test]
fn meeting_planes_are_conflicts() {
    // Quadrics singular at six points: S_1(123) and S_1(456) both have
    // k = 2 and pair to 1, so the system is empty.
    let r = base_locus_report(&fp(2, &[2, 2, 2, 2, 2, 2, 0, 0])).unwrap();
    assert_eq!(r.planes.get(&SurfaceFamily::S1([1, 2, 3])), Some(&2));
    assert_eq!(r.planes.get(&SurfaceFamily::S1([4, 5, 6])), Some(&2));
    let pair = [SurfaceFamily::S1([1, 2, 3]), SurfaceFamily::S1([4, 5, 6])];
    assert!(r
        .pairwise_conflicts
        .iter()
        .any(|&(a, b, v)| v == 1 && (pair == [a, b] || pair == [b, a])));
    assert!(r.empties_hint);
    // Planes meeting in a point pair to 0 and do not conflict.
    let r = base_locus_report(&fp(3, &[3, 2, 2, 2, 2, 0, 0, 0])).unwrap();
    assert!(r.planes.contains_key(&SurfaceFamily::S1([1, 2, 3])));
    assert!(r.planes.contains_key(&SurfaceFamily::S1([1, 4, 5])));
    let pair = [SurfaceFamily::S1([1, 2, 3]), SurfaceFamily::S1([1, 4, 5])];
    assert!(!r
        .pairwise_conflicts
        .iter()
        .any(|&(a, b, _)| pair == [a, b] || pair == [b, a]));
}

#[test]
fn fewer_points_use_their_own_cycles() {
    let r = base_locus_report(&fp(1, &[1, 1, 1])).unwrap();
    assert_eq!(r.planes.len(), 1);
    assert!(r.quartics.is_empty());
    let r = base_locus_report(&fp(1, &[1; 7])).unwrap();
    assert_eq!(r.quartics.get(&8), Some(&3));
    assert_eq!(r.quartics.len(), 1);
}

fn random_word(steps: &[(bool, usize)]) -> WeylWord {
    let centers = Centers::all(8);
    let mut w = WeylWord::new();
    for &(cremona, k) in steps {
        if cremona {
            w.push(Generator::Cremona(centers[k % centers.len()]));
        } else {
            let i = (k % 7) as u8 + 1;
            w.push(Generator::Perm(Perm::transposition(i, i + 1)));
        }
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn plane_and_curve_k_are_weyl_invariant(
        d in 0i64..8,
        m in proptest::collection::vec(0i64..5, 8),
        steps in proptest::collection::vec((any::<bool>(), 0usize..56), 0..=4),
        t_idx in 0usize..204,
        c_idx in 0usize..36,
    ) {
        let w = random_word(&steps);
        let dr = DivisorRecord::new(8, d, &m).unwrap();
        let dw = FatPointDivisor::from(&apply_word_unchecked(&dr, &w).unwrap());
        let dd = FatPointDivisor::from(&dr);
        let t = *plane_orbit8().members.keys().nth(t_idx).unwrap();
        let tw = apply_word_unchecked(&t, &w).unwrap();
        if !tw.is_contracted() {
            prop_assert_eq!(k_weyl_plane(&dw, &tw).unwrap(), k_weyl_plane(&dd, &t).unwrap());
        }
        let c = *crate::weyl::line_orbit8().members.keys().nth(c_idx).unwrap();
        let cw = apply_word_unchecked(&c, &w).unwrap();
        prop_assert_eq!(k_curve(&dw, &cw), k_curve(&dd, &c));
    }

    #[test]
    fn wdim_is_invariant_on_nonnegative_images(
        d in 1i64..7,
        m in proptest::collection::vec(0i64..4, 8),
        steps in proptest::collection::vec((any::<bool>(), 0usize..56), 1..=3),
    ) {
        let dr = DivisorRecord::new(8, d, &m).unwrap();
        let base = FatPointDivisor::from(&dr);
        let mut cur = dr;
        for g in &random_word(&steps).0 {
            let next = crate::weyl::apply_generator(&cur, g).unwrap();
            let fpd = FatPointDivisor::from(&next);
            if !fpd.is_nonnegative() {
                break;
            }
            prop_assert_eq!(wdim(&fpd).unwrap(), wdim(&base).unwrap());
            cur = next;
        }
    }

    #[test]
    fn small_curve_k_gives_no_h1(d in 0i64..10, m in proptest::collection::vec(0i64..10, 1..12)) {
        let x = fp(d, &m);
        let max_k = line_and_quartic_supports(x.points())
            .map(|(pts, deg)| pts.iter().map(|&i| x.mult(i)).sum::<i64>() - deg * d)
            .max()
            .unwrap_or(0);
        if max_k <= 1 {
            prop_assert_eq!(h1_correction(&x), 0);
        }
    }

    #[test]
    fn low_multiplicities_contain_no_lines(d in 0i64..10, m in proptest::collection::vec(0i64..6, 1..=8)) {
        let m: Vec<i64> = m.into_iter().map(|x| x.min(d / 2)).collect();
        let r = base_locus_report(&fp(d, &m)).unwrap();
        prop_assert!(r.lines.is_empty());
    }
}
