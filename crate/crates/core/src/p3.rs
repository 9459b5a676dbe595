//! The Chow ring of P^3 blown up at the four coordinate points and the six
//! coordinate lines, and the action of the standard Cremona involution.
//!
//! Indices are 0-based: points `0..4`, lines `ij` with `i < j`.

use std::sync::OnceLock;

use crate::chow::{combo, parse_class, BasisElement, ChowClass, GradedRing, IndexSet, Kind, RingId};
use crate::error::Result;

const R: RingId = RingId::X3;

/// The six coordinate lines in lexicographic order; record arrays indexed
/// by pair use this order.
pub const PAIRS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Position of the pair `{i, j}` in [`PAIRS`].
pub fn pair_index(i: u8, j: u8) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .expect("pair of distinct indices in 0..4")
}

fn complement_pair(i: u8, j: u8) -> (u8, u8) {
    let c = IndexSet::of(&[i, j]).complement(4).to_vec();
    (c[0], c[1])
}

fn el(kind: Kind, idx: &[u8]) -> BasisElement {
    BasisElement::make(R, kind, idx)
}

fn h() -> BasisElement {
    el(Kind::Hyperplane, &[])
}
fn ex(idx: &[u8]) -> BasisElement {
    el(Kind::Exceptional, idx)
}
fn line() -> BasisElement {
    el(Kind::Line, &[])
}
fn li(i: u8) -> BasisElement {
    el(Kind::ExceptionalLine, &[i])
}
fn fib(i: u8, j: u8) -> BasisElement {
    el(Kind::Fiber, &[i, j])
}
fn pt() -> BasisElement {
    el(Kind::Point, &[])
}

fn basis() -> Vec<BasisElement> {
    let mut b = vec![el(Kind::Fundamental, &[]), h()];
    b.extend((0..4).map(|i| ex(&[i])));
    b.extend(PAIRS.iter().map(|&(i, j)| ex(&[i, j])));
    b.push(line());
    b.extend((0..4).map(li));
    b.extend(PAIRS.iter().map(|&(i, j)| fib(i, j)));
    b.push(pt());
    b
}

fn zero(grade: u8) -> ChowClass {
    ChowClass::zero(R, grade)
}

// `a` precedes `b` in the basis, so grade(a) <= grade(b) and, for two
// exceptional divisors, |a| <= |b|.
fn rule(a: &BasisElement, b: &BasisElement) -> ChowClass {
    use Kind::*;
    if a.kind() == Fundamental {
        return ChowClass::basis(*b);
    }
    let ia = a.indices().to_vec();
    let ib = b.indices().to_vec();
    match (a.grade(), b.grade()) {
        (1, 1) => match (a.kind(), b.kind()) {
            (Hyperplane, Hyperplane) => ChowClass::basis(line()),
            (Hyperplane, _) if ib.len() == 2 => ChowClass::basis(fib(ib[0], ib[1])),
            (Hyperplane, _) => zero(2),
            _ => match (ia.len(), ib.len()) {
                (1, 1) if ia == ib => combo(R, &[(li(ia[0]), -1)]),
                (1, 2) if ib.contains(&ia[0]) => ChowClass::basis(fib(ib[0], ib[1])),
                (2, 2) if ia == ib => combo(
                    R,
                    &[(fib(ia[0], ia[1]), -2), (line(), -1), (li(ia[0]), 1), (li(ia[1]), 1)],
                ),
                _ => zero(2),
            },
        },
        (1, 2) => match (a.kind(), b.kind()) {
            (Hyperplane, Line) => ChowClass::basis(pt()),
            (Hyperplane, _) => zero(3),
            (Exceptional, ExceptionalLine) if ia == ib => combo(R, &[(pt(), -1)]),
            (Exceptional, Fiber) if ia == ib => combo(R, &[(pt(), -1)]),
            _ => zero(3),
        },
        _ => unreachable!("grade sum above 3 is never tabulated"),
    }
}

/// The ring, tabulated on first use.
pub fn ring() -> &'static GradedRing {
    static RING: OnceLock<GradedRing> = OnceLock::new();
    RING.get_or_init(|| GradedRing::build(R, basis(), rule))
}

fn derived(symbol: &str) -> Option<Result<ChowClass>> {
    let idx = symbol.strip_prefix("g_")?;
    let digits: Vec<u8> = idx
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as u8))
        .collect::<Option<_>>()?;
    if digits.len() != 2 || digits[0] >= digits[1] || digits[1] > 3 {
        return None;
    }
    let (i, j) = (digits[0], digits[1]);
    Some(Ok(g(i, j)))
}

/// `g_ij = f_ij + l - l_i - l_j`, the class of a line in `E_ij` that is not a
/// fiber.
pub fn g(i: u8, j: u8) -> ChowClass {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    combo(R, &[(fib(i, j), 1), (line(), 1), (li(i), -1), (li(j), -1)])
}

/// Parses a symbolic class, rewriting `g_ij` into the stored basis.
pub fn normalize(expr: &str) -> Result<ChowClass> {
    parse_class(R, expr, &derived)
}

fn cremona_basis(e: &BasisElement) -> Result<ChowClass> {
    use Kind::*;
    let idx = e.indices().to_vec();
    let all_ex = |skip: &dyn Fn(&[u8]) -> bool, c: i64| -> Vec<(BasisElement, i64)> {
        let mut t: Vec<(BasisElement, i64)> = (0..4u8)
            .filter(|&i| !skip(&[i]))
            .map(|i| (ex(&[i]), c))
            .collect();
        t.extend(
            PAIRS
                .iter()
                .filter(|&&(i, j)| !skip(&[i, j]))
                .map(|&(i, j)| (ex(&[i, j]), -1)),
        );
        t
    };
    let class = match e.kind() {
        Fundamental | Point => ChowClass::basis(*e),
        Hyperplane => {
            let mut t = vec![(h(), 3)];
            t.extend(all_ex(&|_| false, -2));
            combo(R, &t)
        }
        Exceptional if idx.len() == 1 => {
            let i = idx[0];
            let mut t = vec![(h(), 1)];
            t.extend(all_ex(&|s: &[u8]| s.contains(&i), -1));
            combo(R, &t)
        }
        Exceptional => {
            let (k, l) = complement_pair(idx[0], idx[1]);
            ChowClass::basis(ex(&[k, l]))
        }
        Line => {
            let mut t = vec![(line(), 3)];
            t.extend((0..4).map(|i| (li(i), -1)));
            combo(R, &t)
        }
        ExceptionalLine => {
            let mut t = vec![(line(), 2)];
            t.extend((0..4).filter(|&j| j != idx[0]).map(|j| (li(j), -1)));
            combo(R, &t)
        }
        Fiber => {
            let (k, l) = complement_pair(idx[0], idx[1]);
            g(k, l)
        }
        _ => unreachable!("not an X3 basis kind"),
    };
    Ok(class)
}

/// The Cremona involution, extended linearly.
pub fn cremona(x: &ChowClass) -> Result<ChowClass> {
    x.map_linear(cremona_basis)
}

/// `D = dH - sum m_i E_i - sum n_ij E_ij`. Pair data follows [`PAIRS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct P3DivisorData {
    pub d: i64,
    pub m: [i64; 4],
    pub n: [i64; 6],
}

/// `C = dl - sum m_i l_i - sum n_ij f_ij`; `n_ij` is the additional contact
/// of the curve with the line `L_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct P3CurveData {
    pub d: i64,
    pub m: [i64; 4],
    pub n: [i64; 6],
}

impl P3DivisorData {
    pub fn to_class(&self) -> ChowClass {
        let mut t = vec![(h(), self.d)];
        t.extend((0..4).map(|i| (ex(&[i]), -self.m[i as usize])));
        t.extend(PAIRS.iter().zip(self.n).map(|(&(i, j), n)| (ex(&[i, j]), -n)));
        let mut c = ChowClass::zero(R, 1);
        for (e, v) in t {
            c.add_term(e, v).expect("negation of i64 record entry");
        }
        c
    }

    /// Inverse of [`P3DivisorData::to_class`].
    pub fn from_class(c: &ChowClass) -> Result<Self> {
        expect_grade(c, 1)?;
        Ok(P3DivisorData {
            d: c.coeff(&h()),
            m: std::array::from_fn(|i| -c.coeff(&ex(&[i as u8]))),
            n: std::array::from_fn(|k| -c.coeff(&ex(&[PAIRS[k].0, PAIRS[k].1]))),
        })
    }

    pub fn cremona(&self) -> Self {
        let sum: i64 = self.m.iter().sum();
        P3DivisorData {
            d: 3 * self.d - sum,
            m: std::array::from_fn(|i| 2 * self.d - (sum - self.m[i])),
            n: std::array::from_fn(|k| {
                let (i, j) = PAIRS[k];
                let (a, b) = complement_pair(i, j);
                self.d + self.n[pair_index(a, b)] - self.m[a as usize] - self.m[b as usize]
            }),
        }
    }
}

impl P3CurveData {
    pub fn to_class(&self) -> ChowClass {
        let mut c = ChowClass::zero(R, 2);
        let mut push = |e, v| c.add_term(e, v).expect("record entry");
        push(line(), self.d);
        for i in 0..4u8 {
            push(li(i), -self.m[i as usize]);
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            push(fib(i, j), -self.n[k]);
        }
        c
    }

    pub fn from_class(c: &ChowClass) -> Result<Self> {
        expect_grade(c, 2)?;
        Ok(P3CurveData {
            d: c.coeff(&line()),
            m: std::array::from_fn(|i| -c.coeff(&li(i as u8))),
            n: std::array::from_fn(|k| -c.coeff(&fib(PAIRS[k].0, PAIRS[k].1))),
        })
    }

    /// Full transform including the line-contact data. When every `n_ij` is
    /// zero this reduces to `d' = 3d - 2 sum m_i`, `m_i' = d - sum_{j != i} m_j`.
    pub fn cremona(&self) -> Self {
        let sum_m: i64 = self.m.iter().sum();
        let sum_n: i64 = self.n.iter().sum();
        P3CurveData {
            d: 3 * self.d - 2 * sum_m - sum_n,
            m: std::array::from_fn(|i| {
                let avoiding: i64 = PAIRS
                    .iter()
                    .zip(self.n)
                    .filter(|(&(a, b), _)| a as usize != i && b as usize != i)
                    .map(|(_, n)| n)
                    .sum();
                self.d - (sum_m - self.m[i]) - avoiding
            }),
            n: std::array::from_fn(|k| {
                let (a, b) = complement_pair(PAIRS[k].0, PAIRS[k].1);
                self.n[pair_index(a, b)]
            }),
        }
    }
}

fn expect_grade(c: &ChowClass, grade: u8) -> Result<()> {
    if c.ring() != R || c.grade() != grade {
        return Err(crate::Error::WrongGrade {
            expected: grade,
            found: c.grade(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cls(s: &str) -> ChowClass {
        normalize(s).unwrap()
    }

    #[test]
    fn ranks() {
        let r = ring();
        assert_eq!(r.basis().len(), 24);
        assert_eq!((0..=3).map(|g| r.rank(g)).collect::<Vec<_>>(), vec![1, 11, 11, 1]);
    }

    #[test]
    fn products() {
        assert_eq!(cls("H").mul(&cls("H")).unwrap(), cls("l"));
        assert_eq!(cls("E_0").mul(&cls("E_0")).unwrap(), cls("-l_0"));
        assert_eq!(cls("E_01").mul(&cls("E_01")).unwrap(), cls("-2f_01 - l + l_0 + l_1"));
        assert_eq!(cls("E_1").mul(&cls("E_01")).unwrap(), cls("f_01"));
        assert_eq!(cls("E_2").mul(&cls("E_01")).unwrap(), ChowClass::zero(R, 2));
        assert_eq!(cls("E_23").mul(&cls("f_23")).unwrap().degree().unwrap(), -1);
        assert_eq!(cls("H").mul(&cls("l")).unwrap().degree().unwrap(), 1);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(cls("g_01"), cls("f_01 + l - l_0 - l_1"));
        assert_eq!(cls("f_01"), ChowClass::basis(fib(0, 1)));
        assert!(cls("g_01 - g_01").is_zero());
        assert!(matches!(normalize("g_44"), Err(crate::Error::UnknownSymbol(_))));
    }

    #[test]
    fn cremona_examples() {
        assert_eq!(
            cremona(&cls("H")).unwrap(),
            cls("3H - 2E_0 - 2E_1 - 2E_2 - 2E_3 - E_01 - E_02 - E_03 - E_12 - E_13 - E_23")
        );
        assert_eq!(cremona(&cls("E_01")).unwrap(), cls("E_23"));
        assert_eq!(cremona(&cls("p")).unwrap(), cls("p"));
        assert_eq!(cremona(&cls("f_01")).unwrap(), cls("f_23 + l - l_2 - l_3"));
    }

    #[test]
    fn involution_and_automorphism() {
        let r = ring();
        for a in r.basis() {
            let x = ChowClass::basis(*a);
            assert_eq!(cremona(&cremona(&x).unwrap()).unwrap(), x, "{a}");
            for b in r.basis() {
                if a.grade() + b.grade() > 3 {
                    continue;
                }
                let y = ChowClass::basis(*b);
                let lhs = cremona(&x.mul(&y).unwrap()).unwrap();
                let rhs = cremona(&x).unwrap().mul(&cremona(&y).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
        }
    }

    #[test]
    fn associativity_exhaustive() {
        let r = ring();
        for a in r.basis() {
            for b in r.basis() {
                for c in r.basis() {
                    if a.grade() + b.grade() + c.grade() > 3 {
                        continue;
                    }
                    let (x, y, z) = (ChowClass::basis(*a), ChowClass::basis(*b), ChowClass::basis(*c));
                    assert_eq!(
                        x.mul(&y).unwrap().mul(&z).unwrap(),
                        x.mul(&y.mul(&z).unwrap()).unwrap(),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn divisor_examples() {
        let plane = P3DivisorData { d: 1, m: [1, 1, 1, 0], n: [0; 6] };
        assert_eq!(
            plane.cremona(),
            P3DivisorData { d: 0, m: [0, 0, 0, -1], n: [0, 0, -1, 0, -1, -1] }
        );
        let quadric = P3DivisorData { d: 2, m: [1; 4], n: [0; 6] };
        assert_eq!(quadric.cremona(), quadric);
        assert_eq!(P3DivisorData::default().cremona(), P3DivisorData::default());
    }

    #[test]
    fn curve_examples() {
        // Without contact data a line through two of the points has a
        // negative-degree image: the coordinate line itself is blown up.
        let l01 = P3CurveData { d: 1, m: [1, 1, 0, 0], n: [0; 6] };
        assert_eq!(l01.cremona(), P3CurveData { d: -1, m: [0, 0, -1, -1], n: [0; 6] });
        let general = P3CurveData { d: 1, ..Default::default() };
        assert_eq!(general.cremona(), P3CurveData { d: 3, m: [1; 4], n: [0; 6] });
    }

    fn small() -> impl Strategy<Value = i64> {
        -3i64..=3
    }

    prop_compose! {
        fn divisor()(d in small(), m in proptest::array::uniform4(small()), n in proptest::array::uniform6(small())) -> P3DivisorData {
            P3DivisorData { d, m, n }
        }
    }

    prop_compose! {
        fn curve()(d in small(), m in proptest::array::uniform4(small()), n in proptest::array::uniform6(small())) -> P3CurveData {
            P3CurveData { d, m, n }
        }
    }

    proptest! {
        #[test]
        fn divisor_formulas_match_class_action(x in divisor()) {
            let c = x.to_class();
            prop_assert_eq!(P3DivisorData::from_class(&c).unwrap(), x);
            prop_assert_eq!(P3DivisorData::from_class(&cremona(&c).unwrap()).unwrap(), x.cremona());
            prop_assert_eq!(x.cremona().cremona(), x);
        }

        #[test]
        fn curve_formulas_match_class_action(x in curve()) {
            let c = x.to_class();
            prop_assert_eq!(P3CurveData::from_class(&c).unwrap(), x);
            prop_assert_eq!(P3CurveData::from_class(&cremona(&c).unwrap()).unwrap(), x.cremona());
            prop_assert_eq!(x.cremona().cremona(), x);
        }

        #[test]
        fn pairing_is_preserved(x in divisor(), y in curve()) {
            let before = x.to_class().mul(&y.to_class()).unwrap().degree().unwrap();
            let after = x.cremona().to_class().mul(&y.cremona().to_class()).unwrap().degree().unwrap();
            prop_assert_eq!(before, after);
        }
    }
}
