//! The Chow ring of P^4 blown up at the 5 coordinate points, then the 10
//! coordinate lines, then the 10 coordinate planes, and the action of the
//! standard Cremona involution on it.
//!
//! Indices are 0-based (`0..5`). Pair and triple arrays in the records use
//! the lexicographic orders [`PAIRS`] and [`TRIPLES`].

mod records;
mod table;

use std::sync::OnceLock;

use crate::chow::{parse_class, BasisElement, ChowClass, GradedRing, IndexSet, Kind, RingId};
use crate::error::Result;

pub use records::{
    P4CurveData, P4DivisorData, P4SurfaceData, ReducedCurve, ReducedDivisor, ReducedSurface,
};

const R: RingId = RingId::X4;

pub const PAIRS: [(u8, u8); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub const TRIPLES: [(u8, u8, u8); 10] = [
    (0, 1, 2),
    (0, 1, 3),
    (0, 1, 4),
    (0, 2, 3),
    (0, 2, 4),
    (0, 3, 4),
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 4),
    (2, 3, 4),
];

pub fn pair_index(i: u8, j: u8) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (i, j)).expect("pair of distinct indices in 0..5")
}

pub fn triple_index(i: u8, j: u8, k: u8) -> usize {
    let mut t = [i, j, k];
    t.sort_unstable();
    TRIPLES
        .iter()
        .position(|&p| p == (t[0], t[1], t[2]))
        .expect("triple of distinct indices in 0..5")
}

/// The triple complementary to a pair, in increasing order.
pub fn pair_complement(i: u8, j: u8) -> [u8; 3] {
    let c = IndexSet::of(&[i, j]).complement(5).to_vec();
    [c[0], c[1], c[2]]
}

/// The pair complementary to a triple, in increasing order.
pub fn triple_complement(i: u8, j: u8, k: u8) -> [u8; 2] {
    let c = IndexSet::of(&[i, j, k]).complement(5).to_vec();
    [c[0], c[1]]
}

pub(crate) mod sym {
    //! Shorthand constructors for basis elements and derived classes.
    use super::R;
    use crate::chow::{combo, BasisElement, ChowClass, Kind};

    pub type Terms = Vec<(BasisElement, i64)>;

    fn el(kind: Kind, idx: &[u8]) -> BasisElement {
        BasisElement::make(R, kind, idx)
    }
    fn sorted<const N: usize>(mut a: [u8; N]) -> [u8; N] {
        a.sort_unstable();
        a
    }

    pub fn fundamental() -> BasisElement {
        el(Kind::Fundamental, &[])
    }
    pub fn h() -> BasisElement {
        el(Kind::Hyperplane, &[])
    }
    pub fn ex(idx: &[u8]) -> BasisElement {
        let mut v = idx.to_vec();
        v.sort_unstable();
        el(Kind::Exceptional, &v)
    }
    pub fn s() -> BasisElement {
        el(Kind::Plane, &[])
    }
    pub fn si(i: u8) -> BasisElement {
        el(Kind::ExceptionalPlane, &[i])
    }
    pub fn p(i: u8, j: u8) -> BasisElement {
        el(Kind::Section, &sorted([i, j]))
    }
    pub fn f2(i: u8, j: u8) -> BasisElement {
        el(Kind::Fiber, &sorted([i, j]))
    }
    pub fn hh(i: u8, j: u8, k: u8) -> BasisElement {
        el(Kind::RuledPlane, &sorted([i, j, k]))
    }
    pub fn v(i: u8, j: u8, k: u8, t: u8) -> BasisElement {
        BasisElement::make_v(R, &sorted([i, j, k]), t)
    }
    pub fn l() -> BasisElement {
        el(Kind::Line, &[])
    }
    pub fn li(i: u8) -> BasisElement {
        el(Kind::ExceptionalLine, &[i])
    }
    pub fn lij(i: u8, j: u8) -> BasisElement {
        el(Kind::ExceptionalLine, &sorted([i, j]))
    }
    pub fn f3(i: u8, j: u8, k: u8) -> BasisElement {
        el(Kind::Fiber, &sorted([i, j, k]))
    }
    pub fn pt() -> BasisElement {
        el(Kind::Point, &[])
    }

    /// `G_ij = P_ij + F_ij`.
    pub fn g(i: u8, j: u8) -> Terms {
        vec![(p(i, j), 1), (f2(i, j), 1)]
    }
    /// `Λ_ijk = 2H_ijk - V_ijk,i - V_ijk,j - V_ijk,k`.
    pub fn lambda(i: u8, j: u8, k: u8) -> Terms {
        vec![(hh(i, j, k), 2), (v(i, j, k, i), -1), (v(i, j, k, j), -1), (v(i, j, k, k), -1)]
    }
    /// `M_ijk = S - S_i - S_j - S_k - P_ij - P_ik - P_jk + Λ_ijk`.
    pub fn m(i: u8, j: u8, k: u8) -> Terms {
        let mut t = vec![
            (s(), 1),
            (si(i), -1),
            (si(j), -1),
            (si(k), -1),
            (p(i, j), -1),
            (p(i, k), -1),
            (p(j, k), -1),
        ];
        t.extend(lambda(i, j, k));
        t
    }
    /// `h_ij = l_ij + l - l_i - l_j`.
    pub fn hcurve(i: u8, j: u8) -> Terms {
        vec![(lij(i, j), 1), (l(), 1), (li(i), -1), (li(j), -1)]
    }
    /// `l_ijk = 2f_ijk + l - l_ij - l_ik - l_jk`.
    pub fn lcurve(i: u8, j: u8, k: u8) -> Terms {
        vec![(f3(i, j, k), 2), (l(), 1), (lij(i, j), -1), (lij(i, k), -1), (lij(j, k), -1)]
    }
    /// `e_ijk,i = f_ijk + l_i - l_ij - l_ik`.
    pub fn ecurve(i: u8, j: u8, k: u8, t: u8) -> Terms {
        let others: Vec<u8> = [i, j, k].into_iter().filter(|&x| x != t).collect();
        vec![(f3(i, j, k), 1), (li(t), 1), (lij(t, others[0]), -1), (lij(t, others[1]), -1)]
    }

    pub fn scaled(t: Terms, c: i64) -> Terms {
        t.into_iter().map(|(e, v)| (e, v * c)).collect()
    }

    pub fn class(t: &[(BasisElement, i64)]) -> ChowClass {
        combo(R, t)
    }
}

fn basis() -> Vec<BasisElement> {
    use sym::*;
    let mut b = vec![fundamental(), h()];
    b.extend((0..5).map(|i| ex(&[i])));
    b.extend(PAIRS.iter().map(|&(i, j)| ex(&[i, j])));
    b.extend(TRIPLES.iter().map(|&(i, j, k)| ex(&[i, j, k])));
    b.push(s());
    b.extend((0..5).map(si));
    b.extend(PAIRS.iter().map(|&(i, j)| p(i, j)));
    b.extend(PAIRS.iter().map(|&(i, j)| f2(i, j)));
    b.extend(TRIPLES.iter().map(|&(i, j, k)| hh(i, j, k)));
    for &(i, j, k) in &TRIPLES {
        for t in [i, j, k] {
            b.push(v(i, j, k, t));
        }
    }
    b.push(l());
    b.extend((0..5).map(li));
    b.extend(PAIRS.iter().map(|&(i, j)| lij(i, j)));
    b.extend(TRIPLES.iter().map(|&(i, j, k)| f3(i, j, k)));
    b.push(pt());
    b
}

/// The ring, tabulated on first use.
pub fn ring() -> &'static GradedRing {
    static RING: OnceLock<GradedRing> = OnceLock::new();
    RING.get_or_init(|| GradedRing::build(R, basis(), table::rule))
}

fn digits(s: &str) -> Option<Vec<u8>> {
    let v: Vec<u8> = s
        .chars()
        .map(|c| c.to_digit(10).filter(|&d| d < 5).map(|d| d as u8))
        .collect::<Option<_>>()?;
    let strictly_sorted = v.windows(2).all(|w| w[0] < w[1]);
    strictly_sorted.then_some(v)
}

fn derived(symbol: &str) -> Option<Result<ChowClass>> {
    let (stem, rest) = symbol.split_once('_')?;
    let (idx, dist) = match rest.split_once(',') {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let ix = digits(idx)?;
    let t = match (stem, ix.len(), dist) {
        ("G", 2, None) => sym::g(ix[0], ix[1]),
        ("Lambda", 3, None) => sym::lambda(ix[0], ix[1], ix[2]),
        ("M", 3, None) => sym::m(ix[0], ix[1], ix[2]),
        ("h", 2, None) => sym::hcurve(ix[0], ix[1]),
        ("l", 3, None) => sym::lcurve(ix[0], ix[1], ix[2]),
        ("e", 3, Some(d)) => {
            let t: u8 = d.parse().ok()?;
            if !ix.contains(&t) {
                return None;
            }
            sym::ecurve(ix[0], ix[1], ix[2], t)
        }
        _ => return None,
    };
    Some(Ok(sym::class(&t)))
}

/// Parses a symbolic class, rewriting `G_ij`, `M_ijk`, `Lambda_ijk`, `h_ij`,
/// `l_ijk` and `e_ijk,t` into the stored basis.
pub fn normalize(expr: &str) -> Result<ChowClass> {
    parse_class(R, expr, &derived)
}

fn cremona_basis(e: &BasisElement) -> Result<ChowClass> {
    use sym::*;
    use Kind::*;
    let idx = e.indices().to_vec();
    let mut t: Terms = Vec::new();
    // (H_ijt - V_ijt,i - V_ijt,j) for the pair ij complementary to a triple.
    let ruled_term = |t: &mut Terms, i: u8, j: u8, k: u8| {
        t.push((hh(i, j, k), -1));
        t.push((v(i, j, k, i), 1));
        t.push((v(i, j, k, j), 1));
    };
    match (e.kind(), idx.len()) {
        (Fundamental, _) | (Point, _) => t.push((*e, 1)),
        (Hyperplane, _) => {
            t.push((h(), 4));
            for n in 1..=3 {
                for set in IndexSet::subsets(5, n) {
                    t.push((ex(&set.to_vec()), -(4 - n as i64)));
                }
            }
        }
        (Exceptional, 1) => {
            t.push((h(), 1));
            for n in 1..=3 {
                for set in IndexSet::subsets(5, n) {
                    if !set.contains(idx[0]) {
                        t.push((ex(&set.to_vec()), -1));
                    }
                }
            }
        }
        (Exceptional, _) => {
            let c = e.indices().complement(5).to_vec();
            t.push((ex(&c), 1));
        }
        (Plane, _) => {
            t.push((s(), 6));
            t.extend((0..5).map(|i| (si(i), -3)));
            t.extend(PAIRS.iter().map(|&(i, j)| (p(i, j), -1)));
        }
        (ExceptionalPlane, _) => {
            let m0 = idx[0];
            t.push((s(), 3));
            t.extend((0..5).filter(|&i| i != m0).map(|i| (si(i), -2)));
            t.extend(
                PAIRS
                    .iter()
                    .filter(|&&(i, j)| i != m0 && j != m0)
                    .map(|&(i, j)| (p(i, j), -1)),
            );
        }
        (Section, _) => {
            let [i, j, k] = pair_complement(idx[0], idx[1]);
            t.extend([(s(), -1), (si(i), 1), (si(j), 1), (si(k), 1)]);
            t.extend([(p(i, j), 1), (p(i, k), 1), (p(j, k), 1)]);
        }
        (Fiber, 2) => {
            let [i, j, k] = pair_complement(idx[0], idx[1]);
            t.extend(m(i, j, k));
        }
        (RuledPlane, _) => {
            let [i, j] = triple_complement(idx[0], idx[1], idx[2]);
            t.extend(scaled(g(i, j), 2));
            for &k in &idx {
                ruled_term(&mut t, i, j, k);
            }
        }
        (RuledExceptional, _) => {
            let dist = e.distinguished().expect("V carries a distinguished index");
            let [i, j] = triple_complement(idx[0], idx[1], idx[2]);
            t.extend(g(i, j));
            for &k in idx.iter().filter(|&&k| k != dist) {
                ruled_term(&mut t, i, j, k);
            }
        }
        (Line, _) => {
            t.push((l(), 4));
            t.extend((0..5).map(|i| (li(i), -1)));
        }
        (ExceptionalLine, 1) => {
            t.push((l(), 3));
            t.extend((0..5).filter(|&i| i != idx[0]).map(|i| (li(i), -1)));
        }
        (ExceptionalLine, _) => {
            let [i, j, k] = pair_complement(idx[0], idx[1]);
            t.extend([(l(), 2), (li(i), -1), (li(j), -1), (li(k), -1), (f3(i, j, k), 1)]);
        }
        (Fiber, _) => {
            let [i, j] = triple_complement(idx[0], idx[1], idx[2]);
            t.extend([(l(), 1), (li(i), -1), (li(j), -1), (lij(i, j), 1)]);
        }
    }
    Ok(class(&t))
}

/// The Cremona involution, extended linearly.
pub fn cremona(x: &ChowClass) -> Result<ChowClass> {
    x.map_linear(cremona_basis)
}

/// Intersection number of two complementary-grade classes.
pub fn pairing(x: &ChowClass, y: &ChowClass) -> Result<i64> {
    x.mul(y)?.degree()
}

#[cfg(test)]
mod tests;
