//! Coefficient records for classes on the P^4 resolution and the Cremona
//! transform written directly on coefficients.
//!
//! Fields store multiplicities with the sign of the usual normal form
//! `dH - sum m_i E_i - ...`, so a positive entry means containment. The
//! `V` coefficients of a surface are the exception: they enter the class
//! with a plus sign.

use super::sym::*;
use super::{pair_complement, pair_index, triple_complement, triple_index, PAIRS, R, TRIPLES};
use crate::chow::ChowClass;
use crate::error::{Error, Result};

fn build(grade: u8, terms: Terms) -> ChowClass {
    let mut c = ChowClass::zero(R, grade);
    for (e, v) in terms {
        c.add_term(e, v).expect("record entries are added once each");
    }
    c
}

fn expect_grade(c: &ChowClass, grade: u8) -> Result<()> {
    if c.ring() != R || c.grade() != grade {
        return Err(Error::WrongGrade {
            expected: grade,
            found: c.grade(),
        });
    }
    Ok(())
}

fn sum(xs: impl IntoIterator<Item = i64>) -> i64 {
    xs.into_iter().sum()
}

/// `D = dH - sum m_i E_i - sum m_ij E_ij - sum m_ijk E_ijk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct P4DivisorData {
    pub d: i64,
    pub m: [i64; 5],
    pub m_line: [i64; 10],
    pub m_plane: [i64; 10],
}

impl P4DivisorData {
    pub fn to_class(&self) -> ChowClass {
        let mut t = vec![(h(), self.d)];
        t.extend((0..5).map(|i| (ex(&[i]), -self.m[i as usize])));
        t.extend(PAIRS.iter().zip(self.m_line).map(|(&(i, j), x)| (ex(&[i, j]), -x)));
        t.extend(
            TRIPLES
                .iter()
                .zip(self.m_plane)
                .map(|(&(i, j, k), x)| (ex(&[i, j, k]), -x)),
        );
        build(1, t)
    }

    pub fn from_class(c: &ChowClass) -> Result<Self> {
        expect_grade(c, 1)?;
        Ok(P4DivisorData {
            d: c.coeff(&h()),
            m: std::array::from_fn(|i| -c.coeff(&ex(&[i as u8]))),
            m_line: std::array::from_fn(|k| -c.coeff(&ex(&[PAIRS[k].0, PAIRS[k].1]))),
            m_plane: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                -c.coeff(&ex(&[i, j, l]))
            }),
        })
    }

    /// Each entry is the image paired with `l`, `l_i`, `l_ij` or `f_ijk`,
    /// which equals the original paired with the transformed curve.
    pub fn cremona(&self) -> Self {
        let total = sum(self.m);
        let outside = |set: &[u8]| total - sum(set.iter().map(|&i| self.m[i as usize]));
        P4DivisorData {
            d: 4 * self.d - total,
            m: std::array::from_fn(|i| 3 * self.d - (total - self.m[i])),
            m_line: std::array::from_fn(|k| {
                let (i, j) = PAIRS[k];
                let [a, b, c] = pair_complement(i, j);
                2 * self.d - outside(&[i, j]) + self.m_plane[triple_index(a, b, c)]
            }),
            m_plane: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                let [a, b] = triple_complement(i, j, l);
                self.d - outside(&[i, j, l]) + self.m_line[pair_index(a, b)]
            }),
        }
    }
}

/// `T = dS - sum m_i S_i - sum m_ij P_ij - sum n_ij F_ij - sum m_ijk H_ijk
/// + sum n_ijk,t V_ijk,t`.
///
/// `n_v[k][a]` is the coefficient of `V_ijk,t` where `(i, j, k) =
/// TRIPLES[k]` and `t` is its `a`-th smallest member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct P4SurfaceData {
    pub d: i64,
    pub m: [i64; 5],
    pub m_line: [i64; 10],
    pub n_line: [i64; 10],
    pub m_plane: [i64; 10],
    pub n_v: [[i64; 3]; 10],
}

impl P4SurfaceData {
    pub fn to_class(&self) -> ChowClass {
        let mut t = vec![(s(), self.d)];
        t.extend((0..5).map(|i| (si(i), -self.m[i as usize])));
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            t.push((p(i, j), -self.m_line[k]));
            t.push((f2(i, j), -self.n_line[k]));
        }
        for (k, &(i, j, l)) in TRIPLES.iter().enumerate() {
            t.push((hh(i, j, l), -self.m_plane[k]));
            for (a, member) in [i, j, l].into_iter().enumerate() {
                t.push((v(i, j, l, member), self.n_v[k][a]));
            }
        }
        build(2, t)
    }

    pub fn from_class(c: &ChowClass) -> Result<Self> {
        expect_grade(c, 2)?;
        Ok(P4SurfaceData {
            d: c.coeff(&s()),
            m: std::array::from_fn(|i| -c.coeff(&si(i as u8))),
            m_line: std::array::from_fn(|k| -c.coeff(&p(PAIRS[k].0, PAIRS[k].1))),
            n_line: std::array::from_fn(|k| -c.coeff(&f2(PAIRS[k].0, PAIRS[k].1))),
            m_plane: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                -c.coeff(&hh(i, j, l))
            }),
            n_v: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                [i, j, l].map(|t| c.coeff(&v(i, j, l, t)))
            }),
        })
    }

    fn nv(&self, tri: [u8; 3], t: u8) -> i64 {
        let k = triple_index(tri[0], tri[1], tri[2]);
        let mut sorted = tri;
        sorted.sort_unstable();
        let a = sorted.iter().position(|&x| x == t).expect("member of triple");
        self.n_v[k][a]
    }

    fn mp(&self, tri: [u8; 3]) -> i64 {
        self.m_plane[triple_index(tri[0], tri[1], tri[2])]
    }

    /// `T . Λ_ijk`.
    fn lambda_pairing(&self, tri: [u8; 3]) -> i64 {
        2 * self.mp(tri) - tri.iter().map(|&t| self.nv(tri, t)).sum::<i64>()
    }

    /// `T . (H_rsu - V_rsu,r - V_rsu,s)`.
    fn ruled_pairing(&self, r: u8, s: u8, u: u8) -> i64 {
        let tri = [r, s, u];
        self.mp(tri) - self.nv(tri, r) - self.nv(tri, s)
    }

    /// The transform read off entry by entry as `phi(T) . X = T . phi(X)`
    /// for `X` in `S, S_i, F_ij, G_ij, H_ijk, V_ijk,t`.
    pub fn cremona(&self) -> Self {
        let ml = |i: u8, j: u8| self.m_line[pair_index(i, j)];
        let nl = |i: u8, j: u8| self.n_line[pair_index(i, j)];
        let diff_avoiding = |skip: &[u8]| -> i64 {
            PAIRS
                .iter()
                .filter(|&&(i, j)| !skip.contains(&i) && !skip.contains(&j))
                .map(|&(i, j)| ml(i, j) - nl(i, j))
                .sum()
        };
        let total = sum(self.m);
        let mut out = P4SurfaceData {
            d: 6 * self.d - 3 * total + diff_avoiding(&[]),
            m: std::array::from_fn(|i| {
                3 * self.d - 2 * (total - self.m[i]) + diff_avoiding(&[i as u8])
            }),
            ..Default::default()
        };
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let [r, s, t] = pair_complement(i, j);
            let lam = self.lambda_pairing([r, s, t]);
            out.m_line[k] = self.d - self.m[r as usize] - self.m[s as usize] - self.m[t as usize]
                + (ml(r, s) - nl(r, s))
                + (ml(r, t) - nl(r, t))
                + (ml(s, t) - nl(s, t))
                + lam;
            out.n_line[k] = lam;
        }
        for (k, &(i, j, l)) in TRIPLES.iter().enumerate() {
            let [r, s] = triple_complement(i, j, l);
            let tri = [i, j, l];
            let ruled: [i64; 3] = tri.map(|u| self.ruled_pairing(r, s, u));
            out.m_plane[k] = 2 * nl(r, s) - ruled.iter().sum::<i64>();
            for a in 0..3 {
                out.n_v[k][a] = nl(r, s) - (0..3).filter(|&b| b != a).map(|b| ruled[b]).sum::<i64>();
            }
        }
        out
    }

    /// True when only the `S`, `S_i` and `P_ij` coefficients can be nonzero.
    pub fn is_reduced(&self) -> bool {
        self.n_line == [0; 10] && self.m_plane == [0; 10] && self.n_v == [[0; 3]; 10]
    }
}

/// `C = dl - sum m_i l_i - sum m_ij l_ij - sum m_ijk f_ijk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct P4CurveData {
    pub d: i64,
    pub m: [i64; 5],
    pub m_line: [i64; 10],
    pub m_plane: [i64; 10],
}

impl P4CurveData {
    pub fn to_class(&self) -> ChowClass {
        let mut t = vec![(l(), self.d)];
        t.extend((0..5).map(|i| (li(i), -self.m[i as usize])));
        t.extend(PAIRS.iter().zip(self.m_line).map(|(&(i, j), x)| (lij(i, j), -x)));
        t.extend(
            TRIPLES
                .iter()
                .zip(self.m_plane)
                .map(|(&(i, j, k), x)| (f3(i, j, k), -x)),
        );
        build(3, t)
    }

    pub fn from_class(c: &ChowClass) -> Result<Self> {
        expect_grade(c, 3)?;
        Ok(P4CurveData {
            d: c.coeff(&l()),
            m: std::array::from_fn(|i| -c.coeff(&li(i as u8))),
            m_line: std::array::from_fn(|k| -c.coeff(&lij(PAIRS[k].0, PAIRS[k].1))),
            m_plane: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                -c.coeff(&f3(i, j, l))
            }),
        })
    }

    pub fn cremona(&self) -> Self {
        let total = sum(self.m);
        P4CurveData {
            d: 4 * self.d - 3 * total - 2 * sum(self.m_line) - sum(self.m_plane),
            m: std::array::from_fn(|i| {
                let i = i as u8;
                let lines: i64 = PAIRS
                    .iter()
                    .zip(self.m_line)
                    .filter(|(&(a, b), _)| a != i && b != i)
                    .map(|(_, x)| x)
                    .sum();
                let planes: i64 = TRIPLES
                    .iter()
                    .zip(self.m_plane)
                    .filter(|(&(a, b, c), _)| a != i && b != i && c != i)
                    .map(|(_, x)| x)
                    .sum();
                self.d - (total - self.m[i as usize]) - lines - planes
            }),
            m_line: std::array::from_fn(|k| {
                let [a, b, c] = pair_complement(PAIRS[k].0, PAIRS[k].1);
                self.m_plane[triple_index(a, b, c)]
            }),
            m_plane: std::array::from_fn(|k| {
                let (i, j, l) = TRIPLES[k];
                let [a, b] = triple_complement(i, j, l);
                self.m_line[pair_index(a, b)]
            }),
        }
    }
}

/// A surface class in the span of `S`, `S_i` and `P_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ReducedSurface {
    pub d: i64,
    pub m: [i64; 5],
    pub m_line: [i64; 10],
}

impl ReducedSurface {
    pub fn cremona(&self) -> Self {
        let ml = |i: u8, j: u8| self.m_line[pair_index(i, j)];
        let total = sum(self.m);
        ReducedSurface {
            d: 6 * self.d - 3 * total + sum(self.m_line),
            m: std::array::from_fn(|i| {
                let i = i as u8;
                let avoiding: i64 = PAIRS
                    .iter()
                    .filter(|&&(a, b)| a != i && b != i)
                    .map(|&(a, b)| ml(a, b))
                    .sum();
                3 * self.d - 2 * (total - self.m[i as usize]) + avoiding
            }),
            m_line: std::array::from_fn(|k| {
                let [r, s, t] = pair_complement(PAIRS[k].0, PAIRS[k].1);
                self.d - self.m[r as usize] - self.m[s as usize] - self.m[t as usize]
                    + ml(r, s)
                    + ml(r, t)
                    + ml(s, t)
            }),
        }
    }

    pub fn to_full(&self) -> P4SurfaceData {
        P4SurfaceData {
            d: self.d,
            m: self.m,
            m_line: self.m_line,
            ..Default::default()
        }
    }

    /// `None` unless the record has no contact coefficients.
    pub fn from_full(t: &P4SurfaceData) -> Option<Self> {
        t.is_reduced().then_some(ReducedSurface {
            d: t.d,
            m: t.m,
            m_line: t.m_line,
        })
    }
}

/// A curve class in the span of `l` and the `l_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ReducedCurve {
    pub d: i64,
    pub m: [i64; 5],
}

impl ReducedCurve {
    pub fn cremona(&self) -> Self {
        let total = sum(self.m);
        ReducedCurve {
            d: 4 * self.d - 3 * total,
            m: std::array::from_fn(|i| self.d - (total - self.m[i])),
        }
    }

    pub fn to_full(&self) -> P4CurveData {
        P4CurveData {
            d: self.d,
            m: self.m,
            ..Default::default()
        }
    }
}

/// A divisor modulo the span of the `E_ij` and `E_ijk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ReducedDivisor {
    pub d: i64,
    pub m: [i64; 5],
}

impl ReducedDivisor {
    pub fn cremona(&self) -> Self {
        let total = sum(self.m);
        ReducedDivisor {
            d: 4 * self.d - total,
            m: std::array::from_fn(|i| 3 * self.d - (total - self.m[i])),
        }
    }

    pub fn to_full(&self) -> P4DivisorData {
        P4DivisorData {
            d: self.d,
            m: self.m,
            ..Default::default()
        }
    }

    pub fn from_full(d: &P4DivisorData) -> Self {
        ReducedDivisor { d: d.d, m: d.m }
    }
}
