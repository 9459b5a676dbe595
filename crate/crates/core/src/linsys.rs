//! Linear systems of hypersurfaces in P^4 with prescribed multiplicities at
//! general points.
//!
//! For `D = dH - sum m_i E_i` this module computes the Euler characteristic,
//! the containment multiplicities `k` of Weyl lines, planes and divisors in
//! the base locus, the Weyl expected dimension and a report on pairs of
//! contained Weyl planes that meet.
//!
//! A Weyl cycle `T` has `k_T(D) = k_{T0}(w D)` for any Weyl element `w` with
//! `w T = T0`, where `T0` is a linear span of points. For the span of `r + 1`
//! points the multiplicity is the sum of their `m_i` minus `r d`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{
    apply_word_unchecked, classify_surface, divisor_orbit, line_orbit, plane_orbit,
    weyl_plane_pairing, CurveRecord, DivisorRecord, OrbitResult, SurfaceFamily, SurfaceRecord,
    WeylRecord, MAX_POINTS,
};

/// Largest absolute value accepted for `d` and the `m_i`; keeps every
/// binomial and every transported record well inside `i64`.
pub const MAX_ENTRY: i64 = 10_000;

/// The divisor class `dH - sum m_i E_i` on P^4 blown up at `s = m.len()`
/// general points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FatPointDivisor {
    d: i64,
    m: Vec<i64>,
}

impl FatPointDivisor {
    pub fn new(d: i64, m: &[i64]) -> Result<Self> {
        if std::iter::once(&d).chain(m).any(|x| x.abs() > MAX_ENTRY) {
            return Err(Error::InvalidRecord(format!("entries must lie in ±{MAX_ENTRY}")));
        }
        Ok(FatPointDivisor { d, m: m.to_vec() })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn m(&self) -> &[i64] {
        &self.m
    }

    pub fn points(&self) -> usize {
        self.m.len()
    }

    /// Multiplicity at the 1-based point `i`; zero beyond `s`.
    pub fn mult(&self, i: usize) -> i64 {
        self.m.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `d >= 0` and every `m_i >= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.d >= 0 && self.m.iter().all(|&x| x >= 0)
    }

    /// The record through `s` points, padding with zero multiplicities.
    fn record(&self, s: usize) -> Result<DivisorRecord> {
        if self.points() > s {
            return Err(Error::UnsupportedPointCount(self.points()));
        }
        let mut m = self.m.clone();
        m.resize(s, 0);
        DivisorRecord::new(s, self.d, &m)
    }
}

impl From<&DivisorRecord> for FatPointDivisor {
    fn from(r: &DivisorRecord) -> Self {
        FatPointDivisor { d: r.d, m: r.m().to_vec() }
    }
}

impl fmt::Display for FatPointDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
        write!(f, "({};{})", self.d, m.join(","))
    }
}

/// `C(a, 4)`, zero for `a < 4`.
pub fn binom4(a: i64) -> i64 {
    if a < 4 {
        0
    } else {
        a * (a - 1) / 2 * (a - 2) / 3 * (a - 3) / 4
    }
}

/// `C(d + 4, 4) - sum C(m_i + 3, 4)`.
pub fn chi(d: &FatPointDivisor) -> i64 {
    binom4(d.d + 4) - d.m.iter().map(|&m| binom4(m + 3)).sum::<i64>()
}

/// Containment multiplicity of the line through the 1-based points `i`, `j`.
pub fn k_line(d: &FatPointDivisor, i: usize, j: usize) -> i64 {
    d.mult(i) + d.mult(j) - d.d
}

/// Containment multiplicity of the rational normal quartic through the
/// points `1..=8` other than `k`.
pub fn k_quartic(d: &FatPointDivisor, k: usize) -> i64 {
    (1..=MAX_POINTS).filter(|&i| i != k).map(|i| d.mult(i)).sum::<i64>() - 4 * d.d
}

/// `k_C = -D.C` for the curve class `C = deg l - sum mu_i l_i`.
pub fn k_curve(d: &FatPointDivisor, c: &CurveRecord) -> i64 {
    let dot: i64 = (1..=c.points()).map(|i| d.mult(i) * c.mult(i)).sum();
    dot - d.d * c.d
}

/// Applies the inverse of the witness of `member` to `dr`.
fn transport<R: WeylRecord>(
    orbit: &OrbitResult<R>,
    member: &R,
    dr: &DivisorRecord,
) -> Option<DivisorRecord> {
    let w = orbit.witness(member)?;
    apply_word_unchecked(dr, &w.inverse()).ok()
}

fn plane_k(orbit: &OrbitResult<SurfaceRecord>, t: &SurfaceRecord, dr: &DivisorRecord) -> Option<i64> {
    let r = transport(orbit, t, dr)?;
    Some(r.mult(1) + r.mult(2) + r.mult(3) - 2 * r.d)
}

fn divisor_k(orbit: &OrbitResult<DivisorRecord>, w: &DivisorRecord, dr: &DivisorRecord) -> Option<i64> {
    let r = transport(orbit, w, dr)?;
    Some(r.mult(1) + r.mult(2) + r.mult(3) + r.mult(4) - 3 * r.d)
}

/// Containment multiplicity of a Weyl plane, transported to `S_1(123)`.
pub fn k_weyl_plane(d: &FatPointDivisor, t: &SurfaceRecord) -> Result<i64> {
    if !classify_surface(t).is_weyl_plane() {
        return Err(Error::NotAWeylPlane);
    }
    let orbit = plane_orbit(MAX_POINTS)?;
    plane_k(orbit, &t.embed8(), &d.record(MAX_POINTS)?).ok_or(Error::NotAWeylPlane)
}

/// Containment multiplicity of a Weyl divisor, transported to the
/// hyperplane through the points 1 to 4.
pub fn k_weyl_divisor(d: &FatPointDivisor, w: &DivisorRecord) -> Result<i64> {
    let mut m = w.m().to_vec();
    m.resize(MAX_POINTS, 0);
    let w8 = DivisorRecord::new(MAX_POINTS, w.d, &m)?;
    let orbit = divisor_orbit(MAX_POINTS)?;
    divisor_k(orbit, &w8, &d.record(MAX_POINTS)?).ok_or(Error::NotAWeylDivisor)
}

/// A Weyl line through at most 8 points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylCurve {
    /// The line through two points.
    Line(u8, u8),
    /// The rational normal quartic through every point of `1..=8` but one.
    Quartic(u8),
}

impl fmt::Display for WeylCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylCurve::Line(i, j) => write!(f, "L_{i}{j}"),
            WeylCurve::Quartic(k) => write!(f, "Q_{k}"),
        }
    }
}

fn curve_name(c: &CurveRecord) -> WeylCurve {
    let pts: Vec<u8> = (1..=c.points()).filter(|&i| c.mult(i) == 1).map(|i| i as u8).collect();
    if c.d == 1 {
        WeylCurve::Line(pts[0], pts[1])
    } else {
        let missing = (1..=MAX_POINTS as u8).find(|p| !pts.contains(p)).unwrap_or(8);
        WeylCurve::Quartic(missing)
    }
}

/// Orbits used for a divisor through `s <= 8` points: the orbits through
/// `max(s, 6)` points, keeping members whose points all lie in `1..=s`.
struct CycleSets {
    s_eff: usize,
    lines: &'static OrbitResult<CurveRecord>,
    planes: &'static OrbitResult<SurfaceRecord>,
    divisors: &'static OrbitResult<DivisorRecord>,
}

impl CycleSets {
    fn for_points(s: usize) -> Result<Self> {
        if s > MAX_POINTS {
            return Err(Error::UnsupportedPointCount(s));
        }
        let s_eff = s.max(6);
        Ok(CycleSets {
            s_eff,
            lines: line_orbit(s_eff)?,
            planes: plane_orbit(s_eff)?,
            divisors: divisor_orbit(s_eff)?,
        })
    }
}

fn supported(m: &[i64], s: usize) -> bool {
    m.iter().skip(s).all(|&x| x == 0)
}

/// Every Weyl cycle with positive containment multiplicity, by dimension.
struct PositiveCycles {
    curves: Vec<(CurveRecord, i64)>,
    planes: Vec<(SurfaceRecord, i64)>,
    divisors: Vec<(DivisorRecord, i64)>,
}

fn positive_cycles(d: &FatPointDivisor) -> Result<PositiveCycles> {
    let s = d.points();
    let sets = CycleSets::for_points(s)?;
    let dr = d.record(sets.s_eff)?;
    let curves = sets
        .lines
        .members
        .keys()
        .filter(|c| supported(c.m(), s))
        .map(|c| (*c, k_curve(d, c)))
        .filter(|&(_, k)| k > 0)
        .collect();
    let mut planes = Vec::new();
    for t in sets.planes.members.keys().filter(|t| supported(t.m(), s)) {
        let k = plane_k(sets.planes, t, &dr).expect("orbit members have witnesses");
        if k > 0 {
            planes.push((*t, k));
        }
    }
    let mut divisors = Vec::new();
    for w in sets.divisors.members.keys().filter(|w| supported(w.m(), s)) {
        let k = divisor_k(sets.divisors, w, &dr).expect("orbit members have witnesses");
        if k > 0 {
            divisors.push((*w, k));
        }
    }
    Ok(PositiveCycles { curves, planes, divisors })
}

/// The Weyl expected dimension
/// `chi(D) + sum_C C(k_C + 2, 4) - sum_T C(k_T + 1, 4) + sum_W C(k_W, 4)`
/// over Weyl lines `C`, planes `T` and divisors `W` with positive `k`.
///
/// Only defined for `s <= 8`, where these cycles are finite in number.
pub fn wdim(d: &FatPointDivisor) -> Result<i64> {
    let p = positive_cycles(d)?;
    let lines: i64 = p.curves.iter().map(|&(_, k)| binom4(k + 2)).sum();
    let planes: i64 = p.planes.iter().map(|&(_, k)| binom4(k + 1)).sum();
    let divisors: i64 = p.divisors.iter().map(|&(_, k)| binom4(k)).sum();
    Ok(chi(d) + lines - planes + divisors)
}

/// `(points, degree)` of the lines through two of the `s` points and of the
/// rational normal quartics through seven of them.
fn line_and_quartic_supports(s: usize) -> impl Iterator<Item = (Vec<usize>, i64)> {
    let lines = (1..=s).flat_map(move |i| (i + 1..=s).map(move |j| (vec![i, j], 1)));
    let quartics = seven_subsets(s).into_iter().map(|p| (p, 4));
    lines.chain(quartics)
}

fn seven_subsets(s: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == 7 {
            out.push(cur.clone());
            return;
        }
        for i in start..=s {
            cur.push(i);
            rec(i + 1, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, s, &mut Vec::new(), &mut out);
    out
}

/// `sum C(2 + k_C, 4)` over lines through two points and rational normal
/// quartics through seven points with `k_C > 0`. For `s <= 8` these are all
/// the Weyl lines; for larger `s` there are others that are not counted.
pub fn h1_correction(d: &FatPointDivisor) -> i64 {
    line_and_quartic_supports(d.points())
        .map(|(pts, deg)| pts.iter().map(|&i| d.mult(i)).sum::<i64>() - deg * d.d)
        .filter(|&k| k > 0)
        .map(|k| binom4(k + 2))
        .sum()
}

/// `chi(D) + h1_correction(D)`: the Weyl expected dimension counting only
/// lines and quartics. Defined for any number of points.
pub fn wdim_lines_only(d: &FatPointDivisor) -> i64 {
    chi(d) + h1_correction(d)
}

/// Weyl cycles in the base locus of `|D|` and the conflicts among them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaseLocusReport {
    /// `k > 0` for lines `L_ij`, keyed by 1-based `(i, j)`.
    pub lines: BTreeMap<(u8, u8), i64>,
    /// `k > 0` for quartics, keyed by the point they miss.
    pub quartics: BTreeMap<u8, i64>,
    pub planes: BTreeMap<SurfaceFamily, i64>,
    /// `k > 0` for Weyl divisors, keyed by their record.
    pub divisors: BTreeMap<DivisorRecord, i64>,
    /// Pairs of contained Weyl planes with nonzero intersection number.
    pub pairwise_conflicts: Vec<(SurfaceFamily, SurfaceFamily, i64)>,
    /// Set when some conflict exists: an effective divisor cannot contain
    /// two meeting Weyl planes, so `|D|` is then empty.
    pub empties_hint: bool,
    /// Weyl lines with `D.C <= -2`.
    pub line_violations: Vec<(WeylCurve, i64)>,
}

impl BaseLocusReport {
    pub fn has_positive_k(&self) -> bool {
        !(self.lines.is_empty()
            && self.quartics.is_empty()
            && self.planes.is_empty()
            && self.divisors.is_empty())
    }
}

/// Lists the Weyl cycles with positive `k` and checks every pair of listed
/// planes for a nonzero intersection number. Needs `s <= 8`.
pub fn base_locus_report(d: &FatPointDivisor) -> Result<BaseLocusReport> {
    let p = positive_cycles(d)?;
    let mut report = BaseLocusReport::default();
    for (c, k) in &p.curves {
        let name = curve_name(c);
        match name {
            WeylCurve::Line(i, j) => report.lines.insert((i, j), *k),
            WeylCurve::Quartic(q) => report.quartics.insert(q, *k),
        };
        if *k >= 2 {
            report.line_violations.push((name, *k));
        }
    }
    for (t, k) in &p.planes {
        report.planes.insert(classify_surface(&t.embed8()), *k);
    }
    for (w, k) in &p.divisors {
        report.divisors.insert(*w, *k);
    }
    for (a, (ta, _)) in p.planes.iter().enumerate() {
        for (tb, _) in &p.planes[a + 1..] {
            let v = weyl_plane_pairing(ta, tb)?;
            if v != 0 {
                report.pairwise_conflicts.push((
                    classify_surface(&ta.embed8()),
                    classify_surface(&tb.embed8()),
                    v,
                ));
            }
        }
    }
    report.empties_hint = !report.pairwise_conflicts.is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests;
