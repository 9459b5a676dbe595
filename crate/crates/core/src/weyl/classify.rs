use std::fmt;

use super::records::SurfaceRecord;
use super::{pair_slot, WeylRecord, MAX_POINTS, PAIRS8};

/// The five kinds of Weyl planes through 8 points, with 1-based index data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceFamily {
    /// The plane through three points.
    S1([u8; 3]),
    /// Cubic, triple at the first point and missing the second.
    S3(u8, u8),
    /// Sextic, simple at three points and triple at the other five.
    S6([u8; 3]),
    /// Degree 10, multiplicity 6 at two points and 3 at the others.
    S10(u8, u8),
    /// Degree 15, triple at one point and multiplicity 6 at the others.
    S15(u8),
    Other,
}

impl SurfaceFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            SurfaceFamily::S1(_) => "S1",
            SurfaceFamily::S3(..) => "S3",
            SurfaceFamily::S6(_) => "S6",
            SurfaceFamily::S10(..) => "S10",
            SurfaceFamily::S15(_) => "S15",
            SurfaceFamily::Other => "Other",
        }
    }

    pub fn is_weyl_plane(&self) -> bool {
        *self != SurfaceFamily::Other
    }

    /// The record of this surface through `s` points, built from its
    /// description: multiplicities at the points, along the quartics and
    /// along the lines.
    pub fn template(&self, s: usize) -> Option<SurfaceRecord> {
        let mut m = [0i64; MAX_POINTS];
        let mut n = [0i64; MAX_POINTS];
        let mut ml = [0i64; 28];
        let idx = |p: u8| p as usize - 1;
        let d = match *self {
            SurfaceFamily::S1(t) => {
                for &p in &t {
                    m[idx(p)] = 1;
                }
                for (k, &(i, j)) in PAIRS8.iter().enumerate() {
                    ml[k] = i64::from(t.contains(&(i as u8 + 1)) && t.contains(&(j as u8 + 1)));
                }
                1
            }
            SurfaceFamily::S3(i, j) => {
                m = [1; MAX_POINTS];
                m[idx(i)] = 3;
                m[idx(j)] = 0;
                n[idx(j)] = 1;
                for k in 0..MAX_POINTS {
                    if k != idx(i) && k != idx(j) {
                        ml[pair_slot(idx(i), k)] = 1;
                    }
                }
                3
            }
            SurfaceFamily::S6(t) => {
                m = [3; MAX_POINTS];
                for &p in &t {
                    m[idx(p)] = 1;
                    n[idx(p)] = 1;
                }
                for (k, &(i, j)) in PAIRS8.iter().enumerate() {
                    ml[k] = i64::from(m[i] == 3 && m[j] == 3);
                }
                6
            }
            SurfaceFamily::S10(i, j) => {
                m = [3; MAX_POINTS];
                n = [1; MAX_POINTS];
                for p in [i, j] {
                    m[idx(p)] = 6;
                    n[idx(p)] = 0;
                }
                for k in 0..MAX_POINTS {
                    if k != idx(i) && k != idx(j) {
                        ml[pair_slot(idx(i), k)] = 1;
                        ml[pair_slot(idx(j), k)] = 1;
                    }
                }
                ml[pair_slot(idx(i), idx(j))] = 3;
                10
            }
            SurfaceFamily::S15(i) => {
                m = [6; MAX_POINTS];
                n = [1; MAX_POINTS];
                m[idx(i)] = 3;
                n[idx(i)] = 3;
                for (k, &(a, b)) in PAIRS8.iter().enumerate() {
                    ml[k] = i64::from(a != idx(i) && b != idx(i));
                }
                15
            }
            SurfaceFamily::Other => return None,
        };
        // Through fewer than 8 points the unused slots carry no multiplicity.
        if m[s..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(SurfaceRecord::from_parts(s, d, m, n, ml))
    }
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceFamily::S1([a, b, c]) => write!(f, "S1({a}{b}{c})"),
            SurfaceFamily::S3(i, j) => write!(f, "S3({i},{j})"),
            SurfaceFamily::S6([a, b, c]) => write!(f, "S6({a}{b}{c})"),
            SurfaceFamily::S10(i, j) => write!(f, "S10({i}{j})"),
            SurfaceFamily::S15(i) => write!(f, "S15({i})"),
            SurfaceFamily::Other => f.write_str("Other"),
        }
    }
}

fn points_with(r: &SurfaceRecord, value: i64) -> Vec<u8> {
    (0..MAX_POINTS).filter(|&i| r.m[i] == value).map(|i| i as u8 + 1).collect()
}

/// Identifies a record with one of the five Weyl-plane families, or
/// [`SurfaceFamily::Other`].
pub fn classify_surface(r: &SurfaceRecord) -> SurfaceFamily {
    let one = |v: Vec<u8>| (v.len() == 1).then(|| v[0]);
    let candidate = match r.d {
        1 => <[u8; 3]>::try_from(points_with(r, 1)).ok().map(SurfaceFamily::S1),
        3 => one(points_with(r, 3)).zip(one(points_with(r, 0))).map(|(i, j)| SurfaceFamily::S3(i, j)),
        6 => <[u8; 3]>::try_from(points_with(r, 1)).ok().map(SurfaceFamily::S6),
        10 => {
            let six = points_with(r, 6);
            (six.len() == 2).then(|| SurfaceFamily::S10(six[0], six[1]))
        }
        15 => one(points_with(r, 3)).map(SurfaceFamily::S15),
        _ => None,
    };
    match candidate {
        Some(f) if f.template(r.points()).as_ref() == Some(r) => f,
        _ => SurfaceFamily::Other,
    }
}
