//! Record files and the orbit cache.
//!
//! A record file is a JSON object tagged by `kind`:
//!
//! ```text
//! {"kind":"divisor","s":8,"d":1,"m":[1,1,1,1,0,0,0,0]}
//! {"kind":"curve","s":8,"d":1,"m":[1,1,0,0,0,0,0,0]}
//! {"kind":"surface","s":8,"d":1,"m":[...8],"n":[...8],"mline":[...28]}
//! {"kind":"chow","ring":"x4","expr":"2H - E_0"}
//! ```
//!
//! Surfaces may instead be given as the plain triangular array.

use std::collections::BTreeMap;

use cremona::linsys::FatPointDivisor;
use cremona::weyl::{CurveRecord, DivisorRecord, SurfaceRecord, WeylRecord};
use cremona::{ChowClass, RingId};
use serde::{Deserialize, Serialize};

/// A parsed record of any kind.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Record {
    /// Kept raw because linear-system reports accept any number of points.
    Divisor { s: usize, d: i64, m: Vec<i64> },
    Curve(CurveRecord),
    Surface(SurfaceRecord),
    Chow(ChowClass),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RecordFile {
    Divisor {
        s: usize,
        d: i64,
        m: Vec<i64>,
    },
    Curve {
        s: usize,
        d: i64,
        m: Vec<i64>,
    },
    Surface {
        s: usize,
        d: i64,
        m: Vec<i64>,
        n: Vec<i64>,
        mline: Vec<i64>,
    },
    Chow {
        ring: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grade: Option<u8>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        terms: Option<BTreeMap<String, i64>>,
        /// Written for reading convenience; `terms` wins when both appear.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expr: Option<String>,
    },
}

fn check_len(what: &str, v: &[i64], len: usize) -> Result<(), String> {
    if v.len() == len {
        Ok(())
    } else {
        Err(format!("{what} has {} entries, expected {len}", v.len()))
    }
}

pub fn parse_ring(name: &str) -> Result<RingId, String> {
    match name {
        "x3" => Ok(RingId::X3),
        "x4" => Ok(RingId::X4),
        _ => Err(format!("unknown ring `{name}` (expected x3 or x4)")),
    }
}

/// Parses a symbolic expression in the given ring, with the derived
/// symbols of that ring.
pub fn parse_expr(ring: RingId, expr: &str) -> Result<ChowClass, String> {
    let parsed = match ring {
        RingId::X3 => cremona::p3::normalize(expr),
        RingId::X4 => cremona::p4::normalize(expr),
    };
    parsed.map_err(|e| e.to_string())
}

impl RecordFile {
    fn into_record(self) -> Result<Record, String> {
        match self {
            RecordFile::Divisor { s, d, m } => {
                check_len("m", &m, s)?;
                Ok(Record::Divisor { s, d, m })
            }
            RecordFile::Curve { s, d, m } => {
                check_len("m", &m, s)?;
                CurveRecord::new(s, d, &m).map(Record::Curve).map_err(|e| e.to_string())
            }
            RecordFile::Surface { s, d, m, n, mline } => {
                check_len("m", &m, s)?;
                check_len("n", &n, 8)?;
                check_len("mline", &mline, 28)?;
                let n: [i64; 8] = n.try_into().expect("length checked");
                let mline: [i64; 28] = mline.try_into().expect("length checked");
                SurfaceRecord::new(s, d, &m, &n, &mline)
                    .map(Record::Surface)
                    .map_err(|e| e.to_string())
            }
            RecordFile::Chow { ring, grade, terms, expr } => {
                let id = parse_ring(&ring)?;
                let class = match (terms, expr) {
                    (Some(terms), _) => {
                        let grade = grade.ok_or("a chow record with terms needs a grade")?;
                        let named: Vec<(&str, i64)> =
                            terms.iter().map(|(k, &v)| (k.as_str(), v)).collect();
                        id.ring().make_class_named(grade, &named).map_err(|e| e.to_string())?
                    }
                    (None, Some(expr)) => parse_expr(id, &expr)?,
                    (None, None) => return Err("a chow record needs terms or expr".into()),
                };
                if grade.is_some_and(|g| g != class.grade()) {
                    return Err(format!("expression has grade {}, not {grade:?}", class.grade()));
                }
                Ok(Record::Chow(class))
            }
        }
    }

    fn from_record(r: &Record) -> Self {
        match r {
            Record::Divisor { s, d, m } => RecordFile::Divisor { s: *s, d: *d, m: m.clone() },
            Record::Curve(c) => RecordFile::Curve { s: c.points(), d: c.d, m: c.m().to_vec() },
            Record::Surface(t) => RecordFile::Surface {
                s: t.points(),
                d: t.d,
                m: t.m().to_vec(),
                n: t.n().to_vec(),
                mline: t.mline_all().to_vec(),
            },
            Record::Chow(c) => RecordFile::Chow {
                ring: c.ring().to_string(),
                grade: Some(c.grade()),
                terms: Some(c.terms().map(|(e, v)| (e.to_string(), v)).collect()),
                expr: Some(c.to_string()),
            },
        }
    }
}

/// Reads a JSON record, or a triangular surface array through `s` points.
pub fn parse_record(text: &str, s: usize) -> Result<Record, String> {
    if text.trim_start().starts_with('{') {
        let file: RecordFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        file.into_record()
    } else {
        SurfaceRecord::from_triangular(s, text)
            .map(Record::Surface)
            .map_err(|e| e.to_string())
    }
}

pub fn to_json(r: &Record) -> String {
    serde_json::to_string(&RecordFile::from_record(r)).expect("records serialize")
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Divisor { .. } => "divisor",
            Record::Curve(_) => "curve",
            Record::Surface(_) => "surface",
            Record::Chow(_) => "chow",
        }
    }

    pub fn divisor_record(&self) -> Result<DivisorRecord, String> {
        match self {
            Record::Divisor { s, d, m } => DivisorRecord::new(*s, *d, m).map_err(|e| e.to_string()),
            other => Err(format!("expected a divisor record, got {}", other.kind())),
        }
    }

    pub fn fat_point_divisor(&self) -> Result<FatPointDivisor, String> {
        match self {
            Record::Divisor { d, m, .. } => FatPointDivisor::new(*d, m).map_err(|e| e.to_string()),
            other => Err(format!("expected a divisor record, got {}", other.kind())),
        }
    }

    pub fn surface(&self) -> Result<SurfaceRecord, String> {
        match self {
            Record::Surface(t) => Ok(*t),
            other => Err(format!("expected a surface record, got {}", other.kind())),
        }
    }

    pub fn chow(&self) -> Result<ChowClass, String> {
        match self {
            Record::Chow(c) => Ok(c.clone()),
            other => Err(format!("expected a chow record, got {}", other.kind())),
        }
    }
}

/// First line of every orbit cache file.
pub fn cache_header(kind: &str, s: usize, members: usize) -> String {
    format!("cremona-orbit-cache v1 kind={kind} s={s} members={members}")
}

/// The cache body: one `tag<TAB>count<TAB>json` line per canonical
/// record, where `count` is the number of labeled members of that type,
/// sorted bytewise.
pub fn cache_lines<R: WeylRecord>(types: impl Iterator<Item = (R, usize)>, wrap: fn(R) -> Record) -> Vec<String> {
    let mut lines: Vec<String> = types
        .map(|(r, n)| format!("{}\t{n}\t{}", r.family_tag(), to_json(&wrap(r))))
        .collect();
    lines.sort();
    lines
}
