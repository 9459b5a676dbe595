use super::canonical::{canonical_surface, sorted_points_canonical, sorted_points_stabilizer};
use super::{check_points, pair_slot, Centers, Perm, WeylRecord, MAX_POINTS, PAIRS8};
use crate::error::{Error, Result};

fn load(s: usize, m: &[i64]) -> Result<[i64; MAX_POINTS]> {
    check_points(s)?;
    if m.len() != s {
        return Err(Error::PointCountMismatch(s, m.len()));
    }
    let mut out = [0; MAX_POINTS];
    out[..s].copy_from_slice(m);
    Ok(out)
}

/// Multiplicity string such as `11110000`, comma separated when some entry
/// has more than one digit.
pub(crate) fn mult_string(m: &[i64]) -> String {
    if m.iter().all(|x| (0..10).contains(x)) {
        m.iter().map(|x| x.to_string()).collect()
    } else {
        m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A hyperplane class `dH - sum m_i E_i` through `s` points, written
/// `(d; m_1 ... m_s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorRecord {
    s: usize,
    pub d: i64,
    m: [i64; MAX_POINTS],
}

impl DivisorRecord {
    pub fn new(s: usize, d: i64, m: &[i64]) -> Result<Self> {
        Ok(DivisorRecord { s, d, m: load(s, m)? })
    }

    /// The hyperplane through the given 1-based points.
    pub fn hyperplane(s: usize, through: &[u8]) -> Result<Self> {
        let mut m = vec![0; s];
        for &p in through {
            *m.get_mut(p as usize - 1).ok_or(Error::PointCountMismatch(s, p as usize))? = 1;
        }
        Self::new(s, 1, &m)
    }

    pub fn m(&self) -> &[i64] {
        &self.m[..self.s]
    }

    /// Multiplicity at the 1-based point `i`.
    pub fn mult(&self, i: usize) -> i64 {
        self.m[i - 1]
    }
}

impl WeylRecord for DivisorRecord {
    fn points(&self) -> usize {
        self.s
    }

    fn degree(&self) -> i64 {
        self.d
    }

    fn cremona_raw(&self, c: &Centers) -> Self {
        let slots = c.slots();
        let total: i64 = slots.iter().map(|&i| self.m[i]).sum();
        let mut out = *self;
        out.d = 4 * self.d - total;
        for &i in &slots {
            out.m[i] = 3 * self.d - (total - self.m[i]);
        }
        out
    }

    fn permute(&self, p: &Perm) -> Self {
        let mut out = *self;
        out.m = std::array::from_fn(|i| self.m[p.at(i)]);
        out
    }

    fn canonical(&self) -> Self {
        let mut out = *self;
        out.m = sorted_points_canonical(&self.m, self.s);
        out
    }

    fn stabilizer_order(&self) -> usize {
        sorted_points_stabilizer(&self.m, self.s)
    }

    fn family_tag(&self) -> String {
        let c = self.canonical();
        format!("({};{})", c.d, mult_string(c.m()))
    }
}

/// A curve class `dl - sum m_i l_i` through `s` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveRecord {
    s: usize,
    pub d: i64,
    m: [i64; MAX_POINTS],
}

impl CurveRecord {
    pub fn new(s: usize, d: i64, m: &[i64]) -> Result<Self> {
        Ok(CurveRecord { s, d, m: load(s, m)? })
    }

    /// The line `L_ij` through two 1-based points.
    pub fn line(s: usize, i: u8, j: u8) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidRecord(format!("line through {i} and {j}")));
        }
        let mut m = vec![0; s];
        for p in [i, j] {
            *m.get_mut((p as usize).wrapping_sub(1))
                .ok_or(Error::PointCountMismatch(s, p as usize))? = 1;
        }
        Self::new(s, 1, &m)
    }

    /// The rational normal quartic through every point except `k` (for
    /// `s = 8`), or through all 7 points when `s = 7` and `k = 8`.
    pub fn quartic(s: usize, k: u8) -> Result<Self> {
        if s < 7 || k == 0 || k as usize > 8 || (s == 7 && k != 8) {
            return Err(Error::InvalidRecord(format!("no quartic Q_{k} through {s} points")));
        }
        let m: Vec<i64> = (1..=s).map(|i| i64::from(i != k as usize)).collect();
        Self::new(s, 4, &m)
    }

    pub fn m(&self) -> &[i64] {
        &self.m[..self.s]
    }

    pub fn mult(&self, i: usize) -> i64 {
        self.m[i - 1]
    }
}

impl WeylRecord for CurveRecord {
    fn points(&self) -> usize {
        self.s
    }

    fn degree(&self) -> i64 {
        self.d
    }

    fn cremona_raw(&self, c: &Centers) -> Self {
        let slots = c.slots();
        let total: i64 = slots.iter().map(|&i| self.m[i]).sum();
        let mut out = *self;
        out.d = 4 * self.d - 3 * total;
        for &i in &slots {
            out.m[i] = self.d - (total - self.m[i]);
        }
        out
    }

    fn permute(&self, p: &Perm) -> Self {
        let mut out = *self;
        out.m = std::array::from_fn(|i| self.m[p.at(i)]);
        out
    }

    fn canonical(&self) -> Self {
        let mut out = *self;
        out.m = sorted_points_canonical(&self.m, self.s);
        out
    }

    fn stabilizer_order(&self) -> usize {
        sorted_points_stabilizer(&self.m, self.s)
    }

    fn family_tag(&self) -> String {
        let c = self.canonical();
        let ones = c.m().iter().filter(|&&x| x == 1).count();
        let zeros = c.m().iter().filter(|&&x| x == 0).count();
        match (c.d, ones, zeros + ones == c.s) {
            (1, 2, true) => "lines".to_string(),
            (4, 7, true) => "quartics".to_string(),
            _ => format!("({};{})", c.d, mult_string(c.m())),
        }
    }
}

/// A surface through `s` points: degree `d`, multiplicity `m_i` at each
/// point, `n_k` along the quartic `Q_k` through every point but `p_k`, and
/// `m_ij` along each line `L_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceRecord {
    s: usize,
    pub d: i64,
    pub(crate) m: [i64; MAX_POINTS],
    pub(crate) n: [i64; MAX_POINTS],
    pub(crate) mline: [i64; 28],
}

impl SurfaceRecord {
    /// `m` and `n` have length `s`; `mline` has the 28 entries
    /// `m_12, m_13, ..., m_18, m_23, ..., m_78`. Entries of lines or
    /// quartics involving unused slots may be nonzero: for `s = 7` the
    /// quartic through all seven points is `Q_8`.
    pub fn new(s: usize, d: i64, m: &[i64], n: &[i64; 8], mline: &[i64; 28]) -> Result<Self> {
        let m = load(s, m)?;
        let lines_ok = PAIRS8
            .iter()
            .zip(mline)
            .all(|(&(_, j), &v)| j < s || v == 0);
        if !lines_ok {
            return Err(Error::InvalidRecord(format!(
                "line multiplicity through a point outside 1..={s}"
            )));
        }
        Ok(SurfaceRecord { s, d, m, n: *n, mline: *mline })
    }

    /// The plane `S_1(ijk)` through three 1-based points.
    pub fn plane(s: usize, ijk: [u8; 3]) -> Result<Self> {
        check_points(s)?;
        let mut r = SurfaceRecord { s, d: 1, m: [0; 8], n: [0; 8], mline: [0; 28] };
        for &p in &ijk {
            if p == 0 || p as usize > s {
                return Err(Error::InvalidRecord(format!("point {p} not in 1..={s}")));
            }
            r.m[p as usize - 1] = 1;
        }
        if ijk[0] == ijk[1] || ijk[1] == ijk[2] || ijk[0] == ijk[2] {
            return Err(Error::InvalidRecord(format!("plane through {ijk:?}")));
        }
        for a in 0..3 {
            for b in a + 1..3 {
                r.mline[pair_slot(ijk[a] as usize - 1, ijk[b] as usize - 1)] = 1;
            }
        }
        Ok(r)
    }

    pub(crate) fn from_parts(
        s: usize,
        d: i64,
        m: [i64; 8],
        n: [i64; 8],
        mline: [i64; 28],
    ) -> Self {
        SurfaceRecord { s, d, m, n, mline }
    }

    pub fn m(&self) -> &[i64] {
        &self.m[..self.s]
    }

    pub fn mult(&self, i: usize) -> i64 {
        self.m[i - 1]
    }

    /// All 8 quartic multiplicities.
    pub fn n(&self) -> &[i64; 8] {
        &self.n
    }

    /// Multiplicity along `Q_k`, 1-based.
    pub fn quartic_mult(&self, k: usize) -> i64 {
        self.n[k - 1]
    }

    /// All 28 line multiplicities in storage order.
    pub fn mline_all(&self) -> &[i64; 28] {
        &self.mline
    }

    /// Multiplicity along `L_ij`, 1-based.
    pub fn mline(&self, i: usize, j: usize) -> i64 {
        self.mline[pair_slot(i - 1, j - 1)]
    }

    /// The triangular array: `d, m_1..m_8`, then `n_1..n_8`, then the rows
    /// `m_12..m_18`, `m_23..m_28`, ..., `m_78`, indented as usually printed.
    pub fn to_triangular(&self) -> String {
        let mut rows: Vec<Vec<i64>> = vec![
            std::iter::once(self.d).chain(self.m).collect(),
            self.n.to_vec(),
        ];
        for i in 0..MAX_POINTS - 1 {
            rows.push((i + 1..MAX_POINTS).map(|j| self.mline[pair_slot(i, j)]).collect());
        }
        let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for (r, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            let indent = " ".repeat(r * (width + 1));
            out.push_str(&indent);
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads a triangular array with rows of 9, 8, 7, ..., 1 integers.
    /// Blank lines are skipped; `&` and `\\` are treated as spaces so that
    /// typeset arrays can be pasted directly.
    pub fn from_triangular(s: usize, text: &str) -> Result<Self> {
        let cleaned = text.replace("\\\\", " ").replace('&', " ");
        let rows: Vec<Vec<i64>> = cleaned
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| Error::InvalidRecord(format!("bad entry `{t}`")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let expected: Vec<usize> = std::iter::once(9).chain((1..=8).rev()).collect();
        if lengths != expected {
            return Err(Error::InvalidRecord(format!(
                "triangular array needs rows of lengths {expected:?}, got {lengths:?}"
            )));
        }
        let mut n = [0; MAX_POINTS];
        n.copy_from_slice(&rows[1]);
        let mut mline = [0; 28];
        for i in 0..MAX_POINTS - 1 {
            for (off, &v) in rows[i + 2].iter().enumerate() {
                mline[pair_slot(i, i + 1 + off)] = v;
            }
        }
        let m = &rows[0][1..];
        if m[s.min(MAX_POINTS)..].iter().any(|&x| x != 0) {
            return Err(Error::InvalidRecord(format!("multiplicity at a point outside 1..={s}")));
        }
        Self::new(s, rows[0][0], &m[..s.min(MAX_POINTS)], &n, &mline)
    }

    /// The same data viewed as a record through 8 points.
    pub fn embed8(&self) -> Self {
        SurfaceRecord { s: 8, ..*self }
    }
}

impl WeylRecord for SurfaceRecord {
    fn points(&self) -> usize {
        self.s
    }

    fn degree(&self) -> i64 {
        self.d
    }

    fn cremona_raw(&self, c: &Centers) -> Self {
        let cs = c.slots();
        let out_slots: Vec<usize> = (0..MAX_POINTS).filter(|&i| !c.contains_slot(i)).collect();
        let ml = |i: usize, j: usize| self.mline[pair_slot(i, j)];
        let pair_sum = |set: &[usize]| -> i64 {
            let mut t = 0;
            for a in 0..set.len() {
                for b in a + 1..set.len() {
                    t += ml(set[a], set[b]);
                }
            }
            t
        };
        let msum = |set: &[usize]| -> i64 { set.iter().map(|&i| self.m[i]).sum() };
        let mut out = *self;
        out.d = 6 * self.d - 3 * msum(&cs) + pair_sum(&cs);
        for &i in &cs {
            let others: Vec<usize> = cs.iter().copied().filter(|&x| x != i).collect();
            out.m[i] = 3 * self.d - 2 * msum(&others) + pair_sum(&others);
        }
        for a in 0..5 {
            for b in a + 1..5 {
                let rest: Vec<usize> =
                    cs.iter().copied().filter(|&x| x != cs[a] && x != cs[b]).collect();
                out.mline[pair_slot(cs[a], cs[b])] = self.d - msum(&rest) + pair_sum(&rest);
            }
        }
        // The line through two non-centers and the quartic missing the third
        // non-center are exchanged.
        for (idx, &k) in out_slots.iter().enumerate() {
            let pair: Vec<usize> = out_slots
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != idx)
                .map(|(_, &v)| v)
                .collect();
            out.mline[pair_slot(pair[0], pair[1])] = self.n[k];
            out.n[k] = ml(pair[0], pair[1]);
        }
        out
    }

    fn permute(&self, p: &Perm) -> Self {
        let mut out = *self;
        out.m = std::array::from_fn(|i| self.m[p.at(i)]);
        out.n = std::array::from_fn(|i| self.n[p.at(i)]);
        for (k, &(i, j)) in PAIRS8.iter().enumerate() {
            out.mline[k] = self.mline[pair_slot(p.at(i), p.at(j))];
        }
        out
    }

    fn canonical(&self) -> Self {
        canonical_surface(self).0
    }

    fn stabilizer_order(&self) -> usize {
        canonical_surface(self).1
    }

    fn family_tag(&self) -> String {
        super::classify_surface(self).tag().to_string()
    }
}
