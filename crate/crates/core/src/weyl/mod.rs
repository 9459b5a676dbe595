//! The Weyl group of P^4 blown up at `s <= 8` general points, acting on
//! multiplicity records.
//!
//! The group is generated by permutations of the points and by the standard
//! Cremona transformation based at any five of them. Point indices in this
//! module are 1-based (`1..=s`), matching the usual way the points are
//! named; array storage inside the records is 0-based.
//!
//! Records through 6 or 7 points are stored exactly like 8-point records,
//! with zero multiplicities in the unused slots, and only generators inside
//! `1..=s` act on them.

mod canonical;
mod classify;
mod orbit;
mod pairing;
mod records;

use std::fmt;

use crate::error::{Error, Result};

pub use classify::{classify_surface, SurfaceFamily};
pub use orbit::{
    divisor_orbit, divisor_orbit8, line_orbit, line_orbit8, orbit, orbit_with, plane_orbit,
    plane_orbit8, type_orbit, OrbitOptions, OrbitResult, TypeOrbit, DEFAULT_ORBIT_BUDGET,
};
pub use pairing::{find_normalizing_word, weyl_plane_pairing, NormalForm};
pub use records::{CurveRecord, DivisorRecord, SurfaceRecord};

/// Number of slots in every record.
pub const MAX_POINTS: usize = 8;

/// All 28 pairs `(i, j)`, `0 <= i < j < 8`, in the storage order of
/// [`SurfaceRecord::mline`].
pub const PAIRS8: [(usize, usize); 28] = {
    let mut out = [(0, 0); 28];
    let mut k = 0;
    let mut i = 0;
    while i < 8 {
        let mut j = i + 1;
        while j < 8 {
            out[k] = (i, j);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    out
};

/// Storage slot of the 0-based pair `{i, j}`.
pub fn pair_slot(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i != j && j < 8);
    // Rows of the upper triangle have lengths 7, 6, ..., 1.
    i * (15 - i) / 2 + (j - i - 1)
}

pub(crate) fn check_points(s: usize) -> Result<()> {
    if (6..=MAX_POINTS).contains(&s) {
        Ok(())
    } else {
        Err(Error::UnsupportedPointCount(s))
    }
}

/// Five distinct base points of a Cremona transformation, stored 1-based
/// and sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Centers([u8; 5]);

impl Centers {
    pub fn new(points: &[u8]) -> Result<Self> {
        if points.len() != 5 {
            return Err(Error::BadCenters(format!("need 5 points, got {}", points.len())));
        }
        let mut a = [0u8; 5];
        a.copy_from_slice(points);
        a.sort_unstable();
        if a[0] == 0 || a[4] as usize > MAX_POINTS {
            return Err(Error::BadCenters(format!("{points:?} not in 1..=8")));
        }
        if a.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadCenters(format!("{points:?} has repeated points")));
        }
        Ok(Centers(a))
    }

    pub fn points(&self) -> [u8; 5] {
        self.0
    }

    pub(crate) fn slots(&self) -> [usize; 5] {
        self.0.map(|p| p as usize - 1)
    }

    pub(crate) fn contains_slot(&self, slot: usize) -> bool {
        self.0.iter().any(|&p| p as usize == slot + 1)
    }

    pub fn check_within(&self, s: usize) -> Result<()> {
        if self.0[4] as usize > s {
            return Err(Error::BadCenters(format!("{self} not within 1..={s}")));
        }
        Ok(())
    }

    /// All 5-subsets of `1..=s` in lexicographic order.
    pub fn all(s: usize) -> Vec<Centers> {
        let mut out = Vec::new();
        let n = s as u8;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        for e in d + 1..=n {
                            out.push(Centers([a, b, c, d, e]));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Centers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "{a},{b},{c},{d},{e}")
    }
}

/// A permutation of the points `1..=8`.
///
/// Acting on a record, `Perm` moves the data found at point `σ(i)` to point
/// `i`. With this convention `[Perm(σ), Cremona(I)]` and
/// `[Cremona(σ(I)), Perm(σ)]` act identically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; MAX_POINTS]);

impl Perm {
    pub fn identity() -> Self {
        Perm(std::array::from_fn(|i| i as u8))
    }

    /// `images[i - 1] = σ(i)`, 1-based. Shorter inputs fix the remaining
    /// points.
    pub fn new(images: &[u8]) -> Result<Self> {
        if images.len() > MAX_POINTS {
            return Err(Error::InvalidRecord(format!("permutation of {} points", images.len())));
        }
        let mut map = Self::identity().0;
        let mut seen = [false; MAX_POINTS];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img as usize > images.len() || seen[img as usize - 1] {
                return Err(Error::InvalidRecord(format!("{images:?} is not a permutation")));
            }
            seen[img as usize - 1] = true;
            map[i] = img - 1;
        }
        Ok(Perm(map))
    }

    /// Swaps the 1-based points `i` and `j`.
    pub fn transposition(i: u8, j: u8) -> Self {
        let mut map = Self::identity().0;
        map.swap(i as usize - 1, j as usize - 1);
        Perm(map)
    }

    /// From a 0-based slot map, `slots[i] = σ(i)`.
    pub(crate) fn from_slots(slots: [usize; MAX_POINTS]) -> Self {
        Perm(slots.map(|x| x as u8))
    }

    /// `σ(slot)`, 0-based.
    pub(crate) fn at(&self, slot: usize) -> usize {
        self.0[slot] as usize
    }

    /// 1-based images of `1..=8`.
    pub fn images(&self) -> [u8; MAX_POINTS] {
        self.0.map(|x| x + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0u8; MAX_POINTS];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// The largest point moved, or 0 for the identity.
    pub fn support_max(&self) -> usize {
        (0..MAX_POINTS).rev().find(|&i| self.0[i] as usize != i).map_or(0, |i| i + 1)
    }

    /// Image of a 1-based center set.
    pub fn apply_to_centers(&self, c: &Centers) -> Centers {
        let pts: Vec<u8> = c.0.iter().map(|&p| self.0[p as usize - 1] + 1).collect();
        Centers::new(&pts).expect("a permutation maps 5 distinct points to 5 distinct points")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_max().max(2);
        let imgs: Vec<String> = self.images()[..n].iter().map(|x| x.to_string()).collect();
        write!(f, "P[{}]", imgs.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Perm(Perm),
    Cremona(Centers),
}

impl Generator {
    pub fn inverse(&self) -> Self {
        match self {
            Generator::Perm(p) => Generator::Perm(p.inverse()),
            Generator::Cremona(c) => Generator::Cremona(*c),
        }
    }

    fn check_within(&self, s: usize) -> Result<()> {
        match self {
            Generator::Cremona(c) => c.check_within(s),
            Generator::Perm(p) if p.support_max() > s => Err(Error::InvalidRecord(format!(
                "{p} moves points outside 1..={s}"
            ))),
            Generator::Perm(_) => Ok(()),
        }
    }

    /// The generators used for orbit search on `s` points: every Cremona
    /// in lexicographic order of its centers, then the adjacent
    /// transpositions `(1 2), (2 3), ...`.
    pub fn standard_set(s: usize) -> Vec<Generator> {
        let mut g: Vec<Generator> = Centers::all(s).into_iter().map(Generator::Cremona).collect();
        g.extend((1..s as u8).map(|i| Generator::Perm(Perm::transposition(i, i + 1))));
        g
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Perm(p) => write!(f, "{p}"),
            Generator::Cremona(c) => write!(f, "C({c})"),
        }
    }
}

/// Generators applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<Generator>);

impl WeylWord {
    pub fn new() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn then(&self, g: Generator) -> Self {
        let mut w = self.clone();
        w.push(g);
        w
    }

    pub fn concat(&self, other: &WeylWord) -> Self {
        let mut w = self.clone();
        w.0.extend(other.0.iter().copied());
        w
    }

    pub fn inverse(&self) -> Self {
        WeylWord(self.0.iter().rev().map(Generator::inverse).collect())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Common interface of the three record kinds.
pub trait WeylRecord:
    Clone + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static
{
    /// Number of points `s`.
    fn points(&self) -> usize;

    fn degree(&self) -> i64;

    /// Image under the Cremona at `c`; `c` must lie within `1..=s`.
    fn cremona_raw(&self, c: &Centers) -> Self;

    fn permute(&self, p: &Perm) -> Self;

    /// The lexicographically largest relabeling.
    fn canonical(&self) -> Self;

    /// Number of point permutations of `1..=s` fixing the record.
    fn stabilizer_order(&self) -> usize;

    /// Name of the type (permutation class) of the record.
    fn family_tag(&self) -> String;

    fn is_contracted(&self) -> bool {
        self.degree() <= 0
    }
}

/// Image under a Cremona transformation. Contraction is not an error here;
/// check [`WeylRecord::is_contracted`] on the result.
pub fn cremona5<R: WeylRecord>(r: &R, c: &Centers) -> Result<R> {
    c.check_within(r.points())?;
    Ok(r.cremona_raw(c))
}

pub fn apply_generator<R: WeylRecord>(r: &R, g: &Generator) -> Result<R> {
    g.check_within(r.points())?;
    Ok(match g {
        Generator::Perm(p) => r.permute(p),
        Generator::Cremona(c) => r.cremona_raw(c),
    })
}

/// Applies `w` left to right, failing as soon as an image has degree `<= 0`.
pub fn apply_word<R: WeylRecord>(r: &R, w: &WeylWord) -> Result<R> {
    let mut x = r.clone();
    for g in &w.0 {
        x = apply_generator(&x, g)?;
        if x.is_contracted() {
            return Err(Error::Contracted(x.degree()));
        }
    }
    Ok(x)
}

/// Applies `w` without the contraction check.
pub fn apply_word_unchecked<R: WeylRecord>(r: &R, w: &WeylWord) -> Result<R> {
    let mut x = r.clone();
    for g in &w.0 {
        x = apply_generator(&x, g)?;
    }
    Ok(x)
}
