//! Graded free modules over the integers with table-driven products.
//!
//! Both Chow rings in this crate ([`crate::p3`] and [`crate::p4`]) are
//! instances of [`GradedRing`]: a finite basis of named cycles, one
//! multiplication table entry per unordered pair of basis elements whose
//! grades sum to at most the dimension, and exact `i64` coefficients with
//! checked arithmetic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// The two resolution spaces whose Chow rings are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingId {
    /// P^3 blown up at the 4 coordinate points and the 6 coordinate lines.
    X3,
    /// P^4 blown up at the 5 coordinate points, 10 lines and 10 planes.
    X4,
}

impl RingId {
    pub fn dim(self) -> u8 {
        match self {
            RingId::X3 => 3,
            RingId::X4 => 4,
        }
    }

    /// Number of coordinate points (indices run over `0..points`).
    pub fn points(self) -> u8 {
        self.dim() + 1
    }

    pub fn ring(self) -> &'static GradedRing {
        match self {
            RingId::X3 => crate::p3::ring(),
            RingId::X4 => crate::p4::ring(),
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingId::X3 => f.write_str("x3"),
            RingId::X4 => f.write_str("x4"),
        }
    }
}

/// A set of coordinate indices, stored as a bitmask.
///
/// Sets are ordered by size first and lexicographically within a size, so
/// `{4} < {0,1} < {0,2} < {1,2} < {0,1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u8);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u8) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Panics if an index is 8 or larger.
    pub fn of(indices: &[u8]) -> Self {
        let mut bits = 0u8;
        for &i in indices {
            assert!(i < 8, "coordinate index {i} out of range");
            bits |= 1 << i;
        }
        IndexSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        i < 8 && self.0 & (1 << i) != 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn without(self, i: u8) -> IndexSet {
        IndexSet(self.0 & !(1 << i))
    }

    /// Complement inside `0..n`.
    pub fn complement(self, n: u8) -> IndexSet {
        let full = if n >= 8 { u8::MAX } else { (1u8 << n) - 1 };
        IndexSet(full & !self.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..8u8).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().collect()
    }

    /// All `k`-subsets of `0..n` in lexicographic order.
    pub fn subsets(n: u8, k: usize) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = (0..(1u16 << n))
            .map(|b| IndexSet(b as u8))
            .filter(|s| s.len() == k)
            .collect();
        out.sort();
        out
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for i in self.iter() {
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Families of basis cycles. The index set of a [`BasisElement`] says which
/// coordinate space the cycle lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// The fundamental class `[X]`.
    Fundamental,
    /// Pullback `H` of the hyperplane class.
    Hyperplane,
    /// Exceptional divisor `E_I` over the coordinate space `L_I`.
    Exceptional,
    /// Pullback `S` of a general 2-plane (X4 only).
    Plane,
    /// General plane `S_i` inside `E_i` (X4 only).
    ExceptionalPlane,
    /// `P_ij = G_ij - F_ij` on `E_ij` (X4 only).
    Section,
    /// Fiber of the blowup of a coordinate line or plane: `f_ij` (X3),
    /// `F_ij` and `f_ijk` (X4).
    Fiber,
    /// `H_ijk`: a line of `L_ijk` times the fiber line (X4 only).
    RuledPlane,
    /// `V_ijk,t`: the exceptional curve over `p_t` in `L_ijk` times the
    /// fiber line (X4 only).
    RuledExceptional,
    /// Pullback `l` of a general line.
    Line,
    /// General line `l_I` inside `E_I`: `l_i` in both rings, `l_ij` in X4.
    ExceptionalLine,
    /// The point class `p`.
    Point,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisElement {
    ring: RingId,
    grade: u8,
    kind: Kind,
    indices: IndexSet,
    distinguished: Option<u8>,
}

impl BasisElement {
    /// Builds a basis element, validating it against the basis of `ring`.
    pub fn new(
        ring: RingId,
        kind: Kind,
        indices: IndexSet,
        distinguished: Option<u8>,
    ) -> Result<Self> {
        let grade = basis_grade(ring, kind, indices.len()).ok_or_else(|| Error::UnknownBasis {
            ring,
            symbol: format!("{kind:?}{indices:?}"),
        })?;
        let in_range = indices.is_subset(IndexSet::EMPTY.complement(ring.points()));
        let distinguished_ok = match (kind, distinguished) {
            (Kind::RuledExceptional, Some(t)) => indices.contains(t),
            (Kind::RuledExceptional, None) => false,
            (_, None) => true,
            (_, Some(_)) => false,
        };
        if !in_range || !distinguished_ok {
            return Err(Error::UnknownBasis {
                ring,
                symbol: format!("{kind:?}{indices:?}"),
            });
        }
        Ok(BasisElement {
            ring,
            grade,
            kind,
            indices,
            distinguished,
        })
    }

    pub(crate) fn make(ring: RingId, kind: Kind, indices: &[u8]) -> Self {
        Self::new(ring, kind, IndexSet::of(indices), None).expect("valid basis element")
    }

    pub(crate) fn make_v(ring: RingId, indices: &[u8], t: u8) -> Self {
        Self::new(ring, Kind::RuledExceptional, IndexSet::of(indices), Some(t))
            .expect("valid basis element")
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn grade(&self) -> u8 {
        self.grade
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn indices(&self) -> IndexSet {
        self.indices
    }

    pub fn distinguished(&self) -> Option<u8> {
        self.distinguished
    }
}

impl BasisElement {
    // Fibers of the top blowup are listed after the exceptional lines in
    // their grade (`l, l_i, f_ij` in X3 and `l, l_i, l_ij, f_ijk` in X4).
    fn kind_rank(&self) -> u8 {
        let base = self.kind as u8;
        if self.kind == Kind::Fiber && (self.ring == RingId::X3 || self.grade == 3) {
            Kind::Point as u8
        } else {
            base
        }
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ring, self.grade, self.kind_rank(), self.indices, self.distinguished).cmp(&(
            other.ring,
            other.grade,
            other.kind_rank(),
            other.indices,
            other.distinguished,
        ))
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn basis_grade(ring: RingId, kind: Kind, n: usize) -> Option<u8> {
    use Kind::*;
    let g = match (ring, kind, n) {
        (_, Fundamental, 0) => 0,
        (_, Hyperplane, 0) => 1,
        (RingId::X3, Exceptional, 1..=2) => 1,
        (RingId::X4, Exceptional, 1..=3) => 1,
        (RingId::X3, Line, 0) => 2,
        (RingId::X3, ExceptionalLine, 1) => 2,
        (RingId::X3, Fiber, 2) => 2,
        (RingId::X3, Point, 0) => 3,
        (RingId::X4, Plane, 0) => 2,
        (RingId::X4, ExceptionalPlane, 1) => 2,
        (RingId::X4, Section, 2) => 2,
        (RingId::X4, Fiber, 2) => 2,
        (RingId::X4, RuledPlane, 3) => 2,
        (RingId::X4, RuledExceptional, 3) => 2,
        (RingId::X4, Line, 0) => 3,
        (RingId::X4, ExceptionalLine, 1..=2) => 3,
        (RingId::X4, Fiber, 3) => 3,
        (RingId::X4, Point, 0) => 4,
        _ => return None,
    };
    Some(g)
}

fn write_indices(f: &mut fmt::Formatter<'_>, indices: IndexSet) -> fmt::Result {
    if !indices.is_empty() {
        f.write_str("_")?;
        for i in indices.iter() {
            write!(f, "{i}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Kind::*;
        let stem = match (self.kind, self.grade) {
            (Fundamental, _) => return f.write_str("[X]"),
            (Hyperplane, _) => "H",
            (Exceptional, _) => "E",
            (Plane, _) => "S",
            (ExceptionalPlane, _) => "S",
            (Section, _) => "P",
            (Fiber, 2) if self.ring == RingId::X4 => "F",
            (Fiber, _) => "f",
            (RuledPlane, _) => "H",
            (RuledExceptional, _) => "V",
            (Line, _) | (ExceptionalLine, _) => "l",
            (Point, _) => "p",
        };
        f.write_str(stem)?;
        write_indices(f, self.indices)?;
        if let Some(t) = self.distinguished {
            write!(f, ",{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A homogeneous class: an integer combination of basis elements of one
/// grade. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    ring: RingId,
    grade: u8,
    coeffs: BTreeMap<BasisElement, i64>,
}

impl ChowClass {
    pub fn zero(ring: RingId, grade: u8) -> Self {
        ChowClass {
            ring,
            grade,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(e: BasisElement) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(e, 1);
        ChowClass {
            ring: e.ring,
            grade: e.grade,
            coeffs,
        }
    }

    /// Collects `terms` into canonical sparse form, summing duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: RingId, grade: u8, terms: &[(BasisElement, i64)]) -> Result<Self> {
        let basis = ring.ring();
        let mut out = ChowClass::zero(ring, grade);
        for &(e, c) in terms {
            if e.ring != ring || e.grade != grade {
                return Err(Error::MixedGrade(format!(
                    "{e} has grade {} in {}, expected grade {grade} in {ring}",
                    e.grade, e.ring
                )));
            }
            if basis.position(&e).is_none() {
                return Err(Error::UnknownBasis {
                    ring,
                    symbol: e.to_string(),
                });
            }
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn grade(&self) -> u8 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: &BasisElement) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, i64)> {
        self.coeffs.iter().map(|(e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, e: BasisElement, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &ChowClass) -> Result<()> {
        if self.ring != other.ring || self.grade != other.grade {
            return Err(Error::MixedGrade(format!(
                "grade {} in {} vs grade {} in {}",
                self.grade, self.ring, other.grade, other.ring
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, c: i64) -> Result<ChowClass> {
        let mut out = ChowClass::zero(self.ring, self.grade);
        if c == 0 {
            return Ok(out);
        }
        for (&e, &v) in &self.coeffs {
            out.coeffs
                .insert(e, v.checked_mul(c).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &ChowClass, c: i64) -> Result<ChowClass> {
        self.add(&other.scale(c)?)
    }

    /// Bilinear extension of the ring's multiplication table.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.ring != other.ring {
            return Err(Error::MixedGrade(format!(
                "product of classes in {} and {}",
                self.ring, other.ring
            )));
        }
        let ring = self.ring.ring();
        let grade = self.grade + other.grade;
        if grade > ring.dim() {
            return Err(Error::GradeOverflow(self.grade, other.grade));
        }
        let mut out = ChowClass::zero(self.ring, grade);
        for (a, &u) in &self.coeffs {
            for (b, &v) in &other.coeffs {
                let product = ring.product(a, b)?;
                let uv = u.checked_mul(v).ok_or(Error::Overflow)?;
                for (&e, &w) in &product.coeffs {
                    out.add_term(e, w.checked_mul(uv).ok_or(Error::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The integer multiple of the point class, for a top-grade class.
    pub fn degree(&self) -> Result<i64> {
        let dim = self.ring.dim();
        if self.grade != dim {
            return Err(Error::WrongGrade {
                expected: dim,
                found: self.grade,
            });
        }
        Ok(self.coeffs.values().copied().sum())
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear(
        &self,
        image: impl Fn(&BasisElement) -> Result<ChowClass>,
    ) -> Result<ChowClass> {
        let mut out = ChowClass::zero(self.ring, self.grade);
        for (e, &c) in &self.coeffs {
            let img = image(e)?;
            out.check_compatible(&img)?;
            for (&f, &v) in &img.coeffs {
                out.add_term(f, v.checked_mul(c).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if n == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass({}, grade {}: {self})", self.ring, self.grade)
    }
}

/// Products of basis elements, keyed by unordered pairs of basis positions.
#[derive(Debug, Clone)]
pub struct MultTable {
    entries: HashMap<(u16, u16), ChowClass>,
}

impl MultTable {
    fn key(i: usize, j: usize) -> (u16, u16) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        (a as u16, b as u16)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&ChowClass> {
        self.entries.get(&Self::key(i, j))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A graded ring with a finite named basis and a complete product table.
#[derive(Debug)]
pub struct GradedRing {
    id: RingId,
    basis: Vec<BasisElement>,
    position: HashMap<BasisElement, usize>,
    table: MultTable,
}

impl GradedRing {
    /// Tabulates `rule` on every unordered basis pair with grade sum at most
    /// the dimension. The rule is evaluated with the lower basis position
    /// first.
    pub fn build(
        id: RingId,
        basis: Vec<BasisElement>,
        rule: impl Fn(&BasisElement, &BasisElement) -> ChowClass,
    ) -> Self {
        let position: HashMap<BasisElement, usize> =
            basis.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut entries = HashMap::new();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate().skip(i) {
                if a.grade + b.grade <= id.dim() {
                    entries.insert(MultTable::key(i, j), rule(a, b));
                }
            }
        }
        GradedRing {
            id,
            basis,
            position,
            table: MultTable { entries },
        }
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn dim(&self) -> u8 {
        self.id.dim()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_of_grade(&self, grade: u8) -> impl Iterator<Item = &BasisElement> {
        self.basis.iter().filter(move |e| e.grade == grade)
    }

    pub fn rank(&self, grade: u8) -> usize {
        self.basis_of_grade(grade).count()
    }

    pub fn position(&self, e: &BasisElement) -> Option<usize> {
        self.position.get(e).copied()
    }

    pub fn table(&self) -> &MultTable {
        &self.table
    }

    /// Looks up the product of two basis elements.
    pub fn product(&self, a: &BasisElement, b: &BasisElement) -> Result<ChowClass> {
        if a.grade + b.grade > self.dim() {
            return Err(Error::GradeOverflow(a.grade, b.grade));
        }
        let unknown = |e: &BasisElement| Error::UnknownBasis {
            ring: self.id,
            symbol: e.to_string(),
        };
        let i = self.position(a).ok_or_else(|| unknown(a))?;
        let j = self.position(b).ok_or_else(|| unknown(b))?;
        self.table
            .get(i, j)
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(a.to_string(), b.to_string()))
    }

    /// Finds a basis element by its printed name, e.g. `"V_012,0"`.
    pub fn lookup(&self, symbol: &str) -> Option<BasisElement> {
        self.basis.iter().copied().find(|e| e.to_string() == symbol)
    }

    /// Convenience wrapper around [`ChowClass::from_terms`].
    pub fn make_class(&self, grade: u8, terms: &[(BasisElement, i64)]) -> Result<ChowClass> {
        ChowClass::from_terms(self.id, grade, terms)
    }

    /// Like [`GradedRing::make_class`], with basis elements given by name.
    /// Derived symbols such as `G_01` are not basis elements and are rejected.
    pub fn make_class_named(&self, grade: u8, terms: &[(&str, i64)]) -> Result<ChowClass> {
        let resolved = terms
            .iter()
            .map(|&(name, c)| {
                self.lookup(name)
                    .map(|e| (e, c))
                    .ok_or_else(|| Error::UnknownBasis {
                        ring: self.id,
                        symbol: name.to_string(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        self.make_class(grade, &resolved)
    }
}

/// Shorthand for building classes inside the table rules.
pub(crate) fn combo(ring: RingId, terms: &[(BasisElement, i64)]) -> ChowClass {
    let grade = terms.first().map(|(e, _)| e.grade).unwrap_or(0);
    let mut out = ChowClass::zero(ring, grade);
    for &(e, c) in terms {
        debug_assert_eq!(e.grade, grade);
        out.add_term(e, c).expect("table coefficients are small");
    }
    out
}

/// Expands a derived symbol (one that is not a basis element) into a class.
pub type DerivedSymbols = dyn Fn(&str) -> Option<Result<ChowClass>>;

/// Parses a signed sum such as `"2H_012 - V_012,0 + l"` into a class.
///
/// Coefficients may be written as `3H`, `3 H` or `3*H`. `ℓ` and `Λ` are
/// accepted as spellings of `l` and `Lambda`. Symbols that are not basis
/// elements are passed to `derived`; anything it does not know is an
/// [`Error::UnknownSymbol`]. The literal `0` parses as the zero class of
/// grade 0.
pub fn parse_class(ring: RingId, expr: &str, derived: &DerivedSymbols) -> Result<ChowClass> {
    let text = expr.replace('ℓ', "l").replace('Λ', "Lambda").replace('−', "-");
    let basis = ring.ring();
    let mut acc: Option<ChowClass> = None;
    for (sign, body) in split_terms(&text)? {
        let body = body.trim();
        let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = body[digits.len()..].trim_start();
        let rest = rest.strip_prefix('*').unwrap_or(rest).trim();
        let coeff: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| Error::Overflow)?
        };
        let coeff = coeff.checked_mul(sign).ok_or(Error::Overflow)?;
        if rest.is_empty() {
            if coeff == 0 && acc.is_none() {
                continue;
            }
            return Err(Error::UnknownSymbol(body.to_string()));
        }
        let class = match basis.lookup(rest) {
            Some(e) => ChowClass::basis(e),
            None => match derived(rest) {
                Some(c) => c?,
                None => return Err(Error::UnknownSymbol(rest.to_string())),
            },
        };
        let term = class.scale(coeff)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| ChowClass::zero(ring, 0)))
}

fn split_terms(text: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut pending_operator = false;
    let mut current = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            if !current.trim().is_empty() {
                out.push((sign, std::mem::take(&mut current)));
                sign = 1;
            }
            if ch == '-' {
                sign = -sign;
            }
            pending_operator = true;
        } else {
            current.push(ch);
            if !ch.is_whitespace() {
                pending_operator = false;
            }
        }
    }
    if !current.trim().is_empty() {
        out.push((sign, current));
    } else if pending_operator || out.is_empty() {
        return Err(Error::UnknownSymbol(text.trim().to_string()));
    }
    Ok(out)
}
