//! Breadth-first orbit enumeration.
//!
//! [`orbit`] walks labeled records and records, for each member, the
//! shortest word (in generator order) reaching it from the seed.
//! [`type_orbit`] walks canonical forms only and recovers labeled counts
//! from stabilizer orders; it serves as an independent count.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use super::records::{CurveRecord, DivisorRecord, SurfaceRecord};
use super::{apply_generator, Centers, Generator, WeylRecord, WeylWord};
use crate::error::{Error, Result};

/// Default cap on the number of orbit members before giving up.
pub const DEFAULT_ORBIT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitOptions {
    pub budget: usize,
    /// Worker threads for frontier expansion; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { budget: DEFAULT_ORBIT_BUDGET, threads: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult<R: WeylRecord> {
    pub seed: R,
    /// Every labeled member with a shortest word sending the seed to it.
    pub members: BTreeMap<R, WeylWord>,
    /// Images with degree `<= 0`, which are not expanded further.
    pub contracted: BTreeSet<R>,
    /// Labeled members per family tag.
    pub type_census: BTreeMap<String, usize>,
}

impl<R: WeylRecord> OrbitResult<R> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: &R) -> bool {
        self.members.contains_key(r)
    }

    pub fn witness(&self, r: &R) -> Option<&WeylWord> {
        self.members.get(r)
    }

    /// Canonical forms of the members with their labeled counts.
    pub fn types(&self) -> BTreeMap<R, usize> {
        let mut out = BTreeMap::new();
        for r in self.members.keys() {
            *out.entry(r.canonical()).or_insert(0) += 1;
        }
        out
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

/// [`orbit_with`] using the default options.
pub fn orbit<R: WeylRecord>(seed: &R) -> Result<OrbitResult<R>> {
    orbit_with(seed, &OrbitOptions::default())
}

/// Labeled orbit of `seed` under [`Generator::standard_set`].
///
/// Each level's images are computed in parallel and merged in frontier and
/// generator order, so members, witnesses and the contracted set do not
/// depend on the thread count.
pub fn orbit_with<R: WeylRecord>(seed: &R, opts: &OrbitOptions) -> Result<OrbitResult<R>> {
    if seed.is_contracted() {
        return Err(Error::Contracted(seed.degree()));
    }
    let gens = Generator::standard_set(seed.points());
    let mut members: HashMap<R, WeylWord> = HashMap::new();
    let mut contracted: HashSet<R> = HashSet::new();
    members.insert(seed.clone(), WeylWord::new());
    let mut frontier = vec![seed.clone()];
    with_pool(opts.threads, || -> Result<()> {
        while !frontier.is_empty() {
            let images: Vec<Vec<R>> = frontier
                .par_iter()
                .map(|r| {
                    gens.iter()
                        .map(|g| apply_generator(r, g).expect("standard generators fit the record"))
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            for (r, imgs) in frontier.iter().zip(images) {
                for (g, img) in gens.iter().zip(imgs) {
                    if img.is_contracted() {
                        contracted.insert(img);
                    } else if !members.contains_key(&img) {
                        let w = members[r].then(*g);
                        members.insert(img.clone(), w);
                        next.push(img);
                        if members.len() > opts.budget {
                            return Err(Error::OrbitBudgetExceeded(opts.budget));
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(())
    })?;
    let mut type_census = BTreeMap::new();
    for r in members.keys() {
        *type_census.entry(r.family_tag()).or_insert(0) += 1;
    }
    Ok(OrbitResult {
        seed: seed.clone(),
        members: members.into_iter().collect(),
        contracted: contracted.into_iter().collect(),
        type_census,
    })
}

/// Orbit on canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeOrbit<R: WeylRecord> {
    /// Canonical form of each type and its number of labeled members,
    /// `s! / |stabilizer|`.
    pub types: BTreeMap<R, usize>,
    /// Canonical forms of contracted images.
    pub contracted: BTreeSet<R>,
}

impl<R: WeylRecord> TypeOrbit<R> {
    pub fn labeled_count(&self) -> usize {
        self.types.values().sum()
    }
}

/// Breadth-first search over canonical forms using only the Cremona
/// generators; permutations are accounted for by canonicalization.
pub fn type_orbit<R: WeylRecord>(seed: &R, budget: usize) -> Result<TypeOrbit<R>> {
    if seed.is_contracted() {
        return Err(Error::Contracted(seed.degree()));
    }
    let s = seed.points();
    let centers = Centers::all(s);
    let factorial: usize = (1..=s).product();
    let start = seed.canonical();
    let mut seen: BTreeSet<R> = BTreeSet::new();
    let mut contracted = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let images: Vec<Vec<R>> = frontier
            .par_iter()
            .map(|r| centers.iter().map(|c| r.cremona_raw(c).canonical()).collect())
            .collect();
        let mut next = Vec::new();
        for img in images.into_iter().flatten() {
            if img.is_contracted() {
                contracted.insert(img);
            } else if seen.insert(img.clone()) {
                next.push(img);
                if seen.len() > budget {
                    return Err(Error::OrbitBudgetExceeded(budget));
                }
            }
        }
        frontier = next;
    }
    let types = seen
        .into_iter()
        .map(|r| {
            let count = factorial / r.stabilizer_order();
            (r, count)
        })
        .collect();
    Ok(TypeOrbit { types, contracted })
}

// One cache slot per point count 6, 7, 8.
type Caches<R> = [OnceLock<OrbitResult<R>>; 3];

fn cached<R: WeylRecord>(
    caches: &'static Caches<R>,
    s: usize,
    seed: impl FnOnce(usize) -> Result<R>,
) -> Result<&'static OrbitResult<R>> {
    super::check_points(s)?;
    let slot = &caches[s - 6];
    if let Some(o) = slot.get() {
        return Ok(o);
    }
    let o = orbit(&seed(s)?)?;
    Ok(slot.get_or_init(|| o))
}

/// Orbit of the plane `S_1(123)` through `s` points, computed once per `s`.
pub fn plane_orbit(s: usize) -> Result<&'static OrbitResult<SurfaceRecord>> {
    static CACHE: Caches<SurfaceRecord> = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    cached(&CACHE, s, |s| SurfaceRecord::plane(s, [1, 2, 3]))
}

/// Orbit of the hyperplane through the points 1 to 4, computed once per `s`.
pub fn divisor_orbit(s: usize) -> Result<&'static OrbitResult<DivisorRecord>> {
    static CACHE: Caches<DivisorRecord> = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    cached(&CACHE, s, |s| DivisorRecord::hyperplane(s, &[1, 2, 3, 4]))
}

/// Orbit of the line `L_12`, computed once per `s`.
pub fn line_orbit(s: usize) -> Result<&'static OrbitResult<CurveRecord>> {
    static CACHE: Caches<CurveRecord> = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    cached(&CACHE, s, |s| CurveRecord::line(s, 1, 2))
}

/// [`plane_orbit`] through 8 points.
pub fn plane_orbit8() -> &'static OrbitResult<SurfaceRecord> {
    plane_orbit(8).expect("the plane orbit is finite")
}

/// [`divisor_orbit`] through 8 points.
pub fn divisor_orbit8() -> &'static OrbitResult<DivisorRecord> {
    divisor_orbit(8).expect("the hyperplane orbit is finite")
}

/// [`line_orbit`] through 8 points.
pub fn line_orbit8() -> &'static OrbitResult<CurveRecord> {
    line_orbit(8).expect("the line orbit is finite")
}
