//! Intersection numbers of Weyl planes and words normalizing a pair.

use std::collections::{HashMap, VecDeque};

use super::classify::{classify_surface, SurfaceFamily};
use super::orbit::plane_orbit8;
use super::records::SurfaceRecord;
use super::{
    apply_word, apply_word_unchecked, Centers, Generator, Perm, WeylRecord, WeylWord, MAX_POINTS,
};
use crate::error::{Error, Result};

fn seed() -> SurfaceRecord {
    SurfaceRecord::plane(8, [1, 2, 3]).expect("valid plane")
}

fn first_five() -> Centers {
    Centers::new(&[1, 2, 3, 4, 5]).expect("valid centers")
}

fn weyl_plane8(r: &SurfaceRecord) -> Result<SurfaceRecord> {
    if !classify_surface(r).is_weyl_plane() {
        return Err(Error::NotAWeylPlane);
    }
    Ok(r.embed8())
}

/// A word sending the Weyl plane `r` (through 8 points) to `S_1(123)`.
fn word_to_seed(r: &SurfaceRecord) -> Result<WeylWord> {
    plane_orbit8()
        .witness(r)
        .map(WeylWord::inverse)
        .ok_or(Error::NotAWeylPlane)
}

/// Intersection number of two Weyl planes.
///
/// A word taking `a` to `S_1(123)` is applied to `b`; the Cremona at
/// `{1,...,5}` then sends `S_1(123)` to `-P_45`, and the product with
/// `-P_45` is the multiplicity of the image of `b` along `L_45`.
pub fn weyl_plane_pairing(a: &SurfaceRecord, b: &SurfaceRecord) -> Result<i64> {
    let a8 = weyl_plane8(a)?;
    let b8 = weyl_plane8(b)?;
    let w = word_to_seed(&a8)?;
    let moved = apply_word_unchecked(&b8, &w)?;
    let image = moved.cremona_raw(&first_five());
    Ok(image.mline(4, 5))
}

/// The target of a normalizing word: `S_1(123)` paired with a plane of the
/// given shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalForm {
    /// `S_1(456)`, pairing 1.
    Disjoint,
    /// `S_1(145)`, pairing 0.
    MeetInPoint,
    /// `S_1(124)`, pairing 0.
    MeetInLine,
}

impl NormalForm {
    pub fn target(&self) -> SurfaceRecord {
        let pts = match self {
            NormalForm::Disjoint => [4, 5, 6],
            NormalForm::MeetInPoint => [1, 4, 5],
            NormalForm::MeetInLine => [1, 2, 4],
        };
        SurfaceRecord::plane(8, pts).expect("valid plane")
    }
}

// Cremonas based at exactly two of 1, 2, 3 fix S_1(123).
fn seed_stabilizing_centers() -> Vec<Centers> {
    Centers::all(8)
        .into_iter()
        .filter(|c| c.points().iter().filter(|&&p| p <= 3).count() == 2)
        .collect()
}

/// Lowers the degree of `t` with Cremonas fixing `S_1(123)` until it is a
/// plane. Each step takes the largest degree drop; ties go to the
/// lexicographically largest center set.
fn greedy_reduce(t: &SurfaceRecord) -> Option<(SurfaceRecord, WeylWord)> {
    let centers = seed_stabilizing_centers();
    let mut cur = *t;
    let mut word = WeylWord::new();
    while cur.d > 1 {
        let best = centers
            .iter()
            .map(|c| (cur.cremona_raw(c), *c))
            .filter(|(img, _)| img.d > 0 && img.d < cur.d)
            .min_by(|(x, cx), (y, cy)| x.d.cmp(&y.d).then(cy.cmp(cx)))?;
        cur = best.0;
        word.push(Generator::Cremona(best.1));
    }
    Some((cur, word))
}

/// Breadth-first search on pairs kept effective throughout, for a state
/// with the first member at `S_1(123)` and the second a plane.
fn pair_search(a: &SurfaceRecord, b: &SurfaceRecord) -> Option<(SurfaceRecord, WeylWord)> {
    let target = seed();
    let gens = Generator::standard_set(8);
    let mut seen: HashMap<(SurfaceRecord, SurfaceRecord), WeylWord> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert((*a, *b), WeylWord::new());
    queue.push_back((*a, *b));
    while let Some((x, y)) = queue.pop_front() {
        let w = seen[&(x, y)].clone();
        if x == target && y.d == 1 {
            return Some((y, w));
        }
        for g in &gens {
            let (x2, y2) = match g {
                Generator::Cremona(c) => (x.cremona_raw(c), y.cremona_raw(c)),
                Generator::Perm(p) => (x.permute(p), y.permute(p)),
            };
            if x2.d > 0 && y2.d > 0 && !seen.contains_key(&(x2, y2)) {
                seen.insert((x2, y2), w.then(*g));
                queue.push_back((x2, y2));
            }
        }
    }
    None
}

/// Permutation fixing `{1,2,3}` setwise and moving the plane `t` to one of
/// the [`NormalForm`] targets.
fn final_permutation(t: &SurfaceRecord) -> Option<(Perm, NormalForm)> {
    let SurfaceFamily::S1(pts) = classify_surface(t) else {
        return None;
    };
    let inside: Vec<usize> = pts.iter().map(|&p| p as usize - 1).filter(|&i| i < 3).collect();
    let outside: Vec<usize> = pts.iter().map(|&p| p as usize - 1).filter(|&i| i >= 3).collect();
    let rest_inside: Vec<usize> = (0..3).filter(|i| !inside.contains(i)).collect();
    let rest_outside: Vec<usize> = (3..MAX_POINTS).filter(|i| !outside.contains(i)).collect();
    let (form, low, high) = match inside.len() {
        0 => (NormalForm::Disjoint, vec![0, 1, 2], [outside, rest_outside].concat()),
        1 => (NormalForm::MeetInPoint, [inside, rest_inside].concat(), [outside, rest_outside].concat()),
        2 => (NormalForm::MeetInLine, [inside, rest_inside].concat(), [outside, rest_outside].concat()),
        _ => return None,
    };
    let slots: Vec<usize> = [low, high].concat();
    let perm = Perm::from_slots(slots.try_into().ok()?);
    Some((perm, form))
}

/// A word `w` with `w(a) = S_1(123)` and `w(b)` one of the
/// [`NormalForm`] targets, every intermediate image of both planes being
/// effective.
///
/// First `a` is moved to `S_1(123)` by its orbit witness, then `b` is
/// reduced by Cremonas based at exactly two of the points 1, 2, 3. If that
/// path contracts `b` or stalls, a breadth-first search over pairs is used
/// instead. Pairs with intersection number 3, and `a == b`, admit no such
/// word.
pub fn find_normalizing_word(
    a: &SurfaceRecord,
    b: &SurfaceRecord,
) -> Result<(WeylWord, NormalForm)> {
    let a8 = weyl_plane8(a)?;
    let b8 = weyl_plane8(b)?;
    if a8 == b8 || weyl_plane_pairing(&a8, &b8)? == 3 {
        return Err(Error::NoWord);
    }
    let to_seed = word_to_seed(&a8)?;
    let greedy = apply_word(&b8, &to_seed)
        .ok()
        .and_then(|moved| greedy_reduce(&moved))
        .map(|(plane, w)| (plane, to_seed.concat(&w)));
    let (plane, mut word) = match greedy {
        Some(found) => found,
        None => {
            let (plane, w) = pair_search(&a8, &b8).ok_or(Error::NoWord)?;
            (plane, w)
        }
    };
    let (perm, form) = final_permutation(&plane).ok_or(Error::NoWord)?;
    if !perm.is_identity() {
        word.push(Generator::Perm(perm));
    }
    Ok((word, form))
}
