//! Canonical representatives under relabeling of the points.
//!
//! The canonical form of a record is its lexicographically largest
//! relabeling, comparing `d`, then the point multiplicities, then (for
//! surfaces) the quartic multiplicities and finally the line
//! multiplicities in storage order.

use super::records::SurfaceRecord;
use super::{pair_slot, WeylRecord, MAX_POINTS, PAIRS8};

pub(crate) fn sorted_points_canonical(m: &[i64; MAX_POINTS], s: usize) -> [i64; MAX_POINTS] {
    let mut out = *m;
    out[..s].sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub(crate) fn sorted_points_stabilizer(m: &[i64; MAX_POINTS], s: usize) -> usize {
    let sorted = sorted_points_canonical(m, s);
    sorted[..s]
        .chunk_by(|a, b| a == b)
        .map(|run| factorial(run.len()))
        .product()
}

struct Search<'a> {
    r: &'a SurfaceRecord,
    order: [usize; MAX_POINTS],
    groups: Vec<(usize, usize)>,
    best: Option<[i64; 28]>,
    ties: usize,
}

impl Search<'_> {
    fn evaluate(&mut self) {
        let mut cand = [0i64; 28];
        for (k, &(i, j)) in PAIRS8.iter().enumerate() {
            cand[k] = self.r.mline[pair_slot(self.order[i], self.order[j])];
        }
        match &self.best {
            Some(b) if cand < *b => {}
            Some(b) if cand == *b => self.ties += 1,
            _ => {
                self.best = Some(cand);
                self.ties = 1;
            }
        }
    }

    // Runs through every arrangement of group `g` (and, recursively, of the
    // later groups) by in-place swaps.
    fn permute_group(&mut self, g: usize, k: usize) {
        if g == self.groups.len() {
            self.evaluate();
            return;
        }
        let (start, end) = self.groups[g];
        if start + k == end {
            self.permute_group(g + 1, 0);
            return;
        }
        let pos = start + k;
        for x in pos..end {
            self.order.swap(pos, x);
            self.permute_group(g, k + 1);
            self.order.swap(pos, x);
        }
    }
}

/// Canonical form and stabilizer order of a surface record.
pub(crate) fn canonical_surface(r: &SurfaceRecord) -> (SurfaceRecord, usize) {
    let s = r.points();
    let mut slots: Vec<usize> = (0..s).collect();
    slots.sort_by(|&a, &b| (r.m[b], r.n[b]).cmp(&(r.m[a], r.n[a])).then(a.cmp(&b)));
    let mut order: [usize; MAX_POINTS] = std::array::from_fn(|i| i);
    order[..s].copy_from_slice(&slots);
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=s {
        if i == s || (r.m[order[i]], r.n[order[i]]) != (r.m[order[start]], r.n[order[start]]) {
            groups.push((start, i));
            start = i;
        }
    }
    let mut search = Search { r, order, groups, best: None, ties: 0 };
    search.permute_group(0, 0);
    let m = std::array::from_fn(|i| r.m[order[i]]);
    let n = std::array::from_fn(|i| r.n[order[i]]);
    let best = search.best.expect("at least one arrangement");
    (SurfaceRecord::from_parts(s, r.d, m, n, best), search.ties)
}
