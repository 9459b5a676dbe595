//! An independent count of hypersurfaces through fat points: the rank of
//! the interpolation matrix at explicit random points, computed exactly.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const VARS: usize = 5;

/// Exponent vectors of the degree-`d` monomials in five variables.
pub fn monomials(d: u32) -> Vec<[u32; VARS]> {
    fn rec(left: u32, pos: usize, cur: &mut [u32; VARS], out: &mut Vec<[u32; VARS]>) {
        if pos == VARS - 1 {
            cur[pos] = left;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(left - e, pos + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(d, 0, &mut [0; VARS], &mut out);
    out
}

fn falling(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Rows saying that every partial derivative of order `m - 1` of a form
/// of degree `d` vanishes at `p`; for forms this is vanishing to order `m`.
fn conditions(d: u32, m: u32, p: &[BigInt; VARS]) -> Vec<Vec<BigInt>> {
    if m == 0 {
        return Vec::new();
    }
    let cols = monomials(d);
    let mut rows = Vec::new();
    if m - 1 > d {
        // Every derivative of order m - 1 vanishes identically, but the
        // form must still vanish to order m: all coefficients are zero.
        for (c, _) in cols.iter().enumerate() {
            let mut row = vec![BigInt::zero(); cols.len()];
            row[c] = BigInt::one();
            rows.push(row);
        }
        return rows;
    }
    for alpha in monomials(m - 1) {
        let row = cols
            .iter()
            .map(|beta| {
                if (0..VARS).any(|i| beta[i] < alpha[i]) {
                    return BigInt::zero();
                }
                (0..VARS).fold(BigInt::one(), |acc, i| {
                    acc * falling(beta[i], alpha[i]) * p[i].pow(beta[i] - alpha[i])
                })
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Rank by fraction-free Gaussian elimination.
pub fn rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn random_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<[BigInt; VARS]> {
    (0..count)
        .map(|_| std::array::from_fn(|_| BigInt::from(rng.gen_range(-97i64..=97))))
        .collect()
}

/// Dimension of the space of degree-`d` forms with multiplicity `m[i]` at
/// `points[i]`.
pub fn h0(d: u32, m: &[u32], points: &[[BigInt; VARS]]) -> usize {
    let cols = monomials(d).len();
    let mut matrix = Vec::new();
    for (&mi, p) in m.iter().zip(points) {
        matrix.extend(conditions(d, mi, p));
    }
    if matrix.is_empty() {
        return cols;
    }
    cols - rank(matrix)
}
