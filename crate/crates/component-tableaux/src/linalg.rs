//! Exact integer linear algebra: ranks, determinants, interpolation, Jordan types.
//!
//! Nothing here uses floating point. Ranks run a fraction-free row reduction
//! in `i128` with per-row gcd normalisation and restart in `BigInt` on
//! overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Rank over the rationals of the given integer rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match rank_i128(small) {
        Some(r) => r,
        None => rank_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn normalize_i128(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

fn rank_i128(mut rows: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let g = pivot[col].gcd(&f);
            let (mp, mf) = (pivot[col] / g, f / g);
            for c in col..ncols {
                let v = rows[r][c].checked_mul(mp)?.checked_sub(pivot[c].checked_mul(mf)?)?;
                rows[r][c] = v;
            }
            normalize_i128(&mut rows[r]);
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of big-integer rows.
pub fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let g = pivot[col].gcd(&rows[r][col]);
            let mp = &pivot[col] / &g;
            let mf = &rows[r][col] / &g;
            for c in col..ncols {
                rows[r][c] = &rows[r][c] * &mp - &pivot[c] * &mf;
            }
            let g = rows[r].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g > BigInt::one() {
                rows[r].iter_mut().for_each(|x| *x /= &g);
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients (constant term first) of the polynomial through `(xs, ys)`.
pub fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    // Newton divided differences.
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Jordan type of a nilpotent matrix, as a partition in decreasing order.
pub fn jordan_type(a: &[Vec<BigInt>]) -> Result<Vec<usize>, Error> {
    let n = a.len();
    let mut ranks = vec![n];
    let mut power = a.to_vec();
    loop {
        let r = rank_big(power.clone());
        ranks.push(r);
        if r == 0 {
            break;
        }
        if ranks.len() > n + 1 {
            return Err(Error::InvalidInput("matrix is not nilpotent".into()));
        }
        power = mat_mul(&power, a);
    }
    // Conjugate parts: number of blocks of size ≥ k.
    let conj: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(conjugate(&conj))
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let max = p.iter().copied().max().unwrap_or(0);
    (1..=max).map(|k| p.iter().filter(|&&x| x >= k).count()).collect()
}

/// Dimension of the nilpotent orbit in `gl(n)` with the given Jordan type.
pub fn orbit_dimension(jordan: &[usize]) -> usize {
    let n: usize = jordan.iter().sum();
    n * n - conjugate(jordan).iter().map(|c| c * c).sum::<usize>()
}

/// Whether the bipartite graph (rows → allowed columns) has a perfect matching.
pub fn has_perfect_matching(adj: &[Vec<usize>], ncols: usize) -> bool {
    fn augment(r: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &c in &adj[r] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c].map_or(true, |o| augment(o, adj, seen, owner)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
    if adj.len() != ncols {
        return false;
    }
    let mut owner = vec![None; ncols];
    (0..adj.len()).all(|r| augment(r, adj, &mut vec![false; ncols], &mut owner))
}

/// Exact rational value as an integer, if it is one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// `|x|` as a convenience for report code.
pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}
