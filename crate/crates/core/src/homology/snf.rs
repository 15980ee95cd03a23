use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::eliminate::{eliminate, Eliminated, Mode, Row};
use super::matrix::SparseIntMatrix;

/// Invariant factors `d1 | d2 | ... | dr` of `m`, where `r` is its rank.
pub fn smith_normal_form(m: &SparseIntMatrix) -> Vec<BigInt> {
    let reduced = match m.columns_as_small_rows() {
        Some(rows) => eliminate(rows, m.rows(), Mode::UnitPivots).map(widen).ok(),
        None => None,
    };
    let Eliminated { rank, residue } = reduced.unwrap_or_else(|| {
        eliminate(m.columns_as_big_rows(), m.rows(), Mode::UnitPivots).expect("big integers never overflow")
    });
    let mut factors = vec![BigInt::one(); rank];
    factors.extend(dense_snf(densify(&residue)));
    factors
}

/// Rank over the rationals.
pub fn rational_rank(m: &SparseIntMatrix) -> usize {
    if let Some(rows) = m.columns_as_small_rows() {
        if let Ok(e) = eliminate(rows, m.rows(), Mode::Rank) {
            return e.rank;
        }
    }
    eliminate(m.columns_as_big_rows(), m.rows(), Mode::Rank).expect("big integers never overflow").rank
}

/// Rank over `Z/p` for a prime `p < 2^32`.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    assert!((2..1 << 32).contains(&p), "modulus must be a prime below 2^32");
    let pb = BigInt::from(p);
    let reduce = |v: &BigInt| -> u64 {
        let r = v.mod_floor(&pb);
        r.try_into().expect("residue fits")
    };
    // columns as rows, echelon insertion keyed by leading column
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, u64)>> = Default::default();
    let mut cols: Vec<Vec<(usize, u64)>> = vec![Vec::new(); m.cols()];
    for (r, c, v) in m.triplets() {
        let x = reduce(v);
        if x != 0 {
            cols[c].push((r, x));
        }
    }
    for mut row in cols {
        row.sort_unstable();
        while let Some(&(lead, a)) = row.first() {
            match pivots.get(&lead) {
                Some(prow) => {
                    // row -= a * prow  (prow has leading coefficient 1)
                    let mut out = Vec::with_capacity(row.len() + prow.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < prow.len() {
                        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                        let cj = prow.get(j).map_or(usize::MAX, |e| e.0);
                        let (c, v) = if ci < cj {
                            i += 1;
                            (ci, row[i - 1].1)
                        } else if cj < ci {
                            j += 1;
                            (cj, (p - a * prow[j - 1].1 % p) % p)
                        } else {
                            i += 1;
                            j += 1;
                            (ci, (row[i - 1].1 + p - a * prow[j - 1].1 % p) % p)
                        };
                        if v != 0 {
                            out.push((c, v));
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = mod_inverse(a, p);
                    for e in row.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn widen(e: Eliminated<i64>) -> Eliminated<BigInt> {
    Eliminated {
        rank: e.rank,
        residue: e.residue.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect(),
    }
}

fn densify(residue: &[Row<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut cols: Vec<u32> = residue.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    residue
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); cols.len()];
            for (c, v) in r {
                dense[cols.binary_search(c).expect("column listed")] = v.clone();
            }
            dense
        })
        .collect()
}

/// Dense Smith reduction; returns the nonzero invariant factors in
/// divisibility order.
// Row and column updates index two rows at once, so plain index loops read best.
#[allow(clippy::needless_range_loop)]
pub(crate) fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = smallest_entry(&a, t..m, t..n) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..n {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..m {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot appeared in row or column t
                let (bi, bj) = smallest_in_cross(&a, t);
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if a[i][j].abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let m = a.len();
    let n = a[0].len();
    let mut best = (t, t);
    let key = |i: usize, j: usize| if a[i][j].is_zero() { None } else { Some(a[i][j].abs()) };
    let mut best_key = key(t, t);
    for (i, j) in (t..m).map(|i| (i, t)).chain((t..n).map(|j| (t, j))) {
        if let Some(k) = key(i, j) {
            if best_key.as_ref().is_none_or(|b| k < *b) {
                best_key = Some(k);
                best = (i, j);
            }
        }
    }
    best
}
