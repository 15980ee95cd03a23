//! Sparse row elimination over the integers.
//!
//! Rows are sorted `(column, value)` lists. Two modes share the machinery:
//!
//! * [`Mode::UnitPivots`] only pivots on `±1`. Each such step is a unimodular
//!   row operation followed by clearing the pivot row with column operations,
//!   so it contributes an invariant factor `1` and leaves the Smith form of
//!   the remaining submatrix unchanged. What cannot be reduced this way is
//!   returned as a residue for a dense Smith reduction.
//! * [`Mode::Rank`] pivots on anything (units first, then smallest absolute
//!   value) with fraction-free updates `p·r_k - a·r_p` followed by dividing
//!   out the row content. Row operations of that kind preserve the rational
//!   rank, which is all this mode reports.
//!
//! Columns are visited in order of fewest live entries, and within a column
//! the shortest eligible row is chosen, which keeps fill-in low on boundary
//! matrices.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arithmetic needed by the elimination; `None` signals overflow.
pub(crate) trait Coeff: Clone + Debug + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_key(&self) -> BigInt;
    /// `self * a - b * c`.
    fn combine(&self, a: &Self, b: &Self, c: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn one() -> Self;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_key(&self) -> BigInt {
        BigInt::from(*self).abs()
    }
    fn combine(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        self.checked_mul(*a)?.checked_sub(b.checked_mul(*c)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn one() -> Self {
        1
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_key(&self) -> BigInt {
        self.abs()
    }
    fn combine(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        Some(self * a - b * c)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn one() -> Self {
        One::one()
    }
}

pub(crate) type Row<C> = Vec<(u32, C)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    UnitPivots,
    Rank,
}

#[derive(Debug)]
pub(crate) struct Overflow;

pub(crate) struct Eliminated<C> {
    /// Pivots taken.
    pub rank: usize,
    /// Rows still carrying entries in unreduced columns (`UnitPivots` only).
    pub residue: Vec<Row<C>>,
}

fn entry<C>(row: &Row<C>, col: u32) -> Option<&C> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

/// `scale·target - factor·pivot`, merged by column. Returns `None` on overflow.
fn merge<C: Coeff>(target: &Row<C>, scale: &C, pivot: &Row<C>, factor: &C) -> Option<Row<C>> {
    let zero = C::from_i64(0);
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, target[i - 1].1.combine(scale, &zero, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, zero.combine(&zero, factor, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, target[i - 1].1.combine(scale, factor, &pivot[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn remove_content<C: Coeff>(row: &mut Row<C>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_unit() && !g.is_zero() {
        for e in row.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
}

pub(crate) fn eliminate<C: Coeff>(mut rows: Vec<Row<C>>, ncols: usize, mode: Mode) -> Result<Eliminated<C>, Overflow> {
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    let mut col_done = vec![false; ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c as usize].push(r as u32);
            col_count[c as usize] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        (0..ncols).filter(|&c| col_count[c] > 0).map(|c| Reverse((col_count[c], c as u32))).collect();
    let mut rank = 0usize;
    let mut touched: Vec<u32> = Vec::new();

    loop {
        while let Some(Reverse((count, col))) = heap.pop() {
            let c = col as usize;
            if col_done[c] || col_count[c] != count {
                continue;
            }
            if count == 0 {
                col_done[c] = true;
                continue;
            }
            // live rows with an entry in this column
            let mut holders: Vec<u32> = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| alive[r as usize] && entry(&rows[r as usize], col).is_some())
                .collect();
            holders.sort_unstable();
            holders.dedup();
            col_rows[c] = holders.clone();

            let pick = holders
                .iter()
                .copied()
                .filter(|&r| mode == Mode::Rank || entry(&rows[r as usize], col).is_some_and(C::is_unit))
                .min_by_key(|&r| {
                    let v = entry(&rows[r as usize], col).expect("holder has entry");
                    (!v.is_unit(), v.abs_key(), rows[r as usize].len(), r)
                });
            let Some(p) = pick else {
                // no unit pivot available now; revisited when this column changes
                continue;
            };
            let p = p as usize;
            let pivot_row = std::mem::take(&mut rows[p]);
            let pv = entry(&pivot_row, col).expect("pivot entry").clone();
            alive[p] = false;
            for &(pc, _) in &pivot_row {
                col_count[pc as usize] -= 1;
                touched.push(pc);
            }

            for &k in holders.iter().filter(|&&k| k as usize != p) {
                let k = k as usize;
                let a = entry(&rows[k], col).expect("holder has entry").clone();
                let new_row = if pv.is_unit() {
                    // r_k - (a / pv)·r_p, and 1/pv = pv for units
                    let f = a.combine(&pv, &C::from_i64(0), &C::from_i64(0)).ok_or(Overflow)?;
                    merge(&rows[k], &C::one(), &pivot_row, &f).ok_or(Overflow)?
                } else {
                    let mut r = merge(&rows[k], &pv, &pivot_row, &a).ok_or(Overflow)?;
                    remove_content(&mut r);
                    r
                };
                // column bookkeeping for the changed row
                let old = std::mem::replace(&mut rows[k], new_row);
                let (mut i, mut j) = (0, 0);
                let new = &rows[k];
                while i < old.len() || j < new.len() {
                    let ci = old.get(i).map(|e| e.0).unwrap_or(u32::MAX);
                    let cj = new.get(j).map(|e| e.0).unwrap_or(u32::MAX);
                    if ci < cj {
                        col_count[ci as usize] -= 1;
                        touched.push(ci);
                        i += 1;
                    } else if cj < ci {
                        col_count[cj as usize] += 1;
                        col_rows[cj as usize].push(k as u32);
                        touched.push(cj);
                        j += 1;
                    } else {
                        i += 1;
                        j += 1;
                    }
                }
            }
            col_done[c] = true;
            rank += 1;
            touched.sort_unstable();
            touched.dedup();
            for &t in &touched {
                if !col_done[t as usize] {
                    heap.push(Reverse((col_count[t as usize], t)));
                }
            }
            touched.clear();
        }

        // Entries can turn into units without their column count changing;
        // rescan before giving up.
        let mut again = false;
        for c in 0..ncols {
            if col_done[c] || col_count[c] == 0 {
                continue;
            }
            let has_unit = col_rows[c]
                .iter()
                .any(|&r| alive[r as usize] && entry(&rows[r as usize], c as u32).is_some_and(C::is_unit));
            if has_unit || mode == Mode::Rank {
                heap.push(Reverse((col_count[c], c as u32)));
                again = true;
            }
        }
        if !again {
            break;
        }
    }

    let residue = rows
        .into_iter()
        .enumerate()
        .filter(|(r, row)| alive[*r] && !row.is_empty())
        .map(|(_, row)| row.into_iter().filter(|(c, _)| !col_done[*c as usize]).collect::<Row<C>>())
        .filter(|row| !row.is_empty())
        .collect();
    Ok(Eliminated { rank, residue })
}
