//! Reduced simplicial homology with integer coefficients.
//!
//! The chain complex is augmented: `∂_0` sends every vertex to the empty
//! face, so a point has trivial homology in every degree. Ranks and torsion
//! come from the Smith normal form of each boundary matrix:
//!
//! ```text
//! rank H̃_d   = f_d - rank ∂_d - rank ∂_{d+1}
//! torsion H̃_d = invariant factors of ∂_{d+1} greater than 1
//! ```

mod eliminate;
mod matrix;
mod snf;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scomplex::{Complex, Face};

pub use matrix::SparseIntMatrix;
pub use snf::{rank_mod_p, rational_rank, smith_normal_form};

/// `Z^rank ⊕ Z/t1 ⊕ Z/t2 ⊕ ...` with `t1 | t2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // torsion coefficients as JSON numbers when they fit, strings otherwise
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|t| match t.to_u64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(t.to_string()),
            })
            .collect();
        let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

/// Formats a homology list as `H~0 = ..` lines.
pub fn format_homology(groups: &[HomologyGroup]) -> String {
    groups.iter().enumerate().map(|(d, g)| format!("H~{d} = {g}\n")).collect()
}

fn boundary_columns(lower: &[Face], upper: &[Face]) -> Vec<Vec<(usize, i64)>> {
    upper
        .iter()
        .map(|face| {
            let mut col: Vec<(usize, i64)> = face
                .boundary_faces()
                .enumerate()
                .map(|(i, r)| {
                    let row = lower.binary_search(&r).expect("boundary face is listed");
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// Matrices of `∂_d` for `d = 0..=dim`. Rows of `∂_d` are the `(d-1)`-faces
/// (the empty face for `d = 0`), columns the `d`-faces, both in lexicographic
/// order; the entry for omitting the `i`-th vertex is `(-1)^i`.
pub fn boundary_matrices(x: &Complex) -> Vec<SparseIntMatrix> {
    let faces = x.faces_by_dim();
    boundary_matrices_from_faces(&faces)
}

fn boundary_matrices_from_faces(faces: &[Vec<Face>]) -> Vec<SparseIntMatrix> {
    (0..faces.len())
        .into_par_iter()
        .map(|d| {
            if d == 0 {
                let cols = (0..faces[0].len()).map(|_| vec![(0usize, 1i64)]).collect();
                SparseIntMatrix::from_small_columns(1, cols)
            } else {
                SparseIntMatrix::from_small_columns(faces[d - 1].len(), boundary_columns(&faces[d - 1], &faces[d]))
            }
        })
        .collect()
}

/// Reduced homology `H̃_d` for `d = 0..=dim`; empty for the empty complex.
pub fn reduced_homology(x: &Complex) -> Vec<HomologyGroup> {
    let faces = x.faces_by_dim();
    if faces.is_empty() {
        return Vec::new();
    }
    let matrices = boundary_matrices_from_faces(&faces);
    let factors: Vec<Vec<BigInt>> = matrices.par_iter().map(smith_normal_form).collect();
    let top = faces.len();
    (0..top)
        .map(|d| {
            let rank_d = factors[d].len();
            let rank_up = if d + 1 < top { factors[d + 1].len() } else { 0 };
            let torsion = if d + 1 < top {
                factors[d + 1]
                    .iter()
                    .filter(|t| !t.is_one())
                    .map(|t| t.magnitude().clone())
                    .collect()
            } else {
                Vec::new()
            };
            HomologyGroup { rank: faces[d].len() - rank_d - rank_up, torsion }
        })
        .collect()
}

fn betti_from_ranks(faces: &[Vec<Face>], ranks: &[usize]) -> Vec<usize> {
    (0..faces.len())
        .map(|d| faces[d].len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
        .collect()
}

/// Reduced Betti numbers from rational ranks only (no torsion).
pub fn betti_rational(x: &Complex) -> Vec<usize> {
    let faces = x.faces_by_dim();
    let ranks: Vec<usize> = boundary_matrices_from_faces(&faces).par_iter().map(rational_rank).collect();
    betti_from_ranks(&faces, &ranks)
}

/// Reduced Betti numbers over `Z/p`.
pub fn betti_mod_p(x: &Complex, p: u64) -> Vec<usize> {
    let faces = x.faces_by_dim();
    let ranks: Vec<usize> = boundary_matrices_from_faces(&faces).par_iter().map(|m| rank_mod_p(m, p)).collect();
    betti_from_ranks(&faces, &ranks)
}

/// Whether every reduced homology group vanishes (and the complex is nonempty).
pub fn is_acyclic(groups: &[HomologyGroup]) -> bool {
    !groups.is_empty() && groups.iter().all(HomologyGroup::is_trivial)
}

/// Whether the groups are those of the `k`-sphere: `H̃_k ≅ Z`, all others 0.
pub fn is_sphere_homology(groups: &[HomologyGroup], k: usize) -> bool {
    groups.len() > k && groups.iter().enumerate().all(|(d, g)| if d == k { *g == HomologyGroup::free(1) } else { g.is_trivial() })
}
