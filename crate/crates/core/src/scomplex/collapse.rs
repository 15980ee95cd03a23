//! Greedy elementary collapses as a contractibility certificate.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{Complex, Face};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CollapseStatus {
    CollapsedToPoint,
    Stuck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseOutcome {
    pub status: CollapseStatus,
    /// Maximal faces left when no free face remains.
    pub remaining_facets: usize,
    pub remaining_faces: usize,
    /// Number of elementary collapses performed.
    pub steps: usize,
}

impl CollapseOutcome {
    pub fn collapsed(&self) -> bool {
        self.status == CollapseStatus::CollapsedToPoint
    }
}

/// Repeatedly removes the lexicographically least free face together with
/// its unique coface. A free face is a face with exactly one proper coface
/// left in the complex (that coface is then a facet one dimension up).
///
/// Reaching a single vertex proves the complex collapsible, hence
/// contractible. Getting stuck proves nothing.
pub fn greedy_collapse(complex: &Complex) -> CollapseOutcome {
    let by_dim = complex.faces_by_dim();
    if by_dim.is_empty() {
        return CollapseOutcome { status: CollapseStatus::Stuck, remaining_facets: 0, remaining_faces: 0, steps: 0 };
    }

    // Global ids follow the lexicographic order of vertex lists.
    let mut all: Vec<&Face> = by_dim.iter().flatten().collect();
    all.sort_unstable();
    let id: HashMap<&Face, usize> = all.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let total = all.len();

    let mut down: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (g, f) in all.iter().enumerate() {
        if f.len() > 1 {
            for r in f.boundary_faces() {
                let rid = id[&r];
                down[g].push(rid);
                up[rid].push(g);
            }
        }
    }

    let mut alive = vec![true; total];
    let mut cofaces: Vec<usize> = up.iter().map(Vec::len).collect();
    let mut free: BTreeSet<usize> = (0..total).filter(|&g| cofaces[g] == 1).collect();
    let mut steps = 0;
    let mut remaining = total;

    while let Some(g) = free.pop_first() {
        if !alive[g] || cofaces[g] != 1 {
            continue;
        }
        let sigma = *up[g].iter().find(|&&c| alive[c]).expect("free face has a live coface");
        alive[g] = false;
        alive[sigma] = false;
        remaining -= 2;
        steps += 1;
        for &r in down[sigma].iter().chain(down[g].iter()) {
            if alive[r] {
                cofaces[r] -= 1;
                if cofaces[r] == 1 {
                    free.insert(r);
                }
            }
        }
    }

    let remaining_facets = (0..total).filter(|&g| alive[g] && cofaces[g] == 0).count();
    let status = if remaining == 1 { CollapseStatus::CollapsedToPoint } else { CollapseStatus::Stuck };
    CollapseOutcome { status, remaining_facets, remaining_faces: remaining, steps }
}
