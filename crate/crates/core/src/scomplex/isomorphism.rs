//! Exact isomorphism search for small complexes.
//!
//! Vertices are split into classes by a local invariant (degree in the
//! 1-skeleton plus the sorted sizes of incident facets). The search assigns
//! vertices in a connectivity-first order, keeps the 1-skeleton consistent,
//! and checks every facet as soon as all of its vertices are assigned.

use std::collections::{BTreeMap, HashSet};

use super::{Complex, Face};

type Signature = (usize, Vec<usize>);

fn signatures(c: &Complex, vertices: &[usize]) -> BTreeMap<usize, Signature> {
    let g = c.skeleton_graph();
    vertices
        .iter()
        .map(|&v| {
            let mut sizes: Vec<usize> = c.facets().iter().filter(|f| f.contains(v)).map(Face::len).collect();
            sizes.sort_unstable();
            (v, (g.neighbors(v).count(), sizes))
        })
        .collect()
}

/// A facet-preserving vertex bijection from `x` to `y`, as `(x_vertex,
/// y_vertex)` pairs sorted by the `x` vertex, or `None` when the complexes
/// are not isomorphic. Intended for complexes of up to a few dozen vertices.
pub fn isomorphic(x: &Complex, y: &Complex) -> Option<Vec<(usize, usize)>> {
    let xv = x.vertices();
    let yv = y.vertices();
    if xv.len() != yv.len() || x.facets().len() != y.facets().len() || x.f_vector() != y.f_vector() {
        return None;
    }
    if xv.is_empty() {
        return Some(Vec::new());
    }
    let xs = signatures(x, &xv);
    let ys = signatures(y, &yv);
    let mut xsig: Vec<&Signature> = xs.values().collect();
    let mut ysig: Vec<&Signature> = ys.values().collect();
    xsig.sort();
    ysig.sort();
    if xsig != ysig {
        return None;
    }

    let gx = x.skeleton_graph();
    let gy = y.skeleton_graph();

    // Assignment order: start from a vertex of the rarest class, then always
    // take the unplaced vertex with the most placed neighbours.
    let class_size = |s: &Signature| xsig.iter().filter(|t| **t == s).count();
    let mut order: Vec<usize> = Vec::with_capacity(xv.len());
    let mut placed = vec![false; x.universe()];
    while order.len() < xv.len() {
        let next = xv
            .iter()
            .copied()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = gx.neighbors(v).filter(|&w| placed[w]).count();
                (linked, usize::MAX - class_size(&xs[&v]), usize::MAX - v)
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let position: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // facets of x checked when their last vertex (in assignment order) is placed
    let mut closing: Vec<Vec<&Face>> = vec![Vec::new(); order.len()];
    for f in x.facets() {
        let last = f.vertices().iter().map(|v| position[v]).max().expect("facets are nonempty");
        closing[last].push(f);
    }
    let yfacets: HashSet<&Face> = y.facets().iter().collect();

    struct Search<'a> {
        order: &'a [usize],
        xs: &'a BTreeMap<usize, Signature>,
        ys: &'a BTreeMap<usize, Signature>,
        yv: &'a [usize],
        gx: &'a super::Graph,
        gy: &'a super::Graph,
        closing: &'a [Vec<&'a Face>],
        yfacets: &'a HashSet<&'a Face>,
        map: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for &w in self.yv {
                if self.used[w] || self.xs[&v] != self.ys[&w] {
                    continue;
                }
                let consistent = self.order[..depth].iter().all(|&u| self.gx.has_edge(v, u) == self.gy.has_edge(w, self.map[u]));
                if !consistent {
                    continue;
                }
                self.map[v] = w;
                let facets_ok = self.closing[depth].iter().all(|f| {
                    let image = Face::new(f.vertices().iter().map(|&u| self.map[u]).collect());
                    self.yfacets.contains(&image)
                });
                if facets_ok {
                    self.used[w] = true;
                    if self.run(depth + 1) {
                        return true;
                    }
                    self.used[w] = false;
                }
                self.map[v] = usize::MAX;
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        xs: &xs,
        ys: &ys,
        yv: &yv,
        gx: &gx,
        gy: &gy,
        closing: &closing,
        yfacets: &yfacets,
        map: vec![usize::MAX; x.universe()],
        used: vec![false; y.universe()],
    };
    if !search.run(0) {
        return None;
    }
    Some(xv.iter().map(|&v| (v, search.map[v])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scomplex::{clique_complex, Graph};

    fn check_bijection(x: &Complex, y: &Complex, map: &[(usize, usize)]) {
        let mut table = vec![usize::MAX; x.universe()];
        for &(a, b) in map {
            table[a] = b;
        }
        let image: HashSet<Face> =
            x.facets().iter().map(|f| Face::new(f.vertices().iter().map(|&v| table[v]).collect())).collect();
        let target: HashSet<Face> = y.facets().iter().cloned().collect();
        assert_eq!(image, target);
    }

    #[test]
    fn identity_on_self() {
        let oct = Complex::cross_polytope_boundary(3);
        let map = isomorphic(&oct, &oct).unwrap();
        check_bijection(&oct, &oct, &map);
    }

    #[test]
    fn relabelled_cycle() {
        let a = clique_complex(&Graph::cycle(6));
        let b = a.relabel(&[3, 0, 5, 1, 4, 2], 6).unwrap();
        let map = isomorphic(&a, &b).unwrap();
        check_bijection(&a, &b, &map);
    }

    #[test]
    fn square_is_the_one_dimensional_cross_polytope() {
        let c4 = clique_complex(&Graph::cycle(4));
        assert!(isomorphic(&c4, &Complex::cross_polytope_boundary(2)).is_some());
    }

    #[test]
    fn non_isomorphic_pairs() {
        let c6 = clique_complex(&Graph::cycle(6));
        let two_triangles_hollow = Complex::from_facets(
            6,
            vec![Face::from([0, 1]), Face::from([1, 2]), Face::from([0, 2]), Face::from([3, 4]), Face::from([4, 5]), Face::from([3, 5])],
        )
        .unwrap();
        assert!(isomorphic(&c6, &two_triangles_hollow).is_none());
        // same 1-skeleton, different 2-faces
        let solid = clique_complex(&Graph::complete(3));
        let hollow = Complex::from_facets(3, vec![Face::from([0, 1]), Face::from([1, 2]), Face::from([0, 2])]).unwrap();
        assert!(isomorphic(&solid, &hollow).is_none());
    }
}
