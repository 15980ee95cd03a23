//! Invariants checked exhaustively for n <= 5 against the oracles in
//! `common`, plus randomized suites on larger inputs.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::Rel;
use proptest::prelude::*;
use rayon::prelude::*;
use sepcx::homology::{betti_mod_p, betti_rational, boundary_matrices, reduced_homology};
use sepcx::scomplex::{clique_complex, Complex, Face, Graph};
use sepcx::sepcx::{build, pi_prime, SeparationComplex, DEFAULT_CAP};
use sepcx::sepsets::{
    is_frozen, is_frozen_exhaustive, separation_graph, GroundSize, GroupElement, Relation, SubsetMask,
};

fn gs(n: u32) -> GroundSize {
    GroundSize::new(n).unwrap()
}

fn mask(n: u32, bits: u32) -> SubsetMask {
    SubsetMask::from_bits(gs(n), bits).unwrap()
}

fn oracle_rel(r: Relation) -> Rel {
    match r {
        Relation::Weak => Rel::Weak,
        Relation::Strong => Rel::Strong,
    }
}

fn complex(n: u32, r: Relation) -> SeparationComplex {
    build(gs(n), r, DEFAULT_CAP).unwrap()
}

fn all_faces(x: &Complex) -> Vec<Face> {
    x.faces_by_dim().into_iter().flatten().collect()
}

fn label_bits(x: &SeparationComplex, face: &Face) -> Vec<u32> {
    face.vertices().iter().map(|&v| x.label(v).bits()).collect()
}

// Predicates

#[test]
fn predicates_agree_with_oracle_and_are_symmetric() {
    for n in 1..=5 {
        for r in Relation::ALL {
            for a in 0..1u32 << n {
                for b in 0..1u32 << n {
                    let lib = r.separated(mask(n, a), mask(n, b)).unwrap();
                    assert_eq!(lib, common::separated(oracle_rel(r), a, b, n), "{r:?} {a:b} {b:b} n={n}");
                    assert_eq!(lib, r.separated(mask(n, b), mask(n, a)).unwrap());
                }
            }
        }
    }
}

#[test]
fn strong_separation_implies_weak() {
    for n in 1..=5 {
        for a in 0..1u32 << n {
            for b in 0..1u32 << n {
                if Relation::Strong.separated(mask(n, a), mask(n, b)).unwrap() {
                    assert!(Relation::Weak.separated(mask(n, a), mask(n, b)).unwrap(), "{a:b} {b:b}");
                }
            }
        }
    }
}

#[test]
fn group_preserves_predicates_and_frozen_sets() {
    for n in 1..=5 {
        for (gi, g) in GroupElement::ALL.into_iter().enumerate() {
            for a in 0..1u32 << n {
                let ga = g.act(mask(n, a));
                assert_eq!(ga.bits(), common::group_act(gi, a, n), "{g} on {a:b}");
                for r in Relation::ALL {
                    assert_eq!(is_frozen(ga, r), is_frozen(mask(n, a), r));
                    for b in 0..1u32 << n {
                        let gb = g.act(mask(n, b));
                        assert_eq!(r.separated(ga, gb).unwrap(), r.separated(mask(n, a), mask(n, b)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn frozen_closed_form_matches_brute_force() {
    for n in 1..=5 {
        for r in Relation::ALL {
            for s in 0..1u32 << n {
                let closed = is_frozen(mask(n, s), r);
                assert_eq!(closed, common::frozen(oracle_rel(r), s, n), "{r:?} {s:b} n={n}");
                assert_eq!(Some(closed), is_frozen_exhaustive(mask(n, s), r));
            }
        }
    }
    // the library's own brute force, further out
    for n in 6..=10 {
        for r in Relation::ALL {
            for s in 0..1u32 << n {
                assert_eq!(Some(is_frozen(mask(n, s), r)), is_frozen_exhaustive(mask(n, s), r));
            }
        }
    }
}

#[test]
fn non_frozen_count_is_two_to_the_n_minus_two_n() {
    for n in 2..=10 {
        for r in Relation::ALL {
            let g = separation_graph(gs(n), r);
            assert_eq!(g.vertex_count() as u64, (1u64 << n) - 2 * n as u64);
        }
    }
}

// Complexes

#[test]
fn complexes_match_brute_force_clique_enumeration() {
    for n in 3..=5 {
        for r in Relation::ALL {
            let x = complex(n, r);
            let oracle = common::cliques(oracle_rel(r), n);
            assert_eq!(x.complex().f_vector(), common::f_vector_of(&oracle), "{}", x.name());
            let lib: HashSet<Vec<u32>> = all_faces(x.complex())
                .iter()
                .map(|f| {
                    let mut v = label_bits(&x, f);
                    v.sort_unstable();
                    v
                })
                .collect();
            let want: HashSet<Vec<u32>> = oracle.into_iter().collect();
            assert_eq!(lib, want, "{}", x.name());
        }
    }
}

#[test]
fn group_maps_facets_to_facets() {
    for n in 3..=5 {
        for r in Relation::ALL {
            let x = complex(n, r);
            let facets: HashSet<Face> = x.complex().facets().iter().cloned().collect();
            for g in GroupElement::ALL {
                for f in x.complex().facets() {
                    assert!(facets.contains(&x.act_on_face(g, f)), "{g} on {}", x.format_face(f));
                }
            }
        }
    }
}

// The retraction map

#[test]
fn pi_prime_matches_oracle_and_is_equivariant() {
    for n in 4..=5 {
        let n_gs = gs(n);
        let x = complex(n, Relation::Strong);
        let faces = all_faces(x.complex());
        faces.par_iter().for_each(|sigma| {
            let image = pi_prime(&x, sigma).unwrap();
            let got: BTreeSet<u32> = label_bits(&x, &image.image).into_iter().collect();
            let sigma_bits = label_bits(&x, sigma);
            assert_eq!(got, common::pi_prime(&sigma_bits, n), "pi' of {}", x.format_face(sigma));
            for (gi, g) in GroupElement::ALL.into_iter().enumerate() {
                let moved = pi_prime(&x, &x.act_on_face(g, sigma)).unwrap();
                let expected: BTreeSet<u32> = got.iter().map(|&b| common::group_act(gi, b, n)).collect();
                let moved_bits: BTreeSet<u32> = label_bits(&x, &moved.image).into_iter().collect();
                assert_eq!(moved_bits, expected, "{g} on {} (n={})", x.format_face(sigma), n_gs.get());
            }
        });
    }
}

// Stars in clique complexes

fn faces_with_splits(face: &Face) -> Vec<(Face, Face)> {
    let v = face.vertices();
    let mut out = Vec::new();
    // each vertex goes to sigma only, tau only, or both
    let total = 3usize.pow(v.len() as u32);
    for code in 0..total {
        let (mut s, mut t, mut c) = (Vec::new(), Vec::new(), code);
        for &u in v {
            match c % 3 {
                0 => s.push(u),
                1 => t.push(u),
                _ => {
                    s.push(u);
                    t.push(u);
                }
            }
            c /= 3;
        }
        if !s.is_empty() && !t.is_empty() && s <= t {
            out.push((Face::new(s), Face::new(t)));
        }
    }
    out
}

fn check_star_identity(x: &Complex) -> usize {
    all_faces(x)
        .par_iter()
        .map(|joined| {
            let splits = faces_with_splits(joined);
            for (s, t) in &splits {
                let lhs = x.star(s).unwrap().intersection(&x.star(t).unwrap());
                assert_eq!(lhs, x.star(joined).unwrap(), "st({s}) and st({t})");
                assert_eq!(x.star_intersection(s, t).unwrap(), lhs);
            }
            splits.len()
        })
        .sum()
}

#[test]
fn star_intersection_identity_holds_exhaustively() {
    for n in 4..=5 {
        for r in Relation::ALL {
            let x = complex(n, r);
            assert!(check_star_identity(x.complex()) > 0);
        }
    }
}

#[test]
fn stars_match_oracle_face_sets() {
    for r in Relation::ALL {
        let x = complex(4, r);
        let rel = oracle_rel(r);
        let oracle: HashSet<Vec<u32>> = common::cliques(rel, 4).into_iter().collect();
        for sigma in all_faces(x.complex()) {
            let sb = label_bits(&x, &sigma);
            let mut want: HashSet<Vec<u32>> = oracle
                .iter()
                .filter(|rho| {
                    let mut u: Vec<u32> = rho.iter().chain(&sb).copied().collect::<BTreeSet<_>>().into_iter().collect();
                    u.sort_unstable();
                    oracle.contains(&u)
                })
                .cloned()
                .collect();
            want.retain(|f| !f.is_empty());
            let got: HashSet<Vec<u32>> = all_faces(&x.complex().star(&sigma).unwrap())
                .iter()
                .map(|f| {
                    let mut b = label_bits(&x, f);
                    b.sort_unstable();
                    b
                })
                .collect();
            assert_eq!(got, want, "st({})", x.format_face(&sigma));
            for v in sigma.vertices() {
                assert!(x.complex().star(&sigma).unwrap().cone_points().contains(v));
            }
        }
    }
}

// Homology

fn check_boundary_squares(x: &Complex) {
    let mats = boundary_matrices(x);
    for pair in mats.windows(2) {
        assert!(pair[0].mul(&pair[1]).is_zero());
    }
}

fn check_betti_euler(x: &Complex) {
    let h = reduced_homology(x);
    let alternating: i64 = h.iter().enumerate().map(|(d, g)| if d % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
    assert_eq!(alternating, x.euler_characteristic() - 1);
    let ranks: Vec<usize> = h.iter().map(|g| g.rank).collect();
    assert_eq!(betti_rational(x), ranks);
    for p in [2u64, 3, 5] {
        // universal coefficients: each torsion factor divisible by p adds
        // one to the mod-p Betti number in its own degree and the next
        let divisible = |d: usize| {
            h.get(d).map_or(0, |g| g.torsion.iter().filter(|t| (*t % p as u32) == 0u32.into()).count())
        };
        let expected: Vec<usize> =
            (0..h.len()).map(|d| h[d].rank + divisible(d) + if d > 0 { divisible(d - 1) } else { 0 }).collect();
        assert_eq!(betti_mod_p(x, p), expected, "p = {p}");
    }
}

#[test]
fn boundary_squares_vanish_on_separation_complexes() {
    for n in 3..=5 {
        for r in Relation::ALL {
            check_boundary_squares(complex(n, r).complex());
        }
    }
}

#[test]
fn betti_numbers_agree_with_euler_characteristic() {
    for n in 3..=5 {
        for r in Relation::ALL {
            check_betti_euler(complex(n, r).complex());
        }
    }
}

// Randomized suites

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices).prop_flat_map(|k| {
        proptest::collection::vec(any::<bool>(), k * (k - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(k);
            let mut it = bits.into_iter();
            for u in 0..k {
                for v in u + 1..k {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn facet_strategy() -> impl Strategy<Value = Complex> {
    proptest::collection::vec(proptest::collection::btree_set(0usize..8, 1..=4), 1..10).prop_map(|faces| {
        Complex::from_facets(8, faces.into_iter().map(|f| Face::new(f.into_iter().collect()))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn predicates_match_oracle_on_larger_grounds(n in 6u32..=16, a in any::<u32>(), b in any::<u32>()) {
        let full = (1u32 << n) - 1;
        let (a, b) = (a & full, b & full);
        for r in Relation::ALL {
            let lib = r.separated(mask(n, a), mask(n, b)).unwrap();
            prop_assert_eq!(lib, common::separated(oracle_rel(r), a, b, n));
            prop_assert_eq!(lib, r.separated(mask(n, b), mask(n, a)).unwrap());
        }
        if Relation::Strong.separated(mask(n, a), mask(n, b)).unwrap() {
            prop_assert!(Relation::Weak.separated(mask(n, a), mask(n, b)).unwrap());
        }
        for (gi, g) in GroupElement::ALL.into_iter().enumerate() {
            prop_assert_eq!(g.act(mask(n, a)).bits(), common::group_act(gi, a, n));
        }
    }

    #[test]
    fn random_flag_complexes_satisfy_star_identity(g in graph_strategy(8)) {
        let x = clique_complex(&g);
        check_star_identity(&x);
    }

    #[test]
    fn random_complexes_have_consistent_homology(x in facet_strategy()) {
        check_boundary_squares(&x);
        check_betti_euler(&x);
    }

    #[test]
    fn random_flag_complexes_have_consistent_homology(g in graph_strategy(9)) {
        let x = clique_complex(&g);
        check_boundary_squares(&x);
        check_betti_euler(&x);
    }
}
