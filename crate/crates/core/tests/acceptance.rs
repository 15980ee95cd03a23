//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Built with `harness = false` so the lines always print.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::Rel;
use rayon::prelude::*;
use sepcx::homology::{betti_rational, boundary_matrices, is_acyclic, is_sphere_homology, reduced_homology, HomologyGroup};
use sepcx::scomplex::{greedy_collapse, isomorphic, nerve, Complex, Face};
use sepcx::sepcx::{
    build, cross_polytope_k, hub_vertices, pair_free_index_sets, pi_prime, star_cover_cone_points, ws_covering,
    verify_complementary_extensions, verify_pi_chain_condition, SeparationComplex, DEFAULT_CAP,
};
use sepcx::sepsets::{is_frozen, GroundSize, GroupElement, Relation, SubsetMask};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn gs(n: u32) -> GroundSize {
    GroundSize::new(n).unwrap()
}

fn complex(n: u32, r: Relation) -> SeparationComplex {
    build(gs(n), r, DEFAULT_CAP).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

fn summary(h: &[HomologyGroup]) -> String {
    let parts: Vec<String> =
        h.iter().enumerate().filter(|(_, g)| !g.is_trivial()).map(|(d, g)| format!("H~{d} = {g}")).collect();
    if parts.is_empty() {
        "acyclic".into()
    } else {
        parts.join(", ")
    }
}

fn labels(x: &SeparationComplex) -> Vec<String> {
    x.labels().iter().map(ToString::to_string).collect()
}

fn edge_names(x: &SeparationComplex) -> HashSet<(String, String)> {
    x.complex()
        .faces_of_dim(1)
        .iter()
        .map(|e| {
            let (a, b) = (x.label(e.vertices()[0]).to_string(), x.label(e.vertices()[1]).to_string());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn small_complexes() -> Outcome {
    let start = Instant::now();
    for r in Relation::ALL {
        let x = complex(3, r);
        ensure(labels(&x) == ["2", "13"], format!("{} vertices {:?}", x.name(), labels(&x)))?;
        ensure(x.complex().f_vector() == [2], format!("{} f-vector {:?}", x.name(), x.complex().f_vector()))?;
    }
    within(start.elapsed(), Duration::from_secs(1), "n = 3")?;
    Ok("two isolated vertices 2, 13 for ws and ss".into())
}

fn four_vertex_pictures() -> Outcome {
    let start = Instant::now();
    let (ss, ws) = (complex(4, Relation::Strong), complex(4, Relation::Weak));
    ensure(ss.complex().f_vector() == [8, 16, 8], format!("ss4 f {:?}", ss.complex().f_vector()))?;
    ensure(ws.complex().f_vector() == [8, 17, 10], format!("ws4 f {:?}", ws.complex().f_vector()))?;
    let (se, we) = (edge_names(&ss), edge_names(&ws));
    ensure(se.is_subset(&we), "ss4 edges not inside ws4 edges")?;
    let extra: Vec<_> = we.difference(&se).collect();
    ensure(extra == [&("14".to_string(), "23".to_string())], format!("extra ws edges {extra:?}"))?;
    within(start.elapsed(), Duration::from_secs(1), "n = 4")?;
    Ok("ss4 (8,16,8), ws4 (8,17,10), extra edge 23-14".into())
}

fn weak_side_acyclic() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for n in [4, 5] {
        let x = complex(n, Relation::Weak);
        let h = reduced_homology(x.complex());
        ensure(is_acyclic(&h), format!("{}: {}", x.name(), summary(&h)))?;
        let collapse = greedy_collapse(x.complex());
        if n == 4 {
            ensure(collapse.collapsed(), "ws4 collapse got stuck")?;
        }
        notes.push(format!("{} acyclic, collapse {}", x.name(), if collapse.collapsed() { "to a point" } else { "inconclusive" }));
    }
    within(start.elapsed(), Duration::from_secs(60), "ws4 and ws5")?;
    Ok(notes.join("; "))
}

fn strong_side_spheres() -> Outcome {
    let start = Instant::now();
    for n in 4..=6 {
        let x = complex(n, Relation::Strong);
        let h = reduced_homology(x.complex());
        let rational = betti_rational(x.complex());
        let ranks: Vec<usize> = h.iter().map(|g| g.rank).collect();
        ensure(rational == ranks, format!("{}: rational ranks {rational:?} vs {ranks:?}", x.name()))?;
        ensure(is_sphere_homology(&h, n as usize - 3), format!("{}: {}", x.name(), summary(&h)))?;
    }
    within(start.elapsed(), Duration::from_secs(600), "ss4..ss6")?;
    Ok("H~(n-3) = Z only, n = 4, 5, 6".into())
}

fn purity() -> Outcome {
    for n in [4u64, 5] {
        let want = common::choose(n - 1, 2) as isize - 1;
        for r in Relation::ALL {
            let x = complex(n as u32, r);
            ensure(
                x.complex().is_pure() && x.complex().dimension() == want,
                format!("{}: dimension {}, pure {}", x.name(), x.complex().dimension(), x.complex().is_pure()),
            )?;
        }
    }
    Ok("pure of dimension 2 (n = 4) and 5 (n = 5)".into())
}

struct Boundaries {
    ss: SeparationComplex,
    ws: SeparationComplex,
    ss_boundary: Complex,
    ws_boundary: Complex,
    elapsed: Duration,
}

fn boundaries() -> Boundaries {
    let start = Instant::now();
    let ss = complex(5, Relation::Strong);
    let ws = complex(5, Relation::Weak);
    let ss_boundary = ss.complex().boundary_subcomplex().unwrap();
    let ws_boundary = ws.complex().boundary_subcomplex().unwrap();
    Boundaries { ss, ws, ss_boundary, ws_boundary, elapsed: start.elapsed() }
}

fn boundary_homology(b: &Boundaries) -> Outcome {
    let start = Instant::now();
    let ss = reduced_homology(&b.ss_boundary);
    let ws = reduced_homology(&b.ws_boundary);
    let expect = |h: &[HomologyGroup], want: &[(usize, usize)]| {
        h.iter().enumerate().all(|(d, g)| {
            g.torsion.is_empty() && g.rank == want.iter().find(|(dd, _)| *dd == d).map_or(0, |(_, r)| *r)
        })
    };
    ensure(expect(&ss, &[(2, 1), (3, 9), (4, 1)]), format!("boundary ss5: {}", summary(&ss)))?;
    ensure(expect(&ws, &[(2, 1), (4, 1)]), format!("boundary ws5: {}", summary(&ws)))?;
    within(b.elapsed + start.elapsed(), Duration::from_secs(600), "boundaries")?;
    Ok(format!("ss5: {}; ws5: {}", summary(&ss), summary(&ws)))
}

fn edge_link(b: &Boundaries) -> Outcome {
    let link = b.ws_boundary.link(&b.ws.parse_face("15,234").unwrap()).unwrap();
    ensure(link.f_vector() == [12, 24, 16], format!("f {:?}", link.f_vector()))?;
    let parts = link.components();
    ensure(parts.len() == 2, format!("{} components", parts.len()))?;
    let octahedron = Complex::cross_polytope_boundary(3);
    for p in &parts {
        ensure(isomorphic(&p.compact().0, &octahedron).is_some(), "component is not an octahedron boundary")?;
    }
    Ok("two octahedron boundaries, f (12,24,16)".into())
}

fn triangle_link(b: &Boundaries) -> Outcome {
    let link = b.ss_boundary.link(&b.ss.parse_face("2,23,234").unwrap()).unwrap();
    ensure(link.f_vector() == [8, 8], format!("f {:?}", link.f_vector()))?;
    let parts = link.components();
    let square = Complex::cross_polytope_boundary(2);
    ensure(parts.len() == 2, format!("{} components", parts.len()))?;
    for p in &parts {
        ensure(isomorphic(&p.compact().0, &square).is_some(), "component is not a 4-cycle")?;
    }
    let h = reduced_homology(&link);
    ensure(
        h.len() == 2 && h[0] == HomologyGroup::free(1) && h[1] == HomologyGroup::free(2),
        format!("homology {}", summary(&h)),
    )?;
    Ok("two 4-cycles, f (8,8), H~0 = Z, H~1 = Z^2".into())
}

fn vertex_links(b: &Boundaries) -> Outcome {
    for v in ["15", "234"] {
        let link = b.ws_boundary.link(&b.ws.parse_face(v).unwrap()).unwrap();
        let h = reduced_homology(&link);
        let ok = h.iter().enumerate().all(|(d, g)| match d {
            1 | 3 => *g == HomologyGroup::free(1),
            _ => g.is_trivial(),
        });
        ensure(ok, format!("lk({v}): {}", summary(&h)))?;
    }
    Ok("lk(15), lk(234): H~1 = Z, H~3 = Z".into())
}

fn retraction() -> Outcome {
    let mut notes = Vec::new();
    for n in [4, 5] {
        let x = complex(n, Relation::Strong);
        let ext = verify_complementary_extensions(&x).unwrap();
        ensure(ext.exhaustive && ext.passed(), format!("{}: {} faces with empty pi'", x.name(), ext.violations))?;
        let chain = verify_pi_chain_condition(&x).unwrap();
        ensure(chain.exhaustive && chain.passed(), format!("{}: {} bad comparable pairs", x.name(), chain.violations))?;
        notes.push(format!("{}: {} faces, {} pairs", x.name(), ext.checked, chain.checked));
    }
    Ok(format!("no violations ({})", notes.join("; ")))
}

fn cross_polytopes() -> Outcome {
    for n in 4..=7 {
        let k = cross_polytope_k(gs(n)).unwrap();
        let model = Complex::cross_polytope_boundary(n as usize - 2);
        ensure(isomorphic(&k.complex().compact().0, &model).is_some(), format!("K({n}) not a cross-polytope boundary"))?;
        let h = reduced_homology(k.complex());
        ensure(is_sphere_homology(&h, n as usize - 3), format!("K({n}): {}", summary(&h)))?;
    }
    Ok("K(n) is the (n-2)-cross-polytope boundary, n = 4..7".into())
}

fn covering_machinery() -> Outcome {
    let mut notes = Vec::new();
    for n in [4, 5] {
        let x = complex(n, Relation::Weak);
        let cover = ws_covering(&x).unwrap();
        let members = 2 * (n as usize - 2);
        ensure(cover.len() == members && cover.covers_parent(), format!("{}: covering broken", x.name()))?;
        ensure(nerve(&cover) == Complex::simplex(members), format!("{}: nerve not a simplex", x.name()))?;
        let (ends, middle) = hub_vertices(gs(n));
        let hub_star = x.complex().star(&x.face_of(&[ends, middle]).unwrap()).unwrap();
        for mask in 0u32..1 << members {
            let indices: Vec<usize> = (0..members).filter(|i| mask >> i & 1 == 1).collect();
            let part = cover.intersection(&indices);
            ensure(!part.is_empty(), format!("{}: empty intersection {indices:?}", x.name()))?;
            ensure(is_acyclic(&reduced_homology(&part)), format!("{}: homology in {indices:?}", x.name()))?;
            ensure(hub_star.is_subcomplex_of(&part), format!("{}: hub star missing in {indices:?}", x.name()))?;
        }
        let mut stars = 0;
        for sigma in pair_free_index_sets(gs(n)) {
            let sc = star_cover_cone_points(&x, &sigma).unwrap();
            ensure(sc.covers, format!("{}: stars do not cover {sigma:?}", x.name()))?;
            for i in &sc.intersections {
                ensure(!i.empty && !i.cone_points.is_empty(), format!("{}: no cone point, {sigma:?} {:?}", x.name(), i.tau))?;
                stars += 1;
            }
        }
        notes.push(format!("{}: {} intersections, {} star intersections", x.name(), 1u32 << members, stars));
    }
    Ok(notes.join("; "))
}

fn property_suites() -> Outcome {
    let mask = |n: u32, b: u32| SubsetMask::from_bits(gs(n), b).unwrap();
    for n in 1..=5u32 {
        for a in 0..1u32 << n {
            for r in Relation::ALL {
                let rel = if r == Relation::Weak { Rel::Weak } else { Rel::Strong };
                ensure(is_frozen(mask(n, a), r) == common::frozen(rel, a, n), format!("frozen {a:b}"))?;
            }
            for b in 0..1u32 << n {
                let (ma, mb) = (mask(n, a), mask(n, b));
                for r in Relation::ALL {
                    let s = r.separated(ma, mb).unwrap();
                    ensure(s == r.separated(mb, ma).unwrap(), format!("symmetry {a:b} {b:b}"))?;
                    for g in GroupElement::ALL {
                        ensure(r.separated(g.act(ma), g.act(mb)).unwrap() == s, format!("{g} on {a:b} {b:b}"))?;
                    }
                }
                if Relation::Strong.separated(ma, mb).unwrap() {
                    ensure(Relation::Weak.separated(ma, mb).unwrap(), format!("ss but not ws {a:b} {b:b}"))?;
                }
            }
        }
    }
    for n in 3..=5 {
        for r in Relation::ALL {
            let x = complex(n, r);
            let c = x.complex();
            for pair in boundary_matrices(c).windows(2) {
                ensure(pair[0].mul(&pair[1]).is_zero(), format!("{}: boundary squared", x.name()))?;
            }
            let h = reduced_homology(c);
            let alt: i64 = h.iter().enumerate().map(|(d, g)| if d % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
            ensure(alt == c.euler_characteristic() - 1, format!("{}: Euler mismatch", x.name()))?;
            let faces: Vec<Face> = c.faces_by_dim().into_iter().flatten().collect();
            // every pair of faces whose union is a face: split each face's
            // vertices three ways (first only, second only, both)
            let bad = faces.par_iter().find_any(|joined| {
                let v = joined.vertices();
                let whole = c.star(joined).unwrap();
                (0..3usize.pow(v.len() as u32)).any(|mut code| {
                    let (mut s, mut t) = (Vec::new(), Vec::new());
                    for &u in v {
                        if code % 3 != 1 {
                            s.push(u);
                        }
                        if code % 3 != 0 {
                            t.push(u);
                        }
                        code /= 3;
                    }
                    if s.is_empty() || t.is_empty() {
                        return false;
                    }
                    let (s, t) = (Face::new(s), Face::new(t));
                    c.star(&s).unwrap().intersection(&c.star(&t).unwrap()) != whole
                })
            });
            ensure(bad.is_none(), format!("{}: star identity fails inside {:?}", x.name(), bad))?;
            if r == Relation::Strong && n >= 4 {
                for sigma in &faces {
                    let image = pi_prime(&x, sigma).unwrap();
                    for g in GroupElement::ALL {
                        let moved = pi_prime(&x, &x.act_on_face(g, sigma)).unwrap();
                        ensure(moved.image == x.act_on_face(g, &image.image), format!("{}: pi' not equivariant", x.name()))?;
                    }
                }
            }
        }
    }
    Ok("symmetry, ss => ws, equivariance, star identity, boundary squared, Euler, frozen form".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let b = boundaries();
    let criteria: Vec<Criterion> = vec![
        ("n = 3 complexes", Box::new(small_complexes)),
        ("n = 4 complexes", Box::new(four_vertex_pictures)),
        ("weak complexes acyclic", Box::new(weak_side_acyclic)),
        ("strong complexes are homology spheres", Box::new(strong_side_spheres)),
        ("purity", Box::new(purity)),
        ("boundary homology at n = 5", Box::new(|| boundary_homology(&b))),
        ("edge link in the weak boundary", Box::new(|| edge_link(&b))),
        ("triangle link in the strong boundary", Box::new(|| triangle_link(&b))),
        ("vertex links in the weak boundary", Box::new(|| vertex_links(&b))),
        ("retraction map conditions", Box::new(retraction)),
        ("cross-polytope subcomplex", Box::new(cross_polytopes)),
        ("deletion covering", Box::new(covering_machinery)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (status, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {name}: {status} [{:.2?}] {detail}", i + 1, t.elapsed());
    }
    println!("acceptance: {} PASS, {failed} FAIL in {:.2?}", criteria.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
