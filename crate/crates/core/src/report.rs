//! Check reports and the full reproduction run.
//!
//! A [`Report`] is an ordered list of [`Check`]s. Its text and JSON forms
//! carry no timings, so repeated runs produce identical bytes.

use std::fmt;

use serde::Serialize;

use crate::homology::{betti_rational, reduced_homology, HomologyGroup};
use crate::scomplex::{greedy_collapse, nerve, CollapseStatus, Complex};
use crate::sepcx::{
    boundary_study, build, cross_polytope_k, pair_free_index_sets, star_cover_cone_points, verify_complementary_extensions,
    verify_equivariance, verify_pi_chain_condition, verify_pi_properties, verify_ws_cover_intersections, ws_covering,
    SeparationComplex, SepcxError, Sweep,
};
use crate::sepsets::{GroundSize, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A contractibility certificate was attempted and not found.
    Inconclusive,
    /// Not run (gated behind a flag or out of range).
    Skipped,
    /// Exploratory output without a reference value.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Skipped => "SKIPPED",
            Status::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub scope: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    /// PASS iff `computed == expected`.
    pub fn compare(check: impl Into<String>, scope: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Check { check: check.into(), scope: scope.into(), expected, computed, status, witness: None }
    }

    pub fn with_status(
        check: impl Into<String>,
        scope: &str,
        expected: impl ToString,
        computed: impl ToString,
        status: Status,
    ) -> Self {
        Check {
            check: check.into(),
            scope: scope.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status,
            witness: None,
        }
    }

    pub fn skipped(check: impl Into<String>, scope: &str, reason: &str) -> Self {
        Check::with_status(check, scope, "-", reason, Status::Skipped)
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        let w = w.into();
        self.witness = (!w.is_empty()).then_some(w);
        self
    }

    /// `name = computed : STATUS`, plus the expectation on failure.
    pub fn line(&self) -> String {
        let mut s = format!("{} = {} : {}", self.check, self.computed, self.status);
        if self.status == Status::Fail {
            s.push_str(&format!("  (expected {})", self.expected));
        }
        s
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn find(&self, check: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} PASS, {} FAIL, {} INCONCLUSIVE, {} SKIPPED, {} INFO",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive),
            self.count(Status::Skipped),
            self.count(Status::Info)
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.line());
            out.push('\n');
            if let Some(w) = &c.witness {
                if c.status != Status::Pass {
                    out.push_str(&format!("    witness: {w}\n"));
                }
            }
        }
        out.push_str(&format!("summary: {}\n", self.summary()));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

/// Nonzero groups as `H~1 = Z, H~3 = Z^9`; `acyclic` when all vanish and
/// `empty` for the empty complex.
pub fn homology_summary(groups: &[HomologyGroup]) -> String {
    if groups.is_empty() {
        return "empty".into();
    }
    let parts: Vec<String> =
        groups.iter().enumerate().filter(|(_, g)| !g.is_trivial()).map(|(d, g)| format!("H~{d} = {g}")).collect();
    if parts.is_empty() {
        "acyclic".into()
    } else {
        parts.join(", ")
    }
}

pub fn format_f_vector(f: &[usize]) -> String {
    let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sweep_check(name: String, scope: &str, sweep: &Sweep) -> Check {
    let mode = if sweep.exhaustive { "exhaustive" } else { "sampled" };
    Check::compare(name, scope, 0, sweep.violations)
        .witness(format!("{} {} checks; {}", sweep.checked, mode, sweep.witnesses.join("; ")).trim_end_matches("; ").to_string())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone)]
pub struct ReproduceOptions {
    pub nmax: u32,
    pub cap: u32,
    /// Run the `n = 6` computations.
    pub allow_heavy: bool,
    /// Also compute the ws boundary at `n = 6`.
    pub force_ws_boundary: bool,
}

impl ReproduceOptions {
    pub fn new(nmax: u32) -> Self {
        ReproduceOptions { nmax, cap: crate::sepcx::DEFAULT_CAP, allow_heavy: false, force_ws_boundary: false }
    }
}

/// Largest `n` at which homology of the whole complexes is attempted.
const HOMOLOGY_LIMIT: u32 = 6;
/// Largest `n` for the exhaustive face sweeps and covering checks.
const SWEEP_LIMIT: u32 = 5;
/// `K(n)` is checked up to at least this `n` (within the cap).
const CROSS_POLYTOPE_MIN_TOP: u32 = 7;

struct Run<'a> {
    opts: &'a ReproduceOptions,
    progress: &'a mut dyn FnMut(&str),
    report: Report,
    cache: std::collections::BTreeMap<(u32, Relation), SeparationComplex>,
}

impl Run<'_> {
    fn complex(&mut self, n: u32, relation: Relation) -> Result<SeparationComplex, SepcxError> {
        if let Some(x) = self.cache.get(&(n, relation)) {
            return Ok(x.clone());
        }
        let x = build(GroundSize::new(n)?, relation, self.opts.cap)?;
        self.cache.insert((n, relation), x.clone());
        Ok(x)
    }

    fn heavy_gate(&mut self, n: u32, check: String, scope: &str) -> bool {
        if n >= 6 && !self.opts.allow_heavy {
            self.report.push(Check::skipped(check, scope, "needs --allow-heavy"));
            return false;
        }
        true
    }

    fn note(&mut self, msg: &str) {
        (self.progress)(msg);
    }
}

/// Runs every check in a fixed order for `n` up to `opts.nmax`.
pub fn reproduce_paper(opts: &ReproduceOptions, progress: &mut dyn FnMut(&str)) -> Result<Report, SepcxError> {
    if opts.nmax > opts.cap {
        return Err(SepcxError::CapExceeded { n: opts.nmax, cap: opts.cap });
    }
    if opts.nmax < 3 {
        return Err(SepcxError::Precondition(format!("nmax must be at least 3, got {}", opts.nmax)));
    }
    let mut run = Run { opts, progress, report: Report::default(), cache: Default::default() };
    small_complexes(&mut run)?;
    contractible_side(&mut run)?;
    sphere_side(&mut run)?;
    purity(&mut run)?;
    cross_polytopes(&mut run)?;
    retraction(&mut run)?;
    symmetry(&mut run)?;
    coverings(&mut run)?;
    boundaries(&mut run)?;
    Ok(run.report)
}

fn small_complexes(run: &mut Run<'_>) -> Result<(), SepcxError> {
    run.note("small complexes");
    for n in 1..=2 {
        for r in Relation::ALL {
            let x = run.complex(n, r)?;
            run.report.push(Check::compare(format!("faces({})", x.name()), &x.name(), 0, x.complex().vertex_count()));
        }
    }
    for r in Relation::ALL {
        let x = run.complex(3, r)?;
        let names: Vec<String> = x.complex().vertices().iter().map(|&v| x.label(v).to_string()).collect();
        run.report.push(Check::compare(format!("vertices({})", x.name()), &x.name(), "2,13", names.join(",")));
        run.report.push(Check::compare(format!("edges({})", x.name()), &x.name(), 0, x.complex().skeleton_graph().edge_count()));
    }
    for n in 3..=run.opts.nmax {
        for r in Relation::ALL {
            let x = run.complex(n, r)?;
            let expected = (1u64 << n) - 2 * n as u64;
            run.report.push(Check::compare(
                format!("vertex count({})", x.name()),
                &x.name(),
                expected,
                x.complex().vertex_count(),
            ));
        }
    }
    if run.opts.nmax >= 4 {
        let ss = run.complex(4, Relation::Strong)?;
        let ws = run.complex(4, Relation::Weak)?;
        run.report.push(Check::compare("f(ss4)", "ss4", "(8,16,8)", format_f_vector(&ss.complex().f_vector())));
        run.report.push(Check::compare("f(ws4)", "ws4", "(8,17,10)", format_f_vector(&ws.complex().f_vector())));
        let extra: Vec<String> = ws
            .complex()
            .faces_of_dim(1)
            .into_iter()
            .filter(|e| !ss.complex().contains_face(e))
            .map(|e| format!("{{{}}}", ws.format_face(&e)))
            .collect();
        run.report.push(Check::compare("edges(ws4) not in ss4", "ws4", "{23,14}", extra.join(" ")));
    }
    for n in 4..=run.opts.nmax.min(HOMOLOGY_LIMIT) {
        let ss = run.complex(n, Relation::Strong)?;
        let ws = run.complex(n, Relation::Weak)?;
        let g = ws.complex().skeleton_graph();
        let contained = ss.complex().faces_of_dim(1).iter().all(|e| g.has_edge(e.vertices()[0], e.vertices()[1]));
        run.report.push(Check::compare(format!("edges(ss{n}) within edges(ws{n})"), &format!("n={n}"), "yes", yes_no(contained)));
    }
    Ok(())
}

fn homology_check(name: String, scope: &str, expected: String, x: &Complex) -> Check {
    let h = reduced_homology(x);
    // rational Betti numbers and the Euler characteristic as a second route
    let betti: Vec<usize> = betti_rational(x);
    let ranks: Vec<usize> = h.iter().map(|g| g.rank).collect();
    let euler: i64 = betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>() + 1;
    let consistent = betti == ranks && euler == x.euler_characteristic();
    let mut c = Check::compare(name, scope, expected, homology_summary(&h));
    if !consistent {
        c.status = Status::Fail;
        c = c.witness(format!("rational Betti {betti:?} or Euler characteristic disagree with {ranks:?}"));
    }
    c
}

fn contractible_side(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 4..=run.opts.nmax.min(HOMOLOGY_LIMIT) {
        let scope = format!("ws{n}");
        if !run.heavy_gate(n, format!("homology({scope})"), &scope) {
            continue;
        }
        run.note(&format!("homology of {scope}"));
        let x = run.complex(n, Relation::Weak)?;
        run.report.push(homology_check(format!("homology({scope})"), &scope, "acyclic".into(), x.complex()));
        if n <= SWEEP_LIMIT {
            let outcome = greedy_collapse(x.complex());
            let computed = match outcome.status {
                CollapseStatus::CollapsedToPoint => "point".to_string(),
                CollapseStatus::Stuck => format!("stuck with {} faces", outcome.remaining_faces),
            };
            let status = if outcome.collapsed() { Status::Pass } else { Status::Inconclusive };
            run.report.push(
                Check::with_status(format!("collapse({scope})"), &scope, "point", computed, status)
                    .witness(format!("{} elementary collapses", outcome.steps)),
            );
        }
    }
    Ok(())
}

fn sphere_side(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 4..=run.opts.nmax.min(HOMOLOGY_LIMIT) {
        let scope = format!("ss{n}");
        if !run.heavy_gate(n, format!("homology({scope})"), &scope) {
            continue;
        }
        run.note(&format!("homology of {scope}"));
        let x = run.complex(n, Relation::Strong)?;
        run.report.push(homology_check(format!("homology({scope})"), &scope, format!("H~{} = Z", n - 3), x.complex()));
    }
    Ok(())
}

fn purity(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 4..=run.opts.nmax.min(HOMOLOGY_LIMIT) {
        for r in Relation::ALL {
            let x = run.complex(n, r)?;
            let scope = x.name();
            let dims: std::collections::BTreeSet<usize> = x.complex().facets().iter().map(|f| f.len() - 1).collect();
            let computed = if dims.len() == 1 {
                format!("pure of dimension {}", x.complex().dimension())
            } else {
                format!("facet dimensions {dims:?}")
            };
            let expected = format!("pure of dimension {}", binomial(n as u64 - 1, 2) - 1);
            run.report.push(Check::compare(format!("purity({scope})"), &scope, expected, computed));
        }
    }
    Ok(())
}

fn cross_polytopes(run: &mut Run<'_>) -> Result<(), SepcxError> {
    let top = run.opts.nmax.max(CROSS_POLYTOPE_MIN_TOP).min(run.opts.cap);
    for n in 4..=top {
        run.note(&format!("cross-polytope K({n})"));
        let k = cross_polytope_k(GroundSize::new(n)?)?;
        let scope = format!("K({n})");
        run.report.push(Check::compare(
            format!("K({n}) isomorphic to the {}-cross-polytope boundary", n - 2),
            &scope,
            "yes",
            yes_no(k.has_cross_polytope_graph() && k.model_isomorphism().is_some()),
        ));
        run.report.push(homology_check(format!("homology(K({n}))"), &scope, format!("H~{} = Z", n - 3), k.complex()));
    }
    Ok(())
}

fn retraction(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 4..=run.opts.nmax.min(HOMOLOGY_LIMIT) {
        let scope = format!("ss{n}");
        if !run.heavy_gate(n, format!("faces of {scope} with pi' empty"), &scope) {
            continue;
        }
        run.note(&format!("retraction data on {scope}"));
        let x = run.complex(n, Relation::Strong)?;
        let ext = verify_complementary_extensions(&x)?;
        run.report.push(sweep_check(format!("faces of {scope} with pi' empty"), &scope, &ext));
        let chain = verify_pi_chain_condition(&x)?;
        run.report.push(sweep_check(format!("comparable pairs of {scope} with a complementary pair in pi'"), &scope, &chain));
        let props = verify_pi_properties(&x)?;
        run.report.push(sweep_check(format!("faces of {scope} whose pi' is not a complement-free face of K"), &scope, &props.image_is_k_face));
        run.report.push(sweep_check(format!("faces of {scope} with sigma + pi'(sigma) not a face"), &scope, &props.carrier_is_face));
        run.report.push(sweep_check(format!("faces of K({n}) not fixed by pi'"), &scope, &props.identity_on_k));
    }
    Ok(())
}

fn symmetry(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 3..=run.opts.nmax.min(SWEEP_LIMIT) {
        for r in Relation::ALL {
            let x = run.complex(n, r)?;
            let scope = x.name();
            for e in verify_equivariance(&x)? {
                let mut parts = vec![format!("facets {}", if e.facets_preserved { "preserved" } else { "moved" })];
                if let Some(k) = e.k_preserved {
                    parts.push(format!("K {}", if k { "preserved" } else { "moved" }));
                }
                if let Some(s) = &e.pi_equivariant {
                    parts.push(format!("pi' mismatches {}", s.violations));
                }
                let mut expected = vec!["facets preserved".to_string()];
                if e.k_preserved.is_some() {
                    expected.push("K preserved".into());
                }
                if e.pi_equivariant.is_some() {
                    expected.push("pi' mismatches 0".into());
                }
                run.report.push(Check::compare(
                    format!("symmetry {} on {scope}", e.element),
                    &scope,
                    expected.join(", "),
                    parts.join(", "),
                ));
            }
        }
    }
    Ok(())
}

fn coverings(run: &mut Run<'_>) -> Result<(), SepcxError> {
    for n in 4..=run.opts.nmax.min(SWEEP_LIMIT) {
        run.note(&format!("deletion covering of ws{n}"));
        let x = run.complex(n, Relation::Weak)?;
        let scope = x.name();
        let cover = ws_covering(&x)?;
        let m = cover.len();
        run.report.push(Check::compare(format!("deletion covering of {scope} covers it"), &scope, "yes", yes_no(cover.covers_parent())));
        let nv = nerve(&cover);
        let is_simplex = nv == Complex::simplex(m);
        run.report.push(Check::compare(
            format!("nerve of the deletion covering of {scope}"),
            &scope,
            format!("simplex on {m} vertices"),
            if is_simplex { format!("simplex on {m} vertices") } else { format!("facets {:?}", nv.facets()) },
        ));
        let sweep = verify_ws_cover_intersections(&x)?;
        let total = sweep.len();
        let count = |f: &dyn Fn(&crate::sepcx::CoverIntersection) -> bool| sweep.iter().filter(|c| f(c)).count();
        let first_bad = |f: &dyn Fn(&crate::sepcx::CoverIntersection) -> bool| {
            sweep.iter().find(|c| !f(c)).map(|c| format!("indices {:?}", c.indices)).unwrap_or_default()
        };
        let all = format!("{total}/{total}");
        for (label, pred) in [
            ("nonempty", &(|c: &crate::sepcx::CoverIntersection| c.nonempty()) as &dyn Fn(&_) -> bool),
            ("acyclic", &|c: &crate::sepcx::CoverIntersection| c.homology_trivial),
            ("containing the star of the hub edge", &|c: &crate::sepcx::CoverIntersection| c.contains_hub_star),
        ] {
            run.report.push(
                Check::compare(format!("{label} covering intersections of {scope}"), &scope, &all, format!("{}/{total}", count(pred)))
                    .witness(first_bad(pred)),
            );
        }
        let collapsed = count(&|c| c.collapse == CollapseStatus::CollapsedToPoint);
        let status = if collapsed == total { Status::Pass } else { Status::Inconclusive };
        run.report.push(
            Check::with_status(
                format!("collapsible covering intersections of {scope}"),
                &scope,
                &all,
                format!("{collapsed}/{total}"),
                status,
            )
            .witness(first_bad(&|c| c.collapse == CollapseStatus::CollapsedToPoint)),
        );

        let sets = pair_free_index_sets(x.n());
        let (mut covers, mut inter, mut inter_ok, mut pred, mut pred_ok) = (0, 0, 0, 0, 0);
        let mut witness = String::new();
        for s in &sets {
            let sc = star_cover_cone_points(&x, s)?;
            covers += usize::from(sc.covers);
            for i in &sc.intersections {
                inter += 1;
                let has_cone = !i.empty && !i.cone_points.is_empty();
                inter_ok += usize::from(has_cone);
                for p in &i.predictions {
                    pred += 1;
                    pred_ok += usize::from(p.holds);
                    if !p.holds && witness.is_empty() {
                        witness = format!("sigma {:?}, tau {:?}: {:?}", s, i.tau, p.prediction);
                    }
                }
                if !has_cone && witness.is_empty() {
                    witness = format!("sigma {:?}, tau {:?} has no cone point", s, i.tau);
                }
            }
        }
        run.report.push(Check::compare(
            format!("star covers of pair-free intersections of {scope}"),
            &scope,
            format!("{}/{}", sets.len(), sets.len()),
            format!("{covers}/{}", sets.len()),
        ));
        run.report.push(
            Check::compare(
                format!("star-cover intersections of {scope} with a cone point"),
                &scope,
                format!("{inter}/{inter}"),
                format!("{inter_ok}/{inter}"),
            )
            .witness(witness.clone()),
        );
        run.report.push(
            Check::compare(
                format!("predicted cone points confirmed on {scope}"),
                &scope,
                format!("{pred}/{pred}"),
                format!("{pred_ok}/{pred}"),
            )
            .witness(witness),
        );
    }
    Ok(())
}

fn per_degree(report: &mut Report, what: &str, scope: &str, expected: &[(usize, &str)], h: &[HomologyGroup]) {
    for (d, g) in h.iter().enumerate() {
        let exp = expected.iter().find(|(e, _)| *e == d).map_or("0", |(_, s)| *s);
        report.push(Check::compare(format!("H~{d}({what})"), scope, exp, g));
    }
}

fn boundaries(run: &mut Run<'_>) -> Result<(), SepcxError> {
    if run.opts.nmax < 5 {
        return Ok(());
    }
    run.note("boundary complexes at n = 5");
    let ss = run.complex(5, Relation::Strong)?;
    let ws = run.complex(5, Relation::Weak)?;
    let study = boundary_study(&ss, &ws)?;
    let r = &mut run.report;
    per_degree(r, "boundary ss5", "ss5", &[(2, "Z"), (3, "Z^9"), (4, "Z")], &study.ss_boundary);
    r.push(Check::compare(
        "boundary ss5 torsion-free",
        "ss5",
        "yes",
        yes_no(study.ss_boundary.iter().all(HomologyGroup::is_free)),
    ));
    per_degree(r, "boundary ws5", "ws5", &[(2, "Z"), (4, "Z")], &study.ws_boundary);
    for (v, h) in &study.ws_vertex_links {
        r.push(Check::compare(format!("homology(lk({v}) in boundary ws5)"), "ws5", "H~1 = Z, H~3 = Z", homology_summary(h)));
    }
    let e = &study.ws_edge_link;
    r.push(Check::compare("f(lk(15,234) in boundary ws5)", "ws5", "(12,24,16)", format_f_vector(&e.f_vector)));
    r.push(Check::compare("components(lk(15,234) in boundary ws5)", "ws5", 2, e.components));
    r.push(Check::compare("each component of lk(15,234) is an octahedron boundary", "ws5", "yes", yes_no(e.all_match_model)));
    let t = &study.ss_triangle_link;
    r.push(Check::compare("f(lk(2,23,234) in boundary ss5)", "ss5", "(8,8)", format_f_vector(&t.f_vector)));
    r.push(Check::compare("components(lk(2,23,234) in boundary ss5)", "ss5", 2, t.components));
    r.push(Check::compare("each component of lk(2,23,234) is a 4-cycle", "ss5", "yes", yes_no(t.all_match_model)));
    r.push(Check::compare(
        "homology(lk(2,23,234) in boundary ss5)",
        "ss5",
        "H~0 = Z, H~1 = Z^2",
        homology_summary(&study.ss_triangle_link_homology),
    ));

    if run.opts.nmax >= 6 {
        for rel in Relation::ALL {
            let x = run.complex(6, rel)?;
            let scope = x.name();
            let name = format!("homology(boundary {scope})");
            if !run.opts.allow_heavy {
                run.report.push(Check::skipped(name, &scope, "needs --allow-heavy"));
                continue;
            }
            if rel == Relation::Weak && !run.opts.force_ws_boundary {
                run.report.push(Check::skipped(name, &scope, "needs --force-ws-boundary"));
                continue;
            }
            run.note(&format!("boundary of {scope}"));
            let b = x.complex().boundary_subcomplex()?;
            let h = reduced_homology(&b);
            run.report.push(
                Check::with_status(name, &scope, "-", homology_summary(&h), Status::Info)
                    .witness(format!("f-vector {}", format_f_vector(&b.f_vector()))),
            );
        }
    }
    Ok(())
}
