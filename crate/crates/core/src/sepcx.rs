//! The complexes `Δ̂_ws(n)` and `Δ̂_ss(n)` and checks on them.
//!
//! Vertices of both complexes are the non-frozen subsets of `[n]` in numeric
//! mask order, so vertex indices agree between the two relations and with
//! the cross-polytope subcomplex `K`.
//!
//! `K` is spanned by the singletons `k` and their complements `[n]∖k` for
//! `k = 2..n-1`. Its vertices are addressed by *slots*: slot `2i` is the
//! singleton `i + 2`, slot `2i + 1` its complement, so a face of `K` is a
//! bitmask over slots and a complementary pair is two adjacent slots.
//!
//! The covering of `Δ̂_ws(n)` by deletions uses the same numbering: member
//! `2(k - 2)` is `dl(k)` and member `2(k - 2) + 1` is `dl([n]∖k)`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::homology::{is_acyclic, reduced_homology, HomologyGroup};
use crate::scomplex::{
    clique_complex, clique_complex_on, greedy_collapse, isomorphic, CollapseStatus, Complex, ComplexError, ComplexFile,
    Covering, Face, Graph,
};
use crate::sepsets::{
    is_frozen, separation_graph, GroundSize, GroupElement, Relation, SetError, SubsetMask,
};

/// Default largest `n` the builders accept.
pub const DEFAULT_CAP: u32 = 7;

/// Largest `n` for which the comparable-pair sweep runs exhaustively.
pub const EXHAUSTIVE_CHAIN_LIMIT: u32 = 5;

/// Faces sampled (together with all their subfaces) above that limit.
pub const CHAIN_SAMPLE_FACES: usize = 4000;

const SAMPLE_SEED: u64 = 0x5e9a_2a7e;

/// At most this many witnesses are kept per sweep.
const WITNESS_LIMIT: usize = 8;

#[derive(Debug, Error)]
pub enum SepcxError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Precondition(String),
}

/// `Δ̂_ws(n)` or `Δ̂_ss(n)` with its vertex table.
#[derive(Debug, Clone)]
pub struct SeparationComplex {
    n: GroundSize,
    relation: Relation,
    labels: Vec<SubsetMask>,
    complex: Complex,
}

/// Clique complex of the separation graph on the non-frozen subsets of `[n]`.
pub fn build(n: GroundSize, relation: Relation, cap: u32) -> Result<SeparationComplex, SepcxError> {
    if n.get() > cap {
        return Err(SepcxError::CapExceeded { n: n.get(), cap });
    }
    let g = separation_graph(n, relation);
    let graph = Graph::from_edges(g.vertex_count(), g.edges.iter().copied());
    Ok(SeparationComplex { n, relation, labels: g.vertices, complex: clique_complex(&graph) })
}

impl SeparationComplex {
    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn labels(&self) -> &[SubsetMask] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> SubsetMask {
        self.labels[v]
    }

    /// Short name such as `ss5`.
    pub fn name(&self) -> String {
        format!("{}{}", self.relation, self.n)
    }

    pub fn vertex_of(&self, s: SubsetMask) -> Option<usize> {
        self.labels.binary_search(&s).ok()
    }

    fn require_vertex(&self, s: SubsetMask) -> Result<usize, SepcxError> {
        self.vertex_of(s)
            .ok_or_else(|| SepcxError::Precondition(format!("{s} is not a vertex of {}", self.name())))
    }

    pub fn face_of(&self, subsets: &[SubsetMask]) -> Result<Face, SepcxError> {
        Ok(Face::new(subsets.iter().map(|&s| self.require_vertex(s)).collect::<Result<_, _>>()?))
    }

    /// Separator between subsets when a face is written out.
    pub fn face_separator(&self) -> char {
        if self.n.get() <= 9 {
            ','
        } else {
            ';'
        }
    }

    /// Parses `"15,234"` (or `"1,5;2,3,4"` when `n > 9`) into a vertex set.
    /// Whether it is a face is not checked.
    pub fn parse_face(&self, text: &str) -> Result<Face, SepcxError> {
        let parts: Vec<SubsetMask> = text
            .split(self.face_separator())
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| SubsetMask::parse(self.n, p))
            .collect::<Result<_, _>>()?;
        if parts.is_empty() {
            return Err(SepcxError::Precondition(format!("no vertices in {text:?}")));
        }
        self.face_of(&parts)
    }

    pub fn format_face(&self, face: &Face) -> String {
        if face.is_empty() {
            return "{}".into();
        }
        let sep = self.face_separator().to_string();
        face.vertices().iter().map(|&v| self.labels[v].to_string()).collect::<Vec<_>>().join(&sep)
    }

    /// `perm[v]` is the vertex `g · v`.
    pub fn vertex_permutation(&self, g: GroupElement) -> Vec<usize> {
        self.labels
            .iter()
            .map(|&s| self.vertex_of(g.act(s)).expect("the group preserves frozen sets"))
            .collect()
    }

    pub fn act_on_face(&self, g: GroupElement, face: &Face) -> Face {
        Face::new(face.vertices().iter().map(|&v| self.vertex_of(g.act(self.labels[v])).expect("non-frozen")).collect())
    }

    pub fn to_file(&self) -> ComplexFile {
        self.subcomplex_file(&self.complex)
    }

    /// A subcomplex in the on-disk format, with this complex's vertex table.
    pub fn subcomplex_file(&self, sub: &Complex) -> ComplexFile {
        ComplexFile::new(
            Some(self.n.get()),
            Some(self.relation),
            self.labels.iter().map(ToString::to_string).collect(),
            sub,
        )
    }
}

fn witness_push(witnesses: &mut Vec<String>, w: impl FnOnce() -> String) {
    if witnesses.len() < WITNESS_LIMIT {
        witnesses.push(w());
    }
}

/// Outcome of a sweep that counts violations of some property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub checked: usize,
    pub violations: usize,
    pub exhaustive: bool,
    pub witnesses: Vec<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// The induced subcomplex on the singletons `2..n-1` and their complements.
#[derive(Debug, Clone)]
pub struct CrossPolytopeSubcomplex {
    n: GroundSize,
    complex: Complex,
    /// `(k, [n]∖k)` as vertex indices, for `k = 2..n-1`.
    pairs: Vec<(usize, usize)>,
    slot_of: HashMap<usize, usize>,
}

/// Builds `K(n)`; needs `n >= 4`. Vertex indices are those of `build(n, ·)`.
pub fn cross_polytope_k(n: GroundSize) -> Result<CrossPolytopeSubcomplex, SepcxError> {
    if n.get() < 4 {
        return Err(SepcxError::Precondition(format!("K needs n >= 4, got {n}")));
    }
    let g = separation_graph(n, Relation::Strong);
    let index = |s: SubsetMask| g.index_of(s).expect("singletons and their complements are not frozen");
    let pairs: Vec<(usize, usize)> = (2..n.get())
        .map(|k| {
            let s = SubsetMask::singleton(n, k).expect("k in range");
            (index(s), index(s.complement()))
        })
        .collect();
    let support: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let graph = Graph::from_edges(g.vertex_count(), g.edges.iter().copied());
    let slot_of = support.iter().enumerate().map(|(slot, &v)| (v, slot)).collect();
    Ok(CrossPolytopeSubcomplex { n, complex: clique_complex_on(&graph, &support), pairs, slot_of })
}

impl CrossPolytopeSubcomplex {
    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Vertex indices in slot order.
    pub fn vertices(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn slot(&self, v: usize) -> Option<usize> {
        self.slot_of.get(&v).copied()
    }

    pub fn slot_vertex(&self, slot: usize) -> usize {
        let (a, b) = self.pairs[slot / 2];
        if slot.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn face_from_slots(&self, slots: u32) -> Face {
        Face::new((0..2 * self.pairs.len()).filter(|s| slots >> s & 1 == 1).map(|s| self.slot_vertex(s)).collect())
    }

    /// Slot mask of a vertex set lying in `K`; `None` if some vertex is outside.
    pub fn slots_of(&self, face: &Face) -> Option<u32> {
        face.vertices().iter().try_fold(0u32, |acc, &v| self.slot(v).map(|s| acc | 1 << s))
    }

    /// Whether each pair is a non-edge and every other pair of vertices is an edge.
    pub fn has_cross_polytope_graph(&self) -> bool {
        let g = self.complex.skeleton_graph();
        let vs = self.vertices();
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..].iter().enumerate().all(|(j, &w)| {
                let antipodal = i % 2 == 0 && j == 0;
                g.has_edge(u, w) != antipodal
            })
        })
    }

    /// An isomorphism onto the abstract `(n-2)`-cross-polytope boundary, as
    /// `(vertex of K, vertex of the model)` pairs.
    pub fn model_isomorphism(&self) -> Option<Vec<(usize, usize)>> {
        let (compact, originals) = self.complex.compact();
        let model = Complex::cross_polytope_boundary(self.pairs.len());
        isomorphic(&compact, &model).map(|m| m.into_iter().map(|(a, b)| (originals[a], b)).collect())
    }
}

/// Whether a slot mask contains a singleton together with its complement.
pub fn has_complementary_pair(slots: u32) -> bool {
    slots & (slots >> 1) & 0x5555_5555 != 0
}

/// `π′(σ)`: the vertices `v` of `K` with `σ ∪ {v}` a face and `σ ∪ {α(v)}`
/// not a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiImage {
    pub source: Face,
    pub image: Face,
    /// `image` as a slot mask of `K`.
    pub slots: u32,
}

/// Evaluates `π′` on faces of `Δ̂_ss(n)`, `n >= 4`.
#[derive(Debug, Clone)]
pub struct PiMap<'a> {
    complex: &'a SeparationComplex,
    k: CrossPolytopeSubcomplex,
}

impl<'a> PiMap<'a> {
    pub fn new(complex: &'a SeparationComplex) -> Result<Self, SepcxError> {
        if complex.relation != Relation::Strong {
            return Err(SepcxError::Precondition("the retraction data is defined on the ss complex".into()));
        }
        Ok(PiMap { complex, k: cross_polytope_k(complex.n)? })
    }

    pub fn k(&self) -> &CrossPolytopeSubcomplex {
        &self.k
    }

    /// Slot mask of `π′(σ)`; `σ` must be a face.
    pub fn slots(&self, sigma: &Face) -> u32 {
        let x = &self.complex.complex;
        let mut out = 0u32;
        for (i, &(a, b)) in self.k.pairs.iter().enumerate() {
            let with_a = x.contains_face(&sigma.with_vertex(a));
            let with_b = x.contains_face(&sigma.with_vertex(b));
            if with_a && !with_b {
                out |= 1 << (2 * i);
            }
            if with_b && !with_a {
                out |= 1 << (2 * i + 1);
            }
        }
        out
    }

    pub fn image(&self, sigma: &Face) -> Result<PiImage, SepcxError> {
        if !self.complex.complex.contains_face(sigma) {
            return Err(ComplexError::NotAFace(sigma.clone()).into());
        }
        let slots = self.slots(sigma);
        Ok(PiImage { source: sigma.clone(), image: self.k.face_from_slots(slots), slots })
    }
}

/// `π′(σ)` for a single face.
pub fn pi_prime(x: &SeparationComplex, sigma: &Face) -> Result<PiImage, SepcxError> {
    PiMap::new(x)?.image(sigma)
}

fn nonempty_faces(x: &Complex) -> Vec<Face> {
    x.faces_by_dim().into_iter().flatten().collect()
}

fn require_k_range(x: &SeparationComplex) -> Result<(), SepcxError> {
    if x.relation != Relation::Strong || x.n.get() < 4 {
        return Err(SepcxError::Precondition(format!(
            "needs the ss complex with n >= 4, got {}",
            x.name()
        )));
    }
    Ok(())
}

/// Counts nonempty faces `σ` for which every `k = 2..n-1` extends to both
/// `σ ∪ {k}` and `σ ∪ {[n]∖k}` or to neither (equivalently, `π′(σ)` empty).
pub fn verify_complementary_extensions(x: &SeparationComplex) -> Result<Sweep, SepcxError> {
    require_k_range(x)?;
    let pi = PiMap::new(x)?;
    let faces = nonempty_faces(&x.complex);
    let bad: Vec<&Face> = faces.par_iter().filter(|f| pi.slots(f) == 0).collect();
    let mut witnesses = Vec::new();
    for f in &bad {
        witness_push(&mut witnesses, || x.format_face(f));
    }
    Ok(Sweep { checked: faces.len(), violations: bad.len(), exhaustive: true, witnesses })
}

fn pi_table(pi: &PiMap<'_>, faces: &[Face]) -> HashMap<Face, u32> {
    faces.par_iter().map(|f| (f.clone(), pi.slots(f))).collect()
}

fn for_each_nonempty_subface(face: &Face, mut visit: impl FnMut(Face)) {
    let vs = face.vertices();
    for mask in 1u64..(1u64 << vs.len()) {
        visit(Face::new(vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()));
    }
}

/// For comparable nonempty faces `σ ⊆ σ′`, counts pairs whose images
/// `π′(σ) ∪ π′(σ′)` contain a complementary pair. A chain of faces has a
/// complementary pair in its union of images iff two of its members do, and
/// two members of a chain are comparable, so comparable pairs suffice.
///
/// Exhaustive for `n <= EXHAUSTIVE_CHAIN_LIMIT`; above that, a seeded sample
/// of `CHAIN_SAMPLE_FACES` faces `σ′` is checked against all their subfaces.
pub fn verify_pi_chain_condition(x: &SeparationComplex) -> Result<Sweep, SepcxError> {
    require_k_range(x)?;
    let pi = PiMap::new(x)?;
    let faces = nonempty_faces(&x.complex);
    let exhaustive = x.n.get() <= EXHAUSTIVE_CHAIN_LIMIT;
    let tops: Vec<&Face> = if exhaustive {
        faces.iter().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut picked: Vec<&Face> = faces.choose_multiple(&mut rng, CHAIN_SAMPLE_FACES).collect();
        picked.sort();
        picked
    };
    let table = if exhaustive { pi_table(&pi, &faces) } else { HashMap::new() };
    let lookup = |f: &Face| table.get(f).copied().unwrap_or_else(|| pi.slots(f));
    let results: Vec<(usize, Vec<String>, usize)> = tops
        .par_iter()
        .map(|top| {
            let top_slots = lookup(top);
            let (mut checked, mut bad, mut wit) = (0usize, 0usize, Vec::new());
            for_each_nonempty_subface(top, |sub| {
                checked += 1;
                if has_complementary_pair(lookup(&sub) | top_slots) {
                    bad += 1;
                    witness_push(&mut wit, || format!("{} within {}", x.format_face(&sub), x.format_face(top)));
                }
            });
            (checked, wit, bad)
        })
        .collect();
    let mut sweep = Sweep { checked: 0, violations: 0, exhaustive, witnesses: Vec::new() };
    for (checked, wit, bad) in results {
        sweep.checked += checked;
        sweep.violations += bad;
        for w in wit {
            witness_push(&mut sweep.witnesses, || w);
        }
    }
    Ok(sweep)
}

/// Per-face properties of `π′`, exhaustive over nonempty faces:
/// the image is a nonempty, complement-free face of `K`; `σ ∪ π′(σ)` is a face;
/// and `π′` is the identity on faces of `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiProperties {
    pub image_is_k_face: Sweep,
    pub carrier_is_face: Sweep,
    pub identity_on_k: Sweep,
}

pub fn verify_pi_properties(x: &SeparationComplex) -> Result<PiProperties, SepcxError> {
    require_k_range(x)?;
    let pi = PiMap::new(x)?;
    let faces = nonempty_faces(&x.complex);
    let k = pi.k();
    let mut image = Sweep { checked: 0, violations: 0, exhaustive: true, witnesses: Vec::new() };
    let mut carrier = image.clone();
    let mut identity = image.clone();
    let images: Vec<PiImage> = faces.par_iter().map(|f| pi.image(f).expect("listed faces are faces")).collect();
    for p in &images {
        image.checked += 1;
        if p.slots == 0 || has_complementary_pair(p.slots) || !k.complex().contains_face(&p.image) {
            image.violations += 1;
            witness_push(&mut image.witnesses, || x.format_face(&p.source));
        }
        carrier.checked += 1;
        if !x.complex.contains_face(&p.source.union(&p.image)) {
            carrier.violations += 1;
            witness_push(&mut carrier.witnesses, || x.format_face(&p.source));
        }
        if k.slots_of(&p.source).is_some() {
            identity.checked += 1;
            if p.image != p.source {
                identity.violations += 1;
                witness_push(&mut identity.witnesses, || x.format_face(&p.source));
            }
        }
    }
    Ok(PiProperties { image_is_k_face: image, carrier_is_face: carrier, identity_on_k: identity })
}

/// Symmetry checks for one group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementCheck {
    pub element: GroupElement,
    /// The image of every facet is a facet.
    pub facets_preserved: bool,
    /// `K` is mapped onto itself (only for `n >= 4`).
    pub k_preserved: Option<bool>,
    /// `π′(gσ) = g·π′(σ)` over all nonempty faces (ss, `n >= 4`).
    pub pi_equivariant: Option<Sweep>,
}

impl ElementCheck {
    pub fn passed(&self) -> bool {
        self.facets_preserved
            && self.k_preserved.unwrap_or(true)
            && self.pi_equivariant.as_ref().is_none_or(Sweep::passed)
    }
}

pub fn verify_equivariance(x: &SeparationComplex) -> Result<Vec<ElementCheck>, SepcxError> {
    let k = if x.n.get() >= 4 { Some(cross_polytope_k(x.n)?) } else { None };
    let pi = if x.relation == Relation::Strong && x.n.get() >= 4 { Some(PiMap::new(x)?) } else { None };
    let faces = if pi.is_some() { nonempty_faces(&x.complex) } else { Vec::new() };
    let facet_set: std::collections::HashSet<&Face> = x.complex.facets().iter().collect();
    let mut out = Vec::new();
    for g in GroupElement::ALL {
        let perm = x.vertex_permutation(g);
        let map = |f: &Face| Face::new(f.vertices().iter().map(|&v| perm[v]).collect());
        let facets_preserved = x.complex.facets().iter().all(|f| facet_set.contains(&map(f)));
        let k_preserved = k.as_ref().map(|k| {
            let mut image: Vec<usize> = k.vertices().iter().map(|&v| perm[v]).collect();
            image.sort_unstable();
            let mut own = k.vertices();
            own.sort_unstable();
            image == own && k.complex().facets().iter().all(|f| k.complex().contains_face(&map(f)))
        });
        let pi_equivariant = pi.as_ref().map(|pi| {
            let bad: Vec<&Face> = faces
                .par_iter()
                .filter(|f| {
                    let lhs = pi.image(&map(f)).expect("images of faces are faces").image;
                    let rhs = map(&pi.image(f).expect("face").image);
                    lhs != rhs
                })
                .collect();
            let mut witnesses = Vec::new();
            for f in &bad {
                witness_push(&mut witnesses, || x.format_face(f));
            }
            Sweep { checked: faces.len(), violations: bad.len(), exhaustive: true, witnesses }
        });
        out.push(ElementCheck { element: g, facets_preserved, k_preserved, pi_equivariant });
    }
    Ok(out)
}

/// The covering of `Δ̂_ws(n)` by `dl(k)`, `dl([n]∖k)` for `k = 2..n-1`.
/// Index actions are listed in the order of [`GroupElement::ALL`].
pub fn ws_covering(x: &SeparationComplex) -> Result<Covering, SepcxError> {
    if x.relation != Relation::Weak || x.n.get() < 4 {
        return Err(SepcxError::Precondition(format!("the deletion covering needs ws with n >= 4, got {}", x.name())));
    }
    let k = cross_polytope_k(x.n)?;
    let slots = k.vertices();
    let members = slots.iter().map(|&v| x.complex.deletion(&Face::from([v]))).collect();
    let labels = slots.iter().map(|&v| format!("dl({})", x.label(v))).collect();
    let actions = GroupElement::ALL
        .iter()
        .map(|&g| {
            let perm = x.vertex_permutation(g);
            slots.iter().map(|&v| k.slot(perm[v]).expect("the group preserves K")).collect()
        })
        .collect();
    Ok(Covering::new(x.complex.clone(), members).with_labels(labels).with_index_actions(actions))
}

/// Pairs `(k, [n]∖k)` with neither deletion among `indices`.
pub fn free_complementary_pairs(n: GroundSize, indices: &[usize]) -> usize {
    let pairs = n.get().saturating_sub(2) as usize;
    (0..pairs).filter(|&i| !indices.contains(&(2 * i)) && !indices.contains(&(2 * i + 1))).count()
}

fn mask_indices(mask: u32, len: usize) -> Vec<usize> {
    (0..len).filter(|i| mask >> i & 1 == 1).collect()
}

/// The vertices `1n` and `23⋯(n-1)`.
pub fn hub_vertices(n: GroundSize) -> (SubsetMask, SubsetMask) {
    let ends = SubsetMask::from_elements(n, [1, n.get()]).expect("in range");
    (ends, ends.complement())
}

/// One intersection of the deletion covering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverIntersection {
    pub indices: Vec<usize>,
    pub free_pairs: usize,
    pub f_vector: Vec<usize>,
    pub homology_trivial: bool,
    pub collapse: CollapseStatus,
    pub contains_hub_star: bool,
}

impl CoverIntersection {
    pub fn nonempty(&self) -> bool {
        !self.f_vector.is_empty()
    }
}

/// Every intersection `⋂_{i∈σ} Δ_i`, `σ ⊆ I` (including `σ = ∅`, the whole
/// complex), in order of the index bitmask.
pub fn verify_ws_cover_intersections(x: &SeparationComplex) -> Result<Vec<CoverIntersection>, SepcxError> {
    let cover = ws_covering(x)?;
    let (a, b) = hub_vertices(x.n);
    let hub_star = x.complex.star(&x.face_of(&[a, b])?)?;
    let len = cover.len();
    Ok((0u32..1 << len)
        .into_par_iter()
        .map(|mask| {
            let indices = mask_indices(mask, len);
            let y = cover.intersection(&indices);
            CoverIntersection {
                free_pairs: free_complementary_pairs(x.n, &indices),
                f_vector: y.f_vector(),
                homology_trivial: is_acyclic(&reduced_homology(&y)),
                collapse: greedy_collapse(&y).status,
                contains_hub_star: hub_star.is_subcomplex_of(&y),
                indices,
            }
        })
        .collect())
}

/// The cone point the case analysis predicts for an intersection of stars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Prediction {
    /// No hub star involved: the centres are pairwise separated, the
    /// intersection is the star of the face they span, and every centre is
    /// a cone point.
    Centres { vertices: Vec<String> },
    /// A hub star with no stars of the matching kind: the hub is separated
    /// from every other centre, so it is a cone point.
    Hub { vertex: String },
    /// `r1 r2` for the two least singletons (with `st(1n)`), or
    /// `[n]∖s1s2` for the two least complements (with `st(23⋯n-1)`).
    LeastPair { vertex: String },
    /// `1r` or `rn` (or `[n]∖1s`, `[n]∖sn`): whichever candidates are
    /// non-frozen, at least one of which should be a cone point.
    EndExtension { candidates: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionCheck {
    pub prediction: Prediction,
    /// Predicted vertices confirmed as cone points.
    pub confirmed: Vec<String>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarIntersection {
    /// Indices into [`StarCover::centres`].
    pub tau: Vec<usize>,
    pub empty: bool,
    pub cone_points: Vec<String>,
    pub predictions: Vec<PredictionCheck>,
}

impl StarIntersection {
    pub fn passed(&self) -> bool {
        !self.empty && !self.cone_points.is_empty() && self.predictions.iter().all(|p| p.holds)
    }
}

/// Star covering of a deletion intersection without free pairs, and the
/// cone-point search over all its nonempty sub-intersections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCover {
    pub sigma: Vec<usize>,
    /// Centres of the stars: `1n`, `23⋯(n-1)`, surviving singletons, then
    /// surviving complements, each increasing in `k`.
    pub centres: Vec<String>,
    pub covers: bool,
    pub intersections: Vec<StarIntersection>,
}

impl StarCover {
    pub fn passed(&self) -> bool {
        self.covers && self.intersections.iter().all(StarIntersection::passed)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Centre {
    Ends,
    Middle,
    Single(u32),
    CoSingle(u32),
}

pub fn star_cover_cone_points(x: &SeparationComplex, sigma: &[usize]) -> Result<StarCover, SepcxError> {
    let cover = ws_covering(x)?;
    let n = x.n;
    if free_complementary_pairs(n, sigma) != 0 {
        return Err(SepcxError::Precondition(format!("index set {sigma:?} has free complementary pairs")));
    }
    if sigma.iter().any(|&i| i >= cover.len()) {
        return Err(SepcxError::Precondition(format!("index set {sigma:?} outside 0..{}", cover.len())));
    }
    let y = cover.intersection(sigma);
    let (ends, middle) = hub_vertices(n);
    let mut centres = vec![(Centre::Ends, ends), (Centre::Middle, middle)];
    for k in 2..n.get() {
        if !sigma.contains(&(2 * (k as usize - 2))) {
            centres.push((Centre::Single(k), SubsetMask::singleton(n, k)?));
        }
    }
    for k in 2..n.get() {
        if !sigma.contains(&(2 * (k as usize - 2) + 1)) {
            centres.push((Centre::CoSingle(k), SubsetMask::singleton(n, k)?.complement()));
        }
    }
    let stars: Vec<Complex> = centres
        .iter()
        .map(|&(_, s)| y.star(&x.face_of(&[s])?).map_err(SepcxError::from))
        .collect::<Result<_, _>>()?;
    let covers = y.facets().iter().all(|f| stars.iter().any(|s| s.contains_face(f)));

    let name = |s: SubsetMask| s.to_string();
    let intersections = (1u32..1 << centres.len())
        .into_par_iter()
        .map(|mask| {
            let tau = mask_indices(mask, centres.len());
            let z = tau[1..].iter().fold(stars[tau[0]].clone(), |acc, &j| acc.intersection(&stars[j]));
            let cones: Vec<usize> = z.cone_points();
            let is_cone = |s: SubsetMask| x.vertex_of(s).is_some_and(|v| cones.contains(&v));
            let kinds: Vec<Centre> = tau.iter().map(|&j| centres[j].0).collect();
            let singles: Vec<u32> = kinds.iter().filter_map(|c| if let Centre::Single(k) = c { Some(*k) } else { None }).collect();
            let cosingles: Vec<u32> =
                kinds.iter().filter_map(|c| if let Centre::CoSingle(k) = c { Some(*k) } else { None }).collect();
            let all_centres: Vec<SubsetMask> = tau.iter().map(|&j| centres[j].1).collect();
            let centres_prediction = || {
                let confirmed: Vec<String> = all_centres.iter().filter(|&&s| is_cone(s)).map(|&s| name(s)).collect();
                let holds = confirmed.len() == all_centres.len();
                PredictionCheck {
                    prediction: Prediction::Centres { vertices: all_centres.iter().map(|&s| name(s)).collect() },
                    confirmed,
                    holds,
                }
            };
            let hub_prediction = |members: &[u32], complement: bool| -> PredictionCheck {
                let flip = |s: SubsetMask| if complement { s.complement() } else { s };
                match members {
                    [] => {
                        let hub = flip(ends);
                        let ok = is_cone(hub);
                        PredictionCheck {
                            prediction: Prediction::Hub { vertex: name(hub) },
                            confirmed: if ok { vec![name(hub)] } else { Vec::new() },
                            holds: ok,
                        }
                    }
                    [r] => {
                        let candidates: Vec<SubsetMask> = [[1, *r], [*r, n.get()]]
                            .iter()
                            .map(|e| flip(SubsetMask::from_elements(n, e.iter().copied()).expect("in range")))
                            .filter(|s| !is_frozen(*s, Relation::Weak))
                            .collect();
                        let confirmed: Vec<String> = candidates.iter().filter(|&&s| is_cone(s)).map(|&s| name(s)).collect();
                        PredictionCheck {
                            holds: !confirmed.is_empty(),
                            prediction: Prediction::EndExtension { candidates: candidates.iter().map(|&s| name(s)).collect() },
                            confirmed,
                        }
                    }
                    [r1, r2, ..] => {
                        let v = flip(SubsetMask::from_elements(n, [*r1, *r2]).expect("in range"));
                        let ok = is_cone(v);
                        PredictionCheck {
                            prediction: Prediction::LeastPair { vertex: name(v) },
                            confirmed: if ok { vec![name(v)] } else { Vec::new() },
                            holds: ok,
                        }
                    }
                }
            };
            let mut predictions = Vec::new();
            let has_ends = kinds.contains(&Centre::Ends);
            let has_middle = kinds.contains(&Centre::Middle);
            if !has_ends && !has_middle {
                predictions.push(centres_prediction());
            }
            if has_ends {
                predictions.push(hub_prediction(&singles, false));
            }
            if has_middle {
                predictions.push(hub_prediction(&cosingles, true));
            }
            StarIntersection {
                tau,
                empty: z.is_empty(),
                cone_points: cones.iter().map(|&v| name(x.label(v))).collect(),
                predictions,
            }
        })
        .collect();
    Ok(StarCover {
        sigma: sigma.to_vec(),
        centres: centres.iter().map(|&(_, s)| name(s)).collect(),
        covers,
        intersections,
    })
}

/// All index sets without free complementary pairs, in bitmask order.
pub fn pair_free_index_sets(n: GroundSize) -> Vec<Vec<usize>> {
    let len = 2 * n.get().saturating_sub(2) as usize;
    (0u32..1 << len)
        .map(|m| mask_indices(m, len))
        .filter(|s| free_complementary_pairs(n, s) == 0)
        .collect()
}

/// Connected components of a complex and whether each one is isomorphic to
/// a given model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentShape {
    pub f_vector: Vec<usize>,
    pub components: usize,
    pub all_match_model: bool,
}

pub fn component_shape(x: &Complex, model: &Complex) -> ComponentShape {
    let comps = x.components();
    let all_match_model = !comps.is_empty() && comps.iter().all(|c| isomorphic(&c.compact().0, model).is_some());
    ComponentShape { f_vector: x.f_vector(), components: comps.len(), all_match_model }
}

/// Boundary complexes of `Δ̂_ss(5)` and `Δ̂_ws(5)` and the links that show
/// they are not manifolds.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryStudy {
    pub ss_dimension: isize,
    pub ss_pure: bool,
    pub ws_dimension: isize,
    pub ws_pure: bool,
    pub ss_boundary_f_vector: Vec<usize>,
    pub ws_boundary_f_vector: Vec<usize>,
    pub ss_boundary: Vec<HomologyGroup>,
    pub ws_boundary: Vec<HomologyGroup>,
    /// `lk(15)` and `lk(234)` in the ws boundary.
    pub ws_vertex_links: Vec<(String, Vec<HomologyGroup>)>,
    /// `lk({15, 234})` in the ws boundary, compared with the octahedron boundary.
    pub ws_edge_link: ComponentShape,
    /// `lk({2, 23, 234})` in the ss boundary, compared with the 4-cycle.
    pub ss_triangle_link: ComponentShape,
    pub ss_triangle_link_homology: Vec<HomologyGroup>,
}

/// Link of a face in a boundary complex, addressed by subset strings.
pub fn boundary_link(x: &SeparationComplex, boundary: &Complex, face: &str) -> Result<Complex, SepcxError> {
    Ok(boundary.link(&x.parse_face(face)?)?)
}

pub fn boundary_study(ss: &SeparationComplex, ws: &SeparationComplex) -> Result<BoundaryStudy, SepcxError> {
    if ss.n.get() != 5 || ws.n.get() != 5 || ss.relation != Relation::Strong || ws.relation != Relation::Weak {
        return Err(SepcxError::Precondition("the boundary study takes ss5 and ws5".into()));
    }
    let ssb = ss.complex.boundary_subcomplex()?;
    let wsb = ws.complex.boundary_subcomplex()?;
    let (ss_h, ws_h) = rayon::join(|| reduced_homology(&ssb), || reduced_homology(&wsb));
    let ws_vertex_links = ["15", "234"]
        .iter()
        .map(|f| Ok((f.to_string(), reduced_homology(&boundary_link(ws, &wsb, f)?))))
        .collect::<Result<_, SepcxError>>()?;
    let edge_link = boundary_link(ws, &wsb, "15,234")?;
    let tri_link = boundary_link(ss, &ssb, "2,23,234")?;
    Ok(BoundaryStudy {
        ss_dimension: ss.complex.dimension(),
        ss_pure: ss.complex.is_pure(),
        ws_dimension: ws.complex.dimension(),
        ws_pure: ws.complex.is_pure(),
        ss_boundary_f_vector: ssb.f_vector(),
        ws_boundary_f_vector: wsb.f_vector(),
        ss_boundary: ss_h,
        ws_boundary: ws_h,
        ws_vertex_links,
        ws_edge_link: component_shape(&edge_link, &Complex::cross_polytope_boundary(3)),
        ss_triangle_link: component_shape(&tri_link, &Complex::cross_polytope_boundary(2)),
        ss_triangle_link_homology: reduced_homology(&tri_link),
    })
}
