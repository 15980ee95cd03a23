//! Abstract simplicial complexes stored by their facets.
//!
//! A [`Complex`] lives over a vertex universe `0..universe`; its vertices are
//! the indices that occur in some facet. Subcomplexes produced by [`star`],
//! [`link`], [`deletion`] and friends keep the parent's universe, so vertex
//! indices stay meaningful across a whole family of complexes.
//!
//! Complexes built as clique complexes remember their graph. Local
//! subcomplexes of a clique complex are again clique complexes (of an induced
//! subgraph), so those operations reduce to vertex-set arithmetic and faces are
//! enumerated by depth-first clique extension instead of facet expansion.
//!
//! [`star`]: Complex::star
//! [`link`]: Complex::link
//! [`deletion`]: Complex::deletion

mod collapse;
mod covering;
mod isomorphism;
mod json;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use collapse::{greedy_collapse, CollapseOutcome, CollapseStatus};
pub use covering::{nerve, Covering};
pub use isomorphism::isomorphic;
pub use json::ComplexFile;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("vertex {vertex} outside the vertex table of size {universe}")]
    VertexOutOfRange { vertex: usize, universe: usize },
    #[error("complex is not pure (facet dimensions {0:?})")]
    NotPure(Vec<usize>),
    #[error("malformed complex file: {0}")]
    Format(String),
}

/// A face: a strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with_vertex(&self, v: usize) -> Face {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut w = self.0.clone();
                w.insert(pos, v);
                Face(w)
            }
        }
    }

    /// The codimension-one faces, the `i`-th omitting vertex `i`.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut w = self.0.clone();
            w.remove(i);
            Face(w)
        })
    }

    fn to_bits(&self, universe: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(universe);
        for &v in &self.0 {
            b.insert(v);
        }
        b
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl From<Vec<usize>> for Face {
    fn from(v: Vec<usize>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Face {
    fn from(v: [usize; N]) -> Self {
        Face::new(v.to_vec())
    }
}

/// Simple undirected graph on `0..n` with bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (k-1) - 0`.
    pub fn cycle(k: usize) -> Self {
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn complete(k: usize) -> Self {
        Graph::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }
}

/// Clique-complex description: the complex is every clique of `adj`
/// contained in `support`.
#[derive(Debug, Clone)]
struct Flag {
    adj: Arc<Vec<FixedBitSet>>,
    support: FixedBitSet,
}

impl Flag {
    fn same_graph(&self, other: &Flag) -> bool {
        Arc::ptr_eq(&self.adj, &other.adj)
    }

    /// Vertices of `support` adjacent to every vertex of `face`.
    fn common_neighbors(&self, face: &Face) -> FixedBitSet {
        let mut c = self.support.clone();
        for &v in face.vertices() {
            c.intersect_with(&self.adj[v]);
        }
        c
    }

    fn is_clique(&self, face: &Face) -> bool {
        let vs = face.vertices();
        vs.iter().all(|&v| self.support.contains(v))
            && vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&w| self.adj[u].contains(w)))
    }

    fn maximal_cliques(&self) -> Vec<Face> {
        let mut out = Vec::new();
        if self.support.is_clear() {
            return out;
        }
        let mut r = Vec::new();
        let x = FixedBitSet::with_capacity(self.support.len());
        bron_kerbosch(&self.adj, &mut r, self.support.clone(), x, &mut out);
        out
    }

    /// Depth-first clique enumeration; each clique of size `1..=max_len` is
    /// visited once, in lexicographic order.
    fn for_each_clique<F: FnMut(&[usize])>(&self, max_len: usize, visit: &mut F) {
        fn extend<F: FnMut(&[usize])>(
            adj: &[FixedBitSet],
            stack: &mut Vec<usize>,
            candidates: &FixedBitSet,
            max_len: usize,
            visit: &mut F,
        ) {
            for v in candidates.ones() {
                stack.push(v);
                visit(stack);
                if stack.len() < max_len {
                    let mut next = candidates.clone();
                    next.intersect_with(&adj[v]);
                    next.remove_range(..v + 1);
                    if !next.is_clear() {
                        extend(adj, stack, &next, max_len, visit);
                    }
                }
                stack.pop();
            }
        }
        let mut stack = Vec::new();
        extend(&self.adj, &mut stack, &self.support, max_len, visit);
    }
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Face>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(Face::new(r.clone()));
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection_count(&adj[u]))
        .expect("p is nonempty");
    let mut todo = p.clone();
    todo.difference_with(&adj[pivot]);
    for v in todo.ones() {
        r.push(v);
        let mut p2 = p.clone();
        p2.intersect_with(&adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[v]);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// An abstract simplicial complex given by its facets.
#[derive(Debug, Clone)]
pub struct Complex {
    universe: usize,
    /// Inclusion-maximal faces, sorted lexicographically.
    facets: Vec<Face>,
    flag: Option<Flag>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Complex {
    pub fn empty(universe: usize) -> Self {
        Complex { universe, facets: Vec::new(), flag: None }
    }

    /// The full simplex on `k` vertices.
    pub fn simplex(k: usize) -> Self {
        if k == 0 {
            return Complex::empty(0);
        }
        clique_complex(&Graph::complete(k))
    }

    /// Boundary of the `m`-dimensional cross-polytope: vertices `2i` and
    /// `2i + 1` are antipodal, every other pair is joined.
    pub fn cross_polytope_boundary(m: usize) -> Self {
        let k = 2 * m;
        let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2);
        clique_complex(&Graph::from_edges(k, edges))
    }

    /// The complex generated by `faces`; non-maximal and empty faces are dropped.
    pub fn from_facets<I>(universe: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut faces: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        for f in &faces {
            if let Some(&v) = f.vertices().last() {
                if v >= universe {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, universe });
                }
            }
        }
        faces.sort_unstable();
        faces.dedup();
        Ok(Complex { universe, facets: maximal_faces(universe, faces), flag: None })
    }

    fn from_flag(flag: Flag) -> Self {
        let mut facets = flag.maximal_cliques();
        facets.sort_unstable();
        Complex { universe: flag.support.len(), facets, flag: Some(flag) }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_flag(&self) -> bool {
        self.flag.is_some()
    }

    pub fn vertex_set(&self) -> FixedBitSet {
        if let Some(flag) = &self.flag {
            return flag.support.clone();
        }
        let mut b = FixedBitSet::with_capacity(self.universe);
        for f in &self.facets {
            for &v in f.vertices() {
                b.insert(v);
            }
        }
        b
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertex_set().ones().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_set().count_ones(..)
    }

    /// Dimension; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        if face.is_empty() {
            return !self.is_empty();
        }
        if face.vertices().last().is_some_and(|&v| v >= self.universe) {
            return false;
        }
        match &self.flag {
            Some(flag) => flag.is_clique(face),
            None => self.facets.iter().any(|f| face.is_subset(f)),
        }
    }

    /// The 1-skeleton restricted to the vertex universe.
    pub fn skeleton_graph(&self) -> Graph {
        if let Some(flag) = &self.flag {
            let adj: Vec<FixedBitSet> = (0..self.universe)
                .map(|v| {
                    if flag.support.contains(v) {
                        let mut a = flag.adj[v].clone();
                        a.intersect_with(&flag.support);
                        a
                    } else {
                        FixedBitSet::with_capacity(self.universe)
                    }
                })
                .collect();
            return Graph { adj };
        }
        let mut g = Graph::new(self.universe);
        for f in &self.facets {
            let vs = f.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &w in &vs[i + 1..] {
                    g.add_edge(u, w);
                }
            }
        }
        g
    }

    /// All faces of dimension `d`, each once, in lexicographic order.
    pub fn faces_of_dim(&self, d: usize) -> Vec<Face> {
        if let Some(flag) = &self.flag {
            let mut out = Vec::new();
            flag.for_each_clique(d + 1, &mut |c| {
                if c.len() == d + 1 {
                    out.push(Face::from_sorted(c.to_vec()));
                }
            });
            return out;
        }
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for_each_subset_of_size(f.vertices(), d + 1, &mut |s| {
                out.insert(Face::from_sorted(s.to_vec()));
            });
        }
        out.into_iter().collect()
    }

    /// Faces grouped by dimension `0..=dim`, each list lexicographic.
    pub fn faces_by_dim(&self) -> Vec<Vec<Face>> {
        let top = self.dimension();
        if top < 0 {
            return Vec::new();
        }
        let levels = top as usize + 1;
        if let Some(flag) = &self.flag {
            let mut out: Vec<Vec<Face>> = vec![Vec::new(); levels];
            flag.for_each_clique(levels, &mut |c| out[c.len() - 1].push(Face::from_sorted(c.to_vec())));
            return out;
        }
        let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); levels];
        for f in &self.facets {
            for_each_nonempty_subset(f.vertices(), &mut |s| {
                sets[s.len() - 1].insert(Face::from_sorted(s.to_vec()));
            });
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dimension();
        if top < 0 {
            return Vec::new();
        }
        if let Some(flag) = &self.flag {
            let mut counts = vec![0usize; top as usize + 1];
            flag.for_each_clique(counts.len(), &mut |c| counts[c.len() - 1] += 1);
            return counts;
        }
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// Alternating face count `f0 - f1 + f2 - ...`; 0 for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn require_face(&self, face: &Face) -> Result<(), ComplexError> {
        if !face.is_empty() && self.contains_face(face) {
            Ok(())
        } else {
            Err(ComplexError::NotAFace(face.clone()))
        }
    }

    /// `st(σ) = {τ : τ ∪ σ ∈ X}`.
    pub fn star(&self, sigma: &Face) -> Result<Complex, ComplexError> {
        self.require_face(sigma)?;
        if let Some(flag) = &self.flag {
            let mut support = flag.common_neighbors(sigma);
            for &v in sigma.vertices() {
                support.insert(v);
            }
            return Ok(Complex::from_flag(Flag { adj: flag.adj.clone(), support }));
        }
        let facets = self.facets.iter().filter(|f| sigma.is_subset(f)).cloned().collect();
        Ok(Complex { universe: self.universe, facets, flag: None })
    }

    /// `dl(σ) = {τ : τ ∩ σ = ∅}`; `σ` may be any vertex set.
    pub fn deletion(&self, sigma: &Face) -> Complex {
        if let Some(flag) = &self.flag {
            let mut support = flag.support.clone();
            for &v in sigma.vertices().iter().filter(|&&v| v < self.universe) {
                support.remove(v);
            }
            return Complex::from_flag(Flag { adj: flag.adj.clone(), support });
        }
        let faces = self.facets.iter().map(|f| f.difference(sigma));
        Complex::from_facets(self.universe, faces).expect("faces stay in range")
    }

    /// `lk(σ) = st(σ) ∩ dl(σ)`.
    pub fn link(&self, sigma: &Face) -> Result<Complex, ComplexError> {
        self.require_face(sigma)?;
        if let Some(flag) = &self.flag {
            let mut support = flag.common_neighbors(sigma);
            for &v in sigma.vertices() {
                support.remove(v);
            }
            return Ok(Complex::from_flag(Flag { adj: flag.adj.clone(), support }));
        }
        let faces = self.facets.iter().filter(|f| sigma.is_subset(f)).map(|f| f.difference(sigma));
        Ok(Complex::from_facets(self.universe, faces).expect("faces stay in range"))
    }

    /// Faces of `X` all of whose vertices lie in `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Complex {
        let mut keep = FixedBitSet::with_capacity(self.universe);
        for &v in vertices.iter().filter(|&&v| v < self.universe) {
            keep.insert(v);
        }
        self.induced_bits(&keep)
    }

    pub(crate) fn induced_bits(&self, keep: &FixedBitSet) -> Complex {
        if let Some(flag) = &self.flag {
            let mut support = flag.support.clone();
            support.intersect_with(keep);
            return Complex::from_flag(Flag { adj: flag.adj.clone(), support });
        }
        let faces = self
            .facets
            .iter()
            .map(|f| Face::from_sorted(f.vertices().iter().copied().filter(|&v| keep.contains(v)).collect()));
        Complex::from_facets(self.universe, faces).expect("faces stay in range")
    }

    /// Faces common to both complexes.
    pub fn intersection(&self, other: &Complex) -> Complex {
        let universe = self.universe.max(other.universe);
        if let (Some(a), Some(b)) = (&self.flag, &other.flag) {
            if a.same_graph(b) {
                let mut support = a.support.clone();
                support.intersect_with(&b.support);
                return Complex::from_flag(Flag { adj: a.adj.clone(), support });
            }
        }
        let mut faces = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                faces.push(Face::from_sorted(f.vertices().iter().copied().filter(|v| g.contains(*v)).collect()));
            }
        }
        Complex::from_facets(universe, faces).expect("faces stay in range")
    }

    /// `st(σ) ∩ st(τ)`, defined when `σ ∪ τ` is a face.
    pub fn star_intersection(&self, sigma: &Face, tau: &Face) -> Result<Complex, ComplexError> {
        let joined = sigma.union(tau);
        self.require_face(&joined)?;
        Ok(self.star(sigma)?.intersection(&self.star(tau)?))
    }

    /// Whether every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    /// Cone points: vertices `v` with `σ ∪ {v}` a face for every face `σ`,
    /// i.e. the vertices common to all facets.
    pub fn cone_points(&self) -> Vec<usize> {
        let Some(first) = self.facets.first() else {
            return Vec::new();
        };
        if let Some(flag) = &self.flag {
            let mut cone = flag.support.clone();
            for v in flag.support.ones() {
                let mut closed = flag.adj[v].clone();
                closed.insert(v);
                cone.intersect_with(&closed);
            }
            return cone.ones().collect();
        }
        let mut cone = first.to_bits(self.universe);
        for f in &self.facets[1..] {
            cone.intersect_with(&f.to_bits(self.universe));
        }
        cone.ones().collect()
    }

    /// Subcomplex generated by the codimension-one faces lying in exactly one
    /// facet. Requires a pure complex.
    pub fn boundary_subcomplex(&self) -> Result<Complex, ComplexError> {
        if !self.is_pure() {
            let dims: BTreeSet<usize> = self.facets.iter().map(|f| f.len() - 1).collect();
            return Err(ComplexError::NotPure(dims.into_iter().collect()));
        }
        let mut count: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for r in f.boundary_faces() {
                *count.entry(r).or_default() += 1;
            }
        }
        let ridges = count.into_iter().filter_map(|(r, c)| (c == 1).then_some(r));
        Complex::from_facets(self.universe, ridges)
    }

    /// Connected components, ordered by their least vertex.
    pub fn components(&self) -> Vec<Complex> {
        let mut parent: Vec<usize> = (0..self.universe).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for f in &self.facets {
            let vs = f.vertices();
            for &w in &vs[1..] {
                let (a, b) = (find(&mut parent, vs[0]), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, FixedBitSet> = Default::default();
        for v in self.vertex_set().ones() {
            let root = find(&mut parent, v);
            groups.entry(root).or_insert_with(|| FixedBitSet::with_capacity(self.universe)).insert(v);
        }
        groups.values().map(|vs| self.induced_bits(vs)).collect()
    }

    /// Renames vertex `v` to `map[v]` in a universe of size `universe`.
    pub fn relabel(&self, map: &[usize], universe: usize) -> Result<Complex, ComplexError> {
        let faces = self.facets.iter().map(|f| Face::new(f.vertices().iter().map(|&v| map[v]).collect()));
        Complex::from_facets(universe, faces)
    }

    /// Reindexes the vertices to `0..k`, returning the compact complex and
    /// the original index of each new vertex.
    pub fn compact(&self) -> (Complex, Vec<usize>) {
        let originals = self.vertices();
        let mut map = vec![usize::MAX; self.universe];
        for (i, &v) in originals.iter().enumerate() {
            map[v] = i;
        }
        let c = self.relabel(&map, originals.len()).expect("compact relabel stays in range");
        (c, originals)
    }
}

/// Drops faces contained in another face. `faces` must be sorted and deduplicated.
fn maximal_faces(universe: usize, mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Face> = Vec::new();
    let mut kept_bits: Vec<FixedBitSet> = Vec::new();
    // incidence: vertex -> indices of kept faces containing it
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for f in faces {
        let bits = f.to_bits(universe);
        let first = f.vertices()[0];
        let dominated = incidence[first].iter().any(|&k| bits.is_subset(&kept_bits[k]));
        if !dominated {
            let idx = kept.len();
            for &v in f.vertices() {
                incidence[v].push(idx);
            }
            kept.push(f);
            kept_bits.push(bits);
        }
    }
    kept.sort_unstable();
    kept
}

fn for_each_subset_of_size<F: FnMut(&[usize])>(items: &[usize], k: usize, visit: &mut F) {
    fn go<F: FnMut(&[usize])>(items: &[usize], start: usize, k: usize, buf: &mut Vec<usize>, visit: &mut F) {
        if buf.len() == k {
            visit(buf);
            return;
        }
        let need = k - buf.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            buf.push(items[i]);
            go(items, i + 1, k, buf, visit);
            buf.pop();
        }
    }
    if k == 0 || k > items.len() {
        return;
    }
    go(items, 0, k, &mut Vec::with_capacity(k), visit);
}

fn for_each_nonempty_subset<F: FnMut(&[usize])>(items: &[usize], visit: &mut F) {
    let mut buf = Vec::with_capacity(items.len());
    for mask in 1u64..(1u64 << items.len()) {
        buf.clear();
        buf.extend(items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v));
        visit(&buf);
    }
}

/// Clique complex of `graph`: its faces are exactly the cliques.
pub fn clique_complex(graph: &Graph) -> Complex {
    let n = graph.vertex_count();
    let mut support = FixedBitSet::with_capacity(n);
    support.insert_range(..);
    Complex::from_flag(Flag { adj: Arc::new(graph.adj.clone()), support })
}

/// Clique complex of `graph` restricted to the vertices in `support`.
pub fn clique_complex_on(graph: &Graph, support: &[usize]) -> Complex {
    let n = graph.vertex_count();
    let mut bits = FixedBitSet::with_capacity(n);
    for &v in support {
        bits.insert(v);
    }
    Complex::from_flag(Flag { adj: Arc::new(graph.adj.clone()), support: bits })
}
