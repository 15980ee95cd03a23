//! Subsets of `[n] = {1, ..., n}` as bitmasks, the strong and weak separation
//! relations, frozen subsets, and the action of the Klein four-group generated
//! by complementation and the reversal `k -> n + 1 - k`.
//!
//! Bit `k - 1` of a mask is set iff `k` belongs to the subset. Subsets are
//! ordered by the numeric value of their mask; every vertex index used by the
//! rest of the crate derives from that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported ground set size.
pub const MAX_GROUND: u32 = 30;

/// Largest ground set on which [`is_frozen_exhaustive`] is allowed to run.
pub const EXHAUSTIVE_FROZEN_LIMIT: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("ground set size {0} outside 1..={MAX_GROUND}")]
    GroundSize(u32),
    #[error("mask {bits:#b} does not fit in [{n}]")]
    MaskOutOfRange { bits: u32, n: u32 },
    #[error("element {element} outside [{n}]")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("subsets live in different ground sets ([{0}] vs [{1}])")]
    GroundMismatch(u32, u32),
    #[error("subsets {0} and {1} are not disjoint")]
    NotDisjoint(String, String),
    #[error("cannot parse subset {0:?}")]
    Parse(String),
}

/// Size of the ground set `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct GroundSize(u32);

impl GroundSize {
    pub fn new(n: u32) -> Result<Self, SetError> {
        if (1..=MAX_GROUND).contains(&n) {
            Ok(GroundSize(n))
        } else {
            Err(SetError::GroundSize(n))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Mask of `[n]` itself.
    pub fn full_mask(self) -> u32 {
        if self.0 == 32 {
            u32::MAX
        } else {
            (1u32 << self.0) - 1
        }
    }

    /// Number of subsets of `[n]`.
    pub fn subset_count(self) -> u64 {
        1u64 << self.0
    }

    /// Iterates every subset of `[n]` in canonical order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        (0..self.subset_count()).map(move |bits| SubsetMask { bits: bits as u32, n: self })
    }
}

impl TryFrom<u32> for GroundSize {
    type Error = SetError;
    fn try_from(n: u32) -> Result<Self, SetError> {
        GroundSize::new(n)
    }
}

impl From<GroundSize> for u32 {
    fn from(n: GroundSize) -> u32 {
        n.0
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u32,
    n: GroundSize,
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.bits).cmp(&(other.n, other.bits))
    }
}

impl SubsetMask {
    pub fn from_bits(n: GroundSize, bits: u32) -> Result<Self, SetError> {
        if bits & !n.full_mask() != 0 {
            return Err(SetError::MaskOutOfRange { bits, n: n.get() });
        }
        Ok(SubsetMask { bits, n })
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(n: GroundSize, elements: I) -> Result<Self, SetError> {
        let mut bits = 0u32;
        for k in elements {
            if k == 0 || k > n.get() {
                return Err(SetError::ElementOutOfRange { element: k, n: n.get() });
            }
            bits |= 1 << (k - 1);
        }
        Ok(SubsetMask { bits, n })
    }

    pub fn empty(n: GroundSize) -> Self {
        SubsetMask { bits: 0, n }
    }

    pub fn full(n: GroundSize) -> Self {
        SubsetMask { bits: n.full_mask(), n }
    }

    /// The singleton `{k}`.
    pub fn singleton(n: GroundSize, k: u32) -> Result<Self, SetError> {
        Self::from_elements(n, [k])
    }

    /// The interval `{lo, lo + 1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(n: GroundSize, lo: u32, hi: u32) -> Result<Self, SetError> {
        Self::from_elements(n, lo..=hi)
    }

    /// Parses the brace-free digit form (`"134"`) for `n <= 9`, a
    /// comma-separated list (`"1,3,10"`), or `"{}"` for the empty set.
    pub fn parse(n: GroundSize, text: &str) -> Result<Self, SetError> {
        let t = text.trim();
        let t = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Self::empty(n));
        }
        let bad = || SetError::Parse(text.to_string());
        let elements: Vec<u32> = if t.contains(',') || n.get() > 9 {
            t.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        let mask = Self::from_elements(n, elements.iter().copied())?;
        if mask.len() as usize != elements.len() {
            return Err(bad());
        }
        Ok(mask)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn ground(self) -> GroundSize {
        self.n
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, k: u32) -> bool {
        k >= 1 && k <= self.n.get() && self.bits & (1 << (k - 1)) != 0
    }

    pub fn min(self) -> Option<u32> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.bits != 0).then(|| 32 - self.bits.leading_zeros())
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        let bits = self.bits;
        (1..=self.n.get()).filter(move |k| bits & (1 << (k - 1)) != 0)
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.bits & other.bits == 0
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(self) -> SubsetMask {
        SubsetMask { bits: self.n.full_mask() & !self.bits, n: self.n }
    }

    /// Image under `k -> n + 1 - k`.
    pub fn reversed(self) -> SubsetMask {
        let n = self.n.get();
        SubsetMask { bits: self.bits.reverse_bits() >> (32 - n), n: self.n }
    }

    fn same_ground(self, other: SubsetMask) -> Result<(), SetError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(SetError::GroundMismatch(self.n.get(), other.n.get()))
        }
    }

    fn disjoint_checked(self, other: SubsetMask) -> Result<(), SetError> {
        self.same_ground(other)?;
        if self.is_disjoint(other) {
            Ok(())
        } else {
            Err(SetError::NotDisjoint(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("{}");
        }
        if self.n.get() <= 9 {
            for k in self.elements() {
                write!(f, "{k}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.elements().map(|k| k.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Mask of `{lo, ..., hi}` (1-based, inclusive); `lo <= hi` required.
fn range_mask(lo: u32, hi: u32) -> u32 {
    let upper = if hi >= 32 { u32::MAX } else { (1u32 << hi) - 1 };
    upper & !((1u32 << (lo - 1)) - 1)
}

// Raw-mask kernels. Empty sets follow max(∅) = -inf, min(∅) = +inf.

#[inline]
pub(crate) fn precedes_bits(a: u32, b: u32) -> bool {
    if a == 0 || b == 0 {
        return true;
    }
    // max(a) < min(b)
    (32 - a.leading_zeros()) < b.trailing_zeros() + 1
}

#[inline]
pub(crate) fn surrounds_bits(a: u32, b: u32) -> bool {
    if b == 0 {
        return true;
    }
    let lo = b.trailing_zeros() + 1;
    let hi = 32 - b.leading_zeros();
    a & range_mask(lo, hi) == 0
}

#[inline]
pub(crate) fn strongly_separated_bits(a: u32, b: u32) -> bool {
    let (x, y) = (a & !b, b & !a);
    precedes_bits(x, y) || precedes_bits(y, x)
}

#[inline]
pub(crate) fn weakly_separated_bits(a: u32, b: u32) -> bool {
    let (x, y) = (a & !b, b & !a);
    let (la, lb) = (a.count_ones(), b.count_ones());
    (la <= lb && surrounds_bits(x, y)) || (lb <= la && surrounds_bits(y, x))
}

/// `max(A) < min(B)` for disjoint `A`, `B`.
pub fn precedes(a: SubsetMask, b: SubsetMask) -> Result<bool, SetError> {
    a.disjoint_checked(b)?;
    Ok(precedes_bits(a.bits, b.bits))
}

/// Whether `A` splits as `A1 ⊔ A2` with `A1 ≺ B ≺ A2`.
pub fn surrounds(a: SubsetMask, b: SubsetMask) -> Result<bool, SetError> {
    a.disjoint_checked(b)?;
    Ok(surrounds_bits(a.bits, b.bits))
}

pub fn strongly_separated(a: SubsetMask, b: SubsetMask) -> Result<bool, SetError> {
    a.same_ground(b)?;
    Ok(strongly_separated_bits(a.bits, b.bits))
}

pub fn weakly_separated(a: SubsetMask, b: SubsetMask) -> Result<bool, SetError> {
    a.same_ground(b)?;
    Ok(weakly_separated_bits(a.bits, b.bits))
}

/// Which separation relation a graph or complex is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "ws")]
    Weak,
    #[serde(rename = "ss")]
    Strong,
}

impl Relation {
    pub const ALL: [Relation; 2] = [Relation::Weak, Relation::Strong];

    pub fn tag(self) -> &'static str {
        match self {
            Relation::Weak => "ws",
            Relation::Strong => "ss",
        }
    }

    pub fn separated(self, a: SubsetMask, b: SubsetMask) -> Result<bool, SetError> {
        a.same_ground(b)?;
        Ok(self.separated_bits(a.bits, b.bits))
    }

    #[inline]
    pub(crate) fn separated_bits(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Weak => weakly_separated_bits(a, b),
            Relation::Strong => strongly_separated_bits(a, b),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ws" | "weak" => Ok(Relation::Weak),
            "ss" | "strong" => Ok(Relation::Strong),
            other => Err(format!("unknown relation {other:?} (expected ws or ss)")),
        }
    }
}

/// Frozen test by the closed form: `S` is empty, `[n]`, an initial segment
/// `{1..k}` or a final segment `{k..n}`. Both relations share this answer;
/// the test suite checks it against [`is_frozen_exhaustive`].
pub fn is_frozen(s: SubsetMask, _relation: Relation) -> bool {
    let bits = s.bits;
    let full = s.n.full_mask();
    if bits == 0 || bits == full {
        return true;
    }
    let initial = bits & (bits + 1) == 0;
    let final_segment = {
        let low = bits.trailing_zeros();
        (bits >> low) & ((bits >> low) + 1) == 0 && 32 - bits.leading_zeros() == s.n.get()
    };
    initial || final_segment
}

/// Frozen test straight from the definition: `S` is separated from every
/// subset of `[n]`. Returns `None` when `n` exceeds
/// [`EXHAUSTIVE_FROZEN_LIMIT`].
pub fn is_frozen_exhaustive(s: SubsetMask, relation: Relation) -> Option<bool> {
    if s.n.get() > EXHAUSTIVE_FROZEN_LIMIT {
        return None;
    }
    let count = s.n.subset_count() as u32;
    Some((0..count).all(|t| relation.separated_bits(s.bits, t)))
}

/// An element of `G = <α, w0>`, the Klein four-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupElement {
    #[serde(rename = "e")]
    Identity,
    /// Set complementation.
    #[serde(rename = "alpha")]
    Alpha,
    /// `k -> n + 1 - k`.
    #[serde(rename = "w0")]
    W0,
    #[serde(rename = "alpha_w0")]
    AlphaW0,
}

impl GroupElement {
    pub const ALL: [GroupElement; 4] =
        [GroupElement::Identity, GroupElement::Alpha, GroupElement::W0, GroupElement::AlphaW0];

    fn flags(self) -> (bool, bool) {
        match self {
            GroupElement::Identity => (false, false),
            GroupElement::Alpha => (true, false),
            GroupElement::W0 => (false, true),
            GroupElement::AlphaW0 => (true, true),
        }
    }

    fn from_flags(alpha: bool, w0: bool) -> Self {
        match (alpha, w0) {
            (false, false) => GroupElement::Identity,
            (true, false) => GroupElement::Alpha,
            (false, true) => GroupElement::W0,
            (true, true) => GroupElement::AlphaW0,
        }
    }

    /// Group product; the group is abelian so order does not matter.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        let (a1, w1) = self.flags();
        let (a2, w2) = other.flags();
        GroupElement::from_flags(a1 ^ a2, w1 ^ w2)
    }

    pub fn inverse(self) -> GroupElement {
        self
    }

    pub fn act(self, s: SubsetMask) -> SubsetMask {
        let (alpha, w0) = self.flags();
        let s = if w0 { s.reversed() } else { s };
        if alpha {
            s.complement()
        } else {
            s
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupElement::Identity => "e",
            GroupElement::Alpha => "alpha",
            GroupElement::W0 => "w0",
            GroupElement::AlphaW0 => "alpha*w0",
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `g · S`.
pub fn act(g: GroupElement, s: SubsetMask) -> SubsetMask {
    g.act(s)
}

/// The separation graph on the non-frozen subsets of `[n]`.
#[derive(Debug, Clone)]
pub struct SeparationGraph {
    pub n: GroundSize,
    pub relation: Relation,
    /// Non-frozen subsets in canonical (numeric) order.
    pub vertices: Vec<SubsetMask>,
    /// Edges `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl SeparationGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, s: SubsetMask) -> Option<usize> {
        self.vertices.binary_search(&s).ok()
    }
}

pub fn non_frozen_subsets(n: GroundSize, relation: Relation) -> Vec<SubsetMask> {
    n.subsets().filter(|s| !is_frozen(*s, relation)).collect()
}

pub fn separation_graph(n: GroundSize, relation: Relation) -> SeparationGraph {
    let vertices = non_frozen_subsets(n, relation);
    let mut edges = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if relation.separated_bits(a.bits, b.bits) {
                edges.push((i, j));
            }
        }
    }
    SeparationGraph { n, relation, vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn s(n: u32, text: &str) -> SubsetMask {
        SubsetMask::parse(g(n), text).unwrap()
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(s(5, "12"), s(5, "35")).unwrap());
        assert!(precedes(s(3, ""), s(3, "1")).unwrap());
        assert!(!precedes(s(3, "2"), s(3, "1")).unwrap());
    }

    #[test]
    fn precedes_rejects_overlap_and_mismatch() {
        assert!(matches!(precedes(s(3, "12"), s(3, "23")), Err(SetError::NotDisjoint(..))));
        assert!(matches!(precedes(s(3, "1"), s(4, "2")), Err(SetError::GroundMismatch(3, 4))));
        assert!(surrounds(s(4, "14"), s(4, "4")).is_err());
    }

    #[test]
    fn surrounds_examples() {
        assert!(surrounds(s(4, "14"), s(4, "23")).unwrap());
        assert!(surrounds(s(3, ""), s(3, "2")).unwrap());
        assert!(!surrounds(s(3, "2"), s(3, "13")).unwrap());
    }

    #[test]
    fn separation_examples_from_small_cases() {
        assert!(!strongly_separated(s(3, "2"), s(3, "13")).unwrap());
        assert!(!weakly_separated(s(3, "2"), s(3, "13")).unwrap());
        assert!(!strongly_separated(s(4, "23"), s(4, "14")).unwrap());
        assert!(weakly_separated(s(4, "23"), s(4, "14")).unwrap());
        assert!(strongly_separated(s(5, "2"), s(5, "124")).unwrap());
        assert!(weakly_separated(s(5, "134"), s(5, "134")).unwrap());
        assert!(strongly_separated(s(4, "1"), s(5, "1")).is_err());
    }

    #[test]
    fn frozen_examples() {
        for rel in Relation::ALL {
            assert!(is_frozen(s(5, "123"), rel));
            assert!(is_frozen(s(5, "45"), rel));
            assert!(is_frozen(s(5, ""), rel));
            assert!(is_frozen(s(5, "12345"), rel));
            assert!(!is_frozen(s(5, "3"), rel));
        }
        assert!(!is_frozen(s(4, "14"), Relation::Weak));
        assert_eq!(is_frozen_exhaustive(s(4, "14"), Relation::Weak), Some(false));
        assert_eq!(is_frozen_exhaustive(SubsetMask::empty(g(21)), Relation::Weak), None);
    }

    #[test]
    fn group_action_examples() {
        assert_eq!(act(GroupElement::Alpha, s(4, "2")), s(4, "134"));
        assert_eq!(act(GroupElement::W0, s(4, "124")), s(4, "134"));
        assert_eq!(act(GroupElement::Identity, s(4, "24")), s(4, "24"));
        assert_eq!(act(GroupElement::AlphaW0, s(4, "1")), s(4, "123"));
        for a in GroupElement::ALL {
            assert_eq!(a.compose(a), GroupElement::Identity);
            for b in GroupElement::ALL {
                assert_eq!(a.compose(b), b.compose(a));
                let x = s(6, "136");
                assert_eq!(a.compose(b).act(x), a.act(b.act(x)));
            }
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(s(5, "134").to_string(), "134");
        assert_eq!(s(5, "1,3,4"), s(5, "134"));
        assert_eq!(SubsetMask::from_elements(g(12), [1, 10, 12]).unwrap().to_string(), "1,10,12");
        assert_eq!(SubsetMask::parse(g(12), "1,10,12").unwrap().len(), 3);
        assert_eq!(SubsetMask::empty(g(3)).to_string(), "{}");
        assert!(SubsetMask::parse(g(4), "15").is_err());
        assert!(SubsetMask::parse(g(4), "11").is_err());
        assert!(SubsetMask::parse(g(4), "x").is_err());
        assert!(SubsetMask::from_bits(g(3), 8).is_err());
        assert!(GroundSize::new(0).is_err());
        assert!(GroundSize::new(31).is_err());
    }

    #[test]
    fn small_graphs() {
        let g3 = separation_graph(g(3), Relation::Weak);
        assert_eq!(g3.vertices, vec![s(3, "2"), s(3, "13")]);
        assert!(g3.edges.is_empty());
        let ss4 = separation_graph(g(4), Relation::Strong);
        let ws4 = separation_graph(g(4), Relation::Weak);
        assert_eq!((ss4.vertex_count(), ss4.edge_count()), (8, 16));
        assert_eq!((ws4.vertex_count(), ws4.edge_count()), (8, 17));
        assert!(separation_graph(g(2), Relation::Strong).vertices.is_empty());
    }
}
