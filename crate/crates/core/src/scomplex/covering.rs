use fixedbitset::FixedBitSet;

use super::{Complex, Face};

/// A family of subcomplexes of a parent complex, indexed by `0..len`.
#[derive(Debug, Clone)]
pub struct Covering {
    parent: Complex,
    members: Vec<Complex>,
    labels: Vec<String>,
    /// Optional permutations of the index set, one per group element.
    index_actions: Vec<Vec<usize>>,
}

impl Covering {
    pub fn new(parent: Complex, members: Vec<Complex>) -> Self {
        let labels = (0..members.len()).map(|i| i.to_string()).collect();
        Covering { parent, members, labels, index_actions: Vec::new() }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.members.len());
        self.labels = labels;
        self
    }

    pub fn with_index_actions(mut self, actions: Vec<Vec<usize>>) -> Self {
        assert!(actions.iter().all(|p| p.len() == self.members.len()));
        self.index_actions = actions;
        self
    }

    pub fn parent(&self) -> &Complex {
        &self.parent
    }

    pub fn members(&self) -> &[Complex] {
        &self.members
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_actions(&self) -> &[Vec<usize>] {
        &self.index_actions
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether the members' union is the parent and every member is a
    /// subcomplex of it.
    pub fn covers_parent(&self) -> bool {
        self.members.iter().all(|m| m.is_subcomplex_of(&self.parent))
            && self.parent.facets().iter().all(|f| self.members.iter().any(|m| m.contains_face(f)))
    }

    /// `⋂_{i ∈ indices} Δ_i`; the parent itself for an empty index set.
    pub fn intersection(&self, indices: &[usize]) -> Complex {
        let mut it = indices.iter();
        let Some(&first) = it.next() else {
            return self.parent.clone();
        };
        it.fold(self.members[first].clone(), |acc, &i| acc.intersection(&self.members[i]))
    }

    /// Nerve: `σ ⊆ I` is a face iff the members indexed by `σ` share a
    /// vertex. Subcomplexes are downward closed, so a nonempty intersection
    /// always contains a vertex; the nerve is therefore generated by the sets
    /// `{i : v ∈ Δ_i}` over the vertices `v` of the parent.
    pub fn nerve(&self) -> Complex {
        let vertex_sets: Vec<FixedBitSet> = self.members.iter().map(Complex::vertex_set).collect();
        let faces = self.parent.vertices().into_iter().map(|v| {
            Face::from_sorted(
                vertex_sets.iter().enumerate().filter(|(_, s)| s.contains(v)).map(|(i, _)| i).collect(),
            )
        });
        Complex::from_facets(self.members.len(), faces).expect("indices are in range")
    }
}

/// `nerve(C)` as a free function.
pub fn nerve(covering: &Covering) -> Complex {
    covering.nerve()
}
