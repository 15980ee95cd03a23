//! On-disk complex format:
//!
//! ```json
//! { "n": 4, "relation": "ss", "vertices": ["2", "3", "13"], "facets": [[0, 1], [1, 2]] }
//! ```
//!
//! `vertices` is the full vertex table (labels, usually subset strings) and
//! facet entries index into it. Subcomplexes keep their parent's table.

use serde::{Deserialize, Serialize};

use super::{Complex, ComplexError, Face};
use crate::sepsets::{GroundSize, Relation, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: Option<u32>,
    pub relation: Option<Relation>,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexFile {
    pub fn new(n: Option<u32>, relation: Option<Relation>, vertices: Vec<String>, complex: &Complex) -> Self {
        assert_eq!(vertices.len(), complex.universe(), "vertex table must match the complex universe");
        ComplexFile {
            n,
            relation,
            vertices,
            facets: complex.facets().iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }

    pub fn complex(&self) -> Result<Complex, ComplexError> {
        let faces = self
            .facets
            .iter()
            .map(|f| {
                let face = Face::new(f.clone());
                if face.len() != f.len() {
                    Err(ComplexError::Format(format!("facet {f:?} repeats a vertex")))
                } else {
                    Ok(face)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Complex::from_facets(self.vertices.len(), faces)
    }

    /// The vertex table parsed as subsets of `[n]`; fails without `n`.
    pub fn subset_table(&self) -> Result<Vec<SubsetMask>, ComplexError> {
        let n = self.n.ok_or_else(|| ComplexError::Format("vertex labels need a ground size n".into()))?;
        let n = GroundSize::new(n).map_err(|e| ComplexError::Format(e.to_string()))?;
        self.vertices
            .iter()
            .map(|s| SubsetMask::parse(n, s).map_err(|e| ComplexError::Format(e.to_string())))
            .collect()
    }

    /// Resolves a face given as subset strings (`"15,234"` for `n <= 9`,
    /// `"1,5;2,3,4"` otherwise) against the vertex table.
    pub fn resolve_face(&self, text: &str) -> Result<Face, ComplexError> {
        let table = self.subset_table()?;
        let n = GroundSize::new(self.n.unwrap_or(1)).map_err(|e| ComplexError::Format(e.to_string()))?;
        let sep = if n.get() <= 9 { ',' } else { ';' };
        let mut out = Vec::new();
        for part in text.split(sep).map(str::trim).filter(|p| !p.is_empty()) {
            let s = SubsetMask::parse(n, part).map_err(|e| ComplexError::Format(e.to_string()))?;
            let idx = table
                .iter()
                .position(|t| *t == s)
                .ok_or_else(|| ComplexError::Format(format!("{part} is not a vertex of this complex")))?;
            out.push(idx);
        }
        if out.is_empty() {
            return Err(ComplexError::Format(format!("empty face {text:?}")));
        }
        Ok(Face::new(out))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        serde_json::from_str(text).map_err(|e| ComplexError::Format(e.to_string()))
    }
}
