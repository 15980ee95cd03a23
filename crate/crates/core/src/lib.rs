//! Separation clique complexes on subsets of `[n]`.
//!
//! * [`sepsets`]: subsets as bitmasks, strong/weak separation, frozen sets,
//!   and the `G = <α, w0>` action.
//! * [`scomplex`]: facet-based simplicial complexes, local subcomplexes,
//!   coverings and nerves, collapses, isomorphism.
//! * [`homology`]: reduced integer homology via sparse Smith normal form.
//! * [`sepcx`]: the complexes `Δ̂_ws(n)`, `Δ̂_ss(n)`, the cross-polytope
//!   subcomplex `K`, the retraction data `π′`, and combinatorial checks.
//! * [`report`]: check reports and the full reproduction run.

pub mod homology;
pub mod report;
pub mod scomplex;
pub mod sepcx;
pub mod sepsets;
