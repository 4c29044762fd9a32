//! (Co)homology of finite topological spaces under the specialisation
//! preorder.
//!
//! A finite space splits into a *poset part* (one point per class of
//! topologically indistinguishable points) and a *complementary part* (the
//! rest). The crate builds the order complex of the poset part, the relative
//! complex of the whole space modulo the poset part, splices their cochain
//! complexes into one long complex, and computes all groups over ℤ with the
//! Smith normal form.
//!
//! ```
//! use prehom::{fixtures, pipeline::Pipeline, splice::{splice, spliced_cohomology, Pattern}};
//!
//! let p = Pipeline::new(&fixtures::pseudo_s1_dup());
//! assert_eq!(p.decomposition.complementary, vec!["c'".to_string()]);
//!
//! let s = splice(&[p.poset_cochain.clone(), p.relative_cochain.clone()], 3, &Pattern::RoundRobin).unwrap();
//! let groups: Vec<String> = spliced_cohomology(&s, 5).iter().map(|g| g.to_string()).collect();
//! assert_eq!(groups, ["Z", "Z", "0", "0", "Z", "0"]);
//! ```

pub mod complex;
pub mod fixtures;
pub mod homology;
pub mod matrix;
pub mod order;
pub mod pipeline;
pub mod random;
pub mod report;
pub mod space;
pub mod spacefile;
pub mod splice;

pub use complex::{ChainComplex, Direction, SimplicialComplex};
pub use homology::GroupPresentation;
pub use order::Decomposition;
pub use space::{FiniteSpace, Preorder};
