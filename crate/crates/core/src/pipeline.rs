//! Everything derived from one space: preorders, decomposition, the three
//! order complexes and their (co)chain complexes.

use crate::complex::{
    chain_complex, cochain, order_complex, relative_chain_complex, ChainComplex, Relation, SimplicialComplex,
};
use crate::order::{decompose_with, is_poset, strictify, Decomposition, RepresentativePolicy};
use crate::space::{FiniteSpace, Preorder};

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub space: FiniteSpace,
    /// Specialisation preorder `≤`.
    pub preorder: Preorder,
    /// Its strictification `⪯`.
    pub strict: Preorder,
    pub decomposition: Decomposition,
    pub is_poset: bool,
    /// Order complex of the poset part under `≤`.
    pub poset_complex: SimplicialComplex,
    /// Order complex of the poset part under `⪯`; equal to `poset_complex`.
    pub poset_complex_strict: SimplicialComplex,
    /// Order complex of the whole space under `⪯`.
    pub ambient_complex: SimplicialComplex,
    pub poset_chain: ChainComplex,
    pub poset_cochain: ChainComplex,
    pub ambient_chain: ChainComplex,
    pub ambient_cochain: ChainComplex,
    /// Ambient chains modulo the poset part (under `⪯`).
    pub relative_chain: ChainComplex,
    pub relative_cochain: ChainComplex,
}

impl Pipeline {
    pub fn new(space: &FiniteSpace) -> Self {
        Self::with_policy(space, RepresentativePolicy::Least)
    }

    pub fn with_policy(space: &FiniteSpace, policy: RepresentativePolicy) -> Self {
        let preorder = space.specialisation_preorder();
        let strict = strictify(&preorder);
        let decomposition = decompose_with(&preorder, policy);
        let reps = &decomposition.representatives;
        let poset_complex =
            order_complex(&preorder, reps, Relation::Given).expect("representatives are antisymmetric under <=");
        let poset_complex_strict =
            order_complex(&preorder, reps, Relation::Strict).expect("strictification is antisymmetric");
        let ambient_complex =
            order_complex(&preorder, preorder.points(), Relation::Strict).expect("strictification is antisymmetric");
        let poset_chain = chain_complex(&poset_complex);
        let ambient_chain = chain_complex(&ambient_complex);
        let relative_chain = relative_chain_complex(&ambient_chain, &chain_complex(&poset_complex_strict))
            .expect("poset part is a subcomplex");
        let dual = |c: &ChainComplex| cochain(c).expect("chain complexes dualize");
        Self {
            space: space.clone(),
            is_poset: is_poset(&preorder),
            poset_cochain: dual(&poset_chain),
            ambient_cochain: dual(&ambient_chain),
            relative_cochain: dual(&relative_chain),
            preorder,
            strict,
            decomposition,
            poset_complex,
            poset_complex_strict,
            ambient_complex,
            poset_chain,
            ambient_chain,
            relative_chain,
        }
    }

    /// Every complex the pipeline produces, with a name.
    pub fn chain_complexes(&self) -> [(&'static str, &ChainComplex); 6] {
        [
            ("poset chain", &self.poset_chain),
            ("poset cochain", &self.poset_cochain),
            ("ambient chain", &self.ambient_chain),
            ("ambient cochain", &self.ambient_cochain),
            ("relative chain", &self.relative_chain),
            ("relative cochain", &self.relative_cochain),
        ]
    }
}
