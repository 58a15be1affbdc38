//! Coxeter complexes, characteristic matrices, induced subcomplexes and
//! poset complexes.

pub mod cache_format;
pub mod coxeter;
pub mod poset;
pub mod signed;
pub mod simplicial;
pub mod subset;

pub use coxeter::{
    build_coxeter_complex, characteristic_matrix, characteristic_matrix_of, induced_subcomplex,
    involution_phi, is_vertex, lambda_mod2, swap_psi, vertex_partition_oracle, CharacteristicMatrix,
    CoxeterComplex,
};
pub use poset::{by_inclusion, rank_selected_complex, reduced_poset_complex, PosetComplex, RankSelectedKind};
pub use signed::SignedSubset;
pub use simplicial::{f_h_vector, Face, SimplicialComplex};
pub use subset::Subset;
