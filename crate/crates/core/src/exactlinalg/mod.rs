//! Exact linear algebra kernels.

pub mod bitmatrix;
pub mod rank;
pub mod snf;
pub mod sparse;

pub use bitmatrix::{gf2_rank_rowspace, BitMatrix, RowSpace};
pub use rank::{bareiss_rank, dense_rank, field_rank, reduce_columns, RankField, Reduction};
pub use snf::{dense_snf, smith_normal_form, SnfResult};
pub use sparse::SparseIntMatrix;
