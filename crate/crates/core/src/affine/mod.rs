//! The affine (super)algebra: modes, PBW normal ordering, the Shapovalov
//! form, and exact weight-space dimensions.

mod bracket;
mod element;
mod mode;
mod monomial;
mod pn;
mod shapovalov;
mod state;
mod straighten;

pub use bracket::affine_bracket;
pub use element::AlgebraElement;
pub use mode::Mode;
pub use monomial::{dagger_word, PbwMonomial};
pub use pn::{enumerate_pn, hw_weight_basis, negative_monomials};
pub use shapovalov::{
    hw_shapovalov_matrix, hw_verma_dim, relaxed_dim, relaxed_dim_lowest_grade_direct,
    shapovalov_matrix, ShapMatrixResult,
};
pub use state::{ActionCtx, GroundKey, GroundModel, RelaxedState};
pub use straighten::Straightener;
