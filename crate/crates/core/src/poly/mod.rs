//! Polynomial layer: univariate and bivariate arithmetic, term orders, the
//! divided-difference construction, and the bivariate gcd oracle.

mod bipoly;
mod gcd;
mod monomial;
mod unipoly;

use thiserror::Error;

pub use bipoly::{divided_difference, substitute_diagonal, BiPoly};
pub use gcd::bivariate_gcd;
pub use monomial::{Monomial, OrderKind, TermOrder, Var};
pub use unipoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("all inputs are zero")]
    AllZero,
}
