//! Negative information over finite categories.
//!
//! * [`poset`]: finite preorders and closed subsets.
//! * [`dp`]: design problems, monotone Boolean relations between preorders.
//! * [`norphism`]: bans on design problems, their joins and exact propagation.
//! * [`nategory`]: finite categories with extensional norphisms and the
//!   equivariance, expansiveness and monotonicity checkers.
//! * [`metric`]: lower-bound norphisms on path categories and A* search.

pub mod dp;
pub mod error;
pub mod gen;
pub mod matrix;
pub mod metric;
pub mod nategory;
pub mod norphism;
pub mod poset;

pub use error::{Axis, Error, Result};
pub use matrix::BoolMatrix;

/// Which end of a hom-set a morphism is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Precomposed: attached at the domain.
    Pre,
    /// Postcomposed: attached at the codomain.
    Post,
}
