//! Exact combinatorics of rank-2 affine MV polytopes.
//!
//! The crystal `B(−∞)` for `ŝl₂` and `A₂⁽²⁾` is realized on decorated
//! pseudo-Weyl polytopes, i.e. pairs of Lusztig data of equal weight. The
//! central operation is [`transition`]: given the Lusztig datum on one side,
//! find the unique datum on the other side making the pair an MV polytope.
//! [`verify`] machine-checks the characterization of these polytopes on
//! exhaustively enumerated inputs.
//!
//! All arithmetic is exact: roots are integer pairs over the simple roots.

pub mod crystal;
pub mod document;
pub mod error;
pub mod lusztig;
pub mod polytope;
pub mod render;
pub mod root_data;
pub mod transition;
pub mod verify;

pub use crystal::{Crystal, CrystalElement, CrystalGraph, Op};
pub use error::{Error, Result};
pub use lusztig::{enumerate_data, LusztigDatum, Partition};
pub use polytope::{DecoratedPolytope, MvVerdict, VertexFan, Violation};
pub use root_data::{AlgebraKind, Family, Node, RealRoot, RootVector};
pub use transition::{
    complete_from_left, complete_from_right, transition_l_to_r, transition_r_to_l, Side, Solver,
    Strategy,
};
pub use verify::{Check, Report};
