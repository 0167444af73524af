//! Exact arithmetic for the tetrahedron algebra realized inside the
//! three-point sl2 loop algebra.
//!
//! The crate is layered: [`rational`] and [`poly`] provide scalars and
//! polynomials, [`ring`] the localization `F[t, 1/t, 1/(t-1)]` with its
//! order-3 automorphism, [`loop_alg`] the loop algebra with the twelve
//! standard generator images, and [`onsager`] the Onsager subalgebra
//! machinery (sequences, bases, coordinate extraction, transitions).

pub mod loop_alg;
pub mod onsager;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod verify;

pub use loop_alg::{
    bracket, decompose_nine, decompose_x, is_in_onsager, is_like, is_like_definitional,
    std_gen, verify_tetra_relations, GeneratorId, LoopElem, NineGrid,
};
pub use poly::Poly;
pub use rational::Rational;
pub use report::{Check, Report};
pub use ring::{split_frame, CanonExpansion, RingElem, SubspaceKind};
