//! Exact commutative algebra over prime fields and the lattice toolkit
//! behind the reproduction scenes.

pub mod ff;
pub mod lattice;
pub mod mpoly;
pub mod groebner;
pub mod linalg;
pub mod idealops;
pub mod invariants;
pub mod homalg;
pub mod scenes;

use thiserror::Error;

pub use ff::{FieldElement, PrimeField};
pub use groebner::{buchberger, BettiTable, GroebnerBasis};
pub use idealops::Ideal;
pub use lattice::{ClassKind, PicClass};
pub use mpoly::{MonomialOrder, PolyMatrix, PolyRing, Polynomial, Ring, RingMap};
pub use scenes::{run_all, run_scene, GoldenTable, SceneReport};

/// Any kernel error, for callers that drive several modules at once.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] ff::FieldError),
    #[error(transparent)]
    Poly(#[from] mpoly::PolyError),
    #[error(transparent)]
    Syntax(#[from] mpoly::SyntaxError),
    #[error(transparent)]
    Groebner(#[from] groebner::GroebnerError),
    #[error(transparent)]
    Ideal(#[from] idealops::IdealError),
    #[error(transparent)]
    Invariants(#[from] invariants::InvariantsError),
    #[error(transparent)]
    Homalg(#[from] homalg::HomalgError),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
}
