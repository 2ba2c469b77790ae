//! Homological invariants of GL-invariant ideals in the coordinate ring of
//! generic `m x n` matrices, computed exactly from partitions.

pub mod betti;
pub mod error;
pub mod homology;
pub mod ideals;
pub mod loccoh;
pub mod partitions;
pub mod qpoly;
pub mod schur;

pub use error::{Error, Result};
pub use homology::{DegreeWindow, ZPair};
pub use ideals::{InvariantIdeal, MatrixContext};
pub use partitions::{DominantWeight, Partition};
pub use qpoly::{qbinomial, QPolynomial};
pub use schur::{EquivariantCharacter, IrredTerm};
