//! Exact R-matrix fusion: intertwining operators for tensor products of
//! fundamental Yangian modules, their regularized values at non-generic
//! weights, and the irreducible quotients they cut out.

pub mod error;
pub mod fusion;
pub mod qlinalg;
pub mod report;
pub mod rmat;
pub mod suites;
pub mod tensor;
pub mod weights;
pub mod yangian;

pub use error::{Error, Result};
pub use qlinalg::{ExactMatrix, Field, Limit, Matrix, Poly, QuadExt, RatFunc, Rational};
pub use tensor::{FormChoice, FormKind, SegmentShape, TensorOperator, TensorSpace, WedgeBasis};
pub use weights::{Algebra, SignedPermutation, WeightPair};

