//! Tensor powers of C^n: elementary two-slot operators, the bilinear form,
//! antisymmetrizers, wedge subspaces and segment permutations.

mod antisym;
mod elementary;
mod form;
mod segment;
mod space;
mod sparse;
mod wedge;

pub use antisym::{antisymmetrizer_direct, antisymmetrizer_fusion};
pub use elementary::{op_p, op_pbar, op_phat, op_ptilde, Elementary, Placed};
pub use form::{FormChoice, FormKind};
pub use segment::SegmentShape;
pub use space::TensorSpace;
pub use sparse::{LinearOp, SlotPermutation, SparseVec, TensorOperator};
pub use wedge::{binomial, factorial, increasing_tuples, signed_permutations, WedgeBasis};
