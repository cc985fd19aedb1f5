//! Yangian and twisted Yangian actions on tensor products of fundamental
//! modules: operator-valued T(x), S(x), their series coefficients, intertwining
//! checks, quotients, irreducibility and the so-even splitting.

mod module;
mod series;
mod spec;
mod verify;
mod wedge;

pub use module::{burnside_irreducible, check_complement_map, commutant, default_depth, equivalent, generated_algebra_dim, intertwiner_space, quotient_module, similar, split_so_even, trace_ratio, QuotientModule, SplitModule, Summand};
pub use series::{check_coideal, check_twisted_evaluation, eval_hom, eval_series, factor_series, Generators, SeriesAction};
pub use spec::{factor_generators, factor_t_at, FundamentalFactor, ModuleSpec, OpMatrix, Sign};
pub use verify::{intertwines_at, sample_points, spec_poles, verify_intertwiner_i, verify_intertwiner_j};
pub use wedge::{complement_map, conjugate_creation_annihilation, creation_annihilation, permutation_sign};
