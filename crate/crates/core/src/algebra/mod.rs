//! Exact arithmetic foundation: groups, `Q/Z` phases, cyclotomic sums and
//! integer matrices.

pub mod arith;
pub mod cyclotomic;
pub mod group;
pub mod matrix;
pub mod phase;

pub use arith::carry;
pub use cyclotomic::CyclotomicSum;
pub use group::{invariant_factors, FiniteAbelianGroup, GroupElement};
pub use matrix::{smith_invariant_factors, smith_normal_form, IntegerMatrix, SmithForm};
pub use phase::Phase;
