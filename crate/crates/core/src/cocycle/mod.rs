//! Cocycle representatives, their evaluation on `G^k`, coboundary tests and
//! cohomology orders.

pub mod cohomology;
pub mod spec;
pub mod table;

pub use cohomology::{
    cohomology_order_bruteforce, cohomology_order_closed, cohomology_order_closed_exponent,
    CohomologyOrder,
};
pub use spec::{enumerate_representatives, eval_cocycle, eval_koszul_pairing, representative_count, CocycleSpec};
pub use table::{coboundary, coboundary_matrix, is_coboundary, is_cocycle, CochainTable};
