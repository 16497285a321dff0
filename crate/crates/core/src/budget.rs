use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Limits on the brute-force routines. Exceeding a limit is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Phase evaluations for torus sums and determinant enumerations.
    pub max_phase_evals: u64,
    /// Entries (rows * cols) of a single integer coboundary matrix.
    pub max_matrix_entries: u64,
    /// Entries of a dense cochain table.
    pub max_table_entries: u64,
    /// Largest group the braiding brute force accepts.
    pub max_braiding_group_order: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_phase_evals: 100_000_000,
            max_matrix_entries: 1_000_000,
            max_table_entries: 1_000_000,
            max_braiding_group_order: 9,
        }
    }
}

pub(crate) fn check(what: &'static str, needed: &BigUint, limit: u64) -> Result<u64> {
    match u64::try_from(needed) {
        Ok(n) if n <= limit => Ok(n),
        _ => Err(Error::BudgetExceeded {
            what,
            needed: needed.to_string(),
            limit,
        }),
    }
}
