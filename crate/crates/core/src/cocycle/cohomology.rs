use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::table::coboundary_matrix;
use crate::algebra::{smith_invariant_factors, FiniteAbelianGroup};
use crate::budget::Budget;
use crate::error::Result;

/// `|H^k(G, k*)|` together with its decomposition `∏_r Z_{m_r}^{N_{k,r}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyOrder {
    pub order: BigUint,
    /// `(m_r, N_{k,r})` per position `r`.
    pub factors: Vec<(u64, u64)>,
}

impl CohomologyOrder {
    /// Exponents merged by modulus, e.g. `{2: 3}` for `Z_2^3`.
    pub fn factor_map(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &(m, e) in &self.factors {
            if e > 0 {
                *out.entry(m).or_insert(0) += e;
            }
        }
        out
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `N_{k,r} = Σ_{j=1}^{k} (-1)^{k+j} C(n-r+j-1, j-1)` for a 1-based position `r`.
pub fn cohomology_order_closed_exponent(n: usize, k: usize, r: usize) -> BigUint {
    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for j in 1..=k {
        let c = binomial((n - r + j - 1) as u64, (j - 1) as u64);
        if (k + j) % 2 == 0 {
            pos += c;
        } else {
            neg += c;
        }
    }
    pos - neg
}

pub fn cohomology_order_closed(group: &FiniteAbelianGroup, k: usize) -> CohomologyOrder {
    let n = group.rank();
    let mut order = BigUint::one();
    let mut factors = Vec::with_capacity(n);
    for r in 1..=n {
        let e = cohomology_order_closed_exponent(n, k, r);
        let m = group.modulus(r - 1);
        order *= BigUint::from(m).pow(u32::try_from(&e).expect("exponent fits"));
        factors.push((m, u64::try_from(&e).expect("exponent fits")));
    }
    CohomologyOrder { order, factors }
}

/// `|H^{k+1}(G, Z)|` from the Smith forms of the integer coboundary maps on
/// normalized cochains. Torsion of `ker δ_{k+1} / im δ_k` is the product of
/// the nonzero invariant factors of `δ_k`; the free part must vanish.
pub fn cohomology_order_bruteforce(group: &FiniteAbelianGroup, k: usize, budget: &Budget) -> Result<BigUint> {
    let dk = coboundary_matrix(group, k, budget)?;
    let dk1 = coboundary_matrix(group, k + 1, budget)?;
    let fk = smith_invariant_factors(&dk);
    let fk1 = smith_invariant_factors(&dk1);
    let free_rank = dk.rows() - fk.len() - fk1.len();
    assert_eq!(free_rank, 0, "H^{}({group}, Z) has a free part", k + 1);
    Ok(fk.iter().map(|d| d.magnitude().clone()).product())
}
