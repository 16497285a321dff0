use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::torus::dw_bruteforce;
use crate::algebra::{smith_invariant_factors, FiniteAbelianGroup, GroupElement, IntegerMatrix, Phase};
use crate::budget::{check, Budget};
use crate::cocycle::CocycleSpec;
use crate::error::{Error, Result};
use crate::resolution::KoszulIndex;

/// Degree-2 coefficients `a_rs = a_{r s}` for `r < s` (0-based), zeros omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCocycleParams {
    pub a_rs: BTreeMap<(usize, usize), u64>,
}

impl TwoCocycleParams {
    pub fn validate(&self, group: &FiniteAbelianGroup) -> Result<()> {
        for (&(r, s), &a) in &self.a_rs {
            if r >= s || s >= group.rank() {
                return Err(Error::InvalidSpec(format!("pair ({}, {}) is not r < s <= {}", r + 1, s + 1, group.rank())));
            }
            if a >= group.modulus(r) {
                return Err(Error::InvalidSpec(format!("a_{{{}{}}} = {a} is not below {}", r + 1, s + 1, group.modulus(r))));
            }
        }
        Ok(())
    }

    pub fn from_spec(spec: &CocycleSpec) -> Result<Self> {
        if spec.degree() != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                found: spec.degree(),
            });
        }
        let mut a_rs = BTreeMap::new();
        for (key, &a) in spec.coeffs() {
            match key.pairs() {
                [(r, 1), (s, 1)] => {
                    a_rs.insert((*r, *s), a);
                }
                _ => unreachable!("degree-2 key with odd leading exponent"),
            }
        }
        Ok(TwoCocycleParams { a_rs })
    }

    pub fn to_spec(&self, group: &FiniteAbelianGroup) -> Result<CocycleSpec> {
        self.validate(group)?;
        let coeffs = self
            .a_rs
            .iter()
            .map(|(&(r, s), &a)| Ok((KoszulIndex::new(vec![(r, 1), (s, 1)])?, a)))
            .collect::<Result<Vec<_>>>()?;
        CocycleSpec::new(group.clone(), 2, coeffs)
    }

    /// `ω(x, y) = -Σ_{r<s} a_rs i_s j_r / m_r` for `x = g^i`, `y = g^j`.
    pub fn eval(&self, group: &FiniteAbelianGroup, x: &GroupElement, y: &GroupElement) -> Phase {
        let (i, j) = (x.exps(), y.exps());
        self.a_rs
            .iter()
            .map(|(&(r, s), &a)| Phase::new(-((a * i[s] * j[r]) as i128), group.modulus(r)))
            .sum()
    }
}

/// `|{x : ω(x, y) = ω(y, x) for all y}|`, by checking every pair.
pub fn omega_regular_count(group: &FiniteAbelianGroup, p: &TwoCocycleParams, budget: &Budget) -> Result<u64> {
    p.validate(group)?;
    let order = group.order();
    check("regularity checks", &(&order * &order), budget.max_phase_evals)?;
    let elems: Vec<GroupElement> = group.elements().collect();
    let count = elems
        .iter()
        .filter(|x| elems.iter().all(|y| p.eval(group, x, y) == p.eval(group, y, x)))
        .count();
    Ok(count as u64)
}

/// `(|G_0|, dim)` from the Smith form of the antisymmetric matrix
/// `b_ij = (m_l/m_i) a_ij`: `|G_0| = |G| / ∏ m_l/(m_l, λ_i)` and
/// `dim = sqrt(|G| / |G_0|)`.
pub fn projrep_dims(group: &FiniteAbelianGroup, p: &TwoCocycleParams) -> Result<(BigUint, BigUint)> {
    p.validate(group)?;
    let l = group.rank();
    let ml = group.modulus(l - 1);
    let mut b = IntegerMatrix::zeros(l, l);
    for (&(i, j), &a) in &p.a_rs {
        let v = BigInt::from(ml / group.modulus(i)) * BigInt::from(a);
        b.set(i, j, v.clone());
        b.set(j, i, -v);
    }
    let mut index = BigUint::from(1u32);
    for lambda in smith_invariant_factors(&b) {
        let lambda = lambda.abs().to_u64().expect("invariant factor below m_l^2");
        index *= ml / ml.gcd(&lambda);
    }
    let (g0, rem) = group.order().div_rem(&index);
    if rem != BigUint::from(0u32) {
        return Err(Error::NonIntegral(format!("{} / {index}", group.order())));
    }
    let dim = index.sqrt();
    if &dim * &dim != index {
        return Err(Error::NonSquare(index.to_string()));
    }
    Ok((g0, dim))
}

/// The three routes to `Z(T^2)`: the torus sum, the regular-element count
/// and the Smith form formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuraevReport {
    pub dw_t2: BigInt,
    pub regular_count: u64,
    pub snf_g0: BigUint,
    pub dim: BigUint,
}

impl TuraevReport {
    pub fn holds(&self) -> bool {
        self.dw_t2 == BigInt::from(self.regular_count) && BigUint::from(self.regular_count) == self.snf_g0
    }
}

pub fn turaev_check(group: &FiniteAbelianGroup, p: &TwoCocycleParams, budget: &Budget) -> Result<TuraevReport> {
    let spec = p.to_spec(group)?;
    let dw = dw_bruteforce(group, &spec, 2, budget)?;
    let regular_count = omega_regular_count(group, p, budget)?;
    let (snf_g0, dim) = projrep_dims(group, p)?;
    Ok(TuraevReport {
        dw_t2: dw.value,
        regular_count,
        snf_g0,
        dim,
    })
}
