use std::collections::BTreeMap;

use crate::algebra::arith::carry_unchecked;
use crate::algebra::{FiniteAbelianGroup, GroupElement, Phase};
use crate::cocycle::CocycleSpec;
use crate::error::{Error, Result};
use crate::resolution::KoszulIndex;

/// Degree-3 coefficients in the short notation: `a_r = a_{r^3}`,
/// `a_rs = a_{r s^2}` and `a_rst = a_{r s t}`. Positions are 0-based and
/// zero entries of the maps are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeCocycleParams {
    pub a_r: Vec<u64>,
    pub a_rs: BTreeMap<(usize, usize), u64>,
    pub a_rst: BTreeMap<(usize, usize, usize), u64>,
}

impl ThreeCocycleParams {
    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        ThreeCocycleParams {
            a_r: vec![0; group.rank()],
            a_rs: BTreeMap::new(),
            a_rst: BTreeMap::new(),
        }
    }

    pub fn from_spec(spec: &CocycleSpec) -> Result<Self> {
        if spec.degree() != 3 {
            return Err(Error::DegreeMismatch {
                expected: 3,
                found: spec.degree(),
            });
        }
        let mut p = Self::trivial(spec.group());
        for (key, &a) in spec.coeffs() {
            match key.pairs() {
                [(r, 3)] => p.a_r[*r] = a,
                [(r, 1), (s, 2)] => {
                    p.a_rs.insert((*r, *s), a);
                }
                [(r, 1), (s, 1), (t, 1)] => {
                    p.a_rst.insert((*r, *s, *t), a);
                }
                _ => unreachable!("degree-3 key with odd leading exponent"),
            }
        }
        Ok(p)
    }

    pub fn to_spec(&self, group: &FiniteAbelianGroup) -> Result<CocycleSpec> {
        if self.a_r.len() != group.rank() {
            return Err(Error::InvalidSpec(format!(
                "{} diagonal coefficients for a group of rank {}",
                self.a_r.len(),
                group.rank()
            )));
        }
        let mut coeffs = Vec::new();
        for (r, &a) in self.a_r.iter().enumerate() {
            coeffs.push((KoszulIndex::new(vec![(r, 3)])?, a));
        }
        for (&(r, s), &a) in &self.a_rs {
            coeffs.push((KoszulIndex::new(vec![(r, 1), (s, 2)])?, a));
        }
        for (&(r, s, t), &a) in &self.a_rst {
            coeffs.push((KoszulIndex::new(vec![(r, 1), (s, 1), (t, 1)])?, a));
        }
        CocycleSpec::new(group.clone(), 3, coeffs)
    }
}

/// `Σ_r a_r i_r [(j_r+k_r)/m_r]/m_r + Σ_{r<s} a_rs k_r [(i_s+j_s)/m_s]/m_r
/// - Σ_{r<s<t} a_rst k_r j_s i_t/m_r` for `x = g^i`, `y = g^j`, `z = g^k`.
pub fn eval_three_cocycle(
    group: &FiniteAbelianGroup,
    p: &ThreeCocycleParams,
    x: &GroupElement,
    y: &GroupElement,
    z: &GroupElement,
) -> Phase {
    let (i, j, k) = (x.exps(), y.exps(), z.exps());
    let m = |r: usize| group.modulus(r);
    let mut total = Phase::ZERO;
    for (r, &a) in p.a_r.iter().enumerate() {
        if a != 0 {
            let e = a * i[r] * carry_unchecked(j[r], k[r], m(r));
            total += Phase::new(e as i128, m(r));
        }
    }
    for (&(r, s), &a) in &p.a_rs {
        let e = a * k[r] * carry_unchecked(i[s], j[s], m(s));
        total += Phase::new(e as i128, m(r));
    }
    for (&(r, s, t), &a) in &p.a_rst {
        let e = a * k[r] * j[s] * i[t];
        total -= Phase::new(e as i128, m(r));
    }
    total
}
