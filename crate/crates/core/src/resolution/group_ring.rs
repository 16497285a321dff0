use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{FiniteAbelianGroup, GroupElement};

/// Sparse element `Σ c_g·g` of the integral group ring `ZG`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self::from_element(group.identity())
    }

    pub fn from_element(g: GroupElement) -> Self {
        Self::from_term(g, BigInt::one())
    }

    pub fn from_term(g: GroupElement, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero();
        x.add_term(g, c);
        x
    }

    /// The integer `n` as `n·1`.
    pub fn from_int(group: &FiniteAbelianGroup, n: impl Into<BigInt>) -> Self {
        Self::from_term(group.identity(), n)
    }

    /// `N_r = Σ_{j < m_r} g_r^j` (0-based position `r`).
    pub fn norm_element(group: &FiniteAbelianGroup, r: usize) -> Self {
        Self::geometric(group, r, group.modulus(r))
    }

    /// `T_r = g_r - 1`.
    pub fn tee_element(group: &FiniteAbelianGroup, r: usize) -> Self {
        let mut x = Self::from_element(group.generator(r));
        x.add_term(group.identity(), -1);
        x
    }

    /// `(g_r)_c = Σ_{j < c} g_r^j`; zero when `c = 0`.
    pub fn geometric(group: &FiniteAbelianGroup, r: usize, c: u64) -> Self {
        let mut x = Self::zero();
        let mut exps = vec![0u64; group.rank()];
        for j in 0..c {
            exps[r] = j % group.modulus(r);
            x.add_term(GroupElement::from_raw(exps.clone()), 1);
        }
        x
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: GroupElement, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &GroupRingElement) {
        for (g, c) in &other.terms {
            self.add_term(g.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut x = self.clone();
        x.add_assign(other);
        x
    }

    pub fn sub(&self, other: &GroupRingElement) -> GroupRingElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupRingElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> GroupRingElement {
        if k.is_zero() {
            return Self::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by a group element, `h·x`.
    pub fn shift(&self, group: &FiniteAbelianGroup, h: &GroupElement) -> GroupRingElement {
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (group.op(g, h), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &GroupRingElement, group: &FiniteAbelianGroup) -> GroupRingElement {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(group.op(g, h), a * b);
            }
        }
        out
    }

    /// Augmentation `ε(Σ c_g g) = Σ c_g`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("{c}·({g})"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
