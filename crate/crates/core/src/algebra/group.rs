use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `Z_{m_1} x ... x Z_{m_n}` in invariant-factor form, `m_i | m_{i+1}`.
///
/// The empty modulus list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

/// Exponent vector `(a_1, ..., a_n)` of `g_1^{a_1} ... g_n^{a_n}`, reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub(crate) fn from_raw(exps: Vec<u64>) -> Self {
        GroupElement(exps)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Parses `"a1,a2,...,an"`. The empty string is the element of the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GroupElement(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("group element {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidModulus(m));
        }
        for w in moduli.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::DivisibilityViolation(w[0], w[1]));
            }
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    /// Canonical form of an arbitrary product of cyclic groups.
    pub fn from_cyclic_factors(factors: &[u64]) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidModulus(0));
        }
        Self::new(invariant_factors(factors))
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of cyclic factors `n`.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn modulus(&self, r: usize) -> u64 {
        self.moduli[r]
    }

    pub fn order(&self) -> BigUint {
        self.moduli.iter().map(|&m| BigUint::from(m)).product()
    }

    /// The order as a machine integer, for enumerations. Panics on overflow,
    /// which no enumerable group reaches.
    pub fn order_usize(&self) -> usize {
        self.moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .expect("group order overflows usize")
    }

    /// Exponent of the group, `lcm(m_i) = m_n` (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.moduli.last().copied().unwrap_or(1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Generator `g_r` for a 0-based position `r`.
    pub fn generator(&self, r: usize) -> GroupElement {
        let mut e = vec![0; self.rank()];
        e[r] = 1;
        GroupElement(e)
    }

    /// Builds an element, reducing each exponent modulo its factor.
    pub fn element_reduced(&self, exps: &[i64]) -> Result<GroupElement> {
        if exps.len() != self.rank() {
            return Err(Error::GroupMismatch(format!(
                "expected {} exponents, got {}",
                self.rank(),
                exps.len()
            )));
        }
        Ok(GroupElement(
            exps.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| a.rem_euclid(m as i64) as u64)
                .collect(),
        ))
    }

    /// Accepts only already-reduced exponents.
    pub fn element(&self, exps: Vec<u64>) -> Result<GroupElement> {
        let g = GroupElement(exps);
        self.check(&g)?;
        Ok(g)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.moduli).all(|(a, m)| a < m)
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("({g}) is not in Z{:?}", self.moduli)))
        }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.op(g, h))
    }

    pub fn pow(&self, g: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.pow_unchecked(g, k))
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.pow(g, -1)
    }

    pub(crate) fn op(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.moduli)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
        )
    }

    pub(crate) fn pow_unchecked(&self, g: &GroupElement, k: i64) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| {
                    let m = m as i128;
                    ((a as i128 * k as i128).rem_euclid(m)) as u64
                })
                .collect(),
        )
    }

    /// Mixed-radix index; the last coordinate varies fastest.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&a, &m)| acc * m as usize + a as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut exps = vec![0; self.rank()];
        for (slot, &m) in exps.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        GroupElement(exps)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order_usize()).map(move |i| self.element_at(i))
    }

    /// All elements other than the identity, in index order.
    pub fn nonidentity_elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (1..self.order_usize()).map(move |i| self.element_at(i))
    }

    /// `table[i * |G| + j]` is the index of `element_at(i) * element_at(j)`.
    pub(crate) fn multiplication_table(&self) -> Vec<usize> {
        let order = self.order_usize();
        let elems: Vec<_> = self.elements().collect();
        let mut table = Vec::with_capacity(order * order);
        for g in &elems {
            for h in &elems {
                table.push(self.index_of(&self.op(g, h)));
            }
        }
        table
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<_> = self.moduli.iter().map(|m| format!("Z{m}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// Invariant factors of `Z_{d_1} x ... x Z_{d_k}`, ascending, factors equal to
/// 1 dropped. Every input must be at least 1.
pub fn invariant_factors(moduli: &[u64]) -> Vec<u64> {
    // prime -> exponents of that prime across the factors
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in moduli {
        for (p, e) in factorize(d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (p, mut exps) in by_prime {
        // largest prime powers go to the largest invariant factors
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, e) in out.iter_mut().rev().zip(exps) {
            *slot *= p.pow(e);
        }
    }
    out
}

/// Trial-division factorization, primes ascending.
pub fn factorize(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            let mut e = 0;
            while d % p == 0 {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

pub(crate) fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v))
}
