//! The Koszul-type resolution: tensor product of the 2-periodic resolutions
//! `... -> ZZ_m --T--> ZZ_m --N--> ZZ_m --T--> ZZ_m -> Z` of the cyclic factors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::group_ring::GroupRingElement;
use crate::algebra::FiniteAbelianGroup;
use crate::error::{Error, Result};

/// Free generator `Φ_{r_1^{λ_1} ... r_l^{λ_l}}` of the Koszul resolution:
/// exponent `λ_i >= 1` at position `r_i`, positions strictly increasing.
///
/// Positions are stored 0-based; the textual key is 1-based, e.g. `"1^1 2^2"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KoszulIndex {
    pairs: Vec<(usize, u32)>,
}

/// One block of an index together with its row interval `[a, b] ⊆ [1, k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub position: usize,
    pub lambda: u32,
    pub a: usize,
    pub b: usize,
}

impl KoszulIndex {
    pub fn new(pairs: Vec<(usize, u32)>) -> Result<Self> {
        if pairs.iter().any(|&(_, l)| l == 0) {
            return Err(Error::Parse("Koszul exponents must be positive".into()));
        }
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Parse(
                "Koszul positions must be strictly increasing".into(),
            ));
        }
        Ok(KoszulIndex { pairs })
    }

    /// Index of `Φ(a_1, ..., a_n)`; zero exponents are skipped.
    pub fn from_exponents(exps: &[u32]) -> Self {
        KoszulIndex {
            pairs: exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(r, &a)| (r, a))
                .collect(),
        }
    }

    pub fn to_exponents(&self, n: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        for &(r, l) in &self.pairs {
            v[r] = l;
        }
        v
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.pairs
    }

    pub fn degree(&self) -> usize {
        self.pairs.iter().map(|&(_, l)| l as usize).sum()
    }

    pub fn leading_position(&self) -> Option<usize> {
        self.pairs.first().map(|&(r, _)| r)
    }

    /// Whether `λ_1` is odd, i.e. the generator can carry a nontrivial cocycle value.
    pub fn leading_exponent_odd(&self) -> bool {
        self.pairs.first().is_some_and(|&(_, l)| l % 2 == 1)
    }

    /// `Σ_{i<j} λ_i λ_j`, the exponent of the sign in the chain map and cocycle formula.
    pub fn sign_exponent(&self) -> u64 {
        let mut acc = 0u64;
        let mut seen = 0u64;
        for &(_, l) in &self.pairs {
            acc += seen * l as u64;
            seen += l as u64;
        }
        acc
    }

    /// Blocks with `a_u = Σ_{i>u} λ_i + 1` and `b_u = Σ_{i>=u} λ_i`; the first
    /// block occupies the last rows.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::with_capacity(self.pairs.len());
        let mut tail: usize = self.degree();
        for &(r, l) in &self.pairs {
            let b = tail;
            let a = tail - l as usize + 1;
            out.push(Block {
                position: r,
                lambda: l,
                a,
                b,
            });
            tail -= l as usize;
        }
        out
    }

    pub fn fits(&self, group: &FiniteAbelianGroup) -> bool {
        self.pairs.last().is_none_or(|&(r, _)| r < group.rank())
    }

    /// Every index of total degree `k` over `n` positions.
    pub fn all(n: usize, k: usize) -> Vec<KoszulIndex> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fill_compositions(&mut exps, 0, k, &mut out);
        out.sort();
        out
    }

    /// Indices of degree `k` with `λ_1` odd: the keys of a cocycle representative.
    pub fn cocycle_keys(n: usize, k: usize) -> Vec<KoszulIndex> {
        Self::all(n, k)
            .into_iter()
            .filter(KoszulIndex::leading_exponent_odd)
            .collect()
    }
}

fn fill_compositions(exps: &mut Vec<u32>, pos: usize, left: usize, out: &mut Vec<KoszulIndex>) {
    if pos == exps.len() {
        if left == 0 {
            out.push(KoszulIndex::from_exponents(exps));
        }
        return;
    }
    for a in 0..=left {
        exps[pos] = a as u32;
        fill_compositions(exps, pos + 1, left - a, out);
    }
    exps[pos] = 0;
}

impl fmt::Display for KoszulIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (r, l)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", r + 1, l)?;
        }
        Ok(())
    }
}

impl FromStr for KoszulIndex {
    type Err = Error;

    /// Parses `"r1^λ1 r2^λ2 ..."` with 1-based positions; a bare `r` means `λ = 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("Koszul index {s:?}: {why}"));
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (r, l) = match tok.split_once('^') {
                Some((r, l)) => (r, l),
                None => (tok, "1"),
            };
            let r: usize = r.parse().map_err(|_| bad("bad position"))?;
            let l: u32 = l.parse().map_err(|_| bad("bad exponent"))?;
            if r == 0 {
                return Err(bad("positions are 1-based"));
            }
            pairs.push((r - 1, l));
        }
        KoszulIndex::new(pairs).map_err(|e| bad(&e.to_string()))
    }
}

impl Serialize for KoszulIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KoszulIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Element `Σ γ_Φ·Φ` of `K_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KoszulChain {
    terms: BTreeMap<KoszulIndex, GroupRingElement>,
}

impl KoszulChain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(group: &FiniteAbelianGroup, idx: KoszulIndex) -> Self {
        let mut c = Self::zero();
        c.add_term(idx, GroupRingElement::one(group));
        c
    }

    pub fn terms(&self) -> &BTreeMap<KoszulIndex, GroupRingElement> {
        &self.terms
    }

    pub fn coefficient(&self, idx: &KoszulIndex) -> GroupRingElement {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: KoszulIndex, coeff: GroupRingElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(slot) => {
                slot.add_assign(&coeff);
                if slot.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &KoszulChain) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &KoszulChain) -> KoszulChain {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.neg());
        }
        out
    }

    /// Left multiplication by a group ring element.
    pub fn scale_left(&self, gamma: &GroupRingElement, group: &FiniteAbelianGroup) -> KoszulChain {
        let mut out = Self::zero();
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), gamma.mul(c, group));
        }
        out
    }

    pub fn scale_int(&self, k: &BigInt) -> KoszulChain {
        let mut out = Self::zero();
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c.scale(k));
        }
        out
    }

    /// Stable JSON: `[{"index": key, "terms": [{"element", "coefficient"}]}]`
    /// sorted by the textual key.
    pub fn to_json(&self) -> Value {
        let mut rows: Vec<(String, Value)> = self
            .terms
            .iter()
            .map(|(idx, c)| (idx.to_string(), json!({"index": idx.to_string(), "terms": ring_terms_json(c)})))
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        Value::Array(rows.into_iter().map(|(_, v)| v).collect())
    }
}

pub(crate) fn ring_terms_json(c: &GroupRingElement) -> Value {
    Value::Array(
        c.terms()
            .iter()
            .map(|(g, k)| json!({"element": g.to_string(), "coefficient": k.to_string()}))
            .collect(),
    )
}

impl fmt::Display for KoszulChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| format!("({c})·Φ[{idx}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `d(Φ(a_1, ..., a_n)) = Σ_i (-1)^{Σ_{l<i} a_l} E_i Φ(..., a_i - 1, ...)`
/// with `E_i = N_i` for even `a_i` and `T_i` for odd `a_i`.
pub fn koszul_diff(group: &FiniteAbelianGroup, idx: &KoszulIndex) -> KoszulChain {
    let n = group.rank();
    let exps = idx.to_exponents(n);
    let mut out = KoszulChain::zero();
    let mut prior = 0u32;
    for i in 0..n {
        let a = exps[i];
        if a > 0 {
            let mut lowered = exps.clone();
            lowered[i] -= 1;
            let e = if a % 2 == 0 {
                GroupRingElement::norm_element(group, i)
            } else {
                GroupRingElement::tee_element(group, i)
            };
            let e = if prior % 2 == 1 { e.neg() } else { e };
            out.add_term(KoszulIndex::from_exponents(&lowered), e);
        }
        prior += a;
    }
    out
}

/// The differential extended `ZG`-linearly.
pub fn koszul_diff_chain(group: &FiniteAbelianGroup, chain: &KoszulChain) -> KoszulChain {
    let mut out = KoszulChain::zero();
    for (idx, c) in chain.terms() {
        out.add_assign(&koszul_diff(group, idx).scale_left(c, group));
    }
    out
}
