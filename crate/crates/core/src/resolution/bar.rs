//! The normalized bar resolution. Symbols with an identity entry are zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::group_ring::GroupRingElement;
use super::koszul::ring_terms_json;
use crate::algebra::{FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};

/// `[h_1, ..., h_k]`; the empty symbol is the degree-0 generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BarSymbol(pub Vec<GroupElement>);

impl BarSymbol {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.iter().any(GroupElement::is_identity)
    }
}

impl fmt::Display for BarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

impl FromStr for BarSymbol {
    type Err = Error;

    /// Parses `"[1,0|0,1]"` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(BarSymbol(Vec::new()));
        }
        inner.split('|').map(str::parse).collect::<Result<Vec<_>>>().map(BarSymbol)
    }
}

/// Element `Σ γ_σ·σ` of the normalized `B_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BarChain {
    terms: BTreeMap<BarSymbol, GroupRingElement>,
}

impl BarChain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(group: &FiniteAbelianGroup, sym: BarSymbol) -> Self {
        let mut c = Self::zero();
        c.add_term(sym, GroupRingElement::one(group));
        c
    }

    pub fn terms(&self) -> &BTreeMap<BarSymbol, GroupRingElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, sym: &BarSymbol) -> GroupRingElement {
        self.terms.get(sym).cloned().unwrap_or_default()
    }

    /// Adds `coeff·sym`; degenerate symbols are dropped.
    pub fn add_term(&mut self, sym: BarSymbol, coeff: GroupRingElement) {
        if coeff.is_zero() || sym.is_degenerate() {
            return;
        }
        match self.terms.get_mut(&sym) {
            Some(slot) => {
                slot.add_assign(&coeff);
                if slot.is_zero() {
                    self.terms.remove(&sym);
                }
            }
            None => {
                self.terms.insert(sym, coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &BarChain) {
        for (sym, c) in &other.terms {
            self.add_term(sym.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &BarChain) -> BarChain {
        let mut out = self.clone();
        for (sym, c) in &other.terms {
            out.add_term(sym.clone(), c.neg());
        }
        out
    }

    pub fn scale_left(&self, gamma: &GroupRingElement, group: &FiniteAbelianGroup) -> BarChain {
        let mut out = Self::zero();
        for (sym, c) in &self.terms {
            out.add_term(sym.clone(), gamma.mul(c, group));
        }
        out
    }

    pub fn scale_int(&self, k: &BigInt) -> BarChain {
        let mut out = Self::zero();
        for (sym, c) in &self.terms {
            out.add_term(sym.clone(), c.scale(k));
        }
        out
    }

    /// Stable JSON: `[{"symbol": "[..|..]", "terms": [...]}]` sorted by symbol text.
    pub fn to_json(&self) -> Value {
        let mut rows: Vec<(String, Value)> = self
            .terms
            .iter()
            .map(|(s, c)| (s.to_string(), json!({"symbol": s.to_string(), "terms": ring_terms_json(c)})))
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        Value::Array(rows.into_iter().map(|(_, v)| v).collect())
    }
}

impl fmt::Display for BarChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("({c})·{s}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `∂[h_1|...|h_k] = h_1[h_2|...] + Σ (-1)^u [...|h_u h_{u+1}|...] + (-1)^k [h_1|...|h_{k-1}]`.
pub fn bar_diff(group: &FiniteAbelianGroup, sym: &BarSymbol) -> BarChain {
    let h = sym.entries();
    let k = h.len();
    let mut out = BarChain::zero();
    if k == 0 {
        return out;
    }
    out.add_term(
        BarSymbol(h[1..].to_vec()),
        GroupRingElement::from_element(h[0].clone()),
    );
    for u in 1..k {
        let mut merged = Vec::with_capacity(k - 1);
        merged.extend_from_slice(&h[..u - 1]);
        merged.push(group.op(&h[u - 1], &h[u]));
        merged.extend_from_slice(&h[u + 1..]);
        out.add_term(BarSymbol(merged), GroupRingElement::from_int(group, sign(u)));
    }
    out.add_term(
        BarSymbol(h[..k - 1].to_vec()),
        GroupRingElement::from_int(group, sign(k)),
    );
    out
}

pub fn bar_diff_chain(group: &FiniteAbelianGroup, chain: &BarChain) -> BarChain {
    let mut out = BarChain::zero();
    for (sym, c) in chain.terms() {
        out.add_assign(&bar_diff(group, sym).scale_left(c, group));
    }
    out
}

pub(crate) fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All nondegenerate symbols of degree `k`, in lexicographic index order.
pub fn normalized_symbols(group: &FiniteAbelianGroup, k: usize) -> Vec<BarSymbol> {
    let nonid: Vec<GroupElement> = group.nonidentity_elements().collect();
    let base = nonid.len();
    let count = base.checked_pow(k as u32).expect("symbol count overflow");
    (0..count)
        .map(|mut i| {
            let mut v = vec![group.identity(); k];
            for slot in v.iter_mut().rev() {
                *slot = nonid[i % base].clone();
                i /= base;
            }
            BarSymbol(v)
        })
        .collect()
}
