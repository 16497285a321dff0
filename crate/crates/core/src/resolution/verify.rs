//! Exhaustive checks that `F` and `G` commute with the differentials.

use rayon::prelude::*;
use serde::Serialize;

use super::bar::{bar_diff, normalized_symbols, BarSymbol};
use super::chain_map::{chain_map_f, chain_map_f_chain, chain_map_g, chain_map_g_chain};
use super::koszul::{koszul_diff, koszul_diff_chain, KoszulIndex};
use crate::algebra::FiniteAbelianGroup;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// bar -> Koszul
    F,
    /// Koszul -> bar
    G,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainMapReport {
    pub direction: Direction,
    pub group: Vec<u64>,
    pub max_degree: usize,
    /// Basis elements checked.
    pub checked: usize,
    /// Basis elements where the square fails to commute.
    pub counterexamples: Vec<String>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `F_{k-1} ∘ ∂_k = d_k ∘ F_k` on every nondegenerate bar symbol of
/// degree `1..=max_degree`.
pub fn verify_chain_map_f(group: &FiniteAbelianGroup, max_degree: usize) -> Result<ChainMapReport> {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for k in 1..=max_degree {
        let syms = normalized_symbols(group, k);
        checked += syms.len();
        let bad: Vec<String> = syms
            .par_iter()
            .map(|s| f_square(group, s).map(|ok| (!ok).then(|| s.to_string())))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        counterexamples.extend(bad);
    }
    Ok(ChainMapReport {
        direction: Direction::F,
        group: group.moduli().to_vec(),
        max_degree,
        checked,
        counterexamples,
    })
}

fn f_square(group: &FiniteAbelianGroup, sym: &BarSymbol) -> Result<bool> {
    let lhs = chain_map_f_chain(group, &bar_diff(group, sym))?;
    let rhs = koszul_diff_chain(group, &chain_map_f(group, sym.entries())?);
    Ok(lhs == rhs)
}

/// Checks `G_{k-1} ∘ d_k = ∂_k ∘ G_k` on every Koszul generator of degree
/// `1..=max_degree`.
pub fn verify_chain_map_g(group: &FiniteAbelianGroup, max_degree: usize) -> Result<ChainMapReport> {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for k in 1..=max_degree {
        let gens = KoszulIndex::all(group.rank(), k);
        checked += gens.len();
        let bad: Vec<String> = gens
            .par_iter()
            .map(|i| g_square(group, i).map(|ok| (!ok).then(|| format!("Φ[{i}]"))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        counterexamples.extend(bad);
    }
    Ok(ChainMapReport {
        direction: Direction::G,
        group: group.moduli().to_vec(),
        max_degree,
        checked,
        counterexamples,
    })
}

fn g_square(group: &FiniteAbelianGroup, idx: &KoszulIndex) -> Result<bool> {
    let lhs = chain_map_g_chain(group, &koszul_diff(group, idx))?;
    let rhs = super::bar::bar_diff_chain(group, &chain_map_g(group, idx)?);
    Ok(lhs == rhs)
}
