#![allow(dead_code)]

use abelian_cocycles::cocycle::{enumerate_representatives, representative_count, CocycleSpec};
use abelian_cocycles::resolution::KoszulIndex;
use abelian_cocycles::FiniteAbelianGroup;
use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every invariant-factor chain with product at most `max_order` (trivial group excluded).
pub fn groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    fn extend(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        let last = prefix.last().copied().unwrap_or(1);
        let mut m = if prefix.is_empty() { 2 } else { last };
        while order * m <= max {
            if m % last == 0 {
                prefix.push(m);
                out.push(prefix.clone());
                extend(prefix, order * m, max, out);
                prefix.pop();
            }
            m += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|m| (m.iter().product::<u64>(), m.len()));
    out.into_iter().map(|m| FiniteAbelianGroup::new(m).unwrap()).collect()
}

pub fn grp(m: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(m.to_vec()).unwrap()
}

/// A spec with independent uniform coefficients on every valid key.
pub fn random_spec(group: &FiniteAbelianGroup, k: usize, rng: &mut ChaCha8Rng) -> CocycleSpec {
    let coeffs: Vec<(KoszulIndex, u64)> = KoszulIndex::cocycle_keys(group.rank(), k)
        .into_iter()
        .map(|key| {
            let m = group.modulus(key.leading_position().unwrap());
            let a = rng.gen_range(0..m);
            (key, a)
        })
        .collect();
    CocycleSpec::new(group.clone(), k, coeffs).unwrap()
}

/// All representatives when there are at most `limit`, else `samples` random ones.
pub fn specs_for(group: &FiniteAbelianGroup, k: usize, limit: u64, samples: usize, rng: &mut ChaCha8Rng) -> Vec<CocycleSpec> {
    if representative_count(group, k) <= BigUint::from(limit) {
        enumerate_representatives(group, k).collect()
    } else {
        (0..samples).map(|_| random_spec(group, k, rng)).collect()
    }
}
