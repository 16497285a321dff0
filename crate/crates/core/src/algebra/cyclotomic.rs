use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::phase::Phase;

/// Exact sum `Σ_j counts[j]·ζ_E^j` of `E`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSum {
    order: u64,
    counts: BTreeMap<u64, BigInt>,
}

impl CyclotomicSum {
    pub fn new(order: u64) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CyclotomicSum {
            order,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_counts(order: u64, counts: impl IntoIterator<Item = (u64, BigInt)>) -> Self {
        let mut s = CyclotomicSum::new(order);
        for (j, c) in counts {
            s.add_power(j, c);
        }
        s
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn counts(&self) -> &BTreeMap<u64, BigInt> {
        &self.counts
    }

    pub fn add_power(&mut self, j: u64, count: impl Into<BigInt>) {
        let count = count.into();
        if count.is_zero() {
            return;
        }
        let key = j % self.order;
        let slot = self.counts.entry(key).or_insert_with(BigInt::zero);
        *slot += count;
        if slot.is_zero() {
            self.counts.remove(&key);
        }
    }

    /// Adds one copy of the root of unity `p`. Panics if `den(p)` does not divide the order.
    pub fn add_phase(&mut self, p: Phase) {
        let j = p
            .residue_mod(self.order)
            .unwrap_or_else(|| panic!("phase {p} is not an {}-th root of unity", self.order));
        self.add_power(j, 1);
    }

    pub fn merge(&mut self, other: &CyclotomicSum) {
        assert_eq!(self.order, other.order, "merging sums of different orders");
        for (&j, c) in &other.counts {
            self.add_power(j, c.clone());
        }
    }

    /// Sum of all coefficients (the value at `ζ = 1`).
    pub fn total_count(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// The integer this sum equals, if it is one: the remainder of the
    /// polynomial `Σ counts[j] x^j` modulo `Φ_E` must be constant.
    pub fn to_integer(&self) -> Option<BigInt> {
        let phi = cyclotomic_polynomial(self.order);
        let mut poly = vec![BigInt::zero(); self.order as usize];
        for (&j, c) in &self.counts {
            poly[j as usize] += c;
        }
        let rem = poly_rem_monic(poly, &phi);
        if rem.iter().skip(1).all(Zero::is_zero) {
            Some(rem.into_iter().next().unwrap_or_else(BigInt::zero))
        } else {
            None
        }
    }

    /// Whether the sum equals the integer `n`, decided by divisibility of
    /// `Σ counts[j] x^j - n` by `Φ_E`.
    pub fn equals_integer(&self, n: &BigInt) -> bool {
        let mut shifted = self.clone();
        shifted.add_power(0, -n.clone());
        shifted.to_integer().is_some_and(|v| v.is_zero())
    }
}

/// Coefficients (constant term first) of the `e`-th cyclotomic polynomial,
/// obtained by dividing `x^e - 1` by `Φ_d` for every proper divisor `d | e`.
pub fn cyclotomic_polynomial(e: u64) -> Vec<BigInt> {
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    cyclotomic_memo(e, &mut memo)
}

fn cyclotomic_memo(e: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&e) {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); e as usize + 1];
    poly[0] = -BigInt::one();
    poly[e as usize] = BigInt::one();
    for d in (1..e).filter(|d| e % d == 0) {
        let divisor = cyclotomic_memo(d, memo);
        poly = poly_div_exact(&poly, &divisor);
    }
    memo.insert(e, poly.clone());
    poly
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Quotient of an exact division by a monic polynomial.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = trim(num.to_vec());
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (k, dk) in den.iter().enumerate() {
            rem[i + k] -= &c * dk;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

fn poly_rem_monic(mut p: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    if dm == 0 {
        return vec![BigInt::zero()];
    }
    for i in (dm..p.len()).rev() {
        let c = p[i].clone();
        if c.is_zero() {
            continue;
        }
        for (k, mk) in m.iter().enumerate() {
            p[i - dm + k] -= &c * mk;
        }
    }
    p.truncate(dm);
    p
}
