use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{leibniz_det, permutations, residue_histogram};
use crate::algebra::group::factorize;
use crate::algebra::CyclotomicSum;
use crate::budget::{check, Budget};
use crate::error::{Error, Result};

/// `N_n(d)` from the prime-power recursion, multiplied over the factorization of `d`.
pub fn n_closed(n: usize, d: u64) -> BigInt {
    assert!(n >= 1 && d >= 1, "N_n(d) needs n >= 1 and d >= 1");
    let mut memo = HashMap::new();
    factorize(d)
        .into_iter()
        .map(|(p, m)| prime_power(n, p, m, &mut memo))
        .product()
}

fn prime_power(n: usize, p: u64, m: u32, memo: &mut HashMap<(usize, u64, u32), BigInt>) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(n, p, m)) {
        return v.clone();
    }
    let pb = BigInt::from(p);
    let pw = |e: usize| pb.pow(e as u32);
    let (n_, m_) = (n, m as usize);
    let mut total = pw(m_ * (n_ - 2) * n_);
    for i in 1..=m_ {
        let lower = prime_power(n - 1, p, i as u32, memo);
        if lower.is_zero() {
            continue;
        }
        total += pw(m_ * (n_ - 2)) * pw((m_ - i) * (n_ - 2) * (n_ - 1)) * lower * (pw(n_ * i) - pw(n_ * (i - 1)));
    }
    memo.insert((n, p, m), total.clone());
    total
}

/// `Σ_{A ∈ M_n(Z_d)} ξ^{det A} / d^n`, summed exactly over all `d^{n²}` matrices.
pub fn n_bruteforce_det(n: usize, d: u64, budget: &Budget) -> Result<BigInt> {
    assert!(n >= 1 && d >= 1, "N_n(d) needs n >= 1 and d >= 1");
    let total = check(
        "determinant sum",
        &BigUint::from(d).pow((n * n) as u32),
        budget.max_phase_evals,
    )?;
    let perms = permutations(n);
    let radix = vec![d; n * n];
    let hist = residue_histogram(&radix, total, d, |digits| {
        let a: Vec<i64> = digits.iter().map(|&x| x as i64).collect();
        leibniz_det(&perms, &a, n).rem_euclid(d as i64) as u64
    });
    let sum = CyclotomicSum::from_counts(d, hist.into_iter().enumerate().map(|(j, c)| (j as u64, BigInt::from(c))));
    let value = sum
        .to_integer()
        .ok_or_else(|| Error::NonIntegral(format!("determinant sum for N_{n}({d})")))?;
    let dn = BigInt::from(d).pow(n as u32);
    let (q, r) = (&value / &dn, &value % &dn);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{value} / {dn}")));
    }
    Ok(q)
}

/// Number of `(n-1) x n` matrices over `Z_d` whose maximal minors all vanish mod `d`.
pub fn n_bruteforce_minors(n: usize, d: u64, budget: &Budget) -> Result<BigInt> {
    assert!(n >= 1 && d >= 1, "N_n(d) needs n >= 1 and d >= 1");
    let k = n - 1;
    let total = check(
        "minor count",
        &BigUint::from(d).pow((k * n) as u32),
        budget.max_phase_evals,
    )?;
    let perms = permutations(k);
    let radix = vec![d; k * n];
    // residue 0 means every minor vanished
    let hist = residue_histogram(&radix, total, 2, |digits| {
        let mut minor = vec![0i64; k * k];
        for skip in 0..n {
            for row in 0..k {
                for (c, col) in (0..n).filter(|&c| c != skip).enumerate() {
                    minor[row * k + c] = digits[row * n + col] as i64;
                }
            }
            if leibniz_det(&perms, &minor, k).rem_euclid(d as i64) != 0 {
                return 1;
            }
        }
        0
    });
    Ok(BigInt::from(hist[0]))
}
