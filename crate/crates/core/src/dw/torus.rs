use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::nfunc::n_closed;
use super::{leibniz_det, permutations, residue_histogram};
use crate::algebra::{CyclotomicSum, FiniteAbelianGroup, GroupElement};
use crate::budget::{check, Budget};
use crate::cocycle::spec::eval_unchecked;
use crate::cocycle::CocycleSpec;
use crate::error::{Error, Result};
use crate::resolution::KoszulIndex;

/// Degree-`n` cocycle data for the torus `T^n`; the full spec is reused.
pub type TopCocycleParams = CocycleSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DWMethod {
    Brute,
    Closed,
}

/// `value` is `Z(T^n)`; `histogram` is the cyclotomic sum it was read off
/// from, equal to `value·|G|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DWResult {
    pub value: BigInt,
    pub histogram: CyclotomicSum,
    pub method: DWMethod,
}

fn check_inputs(group: &FiniteAbelianGroup, spec: &CocycleSpec, n: usize) -> Result<()> {
    if spec.group() != group {
        return Err(Error::GroupMismatch(format!(
            "spec lives on {}, invariant requested on {group}",
            spec.group()
        )));
    }
    if spec.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: spec.degree(),
        });
    }
    Ok(())
}

fn certify(group: &FiniteAbelianGroup, histogram: CyclotomicSum, method: DWMethod) -> Result<DWResult> {
    let total = histogram
        .to_integer()
        .ok_or_else(|| Error::NonIntegral("torus sum is not rational".into()))?;
    let order = BigInt::from(group.order());
    let (value, rem) = total.div_rem(&order);
    if !rem.is_zero() || value < BigInt::zero() {
        return Err(Error::NonIntegral(format!("{total} / {order}")));
    }
    debug_assert!(histogram.equals_integer(&(&value * &order)));
    Ok(DWResult {
        value,
        histogram,
        method,
    })
}

fn to_sum(hist: Vec<u64>) -> CyclotomicSum {
    let order = hist.len() as u64;
    CyclotomicSum::from_counts(order, hist.into_iter().enumerate().map(|(j, c)| (j as u64, BigInt::from(c))))
}

/// `(1/|G|) Σ_{f ∈ G^n} Σ_{σ ∈ S_n} sign(σ)·ω(f_σ(1), ..., f_σ(n))`, written additively.
pub fn dw_bruteforce(group: &FiniteAbelianGroup, spec: &CocycleSpec, n: usize, budget: &Budget) -> Result<DWResult> {
    check_inputs(group, spec, n)?;
    let perms = permutations(n);
    let tuples = group.order().pow(n as u32);
    let total = check("torus phase evaluations", &(&tuples * BigUint::from(perms.len())), budget.max_phase_evals)?;
    let total = total / perms.len() as u64;
    let e = group.exponent();
    let elems: Vec<GroupElement> = group.elements().collect();
    let radix = vec![elems.len() as u64; n];
    let hist = residue_histogram(&radix, total, e, |digits| {
        let mut acc = crate::algebra::Phase::ZERO;
        let mut args = Vec::with_capacity(n);
        for (p, odd) in &perms {
            args.clear();
            args.extend(p.iter().map(|&i| elems[digits[i] as usize].clone()));
            let w = eval_unchecked(spec, &args);
            if *odd {
                acc -= w;
            } else {
                acc += w;
            }
        }
        acc.residue_mod(e).expect("cocycle values are e-th roots of unity")
    });
    certify(group, to_sum(hist), DWMethod::Brute)
}

fn all_ones_keys(l: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, l: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in start..=l - left {
            cur.push(r);
            go(r + 1, l, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n <= l {
        go(0, l, n, &mut Vec::new(), &mut out);
    }
    out
}

fn key_coefficient(spec: &CocycleSpec, positions: &[usize]) -> u64 {
    let key = KoszulIndex::new(positions.iter().map(|&r| (r, 1)).collect()).expect("ascending positions");
    spec.coefficient(&key)
}

/// The closed form: `|G|^{n-1}` when `l < n`; `|G|^{n-1} N_n(d) / d^{n(n-1)}`
/// when `l = n`; a determinant sum over `n x l` exponent matrices when `l > n`.
/// Only the coefficients `a_{r_1...r_n}` with every exponent 1 are read.
pub fn dw_closed(group: &FiniteAbelianGroup, spec: &CocycleSpec, n: usize, budget: &Budget) -> Result<DWResult> {
    check_inputs(group, spec, n)?;
    let l = group.rank();
    let order = BigInt::from(group.order());
    let closed = |value: BigInt| DWResult {
        histogram: CyclotomicSum::from_counts(1, [(0, &value * &order)]),
        value,
        method: DWMethod::Closed,
    };
    if l < n {
        return Ok(closed(order.pow(n as u32 - 1)));
    }
    if l == n {
        let positions: Vec<usize> = (0..n).collect();
        let a = key_coefficient(spec, &positions);
        let m1 = group.modulus(0);
        let d = m1 / m1.gcd(&a);
        let num = order.pow(n as u32 - 1) * n_closed(n, d);
        let den = BigInt::from(d).pow((n * (n - 1)) as u32);
        let (value, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::NonIntegral(format!("{num} / {den}")));
        }
        return Ok(closed(value));
    }
    let keys: Vec<(Vec<usize>, u64)> = all_ones_keys(l, n)
        .into_iter()
        .map(|k| {
            let a = key_coefficient(spec, &k);
            (k, a)
        })
        .filter(|(_, a)| *a != 0)
        .collect();
    let matrices = group.order().pow(n as u32);
    check(
        "determinant sum evaluations",
        &(&matrices * BigUint::from(keys.len().max(1))),
        budget.max_phase_evals,
    )?;
    let total = check("determinant sum evaluations", &matrices, budget.max_phase_evals)?;
    let e = group.exponent();
    let perms = permutations(n);
    let radix: Vec<u64> = (0..n).flat_map(|_| group.moduli().iter().copied()).collect();
    let hist = residue_histogram(&radix, total, e, |alpha| {
        let mut minor = vec![0i64; n * n];
        let mut exp: i128 = 0;
        for (cols, a) in &keys {
            for i in 0..n {
                for (c, &r) in cols.iter().enumerate() {
                    minor[i * n + c] = alpha[i * l + r] as i64;
                }
            }
            let det = leibniz_det(&perms, &minor, n) as i128;
            exp += det * *a as i128 * (e / group.modulus(cols[0])) as i128;
        }
        exp.rem_euclid(e as i128) as u64
    });
    certify(group, to_sum(hist), DWMethod::Closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::enumerate_representatives;

    fn grp(m: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(m.to_vec()).unwrap()
    }

    fn spec(g: &FiniteAbelianGroup, k: usize, coeffs: &[(&str, u64)]) -> CocycleSpec {
        CocycleSpec::new(g.clone(), k, coeffs.iter().map(|(s, a)| (s.parse().unwrap(), *a))).unwrap()
    }

    #[test]
    fn documented_values() {
        let b = Budget::default();
        let v22 = grp(&[2, 2]);
        let s = spec(&v22, 2, &[("1 2", 1)]);
        assert_eq!(dw_bruteforce(&v22, &s, 2, &b).unwrap().value, BigInt::from(1));
        assert_eq!(dw_closed(&v22, &s, 2, &b).unwrap().value, BigInt::from(1));

        let z2 = grp(&[2]);
        for s in enumerate_representatives(&z2, 2) {
            assert_eq!(dw_bruteforce(&z2, &s, 2, &b).unwrap().value, BigInt::from(2));
        }
        let z3 = grp(&[3]);
        let s = spec(&z3, 3, &[("1^3", 1)]);
        assert_eq!(dw_closed(&z3, &s, 3, &b).unwrap().value, BigInt::from(9));
        assert_eq!(dw_bruteforce(&z3, &s, 3, &b).unwrap().value, BigInt::from(9));
    }

    #[test]
    fn trivial_cocycle_gives_power_of_order() {
        let b = Budget::default();
        for m in [vec![4], vec![2, 2], vec![2, 4], vec![2, 2, 2]] {
            let g = grp(&m);
            for n in 1..=3 {
                let s = CocycleSpec::zero(g.clone(), n);
                let expect = BigInt::from(g.order()).pow(n as u32 - 1);
                let r = dw_bruteforce(&g, &s, n, &b).unwrap();
                assert_eq!(r.value, expect);
                assert!(r.histogram.equals_integer(&(&expect * BigInt::from(g.order()))));
                assert_eq!(dw_closed(&g, &s, n, &b).unwrap().value, expect);
            }
        }
    }

    #[test]
    fn routes_agree_on_small_groups() {
        let b = Budget::default();
        for m in [vec![2, 2], vec![3, 3], vec![2, 4], vec![2, 2, 2]] {
            let g = grp(&m);
            for n in 2..=3 {
                for s in enumerate_representatives(&g, n).step_by(7).take(12) {
                    let brute = dw_bruteforce(&g, &s, n, &b).unwrap();
                    let closed = dw_closed(&g, &s, n, &b).unwrap();
                    assert_eq!(brute.value, closed.value, "{g} n={n} {}", s.to_json());
                }
            }
        }
    }

    #[test]
    fn mismatched_degree_is_rejected() {
        let g = grp(&[2]);
        let s = CocycleSpec::zero(g.clone(), 2);
        assert!(matches!(
            dw_bruteforce(&g, &s, 3, &Budget::default()),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
