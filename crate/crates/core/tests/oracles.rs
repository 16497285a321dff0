//! Values frozen against oracles implemented here, independent of the library code paths.

mod common;

use abelian_cocycles::algebra::invariant_factors;
use abelian_cocycles::cocycle::{cohomology_order_bruteforce, cohomology_order_closed, enumerate_representatives, CocycleSpec};
use abelian_cocycles::dw::{dw_bruteforce, dw_closed, n_closed, projrep_dims, TwoCocycleParams};
use abelian_cocycles::{Budget, FiniteAbelianGroup, Phase};
use common::{groups_up_to, grp};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

fn spec(g: &FiniteAbelianGroup, k: usize, coeffs: &[(&str, u64)]) -> CocycleSpec {
    CocycleSpec::new(g.clone(), k, coeffs.iter().map(|(s, a)| (s.parse().unwrap(), *a))).unwrap()
}

#[test]
fn crt_normalization() {
    assert_eq!(invariant_factors(&[4, 6]), vec![2, 12]);
    assert_eq!(invariant_factors(&[6, 10, 15]), vec![30, 30]);
    assert_eq!(invariant_factors(&[2, 3, 4]), vec![2, 12]);
    assert_eq!(invariant_factors(&[8, 4, 2]), vec![2, 4, 8]);
}

#[test]
fn cyclic_cohomology_alternates() {
    // H^k(Z_m, C*) is Z_m in odd degrees and trivial in even positive degrees
    for m in 2..=12 {
        let g = grp(&[m]);
        for k in 1..=6 {
            let expect = if k % 2 == 1 { m } else { 1 };
            assert_eq!(cohomology_order_closed(&g, k).order, BigUint::from(expect), "Z{m} k={k}");
        }
    }
}

#[test]
fn klein_four_cohomology() {
    // H^k(Z2 x Z2, C*) has order 4, 2, 8, 4, 16 for k = 1..5 (Künneth)
    let g = grp(&[2, 2]);
    let expect = [4u32, 2, 8, 4, 16];
    for (k, &e) in (1..=5).zip(&expect) {
        assert_eq!(cohomology_order_closed(&g, k).order, BigUint::from(e), "k={k}");
    }
    let budget = Budget::default();
    for k in 1..=4 {
        assert_eq!(cohomology_order_bruteforce(&g, k, &budget).unwrap(), BigUint::from(expect[k - 1]));
    }
    assert_eq!(cohomology_order_bruteforce(&grp(&[2, 4]), 2, &budget).unwrap(), cohomology_order_closed(&grp(&[2, 4]), 2).order);
    assert_eq!(cohomology_order_bruteforce(&grp(&[2, 2, 2]), 2, &budget).unwrap(), BigUint::from(8u32));
}

/// Rank of a matrix over Z_2 by Gaussian elimination.
fn rank_mod2(rows: &mut [Vec<u8>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r][c] == 1 {
                    let pivot = rows[rank].clone();
                    rows[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
    }
    rank
}

#[test]
fn n3_of_2_by_rank_count() {
    // over a field, all maximal minors vanish iff the rank is below n-1
    let mut count = 0;
    for bits in 0u32..64 {
        let mut rows: Vec<Vec<u8>> = (0..2).map(|r| (0..3).map(|c| ((bits >> (r * 3 + c)) & 1) as u8).collect()).collect();
        if rank_mod2(&mut rows) < 2 {
            count += 1;
        }
    }
    assert_eq!(count, 22);
    assert_eq!(n_closed(3, 2), BigInt::from(22));
}

#[test]
fn n_function_prime_field_rank_formula() {
    // for prime p, N_n(p) counts (n-1) x n matrices of rank < n-1:
    // p^{(n-1)n} minus the number of full-rank ones, ∏_{i<n-1} (p^n - p^i)
    for p in [2u64, 3, 5, 7] {
        for n in 2..=5usize {
            let total = BigInt::from(p).pow(((n - 1) * n) as u32);
            let full: BigInt = (0..n - 1).map(|i| BigInt::from(p).pow(n as u32) - BigInt::from(p).pow(i as u32)).product();
            assert_eq!(n_closed(n, p), total - full, "n={n} p={p}");
        }
    }
}

/// Floating point `(1/|G|) Σ_{x,y} exp(2πi(ω(x,y) - ω(y,x)))`.
fn float_dw_t2(g: &FiniteAbelianGroup, w: impl Fn(&[u64], &[u64]) -> Phase) -> f64 {
    let elems: Vec<_> = g.elements().collect();
    let (mut re, mut im) = (0.0, 0.0);
    for x in &elems {
        for y in &elems {
            let d = w(x.exps(), y.exps()) - w(y.exps(), x.exps());
            let (c, s) = d.to_complex();
            re += c;
            im += s;
        }
    }
    assert!(im.abs() < 1e-6);
    re / elems.len() as f64
}

#[test]
fn torus_t2_against_float_sum() {
    let budget = Budget::default();
    for g in groups_up_to(12) {
        for s in enumerate_representatives(&g, 2) {
            let p = TwoCocycleParams::from_spec(&s).unwrap();
            // ω(x, y) = -Σ a_rs x_s y_r / m_r, written out again here
            let w = |x: &[u64], y: &[u64]| {
                p.a_rs
                    .iter()
                    .map(|(&(r, t), &a)| Phase::new(-((a * x[t] * y[r]) as i128), g.modulus(r)))
                    .sum::<Phase>()
            };
            let approx = float_dw_t2(&g, w);
            let exact = dw_bruteforce(&g, &s, 2, &budget).unwrap().value.to_f64().unwrap();
            assert!((approx - exact).abs() < 1e-6, "{g} {}: {approx} vs {exact}", s.to_json());
        }
    }
}

#[test]
fn documented_dw_values() {
    let b = Budget::default();
    let v22 = grp(&[2, 2]);
    let s = spec(&v22, 2, &[("1^1 2^1", 1)]);
    assert_eq!(dw_bruteforce(&v22, &s, 2, &b).unwrap().value, BigInt::from(1));
    assert_eq!(dw_closed(&v22, &s, 2, &b).unwrap().value, BigInt::from(1));
    // l < n
    let z3 = grp(&[3]);
    assert_eq!(dw_closed(&z3, &spec(&z3, 3, &[("1^3", 2)]), 3, &b).unwrap().value, BigInt::from(9));
    // l = n = 3 on Z2^3: |G|^2 N_3(2) / 2^6 = 64 * 22 / 64
    let g = grp(&[2, 2, 2]);
    let s = spec(&g, 3, &[("1 2 3", 1)]);
    assert_eq!(dw_bruteforce(&g, &s, 3, &b).unwrap().value, BigInt::from(22));
    assert_eq!(dw_closed(&g, &s, 3, &b).unwrap().value, BigInt::from(22));
}

#[test]
fn documented_projrep_values() {
    let single = |a| TwoCocycleParams {
        a_rs: [((0, 1), a)].into_iter().collect(),
    };
    assert_eq!(projrep_dims(&grp(&[2, 2]), &single(1)).unwrap(), (1u32.into(), 2u32.into()));
    assert_eq!(projrep_dims(&grp(&[2, 4]), &single(1)).unwrap(), (2u32.into(), 2u32.into()));
    assert_eq!(projrep_dims(&grp(&[3, 3]), &single(1)).unwrap(), (1u32.into(), 3u32.into()));
    assert_eq!(projrep_dims(&grp(&[4, 4]), &single(2)).unwrap(), (4u32.into(), 2u32.into()));
}
