//! Dijkgraaf-Witten invariants of tori, the integer function `N_n(d)` and
//! dimensions of projective representations.

mod nfunc;
mod projrep;
mod torus;

pub use nfunc::{n_bruteforce_det, n_bruteforce_minors, n_closed};
pub use projrep::{omega_regular_count, projrep_dims, turaev_check, TuraevReport, TwoCocycleParams};
pub use torus::{dw_bruteforce, dw_closed, DWMethod, DWResult, TopCocycleParams};

use rayon::prelude::*;

/// Permutations of `0..n` with their signs (`true` for odd).
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), odd));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            // picking the i-th remaining element passes over i smaller ones
            go(prefix, rest, odd ^ (i % 2 == 1), out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), false, &mut out);
    out
}

/// `det` of a square matrix (row-major, side `n`) by the Leibniz expansion.
pub(crate) fn leibniz_det(perms: &[(Vec<usize>, bool)], a: &[i64], n: usize) -> i64 {
    perms
        .iter()
        .map(|(p, odd)| {
            let prod: i64 = p.iter().enumerate().map(|(i, &j)| a[i * n + j]).product();
            if *odd {
                -prod
            } else {
                prod
            }
        })
        .sum()
}

/// Histogram of `f(t) mod order` over `t in 0..total`, computed in parallel.
/// `f` receives the mixed-radix digits of `t` (last digit fastest).
pub(crate) fn residue_histogram<F>(radix: &[u64], total: u64, order: u64, f: F) -> Vec<u64>
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    const CHUNK: u64 = 1 << 14;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![0u64; order as usize];
            let mut digits = vec![0u64; radix.len()];
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut t = start;
            for (d, &r) in digits.iter_mut().zip(radix).rev() {
                *d = t % r;
                t /= r;
            }
            for _ in start..end {
                hist[(f(&digits) % order) as usize] += 1;
                for (d, &r) in digits.iter_mut().zip(radix).rev() {
                    *d += 1;
                    if *d < r {
                        break;
                    }
                    *d = 0;
                }
            }
            hist
        })
        .reduce(
            || vec![0u64; order as usize],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}
