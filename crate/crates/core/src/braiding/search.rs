use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::hexagon::Tables;
use super::params::{eval_three_cocycle, ThreeCocycleParams};
use crate::algebra::group::lcm_all;
use crate::algebra::{FiniteAbelianGroup, Phase};
use crate::budget::{check, Budget};
use crate::cocycle::CochainTable;
use crate::error::{Error, Result};

/// Generator values `r[i][j] = R(g_i, g_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuasiBicharacter {
    pub r: Vec<Vec<Phase>>,
}

/// A quasi-bicharacter with its full table on `G x G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Braiding {
    pub generators: QuasiBicharacter,
    pub table: CochainTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidingExistence {
    pub exists: bool,
    pub reason: String,
}

/// A braiding exists iff every `a_rst` and `a_rs` vanishes and
/// `2 a_r ≡ 0 (mod m_r)` for every `r`.
pub fn braiding_exists(group: &FiniteAbelianGroup, p: &ThreeCocycleParams) -> BraidingExistence {
    let fail = |reason: String| BraidingExistence { exists: false, reason };
    if let Some((&(r, s, t), &a)) = p.a_rst.iter().find(|(_, &a)| a != 0) {
        return fail(format!("a_{{{}{}{}}} = {a} is nonzero", r + 1, s + 1, t + 1));
    }
    if let Some((&(r, s), &a)) = p.a_rs.iter().find(|(_, &a)| a != 0) {
        return fail(format!("a_{{{}{}}} = {a} is nonzero", r + 1, s + 1));
    }
    for (r, &a) in p.a_r.iter().enumerate() {
        let m = group.modulus(r);
        if (2 * a) % m != 0 {
            return fail(format!("a_{} = {a}: ζ_{m}^{a} differs from its inverse", r + 1));
        }
    }
    BraidingExistence {
        exists: true,
        reason: "all conditions hold".into(),
    }
}

fn omega_table(group: &FiniteAbelianGroup, p: &ThreeCocycleParams, budget: &Budget) -> Result<CochainTable> {
    CochainTable::tabulate(group, 3, budget, |a| eval_three_cocycle(group, p, &a[0], &a[1], &a[2]))
}

fn generator_indices(group: &FiniteAbelianGroup) -> Vec<usize> {
    (0..group.rank()).map(|i| group.index_of(&group.generator(i))).collect()
}

/// Index of `x·g_t^{-1}` where `g_t` is the last letter of the canonical word
/// of `x` (last nonzero coordinate), or the first letter when `from_left`.
fn peel(group: &FiniteAbelianGroup, x: usize, from_left: bool) -> (usize, usize) {
    let e = group.element_at(x);
    let mut coords = (0..group.rank()).filter(|&r| e.exps()[r] != 0);
    let t = if from_left { coords.next() } else { coords.next_back() }.expect("x is not the identity");
    let mut exps = e.exps().to_vec();
    exps[t] -= 1;
    (t, group.index_of(&group.element(exps).expect("in range")))
}

/// Builds `R` from generator values: first `R(x, g_j)` by growing `x` along
/// its canonical word left to right, then `R(x, y)` by growing `y` the same
/// way. Only the hexagon identities are used.
fn extend_forward(group: &FiniteAbelianGroup, t: &Tables, gens: &[usize], r: &[Vec<Phase>]) -> Vec<Phase> {
    let o = t.ord;
    let mut table = vec![Phase::ZERO; o * o];
    for (i, &gi) in gens.iter().enumerate() {
        for (j, &gj) in gens.iter().enumerate() {
            table[gi * o + gj] = r[i][j];
        }
    }
    for x in 1..o {
        let (s, xp) = peel(group, x, false);
        let gs = gens[s];
        for &gj in gens {
            table[x * o + gj] = table[xp * o + gj] + table[gs * o + gj] + t.w(xp, gs, gj) + t.w(gj, xp, gs)
                - t.w(xp, gj, gs);
        }
    }
    for y in 1..o {
        let (s, yp) = peel(group, y, false);
        let gs = gens[s];
        for x in 0..o {
            table[x * o + y] = table[x * o + yp] + table[x * o + gs] - t.w(x, yp, gs) - t.w(yp, gs, x)
                + t.w(yp, x, gs);
        }
    }
    table
}

/// The brute-force counterpart: second argument first, words read right to left.
fn extend_backward(group: &FiniteAbelianGroup, t: &Tables, gens: &[usize], r: &[Vec<Phase>]) -> Vec<Phase> {
    let o = t.ord;
    let mut table = vec![Phase::ZERO; o * o];
    for (i, &gi) in gens.iter().enumerate() {
        for (j, &gj) in gens.iter().enumerate() {
            table[gi * o + gj] = r[i][j];
        }
    }
    for y in 1..o {
        let (s, yp) = peel(group, y, true);
        let gs = gens[s];
        for &gi in gens {
            table[gi * o + y] = table[gi * o + gs] + table[gi * o + yp] - t.w(gi, gs, yp) - t.w(gs, yp, gi)
                + t.w(gs, gi, yp);
        }
    }
    for x in 1..o {
        let (s, xp) = peel(group, x, true);
        let gs = gens[s];
        for y in 0..o {
            table[x * o + y] = table[gs * o + y] + table[xp * o + y] + t.w(gs, xp, y) + t.w(y, gs, xp)
                - t.w(gs, y, xp);
        }
    }
    table
}

/// Decodes candidate number `c` into an `n x n` matrix, entry `(i, j)` drawn
/// from `choices[i][j]`, the last entry varying fastest.
fn decode(mut c: u64, choices: &[Vec<Vec<Phase>>]) -> Vec<Vec<Phase>> {
    let n = choices.len();
    let mut r = vec![vec![Phase::ZERO; n]; n];
    for idx in (0..n * n).rev() {
        let (i, j) = (idx / n, idx % n);
        let len = choices[i][j].len() as u64;
        r[i][j] = choices[i][j][(c % len) as usize];
        c /= len;
    }
    r
}

fn search(
    group: &FiniteAbelianGroup,
    p: &ThreeCocycleParams,
    budget: &Budget,
    choices: Vec<Vec<Vec<Phase>>>,
    forward: bool,
) -> Result<Vec<Braiding>> {
    let count: BigUint = choices.iter().flatten().map(|c| BigUint::from(c.len())).product();
    let cube = group.order().pow(3);
    check("hexagon evaluations", &(&count * &cube), budget.max_phase_evals)?;
    let count = u64::try_from(&count).expect("checked above");
    let omega = omega_table(group, p, budget)?;
    let mult = group.multiplication_table();
    let t = Tables {
        ord: group.order_usize(),
        mult: &mult,
        omega: omega.values(),
    };
    let gens = generator_indices(group);
    let found: Vec<Braiding> = (0..count)
        .into_par_iter()
        .filter_map(|c| {
            let r = decode(c, &choices);
            let table = if forward {
                extend_forward(group, &t, &gens, &r)
            } else {
                extend_backward(group, &t, &gens, &r)
            };
            t.satisfied(&table).then(|| Braiding {
                generators: QuasiBicharacter { r },
                table: CochainTable::from_values(group, 2, table).expect("sized table"),
            })
        })
        .collect();
    Ok(found)
}

/// Candidates allowed by the necessary conditions: `r_ii` an `m_i`-th root
/// of `ζ_{m_i}^{a_i}` and `r_ij^{min(m_i, m_j)} = 1` off the diagonal. Each is
/// extended to `G x G` and kept only if both hexagon identities hold
/// everywhere.
pub fn enumerate_braidings(group: &FiniteAbelianGroup, p: &ThreeCocycleParams, budget: &Budget) -> Result<Vec<Braiding>> {
    if !braiding_exists(group, p).exists {
        return Ok(Vec::new());
    }
    let n = group.rank();
    let choices = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        let m = group.modulus(i);
                        (0..m).map(|t| Phase::new((p.a_r[i] + m * t) as i128, m * m)).collect()
                    } else {
                        let m = group.modulus(i.min(j));
                        (0..m).map(|u| Phase::new(u as i128, m)).collect()
                    }
                })
                .collect()
        })
        .collect();
    search(group, p, budget, choices, true)
}

/// Exhaustive search over generator matrices with entries in the `E`-th
/// roots of unity, `E = lcm(m_i)^2`, each extended with the opposite
/// recursion order and checked on all of `G^3`.
pub fn bruteforce_braidings(group: &FiniteAbelianGroup, p: &ThreeCocycleParams, budget: &Budget) -> Result<Vec<CochainTable>> {
    let order = group.order();
    if order > BigUint::from(budget.max_braiding_group_order) {
        return Err(Error::BudgetExceeded {
            what: "braiding brute-force group order",
            needed: order.to_string(),
            limit: budget.max_braiding_group_order,
        });
    }
    let n = group.rank();
    let e = lcm_all(group.moduli().iter().copied()).pow(2);
    let roots: Vec<Phase> = (0..e).map(|u| Phase::new(u as i128, e)).collect();
    let choices = vec![vec![roots; n]; n];
    Ok(search(group, p, budget, choices, false)?
        .into_iter()
        .map(|b| b.table)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::hexagon_residuals;
    use std::collections::BTreeSet;

    fn grp(m: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(m.to_vec()).unwrap()
    }

    fn diag(g: &FiniteAbelianGroup, a: &[u64]) -> ThreeCocycleParams {
        ThreeCocycleParams {
            a_r: a.to_vec(),
            ..ThreeCocycleParams::trivial(g)
        }
    }

    #[test]
    fn z2_with_nontrivial_associator() {
        let g = grp(&[2]);
        let b = Budget::default();
        let p = diag(&g, &[1]);
        assert!(braiding_exists(&g, &p).exists);
        let found = enumerate_braidings(&g, &p, &b).unwrap();
        let r11: BTreeSet<Phase> = found.iter().map(|x| x.generators.r[0][0]).collect();
        assert_eq!(r11, BTreeSet::from([Phase::new(1, 4), Phase::new(3, 4)]));
        let omega = omega_table(&g, &p, &b).unwrap();
        for br in &found {
            assert!(hexagon_residuals(&omega, &br.table).is_empty());
        }
        // R ≡ 1 fails
        let ones = CochainTable::zeros(&g, 2, &b).unwrap();
        assert!(!hexagon_residuals(&omega, &ones).is_empty());
    }

    #[test]
    fn existence_reasons() {
        let z3 = grp(&[3]);
        let e = braiding_exists(&z3, &diag(&z3, &[1]));
        assert!(!e.exists);
        assert!(e.reason.contains("a_1"));
        assert!(enumerate_braidings(&z3, &diag(&z3, &[1]), &Budget::default()).unwrap().is_empty());
        let g = grp(&[2, 2, 2]);
        let mut p = ThreeCocycleParams::trivial(&g);
        p.a_rst.insert((0, 1, 2), 1);
        assert!(braiding_exists(&g, &p).reason.contains("a_{123}"));
        assert!(braiding_exists(&g, &ThreeCocycleParams::trivial(&g)).exists);
    }

    #[test]
    fn trivial_associator_gives_bicharacters() {
        let b = Budget::default();
        let g = grp(&[2, 2]);
        let p = ThreeCocycleParams::trivial(&g);
        assert_eq!(enumerate_braidings(&g, &p, &b).unwrap().len(), 16);
        assert_eq!(bruteforce_braidings(&g, &p, &b).unwrap().len(), 16);
        let z2 = grp(&[2]);
        assert_eq!(bruteforce_braidings(&z2, &ThreeCocycleParams::trivial(&z2), &b).unwrap().len(), 2);
    }

    #[test]
    fn brute_force_refuses_large_groups() {
        let g = grp(&[2, 6]);
        assert!(matches!(
            bruteforce_braidings(&g, &ThreeCocycleParams::trivial(&g), &Budget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
