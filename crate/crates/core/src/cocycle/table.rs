use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use super::spec::{eval_unchecked, CocycleSpec};
use crate::algebra::{smith_normal_form, FiniteAbelianGroup, GroupElement, IntegerMatrix, Phase};
use crate::budget::{check, Budget};
use crate::error::{Error, Result};

/// A `Q/Z`-valued function on `G^k`, stored densely. Tuples are indexed in
/// mixed radix `|G|` with the first argument most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainTable {
    group: FiniteAbelianGroup,
    degree: usize,
    values: Vec<Phase>,
}

fn table_len(group: &FiniteAbelianGroup, k: usize, budget: &Budget) -> Result<usize> {
    let needed = group.order().pow(k as u32);
    Ok(check("cochain table entries", &needed, budget.max_table_entries)? as usize)
}

impl CochainTable {
    /// Tabulates `f` over `G^k`.
    pub fn tabulate(
        group: &FiniteAbelianGroup,
        k: usize,
        budget: &Budget,
        f: impl Fn(&[GroupElement]) -> Phase + Sync,
    ) -> Result<Self> {
        let len = table_len(group, k, budget)?;
        let values = (0..len)
            .into_par_iter()
            .map(|i| f(&tuple_at(group, k, i)))
            .collect();
        Ok(CochainTable {
            group: group.clone(),
            degree: k,
            values,
        })
    }

    pub fn zeros(group: &FiniteAbelianGroup, k: usize, budget: &Budget) -> Result<Self> {
        let len = table_len(group, k, budget)?;
        Ok(CochainTable {
            group: group.clone(),
            degree: k,
            values: vec![Phase::ZERO; len],
        })
    }

    /// The table of the closed-formula cocycle of `spec`.
    pub fn from_spec(spec: &CocycleSpec, budget: &Budget) -> Result<Self> {
        Self::tabulate(spec.group(), spec.degree(), budget, |args| eval_unchecked(spec, args))
    }

    /// Builds a table from raw values in index order.
    pub fn from_values(group: &FiniteAbelianGroup, k: usize, values: Vec<Phase>) -> Result<Self> {
        let expect = group.order_usize().pow(k as u32);
        if values.len() != expect {
            return Err(Error::IndexOutOfRange(format!(
                "{} values for a table of {expect} entries",
                values.len()
            )));
        }
        Ok(CochainTable {
            group: group.clone(),
            degree: k,
            values,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    pub fn index_of(&self, args: &[GroupElement]) -> usize {
        let ord = self.group.order_usize();
        args.iter().fold(0, |acc, g| acc * ord + self.group.index_of(g))
    }

    pub fn get(&self, args: &[GroupElement]) -> Phase {
        self.values[self.index_of(args)]
    }

    pub fn set(&mut self, args: &[GroupElement], p: Phase) {
        let i = self.index_of(args);
        self.values[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Phase::is_zero)
    }

    /// Trivial whenever some argument is the identity.
    pub fn is_normalized(&self) -> bool {
        let ord = self.group.order_usize();
        self.values.iter().enumerate().all(|(i, p)| {
            p.is_zero() || digits(i, ord, self.degree).iter().all(|&d| d != 0)
        })
    }

    pub fn sub(&self, other: &CochainTable) -> CochainTable {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        assert_eq!(self.group, other.group, "group mismatch");
        CochainTable {
            group: self.group.clone(),
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| a - b).collect(),
        }
    }
}

fn digits(mut i: usize, base: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for slot in d.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    d
}

fn tuple_at(group: &FiniteAbelianGroup, k: usize, i: usize) -> Vec<GroupElement> {
    digits(i, group.order_usize(), k)
        .into_iter()
        .map(|d| group.element_at(d))
        .collect()
}

/// `(δh)(g_1, ..., g_{k+1}) = h(g_2, ...) + Σ_u (-1)^u h(..., g_u g_{u+1}, ...)
/// + (-1)^{k+1} h(g_1, ..., g_k)` for a table `h` of degree `k`.
pub fn coboundary(table: &CochainTable, budget: &Budget) -> Result<CochainTable> {
    let group = &table.group;
    let k = table.degree;
    let ord = group.order_usize();
    let len = table_len(group, k + 1, budget)?;
    let mult = group.multiplication_table();
    let values = (0..len)
        .into_par_iter()
        .map(|i| {
            let d = digits(i, ord, k + 1);
            coboundary_at(table, &d, &mult)
        })
        .collect();
    Ok(CochainTable {
        group: group.clone(),
        degree: k + 1,
        values,
    })
}

fn coboundary_at(h: &CochainTable, d: &[usize], mult: &[usize]) -> Phase {
    let ord = h.group.order_usize();
    let k = h.degree;
    let idx = |v: &mut dyn Iterator<Item = usize>| v.fold(0usize, |acc, x| acc * ord + x);
    let mut total = h.values[idx(&mut d[1..].iter().copied())];
    for u in 1..=k {
        let merged = mult[d[u - 1] * ord + d[u]];
        let i = idx(&mut d[..u - 1].iter().copied().chain([merged]).chain(d[u + 1..].iter().copied()));
        if u % 2 == 1 {
            total -= h.values[i];
        } else {
            total += h.values[i];
        }
    }
    let last = h.values[idx(&mut d[..k].iter().copied())];
    if (k + 1) % 2 == 1 {
        total -= last;
    } else {
        total += last;
    }
    total
}

/// Normalized and killed by `δ`.
pub fn is_cocycle(table: &CochainTable, budget: &Budget) -> Result<bool> {
    if !table.is_normalized() {
        return Ok(false);
    }
    // check tuple by tuple so no second table is materialized
    let group = &table.group;
    let ord = group.order_usize();
    let k = table.degree;
    let len = group.order().pow(k as u32 + 1);
    let len = check("coboundary evaluations", &len, budget.max_phase_evals)? as usize;
    let mult = group.multiplication_table();
    Ok((0..len)
        .into_par_iter()
        .all(|i| coboundary_at(table, &digits(i, ord, k + 1), &mult).is_zero()))
}

/// Matrix of `δ: C^j -> C^{j+1}` on normalized integer cochains. Rows are
/// nondegenerate `(j+1)`-tuples, columns nondegenerate `j`-tuples, both in
/// mixed radix over the nonidentity elements.
pub fn coboundary_matrix(group: &FiniteAbelianGroup, j: usize, budget: &Budget) -> Result<IntegerMatrix> {
    let base = group.order_usize() - 1;
    let rows_big = BigUint::from(base).pow(j as u32 + 1);
    let cols_big = BigUint::from(base).pow(j as u32);
    check("coboundary matrix entries", &(&rows_big * &cols_big), budget.max_matrix_entries)?;
    let (rows, cols) = (base.pow(j as u32 + 1), base.pow(j as u32));
    let ord = group.order_usize();
    let mult = group.multiplication_table();
    let mut m = IntegerMatrix::zeros(rows, cols);
    // normalized column index of a tuple of element indices, None if degenerate
    let col = |t: &[usize]| -> Option<usize> {
        t.iter()
            .try_fold(0usize, |acc, &x| (x != 0).then(|| acc * base + (x - 1)))
    };
    for row in 0..rows {
        let d: Vec<usize> = digits(row, base, j + 1).into_iter().map(|x| x + 1).collect();
        if let Some(c) = col(&d[1..]) {
            m.add_to(row, c, 1);
        }
        for u in 1..=j {
            let mut t = d[..u - 1].to_vec();
            t.push(mult[d[u - 1] * ord + d[u]]);
            t.extend_from_slice(&d[u + 1..]);
            if let Some(c) = col(&t) {
                m.add_to(row, c, if u % 2 == 0 { 1 } else { -1 });
            }
        }
        if let Some(c) = col(&d[..j]) {
            m.add_to(row, c, if (j + 1) % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(m)
}

/// Whether a normalized cocycle lies in the image of `δ` on normalized
/// `(k-1)`-cochains. With `U·D·V = S` the Smith form of that coboundary map,
/// the table `t` is a coboundary iff `(U·t)_i = 0` in `Q/Z` for `i >= rank`.
pub fn is_coboundary(table: &CochainTable, budget: &Budget) -> Result<bool> {
    if !is_cocycle(table, budget)? {
        return Err(Error::NotACocycle);
    }
    let k = table.degree;
    if k == 0 {
        return Ok(table.is_zero());
    }
    let group = &table.group;
    let d = coboundary_matrix(group, k - 1, budget)?;
    let snf = smith_normal_form(&d);
    let rank = snf.rank();
    let base = group.order_usize() - 1;
    let ord = group.order_usize();
    // the table restricted to nondegenerate tuples, in row order of `d`
    let t: Vec<Phase> = (0..d.rows())
        .map(|row| {
            let i = digits(row, base, k).into_iter().fold(0usize, |acc, x| acc * ord + x + 1);
            table.values[i]
        })
        .collect();
    Ok((rank..d.rows()).all(|i| {
        snf.u
            .row(i)
            .iter()
            .zip(&t)
            .filter(|(c, _)| c != &&BigInt::from(0))
            .map(|(c, p)| p.scale_big(c))
            .sum::<Phase>()
            .is_zero()
    }))
}
