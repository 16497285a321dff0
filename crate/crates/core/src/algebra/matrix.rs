use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense rectangular matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix rows");
                r.iter().cloned().map(Into::into).collect()
            })
            .collect();
        IntegerMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i][j] = v.into();
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i][j] += v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Whether all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.data[i][i].clone())
            .collect()
    }

    /// Fraction-free (Bareiss) determinant of a square matrix.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal, `s_i | s_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s.diagonal().into_iter().take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with smallest-absolute-value pivoting, exact arithmetic.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut work = SnfWork {
        a: m.data.clone(),
        rows: m.rows,
        cols: m.cols,
        u: Some(IntegerMatrix::identity(m.rows).data),
        v: Some(IntegerMatrix::identity(m.cols).data),
    };
    work.run();
    SmithForm {
        u: IntegerMatrix {
            rows: m.rows,
            cols: m.rows,
            data: work.u.unwrap(),
        },
        s: IntegerMatrix {
            rows: m.rows,
            cols: m.cols,
            data: work.a,
        },
        v: IntegerMatrix {
            rows: m.cols,
            cols: m.cols,
            data: work.v.unwrap(),
        },
    }
}

/// Nonzero invariant factors only, skipping the transforms.
pub fn smith_invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut work = SnfWork {
        a: m.data.clone(),
        rows: m.rows,
        cols: m.cols,
        u: None,
        v: None,
    };
    work.run();
    (0..m.rows.min(m.cols))
        .map(|i| work.a[i][i].clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

struct SnfWork {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in v.iter_mut() {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row_dst -= q * row_src
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        let (d, s) = two_rows(&mut self.a, dst, src);
        for (x, y) in d.iter_mut().zip(s.iter()) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
        if let Some(u) = &mut self.u {
            let (d, s) = two_rows(u, dst, src);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    /// col_dst -= q * col_src
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[src].is_zero() {
                let t = q * &row[src];
                row[dst] -= t;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[src].is_zero() {
                    let t = q * &row[src];
                    row[dst] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < self.a[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        for t in 0..self.rows.min(self.cols) {
            loop {
                let Some((pi, pj)) = self.smallest_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let pivot = self.a[t][t].clone();
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&pivot);
                    self.row_axpy(i, t, &q);
                    clean &= self.a[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&pivot);
                    self.col_axpy(j, t, &q);
                    clean &= self.a[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&pivot))
                });
                match offender {
                    // mixing the offending row in lets a smaller pivot appear
                    Some(i) => self.row_axpy(t, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn two_rows<T>(v: &mut [Vec<T>], dst: usize, src: usize) -> (&mut Vec<T>, &Vec<T>) {
    assert_ne!(dst, src);
    if dst < src {
        let (a, b) = v.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = v.split_at_mut(dst);
        (&mut b[0], &a[src])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(f.u.mul(m).mul(&f.v), f.s, "U·M·V != S for\n{m}");
        assert!(f.s.is_diagonal());
        assert!(f.u.is_unimodular());
        assert!(f.v.is_unimodular());
        let d = f.s.diagonal();
        assert!(d.iter().all(|x| !x.is_negative()));
        for w in d.windows(2) {
            assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        assert_eq!(smith_invariant_factors(m), f.invariant_factors());
        f
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rotation_is_unimodular() {
        let f = check(&IntegerMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]));
        assert_eq!(f.s.diagonal(), ints(&[1, 1]));
    }

    #[test]
    fn zero_matrix() {
        let m = IntegerMatrix::zeros(2, 3);
        let f = check(&m);
        assert!(f.s.is_zero());
        assert_eq!(f.u, IntegerMatrix::identity(2));
        assert_eq!(f.v, IntegerMatrix::identity(3));
    }

    #[test]
    fn already_diagonal() {
        let f = check(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(f.s.diagonal(), ints(&[2, 4]));
    }

    #[test]
    fn needs_divisibility_fix() {
        let f = check(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f.s.diagonal(), ints(&[1, 6]));
        let g = check(&IntegerMatrix::from_rows(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, -4, -16],
        ]));
        assert_eq!(g.s.diagonal(), ints(&[2, 6, 12]));
    }

    #[test]
    fn determinants() {
        let m = IntegerMatrix::from_rows(&[vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 5]]);
        assert_eq!(m.determinant(), BigInt::from(-9));
        assert_eq!(IntegerMatrix::identity(0).determinant(), BigInt::one());
    }

    proptest! {
        #[test]
        fn random_matrices(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-9i64..10, 16)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * cols..(i + 1) * cols].to_vec()).collect();
            let m = IntegerMatrix::from_rows(&data);
            let f = check(&m);
            if rows == cols {
                let prod: BigInt = f.s.diagonal().iter().product();
                prop_assert_eq!(prod, m.determinant().abs());
            }
        }
    }
}
