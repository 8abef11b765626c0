//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Everything downstream that needs ranks, kernels, solving or canonical
//! forms of abelian groups goes through the Smith normal form computed here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of `BigInt` entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> IMat {
        IMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IMat {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> IMat {
        let mut m = IMat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> IMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |r| r.len());
        IMat::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[BigInt]) {
        for i in 0..self.rows {
            self[(i, j)] = v[i].clone();
        }
    }

    pub fn transpose(&self) -> IMat {
        IMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IMat) -> IMat {
        assert_eq!(self.rows, other.rows);
        IMat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> IMat {
        IMat::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    let t = a[(k, j)].clone();
                    a[(k, j)] = a[(p, j)].clone();
                    a[(p, j)] = t;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = t / &prev;
                }
            }
            for i in k + 1..n {
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub fn rank(&self) -> usize {
        smith_diagonal(self).len()
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `D = P * M * Q` with `P`, `Q` unimodular.
pub struct Smith {
    pub d: IMat,
    pub p: IMat,
    pub q: IMat,
}

/// Full Smith normal form with transforms.
pub fn smith(m: &IMat) -> Smith {
    let mut d = m.clone();
    let mut p = IMat::identity(m.rows);
    let mut q = IMat::identity(m.cols);
    let (rows, cols) = (m.rows, m.cols);

    let mut t = 0usize;
    while t < rows && t < cols {
        // locate a pivot: nonzero entry of minimal absolute value in the
        // remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match &pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d[(i, j)].abs() < d[(*pi, *pj)].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut p, t, pi);
        swap_cols(&mut d, &mut q, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let f = floor_quot(&d[(i, t)], &d[(t, t)]);
                if !f.is_zero() {
                    row_axpy(&mut d, &mut p, i, t, &f);
                }
                if !d[(i, t)].is_zero() {
                    // remainder became the smaller pivot
                    swap_rows(&mut d, &mut p, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let f = floor_quot(&d[(t, j)], &d[(t, t)]);
                if !f.is_zero() {
                    col_axpy(&mut d, &mut q, j, t, &f);
                }
                if !d[(t, j)].is_zero() {
                    swap_cols(&mut d, &mut q, t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // ensure the pivot divides the rest of the block
        let mut again = false;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                    // fold row i into row t and restart elimination at t
                    let one = BigInt::one();
                    row_axpy_add(&mut d, &mut p, t, i, &one);
                    again = true;
                    break 'outer;
                }
            }
        }
        if again {
            continue;
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, &mut p, t);
        }
        t += 1;
    }
    Smith { d, p, q }
}

/// Nontrivial diagonal entries of the Smith normal form (positive, each
/// dividing the next).
pub fn smith_diagonal(m: &IMat) -> Vec<BigInt> {
    let s = smith(m);
    let mut out = Vec::new();
    for t in 0..s.d.rows.min(s.d.cols) {
        if s.d[(t, t)].is_zero() {
            break;
        }
        out.push(s.d[(t, t)].clone());
    }
    out
}

fn floor_quot(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient with remainder of minimal absolute value bias toward zero;
    // plain truncation suffices for the euclidean descent
    a / b
}

fn swap_rows(d: &mut IMat, p: &mut IMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let t = d[(a, j)].clone();
        d[(a, j)] = d[(b, j)].clone();
        d[(b, j)] = t;
    }
    for j in 0..p.cols {
        let t = p[(a, j)].clone();
        p[(a, j)] = p[(b, j)].clone();
        p[(b, j)] = t;
    }
}

fn swap_cols(d: &mut IMat, q: &mut IMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let t = d[(i, a)].clone();
        d[(i, a)] = d[(i, b)].clone();
        d[(i, b)] = t;
    }
    for i in 0..q.rows {
        let t = q[(i, a)].clone();
        q[(i, a)] = q[(i, b)].clone();
        q[(i, b)] = t;
    }
}

/// row_i -= f * row_t, mirrored in P.
fn row_axpy(d: &mut IMat, p: &mut IMat, i: usize, t: usize, f: &BigInt) {
    for j in 0..d.cols {
        let s = f * &d[(t, j)];
        d[(i, j)] -= s;
    }
    for j in 0..p.cols {
        let s = f * &p[(t, j)];
        p[(i, j)] -= s;
    }
}

/// row_t += f * row_i, mirrored in P.
fn row_axpy_add(d: &mut IMat, p: &mut IMat, t: usize, i: usize, f: &BigInt) {
    for j in 0..d.cols {
        let s = f * &d[(i, j)];
        d[(t, j)] += s;
    }
    for j in 0..p.cols {
        let s = f * &p[(i, j)];
        p[(t, j)] += s;
    }
}

/// col_j -= f * col_t, mirrored in Q.
fn col_axpy(d: &mut IMat, q: &mut IMat, j: usize, t: usize, f: &BigInt) {
    for i in 0..d.rows {
        let s = f * &d[(i, t)];
        d[(i, j)] -= s;
    }
    for i in 0..q.rows {
        let s = f * &q[(i, t)];
        q[(i, j)] -= s;
    }
}

fn negate_row(d: &mut IMat, p: &mut IMat, t: usize) {
    for j in 0..d.cols {
        let v = -d[(t, j)].clone();
        d[(t, j)] = v;
    }
    for j in 0..p.cols {
        let v = -p[(t, j)].clone();
        p[(t, j)] = v;
    }
}

/// Basis of the integer kernel `{x : Mx = 0}`, as matrix columns. Kernels of
/// integer matrices are saturated, so this is a lattice basis.
pub fn kernel_basis(m: &IMat) -> IMat {
    let s = smith(m);
    let r = (0..s.d.rows.min(s.d.cols))
        .take_while(|&t| !s.d[(t, t)].is_zero())
        .count();
    let free: Vec<usize> = (r..m.cols).collect();
    s.q.select_cols(&free)
}

/// Solves `Mx = b` over the integers; `None` when no integral solution exists.
pub fn solve(m: &IMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith(m);
    let pb = s.p.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols];
    let r = (0..s.d.rows.min(s.d.cols))
        .take_while(|&t| !s.d[(t, t)].is_zero())
        .count();
    for t in 0..r {
        let (q, rem) = pb[t].div_rem(&s.d[(t, t)]);
        if !rem.is_zero() {
            return None;
        }
        y[t] = q;
    }
    for (i, v) in pb.iter().enumerate() {
        if i >= r && !v.is_zero() {
            return None;
        }
    }
    Some(s.q.mul_vec(&y))
}

/// True when the column lattice of `lat` contains `v`.
pub fn lattice_contains(lat: &IMat, v: &[BigInt]) -> bool {
    solve(lat, v).is_some()
}

/// True when the column lattices agree.
pub fn lattice_eq(a: &IMat, b: &IMat) -> bool {
    (0..b.cols).all(|j| lattice_contains(a, &b.col(j)))
        && (0..a.cols).all(|j| lattice_contains(b, &a.col(j)))
}

/// A basis (independent columns) for the column lattice spanned by `m`.
pub fn column_basis(m: &IMat) -> IMat {
    // column-style Hermite reduction
    let mut a = m.clone();
    let rows = a.rows;
    let cols = a.cols;
    let mut pivot_col = 0usize;
    for r in 0..rows {
        if pivot_col >= cols {
            break;
        }
        loop {
            // find column (>= pivot_col) with nonzero entry in row r of
            // minimal absolute value
            let mut best: Option<usize> = None;
            for j in pivot_col..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) => {
                        if a[(r, j)].abs() < a[(r, b)].abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            if b != pivot_col {
                for i in 0..rows {
                    let t = a[(i, b)].clone();
                    a[(i, b)] = a[(i, pivot_col)].clone();
                    a[(i, pivot_col)] = t;
                }
            }
            let mut done = true;
            for j in pivot_col + 1..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let f = &a[(r, j)] / &a[(r, pivot_col)];
                if !f.is_zero() {
                    for i in 0..rows {
                        let s = &f * &a[(i, pivot_col)];
                        a[(i, j)] -= s;
                    }
                }
                if !a[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    let keep: Vec<usize> = (0..cols)
        .filter(|&j| (0..rows).any(|i| !a[(i, j)].is_zero()))
        .collect();
    a.select_cols(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> IMat {
        IMat::from_i64(rows)
    }

    #[test]
    fn smith_known_form() {
        // classical example with invariant factors 1, 3, 21
        let m = big(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let d = smith_diagonal(&m);
        assert_eq!(
            d,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
        // transforms really factor the matrix
        let s = smith(&m);
        assert_eq!(s.p.mul(&m).mul(&s.q), s.d);
        assert_eq!(s.p.det().abs(), BigInt::one());
        assert_eq!(s.q.det().abs(), BigInt::one());
    }

    #[test]
    fn smith_diag2() {
        let m = big(&[vec![2, 4], vec![-2, 6]]);
        assert_eq!(smith_diagonal(&m), vec![BigInt::from(2), BigInt::from(10)]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = big(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols, 2);
        for j in 0..k.cols {
            assert!(m.mul_vec(&k.col(j)).iter().all(|x| x.is_zero()));
        }
        let b = vec![BigInt::from(5), BigInt::from(10)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(solve(&m, &[BigInt::from(1), BigInt::from(1)]).is_none());
        // 2x = 1 has no integer solution
        let m2 = big(&[vec![2]]);
        assert!(solve(&m2, &[BigInt::from(1)]).is_none());
    }

    #[test]
    fn det_and_rank() {
        let m = big(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]);
        assert_eq!(m.det(), BigInt::from(5));
        assert_eq!(m.rank(), 3);
        let sing = big(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.det(), BigInt::zero());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn column_basis_spans() {
        let m = big(&[vec![2, 4, 0], vec![0, 0, 3], vec![1, 2, 0]]);
        let b = column_basis(&m);
        assert_eq!(b.cols, 2);
        assert!(lattice_eq(&b, &m));
    }
}
